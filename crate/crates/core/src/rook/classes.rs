use std::collections::HashMap;

use super::{config_indices, configs, switch_partner, Configs, RookConfig};
use crate::dsu::Dsu;
use crate::error::Result;
use crate::geometry::CellCollection;

/// The switch-equivalence classes of all `k`-rook configurations of a collection.
///
/// Configurations are stored as sorted 16-bit cell indices in one flat arena;
/// an index table maps each of them to a dense id, and a union-find over those
/// ids merges every pair related by a single switch.
#[derive(Debug, Clone)]
pub struct SwitchClasses {
    k: usize,
    arena: Vec<u16>,
    ids: HashMap<Box<[u16]>, u32>,
    labels: Vec<u32>,
    count: usize,
}

/// Number of switch-equivalence classes of `k`-rook configurations.
pub fn class_count(p: &CellCollection, k: usize) -> Result<usize> {
    Ok(switch_classes(p, k)?.count())
}

pub fn switch_classes(p: &CellCollection, k: usize) -> Result<SwitchClasses> {
    let mut it = configs(p, k)?;
    Ok(SwitchClasses::build(p, k, &mut it))
}

impl SwitchClasses {
    fn build(p: &CellCollection, k: usize, it: &mut Configs<'_>) -> Self {
        let mut arena = Vec::new();
        let mut ids = HashMap::new();
        let mut n = 0u32;
        while let Some(idx) = it.next_indices() {
            arena.extend_from_slice(idx);
            ids.insert(Box::<[u16]>::from(idx), n);
            n += 1;
        }

        let cells = p.cells();
        let mut dsu = Dsu::new(n as usize);
        let mut scratch: Vec<u16> = Vec::with_capacity(k);
        for id in 0..n as usize {
            let conf = &arena[id * k..(id + 1) * k];
            for i in 0..k {
                for j in i + 1..k {
                    let (a, b) = (cells[conf[i] as usize], cells[conf[j] as usize]);
                    let Some((a2, b2)) = switch_partner(p, a, b) else { continue };
                    scratch.clear();
                    scratch.extend(conf.iter().enumerate().filter(|&(t, _)| t != i && t != j).map(|(_, &c)| c));
                    scratch.push(p.index_of(a2).expect("inner rectangle corner") as u16);
                    scratch.push(p.index_of(b2).expect("inner rectangle corner") as u16);
                    scratch.sort_unstable();
                    let other = ids[scratch.as_slice()];
                    dsu.union(id, other as usize);
                }
            }
        }

        let count = dsu.components();
        let mut dense = HashMap::new();
        let labels = (0..n as usize)
            .map(|id| {
                let root = dsu.find(id);
                let next = dense.len() as u32;
                *dense.entry(root).or_insert(next)
            })
            .collect();
        SwitchClasses { k, arena, ids, labels, count }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of classes.
    pub fn count(&self) -> usize {
        self.count
    }

    /// Number of configurations.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Class label of `f` in `0..count()`, numbered by first appearance in
    /// lexicographic order. `None` if `f` is not a valid `k`-configuration.
    pub fn class_of(&self, p: &CellCollection, f: &RookConfig) -> Option<usize> {
        if f.len() != self.k {
            return None;
        }
        let mut idx: Vec<u16> = config_indices(p, f).ok()?.into_iter().map(|i| i as u16).collect();
        idx.sort_unstable();
        self.ids.get(idx.as_slice()).map(|&id| self.labels[id as usize] as usize)
    }

    /// The lexicographically first configuration of each class.
    pub fn representatives(&self, p: &CellCollection) -> Vec<RookConfig> {
        let mut reps = vec![None; self.count];
        for (id, &label) in self.labels.iter().enumerate() {
            if reps[label as usize].is_none() {
                reps[label as usize] = Some(self.config(p, id));
            }
        }
        reps.into_iter().map(|r| r.expect("every class has a member")).collect()
    }

    /// All members of the class with the given label.
    pub fn members(&self, p: &CellCollection, label: usize) -> Vec<RookConfig> {
        (0..self.len())
            .filter(|&id| self.labels[id] as usize == label)
            .map(|id| self.config(p, id))
            .collect()
    }

    fn config(&self, p: &CellCollection, id: usize) -> RookConfig {
        self.arena[id * self.k..(id + 1) * self.k]
            .iter()
            .map(|&i| p.cells()[i as usize])
            .collect()
    }
}
