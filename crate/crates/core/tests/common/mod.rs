//! Brute-force reference implementations over plain coordinate sets. Nothing
//! here calls into the library beyond constructing inputs.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

pub type Pt = (i32, i32);

pub struct Shape {
    pub cells: Vec<Pt>,
    set: HashSet<Pt>,
}

impl Shape {
    pub fn new(cells: impl IntoIterator<Item = Pt>) -> Self {
        let set: HashSet<Pt> = cells.into_iter().collect();
        let mut cells: Vec<Pt> = set.iter().copied().collect();
        cells.sort_unstable();
        Shape { cells, set }
    }

    pub fn has(&self, c: Pt) -> bool {
        self.set.contains(&c)
    }

    /// Walks the gap-free segment between two cells on a shared line.
    fn segment_full(&self, a: Pt, b: Pt) -> bool {
        if a.1 == b.1 {
            (a.0.min(b.0)..=a.0.max(b.0)).all(|x| self.has((x, a.1)))
        } else if a.0 == b.0 {
            (a.1.min(b.1)..=a.1.max(b.1)).all(|y| self.has((a.0, y)))
        } else {
            false
        }
    }

    pub fn attack(&self, a: Pt, b: Pt) -> bool {
        a != b && self.segment_full(a, b)
    }

    pub fn rect_inside(&self, a: Pt, b: Pt) -> bool {
        let (x0, x1) = (a.0.min(b.0), a.0.max(b.0));
        let (y0, y1) = (a.1.min(b.1), a.1.max(b.1));
        (x0..=x1).all(|x| (y0..=y1).all(|y| self.has((x, y))))
    }

    /// Every k-subset of non-attacking cells, each sorted.
    pub fn placements(&self, k: usize) -> Vec<Vec<Pt>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.extend(0, k, &mut cur, &mut out);
        out
    }

    fn extend(&self, start: usize, k: usize, cur: &mut Vec<Pt>, out: &mut Vec<Vec<Pt>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..self.cells.len() {
            let c = self.cells[i];
            if cur.iter().all(|&r| !self.attack(r, c)) {
                cur.push(c);
                self.extend(i + 1, k, cur, out);
                cur.pop();
            }
        }
    }

    pub fn rook_number(&self) -> usize {
        (0..=self.cells.len()).rev().find(|&k| !self.placements(k).is_empty()).unwrap_or(0)
    }

    pub fn switches(&self, f: &[Pt]) -> Vec<Vec<Pt>> {
        let mut out = Vec::new();
        for i in 0..f.len() {
            for j in i + 1..f.len() {
                let (a, b) = (f[i], f[j]);
                if a.0 == b.0 || a.1 == b.1 || !self.rect_inside(a, b) {
                    continue;
                }
                let mut g: Vec<Pt> = f.iter().copied().filter(|&c| c != a && c != b).collect();
                g.push((a.0, b.1));
                g.push((b.0, a.1));
                g.sort_unstable();
                out.push(g);
            }
        }
        out
    }

    /// Switch classes by breadth-first closure.
    pub fn classes(&self, k: usize) -> Vec<BTreeSet<Vec<Pt>>> {
        let mut seen: HashSet<Vec<Pt>> = HashSet::new();
        let mut classes = Vec::new();
        for f in self.placements(k) {
            if seen.contains(&f) {
                continue;
            }
            let mut class = BTreeSet::new();
            let mut queue = VecDeque::from([f.clone()]);
            seen.insert(f);
            while let Some(g) = queue.pop_front() {
                for h in self.switches(&g) {
                    if seen.insert(h.clone()) {
                        queue.push_back(h);
                    }
                }
                class.insert(g);
            }
            classes.push(class);
        }
        classes
    }

    pub fn polynomial(&self) -> Vec<u64> {
        (0..=self.rook_number()).map(|k| self.classes(k).len() as u64).collect()
    }

    /// Rectangles inside the shape not contained in a larger one.
    pub fn maximal_rectangles(&self) -> Vec<(Pt, Pt)> {
        let mut all = Vec::new();
        for &a in &self.cells {
            for &b in &self.cells {
                if a.0 <= b.0 && a.1 <= b.1 && self.rect_inside(a, b) {
                    all.push((a, b));
                }
            }
        }
        let within = |r: &(Pt, Pt), s: &(Pt, Pt)| s.0 .0 <= r.0 .0 && s.0 .1 <= r.0 .1 && r.1 .0 <= s.1 .0 && r.1 .1 <= s.1 .1;
        let mut max: Vec<(Pt, Pt)> = all.iter().filter(|r| !all.iter().any(|s| s != *r && within(r, s))).copied().collect();
        max.sort_unstable();
        max
    }
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Cells reachable from the first under the given steps.
pub fn connected(cells: &[Pt], steps: &[Pt]) -> bool {
    let set: HashSet<Pt> = cells.iter().copied().collect();
    let mut seen = HashSet::from([cells[0]]);
    let mut stack = vec![cells[0]];
    while let Some((x, y)) = stack.pop() {
        for &(dx, dy) in steps {
            let n = (x + dx, y + dy);
            if set.contains(&n) && seen.insert(n) {
                stack.push(n);
            }
        }
    }
    seen.len() == set.len()
}

/// Counts of free animals by exhaustive growth with a global canonical set.
pub fn free_counts(max: usize, steps: &[Pt]) -> Vec<usize> {
    let canon = |cells: &BTreeSet<Pt>| -> Vec<Pt> {
        let maps: [fn(Pt) -> Pt; 8] = [
            |(x, y)| (x, y),
            |(x, y)| (-x, y),
            |(x, y)| (x, -y),
            |(x, y)| (-x, -y),
            |(x, y)| (y, x),
            |(x, y)| (-y, x),
            |(x, y)| (y, -x),
            |(x, y)| (-y, -x),
        ];
        maps.iter()
            .map(|m| {
                let img: Vec<Pt> = cells.iter().map(|&c| m(c)).collect();
                let mx = img.iter().map(|c| c.0).min().unwrap();
                let my = img.iter().map(|c| c.1).min().unwrap();
                let mut v: Vec<Pt> = img.iter().map(|&(x, y)| (x - mx, y - my)).collect();
                v.sort_unstable();
                v
            })
            .min()
            .unwrap()
    };
    let mut level: HashMap<Vec<Pt>, ()> = HashMap::from([(vec![(0, 0)], ())]);
    let mut counts = vec![1];
    for _ in 1..max {
        let mut next = HashMap::new();
        for shape in level.keys() {
            let set: BTreeSet<Pt> = shape.iter().copied().collect();
            for &(x, y) in shape {
                for &(dx, dy) in steps {
                    let n = (x + dx, y + dy);
                    if set.contains(&n) {
                        continue;
                    }
                    let mut grown = set.clone();
                    grown.insert(n);
                    next.insert(canon(&grown), ());
                }
            }
        }
        counts.push(next.len());
        level = next;
    }
    counts
}

pub const EDGE: [Pt; 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];
pub const KING: [Pt; 8] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)];
