//! Redelmeier's algorithm over a half-plane lattice.
//!
//! Every connected set of `n` lattice cells whose lowest-then-leftmost cell is
//! the origin is produced exactly once. The lattice is `x in [-n, n]`,
//! `y in [-1, n]`; the border and the cells preceding the origin are blocked
//! up front. Each fixed animal (shape up to translation) therefore appears
//! once, for any neighbourhood.

#[derive(Debug, Clone)]
pub(crate) struct Redelmeier {
    n: usize,
    width: usize,
    offsets: Vec<isize>,
    queue: Vec<u32>,
    blocked: Vec<bool>,
    /// `(next candidate index in queue, queue length to restore on exit)` per level.
    stack: Vec<(usize, usize)>,
    path: Vec<u32>,
    /// The enumerator stops once the stack shrinks to this length.
    floor: usize,
}

impl Redelmeier {
    /// `neighbours` are the `(dx, dy)` steps defining adjacency.
    pub(crate) fn new(n: usize, neighbours: &[(i32, i32)]) -> Self {
        assert!(n >= 1);
        let width = 2 * n + 1;
        let height = n + 2;
        let ni = n as i32;
        let mut blocked = vec![false; width * height];
        for row in 0..height {
            for col in 0..width {
                let (x, y) = (col as i32 - ni, row as i32 - 1);
                if y < 0 || y == ni || x.abs() == ni || (y == 0 && x < 0) {
                    blocked[row * width + col] = true;
                }
            }
        }
        let offsets = neighbours
            .iter()
            .map(|&(dx, dy)| dy as isize * width as isize + dx as isize)
            .collect();
        let origin = (width + n) as u32;
        blocked[origin as usize] = true;
        Redelmeier {
            n,
            width,
            offsets,
            queue: vec![origin],
            blocked,
            stack: vec![(0, 0)],
            path: Vec::with_capacity(n),
            floor: 0,
        }
    }

    /// Maps a lattice index to coordinates; the origin is `(0, 0)`.
    pub(crate) fn decoder(&self) -> impl Fn(u32) -> (i32, i32) {
        let (n, width) = (self.n as i32, self.width);
        move |idx| {
            let idx = idx as usize;
            ((idx % width) as i32 - n, (idx / width) as i32 - 1)
        }
    }

    fn descend(&mut self, u: u32) {
        for t in 0..self.offsets.len() {
            let v = (u as isize + self.offsets[t]) as usize;
            if !std::mem::replace(&mut self.blocked[v], true) {
                self.queue.push(v as u32);
            }
        }
    }

    fn exit_level(&mut self, restore: usize) {
        for &u in &self.queue[restore..] {
            self.blocked[u as usize] = false;
        }
        self.queue.truncate(restore);
        if !self.stack.is_empty() {
            self.path.pop();
        }
    }

    /// Next animal of size `n`, as lattice indices in insertion order.
    pub(crate) fn next_animal(&mut self) -> Option<&[u32]> {
        while self.stack.len() > self.floor {
            let (i, restore) = self.stack.pop().expect("non-empty stack");
            let len = self.queue.len();
            if i < len {
                let u = self.queue[i];
                self.path.push(u);
                self.stack.push((i + 1, restore));
                if self.path.len() < self.n {
                    self.descend(u);
                    self.stack.push((i + 1, len));
                } else {
                    self.stack.push((usize::MAX, len));
                    return Some(&self.path);
                }
            } else {
                self.exit_level(restore);
            }
        }
        None
    }

    /// Splits the search tree into independent subtrees rooted at depth
    /// `depth`. Animals smaller than `depth` are not covered, so callers only
    /// split when `n > depth`.
    pub(crate) fn split(mut self, depth: usize) -> Vec<Redelmeier> {
        assert!(depth >= 1 && depth < self.n);
        let mut out = Vec::new();
        while self.stack.len() > self.floor {
            let (i, restore) = self.stack.pop().expect("non-empty stack");
            let len = self.queue.len();
            if i < len {
                let u = self.queue[i];
                self.path.push(u);
                self.stack.push((i + 1, restore));
                self.descend(u);
                self.stack.push((i + 1, len));
                if self.path.len() == depth {
                    let mut sub = self.clone();
                    sub.floor = sub.stack.len() - 1;
                    out.push(sub);
                    self.stack.pop();
                    self.exit_level(len);
                }
            } else {
                self.exit_level(restore);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EDGE: [(i32, i32); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];
    const KING: [(i32, i32); 8] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)];

    fn count(n: usize, nb: &[(i32, i32)]) -> usize {
        let mut r = Redelmeier::new(n, nb);
        let mut c = 0;
        while r.next_animal().is_some() {
            c += 1;
        }
        c
    }

    #[test]
    fn fixed_polyominoes() {
        // OEIS A001168.
        let counts: Vec<usize> = (1..=8).map(|n| count(n, &EDGE)).collect();
        assert_eq!(counts, vec![1, 2, 6, 19, 63, 216, 760, 2725]);
    }

    #[test]
    fn fixed_polyplets() {
        // OEIS A006770.
        let counts: Vec<usize> = (1..=5).map(|n| count(n, &KING)).collect();
        assert_eq!(counts, vec![1, 4, 20, 110, 638]);
    }

    #[test]
    fn split_partitions_the_tree() {
        for n in 3..=7 {
            let subs = Redelmeier::new(n, &EDGE).split(2);
            let total: usize = subs
                .into_iter()
                .map(|mut s| {
                    let mut c = 0;
                    while s.next_animal().is_some() {
                        c += 1;
                    }
                    c
                })
                .sum();
            assert_eq!(total, count(n, &EDGE));
        }
    }
}
