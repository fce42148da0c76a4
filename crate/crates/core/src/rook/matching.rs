use std::collections::VecDeque;

const FREE: usize = usize::MAX;

/// Maximum bipartite matching by Hopcroft-Karp.
///
/// `adj[u]` lists the right vertices adjacent to left vertex `u`. Augmenting
/// paths are explored in ascending vertex order, so the matching returned is
/// deterministic for a given adjacency.
pub(crate) struct HopcroftKarp<'a> {
    adj: &'a [Vec<usize>],
    pair_left: Vec<usize>,
    pair_right: Vec<usize>,
    dist: Vec<usize>,
}

impl<'a> HopcroftKarp<'a> {
    pub(crate) fn new(adj: &'a [Vec<usize>], right: usize) -> Self {
        HopcroftKarp {
            adj,
            pair_left: vec![FREE; adj.len()],
            pair_right: vec![FREE; right],
            dist: vec![0; adj.len()],
        }
    }

    /// Runs to completion and returns `pair_left`: the partner of each left vertex.
    pub(crate) fn solve(mut self) -> Vec<Option<usize>> {
        while self.bfs() {
            for u in 0..self.adj.len() {
                if self.pair_left[u] == FREE {
                    self.dfs(u);
                }
            }
        }
        self.pair_left.iter().map(|&v| (v != FREE).then_some(v)).collect()
    }

    fn bfs(&mut self) -> bool {
        let mut queue = VecDeque::new();
        for u in 0..self.adj.len() {
            if self.pair_left[u] == FREE {
                self.dist[u] = 0;
                queue.push_back(u);
            } else {
                self.dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                let w = self.pair_right[v];
                if w == FREE {
                    found = true;
                } else if self.dist[w] == usize::MAX {
                    self.dist[w] = self.dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        found
    }

    fn dfs(&mut self, u: usize) -> bool {
        for i in 0..self.adj[u].len() {
            let v = self.adj[u][i];
            let w = self.pair_right[v];
            if w == FREE || (self.dist[w] == self.dist[u] + 1 && self.dfs(w)) {
                self.pair_left[u] = v;
                self.pair_right[v] = u;
                return true;
            }
        }
        self.dist[u] = usize::MAX;
        false
    }
}
