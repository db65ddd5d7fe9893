//! Exact maximum clique by bitset branch and bound with a greedy
//! colouring bound (the BBMC scheme).

use super::Deadline;
use crate::bitset::words_for;
use crate::dgraph::Graph;

/// Search controls for [`max_clique_with`].
#[derive(Debug, Clone, Default)]
pub struct CliqueOptions {
    pub deadline: Deadline,
    /// A clique already known; the search only looks for larger ones.
    pub initial: Option<Vec<usize>>,
    /// A proven upper bound on ω. The search stops as soon as it is met.
    pub upper_bound: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    pub size: usize,
    /// Sorted vertex list of the best clique found.
    pub witness: Vec<usize>,
    /// False when the deadline cut the search short; `size` is then only a
    /// lower bound.
    pub exact: bool,
}

struct Search<'a> {
    words: usize,
    adj: &'a [u64],
    best: Vec<usize>,
    target: usize,
    deadline: &'a Deadline,
    nodes: u64,
    aborted: bool,
}

impl Search<'_> {
    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    fn finished(&self) -> bool {
        self.aborted || self.best.len() >= self.target
    }

    fn colour(&self, p: &[u64], verts: &mut Vec<usize>, colours: &mut Vec<usize>) {
        let mut uncoloured = p.to_vec();
        let mut q = vec![0u64; self.words];
        let mut k = 0;
        while uncoloured.iter().any(|&w| w != 0) {
            k += 1;
            q.copy_from_slice(&uncoloured);
            let mut w = 0;
            while w < self.words {
                if q[w] == 0 {
                    w += 1;
                    continue;
                }
                let v = w * 64 + q[w].trailing_zeros() as usize;
                uncoloured[w] &= !(1 << (v & 63));
                q[w] &= !(1 << (v & 63));
                for (qw, &r) in q.iter_mut().zip(self.row(v)).skip(w) {
                    *qw &= !r;
                }
                verts.push(v);
                colours.push(k);
            }
        }
    }

    fn expand(&mut self, clique: &mut Vec<usize>, mut p: Vec<u64>) {
        self.nodes += 1;
        if self.nodes & 1023 == 1 && self.deadline.expired() {
            self.aborted = true;
        }
        if self.finished() {
            return;
        }
        let mut verts = Vec::new();
        let mut colours = Vec::new();
        self.colour(&p, &mut verts, &mut colours);
        for i in (0..verts.len()).rev() {
            if clique.len() + colours[i] <= self.best.len() || self.finished() {
                return;
            }
            let v = verts[i];
            clique.push(v);
            let next: Vec<u64> = p.iter().zip(self.row(v)).map(|(a, b)| a & b).collect();
            if next.iter().all(|&w| w == 0) {
                if clique.len() > self.best.len() {
                    self.best = clique.clone();
                }
            } else {
                self.expand(clique, next);
            }
            clique.pop();
            p[v >> 6] &= !(1 << (v & 63));
        }
    }
}

pub fn max_clique(graph: &Graph) -> CliqueResult {
    max_clique_with(graph, &CliqueOptions::default())
}

pub fn max_clique_with(graph: &Graph, options: &CliqueOptions) -> CliqueResult {
    let n = graph.vertex_count();
    let mut best: Vec<usize> = options.initial.clone().unwrap_or_default();
    debug_assert!(graph.is_clique(&best));
    if n == 0 {
        return CliqueResult {
            size: 0,
            witness: best,
            exact: true,
        };
    }

    // Renumber by non-increasing degree; the colouring then branches on
    // low-degree vertices first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let words = words_for(n);
    let mut adj = vec![0u64; words * n];
    for (i, &v) in order.iter().enumerate() {
        for u in graph.neighbors(v) {
            let j = position[u];
            adj[i * words + (j >> 6)] |= 1 << (j & 63);
        }
    }

    let target = options.upper_bound.unwrap_or(n).min(n);
    let mut search = Search {
        words,
        adj: &adj,
        best: best.iter().map(|&v| position[v]).collect(),
        target,
        deadline: &options.deadline,
        nodes: 0,
        aborted: false,
    };
    if search.best.is_empty() {
        search.best.push(0);
    }
    let mut all = vec![!0u64; words];
    if !n.is_multiple_of(64) {
        all[words - 1] = (1u64 << (n % 64)) - 1;
    }
    search.expand(&mut Vec::new(), all);

    let exact = !search.aborted;
    best = search.best.iter().map(|&i| order[i]).collect();
    best.sort_unstable();
    assert!(graph.is_clique(&best), "clique search returned a non-clique");
    CliqueResult {
        size: best.len(),
        witness: best,
        exact,
    }
}

pub fn max_independent_set(graph: &Graph) -> CliqueResult {
    max_clique(&graph.complement())
}

pub fn max_independent_set_with(graph: &Graph, options: &CliqueOptions) -> CliqueResult {
    max_clique_with(&graph.complement(), options)
}
