//! Simple undirected graphs with dense adjacency bitrows, the derangement
//! graph of a permutation group, graph products and spectra.

mod products;
mod spectrum;

pub use products::{
    direct_product, lexicographic_product, product_vertex, strong_product, verify_product_identity,
    ProductIdentityCheck,
};
pub use spectrum::{eigenvalues, spectrum, Spectrum, SpectrumEntry, SpectrumOptions};

use std::fmt::Write as _;

use crate::bitset::{ones, words_for, BitSet, Ones};
use crate::error::{Error, Result};
use crate::group::PermutationGroup;

/// Largest vertex count accepted when building a dense adjacency matrix.
pub const DEFAULT_VERTEX_CAP: usize = 100_000;

/// Undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.n)
            .field("edges", &self.edge_count())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let stride = words_for(n);
        Graph {
            n,
            stride,
            rows: vec![0; stride * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::PointOutOfRange { point: x, degree: n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Adds the edge `{u, v}`; loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v {
            return;
        }
        self.rows[u * self.stride + (v >> 6)] |= 1 << (v & 63);
        self.rows[v * self.stride + (u >> 6)] |= 1 << (u & 63);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.stride + (v >> 6)] >> (v & 63) & 1 == 1
    }

    /// Adjacency bitrow of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    pub fn neighbors(&self, v: usize) -> Ones<'_> {
        ones(self.row(v))
    }

    pub fn neighbor_set(&self, v: usize) -> BitSet {
        BitSet::from_words(self.row(v), self.n)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Common degree when the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        let full = BitSet::full(self.n);
        for v in 0..self.n {
            let dst = &mut g.rows[v * self.stride..(v + 1) * self.stride];
            for ((d, f), r) in dst.iter_mut().zip(full.words()).zip(self.row(v)) {
                *d = f & !r;
            }
            dst[v >> 6] &= !(1 << (v & 63));
        }
        g
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(k, &u)| vertices[k + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(k, &u)| vertices[k + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = BitSet::new(self.n);
        let mut components = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen.contains(v) {
                        seen.insert(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    /// `Some((count, size))` when the graph is `count` disjoint copies of
    /// `K_size`; `None` when some component is not complete or the
    /// components differ in size.
    pub fn is_disjoint_union_of_cliques(&self) -> Option<(usize, usize)> {
        let comps = self.connected_components();
        let size = comps.first().map_or(0, Vec::len);
        comps
            .iter()
            .all(|c| c.len() == size && c.iter().all(|&v| self.degree(v) == size - 1))
            .then_some((comps.len(), size))
    }

    /// Edge-list dump: one `u v` line per edge, 0-based, `u < v`, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

/// Cayley graph of `group` whose connection set is its derangements:
/// `σ ~ π` iff `σ π⁻¹` has no fixed point. Vertices follow the group's
/// canonical element order.
pub fn derangement_graph(group: &PermutationGroup) -> Result<Graph> {
    derangement_graph_with_cap(group, DEFAULT_VERTEX_CAP)
}

pub fn derangement_graph_with_cap(group: &PermutationGroup, cap: usize) -> Result<Graph> {
    let n = group.order();
    if n > cap {
        return Err(Error::VertexCapExceeded { vertices: n, cap });
    }
    let derangements: Vec<_> = group.derangements().into_iter().map(|i| group.element(i)).collect();
    let mut g = Graph::empty(n);
    for (i, sigma) in group.elements().iter().enumerate() {
        for d in &derangements {
            let j = group
                .index_of(&(*d * sigma))
                .expect("group is closed under multiplication");
            g.rows[i * g.stride + (j >> 6)] |= 1 << (j & 63);
        }
    }
    Ok(g)
}
