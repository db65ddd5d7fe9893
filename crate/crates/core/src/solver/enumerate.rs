//! Enumeration of independent sets of a given size.
//!
//! The vertices are covered by disjoint cliques ("classes"); an independent
//! set uses at most one vertex per class. The search repeatedly takes the
//! live class with the fewest remaining candidates and branches on each
//! candidate, plus one branch that leaves the class unused when enough
//! other classes remain.

use std::ops::ControlFlow;

use super::Deadline;
use crate::bitset::{ones, words_for};
use crate::dgraph::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchOutcome {
    /// Every set was visited.
    Completed,
    /// The visitor asked to stop.
    Stopped,
    /// The deadline passed first.
    TimedOut,
}

#[derive(Debug, Clone)]
pub struct EnumerateOptions {
    pub cap: usize,
    pub deadline: Deadline,
    /// Clique cover to drive the search; a greedy one is built if absent.
    pub partition: Option<Vec<Vec<usize>>>,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            cap: 1_000_000,
            deadline: Deadline::never(),
            partition: None,
        }
    }
}

/// Greedy cover of the vertices by disjoint cliques, lowest index first.
pub fn clique_partition(graph: &Graph) -> Vec<Vec<usize>> {
    let n = graph.vertex_count();
    let mut uncovered = vec![!0u64; words_for(n)];
    if !n.is_multiple_of(64) {
        if let Some(w) = uncovered.last_mut() {
            *w = (1u64 << (n % 64)) - 1;
        }
    }
    let mut classes = Vec::new();
    while let Some(v) = ones(&uncovered).next() {
        let mut class = vec![v];
        uncovered[v >> 6] &= !(1 << (v & 63));
        let mut cand: Vec<u64> = uncovered.iter().zip(graph.row(v)).map(|(a, b)| a & b).collect();
        while let Some(u) = ones(&cand).next() {
            class.push(u);
            uncovered[u >> 6] &= !(1 << (u & 63));
            for (c, r) in cand.iter_mut().zip(graph.row(u)) {
                *c &= r;
            }
        }
        classes.push(class);
    }
    classes
}

/// The classes are disjoint cliques covering every vertex.
pub fn is_clique_partition(graph: &Graph, classes: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; graph.vertex_count()];
    for class in classes {
        for &v in class {
            if v >= seen.len() || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        if !graph.is_clique(class) {
            return false;
        }
    }
    seen.into_iter().all(|s| s)
}

struct Walker<'a, F> {
    graph: &'a Graph,
    classes: &'a [Vec<usize>],
    deadline: &'a Deadline,
    visit: F,
    nodes: u64,
    timed_out: bool,
}

impl<F: FnMut(&[usize]) -> ControlFlow<()>> Walker<'_, F> {
    fn emit(&mut self, chosen: &[usize]) -> ControlFlow<()> {
        let mut set = chosen.to_vec();
        set.sort_unstable();
        (self.visit)(&set)
    }

    fn node(&mut self, cand: &[u64], chosen: &mut Vec<usize>, need: usize) -> ControlFlow<()> {
        if need == 0 {
            return self.emit(chosen);
        }
        self.nodes += 1;
        if self.nodes & 255 == 1 && self.deadline.expired() {
            self.timed_out = true;
            return ControlFlow::Break(());
        }
        let has = |v: usize| cand[v >> 6] >> (v & 63) & 1 == 1;
        let mut alive = 0;
        let mut pick: Option<(usize, usize)> = None;
        for (c, class) in self.classes.iter().enumerate() {
            let k = class.iter().filter(|&&v| has(v)).count();
            if k > 0 {
                alive += 1;
                if pick.is_none_or(|(_, best)| k < best) {
                    pick = Some((c, k));
                }
            }
        }
        if alive < need {
            return ControlFlow::Continue(());
        }
        let (c, _) = pick.expect("alive classes exist");
        let class = &self.classes[c];
        let mut without_class = cand.to_vec();
        for &v in class {
            without_class[v >> 6] &= !(1 << (v & 63));
        }
        for &v in class.iter().filter(|&&v| has(v)) {
            let next: Vec<u64> = without_class
                .iter()
                .zip(self.graph.row(v))
                .map(|(a, b)| a & !b)
                .collect();
            chosen.push(v);
            let flow = self.node(&next, chosen, need - 1);
            chosen.pop();
            flow?;
        }
        if alive > need {
            self.node(&without_class, chosen, need)?;
        }
        ControlFlow::Continue(())
    }
}

/// Calls `visit` with every independent set of exactly `size` vertices
/// (sorted), optionally only those containing `through`.
///
/// `classes` must be a clique partition of `graph`, see
/// [`is_clique_partition`].
pub fn visit_independent_sets<F>(
    graph: &Graph,
    size: usize,
    through: Option<usize>,
    classes: &[Vec<usize>],
    deadline: &Deadline,
    visit: F,
) -> SearchOutcome
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    debug_assert!(is_clique_partition(graph, classes));
    let n = graph.vertex_count();
    let mut cand = vec![!0u64; words_for(n)];
    if !n.is_multiple_of(64) {
        if let Some(w) = cand.last_mut() {
            *w = (1u64 << (n % 64)) - 1;
        }
    }
    let mut walker = Walker {
        graph,
        classes,
        deadline,
        visit,
        nodes: 0,
        timed_out: false,
    };
    let mut chosen = Vec::new();
    let mut need = size;
    if let Some(t) = through {
        if size == 0 || t >= n {
            return SearchOutcome::Completed;
        }
        for class in classes.iter().filter(|c| c.contains(&t)) {
            for &v in class {
                cand[v >> 6] &= !(1 << (v & 63));
            }
        }
        for (c, r) in cand.iter_mut().zip(graph.row(t)) {
            *c &= !r;
        }
        chosen.push(t);
        need -= 1;
    }
    match walker.node(&cand, &mut chosen, need) {
        ControlFlow::Continue(()) => SearchOutcome::Completed,
        ControlFlow::Break(()) if walker.timed_out => SearchOutcome::TimedOut,
        ControlFlow::Break(()) => SearchOutcome::Stopped,
    }
}

/// All independent sets of size `alpha`, each sorted, in lexicographic
/// order.
pub fn enumerate_max_independent_sets(
    graph: &Graph,
    alpha: usize,
    through: Option<usize>,
    options: &EnumerateOptions,
) -> Result<Vec<Vec<usize>>> {
    let greedy;
    let classes = match &options.partition {
        Some(p) => {
            if !is_clique_partition(graph, p) {
                return Err(Error::InvalidPartition("classes are not a clique partition".into()));
            }
            p
        }
        None => {
            greedy = clique_partition(graph);
            &greedy
        }
    };
    let mut out = Vec::new();
    let mut over = false;
    let outcome = visit_independent_sets(graph, alpha, through, classes, &options.deadline, |s| {
        if out.len() == options.cap {
            over = true;
            return ControlFlow::Break(());
        }
        out.push(s.to_vec());
        ControlFlow::Continue(())
    });
    if over {
        return Err(Error::EnumerationCapExceeded(options.cap));
    }
    if outcome == SearchOutcome::TimedOut {
        return Err(Error::BudgetExhausted);
    }
    out.sort();
    Ok(out)
}
