//! EKR and strict-EKR verdicts for a concrete permutation group.
//!
//! A subset of `G` is intersecting exactly when it is independent in the
//! derangement graph, so `α(Γ_G)` is the largest intersecting set. Every
//! point stabilizer is intersecting, giving `α ≥ max |G_x|`; the graph is
//! vertex-transitive, giving `ω·α ≤ |G|`. The search below uses both bounds
//! before falling back on branch and bound.

use std::collections::{HashSet, VecDeque};
use std::ops::ControlFlow;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::dgraph::{derangement_graph_with_cap, Graph, DEFAULT_VERTEX_CAP};
use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::perm::Permutation;
use crate::solver::{
    clique_partition, max_clique_with, visit_independent_sets, CliqueOptions, CliqueResult, Deadline, SearchOutcome,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EkrOptions {
    pub time_budget: Duration,
    /// Largest number of identity-containing maximum independent sets the
    /// strict check will inspect.
    pub enum_cap: usize,
    pub vertex_cap: usize,
    /// Limit on the maxima enumerated when checking that maximum cliques
    /// and maximum independent sets meet in the tight case.
    pub intersection_cap: usize,
}

impl Default for EkrOptions {
    fn default() -> Self {
        EkrOptions {
            time_budget: Duration::from_secs(60),
            enum_cap: 1_000_000,
            vertex_cap: DEFAULT_VERTEX_CAP,
            intersection_cap: 20_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Exact,
    LowerBound,
    NotComputed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EkrVerdict {
    Yes,
    No,
    /// α is not known exactly but an intersecting set larger than every
    /// stabilizer was found.
    RefutedByWitness,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StrictVerdict {
    Yes,
    No,
    NotApplicable,
    Unknown,
}

/// A best-known value with the set achieving it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bound {
    pub value: usize,
    pub status: Status,
    pub witness: Vec<usize>,
}

impl Bound {
    fn from_search(r: CliqueResult) -> Self {
        Bound {
            value: r.size,
            status: if r.exact { Status::Exact } else { Status::LowerBound },
            witness: r.witness,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCoclique {
    pub product: usize,
    pub group_order: usize,
    /// `ω·α = |G|` with both values exact.
    pub tight: bool,
    /// In the tight case: whether every maximum independent set was seen to
    /// meet every maximum clique. `None` when not applicable or skipped.
    pub intersection_verified: Option<bool>,
}

/// How far the strict check got.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StrictProgress {
    /// Identity-containing maximum independent sets inspected.
    pub sets_checked: usize,
    /// Number of those that are point stabilizers.
    pub stabilizers_seen: usize,
    /// True when the enumeration ran to completion.
    pub complete: bool,
    /// First identity-containing maximum set that is not a stabilizer.
    pub counterexample: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EkrReport {
    pub transitive: bool,
    pub alpha: Bound,
    pub omega: Bound,
    pub max_stabilizer: usize,
    pub ekr: EkrVerdict,
    pub strict_ekr: StrictVerdict,
    pub strict_progress: StrictProgress,
    pub clique_coclique: CliqueCoclique,
    /// An intersecting set larger than every stabilizer, when one is known.
    pub refuting_set: Option<Vec<usize>>,
    pub notes: Vec<String>,
}

fn indices_of(group: &PermutationGroup, subset: &[Permutation]) -> Result<Vec<usize>> {
    subset
        .iter()
        .map(|p| group.index_of(p).ok_or(Error::NotAnElement))
        .collect()
}

/// Every pair of elements agrees on some point.
pub fn is_intersecting_set(group: &PermutationGroup, subset: &[Permutation]) -> Result<bool> {
    indices_of(group, subset)?;
    Ok(subset
        .iter()
        .enumerate()
        .all(|(i, a)| subset[i + 1..].iter().all(|b| a.intersects(b))))
}

/// First pair (by position) of elements that agree nowhere.
pub fn first_non_intersecting_pair(subset: &[Permutation]) -> Option<(usize, usize)> {
    (0..subset.len())
        .flat_map(|i| (i + 1..subset.len()).map(move |j| (i, j)))
        .find(|&(i, j)| !subset[i].intersects(&subset[j]))
}

/// Largest subgroup found greedily in which every non-identity element is
/// a derangement, as sorted indices. Its right cosets are cliques of the
/// derangement graph.
pub fn semiregular_subgroup(group: &PermutationGroup) -> Vec<usize> {
    let n = group.degree();
    let semiregular = |g: &Permutation| {
        let cycles = g.all_cycles();
        !cycles.is_empty() && cycles.iter().all(|c| c.len() == cycles[0].len() && c.len() > 1)
    };
    let mut candidates: Vec<usize> = (1..group.order()).filter(|&i| semiregular(group.element(i))).collect();
    candidates.sort_by_key(|&i| (std::cmp::Reverse(group.element(i).order()), i));

    let mut current: Vec<usize> = vec![0];
    let mut gens: Vec<usize> = Vec::new();
    for &c in &candidates {
        if current.len() == n {
            break;
        }
        if current.contains(&c) {
            continue;
        }
        gens.push(c);
        match closure_if_semiregular(group, &gens, n) {
            Some(set) => current = set,
            None => {
                gens.pop();
            }
        }
    }
    current.sort_unstable();
    current
}

fn closure_if_semiregular(group: &PermutationGroup, gens: &[usize], limit: usize) -> Option<Vec<usize>> {
    let mut seen: HashSet<usize> = HashSet::from([0]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = group
                .index_of(&(group.element(g) * group.element(x)))
                .expect("closed group");
            if seen.insert(y) {
                if seen.len() > limit || !group.element(y).is_derangement() {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    Some(seen.into_iter().collect())
}

/// Right cosets `K·g` of `subgroup`, each sorted, ordered by smallest
/// member.
pub fn right_cosets(group: &PermutationGroup, subgroup: &[usize]) -> Vec<Vec<usize>> {
    let mut covered = vec![false; group.order()];
    let mut cosets = Vec::new();
    for g in 0..group.order() {
        if covered[g] {
            continue;
        }
        let mut coset: Vec<usize> = subgroup
            .iter()
            .map(|&k| {
                group
                    .index_of(&(group.element(k) * group.element(g)))
                    .expect("closed group")
            })
            .collect();
        coset.sort_unstable();
        for &c in &coset {
            covered[c] = true;
        }
        cosets.push(coset);
    }
    cosets
}

/// A clique partition of the derangement graph: cosets of a semiregular
/// subgroup or a greedy cover, whichever has fewer classes.
pub fn derangement_clique_partition(group: &PermutationGroup, graph: &Graph) -> Vec<Vec<usize>> {
    let cosets = right_cosets(group, &semiregular_subgroup(group));
    let greedy = clique_partition(graph);
    if greedy.len() < cosets.len() {
        greedy
    } else {
        cosets
    }
}

/// A set of `degree` elements, pairwise non-intersecting; `None` if none was
/// found before the deadline (which does not mean none exists).
pub fn find_sharply_transitive_clique(group: &PermutationGroup, deadline: &Deadline) -> Result<Option<Vec<usize>>> {
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let n = group.degree();
    if let Some(i) = (0..group.order()).find(|&i| group.element(i).cycle_type() == [n]) {
        let mut clique: Vec<usize> = (0..n as u64)
            .map(|k| group.index_of(&group.element(i).pow(k)).expect("closed group"))
            .collect();
        clique.sort_unstable();
        return Ok(Some(clique));
    }
    let k = semiregular_subgroup(group);
    if k.len() == n {
        return Ok(Some(k));
    }
    let graph = derangement_graph_with_cap(group, DEFAULT_VERTEX_CAP)?;
    let r = max_clique_with(
        &graph,
        &CliqueOptions {
            deadline: *deadline,
            initial: Some(k),
            upper_bound: Some(n),
        },
    );
    Ok((r.size == n).then_some(r.witness))
}

struct Bounds {
    alpha: Bound,
    omega: Bound,
    notes: Vec<String>,
}

fn bounds(
    group: &PermutationGroup,
    graph: &Graph,
    max_stab: usize,
    stabilizer: Vec<usize>,
    deadline: &Deadline,
    budget: Duration,
) -> Bounds {
    let n = group.order();
    let mut notes = Vec::new();
    let seed = semiregular_subgroup(group);
    let omega_cap = n / max_stab;
    let omega = max_clique_with(
        graph,
        &CliqueOptions {
            deadline: deadline.earliest(Deadline::after(budget / 4)),
            initial: Some(seed),
            upper_bound: Some(omega_cap),
        },
    );
    if omega.size * max_stab == n {
        notes.push(format!(
            "alpha exact by the clique-coclique bound: a clique of size {} and a stabilizer of size {max_stab} fill |G| = {n}",
            omega.size
        ));
        return Bounds {
            alpha: Bound {
                value: max_stab,
                status: Status::Exact,
                witness: stabilizer,
            },
            omega: Bound {
                value: omega.size,
                status: Status::Exact,
                witness: omega.witness,
            },
            notes,
        };
    }

    let complement = graph.complement();
    let alpha = Bound::from_search(max_clique_with(
        &complement,
        &CliqueOptions {
            deadline: *deadline,
            initial: Some(stabilizer),
            upper_bound: Some(n / omega.size.max(1)),
        },
    ));
    let mut omega = Bound::from_search(omega);
    if !omega.is_exact() && alpha.is_exact() {
        let r = max_clique_with(
            graph,
            &CliqueOptions {
                deadline: *deadline,
                initial: Some(omega.witness.clone()),
                upper_bound: Some(n / alpha.value),
            },
        );
        omega = Bound::from_search(r);
    }
    if omega.is_exact() && alpha.is_exact() {
        notes.push("alpha and omega exact by branch and bound".into());
    } else if !alpha.is_exact() {
        notes.push(format!("time budget exhausted; alpha >= {}", alpha.value));
    }
    Bounds { alpha, omega, notes }
}

/// Best-known `α` and `ω` of the derangement graph, in that order, within
/// the time budget.
pub fn compute_bounds(group: &PermutationGroup, options: &EkrOptions) -> Result<(Bound, Bound)> {
    let deadline = Deadline::after(options.time_budget);
    let graph = derangement_graph_with_cap(group, options.vertex_cap)?;
    let max_stab = group.max_stabilizer_size();
    let stabilizer = group.stabilizer(group.max_stabilizer_point())?;
    let b = bounds(group, &graph, max_stab, stabilizer, &deadline, options.time_budget);
    Ok((b.alpha, b.omega))
}

/// Clique–coclique data for `group` alone.
pub fn clique_coclique_check(group: &PermutationGroup, options: &EkrOptions) -> Result<CliqueCoclique> {
    Ok(check_ekr(
        group,
        &EkrOptions {
            enum_cap: 0,
            ..options.clone()
        },
    )?
    .clique_coclique)
}

fn verify_tight_intersection(
    graph: &Graph,
    independent_classes: &[Vec<usize>],
    alpha: usize,
    omega: usize,
    cap: usize,
    deadline: &Deadline,
) -> Option<bool> {
    // A disjoint pair (S, C) translates to one with the identity in S, so
    // only identity-containing independent sets are needed.
    let mut sets = Vec::new();
    let outcome = visit_independent_sets(graph, alpha, Some(0), independent_classes, deadline, |s| {
        if sets.len() == cap {
            return ControlFlow::Break(());
        }
        sets.push(crate::bitset::BitSet::from_indices(
            graph.vertex_count(),
            s.iter().copied(),
        ));
        ControlFlow::Continue(())
    });
    if outcome != SearchOutcome::Completed {
        return None;
    }
    let complement = graph.complement();
    let clique_classes = clique_partition(&complement);
    let mut ok = true;
    let mut seen = 0;
    let outcome = visit_independent_sets(&complement, omega, None, &clique_classes, deadline, |c| {
        seen += 1;
        if seen > cap {
            return ControlFlow::Break(());
        }
        if !sets.iter().all(|s| c.iter().any(|&v| s.contains(v))) {
            ok = false;
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    match outcome {
        SearchOutcome::Completed => Some(ok),
        SearchOutcome::Stopped if !ok => Some(false),
        _ => None,
    }
}

/// Decides EKR and strict EKR for `group` within the options' budgets.
pub fn check_ekr(group: &PermutationGroup, options: &EkrOptions) -> Result<EkrReport> {
    let deadline = Deadline::after(options.time_budget);
    let graph = derangement_graph_with_cap(group, options.vertex_cap)?;
    let n = group.order();
    let sizes = group.stabilizer_sizes();
    let max_stab = group.max_stabilizer_size();
    let stabilizer = group.stabilizer(group.max_stabilizer_point())?;
    let Bounds {
        alpha,
        omega,
        mut notes,
    } = bounds(group, &graph, max_stab, stabilizer, &deadline, options.time_budget);

    if omega.value * alpha.value > n {
        return Err(Error::Inconsistent(format!(
            "clique {} times independent set {} exceeds |G| = {n}",
            omega.value, alpha.value
        )));
    }

    let ekr = match (alpha.is_exact(), alpha.value > max_stab) {
        (true, false) => EkrVerdict::Yes,
        (true, true) => EkrVerdict::No,
        (false, true) => EkrVerdict::RefutedByWitness,
        (false, false) => EkrVerdict::Unknown,
    };
    let refuting_set = (alpha.value > max_stab).then(|| alpha.witness.clone());

    let classes = derangement_clique_partition(group, &graph);
    let mut progress = StrictProgress::default();
    let strict_ekr = match ekr {
        EkrVerdict::No | EkrVerdict::RefutedByWitness => StrictVerdict::NotApplicable,
        EkrVerdict::Unknown => StrictVerdict::Unknown,
        EkrVerdict::Yes => {
            let stabilizers: HashSet<Vec<usize>> = (0..group.degree())
                .filter(|&x| sizes[x] == max_stab)
                .map(|x| group.stabilizer(x).expect("point in range"))
                .collect();
            let mut capped = false;
            let outcome = visit_independent_sets(&graph, alpha.value, Some(0), &classes, &deadline, |s| {
                if progress.sets_checked == options.enum_cap {
                    capped = true;
                    return ControlFlow::Break(());
                }
                progress.sets_checked += 1;
                if stabilizers.contains(s) {
                    progress.stabilizers_seen += 1;
                    ControlFlow::Continue(())
                } else {
                    progress.counterexample = Some(s.to_vec());
                    ControlFlow::Break(())
                }
            });
            progress.complete = outcome == SearchOutcome::Completed;
            if progress.counterexample.is_some() {
                StrictVerdict::No
            } else if progress.complete {
                notes.push(format!(
                    "strict: all {} identity-containing maximum intersecting sets are point stabilizers",
                    progress.sets_checked
                ));
                StrictVerdict::Yes
            } else {
                notes.push(format!(
                    "strict: partial, {} identity-containing maximum sets checked ({}), all point stabilizers",
                    progress.sets_checked,
                    if capped { "enumeration cap" } else { "time budget" }
                ));
                StrictVerdict::Unknown
            }
        }
    };

    let product = omega.value * alpha.value;
    let tight = alpha.is_exact() && omega.is_exact() && product == n;
    let intersection_verified = if tight {
        let v = verify_tight_intersection(
            &graph,
            &classes,
            alpha.value,
            omega.value,
            options.intersection_cap,
            &deadline,
        );
        if v.is_none() {
            notes.push("tight clique-coclique case: intersection check skipped (too many maxima)".into());
        }
        v
    } else {
        None
    };
    if intersection_verified == Some(false) {
        return Err(Error::Inconsistent(
            "a maximum clique misses a maximum independent set in the tight case".into(),
        ));
    }

    Ok(EkrReport {
        transitive: group.is_transitive(),
        alpha,
        omega,
        max_stabilizer: max_stab,
        ekr,
        strict_ekr,
        strict_progress: progress,
        clique_coclique: CliqueCoclique {
            product,
            group_order: n,
            tight,
            intersection_verified,
        },
        refuting_set,
        notes,
    })
}
