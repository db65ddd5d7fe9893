//! The action of a group on ordered `t`-tuples of distinct points.
//!
//! `TupleAction` keeps only the base group and a table of tuples; an
//! element's induced permutation is built on demand, so groups whose
//! induced degree is in the thousands stay cheap.

use std::collections::HashMap;

use super::PermutationGroup;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Induced groups with more stored points than this are refused by
/// [`TupleAction::to_group`].
pub const MATERIALIZE_LIMIT: usize = 1 << 24;

#[derive(Debug, Clone)]
pub struct TupleAction {
    base: PermutationGroup,
    t: usize,
    tuples: Vec<Vec<u16>>,
    rank: HashMap<u64, usize>,
}

fn key(tuple: impl IntoIterator<Item = usize>, n: usize) -> u64 {
    tuple.into_iter().fold(0u64, |acc, x| acc * n as u64 + x as u64)
}

impl TupleAction {
    pub fn new(base: PermutationGroup, t: usize) -> Result<Self> {
        let n = base.degree();
        if t == 0 || t > n {
            return Err(Error::InvalidParameter(format!("tuple length {t} outside 1..={n}")));
        }
        let count = (n - t + 1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k));
        match count {
            Some(c) if c <= u16::MAX as usize && (n as f64).powi(t as i32) < 1.8e19 => {}
            _ => return Err(Error::DegreeTooLarge(count.unwrap_or(usize::MAX))),
        }
        let mut tuples = Vec::new();
        let mut current = Vec::with_capacity(t);
        let mut used = vec![false; n];
        fn extend(n: usize, t: usize, cur: &mut Vec<u16>, used: &mut [bool], out: &mut Vec<Vec<u16>>) {
            if cur.len() == t {
                out.push(cur.clone());
                return;
            }
            for x in 0..n {
                if !used[x] {
                    used[x] = true;
                    cur.push(x as u16);
                    extend(n, t, cur, used, out);
                    cur.pop();
                    used[x] = false;
                }
            }
        }
        extend(n, t, &mut current, &mut used, &mut tuples);
        let rank = tuples
            .iter()
            .enumerate()
            .map(|(i, tup)| (key(tup.iter().map(|&x| x as usize), n), i))
            .collect();
        Ok(TupleAction { base, t, tuples, rank })
    }

    pub fn base(&self) -> &PermutationGroup {
        &self.base
    }

    pub fn tuple_length(&self) -> usize {
        self.t
    }

    /// Number of tuple-points, `n·(n-1)⋯(n-t+1)`.
    pub fn degree(&self) -> usize {
        self.tuples.len()
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    /// Tuple with lexicographic rank `r` (0-based points).
    pub fn tuple(&self, r: usize) -> &[u16] {
        &self.tuples[r]
    }

    pub fn rank(&self, tuple: &[usize]) -> Option<usize> {
        if tuple.len() != self.t || tuple.iter().any(|&x| x >= self.base.degree()) {
            return None;
        }
        self.rank.get(&key(tuple.iter().copied(), self.base.degree())).copied()
    }

    /// Permutation of tuple-points induced by `g`.
    pub fn induce(&self, g: &Permutation) -> Permutation {
        let n = self.base.degree();
        let images = self
            .tuples
            .iter()
            .map(|tup| {
                let k = key(tup.iter().map(|&x| g.apply(x as usize)), n);
                self.rank[&k] as u16
            })
            .collect();
        Permutation::from_raw(images)
    }

    /// Size of the stabilizer of every tuple-point (they are the pointwise
    /// stabilizers of the underlying point sets, so the ordering within a
    /// tuple does not matter).
    pub fn stabilizer_sizes(&self) -> Vec<usize> {
        let n = self.base.degree();
        if n <= 20 {
            // count elements by fixed-point mask, then sum over supersets
            let mut by_mask: HashMap<u32, usize> = HashMap::new();
            for g in self.base.elements() {
                let mask = (0..n).filter(|&x| g.apply(x) == x).fold(0u32, |m, x| m | 1 << x);
                *by_mask.entry(mask).or_default() += 1;
            }
            self.tuples
                .iter()
                .map(|tup| {
                    let need = tup.iter().fold(0u32, |m, &x| m | 1 << x);
                    by_mask
                        .iter()
                        .filter(|(&mask, _)| mask & need == need)
                        .map(|(_, &c)| c)
                        .sum()
                })
                .collect()
        } else {
            self.tuples
                .iter()
                .map(|tup| {
                    self.base
                        .elements()
                        .iter()
                        .filter(|g| tup.iter().all(|&x| g.apply(x as usize) == x as usize))
                        .count()
                })
                .collect()
        }
    }

    pub fn max_stabilizer_size(&self) -> usize {
        self.stabilizer_sizes().into_iter().max().unwrap_or(1)
    }

    /// Materialises the induced permutation group.
    pub fn to_group(&self) -> Result<PermutationGroup> {
        if self.degree().saturating_mul(self.order()) > MATERIALIZE_LIMIT {
            return Err(Error::InvalidParameter(format!(
                "induced group would store {} × {} points; use TupleAction lazily",
                self.order(),
                self.degree()
            )));
        }
        let gens = self.base.generators().iter().map(|g| self.induce(g)).collect();
        let elements = self.base.elements().iter().map(|g| self.induce(g)).collect();
        Ok(PermutationGroup::from_closed_set(self.degree(), gens, elements))
    }
}

/// The group acting on injective `t`-tuples, fully materialised.
pub fn induced_tuple_action(group: &PermutationGroup, t: usize) -> Result<PermutationGroup> {
    TupleAction::new(group.clone(), t)?.to_group()
}
