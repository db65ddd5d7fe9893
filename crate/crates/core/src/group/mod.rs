//! Finitely generated permutation groups, fully enumerated.
//!
//! Groups at the scale handled here (up to a few hundred thousand
//! elements) are small enough that every element is stored. Elements are
//! kept sorted by image sequence, so the identity always has index 0 and
//! element indices are stable across runs.

mod blocks;
mod construct;
mod tuples;

pub use blocks::BlockSystem;
pub use construct::{
    cyclic_group, dihedral_group, embed_external, embed_internal, external_coords, external_direct_product,
    external_point, internal_direct_product, symmetric_group, wreath_element, wreath_product, young_subgroup,
};
pub use tuples::{induced_tuple_action, TupleAction};

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default hard cap on the number of enumerated elements.
pub const DEFAULT_ELEMENT_CAP: usize = 200_000;

#[derive(Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl std::fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermutationGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Result of testing a transitive group against the Frobenius definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusInfo {
    pub is_frobenius: bool,
    /// Derangements plus the identity, as element indices.
    pub kernel: Option<Vec<usize>>,
    pub complement_order: Option<usize>,
}

impl PermutationGroup {
    pub fn trivial(degree: usize) -> Result<Self> {
        Self::generate(degree, Vec::new())
    }

    pub fn generate(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::generate_with_cap(degree, generators, DEFAULT_ELEMENT_CAP)
    }

    /// Breadth-first closure of `generators` under left multiplication.
    pub fn generate_with_cap(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        let identity = Permutation::identity(degree)?;
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(identity.clone());
        let mut frontier = vec![identity];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for g in &generators {
                    let y = g.compose_unchecked(x);
                    if !seen.contains(&y) {
                        if seen.len() >= cap {
                            return Err(Error::ElementCapExceeded(cap));
                        }
                        seen.insert(y.clone());
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        Ok(Self::from_closed_set(degree, generators, seen.into_iter().collect()))
    }

    /// Caller guarantees `elements` is exactly the group generated by
    /// `generators`, without duplicates.
    pub(crate) fn from_closed_set(degree: usize, generators: Vec<Permutation>, mut elements: Vec<Permutation>) -> Self {
        elements.sort_unstable();
        let index = elements.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        PermutationGroup {
            degree,
            generators,
            elements,
            index,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements in canonical (image-lexicographic) order.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// Index of the identity; always 0 under the canonical order.
    pub fn identity_index(&self) -> usize {
        0
    }

    /// Same degree and same element set.
    pub fn same_elements(&self, other: &PermutationGroup) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }

    fn check_point(&self, x: usize) -> Result<()> {
        if x >= self.degree {
            Err(Error::PointOutOfRange {
                point: x,
                degree: self.degree,
            })
        } else {
            Ok(())
        }
    }

    /// Orbit of `x`, sorted.
    pub fn orbit(&self, x: usize) -> Result<Vec<usize>> {
        self.check_point(x)?;
        let mut seen = vec![false; self.degree];
        seen[x] = true;
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            for g in &self.generators {
                let z = g.apply(y);
                if !seen[z] {
                    seen[z] = true;
                    stack.push(z);
                }
            }
        }
        Ok((0..self.degree).filter(|&y| seen[y]).collect())
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut covered = vec![false; self.degree];
        let mut orbits = Vec::new();
        for x in 0..self.degree {
            if !covered[x] {
                let o = self.orbit(x).expect("point in range");
                for &y in &o {
                    covered[y] = true;
                }
                orbits.push(o);
            }
        }
        orbits
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).map(|o| o.len() == self.degree).unwrap_or(false)
    }

    /// Indices of the elements fixing `x`.
    pub fn stabilizer(&self, x: usize) -> Result<Vec<usize>> {
        self.check_point(x)?;
        Ok(self
            .elements
            .iter()
            .enumerate()
            .filter(|(_, g)| g.apply(x) == x)
            .map(|(i, _)| i)
            .collect())
    }

    /// Size of each point stabilizer, indexed by point.
    pub fn stabilizer_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.degree];
        for g in &self.elements {
            for (x, s) in sizes.iter_mut().enumerate() {
                if g.apply(x) == x {
                    *s += 1;
                }
            }
        }
        sizes
    }

    pub fn max_stabilizer_size(&self) -> usize {
        self.stabilizer_sizes().into_iter().max().unwrap_or(1)
    }

    /// Smallest point whose stabilizer has maximum size.
    pub fn max_stabilizer_point(&self) -> usize {
        let sizes = self.stabilizer_sizes();
        let max = sizes.iter().copied().max().unwrap_or(1);
        sizes.iter().position(|&s| s == max).unwrap_or(0)
    }

    /// Indices of the fixed-point-free elements.
    pub fn derangements(&self) -> Vec<usize> {
        self.elements
            .iter()
            .enumerate()
            .filter(|(_, g)| g.is_derangement())
            .map(|(i, _)| i)
            .collect()
    }

    /// Whether the element subset is closed under products and inverses
    /// and contains the identity.
    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        let set: HashSet<usize> = subset.iter().copied().collect();
        set.contains(&0)
            && subset.iter().all(|&a| {
                self.index_of(&self.elements[a].inverse())
                    .is_some_and(|i| set.contains(&i))
                    && subset.iter().all(|&b| {
                        self.index_of(&(&self.elements[a] * &self.elements[b]))
                            .is_some_and(|i| set.contains(&i))
                    })
            })
    }

    /// All distinct nontrivial block systems obtained as the finest
    /// invariant partition joining point 0 with some other point. Every
    /// minimal block system appears. Empty when the group is primitive.
    pub fn block_systems(&self) -> Result<Vec<BlockSystem>> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        let mut found: Vec<BlockSystem> = Vec::new();
        for y in 1..self.degree {
            let system = blocks::finest_joining(self, 0, y);
            if system.block_count() > 1 && !found.contains(&system) {
                found.push(system);
            }
        }
        found.sort_by(|a, b| {
            a.block_size()
                .cmp(&b.block_size())
                .then_with(|| a.blocks().cmp(b.blocks()))
        });
        Ok(found)
    }

    /// Tests the Frobenius definition: transitive, no non-identity element
    /// fixes two points, and some non-identity element fixes a point.
    pub fn classify_frobenius(&self) -> Result<FrobeniusInfo> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        let mut some_fixes_one = false;
        for g in &self.elements[1..] {
            match g.fixed_point_count() {
                0 => {}
                1 => some_fixes_one = true,
                _ => {
                    return Ok(FrobeniusInfo {
                        is_frobenius: false,
                        kernel: None,
                        complement_order: None,
                    })
                }
            }
        }
        if !some_fixes_one {
            return Ok(FrobeniusInfo {
                is_frobenius: false,
                kernel: None,
                complement_order: None,
            });
        }
        let mut kernel = vec![0];
        kernel.extend(self.derangements());
        debug_assert!(kernel.len() == self.degree && self.is_subgroup(&kernel));
        Ok(FrobeniusInfo {
            is_frobenius: true,
            kernel: Some(kernel),
            complement_order: Some(self.max_stabilizer_size()),
        })
    }
}
