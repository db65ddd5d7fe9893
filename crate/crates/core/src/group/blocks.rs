use super::PermutationGroup;
use crate::error::{Error, Result};

/// A partition of the points into blocks of equal size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSystem {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl BlockSystem {
    /// Validates and normalises a partition of `0..degree`: each block is
    /// sorted and blocks are ordered by their smallest point.
    pub fn new(degree: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort();
        let size = blocks.first().map_or(0, Vec::len);
        let mut block_of = vec![usize::MAX; degree];
        for (k, b) in blocks.iter().enumerate() {
            if b.len() != size || size == 0 {
                return Err(Error::InvalidParameter(
                    "blocks must be nonempty and of equal size".into(),
                ));
            }
            for &x in b {
                if x >= degree {
                    return Err(Error::PointOutOfRange { point: x, degree });
                }
                if block_of[x] != usize::MAX {
                    return Err(Error::InvalidParameter(format!("point {} in two blocks", x + 1)));
                }
                block_of[x] = k;
            }
        }
        if block_of.contains(&usize::MAX) {
            return Err(Error::InvalidParameter("blocks do not cover every point".into()));
        }
        Ok(BlockSystem { blocks, block_of })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_size(&self) -> usize {
        self.blocks.first().map_or(0, Vec::len)
    }

    /// Every element maps every block onto a block.
    pub fn is_invariant_under(&self, group: &PermutationGroup) -> bool {
        self.block_of.len() == group.degree()
            && group.generators().iter().all(|g| {
                self.blocks.iter().all(|b| {
                    let target = self.block_of[g.apply(b[0])];
                    b.iter().all(|&x| self.block_of[g.apply(x)] == target)
                })
            })
    }

    /// Image block index of block `b` under `g`; meaningful only for an
    /// invariant system.
    pub fn image_block(&self, g: &crate::perm::Permutation, b: usize) -> usize {
        self.block_of[g.apply(self.blocks[b][0])]
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Finest invariant partition in which `x` and `y` share a block.
pub(super) fn finest_joining(group: &PermutationGroup, x: usize, y: usize) -> BlockSystem {
    let n = group.degree();
    let mut uf = UnionFind {
        parent: (0..n).collect(),
    };
    uf.union(x, y);
    let mut pending = vec![(x, y)];
    while let Some((a, b)) = pending.pop() {
        for g in group.generators() {
            let (ga, gb) = (g.apply(a), g.apply(b));
            if uf.union(ga, gb) {
                pending.push((ga, gb));
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); n];
    for p in 0..n {
        let r = uf.find(p);
        classes[r].push(p);
    }
    let blocks = classes.into_iter().filter(|c| !c.is_empty()).collect();
    BlockSystem::new(n, blocks).expect("invariant partition of a transitive group has equal blocks")
}
