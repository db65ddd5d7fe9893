//! Intersecting sets larger than every point stabilizer, and certificates
//! recording them.

use crate::ekr::first_non_intersecting_pair;
use crate::error::{Error, Result};
use crate::group::{symmetric_group, BlockSystem, PermutationGroup, TupleAction};
use crate::perm::Permutation;
use crate::report::GroupInfo;

/// An intersecting set checked against the largest stabilizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefutationCertificate {
    pub group: GroupInfo,
    pub intersecting_set: Vec<Permutation>,
    pub set_size: usize,
    pub max_stabilizer_size: usize,
    /// The set is intersecting and larger than every stabilizer.
    pub verified: bool,
    pub failing_pair: Option<(Permutation, Permutation)>,
    pub notes: Vec<String>,
}

/// Elements of `group` that satisfy at least three of the four block
/// movements `source → target` (block indices into `blocks`). The result
/// is sorted by element index and must be intersecting.
pub fn block_pattern_witness(
    group: &PermutationGroup,
    blocks: &BlockSystem,
    pattern: &[(usize, usize); 4],
) -> Result<Vec<usize>> {
    if !blocks.is_invariant_under(group) {
        return Err(Error::InvalidBlockSystem);
    }
    let k = blocks.block_count();
    if let Some(&(s, t)) = pattern.iter().find(|&&(s, t)| s >= k || t >= k) {
        return Err(Error::InvalidParameter(format!(
            "pattern {} -> {} names a block outside 1..={k}",
            s + 1,
            t + 1
        )));
    }
    let set: Vec<usize> = (0..group.order())
        .filter(|&i| {
            let g = group.element(i);
            pattern.iter().filter(|&&(s, t)| blocks.image_block(g, s) == t).count() >= 3
        })
        .collect();
    let elements: Vec<Permutation> = set.iter().map(|&i| group.element(i).clone()).collect();
    if let Some((a, b)) = first_non_intersecting_pair(&elements) {
        return Err(Error::NotIntersecting(set[a], set[b]));
    }
    Ok(set)
}

/// The pattern from the classic 5-block example:
/// `B1→B1, B2→B2, B3→B3, B4→B5`.
pub const FIVE_BLOCK_PATTERN: [(usize, usize); 4] = [(0, 0), (1, 1), (2, 2), (3, 4)];

/// Outcome of the sanity checks applied to a group offered as M20.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub order: usize,
    pub transitive: bool,
    pub max_stabilizer: usize,
    pub block_system: Option<BlockSystem>,
}

impl Provenance {
    pub fn passed(&self) -> bool {
        self.order == 960 && self.transitive && self.max_stabilizer == 48 && self.block_system.is_some()
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.order != 960 {
            out.push(format!("order {} != 960", self.order));
        }
        if !self.transitive {
            out.push("not transitive".into());
        }
        if self.max_stabilizer != 48 {
            out.push(format!("max stabilizer {} != 48", self.max_stabilizer));
        }
        if self.block_system.is_none() {
            out.push("no system of 5 blocks of size 4".into());
        }
        out
    }
}

/// Order 960, transitive of degree 20, stabilizers of size 48, and a
/// system of 5 blocks of size 4 (returned when found).
pub fn m20_provenance(group: &PermutationGroup) -> Provenance {
    let transitive = group.degree() == 20 && group.is_transitive();
    let block_system = if transitive {
        group
            .block_systems()
            .ok()
            .and_then(|s| s.into_iter().find(|b| b.block_count() == 5 && b.block_size() == 4))
    } else {
        None
    };
    Provenance {
        order: group.order(),
        transitive,
        max_stabilizer: group.max_stabilizer_size(),
        block_system,
    }
}

/// Permutations of `Sym(2t)` fixing at least `t+1` of the points
/// `0..t+2`, in canonical order, checked pairwise `t`-intersecting.
pub fn t_intersecting_family(t: usize) -> Result<Vec<Permutation>> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!("t = {t}; need t >= 2")));
    }
    let n = 2 * t;
    let head = t + 2;
    let mut family = Vec::new();
    // `moved` is the one head point allowed to move, or none.
    for moved in std::iter::once(None).chain((0..head).map(Some)) {
        let free: Vec<usize> = moved.into_iter().chain(head..n).collect();
        for arrangement in permutations(&free) {
            let mut images: Vec<usize> = (0..n).collect();
            for (&from, &to) in free.iter().zip(&arrangement) {
                images[from] = to;
            }
            if moved.is_some_and(|p| images[p] == p) {
                continue;
            }
            family.push(Permutation::from_images(images)?);
        }
    }
    family.sort();
    for (i, a) in family.iter().enumerate() {
        for b in &family[i + 1..] {
            if a.agreement_count(b) < t {
                return Err(Error::Inconsistent("family is not t-intersecting".into()));
            }
        }
    }
    Ok(family)
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// `(t-2)!·(t²-3)`, the size of [`t_intersecting_family`].
pub fn t_family_size(t: usize) -> usize {
    (1..=t.saturating_sub(2)).product::<usize>() * (t * t - 3)
}

/// Elements of `Sym(2t)` fixing at least `t+1` of the first `t+2` points,
/// counted by scanning the whole group.
pub fn t_family_scan_count(t: usize) -> Result<usize> {
    let s = symmetric_group(2 * t)?;
    Ok(s.elements()
        .iter()
        .filter(|g| (0..t + 2).filter(|&x| g.apply(x) == x).count() > t)
        .count())
}

/// Certificate for an element subset of `group` (indices).
pub fn refute_ekr(group: &PermutationGroup, subset: &[usize]) -> RefutationCertificate {
    let set: Vec<Permutation> = subset.iter().map(|&i| group.element(i).clone()).collect();
    let max_stab = group.max_stabilizer_size();
    let failing = first_non_intersecting_pair(&set);
    let mut notes = Vec::new();
    if failing.is_none() && set.len() <= max_stab {
        notes.push(format!("intersecting, but {} <= {max_stab}: no refutation", set.len()));
    }
    RefutationCertificate {
        group: GroupInfo::of(group),
        set_size: set.len(),
        max_stabilizer_size: max_stab,
        verified: failing.is_none() && set.len() > max_stab,
        failing_pair: failing.map(|(a, b)| (set[a].clone(), set[b].clone())),
        intersecting_set: set,
        notes,
    }
}

/// Certificate in the action on ordered tuples. The set is given in the
/// base group and checked in the induced action; `intersecting_set` keeps
/// the base-group elements.
pub fn refute_ekr_tuples(action: &TupleAction, base_set: &[Permutation]) -> RefutationCertificate {
    let base = action.base();
    let mut notes = vec![format!(
        "elements listed in the action on {} points; checked in the induced action on {}-tuples",
        base.degree(),
        action.tuple_length()
    )];
    let outside = base_set.iter().find(|g| !base.contains(g));
    let induced: Vec<Permutation> = if outside.is_none() {
        base_set.iter().map(|g| action.induce(g)).collect()
    } else {
        notes.push("set contains a non-element of the group".into());
        Vec::new()
    };
    let failing = if outside.is_none() {
        first_non_intersecting_pair(&induced)
    } else {
        None
    };
    // t-intersection in the base action must coincide with intersection in
    // the induced one.
    let t = action.tuple_length();
    let consistent = induced.len() == base_set.len()
        && (0..base_set.len()).all(|i| {
            (i + 1..base_set.len())
                .all(|j| (base_set[i].agreement_count(&base_set[j]) >= t) == induced[i].intersects(&induced[j]))
        });
    if !consistent && outside.is_none() {
        notes.push("induced intersection disagrees with t-intersection".into());
    }
    let distinct = {
        let mut s = base_set.to_vec();
        s.sort();
        s.dedup();
        s.len() == base_set.len()
    };
    let max_stab = action.max_stabilizer_size();
    let generators = base.generators().iter().map(|g| action.induce(g).to_string()).collect();
    RefutationCertificate {
        group: GroupInfo {
            degree: action.degree(),
            order: action.order(),
            generators,
        },
        intersecting_set: base_set.to_vec(),
        set_size: base_set.len(),
        max_stabilizer_size: max_stab,
        verified: outside.is_none() && failing.is_none() && consistent && distinct && base_set.len() > max_stab,
        failing_pair: failing.map(|(a, b)| (base_set[a].clone(), base_set[b].clone())),
        notes,
    }
}

/// The t-intersecting family of `Sym(2t)` refuted in the action on
/// ordered `t`-tuples. For `t <= 4` the family size is also recounted by
/// scanning `Sym(2t)`.
pub fn t_intersecting_certificate(t: usize) -> Result<RefutationCertificate> {
    let family = t_intersecting_family(t)?;
    let action = TupleAction::new(symmetric_group(2 * t)?, t)?;
    let mut cert = refute_ekr_tuples(&action, &family);
    let displayed = (t * t + t - 1) * (1..=t - 2).product::<usize>();
    cert.notes.push(format!(
        "constructed family has {} = (t-2)!(t^2-3) elements",
        family.len()
    ));
    if t <= 4 {
        let scan = t_family_scan_count(t)?;
        cert.notes.push(format!(
            "exhaustive scan of Sym({}) counts {scan}; the scan is authoritative",
            2 * t
        ));
        if scan != family.len() {
            cert.verified = false;
            cert.notes.push("scan and construction disagree".into());
        }
    }
    if displayed != family.len() {
        cert.notes.push(format!(
            "the closed form (t^2+t-1)(t-2)! gives {displayed} at t = {t}, which does not match the count"
        ));
    }
    Ok(cert)
}

/// α of the internal direct product of two groups with
/// (vertex-transitive) derangement graphs: the larger of `α₁|G₂|` and
/// `α₂|G₁|`.
pub fn internal_product_alpha(alpha1: u128, order1: u128, alpha2: u128, order2: u128) -> u128 {
    (alpha1 * order2).max(alpha2 * order1)
}

/// Formula-level check of EKR for the internal product of a group
/// (`order1`, stabilizers of size `stab1`, `alpha1`) with `Sym(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairCheck {
    pub n: usize,
    pub alpha: u128,
    pub max_stabilizer: u128,
    pub ekr: bool,
    /// `alpha1` was only a lower bound, so the verdict is conditional on it
    /// being the true value.
    pub conditional: bool,
}

pub fn internal_repair_check(alpha1: u128, order1: u128, stab1: u128, n: usize, alpha1_exact: bool) -> RepairCheck {
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let (order2, stab2) = (fact(n), fact(n.saturating_sub(1)));
    let alpha = internal_product_alpha(alpha1, order1, stab2, order2);
    let max_stabilizer = (stab1 * order2).max(stab2 * order1);
    RepairCheck {
        n,
        alpha,
        max_stabilizer,
        ekr: alpha == max_stabilizer,
        conditional: !alpha1_exact,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::dihedral_group;

    #[test]
    fn family_sizes_match_scan_and_formula() {
        for t in 2..=4 {
            let fam = t_intersecting_family(t).unwrap();
            assert_eq!(fam.len(), t_family_scan_count(t).unwrap());
            assert_eq!(fam.len(), t_family_size(t));
            for a in &fam {
                assert!((0..t + 2).filter(|&x| a.apply(x) == x).count() > t);
                for b in &fam {
                    assert!((a * &b.inverse()).fixed_point_count() >= t);
                }
            }
        }
        assert_eq!(t_intersecting_family(2).unwrap().len(), 1);
        assert_eq!(t_intersecting_family(4).unwrap().len(), 26);
        assert!(t_intersecting_family(1).is_err());
    }

    #[test]
    fn dihedral_block_pattern_is_no_refutation() {
        let d4 = dihedral_group(4).unwrap();
        let blocks = BlockSystem::new(4, vec![vec![0, 2], vec![1, 3]]).unwrap();
        let set = block_pattern_witness(&d4, &blocks, &[(0, 0), (1, 1), (0, 1), (1, 0)]).unwrap();
        assert!(set.is_empty());
        assert!(!refute_ekr(&d4, &set).verified);
        assert!(block_pattern_witness(&d4, &blocks, &[(0, 0), (1, 1), (0, 0), (1, 5)]).is_err());
        let bad = BlockSystem::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(
            block_pattern_witness(&d4, &bad, &FIVE_BLOCK_PATTERN),
            Err(Error::InvalidBlockSystem)
        );
    }

    #[test]
    fn stabilizer_is_not_a_refutation() {
        let s3 = symmetric_group(3).unwrap();
        let cert = refute_ekr(&s3, &s3.stabilizer(0).unwrap());
        assert!(!cert.verified);
        assert_eq!((cert.set_size, cert.max_stabilizer_size), (2, 2));
        assert!(cert.failing_pair.is_none());
        let cert = refute_ekr(&s3, &[0, 3, 4]);
        assert!(cert.failing_pair.is_some());
    }

    #[test]
    fn small_tuple_certificate() {
        // t = 2: the family is {id}; nothing to refute
        let cert = t_intersecting_certificate(2).unwrap();
        assert!(!cert.verified);
        assert_eq!((cert.set_size, cert.max_stabilizer_size, cert.group.degree), (1, 2, 12));
    }

    #[test]
    fn repair_formula() {
        let small = internal_repair_check(64, 960, 48, 10, false);
        assert_eq!(small.alpha, 960 * 362_880);
        assert!(small.ekr && small.conditional);
        assert!(internal_repair_check(64, 960, 48, 15, false).ekr);
        assert!(!internal_repair_check(64, 960, 48, 16, false).ekr);
        assert!(!internal_repair_check(64, 960, 48, 21, true).ekr);
    }
}
