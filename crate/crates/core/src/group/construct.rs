//! Group families and product constructions.
//!
//! Point encodings are part of the public contract:
//! - external product: the tuple `(x₁, …, x_k)` is the mixed-radix number
//!   with `x₁` most significant;
//! - internal product: factor `i` acts on the window of points starting at
//!   the sum of the preceding degrees;
//! - wreath product `G ≀ H` with `G` on `m` points: `(x, j) ↦ j·m + x`.

use super::PermutationGroup;
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub fn symmetric_group(n: usize) -> Result<PermutationGroup> {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_images((0..n).map(|i| match i {
            0 => 1,
            1 => 0,
            _ => i,
        }))?);
    }
    if n >= 3 {
        gens.push(Permutation::from_images((0..n).map(|i| (i + 1) % n))?);
    }
    PermutationGroup::generate(n, gens)
}

/// All powers of `p`.
pub fn cyclic_group(p: &Permutation) -> PermutationGroup {
    let mut elements = Vec::new();
    let mut x = Permutation::identity(p.degree()).expect("degree is positive");
    loop {
        elements.push(x.clone());
        x = p * &x;
        if x.is_identity() {
            break;
        }
    }
    PermutationGroup::from_closed_set(p.degree(), vec![p.clone()], elements)
}

/// Symmetries of the regular `n`-gon, generated by the rotation
/// `i ↦ i+1` and the vertex reflection `i ↦ -i` (mod `n`).
pub fn dihedral_group(n: usize) -> Result<PermutationGroup> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("dihedral group needs n ≥ 3, got {n}")));
    }
    let rotation = Permutation::from_images((0..n).map(|i| (i + 1) % n))?;
    let reflection = Permutation::from_images((0..n).map(|i| (n - i) % n))?;
    PermutationGroup::generate(n, vec![rotation, reflection])
}

pub fn external_point(degrees: &[usize], coords: &[usize]) -> usize {
    degrees.iter().zip(coords).fold(0, |acc, (&d, &x)| acc * d + x)
}

pub fn external_coords(degrees: &[usize], mut point: usize) -> Vec<usize> {
    let mut coords = vec![0; degrees.len()];
    for (c, &d) in coords.iter_mut().zip(degrees).rev() {
        *c = point % d;
        point /= d;
    }
    coords
}

/// The element `(g₁, …, g_k)` acting componentwise on encoded tuples.
pub fn embed_external(components: &[&Permutation]) -> Permutation {
    let degrees: Vec<usize> = components.iter().map(|g| g.degree()).collect();
    let total: usize = degrees.iter().product();
    let images = (0..total).map(|p| {
        let coords = external_coords(&degrees, p);
        let moved: Vec<usize> = components.iter().zip(&coords).map(|(g, &x)| g.apply(x)).collect();
        external_point(&degrees, &moved) as u16
    });
    Permutation::from_raw(images.collect())
}

/// The element `g₁g₂⋯g_k` acting on consecutive windows.
pub fn embed_internal(components: &[&Permutation]) -> Permutation {
    let mut images = Vec::new();
    let mut offset = 0;
    for g in components {
        images.extend(g.images().iter().map(|&x| x + offset as u16));
        offset += g.degree();
    }
    Permutation::from_raw(images)
}

fn check_total_degree(d: usize) -> Result<()> {
    if d > u16::MAX as usize {
        Err(Error::DegreeTooLarge(d))
    } else {
        Ok(())
    }
}

fn embedded_generators(
    groups: &[&PermutationGroup],
    embed: impl Fn(&[&Permutation]) -> Permutation,
) -> Result<Vec<Permutation>> {
    let identities = groups
        .iter()
        .map(|g| Permutation::identity(g.degree()))
        .collect::<Result<Vec<_>>>()?;
    let mut gens = Vec::new();
    for (i, g) in groups.iter().enumerate() {
        for h in g.generators() {
            let comps: Vec<&Permutation> = identities
                .iter()
                .enumerate()
                .map(|(k, id)| if k == i { h } else { id })
                .collect();
            gens.push(embed(&comps));
        }
    }
    Ok(gens)
}

/// `G₁ × ⋯ × G_k` acting componentwise on `[n₁] × ⋯ × [n_k]`.
pub fn external_direct_product(groups: &[&PermutationGroup]) -> Result<PermutationGroup> {
    if groups.is_empty() {
        return Err(Error::NoFactors);
    }
    let degree = groups
        .iter()
        .try_fold(1usize, |acc, g| acc.checked_mul(g.degree()))
        .ok_or(Error::DegreeTooLarge(usize::MAX))?;
    check_total_degree(degree)?;
    let gens = embedded_generators(groups, embed_external)?;
    PermutationGroup::generate(degree, gens)
}

/// `G₁ · ⋯ · G_k` acting on the disjoint union of the factors' points.
pub fn internal_direct_product(groups: &[&PermutationGroup]) -> Result<PermutationGroup> {
    if groups.is_empty() {
        return Err(Error::NoFactors);
    }
    let degree: usize = groups.iter().map(|g| g.degree()).sum();
    check_total_degree(degree)?;
    let gens = embedded_generators(groups, embed_internal)?;
    PermutationGroup::generate(degree, gens)
}

/// Young subgroup `Sym(λ₁) · Sym(λ₂) · ⋯` on consecutive windows.
pub fn young_subgroup(parts: &[usize]) -> Result<PermutationGroup> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::InvalidPartition("parts must be positive".into()));
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidPartition("parts must be weakly decreasing".into()));
    }
    let factors = parts.iter().map(|&k| symmetric_group(k)).collect::<Result<Vec<_>>>()?;
    let refs: Vec<&PermutationGroup> = factors.iter().collect();
    internal_direct_product(&refs)
}

/// The wreath element `(g₁, …, g_n, h)` sending `(x, j)` to `(g_j(x), h(j))`.
pub fn wreath_element(base: &[&Permutation], top: &Permutation) -> Result<Permutation> {
    let n = top.degree();
    if base.len() != n {
        return Err(Error::InvalidParameter(format!(
            "wreath element needs {n} base components, got {}",
            base.len()
        )));
    }
    let m = base[0].degree();
    if let Some(g) = base.iter().find(|g| g.degree() != m) {
        return Err(Error::DegreeMismatch {
            left: m,
            right: g.degree(),
        });
    }
    check_total_degree(m * n)?;
    let mut images = vec![0u16; m * n];
    for j in 0..n {
        for x in 0..m {
            images[j * m + x] = (top.apply(j) * m + base[j].apply(x)) as u16;
        }
    }
    Ok(Permutation::from_raw(images))
}

/// `G ≀ H` in its imprimitive action on `m·n` points.
pub fn wreath_product(base: &PermutationGroup, top: &PermutationGroup) -> Result<PermutationGroup> {
    let (m, n) = (base.degree(), top.degree());
    check_total_degree(m * n)?;
    let id_m = Permutation::identity(m)?;
    let id_n = Permutation::identity(n)?;
    let mut gens = Vec::new();
    for g in base.generators() {
        for j in 0..n {
            let comps: Vec<&Permutation> = (0..n).map(|k| if k == j { g } else { &id_m }).collect();
            gens.push(wreath_element(&comps, &id_n)?);
        }
    }
    let ids: Vec<&Permutation> = vec![&id_m; n];
    for h in top.generators() {
        gens.push(wreath_element(&ids, h)?);
    }
    PermutationGroup::generate(m * n, gens)
}
