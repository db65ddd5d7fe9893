use super::{derangement_graph, Graph};
use crate::error::{Error, Result};
use crate::group::{
    embed_external, embed_internal, external_direct_product, internal_direct_product, PermutationGroup,
};
use crate::perm::Permutation;

/// Vertex `(x, y)` of a product with `y_count` vertices in the second factor.
#[inline]
pub fn product_vertex(x: usize, y: usize, y_count: usize) -> usize {
    x * y_count + y
}

fn product_by(x: &Graph, y: &Graph, adjacent: impl Fn(usize, usize, usize, usize) -> bool) -> Graph {
    let (nx, ny) = (x.vertex_count(), y.vertex_count());
    let mut g = Graph::empty(nx * ny);
    for x1 in 0..nx {
        for y1 in 0..ny {
            let u = product_vertex(x1, y1, ny);
            for x2 in 0..nx {
                for y2 in 0..ny {
                    let v = product_vertex(x2, y2, ny);
                    if u < v && adjacent(x1, y1, x2, y2) {
                        g.add_edge(u, v);
                    }
                }
            }
        }
    }
    g
}

/// Direct (tensor) product: `(x1,y1) ~ (x2,y2)` iff `x1 ~ x2` and `y1 ~ y2`.
pub fn direct_product(x: &Graph, y: &Graph) -> Graph {
    product_by(x, y, |x1, y1, x2, y2| x.has_edge(x1, x2) && y.has_edge(y1, y2))
}

/// Lexicographic product `X[Y]`: `x1 ~ x2`, or `x1 = x2` and `y1 ~ y2`.
pub fn lexicographic_product(x: &Graph, y: &Graph) -> Graph {
    product_by(x, y, |x1, y1, x2, y2| {
        x.has_edge(x1, x2) || (x1 == x2 && y.has_edge(y1, y2))
    })
}

/// Strong product: distinct vertices whose coordinates are each equal or
/// adjacent. Equivalently the direct product of the factors with a loop
/// added at every vertex.
pub fn strong_product(x: &Graph, y: &Graph) -> Graph {
    product_by(x, y, |x1, y1, x2, y2| {
        (x1 == x2 || x.has_edge(x1, x2)) && (y1 == y2 || y.has_edge(y1, y2))
    })
}

/// Outcome of comparing derangement graphs of product groups with the
/// corresponding graph products of the factors' derangement graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductIdentityCheck {
    /// `Γ(G₁×⋯×G_k)` equals the complement of the product of the
    /// complements `Γ̄(G_i)`, where the complements carry loops (so the
    /// product of complements is the strong product).
    pub external: bool,
    /// `Γ(G₁·⋯·G_k)` equals `Γ(G₁)×⋯×Γ(G_k)` (direct product).
    pub internal: bool,
}

/// Enumerates tuples of factor element indices in row-major order and
/// returns, for each, the index of the embedded element in `product`.
fn tuple_map(
    groups: &[&PermutationGroup],
    product: &PermutationGroup,
    embed: impl Fn(&[&Permutation]) -> Permutation,
) -> Vec<usize> {
    let orders: Vec<usize> = groups.iter().map(|g| g.order()).collect();
    let total: usize = orders.iter().product();
    let mut coords = vec![0usize; groups.len()];
    let mut map = Vec::with_capacity(total);
    for _ in 0..total {
        let comps: Vec<&Permutation> = groups.iter().zip(&coords).map(|(g, &c)| g.element(c)).collect();
        map.push(
            product
                .index_of(&embed(&comps))
                .expect("embedded element lies in the product"),
        );
        for k in (0..coords.len()).rev() {
            coords[k] += 1;
            if coords[k] < orders[k] {
                break;
            }
            coords[k] = 0;
        }
    }
    map
}

fn same_under(composite: &Graph, actual: &Graph, map: &[usize]) -> bool {
    let n = composite.vertex_count();
    n == actual.vertex_count()
        && (0..n).all(|a| (a + 1..n).all(|b| composite.has_edge(a, b) == actual.has_edge(map[a], map[b])))
}

/// Checks both product identities edge for edge under the pinned encodings.
pub fn verify_product_identity(groups: &[&PermutationGroup]) -> Result<ProductIdentityCheck> {
    if groups.is_empty() {
        return Err(Error::NoFactors);
    }
    let factor_graphs = groups
        .iter()
        .map(|g| derangement_graph(g))
        .collect::<Result<Vec<_>>>()?;

    let external = external_direct_product(groups)?;
    let ext_map = tuple_map(groups, &external, embed_external);
    let mut strong = factor_graphs[0].complement();
    for x in &factor_graphs[1..] {
        strong = strong_product(&strong, &x.complement());
    }
    let external_ok = same_under(&strong.complement(), &derangement_graph(&external)?, &ext_map);

    let internal = internal_direct_product(groups)?;
    let int_map = tuple_map(groups, &internal, embed_internal);
    let mut direct = factor_graphs[0].clone();
    for x in &factor_graphs[1..] {
        direct = direct_product(&direct, x);
    }
    let internal_ok = same_under(&direct, &derangement_graph(&internal)?, &int_map);

    Ok(ProductIdentityCheck {
        external: external_ok,
        internal: internal_ok,
    })
}
