//! Graph-product independence numbers and spectrum invariants, checked on
//! small vertex-transitive graphs.

use proptest::prelude::*;

use ekrlab::dgraph::{
    derangement_graph, direct_product, lexicographic_product, product_vertex, spectrum, verify_product_identity, Graph,
    SpectrumOptions,
};
use ekrlab::group::{cyclic_group, dihedral_group, symmetric_group, young_subgroup, PermutationGroup};
use ekrlab::solver::{enumerate_max_independent_sets, max_independent_set, EnumerateOptions};
use ekrlab::Permutation;

fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// Independence number by trying every subset.
fn brute_alpha(x: &Graph) -> usize {
    let n = x.vertex_count();
    assert!(n <= 20);
    (0u32..1 << n)
        .filter(|s| (0..n).all(|u| s >> u & 1 == 0 || (u + 1..n).all(|v| s >> v & 1 == 0 || !x.has_edge(u, v))))
        .map(u32::count_ones)
        .max()
        .unwrap() as usize
}

fn vertex_transitive() -> Vec<Graph> {
    let mut out = vec![cycle(4), cycle(5), cycle(6), Graph::complete(3), Graph::empty(2)];
    for g in [
        dihedral_group(4).unwrap(),
        symmetric_group(3).unwrap(),
        young_subgroup(&[2, 2]).unwrap(),
    ] {
        out.push(derangement_graph(&g).unwrap());
    }
    out
}

#[test]
fn direct_product_alpha() {
    let graphs = vertex_transitive();
    for x in &graphs {
        for y in &graphs {
            let (ax, ay) = (brute_alpha(x), brute_alpha(y));
            let (nx, ny) = (x.vertex_count(), y.vertex_count());
            let p = direct_product(x, y);
            let r = max_independent_set(&p);
            assert!(r.exact);
            assert_eq!(r.size, (ax * ny).max(ay * nx), "{nx} x {ny}");
        }
    }
}

#[test]
fn lexicographic_product_alpha_and_projection() {
    let graphs = vertex_transitive();
    for x in &graphs {
        for y in &graphs {
            let (ax, ay) = (brute_alpha(x), brute_alpha(y));
            let ny = y.vertex_count();
            let p = lexicographic_product(x, y);
            let alpha = max_independent_set(&p).size;
            assert_eq!(alpha, ax * ay);
            // Every maximum set projects onto a maximum set of X, with a
            // maximum set of Y in each fibre.
            let sets = enumerate_max_independent_sets(&p, alpha, None, &EnumerateOptions::default()).unwrap();
            for s in sets {
                let mut base: Vec<usize> = s.iter().map(|v| v / ny).collect();
                base.dedup();
                assert_eq!(base.len(), ax);
                assert!(x.is_independent(&base));
                for &b in &base {
                    let fibre: Vec<usize> = s.iter().filter(|v| *v / ny == b).map(|v| v % ny).collect();
                    assert_eq!(fibre.len(), ay);
                    assert!(y.is_independent(&fibre));
                }
            }
        }
    }
}

#[test]
fn product_vertex_numbering() {
    let (x, y) = (cycle(4), Graph::complete(3));
    let p = lexicographic_product(&x, &y);
    assert!(p.has_edge(product_vertex(0, 0, 3), product_vertex(1, 2, 3)));
    assert!(p.has_edge(product_vertex(2, 0, 3), product_vertex(2, 1, 3)));
    assert!(!p.has_edge(product_vertex(0, 1, 3), product_vertex(2, 1, 3)));
}

fn groups() -> Vec<PermutationGroup> {
    let gen = |n: usize, gens: &[&str]| {
        PermutationGroup::generate(
            n,
            gens.iter().map(|g| Permutation::parse_cycles(g, n).unwrap()).collect(),
        )
        .unwrap()
    };
    vec![
        dihedral_group(7).unwrap(),
        symmetric_group(4).unwrap(),
        young_subgroup(&[3, 2]).unwrap(),
        gen(5, &["(1 2 3 4 5)", "(2 3 5 4)"]),
        gen(7, &["(1 2 3 4 5 6 7)", "(2 4 3 7 5 6)"]),
        gen(5, &["(1 2 3)", "(3 4 5)"]),
    ]
}

#[test]
fn spectrum_invariants() {
    for g in groups() {
        let x = derangement_graph(&g).unwrap();
        let s = spectrum(&x, &SpectrumOptions::default()).unwrap();
        let n = g.order();
        assert_eq!(s.vertex_count(), n);
        assert!(s.trace().abs() < 1e-6 * n as f64);
        assert!((s.sum_of_squares() - 2.0 * x.edge_count() as f64).abs() < 1e-6 * n as f64);
        // The degree of a regular graph is its largest eigenvalue.
        let d = g.derangements().len() as f64;
        assert!((s.eigenvalues[0].value - d).abs() < 1e-6);
        assert!(s.eigenvalues.iter().all(|e| e.value <= d + 1e-6));
    }
}

#[test]
fn frobenius_graphs_are_clique_unions() {
    let mut seen = 0;
    for g in groups().into_iter().filter(PermutationGroup::is_transitive) {
        let f = g.classify_frobenius().unwrap();
        let union = derangement_graph(&g).unwrap().is_disjoint_union_of_cliques();
        if f.is_frobenius {
            let h = f.complement_order.unwrap();
            assert_eq!(union, Some((h, g.order() / h)));
            assert_eq!(f.kernel.unwrap().len(), g.order() / h);
            seen += 1;
        }
    }
    // D7 and the two affine groups; Sym(4) and Alt(5) are not Frobenius.
    assert_eq!(seen, 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn product_identities_on_cyclic_pairs(a in 2usize..6, b in 2usize..5, split in 1usize..4) {
        let rot = |n: usize| cyclic_group(&Permutation::from_images((1..n).chain([0])).unwrap());
        // A cyclic group with two orbits, to include intransitive factors.
        let split = split.min(a - 1);
        let two = Permutation::from_images((0..a).map(|i| if i < split { (i + 1) % split } else { split + (i - split + 1) % (a - split) })).unwrap();
        let (g, h) = (cyclic_group(&two), rot(b));
        let check = verify_product_identity(&[&g, &h]).unwrap();
        prop_assert!(check.external && check.internal);
    }
}
