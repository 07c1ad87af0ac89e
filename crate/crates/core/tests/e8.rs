use std::collections::HashMap;

use sgstar::bounds::{self, BoundKind};
use sgstar::constructions::{self, e8_positive_roots, e8_positive_roots_with, e8_roots, RootList};
use sgstar::spectra;
use sgstar::starcomp;
use sgstar::{ExactScalar, SignedGraph};

fn minus_two() -> ExactScalar {
    ExactScalar::from_int(-2)
}

#[test]
fn e8_graph_spectrum_and_cubic_bound() {
    let g = constructions::e8_signed_graph().unwrap();
    assert_eq!(g.order(), 120);
    let report = spectra::spectrum(&g).unwrap();
    let exact: Vec<(String, usize)> = report.exact_eigenvalues().map(|(x, m)| (x.to_string(), m)).collect();
    assert_eq!(exact, vec![("28".to_string(), 8), ("-2".to_string(), 112)]);
    assert!(report.is_fully_exact());

    let cubic = bounds::cubic_bound_check(&g, &minus_two()).unwrap();
    assert_eq!((cubic.t, cubic.bound_value.clone()), (8, 120u32.into()));
    assert!(cubic.applicable && cubic.attained);

    // 120 > C(10, 3) - 1, so -2 has to be main
    assert!(spectra::is_main(&g, &minus_two()).unwrap());
    assert!(!bounds::nonmain_bound_check(&g, &minus_two()).unwrap().applicable);

    let naive = bounds::naive_bound_check(&g, &minus_two()).unwrap();
    assert_eq!(naive.bound_value, 6568u32.into());
    assert!(naive.holds);
}

#[test]
fn e8_star_complement_and_certificate() {
    let g = constructions::e8_signed_graph().unwrap();
    let p = starcomp::find_star_set(&g, &minus_two()).unwrap();
    assert_eq!((p.k(), p.t()), (112, 8));
    assert_eq!(bounds::inner_product_table_check(&p), None);

    let cert = bounds::cubic_rank_certificate(&g, &minus_two()).unwrap();
    assert_eq!((cert.n, cert.dim_h3, cert.rank), (120, 120, 120));
    assert!(cert.independent);
    assert!(!cert.determinant.unwrap().is_zero());
}

#[test]
fn e8_negation_attains_for_two() {
    let g = constructions::e8_signed_graph().unwrap().negation();
    let r = bounds::cubic_bound_check(&g, &ExactScalar::from_int(2)).unwrap();
    assert!(r.applicable && r.attained);
}

#[test]
fn e8_quadratic_gate_decided_by_rank() {
    let g = constructions::e8_signed_graph().unwrap();
    let r = bounds::quadratic_bound_check(&g, &minus_two()).unwrap();
    let underlying_has = spectra::multiplicity(&g.underlying(), &ExactScalar::from_int(-4)) > 0;
    assert_eq!(r.applicable, !underlying_has);
    // 120 > C(9, 2), so the hypothesis must fail
    assert!(!r.applicable);
    assert_eq!(r.kind, BoundKind::Quadratic);
}

fn index(roots: &RootList) -> HashMap<[i8; 8], usize> {
    roots.vectors.iter().enumerate().map(|(i, r)| (*r, i)).collect()
}

/// Positive systems for different directions differ by negating some roots;
/// the induced vertex map and sign pattern is an explicit switching isomorphism.
fn switching_map(a: &RootList, b: &RootList) -> (Vec<usize>, Vec<i64>) {
    let in_b = index(b);
    let mut perm = Vec::with_capacity(a.len());
    let mut signs = Vec::with_capacity(a.len());
    for r in &a.vectors {
        if let Some(&j) = in_b.get(r) {
            perm.push(j);
            signs.push(1);
        } else {
            perm.push(in_b[&r.map(|x| -x)]);
            signs.push(-1);
        }
    }
    (perm, signs)
}

fn check_switching_equivalent(g: &SignedGraph, h: &SignedGraph, perm: &[usize], signs: &[i64]) {
    for u in 0..g.order() {
        for v in 0..g.order() {
            let expected = signs[u] * signs[v] * i64::from(g.sign(u, v));
            assert_eq!(i64::from(h.sign(perm[u], perm[v])), expected);
        }
    }
}

#[test]
fn other_directions_give_switching_equivalent_graphs() {
    let base = e8_positive_roots();
    let g = constructions::e8_signed_graph().unwrap();
    for w in [[3, -5, 7, 11, -13, 17, 19, 23], [-128, 64, -32, 16, -8, 4, -2, 1]] {
        let other = e8_positive_roots_with(w).unwrap();
        other.check_positive_system(&e8_roots()).unwrap();
        let h = constructions::e8_signed_graph_with(w).unwrap();
        let (perm, signs) = switching_map(&base, &other);
        check_switching_equivalent(&g, &h, &perm, &signs);
        assert_eq!(spectra::multiplicity(&h, &minus_two()), 112);
    }
}
