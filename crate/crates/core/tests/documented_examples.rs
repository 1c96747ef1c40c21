//! Worked examples for each public operation.

use std::collections::BTreeSet;

use sp2n::branching::{restrict_to_c, LinearWeight};
use sp2n::criteria::{
    abelian_all, element_has_one, p49_classify, p88_guarantee, prime_power_all, singer_cycle_has_one, th7_blocks,
    torus_trivial, unisingular, Decision, P49Class,
};
use sp2n::elements::{
    build_element, gamma_graph, has_eigenvalue_one_omega_n, max_singer_element, omega_n_eigenvalue_orders,
    singer_height, singer_index_element, to_torus_element, ElementBlock, ElementError, SemisimpleElement,
};
use sp2n::reps::{g_effective_weight_set, has_zero_weight, minkowski_sum, twist_decompose, weight_set, ModuleKind};
use sp2n::tori::{
    block_sums, enumerate_shapes, eval_weight, occurs_in_omega_n, restricts_trivially, singer_index, torus_order,
    trivial_constituent, unisingular_on_torus, value_set, Sign, TorusElement, TorusShape,
};
use sp2n::weights::{
    delta, dominant_below, dominant_representative, dominates, from_eps, gamma, is_radical, simple_root, to_eps,
    weyl_orbit, EpsWeight, Weight, WeightSet,
};

fn w(v: &[i64]) -> Weight {
    Weight::new(v.iter().copied()).unwrap()
}

fn e(v: &[i64]) -> EpsWeight {
    EpsWeight::new(v.iter().copied()).unwrap()
}

fn shape(s: &str) -> TorusShape {
    s.parse().unwrap()
}

fn el(s: &str) -> SemisimpleElement {
    s.parse().unwrap()
}

fn irr(v: &[i64]) -> WeightSet {
    weight_set(&w(v), ModuleKind::Irreducible2).unwrap().as_ref().clone()
}

#[test]
fn coordinates() {
    assert_eq!(to_eps(&w(&[0, 1])), e(&[1, 1]));
    assert_eq!(to_eps(&w(&[1, 1])), e(&[2, 1]));
    assert_eq!(to_eps(&w(&[0, 0, 0])), e(&[0, 0, 0]));
    assert_eq!(from_eps(&e(&[1, 1])), w(&[0, 1]));
    assert_eq!(from_eps(&e(&[1, 1, 1])), w(&[0, 0, 1]));
    assert_eq!(from_eps(&e(&[2, 1])), w(&[1, 1]));
}

#[test]
fn functionals() {
    for n in 2..=5 {
        assert_eq!(delta(&from_eps(&simple_root(n, n).unwrap())), 2);
        for i in 1..n {
            assert_eq!(delta(&from_eps(&simple_root(n, i).unwrap())), 0);
        }
    }
    assert_eq!(delta(&w(&[1, 1])), 3);
    assert_eq!(gamma(&from_eps(&simple_root(4, 1).unwrap())), 1);
    assert_eq!(gamma(&from_eps(&simple_root(4, 2).unwrap())), 0);
    assert_eq!(gamma(&Weight::zero(3)), 0);
    assert!(is_radical(&w(&[0, 1])));
    assert!(!is_radical(&w(&[1, 0])));
    assert!(is_radical(&Weight::zero(3)));
}

#[test]
fn dominance_examples() {
    assert!(dominates(&w(&[0, 0, 1]), &w(&[1, 0, 0])).unwrap());
    assert!(!dominates(&w(&[0, 1]), &w(&[1, 0])).unwrap());
    assert!(dominates(&w(&[1, 1]), &w(&[1, 1])).unwrap());
    assert_eq!(dominant_below(&w(&[0, 1])).unwrap(), BTreeSet::from([w(&[0, 1]), w(&[0, 0])]));
    assert_eq!(dominant_below(&w(&[1, 0])).unwrap(), BTreeSet::from([w(&[1, 0])]));
    assert_eq!(dominant_below(&w(&[1, 1])).unwrap(), BTreeSet::from([w(&[1, 1]), w(&[1, 0])]));
}

#[test]
fn orbits() {
    let o = weyl_orbit(&e(&[1, 0, 0]));
    assert_eq!(o.len(), 6);
    for n in 1..=6 {
        assert_eq!(weyl_orbit(&e(&vec![1; n])).len(), 1 << n);
    }
    assert_eq!(weyl_orbit(&e(&[0, 0])).to_sorted_vec(), vec![e(&[0, 0])]);
    assert_eq!(dominant_representative(&e(&[-1, 0, 0])), w(&[1, 0, 0]));
    assert_eq!(dominant_representative(&e(&[1, -2])), w(&[1, 1]));
    assert_eq!(dominant_representative(&e(&[2, 1])), w(&[1, 1]));
}

#[test]
fn weight_sets() {
    let top = irr(&[0, 1]);
    assert_eq!(top.len(), 4);
    assert!(!top.contains_zero());
    let mixed = irr(&[1, 1]);
    assert_eq!(mixed.len(), 12);
    for v in [[2, 1], [1, 2], [1, 0], [0, 1], [-2, -1], [-1, 0]] {
        assert!(mixed.contains(&e(&v)), "{v:?}");
    }
    assert!(!mixed.contains_zero());
    assert_eq!(weight_set(&w(&[0, 1]), ModuleKind::Weyl).unwrap().len(), 5);

    let zero = WeightSet::singleton_zero(2);
    assert_eq!(minkowski_sum(&zero, &mixed).unwrap(), mixed);
    assert_eq!(minkowski_sum(&irr(&[1, 0]), &top).unwrap(), mixed);

    assert!(has_zero_weight(&w(&[1, 1, 1]), ModuleKind::Irreducible2).unwrap());
    assert!(!has_zero_weight(&w(&[0, 0, 1]), ModuleKind::Irreducible2).unwrap());
    assert!(has_zero_weight(&w(&[0, 1, 0]), ModuleKind::Irreducible2).unwrap());
}

#[test]
fn twists() {
    assert_eq!(twist_decompose(&w(&[2, 0])).unwrap(), vec![(1, w(&[1, 0]))]);
    assert_eq!(twist_decompose(&w(&[3, 1])).unwrap(), vec![(0, w(&[1, 1])), (1, w(&[1, 0]))]);
    assert_eq!(twist_decompose(&w(&[1, 0])).unwrap(), vec![(0, w(&[1, 0]))]);
    assert_eq!(g_effective_weight_set(&w(&[0, 2])).unwrap(), irr(&[0, 1]));
    assert_eq!(g_effective_weight_set(&w(&[1, 1])).unwrap().len(), 12);
    assert_eq!(g_effective_weight_set(&w(&[0, 0])).unwrap(), WeightSet::singleton_zero(2));
}

#[test]
fn shapes() {
    let one: Vec<String> = enumerate_shapes(1).unwrap().iter().map(|s| s.to_string()).collect();
    assert_eq!(one, ["-1", "1"]);
    let two: Vec<String> = enumerate_shapes(2).unwrap().iter().map(|s| s.to_string()).collect();
    assert_eq!(two, ["-2", "2", "-1,-1", "-1,1", "1,1"]);
    for n in 1..=6 {
        assert!(enumerate_shapes(n).unwrap().iter().any(|s| s.is_t_sharp()));
    }
    assert_eq!(torus_order(&shape("-5")), 33u32.into());
    assert_eq!(torus_order(&TorusShape::t_sharp(3).unwrap()), 27u32.into());
    assert_eq!(torus_order(&shape("1,1")), 1u32.into());
    assert_eq!(singer_index(&shape("-2")), 1);
    assert_eq!(singer_index(&TorusShape::t_sharp(4).unwrap()), 4);
    assert_eq!(singer_index(&shape("2,1")), 0);
}

#[test]
fn restriction_to_tori() {
    assert_eq!(block_sums(&e(&[1, 0]), &shape("-2")).unwrap(), vec![1]);
    assert_eq!(block_sums(&e(&[1, 1]), &shape("-2")).unwrap(), vec![3]);
    assert_eq!(block_sums(&e(&[0, 0, 0]), &shape("-2,1")).unwrap(), vec![0, 0]);
    assert!(!restricts_trivially(&e(&[1, 0]), &shape("-2")).unwrap());
    assert!(restricts_trivially(&e(&[3]), &shape("-1")).unwrap());
    assert!(restricts_trivially(&e(&[0, 0]), &shape("-2")).unwrap());
    assert!(!trivial_constituent(&irr(&[0, 1]), &shape("-2")).unwrap());
    assert!(trivial_constituent(&irr(&[0, 1]), &shape("1,1")).unwrap());
    assert!(trivial_constituent(&irr(&[1, 1, 1]), &shape("-3")).unwrap());
    assert!(occurs_in_omega_n(&[3], &shape("-2")).unwrap());
    assert!(!occurs_in_omega_n(&[0], &shape("-2")).unwrap());
    assert!(occurs_in_omega_n(&[0], &shape("2")).unwrap());
}

#[test]
fn torus_elements() {
    let s = TorusElement::new(shape("-2"), vec![1]).unwrap();
    assert_eq!(eval_weight(&e(&[1, 0]), &s).unwrap(), 1);
    assert_eq!(eval_weight(&e(&[2, -1]), &TorusElement::identity(shape("-2"))).unwrap(), 0);
    assert_eq!(eval_weight(&e(&[0, 0]), &s).unwrap(), 0);
    assert!(!value_set(&irr(&[1, 0]), &s).unwrap().contains(&0));
    assert!(!unisingular_on_torus(&irr(&[1, 0]), &shape("-2")).unwrap());
    assert!(unisingular_on_torus(&irr(&[1, 1]), &shape("-2")).unwrap());
    assert!(unisingular_on_torus(&irr(&[0, 1, 0]), &shape("-3")).unwrap());
}

#[test]
fn elements() {
    assert!(build_element(vec![ElementBlock::new(1, 3, Sign::Minus)]).is_ok());
    assert!(matches!(
        build_element(vec![ElementBlock::new(2, 3, Sign::Minus)]),
        Err(ElementError::Minimality { found: 2, expected: 4, .. })
    ));
    assert!(build_element(vec![ElementBlock::identity()]).is_ok());

    let g = el("1:3:-;2:5:-");
    let graph = gamma_graph(&g);
    assert!(graph.edges.is_empty());
    assert_eq!(graph.singular, BTreeSet::from([0, 1]));
    assert!(gamma_graph(&el("3:7:+")).singular.is_empty());
    assert!(gamma_graph(&el("1:1:+")).singular.is_empty());

    assert_eq!(singer_index_element(&SemisimpleElement::singer_cycle(5).unwrap()), 1);
    assert_eq!(singer_index_element(&g), 2);
    assert_eq!(singer_index_element(&SemisimpleElement::identity(3).unwrap()), 0);

    let si = |n| singer_height(n).unwrap();
    assert_eq!((si(1).value, si(1).witness), (1, vec![1]));
    assert_eq!((si(3).value, si(3).witness), (2, vec![1, 2]));
    assert_eq!((si(7).value, si(7).witness), (3, vec![1, 2, 4]));
    assert_eq!(max_singer_element(3).unwrap().to_string(), "1:3:-;2:5:-");
    assert_eq!(max_singer_element(4).unwrap().to_string(), "1:3:-;2:5:-;1:1:+");
    assert_eq!(max_singer_element(1).unwrap().to_string(), "1:3:-");
}

#[test]
fn omega_n_spectrum() {
    let s2 = SemisimpleElement::singer_cycle(2).unwrap();
    assert_eq!(omega_n_eigenvalue_orders(&s2).unwrap(), BTreeSet::from([5]));
    assert_eq!(omega_n_eigenvalue_orders(&el("1:3:-;2:5:-")).unwrap(), BTreeSet::from([15]));
    assert_eq!(omega_n_eigenvalue_orders(&el("3:7:+")).unwrap(), BTreeSet::from([1, 7]));
    assert!(!has_eigenvalue_one_omega_n(&s2));
    assert!(has_eigenvalue_one_omega_n(&el("3:7:+")));
    assert!(has_eigenvalue_one_omega_n(&SemisimpleElement::identity(2).unwrap()));

    let t = to_torus_element(&el("1:3:-"), None).unwrap();
    assert_eq!((t.shape().to_string(), t.exponents().to_vec()), ("-1".to_string(), vec![1]));
    let t = to_torus_element(&el("2:5:-"), None).unwrap();
    assert_eq!((t.shape().to_string(), t.exponents().to_vec()), ("-2".to_string(), vec![1]));
    let t = to_torus_element(&SemisimpleElement::identity(2).unwrap(), None).unwrap();
    assert!(t.exponents().iter().all(|&m| m == 0));
}

#[test]
fn verdicts() {
    let d = |v: sp2n::criteria::Verdict| v.decision;
    assert_eq!(d(abelian_all(&w(&[0, 1, 0])).unwrap()), Decision::Yes);
    assert_eq!(d(abelian_all(&w(&[1, 0, 0])).unwrap()), Decision::No);
    assert_eq!(d(abelian_all(&w(&[1, 1, 1])).unwrap()), Decision::Yes);

    assert_eq!(d(unisingular(&w(&[0, 0, 1])).unwrap()), Decision::No);
    assert_eq!(d(unisingular(&w(&[1, 0])).unwrap()), Decision::No);
    assert_eq!(d(unisingular(&w(&[1, 1])).unwrap()), Decision::Yes);

    assert!(prime_power_all(&w(&[0, 1, 0])).unwrap());
    assert!(!prime_power_all(&w(&[0, 0, 1])).unwrap());
    assert!(prime_power_all(&Weight::zero(3)).unwrap());

    assert!(!singer_cycle_has_one(&w(&[1, 0])).unwrap());
    assert!(singer_cycle_has_one(&w(&[0, 2, 0])).unwrap());
    // for n = 2 the weight 2ω_2 is a twist of ω_n
    assert!(!singer_cycle_has_one(&w(&[0, 2])).unwrap());
    assert!(singer_cycle_has_one(&w(&[1, 1])).unwrap());

    assert_eq!(d(torus_trivial(&w(&[0, 1]), &shape("-2")).unwrap()), Decision::No);
    assert_eq!(d(torus_trivial(&w(&[0, 1]), &shape("2")).unwrap()), Decision::Yes);
    // ε_2 lies in Ω(V_{ω_1}) and vanishes on both blocks of (−1,+1)
    let v = torus_trivial(&w(&[1, 0]), &shape("-1,1")).unwrap();
    assert_eq!(v.decision, Decision::Yes);

    let g = el("1:3:-;2:5:-");
    assert_eq!(d(element_has_one(&w(&[0, 1, 1]), &g).unwrap()), Decision::Yes);
    assert_eq!(d(element_has_one(&w(&[1, 0, 1]), &g).unwrap()), Decision::No);
    assert_eq!(d(element_has_one(&w(&[0, 1, 0]), &g).unwrap()), Decision::Yes);

    assert!(th7_blocks(&w(&[1, 0, 0]), &[1, 1], ModuleKind::Irreducible2).unwrap());
    assert!(!th7_blocks(&w(&[1, 1, 0]), &[1, 1, 1], ModuleKind::Irreducible2).unwrap());
    assert!(th7_blocks(&Weight::zero(3), &[1], ModuleKind::Weyl).unwrap());

    assert!(p88_guarantee(&SemisimpleElement::identity(3).unwrap()).unwrap());
    assert!(!p88_guarantee(&SemisimpleElement::singer_cycle(3).unwrap()).unwrap());
    assert!(!p88_guarantee(&el("3:7:+")).unwrap());
}

#[test]
fn trichotomy() {
    let g = el("1:3:-;2:5:-");
    assert!(matches!(p49_classify(&w(&[0, 2, 0]), &g).unwrap(), P49Class::HasOne { .. }));
    assert_eq!(p49_classify(&w(&[4, 0, 0]), &g).unwrap(), P49Class::FundamentalTwistException { i: 1, j: 2 });
    assert_eq!(
        p49_classify(&w(&[1, 0, 2]), &g).unwrap(),
        P49Class::TensorCase { omega_prime: w(&[1, 0, 0]), k: 1, d: 1, singer_index: 2 }
    );
}

#[test]
fn branching() {
    let lambda = LinearWeight::fundamental(6, 1).unwrap();
    assert_eq!(restrict_to_c(&lambda).unwrap(), w(&[1, 0, 0]));
    let lambda = LinearWeight::fundamental(6, 5).unwrap();
    assert_eq!(restrict_to_c(&lambda).unwrap(), w(&[1, 0, 0]));
}
