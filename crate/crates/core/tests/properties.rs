use std::sync::OnceLock;

use nichols_core::alcove::{chain_transform_full, is_lambda_chain, lambda_chain, reverse_chain, separating_count};
use nichols_core::braided::{braid_apply, TensorElement};
use nichols_core::equivariant::{CrossElement, Equivariant};
use nichols_core::group_algebra::{GroupAlgebraElement, TorusScalar};
use nichols_core::kmodel::{demazure, KModel};
use nichols_core::linalg::{q, unit_vec};
use nichols_core::nichols::{NicholsElement, Tower};
use nichols_core::rootsys::{RootSystem, SignedRoot, Weight};
use proptest::prelude::*;

const LABELS: [&str; 4] = ["A2", "B2", "C2", "G2"];

fn tower(label: &str) -> &'static Tower {
    static TOWERS: OnceLock<Vec<Tower>> = OnceLock::new();
    let all = TOWERS.get_or_init(|| {
        LABELS
            .iter()
            .map(|l| {
                let max = if *l == "G2" { 4 } else { 10 };
                Tower::build(RootSystem::from_label(l).unwrap(), max)
            })
            .collect()
    });
    &all[LABELS.iter().position(|l| *l == label).unwrap()]
}

/// Picks `(degree, basis index, coefficient)` triples into an element of
/// degree at most `max`, using the raw numbers modulo the dimensions.
fn element(t: &Tower, raw: &[(usize, usize, i64)], max: usize) -> NicholsElement {
    let mut x = NicholsElement::zero();
    let top = t.top_degree().min(max);
    for &(d, k, c) in raw {
        let d = d % (top + 1);
        let dim = t.degrees()[d].dim;
        x.add_component(d, &unit_vec(k % dim), &q(c));
    }
    x
}

fn raw_element() -> impl Strategy<Value = Vec<(usize, usize, i64)>> {
    prop::collection::vec((0usize..16, 0usize..1000, -3i64..=3), 1..5)
}

fn weight(rs: &RootSystem, c: &[i64]) -> Weight {
    rs.weight(&c[..rs.rank()])
}

fn group_element(rs: &RootSystem, raw: &[(i64, i64, i64)]) -> GroupAlgebraElement {
    let mut f = GroupAlgebraElement::zero();
    for &(a, b, c) in raw {
        f.add_term(weight(rs, &[a, b]), q(c));
    }
    f
}

fn label() -> impl Strategy<Value = &'static str> {
    prop::sample::select(LABELS.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative(l in prop::sample::select(vec!["A2", "B2", "C2"]), a in raw_element(), b in raw_element(), c in raw_element()) {
        let t = tower(l);
        let (x, y, z) = (element(t, &a, 3), element(t, &b, 3), element(t, &c, 3));
        let left = t.multiply(&t.multiply(&x, &y).unwrap(), &z).unwrap();
        let right = t.multiply(&x, &t.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn derivations_satisfy_the_twisted_leibniz_rule(l in label(), a in raw_element(), b in raw_element(), r in 0usize..6, neg: bool) {
        let t = tower(l);
        let rs = t.root_system();
        let alpha = SignedRoot { index: r % rs.num_positive(), negative: neg };
        let (x, y) = (element(t, &a, 2), element(t, &b, 2));
        let lhs = t.d_alpha(alpha, &t.multiply(&x, &y).unwrap());
        let rhs = t
            .multiply(&t.d_alpha(alpha, &x), &y)
            .unwrap()
            .add(&t.multiply(&t.reflect(alpha.index, &x), &t.d_alpha(alpha, &y)).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reflections_are_involutive_automorphisms(l in label(), a in raw_element(), b in raw_element(), r in 0usize..6) {
        let t = tower(l);
        let r = r % t.root_system().num_positive();
        let (x, y) = (element(t, &a, 2), element(t, &b, 2));
        prop_assert_eq!(t.reflect(r, &t.reflect(r, &x)), x.clone());
        let s_xy = t.reflect(r, &t.multiply(&x, &y).unwrap());
        let sx_sy = t.multiply(&t.reflect(r, &x), &t.reflect(r, &y)).unwrap();
        prop_assert_eq!(s_xy, sx_sy);
    }

    #[test]
    fn braiding_satisfies_the_braid_relation(l in label(), w in prop::collection::vec(0usize..6, 3), extra in prop::collection::vec(0usize..6, 3)) {
        let rs = RootSystem::from_label(l).unwrap();
        let r = rs.num_positive();
        let mut t = TensorElement::word(&w.iter().map(|i| i % r).collect::<Vec<_>>());
        t.add_term(extra.iter().map(|i| i % r).collect(), q(-2));
        let a = |p, x: &TensorElement| braid_apply(&rs, p, x).unwrap();
        prop_assert_eq!(a(0, &a(1, &a(0, &t))), a(1, &a(0, &a(1, &t))));
    }

    #[test]
    fn generated_chains_are_valid(l in prop::sample::select(vec!["A2", "B2", "C2", "G2", "A3"]), c in prop::collection::vec(-3i64..=3, 3), i in 0usize..3) {
        let rs = RootSystem::from_label(l).unwrap();
        let lambda = weight(&rs, &c);
        let chain = lambda_chain(&rs, &lambda).unwrap();
        prop_assert!(is_lambda_chain(&rs, &chain.roots(), &lambda));
        prop_assert_eq!(chain.len(), separating_count(&rs, &lambda).unwrap());
        let back = reverse_chain(&rs, &chain).unwrap();
        prop_assert_eq!(back.target, -&lambda);
        let i = i % rs.rank();
        let full = chain_transform_full(&rs, i, &chain).unwrap();
        prop_assert!(is_lambda_chain(&rs, &full.roots(), &rs.reflect(rs.simple(i), &lambda)));
    }

    #[test]
    fn demazure_operators_satisfy_the_twisted_leibniz_rule(l in label(), a in prop::collection::vec((-3i64..=3, -3i64..=3, -2i64..=2), 1..4), b in prop::collection::vec((-3i64..=3, -3i64..=3, -2i64..=2), 1..4), i in 0usize..2) {
        let rs = RootSystem::from_label(l).unwrap();
        let (f, g) = (group_element(&rs, &a), group_element(&rs, &b));
        let lhs = demazure(&rs, i, &(&f * &g)).unwrap();
        let sf = f.reflect(&rs, rs.simple(i));
        let rhs = &(&demazure(&rs, i, &f).unwrap() * &g) + &(&sf * &demazure(&rs, i, &g).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn phi_is_multiplicative(l in prop::sample::select(vec!["A2", "B2"]), a in prop::collection::vec((-2i64..=2, -2i64..=2, -2i64..=2), 1..3), b in prop::collection::vec((-2i64..=2, -2i64..=2, -2i64..=2), 1..3)) {
        let t = tower(l);
        let rs = t.root_system();
        let m = KModel::new(t);
        let (f, g) = (group_element(rs, &a), group_element(rs, &b));
        let lhs = m.phi(&(&f * &g)).unwrap();
        let rhs = m.multiply(&m.phi(&f).unwrap(), &m.phi(&g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cross_product_is_associative_and_specializes(a in cross_raw(), b in cross_raw(), c in cross_raw()) {
        let t = tower("A2");
        let eq = Equivariant::new(t);
        let (x, y, z) = (cross(t, &a), cross(t, &b), cross(t, &c));
        let xy = eq.multiply(&x, &y).unwrap();
        prop_assert_eq!(eq.multiply(&xy, &z).unwrap(), eq.multiply(&x, &eq.multiply(&y, &z).unwrap()).unwrap());
        let sxy = t.multiply(&eq.specialize(&x), &eq.specialize(&y)).unwrap();
        prop_assert_eq!(eq.specialize(&xy), sxy);
    }
}

/// `(χ coords, X coords, degree, index, coefficient)`.
type CrossRaw = Vec<((i64, i64), (i64, i64), usize, usize, i64)>;

fn cross_raw() -> impl Strategy<Value = CrossRaw> {
    prop::collection::vec(((-1i64..=1, -1i64..=1), (-2i64..=2, -2i64..=2), 0usize..5, 0usize..100, -2i64..=2), 1..4)
}

fn cross(t: &Tower, raw: &CrossRaw) -> CrossElement {
    let rs = t.root_system();
    let mut x = CrossElement::zero();
    for &((c1, c2), (m1, m2), d, k, c) in raw {
        let d = d % (t.top_degree() + 1);
        let k = k % t.degrees()[d].dim;
        let chi = TorusScalar::character(rs.weight(&[c1, c2])).scale(&q(c));
        x.add_term(rs.weight(&[m1, m2]), d, k, &chi);
    }
    x
}
