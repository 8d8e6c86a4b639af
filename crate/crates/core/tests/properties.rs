use std::sync::{Arc, OnceLock};

use flagdom_core::chevalley::RealFormConjugation;
use flagdom_core::linalg::{kernel, RationalSubspace};
use flagdom_core::{DomainSpec, Label, LieElement, Rational, Root, RootSystem, StructureTable};
use proptest::prelude::*;

const TYPES: [&str; 5] = ["A2", "B2", "G2", "A3", "C3"];

fn tables() -> &'static Vec<StructureTable> {
    static T: OnceLock<Vec<StructureTable>> = OnceLock::new();
    T.get_or_init(|| {
        TYPES
            .iter()
            .map(|s| StructureTable::new(Arc::new(RootSystem::new(s.parse().unwrap()))))
            .collect()
    })
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn element(t: &StructureTable, terms: &[(usize, i64)]) -> LieElement {
    let basis = t.basis();
    let mut x = LieElement::zero(t.system());
    for &(i, c) in terms {
        x.add_term(basis[i % basis.len()], q(c));
    }
    x
}

fn terms() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..200, -3i64..=3), 0..6)
}

fn labels(rank: usize) -> impl Strategy<Value = Vec<Label>> {
    prop::collection::vec(prop::sample::select(Label::ALL.to_vec()), rank)
        .prop_filter("needs a Q", |l| l.contains(&Label::Q))
}

fn spec_strategy() -> impl Strategy<Value = (usize, Vec<Label>)> {
    (0..TYPES.len()).prop_flat_map(|i| {
        let rank = tables()[i].root_system().rank();
        (Just(i), labels(rank))
    })
}

fn rational_vectors(dim: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(
        prop::collection::vec((-4i64..=4, 1i64..=3), dim)
            .prop_map(|v| v.into_iter().map(|(a, b)| Rational::new(a.into(), b.into())).collect()),
        0..6,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_antisymmetric_and_bilinear(i in 0..TYPES.len(), a in terms(), b in terms(), c in terms(), s in -3i64..=3) {
        let t = &tables()[i];
        let (x, y, z) = (element(t, &a), element(t, &b), element(t, &c));
        let xy = t.bracket(&x, &y).unwrap();
        prop_assert_eq!(xy.scaled(&q(-1)), t.bracket(&y, &x).unwrap());
        let lhs = t.bracket(&x.sum(&z.scaled(&q(s))), &y).unwrap();
        let rhs = xy.sum(&t.bracket(&z, &y).unwrap().scaled(&q(s)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobi_on_random_elements(i in 0..TYPES.len(), a in terms(), b in terms(), c in terms()) {
        let t = &tables()[i];
        let (x, y, z) = (element(t, &a), element(t, &b), element(t, &c));
        let br = |u: &LieElement, v: &LieElement| t.bracket(u, v).unwrap();
        let total = br(&x, &br(&y, &z)).sum(&br(&y, &br(&z, &x))).sum(&br(&z, &br(&x, &y)));
        prop_assert!(total.is_zero());
    }

    #[test]
    fn killing_form_is_symmetric_and_invariant(i in 0..3usize, a in terms(), b in terms(), c in terms()) {
        let t = &tables()[i];
        let (x, y, z) = (element(t, &a), element(t, &b), element(t, &c));
        let k = |u: &LieElement, v: &LieElement| t.killing_form(u, v).unwrap();
        prop_assert_eq!(k(&x, &y), k(&y, &x));
        prop_assert_eq!(k(&t.bracket(&x, &y).unwrap(), &z), k(&x, &t.bracket(&y, &z).unwrap()));
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism((i, l) in spec_strategy(), a in terms(), b in terms()) {
        let t = &tables()[i];
        let spec = DomainSpec::new(t.root_system().clone(), l).unwrap();
        let c = RealFormConjugation::new(t.root_system(), spec.parity()).unwrap();
        let (x, y) = (element(t, &a), element(t, &b));
        prop_assert_eq!(c.conjugate(&c.conjugate(&x).unwrap()).unwrap(), x.clone());
        let lhs = c.conjugate(&t.bracket(&x, &y).unwrap()).unwrap();
        let rhs = t.bracket(&c.conjugate(&x).unwrap(), &c.conjugate(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gradings_are_additive_and_odd((i, l) in spec_strategy()) {
        let t = &tables()[i];
        let rs = t.root_system();
        let spec = DomainSpec::new(rs.clone(), l.clone()).unwrap();
        for dec in [spec.decomposition(), spec.auxiliary_decomposition()] {
            let lv = dec.level_by_index();
            prop_assert_eq!(lv.len(), rs.roots().len());
            for a in 0..rs.roots().len() {
                prop_assert_eq!(lv[rs.neg_index(a)], -lv[a]);
                for b in 0..rs.roots().len() {
                    if let Some(s) = rs.root_sum(&rs.roots()[a], &rs.roots()[b]).unwrap() {
                        prop_assert_eq!(lv[rs.index_of(&s).unwrap()], lv[a] + lv[b]);
                    }
                }
            }
            let total: usize = dec.levels().values().map(Vec::len).sum();
            prop_assert_eq!(total, rs.roots().len());
        }
        let w = spec.grading_element();
        for (k, label) in l.iter().enumerate() {
            let expected = match label { Label::V => 0, Label::Q => 1, Label::K => 2 };
            let mut e = vec![0; rs.rank()];
            e[k] = 1;
            prop_assert_eq!(w.evaluate(&Root::new(e).unwrap()), q(expected));
        }
    }

    #[test]
    fn subspace_echelon_form_is_canonical(vs in rational_vectors(4)) {
        let s = RationalSubspace::spanned_by(4, vs.iter().map(Vec::as_slice));
        let r = RationalSubspace::spanned_by(4, vs.iter().rev().map(Vec::as_slice));
        prop_assert_eq!(s.basis(), r.basis());
        prop_assert!(s.dim() <= 4);
        for v in &vs {
            prop_assert!(s.contains(v));
            let mut t = s.clone();
            prop_assert!(!t.insert(v));
        }
        let rebuilt = RationalSubspace::spanned_by(4, s.basis().iter().map(Vec::as_slice));
        prop_assert_eq!(rebuilt.basis(), s.basis());
    }

    #[test]
    fn kernel_vectors_are_annihilated(rows in rational_vectors(5)) {
        let ker = kernel(&rows, 5);
        let rank = RationalSubspace::spanned_by(5, rows.iter().map(Vec::as_slice)).dim();
        prop_assert_eq!(ker.len() + rank, 5);
        for k in &ker {
            for r in &rows {
                let dot: Rational = r.iter().zip(k).map(|(a, b)| a * b).sum();
                prop_assert_eq!(dot, q(0));
            }
        }
    }
}
