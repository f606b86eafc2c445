use std::sync::Arc;

use proptest::prelude::*;
use slice_burnside::constants::{m_relative_double_sum, m_slice, m_slice_factored, m_slice_frattini};
use slice_burnside::group::{parse_group_spec, DEFAULT_ORDER_CAP};
use slice_burnside::rational::{q, Q};
use slice_burnside::{SliceElement, SliceRing};

const SPECS: &[&str] = &[
    "cyclic:6",
    "elab:2^2",
    "abelian:4x2",
    "dihedral:8",
    "perm:(0,1,2),(0,1)",
    "mod:3",
    "heis:3",
];

fn ring(i: usize) -> Arc<SliceRing> {
    thread_local! {
        static RINGS: Vec<Arc<SliceRing>> = SPECS
            .iter()
            .map(|s| SliceRing::new(Arc::new(parse_group_spec(s, DEFAULT_ORDER_CAP).unwrap())))
            .collect();
    }
    RINGS.with(|r| r[i].clone())
}

fn coeffs() -> impl Strategy<Value = Vec<(usize, i64, i64)>> {
    prop::collection::vec((0usize..1000, -6i64..=6, 1i64..=4), 0..6)
}

fn element(r: &Arc<SliceRing>, raw: &[(usize, i64, i64)]) -> SliceElement {
    SliceElement::from_coeffs(r, raw.iter().map(|&(c, n, d)| (c % r.len(), q(n, d))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(gi in 0..SPECS.len(), a in coeffs(), b in coeffs(), c in coeffs()) {
        let r = ring(gi);
        let (x, y, z) = (element(&r, &a), element(&r, &b), element(&r, &c));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&r.one() * &x, x);
    }

    #[test]
    fn marks_are_multiplicative(gi in 0..SPECS.len(), a in coeffs(), b in coeffs()) {
        let r = ring(gi);
        let (x, y) = (element(&r, &a), element(&r, &b));
        let mx = r.to_mark_vector(&x).unwrap();
        let my = r.to_mark_vector(&y).unwrap();
        let mxy = r.to_mark_vector(&(&x * &y)).unwrap();
        let pointwise: Vec<Q> = mx.iter().zip(&my).map(|(u, v)| u * v).collect();
        prop_assert_eq!(mxy, pointwise);
        prop_assert_eq!(r.from_mark_vector(&mx).unwrap(), x);
    }

    #[test]
    fn idempotent_projection(gi in 0..SPECS.len(), a in coeffs(), c in 0usize..1000) {
        let r = ring(gi);
        let x = element(&r, &a);
        let c = c % r.len();
        let xi = r.idempotent(c);
        let mark = r.to_mark_vector(&x).unwrap()[c].clone();
        prop_assert_eq!(&x * &xi, xi.scale(&mark));
    }

    #[test]
    fn deflation_constant_forms_agree(gi in 0..SPECS.len(), s in 0usize..1000, n in 0usize..1000) {
        let r = ring(gi);
        let l = r.lattice();
        let normals = l.normal_subgroups();
        let (s, n) = (s % l.len(), normals[n % normals.len()]);
        let m = m_slice(l, s, n).unwrap();
        prop_assert_eq!(m_relative_double_sum(l, l.top(), s, n).unwrap(), m.clone());
        prop_assert_eq!(m_slice_factored(l, s, n).unwrap(), m.clone());
        prop_assert_eq!(m_slice_frattini(l, s, n).unwrap(), m);
    }
}
