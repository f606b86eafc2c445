use std::sync::Arc;

use slice_burnside::biset::{deflation, induction, restriction, Path};
use slice_burnside::constants::{
    complement_count_check, is_b_group, is_t_slice, m_circ, m_classical, m_slice,
};
use slice_burnside::group::{
    is_isomorphic, parse_group_spec, Embedding, FiniteGroup, GroupRef, QuotientMap,
    DEFAULT_ORDER_CAP as CAP,
};
use slice_burnside::gset::{hom_count, GSet, GSetMorphism};
use slice_burnside::ideals::{ideal_dimension, GroupUniverse, SliceFamily};
use slice_burnside::rational::{q, qi};
use slice_burnside::{SliceRing, SubgroupLattice};

fn g(spec: &str) -> GroupRef {
    Arc::new(parse_group_spec(spec, CAP).unwrap())
}

fn order_index(l: &SubgroupLattice, order: usize) -> usize {
    (0..l.len()).find(|&i| l.order_of(i) == order).unwrap()
}

#[test]
fn group_specs() {
    assert_eq!(g("cyclic:1").order(), 1);
    let h = g("heis:3");
    assert_eq!((h.order(), h.exponent(), h.center().order()), (27, 3, 3));
    assert_eq!(SubgroupLattice::new(g("dihedral:8")).len(), 10);
    assert_eq!(g("perm:").order(), 1);
    assert!(g("perm:(0,1,2,3)").is_cyclic());
    let d = g("perm:(0,1,2,3),(1,3)");
    assert_eq!(d.order(), 8);
    assert!(!d.is_abelian());
    assert!(is_isomorphic(&d, &g("dihedral:8")));
    assert!(!is_isomorphic(&g("cyclic:4"), &g("elab:2^2")));
    assert!(!is_isomorphic(&g("mod:3"), &g("heis:3")));
}

#[test]
fn lattices_and_moebius() {
    for (spec, n) in [("cyclic:5", 2), ("elab:2^2", 5), ("elab:2^3", 16)] {
        assert_eq!(SubgroupLattice::new(g(spec)).len(), n, "{spec}");
    }
    for p in [2, 3, 5] {
        let l = SubgroupLattice::new(g(&format!("elab:{p}^2")));
        assert_eq!(l.mu(l.trivial(), l.top()), p as i64);
        let c = order_index(&l, p);
        assert_eq!(l.mu(l.trivial(), c), -1);
        assert_eq!(l.mu(c, c), 1);
    }
    let v = SubgroupLattice::new(g("elab:3^2"));
    assert_eq!(v.frattini(), v.trivial());
    let c4 = SubgroupLattice::new(g("cyclic:4"));
    assert_eq!(c4.order_of(c4.frattini()), 2);
    assert_eq!(c4.double_cosets(c4.top(), c4.top()).len(), 1);
}

#[test]
fn gsets_and_morphisms() {
    let c4 = g("cyclic:4");
    let l = SubgroupLattice::new(c4.clone());
    let whole = c4.whole();
    let one = c4.trivial_subgroup();
    assert_eq!(GSet::coset_space(&c4, &whole).len(), 1);
    let reg = GSet::coset_space(&c4, &one);
    assert_eq!((reg.len(), reg.orbits().len()), (4, 1));
    assert!(reg.stabilizer(2).is_trivial());
    let s = l.subgroup(order_index(&l, 2)).clone();
    let x = GSet::coset_space(&c4, &s);
    assert_eq!(x.stabilizer(0).members(), s.members());

    let ring = SliceRing::new(c4.clone());
    let pt = GSetMorphism::point(&c4);
    assert_eq!(ring.from_morphism(&pt).unwrap(), ring.one());
    let proj = GSetMorphism::canonical_projection(&c4, &one, &s).unwrap();
    let c = ring.class_of_subgroups(&s, &one).unwrap();
    assert_eq!(ring.from_morphism(&proj).unwrap(), ring.basis(c));
    let id = GSetMorphism::identity(&reg);
    let two = id.disjoint_union(&id).unwrap();
    let free = ring.class_of(l.trivial(), l.trivial()).unwrap();
    assert_eq!(ring.from_morphism(&two).unwrap(), ring.basis(free).scale(&qi(2)));

    assert_eq!(hom_count(&proj, &pt).unwrap(), 1);
    assert_eq!(hom_count(&pt, &proj).unwrap(), 0);
    let top = GSetMorphism::canonical_projection(&c4, &whole, &whole).unwrap();
    assert_eq!(hom_count(&pt, &top).unwrap(), 1);
    assert_eq!(hom_count(&id, &proj).unwrap(), 4);

    let prod = proj.product(&pt).unwrap();
    assert_eq!(ring.from_morphism(&prod).unwrap(), ring.from_morphism(&proj).unwrap());
    let empty = GSetMorphism::empty(&c4);
    assert!(ring.from_morphism(&empty.product(&proj).unwrap()).unwrap().is_zero());
}

#[test]
fn morphism_operations() {
    let c4 = g("cyclic:4");
    let l = SubgroupLattice::new(c4.clone());
    let h = l.subgroup(order_index(&l, 2)).clone();
    let one = c4.trivial_subgroup();
    let f = GSetMorphism::canonical_projection(&c4, &one, &h).unwrap();
    let full = QuotientMap::new(&c4, &c4.whole()).unwrap();
    let d = f.deflate(&full).unwrap();
    assert_eq!((d.source().len(), d.target().len()), (1, 1));
    let emb = Embedding::of_subgroup(&c4, &h);
    let ind = GSetMorphism::point(emb.sub()).induce(&emb).unwrap();
    let ring = SliceRing::new(c4.clone());
    let hh = ring.class_of_subgroups(&h, &h).unwrap();
    assert_eq!(ring.from_morphism(&ind).unwrap(), ring.basis(hh));
    let same = Embedding::of_subgroup(&c4, &c4.whole());
    assert_eq!(f.restrict(&same).unwrap().source().len(), 4);
}

#[test]
fn ring_examples() {
    assert_eq!(SliceRing::new(g("cyclic:1")).len(), 1);
    for p in [2, 3, 5, 7] {
        assert_eq!(SliceRing::new(g(&format!("cyclic:{p}"))).len(), 3);
    }
    let c2 = SliceRing::new(g("cyclic:2"));
    let l = c2.lattice();
    let (one, top) = (l.trivial(), l.top());
    let c21 = c2.class_of(top, one).unwrap();
    let b = c2.basis(c21);
    assert_eq!(&b * &b, b.scale(&qi(2)));
    assert_eq!(&c2.one() * &b, b);
    let half = q(1, 2);
    let b11 = c2.basis(c2.class_of(one, one).unwrap());
    assert_eq!(c2.idempotent(c2.top_class()), &c2.one() - &b.scale(&half));
    assert_eq!(c2.idempotent(c21), &b.scale(&half) - &b11.scale(&half));
    assert_eq!(c2.idempotent(c2.class_of(one, one).unwrap()), b11.scale(&half));

    let d8 = SliceRing::new(g("dihedral:8"));
    let marks = d8.marks();
    let top = d8.top_class();
    let free = d8.class_of(0, 0).unwrap();
    for c in 0..d8.len() {
        let k = d8.class(c);
        assert_eq!(marks.get(c, top), 1);
        assert_eq!(marks.get(top, c), u64::from(c == top));
        assert_eq!(marks.get(free, c), (8 / d8.lattice().order_of(k.s)) as u64);
    }
    let ones = d8.to_mark_vector(&d8.one()).unwrap();
    assert!(ones.iter().all(|x| *x == qi(1)));
}

#[test]
fn restriction_of_c2_to_trivial() {
    let c2 = g("cyclic:2");
    let ring = SliceRing::new(c2.clone());
    let l = ring.lattice();
    let emb = Embedding::of_subgroup(&c2, &c2.trivial_subgroup());
    let r1 = SliceRing::new(emb.sub().clone());
    let a = ring.basis(ring.class_of(l.top(), l.trivial()).unwrap());
    let got = restriction(&a, &emb, &r1, Path::Checked).unwrap();
    assert_eq!(got, r1.one().scale(&qi(2)));
    let back = induction(&r1.one(), &emb, &ring, Path::Checked).unwrap();
    assert_eq!(back, ring.basis(ring.class_of(l.trivial(), l.trivial()).unwrap()));
}

#[test]
fn deflation_of_c2_idempotents() {
    let c2 = g("cyclic:2");
    let ring = SliceRing::new(c2.clone());
    let l = ring.lattice().clone();
    let qm = QuotientMap::new(&c2, &c2.whole()).unwrap();
    let r1 = SliceRing::new(qm.quotient().clone());
    let x = ring.idempotent(ring.class_of(l.top(), l.trivial()).unwrap());
    assert!(deflation(&x, &qm, &r1, Path::Checked).unwrap().is_zero());
    let y = ring.idempotent(ring.top_class());
    let m = m_slice(&l, l.top(), l.top()).unwrap();
    assert_eq!(deflation(&y, &qm, &r1, Path::Checked).unwrap(), r1.one().scale(&m));
}

#[test]
fn constants_examples() {
    let c3 = SubgroupLattice::new(g("cyclic:3"));
    assert_eq!(m_slice(&c3, c3.trivial(), c3.top()).unwrap(), qi(0));
    assert_eq!(m_slice(&c3, c3.trivial(), c3.trivial()).unwrap(), qi(1));
    let e = SubgroupLattice::new(g("elab:2^3"));
    let n = order_index(&e, 4);
    assert_eq!(m_circ(&e, e.trivial(), n).unwrap(), 3);
    assert_eq!(m_circ(&e, e.top(), n).unwrap(), 1);
    assert_eq!(m_circ(&e, e.trivial(), e.frattini()).unwrap(), 1);
    assert_eq!(m_classical(&e, order_index(&e, 2)).unwrap(), qi(-1));
    assert_eq!(m_classical(&e, e.trivial()).unwrap(), qi(1));
    let v = SubgroupLattice::new(g("elab:3^2"));
    for n in v.normal_subgroups() {
        if n != v.trivial() {
            assert_eq!(m_classical(&v, n).unwrap(), qi(0));
        }
    }
    let (a, b) = complement_count_check(&v, order_index(&v, 3)).unwrap();
    assert_eq!((a.clone(), b), (q(-2, 3), q(-2, 3)));
    let c4 = SubgroupLattice::new(g("cyclic:4"));
    assert_eq!(complement_count_check(&c4, order_index(&c4, 2)).unwrap().0, q(1, 2));
    assert!(complement_count_check(&c4, c4.top()).is_err());
    assert!(is_b_group(&SubgroupLattice::new(g("cyclic:1"))));
    assert!(is_b_group(&v));
    assert!(!is_b_group(&SubgroupLattice::new(g("cyclic:9"))));
    let e3 = SubgroupLattice::new(g("elab:3^3"));
    assert!(is_t_slice(&e3, e3.top(), order_index(&e3, 9)).unwrap());
    assert!(!is_t_slice(&v, v.top(), order_index(&v, 3)).unwrap());
}

#[test]
fn ideal_examples() {
    assert_eq!(ideal_dimension(&SliceRing::new(g("heis:3")), SliceFamily::J3), 4);
    assert_eq!(ideal_dimension(&SliceRing::new(g("cyclic:1")), SliceFamily::J1), 0);
    let u = GroupUniverse::new(3, 27).unwrap();
    assert_eq!(u.num_groups(), 9);
    let full = u.minimal_groups(SliceFamily::Full);
    assert_eq!(full.iter().map(|&i| u.group(i).order()).collect::<Vec<_>>(), vec![1]);
    let c = g("cyclic:2");
    assert!(u.identify(&c, &c.whole(), &c.trivial_subgroup()).is_err());
}

#[test]
fn universe_rejects_large_bounds() {
    assert!(GroupUniverse::new(3, 81).is_err());
    assert!(GroupUniverse::new(6, 6).is_err());
    let q8 = Arc::new(FiniteGroup::quaternion());
    let u = GroupUniverse::new(2, 8).unwrap();
    let id = u.identify(&q8, &q8.whole(), &q8.whole()).unwrap();
    assert_eq!(u.group(u.slice(id).group).label(), q8.label());
}
