//! The slice Burnside ring of a finite group over the rationals.
//!
//! Basis elements are conjugacy classes of slices `(T, S)`, `S <= T <= G`.
//! Classes are ordered by `(|T|, |S|, t, s)` where `t`, `s` are lattice
//! indices, which makes the mark matrix upper triangular with diagonal
//! entries `|N_G(T,S)| / |S|`.

mod element;
mod marks;

pub use element::SliceElement;
pub use marks::MarkMatrix;

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{same_group, GroupRef, Subgroup, SubgroupLattice};
use crate::gset::{hom_count, GSetMorphism};
use crate::rational::{qi, Q};

static NEXT_ID: AtomicU64 = AtomicU64::new(0);

/// A slice class representative, as indices into the subgroup lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SliceClass {
    pub t: usize,
    pub s: usize,
}

/// JSON form of a slice: member lists of `T` and `S`.
#[derive(Serialize)]
pub struct SliceJson {
    #[serde(rename = "T")]
    pub t: Vec<usize>,
    #[serde(rename = "S")]
    pub s: Vec<usize>,
}

pub struct SliceRing {
    id: u64,
    lattice: Arc<SubgroupLattice>,
    classes: Vec<SliceClass>,
    // dense (t, s) -> class, usize::MAX when s is not below t
    class_of: Vec<usize>,
    norm: Vec<usize>,
    products: Vec<OnceLock<SparseRow>>,
    marks: OnceLock<MarkMatrix>,
}

/// Nonzero structure constants of one basis product, as (class, coefficient).
type SparseRow = Box<[(u32, u32)]>;

impl std::fmt::Debug for SliceRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SliceRing({}, {} classes)",
            self.group().label(),
            self.classes.len()
        )
    }
}

impl SliceRing {
    pub fn new(group: GroupRef) -> Arc<Self> {
        Self::from_lattice(Arc::new(SubgroupLattice::new(group)))
    }

    pub fn from_lattice(lattice: Arc<SubgroupLattice>) -> Arc<Self> {
        let n = lattice.len();
        let order = lattice.group().order();
        let mut class_of = vec![usize::MAX; n * n];
        let mut reps = Vec::new();
        for t in 0..n {
            for s in lattice.below(t).iter() {
                if class_of[t * n + s] != usize::MAX {
                    continue;
                }
                let c = reps.len();
                reps.push(SliceClass { t, s });
                for g in 0..order {
                    class_of[lattice.conj(g, t) * n + lattice.conj(g, s)] = c;
                }
            }
        }
        let mut perm: Vec<usize> = (0..reps.len()).collect();
        perm.sort_by_key(|&c| {
            let r = reps[c];
            (lattice.order_of(r.t), lattice.order_of(r.s), r.t, r.s)
        });
        let mut new_index = vec![0; reps.len()];
        for (new, &old) in perm.iter().enumerate() {
            new_index[old] = new;
        }
        for c in class_of.iter_mut().filter(|c| **c != usize::MAX) {
            *c = new_index[*c];
        }
        let classes: Vec<SliceClass> = perm.iter().map(|&c| reps[c]).collect();
        let norm = classes
            .iter()
            .map(|c| {
                (0..order)
                    .filter(|&g| lattice.conj(g, c.t) == c.t && lattice.conj(g, c.s) == c.s)
                    .count()
            })
            .collect();
        let k = classes.len();
        Arc::new(SliceRing {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            lattice,
            classes,
            class_of,
            norm,
            products: (0..k * k).map(|_| OnceLock::new()).collect(),
            marks: OnceLock::new(),
        })
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn group(&self) -> &GroupRef {
        self.lattice.group()
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[SliceClass] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> SliceClass {
        self.classes[c]
    }

    /// Class of the slice `(H_t, H_s)`, or `None` if `H_s` is not below `H_t`.
    pub fn class_of(&self, t: usize, s: usize) -> Option<usize> {
        let c = self.class_of[t * self.lattice.len() + s];
        (c != usize::MAX).then_some(c)
    }

    pub fn class_of_subgroups(&self, t: &Subgroup, s: &Subgroup) -> Result<usize> {
        let ti = self
            .lattice
            .index_of(t)
            .ok_or_else(|| Error::NotASlice("T is not a subgroup of this group".into()))?;
        let si = self
            .lattice
            .index_of(s)
            .ok_or_else(|| Error::NotASlice("S is not a subgroup of this group".into()))?;
        self.class_of(ti, si)
            .ok_or_else(|| Error::NotASlice("S is not contained in T".into()))
    }

    /// The class of `(G, G)`.
    pub fn top_class(&self) -> usize {
        self.classes.len() - 1
    }

    /// `|N_G(T,S)|` for the class representative.
    pub fn normalizer_order(&self, c: usize) -> usize {
        self.norm[c]
    }

    /// Label of the form `(T=g1,g2|S=1)` built from subgroup generators.
    pub fn class_label(&self, c: usize) -> String {
        let SliceClass { t, s } = self.classes[c];
        format!("(T={}|S={})", self.gens_label(t), self.gens_label(s))
    }

    fn gens_label(&self, i: usize) -> String {
        let gens = self.lattice.subgroup(i).generators();
        if gens.is_empty() {
            "1".into()
        } else {
            gens.iter().map(|g| format!("g{g}")).collect::<Vec<_>>().join(",")
        }
    }

    pub fn class_json(&self, c: usize) -> SliceJson {
        let SliceClass { t, s } = self.classes[c];
        SliceJson {
            t: self.lattice.subgroup(t).members().to_vec(),
            s: self.lattice.subgroup(s).members().to_vec(),
        }
    }

    /// Whether the class has cyclic `S` (membership data for families).
    pub fn s_cyclic(&self, c: usize) -> bool {
        self.lattice.is_cyclic(self.classes[c].s)
    }

    /// `⟨T,S⟩·⟨Y,X⟩` as `(class, multiplicity)` pairs, sorted by class.
    pub fn basis_mul(&self, a: usize, b: usize) -> &[(u32, u32)] {
        self.products[a * self.classes.len() + b].get_or_init(|| self.basis_mul_uncached(a, b))
    }

    /// Sum over `g ∈ [S\G/X]` of `⟨T ∩ gYg⁻¹, S ∩ gXg⁻¹⟩`.
    fn basis_mul_uncached(&self, a: usize, b: usize) -> Box<[(u32, u32)]> {
        let l = &*self.lattice;
        let SliceClass { t, s } = self.classes[a];
        let SliceClass { t: y, s: x } = self.classes[b];
        let mut acc: BTreeMap<u32, u32> = BTreeMap::new();
        for g in l.double_cosets(s, x) {
            let t2 = l.meet(t, l.conj(g, y));
            let s2 = l.meet(s, l.conj(g, x));
            let c = self.class_of(t2, s2).expect("intersection is a slice");
            *acc.entry(c as u32).or_default() += 1;
        }
        acc.into_iter().collect()
    }

    pub fn zero(self: &Arc<Self>) -> SliceElement {
        SliceElement::zero(self)
    }

    /// The unit `⟨G,G⟩`.
    pub fn one(self: &Arc<Self>) -> SliceElement {
        self.basis(self.top_class())
    }

    pub fn basis(self: &Arc<Self>, c: usize) -> SliceElement {
        SliceElement::from_coeffs(self, [(c, Q::one())])
    }

    /// The canonical projection `G/S -> G/T` of a class representative.
    pub fn projection(&self, c: usize) -> GSetMorphism {
        let SliceClass { t, s } = self.classes[c];
        GSetMorphism::canonical_projection(
            self.group(),
            self.lattice.subgroup(s),
            self.lattice.subgroup(t),
        )
        .expect("class representative is a slice")
    }

    /// Mark table computed once by counting commutative squares between projections.
    pub fn marks(&self) -> &MarkMatrix {
        self.marks.get_or_init(|| {
            let projections: Vec<GSetMorphism> = (0..self.len()).map(|c| self.projection(c)).collect();
            let n = self.len();
            let mut entries = vec![0u64; n * n];
            for r in 0..n {
                for c in r..n {
                    // entries below the diagonal vanish by the class ordering
                    entries[r * n + c] =
                        hom_count(&projections[r], &projections[c]).expect("same group");
                }
            }
            MarkMatrix::new(n, entries, (0..n).map(|c| self.class_label(c)).collect())
        })
    }

    /// `φ_{T,S}(⟨V,U⟩)` as `#{xU : S <= xUx⁻¹, T <= xVx⁻¹}`, an independent count.
    pub fn mark_by_cosets(&self, row: usize, col: usize) -> u64 {
        let l = &*self.lattice;
        let SliceClass { t, s } = self.classes[row];
        let SliceClass { t: v, s: u } = self.classes[col];
        let hits = (0..self.group().order())
            .filter(|&x| l.leq(s, l.conj(x, u)) && l.leq(t, l.conj(x, v)))
            .count();
        (hits / l.order_of(u)) as u64
    }

    pub fn mark(&self, row: usize, a: &SliceElement) -> Result<Q> {
        self.check(a)?;
        let m = self.marks();
        Ok(a
            .terms()
            .map(|(c, x)| x * qi(m.get(row, c) as i64))
            .fold(Q::zero(), |acc, y| acc + y))
    }

    pub fn to_mark_vector(&self, a: &SliceElement) -> Result<Vec<Q>> {
        self.check(a)?;
        let m = self.marks();
        let mut v = vec![Q::zero(); self.len()];
        for (c, x) in a.terms() {
            for (r, vr) in v.iter_mut().enumerate().take(c + 1) {
                let e = m.get(r, c);
                if e != 0 {
                    *vr += x * qi(e as i64);
                }
            }
        }
        Ok(v)
    }

    pub fn from_mark_vector(self: &Arc<Self>, v: &[Q]) -> Result<SliceElement> {
        if v.len() != self.len() {
            return Err(Error::InvalidParameter(format!(
                "mark vector of length {} for {} classes",
                v.len(),
                self.len()
            )));
        }
        let coeffs = self.marks().solve(v)?;
        Ok(SliceElement::from_coeffs(
            self,
            coeffs.into_iter().enumerate().filter(|(_, x)| !x.is_zero()),
        ))
    }

    /// `ξ_{T,S} = (1/|N_G(T,S)|) Σ_{U<=S<=V<=T} |U| μ(U,S) μ(V,T) ⟨V,U⟩`.
    pub fn idempotent(self: &Arc<Self>, c: usize) -> SliceElement {
        let SliceClass { t, s } = self.classes[c];
        self.idempotent_raw(t, s)
    }

    /// Idempotent for an arbitrary slice `(H_t, H_s)` of the lattice, computed from that pair.
    pub fn idempotent_of(self: &Arc<Self>, t: usize, s: usize) -> Result<SliceElement> {
        if !self.lattice.leq(s, t) {
            return Err(Error::NotASlice(format!("subgroup {s} is not below {t}")));
        }
        Ok(self.idempotent_raw(t, s))
    }

    fn idempotent_raw(self: &Arc<Self>, t: usize, s: usize) -> SliceElement {
        let l = &*self.lattice;
        let norm = (0..self.group().order())
            .filter(|&g| l.conj(g, t) == t && l.conj(g, s) == s)
            .count();
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for u in l.below(s).iter() {
            let mu_us = l.mu(u, s);
            if mu_us == 0 {
                continue;
            }
            for v in l.interval(s, t) {
                let mu_vt = l.mu(v, t);
                if mu_vt == 0 {
                    continue;
                }
                let c = self.class_of(v, u).expect("U <= S <= V");
                *acc.entry(c).or_default() += l.order_of(u) as i64 * mu_us * mu_vt;
            }
        }
        let d = Q::from_integer((norm as i64).into());
        SliceElement::from_coeffs(
            self,
            acc.into_iter()
                .filter(|&(_, k)| k != 0)
                .map(|(c, k)| (c, qi(k) / &d)),
        )
    }

    /// Ring image of a morphism: sum of the stabilizer slices over source orbits.
    pub fn from_morphism(self: &Arc<Self>, f: &GSetMorphism) -> Result<SliceElement> {
        if !same_group(f.group(), self.group()) {
            return Err(Error::GroupMismatch);
        }
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for (t, s) in f.slice_decomposition() {
            *acc.entry(self.class_of_subgroups(&t, &s)?).or_default() += 1;
        }
        Ok(SliceElement::from_coeffs(
            self,
            acc.into_iter().map(|(c, k)| (c, qi(k))),
        ))
    }

    /// `⟨T,S⟩·⟨Y,X⟩` computed on G-sets: decompose the product of the two projections.
    pub fn basis_mul_oracle(self: &Arc<Self>, a: usize, b: usize) -> SliceElement {
        let f = self.projection(a).product(&self.projection(b)).expect("same group");
        self.from_morphism(&f).expect("same group")
    }

    fn check(&self, a: &SliceElement) -> Result<()> {
        if a.ring().id != self.id {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{FiniteGroup, DEFAULT_ORDER_CAP as CAP};
    use crate::rational::q;

    fn ring(g: FiniteGroup) -> Arc<SliceRing> {
        SliceRing::new(Arc::new(g))
    }

    #[test]
    fn class_counts() {
        assert_eq!(ring(FiniteGroup::trivial()).len(), 1);
        for p in [2, 3, 5] {
            assert_eq!(ring(FiniteGroup::cyclic(p, CAP).unwrap()).len(), 3);
        }
    }

    #[test]
    fn c2_products_and_idempotents() {
        let r = ring(FiniteGroup::cyclic(2, CAP).unwrap());
        // classes: (1,1), (C2,1), (C2,C2)
        assert_eq!(r.basis_mul(1, 1), &[(1, 2)]);
        let xi_top = r.idempotent(2);
        assert_eq!(xi_top, &r.basis(2) - &(&r.basis(1) * &q(1, 2)));
        let xi_mid = r.idempotent(1);
        assert_eq!(xi_mid, &(&r.basis(1) - &r.basis(0)) * &q(1, 2));
        assert_eq!(r.idempotent(0), &r.basis(0) * &q(1, 2));
    }

    #[test]
    fn marks_match_coset_count_and_triangular() {
        let r = ring(FiniteGroup::dihedral(8, CAP).unwrap());
        let m = r.marks();
        for row in 0..r.len() {
            for col in 0..r.len() {
                assert_eq!(m.get(row, col), r.mark_by_cosets(row, col));
            }
            let c = r.class(row);
            assert_eq!(
                m.get(row, row) as usize,
                r.normalizer_order(row) / r.lattice().order_of(c.s)
            );
        }
    }

    #[test]
    fn idempotents_have_indicator_marks() {
        let r = ring(FiniteGroup::quaternion());
        for c in 0..r.len() {
            let v = r.to_mark_vector(&r.idempotent(c)).unwrap();
            for (k, x) in v.iter().enumerate() {
                assert_eq!(*x, qi(i64::from(k == c)));
            }
        }
        let sum = (0..r.len()).fold(r.zero(), |acc, c| &acc + &r.idempotent(c));
        assert_eq!(sum, r.one());
    }

    #[test]
    fn product_matches_oracle() {
        let r = ring(FiniteGroup::cyclic(4, CAP).unwrap());
        for a in 0..r.len() {
            for b in 0..r.len() {
                let formula = &r.basis(a) * &r.basis(b);
                assert_eq!(formula, r.basis_mul_oracle(a, b), "{a} {b}");
            }
        }
    }

    #[test]
    fn mark_vector_round_trip() {
        let r = ring(FiniteGroup::elementary_abelian(2, 2, CAP).unwrap());
        let a = SliceElement::from_coeffs(&r, (0..r.len()).map(|c| (c, q(c as i64 - 3, 7))));
        let v = r.to_mark_vector(&a).unwrap();
        assert_eq!(r.from_mark_vector(&v).unwrap(), a);
        assert!(r.to_mark_vector(&r.one()).unwrap().iter().all(|x| x.is_one()));
    }

    #[test]
    fn mismatched_rings_rejected() {
        let a = ring(FiniteGroup::cyclic(2, CAP).unwrap());
        let b = ring(FiniteGroup::cyclic(2, CAP).unwrap());
        assert!(a.mark(0, &b.one()).is_err());
        assert!(a.one().checked_mul(&b.one()).is_err());
    }
}
