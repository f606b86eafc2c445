//! Finite groups given by explicit multiplication tables.
//!
//! Elements are indices `0..order`. Every constructor closes a generating
//! set breadth-first from the identity, so the identity is always element 0
//! and indexing is reproducible across runs.

mod hom;
mod iso;
mod lattice;
mod spec;
mod subgroup;

pub use hom::{Embedding, Hom, Isomorphism, QuotientMap};
pub use iso::{automorphisms, find_isomorphism, is_isomorphic};
pub use lattice::{count_subgroups_by_subsets, SubgroupLattice};
pub use spec::{parse_group_spec, parse_permutation_list};
pub use subgroup::Subgroup;

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;
use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Default upper bound on group orders.
pub const DEFAULT_ORDER_CAP: usize = 256;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    label: String,
    order: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    gens: Vec<usize>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.label, self.order)
    }
}

impl FiniteGroup {
    /// Builds a group from a full multiplication table, checking the group axioms.
    pub fn from_table(label: impl Into<String>, order: usize, table: Vec<u32>) -> Result<Self> {
        if order == 0 || table.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "table of length {} for order {order}",
                table.len()
            )));
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(Error::InvalidTable("entry out of range".into()));
        }
        let mut inv = vec![u32::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] == 0 {
                    inv[a] = b as u32;
                }
            }
        }
        if inv.contains(&u32::MAX) {
            return Err(Error::InvalidTable("missing inverse (or identity is not 0)".into()));
        }
        let mut g = FiniteGroup {
            label: label.into(),
            order,
            table,
            inv,
            gens: Vec::new(),
        };
        g.check_axioms()?;
        g.gens = g.small_generating_set();
        Ok(g)
    }

    /// Closes `gens` under `mul` breadth-first from `identity`, right-multiplying by
    /// the generators in the given order.
    pub fn from_closure<T, F>(
        label: impl Into<String>,
        identity: T,
        gens: &[T],
        mul: F,
        cap: usize,
    ) -> Result<Self>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut index: HashMap<T, usize> = HashMap::new();
        let mut elems = vec![identity.clone()];
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let y = mul(&elems[i], g);
                if !index.contains_key(&y) {
                    if elems.len() >= cap {
                        return Err(Error::OrderCap {
                            order: elems.len() + 1,
                            cap,
                        });
                    }
                    index.insert(y.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(y);
                }
            }
        }
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let y = mul(&elems[a], &elems[b]);
                table[a * n + b] = *index.get(&y).ok_or_else(|| {
                    Error::InvalidTable("generators do not close under multiplication".into())
                })? as u32;
            }
        }
        let mut g = Self::from_table(label, n, table)?;
        let mut gen_idx: Vec<usize> = gens.iter().map(|x| index[x]).filter(|&i| i != 0).collect();
        gen_idx.dedup();
        g.gens = gen_idx;
        Ok(g)
    }

    pub fn trivial() -> Self {
        Self::from_table("1", 1, vec![0]).expect("trivial group")
    }

    pub fn cyclic(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("cyclic group of order 0".into()));
        }
        if n > cap {
            return Err(Error::OrderCap { order: n, cap });
        }
        Self::from_closure(format!("C{n}"), 0usize, &[1 % n], |a, b| (a + b) % n, cap)
    }

    /// Abelian group with the given invariant factors (cyclic orders).
    pub fn abelian(factors: &[usize], cap: usize) -> Result<Self> {
        if factors.contains(&0) {
            return Err(Error::InvalidParameter("factor of order 0".into()));
        }
        let order = factors.iter().try_fold(1usize, |acc, &f| acc.checked_mul(f));
        match order {
            Some(o) if o <= cap => {}
            Some(o) => return Err(Error::OrderCap { order: o, cap }),
            None => return Err(Error::OrderCap { order: usize::MAX, cap }),
        }
        let k = factors.len();
        let gens: Vec<Vec<usize>> = (0..k)
            .filter(|&i| factors[i] > 1)
            .map(|i| (0..k).map(|j| usize::from(i == j)).collect())
            .collect();
        let label = if factors.is_empty() {
            "1".to_string()
        } else {
            factors.iter().map(|f| format!("C{f}")).collect::<Vec<_>>().join("x")
        };
        Self::from_closure(label, vec![0; k], &gens, |a, b| {
            a.iter()
                .zip(b)
                .zip(factors)
                .map(|((x, y), m)| (x + y) % m)
                .collect()
        }, cap)
    }

    pub fn elementary_abelian(p: usize, rank: usize, cap: usize) -> Result<Self> {
        require_prime(p)?;
        let mut g = Self::abelian(&vec![p; rank], cap)?;
        g.label = match rank {
            0 => "1".into(),
            1 => format!("C{p}"),
            _ => format!("C{p}^{rank}"),
        };
        Ok(g)
    }

    /// Dihedral group of total order `order` (so `order / 2` rotations).
    pub fn dihedral(order: usize, cap: usize) -> Result<Self> {
        if order < 2 || !order.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "dihedral group needs even total order, got {order}"
            )));
        }
        if order > cap {
            return Err(Error::OrderCap { order, cap });
        }
        let n = order / 2;
        // (k, e) stands for r^k s^e
        let mul = move |a: &(usize, usize), b: &(usize, usize)| {
            let rot = if a.1 == 0 { b.0 } else { (n - b.0) % n };
            ((a.0 + rot) % n, a.1 ^ b.1)
        };
        let mut gens = vec![(1 % n, 0)];
        if n == 1 {
            gens.clear();
        }
        gens.push((0, 1));
        Self::from_closure(format!("D{order}"), (0, 0), &gens, mul, cap)
    }

    /// `C_{p^2} ⋊ C_p` with `b a b^-1 = a^(1+p)`.
    pub fn modular(p: usize, cap: usize) -> Result<Self> {
        require_prime(p)?;
        let order = p * p * p;
        if order > cap {
            return Err(Error::OrderCap { order, cap });
        }
        let m = p * p;
        let mul = move |x: &(usize, usize), y: &(usize, usize)| {
            // a^i b^j a^k b^l = a^(i + k(1+p)^j) b^(j+l)
            let twist = pow_mod(1 + p, x.1, m);
            ((x.0 + y.0 * twist) % m, (x.1 + y.1) % p)
        };
        Self::from_closure(format!("M{order}"), (0, 0), &[(1, 0), (0, 1)], mul, cap)
    }

    /// Upper unitriangular 3×3 matrices over the field with `p` elements.
    pub fn heisenberg(p: usize, cap: usize) -> Result<Self> {
        require_prime(p)?;
        let order = p * p * p;
        if order > cap {
            return Err(Error::OrderCap { order, cap });
        }
        // (x, y, z) is [[1, x, z], [0, 1, y], [0, 0, 1]]
        let mul = move |a: &(usize, usize, usize), b: &(usize, usize, usize)| {
            (
                (a.0 + b.0) % p,
                (a.1 + b.1) % p,
                (a.2 + b.2 + a.0 * b.1) % p,
            )
        };
        Self::from_closure(
            format!("X{order}"),
            (0, 0, 0),
            &[(1, 0, 0), (0, 1, 0)],
            mul,
            cap,
        )
    }

    /// The quaternion group of order 8, as a regular permutation group.
    pub fn quaternion() -> Self {
        let gens = vec![vec![1, 3, 5, 6, 2, 7, 0, 4], vec![2, 4, 3, 7, 6, 1, 5, 0]];
        let mut g = Self::from_permutations(&gens, DEFAULT_ORDER_CAP).expect("Q8");
        g.label = "Q8".into();
        g
    }

    /// Closure of permutations of `0..degree`; `mul(a, b)` applies `b` first.
    pub fn from_permutations(gens: &[Vec<usize>], cap: usize) -> Result<Self> {
        let degree = gens.iter().map(Vec::len).max().unwrap_or(0);
        let mut padded = Vec::with_capacity(gens.len());
        for (k, g) in gens.iter().enumerate() {
            let mut p: Vec<usize> = g.clone();
            p.extend(g.len()..degree);
            let mut seen = vec![false; degree];
            for &x in &p {
                if x >= degree || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidParameter(format!(
                        "generator {k} is not a bijection"
                    )));
                }
            }
            padded.push(p);
        }
        let id: Vec<usize> = (0..degree).collect();
        Self::from_closure(
            "perm",
            id,
            &padded,
            |a, b| b.iter().map(|&x| a[x]).collect(),
            cap,
        )
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup, cap: usize) -> Result<Self> {
        let order = a.order * b.order;
        if order > cap {
            return Err(Error::OrderCap { order, cap });
        }
        let mut gens: Vec<(usize, usize)> = a.gens.iter().map(|&g| (g, 0)).collect();
        gens.extend(b.gens.iter().map(|&h| (0, h)));
        Self::from_closure(
            format!("{}x{}", a.label, b.label),
            (0, 0),
            &gens,
            |x, y| (a.mul(x.0, y.0), b.mul(x.1, y.1)),
            cap,
        )
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order)
            .map(|x| self.element_order(x))
            .fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|x| self.element_order(x) == self.order)
    }

    pub fn center(&self) -> Subgroup {
        let members = (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z)));
        self.subgroup_from_members(members)
    }

    pub fn whole(&self) -> Subgroup {
        self.subgroup_from_members(0..self.order)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        self.generate(&[])
    }

    /// Exhaustive check of associativity, identity and inverses.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::InvalidTable(format!("0 is not neutral for {a}")));
            }
            if self.mul(a, self.inv(a)) != 0 || self.mul(self.inv(a), a) != 0 {
                return Err(Error::InvalidTable(format!("bad inverse for {a}")));
            }
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidTable(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut bits = BitSet::new(self.order);
        bits.insert(0);
        let mut members = vec![0];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in gens {
                let y = self.mul(x, g);
                if bits.insert(y) {
                    members.push(y);
                }
            }
            i += 1;
        }
        let mut gens: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        Subgroup::from_parts(bits, gens)
    }

    /// Builds a subgroup from an element list known to be closed.
    pub(crate) fn subgroup_from_bits(&self, bits: BitSet) -> Subgroup {
        let mut gens = Vec::new();
        let mut covered = BitSet::new(self.order);
        covered.insert(0);
        for x in bits.iter() {
            if !covered.contains(x) {
                gens.push(x);
                covered = self.generate(&gens).bits().clone();
            }
        }
        Subgroup::from_parts(bits, gens)
    }

    /// Builds a subgroup from a member list; errors if it is not closed.
    pub fn subgroup_checked(&self, members: &[usize]) -> Result<Subgroup> {
        if members.iter().any(|&x| x >= self.order) {
            return Err(Error::InvalidParameter("element index out of range".into()));
        }
        let bits = BitSet::from_indices(self.order, members.iter().copied());
        let h = self.subgroup_from_bits(bits.clone());
        if h.bits() != &bits {
            return Err(Error::InvalidParameter("element set is not a subgroup".into()));
        }
        Ok(h)
    }

    pub(crate) fn subgroup_from_members(&self, members: impl IntoIterator<Item = usize>) -> Subgroup {
        self.subgroup_from_bits(BitSet::from_indices(self.order, members))
    }

    /// `g H g^-1`.
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: usize) -> Subgroup {
        let bits = BitSet::from_indices(self.order, h.members().iter().map(|&x| self.conjugate(g, x)));
        let gens = h.generators().iter().map(|&x| self.conjugate(g, x)).collect();
        Subgroup::from_parts(bits, gens)
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        self.subgroup_from_members((0..self.order).filter(|&g| {
            h.generators()
                .iter()
                .all(|&x| h.contains(self.conjugate(g, x)))
        }))
    }

    pub fn is_normal(&self, n: &Subgroup) -> bool {
        self.gens.iter().all(|&g| {
            n.generators()
                .iter()
                .all(|&x| n.contains(self.conjugate(g, x)))
        })
    }

    /// Subgroup generated by the union of two subgroups.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = a.generators().iter().chain(b.generators()).copied().collect();
        self.generate(&gens)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        self.subgroup_from_bits(a.bits().intersection(b.bits()))
    }

    /// Representatives of the double cosets `A g B`, each the smallest element of its class.
    pub fn double_cosets(&self, a: &Subgroup, b: &Subgroup) -> Vec<usize> {
        double_coset_reps(self, a.members(), b.members())
    }

    /// Greedy generating set: add the first element not yet covered.
    fn small_generating_set(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (1..self.order).collect();
        by_order.sort_by_key(|&x| std::cmp::Reverse(self.element_order(x)));
        let mut gens = Vec::new();
        let mut covered = BitSet::new(self.order);
        covered.insert(0);
        for x in by_order {
            if covered.len() == self.order {
                break;
            }
            if !covered.contains(x) {
                gens.push(x);
                covered = self.generate(&gens).bits().clone();
            }
        }
        gens
    }
}

pub(crate) fn double_coset_reps(g: &FiniteGroup, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut covered = BitSet::new(g.order());
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if covered.contains(x) {
            continue;
        }
        reps.push(x);
        for &s in a {
            let sx = g.mul(s, x);
            for &t in b {
                covered.insert(g.mul(sx, t));
            }
        }
    }
    reps
}

pub(crate) fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn require_prime(p: usize) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{p} is not prime")))
    }
}

fn pow_mod(base: usize, exp: usize, m: usize) -> usize {
    (0..exp).fold(1 % m, |acc, _| acc * base % m)
}

/// Shared handle used throughout the crate.
pub type GroupRef = Arc<FiniteGroup>;

/// Whether two handles denote the same group table.
pub fn same_group(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    std::ptr::eq(a, b) || (a.order == b.order && a.table == b.table)
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = DEFAULT_ORDER_CAP;

    #[test]
    fn trivial_and_cyclic() {
        let g = FiniteGroup::cyclic(1, CAP).unwrap();
        assert_eq!(g.order(), 1);
        let c6 = FiniteGroup::cyclic(6, CAP).unwrap();
        assert!(c6.is_cyclic());
        assert_eq!(c6.exponent(), 6);
        assert!(matches!(
            FiniteGroup::cyclic(300, CAP),
            Err(Error::OrderCap { .. })
        ));
    }

    #[test]
    fn heisenberg_three() {
        let x = FiniteGroup::heisenberg(3, CAP).unwrap();
        assert_eq!(x.order(), 27);
        assert_eq!(x.exponent(), 3);
        assert_eq!(x.center().order(), 3);
        assert!(!x.is_abelian());
    }

    #[test]
    fn modular_group() {
        let m = FiniteGroup::modular(3, CAP).unwrap();
        assert_eq!(m.order(), 27);
        assert_eq!(m.exponent(), 9);
        assert!(!m.is_abelian());
        assert_eq!(m.center().order(), 3);
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = FiniteGroup::quaternion();
        assert_eq!(q.order(), 8);
        let involutions = (0..8).filter(|&x| q.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
        assert!(!q.is_abelian());
    }

    #[test]
    fn dihedral_rejects_odd() {
        assert!(matches!(
            FiniteGroup::dihedral(7, CAP),
            Err(Error::InvalidParameter(_))
        ));
        assert_eq!(FiniteGroup::dihedral(2, CAP).unwrap().order(), 2);
        let v4 = FiniteGroup::dihedral(4, CAP).unwrap();
        assert!(v4.is_abelian() && !v4.is_cyclic());
    }

    #[test]
    fn permutation_closure() {
        let c4 = FiniteGroup::from_permutations(&[vec![1, 2, 3, 0]], CAP).unwrap();
        assert_eq!(c4.order(), 4);
        assert!(c4.is_cyclic());
        let d8 = FiniteGroup::from_permutations(&[vec![1, 2, 3, 0], vec![0, 3, 2, 1]], CAP).unwrap();
        assert_eq!(d8.order(), 8);
        assert!(!d8.is_abelian());
        assert_eq!(FiniteGroup::from_permutations(&[], CAP).unwrap().order(), 1);
        assert!(FiniteGroup::from_permutations(&[vec![0, 0]], CAP).is_err());
    }

    #[test]
    fn closure_respects_cap() {
        let gens = [vec![1, 2, 3, 4, 0], vec![1, 0, 2, 3, 4]];
        assert!(matches!(
            FiniteGroup::from_permutations(&gens, 100),
            Err(Error::OrderCap { .. })
        ));
    }

    #[test]
    fn double_cosets_partition() {
        let d8 = FiniteGroup::dihedral(8, CAP).unwrap();
        let whole = d8.whole();
        assert_eq!(d8.double_cosets(&whole, &whole), vec![0]);
        let one = d8.trivial_subgroup();
        assert_eq!(d8.double_cosets(&one, &one).len(), 8);
    }

    #[test]
    fn deterministic_indexing() {
        let a = FiniteGroup::heisenberg(3, CAP).unwrap();
        let b = FiniteGroup::heisenberg(3, CAP).unwrap();
        assert!(same_group(&a, &b));
    }
}
