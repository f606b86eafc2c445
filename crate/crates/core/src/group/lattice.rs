use std::collections::HashMap;

use super::{FiniteGroup, GroupRef, Subgroup};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// All subgroups of a group with containment, Möbius values and the
/// conjugation action precomputed.
///
/// Subgroups are indexed in order of `(order, sorted members)`, so index 0 is
/// the trivial subgroup and the last index is the whole group. Because
/// conjugate subgroups have equal order, the smallest index in a conjugacy
/// class is also its lexicographically smallest member set.
pub struct SubgroupLattice {
    group: GroupRef,
    subgroups: Vec<Subgroup>,
    index: HashMap<BitSet, usize>,
    above: Vec<BitSet>,
    below: Vec<BitSet>,
    mobius: Vec<i64>,
    meet: Vec<u32>,
    conj: Vec<u32>,
    class_of: Vec<usize>,
    cyclic: Vec<bool>,
}

impl std::fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SubgroupLattice({}, {} subgroups)",
            self.group.label(),
            self.subgroups.len()
        )
    }
}

impl SubgroupLattice {
    pub fn new(group: GroupRef) -> Self {
        let g = &*group;
        let mut found: HashMap<BitSet, usize> = HashMap::new();
        let mut list: Vec<Subgroup> = Vec::new();
        for x in 0..g.order() {
            let h = g.generate(&[x]);
            if !found.contains_key(h.bits()) {
                found.insert(h.bits().clone(), list.len());
                list.push(h);
            }
        }
        // close under pairwise joins
        let mut i = 0;
        while i < list.len() {
            for j in 0..i {
                if list[j].is_subgroup_of(&list[i]) || list[i].is_subgroup_of(&list[j]) {
                    continue;
                }
                let h = g.join(&list[i], &list[j]);
                if !found.contains_key(h.bits()) {
                    found.insert(h.bits().clone(), list.len());
                    list.push(h);
                }
            }
            i += 1;
        }
        list.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.members().cmp(b.members()))
        });
        let n = list.len();
        let index: HashMap<BitSet, usize> = list
            .iter()
            .enumerate()
            .map(|(i, h)| (h.bits().clone(), i))
            .collect();

        let mut above = vec![BitSet::new(n); n];
        let mut below = vec![BitSet::new(n); n];
        for a in 0..n {
            for b in a..n {
                if list[a].is_subgroup_of(&list[b]) {
                    above[a].insert(b);
                    below[b].insert(a);
                }
            }
        }

        let mut mobius = vec![0i64; n * n];
        for u in 0..n {
            mobius[u * n + u] = 1;
            for v in above[u].iter().filter(|&v| v != u) {
                let interval = above[u].intersection(&below[v]);
                let s: i64 = interval
                    .iter()
                    .filter(|&k| k != v)
                    .map(|k| mobius[u * n + k])
                    .sum();
                mobius[u * n + v] = -s;
            }
        }

        let mut meet = vec![0u32; n * n];
        for a in 0..n {
            for b in a..n {
                let bits = list[a].bits().intersection(list[b].bits());
                let m = index[&bits] as u32;
                meet[a * n + b] = m;
                meet[b * n + a] = m;
            }
        }

        let mut conj = vec![0u32; g.order() * n];
        for x in 0..g.order() {
            for (i, h) in list.iter().enumerate() {
                let bits = BitSet::from_indices(
                    g.order(),
                    h.members().iter().map(|&y| g.conjugate(x, y)),
                );
                conj[x * n + i] = index[&bits] as u32;
            }
        }
        let mut class_of = vec![usize::MAX; n];
        for i in 0..n {
            if class_of[i] == usize::MAX {
                for x in 0..g.order() {
                    class_of[conj[x * n + i] as usize] = i;
                }
            }
        }
        let cyclic = list
            .iter()
            .map(|h| h.members().iter().any(|&x| g.element_order(x) == h.order()))
            .collect();

        SubgroupLattice {
            group,
            subgroups: list,
            index,
            above,
            below,
            mobius,
            meet,
            conj,
            class_of,
            cyclic,
        }
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn order_of(&self, i: usize) -> usize {
        self.subgroups[i].order()
    }

    pub fn trivial(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.index.get(h.bits()).copied()
    }

    pub fn index_of_bits(&self, bits: &BitSet) -> Option<usize> {
        self.index.get(bits).copied()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.above[a].contains(b)
    }

    /// Indices of subgroups containing `a` (including `a`).
    pub fn above(&self, a: usize) -> &BitSet {
        &self.above[a]
    }

    /// Indices of subgroups of `a` (including `a`).
    pub fn below(&self, a: usize) -> &BitSet {
        &self.below[a]
    }

    /// Subgroups `K` with `a <= K <= b`.
    pub fn interval(&self, a: usize, b: usize) -> impl Iterator<Item = usize> + '_ {
        self.above[a].intersection(&self.below[b]).iter().collect::<Vec<_>>().into_iter()
    }

    /// Möbius function of the subgroup poset.
    pub fn moebius(&self, u: usize, v: usize) -> Result<i64> {
        if !self.leq(u, v) {
            return Err(Error::NotContained(format!(
                "subgroup {u} is not contained in subgroup {v}"
            )));
        }
        Ok(self.mu(u, v))
    }

    /// Unchecked Möbius value; zero when `u` is not below `v`.
    #[inline]
    pub fn mu(&self, u: usize, v: usize) -> i64 {
        self.mobius[u * self.subgroups.len() + v]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.above[a]
            .first_common(&self.above[b])
            .expect("whole group contains everything")
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.subgroups.len() + b] as usize
    }

    /// Index of `g H_i g^-1`.
    #[inline]
    pub fn conj(&self, g: usize, i: usize) -> usize {
        self.conj[g * self.subgroups.len() + i] as usize
    }

    /// Smallest index in the conjugacy class of subgroup `i`.
    pub fn class_rep(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_reps(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.class_of[i] == i).collect()
    }

    pub fn is_cyclic(&self, i: usize) -> bool {
        self.cyclic[i]
    }

    pub fn normalizer_elements(&self, i: usize) -> Vec<usize> {
        (0..self.group.order())
            .filter(|&g| self.conj(g, i) == i)
            .collect()
    }

    pub fn normalizer(&self, i: usize) -> usize {
        let bits = BitSet::from_indices(self.group.order(), self.normalizer_elements(i));
        self.index[&bits]
    }

    /// `|N_T(S)|` where `T = H_t` normalises-or-not the subgroup `H_s`.
    pub fn normalizer_order_in(&self, t: usize, s: usize) -> usize {
        self.subgroups[t]
            .members()
            .iter()
            .filter(|&&g| self.conj(g, s) == s)
            .count()
    }

    /// Whether `H_n` is normal in `H_t` (requires `n <= t` for the usual meaning).
    pub fn is_normal_in(&self, n: usize, t: usize) -> bool {
        self.subgroups[t]
            .generators()
            .iter()
            .all(|&g| self.conj(g, n) == n)
    }

    pub fn is_normal(&self, n: usize) -> bool {
        self.is_normal_in(n, self.top())
    }

    pub fn normal_subgroups_of(&self, t: usize) -> Vec<usize> {
        self.below[t]
            .iter()
            .filter(|&n| self.is_normal_in(n, t))
            .collect()
    }

    pub fn normal_subgroups(&self) -> Vec<usize> {
        self.normal_subgroups_of(self.top())
    }

    /// Maximal subgroups of `H_t`.
    pub fn maximal_subgroups_of(&self, t: usize) -> Vec<usize> {
        self.below[t]
            .iter()
            .filter(|&m| m != t && self.interval(m, t).count() == 2)
            .collect()
    }

    /// Frattini subgroup of `H_t`: the intersection of its maximal subgroups.
    pub fn frattini_of(&self, t: usize) -> usize {
        self.maximal_subgroups_of(t)
            .into_iter()
            .fold(t, |acc, m| self.meet(acc, m))
    }

    pub fn frattini(&self) -> usize {
        self.frattini_of(self.top())
    }

    /// Double coset representatives `H_a \ G / H_b`.
    pub fn double_cosets(&self, a: usize, b: usize) -> Vec<usize> {
        super::double_coset_reps(
            &self.group,
            self.subgroups[a].members(),
            self.subgroups[b].members(),
        )
    }

    pub fn subgroup_generated(&self, elems: &[usize]) -> usize {
        let h = self.group.generate(elems);
        self.index[h.bits()]
    }
}

/// Brute-force subgroup count by filtering every subset; only for tiny groups.
pub fn count_subgroups_by_subsets(g: &FiniteGroup) -> usize {
    let n = g.order();
    assert!(n <= 16, "subset enumeration is exponential");
    (0u32..(1 << n))
        .filter(|mask| mask & 1 == 1)
        .filter(|&mask| {
            let has = |x: usize| mask & (1 << x) != 0;
            (0..n).filter(|&a| has(a)).all(|a| {
                has(g.inv(a)) && (0..n).filter(|&b| has(b)).all(|b| has(g.mul(a, b)))
            })
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{QuotientMap, DEFAULT_ORDER_CAP as CAP};
    use std::sync::Arc;

    fn lat(g: FiniteGroup) -> SubgroupLattice {
        SubgroupLattice::new(Arc::new(g))
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(lat(FiniteGroup::cyclic(5, CAP).unwrap()).len(), 2);
        assert_eq!(lat(FiniteGroup::elementary_abelian(2, 2, CAP).unwrap()).len(), 5);
        assert_eq!(lat(FiniteGroup::elementary_abelian(2, 3, CAP).unwrap()).len(), 16);
        assert_eq!(lat(FiniteGroup::dihedral(8, CAP).unwrap()).len(), 10);
        assert_eq!(lat(FiniteGroup::quaternion()).len(), 6);
        assert_eq!(lat(FiniteGroup::elementary_abelian(3, 3, CAP).unwrap()).len(), 28);
    }

    #[test]
    fn moebius_values() {
        let c3 = lat(FiniteGroup::cyclic(3, CAP).unwrap());
        assert_eq!(c3.moebius(0, 1).unwrap(), -1);
        assert_eq!(c3.moebius(1, 1).unwrap(), 1);
        for p in [2, 3] {
            let l = lat(FiniteGroup::elementary_abelian(p, 2, CAP).unwrap());
            assert_eq!(l.moebius(0, l.top()).unwrap(), p as i64);
        }
        assert!(c3.moebius(1, 0).is_err());
    }

    #[test]
    fn frattini_examples() {
        let v = lat(FiniteGroup::elementary_abelian(3, 2, CAP).unwrap());
        assert_eq!(v.order_of(v.frattini()), 1);
        let c4 = lat(FiniteGroup::cyclic(4, CAP).unwrap());
        assert_eq!(c4.order_of(c4.frattini()), 2);
        let d8 = lat(FiniteGroup::dihedral(8, CAP).unwrap());
        assert_eq!(d8.order_of(d8.frattini()), 2);
    }

    #[test]
    fn frattini_quotient_has_trivial_frattini() {
        for g in [
            FiniteGroup::cyclic(8, CAP).unwrap(),
            FiniteGroup::dihedral(8, CAP).unwrap(),
            FiniteGroup::quaternion(),
            FiniteGroup::modular(3, CAP).unwrap(),
            FiniteGroup::heisenberg(3, CAP).unwrap(),
            FiniteGroup::cyclic(12, CAP).unwrap(),
        ] {
            let g = Arc::new(g);
            let l = SubgroupLattice::new(g.clone());
            let phi = l.frattini();
            assert!(l.is_normal(phi));
            let q = QuotientMap::new(&g, l.subgroup(phi)).unwrap();
            let ql = SubgroupLattice::new(q.quotient().clone());
            assert_eq!(ql.order_of(ql.frattini()), 1, "{}", g.label());
        }
    }
}
