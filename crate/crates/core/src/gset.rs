//! Explicit finite G-sets and equivariant maps.
//!
//! This is the brute-force side of every check: products, restriction,
//! induction, inflation, deflation and transport are all performed on point
//! sets, and a morphism is turned back into slice data by reading off
//! stabilizers on orbit representatives.

use crate::error::{Error, Result};
use crate::group::{same_group, Embedding, GroupRef, Isomorphism, QuotientMap, Subgroup};

/// A finite set `0..n` with a left action `act[g * n + x]`.
#[derive(Clone, Debug)]
pub struct GSet {
    group: GroupRef,
    n: usize,
    act: Vec<u32>,
}

impl GSet {
    /// Builds a G-set from an action function and checks the action axioms on generators.
    pub fn new(group: GroupRef, n: usize, action: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut act = Vec::with_capacity(group.order() * n);
        for g in 0..group.order() {
            for x in 0..n {
                let y = action(g, x);
                if y >= n {
                    return Err(Error::InvalidAction(format!("point {y} out of range")));
                }
                act.push(y as u32);
            }
        }
        let set = GSet { group, n, act };
        set.check_action()?;
        Ok(set)
    }

    fn from_raw(group: GroupRef, n: usize, act: Vec<u32>) -> Self {
        debug_assert_eq!(act.len(), group.order() * n);
        GSet { group, n, act }
    }

    /// Exhaustive check of `e.x = x` and `g.(h.x) = (gh).x`.
    pub fn check_action(&self) -> Result<()> {
        let g = &self.group;
        for x in 0..self.n {
            if self.act(0, x) != x {
                return Err(Error::InvalidAction(format!("identity moves point {x}")));
            }
        }
        for a in 0..g.order() {
            for b in 0..g.order() {
                let ab = g.mul(a, b);
                for x in 0..self.n {
                    if self.act(a, self.act(b, x)) != self.act(ab, x) {
                        return Err(Error::InvalidAction(format!(
                            "not compatible with the group law at ({a}, {b}, {x})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn empty(group: &GroupRef) -> Self {
        GSet::from_raw(group.clone(), 0, Vec::new())
    }

    pub fn point(group: &GroupRef) -> Self {
        GSet::from_raw(group.clone(), 1, vec![0; group.order()])
    }

    /// Left cosets `G/S`, numbered by their smallest element (so `S` itself is point 0).
    pub fn coset_space(group: &GroupRef, s: &Subgroup) -> Self {
        let ids = coset_ids(group, s);
        let reps = first_of_each(&ids);
        let n = reps.len();
        let mut act = Vec::with_capacity(group.order() * n);
        for g in 0..group.order() {
            for &r in &reps {
                act.push(ids[group.mul(g, r)] as u32);
            }
        }
        GSet::from_raw(group.clone(), n, act)
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.act[g * self.n + x] as usize
    }

    /// Orbit label of every point plus the representative (smallest point) of each orbit.
    pub fn orbit_labels(&self) -> (Vec<usize>, Vec<usize>) {
        let mut label = vec![usize::MAX; self.n];
        let mut reps = Vec::new();
        for x in 0..self.n {
            if label[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            label[x] = id;
            let mut stack = vec![x];
            while let Some(y) = stack.pop() {
                for &g in self.group.generators() {
                    let z = self.act(g, y);
                    if label[z] == usize::MAX {
                        label[z] = id;
                        stack.push(z);
                    }
                }
            }
        }
        (label, reps)
    }

    /// Smallest point of each orbit.
    pub fn orbits(&self) -> Vec<usize> {
        self.orbit_labels().1
    }

    pub fn stabilizer(&self, x: usize) -> Subgroup {
        let members: Vec<usize> = (0..self.group.order()).filter(|&g| self.act(g, x) == x).collect();
        self.group.subgroup_checked(&members).expect("stabilizer is a subgroup")
    }

    /// Whether every element of `h` fixes `x`.
    pub fn fixed_by(&self, h: &Subgroup, x: usize) -> bool {
        h.generators().iter().all(|&g| self.act(g, x) == x)
    }

    /// Disjoint union; points of `other` are shifted by `self.len()`.
    pub fn disjoint_union(&self, other: &GSet) -> Result<GSet> {
        self.same_group(other)?;
        let n = self.n + other.n;
        let mut act = Vec::with_capacity(self.group.order() * n);
        for g in 0..self.group.order() {
            act.extend((0..self.n).map(|x| self.act(g, x) as u32));
            act.extend((0..other.n).map(|y| (self.n + other.act(g, y)) as u32));
        }
        Ok(GSet::from_raw(self.group.clone(), n, act))
    }

    /// Cartesian product with diagonal action; point `(x, y)` is `x * other.len() + y`.
    pub fn product(&self, other: &GSet) -> Result<GSet> {
        self.same_group(other)?;
        let m = other.n;
        let n = self.n * m;
        let mut act = Vec::with_capacity(self.group.order() * n);
        for g in 0..self.group.order() {
            for x in 0..self.n {
                for y in 0..m {
                    act.push((self.act(g, x) * m + other.act(g, y)) as u32);
                }
            }
        }
        Ok(GSet::from_raw(self.group.clone(), n, act))
    }

    /// `Res`: the same points acted on through the embedding `H -> G`.
    pub fn restrict(&self, emb: &Embedding) -> Result<GSet> {
        if !same_group(emb.parent(), &self.group) {
            return Err(Error::GroupMismatch);
        }
        let h = emb.sub();
        let mut act = Vec::with_capacity(h.order() * self.n);
        for k in 0..h.order() {
            let g = emb.apply(k);
            act.extend((0..self.n).map(|x| self.act(g, x) as u32));
        }
        Ok(GSet::from_raw(h.clone(), self.n, act))
    }

    /// `Ind`: `G ×_H X`, realised on pairs `(r_i, x)` with `r_i` the left coset
    /// representatives of the image of `H`; point `(i, x)` is `i * |X| + x`.
    pub fn induce(&self, emb: &Embedding) -> Result<GSet> {
        Ok(self.induce_with(emb)?.0)
    }

    fn induce_with(&self, emb: &Embedding) -> Result<(GSet, Inducer)> {
        if !same_group(emb.sub(), &self.group) {
            return Err(Error::GroupMismatch);
        }
        let ind = Inducer::new(emb);
        let g = emb.parent();
        let m = self.n;
        let n = ind.reps.len() * m;
        let mut act = Vec::with_capacity(g.order() * n);
        for gamma in 0..g.order() {
            for i in 0..ind.reps.len() {
                let (j, k) = ind.move_rep(gamma, i);
                for x in 0..m {
                    act.push((j * m + self.act(k, x)) as u32);
                }
            }
        }
        Ok((GSet::from_raw(g.clone(), n, act), ind))
    }

    /// `Inf`: a `G/N`-set viewed as a `G`-set.
    pub fn inflate(&self, q: &QuotientMap) -> Result<GSet> {
        if !same_group(q.quotient(), &self.group) {
            return Err(Error::GroupMismatch);
        }
        let g = q.group();
        let mut act = Vec::with_capacity(g.order() * self.n);
        for x in 0..g.order() {
            let c = q.project(x);
            act.extend((0..self.n).map(|p| self.act(c, p) as u32));
        }
        Ok(GSet::from_raw(g.clone(), self.n, act))
    }

    /// `Def`: the set of `N`-orbits as a `G/N`-set; also returns the orbit label of each point.
    pub fn deflate(&self, q: &QuotientMap) -> Result<(GSet, Vec<usize>)> {
        if !same_group(q.group(), &self.group) {
            return Err(Error::GroupMismatch);
        }
        let labels = self.sub_orbit_labels(q.kernel());
        let reps = first_of_each(&labels);
        let quo = q.quotient();
        let n = reps.len();
        let mut act = Vec::with_capacity(quo.order() * n);
        for c in 0..quo.order() {
            let g = q.lift(c);
            act.extend(reps.iter().map(|&x| labels[self.act(g, x)] as u32));
        }
        Ok((GSet::from_raw(quo.clone(), n, act), labels))
    }

    /// `Iso(φ)`: transport along `φ: G -> G'`, so `g'.x = φ^-1(g').x`.
    pub fn transport(&self, phi: &Isomorphism) -> Result<GSet> {
        if !same_group(phi.source(), &self.group) {
            return Err(Error::GroupMismatch);
        }
        let inv = phi.inverse();
        let h = phi.target();
        let mut act = Vec::with_capacity(h.order() * self.n);
        for y in 0..h.order() {
            let g = inv.apply(y);
            act.extend((0..self.n).map(|x| self.act(g, x) as u32));
        }
        Ok(GSet::from_raw(h.clone(), self.n, act))
    }

    /// Orbit labels of the points under a subgroup, numbered in order of first appearance.
    fn sub_orbit_labels(&self, n: &Subgroup) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        for x in 0..self.n {
            if label[x] == usize::MAX {
                for &k in n.members() {
                    label[self.act(k, x)] = next;
                }
                next += 1;
            }
        }
        label
    }

    fn same_group(&self, other: &GSet) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    /// For each point, an element carrying its orbit representative to it.
    fn transversal(&self, label: &[usize], reps: &[usize]) -> Vec<usize> {
        let mut carrier = vec![usize::MAX; self.n];
        for &r in reps {
            carrier[r] = 0;
            let mut queue = std::collections::VecDeque::from([r]);
            while let Some(y) = queue.pop_front() {
                for &g in self.group.generators() {
                    let z = self.act(g, y);
                    if carrier[z] == usize::MAX {
                        carrier[z] = self.group.mul(g, carrier[y]);
                        queue.push_back(z);
                    }
                }
            }
        }
        debug_assert!(label.iter().all(|&l| l < reps.len()));
        carrier
    }
}

/// Left coset representatives of an embedded subgroup and the decomposition
/// `γ r_i = r_j k` used by induction.
struct Inducer {
    emb: Embedding,
    reps: Vec<usize>,
    coset: Vec<usize>,
    // parent element -> position inside the embedded source group
    pos: Vec<usize>,
}

impl Inducer {
    fn new(emb: &Embedding) -> Self {
        let g = emb.parent();
        let coset = coset_ids(g, emb.image());
        let reps = first_of_each(&coset);
        let mut pos = vec![usize::MAX; g.order()];
        for k in 0..emb.sub().order() {
            pos[emb.apply(k)] = k;
        }
        Inducer {
            emb: emb.clone(),
            reps,
            coset,
            pos,
        }
    }

    fn move_rep(&self, gamma: usize, i: usize) -> (usize, usize) {
        let g = self.emb.parent();
        let y = g.mul(gamma, self.reps[i]);
        let j = self.coset[y];
        let k = g.mul(g.inv(self.reps[j]), y);
        (j, self.pos[k])
    }
}

fn coset_ids(g: &GroupRef, s: &Subgroup) -> Vec<usize> {
    let mut ids = vec![usize::MAX; g.order()];
    let mut next = 0;
    for x in 0..g.order() {
        if ids[x] == usize::MAX {
            for &k in s.members() {
                ids[g.mul(x, k)] = next;
            }
            next += 1;
        }
    }
    ids
}

fn first_of_each(labels: &[usize]) -> Vec<usize> {
    let mut reps = Vec::new();
    for (x, &l) in labels.iter().enumerate() {
        if l == reps.len() {
            reps.push(x);
        }
    }
    reps
}

/// An equivariant map between two G-sets.
#[derive(Clone, Debug)]
pub struct GSetMorphism {
    source: GSet,
    target: GSet,
    map: Vec<usize>,
}

impl GSetMorphism {
    pub fn new(source: GSet, target: GSet, map: Vec<usize>) -> Result<Self> {
        source.same_group(&target)?;
        if map.len() != source.len() || map.iter().any(|&y| y >= target.len()) {
            return Err(Error::InvalidParameter("map has the wrong shape".into()));
        }
        let f = GSetMorphism { source, target, map };
        f.check_equivariant()?;
        Ok(f)
    }

    fn check_equivariant(&self) -> Result<()> {
        for &g in self.source.group.generators() {
            for x in 0..self.source.len() {
                if self.map[self.source.act(g, x)] != self.target.act(g, self.map[x]) {
                    return Err(Error::NonEquivariant { element: g, point: x });
                }
            }
        }
        Ok(())
    }

    pub fn identity(x: &GSet) -> Self {
        GSetMorphism {
            source: x.clone(),
            target: x.clone(),
            map: (0..x.len()).collect(),
        }
    }

    pub fn empty(group: &GroupRef) -> Self {
        GSetMorphism::identity(&GSet::empty(group))
    }

    /// `• -> •`.
    pub fn point(group: &GroupRef) -> Self {
        GSetMorphism::identity(&GSet::point(group))
    }

    /// `G/S -> G/T`, `gS -> gT`.
    pub fn canonical_projection(group: &GroupRef, s: &Subgroup, t: &Subgroup) -> Result<Self> {
        if !s.is_subgroup_of(t) {
            return Err(Error::NotContained("S is not contained in T".into()));
        }
        let xs = GSet::coset_space(group, s);
        let xt = GSet::coset_space(group, t);
        let ids_s = coset_ids(group, s);
        let ids_t = coset_ids(group, t);
        let mut map = vec![usize::MAX; xs.len()];
        for g in 0..group.order() {
            map[ids_s[g]] = ids_t[g];
        }
        Ok(GSetMorphism {
            source: xs,
            target: xt,
            map,
        })
    }

    pub fn source(&self) -> &GSet {
        &self.source
    }

    pub fn target(&self) -> &GSet {
        &self.target
    }

    pub fn group(&self) -> &GroupRef {
        &self.source.group
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// `f × g` with diagonal action.
    pub fn product(&self, other: &GSetMorphism) -> Result<Self> {
        let source = self.source.product(&other.source)?;
        let target = self.target.product(&other.target)?;
        let (m, mt) = (other.source.len(), other.target.len());
        let map = (0..source.len())
            .map(|p| self.map[p / m] * mt + other.map[p % m])
            .collect();
        Ok(GSetMorphism { source, target, map })
    }

    pub fn disjoint_union(&self, other: &GSetMorphism) -> Result<Self> {
        let source = self.source.disjoint_union(&other.source)?;
        let target = self.target.disjoint_union(&other.target)?;
        let shift = self.target.len();
        let map = self
            .map
            .iter()
            .copied()
            .chain(other.map.iter().map(|&y| y + shift))
            .collect();
        Ok(GSetMorphism { source, target, map })
    }

    /// Restriction of the map to the source points with the given orbit labels, with target
    /// corestricted to the image; returns a morphism on renumbered points.
    pub fn restrict_to_orbits(&self, keep: impl Fn(usize) -> bool) -> GSetMorphism {
        let (label, _) = self.source.orbit_labels();
        let src_pts: Vec<usize> = (0..self.source.len()).filter(|&x| keep(label[x])).collect();
        let mut tgt_pts: Vec<usize> = src_pts.iter().map(|&x| self.map[x]).collect();
        tgt_pts.sort_unstable();
        tgt_pts.dedup();
        let sub = |pts: &[usize], set: &GSet| {
            let mut pos = vec![usize::MAX; set.len()];
            for (i, &p) in pts.iter().enumerate() {
                pos[p] = i;
            }
            let mut act = Vec::with_capacity(set.group.order() * pts.len());
            for g in 0..set.group.order() {
                act.extend(pts.iter().map(|&p| pos[set.act(g, p)] as u32));
            }
            (GSet::from_raw(set.group.clone(), pts.len(), act), pos)
        };
        let (source, _) = sub(&src_pts, &self.source);
        let (target, tpos) = sub(&tgt_pts, &self.target);
        let map = src_pts.iter().map(|&x| tpos[self.map[x]]).collect();
        GSetMorphism { source, target, map }
    }

    pub fn restrict(&self, emb: &Embedding) -> Result<Self> {
        Ok(GSetMorphism {
            source: self.source.restrict(emb)?,
            target: self.target.restrict(emb)?,
            map: self.map.clone(),
        })
    }

    pub fn induce(&self, emb: &Embedding) -> Result<Self> {
        let (source, ind) = self.source.induce_with(emb)?;
        let target = self.target.induce(emb)?;
        let (m, mt) = (self.source.len(), self.target.len());
        let map = (0..source.len())
            .map(|p| (p / m) * mt + self.map[p % m])
            .collect();
        debug_assert!(ind.reps.len() * m == source.len());
        Ok(GSetMorphism { source, target, map })
    }

    pub fn inflate(&self, q: &QuotientMap) -> Result<Self> {
        Ok(GSetMorphism {
            source: self.source.inflate(q)?,
            target: self.target.inflate(q)?,
            map: self.map.clone(),
        })
    }

    pub fn deflate(&self, q: &QuotientMap) -> Result<Self> {
        let (source, ls) = self.source.deflate(q)?;
        let (target, lt) = self.target.deflate(q)?;
        let mut map = vec![0; source.len()];
        for x in 0..self.source.len() {
            map[ls[x]] = lt[self.map[x]];
        }
        Ok(GSetMorphism { source, target, map })
    }

    pub fn transport(&self, phi: &Isomorphism) -> Result<Self> {
        Ok(GSetMorphism {
            source: self.source.transport(phi)?,
            target: self.target.transport(phi)?,
            map: self.map.clone(),
        })
    }

    /// Stabilizer pairs `(G_{f(x)}, G_x)` over the orbit representatives `x` of the source.
    pub fn slice_decomposition(&self) -> Vec<(Subgroup, Subgroup)> {
        self.source
            .orbits()
            .into_iter()
            .map(|x| (self.target.stabilizer(self.map[x]), self.source.stabilizer(x)))
            .collect()
    }
}

/// All equivariant maps `X -> Y`, each as a full point map.
pub fn equivariant_maps(x: &GSet, y: &GSet) -> Result<Vec<Vec<usize>>> {
    x.same_group(y)?;
    let (label, reps) = x.orbit_labels();
    let carrier = x.transversal(&label, &reps);
    let choices: Vec<Vec<usize>> = reps
        .iter()
        .map(|&r| {
            let stab = x.stabilizer(r);
            (0..y.len()).filter(|&p| y.fixed_by(&stab, p)).collect()
        })
        .collect();
    let mut out = Vec::new();
    for_each_choice(&choices, |pick| {
        out.push(
            (0..x.len())
                .map(|p| y.act(carrier[p], pick[label[p]]))
                .collect(),
        );
    });
    Ok(out)
}

fn for_each_choice(choices: &[Vec<usize>], mut f: impl FnMut(&[usize])) {
    if choices.iter().any(Vec::is_empty) {
        return;
    }
    let mut idx = vec![0usize; choices.len()];
    let mut pick: Vec<usize> = choices.iter().map(|c| c[0]).collect();
    loop {
        f(&pick);
        let mut k = 0;
        loop {
            if k == choices.len() {
                return;
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                pick[k] = choices[k][idx[k]];
                break;
            }
            idx[k] = 0;
            pick[k] = choices[k][0];
            k += 1;
        }
    }
}

/// Number of commutative squares `(h, k)` from `a: X -> Y` to `b: X' -> Y'`,
/// i.e. equivariant `h: X -> X'`, `k: Y -> Y'` with `k ∘ a = b ∘ h`.
pub fn hom_count(a: &GSetMorphism, b: &GSetMorphism) -> Result<u64> {
    a.source.same_group(&b.source)?;
    let (xl, xr) = a.source.orbit_labels();
    let x_stabs: Vec<Subgroup> = xr.iter().map(|&r| a.source.stabilizer(r)).collect();
    let mut total = 0u64;
    for k in equivariant_maps(&a.target, &b.target)? {
        // h is free on each source orbit subject to b(h(x)) = k(a(x)) and stabilizer containment
        let mut count = 1u64;
        for (i, &r) in xr.iter().enumerate() {
            let want = k[a.map[r]];
            let c = (0..b.source.len())
                .filter(|&p| b.map[p] == want && b.source.fixed_by(&x_stabs[i], p))
                .count() as u64;
            count *= c;
            if count == 0 {
                break;
            }
        }
        total += count;
    }
    debug_assert!(xl.len() == a.source.len());
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{FiniteGroup, DEFAULT_ORDER_CAP as CAP};
    use std::sync::Arc;

    fn grp(g: FiniteGroup) -> GroupRef {
        Arc::new(g)
    }

    #[test]
    fn coset_spaces() {
        let g = grp(FiniteGroup::cyclic(4, CAP).unwrap());
        let one = g.trivial_subgroup();
        let reg = GSet::coset_space(&g, &one);
        assert_eq!(reg.len(), 4);
        assert_eq!(reg.orbits(), vec![0]);
        assert!(reg.stabilizer(2).is_trivial());
        reg.check_action().unwrap();
        assert_eq!(GSet::coset_space(&g, &g.whole()).len(), 1);
        let d8 = grp(FiniteGroup::dihedral(8, CAP).unwrap());
        let s = d8.generate(&[d8.generators()[1]]);
        let x = GSet::coset_space(&d8, &s);
        assert_eq!(x.stabilizer(0), s);
        x.check_action().unwrap();
    }

    #[test]
    fn hom_count_examples() {
        let g = grp(FiniteGroup::dihedral(8, CAP).unwrap());
        let pt = GSetMorphism::point(&g);
        let one = g.trivial_subgroup();
        let reg = GSetMorphism::canonical_projection(&g, &one, &one).unwrap();
        assert_eq!(hom_count(&reg, &pt).unwrap(), 1);
        for s in [one.clone(), g.center(), g.whole()] {
            let f = GSetMorphism::canonical_projection(&g, &s, &g.whole()).unwrap();
            let expect = u64::from(s.order() == 8);
            assert_eq!(hom_count(&pt, &f).unwrap(), expect);
            assert_eq!(hom_count(&reg, &f).unwrap(), (8 / s.order()) as u64);
        }
    }

    #[test]
    fn equivariant_map_check() {
        let g = grp(FiniteGroup::cyclic(2, CAP).unwrap());
        let reg = GSet::coset_space(&g, &g.trivial_subgroup());
        let pt = GSet::point(&g);
        assert!(GSetMorphism::new(pt.clone(), reg.clone(), vec![0]).is_err());
        assert!(GSetMorphism::new(reg.clone(), pt, vec![0, 0]).is_ok());
        assert_eq!(equivariant_maps(&reg, &reg).unwrap().len(), 2);
    }

    #[test]
    fn biset_operations_on_sets() {
        let g = grp(FiniteGroup::cyclic(4, CAP).unwrap());
        let c2 = g.generate(&[g.pow(1, 2)]);
        let emb = Embedding::of_subgroup(&g, &c2);
        let pt = GSetMorphism::point(emb.sub());
        let ind = pt.induce(&emb).unwrap();
        ind.source().check_action().unwrap();
        assert_eq!(ind.source().len(), 2);
        assert_eq!(ind.source().stabilizer(0), c2);
        let q = QuotientMap::new(&g, &c2).unwrap();
        let reg = GSetMorphism::canonical_projection(&g, &g.trivial_subgroup(), &g.whole()).unwrap();
        let d = reg.deflate(&q).unwrap();
        d.source().check_action().unwrap();
        assert_eq!(d.source().len(), 2);
        let inf = d.inflate(&q).unwrap();
        inf.source().check_action().unwrap();
        assert_eq!(inf.source().stabilizer(0), c2);
        let res = reg.restrict(&emb).unwrap();
        assert_eq!(res.source().orbits().len(), 2);
    }

    #[test]
    fn products_and_unions() {
        let g = grp(FiniteGroup::cyclic(3, CAP).unwrap());
        let one = g.trivial_subgroup();
        let f = GSetMorphism::canonical_projection(&g, &one, &g.whole()).unwrap();
        let p = f.product(&f).unwrap();
        assert_eq!(p.source().len(), 9);
        assert_eq!(p.slice_decomposition().len(), 3);
        let u = f.disjoint_union(&GSetMorphism::point(&g)).unwrap();
        assert_eq!(u.slice_decomposition().len(), 2);
        let e = GSetMorphism::empty(&g).product(&f).unwrap();
        assert!(e.source().is_empty());
        assert!(e.slice_decomposition().is_empty());
    }
}
