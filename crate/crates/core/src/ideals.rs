//! Slice families, the ideals they define, and checks over a bounded universe of p-groups.
//!
//! A family is a predicate on abstract slices `(T, S)`. The named families only
//! look at two invariants of a slice: whether `T != S` and whether `S` is cyclic.
//! Every statement that quantifies over all p-groups is checked here on a finite
//! [`GroupUniverse`] only, and reports say so.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::constants::{is_t_slice, m_slice};
use crate::corpus::{groups_of_order, prime_power};
use crate::error::{Error, Result};
use crate::group::{automorphisms, find_isomorphism, Embedding, FiniteGroup, GroupRef, Subgroup, SubgroupLattice};
use crate::linalg;
use crate::rational::{format_q, Q};
use crate::ring::{SliceElement, SliceRing};

/// Named slice families. `SCyclic` is not an ideal; it exists to exercise the checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SliceFamily {
    Zero,
    J1,
    J2,
    J3,
    J4,
    Full,
    SCyclic,
}

impl SliceFamily {
    pub const IDEALS: [SliceFamily; 6] = [
        SliceFamily::Zero,
        SliceFamily::J3,
        SliceFamily::J1,
        SliceFamily::J2,
        SliceFamily::J4,
        SliceFamily::Full,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SliceFamily::Zero => "ZERO",
            SliceFamily::J1 => "J1",
            SliceFamily::J2 => "J2",
            SliceFamily::J3 => "J3",
            SliceFamily::J4 => "J4",
            SliceFamily::Full => "FULL",
            SliceFamily::SCyclic => "SCYCLIC",
        }
    }

    pub fn contains(self, shape: SliceShape) -> bool {
        let noncyclic = !shape.s_cyclic;
        match self {
            SliceFamily::Zero => false,
            SliceFamily::J1 => shape.proper,
            SliceFamily::J2 => noncyclic,
            SliceFamily::J3 => shape.proper && noncyclic,
            SliceFamily::J4 => shape.proper || noncyclic,
            SliceFamily::Full => true,
            SliceFamily::SCyclic => shape.s_cyclic,
        }
    }
}

impl fmt::Display for SliceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SliceFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "ZERO" | "0" => SliceFamily::Zero,
            "J1" => SliceFamily::J1,
            "J2" => SliceFamily::J2,
            "J3" => SliceFamily::J3,
            "J4" => SliceFamily::J4,
            "FULL" => SliceFamily::Full,
            "SCYCLIC" | "S-CYCLIC" => SliceFamily::SCyclic,
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "unknown family {s:?} (expected ZERO, J1, J2, J3, J4, FULL or SCYCLIC)"
                )))
            }
        })
    }
}

/// The two invariants the named families depend on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SliceShape {
    /// `T != S`
    pub proper: bool,
    pub s_cyclic: bool,
}

impl SliceShape {
    pub fn of(l: &SubgroupLattice, t: usize, s: usize) -> Self {
        SliceShape {
            proper: t != s,
            s_cyclic: l.is_cyclic(s),
        }
    }
}

pub fn family_membership(f: SliceFamily, l: &SubgroupLattice, t: usize, s: usize) -> bool {
    f.contains(SliceShape::of(l, t, s))
}

/// Slice classes of the ring that belong to `f`, in ring order.
pub fn member_classes(ring: &SliceRing, f: SliceFamily) -> Vec<usize> {
    let l = ring.lattice();
    (0..ring.len())
        .filter(|&c| {
            let k = ring.class(c);
            family_membership(f, l, k.t, k.s)
        })
        .collect()
}

pub fn ideal_dimension(ring: &SliceRing, f: SliceFamily) -> usize {
    member_classes(ring, f).len()
}

/// The idempotents spanning `f(G)`.
pub fn ideal_basis(ring: &Arc<SliceRing>, f: SliceFamily) -> Vec<SliceElement> {
    member_classes(ring, f)
        .into_iter()
        .map(|c| ring.idempotent(c))
        .collect()
}

/// Images `<S,S>` of the transitive G-sets `G/S`, one per conjugacy class of subgroups.
pub fn burnside_embedding(ring: &Arc<SliceRing>) -> Vec<SliceElement> {
    ring.lattice()
        .class_reps()
        .into_iter()
        .map(|s| ring.basis(ring.class_of(s, s).expect("(S,S) is a slice")))
        .collect()
}

fn mark_rows(ring: &SliceRing, xs: &[SliceElement]) -> Result<Vec<Vec<Q>>> {
    xs.iter().map(|x| ring.to_mark_vector(x)).collect()
}

/// `dim(span(xs) ∩ f(G))`, computed on mark vectors.
pub fn intersection_dim(ring: &Arc<SliceRing>, xs: &[SliceElement], f: SliceFamily) -> Result<usize> {
    let a = mark_rows(ring, xs)?;
    let b = mark_rows(ring, &ideal_basis(ring, f))?;
    Ok(linalg::intersection_dim(&a, &b))
}

/// Whether `span(a) ⊆ span(b)`.
fn span_contains(b: &[Vec<Q>], a: &[Vec<Q>]) -> bool {
    let mut both = b.to_vec();
    both.extend_from_slice(a);
    linalg::rank(&both) == linalg::rank(b)
}

/// Member sets and span inclusions of the named ideals in one group.
#[derive(Clone, Debug, Serialize)]
pub struct LatticeShape {
    pub group: String,
    pub dimensions: Vec<(SliceFamily, usize)>,
    /// `J3 = J1 ∩ J2` as member sets.
    pub meet: bool,
    /// `J4 = J1 ∪ J2` as member sets.
    pub join: bool,
    /// `(A, B)` for every ordered pair of named ideals with `A(G) ⊆ B(G)`.
    pub inclusions: Vec<(SliceFamily, SliceFamily)>,
}

pub fn lattice_shape(ring: &Arc<SliceRing>) -> Result<LatticeShape> {
    let fams = SliceFamily::IDEALS;
    let sets: Vec<BTreeSet<usize>> = fams
        .iter()
        .map(|&f| member_classes(ring, f).into_iter().collect())
        .collect();
    let get = |f: SliceFamily| &sets[fams.iter().position(|&g| g == f).expect("named ideal")];
    let meet = get(SliceFamily::J1)
        .intersection(get(SliceFamily::J2))
        .copied()
        .collect::<BTreeSet<_>>()
        == *get(SliceFamily::J3);
    let join = get(SliceFamily::J1)
        .union(get(SliceFamily::J2))
        .copied()
        .collect::<BTreeSet<_>>()
        == *get(SliceFamily::J4);
    let rows = fams
        .iter()
        .map(|&f| mark_rows(ring, &ideal_basis(ring, f)))
        .collect::<Result<Vec<_>>>()?;
    let mut inclusions = Vec::new();
    for (i, &a) in fams.iter().enumerate() {
        for (j, &b) in fams.iter().enumerate() {
            if span_contains(&rows[j], &rows[i]) {
                inclusions.push((a, b));
            }
        }
    }
    Ok(LatticeShape {
        group: ring.group().label().to_string(),
        dimensions: fams.iter().zip(&sets).map(|(&f, s)| (f, s.len())).collect(),
        meet,
        join,
        inclusions,
    })
}

/// Cover relations of the inclusion order on the named ideals, where `A <= B`
/// means `A(G) ⊆ B(G)` for every group in `shapes`. Ideals that agree on all
/// groups are merged; the first in declaration order represents them.
pub fn hasse_diagram(shapes: &[LatticeShape]) -> Vec<(SliceFamily, SliceFamily)> {
    let fams = SliceFamily::IDEALS;
    let le = |a: SliceFamily, b: SliceFamily| shapes.iter().all(|s| s.inclusions.contains(&(a, b)));
    let lt = |a, b| le(a, b) && !le(b, a);
    let reps: Vec<SliceFamily> = fams
        .iter()
        .copied()
        .filter(|&a| !fams.iter().any(|&b| b < a && le(a, b) && le(b, a)))
        .collect();
    let mut covers = Vec::new();
    for &a in &reps {
        for &b in &reps {
            if lt(a, b) && !reps.iter().any(|&c| lt(a, c) && lt(c, b)) {
                covers.push((a, b));
            }
        }
    }
    covers
}

/// Index of an abstract slice in a [`GroupUniverse`].
pub type SliceId = usize;

/// `(G_i, S)` up to automorphisms of `G_i`; `s` is the smallest lattice index in the orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AbstractSlice {
    pub group: usize,
    pub s: usize,
    pub shape: SliceShape,
}

/// `(T, S) ↠ (T/N, SN/N)` for a nontrivial normal `N` of `T`.
#[derive(Clone, Copy, Debug)]
pub struct QuotientEdge {
    pub normal: usize,
    pub image: SliceId,
    /// `m_{T,S,N} != 0`
    pub deflates: bool,
}

struct Member {
    ring: Arc<SliceRing>,
    aut_rep: Vec<usize>,
    // per subgroup t: target group and element map T -> G_j (usize::MAX off T)
    sub_iso: Vec<(usize, Vec<usize>)>,
}

/// One group per isomorphism class of p-groups of order at most `bound <= p^3`,
/// with all slices identified up to isomorphism.
pub struct GroupUniverse {
    p: usize,
    bound: usize,
    members: Vec<Member>,
    slices: Vec<AbstractSlice>,
    index: HashMap<(usize, usize), SliceId>,
    edges: Vec<Vec<QuotientEdge>>,
    // (a, b) -> a × b, for every ordered pair whose product fits
    products: HashMap<(SliceId, SliceId), SliceId>,
}

impl fmt::Debug for GroupUniverse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GroupUniverse(p = {}, bound = {}, {} groups, {} slices)",
            self.p,
            self.bound,
            self.members.len(),
            self.slices.len()
        )
    }
}

impl GroupUniverse {
    pub fn new(p: usize, bound: usize) -> Result<Self> {
        if prime_power(p) != Some((p, 1)) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        if bound == 0 || bound > p * p * p {
            return Err(Error::InvalidParameter(format!(
                "universe bound must lie in 1..={}, got {bound}",
                p * p * p
            )));
        }
        let mut groups = Vec::new();
        let mut order = 1;
        let mut k = 0;
        while order <= bound {
            groups.extend(groups_of_order(p, k)?);
            order *= p;
            k += 1;
        }
        let groups: Vec<GroupRef> = groups.into_iter().map(Arc::new).collect();
        for i in 0..groups.len() {
            for j in 0..i {
                if groups[i].order() == groups[j].order() && find_isomorphism(&groups[i], &groups[j]).is_some() {
                    return Err(Error::InvalidParameter(format!(
                        "universe groups {} and {} are isomorphic",
                        groups[j].label(),
                        groups[i].label()
                    )));
                }
            }
        }
        let half: Vec<(Arc<SliceRing>, Vec<usize>)> = groups
            .par_iter()
            .map(|g| {
                let ring = SliceRing::new(g.clone());
                let aut_rep = aut_orbit_reps(ring.lattice());
                (ring, aut_rep)
            })
            .collect();
        let sub_iso: Vec<Vec<(usize, Vec<usize>)>> = half
            .par_iter()
            .map(|(ring, _)| {
                let l = ring.lattice();
                l.subgroups()
                    .iter()
                    .map(|t| embed_into(&groups, l.group(), t).expect("subgroups of universe groups are in the universe"))
                    .collect()
            })
            .collect();
        let members: Vec<Member> = half
            .into_iter()
            .zip(sub_iso)
            .map(|((ring, aut_rep), sub_iso)| Member { ring, aut_rep, sub_iso })
            .collect();

        let mut slices = Vec::new();
        let mut index = HashMap::new();
        for (i, m) in members.iter().enumerate() {
            let l = m.ring.lattice();
            for s in 0..l.len() {
                if m.aut_rep[s] == s {
                    index.insert((i, s), slices.len());
                    slices.push(AbstractSlice {
                        group: i,
                        s,
                        shape: SliceShape::of(l, l.top(), s),
                    });
                }
            }
        }
        let mut u = GroupUniverse {
            p,
            bound,
            members,
            slices,
            index,
            edges: Vec::new(),
            products: HashMap::new(),
        };
        u.edges = (0..u.slices.len())
            .into_par_iter()
            .map(|id| u.quotient_edges(id))
            .collect::<Result<_>>()?;
        u.products = u.product_table()?;
        Ok(u)
    }

    pub fn prime(&self) -> usize {
        self.p
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn groups(&self) -> impl Iterator<Item = &GroupRef> {
        self.members.iter().map(|m| m.ring.group())
    }

    pub fn group(&self, i: usize) -> &GroupRef {
        self.members[i].ring.group()
    }

    pub fn ring(&self, i: usize) -> &Arc<SliceRing> {
        &self.members[i].ring
    }

    pub fn num_groups(&self) -> usize {
        self.members.len()
    }

    pub fn slices(&self) -> &[AbstractSlice] {
        &self.slices
    }

    pub fn slice(&self, id: SliceId) -> AbstractSlice {
        self.slices[id]
    }

    pub fn quotients(&self, id: SliceId) -> &[QuotientEdge] {
        &self.edges[id]
    }

    /// `a × b` when the product group is in the universe.
    pub fn product(&self, a: SliceId, b: SliceId) -> Option<SliceId> {
        self.products.get(&(a, b)).copied()
    }

    fn lattice(&self, i: usize) -> &SubgroupLattice {
        self.members[i].ring.lattice()
    }

    /// The abstract slice `(G_i, S)` for lattice index `s`.
    pub fn top_slice(&self, i: usize, s: usize) -> SliceId {
        self.index[&(i, self.members[i].aut_rep[s])]
    }

    /// The abstract slice of `(T, S)` for lattice indices of `G_i`.
    pub fn slice_of(&self, i: usize, t: usize, s: usize) -> SliceId {
        let (j, map) = &self.members[i].sub_iso[t];
        let gens: Vec<usize> = self.lattice(i).subgroup(s).generators().iter().map(|&x| map[x]).collect();
        let lj = self.lattice(*j);
        let image = lj.subgroup_generated(&gens);
        self.top_slice(*j, image)
    }

    /// Identifies `(T, S)` for subgroups of an arbitrary group.
    pub fn identify(&self, g: &GroupRef, t: &Subgroup, s: &Subgroup) -> Result<SliceId> {
        if !s.is_subgroup_of(t) {
            return Err(Error::NotASlice("S is not contained in T".into()));
        }
        let groups: Vec<GroupRef> = self.groups().cloned().collect();
        let (j, map) = embed_into(&groups, g, t).ok_or_else(|| {
            Error::NotInUniverse(format!(
                "a subgroup of order {} of {} is not in the universe (p = {}, bound = {})",
                t.order(),
                g.label(),
                self.p,
                self.bound
            ))
        })?;
        let gens: Vec<usize> = s.generators().iter().map(|&x| map[x]).collect();
        Ok(self.top_slice(j, self.lattice(j).subgroup_generated(&gens)))
    }

    /// Short human-readable name, e.g. `(C3^3, order 9)`.
    pub fn describe(&self, id: SliceId) -> SliceRef {
        let a = self.slices[id];
        let l = self.lattice(a.group);
        SliceRef {
            group: self.group(a.group).label().to_string(),
            t_order: l.order_of(l.top()),
            s_order: l.order_of(a.s),
            s: l.subgroup(a.s).generators().to_vec(),
            proper: a.shape.proper,
            s_cyclic: a.shape.s_cyclic,
        }
    }

    fn quotient_edges(&self, id: SliceId) -> Result<Vec<QuotientEdge>> {
        let a = self.slices[id];
        let l = self.lattice(a.group);
        let g = l.group();
        let mut out = Vec::new();
        for n in l.normal_subgroups() {
            if n == l.trivial() {
                continue;
            }
            let q = crate::group::QuotientMap::new(g, l.subgroup(n))?;
            let (j, iso) = self
                .members
                .iter()
                .enumerate()
                .find_map(|(j, m)| find_isomorphism(q.quotient(), m.ring.group()).map(|iso| (j, iso)))
                .ok_or_else(|| Error::NotInUniverse(format!("quotient of {} by a normal subgroup", g.label())))?;
            let sn = l.join(a.s, n);
            let gens: Vec<usize> = l.subgroup(sn).generators().iter().map(|&x| iso[q.project(x)]).collect();
            let image = self.top_slice(j, self.lattice(j).subgroup_generated(&gens));
            let deflates = !m_slice(l, a.s, n)?.is_zero();
            out.push(QuotientEdge { normal: n, image, deflates });
        }
        Ok(out)
    }

    fn product_table(&self) -> Result<HashMap<(SliceId, SliceId), SliceId>> {
        let groups: Vec<GroupRef> = self.groups().cloned().collect();
        let mut out = HashMap::new();
        for (gi, gb) in groups.iter().enumerate() {
            for (gj, gt) in groups.iter().enumerate() {
                if gb.order() * gt.order() > self.bound {
                    continue;
                }
                let prod = Arc::new(direct_product_indexed(gb, gt)?);
                let whole = prod.whole();
                let (k, map) = embed_into(&groups, &prod, &whole)
                    .ok_or_else(|| Error::NotInUniverse(format!("{} x {}", gb.label(), gt.label())))?;
                let lk = self.lattice(k);
                let nt = gt.order();
                for a in self.slices.iter().enumerate().filter(|(_, x)| x.group == gi) {
                    for b in self.slices.iter().enumerate().filter(|(_, x)| x.group == gj) {
                        let mut gens: Vec<usize> = self.lattice(gi).subgroup(a.1.s).generators().iter().map(|&x| map[x * nt]).collect();
                        gens.extend(self.lattice(gj).subgroup(b.1.s).generators().iter().map(|&y| map[y]));
                        out.insert((a.0, b.0), self.top_slice(k, lk.subgroup_generated(&gens)));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Abstract slices whose shape lies in `f`.
    pub fn family_trace(&self, f: SliceFamily) -> BTreeSet<SliceId> {
        (0..self.slices.len()).filter(|&id| f.contains(self.slices[id].shape)).collect()
    }

    /// Every slice class of every universe group, as `(group, class, abstract slice)`.
    pub fn slice_classes(&self) -> Vec<(usize, usize, SliceId)> {
        let mut out = Vec::new();
        for (i, m) in self.members.iter().enumerate() {
            for c in 0..m.ring.len() {
                let k = m.ring.class(c);
                out.push((i, c, self.slice_of(i, k.t, k.s)));
            }
        }
        out
    }

    /// `dim F(G_i)` for the family whose abstract members are `members`.
    pub fn dimension_of_set(&self, i: usize, members: &BTreeSet<SliceId>) -> usize {
        let ring = self.ring(i);
        (0..ring.len())
            .filter(|&c| {
                let k = ring.class(c);
                members.contains(&self.slice_of(i, k.t, k.s))
            })
            .count()
    }

    /// Groups with `dim f(G) > 0` whose proper-order universe groups all have `dim f = 0`.
    pub fn minimal_groups(&self, f: SliceFamily) -> Vec<usize> {
        let dims: Vec<usize> = (0..self.num_groups()).map(|i| ideal_dimension(self.ring(i), f)).collect();
        minimal_from_dims(self, &dims)
    }

    pub fn minimal_groups_of_set(&self, members: &BTreeSet<SliceId>) -> Vec<usize> {
        let dims: Vec<usize> = (0..self.num_groups()).map(|i| self.dimension_of_set(i, members)).collect();
        minimal_from_dims(self, &dims)
    }

    /// `(T/Φ(T), SΦ(T)/Φ(T))`, or the slice itself when `Φ(T)` is trivial.
    pub fn frattini_quotient(&self, id: SliceId) -> SliceId {
        let a = self.slices[id];
        let l = self.lattice(a.group);
        let phi = l.frattini();
        if phi == l.trivial() {
            return id;
        }
        self.edges[id]
            .iter()
            .find(|e| e.normal == phi)
            .map(|e| e.image)
            .expect("the Frattini subgroup is normal")
    }

    /// Slices `(E × T̄, E × S̄)` with `E` elementary abelian (possibly trivial),
    /// `(T̄, S̄)` the Frattini quotient of a slice with `S` noncyclic, and `E × S̄` noncyclic.
    pub fn frattini_partners(&self, id: SliceId) -> Vec<SliceId> {
        if self.slices[id].shape.s_cyclic {
            return Vec::new();
        }
        let q = self.frattini_quotient(id);
        let mut out = Vec::new();
        for (i, m) in self.members.iter().enumerate() {
            let l = m.ring.lattice();
            if !is_elementary_abelian(l) {
                continue;
            }
            let e = self.top_slice(i, l.top());
            if let Some(x) = self.product(e, q) {
                if !self.slices[x].shape.s_cyclic {
                    out.push(x);
                }
            }
        }
        out
    }

    /// Least set containing `seed` and closed under the moves, within the universe.
    ///
    /// Always applied: preimages of quotients, quotients with nonzero deflation
    /// constant, and products with arbitrary slices. `frattini_products` adds the
    /// equivalence with [`GroupUniverse::frattini_partners`] in both directions.
    /// The result is a lower bound for the trace of the generated ideal.
    pub fn bounded_closure(&self, seed: SliceId, moves: ClosureMoves) -> BTreeSet<SliceId> {
        let n = self.slices.len();
        let partners: Vec<Vec<SliceId>> = if moves.frattini_products {
            (0..n).map(|id| self.frattini_partners(id)).collect()
        } else {
            vec![Vec::new(); n]
        };
        let mut inside = vec![false; n];
        inside[seed] = true;
        loop {
            let mut changed = false;
            let mut add = |x: usize, inside: &mut Vec<bool>| {
                if !inside[x] {
                    inside[x] = true;
                    changed = true;
                }
            };
            for x in 0..n {
                if !inside[x] && self.edges[x].iter().any(|e| inside[e.image]) {
                    add(x, &mut inside);
                }
                if !inside[x] && partners[x].iter().any(|&y| inside[y]) {
                    add(x, &mut inside);
                }
                if !inside[x] {
                    continue;
                }
                for e in &self.edges[x] {
                    if e.deflates {
                        add(e.image, &mut inside);
                    }
                }
                for &y in &partners[x] {
                    add(y, &mut inside);
                }
                for b in 0..n {
                    if let Some(z) = self.product(b, x) {
                        add(z, &mut inside);
                    }
                }
            }
            if !changed {
                break;
            }
        }
        (0..n).filter(|&x| inside[x]).collect()
    }

    /// Checks the closure conditions for a named family.
    pub fn check_conditions(&self, f: SliceFamily) -> ConditionReport {
        let mut report = self.check_predicate(f.name(), |id| f.contains(self.slices[id].shape));
        for (i, c, id) in self.slice_classes() {
            let ring = self.ring(i);
            let k = ring.class(c);
            let local = family_membership(f, ring.lattice(), k.t, k.s);
            if local != f.contains(self.slices[id].shape) {
                report.condition_a.push(Witness {
                    slice: self.describe_local(i, k.t, k.s),
                    normal: None,
                    factor: None,
                    image: self.describe(id),
                    constant: None,
                });
            }
        }
        report.passed = report.is_clean();
        report
    }

    /// Checks the closure conditions for an explicit set of abstract slices.
    /// Isomorphism invariance holds by construction here.
    pub fn check_set(&self, name: &str, members: &BTreeSet<SliceId>) -> ConditionReport {
        self.check_predicate(name, |id| members.contains(&id))
    }

    fn check_predicate(&self, name: &str, member: impl Fn(SliceId) -> bool) -> ConditionReport {
        let mut r = ConditionReport {
            family: name.to_string(),
            prime: self.p,
            bound: self.bound,
            universe_bounded: true,
            groups: self.num_groups(),
            abstract_slices: self.slices.len(),
            slice_classes: self.members.iter().map(|m| m.ring.len()).sum(),
            members: (0..self.slices.len()).filter(|&x| member(x)).count(),
            condition_a: Vec::new(),
            condition_c: Vec::new(),
            condition_d: Vec::new(),
            products: Vec::new(),
            passed: false,
        };
        for x in 0..self.slices.len() {
            let a = self.slices[x];
            let l = self.lattice(a.group);
            for e in &self.edges[x] {
                let witness = || Witness {
                    slice: self.describe(x),
                    normal: Some(l.subgroup(e.normal).generators().to_vec()),
                    factor: None,
                    image: self.describe(e.image),
                    constant: m_slice(l, a.s, e.normal).ok().map(|m| format_q(&m)),
                };
                if member(e.image) && !member(x) {
                    r.condition_c.push(witness());
                }
                if member(x) && e.deflates && !member(e.image) {
                    r.condition_d.push(witness());
                }
            }
            if !member(x) {
                continue;
            }
            for b in 0..self.slices.len() {
                if let Some(z) = self.product(b, x) {
                    if !member(z) {
                        r.products.push(Witness {
                            slice: self.describe(x),
                            normal: None,
                            factor: Some(self.describe(b)),
                            image: self.describe(z),
                            constant: None,
                        });
                    }
                }
            }
        }
        r.passed = r.is_clean();
        r
    }

    fn describe_local(&self, i: usize, t: usize, s: usize) -> SliceRef {
        let l = self.lattice(i);
        SliceRef {
            group: format!("{} (T = <{}>)", self.group(i).label(), join_usize(l.subgroup(t).generators())),
            t_order: l.order_of(t),
            s_order: l.order_of(s),
            s: l.subgroup(s).generators().to_vec(),
            proper: t != s,
            s_cyclic: l.is_cyclic(s),
        }
    }

    /// For a named family, members `(T,S)` whose `|T|` is minimal among members,
    /// paired with whether they are T-slices.
    pub fn minimal_members_t_slice(&self, f: SliceFamily) -> Result<Vec<(SliceId, bool)>> {
        let trace = self.family_trace(f);
        let min = trace.iter().map(|&x| self.group(self.slices[x].group).order()).min();
        let Some(min) = min else { return Ok(Vec::new()) };
        trace
            .into_iter()
            .filter(|&x| self.group(self.slices[x].group).order() == min)
            .map(|x| {
                let a = self.slices[x];
                let l = self.lattice(a.group);
                Ok((x, is_t_slice(l, l.top(), a.s)?))
            })
            .collect()
    }
}

fn join_usize(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn minimal_from_dims(u: &GroupUniverse, dims: &[usize]) -> Vec<usize> {
    (0..u.num_groups())
        .filter(|&i| {
            let n = u.group(i).order();
            dims[i] > 0 && (0..u.num_groups()).all(|k| u.group(k).order() >= n || dims[k] == 0)
        })
        .collect()
}

fn is_elementary_abelian(l: &SubgroupLattice) -> bool {
    let g = l.group();
    g.is_abelian() && l.frattini() == l.trivial()
}

/// Moves used by [`GroupUniverse::bounded_closure`] beyond the three basic ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureMoves {
    pub frattini_products: bool,
}

impl Default for ClosureMoves {
    fn default() -> Self {
        ClosureMoves { frattini_products: true }
    }
}

/// A slice in a report: `T` is the named group (or the stated subgroup of it).
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SliceRef {
    pub group: String,
    pub t_order: usize,
    pub s_order: usize,
    /// generators of `S` in the group's element indexing
    pub s: Vec<usize>,
    pub proper: bool,
    pub s_cyclic: bool,
}

impl fmt::Display for SliceRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, S = <{}> of order {})", self.group, join_usize(&self.s), self.s_order)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub slice: SliceRef,
    /// generators of the normal subgroup used
    pub normal: Option<Vec<usize>>,
    /// the other factor of a product
    pub factor: Option<SliceRef>,
    pub image: SliceRef,
    /// the deflation constant, as `"p/q"`
    pub constant: Option<String>,
}

/// Outcome of checking a family over a universe. Every result is universe-bounded.
#[derive(Clone, Debug, Serialize)]
pub struct ConditionReport {
    pub family: String,
    pub prime: usize,
    pub bound: usize,
    pub universe_bounded: bool,
    pub groups: usize,
    pub abstract_slices: usize,
    pub slice_classes: usize,
    pub members: usize,
    /// membership differs between a slice and its abstract representative
    pub condition_a: Vec<Witness>,
    /// a non-member surjects onto a member
    pub condition_c: Vec<Witness>,
    /// a member deflates with nonzero constant onto a non-member
    pub condition_d: Vec<Witness>,
    /// a product of a member with a slice is not a member
    pub products: Vec<Witness>,
    pub passed: bool,
}

impl ConditionReport {
    fn is_clean(&self) -> bool {
        self.condition_a.is_empty()
            && self.condition_c.is_empty()
            && self.condition_d.is_empty()
            && self.products.is_empty()
    }

    /// The first violation, if any.
    pub fn first_witness(&self) -> Option<(&'static str, &Witness)> {
        [
            ("A", &self.condition_a),
            ("C", &self.condition_c),
            ("D", &self.condition_d),
            ("product", &self.products),
        ]
        .into_iter()
        .find_map(|(name, v)| v.first().map(|w| (name, w)))
    }
}

/// Smallest lattice index in each `Aut(G)`-orbit of subgroups.
fn aut_orbit_reps(l: &SubgroupLattice) -> Vec<usize> {
    let g = l.group();
    let autos = automorphisms(g);
    (0..l.len())
        .map(|s| {
            let gens = l.subgroup(s).generators();
            autos
                .iter()
                .map(|a| {
                    let img: Vec<usize> = gens.iter().map(|&x| a[x]).collect();
                    l.subgroup_generated(&img)
                })
                .min()
                .unwrap_or(s)
        })
        .collect()
}

/// An isomorphism from the subgroup `t` of `g` onto some group of `groups`,
/// as an element map on `g` that is `usize::MAX` off `t`.
fn embed_into(groups: &[GroupRef], g: &GroupRef, t: &Subgroup) -> Option<(usize, Vec<usize>)> {
    let emb = Embedding::of_subgroup(g, t);
    let sub = emb.sub();
    groups.iter().enumerate().find_map(|(j, h)| {
        if h.order() != sub.order() {
            return None;
        }
        let iso = find_isomorphism(sub, h)?;
        let mut map = vec![usize::MAX; g.order()];
        for (x, &y) in iso.iter().enumerate() {
            map[emb.apply(x)] = y;
        }
        Some((j, map))
    })
}

/// `A × B` with `(a, b)` stored at index `a * |B| + b`.
pub fn direct_product_indexed(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let (xa, xb) = (x / nb, x % nb);
            let (ya, yb) = (y / nb, y % nb);
            table.push((a.mul(xa, ya) * nb + b.mul(xb, yb)) as u32);
        }
    }
    FiniteGroup::from_table(format!("{}x{}", a.label(), b.label()), n, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ORDER_CAP as CAP;

    fn ring(g: FiniteGroup) -> Arc<SliceRing> {
        SliceRing::new(Arc::new(g))
    }

    #[test]
    fn membership_examples() {
        let full = SliceShape { proper: false, s_cyclic: false };
        assert!(!SliceFamily::J1.contains(full));
        let proper_cyclic = SliceShape { proper: true, s_cyclic: true };
        assert!(SliceFamily::J1.contains(proper_cyclic) && !SliceFamily::J2.contains(proper_cyclic));
        let e = lattice_of_group(FiniteGroup::elementary_abelian(3, 3, CAP).unwrap());
        let s = (0..e.len()).find(|&i| e.order_of(i) == 9).unwrap();
        assert!(family_membership(SliceFamily::J3, &e, e.top(), s));
        assert_eq!("j3".parse::<SliceFamily>().unwrap(), SliceFamily::J3);
        assert!("J5".parse::<SliceFamily>().is_err());
    }

    fn lattice_of_group(g: FiniteGroup) -> SubgroupLattice {
        SubgroupLattice::new(Arc::new(g))
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(ideal_dimension(&ring(FiniteGroup::dihedral(8, CAP).unwrap()), SliceFamily::J3), 2);
        assert_eq!(ideal_dimension(&ring(FiniteGroup::abelian(&[4, 2], CAP).unwrap()), SliceFamily::J3), 1);
        assert_eq!(ideal_dimension(&ring(FiniteGroup::quaternion()), SliceFamily::J3), 0);
        assert_eq!(ideal_dimension(&ring(FiniteGroup::trivial()), SliceFamily::J1), 0);
        let c4 = ring(FiniteGroup::cyclic(4, CAP).unwrap());
        assert_eq!(ideal_dimension(&c4, SliceFamily::Full), c4.len());
        assert_eq!(ideal_basis(&c4, SliceFamily::Zero).len(), 0);
    }

    #[test]
    fn embedding_meets_j1_trivially() {
        let r = ring(FiniteGroup::dihedral(8, CAP).unwrap());
        let b = burnside_embedding(&r);
        assert_eq!(intersection_dim(&r, &b, SliceFamily::J1).unwrap(), 0);
        assert_eq!(intersection_dim(&r, &b, SliceFamily::Full).unwrap(), b.len());
        assert_eq!(intersection_dim(&r, &b, SliceFamily::Zero).unwrap(), 0);
    }

    #[test]
    fn universe_p2() {
        let u = GroupUniverse::new(2, 8).unwrap();
        assert_eq!(u.num_groups(), 1 + 1 + 2 + 5);
        assert!(GroupUniverse::new(2, 16).is_err());
        assert!(GroupUniverse::new(4, 16).is_err());
        for f in [SliceFamily::J1, SliceFamily::J2, SliceFamily::J3, SliceFamily::J4, SliceFamily::Full] {
            let r = u.check_conditions(f);
            assert!(r.passed, "{f}: {:?}", r.first_witness());
        }
        let bad = u.check_conditions(SliceFamily::SCyclic);
        assert!(!bad.passed);
        assert!(!bad.condition_c.is_empty());
    }

    #[test]
    fn closures_p2() {
        let u = GroupUniverse::new(2, 8).unwrap();
        let find = |order: usize, elab: bool, s_order: usize| {
            (0..u.slices().len())
                .find(|&x| {
                    let a = u.slice(x);
                    let l = u.ring(a.group).lattice();
                    let g = u.group(a.group);
                    g.order() == order
                        && (g.exponent() == 2 || order == 1) == elab
                        && l.order_of(a.s) == s_order
                })
                .unwrap()
        };
        let trivial = find(1, true, 1);
        let cp = find(2, true, 1);
        let e2 = find(4, true, 4);
        let e3 = find(8, true, 4);
        let all = u.bounded_closure(trivial, ClosureMoves::default());
        assert_eq!(all.len(), u.slices().len());
        assert_eq!(u.bounded_closure(cp, ClosureMoves::default()), u.family_trace(SliceFamily::J1));
        assert_eq!(u.bounded_closure(e2, ClosureMoves::default()), u.family_trace(SliceFamily::J2));
        assert_eq!(u.bounded_closure(e3, ClosureMoves::default()), u.family_trace(SliceFamily::J3));
    }

    #[test]
    fn product_indexing() {
        let a = FiniteGroup::cyclic(2, CAP).unwrap();
        let b = FiniteGroup::cyclic(4, CAP).unwrap();
        let p = direct_product_indexed(&a, &b).unwrap();
        assert_eq!(p.order(), 8);
        assert_eq!(p.mul(4 + 1, 4 + 3), 0);
    }
}
