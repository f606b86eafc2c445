//! The acceptance checks, one function per criterion, over the default corpus
//! and the bounded universes of p-groups.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::biset::{
    deflation, deflation_scalar, deflation_scalar_printed, idempotent_multiple, induction,
    induction_of_idempotent, inflation, inflation_of_idempotent, restriction,
    restriction_of_idempotent, transport, Path,
};
use crate::constants::{
    complement_count_check, elab_m_circ_closed_form, elab_m_classical_closed_form, is_b_group,
    is_t_slice, m_circ, m_circ_frattini, m_classical, m_relative, m_relative_double_sum, m_slice,
    m_slice_factored, m_slice_frattini, vanishing_criterion,
};
use crate::corpus::{default_corpus, p_group_corpus, prime_power};
use crate::error::Result;
use crate::group::{
    automorphisms, find_isomorphism, Embedding, FiniteGroup, GroupRef, Hom, Isomorphism,
    QuotientMap, SubgroupLattice, DEFAULT_ORDER_CAP,
};
use crate::ideals::{
    burnside_embedding, direct_product_indexed, hasse_diagram, ideal_dimension, intersection_dim,
    lattice_shape, ClosureMoves, GroupUniverse, SliceFamily,
};
use crate::rational::{q, qi, Q};
use crate::ring::{SliceElement, SliceRing};

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Compare formula and oracle on every biset operation, not just on basis elements.
    pub deep: bool,
    pub seed: u64,
    /// Randomly sampled product pairs per group of order 27.
    pub sampled_pairs: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            deep: false,
            seed: 0x5eed,
            sampled_pairs: 200,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub checks: u64,
    /// The first few failures.
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub elapsed_ms: u128,
    pub budget_ms: u128,
}

impl CriterionReport {
    pub fn within_budget(&self) -> bool {
        self.elapsed_ms <= self.budget_ms
    }

    /// One line: `criterion 3 (biset transport): PASS, 1234 checks, 5.1 s (budget 120 s)`.
    pub fn line(&self) -> String {
        format!(
            "criterion {} ({}): {}, {} checks, {:.1} s (budget {} s)",
            self.id,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.checks,
            self.elapsed_ms as f64 / 1000.0,
            self.budget_ms / 1000
        )
    }
}

const MAX_FAILURES: usize = 20;

#[derive(Default)]
struct Tally {
    checks: u64,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < MAX_FAILURES {
            self.failures.push(msg());
        }
    }

    fn check_result<T>(&mut self, r: Result<T>, ctx: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(x) => Some(x),
            Err(e) => {
                self.check(false, || format!("{}: {e}", ctx()));
                None
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        for f in other.failures {
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(f);
            }
        }
        self.notes.extend(other.notes);
        self
    }

    fn finish(self, id: usize, name: &'static str, budget_s: u64, start: Instant) -> CriterionReport {
        CriterionReport {
            id,
            name,
            passed: self.failures.is_empty(),
            checks: self.checks,
            failures: self.failures,
            notes: self.notes,
            elapsed_ms: start.elapsed().as_millis(),
            budget_ms: Duration::from_secs(budget_s).as_millis(),
        }
    }
}

fn par_groups(groups: &[GroupRef], f: impl Fn(&GroupRef) -> Tally + Sync + Send) -> Tally {
    groups
        .par_iter()
        .map(f)
        .reduce(Tally::default, Tally::merge)
}

/// Runs every criterion in order.
pub fn run_all(opts: &VerifyOptions) -> Vec<CriterionReport> {
    vec![
        idempotents(opts),
        multiplication(opts),
        biset_transport(opts),
        deflation_constants(opts),
        classifications(opts),
        dimension_table(opts),
        ideal_lattice(opts),
        minimal_groups(opts),
        burnside_embedding_check(opts),
        family_conditions(opts),
    ]
}

pub fn run_one(id: usize, opts: &VerifyOptions) -> Option<CriterionReport> {
    Some(match id {
        1 => idempotents(opts),
        2 => multiplication(opts),
        3 => biset_transport(opts),
        4 => deflation_constants(opts),
        5 => classifications(opts),
        6 => dimension_table(opts),
        7 => ideal_lattice(opts),
        8 => minimal_groups(opts),
        9 => burnside_embedding_check(opts),
        10 => family_conditions(opts),
        _ => return None,
    })
}

/// Orthogonality, completeness and marks of the primitive idempotents.
pub fn idempotents(_opts: &VerifyOptions) -> CriterionReport {
    let start = Instant::now();
    let t = par_groups(&default_corpus(), |g| {
        let mut t = Tally::default();
        let ring = SliceRing::new(g.clone());
        let n = ring.len();
        let xi: Vec<SliceElement> = (0..n).map(|c| ring.idempotent(c)).collect();
        for a in 0..n {
            for b in a..n {
                let p = &xi[a] * &xi[b];
                let ok = if a == b { p == xi[a] } else { p.is_zero() };
                t.check(ok, || format!("{}: xi_{a} * xi_{b} = {p}", g.label()));
            }
        }
        let sum = xi.iter().fold(ring.zero(), |acc, x| &acc + x);
        t.check(sum == ring.one(), || format!("{}: idempotents sum to {sum}", g.label()));
        for (c, x) in xi.iter().enumerate() {
            if let Some(v) = t.check_result(ring.to_mark_vector(x), || g.label().to_string()) {
                let ok = v.iter().enumerate().all(|(k, y)| *y == if k == c { Q::one() } else { Q::zero() });
                t.check(ok, || format!("{}: marks of xi_{c} are not an indicator", g.label()));
            }
        }
        t
    });
    t.finish(1, "idempotents", 30, start)
}

/// Structure constants against the orbit decomposition of products of morphisms.
pub fn multiplication(opts: &VerifyOptions) -> CriterionReport {
    let start = Instant::now();
    let seed = opts.seed;
    let samples = opts.sampled_pairs;
    let t = par_groups(&default_corpus(), |g| {
        let mut t = Tally::default();
        let ring = SliceRing::new(g.clone());
        let n = ring.len();
        let pairs: Vec<(usize, usize)> = if g.order() <= 16 {
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ g.order() as u64 ^ hash_label(g.label()));
            let mut all: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
            all.shuffle(&mut rng);
            all.truncate(samples.max(1));
            all
        };
        for (a, b) in pairs {
            let formula = SliceElement::from_coeffs(
                &ring,
                ring.basis_mul(a, b).iter().map(|&(c, k)| (c as usize, qi(k as i64))),
            );
            let oracle = ring.basis_mul_oracle(a, b);
            t.check(formula == oracle, || {
                format!("{}: {} * {}: formula {formula}, oracle {oracle}", g.label(), ring.class_label(a), ring.class_label(b))
            });
        }
        t
    });
    t.finish(2, "multiplication oracle", 60, start)
}

fn hash_label(s: &str) -> u64 {
    s.bytes().fold(0xcbf29ce484222325, |h, b| (h ^ b as u64).wrapping_mul(0x100000001b3))
}

/// Rings of subgroups and quotients of one group, built once.
pub struct GroupContext {
    pub ring: Arc<SliceRing>,
    subs: HashMap<usize, (Arc<Embedding>, Arc<SliceRing>)>,
    quots: HashMap<usize, (Arc<QuotientMap>, Arc<SliceRing>)>,
}

impl GroupContext {
    pub fn new(g: &GroupRef) -> Self {
        GroupContext {
            ring: SliceRing::new(g.clone()),
            subs: HashMap::new(),
            quots: HashMap::new(),
        }
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        self.ring.lattice()
    }

    /// The subgroup with lattice index `h` as a group, with its embedding and ring.
    pub fn sub(&mut self, h: usize) -> (Arc<Embedding>, Arc<SliceRing>) {
        let g = self.ring.group().clone();
        let l = self.ring.lattice().clone();
        self.subs
            .entry(h)
            .or_insert_with(|| {
                let emb = Embedding::of_subgroup(&g, l.subgroup(h));
                let ring = SliceRing::new(emb.sub().clone());
                (Arc::new(emb), ring)
            })
            .clone()
    }

    /// `G/N` for the normal subgroup with lattice index `n`.
    pub fn quotient(&mut self, n: usize) -> Result<(Arc<QuotientMap>, Arc<SliceRing>)> {
        if let Some(x) = self.quots.get(&n) {
            return Ok(x.clone());
        }
        let qm = QuotientMap::new(self.ring.group(), self.ring.lattice().subgroup(n))?;
        let ring = SliceRing::new(qm.quotient().clone());
        let x = (Arc::new(qm), ring);
        self.quots.insert(n, x.clone());
        Ok(x)
    }

    /// Embedding of subgroup `inner` into subgroup `outer`, both as groups.
    pub fn sub_embedding(&mut self, inner: usize, outer: usize) -> Result<Embedding> {
        let (ei, _) = self.sub(inner);
        let (eo, _) = self.sub(outer);
        let back = inverse_on_image(&eo, self.ring.group().order());
        let map = (0..ei.sub().order()).map(|x| back[ei.apply(x)]).collect();
        Embedding::new(Hom::new(ei.sub().clone(), eo.sub().clone(), map)?)
    }
}

fn inverse_on_image(e: &Embedding, n: usize) -> Vec<usize> {
    let mut back = vec![usize::MAX; n];
    for x in 0..e.sub().order() {
        back[e.apply(x)] = x;
    }
    back
}

/// Restriction, induction, inflation, deflation and transport of idempotents,
/// plus formula-versus-oracle agreement on every basis element.
pub fn biset_transport(opts: &VerifyOptions) -> CriterionReport {
    let start = Instant::now();
    let path = if opts.deep { Path::Checked } else { Path::Formula };
    let seed = opts.seed;
    let t = par_groups(&default_corpus(), |g| {
        let mut t = Tally::default();
        let mut cx = GroupContext::new(g);
        check_restriction_induction(&mut cx, path, &mut t);
        check_inflation_deflation(&mut cx, path, &mut t);
        check_transport(&cx, path, seed, &mut t);
        check_commutation(&mut cx, &mut t);
        t
    });
    let mut t = t;
    let disagreements = t.notes.iter().filter(|n| n.starts_with("printed scalar differs")).count();
    t.notes.retain(|n| !n.starts_with("printed scalar differs"));
    t.notes.push(format!(
        "the general deflation scalar with |N_T(SN)| in the denominator differs from the computed one in {disagreements} configurations, all with N not contained in T; with |N_TN(SN)| it matches everywhere"
    ));
    t.finish(3, "biset operations on idempotents", 120, start)
}

fn check_restriction_induction(cx: &mut GroupContext, path: Path, t: &mut Tally) {
    let g_ring = cx.ring.clone();
    let label = g_ring.group().label().to_string();
    for h in cx.lattice().class_reps() {
        let (emb, h_ring) = cx.sub(h);
        for c in 0..g_ring.len() {
            let ctx = || format!("{label}: restriction of {} to subgroup {h}", g_ring.class_label(c));
            t.check_result(restriction(&g_ring.basis(c), &emb, &h_ring, Path::Checked), ctx);
            let got = restriction(&g_ring.idempotent(c), &emb, &h_ring, path);
            let want = restriction_of_idempotent(&g_ring, &h_ring, &emb, c);
            if let (Some(a), Some(b)) = (t.check_result(got, ctx), t.check_result(want, ctx)) {
                t.check(a == b, || format!("{}: got {a}, predicted {b}", ctx()));
            }
        }
        for d in 0..h_ring.len() {
            let ctx = || format!("{label}: induction of {} from subgroup {h}", h_ring.class_label(d));
            t.check_result(induction(&h_ring.basis(d), &emb, &g_ring, Path::Checked), ctx);
            let got = induction(&h_ring.idempotent(d), &emb, &g_ring, path);
            let want = induction_of_idempotent(&h_ring, &g_ring, &emb, d);
            if let (Some(a), Some(b)) = (t.check_result(got, ctx), t.check_result(want, ctx)) {
                t.check(a == b, || format!("{}: got {a}, predicted {b}", ctx()));
            }
        }
    }
}

fn check_inflation_deflation(cx: &mut GroupContext, path: Path, t: &mut Tally) {
    let g_ring = cx.ring.clone();
    let l = g_ring.lattice().clone();
    let label = g_ring.group().label().to_string();
    for n in l.normal_subgroups() {
        let Some((qm, quo)) = t.check_result(cx.quotient(n), || format!("{label}: quotient")) else {
            continue;
        };
        for c in 0..quo.len() {
            let ctx = || format!("{label}: inflation of {} along normal subgroup {n}", quo.class_label(c));
            t.check_result(inflation(&quo.basis(c), &qm, &g_ring, Path::Checked), ctx);
            let got = inflation(&quo.idempotent(c), &qm, &g_ring, path);
            let want = inflation_of_idempotent(&quo, &g_ring, &qm, c);
            if let (Some(a), Some(b)) = (t.check_result(got, ctx), t.check_result(want, ctx)) {
                t.check(a == b, || format!("{}: got {a}, predicted {b}", ctx()));
            }
        }
        let ql = quo.lattice();
        for c in 0..g_ring.len() {
            let k = g_ring.class(c);
            let ctx = || format!("{label}: deflation of {} by normal subgroup {n}", g_ring.class_label(c));
            t.check_result(deflation(&g_ring.basis(c), &qm, &quo, Path::Checked), ctx);
            let Some(got) = t.check_result(deflation(&g_ring.idempotent(c), &qm, &quo, path), ctx) else {
                continue;
            };
            let Some(scalar) = t.check_result(deflation_scalar(&l, k.t, k.s, n), ctx) else {
                continue;
            };
            let target = quo.class_of_subgroups(&qm.image(l.subgroup(k.t)), &qm.image(l.subgroup(k.s)));
            let Some(target) = t.check_result(target, ctx) else { continue };
            let want = quo.idempotent(target).scale(&scalar);
            t.check(got == want, || format!("{}: got {got}, predicted {want}", ctx()));
            if let Some(printed) = t.check_result(deflation_scalar_printed(&l, k.t, k.s, n), ctx) {
                if printed != scalar {
                    t.check(!l.leq(n, k.t), || format!("{}: printed scalar differs although N <= T", ctx()));
                    t.notes.push("printed scalar differs".into());
                }
            }
            if k.t == l.top() {
                if let Some(m) = t.check_result(m_slice(&l, k.s, n), ctx) {
                    t.check(m == scalar, || format!("{}: m = {m}, scalar {scalar}", ctx()));
                }
                // the two prefactor forms of the top-slice scalar
                let sn = l.join(k.s, n);
                let nq = ql.index_of(&qm.image(l.subgroup(sn))).expect("image is a subgroup");
                let n_quo = ql.order_of(ql.normalizer(nq)) as i64;
                let boxed = q(l.order_of(l.normalizer(sn)) as i64, (l.order_of(sn) * l.order_of(l.normalizer(k.s))) as i64);
                let in_proof = q(n_quo * l.order_of(n) as i64, (l.order_of(l.normalizer(k.s)) * l.order_of(sn)) as i64);
                t.check(boxed == in_proof, || format!("{}: prefactors {boxed} vs {in_proof}", ctx()));
            }
        }
    }
}

/// Relabels the elements of `g` by a random permutation fixing the identity.
fn relabeled(g: &FiniteGroup, rng: &mut ChaCha8Rng) -> Result<(FiniteGroup, Vec<usize>)> {
    let n = g.order();
    let mut perm: Vec<usize> = (1..n).collect();
    perm.shuffle(rng);
    perm.insert(0, 0);
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            table[perm[a] * n + perm[b]] = perm[g.mul(a, b)] as u32;
        }
    }
    Ok((FiniteGroup::from_table(format!("{}'", g.label()), n, table)?, perm))
}

fn check_transport(cx: &GroupContext, path: Path, seed: u64, t: &mut Tally) {
    let g_ring = cx.ring.clone();
    let g = g_ring.group().clone();
    let label = g.label().to_string();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ hash_label(&label));
    let mut maps: Vec<(Vec<usize>, Arc<SliceRing>)> = Vec::new();
    let autos = automorphisms(&g);
    let step = (autos.len() / 48).max(1);
    for a in autos.into_iter().step_by(step) {
        maps.push((a, g_ring.clone()));
    }
    if let Some((h, perm)) = t.check_result(relabeled(&g, &mut rng), || label.clone()) {
        maps.push((perm, SliceRing::new(Arc::new(h))));
    }
    for (map, target) in maps {
        let Some(phi) = t.check_result(
            Isomorphism::from_map(g.clone(), target.group().clone(), map),
            || label.clone(),
        ) else {
            continue;
        };
        let tl = target.lattice();
        for c in 0..g_ring.len() {
            let k = g_ring.class(c);
            let ctx = || format!("{label}: transport of {}", g_ring.class_label(c));
            t.check_result(transport(&g_ring.basis(c), &phi, &target, Path::Checked), ctx);
            let Some(got) = t.check_result(transport(&g_ring.idempotent(c), &phi, &target, path), ctx) else {
                continue;
            };
            let ti = tl.index_of(&phi.image(g_ring.lattice().subgroup(k.t))).expect("image");
            let si = tl.index_of(&phi.image(g_ring.lattice().subgroup(k.s))).expect("image");
            if let Some(want) = t.check_result(target.idempotent_of(ti, si), ctx) {
                t.check(got == want, || format!("{}: got {got}, predicted {want}", ctx()));
            }
        }
    }
}

/// The Mackey formula (groups of order at most 16) and deflation of induction.
fn check_commutation(cx: &mut GroupContext, t: &mut Tally) {
    let g_ring = cx.ring.clone();
    let g = g_ring.group().clone();
    let l = g_ring.lattice().clone();
    let label = g.label().to_string();
    let reps = l.class_reps();
    if g.order() <= 16 {
        for &h in &reps {
            for &k in &reps {
                if let Err(e) = mackey(cx, h, k, t) {
                    t.check(false, || format!("{label}: Mackey formula for subgroups {h}, {k}: {e}"));
                }
            }
        }
    }
    for &h in &reps {
        for n in l.normal_subgroups() {
            if let Err(e) = deflation_of_induction(cx, h, n, t) {
                t.check(false, || format!("{label}: deflation of induction for {h}, {n}: {e}"));
            }
        }
    }
}

fn mackey(cx: &mut GroupContext, h: usize, k: usize, t: &mut Tally) -> Result<()> {
    let g_ring = cx.ring.clone();
    let g = g_ring.group().clone();
    let l = g_ring.lattice().clone();
    let (emb_h, ring_h) = cx.sub(h);
    let (emb_k, ring_k) = cx.sub(k);
    for c in 0..ring_k.len() {
        let a = ring_k.basis(c);
        let lhs = restriction(&induction(&a, &emb_k, &g_ring, Path::Formula)?, &emb_h, &ring_h, Path::Formula)?;
        let mut rhs = ring_h.zero();
        for x in l.double_cosets(h, k) {
            let xi = g.inv(x);
            let src = l.meet(k, l.conj(xi, h));
            let dst = l.meet(h, l.conj(x, k));
            let (e_src, r_src) = cx.sub(src);
            let (e_dst, r_dst) = cx.sub(dst);
            let back = inverse_on_image(&e_dst, g.order());
            let gamma = (0..e_src.sub().order()).map(|y| back[g.conjugate(x, e_src.apply(y))]).collect();
            let gamma = Isomorphism::from_map(e_src.sub().clone(), e_dst.sub().clone(), gamma)?;
            let r1 = restriction(&a, &cx.sub_embedding(src, k)?, &r_src, Path::Formula)?;
            let r2 = transport(&r1, &gamma, &r_dst, Path::Formula)?;
            let r3 = induction(&r2, &cx.sub_embedding(dst, h)?, &ring_h, Path::Formula)?;
            rhs = rhs.checked_add(&r3)?;
        }
        t.check(lhs == rhs, || {
            format!("{}: Mackey formula on {}: {lhs} vs {rhs}", g.label(), ring_k.class_label(c))
        });
    }
    Ok(())
}

fn deflation_of_induction(cx: &mut GroupContext, h: usize, n: usize, t: &mut Tally) -> Result<()> {
    let g_ring = cx.ring.clone();
    let g = g_ring.group().clone();
    let l = g_ring.lattice().clone();
    let (emb_h, ring_h) = cx.sub(h);
    let (qg, quo) = cx.quotient(n)?;
    let hn_in_h = emb_h.pull_back(l.subgroup(l.meet(h, n)))?;
    let qh = QuotientMap::new(emb_h.sub(), &hn_in_h)?;
    let ring_qh = SliceRing::new(qh.quotient().clone());
    let hn_bar = qg.image(l.subgroup(l.join(h, n)));
    let emb_hn = Embedding::of_subgroup(qg.quotient(), &hn_bar);
    let ring_hn = SliceRing::new(emb_hn.sub().clone());
    let back = inverse_on_image(&emb_hn, qg.quotient().order());
    let phi = (0..qh.quotient().order())
        .map(|c| back[qg.project(emb_h.apply(qh.lift(c)))])
        .collect();
    let phi = Isomorphism::from_map(qh.quotient().clone(), emb_hn.sub().clone(), phi)?;
    for c in 0..ring_h.len() {
        let a = ring_h.basis(c);
        let lhs = deflation(&induction(&a, &emb_h, &g_ring, Path::Formula)?, &qg, &quo, Path::Formula)?;
        let d = deflation(&a, &qh, &ring_qh, Path::Formula)?;
        let rhs = induction(&transport(&d, &phi, &ring_hn, Path::Formula)?, &emb_hn, &quo, Path::Formula)?;
        t.check(lhs == rhs, || {
            format!("{}: deflation of induction on {}: {lhs} vs {rhs}", g.label(), ring_h.class_label(c))
        });
    }
    Ok(())
}

fn minimal_abelian_normals(l: &SubgroupLattice) -> Vec<usize> {
    let normals = l.normal_subgroups();
    normals
        .iter()
        .copied()
        .filter(|&n| {
            n != l.trivial()
                && !normals.iter().any(|&m| m != l.trivial() && m != n && l.leq(m, n))
                && is_abelian_subgroup(l, n)
        })
        .collect()
}

fn is_abelian_subgroup(l: &SubgroupLattice, n: usize) -> bool {
    let g = l.group();
    let h = l.subgroup(n).members();
    h.iter().all(|&a| h.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

/// Transitivity, factorization, complements, Frattini invariance, the
/// elementary abelian closed forms and the vanishing criterion.
pub fn deflation_constants(_opts: &VerifyOptions) -> CriterionReport {
    let start = Instant::now();
    let mut t = par_groups(&default_corpus(), |g| {
        let mut t = Tally::default();
        let mut cx = GroupContext::new(g);
        let l = cx.ring.lattice().clone();
        let label = g.label().to_string();
        let is_p = prime_power(g.order()).is_some();
        let normals = l.normal_subgroups();
        for &n in &normals {
            let Some((qm, quo)) = t.check_result(cx.quotient(n), || label.clone()) else { continue };
            let ql = quo.lattice();
            for s in 0..l.len() {
                let ctx = || format!("{label}: S = subgroup {s}, N = subgroup {n}");
                let Some(m) = t.check_result(m_slice(&l, s, n), ctx) else { continue };
                for (name, alt) in [
                    ("double sum", m_relative_double_sum(&l, l.top(), s, n)),
                    ("factored", m_slice_factored(&l, s, n)),
                    ("Frattini", m_slice_frattini(&l, s, n)),
                ] {
                    if let Some(a) = t.check_result(alt, ctx) {
                        t.check(a == m, || format!("{}: {name} form {a} vs {m}", ctx()));
                    }
                }
                if is_p {
                    if let (Some(a), Some(b)) = (t.check_result(m_circ(&l, s, n), ctx), t.check_result(m_circ_frattini(&l, s, n), ctx)) {
                        t.check(a == b, || format!("{}: m° {a} vs Frattini quotient {b}", ctx()));
                    }
                }
                // transitivity along N <= M
                let sn = ql.index_of(&qm.image(l.subgroup(s))).expect("image");
                for &mm in normals.iter().filter(|&&mm| l.leq(n, mm)) {
                    let mq = ql.index_of(&qm.image(l.subgroup(mm))).expect("image");
                    if let (Some(a), Some(b), Some(c)) = (
                        t.check_result(m_slice(&l, s, mm), ctx),
                        t.check_result(m_slice(ql, sn, mq), ctx),
                        Some(m.clone()),
                    ) {
                        t.check(a == &c * &b, || format!("{}: M = {mm}: {a} vs {c} * {b}", ctx()));
                    }
                }
                // the constant is the scalar of the deflated idempotent
                let c = cx.ring.class_of(l.top(), s).expect("slice");
                let target = quo.class_of(ql.top(), sn).expect("slice");
                let d = deflation(&cx.ring.idempotent(c), &qm, &quo, Path::Formula)
                    .and_then(|x| idempotent_multiple(&x, target));
                if let Some(x) = t.check_result(d, ctx) {
                    t.check(x.as_ref() == Some(&m), || format!("{}: deflation scalar {x:?} vs {m}", ctx()));
                }
            }
        }
        for n in minimal_abelian_normals(&l) {
            if let Some((a, b)) = t.check_result(complement_count_check(&l, n), || label.clone()) {
                t.check(a == b, || format!("{label}: complement count {a} vs {b} for normal {n}"));
            }
        }
        if is_p {
            for tt in 0..l.len() {
                for s in l.below(tt).iter() {
                    for mm in l.normal_subgroups_of(tt) {
                        if let Some(m) = t.check_result(m_relative(&l, tt, s, mm), || label.clone()) {
                            let crit = vanishing_criterion(&l, tt, s, mm);
                            t.check(m.is_zero() == crit, || {
                                format!("{label}: T = {tt}, S = {s}, M = {mm}: m = {m}, criterion says zero = {crit}")
                            });
                        }
                    }
                }
            }
        }
        t
    });
    for p in [2usize, 3] {
        for rank in 1..=4 {
            t = t.merge(elementary_abelian_closed_forms(p, rank));
        }
    }
    t.finish(4, "deflation constants", 60, start)
}

fn elementary_abelian_closed_forms(p: usize, rank: usize) -> Tally {
    let mut t = Tally::default();
    let g = Arc::new(FiniteGroup::elementary_abelian(p, rank, DEFAULT_ORDER_CAP).expect("small"));
    let l = SubgroupLattice::new(g.clone());
    let log = |x: usize| x.ilog(p);
    let n = rank as u32;
    for nn in 0..l.len() {
        let k = log(l.order_of(nn));
        let ctx = || format!("C{p}^{rank}: N of rank {k}");
        if let Some(m) = t.check_result(m_circ(&l, l.trivial(), nn), ctx) {
            let want = elab_m_circ_closed_form(p as u32, n, k);
            t.check(m == want, || format!("{}: m° = {m}, closed form {want}", ctx()));
        }
        if k >= 1 && k + 2 <= n {
            if let (Some(m), Ok(want)) = (t.check_result(m_classical(&l, nn), ctx), elab_m_classical_closed_form(p as u32, n, k)) {
                t.check(m == qi(want), || format!("{}: m = {m}, closed form {want}", ctx()));
            }
        }
    }
    // m°_{G,S,N} = m°_{G/S,1,NS/S}
    let subs: Vec<usize> = (0..l.len()).collect();
    let inner = subs
        .par_iter()
        .map(|&s| {
            let mut t = Tally::default();
            let qm = QuotientMap::new(&g, l.subgroup(s)).expect("abelian");
            let ql = SubgroupLattice::new(qm.quotient().clone());
            for nn in 0..l.len() {
                let ns = ql.index_of(&qm.image(l.subgroup(nn))).expect("image");
                let ctx = || format!("C{p}^{rank}: S = {s}, N = {nn}");
                if let (Some(a), Some(b)) = (t.check_result(m_circ(&l, s, nn), ctx), t.check_result(m_circ(&ql, ql.trivial(), ns), ctx)) {
                    t.check(a == b, || format!("{}: m° {a} vs quotient {b}", ctx()));
                }
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    t.merge(inner)
}

fn is_elementary_abelian_lattice(l: &SubgroupLattice) -> bool {
    l.group().is_abelian() && l.frattini() == l.trivial()
}

/// B-groups among small p-groups and T-slices of elementary abelian groups.
pub fn classifications(_opts: &VerifyOptions) -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::default();
    for p in [2usize, 3] {
        let bound = (p * p * p).min(27);
        let Some(u) = t.check_result(GroupUniverse::new(p, bound), || format!("universe p = {p}")) else { continue };
        for g in u.groups() {
            let l = SubgroupLattice::new(g.clone());
            let expected = g.order() == 1 || (g.order() == p * p && is_elementary_abelian_lattice(&l));
            let got = is_b_group(&l);
            t.check(got == expected, || format!("{}: B-group test gives {got}", g.label()));
        }
    }
    // order 16 groups available from constructors; none of them is a B-group
    let cap = DEFAULT_ORDER_CAP;
    let d8 = FiniteGroup::dihedral(8, cap).expect("D8");
    let c2 = FiniteGroup::cyclic(2, cap).expect("C2");
    let extra = [
        FiniteGroup::cyclic(16, cap),
        FiniteGroup::abelian(&[8, 2], cap),
        FiniteGroup::abelian(&[4, 4], cap),
        FiniteGroup::abelian(&[4, 2, 2], cap),
        FiniteGroup::elementary_abelian(2, 4, cap),
        FiniteGroup::dihedral(16, cap),
        direct_product_indexed(&d8, &c2),
        direct_product_indexed(&FiniteGroup::quaternion(), &c2),
    ];
    for g in extra {
        if let Some(g) = t.check_result(g, || "order 16 group".into()) {
            let got = is_b_group(&SubgroupLattice::new(Arc::new(g.clone())));
            t.check(!got, || format!("{}: reported as a B-group", g.label()));
        }
    }
    t.notes.push("B-groups scanned over every group of order <= 8 (p = 2) and <= 27 (p = 3), plus eight groups of order 16".into());
    for p in [2usize, 3] {
        let mut types = BTreeSet::new();
        for rank in 0..=4 {
            let g = FiniteGroup::elementary_abelian(p, rank, DEFAULT_ORDER_CAP).expect("small");
            let l = SubgroupLattice::new(Arc::new(g));
            let found: Vec<(u32, u32)> = (0..l.len())
                .into_par_iter()
                .filter_map(|f| {
                    is_t_slice(&l, l.top(), f)
                        .ok()
                        .filter(|&x| x)
                        .map(|_| (rank as u32, l.order_of(f).ilog(p)))
                })
                .collect();
            t.checks += l.len() as u64;
            types.extend(found);
        }
        let want: BTreeSet<(u32, u32)> = [(0, 0), (1, 0), (2, 2), (3, 2)].into_iter().collect();
        t.check(types == want, || format!("p = {p}: T-slice types (rank E, rank F) = {types:?}"));
    }
    t.finish(5, "classifications", 60, start)
}

/// Dimensions of the third ideal for the groups of order p^3 with a noncyclic proper subgroup.
pub fn dimension_table(_opts: &VerifyOptions) -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::default();
    let cap = DEFAULT_ORDER_CAP;
    let rows: Vec<(Result<FiniteGroup>, usize)> = vec![
        (FiniteGroup::elementary_abelian(3, 3, cap), 13),
        (FiniteGroup::abelian(&[9, 3], cap), 1),
        (FiniteGroup::modular(3, cap), 1),
        (FiniteGroup::heisenberg(3, cap), 4),
        (FiniteGroup::elementary_abelian(2, 3, cap), 7),
        (FiniteGroup::abelian(&[4, 2], cap), 1),
        (FiniteGroup::dihedral(8, cap), 2),
    ];
    for (g, want) in rows {
        if let Some(g) = t.check_result(g, || "table group".into()) {
            let d = ideal_dimension(&SliceRing::new(Arc::new(g.clone())), SliceFamily::J3);
            t.check(d == want, || format!("{}: dim = {d}, expected {want}", g.label()));
        }
    }
    let dq = ideal_dimension(&SliceRing::new(Arc::new(FiniteGroup::quaternion())), SliceFamily::J3);
    t.notes.push(format!("dim J3(Q8) = {dq}"));
    t.finish(6, "ideal dimension table", 10, start)
}

/// Member-set identities, span inclusions, the Hasse diagram and bounded closures.
pub fn ideal_lattice(_opts: &VerifyOptions) -> CriterionReport {
    use SliceFamily::*;
    let start = Instant::now();
    let mut t = Tally::default();
    let mut shapes = Vec::new();
    let chain = [(Zero, J3), (J3, J1), (J1, J4), (J4, Full), (J3, J2), (J2, J4)];
    for g in p_group_corpus() {
        let ring = SliceRing::new(g.clone());
        let Some(s) = t.check_result(lattice_shape(&ring), || g.label().to_string()) else { continue };
        t.check(s.meet, || format!("{}: J3 is not J1 ∩ J2", g.label()));
        t.check(s.join, || format!("{}: J4 is not J1 ∪ J2", g.label()));
        for pair in chain {
            t.check(s.inclusions.contains(&pair), || format!("{}: {} not inside {}", g.label(), pair.0, pair.1));
        }
        shapes.push(s);
    }
    let hasse: BTreeSet<(SliceFamily, SliceFamily)> = hasse_diagram(&shapes).into_iter().collect();
    let want: BTreeSet<(SliceFamily, SliceFamily)> = chain.into_iter().collect();
    t.check(hasse == want, || format!("Hasse diagram over the corpus p-groups: {hasse:?}"));
    for p in [2usize, 3] {
        let Some(u) = t.check_result(GroupUniverse::new(p, p * p * p), || format!("universe p = {p}")) else { continue };
        let Some(seeds) = t.check_result(closure_seeds(&u), || format!("seeds p = {p}")) else { continue };
        for (seed, fam) in seeds.into_iter().zip([Full, J1, J2, J3]) {
            let with = u.bounded_closure(seed, ClosureMoves::default());
            let want = u.family_trace(fam);
            t.check(with == want, || format!("p = {p}: closure of {} has {} slices, {fam} has {}", u.describe(seed), with.len(), want.len()));
            let without = u.bounded_closure(seed, ClosureMoves { frattini_products: false });
            if without != want {
                let missing: Vec<String> = want.difference(&without).map(|&x| u.describe(x).to_string()).collect();
                t.notes.push(format!(
                    "p = {p}: without the Frattini product move the closure of {} misses {}",
                    u.describe(seed),
                    missing.join(", ")
                ));
            }
        }
    }
    t.finish(7, "ideal lattice", 60, start)
}

/// `(1,1)`, `(C_p,1)`, `(C_p^2,C_p^2)`, `(C_p^3,C_p^2)` as abstract slices.
pub fn closure_seeds(u: &GroupUniverse) -> Result<Vec<usize>> {
    let p = u.prime();
    let mut out = Vec::new();
    for (rank, s_rank) in [(0usize, 0u32), (1, 0), (2, 2), (3, 2)] {
        let g = Arc::new(FiniteGroup::elementary_abelian(p, rank, DEFAULT_ORDER_CAP)?);
        let l = SubgroupLattice::new(g.clone());
        let s = (0..l.len()).find(|&i| l.order_of(i) == p.pow(s_rank)).expect("subgroup of each order");
        out.push(u.identify(&g, &g.whole(), l.subgroup(s))?);
    }
    Ok(out)
}

/// The minimal groups of the third ideal on the p = 3 universe.
pub fn minimal_groups(_opts: &VerifyOptions) -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::default();
    if let Some(u) = t.check_result(GroupUniverse::new(3, 27), || "universe p = 3".into()) {
        let mins = u.minimal_groups(SliceFamily::J3);
        let labels: Vec<&str> = mins.iter().map(|&i| u.group(i).label()).collect();
        t.check(mins.len() == 4, || format!("minimal groups: {labels:?}"));
        t.check(mins.iter().all(|&i| u.group(i).order() == 27), || format!("minimal groups: {labels:?}"));
        for (a, &i) in mins.iter().enumerate() {
            for &j in &mins[..a] {
                let iso = find_isomorphism(u.group(i), u.group(j)).is_some();
                t.check(!iso, || format!("{} and {} are isomorphic", u.group(i).label(), u.group(j).label()));
            }
        }
        t.check(!mins.iter().any(|&i| u.group(i).is_cyclic()), || "a cyclic group is minimal".into());
        t.notes.push(format!("minimal groups: {}", labels.join(", ")));
        let full = u.minimal_groups(SliceFamily::Full);
        t.check(full.len() == 1 && u.group(full[0]).order() == 1, || "FULL should have the trivial group as its only minimal group".into());
        let j1 = u.minimal_groups(SliceFamily::J1);
        t.check(j1.len() == 1 && u.group(j1[0]).order() == 3, || "J1 should have C3 as its only minimal group".into());
    }
    t.finish(8, "minimal groups", 30, start)
}

/// The image of the Burnside ring meets the first ideal trivially.
pub fn burnside_embedding_check(_opts: &VerifyOptions) -> CriterionReport {
    let start = Instant::now();
    let t = par_groups(&p_group_corpus(), |g| {
        let mut t = Tally::default();
        let ring = SliceRing::new(g.clone());
        let b = burnside_embedding(&ring);
        if let Some(d) = t.check_result(intersection_dim(&ring, &b, SliceFamily::J1), || g.label().to_string()) {
            t.check(d == 0, || format!("{}: intersection has dimension {d}", g.label()));
        }
        if let Some(d) = t.check_result(intersection_dim(&ring, &b, SliceFamily::Full), || g.label().to_string()) {
            t.check(d == b.len(), || format!("{}: embedding has rank {d}, expected {}", g.label(), b.len()));
        }
        t
    });
    t.finish(9, "burnside embedding", 10, start)
}

/// Closure conditions for the named families, the broken family, and the
/// Frattini statements for validated families.
pub fn family_conditions(_opts: &VerifyOptions) -> CriterionReport {
    use SliceFamily::*;
    let start = Instant::now();
    let mut t = Tally::default();
    for p in [2usize, 3] {
        let Some(u) = t.check_result(GroupUniverse::new(p, p * p * p), || format!("universe p = {p}")) else { continue };
        for f in [Zero, J1, J2, J3, J4, Full] {
            let r = u.check_conditions(f);
            t.check(r.passed, || format!("p = {p}: {f} fails: {:?}", r.first_witness()));
            if f != Zero && f != Full {
                check_frattini_statements(&u, f, &mut t);
            }
        }
        let bad = u.check_conditions(SCyclic);
        match bad.first_witness() {
            Some((cond, w)) => {
                t.check(true, String::new);
                t.notes.push(format!(
                    "p = {p}: S-cyclic family fails condition {cond}: {} is not a member but surjects onto member {}",
                    w.slice, w.image
                ));
            }
            None => t.check(false, || format!("p = {p}: S-cyclic family passed")),
        }
        for (seed, name) in closure_seeds(&u).unwrap_or_default().into_iter().zip(["(1,1)", "(Cp,1)", "(Cp^2,Cp^2)", "(Cp^3,Cp^2)"]) {
            let set = u.bounded_closure(seed, ClosureMoves::default());
            let r = u.check_set(name, &set);
            t.check(r.passed, || format!("p = {p}: closure of {name} fails: {:?}", r.first_witness()));
        }
    }
    t.finish(10, "family conditions", 60, start)
}

fn check_frattini_statements(u: &GroupUniverse, f: SliceFamily, t: &mut Tally) {
    let p = u.prime();
    match u.minimal_members_t_slice(f) {
        Ok(v) => {
            for (x, ok) in v {
                t.check(ok, || format!("p = {p}: {f}: minimal member {} is not a T-slice", u.describe(x)));
            }
        }
        Err(e) => t.check(false, || format!("p = {p}: {f}: {e}")),
    }
    for x in 0..u.slices().len() {
        let a = u.slice(x);
        let member = f.contains(a.shape);
        if a.shape.s_cyclic {
            let y = u.frattini_quotient(x);
            t.check(member == f.contains(u.slice(y).shape), || {
                format!("p = {p}: {f}: {} and its Frattini quotient {} differ", u.describe(x), u.describe(y))
            });
        } else {
            for y in u.frattini_partners(x) {
                t.check(member == f.contains(u.slice(y).shape), || {
                    format!("p = {p}: {f}: {} and {} differ", u.describe(x), u.describe(y))
                });
            }
        }
    }
}
