//! Induction, restriction, inflation, deflation and transport between slice rings.
//!
//! Each operation has a closed-form path acting on basis elements and an
//! oracle path that applies the operation to the canonical projection
//! `G/S -> G/T` of every basis class and decomposes the result. The group
//! maps are always explicit: an [`Embedding`] for `Ind`/`Res`, a
//! [`QuotientMap`] for `Inf`/`Def` and an [`Isomorphism`] for `Iso`.

use std::sync::Arc;

use num_traits::Zero;

use crate::constants::m_relative;
use crate::error::{Error, Result};
use crate::group::{same_group, Embedding, Isomorphism, QuotientMap};
use crate::rational::{q, Q};
use crate::ring::{SliceElement, SliceRing};

/// Which implementation to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Path {
    #[default]
    Formula,
    Oracle,
    /// Run both and fail with [`Error::OracleMismatch`] if they differ.
    Checked,
}

fn linear(
    a: &SliceElement,
    target: &Arc<SliceRing>,
    image: impl Fn(usize) -> Result<SliceElement>,
) -> Result<SliceElement> {
    let mut out = target.zero();
    for (c, x) in a.terms() {
        out = out.checked_add(&image(c)?.scale(x))?;
    }
    Ok(out)
}

fn run(
    op: &'static str,
    path: Path,
    formula: impl Fn() -> Result<SliceElement>,
    oracle: impl Fn() -> Result<SliceElement>,
) -> Result<SliceElement> {
    match path {
        Path::Formula => formula(),
        Path::Oracle => oracle(),
        Path::Checked => {
            let f = formula()?;
            let o = oracle()?;
            if f == o {
                Ok(f)
            } else {
                Err(Error::OracleMismatch {
                    op,
                    detail: format!("formula gives {f}, oracle gives {o}"),
                })
            }
        }
    }
}

fn check_rings(
    a: &SliceElement,
    source: &crate::group::GroupRef,
    target: &Arc<SliceRing>,
    target_group: &crate::group::GroupRef,
) -> Result<()> {
    if same_group(a.ring().group(), source) && same_group(target.group(), target_group) {
        Ok(())
    } else {
        Err(Error::GroupMismatch)
    }
}

/// `Ind_H^G`: `⟨V,U⟩_H ↦ ⟨V,U⟩_G`.
pub fn induction(
    a: &SliceElement,
    emb: &Embedding,
    target: &Arc<SliceRing>,
    path: Path,
) -> Result<SliceElement> {
    check_rings(a, emb.sub(), target, emb.parent())?;
    let src = a.ring();
    run(
        "induction",
        path,
        || {
            linear(a, target, |c| {
                let sc = src.class(c);
                let l = src.lattice();
                let t = emb.push_forward(l.subgroup(sc.t));
                let s = emb.push_forward(l.subgroup(sc.s));
                Ok(target.basis(target.class_of_subgroups(&t, &s)?))
            })
        },
        || linear(a, target, |c| target.from_morphism(&src.projection(c).induce(emb)?)),
    )
}

/// `Res_H^G`: `⟨T,S⟩_G ↦ Σ_{x ∈ [H\G/S]} ⟨H ∩ xTx⁻¹, H ∩ xSx⁻¹⟩_H`.
pub fn restriction(
    a: &SliceElement,
    emb: &Embedding,
    target: &Arc<SliceRing>,
    path: Path,
) -> Result<SliceElement> {
    check_rings(a, emb.parent(), target, emb.sub())?;
    let src = a.ring();
    let l = src.lattice();
    let h = l
        .index_of(emb.image())
        .ok_or_else(|| Error::NotContained("embedded image is not a subgroup".into()))?;
    run(
        "restriction",
        path,
        || {
            linear(a, target, |c| {
                let sc = src.class(c);
                let mut out = target.zero();
                for x in l.double_cosets(h, sc.s) {
                    let t2 = l.meet(h, l.conj(x, sc.t));
                    let s2 = l.meet(h, l.conj(x, sc.s));
                    let t = emb.pull_back(l.subgroup(t2))?;
                    let s = emb.pull_back(l.subgroup(s2))?;
                    out = &out + &target.basis(target.class_of_subgroups(&t, &s)?);
                }
                Ok(out)
            })
        },
        || linear(a, target, |c| target.from_morphism(&src.projection(c).restrict(emb)?)),
    )
}

/// `Inf_{G/N}^G`: `⟨T/N,S/N⟩ ↦ ⟨T,S⟩` through full preimages.
pub fn inflation(
    a: &SliceElement,
    qm: &QuotientMap,
    target: &Arc<SliceRing>,
    path: Path,
) -> Result<SliceElement> {
    check_rings(a, qm.quotient(), target, qm.group())?;
    let src = a.ring();
    run(
        "inflation",
        path,
        || {
            linear(a, target, |c| {
                let sc = src.class(c);
                let l = src.lattice();
                let t = qm.preimage(l.subgroup(sc.t));
                let s = qm.preimage(l.subgroup(sc.s));
                Ok(target.basis(target.class_of_subgroups(&t, &s)?))
            })
        },
        || linear(a, target, |c| target.from_morphism(&src.projection(c).inflate(qm)?)),
    )
}

/// `Def_{G/N}^G`: `⟨T,S⟩ ↦ ⟨TN/N, SN/N⟩`.
pub fn deflation(
    a: &SliceElement,
    qm: &QuotientMap,
    target: &Arc<SliceRing>,
    path: Path,
) -> Result<SliceElement> {
    check_rings(a, qm.group(), target, qm.quotient())?;
    let src = a.ring();
    run(
        "deflation",
        path,
        || {
            linear(a, target, |c| {
                let sc = src.class(c);
                let l = src.lattice();
                let t = qm.image(l.subgroup(sc.t));
                let s = qm.image(l.subgroup(sc.s));
                Ok(target.basis(target.class_of_subgroups(&t, &s)?))
            })
        },
        || linear(a, target, |c| target.from_morphism(&src.projection(c).deflate(qm)?)),
    )
}

/// `Iso(φ)`: `⟨T,S⟩ ↦ ⟨φ(T), φ(S)⟩`.
pub fn transport(
    a: &SliceElement,
    phi: &Isomorphism,
    target: &Arc<SliceRing>,
    path: Path,
) -> Result<SliceElement> {
    check_rings(a, phi.source(), target, phi.target())?;
    let src = a.ring();
    run(
        "transport",
        path,
        || {
            linear(a, target, |c| {
                let sc = src.class(c);
                let l = src.lattice();
                let t = phi.image(l.subgroup(sc.t));
                let s = phi.image(l.subgroup(sc.s));
                Ok(target.basis(target.class_of_subgroups(&t, &s)?))
            })
        },
        || linear(a, target, |c| target.from_morphism(&src.projection(c).transport(phi)?)),
    )
}

/// If `x` is a scalar multiple of `ξ_c`, returns the scalar (possibly zero).
pub fn idempotent_multiple(x: &SliceElement, c: usize) -> Result<Option<Q>> {
    let v = x.ring().to_mark_vector(x)?;
    let ok = v.iter().enumerate().all(|(k, y)| k == c || y.is_zero());
    Ok(ok.then(|| v[c].clone()))
}

/// Predicted `Res_H^G ξ^G_c`: the sum of `ξ^H_{c'}` over `H`-classes `G`-conjugate to `c`.
pub fn restriction_of_idempotent(
    g_ring: &Arc<SliceRing>,
    h_ring: &Arc<SliceRing>,
    emb: &Embedding,
    c: usize,
) -> Result<SliceElement> {
    let mut out = h_ring.zero();
    for d in 0..h_ring.len() {
        if g_class_of(h_ring, g_ring, emb, d)? == c {
            out = &out + &h_ring.idempotent(d);
        }
    }
    Ok(out)
}

fn g_class_of(
    h_ring: &Arc<SliceRing>,
    g_ring: &Arc<SliceRing>,
    emb: &Embedding,
    d: usize,
) -> Result<usize> {
    let sc = h_ring.class(d);
    let l = h_ring.lattice();
    g_ring.class_of_subgroups(
        &emb.push_forward(l.subgroup(sc.t)),
        &emb.push_forward(l.subgroup(sc.s)),
    )
}

/// Predicted `Ind_H^G ξ^H_d = (|N_G(V,U)| / |N_H(V,U)|) ξ^G_{V,U}`.
pub fn induction_of_idempotent(
    h_ring: &Arc<SliceRing>,
    g_ring: &Arc<SliceRing>,
    emb: &Embedding,
    d: usize,
) -> Result<SliceElement> {
    let sc = h_ring.class(d);
    let l = h_ring.lattice();
    let v = emb.push_forward(l.subgroup(sc.t));
    let u = emb.push_forward(l.subgroup(sc.s));
    let gl = g_ring.lattice();
    let (vi, ui) = (gl.index_of(&v).expect("image"), gl.index_of(&u).expect("image"));
    let ng = (0..g_ring.group().order())
        .filter(|&x| gl.conj(x, vi) == vi && gl.conj(x, ui) == ui)
        .count();
    let scalar = q(ng as i64, h_ring.normalizer_order(d) as i64);
    Ok(g_ring.idempotent_of(vi, ui)?.scale(&scalar))
}

/// Predicted `Inf_{G/N}^G ξ_{T/N,S/N}`: the sum of `ξ^G_{Y,X}` over classes with
/// `(YN, XN)` conjugate to `(T, S)`.
pub fn inflation_of_idempotent(
    quo_ring: &Arc<SliceRing>,
    g_ring: &Arc<SliceRing>,
    qm: &QuotientMap,
    c: usize,
) -> Result<SliceElement> {
    let sc = quo_ring.class(c);
    let ql = quo_ring.lattice();
    let gl = g_ring.lattice();
    let t = qm.preimage(ql.subgroup(sc.t));
    let s = qm.preimage(ql.subgroup(sc.s));
    let want = g_ring.class_of_subgroups(&t, &s)?;
    let n = gl.index_of(qm.kernel()).expect("kernel is a subgroup");
    let mut out = g_ring.zero();
    for d in 0..g_ring.len() {
        let dc = g_ring.class(d);
        if g_ring.class_of(gl.join(dc.t, n), gl.join(dc.s, n)) == Some(want) {
            out = &out + &g_ring.idempotent(d);
        }
    }
    Ok(out)
}

/// Scalar `λ` with `Def_{G/N}^G ξ_{T,S} = λ ξ_{TN/N,SN/N}`:
/// `|N_T(S)| |N_G(TN,SN)| / (|N_G(T,S)| |N_{TN}(SN)|) · m_{T,S,T∩N}`.
pub fn deflation_scalar(
    l: &crate::group::SubgroupLattice,
    t: usize,
    s: usize,
    n: usize,
) -> Result<Q> {
    let (num, den) = deflation_scalar_parts(l, t, s, n, l.join(t, n))?;
    Ok(q(num as i64, den as i64) * m_relative(l, t, s, l.meet(t, n))?)
}

/// The scalar exactly as usually printed, with `|N_T(SN)|` in the denominator.
/// It agrees with [`deflation_scalar`] when `N <= T`.
pub fn deflation_scalar_printed(
    l: &crate::group::SubgroupLattice,
    t: usize,
    s: usize,
    n: usize,
) -> Result<Q> {
    let (num, den) = deflation_scalar_parts(l, t, s, n, t)?;
    Ok(q(num as i64, den as i64) * m_relative(l, t, s, l.meet(t, n))?)
}

fn deflation_scalar_parts(
    l: &crate::group::SubgroupLattice,
    t: usize,
    s: usize,
    n: usize,
    norm_of_sn_in: usize,
) -> Result<(usize, usize)> {
    if !l.leq(s, t) {
        return Err(Error::NotASlice("S is not contained in T".into()));
    }
    if !l.is_normal(n) {
        return Err(Error::NotNormal("N is not normal in G".into()));
    }
    let (tn, sn) = (l.join(t, n), l.join(s, n));
    let order = l.group().order();
    let both = |a: usize, b: usize| {
        (0..order)
            .filter(|&x| l.conj(x, a) == a && l.conj(x, b) == b)
            .count()
    };
    let num = l.normalizer_order_in(t, s) * both(tn, sn);
    let den = both(t, s) * l.normalizer_order_in(norm_of_sn_in, sn);
    Ok((num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{FiniteGroup, DEFAULT_ORDER_CAP as CAP};
    use crate::rational::qi;

    #[test]
    fn restriction_to_trivial_of_c2() {
        let g = Arc::new(FiniteGroup::cyclic(2, CAP).unwrap());
        let gr = SliceRing::new(g.clone());
        let emb = Embedding::of_subgroup(&g, &g.trivial_subgroup());
        let hr = SliceRing::new(emb.sub().clone());
        // class 1 is (C2, 1)
        let r = restriction(&gr.basis(1), &emb, &hr, Path::Checked).unwrap();
        assert_eq!(r, hr.basis(0).scale(&qi(2)));
    }

    #[test]
    fn c2_deflation() {
        let g = Arc::new(FiniteGroup::cyclic(2, CAP).unwrap());
        let gr = SliceRing::new(g.clone());
        let qm = QuotientMap::new(&g, &g.whole()).unwrap();
        let qr = SliceRing::new(qm.quotient().clone());
        let d = deflation(&gr.idempotent(1), &qm, &qr, Path::Checked).unwrap();
        assert!(d.is_zero());
        let d = deflation(&gr.idempotent(2), &qm, &qr, Path::Checked).unwrap();
        assert_eq!(idempotent_multiple(&d, 0).unwrap(), Some(q(1, 2)));
        let l = gr.lattice();
        assert_eq!(deflation_scalar(l, 1, 1, 1).unwrap(), q(1, 2));
        // N = C2 is not below T = 1 here, and the printed scalar is off by |N : T ∩ N|
        let d = deflation(&gr.idempotent(0), &qm, &qr, Path::Checked).unwrap();
        assert_eq!(idempotent_multiple(&d, 0).unwrap(), Some(deflation_scalar(l, 0, 0, 1).unwrap()));
        assert_eq!(deflation_scalar_printed(l, 0, 0, 1).unwrap(), qi(1));
        assert_eq!(deflation_scalar(l, 0, 0, 1).unwrap(), q(1, 2));
    }

    #[test]
    fn induction_from_c2_to_c4() {
        let g = Arc::new(FiniteGroup::cyclic(4, CAP).unwrap());
        let gr = SliceRing::new(g.clone());
        let c2 = g.generate(&[g.pow(1, 2)]);
        let emb = Embedding::of_subgroup(&g, &c2);
        let hr = SliceRing::new(emb.sub().clone());
        let x = induction(&hr.basis(1), &emb, &gr, Path::Checked).unwrap();
        let want = gr.class_of_subgroups(&c2, &g.trivial_subgroup()).unwrap();
        assert_eq!(x, gr.basis(want));
    }

    #[test]
    fn inflation_c4_over_c2() {
        let g = Arc::new(FiniteGroup::cyclic(4, CAP).unwrap());
        let gr = SliceRing::new(g.clone());
        let c2 = g.generate(&[g.pow(1, 2)]);
        let qm = QuotientMap::new(&g, &c2).unwrap();
        let qr = SliceRing::new(qm.quotient().clone());
        let x = inflation(&qr.one(), &qm, &gr, Path::Checked).unwrap();
        assert_eq!(x, gr.one());
    }
}
