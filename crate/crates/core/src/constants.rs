//! Deflation constants `m_{T,S,N}`, `m°_{T,S,N}` and the classical `m_{G,N}`,
//! with the B-group and T-slice predicates built on them.
//!
//! Everything is evaluated inside a single subgroup lattice: for `S <= T <= G`
//! and `M` normal in `T`, the constant `m_{T,S,M}` only needs intervals of the
//! lattice of `G` and normalizers intersected with `T`.

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::{QuotientMap, SubgroupLattice};
use crate::rational::{q, qi, Q};

fn require_slice(l: &SubgroupLattice, t: usize, s: usize) -> Result<()> {
    if l.leq(s, t) {
        Ok(())
    } else {
        Err(Error::NotASlice(format!(
            "subgroup of order {} is not contained in subgroup of order {}",
            l.order_of(s),
            l.order_of(t)
        )))
    }
}

fn require_normal(l: &SubgroupLattice, m: usize, t: usize) -> Result<()> {
    if l.leq(m, t) && l.is_normal_in(m, t) {
        Ok(())
    } else {
        Err(Error::NotNormal(format!(
            "subgroup of order {} in subgroup of order {}",
            l.order_of(m),
            l.order_of(t)
        )))
    }
}

/// `Σ_{U <= S, UM = SM} |U| μ(U,S)`.
fn lower_sum(l: &SubgroupLattice, s: usize, m: usize) -> i64 {
    let sm = l.join(s, m);
    l.below(s)
        .iter()
        .filter(|&u| l.join(u, m) == sm)
        .map(|u| l.order_of(u) as i64 * l.mu(u, s))
        .sum()
}

/// `Σ_{S <= V <= T, VM = T} μ(V,T)`.
fn upper_sum(l: &SubgroupLattice, t: usize, s: usize, m: usize) -> i64 {
    l.interval(s, t)
        .filter(|&v| l.join(v, m) == t)
        .map(|v| l.mu(v, t))
        .sum()
}

/// `m_{T,S,M}` with prefactor `|N_T(SM) : SM| / |N_T(S)|`, for `S <= T` and `M` normal in `T`.
pub fn m_relative(l: &SubgroupLattice, t: usize, s: usize, m: usize) -> Result<Q> {
    require_slice(l, t, s)?;
    require_normal(l, m, t)?;
    let sm = l.join(s, m);
    let pre = q(
        l.normalizer_order_in(t, sm) as i64,
        (l.order_of(sm) * l.normalizer_order_in(t, s)) as i64,
    );
    Ok(pre * qi(lower_sum(l, s, m) * upper_sum(l, t, s, m)))
}

/// The same constant from the undecoupled double sum over `U <= S <= V <= T`.
pub fn m_relative_double_sum(l: &SubgroupLattice, t: usize, s: usize, m: usize) -> Result<Q> {
    require_slice(l, t, s)?;
    require_normal(l, m, t)?;
    let sm = l.join(s, m);
    let mut total = 0i64;
    for u in l.below(s).iter() {
        for v in l.interval(s, t) {
            if l.join(v, m) == t && l.join(u, m) == sm {
                total += l.order_of(u) as i64 * l.mu(u, s) * l.mu(v, t);
            }
        }
    }
    Ok(q(
        l.normalizer_order_in(t, sm) as i64,
        (l.order_of(sm) * l.normalizer_order_in(t, s)) as i64,
    ) * qi(total))
}

/// `m_{G,S,N}` for `N` normal in `G`.
pub fn m_slice(l: &SubgroupLattice, s: usize, n: usize) -> Result<Q> {
    m_relative(l, l.top(), s, n)
}

/// `m_{G,S,N}` with the prefactor written as `|N_{G/N}(SN/N)| |N| / (|N_G(S)| |SN|)`,
/// the normalizer taken in an explicitly built quotient group.
pub fn m_slice_quotient_form(l: &SubgroupLattice, s: usize, n: usize) -> Result<Q> {
    require_normal(l, n, l.top())?;
    let g = l.group();
    let qm = QuotientMap::new(g, l.subgroup(n))?;
    let quo = qm.quotient();
    let sbar = qm.image(l.subgroup(s));
    let norm_bar = quo.normalizer(&sbar).order();
    let sn = l.join(s, n);
    let pre = q(
        (norm_bar * l.order_of(n)) as i64,
        (l.normalizer_order_in(l.top(), s) * l.order_of(sn)) as i64,
    );
    Ok(pre * qi(lower_sum(l, s, n) * upper_sum(l, l.top(), s, n)))
}

/// `m°_{T,S,M} = Σ_{S <= V <= T, VM = T} μ(V,T)`.
pub fn m_circ_relative(l: &SubgroupLattice, t: usize, s: usize, m: usize) -> Result<i64> {
    require_slice(l, t, s)?;
    require_normal(l, m, t)?;
    Ok(upper_sum(l, t, s, m))
}

pub fn m_circ(l: &SubgroupLattice, s: usize, n: usize) -> Result<i64> {
    m_circ_relative(l, l.top(), s, n)
}

/// Classical `m_{G,N} = m_{G,G,N}`.
pub fn m_classical(l: &SubgroupLattice, n: usize) -> Result<Q> {
    m_slice(l, l.top(), n)
}

/// `m_{T,M}` for `M` normal in the subgroup `T`.
pub fn m_classical_in(l: &SubgroupLattice, t: usize, m: usize) -> Result<Q> {
    m_relative(l, t, t, m)
}

/// `(|N_G(SN):SN| / |N_G(S):S|) · m_{S,S∩N} · m°_{G,S,N}`.
pub fn m_slice_factored(l: &SubgroupLattice, s: usize, n: usize) -> Result<Q> {
    let g = l.top();
    require_normal(l, n, g)?;
    let sn = l.join(s, n);
    let pre = q(
        (l.normalizer_order_in(g, sn) * l.order_of(s)) as i64,
        (l.order_of(sn) * l.normalizer_order_in(g, s)) as i64,
    );
    let inner = m_classical_in(l, s, l.meet(s, n))?;
    Ok(pre * inner * qi(m_circ(l, s, n)?))
}

/// Optional shortcut: the factored form with `m°` evaluated in `G/Φ(G)`.
pub fn m_slice_frattini(l: &SubgroupLattice, s: usize, n: usize) -> Result<Q> {
    let g = l.top();
    require_normal(l, n, g)?;
    let sn = l.join(s, n);
    let pre = q(
        (l.normalizer_order_in(g, sn) * l.order_of(s)) as i64,
        (l.order_of(sn) * l.normalizer_order_in(g, s)) as i64,
    );
    let inner = m_classical_in(l, s, l.meet(s, n))?;
    Ok(pre * inner * qi(m_circ_frattini(l, s, n)?))
}

/// `m°_{G/Φ, SΦ/Φ, NΦ/Φ}` computed in an explicitly built Frattini quotient.
pub fn m_circ_frattini(l: &SubgroupLattice, s: usize, n: usize) -> Result<i64> {
    let phi = l.frattini();
    let qm = QuotientMap::new(l.group(), l.subgroup(phi))?;
    let ql = SubgroupLattice::new(qm.quotient().clone());
    let sbar = ql.index_of(&qm.image(l.subgroup(s))).expect("image is a subgroup");
    let nbar = ql.index_of(&qm.image(l.subgroup(n))).expect("image is a subgroup");
    m_circ(&ql, sbar, nbar)
}

/// `(m_{G,1,N}, (1 - #complements) / |N|)` for a minimal abelian normal subgroup `N`.
pub fn complement_count_check(l: &SubgroupLattice, n: usize) -> Result<(Q, Q)> {
    let g = l.top();
    require_normal(l, n, g)?;
    if n == l.trivial() {
        return Err(Error::Precondition("N must be nontrivial".into()));
    }
    let members = l.subgroup(n).members();
    let grp = l.group();
    if !members.iter().all(|&a| members.iter().all(|&b| grp.mul(a, b) == grp.mul(b, a))) {
        return Err(Error::Precondition("N must be abelian".into()));
    }
    if l
        .below(n)
        .iter()
        .any(|k| k != n && k != l.trivial() && l.is_normal(k))
    {
        return Err(Error::Precondition("N must be minimal normal".into()));
    }
    let complements = (0..l.len())
        .filter(|&k| l.meet(k, n) == l.trivial() && l.join(k, n) == g)
        .count() as i64;
    Ok((
        m_slice(l, l.trivial(), n)?,
        q(1 - complements, l.order_of(n) as i64),
    ))
}

/// `Π_{i=1}^{k} (1 - p^{n-i})`.
pub fn elab_m_circ_closed_form(p: u32, n: u32, k: u32) -> i64 {
    (1..=k).map(|i| 1 - (p as i64).pow(n - i)).product()
}

/// `Π_{i=1}^{k} (1 - p^{n-1-i})`, stated for `1 <= k <= n - 2`.
pub fn elab_m_classical_closed_form(p: u32, n: u32, k: u32) -> Result<i64> {
    if k < 1 || k + 2 > n {
        return Err(Error::InvalidParameter(format!(
            "closed form needs 1 <= k <= n - 2, got n = {n}, k = {k}"
        )));
    }
    Ok((1..=k).map(|i| 1 - (p as i64).pow(n - 1 - i)).product())
}

/// Whether `S / (S ∩ M)` is cyclic, by scanning orders of elements modulo `S ∩ M`.
pub fn quotient_is_cyclic(l: &SubgroupLattice, s: usize, m: usize) -> bool {
    let k = l.meet(s, m);
    let kk = l.subgroup(k);
    let target = l.order_of(s) / l.order_of(k);
    let g = l.group();
    l.subgroup(s).members().iter().any(|&x| {
        let mut y = x;
        let mut ord = 1;
        while !kk.contains(y) {
            y = g.mul(y, x);
            ord += 1;
        }
        ord == target
    })
}

/// The vanishing criterion for p-groups:
/// `(S noncyclic and S/(S∩M) cyclic) or (T ≠ S and T = SM)`.
pub fn vanishing_criterion(l: &SubgroupLattice, t: usize, s: usize, m: usize) -> bool {
    (!l.is_cyclic(s) && quotient_is_cyclic(l, s, m)) || (t != s && l.join(s, m) == t)
}

/// `m_{T,S,M} = 0` for every nontrivial normal subgroup `M` of `T`.
pub fn is_t_slice(l: &SubgroupLattice, t: usize, s: usize) -> Result<bool> {
    require_slice(l, t, s)?;
    for m in l.normal_subgroups_of(t) {
        if m != l.trivial() && !m_relative(l, t, s, m)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_b_group(l: &SubgroupLattice) -> bool {
    is_t_slice(l, l.top(), l.top()).expect("(G,G) is a slice")
}

/// Builds the lattice of a group on the fly; convenience for one-off queries.
pub fn lattice_of(g: crate::group::FiniteGroup) -> SubgroupLattice {
    SubgroupLattice::new(Arc::new(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{FiniteGroup, DEFAULT_ORDER_CAP as CAP};

    fn elab(p: usize, n: usize) -> SubgroupLattice {
        lattice_of(FiniteGroup::elementary_abelian(p, n, CAP).unwrap())
    }

    #[test]
    fn trivial_normal_gives_one() {
        let l = lattice_of(FiniteGroup::dihedral(8, CAP).unwrap());
        for s in 0..l.len() {
            assert_eq!(m_slice(&l, s, 0).unwrap(), qi(1));
        }
    }

    #[test]
    fn cyclic_prime() {
        for p in [2usize, 3, 5] {
            let l = lattice_of(FiniteGroup::cyclic(p, CAP).unwrap());
            assert_eq!(m_slice(&l, 0, 1).unwrap(), qi(0));
            assert_eq!(m_classical(&l, 1).unwrap(), q(p as i64 - 1, p as i64));
            assert_eq!(complement_count_check(&l, 1).unwrap(), (qi(0), qi(0)));
        }
    }

    #[test]
    fn m_circ_examples() {
        let l = elab(2, 3);
        let top = l.top();
        for n in l.normal_subgroups() {
            assert_eq!(m_circ(&l, top, n).unwrap(), 1);
            assert_eq!(m_circ(&l, 0, l.frattini().max(n)).unwrap(), m_circ(&l, 0, n).unwrap());
        }
        let n4 = (0..l.len()).find(|&i| l.order_of(i) == 4).unwrap();
        assert_eq!(m_circ(&l, 0, n4).unwrap(), 3);
        assert_eq!(elab_m_circ_closed_form(2, 3, 2), 3);
    }

    #[test]
    fn classical_closed_form() {
        let l = elab(2, 3);
        let n2 = (0..l.len()).find(|&i| l.order_of(i) == 2).unwrap();
        assert_eq!(m_classical(&l, n2).unwrap(), qi(-1));
        assert_eq!(elab_m_classical_closed_form(2, 3, 1).unwrap(), -1);
        let v = elab(3, 2);
        for n in 1..v.len() {
            assert_eq!(m_classical(&v, n).unwrap(), qi(0));
        }
    }

    #[test]
    fn complements() {
        let v = elab(3, 2);
        let n = 1;
        assert_eq!(v.order_of(n), 3);
        assert_eq!(complement_count_check(&v, n).unwrap(), (q(-2, 3), q(-2, 3)));
        let c4 = lattice_of(FiniteGroup::cyclic(4, CAP).unwrap());
        assert_eq!(complement_count_check(&c4, 1).unwrap(), (q(1, 2), q(1, 2)));
        assert!(complement_count_check(&c4, 2).is_err());
    }

    #[test]
    fn forms_agree() {
        for g in [
            FiniteGroup::dihedral(8, CAP).unwrap(),
            FiniteGroup::quaternion(),
            FiniteGroup::heisenberg(3, CAP).unwrap(),
            FiniteGroup::cyclic(12, CAP).unwrap(),
        ] {
            let l = lattice_of(g);
            for n in l.normal_subgroups() {
                for s in 0..l.len() {
                    let a = m_slice(&l, s, n).unwrap();
                    assert_eq!(a, m_relative_double_sum(&l, l.top(), s, n).unwrap());
                    assert_eq!(a, m_slice_quotient_form(&l, s, n).unwrap());
                    assert_eq!(a, m_slice_factored(&l, s, n).unwrap());
                    assert_eq!(a, m_slice_frattini(&l, s, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn b_groups_and_t_slices() {
        assert!(is_b_group(&lattice_of(FiniteGroup::trivial())));
        assert!(is_b_group(&elab(3, 2)));
        assert!(!is_b_group(&elab(3, 1)));
        assert!(!is_b_group(&lattice_of(FiniteGroup::cyclic(9, CAP).unwrap())));
        assert!(!is_b_group(&elab(2, 3)));
        let l = elab(2, 3);
        let s4 = (0..l.len()).find(|&i| l.order_of(i) == 4).unwrap();
        assert!(is_t_slice(&l, l.top(), s4).unwrap());
        let v = elab(2, 2);
        assert!(!is_t_slice(&v, v.top(), 1).unwrap());
        assert!(is_t_slice(&v, 1, 2).is_err());
    }

    #[test]
    fn errors() {
        let l = lattice_of(FiniteGroup::dihedral(8, CAP).unwrap());
        let non_normal = (0..l.len()).find(|&i| !l.is_normal(i)).unwrap();
        assert!(matches!(m_slice(&l, 0, non_normal), Err(Error::NotNormal(_))));
    }
}
