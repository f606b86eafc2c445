//! Named groups used by the verification suite.

use std::sync::Arc;

use crate::error::Result;
use crate::group::{FiniteGroup, GroupRef, DEFAULT_ORDER_CAP};

/// `C_n` for `n <= 12`, the small noncyclic groups and every group of order 27.
pub fn default_corpus() -> Vec<GroupRef> {
    let cap = DEFAULT_ORDER_CAP;
    let mut out: Vec<FiniteGroup> = (1..=12)
        .map(|n| FiniteGroup::cyclic(n, cap).expect("cyclic"))
        .collect();
    out.push(FiniteGroup::elementary_abelian(2, 2, cap).expect("C2^2"));
    out.push(FiniteGroup::elementary_abelian(2, 3, cap).expect("C2^3"));
    out.push(FiniteGroup::elementary_abelian(3, 2, cap).expect("C3^2"));
    out.push(FiniteGroup::abelian(&[4, 2], cap).expect("C4xC2"));
    out.push(FiniteGroup::dihedral(8, cap).expect("D8"));
    out.push(FiniteGroup::quaternion());
    out.extend(groups_of_order_p_cubed(3).expect("order 27"));
    out.into_iter().map(Arc::new).collect()
}

/// Corpus members of prime-power order.
pub fn p_group_corpus() -> Vec<GroupRef> {
    default_corpus()
        .into_iter()
        .filter(|g| prime_power(g.order()).is_some())
        .collect()
}

/// `(p, k)` with `n = p^k`, `k >= 1`; `None` for 1 and non prime powers.
pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

/// One group per isomorphism class of order `p^k`, `k <= 3`.
pub fn groups_of_order(p: usize, k: u32) -> Result<Vec<FiniteGroup>> {
    let cap = DEFAULT_ORDER_CAP;
    Ok(match k {
        0 => vec![FiniteGroup::trivial()],
        1 => vec![FiniteGroup::cyclic(p, cap)?],
        2 => vec![
            FiniteGroup::cyclic(p * p, cap)?,
            FiniteGroup::elementary_abelian(p, 2, cap)?,
        ],
        3 => groups_of_order_p_cubed(p)?,
        _ => {
            return Err(crate::error::Error::InvalidParameter(format!(
                "groups of order p^{k} are not available"
            )))
        }
    })
}

fn groups_of_order_p_cubed(p: usize) -> Result<Vec<FiniteGroup>> {
    let cap = DEFAULT_ORDER_CAP;
    let mut out = vec![
        FiniteGroup::cyclic(p * p * p, cap)?,
        FiniteGroup::abelian(&[p * p, p], cap)?,
        FiniteGroup::elementary_abelian(p, 3, cap)?,
    ];
    if p == 2 {
        out.push(FiniteGroup::dihedral(8, cap)?);
        out.push(FiniteGroup::quaternion());
    } else {
        out.push(FiniteGroup::modular(p, cap)?);
        out.push(FiniteGroup::heisenberg(p, cap)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::is_isomorphic;

    #[test]
    fn order_p_cubed_classes_are_distinct() {
        for p in [2, 3] {
            let gs = groups_of_order(p, 3).unwrap();
            assert_eq!(gs.len(), 5);
            for i in 0..gs.len() {
                for j in 0..i {
                    assert!(!is_isomorphic(&gs[i], &gs[j]));
                }
            }
        }
    }

    #[test]
    fn corpus_shape() {
        assert_eq!(default_corpus().len(), 23);
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
