use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::SliceRing;
use crate::error::{Error, Result};
use crate::rational::{format_q, Q};

/// An element of the rational slice Burnside ring; absent classes have coefficient zero.
#[derive(Clone)]
pub struct SliceElement {
    ring: Arc<SliceRing>,
    coeffs: BTreeMap<usize, Q>,
}

impl SliceElement {
    pub fn zero(ring: &Arc<SliceRing>) -> Self {
        SliceElement {
            ring: ring.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_coeffs(ring: &Arc<SliceRing>, terms: impl IntoIterator<Item = (usize, Q)>) -> Self {
        let mut e = SliceElement::zero(ring);
        for (c, x) in terms {
            assert!(c < ring.len(), "class index {c} out of range");
            e.add_term(c, x);
        }
        e
    }

    fn add_term(&mut self, c: usize, x: Q) {
        if x.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(c).or_insert_with(Q::zero);
        *slot += x;
        if slot.is_zero() {
            self.coeffs.remove(&c);
        }
    }

    pub fn ring(&self) -> &Arc<SliceRing> {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.coeffs.iter().map(|(&c, x)| (c, x))
    }

    pub fn coeff(&self, c: usize) -> Q {
        self.coeffs.get(&c).cloned().unwrap_or_else(Q::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn same_ring(&self, other: &SliceElement) -> Result<()> {
        if self.ring.id() == other.ring.id() {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn checked_add(&self, other: &SliceElement) -> Result<SliceElement> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (&c, x) in &other.coeffs {
            out.add_term(c, x.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SliceElement) -> Result<SliceElement> {
        self.checked_add(&-other)
    }

    pub fn scale(&self, k: &Q) -> SliceElement {
        if k.is_zero() {
            return SliceElement::zero(&self.ring);
        }
        SliceElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|(&c, x)| (c, x * k)).collect(),
        }
    }

    pub fn checked_mul(&self, other: &SliceElement) -> Result<SliceElement> {
        self.same_ring(other)?;
        Ok(self.mul_small(other).unwrap_or_else(|| self.mul_big(other)))
    }

    /// Common-denominator product accumulated in `i128`; `None` on overflow.
    fn mul_small(&self, other: &SliceElement) -> Option<SliceElement> {
        let (da, na) = integer_form(&self.coeffs)?;
        let (db, nb) = integer_form(&other.coeffs)?;
        let mut acc: BTreeMap<usize, i128> = BTreeMap::new();
        for &(a, x) in &na {
            for &(b, y) in &nb {
                let xy = x.checked_mul(y)?;
                for &(c, k) in self.ring.basis_mul(a, b) {
                    let slot = acc.entry(c as usize).or_default();
                    *slot = slot.checked_add(xy.checked_mul(k as i128)?)?;
                }
            }
        }
        let den = BigInt::from(da) * BigInt::from(db);
        Some(SliceElement::from_coeffs(
            &self.ring,
            acc.into_iter()
                .map(|(c, n)| (c, Q::new(BigInt::from(n), den.clone()))),
        ))
    }

    fn mul_big(&self, other: &SliceElement) -> SliceElement {
        let mut out = SliceElement::zero(&self.ring);
        for (&a, x) in &self.coeffs {
            for (&b, y) in &other.coeffs {
                let xy = x * y;
                for &(c, k) in self.ring.basis_mul(a, b) {
                    out.add_term(c as usize, &xy * Q::from_integer(BigInt::from(k)));
                }
            }
        }
        out
    }

    /// Coefficients keyed by class label, each as `"p/q"`.
    pub fn to_json(&self) -> serde_json::Value {
        let map = self
            .coeffs
            .iter()
            .map(|(&c, x)| (self.ring.class_label(c), serde_json::Value::String(format_q(x))))
            .collect();
        serde_json::Value::Object(map)
    }
}

/// Writes `coeffs` as `n_c / d` with a common `d`, if everything fits in `i128`.
fn integer_form(coeffs: &BTreeMap<usize, Q>) -> Option<(i128, Vec<(usize, i128)>)> {
    let mut d = BigInt::one();
    for x in coeffs.values() {
        d = d.lcm(x.denom());
    }
    let di = d.to_i128()?;
    let nums = coeffs
        .iter()
        .map(|(&c, x)| (x.numer() * (&d / x.denom())).to_i128().map(|n| (c, n)))
        .collect::<Option<Vec<_>>>()?;
    Some((di, nums))
}

impl PartialEq for SliceElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring.id() == other.ring.id() && self.coeffs == other.coeffs
    }
}

impl Eq for SliceElement {}

impl fmt::Debug for SliceElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SliceElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (&c, x)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*{}", format_q(x), self.ring.class_label(c))?;
        }
        Ok(())
    }
}

impl Add for &SliceElement {
    type Output = SliceElement;
    fn add(self, rhs: &SliceElement) -> SliceElement {
        self.checked_add(rhs).expect("operands from different slice rings")
    }
}

impl Sub for &SliceElement {
    type Output = SliceElement;
    fn sub(self, rhs: &SliceElement) -> SliceElement {
        self.checked_sub(rhs).expect("operands from different slice rings")
    }
}

impl Mul for &SliceElement {
    type Output = SliceElement;
    fn mul(self, rhs: &SliceElement) -> SliceElement {
        self.checked_mul(rhs).expect("operands from different slice rings")
    }
}

impl Mul<&Q> for &SliceElement {
    type Output = SliceElement;
    fn mul(self, k: &Q) -> SliceElement {
        self.scale(k)
    }
}

impl Neg for &SliceElement {
    type Output = SliceElement;
    fn neg(self) -> SliceElement {
        SliceElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|(&c, x)| (c, -x)).collect(),
        }
    }
}
