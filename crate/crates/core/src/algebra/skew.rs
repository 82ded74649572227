//! Twisted polynomial rings R{tau} with tau * c = tau(c) * tau, where tau
//! raises theta to the q-th power and fixes the deformation variables.

use crate::algebra::multipoly::MultiPoly;
use crate::algebra::ratfunc::RatFunc;
use crate::algebra::unipoly::UniPoly;

/// Coefficient rings that support the tau-twist.
pub trait TwistRing: Clone + PartialEq {
    fn tr_add(&self, other: &Self) -> Self;
    fn tr_sub(&self, other: &Self) -> Self;
    fn tr_mul(&self, other: &Self) -> Self;
    /// theta -> theta^{q^j}; fixes z_i, t, X_i.
    fn tr_twist(&self, j: u32) -> Self;
    fn tr_is_zero(&self) -> bool;
}

impl TwistRing for UniPoly {
    fn tr_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn tr_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn tr_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn tr_twist(&self, j: u32) -> Self {
        self.twist(j)
    }
    fn tr_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl TwistRing for RatFunc {
    fn tr_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn tr_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn tr_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn tr_twist(&self, j: u32) -> Self {
        self.twist(j)
    }
    fn tr_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl TwistRing for MultiPoly {
    fn tr_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn tr_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn tr_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn tr_twist(&self, j: u32) -> Self {
        self.twist_theta(j)
    }
    fn tr_is_zero(&self) -> bool {
        self.is_zero()
    }
}

/// Sum c_i tau^i; index equals tau-degree. Trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewPoly<R: TwistRing> {
    coeffs: Vec<R>,
}

impl<R: TwistRing> SkewPoly<R> {
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        let mut p = SkewPoly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        SkewPoly { coeffs: vec![] }
    }

    pub fn constant(c: R) -> Self {
        SkewPoly::from_coeffs(vec![c])
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.tr_is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&R> {
        self.coeffs.get(i)
    }

    pub fn tau_degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.tr_add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            coeffs.push(c);
        }
        SkewPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.tr_sub(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => {
                    // 0 - b
                    b.tr_sub(b).tr_sub(b)
                }
                (None, None) => unreachable!(),
            };
            coeffs.push(c);
        }
        SkewPoly::from_coeffs(coeffs)
    }

    /// (sum a_i tau^i)(sum b_j tau^j) = sum_k (sum_{i+j=k} a_i tau^i(b_j)) tau^k.
    pub fn mul(&self, other: &Self) -> Self {
        self.mul_truncated(other, usize::MAX)
    }

    /// Product with tau-degrees above the cap discarded.
    pub fn mul_truncated(&self, other: &Self, cap: usize) -> Self {
        if self.is_zero() || other.is_zero() {
            return SkewPoly::zero();
        }
        let deg = (self.coeffs.len() - 1 + other.coeffs.len() - 1).min(cap);
        let mut out: Vec<Option<R>> = vec![None; deg + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.tr_is_zero() || i > deg {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let k = i + j;
                if k > deg {
                    break;
                }
                if b.tr_is_zero() {
                    continue;
                }
                let term = a.tr_mul(&b.tr_twist(i as u32));
                out[k] = Some(match out[k].take() {
                    Some(c) => c.tr_add(&term),
                    None => term,
                });
            }
        }
        let proto = &self.coeffs[0];
        let zero = proto.tr_sub(proto);
        let coeffs: Vec<R> = out.into_iter().map(|c| c.unwrap_or(zero.clone())).collect();
        SkewPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &R) -> Self {
        SkewPoly::from_coeffs(self.coeffs.iter().map(|a| c.tr_mul(a)).collect())
    }

    pub fn truncate(&self, cap: usize) -> Self {
        SkewPoly::from_coeffs(self.coeffs.iter().take(cap + 1).cloned().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::fq_make;

    #[test]
    fn defining_relation_and_square() {
        let f = fq_make(3, 1, None).unwrap();
        let th = UniPoly::theta_pow(&f, 1);
        let one = UniPoly::one(&f);
        // tau * c = c^q tau
        let tau = SkewPoly::from_coeffs(vec![UniPoly::zero(&f), one.clone()]);
        let c = UniPoly::from_ints(&f, &[1, 1]);
        let prod = tau.mul(&SkewPoly::constant(c.clone()));
        assert_eq!(prod.coeffs(), &[UniPoly::zero(&f), c.twist(1)]);
        // (theta + tau)^2 = theta^2 + (theta + theta^q) tau + tau^2
        let ct = SkewPoly::from_coeffs(vec![th.clone(), one.clone()]);
        let sq = ct.mul(&ct);
        assert_eq!(sq.coeff(0), Some(&th.mul(&th)));
        assert_eq!(sq.coeff(1), Some(&th.add(&th.twist(1))));
        assert_eq!(sq.coeff(2), Some(&one));
        // identity
        let idp = SkewPoly::constant(one.clone());
        assert_eq!(idp.mul(&ct), ct);
    }

    #[test]
    fn degree_adds_over_domain() {
        let f = fq_make(2, 1, None).unwrap();
        let a = SkewPoly::from_coeffs(vec![UniPoly::one(&f), UniPoly::theta_pow(&f, 1)]);
        let b = SkewPoly::from_coeffs(vec![
            UniPoly::theta_pow(&f, 2),
            UniPoly::zero(&f),
            UniPoly::one(&f),
        ]);
        assert_eq!(a.mul(&b).tau_degree(), Some(3));
    }
}
