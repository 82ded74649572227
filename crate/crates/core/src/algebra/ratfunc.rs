//! K = F_q(theta): reduced fractions with monic denominator.

use std::fmt;

use crate::algebra::field::{Fq, FqElem};
use crate::algebra::unipoly::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    /// Build and reduce. The denominator is normalized to be monic.
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let f = num.field().clone();
        if num.is_zero() {
            return RatFunc {
                num,
                den: UniPoly::one(&f),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num.div_exact(&g), den.div_exact(&g));
        let lead_inv = f.inv(den.leading());
        num = num.scale(lead_inv);
        den = den.scale(lead_inv);
        RatFunc { num, den }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        let one = UniPoly::one(p.field());
        RatFunc { num: p, den: one }
    }

    pub fn zero(field: &Fq) -> Self {
        RatFunc::from_poly(UniPoly::zero(field))
    }

    pub fn one(field: &Fq) -> Self {
        RatFunc::from_poly(UniPoly::one(field))
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }
    pub fn den(&self) -> &UniPoly {
        &self.den
    }
    pub fn field(&self) -> &Fq {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        RatFunc::new(
            self.num
                .mul(&other.den)
                .add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn mul_poly(&self, p: &UniPoly) -> Self {
        RatFunc::new(self.num.mul(p), self.den.clone())
    }

    pub fn scale(&self, c: FqElem) -> Self {
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverting zero");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    /// Frobenius twist theta -> theta^{q^j} on numerator and denominator.
    pub fn twist(&self, j: u32) -> Self {
        // twisting preserves reducedness and monic denominators
        RatFunc {
            num: self.num.twist(j),
            den: self.den.twist(j),
        }
    }

    /// ord_infinity: deg(den) - deg(num); None for 0.
    pub fn ord_inf(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.den.deg_i() - self.num.deg_i())
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::fq_make;

    #[test]
    fn reduction_and_arithmetic() {
        let f = fq_make(3, 1, None).unwrap();
        let th = UniPoly::theta_pow(&f, 1);
        let a = RatFunc::new(th.mul(&th), th.clone()); // theta^2/theta = theta
        assert_eq!(a, RatFunc::from_poly(th.clone()));
        assert!(a.is_integral());
        let b = RatFunc::new(UniPoly::one(&f), th.clone());
        let s = b.add(&b).add(&b); // 3/theta = 0 in characteristic 3
        assert!(s.is_zero());
        assert_eq!(b.mul(&b.inv()), RatFunc::one(&f));
    }

    #[test]
    fn denominators_stay_monic() {
        let f = fq_make(5, 1, None).unwrap();
        let num = UniPoly::from_ints(&f, &[1]);
        let den = UniPoly::from_ints(&f, &[0, 2]); // 2*theta
        let r = RatFunc::new(num, den);
        assert!(r.den().is_monic());
        // 1/(2 theta) = 3/theta since 2*3 = 1 mod 5
        assert_eq!(r.num(), &UniPoly::from_ints(&f, &[3]));
    }
}
