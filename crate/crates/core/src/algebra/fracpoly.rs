//! Polynomials over K = F_q(theta) in deformation variables, kept as a single
//! fraction: a multivariate numerator (theta included in its context) over a
//! monic univariate denominator in theta. Equality tests cross-multiply, so
//! routine identity checking never needs a gcd; `reduce` clears the common
//! content when integrality itself is the question.

use std::fmt;

use crate::algebra::field::Fq;
use crate::algebra::multipoly::{MultiPoly, Vars};
use crate::algebra::ratfunc::RatFunc;
use crate::algebra::unipoly::UniPoly;

#[derive(Debug, Clone)]
pub struct FracMultiPoly {
    num: MultiPoly,
    den: UniPoly,
}

impl FracMultiPoly {
    pub fn new(num: MultiPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        assert!(num.vars().contains("theta") || num.is_zero() || den.is_one());
        let den = if num.is_zero() {
            UniPoly::one(den.field())
        } else {
            den
        };
        // keep the denominator monic; fold the unit into the numerator
        let f = den.field().clone();
        if den.is_monic() {
            FracMultiPoly { num, den }
        } else {
            let inv = f.inv(den.leading());
            FracMultiPoly {
                num: num.scale(inv),
                den: den.scale(inv),
            }
        }
    }

    pub fn zero(field: &Fq, vars: &Vars) -> Self {
        FracMultiPoly {
            num: MultiPoly::zero(field, vars),
            den: UniPoly::one(field),
        }
    }

    pub fn one(field: &Fq, vars: &Vars) -> Self {
        FracMultiPoly {
            num: MultiPoly::one(field, vars),
            den: UniPoly::one(field),
        }
    }

    pub fn from_poly(num: MultiPoly) -> Self {
        let one = UniPoly::one(num.field());
        FracMultiPoly { num, den: one }
    }

    pub fn from_ratfunc(r: &RatFunc, vars: &Vars) -> Self {
        FracMultiPoly::new(MultiPoly::from_unipoly(r.num(), vars), r.den().clone())
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }
    pub fn den(&self) -> &UniPoly {
        &self.den
    }
    pub fn vars(&self) -> &Vars {
        self.num.vars()
    }
    pub fn field(&self) -> &Fq {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn den_embedded(&self) -> MultiPoly {
        MultiPoly::from_unipoly(&self.den, self.num.vars())
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let num = self
            .num
            .mul(&other.den_embedded())
            .add(&other.num.mul(&self.den_embedded()));
        FracMultiPoly::new(num, self.den.mul(&other.den))
    }

    pub fn neg(&self) -> Self {
        FracMultiPoly {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        FracMultiPoly::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Self {
        FracMultiPoly::new(self.num.mul(p), self.den.clone())
    }

    pub fn mul_ratfunc(&self, r: &RatFunc) -> Self {
        let num = self
            .num
            .mul(&MultiPoly::from_unipoly(r.num(), self.num.vars()));
        FracMultiPoly::new(num, self.den.mul(r.den()))
    }

    pub fn div_poly(&self, p: &UniPoly) -> Self {
        FracMultiPoly::new(self.num.clone(), self.den.mul(p))
    }

    /// Coefficient twist theta -> theta^{q^j}; deformation variables fixed.
    pub fn twist_theta(&self, j: u32) -> Self {
        FracMultiPoly::new(self.num.twist_theta(j), self.den.twist(j))
    }

    /// The full q^j-th power: all exponents scale, coefficients twist.
    pub fn frobenius_pow(&self, j: u32) -> Self {
        FracMultiPoly::new(self.num.frobenius_pow(j), self.den.twist(j))
    }

    /// Exact equality via cross multiplication.
    pub fn eq(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() == other.is_zero();
        }
        self.num.mul(&other.den_embedded()) == other.num.mul(&self.den_embedded())
    }

    /// Divide out the gcd of the denominator with the theta-content of the
    /// numerator.
    pub fn reduce(&self) -> Self {
        if self.den.is_one() || self.is_zero() {
            return self.clone();
        }
        let mut g = self.den.clone();
        let slices = self
            .num
            .coeffs_wrt("theta")
            .expect("numerator context contains theta");
        // gcd of the denominator with every theta-slice of the numerator:
        // group terms by the non-theta monomial and gcd the theta-polynomials
        let mut by_monomial: std::collections::BTreeMap<Vec<u32>, UniPoly> =
            std::collections::BTreeMap::new();
        let f = self.field().clone();
        for (theta_e, coeff) in &slices {
            for (mono, &c) in coeff.terms() {
                let entry = by_monomial
                    .entry(mono.clone())
                    .or_insert_with(|| UniPoly::zero(&f));
                let mut add = UniPoly::theta_pow(&f, *theta_e as usize).scale(c);
                add = entry.add(&add);
                *entry = add;
            }
        }
        for poly in by_monomial.values() {
            g = g.gcd(poly);
            if g.is_one() {
                return self.clone();
            }
        }
        // divide both sides by g
        let new_den = self.den.div_exact(&g);
        let mut new_num = MultiPoly::zero(&f, self.num.vars());
        let theta_idx = self.num.vars().index("theta").unwrap();
        for (mono, poly) in &by_monomial {
            let q = poly.div_exact(&g);
            for (i, &c) in q.coeffs().iter().enumerate() {
                if f.is_zero(c) {
                    continue;
                }
                let mut exps = vec![0u32; self.num.vars().len()];
                for (vi, &x) in mono.iter().enumerate() {
                    let target = if vi < theta_idx { vi } else { vi + 1 };
                    exps[target] = x;
                }
                exps[theta_idx] = i as u32;
                new_num.insert_term(exps, c);
            }
        }
        FracMultiPoly::new(new_num, new_den)
    }

    /// After reduction: the numerator if the denominator is trivial.
    pub fn to_integral(&self) -> Option<MultiPoly> {
        let r = self.reduce();
        if r.den.is_one() {
            Some(r.num)
        } else {
            None
        }
    }
}

impl fmt::Display for FracMultiPoly {
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
    fn cancellation_to_integral() {
        let f = fq_make(3, 1, None).unwrap();
        let vars = Vars::new(&["theta", "z1"]);
        let th = UniPoly::theta_pow(&f, 1);
        let z = MultiPoly::var_pow(&f, &vars, "z1", 1).unwrap();
        // (theta*z + theta) / theta = z + 1
        let num = MultiPoly::from_unipoly(&th, &vars).mul(&z.add(&MultiPoly::one(&f, &vars)));
        let frac = FracMultiPoly::new(num, th.clone());
        let red = frac.to_integral().unwrap();
        assert_eq!(red, z.add(&MultiPoly::one(&f, &vars)));
    }

    #[test]
    fn cross_multiplied_equality() {
        let f = fq_make(3, 1, None).unwrap();
        let vars = Vars::new(&["theta", "z1"]);
        let th = UniPoly::theta_pow(&f, 1);
        let z = MultiPoly::var_pow(&f, &vars, "z1", 1).unwrap();
        let a = FracMultiPoly::new(z.clone(), th.clone());
        let b = FracMultiPoly::new(
            z.mul(&MultiPoly::from_unipoly(&th, &vars)),
            th.mul(&th),
        );
        assert!(a.eq(&b));
        assert!(!a.eq(&FracMultiPoly::one(&f, &vars)));
    }
}
