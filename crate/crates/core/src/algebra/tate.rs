//! Truncated Laurent series in 1/theta with polynomial z-coefficients: the
//! computational model of the Tate algebra and its Gauss norm.
//!
//! A series tracks coefficients of theta^e exactly for all e >= -precision;
//! everything below is unknown. ord(g) = -(largest exponent with a nonzero
//! coefficient); the Gauss norm is q^{-ord}. Arithmetic propagates precision
//! conservatively, shifted by valuations.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::field::Fq;
use crate::algebra::multipoly::{MultiPoly, Vars};
use crate::algebra::unipoly::UniPoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TateSeries {
    field: Fq,
    /// coefficient context; z-variables only, never theta
    vars: Vars,
    /// exponents >= -precision are exact
    precision: i64,
    /// theta-exponent -> nonzero coefficient polynomial
    terms: BTreeMap<i64, MultiPoly>,
}

impl TateSeries {
    pub fn zero(field: &Fq, vars: &Vars, precision: i64) -> Self {
        debug_assert!(!vars.contains("theta"));
        TateSeries {
            field: field.clone(),
            vars: vars.clone(),
            precision,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: &Fq, vars: &Vars, precision: i64) -> Self {
        let mut s = TateSeries::zero(field, vars, precision);
        s.set_term(0, MultiPoly::one(field, vars));
        s
    }

    /// Exact embedding of a theta-polynomial scaled by z-polynomials is built
    /// through `mul_unipoly` / `mul_coeff_poly`; this seeds a single term.
    pub fn monomial(field: &Fq, vars: &Vars, exp: i64, coeff: MultiPoly, precision: i64) -> Self {
        let mut s = TateSeries::zero(field, vars, precision);
        s.set_term(exp, coeff);
        s
    }

    pub fn set_term(&mut self, exp: i64, coeff: MultiPoly) {
        if exp < -self.precision || coeff.is_zero() {
            return;
        }
        self.terms.insert(exp, coeff);
    }

    pub fn add_term(&mut self, exp: i64, coeff: MultiPoly) {
        if exp < -self.precision || coeff.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            None => {
                self.terms.insert(exp, coeff);
            }
            Some(old) => {
                let s = old.add(&coeff);
                if !s.is_zero() {
                    self.terms.insert(exp, s);
                }
            }
        }
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }
    pub fn vars(&self) -> &Vars {
        &self.vars
    }
    pub fn precision(&self) -> i64 {
        self.precision
    }
    pub fn terms(&self) -> &BTreeMap<i64, MultiPoly> {
        &self.terms
    }

    pub fn coeff(&self, exp: i64) -> MultiPoly {
        self.terms
            .get(&exp)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(&self.field, &self.vars))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn top_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Gauss valuation: ord(g) = -(top exponent); None for a series with no
    /// known nonzero term.
    pub fn ord(&self) -> Option<i64> {
        self.top_exp().map(|e| -e)
    }

    fn assert_compatible(&self, other: &Self) {
        assert!(
            self.field == other.field && self.vars == other.vars,
            "incompatible TateSeries contexts"
        );
    }

    pub fn truncate_to(&self, precision: i64) -> Self {
        let mut out = self.clone();
        out.precision = out.precision.min(precision);
        let cut = -out.precision;
        out.terms.retain(|&e, _| e >= cut);
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let prec = self.precision.min(other.precision);
        let mut out = TateSeries::zero(&self.field, &self.vars, prec);
        for (&e, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = TateSeries::zero(&self.field, &self.vars, self.precision);
        for (&e, c) in &self.terms {
            out.terms.insert(e, c.neg());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product precision: unknown tails multiply the other factor's top term,
    /// so the result is exact above max(-N_a - 1 + T_b, -N_b - 1 + T_a).
    fn mul_precision(&self, other: &Self) -> i64 {
        match (self.top_exp(), other.top_exp()) {
            (Some(ta), Some(tb)) => (self.precision - tb).min(other.precision - ta),
            (Some(ta), None) => other.precision - ta,
            (None, Some(tb)) => self.precision - tb,
            (None, None) => self.precision.saturating_add(other.precision) + 1,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let prec = self.mul_precision(other);
        let mut out = TateSeries::zero(&self.field, &self.vars, prec);
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &other.terms {
                let e = ea + eb;
                if e < -prec {
                    continue;
                }
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    /// Multiply by an exact theta-polynomial: exponent shifts; precision drops
    /// by the theta-degree.
    pub fn mul_unipoly(&self, p: &UniPoly) -> Self {
        let f = &self.field;
        if p.is_zero() {
            return TateSeries::zero(f, &self.vars, self.precision);
        }
        let prec = self.precision - p.deg_i().max(0);
        let mut out = TateSeries::zero(f, &self.vars, prec);
        for (i, &c) in p.coeffs().iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            for (&e, coeff) in &self.terms {
                out.add_term(e + i as i64, coeff.scale(c));
            }
        }
        out
    }

    /// Multiply by an exact z-polynomial (no theta): precision unchanged.
    pub fn mul_coeff_poly(&self, p: &MultiPoly) -> Self {
        assert!(!p.vars().contains("theta"));
        let mut out = TateSeries::zero(&self.field, &self.vars, self.precision);
        if p.is_zero() {
            return out;
        }
        for (&e, coeff) in &self.terms {
            out.add_term(e, coeff.mul(p));
        }
        out
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = TateSeries::one(&self.field, &self.vars, self.precision);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Re-context coefficients into a superset variable list.
    pub fn embed_vars(&self, vars: &Vars) -> Self {
        let mut out = TateSeries::zero(&self.field, vars, self.precision);
        for (&e, c) in &self.terms {
            out.terms.insert(e, c.embed(vars));
        }
        out
    }

    /// Invert a series whose top term is a unit constant times theta^T.
    /// Writes x = c theta^T (1 + h) with ord(h) >= 1 and expands the
    /// geometric series to the requested precision (or less, when the input's
    /// own precision cannot support it).
    pub fn invert(&self, precision: i64) -> Result<Self> {
        let f = &self.field;
        let top = self.top_exp().ok_or(Error::NonUnitLeading)?;
        // the input's unknown tail perturbs the inverse at ord >= N + 1 + 2T
        let target = precision.min(self.precision.saturating_add(2 * top));
        let lead = self.coeff(top);
        let lead_const = lead
            .terms()
            .get(&vec![0u32; self.vars.len()][..])
            .copied()
            .ok_or(Error::NonUnitLeading)?;
        if lead.num_terms() != 1 {
            return Err(Error::NonUnitLeading);
        }
        let inv_c = f.inv(lead_const);
        // h = inv_c * theta^{-T} * x - 1, ord(h) >= 1
        let inner = target - top;
        let mut h = TateSeries::zero(f, &self.vars, self.precision.saturating_add(top));
        for (&e, c) in &self.terms {
            if e == top {
                continue;
            }
            h.set_term(e - top, c.scale(inv_c));
        }
        let neg_h = h.neg().truncate_to(inner);
        let mut acc = TateSeries::one(f, &self.vars, inner);
        let mut power = TateSeries::one(f, &self.vars, inner);
        loop {
            power = power.mul(&neg_h).truncate_to(inner);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        let out_prec = target.min(acc.precision.saturating_add(top));
        let mut out = TateSeries::zero(f, &self.vars, out_prec);
        for (&e, c) in acc.terms.iter() {
            out.set_term(e - top, c.scale(inv_c));
        }
        Ok(out)
    }

    pub fn display(&self) -> String {
        if self.terms.is_empty() {
            return format!("O(theta^-{})", self.precision + 1);
        }
        let mut parts = vec![];
        for (&e, c) in self.terms.iter().rev() {
            let cs = if c.num_terms() > 1 {
                format!("({})", c.display())
            } else {
                c.display()
            };
            let part = match e {
                0 => cs,
                1 if cs == "1" => "theta".into(),
                _ if cs == "1" => format!("theta^{}", e),
                1 => format!("{}*theta", cs),
                _ => format!("{}*theta^{}", cs, e),
            };
            parts.push(part);
        }
        format!("{} + O(theta^-{})", parts.join(" + "), self.precision + 1)
    }
}

impl fmt::Display for TateSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

/// The inverse of a monic polynomial as a Laurent series: a * g = 1 up to the
/// requested precision, with leading exponent -deg a.
pub fn laurent_invert_monic(a: &UniPoly, vars: &Vars, precision: i64) -> Result<TateSeries> {
    if precision < 0 {
        return Err(Error::NegativePrecision(precision));
    }
    if !a.is_monic() {
        return Err(Error::NotMonic);
    }
    let f = a.field().clone();
    let d = a.degree().unwrap() as i64;
    // g = sum_{e <= -d} g_e theta^e; solve a*g = 1 coefficient by coefficient.
    // With a = theta^d + sum_{i<d} a_i theta^i:
    //   g_{-d} = 1, and for e < -d:
    //   g_e = -sum_{i<d} a_i g_{e + d - i}
    let mut g: BTreeMap<i64, crate::algebra::field::FqElem> = BTreeMap::new();
    g.insert(-d, f.one());
    for e in (-precision..-d).rev() {
        let mut acc = f.zero();
        for (i, &c) in a.coeffs().iter().enumerate().take(d as usize) {
            if f.is_zero(c) {
                continue;
            }
            let idx = e + d - i as i64;
            if let Some(&gv) = g.get(&idx) {
                acc = f.add(acc, f.mul(c, gv));
            }
        }
        let v = f.neg(acc);
        if !f.is_zero(v) {
            g.insert(e, v);
        }
    }
    let mut out = TateSeries::zero(&f, vars, precision);
    for (&e, &c) in &g {
        out.set_term(e, MultiPoly::constant(&f, vars, c));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::fq_make;

    fn f3() -> Fq {
        fq_make(3, 1, None).unwrap()
    }

    #[test]
    fn invert_theta() {
        let f = f3();
        let vars = Vars::empty();
        let a = UniPoly::theta_pow(&f, 1);
        let g = laurent_invert_monic(&a, &vars, 5).unwrap();
        assert_eq!(g.terms().len(), 1);
        assert!(g.coeff(-1).is_one());
    }

    #[test]
    fn invert_theta_plus_one_alternates() {
        let f = f3();
        let vars = Vars::empty();
        let a = UniPoly::from_ints(&f, &[1, 1]);
        let g = laurent_invert_monic(&a, &vars, 4).unwrap();
        // 1/(theta+1) = theta^-1 - theta^-2 + theta^-3 - theta^-4 + ...
        let one = f.one();
        let two = f.from_int(-1);
        assert_eq!(g.coeff(-1), MultiPoly::constant(&f, &vars, one));
        assert_eq!(g.coeff(-2), MultiPoly::constant(&f, &vars, two));
        assert_eq!(g.coeff(-3), MultiPoly::constant(&f, &vars, one));
        assert_eq!(g.coeff(-4), MultiPoly::constant(&f, &vars, two));
        // defining property at precision: a*g = 1 + O
        let prod = g.mul_unipoly(&a);
        assert!(prod.coeff(0).is_one());
        assert!(prod.terms().iter().all(|(&e, _)| e == 0));
    }

    #[test]
    fn negative_precision_rejected() {
        let f = f3();
        let a = UniPoly::theta_pow(&f, 1);
        assert_eq!(
            laurent_invert_monic(&a, &Vars::empty(), -1).unwrap_err(),
            Error::NegativePrecision(-1)
        );
    }

    #[test]
    fn ord_is_additive_under_mul() {
        let f = f3();
        let vars = Vars::empty();
        let a = laurent_invert_monic(&UniPoly::from_ints(&f, &[1, 1]), &vars, 8).unwrap();
        let b = laurent_invert_monic(&UniPoly::from_ints(&f, &[2, 0, 1]), &vars, 8).unwrap();
        let prod = a.mul(&b);
        assert_eq!(
            prod.ord().unwrap(),
            a.ord().unwrap() + b.ord().unwrap()
        );
    }

    #[test]
    fn series_invert_round_trip() {
        let f = f3();
        let vars = Vars::empty();
        let a = UniPoly::from_ints(&f, &[1, 2, 1]);
        let g = laurent_invert_monic(&a.monic(), &vars, 10).unwrap();
        let ginv = g.invert(6).unwrap();
        // ginv should reproduce the monic polynomial up to precision
        let diff = ginv.sub(&{
            let mut s = TateSeries::zero(&f, &vars, 6);
            for (i, &c) in a.monic().coeffs().iter().enumerate() {
                s.set_term(i as i64, MultiPoly::constant(&f, &vars, c));
            }
            s
        });
        assert!(diff.is_zero());
    }
}
