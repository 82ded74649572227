//! A = F_q[theta]: dense univariate polynomials, ascending coefficients.
//!
//! The zero polynomial has empty coefficient storage. Monic sets A_+ and
//! A_{+,k} are enumerated in lexicographic order of the coefficient tuple
//! (constant coefficient most significant).

use std::cmp::Ordering;
use std::fmt;

use crate::algebra::field::{Fq, FqElem};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: Fq,
    /// ascending powers of theta; trailing zeros trimmed; empty = zero
    coeffs: Vec<FqElem>,
}

impl PartialOrd for UniPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for UniPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl UniPoly {
    pub fn zero(field: &Fq) -> Self {
        UniPoly {
            field: field.clone(),
            coeffs: vec![],
        }
    }

    pub fn one(field: &Fq) -> Self {
        UniPoly::constant(field, field.one())
    }

    pub fn constant(field: &Fq, c: FqElem) -> Self {
        let coeffs = if field.is_zero(c) { vec![] } else { vec![c] };
        UniPoly {
            field: field.clone(),
            coeffs,
        }
    }

    /// theta^k
    pub fn theta_pow(field: &Fq, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = field.one();
        UniPoly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_coeffs(field: &Fq, coeffs: Vec<FqElem>) -> Self {
        let mut p = UniPoly {
            field: field.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    pub fn from_ints(field: &Fq, ints: &[i64]) -> Self {
        let coeffs = ints.iter().map(|&n| field.from_int(n)).collect();
        UniPoly::from_coeffs(field, coeffs)
    }

    fn trim(&mut self) {
        while self
            .coeffs
            .last()
            .map_or(false, |&c| self.field.is_zero(c))
        {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> FqElem {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree as i64 with deg(0) = -1; convenient in bound arithmetic.
    pub fn deg_i(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn leading(&self) -> FqElem {
        self.coeffs.last().copied().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == self.field.one()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.field.one()
    }

    fn assert_same_field(&self, other: &Self) {
        assert!(
            self.field == other.field,
            "incompatible base fields in UniPoly arithmetic"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(f.add(self.coeff(i), other.coeff(i)));
        }
        UniPoly::from_coeffs(f, coeffs)
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        UniPoly::from_coeffs(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: FqElem) -> Self {
        let f = &self.field;
        if f.is_zero(c) {
            return UniPoly::zero(f);
        }
        UniPoly::from_coeffs(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(f);
        }
        let (a, b) = (&self.coeffs, &other.coeffs);
        let coeffs = if a.len().min(b.len()) >= 64 {
            karatsuba(f, a, b)
        } else {
            schoolbook(f, a, b)
        };
        UniPoly::from_coeffs(f, coeffs)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = UniPoly::one(&self.field);
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

    /// Quotient and remainder by a nonzero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        self.assert_same_field(d);
        assert!(!d.is_zero(), "division by zero polynomial");
        let f = &self.field;
        let dd = d.degree().unwrap();
        if self.coeffs.len() <= dd {
            return (UniPoly::zero(f), self.clone());
        }
        let lead_inv = f.inv(d.leading());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + dd], lead_inv);
            if f.is_zero(c) {
                continue;
            }
            quot[k] = c;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                let t = f.mul(c, dc);
                rem[k + j] = f.sub(rem[k + j], t);
            }
        }
        rem.truncate(dd);
        (UniPoly::from_coeffs(f, quot), UniPoly::from_coeffs(f, rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Exact division; panics if the division leaves a remainder.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact UniPoly division");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.divrem(self).1.is_zero()
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let inv = f.inv(a.leading());
            a.scale(inv)
        }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.field.inv(self.leading()))
    }

    pub fn eval(&self, x: FqElem) -> FqElem {
        let f = &self.field;
        let mut acc = f.zero();
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    /// a(theta^e): stretch every exponent by e. Since the coefficients are
    /// F_q-fixed, a(theta)^{q^j} = a(theta^{q^j}) when e = q^j.
    pub fn subst_theta_pow(&self, e: u64) -> Self {
        let f = &self.field;
        if self.is_zero() {
            return self.clone();
        }
        if e == 0 {
            return UniPoly::constant(f, self.eval_at_one_pointwise());
        }
        let mut coeffs = vec![f.zero(); (self.deg_i() as u64 * e) as usize + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if !f.is_zero(c) {
                coeffs[i * e as usize] = c;
            }
        }
        UniPoly::from_coeffs(f, coeffs)
    }

    fn eval_at_one_pointwise(&self) -> FqElem {
        let f = &self.field;
        let mut acc = f.zero();
        for &c in &self.coeffs {
            acc = f.add(acc, c);
        }
        acc
    }

    /// Frobenius twist a -> a^{q^j} = a(theta^{q^j}).
    pub fn twist(&self, j: u32) -> Self {
        if j == 0 {
            return self.clone();
        }
        let e = self.field.q().pow(j);
        self.subst_theta_pow(e)
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let f = &self.field;
        let mut parts = vec![];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let cs = f.display(c);
            let part = match i {
                0 => cs,
                1 if cs == "1" => "theta".into(),
                1 => format!("{}*theta", cs),
                _ if cs == "1" => format!("theta^{}", i),
                _ => format!("{}*theta^{}", cs, i),
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

fn schoolbook(f: &Fq, a: &[FqElem], b: &[FqElem]) -> Vec<FqElem> {
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    out
}

fn karatsuba(f: &Fq, a: &[FqElem], b: &[FqElem]) -> Vec<FqElem> {
    let n = a.len().max(b.len());
    if a.len().min(b.len()) < 64 {
        return schoolbook(f, a, b);
    }
    let half = n / 2;
    let (a0, a1) = a.split_at(half.min(a.len()));
    let (b0, b1) = b.split_at(half.min(b.len()));
    let z0 = karatsuba(f, a0, b0);
    let z2 = if a1.is_empty() || b1.is_empty() {
        vec![]
    } else {
        karatsuba(f, a1, b1)
    };
    let sum_a: Vec<FqElem> = (0..a0.len().max(a1.len()))
        .map(|i| {
            f.add(
                a0.get(i).copied().unwrap_or_default(),
                a1.get(i).copied().unwrap_or_default(),
            )
        })
        .collect();
    let sum_b: Vec<FqElem> = (0..b0.len().max(b1.len()))
        .map(|i| {
            f.add(
                b0.get(i).copied().unwrap_or_default(),
                b1.get(i).copied().unwrap_or_default(),
            )
        })
        .collect();
    let mut z1 = karatsuba(f, &sum_a, &sum_b);
    for (i, zi) in z1.iter_mut().enumerate() {
        let s = f.add(
            z0.get(i).copied().unwrap_or_default(),
            z2.get(i).copied().unwrap_or_default(),
        );
        *zi = f.sub(*zi, s);
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, &c) in z0.iter().enumerate() {
        out[i] = f.add(out[i], c);
    }
    for (i, &c) in z1.iter().enumerate() {
        if i + half < out.len() {
            out[i + half] = f.add(out[i + half], c);
        }
    }
    for (i, &c) in z2.iter().enumerate() {
        out[i + 2 * half] = f.add(out[i + 2 * half], c);
    }
    out
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

/// All monic polynomials of exact degree d, lexicographic by coefficient tuple
/// (c_0, ..., c_{d-1}) with the constant coefficient most significant.
pub fn monic_polys(field: &Fq, d: usize) -> Vec<UniPoly> {
    let q = field.q();
    let count = q.pow(d as u32);
    let mut out = Vec::with_capacity(count as usize);
    for m in 0..count {
        let mut coeffs = vec![field.zero(); d + 1];
        coeffs[d] = field.one();
        let mut n = m;
        for i in 0..d {
            coeffs[i] = FqElem(n / q.pow((d - 1 - i) as u32) % q);
            n %= q.pow((d - 1 - i) as u32).max(1);
        }
        out.push(UniPoly::from_coeffs(field, coeffs));
    }
    out
}

fn lex_tuple_cmp(a: &UniPoly, b: &UniPoly) -> Ordering {
    let da = a.degree().unwrap_or(0);
    let db = b.degree().unwrap_or(0);
    da.cmp(&db).then_with(|| {
        for i in 0..=da {
            let c = a.coeff(i).cmp(&b.coeff(i));
            if c != Ordering::Equal {
                return c;
            }
        }
        Ordering::Equal
    })
}

/// Number of monic irreducibles of degree d over F_q (Gauss necklace count).
pub fn irreducible_count(q: u64, d: usize) -> u64 {
    let mut total: i64 = 0;
    for e in 1..=d {
        if d % e != 0 {
            continue;
        }
        let m = moebius(d / e);
        if m != 0 {
            total += m * q.pow(e as u32) as i64;
        }
    }
    (total as u64) / d as u64
}

fn moebius(n: usize) -> i64 {
    let mut n = n;
    let mut count = 0;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            count += 1;
        }
        d += 1;
    }
    if n > 1 {
        count += 1;
    }
    if count % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All monic irreducibles of degree d, sorted lexicographically by coefficient
/// tuple. Complete: the count matches the necklace formula.
pub fn irreducibles(field: &Fq, d: usize) -> Vec<UniPoly> {
    assert!(d >= 1);
    let mut known: Vec<UniPoly> = vec![];
    let mut result = vec![];
    for dd in 1..=d {
        let mut level = vec![];
        for cand in monic_polys(field, dd) {
            let irreducible = known
                .iter()
                .take_while(|p| p.degree().unwrap() <= dd / 2)
                .all(|p| !cand.rem(p).is_zero());
            if irreducible {
                level.push(cand);
            }
        }
        debug_assert_eq!(level.len() as u64, irreducible_count(field.q(), dd));
        if dd == d {
            result = level.clone();
        }
        known.extend(level);
        known.sort_by(|a, b| {
            a.degree()
                .unwrap()
                .cmp(&b.degree().unwrap())
                .then_with(|| lex_tuple_cmp(a, b))
        });
    }
    result
}

/// All monic irreducibles of degree <= d, ascending degree then lex.
pub fn irreducibles_up_to(field: &Fq, d: usize) -> Vec<UniPoly> {
    let mut out = vec![];
    for dd in 1..=d {
        out.extend(irreducibles(field, dd));
    }
    out
}

/// Factor a nonzero polynomial into monic irreducibles with multiplicities,
/// by trial division against enumerated irreducibles. The leading coefficient
/// times the product of the factors reconstructs the input.
pub fn poly_factor(a: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let field = a.field().clone();
    let mut rest = a.monic();
    let mut out: Vec<(UniPoly, usize)> = vec![];
    let mut dd = 1;
    while rest.degree().unwrap_or(0) >= 1 {
        let deg_rest = rest.degree().unwrap();
        if dd * 2 > deg_rest {
            out.push((rest.clone(), 1));
            break;
        }
        for f in irreducibles(&field, dd) {
            let mut mult = 0;
            loop {
                let (q, r) = rest.divrem(&f);
                if r.is_zero() {
                    rest = q;
                    mult += 1;
                } else {
                    break;
                }
            }
            if mult > 0 {
                out.push((f, mult));
            }
            if rest.degree().unwrap_or(0) < 1 {
                break;
            }
        }
        dd += 1;
    }
    out.sort_by(|x, y| lex_tuple_cmp(&x.0, &y.0).then(x.0.deg_i().cmp(&y.0.deg_i())));
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
    fn monic_linear_enumeration_is_lex() {
        let f = f3();
        let polys = monic_polys(&f, 1);
        let strs: Vec<String> = polys.iter().map(|p| p.display()).collect();
        assert_eq!(strs, vec!["theta", "1 + theta", "2 + theta"]);
    }

    #[test]
    fn irreducibles_f3_linear() {
        let f = f3();
        let irr = irreducibles(&f, 1);
        assert_eq!(irr.len(), 3);
        assert!(irr.iter().all(|p| p.degree() == Some(1)));
    }

    #[test]
    fn irreducibles_f2_quadratic_and_cubic() {
        let f2 = fq_make(2, 1, None).unwrap();
        let q2 = irreducibles(&f2, 2);
        assert_eq!(q2.len(), 1);
        assert_eq!(q2[0], UniPoly::from_ints(&f2, &[1, 1, 1]));
        // necklace count (2^3 - 2)/3 = 2
        assert_eq!(irreducibles(&f2, 3).len(), 2);
        assert_eq!(irreducible_count(2, 3), 2);
    }

    #[test]
    fn factor_examples_over_f3() {
        let f = f3();
        // theta^2 + theta = theta * (theta + 1)
        let a = UniPoly::from_ints(&f, &[0, 1, 1]);
        let fac = poly_factor(&a).unwrap();
        assert_eq!(
            fac,
            vec![
                (UniPoly::from_ints(&f, &[0, 1]), 1),
                (UniPoly::from_ints(&f, &[1, 1]), 1)
            ]
        );
        // theta^2 + 1 has no root in F_3, degree 2 => irreducible
        let b = UniPoly::from_ints(&f, &[1, 0, 1]);
        assert_eq!(poly_factor(&b).unwrap(), vec![(b.clone(), 1)]);
        // theta^2 = theta * theta
        let c = UniPoly::from_ints(&f, &[0, 0, 1]);
        assert_eq!(
            poly_factor(&c).unwrap(),
            vec![(UniPoly::from_ints(&f, &[0, 1]), 2)]
        );
        assert_eq!(poly_factor(&UniPoly::zero(&f)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn divrem_and_gcd() {
        let f = f3();
        let a = UniPoly::from_ints(&f, &[2, 0, 1, 1]);
        let b = UniPoly::from_ints(&f, &[1, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.deg_i() < b.deg_i());
        let g = a.mul(&b).gcd(&b.mul(&b));
        assert_eq!(g, b.monic());
    }

    #[test]
    fn twist_matches_qth_power() {
        let f = f3();
        let a = UniPoly::from_ints(&f, &[2, 1]);
        // (theta + 2)^3 = theta^3 + 2 over F_3
        assert_eq!(a.twist(1), UniPoly::from_ints(&f, &[2, 0, 0, 1]));
        assert_eq!(a.pow(3), a.twist(1));
    }
}
