//! The finite field F_q, q = p^l, in the power basis of a generator u.
//!
//! An element is stored packed into a single `u64` as sum d_i * p^i with
//! digits d_i in [0, p). For l = 1 this is just the residue itself, and the
//! arithmetic fast path avoids unpacking entirely. Multiplication for l > 1
//! reduces modulo a validated monic irreducible over F_p.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Validated description of F_q: the prime p, the extension degree l,
/// and the defining modulus (monic irreducible of degree l over F_p).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldSpec {
    p: u64,
    l: u32,
    /// l+1 digits in [0, p), ascending powers of u, leading digit 1.
    modulus: Vec<u64>,
    q: u64,
}

/// Cheap-to-clone handle to a field; all element arithmetic goes through it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fq(Arc<FieldSpec>);

/// Element of F_q, packed base-p digits. Only meaningful relative to an `Fq`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FqElem(pub(crate) u64);

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// -------- F_p[u] helpers on plain digit vectors, used only for modulus work --------

fn fp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(&mut out);
    out
}

/// Remainder of a by monic b over F_p.
fn fp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    assert!(!b.is_empty() && *b.last().unwrap() == 1);
    let mut r: Vec<u64> = a.to_vec();
    fp_trim(&mut r);
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        for (j, &c) in b.iter().enumerate() {
            let idx = shift + j;
            r[idx] = (r[idx] + p * lead - (lead * c) % p) % p;
        }
        fp_trim(&mut r);
    }
    r
}

/// Trial-division irreducibility over F_p for the small degrees used here.
fn fp_irreducible(m: &[u64], p: u64) -> bool {
    let d = m.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    // enumerate monic divisors of degree 1..=d/2
    for dd in 1..=(d / 2) {
        let count = p.pow(dd as u32);
        for idx in 0..count {
            let mut cand = Vec::with_capacity(dd + 1);
            let mut n = idx;
            for _ in 0..dd {
                cand.push(n % p);
                n /= p;
            }
            cand.push(1);
            if fp_rem(m, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// First monic irreducible of degree l over F_p in lexicographic order of
/// the coefficient tuple (constant digit most significant).
fn default_modulus(p: u64, l: u32) -> Option<Vec<u64>> {
    if l == 1 {
        return Some(vec![0, 1]);
    }
    let d = l as usize;
    let count = p.checked_pow(l)?;
    for m in 0..count {
        let mut digits = vec![0u64; d + 1];
        let mut n = m;
        // lex order on (c_0, ..., c_{d-1}): c_0 most significant
        for i in (0..d).rev() {
            digits[i] = n % p;
            n /= p;
        }
        digits[d] = 1;
        if fp_irreducible(&digits, p) {
            return Some(digits);
        }
    }
    None
}

/// Construct F_q with validation. With no modulus and l > 1, a deterministic
/// built-in choice is used for p^l <= 64.
pub fn fq_make(p: u64, l: u32, modulus: Option<Vec<u64>>) -> Result<Fq> {
    if !is_prime(p) {
        return Err(Error::NonPrimeP(p));
    }
    assert!(l >= 1, "extension degree must be positive");
    let bits = (l as f64) * (p as f64).log2();
    assert!(bits < 63.0, "field too large for packed representation");
    let q = p.pow(l);
    let modulus = match modulus {
        Some(m) => {
            if m.len() != l as usize + 1 || *m.last().unwrap_or(&0) != 1 {
                return Err(Error::ReducibleModulus);
            }
            if m.iter().any(|&d| d >= p) {
                return Err(Error::ReducibleModulus);
            }
            m
        }
        None => {
            if l > 1 && q > 64 {
                return Err(Error::NoDefaultModulus { p, l });
            }
            default_modulus(p, l).ok_or(Error::NoDefaultModulus { p, l })?
        }
    };
    // re-verify irreducibility even for the built-in table
    if !fp_irreducible(&modulus, p) {
        return Err(Error::ReducibleModulus);
    }
    Ok(Fq(Arc::new(FieldSpec { p, l, modulus, q })))
}

impl Fq {
    pub fn p(&self) -> u64 {
        self.0.p
    }
    pub fn l(&self) -> u32 {
        self.0.l
    }
    pub fn q(&self) -> u64 {
        self.0.q
    }
    pub fn modulus_digits(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FqElem {
        FqElem(0)
    }
    pub fn one(&self) -> FqElem {
        FqElem(1)
    }

    /// Element from an integer (reduced mod p; meaningful as the prime-field part).
    pub fn from_int(&self, n: i64) -> FqElem {
        let p = self.0.p as i64;
        FqElem((n.rem_euclid(p)) as u64)
    }

    /// The generator u of the power basis (only distinct from an integer when l > 1).
    pub fn generator(&self) -> FqElem {
        if self.0.l == 1 {
            // u is the trivial modulus root; the prime field has no extra generator
            FqElem(0)
        } else {
            FqElem(self.0.p)
        }
    }

    /// Element from explicit digits (ascending powers of u).
    pub fn from_digits(&self, digits: &[u64]) -> FqElem {
        assert!(digits.len() <= self.0.l as usize);
        let p = self.0.p;
        let mut packed = 0u64;
        for &d in digits.iter().rev() {
            assert!(d < p);
            packed = packed * p + d;
        }
        FqElem(packed)
    }

    pub fn digits(&self, e: FqElem) -> Vec<u64> {
        let p = self.0.p;
        let mut out = Vec::with_capacity(self.0.l as usize);
        let mut n = e.0;
        for _ in 0..self.0.l {
            out.push(n % p);
            n /= p;
        }
        out
    }

    /// Iterate all q elements in packed order.
    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        (0..self.0.q).map(FqElem)
    }

    pub fn is_zero(&self, e: FqElem) -> bool {
        e.0 == 0
    }

    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        let p = self.0.p;
        if self.0.l == 1 {
            return FqElem((a.0 + b.0) % p);
        }
        let mut out = 0u64;
        let (mut x, mut y) = (a.0, b.0);
        let mut mult = 1u64;
        for _ in 0..self.0.l {
            out += ((x % p + y % p) % p) * mult;
            x /= p;
            y /= p;
            mult *= p;
        }
        FqElem(out)
    }

    pub fn neg(&self, a: FqElem) -> FqElem {
        let p = self.0.p;
        if self.0.l == 1 {
            return FqElem((p - a.0) % p);
        }
        let mut out = 0u64;
        let mut x = a.0;
        let mut mult = 1u64;
        for _ in 0..self.0.l {
            out += ((p - x % p) % p) * mult;
            x /= p;
            mult *= p;
        }
        FqElem(out)
    }

    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        let p = self.0.p;
        if self.0.l == 1 {
            return FqElem((a.0 * b.0) % p);
        }
        let l = self.0.l as usize;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * l - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let rem = fp_rem(&prod, &self.0.modulus, p);
        self.from_digits(&rem)
    }

    pub fn pow(&self, a: FqElem, mut e: u64) -> FqElem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FqElem) -> FqElem {
        assert!(a.0 != 0, "division by zero in F_q");
        self.pow(a, self.0.q - 2)
    }

    /// The q-power Frobenius x -> x^q (identity on F_q, used via twists upstream).
    pub fn frobenius_q(&self, a: FqElem) -> FqElem {
        self.pow(a, self.0.q)
    }

    pub fn display(&self, e: FqElem) -> String {
        if self.0.l == 1 {
            format!("{}", e.0)
        } else {
            let ds: Vec<String> = self.digits(e).iter().map(|d| d.to_string()).collect();
            format!("[{}]", ds.join(","))
        }
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f3 = fq_make(3, 1, None).unwrap();
        assert_eq!(f3.q(), 3);
        assert_eq!(f3.add(f3.from_int(2), f3.from_int(2)), f3.from_int(1));
        assert_eq!(f3.mul(f3.from_int(2), f3.from_int(2)), f3.from_int(1));
        assert_eq!(f3.inv(f3.from_int(2)), f3.from_int(2));
    }

    #[test]
    fn f4_with_explicit_modulus() {
        // u^2 + u + 1 is irreducible over F_2: no root in {0, 1}
        let f4 = fq_make(2, 2, Some(vec![1, 1, 1])).unwrap();
        assert_eq!(f4.q(), 4);
        let u = f4.generator();
        // u^2 = u + 1
        assert_eq!(f4.mul(u, u), f4.add(u, f4.one()));
        // x^q = x for all x
        for x in f4.elements() {
            assert_eq!(f4.pow(x, 4), x);
        }
    }

    #[test]
    fn non_prime_p_rejected() {
        assert_eq!(fq_make(4, 1, None).unwrap_err(), Error::NonPrimeP(4));
    }

    #[test]
    fn reducible_modulus_rejected() {
        // u^2 + 1 = (u+1)^2 over F_2
        assert_eq!(
            fq_make(2, 2, Some(vec![1, 0, 1])).unwrap_err(),
            Error::ReducibleModulus
        );
    }

    #[test]
    fn default_modulus_available_up_to_64() {
        for (p, l) in [(2, 2), (2, 3), (2, 6), (3, 2), (3, 3), (5, 2), (7, 2)] {
            let f = fq_make(p, l, None).unwrap();
            assert_eq!(f.q(), p.pow(l));
        }
        assert!(matches!(
            fq_make(3, 4, None).unwrap_err(),
            Error::NoDefaultModulus { .. }
        ));
    }

    #[test]
    fn frobenius_is_additive_and_multiplicative() {
        let f9 = fq_make(3, 2, None).unwrap();
        for a in f9.elements() {
            for b in f9.elements() {
                let fr = |x| f9.pow(x, 3);
                assert_eq!(fr(f9.add(a, b)), f9.add(fr(a), fr(b)));
                assert_eq!(fr(f9.mul(a, b)), f9.mul(fr(a), fr(b)));
            }
        }
    }
}
