//! Sparse multivariate polynomials over F_q in an ordered variable context.
//!
//! Variables are drawn from {theta, z, z1..zn, t, X1..Xn, X} and kept in a
//! canonical order (theta first, the charpoly variable X last). Terms map an
//! exponent tuple to a nonzero coefficient; zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::field::{Fq, FqElem};
use crate::algebra::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Ordered, shared variable context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vars(Arc<Vec<String>>);

/// Canonical rank used to sort variable contexts deterministically.
fn var_rank(name: &str) -> (u8, u32) {
    match name {
        "theta" => (0, 0),
        "z" => (1, 0),
        "t" => (3, 0),
        "X" => (6, 0),
        _ => {
            if let Some(rest) = name.strip_prefix('z') {
                if let Ok(i) = rest.parse::<u32>() {
                    return (2, i);
                }
            }
            if let Some(rest) = name.strip_prefix('X') {
                if let Ok(i) = rest.parse::<u32>() {
                    return (4, i);
                }
            }
            (5, 0)
        }
    }
}

impl Vars {
    pub fn new(names: &[&str]) -> Self {
        let mut v: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        v.sort_by(|a, b| var_rank(a).cmp(&var_rank(b)).then_with(|| a.cmp(b)));
        v.dedup();
        Vars(Arc::new(v))
    }

    pub fn empty() -> Self {
        Vars(Arc::new(vec![]))
    }

    /// theta plus z1..zn (n = 0 gives just theta).
    pub fn theta_z(n: usize) -> Self {
        let mut names = vec!["theta".to_string()];
        for i in 1..=n {
            names.push(format!("z{}", i));
        }
        Vars::from_owned(names)
    }

    /// z1..zn only (Tate-series coefficient context).
    pub fn z_only(n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|i| format!("z{}", i)).collect();
        Vars::from_owned(names)
    }

    pub fn from_owned(mut names: Vec<String>) -> Self {
        names.sort_by(|a, b| var_rank(a).cmp(&var_rank(b)).then_with(|| a.cmp(b)));
        names.dedup();
        Vars(Arc::new(names))
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index(name).is_some()
    }

    /// Union of two contexts, canonically ordered.
    pub fn union(&self, other: &Vars) -> Vars {
        let mut names: Vec<String> = self.0.iter().chain(other.0.iter()).cloned().collect();
        names.sort_by(|a, b| var_rank(a).cmp(&var_rank(b)).then_with(|| a.cmp(b)));
        names.dedup();
        Vars(Arc::new(names))
    }

    pub fn with(&self, name: &str) -> Vars {
        self.union(&Vars::new(&[name]))
    }

    pub fn without(&self, name: &str) -> Vars {
        let names: Vec<String> = self.0.iter().filter(|v| v.as_str() != name).cloned().collect();
        Vars(Arc::new(names))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    field: Fq,
    vars: Vars,
    terms: BTreeMap<Vec<u32>, FqElem>,
}

impl MultiPoly {
    pub fn zero(field: &Fq, vars: &Vars) -> Self {
        MultiPoly {
            field: field.clone(),
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &Fq, vars: &Vars, c: FqElem) -> Self {
        let mut p = MultiPoly::zero(field, vars);
        if !field.is_zero(c) {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(field: &Fq, vars: &Vars) -> Self {
        MultiPoly::constant(field, vars, field.one())
    }

    /// Single variable to the given power.
    pub fn var_pow(field: &Fq, vars: &Vars, name: &str, e: u32) -> Result<Self> {
        let idx = vars
            .index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = e;
        let mut p = MultiPoly::zero(field, vars);
        p.terms.insert(exps, field.one());
        Ok(p)
    }

    /// Embed a univariate polynomial in theta.
    pub fn from_unipoly(p: &UniPoly, vars: &Vars) -> Self {
        let field = p.field().clone();
        let mut out = MultiPoly::zero(&field, vars);
        if p.is_zero() {
            return out;
        }
        let ti = vars
            .index("theta")
            .expect("context must contain theta to embed a UniPoly");
        for (i, &c) in p.coeffs().iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            let mut exps = vec![0; vars.len()];
            exps[ti] = i as u32;
            out.terms.insert(exps, c);
        }
        out
    }

    /// Substitute theta by the named variable (or keep plain embedding when
    /// the target is theta itself).
    pub fn unipoly_in_var(p: &UniPoly, vars: &Vars, target: &str) -> Result<Self> {
        let field = p.field().clone();
        let idx = vars
            .index(target)
            .ok_or_else(|| Error::UnknownVariable(target.to_string()))?;
        let mut out = MultiPoly::zero(&field, vars);
        for (i, &c) in p.coeffs().iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            let mut exps = vec![0; vars.len()];
            exps[idx] = i as u32;
            out.terms.insert(exps, c);
        }
        Ok(out)
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, FqElem> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&vec![0; self.vars.len()][..])
                .map_or(false, |&c| c == self.field.one())
    }

    pub fn insert_term(&mut self, exps: Vec<u32>, c: FqElem) {
        assert_eq!(exps.len(), self.vars.len());
        if self.field.is_zero(c) {
            return;
        }
        let f = self.field.clone();
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = f.add(*e.get(), c);
                if f.is_zero(s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn assert_same_ctx(&self, other: &Self) -> Result<()> {
        if self.field != other.field || self.vars != other.vars {
            return Err(Error::IncompatibleContexts(format!(
                "{:?} vs {:?}",
                self.vars.names(),
                other.vars.names()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_ctx(other).expect("MultiPoly::add");
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.insert_term(e.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        let mut out = MultiPoly::zero(f, &self.vars);
        for (e, &c) in &self.terms {
            out.terms.insert(e.clone(), f.neg(c));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: FqElem) -> Self {
        let f = &self.field;
        if f.is_zero(c) {
            return MultiPoly::zero(f, &self.vars);
        }
        let mut out = MultiPoly::zero(f, &self.vars);
        for (e, &a) in &self.terms {
            let p = f.mul(a, c);
            if !f.is_zero(p) {
                out.terms.insert(e.clone(), p);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_ctx(other).expect("MultiPoly::mul");
        let f = self.field.clone();
        let mut out = MultiPoly::zero(&f, &self.vars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let c = f.mul(ca, cb);
                if f.is_zero(c) {
                    continue;
                }
                let exps: Vec<u32> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                out.insert_term(exps, c);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = MultiPoly::one(&self.field, &self.vars);
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

    /// Re-context into a superset of the current variables.
    pub fn embed(&self, vars: &Vars) -> Self {
        if &self.vars == vars {
            return self.clone();
        }
        let map: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|n| vars.index(n).expect("embed target must be a superset"))
            .collect();
        let mut out = MultiPoly::zero(&self.field, vars);
        for (e, &c) in &self.terms {
            let mut exps = vec![0u32; vars.len()];
            for (i, &x) in e.iter().enumerate() {
                exps[map[i]] = x;
            }
            out.terms.insert(exps, c);
        }
        out
    }

    /// Drop variables that never appear; target must contain all used ones.
    pub fn restrict(&self, vars: &Vars) -> Self {
        let map: Vec<Option<usize>> = self.vars.names().iter().map(|n| vars.index(n)).collect();
        let mut out = MultiPoly::zero(&self.field, vars);
        for (e, &c) in &self.terms {
            let mut exps = vec![0u32; vars.len()];
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let idx = map[i].expect("restriction drops a used variable");
                exps[idx] = x;
            }
            out.insert_term(exps, c);
        }
        out
    }

    pub fn degree_in(&self, name: &str) -> Option<u32> {
        let idx = self.vars.index(name)?;
        self.terms.keys().map(|e| e[idx]).max()
    }

    /// Total degree over all variables; None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Coefficients with respect to one variable: exponent -> polynomial in
    /// the remaining context.
    pub fn coeffs_wrt(&self, name: &str) -> Result<BTreeMap<u32, MultiPoly>> {
        let idx = self
            .vars
            .index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let sub = self.vars.without(name);
        let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (e, &c) in &self.terms {
            let k = e[idx];
            let mut exps: Vec<u32> = e.clone();
            exps.remove(idx);
            out.entry(k)
                .or_insert_with(|| MultiPoly::zero(&self.field, &sub))
                .insert_term(exps, c);
        }
        out.retain(|_, p| !p.is_zero());
        Ok(out)
    }

    /// View as a univariate polynomial in theta; fails if other variables occur.
    pub fn to_unipoly(&self) -> Result<UniPoly> {
        let f = &self.field;
        let ti = self.vars.index("theta");
        let mut coeffs: Vec<FqElem> = vec![];
        for (e, &c) in &self.terms {
            for (i, &x) in e.iter().enumerate() {
                if Some(i) != ti && x != 0 {
                    return Err(Error::IncompatibleContexts(
                        "polynomial is not univariate in theta".into(),
                    ));
                }
            }
            let k = ti.map(|i| e[i]).unwrap_or(0) as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, f.zero());
            }
            coeffs[k] = c;
        }
        Ok(UniPoly::from_coeffs(f, coeffs))
    }

    /// Substitute one variable by an arbitrary polynomial in the same context.
    pub fn substitute_var(&self, name: &str, replacement: &MultiPoly) -> Result<Self> {
        let idx = self
            .vars
            .index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        self.assert_same_ctx(replacement)?;
        let f = self.field.clone();
        let mut out = MultiPoly::zero(&f, &self.vars);
        // cache powers of the replacement
        let mut powers: Vec<MultiPoly> = vec![MultiPoly::one(&f, &self.vars)];
        for (e, &c) in &self.terms {
            let k = e[idx] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap().mul(replacement);
                powers.push(next);
            }
            let mut base_exps = e.clone();
            base_exps[idx] = 0;
            for (re, &rc) in &powers[k].terms {
                let exps: Vec<u32> = base_exps.iter().zip(re.iter()).map(|(x, y)| x + y).collect();
                out.insert_term(exps, f.mul(c, rc));
            }
        }
        Ok(out)
    }

    /// Substitute a variable by a constant.
    pub fn substitute_const(&self, name: &str, value: FqElem) -> Result<Self> {
        let v = MultiPoly::constant(&self.field, &self.vars, value);
        self.substitute_var(name, &v)
    }

    /// theta -> theta^e (exponent stretch; e = q^j gives the Frobenius twist
    /// that fixes every other variable).
    pub fn stretch_var(&self, name: &str, e: u64) -> Result<Self> {
        let idx = self
            .vars
            .index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut out = MultiPoly::zero(&self.field, &self.vars);
        for (ex, &c) in &self.terms {
            let mut exps = ex.clone();
            let stretched = (exps[idx] as u64).checked_mul(e).expect("exponent overflow");
            exps[idx] = u32::try_from(stretched).expect("exponent overflow");
            out.insert_term(exps, c);
        }
        Ok(out)
    }

    /// Frobenius twist for skew multiplication: theta -> theta^{q^j},
    /// all other variables fixed.
    pub fn twist_theta(&self, j: u32) -> Self {
        if j == 0 || !self.vars.contains("theta") {
            return self.clone();
        }
        let e = self.field.q().pow(j);
        self.stretch_var("theta", e).unwrap()
    }

    /// The full q^j-th power map: every exponent times q^j (coefficients are
    /// F_q-fixed). Equals self.pow(q^j) in characteristic p.
    pub fn frobenius_pow(&self, j: u32) -> Self {
        if j == 0 {
            return self.clone();
        }
        let e = self.field.q().pow(j);
        let mut out = MultiPoly::zero(&self.field, &self.vars);
        for (ex, &c) in &self.terms {
            let exps: Vec<u32> = ex
                .iter()
                .map(|&x| u32::try_from(x as u64 * e).expect("exponent overflow"))
                .collect();
            out.terms.insert(exps, c);
        }
        out
    }

    /// Evaluate every variable; assignment indexed like the context.
    pub fn eval(&self, assignment: &[FqElem]) -> FqElem {
        assert_eq!(assignment.len(), self.vars.len());
        let f = &self.field;
        let mut acc = f.zero();
        for (e, &c) in &self.terms {
            let mut term = c;
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    term = f.mul(term, f.pow(assignment[i], x as u64));
                }
            }
            acc = f.add(acc, term);
        }
        acc
    }

    /// Reduce the theta-direction modulo a univariate f(theta); the result has
    /// theta-degree below deg f.
    pub fn reduce_theta_mod(&self, modulus: &UniPoly) -> Self {
        let f = self.field.clone();
        let ti = match self.vars.index("theta") {
            Some(i) => i,
            None => return self.clone(),
        };
        let d = modulus.degree().expect("nonzero modulus") as u32;
        let max_e = self.terms.keys().map(|e| e[ti]).max().unwrap_or(0);
        // theta^e mod f table
        let mut table: Vec<UniPoly> = Vec::with_capacity(max_e as usize + 1);
        let mut cur = UniPoly::one(&f);
        let theta = UniPoly::theta_pow(&f, 1);
        for _ in 0..=max_e {
            table.push(cur.clone());
            cur = cur.mul(&theta).rem(modulus);
        }
        let mut out = MultiPoly::zero(&f, &self.vars);
        for (e, &c) in &self.terms {
            let k = e[ti];
            if k < d {
                out.insert_term(e.clone(), c);
                continue;
            }
            for (i, &rc) in table[k as usize].coeffs().iter().enumerate() {
                if f.is_zero(rc) {
                    continue;
                }
                let mut exps = e.clone();
                exps[ti] = i as u32;
                out.insert_term(exps, f.mul(c, rc));
            }
        }
        out
    }

    /// Exact division in the polynomial domain; error if not exact. Used by
    /// fraction-free elimination, where exactness is guaranteed.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        self.assert_same_ctx(divisor)?;
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let f = self.field.clone();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(&f, &self.vars);
        let (dlead_e, &dlead_c) = divisor.terms.iter().next_back().unwrap();
        let dlead_inv = f.inv(dlead_c);
        while !rem.is_zero() {
            let (rlead_e, &rlead_c) = rem.terms.iter().next_back().unwrap();
            let mut qe = Vec::with_capacity(rlead_e.len());
            for (x, y) in rlead_e.iter().zip(dlead_e.iter()) {
                if x < y {
                    return Err(Error::IncompatibleContexts(
                        "inexact multivariate division".into(),
                    ));
                }
                qe.push(x - y);
            }
            let qc = f.mul(rlead_c, dlead_inv);
            let mut mono = MultiPoly::zero(&f, &self.vars);
            mono.terms.insert(qe.clone(), qc);
            quot.insert_term(qe, qc);
            rem = rem.sub(&mono.mul(divisor));
        }
        Ok(quot)
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let f = &self.field;
        let mut parts = vec![];
        for (e, &c) in &self.terms {
            let mut factors = vec![];
            let cs = f.display(c);
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let name = &self.vars.names()[i];
                if x == 1 {
                    factors.push(name.clone());
                } else {
                    factors.push(format!("{}^{}", name, x));
                }
            }
            if factors.is_empty() {
                parts.push(cs);
            } else if cs == "1" {
                parts.push(factors.join("*"));
            } else {
                parts.push(format!("{}*{}", cs, factors.join("*")));
            }
        }
        parts.join(" + ")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::fq_make;

    #[test]
    fn canonical_variable_order() {
        let v = Vars::new(&["X2", "t", "z1", "theta", "X", "X1", "z2"]);
        assert_eq!(
            v.names(),
            &["theta", "z1", "z2", "t", "X1", "X2", "X"]
        );
    }

    #[test]
    fn substitution_examples() {
        let f = fq_make(3, 1, None).unwrap();
        // (theta^2 + 1) with theta -> z1 gives z1^2 + 1
        let a = UniPoly::from_ints(&f, &[1, 0, 1]);
        let vars = Vars::new(&["z1"]);
        let s = MultiPoly::unipoly_in_var(&a, &vars, "z1").unwrap();
        let z = MultiPoly::var_pow(&f, &vars, "z1", 1).unwrap();
        assert_eq!(s, z.mul(&z).add(&MultiPoly::one(&f, &vars)));
        // constant 1 maps to 1
        let one = UniPoly::one(&f);
        assert!(MultiPoly::unipoly_in_var(&one, &vars, "z1").unwrap().is_one());
    }

    #[test]
    fn twist_matches_power_stretch() {
        let f = fq_make(3, 1, None).unwrap();
        let vars = Vars::new(&["theta", "z1"]);
        // theta + 2: twist by q=3 gives theta^3 + 2
        let a = MultiPoly::from_unipoly(&UniPoly::from_ints(&f, &[2, 1]), &vars);
        let t = a.twist_theta(1);
        assert_eq!(
            t.to_unipoly().unwrap(),
            UniPoly::from_ints(&f, &[2, 0, 0, 1])
        );
        // z is fixed by the theta twist
        let z = MultiPoly::var_pow(&f, &vars, "z1", 2).unwrap();
        assert_eq!(z.twist_theta(1), z);
    }

    #[test]
    fn exact_division_roundtrip() {
        let f = fq_make(5, 1, None).unwrap();
        let vars = Vars::new(&["theta", "z1"]);
        let a = MultiPoly::from_unipoly(&UniPoly::from_ints(&f, &[1, 2, 1]), &vars);
        let z = MultiPoly::var_pow(&f, &vars, "z1", 1).unwrap();
        let b = a.add(&z);
        let prod = a.mul(&b);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn reduce_theta_mod_linear() {
        let f = fq_make(3, 1, None).unwrap();
        let vars = Vars::new(&["theta", "z1"]);
        // theta^2*z + theta + 1 mod theta = 1
        let th = MultiPoly::var_pow(&f, &vars, "theta", 2).unwrap();
        let z = MultiPoly::var_pow(&f, &vars, "z1", 1).unwrap();
        let th1 = MultiPoly::var_pow(&f, &vars, "theta", 1).unwrap();
        let p = th.mul(&z).add(&th1).add(&MultiPoly::one(&f, &vars));
        let r = p.reduce_theta_mod(&UniPoly::theta_pow(&f, 1));
        assert!(r.is_one());
    }
}
