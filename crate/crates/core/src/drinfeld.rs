//! Drinfeld modules over A, their z- and t-deformations, exponential and
//! logarithm coefficient tables, the Carlitz action, and the convergence
//! radius of the deformed logarithm.

use num::rational::Ratio;

use crate::algebra::field::Fq;
use crate::algebra::multipoly::{MultiPoly, Vars};
use crate::algebra::ratfunc::RatFunc;
use crate::algebra::skew::SkewPoly;
use crate::algebra::unipoly::UniPoly;
use crate::error::{Error, Result};

/// phi_theta = theta + phi_1 tau + ... + phi_r tau^r with phi_r != 0.
#[derive(Debug, Clone, PartialEq)]
pub struct DrinfeldModule {
    field: Fq,
    /// index i = tau-degree; coeffs[0] = theta
    coeffs: Vec<UniPoly>,
}

impl DrinfeldModule {
    /// Build from the coefficients above the constant term: phi_1 .. phi_r.
    pub fn new(field: &Fq, upper: Vec<UniPoly>) -> Self {
        assert!(
            upper.last().map_or(false, |c| !c.is_zero()),
            "top coefficient phi_r must be nonzero"
        );
        let mut coeffs = vec![UniPoly::theta_pow(field, 1)];
        coeffs.extend(upper);
        DrinfeldModule {
            field: field.clone(),
            coeffs,
        }
    }

    /// The Carlitz module: theta + tau.
    pub fn carlitz(field: &Fq) -> Self {
        DrinfeldModule::new(field, vec![UniPoly::one(field)])
    }

    pub fn from_ints(field: &Fq, upper: &[&[i64]]) -> Self {
        DrinfeldModule::new(
            field,
            upper.iter().map(|c| UniPoly::from_ints(field, c)).collect(),
        )
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// All coefficients including the leading theta.
    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &UniPoly {
        &self.coeffs[i]
    }

    /// beta = max theta-degree of the nonconstant coefficients (0 when they
    /// are all constants).
    pub fn beta(&self) -> u64 {
        self.coeffs[1..]
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.degree().unwrap() as u64)
            .max()
            .unwrap_or(0)
    }
}

/// Coefficient twists applied to phi_theta.
#[derive(Debug, Clone, PartialEq)]
pub enum DeformationKind {
    Plain,
    /// phi_i -> z^{m i} phi_i
    ZPower(u32),
    /// phi_i -> l_i(z_1)...l_i(z_n) phi_i
    Canonical(usize),
    /// phi_i -> t^i l_i(z_1)...l_i(z_n) phi_i
    CanonicalT(usize),
}

impl DeformationKind {
    /// Variable context of the deformed coefficients (theta included).
    pub fn vars(&self) -> Vars {
        match self {
            DeformationKind::Plain => Vars::new(&["theta"]),
            DeformationKind::ZPower(_) => Vars::new(&["theta", "z"]),
            DeformationKind::Canonical(n) => Vars::theta_z(*n),
            DeformationKind::CanonicalT(n) => Vars::theta_z(*n).with("t"),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "plain" {
            return Ok(DeformationKind::Plain);
        }
        if let Some(rest) = s.strip_prefix("z^") {
            let m: u32 = rest
                .parse()
                .map_err(|_| Error::Parse(format!("bad deformation '{}'", s)))?;
            if m == 0 {
                return Err(Error::Parse("z^m needs m >= 1".into()));
            }
            return Ok(DeformationKind::ZPower(m));
        }
        for (prefix, t) in [("canonical-t(", true), ("canonical(", false)] {
            if let Some(rest) = s.strip_prefix(prefix) {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("bad deformation '{}'", s)))?;
                let n: usize = inner
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad deformation '{}'", s)))?;
                if !t && n == 0 {
                    return Err(Error::Parse("canonical(n) needs n >= 1".into()));
                }
                return Ok(if t {
                    DeformationKind::CanonicalT(n)
                } else {
                    DeformationKind::Canonical(n)
                });
            }
        }
        Err(Error::Parse(format!("bad deformation '{}'", s)))
    }
}

/// l_i(z) = prod_{j=0}^{i-1} (z - theta^{q^j}) for a single variable.
pub fn ell_factor(field: &Fq, i: usize, vars: &Vars, zname: &str) -> Result<MultiPoly> {
    let q = field.q();
    let mut acc = MultiPoly::one(field, vars);
    let z = MultiPoly::var_pow(field, vars, zname, 1)?;
    for j in 0..i {
        let e = q.checked_pow(j as u32).expect("q^j overflow");
        let th = MultiPoly::var_pow(field, vars, "theta", u32::try_from(e).unwrap())?;
        acc = acc.mul(&z.sub(&th));
    }
    Ok(acc)
}

/// prod_k l_i(z_k) over the given z-variables; l_0 = 1.
pub fn ell_product(field: &Fq, i: usize, vars: &Vars, znames: &[String]) -> Result<MultiPoly> {
    let mut acc = MultiPoly::one(field, vars);
    for name in znames {
        acc = acc.mul(&ell_factor(field, i, vars, name)?);
    }
    Ok(acc)
}

/// The deformed coefficients of phi_theta in the deformation's context.
pub fn deformed_coeffs(phi: &DrinfeldModule, kind: &DeformationKind) -> Vec<MultiPoly> {
    let f = phi.field();
    let vars = kind.vars();
    let znames: Vec<String> = vars
        .names()
        .iter()
        .filter(|n| n.starts_with('z'))
        .cloned()
        .collect();
    phi.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let base = MultiPoly::from_unipoly(c, &vars);
            match kind {
                DeformationKind::Plain => base,
                DeformationKind::ZPower(m) => {
                    let z = MultiPoly::var_pow(f, &vars, "z", m * i as u32).unwrap();
                    base.mul(&z)
                }
                DeformationKind::Canonical(_) => {
                    let l = ell_product(f, i, &vars, &znames).unwrap();
                    base.mul(&l)
                }
                DeformationKind::CanonicalT(_) => {
                    let l = ell_product(f, i, &vars, &znames).unwrap();
                    let t = MultiPoly::var_pow(f, &vars, "t", i as u32).unwrap();
                    base.mul(&l).mul(&t)
                }
            }
        })
        .collect()
}

/// The image of a under the module map determined by theta -> deformed
/// phi_theta, by Horner evaluation in the skew ring.
pub fn phi_of_a(phi: &DrinfeldModule, a: &UniPoly, kind: &DeformationKind) -> SkewPoly<MultiPoly> {
    let f = phi.field();
    let vars = kind.vars();
    let phi_theta = SkewPoly::from_coeffs(deformed_coeffs(phi, kind));
    let mut acc: SkewPoly<MultiPoly> = SkewPoly::zero();
    for &c in a.coeffs().iter().rev() {
        acc = acc.mul(&phi_theta);
        if !f.is_zero(c) {
            acc = acc.add(&SkewPoly::constant(MultiPoly::constant(f, &vars, c)));
        }
    }
    acc
}

/// Undeformed phi_a over A, for recursions and congruence work.
pub fn phi_of_a_plain(phi: &DrinfeldModule, a: &UniPoly) -> SkewPoly<UniPoly> {
    let f = phi.field();
    let phi_theta = SkewPoly::from_coeffs(phi.coeffs().to_vec());
    let mut acc: SkewPoly<UniPoly> = SkewPoly::zero();
    for &c in a.coeffs().iter().rev() {
        acc = acc.mul(&phi_theta);
        if !f.is_zero(c) {
            acc = acc.add(&SkewPoly::constant(UniPoly::constant(f, c)));
        }
    }
    acc
}

/// Table of exponential or logarithm coefficients, with the functional
/// equation re-checked after construction.
#[derive(Debug, Clone, PartialEq)]
pub enum TableKind {
    Exp,
    Log,
}

#[derive(Debug, Clone)]
pub struct ExpLogTable {
    pub kind: TableKind,
    /// entries[k] = alpha_k or gamma_k
    pub entries: Vec<RatFunc>,
    pub certified: bool,
}

impl ExpLogTable {
    pub fn entry(&self, k: usize) -> &RatFunc {
        &self.entries[k]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn theta_qk_minus_theta(field: &Fq, k: u32) -> UniPoly {
    // theta^{q^k} - theta
    let e = field.q().checked_pow(k).expect("q^k overflow") as usize;
    UniPoly::theta_pow(field, e).sub(&UniPoly::theta_pow(field, 1))
}

/// alpha_0 = 1, alpha_k (theta^{q^k} - theta) = sum_{i=1}^{min(r,k)}
/// phi_i alpha_{k-i}^{q^i}.
pub fn exp_coeffs(phi: &DrinfeldModule, n: usize) -> ExpLogTable {
    let f = phi.field();
    let r = phi.rank();
    let mut entries = vec![RatFunc::one(f)];
    for k in 1..=n {
        let mut acc = RatFunc::zero(f);
        for i in 1..=r.min(k) {
            let c = phi.coeff(i);
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&entries[k - i].twist(i as u32).mul_poly(c));
        }
        let den = theta_qk_minus_theta(f, k as u32);
        entries.push(acc.div(&RatFunc::from_poly(den)));
    }
    let table = ExpLogTable {
        kind: TableKind::Exp,
        entries,
        certified: false,
    };
    let certified = certify_exp(phi, &table);
    assert!(certified, "exponential table failed its functional equation");
    ExpLogTable { certified, ..table }
}

/// gamma_0 = 1, gamma_k (theta - theta^{q^k}) = sum_{i=1}^{min(r,k)}
/// gamma_{k-i} phi_i^{q^{k-i}}.
pub fn log_coeffs(phi: &DrinfeldModule, n: usize) -> ExpLogTable {
    let f = phi.field();
    let r = phi.rank();
    let mut entries = vec![RatFunc::one(f)];
    for k in 1..=n {
        let mut acc = RatFunc::zero(f);
        for i in 1..=r.min(k) {
            let c = phi.coeff(i);
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&entries[k - i].mul_poly(&c.twist((k - i) as u32)));
        }
        let den = theta_qk_minus_theta(f, k as u32).neg();
        entries.push(acc.div(&RatFunc::from_poly(den)));
    }
    let table = ExpLogTable {
        kind: TableKind::Log,
        entries,
        certified: false,
    };
    let certified = certify_log(phi, &table);
    assert!(certified, "logarithm table failed its functional equation");
    ExpLogTable { certified, ..table }
}

fn phi_theta_ratfunc(phi: &DrinfeldModule) -> SkewPoly<RatFunc> {
    SkewPoly::from_coeffs(
        phi.coeffs()
            .iter()
            .map(|c| RatFunc::from_poly(c.clone()))
            .collect(),
    )
}

fn table_skew(t: &ExpLogTable) -> SkewPoly<RatFunc> {
    SkewPoly::from_coeffs(t.entries.clone())
}

/// exp_phi * theta = phi_theta * exp_phi, truncated at the table length.
pub fn certify_exp(phi: &DrinfeldModule, table: &ExpLogTable) -> bool {
    let f = phi.field();
    let cap = table.len() - 1;
    let e = table_skew(table);
    let theta = SkewPoly::constant(RatFunc::from_poly(UniPoly::theta_pow(f, 1)));
    let lhs = e.mul_truncated(&theta, cap);
    let rhs = phi_theta_ratfunc(phi).mul_truncated(&e, cap);
    lhs == rhs
}

/// log_phi * phi_theta = theta * log_phi, and exp o log = 1, truncated.
pub fn certify_log(phi: &DrinfeldModule, table: &ExpLogTable) -> bool {
    let f = phi.field();
    let cap = table.len() - 1;
    let l = table_skew(table);
    let theta = SkewPoly::constant(RatFunc::from_poly(UniPoly::theta_pow(f, 1)));
    let lhs = l.mul_truncated(&phi_theta_ratfunc(phi), cap);
    let rhs = theta.mul_truncated(&l, cap);
    lhs == rhs
}

/// Truncated composition check exp o log == 1 mod tau^{n+1}.
pub fn exp_log_compose_is_identity(exp: &ExpLogTable, log: &ExpLogTable, cap: usize) -> bool {
    let e = table_skew(exp);
    let l = table_skew(log);
    let prod = e.mul_truncated(&l, cap);
    let field = exp.entries[0].field().clone();
    prod == SkewPoly::constant(RatFunc::one(&field))
}

/// C_a(X) as a polynomial in the context {theta, X-name}: the Carlitz action
/// written out on an indeterminate.
pub fn carlitz_action(field: &Fq, a: &UniPoly, vars: &Vars, xname: &str) -> Result<MultiPoly> {
    let carlitz = DrinfeldModule::carlitz(field);
    let skew = phi_of_a_plain(&carlitz, a);
    let q = field.q();
    let mut acc = MultiPoly::zero(field, vars);
    for (j, c) in skew.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let e = q.checked_pow(j as u32).expect("q^j overflow");
        let x = MultiPoly::var_pow(field, vars, xname, u32::try_from(e).unwrap())?;
        acc = acc.add(&x.mul(&MultiPoly::from_unipoly(c, vars)));
    }
    Ok(acc)
}

/// A-linear substitution sending prod_j z_j^{e_j} to prod_j C_{theta^{e_j}}(X_j).
/// The input lives in A[z_1..z_n]; the image lives in A[X_1..X_n].
pub fn carlitz_substitute(p: &MultiPoly, n: usize) -> Result<MultiPoly> {
    let field = p.field().clone();
    let in_vars = p.vars().clone();
    let mut xnames = vec!["theta".to_string()];
    for j in 1..=n {
        xnames.push(format!("X{}", j));
    }
    let out_vars = Vars::from_owned(xnames);
    let zidx: Vec<Option<usize>> = (1..=n).map(|j| in_vars.index(&format!("z{}", j))).collect();
    let ti_in = in_vars.index("theta");
    // cache C_{theta^e}(X_j) per (e, j)
    let mut cache: std::collections::BTreeMap<(u32, usize), MultiPoly> =
        std::collections::BTreeMap::new();
    let mut out = MultiPoly::zero(&field, &out_vars);
    for (exps, &c) in p.terms() {
        let mut term = MultiPoly::constant(&field, &out_vars, c);
        if let Some(ti) = ti_in {
            if exps[ti] > 0 {
                term = term.mul(&MultiPoly::var_pow(&field, &out_vars, "theta", exps[ti])?);
            }
        }
        for (j0, zi) in zidx.iter().enumerate() {
            let e = zi.map(|i| exps[i]).unwrap_or(0);
            let xname = format!("X{}", j0 + 1);
            let factor = match cache.get(&(e, j0)) {
                Some(f) => f.clone(),
                None => {
                    let a = UniPoly::theta_pow(&field, e as usize);
                    let f = carlitz_action(&field, &a, &out_vars, &xname)?;
                    cache.insert((e, j0), f.clone());
                    f
                }
            };
            term = term.mul(&factor);
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// The index i(phi) maximizing (deg phi_s - q^s)/(q^s - 1) over nonzero
/// coefficients (smallest index on ties), and the log-convergence exponent
/// (q^i - deg phi_i - n(1 + q + ... + q^{i-1})) / (q^i - 1).
pub fn log_radius(phi: &DrinfeldModule, n: usize) -> Result<(usize, Ratio<i64>)> {
    let q = phi.field().q() as i64;
    let mut best: Option<(usize, Ratio<i64>)> = None;
    for s in 1..=phi.rank() {
        if phi.coeff(s).is_zero() {
            continue;
        }
        let qs = q.checked_pow(s as u32).expect("q^s overflow");
        let val = Ratio::new(phi.coeff(s).deg_i() - qs, qs - 1);
        match &best {
            Some((_, b)) if *b >= val => {}
            _ => best = Some((s, val)),
        }
    }
    let (i, _) = best.ok_or(Error::ZeroTail)?;
    let qi = q.pow(i as u32);
    let geo: i64 = (0..i).map(|j| q.pow(j as u32)).sum();
    let expo = Ratio::new(qi - phi.coeff(i).deg_i() - n as i64 * geo, qi - 1);
    Ok((i, expo))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::fq_make;

    fn f3() -> Fq {
        fq_make(3, 1, None).unwrap()
    }

    #[test]
    fn phi_of_a_examples() {
        let f = f3();
        let c = DrinfeldModule::carlitz(&f);
        // homomorphism sends 1 to 1
        let one = phi_of_a(&c, &UniPoly::one(&f), &DeformationKind::Plain);
        assert_eq!(one.tau_degree(), Some(0));
        assert!(one.coeff(0).unwrap().is_one());
        // C_{theta^2} = theta^2 + (theta + theta^q) tau + tau^2
        let th2 = UniPoly::theta_pow(&f, 2);
        let sq = phi_of_a_plain(&c, &th2);
        let th = UniPoly::theta_pow(&f, 1);
        assert_eq!(sq.coeff(0), Some(&th2));
        assert_eq!(sq.coeff(1), Some(&th.add(&th.twist(1))));
        assert!(sq.coeff(2).unwrap().is_one());
        // rank 2 with phi_1 = 0: phi_{theta^2} = theta^2 + (theta^{q^2} + theta) tau^2 + tau^4
        let phi = DrinfeldModule::from_ints(&f, &[&[0], &[1]]);
        let sq2 = phi_of_a_plain(&phi, &th2);
        assert_eq!(sq2.coeff(0), Some(&th2));
        assert_eq!(sq2.coeff(2), Some(&th.twist(2).add(&th)));
        assert!(sq2.coeff(4).unwrap().is_one());
        assert!(sq2.coeff(1).unwrap().is_zero());
    }

    #[test]
    fn exp_log_carlitz_small() {
        let f = f3();
        let c = DrinfeldModule::carlitz(&f);
        let exp = exp_coeffs(&c, 3);
        let log = log_coeffs(&c, 3);
        assert!(exp.certified && log.certified);
        // alpha_1 = 1/(theta^q - theta)
        let den1 = theta_qk_minus_theta(&f, 1);
        assert_eq!(
            exp.entry(1),
            &RatFunc::new(UniPoly::one(&f), den1.clone())
        );
        // gamma_1 = 1/(theta - theta^q)
        assert_eq!(
            log.entry(1),
            &RatFunc::new(UniPoly::one(&f), den1.neg())
        );
        // gamma_2 = 1/((theta - theta^q)(theta - theta^{q^2}))
        let den2 = den1.neg().mul(&theta_qk_minus_theta(&f, 2).neg());
        assert_eq!(log.entry(2), &RatFunc::new(UniPoly::one(&f), den2));
        assert!(exp_log_compose_is_identity(&exp, &log, 3));
    }

    #[test]
    fn exp_log_rank_two_gap() {
        let f = f3();
        let phi = DrinfeldModule::from_ints(&f, &[&[0], &[1]]);
        let exp = exp_coeffs(&phi, 2);
        let log = log_coeffs(&phi, 2);
        assert!(exp.entry(1).is_zero());
        assert_eq!(
            exp.entry(2),
            &RatFunc::new(UniPoly::one(&f), theta_qk_minus_theta(&f, 2))
        );
        assert!(log.entry(1).is_zero());
        assert_eq!(
            log.entry(2),
            &RatFunc::new(UniPoly::one(&f), theta_qk_minus_theta(&f, 2).neg())
        );
    }

    #[test]
    fn ell_products() {
        let f = f3();
        let vars = Vars::theta_z(1);
        assert!(ell_product(&f, 0, &vars, &["z1".into()]).unwrap().is_one());
        let l1 = ell_product(&f, 1, &vars, &["z1".into()]).unwrap();
        let z = MultiPoly::var_pow(&f, &vars, "z1", 1).unwrap();
        let th = MultiPoly::var_pow(&f, &vars, "theta", 1).unwrap();
        assert_eq!(l1, z.sub(&th));
        let l2 = ell_product(&f, 2, &vars, &["z1".into()]).unwrap();
        let th3 = MultiPoly::var_pow(&f, &vars, "theta", 3).unwrap();
        assert_eq!(l2, z.sub(&th).mul(&z.sub(&th3)));
    }

    #[test]
    fn carlitz_action_examples() {
        let f = f3();
        let vars = Vars::new(&["theta", "X1"]);
        let th = MultiPoly::var_pow(&f, &vars, "theta", 1).unwrap();
        let x = MultiPoly::var_pow(&f, &vars, "X1", 1).unwrap();
        let xq = MultiPoly::var_pow(&f, &vars, "X1", 3).unwrap();
        // C_theta(X) = theta X + X^q
        let a = carlitz_action(&f, &UniPoly::theta_pow(&f, 1), &vars, "X1").unwrap();
        assert_eq!(a, th.mul(&x).add(&xq));
        // C_{theta+1}(X) = (theta + 1) X + X^q
        let b = carlitz_action(&f, &UniPoly::from_ints(&f, &[1, 1]), &vars, "X1").unwrap();
        assert_eq!(
            b,
            th.add(&MultiPoly::one(&f, &vars)).mul(&x).add(&xq)
        );
        // C_{theta^2}(X) = theta^2 X + (theta^q + theta) X^q + X^{q^2}
        let c = carlitz_action(&f, &UniPoly::theta_pow(&f, 2), &vars, "X1").unwrap();
        let th2 = MultiPoly::var_pow(&f, &vars, "theta", 2).unwrap();
        let thq = MultiPoly::var_pow(&f, &vars, "theta", 3).unwrap();
        let xq2 = MultiPoly::var_pow(&f, &vars, "X1", 9).unwrap();
        assert_eq!(
            c,
            th2.mul(&x).add(&thq.add(&th).mul(&xq)).add(&xq2)
        );
    }

    #[test]
    fn carlitz_substitute_examples() {
        let f = f3();
        let zvars = Vars::theta_z(2);
        // 1 -> 1
        let one = MultiPoly::one(&f, &zvars);
        assert!(carlitz_substitute(&one, 2).unwrap().is_one());
        // z1 -> theta X1 + X1^q
        let z1 = MultiPoly::var_pow(&f, &zvars, "z1", 1).unwrap();
        let img = carlitz_substitute(&z1, 2).unwrap();
        let xv = img.vars().clone();
        let th = MultiPoly::var_pow(&f, &xv, "theta", 1).unwrap();
        let x1 = MultiPoly::var_pow(&f, &xv, "X1", 1).unwrap();
        let x1q = MultiPoly::var_pow(&f, &xv, "X1", 3).unwrap();
        assert_eq!(img, th.mul(&x1).add(&x1q));
        // z1 z2 -> (theta X1 + X1^q)(theta X2 + X2^q)
        let z2 = MultiPoly::var_pow(&f, &zvars, "z2", 1).unwrap();
        let img2 = carlitz_substitute(&z1.mul(&z2), 2).unwrap();
        let x2 = MultiPoly::var_pow(&f, &xv, "X2", 1).unwrap();
        let x2q = MultiPoly::var_pow(&f, &xv, "X2", 3).unwrap();
        let expected = th.mul(&x1).add(&x1q).mul(&th.mul(&x2).add(&x2q));
        assert_eq!(img2, expected);
    }

    #[test]
    fn log_radius_examples() {
        let f = f3();
        let c = DrinfeldModule::carlitz(&f);
        // Carlitz, n = 0: (1, q/(q-1))
        assert_eq!(log_radius(&c, 0).unwrap(), (1, Ratio::new(3, 2)));
        // Carlitz, n = 1: (1, 1)
        assert_eq!(log_radius(&c, 1).unwrap(), (1, Ratio::new(1, 1)));
        // theta + tau^2, n = 0: (2, q^2/(q^2-1))
        let phi = DrinfeldModule::from_ints(&f, &[&[0], &[1]]);
        assert_eq!(log_radius(&phi, 0).unwrap(), (2, Ratio::new(9, 8)));
    }
}
