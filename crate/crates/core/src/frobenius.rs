//! The theta-action on A/fA and its deformations, Fitting ideals via
//! characteristic polynomials, Frobenius data (r_0, c(f), p_i, D_f), and the
//! multiplicative function mu.

use std::collections::BTreeMap;

use crate::algebra::field::{Fq, FqElem};
use crate::algebra::matrix::PolyMatrix;
use crate::algebra::multipoly::MultiPoly;
use crate::algebra::unipoly::{irreducibles_up_to, UniPoly};
use crate::drinfeld::{deformed_coeffs, DeformationKind, DrinfeldModule};
use crate::error::{Error, Result};

fn check_irreducible(f: &UniPoly) -> Result<()> {
    if f.is_zero() || !f.is_monic() {
        return Err(Error::ReducibleF(f.display()));
    }
    let d = f.degree().unwrap();
    if d == 0 {
        return Err(Error::ReducibleF(f.display()));
    }
    for g in irreducibles_up_to(f.field(), d / 2) {
        if f.rem(&g).is_zero() {
            return Err(Error::ReducibleF(f.display()));
        }
    }
    Ok(())
}

/// r_0 = max { i : phi_i != 0 mod f }, or 0 when none.
pub fn tau_degree_mod(phi: &DrinfeldModule, f: &UniPoly) -> usize {
    (1..=phi.rank())
        .rev()
        .find(|&i| !phi.coeff(i).rem(f).is_zero())
        .unwrap_or(0)
}

/// The d x d matrix of x -> (deformed phi_theta)(x) on A/fA over the basis
/// {1, theta, ..., theta^{d-1}}; entries in the deformation variables only.
pub fn theta_action_matrix(
    phi: &DrinfeldModule,
    f: &UniPoly,
    kind: &DeformationKind,
) -> Result<PolyMatrix> {
    check_irreducible(f)?;
    let field = phi.field().clone();
    let d = f.degree().unwrap();
    let q = field.q();
    let coeffs = deformed_coeffs(phi, kind);
    let full_vars = kind.vars();
    let entry_vars = full_vars.without("theta");
    // theta^e mod f, for e up to (d-1) q^r plus the theta-degree of coefficients
    let max_pow_base = (d as u64 - 1) * q.pow(phi.rank() as u32);
    let max_coeff_deg = coeffs.iter().filter_map(|c| c.degree_in("theta")).max().unwrap_or(0);
    let max_e = max_pow_base + max_coeff_deg as u64 + d as u64;
    let mut pow_table: Vec<UniPoly> = Vec::with_capacity(max_e as usize + 1);
    let theta = UniPoly::theta_pow(&field, 1);
    let mut cur = UniPoly::one(&field);
    for _ in 0..=max_e {
        pow_table.push(cur.clone());
        cur = cur.mul(&theta).rem(f);
    }
    // column b: image of theta^b
    let mut cols: Vec<Vec<MultiPoly>> = Vec::with_capacity(d);
    for b in 0..d {
        let mut col = vec![MultiPoly::zero(&field, &entry_vars); d];
        for (i, coeff_i) in coeffs.iter().enumerate() {
            if coeff_i.is_zero() {
                continue;
            }
            let power = (b as u64) * q.pow(i as u32);
            // coeff_i * theta^{b q^i} reduced mod f in the theta direction
            for (exps, &c) in coeff_i.terms() {
                let ti = full_vars.index("theta").unwrap();
                let e_theta = exps[ti] as u64 + power;
                let reduced = &pow_table[e_theta as usize];
                let mut rest_exps: Vec<u32> = exps.clone();
                rest_exps.remove(ti);
                for (row, &rc) in reduced.coeffs().iter().enumerate() {
                    if field.is_zero(rc) {
                        continue;
                    }
                    col[row].insert_term(rest_exps.clone(), field.mul(c, rc));
                }
            }
        }
        cols.push(col);
    }
    let mut rows = Vec::with_capacity(d * d);
    for r in 0..d {
        for b in 0..d {
            rows.push(cols[b][r].clone());
        }
    }
    PolyMatrix::new(&field, &entry_vars, d, rows)
}

/// Monic generator of the Fitting ideal: the characteristic polynomial of the
/// theta-action evaluated at X = theta. Monic of theta-degree d; equals f
/// when r_0 = 0.
pub fn fitting_ideal(
    phi: &DrinfeldModule,
    f: &UniPoly,
    kind: &DeformationKind,
) -> Result<MultiPoly> {
    let m = theta_action_matrix(phi, f, kind)?;
    let cp = m.charpoly_fraction_free();
    // substitute X = theta
    let out_vars = kind.vars();
    let field = phi.field().clone();
    let mut out = MultiPoly::zero(&field, &out_vars);
    let cp_vars = cp.vars().clone();
    let xi = cp_vars.index("X").unwrap();
    for (exps, &c) in cp.terms() {
        let xdeg = exps[xi];
        let mut rest: Vec<u32> = exps.clone();
        rest.remove(xi);
        // rest is indexed by entry_vars = out_vars without theta
        let ti = out_vars.index("theta").unwrap();
        let mut full = Vec::with_capacity(out_vars.len());
        let mut k = 0;
        for vi in 0..out_vars.len() {
            if vi == ti {
                full.push(xdeg);
            } else {
                full.push(rest[k]);
                k += 1;
            }
        }
        out.insert_term(full, c);
    }
    debug_assert_eq!(
        out.degree_in("theta"),
        Some(f.degree().unwrap() as u32),
        "fitting ideal must have theta-degree d"
    );
    Ok(out)
}

/// (r_0, c(f), e_i = c(f) p_i, D_f) for a prime f, read from the z-deformed
/// Fitting ideal. The structure guaranteed by the deformation (z-support in
/// multiples of d, z = 0 slice equal to f, unit top coefficient) is verified;
/// violations are implementation bugs surfaced as StructureViolation.
#[derive(Debug, Clone)]
pub struct FrobeniusData {
    pub f: UniPoly,
    pub d: usize,
    pub r0: usize,
    /// present iff r0 >= 1
    pub cf: Option<FqElem>,
    /// e[i-1] = c(f) p_i for 1 <= i <= r0; e[r0-1] = c(f)
    pub e: Vec<UniPoly>,
    /// coefficients of D_f(x) = 1 + sum e_i f^{i-1} x^i, ascending in x
    pub df: Vec<UniPoly>,
}

impl FrobeniusData {
    /// P(x) = x^{r0} + p_{r0-1} x^{r0-1} + ... + p_1 x + p_0 with
    /// p_0 = c(f)^{-1} f; empty when r0 = 0.
    pub fn frobenius_charpoly(&self) -> Vec<UniPoly> {
        let field = self.f.field().clone();
        if self.r0 == 0 {
            return vec![];
        }
        let cf = self.cf.unwrap();
        let cf_inv = field.inv(cf);
        let mut p = Vec::with_capacity(self.r0 + 1);
        p.push(self.f.scale(cf_inv));
        for i in 1..self.r0 {
            p.push(self.e[i - 1].scale(cf_inv));
        }
        p.push(UniPoly::one(&field));
        p
    }

    /// c(f) P(1), the plain Fitting value by the Frobenius route; equals f
    /// when r0 = 0.
    pub fn gekeler_value(&self) -> UniPoly {
        if self.r0 == 0 {
            return self.f.clone();
        }
        let mut acc = self.f.clone();
        for e in &self.e {
            acc = acc.add(e);
        }
        acc
    }
}

fn extract_frobenius(f: &UniPoly, fitting_z: &BTreeMap<u32, UniPoly>) -> Result<FrobeniusData> {
    let field = f.field().clone();
    let d = f.degree().unwrap();
    // z = 0 slice must be f itself
    match fitting_z.get(&0) {
        Some(p) if p == f => {}
        _ => {
            return Err(Error::StructureViolation(
                "z = 0 slice of the deformed Fitting ideal is not f".into(),
            ))
        }
    }
    let mut e: Vec<UniPoly> = vec![];
    for (&ze, poly) in fitting_z.iter() {
        if ze == 0 {
            continue;
        }
        if ze as usize % d != 0 {
            return Err(Error::StructureViolation(format!(
                "z-exponent {} is not a multiple of d = {}",
                ze, d
            )));
        }
        let i = ze as usize / d;
        while e.len() < i {
            e.push(UniPoly::zero(&field));
        }
        e[i - 1] = poly.clone();
    }
    let r0 = e.len();
    let cf = if r0 == 0 {
        None
    } else {
        let top = &e[r0 - 1];
        if top.degree() != Some(0) {
            return Err(Error::StructureViolation(
                "top z-coefficient is not a unit constant".into(),
            ));
        }
        Some(top.coeff(0))
    };
    for (i, ei) in e.iter().enumerate().take(r0.saturating_sub(1)) {
        if !ei.is_zero() && ei.degree().unwrap() >= d {
            return Err(Error::StructureViolation(format!(
                "deg e_{} = {} is not below d = {}",
                i + 1,
                ei.degree().unwrap(),
                d
            )));
        }
    }
    // D_f(x) = 1 + sum e_i f^{i-1} x^i
    let mut df = vec![UniPoly::one(&field)];
    let mut fpow = UniPoly::one(&field);
    for (i, ei) in e.iter().enumerate() {
        if i > 0 {
            fpow = fpow.mul(f);
        }
        df.push(ei.mul(&fpow));
    }
    Ok(FrobeniusData {
        f: f.clone(),
        d,
        r0,
        cf,
        e,
        df,
    })
}

/// Frobenius data via the z-deformed Fitting ideal at m = 1.
pub fn frobenius_data(phi: &DrinfeldModule, f: &UniPoly) -> Result<FrobeniusData> {
    check_irreducible(f)?;
    let fit = fitting_zdeform_dense(phi, f, None);
    extract_frobenius(f, &fit)
}

/// Dense computation of the z-deformed (m = 1) Fitting ideal, organized as
/// z-exponent -> theta-polynomial. `z_cap` truncates work above the given
/// z-exponent; None computes the full polynomial.
///
/// Entries of theta*Id - M live in F_q[z] with z-degree <= r, and the Bareiss
/// pivots at z = 0 divide exactly degreewise in z, so all arithmetic stays on
/// short vectors of univariate theta-polynomials.
pub fn fitting_zdeform_dense(
    phi: &DrinfeldModule,
    f: &UniPoly,
    z_cap: Option<usize>,
) -> BTreeMap<u32, UniPoly> {
    let field = phi.field().clone();
    let d = f.degree().unwrap();
    let q = field.q();
    let r = phi.rank();
    let cap = z_cap.unwrap_or(r * d).min(r * d);
    // entry[i][j] = vector over z-exponent of UniPoly in theta
    // build matrix of theta*Id - M where M is the deformed action
    let zero_entry = || vec![UniPoly::zero(&field); cap + 1];
    let mut a: Vec<Vec<Vec<UniPoly>>> = vec![vec![zero_entry(); d]; d];
    // theta^e mod f table
    let max_e = (d as u64 - 1) * q.pow(r as u32)
        + phi
            .coeffs()
            .iter()
            .map(|c| c.deg_i().max(0) as u64)
            .max()
            .unwrap_or(0)
        + 1;
    let theta = UniPoly::theta_pow(&field, 1);
    let mut pow_table: Vec<UniPoly> = Vec::with_capacity(max_e as usize + 1);
    let mut curp = UniPoly::one(&field);
    for _ in 0..=max_e {
        pow_table.push(curp.clone());
        curp = curp.mul(&theta).rem(f);
    }
    for b in 0..d {
        // action image of theta^b: sum_i z^i phi_i theta^{b q^i} mod f
        for (i, c) in phi.coeffs().iter().enumerate() {
            if c.is_zero() || i > cap {
                continue;
            }
            let power = (b as u64) * q.pow(i as u32);
            let mut reduced = UniPoly::zero(&field);
            for (k, &cc) in c.coeffs().iter().enumerate() {
                if field.is_zero(cc) {
                    continue;
                }
                reduced = reduced.add(&pow_table[power as usize + k].scale(cc));
            }
            for (row, &rc) in reduced.coeffs().iter().enumerate() {
                if field.is_zero(rc) {
                    continue;
                }
                // -M contribution
                let cur = &a[row][b][i];
                a[row][b][i] = cur.sub(&UniPoly::constant(&field, rc));
            }
        }
        // theta * Id contribution on the diagonal at z^0
        a[b][b][0] = a[b][b][0].add(&theta);
    }
    // Bareiss elimination over F_q[theta][z]/(z^{cap+1}); interior divisions
    // are exact in the full ring and lift degreewise in z because the z^0
    // part of every pivot is nonzero (it is a minor of theta*Id - companion).
    let mul_tr = |x: &Vec<UniPoly>, y: &Vec<UniPoly>| -> Vec<UniPoly> {
        let mut out = vec![UniPoly::zero(&field); cap + 1];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if i + j > cap {
                    break;
                }
                if yj.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&xi.mul(yj));
            }
        }
        out
    };
    let sub_tr = |x: &Vec<UniPoly>, y: &Vec<UniPoly>| -> Vec<UniPoly> {
        x.iter().zip(y.iter()).map(|(a, b)| a.sub(b)).collect()
    };
    // exact division by a truncated divisor with invertible-ish z^0 part:
    // q_j = (x_j - sum_{i<j} q_i p_{j-i}) / p_0, each division exact
    let div_tr = |x: &Vec<UniPoly>, p: &Vec<UniPoly>| -> Vec<UniPoly> {
        let p0 = &p[0];
        let mut qv: Vec<UniPoly> = Vec::with_capacity(cap + 1);
        for j in 0..=cap {
            let mut acc = x[j].clone();
            for (i, qi) in qv.iter().enumerate() {
                if qi.is_zero() {
                    continue;
                }
                let pk = &p[j - i];
                if pk.is_zero() {
                    continue;
                }
                acc = acc.sub(&qi.mul(pk));
            }
            qv.push(acc.div_exact(p0));
        }
        qv
    };
    let one_tr = {
        let mut v = zero_entry();
        v[0] = UniPoly::one(&field);
        v
    };
    let mut prev_pivot = one_tr;
    for k in 0..d.saturating_sub(1) {
        let pivot = a[k][k].clone();
        assert!(
            !pivot[0].is_zero(),
            "z^0 pivot vanished in the dense Fitting elimination"
        );
        for i in k + 1..d {
            for j in k + 1..d {
                let num = sub_tr(&mul_tr(&pivot, &a[i][j]), &mul_tr(&a[i][k], &a[k][j]));
                a[i][j] = div_tr(&num, &prev_pivot);
            }
            a[i][k] = zero_entry();
        }
        prev_pivot = pivot;
    }
    let det = a[d - 1][d - 1].clone();
    let mut out = BTreeMap::new();
    for (ze, poly) in det.into_iter().enumerate() {
        if !poly.is_zero() {
            out.insert(ze as u32, poly);
        }
    }
    out
}

/// mu(f^i): coefficient of x^i in the formal inverse of D_f(x).
pub fn mu_prime_power(data: &FrobeniusData, i: usize) -> UniPoly {
    let field = data.f.field().clone();
    let mut c: Vec<UniPoly> = vec![UniPoly::one(&field)];
    for k in 1..=i {
        let mut acc = UniPoly::zero(&field);
        for j in 1..=k.min(data.r0) {
            if data.df[j].is_zero() {
                continue;
            }
            acc = acc.add(&data.df[j].mul(&c[k - j]));
        }
        c.push(acc.neg());
    }
    c.swap_remove(i)
}

/// mu on all monic polynomials of degree <= max_degree, assembled
/// multiplicatively from prime powers.
#[derive(Debug, Clone)]
pub struct MuTable {
    phi: DrinfeldModule,
    max_degree: usize,
    values: BTreeMap<UniPoly, UniPoly>,
}

impl MuTable {
    pub fn phi(&self) -> &DrinfeldModule {
        &self.phi
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn get(&self, a: &UniPoly) -> Result<&UniPoly> {
        self.values.get(a).ok_or(Error::DegreeOutOfTable {
            requested: a.degree().unwrap_or(0),
            available: self.max_degree,
        })
    }

    pub fn values(&self) -> &BTreeMap<UniPoly, UniPoly> {
        &self.values
    }

    /// Monic polynomials of exact degree k with their mu values.
    pub fn of_degree(&self, k: usize) -> Result<Vec<(&UniPoly, &UniPoly)>> {
        if k > self.max_degree {
            return Err(Error::DegreeOutOfTable {
                requested: k,
                available: self.max_degree,
            });
        }
        Ok(self
            .values
            .iter()
            .filter(|(a, _)| a.degree() == Some(k))
            .collect())
    }
}

/// Build the table: enumerate prime-power factorizations directly, so every
/// monic polynomial of degree <= max_degree appears exactly once.
///
/// Primes of degree > max_degree/2 can only occur to the first power, where
/// only mu(f) = -e_1 is needed, so their Fitting determinant is truncated
/// above z^d. For rank-1 modules that coefficient is the scalar determinant
/// of the tau-part, computed directly.
pub fn mu_table(phi: &DrinfeldModule, max_degree: usize) -> Result<MuTable> {
    let field = phi.field().clone();
    let mut primes: Vec<(UniPoly, Vec<UniPoly>)> = vec![]; // (f, mu(f^i) for i >= 1)
    for f in irreducibles_up_to(&field, max_degree) {
        let d = f.degree().unwrap();
        let max_i = max_degree / d;
        if max_i == 0 {
            continue;
        }
        let mus: Vec<UniPoly> = if max_i == 1 {
            let data_lite = frobenius_first_coefficient(phi, &f);
            vec![data_lite.neg()]
        } else {
            let data = frobenius_data(phi, &f)?;
            (1..=max_i).map(|i| mu_prime_power(&data, i)).collect()
        };
        primes.push((f, mus));
    }
    let mut values: BTreeMap<UniPoly, UniPoly> = BTreeMap::new();
    // DFS over nondecreasing prime sequences
    fn extend(
        values: &mut BTreeMap<UniPoly, UniPoly>,
        primes: &[(UniPoly, Vec<UniPoly>)],
        start: usize,
        poly: UniPoly,
        mu: UniPoly,
        remaining: usize,
    ) {
        values.insert(poly.clone(), mu.clone());
        for (pi, (f, mus)) in primes.iter().enumerate().skip(start) {
            let d = f.degree().unwrap();
            if d > remaining {
                continue;
            }
            let mut fp = poly.clone();
            for i in 1..=remaining / d {
                fp = fp.mul(f);
                let new_mu = mu.mul(&mus[i - 1]);
                extend(values, primes, pi + 1, fp.clone(), new_mu, remaining - i * d);
            }
        }
    }
    extend(
        &mut values,
        &primes,
        0,
        UniPoly::one(&field),
        UniPoly::one(&field),
        max_degree,
    );
    Ok(MuTable {
        phi: phi.clone(),
        max_degree,
        values,
    })
}

/// e_1 = z^d-coefficient of the deformed Fitting ideal, by the z-truncated
/// determinant (full rank) or the scalar top determinant (rank 1, where
/// e_1 = c(f) is the z^d-coefficient itself).
fn frobenius_first_coefficient(phi: &DrinfeldModule, f: &UniPoly) -> UniPoly {
    let field = phi.field().clone();
    let d = f.degree().unwrap();
    if phi.rank() == 1 {
        // single z-block: e_1 = c(f) = (-1)^d det(tau-part)
        let c = det_tau_part(phi, f, 1);
        let sign = if d % 2 == 1 { field.neg(c) } else { c };
        return UniPoly::constant(&field, sign);
    }
    let fit = fitting_zdeform_dense(phi, f, Some(d));
    fit.get(&(d as u32)).cloned().unwrap_or_else(|| UniPoly::zero(&field))
}

/// Scalar determinant of the matrix of x -> phi_i x^{q^i} mod f over F_q.
fn det_tau_part(phi: &DrinfeldModule, f: &UniPoly, i: usize) -> FqElem {
    let field = phi.field().clone();
    let d = f.degree().unwrap();
    let q = field.q();
    let c = phi.coeff(i);
    // columns: image of theta^b
    let theta = UniPoly::theta_pow(&field, 1);
    let mut m = vec![vec![field.zero(); d]; d];
    let max_e = (d as u64 - 1) * q.pow(i as u32) + c.deg_i().max(0) as u64;
    let mut pow_table: Vec<UniPoly> = Vec::with_capacity(max_e as usize + 1);
    let mut curp = UniPoly::one(&field);
    for _ in 0..=max_e {
        pow_table.push(curp.clone());
        curp = curp.mul(&theta).rem(f);
    }
    for b in 0..d {
        let power = (b as u64) * q.pow(i as u32);
        let mut reduced = UniPoly::zero(&field);
        for (k, &cc) in c.coeffs().iter().enumerate() {
            if field.is_zero(cc) {
                continue;
            }
            reduced = reduced.add(&pow_table[power as usize + k].scale(cc));
        }
        for row in 0..d {
            m[row][b] = reduced.coeff(row);
        }
    }
    det_scalar(&field, &mut m)
}

fn det_scalar(field: &Fq, m: &mut [Vec<FqElem>]) -> FqElem {
    let n = m.len();
    let mut det = field.one();
    for k in 0..n {
        let pivot_row = (k..n).find(|&i| !field.is_zero(m[i][k]));
        let pr = match pivot_row {
            Some(p) => p,
            None => return field.zero(),
        };
        if pr != k {
            m.swap(pr, k);
            det = field.neg(det);
        }
        let pv = m[k][k];
        det = field.mul(det, pv);
        let inv = field.inv(pv);
        for i in k + 1..n {
            let factor = field.mul(m[i][k], inv);
            if field.is_zero(factor) {
                continue;
            }
            for j in k..n {
                let t = field.mul(factor, m[k][j]);
                m[i][j] = field.sub(m[i][j], t);
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::fq_make;

    fn f3() -> Fq {
        fq_make(3, 1, None).unwrap()
    }

    #[test]
    fn theta_action_examples() {
        let f = f3();
        let c = DrinfeldModule::carlitz(&f);
        let th = UniPoly::theta_pow(&f, 1);
        // (C, theta, ZPower(1)) -> [[z]]
        let m = theta_action_matrix(&c, &th, &DeformationKind::ZPower(1)).unwrap();
        assert_eq!(m.dim(), 1);
        let zv = m.vars().clone();
        assert_eq!(m.at(0, 0), &MultiPoly::var_pow(&f, &zv, "z", 1).unwrap());
        // (C, theta, Plain) -> [[1]]
        let mp = theta_action_matrix(&c, &th, &DeformationKind::Plain).unwrap();
        assert!(mp.at(0, 0).is_one());
        // (C, theta^2 + 1 over F_3, ZPower(1)) -> [[z, -1], [1, -z]]
        let f2 = UniPoly::from_ints(&f, &[1, 0, 1]);
        let m2 = theta_action_matrix(&c, &f2, &DeformationKind::ZPower(1)).unwrap();
        let zv2 = m2.vars().clone();
        let z = MultiPoly::var_pow(&f, &zv2, "z", 1).unwrap();
        let one = MultiPoly::one(&f, &zv2);
        assert_eq!(m2.at(0, 0), &z);
        assert_eq!(m2.at(0, 1), &one.neg());
        assert_eq!(m2.at(1, 0), &one);
        assert_eq!(m2.at(1, 1), &z.neg());
    }

    #[test]
    fn fitting_examples() {
        let f = f3();
        let c = DrinfeldModule::carlitz(&f);
        let th = UniPoly::theta_pow(&f, 1);
        // (C, theta, ZPower(1)) -> theta - z
        let fit = fitting_ideal(&c, &th, &DeformationKind::ZPower(1)).unwrap();
        let v = fit.vars().clone();
        let theta = MultiPoly::var_pow(&f, &v, "theta", 1).unwrap();
        let z = MultiPoly::var_pow(&f, &v, "z", 1).unwrap();
        assert_eq!(fit, theta.sub(&z));
        // (C, theta, Plain) -> theta - 1
        let fitp = fitting_ideal(&c, &th, &DeformationKind::Plain).unwrap();
        let vp = fitp.vars().clone();
        let thetap = MultiPoly::var_pow(&f, &vp, "theta", 1).unwrap();
        assert_eq!(fitp, thetap.sub(&MultiPoly::one(&f, &vp)));
        // (C, theta, Canonical(1)) -> theta - z1
        let fitc = fitting_ideal(&c, &th, &DeformationKind::Canonical(1)).unwrap();
        let vc = fitc.vars().clone();
        let thetac = MultiPoly::var_pow(&f, &vc, "theta", 1).unwrap();
        let z1 = MultiPoly::var_pow(&f, &vc, "z1", 1).unwrap();
        assert_eq!(fitc, thetac.sub(&z1));
        // rank 2, phi = theta + tau^2: deformed fitting at theta is theta - z^2
        let phi = DrinfeldModule::from_ints(&f, &[&[0], &[1]]);
        let fit2 = fitting_ideal(&phi, &th, &DeformationKind::ZPower(1)).unwrap();
        let v2 = fit2.vars().clone();
        let theta2 = MultiPoly::var_pow(&f, &v2, "theta", 1).unwrap();
        let z2 = MultiPoly::var_pow(&f, &v2, "z", 2).unwrap();
        assert_eq!(fit2, theta2.sub(&z2));
    }

    #[test]
    fn frobenius_data_examples() {
        let f = f3();
        let th = UniPoly::theta_pow(&f, 1);
        // Carlitz at any prime: r0 = 1, c(f) = -1, D_f(x) = 1 - x
        let c = DrinfeldModule::carlitz(&f);
        let data = frobenius_data(&c, &th).unwrap();
        assert_eq!(data.r0, 1);
        assert_eq!(data.cf, Some(f.from_int(-1)));
        assert_eq!(data.df.len(), 2);
        assert_eq!(data.df[1], UniPoly::from_ints(&f, &[-1]));
        // theta + tau^2 at theta: r0 = 2, c(f) = -1, e_1 = 0, D_f = 1 - theta x^2
        let phi = DrinfeldModule::from_ints(&f, &[&[0], &[1]]);
        let d2 = frobenius_data(&phi, &th).unwrap();
        assert_eq!(d2.r0, 2);
        assert_eq!(d2.cf, Some(f.from_int(-1)));
        assert!(d2.e[0].is_zero());
        assert_eq!(d2.df[2], th.neg());
        // r_0 = 0 instance: phi = theta + theta tau at f = theta
        let phi0 = DrinfeldModule::from_ints(&f, &[&[0, 1]]);
        let d0 = frobenius_data(&phi0, &th).unwrap();
        assert_eq!(d0.r0, 0);
        assert_eq!(d0.cf, None);
        assert_eq!(d0.gekeler_value(), th);
        assert_eq!(
            fitting_ideal(&phi0, &th, &DeformationKind::ZPower(1))
                .unwrap()
                .to_unipoly()
                .unwrap(),
            th
        );
    }

    #[test]
    fn mu_examples() {
        let f = f3();
        let th = UniPoly::theta_pow(&f, 1);
        // Carlitz: mu identically 1
        let c = DrinfeldModule::carlitz(&f);
        let data = frobenius_data(&c, &th).unwrap();
        for i in 0..6 {
            assert!(mu_prime_power(&data, i).is_one());
        }
        // theta + tau^2 at f = theta: invert 1 - theta x^2
        let phi = DrinfeldModule::from_ints(&f, &[&[0], &[1]]);
        let d2 = frobenius_data(&phi, &th).unwrap();
        assert!(mu_prime_power(&d2, 1).is_zero());
        assert_eq!(mu_prime_power(&d2, 2), th);
        assert_eq!(mu_prime_power(&d2, 4), th.mul(&th));
        // table: multiplicativity kills theta*(theta+1)
        let table = mu_table(&phi, 2).unwrap();
        let a = th.mul(&UniPoly::from_ints(&f, &[1, 1]));
        assert!(table.get(&a).unwrap().is_zero());
        assert!(table.get(&UniPoly::one(&f)).unwrap().is_one());
    }

    #[test]
    fn dense_fitting_matches_general_route() {
        let f = f3();
        let modules = [
            DrinfeldModule::carlitz(&f),
            DrinfeldModule::from_ints(&f, &[&[0], &[1]]),
            DrinfeldModule::from_ints(&f, &[&[1, 1], &[0, 1], &[1]]),
        ];
        for phi in &modules {
            for fpoly in crate::algebra::unipoly::irreducibles_up_to(&f, 2) {
                let dense = fitting_zdeform_dense(phi, &fpoly, None);
                let general = fitting_ideal(phi, &fpoly, &DeformationKind::ZPower(1)).unwrap();
                let by_z = general.coeffs_wrt("z").unwrap();
                let mut expected = BTreeMap::new();
                for (ze, mp) in by_z {
                    expected.insert(ze, mp.to_unipoly().unwrap());
                }
                assert_eq!(dense, expected, "phi rank {} at {}", phi.rank(), fpoly);
            }
        }
    }
}
