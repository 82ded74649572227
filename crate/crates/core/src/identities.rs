//! Machine-checkable identity suite: log-algebraicity coefficients W_k and
//! Z_k, degreewise special values, power sums, vanishing bounds, and
//! Fitting-ideal cross-checks. Every check returns a report with a
//! re-checkable witness on failure.

use std::collections::BTreeMap;

use crate::algebra::field::Fq;
use crate::algebra::fracpoly::FracMultiPoly;
use crate::algebra::multipoly::{MultiPoly, Vars};
use crate::algebra::ratfunc::RatFunc;
use crate::algebra::unipoly::UniPoly;
use crate::drinfeld::{
    carlitz_substitute, ell_product, exp_coeffs, log_coeffs, log_radius,
    phi_of_a, phi_of_a_plain, DeformationKind, DrinfeldModule,
};
use crate::error::{Error, Result};
use crate::frobenius::{fitting_ideal, frobenius_data, mu_table, MuTable};
use crate::lvalues::dirichlet_block;

#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub index: String,
    pub difference: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub pass: bool,
    pub witness: Option<Witness>,
}

impl CheckReport {
    fn passing(name: &str, params: BTreeMap<String, String>) -> Self {
        CheckReport {
            name: name.into(),
            params,
            pass: true,
            witness: None,
        }
    }

    fn failing(name: &str, params: BTreeMap<String, String>, index: String, diff: String) -> Self {
        CheckReport {
            name: name.into(),
            params,
            pass: false,
            witness: Some(Witness {
                index,
                difference: diff,
            }),
        }
    }
}

fn params_of(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn phi_describe(phi: &DrinfeldModule) -> String {
    let upper: Vec<String> = phi.coeffs()[1..].iter().map(|c| c.display()).collect();
    format!("[{}]", upper.join(", "))
}

/// floor(r(n + beta)/(q - 1)): blocks and coefficients vanish above it.
pub fn vanishing_bound(phi: &DrinfeldModule, n: usize) -> usize {
    let r = phi.rank() as u64;
    let beta = phi.beta();
    let q = phi.field().q();
    (r * (n as u64 + beta) / (q - 1)) as usize
}

/// W_k: t^k-coefficients of exp applied to the t-graded L-value,
/// W_k = sum_{i+j=k} alpha_i l_i(z_1)...l_i(z_n) tau^i(c_j), where c_j is the
/// exact degree-j Dirichlet block. Computed over K[z]; integrality attached.
#[derive(Debug, Clone)]
pub struct GradedCoeff {
    pub value: FracMultiPoly,
    pub integral: Option<MultiPoly>,
}

pub fn w_coefficients(mu: &MuTable, n: usize, k_max: usize) -> Result<Vec<GradedCoeff>> {
    let phi = mu.phi().clone();
    let field = phi.field().clone();
    let vars = Vars::theta_z(n);
    let znames: Vec<String> = (1..=n).map(|i| format!("z{}", i)).collect();
    if mu.max_degree() < k_max {
        return Err(Error::TableTooSmall {
            needed: k_max,
            available: mu.max_degree(),
        });
    }
    let alphas = exp_coeffs(&phi, k_max);
    let blocks: Vec<FracMultiPoly> = (0..=k_max)
        .map(|j| dirichlet_block(mu, j, n))
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let mut acc = FracMultiPoly::zero(&field, &vars);
        for i in 0..=k {
            let alpha = alphas.entry(i);
            if alpha.is_zero() {
                continue;
            }
            let lp = ell_product(&field, i, &vars, &znames)?;
            let term = blocks[k - i]
                .twist_theta(i as u32)
                .mul_poly(&lp)
                .mul_ratfunc(alpha);
            acc = acc.add(&term);
        }
        let reduced = acc.reduce();
        let integral = reduced.to_integral();
        out.push(GradedCoeff {
            value: reduced,
            integral,
        });
    }
    Ok(out)
}

/// S_k = sum_{a in A_{+,k}} mu(a) C_a(X_1)...C_a(X_n) / a over K[X-vars].
fn s_coefficient(mu: &MuTable, k: usize, n: usize, budget: usize) -> Result<FracMultiPoly> {
    let phi = mu.phi().clone();
    let field = phi.field().clone();
    let mut names = vec!["theta".to_string()];
    for j in 1..=n {
        names.push(format!("X{}", j));
    }
    let vars = Vars::from_owned(names);
    if k == 0 {
        let mut prod = MultiPoly::one(&field, &vars);
        for j in 1..=n {
            prod = prod.mul(&MultiPoly::var_pow(&field, &vars, &format!("X{}", j), 1)?);
        }
        return Ok(FracMultiPoly::from_poly(prod));
    }
    let entries = mu.of_degree(k)?;
    let polys: Vec<&UniPoly> = entries.iter().map(|(a, _)| *a).collect();
    let m = polys.len();
    let mut prefix = Vec::with_capacity(m + 1);
    prefix.push(UniPoly::one(&field));
    for a in &polys {
        let last = prefix.last().unwrap().mul(a);
        prefix.push(last);
    }
    let mut suffix = vec![UniPoly::one(&field); m + 1];
    for i in (0..m).rev() {
        suffix[i] = suffix[i + 1].mul(polys[i]);
    }
    let carlitz = DrinfeldModule::carlitz(&field);
    let q = field.q();
    let mut num = MultiPoly::zero(&field, &vars);
    for (i, (a, mu_a)) in entries.iter().enumerate() {
        if mu_a.is_zero() {
            continue;
        }
        let cof = prefix[i].mul(&suffix[i + 1]);
        let mut term = MultiPoly::from_unipoly(&mu_a.mul(&cof), &vars);
        let skew = phi_of_a_plain(&carlitz, a);
        for j in 1..=n {
            let xname = format!("X{}", j);
            let mut ca = MultiPoly::zero(&field, &vars);
            for (jj, c) in skew.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let e = q.pow(jj as u32);
                let x = MultiPoly::var_pow(&field, &vars, &xname, u32::try_from(e).unwrap())?;
                ca = ca.add(&x.mul(&MultiPoly::from_unipoly(c, &vars)));
            }
            term = term.mul(&ca);
            if term.num_terms() > budget {
                return Err(Error::TermBudgetExceeded {
                    terms: term.num_terms(),
                    budget,
                });
            }
        }
        num = num.add(&term);
        if num.num_terms() > budget {
            return Err(Error::TermBudgetExceeded {
                terms: num.num_terms(),
                budget,
            });
        }
    }
    Ok(FracMultiPoly::new(num, prefix[m].clone()).reduce())
}

/// Z_k = sum_{i=0}^k (S_{k-i})^{q^i} alpha_i: the w^{q^k}-coefficients of the
/// log-algebraicity series, over K[X-vars], with integrality verdicts.
pub fn z_coefficients(
    mu: &MuTable,
    n: usize,
    k_max: usize,
    budget: usize,
) -> Result<Vec<GradedCoeff>> {
    let phi = mu.phi().clone();
    let field = phi.field().clone();
    if mu.max_degree() < k_max {
        return Err(Error::TableTooSmall {
            needed: k_max,
            available: mu.max_degree(),
        });
    }
    let alphas = exp_coeffs(&phi, k_max);
    let s: Vec<FracMultiPoly> = (0..=k_max)
        .map(|k| s_coefficient(mu, k, n, budget))
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let mut acc = FracMultiPoly::zero(&field, s[0].vars());
        for i in 0..=k {
            let alpha = alphas.entry(i);
            if alpha.is_zero() {
                continue;
            }
            let term = s[k - i].frobenius_pow(i as u32).mul_ratfunc(alpha);
            acc = acc.add(&term);
            if acc.num().num_terms() > budget {
                return Err(Error::TermBudgetExceeded {
                    terms: acc.num().num_terms(),
                    budget,
                });
            }
        }
        let reduced = acc.reduce();
        let integral = reduced.to_integral();
        out.push(GradedCoeff {
            value: reduced,
            integral,
        });
    }
    Ok(out)
}

/// Z_k integral for k <= bound + slack and zero strictly above the bound
/// (and the same for W_k, whose images under the Carlitz substitution must
/// reproduce Z_k).
pub fn check_logalg_vanishing(
    phi: &DrinfeldModule,
    n: usize,
    slack: usize,
    budget: usize,
) -> Result<CheckReport> {
    let bound = vanishing_bound(phi, n);
    let k_max = bound + slack;
    let mu = mu_table(phi, k_max)?;
    let params = params_of(&[
        ("phi", phi_describe(phi)),
        ("q", phi.field().q().to_string()),
        ("n", n.to_string()),
        ("bound", bound.to_string()),
        ("slack", slack.to_string()),
    ]);
    let name = "logalg-vanishing";
    let ws = w_coefficients(&mu, n, k_max)?;
    let zs = z_coefficients(&mu, n, k_max, budget)?;
    for k in 0..=k_max {
        if zs[k].integral.is_none() {
            return Ok(CheckReport::failing(
                name,
                params,
                format!("Z_{}", k),
                format!("not integral: {}", zs[k].value),
            ));
        }
        if ws[k].integral.is_none() {
            return Ok(CheckReport::failing(
                name,
                params,
                format!("W_{}", k),
                format!("not integral: {}", ws[k].value),
            ));
        }
        if k > bound {
            if !zs[k].value.is_zero() {
                return Ok(CheckReport::failing(
                    name,
                    params,
                    format!("Z_{}", k),
                    format!("expected 0, got {}", zs[k].value),
                ));
            }
            if !ws[k].value.is_zero() {
                return Ok(CheckReport::failing(
                    name,
                    params,
                    format!("W_{}", k),
                    format!("expected 0, got {}", ws[k].value),
                ));
            }
        }
        // Z_k is the Carlitz-substitution image of W_k
        let w_int = ws[k].integral.as_ref().unwrap();
        let image = carlitz_substitute(w_int, n)?;
        let z_int = zs[k].integral.as_ref().unwrap();
        let z_in_image_ctx = if z_int.is_zero() {
            MultiPoly::zero(phi.field(), image.vars())
        } else {
            z_int.embed(image.vars())
        };
        if image != z_in_image_ctx {
            return Ok(CheckReport::failing(
                name,
                params,
                format!("k={}", k),
                format!("substitution image {} != Z_k {}", image, z_int),
            ));
        }
    }
    Ok(CheckReport::passing(name, params))
}

/// Degreewise identity: sum_{a in A_{+,i}} mu(a) a(z_1)...a(z_n)/a =
/// gamma_i l_i(z_1)...l_i(z_n), valid when n <= q/r - (1 + 2 beta).
pub fn check_degreewise_identity(
    phi: &DrinfeldModule,
    n: usize,
    i_max: usize,
) -> Result<CheckReport> {
    let field = phi.field().clone();
    let q = field.q();
    let r = phi.rank() as u64;
    let beta = phi.beta();
    if r * (n as u64 + 1 + 2 * beta) > q {
        return Err(Error::NotApplicable(format!(
            "need n <= q/r - (1 + 2 beta): n = {}, q = {}, r = {}, beta = {}",
            n, q, r, beta
        )));
    }
    let params = params_of(&[
        ("phi", phi_describe(phi)),
        ("q", q.to_string()),
        ("n", n.to_string()),
        ("i_max", i_max.to_string()),
    ]);
    let name = "degreewise-identity";
    let mu = mu_table(phi, i_max)?;
    let gammas = log_coeffs(phi, i_max);
    let vars = Vars::theta_z(n);
    let znames: Vec<String> = (1..=n).map(|i| format!("z{}", i)).collect();
    for i in 0..=i_max {
        let lhs = dirichlet_block(&mu, i, n)?;
        let lp = ell_product(&field, i, &vars, &znames)?;
        let rhs = FracMultiPoly::from_ratfunc(gammas.entry(i), &vars).mul_poly(&lp);
        if !lhs.eq(&rhs) {
            return Ok(CheckReport::failing(
                name,
                params,
                format!("i={}", i),
                format!("lhs {} != rhs {}", lhs, rhs),
            ));
        }
    }
    Ok(CheckReport::passing(name, params))
}

/// Power sums S_i(q^k - 1) (Carlitz) and their mu-twist: brute-force sums
/// against gamma_i (theta^{q^k} - theta)...(theta^{q^k} - theta^{q^{i-1}}),
/// with the zero branch for k < i.
pub fn check_powersum(
    field: &Fq,
    i_max: usize,
    k_max: usize,
    phi: Option<&DrinfeldModule>,
) -> Result<CheckReport> {
    let q = field.q();
    let (module, twisted) = match phi {
        Some(m) => (m.clone(), true),
        None => (DrinfeldModule::carlitz(field), false),
    };
    if twisted {
        // beta <= q/(2r) - 1
        let r = module.rank() as u64;
        let beta = module.beta();
        if 2 * r * (beta + 1) > q {
            return Err(Error::NotApplicable(format!(
                "need beta <= q/(2r) - 1: beta = {}, q = {}, r = {}",
                beta, q, r
            )));
        }
    }
    let params = params_of(&[
        ("phi", phi_describe(&module)),
        ("q", q.to_string()),
        ("i_max", i_max.to_string()),
        ("k_max", k_max.to_string()),
        ("twisted", twisted.to_string()),
    ]);
    let name = if twisted {
        "powersum-twisted"
    } else {
        "powersum"
    };
    let mu = mu_table(&module, i_max)?;
    let gammas = log_coeffs(&module, i_max);
    for i in 0..=i_max {
        for k in 0..=k_max {
            // brute force: sum over A_{+,i} of mu(a) a^{q^k - 1}
            let mut brute = UniPoly::zero(field);
            for (a, mu_a) in mu.of_degree(i)? {
                if mu_a.is_zero() {
                    continue;
                }
                let apow = a.twist(k as u32).div_exact(a);
                brute = brute.add(&mu_a.mul(&apow));
            }
            let expected: UniPoly = if k < i {
                UniPoly::zero(field)
            } else {
                // gamma_i prod_{j<i} (theta^{q^k} - theta^{q^j})
                let mut prod = RatFunc::one(field);
                for j in 0..i {
                    let e_k = q.pow(k as u32) as usize;
                    let e_j = q.pow(j as u32) as usize;
                    let fac = UniPoly::theta_pow(field, e_k).sub(&UniPoly::theta_pow(field, e_j));
                    prod = prod.mul_poly(&fac);
                }
                let full = prod.mul(gammas.entry(i));
                if !full.is_integral() {
                    return Ok(CheckReport::failing(
                        name,
                        params,
                        format!("i={},k={}", i, k),
                        format!("formula value is not integral: {}", full),
                    ));
                }
                full.num().clone()
            };
            if brute != expected {
                return Ok(CheckReport::failing(
                    name,
                    params,
                    format!("i={},k={}", i, k),
                    format!("brute {} != formula {}", brute, expected),
                ));
            }
        }
    }
    Ok(CheckReport::passing(name, params))
}

/// Fitting-ideal cross-checks at one prime: the plain value against the
/// z = 1 slice and the Frobenius-data reconstruction, the canonical and
/// t-graded shapes, the z = 0 slice, and the skew-coefficient congruences of
/// the deformed image of f.
pub fn check_fitting_consistency(
    phi: &DrinfeldModule,
    f: &UniPoly,
    n_max: usize,
) -> Result<CheckReport> {
    let field = phi.field().clone();
    let params = params_of(&[
        ("phi", phi_describe(phi)),
        ("q", field.q().to_string()),
        ("f", f.display()),
        ("n_max", n_max.to_string()),
    ]);
    let name = "fitting-consistency";
    let d = f.degree().unwrap();
    let data = frobenius_data(phi, f)?;
    let zfit = fitting_ideal(phi, f, &DeformationKind::ZPower(1))?;
    // (i) plain = z-deformed at z = 1
    let plain = fitting_ideal(phi, f, &DeformationKind::Plain)?;
    let z_one = zfit
        .substitute_const("z", field.one())?
        .restrict(plain.vars());
    if z_one != plain {
        return Ok(CheckReport::failing(
            name,
            params,
            "z=1 slice".into(),
            format!("{} != {}", z_one, plain),
        ));
    }
    // (ii) plain = c(f) P(1) rebuilt from Frobenius data
    let gek = MultiPoly::from_unipoly(&data.gekeler_value(), plain.vars());
    if gek != plain {
        return Ok(CheckReport::failing(
            name,
            params,
            "frobenius-route".into(),
            format!("{} != {}", gek, plain),
        ));
    }
    // (v) z = 0 slice is f
    let z_zero = zfit.substitute_const("z", field.zero())?;
    if z_zero.to_unipoly().ok().as_ref() != Some(f) {
        return Ok(CheckReport::failing(
            name,
            params,
            "z=0 slice".into(),
            format!("{} != {}", z_zero, f),
        ));
    }
    // (iii)/(iv): canonical and t-graded shapes from the e_i
    for n in 1..=n_max {
        for with_t in [false, true] {
            let kind = if with_t {
                DeformationKind::CanonicalT(n)
            } else {
                DeformationKind::Canonical(n)
            };
            let fit = fitting_ideal(phi, f, &kind)?;
            let vars = fit.vars().clone();
            let mut expected = MultiPoly::from_unipoly(f, &vars);
            for (i, e_i) in data.e.iter().enumerate() {
                if e_i.is_zero() {
                    continue;
                }
                let mut term = MultiPoly::from_unipoly(e_i, &vars);
                for zi in 1..=n {
                    let fz = MultiPoly::unipoly_in_var(f, &vars, &format!("z{}", zi))?;
                    term = term.mul(&fz.pow(i as u64 + 1));
                }
                if with_t {
                    let te = (i + 1) * d;
                    term = term.mul(&MultiPoly::var_pow(
                        &field,
                        &vars,
                        "t",
                        u32::try_from(te).unwrap(),
                    )?);
                }
                expected = expected.add(&term);
            }
            if fit != expected {
                return Ok(CheckReport::failing(
                    name,
                    params,
                    format!("{:?}", kind),
                    format!("{} != {}", fit, expected),
                ));
            }
        }
    }
    // (vi) congruences of the deformed skew coefficients of f
    let skew = phi_of_a(phi, f, &DeformationKind::ZPower(1));
    let r0 = data.r0;
    if r0 == 0 {
        for (j, c) in skew.coeffs().iter().enumerate() {
            if !c.reduce_theta_mod(f).is_zero() {
                return Ok(CheckReport::failing(
                    name,
                    params,
                    format!("coefficient {}", j),
                    "nonzero mod f with r0 = 0".into(),
                ));
            }
        }
    } else {
        let zvars = skew.coeffs()[0].vars().clone();
        // deformed images of -e_i
        let neg_e_skews: Vec<_> = data
            .e
            .iter()
            .map(|e_i| phi_of_a(phi, &e_i.neg(), &DeformationKind::ZPower(1)))
            .collect();
        for j in 0..=r0 * d {
            let c_j = skew
                .coeff(j)
                .cloned()
                .unwrap_or_else(|| MultiPoly::zero(&field, &zvars));
            let expected = if j < d {
                MultiPoly::zero(&field, &zvars)
            } else {
                let mut acc = MultiPoly::zero(&field, &zvars);
                for i in 1..=(j / d).min(r0) {
                    let part = neg_e_skews[i - 1]
                        .coeff(j - i * d)
                        .cloned()
                        .unwrap_or_else(|| MultiPoly::zero(&field, &zvars));
                    let zid =
                        MultiPoly::var_pow(&field, &zvars, "z", u32::try_from(i * d).unwrap())?;
                    acc = acc.add(&part.mul(&zid));
                }
                acc
            };
            if !c_j.sub(&expected).reduce_theta_mod(f).is_zero() {
                return Ok(CheckReport::failing(
                    name,
                    params,
                    format!("coefficient {}", j),
                    "congruence failed".into(),
                ));
            }
        }
    }
    Ok(CheckReport::passing(name, params))
}

/// P = sum_k W_k (the t = 1 specialization of the graded exponential image),
/// summed to the vanishing bound plus slack; integrality verdict attached.
/// In the regime n <= q/r - (1 + 2 beta), the radius guard is re-verified as
/// an exact integer inequality and the value is asserted to be 1.
pub fn p_polynomial(
    phi: &DrinfeldModule,
    n: usize,
    slack: usize,
) -> Result<(FracMultiPoly, CheckReport)> {
    let field = phi.field().clone();
    let q = field.q();
    let r = phi.rank() as u64;
    let beta = phi.beta();
    let bound = vanishing_bound(phi, n);
    let k_max = bound + slack;
    let mu = mu_table(phi, k_max)?;
    let params = params_of(&[
        ("phi", phi_describe(phi)),
        ("q", q.to_string()),
        ("n", n.to_string()),
        ("bound", bound.to_string()),
        ("slack", slack.to_string()),
    ]);
    let name = "p-polynomial";
    let ws = w_coefficients(&mu, n, k_max)?;
    let mut acc = FracMultiPoly::zero(&field, ws[0].value.vars());
    for w in &ws {
        acc = acc.add(&w.value);
    }
    let total = acc.reduce();
    // vanishing above the bound
    for (k, w) in ws.iter().enumerate() {
        if k > bound && !w.value.is_zero() {
            return Ok((
                total.clone(),
                CheckReport::failing(
                    name,
                    params,
                    format!("W_{}", k),
                    format!("expected 0, got {}", w.value),
                ),
            ));
        }
    }
    let integral = total.to_integral();
    if integral.is_none() {
        return Ok((
            total.clone(),
            CheckReport::failing(
                name,
                params,
                "integrality".into(),
                format!("denominator {}", total.den()),
            ),
        ));
    }
    // regime where the value must be 1
    if r * (n as u64 + 1 + 2 * beta) <= q {
        // radius guard: deg phi_{i} + n(1 + q + ... + q^{i-1}) < q^i exactly
        let (i_phi, expo) = log_radius(phi, n)?;
        let qi = q.pow(i_phi as u32) as i64;
        let geo: i64 = (0..i_phi).map(|j| q.pow(j as u32) as i64).sum();
        let lhs = phi.coeff(i_phi).deg_i() + n as i64 * geo;
        let radius_ok = lhs < qi && expo > num::rational::Ratio::new(0, 1);
        if !radius_ok {
            return Ok((
                total.clone(),
                CheckReport::failing(
                    name,
                    params,
                    "radius-guard".into(),
                    format!("deg + n*geo = {} vs q^i = {}", lhs, qi),
                ),
            ));
        }
        let one = FracMultiPoly::one(&field, total.vars());
        if !total.eq(&one) {
            return Ok((
                total.clone(),
                CheckReport::failing(
                    name,
                    params,
                    "value".into(),
                    format!("expected 1, got {}", total),
                ),
            ));
        }
    }
    Ok((total, CheckReport::passing(name, params)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::fq_make;

    fn f3() -> Fq {
        fq_make(3, 1, None).unwrap()
    }

    #[test]
    fn w_examples() {
        let f = f3();
        let c = DrinfeldModule::carlitz(&f);
        let mu = mu_table(&c, 4).unwrap();
        let ws = w_coefficients(&mu, 1, 3).unwrap();
        // W_0 = 1 always
        assert!(ws[0]
            .integral
            .as_ref()
            .map_or(false, |p| p.is_one()));
        // Carlitz q=3, n=1: W_1 = 0
        assert!(ws[1].value.is_zero());
    }

    #[test]
    fn w_vanishes_for_small_q_carlitz() {
        let f2 = fq_make(2, 1, None).unwrap();
        let c = DrinfeldModule::carlitz(&f2);
        let mu = mu_table(&c, 4).unwrap();
        let ws = w_coefficients(&mu, 1, 4).unwrap();
        for k in 1..=4 {
            assert!(ws[k].value.is_zero(), "W_{} should vanish", k);
        }
    }

    #[test]
    fn z_examples() {
        let f = f3();
        let c = DrinfeldModule::carlitz(&f);
        let mu = mu_table(&c, 3).unwrap();
        let zs = z_coefficients(&mu, 1, 2, 1_000_000).unwrap();
        // Z_0 = X_1
        let z0 = zs[0].integral.as_ref().unwrap();
        let xv = z0.vars().clone();
        assert_eq!(z0, &MultiPoly::var_pow(&f, &xv, "X1", 1).unwrap());
        // Carlitz q=3, n=1: Z_1 = 0
        assert!(zs[1].value.is_zero());
    }

    #[test]
    fn degreewise_holds_for_carlitz_q3() {
        let f = f3();
        let c = DrinfeldModule::carlitz(&f);
        let report = check_degreewise_identity(&c, 1, 3).unwrap();
        assert!(report.pass, "witness: {:?}", report.witness);
    }

    #[test]
    fn degreewise_rejects_out_of_regime() {
        let f = f3();
        // rank 2 over F_3: n = 1 needs r(n + 1) = 4 <= 3, fails
        let phi = DrinfeldModule::from_ints(&f, &[&[0], &[1]]);
        assert!(matches!(
            check_degreewise_identity(&phi, 1, 2),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn powersum_carlitz_q3() {
        let f = f3();
        let report = check_powersum(&f, 2, 3, None).unwrap();
        assert!(report.pass, "witness: {:?}", report.witness);
    }

    #[test]
    fn fitting_consistency_examples() {
        let f = f3();
        let th = UniPoly::theta_pow(&f, 1);
        let c = DrinfeldModule::carlitz(&f);
        assert!(check_fitting_consistency(&c, &th, 2).unwrap().pass);
        let phi = DrinfeldModule::from_ints(&f, &[&[0], &[1]]);
        assert!(check_fitting_consistency(&phi, &th, 2).unwrap().pass);
        // r0 = 0 instance
        let phi0 = DrinfeldModule::from_ints(&f, &[&[0, 1]]);
        assert!(check_fitting_consistency(&phi0, &th, 2).unwrap().pass);
    }

    #[test]
    fn p_polynomial_examples() {
        let f = f3();
        let c = DrinfeldModule::carlitz(&f);
        // Carlitz q=3, n=1 -> 1
        let (value, report) = p_polynomial(&c, 1, 2).unwrap();
        assert!(report.pass, "witness: {:?}", report.witness);
        assert!(value.to_integral().unwrap().is_one());
        // Carlitz, n=0 -> 1
        let (v0, r0) = p_polynomial(&c, 0, 2).unwrap();
        assert!(r0.pass);
        assert!(v0.to_integral().unwrap().is_one());
    }

    #[test]
    fn logalg_vanishing_carlitz_q3() {
        let f = f3();
        let c = DrinfeldModule::carlitz(&f);
        let report = check_logalg_vanishing(&c, 1, 2, 1_000_000).unwrap();
        assert!(report.pass, "witness: {:?}", report.witness);
    }
}
