//! Taelman L-values and their relatives: twisted power sums H_{k,n}, exact
//! degree blocks, Dirichlet/Euler evaluation at integer s, bracket powers
//! with Lucas binomials, and Goss-plane evaluation with certified tails.
//!
//! Every tail bound is carried as an exact rational exponent of q; no bound
//! arithmetic is done in floating point.

use num::bigint::BigInt;
use num::rational::{BigRational, Ratio};
use num::{One, ToPrimitive};

use crate::algebra::fracpoly::FracMultiPoly;
use crate::algebra::multipoly::{MultiPoly, Vars};
use crate::algebra::tate::{laurent_invert_monic, TateSeries};
use crate::algebra::unipoly::{irreducibles_up_to, UniPoly};
use crate::drinfeld::DrinfeldModule;
use crate::error::{Error, Result};
use crate::frobenius::{frobenius_data, MuTable};
use crate::util::par_map;

/// Omitted-mass bound attached to a truncated evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum Tail {
    /// every omitted term is identically zero
    Zero,
    /// the omitted mass has norm at most q^{exponent}
    LogQ(BigRational),
}

#[derive(Debug, Clone)]
pub struct LValueResult {
    pub series: TateSeries,
    /// largest degree block summed
    pub terms_used: usize,
    pub tail: Tail,
}

/// Point of the Goss plane: invertible x in the Laurent model and a p-adic
/// exponent given by a base-p digit buffer (digits beyond the buffer are 0).
#[derive(Debug, Clone)]
pub struct GossPoint {
    pub x: TateSeries,
    pub y_digits: Vec<u8>,
    /// starting prefix length, counted in q-adic digit groups
    pub m: usize,
}

// ---------------------------------------------------------------- binomials

/// binom(y, i) mod p by Lucas' formula, with y given by base-p digits.
pub fn lucas_binomial(p: u64, y_digits: &[u8], mut i: u64) -> u64 {
    let mut acc = 1u64;
    let mut pos = 0usize;
    while i > 0 || pos < 1 {
        let id = i % p;
        let yd = y_digits.get(pos).copied().unwrap_or(0) as u64;
        acc = (acc * binom_mod_p(yd, id, p)) % p;
        if acc == 0 {
            return 0;
        }
        i /= p;
        pos += 1;
        if i == 0 && pos >= y_digits.len().max(1) {
            break;
        }
    }
    acc
}

/// binom(a, b) mod p for digits a, b < p.
fn binom_mod_p(a: u64, b: u64, p: u64) -> u64 {
    if b > a {
        return 0;
    }
    let mut num = 1u64;
    let mut den = 1u64;
    for k in 1..=b {
        num = (num * ((a - b + k) % p)) % p;
        den = (den * (k % p)) % p;
    }
    // p prime: invert den by Fermat
    let mut inv = 1u64;
    let mut base = den % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            inv = (inv * base) % p;
        }
        base = (base * base) % p;
        e >>= 1;
    }
    (num * inv) % p
}

/// Base-p digits of a (possibly negative) integer in Z_p, to the given length.
pub fn padic_digits(p: u64, y: i64, len: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(len);
    let mut carry_val = y;
    for _ in 0..len {
        let d = carry_val.rem_euclid(p as i64);
        out.push(d as u8);
        carry_val = (carry_val - d) / p as i64;
    }
    out
}

// ------------------------------------------------------------- H and blocks

/// H_{k,n} = sum over monic a of degree k of mu(a) a(z_1)...a(z_n), exact in
/// A[z_1..z_n].
pub fn h_sum(mu: &MuTable, k: usize, n: usize) -> Result<MultiPoly> {
    let names: Vec<String> = (1..=n).map(|i| format!("z{}", i)).collect();
    h_sum_named(mu, k, &names)
}

/// Same, with explicit z-variable names (used by nonpositive special values,
/// where some slots are later evaluated at theta powers).
pub fn h_sum_named(mu: &MuTable, k: usize, znames: &[String]) -> Result<MultiPoly> {
    let field = mu.phi().field().clone();
    let mut all_names = vec!["theta".to_string()];
    all_names.extend(znames.iter().cloned());
    let vars = Vars::from_owned(all_names);
    let mut acc = MultiPoly::zero(&field, &vars);
    for (a, mu_a) in mu.of_degree(k)? {
        if mu_a.is_zero() {
            continue;
        }
        let mut term = MultiPoly::from_unipoly(mu_a, &vars);
        for name in znames {
            term = term.mul(&MultiPoly::unipoly_in_var(a, &vars, name)?);
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Exact degree-j block of the Dirichlet series at s = 1:
/// sum_{a in A_{+,j}} mu(a) a(z_1)...a(z_n) / a, over a single common
/// denominator, reduced.
pub fn dirichlet_block(mu: &MuTable, j: usize, n: usize) -> Result<FracMultiPoly> {
    let field = mu.phi().field().clone();
    let vars = Vars::theta_z(n);
    if j == 0 {
        return Ok(FracMultiPoly::one(&field, &vars));
    }
    let entries = mu.of_degree(j)?;
    let polys: Vec<&UniPoly> = entries.iter().map(|(a, _)| *a).collect();
    // prefix/suffix cofactor products: cof_i = prod_{k != i} a_k
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
    let mut num = MultiPoly::zero(&field, &vars);
    for (i, (a, mu_a)) in entries.iter().enumerate() {
        if mu_a.is_zero() {
            continue;
        }
        let cof = prefix[i].mul(&suffix[i + 1]);
        let mut term = MultiPoly::from_unipoly(&mu_a.mul(&cof), &vars);
        for zi in 1..=n {
            term = term.mul(&MultiPoly::unipoly_in_var(a, &vars, &format!("z{}", zi))?);
        }
        num = num.add(&term);
    }
    Ok(FracMultiPoly::new(num, prefix[m].clone()).reduce())
}

// ------------------------------------------------------------------ Taelman

fn mu_degree_bound(r: usize, d: usize) -> i64 {
    // floor((1 - 1/r) d)
    ((r as i64 - 1) * d as i64).div_euclid(r as i64)
}

/// L(phi^v, z_1..z_n, s) = sum mu(a) a(z_1)...a(z_n) / a^s as a truncated
/// Laurent series. Degree blocks are computed exactly and summed in
/// ascending order; the cutoff keeps every omitted term strictly below the
/// precision window, since ord(mu(a)/a^s) >= d(s - 1 + 1/r).
pub fn taelman_lvalue(
    phi: &DrinfeldModule,
    n: usize,
    s: i64,
    precision: i64,
) -> Result<LValueResult> {
    assert!(s >= 1, "this evaluation path needs s >= 1");
    if precision < 1 {
        return Err(Error::NegativePrecision(precision));
    }
    let r = phi.rank() as i64;
    // largest d with d(s - 1 + 1/r) <= precision
    let dstar = (precision * r).div_euclid((s - 1) * r + 1).max(0) as usize;
    let mu = crate::frobenius::mu_table(phi, dstar)?;
    let series = taelman_partial_sum(&mu, n, s, precision, dstar)?;
    let tail_exp = -Ratio::from_integer(BigInt::from(dstar as i64 + 1))
        * (Ratio::from_integer(BigInt::from(s - 1)) + Ratio::new(BigInt::one(), BigInt::from(r)));
    Ok(LValueResult {
        series,
        terms_used: dstar,
        tail: Tail::LogQ(tail_exp),
    })
}

/// Partial sum over degrees 0..=dstar at the given precision.
pub fn taelman_partial_sum(
    mu: &MuTable,
    n: usize,
    s: i64,
    precision: i64,
    dstar: usize,
) -> Result<TateSeries> {
    let phi = mu.phi().clone();
    let field = phi.field().clone();
    let zvars = Vars::z_only(n);
    let r = phi.rank();
    let work = precision + mu_degree_bound(r, dstar).max(0);
    let blocks: Vec<Result<TateSeries>> = par_map(dstar + 1, |d| {
        let mut block = TateSeries::zero(&field, &zvars, work);
        for (a, mu_a) in mu.of_degree(d)? {
            if mu_a.is_zero() {
                continue;
            }
            let inv = laurent_invert_monic(&a.pow(s as u64), &zvars, work)?;
            let mut term = inv.mul_unipoly(mu_a);
            for zi in 1..=n {
                let az = MultiPoly::unipoly_in_var(a, &zvars, &format!("z{}", zi))?;
                term = term.mul_coeff_poly(&az);
            }
            block = block.add(&term);
        }
        Ok(block)
    });
    let mut acc = TateSeries::zero(&field, &zvars, work);
    for b in blocks {
        acc = acc.add(&b?);
    }
    Ok(acc.truncate_to(precision))
}

// -------------------------------------------------------------- Euler route

/// prod over irreducible f of degree <= max_prime_degree of the inverse
/// deformed Euler factor at x = f^{-s}, expanded to the given precision.
/// Exactly equals the Dirichlet sum restricted to monic a whose prime
/// factors all have degree <= max_prime_degree.
pub fn euler_product_truncation(
    phi: &DrinfeldModule,
    n: usize,
    s: i64,
    max_prime_degree: usize,
    precision: i64,
) -> Result<LValueResult> {
    assert!(s >= 1);
    if precision < 1 {
        return Err(Error::NegativePrecision(precision));
    }
    let field = phi.field().clone();
    let zvars = Vars::z_only(n);
    let mut acc = TateSeries::one(&field, &zvars, precision);
    for f in irreducibles_up_to(&field, max_prime_degree) {
        let data = frobenius_data(phi, &f)?;
        if data.r0 == 0 {
            continue;
        }
        let d = data.d as i64;
        let work = precision + d;
        // factor = 1 + sum_i e_i prod_k f(z_k)^i f^{i-1-si}
        let mut factor = TateSeries::one(&field, &zvars, work);
        for i in 1..=data.r0 {
            if data.e[i - 1].is_zero() {
                continue;
            }
            let pow = s * i as i64 - (i as i64 - 1);
            debug_assert!(pow >= 1);
            let inv = laurent_invert_monic(&f.pow(pow as u64), &zvars, work)?;
            let mut term = inv.mul_unipoly(&data.e[i - 1]);
            for zi in 1..=n {
                let fz = MultiPoly::unipoly_in_var(&f, &zvars, &format!("z{}", zi))?;
                term = term.mul_coeff_poly(&fz.pow(i as u64));
            }
            factor = factor.add(&term);
        }
        let inv_factor = factor.invert(precision)?;
        acc = acc.mul(&inv_factor).truncate_to(precision);
    }
    Ok(LValueResult {
        series: acc,
        terms_used: max_prime_degree,
        tail: Tail::Zero,
    })
}

// ------------------------------------------------- nonpositive special values

/// q-adic digits of a nonnegative integer.
fn q_adic_digits(q: u64, mut v: u64) -> Vec<u64> {
    let mut out = vec![];
    while v > 0 {
        out.push(v % q);
        v /= q;
    }
    out
}

/// L(phi^v, z_1..z_n, s) for s <= 0 is an exact polynomial: writing
/// a^{|s|} = prod_j a(theta^{q^j})^{v_j} over the q-adic digits v_j of |s|,
/// each degree block is an (n + sum v_j)-variable H-sum with the extra slots
/// evaluated at theta^{q^j}; blocks vanish for
/// k > r(n + l_q(|s|) + beta)/(q-1).
pub fn special_value_nonpositive(mu: &MuTable, n: usize, s: i64) -> Result<MultiPoly> {
    assert!(s <= 0);
    let phi = mu.phi().clone();
    let field = phi.field().clone();
    let q = field.q();
    let digits = q_adic_digits(q, (-s) as u64);
    let lq: u64 = digits.iter().sum();
    let r = phi.rank() as u64;
    let beta = phi.beta();
    // floor(r (n + lq + beta) / (q - 1))
    let kmax = (r * (n as u64 + lq + beta) / (q - 1)) as usize;
    if mu.max_degree() < kmax {
        return Err(Error::TableTooSmall {
            needed: kmax,
            available: mu.max_degree(),
        });
    }
    special_value_partial(mu, n, s, kmax)
}

/// The same finite sum with an explicit degree cutoff (stability checks raise
/// the cutoff and verify nothing changes).
pub fn special_value_partial(
    mu: &MuTable,
    n: usize,
    s: i64,
    kmax: usize,
) -> Result<MultiPoly> {
    assert!(s <= 0);
    let phi = mu.phi().clone();
    let field = phi.field().clone();
    let q = field.q();
    let digits = q_adic_digits(q, (-s) as u64);
    // variable slots: z1..zn stay, then one slot per unit digit evaluated at
    // theta^{q^j}
    let mut znames: Vec<String> = (1..=n).map(|i| format!("z{}", i)).collect();
    let mut eval_plan: Vec<(String, u64)> = vec![]; // (name, theta-exponent q^j)
    let mut slot = n;
    for (j, &vj) in digits.iter().enumerate() {
        for _ in 0..vj {
            slot += 1;
            let name = format!("z{}", slot);
            znames.push(name.clone());
            eval_plan.push((name, q.pow(j as u32)));
        }
    }
    let out_vars = Vars::theta_z(n);
    let mut acc = MultiPoly::zero(&field, &out_vars);
    for k in 0..=kmax {
        let h = h_sum_named(mu, k, &znames)?;
        // evaluate the extra slots at theta powers
        let mut partial = h;
        for (name, e) in &eval_plan {
            let vars = partial.vars().clone();
            let replacement = MultiPoly::var_pow(&field, &vars, "theta", u32::try_from(*e).unwrap())?;
            partial = partial.substitute_var(name, &replacement)?;
        }
        acc = acc.add(&partial.restrict(&out_vars));
    }
    Ok(acc)
}

// ------------------------------------------------------------ bracket powers

/// <a> = a theta^{-deg a} and <a>^y = sum_i binom(y, i) (<a> - 1)^i with
/// Lucas binomials, truncated at the requested precision. For an integer y
/// (finite digit string) this equals the direct power.
pub fn bracket_pow(a: &UniPoly, y_digits: &[u8], precision: i64) -> Result<TateSeries> {
    if precision < 0 {
        return Err(Error::NegativePrecision(precision));
    }
    if !a.is_monic() {
        return Err(Error::NotMonic);
    }
    let field = a.field().clone();
    let p = field.p();
    let vars = Vars::empty();
    let d = a.degree().unwrap() as i64;
    // u = <a> - 1: exponents -1 .. -d
    let mut u = TateSeries::zero(&field, &vars, precision);
    for (i, &c) in a.coeffs().iter().enumerate() {
        let e = i as i64 - d;
        if e == 0 {
            continue;
        }
        u.set_term(e, MultiPoly::constant(&field, &vars, c));
    }
    let mut acc = TateSeries::one(&field, &vars, precision);
    let mut upow = TateSeries::one(&field, &vars, precision);
    let mut i = 0u64;
    loop {
        i += 1;
        upow = upow.mul(&u).truncate_to(precision);
        if upow.is_zero() {
            break;
        }
        let b = lucas_binomial(p, y_digits, i);
        if b != 0 {
            let c = MultiPoly::constant(&field, &vars, field.from_int(b as i64));
            acc = acc.add(&upow.mul_coeff_poly(&c));
        }
    }
    Ok(acc)
}

// ------------------------------------------------------------------ tails

/// Per-degree bound for the Goss-plane blocks beyond the threshold
/// d >= 3r + r(n+1+beta)/(q-1):
///   |L_d| <= |x|^{-d} q^{d(1-1/r)} q^{-q^{floor(d/r - (n+1+beta)/(q-1)) - 2}}.
#[derive(Debug, Clone)]
pub struct TailBound {
    q: i64,
    r: i64,
    beta: i64,
    n: i64,
    ord_x: i64,
    pub d_threshold: usize,
}

impl TailBound {
    pub fn new(phi: &DrinfeldModule, n: usize, ord_x: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::NZero);
        }
        let q = phi.field().q() as i64;
        let r = phi.rank() as i64;
        let beta = phi.beta() as i64;
        // ceil(3r + r(n+1+beta)/(q-1))
        let num = 3 * r * (q - 1) + r * (n as i64 + 1 + beta);
        let d_threshold = num.div_euclid(q - 1)
            + if num.rem_euclid(q - 1) > 0 { 1 } else { 0 };
        Ok(TailBound {
            q,
            r,
            beta,
            n: n as i64,
            ord_x,
            d_threshold: d_threshold as usize,
        })
    }

    /// log_q of the degree-d bound; valid only for d >= d_threshold.
    pub fn exponent(&self, d: usize) -> Result<BigRational> {
        if d < self.d_threshold {
            return Err(Error::NotApplicable(format!(
                "tail bound needs d >= {}",
                self.d_threshold
            )));
        }
        let d = d as i64;
        // floor(d/r - (n+1+beta)/(q-1)) - 2
        let inner = Ratio::new(BigInt::from(d), BigInt::from(self.r))
            - Ratio::new(BigInt::from(self.n + 1 + self.beta), BigInt::from(self.q - 1));
        let m: BigInt = inner.floor().to_integer() - 2;
        let mu32 = m.to_u32().expect("tail exponent out of range");
        let tower = BigInt::from(self.q).pow(mu32);
        let linear = Ratio::from_integer(BigInt::from(d * self.ord_x))
            + Ratio::new(BigInt::from(d * (self.r - 1)), BigInt::from(self.r));
        Ok(linear - Ratio::from_integer(tower))
    }

    /// Supremum of the per-degree exponents over all d > dstar. The scan
    /// stops once the bound is provably decreasing on every residue class
    /// mod r: B(d+r) - B(d) = r(ord_x + 1 - 1/r) - (q-1) q^{M(d)} < 0.
    pub fn sup_beyond(&self, dstar: usize) -> BigRational {
        let start = (dstar + 1).max(self.d_threshold);
        let mut best: Option<BigRational> = None;
        let mut decreasing_run = 0usize;
        let mut d = start;
        loop {
            let b = self.exponent(d).expect("d >= threshold");
            if best.as_ref().map_or(true, |cur| b > *cur) {
                best = Some(b.clone());
            }
            // (q-1) q^{M(d)} > r ord_x + r - 1 makes the class decreasing
            let inner = Ratio::new(BigInt::from(d as i64), BigInt::from(self.r))
                - Ratio::new(BigInt::from(self.n + 1 + self.beta), BigInt::from(self.q - 1));
            let m: BigInt = inner.floor().to_integer() - 2;
            let tower = BigInt::from(self.q).pow(m.to_u32().unwrap());
            let lhs = BigInt::from(self.q - 1) * tower;
            if lhs > BigInt::from(self.r * self.ord_x + self.r - 1) {
                decreasing_run += 1;
                if decreasing_run >= self.r as usize {
                    break;
                }
            } else {
                decreasing_run = 0;
            }
            d += 1;
        }
        best.unwrap()
    }
}

// -------------------------------------------------------------- Goss plane

fn lq_of_digits(p: u64, l: u32, digits: &[u8]) -> u64 {
    // q-adic digit sum: group l base-p digits per q-digit
    let mut total = 0u64;
    let mut j = 0usize;
    while j < digits.len() {
        let mut v = 0u64;
        for i in 0..l as usize {
            let d = digits.get(j + i).copied().unwrap_or(0) as u64;
            v += d * p.pow(i as u32);
        }
        total += v;
        j += l as usize;
    }
    total
}

/// Evaluate L(phi^v, z_1..z_n; x, y) to within eps = q^{eps_log_q}.
///
/// When y is exactly the integer carried by the digit buffer and its
/// vanishing bound is small, the series terminates identically and the tail
/// is zero. Otherwise the partial sums use the prefix y_m; the reported tail
/// combines the beyond-cutoff bound with the prefix-approximation bound
/// |L_d(x,y) - L_d(x,y_m)| <= |x|^{-d} q^{d(1-1/r)} q^{-q^m}, and both knobs
/// (cutoff and m) grow until the combined bound beats eps.
pub fn goss_eval(
    phi: &DrinfeldModule,
    n: usize,
    point: &GossPoint,
    eps_log_q: &BigRational,
) -> Result<LValueResult> {
    if n == 0 {
        return Err(Error::NZero);
    }
    let field = phi.field().clone();
    let q = field.q();
    let p = field.p();
    let l = field.l();
    let r = phi.rank() as i64;
    let beta = phi.beta();
    let ord_x = point.x.ord().ok_or(Error::NonUnitLeading)?;
    // exact-termination branch: y is the full (finite) digit buffer
    let lq_full = lq_of_digits(p, l, &point.y_digits);
    let exact_bound =
        (r as u64 * (n as u64 + lq_full + beta) / (q - 1)) as usize;
    let tb = TailBound::new(phi, n, ord_x)?;
    if exact_bound + 1 <= tb.d_threshold + 4 {
        let dstar = exact_bound;
        let precision = precision_for(eps_log_q);
        let series = goss_partial_sum(phi, n, &point.x, &point.y_digits, dstar, precision)?;
        return Ok(LValueResult {
            series,
            terms_used: dstar,
            tail: Tail::Zero,
        });
    }
    // ladder branch
    let mut dstar = tb.d_threshold.saturating_sub(1);
    let mut m = point.m.max(1);
    let one_minus = Ratio::new(BigInt::from(r - 1), BigInt::from(r));
    loop {
        let tail_exp = tb.sup_beyond(dstar);
        // max over 1 <= d <= dstar of d(ord_x + 1 - 1/r) - q^m
        let mut yapprox: Option<BigRational> = None;
        let qm = BigInt::from(q).pow(u32::try_from(m).expect("m too large"));
        for d in 1..=dstar {
            let a = Ratio::from_integer(BigInt::from(d as i64 * ord_x))
                + Ratio::from_integer(BigInt::from(d as i64)) * one_minus.clone()
                - Ratio::from_integer(qm.clone());
            if yapprox.as_ref().map_or(true, |cur| a > *cur) {
                yapprox = Some(a);
            }
        }
        let combined = match &yapprox {
            Some(a) if *a > tail_exp => a.clone(),
            _ => tail_exp.clone(),
        };
        if combined < *eps_log_q {
            let precision = precision_for(eps_log_q);
            let prefix_len = (l as usize) * m;
            let y_m: Vec<u8> = (0..prefix_len)
                .map(|i| point.y_digits.get(i).copied().unwrap_or(0))
                .collect();
            let series = goss_partial_sum(phi, n, &point.x, &y_m, dstar, precision)?;
            return Ok(LValueResult {
                series,
                terms_used: dstar,
                tail: Tail::LogQ(combined),
            });
        }
        if yapprox.map_or(false, |a| a >= tail_exp) {
            m += 1;
        } else {
            dstar += 1;
        }
    }
}

fn precision_for(eps_log_q: &BigRational) -> i64 {
    let neg = -eps_log_q.clone();
    neg.ceil().to_integer().to_i64().unwrap_or(12).max(1) + 2
}

/// sum_{d <= dstar} x^{-d} sum_{a in A_{+,d}} mu(a) a(z_1)..a(z_n) <a>^{y}.
fn goss_partial_sum(
    phi: &DrinfeldModule,
    n: usize,
    x: &TateSeries,
    y_digits: &[u8],
    dstar: usize,
    precision: i64,
) -> Result<TateSeries> {
    let field = phi.field().clone();
    let zvars = Vars::z_only(n);
    let mu = crate::frobenius::mu_table(phi, dstar)?;
    let r = phi.rank();
    let ord_x = x.ord().unwrap_or(0);
    let work = precision
        + mu_degree_bound(r, dstar).max(0)
        + (dstar as i64) * (-ord_x).max(0)
        + 1;
    let xinv = x.embed_vars(&zvars).invert(work)?;
    let blocks: Vec<Result<TateSeries>> = par_map(dstar + 1, |d| {
        let mut block = TateSeries::zero(&field, &zvars, work);
        for (a, mu_a) in mu.of_degree(d)? {
            if mu_a.is_zero() {
                continue;
            }
            let br = bracket_pow(a, y_digits, work)?.embed_vars(&zvars);
            let mut term = br.mul_unipoly(mu_a);
            for zi in 1..=n {
                let az = MultiPoly::unipoly_in_var(a, &zvars, &format!("z{}", zi))?;
                term = term.mul_coeff_poly(&az);
            }
            block = block.add(&term);
        }
        Ok(block.mul(&xinv.pow(d as u64)))
    });
    let mut acc = TateSeries::zero(&field, &zvars, work);
    for b in blocks {
        acc = acc.add(&b?);
    }
    Ok(acc.truncate_to(precision))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::fq_make;
    use crate::frobenius::mu_table;

    fn f3() -> Fq {
        fq_make(3, 1, None).unwrap()
    }

    #[test]
    fn h_sums_vanish_where_expected() {
        let f = f3();
        // Carlitz, q=3, one variable, k=1: sum (z + c) = 3z + 3 = 0
        let c = DrinfeldModule::carlitz(&f);
        let mu = mu_table(&c, 2).unwrap();
        assert!(h_sum(&mu, 0, 1).unwrap().is_one());
        assert!(h_sum(&mu, 1, 1).unwrap().is_zero());
        // theta + tau^2 over F_3, one variable, k=2: vanishes (bound = 1 < 2)
        let phi = DrinfeldModule::from_ints(&f, &[&[0], &[1]]);
        let mu2 = mu_table(&phi, 3).unwrap();
        assert!(h_sum(&mu2, 2, 1).unwrap().is_zero());
    }

    #[test]
    fn taelman_degree_blocks_match_log_coefficients() {
        let f = f3();
        // Carlitz n=0: degree-1 block = gamma_1 = 1/(theta - theta^q)
        let c = DrinfeldModule::carlitz(&f);
        let mu = mu_table(&c, 1).unwrap();
        let block = taelman_partial_sum(&mu, 0, 1, 8, 1).unwrap();
        let log = crate::drinfeld::log_coeffs(&c, 1);
        // block = 1 + gamma_1 + O: subtract the degree-0 part
        let g1 = log.entry(1);
        let g1_series = laurent_invert_monic(g1.den(), &Vars::empty(), 8)
            .unwrap()
            .mul_unipoly(g1.num());
        let mut expect = TateSeries::one(&f, &Vars::empty(), 8).add(&g1_series);
        expect = expect.truncate_to(8);
        assert_eq!(block, expect);
    }

    #[test]
    fn rank_two_degree_two_block_is_gamma_two() {
        let f = f3();
        let phi = DrinfeldModule::from_ints(&f, &[&[0], &[1]]);
        let mu = mu_table(&phi, 2).unwrap();
        let sum = taelman_partial_sum(&mu, 0, 1, 10, 2).unwrap();
        // gamma_1 = 0, so sum = 1 + gamma_2 + O; gamma_2 = 1/(theta - theta^9)
        let log = crate::drinfeld::log_coeffs(&phi, 2);
        assert!(log.entry(1).is_zero());
        let g2 = log.entry(2);
        let g2_series = laurent_invert_monic(g2.den(), &Vars::empty(), 10)
            .unwrap()
            .mul_unipoly(g2.num());
        let expect = TateSeries::one(&f, &Vars::empty(), 10)
            .add(&g2_series)
            .truncate_to(10);
        assert_eq!(sum, expect);
    }

    #[test]
    fn special_value_examples() {
        let f = f3();
        let c = DrinfeldModule::carlitz(&f);
        let mu = mu_table(&c, 4).unwrap();
        // Carlitz q=3, one variable, s=0 -> 1
        let v = special_value_nonpositive(&mu, 1, 0).unwrap();
        assert!(v.is_one());
        // n = 0, s = 0 -> 1
        let v0 = special_value_nonpositive(&mu, 0, 0).unwrap();
        assert!(v0.is_one());
    }

    #[test]
    fn bracket_pow_examples() {
        let f = f3();
        // y = 0 -> 1
        let a = UniPoly::from_ints(&f, &[1, 1]);
        let b0 = bracket_pow(&a, &[], 6).unwrap();
        assert!(b0.coeff(0).is_one());
        assert_eq!(b0.terms().len(), 1);
        // a = theta + 1, y = 2, q = 3: 1 + 2 theta^-1 + theta^-2
        let b2 = bracket_pow(&a, &padic_digits(3, 2, 4), 6).unwrap();
        assert!(b2.coeff(0).is_one());
        assert_eq!(
            b2.coeff(-1),
            MultiPoly::constant(&f, &Vars::empty(), f.from_int(2))
        );
        assert!(b2.coeff(-2).is_one());
        assert!(b2.coeff(-3).is_zero());
        // integer powers match direct multiplication
        let direct = {
            let unit = bracket_pow(&a, &padic_digits(3, 1, 4), 12).unwrap();
            unit.mul(&unit).mul(&unit)
        };
        let viabin = bracket_pow(&a, &padic_digits(3, 3, 4), 12).unwrap();
        assert_eq!(direct.truncate_to(10), viabin.truncate_to(10));
    }

    #[test]
    fn lucas_examples() {
        // binom(4,3) mod 3 = C(1,0) C(1,1) = 1
        assert_eq!(lucas_binomial(3, &padic_digits(3, 4, 4), 3), 1);
        // direct small table check mod 2
        assert_eq!(lucas_binomial(2, &padic_digits(2, 5, 4), 2), 0);
        assert_eq!(lucas_binomial(2, &padic_digits(2, 5, 4), 4), 1);
    }

    #[test]
    fn tail_bound_spot_instance() {
        // r=1, n=1, beta=0, q=3, d=4: |x|^{-4} * q^{-3}, threshold d >= 4
        let f = f3();
        let c = DrinfeldModule::carlitz(&f);
        let tb = TailBound::new(&c, 1, -1).unwrap();
        assert_eq!(tb.d_threshold, 4);
        let e = tb.exponent(4).unwrap();
        // d ord_x + d(1 - 1/r) - q^{[4 - 1] - 2} = -4 + 0 - 3
        assert_eq!(e, BigRational::from_integer(BigInt::from(-7)));
    }

    #[test]
    fn goss_eval_carlitz_y_zero_is_one() {
        let f = f3();
        let c = DrinfeldModule::carlitz(&f);
        let x = {
            let mut s = TateSeries::zero(&f, &Vars::empty(), 20);
            s.set_term(1, MultiPoly::one(&f, &Vars::empty()));
            s
        };
        let point = GossPoint {
            x,
            y_digits: vec![],
            m: 1,
        };
        let eps = BigRational::from_integer(BigInt::from(-8));
        let res = goss_eval(&c, 1, &point, &eps).unwrap();
        assert_eq!(res.tail, Tail::Zero);
        // H_{d,1} = 0 for d >= 1, so the value is exactly 1
        assert!(res.series.coeff(0).is_one());
        assert_eq!(res.series.terms().len(), 1);
    }
}
