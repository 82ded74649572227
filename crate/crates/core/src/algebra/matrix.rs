//! Square matrices of multivariate polynomials and their characteristic
//! polynomials by fraction-free (Bareiss) elimination. Exact over the
//! polynomial domain; no coefficient growth into fractions.

use crate::algebra::field::Fq;
use crate::algebra::multipoly::{MultiPoly, Vars};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix {
    field: Fq,
    vars: Vars,
    dim: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn new(field: &Fq, vars: &Vars, dim: usize, entries: Vec<MultiPoly>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::NonSquare);
        }
        for e in &entries {
            if e.vars() != vars || e.field() != field {
                return Err(Error::IncompatibleContexts(
                    "matrix entries must share one variable context".into(),
                ));
            }
        }
        Ok(PolyMatrix {
            field: field.clone(),
            vars: vars.clone(),
            dim,
            entries,
        })
    }

    pub fn from_rows(field: &Fq, vars: &Vars, rows: Vec<Vec<MultiPoly>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::NonSquare);
        }
        PolyMatrix::new(field, vars, dim, rows.into_iter().flatten().collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn at(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.dim + j]
    }

    /// Determinant by Bareiss elimination with exact interior divisions,
    /// with cofactor expansion for dimension <= 4.
    pub fn determinant(&self) -> MultiPoly {
        if self.dim <= 4 {
            return det_cofactor(self);
        }
        det_bareiss(self)
    }

    /// det(X * Id - M) in the context extended by the variable X. Monic of
    /// degree dim in X.
    pub fn charpoly_fraction_free(&self) -> MultiPoly {
        let xvars = self.vars.with("X");
        let f = &self.field;
        let x = MultiPoly::var_pow(f, &xvars, "X", 1).unwrap();
        let mut rows = Vec::with_capacity(self.dim * self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut e = self.at(i, j).embed(&xvars).neg();
                if i == j {
                    e = e.add(&x);
                }
                rows.push(e);
            }
        }
        let m = PolyMatrix::new(f, &xvars, self.dim, rows).unwrap();
        m.determinant()
    }
}

/// Cofactor expansion along the first row.
pub fn det_cofactor(m: &PolyMatrix) -> MultiPoly {
    let f = &m.field;
    let n = m.dim;
    if n == 0 {
        return MultiPoly::one(f, &m.vars);
    }
    if n == 1 {
        return m.at(0, 0).clone();
    }
    let mut acc = MultiPoly::zero(f, &m.vars);
    for j in 0..n {
        if m.at(0, j).is_zero() {
            continue;
        }
        let mut sub_entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in 1..n {
            for k in 0..n {
                if k != j {
                    sub_entries.push(m.entries[i * n + k].clone());
                }
            }
        }
        let sub = PolyMatrix {
            field: f.clone(),
            vars: m.vars.clone(),
            dim: n - 1,
            entries: sub_entries,
        };
        let minor = det_cofactor(&sub);
        let term = m.at(0, j).mul(&minor);
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

fn det_bareiss(m: &PolyMatrix) -> MultiPoly {
    let f = m.field.clone();
    let n = m.dim;
    let mut a: Vec<MultiPoly> = m.entries.clone();
    let mut sign_flip = false;
    let mut prev_pivot = MultiPoly::one(&f, &m.vars);
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            // find a row to swap in
            let swap = (k + 1..n).find(|&i| !a[i * n + k].is_zero());
            match swap {
                Some(i) => {
                    for j in 0..n {
                        a.swap(k * n + j, i * n + j);
                    }
                    sign_flip = !sign_flip;
                }
                None => return MultiPoly::zero(&f, &m.vars),
            }
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = pivot
                    .mul(&a[i * n + j])
                    .sub(&a[i * n + k].mul(&a[k * n + j]));
                a[i * n + j] = num
                    .div_exact(&prev_pivot)
                    .expect("Bareiss interior division is exact");
            }
            a[i * n + k] = MultiPoly::zero(&f, &m.vars);
        }
        prev_pivot = pivot;
    }
    let det = a[n * n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::fq_make;
    use crate::algebra::unipoly::UniPoly;

    fn f3() -> Fq {
        fq_make(3, 1, None).unwrap()
    }

    #[test]
    fn charpoly_one_by_one() {
        let f = f3();
        let vars = Vars::new(&["z1"]);
        let z = MultiPoly::var_pow(&f, &vars, "z1", 1).unwrap();
        let m = PolyMatrix::from_rows(&f, &vars, vec![vec![z.clone()]]).unwrap();
        let cp = m.charpoly_fraction_free();
        let xv = vars.with("X");
        let expected = MultiPoly::var_pow(&f, &xv, "X", 1)
            .unwrap()
            .sub(&z.embed(&xv));
        assert_eq!(cp, expected);
    }

    #[test]
    fn charpoly_two_by_two_with_z() {
        // [[z, -1], [1, -z]] over F_3[z]: X^2 - z^2 + 1
        let f = f3();
        let vars = Vars::new(&["z"]);
        let z = MultiPoly::var_pow(&f, &vars, "z", 1).unwrap();
        let one = MultiPoly::one(&f, &vars);
        let m = PolyMatrix::from_rows(
            &f,
            &vars,
            vec![vec![z.clone(), one.neg()], vec![one.clone(), z.neg()]],
        )
        .unwrap();
        let cp = m.charpoly_fraction_free();
        let xv = vars.with("X");
        let x = MultiPoly::var_pow(&f, &xv, "X", 1).unwrap();
        let expected = x
            .mul(&x)
            .sub(&z.embed(&xv).mul(&z.embed(&xv)))
            .add(&MultiPoly::one(&f, &xv));
        assert_eq!(cp, expected);
    }

    #[test]
    fn charpoly_identity_two_by_two() {
        let f = f3();
        let vars = Vars::empty();
        let one = MultiPoly::one(&f, &vars);
        let zero = MultiPoly::zero(&f, &vars);
        let m = PolyMatrix::from_rows(
            &f,
            &vars,
            vec![vec![one.clone(), zero.clone()], vec![zero, one.clone()]],
        )
        .unwrap();
        let cp = m.charpoly_fraction_free();
        // (X - 1)^2
        let xv = vars.with("X");
        let x = MultiPoly::var_pow(&f, &xv, "X", 1).unwrap();
        let xm1 = x.sub(&MultiPoly::one(&f, &xv));
        assert_eq!(cp, xm1.mul(&xm1));
    }

    #[test]
    fn bareiss_matches_cofactor_on_5x5() {
        let f = f3();
        let vars = Vars::new(&["theta", "z1"]);
        // deterministic pseudo-random small entries
        let mut entries = vec![];
        let mut state = 7u64;
        for _ in 0..25 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let c0 = ((state >> 16) % 3) as i64;
            let e_th = ((state >> 24) % 2) as u32;
            let e_z = ((state >> 32) % 2) as u32;
            let mut p = MultiPoly::constant(&f, &vars, f.from_int(c0));
            let m1 = MultiPoly::var_pow(&f, &vars, "theta", e_th).unwrap();
            let m2 = MultiPoly::var_pow(&f, &vars, "z1", e_z).unwrap();
            p = p.add(&m1.mul(&m2));
            entries.push(p);
        }
        let m = PolyMatrix::new(&f, &vars, 5, entries).unwrap();
        assert_eq!(det_bareiss(&m), det_cofactor(&m));
    }
}
