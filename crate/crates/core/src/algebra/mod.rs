//! Exact ring tower: F_q, A = F_q[theta], K = F_q(theta), sparse multivariate
//! polynomials, truncated Laurent series, skew polynomials, and fraction-free
//! characteristic polynomials.

pub mod field;
pub mod fracpoly;
pub mod matrix;
pub mod multipoly;
pub mod parse;
pub mod ratfunc;
pub mod skew;
pub mod tate;
pub mod unipoly;

pub use field::{fq_make, FieldSpec, Fq, FqElem};
pub use fracpoly::FracMultiPoly;
pub use matrix::PolyMatrix;
pub use multipoly::{MultiPoly, Vars};
pub use ratfunc::RatFunc;
pub use skew::{SkewPoly, TwistRing};
pub use tate::{laurent_invert_monic, TateSeries};
pub use unipoly::{
    irreducible_count, irreducibles, irreducibles_up_to, monic_polys, poly_factor, UniPoly,
};
