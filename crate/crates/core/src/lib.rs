//! Exact symbolic and integer machinery around Sylvester's determinant
//! identity.
//!
//! * [`poly`] — sparse polynomials in the entry indeterminates `a[r,c]`,
//!   with partial derivatives.
//! * [`matrix`] — dense matrices over integers or polynomials, minors and
//!   bordering.
//! * [`det`] — determinants, cofactors (from minors and as derivatives) and
//!   the row-replacing operators `D^(i)`.
//! * [`verify`] — symbolic and randomized checks of the identity, a replay
//!   of the inductive proof step, and Dodgson condensation.
//! * [`bareiss`] — fraction-free elimination.

pub mod bareiss;
pub mod det;
pub mod error;
pub mod matrix;
pub mod poly;
pub mod ring;
pub mod verify;

pub use bareiss::{bareiss_det, bareiss_minors, EliminationTrace};
pub use det::{border_expansion, cofactor, cofactor_via_derivative, det, DOperator};
pub use error::{Error, Result};
pub use matrix::{extend, generic_matrix, replace_row_with_border, IntMatrix, Matrix, MinorSpec, SymMatrix};
pub use poly::{EntryVar, Monomial, MultiPoly};
pub use ring::Ring;
pub use verify::{check_canonical, check_general, dodgson_condensation, IdentityReport, IndexTuple};
