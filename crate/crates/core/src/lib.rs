//! Exact symbolic computation for quantum affine algebras of types A and C at
//! desk scale: fundamental representations, crystal bases, normalized
//! R-matrices and their denominators, and verification drivers for the
//! cyclicity/filtration conjectures those R-matrices control.
//!
//! Everything is computed over `Q(s)` with `q = s^2` using arbitrary-precision
//! rational arithmetic; there is no floating point anywhere.

pub mod scalar;
pub mod bipoly;
pub mod series;
pub mod root;
pub mod crystal;
pub mod linalg;
pub mod umodule;
pub mod fund_a;
pub mod fund_c;
pub mod rmatrix;
pub mod verify;
