//! Exact computation in Clifford algebras of non-symmetric bilinear forms
//! over `Q(s, l)` with `q = s^2`, Hecke algebra representations built from
//! them, Young operators and q-spinor checks.

pub mod clifford;
pub mod coeff;
mod error;
pub mod exactla;
pub mod expr;
pub mod exterior;
pub mod hecke;
pub mod report;
pub mod session;
pub mod suites;
pub mod versor;
pub mod young;

pub use error::{Error, Result};
