//! Exact arithmetic for skew PBW extensions of the algebra of
//! rational-valued functions on a finite set: normal forms of
//! noncommutative products, degree-bounded bases of the centralizer of the
//! coefficient algebra and of the center, and the bridge to piecewise
//! constant functions on the line.

pub mod commutant;
pub mod error;
pub mod funalg;
pub mod io;
pub mod linalg;
pub mod multiindex;
pub mod pbw;
pub mod piecewise;
pub mod rational;
pub mod samples;
pub mod verify;

pub use error::{Error, Result};
pub use funalg::{AlgebraElement, Omega, Permutation, SigmaDerivation};
pub use multiindex::MultiIndex;
pub use pbw::{PBWElement, Presentation, Remainder};
