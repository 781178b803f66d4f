//! Exact construction of the Hopf algebroid `U(g)^min # U(g)` for a finite-dimensional
//! Lie algebra given by structure constants, and checkers for its axioms.

#![allow(clippy::needless_range_loop)]

pub mod algebroid;
pub mod context;
pub mod dual;
pub mod expr;
pub mod lie;
pub mod pairing;
pub mod report;
pub mod scalar;
pub mod smash;
pub mod theorem61;
pub mod uea;
pub mod verify;
pub mod yd;

pub use context::Context;
pub use dual::{DualElement, DualMonomial, GeneratorSymbol, Kind, TensorDual};
pub use lie::{builtin, load_algebra, LieAlgebra, LieError};
pub use pairing::{EqMode, Pairing, Verdict, Witness};
pub use scalar::{Matrix, Scalar};
pub use smash::SmashElement;
pub use uea::{PbwMonomial, Side, TensorUea, Uea, UeaElement, UeaPair};
