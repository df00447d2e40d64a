//! Colored Kauffman polynomials of torus links, the orthogonal LMOV
//! reformulation, and the cross-checks around them. All arithmetic is exact.

pub mod algebra;
pub mod bmw;
pub mod characters;
pub mod combinatorics;
pub mod config;
pub mod error;
pub mod lmov;
pub mod rmatrix;
pub mod torus;
pub mod typeb;
pub mod verify;

pub use error::{KlmovError, Result};
