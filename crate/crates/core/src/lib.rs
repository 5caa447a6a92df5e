//! Normal forms for morphisms in arc-diagram monoidal categories.
//!
//! A category is described by a [`presentation::Presentation`]: label sets
//! for the three kinds of strand ends plus their multiplication rules.
//! Morphisms `X^n -> X^m` are linear combinations of labelled partial
//! bijections ([`diagram::BasisDiagram`]); composition and tensor product
//! keep them in normal form, tracking Koszul signs for odd labels.

pub mod basis;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod expr;
pub mod independence;
pub mod interchange;
pub mod k0;
pub mod linalg;
pub mod oracle;
pub mod parser;
pub mod presentation;
pub mod sample;
pub mod scalar;
pub mod verify;
pub mod views;

pub use diagram::{BasisDiagram, Degree, Morphism, PartialBijection};
pub use error::{Error, Result};
pub use expr::GenExpr;
pub use presentation::{BottomLabel, LongLabel, Preset, Presentation, TopLabel};
pub use scalar::{Field, LinComb, Scalar};
