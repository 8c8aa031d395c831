//! Combinatorics of finite simplicial complexes: face enumeration,
//! multiplicities and the Dehn–Sommerville style relations they satisfy,
//! simplicial homology, balanced (colored) complexes and Stanley–Reisner
//! Hilbert series.

pub mod balanced;
pub mod complex;
pub mod decimal;
pub mod enumeration;
pub mod error;
pub mod generators;
pub mod homology;
pub mod poly;
pub mod relations;
pub mod stanley_reisner;

pub use complex::{Complex, Face};
pub use error::{Error, Result};
