//! Symbolic adjoint L-functions, genericity and L-packet sizes for the
//! similitude groups `G_{m,n}^{r,s}`, with GSpin(4) and GSpin(6) as presets.
//!
//! Layers, bottom up: [`symbolic`] characters and relations, [`langlands`]
//! segments and parameters, [`lfunction`] factor products, [`gspin`] the
//! group-level verdicts, [`nilpotent`] exact centralizer computations,
//! [`dsl`] the text format, and [`catalog`] / [`report`] for the tables and
//! the command line.

pub mod catalog;
pub mod dsl;
pub mod gspin;
pub mod half;
pub mod langlands;
pub mod lfunction;
pub mod nilpotent;
pub mod report;
pub mod symbolic;

pub use half::Half;
