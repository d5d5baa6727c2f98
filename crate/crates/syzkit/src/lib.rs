//! syzkit: Koszul cohomology, graded Betti tables and second syzygy
//! schemes over Q (or a prime field), using exact linear algebra only —
//! no Groebner bases, no floating point.
//!
//! The main objects:
//! - [`poly::HomogeneousPoly`] — homogeneous polynomials over an exact field,
//! - [`ideal::GradedIdeal`] — an ideal presented by homogeneous generators,
//!   with cached graded pieces I_d as row-reduced subspaces,
//! - [`koszul`] — the Koszul differential, dim K_{p,q} and Betti tables,
//! - [`syzygy`] — linear syzygies, the map phi, Syz_2 verdicts and
//!   involvement witnesses,
//! - [`varieties`] — a small catalog of classical examples,
//! - [`family`] — one-parameter families and sampled rank scans,
//! - [`gi`] — the `.gi` ideal file format.

pub mod cli;
pub mod error;
pub mod family;
pub mod gi;
pub mod ideal;
pub mod koszul;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod scalar;
pub mod syzygy;
pub mod varieties;

pub use error::{Error, Result};
pub use ideal::GradedIdeal;
pub use koszul::{betti_table, koszul_group_dim, BettiTable};
pub use poly::{HomogeneousPoly, Monomial, MonomialBasis, RingContext};
pub use scalar::{FieldElement, FieldSpec};
pub use syzygy::{phi_image, syz2_verdict, SyzygyElement};
