//! Exact computer algebra for the `gl(V)` action on `B_r = Q[e_1..e_r]` and the
//! `gl_inf` action on `B = Q[x_1, x_2, ...]`.
//!
//! The crate builds the structural generating series of both representations
//! from closed forms and checks them coefficient by coefficient against brute
//! force oracles that work directly with wedges and contractions.
//!
//! Layout, bottom up:
//!
//! * [`rational`], [`poly`], [`series`], [`laurent`]: scalars, sparse
//!   polynomials, univariate power series and windowed bivariate Laurent series.
//! * [`partition`]: partitions and their enumeration.
//! * [`symfunc`]: symmetric polynomials in a finite alphabet `t_1..t_r`.
//! * [`br`]: the rings `B_r` and truncated `B`.
//! * [`exterior`], [`schubert`]: wedges, contraction and Schubert derivations.
//! * [`gl_finite`], [`djkm`]: the two representations, their oracles and
//!   closed forms.
//! * [`sweep`]: the parallel verification harness and its reports.

pub mod br;
pub mod djkm;
pub mod error;
pub mod exterior;
pub mod gl_finite;
pub mod laurent;
pub mod lemmas;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod schubert;
pub mod series;
pub mod sweep;
pub mod symfunc;

pub use error::{Error, Result};
pub use laurent::{LaurentSeries, Support, Window};
pub use partition::Partition;
pub use poly::{Monomial, MultiPoly, Var};
pub use rational::Rational;
pub use series::PowerSeries;
