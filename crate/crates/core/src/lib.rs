//! Exact-arithmetic solver and verifier for truncated moment and interpolation
//! problems in the class of generalized Nevanlinna functions.
//!
//! Given a finite real moment sequence s_0, ..., s_l (all rationals here) and a
//! negative index kappa, the library decides whether a rational generalized
//! Nevanlinna function phi with the asymptotic expansion
//!
//!   phi(z) = -s_0/z - s_1/z^2 - ... - s_l/z^(l+1) + o(1/z^(l+1))
//!
//! and exactly kappa negative squares exists, produces the unique solution in
//! the rigid degenerate case, and builds the 2x2 polynomial matrix of the
//! linear fractional transformation that parametrizes all solutions otherwise.
//! Everything runs over arbitrary-precision rationals: rank, inertia and
//! solvability decisions are discontinuous in the data, so there is no
//! floating point anywhere on the decision path.
//!
//! Module map:
//!
//! * [`rational`], [`poly`], [`ratfun`] - scalars, dense univariate
//!   polynomials, reduced rational functions and Laurent expansions at
//!   infinity.
//! * [`matrix`] - dense exact linear algebra (Bareiss determinants, rank,
//!   symmetric congruence inertia).
//! * [`hankel`] - moment sequences, Hankel matrices, normal indices, Hankel
//!   rank, recursive generation, inertia-preserving extensions.
//! * [`toeplitz`] - truncated expansion algebra: upper triangular Toeplitz
//!   products, the monic inverter polynomial, expansion inversion.
//! * [`schur`] - the Schur-Chebyshev reduction chain, first/second kind
//!   polynomials and resolvent matrices.
//! * [`nevanlinna`] - negative index and generalized pole/zero multiplicities
//!   of real rational functions, parameter checks, solution verification.
//! * [`solver`] - problem classification and solution synthesis.

pub mod error;
pub mod hankel;
pub mod matrix;
pub mod nevanlinna;
pub mod poly;
pub mod ratfun;
pub mod rational;
pub mod schur;
pub mod solver;
pub mod toeplitz;

pub use error::{Error, Result};
pub use hankel::{HankelMatrix, Inertia, MomentSequence, NormalIndexSet};
pub use poly::Polynomial;
pub use ratfun::{LaurentExpansion, RationalFunction};
pub use rational::Rat;
pub use schur::{PolyMatrix2x2, SchurChain, SchurStep};
pub use solver::{Classification, ParamDescriptor, ProblemInstance, ProblemKind, SolutionReport};
