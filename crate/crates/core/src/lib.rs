//! Exact matrix representations of Hecke operators acting on vector-valued
//! period functions, plus a floating-point layer that verifies the defining
//! functional equations of those representations.
//!
//! The exact side is built from four pieces:
//!
//! * [`mat2`] — 2x2 integer matrices with Moebius action, unimodular
//!   inverses and a Hermite decomposition into the upper-triangular
//!   families X_m; [`formal_sum`] holds integer combinations of them.
//! * [`farey`] — two-sided Farey sequences, the level function, left
//!   neighbor chains and the unimodular path sums M(q).
//! * [`congruence`] — coset tables of the Hecke congruence subgroups over
//!   the projective line mod n, the induced permutation representation,
//!   the Hecke elements T(p), U(q) and the bookkeeping maps sigma and phi.
//! * [`hecke`] — the scalar level-1 operator sums and the mu x mu grids
//!   representing the operators at higher level, with an independent
//!   enumeration of the expected level-1 support.
//!
//! The numeric side ([`numeric`]) realizes the weight-s slash action on
//! sampled functions and measures residuals of the three-term functional
//! equation; [`verify`] bundles everything into reproducible check suites.

pub mod congruence;
pub mod error;
pub mod farey;
pub mod formal_sum;
pub mod hecke;
pub mod mat2;
pub mod numeric;
pub mod rational;
pub mod verify;

pub use congruence::{cosets, in_gamma0, is_prime, phi, rho, sigma, t_p, u_q, x_m, CosetTable, Permutation};
pub use error::{Error, Result};
pub use farey::{
    farey_sequence, farey_sequence_with_limit, left_neighbor, left_neighbor_scan, lev, lns,
    m_chain, m_of, FareySequence, LNSequence, DEFAULT_MAX_FAREY_LEVEL,
};
pub use formal_sum::FormalSum;
pub use hecke::{h_tilde, h_tilde_level1, s_m_oracle, HeckeRep};
pub use mat2::Mat2;
pub use numeric::{
    apply_rep, apply_sum, cpow, hecke_image, r_zeta, slash, three_term_residual, SpectralParam,
    TestFunction,
};
pub use rational::ExtRational;
