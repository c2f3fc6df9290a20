//! Exact generating-function computations for the cohomology of general
//! linear groups with coefficients in strict polynomial bifunctors.
//!
//! The crate is organised bottom-up:
//!
//! * [`series`]: univariate polynomials and rational generating functions
//!   with denominators built from `(1 - t^k)` factors, all over exact
//!   rationals.
//! * [`symgrp`]: partitions, symmetric-group character tables, transitive
//!   `S_n`-sets with their Burnside products, and an explicit-matrix oracle
//!   for isotypic multiplicities.
//! * [`extalg`]: the truncated polynomial algebra `E_r = Ext(I^(r), I^(r))`,
//!   its monomial basis and Poincaré series, and the twist-stability bound.
//! * [`cohom`]: graded characters of `E_r^{⊗n} ⊗ kS_n`, Schur-summand
//!   series, the characteristic-2 degree-2 family, exponential-type
//!   recursions and the stable finite-field pipeline.
//! * [`ledger`]: a rank-constraint solver over the first pages of the
//!   De Rham, Koszul and Symmetric hypercohomology spectral sequences in
//!   characteristic 2.

pub mod cohom;
pub mod extalg;
pub mod ledger;
pub mod series;
pub mod symgrp;

pub use cohom::{CoefficientKind, Family, GradedCharacter};
pub use extalg::{Twist, TwistParams};
pub use series::{Polynomial, RationalSeries, TruncatedSeries};
pub use symgrp::{CycleType, Partition};
