//! Exact certification of integrality for factorial ratios
//! `E(m) = Π C_j(m)! / Π D_k(m)!` and for the mirror maps `exp(G/F)` built
//! from them.
//!
//! Two independent routes are provided and checked against each other: the
//! step function `Φ` on `[0,1)^r` ([`cells`]) and interior lattice points of
//! dilates of a lattice polytope ([`geometry`]). [`series`] computes the
//! power series themselves and [`hypergeom`] verifies their
//! A-hypergeometric identities.

pub mod cells;
pub mod certify;
pub mod cli;
pub mod corpus;
pub mod elimination;
pub mod error;
pub mod forms;
pub mod geometry;
mod grading;
pub mod hypergeom;
pub mod report;
pub mod series;

pub use cells::{delaygue_holds, landau_holds, min_phi, PhiSummary};
pub use certify::{certify, CertificationReport, CertifyOptions};
pub use corpus::{generate_corpus, CorpusParams, SystemSpec};
pub use error::{Error, Result, Violation};
pub use forms::{factorial_ratio, validate_system, LinearFormSystem, RationalPoint};
pub use geometry::{build_configuration, ConeGeometry, PointConfiguration};
pub use series::{mirror_map, series_f, FormIndex, TruncatedSeries};
