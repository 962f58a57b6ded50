//! Verification toolkit for finite-dimensional **metric Lie algebras** that
//! carry contact or complex structures.
//!
//! The crate answers, in exact rational arithmetic by default, questions of
//! the shape *"does this algebra, with this inner product and these tensors,
//! really satisfy the axioms it claims?"* — and implements the standard
//! constructions that move between the structures it checks:
//!
//! * **Algebra layer** — structure constants, Jacobi, derived/lower-central
//!   series, centre, Killing form, radical, unimodularity, classification
//!   flags ([`lie`]).
//! * **Exterior calculus** — k-forms on the dual, the Chevalley–Eilenberg
//!   differential, primitives of exact 2-forms ([`forms`]).
//! * **Riemannian layer** — Koszul connection, Riemann/Ricci/scalar
//!   curvature, Einstein and η-Einstein verdicts ([`curvature`]).
//! * **Geometric structures** — almost contact metric and Sasakian checks,
//!   Hermitian/Kähler/Kähler-exact checks, with itemized reports
//!   ([`structures`]).
//! * **Constructions** — central extension ↔ Kähler reduction, the
//!   centreless Sasakian builder from a Kähler-exact seed and its
//!   Reeb-splitting inverse, the named-algebra catalog, a lattice
//!   integer-matrix check ([`constructions`], [`catalog`]).
//! * **Root machinery** — root decompositions of normal j-algebras, an
//!   Einstein criterion, unitary derivations, candidate central elements,
//!   and an η-Einstein obstruction ([`normal_j`]).
//! * **Modifications** — bracket deformations by commuting unitary
//!   derivations preserving metric and curvature ([`modification`]).
//! * **I/O** — a parser/printer for structure-equation notation
//!   (`"(0, e^{21})"` and friends), a JSON bundle format, and a CLI
//!   ([`notation`], [`bundle`], the `sasakian-cli` binary).
//!
//! Scalars are arbitrary-precision rationals ([`scalar::Mode::Exact`])
//! or `f64` with one global tolerance ([`scalar::Mode::Float`]); the two
//! never mix silently.  See the `examples/` directory for a guided tour.

pub mod bundle;
pub mod catalog;
pub mod cli;
pub mod constructions;
pub mod curvature;
pub mod error;
pub mod forms;
pub mod lie;
pub mod linalg;
pub mod modification;
pub mod normal_j;
pub mod notation;
pub mod report;
pub mod scalar;
pub mod structures;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{set_tolerance, tolerance, Mode, Scalar};
