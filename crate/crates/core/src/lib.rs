//! Face lattices, flag-vectors and f-vector cones of 3- and 4-dimensional
//! polytopes, strongly regular spheres and Eulerian lattices, in exact
//! arithmetic.
//!
//! * [`lattice`]: construction and validation of graded face lattices,
//!   duality, intervals, isomorphism.
//! * [`flag`], [`cone`], [`steinitz`]: flag numbers, fatness and complexity,
//!   the known inequalities, the pentagon cone and 3-polytope f-vectors.
//! * [`constructions`]: example families including the E-construction.
//! * [`geometry`]: exact convex hulls as an independent oracle.
//! * [`tilings`]: density calculus for periodic tilings of R³.

pub mod cone;
pub mod constructions;
pub mod error;
pub mod flag;
pub mod geometry;
pub mod lattice;
pub mod rational;
pub mod report;
pub mod steinitz;
pub mod tilings;

pub use error::{Error, Result};
pub use flag::{FVector, FlagVector, FourFlag};
pub use lattice::FaceLattice;
pub use rational::Rational;
