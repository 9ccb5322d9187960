//! Minimal-mean-width convex contours.
//!
//! Given a directional outreach requirement `C` on the unit hypersphere, this
//! crate computes the smallest (in mean width) convex compact set whose
//! support function dominates `C`. The continuous problem is discretised over
//! a certified spherical quadrature, solved as a linear program, and the
//! result is inflated into a contour that is valid in *every* direction, with
//! explicit sub-optimality bounds.
//!
//! Module map:
//! - [`geometry`]: directions, half-spaces, convex bodies, support evaluation,
//!   2-D vertex enumeration, Hausdorff distance.
//! - [`quadrature`]: certified direction/weight sets (uniform 2-D, cubed
//!   hypersphere, nearest-neighbour reweighting) with accuracy and dispersion
//!   bounds.
//! - [`requirement`]: analytic, tabulated and Monte-Carlo outreach
//!   requirements, plus the environmental samplers.
//! - [`lpcore`]: dense two-phase simplex and a lazy-constraint solve loop.
//! - [`contour`]: the discrete problems, the bodies built from their optima,
//!   inflation, certified bounds and convergence studies.

pub mod contour;
pub mod geometry;
pub mod lpcore;
pub mod quadrature;
pub mod requirement;
pub mod rng;

pub use contour::{CertifiedBounds, ContourSolution, DiscreteProblem, Formulation};
pub use geometry::{ConvexBody, Direction, HalfSpace};
pub use lpcore::{LinearProgram, LpSolution, LpStatus};
pub use quadrature::Quadrature;
pub use requirement::{EnvironmentalModel, MonteCarloSpec, Requirement};
