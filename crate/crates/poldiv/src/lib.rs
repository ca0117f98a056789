//! Exact calculus of polyhedral divisors for algebraic torus actions.
//!
//! A torus action of complexity smaller than the dimension is encoded by a
//! divisor whose coefficients are rational polyhedra with a common tail
//! cone, attached to points of a curve or to rays of a fan. This crate
//! computes with those objects over arbitrary-precision rationals: Minkowski
//! sums, support functions, normal quasifans, properness checks, downgrades
//! of toric varieties along subtorus embeddings, fiber and orbit structure,
//! GIT chambers, and section-space dimensions. There is no floating point
//! anywhere; equal inputs give byte-equal reports.
//!
//! The geometry lives in three layers:
//!
//! * [`cone`] and [`linalg`]: double-description conversion between ray and
//!   halfspace views, Smith and Hermite normal forms, Hilbert bases.
//! * [`polyhedron`] and [`quasifan`]: tailed polyhedra in canonical vertex
//!   form, their support functions and normal quasifans, common refinements,
//!   projected face fans.
//! * [`divisor`], [`downgrade`], [`orbits`], [`sections`]: polyhedral
//!   divisors and their evaluations, properness reports, toric downgrades
//!   and curve restrictions, fiber reports, surface classification, and
//!   weight-space dimension counts.
//!
//! [`io`] fixes the JSON formats used by the `poldiv` binary.

pub mod arith;
pub mod cone;
pub mod divisor;
pub mod downgrade;
pub mod error;
pub mod io;
pub mod linalg;
pub mod orbits;
pub mod polyhedron;
pub mod quasifan;
pub mod sections;

pub use arith::{Int, Rat};
pub use cone::{hilbert_basis, Cone};
pub use divisor::{
    Base, DivisorSite, Plurifunction, PolyhedralDivisor, ProperCheck, ProperReport,
    RationalDivisor,
};
pub use downgrade::{downgrade, restrict_to_curve, DowngradeInput, DowngradeResult};
pub use error::{Error, Result};
pub use linalg::{
    kernel_basis, lattice_basis, quotient_invariants, saturated_span_basis, section_of_embedding,
    smith_normal_form, IntMatrix,
};
pub use orbits::{
    classify_k_star_surface, fiber_components, fiber_lattices, fiber_orbits, fiber_polyhedron,
    git_quasifan, is_fiber_reduced, orbit_identification, FiberComponent, FiberPoint, FiberReport,
    OrbitRecord, SurfaceClass,
};
pub use polyhedron::{polyhedron_generators, FormalTailedDifference, TailedPolyhedron};
pub use quasifan::{projected_face_fan, QuasiFan};
pub use sections::{h0_p1, hilbert_table, weight_dimension};
