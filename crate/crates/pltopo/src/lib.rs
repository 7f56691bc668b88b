//! Combinatorial topology toolkit for finite simplicial complexes.
//!
//! The crate models a closed triangulated manifold as a face-closed set of
//! simplices and provides the machinery to
//!
//! - validate the closed-pseudomanifold, connectivity, orientability and
//!   geometric intersection properties ([`complex`]),
//! - measure k-cell distances between vertices ([`metrics`]),
//! - refine cells by barycentric subdivision and edge splits
//!   ([`subdivision`]),
//! - separate a closed m-manifold along an (m-1)-cycle into its two sides
//!   ([`separation`]),
//! - represent and search loop contractions as gradually varied curve
//!   sequences ([`contraction`]),
//! - project a contraction sequence into one side of a separation
//!   ([`projection`]), and
//! - certify sphere-ness by distance-balanced shelling ([`shelling`]).
//!
//! File formats, reports and the `pltopo` command line live in [`io`] and
//! [`cli`].

pub mod cell;
// pub mod cli;
pub mod complex;
pub mod contraction;
pub mod geom;
// pub mod io;
pub mod metrics;
// pub mod projection;
// pub mod separation;
// pub mod shelling;
pub mod subdivision;

// pub use cell::{Cell, CellError, VertexId};
// pub use complex::{simplex_boundary, seven_vertex_torus, Complex, Subcomplex, ValidationReport};
// pub use contraction::{ContractionSequence, Curve};
// pub use metrics::DistanceField;
// pub use separation::{SeparationResult, SurfaceCycle};
// pub use shelling::ShellingTrace;
// pub use subdivision::SubdivisionRecord;
