//! Numerical verification of the para-contact geometry of the thermodynamic
//! phase space.
//!
//! The crate models the (2n+1)-dimensional phase space carrying the contact
//! form `eta = dw - p_a dq^a`, its Reeb field, the natural pseudo-Riemannian
//! metric of signature (n+1, n), the almost-para-contact tensor, the
//! Levi-Civita and canonical connections, and the statistical-mechanics layer
//! (Gibbs models, Fisher-Rao metrics, relative entropy) that this geometry
//! encodes. Every structural identity is checked numerically at configurable
//! dimension and tolerance; the hyperbolic Heisenberg group is built alongside
//! as the flat local model and run through the same machinery.
//!
//! All numerics are generic over the scalar type through [`scalar::Real`]
//! (`f32` or `f64`); the verification suites run at `f64`.

pub mod chart;
pub mod connection;
pub mod curvature;
pub mod error;
pub mod frames;
pub mod geometry;
pub mod heisenberg;
pub mod invariants;
pub mod linalg;
pub mod numerics;
pub mod report;
pub mod scalar;
pub mod statmech;
pub mod suites;

pub use chart::ChartPoint;
pub use error::{Error, Result};
pub use frames::{CoframeField, CoframeKind, FrameField, FrameKind, VectorField};
pub use linalg::{Mat, Tensor3, Tensor4};
pub use numerics::{
    QuadKind, QuadratureSpec, SampleRanges, SampleSpace, SignatureCount, StepScheme,
};
pub use scalar::Real;

/// Chart point at the default `f64` working precision.
pub type ChartPoint64 = ChartPoint<f64>;
/// Dense matrix at the default `f64` working precision.
pub type Mat64 = Mat<f64>;
/// Group element of the hyperbolic Heisenberg group at `f64` precision.
pub type GroupElement64 = heisenberg::GroupElement<f64>;
/// Gibbs model at the default `f64` working precision.
pub type GibbsModel64 = statmech::GibbsModel<f64>;
