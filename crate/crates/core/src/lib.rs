//! Cotorsion pairs and twin cotorsion pairs in finite triangulated categories over F2.
//!
//! Two models are provided. [`nakayama::Nakayama`] is the stable module
//! category of a self-injective Nakayama algebra with full morphism calculus
//! and exact cones; [`polygon::PolygonCat`] is the arc model of the cluster
//! category of type A, used for fast combinatorial enumeration.

pub mod backend;
pub mod category;
pub mod f2linalg;
pub mod matching;
pub mod mutation;
pub mod nakayama;
pub mod pairs;
pub mod polygon;
pub mod subcat;
pub mod suites;
pub mod zi;

pub use backend::{AnyBackend, BackendSpec};
pub use category::{Backend, BackendCaps, CatError, CatResult, Indec, IndecId, Mor, Obj, Tri};
pub use matching::match_backends;
pub use mutation::{BijectionReport, OrbitGraph, ZiPair};
pub use nakayama::{Nakayama, StarConfig, StarVerdict};
pub use pairs::{CotorsionPair, Engine, Tcp};
pub use polygon::{Arc, PolygonCat};
pub use subcat::{Subcat, Verdict};
pub use zi::ZIQuotient;
