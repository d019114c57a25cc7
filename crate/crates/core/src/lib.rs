//! Braid-index bounds and certificates for oriented link diagrams.
//!
//! The crate reads PD codes, builds Seifert circle decompositions and the
//! weighted Seifert graph, computes HOMFLY polynomials by skein recursion
//! and by castle-guided resolving trees, and brackets the braid index
//! between the Morton-Franks-Williams bound and upper bounds certified by
//! overpass-rerouting merges.

pub mod braid;
pub mod braidindex;
pub mod castle;
pub mod corpus;
pub mod diagram;
pub mod error;
pub mod poly;
pub mod seifert;
pub mod skein;
pub mod verify;

pub use diagram::{Arc, Crossing, LinkDiagram, Sign, Strand};
pub use error::{CastleError, DiagramError, MergeError, PolyParseError, SkeinError};
pub use poly::LaurentPoly2;
