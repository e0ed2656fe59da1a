//! Spectral moments of uniform hypergraphs.
//!
//! The crate computes the traces `S_d` of the adjacency tensor of hypertrees
//! and linear unicyclic hypergraphs with two independent engines (closed
//! forms over small-pattern counts, and a weighted-subgraph expansion),
//! compares hypergraphs in the lexicographic order of their moment
//! sequences, enumerates small families up to isomorphism, and implements
//! the edge-moving transformations used to locate extremal members.

pub mod canon;
pub mod census;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod hypergraph;
pub mod moments;
pub mod order;
pub mod transform;

pub use canon::{canonical_form, canonical_key, isomorphic, CanonicalKey};
pub use error::{Error, Result};
pub use family::{coalesce, make_family, Attachment, FamilyKind, FamilySpec};
pub use hypergraph::{DegreeProfile, Girth, Hypergraph, StructureClass, Vertex};
