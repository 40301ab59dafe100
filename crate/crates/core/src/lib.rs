//! Exact toughness, connectivity, (P2 ∪ kP1)-freeness and hamiltonicity for
//! graphs on at most 64 vertices, a certificate-producing replay of the
//! longest-cycle argument for 4-tough (P2 ∪ kP1)-free graphs, and a corpus
//! harness for verification campaigns.

pub mod caps;
pub mod error;
pub mod graph;
pub mod hamilton;
pub mod harness;
pub mod oracle;
pub mod ratio;
pub mod replay;
pub mod structure;

pub use caps::Caps;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use ratio::{Rational, Toughness};
