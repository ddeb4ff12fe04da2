pub mod bench;
pub mod color_coding;
pub mod compression;
pub mod decomp;
pub mod error;
pub mod generate;
pub mod graph;
pub mod kernel;
pub mod localization;
pub mod matching;
pub mod oracle;
pub mod rng;
pub mod search_tree;
pub mod triples;

pub use error::{Error, Result};
pub use graph::{Graph, ProblemInstance, Vertex};
