//! Graphs: encodings, enumeration, parameters, oracles and the concrete
//! algorithm families and reductions.

pub mod algorithms;
pub mod canon;
pub mod graph;
pub mod graph6;
pub mod oracles;
pub mod params;
pub mod problems;
pub mod wl;

pub use canon::{canonical_form, corpus, corpus_range, graphs_of_order};
pub use graph::Graph;
pub use graph6::{decode_graph6, encode_graph6, parse_edge_list};
pub use problems::{GraphNatPair, GraphPair};
