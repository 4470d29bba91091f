pub mod bitset;
pub mod canon;
pub mod cliques;
pub mod complex;
pub mod error;
pub mod facets;
pub mod generators;
pub mod graph6;
pub mod graph;
pub mod math;
pub mod search;
pub mod shelling;
