//! Maximal monochromatic cliques in factorizations of complete uniform
//! hypergraphs: enumeration, scoring, explicit constructions, bounds, exact
//! and heuristic search, and the graph classes with `c + c̄ <= n + 2`.

pub mod bounds;
pub mod cliques;
pub mod colex;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod field;
pub mod graph_class;
pub mod hypergraph;
pub mod plane;
pub mod search;
pub mod vertex_set;

pub use bounds::{best_known, BoundRecord};
pub use cliques::{degrees, enumerate_maximal_anticliques, enumerate_maximal_cliques, CliqueReport};
pub use coloring::{substitute, EdgeColoring, ScoreReport};
pub use error::{Error, Result};
pub use hypergraph::UniformHypergraph;
pub use plane::ProjectivePlane;
pub use vertex_set::VertexSet;
