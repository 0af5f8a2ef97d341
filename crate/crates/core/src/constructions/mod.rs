//! Explicit factorizations and hypergraphs.

mod plane_colorings;
mod triple;
mod turan;
pub mod witness;

pub use plane_colorings::{coloring_t17, coloring_t18, coloring_t19a, plane_from_coloring};
pub use triple::{
    bipartite_triple_system, extend_star, fano, octahedron_system, parity_block, parity_triple_system, profile, tower,
    CliqueProfile,
};
pub use turan::{turan_edges, turan_factorization};
pub use witness::{witness_upper, witness_upper_with, Witness, WitnessStore};
