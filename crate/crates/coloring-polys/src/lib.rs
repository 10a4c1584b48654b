//! Exact polynomials that count induced subgraphs of coloring graphs.
//!
//! For a graph G and k colors, the coloring graph 𝒞_k(G) has the proper
//! k-colorings of G as vertices, two adjacent when they differ at exactly
//! one vertex of G. For every pattern graph H, the number of induced copies
//! of H in 𝒞_k(G) is a polynomial in k; this crate computes those
//! polynomials exactly — via shadow-graph constructions whose chromatic
//! polynomials assemble the count — together with closed forms for trees,
//! degree-sequence invariants, a brute-force oracle for cross-checking, and
//! small-graph enumeration.

pub mod chromatic;
pub mod counting;
pub mod enumerate;
pub mod graph;
pub mod oracle;
pub mod poly;
pub mod shadow;
pub mod statemap;
pub mod trees;

pub use chromatic::{chromatic_polynomial, ChromaticCache};
pub use counting::{
    clique_poly, count_poly, count_poly_connected, embedding_cover_count, enumerate_j,
    hexagon_poly, pairs_poly, product_clique_poly, CountError, DISCONNECTED_PATTERN_LIMIT,
};
pub use enumerate::{all_graphs, all_trees};
pub use graph::{
    automorphism_order, canonical_key, canonical_labeling, encode_graph6, parse_graph6,
    CanonicalKey, Graph, Graph6Error, GraphError,
};
pub use oracle::{
    build_coloring_graph, build_coloring_graph_with_budget, count_induced, oracle_count,
    ColoringGraph, OracleError, DEFAULT_COLORING_BUDGET,
};
pub use poly::{falling_factorial, PolyParseError, RationalPoly};
pub use shadow::{shadow_clique, shadow_general, shadow_p2, shadow_product, ShadowGraph, VertexOrigin};
pub use statemap::{enumerate_state_maps, is_valid_state_map, StateMap, StateMapError};
pub use trees::{
    gds_multiset, recover_degrees_from_pair_sums, tree_hypercube_poly, tree_pairs_poly,
    tree_square_poly, GDSEntry, TreeError,
};
