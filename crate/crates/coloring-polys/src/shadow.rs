//! Shadow graphs: the auxiliary graphs whose proper k-colorings biject with
//! (anchored) induced pattern copies in the coloring graph of the host.
//!
//! Given a host G, an ordered tuple x = (x_1, …, x_d) of distinct host
//! vertices, and palette sizes (r_1, …, r_d), the shadow graph is built by
//! deleting x, keeping the induced edges among the survivors, standing up a
//! clique of r_i fresh vertices for coordinate i whose members all attach
//! to N_G(x_i) \ x, and wiring cliques of G-adjacent coordinates together —
//! either completely (the product construction) or through the edges chosen
//! by a state map. Vertices are laid out survivors-first (ascending host
//! id), then clique members grouped by coordinate.

use crate::graph::Graph;
use crate::statemap::StateMap;

/// Where a shadow-graph vertex came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexOrigin {
    /// A host vertex that survived the deletion of the tuple.
    Original(usize),
    /// Member `index` (0-based) of the clique for tuple coordinate `coord`.
    CliqueMember { coord: usize, index: u32 },
}

/// A shadow graph together with the origin of each of its vertices.
#[derive(Debug, Clone)]
pub struct ShadowGraph {
    pub graph: Graph,
    pub provenance: Vec<VertexOrigin>,
}

impl ShadowGraph {
    /// Shadow index of a surviving host vertex, if it survived.
    pub fn survivor_index(&self, host_vertex: usize) -> Option<usize> {
        self.provenance
            .iter()
            .position(|&o| o == VertexOrigin::Original(host_vertex))
    }

    /// Shadow index of clique member (coord, index).
    pub fn clique_index(&self, coord: usize, index: u32) -> Option<usize> {
        self.provenance
            .iter()
            .position(|&o| o == VertexOrigin::CliqueMember { coord, index })
    }
}

enum CrossEdges<'a> {
    /// Complete join between cliques of G-adjacent coordinates.
    Join,
    /// One edge v_{i,s_i} — v_{j,s_j} per state s and G-adjacent pair (i, j).
    States(&'a [Vec<u32>]),
}

fn build(g: &Graph, x: &[usize], sizes: &[u32], cross: CrossEdges) -> ShadowGraph {
    let d = x.len();
    assert!(d >= 1, "tuple must be nonempty");
    assert_eq!(sizes.len(), d, "one palette size per coordinate");
    assert!(sizes.iter().all(|&r| r >= 1), "palette sizes must be positive");
    for (i, &v) in x.iter().enumerate() {
        assert!(v < g.n(), "tuple vertex {v} out of range");
        assert!(!x[i + 1..].contains(&v), "tuple vertices must be distinct");
    }

    let in_tuple = |v: usize| x.contains(&v);
    let survivors: Vec<usize> = (0..g.n()).filter(|&v| !in_tuple(v)).collect();
    let mut shadow_of = vec![usize::MAX; g.n()];
    for (i, &v) in survivors.iter().enumerate() {
        shadow_of[v] = i;
    }
    let mut provenance: Vec<VertexOrigin> =
        survivors.iter().map(|&v| VertexOrigin::Original(v)).collect();
    let mut clique_start = Vec::with_capacity(d);
    for (i, &r) in sizes.iter().enumerate() {
        clique_start.push(provenance.len());
        for j in 0..r {
            provenance.push(VertexOrigin::CliqueMember { coord: i, index: j });
        }
    }
    let n = provenance.len();
    debug_assert_eq!(n, g.n() - d + sizes.iter().sum::<u32>() as usize);

    let mut edges: Vec<(usize, usize)> = Vec::new();
    // surviving host edges
    for (u, v) in g.edges() {
        if !in_tuple(u) && !in_tuple(v) {
            edges.push((shadow_of[u], shadow_of[v]));
        }
    }
    // clique members adopt the tuple vertex's surviving neighborhood, and
    // each clique is complete
    for i in 0..d {
        let start = clique_start[i];
        let r = sizes[i] as usize;
        for &nb in g.neighbors(x[i]) {
            let nb = nb as usize;
            if !in_tuple(nb) {
                for j in 0..r {
                    edges.push((shadow_of[nb], start + j));
                }
            }
        }
        for j1 in 0..r {
            for j2 in j1 + 1..r {
                edges.push((start + j1, start + j2));
            }
        }
    }
    // cross edges between cliques of G-adjacent coordinates
    for i in 0..d {
        for j in i + 1..d {
            if !g.has_edge(x[i], x[j]) {
                continue;
            }
            match cross {
                CrossEdges::Join => {
                    for a in 0..sizes[i] as usize {
                        for b in 0..sizes[j] as usize {
                            edges.push((clique_start[i] + a, clique_start[j] + b));
                        }
                    }
                }
                CrossEdges::States(states) => {
                    for s in states {
                        edges.push((
                            clique_start[i] + s[i] as usize - 1,
                            clique_start[j] + s[j] as usize - 1,
                        ));
                    }
                }
            }
        }
    }

    let graph = Graph::new(n, &edges).expect("shadow edges are valid");
    ShadowGraph { graph, provenance }
}

/// The shadow for the single-edge pattern: host vertex `v` duplicated as an
/// adjacent twin. n + 1 vertices and |E| + deg(v) + 1 edges.
pub fn shadow_p2(g: &Graph, v: usize) -> ShadowGraph {
    build(g, &[v], &[2], CrossEdges::Join)
}

/// The shadow replacing `v` by an r-clique over its neighborhood.
pub fn shadow_clique(g: &Graph, v: usize, r: u32) -> ShadowGraph {
    build(g, &[v], &[r], CrossEdges::Join)
}

/// The product shadow: cliques of the given sizes, completely joined
/// between G-adjacent tuple coordinates.
pub fn shadow_product(g: &Graph, x: &[usize], sizes: &[u32]) -> ShadowGraph {
    build(g, x, sizes, CrossEdges::Join)
}

/// The general shadow for a state map: cross edges are exactly the state
/// edges v_{i,s_i} — v_{j,s_j} over states s and G-adjacent pairs (i, j).
pub fn shadow_general(g: &Graph, x: &[usize], map: &StateMap) -> ShadowGraph {
    assert_eq!(x.len(), map.width(), "tuple length must equal map width");
    build(g, x, &map.palette_sizes, CrossEdges::States(map.states()))
}
