//! Simple undirected graphs with dense vertex indices 0..n, plus the
//! substrate the rest of the crate stands on: a graph6 codec, canonical
//! forms, automorphism counting, connected orderings, and component
//! decomposition.

mod canon;
mod graph6;

pub use canon::{automorphism_order, canonical_key, canonical_labeling, CanonicalKey};
pub use graph6::{encode_graph6, parse_graph6, Graph6Error};

use thiserror::Error;

/// Errors from graph construction and graph-shaped preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
}

/// A simple undirected graph. Vertices are `0..n`; adjacency is stored as
/// sorted neighbor lists. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Build a graph on `n` vertices from an edge list. Duplicate edges are
    /// collapsed; self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// The complete graph K_n.
    pub fn complete(n: usize) -> Graph {
        let adj = (0..n)
            .map(|v| (0..n as u32).filter(|&u| u != v as u32).collect())
            .collect();
        Graph { adj }
    }

    /// The path P_n on `n` vertices (n − 1 edges).
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    /// The cycle C_n (requires n ≥ 3 to be simple; smaller n just yields P_n).
    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::new(n, &edges).expect("cycle edges are valid")
    }

    /// The star K_{1,n−1}: vertex 0 is the center.
    pub fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Graph::new(n, &edges).expect("star edges are valid")
    }

    /// The d-dimensional hypercube Q_d on 2^d vertices; vertices are bit
    /// strings, adjacent when they differ in exactly one bit.
    pub fn hypercube(d: usize) -> Graph {
        let n = 1usize << d;
        let mut edges = Vec::new();
        for v in 0..n {
            for b in 0..d {
                let u = v ^ (1 << b);
                if u > v {
                    edges.push((v, u));
                }
            }
        }
        Graph::new(n, &edges).expect("hypercube edges are valid")
    }

    /// Disjoint union; `other`'s vertices are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n() as u32;
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&u| u + off).collect::<Vec<_>>()),
        );
        Graph { adj }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    /// Degree of a vertex.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbor list of a vertex.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    /// Adjacency test (binary search on the sorted neighbor list).
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// All edges as (u, v) pairs with u < v, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .map(move |&v| (u, v as usize))
                .filter(|&(u, v)| u < v)
        })
    }

    /// Relabel by `perm`, where `perm[v]` is the new index of vertex `v`.
    /// `perm` must be a permutation of 0..n.
    pub fn relabel(&self, perm: &[u32]) -> Graph {
        debug_assert_eq!(perm.len(), self.n());
        let mut adj = vec![Vec::new(); self.n()];
        for (v, list) in self.adj.iter().enumerate() {
            let img = perm[v] as usize;
            adj[img] = list.iter().map(|&u| perm[u as usize]).collect();
            adj[img].sort_unstable();
        }
        Graph { adj }
    }

    /// Induced subgraph on `verts` (distinct); vertex i of the result is
    /// `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(verts.len(), &edges).expect("induced edges are valid")
    }

    /// Adjacency bitmask rows for small-graph algorithms. Hard cap at 128
    /// vertices; the exact algorithms that need this (canonical labeling,
    /// deletion–contraction) are only meaningful well below that size.
    pub(crate) fn bitrows(&self) -> Vec<u128> {
        assert!(
            self.n() <= 128,
            "graph on {} vertices exceeds the 128-vertex limit of exact small-graph algorithms",
            self.n()
        );
        let mut rows = vec![0u128; self.n()];
        for (v, list) in self.adj.iter().enumerate() {
            for &u in list {
                rows[v] |= 1u128 << u;
            }
        }
        rows
    }

    /// Connected components, each as a graph on its own vertices plus the
    /// map from component indices back to original vertex ids, in ascending
    /// order of their smallest original vertex.
    pub fn connected_components(&self) -> Vec<(Graph, Vec<usize>)> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut verts = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < verts.len() {
                let v = verts[head];
                head += 1;
                for &u in &self.adj[v] {
                    if !seen[u as usize] {
                        seen[u as usize] = true;
                        verts.push(u as usize);
                    }
                }
            }
            verts.sort_unstable();
            out.push((self.induced(&verts), verts));
        }
        out
    }

    /// True when the graph is connected (and nonempty).
    pub fn is_connected(&self) -> bool {
        self.n() >= 1 && self.connected_components().len() == 1
    }

    /// A deterministic connected ordering: breadth-first traversal from the
    /// canonically smallest vertex, neighbor ties broken by canonical
    /// position. Every vertex after the first is adjacent to an earlier one.
    pub fn connected_ordering(&self) -> Result<Vec<usize>, GraphError> {
        if self.n() == 0 {
            return Err(GraphError::Empty);
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let labeling = canonical_labeling(self);
        let start = (0..self.n())
            .find(|&v| labeling[v] == 0)
            .expect("labeling is a permutation");
        let mut order = vec![start];
        let mut seen = vec![false; self.n()];
        seen[start] = true;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            let mut next: Vec<usize> = self.adj[v]
                .iter()
                .map(|&u| u as usize)
                .filter(|&u| !seen[u])
                .collect();
            next.sort_by_key(|&u| labeling[u]);
            for u in next {
                seen[u] = true;
                order.push(u);
            }
        }
        debug_assert_eq!(order.len(), self.n());
        Ok(order)
    }

    /// True iff the graph is connected with exactly n − 1 edges.
    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.is_connected() && self.edge_count() == self.n() - 1
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_validates() {
        assert!(Graph::new(3, &[(0, 1), (1, 2)]).is_ok());
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange(2, 2))
        );
        assert_eq!(Graph::new(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        // duplicate edges collapse
        let g = Graph::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn basic_accessors() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degree(1), 2);
        assert!(g.has_edge(0, 3));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn components_partition_vertices() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(2));
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].0.n(), 3);
        assert_eq!(comps[0].1, vec![0, 1, 2]);
        assert_eq!(comps[1].0.n(), 2);
        assert_eq!(comps[1].1, vec![3, 4]);

        let conn = Graph::cycle(5);
        let comps = conn.connected_components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].0, conn);

        assert!(Graph::empty(0).connected_components().is_empty());
    }

    #[test]
    fn connected_ordering_has_earlier_neighbors() {
        for g in [Graph::complete(2), Graph::star(4), Graph::cycle(6), Graph::path(5)] {
            let order = g.connected_ordering().unwrap();
            assert_eq!(order.len(), g.n());
            for k in 1..order.len() {
                assert!(
                    order[..k].iter().any(|&e| g.has_edge(order[k], e)),
                    "vertex {} of {:?} has no earlier neighbor",
                    order[k],
                    g
                );
            }
            // deterministic
            assert_eq!(order, g.connected_ordering().unwrap());
        }
    }

    #[test]
    fn connected_ordering_star_starts_at_center() {
        let order = Graph::star(4).connected_ordering().unwrap();
        assert_eq!(order[0], 0, "the star's center must lead the ordering");
    }

    #[test]
    fn connected_ordering_rejects_bad_inputs() {
        assert_eq!(Graph::empty(0).connected_ordering(), Err(GraphError::Empty));
        assert_eq!(
            Graph::empty(2).connected_ordering(),
            Err(GraphError::Disconnected)
        );
    }

    #[test]
    fn tree_recognition() {
        assert!(Graph::path(5).is_tree());
        assert!(!Graph::cycle(6).is_tree());
        assert!(Graph::empty(1).is_tree());
        assert!(!Graph::empty(2).is_tree());
        assert!(Graph::star(7).is_tree());
    }

    #[test]
    fn hypercube_shapes() {
        let q3 = Graph::hypercube(3);
        assert_eq!(q3.n(), 8);
        assert_eq!(q3.edge_count(), 12);
        assert!(q3.degree(0) == 3);
        // Q_2 is the 4-cycle
        assert_eq!(canonical_key(&Graph::hypercube(2)), canonical_key(&Graph::cycle(4)));
    }

    #[test]
    fn induced_subgraph_keeps_order() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.induced(&[3, 2, 0]);
        assert_eq!(h.n(), 3);
        // edge 2-3 becomes 0-1; vertex 0 is isolated in the induced graph
        assert!(h.has_edge(0, 1));
        assert_eq!(h.edge_count(), 1);
    }
}
