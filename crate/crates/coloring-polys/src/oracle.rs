//! Brute-force ground truth: build the coloring graph explicitly and count
//! induced pattern copies in it, with no polynomial machinery involved.

use crate::graph::{automorphism_order, Graph};
use std::collections::HashMap;
use thiserror::Error;

/// Default cap on enumerated colorings (kⁿ) when building a coloring graph.
pub const DEFAULT_COLORING_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("building this coloring graph would enumerate {needed} colorings (budget {budget})")]
    BudgetExceeded { needed: u128, budget: u64 },
}

/// The coloring graph 𝒞_k(G), together with the proper coloring each vertex
/// stands for (colors 0..k−1, one entry per base vertex).
#[derive(Debug, Clone)]
pub struct ColoringGraph {
    pub graph: Graph,
    pub labels: Vec<Vec<u32>>,
}

/// Build 𝒞_k(g) explicitly: vertices are the proper k-colorings of g in
/// lexicographic order, edges join colorings differing at exactly one base
/// vertex. Refuses up front when kⁿ exceeds the budget.
pub fn build_coloring_graph_with_budget(
    g: &Graph,
    k: u32,
    budget: u64,
) -> Result<ColoringGraph, OracleError> {
    let n = g.n();
    let needed = (k as u128)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX);
    if needed > budget as u128 {
        return Err(OracleError::BudgetExceeded { needed, budget });
    }

    let mut labels: Vec<Vec<u32>> = Vec::new();
    let mut partial: Vec<u32> = Vec::with_capacity(n);
    enumerate_colorings(g, k, &mut partial, &mut labels);

    // colorings at Hamming distance 1 share the label with the differing
    // position wildcarded, so bucket by masked labels: every pair within a
    // bucket is an edge, and each edge lands in exactly one bucket
    let mut edges: Vec<(usize, usize)> = Vec::new();
    const MASK: u32 = u32::MAX;
    for pos in 0..n {
        let mut buckets: HashMap<Vec<u32>, Vec<usize>> = HashMap::new();
        for (idx, label) in labels.iter().enumerate() {
            let mut key = label.clone();
            key[pos] = MASK;
            buckets.entry(key).or_default().push(idx);
        }
        for group in buckets.values() {
            for i in 0..group.len() {
                for j in i + 1..group.len() {
                    edges.push((group[i], group[j]));
                }
            }
        }
    }
    let graph = Graph::new(labels.len(), &edges).expect("bucketed edges are in range");
    Ok(ColoringGraph { graph, labels })
}

/// [`build_coloring_graph_with_budget`] at the default budget.
pub fn build_coloring_graph(g: &Graph, k: u32) -> Result<ColoringGraph, OracleError> {
    build_coloring_graph_with_budget(g, k, DEFAULT_COLORING_BUDGET)
}

fn enumerate_colorings(g: &Graph, k: u32, partial: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let v = partial.len();
    if v == g.n() {
        out.push(partial.clone());
        return;
    }
    'colors: for c in 0..k {
        for &w in g.neighbors(v) {
            if (w as usize) < v && partial[w as usize] == c {
                continue 'colors;
            }
        }
        partial.push(c);
        enumerate_colorings(g, k, partial, out);
        partial.pop();
    }
}

/// Number of vertex subsets of `host` inducing a subgraph isomorphic to
/// `pattern`: injective maps preserving both adjacency and non-adjacency,
/// counted by backtracking and divided by |Aut(pattern)|.
pub fn count_induced(host: &Graph, pattern: &Graph) -> u64 {
    if pattern.n() > host.n() {
        return 0;
    }
    if pattern.n() == 0 {
        return 1;
    }
    // place highly-constrained pattern vertices first: greedy order by
    // number of already-placed neighbors, then by degree
    let pn = pattern.n();
    let mut order: Vec<usize> = Vec::with_capacity(pn);
    let mut placed = vec![false; pn];
    for _ in 0..pn {
        let next = (0..pn)
            .filter(|&u| !placed[u])
            .max_by_key(|&u| {
                let anchored = pattern
                    .neighbors(u)
                    .iter()
                    .filter(|&&w| placed[w as usize])
                    .count();
                (anchored, pattern.degree(u))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }

    // flat bitset adjacency: coloring graphs run to thousands of vertices,
    // where binary-searching neighbor lists per consistency check dominates
    let words = host.n().div_ceil(64);
    let mut adj = vec![0u64; host.n() * words];
    for v in 0..host.n() {
        for &w in host.neighbors(v) {
            adj[v * words + (w as usize >> 6)] |= 1 << (w & 63);
        }
    }

    let mut image = vec![usize::MAX; pn];
    let mut used = vec![false; host.n()];
    let ctx = Embedding { host, pattern, adj: &adj, words, order: &order };
    let embeddings = embed(&ctx, 0, &mut image, &mut used);
    debug_assert_eq!(embeddings % automorphism_order(pattern), 0);
    embeddings / automorphism_order(pattern)
}

struct Embedding<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    adj: &'a [u64],
    words: usize,
    order: &'a [usize],
}

impl Embedding<'_> {
    fn host_edge(&self, v: usize, w: usize) -> bool {
        self.adj[v * self.words + (w >> 6)] >> (w & 63) & 1 == 1
    }
}

fn embed(ctx: &Embedding, depth: usize, image: &mut Vec<usize>, used: &mut Vec<bool>) -> u64 {
    if depth == ctx.order.len() {
        return 1;
    }
    let u = ctx.order[depth];
    let mut total = 0;
    let try_vertex = |v: usize, image: &mut Vec<usize>, used: &mut Vec<bool>| {
        if used[v] || ctx.host.degree(v) < ctx.pattern.degree(u) {
            return 0;
        }
        for prev in &ctx.order[..depth] {
            if ctx.pattern.has_edge(u, *prev) != ctx.host_edge(v, image[*prev]) {
                return 0;
            }
        }
        image[u] = v;
        used[v] = true;
        let found = embed(ctx, depth + 1, image, used);
        used[v] = false;
        image[u] = usize::MAX;
        found
    };
    // candidates must neighbor the image of any placed pattern-neighbor of
    // u; only a vertex with no anchor yet forces a scan of the whole host
    let anchor = ctx.order[..depth]
        .iter()
        .find(|&&w| ctx.pattern.has_edge(u, w))
        .map(|&w| image[w]);
    match anchor {
        Some(a) => {
            for &v in ctx.host.neighbors(a) {
                total += try_vertex(v as usize, image, used);
            }
        }
        None => {
            for v in 0..ctx.host.n() {
                total += try_vertex(v, image, used);
            }
        }
    }
    total
}

/// Ground-truth induced count of `h` in 𝒞_k(g), by explicit construction.
pub fn oracle_count(g: &Graph, h: &Graph, k: u32) -> Result<u64, OracleError> {
    let cg = build_coloring_graph(g, k)?;
    Ok(count_induced(&cg.graph, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::{chromatic_polynomial, ChromaticCache};
    use crate::counting::count_poly;
    use crate::graph::canonical_key;
    use num::{BigInt, BigRational};

    #[test]
    fn three_colorings_of_an_edge_form_a_hexagon() {
        let cg = build_coloring_graph(&Graph::complete(2), 3).unwrap();
        assert_eq!(cg.graph.n(), 6);
        assert_eq!(cg.graph.edge_count(), 6);
        assert_eq!(canonical_key(&cg.graph), canonical_key(&Graph::cycle(6)));
    }

    #[test]
    fn coloring_graph_of_a_point_is_complete() {
        let cg = build_coloring_graph(&Graph::empty(1), 4).unwrap();
        assert_eq!(canonical_key(&cg.graph), canonical_key(&Graph::complete(4)));
    }

    #[test]
    fn too_few_colors_leave_nothing() {
        let cg = build_coloring_graph(&Graph::complete(3), 2).unwrap();
        assert_eq!(cg.graph.n(), 0);
        assert!(cg.labels.is_empty());
    }

    #[test]
    fn labels_satisfy_the_defining_invariants() {
        let g = Graph::path(3);
        let cg = build_coloring_graph(&g, 3).unwrap();
        // every label proper, pairwise distinct, lexicographically sorted
        for label in &cg.labels {
            for (u, v) in g.edges() {
                assert_ne!(label[u], label[v]);
            }
        }
        for pair in cg.labels.windows(2) {
            assert!(pair[0] < pair[1]);
        }
        // adjacency ⇔ labels differ at exactly one base vertex
        for i in 0..cg.graph.n() {
            for j in i + 1..cg.graph.n() {
                let diff = cg.labels[i]
                    .iter()
                    .zip(&cg.labels[j])
                    .filter(|(a, b)| a != b)
                    .count();
                assert_eq!(cg.graph.has_edge(i, j), diff == 1, "{i} vs {j}");
            }
        }
        // vertex count = chromatic polynomial evaluation
        let cache = ChromaticCache::new();
        let chi = chromatic_polynomial(&g, &cache);
        assert_eq!(
            chi.eval_int(3),
            BigRational::from_integer(BigInt::from(cg.graph.n() as i64))
        );
    }

    #[test]
    fn induced_counting_basics() {
        assert_eq!(count_induced(&Graph::complete(3), &Graph::complete(2)), 3);
        assert_eq!(count_induced(&Graph::cycle(6), &Graph::cycle(6)), 1);
        assert_eq!(count_induced(&Graph::cycle(4), &Graph::complete(3)), 0);
        // induced P₃ needs a non-edge, absent in a clique
        assert_eq!(count_induced(&Graph::complete(4), &Graph::path(3)), 0);
        // pattern larger than host
        assert_eq!(count_induced(&Graph::complete(2), &Graph::path(3)), 0);
        // empty pattern: one empty subset
        assert_eq!(count_induced(&Graph::complete(3), &Graph::empty(0)), 1);
        // disconnected pattern: non-edges of C₅
        assert_eq!(count_induced(&Graph::cycle(5), &Graph::empty(2)), 5);
    }

    #[test]
    fn oracle_pins() {
        assert_eq!(oracle_count(&Graph::complete(2), &Graph::cycle(6), 3).unwrap(), 1);
        assert_eq!(oracle_count(&Graph::complete(2), &Graph::complete(2), 3).unwrap(), 6);
        // induced 3-cliques of K₅: C(5,3) = 10
        assert_eq!(oracle_count(&Graph::empty(1), &Graph::complete(3), 5).unwrap(), 10);
    }

    #[test]
    fn oracle_agrees_with_polynomial_on_a_spot_check() {
        let cache = ChromaticCache::new();
        let g = Graph::path(3);
        for (h, k) in [
            (Graph::complete(3), 4u32),
            (Graph::path(4), 3),
            (Graph::cycle(4), 3),
            (Graph::empty(2), 3),
        ] {
            let poly = count_poly(&g, &h, &cache).unwrap();
            let brute = oracle_count(&g, &h, k).unwrap();
            assert_eq!(
                poly.eval_int(k as i64),
                BigRational::from_integer(BigInt::from(brute)),
                "{h:?} at k = {k}"
            );
        }
    }

    #[test]
    fn budget_is_enforced() {
        let err = build_coloring_graph(&Graph::path(10), 4).unwrap_err();
        assert_eq!(
            err,
            OracleError::BudgetExceeded { needed: 1_048_576, budget: 1_000_000 }
        );
        assert!(build_coloring_graph_with_budget(&Graph::path(10), 4, 2_000_000).is_ok());
    }
}
