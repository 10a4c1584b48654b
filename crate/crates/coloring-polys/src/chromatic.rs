//! Chromatic polynomials by deletion–contraction with closed-form shortcuts
//! and a cache keyed by canonical form, so isomorphic subproblems are solved
//! once per process rather than once per call site.

use crate::graph::{canonical_key, CanonicalKey, Graph};
use crate::poly::{falling_factorial, RationalPoly};
use num::{BigInt, BigRational};
use std::collections::HashMap;
use std::sync::Mutex;

/// Shared memo for chromatic polynomials, keyed by canonical form. One cache
/// can (and should) be reused across many graphs: deletion–contraction
/// subproblems repeat heavily between related inputs.
#[derive(Default)]
pub struct ChromaticCache {
    inner: Mutex<HashMap<CanonicalKey, RationalPoly>>,
}

impl ChromaticCache {
    pub fn new() -> ChromaticCache {
        ChromaticCache::default()
    }

    /// Number of cached polynomials (diagnostic).
    pub fn len(&self) -> usize {
        self.inner.lock().expect("cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn get(&self, key: &CanonicalKey) -> Option<RationalPoly> {
        self.inner.lock().expect("cache poisoned").get(key).cloned()
    }

    fn insert(&self, key: CanonicalKey, poly: RationalPoly) {
        self.inner.lock().expect("cache poisoned").insert(key, poly);
    }
}

/// The chromatic polynomial of `g`: the polynomial whose value at every
/// non-negative integer k is the number of proper k-colorings.
pub fn chromatic_polynomial(g: &Graph, cache: &ChromaticCache) -> RationalPoly {
    let mut result = RationalPoly::one();
    for (comp, _) in g.connected_components() {
        result = &result * &chromatic_connected(&comp, cache);
    }
    result
}

fn chromatic_connected(g: &Graph, cache: &ChromaticCache) -> RationalPoly {
    debug_assert!(g.is_connected());
    let n = g.n();
    let m = g.edge_count();

    // closed forms come before the cache, so trivial graphs (in particular
    // everything with n ≤ 2) never take a canonical-labeling detour
    if m == 0 {
        return RationalPoly::monomial(n, num::One::one());
    }
    if m == n * (n - 1) / 2 {
        return falling_factorial(n);
    }
    if m == n - 1 {
        // connected with n − 1 edges: a tree, k(k−1)^(n−1)
        let k = RationalPoly::x();
        let km1 = RationalPoly::from_ints(&[-1, 1]);
        let mut p = k;
        for _ in 0..n - 1 {
            p = &p * &km1;
        }
        return p;
    }

    let key = canonical_key(g);
    if let Some(hit) = cache.get(&key) {
        return hit;
    }

    // delete–contract on an edge with maximal endpoint degree sum, taking
    // the lexicographically first such edge: both branches lose density fast
    let mut best: Option<(usize, usize, usize)> = None;
    for (a, b) in g.edges() {
        let s = g.degree(a) + g.degree(b);
        if best.map_or(true, |(bs, _, _)| s > bs) {
            best = Some((s, a, b));
        }
    }
    let (_, u, v) = best.expect("graph has an edge");

    let deleted = delete_edge(g, u, v);
    let contracted = contract_edge(g, u, v);
    let p = &chromatic_polynomial(&deleted, cache) - &chromatic_polynomial(&contracted, cache);

    cache.insert(key, p.clone());
    p
}

fn delete_edge(g: &Graph, u: usize, v: usize) -> Graph {
    let edges: Vec<_> = g.edges().filter(|&e| e != (u, v)).collect();
    Graph::new(g.n(), &edges).expect("deletion preserves validity")
}

/// Merge `v` into `u` (u < v), dropping parallel edges and the loop.
fn contract_edge(g: &Graph, u: usize, v: usize) -> Graph {
    debug_assert!(u < v && g.has_edge(u, v));
    let map = |w: usize| {
        if w == v {
            u
        } else if w > v {
            w - 1
        } else {
            w
        }
    };
    let mut edges = Vec::with_capacity(g.edge_count());
    for (a, b) in g.edges() {
        let (ma, mb) = (map(a), map(b));
        if ma != mb {
            edges.push((ma, mb));
        }
    }
    Graph::new(g.n() - 1, &edges).expect("contraction preserves validity")
}

/// k(k−1)^(n−1), the chromatic polynomial of every tree on n vertices.
pub fn tree_chromatic(n: usize) -> RationalPoly {
    assert!(n >= 1);
    let mut p = RationalPoly::x();
    let km1 = RationalPoly::from_ints(&[-1, 1]);
    for _ in 0..n - 1 {
        p = &p * &km1;
    }
    p
}

/// (k−1)^n + (−1)^n (k−1), the chromatic polynomial of the cycle C_n (n ≥ 3).
pub fn cycle_chromatic(n: usize) -> RationalPoly {
    assert!(n >= 3);
    let km1 = RationalPoly::from_ints(&[-1, 1]);
    let mut p = RationalPoly::one();
    for _ in 0..n {
        p = &p * &km1;
    }
    let sign = if n % 2 == 0 { 1 } else { -1 };
    &p + &km1.scale(&BigRational::from_integer(BigInt::from(sign)))
}
