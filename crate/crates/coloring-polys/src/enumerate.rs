//! Exhaustive enumeration of small graphs and trees up to isomorphism, for
//! sweep-style verification.

use crate::graph::{canonical_key, CanonicalKey, Graph};
use std::collections::HashSet;

/// All isomorphism classes of simple graphs on exactly `n` vertices, in a
/// deterministic order. Every class on n vertices is an extension of one on
/// n − 1 (delete any vertex), so augmenting each smaller class by one new
/// vertex with every possible neighborhood finds them all.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut classes = vec![Graph::empty(0)];
    for step in 1..=n {
        let mut seen: HashSet<CanonicalKey> = HashSet::new();
        let mut next: Vec<Graph> = Vec::new();
        for g in &classes {
            let base_edges: Vec<(usize, usize)> = g.edges().collect();
            for mask in 0u64..(1u64 << (step - 1)) {
                let mut edges = base_edges.clone();
                for v in 0..step - 1 {
                    if mask & (1 << v) != 0 {
                        edges.push((v, step - 1));
                    }
                }
                let candidate = Graph::new(step, &edges).expect("augmented edges are valid");
                if seen.insert(canonical_key(&candidate)) {
                    next.push(candidate);
                }
            }
        }
        classes = next;
    }
    classes.sort_by_cached_key(canonical_key);
    classes
}

/// All isomorphism classes of trees on exactly `n` vertices, in a
/// deterministic order. Every tree on n ≥ 2 vertices is a leaf-extension of
/// a tree on n − 1 vertices.
pub fn all_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut classes = vec![Graph::empty(1)];
    for step in 2..=n {
        let mut seen: HashSet<CanonicalKey> = HashSet::new();
        let mut next: Vec<Graph> = Vec::new();
        for t in &classes {
            let base_edges: Vec<(usize, usize)> = t.edges().collect();
            for attach in 0..step - 1 {
                let mut edges = base_edges.clone();
                edges.push((attach, step - 1));
                let candidate = Graph::new(step, &edges).expect("leaf edge is valid");
                debug_assert!(candidate.is_tree());
                if seen.insert(canonical_key(&candidate)) {
                    next.push(candidate);
                }
            }
        }
        classes = next;
    }
    classes.sort_by_cached_key(canonical_key);
    classes
}
