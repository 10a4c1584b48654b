//! Exact polynomials counting induced pattern copies in coloring graphs.
//!
//! For a host G and pattern H, the number of induced copies of H in the
//! coloring graph 𝒞_k(G) is a polynomial in k. Connected patterns are
//! counted by summing chromatic polynomials of shadow graphs over all state
//! maps and ordered host tuples, divided by |Aut(H)|. Disconnected patterns
//! reduce to connected ones through the product identity
//!
//!   π^(H') · π^(H'') = Σ_{U} f_U · π^(U)
//!
//! where U ranges over the ways an induced H' and an induced H'' can cover
//! a graph, and f_U counts the ordered covers of U; solving for the term
//! U = H' ⊔ H'' expresses π of a disconnected pattern by strictly smaller
//! or strictly denser patterns, so the recursion terminates.

use crate::chromatic::{chromatic_polynomial, ChromaticCache};
use crate::graph::{automorphism_order, canonical_key, CanonicalKey, Graph};
use crate::poly::RationalPoly;
use crate::shadow::{shadow_clique, shadow_general, shadow_p2, shadow_product};
use crate::statemap::{enumerate_state_maps, StateMap};
use num::{BigInt, BigRational, One};
use std::collections::HashMap;
use thiserror::Error;

/// Disconnected patterns are capped: the cover enumeration is exponential
/// in the vertex count, and 9 comfortably covers every pattern of interest.
pub const DISCONNECTED_PATTERN_LIMIT: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("pattern is disconnected")]
    DisconnectedPattern,
    #[error("pattern too large: disconnected patterns are limited to {max} vertices, got {got}")]
    PatternTooLarge { got: usize, max: usize },
}

fn scale_div(p: &RationalPoly, denom: u64) -> RationalPoly {
    debug_assert!(denom > 0);
    p.scale(&BigRational::new(BigInt::one(), BigInt::from(denom)))
}

fn for_each_ordered_tuple(n: usize, d: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(n: usize, d: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == d {
            f(cur);
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, d, cur, used, f);
                cur.pop();
                used[v] = false;
            }
        }
    }
    if d > n {
        return;
    }
    rec(n, d, &mut Vec::with_capacity(d), &mut vec![false; n], f);
}

/// Polynomial counting edges of 𝒞_k(g): half the sum, over host vertices,
/// of the chromatic polynomial of the twin shadow.
pub fn pairs_poly(g: &Graph, cache: &ChromaticCache) -> RationalPoly {
    let mut acc = RationalPoly::zero();
    for v in 0..g.n() {
        acc = &acc + &chromatic_polynomial(&shadow_p2(g, v).graph, cache);
    }
    scale_div(&acc, 2)
}

/// Polynomial counting r-cliques of 𝒞_k(g), r ≥ 2: the chromatic
/// polynomials of r-clique shadows summed over host vertices, over r!.
pub fn clique_poly(g: &Graph, r: u32, cache: &ChromaticCache) -> RationalPoly {
    assert!(r >= 2, "clique size must be at least 2");
    let mut acc = RationalPoly::zero();
    for v in 0..g.n() {
        acc = &acc + &chromatic_polynomial(&shadow_clique(g, v, r).graph, cache);
    }
    let mut fact = 1u64;
    for i in 2..=r as u64 {
        fact *= i;
    }
    scale_div(&acc, fact)
}

/// Polynomial counting induced copies of the clique product
/// K_{r_1} □ ⋯ □ K_{r_d} in 𝒞_k(g). All sizes must be ≥ 2; when d exceeds
/// the host order there are no tuples and the zero polynomial is returned.
pub fn product_clique_poly(g: &Graph, sizes: &[u32], cache: &ChromaticCache) -> RationalPoly {
    assert!(!sizes.is_empty(), "at least one clique size required");
    assert!(sizes.iter().all(|&r| r >= 2), "clique sizes must be at least 2");
    let d = sizes.len();
    let mut acc = RationalPoly::zero();
    for_each_ordered_tuple(g.n(), d, &mut |x| {
        acc = &acc + &chromatic_polynomial(&shadow_product(g, x, sizes).graph, cache);
    });
    // |Aut| of the clique product: value permutations within each
    // coordinate, times permutations of coordinates with equal size
    let mut aut = 1u64;
    for &r in sizes {
        for i in 2..=r as u64 {
            aut *= i;
        }
    }
    let mut sorted = sizes.to_vec();
    sorted.sort_unstable();
    let mut run = 1u64;
    for i in 1..=sorted.len() {
        if i < sorted.len() && sorted[i] == sorted[i - 1] {
            run += 1;
        } else {
            for j in 2..=run {
                aut *= j;
            }
            run = 1;
        }
    }
    scale_div(&acc, aut)
}

/// The two state-map families of the hexagon C_6 under its cycle ordering.
fn hexagon_families() -> (StateMap, StateMap) {
    let c6 = Graph::cycle(6);
    let ordering = vec![0, 1, 2, 3, 4, 5];
    let pair = StateMap::checked(
        &c6,
        ordering.clone(),
        [[1, 1], [2, 1], [2, 2], [3, 2], [3, 3], [1, 3]]
            .iter()
            .map(|t| t.to_vec())
            .collect(),
    )
    .expect("pair family is valid");
    let triple = StateMap::checked(
        &c6,
        ordering,
        [
            [1, 1, 1],
            [2, 1, 1],
            [2, 2, 1],
            [2, 2, 2],
            [1, 2, 2],
            [1, 1, 2],
        ]
        .iter()
        .map(|t| t.to_vec())
        .collect(),
    )
    .expect("triple family is valid");
    (pair, triple)
}

/// Polynomial counting induced hexagons (C_6) in 𝒞_k(g), via the two fixed
/// state-map families (width 2 with palettes (3,3), width 3 with palettes
/// (2,2,2)) summed over ordered host pairs and triples, divided by 12.
pub fn hexagon_poly(g: &Graph, cache: &ChromaticCache) -> RationalPoly {
    let (pair, triple) = hexagon_families();
    let mut acc = RationalPoly::zero();
    for_each_ordered_tuple(g.n(), 2, &mut |x| {
        acc = &acc + &chromatic_polynomial(&shadow_general(g, x, &pair).graph, cache);
    });
    for_each_ordered_tuple(g.n(), 3, &mut |x| {
        acc = &acc + &chromatic_polynomial(&shadow_general(g, x, &triple).graph, cache);
    });
    scale_div(&acc, 12)
}

/// Polynomial counting induced copies of a connected pattern `h` in
/// 𝒞_k(g): all state maps relative to a canonical connected ordering, all
/// ordered host tuples, divided by |Aut(h)|. The single vertex counts the
/// colorings themselves. Errors on disconnected (or empty) patterns.
pub fn count_poly_connected(
    g: &Graph,
    h: &Graph,
    cache: &ChromaticCache,
) -> Result<RationalPoly, CountError> {
    if h.n() == 1 {
        return Ok(chromatic_polynomial(g, cache));
    }
    if !h.is_connected() {
        return Err(CountError::DisconnectedPattern);
    }
    let ordering = h.connected_ordering().expect("pattern is connected");
    let maps = enumerate_state_maps(h, &ordering).expect("ordering is valid");
    let mut acc = RationalPoly::zero();
    for map in &maps {
        for_each_ordered_tuple(g.n(), map.width(), &mut |x| {
            acc = &acc + &chromatic_polynomial(&shadow_general(g, x, map).graph, cache);
        });
    }
    Ok(scale_div(&acc, automorphism_order(h)))
}

/// All graphs, up to isomorphism, that an induced copy of `a` and an
/// induced copy of `b` can jointly cover. Ordered deterministically by
/// (vertex count, canonical key). Capped at |a| + |b| ≤ 9 vertices.
pub fn enumerate_j(a: &Graph, b: &Graph) -> Result<Vec<Graph>, CountError> {
    let (na, nb) = (a.n(), b.n());
    if na + nb > DISCONNECTED_PATTERN_LIMIT {
        return Err(CountError::PatternTooLarge {
            got: na + nb,
            max: DISCONNECTED_PATTERN_LIMIT,
        });
    }
    let mut seen: HashMap<CanonicalKey, usize> = HashMap::new();
    let mut out: Vec<Graph> = Vec::new();

    // overlap size t: identify a t-subset of a's vertices with an ordered
    // t-arrangement of b's vertices, require the two induced overlap graphs
    // to agree, then wire the non-shared parts with every possible set of
    // cross edges
    for t in 0..=na.min(nb) {
        loop_subsets(na, t, &mut |a_shared| {
            loop_arrangements(nb, t, &mut |b_shared| {
                // overlap consistency
                for i in 0..t {
                    for j in i + 1..t {
                        if a.has_edge(a_shared[i], a_shared[j])
                            != b.has_edge(b_shared[i], b_shared[j])
                        {
                            return;
                        }
                    }
                }
                let b_to_u: Vec<usize> = {
                    let mut map = vec![usize::MAX; nb];
                    for i in 0..t {
                        map[b_shared[i]] = a_shared[i];
                    }
                    let mut next = na;
                    for v in 0..nb {
                        if map[v] == usize::MAX {
                            map[v] = next;
                            next += 1;
                        }
                    }
                    map
                };
                let n_u = na + nb - t;
                let mut base_edges: Vec<(usize, usize)> = a.edges().collect();
                for (u, v) in b.edges() {
                    let (mu, mv) = (b_to_u[u], b_to_u[v]);
                    if mu < na && mv < na {
                        continue; // overlap edge, already present from a
                    }
                    base_edges.push((mu.min(mv), mu.max(mv)));
                }
                let a_only: Vec<usize> = (0..na).filter(|v| !a_shared.contains(v)).collect();
                let b_only: Vec<usize> = (na..n_u).collect();
                let cross: Vec<(usize, usize)> = a_only
                    .iter()
                    .flat_map(|&u| b_only.iter().map(move |&v| (u, v)))
                    .collect();
                for mask in 0u64..(1u64 << cross.len()) {
                    let mut edges = base_edges.clone();
                    for (i, &e) in cross.iter().enumerate() {
                        if mask & (1 << i) != 0 {
                            edges.push(e);
                        }
                    }
                    let u = Graph::new(n_u, &edges).expect("cover edges are valid");
                    let key = canonical_key(&u);
                    if !seen.contains_key(&key) {
                        seen.insert(key, out.len());
                        out.push(u);
                    }
                }
            });
        });
    }
    out.sort_by_key(|u| (u.n(), canonical_key(u)));
    Ok(out)
}

fn loop_subsets(n: usize, t: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(n: usize, t: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == t {
            f(cur);
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, t, v + 1, cur, f);
            cur.pop();
        }
    }
    if t > n {
        return;
    }
    rec(n, t, 0, &mut Vec::with_capacity(t), f);
}

fn loop_arrangements(n: usize, t: usize, f: &mut impl FnMut(&[usize])) {
    for_each_ordered_tuple(n, t, f);
}

/// Number of ordered pairs (S₁, S₂) of vertex subsets of `u` with
/// S₁ ∪ S₂ = V(u), u[S₁] ≅ a, and u[S₂] ≅ b.
pub fn embedding_cover_count(u: &Graph, a: &Graph, b: &Graph) -> u64 {
    let n = u.n();
    assert!(n <= 63, "cover counting uses subset masks");
    let key_a = canonical_key(a);
    let key_b = canonical_key(b);
    let subsets_matching = |size: usize, key: &CanonicalKey| -> Vec<u64> {
        let mut found = Vec::new();
        loop_subsets(n, size, &mut |s| {
            if canonical_key(&u.induced(s)) == *key {
                found.push(s.iter().fold(0u64, |m, &v| m | (1 << v)));
            }
        });
        found
    };
    let s1 = subsets_matching(a.n(), &key_a);
    let s2 = subsets_matching(b.n(), &key_b);
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut count = 0;
    for &m1 in &s1 {
        for &m2 in &s2 {
            if m1 | m2 == full {
                count += 1;
            }
        }
    }
    count
}

/// Polynomial counting induced copies of an arbitrary pattern `h` (possibly
/// disconnected) in 𝒞_k(g). Connected patterns go through the shadow
/// construction; disconnected ones through the cover recursion, memoized by
/// canonical form. Disconnected patterns above
/// [`DISCONNECTED_PATTERN_LIMIT`] vertices are rejected.
pub fn count_poly(g: &Graph, h: &Graph, cache: &ChromaticCache) -> Result<RationalPoly, CountError> {
    let mut memo: HashMap<CanonicalKey, RationalPoly> = HashMap::new();
    count_poly_rec(g, h, cache, &mut memo, &default_component_pick)
}

/// Selection rule for the split component: index into the component list.
/// The polynomial does not depend on the choice (tested), only determinism
/// of memoization does.
type ComponentPick = dyn Fn(&[(Graph, Vec<usize>)]) -> usize;

fn default_component_pick(comps: &[(Graph, Vec<usize>)]) -> usize {
    // largest order; canonical key breaks ties
    (0..comps.len())
        .max_by(|&i, &j| {
            comps[i]
                .0
                .n()
                .cmp(&comps[j].0.n())
                .then_with(|| canonical_key(&comps[j].0).cmp(&canonical_key(&comps[i].0)))
        })
        .expect("pattern has components")
}

fn count_poly_rec(
    g: &Graph,
    h: &Graph,
    cache: &ChromaticCache,
    memo: &mut HashMap<CanonicalKey, RationalPoly>,
    pick: &ComponentPick,
) -> Result<RationalPoly, CountError> {
    if h.n() == 0 {
        // exactly one induced empty subgraph
        return Ok(RationalPoly::one());
    }
    let key = canonical_key(h);
    if let Some(hit) = memo.get(&key) {
        return Ok(hit.clone());
    }
    let comps = h.connected_components();
    let result = if comps.len() == 1 {
        count_poly_connected(g, h, cache)?
    } else {
        if h.n() > DISCONNECTED_PATTERN_LIMIT {
            return Err(CountError::PatternTooLarge {
                got: h.n(),
                max: DISCONNECTED_PATTERN_LIMIT,
            });
        }
        let (hprime, prime_verts) = &comps[pick(&comps)];
        let rest_verts: Vec<usize> = (0..h.n()).filter(|v| !prime_verts.contains(v)).collect();
        let hrest = h.induced(&rest_verts);

        let product = {
            let p1 = count_poly_rec(g, hprime, cache, memo, pick)?;
            let p2 = count_poly_rec(g, &hrest, cache, memo, pick)?;
            &p1 * &p2
        };
        let mut acc = product;
        let mut f_h = 0u64;
        for u in enumerate_j(hprime, &hrest)? {
            let f_u = embedding_cover_count(&u, hprime, &hrest);
            debug_assert!(f_u > 0, "J members admit at least one cover");
            if canonical_key(&u) == key {
                f_h = f_u;
                continue;
            }
            let p_u = count_poly_rec(g, &u, cache, memo, pick)?;
            acc = &acc - &p_u.scale(&BigRational::from_integer(BigInt::from(f_u)));
        }
        debug_assert!(f_h > 0, "h itself belongs to its own cover family");
        scale_div(&acc, f_h)
    };
    memo.insert(key, result.clone());
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &RationalPoly, upto: i64) -> Vec<BigRational> {
        (0..=upto).map(|k| p.eval_int(k)).collect()
    }

    fn rat(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn pairs_of_single_edge_host() {
        let cache = ChromaticCache::new();
        let p = pairs_poly(&Graph::complete(2), &cache);
        assert_eq!(p, RationalPoly::from_ints(&[0, 2, -3, 1]));
        assert_eq!(p.eval_int(3), rat(6));
    }

    #[test]
    fn clique_size_two_is_pairs() {
        let cache = ChromaticCache::new();
        for g in [Graph::path(3), Graph::cycle(4), Graph::complete(3)] {
            assert_eq!(clique_poly(&g, 2, &cache), pairs_poly(&g, &cache));
        }
    }

    #[test]
    fn single_vertex_host_cliques_count_color_subsets() {
        // 𝒞_k(K_1) is the complete graph on k colorings, so r-cliques are
        // r-subsets of colors: binomial(k, r)
        let cache = ChromaticCache::new();
        let g = Graph::empty(1);
        for r in 2..=5u32 {
            let p = clique_poly(&g, r, &cache);
            let mut fact = 1i64;
            for i in 2..=r as i64 {
                fact *= i;
            }
            let want = crate::poly::falling_factorial(r as usize)
                .scale(&BigRational::new(BigInt::one(), BigInt::from(fact)));
            assert_eq!(p, want, "r = {r}");
        }
    }

    #[test]
    fn product_with_one_factor_matches_clique() {
        let cache = ChromaticCache::new();
        for g in [Graph::path(3), Graph::cycle(4)] {
            assert_eq!(product_clique_poly(&g, &[2], &cache), pairs_poly(&g, &cache));
            assert_eq!(
                product_clique_poly(&g, &[3], &cache),
                clique_poly(&g, 3, &cache)
            );
        }
    }

    #[test]
    fn product_degenerates_to_zero_when_tuple_exceeds_host() {
        let cache = ChromaticCache::new();
        assert!(product_clique_poly(&Graph::complete(2), &[2, 2, 2], &cache).is_zero());
        assert!(product_clique_poly(&Graph::empty(1), &[2, 2], &cache).is_zero());
    }

    #[test]
    fn square_products_in_two_isolated_vertices() {
        // 𝒞_k(2K_1) = K_k □ K_k, whose induced C_4 count is C(k,2)²
        let cache = ChromaticCache::new();
        let p = product_clique_poly(&Graph::empty(2), &[2, 2], &cache);
        let c_k_2 = scale_div(&crate::poly::falling_factorial(2), 2);
        assert_eq!(p, &c_k_2 * &c_k_2);
    }

    #[test]
    fn connected_count_of_single_vertex_is_chromatic() {
        let cache = ChromaticCache::new();
        let g = Graph::cycle(5);
        assert_eq!(
            count_poly_connected(&g, &Graph::empty(1), &cache).unwrap(),
            chromatic_polynomial(&g, &cache)
        );
    }

    #[test]
    fn connected_count_rejects_disconnected_patterns() {
        let cache = ChromaticCache::new();
        assert_eq!(
            count_poly_connected(&Graph::path(3), &Graph::empty(2), &cache),
            Err(CountError::DisconnectedPattern)
        );
    }

    #[test]
    fn connected_count_matches_pinned_values() {
        let cache = ChromaticCache::new();
        let p3 = Graph::path(3);
        let k2 = Graph::complete(2);

        // edges of 𝒞_3(P_3): 15; of 𝒞_4(P_3): 96
        let p = count_poly_connected(&p3, &k2, &cache).unwrap();
        assert_eq!(p, pairs_poly(&p3, &cache));
        assert_eq!(p.eval_int(3), rat(15));
        assert_eq!(p.eval_int(4), rat(96));

        // triangles in 𝒞_4(P_3): 28; paths P_4 in 𝒞_3(P_3): 24
        let tri = count_poly_connected(&p3, &Graph::complete(3), &cache).unwrap();
        assert_eq!(tri.eval_int(4), rat(28));
        assert_eq!(tri, clique_poly(&p3, 3, &cache));
        let p4 = count_poly_connected(&p3, &Graph::path(4), &cache).unwrap();
        assert_eq!(p4.eval_int(3), rat(24));

        // squares in 𝒞_3(P_3): 3; triangles in 𝒞_4(C_4): 48
        let c4 = count_poly_connected(&p3, &Graph::cycle(4), &cache).unwrap();
        assert_eq!(c4.eval_int(3), rat(3));
        let tri_c4 = count_poly_connected(&Graph::cycle(4), &Graph::complete(3), &cache).unwrap();
        assert_eq!(tri_c4.eval_int(4), rat(48));
    }

    #[test]
    fn four_cycle_pattern_equals_two_by_two_product() {
        // the 4-cycle's unique state map is the (2,2) product family
        let cache = ChromaticCache::new();
        for g in [Graph::path(3), Graph::complete(3), Graph::cycle(4)] {
            assert_eq!(
                count_poly_connected(&g, &Graph::cycle(4), &cache).unwrap(),
                product_clique_poly(&g, &[2, 2], &cache)
            );
        }
    }

    #[test]
    fn five_cycle_pattern_counts_zero() {
        let cache = ChromaticCache::new();
        let p = count_poly_connected(&Graph::path(3), &Graph::cycle(5), &cache).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn hexagons_need_at_least_two_host_vertices() {
        let cache = ChromaticCache::new();
        assert!(hexagon_poly(&Graph::empty(1), &cache).is_zero());
    }

    #[test]
    fn hexagons_in_single_edge_host() {
        // pinned: 𝒞_3(K_2) is C_6 itself (one hexagon); 𝒞_4(K_2) holds 16
        let cache = ChromaticCache::new();
        let p = hexagon_poly(&Graph::complete(2), &cache);
        assert_eq!(p.eval_int(3), rat(1));
        assert_eq!(p.eval_int(4), rat(16));
        let q = count_poly_connected(&Graph::complete(2), &Graph::cycle(6), &cache).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn cover_family_of_vertex_and_edge() {
        // J(K_1, K_2) = {K_2, K_3, P_3, K_2 ⊔ K_1}
        let j = enumerate_j(&Graph::empty(1), &Graph::complete(2)).unwrap();
        let keys: Vec<CanonicalKey> = j.iter().map(canonical_key).collect();
        let expect = [
            Graph::complete(2),
            Graph::complete(3),
            Graph::path(3),
            Graph::complete(2).disjoint_union(&Graph::empty(1)),
        ];
        assert_eq!(j.len(), 4);
        for e in &expect {
            assert!(keys.contains(&canonical_key(e)), "missing {e:?}");
        }

        // J(K_1, K_1) = {K_1, 2K_1, K_2}
        assert_eq!(enumerate_j(&Graph::empty(1), &Graph::empty(1)).unwrap().len(), 3);

        // |J(K_3, K_2)| = 16
        assert_eq!(
            enumerate_j(&Graph::complete(3), &Graph::complete(2)).unwrap().len(),
            16
        );
    }

    #[test]
    fn cover_counts() {
        // the diamond is covered by an edge and a triangle in 4 ordered ways
        let diamond = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(
            embedding_cover_count(&diamond, &Graph::complete(2), &Graph::complete(3)),
            4
        );
        // ordered covers of K_2 ⊔ K_1 by (K_2, K_1): exactly one
        let k2k1 = Graph::complete(2).disjoint_union(&Graph::empty(1));
        assert_eq!(embedding_cover_count(&k2k1, &Graph::complete(2), &Graph::empty(1)), 1);
        // and by (K_1, K_2): also one
        assert_eq!(embedding_cover_count(&k2k1, &Graph::empty(1), &Graph::complete(2)), 1);
    }

    #[test]
    fn disconnected_pattern_identities() {
        // π^(2K_1) = (π² − π − 2·pairs)/2, checked as whole polynomials
        let cache = ChromaticCache::new();
        let two_k1 = Graph::empty(2);
        for g in [Graph::complete(2), Graph::path(3), Graph::cycle(4)] {
            let chi = chromatic_polynomial(&g, &cache);
            let pairs = pairs_poly(&g, &cache);
            let want = scale_div(&(&(&(&chi * &chi) - &chi) - &pairs.scale(&rat(2))), 2);
            let got = count_poly(&g, &two_k1, &cache).unwrap();
            assert_eq!(got, want, "2K_1 in {g:?}");
        }

        // π^(K_2 ⊔ K_1) = π^(K_2)·π − 2π^(K_2) − 2π^(P_3) − 3π^(K_3)
        let k2k1 = Graph::complete(2).disjoint_union(&Graph::empty(1));
        for g in [Graph::complete(2), Graph::path(3)] {
            let chi = chromatic_polynomial(&g, &cache);
            let pk2 = pairs_poly(&g, &cache);
            let pp3 = count_poly_connected(&g, &Graph::path(3), &cache).unwrap();
            let pk3 = clique_poly(&g, 3, &cache);
            let want = &(&(&(&pk2 * &chi) - &pk2.scale(&rat(2))) - &pp3.scale(&rat(2)))
                - &pk3.scale(&rat(3));
            let got = count_poly(&g, &k2k1, &cache).unwrap();
            assert_eq!(got, want, "K_2 ⊔ K_1 in {g:?}");
        }
    }

    #[test]
    fn count_poly_dispatches_and_caps() {
        let cache = ChromaticCache::new();
        let g = Graph::path(3);
        // connected patterns go through the connected construction
        assert_eq!(
            count_poly(&g, &Graph::complete(2), &cache).unwrap(),
            count_poly_connected(&g, &Graph::complete(2), &cache).unwrap()
        );
        // the empty pattern has exactly one (empty) copy
        assert_eq!(count_poly(&g, &Graph::empty(0), &cache).unwrap(), RationalPoly::one());
        // oversized disconnected patterns are rejected
        let big = Graph::empty(10);
        assert_eq!(
            count_poly(&g, &big, &cache),
            Err(CountError::PatternTooLarge { got: 10, max: 9 })
        );
    }

    #[test]
    fn recursion_is_invariant_under_the_component_selection_rule() {
        // the split-component choice is not forced; two opposite rules must
        // produce the same polynomial
        let cache = ChromaticCache::new();
        let smallest_reversed = |comps: &[(Graph, Vec<usize>)]| {
            (0..comps.len())
                .min_by(|&i, &j| {
                    comps[i]
                        .0
                        .n()
                        .cmp(&comps[j].0.n())
                        .then_with(|| canonical_key(&comps[i].0).cmp(&canonical_key(&comps[j].0)))
                })
                .unwrap()
        };
        let patterns = [
            Graph::empty(2),
            Graph::complete(2).disjoint_union(&Graph::empty(1)),
            Graph::complete(2).disjoint_union(&Graph::complete(2)),
            Graph::path(3).disjoint_union(&Graph::complete(2)),
            Graph::complete(3).disjoint_union(&Graph::empty(2)),
        ];
        for h in &patterns {
            for g in [Graph::complete(2), Graph::path(3)] {
                let default = count_poly(&g, h, &cache).unwrap();
                let mut memo = HashMap::new();
                let alt = count_poly_rec(&g, h, &cache, &mut memo, &smallest_reversed).unwrap();
                assert_eq!(default, alt, "pattern {h:?} in {g:?}");
            }
        }
    }

    #[test]
    fn disconnected_counts_match_brute_pins() {
        // 2K_1 in 𝒞_k(K_2): colorings are ordered pairs of distinct colors,
        // adjacent when they share a coordinate-change; non-edges of 𝒞_k(K_2)
        let cache = ChromaticCache::new();
        let g = Graph::complete(2);
        let p = count_poly(&g, &Graph::empty(2), &cache).unwrap();
        // 𝒞_3(K_2) = C_6: non-adjacent pairs of its 6 vertices = C(6,2) − 6 = 9
        assert_eq!(p.eval_int(3), rat(9));
        assert_eq!(ints(&p, 2), vec![rat(0), rat(0), rat(1)]);
    }
}
