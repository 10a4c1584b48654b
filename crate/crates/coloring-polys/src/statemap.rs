//! State maps: assignments of integer tuples to the vertices of a pattern
//! graph H, with Hamming distance 1 exactly between adjacent vertices.
//!
//! Each state map, applied to an ordered tuple of host vertices, determines
//! a shadow graph whose proper colorings correspond to induced copies of H
//! in the coloring graph; summing shadow chromatic polynomials over all
//! maps and tuples (then dividing by |Aut(H)|) yields the exact count.
//!
//! Enumeration is relative to a connected ordering (u_1, …, u_h): tuples are
//! assigned vertex by vertex, values grow ladder-style (a value j > 1 at a
//! coordinate needs j − 1 to appear there earlier), coordinates open lazily
//! (a coordinate is only introduced once its predecessor carries a 2), and
//! the first two vertices are pinned to (1,…,1) and (2,1,…,1). These rules
//! pick one representative per equivalence class of tuple systems, which is
//! what keeps the enumeration finite.

use crate::graph::Graph;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StateMapError {
    #[error("pattern needs at least two vertices, got {0}")]
    PatternTooSmall(usize),
    #[error("ordering is not a permutation of the pattern's vertices")]
    BadOrdering,
    #[error("ordering is not connected: vertex {0} has no earlier neighbor")]
    NotConnected(usize),
}

/// A valid state map for a pattern, relative to a connected ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateMap {
    /// The connected ordering the map was enumerated against.
    pub ordering: Vec<usize>,
    /// `assignment[t]` is the tuple given to vertex `ordering[t]`; all
    /// tuples share the same width d.
    pub assignment: Vec<Vec<u32>>,
    /// Palette sizes r_i: the largest value used at each coordinate.
    pub palette_sizes: Vec<u32>,
}

impl StateMap {
    /// Tuple width d.
    pub fn width(&self) -> usize {
        self.palette_sizes.len()
    }

    /// The distinct tuples of the image (the assignment is injective, so
    /// this is just the assignment itself).
    pub fn states(&self) -> &[Vec<u32>] {
        &self.assignment
    }

    /// Construct directly from known-valid data, checking validity against
    /// the pattern. Used for pinned literal map families.
    pub fn checked(
        h: &Graph,
        ordering: Vec<usize>,
        assignment: Vec<Vec<u32>>,
    ) -> Result<StateMap, StateMapError> {
        if !is_valid_state_map(h, &ordering, &assignment) {
            return Err(StateMapError::BadOrdering);
        }
        let d = assignment[0].len();
        let palette_sizes = (0..d)
            .map(|i| assignment.iter().map(|a| a[i]).max().expect("nonempty"))
            .collect();
        Ok(StateMap { ordering, assignment, palette_sizes })
    }
}

fn hamming(a: &[u32], b: &[u32]) -> usize {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Full independent validity check for an assignment (indexed by ordering
/// position) against a pattern and ordering. Checks every defining
/// condition; used by tests to cross-examine the enumeration.
pub fn is_valid_state_map(h: &Graph, ordering: &[usize], assignment: &[Vec<u32>]) -> bool {
    let n = h.n();
    if n < 2 || ordering.len() != n || assignment.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in ordering {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    let d = assignment[0].len();
    if d == 0 || d >= n || assignment.iter().any(|a| a.len() != d) {
        return false;
    }
    // pinned first two tuples
    if assignment[0].iter().any(|&x| x != 1) {
        return false;
    }
    if assignment[1][0] != 2 || assignment[1][1..].iter().any(|&x| x != 1) {
        return false;
    }
    // injectivity and the adjacency biconditional
    for t1 in 0..n {
        for t2 in t1 + 1..n {
            let dist = hamming(&assignment[t1], &assignment[t2]);
            if dist == 0 {
                return false;
            }
            if (dist == 1) != h.has_edge(ordering[t1], ordering[t2]) {
                return false;
            }
        }
    }
    // value ladder and lazy coordinate opening
    for t in 0..n {
        for i in 0..d {
            let j = assignment[t][i];
            if j > 1 {
                if !(0..t).any(|s| assignment[s][i] == j - 1) {
                    return false;
                }
                if i > 0 && !(0..t).any(|s| assignment[s][i - 1] == 2) {
                    return false;
                }
            }
        }
    }
    // every coordinate used, bounded total palette
    let mut sum = 0;
    for i in 0..d {
        let r = assignment.iter().map(|a| a[i]).max().expect("nonempty");
        if r < 2 {
            return false;
        }
        sum += (r - 1) as usize;
    }
    sum <= n - 1
}

/// Enumerate every valid state map of `h` relative to `ordering`, sorted by
/// width and then lexicographically by assignment.
pub fn enumerate_state_maps(h: &Graph, ordering: &[usize]) -> Result<Vec<StateMap>, StateMapError> {
    let n = h.n();
    if n < 2 {
        return Err(StateMapError::PatternTooSmall(n));
    }
    if ordering.len() != n {
        return Err(StateMapError::BadOrdering);
    }
    let mut seen = vec![false; n];
    for &v in ordering {
        if v >= n || seen[v] {
            return Err(StateMapError::BadOrdering);
        }
        seen[v] = true;
    }
    for t in 1..n {
        if !ordering[..t].iter().any(|&s| h.has_edge(s, ordering[t])) {
            return Err(StateMapError::NotConnected(ordering[t]));
        }
    }

    let mut out: Vec<StateMap> = Vec::new();
    // invariant: every assigned tuple is kept at the current full width, so
    // opening a coordinate pads all earlier tuples with 1s (and backtracking
    // pops them again)
    let mut assign: Vec<Vec<u32>> = vec![vec![1], vec![2]];
    let mut palettes: Vec<u32> = vec![2];
    rec(h, ordering, &mut assign, &mut palettes, &mut out);

    out.sort_by(|a, b| {
        a.width()
            .cmp(&b.width())
            .then_with(|| a.assignment.cmp(&b.assignment))
    });
    debug_assert!(out.windows(2).all(|w| w[0] != w[1]), "enumeration produced a duplicate");
    Ok(out)
}

fn rec(
    h: &Graph,
    ordering: &[usize],
    assign: &mut Vec<Vec<u32>>,
    palettes: &mut Vec<u32>,
    out: &mut Vec<StateMap>,
) {
    let t = assign.len();
    let n = h.n();
    if t == n {
        let map = StateMap {
            ordering: ordering.to_vec(),
            assignment: assign.clone(),
            palette_sizes: palettes.clone(),
        };
        debug_assert!(is_valid_state_map(h, ordering, &map.assignment));
        out.push(map);
        return;
    }
    let v = ordering[t];
    let w = palettes.len();

    // candidates: one coordinate of an earlier neighbor's tuple changed, or
    // that tuple extended by a fresh coordinate holding a 2
    let mut cands: BTreeSet<Vec<u32>> = BTreeSet::new();
    for s in 0..t {
        if !h.has_edge(ordering[s], v) {
            continue;
        }
        let base = &assign[s];
        for i in 0..w {
            for val in 1..=palettes[i] + 1 {
                if val != base[i] {
                    let mut c = base.clone();
                    c[i] = val;
                    cands.insert(c);
                }
            }
        }
        if w + 1 <= n - 1 {
            let mut c = base.clone();
            c.push(2);
            cands.insert(c);
        }
    }

    'cand: for cand in cands {
        let cw = cand.len();
        // adjacency biconditional (and injectivity) against all earlier
        for s in 0..t {
            let dist = if cw == w {
                hamming(&cand, &assign[s])
            } else {
                // earlier tuples implicitly carry a 1 at the new coordinate
                hamming(&cand[..w], &assign[s]) + usize::from(cand[w] != 1)
            };
            if dist == 0 || (dist == 1) != h.has_edge(ordering[s], v) {
                continue 'cand;
            }
        }
        // palette growth must stay within the budget Σ(r_i − 1) ≤ n − 1
        let mut grown = palettes.clone();
        if cw > w {
            grown.push(1);
        }
        for i in 0..cw {
            grown[i] = grown[i].max(cand[i]);
        }
        if grown.iter().map(|&r| (r - 1) as usize).sum::<usize>() > n - 1 {
            continue;
        }
        // value ladder: candidate values beyond the previous palette maximum
        // are exactly max+1 by construction; values below it all appeared
        // earlier (palettes only ever grow one step at a time), and a fresh
        // coordinate starts at 2 over implicit 1s — so no extra check needed
        let opened = cw > w;
        if opened {
            for a in assign.iter_mut() {
                a.push(1);
            }
        }
        let saved = std::mem::replace(palettes, grown);
        assign.push(cand);

        rec(h, ordering, assign, palettes, out);

        assign.pop();
        *palettes = saved;
        if opened {
            for a in assign.iter_mut() {
                a.pop();
            }
        }
    }
}
