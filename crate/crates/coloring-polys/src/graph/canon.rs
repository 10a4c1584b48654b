//! Canonical forms via individualization–refinement.
//!
//! The canonical labeling of a graph is the vertex relabeling whose
//! adjacency bitstring (upper triangle, row-major) is lexicographically
//! largest; it is found by color refinement plus backtracking over the
//! vertices of the first non-singleton cell, with orbit pruning from the
//! automorphisms discovered along the way. High-degree vertices end up at
//! the early canonical positions, so e.g. a star is canonically rooted at
//! its center.

use super::Graph;
use std::collections::BTreeMap;

/// Isomorphism-invariant key: vertex count plus the adjacency bits of the
/// canonically relabeled graph. Two graphs are isomorphic iff their keys
/// are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    n: u32,
    bits: Vec<u8>,
}

/// Compute the canonical key of a graph.
pub fn canonical_key(g: &Graph) -> CanonicalKey {
    let labeling = canonical_labeling(g);
    CanonicalKey {
        n: g.n() as u32,
        bits: pack_bits(&g.bitrows(), &labeling),
    }
}

/// Compute a canonical labeling: `result[v]` is the canonical position of
/// vertex `v`. Corresponding vertices of isomorphic graphs receive the same
/// positions (up to automorphisms), which makes canonical positions usable
/// as labeling-independent tiebreaks.
pub fn canonical_labeling(g: &Graph) -> Vec<u32> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search {
        n,
        rows: g.bitrows(),
        best_bits: None,
        best_labeling: Vec::new(),
        autos: Vec::new(),
    };
    let mut cells = vec![(0..n as u32).collect::<Vec<_>>()];
    refine(&search.rows, &mut cells);
    search.run(cells, &mut Vec::new());
    search.best_labeling
}

/// Number of automorphisms of a graph, counted by direct backtracking over
/// adjacency-preserving bijections. Independent of the canonical-labeling
/// machinery so the two can check each other.
pub fn automorphism_order(g: &Graph) -> u64 {
    let n = g.n();
    if n == 0 {
        return 1;
    }
    let rows = g.bitrows();
    let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let ndm: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut ds: Vec<usize> = g.neighbors(v).iter().map(|&u| deg[u as usize]).collect();
            ds.sort_unstable();
            ds
        })
        .collect();
    let cands: Vec<Vec<u32>> = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&w| deg[w] == deg[v] && ndm[w] == ndm[v])
                .map(|w| w as u32)
                .collect()
        })
        .collect();
    // map vertices most-constrained first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (cands[v].len(), std::cmp::Reverse(deg[v]), v));

    fn rec(
        rows: &[u128],
        cands: &[Vec<u32>],
        order: &[usize],
        image: &mut Vec<u32>,
        used: &mut Vec<bool>,
        depth: usize,
    ) -> u64 {
        if depth == order.len() {
            return 1;
        }
        let v = order[depth];
        let mut total = 0;
        'cand: for &w in &cands[v] {
            if used[w as usize] {
                continue;
            }
            for &u in &order[..depth] {
                let want = (rows[v] >> u) & 1;
                let have = (rows[w as usize] >> image[u]) & 1;
                if want != have {
                    continue 'cand;
                }
            }
            image[v as usize] = w;
            used[w as usize] = true;
            total += rec(rows, cands, order, image, used, depth + 1);
            used[w as usize] = false;
        }
        total
    }

    rec(&rows, &cands, &order, &mut vec![0; n], &mut vec![false; n], 0)
}

// ---------------------------------------------------------------------------
// refinement + backtracking internals

struct Search {
    n: usize,
    rows: Vec<u128>,
    best_bits: Option<Vec<u8>>,
    best_labeling: Vec<u32>,
    autos: Vec<Vec<u32>>,
}

impl Search {
    fn run(&mut self, cells: Vec<Vec<u32>>, path: &mut Vec<u32>) {
        if cells.iter().all(|c| c.len() == 1) {
            self.leaf(&cells);
            return;
        }
        let c = cells
            .iter()
            .position(|cell| cell.len() > 1)
            .expect("some cell is non-singleton");
        let members = cells[c].clone();
        let mut tried: Vec<u32> = Vec::new();
        for &v in &members {
            // skip candidates equivalent to an already-explored one under
            // automorphisms that fix the individualization path pointwise
            let mut uf = UnionFind::new(self.n);
            for sigma in &self.autos {
                if path.iter().all(|&p| sigma[p as usize] == p) {
                    for x in 0..self.n {
                        uf.union(x, sigma[x] as usize);
                    }
                }
            }
            if tried.iter().any(|&w| uf.find(w as usize) == uf.find(v as usize)) {
                continue;
            }
            tried.push(v);

            let mut next: Vec<Vec<u32>> = Vec::with_capacity(cells.len() + 1);
            next.extend(cells[..c].iter().cloned());
            next.push(vec![v]);
            next.push(members.iter().copied().filter(|&w| w != v).collect());
            next.extend(cells[c + 1..].iter().cloned());
            refine(&self.rows, &mut next);

            path.push(v);
            self.run(next, path);
            path.pop();
        }
    }

    fn leaf(&mut self, cells: &[Vec<u32>]) {
        let mut labeling = vec![0u32; self.n];
        for (pos, cell) in cells.iter().enumerate() {
            labeling[cell[0] as usize] = pos as u32;
        }
        let bits = pack_bits(&self.rows, &labeling);
        match &self.best_bits {
            Some(best) if bits == *best => {
                // two labelings with the same canonical image compose to an
                // automorphism of the input graph
                let mut inv_best = vec![0u32; self.n];
                for v in 0..self.n {
                    inv_best[self.best_labeling[v] as usize] = v as u32;
                }
                let sigma: Vec<u32> = (0..self.n)
                    .map(|v| inv_best[labeling[v] as usize])
                    .collect();
                if sigma.iter().enumerate().any(|(v, &s)| s != v as u32) {
                    self.autos.push(sigma);
                }
            }
            Some(best) if bits < *best => {}
            _ => {
                self.best_bits = Some(bits);
                self.best_labeling = labeling;
            }
        }
    }
}

/// Color refinement: split cells by the counts of neighbors in every cell
/// until the partition is equitable. Sub-cells are ordered by descending
/// signature so better-connected vertices move toward earlier positions.
fn refine(rows: &[u128], cells: &mut Vec<Vec<u32>>) {
    loop {
        let masks: Vec<u128> = cells
            .iter()
            .map(|c| c.iter().fold(0u128, |m, &v| m | (1u128 << v)))
            .collect();
        let mut next: Vec<Vec<u32>> = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<Vec<u32>, Vec<u32>> = BTreeMap::new();
            for &v in cell {
                let sig: Vec<u32> = masks
                    .iter()
                    .map(|&m| (rows[v as usize] & m).count_ones())
                    .collect();
                groups.entry(sig).or_default().push(v);
            }
            if groups.len() > 1 {
                changed = true;
            }
            for (_, group) in groups.into_iter().rev() {
                next.push(group);
            }
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

/// Pack the upper triangle (row-major) of the relabeled adjacency matrix,
/// most significant bit first, zero-padded to whole bytes.
fn pack_bits(rows: &[u128], labeling: &[u32]) -> Vec<u8> {
    let n = rows.len();
    let mut orig = vec![0usize; n];
    for v in 0..n {
        orig[labeling[v] as usize] = v;
    }
    let mut out = Vec::with_capacity((n * n.saturating_sub(1) / 2 + 7) / 8);
    let mut acc = 0u8;
    let mut filled = 0u8;
    for up in 0..n {
        for vp in up + 1..n {
            let bit = ((rows[orig[up]] >> orig[vp]) & 1) as u8;
            acc = (acc << 1) | bit;
            filled += 1;
            if filled == 8 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (8 - filled));
    }
    out
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n as u32).collect() }
    }

    fn find(&mut self, x: usize) -> u32 {
        let p = self.parent[x];
        if p as usize == x {
            return p;
        }
        let root = self.find(p as usize);
        self.parent[x] = root;
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra as usize] = rb;
        }
    }
}
