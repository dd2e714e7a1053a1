//! Canonical forms and exhaustive small-graph generation.
//!
//! This module backs fixture generation and test oracles: a canonical key
//! for isomorphism-class deduplication (n <= 16), brute-force enumeration of
//! all graphs / connected graphs on few vertices, and a canonical certificate
//! for free trees.

use crate::graph::Graph;
use crate::graph6::triangle_coords;
use std::collections::BTreeSet;

/// Canonical isomorphism key: the lexicographically largest upper-triangle
/// bit string (column-major, as in the graph6 layout) over all vertex
/// orderings, packed into a u128. Supports n <= 16.
pub fn canonical_key(g: &Graph) -> u128 {
    let n = g.vertex_count();
    assert!(n <= 16, "canonical_key supports n <= 16, got {n}");
    if n <= 1 {
        return 0;
    }
    let total_bits = (n * (n - 1) / 2) as u32;

    struct Search<'a> {
        g: &'a Graph,
        n: usize,
        total_bits: u32,
        best: u128,
        found: bool,
    }

    impl Search<'_> {
        fn rec(&mut self, placed: &mut Vec<usize>, used: u16, acc: u128, bits: u32) {
            let p = placed.len();
            if p == self.n {
                if !self.found || acc > self.best {
                    self.best = acc;
                    self.found = true;
                }
                return;
            }
            // Candidate blocks: adjacency of each unused vertex to the placed
            // prefix, earliest placed vertex in the most significant bit.
            let mut cands: Vec<(u128, usize)> = (0..self.n)
                .filter(|&v| used & (1 << v) == 0)
                .map(|v| {
                    let mut block = 0u128;
                    for &u in placed.iter() {
                        block = (block << 1) | u128::from(self.g.has_edge(u, v));
                    }
                    (block, v)
                })
                .collect();
            cands.sort_unstable_by(|a, b| b.cmp(a));
            for (block, v) in cands {
                let acc2 = (acc << p) | block;
                let bits2 = bits + p as u32;
                if self.found && acc2 < (self.best >> (self.total_bits - bits2)) {
                    continue; // lexicographic prefix already lost
                }
                placed.push(v);
                self.rec(placed, used | (1 << v), acc2, bits2);
                placed.pop();
            }
        }
    }

    let mut s = Search { g, n, total_bits, best: 0, found: false };
    s.rec(&mut Vec::with_capacity(n), 0, 0, 0);
    s.best
}

/// Rebuilds the canonical representative graph from a key.
pub fn graph_from_key(n: usize, key: u128) -> Graph {
    let total_bits = n * n.saturating_sub(1) / 2;
    let mut adj = vec![false; n * n];
    for idx in 0..total_bits {
        if (key >> (total_bits - 1 - idx)) & 1 == 1 {
            let (u, v) = triangle_coords(idx);
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
    }
    Graph::from_adj(n, adj)
}

/// All graphs on `n` vertices up to isomorphism, canonically labeled, in a
/// deterministic (ascending key) order. Built by vertex augmentation over the
/// (n-1)-vertex set with canonical deduplication.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "exhaustive generation supports n <= 8, got {n}");
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let prev = all_graphs(n - 1);
    let mut keys = BTreeSet::new();
    for g in &prev {
        for mask in 0u32..(1 << (n - 1)) {
            let mut adj = vec![false; n * n];
            for (u, v) in g.edges() {
                adj[u * n + v] = true;
                adj[v * n + u] = true;
            }
            for u in 0..(n - 1) {
                if mask & (1 << u) != 0 {
                    adj[u * n + (n - 1)] = true;
                    adj[(n - 1) * n + u] = true;
                }
            }
            keys.insert(canonical_key(&Graph::from_adj(n, adj)));
        }
    }
    keys.into_iter().map(|k| graph_from_key(n, k)).collect()
}

/// Connected graphs on `n` vertices up to isomorphism, deterministic order.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(|g| g.is_connected()).collect()
}

/// Centers of a tree (one or two vertices), by iterated leaf stripping.
fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = g.degrees().to_vec();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for u in g.neighbors(v) {
                if !removed[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

/// Canonical certificate for a free tree: the minimum over center rootings of
/// the rooted certificate, where a rooted certificate is `(` + the sorted
/// child certificates + `)`.
pub fn tree_certificate(g: &Graph) -> Vec<u8> {
    assert!(g.is_tree(), "tree_certificate requires a tree");
    fn rooted(g: &Graph, v: usize, parent: Option<usize>) -> Vec<u8> {
        let mut kids: Vec<Vec<u8>> = g
            .neighbors(v)
            .filter(|&u| Some(u) != parent)
            .map(|u| rooted(g, u, Some(v)))
            .collect();
        kids.sort();
        let mut out = vec![b'('];
        for k in kids {
            out.extend_from_slice(&k);
        }
        out.push(b')');
        out
    }
    tree_centers(g)
        .into_iter()
        .map(|c| rooted(g, c, None))
        .min()
        .unwrap_or_else(|| vec![b'(', b')'])
}
