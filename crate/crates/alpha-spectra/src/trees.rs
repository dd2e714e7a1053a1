//! Free-tree enumeration (every isomorphism class exactly once) and
//! degree-sequence filtering.
//!
//! Trees are generated by composing canonical rooted trees at the centroid:
//! a tree with a unique centroid is a root whose subtrees all have at most
//! floor((n-1)/2) vertices, and a bicentral tree (even n) is an unordered
//! pair of rooted trees on n/2 vertices joined by an edge. Each free tree is
//! produced exactly once, so no isomorphism rejection pass is needed.

use crate::graph::Graph;
use thiserror::Error;

/// Upper limit for tree enumeration.
pub const TREE_SIZE_GUARD: usize = 16;

#[derive(Debug, Error)]
pub enum TreesError {
    #[error("tree generation guard: n = {n} outside 1..={limit}")]
    SizeGuard { n: usize, limit: usize },
}

/// Canonical rooted tree: children kept sorted descending, so structural
/// equality is isomorphism of rooted trees.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Rooted {
    size: usize,
    children: Vec<Rooted>,
}

/// All rooted trees with exactly `s` vertices for every `s <= max`,
/// each list sorted descending.
fn rooted_up_to(max: usize) -> Vec<Vec<Rooted>> {
    let mut table: Vec<Vec<Rooted>> = vec![Vec::new(); max + 1];
    if max >= 1 {
        table[1] = vec![Rooted { size: 1, children: Vec::new() }];
    }
    for s in 2..=max {
        let mut out = Vec::new();
        let mut current = Vec::new();
        collect_child_multisets(&table, s - 1, s - 1, None, &mut current, &mut |children| {
            out.push(Rooted { size: s, children: children.to_vec() });
        });
        out.sort_unstable_by(|a, b| b.cmp(a));
        table[s] = out;
    }
    table
}

/// Enumerates non-increasing sequences of rooted trees with sizes at most
/// `max_piece` summing to exactly `remaining`; `bound` caps the next element.
fn collect_child_multisets(
    table: &[Vec<Rooted>],
    remaining: usize,
    max_piece: usize,
    bound: Option<&Rooted>,
    current: &mut Vec<Rooted>,
    emit: &mut impl FnMut(&[Rooted]),
) {
    if remaining == 0 {
        emit(current);
        return;
    }
    let size_cap = remaining.min(max_piece).min(bound.map_or(usize::MAX, |b| b.size));
    for s in (1..=size_cap).rev() {
        for t in &table[s] {
            if let Some(b) = bound {
                if t > b {
                    continue;
                }
            }
            current.push(t.clone());
            let next_bound = current.last().unwrap().clone();
            collect_child_multisets(table, remaining - s, max_piece, Some(&next_bound), current, emit);
            current.pop();
        }
    }
}

fn add_subtree_edges(t: &Rooted, label: usize, next: &mut usize, edges: &mut Vec<(usize, usize)>) {
    for c in &t.children {
        let child_label = *next;
        *next += 1;
        edges.push((label, child_label));
        add_subtree_edges(c, child_label, next, edges);
    }
}

fn rooted_to_graph(n: usize, root: &Rooted) -> Graph {
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut next = 1;
    add_subtree_edges(root, 0, &mut next, &mut edges);
    Graph::from_edges(n, &edges).expect("generated tree is well-formed")
}

fn pair_to_graph(n: usize, a: &Rooted, b: &Rooted) -> Graph {
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    add_subtree_edges(a, 0, &mut next, &mut edges);
    let b_root = next;
    next += 1;
    edges.push((0, b_root));
    add_subtree_edges(b, b_root, &mut next, &mut edges);
    Graph::from_edges(n, &edges).expect("generated tree is well-formed")
}

/// Every free tree on `n` vertices, exactly once up to isomorphism.
/// Deterministic order. Guarded to 1 <= n <= 16.
pub fn generate_trees(n: usize) -> Result<Vec<Graph>, TreesError> {
    if n == 0 || n > TREE_SIZE_GUARD {
        return Err(TreesError::SizeGuard { n, limit: TREE_SIZE_GUARD });
    }
    if n == 1 {
        return Ok(vec![Graph::empty(1)]);
    }
    let centroid_cap = (n - 1) / 2;
    let table = rooted_up_to(centroid_cap.max(n / 2));
    let mut out = Vec::new();

    // Unique centroid: all root subtrees within the centroid cap.
    let mut current = Vec::new();
    collect_child_multisets(&table, n - 1, centroid_cap, None, &mut current, &mut |children| {
        let root = Rooted { size: n, children: children.to_vec() };
        out.push(rooted_to_graph(n, &root));
    });

    // Bicentral trees: unordered pairs of rooted halves joined by an edge.
    if n % 2 == 0 {
        let halves = &table[n / 2];
        for i in 0..halves.len() {
            for j in i..halves.len() {
                out.push(pair_to_graph(n, &halves[i], &halves[j]));
            }
        }
    }
    Ok(out)
}

/// True iff a degree multiset can belong to a tree: positive entries (except
/// the single-vertex tree) summing to 2(n-1).
pub fn tree_multiset_feasible(multiset: &[usize]) -> bool {
    let n = multiset.len();
    if n == 0 {
        return false;
    }
    let sum: usize = multiset.iter().sum();
    sum == 2 * (n - 1) && (n == 1 || multiset.iter().all(|&d| d >= 1))
}

/// Keeps exactly the graphs whose sorted degree multiset matches. An
/// infeasible multiset short-circuits to an empty result without touching
/// the stream.
pub fn filter_degree_sequence(trees: &[Graph], multiset: &[usize]) -> Vec<Graph> {
    if !tree_multiset_feasible(multiset) {
        return Vec::new();
    }
    let mut target = multiset.to_vec();
    target.sort_unstable();
    trees
        .iter()
        .filter(|g| {
            let mut d = g.degrees().to_vec();
            d.sort_unstable();
            d == target
        })
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::tree_certificate;
    use std::collections::HashSet;

    #[test]
    fn known_counts_through_twelve() {
        let expected = [1usize, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            let trees = generate_trees(n).unwrap();
            assert_eq!(trees.len(), want, "count at n={n}");
            for t in &trees {
                assert!(t.is_tree(), "non-tree at n={n}");
            }
        }
        assert!(generate_trees(0).is_err());
        assert!(generate_trees(17).is_err());
    }

    #[test]
    fn no_isomorphic_duplicates_up_to_ten() {
        for n in 1..=10 {
            let trees = generate_trees(n).unwrap();
            let certs: HashSet<Vec<u8>> = trees.iter().map(tree_certificate).collect();
            assert_eq!(certs.len(), trees.len(), "duplicate at n={n}");
        }
    }

    #[test]
    fn degree_filter_examples() {
        let t4 = generate_trees(4).unwrap();
        let stars = filter_degree_sequence(&t4, &[1, 1, 1, 3]);
        assert_eq!(stars.len(), 1);
        assert_eq!(stars[0].max_degree(), 3);

        assert!(filter_degree_sequence(&t4, &[2, 2, 2, 2]).is_empty());
        assert!(!tree_multiset_feasible(&[2, 2, 2, 2]));
        assert!(tree_multiset_feasible(&[1, 1, 1, 3]));
        assert!(tree_multiset_feasible(&[0]));
        assert!(!tree_multiset_feasible(&[]));

        let t12 = generate_trees(12).unwrap();
        let spider_like = filter_degree_sequence(&t12, &[3, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1]);
        assert!(!spider_like.is_empty());
        for t in &spider_like {
            let mut d = t.degrees().to_vec();
            d.sort_unstable();
            assert_eq!(d, vec![1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 3]);
        }
    }

    #[test]
    fn path_and_star_always_present() {
        for n in 2..=12 {
            let trees = generate_trees(n).unwrap();
            let has_path = trees.iter().any(|t| t.max_degree() <= 2);
            let has_star = trees.iter().any(|t| t.max_degree() == n - 1);
            assert!(has_path && has_star, "n={n}");
        }
    }
}
