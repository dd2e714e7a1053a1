//! Exact combinatorial invariants used inside the bound catalog: Zagreb
//! index, matching number, nullity, independence and chromatic numbers,
//! bipartiteness, triangle/quadrilateral freeness, and clique / even-cycle
//! packings with validators.
//!
//! Everything here is integer-exact; nothing depends on floating point.

use crate::graph::{Graph, VertexSubset};
use num_bigint::BigInt;
use std::collections::VecDeque;
use thiserror::Error;

/// Exponential-search guard for the independence and chromatic numbers.
pub const EXACT_SIZE_GUARD: usize = 24;

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("exact search guard: n = {n} exceeds limit {limit}")]
    SizeGuard { n: usize, limit: usize },
}

/// One-stop collection of the integer invariants of a graph. The
/// exponential-cost fields (`theta`, `chi`) are populated only within the
/// size guard and are `None` beyond it.
#[derive(Debug, Clone)]
pub struct InvariantBundle {
    pub n: usize,
    pub m: usize,
    pub delta_max: usize,
    pub delta_min: usize,
    /// First Zagreb index: sum of squared degrees.
    pub z1: u64,
    /// Matching number.
    pub beta: usize,
    /// Multiplicity of the zero eigenvalue of the adjacency matrix.
    pub eta: usize,
    /// Independence number (within the size guard).
    pub theta: Option<usize>,
    /// Chromatic number (within the size guard).
    pub chi: Option<usize>,
    /// Two-coloring witness when the graph has no odd cycle.
    pub bipartition: Option<(VertexSubset, VertexSubset)>,
    /// Common degree when the graph is regular.
    pub regular_degree: Option<usize>,
    pub is_connected: bool,
}

pub fn compute_bundle(g: &Graph) -> InvariantBundle {
    let n = g.vertex_count();
    let within_guard = n <= EXACT_SIZE_GUARD;
    InvariantBundle {
        n,
        m: g.edge_count(),
        delta_max: g.max_degree(),
        delta_min: g.min_degree(),
        z1: first_zagreb(g),
        beta: matching_number(g),
        eta: nullity(g),
        theta: within_guard.then(|| independence_number(g).expect("within guard")),
        chi: within_guard.then(|| chromatic_number(g).expect("within guard")),
        bipartition: bipartition(g),
        regular_degree: (n > 0 && g.max_degree() == g.min_degree()).then(|| g.max_degree()),
        is_connected: g.is_connected(),
    }
}

/// First Zagreb index: sum of the squares of the vertex degrees.
pub fn first_zagreb(g: &Graph) -> u64 {
    g.degrees().iter().map(|&d| (d as u64) * (d as u64)).sum()
}

/// Maximum matching size on a general graph, via augmenting-path search with
/// blossom contraction.
pub fn matching_number(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    // Greedy seed matching reduces the number of augmentation phases.
    for u in 0..n {
        if mate[u].is_none() {
            if let Some(v) = g.neighbors(u).find(|&v| mate[v].is_none()) {
                mate[u] = Some(v);
                mate[v] = Some(u);
            }
        }
    }

    fn mark_path(
        g_mate: &[Option<usize>],
        parent: &mut [Option<usize>],
        base: &[usize],
        in_blossom: &mut [bool],
        mut v: usize,
        b: usize,
        mut child: usize,
    ) {
        while base[v] != b {
            let mv = g_mate[v].expect("interior blossom vertex is matched");
            in_blossom[base[v]] = true;
            in_blossom[base[mv]] = true;
            parent[v] = Some(child);
            child = mv;
            v = parent[mv].expect("matched vertex has a tree parent");
        }
    }

    fn lowest_common_base(
        g_mate: &[Option<usize>],
        parent: &[Option<usize>],
        base: &[usize],
        a: usize,
        b: usize,
    ) -> usize {
        let n = base.len();
        let mut seen = vec![false; n];
        let mut x = base[a];
        loop {
            seen[x] = true;
            match g_mate[x] {
                None => break,
                Some(mx) => x = base[parent[mx].expect("tree parent")],
            }
        }
        let mut y = base[b];
        loop {
            if seen[y] {
                return y;
            }
            y = base[parent[g_mate[y].expect("matched")].expect("tree parent")];
        }
    }

    for root in 0..n {
        if mate[root].is_some() {
            continue;
        }
        // Grow an alternating tree from the exposed root.
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let mut base: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        let mut queue = VecDeque::new();
        used[root] = true;
        queue.push_back(root);
        let mut exposed: Option<usize> = None;
        'bfs: while let Some(v) = queue.pop_front() {
            for to in g.neighbors(v) {
                if base[v] == base[to] || mate[v] == Some(to) {
                    continue;
                }
                if to == root || mate[to].is_some_and(|mt| parent[mt].is_some()) {
                    // Odd cycle found: contract the blossom.
                    let cur_base = lowest_common_base(&mate, &parent, &base, v, to);
                    let mut in_blossom = vec![false; n];
                    mark_path(&mate, &mut parent, &base, &mut in_blossom, v, cur_base, to);
                    mark_path(&mate, &mut parent, &base, &mut in_blossom, to, cur_base, v);
                    for i in 0..n {
                        if in_blossom[base[i]] {
                            base[i] = cur_base;
                            if !used[i] {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[to].is_none() {
                    parent[to] = Some(v);
                    match mate[to] {
                        None => {
                            exposed = Some(to);
                            break 'bfs;
                        }
                        Some(mt) => {
                            used[mt] = true;
                            queue.push_back(mt);
                        }
                    }
                }
            }
        }
        if let Some(mut v) = exposed {
            // Flip matched/unmatched along the augmenting path.
            loop {
                let pv = parent[v].expect("augmenting path reaches the root");
                let next = mate[pv];
                mate[v] = Some(pv);
                mate[pv] = Some(v);
                match next {
                    None => break,
                    Some(x) => v = x,
                }
            }
        }
    }
    mate.iter().flatten().count() / 2
}

/// Reference maximum-matching by subset dynamic programming (n <= 16).
/// Exists solely to cross-check the blossom implementation.
#[doc(hidden)]
pub fn matching_number_bruteforce(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 16, "bruteforce matching supports n <= 16");
    let adj: Vec<u32> = (0..n)
        .map(|u| g.neighbors(u).fold(0u32, |acc, v| acc | (1 << v)))
        .collect();
    let mut dp = vec![0u8; 1usize << n];
    for mask in 1u32..(1u32 << n) {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = dp[rest as usize];
        let mut nbrs = adj[v] & rest;
        while nbrs != 0 {
            let u = nbrs.trailing_zeros();
            nbrs &= nbrs - 1;
            best = best.max(1 + dp[(rest & !(1 << u)) as usize]);
        }
        dp[mask as usize] = best;
    }
    dp[(1usize << n) - 1] as usize
}

/// Multiplicity of the zero eigenvalue of A(G), computed as n - rank(A) with
/// the rank obtained by fraction-free integer elimination. No floating
/// tolerance is involved.
pub fn nullity(g: &Graph) -> usize {
    let n = g.vertex_count();
    let zero = BigInt::from(0);
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(g.has_edge(i, j) as u8)).collect())
        .collect();
    let mut rank = 0usize;
    let mut prev = BigInt::from(1);
    for col in 0..n {
        let Some(p) = (rank..n).find(|&r| a[r][col] != zero) else {
            continue;
        };
        a.swap(rank, p);
        for i in (rank + 1)..n {
            for j in (col + 1)..n {
                let num = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                debug_assert!(
                    (&num % &prev) == zero,
                    "fraction-free elimination must divide exactly"
                );
                a[i][j] = num / &prev;
            }
            a[i][col] = zero.clone();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    n - rank
}

/// Exact independence number by branch and bound. Guarded to n <= 24.
pub fn independence_number(g: &Graph) -> Result<usize, InvariantError> {
    let n = g.vertex_count();
    if n > EXACT_SIZE_GUARD {
        return Err(InvariantError::SizeGuard { n, limit: EXACT_SIZE_GUARD });
    }
    let adj: Vec<u32> = (0..n)
        .map(|u| g.neighbors(u).fold(0u32, |acc, v| acc | (1 << v)))
        .collect();

    fn rec(adj: &[u32], mask: u32, current: usize, best: &mut usize) {
        if current + mask.count_ones() as usize <= *best {
            return;
        }
        if mask == 0 {
            *best = (*best).max(current);
            return;
        }
        // Vertices of degree <= 1 inside the residual graph always belong to
        // some maximum independent set; otherwise branch on a max-degree one.
        let mut pivot = usize::MAX;
        let mut pivot_deg = 0;
        let mut scan = mask;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let dv = (adj[v] & mask).count_ones();
            if dv <= 1 {
                rec(adj, mask & !adj[v] & !(1 << v), current + 1, best);
                return;
            }
            if dv >= pivot_deg {
                pivot_deg = dv;
                pivot = v;
            }
        }
        rec(adj, mask & !adj[pivot] & !(1 << pivot), current + 1, best);
        rec(adj, mask & !(1 << pivot), current, best);
    }

    let mut best = 0;
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    rec(&adj, full, 0, &mut best);
    Ok(best)
}

/// Exact chromatic number: lower-bound by a greedy clique, upper-bound by a
/// greedy coloring, then iterative deepening on k-colorability. Guarded to
/// n <= 24.
pub fn chromatic_number(g: &Graph) -> Result<usize, InvariantError> {
    let n = g.vertex_count();
    if n > EXACT_SIZE_GUARD {
        return Err(InvariantError::SizeGuard { n, limit: EXACT_SIZE_GUARD });
    }
    if n == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));

    // Greedy clique along the degree order.
    let mut clique: Vec<usize> = Vec::new();
    for &v in &order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    let lower = clique.len().max(2);

    // Greedy coloring upper bound.
    let mut color = vec![usize::MAX; n];
    let mut upper = 0;
    for &v in &order {
        let mut c = 0;
        while g.neighbors(v).any(|u| color[u] == c) {
            c += 1;
        }
        color[v] = c;
        upper = upper.max(c + 1);
    }

    fn colorable(
        g: &Graph,
        order: &[usize],
        colors: &mut [usize],
        pos: usize,
        k: usize,
        used: usize,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        // Symmetry breaking: at most one brand-new color per step.
        for c in 0..=used.min(k - 1) {
            if g.neighbors(v).all(|u| colors[u] != c) {
                colors[v] = c;
                if colorable(g, order, colors, pos + 1, k, used.max(c + 1)) {
                    return true;
                }
                colors[v] = usize::MAX;
            }
        }
        false
    }

    for k in lower..upper {
        let mut colors = vec![usize::MAX; n];
        if colorable(g, &order, &mut colors, 0, k, 0) {
            return Ok(k);
        }
    }
    Ok(upper)
}

/// Two-coloring by BFS per component; `None` when an odd cycle exists. Each
/// component's smallest vertex lands in the first class, so the output is
/// deterministic.
pub fn bipartition(g: &Graph) -> Option<(VertexSubset, VertexSubset)> {
    let n = g.vertex_count();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!color[u].unwrap());
                        queue.push_back(v);
                    }
                    Some(c) => {
                        if c == color[u].unwrap() {
                            return None;
                        }
                    }
                }
            }
        }
    }
    let x = VertexSubset::new((0..n).filter(|&v| color[v] == Some(false)));
    let y = VertexSubset::new((0..n).filter(|&v| color[v] == Some(true)));
    Some((x, y))
}

/// True iff the graph contains neither a triangle nor a 4-cycle (as
/// subgraphs), decided by common-neighbor counts.
pub fn is_k3_free_and_c4_free(g: &Graph) -> bool {
    let n = g.vertex_count();
    for u in 0..n {
        for v in (u + 1)..n {
            let common = (0..n)
                .filter(|&w| w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w))
                .count();
            if common >= 2 {
                return false; // two shared neighbors close a 4-cycle
            }
            if common >= 1 && g.has_edge(u, v) {
                return false; // shared neighbor of an edge closes a triangle
            }
        }
    }
    true
}

/// Pairwise vertex-disjoint cliques, each with at least two vertices.
#[derive(Debug, Clone)]
pub struct CliquePacking {
    pub cliques: Vec<VertexSubset>,
}

impl CliquePacking {
    pub fn count(&self) -> usize {
        self.cliques.len()
    }

    /// Clique orders, sorted descending.
    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.cliques.iter().map(|c| c.len()).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }
}

/// Pairwise vertex-disjoint induced even cycles, stored as vertex sequences.
#[derive(Debug, Clone)]
pub struct CyclePacking {
    pub cycles: Vec<Vec<usize>>,
}

impl CyclePacking {
    pub fn count(&self) -> usize {
        self.cycles.len()
    }

    /// Cycle lengths, sorted descending.
    pub fn lengths(&self) -> Vec<usize> {
        let mut l: Vec<usize> = self.cycles.iter().map(|c| c.len()).collect();
        l.sort_unstable_by(|a, b| b.cmp(a));
        l
    }
}

/// Why a packing failed validation. The Display form is the reason code used
/// in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PackingViolation {
    #[error("overlap")]
    Overlap,
    #[error("not-induced")]
    NotInduced,
    #[error("odd-length")]
    OddLength,
    #[error("too-small")]
    TooSmall,
    #[error("out-of-range")]
    OutOfRange,
}

pub fn validate_clique_packing(g: &Graph, packing: &CliquePacking) -> Result<(), PackingViolation> {
    let n = g.vertex_count();
    let mut used = vec![false; n];
    for clique in &packing.cliques {
        if clique.len() < 2 {
            return Err(PackingViolation::TooSmall);
        }
        for &v in clique.members() {
            if v >= n {
                return Err(PackingViolation::OutOfRange);
            }
            if used[v] {
                return Err(PackingViolation::Overlap);
            }
            used[v] = true;
        }
        let mem = clique.members();
        for i in 0..mem.len() {
            for j in (i + 1)..mem.len() {
                if !g.has_edge(mem[i], mem[j]) {
                    return Err(PackingViolation::NotInduced);
                }
            }
        }
    }
    Ok(())
}

pub fn validate_cycle_packing(g: &Graph, packing: &CyclePacking) -> Result<(), PackingViolation> {
    let n = g.vertex_count();
    let mut used = vec![false; n];
    for cycle in &packing.cycles {
        let len = cycle.len();
        if len < 3 {
            return Err(PackingViolation::NotInduced);
        }
        for &v in cycle {
            if v >= n {
                return Err(PackingViolation::OutOfRange);
            }
            if used[v] {
                return Err(PackingViolation::Overlap);
            }
            used[v] = true;
        }
        // Induced cycle: consecutive pairs adjacent, all other pairs not.
        for i in 0..len {
            for j in (i + 1)..len {
                let consecutive = j == i + 1 || (i == 0 && j == len - 1);
                if g.has_edge(cycle[i], cycle[j]) != consecutive {
                    return Err(PackingViolation::NotInduced);
                }
            }
        }
        if len % 2 != 0 {
            return Err(PackingViolation::OddLength);
        }
    }
    Ok(())
}

/// Greedy clique packing: grow a clique from each unused vertex in ascending
/// order, keep it when it has at least two vertices. Valid but not maximum;
/// callers may substitute any packing that validates.
pub fn find_clique_packing(g: &Graph) -> CliquePacking {
    let n = g.vertex_count();
    let mut used = vec![false; n];
    let mut cliques = Vec::new();
    for v in 0..n {
        if used[v] {
            continue;
        }
        let mut c = vec![v];
        for u in (v + 1)..n {
            if !used[u] && c.iter().all(|&w| g.has_edge(w, u)) {
                c.push(u);
            }
        }
        if c.len() >= 2 {
            for &w in &c {
                used[w] = true;
            }
            cliques.push(VertexSubset::new(c));
        }
    }
    CliquePacking { cliques }
}

/// All induced even cycles, each reported once: smallest vertex first, and of
/// the two directions the one whose second vertex is smaller than its last.
pub fn induced_even_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    let mut path = Vec::new();

    fn extend(
        g: &Graph,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let s = path[0];
        let last = *path.last().unwrap();
        let len = path.len();
        for w in g.neighbors(last) {
            if w <= s || on_path[w] {
                continue;
            }
            // Interior adjacency would become a chord of any completed cycle.
            let interior = if len >= 2 { &path[1..len - 1] } else { &[][..] };
            if interior.iter().any(|&x| g.has_edge(w, x)) {
                continue;
            }
            if len == 1 {
                // The s-w edge is the path edge itself here, not a chord.
                path.push(w);
                on_path[w] = true;
                extend(g, path, on_path, out);
                on_path[w] = false;
                path.pop();
            } else if g.has_edge(w, s) {
                let cycle_len = len + 1;
                if cycle_len >= 4 && cycle_len % 2 == 0 && path[1] < w {
                    let mut cycle = path.clone();
                    cycle.push(w);
                    out.push(cycle);
                }
                // No extension: the s-w edge would remain as a chord.
            } else {
                path.push(w);
                on_path[w] = true;
                extend(g, path, on_path, out);
                on_path[w] = false;
                path.pop();
            }
        }
    }

    for s in 0..n {
        path.push(s);
        on_path[s] = true;
        extend(g, &mut path, &mut on_path, &mut out);
        on_path[s] = false;
        path.pop();
    }
    out
}

/// Greedy even-cycle packing: list the induced even cycles, longest first
/// (ties by vertex sequence), and take each cycle that is disjoint from the
/// ones already chosen.
pub fn find_even_cycle_packing(g: &Graph) -> CyclePacking {
    let n = g.vertex_count();
    let mut cycles = induced_even_cycles(g);
    cycles.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let mut used = vec![false; n];
    let mut chosen = Vec::new();
    for cyc in cycles {
        if cyc.iter().all(|&v| !used[v]) {
            for &v in &cyc {
                used[v] = true;
            }
            chosen.push(cyc);
        }
    }
    CyclePacking { cycles: chosen }
}
