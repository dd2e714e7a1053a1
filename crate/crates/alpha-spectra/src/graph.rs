//! Simple undirected graphs: representation, named families, and the graph
//! operations the bound catalog needs (complement, line graph, powers, double
//! graph, joins, spanning trees).
//!
//! Graphs are immutable after construction, so they can be shared freely
//! across search workers.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) out of range for {n} vertices")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("invalid family parameters: {0}")]
    BadFamily(String),
    #[error("line graph requires at least one edge")]
    Edgeless,
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error("graph power exponent must be >= 1")]
    ZeroPower,
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
}

/// Undirected simple graph on vertices `0..n`. Adjacency is stored as a full
/// boolean matrix (desk-scale graphs only), with degrees and the edge count
/// cached at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    degrees: Vec<usize>,
    m: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph { n, adj: vec![false; n * n], degrees: vec![0; n], m: 0 }
    }

    /// Builds a graph from an explicit edge list. Rejects out-of-range
    /// endpoints, self-loops, and duplicate edges (in either orientation).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![false; n * n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u * n + v] {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        let degrees: Vec<usize> = (0..n).map(|u| (0..n).filter(|&v| adj[u * n + v]).count()).collect();
        let m = degrees.iter().sum::<usize>() / 2;
        Ok(Graph { n, adj, degrees, m })
    }

    /// Internal constructor from a prebuilt symmetric adjacency matrix.
    pub(crate) fn from_adj(n: usize, adj: Vec<bool>) -> Self {
        debug_assert_eq!(adj.len(), n * n);
        debug_assert!((0..n).all(|i| !adj[i * n + i]), "self-loop in adjacency");
        debug_assert!((0..n).all(|i| (0..n).all(|j| adj[i * n + j] == adj[j * n + i])));
        let degrees: Vec<usize> = (0..n).map(|u| (0..n).filter(|&v| adj[u * n + v]).count()).collect();
        let m = degrees.iter().sum::<usize>() / 2;
        Graph { n, adj, degrees, m }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_edge(u, v))
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// BFS distances from `src`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m == self.n - 1 && self.is_connected()
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Complement on the same vertex set: `uv` is an edge iff `u != v` and
    /// `uv` is not an edge here.
    pub fn complement(&self) -> Graph {
        let n = self.n;
        let mut adj = vec![false; n * n];
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    adj[u * n + v] = !self.adj[u * n + v];
                }
            }
        }
        Graph::from_adj(n, adj)
    }

    /// Line graph: one vertex per edge (ordered lexicographically by
    /// endpoints), adjacency iff the edges share an endpoint. Errors on
    /// edgeless input.
    pub fn line_graph(&self) -> Result<Graph, GraphError> {
        if self.m == 0 {
            return Err(GraphError::Edgeless);
        }
        let edges = self.edges();
        let m = edges.len();
        let mut adj = vec![false; m * m];
        for i in 0..m {
            for j in (i + 1)..m {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    adj[i * m + j] = true;
                    adj[j * m + i] = true;
                }
            }
        }
        let lg = Graph::from_adj(m, adj);
        for (w, &(u, v)) in edges.iter().enumerate() {
            debug_assert_eq!(
                lg.degree(w),
                self.degree(u) + self.degree(v) - 2,
                "line-graph degree identity failed at edge ({u}, {v})"
            );
        }
        Ok(lg)
    }

    /// k-th power: `uv` adjacent iff their distance is between 1 and `k`.
    pub fn graph_power(&self, k: usize) -> Result<Graph, GraphError> {
        if k == 0 {
            return Err(GraphError::ZeroPower);
        }
        let n = self.n;
        let mut adj = vec![false; n * n];
        for u in 0..n {
            for (v, &d) in self.bfs_distances(u).iter().enumerate() {
                if v != u && d != usize::MAX && d <= k {
                    adj[u * n + v] = true;
                }
            }
        }
        Ok(Graph::from_adj(n, adj))
    }

    /// Double graph: two copies of the vertex set; for every edge `uv` the
    /// four pairs `uv`, `u(v+n)`, `(u+n)v`, `(u+n)(v+n)` become edges. Every
    /// output degree is twice the source degree.
    pub fn double_graph(&self) -> Graph {
        let n = self.n;
        let n2 = 2 * n;
        let mut adj = vec![false; n2 * n2];
        let mut put = |a: usize, b: usize| {
            adj[a * n2 + b] = true;
            adj[b * n2 + a] = true;
        };
        for (u, v) in self.edges() {
            put(u, v);
            put(u, v + n);
            put(u + n, v);
            put(u + n, v + n);
        }
        let dg = Graph::from_adj(n2, adj);
        debug_assert!((0..n).all(|v| dg.degree(v) == 2 * self.degree(v)));
        dg
    }

    /// Disjoint union; the second operand's vertices are relabeled by `+n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut adj = vec![false; n * n];
        for (u, v) in self.edges() {
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        for (u, v) in other.edges() {
            let (u, v) = (u + self.n, v + self.n);
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Graph::from_adj(n, adj)
    }

    /// BFS spanning tree rooted at vertex 0. Deterministic; errors on
    /// disconnected input.
    pub fn spanning_tree(&self) -> Result<Graph, GraphError> {
        if self.n == 0 {
            return Ok(Graph::empty(0));
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let mut tree_edges = Vec::with_capacity(self.n.saturating_sub(1));
        let mut seen = vec![false; self.n];
        let mut queue = std::collections::VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    tree_edges.push((u, v));
                    queue.push_back(v);
                }
            }
        }
        Graph::from_edges(self.n, &tree_edges)
    }

    /// Number of edges with exactly one endpoint in `u`.
    pub fn edge_boundary(&self, u: &VertexSubset) -> Result<usize, GraphError> {
        let mut inside = vec![false; self.n];
        for &v in u.members() {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { v, n: self.n });
            }
            inside[v] = true;
        }
        Ok(self
            .edges()
            .iter()
            .filter(|&&(a, b)| inside[a] != inside[b])
            .count())
    }

    /// The Petersen graph (Kneser graph on the 2-subsets of a 5-set).
    pub fn petersen() -> Graph {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|a| ((a + 1)..5).map(move |b| (a, b)))
            .collect();
        let mut edges = Vec::new();
        for i in 0..pairs.len() {
            for j in (i + 1)..pairs.len() {
                let (a, b) = pairs[i];
                let (c, d) = pairs[j];
                if a != c && a != d && b != c && b != d {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(10, &edges).expect("static construction")
    }
}

/// Three-part join used by one of the conjecture checks: parts A (isolated
/// vertices), B (a clique), C (an edge), with complete joins A–B and B–C and
/// no A–C edges.
pub fn p3_join_hnk(n: usize, k: usize) -> Result<Graph, GraphError> {
    if k < 3 || k + 2 > n {
        return Err(GraphError::BadFamily(format!(
            "three-part join needs 3 <= k <= n-2, got n={n}, k={k}"
        )));
    }
    let a = n - k - 1; // isolated part
    let b = k - 1; // clique part
    let mut edges = Vec::new();
    // B internal (vertices a..a+b), C internal (vertices a+b, a+b+1 shifted below)
    for i in 0..b {
        for j in (i + 1)..b {
            edges.push((a + i, a + j));
        }
    }
    let c0 = a + b;
    let c1 = a + b + 1;
    edges.push((c0, c1));
    for i in 0..a {
        for j in 0..b {
            edges.push((i, a + j));
        }
    }
    for j in 0..b {
        edges.push((a + j, c0));
        edges.push((a + j, c1));
    }
    Graph::from_edges(n, &edges)
}

/// Named graph families buildable from small integer parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    Empty(usize),
    StarPlusEdge(usize),
}

impl Family {
    /// Parses `name:a` or `name:a,b` (e.g. `path:12`, `complete_bipartite:2,3`).
    pub fn parse(spec: &str) -> Result<Family, GraphError> {
        let bad = || GraphError::BadFamily(format!("cannot parse family spec {spec:?}"));
        let (name, params) = spec.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        let one = || -> Result<usize, GraphError> {
            if nums.len() == 1 { Ok(nums[0]) } else { Err(bad()) }
        };
        match name {
            "path" => Ok(Family::Path(one()?)),
            "cycle" => Ok(Family::Cycle(one()?)),
            "complete" => Ok(Family::Complete(one()?)),
            "star" => Ok(Family::Star(one()?)),
            "empty" => Ok(Family::Empty(one()?)),
            "star_plus_edge" => Ok(Family::StarPlusEdge(one()?)),
            "complete_bipartite" => {
                if nums.len() == 2 {
                    Ok(Family::CompleteBipartite(nums[0], nums[1]))
                } else {
                    Err(bad())
                }
            }
            _ => Err(bad()),
        }
    }

    pub fn build(&self) -> Result<Graph, GraphError> {
        match *self {
            Family::Path(n) => {
                require(n >= 1, "path needs n >= 1")?;
                Graph::from_edges(n, &consecutive(n))
            }
            Family::Cycle(n) => {
                require(n >= 3, "cycle needs n >= 3")?;
                let mut e = consecutive(n);
                e.push((n - 1, 0));
                Graph::from_edges(n, &e)
            }
            Family::Complete(n) => {
                require(n >= 1, "complete graph needs n >= 1")?;
                let e: Vec<_> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
                Graph::from_edges(n, &e)
            }
            Family::Star(n) => {
                require(n >= 1, "star needs n >= 1")?;
                let e: Vec<_> = (1..n).map(|v| (0, v)).collect();
                Graph::from_edges(n, &e)
            }
            Family::CompleteBipartite(s, t) => {
                require(s >= 1 && t >= 1, "complete bipartite needs s, t >= 1")?;
                let e: Vec<_> = (0..s).flat_map(|u| (0..t).map(move |v| (u, s + v))).collect();
                Graph::from_edges(s + t, &e)
            }
            Family::Empty(n) => Ok(Graph::empty(n)),
            Family::StarPlusEdge(n) => {
                require(n >= 3, "star plus edge needs n >= 3")?;
                let mut e: Vec<_> = (1..n).map(|v| (0, v)).collect();
                e.push((1, 2));
                Graph::from_edges(n, &e)
            }
        }
    }
}

fn require(cond: bool, msg: &str) -> Result<(), GraphError> {
    if cond { Ok(()) } else { Err(GraphError::BadFamily(msg.into())) }
}

fn consecutive(n: usize) -> Vec<(usize, usize)> {
    (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect()
}

/// Sorted, duplicate-free set of vertex indices relative to a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSubset {
    members: Vec<usize>,
}

impl VertexSubset {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSubset { members: v }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees_sorted(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees().to_vec();
        d.sort_unstable();
        d
    }

    #[test]
    fn family_examples() {
        let p3 = Family::Path(3).build().unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(p3.edge_count(), 2);

        let spe = Family::StarPlusEdge(4).build().unwrap();
        assert_eq!(degrees_sorted(&spe), vec![1, 2, 2, 3]);

        let k22 = Family::CompleteBipartite(2, 2).build().unwrap();
        assert_eq!(k22.edge_count(), 4);
        assert_eq!(degrees_sorted(&k22), vec![2, 2, 2, 2]);
        assert!(k22.is_connected());

        assert!(Family::Cycle(2).build().is_err());
        assert!(Family::StarPlusEdge(2).build().is_err());
        assert!(Family::Path(0).build().is_err());
    }

    #[test]
    fn family_parsing() {
        assert_eq!(Family::parse("path:12").unwrap(), Family::Path(12));
        assert_eq!(
            Family::parse("complete_bipartite:2,3").unwrap(),
            Family::CompleteBipartite(2, 3)
        );
        assert!(Family::parse("path").is_err());
        assert!(Family::parse("path:x").is_err());
        assert!(Family::parse("blorp:3").is_err());
        assert!(Family::parse("complete_bipartite:2").is_err());
    }

    #[test]
    fn from_edges_validation() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::EdgeOutOfRange { .. })
        ));
        assert!(matches!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1))));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        ));
    }

    #[test]
    fn complement_examples() {
        let k4 = Family::Complete(4).build().unwrap();
        assert_eq!(k4.complement(), Graph::empty(4));
        assert_eq!(k4.complement().complement(), k4);

        let p3 = Family::Path(3).build().unwrap();
        assert_eq!(p3.complement().edges(), vec![(0, 2)]);

        let c5 = Family::Cycle(5).build().unwrap();
        let cc5 = c5.complement();
        assert_eq!(degrees_sorted(&cc5), vec![2; 5]);
        assert!(cc5.is_connected());
    }

    #[test]
    fn line_graph_examples() {
        let p4 = Family::Path(4).build().unwrap();
        let lp4 = p4.line_graph().unwrap();
        assert_eq!(lp4.vertex_count(), 3);
        assert_eq!(lp4.edges(), vec![(0, 1), (1, 2)]);

        let star = Family::Star(4).build().unwrap();
        let lstar = star.line_graph().unwrap();
        assert_eq!(lstar, Family::Complete(3).build().unwrap());

        for n in 3..8 {
            let cn = Family::Cycle(n).build().unwrap();
            let lcn = cn.line_graph().unwrap();
            assert_eq!(lcn.vertex_count(), n);
            assert_eq!(lcn.edge_count(), n);
            assert_eq!(degrees_sorted(&lcn), vec![2; n]);
            assert!(lcn.is_connected());
        }

        assert!(Graph::empty(3).line_graph().is_err());
    }

    #[test]
    fn graph_power_examples() {
        let p4 = Family::Path(4).build().unwrap();
        assert!(p4.graph_power(0).is_err());
        assert_eq!(p4.graph_power(1).unwrap(), p4);
        let sq = p4.graph_power(2).unwrap();
        assert_eq!(sq.edges(), vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(p4.graph_power(3).unwrap(), Family::Complete(4).build().unwrap());
    }

    #[test]
    fn double_graph_examples() {
        let k2 = Family::Complete(2).build().unwrap();
        let d = k2.double_graph();
        // C4: 4 vertices, 4 edges, 2-regular, connected, triangle-free.
        assert_eq!(d.vertex_count(), 4);
        assert_eq!(d.edge_count(), 4);
        assert_eq!(degrees_sorted(&d), vec![2; 4]);
        assert!(d.is_connected());
        assert!(!d.has_edge(0, 2) && !d.has_edge(1, 3));

        assert_eq!(Graph::empty(3).double_graph(), Graph::empty(6));

        let k3 = Family::Complete(3).build().unwrap();
        let d3 = k3.double_graph();
        assert_eq!(d3.vertex_count(), 6);
        assert_eq!(d3.edge_count(), 12);
        assert_eq!(degrees_sorted(&d3), vec![4; 6]);
    }

    #[test]
    fn three_part_join_examples() {
        let h53 = p3_join_hnk(5, 3).unwrap();
        assert_eq!(h53.edge_count(), 8);
        // Part A vertex 0 has degree 2; part B vertices have degree 4; part C degree 3.
        assert_eq!(h53.degree(0), 2);
        assert_eq!(h53.degree(1), 4);
        assert_eq!(h53.degree(2), 4);
        assert_eq!(h53.degree(3), 3);
        assert_eq!(h53.degree(4), 3);

        assert_eq!(p3_join_hnk(6, 3).unwrap().edge_count(), 10);
        assert!(p3_join_hnk(5, 2).is_err());
        assert!(p3_join_hnk(5, 4).is_err());
    }

    #[test]
    fn union_and_spanning_tree() {
        let k2 = Family::Complete(2).build().unwrap();
        let u = k2.disjoint_union(&k2);
        assert_eq!(u.vertex_count(), 4);
        assert_eq!(u.edge_count(), 2);
        assert!(!u.is_connected());
        assert!(u.spanning_tree().is_err());

        let c4 = Family::Cycle(4).build().unwrap();
        let t = c4.spanning_tree().unwrap();
        assert!(t.is_tree());
        assert_eq!(degrees_sorted(&t), vec![1, 1, 2, 2]); // a path

        let k3 = Family::Complete(3).build().unwrap();
        let t3 = k3.spanning_tree().unwrap();
        assert_eq!(degrees_sorted(&t3), vec![1, 1, 2]);
    }

    #[test]
    fn edge_boundary_examples() {
        let c4 = Family::Cycle(4).build().unwrap();
        assert_eq!(c4.edge_boundary(&VertexSubset::new([0])).unwrap(), 2);
        assert_eq!(c4.edge_boundary(&VertexSubset::new([])).unwrap(), 0);
        let k4 = Family::Complete(4).build().unwrap();
        assert_eq!(k4.edge_boundary(&VertexSubset::new([0, 1])).unwrap(), 4);
        assert!(k4.edge_boundary(&VertexSubset::new([9])).is_err());
    }

    #[test]
    fn petersen_shape() {
        let p = Graph::petersen();
        assert_eq!(p.vertex_count(), 10);
        assert_eq!(p.edge_count(), 15);
        assert_eq!(degrees_sorted(&p), vec![3; 10]);
        assert!(p.is_connected());
        // girth 5: no triangles, no 4-cycles
        let d = p.bfs_distances(0);
        assert!(d.iter().all(|&x| x <= 2));
    }
}
