//! Exhaustive and family-restricted searches: minimization of spectral
//! objectives over graph streams, conjecture checking with violation
//! reports, and the fixed 12-vertex tree census with its per-degree-class
//! minima. Reports are deterministic: parallel workers compute per-graph
//! values, aggregation is sequential in input order, and tie sets are
//! sorted, so rerunning a task reproduces the same report except for the
//! wall-time field.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{BoundsError, CatalogId, EvalContext, Tolerance};
use crate::canon::{canonical_key, connected_graphs};
use crate::graph::{p3_join_hnk, Graph, GraphError};
use crate::graph6::{self, Graph6Error};
use crate::linalg::LinalgError;
use crate::spectra::{self, AlphaValue, MatrixKind, SpectraError};
use crate::trees::TreesError;
pub use crate::trees::{filter_degree_sequence, generate_trees, tree_multiset_feasible};

/// Degree multiset fixtures for the 12-vertex tree census. The last entry
/// of the B family has degree sum 18 != 22 and therefore names no
/// 12-vertex tree; the feasibility check excludes it and the report notes
/// the discrepancy.
pub const T55_CLASS_A: &[usize] = &[4, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1];
pub const T55_CLASS_B: &[&[usize]] = &[
    &[3, 3, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1],
    &[3, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 1],
    &[3, 3, 3, 3, 2, 2, 1, 1, 1, 1, 1, 1],
    &[3, 3, 3, 3, 3, 1, 1, 1, 1, 1, 1, 1],
    &[3, 3, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1],
];
pub const T55_CLASS_C: &[usize] = &[3, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1];
pub const T55_CLASS_STAR: &[usize] = &[11, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1];

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("empty graph stream")]
    EmptyStream,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Trees(#[from] TreesError),
}

/// What a minimization run optimizes per graph.
#[derive(Clone, Copy, Debug)]
pub enum Objective {
    /// Sum of the two largest signless-Laplacian eigenvalues.
    S2Q,
    /// Sum of the two largest pencil eigenvalues at a fixed alpha.
    S2Alpha(AlphaValue),
    /// alpha*m + alpha + 1 - S_2(pencil), defined for alpha in [1/2, 1).
    FProblem12(AlphaValue),
    /// Sum of the k largest pencil eigenvalues at a fixed alpha.
    SkAlpha(AlphaValue, usize),
}

impl Objective {
    fn validate(self) -> Result<(), SearchError> {
        match self {
            Objective::FProblem12(a) if !(0.5..1.0).contains(&a.value()) => Err(
                SearchError::Precondition(format!(
                    "objective f requires alpha in [1/2, 1); got {}",
                    a.value()
                )),
            ),
            Objective::SkAlpha(_, 0) => {
                Err(SearchError::Precondition("k must be at least 1".to_string()))
            }
            _ => Ok(()),
        }
    }

    fn alpha_grid(self) -> Vec<f64> {
        match self {
            Objective::S2Q => vec![],
            Objective::S2Alpha(a) | Objective::FProblem12(a) | Objective::SkAlpha(a, _) => {
                vec![a.value()]
            }
        }
    }

    fn k_set(self) -> Vec<usize> {
        match self {
            Objective::SkAlpha(_, k) => vec![k],
            _ => vec![2],
        }
    }

    fn value(self, g: &Graph) -> Result<f64, SearchError> {
        match self {
            Objective::S2Q => Ok(spectra::build_matrix(g, MatrixKind::SignlessLaplacian)
                .eigenvalues()?
                .s_k(2)?),
            Objective::S2Alpha(a) => Ok(spectra::sk_alpha(g, a, 2)?),
            Objective::FProblem12(a) => {
                let s2 = spectra::sk_alpha(g, a, 2)?;
                Ok(a.value() * g.edge_count() as f64 + a.value() + 1.0 - s2)
            }
            Objective::SkAlpha(a, k) => Ok(spectra::sk_alpha(g, a, k)?),
        }
    }
}

impl std::fmt::Display for Objective {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Objective::S2Q => write!(f, "s2_q"),
            Objective::S2Alpha(a) => write!(f, "s2_alpha({})", a.value()),
            Objective::FProblem12(a) => write!(f, "f_problem_1_2({})", a.value()),
            Objective::SkAlpha(a, k) => write!(f, "sk_alpha({},{})", a.value(), k),
        }
    }
}

/// The graph population a report ranged over.
#[derive(Clone, Debug, Serialize)]
pub struct UniverseDescriptor {
    pub family: String,
    pub n_min: usize,
    pub n_max: usize,
    pub alpha_grid: Vec<f64>,
    pub k_set: Vec<usize>,
}

/// One extremal witness: a labeled value with its graph6 certificate.
#[derive(Clone, Debug, Serialize)]
pub struct ExtremalEntry {
    pub label: String,
    pub graph6: String,
    pub value: f64,
}

/// One inequality breach: the claim `lhs <= rhs` (or `>=` for minimum
/// claims, as labeled by the task) failed on this instance.
#[derive(Clone, Debug, Serialize)]
pub struct ViolationEntry {
    pub graph6: String,
    pub alpha: f64,
    pub k: usize,
    pub lhs: f64,
    pub rhs: f64,
}

/// Outcome of one search task. Every field except `runtime_s` is a pure
/// function of the inputs.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub task: String,
    pub universe: UniverseDescriptor,
    pub count: usize,
    pub extremal: Vec<ExtremalEntry>,
    pub violations: Vec<ViolationEntry>,
    pub min_slack: Option<f64>,
    pub runtime_s: f64,
    pub notes: Vec<String>,
}

impl SearchReport {
    /// JSON with the wall-time field zeroed, for reproducibility checks.
    pub fn json_without_runtime(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serialization");
        v["runtime_s"] = serde_json::Value::from(0.0);
        v
    }
}

fn n_range(graphs: &[Graph]) -> (usize, usize) {
    graphs.iter().fold((usize::MAX, 0), |(lo, hi), g| {
        (lo.min(g.vertex_count()), hi.max(g.vertex_count()))
    })
}

fn sorted_dedup(mut certs: Vec<String>) -> Vec<String> {
    certs.sort();
    certs.dedup();
    certs
}

/// Minimizes an objective over a stream; ties are all kept, sorted by
/// certificate, so the result is invariant under stream order.
pub fn minimize_over(graphs: &[Graph], objective: Objective) -> Result<SearchReport, SearchError> {
    minimize_over_in("stream", graphs, objective)
}

/// `minimize_over` with an explicit universe label for the report.
pub fn minimize_over_in(
    family: &str,
    graphs: &[Graph],
    objective: Objective,
) -> Result<SearchReport, SearchError> {
    let start = Instant::now();
    if graphs.is_empty() {
        return Err(SearchError::EmptyStream);
    }
    objective.validate()?;
    let values: Vec<f64> =
        graphs.par_iter().map(|g| objective.value(g)).collect::<Result<_, _>>()?;
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let mut certs = Vec::new();
    for (g, &v) in graphs.iter().zip(&values) {
        if v == min {
            certs.push(graph6::encode(g)?);
        }
    }
    let certs = sorted_dedup(certs);
    let (n_min, n_max) = n_range(graphs);
    Ok(SearchReport {
        task: format!("minimize:{objective}"),
        universe: UniverseDescriptor {
            family: family.to_string(),
            n_min,
            n_max,
            alpha_grid: objective.alpha_grid(),
            k_set: objective.k_set(),
        },
        count: graphs.len(),
        extremal: certs
            .into_iter()
            .map(|graph6| ExtremalEntry { label: "min".to_string(), graph6, value: min })
            .collect(),
        violations: vec![],
        min_slack: None,
        runtime_s: start.elapsed().as_secs_f64(),
        notes: vec![],
    })
}

/// Checks `S_k(pencil) <= alpha*m + alpha*k(k+1)/2` over a universe for
/// every grid alpha in [1/2, 1) and every requested k (all valid k when
/// the set is empty). Violations are recorded; zero violations is an
/// outcome, not an assumption.
pub fn check_conjecture_1_3(
    family: &str,
    graphs: &[Graph],
    alpha_grid: &[AlphaValue],
    k_set: &[usize],
) -> Result<SearchReport, SearchError> {
    let start = Instant::now();
    for a in alpha_grid {
        if !(0.5..1.0).contains(&a.value()) {
            return Err(SearchError::Precondition(format!(
                "alpha grid must lie in [1/2, 1); got {}",
                a.value()
            )));
        }
    }
    let tol = Tolerance::from_env_or_default();

    struct PerGraph {
        graph6: String,
        violations: Vec<ViolationEntry>,
        min_slack: f64,
        min_at: Option<(f64, usize, f64)>,
    }

    let per_graph: Vec<PerGraph> = graphs
        .par_iter()
        .map(|g| -> Result<PerGraph, SearchError> {
            let ctx = EvalContext::with_tolerance(g, tol);
            let graph6 = graph6::encode(g)?;
            let n = g.vertex_count();
            let ks: Vec<usize> = if k_set.is_empty() {
                (1..=n).collect()
            } else {
                k_set.iter().copied().filter(|&k| k >= 1 && k <= n).collect()
            };
            let mut out = PerGraph {
                graph6,
                violations: vec![],
                min_slack: f64::INFINITY,
                min_at: None,
            };
            for &a in alpha_grid {
                for &k in &ks {
                    let rec = ctx.evaluate(CatalogId::C13, a, k, None)?;
                    if !rec.applicable {
                        continue;
                    }
                    let slack = rec.slack.expect("applicable upper bound has slack");
                    if slack < out.min_slack {
                        out.min_slack = slack;
                        out.min_at = Some((a.value(), k, slack));
                    }
                    if rec.is_violation(tol) {
                        out.violations.push(ViolationEntry {
                            graph6: out.graph6.clone(),
                            alpha: a.value(),
                            k,
                            lhs: rec.true_sk.expect("applicable record has true value"),
                            rhs: match rec.value.expect("applicable record has value") {
                                crate::bounds::BoundValue::Scalar(v) => v,
                                _ => unreachable!("scalar upper bound"),
                            },
                        });
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<_, _>>()?;

    let mut violations = Vec::new();
    let mut min_slack = f64::INFINITY;
    let mut extremal = Vec::new();
    for pg in &per_graph {
        violations.extend(pg.violations.iter().cloned());
        if pg.min_slack < min_slack {
            min_slack = pg.min_slack;
        }
    }
    for pg in &per_graph {
        if let Some((a, k, s)) = pg.min_at {
            if s == min_slack {
                extremal.push(ExtremalEntry {
                    label: format!("min-slack@alpha={a};k={k}"),
                    graph6: pg.graph6.clone(),
                    value: s,
                });
            }
        }
    }
    extremal.sort_by(|x, y| x.graph6.cmp(&y.graph6));
    violations.sort_by(|x, y| {
        (&x.graph6, x.alpha.to_bits(), x.k).cmp(&(&y.graph6, y.alpha.to_bits(), y.k))
    });
    let (n_min, n_max) = n_range(graphs);
    Ok(SearchReport {
        task: "check:c13".to_string(),
        universe: UniverseDescriptor {
            family: family.to_string(),
            n_min,
            n_max,
            alpha_grid: alpha_grid.iter().map(|a| a.value()).collect(),
            k_set: k_set.to_vec(),
        },
        count: graphs.len(),
        extremal,
        violations,
        min_slack: (min_slack.is_finite()).then_some(min_slack),
        runtime_s: start.elapsed().as_secs_f64(),
        notes: vec![],
    })
}

/// Checks the k-sum dominance of the three-part join benchmark over all
/// connected graphs on n vertices (internal enumeration, n <= 8).
pub fn check_conjecture_1_2(n: usize, k: usize) -> Result<SearchReport, SearchError> {
    if n > 8 {
        return Err(SearchError::Precondition(
            "internal enumeration covers n <= 8; supply a graph6 universe beyond that".to_string(),
        ));
    }
    check_c12_pre(n, k)?;
    check_conjecture_1_2_over("connected-graphs", &connected_graphs(n), n, k)
}

fn check_c12_pre(n: usize, k: usize) -> Result<(), SearchError> {
    if !(5..=9).contains(&n) || k < 3 || k + 2 > n {
        return Err(SearchError::Precondition(format!(
            "need 5 <= n <= 9 and 3 <= k <= n-2; got n={n}, k={k}"
        )));
    }
    Ok(())
}

/// `check_conjecture_1_2` over an externally supplied universe of
/// connected graphs on n vertices. Two claims are checked per graph G:
/// `S_k(Q(G)) <= S_k(Q(H))` for the benchmark H, and the strict cap
/// `S_k(Q(G)) < e(G) + k(k+1)/2`. Values are signless-Laplacian sums; the
/// alpha column of violation entries is fixed at 1/2, the pencil value
/// whose doubling gives Q.
pub fn check_conjecture_1_2_over(
    family: &str,
    graphs: &[Graph],
    n: usize,
    k: usize,
) -> Result<SearchReport, SearchError> {
    let start = Instant::now();
    check_c12_pre(n, k)?;
    if graphs.is_empty() {
        return Err(SearchError::EmptyStream);
    }
    for g in graphs {
        if g.vertex_count() != n {
            return Err(SearchError::Precondition(format!(
                "universe contains a graph on {} vertices; expected n = {n}",
                g.vertex_count()
            )));
        }
    }
    let tol = Tolerance::from_env_or_default();
    let h = p3_join_hnk(n, k)?;
    let h_key = canonical_key(&h);
    let h_skq = spectra::build_matrix(&h, MatrixKind::SignlessLaplacian).eigenvalues()?.s_k(k)?;
    let h_graph6 = graph6::encode(&h)?;

    let per_graph: Vec<(String, f64, usize, u128)> = graphs
        .par_iter()
        .map(|g| -> Result<_, SearchError> {
            let skq =
                spectra::build_matrix(g, MatrixKind::SignlessLaplacian).eigenvalues()?.s_k(k)?;
            Ok((graph6::encode(g)?, skq, g.edge_count(), canonical_key(g)))
        })
        .collect::<Result<_, _>>()?;

    let mut violations = Vec::new();
    let mut min_slack = f64::INFINITY;
    let mut max_skq = f64::NEG_INFINITY;
    let mut h_self_slack = None;
    for (g6, skq, m, key) in &per_graph {
        let dominance_slack = h_skq - skq;
        let cap = *m as f64 + (k * (k + 1)) as f64 / 2.0;
        let cap_slack = cap - skq;
        min_slack = min_slack.min(dominance_slack).min(cap_slack);
        max_skq = max_skq.max(*skq);
        if dominance_slack < -tol.threshold(h_skq.abs().max(skq.abs())) {
            violations.push(ViolationEntry {
                graph6: g6.clone(),
                alpha: 0.5,
                k,
                lhs: *skq,
                rhs: h_skq,
            });
        }
        if cap_slack < tol.threshold(cap.abs().max(skq.abs())) {
            violations.push(ViolationEntry {
                graph6: g6.clone(),
                alpha: 0.5,
                k,
                lhs: *skq,
                rhs: cap,
            });
        }
        if *key == h_key {
            h_self_slack = Some(dominance_slack);
        }
    }

    let near_thr = tol.threshold(max_skq.abs());
    let mut argmax: Vec<ExtremalEntry> = per_graph
        .iter()
        .filter(|(_, skq, _, _)| *skq >= max_skq - near_thr)
        .map(|(g6, skq, _, _)| ExtremalEntry {
            label: format!("argmax-skq;k={k}"),
            graph6: g6.clone(),
            value: *skq,
        })
        .collect();
    argmax.sort_by(|x, y| x.graph6.cmp(&y.graph6));
    let argmax_count = argmax.len();
    let argmax_is_h =
        argmax_count == 1 && per_graph.iter().any(|(g6, skq, _, key)| {
            g6 == &argmax[0].graph6 && *key == h_key && *skq >= max_skq - near_thr
        });
    let mut extremal =
        vec![ExtremalEntry { label: "h-benchmark".to_string(), graph6: h_graph6, value: h_skq }];
    extremal.extend(argmax);
    violations.sort_by(|x, y| {
        (&x.graph6, x.lhs.to_bits(), x.rhs.to_bits()).cmp(&(&y.graph6, y.lhs.to_bits(), y.rhs.to_bits()))
    });

    let mut notes = vec![
        "values are signless-Laplacian k-sums; the alpha field marks the Q = 2*pencil(1/2) correspondence".to_string(),
        format!("argmax-count={argmax_count};argmax-is-benchmark={argmax_is_h}"),
    ];
    match h_self_slack {
        Some(s) => notes.push(format!("benchmark-self-slack={s}")),
        None => notes.push("benchmark not found in universe".to_string()),
    }

    Ok(SearchReport {
        task: format!("check:c12(n={n},k={k})"),
        universe: UniverseDescriptor {
            family: family.to_string(),
            n_min: n,
            n_max: n,
            alpha_grid: vec![0.5],
            k_set: vec![k],
        },
        count: graphs.len(),
        extremal,
        violations,
        min_slack: min_slack.is_finite().then_some(min_slack),
        runtime_s: start.elapsed().as_secs_f64(),
        notes,
    })
}

/// The 12-vertex tree census: verifies the path is the unique minimizer
/// of the 2-sum at every grid alpha in [1/2, 1), reports per-degree-class
/// minima at alpha = 1/2, and checks the reduction step that the census
/// argument rests on (every non-path tree's 2-sum at alpha = 1/2 already
/// exceeds the path's 2-sum at every grid alpha).
pub fn reproduce_theorem_5_5(alpha_grid: &[AlphaValue]) -> Result<SearchReport, SearchError> {
    let start = Instant::now();
    if alpha_grid.is_empty() {
        return Err(SearchError::Precondition("alpha grid is empty".to_string()));
    }
    for a in alpha_grid {
        if !(0.5..1.0).contains(&a.value()) {
            return Err(SearchError::Precondition(format!(
                "alpha grid must lie in [1/2, 1); got {}",
                a.value()
            )));
        }
    }
    let n = 12usize;
    let trees = generate_trees(n)?;
    let half = AlphaValue::new(0.5).expect("1/2 is a valid alpha");
    let path_idx = trees
        .iter()
        .position(|t| t.degrees().iter().all(|&d| d <= 2))
        .expect("the path is a tree on 12 vertices");

    // Per tree: the 2-sum at each grid alpha, plus at 1/2 for the class table.
    let values: Vec<(String, Vec<f64>, f64)> = trees
        .par_iter()
        .map(|t| -> Result<_, SearchError> {
            let mut per_alpha = Vec::with_capacity(alpha_grid.len());
            for &a in alpha_grid {
                per_alpha.push(spectra::sk_alpha(t, a, 2)?);
            }
            let at_half = spectra::sk_alpha(t, half, 2)?;
            Ok((graph6::encode(t)?, per_alpha, at_half))
        })
        .collect::<Result<_, _>>()?;

    let uniq_thr = Tolerance::from_env_or_default().threshold(4.0);
    let mut violations = Vec::new();
    let mut min_margin = f64::INFINITY;
    let mut extremal = Vec::new();
    for (ai, &a) in alpha_grid.iter().enumerate() {
        let path_value = values[path_idx].1[ai];
        let mut argmin = f64::INFINITY;
        for (ti, (g6, per_alpha, _)) in values.iter().enumerate() {
            let v = per_alpha[ai];
            argmin = argmin.min(v);
            if ti == path_idx {
                continue;
            }
            let margin = v - path_value;
            min_margin = min_margin.min(margin);
            if margin < uniq_thr {
                violations.push(ViolationEntry {
                    graph6: g6.clone(),
                    alpha: a.value(),
                    k: 2,
                    lhs: v,
                    rhs: path_value,
                });
            }
        }
        let mut winners: Vec<&(String, Vec<f64>, f64)> =
            values.iter().filter(|(_, pa, _)| pa[ai] == argmin).collect();
        winners.sort_by(|x, y| x.0.cmp(&y.0));
        for (g6, _, _) in winners {
            extremal.push(ExtremalEntry {
                label: format!("argmin-s2@alpha={}", a.value()),
                graph6: g6.clone(),
                value: argmin,
            });
        }
    }

    // Reduction step: min over non-path trees at 1/2 vs. the path's maximum
    // over the grid.
    let path_max: f64 =
        values[path_idx].1.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min_nonpath_half = values
        .iter()
        .enumerate()
        .filter(|(ti, _)| *ti != path_idx)
        .map(|(_, (_, _, at_half))| *at_half)
        .fold(f64::INFINITY, f64::min);
    let mut notes = vec![
        format!("path-s2@alpha=0.5={}", values[path_idx].2),
        format!(
            "reduction-step-ok={};min-nonpath-s2@alpha=0.5={min_nonpath_half};max-path-s2-over-grid={path_max}",
            min_nonpath_half > path_max
        ),
    ];

    // Per-degree-class minima of the 2-sum at alpha = 1/2.
    let mut classes: Vec<(String, Vec<&[usize]>)> = vec![
        ("class-A".to_string(), vec![T55_CLASS_A]),
        ("class-B".to_string(), T55_CLASS_B.to_vec()),
        ("class-C".to_string(), vec![T55_CLASS_C]),
        ("class-star".to_string(), vec![T55_CLASS_STAR]),
    ];
    for (label, multisets) in classes.drain(..) {
        let mut members: Vec<usize> = Vec::new();
        for ms in multisets {
            if !tree_multiset_feasible(ms) {
                notes.push(format!(
                    "degree multiset {ms:?} has sum {} != {}; excluded as naming no tree on {n} vertices",
                    ms.iter().sum::<usize>(),
                    2 * (n - 1)
                ));
                continue;
            }
            for (ti, t) in trees.iter().enumerate() {
                let mut degs = t.degrees().to_vec();
                degs.sort_unstable_by(|a, b| b.cmp(a));
                let mut target = ms.to_vec();
                target.sort_unstable_by(|a, b| b.cmp(a));
                if degs == target {
                    members.push(ti);
                }
            }
        }
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            notes.push(format!("{label}: no feasible members"));
            continue;
        }
        let class_min = members
            .iter()
            .map(|&ti| values[ti].2)
            .fold(f64::INFINITY, f64::min);
        let mut winners: Vec<&str> = members
            .iter()
            .filter(|&&ti| values[ti].2 == class_min)
            .map(|&ti| values[ti].0.as_str())
            .collect();
        winners.sort_unstable();
        for g6 in winners {
            extremal.push(ExtremalEntry {
                label: format!("{label}-min-s2@alpha=0.5"),
                graph6: g6.to_string(),
                value: class_min,
            });
        }
    }

    violations.sort_by(|x, y| {
        (x.alpha.to_bits(), &x.graph6).cmp(&(y.alpha.to_bits(), &y.graph6))
    });
    Ok(SearchReport {
        task: "t55".to_string(),
        universe: UniverseDescriptor {
            family: "free-trees".to_string(),
            n_min: n,
            n_max: n,
            alpha_grid: alpha_grid.iter().map(|a| a.value()).collect(),
            k_set: vec![2],
        },
        count: trees.len(),
        extremal,
        violations,
        min_slack: min_margin.is_finite().then_some(min_margin),
        runtime_s: start.elapsed().as_secs_f64(),
        notes,
    })
}

/// Empirical extremal table: per (alpha, k), the minimum and maximum
/// k-sum over the universe with all tied certificates.
pub fn extremal_table(
    family: &str,
    graphs: &[Graph],
    alpha_grid: &[AlphaValue],
    k_set: &[usize],
) -> Result<SearchReport, SearchError> {
    let start = Instant::now();
    if graphs.is_empty() {
        return Err(SearchError::EmptyStream);
    }
    let per_graph: Vec<(String, Vec<(usize, usize, f64)>)> = graphs
        .par_iter()
        .map(|g| -> Result<_, SearchError> {
            let n = g.vertex_count();
            let ks: Vec<usize> = if k_set.is_empty() {
                (1..=n).collect()
            } else {
                k_set.iter().copied().filter(|&k| k >= 1 && k <= n).collect()
            };
            let mut vals = Vec::new();
            for (ai, &a) in alpha_grid.iter().enumerate() {
                let spec = spectra::alpha_spectrum(g, a)?;
                for &k in &ks {
                    vals.push((ai, k, spec.s_k(k)?));
                }
            }
            Ok((graph6::encode(g)?, vals))
        })
        .collect::<Result<_, _>>()?;

    struct Cell {
        min: f64,
        min_certs: Vec<String>,
        max: f64,
        max_certs: Vec<String>,
    }
    let mut table: BTreeMap<(usize, usize), Cell> = BTreeMap::new();
    for (g6, vals) in &per_graph {
        for &(ai, k, v) in vals {
            let cell = table.entry((ai, k)).or_insert(Cell {
                min: f64::INFINITY,
                min_certs: vec![],
                max: f64::NEG_INFINITY,
                max_certs: vec![],
            });
            if v < cell.min {
                cell.min = v;
                cell.min_certs.clear();
            }
            if v == cell.min {
                cell.min_certs.push(g6.clone());
            }
            if v > cell.max {
                cell.max = v;
                cell.max_certs.clear();
            }
            if v == cell.max {
                cell.max_certs.push(g6.clone());
            }
        }
    }
    let mut extremal = Vec::new();
    for ((ai, k), cell) in &table {
        let a = alpha_grid[*ai].value();
        for g6 in sorted_dedup(cell.min_certs.clone()) {
            extremal.push(ExtremalEntry {
                label: format!("min@alpha={a};k={k}"),
                graph6: g6,
                value: cell.min,
            });
        }
        for g6 in sorted_dedup(cell.max_certs.clone()) {
            extremal.push(ExtremalEntry {
                label: format!("max@alpha={a};k={k}"),
                graph6: g6,
                value: cell.max,
            });
        }
    }
    let (n_min, n_max) = n_range(graphs);
    Ok(SearchReport {
        task: "extremal-table".to_string(),
        universe: UniverseDescriptor {
            family: family.to_string(),
            n_min,
            n_max,
            alpha_grid: alpha_grid.iter().map(|a| a.value()).collect(),
            k_set: k_set.to_vec(),
        },
        count: graphs.len(),
        extremal,
        violations: vec![],
        min_slack: None,
        runtime_s: start.elapsed().as_secs_f64(),
        notes: vec![],
    })
}
