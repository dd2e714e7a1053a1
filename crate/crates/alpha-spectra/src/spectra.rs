//! The convex degree/adjacency pencil `M(a) = a*D + (1-a)*A` and its derived
//! quantities: eigenvalue sums, the associated graph energy, the smallest
//! parameter value making the pencil positive semidefinite, and trigonometric
//! closed forms for paths.

use crate::graph::Graph;
use crate::linalg::{LinalgError, Spectrum, SymMatrix};
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpectraError {
    #[error("alpha = {0} outside [0, 1]")]
    InvalidAlpha(f64),
    #[error("k = {k} out of range 1..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("alpha = {alpha} outside the regime {regime} of this form")]
    Regime { alpha: f64, regime: &'static str },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A pencil parameter validated once at the boundary: finite and in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaValue(f64);

impl AlphaValue {
    pub fn new(value: f64) -> Result<Self, SpectraError> {
        if value.is_finite() && (0.0..=1.0).contains(&value) {
            Ok(AlphaValue(value))
        } else {
            Err(SpectraError::InvalidAlpha(value))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// True on [0, 1/2).
    pub fn below_half(self) -> bool {
        self.0 < 0.5
    }

    /// True on [1/2, 1].
    pub fn at_least_half(self) -> bool {
        self.0 >= 0.5
    }
}

impl std::fmt::Display for AlphaValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Matrices derivable from a graph's degrees and adjacency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MatrixKind {
    Adjacency,
    Degree,
    Laplacian,
    SignlessLaplacian,
    AAlpha(AlphaValue),
}

pub fn build_matrix(g: &Graph, kind: MatrixKind) -> SymMatrix {
    let n = g.vertex_count();
    SymMatrix::from_fn(n, |i, j| {
        let a = f64::from(g.has_edge(i, j));
        let d = if i == j { g.degree(i) as f64 } else { 0.0 };
        match kind {
            MatrixKind::Adjacency => a,
            MatrixKind::Degree => d,
            MatrixKind::Laplacian => d - a,
            MatrixKind::SignlessLaplacian => d + a,
            MatrixKind::AAlpha(alpha) => alpha.value() * d + (1.0 - alpha.value()) * a,
        }
    })
}

/// Spectrum of the pencil at `alpha`.
pub fn alpha_spectrum(g: &Graph, alpha: AlphaValue) -> Result<Spectrum, SpectraError> {
    Ok(build_matrix(g, MatrixKind::AAlpha(alpha)).eigenvalues()?)
}

/// Sum of the `k` largest pencil eigenvalues.
pub fn sk_alpha(g: &Graph, alpha: AlphaValue, k: usize) -> Result<f64, SpectraError> {
    let spec = alpha_spectrum(g, alpha)?;
    spec.s_k(k).map_err(SpectraError::from)
}

/// The three textbook routes to the pencil energy, all returned so callers
/// and tests can confirm they agree:
/// 1. sum of |eigenvalue - mean| where mean = trace/n,
/// 2. twice the sum of the sigma largest eigenvalues minus 2*sigma*mean,
///    where sigma counts eigenvalues >= mean (ties inclusive),
/// 3. the maximum over k of (2*S_k - 2*k*mean).
pub fn alpha_energy_routes(g: &Graph, alpha: AlphaValue) -> Result<(f64, f64, f64), SpectraError> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok((0.0, 0.0, 0.0));
    }
    let spec = alpha_spectrum(g, alpha)?;
    let mean = 2.0 * alpha.value() * g.edge_count() as f64 / n as f64;

    let direct: f64 = spec.values().iter().map(|l| (l - mean).abs()).sum();

    let sigma = spec.values().iter().filter(|&&l| l >= mean).count();
    // The largest eigenvalue is at least the eigenvalue mean, so sigma >= 1.
    let via_sigma = 2.0 * spec.s_k(sigma)? - 2.0 * sigma as f64 * mean;

    let mut running = 0.0;
    let mut via_max = f64::NEG_INFINITY;
    for (i, l) in spec.values().iter().enumerate() {
        running += l;
        via_max = via_max.max(2.0 * running - 2.0 * (i + 1) as f64 * mean);
    }
    Ok((direct, via_sigma, via_max))
}

/// Pencil energy: sum of |eigenvalue - trace/n|. The two alternative
/// formulations are recomputed on every call and must agree with the direct
/// sum; a mismatch indicates an eigensolver defect, not bad input.
pub fn alpha_energy(g: &Graph, alpha: AlphaValue) -> Result<f64, SpectraError> {
    let (direct, via_sigma, via_max) = alpha_energy_routes(g, alpha)?;
    let tol = 1e-8 * (1.0 + direct.abs());
    assert!(
        (direct - via_sigma).abs() <= tol && (direct - via_max).abs() <= tol,
        "energy routes disagree: {direct} vs {via_sigma} vs {via_max}"
    );
    Ok(direct)
}

/// Smallest pencil parameter at which the matrix is positive semidefinite,
/// found by bisection on [0, 1/2]. The smallest eigenvalue is nondecreasing
/// in the parameter, and the matrix is always PSD at 1/2.
pub fn alpha0(g: &Graph, tol: f64) -> Result<f64, SpectraError> {
    assert!(tol > 0.0, "alpha0 tolerance must be positive");
    if g.vertex_count() == 0 {
        return Ok(0.0);
    }
    let psd = |a: f64| -> Result<bool, SpectraError> {
        let m = build_matrix(g, MatrixKind::AAlpha(AlphaValue::new(a).expect("bisection stays in [0,1]")));
        let cushion = 1e-12 * (1.0 + m.inf_norm());
        Ok(m.eigenvalues()?.min() >= -cushion)
    };
    if psd(0.0)? {
        return Ok(0.0);
    }
    let (mut lo, mut hi) = (0.0_f64, 0.5_f64);
    for _ in 0..60 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if psd(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Closed form for the partial cosine sum `sum_{i=1..k} cos(i*pi/n)`:
/// `csc(pi/2n) * sin((2k+1)pi/2n) / 2 - 1/2`.
pub fn cosine_sum(n: usize, k: usize) -> Result<f64, SpectraError> {
    if k == 0 || k > n {
        return Err(SpectraError::KOutOfRange { k, n });
    }
    let half_step = PI / (2.0 * n as f64);
    Ok(0.5 * ((2 * k + 1) as f64 * half_step).sin() / half_step.sin() - 0.5)
}

/// Two-term trigonometric path expression (both the `n` and `n+1` harmonics):
/// `2ak + a - 1 + a*csc(pi/2n)*sin((2k+1)pi/2n)
///  + (1-2a)*csc(pi/(2n+2))*sin((2k+1)pi/(2n+2))`.
pub(crate) fn path_trig_two_term(n: usize, k: usize, a: f64) -> f64 {
    let s1 = PI / (2.0 * n as f64);
    let s2 = PI / (2.0 * (n + 1) as f64);
    let kk = (2 * k + 1) as f64;
    2.0 * a * k as f64 + a - 1.0 + a * (kk * s1).sin() / s1.sin()
        + (1.0 - 2.0 * a) * (kk * s2).sin() / s2.sin()
}

/// One-term trigonometric path expression:
/// `2ak + (1-a)*(csc(pi/2n)*sin((2k+1)pi/2n) - 1)`.
pub(crate) fn path_trig_one_term(n: usize, k: usize, a: f64) -> f64 {
    let s1 = PI / (2.0 * n as f64);
    let kk = (2 * k + 1) as f64;
    2.0 * a * k as f64 + (1.0 - a) * ((kk * s1).sin() / s1.sin() - 1.0)
}

/// Which branch of the path closed form to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathFormPart {
    /// Valid on [0, 1/2): the two-term expression.
    I,
    /// Valid on [1/2, 1]: the one-term expression.
    II,
}

/// Regime-checked closed form for the k-largest-eigenvalue sum of a path on
/// `n` vertices. Part I covers [0, 1/2) and is exact at 0; part II covers
/// [1/2, 1] and is exact at 1/2.
pub fn path_sk_closed_form(
    n: usize,
    k: usize,
    alpha: AlphaValue,
    part: PathFormPart,
) -> Result<f64, SpectraError> {
    if k == 0 || k > n {
        return Err(SpectraError::KOutOfRange { k, n });
    }
    match part {
        PathFormPart::I => {
            if !alpha.below_half() {
                return Err(SpectraError::Regime { alpha: alpha.value(), regime: "[0, 1/2)" });
            }
            Ok(path_trig_two_term(n, k, alpha.value()))
        }
        PathFormPart::II => {
            if !alpha.at_least_half() {
                return Err(SpectraError::Regime { alpha: alpha.value(), regime: "[1/2, 1]" });
            }
            Ok(path_trig_one_term(n, k, alpha.value()))
        }
    }
}
