//! The bound catalog: every supported eigenvalue-sum inequality as an
//! evaluatable, applicability-guarded record, plus a sandwich verifier that
//! compares each bound against the true eigenvalue sum it targets.
//!
//! Every entry is identified by an opaque catalog id (e.g. `U-3.2`). An
//! evaluation never silently skips: it either produces a value together with
//! the measured slack, or an `applicable: false` record naming the failed
//! hypothesis. Violations (negative slack beyond tolerance) are ordinary
//! data, never panics or errors, so sweeps can collect and report them.

use std::cell::{Cell, RefCell};
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSubset};
use crate::invariants::{
    compute_bundle, find_clique_packing, find_even_cycle_packing, is_k3_free_and_c4_free,
    matching_number, validate_clique_packing, validate_cycle_packing, CliquePacking, CyclePacking,
    InvariantBundle,
};
use crate::linalg::{LinalgError, Spectrum};
use crate::spectra::{self, AlphaValue, MatrixKind, SpectraError};

/// Default absolute part of the verification tolerance.
pub const DEFAULT_ABS_TOL: f64 = 1e-9;
/// Default relative part of the verification tolerance.
pub const DEFAULT_REL_TOL: f64 = 1e-9;
/// Environment variable overriding both tolerance parts.
pub const TOL_ENV_VAR: &str = "ALPHASPECTRA_TOL";
/// Slack below which a near-equality instance is flagged as a candidate.
const EQUALITY_CANDIDATE_SLACK: f64 = 1e-6;
/// Bisection tolerance used when a gate needs the smallest PSD alpha.
const ALPHA0_TOL: f64 = 1e-10;

/// Verification tolerance: a slack below `-(abs + rel * scale)` counts as a
/// violation, where `scale` is the magnitude of the quantities compared.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { abs: DEFAULT_ABS_TOL, rel: DEFAULT_REL_TOL }
    }
}

impl Tolerance {
    /// Parses a single positive float, used for both parts.
    pub fn parse(text: &str) -> Option<Self> {
        let v: f64 = text.trim().parse().ok()?;
        (v.is_finite() && v > 0.0).then_some(Tolerance { abs: v, rel: v })
    }

    /// Reads `ALPHASPECTRA_TOL` if set and parseable, else the default.
    pub fn from_env_or_default() -> Self {
        std::env::var(TOL_ENV_VAR).ok().and_then(|s| Tolerance::parse(&s)).unwrap_or_default()
    }

    /// The violation threshold at a given magnitude scale.
    pub fn threshold(&self, scale: f64) -> f64 {
        self.abs + self.rel * scale.abs()
    }
}

/// Which side of the true value an entry claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Upper,
    Lower,
    /// Joint lower and upper claim on a combined quantity.
    Pair,
    /// A figure of merit, not an inequality; carries no slack.
    Objective,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Upper => "upper",
            Direction::Lower => "lower",
            Direction::Pair => "pair",
            Direction::Objective => "objective",
        }
    }
}

impl Serialize for Direction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

macro_rules! catalog_ids {
    ($(($variant:ident, $name:literal, $dir:expr)),+ $(,)?) => {
        /// Identifier of one catalog entry.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum CatalogId {
            $($variant),+
        }

        impl CatalogId {
            /// Every entry, in catalog order.
            pub const ALL: &'static [CatalogId] = &[$(CatalogId::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(CatalogId::$variant => $name),+
                }
            }

            pub fn direction(self) -> Direction {
                match self {
                    $(CatalogId::$variant => $dir),+
                }
            }
        }

        impl FromStr for CatalogId {
            type Err = BoundsError;
            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($name => Ok(CatalogId::$variant),)+
                    other => Err(BoundsError::UnknownId(other.to_string())),
                }
            }
        }
    };
}

catalog_ids![
    (U31a, "U-3.1a", Direction::Upper),
    (U31b, "U-3.1b", Direction::Upper),
    (U32, "U-3.2", Direction::Upper),
    (UC31, "U-C3.1", Direction::Upper),
    (U33, "U-3.3", Direction::Upper),
    (UC32, "U-C3.2", Direction::Upper),
    (UC33, "U-C3.3", Direction::Upper),
    (U34, "U-3.4", Direction::Upper),
    (UC34, "U-C3.4", Direction::Upper),
    (U41, "U-4.1", Direction::Upper),
    (UC41, "U-C4.1", Direction::Upper),
    (U42i, "U-4.2i", Direction::Upper),
    (U42ii, "U-4.2ii", Direction::Upper),
    (U43i, "U-4.3i", Direction::Upper),
    (U43ii, "U-4.3ii", Direction::Upper),
    (U44i, "U-4.4i", Direction::Upper),
    (U44ii, "U-4.4ii", Direction::Upper),
    (L51i, "L-5.1i", Direction::Lower),
    (L51ii, "L-5.1ii", Direction::Lower),
    (LC51i, "L-C5.1i", Direction::Lower),
    (LC51ii, "L-C5.1ii", Direction::Lower),
    (L52i, "L-5.2i", Direction::Lower),
    (L52ii, "L-5.2ii", Direction::Lower),
    (L53, "L-5.3", Direction::Lower),
    (LC53, "L-C5.3", Direction::Lower),
    (L54, "L-5.4", Direction::Lower),
    (LC54, "L-C5.4", Direction::Lower),
    (B61, "B-6.1", Direction::Pair),
    (U62a, "U-6.2a", Direction::Upper),
    (U62b, "U-6.2b", Direction::Upper),
    (UC61, "U-C6.1", Direction::Upper),
    (U63, "U-6.3", Direction::Upper),
    (U64, "U-6.4", Direction::Upper),
    (C13, "C-1.3", Direction::Upper),
    (F12, "F-1.2", Direction::Objective),
];

impl CatalogId {
    /// The quantity the entry's value is compared against.
    pub fn target(self) -> &'static str {
        match self {
            CatalogId::UC33 => "S_k(Q(G))",
            CatalogId::U62a | CatalogId::U62b | CatalogId::UC61 => "S_k(A_alpha(line(G)))",
            CatalogId::U63 => "S_k(A_alpha(G^2))",
            CatalogId::U64 => "S_k(A_alpha(double(G)))",
            CatalogId::B61 => "S_k(A_alpha(G)) + S_k(A_alpha(complement(G)))",
            CatalogId::F12 => "S_2(A_alpha(G))",
            _ => "S_k(A_alpha(G))",
        }
    }

    /// True when the entry accepts an auxiliary certificate.
    pub fn takes_certificate(self) -> bool {
        matches!(self, CatalogId::L52i | CatalogId::L52ii | CatalogId::L54)
    }

    /// One-line summary: hypotheses, then the formula.
    pub fn description(self) -> &'static str {
        match self {
            CatalogId::U31a => "non-complete G, k >= 2, alpha < 1/(Delta+1): (1-alpha) n (1+sqrt k)/2",
            CatalogId::U31b => "non-complete G, k >= 2, 1/(Delta+1) <= alpha < 1: alpha Delta n (1+sqrt k)/2",
            CatalogId::U32 => "1/2 <= alpha < 1, k <= n-1: 2 alpha k m/n + sqrt(k(n-k)/n (alpha^2 Z1 + 2m(1-alpha)^2 - 4 alpha^2 m^2/n))",
            CatalogId::UC31 => "1/2 <= alpha < 1, k <= n-1: degree-spread relaxation of U-3.2",
            CatalogId::U33 => "1/2 < alpha < 1, no isolated vertices, k <= n-1: 2 alpha m - (n-k) (det/(l1 l2^{k-1}))^{1/(n-k)}",
            CatalogId::UC32 => "U-3.3 hypotheses plus Delta <= n-2: eigenvalue caps Delta and alpha(n-2) in the denominator",
            CatalogId::UC33 => "alpha = 1/2, connected non-bipartite: determinant form in Q-space",
            CatalogId::U34 => "m >= 1, alpha < alpha0(G), k forced to positive inertia p: 2 alpha m + (m(1-alpha)^2 + alpha^2 Z1/2) sqrt(n(n-p)/Z1)",
            CatalogId::UC34 => "U-3.4 hypotheses: Zagreb replaced by degree-spread caps",
            CatalogId::U41 => "bipartite, alpha = 0: sqrt(km) family with nullity breakpoints",
            CatalogId::UC41 => "tree, alpha = 0: sqrt(k(n-1)) family with matching breakpoints",
            CatalogId::U42i => "tree, alpha < 1/2: alpha(n+2k-2) + (1-2 alpha) * U-C4.1 branch",
            CatalogId::U42ii => "tree, 1/2 <= alpha < 1: alpha(n+2k-2)",
            CatalogId::U43i => "connected, alpha < 1/2: tree form on a spanning tree plus m-n+1",
            CatalogId::U43ii => "connected, 1/2 <= alpha < 1, k >= 2: alpha(2k+2m-n)",
            CatalogId::U44i => "path, alpha < 1/2: trigonometric closed form (two-term)",
            CatalogId::U44ii => "path, 1/2 <= alpha <= 1: trigonometric closed form (one-term)",
            CatalogId::L51i => "alpha <= 1/2: (1-alpha) S_k(Q) + (2 alpha - 1) k Delta",
            CatalogId::L51ii => "alpha >= 1/2: alpha S_k(Q) + (1-2 alpha) S_k(A)",
            CatalogId::LC51i => "path, alpha <= 1/2: one-term trigonometric form as a lower bound",
            CatalogId::LC51ii => "path, alpha >= 1/2: two-term trigonometric form as a lower bound",
            CatalogId::L52i => "regular, disjoint-clique certificate with t cliques, k <= t+1: alpha k r + (1-alpha)(r-k+1)",
            CatalogId::L52ii => "regular, disjoint induced even-cycle certificate with c cycles, k <= c+1: (alpha k + 1 - alpha) r + 2(1-alpha) sum(1-4/g_i)",
            CatalogId::L53 => "connected bipartite with sides s,t, k <= beta+1: alpha m(1/s+1/t)/2 + (1-alpha) m/sqrt(st) + (k-1)(alpha - 2(1-alpha) sqrt(st)/(s+t))",
            CatalogId::LC53 => "connected, alpha < 1, k forced to chi: 2 alpha m / theta",
            CatalogId::L54 => "connected, alpha < 1, subset certificate |U| = k-1: (alpha - 1/(n-k+1)) sum deg(U) + (2m - (1-alpha)|boundary(U)|)/(n-k+1)",
            CatalogId::LC54 => "connected, alpha < 1, k <= theta+1: alpha(k-1)delta + (2m - (2-alpha)(k-1)delta)/(n-k+1)",
            CatalogId::B61 => "pair on S_k(G)+S_k(complement): lower (1-alpha)n + (alpha n - 1)k, upper k((2-alpha)n + alpha(Delta-delta-1) - (1-alpha)(k+1))",
            CatalogId::U62a => "m >= 1, k <= min(n,m): 2k(alpha Delta - 1) + (1-alpha) S_k(Q(G)) on the line graph",
            CatalogId::U62b => "n < k <= m: 2 alpha k(Delta-1) + 2(1-alpha)(m-k) on the line graph",
            CatalogId::UC61 => "line graph of a tree (k <= n-1), unicyclic or bicyclic graph (k <= n; conditional)",
            CatalogId::U63 => "connected, triangle- and quadrilateral-free, k <= n-1: squared-graph form with algebraic connectivity",
            CatalogId::U64 => "any G, k <= 2n: doubled-graph parity formula over sorted degrees",
            CatalogId::C13 => "1/2 <= alpha < 1 (conjectural): alpha m + alpha k(k+1)/2",
            CatalogId::F12 => "1/2 <= alpha < 1 objective: alpha m + alpha + 1 - S_2(A_alpha)",
        }
    }
}

impl Serialize for CatalogId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A bound's numeric output: a single value or a lower/upper pair.
#[derive(Clone, Copy, Debug, Serialize)]
#[serde(untagged)]
pub enum BoundValue {
    Scalar(f64),
    Pair { lower: f64, upper: f64 },
}

impl BoundValue {
    fn magnitude(self) -> f64 {
        match self {
            BoundValue::Scalar(v) => v.abs(),
            BoundValue::Pair { lower, upper } => lower.abs().max(upper.abs()),
        }
    }
}

/// The inputs an evaluation was keyed on, for reproducibility.
#[derive(Clone, Debug, Serialize)]
pub struct InputsDigest {
    pub n: usize,
    pub m: usize,
    pub alpha: f64,
    pub k: usize,
    /// Auxiliary certificate identifiers (packing shapes, forced indices).
    pub cert: Option<String>,
}

/// Outcome of evaluating one catalog entry on one (graph, alpha, k) triple.
#[derive(Clone, Debug, Serialize)]
pub struct BoundRecord {
    pub id: CatalogId,
    pub direction: Direction,
    pub applicable: bool,
    /// The failed hypothesis when inapplicable.
    pub reason: Option<String>,
    pub value: Option<BoundValue>,
    pub true_sk: Option<f64>,
    /// value − true (upper), true − value (lower), worst side (pair).
    pub slack: Option<f64>,
    pub flags: Vec<String>,
    pub inputs: InputsDigest,
}

impl BoundRecord {
    fn inapplicable(id: CatalogId, inputs: InputsDigest, reason: impl Into<String>) -> Self {
        BoundRecord {
            id,
            direction: id.direction(),
            applicable: false,
            reason: Some(reason.into()),
            value: None,
            true_sk: None,
            slack: None,
            flags: Vec::new(),
            inputs,
        }
    }

    fn magnitude_scale(&self) -> f64 {
        let v = self.value.map_or(0.0, BoundValue::magnitude);
        let t = self.true_sk.map_or(0.0, f64::abs);
        v.max(t)
    }

    /// True when the record is an applicable inequality whose slack is
    /// negative beyond tolerance.
    pub fn is_violation(&self, tol: Tolerance) -> bool {
        if !self.applicable || self.direction == Direction::Objective {
            return false;
        }
        match self.slack {
            Some(s) => s < -tol.threshold(self.magnitude_scale()),
            None => false,
        }
    }

    pub fn is_conjectural(&self) -> bool {
        self.flags.iter().any(|f| f == "conjecture-conditional")
    }

    /// Column names for the tabular serialization.
    pub fn csv_header() -> [&'static str; 10] {
        ["id", "n", "m", "alpha", "k", "applicable", "value", "true_sk", "slack", "flags"]
    }

    /// One row in the tabular serialization. Pairs render as "lower;upper",
    /// flags joined by ';', absent numbers as empty fields.
    pub fn csv_record(&self) -> [String; 10] {
        let value = match self.value {
            None => String::new(),
            Some(BoundValue::Scalar(v)) => format!("{v}"),
            Some(BoundValue::Pair { lower, upper }) => format!("{lower};{upper}"),
        };
        [
            self.id.as_str().to_string(),
            self.inputs.n.to_string(),
            self.inputs.m.to_string(),
            format!("{}", self.inputs.alpha),
            self.inputs.k.to_string(),
            self.applicable.to_string(),
            value,
            self.true_sk.map_or(String::new(), |t| format!("{t}")),
            self.slack.map_or(String::new(), |s| format!("{s}")),
            self.flags.join(";"),
        ]
    }
}

/// Auxiliary input for the certificate-taking entries.
#[derive(Clone, Debug)]
pub enum Certificate {
    Cliques(CliquePacking),
    EvenCycles(CyclePacking),
    Subset(VertexSubset),
}

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("unknown catalog id `{0}`")]
    UnknownId(String),
    #[error("certificate rejected for {id}: {reason}")]
    Certificate { id: CatalogId, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Space {
    Base,
    Line,
    Square,
    Double,
    Complement,
}

struct SpectrumEntry {
    spec: Spectrum,
    inf_norm: f64,
}

/// Per-graph evaluation context with lazy caches for spectra, derived
/// graphs, and default certificates. One context serves many (alpha, k)
/// queries on the same graph; it is cheap to construct and single-threaded
/// by design (fan out across graphs, not within one).
pub struct EvalContext<'g> {
    g: &'g Graph,
    inv: InvariantBundle,
    tol: Tolerance,
    degrees_desc: Vec<usize>,
    spectra: RefCell<HashMap<(Space, u64), Rc<SpectrumEntry>>>,
    q_spectrum: RefCell<Option<Rc<Spectrum>>>,
    laplacian_spectrum: RefCell<Option<Rc<Spectrum>>>,
    derived: RefCell<HashMap<Space, Rc<Graph>>>,
    alpha0: Cell<Option<f64>>,
    spanning_matching: Cell<Option<usize>>,
    cliques: RefCell<Option<Rc<CliquePacking>>>,
    cycles: RefCell<Option<Rc<CyclePacking>>>,
}

impl<'g> EvalContext<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Self::with_tolerance(g, Tolerance::from_env_or_default())
    }

    pub fn with_tolerance(g: &'g Graph, tol: Tolerance) -> Self {
        let mut degrees_desc = g.degrees().to_vec();
        degrees_desc.sort_unstable_by(|a, b| b.cmp(a));
        EvalContext {
            g,
            inv: compute_bundle(g),
            tol,
            degrees_desc,
            spectra: RefCell::new(HashMap::new()),
            q_spectrum: RefCell::new(None),
            laplacian_spectrum: RefCell::new(None),
            derived: RefCell::new(HashMap::new()),
            alpha0: Cell::new(None),
            spanning_matching: Cell::new(None),
            cliques: RefCell::new(None),
            cycles: RefCell::new(None),
        }
    }

    pub fn tolerance(&self) -> Tolerance {
        self.tol
    }

    pub fn invariants(&self) -> &InvariantBundle {
        &self.inv
    }

    fn derived_graph(&self, space: Space) -> Result<Rc<Graph>, BoundsError> {
        if let Some(g) = self.derived.borrow().get(&space) {
            return Ok(Rc::clone(g));
        }
        let built = match space {
            Space::Base => unreachable!("base graph is not cached as derived"),
            Space::Line => self.g.line_graph()?,
            Space::Square => self.g.graph_power(2)?,
            Space::Double => self.g.double_graph(),
            Space::Complement => self.g.complement(),
        };
        let rc = Rc::new(built);
        self.derived.borrow_mut().insert(space, Rc::clone(&rc));
        Ok(rc)
    }

    fn spectrum_entry(&self, space: Space, alpha: f64) -> Result<Rc<SpectrumEntry>, BoundsError> {
        let key = (space, alpha.to_bits());
        if let Some(e) = self.spectra.borrow().get(&key) {
            return Ok(Rc::clone(e));
        }
        let a = AlphaValue::new(alpha)?;
        let matrix = match space {
            Space::Base => spectra::build_matrix(self.g, MatrixKind::AAlpha(a)),
            _ => {
                let derived = self.derived_graph(space)?;
                spectra::build_matrix(&derived, MatrixKind::AAlpha(a))
            }
        };
        let entry = Rc::new(SpectrumEntry { inf_norm: matrix.inf_norm(), spec: matrix.eigenvalues()? });
        self.spectra.borrow_mut().insert(key, Rc::clone(&entry));
        Ok(entry)
    }

    fn sk(&self, space: Space, alpha: f64, k: usize) -> Result<f64, BoundsError> {
        Ok(self.spectrum_entry(space, alpha)?.spec.s_k(k)?)
    }

    fn q_spec(&self) -> Result<Rc<Spectrum>, BoundsError> {
        if let Some(q) = self.q_spectrum.borrow().as_ref() {
            return Ok(Rc::clone(q));
        }
        let spec = Rc::new(
            spectra::build_matrix(self.g, MatrixKind::SignlessLaplacian).eigenvalues()?,
        );
        *self.q_spectrum.borrow_mut() = Some(Rc::clone(&spec));
        Ok(spec)
    }

    fn algebraic_connectivity(&self) -> Result<f64, BoundsError> {
        if let Some(l) = self.laplacian_spectrum.borrow().as_ref() {
            return Ok(l.values()[l.len() - 2]);
        }
        let spec =
            Rc::new(spectra::build_matrix(self.g, MatrixKind::Laplacian).eigenvalues()?);
        let a = spec.values()[spec.len() - 2];
        *self.laplacian_spectrum.borrow_mut() = Some(spec);
        Ok(a)
    }

    fn alpha0_value(&self) -> Result<f64, BoundsError> {
        if let Some(a0) = self.alpha0.get() {
            return Ok(a0);
        }
        let a0 = spectra::alpha0(self.g, ALPHA0_TOL)?;
        self.alpha0.set(Some(a0));
        Ok(a0)
    }

    fn spanning_tree_matching(&self) -> Result<usize, BoundsError> {
        if let Some(b) = self.spanning_matching.get() {
            return Ok(b);
        }
        let b = matching_number(&self.g.spanning_tree()?);
        self.spanning_matching.set(Some(b));
        Ok(b)
    }

    fn default_cliques(&self) -> Rc<CliquePacking> {
        if let Some(p) = self.cliques.borrow().as_ref() {
            return Rc::clone(p);
        }
        let p = Rc::new(find_clique_packing(self.g));
        *self.cliques.borrow_mut() = Some(Rc::clone(&p));
        p
    }

    fn default_cycles(&self) -> Rc<CyclePacking> {
        if let Some(p) = self.cycles.borrow().as_ref() {
            return Rc::clone(p);
        }
        let p = Rc::new(find_even_cycle_packing(self.g));
        *self.cycles.borrow_mut() = Some(Rc::clone(&p));
        p
    }

    fn finish(
        &self,
        id: CatalogId,
        inputs: InputsDigest,
        value: BoundValue,
        true_sk: f64,
        mut flags: Vec<String>,
    ) -> BoundRecord {
        let direction = id.direction();
        let slack = match (direction, value) {
            (Direction::Upper, BoundValue::Scalar(v)) => Some(v - true_sk),
            (Direction::Lower, BoundValue::Scalar(v)) => Some(true_sk - v),
            (Direction::Pair, BoundValue::Pair { lower, upper }) => {
                Some((true_sk - lower).min(upper - true_sk))
            }
            (Direction::Objective, _) => None,
            _ => None,
        };
        if let Some(s) = slack {
            let scale = value.magnitude().max(true_sk.abs());
            if s > self.tol.threshold(scale) {
                flags.push("strict".to_string());
            }
            if id == CatalogId::U33 && s < EQUALITY_CANDIDATE_SLACK {
                flags.push("equality-candidate".to_string());
            }
        }
        BoundRecord {
            id,
            direction,
            applicable: true,
            reason: None,
            value: Some(value),
            true_sk: Some(true_sk),
            slack,
            flags,
            inputs,
        }
    }

    /// Evaluates one catalog entry. Hypothesis failures yield an
    /// inapplicable record naming the failed hypothesis; certificate misuse
    /// and numeric breakdowns are errors.
    pub fn evaluate(
        &self,
        id: CatalogId,
        alpha: AlphaValue,
        k: usize,
        cert: Option<&Certificate>,
    ) -> Result<BoundRecord, BoundsError> {
        if cert.is_some() && !id.takes_certificate() {
            return Err(BoundsError::Certificate {
                id,
                reason: "this entry does not accept a certificate".to_string(),
            });
        }

        let n = self.inv.n;
        let m = self.inv.m;
        let nf = n as f64;
        let mf = m as f64;
        let kf = k as f64;
        let dmax = self.inv.delta_max;
        let dmin = self.inv.delta_min;
        let z1 = self.inv.z1 as f64;
        let a = alpha.value();
        let mut inputs = InputsDigest { n, m, alpha: a, k, cert: None };

        macro_rules! gate {
            ($cond:expr, $($reason:tt)+) => {
                if !($cond) {
                    return Ok(BoundRecord::inapplicable(id, inputs, format!($($reason)+)));
                }
            };
        }

        match id {
            CatalogId::U31a | CatalogId::U31b => {
                gate!(k >= 2 && k <= n, "k = {k} outside 2..={n}");
                gate!(m < n * (n - 1) / 2 || n < 2, "graph is complete");
                let split = 1.0 / (dmax as f64 + 1.0);
                let value = if id == CatalogId::U31a {
                    gate!(a < split, "alpha = {a} is not below 1/(Delta+1) = {split}");
                    (1.0 - a) * nf * (1.0 + kf.sqrt()) / 2.0
                } else {
                    gate!(a >= split && a < 1.0, "alpha = {a} outside [1/(Delta+1), 1) = [{split}, 1)");
                    a * dmax as f64 * nf * (1.0 + kf.sqrt()) / 2.0
                };
                let t = self.sk(Space::Base, a, k)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec![]))
            }

            CatalogId::U32 | CatalogId::UC31 => {
                gate!(k >= 1 && k + 1 <= n, "k = {k} outside 1..={}", n.saturating_sub(1));
                gate!((0.5..1.0).contains(&a), "alpha = {a} outside [1/2, 1)");
                let spread = (dmax - dmin) as f64;
                let inner_core = if id == CatalogId::U32 {
                    a * a * z1 + 2.0 * mf * (1.0 - a) * (1.0 - a) - 4.0 * a * a * mf * mf / nf
                } else {
                    2.0 * mf * (1.0 - a) * (1.0 - a) + a * a * nf * spread * spread / 4.0
                };
                let inner = (kf * (nf - kf) / nf * inner_core).max(0.0);
                let value = 2.0 * a * kf * mf / nf + inner.sqrt();
                let t = self.sk(Space::Base, a, k)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec![]))
            }

            CatalogId::U33 | CatalogId::UC32 => {
                gate!(k >= 1 && k + 1 <= n, "k = {k} outside 1..={}", n.saturating_sub(1));
                gate!(a > 0.5 && a < 1.0, "alpha = {a} outside (1/2, 1)");
                gate!(dmin >= 1, "graph has an isolated vertex");
                if id == CatalogId::UC32 {
                    gate!(dmax + 1 < n, "maximum degree {dmax} is not below n-1 = {}", n - 1);
                }
                let entry = self.spectrum_entry(Space::Base, a)?;
                let det = entry.spec.determinant().max(0.0);
                let denom = if id == CatalogId::U33 {
                    let vals = entry.spec.values();
                    vals[0] * vals[1].powi(k as i32 - 1)
                } else {
                    a.powi(k as i32 - 1) * dmax as f64 * ((n - 2) as f64).powi(k as i32 - 1)
                };
                let mut ratio = det / denom;
                if !ratio.is_finite() {
                    ratio = 0.0;
                }
                let value = 2.0 * a * mf - (nf - kf) * ratio.powf(1.0 / (nf - kf));
                let t = self.sk(Space::Base, a, k)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec![]))
            }

            CatalogId::UC33 => {
                gate!(k >= 1 && k + 1 <= n, "k = {k} outside 1..={}", n.saturating_sub(1));
                gate!(a == 0.5, "alpha = {a} must equal 1/2 exactly for the Q-space form");
                gate!(self.inv.is_connected, "graph is disconnected");
                gate!(self.inv.bipartition.is_none(), "graph is bipartite");
                let q = self.q_spec()?;
                let det = q.determinant().max(0.0);
                let vals = q.values();
                let mut ratio = det / (vals[0] * vals[1].powi(k as i32 - 1));
                if !ratio.is_finite() {
                    ratio = 0.0;
                }
                let value = 2.0 * mf - (nf - kf) * ratio.powf(1.0 / (nf - kf));
                let t = q.s_k(k)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec![]))
            }

            CatalogId::U34 | CatalogId::UC34 => {
                gate!(m >= 1, "graph is edgeless");
                let a0 = self.alpha0_value()?;
                gate!(a + 1e-9 < a0, "alpha = {a} is not strictly below alpha0 = {a0}");
                let entry = self.spectrum_entry(Space::Base, a)?;
                let inertia_tol = 1e-8 * entry.inf_norm;
                let (p, zero_band, _) = entry.spec.inertia(inertia_tol);
                inputs.k = p;
                inputs.cert =
                    Some(format!("p={p};zero-band={zero_band};inertia-tol={inertia_tol:.3e}"));
                let pf = p as f64;
                let spread = (dmax - dmin) as f64;
                let value = if id == CatalogId::U34 {
                    2.0 * a * mf
                        + 0.5
                            * (2.0 * mf * (1.0 - a) * (1.0 - a) + a * a * z1)
                            * (nf * (nf - pf) / z1).sqrt()
                } else {
                    2.0 * a * mf
                        + (mf * nf * (1.0 - a) * (1.0 - a)
                            + 2.0 * a * a * mf * mf
                            + a * a * nf * nf * spread * spread / 8.0)
                            * (2.0 * (nf - pf) / (8.0 * mf * mf + nf * spread * spread)).sqrt()
                };
                let t = entry.spec.s_k(p)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec!["k-forced".into()]))
            }

            CatalogId::U41 => {
                gate!(k >= 1 && k <= n, "k = {k} outside 1..={n}");
                gate!(self.inv.bipartition.is_some(), "graph is not bipartite");
                gate!(a == 0.0, "alpha = {a} must equal 0 exactly for the adjacency form");
                let lo = (n - self.inv.eta) / 2;
                let hi = (n + self.inv.eta) / 2;
                let value = if k <= lo {
                    (kf * mf).sqrt()
                } else if k <= hi {
                    (lo as f64 * mf).sqrt()
                } else {
                    ((nf - kf) * mf).sqrt()
                };
                let t = self.sk(Space::Base, a, k)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec![]))
            }

            CatalogId::UC41 => {
                gate!(k >= 1 && k <= n, "k = {k} outside 1..={n}");
                gate!(self.g.is_tree(), "graph is not a tree");
                gate!(a == 0.0, "alpha = {a} must equal 0 exactly for the adjacency form");
                let value = tree_branch(n, self.inv.beta, k);
                let t = self.sk(Space::Base, a, k)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec![]))
            }

            CatalogId::U42i | CatalogId::U42ii => {
                gate!(k >= 1 && k <= n, "k = {k} outside 1..={n}");
                gate!(self.g.is_tree(), "graph is not a tree");
                let value = if id == CatalogId::U42i {
                    gate!(a < 0.5, "alpha = {a} outside [0, 1/2)");
                    a * (nf + 2.0 * kf - 2.0) + (1.0 - 2.0 * a) * tree_branch(n, self.inv.beta, k)
                } else {
                    gate!((0.5..1.0).contains(&a), "alpha = {a} outside [1/2, 1)");
                    a * (nf + 2.0 * kf - 2.0)
                };
                let t = self.sk(Space::Base, a, k)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec![]))
            }

            CatalogId::U43i | CatalogId::U43ii => {
                gate!(k >= 1 && k <= n, "k = {k} outside 1..={n}");
                gate!(self.inv.is_connected, "graph is disconnected");
                let value = if id == CatalogId::U43i {
                    gate!(a < 0.5, "alpha = {a} outside [0, 1/2)");
                    let bt = self.spanning_tree_matching()?;
                    inputs.cert = Some(format!("spanning-tree-matching={bt}"));
                    a * (nf + 2.0 * kf - 2.0)
                        + (1.0 - 2.0 * a) * tree_branch(n, bt, k)
                        + (mf - nf + 1.0)
                } else {
                    gate!((0.5..1.0).contains(&a), "alpha = {a} outside [1/2, 1)");
                    gate!(k >= 2, "k = {k}: this form starts at k = 2");
                    a * (2.0 * kf + 2.0 * mf - nf)
                };
                let t = self.sk(Space::Base, a, k)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec![]))
            }

            CatalogId::U44i | CatalogId::U44ii => {
                gate!(k >= 1 && k <= n, "k = {k} outside 1..={n}");
                gate!(self.g.is_tree() && dmax <= 2, "graph is not a path");
                let value = if id == CatalogId::U44i {
                    gate!(a < 0.5, "alpha = {a} outside [0, 1/2)");
                    spectra::path_trig_two_term(n, k, a)
                } else {
                    gate!(a >= 0.5, "alpha = {a} outside [1/2, 1]");
                    spectra::path_trig_one_term(n, k, a)
                };
                let t = self.sk(Space::Base, a, k)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec![]))
            }

            CatalogId::L51i | CatalogId::L51ii => {
                gate!(k >= 1 && k <= n, "k = {k} outside 1..={n}");
                let value = if id == CatalogId::L51i {
                    gate!(a <= 0.5, "alpha = {a} outside [0, 1/2]");
                    (1.0 - a) * self.q_spec()?.s_k(k)? + (2.0 * a - 1.0) * kf * dmax as f64
                } else {
                    gate!(a >= 0.5, "alpha = {a} outside [1/2, 1]");
                    a * self.q_spec()?.s_k(k)? + (1.0 - 2.0 * a) * self.sk(Space::Base, 0.0, k)?
                };
                let t = self.sk(Space::Base, a, k)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec![]))
            }

            CatalogId::LC51i | CatalogId::LC51ii => {
                gate!(k >= 1 && k <= n, "k = {k} outside 1..={n}");
                gate!(self.g.is_tree() && dmax <= 2, "graph is not a path");
                let value = if id == CatalogId::LC51i {
                    gate!(a <= 0.5, "alpha = {a} outside [0, 1/2]");
                    spectra::path_trig_one_term(n, k, a)
                } else {
                    gate!(a >= 0.5, "alpha = {a} outside [1/2, 1]");
                    spectra::path_trig_two_term(n, k, a)
                };
                let t = self.sk(Space::Base, a, k)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec![]))
            }

            CatalogId::L52i => {
                gate!(k >= 1 && k <= n, "k = {k} outside 1..={n}");
                let Some(r) = self.inv.regular_degree else {
                    return Ok(BoundRecord::inapplicable(id, inputs, "graph is not regular"));
                };
                let packing: Rc<CliquePacking> = match cert {
                    Some(Certificate::Cliques(p)) => {
                        validate_clique_packing(self.g, p).map_err(|e| BoundsError::Certificate {
                            id,
                            reason: e.to_string(),
                        })?;
                        Rc::new(p.clone())
                    }
                    Some(_) => {
                        return Err(BoundsError::Certificate {
                            id,
                            reason: "expected a disjoint-clique certificate".to_string(),
                        })
                    }
                    None => self.default_cliques(),
                };
                let t_count = packing.count();
                let sizes: Vec<String> =
                    packing.sizes().iter().map(|s| s.to_string()).collect();
                inputs.cert = Some(format!("clique-packing:t={t_count};sizes={}", sizes.join("+")));
                gate!(k <= t_count + 1, "k = {k} exceeds clique-packing count + 1 = {}", t_count + 1);
                let rf = r as f64;
                let value = a * kf * rf + (1.0 - a) * (rf - kf + 1.0);
                let t = self.sk(Space::Base, a, k)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec![]))
            }

            CatalogId::L52ii => {
                gate!(k >= 1 && k <= n, "k = {k} outside 1..={n}");
                let Some(r) = self.inv.regular_degree else {
                    return Ok(BoundRecord::inapplicable(id, inputs, "graph is not regular"));
                };
                let packing: Rc<CyclePacking> = match cert {
                    Some(Certificate::EvenCycles(p)) => {
                        validate_cycle_packing(self.g, p).map_err(|e| BoundsError::Certificate {
                            id,
                            reason: e.to_string(),
                        })?;
                        Rc::new(p.clone())
                    }
                    Some(_) => {
                        return Err(BoundsError::Certificate {
                            id,
                            reason: "expected an induced even-cycle certificate".to_string(),
                        })
                    }
                    None => self.default_cycles(),
                };
                let c_count = packing.count();
                let lengths = packing.lengths();
                let shown: Vec<String> = lengths.iter().map(|l| l.to_string()).collect();
                inputs.cert =
                    Some(format!("even-cycle-packing:c={c_count};lengths={}", shown.join("+")));
                gate!(k <= c_count + 1, "k = {k} exceeds cycle-packing count + 1 = {}", c_count + 1);
                let rf = r as f64;
                let girth_sum: f64 =
                    lengths.iter().take(k - 1).map(|&g| 1.0 - 4.0 / g as f64).sum();
                let value = (a * kf + 1.0 - a) * rf + 2.0 * (1.0 - a) * girth_sum;
                let t = self.sk(Space::Base, a, k)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec![]))
            }

            CatalogId::L53 => {
                gate!(k >= 1 && k <= n, "k = {k} outside 1..={n}");
                gate!(self.inv.is_connected, "graph is disconnected");
                let Some((x, y)) = self.inv.bipartition.as_ref() else {
                    return Ok(BoundRecord::inapplicable(id, inputs, "graph is not bipartite"));
                };
                let (s, t_side) = (x.len(), y.len());
                gate!(s >= 1 && t_side >= 1, "bipartition has an empty side");
                gate!(
                    k <= self.inv.beta + 1,
                    "k = {k} exceeds matching number + 1 = {}",
                    self.inv.beta + 1
                );
                inputs.cert = Some(format!("bipartition:s={s};t={t_side}"));
                let sf = s as f64;
                let tf = t_side as f64;
                let value = a * mf * (1.0 / sf + 1.0 / tf) / 2.0
                    + (1.0 - a) * mf / (sf * tf).sqrt()
                    + (kf - 1.0) * (a - 2.0 * (1.0 - a) * (sf * tf).sqrt() / (sf + tf));
                let t = self.sk(Space::Base, a, k)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec![]))
            }

            CatalogId::LC53 => {
                gate!(self.inv.is_connected, "graph is disconnected");
                gate!(a < 1.0, "alpha = 1 is excluded");
                let (Some(chi), Some(theta)) = (self.inv.chi, self.inv.theta) else {
                    return Ok(BoundRecord::inapplicable(
                        id,
                        inputs,
                        "exact chromatic/independence computation is guarded to n <= 24",
                    ));
                };
                inputs.k = chi;
                inputs.cert = Some(format!("chi={chi};theta={theta}"));
                let value = 2.0 * a * mf / theta as f64;
                let t = self.sk(Space::Base, a, chi)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec!["k-forced".into()]))
            }

            CatalogId::L54 => {
                gate!(k >= 1 && k <= n, "k = {k} outside 1..={n}");
                gate!(self.inv.is_connected, "graph is disconnected");
                gate!(a < 1.0, "alpha = 1 is excluded");
                let subset = match cert {
                    Some(Certificate::Subset(u)) => {
                        if u.len() != k - 1 {
                            return Err(BoundsError::Certificate {
                                id,
                                reason: format!(
                                    "subset has {} vertices; k - 1 = {} required",
                                    u.len(),
                                    k - 1
                                ),
                            });
                        }
                        if u.members().iter().any(|&v| v >= n) {
                            return Err(BoundsError::Certificate {
                                id,
                                reason: "subset contains an out-of-range vertex".to_string(),
                            });
                        }
                        u.clone()
                    }
                    Some(_) => {
                        return Err(BoundsError::Certificate {
                            id,
                            reason: "expected a vertex-subset certificate".to_string(),
                        })
                    }
                    None => {
                        let mut order: Vec<usize> = (0..n).collect();
                        order.sort_by_key(|&v| (std::cmp::Reverse(self.g.degree(v)), v));
                        VertexSubset::new(order.into_iter().take(k - 1))
                    }
                };
                let degree_sum: usize = subset.members().iter().map(|&v| self.g.degree(v)).sum();
                let boundary = self.g.edge_boundary(&subset)?;
                inputs.cert = Some(format!(
                    "U={:?};deg-sum={degree_sum};boundary={boundary}",
                    subset.members()
                ));
                let value = (a - 1.0 / (nf - kf + 1.0)) * degree_sum as f64
                    + (2.0 * mf - (1.0 - a) * boundary as f64) / (nf - kf + 1.0);
                let t = self.sk(Space::Base, a, k)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec![]))
            }

            CatalogId::LC54 => {
                gate!(k >= 1 && k <= n, "k = {k} outside 1..={n}");
                gate!(self.inv.is_connected, "graph is disconnected");
                gate!(a < 1.0, "alpha = 1 is excluded");
                let Some(theta) = self.inv.theta else {
                    return Ok(BoundRecord::inapplicable(
                        id,
                        inputs,
                        "exact independence computation is guarded to n <= 24",
                    ));
                };
                gate!(k <= theta + 1, "k = {k} exceeds independence number + 1 = {}", theta + 1);
                let df = dmin as f64;
                let value = a * (kf - 1.0) * df
                    + (2.0 * mf - (2.0 - a) * (kf - 1.0) * df) / (nf - kf + 1.0);
                let t = self.sk(Space::Base, a, k)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec![]))
            }

            CatalogId::B61 => {
                gate!(k >= 1 && k <= n, "k = {k} outside 1..={n}");
                let lower = (1.0 - a) * nf + (a * nf - 1.0) * kf;
                let upper = kf
                    * ((2.0 - a) * nf + a * (dmax as f64 - dmin as f64 - 1.0)
                        - (1.0 - a) * (kf + 1.0));
                let t = self.sk(Space::Base, a, k)? + self.sk(Space::Complement, a, k)?;
                Ok(self.finish(id, inputs, BoundValue::Pair { lower, upper }, t, vec![]))
            }

            CatalogId::U62a => {
                gate!(m >= 1, "graph is edgeless");
                gate!(k >= 1 && k <= n.min(m), "k = {k} outside 1..=min(n, m) = {}", n.min(m));
                let value = 2.0 * kf * (a * dmax as f64 - 1.0) + (1.0 - a) * self.q_spec()?.s_k(k)?;
                let t = self.sk(Space::Line, a, k)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec![]))
            }

            CatalogId::U62b => {
                gate!(m >= 1, "graph is edgeless");
                gate!(k > n && k <= m, "k = {k} outside (n, m] = ({n}, {m}]");
                let value = 2.0 * a * kf * (dmax as f64 - 1.0) + 2.0 * (1.0 - a) * (mf - kf);
                let t = self.sk(Space::Line, a, k)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec![]))
            }

            CatalogId::UC61 => {
                gate!(m >= 1, "graph is edgeless");
                let (case, max_k, value, flags): (&str, usize, f64, Vec<String>) =
                    if self.g.is_tree() {
                        let v = 2.0 * kf * a * (dmax as f64 - 1.0) + (1.0 - a) * (nf - 2.0);
                        ("tree", n - 1, v, vec![])
                    } else if self.inv.is_connected && m == n {
                        let v = 2.0 * kf * (a * dmax as f64 - 1.0)
                            + (1.0 - a) * (nf + (kf * kf + kf) / 2.0);
                        ("unicyclic", n, v, vec!["conjecture-conditional".into()])
                    } else if self.inv.is_connected && m == n + 1 {
                        let v = 2.0 * kf * (a * dmax as f64 - 1.0)
                            + (1.0 - a) * (nf + 1.0 + (kf * kf + kf) / 2.0);
                        ("bicyclic", n, v, vec!["conjecture-conditional".into()])
                    } else {
                        return Ok(BoundRecord::inapplicable(
                            id,
                            inputs,
                            "graph is not a tree, unicyclic, or bicyclic",
                        ));
                    };
                gate!(k >= 1 && k <= max_k, "k = {k} outside 1..={max_k} for the {case} case");
                inputs.cert = Some(format!("case={case}"));
                let t = self.sk(Space::Line, a, k)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, flags))
            }

            CatalogId::U63 => {
                gate!(n >= 2, "graph has fewer than two vertices");
                gate!(k >= 1 && k + 1 <= n, "k = {k} outside 1..={}", n - 1);
                gate!(self.inv.is_connected, "graph is disconnected");
                gate!(
                    is_k3_free_and_c4_free(self.g),
                    "graph contains a triangle or a quadrilateral"
                );
                let ac = self.algebraic_connectivity()?;
                let sk_adj = self.sk(Space::Base, 0.0, k)?;
                let df = dmin as f64;
                let value = a * (z1 - (nf - kf) * df * df)
                    + (1.0 - a) * (2.0 * mf - sk_adj * sk_adj / (nf - kf) - (kf - 1.0) * ac);
                let t = self.sk(Space::Square, a, k)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec![]))
            }

            CatalogId::U64 => {
                gate!(k >= 1 && k <= 2 * n, "k = {k} outside 1..={} for the doubled graph", 2 * n);
                let top = |count: usize| -> f64 {
                    self.degrees_desc.iter().take(count).map(|&d| d as f64).sum()
                };
                let value = if k < n {
                    let adj_part = 2.0 * (1.0 - a) * self.sk(Space::Base, 0.0, k)?;
                    if k % 2 == 0 {
                        4.0 * top(k / 2) + adj_part
                    } else {
                        4.0 * top((k - 1) / 2)
                            + 2.0 * self.degrees_desc[(k + 1) / 2 - 1] as f64
                            + adj_part
                    }
                } else if k % 2 == 0 {
                    4.0 * top(k / 2)
                } else {
                    4.0 * top((k - 1) / 2) + 2.0 * self.degrees_desc[(k + 1) / 2 - 1] as f64
                };
                let t = self.sk(Space::Double, a, k)?;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), t, vec![]))
            }

            CatalogId::C13 => {
                gate!(k >= 1 && k <= n, "k = {k} outside 1..={n}");
                gate!((0.5..1.0).contains(&a), "alpha = {a} outside [1/2, 1)");
                let value = a * mf + a * kf * (kf + 1.0) / 2.0;
                let t = self.sk(Space::Base, a, k)?;
                Ok(self.finish(
                    id,
                    inputs,
                    BoundValue::Scalar(value),
                    t,
                    vec!["conjecture-conditional".into()],
                ))
            }

            CatalogId::F12 => {
                gate!(n >= 2, "graph has fewer than two vertices");
                gate!((0.5..1.0).contains(&a), "alpha = {a} outside [1/2, 1)");
                inputs.k = 2;
                let s2 = self.sk(Space::Base, a, 2)?;
                let value = a * mf + a + 1.0 - s2;
                Ok(self.finish(id, inputs, BoundValue::Scalar(value), s2, vec![]))
            }
        }
    }
}

/// The branch function shared by the tree-restricted upper bounds: sqrt of
/// k, the matching number, or n-k edges' worth of the tree's edge count.
fn tree_branch(n: usize, beta: usize, k: usize) -> f64 {
    let mf = (n - 1) as f64;
    if k <= beta {
        (k as f64 * mf).sqrt()
    } else if k <= n - beta {
        (beta as f64 * mf).sqrt()
    } else {
        ((n - k) as f64 * mf).sqrt()
    }
}

/// Evaluates one entry on a fresh context.
pub fn evaluate_bound(
    id: CatalogId,
    g: &Graph,
    alpha: AlphaValue,
    k: usize,
    cert: Option<&Certificate>,
) -> Result<BoundRecord, BoundsError> {
    EvalContext::new(g).evaluate(id, alpha, k, cert)
}

/// Runs every entry of the subset (the full catalog when empty) at one
/// (alpha, k) and returns all records — applicable or not. Violations are
/// data in the records, never errors.
pub fn verify_sandwich(
    g: &Graph,
    alpha: AlphaValue,
    k: usize,
    catalog_subset: &[CatalogId],
) -> Result<Vec<BoundRecord>, BoundsError> {
    let ctx = EvalContext::new(g);
    let ids = if catalog_subset.is_empty() { CatalogId::ALL } else { catalog_subset };
    ids.iter().map(|&id| ctx.evaluate(id, alpha, k, None)).collect()
}

/// Aggregate of a whole-catalog sweep over one graph.
#[derive(Clone, Debug, Default)]
pub struct GraphSweepOutcome {
    /// Applicable inequality records checked (objectives excluded).
    pub evaluated: usize,
    /// Records whose slack fell below -tolerance.
    pub violations: Vec<BoundRecord>,
    /// Smallest slack seen across checked records (+inf when none).
    pub min_slack: f64,
}

/// Sweeps the full catalog over one graph for every alpha in the grid,
/// using each entry's own k domain (line graphs go to m vertices, the
/// doubled graph to 2n, forced-k entries once per alpha). Conjectural
/// records are excluded from the violation count unless requested.
pub fn sweep_graph(
    g: &Graph,
    alphas: &[AlphaValue],
    include_conjectural: bool,
) -> Result<GraphSweepOutcome, BoundsError> {
    const SELF_SPACE: &[CatalogId] = &[
        CatalogId::U31a,
        CatalogId::U31b,
        CatalogId::U32,
        CatalogId::UC31,
        CatalogId::U33,
        CatalogId::UC32,
        CatalogId::UC33,
        CatalogId::U41,
        CatalogId::UC41,
        CatalogId::U42i,
        CatalogId::U42ii,
        CatalogId::U43i,
        CatalogId::U43ii,
        CatalogId::U44i,
        CatalogId::U44ii,
        CatalogId::L51i,
        CatalogId::L51ii,
        CatalogId::LC51i,
        CatalogId::LC51ii,
        CatalogId::L52i,
        CatalogId::L52ii,
        CatalogId::L53,
        CatalogId::L54,
        CatalogId::LC54,
        CatalogId::B61,
        CatalogId::C13,
    ];
    const LINE_SPACE: &[CatalogId] = &[CatalogId::U62a, CatalogId::U62b, CatalogId::UC61];
    const ONCE_PER_ALPHA: &[CatalogId] = &[CatalogId::U34, CatalogId::UC34, CatalogId::LC53];

    let ctx = EvalContext::new(g);
    let tol = ctx.tolerance();
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut outcome = GraphSweepOutcome { min_slack: f64::INFINITY, ..Default::default() };

    let mut take = |rec: BoundRecord| {
        if !rec.applicable || rec.direction == Direction::Objective {
            return;
        }
        if rec.is_conjectural() && !include_conjectural {
            return;
        }
        outcome.evaluated += 1;
        if let Some(s) = rec.slack {
            if s < outcome.min_slack {
                outcome.min_slack = s;
            }
        }
        if rec.is_violation(tol) {
            outcome.violations.push(rec);
        }
    };

    for &alpha in alphas {
        for k in 1..=n {
            for &id in SELF_SPACE {
                take(ctx.evaluate(id, alpha, k, None)?);
            }
        }
        for k in 1..=m {
            for &id in LINE_SPACE {
                take(ctx.evaluate(id, alpha, k, None)?);
            }
        }
        for k in 1..n.saturating_sub(0) {
            take(ctx.evaluate(CatalogId::U63, alpha, k, None)?);
        }
        for k in 1..=2 * n {
            take(ctx.evaluate(CatalogId::U64, alpha, k, None)?);
        }
        for &id in ONCE_PER_ALPHA {
            take(ctx.evaluate(id, alpha, 1, None)?);
        }
    }
    Ok(outcome)
}
