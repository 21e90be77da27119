//! Command-line front end: argument model, the verification driver and the
//! export formats. The `toda` binary is a thin wrapper around [`run`].

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::annular::{build_ni, hamiltonian_paths, mtuple_oracle};
use crate::cluster::{build_qn, Quiver, SeedA, SeedX};
use crate::exactalg::LaurentPoly;
use crate::jacobian::{
    build_coefficient_quiver, build_module_matrices, cluster_character, enumerate_submodules, Lambda,
};
use crate::network::homology::bps_spectrum_of;
use crate::network::trajectory::trace_trajectory;
use crate::network::transport::{build_network_graph, holonomy_trace_for};
use crate::network::walls::{theta_scan, toda_splitting, SplittingData};
use crate::toda::{hamiltonian_matrix, Coords, TodaRing};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{0}")]
    Compute(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

fn compute<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Compute(e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    Matrix,
    Paths,
    Cc,
    Network,
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "matrix" => Ok(Method::Matrix),
            "paths" => Ok(Method::Paths),
            "cc" => Ok(Method::Cc),
            "network" => Ok(Method::Network),
            other => Err(format!("unknown method `{other}` (expected matrix, paths, cc or network)")),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "toda", about = "Relativistic Toda Hamiltonians, four ways")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mutate Q_n and its initial seeds along a sequence of vertices.
    Mutate {
        /// Quiver name, e.g. Q3.
        #[arg(long)]
        quiver: String,
        /// Comma-separated 1-based vertices.
        #[arg(long, default_value = "")]
        seq: String,
    },
    /// Print H_k by one of the four methods.
    Hamiltonian {
        #[arg(long)]
        n: Option<usize>,
        /// Number of sheets, N = n + 1.
        #[arg(long = "N")]
        sheets: Option<usize>,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "matrix")]
        method: Method,
        #[arg(long, default_value = "x")]
        coords: Coords,
        /// Phase of the spectral network (network method).
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Submodules of M_i over the Jacobian algebra of (Q_n, W_n).
    Submodules {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        lambda: Option<Lambda>,
        #[arg(long)]
        json: bool,
    },
    /// Splitting, BPS spectrum and BPS quiver of the Toda curve.
    Bps {
        #[arg(long = "N")]
        sheets: usize,
        #[arg(long, allow_hyphen_values = true)]
        theta: f64,
        #[arg(long)]
        dot: bool,
    },
    /// Trace a wall trajectory numerically.
    Trace {
        #[arg(long = "N")]
        sheets: usize,
        #[arg(long, allow_hyphen_values = true)]
        phi: f64,
        #[arg(long, allow_hyphen_values = true)]
        z0: String,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
        #[arg(long, default_value_t = 10.0)]
        t_max: f64,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Cross-check every method and count; exits 1 on any mismatch.
    Verify {
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long = "N-max")]
        sheets_max: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Write a DOT or CSV file.
    Export {
        #[arg(long)]
        kind: ExportKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long = "N")]
        sheets: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        z0: Option<String>,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
        #[arg(long, default_value_t = 10.0)]
        t_max: f64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportKind {
    QuiverDot,
    GraphDot,
    TrajCsv,
}

impl FromStr for ExportKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "quiver-dot" => Ok(ExportKind::QuiverDot),
            "graph-dot" => Ok(ExportKind::GraphDot),
            "traj-csv" => Ok(ExportKind::TrajCsv),
            other => Err(format!("unknown export kind `{other}`")),
        }
    }
}

/// Parses `a+bi`, `a-bi`, `bi` or `a`.
pub fn parse_complex(s: &str) -> Result<Complex64, CliError> {
    let bad = || CliError::Usage(format!("cannot parse complex number `{s}`"));
    let t = s.trim().replace(' ', "");
    if let Some(body) = t.strip_suffix('i') {
        let split = body.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(i, _)| i).last();
        let (re, im) = match split {
            Some(p) => (&body[..p], &body[p..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => "1",
            "-" => "-1",
            x => x,
        };
        Ok(Complex64::new(re.parse().map_err(|_| bad())?, im.parse().map_err(|_| bad())?))
    } else {
        Ok(Complex64::new(t.parse().map_err(|_| bad())?, 0.0))
    }
}

fn parse_qn(name: &str) -> Result<usize, CliError> {
    name.strip_prefix('Q')
        .and_then(|r| r.parse().ok())
        .filter(|&n| n >= 1)
        .ok_or_else(|| CliError::Usage(format!("unknown quiver `{name}` (expected Q<n>)")))
}

fn parse_seq(seq: &str, vertices: usize) -> Result<Vec<usize>, CliError> {
    seq.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .ok()
                .filter(|&k| (1..=vertices).contains(&k))
                .ok_or_else(|| CliError::Usage(format!("bad mutation vertex `{s}`")))
        })
        .collect()
}

fn resolve_rank(n: Option<usize>, sheets: Option<usize>) -> Result<usize, CliError> {
    match (n, sheets) {
        (Some(n), None) => Ok(n),
        (None, Some(s)) if s >= 2 => Ok(s - 1),
        (Some(n), Some(s)) if s == n + 1 => Ok(n),
        (None, None) => Err(CliError::Usage("one of --n or --N is required".into())),
        _ => Err(CliError::Usage("--N must equal --n + 1 and be at least 2".into())),
    }
}

/// A splitting of the `N`-sheeted curve: at `theta` if given, otherwise the
/// first one met by the phase scan.
pub fn splitting_for(sheets: usize, theta: Option<f64>) -> Result<SplittingData, CliError> {
    match theta {
        Some(t) => toda_splitting(sheets, t).map_err(compute),
        None => theta_scan(sheets)
            .map_err(compute)?
            .into_iter()
            .next()
            .map(|(_, s)| s)
            .ok_or_else(|| CliError::Compute("empty phase scan".into())),
    }
}

/// `H_k` of rank `n` by the chosen method.
pub fn hamiltonian(
    n: usize,
    k: usize,
    method: Method,
    coords: Coords,
    theta: Option<f64>,
) -> Result<LaurentPoly, CliError> {
    if n < 1 {
        return Err(CliError::Usage(format!("rank must be at least 1 (got {n})")));
    }
    if k < 1 || k > n {
        return Err(CliError::Usage(format!("k must lie in 1..={n} (got {k})")));
    }
    if coords == Coords::Y && matches!(method, Method::Cc | Method::Network) {
        return Err(CliError::Usage("methods cc and network produce x-coordinates only".into()));
    }
    let tr = TodaRing::new(n).map_err(compute)?;
    match method {
        Method::Matrix => hamiltonian_matrix(n, k, coords).map_err(compute),
        Method::Paths => {
            let h = hamiltonian_paths(n, k).map_err(compute)?;
            match coords {
                Coords::Y => Ok(h),
                Coords::X => tr.to_x(&h).map_err(compute),
            }
        }
        Method::Cc => cluster_character(n, k).map_err(compute),
        Method::Network => holonomy_trace_for(&splitting_for(n + 1, theta)?, k).map_err(compute),
    }
}

pub fn poly_hash(p: &LaurentPoly) -> String {
    let digest = Sha256::digest(p.to_json().as_bytes());
    digest.iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

/// First monomial (in canonical order) whose coefficients differ.
pub fn first_difference(a: &LaurentPoly, b: &LaurentPoly) -> Option<String> {
    let diff = a.sub(b).ok()?;
    let (e, c) = diff.terms().next()?;
    let mono = LaurentPoly::monomial(a.ring(), e.clone(), c.clone());
    Some(format!("{mono}"))
}

#[derive(Debug, Clone, Serialize)]
pub struct HamiltonianCheck {
    pub n: usize,
    pub k: usize,
    pub hashes: BTreeMap<String, String>,
    pub equal: bool,
    pub first_difference: Option<String>,
    pub terms: usize,
    pub millis: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct SubmoduleCount {
    pub n: usize,
    pub i: usize,
    pub dimension: usize,
    pub submodules: usize,
    pub mtuples: usize,
    pub equal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SplittingCheck {
    pub sheets: usize,
    pub theta: f64,
    pub fingerprint: String,
    pub quiver_is_qn: bool,
    pub traces_equal: bool,
    pub first_difference: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub hamiltonians: Vec<HamiltonianCheck>,
    pub submodules: Vec<SubmoduleCount>,
    pub splittings: Vec<SplittingCheck>,
    pub pass: bool,
}

impl VerifyReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let mark = |ok: bool| if ok { "ok  " } else { "FAIL" };
        for h in &self.hamiltonians {
            let _ = writeln!(
                s,
                "{} H  n={} k={} terms={} ({} ms){}",
                mark(h.equal),
                h.n,
                h.k,
                h.terms,
                h.millis,
                h.first_difference.as_ref().map(|d| format!(" first difference {d}")).unwrap_or_default()
            );
        }
        for c in &self.submodules {
            let _ = writeln!(
                s,
                "{} M  n={} i={} dim={} submodules={} m-tuples={}",
                mark(c.equal),
                c.n,
                c.i,
                c.dimension,
                c.submodules,
                c.mtuples
            );
        }
        for p in &self.splittings {
            let _ = writeln!(
                s,
                "{} W  N={} theta={:.4} {} quiver={} traces={}",
                mark(p.quiver_is_qn && p.traces_equal),
                p.sheets,
                p.theta,
                p.fingerprint,
                p.quiver_is_qn,
                p.traces_equal
            );
        }
        let _ = writeln!(s, "{}", if self.pass { "all checks passed" } else { "some checks FAILED" });
        s
    }
}

fn check_hamiltonian(n: usize, k: usize, with_network: bool) -> Result<HamiltonianCheck, CliError> {
    let start = Instant::now();
    let matrix = hamiltonian(n, k, Method::Matrix, Coords::X, None)?;
    let mut others = vec![
        ("paths", hamiltonian(n, k, Method::Paths, Coords::X, None)?),
        ("cc", hamiltonian(n, k, Method::Cc, Coords::X, None)?),
    ];
    if with_network {
        others.push(("network", hamiltonian(n, k, Method::Network, Coords::X, None)?));
    }
    let mut hashes = BTreeMap::new();
    hashes.insert("matrix".to_string(), poly_hash(&matrix));
    for (name, p) in &others {
        hashes.insert(name.to_string(), poly_hash(p));
    }
    Ok(HamiltonianCheck {
        n,
        k,
        hashes,
        equal: others.iter().all(|(_, p)| *p == matrix),
        first_difference: others.iter().find_map(|(_, p)| first_difference(&matrix, p)),
        terms: matrix.len(),
        millis: start.elapsed().as_millis(),
    })
}

fn count_submodules(n: usize, i: usize) -> Result<SubmoduleCount, CliError> {
    let g = build_coefficient_quiver(n, i).map_err(compute)?;
    let subs = enumerate_submodules(&g);
    let mtuples = mtuple_oracle(n, i).len();
    Ok(SubmoduleCount {
        n,
        i,
        dimension: g.vertices.len(),
        submodules: subs.len(),
        mtuples,
        equal: subs.len() == mtuples,
    })
}

fn check_splittings(sheets: usize) -> Result<Vec<SplittingCheck>, CliError> {
    let scan = theta_scan(sheets).map_err(compute)?;
    let qn = build_qn(sheets - 1).map_err(compute)?;
    scan.into_par_iter()
        .map(|(theta, s)| {
            let spectrum = bps_spectrum_of(&s).map_err(compute)?;
            let mut traces_equal = true;
            let mut diff = None;
            for k in 1..sheets {
                let h = holonomy_trace_for(&s, k).map_err(compute)?;
                let m = hamiltonian_matrix(sheets - 1, k, Coords::X).map_err(compute)?;
                if h != m {
                    traces_equal = false;
                    diff = diff.or_else(|| first_difference(&h, &m));
                }
            }
            Ok(SplittingCheck {
                sheets,
                theta,
                fingerprint: s.fingerprint(),
                quiver_is_qn: spectrum.quiver == qn,
                traces_equal,
                first_difference: diff,
            })
        })
        .collect()
}

/// Runs every cross-method check for ranks up to `n_max` and sheet counts
/// up to `sheets_max`.
pub fn cmd_verify(n_max: usize, sheets_max: usize) -> Result<VerifyReport, CliError> {
    if !(1..=7).contains(&n_max) {
        return Err(CliError::Usage(format!("--n-max must lie in 1..=7 (got {n_max})")));
    }
    if sheets_max > 8 {
        return Err(CliError::Usage(format!("--N-max must be at most 8 (got {sheets_max})")));
    }
    let pairs: Vec<(usize, usize)> = (1..=n_max).flat_map(|n| (1..=n).map(move |k| (n, k))).collect();
    let hamiltonians =
        pairs.par_iter().map(|&(n, k)| check_hamiltonian(n, k, n < sheets_max)).collect::<Result<Vec<_>, _>>()?;
    let submodules = pairs.par_iter().map(|&(n, i)| count_submodules(n, i)).collect::<Result<Vec<_>, _>>()?;
    let mut splittings = Vec::new();
    for sheets in 2..=sheets_max {
        splittings.extend(check_splittings(sheets)?);
    }
    let pass = hamiltonians.iter().all(|h| h.equal)
        && submodules.iter().all(|c| c.equal && c.submodules == term_count(c.n, c.i))
        && splittings.iter().all(|p| p.quiver_is_qn && p.traces_equal);
    Ok(VerifyReport { hamiltonians, submodules, splittings, pass })
}

fn term_count(n: usize, k: usize) -> usize {
    hamiltonian_matrix(n, k, Coords::X).map(|h| h.len()).unwrap_or(0)
}

pub fn cmd_hamiltonian(
    n: usize,
    k: usize,
    method: Method,
    coords: Coords,
    theta: Option<f64>,
    as_json: bool,
) -> Result<String, CliError> {
    let h = hamiltonian(n, k, method, coords, theta)?;
    Ok(if as_json { format!("{}\n", h.to_json()) } else { format!("{h}\n") })
}

pub fn cmd_submodules(n: usize, i: usize, lambda: Option<Lambda>, as_json: bool) -> Result<String, CliError> {
    if n < 1 || i < 1 || i > n {
        return Err(CliError::Usage(format!("need 1 <= i <= n (got n={n}, i={i})")));
    }
    let dims = match lambda {
        Some(l) => {
            let m = build_module_matrices(n, i, l).map_err(compute)?;
            if !m.relations_hold() {
                return Err(CliError::Verification(format!("relations fail for M_{i} at {l}")));
            }
            m.submodule_dimension_vectors()
        }
        None => {
            let mut d = enumerate_submodules(&build_coefficient_quiver(n, i).map_err(compute)?);
            d.sort();
            d
        }
    };
    let dimension: usize = dims.iter().map(|d| d.iter().sum::<usize>()).max().unwrap_or(0);
    if as_json {
        let v = json!({
            "n": n,
            "i": i,
            "lambda": lambda.map(|l| l.to_string()),
            "dimension": dimension,
            "count": dims.len(),
            "dimension_vectors": dims,
        });
        Ok(format!("{v}\n"))
    } else {
        let mut s = format!("M_{i} over J(Q_{n}, W_{n}): dimension {dimension}, {} submodules\n", dims.len());
        for d in &dims {
            let row: Vec<String> = d.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "  ({})", row.join(","));
        }
        Ok(s)
    }
}

pub fn cmd_mutate(quiver: &str, seq: &str) -> Result<String, CliError> {
    let n = parse_qn(quiver)?;
    let q = build_qn(n).map_err(compute)?;
    let seq = parse_seq(seq, q.n())?;
    let mut a = SeedA::initial(&q);
    let mut x = SeedX::initial(&q);
    let mut mq: Quiver = q;
    for &k in &seq {
        mq = mq.mutate(k).map_err(compute)?;
        a = a.mutate(k).map_err(compute)?;
        x = x.mutate(k).map_err(compute)?;
    }
    let v = json!({ "sequence": seq, "quiver": mq.to_json(), "seed_a": a.to_json(), "seed_x": x.to_json() });
    Ok(format!("{}\n", serde_json::to_string_pretty(&v).map_err(compute)?))
}

pub fn cmd_bps(sheets: usize, theta: f64, dot: bool) -> Result<String, CliError> {
    if sheets < 2 {
        return Err(CliError::Usage(format!("--N must be at least 2 (got {sheets})")));
    }
    let s = toda_splitting(sheets, theta).map_err(compute)?;
    let spectrum = bps_spectrum_of(&s).map_err(compute)?;
    if dot {
        return Ok(spectrum.quiver.to_dot("bps"));
    }
    let v = json!({
        "splitting": s,
        "fingerprint": s.fingerprint(),
        "basis": spectrum.basis.iter().map(|b| json!({
            "name": b.name, "class": b.class.to_string(), "vertex": b.vertex,
        })).collect::<Vec<Value>>(),
        "positive": spectrum.positive.iter().map(|p| json!({
            "side": p.side, "root": p.root, "class": p.class.to_string(),
        })).collect::<Vec<Value>>(),
        "quiver": spectrum.quiver.to_json(),
        "is_qn": spectrum.quiver == build_qn(sheets - 1).map_err(compute)?,
    });
    Ok(format!("{}\n", serde_json::to_string_pretty(&v).map_err(compute)?))
}

pub fn cmd_trace(
    sheets: usize,
    phi: f64,
    z0: &str,
    step: f64,
    t_max: f64,
    csv: Option<&std::path::Path>,
) -> Result<String, CliError> {
    let z0 = parse_complex(z0)?;
    if step.is_nan() || step <= 0.0 || t_max.is_nan() || t_max <= 0.0 || sheets < 1 {
        return Err(CliError::Usage("need --N >= 1 and positive --step, --t-max".into()));
    }
    let tr = trace_trajectory(sheets, phi, z0, step, t_max).map_err(compute)?;
    if let Some(path) = csv {
        std::fs::write(path, tr.to_csv())?;
    }
    let last = *tr.z.last().expect("at least the start point");
    let v = json!({
        "samples": tr.z.len(),
        "t_end": tr.t.last(),
        "end": [last.re, last.im],
        "termination": tr.termination,
        "monotonicity": tr.monotonicity(1e-9),
        "conforms": tr.conforms(1e-9),
        "branch_residual": tr.branch_residual(),
    });
    Ok(format!("{v}\n"))
}

/// Export parameters; unused fields are ignored by the chosen kind.
#[derive(Debug, Clone, Default)]
pub struct ExportParams {
    pub n: Option<usize>,
    pub sheets: Option<usize>,
    pub theta: Option<f64>,
    pub phi: Option<f64>,
    pub z0: Option<String>,
    pub step: f64,
    pub t_max: f64,
}

/// File contents for an export; deterministic given the parameters.
pub fn export_contents(kind: ExportKind, p: &ExportParams) -> Result<String, CliError> {
    match kind {
        ExportKind::QuiverDot => {
            let n = resolve_rank(p.n, p.sheets)?;
            Ok(build_qn(n).map_err(compute)?.to_dot(&format!("Q{n}")))
        }
        ExportKind::GraphDot => match (p.n, p.sheets) {
            (Some(n), None) => Ok(build_ni(n).map_err(compute)?.to_dot(&format!("N_i_{n}"))),
            (None, Some(sheets)) => {
                let s = splitting_for(sheets, p.theta)?;
                Ok(build_network_graph(&s).map_err(compute)?.graph.to_dot(&format!("N_W_{sheets}")))
            }
            _ => Err(CliError::Usage("graph-dot takes exactly one of --n (N_i) or --N (N_W)".into())),
        },
        ExportKind::TrajCsv => {
            let sheets = p.sheets.ok_or_else(|| CliError::Usage("traj-csv needs --N".into()))?;
            let phi = p.phi.ok_or_else(|| CliError::Usage("traj-csv needs --phi".into()))?;
            let z0 = parse_complex(p.z0.as_deref().ok_or_else(|| CliError::Usage("traj-csv needs --z0".into()))?)?;
            let tr = trace_trajectory(sheets, phi, z0, p.step, p.t_max).map_err(compute)?;
            Ok(tr.to_csv())
        }
    }
}

pub fn cmd_export(kind: ExportKind, p: &ExportParams, out: &std::path::Path) -> Result<String, CliError> {
    let contents = export_contents(kind, p)?;
    std::fs::write(out, &contents)?;
    Ok(format!("wrote {} ({} bytes)\n", out.display(), contents.len()))
}

/// Sizes the global thread pool from `TODA_THREADS`, if set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("TODA_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| CliError::Usage(format!("TODA_THREADS must be a positive integer (got `{v}`)")))?;
    // A pool that was already built keeps its size.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Command output plus an optional verification failure, reported after
/// the output has been written.
struct Outcome {
    text: String,
    failure: Option<String>,
}

impl From<String> for Outcome {
    fn from(text: String) -> Self {
        Outcome { text, failure: None }
    }
}

fn dispatch(cmd: Command) -> Result<Outcome, CliError> {
    let text = match cmd {
        Command::Mutate { quiver, seq } => cmd_mutate(&quiver, &seq),
        Command::Hamiltonian { n, sheets, k, method, coords, theta, json } => {
            cmd_hamiltonian(resolve_rank(n, sheets)?, k, method, coords, theta, json)
        }
        Command::Submodules { n, i, lambda, json } => cmd_submodules(n, i, lambda, json),
        Command::Bps { sheets, theta, dot } => cmd_bps(sheets, theta, dot),
        Command::Trace { sheets, phi, z0, step, t_max, csv } => {
            cmd_trace(sheets, phi, &z0, step, t_max, csv.as_deref())
        }
        Command::Verify { n_max, sheets_max, json } => {
            let report = cmd_verify(n_max, sheets_max.unwrap_or(n_max + 1))?;
            let text = if json {
                format!("{}\n", serde_json::to_string_pretty(&report).map_err(compute)?)
            } else {
                report.render_text()
            };
            return Ok(Outcome { text, failure: (!report.pass).then(|| "cross-method checks disagree".to_string()) });
        }
        Command::Export { kind, n, sheets, theta, phi, z0, step, t_max, out } => {
            let p = ExportParams { n, sheets, theta, phi, z0, step, t_max };
            cmd_export(kind, &p, &out)
        }
    }?;
    Ok(text.into())
}

/// Parses `args` (including the program name), runs the command, writes
/// its output to `out` and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let result = configure_threads().and_then(|_| dispatch(cli.command));
    match result {
        Ok(outcome) => {
            let _ = out.write_all(outcome.text.as_bytes());
            match outcome.failure {
                None => 0,
                Some(msg) => {
                    let e = CliError::Verification(msg);
                    let _ = writeln!(err, "error: {e}");
                    e.exit_code()
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
