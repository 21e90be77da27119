//! The quiver with potential `(Q_n, W_n)`, its relations and path basis,
//! the modules `M_i` with their coefficient quivers, submodule enumeration
//! and cluster characters.
//!
//! Paths are stored in traversal order: `[e1, e2, e3]` walks `e1` first.
//! The action of a path on a module is `M(e3) M(e2) M(e1)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::exactalg::LaurentPoly;
use crate::toda::{TodaError, TodaRing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JacobianError {
    #[error("rank must be at least 1 (got {0})")]
    Rank(usize),
    #[error("module index {i} out of range 1..={n}")]
    ModuleIndex { i: usize, n: usize },
    #[error("degenerate parameter (0:0)")]
    DegenerateLambda,
    #[error("cannot parse parameter `{0}` (expected p:q)")]
    LambdaSyntax(String),
    #[error(transparent)]
    Toda(#[from] TodaError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArrowKind {
    A,
    B,
    L,
    R,
}

/// A labeled arrow of `Q_n`: `a_k, b_k: 2k-1 -> 2k`, `r_k: 2k -> 2k+1`,
/// `l_k: 2k -> 2k-3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub kind: ArrowKind,
    pub index: usize,
}

impl Arrow {
    pub fn a(k: usize) -> Self {
        Arrow { kind: ArrowKind::A, index: k }
    }
    pub fn b(k: usize) -> Self {
        Arrow { kind: ArrowKind::B, index: k }
    }
    pub fn l(k: usize) -> Self {
        Arrow { kind: ArrowKind::L, index: k }
    }
    pub fn r(k: usize) -> Self {
        Arrow { kind: ArrowKind::R, index: k }
    }

    pub fn source(&self) -> usize {
        let k = self.index;
        match self.kind {
            ArrowKind::A | ArrowKind::B => 2 * k - 1,
            ArrowKind::L | ArrowKind::R => 2 * k,
        }
    }

    pub fn target(&self) -> usize {
        let k = self.index;
        match self.kind {
            ArrowKind::A | ArrowKind::B => 2 * k,
            ArrowKind::R => 2 * k + 1,
            ArrowKind::L => 2 * k - 3,
        }
    }

    pub fn exists(&self, n: usize) -> bool {
        let k = self.index;
        match self.kind {
            ArrowKind::A | ArrowKind::B => (1..=n).contains(&k),
            ArrowKind::R => k >= 1 && k < n,
            ArrowKind::L => k >= 2 && k <= n,
        }
    }

    pub fn is_vertical(&self) -> bool {
        matches!(self.kind, ArrowKind::A | ArrowKind::B)
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            ArrowKind::A => 'a',
            ArrowKind::B => 'b',
            ArrowKind::L => 'l',
            ArrowKind::R => 'r',
        };
        write!(f, "{c}{}", self.index)
    }
}

/// All arrows of `Q_n`, sorted.
pub fn arrows(n: usize) -> Vec<Arrow> {
    let mut out = Vec::new();
    for k in 1..=n {
        for a in [Arrow::a(k), Arrow::b(k), Arrow::l(k), Arrow::r(k)] {
            if a.exists(n) {
                out.push(a);
            }
        }
    }
    out.sort();
    out
}

pub type Path = Vec<Arrow>;

/// Composition order as usually written (last arrow leftmost).
pub fn path_word(p: &[Arrow]) -> String {
    p.iter().rev().map(|a| a.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PotentialTerm {
    pub sign: i64,
    /// Closed path in traversal order, starting at an even vertex.
    pub cycle: Path,
}

/// Signed cyclic terms of `W_n`.
pub fn potential_terms(n: usize) -> Vec<PotentialTerm> {
    let mut out = Vec::new();
    for i in 1..n {
        out.push(PotentialTerm { sign: 1, cycle: vec![Arrow::r(i), Arrow::b(i + 1), Arrow::l(i + 1), Arrow::a(i)] });
        out.push(PotentialTerm { sign: -1, cycle: vec![Arrow::r(i), Arrow::a(i + 1), Arrow::l(i + 1), Arrow::b(i)] });
    }
    out
}

/// Cyclic derivative of `W_n` with respect to each arrow, as signed paths
/// from the arrow's target back to its source. Arrows not occurring in
/// `W_n` map to an empty list.
pub fn cyclic_derivatives(n: usize) -> BTreeMap<Arrow, Vec<(i64, Path)>> {
    let mut out: BTreeMap<Arrow, Vec<(i64, Path)>> = arrows(n).into_iter().map(|a| (a, Vec::new())).collect();
    for term in potential_terms(n) {
        let c = &term.cycle;
        for (pos, e) in c.iter().enumerate() {
            let rest: Path = (1..c.len()).map(|s| c[(pos + s) % c.len()]).collect();
            out.get_mut(e).expect("arrow of Q_n").push((term.sign, rest));
        }
    }
    out
}

/// `(s, t, lambda, rho, a, b)` of a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathTuple {
    pub s: usize,
    pub t: usize,
    pub lambda: usize,
    pub rho: usize,
    pub a: usize,
    pub b: usize,
}

impl PathTuple {
    pub fn of_path(s: usize, p: &[Arrow]) -> Self {
        let mut t = PathTuple { s, t: s, lambda: 0, rho: 0, a: 0, b: 0 };
        for e in p {
            debug_assert_eq!(e.source(), t.t);
            t.t = e.target();
            match e.kind {
                ArrowKind::A => t.a += 1,
                ArrowKind::B => t.b += 1,
                ArrowKind::L => t.lambda += 1,
                ArrowKind::R => t.rho += 1,
            }
        }
        t
    }

    pub fn len(&self) -> usize {
        self.lambda + self.rho + self.a + self.b
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn half_up(v: usize) -> i64 {
    v.div_ceil(2) as i64
}

/// Vertical arrows any path with these endpoints and horizontal counts
/// traverses, or `None` if no such path exists.
pub fn forced_verticals(s: usize, t: usize, lambda: usize, rho: usize) -> Option<usize> {
    let v = (lambda + rho) as i64 + t.is_multiple_of(2) as i64 - s.is_multiple_of(2) as i64;
    (v >= 0).then_some(v as usize)
}

/// Whether the tuple labels an element of the path basis of `J(Q_n, W_n)`.
pub fn is_basis_tuple(n: usize, p: &PathTuple) -> bool {
    let in_range = |v: usize| (1..=2 * n).contains(&v);
    if !in_range(p.s) || !in_range(p.t) {
        return false;
    }
    let (hs, ht) = (half_up(p.s), half_up(p.t));
    p.rho as i64 - p.lambda as i64 == ht - hs
        && (p.rho as i64) <= n as i64 - hs
        && (p.lambda as i64) < hs
        && forced_verticals(p.s, p.t, p.lambda, p.rho) == Some(p.a + p.b)
}

/// All basis tuples of `J(Q_n, W_n)`.
pub fn path_basis(n: usize) -> Vec<PathTuple> {
    let mut out = Vec::new();
    for s in 1..=2 * n {
        for t in 1..=2 * n {
            for lambda in 0..n {
                for rho in 0..n {
                    if let Some(v) = forced_verticals(s, t, lambda, rho) {
                        for a in 0..=v {
                            let p = PathTuple { s, t, lambda, rho, a, b: v - a };
                            if is_basis_tuple(n, &p) {
                                out.push(p);
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Projective parameter `(p : q)` with integer coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lambda {
    pub p: i64,
    pub q: i64,
}

impl Lambda {
    pub fn new(p: i64, q: i64) -> Result<Self, JacobianError> {
        if p == 0 && q == 0 {
            return Err(JacobianError::DegenerateLambda);
        }
        Ok(Lambda { p, q })
    }

    /// The four parameters used throughout the test suite.
    pub fn samples() -> [Lambda; 4] {
        [Lambda { p: 1, q: 0 }, Lambda { p: 0, q: 1 }, Lambda { p: 1, q: 1 }, Lambda { p: 2, q: 3 }]
    }
}

impl FromStr for Lambda {
    type Err = JacobianError;

    /// Accepts `p:q` with integer or fractional coordinates; fractions are
    /// cleared projectively.
    fn from_str(s: &str) -> Result<Self, JacobianError> {
        let bad = || JacobianError::LambdaSyntax(s.to_string());
        let (a, b) = s.split_once(':').ok_or_else(bad)?;
        let a: Ratio<i64> = a.trim().parse().map_err(|_| bad())?;
        let b: Ratio<i64> = b.trim().parse().map_err(|_| bad())?;
        let l = num_integer::lcm(*a.denom(), *b.denom());
        Lambda::new((a * l).to_integer(), (b * l).to_integer())
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{})", self.p, self.q)
    }
}

/// Basis element `t_l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisVertex {
    pub t: usize,
    pub level: usize,
}

impl fmt::Display for BasisVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.t, self.level)
    }
}

fn check_module(n: usize, i: usize) -> Result<(), JacobianError> {
    if n < 1 {
        return Err(JacobianError::Rank(n));
    }
    if i < 1 || i > n {
        return Err(JacobianError::ModuleIndex { i, n });
    }
    Ok(())
}

/// `{t_l : 0 <= l < i, 2(i-l)-1 <= t <= 2(n-l)}`, sorted by level then `t`.
pub fn module_basis(n: usize, i: usize) -> Vec<BasisVertex> {
    let mut out = Vec::new();
    for level in 0..i {
        for t in 2 * (i - level) - 1..=2 * (n - level) {
            out.push(BasisVertex { t, level });
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientQuiver {
    pub n: usize,
    pub i: usize,
    pub vertices: Vec<BasisVertex>,
    /// Index pairs into `vertices`; parallel edges collapsed.
    pub edges: Vec<(usize, usize)>,
}

impl CoefficientQuiver {
    fn successor_masks(&self) -> Vec<u128> {
        let mut m = vec![0u128; self.vertices.len()];
        for &(a, b) in &self.edges {
            m[a] |= 1 << b;
        }
        m
    }

    pub fn dimension_vector(&self, mask: u128) -> Vec<usize> {
        let mut d = vec![0; 2 * self.n];
        for (k, v) in self.vertices.iter().enumerate() {
            if mask >> k & 1 == 1 {
                d[v.t - 1] += 1;
            }
        }
        d
    }

    /// Vertex subsets closed under successors, as bitmasks.
    pub fn closed_subsets(&self) -> Vec<u128> {
        closed_subsets(&self.successor_masks())
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!("digraph gamma_{}_{} {{\n", self.n, self.i);
        for v in &self.vertices {
            s.push_str(&format!("  \"{v}\";\n"));
        }
        for &(a, b) in &self.edges {
            s.push_str(&format!("  \"{}\" -> \"{}\";\n", self.vertices[a], self.vertices[b]));
        }
        s.push_str("}\n");
        s
    }
}

/// Enumerate successor-closed subsets of a DAG given by successor masks.
/// Vertices are decided sinks-first so every successor is already fixed.
pub fn closed_subsets(succ: &[u128]) -> Vec<u128> {
    let n = succ.len();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u128;
    while order.len() < n {
        let before = order.len();
        for v in 0..n {
            if placed >> v & 1 == 0 && succ[v] & !placed == 0 {
                order.push(v);
                placed |= 1 << v;
            }
        }
        assert!(order.len() > before, "coefficient quiver has a cycle");
    }
    let mut out = Vec::new();
    fn rec(order: &[usize], succ: &[u128], idx: usize, cur: u128, out: &mut Vec<u128>) {
        if idx == order.len() {
            out.push(cur);
            return;
        }
        let v = order[idx];
        rec(order, succ, idx + 1, cur, out);
        if succ[v] & !cur == 0 {
            rec(order, succ, idx + 1, cur | 1 << v, out);
        }
    }
    rec(&order, succ, 0, 0, &mut out);
    out
}

/// Coefficient quiver of `M_i`: `t_l -> (t+1)_l` and, for `t` even,
/// `t_l -> (t-3)_{l+1}`, whenever the target is a basis vertex.
pub fn build_coefficient_quiver(n: usize, i: usize) -> Result<CoefficientQuiver, JacobianError> {
    check_module(n, i)?;
    let vertices = module_basis(n, i);
    let idx: BTreeMap<BasisVertex, usize> = vertices.iter().enumerate().map(|(k, v)| (*v, k)).collect();
    let mut edges = Vec::new();
    for (k, v) in vertices.iter().enumerate() {
        let mut targets = vec![BasisVertex { t: v.t + 1, level: v.level }];
        if v.t % 2 == 0 && v.t > 3 {
            targets.push(BasisVertex { t: v.t - 3, level: v.level + 1 });
        }
        for w in targets {
            if let Some(&j) = idx.get(&w) {
                edges.push((k, j));
            }
        }
    }
    Ok(CoefficientQuiver { n, i, vertices, edges })
}

/// Dimension vectors of all submodules, sorted lexicographically.
pub fn enumerate_submodules(g: &CoefficientQuiver) -> Vec<Vec<usize>> {
    let mut dims: Vec<Vec<usize>> = g.closed_subsets().into_iter().map(|m| g.dimension_vector(m)).collect();
    dims.sort();
    dims
}

pub type IntMatrix = Vec<Vec<i64>>;

fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let rows = a.len();
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![0; cols]; rows];
    for r in 0..rows {
        for k in 0..inner {
            if a[r][k] != 0 {
                for c in 0..cols {
                    out[r][c] += a[r][k] * b[k][c];
                }
            }
        }
    }
    out
}

fn transpose(a: &IntMatrix, rows: usize, cols: usize) -> IntMatrix {
    (0..cols).map(|c| (0..rows).map(|r| a[r][c]).collect()).collect()
}

/// A representation of `Q_n` with integer edge matrices. Each vertex space
/// carries an ordered list of basis vertices; the matrix of arrow `e` has
/// one row per basis vector at `e.target()` and one column per basis vector
/// at `e.source()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcreteModule {
    pub n: usize,
    pub lambda: Lambda,
    /// Basis vertices at each vertex of `Q_n` (index `v - 1`).
    pub spaces: Vec<Vec<BasisVertex>>,
    pub maps: BTreeMap<Arrow, IntMatrix>,
}

impl ConcreteModule {
    pub fn dimension_vector(&self) -> Vec<usize> {
        self.spaces.iter().map(|s| s.len()).collect()
    }

    pub fn dimension(&self) -> usize {
        self.spaces.iter().map(|s| s.len()).sum()
    }

    fn dim_at(&self, v: usize) -> usize {
        self.spaces[v - 1].len()
    }

    /// Matrix of a path; identity on the start vertex for the empty path.
    /// Arrows missing from `Q_n` act by zero.
    pub fn path_matrix(&self, start: usize, p: &[Arrow]) -> IntMatrix {
        let d = self.dim_at(start);
        let mut m: IntMatrix = (0..d).map(|r| (0..d).map(|c| (r == c) as i64).collect()).collect();
        for e in p {
            m = match self.maps.get(e) {
                Some(a) => mat_mul(a, &m),
                None => {
                    let rows = if (1..=2 * self.n).contains(&e.target()) { self.dim_at(e.target()) } else { 0 };
                    vec![vec![0; d]; rows]
                }
            };
        }
        m
    }

    /// Arrows whose cyclic-derivative relation fails to vanish.
    pub fn relation_failures(&self) -> Vec<Arrow> {
        let mut bad = Vec::new();
        for (e, terms) in cyclic_derivatives(self.n) {
            let (s, t) = (e.target(), e.source());
            let mut acc = vec![vec![0i64; self.dim_at(s)]; self.dim_at(t)];
            for (sign, p) in &terms {
                let m = self.path_matrix(s, p);
                for r in 0..acc.len() {
                    for c in 0..acc[r].len() {
                        acc[r][c] += sign * m[r][c];
                    }
                }
            }
            if acc.iter().flatten().any(|x| *x != 0) {
                bad.push(e);
            }
        }
        bad
    }

    pub fn relations_hold(&self) -> bool {
        self.relation_failures().is_empty()
    }

    /// Global index of every basis vector, vertex by vertex.
    fn offsets(&self) -> Vec<usize> {
        let mut off = vec![0; self.spaces.len() + 1];
        for v in 0..self.spaces.len() {
            off[v + 1] = off[v] + self.spaces[v].len();
        }
        off
    }

    /// For each basis vector, the basis vectors appearing in its images
    /// under all arrows.
    pub fn support_successors(&self) -> Vec<u128> {
        let off = self.offsets();
        let mut succ = vec![0u128; self.dimension()];
        for (e, m) in &self.maps {
            let (s, t) = (e.source(), e.target());
            for (r, row) in m.iter().enumerate() {
                for (c, x) in row.iter().enumerate() {
                    if *x != 0 {
                        succ[off[s - 1] + c] |= 1 << (off[t - 1] + r);
                    }
                }
            }
        }
        succ
    }

    /// Coordinate subspaces invariant under every arrow, found by brute
    /// force over all subsets of the basis.
    pub fn invariant_coordinate_subspaces(&self) -> Vec<Vec<usize>> {
        let succ = self.support_successors();
        let dim = succ.len();
        assert!(dim < 32, "brute force limited to small modules");
        let off = self.offsets();
        let mut out: Vec<Vec<usize>> = (0u64..1 << dim)
            .into_par_iter()
            .filter(|&s| {
                let s = s as u128;
                (0..dim).all(|k| s >> k & 1 == 0 || succ[k] & !s == 0)
            })
            .map(|s| {
                (0..self.spaces.len()).map(|v| (off[v]..off[v + 1]).filter(|&k| s >> k & 1 == 1).count()).collect()
            })
            .collect();
        out.sort();
        out
    }

    /// Coordinate-invariant subspaces by recursive enumeration.
    pub fn submodule_dimension_vectors(&self) -> Vec<Vec<usize>> {
        let succ = self.support_successors();
        let off = self.offsets();
        let mut out: Vec<Vec<usize>> = closed_subsets(&succ)
            .into_iter()
            .map(|s| {
                (0..self.spaces.len()).map(|v| (off[v]..off[v + 1]).filter(|&k| s >> k & 1 == 1).count()).collect()
            })
            .collect();
        out.sort();
        out
    }

    /// The dual module twisted back onto `Q_n`: transpose every map and
    /// relabel vertices `2j <-> 2j-1`. Under the relabeling the reversed
    /// `a_j, b_j` stay vertical, reversed `r_j` becomes `l_{j+1}` and
    /// reversed `l_j` becomes `r_{j-1}`.
    pub fn dual_twist(&self) -> ConcreteModule {
        let swap = |v: usize| if v.is_multiple_of(2) { v - 1 } else { v + 1 };
        let mut spaces = vec![Vec::new(); self.spaces.len()];
        for v in 1..=self.spaces.len() {
            spaces[swap(v) - 1] = self.spaces[v - 1].clone();
        }
        let mut maps = BTreeMap::new();
        for (e, m) in &self.maps {
            let rows = self.dim_at(e.target());
            let cols = self.dim_at(e.source());
            let image = match e.kind {
                ArrowKind::A | ArrowKind::B => *e,
                ArrowKind::R => Arrow::l(e.index + 1),
                ArrowKind::L => Arrow::r(e.index - 1),
            };
            debug_assert_eq!(image.source(), swap(e.target()));
            debug_assert_eq!(image.target(), swap(e.source()));
            maps.insert(image, transpose(m, rows, cols));
        }
        ConcreteModule { n: self.n, lambda: self.lambda, spaces, maps }
    }
}

/// `M_i` in the basis `t_l`. Vertical arrows raise `t` by one within a
/// level, `a_k` acting by `-q` and `b_k` by `p`; `r_k` sends `(2k)_l` to
/// `(2k+1)_l`; `l_k` sends `(2k)_l` to `(2k-3)_{l+1}`. Images outside the
/// basis are zero.
pub fn build_module_matrices(n: usize, i: usize, lambda: Lambda) -> Result<ConcreteModule, JacobianError> {
    check_module(n, i)?;
    let lambda = Lambda::new(lambda.p, lambda.q)?;
    let basis = module_basis(n, i);
    let mut spaces = vec![Vec::new(); 2 * n];
    for v in &basis {
        spaces[v.t - 1].push(*v);
    }
    let mut maps = BTreeMap::new();
    for e in arrows(n) {
        let src = &spaces[e.source() - 1];
        let tgt = &spaces[e.target() - 1];
        let mut m = vec![vec![0i64; src.len()]; tgt.len()];
        for (c, v) in src.iter().enumerate() {
            let (image, coeff) = match e.kind {
                ArrowKind::A => (BasisVertex { t: v.t + 1, level: v.level }, -lambda.q),
                ArrowKind::B => (BasisVertex { t: v.t + 1, level: v.level }, lambda.p),
                ArrowKind::R => (BasisVertex { t: v.t + 1, level: v.level }, 1),
                ArrowKind::L => (BasisVertex { t: v.t - 3, level: v.level + 1 }, 1),
            };
            if let Some(r) = tgt.iter().position(|w| *w == image) {
                m[r][c] = coeff;
            }
        }
        maps.insert(e, m);
    }
    Ok(ConcreteModule { n, lambda, spaces, maps })
}

/// The operator `E_t` on the space at vertex `t`, as a path.
pub fn shift_operator(t: usize, lambda: Lambda) -> Path {
    let vert = |k| if lambda.q != 0 { Arrow::a(k) } else { Arrow::b(k) };
    if t.is_multiple_of(2) {
        let j = t / 2;
        vec![Arrow::r(j), vert(j + 1), Arrow::l(j + 1), vert(j)]
    } else {
        let j = t.div_ceil(2);
        vec![vert(j), Arrow::r(j), vert(j + 1), Arrow::l(j + 1)]
    }
}

/// `nu_n(i) = n + 1 - i`.
pub fn nu(n: usize, i: usize) -> usize {
    n + 1 - i
}

fn y_sum(tr: &TodaRing, dims: &[Vec<usize>]) -> Result<LaurentPoly, JacobianError> {
    let mut acc = LaurentPoly::zero(&tr.y);
    for d in dims {
        let e: Vec<i64> = d.iter().map(|&x| x as i64).collect();
        acc = acc.add(&tr.y_monomial(&e)).map_err(TodaError::from)?;
    }
    Ok(acc)
}

/// `x_{2v-1} x_{2v}^{-1}` in the x-ring.
pub fn prefactor(tr: &TodaRing, v: usize) -> LaurentPoly {
    let mut e = vec![0; 2 * tr.n];
    e[2 * v - 2] = 1;
    e[2 * v - 1] = -1;
    LaurentPoly::monomial(&tr.x, e, BigInt::one())
}

/// `CC(M_i) = x_{2nu(i)-1} x_{2nu(i)}^{-1} sum_N y^{dim N}` in x-coordinates.
pub fn cluster_character(n: usize, i: usize) -> Result<LaurentPoly, JacobianError> {
    let g = build_coefficient_quiver(n, i)?;
    let tr = TodaRing::new(n)?;
    let sum = tr.to_x(&y_sum(&tr, &enumerate_submodules(&g))?)?;
    Ok(prefactor(&tr, nu(n, i)).mul(&sum).map_err(TodaError::from)?)
}

/// `x_{2k-1} x_{2k}^{-1} sum_e chi(Gr_e) y^e`, with the Grassmannians read
/// off the twisted dual of `M_k`; equals `CC(M_{nu(k)})`.
pub fn framed_generating_function(n: usize, k: usize) -> Result<LaurentPoly, JacobianError> {
    let m = build_module_matrices(n, k, Lambda { p: 1, q: 1 })?.dual_twist();
    let tr = TodaRing::new(n)?;
    let dims = m.submodule_dimension_vectors();
    let sum = tr.to_x(&y_sum(&tr, &dims)?)?;
    Ok(prefactor(&tr, k).mul(&sum).map_err(TodaError::from)?)
}

/// Check that no two submodules share a dimension vector, so every
/// quiver Grassmannian is a point or empty.
pub fn grassmannians_are_points(dims: &[Vec<usize>]) -> bool {
    let mut d = dims.to_vec();
    d.sort();
    d.windows(2).all(|w| w[0] != w[1])
}

/// Whether a matrix is zero.
pub fn is_zero_matrix(m: &IntMatrix) -> bool {
    m.iter().flatten().all(|x| x.is_zero())
}
