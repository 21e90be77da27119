//! Directed graphs on the annulus: leftward row cycles joined by vertical
//! edges, their closed paths, nonintersecting tuples, weighted path sums and
//! the slide move.
//!
//! Rows are numbered `0` (top) to `r-1` (bottom). Band `j` (`1 <= j < r`) is
//! the strip between rows `j-1` and `j`. Angles live in `[0, 1)` and rows are
//! traversed in the direction of decreasing angle. Every vertical names the
//! face lying to its right (increasing angle) up to the next vertical of the
//! same band.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactalg::{AlgebraError, LaurentPoly};
use crate::toda::TodaRing;

pub type Angle = Ratio<i64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnnularError {
    #[error("malformed graph: {0}")]
    Malformed(String),
    #[error("verticals {0} and {1} are not in a movable configuration")]
    NotMovable(usize, usize),
    #[error("tuple size {k} out of range 1..={rows}")]
    TupleSize { k: usize, rows: usize },
    #[error("closed path winds {0} times")]
    Winding(Angle),
    #[error("face label `{0}` is not a ring variable")]
    UnknownLabel(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    /// From row `band` up to row `band - 1`.
    Up,
    /// From row `band - 1` down to row `band`.
    Down,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertical {
    pub band: usize,
    pub angle: Angle,
    pub dir: Dir,
    /// Label of the face to the right of this vertical.
    pub face: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnularGraph {
    rows: usize,
    verticals: Vec<Vertical>,
    // (row, angle, vertex id) sorted by row then angle.
    row_vertices: Vec<Vec<(Angle, usize)>>,
}

/// A stretch of a row traversed leftward from `from` to `to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub row: usize,
    pub from: Angle,
    pub to: Angle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedPath {
    /// Vertex ids in traversal order. Vertex `2v` is the top end of
    /// vertical `v`, `2v + 1` its bottom end.
    pub vertices: Vec<usize>,
    pub segments: Vec<Segment>,
    mask: u128,
}

/// A bounded face: the region of `band` right of vertical `vertical`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub vertical: usize,
    pub band: usize,
    pub start: Angle,
    pub end: Angle,
    pub label: String,
}

fn frac(a: Angle) -> Angle {
    a - Angle::from_integer(a.floor().to_integer())
}

/// Leftward arc length from `b` to `c`; a full turn when they coincide.
fn left_arc(b: Angle, c: Angle) -> Angle {
    let d = frac(b - c);
    if d.is_zero() {
        Angle::one()
    } else {
        d
    }
}

/// Whether `a` lies in the half-open leftward sweep `[to, from)`.
fn in_sweep(a: Angle, from: Angle, to: Angle) -> bool {
    if from == to {
        return true;
    }
    frac(a - to) < left_arc(from, to)
}

impl AnnularGraph {
    pub fn new(rows: usize, verticals: Vec<Vertical>) -> Result<Self, AnnularError> {
        if rows == 0 {
            return Err(AnnularError::Malformed("no rows".into()));
        }
        if 2 * verticals.len() > 128 {
            return Err(AnnularError::Malformed("too many verticals".into()));
        }
        let mut row_vertices = vec![Vec::new(); rows];
        for (v, vert) in verticals.iter().enumerate() {
            if vert.band == 0 || vert.band >= rows {
                return Err(AnnularError::Malformed(format!("band {} out of range", vert.band)));
            }
            if vert.angle < Angle::zero() || vert.angle >= Angle::one() {
                return Err(AnnularError::Malformed("angle outside [0,1)".into()));
            }
            row_vertices[vert.band - 1].push((vert.angle, 2 * v));
            row_vertices[vert.band].push((vert.angle, 2 * v + 1));
        }
        for (r, rv) in row_vertices.iter_mut().enumerate() {
            rv.sort();
            if rv.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(AnnularError::Malformed(format!("two verticals meet row {r} at one angle")));
            }
            if rv.is_empty() && rows > 1 {
                return Err(AnnularError::Malformed(format!("row {r} has no vertices")));
            }
        }
        Ok(AnnularGraph { rows, verticals, row_vertices })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn verticals(&self) -> &[Vertical] {
        &self.verticals
    }

    fn vertex_row(&self, id: usize) -> usize {
        let b = self.verticals[id / 2].band;
        if id.is_multiple_of(2) {
            b - 1
        } else {
            b
        }
    }

    fn vertex_angle(&self, id: usize) -> Angle {
        self.verticals[id / 2].angle
    }

    /// Next vertex along the row, moving leftward.
    fn row_successor(&self, id: usize) -> usize {
        let rv = &self.row_vertices[self.vertex_row(id)];
        let pos = rv.iter().position(|&(_, x)| x == id).expect("vertex on row");
        rv[(pos + rv.len() - 1) % rv.len()].1
    }

    /// Other end of the vertical, if the vertical leaves from `id`.
    fn vertical_successor(&self, id: usize) -> Option<usize> {
        let top = id.is_multiple_of(2);
        match (self.verticals[id / 2].dir, top) {
            (Dir::Down, true) => Some(id + 1),
            (Dir::Up, false) => Some(id - 1),
            _ => None,
        }
    }

    fn successors(&self, id: usize) -> Vec<usize> {
        let mut s = vec![self.row_successor(id)];
        s.extend(self.vertical_successor(id));
        s
    }

    pub fn faces(&self) -> Vec<Face> {
        self.verticals
            .iter()
            .enumerate()
            .map(|(v, vert)| {
                let mut best: Option<Angle> = None;
                for w in self.verticals.iter().filter(|w| w.band == vert.band) {
                    let d = left_arc(w.angle, vert.angle);
                    if best.is_none_or(|b| d < b) {
                        best = Some(d);
                    }
                }
                let end = frac(vert.angle + best.unwrap_or_else(Angle::one));
                Face { vertical: v, band: vert.band, start: vert.angle, end, label: vert.face.clone() }
            })
            .collect()
    }

    fn path_from_cycle(&self, cycle: Vec<usize>) -> Result<ClosedPath, AnnularError> {
        let mut segments = Vec::new();
        let mut mask = 0u128;
        let mut turn = Angle::zero();
        let len = cycle.len();
        for i in 0..len {
            let a = cycle[i];
            let b = cycle[(i + 1) % len];
            mask |= 1u128 << a;
            let same_vertical = a / 2 == b / 2 && a != b;
            if !same_vertical {
                let (from, to) = (self.vertex_angle(a), self.vertex_angle(b));
                turn += left_arc(from, to);
                segments.push(Segment { row: self.vertex_row(a), from, to });
            }
        }
        if turn != Angle::one() {
            return Err(AnnularError::Winding(turn));
        }
        Ok(ClosedPath { vertices: cycle, segments, mask })
    }

    /// All simple directed cycles; each must wind once around the annulus.
    pub fn enumerate_closed_paths(&self) -> Result<Vec<ClosedPath>, AnnularError> {
        let nv = 2 * self.verticals.len();
        let mut cycles = Vec::new();
        for s in 0..nv {
            let mut stack = vec![s];
            let mut on = vec![false; nv];
            on[s] = true;
            self.cycle_dfs(s, &mut stack, &mut on, &mut cycles);
        }
        cycles.into_iter().map(|c| self.path_from_cycle(c)).collect()
    }

    fn cycle_dfs(&self, s: usize, stack: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let cur = *stack.last().unwrap();
        for nxt in self.successors(cur) {
            if nxt == s {
                out.push(stack.clone());
            } else if nxt > s && !on[nxt] {
                on[nxt] = true;
                stack.push(nxt);
                self.cycle_dfs(s, stack, on, out);
                stack.pop();
                on[nxt] = false;
            }
        }
    }

    /// Row the path occupies immediately to the right of angle `a`.
    pub fn row_right_of(&self, p: &ClosedPath, a: Angle) -> usize {
        p.segments
            .iter()
            .find(|s| in_sweep(a, s.from, s.to))
            .map(|s| s.row)
            .expect("a winding-one path covers every angle")
    }

    /// Faces lying between `p` and the bottom row.
    pub fn enclosed_faces(&self, p: &ClosedPath) -> Vec<Face> {
        self.faces().into_iter().filter(|f| self.row_right_of(p, f.start) < f.band).collect()
    }

    /// All sets of `k` pairwise vertex-disjoint closed paths, as index lists
    /// into `paths`.
    pub fn nonintersecting_tuples(&self, paths: &[ClosedPath], k: usize) -> Result<Vec<Vec<usize>>, AnnularError> {
        if k == 0 || k > self.rows {
            return Err(AnnularError::TupleSize { k, rows: self.rows });
        }
        fn rec(
            paths: &[ClosedPath],
            k: usize,
            start: usize,
            used: u128,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..paths.len() {
                if paths[i].mask & used == 0 {
                    cur.push(i);
                    rec(paths, k, i + 1, used | paths[i].mask, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(paths, k, 0, 0, &mut Vec::new(), &mut out);
        Ok(out)
    }

    /// `prod_p base * prod_{f enclosed by p} y_f`, face labels read as
    /// variables of `base`'s ring.
    pub fn tuple_weight(&self, paths: &[&ClosedPath], base: &LaurentPoly) -> Result<LaurentPoly, AnnularError> {
        let ring = base.ring();
        let mut w = LaurentPoly::one(ring);
        for p in paths {
            w = w.mul(base)?;
            for f in self.enclosed_faces(p) {
                let v =
                    LaurentPoly::var_named(ring, &f.label).map_err(|_| AnnularError::UnknownLabel(f.label.clone()))?;
                w = w.mul(&v)?;
            }
        }
        Ok(w)
    }

    /// Sum of tuple weights over all nonintersecting `k`-tuples.
    pub fn generating_function(&self, k: usize, base: &LaurentPoly) -> Result<LaurentPoly, AnnularError> {
        let paths = self.enumerate_closed_paths()?;
        let mut acc = LaurentPoly::zero(base.ring());
        for t in self.nonintersecting_tuples(&paths, k)? {
            let ps: Vec<&ClosedPath> = t.iter().map(|&i| &paths[i]).collect();
            acc = acc.add(&self.tuple_weight(&ps, base)?)?;
        }
        Ok(acc)
    }

    /// Whether `u` (band `j`) and `v` (band `j+1`) may slide past each
    /// other along row `j`.
    pub fn can_move(&self, u: usize, v: usize) -> bool {
        self.slide_plan(u, v).is_some()
    }

    /// Which vertical crosses the other, and its new angle. The pair must
    /// both leave or both arrive at the shared row `j`; the swept arc must be
    /// free of other verticals of bands `j`, `j+1`, and of band `j-1` (when
    /// `u` crosses) or band `j+2` (when `v` crosses).
    fn slide_plan(&self, u: usize, v: usize) -> Option<(usize, Angle)> {
        let (a, b) = (self.verticals.get(u)?, self.verticals.get(v)?);
        if u == v || b.band != a.band + 1 {
            return None;
        }
        let both_leave = a.dir == Dir::Up && b.dir == Dir::Down;
        let both_arrive = a.dir == Dir::Down && b.dir == Dir::Up;
        if !(both_leave || both_arrive) {
            return None;
        }
        let j = a.band;
        let (lo, hi) = if a.angle < b.angle { (a.angle, b.angle) } else { (b.angle, a.angle) };
        let inside = |x: Angle| lo < x && x < hi;
        let outside = |x: Angle| x < lo || x > hi;
        let clear = |side: &dyn Fn(Angle) -> bool, band: usize| {
            !self.verticals.iter().enumerate().any(|(w, vw)| w != u && w != v && vw.band == band && side(vw.angle))
        };
        for (side, forward) in [(&inside as &dyn Fn(Angle) -> bool, true), (&outside, false)] {
            if !clear(side, j) || !clear(side, j + 1) {
                continue;
            }
            // Travelling from a to b through this arc increases the angle iff
            // `up` holds.
            let up = (a.angle < b.angle) == forward;
            if clear(side, j - 1) {
                return Some((u, self.just_past(b.angle, up)));
            }
            if clear(side, j + 2) {
                return Some((v, self.just_past(a.angle, !up)));
            }
        }
        None
    }

    /// An angle beyond `x` in the given direction, before any other vertical.
    fn just_past(&self, x: Angle, up: bool) -> Angle {
        let gap = self
            .verticals
            .iter()
            .map(|w| if up { frac(w.angle - x) } else { frac(x - w.angle) })
            .filter(|d| !d.is_zero())
            .min()
            .unwrap_or_else(Angle::one);
        let half = gap / Angle::from_integer(2);
        frac(if up { x + half } else { x - half })
    }

    pub fn movable_sites(&self) -> Vec<(usize, usize)> {
        let n = self.verticals.len();
        (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|&(u, v)| self.can_move(u, v)).collect()
    }

    /// Slide vertical `u` (band `j`) past vertical `v` (band `j+1`).
    pub fn apply_move(&self, u: usize, v: usize) -> Result<Self, AnnularError> {
        let (mover, angle) = self.slide_plan(u, v).ok_or(AnnularError::NotMovable(u, v))?;
        let mut verts = self.verticals.clone();
        verts[mover].angle = angle;
        AnnularGraph::new(self.rows, verts)
    }

    /// Cyclic word of `(band, direction)` letters by increasing angle,
    /// canonicalized over rotation and commutation of letters whose bands
    /// are not adjacent.
    pub fn normal_form(&self) -> Vec<(usize, Dir)> {
        let mut order: Vec<&Vertical> = self.verticals.iter().collect();
        order.sort_by(|a, b| a.angle.cmp(&b.angle).then(a.band.cmp(&b.band)));
        let word: Vec<(usize, Dir)> = order.iter().map(|v| (v.band, v.dir)).collect();
        canonical_word(word)
    }

    /// Shortest sequence of moves (at most `max_moves`) after which the
    /// normal form equals `target`.
    pub fn moves_to(&self, target: &[(usize, Dir)], max_moves: usize) -> Option<Vec<(usize, usize)>> {
        let mut seen: HashSet<Vec<(usize, Dir)>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.normal_form());
        queue.push_back((self.clone(), Vec::new()));
        while let Some((g, path)) = queue.pop_front() {
            if g.normal_form() == target {
                return Some(path);
            }
            if path.len() == max_moves {
                continue;
            }
            for (u, v) in g.movable_sites() {
                let next = g.apply_move(u, v).expect("movable site");
                if seen.insert(next.normal_form()) {
                    let mut p = path.clone();
                    p.push((u, v));
                    queue.push_back((next, p));
                }
            }
        }
        None
    }

    /// Graphviz rendering: row edges, vertical edges and face labels.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph {name} {{\n");
        for (r, rv) in self.row_vertices.iter().enumerate() {
            let _ = writeln!(s, "  subgraph cluster_row{r} {{\n    label=\"row {r}\";");
            for (a, id) in rv {
                let _ = writeln!(s, "    v{id} [label=\"{}\"];", a);
            }
            for (_, id) in rv {
                let _ = writeln!(s, "    v{id} -> v{} [kind=row];", self.row_successor(*id));
            }
            s.push_str("  }\n");
        }
        for (v, vert) in self.verticals.iter().enumerate() {
            let (a, b) = match vert.dir {
                Dir::Up => (2 * v + 1, 2 * v),
                Dir::Down => (2 * v, 2 * v + 1),
            };
            let _ = writeln!(s, "  v{a} -> v{b} [kind=vertical, face=\"{}\"];", vert.face);
        }
        s.push_str("}\n");
        s
    }
}

fn canonical_word(word: Vec<(usize, Dir)>) -> Vec<(usize, Dir)> {
    let n = word.len();
    if n == 0 {
        return word;
    }
    let mut seen: HashSet<Vec<(usize, Dir)>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.clone());
    queue.push_back(word);
    let mut best: Option<Vec<(usize, Dir)>> = None;
    while let Some(w) = queue.pop_front() {
        if best.as_ref().is_none_or(|b| w < *b) {
            best = Some(w.clone());
        }
        let mut next = Vec::with_capacity(n + 1);
        let mut rot = w.clone();
        rot.rotate_left(1);
        next.push(rot);
        for i in 0..n {
            let j = (i + 1) % n;
            if i != j && w[i].0.abs_diff(w[j].0) >= 2 {
                let mut s = w.clone();
                s.swap(i, j);
                next.push(s);
            }
        }
        for s in next {
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    best.unwrap()
}

/// The graph for the Coxeter double word of rank `n`.
pub fn build_ni(n: usize) -> Result<AnnularGraph, AnnularError> {
    if n < 1 {
        return Err(AnnularError::Malformed("rank must be at least 1".into()));
    }
    let d = (2 * n + 1) as i64;
    let mut verts = Vec::with_capacity(2 * n);
    for k in 1..=n {
        verts.push(Vertical { band: k, angle: Angle::new(k as i64, d), dir: Dir::Up, face: format!("y{}", 2 * k - 1) });
        verts.push(Vertical {
            band: k,
            angle: Angle::new((n + k) as i64, d),
            dir: Dir::Down,
            face: format!("y{}", 2 * k),
        });
    }
    AnnularGraph::new(n + 1, verts)
}

/// `H_k` as a weighted sum over nonintersecting `k`-tuples of closed paths,
/// in y-coordinates.
pub fn hamiltonian_paths(n: usize, k: usize) -> Result<LaurentPoly, AnnularError> {
    let tr = TodaRing::new(n).map_err(|e| AnnularError::Malformed(e.to_string()))?;
    if k < 1 || k > n {
        return Err(AnnularError::TupleSize { k, rows: n });
    }
    build_ni(n)?.generating_function(k, &tr.base_weight())
}

/// All `i`-tuples `m_0 > m_1 > ...` with `2(i-l)-1 <= m_l <= 2(n-l)+1` and
/// gaps of at least 3 after an even entry, 2 after an odd one.
pub fn mtuple_oracle(n: usize, i: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let l = cur.len();
        if l == i {
            out.push(cur.clone());
            return;
        }
        let lo = 2 * (i - l) - 1;
        let mut hi = 2 * (n - l) + 1;
        if let Some(&prev) = cur.last() {
            let gap = if prev % 2 == 0 { 3 } else { 2 };
            if prev < gap {
                return;
            }
            hi = hi.min(prev - gap);
        }
        for m in lo..=hi {
            cur.push(m);
            rec(n, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if i >= 1 && i <= n {
        rec(n, i, &mut Vec::new(), &mut out);
    }
    out
}

/// Exponent vector of `prod_l y_{m_l} y_{m_l + 1} ... y_{2(n-l)}`.
pub fn mtuple_exponent(n: usize, m: &[usize]) -> Vec<i64> {
    let mut e = vec![0; 2 * n];
    for (l, &ml) in m.iter().enumerate() {
        for v in ml..=2 * (n - l) {
            e[v - 1] += 1;
        }
    }
    e
}

/// Exponent vectors of the tuple weights relative to the minimal tuple,
/// sorted. Used to compare path sums with the m-tuple enumeration.
pub fn relative_exponents(n: usize, k: usize) -> Result<Vec<Vec<i64>>, AnnularError> {
    let tr = TodaRing::new(n).map_err(|e| AnnularError::Malformed(e.to_string()))?;
    let g = build_ni(n)?;
    let paths = g.enumerate_closed_paths()?;
    let one = LaurentPoly::one(&tr.y);
    let mut all: Vec<Vec<i64>> = Vec::new();
    for t in g.nonintersecting_tuples(&paths, k)? {
        let ps: Vec<&ClosedPath> = t.iter().map(|&i| &paths[i]).collect();
        let w = g.tuple_weight(&ps, &one)?;
        let (e, _) = w.terms().next().expect("monomial");
        all.push(e.clone());
    }
    let min = all.iter().min_by_key(|e| e.iter().sum::<i64>()).cloned().unwrap_or_default();
    let d = (n + 1) as i64;
    let mut rel: Vec<Vec<i64>> = all.iter().map(|e| e.iter().zip(&min).map(|(a, b)| (a - b) / d).collect()).collect();
    rel.sort();
    Ok(rel)
}

/// The minimal tuple's weight as a set of monomial exponents (diagnostic).
pub fn distinct_weights(g: &AnnularGraph, k: usize, base: &LaurentPoly) -> Result<BTreeSet<Vec<i64>>, AnnularError> {
    let gf = g.generating_function(k, base)?;
    Ok(gf.terms().map(|(e, _)| e.clone()).collect())
}

/// Monomial `y^e` in integral exponents for rank `n`.
pub fn y_power(tr: &TodaRing, e: &[i64]) -> LaurentPoly {
    let d = (tr.n + 1) as i64;
    LaurentPoly::monomial(&tr.y, e.iter().map(|v| v * d).collect(), BigInt::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toda::{hamiltonian_matrix, Coords};

    #[test]
    fn shapes() {
        for n in 1..=4 {
            let g = build_ni(n).unwrap();
            assert_eq!(g.rows(), n + 1);
            assert_eq!(g.faces().len(), 2 * n);
        }
    }

    #[test]
    fn closed_path_counts() {
        for n in 1..=6 {
            let g = build_ni(n).unwrap();
            assert_eq!(g.enumerate_closed_paths().unwrap().len(), 2 * n + 1, "n={n}");
        }
    }

    #[test]
    fn rank_one_weights() {
        let tr = TodaRing::new(1).unwrap();
        let g = build_ni(1).unwrap();
        let paths = g.enumerate_closed_paths().unwrap();
        let base = tr.base_weight();
        let bottom = paths.iter().find(|p| p.segments.iter().all(|s| s.row == 1)).unwrap();
        assert_eq!(g.tuple_weight(&[bottom], &base).unwrap(), base);
        let top = paths.iter().find(|p| p.segments.iter().all(|s| s.row == 0)).unwrap();
        let w = g.tuple_weight(&[top], &base).unwrap();
        assert_eq!(w, LaurentPoly::monomial(&tr.y, vec![1, 1], BigInt::one()));
    }

    #[test]
    fn tuple_counts() {
        let g = build_ni(2).unwrap();
        let p = g.enumerate_closed_paths().unwrap();
        assert_eq!(g.nonintersecting_tuples(&p, 2).unwrap().len(), 5);
        assert_eq!(g.nonintersecting_tuples(&p, 3).unwrap().len(), 1);
        let g5 = build_ni(5).unwrap();
        let p5 = g5.enumerate_closed_paths().unwrap();
        // Agrees with the matrix H_3 of rank 5, which has 63 monomials.
        assert_eq!(g5.nonintersecting_tuples(&p5, 3).unwrap().len(), 63);
    }

    #[test]
    fn paths_match_matrix() {
        for n in 1..=3 {
            for k in 1..=n {
                assert_eq!(
                    hamiltonian_paths(n, k).unwrap(),
                    hamiltonian_matrix(n, k, Coords::Y).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn oracle_small_cases() {
        assert_eq!(mtuple_oracle(2, 1), vec![vec![1], vec![2], vec![3], vec![4], vec![5]]);
        assert_eq!(mtuple_oracle(2, 2).len(), 5);
        assert_eq!(mtuple_oracle(5, 3).len(), 63);
        assert_eq!(mtuple_oracle(6, 2).len(), 61);
    }

    #[test]
    fn weights_biject_with_mtuples() {
        for n in 1..=4 {
            for k in 1..=n {
                let mut want: Vec<Vec<i64>> = mtuple_oracle(n, k).iter().map(|m| mtuple_exponent(n, m)).collect();
                want.sort();
                assert_eq!(relative_exponents(n, k).unwrap(), want, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn move_is_involutive_and_preserves_sums() {
        let tr = TodaRing::new(2).unwrap();
        let g = build_ni(2).unwrap();
        let sites = g.movable_sites();
        assert!(!sites.is_empty());
        for (u, v) in sites {
            let h = g.apply_move(u, v).unwrap();
            assert_ne!(h.normal_form(), g.normal_form());
            assert_eq!(h.apply_move(u, v).unwrap().normal_form(), g.normal_form());
            for k in 1..=2 {
                assert_eq!(
                    h.generating_function(k, &tr.base_weight()).unwrap(),
                    g.generating_function(k, &tr.base_weight()).unwrap()
                );
            }
        }
    }

    #[test]
    fn normal_form_ignores_rotation() {
        let g = build_ni(3).unwrap();
        let mut verts = g.verticals().to_vec();
        for v in &mut verts {
            v.angle = frac(v.angle + Angle::new(1, 2));
        }
        let h = AnnularGraph::new(4, verts).unwrap();
        assert_eq!(g.normal_form(), h.normal_form());
    }
}
