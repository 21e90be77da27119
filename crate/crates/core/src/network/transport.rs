//! The graph `N_W` carried by the unit circle, and parallel transport
//! around it by path lifting.
//!
//! Rows `0..N` of the annular graph are the lifts `D_r` of the circle, the
//! verticals are the lifted wall segments. The transport is written in an
//! edge gauge where a vertical of band `j` at angle `t` carries the product of
//! the band-`j` faces starting left of `t` (inverted for downward verticals)
//! and the start of row `r` carries `D_r`; every closed directed path then
//! collects exactly its homology class.

use num_rational::Ratio;
use serde::Serialize;

use super::homology::{class_monomial, homology_ring, homology_to_y, HomologyClass, QuadraticRefinement};
use super::walls::{toda_splitting, Root, SplittingData};
use super::NetworkError;
use crate::annular::{Angle, AnnularGraph, Dir, Vertical};
use crate::exactalg::{exterior_trace, LaurentPoly, PolyMatrix};
use crate::toda::TodaRing;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceClass {
    pub band: usize,
    /// Index of the vertical whose right-hand face this is.
    pub vertical: usize,
    pub class: HomologyClass,
    /// Vertex of `Q_{N-1}`.
    pub vertex: usize,
}

#[derive(Debug, Clone)]
pub struct NetworkGraph {
    pub n: usize,
    pub graph: AnnularGraph,
    pub faces: Vec<FaceClass>,
}

/// `N_W`: a `b`-type band has an up vertical at 1/5 and a down vertical at
/// 4/5, an `a`-type band a down vertical at 2/5 and an up vertical at 3/5
/// (each nudged right by `band / (5(N+1))`).
pub fn build_network_graph(s: &SplittingData) -> Result<NetworkGraph, NetworkError> {
    let n = s.n;
    let r = n - 1;
    let mut verts = Vec::with_capacity(2 * r);
    let mut faces = Vec::with_capacity(2 * r);
    for band in 1..=r {
        let cols = if s.in_a(band) { [(3, Dir::Up), (2, Dir::Down)] } else { [(1, Dir::Up), (4, Dir::Down)] };
        for (col, dir) in cols {
            let (class, vertex) = match dir {
                Dir::Up => (HomologyClass::b_cycle(r, band), 2 * band - 1),
                Dir::Down => (HomologyClass::c_cycle(r, band), 2 * band),
            };
            faces.push(FaceClass { band, vertical: verts.len(), class, vertex });
            // Offset by band so that slides never stack two verticals on a row.
            let m = (n + 1) as i64;
            let angle = Ratio::new(col * m + band as i64, 5 * m);
            verts.push(Vertical { band, angle, dir, face: format!("y{vertex}") });
        }
    }
    Ok(NetworkGraph { n, graph: AnnularGraph::new(n, verts)?, faces })
}

impl NetworkGraph {
    /// Class of the face to the right of vertical `v`.
    pub fn face_of(&self, v: usize) -> &FaceClass {
        self.faces.iter().find(|f| f.vertical == v).expect("every vertical bounds a face")
    }

    /// Sum of the classes of band-`band` faces starting strictly left of `t`.
    fn cumulative(&self, band: usize, t: Angle) -> HomologyClass {
        let verts = self.graph.verticals();
        self.faces
            .iter()
            .filter(|f| f.band == band && verts[f.vertical].angle < t)
            .fold(HomologyClass::zero(self.n - 1), |acc, f| acc.add(&f.class))
    }

    /// Gauge class carried by vertical `v`.
    pub fn vertical_class(&self, v: usize) -> HomologyClass {
        let vert = &self.graph.verticals()[v];
        let c = self.cumulative(vert.band, vert.angle);
        match vert.dir {
            Dir::Up => c,
            Dir::Down => c.neg(),
        }
    }

    /// Verticals in the order the leftward circle meets them.
    pub fn traversal(&self) -> Vec<usize> {
        let verts = self.graph.verticals();
        let mut order: Vec<usize> = (0..verts.len()).collect();
        order.sort_by(|&a, &b| verts[b].angle.cmp(&verts[a].angle));
        order
    }

    /// Row-basis transfer matrix: entry `(r, s)` sums the gauge weights of
    /// directed paths once around from row `s` to row `r`.
    pub fn transfer_matrix(&self) -> Result<PolyMatrix, NetworkError> {
        let r = self.n - 1;
        let ring = homology_ring(r);
        let diag = (0..self.n).map(|row| class_monomial(&ring, &HomologyClass::d_cycle(r, row))).collect();
        let mut m = PolyMatrix::diagonal(&ring, diag);
        for v in self.traversal() {
            let vert = &self.graph.verticals()[v];
            let (from, to) = match vert.dir {
                Dir::Up => (vert.band, vert.band - 1),
                Dir::Down => (vert.band - 1, vert.band),
            };
            let mut e = PolyMatrix::identity(&ring, self.n);
            e.set(to, from, class_monomial(&ring, &self.vertical_class(v)));
            m = e.mul(&m)?;
        }
        Ok(m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Crossing {
    /// A wall crossing: transport picks up the soliton from sheet `from` to
    /// sheet `to`.
    Wall { root: Root, from: usize, to: usize, class: HomologyClass },
    /// A branch cut relabeling sheets by `perm`.
    Cut { perm: Vec<usize> },
}

/// Events met by the clockwise unit circle from the basepoint `1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingSequence {
    pub n: usize,
    /// Arc-lift class on each sheet, indexed by sheet.
    pub arcs: Vec<HomologyClass>,
    pub events: Vec<Crossing>,
}

impl CrossingSequence {
    pub fn wall_count(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, Crossing::Wall { .. })).count()
    }
}

/// Walls near `i` are met on sheets `sigma`, those near `-i` on sheets
/// `tau_a sigma`, with a series of `tau_a` cuts before and after the latter.
pub fn crossing_sequence(s: &SplittingData) -> Result<CrossingSequence, NetworkError> {
    let g = build_network_graph(s)?;
    let r = s.n - 1;
    let mut arcs = vec![HomologyClass::zero(r); s.n];
    for row in 0..s.n {
        arcs[s.sigma[row]] = HomologyClass::d_cycle(r, row);
    }
    let half = Ratio::new(1, 2);
    let mut events = Vec::new();
    let mut left = false;
    for v in g.traversal() {
        let vert = &g.graph.verticals()[v];
        if !left && vert.angle < half {
            events.push(Crossing::Cut { perm: s.tau_a.clone() });
            left = true;
        }
        let sheet = |row: usize| if left { s.tau_a[s.sigma[row]] } else { s.sigma[row] };
        let (from, to) = match vert.dir {
            Dir::Up => (sheet(vert.band), sheet(vert.band - 1)),
            Dir::Down => (sheet(vert.band - 1), sheet(vert.band)),
        };
        events.push(Crossing::Wall { root: (from, to), from, to, class: g.vertical_class(v) });
    }
    events.push(Crossing::Cut { perm: s.tau_a.clone() });
    Ok(CrossingSequence { n: s.n, arcs, events })
}

/// Parallel transport around the clockwise unit circle in the sheet basis,
/// over the homology ring. Every closed class on the diagonal is checked to
/// have spin-structure value `+1`.
pub fn lift_path(s: &SplittingData) -> Result<PolyMatrix, NetworkError> {
    let seq = crossing_sequence(s)?;
    let r = s.n - 1;
    let ring = homology_ring(r);
    let diag = seq.arcs.iter().map(|c| class_monomial(&ring, c)).collect();
    let mut m = PolyMatrix::diagonal(&ring, diag);
    for ev in &seq.events {
        let step = match ev {
            Crossing::Wall { from, to, class, .. } => {
                let mut e = PolyMatrix::identity(&ring, s.n);
                e.set(*to, *from, class_monomial(&ring, class));
                e
            }
            Crossing::Cut { perm } => permutation_matrix(&ring, perm),
        };
        m = step.mul(&m)?;
    }
    let spin = QuadraticRefinement::standard(r);
    for i in 0..s.n {
        for (e, _) in m.get(i, i).terms() {
            let c = HomologyClass::from_exponents(e);
            if spin.eval(&c) != 1 {
                return Err(NetworkError::Refinement(c.to_string()));
            }
        }
    }
    Ok(m)
}

/// Matrix sending basis vector `e_s` to `e_{perm[s]}`.
pub fn permutation_matrix(ring: &std::sync::Arc<crate::exactalg::Ring>, perm: &[usize]) -> PolyMatrix {
    let mut p = PolyMatrix::zeros(ring, perm.len());
    for (s, &t) in perm.iter().enumerate() {
        p.set(t, s, LaurentPoly::one(ring));
    }
    p
}

/// Homology-ring polynomial to the y-ring of rank `N - 1`.
pub fn to_y(n: usize, p: &LaurentPoly) -> Result<LaurentPoly, NetworkError> {
    let tr = TodaRing::new(n - 1)?;
    Ok(p.substitute(&homology_to_y(n - 1, &tr.y))?)
}

/// `tr_{V_k}` of the transport for a given splitting, in x-coordinates.
pub fn holonomy_trace_for(s: &SplittingData, k: usize) -> Result<LaurentPoly, NetworkError> {
    if k < 1 || k > s.n {
        return Err(NetworkError::IndexOutOfRange { index: k, max: s.n });
    }
    let h = exterior_trace(&lift_path(s)?, k)?;
    let tr = TodaRing::new(s.n - 1)?;
    let y = to_y(s.n, &h)?;
    Ok(tr.to_x(&y)?)
}

pub fn holonomy_trace(n: usize, k: usize, theta: f64) -> Result<LaurentPoly, NetworkError> {
    holonomy_trace_for(&toda_splitting(n, theta)?, k)
}
