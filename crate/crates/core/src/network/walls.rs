//! The local model `W_N` at an `N`-cyclic branch point, its splittings, and
//! the splittings of the Toda network at the branch point `z = i`.
//!
//! Angles of the local model are exact integers in units of
//! `pi / (2N(N+1))`, so a full turn is `4N(N+1)`.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use serde::Serialize;

use super::NetworkError;

/// Ordered pair of sheets, read as a root of `SL_N`.
pub type Root = (usize, usize);

pub fn full_turn(n: usize) -> i64 {
    4 * (n * (n + 1)) as i64
}

/// `arg(w^i - w^j)` with `w = exp(2 pi i / N)`, in units of the model.
pub fn arg_omega(n: usize, i: usize, j: usize) -> i64 {
    let (nn, t) = (n as i64, full_turn(n));
    let quarter = nn * (nn + 1);
    let sign = if i > j { 1 } else { -1 };
    (2 * (nn + 1) * (i + j) as i64 + sign * quarter).rem_euclid(t)
}

/// `arg(w^i - w^j)` in radians.
pub fn arg_omega_f64(n: usize, i: usize, j: usize) -> f64 {
    let s = if i > j { 0.5 } else { -0.5 };
    PI * (i + j) as f64 / n as f64 + s * PI
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Wall {
    /// Outwardly oriented label.
    pub label: Root,
    /// Phase in `[0, full_turn)`.
    pub phase: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WallModel {
    pub n: usize,
    /// Direction of the branch cut, in `(0, full_turn]`.
    pub cut: i64,
    /// Sorted by phase, then label.
    pub walls: Vec<Wall>,
}

impl WallModel {
    /// Walls of `W_N` with sheets labeled relative to a cut at `cut`.
    pub fn with_cut(n: usize, cut: i64) -> Result<Self, NetworkError> {
        if n < 2 {
            return Err(NetworkError::Rank(n));
        }
        let t = full_turn(n);
        let cut = (cut - 1).rem_euclid(t) + 1;
        let nn = n as i64;
        let step = 4 * nn * nn;
        let mut walls = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                // (N+1) p + N A = 0 mod N * full_turn, p in (cut - t, cut].
                let a = arg_omega(n, i, j);
                let p0 = (-nn * a / (nn + 1)).rem_euclid(step);
                let lo = cut - t;
                let mut p = p0 + ((lo - p0).div_euclid(step) + 1) * step;
                while p <= cut {
                    if p == cut {
                        return Err(NetworkError::Degenerate(format!("cut {cut} lies on a wall")));
                    }
                    walls.push(Wall { label: (i, j), phase: p.rem_euclid(t) });
                    p += step;
                }
            }
        }
        walls.sort_by_key(|w| (w.phase, w.label));
        Ok(WallModel { n, cut, walls })
    }

    /// Distinct wall phases in increasing order.
    pub fn multiwalls(&self) -> Vec<(i64, Vec<Root>)> {
        let mut out: Vec<(i64, Vec<Root>)> = Vec::new();
        for w in &self.walls {
            match out.last_mut() {
                Some((p, labels)) if *p == w.phase => labels.push(w.label),
                _ => out.push((w.phase, vec![w.label])),
            }
        }
        out
    }

    /// Wall phase in degrees (for display).
    pub fn degrees(&self, phase: i64) -> f64 {
        360.0 * phase as f64 / full_turn(self.n) as f64
    }
}

/// `W_N` with the cut along the positive imaginary axis, which bisects the
/// arc between two adjacent multiwalls for every `N > 2`.
pub fn standard_network(n: usize) -> Result<WallModel, NetworkError> {
    WallModel::with_cut(n, (n * (n + 1)) as i64)
}

/// Root data of a splitting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplittingData {
    pub n: usize,
    pub phi: BTreeSet<Root>,
    pub delta: BTreeSet<Root>,
    pub delta_a: BTreeSet<Root>,
    pub delta_b: BTreeSet<Root>,
    /// `delta = {sigma_0 sigma_1, ..., sigma_{N-2} sigma_{N-1}}`.
    pub sigma: Vec<usize>,
    /// Product of the reflections in `delta_a`.
    pub tau_a: Vec<usize>,
    pub delta_p: BTreeSet<Root>,
    pub delta_p_a: BTreeSet<Root>,
    pub delta_p_b: BTreeSet<Root>,
    pub phi_p: BTreeSet<Root>,
}

impl SplittingData {
    /// Completes the data from the simple roots and their `a`/`b` split.
    pub fn from_simple(n: usize, delta_a: BTreeSet<Root>, delta_b: BTreeSet<Root>) -> Result<Self, NetworkError> {
        let delta: BTreeSet<Root> = delta_a.union(&delta_b).copied().collect();
        if delta.len() != n - 1 || delta_a.len() + delta_b.len() != n - 1 {
            return Err(NetworkError::NotAChain(format!("{delta:?}")));
        }
        let sigma = chain(n, &delta)?;
        let mut tau_a: Vec<usize> = (0..n).collect();
        for &(i, j) in &delta_a {
            tau_a.swap(i, j);
        }
        let flip =
            |set: &BTreeSet<Root>| -> BTreeSet<Root> { set.iter().map(|&(i, j)| (tau_a[j], tau_a[i])).collect() };
        let delta_p = flip(&delta);
        let delta_p_a = flip(&delta_a);
        let delta_p_b = flip(&delta_b);
        let sigma_p = chain(n, &delta_p)?;
        Ok(SplittingData {
            n,
            phi: positive_roots(&sigma),
            delta,
            delta_a,
            delta_b,
            phi_p: positive_roots(&sigma_p),
            sigma,
            tau_a,
            delta_p,
            delta_p_a,
            delta_p_b,
        })
    }

    /// `alpha_k = sigma_{k-1} sigma_k`, `1 <= k < N`.
    pub fn alpha(&self, k: usize) -> Root {
        (self.sigma[k - 1], self.sigma[k])
    }

    /// `alpha'_k = tau_a(sigma_k sigma_{k-1})`.
    pub fn alpha_p(&self, k: usize) -> Root {
        (self.tau_a[self.sigma[k]], self.tau_a[self.sigma[k - 1]])
    }

    pub fn in_a(&self, k: usize) -> bool {
        self.delta_a.contains(&self.alpha(k))
    }

    /// Compact identifier: which simple roots are of type `a`, plus sigma.
    pub fn fingerprint(&self) -> String {
        let pattern: String = (1..self.n).map(|k| if self.in_a(k) { 'a' } else { 'b' }).collect();
        let sigma: Vec<String> = self.sigma.iter().map(|s| s.to_string()).collect();
        format!("{pattern}/{}", sigma.join(""))
    }
}

/// The ordering of sheets along the simple-root chain.
fn chain(n: usize, delta: &BTreeSet<Root>) -> Result<Vec<usize>, NetworkError> {
    let bad = || NetworkError::NotAChain(format!("{delta:?}"));
    let heads: BTreeSet<usize> = delta.iter().map(|r| r.0).collect();
    let tails: BTreeSet<usize> = delta.iter().map(|r| r.1).collect();
    let mut cur = *heads.difference(&tails).next().ok_or_else(bad)?;
    let mut sigma = vec![cur];
    while let Some(&(_, j)) = delta.iter().find(|r| r.0 == cur) {
        if sigma.contains(&j) {
            return Err(bad());
        }
        sigma.push(j);
        cur = j;
    }
    if sigma.len() != n {
        return Err(bad());
    }
    Ok(sigma)
}

fn positive_roots(sigma: &[usize]) -> BTreeSet<Root> {
    let mut out = BTreeSet::new();
    for a in 0..sigma.len() {
        for b in a + 1..sigma.len() {
            out.insert((sigma[a], sigma[b]));
        }
    }
    out
}

/// The splitting `S_theta` of `W_N`; `theta` (model units) is snapped to the
/// first wall phase at or counterclockwise of it.
pub fn splitting(model: &WallModel, theta: i64) -> Result<SplittingData, NetworkError> {
    let n = model.n;
    if n < 3 {
        return Err(NetworkError::Rank(n));
    }
    let t = full_turn(n);
    let nn = n as i64;
    let theta = model
        .walls
        .iter()
        .map(|w| w.phase)
        .min_by_key(|p| (p - theta).rem_euclid(t))
        .ok_or_else(|| NetworkError::Degenerate("no walls".into()))?;
    // Relabel with the cut half a multiwall clockwise of theta, outside the
    // window [theta, theta + pi).
    let relabeled = WallModel::with_cut(n, theta - nn)?;
    let sep = 2 * nn;
    let mut phi = BTreeSet::new();
    let mut delta_a = BTreeSet::new();
    let mut delta_b = BTreeSet::new();
    for w in &relabeled.walls {
        let d = (w.phase - theta).rem_euclid(t);
        if d >= sep && d < t / 2 {
            phi.insert(w.label);
        }
        if d == sep {
            delta_b.insert(w.label);
        }
        if d == nn * sep {
            delta_a.insert(w.label);
        }
    }
    let s = SplittingData::from_simple(n, delta_a, delta_b)?;
    if s.phi != phi {
        return Err(NetworkError::NotAChain(format!("positive roots {phi:?}")));
    }
    Ok(s)
}

const GENERIC_TOL: f64 = 1e-9;

/// Directions `psi` in `(-3pi/2, pi/2]` of all walls of phase `theta` born
/// at `z = i`, with their outward labels.
pub fn walls_at_i(n: usize, theta: f64) -> Vec<(f64, Root)> {
    let scale = n as f64 / (n as f64 + 1.0);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            // (1 + 1/N) psi = theta - arg(-2i w_ij) mod 2 pi.
            let base = theta + PI / 2.0 - arg_omega_f64(n, i, j);
            let m_lo = ((-1.5 * PI / scale - base) / (2.0 * PI)).floor() as i64 - 1;
            for m in m_lo..m_lo + 4 {
                let psi = scale * (base + 2.0 * PI * m as f64);
                if psi > -1.5 * PI && psi <= 0.5 * PI {
                    out.push((psi, (i, j)));
                }
            }
        }
    }
    out.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    out
}

/// Splitting of the Toda network of phase `theta` at `z = i` formed by the
/// walls entering the unit disk.
pub fn toda_splitting(n: usize, theta: f64) -> Result<SplittingData, NetworkError> {
    if n < 2 {
        return Err(NetworkError::Rank(n));
    }
    let walls = walls_at_i(n, theta);
    for (psi, _) in &walls {
        if (psi + PI).abs() < GENERIC_TOL || psi.abs() < GENERIC_TOL {
            return Err(NetworkError::Degenerate(format!("theta = {theta}")));
        }
    }
    let mut groups: Vec<(f64, Vec<Root>)> = Vec::new();
    for (psi, label) in walls.into_iter().filter(|(p, _)| *p > -PI && *p < 0.0) {
        match groups.last_mut() {
            Some((p, ls)) if (psi - *p).abs() < GENERIC_TOL => ls.push(label),
            _ => groups.push((psi, vec![label])),
        }
    }
    let set = |g: &(f64, Vec<Root>)| g.1.iter().copied().collect::<BTreeSet<Root>>();
    if n == 2 {
        // A simple branch point: one or two inward walls.
        let last = groups.last().ok_or_else(|| NetworkError::Degenerate(format!("theta = {theta}")))?;
        return if groups.len() == 2 {
            SplittingData::from_simple(2, set(last), BTreeSet::new())
        } else {
            SplittingData::from_simple(2, BTreeSet::new(), set(last))
        };
    }
    if groups.len() != n + 1 {
        return Err(NetworkError::Degenerate(format!("theta = {theta}: {} inward multiwalls", groups.len())));
    }
    let s = SplittingData::from_simple(n, set(&groups[n]), set(&groups[1]))?;
    let phi: BTreeSet<Root> = groups[1..].iter().flat_map(|g| g.1.iter().copied()).collect();
    if s.phi != phi {
        return Err(NetworkError::NotAChain(format!("positive roots {phi:?}")));
    }
    Ok(s)
}

/// The scan phases `(j + 1/2) * 2 pi / (4(N+1))` shifted off the
/// degenerate set.
pub fn scan_phases(n: usize) -> Vec<f64> {
    let m = 4 * (n + 1);
    (0..m).map(|j| (j as f64 + 0.5) * 2.0 * PI / m as f64 + 1e-3).collect()
}

/// Distinct splittings realized over the scan, with a representative phase.
pub fn theta_scan(n: usize) -> Result<Vec<(f64, SplittingData)>, NetworkError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for theta in scan_phases(n) {
        let s = toda_splitting(n, theta)?;
        if seen.insert(s.fingerprint()) {
            out.push((theta, s));
        }
    }
    Ok(out)
}
