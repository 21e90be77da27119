//! Numerical walls of the Toda curve: solutions of
//! `arg z' = phi + arg(z / (z + 1/z)^{1/N})` at unit speed.

use std::f64::consts::PI;
use std::fmt::Write as _;

use num_complex::Complex64;
use serde::Serialize;

use super::NetworkError;

const STOP_RADIUS: f64 = 1e-3;
const NEAR_BRANCH: f64 = 0.1;
const NEAR_BRANCH_STEP: f64 = 0.01;
const ESCAPE_RADIUS: f64 = 1e3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Termination {
    Origin,
    /// Reached `+i` (`1`) or `-i` (`-1`).
    BranchPoint(i8),
    Escape,
    MaxTime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Monotonicity {
    Decreasing,
    Constant,
    Increasing,
    Mixed,
}

#[derive(Debug, Clone)]
pub struct Trajectory {
    pub n: usize,
    pub phi: f64,
    pub step: f64,
    pub t: Vec<f64>,
    pub z: Vec<Complex64>,
    /// Continued branch of `(z + 1/z)^{1/N}`.
    pub w: Vec<Complex64>,
    pub termination: Termination,
}

impl Trajectory {
    pub fn radii(&self) -> Vec<f64> {
        self.z.iter().map(|z| z.norm()).collect()
    }

    /// Behaviour of `|z(t)|` over the whole trajectory, up to `tol` per step.
    pub fn monotonicity(&self, tol: f64) -> Monotonicity {
        let r = self.radii();
        let d: Vec<f64> = r.windows(2).map(|w| w[1] - w[0]).collect();
        if d.iter().all(|x| x.abs() <= tol) {
            Monotonicity::Constant
        } else if d.iter().all(|&x| x <= tol) {
            Monotonicity::Decreasing
        } else if d.iter().all(|&x| x >= -tol) {
            Monotonicity::Increasing
        } else {
            Monotonicity::Mixed
        }
    }

    /// Index of the first step taken inside the unit disk with `|z|`
    /// decreasing, if any.
    pub fn entry_index(&self) -> Option<usize> {
        let r = self.radii();
        (0..r.len().saturating_sub(1)).find(|&j| r[j] < 1.0 && r[j + 1] < r[j])
    }

    /// Once inside the disk and moving inward, `|z|` never grows by more
    /// than `tol` in a step; likewise outside and moving outward.
    pub fn conforms(&self, tol: f64) -> bool {
        let r = self.radii();
        let inside = self.entry_index();
        let outside = (0..r.len().saturating_sub(1)).find(|&j| r[j] > 1.0 && r[j + 1] > r[j]);
        let ok_in = inside.is_none_or(|s| r[s..].windows(2).all(|w| w[1] - w[0] <= tol));
        let ok_out = outside.is_none_or(|s| r[s..].windows(2).all(|w| w[1] - w[0] >= -tol));
        ok_in && ok_out
    }

    /// Largest `|w^N - (z + 1/z)|` over the samples.
    pub fn branch_residual(&self) -> f64 {
        self.z.iter().zip(&self.w).map(|(z, w)| (w.powu(self.n as u32) - (z + z.inv())).norm()).fold(0.0, f64::max)
    }

    /// Columns `t, Re z, Im z, |z|, branch Re, branch Im`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("t,re_z,im_z,abs_z,branch_re,branch_im\n");
        for j in 0..self.z.len() {
            let (z, w) = (self.z[j], self.w[j]);
            let _ =
                writeln!(s, "{:.12},{:.12},{:.12},{:.12},{:.12},{:.12}", self.t[j], z.re, z.im, z.norm(), w.re, w.im);
        }
        s
    }
}

/// The `N`-th root of `s` nearest to `prev`.
fn nearest_root(n: usize, s: Complex64, prev: Complex64) -> Result<Complex64, NetworkError> {
    let base = s.powf(1.0 / n as f64);
    let spacing = 2.0 * base.norm() * (PI / n as f64).sin();
    let mut best = (f64::INFINITY, base);
    for k in 0..n {
        let r = base * Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64);
        let d = (r - prev).norm();
        if d < best.0 {
            best = (d, r);
        }
    }
    if n > 1 && best.0 > 0.5 * spacing {
        return Err(NetworkError::Branch(format!("{s}")));
    }
    Ok(best.1)
}

fn velocity(phi: f64, z: Complex64, w: Complex64) -> Complex64 {
    let q = z / w;
    Complex64::from_polar(1.0, phi) * q / q.norm()
}

fn distance_to_singular(z: Complex64) -> f64 {
    let i = Complex64::i();
    z.norm().min((z - i).norm()).min((z + i).norm())
}

struct Stepper {
    n: usize,
    phi: f64,
}

impl Stepper {
    fn branch(&self, z: Complex64, prev: Complex64) -> Result<Complex64, NetworkError> {
        nearest_root(self.n, z + z.inv(), prev)
    }

    /// One classical fourth-order step, continuing the branch through the
    /// stages.
    fn rk4(&self, z: Complex64, w: Complex64, h: f64) -> Result<(Complex64, Complex64), NetworkError> {
        let k1 = velocity(self.phi, z, w);
        let z2 = z + k1 * (h / 2.0);
        let w2 = self.branch(z2, w)?;
        let k2 = velocity(self.phi, z2, w2);
        let z3 = z + k2 * (h / 2.0);
        let w3 = self.branch(z3, w2)?;
        let k3 = velocity(self.phi, z3, w3);
        let z4 = z + k3 * h;
        let w4 = self.branch(z4, w3)?;
        let k4 = velocity(self.phi, z4, w4);
        let zn = z + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
        let wn = self.branch(zn, w4)?;
        Ok((zn, wn))
    }
}

/// Integrates from `z0` with the principal branch of `(z0 + 1/z0)^{1/N}`.
pub fn trace_trajectory(n: usize, phi: f64, z0: Complex64, step: f64, t_max: f64) -> Result<Trajectory, NetworkError> {
    trace_trajectory_from(n, phi, z0, None, step, t_max)
}

/// As [`trace_trajectory`], starting on the branch nearest to `w0`.
pub fn trace_trajectory_from(
    n: usize,
    phi: f64,
    z0: Complex64,
    w0: Option<Complex64>,
    step: f64,
    t_max: f64,
) -> Result<Trajectory, NetworkError> {
    if n < 1 {
        return Err(NetworkError::Rank(n));
    }
    if step.is_nan() || step <= 0.0 {
        return Err(NetworkError::Step);
    }
    if distance_to_singular(z0) < STOP_RADIUS || !z0.norm().is_finite() {
        return Err(NetworkError::SingularStart(format!("{z0}")));
    }
    let s0 = z0 + z0.inv();
    let w_init = match w0 {
        Some(w) => nearest_root(n, s0, w)?,
        None => s0.powf(1.0 / n as f64),
    };
    let stepper = Stepper { n, phi };
    let mut tr =
        Trajectory { n, phi, step, t: vec![0.0], z: vec![z0], w: vec![w_init], termination: Termination::MaxTime };
    let (mut t, mut z, mut w) = (0.0, z0, w_init);
    let i = Complex64::i();
    while t < t_max {
        let dist = distance_to_singular(z);
        let mut h = step.min(0.2 * dist).min(t_max - t);
        if (z - i).norm() < NEAR_BRANCH || (z + i).norm() < NEAR_BRANCH {
            h = h.min(NEAR_BRANCH_STEP);
        }
        let mut attempt = stepper.rk4(z, w, h);
        let mut halvings = 0;
        while attempt.is_err() && halvings < 20 {
            h /= 2.0;
            halvings += 1;
            attempt = stepper.rk4(z, w, h);
        }
        let (zn, wn) = attempt?;
        t += h;
        z = zn;
        w = wn;
        tr.t.push(t);
        tr.z.push(z);
        tr.w.push(w);
        if z.norm() < STOP_RADIUS {
            tr.termination = Termination::Origin;
            break;
        }
        if (z - i).norm() < STOP_RADIUS {
            tr.termination = Termination::BranchPoint(1);
            break;
        }
        if (z + i).norm() < STOP_RADIUS {
            tr.termination = Termination::BranchPoint(-1);
            break;
        }
        if z.norm() > ESCAPE_RADIUS {
            tr.termination = Termination::Escape;
            break;
        }
    }
    Ok(tr)
}

/// Starting points on an `m x m` grid over `[-r, r]^2`, skipping points
/// close to `0` and `+-i`.
pub fn start_grid(m: usize, r: f64) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(m * m);
    for a in 0..m {
        for b in 0..m {
            let x = -r + 2.0 * r * (a as f64 + 0.5) / m as f64;
            let y = -r + 2.0 * r * (b as f64 + 0.5) / m as f64;
            let z = Complex64::new(x, y);
            if distance_to_singular(z) > 0.05 {
                out.push(z);
            }
        }
    }
    out
}
