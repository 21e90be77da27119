//! Homology of the closed Toda spectral curve in the symplectic basis
//! `A_1..A_{N-1}, B_1..B_{N-1}`, the spin structure, and the BPS quiver.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::walls::{toda_splitting, Root, SplittingData};
use super::NetworkError;
use crate::cluster::Quiver;
use crate::exactalg::{LaurentPoly, Ring, Substitution};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HomologyClass {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl HomologyClass {
    /// The zero class for curves with `N - 1 = rank`.
    pub fn zero(rank: usize) -> Self {
        HomologyClass { a: vec![0; rank], b: vec![0; rank] }
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    /// `A_i`, `1 <= i <= rank`; `A_0 = A_N = 0`.
    pub fn a_cycle(rank: usize, i: usize) -> Self {
        let mut c = Self::zero(rank);
        if (1..=rank).contains(&i) {
            c.a[i - 1] = 1;
        }
        c
    }

    pub fn b_cycle(rank: usize, i: usize) -> Self {
        let mut c = Self::zero(rank);
        c.b[i - 1] = 1;
        c
    }

    /// `C_i = A_{i-1} - 2A_i + A_{i+1} - B_i`.
    pub fn c_cycle(rank: usize, i: usize) -> Self {
        let mut c = Self::a_cycle(rank, i - 1).add(&Self::a_cycle(rank, i + 1));
        c.a[i - 1] -= 2;
        c.b[i - 1] -= 1;
        c
    }

    /// `D_r = A_r - A_{r+1}`: the lift of the unit circle on row `r`.
    pub fn d_cycle(rank: usize, r: usize) -> Self {
        Self::a_cycle(rank, r).sub(&Self::a_cycle(rank, r + 1))
    }

    pub fn add(&self, o: &Self) -> Self {
        HomologyClass {
            a: self.a.iter().zip(&o.a).map(|(x, y)| x + y).collect(),
            b: self.b.iter().zip(&o.b).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        HomologyClass { a: self.a.iter().map(|x| -x).collect(), b: self.b.iter().map(|x| -x).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: i64) -> Self {
        HomologyClass { a: self.a.iter().map(|x| k * x).collect(), b: self.b.iter().map(|x| k * x).collect() }
    }

    /// Intersection pairing with `<A_i, B_j> = delta_ij`.
    pub fn pairing(&self, o: &Self) -> i64 {
        (0..self.rank()).map(|i| self.a[i] * o.b[i] - self.b[i] * o.a[i]).sum()
    }

    /// Exponent vector `(a, b)` in the homology ring.
    pub fn exponents(&self) -> Vec<i64> {
        self.a.iter().chain(&self.b).copied().collect()
    }

    pub fn from_exponents(e: &[i64]) -> Self {
        let r = e.len() / 2;
        HomologyClass { a: e[..r].to_vec(), b: e[r..].to_vec() }
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, v) in [("A", &self.a), ("B", &self.b)] {
            for (i, &c) in v.iter().enumerate() {
                match c {
                    0 => {}
                    1 => parts.push(format!("{name}{}", i + 1)),
                    -1 => parts.push(format!("-{name}{}", i + 1)),
                    c => parts.push(format!("{c}{name}{}", i + 1)),
                }
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
        }
    }
}

/// Laurent ring with one variable per basis cycle: `A1.., B1..`.
pub fn homology_ring(rank: usize) -> Arc<Ring> {
    let vars = (1..=rank).map(|i| format!("A{i}")).chain((1..=rank).map(|i| format!("B{i}"))).collect();
    Ring::new(vars, 1)
}

pub fn class_monomial(ring: &Arc<Ring>, c: &HomologyClass) -> LaurentPoly {
    LaurentPoly::monomial(ring, c.exponents(), BigInt::one())
}

/// Quadratic refinement given by its parities on a symplectic basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadraticRefinement {
    /// `true` where the value on `A_i` is `-1`.
    pub a_odd: Vec<bool>,
    pub b_odd: Vec<bool>,
}

impl QuadraticRefinement {
    /// `sigma(A_i) = 1`, `sigma(B_i) = -1`.
    pub fn standard(rank: usize) -> Self {
        QuadraticRefinement { a_odd: vec![false; rank], b_odd: vec![true; rank] }
    }

    /// `+1` or `-1`.
    pub fn eval(&self, c: &HomologyClass) -> i64 {
        let mut q = 0i64;
        for i in 0..c.rank() {
            q += c.a[i] * self.a_odd[i] as i64 + c.b[i] * self.b_odd[i] as i64 + c.a[i] * c.b[i];
        }
        if q.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }
}

pub fn quadratic_refinement(c: &HomologyClass) -> i64 {
    QuadraticRefinement::standard(c.rank()).eval(c)
}

/// `B_j -> y_{2j-1}` and `A_j -> prod_k (y_{2k-1} y_{2k})^{-min(j,k)(N-max(j,k))/N}`,
/// into the y-ring of rank `N - 1` (denominator `N`).
pub fn homology_to_y(rank: usize, y: &Arc<Ring>) -> Substitution {
    let n = (rank + 1) as i64;
    let mut sub = Substitution::new(y);
    for j in 1..=rank {
        let mut a = vec![0; 2 * rank];
        for k in 1..=rank {
            let e = -((j.min(k) as i64) * (n - j.max(k) as i64));
            a[2 * k - 2] = e;
            a[2 * k - 1] = e;
        }
        let mut b = vec![0; 2 * rank];
        b[2 * j - 2] = n;
        sub = sub.map(&format!("A{j}"), a).map(&format!("B{j}"), b);
    }
    sub
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Semicircle {
    Right,
    Left,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BpsState {
    pub side: Semicircle,
    pub root: Root,
    pub class: HomologyClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisCycle {
    /// `gamma_k` or `gamma'_k`.
    pub name: String,
    pub class: HomologyClass,
    /// Vertex of `Q_{N-1}`, 1-based.
    pub vertex: usize,
}

#[derive(Debug, Clone)]
pub struct BpsSpectrum {
    pub splitting: SplittingData,
    pub positive: Vec<BpsState>,
    pub basis: Vec<BasisCycle>,
    pub quiver: Quiver,
}

/// `gamma_k` and `gamma'_k` in the `A`/`B` basis, with their quiver vertices.
pub fn basis_cycles(s: &SplittingData) -> Vec<BasisCycle> {
    let r = s.n - 1;
    let mut out = Vec::with_capacity(2 * r);
    for k in 1..=r {
        let (b, c) = (HomologyClass::b_cycle(r, k), HomologyClass::c_cycle(r, k));
        let (g, gp) = if s.in_a(k) { (b, c) } else { (c, b) };
        let vertex = |cl: &HomologyClass| if cl.b[k - 1] == 1 { 2 * k - 1 } else { 2 * k };
        out.push(BasisCycle { name: format!("gamma{k}"), vertex: vertex(&g), class: g });
        out.push(BasisCycle { name: format!("gamma'{k}"), vertex: vertex(&gp), class: gp });
    }
    out
}

/// Quiver with `max(0, <g, g'>)` arrows from `g` to `g'`.
pub fn intersection_quiver(basis: &[BasisCycle]) -> Result<Quiver, NetworkError> {
    let m = basis.len();
    let mut adj = vec![vec![0i64; m]; m];
    for u in basis {
        for v in basis {
            adj[u.vertex - 1][v.vertex - 1] = u.class.pairing(&v.class);
        }
    }
    Quiver::from_adj(adj).map_err(|e| NetworkError::Quiver(e.to_string()))
}

pub fn bps_spectrum_of(s: &SplittingData) -> Result<BpsSpectrum, NetworkError> {
    let basis = basis_cycles(s);
    let gamma = |k: usize| basis[2 * (k - 1)].class.clone();
    let gamma_p = |k: usize| basis[2 * (k - 1) + 1].class.clone();
    let n = s.n;
    let r = n - 1;
    let mut positive = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let class = (a + 1..=b).fold(HomologyClass::zero(r), |acc, k| acc.add(&gamma(k)));
            positive.push(BpsState { side: Semicircle::Right, root: (s.sigma[a], s.sigma[b]), class });
        }
    }
    // alpha'_k joins tau_a(sigma_k) to tau_a(sigma_{k-1}); chain it from the top.
    let chain_p: Vec<usize> = s.sigma.iter().rev().map(|&x| s.tau_a[x]).collect();
    for a in 0..n {
        for b in a + 1..n {
            let class = (a + 1..=b).fold(HomologyClass::zero(r), |acc, e| acc.add(&gamma_p(n - e)));
            positive.push(BpsState { side: Semicircle::Left, root: (chain_p[a], chain_p[b]), class });
        }
    }
    let quiver = intersection_quiver(&basis)?;
    Ok(BpsSpectrum { splitting: s.clone(), positive, basis, quiver })
}

pub fn bps_spectrum(n: usize, theta: f64) -> Result<BpsSpectrum, NetworkError> {
    bps_spectrum_of(&toda_splitting(n, theta)?)
}
