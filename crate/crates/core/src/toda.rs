//! The Coxeter-cell factorization into `SL_{n+1}`, the Hamiltonians as
//! exterior-power traces, and the change of coordinates from `y` to `x`.

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::exactalg::{exterior_trace, AlgebraError, LaurentPoly, PolyMatrix, Ring, Substitution};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TodaError {
    #[error("rank must be at least 1 (got {0})")]
    Rank(usize),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("non-integral exponents after substitution")]
    NonIntegral,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coords {
    Y,
    X,
}

impl FromStr for Coords {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "y" => Ok(Coords::Y),
            "x" => Ok(Coords::X),
            other => Err(format!("unknown coordinates `{other}` (expected x or y)")),
        }
    }
}

/// `A_n` Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    pub c: Vec<Vec<i64>>,
}

impl CartanData {
    pub fn new(n: usize) -> Self {
        let mut c = vec![vec![0; n]; n];
        for i in 0..n {
            c[i][i] = 2;
            if i + 1 < n {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
        }
        CartanData { c }
    }

    /// Entry `C_ij`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.c[i - 1][j - 1]
    }
}

/// The y-ring (`y_1..y_{2n}` over denominator `n+1`) and x-ring
/// (`x_1..x_{2n}`, integral) of rank `n`.
#[derive(Debug, Clone)]
pub struct TodaRing {
    pub n: usize,
    pub y: Arc<Ring>,
    pub x: Arc<Ring>,
}

impl TodaRing {
    pub fn new(n: usize) -> Result<Self, TodaError> {
        if n < 1 {
            return Err(TodaError::Rank(n));
        }
        Ok(TodaRing { n, y: Ring::indexed("y", 2 * n, (n + 1) as u32), x: Ring::indexed("x", 2 * n, 1) })
    }

    /// `y^e` for integral exponents `e` (length `2n`).
    pub fn y_monomial(&self, e: &[i64]) -> LaurentPoly {
        let d = (self.n + 1) as i64;
        LaurentPoly::monomial(&self.y, e.iter().map(|v| v * d).collect(), BigInt::one())
    }

    /// `wht(p_min) = prod_i (y_{2i-1} y_{2i})^{-i/(n+1)}`.
    pub fn base_weight(&self) -> LaurentPoly {
        let mut e = vec![0; 2 * self.n];
        for i in 1..=self.n {
            e[2 * i - 2] = -(i as i64);
            e[2 * i - 1] = -(i as i64);
        }
        LaurentPoly::monomial(&self.y, e, BigInt::one())
    }

    pub fn to_x(&self, p: &LaurentPoly) -> Result<LaurentPoly, TodaError> {
        p.substitute(&y_to_x(self)).map_err(|e| match e {
            AlgebraError::NonIntegralExponent { .. } => TodaError::NonIntegral,
            other => other.into(),
        })
    }
}

fn check_index(n: usize, i: usize) -> Result<(), TodaError> {
    if i < 1 || i > n {
        Err(TodaError::IndexOutOfRange { index: i, max: n })
    } else {
        Ok(())
    }
}

/// `E_i = 1 + e_{i,i+1}` and `F_i = 1 + e_{i+1,i}` in `SL_{n+1}`.
pub fn elementary_matrices(ring: &Arc<Ring>, n: usize, i: usize) -> Result<(PolyMatrix, PolyMatrix), TodaError> {
    check_index(n, i)?;
    let mut e = PolyMatrix::identity(ring, n + 1);
    let mut f = PolyMatrix::identity(ring, n + 1);
    e.set(i - 1, i, LaurentPoly::one(ring));
    f.set(i, i - 1, LaurentPoly::one(ring));
    Ok((e, f))
}

/// `y^{omega_i}`: `y^{-i/(n+1)} diag(y, .., y, 1, .., 1)` with `i` copies of
/// `y`, where `y` is variable `var` of the ring (denominator `n+1`).
pub fn coweight_matrix(ring: &Arc<Ring>, n: usize, i: usize, var: usize) -> Result<PolyMatrix, TodaError> {
    check_index(n, i)?;
    let d = (n + 1) as i64;
    let diag = (0..=n)
        .map(|r| {
            let mut e = vec![0; ring.nvars()];
            e[var] = if r < i { d - i as i64 } else { -(i as i64) };
            LaurentPoly::monomial(ring, e, BigInt::one())
        })
        .collect();
    Ok(PolyMatrix::diagonal(ring, diag))
}

/// `prod_i E_i y_{2i-1}^{omega_i} F_i y_{2i}^{omega_i}` over the y-ring.
pub fn factorization_matrix(tr: &TodaRing) -> Result<PolyMatrix, TodaError> {
    let n = tr.n;
    let mut m = PolyMatrix::identity(&tr.y, n + 1);
    for i in 1..=n {
        let (e, f) = elementary_matrices(&tr.y, n, i)?;
        m = m.mul(&e)?;
        m = m.mul(&coweight_matrix(&tr.y, n, i, 2 * i - 2)?)?;
        m = m.mul(&f)?;
        m = m.mul(&coweight_matrix(&tr.y, n, i, 2 * i - 1)?)?;
    }
    Ok(m)
}

/// `y_{2i-1} -> prod_j x_{2j}^{C_ij}`, `y_{2i} -> prod_j x_{2j-1}^{-C_ij}`.
pub fn y_to_x(tr: &TodaRing) -> Substitution {
    let n = tr.n;
    let c = CartanData::new(n);
    let mut sub = Substitution::new(&tr.x);
    for i in 1..=n {
        let mut odd = vec![0; 2 * n];
        let mut even = vec![0; 2 * n];
        for j in 1..=n {
            odd[2 * j - 1] = c.get(i, j);
            even[2 * j - 2] = -c.get(i, j);
        }
        sub = sub.map(&format!("y{}", 2 * i - 1), odd).map(&format!("y{}", 2 * i), even);
    }
    sub
}

/// `H_k` as the trace of the k-th exterior power of the factorization.
pub fn hamiltonian_matrix(n: usize, k: usize, coords: Coords) -> Result<LaurentPoly, TodaError> {
    let tr = TodaRing::new(n)?;
    check_index(n, k)?;
    let h = exterior_trace(&factorization_matrix(&tr)?, k)?;
    match coords {
        Coords::Y => Ok(h),
        Coords::X => tr.to_x(&h),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(tr: &TodaRing, e: &[i64]) -> LaurentPoly {
        tr.y_monomial(e)
    }

    #[test]
    fn elementary_shapes() {
        let tr = TodaRing::new(2).unwrap();
        let (e, f) = elementary_matrices(&tr.y, 2, 1).unwrap();
        let ef = e.mul(&f).unwrap();
        let want = [[2, 1, 0], [1, 1, 0], [0, 0, 1]];
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(*ef.get(r, c), LaurentPoly::constant(&tr.y, want[r][c]));
            }
        }
        assert!(elementary_matrices(&tr.y, 2, 3).is_err());
    }

    #[test]
    fn coweight_has_unit_determinant() {
        let tr = TodaRing::new(3).unwrap();
        for i in 1..=3 {
            let m = coweight_matrix(&tr.y, 3, i, 0).unwrap();
            assert_eq!(m.determinant(), LaurentPoly::one(&tr.y));
        }
    }

    #[test]
    fn rank_one_matrix() {
        let tr = TodaRing::new(1).unwrap();
        let m = factorization_matrix(&tr).unwrap();
        let s = y(&tr, &[0, 0]).mul(&tr.base_weight()).unwrap();
        let entry = |e: &[&[i64]]| e.iter().fold(LaurentPoly::zero(&tr.y), |acc, t| acc.add(&y(&tr, t)).unwrap());
        assert_eq!(*m.get(0, 0), entry(&[&[0, 1], &[1, 1]]).mul(&s).unwrap());
        assert_eq!(*m.get(0, 1), s);
        assert_eq!(*m.get(1, 0), y(&tr, &[0, 1]).mul(&s).unwrap());
        assert_eq!(*m.get(1, 1), s);
    }

    #[test]
    fn unit_determinant() {
        for n in 1..=3 {
            let tr = TodaRing::new(n).unwrap();
            assert_eq!(factorization_matrix(&tr).unwrap().determinant(), LaurentPoly::one(&tr.y));
        }
    }

    #[test]
    fn rank_two_second_hamiltonian() {
        let tr = TodaRing::new(2).unwrap();
        let h = hamiltonian_matrix(2, 2, Coords::Y).unwrap();
        let mut body = LaurentPoly::zero(&tr.y);
        for e in [[0, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0], [1, 1, 0, 1], [1, 1, 1, 1]] {
            body = body.add(&y(&tr, &e)).unwrap();
        }
        let pref = LaurentPoly::monomial(&tr.y, vec![-2, -2, -1, -1], BigInt::one());
        assert_eq!(h, body.mul(&pref).unwrap());
    }

    #[test]
    fn coordinate_change() {
        let tr = TodaRing::new(1).unwrap();
        let sub = y_to_x(&tr);
        assert_eq!(sub.image("y1").unwrap().to_string(), "x2^2");
        assert_eq!(sub.image("y2").unwrap().to_string(), "x1^-2");
        let tr2 = TodaRing::new(2).unwrap();
        assert_eq!(y_to_x(&tr2).image("y3").unwrap().to_string(), "x2^-1*x4^2");
    }

    #[test]
    fn first_hamiltonian_has_2n_plus_1_terms() {
        for n in 1..=4 {
            let h = hamiltonian_matrix(n, 1, Coords::X).unwrap();
            assert_eq!(h.len(), 2 * n + 1);
            assert!(h.all_coefficients_one());
        }
    }
}
