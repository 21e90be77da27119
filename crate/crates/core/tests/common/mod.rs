#![allow(dead_code)]

use num_bigint::BigInt;
use toda_core::exactalg::LaurentPoly;
use toda_core::toda::TodaRing;

/// A small closed-form Hamiltonian: a monomial prefactor times a sum of
/// y-monomials with unit coefficients.
pub struct Written {
    pub n: usize,
    /// Prefactor exponents in units of `1/(n+1)`.
    pub y_prefactor: Vec<i64>,
    pub x_prefactor: Vec<i64>,
    pub y_terms: Vec<Vec<i64>>,
    /// Image of each `y_j` as an x-exponent vector.
    pub y_in_x: Vec<Vec<i64>>,
}

impl Written {
    pub fn in_y(&self) -> LaurentPoly {
        let tr = TodaRing::new(self.n).unwrap();
        let pre = LaurentPoly::monomial(&tr.y, self.y_prefactor.clone(), BigInt::from(1));
        let sum = self.y_terms.iter().fold(LaurentPoly::zero(&tr.y), |acc, e| acc.add(&tr.y_monomial(e)).unwrap());
        pre.mul(&sum).unwrap()
    }

    pub fn in_x(&self) -> LaurentPoly {
        let tr = TodaRing::new(self.n).unwrap();
        let dim = 2 * self.n;
        let mut acc = LaurentPoly::zero(&tr.x);
        for t in &self.y_terms {
            let mut e = self.x_prefactor.clone();
            for (j, &p) in t.iter().enumerate() {
                for v in 0..dim {
                    e[v] += p * self.y_in_x[j][v];
                }
            }
            acc = acc.add(&LaurentPoly::monomial(&tr.x, e, BigInt::from(1))).unwrap();
        }
        acc
    }
}

pub fn rank_one() -> Written {
    Written {
        n: 1,
        y_prefactor: vec![-1, -1],
        x_prefactor: vec![1, -1],
        y_terms: vec![vec![0, 0], vec![0, 1], vec![1, 1]],
        y_in_x: vec![vec![0, 2], vec![-2, 0]],
    }
}

fn rank_two_map() -> Vec<Vec<i64>> {
    vec![vec![0, 2, 0, -1], vec![-2, 0, 1, 0], vec![0, -1, 0, 2], vec![1, 0, -2, 0]]
}

pub fn rank_two() -> [Written; 2] {
    [
        Written {
            n: 2,
            y_prefactor: vec![-1, -1, -2, -2],
            x_prefactor: vec![0, 0, 1, -1],
            y_terms: vec![vec![0, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, 1, 1], vec![0, 1, 1, 1], vec![1, 1, 1, 1]],
            y_in_x: rank_two_map(),
        },
        Written {
            n: 2,
            y_prefactor: vec![-2, -2, -1, -1],
            x_prefactor: vec![1, -1, 0, 0],
            y_terms: vec![vec![0, 0, 0, 0], vec![0, 1, 0, 0], vec![1, 1, 0, 0], vec![1, 1, 0, 1], vec![1, 1, 1, 1]],
            y_in_x: rank_two_map(),
        },
    ]
}
