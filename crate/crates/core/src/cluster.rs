//! Quivers, mutation of quivers and seeds, and the `p` map from the
//! X-side torus to the A-side torus. Vertices are numbered from 1.

use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};
use thiserror::Error;

use crate::exactalg::{AlgebraError, LaurentPoly, Ring, Substitution};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClusterError {
    #[error("quiver needs at least one vertex (got rank {0})")]
    EmptyQuiver(usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("adjacency matrix is not skew-symmetric")]
    NotSkewSymmetric,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Signed adjacency matrix: `q(i, j)` = arrows i→j minus arrows j→i.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    adj: Vec<Vec<i64>>,
}

impl Quiver {
    pub fn from_adj(adj: Vec<Vec<i64>>) -> Result<Self, ClusterError> {
        let n = adj.len();
        if n == 0 {
            return Err(ClusterError::EmptyQuiver(0));
        }
        for i in 0..n {
            if adj[i].len() != n {
                return Err(ClusterError::NotSkewSymmetric);
            }
            for j in 0..n {
                if adj[i][j] != -adj[j][i] {
                    return Err(ClusterError::NotSkewSymmetric);
                }
            }
        }
        Ok(Quiver { adj })
    }

    /// Empty quiver on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Quiver { adj: vec![vec![0; n]; n] }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), ClusterError> {
        if v == 0 || v > self.n() {
            Err(ClusterError::VertexOutOfRange { vertex: v, n: self.n() })
        } else {
            Ok(())
        }
    }

    /// Signed count `Q_ij` (1-based).
    pub fn q(&self, i: usize, j: usize) -> i64 {
        self.adj[i - 1][j - 1]
    }

    /// Add `count` arrows i→j.
    pub fn add_arrows(&mut self, i: usize, j: usize, count: i64) {
        self.adj[i - 1][j - 1] += count;
        self.adj[j - 1][i - 1] -= count;
    }

    pub fn adjacency(&self) -> &[Vec<i64>] {
        &self.adj
    }

    /// Number of arrows i→j.
    pub fn arrows(&self, i: usize, j: usize) -> u64 {
        self.q(i, j).max(0) as u64
    }

    pub fn arrow_count(&self) -> u64 {
        let n = self.n();
        (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).map(|(i, j)| self.arrows(i, j)).sum()
    }

    pub fn mutate(&self, k: usize) -> Result<Self, ClusterError> {
        self.check_vertex(k)?;
        let n = self.n();
        let k0 = k - 1;
        let a = &self.adj;
        let mut out = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                out[i][j] = if i == k0 || j == k0 {
                    -a[i][j]
                } else {
                    a[i][j] + (a[i][k0].abs() * a[k0][j] + a[i][k0] * a[k0][j].abs()) / 2
                };
            }
        }
        Ok(Quiver { adj: out })
    }

    /// Graphviz rendering with one edge per arrow.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph {name} {{\n");
        for i in 1..=self.n() {
            let _ = writeln!(s, "  {i};");
        }
        for i in 1..=self.n() {
            for j in 1..=self.n() {
                for _ in 0..self.arrows(i, j) {
                    let _ = writeln!(s, "  {i} -> {j};");
                }
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Value {
        json!({ "n": self.n(), "adj": self.adj })
    }
}

/// The quiver `Q_n` on `2n` vertices.
pub fn build_qn(n: usize) -> Result<Quiver, ClusterError> {
    if n < 1 {
        return Err(ClusterError::EmptyQuiver(n));
    }
    let mut q = Quiver::empty(2 * n);
    for i in 1..=n {
        q.add_arrows(2 * i - 1, 2 * i, 2);
        if i < n {
            q.add_arrows(2 * i, 2 * i + 1, 1);
        }
        if i >= 2 {
            q.add_arrows(2 * i, 2 * i - 3, 1);
        }
    }
    Ok(q)
}

pub fn mutate_quiver(q: &Quiver, k: usize) -> Result<Quiver, ClusterError> {
    q.mutate(k)
}

/// Cluster variables as Laurent polynomials in the initial `x_1..x_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedA {
    pub quiver: Quiver,
    pub vars: Vec<LaurentPoly>,
}

impl SeedA {
    pub fn initial(quiver: &Quiver) -> Self {
        let ring = Ring::indexed("x", quiver.n(), 1);
        let vars = (0..quiver.n()).map(|i| LaurentPoly::var(&ring, i)).collect();
        SeedA { quiver: quiver.clone(), vars }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.vars[0].ring()
    }

    pub fn mutate(&self, k: usize) -> Result<Self, ClusterError> {
        self.quiver.check_vertex(k)?;
        let ring = self.ring().clone();
        let mut pos = LaurentPoly::one(&ring);
        let mut neg = LaurentPoly::one(&ring);
        for j in 1..=self.quiver.n() {
            let q = self.quiver.q(k, j);
            if q > 0 {
                pos = pos.mul(&self.vars[j - 1].pow(q as u32))?;
            } else if q < 0 {
                neg = neg.mul(&self.vars[j - 1].pow((-q) as u32))?;
            }
        }
        let mut vars = self.vars.clone();
        vars[k - 1] = pos.add(&neg)?.exact_divide(&self.vars[k - 1])?;
        Ok(SeedA { quiver: self.quiver.mutate(k)?, vars })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "quiver": self.quiver.to_json(),
            "vars": self.vars.iter().map(|v| v.to_json_value()).collect::<Vec<_>>(),
        })
    }
}

pub fn mutate_seed_a(s: &SeedA, k: usize) -> Result<SeedA, ClusterError> {
    s.mutate(k)
}

/// A rational function kept as a numerator/denominator pair.
#[derive(Debug, Clone)]
pub struct Fraction {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl Fraction {
    pub fn from_poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::one(p.ring());
        Fraction { num: p, den }
    }

    /// Equality as rational functions.
    pub fn same_as(&self, other: &Fraction) -> Result<bool, AlgebraError> {
        Ok(self.num.mul(&other.den)? == other.num.mul(&self.den)?)
    }

    /// Cancel the given candidate factors while they divide both parts,
    /// then scale so the denominator's leading term is `+1`.
    fn reduce(mut self, candidates: &[LaurentPoly]) -> Result<Self, AlgebraError> {
        for c in candidates {
            if c.is_zero() || c.is_monomial() {
                continue;
            }
            while let (Ok(a), Ok(b)) = (self.num.exact_divide(c), self.den.exact_divide(c)) {
                self.num = a;
                self.den = b;
            }
        }
        let (e, c) = self.den.leading_term().ok_or(AlgebraError::NotDivisible)?;
        let unit = LaurentPoly::monomial(self.den.ring(), e.clone(), c.clone());
        if let Ok(inv) = unit.monomial_inverse() {
            self.num = self.num.mul(&inv)?;
            self.den = self.den.mul(&inv)?;
        }
        Ok(self)
    }
}

impl PartialEq for Fraction {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other).unwrap_or(false)
    }
}

/// X-coordinates as rational functions of the initial `y_1..y_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeedX {
    pub quiver: Quiver,
    pub vars: Vec<Fraction>,
}

impl SeedX {
    pub fn initial(quiver: &Quiver) -> Self {
        let ring = Ring::indexed("y", quiver.n(), 1);
        let vars = (0..quiver.n()).map(|i| Fraction::from_poly(LaurentPoly::var(&ring, i))).collect();
        SeedX { quiver: quiver.clone(), vars }
    }

    pub fn mutate(&self, k: usize) -> Result<Self, ClusterError> {
        self.quiver.check_vertex(k)?;
        let Fraction { num: nk, den: dk } = self.vars[k - 1].clone();
        let sum = nk.add(&dk)?;
        let candidates = [sum.clone(), nk.clone(), dk.clone()];
        let mut vars = Vec::with_capacity(self.vars.len());
        for i in 1..=self.quiver.n() {
            let y = &self.vars[i - 1];
            let q = self.quiver.q(i, k);
            let f = if i == k {
                Fraction { num: dk.clone(), den: nk.clone() }
            } else if q > 0 {
                let m = q as u32;
                Fraction { num: y.num.mul(&nk.pow(m))?, den: y.den.mul(&sum.pow(m))? }
            } else if q < 0 {
                let m = (-q) as u32;
                Fraction { num: y.num.mul(&sum.pow(m))?, den: y.den.mul(&dk.pow(m))? }
            } else {
                y.clone()
            };
            vars.push(f.reduce(&candidates)?);
        }
        Ok(SeedX { quiver: self.quiver.mutate(k)?, vars })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "quiver": self.quiver.to_json(),
            "vars": self.vars.iter().map(|f| json!({
                "num": f.num.to_json_value(),
                "den": f.den.to_json_value(),
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn mutate_seed_x(s: &SeedX, k: usize) -> Result<SeedX, ClusterError> {
    s.mutate(k)
}

/// Substitution `y_i -> prod_j x_j^{Q_ij}` into an x-ring with the same
/// denominator as `y_ring`.
pub fn p_substitution(q: &Quiver, y_ring: &Arc<Ring>) -> Substitution {
    let d = y_ring.den() as i64;
    let x = Ring::indexed("x", q.n(), y_ring.den());
    let mut sub = Substitution::new(&x);
    for i in 1..=q.n() {
        let img = (1..=q.n()).map(|j| q.q(i, j) * d).collect();
        sub = sub.map(&format!("y{i}"), img);
    }
    sub
}

pub fn p_map(q: &Quiver, p: &LaurentPoly) -> Result<LaurentPoly, ClusterError> {
    Ok(p.substitute(&p_substitution(q, p.ring()))?)
}

/// Check that `p` intertwines X- and A-mutation along `seq`: each mutated
/// `y'_i`, pushed through `p` of the initial quiver, equals
/// `prod_j x'_j^{Q'_ij}` for the mutated cluster variables `x'`.
pub fn commuting_square_holds(q: &Quiver, seq: &[usize]) -> Result<bool, ClusterError> {
    let mut a = SeedA::initial(q);
    let mut x = SeedX::initial(q);
    for &k in seq {
        a = a.mutate(k)?;
        x = x.mutate(k)?;
    }
    let ring = a.ring().clone();
    for i in 1..=q.n() {
        let mut lhs = p_map(q, &x.vars[i - 1].num)?;
        let mut rhs = p_map(q, &x.vars[i - 1].den)?;
        for j in 1..=q.n() {
            let e = a.quiver.q(i, j);
            let xj = &a.vars[j - 1];
            if e > 0 {
                rhs = rhs.mul(&xj.pow(e as u32))?;
            } else if e < 0 {
                lhs = lhs.mul(&xj.pow((-e) as u32))?;
            }
        }
        if lhs.rebind(&ring)? != rhs.rebind(&ring)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Run every mutation sequence of length `depth` (no immediate repeats)
/// from the initial A-seed of `q`; returns the number of seeds visited.
pub fn laurent_closure(q: &Quiver, depth: usize) -> Result<usize, ClusterError> {
    fn walk(s: &SeedA, last: usize, left: usize, count: &mut usize) -> Result<(), ClusterError> {
        *count += 1;
        if left == 0 {
            return Ok(());
        }
        for k in 1..=s.quiver.n() {
            if k != last {
                walk(&s.mutate(k)?, k, left - 1, count)?;
            }
        }
        Ok(())
    }
    let mut count = 0;
    walk(&SeedA::initial(q), 0, depth, &mut count)?;
    Ok(count)
}

/// `x^e` for an exponent vector over the initial x-ring.
pub fn x_monomial(ring: &Arc<Ring>, e: Vec<i64>) -> LaurentPoly {
    LaurentPoly::monomial(ring, e, BigInt::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q1_is_kronecker() {
        let q = build_qn(1).unwrap();
        assert_eq!(q.q(1, 2), 2);
        assert_eq!(q.mutate(1).unwrap().q(2, 1), 2);
    }

    #[test]
    fn q2_arrows() {
        let q = build_qn(2).unwrap();
        assert_eq!(q.arrows(1, 2), 2);
        assert_eq!(q.arrows(3, 4), 2);
        assert_eq!(q.arrows(2, 3), 1);
        assert_eq!(q.arrows(4, 1), 1);
        assert_eq!(q.arrow_count(), 6);
    }

    #[test]
    fn mutation_formula_entrywise_on_q2() {
        // Hand evaluation at k = 2: arrows 1->2 (x2), 2->3 flip; 1->3 gains
        // two arrows through 2.
        let q = build_qn(2).unwrap().mutate(2).unwrap();
        assert_eq!(q.q(2, 1), 2);
        assert_eq!(q.q(3, 2), 1);
        assert_eq!(q.q(1, 3), 2);
        assert_eq!(q.q(4, 1), 1);
        assert_eq!(q.q(3, 4), 2);
    }

    #[test]
    fn kronecker_exchange() {
        let s = SeedA::initial(&build_qn(1).unwrap()).mutate(1).unwrap();
        let ring = s.ring().clone();
        let expect = LaurentPoly::from_terms(&ring, [(vec![-1, 0], BigInt::one()), (vec![-1, 2], BigInt::one())]);
        assert_eq!(s.vars[0], expect);
        assert_eq!(s.mutate(1).unwrap(), SeedA::initial(&build_qn(1).unwrap()));
    }

    #[test]
    fn kronecker_x_mutation() {
        let s = SeedX::initial(&build_qn(1).unwrap()).mutate(1).unwrap();
        let ring = Ring::indexed("y", 2, 1);
        let y1 = LaurentPoly::var(&ring, 0);
        let y2 = LaurentPoly::var(&ring, 1);
        let one = LaurentPoly::one(&ring);
        let want1 = Fraction { num: one.clone(), den: y1.clone() };
        let s1 = one.add(&y1).unwrap();
        // Q_21 = -2, so y'_2 = y_2 (1 + y_1)^2.
        let want2 = Fraction { num: y2.mul(&s1.pow(2)).unwrap(), den: one.clone() };
        assert!(s.vars[0].same_as(&want1).unwrap());
        assert!(s.vars[1].same_as(&want2).unwrap());
        assert_eq!(s.mutate(1).unwrap(), SeedX::initial(&build_qn(1).unwrap()));
    }

    #[test]
    fn p_map_matches_quiver() {
        let q = build_qn(2).unwrap();
        let y = Ring::indexed("y", 4, 1);
        let img = p_map(&q, &LaurentPoly::var(&y, 3)).unwrap();
        assert_eq!(img.to_string(), "x1*x3^-2");
        let q1 = build_qn(1).unwrap();
        let y1 = Ring::indexed("y", 2, 1);
        assert_eq!(p_map(&q1, &LaurentPoly::var(&y1, 0)).unwrap().to_string(), "x2^2");
    }

    #[test]
    fn commuting_square_short_sequences() {
        let q = build_qn(2).unwrap();
        for seq in [vec![1], vec![2, 3], vec![4, 1, 2]] {
            assert!(commuting_square_holds(&q, &seq).unwrap(), "{seq:?}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(build_qn(0).is_err());
        assert!(Quiver::from_adj(vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(build_qn(1).unwrap().mutate(3).is_err());
    }
}
