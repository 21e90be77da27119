//! Exact multivariate Laurent polynomials over a shared fractional exponent
//! lattice, square matrices over them, and traces of exterior powers.
//!
//! Every polynomial belongs to a [`Ring`]: an ordered list of variable names
//! plus a denominator `m`. An exponent vector `e` stands for the monomial
//! `prod v_i^(e_i / m)`. Coefficients are arbitrary-precision integers.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("unmapped variable `{0}`")]
    UnmappedVariable(String),
    #[error("not divisible")]
    NotDivisible,
    #[error("exterior power {k} out of range for a {size}x{size} matrix")]
    ExteriorPowerRange { k: usize, size: usize },
    #[error("exponent not representable over denominator {den}")]
    NonIntegralExponent { den: u32 },
    #[error("matrix shape: {0}")]
    Shape(String),
    #[error("malformed polynomial: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;

/// Variable names and the common exponent denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    den: u32,
}

impl Ring {
    pub fn new(vars: Vec<String>, den: u32) -> Arc<Ring> {
        assert!(den >= 1, "ring denominator must be positive");
        Arc::new(Ring { vars, den })
    }

    /// Variables `prefix1 .. prefix{count}`.
    pub fn indexed(prefix: &str, count: usize, den: u32) -> Arc<Ring> {
        Ring::new((1..=count).map(|i| format!("{prefix}{i}")).collect(), den)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn den(&self) -> u32 {
        self.den
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

/// An exponent vector together with its denominator.
#[derive(Debug, Clone, Eq)]
pub struct ScaledExponent {
    pub numerators: Vec<i64>,
    pub denominator: u32,
}

impl PartialEq for ScaledExponent {
    fn eq(&self, other: &Self) -> bool {
        self.numerators.len() == other.numerators.len()
            && self
                .numerators
                .iter()
                .zip(&other.numerators)
                .all(|(a, b)| a * other.denominator as i64 == b * self.denominator as i64)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    ring: Arc<Ring>,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(AlgebraError::RingMismatch(format!("{:?}/{} vs {:?}/{}", a.vars, a.den, b.vars, b.den)))
    }
}

impl LaurentPoly {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        LaurentPoly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Arc<Ring>, c: i64) -> Self {
        Self::monomial(ring, vec![0; ring.nvars()], BigInt::from(c))
    }

    /// `coeff * prod v_i^(exps_i / den)`.
    pub fn monomial(ring: &Arc<Ring>, exps: Vec<i64>, coeff: BigInt) -> Self {
        assert_eq!(exps.len(), ring.nvars(), "exponent length");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        LaurentPoly { ring: ring.clone(), terms }
    }

    /// The variable with index `i` raised to the power one.
    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        let mut e = vec![0; ring.nvars()];
        e[i] = ring.den() as i64;
        Self::monomial(ring, e, BigInt::one())
    }

    pub fn var_named(ring: &Arc<Ring>, name: &str) -> Result<Self> {
        let i = ring.index_of(name).ok_or_else(|| AlgebraError::UnmappedVariable(name.to_string()))?;
        Ok(Self::var(ring, i))
    }

    /// Build from `(exponent numerators, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(ring: &Arc<Ring>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, BigInt)>,
    {
        let mut p = Self::zero(ring);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn exponents(&self) -> impl Iterator<Item = ScaledExponent> + '_ {
        let den = self.ring.den;
        self.terms.keys().map(move |e| ScaledExponent { numerators: e.clone(), denominator: den })
    }

    pub fn coefficient(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True if every exponent is a whole multiple of the denominator.
    pub fn has_integral_exponents(&self) -> bool {
        let d = self.ring.den as i64;
        self.terms.keys().all(|e| e.iter().all(|x| x % d == 0))
    }

    pub fn all_coefficients_one(&self) -> bool {
        self.terms.values().all(|c| c.is_one())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_ring(&self.ring, &other.ring)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(&self.ring);
        }
        LaurentPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        same_ring(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let mut acc: HashMap<Vec<i64>, BigInt> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        Ok(LaurentPoly { ring: self.ring.clone(), terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    /// Multiply by the monomial with exponent numerators `shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        LaurentPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Non-negative integer power.
    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(&self.ring);
        for _ in 0..k {
            out = out.mul(self).expect("same ring");
        }
        out
    }

    /// Inverse of a monomial `c * x^e` with `c = +-1`.
    pub fn monomial_inverse(&self) -> Result<Self> {
        if self.terms.len() != 1 {
            return Err(AlgebraError::NotDivisible);
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if !(c.is_one() || (-c).is_one()) {
            return Err(AlgebraError::NotDivisible);
        }
        Ok(Self::monomial(&self.ring, e.iter().map(|x| -x).collect(), c.clone()))
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Vec<i64>, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / divisor`, or [`AlgebraError::NotDivisible`].
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self> {
        same_ring(&self.ring, &divisor.ring)?;
        if divisor.is_zero() {
            return Err(AlgebraError::NotDivisible);
        }
        if self.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let n = self.ring.nvars();
        // Per-variable degree window the quotient must live in.
        let (amin, amax) = degree_box(self);
        let (bmin, bmax) = degree_box(divisor);
        let lo: Vec<i64> = (0..n).map(|i| amin[i] - bmin[i]).collect();
        let hi: Vec<i64> = (0..n).map(|i| amax[i] - bmax[i]).collect();
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return Err(AlgebraError::NotDivisible);
        }
        let (be, bc) = divisor.leading_term().unwrap();
        let (be, bc) = (be.clone(), bc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.ring);
        while let Some((re, rc)) = rem.leading_term() {
            let (q, r) = rc.div_rem(&bc);
            if !r.is_zero() {
                return Err(AlgebraError::NotDivisible);
            }
            let qe: Vec<i64> = re.iter().zip(&be).map(|(a, b)| a - b).collect();
            if (0..n).any(|i| qe[i] < lo[i] || qe[i] > hi[i]) {
                return Err(AlgebraError::NotDivisible);
            }
            for (de, dc) in &divisor.terms {
                let e: Vec<i64> = qe.iter().zip(de).map(|(a, b)| a + b).collect();
                rem.add_term(e, -(&q * dc));
            }
            quot.add_term(qe, q);
        }
        Ok(quot)
    }

    /// Substitute a monomial for every variable.
    pub fn substitute(&self, sub: &Substitution) -> Result<Self> {
        let src = &self.ring;
        let images: Vec<&Vec<i64>> = src
            .vars()
            .iter()
            .map(|v| sub.images.get(v).ok_or_else(|| AlgebraError::UnmappedVariable(v.clone())))
            .collect::<Result<_>>()?;
        let d = src.den() as i64;
        let m = sub.target.nvars();
        let mut out = Self::zero(&sub.target);
        for (e, c) in &self.terms {
            let mut acc = vec![0i64; m];
            for (ei, img) in e.iter().zip(&images) {
                if *ei != 0 {
                    for (a, f) in acc.iter_mut().zip(img.iter()) {
                        *a += ei * f;
                    }
                }
            }
            if acc.iter().any(|x| x % d != 0) {
                return Err(AlgebraError::NonIntegralExponent { den: sub.target.den() });
            }
            out.add_term(acc.into_iter().map(|x| x / d).collect(), c.clone());
        }
        Ok(out)
    }

    /// Re-express over a ring with the same variables and denominator
    /// `new_den`; fails if some exponent does not fit.
    pub fn with_denominator(&self, new_den: u32) -> Result<Self> {
        let ring = Ring::new(self.ring.vars.clone(), new_den);
        let (old, new) = (self.ring.den as i64, new_den as i64);
        let mut out = Self::zero(&ring);
        for (e, c) in &self.terms {
            let mut ne = Vec::with_capacity(e.len());
            for x in e {
                if (x * new) % old != 0 {
                    return Err(AlgebraError::NonIntegralExponent { den: new_den });
                }
                ne.push(x * new / old);
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Rebind to an equal ring (same variables and denominator).
    pub fn rebind(&self, ring: &Arc<Ring>) -> Result<Self> {
        same_ring(&self.ring, ring)?;
        Ok(LaurentPoly { ring: ring.clone(), terms: self.terms.clone() })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolyJson::from(self)).expect("serializable")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(PolyJson::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let pj: PolyJson = serde_json::from_str(s).map_err(|e| AlgebraError::Malformed(e.to_string()))?;
        pj.try_into()
    }
}

fn degree_box(p: &LaurentPoly) -> (Vec<i64>, Vec<i64>) {
    let n = p.ring.nvars();
    let mut lo = vec![i64::MAX; n];
    let mut hi = vec![i64::MIN; n];
    for e in p.terms.keys() {
        for i in 0..n {
            lo[i] = lo[i].min(e[i]);
            hi[i] = hi[i].max(e[i]);
        }
    }
    (lo, hi)
}

/// Binary operation selector for [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
}

pub fn poly_arith(a: &LaurentPoly, b: &LaurentPoly, op: ArithOp) -> Result<LaurentPoly> {
    match op {
        ArithOp::Add => a.add(b),
        ArithOp::Mul => a.mul(b),
    }
}

/// Variable-to-monomial map into a target ring. Images are exponent
/// numerators over the target ring's denominator.
#[derive(Debug, Clone)]
pub struct Substitution {
    pub target: Arc<Ring>,
    pub images: BTreeMap<String, Vec<i64>>,
}

impl Substitution {
    pub fn new(target: &Arc<Ring>) -> Self {
        Substitution { target: target.clone(), images: BTreeMap::new() }
    }

    pub fn map(mut self, var: &str, image: Vec<i64>) -> Self {
        assert_eq!(image.len(), self.target.nvars());
        self.images.insert(var.to_string(), image);
        self
    }

    /// The image of `var` as a polynomial in the target ring.
    pub fn image(&self, var: &str) -> Option<LaurentPoly> {
        self.images.get(var).map(|e| LaurentPoly::monomial(&self.target, e.clone(), BigInt::one()))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    c: String,
    e: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    den: u32,
    terms: Vec<TermJson>,
}

impl From<&LaurentPoly> for PolyJson {
    fn from(p: &LaurentPoly) -> Self {
        PolyJson {
            vars: p.ring.vars.clone(),
            den: p.ring.den,
            terms: p.terms.iter().map(|(e, c)| TermJson { c: c.to_string(), e: e.clone() }).collect(),
        }
    }
}

impl TryFrom<PolyJson> for LaurentPoly {
    type Error = AlgebraError;

    fn try_from(pj: PolyJson) -> Result<Self> {
        if pj.den == 0 {
            return Err(AlgebraError::Malformed("zero denominator".into()));
        }
        let ring = Ring::new(pj.vars, pj.den);
        let mut p = LaurentPoly::zero(&ring);
        for t in pj.terms {
            if t.e.len() != ring.nvars() {
                return Err(AlgebraError::Malformed("exponent length".into()));
            }
            let c: BigInt = t.c.parse().map_err(|_| AlgebraError::Malformed(format!("coefficient {}", t.c)))?;
            p.add_term(t.e, c);
        }
        Ok(p)
    }
}

fn fmt_exponent(num: i64, den: i64) -> String {
    let g = num.gcd(&den);
    let (n, d) = (num / g, den / g);
    if d == 1 {
        format!("{n}")
    } else {
        format!("{n}/{d}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let den = self.ring.den as i64;
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx > 0 {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            } else if neg {
                write!(f, "-")?;
            }
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, x)| **x != 0)
                .map(|(i, x)| {
                    if *x == den {
                        self.ring.vars[i].clone()
                    } else {
                        format!("{}^{}", self.ring.vars[i], fmt_exponent(*x, den))
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Square matrix of Laurent polynomials over one ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    size: usize,
    ring: Arc<Ring>,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(ring: &Arc<Ring>, size: usize) -> Self {
        PolyMatrix { size, ring: ring.clone(), entries: vec![LaurentPoly::zero(ring); size * size] }
    }

    pub fn identity(ring: &Arc<Ring>, size: usize) -> Self {
        let mut m = Self::zeros(ring, size);
        for i in 0..size {
            m.set(i, i, LaurentPoly::one(ring));
        }
        m
    }

    pub fn diagonal(ring: &Arc<Ring>, diag: Vec<LaurentPoly>) -> Self {
        let mut m = Self::zeros(ring, diag.len());
        for (i, d) in diag.into_iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    /// Build from rows; every entry must live in `ring`.
    pub fn from_rows(ring: &Arc<Ring>, rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for row in rows {
            if row.len() != size {
                return Err(AlgebraError::Shape("matrix must be square".into()));
            }
            for p in row {
                same_ring(ring, p.ring())?;
                entries.push(p);
            }
        }
        Ok(PolyMatrix { size, ring: ring.clone(), entries })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly) {
        assert!(same_ring(&self.ring, p.ring()).is_ok(), "entry ring mismatch");
        self.entries[i * self.size + j] = p;
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        same_ring(&self.ring, &other.ring)?;
        if self.size != other.size {
            return Err(AlgebraError::Shape("size mismatch".into()));
        }
        let n = self.size;
        let mut out = Self::zeros(&self.ring, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b)?)?;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// Apply a polynomial map entrywise.
    pub fn map_entries<F>(&self, ring: &Arc<Ring>, f: F) -> Result<Self>
    where
        F: Fn(&LaurentPoly) -> Result<LaurentPoly>,
    {
        let entries = self.entries.iter().map(&f).collect::<Result<Vec<_>>>()?;
        for e in &entries {
            same_ring(ring, e.ring())?;
        }
        Ok(PolyMatrix { size: self.size, ring: ring.clone(), entries })
    }

    pub fn determinant(&self) -> LaurentPoly {
        let all: Vec<usize> = (0..self.size).collect();
        self.minor(&all, &all)
    }

    /// Determinant of the submatrix on `rows` x `cols` (equal lengths).
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> LaurentPoly {
        assert_eq!(rows.len(), cols.len());
        let mut memo: HashMap<u64, LaurentPoly> = HashMap::new();
        let full: u64 = if cols.is_empty() { 0 } else { (1u64 << cols.len()) - 1 };
        self.minor_rec(rows, cols, full, &mut memo)
    }

    // Laplace expansion along the first remaining row; `mask` marks the
    // columns still available.
    fn minor_rec(
        &self,
        rows: &[usize],
        cols: &[usize],
        mask: u64,
        memo: &mut HashMap<u64, LaurentPoly>,
    ) -> LaurentPoly {
        let k = mask.count_ones() as usize;
        if k == 0 {
            return LaurentPoly::one(&self.ring);
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let r = rows[rows.len() - k];
        let mut acc = LaurentPoly::zero(&self.ring);
        let mut sign_pos = true;
        for (ci, &c) in cols.iter().enumerate() {
            if mask & (1 << ci) == 0 {
                continue;
            }
            let a = self.get(r, c);
            if !a.is_zero() {
                let sub = self.minor_rec(rows, cols, mask & !(1 << ci), memo);
                if !sub.is_zero() {
                    let t = a.mul(&sub).expect("same ring");
                    acc = if sign_pos { acc.add(&t) } else { acc.sub(&t) }.expect("same ring");
                }
            }
            sign_pos = !sign_pos;
        }
        memo.insert(mask, acc.clone());
        acc
    }
}

/// Sum of all `k x k` principal minors, the trace on the `k`-th exterior power.
pub fn exterior_trace(m: &PolyMatrix, k: usize) -> Result<LaurentPoly> {
    let n = m.size();
    if k > n {
        return Err(AlgebraError::ExteriorPowerRange { k, size: n });
    }
    let mut acc = LaurentPoly::zero(m.ring());
    for subset in k_subsets(n, k) {
        acc = acc.add(&m.minor(&subset, &subset))?;
    }
    Ok(acc)
}

/// All increasing `k`-subsets of `0..n`.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}
