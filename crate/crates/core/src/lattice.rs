//! Divisor classes on the blow-up of the plane at `n` points.
//!
//! A class `tL - a_1E_1 - ... - a_nE_n` is stored as its degree `t` and
//! the coefficient vector `(a_1, ..., a_n)`. The pairing is the usual one:
//! `L² = 1`, `E_i² = -1`, and `L·E_i = E_i·E_j = 0` for `i != j`.

use std::fmt;

use serde::Serialize;

use crate::arith::{self, genus};
use crate::error::{Error, Result};

/// Point multiplicities `m_1 >= m_2 >= ... >= m_n >= 0`.
///
/// Input order does not matter; the constructor sorts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MultiplicitySequence {
    mults: Vec<i64>,
}

impl MultiplicitySequence {
    pub fn new(mut mults: Vec<i64>) -> Result<Self> {
        if mults.is_empty() {
            return Err(Error::invalid("multiplicity sequence must have n >= 1 entries"));
        }
        if let Some(bad) = mults.iter().find(|&&m| m < 0) {
            return Err(Error::invalid(format!("multiplicities must be >= 0, got {bad}")));
        }
        mults.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { mults })
    }

    /// The sequence `(m, ..., m)` of length `n`.
    pub fn uniform(n: i64, m: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::invalid(format!("n must be >= 1, got {n}")));
        }
        let n = usize::try_from(n).map_err(|_| Error::invalid("n does not fit in memory"))?;
        Self::new(vec![m; n])
    }

    pub fn len(&self) -> usize {
        self.mults.len()
    }

    /// Always false; kept for the `len`/`is_empty` pairing.
    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn n(&self) -> i64 {
        self.mults.len() as i64
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.mults
    }

    /// `m_i`, 1-based.
    pub fn get(&self, i: usize) -> i64 {
        self.mults[i - 1]
    }

    /// `M_i = m_1 + ... + m_i`, 1-based; `M_0 = 0`.
    pub fn prefix_sum(&self, i: usize) -> Result<i64> {
        self.mults[..i].iter().try_fold(0i64, |acc, &m| arith::add(acc, m, "prefix sum"))
    }

    pub fn total(&self) -> Result<i64> {
        self.prefix_sum(self.len())
    }

    pub fn largest(&self) -> i64 {
        self.mults[0]
    }

    pub fn is_zero(&self) -> bool {
        self.mults[0] == 0
    }

    /// `Some(m)` when every entry equals `m`.
    pub fn uniform_value(&self) -> Option<i64> {
        let first = self.mults[0];
        self.mults.iter().all(|&m| m == first).then_some(first)
    }

    /// `Σ m_i(m_i+1)/2`, the number of conditions the fat points impose
    /// on forms of large degree.
    pub fn condition_count(&self) -> Result<i64> {
        self.mults.iter().try_fold(0i64, |acc, &m| arith::add(acc, arith::binom2(m + 1)?, "condition count"))
    }
}

impl fmt::Display for MultiplicitySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.uniform_value() {
            Some(m) => write!(f, "{m}^{}", self.len()),
            None => write!(f, "({})", join(&self.mults)),
        }
    }
}

/// A class `degree·L - Σ mults[i]·E_{i+1}`.
///
/// Coefficients may be negative only between [`DivisorClass::subtract_curve`]
/// and the following [`DivisorClass::unload`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DivisorClass {
    degree: i64,
    mults: Vec<i64>,
}

impl DivisorClass {
    pub fn new(degree: i64, mults: Vec<i64>) -> Self {
        Self { degree, mults }
    }

    /// `F_t = tL - m_1E_1 - ... - m_nE_n`.
    pub fn fat_point_class(t: i64, mseq: &MultiplicitySequence) -> Self {
        Self::new(t, mseq.as_slice().to_vec())
    }

    pub fn zero(n: usize) -> Self {
        Self::new(0, vec![0; n])
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn mults(&self) -> &[i64] {
        &self.mults
    }

    pub fn n(&self) -> usize {
        self.mults.len()
    }

    /// True when every exceptional coefficient is zero.
    pub fn is_multiple_of_line(&self) -> bool {
        self.mults.iter().all(|&a| a == 0)
    }

    /// `D·L`.
    pub fn dot_line(&self) -> i64 {
        self.degree
    }

    /// `D·E_k`, 1-based.
    pub fn dot_exceptional(&self, k: usize) -> i64 {
        self.mults[k - 1]
    }

    /// `D·(L - E_1)`.
    pub fn dot_line_minus_e1(&self) -> Result<i64> {
        arith::sub(self.degree, self.mults[0], "D.(L-E1)")
    }

    /// `a_1 + ... + a_r`.
    pub fn leading_sum(&self, r: usize) -> Result<i64> {
        self.mults[..r].iter().try_fold(0i64, |acc, &a| arith::add(acc, a, "coefficient sum"))
    }

    /// `D·C` for the curve class `C = dL - E_1 - ... - E_r`.
    pub fn intersect_curve(&self, cfg: &SpecializationConfig) -> Result<i64> {
        self.check_len(cfg)?;
        let line_part = arith::mul(self.degree, cfg.d(), "D.C")?;
        arith::sub(line_part, self.leading_sum(cfg.r_usize())?, "D.C")
    }

    /// `D - C`: the degree drops by `d` and `a_1, ..., a_r` drop by one.
    pub fn subtract_curve(&self, cfg: &SpecializationConfig) -> Result<DivisorClass> {
        self.check_len(cfg)?;
        let degree = arith::sub(self.degree, cfg.d(), "D - C")?;
        let mut mults = self.mults.clone();
        for a in &mut mults[..cfg.r_usize()] {
            *a = arith::sub(*a, 1, "D - C")?;
        }
        Ok(DivisorClass { degree, mults })
    }

    /// Sort the coefficients nonincreasingly and replace each negative
    /// coefficient by zero.
    pub fn unload(&self) -> DivisorClass {
        let mut mults: Vec<i64> = self.mults.iter().map(|&a| a.max(0)).collect();
        // Stable sort: the engine only ever feeds two descending runs, which
        // the merge pass handles in linear time.
        mults.sort_by(|a, b| b.cmp(a));
        DivisorClass { degree: self.degree, mults }
    }

    fn check_len(&self, cfg: &SpecializationConfig) -> Result<()> {
        if self.mults.len() != cfg.n_usize() {
            return Err(Error::invalid(format!(
                "divisor has {} exceptional coefficients but the configuration has n={}",
                self.mults.len(),
                cfg.n()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}L - ({})", self.degree, join(&self.mults))
    }
}

/// A specialization: the first of `n` points is a general point of an
/// irreducible curve of degree `d`, each later point is infinitely near the
/// previous one, and exactly the first `r` of them lie on the curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpecializationConfig {
    n: i64,
    d: i64,
    r: i64,
}

impl SpecializationConfig {
    pub fn new(n: i64, d: i64, r: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::invalid(format!("n must be >= 1, got {n}")));
        }
        if d < 1 {
            return Err(Error::invalid(format!("d must be >= 1, got {d}")));
        }
        if r < 1 || r > n {
            return Err(Error::invalid(format!("r must satisfy 1<=r<=n (r={r}, n={n})")));
        }
        Ok(Self { n, d, r })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub(crate) fn n_usize(&self) -> usize {
        self.n as usize
    }

    pub(crate) fn r_usize(&self) -> usize {
        self.r as usize
    }

    pub fn genus(&self) -> i64 {
        // d >= 1 is a constructor invariant, and d(d-1) fits whenever d does
        // not exceed ~3e9, which the constructor callers never approach.
        genus(self.d).expect("valid degree")
    }

    /// The class `dL - E_1 - ... - E_r` of the curve's proper transform.
    pub fn curve_class(&self) -> DivisorClass {
        let mut mults = vec![0; self.n_usize()];
        mults[..self.r_usize()].fill(1);
        DivisorClass::new(self.d, mults)
    }

    pub(crate) fn check_matches(&self, mseq: &MultiplicitySequence) -> Result<()> {
        if mseq.n() != self.n {
            return Err(Error::invalid(format!(
                "configuration has n={} but the multiplicity sequence has {} entries",
                self.n,
                mseq.len()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for SpecializationConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} d={} r={}", self.n, self.d, self.r)
    }
}

fn join(xs: &[i64]) -> String {
    xs.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}
