//! Expected Hilbert function data, the best-configuration search, and the
//! verification predicates built on top of the bounds.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{self, binom2, div_ceil, divides, isqrt};
use crate::closed_form::{thm_alpha_a, thm_alpha_b, thm_alpha_c, thm_tau_a, thm_tau_b};
use crate::engine::{alpha_lower_bound, tau_upper_bound, BoundCertificate, TraceMode};
use crate::error::{Error, Result};
use crate::lattice::{MultiplicitySequence, SpecializationConfig};

fn check_nm(n: i64, m: i64) -> Result<()> {
    if n < 1 {
        return Err(Error::invalid(format!("n must be >= 1, got {n}")));
    }
    if m < 0 {
        return Err(Error::invalid(format!("m must be >= 0, got {m}")));
    }
    Ok(())
}

/// Number of conditions `n·m(m+1)/2` imposed by `n` fat points.
fn conditions(n: i64, m: i64) -> Result<i64> {
    arith::mul(n, binom2(m + 1)?, "n C(m+1,2)")
}

/// `max(0, C(t+2,2) - N)`.
fn expected_from_conditions(n_conditions: i64, t: i64) -> Result<i64> {
    Ok(arith::sub(binom2(t + 2)?, n_conditions, "expected Hilbert function")?.max(0))
}

/// Least `t >= 0` with `C(t+2,2) > N` (strict) or `>= N`.
fn least_degree(n_conditions: i64, strict: bool) -> Result<i64> {
    let ok = |t: i64| -> Result<bool> {
        let v = binom2(t + 2)?;
        Ok(if strict { v > n_conditions } else { v >= n_conditions })
    };
    // C(t+2,2) ≈ t²/2, so start just below √(2N) and walk.
    let mut t = (isqrt(arith::mul(2, n_conditions, "2N")?)? - 2).max(0);
    while t > 0 && ok(t - 1)? {
        t -= 1;
    }
    while !ok(t)? {
        t += 1;
    }
    Ok(t)
}

/// `max(0, C(t+2,2) - n·C(m+1,2))`.
pub fn expected_hilbert(n: i64, m: i64, t: i64) -> Result<i64> {
    check_nm(n, m)?;
    if t < 0 {
        return Err(Error::invalid(format!("t must be >= 0, got {t}")));
    }
    expected_from_conditions(conditions(n, m)?, t)
}

/// Conjectural `α(n;m)`.
pub fn alpha_c(n: i64, m: i64) -> Result<i64> {
    check_nm(n, m)?;
    least_degree(conditions(n, m)?, true)
}

/// Conjectural `τ(n;m)`.
pub fn tau_c(n: i64, m: i64) -> Result<i64> {
    check_nm(n, m)?;
    least_degree(conditions(n, m)?, false)
}

/// Least `t` with `C(t+2,2) > Σ C(m_i+1,2)`; an upper bound for `α(m)`.
pub fn alpha_c_seq(mseq: &MultiplicitySequence) -> Result<i64> {
    least_degree(mseq.condition_count()?, true)
}

/// Least `t` with `C(t+2,2) >= Σ C(m_i+1,2)`; a lower bound for `τ(m)`.
pub fn tau_c_seq(mseq: &MultiplicitySequence) -> Result<i64> {
    least_degree(mseq.condition_count()?, false)
}

/// Betti data of the expected minimal free resolution
/// `0 → R[-α-2]^dd ⊕ R[-α-1]^c → R[-α-1]^b ⊕ R[-α]^a → I → 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Resolution {
    pub alpha: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub dd: i64,
}

impl fmt::Display for Resolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={} a={} b={} c={} d={}", self.alpha, self.a, self.b, self.c, self.dd)
    }
}

pub fn conjectural_resolution(n: i64, m: i64) -> Result<Resolution> {
    check_nm(n, m)?;
    if m < 1 {
        return Err(Error::invalid("resolution needs m >= 1"));
    }
    let alpha = alpha_c(n, m)?;
    let a = expected_hilbert(n, m, alpha)?;
    let next = expected_hilbert(n, m, alpha + 1)?;
    let three_a = arith::mul(3, a, "3a")?;
    let b = (next - three_a).max(0);
    let c = (three_a - next).max(0);
    Ok(Resolution { alpha, a, b, c, dd: a + b - c - 1 })
}

/// Bound sources for [`best_bounds`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Method {
    Algorithm,
    ThmA,
    ThmB,
    ThmC,
    /// `α >= 1` for any nonzero sequence; used when nothing else applies.
    Trivial,
}

impl Method {
    pub const SEARCHABLE: [Method; 4] = [Method::Algorithm, Method::ThmA, Method::ThmB, Method::ThmC];
    pub const THEOREMS: [Method; 3] = [Method::ThmA, Method::ThmB, Method::ThmC];

    pub fn name(self) -> &'static str {
        match self {
            Method::Algorithm => "algorithm",
            Method::ThmA => "thm-a",
            Method::ThmB => "thm-b",
            Method::ThmC => "thm-c",
            Method::Trivial => "trivial",
        }
    }

    pub fn parse(s: &str) -> Result<Method> {
        match s {
            "algorithm" => Ok(Method::Algorithm),
            "thm-a" => Ok(Method::ThmA),
            "thm-b" => Ok(Method::ThmB),
            "thm-c" => Ok(Method::ThmC),
            _ => Err(Error::invalid(format!("unknown method {s:?} (expected algorithm, thm-a, thm-b or thm-c)"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The `(d, r)` rectangle searched by [`best_bounds`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchGrid {
    pub d: RangeInclusive<i64>,
    pub r: RangeInclusive<i64>,
}

impl SearchGrid {
    /// `1 <= d <= ⌊√n⌋ + 2` and `1 <= r <= n`.
    pub fn default_for(n: i64) -> Result<Self> {
        Ok(Self { d: 1..=isqrt(n)? + 2, r: 1..=n })
    }

    fn configs(&self, n: i64) -> Result<Vec<SpecializationConfig>> {
        if self.d.is_empty() || self.r.is_empty() {
            return Err(Error::invalid("search ranges must be nonempty"));
        }
        if *self.d.start() < 1 {
            return Err(Error::invalid(format!("d range must start at >= 1, got {}", self.d.start())));
        }
        if *self.r.start() < 1 || *self.r.end() > n {
            return Err(Error::invalid(format!(
                "r range must lie in 1..={n}, got {}..={}",
                self.r.start(),
                self.r.end()
            )));
        }
        let mut out = Vec::new();
        for d in self.d.clone() {
            for r in self.r.clone() {
                out.push(SpecializationConfig::new(n, d, r)?);
            }
        }
        Ok(out)
    }
}

/// One bound together with where it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BestBound {
    pub value: i64,
    pub method: Method,
    /// `None` only for [`Method::Trivial`].
    pub config: Option<SpecializationConfig>,
    /// Full certificate when the bound came from the algorithm.
    pub certificate: Option<BoundCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BestBounds {
    pub alpha: BestBound,
    /// `None` when no searched configuration certifies any `τ` bound.
    pub tau: Option<BestBound>,
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    value: i64,
    method: Method,
    config: SpecializationConfig,
}

impl Candidate {
    /// Deterministic tie-break: smaller d, then smaller r, then method order.
    fn tie_key(&self) -> (i64, i64, Method) {
        (self.config.d(), self.config.r(), self.method)
    }
}

/// Turn "hypotheses not met" and "no certificate" into `None`.
fn applicable(res: Result<i64>) -> Result<Option<i64>> {
    match res {
        Ok(v) => Ok(Some(v)),
        Err(Error::Precondition(_)) | Err(Error::NoCertificate { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn candidates_for(
    mseq: &MultiplicitySequence,
    cfg: &SpecializationConfig,
    methods: &[Method],
) -> Result<(Vec<Candidate>, Vec<Candidate>)> {
    let mut alpha = Vec::new();
    let mut tau = Vec::new();
    let push = |into: &mut Vec<Candidate>, method, v: Option<i64>| {
        if let Some(value) = v {
            into.push(Candidate { value, method, config: *cfg });
        }
    };
    for &method in methods {
        match method {
            Method::Algorithm => {
                let a = alpha_lower_bound(mseq, cfg, TraceMode::TerminalOnly)?.value;
                push(&mut alpha, method, Some(a));
                let t = applicable(tau_upper_bound(mseq, cfg, TraceMode::TerminalOnly).map(|c| c.value))?;
                push(&mut tau, method, t);
            }
            Method::ThmA => {
                push(&mut alpha, method, applicable(thm_alpha_a(mseq, cfg))?);
                push(&mut tau, method, applicable(thm_tau_a(mseq, cfg))?);
            }
            Method::ThmB => {
                push(&mut alpha, method, applicable(thm_alpha_b(mseq, cfg))?);
                push(&mut tau, method, applicable(thm_tau_b(mseq, cfg))?);
            }
            Method::ThmC => {
                if let Some(m) = mseq.uniform_value() {
                    push(&mut alpha, method, applicable(thm_alpha_c(mseq.n(), m, cfg))?);
                }
            }
            Method::Trivial => {}
        }
    }
    Ok((alpha, tau))
}

fn materialize(c: Candidate, mseq: &MultiplicitySequence, alpha: bool) -> Result<BestBound> {
    let certificate = if c.method == Method::Algorithm {
        let cert = if alpha {
            alpha_lower_bound(mseq, &c.config, TraceMode::Full)?
        } else {
            tau_upper_bound(mseq, &c.config, TraceMode::Full)?
        };
        Some(cert)
    } else {
        None
    };
    Ok(BestBound { value: c.value, method: c.method, config: Some(c.config), certificate })
}

/// Best `α` lower bound and `τ` upper bound over a grid of configurations.
///
/// Configurations outside a method's hypotheses are skipped. Ties go to
/// the smaller `d`, then the smaller `r`, so the result does not depend on
/// evaluation order.
pub fn best_bounds(mseq: &MultiplicitySequence, grid: &SearchGrid, methods: &[Method]) -> Result<BestBounds> {
    if methods.is_empty() {
        return Err(Error::invalid("at least one method is required"));
    }
    let configs = grid.configs(mseq.n())?;
    let per_config: Vec<(Vec<Candidate>, Vec<Candidate>)> =
        configs.par_iter().map(|cfg| candidates_for(mseq, cfg, methods)).collect::<Result<_>>()?;
    let (alpha_all, tau_all): (Vec<_>, Vec<_>) = per_config.into_iter().unzip();
    let best_alpha =
        alpha_all.into_iter().flatten().min_by(|x, y| y.value.cmp(&x.value).then(x.tie_key().cmp(&y.tie_key())));
    let best_tau =
        tau_all.into_iter().flatten().min_by(|x, y| x.value.cmp(&y.value).then(x.tie_key().cmp(&y.tie_key())));

    let trivial = i64::from(!mseq.is_zero());
    let alpha = match best_alpha {
        Some(c) if c.value >= trivial => materialize(c, mseq, true)?,
        _ => BestBound { value: trivial, method: Method::Trivial, config: None, certificate: None },
    };
    let tau = best_tau.map(|c| materialize(c, mseq, false)).transpose()?;
    Ok(BestBounds { alpha, tau })
}

/// Result of trying to pin down the whole Hilbert function of `I(n;m)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertVerdict {
    pub verified: bool,
    pub bounds: BestBounds,
}

/// When a lower bound for `α` meets an upper bound for `τ`, the Hilbert
/// function equals its expected value in every degree.
///
/// Closed forms are tried first; the algorithm is run only if they do not
/// settle the question.
pub fn verify_hilbert(n: i64, m: i64, grid: &SearchGrid) -> Result<HilbertVerdict> {
    check_verifier_args(n, m)?;
    let mseq = MultiplicitySequence::uniform(n, m)?;
    let settles = |b: &BestBounds| b.tau.as_ref().is_some_and(|t| b.alpha.value >= t.value);
    let quick = best_bounds(&mseq, grid, &Method::THEOREMS)?;
    if settles(&quick) {
        return Ok(HilbertVerdict { verified: true, bounds: quick });
    }
    let full = best_bounds(&mseq, grid, &Method::SEARCHABLE)?;
    Ok(HilbertVerdict { verified: settles(&full), bounds: full })
}

fn check_verifier_args(n: i64, m: i64) -> Result<()> {
    if n < 10 {
        return Err(Error::invalid(format!("n must be >= 10, got {n}")));
    }
    if m < 1 {
        return Err(Error::invalid(format!("m must be >= 1, got {m}")));
    }
    Ok(())
}

/// Outcome of [`nagata_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NagataVerdict {
    /// The closed forms at `d = ⌊√n⌋` give `α(n;m) >= m√n`.
    Holds,
    /// The criterion does not apply to this `m`.
    NotCovered,
    /// `n` is a perfect square, where `α(n;m) >= m√n` is classical.
    KnownSquare,
}

/// Sufficient condition for `α(n;m) >= m√n` coming from the closed forms
/// with `d = ⌊√n⌋` and `Δ = n - d²`.
pub fn nagata_check(n: i64, m: i64) -> Result<NagataVerdict> {
    check_verifier_args(n, m)?;
    let d = isqrt(n)?;
    let delta = n - d * d;
    if delta == 0 {
        return Ok(NagataVerdict::KnownSquare);
    }
    let md = arith::mul(m, delta, "m Delta")?;
    let holds = if delta % 2 == 1 {
        m <= d * (d - 3) || md <= d * (d - 2)
    } else {
        arith::mul(2, m, "2m")? <= d * (d - 3) || md <= 2 * d * d
    };
    Ok(if holds { NagataVerdict::Holds } else { NagataVerdict::NotCovered })
}

/// `m <= (n - 5√n)/2`, decided by squaring.
pub fn nagata_small_m(n: i64, m: i64) -> Result<bool> {
    check_verifier_args(n, m)?;
    let slack = n - 2 * m;
    Ok(slack >= 0 && arith::mul(slack, slack, "(n-2m)^2")? >= arith::mul(25, n, "25n")?)
}

/// Largest `j` with `j(j+1) <= i`, for `i >= 0`.
pub fn l_index(i: i64) -> Result<i64> {
    if i < 0 {
        return Err(Error::invalid(format!("l_i needs i >= 0, got {i}")));
    }
    // j(j+1) <= i  iff  (2j+1)² <= 4i+1.
    let root = isqrt(arith::add(arith::mul(4, i, "4i")?, 1, "4i+1")?)?;
    Ok((root - 1) / 2)
}

/// The residue window `[lo, hi]` for `x` when `n = σ²`.
pub fn square_window(sigma: i64) -> Result<(i64, i64)> {
    if sigma < 4 {
        return Err(Error::invalid(format!("sigma must be >= 4, got {sigma}")));
    }
    Ok(if sigma % 2 == 0 {
        (sigma / 2 - l_index(sigma)?, sigma / 2)
    } else {
        ((sigma + 1) / 2 - l_index(2 * sigma)?, (sigma + 1) / 2)
    })
}

/// True when `m = x + k(σ-1)` for some `k >= 0` and `x` in the window.
pub fn square_hilbert_check(sigma: i64, m: i64) -> Result<bool> {
    let (lo, hi) = square_window(sigma)?;
    if m < 1 {
        return Err(Error::invalid(format!("m must be >= 1, got {m}")));
    }
    Ok((lo..=hi).any(|x| m >= x && divides(sigma - 1, m - x)))
}

/// `(d, ε)` with `d >= 3`, `ε >= 1`, `n = d² + 2ε`, and `2ε <= (d+1)(d+3)`.
fn d_eps_pairs(n: i64) -> impl Iterator<Item = (i64, i64)> {
    (3..)
        .take_while(move |d| d * d < n)
        .filter(move |d| (n - d * d) % 2 == 0)
        .map(move |d| (d, (n - d * d) / 2))
        .filter(|&(d, e)| 2 * e <= (d + 1) * (d + 3))
}

/// Multiplicities `m <= max_m` covered by the four range families for `n`.
pub fn corollary_ranges(n: i64, max_m: i64) -> BTreeSet<i64> {
    let mut out = BTreeSet::new();
    let mut add = |lo: i64, hi: i64| out.extend(lo.max(1)..=hi.min(max_m));
    for (d, e) in d_eps_pairs(n) {
        // (d-1)(d-2)/(2ε) <= m < (d+1)(d+2)/(2ε)
        add(div_ceil((d - 1) * (d - 2), 2 * e), div_ceil((d + 1) * (d + 2), 2 * e) - 1);
        let mut i = 1;
        while i * e <= d {
            let base = 2 * i * (d * d + e);
            let dd = i * d * d;
            for (x, y) in
                [((d - 1) * (d - 2), d * (d - 1) / 2), (d * (d - 1), d * (d + 1) / 2), (d * (d + 1), d * (d + 3) / 2)]
            {
                add(div_ceil(base + x, 2 * e), (dd + y).div_euclid(e));
            }
            i += 1;
        }
    }
    out
}

/// `σ` when `n = σ²` with `σ >= 4`.
fn square_root_of(n: i64) -> Option<i64> {
    let s = n.isqrt();
    (s * s == n && s >= 4).then_some(s)
}

/// The set `V_n ∩ [1, max_m]`: multiplicities whose Hilbert function is
/// determined by the range families or, for square `n`, the residue
/// criterion.
pub fn hilbert_range_set(n: i64, max_m: i64) -> Result<BTreeSet<i64>> {
    if n < 1 || max_m < 0 {
        return Err(Error::invalid(format!("need n >= 1 and max_m >= 0, got n={n}, max_m={max_m}")));
    }
    let mut out = corollary_ranges(n, max_m);
    if let Some(sigma) = square_root_of(n) {
        for m in 1..=max_m {
            if square_hilbert_check(sigma, m)? {
                out.insert(m);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    fn apply(self, d: i64) -> i64 {
        match self {
            Sign::Minus => d - 1,
            Sign::Plus => d + 1,
        }
    }

    fn bump(self) -> i64 {
        match self {
            Sign::Minus => 0,
            Sign::Plus => 1,
        }
    }
}

/// Which explicit family an `(n, m)` resolution comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ResolutionCase {
    /// `n = d²+2ε`, `m = d(d±1)/(2ε)`.
    LinearA { d: i64, eps: i64, sign: Sign },
    /// `n = d²+2ε`, `m = (d(d±1)/2 - 1)/ε`.
    LinearB { d: i64, eps: i64, sign: Sign },
    /// `n = d²+2`, `m = d² + d(d±1)/2`.
    NearSquare { d: i64, sign: Sign },
    /// `n = σ²` with `σ` even and `m` in the residue window.
    EvenSquare { sigma: i64 },
}

impl fmt::Display for ResolutionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pm = |s: &Sign| if *s == Sign::Minus { '-' } else { '+' };
        match self {
            ResolutionCase::LinearA { d, eps, sign } => write!(f, "linear-a d={d} eps={eps} sign={}", pm(sign)),
            ResolutionCase::LinearB { d, eps, sign } => write!(f, "linear-b d={d} eps={eps} sign={}", pm(sign)),
            ResolutionCase::NearSquare { d, sign } => write!(f, "near-square d={d} sign={}", pm(sign)),
            ResolutionCase::EvenSquare { sigma } => write!(f, "even-square sigma={sigma}"),
        }
    }
}

fn explicit_cases(n: i64, m: i64) -> Vec<(ResolutionCase, Resolution)> {
    let mut out = Vec::new();
    let mut d = 3;
    while d * d < n {
        if (n - d * d) % 2 == 0 {
            let eps = (n - d * d) / 2;
            for sign in [Sign::Minus, Sign::Plus] {
                let num = d * sign.apply(d);
                if num == 2 * eps * m {
                    let alpha = m * d + d - 1 + sign.bump();
                    out.push((
                        ResolutionCase::LinearA { d, eps, sign },
                        Resolution { alpha, a: alpha + 1, b: 0, c: alpha, dd: 0 },
                    ));
                }
            }
            for sign in [Sign::Minus, Sign::Plus] {
                let num = d * sign.apply(d) - 2;
                if num == 2 * eps * m {
                    let alpha = m * d + d - 2 + sign.bump();
                    let b = (m + 1) * (d - 2) + sign.bump();
                    out.push((
                        ResolutionCase::LinearB { d, eps, sign },
                        Resolution { alpha, a: m + 1, b, c: 0, dd: b + m },
                    ));
                }
            }
            if eps == 1 {
                for sign in [Sign::Minus, Sign::Plus] {
                    let half = d * sign.apply(d) / 2;
                    if m == d * d + half {
                        let alpha = (m + 1) * d + d - 2 + sign.bump();
                        let b = alpha + 2 - 2 * half;
                        out.push((
                            ResolutionCase::NearSquare { d, sign },
                            Resolution { alpha, a: half, b, c: 0, dd: half + b - 1 },
                        ));
                    }
                }
            }
        }
        d += 1;
    }
    out
}

/// The explicit resolution families containing `(n, m)`, if any.
///
/// Every family's formula is cross-checked against
/// [`conjectural_resolution`]; a disagreement is an internal error.
pub fn resolution_cases(n: i64, m: i64) -> Result<Option<(ResolutionCase, Resolution)>> {
    check_verifier_args(n, m)?;
    // Keeps every product below well inside i64.
    if n > 1 << 30 || m > 1 << 30 {
        return Err(Error::invalid("n and m must be below 2^30"));
    }
    let expected = conjectural_resolution(n, m)?;
    let mut hit = None;
    for (case, res) in explicit_cases(n, m) {
        if res != expected {
            return Err(Error::Internal(format!(
                "{case} gives {res} for (n={n}, m={m}) but the expected resolution is {expected}"
            )));
        }
        hit.get_or_insert((case, res));
    }
    if hit.is_none() {
        if let Some(sigma) = square_root_of(n).filter(|s| s % 2 == 0) {
            if square_hilbert_check(sigma, m)? {
                hit = Some((ResolutionCase::EvenSquare { sigma }, expected));
            }
        }
    }
    Ok(hit)
}

/// True when some non-square family applies.
pub(crate) fn has_explicit_case(n: i64, m: i64) -> bool {
    !explicit_cases(n, m).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_hilbert_values() {
        assert_eq!(expected_hilbert(18, 2, 9).unwrap(), 1);
        assert_eq!(expected_hilbert(18, 2, 10).unwrap(), 12);
        assert_eq!(expected_hilbert(18, 2, 8).unwrap(), 0);
        assert_eq!(expected_hilbert(7, 0, 4).unwrap(), 15);
        assert!(expected_hilbert(7, 1, -1).is_err());
    }

    #[test]
    fn conjectural_alpha_tau() {
        assert_eq!(alpha_c(33, 29).unwrap(), 168);
        assert_eq!(tau_c(33, 29).unwrap(), 168);
        assert_eq!(alpha_c(1000, 13).unwrap(), 426);
        assert_eq!(tau_c(190, 100).unwrap(), 1384);
        assert_eq!(alpha_c(38, 16).unwrap(), 101);
        assert_eq!(alpha_c(119, 13).unwrap(), 146);
        assert_eq!(alpha_c(5, 0).unwrap(), 0);
        assert_eq!(tau_c(5, 0).unwrap(), 0);
        // 10 simple points: C(5,2) = 10 conditions exactly.
        assert_eq!(tau_c(10, 1).unwrap(), 3);
        assert_eq!(alpha_c(10, 1).unwrap(), 4);
    }

    #[test]
    fn least_degree_matches_linear_scan() {
        for big_n in 0..3000 {
            let scan = |strict: bool| {
                (0..).find(|&t| {
                    let v = binom2(t + 2).unwrap();
                    if strict {
                        v > big_n
                    } else {
                        v >= big_n
                    }
                })
            };
            assert_eq!(Some(least_degree(big_n, true).unwrap()), scan(true));
            assert_eq!(Some(least_degree(big_n, false).unwrap()), scan(false));
        }
    }

    #[test]
    fn resolutions() {
        let r = conjectural_resolution(18, 2).unwrap();
        assert_eq!(r, Resolution { alpha: 9, a: 1, b: 9, c: 0, dd: 9 });
        let r = conjectural_resolution(10, 1).unwrap();
        assert_eq!(r, Resolution { alpha: 4, a: 5, b: 0, c: 4, dd: 0 });
        assert_eq!(r.to_string(), "alpha=4 a=5 b=0 c=4 d=0");
    }

    #[test]
    fn nagata_examples() {
        for m in 1..=3 {
            assert_eq!(nagata_check(10, m).unwrap(), NagataVerdict::Holds);
        }
        assert_eq!(nagata_check(10, 4).unwrap(), NagataVerdict::NotCovered);
        assert_eq!(nagata_check(12, 1).unwrap(), NagataVerdict::Holds);
        assert_eq!(nagata_check(12, 2).unwrap(), NagataVerdict::NotCovered);
        assert_eq!(nagata_check(16, 7).unwrap(), NagataVerdict::KnownSquare);
        assert!(nagata_check(9, 1).is_err());
        assert!(nagata_small_m(100, 25).unwrap());
        assert!(!nagata_small_m(100, 26).unwrap());
    }

    #[test]
    fn l_index_values() {
        let brute = |i: i64| (0..).take_while(|j| j * (j + 1) <= i).last().unwrap();
        for i in 0..500 {
            assert_eq!(l_index(i).unwrap(), brute(i), "i={i}");
        }
    }

    #[test]
    fn square_windows() {
        assert_eq!(square_window(4).unwrap(), (1, 2));
        assert_eq!(square_window(5).unwrap(), (1, 3));
        assert!(square_window(3).is_err());
        assert!(square_hilbert_check(4, 4).unwrap());
        assert!(!square_hilbert_check(4, 3).unwrap());
        for m in 1..=3 {
            assert!(square_hilbert_check(5, m).unwrap());
        }
    }

    #[test]
    fn range_sets() {
        let v11 = hilbert_range_set(11, 50).unwrap();
        let expected: BTreeSet<i64> =
            (1..=9).chain([11, 12, 13, 14, 15, 16, 17, 18, 21, 23, 24, 26, 27, 33, 36]).collect();
        assert_eq!(v11, expected);
        let v13 = hilbert_range_set(13, 50).unwrap();
        assert_eq!(v13, [1, 2, 3, 4, 6, 7, 9].into_iter().collect());
        let v16 = hilbert_range_set(16, 12).unwrap();
        assert_eq!(v16, [1, 2, 4, 5, 7, 8, 10, 11].into_iter().collect());
    }

    #[test]
    fn resolution_case_examples() {
        assert_eq!(resolution_cases(18, 2).unwrap(), None);
        let (case, res) = resolution_cases(11, 2).unwrap().unwrap();
        assert_eq!(case, ResolutionCase::LinearB { d: 3, eps: 1, sign: Sign::Minus });
        assert_eq!(res, Resolution { alpha: 7, a: 3, b: 3, c: 0, dd: 5 });
        let (case, _) = resolution_cases(11, 3).unwrap().unwrap();
        assert_eq!(case, ResolutionCase::LinearA { d: 3, eps: 1, sign: Sign::Minus });
        let (case, _) = resolution_cases(16, 1).unwrap().unwrap();
        assert_eq!(case, ResolutionCase::EvenSquare { sigma: 4 });
        assert_eq!(resolution_cases(25, 1).unwrap(), None);
    }

    #[test]
    fn best_bounds_default_grid() {
        let m = MultiplicitySequence::uniform(33, 29).unwrap();
        let grid = SearchGrid::default_for(33).unwrap();
        let b = best_bounds(&m, &grid, &[Method::Algorithm]).unwrap();
        assert_eq!(b.alpha.value, 168);
        let cfg = b.alpha.config.unwrap();
        assert_eq!((cfg.d(), cfg.r()), (4, 23));
        assert!(b.alpha.certificate.is_some());

        let m = MultiplicitySequence::uniform(38, 16).unwrap();
        let grid = SearchGrid::default_for(38).unwrap();
        let b = best_bounds(&m, &grid, &[Method::ThmB]).unwrap();
        assert_eq!(b.alpha.value, 101);
        let cfg = b.alpha.config.unwrap();
        assert_eq!((cfg.d(), cfg.r()), (6, 37));
    }

    #[test]
    fn best_bounds_fallbacks() {
        let zero = MultiplicitySequence::uniform(12, 0).unwrap();
        let grid = SearchGrid::default_for(12).unwrap();
        let b = best_bounds(&zero, &grid, &[Method::ThmB]).unwrap();
        assert_eq!((b.alpha.value, b.alpha.method), (0, Method::Trivial));

        // Nothing applies: thm-c at r=1 needs d(d+1)/2 <= 1.
        let m = MultiplicitySequence::uniform(12, 3).unwrap();
        let grid = SearchGrid { d: 2..=2, r: 1..=1 };
        let b = best_bounds(&m, &grid, &[Method::ThmC]).unwrap();
        assert_eq!((b.alpha.value, b.alpha.method), (1, Method::Trivial));
        assert!(b.tau.is_none());

        let bad = SearchGrid { d: 1..=3, r: 1..=99 };
        assert!(best_bounds(&m, &bad, &[Method::ThmB]).is_err());
        assert!(best_bounds(&m, &SearchGrid::default_for(12).unwrap(), &[]).is_err());
    }

    #[test]
    fn verify_examples() {
        let g = |n| SearchGrid::default_for(n).unwrap();
        assert!(verify_hilbert(18, 2, &g(18)).unwrap().verified);
        assert!(verify_hilbert(11, 1, &g(11)).unwrap().verified);
        assert!(verify_hilbert(10, 0, &g(10)).is_err());
    }
}
