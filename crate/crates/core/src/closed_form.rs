//! Explicit bounds that follow from running the algorithm symbolically
//! under semiuniformity hypotheses.
//!
//! Each function checks its hypotheses and returns [`Error::Precondition`]
//! naming the clause that failed.

use serde::Serialize;

use crate::arith::{self, div_ceil, div_floor};
use crate::error::{Error, Result};
use crate::lattice::{MultiplicitySequence, SpecializationConfig};

/// `M_n = u·r + ρ` with `0 < ρ <= r`, and `s` the largest integer with
/// `0 <= s < d` and `(s+1)(s+2) <= 2ρ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub u: i64,
    pub rho: i64,
    pub s: i64,
    pub m_r: i64,
    pub m_n: i64,
}

/// `m_r + 1 >= m_1`.
pub fn is_semiuniform(mseq: &MultiplicitySequence, r: i64) -> Result<bool> {
    if r < 1 || r > mseq.n() {
        return Err(Error::invalid(format!("r must satisfy 1<=r<=n (r={r}, n={})", mseq.n())));
    }
    Ok(mseq.get(r as usize) + 1 >= mseq.largest())
}

pub fn decompose(mseq: &MultiplicitySequence, r: i64, d: i64) -> Result<Decomposition> {
    if r < 1 || r > mseq.n() {
        return Err(Error::invalid(format!("r must satisfy 1<=r<=n (r={r}, n={})", mseq.n())));
    }
    if d < 1 {
        return Err(Error::invalid(format!("d must be >= 1, got {d}")));
    }
    let m_n = mseq.total()?;
    if m_n == 0 {
        return Err(Error::invalid("decomposition needs a nonzero multiplicity sequence"));
    }
    let m_r = mseq.prefix_sum(r as usize)?;
    let u = div_ceil(m_n, r) - 1;
    let rho = m_n - u * r;
    Ok(Decomposition { u, rho, s: largest_s(rho, d), m_r, m_n })
}

fn largest_s(rho: i64, d: i64) -> i64 {
    // (s+1)(s+2) <= 2ρ forces s < √(2ρ), so this loop is short.
    let mut s = 0;
    while s + 1 < d && (s + 2) * (s + 3) <= 2 * rho {
        s += 1;
    }
    s
}

fn require(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::precondition(what()))
    }
}

fn require_semiuniform(mseq: &MultiplicitySequence, cfg: &SpecializationConfig) -> Result<()> {
    cfg.check_matches(mseq)?;
    require(!mseq.is_zero(), || "M_n >= 1 fails (all multiplicities are zero)".into())?;
    require(is_semiuniform(mseq, cfg.r())?, || {
        format!("multiplicities are not {}-semiuniform (m_r+1 >= m_1 fails)", cfg.r())
    })
}

fn d_squared(cfg: &SpecializationConfig) -> Result<i64> {
    arith::mul(cfg.d(), cfg.d(), "d^2")
}

/// `α >= 1 + min(⌊(M_r+g-1)/d⌋, s+ud)`, for `d(d+1)/2 <= r <= d²`.
pub fn thm_alpha_a(mseq: &MultiplicitySequence, cfg: &SpecializationConfig) -> Result<i64> {
    require_semiuniform(mseq, cfg)?;
    let (d, r) = (cfg.d(), cfg.r());
    let lo = arith::binom2(d + 1)?;
    require(lo <= r, || format!("d(d+1)/2 <= r fails ({lo} > {r})"))?;
    let dd = d_squared(cfg)?;
    require(r <= dd, || format!("r <= d^2 fails ({r} > {dd})"))?;
    let k = decompose(mseq, r, d)?;
    alpha_min_form(k.m_r, &k, cfg)
}

/// `τ <= max(⌈(ρ+g-1)/d⌉ + ud, ud+d-2)`, for `r <= d²`.
pub fn thm_tau_a(mseq: &MultiplicitySequence, cfg: &SpecializationConfig) -> Result<i64> {
    require_semiuniform(mseq, cfg)?;
    let (d, r) = (cfg.d(), cfg.r());
    let dd = d_squared(cfg)?;
    require(r <= dd, || format!("r <= d^2 fails ({r} > {dd})"))?;
    let k = decompose(mseq, r, d)?;
    let ud = arith::mul(k.u, d, "ud")?;
    let first = arith::add(div_ceil(arith::add(k.rho, cfg.genus() - 1, "rho+g-1")?, d), ud, "tau (a)")?;
    Ok(first.max(ud + d - 2))
}

/// `α >= s + ud + 1`, for `2r >= n + d²`.
pub fn thm_alpha_b(mseq: &MultiplicitySequence, cfg: &SpecializationConfig) -> Result<i64> {
    require_semiuniform(mseq, cfg)?;
    require_b_range(cfg)?;
    let k = decompose(mseq, cfg.r(), cfg.d())?;
    arith::add(arith::mul(k.u, cfg.d(), "ud")?, k.s + 1, "s+ud+1")
}

/// `τ <= max(⌈(M_r+g-1)/d⌉, ud+d-2)`, for `2r >= n + d²`.
pub fn thm_tau_b(mseq: &MultiplicitySequence, cfg: &SpecializationConfig) -> Result<i64> {
    require_semiuniform(mseq, cfg)?;
    require_b_range(cfg)?;
    let d = cfg.d();
    let k = decompose(mseq, cfg.r(), d)?;
    let first = div_ceil(arith::add(k.m_r, cfg.genus() - 1, "M_r+g-1")?, d);
    let ud = arith::mul(k.u, d, "ud")?;
    Ok(first.max(ud + d - 2))
}

fn require_b_range(cfg: &SpecializationConfig) -> Result<()> {
    let two_r = 2 * cfg.r();
    let rhs = arith::add(cfg.n(), d_squared(cfg)?, "n+d^2")?;
    require(two_r >= rhs, || format!("2r >= n + d^2 fails ({two_r} < {rhs})"))
}

/// `α(n;m) >= 1 + min(⌊(mr+g-1)/d⌋, s+ud)`, for `r·d(d+1)/2 <= r² <= d²n`.
pub fn thm_alpha_c(n: i64, m: i64, cfg: &SpecializationConfig) -> Result<i64> {
    if cfg.n() != n {
        return Err(Error::invalid(format!("configuration has n={} but n={n} was given", cfg.n())));
    }
    let mseq = MultiplicitySequence::uniform(n, m)?;
    require(m >= 1, || "m >= 1 fails".into())?;
    let (d, r) = (cfg.d(), cfg.r());
    let lo = arith::mul(r, arith::binom2(d + 1)?, "r d(d+1)/2")?;
    let r2 = arith::mul(r, r, "r^2")?;
    require(lo <= r2, || format!("r d(d+1)/2 <= r^2 fails ({lo} > {r2})"))?;
    let hi = arith::mul(d_squared(cfg)?, n, "d^2 n")?;
    require(r2 <= hi, || format!("r^2 <= d^2 n fails ({r2} > {hi})"))?;
    let k = decompose(&mseq, r, d)?;
    alpha_min_form(arith::mul(m, r, "mr")?, &k, cfg)
}

fn alpha_min_form(top: i64, k: &Decomposition, cfg: &SpecializationConfig) -> Result<i64> {
    let d = cfg.d();
    let first = div_floor(arith::add(top, cfg.genus() - 1, "M_r+g-1")?, d);
    let second = arith::add(k.s, arith::mul(k.u, d, "ud")?, "s+ud")?;
    Ok(1 + first.min(second))
}
