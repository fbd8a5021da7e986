//! The specialization bound algorithm.
//!
//! Starting from `D_0 = F_t = tL - Σ m_iE_i`, repeatedly subtract the curve
//! class and unload: `D_{j+1} = unload(D_j - C)`. Integer criteria evaluated
//! along the sequence certify either `h⁰(F_t) = 0` (so `α > t`) or
//! `h¹(F_t) = 0` (so `τ <= t`) for the specialized points, and both
//! statements transfer to general points.

use std::fmt;

use serde::Serialize;

use crate::arith;
use crate::conjecture::{alpha_c_seq, tau_c_seq};
use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, MultiplicitySequence, SpecializationConfig};

/// Which rule justified a trace step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Criterion {
    /// `0 <= t_j < d` and `(t_j+1)(t_j+2) <= 2v_j`.
    CurveH0LowDegree,
    /// `D_j·C <= g-1` and `t_j >= d-2`.
    CurveH0Genus,
    /// `t_j < 0`.
    CurveH0NegativeDegree,
    /// `t_j >= d-2` and `D_j·C >= g-1`.
    CurveH1,
    /// `D_j·(L-E_1) < 0`, so `D_j` has no sections.
    TerminalH0,
    /// `D_j` has vanishing `h¹` on its face: either a multiple of `L`, or a
    /// chain of `k` simple infinitely near points on the curve in degree
    /// at least `k-1`.
    TerminalH1,
    Failed,
}

impl Criterion {
    pub fn name(self) -> &'static str {
        match self {
            Criterion::CurveH0LowDegree => "CurveH0-low-degree",
            Criterion::CurveH0Genus => "CurveH0-genus",
            Criterion::CurveH0NegativeDegree => "CurveH0-negative-degree",
            Criterion::CurveH1 => "CurveH1",
            Criterion::TerminalH0 => "Terminal-H0",
            Criterion::TerminalH1 => "Terminal-H1",
            Criterion::Failed => "Failed",
        }
    }

    pub fn is_terminal(self) -> bool {
        matches!(self, Criterion::TerminalH0 | Criterion::TerminalH1)
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub j: usize,
    pub divisor: DivisorClass,
    pub t_j: i64,
    pub c_j: i64,
    pub v_j: i64,
    pub criterion: Criterion,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "D_{} = {}, D_{}.C={}, v_{}={}, rule={}",
            self.j, self.divisor, self.j, self.c_j, self.j, self.v_j, self.criterion
        )
    }
}

/// How much of each trace to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TraceMode {
    #[default]
    Full,
    /// Keep only the last step. Grid scans use this.
    TerminalOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certification {
    pub certified: bool,
    pub trace: Vec<TraceStep>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BoundKind {
    AlphaLower,
    TauUpper,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCertificate {
    pub kind: BoundKind,
    pub value: i64,
    pub t_witness: i64,
    pub trace: Vec<TraceStep>,
    pub config: SpecializationConfig,
    pub mseq: MultiplicitySequence,
}

impl BoundCertificate {
    /// One line per trace step.
    pub fn format_trace(&self) -> String {
        format_trace(&self.trace)
    }
}

pub fn format_trace(trace: &[TraceStep]) -> String {
    trace.iter().map(|s| format!("{s}\n")).collect()
}

/// The classes `D_0, D_1, ...`, ending with the first class whose
/// exceptional coefficients all vanish.
#[derive(Debug, Clone)]
pub struct DivisorSequence {
    cfg: SpecializationConfig,
    next: Option<DivisorClass>,
}

impl DivisorSequence {
    pub fn new(t: i64, mseq: &MultiplicitySequence, cfg: &SpecializationConfig) -> Result<Self> {
        cfg.check_matches(mseq)?;
        Ok(Self { cfg: *cfg, next: Some(DivisorClass::fat_point_class(t, mseq)) })
    }
}

impl Iterator for DivisorSequence {
    type Item = Result<DivisorClass>;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.next.take()?;
        if !current.is_multiple_of_line() {
            match current.subtract_curve(&self.cfg) {
                Ok(d) => self.next = Some(d.unload()),
                Err(e) => return Some(Err(e)),
            }
        }
        Some(Ok(current))
    }
}

struct TraceBuf {
    mode: TraceMode,
    steps: Vec<TraceStep>,
}

impl TraceBuf {
    fn new(mode: TraceMode) -> Self {
        Self { mode, steps: Vec::new() }
    }

    fn push(&mut self, step: TraceStep) {
        if self.mode == TraceMode::TerminalOnly {
            self.steps.clear();
        }
        self.steps.push(step);
    }

    fn finish(self, certified: bool) -> Certification {
        Certification { certified, trace: self.steps }
    }
}

fn step(j: usize, d: DivisorClass, cfg: &SpecializationConfig, criterion: Criterion) -> Result<TraceStep> {
    let c_j = d.intersect_curve(cfg)?;
    let v_j = d.leading_sum(cfg.r() as usize)?;
    debug_assert_eq!(d.degree().checked_mul(cfg.d()).and_then(|x| x.checked_sub(c_j)), Some(v_j));
    Ok(TraceStep { j, t_j: d.degree(), divisor: d, c_j, v_j, criterion })
}

fn check_t(t: i64) -> Result<()> {
    if t < 0 {
        return Err(Error::invalid(format!("degree t must be >= 0, got {t}")));
    }
    Ok(())
}

/// Try to certify `h⁰(F_t) = 0` for the specialized points.
pub fn certify_alpha(
    t: i64,
    mseq: &MultiplicitySequence,
    cfg: &SpecializationConfig,
    mode: TraceMode,
) -> Result<Certification> {
    check_t(t)?;
    let d = cfg.d();
    let g_minus_1 = cfg.genus() - 1;
    let mut buf = TraceBuf::new(mode);
    for (j, divisor) in DivisorSequence::new(t, mseq, cfg)?.enumerate() {
        let divisor = divisor?;
        if divisor.dot_line_minus_e1()? < 0 {
            buf.push(step(j, divisor, cfg, Criterion::TerminalH0)?);
            return Ok(buf.finish(true));
        }
        if divisor.is_multiple_of_line() {
            // A nonnegative multiple of L has sections.
            buf.push(step(j, divisor, cfg, Criterion::Failed)?);
            return Ok(buf.finish(false));
        }
        let s = step(j, divisor, cfg, Criterion::Failed)?;
        let tj = s.t_j;
        let rule = if s.c_j <= g_minus_1 && tj >= d - 2 {
            Criterion::CurveH0Genus
        } else if tj < 0 {
            Criterion::CurveH0NegativeDegree
        } else if tj < d && arith::mul(tj + 1, tj + 2, "low-degree clause")? <= arith::mul(2, s.v_j, "2v")? {
            Criterion::CurveH0LowDegree
        } else {
            buf.push(s);
            return Ok(buf.finish(false));
        };
        buf.push(TraceStep { criterion: rule, ..s });
    }
    Err(Error::Internal("divisor sequence ended before a terminal class".into()))
}

/// True when `h¹(D) = 0` is immediate: no exceptional part, or `k` simple
/// points (which lie on a chain of infinitely near points of a smooth
/// curve branch) in degree at least `k-1`.
fn h1_trivially_zero(d: &DivisorClass) -> bool {
    if d.is_multiple_of_line() {
        return true;
    }
    if d.mults()[0] > 1 {
        return false;
    }
    let k = d.mults().iter().filter(|&&a| a == 1).count() as i64;
    d.degree() >= k - 1
}

/// Try to certify `h¹(F_t) = 0` for the specialized points.
pub fn certify_tau(
    t: i64,
    mseq: &MultiplicitySequence,
    cfg: &SpecializationConfig,
    mode: TraceMode,
) -> Result<Certification> {
    check_t(t)?;
    let d = cfg.d();
    let g_minus_1 = cfg.genus() - 1;
    let mut buf = TraceBuf::new(mode);
    for (j, divisor) in DivisorSequence::new(t, mseq, cfg)?.enumerate() {
        let divisor = divisor?;
        if h1_trivially_zero(&divisor) {
            buf.push(step(j, divisor, cfg, Criterion::TerminalH1)?);
            return Ok(buf.finish(true));
        }
        let s = step(j, divisor, cfg, Criterion::Failed)?;
        if s.t_j >= d - 2 && s.c_j >= g_minus_1 {
            buf.push(TraceStep { criterion: Criterion::CurveH1, ..s });
        } else {
            buf.push(s);
            return Ok(buf.finish(false));
        }
    }
    Err(Error::Internal("divisor sequence ended before a terminal class".into()))
}

/// Largest certified lower bound for `α`, scanning `t = 0, 1, ...` up to
/// the first `t` that cannot be certified.
pub fn alpha_lower_bound(
    mseq: &MultiplicitySequence,
    cfg: &SpecializationConfig,
    mode: TraceMode,
) -> Result<BoundCertificate> {
    cfg.check_matches(mseq)?;
    let mut cert = BoundCertificate {
        kind: BoundKind::AlphaLower,
        value: 0,
        t_witness: -1,
        trace: Vec::new(),
        config: *cfg,
        mseq: mseq.clone(),
    };
    if mseq.is_zero() {
        return Ok(cert);
    }
    let cap = alpha_c_seq(mseq)? + 2;
    let mut t = 0;
    loop {
        let c = certify_alpha(t, mseq, cfg, mode)?;
        if !c.certified {
            return Ok(cert);
        }
        if t > cap {
            return Err(Error::Internal(format!(
                "certified h0=0 in degree {t}, past the expected alpha bound {cap} ({mseq}, {cfg})"
            )));
        }
        cert.value = t + 1;
        cert.t_witness = t;
        cert.trace = c.trace;
        t += 1;
    }
}

/// Least certified upper bound for `τ`, scanning upward from `τ_c`.
pub fn tau_upper_bound(
    mseq: &MultiplicitySequence,
    cfg: &SpecializationConfig,
    mode: TraceMode,
) -> Result<BoundCertificate> {
    cfg.check_matches(mseq)?;
    let start = tau_c_seq(mseq)?;
    let cap = arith::add(arith::add(start, mseq.total()?, "tau cap")?, cfg.d(), "tau cap")?;
    for t in start..=cap {
        let c = certify_tau(t, mseq, cfg, mode)?;
        if c.certified {
            return Ok(BoundCertificate {
                kind: BoundKind::TauUpper,
                value: t,
                t_witness: t,
                trace: c.trace,
                config: *cfg,
                mseq: mseq.clone(),
            });
        }
    }
    Err(Error::NoCertificate { cap })
}
