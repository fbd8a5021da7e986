//! Grid datasets of `(n, m)` pairs covered by the verification results,
//! run-length encoded in `\plt` lines.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::isqrt;
use crate::closed_form::{thm_alpha_b, thm_alpha_c};
use crate::conjecture::{corollary_ranges, has_explicit_case, square_window};
use crate::error::{Error, Result};
use crate::lattice::{MultiplicitySequence, SpecializationConfig};

/// The pairs `(n, m_start), ..., (n, m_start + span)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PltRun {
    pub span: i64,
    pub n: i64,
    pub m_start: i64,
}

impl PltRun {
    pub fn pairs(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        (self.m_start..=self.m_start + self.span).map(|m| (self.n, m))
    }
}

/// Which dataset to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Figure {
    /// Pairs whose Hilbert function is determined.
    Hilbert = 1,
    /// Pairs whose minimal free resolution is determined.
    Resolution = 2,
    /// Pairs where the uniform closed form at `d = ⌊√n⌋`, `r = ⌊d√n⌋`
    /// reaches `m√n`.
    NagataC = 3,
    /// As above with `r = ⌊(n+d²)/2⌋`.
    NagataB = 4,
}

impl Figure {
    pub fn from_index(k: i64) -> Result<Figure> {
        match k {
            1 => Ok(Figure::Hilbert),
            2 => Ok(Figure::Resolution),
            3 => Ok(Figure::NagataC),
            4 => Ok(Figure::NagataB),
            _ => Err(Error::invalid(format!("figure index must be 1..=4, got {k}"))),
        }
    }
}

/// Runs of consecutive members of `1..=topm`, in increasing order.
fn encode_row(n: i64, topm: i64, member: impl Fn(i64) -> Result<bool>) -> Result<Vec<PltRun>> {
    let mut runs = Vec::new();
    let mut start = None;
    for m in 1..=topm {
        match (member(m)?, start) {
            (true, None) => start = Some(m),
            (false, Some(s)) => {
                runs.push(PltRun { span: m - 1 - s, n, m_start: s });
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        runs.push(PltRun { span: topm - s, n, m_start: s });
    }
    Ok(runs)
}

fn grid(topn: i64, topm: i64, member: impl Fn(i64, i64) -> Result<bool> + Sync) -> Result<Vec<PltRun>> {
    let rows: Vec<Vec<PltRun>> =
        (10..=topn).into_par_iter().map(|n| encode_row(n, topm, |m| member(n, m))).collect::<Result<_>>()?;
    Ok(rows.into_iter().flatten().collect())
}

/// Square `n = σ²`: one run per residue class block `x_lo..=x_hi`, shifted
/// by multiples of `σ-1`. Blocks are listed whole, and the last one may
/// start at `topm + 1`.
fn square_runs(topn: i64, topm: i64, even_only: bool) -> Result<Vec<PltRun>> {
    let mut runs = Vec::new();
    let mut sigma = 4;
    while sigma * sigma <= topn {
        if !even_only || sigma % 2 == 0 {
            let (lo, hi) = square_window(sigma)?;
            let mut start = lo;
            while start <= topm + 1 {
                runs.push(PltRun { span: hi - lo, n: sigma * sigma, m_start: start });
                start += sigma - 1;
            }
        }
        sigma += 1;
    }
    Ok(runs)
}

/// `(bound)² >= m²n`.
fn reaches_nagata(bound: i64, n: i64, m: i64) -> bool {
    bound >= 0 && (bound as i128) * (bound as i128) >= (m as i128) * (m as i128) * (n as i128)
}

fn nagata_c_member(n: i64, m: i64) -> Result<bool> {
    let d = isqrt(n)?;
    let r = isqrt(d * d * n)?;
    let bound = thm_alpha_c(n, m, &SpecializationConfig::new(n, d, r)?)?;
    Ok(reaches_nagata(bound, n, m))
}

fn nagata_b_member(n: i64, m: i64) -> Result<bool> {
    let d = isqrt(n)?;
    let r = (n + d * d) / 2;
    let cfg = SpecializationConfig::new(n, d, r)?;
    let bound = if (n + d * d) % 2 == 0 {
        thm_alpha_b(&MultiplicitySequence::uniform(n, m)?, &cfg)?
    } else {
        thm_alpha_c(n, m, &cfg)?
    };
    Ok(reaches_nagata(bound, n, m))
}

/// The dataset for figure `k` over `10 <= n <= topn`, `1 <= m <= topm`.
///
/// Figures 1 and 2 list the rows `n = 10..=topn` first and then a separate
/// block for square `n`.
pub fn figure_dataset(k: i64, topn: i64, topm: i64) -> Result<Vec<PltRun>> {
    let fig = Figure::from_index(k)?;
    if topn < 10 || topm < 1 {
        return Err(Error::invalid(format!("need topn >= 10 and topm >= 1, got {topn}, {topm}")));
    }
    if topn > 1 << 20 || topm > 1 << 20 {
        return Err(Error::invalid("topn and topm must be at most 2^20"));
    }
    match fig {
        Figure::Hilbert => {
            let rows: Vec<Vec<PltRun>> = (10..=topn)
                .into_par_iter()
                .map(|n| {
                    let set = corollary_ranges(n, topm);
                    encode_row(n, topm, |m| Ok(set.contains(&m)))
                })
                .collect::<Result<_>>()?;
            let mut runs: Vec<PltRun> = rows.into_iter().flatten().collect();
            runs.extend(square_runs(topn, topm, false)?);
            Ok(runs)
        }
        Figure::Resolution => {
            let mut runs = grid(topn, topm, |n, m| Ok(has_explicit_case(n, m)))?;
            runs.extend(square_runs(topn, topm, true)?);
            Ok(runs)
        }
        Figure::NagataC => grid(topn, topm, nagata_c_member),
        Figure::NagataB => grid(topn, topm, nagata_b_member),
    }
}

/// `\plt <span> <n> <m_start>` with two trailing spaces, one run per line.
pub fn format_plt(runs: &[PltRun]) -> String {
    let mut out = String::with_capacity(runs.len() * 20);
    for r in runs {
        let _ = writeln!(out, "\\plt {} {} {}  ", r.span, r.n, r.m_start);
    }
    out
}

/// One `n,m` line per pair, after an `n,m` header.
pub fn format_csv(runs: &[PltRun]) -> String {
    let mut out = String::from("n,m\n");
    for (n, m) in runs.iter().flat_map(PltRun::pairs) {
        let _ = writeln!(out, "{n},{m}");
    }
    out
}

pub fn format_json(runs: &[PltRun]) -> String {
    let mut s = serde_json::to_string_pretty(runs).expect("runs serialize");
    s.push('\n');
    s
}
