//! Brute-force Hilbert function of fat points at random points of the
//! affine chart `z = 1` over a prime field.
//!
//! For each point and each `i + j < m`, the Hasse derivative
//! `∂_x^(i) ∂_y^(j)` of the dehomogenized form must vanish there. The
//! Hilbert function in degree `t` is `C(t+2,2)` minus the rank of that
//! linear system. Random points are general with high probability, and
//! the rank is maximized over several independent trials.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::binom2;
use crate::error::{Error, Result};
use crate::lattice::MultiplicitySequence;

/// Condition rows allowed in one matrix.
pub const MAX_CONDITIONS: u64 = 5000;
/// Matrix entries allowed in one matrix.
pub const MAX_ENTRIES: u64 = 40_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub prime: u64,
    pub seed: u64,
    pub trials: u32,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { prime: (1 << 31) - 1, seed: 0, trials: 3 }
    }
}

impl OracleConfig {
    fn validate(&self, t: i64) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::invalid("trials must be >= 1"));
        }
        if self.prime >= 1 << 32 {
            return Err(Error::invalid(format!("prime must be below 2^32, got {}", self.prime)));
        }
        if !is_prime(self.prime) {
            return Err(Error::invalid(format!("modulus {} is not prime", self.prime)));
        }
        if self.prime <= t as u64 {
            return Err(Error::invalid(format!("prime {} must exceed the degree {t}", self.prime)));
        }
        Ok(())
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= p {
        if p % q == 0 {
            return false;
        }
        q += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Distinct points with nonzero coordinates, fixed by `(seed, trial, n)`.
fn sample_points(n: usize, cfg: &OracleConfig, trial: u32) -> Vec<(u64, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(u64::from(trial));
    let mut pts = Vec::with_capacity(n);
    while pts.len() < n {
        let p = (rng.random_range(1..cfg.prime), rng.random_range(1..cfg.prime));
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts
}

/// Rank of a dense matrix over `F_p`, destroying it.
fn rank_mod(rows: &mut [Vec<u64>], p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for x in &mut rows[rank][col..] {
            *x = *x * inv % p;
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            let f = row[col];
            if f != 0 {
                for (x, &y) in row[col..].iter_mut().zip(&prow[col..]) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn condition_count(mseq: &MultiplicitySequence) -> Result<u64> {
    let n = mseq.condition_count()? as u64;
    if n > MAX_CONDITIONS {
        return Err(Error::TooLarge { what: "conditions", size: n, limit: MAX_CONDITIONS });
    }
    Ok(n)
}

fn rank_for_points(mseq: &MultiplicitySequence, t: usize, pts: &[(u64, u64)], p: u64) -> usize {
    let monomials: Vec<(usize, usize)> = (0..=t).flat_map(|a| (0..=t - a).map(move |b| (a, b))).collect();
    let mut pascal = vec![vec![0u64; t + 1]; t + 1];
    for a in 0..=t {
        pascal[a][0] = 1;
        for i in 1..=a {
            pascal[a][i] = (pascal[a - 1][i - 1] + if i < a { pascal[a - 1][i] } else { 0 }) % p;
        }
    }
    let mut rows = Vec::new();
    for (&mult, &(x, y)) in mseq.as_slice().iter().zip(pts) {
        let xp: Vec<u64> = (0..=t)
            .scan(1u64, |acc, _| {
                let v = *acc;
                *acc = *acc * x % p;
                Some(v)
            })
            .collect();
        let yp: Vec<u64> = (0..=t)
            .scan(1u64, |acc, _| {
                let v = *acc;
                *acc = *acc * y % p;
                Some(v)
            })
            .collect();
        let mult = mult as usize;
        for i in 0..mult {
            for j in 0..mult - i {
                let row = monomials
                    .iter()
                    .map(|&(a, b)| {
                        if a < i || b < j {
                            0
                        } else {
                            pascal[a][i] * pascal[b][j] % p * (xp[a - i] * yp[b - j] % p) % p
                        }
                    })
                    .collect();
                rows.push(row);
            }
        }
    }
    rank_mod(&mut rows, p)
}

/// `dim I(m)_t` for random points.
pub fn oracle_hilbert(mseq: &MultiplicitySequence, t: i64, cfg: &OracleConfig) -> Result<i64> {
    if t < 0 {
        return Err(Error::invalid(format!("t must be >= 0, got {t}")));
    }
    cfg.validate(t)?;
    let conditions = condition_count(mseq)?;
    let cols = binom2(t + 2)? as u64;
    let entries = conditions.saturating_mul(cols);
    if entries > MAX_ENTRIES {
        return Err(Error::TooLarge { what: "matrix entries", size: entries, limit: MAX_ENTRIES });
    }
    let best = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| {
            let pts = sample_points(mseq.len(), cfg, trial);
            rank_for_points(mseq, t as usize, &pts, cfg.prime)
        })
        .max()
        .unwrap_or(0);
    Ok(cols as i64 - best as i64)
}

/// Least `t` with `oracle_hilbert > 0`.
pub fn oracle_alpha(n: i64, m: i64, cfg: &OracleConfig) -> Result<i64> {
    let mseq = MultiplicitySequence::uniform(n, m)?;
    condition_count(&mseq)?;
    let cap = mseq.total()?;
    for t in 0..=cap {
        if oracle_hilbert(&mseq, t, cfg)? > 0 {
            return Ok(t);
        }
    }
    Err(Error::Internal(format!("no nonzero form of degree <= {cap} found")))
}

/// Least `t` at which the conditions are independent.
pub fn oracle_tau(n: i64, m: i64, cfg: &OracleConfig) -> Result<i64> {
    let mseq = MultiplicitySequence::uniform(n, m)?;
    let conditions = condition_count(&mseq)? as i64;
    let cap = mseq.total()?;
    for t in 0..=cap {
        let expected = binom2(t + 2)? - conditions;
        if expected >= 0 && oracle_hilbert(&mseq, t, cfg)? == expected {
            return Ok(t);
        }
    }
    Err(Error::Internal(format!("conditions still dependent in degree {cap}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    #[test]
    fn primality() {
        assert!(is_prime((1 << 31) - 1));
        assert!(is_prime(2));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
    }

    #[test]
    fn validation() {
        let m = MultiplicitySequence::uniform(10, 1).unwrap();
        let bad = OracleConfig { prime: 91, ..cfg() };
        assert!(matches!(oracle_hilbert(&m, 3, &bad), Err(Error::InvalidArgument(_))));
        let small = OracleConfig { prime: 3, ..cfg() };
        assert!(matches!(oracle_hilbert(&m, 3, &small), Err(Error::InvalidArgument(_))));
        let none = OracleConfig { trials: 0, ..cfg() };
        assert!(oracle_hilbert(&m, 3, &none).is_err());
        let huge = MultiplicitySequence::uniform(200, 10).unwrap();
        assert!(matches!(oracle_hilbert(&huge, 3, &cfg()), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn small_values() {
        let ten = MultiplicitySequence::uniform(10, 1).unwrap();
        assert_eq!(oracle_hilbert(&ten, 3, &cfg()).unwrap(), 0);
        // Five double points lie on a unique double conic.
        let five = MultiplicitySequence::uniform(5, 2).unwrap();
        assert_eq!(oracle_hilbert(&five, 4, &cfg()).unwrap(), 1);
        assert_eq!(oracle_alpha(10, 1, &cfg()).unwrap(), 4);
        assert_eq!(oracle_tau(10, 1, &cfg()).unwrap(), 3);
        assert_eq!(oracle_alpha(7, 0, &cfg()).unwrap(), 0);
        assert_eq!(oracle_tau(7, 0, &cfg()).unwrap(), 0);
    }

    #[test]
    fn rank_of_known_matrix() {
        let mut m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank_mod(&mut m, 7), 2);
    }

    #[test]
    fn deterministic_points() {
        let a = sample_points(20, &cfg(), 1);
        assert_eq!(a, sample_points(20, &cfg(), 1));
        assert_ne!(a, sample_points(20, &cfg(), 2));
        assert!(a.iter().all(|&(x, y)| x != 0 && y != 0));
    }
}
