use fatpoints::*;

fn best_alpha_tau(n: i64, m: i64) -> (i64, Option<i64>) {
    let mseq = MultiplicitySequence::uniform(n, m).unwrap();
    let grid = SearchGrid::default_for(n).unwrap();
    let b = best_bounds(&mseq, &grid, &[Method::Algorithm]).unwrap();
    (b.alpha.value, b.tau.map(|t| t.value))
}

#[test]
fn hilbert_function_is_monotone() {
    let cfg = OracleConfig::default();
    for (n, m) in [(10, 2), (11, 3), (7, 3), (12, 2)] {
        let mseq = MultiplicitySequence::uniform(n, m).unwrap();
        let mut prev = 0;
        for t in 0..=n * m / 2 + 3 {
            let h = oracle_hilbert(&mseq, t, &cfg).unwrap();
            assert!(h >= prev, "n={n} m={m} t={t}");
            assert!(h - prev <= t + 1, "n={n} m={m} t={t}");
            assert!(h >= expected_hilbert(n, m, t).unwrap());
            prev = h;
        }
    }
}

#[test]
fn certified_bounds_bracket_the_oracle() {
    let cfg = OracleConfig::default();
    for n in 10..=14 {
        for m in 1..=3 {
            let (alpha_lo, tau_hi) = best_alpha_tau(n, m);
            let alpha = oracle_alpha(n, m, &cfg).unwrap();
            let tau = oracle_tau(n, m, &cfg).unwrap();
            assert!(alpha_lo <= alpha && alpha <= alpha_c(n, m).unwrap(), "alpha n={n} m={m}");
            assert!(tau >= tau_c(n, m).unwrap(), "tau n={n} m={m}");
            if let Some(hi) = tau_hi {
                assert!(tau <= hi, "tau n={n} m={m}");
            }
        }
    }
}

#[test]
fn oracle_matches_conjecture_for_small_cases() {
    let cfg = OracleConfig::default();
    for n in 10..=12 {
        for m in 1..=3 {
            assert_eq!(oracle_alpha(n, m, &cfg).unwrap(), alpha_c(n, m).unwrap(), "n={n} m={m}");
            assert_eq!(oracle_tau(n, m, &cfg).unwrap(), tau_c(n, m).unwrap(), "n={n} m={m}");
        }
    }
}

#[test]
fn seeds_and_small_primes() {
    let mseq = MultiplicitySequence::uniform(10, 2).unwrap();
    for seed in 0..4 {
        let cfg = OracleConfig { seed, ..OracleConfig::default() };
        assert_eq!(oracle_hilbert(&mseq, 6, &cfg).unwrap(), 0);
        assert_eq!(oracle_hilbert(&mseq, 7, &cfg).unwrap(), 6);
    }
    let small = OracleConfig { prime: 32_003, seed: 1, trials: 4 };
    assert_eq!(oracle_hilbert(&mseq, 7, &small).unwrap(), 6);
}

#[test]
fn rejects_bad_configurations() {
    let mseq = MultiplicitySequence::uniform(10, 2).unwrap();
    let bad = [
        OracleConfig { prime: 91, ..OracleConfig::default() },
        OracleConfig { prime: 5, ..OracleConfig::default() },
        OracleConfig { prime: 4_294_967_311, ..OracleConfig::default() },
        OracleConfig { trials: 0, ..OracleConfig::default() },
    ];
    for cfg in bad {
        assert!(matches!(oracle_hilbert(&mseq, 7, &cfg), Err(Error::InvalidArgument(_))), "{cfg:?}");
    }
    assert!(matches!(
        oracle_hilbert(&MultiplicitySequence::uniform(100, 12).unwrap(), 130, &OracleConfig::default()),
        Err(Error::TooLarge { .. })
    ));
}
