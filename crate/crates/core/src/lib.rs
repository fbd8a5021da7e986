//! Certified bounds for fat points in the projective plane.
//!
//! For `n` general points of multiplicity `m`, `α(n;m)` is the least degree
//! of a plane curve with those multiplicities and `τ(n;m)` is the least
//! degree from which the points impose independent conditions. This crate
//! computes lower bounds for `α` and upper bounds for `τ` by degenerating
//! the points onto a curve and unloading, evaluates the closed forms that
//! follow from that procedure, and compares everything with the expected
//! values and with a brute-force rank computation.
//!
//! All arithmetic is exact; overflow is reported as [`Error::Overflow`].
//!
//! ```
//! use fatpoints::{alpha_lower_bound, tau_upper_bound, MultiplicitySequence,
//!                 SpecializationConfig, TraceMode};
//!
//! let m = MultiplicitySequence::uniform(18, 2)?;
//! let cfg = SpecializationConfig::new(18, 4, 17)?;
//! assert_eq!(alpha_lower_bound(&m, &cfg, TraceMode::Full)?.value, 9);
//! assert_eq!(tau_upper_bound(&m, &cfg, TraceMode::Full)?.value, 9);
//! # Ok::<(), fatpoints::Error>(())
//! ```

pub mod arith;
pub mod closed_form;
pub mod conjecture;
pub mod engine;
mod error;
pub mod figures;
pub mod lattice;
pub mod oracle;

pub use arith::{binom2, genus, isqrt};
pub use closed_form::{
    decompose, is_semiuniform, thm_alpha_a, thm_alpha_b, thm_alpha_c, thm_tau_a, thm_tau_b, Decomposition,
};
pub use conjecture::{
    alpha_c, best_bounds, conjectural_resolution, expected_hilbert, hilbert_range_set, nagata_check, resolution_cases,
    square_hilbert_check, tau_c, verify_hilbert, BestBound, BestBounds, HilbertVerdict, Method, NagataVerdict,
    Resolution, ResolutionCase, SearchGrid,
};
pub use engine::{
    alpha_lower_bound, certify_alpha, certify_tau, tau_upper_bound, BoundCertificate, BoundKind, Certification,
    Criterion, DivisorSequence, TraceMode, TraceStep,
};
pub use error::{Error, Result};
pub use figures::{figure_dataset, format_csv, format_json, format_plt, PltRun};
pub use lattice::{DivisorClass, MultiplicitySequence, SpecializationConfig};
pub use oracle::{oracle_alpha, oracle_hilbert, oracle_tau, OracleConfig};

/// Previously published bounds, kept for side-by-side reports.
pub mod published {
    /// A bound from the literature.
    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    pub struct Published {
        pub source: &'static str,
        pub value: i64,
    }

    /// Upper bounds for `τ(190;100)`, weakest first.
    pub const TAU_190_100: [Published; 7] = [
        Published { source: "Hirschowitz", value: 1957 },
        Published { source: "Gimigliano", value: 1900 },
        Published { source: "Catalisano", value: 1899 },
        Published { source: "Ballico", value: 1487 },
        Published { source: "Xu", value: 1465 },
        Published { source: "Roé", value: 1440 },
        Published { source: "earlier degeneration method", value: 1406 },
    ];

    /// Lower bound for `α(1000;13)` from Roé's unloading algorithm.
    pub const ALPHA_1000_13: Published = Published { source: "Roé (unloading)", value: 421 };

    /// Published bounds on `(α, τ)` for `(n, m)`, if any are recorded.
    pub fn for_pair(n: i64, m: i64) -> (&'static [Published], &'static [Published]) {
        match (n, m) {
            (190, 100) => (&[], &TAU_190_100),
            (1000, 13) => (std::slice::from_ref(&ALPHA_1000_13), &[]),
            _ => (&[], &[]),
        }
    }
}
