//! Brute-force verification of the local Hom/Ext classification over the
//! ribbon local ring against its closed forms:
//!
//! * `Ext^k(Ored, Ored) = Ored` for all `k >= 0`;
//! * `Ext^k(Ored, I_n) = Ext^k(I_n, Ored) = Ored` for `k = 0` and `O_n`
//!   for `k >= 1`;
//! * `Hom(I_n, I_m) = I_max(n,m)`, and `Ext^k(I_n, I_m)` for `k >= 1` is
//!   two copies of `O_min(n,m)`, sitting in degrees `[0, min)` and
//!   `[max, max + min)` in the graded normalization used here;
//! * the cokernel of `Hom(I_n, I_m) -> Hom(N*I_n, N*I_m)` has length
//!   `max(n - m, 0)`.

use super::ext::{
    ext_cyclic_decomposition, ext_hilbert, restriction_coker, trusted_window, ExtSource,
    HilbertFunction,
};
use super::module::{build_standard, StandardModule, TruncatedRingParams};
use crate::error::Result;

/// A source/target pair in the classification table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalExtCase {
    OredOred,
    OredIdeal { n: usize },
    IdealOred { n: usize },
    IdealIdeal { n: usize, m: usize },
}

impl LocalExtCase {
    pub fn source(&self) -> ExtSource {
        match self {
            LocalExtCase::OredOred | LocalExtCase::OredIdeal { .. } => ExtSource::Ored,
            LocalExtCase::IdealOred { n } | LocalExtCase::IdealIdeal { n, .. } => {
                ExtSource::Ideal(*n)
            }
        }
    }

    pub fn target(&self) -> StandardModule {
        match self {
            LocalExtCase::OredOred | LocalExtCase::IdealOred { .. } => {
                StandardModule::Ored { shift: 0 }
            }
            LocalExtCase::OredIdeal { n } => StandardModule::Ideal { n: *n },
            LocalExtCase::IdealIdeal { m, .. } => StandardModule::Ideal { n: *m },
        }
    }

    fn max_shift(&self) -> usize {
        match self {
            LocalExtCase::OredOred => 0,
            LocalExtCase::OredIdeal { n } | LocalExtCase::IdealOred { n } => *n,
            LocalExtCase::IdealIdeal { n, m } => *n.max(m),
        }
    }
}

impl std::fmt::Display for LocalExtCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LocalExtCase::OredOred => write!(f, "(Ored, Ored)"),
            LocalExtCase::OredIdeal { n } => write!(f, "(Ored, I_{n})"),
            LocalExtCase::IdealOred { n } => write!(f, "(I_{n}, Ored)"),
            LocalExtCase::IdealIdeal { n, m } => write!(f, "(I_{n}, I_{m})"),
        }
    }
}

fn hf_from_values(values: Vec<i64>, rank: i64) -> HilbertFunction {
    let torsion = values.iter().map(|v| v - rank).sum();
    HilbertFunction {
        window: values.len(),
        values,
        rank,
        torsion,
    }
}

/// Closed-form Hilbert function of `Ext^k` for a table case, over the
/// trusted window the computation itself will use.
pub fn expected_hilbert(
    params: TruncatedRingParams,
    case: LocalExtCase,
    k: usize,
) -> Result<HilbertFunction> {
    let w = trusted_window(params, case.max_shift())?;
    let ones = |_d: usize| 1i64;
    let values: Vec<i64> = match (case, k) {
        (LocalExtCase::OredOred, _) => (0..w).map(ones).collect(),
        (LocalExtCase::OredIdeal { .. }, 0) | (LocalExtCase::IdealOred { .. }, 0) => {
            (0..w).map(ones).collect()
        }
        (LocalExtCase::OredIdeal { n }, _) | (LocalExtCase::IdealOred { n }, _) => {
            (0..w).map(|d| i64::from(d < n)).collect()
        }
        (LocalExtCase::IdealIdeal { n, m }, 0) => {
            let top = n.max(m);
            (0..w).map(|d| 1 + i64::from(d >= top)).collect()
        }
        (LocalExtCase::IdealIdeal { n, m }, _) => {
            let (lo, hi) = (n.min(m), n.max(m));
            (0..w)
                .map(|d| i64::from(d < lo) + i64::from(hi <= d && d < hi + lo))
                .collect()
        }
    };
    let rank = match (case, k) {
        (LocalExtCase::OredOred, _) => 1,
        (_, 0) => match case {
            LocalExtCase::IdealIdeal { .. } => 2,
            _ => 1,
        },
        _ => 0,
    };
    Ok(hf_from_values(values, rank))
}

/// Closed-form cyclic decomposition of the torsion `Ext^k`, `k >= 1`.
pub fn expected_cyclic(case: LocalExtCase) -> Option<Vec<(usize, usize)>> {
    match case {
        LocalExtCase::OredOred => None, // rank 1, not torsion
        LocalExtCase::OredIdeal { n } | LocalExtCase::IdealOred { n } => {
            Some(if n == 0 { vec![] } else { vec![(0, n)] })
        }
        LocalExtCase::IdealIdeal { n, m } => {
            let (lo, hi) = (n.min(m), n.max(m));
            Some(if lo == 0 {
                vec![]
            } else {
                vec![(0, lo), (hi, lo)]
            })
        }
    }
}

/// One verified Ext table entry.
#[derive(Debug, Clone)]
pub struct ExtEntry {
    pub case: LocalExtCase,
    pub k: usize,
    pub computed: HilbertFunction,
    pub expected: HilbertFunction,
    pub computed_cyclic: Option<Vec<(usize, usize)>>,
    pub expected_cyclic: Option<Vec<(usize, usize)>>,
    pub matches: bool,
}

/// One verified restriction-cokernel entry.
#[derive(Debug, Clone)]
pub struct CokerEntry {
    pub n: usize,
    pub m: usize,
    pub computed: i64,
    pub expected: i64,
    pub matches: bool,
}

/// Full verification report over `0 <= n, m <= n_max`, `0 <= k <= 3`.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub p: u64,
    pub truncation: usize,
    pub n_max: usize,
    pub ext_entries: Vec<ExtEntry>,
    pub coker_entries: Vec<CokerEntry>,
}

impl VerifyReport {
    pub fn mismatches(&self) -> usize {
        self.ext_entries.iter().filter(|e| !e.matches).count()
            + self.coker_entries.iter().filter(|e| !e.matches).count()
    }

    pub fn all_match(&self) -> bool {
        self.mismatches() == 0
    }
}

pub const TABLE_K_MAX: usize = 3;

/// Recomputes every table entry by graded linear algebra and compares with
/// the closed forms. Mismatches are report entries, not errors.
pub fn verify_tables(params: TruncatedRingParams, n_max: usize) -> Result<VerifyReport> {
    if 4 * (n_max + 1) > params.truncation() {
        return Err(crate::error::Error::Truncation(format!(
            "verifying the table up to n_max={n_max} needs truncation order at least {}, got {}",
            4 * (n_max + 1),
            params.truncation()
        )));
    }
    let mut cases = vec![LocalExtCase::OredOred];
    for n in 0..=n_max {
        cases.push(LocalExtCase::OredIdeal { n });
        cases.push(LocalExtCase::IdealOred { n });
    }
    for n in 0..=n_max {
        for m in 0..=n_max {
            cases.push(LocalExtCase::IdealIdeal { n, m });
        }
    }

    let mut ext_entries = Vec::new();
    for case in cases {
        let target = build_standard(params, case.target())?;
        for k in 0..=TABLE_K_MAX {
            let computed = ext_hilbert(params, case.source(), &target, k)?;
            let expected = expected_hilbert(params, case, k)?;
            let (computed_cyclic, expected_cyclic) = if k >= 1 && expected.rank == 0 {
                (
                    Some(ext_cyclic_decomposition(params, case.source(), &target)?),
                    expected_cyclic(case),
                )
            } else {
                (None, None)
            };
            let matches = computed == expected && computed_cyclic == expected_cyclic;
            ext_entries.push(ExtEntry {
                case,
                k,
                computed,
                expected,
                computed_cyclic,
                expected_cyclic,
                matches,
            });
        }
    }

    let mut coker_entries = Vec::new();
    for n in 0..=n_max {
        for m in 0..=n_max {
            let computed = restriction_coker(params, n, m)?;
            let expected = (n as i64 - m as i64).max(0);
            coker_entries.push(CokerEntry {
                n,
                m,
                computed,
                expected,
                matches: computed == expected,
            });
        }
    }

    Ok(VerifyReport {
        p: params.p(),
        truncation: params.truncation(),
        n_max,
        ext_entries,
        coker_entries,
    })
}
