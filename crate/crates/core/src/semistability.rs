//! Numerical (semi)stability per stratum: the necessary slope inequalities,
//! the tri-state verdict (with honest `Unknown` at low genus), finite
//! enumeration of stability-compatible strata, and executable forms of the
//! two slope-comparison lemmas together with seeded counterexample searches.

use std::cmp::Reverse;

use num_integer::Integer;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::invariants::{CompleteType, RibbonInvariants};
use crate::rational::{rational, Rational};
use crate::strata::is_admissible;

/// Outcome of intersecting a stratum with the (semi)stable locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SSStatus {
    Nonempty,
    Empty,
    Unknown,
}

impl SSStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SSStatus::Nonempty => "nonempty",
            SSStatus::Empty => "empty",
            SSStatus::Unknown => "unknown",
        }
    }
}

/// A verdict plus a short machine-readable tag explaining it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SSVerdict {
    pub status: SSStatus,
    pub reason: &'static str,
}

impl SSVerdict {
    fn new(status: SSStatus, reason: &'static str) -> Self {
        Self { status, reason }
    }
}

// a/b <= c/d (or strictly) with positive denominators, by cross-multiplication.
fn frac_le(a: i64, b: i64, c: i64, d: i64, strict: bool) -> bool {
    debug_assert!(b > 0 && d > 0);
    let lhs = a as i128 * d as i128;
    let rhs = c as i128 * b as i128;
    if strict {
        lhs < rhs
    } else {
        lhs <= rhs
    }
}

fn necessary_unchecked(inv: RibbonInvariants, t: CompleteType, strict: bool) -> bool {
    let (r0, r1, d0, d1) = (t.r0(), t.r1(), t.d0(), t.d1());
    let delta = inv.delta();
    if r1 == 0 {
        return true;
    }
    if r0 > r1 {
        // (d0 - (r0+r1) delta)/r0 <= d1/r1 <= d0/r0
        frac_le(d0 - (r0 + r1) * delta, r0, d1, r1, strict) && frac_le(d1, r1, d0, r0, strict)
    } else {
        // r0 = r1: d0 <= d1 + 2 r0 delta
        let rhs = d1 + 2 * r0 * delta;
        if strict {
            d0 < rhs
        } else {
            d0 <= rhs
        }
    }
}

fn necessary(inv: RibbonInvariants, t: CompleteType, strict: bool) -> Result<bool> {
    if !is_admissible(inv, t) {
        return Err(Error::InadmissibleType);
    }
    Ok(necessary_unchecked(inv, t, strict))
}

/// The numerical conditions a stratum must satisfy to meet the semistable
/// locus.
pub fn ss_necessary(inv: RibbonInvariants, t: CompleteType) -> Result<bool> {
    necessary(inv, t, false)
}

/// Strict version for the stable locus.
pub fn stable_necessary(inv: RibbonInvariants, t: CompleteType) -> Result<bool> {
    necessary(inv, t, true)
}

/// Full verdict. The necessary conditions are sufficient for `gbar >= 1`
/// (semistable) and `gbar >= 2` (stable); the vector-bundle stratum
/// `(R,0;D,0)` has exact low-genus criteria (divisibility at genus 0,
/// coprimality for stability at genus 1); everything else at low genus is
/// honestly `Unknown`.
pub fn ss_verdict(inv: RibbonInvariants, t: CompleteType, stable: bool) -> Result<SSVerdict> {
    if !necessary(inv, t, stable)? {
        return Ok(SSVerdict::new(SSStatus::Empty, "numerical-conditions-fail"));
    }
    let gbar = inv.gbar();
    if t.r1() == 0 {
        let (r, d) = (t.generalized_rank(), t.generalized_degree());
        return Ok(match (gbar, stable) {
            (0, false) => {
                if d.rem_euclid(r) == 0 {
                    SSVerdict::new(SSStatus::Nonempty, "genus0-vb-rank-divides-degree")
                } else {
                    SSVerdict::new(SSStatus::Empty, "genus0-vb-rank-divides-degree")
                }
            }
            (0, true) => {
                if r == 1 {
                    SSVerdict::new(SSStatus::Nonempty, "genus0-vb-stable-iff-line-bundle")
                } else {
                    SSVerdict::new(SSStatus::Empty, "genus0-vb-stable-iff-line-bundle")
                }
            }
            (1, true) => {
                if r.gcd(&d) == 1 {
                    SSVerdict::new(SSStatus::Nonempty, "genus1-vb-stable-iff-coprime")
                } else {
                    SSVerdict::new(SSStatus::Empty, "genus1-vb-stable-iff-coprime")
                }
            }
            _ => SSVerdict::new(SSStatus::Nonempty, "sufficient-by-genus"),
        });
    }
    if (!stable && gbar >= 1) || (stable && gbar >= 2) {
        Ok(SSVerdict::new(SSStatus::Nonempty, "sufficient-by-genus"))
    } else {
        Ok(SSVerdict::new(SSStatus::Unknown, "low-genus-open"))
    }
}

/// The finite list of admissible types of fixed `(R, D)` passing the
/// (semi)stability necessary conditions, sorted descending in the
/// specialization order. The necessary inequalities bound `d1` to
/// `[(D - R*delta) r1 / R, D r1 / R]`, which makes the list complete; for
/// `delta < 0` only the `r1 = 0` stratum survives.
pub fn enumerate_ss_strata(
    inv: RibbonInvariants,
    r: i64,
    d: i64,
    stable: bool,
) -> Result<Vec<CompleteType>> {
    if r < 1 {
        return Err(Error::ZeroRank);
    }
    let mut out = vec![CompleteType::new(r, 0, d, 0).expect("valid rank")];
    for r1 in 1..=r / 2 {
        let r0 = r - r1;
        let lo = Integer::div_ceil(&((d - r * inv.delta()) * r1), &r);
        let hi = Integer::div_floor(&(d * r1), &r);
        for d1 in lo..=hi {
            let t = CompleteType::new(r0, r1, d - d1, d1).expect("valid rank");
            if is_admissible(inv, t) && necessary_unchecked(inv, t, stable) {
                out.push(t);
            }
        }
    }
    out.sort_by_key(|t| (Reverse(t.r1()), Reverse(t.d1())));
    Ok(out)
}

/// The four boolean outcomes of one of the slope lemmas on a given input:
/// the plain hypotheses/conclusion pair and its strict refinement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaVerdict {
    pub hypotheses_hold: bool,
    pub conclusion_holds: bool,
    pub strict_hypotheses_hold: bool,
    pub strict_conclusion_holds: bool,
}

impl LemmaVerdict {
    /// Hypotheses hold but the conclusion fails, in either form.
    pub fn is_counterexample(&self) -> bool {
        (self.hypotheses_hold && !self.conclusion_holds)
            || (self.strict_hypotheses_hold && !self.strict_conclusion_holds)
    }
}

/// Slope comparison for two three-term rank/degree decompositions
/// `R1 = R2 + R3`, `R4 = R5 + R6` (ranks positive, degrees arbitrary,
/// sums enforced). With slopes `mu_i = D_i / R_i`, the hypotheses are
///
/// * `mu_2 >= mu_3` or `mu_5 >= mu_6`,
/// * `mu_6 >= mu_3`, `mu_5 >= mu_2`, and `R4/R1 >= R6/R3`,
///
/// and the conclusion is `mu_4 >= mu_1`. The strict refinement concludes
/// `mu_4 > mu_1` when additionally `mu_5 > mu_2`, or `mu_6 > mu_3`, or the
/// internal comparison of the assumed variant is strict together with
/// `R4/R1 > R6/R3` (the rank-ratio strictness is needed: with all four
/// outer slopes pairwise equal and `R4 R3 = R6 R1`, the two total slopes
/// coincide no matter how strict the internal comparison is).
pub fn varlem_check(ranks: [Rational; 6], degrees: [Rational; 6]) -> Result<LemmaVerdict> {
    if ranks.iter().any(|r| *r <= Rational::zero()) {
        return Err(Error::Invalid("ranks must be positive"));
    }
    let [r1, r2, r3, r4, r5, r6] = ranks;
    let [e1, e2, e3, e4, e5, e6] = degrees;
    if r1 != r2 + r3 || r4 != r5 + r6 || e1 != e2 + e3 || e4 != e5 + e6 {
        return Err(Error::SumConstraint);
    }
    let (m1, m2, m3) = (e1 / r1, e2 / r2, e3 / r3);
    let (m4, m5, m6) = (e4 / r4, e5 / r5, e6 / r6);
    let ratio_ge = r4 * r3 >= r6 * r1;
    let ratio_gt = r4 * r3 > r6 * r1;
    let common = m6 >= m3 && m5 >= m2 && ratio_ge;
    let base_a = common && m2 >= m3;
    let base_b = common && m5 >= m6;
    let outer_strict = m5 > m2 || m6 > m3;
    let strict_a = base_a && (outer_strict || (m2 > m3 && ratio_gt));
    let strict_b = base_b && (outer_strict || (m5 > m6 && ratio_gt));
    Ok(LemmaVerdict {
        hypotheses_hold: base_a || base_b,
        conclusion_holds: m4 >= m1,
        strict_hypotheses_hold: strict_a || strict_b,
        strict_conclusion_holds: m4 > m1,
    })
}

/// Result of the weighted-slope estimate: the verdict plus the two weighted
/// averages it compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlopeEstimateVerdict {
    pub verdict: LemmaVerdict,
    pub w: Rational,
    pub w_prime: Rational,
}

/// Weighted-slope estimate for triples `m1 > m2 > m3 >= 0` and
/// `m1' > m2' > m3' >= 0` of integers and rational weights `q`, `q'`.
/// Hypotheses: `q_i <= q_i'` for all i, `q_1' <= q_2'`, `q_3' <= q_2'`,
/// `m1 m3' <= m1' m3` and `m2 m1' <= m2' m1`; conclusion `w <= w'` for
///
/// `w = (m3 q1 + (m2 - m3) q2 + (m1 - m2) q3) / m1`
///
/// and likewise `w'`. Strict refinement: `w < w'` if `q_1' < q_2'` with
/// `m1 m3' < m1' m3`, or `q_3' < q_2'` with `m2 m1' < m2' m1`.
pub fn slope_estimate_check(
    m: [i64; 3],
    m_prime: [i64; 3],
    q: [Rational; 3],
    q_prime: [Rational; 3],
) -> Result<SlopeEstimateVerdict> {
    for triple in [m, m_prime] {
        if !(triple[0] > triple[1] && triple[1] > triple[2] && triple[2] >= 0) {
            return Err(Error::OrderingViolated(
                "weights must satisfy m1 > m2 > m3 >= 0",
            ));
        }
    }
    let weighted = |m: [i64; 3], q: [Rational; 3]| {
        (rational(m[2], 1) * q[0]
            + rational(m[1] - m[2], 1) * q[1]
            + rational(m[0] - m[1], 1) * q[2])
            / rational(m[0], 1)
    };
    let w = weighted(m, q);
    let w_prime = weighted(m_prime, q_prime);
    let cross_13 = m[0] * m_prime[2] - m_prime[0] * m[2];
    let cross_21 = m[1] * m_prime[0] - m_prime[1] * m[0];
    let hypotheses = q[0] <= q_prime[0]
        && q[1] <= q_prime[1]
        && q[2] <= q_prime[2]
        && q_prime[0] <= q_prime[1]
        && q_prime[2] <= q_prime[1]
        && cross_13 <= 0
        && cross_21 <= 0;
    let strict = hypotheses
        && ((q_prime[0] < q_prime[1] && cross_13 < 0)
            || (q_prime[2] < q_prime[1] && cross_21 < 0));
    Ok(SlopeEstimateVerdict {
        verdict: LemmaVerdict {
            hypotheses_hold: hypotheses,
            conclusion_holds: w <= w_prime,
            strict_hypotheses_hold: strict,
            strict_conclusion_holds: w < w_prime,
        },
        w,
        w_prime,
    })
}

/// Tally of a seeded randomized counterexample search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaSearchOutcome {
    pub samples: u64,
    pub hypothesis_hits: u64,
    pub strict_hits: u64,
    pub counterexamples: u64,
    pub first_counterexample: Option<String>,
}

fn small_rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rational {
    rational(
        rng.gen_range(-max_num..=max_num),
        rng.gen_range(1..=max_den),
    )
}

fn positive_rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rational {
    rational(rng.gen_range(1..=max_num), rng.gen_range(1..=max_den))
}

/// Randomized search for inputs where the slope-decomposition lemma's
/// hypotheses hold but a conclusion fails. Slopes and ranks are sampled
/// from small grids so boundary (equality) cases come up constantly;
/// every other sample widens the grid up to numerators/denominators of 50.
pub fn search_varlem(seed: u64, samples: u64) -> LemmaSearchOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outcome = LemmaSearchOutcome {
        samples,
        hypothesis_hits: 0,
        strict_hits: 0,
        counterexamples: 0,
        first_counterexample: None,
    };
    for i in 0..samples {
        let (num, den) = if i % 2 == 0 { (2, 2) } else { (50, 5) };
        let mu: Vec<Rational> = (0..4).map(|_| small_rational(&mut rng, num, den)).collect();
        let (mu2, mu3, mu5, mu6) = (mu[0], mu[1], mu[2], mu[3]);
        let rk: Vec<Rational> = (0..4)
            .map(|_| positive_rational(&mut rng, num.min(6), den.min(3)))
            .collect();
        let (r2, r3, r5, r6) = (rk[0], rk[1], rk[2], rk[3]);
        let ranks = [r2 + r3, r2, r3, r5 + r6, r5, r6];
        let degrees = [
            r2 * mu2 + r3 * mu3,
            r2 * mu2,
            r3 * mu3,
            r5 * mu5 + r6 * mu6,
            r5 * mu5,
            r6 * mu6,
        ];
        let verdict = varlem_check(ranks, degrees).expect("sums hold by construction");
        if verdict.hypotheses_hold {
            outcome.hypothesis_hits += 1;
        }
        if verdict.strict_hypotheses_hold {
            outcome.strict_hits += 1;
        }
        if verdict.is_counterexample() {
            outcome.counterexamples += 1;
            outcome
                .first_counterexample
                .get_or_insert_with(|| format!("ranks={ranks:?} degrees={degrees:?}"));
        }
    }
    outcome
}

/// Randomized search for counterexamples to the weighted-slope estimate.
/// Triples are sampled strictly decreasing by construction; weights are
/// biased so the `q <= q'` hypotheses hold often, with exact ties common.
pub fn search_slope_estimate(seed: u64, samples: u64) -> LemmaSearchOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outcome = LemmaSearchOutcome {
        samples,
        hypothesis_hits: 0,
        strict_hits: 0,
        counterexamples: 0,
        first_counterexample: None,
    };
    for i in 0..samples {
        let (num, den) = if i % 2 == 0 { (2, 2) } else { (50, 5) };
        let triple = |rng: &mut ChaCha8Rng| {
            let m3 = rng.gen_range(0..=3);
            let m2 = m3 + rng.gen_range(1..=3);
            let m1 = m2 + rng.gen_range(1..=3);
            [m1, m2, m3]
        };
        let m = triple(&mut rng);
        let m_prime = triple(&mut rng);
        let nonneg = |rng: &mut ChaCha8Rng| {
            rational(rng.gen_range(0..=num), rng.gen_range(1..=den))
        };
        let q2p = small_rational(&mut rng, num, den);
        let q_prime = [q2p - nonneg(&mut rng), q2p, q2p - nonneg(&mut rng)];
        let q = [
            q_prime[0] - nonneg(&mut rng),
            q_prime[1] - nonneg(&mut rng),
            q_prime[2] - nonneg(&mut rng),
        ];
        let result =
            slope_estimate_check(m, m_prime, q, q_prime).expect("ordered by construction");
        if result.verdict.hypotheses_hold {
            outcome.hypothesis_hits += 1;
        }
        if result.verdict.strict_hypotheses_hold {
            outcome.strict_hits += 1;
        }
        if result.verdict.is_counterexample() {
            outcome.counterexamples += 1;
            outcome
                .first_counterexample
                .get_or_insert_with(|| format!("m={m:?} m'={m_prime:?} q={q:?} q'={q_prime:?}"));
        }
    }
    outcome
}
