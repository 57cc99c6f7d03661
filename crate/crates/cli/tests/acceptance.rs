//! Acceptance suite: one test per criterion, each printing a PASS line
//! (run with `--nocapture` to see them). Everything is exact arithmetic,
//! so every comparison below is equality -- there are no tolerances.
//!
//! The randomized searches honor the RIBBONLAB_SEED environment variable.

use std::path::PathBuf;
use std::process::Command;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ribbonlab_core::invariants::{
    gvb_degrees_from_index, index_from_degrees, CompleteType, RibbonInvariants,
};
use ribbonlab_core::localalg::{verify_tables, TruncatedRingParams};
use ribbonlab_core::semistability::{
    enumerate_ss_strata, search_slope_estimate, search_varlem, ss_necessary, ss_verdict,
    stable_necessary, SSStatus,
};
use ribbonlab_core::strata::{
    closure_meets, is_admissible, moduli_dimension, specializes, stratum_dimension,
};
use ribbonlab_core::tangent::{
    end_euler_via_dimension, end_invariants, LocalTypeProfile, ProfilePoint,
};

fn inv(gbar: i64, delta: i64) -> RibbonInvariants {
    RibbonInvariants::new(gbar, delta).unwrap()
}

fn ct(r0: i64, r1: i64, d0: i64, d1: i64) -> CompleteType {
    CompleteType::new(r0, r1, d0, d1).unwrap()
}

fn seed() -> u64 {
    std::env::var("RIBBONLAB_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x5EED_0001)
}

#[test]
fn criterion_1_local_table_oracle() {
    let started = std::time::Instant::now();
    for p in [2u64, 3, 10007] {
        let params = TruncatedRingParams::new(p, 24).unwrap();
        let report = verify_tables(params, 5).unwrap();
        assert_eq!(report.ext_entries.len(), 196);
        assert_eq!(report.coker_entries.len(), 36);
        for e in &report.ext_entries {
            assert!(
                e.matches,
                "p={p}: {} k={} computed {:?}/{:?} expected {:?}/{:?}",
                e.case, e.k, e.computed.values, e.computed_cyclic, e.expected.values,
                e.expected_cyclic
            );
        }
        for e in &report.coker_entries {
            assert!(
                e.matches,
                "p={p}: coker n={} m={}: computed {} expected {}",
                e.n, e.m, e.computed, e.expected
            );
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}, budget is one minute");
    println!(
        "criterion 1 (local Hom/Ext tables, p in {{2,3,10007}}, N=24, n,m <= 5, k <= 3): PASS in {elapsed:?}"
    );
}

#[test]
fn criterion_2_truncation_stability() {
    let p24 = TruncatedRingParams::new(10007, 24).unwrap();
    let p28 = TruncatedRingParams::new(10007, 28).unwrap();
    let small = verify_tables(p24, 5).unwrap();
    let large = verify_tables(p28, 5).unwrap();
    assert!(small.all_match() && large.all_match());
    assert_eq!(small.ext_entries.len(), large.ext_entries.len());
    for (a, b) in small.ext_entries.iter().zip(&large.ext_entries) {
        assert_eq!(a.case, b.case);
        assert_eq!(a.k, b.k);
        assert_eq!(a.computed.rank, b.computed.rank, "{} k={}", a.case, a.k);
        assert_eq!(a.computed.torsion, b.computed.torsion, "{} k={}", a.case, a.k);
        let common = a.computed.window.min(b.computed.window);
        assert_eq!(
            a.computed.values[..common],
            b.computed.values[..common],
            "{} k={}",
            a.case,
            a.k
        );
        assert_eq!(a.computed_cyclic, b.computed_cyclic, "{} k={}", a.case, a.k);
    }
    for (a, b) in small.coker_entries.iter().zip(&large.coker_entries) {
        assert_eq!((a.n, a.m, a.computed), (b.n, b.m, b.computed));
    }
    println!("criterion 2 (truncation stability N=24 vs N=28): PASS");
}

fn windowed_types(ribbon: RibbonInvariants, r: i64, d: i64, lo: i64, hi: i64) -> Vec<CompleteType> {
    let mut types = vec![ct(r, 0, d, 0)];
    for r1 in 1..=r / 2 {
        for d1 in lo..=hi {
            let t = ct(r - r1, r1, d - d1, d1);
            if is_admissible(ribbon, t) {
                types.push(t);
            }
        }
    }
    types
}

#[test]
fn criterion_3_order_axioms() {
    let mut pairs = 0u64;
    for (gbar, delta) in [(0, -2), (0, 0), (0, 3), (2, -2), (2, 0), (2, 3)] {
        let ribbon = inv(gbar, delta);
        for r in 1..=5 {
            for d in -6..=6 {
                let types = windowed_types(ribbon, r, d, -8, 8);
                for &a in &types {
                    for &b in &types {
                        let ab = specializes(a, b).unwrap();
                        let ba = specializes(b, a).unwrap();
                        assert!(ab || ba, "totality fails: {a} vs {b}");
                        if ab && ba {
                            assert_eq!(a, b, "antisymmetry fails: {a} vs {b}");
                        }
                        assert_eq!(
                            closure_meets(ribbon, a, b).unwrap(),
                            ab,
                            "closure relation differs from specialization for {a}, {b}"
                        );
                        pairs += 1;
                        for &c in &types {
                            if ab && specializes(b, c).unwrap() {
                                assert!(
                                    specializes(a, c).unwrap(),
                                    "transitivity fails: {a} >= {b} >= {c}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    println!("criterion 3 (specialization is a total order, closure iff order; {pairs} pairs): PASS");
}

#[test]
fn criterion_4_dimension_monotonicity_and_trichotomy() {
    for gbar in 0..=4 {
        for delta in -4..=8 {
            let ribbon = inv(gbar, delta);
            let canonical = 2 * gbar - 2;
            for r in 1..=5 {
                for d in -6..=6 {
                    let types = windowed_types(ribbon, r, d, -8, 8);
                    if delta <= canonical {
                        for &a in &types {
                            for &b in &types {
                                if specializes(a, b).unwrap() {
                                    assert!(
                                        stratum_dimension(ribbon, a).unwrap()
                                            <= stratum_dimension(ribbon, b).unwrap(),
                                        "monotonicity fails at gbar={gbar} delta={delta}: {a} >= {b}"
                                    );
                                }
                            }
                        }
                    }
                    if delta == canonical {
                        for &t in &types {
                            assert_eq!(
                                stratum_dimension(ribbon, t).unwrap(),
                                r * r * (gbar - 1),
                                "equidimensionality fails for {t}"
                            );
                        }
                    }
                    if delta > canonical {
                        // an admissible rigid type with these ranks; the
                        // dimension formula does not involve the degrees
                        let rigid = if r % 2 == 0 {
                            let half = r / 2;
                            ct(half, half, half * delta.abs() + d.abs(), 0)
                        } else {
                            ct((r + 1) / 2, r / 2, d, 0)
                        };
                        assert!(is_admissible(ribbon, rigid), "{rigid} at delta={delta}");
                        let expected = if r % 2 == 0 {
                            r * r * (2 * gbar - 2 + delta) / 4
                        } else {
                            ((r * r + 1) * (2 * gbar - 2) + (r * r - 1) * delta) / 4
                        };
                        assert_eq!(moduli_dimension(ribbon, r).unwrap(), expected);
                        assert_eq!(
                            moduli_dimension(ribbon, r).unwrap(),
                            stratum_dimension(ribbon, rigid).unwrap(),
                            "gbar={gbar} delta={delta} r={r}"
                        );
                    }
                }
            }
        }
    }
    // the pinned closed-form spot check
    assert_eq!(moduli_dimension(inv(2, 5), 3).unwrap(), 15);
    println!("criterion 4 (dimension monotonicity, equidimensionality, Fano closed forms): PASS");
}

#[test]
fn criterion_5_cross_formula_consistency() {
    let mut rng = ChaCha8Rng::seed_from_u64(seed() ^ 0xC0FFEE);
    let samples = 10_000;
    for _ in 0..samples {
        let gbar = rng.gen_range(0..=3i64);
        let delta = rng.gen_range(-3..=3i64);
        let ribbon = inv(gbar, delta);
        let r0 = rng.gen_range(1..=5i64);
        let r1 = rng.gen_range(0..=r0);
        let n_points = rng.gen_range(0..=4usize);
        let points: Vec<ProfilePoint> = (0..n_points)
            .map(|i| {
                let mut list: Vec<i64> =
                    (0..r1).map(|_| rng.gen_range(0..=5i64)).collect();
                list.sort_unstable_by(|a, b| b.cmp(a));
                ProfilePoint {
                    name: format!("p{i}"),
                    multiplicities: list,
                }
            })
            .collect();
        let iota: i64 = points.iter().flat_map(|p| &p.multiplicities).sum();
        let d1 = if r1 == 0 { 0 } else { rng.gen_range(-5..=5i64) };
        let d0 = if r0 == r1 {
            iota + d1 + r0 * delta
        } else {
            rng.gen_range(-5..=5i64)
        };
        let t = ct(r0, r1, d0, d1);
        let profile = LocalTypeProfile::new(ribbon, t, points).unwrap();

        // both cokernel expressions agree
        assert_eq!(
            profile.coker_beta_length(),
            r1 * profile.iota() - profile.odd_weighted_sum()
        );
        // Riemann-Roch chi of End equals the dimension-defect expression
        let end = end_invariants(&profile);
        assert_eq!(end.euler_characteristic, end_euler_via_dimension(&profile));

        // degree/index round trip on generalized vector bundles
        if r0 == r1 {
            let got = index_from_degrees(ribbon, t).unwrap();
            assert_eq!(got, iota);
            assert_eq!(
                gvb_degrees_from_index(ribbon, r0, t.generalized_degree(), got).unwrap(),
                t
            );
        }
    }
    println!("criterion 5 (cross-formula consistency on {samples} random profiles): PASS");
}

#[test]
fn criterion_6_inequality_lemmas() {
    let samples = 100_000;
    let varlem = search_varlem(seed(), samples);
    assert_eq!(
        varlem.counterexamples, 0,
        "first: {:?}",
        varlem.first_counterexample
    );
    assert!(
        varlem.hypothesis_hits > 1_000,
        "search is vacuous: {} hits",
        varlem.hypothesis_hits
    );
    assert!(varlem.strict_hits > 100);

    let estimate = search_slope_estimate(seed(), samples);
    assert_eq!(
        estimate.counterexamples, 0,
        "first: {:?}",
        estimate.first_counterexample
    );
    assert!(estimate.hypothesis_hits > 1_000);
    assert!(estimate.strict_hits > 100);
    println!(
        "criterion 6 (slope lemmas, {samples} samples each, {}/{} hypothesis hits, 0 counterexamples): PASS",
        varlem.hypothesis_hits, estimate.hypothesis_hits
    );
}

#[test]
fn criterion_7_semistability_enumeration() {
    for gbar in 0..=3 {
        for delta in 0..=6 {
            let ribbon = inv(gbar, delta);
            for r in 1..=5 {
                for d in -10..=10 {
                    for stable in [false, true] {
                        let fast = enumerate_ss_strata(ribbon, r, d, stable).unwrap();
                        // brute force over a padded d1 window
                        let mut brute = vec![ct(r, 0, d, 0)];
                        for r1 in 1..=r / 2 {
                            let lo = Integer::div_floor(&((d - r * delta) * r1), &r) - 2;
                            let hi = Integer::div_ceil(&(d * r1), &r) + 2;
                            for d1 in lo..=hi {
                                let t = ct(r - r1, r1, d - d1, d1);
                                if is_admissible(ribbon, t) {
                                    let pass = if stable {
                                        stable_necessary(ribbon, t).unwrap()
                                    } else {
                                        ss_necessary(ribbon, t).unwrap()
                                    };
                                    if pass {
                                        brute.push(t);
                                    }
                                }
                            }
                        }
                        brute.sort_by_key(|t| {
                            (std::cmp::Reverse(t.r1()), std::cmp::Reverse(t.d1()))
                        });
                        assert_eq!(
                            fast, brute,
                            "gbar={gbar} delta={delta} r={r} d={d} stable={stable}"
                        );
                    }
                }
            }
        }
    }

    // negative delta: only the r1 = 0 stratum survives
    for delta in -3..=-1 {
        let ribbon = inv(2, delta);
        for r in 1..=5 {
            for d in -10..=10 {
                let got = enumerate_ss_strata(ribbon, r, d, false).unwrap();
                assert_eq!(got, vec![ct(r, 0, d, 0)], "delta={delta} r={r} d={d}");
            }
        }
    }

    // low-genus vector-bundle special cases
    for r in 1..=5i64 {
        for d in -10..=10i64 {
            let t = ct(r, 0, d, 0);
            let v = ss_verdict(inv(0, 1), t, false).unwrap();
            let expect = if d.rem_euclid(r) == 0 {
                SSStatus::Nonempty
            } else {
                SSStatus::Empty
            };
            assert_eq!(v.status, expect, "genus 0 semistable r={r} d={d}");

            let v = ss_verdict(inv(0, 1), t, true).unwrap();
            let expect = if r == 1 {
                SSStatus::Nonempty
            } else {
                SSStatus::Empty
            };
            assert_eq!(v.status, expect, "genus 0 stable r={r} d={d}");

            let v = ss_verdict(inv(1, 1), t, true).unwrap();
            let expect = if r.gcd(&d) == 1 {
                SSStatus::Nonempty
            } else {
                SSStatus::Empty
            };
            assert_eq!(v.status, expect, "genus 1 stable r={r} d={d}");
        }
    }
    println!("criterion 7 (stability enumeration vs brute force; low-genus special cases): PASS");
}

#[test]
fn criterion_8_golden_cli_outputs() {
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let profile = golden.join("profile_end_example.json");
    let cases: [(&[&str], &str); 3] = [
        (
            &[
                "strata", "--gbar", "2", "--delta", "1", "-R", "2", "-D", "0", "--d1", "-5..5",
            ],
            "strata.txt",
        ),
        (
            &["tangent", "--profile", profile.to_str().unwrap()],
            "tangent.txt",
        ),
        (
            &["localext", "--p", "10007", "--N", "24", "--n-max", "5"],
            "localext.txt",
        ),
    ];
    for (args, file) in cases {
        let out = Command::new(env!("CARGO_BIN_EXE_ribbonlab"))
            .args(args)
            .output()
            .expect("binary runs");
        assert_eq!(out.status.code(), Some(0), "{file}: {:?}", out.status);
        let expected = std::fs::read(golden.join(file)).expect("golden file exists");
        assert_eq!(
            out.stdout,
            expected,
            "{file} differs:\n--- got ---\n{}",
            String::from_utf8_lossy(&out.stdout)
        );
    }
    println!("criterion 8 (three golden CLI outputs, byte-for-byte): PASS");
}
