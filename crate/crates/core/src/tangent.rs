//! Local type profiles and the invariants they determine: the index, the
//! tangent-codimension defect gamma, the complete type and Euler
//! characteristic of the endomorphism sheaf, both tangent-space
//! codimensions and the higher Ext torsion/reflexive invariants.
//!
//! A torsion-free sheaf of complete type `(r0, r1; d0, d1)` has, at each
//! point, a stalk `Ored^(r0-r1) + I_{n_1} + ... + I_{n_b}` for a unique
//! weakly decreasing list `n_1 >= ... >= n_b` with `b = r1`. A profile
//! records those lists at the finitely many points where they are nonzero;
//! every formula here depends only on the multiset of lists, so points are
//! opaque names.

use crate::error::{Error, Result};
use crate::invariants::{index_from_degrees, riemann_roch, CompleteType, RibbonInvariants};
use crate::rational::{int, Rational};
use crate::strata::{is_admissible, stratum_dimension};

/// One point of the support with its weakly decreasing multiplicity list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfilePoint {
    pub name: String,
    pub multiplicities: Vec<i64>,
}

/// A validated local type profile for a sheaf of ambient complete type `t`
/// on a ribbon with the given invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalTypeProfile {
    inv: RibbonInvariants,
    t: CompleteType,
    points: Vec<ProfilePoint>,
}

impl LocalTypeProfile {
    /// Validates and normalizes a profile: each list must be weakly
    /// decreasing with non-negative entries and length exactly `r1`; points
    /// whose list is all zero are dropped; for `r0 = r1` the total of all
    /// entries must equal `d0 - d1 - r*delta`.
    pub fn new(
        inv: RibbonInvariants,
        t: CompleteType,
        points: Vec<ProfilePoint>,
    ) -> Result<Self> {
        if !is_admissible(inv, t) {
            return Err(Error::InadmissibleType);
        }
        let b = t.r1();
        let mut seen = std::collections::BTreeSet::new();
        for point in &points {
            if !seen.insert(point.name.clone()) {
                return Err(Error::Profile(format!(
                    "duplicate point name {:?}",
                    point.name
                )));
            }
            if point.multiplicities.len() as i64 != b {
                return Err(Error::Profile(format!(
                    "profile list at {:?} must have length r1 = {b}",
                    point.name
                )));
            }
            if point.multiplicities.iter().any(|&n| n < 0) {
                return Err(Error::Profile(format!(
                    "profile entries at {:?} must be non-negative",
                    point.name
                )));
            }
            if point.multiplicities.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::Profile(
                    "profile lists must be weakly decreasing".into(),
                ));
            }
        }
        let points: Vec<ProfilePoint> = points
            .into_iter()
            .filter(|p| p.multiplicities.iter().any(|&n| n > 0))
            .collect();
        let profile = Self { inv, t, points };
        if t.r0() == t.r1() {
            let expected = index_from_degrees(inv, t)?;
            if profile.iota() != expected {
                return Err(Error::Profile(format!(
                    "profile index {} must equal d0 - d1 - r*delta = {expected} for a generalized vector bundle",
                    profile.iota()
                )));
            }
        }
        Ok(profile)
    }

    pub fn ribbon(&self) -> RibbonInvariants {
        self.inv
    }

    pub fn complete_type(&self) -> CompleteType {
        self.t
    }

    pub fn points(&self) -> &[ProfilePoint] {
        &self.points
    }

    /// Index: the total length of the torsion of the restriction,
    /// `sum over points of sum of n_i`.
    pub fn iota(&self) -> i64 {
        self.points
            .iter()
            .map(|p| p.multiplicities.iter().sum::<i64>())
            .sum()
    }

    /// `sum over points of sum of (2i - 1) n_i` (1-based positions).
    pub fn odd_weighted_sum(&self) -> i64 {
        self.points
            .iter()
            .map(|p| {
                p.multiplicities
                    .iter()
                    .enumerate()
                    .map(|(i, &n)| (2 * i as i64 + 1) * n)
                    .sum::<i64>()
            })
            .sum()
    }

    /// `gamma = (r0 - r1) * iota + sum (2i - 1) n_i`.
    pub fn gamma(&self) -> i64 {
        (self.t.r0() - self.t.r1()) * self.iota() + self.odd_weighted_sum()
    }

    /// Length of the cokernel of the restriction-to-`N*F` map on
    /// endomorphisms: `sum over points of sum over i < j of (n_i - n_j)`.
    /// Always equals `b*iota - sum (2i - 1) n_i`.
    pub fn coker_beta_length(&self) -> i64 {
        self.points
            .iter()
            .map(|p| {
                let list = &p.multiplicities;
                let mut total = 0;
                for i in 0..list.len() {
                    for j in i + 1..list.len() {
                        total += list[i] - list[j];
                    }
                }
                total
            })
            .sum()
    }
}

/// Numerical invariants of the endomorphism sheaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EndInvariants {
    pub complete_type: CompleteType,
    pub generalized_rank: i64,
    pub generalized_degree: i64,
    pub euler_characteristic: i64,
}

/// Complete type, generalized rank/degree and Euler characteristic of
/// `End(F)` for a sheaf with the given profile:
/// type `(r0^2, r1^2; -delta r1 (r0 - r1) + r0 iota,
/// -delta r1^2 - b iota + sum (2i-1) n_i)`.
pub fn end_invariants(profile: &LocalTypeProfile) -> EndInvariants {
    let (inv, t) = (profile.ribbon(), profile.complete_type());
    let (r0, r1) = (t.r0(), t.r1());
    let delta = inv.delta();
    let iota = profile.iota();
    let weighted = profile.odd_weighted_sum();
    let d0 = -delta * r1 * (r0 - r1) + r0 * iota;
    let d1 = -delta * r1 * r1 - r1 * iota + weighted;
    let end_type = CompleteType::new(r0 * r0, r1 * r1, d0, d1).expect("squares are valid ranks");
    let rank = r0 * r0 + r1 * r1;
    let degree = d0 + d1;
    EndInvariants {
        complete_type: end_type,
        generalized_rank: rank,
        generalized_degree: degree,
        euler_characteristic: riemann_roch(inv, rank, degree),
    }
}

/// The Euler characteristic of `End(F)` expressed through the stratum
/// dimension: `-dim + a*iota + sum (2i-1) n_i`. Must agree with the
/// Riemann-Roch route in [`end_invariants`]; the two are computed along
/// genuinely different formulas.
pub fn end_euler_via_dimension(profile: &LocalTypeProfile) -> i64 {
    let t = profile.complete_type();
    let dim = stratum_dimension(profile.ribbon(), t).expect("profile type is admissible");
    -dim + (t.r0() - t.r1()) * profile.iota() + profile.odd_weighted_sum()
}

/// Codimension of the locally-trivial deformations inside the stratum
/// tangent space: `a*iota + sum (2i-1) n_i`, which equals `gamma`.
pub fn tangent_codim_local(profile: &LocalTypeProfile) -> i64 {
    let t = profile.complete_type();
    (t.r0() - t.r1()) * profile.iota() + profile.odd_weighted_sum()
}

/// Codimension of the stratum tangent space inside the full tangent space:
/// `h0_term + a*iota + sum (2i-1) n_i`. The `h0_term` is the dimension of
/// the sections of the twisted endomorphism bundle of the reflexive hull;
/// it is not determined by the profile and must be supplied by the caller.
/// For `r0 = r1` that bundle is zero, so the term must be 0.
pub fn tangent_codim_full(profile: &LocalTypeProfile, h0_term: i64) -> Result<i64> {
    if h0_term < 0 {
        return Err(Error::Invalid("h0 term must be non-negative"));
    }
    let t = profile.complete_type();
    if t.r0() == t.r1() && h0_term != 0 {
        return Err(Error::Invalid(
            "h0 term must be zero for a generalized vector bundle",
        ));
    }
    Ok(h0_term + tangent_codim_local(profile))
}

/// Torsion length, reflexive rank and reflexive slope of `Ext^k(F, F)` for
/// every `k >= 1`: `(2 iota a + 2 sum (2i-1) n_i, (r0-r1)^2, delta)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtHigherInvariants {
    pub torsion_length: i64,
    pub reflexive_rank: i64,
    pub reflexive_slope: Rational,
}

pub fn ext_higher_invariants(profile: &LocalTypeProfile) -> ExtHigherInvariants {
    let t = profile.complete_type();
    let a = t.r0() - t.r1();
    ExtHigherInvariants {
        torsion_length: 2 * profile.iota() * a + 2 * profile.odd_weighted_sum(),
        reflexive_rank: a * a,
        reflexive_slope: int(profile.ribbon().delta()),
    }
}

/// The profile of the general member of an admissible stratum: empty for
/// `r0 > r1`; for `r0 = r1 = r`, exactly `iota = d0 - d1 - r*delta`
/// distinct points each carrying `[1, 0, ..., 0]`.
pub fn generic_profile(inv: RibbonInvariants, t: CompleteType) -> Result<LocalTypeProfile> {
    if !is_admissible(inv, t) {
        return Err(Error::InadmissibleType);
    }
    if t.r0() > t.r1() {
        return LocalTypeProfile::new(inv, t, Vec::new());
    }
    let iota = index_from_degrees(inv, t)?;
    let points = (0..iota)
        .map(|i| {
            let mut multiplicities = vec![0; t.r1() as usize];
            multiplicities[0] = 1;
            ProfilePoint {
                name: format!("p{}", i + 1),
                multiplicities,
            }
        })
        .collect();
    LocalTypeProfile::new(inv, t, points)
}
