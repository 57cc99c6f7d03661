//! The stratification of the stack of torsion-free sheaves by complete type:
//! admissibility, stratum dimensions, the specialization order and closure
//! relation, the irreducible-component trichotomy, and the generic Segre
//! invariant driving the Fano-case deformation argument.

use std::cmp::Reverse;

use crate::error::{Error, Result};
use crate::invariants::{CompleteType, RibbonInvariants};
use crate::rational::{rational, Rational};

/// Position of `delta` relative to the canonical degree `2*gbar - 2` of the
/// reduced curve. It governs which strata closures are irreducible
/// components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrichotomyClass {
    CanonicallyPolarized,
    CalabiYau,
    Fano,
}

impl TrichotomyClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            TrichotomyClass::CanonicallyPolarized => "canonically-polarized",
            TrichotomyClass::CalabiYau => "calabi-yau",
            TrichotomyClass::Fano => "fano",
        }
    }
}

impl std::fmt::Display for TrichotomyClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn trichotomy_class(inv: RibbonInvariants) -> TrichotomyClass {
    let canonical = 2 * inv.gbar() - 2;
    match inv.delta().cmp(&canonical) {
        std::cmp::Ordering::Less => TrichotomyClass::CanonicallyPolarized,
        std::cmp::Ordering::Equal => TrichotomyClass::CalabiYau,
        std::cmp::Ordering::Greater => TrichotomyClass::Fano,
    }
}

/// Whether the stratum of complete type `t` is non-empty:
/// `r0 >= r1`, `r1 = 0 => d1 = 0`, and `r0 = r1 => d0 >= d1 + r1*delta`.
pub fn is_admissible(inv: RibbonInvariants, t: CompleteType) -> bool {
    if t.r0() < t.r1() {
        return false;
    }
    if t.r1() == 0 && t.d1() != 0 {
        return false;
    }
    if t.r0() == t.r1() && t.d0() < t.d1() + t.r1() * inv.delta() {
        return false;
    }
    true
}

/// Rigid types have `r0 = r1` (even R) or `r0 = r1 + 1` (odd R).
pub fn is_rigid(t: CompleteType) -> bool {
    t.r0() == t.r1() || t.r0() == t.r1() + 1
}

/// Dimension `(r0^2 + r1^2)(gbar - 1) + r0*r1*delta` of an admissible
/// stratum.
pub fn stratum_dimension(inv: RibbonInvariants, t: CompleteType) -> Result<i64> {
    if !is_admissible(inv, t) {
        return Err(Error::InadmissibleType);
    }
    let (r0, r1) = (t.r0(), t.r1());
    Ok((r0 * r0 + r1 * r1) * (inv.gbar() - 1) + r0 * r1 * inv.delta())
}

/// The specialization order on types with the same `(R, D)`:
/// `a >= b` iff `a.r1 > b.r1`, or `a.r1 = b.r1` and `a.d1 >= b.d1`.
pub fn specializes(a: CompleteType, b: CompleteType) -> Result<bool> {
    if a.generalized_rank() != b.generalized_rank()
        || a.generalized_degree() != b.generalized_degree()
    {
        return Err(Error::MismatchedClass);
    }
    Ok(a.r1() > b.r1() || (a.r1() == b.r1() && a.d1() >= b.d1()))
}

/// Whether the closure of stratum `a` meets stratum `b`. For admissible
/// types with the same `(R, D)` this happens exactly when `a >= b` in the
/// specialization order.
pub fn closure_meets(inv: RibbonInvariants, a: CompleteType, b: CompleteType) -> Result<bool> {
    if !is_admissible(inv, a) || !is_admissible(inv, b) {
        return Err(Error::InadmissibleType);
    }
    specializes(a, b)
}

/// Whether the closure of the stratum of type `t` is an irreducible
/// component of the stack: every admissible stratum in the canonically
/// polarized and Calabi-Yau classes, only the rigid ones in the Fano class.
pub fn is_component(inv: RibbonInvariants, t: CompleteType) -> Result<bool> {
    if !is_admissible(inv, t) {
        return Err(Error::InadmissibleType);
    }
    Ok(match trichotomy_class(inv) {
        TrichotomyClass::Fano => is_rigid(t),
        _ => true,
    })
}

/// Dimension of the full stack of torsion-free sheaves of generalized rank
/// `r`: `r^2 (gbar - 1)` outside the Fano class, and the dimension of the
/// rigid stratum in the Fano class.
pub fn moduli_dimension(inv: RibbonInvariants, r: i64) -> Result<i64> {
    if r < 1 {
        return Err(Error::ZeroRank);
    }
    let (g, delta) = (inv.gbar(), inv.delta());
    if delta <= 2 * g - 2 {
        return Ok(r * r * (g - 1));
    }
    let dim = if r % 2 == 0 {
        r * r * (2 * g - 2 + delta)
    } else {
        (r * r + 1) * (2 * g - 2) + (r * r - 1) * delta
    };
    debug_assert_eq!(dim % 4, 0);
    Ok(dim / 4)
}

/// Whether every admissible stratum lies in the closure of some rigid
/// stratum; true exactly when `delta > 2*gbar - 2`.
pub fn rigid_deformable(inv: RibbonInvariants) -> bool {
    inv.delta() > 2 * inv.gbar() - 2
}

/// Component status of a stratum closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentStatus {
    Component,
    NotComponent,
}

/// Everything the stratification knows about one complete type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StratumReport {
    pub complete_type: CompleteType,
    pub admissible: bool,
    /// Present exactly when the type is admissible.
    pub dimension: Option<i64>,
    pub is_rigid: bool,
    pub component_status: ComponentStatus,
}

pub fn stratum_report(inv: RibbonInvariants, t: CompleteType) -> StratumReport {
    let admissible = is_admissible(inv, t);
    let component = admissible && is_component(inv, t).expect("admissible");
    StratumReport {
        complete_type: t,
        admissible,
        dimension: admissible.then(|| stratum_dimension(inv, t).expect("admissible")),
        is_rigid: is_rigid(t),
        component_status: if component {
            ComponentStatus::Component
        } else {
            ComponentStatus::NotComponent
        },
    }
}

/// All admissible types of fixed `(R, D)` whose `d1` lies in
/// `[d1_min, d1_max]`, plus the unique `r1 = 0` stratum `(R,0;D,0)`
/// regardless of the window, sorted descending in the specialization order
/// (`r1` descending, then `d1` descending).
pub fn enumerate_admissible(
    inv: RibbonInvariants,
    r: i64,
    d: i64,
    d1_min: i64,
    d1_max: i64,
) -> Result<Vec<StratumReport>> {
    if r < 1 {
        return Err(Error::ZeroRank);
    }
    if d1_min > d1_max {
        return Err(Error::EmptyWindow);
    }
    let mut types = vec![CompleteType::new(r, 0, d, 0).expect("valid rank")];
    for r1 in 1..=r / 2 {
        let r0 = r - r1;
        for d1 in d1_min..=d1_max {
            let t = CompleteType::new(r0, r1, d - d1, d1).expect("valid rank");
            if is_admissible(inv, t) {
                types.push(t);
            }
        }
    }
    types.sort_by_key(|t| (Reverse(t.r1()), Reverse(t.d1())));
    Ok(types
        .into_iter()
        .map(|t| stratum_report(inv, t))
        .collect())
}

/// The Segre invariant `s_{n-1}` of the general vector bundle of rank
/// `n >= 2` and degree `d` on a smooth curve of genus `gbar`: the unique
/// integer in `[(n-1)(gbar-1), (n-1)*gbar]` congruent to `-d` mod `n`.
pub fn generic_segre(n: i64, d: i64, gbar: i64) -> Result<i64> {
    if n < 2 {
        return Err(Error::Invalid("segre invariant needs rank at least 2"));
    }
    if gbar < 0 {
        return Err(Error::NegativeGenus);
    }
    let lo = (n - 1) * (gbar - 1);
    let target = (-d).rem_euclid(n);
    for s in lo..=lo + n - 1 {
        if s.rem_euclid(n) == target {
            return Ok(s);
        }
    }
    unreachable!("the interval contains one integer per residue class")
}

/// Slope gap `-s/(n-1) + delta` realized by the rank-drop deformation of a
/// quasi-locally free sheaf, where `s` is a Segre invariant and `n >= 2`
/// plays the role of `r0 - r1`.
pub fn slope_difference_deformation(inv: RibbonInvariants, n: i64, s: i64) -> Result<Rational> {
    if n < 2 {
        return Err(Error::Invalid("slope difference needs rank gap at least 2"));
    }
    Ok(rational(-s, n - 1) + rational(inv.delta(), 1))
}
