//! Ribbon invariants, complete types and the closed-form numerics attached
//! to them: slopes, Riemann-Roch, Hilbert polynomials, duality, and the
//! degree/index arithmetic of generalized line and vector bundles.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{rational, Rational};

/// The numerical data of a ribbon X: the genus `gbar` of the reduced curve
/// and `delta = -deg N`, where N is the nilradical (the ideal sheaf of the
/// reduced curve, a line bundle on it).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RibbonInvariants {
    gbar: i64,
    delta: i64,
}

impl RibbonInvariants {
    pub fn new(gbar: i64, delta: i64) -> Result<Self> {
        if gbar < 0 {
            return Err(Error::NegativeGenus);
        }
        Ok(Self { gbar, delta })
    }

    /// Genus of the reduced curve.
    pub fn gbar(&self) -> i64 {
        self.gbar
    }

    /// `-deg N`, the degree of the normal bundle of the reduced curve.
    pub fn delta(&self) -> i64 {
        self.delta
    }

    /// Arithmetic genus of the ribbon, `g = 2*gbar - 1 + delta`.
    pub fn genus(&self) -> i64 {
        2 * self.gbar - 1 + self.delta
    }
}

impl fmt::Display for RibbonInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gbar={} delta={}", self.gbar, self.delta)
    }
}

/// The complete type `(r0, r1; d0, d1)` of a torsion-free sheaf F: ranks and
/// degrees of the restriction `F|_{Xred}` and of `N*F` from the first
/// canonical filtration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CompleteType {
    r0: i64,
    r1: i64,
    d0: i64,
    d1: i64,
}

impl CompleteType {
    pub fn new(r0: i64, r1: i64, d0: i64, d1: i64) -> Result<Self> {
        if r0 < 0 || r1 < 0 || r0 + r1 < 1 {
            return Err(Error::InvalidRank { r0, r1 });
        }
        Ok(Self { r0, r1, d0, d1 })
    }

    pub fn r0(&self) -> i64 {
        self.r0
    }

    pub fn r1(&self) -> i64 {
        self.r1
    }

    pub fn d0(&self) -> i64 {
        self.d0
    }

    pub fn d1(&self) -> i64 {
        self.d1
    }

    /// Generalized rank `R = r0 + r1`, the generic length.
    pub fn generalized_rank(&self) -> i64 {
        self.r0 + self.r1
    }

    /// Generalized degree `D = d0 + d1`.
    pub fn generalized_degree(&self) -> i64 {
        self.d0 + self.d1
    }

    /// The type `(a, b) = (r0 - r1, r1)` of the generic stalk
    /// `Ored^a + O^b`; defined only when `r0 >= r1`.
    pub fn type_pair(&self) -> Option<(i64, i64)> {
        (self.r0 >= self.r1).then_some((self.r0 - self.r1, self.r1))
    }

    /// Slope `mu = D / R`.
    pub fn slope(&self) -> Rational {
        rational(self.generalized_degree(), self.generalized_rank())
    }
}

impl fmt::Display for CompleteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{},{})", self.r0, self.r1, self.d0, self.d1)
    }
}

/// Slope `D / R` in lowest terms. Rejects `R < 1`.
pub fn slope(r: i64, d: i64) -> Result<Rational> {
    if r < 1 {
        return Err(Error::ZeroRank);
    }
    Ok(rational(d, r))
}

/// Euler characteristic `chi = D + R(1 - gbar)` of a sheaf of generalized
/// rank `r` and degree `d`.
pub fn riemann_roch(inv: RibbonInvariants, r: i64, d: i64) -> i64 {
    d + r * (1 - inv.gbar())
}

/// Coefficients `(constant, linear)` of the Hilbert polynomial
/// `P(T) = D + R(1 - gbar) + R*d_pol*T` with respect to a polarization whose
/// restriction to the reduced curve has degree `d_pol >= 1`.
pub fn hilbert_polynomial(inv: RibbonInvariants, r: i64, d: i64, d_pol: i64) -> (i64, i64) {
    (riemann_roch(inv, r, d), r * d_pol)
}

/// Generalized rank and degree of the dual sheaf:
/// `(R, -D - R*delta + iota)`, where `iota` is the length of the torsion of
/// the restriction to the reduced curve.
pub fn dual_invariants(inv: RibbonInvariants, r: i64, d: i64, iota: i64) -> (i64, i64) {
    (r, -d - r * inv.delta() + iota)
}

/// Complete type of a generalized line bundle `I_Z (x) L`, where `ell` is the
/// degree of `L` restricted to the reduced curve and `len` the length of the
/// 0-dimensional subscheme Z. Its generalized degree is
/// `2*ell - len - delta`.
pub fn glb_invariants(inv: RibbonInvariants, ell: i64, len: i64) -> CompleteType {
    CompleteType::new(1, 1, ell, ell - len - inv.delta()).expect("rank (1,1) is valid")
}

/// Complete degrees of a generalized vector bundle of rank `r`, generalized
/// degree `d` and index `iota`:
/// `d0 = (D + iota + r*delta)/2`, `d1 = (D - iota - r*delta)/2`.
pub fn gvb_degrees_from_index(
    inv: RibbonInvariants,
    r: i64,
    d: i64,
    iota: i64,
) -> Result<CompleteType> {
    if r < 1 {
        return Err(Error::ZeroRank);
    }
    if iota < 0 {
        return Err(Error::NoSuchGvb);
    }
    let doubled = d + iota + r * inv.delta();
    if doubled % 2 != 0 {
        return Err(Error::NoSuchGvb);
    }
    let d0 = doubled / 2;
    CompleteType::new(r, r, d0, d - d0)
}

/// Index `iota = d0 - d1 - r*delta` of a generalized vector bundle of
/// complete type `t`. Rejects types with `r0 != r1` and types whose index
/// would be negative.
pub fn index_from_degrees(inv: RibbonInvariants, t: CompleteType) -> Result<i64> {
    if t.r0() != t.r1() {
        return Err(Error::NotGvb);
    }
    let iota = t.d0() - t.d1() - t.r0() * inv.delta();
    if iota < 0 {
        return Err(Error::InadmissibleType);
    }
    Ok(iota)
}

/// Degrees `(deg F^(1), deg F/F^(1))` of the second canonical filtration:
/// `(d0 - r1*delta, d1 + r1*delta)`. The two always sum to `D`.
pub fn second_filtration_degrees(inv: RibbonInvariants, t: CompleteType) -> (i64, i64) {
    let shift = t.r1() * inv.delta();
    (t.d0() - shift, t.d1() + shift)
}
