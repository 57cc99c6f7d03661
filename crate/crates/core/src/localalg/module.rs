//! Graded modules over the truncated ribbon local ring
//! `k[s, eps] / (eps^2, s^N)`, graded by s-degree with `eps` of degree 0.
//!
//! A module is stored as one F_p vector space per degree `d` in `[0, N)`
//! together with the two commuting actions: `s` of degree +1 and the
//! square-zero `eps` of degree 0. The four standard modules are
//!
//! * `Free(a)`  -- the free module shifted to start in degree `a`
//!   (basis `s^j, s^j eps`; two dimensions per degree);
//! * `Ored(a)`  -- the quotient by `eps`, shifted (one dimension per
//!   degree, `eps` acts as zero);
//! * `Ideal(n)` -- the ideal `(eps, s^n)`, with generator `f = eps` in
//!   degree 0 and `e = s^n` in degree `n`, subject to `eps f = 0` and
//!   `eps e = s^n f`;
//! * `Onp(n)`   -- the length-`n` quotient `k[s]/(s^n)`.

use super::fp::PrimeField;
use super::matrix::FpMatrix;
use crate::error::{Error, Result};

/// Coefficient characteristic and truncation order for the graded engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TruncatedRingParams {
    field: PrimeField,
    truncation: usize,
}

impl TruncatedRingParams {
    /// `p` must be prime and the truncation order `N` at least 4.
    pub fn new(p: u64, truncation: usize) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if truncation < 4 {
            return Err(Error::Truncation(format!(
                "truncation order must be at least 4, got {truncation}"
            )));
        }
        Ok(Self { field, truncation })
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
}

/// The four standard module shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StandardModule {
    Free { shift: usize },
    Ored { shift: usize },
    Ideal { n: usize },
    Onp { n: usize },
}

impl std::fmt::Display for StandardModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StandardModule::Free { shift } => write!(f, "Free({shift})"),
            StandardModule::Ored { shift } => write!(f, "Ored({shift})"),
            StandardModule::Ideal { n } => write!(f, "I_{n}"),
            StandardModule::Onp { n } => write!(f, "O_{n}"),
        }
    }
}

/// A graded module: per-degree dimensions plus the `s` and `eps` actions.
///
/// Basis conventions for `Ideal(n)`: degree `d < n` has the single basis
/// vector `s^d f`; degree `d >= n` has `[s^d f, s^{d-n} e]` in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedModule {
    pub params: TruncatedRingParams,
    /// Dimension of each degree in `[0, N)`.
    pub dims: Vec<usize>,
    /// `s_action[d]` maps degree `d` to degree `d + 1`; the last entry maps
    /// into the zero space.
    pub s_action: Vec<FpMatrix>,
    /// `eps_action[d]` maps degree `d` to itself.
    pub eps_action: Vec<FpMatrix>,
    /// Degrees of the module generators (metadata for window margins).
    pub gen_degrees: Vec<usize>,
}

impl GradedModule {
    pub fn dim(&self, d: isize) -> usize {
        if d < 0 || d as usize >= self.dims.len() {
            0
        } else {
            self.dims[d as usize]
        }
    }

    pub fn max_gen_degree(&self) -> usize {
        self.gen_degrees.iter().copied().max().unwrap_or(0)
    }

    /// Composite `s^steps` from degree `from` to `from + steps`.
    pub fn s_pow(&self, from: usize, steps: usize) -> FpMatrix {
        let n = self.dims.len();
        let target_dim = |d: usize| if d < n { self.dims[d] } else { 0 };
        let mut acc = FpMatrix::identity(target_dim(from));
        for step in 0..steps {
            let d = from + step;
            let next = if d < n {
                self.s_action[d].clone()
            } else {
                FpMatrix::zeros(0, 0)
            };
            if d >= n {
                return FpMatrix::zeros(target_dim(from + steps), target_dim(from));
            }
            acc = next.mul(&acc, self.params.field());
        }
        acc
    }

    /// Checks shapes, `eps^2 = 0` and commutation of the two actions.
    pub fn validate(&self) -> Result<()> {
        let n = self.params.truncation();
        if self.dims.len() != n || self.s_action.len() != n || self.eps_action.len() != n {
            return Err(Error::Invalid("graded module arrays must have length N"));
        }
        let field = self.params.field();
        for d in 0..n {
            let next_dim = if d + 1 < n { self.dims[d + 1] } else { 0 };
            let s = &self.s_action[d];
            let e = &self.eps_action[d];
            if s.rows() != next_dim || s.cols() != self.dims[d] {
                return Err(Error::Invalid("s action has wrong shape"));
            }
            if e.rows() != self.dims[d] || e.cols() != self.dims[d] {
                return Err(Error::Invalid("eps action has wrong shape"));
            }
            if !e.mul(e, field).is_zero() {
                return Err(Error::Invalid("eps action does not square to zero"));
            }
            if d + 1 < n {
                let se = s.mul(e, field);
                let es = self.eps_action[d + 1].mul(s, field);
                if se != es {
                    return Err(Error::Invalid("s and eps actions do not commute"));
                }
            }
        }
        Ok(())
    }
}

/// Builds one of the standard modules. The defining degree must fit inside
/// the truncation; the Ext entry points impose the stronger window margins.
pub fn build_standard(params: TruncatedRingParams, kind: StandardModule) -> Result<GradedModule> {
    let n_trunc = params.truncation();
    match kind {
        StandardModule::Ideal { n } | StandardModule::Onp { n } if n >= n_trunc => {
            return Err(Error::Truncation(format!(
                "{kind} does not fit truncation order {n_trunc}; retry with larger N"
            )));
        }
        StandardModule::Free { shift } | StandardModule::Ored { shift } if shift >= n_trunc => {
            return Err(Error::Truncation(format!(
                "shift {shift} exceeds truncation order {n_trunc}"
            )));
        }
        _ => {}
    }

    let dims: Vec<usize> = (0..n_trunc)
        .map(|d| match kind {
            StandardModule::Free { shift } => {
                if d >= shift {
                    2
                } else {
                    0
                }
            }
            StandardModule::Ored { shift } => usize::from(d >= shift),
            StandardModule::Ideal { n } => {
                if d >= n {
                    2
                } else {
                    1
                }
            }
            StandardModule::Onp { n } => usize::from(d < n),
        })
        .collect();

    let mut s_action = Vec::with_capacity(n_trunc);
    let mut eps_action = Vec::with_capacity(n_trunc);
    for d in 0..n_trunc {
        let here = dims[d];
        let next = if d + 1 < n_trunc { dims[d + 1] } else { 0 };
        let s = match kind {
            // bases are ordered [s^j, s^j eps] (Free), [gen] (Ored, Onp),
            // [s^d f, s^{d-n} e] (Ideal); s maps each basis vector to the
            // one of the same kind a degree up, when it exists
            StandardModule::Ideal { n } => FpMatrix::from_fn(next, here, |i, j| {
                let f_here = 0;
                let e_here = if d >= n { 1 } else { usize::MAX };
                let f_next = 0;
                let e_next = if d + 1 >= n { 1 } else { usize::MAX };
                u64::from((j == f_here && i == f_next) || (j == e_here && i == e_next))
            }),
            _ => FpMatrix::from_fn(next, here, |i, j| u64::from(i == j)),
        };
        let eps = match kind {
            StandardModule::Free { .. } => {
                // eps * s^j = s^j eps, eps * s^j eps = 0
                FpMatrix::from_fn(here, here, |i, j| u64::from(here == 2 && i == 1 && j == 0))
            }
            StandardModule::Ideal { n } => {
                // eps * (s^{d-n} e) = s^d f, eps * (s^d f) = 0
                FpMatrix::from_fn(here, here, |i, j| u64::from(d >= n && i == 0 && j == 1))
            }
            _ => FpMatrix::zeros(here, here),
        };
        s_action.push(s);
        eps_action.push(eps);
    }

    let gen_degrees = match kind {
        StandardModule::Free { shift } | StandardModule::Ored { shift } => vec![shift],
        StandardModule::Ideal { n } => vec![0, n],
        StandardModule::Onp { .. } => vec![0],
    };

    let module = GradedModule {
        params,
        dims,
        s_action,
        eps_action,
        gen_degrees,
    };
    module.validate()?;
    Ok(module)
}
