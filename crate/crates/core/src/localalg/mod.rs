//! Brute-force verification engine for the Hom/Ext classification over the
//! ribbon local ring, working with graded modules over the truncation
//! `k[s, eps]/(eps^2, s^N)` and exact linear algebra over a prime field.

pub mod ext;
pub mod fp;
pub mod matrix;
pub mod module;
pub mod tables;

pub use ext::{
    ext_cyclic_decomposition, ext_hilbert, hom_space, restriction_coker, trusted_window,
    ExtSource, GradedHom, HilbertFunction, HomShift, HomSpace,
};
pub use fp::PrimeField;
pub use matrix::FpMatrix;
pub use module::{build_standard, GradedModule, StandardModule, TruncatedRingParams};
pub use tables::{
    expected_cyclic, expected_hilbert, verify_tables, CokerEntry, ExtEntry, LocalExtCase,
    VerifyReport, TABLE_K_MAX,
};
