//! The invariant tower.

pub mod fingerprint;
pub mod flatsum;
pub mod linking;
pub mod poly;
pub mod registry;
pub mod weight;
pub mod writhe;

pub use fingerprint::{
    flatsum_nonzero, Certificate, Fingerprint, FingerprintConfig, Fingerprinter, FlatImage, Verdict,
};
pub use flatsum::{b_flat_sum, b_sum, FlatSum};
pub use linking::{fspan_nk, linking_numbers, span_nk, LinkingNumbers};
pub use poly::{affine_index_poly, f_poly, f_poly_nmk, tilde_f};
pub use weight::{i_flat, i_function, Parity, WeightFn};
pub use writhe::{dwrithe, dwrithe_nm, nested_dwrithe, writhe_n};
