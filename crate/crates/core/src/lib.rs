//! Invariants of virtual and flat virtual links computed from signed Gauss
//! codes.
//!
//! ```
//! use vknots::{Diagram, invariants::affine_index_poly};
//!
//! let d: Diagram = "O1+O2+U1+U2+".parse().unwrap();
//! assert_eq!(affine_index_poly(&d).unwrap().to_string(), "t + t^-1 - 2");
//! ```
//!
//! The guide in `book/` walks through the concepts; its snippets run as
//! doctests of this crate.

pub mod catalog;
pub mod diagram;
pub mod error;
pub mod invariants;
pub mod labeling;
pub mod laurent;
pub mod moves;
pub mod smoothing;

pub use diagram::{CrossingId, Diagram, FlatKey, Passage, Sign, Strand};
pub use error::{Error, Result};
pub use laurent::LaurentPoly;

// One module per chapter so a failing snippet points at its chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/gauss-codes.md")]
    mod gauss_codes {}
    #[doc = include_str!("../../../book/src/labeling.md")]
    mod labeling {}
    #[doc = include_str!("../../../book/src/smoothings.md")]
    mod smoothings {}
    #[doc = include_str!("../../../book/src/writhes.md")]
    mod writhes {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/links.md")]
    mod links {}
    #[doc = include_str!("../../../book/src/flat-sums.md")]
    mod flat_sums {}
    #[doc = include_str!("../../../book/src/moves.md")]
    mod moves {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
