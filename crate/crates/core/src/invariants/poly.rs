//! Polynomial invariants of knots.
//!
//! Each F-type polynomial has the same three-sum shape: every crossing
//! contributes `sgn(c) t^Ind(c) x(c)`, then a correction that removes the
//! contribution of crossings that could come from a first Reidemeister
//! move. Crossings in the selected set `T` subtract their own `x(c)`, the
//! others subtract a base value computed from the whole diagram. Setting
//! every variable to 1 makes the three sums cancel.

use crate::diagram::Diagram;
use crate::error::Result;
use crate::invariants::linking::fspan_nk;
use crate::invariants::writhe::{dwrithe, dwrithe_nm, smoothed_dwrithes};
use crate::laurent::LaurentPoly;
use crate::labeling::signed_indices;
use crate::smoothing::{smooth1, smooth2};

/// `sum over crossings of sgn(c) (t^Ind(c) - 1)`.
pub fn affine_index_poly(d: &Diagram) -> Result<LaurentPoly> {
    let mut p = LaurentPoly::zero(&["t"]);
    for (_, s, ind) in signed_indices(d)? {
        p.add_term(s.value(), vec![ind]);
        p.add_term(-s.value(), vec![0]);
    }
    Ok(p)
}

fn matches_up_to_sign(x: i64, base: i64) -> bool {
    x == base || x == -base
}

/// F-polynomial in `t, l` built from `dwrithe_n` of type-1 smoothings.
pub fn f_poly(d: &Diagram, n: i64) -> Result<LaurentPoly> {
    let base = dwrithe(d, n)?;
    let mut p = LaurentPoly::zero(&["t", "l"]);
    for (_, s, ind, a) in smoothed_dwrithes(d, n)? {
        let s = s.value();
        p.add_term(s, vec![ind, a]);
        let corr = if matches_up_to_sign(a, base) { a } else { base };
        p.add_term(-s, vec![0, corr]);
    }
    Ok(p)
}

/// F-polynomial in `t, l1, l2`: `l1` records `dwrithe_n`, `l2` records
/// `dwrithe_nm(m, k)` of each type-1 smoothing.
pub fn f_poly_nmk(d: &Diagram, n: i64, m: i64, k: i64) -> Result<LaurentPoly> {
    let base_a = dwrithe(d, n)?;
    let base_b = dwrithe_nm(d, m, k)?;
    let mut p = LaurentPoly::zero(&["t", "l1", "l2"]);
    for (id, s, ind, a) in smoothed_dwrithes(d, n)? {
        let b = dwrithe_nm(&smooth1(d, id)?, m, k)?;
        let s = s.value();
        p.add_term(s, vec![ind, a, b]);
        if matches_up_to_sign(a, base_a) && matches_up_to_sign(b, base_b) {
            p.add_term(-s, vec![0, a, b]);
        } else {
            p.add_term(-s, vec![0, base_a, base_b]);
        }
    }
    Ok(p)
}

/// F-polynomial in `t, l, v`: `v` records `fspan_nk(k, m)` of each type-2
/// smoothing.
///
/// Every term, corrections included, carries the `v` power of its own
/// crossing, and `T` is selected by `dwrithe_n` alone. Setting `v = 1`
/// therefore gives back [`f_poly`] exactly.
pub fn tilde_f(d: &Diagram, n: i64, k: i64, m: i64) -> Result<LaurentPoly> {
    let base = dwrithe(d, n)?;
    let mut p = LaurentPoly::zero(&["t", "l", "v"]);
    for (id, s, ind, a) in smoothed_dwrithes(d, n)? {
        let f = fspan_nk(&smooth2(d, id)?, k, m)?;
        let s = s.value();
        p.add_term(s, vec![ind, a, f]);
        let corr = if matches_up_to_sign(a, base) { a } else { base };
        p.add_term(-s, vec![0, corr, f]);
    }
    Ok(p)
}
