//! Index writhes and their smoothed refinements.

use crate::diagram::{CrossingId, Diagram, Sign};
use crate::error::{Error, Result};
use crate::labeling::signed_indices;
use crate::smoothing::smooth1;

fn positive(name: &str, n: i64) -> Result<()> {
    if n <= 0 {
        return Err(Error::Parameter(format!("{name} must be positive, got {n}")));
    }
    Ok(())
}

fn sum_at(si: &[(CrossingId, Sign, i64)], n: i64) -> i64 {
    si.iter()
        .filter(|(_, _, ind)| *ind == n)
        .map(|(_, s, _)| s.value())
        .sum()
}

/// `J_n`: signed count of crossings of index `n`.
pub fn writhe_n(d: &Diagram, n: i64) -> Result<i64> {
    if n == 0 {
        return Err(Error::Parameter("writhe index must be nonzero".into()));
    }
    Ok(sum_at(&signed_indices(d)?, n))
}

/// `J_n - J_{-n}`, unchanged by crossing changes.
pub fn dwrithe(d: &Diagram, n: i64) -> Result<i64> {
    positive("n", n)?;
    let si = signed_indices(d)?;
    Ok(sum_at(&si, n) - sum_at(&si, -n))
}

/// `m * sum of sgn(c) dwrithe_n(smooth1(d, c))` over crossings with
/// `|Ind(c)| = m`. Zero when `m = 0`.
pub fn dwrithe_nm(d: &Diagram, n: i64, m: i64) -> Result<i64> {
    nested_dwrithe(d, n, &[m])
}

/// Iterated refinement: `levels = [m1, ..., mj]` applies `m1` innermost.
///
/// With no levels this is [`dwrithe`]; each extra level `m` maps an
/// invariant `A` to `m * sum_{|Ind(c)| = m} sgn(c) A(smooth1(d, c))`.
pub fn nested_dwrithe(d: &Diagram, n: i64, levels: &[i64]) -> Result<i64> {
    positive("n", n)?;
    if let Some(m) = levels.iter().find(|&&m| m < 0) {
        return Err(Error::Parameter(format!("levels must be non-negative, got {m}")));
    }
    nested(d, n, levels)
}

fn nested(d: &Diagram, n: i64, levels: &[i64]) -> Result<i64> {
    let Some((&m, inner)) = levels.split_last() else {
        return dwrithe(d, n);
    };
    let si = signed_indices(d)?;
    if m == 0 {
        return Ok(0);
    }
    let mut total = 0;
    for (id, s, ind) in si {
        if ind.abs() == m {
            total += s.value() * nested(&smooth1(d, id)?, n, inner)?;
        }
    }
    Ok(m * total)
}

/// Per crossing of a knot: id, sign, index and `dwrithe_n` of its type-1
/// smoothing.
pub(crate) fn smoothed_dwrithes(d: &Diagram, n: i64) -> Result<Vec<(CrossingId, Sign, i64, i64)>> {
    positive("n", n)?;
    signed_indices(d)?
        .into_iter()
        .map(|(id, s, ind)| Ok((id, s, ind, dwrithe(&smooth1(d, id)?, n)?)))
        .collect()
}
