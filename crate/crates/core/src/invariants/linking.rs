//! Over/under linking numbers of two-component links and their refinements
//! by the merged knot's d-writhes.

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::invariants::writhe::dwrithe;
use crate::smoothing::smooth3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LinkingNumbers {
    /// Signed count of crossings where component 1 passes over component 2.
    pub over: i64,
    /// Signed count of crossings where component 1 passes under component 2.
    pub under: i64,
    /// `over - under`.
    pub span: i64,
}

fn two_components(d: &Diagram) -> Result<()> {
    if d.num_components() != 2 {
        return Err(Error::ComponentCount {
            expected: 2,
            found: d.num_components(),
        });
    }
    Ok(())
}

pub fn linking_numbers(d: &Diagram) -> Result<LinkingNumbers> {
    two_components(d)?;
    let (mut over, mut under) = (0, 0);
    for c in d.chords().into_values().filter(|c| !c.is_self_crossing()) {
        if c.over.component == 0 {
            over += c.sign.value();
        } else {
            under += c.sign.value();
        }
    }
    Ok(LinkingNumbers {
        over,
        under,
        span: over - under,
    })
}

/// For each crossing between the two components: its contribution to the
/// span (`+sgn` if component 1 is over, `-sgn` otherwise) and `dwrithe_n`
/// of the type-3 smoothing there.
fn merged_dwrithes(d: &Diagram, n: i64) -> Result<Vec<(i64, i64)>> {
    two_components(d)?;
    d.chords()
        .into_values()
        .filter(|c| !c.is_self_crossing())
        .map(|c| {
            let weight = if c.over.component == 0 {
                c.sign.value()
            } else {
                -c.sign.value()
            };
            Ok((weight, dwrithe(&smooth3(d, c.id)?, n)?))
        })
        .collect()
}

/// Span restricted to crossings whose type-3 smoothing has `dwrithe_n = k`.
pub fn span_nk(d: &Diagram, n: i64, k: i64) -> Result<i64> {
    Ok(merged_dwrithes(d, n)?
        .into_iter()
        .filter(|&(_, v)| v == k)
        .map(|(w, _)| w)
        .sum())
}

/// `span_nk(d, n, k) + span_nk(d, n, -k)`; unchanged by crossing changes.
pub fn fspan_nk(d: &Diagram, n: i64, k: i64) -> Result<i64> {
    Ok(merged_dwrithes(d, n)?
        .into_iter()
        .map(|(w, v)| w * (i64::from(v == k) + i64::from(v == -k)))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    #[test]
    fn hopf() {
        let h = d("O1-;U1-");
        let lk = linking_numbers(&h).unwrap();
        assert_eq!((lk.over, lk.under, lk.span), (-1, 0, -1));
        let r = linking_numbers(&h.reorder_components(&[1, 0]).unwrap()).unwrap();
        assert_eq!((r.over, r.under, r.span), (0, -1, 1));
        for n in 1..4 {
            assert_eq!(span_nk(&h, n, 0).unwrap(), -1);
            assert_eq!(fspan_nk(&h, n, 0).unwrap(), -2);
            for k in 1..4 {
                assert_eq!(span_nk(&h, n, k).unwrap(), 0);
            }
        }
    }

    #[test]
    fn unlink_and_wrong_sizes() {
        let u = Diagram::unlink(2);
        assert_eq!(linking_numbers(&u).unwrap(), LinkingNumbers { over: 0, under: 0, span: 0 });
        assert_eq!(fspan_nk(&u, 1, 0).unwrap(), 0);
        assert_eq!(
            linking_numbers(&Diagram::unknot()),
            Err(Error::ComponentCount { expected: 2, found: 1 })
        );
    }
}
