//! Arc labels, crossing signs and the crossing index.
//!
//! Arc `k` of a component is the arc entering its `k`-th passage. Walking
//! across a passage whose flat sign is `Pos` lowers the label by one, across a
//! `Neg` passage raises it by one. For a positive crossing that is the
//! "over: -1, under: +1" rule; a negative crossing has the roles swapped, so
//! the rule depends only on the flat chord and survives crossing changes.

use std::collections::BTreeMap;

use crate::diagram::{CrossingId, Diagram, Sign, Strand};
use crate::error::{Error, Result};

/// Integer labels on the arcs of each component, with arc 0 labeled 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcLabeling {
    labels: Vec<Vec<i64>>,
}

impl ArcLabeling {
    /// Labels of component `i` in traversal order, starting from the arc
    /// entering passage 0.
    pub fn component(&self, i: usize) -> &[i64] {
        &self.labels[i]
    }

    /// Label of the arc entering passage `position` of component `component`.
    pub fn entering(&self, component: usize, position: usize) -> i64 {
        self.labels[component][position]
    }

    pub fn components(&self) -> &[Vec<i64>] {
        &self.labels
    }
}

pub fn arc_labeling(d: &Diagram) -> Result<ArcLabeling> {
    let labels = d
        .components()
        .iter()
        .enumerate()
        .map(|(ci, comp)| {
            if comp.is_empty() {
                return Ok(vec![0]);
            }
            let mut out = Vec::with_capacity(comp.len());
            let mut label = 0i64;
            for p in comp {
                out.push(label);
                label -= p.flat_sign().value();
            }
            if label != 0 {
                return Err(Error::InconsistentLabeling(ci));
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(ArcLabeling { labels })
}

pub fn crossing_sign(d: &Diagram, id: CrossingId) -> Result<Sign> {
    d.sign(id)
}

/// Index of every crossing of a knot diagram, keyed by crossing id.
///
/// `Ind(c) = sgn(c) (a - b - 1)` where `a` labels the arc entering the
/// `Pos` passage of `c` and `b` the arc entering its `Neg` passage.
pub fn indices(d: &Diagram) -> Result<BTreeMap<CrossingId, i64>> {
    if !d.is_knot() {
        return Err(Error::NotAKnot(d.num_components()));
    }
    let comp = &d.components()[0];
    let mut entering: BTreeMap<CrossingId, (i64, i64, Sign)> = BTreeMap::new();
    let mut label = 0i64;
    for p in comp {
        let e = entering.entry(p.crossing).or_insert((0, 0, p.sign));
        match p.flat_sign() {
            Sign::Pos => e.0 = label,
            Sign::Neg => e.1 = label,
        }
        label -= p.flat_sign().value();
    }
    Ok(entering
        .into_iter()
        .map(|(id, (a, b, s))| (id, s.value() * (a - b - 1)))
        .collect())
}

pub fn crossing_index(d: &Diagram, id: CrossingId) -> Result<i64> {
    if !d.is_knot() {
        return Err(Error::NotAKnot(d.num_components()));
    }
    indices(d)?
        .get(&id)
        .copied()
        .ok_or(Error::UnknownCrossing(id))
}

/// Signs and indices of all crossings of a knot, in id order.
pub(crate) fn signed_indices(d: &Diagram) -> Result<Vec<(CrossingId, Sign, i64)>> {
    let idx = indices(d)?;
    let signs: BTreeMap<CrossingId, Sign> = d.components()[0]
        .iter()
        .filter(|p| p.strand == Strand::Over)
        .map(|p| (p.crossing, p.sign))
        .collect();
    Ok(idx
        .into_iter()
        .map(|(id, ind)| (id, signs[&id], ind))
        .collect())
}
