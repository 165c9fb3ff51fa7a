//! Smoothings against orientation at a classical crossing.
//!
//! Cutting a crossing and reconnecting against orientation forces one of the
//! two resulting arcs to be traversed backwards. A remaining crossing changes
//! sign exactly when one of its two strands lies on the reversed part.
//!
//! Conventions, for a self-crossing `c` of component `i` with passages
//! `u` (under) and `o` (over):
//!
//! * `X` is the stretch strictly after `u` and before `o`, `Y` the stretch
//!   strictly after `o` and before `u`.
//! * Type 1 produces the single component `rev(X) Y`.
//! * Type 2 keeps `X` as component `i` and appends `rev(Y)` as a new last
//!   component.
//!
//! For a crossing between two components, type 3 keeps the component
//! carrying the over passage and reverses the one carrying the under passage.
//! The merged component takes the smaller of the two indices.

use std::collections::HashMap;

use crate::diagram::{flip_signs, CrossingId, Diagram, Passage};
use crate::error::{Error, Result};

fn stretch(from: usize, to: usize, len: usize) -> impl Iterator<Item = usize> {
    let count = (to + len - from - 1) % len;
    (1..=count).map(move |t| (from + t) % len)
}

/// Crossings with exactly one passage among `passages`.
fn singly_hit(passages: impl Iterator<Item = Passage>) -> Vec<CrossingId> {
    let mut hits: HashMap<CrossingId, u8> = HashMap::new();
    for p in passages {
        *hits.entry(p.crossing).or_default() += 1;
    }
    hits.into_iter()
        .filter(|&(_, n)| n == 1)
        .map(|(id, _)| id)
        .collect()
}

struct SelfSplit {
    component: usize,
    x: Vec<Passage>,
    y: Vec<Passage>,
}

fn split_self(d: &Diagram, id: CrossingId) -> Result<SelfSplit> {
    let chord = d.chord(id)?;
    if !chord.is_self_crossing() {
        return Err(Error::NotSelfCrossing(id));
    }
    let ci = chord.over.component;
    let comp = &d.components()[ci];
    let (ku, ko, len) = (chord.under.position, chord.over.position, comp.len());
    Ok(SelfSplit {
        component: ci,
        x: stretch(ku, ko, len).map(|k| comp[k]).collect(),
        y: stretch(ko, ku, len).map(|k| comp[k]).collect(),
    })
}

/// Type-1 smoothing: same number of components.
pub fn smooth1(d: &Diagram, id: CrossingId) -> Result<Diagram> {
    let SelfSplit { component, x, y } = split_self(d, id)?;
    let flipped = singly_hit(x.iter().copied());
    let mut comps = d.components().to_vec();
    comps[component] = x.into_iter().rev().chain(y).collect();
    Ok(Diagram::from_parts(flip_signs(comps, &flipped)))
}

/// Type-2 smoothing: the component splits in two, the reversed half is
/// appended last.
pub fn smooth2(d: &Diagram, id: CrossingId) -> Result<Diagram> {
    let SelfSplit { component, x, y } = split_self(d, id)?;
    let flipped = singly_hit(y.iter().copied());
    let mut comps = d.components().to_vec();
    comps[component] = x;
    comps.push(y.into_iter().rev().collect());
    Ok(Diagram::from_parts(flip_signs(comps, &flipped)))
}

/// Type-3 smoothing: two components merge into one.
pub fn smooth3(d: &Diagram, id: CrossingId) -> Result<Diagram> {
    let chord = d.chord(id)?;
    if chord.is_self_crossing() {
        return Err(Error::SelfCrossing(id));
    }
    let (ka, kb) = (chord.over, chord.under);
    let a = &d.components()[ka.component];
    let b = &d.components()[kb.component];
    let kept = (1..a.len()).map(|t| a[(ka.position + t) % a.len()]);
    let reversed: Vec<Passage> = (1..b.len())
        .map(|t| b[(kb.position + b.len() - t) % b.len()])
        .collect();
    let flipped = singly_hit(reversed.iter().copied());
    let merged: Vec<Passage> = kept.chain(reversed).collect();

    let target = ka.component.min(kb.component);
    let dropped = ka.component.max(kb.component);
    let mut comps = d.components().to_vec();
    comps[target] = merged;
    comps.remove(dropped);
    Ok(Diagram::from_parts(flip_signs(comps, &flipped)))
}
