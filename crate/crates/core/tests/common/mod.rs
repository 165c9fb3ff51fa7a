#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use vknots::diagram::{Passage, Sign, Strand};
use vknots::Diagram;

/// A random diagram with `crossings` chords spread over `components`
/// components.
pub fn random_diagram<R: Rng>(rng: &mut R, crossings: usize, components: usize) -> Diagram {
    let mut slots: Vec<(u32, bool)> = (1..=crossings as u32)
        .flat_map(|id| [(id, true), (id, false)])
        .collect();
    slots.shuffle(rng);
    let mut cuts: Vec<usize> = (0..components.saturating_sub(1))
        .map(|_| rng.gen_range(0..=slots.len()))
        .collect();
    cuts.sort();
    let signs: Vec<Sign> = (0..crossings)
        .map(|_| if rng.gen() { Sign::Pos } else { Sign::Neg })
        .collect();
    let over_first: Vec<bool> = (0..crossings).map(|_| rng.gen()).collect();
    let passage = |(id, first): (u32, bool)| {
        let k = id as usize - 1;
        let strand = if first == over_first[k] {
            Strand::Over
        } else {
            Strand::Under
        };
        Passage::new(id, strand, signs[k])
    };
    let mut comps = Vec::new();
    let mut start = 0;
    for &c in cuts.iter().chain(std::iter::once(&slots.len())) {
        comps.push(slots[start..c].iter().copied().map(passage).collect());
        start = c;
    }
    Diagram::new(comps).unwrap()
}

pub fn random_knot<R: Rng>(rng: &mut R, max_crossings: usize) -> Diagram {
    let n = rng.gen_range(0..=max_crossings);
    random_diagram(rng, n, 1)
}
