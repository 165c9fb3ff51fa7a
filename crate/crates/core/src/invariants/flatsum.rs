//! Formal integer combinations of flat link classes.

use std::collections::BTreeMap;
use std::fmt;

use crate::diagram::{Diagram, FlatKey};
use crate::error::Result;
use crate::smoothing::smooth2;

/// Terms are merged only when their flat keys agree; a key keeps the first
/// diagram that produced it as representative.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FlatSum {
    terms: BTreeMap<FlatKey, (Diagram, i64)>,
}

impl FlatSum {
    pub fn new() -> FlatSum {
        FlatSum::default()
    }

    pub fn add(&mut self, d: Diagram, coef: i64) {
        if coef == 0 {
            return;
        }
        let key = d.flat_key();
        let entry = self.terms.entry(key.clone()).or_insert((d, 0));
        entry.1 += coef;
        if entry.1 == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn plus(&self, other: &FlatSum) -> FlatSum {
        let mut out = self.clone();
        for (_, d, c) in other.terms() {
            out.add(d.clone(), c);
        }
        out
    }

    pub fn scaled(&self, k: i64) -> FlatSum {
        let mut out = FlatSum::new();
        for (_, d, c) in self.terms() {
            out.add(d.clone(), k * c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FlatKey, &Diagram, i64)> {
        self.terms.iter().map(|(k, (d, c))| (k, d, *c))
    }

    pub fn coefficient(&self, key: &FlatKey) -> i64 {
        self.terms.get(key).map_or(0, |t| t.1)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for FlatSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (key, _, c)) in self.terms().enumerate() {
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "[{key}]")?;
        }
        Ok(())
    }
}

/// `sum of sgn(c) [smooth2(d, c)]` over self-crossings `c` of component `i`.
pub fn b_sum(d: &Diagram, i: usize) -> Result<FlatSum> {
    let mut out = FlatSum::new();
    for id in d.self_crossings(i)? {
        out.add(smooth2(d, id)?, d.sign(id)?.value());
    }
    Ok(out)
}

/// [`b_sum`] minus the same terms taken after changing the smoothed
/// crossing; unchanged by crossing changes.
pub fn b_flat_sum(d: &Diagram, i: usize) -> Result<FlatSum> {
    let mut out = FlatSum::new();
    for id in d.self_crossings(i)? {
        let s = d.sign(id)?.value();
        out.add(smooth2(d, id)?, s);
        out.add(smooth2(&d.crossing_change(id)?, id)?, -s);
    }
    Ok(out)
}
