//! Weight functions on crossings and the sums built from them.
//!
//! A weight assigns a value to each crossing in its domain. Odd weights take
//! opposite values on the two crossings created by a second Reidemeister
//! move, even weights take equal values. Summing an odd weight over the
//! crossings where an even weight hits a fixed value gives an invariant;
//! adding the same sum taken on the mirror diagram makes it survive
//! crossing changes as well.

use std::fmt;
use std::sync::Arc;

use crate::diagram::{CrossingId, Diagram};
use crate::error::{Error, Result};
use crate::invariants::writhe::smoothed_dwrithes;
use crate::labeling::indices;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    fn times(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

type Eval = dyn Fn(&Diagram) -> Result<Vec<(CrossingId, i64)>> + Send + Sync;

/// An integer-valued weight function. Crossings outside its domain are
/// simply absent from [`WeightFn::values`].
#[derive(Clone)]
pub struct WeightFn {
    name: String,
    parity: Parity,
    eval: Arc<Eval>,
}

impl fmt::Debug for WeightFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeightFn")
            .field("name", &self.name)
            .field("parity", &self.parity)
            .finish()
    }
}

impl WeightFn {
    pub fn new<F>(name: impl Into<String>, parity: Parity, eval: F) -> WeightFn
    where
        F: Fn(&Diagram) -> Result<Vec<(CrossingId, i64)>> + Send + Sync + 'static,
    {
        WeightFn {
            name: name.into(),
            parity,
            eval: Arc::new(eval),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn values(&self, d: &Diagram) -> Result<Vec<(CrossingId, i64)>> {
        (self.eval)(d)
    }

    /// Crossing sign on every crossing.
    pub fn sign() -> WeightFn {
        WeightFn::new("sgn", Parity::Odd, |d| {
            Ok(d.chords().into_values().map(|c| (c.id, c.sign.value())).collect())
        })
    }

    /// Crossing sign restricted to self-crossings of component `i`.
    pub fn sign_on_component(i: usize) -> WeightFn {
        WeightFn::new(format!("sgn|C{}", i + 1), Parity::Odd, move |d| {
            d.component(i)?;
            Ok(d.chords()
                .into_values()
                .filter(|c| c.over.component == i && c.under.component == i)
                .map(|c| (c.id, c.sign.value()))
                .collect())
        })
    }

    /// Crossing index; knots only.
    pub fn index() -> WeightFn {
        WeightFn::new("Ind", Parity::Even, |d| Ok(indices(d)?.into_iter().collect()))
    }

    /// `c -> dwrithe_n(smooth1(d, c))`; knots only.
    pub fn smoothed_dwrithe(n: i64) -> WeightFn {
        WeightFn::new(format!("dJ{n}∘F1"), Parity::Even, move |d| {
            Ok(smoothed_dwrithes(d, n)?
                .into_iter()
                .map(|(id, _, _, v)| (id, v))
                .collect())
        })
    }

    /// Pointwise product on the common domain.
    pub fn product(&self, other: &WeightFn) -> WeightFn {
        let (a, b) = (self.clone(), other.clone());
        WeightFn::new(
            format!("{}*{}", self.name, other.name),
            self.parity.times(other.parity),
            move |d| {
                let bv: std::collections::HashMap<_, _> = b.values(d)?.into_iter().collect();
                Ok(a.values(d)?
                    .into_iter()
                    .filter_map(|(id, x)| bv.get(&id).map(|y| (id, x * y)))
                    .collect())
            },
        )
    }
}

fn check_parity(v: &WeightFn, w: &WeightFn) -> Result<()> {
    if v.parity != Parity::Odd {
        return Err(Error::ParityMismatch(format!("{} is not odd", v.name)));
    }
    if w.parity != Parity::Even {
        return Err(Error::ParityMismatch(format!("{} is not even", w.name)));
    }
    Ok(())
}

/// Sum of `v(c)` over crossings with `w(c) = g`.
pub fn i_function(d: &Diagram, v: &WeightFn, w: &WeightFn, g: i64) -> Result<i64> {
    check_parity(v, w)?;
    let hits: std::collections::HashSet<CrossingId> = w
        .values(d)?
        .into_iter()
        .filter(|&(_, x)| x == g)
        .map(|(id, _)| id)
        .collect();
    Ok(v.values(d)?
        .into_iter()
        .filter(|(id, _)| hits.contains(id))
        .map(|(_, x)| x)
        .sum())
}

/// [`i_function`] on `d` plus the same sum on its mirror image.
pub fn i_flat(d: &Diagram, v: &WeightFn, w: &WeightFn, g: i64) -> Result<i64> {
    Ok(i_function(d, v, w, g)? + i_function(&d.mirror(), v, w, g)?)
}
