//! Flat invariants used to tell flat classes apart.
//!
//! Flat equivalence is not decided here. A [`Fingerprint`] collects values
//! that are unchanged by Reidemeister moves and crossing changes, so two
//! classes with different fingerprints are certainly different; equal
//! fingerprints prove nothing.
//!
//! Recorded per diagram:
//!
//! * the number of components;
//! * for every component, read as a knot: `dwrithe_n` and `dwrithe_nm` over
//!   the window;
//! * for every pair of components: span and `fspan_nk` over the window,
//!   `k` also taking the value 0;
//! * up to the depth bound, for every component `i`, the flat smoothing sum
//!   over self-crossings of `i`, with each term replaced by its own
//!   fingerprint one level down.
//!
//! A flat smoothing sum is only an invariant once the two classes a kink on
//! component `i` can produce are left out: the diagram with an empty
//! component appended, and the diagram with component `i` emptied and its
//! reverse appended. Terms whose fingerprint matches either are dropped.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::diagram::{Diagram, FlatKey};
use crate::error::Result;
use crate::invariants::flatsum::{b_flat_sum, b_sum, FlatSum};
use crate::invariants::linking::{fspan_nk, linking_numbers};
use crate::invariants::writhe::{dwrithe, dwrithe_nm};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FingerprintConfig {
    /// Values tried for each of `n`, `m`, `k`.
    pub window: Vec<i64>,
    /// Nesting depth of smoothing sums.
    pub depth: usize,
}

impl Default for FingerprintConfig {
    fn default() -> Self {
        FingerprintConfig {
            window: vec![1, 2, 3],
            depth: 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KnotPrint {
    pub dwrithe: Vec<i64>,
    pub dwrithe_nm: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairPrint {
    pub span: i64,
    pub fspan: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub components: usize,
    pub knots: Vec<KnotPrint>,
    /// Pairs `(i, j)` with `i < j` in lexicographic order.
    pub pairs: Vec<PairPrint>,
    /// Per component; empty at depth 0.
    pub flat_sums: Vec<FlatImage>,
}

/// A flat sum pushed forward along the fingerprint map.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlatImage(pub BTreeMap<Fingerprint, i64>);

impl FlatImage {
    fn add(&mut self, fp: Fingerprint, c: i64) {
        let e = self.0.entry(fp.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&fp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of coefficients, the image under the map sending every class to 1.
    pub fn total(&self) -> i64 {
        self.0.values().sum()
    }
}

impl fmt::Display for FlatImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let coefs: Vec<String> = self.0.values().map(|c| format!("{c:+}")).collect();
        write!(f, "{} classes ({})", self.0.len(), coefs.join(" "))
    }
}

impl Fingerprint {
    /// Names of the fields where two fingerprints differ.
    pub fn differences(&self, other: &Fingerprint, config: &FingerprintConfig) -> Vec<String> {
        let mut out = Vec::new();
        if self.components != other.components {
            out.push("component count".to_string());
            return out;
        }
        let w = &config.window;
        for (i, (a, b)) in self.knots.iter().zip(&other.knots).enumerate() {
            for (k, n) in w.iter().enumerate() {
                if a.dwrithe.get(k) != b.dwrithe.get(k) {
                    out.push(format!("component {} dJ{n}", i + 1));
                }
            }
            let nm = w.iter().flat_map(|n| w.iter().map(move |m| (n, m)));
            for (k, (n, m)) in nm.enumerate() {
                if a.dwrithe_nm.get(k) != b.dwrithe_nm.get(k) {
                    out.push(format!("component {} dJ({n},{m})", i + 1));
                }
            }
        }
        let pairs = pair_indices(self.components);
        let ks: Vec<i64> = std::iter::once(0).chain(w.iter().copied()).collect();
        for ((a, b), (i, j)) in self.pairs.iter().zip(&other.pairs).zip(pairs) {
            if a.span != b.span {
                out.push(format!("span({},{})", i + 1, j + 1));
            }
            let nk = w.iter().flat_map(|n| ks.iter().map(move |k| (n, k)));
            for (idx, (n, k)) in nk.enumerate() {
                if a.fspan.get(idx) != b.fspan.get(idx) {
                    out.push(format!("fspan({},{}) n={n} k={k}", i + 1, j + 1));
                }
            }
        }
        for (i, (a, b)) in self.flat_sums.iter().zip(&other.flat_sums).enumerate() {
            if a != b {
                out.push(format!("B^{}_flat", i + 1));
            }
        }
        out
    }
}

fn pair_indices(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// Computes fingerprints with a cache keyed by canonical text and depth.
#[derive(Debug, Default)]
pub struct Fingerprinter {
    config: FingerprintConfig,
    cache: HashMap<(String, usize), Fingerprint>,
}

impl Fingerprinter {
    pub fn new(config: FingerprintConfig) -> Fingerprinter {
        Fingerprinter {
            config,
            cache: HashMap::new(),
        }
    }

    pub fn config(&self) -> &FingerprintConfig {
        &self.config
    }

    pub fn fingerprint(&mut self, d: &Diagram) -> Result<Fingerprint> {
        self.at_depth(d, self.config.depth)
    }

    fn at_depth(&mut self, d: &Diagram, depth: usize) -> Result<Fingerprint> {
        let key = (d.to_string(), depth);
        if let Some(fp) = self.cache.get(&key) {
            return Ok(fp.clone());
        }
        let fp = self.compute(d, depth)?;
        self.cache.insert(key, fp.clone());
        Ok(fp)
    }

    fn compute(&mut self, d: &Diagram, depth: usize) -> Result<Fingerprint> {
        let w = self.config.window.clone();
        let n = d.num_components();
        let mut knots = Vec::with_capacity(n);
        for i in 0..n {
            let k = d.sublink(&[i])?;
            let dwrithes = w.iter().map(|&x| dwrithe(&k, x)).collect::<Result<_>>()?;
            let mut nm = Vec::new();
            for &a in &w {
                for &b in &w {
                    nm.push(dwrithe_nm(&k, a, b)?);
                }
            }
            knots.push(KnotPrint {
                dwrithe: dwrithes,
                dwrithe_nm: nm,
            });
        }
        let mut pairs = Vec::new();
        for (i, j) in pair_indices(n) {
            let l = d.sublink(&[i, j])?;
            let mut fspan = Vec::new();
            for &a in &w {
                for k in std::iter::once(0).chain(w.iter().copied()) {
                    fspan.push(fspan_nk(&l, a, k)?);
                }
            }
            pairs.push(PairPrint {
                span: linking_numbers(&l)?.span,
                fspan,
            });
        }
        let mut flat_sums = Vec::new();
        if depth > 0 {
            for i in 0..n {
                flat_sums.push(self.b_image_at(d, i, true, depth - 1)?);
            }
        }
        Ok(Fingerprint {
            components: n,
            knots,
            pairs,
            flat_sums,
        })
    }

    /// Fingerprints of the two classes a kink on component `i` smooths to.
    fn kink_classes(&mut self, d: &Diagram, i: usize, depth: usize) -> Result<[Fingerprint; 2]> {
        let mut appended = d.components().to_vec();
        appended.push(Vec::new());
        let reversed = d.reverse_component(i)?;
        let mut moved = reversed.components().to_vec();
        let comp = std::mem::take(&mut moved[i]);
        moved.push(comp);
        Ok([
            self.at_depth(&Diagram::new(appended)?, depth)?,
            self.at_depth(&Diagram::new(moved)?, depth)?,
        ])
    }

    /// Pushes a flat sum forward, each term fingerprinted at `depth`.
    pub fn image(&mut self, s: &FlatSum, depth: usize) -> Result<FlatImage> {
        let mut out = FlatImage::default();
        for (_, d, c) in s.terms() {
            out.add(self.at_depth(d, depth)?, c);
        }
        Ok(out)
    }

    fn b_image_at(&mut self, d: &Diagram, i: usize, flat: bool, depth: usize) -> Result<FlatImage> {
        let sum = if flat { b_flat_sum(d, i)? } else { b_sum(d, i)? };
        let mut image = self.image(&sum, depth)?;
        let kinks = self.kink_classes(d, i, depth)?;
        image.0.retain(|fp, _| !kinks.contains(fp));
        Ok(image)
    }

    /// Image of the (flat) smoothing sum of component `i` with kink classes
    /// removed, terms fingerprinted one level below the configured depth.
    pub fn b_image(&mut self, d: &Diagram, i: usize, flat: bool) -> Result<FlatImage> {
        let depth = self.config.depth.saturating_sub(1);
        self.b_image_at(d, i, flat, depth)
    }
}

/// Reason a flat sum cannot vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// A class whose fingerprint group has a nonzero total.
    pub representative: FlatKey,
    pub coefficient: i64,
    /// For every other group: one of its keys and the fields separating it
    /// from the representative.
    pub separations: Vec<(FlatKey, Vec<String>)>,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coefficient {} on [{}]", self.coefficient, self.representative)?;
        for (k, fields) in &self.separations {
            write!(f, "; separated from [{k}] by {}", fields.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Zero,
    Nonzero(Certificate),
    Unknown,
}

/// Decides whether a flat sum is nonzero when fingerprints allow it.
pub fn flatsum_nonzero(s: &FlatSum, config: &FingerprintConfig) -> Result<Verdict> {
    if s.is_empty() {
        return Ok(Verdict::Zero);
    }
    let mut fps = Fingerprinter::new(config.clone());
    let mut groups: BTreeMap<Fingerprint, (FlatKey, i64)> = BTreeMap::new();
    for (key, d, c) in s.terms() {
        let fp = fps.fingerprint(d)?;
        groups.entry(fp).or_insert_with(|| (key.clone(), 0)).1 += c;
    }
    let Some((fp, (key, coef))) = groups.iter().find(|(_, (_, c))| *c != 0) else {
        return Ok(Verdict::Unknown);
    };
    let separations = groups
        .iter()
        .filter(|(other, _)| *other != fp)
        .map(|(other, (k, _))| (k.clone(), fp.differences(other, config)))
        .collect();
    Ok(Verdict::Nonzero(Certificate {
        representative: key.clone(),
        coefficient: *coef,
        separations,
    }))
}
