//! Invariants addressed by name, as used on the command line.
//!
//! Names and parameters: `jn(n)`, `djn(n)`, `aip`, `fpoly(n)`, `djnm(n,m)`,
//! `fnmk(n,m,k)`, `lk`, `span`, `spannk(n,k)`, `fspannk(n,k)`,
//! `ftilde(n,k,m)`, `bsum(i)`, `bflat(i)`. Component numbers are 1-based.
//!
//! ```
//! use vknots::invariants::registry::{evaluate, InvariantSpec};
//! use vknots::invariants::Fingerprinter;
//!
//! let spec: InvariantSpec = "aip".parse().unwrap();
//! let d = "O1+O2+U1+U2+".parse().unwrap();
//! let v = evaluate(&d, &spec, &mut Fingerprinter::default()).unwrap();
//! assert_eq!(v.to_string(), "t + t^-1 - 2");
//! ```

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value as Json};

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::invariants::fingerprint::{FlatImage, Fingerprinter};
use crate::invariants::flatsum::{b_flat_sum, b_sum, FlatSum};
use crate::invariants::linking::{fspan_nk, linking_numbers, span_nk, LinkingNumbers};
use crate::invariants::poly::{affine_index_poly, f_poly, f_poly_nmk, tilde_f};
use crate::invariants::writhe::{dwrithe, dwrithe_nm, writhe_n};
use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InvariantSpec {
    Writhe { n: i64 },
    DWrithe { n: i64 },
    AffineIndex,
    FPoly { n: i64 },
    DWritheNm { n: i64, m: i64 },
    FPolyNmk { n: i64, m: i64, k: i64 },
    Linking,
    Span,
    SpanNk { n: i64, k: i64 },
    FSpanNk { n: i64, k: i64 },
    TildeF { n: i64, k: i64, m: i64 },
    BSum { component: usize },
    BFlat { component: usize },
}

pub const NAMES: [&str; 13] = [
    "jn", "djn", "aip", "fpoly", "djnm", "fnmk", "lk", "span", "spannk", "fspannk", "ftilde",
    "bsum", "bflat",
];

/// Named parameters; unset ones default to 1.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Params {
    pub n: Option<i64>,
    pub m: Option<i64>,
    pub k: Option<i64>,
    /// 1-based component number.
    pub i: Option<usize>,
}

impl InvariantSpec {
    pub fn from_name(name: &str, p: Params) -> Result<InvariantSpec> {
        let n = p.n.unwrap_or(1);
        let m = p.m.unwrap_or(1);
        let k = p.k.unwrap_or(1);
        let component = match p.i.unwrap_or(1) {
            0 => return Err(Error::Parameter("component numbers start at 1".into())),
            i => i - 1,
        };
        Ok(match name.to_ascii_lowercase().as_str() {
            "jn" => InvariantSpec::Writhe { n },
            "djn" => InvariantSpec::DWrithe { n },
            "aip" => InvariantSpec::AffineIndex,
            "fpoly" => InvariantSpec::FPoly { n },
            "djnm" => InvariantSpec::DWritheNm { n, m },
            "fnmk" => InvariantSpec::FPolyNmk { n, m, k },
            "lk" => InvariantSpec::Linking,
            "span" => InvariantSpec::Span,
            "spannk" => InvariantSpec::SpanNk { n, k },
            "fspannk" => InvariantSpec::FSpanNk { n, k },
            "ftilde" => InvariantSpec::TildeF { n, k, m },
            "bsum" => InvariantSpec::BSum { component },
            "bflat" => InvariantSpec::BFlat { component },
            other => return Err(Error::Invalid(format!("unknown invariant `{other}`"))),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            InvariantSpec::Writhe { .. } => "jn",
            InvariantSpec::DWrithe { .. } => "djn",
            InvariantSpec::AffineIndex => "aip",
            InvariantSpec::FPoly { .. } => "fpoly",
            InvariantSpec::DWritheNm { .. } => "djnm",
            InvariantSpec::FPolyNmk { .. } => "fnmk",
            InvariantSpec::Linking => "lk",
            InvariantSpec::Span => "span",
            InvariantSpec::SpanNk { .. } => "spannk",
            InvariantSpec::FSpanNk { .. } => "fspannk",
            InvariantSpec::TildeF { .. } => "ftilde",
            InvariantSpec::BSum { .. } => "bsum",
            InvariantSpec::BFlat { .. } => "bflat",
        }
    }

    /// Parameters in the order they are written.
    fn args(&self) -> Vec<i64> {
        match *self {
            InvariantSpec::AffineIndex | InvariantSpec::Linking | InvariantSpec::Span => vec![],
            InvariantSpec::Writhe { n } | InvariantSpec::DWrithe { n } | InvariantSpec::FPoly { n } => {
                vec![n]
            }
            InvariantSpec::DWritheNm { n, m } => vec![n, m],
            InvariantSpec::FPolyNmk { n, m, k } => vec![n, m, k],
            InvariantSpec::SpanNk { n, k } | InvariantSpec::FSpanNk { n, k } => vec![n, k],
            InvariantSpec::TildeF { n, k, m } => vec![n, k, m],
            InvariantSpec::BSum { component } | InvariantSpec::BFlat { component } => {
                vec![component as i64 + 1]
            }
        }
    }

    /// Whether the invariant is defined on knots only.
    pub fn knots_only(&self) -> bool {
        matches!(
            self,
            InvariantSpec::Writhe { .. }
                | InvariantSpec::DWrithe { .. }
                | InvariantSpec::AffineIndex
                | InvariantSpec::FPoly { .. }
                | InvariantSpec::DWritheNm { .. }
                | InvariantSpec::FPolyNmk { .. }
                | InvariantSpec::TildeF { .. }
        )
    }

    /// A spread of invariants applicable to a diagram with `components`
    /// components.
    pub fn standard_set(components: usize) -> Vec<InvariantSpec> {
        use InvariantSpec::*;
        let mut out = Vec::new();
        if components == 1 {
            out.extend([
                Writhe { n: 1 },
                Writhe { n: -1 },
                Writhe { n: 2 },
                DWrithe { n: 1 },
                DWrithe { n: 2 },
                AffineIndex,
                FPoly { n: 1 },
                FPoly { n: 2 },
                DWritheNm { n: 1, m: 1 },
                DWritheNm { n: 2, m: 1 },
                FPolyNmk { n: 1, m: 1, k: 1 },
                TildeF { n: 2, k: 2, m: 0 },
                TildeF { n: 2, k: 2, m: 2 },
            ]);
        }
        if components == 2 {
            out.extend([
                Linking,
                Span,
                SpanNk { n: 1, k: 0 },
                SpanNk { n: 1, k: 1 },
                FSpanNk { n: 1, k: 0 },
                FSpanNk { n: 2, k: 1 },
            ]);
        }
        for component in 0..components {
            out.extend([BSum { component }, BFlat { component }]);
        }
        out
    }
}

impl fmt::Display for InvariantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args = self.args();
        if args.is_empty() {
            return f.write_str(self.name());
        }
        let args: Vec<String> = args.iter().map(i64::to_string).collect();
        write!(f, "{}({})", self.name(), args.join(","))
    }
}

/// Accepts `name` or `name(a,b,...)` with arguments in display order.
impl FromStr for InvariantSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<InvariantSpec> {
        let s = s.trim();
        let (name, args) = match s.find('(') {
            None => (s, Vec::new()),
            Some(open) => {
                let inner = s[open + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Invalid(format!("missing `)` in `{s}`")))?;
                let args = inner
                    .split(',')
                    .map(|a| {
                        a.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::Invalid(format!("bad argument `{a}` in `{s}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                (&s[..open], args)
            }
        };
        let probe = InvariantSpec::from_name(name, Params::default())?;
        let expected = probe.args().len();
        if !args.is_empty() && args.len() != expected {
            return Err(Error::Invalid(format!(
                "`{name}` takes {expected} argument(s), got {}",
                args.len()
            )));
        }
        let mut p = Params::default();
        let a = |j: usize| args.get(j).copied();
        match probe {
            InvariantSpec::Writhe { .. } | InvariantSpec::DWrithe { .. } | InvariantSpec::FPoly { .. } => {
                p.n = a(0)
            }
            InvariantSpec::DWritheNm { .. } => (p.n, p.m) = (a(0), a(1)),
            InvariantSpec::FPolyNmk { .. } => (p.n, p.m, p.k) = (a(0), a(1), a(2)),
            InvariantSpec::SpanNk { .. } | InvariantSpec::FSpanNk { .. } => (p.n, p.k) = (a(0), a(1)),
            InvariantSpec::TildeF { .. } => (p.n, p.k, p.m) = (a(0), a(1), a(2)),
            InvariantSpec::BSum { .. } | InvariantSpec::BFlat { .. } => {
                p.i = match a(0) {
                    Some(i) if i < 1 => {
                        return Err(Error::Parameter("component numbers start at 1".into()))
                    }
                    Some(i) => Some(i as usize),
                    None => None,
                }
            }
            _ => {}
        }
        InvariantSpec::from_name(name, p)
    }
}

/// The value of an invariant.
#[derive(Debug, Clone)]
pub enum Value {
    Int(i64),
    Poly(LaurentPoly),
    Linking(LinkingNumbers),
    /// A formal sum together with its image under the fingerprint map.
    Flat { sum: FlatSum, image: FlatImage },
}

/// Two values agree when they are equal as invariants. Formal sums are
/// compared through their images, since the diagrams representing a class
/// change along moves.
impl PartialEq for Value {
    fn eq(&self, other: &Value) -> bool {
        match (self, other) {
            (Value::Int(a), Value::Int(b)) => a == b,
            (Value::Poly(a), Value::Poly(b)) => a == b,
            (Value::Linking(a), Value::Linking(b)) => a == b,
            (Value::Flat { image: a, .. }, Value::Flat { image: b, .. }) => a == b,
            _ => false,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(x) => write!(f, "{x}"),
            Value::Poly(p) => write!(f, "{p}"),
            Value::Linking(l) => write!(f, "over {} under {} span {}", l.over, l.under, l.span),
            Value::Flat { sum, image } => write!(f, "{sum}  (image: {image})"),
        }
    }
}

impl Value {
    pub fn to_json(&self) -> Json {
        match self {
            Value::Int(x) => json!(x),
            Value::Poly(p) => p.to_json(),
            Value::Linking(l) => json!({ "over": l.over, "under": l.under, "span": l.span }),
            Value::Flat { sum, image } => {
                let terms: Vec<Json> = sum
                    .terms()
                    .map(|(key, d, c)| json!({ "class": key.to_string(), "diagram": d.to_string(), "coef": c }))
                    .collect();
                let coefs: Vec<i64> = image.0.values().copied().collect();
                json!({ "terms": terms, "image": { "classes": coefs.len(), "coefs": coefs } })
            }
        }
    }
}

/// Evaluates `spec` on `d`. Formal sums are imaged with `fp`.
pub fn evaluate(d: &Diagram, spec: &InvariantSpec, fp: &mut Fingerprinter) -> Result<Value> {
    use InvariantSpec::*;
    Ok(match *spec {
        Writhe { n } => Value::Int(writhe_n(d, n)?),
        DWrithe { n } => Value::Int(dwrithe(d, n)?),
        AffineIndex => Value::Poly(affine_index_poly(d)?),
        FPoly { n } => Value::Poly(f_poly(d, n)?),
        DWritheNm { n, m } => Value::Int(dwrithe_nm(d, n, m)?),
        FPolyNmk { n, m, k } => Value::Poly(f_poly_nmk(d, n, m, k)?),
        Linking => Value::Linking(linking_numbers(d)?),
        Span => Value::Int(linking_numbers(d)?.span),
        SpanNk { n, k } => Value::Int(span_nk(d, n, k)?),
        FSpanNk { n, k } => Value::Int(fspan_nk(d, n, k)?),
        TildeF { n, k, m } => Value::Poly(tilde_f(d, n, k, m)?),
        BSum { component } => Value::Flat {
            sum: b_sum(d, component)?,
            image: fp.b_image(d, component, false)?,
        },
        BFlat { component } => Value::Flat {
            sum: b_flat_sum(d, component)?,
            image: fp.b_image(d, component, true)?,
        },
    })
}

/// Outcome of comparing two diagrams. Equality is never claimed.
#[derive(Debug, Clone, PartialEq)]
pub enum Comparison {
    Distinct {
        /// The separating invariant, or `components` when the component
        /// counts differ.
        invariant: String,
        left: Value,
        right: Value,
    },
    Inconclusive,
}

/// Evaluates `specs` on both diagrams in order and reports the first
/// invariant whose values differ. Invariants that do not apply to the
/// diagrams (knot invariants on links, missing components) are skipped.
pub fn distinguish(
    a: &Diagram,
    b: &Diagram,
    specs: &[InvariantSpec],
    fp: &mut Fingerprinter,
) -> Result<Comparison> {
    let (ca, cb) = (a.num_components(), b.num_components());
    if ca != cb {
        return Ok(Comparison::Distinct {
            invariant: "components".into(),
            left: Value::Int(ca as i64),
            right: Value::Int(cb as i64),
        });
    }
    for spec in specs {
        let (left, right) = match (evaluate(a, spec, fp), evaluate(b, spec, fp)) {
            (Ok(l), Ok(r)) => (l, r),
            (Err(e), _) | (_, Err(e)) if is_inapplicable(&e) => continue,
            (Err(e), _) | (_, Err(e)) => return Err(e),
        };
        if left != right {
            return Ok(Comparison::Distinct {
                invariant: spec.to_string(),
                left,
                right,
            });
        }
    }
    Ok(Comparison::Inconclusive)
}

fn is_inapplicable(e: &Error) -> bool {
    matches!(
        e,
        Error::NotAKnot(_) | Error::ComponentCount { .. } | Error::ComponentOutOfRange { .. }
    )
}
