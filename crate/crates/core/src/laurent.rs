//! Laurent polynomials with big-integer coefficients.
//!
//! A [`LaurentPoly`] lives over a fixed, ordered list of variable names.
//! Arithmetic between polynomials over different lists is an error rather
//! than an implicit embedding.
//!
//! Text form: terms sorted by their monomial text, constant term last,
//! factors joined by `*`, exponent 1 omitted:
//!
//! ```
//! use vknots::laurent::LaurentPoly;
//!
//! let p = LaurentPoly::parse("t^-1 - 2 + t", &["t"]).unwrap();
//! assert_eq!(p.to_string(), "t + t^-1 - 2");
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub type Exponents = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, BigInt>,
}

/// Value substituted for a variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Binding {
    Int(i64),
    Var(String),
}

impl LaurentPoly {
    pub fn zero(vars: &[&str]) -> LaurentPoly {
        LaurentPoly {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &[&str]) -> LaurentPoly {
        LaurentPoly::constant(vars, 1)
    }

    pub fn constant(vars: &[&str], c: impl Into<BigInt>) -> LaurentPoly {
        let mut p = LaurentPoly::zero(vars);
        p.add_term(c, vec![0; vars.len()]);
        p
    }

    pub fn monomial(vars: &[&str], coef: impl Into<BigInt>, exps: &[i64]) -> Result<LaurentPoly> {
        if exps.len() != vars.len() {
            return Err(Error::Parameter(format!(
                "{} exponents for {} variables",
                exps.len(),
                vars.len()
            )));
        }
        let mut p = LaurentPoly::zero(vars);
        p.add_term(coef, exps.to_vec());
        Ok(p)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Adds `coef * x^exps` in place.
    ///
    /// # Panics
    ///
    /// If `exps` has the wrong length.
    pub fn add_term(&mut self, coef: impl Into<BigInt>, exps: Exponents) {
        assert_eq!(exps.len(), self.vars.len(), "exponent vector length");
        let coef = coef.into();
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn same_vars(&self, other: &LaurentPoly) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.vars.clone(),
                right: other.vars.clone(),
            })
        }
    }

    pub fn try_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.same_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(c.clone(), e.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.same_vars(other)?;
        let mut out = LaurentPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(ca * cb, e);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    /// Evaluates some variables at integers and renames others.
    ///
    /// Variables bound to integers disappear from the result. A variable
    /// renamed onto another existing variable is merged into it. Negative
    /// powers of integers other than `1` and `-1` are rejected, since the
    /// result must keep integer coefficients.
    pub fn substitute(&self, bindings: &BTreeMap<String, Binding>) -> Result<LaurentPoly> {
        for name in bindings.keys() {
            if !self.vars.contains(name) {
                return Err(Error::Parameter(format!("unknown variable {name}")));
            }
        }
        // target slot of each source variable, or the integer it is bound to
        let mut out_vars: Vec<String> = Vec::new();
        let mut target: Vec<std::result::Result<usize, i64>> = Vec::new();
        for v in &self.vars {
            let name = match bindings.get(v) {
                Some(Binding::Int(x)) => {
                    target.push(Err(*x));
                    continue;
                }
                Some(Binding::Var(w)) => w.clone(),
                None => v.clone(),
            };
            let slot = match out_vars.iter().position(|o| *o == name) {
                Some(i) => i,
                None => {
                    out_vars.push(name);
                    out_vars.len() - 1
                }
            };
            target.push(Ok(slot));
        }
        let mut out = LaurentPoly {
            vars: out_vars,
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            let mut coef = c.clone();
            let mut exps = vec![0; out.vars.len()];
            for (k, &x) in e.iter().enumerate() {
                match target[k] {
                    Ok(slot) => exps[slot] += x,
                    Err(value) => coef *= int_power(&self.vars[k], value, x)?,
                }
            }
            out.add_term(coef, exps);
        }
        Ok(out)
    }

    /// Sum of all coefficients.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn monomial_text(&self, exps: &[i64]) -> String {
        self.vars
            .iter()
            .zip(exps)
            .filter(|(_, &e)| e != 0)
            .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Terms in rendering order.
    fn ordered_terms(&self) -> Vec<(String, &Exponents, &BigInt)> {
        let mut out: Vec<_> = self
            .terms
            .iter()
            .map(|(e, c)| (self.monomial_text(e), e, c))
            .collect();
        out.sort_by(|a, b| (a.0.is_empty(), &a.0).cmp(&(b.0.is_empty(), &b.0)));
        out
    }

    pub fn render(&self) -> String {
        self.to_string()
    }

    /// Parses the text form over the given variables. Whitespace is ignored,
    /// like terms are combined, `*` between factors is optional.
    pub fn parse(text: &str, vars: &[&str]) -> Result<LaurentPoly> {
        PolyParser::new(text, vars).poly()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .ordered_terms()
            .into_iter()
            .map(|(_, e, c)| {
                let coef = match c.to_i64() {
                    Some(x) => json!(x),
                    None => json!(c.to_string()),
                };
                json!({ "coef": coef, "exp": e })
            })
            .collect();
        json!({ "vars": self.vars, "terms": terms })
    }

    pub fn from_json(value: &Value) -> Result<LaurentPoly> {
        let bad = |m: &str| Error::Invalid(format!("polynomial JSON: {m}"));
        let vars: Vec<String> = value["vars"]
            .as_array()
            .ok_or_else(|| bad("missing vars"))?
            .iter()
            .map(|v| v.as_str().map(str::to_string).ok_or_else(|| bad("variable names must be strings")))
            .collect::<Result<_>>()?;
        let mut out = LaurentPoly {
            vars,
            terms: BTreeMap::new(),
        };
        for t in value["terms"].as_array().ok_or_else(|| bad("missing terms"))? {
            let coef: BigInt = match &t["coef"] {
                Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| bad("non-integer coefficient"))?,
                Value::String(s) => s.parse().map_err(|_| bad("bad coefficient string"))?,
                _ => return Err(bad("missing coefficient")),
            };
            let exps: Exponents = t["exp"]
                .as_array()
                .ok_or_else(|| bad("missing exponents"))?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| bad("exponents must be integers")))
                .collect::<Result<_>>()?;
            if exps.len() != out.vars.len() {
                return Err(bad("exponent vector length"));
            }
            out.add_term(coef, exps);
        }
        Ok(out)
    }
}

fn int_power(var: &str, value: i64, exp: i64) -> Result<BigInt> {
    if exp >= 0 {
        return Ok(BigInt::from(value).pow(exp as u32));
    }
    match value {
        1 => Ok(BigInt::one()),
        -1 => Ok(if exp % 2 == 0 { BigInt::one() } else { -BigInt::one() }),
        _ => Err(Error::NonIntegralSubstitution {
            var: var.to_string(),
            value,
        }),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.ordered_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (mono, _, c)) in terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(mono)?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

struct PolyParser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    vars: &'a [&'a str],
    len: usize,
}

impl<'a> PolyParser<'a> {
    fn new(text: &str, vars: &'a [&'a str]) -> Self {
        PolyParser {
            chars: text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
            vars,
            len: text.len(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(o, _)| o)
    }

    fn error<T>(&self, message: &str) -> Result<T> {
        Err(Error::Syntax {
            position: self.offset(),
            message: message.to_string(),
        })
    }

    fn poly(&mut self) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero(self.vars);
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some('-') => {
                    self.pos += 1;
                    true
                }
                Some('+') if !first => {
                    self.pos += 1;
                    false
                }
                None if !first => break,
                _ if first => false,
                _ => return self.error("expected '+' or '-'"),
            };
            let (c, e) = self.term()?;
            out.add_term(if negative { -c } else { c }, e);
            first = false;
        }
        Ok(out)
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        s.parse().ok()
    }

    fn var(&mut self) -> Option<usize> {
        let rest: String = self.chars[self.pos..].iter().map(|&(_, c)| c).collect();
        let (k, name) = self
            .vars
            .iter()
            .enumerate()
            .filter(|(_, v)| rest.starts_with(*v))
            .max_by_key(|(_, v)| v.len())?;
        self.pos += name.chars().count();
        Some(k)
    }

    fn term(&mut self) -> Result<(BigInt, Exponents)> {
        let mut exps = vec![0i64; self.vars.len()];
        let coef = self.digits();
        let mut factors = 0;
        loop {
            if factors > 0 || coef.is_some() {
                if self.peek() == Some('*') {
                    self.pos += 1;
                    if self.peek().is_none() {
                        return self.error("expected a variable after '*'");
                    }
                }
            }
            let Some(k) = self.var() else { break };
            let mut e = 1i64;
            if self.peek() == Some('^') {
                self.pos += 1;
                let negative = self.peek() == Some('-');
                if negative {
                    self.pos += 1;
                }
                e = match self.digits().and_then(|d| d.to_i64()) {
                    Some(d) if negative => -d,
                    Some(d) => d,
                    None => return self.error("expected an integer exponent"),
                };
            }
            exps[k] += e;
            factors += 1;
        }
        if coef.is_none() && factors == 0 {
            return self.error("expected a coefficient or variable");
        }
        Ok((coef.unwrap_or_else(BigInt::one), exps))
    }
}
