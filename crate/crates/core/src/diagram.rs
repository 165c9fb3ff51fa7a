//! Signed Gauss codes for ordered oriented virtual links.
//!
//! A [`Diagram`] stores, for every component, the cyclic sequence of
//! classical crossing passages met while travelling along it. Virtual
//! crossings are not recorded: two diagrams that differ only by virtual
//! Reidemeister moves have the same Gauss code, so those moves act trivially
//! on this representation.
//!
//! Text form:
//!
//! ```text
//! link      := component (";" component)*
//! component := "0" | passage+
//! passage   := ("O" | "U") uint ("+" | "-")
//! ```
//!
//! `"0"` is a component with no classical crossings. Whitespace is ignored.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrossingId(pub u32);

impl fmt::Display for CrossingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which strand of a crossing a passage travels along.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Strand {
    Over,
    Under,
}

impl Strand {
    pub fn flip(self) -> Strand {
        match self {
            Strand::Over => Strand::Under,
            Strand::Under => Strand::Over,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

/// One visit of a component to a classical crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Passage {
    pub crossing: CrossingId,
    pub strand: Strand,
    pub sign: Sign,
}

impl Passage {
    pub fn new(crossing: u32, strand: Strand, sign: Sign) -> Passage {
        Passage {
            crossing: CrossingId(crossing),
            strand,
            sign,
        }
    }

    /// The part of a passage that survives a crossing change.
    ///
    /// `Pos` marks the strand running from lower left to upper right when
    /// both strands point up: the over strand of a positive crossing and the
    /// under strand of a negative one.
    pub fn flat_sign(&self) -> Sign {
        match self.strand {
            Strand::Over => self.sign,
            Strand::Under => -self.sign,
        }
    }

    pub(crate) fn changed(self) -> Passage {
        Passage {
            strand: self.strand.flip(),
            sign: -self.sign,
            ..self
        }
    }

    pub(crate) fn with_sign(self, sign: Sign) -> Passage {
        Passage { sign, ..self }
    }
}

// Canonical token order: strand (O < U), then id, then sign (+ < -).
impl PartialOrd for Passage {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Passage {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.strand, self.crossing, self.sign).cmp(&(other.strand, other.crossing, other.sign))
    }
}

impl fmt::Display for Passage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.strand {
            Strand::Over => 'O',
            Strand::Under => 'U',
        };
        write!(f, "{}{}{}", s, self.crossing, self.sign.symbol())
    }
}

/// Position of a passage: component index and offset in its sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Location {
    pub component: usize,
    pub position: usize,
}

/// Both ends of a classical crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Chord {
    pub id: CrossingId,
    pub sign: Sign,
    pub over: Location,
    pub under: Location,
}

impl Chord {
    pub fn is_self_crossing(&self) -> bool {
        self.over.component == self.under.component
    }

    pub fn location(&self, strand: Strand) -> Location {
        match strand {
            Strand::Over => self.over,
            Strand::Under => self.under,
        }
    }
}

/// An ordered oriented virtual link diagram given by its signed Gauss code.
///
/// Equality is literal: same component order, same rotations, same ids.
/// Compare `to_string()` output to ignore rotations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    components: Vec<Vec<Passage>>,
}

impl Diagram {
    pub fn new(components: Vec<Vec<Passage>>) -> Result<Diagram> {
        let d = Diagram { components };
        d.validate()?;
        Ok(d)
    }

    pub(crate) fn from_parts(components: Vec<Vec<Passage>>) -> Diagram {
        let d = Diagram { components };
        debug_assert!(d.validate().is_ok(), "invalid diagram {d:?}");
        d
    }

    pub fn unknot() -> Diagram {
        Diagram::unlink(1)
    }

    pub fn unlink(n: usize) -> Diagram {
        Diagram {
            components: vec![Vec::new(); n],
        }
    }

    fn validate(&self) -> Result<()> {
        if self.components.is_empty() {
            return Err(Error::Invalid("a diagram needs at least one component".into()));
        }
        let mut seen: BTreeMap<CrossingId, Vec<Passage>> = BTreeMap::new();
        for p in self.components.iter().flatten() {
            if p.crossing.0 == 0 {
                return Err(Error::Invalid("crossing ids must be positive".into()));
            }
            seen.entry(p.crossing).or_default().push(*p);
        }
        for (id, ps) in seen {
            if ps.len() != 2 {
                return Err(Error::Invalid(format!(
                    "crossing {id} occurs {} times, expected twice",
                    ps.len()
                )));
            }
            if ps[0].strand == ps[1].strand {
                return Err(Error::Invalid(format!(
                    "crossing {id} needs one over and one under passage"
                )));
            }
            if ps[0].sign != ps[1].sign {
                return Err(Error::Invalid(format!(
                    "crossing {id} has mismatched signs"
                )));
            }
        }
        Ok(())
    }

    pub fn components(&self) -> &[Vec<Passage>] {
        &self.components
    }

    pub fn component(&self, i: usize) -> Result<&[Passage]> {
        self.components
            .get(i)
            .map(|c| c.as_slice())
            .ok_or(Error::ComponentOutOfRange {
                index: i,
                count: self.components.len(),
            })
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn is_knot(&self) -> bool {
        self.components.len() == 1
    }

    pub fn crossing_count(&self) -> usize {
        self.components.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn chords(&self) -> BTreeMap<CrossingId, Chord> {
        let mut over = HashMap::new();
        let mut under = HashMap::new();
        for (ci, comp) in self.components.iter().enumerate() {
            for (k, p) in comp.iter().enumerate() {
                let loc = Location {
                    component: ci,
                    position: k,
                };
                match p.strand {
                    Strand::Over => over.insert(p.crossing, (loc, p.sign)),
                    Strand::Under => under.insert(p.crossing, (loc, p.sign)),
                };
            }
        }
        over.into_iter()
            .map(|(id, (o, sign))| {
                let (u, _) = under[&id];
                (
                    id,
                    Chord {
                        id,
                        sign,
                        over: o,
                        under: u,
                    },
                )
            })
            .collect()
    }

    pub fn chord(&self, id: CrossingId) -> Result<Chord> {
        let mut over = None;
        let mut under = None;
        let mut sign = Sign::Pos;
        for (ci, comp) in self.components.iter().enumerate() {
            for (k, p) in comp.iter().enumerate() {
                if p.crossing == id {
                    let loc = Location {
                        component: ci,
                        position: k,
                    };
                    sign = p.sign;
                    match p.strand {
                        Strand::Over => over = Some(loc),
                        Strand::Under => under = Some(loc),
                    }
                }
            }
        }
        match (over, under) {
            (Some(over), Some(under)) => Ok(Chord {
                id,
                sign,
                over,
                under,
            }),
            _ => Err(Error::UnknownCrossing(id)),
        }
    }

    pub fn crossing_ids(&self) -> Vec<CrossingId> {
        let mut ids: Vec<_> = self
            .components
            .iter()
            .flatten()
            .filter(|p| p.strand == Strand::Over)
            .map(|p| p.crossing)
            .collect();
        ids.sort();
        ids
    }

    pub fn sign(&self, id: CrossingId) -> Result<Sign> {
        self.components
            .iter()
            .flatten()
            .find(|p| p.crossing == id)
            .map(|p| p.sign)
            .ok_or(Error::UnknownCrossing(id))
    }

    pub fn next_free_id(&self) -> u32 {
        self.components
            .iter()
            .flatten()
            .map(|p| p.crossing.0)
            .max()
            .unwrap_or(0)
            + 1
    }

    /// Crossings whose two passages both lie on component `i`.
    pub fn self_crossings(&self, i: usize) -> Result<Vec<CrossingId>> {
        self.component(i)?;
        Ok(self
            .chords()
            .into_values()
            .filter(|c| c.over.component == i && c.under.component == i)
            .map(|c| c.id)
            .collect())
    }

    /// Crossings joining components `i` and `j` (in either over/under role).
    pub fn shared_crossings(&self, i: usize, j: usize) -> Result<Vec<CrossingId>> {
        self.component(i)?;
        self.component(j)?;
        if i == j {
            return Ok(Vec::new());
        }
        Ok(self
            .chords()
            .into_values()
            .filter(|c| {
                let (a, b) = (c.over.component, c.under.component);
                (a == i && b == j) || (a == j && b == i)
            })
            .map(|c| c.id)
            .collect())
    }

    /// Changes every classical crossing: strands swap and signs negate.
    pub fn mirror(&self) -> Diagram {
        Diagram::from_parts(
            self.components
                .iter()
                .map(|c| c.iter().map(|p| p.changed()).collect())
                .collect(),
        )
    }

    pub fn crossing_change(&self, id: CrossingId) -> Result<Diagram> {
        self.chord(id)?;
        Ok(Diagram::from_parts(
            self.components
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|p| if p.crossing == id { p.changed() } else { *p })
                        .collect()
                })
                .collect(),
        ))
    }

    /// Reverses the orientation of component `i`. A crossing changes sign
    /// exactly when one of its two strands is reversed.
    pub fn reverse_component(&self, i: usize) -> Result<Diagram> {
        self.component(i)?;
        let mut comps = self.components.clone();
        comps[i].reverse();
        let flipped: Vec<CrossingId> = self
            .chords()
            .into_values()
            .filter(|c| (c.over.component == i) != (c.under.component == i))
            .map(|c| c.id)
            .collect();
        Ok(Diagram::from_parts(flip_signs(comps, &flipped)))
    }

    /// `perm[k]` is the old index of the component placed at position `k`.
    pub fn reorder_components(&self, perm: &[usize]) -> Result<Diagram> {
        let n = self.components.len();
        let mut hit = vec![false; n];
        if perm.len() != n {
            return Err(Error::NotAPermutation(n));
        }
        for &p in perm {
            if p >= n || hit[p] {
                return Err(Error::NotAPermutation(n));
            }
            hit[p] = true;
        }
        Ok(Diagram::from_parts(
            perm.iter().map(|&p| self.components[p].clone()).collect(),
        ))
    }

    /// The sub-diagram on the listed components (in the listed order),
    /// dropping crossings with every other component.
    pub fn sublink(&self, which: &[usize]) -> Result<Diagram> {
        for &i in which {
            self.component(i)?;
        }
        let chords = self.chords();
        let keep = |p: &Passage| {
            let c = &chords[&p.crossing];
            which.contains(&c.over.component) && which.contains(&c.under.component)
        };
        Ok(Diagram::from_parts(
            which
                .iter()
                .map(|&i| self.components[i].iter().copied().filter(keep).collect())
                .collect(),
        ))
    }

    /// Renumbers crossings 1, 2, ... in order of first appearance.
    pub fn relabeled(&self) -> Diagram {
        let mut map = HashMap::new();
        let comps = self
            .components
            .iter()
            .map(|c| {
                c.iter()
                    .map(|p| {
                        let next = map.len() as u32 + 1;
                        let id = *map.entry(p.crossing).or_insert(next);
                        Passage {
                            crossing: CrossingId(id),
                            ..*p
                        }
                    })
                    .collect()
            })
            .collect();
        Diagram::from_parts(comps)
    }

    /// Key for the flat class: forgets over/under, rotations and crossing
    /// names, keeps component order and orientation.
    pub fn flat_key(&self) -> FlatKey {
        flat_key(self)
    }
}

/// Negates the sign of every listed crossing.
pub(crate) fn flip_signs(mut comps: Vec<Vec<Passage>>, ids: &[CrossingId]) -> Vec<Vec<Passage>> {
    if ids.is_empty() {
        return comps;
    }
    for p in comps.iter_mut().flatten() {
        if ids.contains(&p.crossing) {
            *p = p.with_sign(-p.sign);
        }
    }
    comps
}

fn min_rotation<T: Ord + Clone>(seq: &[T]) -> Vec<T> {
    (0..seq.len().max(1))
        .map(|r| rotate(seq, r))
        .min()
        .unwrap_or_default()
}

fn rotate<T: Clone>(seq: &[T], r: usize) -> Vec<T> {
    if seq.is_empty() {
        return Vec::new();
    }
    seq[r..].iter().chain(&seq[..r]).cloned().collect()
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, comp) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            if comp.is_empty() {
                f.write_str("0")?;
            }
            for p in min_rotation(comp) {
                write!(f, "{p}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Diagram {
    type Err = Error;

    fn from_str(text: &str) -> Result<Diagram> {
        Parser::new(text).link()
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.pos,
            message: message.into(),
        })
    }

    fn link(&mut self) -> Result<Diagram> {
        let mut comps = vec![self.component()?];
        loop {
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(';') => {
                    self.bump();
                    comps.push(self.component()?);
                }
                Some(c) => return self.error(format!("unexpected '{c}'")),
            }
        }
        Diagram::new(comps)
    }

    fn component(&mut self) -> Result<Vec<Passage>> {
        self.skip_ws();
        if self.peek() == Some('0') {
            self.bump();
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some('O') | Some('U') => out.push(self.passage()?),
                _ => break,
            }
        }
        if out.is_empty() {
            return self.error("expected '0' or a passage like O1+");
        }
        Ok(out)
    }

    fn passage(&mut self) -> Result<Passage> {
        let strand = match self.bump() {
            Some('O') => Strand::Over,
            Some('U') => Strand::Under,
            _ => unreachable!(),
        };
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return self.error("expected a crossing number");
        }
        let id: u32 = match self.text[start..self.pos].parse() {
            Ok(id) => id,
            Err(_) => {
                self.pos = start;
                return self.error("crossing number out of range");
            }
        };
        self.skip_ws();
        let sign = match self.peek() {
            Some('+') => Sign::Pos,
            Some('-') => Sign::Neg,
            _ => return self.error("expected '+' or '-'"),
        };
        self.bump();
        Ok(Passage {
            crossing: CrossingId(id),
            strand,
            sign,
        })
    }
}

/// Canonical text for a flat class representative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlatKey(String);

impl FlatKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for FlatKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

type FlatToken = (u32, Sign);

#[derive(Clone)]
struct KeyState {
    labels: HashMap<CrossingId, u32>,
    out: Vec<Vec<FlatToken>>,
}

fn label_rotation(state: &KeyState, comp: &[Passage], r: usize) -> (Vec<FlatToken>, HashMap<CrossingId, u32>) {
    let mut labels = state.labels.clone();
    let tokens = rotate(comp, r)
        .iter()
        .map(|p| {
            let next = labels.len() as u32 + 1;
            let l = *labels.entry(p.crossing).or_insert(next);
            (l, p.flat_sign())
        })
        .collect();
    (tokens, labels)
}

// Components are fixed in order; each rotation choice relabels crossings by
// first appearance. Ties are kept so the overall lexicographic minimum is exact.
fn flat_key(d: &Diagram) -> FlatKey {
    let mut states = vec![KeyState {
        labels: HashMap::new(),
        out: Vec::new(),
    }];
    for comp in d.components() {
        let mut best: Option<Vec<FlatToken>> = None;
        let mut next_states: Vec<KeyState> = Vec::new();
        for st in &states {
            for r in 0..comp.len().max(1) {
                let (tokens, labels) = label_rotation(st, comp, r);
                let mut out = st.out.clone();
                out.push(tokens.clone());
                let candidate = KeyState { labels, out };
                match best.as_ref().map(|b| tokens.cmp(b)) {
                    None | Some(std::cmp::Ordering::Less) => {
                        best = Some(tokens);
                        next_states = vec![candidate];
                    }
                    Some(std::cmp::Ordering::Equal) => {
                        if !next_states.iter().any(|s| s.labels == candidate.labels) {
                            next_states.push(candidate);
                        }
                    }
                    Some(std::cmp::Ordering::Greater) => {}
                }
            }
        }
        states = next_states;
    }
    let out = &states[0].out;
    let text = out
        .iter()
        .map(|toks| {
            if toks.is_empty() {
                "0".to_string()
            } else {
                toks.iter()
                    .map(|(l, s)| format!("{}{}", l, s.symbol()))
                    .collect::<Vec<_>>()
                    .join(".")
            }
        })
        .collect::<Vec<_>>()
        .join(";");
    FlatKey(text)
}
