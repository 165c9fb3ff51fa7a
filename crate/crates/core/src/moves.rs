//! Classical Reidemeister moves on signed Gauss codes.
//!
//! Virtual moves need no code here: they leave the Gauss code unchanged.
//!
//! A *gap* is a place between two consecutive passages: gap `k` of a
//! component is the arc entering passage `k` (on an empty component the only
//! gap is 0). Insertions put new passages into gaps, deletions remove
//! chords whose passages sit next to each other.
//!
//! Text form of a move, with 1-based component numbers:
//!
//! | move | example | meaning |
//! |------|---------|---------|
//! | `r1i:C.K:S±` | `r1i:1.0:O+` | kink at gap `K` of component `C`, strand `S` met first |
//! | `r1d:X` | `r1d:4` | remove kink `X` |
//! | `r2i:C.K:C.K:par±` | `r2i:1.0:1.2:anti-` | bigon: over pair at the first gap, under pair at the second |
//! | `r2d:X,Y` | `r2d:5,6` | remove bigon `X`, `Y` |
//! | `r3:X,Y,Z` | `r3:1,2,3` | triangle with top strand over `X` and `Y`, bottom strand under `Y` and `Z` |

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{Chord, CrossingId, Diagram, Location, Passage, Sign, Strand};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gap {
    pub component: usize,
    pub position: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveKind {
    R1Insert,
    R1Delete,
    R2Insert,
    R2Delete,
    R3,
}

impl MoveKind {
    pub const ALL: [MoveKind; 5] = [
        MoveKind::R1Insert,
        MoveKind::R1Delete,
        MoveKind::R2Insert,
        MoveKind::R2Delete,
        MoveKind::R3,
    ];

    /// Change in crossing count.
    pub fn delta(self) -> isize {
        match self {
            MoveKind::R1Insert => 1,
            MoveKind::R1Delete => -1,
            MoveKind::R2Insert => 2,
            MoveKind::R2Delete => -2,
            MoveKind::R3 => 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Move {
    /// A kink whose first passage has strand `first`.
    R1Insert { gap: Gap, first: Strand, sign: Sign },
    R1Delete { crossing: CrossingId },
    /// Two new crossings; `sign` is the sign of the one met first on the
    /// over pair. When both gaps coincide the over pair comes first.
    R2Insert {
        over: Gap,
        under: Gap,
        parallel: bool,
        sign: Sign,
    },
    R2Delete { first: CrossingId, second: CrossingId },
    /// `top_middle` and `top_bottom` share the top strand, `middle_bottom`
    /// joins the other two strands.
    R3 {
        top_middle: CrossingId,
        top_bottom: CrossingId,
        middle_bottom: CrossingId,
    },
}

impl Move {
    pub fn kind(&self) -> MoveKind {
        match self {
            Move::R1Insert { .. } => MoveKind::R1Insert,
            Move::R1Delete { .. } => MoveKind::R1Delete,
            Move::R2Insert { .. } => MoveKind::R2Insert,
            Move::R2Delete { .. } => MoveKind::R2Delete,
            Move::R3 { .. } => MoveKind::R3,
        }
    }
}

fn strand_char(s: Strand) -> char {
    match s {
        Strand::Over => 'O',
        Strand::Under => 'U',
    }
}

fn sign_char(s: Sign) -> char {
    match s {
        Sign::Pos => '+',
        Sign::Neg => '-',
    }
}

impl fmt::Display for Gap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.component + 1, self.position)
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::R1Insert { gap, first, sign } => {
                write!(f, "r1i:{gap}:{}{}", strand_char(*first), sign_char(*sign))
            }
            Move::R1Delete { crossing } => write!(f, "r1d:{crossing}"),
            Move::R2Insert {
                over,
                under,
                parallel,
                sign,
            } => {
                let p = if *parallel { "par" } else { "anti" };
                write!(f, "r2i:{over}:{under}:{p}{}", sign_char(*sign))
            }
            Move::R2Delete { first, second } => write!(f, "r2d:{first},{second}"),
            Move::R3 {
                top_middle,
                top_bottom,
                middle_bottom,
            } => write!(f, "r3:{top_middle},{top_bottom},{middle_bottom}"),
        }
    }
}

fn bad_spec(spec: &str) -> Error {
    Error::Syntax {
        position: 0,
        message: format!("malformed move '{spec}'"),
    }
}

fn parse_gap(s: &str, spec: &str) -> Result<Gap> {
    let (c, k) = s.split_once('.').ok_or_else(|| bad_spec(spec))?;
    let c: usize = c.parse().map_err(|_| bad_spec(spec))?;
    if c == 0 {
        return Err(bad_spec(spec));
    }
    Ok(Gap {
        component: c - 1,
        position: k.parse().map_err(|_| bad_spec(spec))?,
    })
}

fn parse_ids<const N: usize>(s: &str, spec: &str) -> Result<[CrossingId; N]> {
    let ids: Vec<CrossingId> = s
        .split(',')
        .map(|x| x.trim().parse().map(CrossingId).map_err(|_| bad_spec(spec)))
        .collect::<Result<_>>()?;
    ids.try_into().map_err(|_| bad_spec(spec))
}

fn parse_sign(c: Option<char>, spec: &str) -> Result<Sign> {
    match c {
        Some('+') => Ok(Sign::Pos),
        Some('-') => Ok(Sign::Neg),
        _ => Err(bad_spec(spec)),
    }
}

impl FromStr for Move {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Move> {
        let s: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["r1i", gap, var] => {
                let mut cs = var.chars();
                let first = match cs.next() {
                    Some('O') => Strand::Over,
                    Some('U') => Strand::Under,
                    _ => return Err(bad_spec(spec)),
                };
                let sign = parse_sign(cs.next(), spec)?;
                if cs.next().is_some() {
                    return Err(bad_spec(spec));
                }
                Ok(Move::R1Insert {
                    gap: parse_gap(gap, spec)?,
                    first,
                    sign,
                })
            }
            ["r1d", id] => Ok(Move::R1Delete {
                crossing: parse_ids::<1>(id, spec)?[0],
            }),
            ["r2i", over, under, var] => {
                let (parallel, rest) = if let Some(r) = var.strip_prefix("par") {
                    (true, r)
                } else if let Some(r) = var.strip_prefix("anti") {
                    (false, r)
                } else {
                    return Err(bad_spec(spec));
                };
                if rest.len() != 1 {
                    return Err(bad_spec(spec));
                }
                Ok(Move::R2Insert {
                    over: parse_gap(over, spec)?,
                    under: parse_gap(under, spec)?,
                    parallel,
                    sign: parse_sign(rest.chars().next(), spec)?,
                })
            }
            ["r2d", ids] => {
                let [first, second] = parse_ids::<2>(ids, spec)?;
                Ok(Move::R2Delete { first, second })
            }
            ["r3", ids] => {
                let [top_middle, top_bottom, middle_bottom] = parse_ids::<3>(ids, spec)?;
                Ok(Move::R3 {
                    top_middle,
                    top_bottom,
                    middle_bottom,
                })
            }
            _ => Err(bad_spec(spec)),
        }
    }
}

fn gaps(d: &Diagram) -> Vec<Gap> {
    d.components()
        .iter()
        .enumerate()
        .flat_map(|(c, comp)| {
            (0..comp.len().max(1)).map(move |k| Gap {
                component: c,
                position: k,
            })
        })
        .collect()
}

/// Orders in which `a` and `b` can be read as consecutive passages:
/// `true` for `a` then `b`, `false` for `b` then `a`.
fn adjacency(d: &Diagram, a: Location, b: Location) -> Vec<bool> {
    if a.component != b.component || a.position == b.position {
        return Vec::new();
    }
    let len = d.components()[a.component].len();
    let mut out = Vec::new();
    if (a.position + 1) % len == b.position {
        out.push(true);
    }
    if (b.position + 1) % len == a.position {
        out.push(false);
    }
    out
}

fn is_kink(d: &Diagram, c: &Chord) -> bool {
    !adjacency(d, c.over, c.under).is_empty()
}

fn is_bigon(d: &Diagram, x: &Chord, y: &Chord) -> bool {
    x.sign != y.sign
        && !adjacency(d, x.over, y.over).is_empty()
        && !adjacency(d, x.under, y.under).is_empty()
}

/// Whether three chords bound a triangle that a third move can flip.
///
/// Passage pairs: top strand (over x, over y), middle (under x, over z),
/// bottom (under y, under z). With `t`, `m`, `b` the reading orders
/// (x before y, x before z, y before z), sgn x sgn y = +1 exactly when
/// `m == b`, sgn x sgn z = +1 when `t == b`, sgn y sgn z = +1 when `t == m`.
fn is_triangle(d: &Diagram, x: &Chord, y: &Chord, z: &Chord) -> bool {
    let top = adjacency(d, x.over, y.over);
    let mid = adjacency(d, x.under, z.over);
    let bot = adjacency(d, y.under, z.under);
    let same = |p: Sign, q: Sign| p == q;
    top.iter().any(|&t| {
        mid.iter().any(|&m| {
            bot.iter().any(|&b| {
                same(x.sign, y.sign) == (m == b)
                    && same(x.sign, z.sign) == (t == b)
                    && same(y.sign, z.sign) == (t == m)
            })
        })
    })
}

/// Applicable moves of the given kinds. Deletions and third moves are
/// listed completely; insertions cover every gap and every variant.
pub fn enumerate_moves(d: &Diagram, kinds: &[MoveKind]) -> Vec<Move> {
    let mut out = Vec::new();
    let chords: Vec<Chord> = d.chords().into_values().collect();
    let want = |k| kinds.contains(&k);
    if want(MoveKind::R1Insert) {
        for gap in gaps(d) {
            for first in [Strand::Over, Strand::Under] {
                for sign in [Sign::Pos, Sign::Neg] {
                    out.push(Move::R1Insert { gap, first, sign });
                }
            }
        }
    }
    if want(MoveKind::R1Delete) {
        out.extend(
            chords
                .iter()
                .filter(|c| is_kink(d, c))
                .map(|c| Move::R1Delete { crossing: c.id }),
        );
    }
    if want(MoveKind::R2Insert) {
        let gs = gaps(d);
        for &over in &gs {
            for &under in &gs {
                for parallel in [true, false] {
                    for sign in [Sign::Pos, Sign::Neg] {
                        out.push(Move::R2Insert {
                            over,
                            under,
                            parallel,
                            sign,
                        });
                    }
                }
            }
        }
    }
    if want(MoveKind::R2Delete) {
        for (i, x) in chords.iter().enumerate() {
            for y in &chords[i + 1..] {
                if is_bigon(d, x, y) {
                    out.push(Move::R2Delete {
                        first: x.id,
                        second: y.id,
                    });
                }
            }
        }
    }
    if want(MoveKind::R3) {
        for x in &chords {
            for y in &chords {
                if y.id == x.id || adjacency(d, x.over, y.over).is_empty() {
                    continue;
                }
                for z in &chords {
                    if z.id != x.id && z.id != y.id && is_triangle(d, x, y, z) {
                        out.push(Move::R3 {
                            top_middle: x.id,
                            top_bottom: y.id,
                            middle_bottom: z.id,
                        });
                    }
                }
            }
        }
    }
    out
}

fn stale(m: &Move) -> Error {
    Error::StaleMove(m.to_string())
}

fn check_gap(d: &Diagram, g: Gap, m: &Move) -> Result<()> {
    match d.components().get(g.component) {
        Some(comp) if g.position < comp.len().max(1) => Ok(()),
        _ => Err(stale(m)),
    }
}

fn without(d: &Diagram, ids: &[CrossingId]) -> Diagram {
    Diagram::from_parts(
        d.components()
            .iter()
            .map(|c| c.iter().copied().filter(|p| !ids.contains(&p.crossing)).collect())
            .collect(),
    )
}

/// Inserts passage runs into gaps; later gaps of a component go first so
/// earlier positions stay valid.
fn insert_runs(d: &Diagram, mut runs: Vec<(Gap, Vec<Passage>)>) -> Diagram {
    let mut comps = d.components().to_vec();
    // stable on equal gaps: later entries were meant to follow earlier ones
    runs.reverse();
    runs.sort_by(|a, b| b.0.cmp(&a.0));
    for (gap, run) in runs {
        let comp = &mut comps[gap.component];
        let at = gap.position.min(comp.len());
        comp.splice(at..at, run);
    }
    Diagram::from_parts(comps)
}

pub fn apply_move(d: &Diagram, m: &Move) -> Result<Diagram> {
    match *m {
        Move::R1Insert { gap, first, sign } => {
            check_gap(d, gap, m)?;
            let id = d.next_free_id();
            let run = vec![
                Passage::new(id, first, sign),
                Passage::new(id, first.flip(), sign),
            ];
            Ok(insert_runs(d, vec![(gap, run)]))
        }
        Move::R1Delete { crossing } => {
            let c = d.chord(crossing).map_err(|_| stale(m))?;
            if !is_kink(d, &c) {
                return Err(stale(m));
            }
            Ok(without(d, &[crossing]))
        }
        Move::R2Insert {
            over,
            under,
            parallel,
            sign,
        } => {
            check_gap(d, over, m)?;
            check_gap(d, under, m)?;
            let x = d.next_free_id();
            let y = x + 1;
            let over_run = vec![
                Passage::new(x, Strand::Over, sign),
                Passage::new(y, Strand::Over, -sign),
            ];
            let (a, b) = if parallel { (x, y) } else { (y, x) };
            let sign_of = |id| if id == x { sign } else { -sign };
            let under_run = vec![
                Passage::new(a, Strand::Under, sign_of(a)),
                Passage::new(b, Strand::Under, sign_of(b)),
            ];
            Ok(insert_runs(d, vec![(over, over_run), (under, under_run)]))
        }
        Move::R2Delete { first, second } => {
            let x = d.chord(first).map_err(|_| stale(m))?;
            let y = d.chord(second).map_err(|_| stale(m))?;
            if first == second || !is_bigon(d, &x, &y) {
                return Err(stale(m));
            }
            Ok(without(d, &[first, second]))
        }
        Move::R3 {
            top_middle,
            top_bottom,
            middle_bottom,
        } => {
            let x = d.chord(top_middle).map_err(|_| stale(m))?;
            let y = d.chord(top_bottom).map_err(|_| stale(m))?;
            let z = d.chord(middle_bottom).map_err(|_| stale(m))?;
            let distinct: BTreeSet<_> = [x.id, y.id, z.id].into();
            if distinct.len() != 3 || !is_triangle(d, &x, &y, &z) {
                return Err(stale(m));
            }
            let mut comps = d.components().to_vec();
            for (a, b) in [(x.over, y.over), (x.under, z.over), (y.under, z.under)] {
                let comp = &mut comps[a.component];
                comp.swap(a.position, b.position);
            }
            Ok(Diagram::from_parts(comps))
        }
    }
}

/// Moves applicable without exceeding `max_crossings`.
fn budgeted(d: &Diagram, max_crossings: usize) -> Vec<Vec<Move>> {
    let n = d.crossing_count() as isize;
    MoveKind::ALL
        .iter()
        .filter(|k| n + k.delta() <= max_crossings as isize)
        .map(|&k| enumerate_moves(d, &[k]))
        .filter(|ms| !ms.is_empty())
        .collect()
}

/// Every step of a seeded random walk: the move taken and the diagram after
/// it. Each step picks a move kind uniformly among those with a site that
/// fits the crossing budget, then a site uniformly. The walk stops early if
/// nothing fits.
pub fn random_walk_steps(
    d: &Diagram,
    steps: usize,
    seed: u64,
    max_crossings: usize,
) -> Vec<(Move, Diagram)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = d.clone();
    let mut out = Vec::with_capacity(steps);
    for _ in 0..steps {
        let options = budgeted(&cur, max_crossings);
        let Some(kind) = options.choose(&mut rng) else {
            break;
        };
        let m = kind[rng.gen_range(0..kind.len())].clone();
        cur = apply_move(&cur, &m).expect("enumerated move applies");
        out.push((m, cur.clone()));
    }
    out
}

pub fn random_walk(d: &Diagram, steps: usize, seed: u64, max_crossings: usize) -> Diagram {
    random_walk_steps(d, steps, seed, max_crossings)
        .pop()
        .map_or_else(|| d.clone(), |(_, last)| last)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    #[test]
    fn unknot_only_inserts() {
        let ms = enumerate_moves(&Diagram::unknot(), &MoveKind::ALL);
        assert!(ms
            .iter()
            .all(|m| matches!(m.kind(), MoveKind::R1Insert | MoveKind::R2Insert)));
        assert_eq!(ms.len(), 4 + 4);
    }

    #[test]
    fn kink_round_trip() {
        let u = Diagram::unknot();
        let m = Move::R1Insert {
            gap: Gap {
                component: 0,
                position: 0,
            },
            first: Strand::Over,
            sign: Sign::Pos,
        };
        let k = apply_move(&u, &m).unwrap();
        assert_eq!(k.to_string(), "O1+U1+");
        let dels = enumerate_moves(&k, &[MoveKind::R1Delete]);
        assert_eq!(dels, vec![Move::R1Delete { crossing: CrossingId(1) }]);
        assert_eq!(apply_move(&k, &dels[0]).unwrap(), u);
    }

    #[test]
    fn bigon_round_trip() {
        let v = d("O1+O2+U1+U2+");
        for m in enumerate_moves(&v, &[MoveKind::R2Insert]) {
            let w = apply_move(&v, &m).unwrap();
            let undo = Move::R2Delete {
                first: CrossingId(3),
                second: CrossingId(4),
            };
            assert!(enumerate_moves(&w, &[MoveKind::R2Delete]).contains(&undo), "{m}");
            assert_eq!(apply_move(&w, &undo).unwrap(), v, "{m}");
        }
    }

    #[test]
    fn triangle_is_an_involution() {
        let t = d("O1+O2+O4+;U1+O3+U4+;U2+U3+");
        let ms = enumerate_moves(&t, &[MoveKind::R3]);
        assert!(!ms.is_empty());
        for m in ms {
            let once = apply_move(&t, &m).unwrap();
            assert_ne!(once.to_string(), t.to_string());
            assert!(enumerate_moves(&once, &[MoveKind::R3]).contains(&m));
            assert_eq!(apply_move(&once, &m).unwrap(), t);
        }
    }

    #[test]
    fn stale_sites_are_rejected() {
        let v = d("O1+O2+U1+U2+");
        let m = Move::R1Delete { crossing: CrossingId(1) };
        assert!(matches!(apply_move(&v, &m), Err(Error::StaleMove(_))));
        let far = Move::R1Insert {
            gap: Gap {
                component: 0,
                position: 9,
            },
            first: Strand::Over,
            sign: Sign::Pos,
        };
        assert!(matches!(apply_move(&v, &far), Err(Error::StaleMove(_))));
    }

    #[test]
    fn text_round_trip() {
        let v = d("O1+O2+U1+U2+;0");
        let all = enumerate_moves(&v, &MoveKind::ALL);
        for m in all {
            assert_eq!(m.to_string().parse::<Move>().unwrap(), m);
        }
        for bad in ["", "r1i:0.0:O+", "r1i:1.0:X+", "r2d:1", "r3:1,2", "r2i:1.0:1.0:sideways+"] {
            assert!(bad.parse::<Move>().is_err(), "{bad}");
        }
    }

    #[test]
    fn walks_are_deterministic_and_budgeted() {
        let v = d("O1+O2+U1+U2+");
        assert_eq!(random_walk(&v, 0, 7, 12), v);
        let a = random_walk_steps(&v, 60, 7, 8);
        let b = random_walk_steps(&v, 60, 7, 8);
        assert_eq!(a, b);
        assert!(a.iter().all(|(_, d)| d.crossing_count() <= 8));
        assert_eq!(a.len(), 60);
    }
}
