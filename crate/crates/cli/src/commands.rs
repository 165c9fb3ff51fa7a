use std::process::ExitCode;

use rayon::prelude::*;
use serde_json::{json, Value as Json};
use vknots::invariants::registry::{self, evaluate, Comparison, InvariantSpec, Params, Value};
use vknots::invariants::{flatsum_nonzero, FingerprintConfig, Fingerprinter, Verdict};
use vknots::moves::{apply_move, enumerate_moves, random_walk_steps, Move, MoveKind};
use vknots::smoothing::{smooth1, smooth2, smooth3};
use vknots::{CrossingId, Diagram};

use crate::input::{read_catalog, Context, Failure, Outcome};
use crate::{Expectation, FlatArgs, InvArgs};

/// Like `println!`, but a closed pipe ends output quietly.
macro_rules! emit {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

fn print_json(v: &Json) {
    emit!("{}", serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn fingerprinter(flat: &FlatArgs) -> Fingerprinter {
    Fingerprinter::new(FingerprintConfig {
        window: flat.window.clone(),
        depth: flat.depth,
    })
}

/// Specs named on the command line; empty when none were given.
fn requested(inv: &InvArgs) -> Outcome<Vec<InvariantSpec>> {
    let params = Params { n: inv.n, m: inv.m, k: inv.k, i: inv.i };
    let mut out = Vec::new();
    for item in inv.inv.iter().flat_map(|s| s.split(';')).map(str::trim).filter(|s| !s.is_empty()) {
        let spec = if item.contains('(') {
            item.parse()?
        } else {
            InvariantSpec::from_name(item, params)?
        };
        out.push(spec);
    }
    Ok(out)
}

fn requested_or_standard(inv: &InvArgs, d: &Diagram) -> Outcome<Vec<InvariantSpec>> {
    let specs = requested(inv)?;
    Ok(if specs.is_empty() {
        InvariantSpec::standard_set(d.num_components())
    } else {
        specs
    })
}

pub fn parse(ctx: &Context, input: &str) -> Outcome<ExitCode> {
    let d = ctx.diagram(input)?;
    if ctx.json {
        print_json(&json!({
            "code": d.to_string(),
            "components": d.num_components(),
            "crossings": d.crossing_count(),
            "flat_key": d.flat_key().to_string(),
        }));
    } else {
        emit!("{d}");
    }
    Ok(ExitCode::SUCCESS)
}

pub fn invariant(ctx: &Context, input: &str, inv: &InvArgs, flat: &FlatArgs) -> Outcome<ExitCode> {
    let d = ctx.diagram(input)?;
    let specs = requested(inv)?;
    if specs.is_empty() {
        let names = registry::NAMES.join(", ");
        return Err(Failure::input(format!("no invariant given; use --inv with one of {names}")));
    }
    let mut fp = fingerprinter(flat);
    let values = specs
        .iter()
        .map(|s| Ok((s, evaluate(&d, s, &mut fp)?)))
        .collect::<Outcome<Vec<_>>>()?;
    match (ctx.json, values.as_slice()) {
        (true, [(_, v)]) => print_json(&v.to_json()),
        (false, [(_, v)]) => emit!("{v}"),
        (true, _) => print_json(&Json::Array(
            values.iter().map(|(s, v)| json!({ "invariant": s.to_string(), "value": v.to_json() })).collect(),
        )),
        (false, _) => values.iter().for_each(|(s, v)| emit!("{s}\t{v}")),
    }
    Ok(ExitCode::SUCCESS)
}

pub fn smooth(ctx: &Context, input: &str, kind: u8, at: u32) -> Outcome<ExitCode> {
    let d = ctx.diagram(input)?;
    let id = CrossingId(at);
    let out = match kind {
        1 => smooth1(&d, id)?,
        2 => smooth2(&d, id)?,
        _ => smooth3(&d, id)?,
    };
    if ctx.json {
        print_json(&json!({ "code": out.to_string(), "components": out.num_components() }));
    } else {
        emit!("{out}");
    }
    Ok(ExitCode::SUCCESS)
}

pub fn moves(ctx: &Context, input: &str, list: bool, apply: Option<&str>) -> Outcome<ExitCode> {
    let d = ctx.diagram(input)?;
    if list {
        let all: Vec<String> = enumerate_moves(&d, &MoveKind::ALL).iter().map(Move::to_string).collect();
        if ctx.json {
            print_json(&json!(all));
        } else {
            all.iter().for_each(|m| emit!("{m}"));
        }
        return Ok(ExitCode::SUCCESS);
    }
    let m: Move = apply.unwrap_or_default().parse()?;
    let out = apply_move(&d, &m)?;
    if ctx.json {
        print_json(&json!({ "move": m.to_string(), "code": out.to_string() }));
    } else {
        emit!("{out}");
    }
    Ok(ExitCode::SUCCESS)
}

struct Violation {
    step: usize,
    mv: Move,
    before: Value,
    after: Value,
}

pub fn verify(
    ctx: &Context,
    input: &str,
    inv: &InvArgs,
    flat: &FlatArgs,
    seed: u64,
    steps: usize,
    max_crossings: Option<usize>,
) -> Outcome<ExitCode> {
    let d = ctx.diagram(input)?;
    let specs = requested_or_standard(inv, &d)?;
    let budget = max_crossings.unwrap_or(d.crossing_count() + 4);
    let mut fp = fingerprinter(flat);
    let start = specs
        .iter()
        .map(|s| evaluate(&d, s, &mut fp))
        .collect::<vknots::Result<Vec<_>>>()?;
    let walk = random_walk_steps(&d, steps, seed, budget);
    let mut found: Vec<Option<Violation>> = specs.iter().map(|_| None).collect();
    for (step, (mv, e)) in walk.iter().enumerate() {
        for (j, spec) in specs.iter().enumerate() {
            if found[j].is_some() {
                continue;
            }
            let now = evaluate(e, spec, &mut fp)?;
            if now != start[j] {
                found[j] = Some(Violation {
                    step: step + 1,
                    mv: mv.clone(),
                    before: start[j].clone(),
                    after: now,
                });
            }
        }
    }
    let failed = found.iter().any(Option::is_some);
    if ctx.json {
        let results: Vec<Json> = specs
            .iter()
            .zip(&found)
            .map(|(s, f)| match f {
                None => json!({ "invariant": s.to_string(), "status": "PASS" }),
                Some(v) => json!({
                    "invariant": s.to_string(),
                    "status": "FAIL",
                    "step": v.step,
                    "move": v.mv.to_string(),
                    "before": v.before.to_json(),
                    "after": v.after.to_json(),
                }),
            })
            .collect();
        print_json(&json!({
            "code": d.to_string(),
            "seed": seed,
            "steps": walk.len(),
            "max_crossings": budget,
            "results": results,
        }));
    } else {
        emit!("walk from {d}: {} steps, seed {seed}, at most {budget} crossings", walk.len());
        for (s, f) in specs.iter().zip(&found) {
            match f {
                None => emit!("PASS {s}"),
                Some(v) => emit!(
                    "FAIL {s}: step {} ({}) changed {} to {}",
                    v.step, v.mv, v.before, v.after
                ),
            }
        }
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn certificate(v: &Value, config: &FingerprintConfig) -> Outcome<Option<String>> {
    let Value::Flat { sum, .. } = v else {
        return Ok(None);
    };
    Ok(match flatsum_nonzero(sum, config)? {
        Verdict::Nonzero(c) => Some(c.to_string()),
        _ => None,
    })
}

pub fn distinguish(
    ctx: &Context,
    left: &str,
    right: &str,
    inv: &InvArgs,
    flat: &FlatArgs,
    expect: Option<Expectation>,
) -> Outcome<ExitCode> {
    let (a, b) = (ctx.diagram(left)?, ctx.diagram(right)?);
    let specs = requested_or_standard(inv, &a)?;
    let mut fp = fingerprinter(flat);
    let verdict = registry::distinguish(&a, &b, &specs, &mut fp)?;
    let got = match &verdict {
        Comparison::Distinct { .. } => Expectation::Distinct,
        Comparison::Inconclusive => Expectation::Inconclusive,
    };
    match &verdict {
        Comparison::Distinct { invariant, left: l, right: r } => {
            let cert = match certificate(l, fp.config())? {
                Some(c) => Some(c),
                None => certificate(r, fp.config())?,
            };
            if ctx.json {
                print_json(&json!({
                    "verdict": "DISTINCT",
                    "invariant": invariant,
                    "left": l.to_json(),
                    "right": r.to_json(),
                    "certificate": cert,
                }));
            } else {
                emit!("DISTINCT by {invariant}");
                emit!("left:  {l}");
                emit!("right: {r}");
                if let Some(c) = cert {
                    emit!("nonzero: {c}");
                }
            }
        }
        Comparison::Inconclusive => {
            let names: Vec<String> = specs.iter().map(InvariantSpec::to_string).collect();
            if ctx.json {
                print_json(&json!({ "verdict": "INCONCLUSIVE", "checked": names }));
            } else {
                emit!("INCONCLUSIVE after {}", names.join(", "));
            }
        }
    }
    Ok(match expect {
        Some(e) if e != got => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    })
}

/// Entries are evaluated in parallel; output keeps catalog order. Failed
/// preconditions are reported per entry and do not stop the run.
pub fn batch(ctx: &Context, file: &str, inv: &InvArgs, flat: &FlatArgs) -> Outcome<ExitCode> {
    let entries = read_catalog(file)?;
    let requested = requested(inv)?;
    let rows: Vec<(String, Vec<(InvariantSpec, Result<Value, String>)>)> = entries
        .par_iter()
        .map(|e| {
            let specs = if requested.is_empty() {
                InvariantSpec::standard_set(e.diagram.num_components())
            } else {
                requested.clone()
            };
            let mut fp = fingerprinter(flat);
            let values = specs
                .into_iter()
                .map(|s| {
                    let v = evaluate(&e.diagram, &s, &mut fp).map_err(|err| err.to_string());
                    (s, v)
                })
                .collect();
            (e.name.clone(), values)
        })
        .collect();
    if ctx.json {
        let out: Vec<Json> = rows
            .iter()
            .map(|(name, values)| {
                let results: Vec<Json> = values
                    .iter()
                    .map(|(s, v)| match v {
                        Ok(v) => json!({ "invariant": s.to_string(), "value": v.to_json() }),
                        Err(e) => json!({ "invariant": s.to_string(), "error": e }),
                    })
                    .collect();
                json!({ "name": name, "results": results })
            })
            .collect();
        print_json(&Json::Array(out));
    } else {
        for (name, values) in &rows {
            for (s, v) in values {
                match v {
                    Ok(v) => emit!("{name}\t{s}\t{v}"),
                    Err(e) => emit!("{name}\t{s}\terror: {e}"),
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
