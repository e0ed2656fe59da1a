use std::fs;
use std::io::Read;
use std::path::Path;

use serde_json::{json, Value};

use hypermoment::census::{Census, Pattern};
use hypermoment::enumerate::{enumerate_family_capped, filter_binary, Caps, Family, FamilyQuery};
use hypermoment::family::{make_family, FamilyKind, FamilySpec};
use hypermoment::moments::{default_d_max, moment_sequence, MomentSequence};
use hypermoment::order::{s_compare_full, sort_family};
use hypermoment::transform::{
    apply, legal_sites, merge_sites, reduce_to_extremal, Effect, Mode, TransformSpec,
};
use hypermoment::{canonical_key, Error, Hypergraph};

use crate::report::{Check, Failure, Report};
use crate::{FamilyArgs, ReduceMode};

pub(crate) fn read_text(path: &Path) -> Result<String, Failure> {
    let mut s = String::new();
    if path == Path::new("-") {
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("reading standard input: {e}")))?;
    } else {
        s = fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("reading {}: {e}", path.display())))?;
    }
    Ok(s)
}

/// JSON (`{"m":..,"n":..,"edges":[..]}`) or the plain text format.
pub(crate) fn read_hypergraph(path: &Path) -> Result<Hypergraph, Failure> {
    let s = read_text(path)?;
    if s.trim_start().starts_with('{') {
        serde_json::from_str(&s)
            .map_err(|e| Failure::Core(Error::Parse(format!("{}: {e}", path.display()))))
    } else {
        Ok(Hypergraph::from_text(&s)?)
    }
}

fn write_hypergraph(path: &Path, h: &Hypergraph) -> Result<(), Failure> {
    let mut s = serde_json::to_string(h).expect("hypergraphs serialize");
    s.push('\n');
    fs::write(path, s).map_err(|e| Failure::Input(format!("writing {}: {e}", path.display())))
}

pub(crate) fn hypergraph_json(h: &Hypergraph) -> Value {
    serde_json::to_value(h).expect("hypergraphs serialize")
}

pub(crate) fn summary(h: &Hypergraph) -> Value {
    let girth = h
        .girth()
        .map_or_else(|_| Value::Null, |g| json!(g.to_string()));
    json!({
        "m": h.m(),
        "n": h.n(),
        "q": h.q(),
        "class": h.structure_class().to_string(),
        "girth": girth,
        "key": canonical_key(h).to_hex(),
    })
}

fn moment_values(seq: &MomentSequence) -> Vec<String> {
    seq.values().map(|v| v.to_string()).collect()
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn need(value: Option<usize>, flag: &str, what: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::Core(Error::InvalidFamily(format!("{what} needs --{flag}"))))
}

fn family_spec(args: &FamilyArgs, graph: Option<&Path>) -> Result<FamilySpec, Failure> {
    let name = args.family.as_deref().unwrap_or("");
    let m = need(args.m, "m", "gen")?;
    let kind = match name {
        "hyperpath" | "path" => FamilyKind::Hyperpath {
            q: need(args.q, "q", name)?,
        },
        "hyperstar" | "star" => FamilyKind::Hyperstar {
            q: need(args.q, "q", name)?,
        },
        "hypercycle" | "cycle" => FamilyKind::Hypercycle {
            e: need(args.e.or(args.q), "e", name)?,
        },
        "pendant-cycle" | "F" => FamilyKind::PendantCycle {
            e: need(args.e, "e", name)?,
            f: need(args.f, "f", name)?,
        },
        "tailed-cycle" | "E" => FamilyKind::TailedCycle {
            e: need(args.e, "e", name)?,
            f: need(args.f, "f", name)?,
        },
        "power" => {
            let path = graph.ok_or_else(|| Failure::Core(Error::InvalidFamily("power needs --graph".into())))?;
            FamilyKind::Power {
                graph: read_hypergraph(path)?,
            }
        }
        other => {
            return Err(Failure::Core(Error::InvalidFamily(format!(
                "unknown family `{other}`; expected hyperpath, hyperstar, hypercycle, pendant-cycle, tailed-cycle or power"
            ))))
        }
    };
    Ok(FamilySpec::new(kind, m))
}

pub fn gen(
    args: &FamilyArgs,
    graph: Option<&Path>,
    output: Option<&Path>,
) -> Result<Report, Failure> {
    let spec = family_spec(args, graph)?;
    let h = make_family(&spec)?;
    if let Some(path) = output {
        write_hypergraph(path, &h)?;
    }
    let mut inputs = serde_json::to_value(&spec).expect("family specs serialize");
    if let (Some(obj), Some(p)) = (inputs.as_object_mut(), output) {
        obj.insert("output".into(), json!(path_str(p)));
    }
    let result = json!({
        "hypergraph": hypergraph_json(&h),
        "summary": summary(&h),
    });
    Ok(Report::new("gen", inputs, result))
}

pub fn moments(input: &Path, dmax: Option<usize>) -> Result<Report, Failure> {
    let h = read_hypergraph(input)?;
    let d_max = dmax.unwrap_or_else(|| default_d_max(h.m()));
    let seq = moment_sequence(&h, d_max)?;
    let rows: Vec<Value> = seq
        .entries
        .iter()
        .map(|(d, v)| json!({ "d": d, "value": v.to_string() }))
        .collect();
    let result = json!({
        "hypergraph": summary(&h),
        "d_max": d_max,
        "moments": rows,
    });
    Ok(Report::new(
        "moments",
        json!({ "file": path_str(input), "d_max": d_max }),
        result,
    ))
}

/// Above this edge count the brute-force census cross-check is skipped.
const BRUTE_FORCE_EDGE_LIMIT: usize = 40;

pub fn census(input: &Path) -> Result<Report, Failure> {
    let h = read_hypergraph(input)?;
    let c = Census::of(&h)?;
    let counts: serde_json::Map<String, Value> = Pattern::ALL
        .iter()
        .map(|p| (p.to_string(), json!(c.get(*p).to_string())))
        .collect();
    let method = if h.is_linear() {
        "degree formulas"
    } else {
        "brute force"
    };
    let mut checks = Vec::new();
    if h.is_linear() && h.q() <= BRUTE_FORCE_EDGE_LIMIT {
        let slow = Census::brute_force(&h)?;
        checks.push(Check::new(
            "census/brute-force",
            slow == c,
            format!("subset enumeration gives {slow:?}"),
        ));
    }
    let result = json!({ "hypergraph": summary(&h), "method": method, "census": counts });
    Ok(Report::new("census", json!({ "file": path_str(input) }), result).with_checks(checks))
}

pub fn zagreb(input: &Path) -> Result<Report, Failure> {
    let h = read_hypergraph(input)?;
    let result = json!({
        "hypergraph": summary(&h),
        "zagreb": h.zagreb().to_string(),
        "max_degree": h.max_degree(),
        "degrees": h.degrees().0,
    });
    Ok(Report::new(
        "zagreb",
        json!({ "file": path_str(input) }),
        result,
    ))
}

pub fn compare(a: &Path, b: &Path, dmax: Option<usize>) -> Result<Report, Failure> {
    let (ha, hb) = (read_hypergraph(a)?, read_hypergraph(b)?);
    if ha.m() != hb.m() {
        return Err(Error::MixedUniformity(ha.m(), hb.m()).into());
    }
    let d_max = dmax.unwrap_or_else(|| default_d_max(ha.m()));
    let (outcome, sa, sb) = s_compare_full(&ha, &hb, d_max)?;
    let result = json!({
        "relation": outcome.relation.to_string(),
        "deciding_index": outcome.deciding_index,
        "d_max": d_max,
        "cross_size": outcome.cross_size,
        "a": { "hypergraph": summary(&ha), "moments": moment_values(&sa) },
        "b": { "hypergraph": summary(&hb), "moments": moment_values(&sb) },
    });
    let inputs = json!({ "a": path_str(a), "b": path_str(b), "d_max": d_max });
    Ok(Report::new("compare", inputs, result))
}

pub(crate) fn family_query(args: &FamilyArgs) -> Result<FamilyQuery, Failure> {
    let m = need(args.m, "m", "a family query")?;
    let name = args.family.as_deref().unwrap_or("");
    let family = match name {
        "hypertrees" | "trees" => {
            let q = need(args.q, "q", name)?;
            if args.binary {
                Family::BinaryHypertrees { q }
            } else {
                Family::Hypertrees { q }
            }
        }
        "unicyclic" => match (args.e, args.q) {
            (Some(e), _) => {
                let f = args.f.unwrap_or(0);
                if args.binary {
                    Family::UnicyclicBinary { e, f }
                } else {
                    Family::Unicyclic { e, f }
                }
            }
            (None, Some(q)) => Family::UnicyclicAll { q },
            (None, None) => {
                return Err(
                    Error::InvalidFamily("unicyclic needs --e (and --f) or --q".into()).into(),
                )
            }
        },
        other => {
            return Err(Error::InvalidFamily(format!(
                "unknown family `{other}`; expected hypertrees or unicyclic"
            ))
            .into())
        }
    };
    Ok(FamilyQuery::new(family, m))
}

pub(crate) fn enumerate_query(
    args: &FamilyArgs,
    caps: &Caps,
) -> Result<(FamilyQuery, Vec<Hypergraph>), Failure> {
    let query = family_query(args)?;
    let mut members = enumerate_family_capped(&query, caps)?;
    if args.binary && matches!(query.family, Family::UnicyclicAll { .. }) {
        members = filter_binary(&members);
    }
    Ok((query, members))
}

fn query_json(query: &FamilyQuery, binary: bool) -> Value {
    let mut v = serde_json::to_value(query).expect("queries serialize");
    if binary {
        v["binary"] = json!(true);
    }
    v
}

pub fn order(
    inputs: &[std::path::PathBuf],
    args: &FamilyArgs,
    dmax: Option<usize>,
    caps: &Caps,
) -> Result<Report, Failure> {
    let (members, labels, input_json): (Vec<Hypergraph>, Vec<String>, Value) = if !inputs.is_empty()
    {
        let hs = inputs
            .iter()
            .map(|p| read_hypergraph(p))
            .collect::<Result<Vec<_>, _>>()?;
        let labels: Vec<String> = inputs.iter().map(|p| path_str(p)).collect();
        (hs, labels.clone(), json!({ "files": labels }))
    } else if args.family.is_some() {
        let (query, hs) = enumerate_query(args, caps)?;
        let labels = (0..hs.len()).map(|i| format!("#{i}")).collect();
        (
            hs,
            labels,
            json!({ "family": query_json(&query, args.binary) }),
        )
    } else {
        return Err(Failure::Input("order needs input files or --family".into()));
    };
    let Some(first) = members.first() else {
        return Err(Failure::Input("the family is empty".into()));
    };
    let d_max = dmax.unwrap_or_else(|| default_d_max(first.m()));
    let blocks = sort_family(&members, d_max)?;
    let label_of = |h: &Hypergraph| {
        members
            .iter()
            .position(|x| x == h)
            .map(|i| labels[i].clone())
            .unwrap_or_default()
    };
    let rows: Vec<Value> = blocks
        .iter()
        .enumerate()
        .map(|(rank, b)| {
            let names: Vec<String> = b.members.iter().map(|x| label_of(&x.hypergraph)).collect();
            let keys: Vec<String> = b.members.iter().map(|x| x.key.to_hex()).collect();
            json!({
                "rank": rank,
                "members": names,
                "keys": keys,
                "moments": moment_values(&b.members[0].moments),
            })
        })
        .collect();
    let mut inputs = input_json;
    inputs["d_max"] = json!(d_max);
    let result = json!({ "d_max": d_max, "count": members.len(), "blocks": rows });
    Ok(Report::new("order", inputs, result))
}

pub fn enumerate(args: &FamilyArgs, caps: &Caps) -> Result<Report, Failure> {
    let (query, members) = enumerate_query(args, caps)?;
    let rows: Vec<Value> = members
        .iter()
        .map(|h| {
            json!({
                "key": canonical_key(h).to_hex(),
                "zagreb": h.zagreb().to_string(),
                "max_degree": h.max_degree(),
                "edges": h.edges(),
            })
        })
        .collect();
    let result = json!({ "count": members.len(), "members": rows });
    let inputs = json!({ "family": query_json(&query, args.binary), "caps": caps.to_string() });
    Ok(Report::new("enumerate", inputs, result))
}

pub(crate) fn effect_json(effect: &Effect) -> Value {
    match *effect {
        Effect::Zagreb {
            predicted,
            actual,
            increasing,
        } => json!({
            "metric": "zagreb",
            "predicted": predicted.to_string(),
            "actual": actual.to_string(),
            "direction": if increasing { "increase" } else { "decrease" },
            "holds": effect.holds(),
        }),
        Effect::P3 { before, after } => json!({
            "metric": "p3",
            "before": before.to_string(),
            "after": after.to_string(),
            "direction": "decrease",
            "holds": effect.holds(),
        }),
    }
}

fn spec_json(spec: &TransformSpec) -> Value {
    serde_json::to_value(spec).expect("specs serialize")
}

fn parse_spec(arg: &str) -> Result<TransformSpec, Failure> {
    let text = match arg.strip_prefix('@') {
        Some(path) => read_text(Path::new(path))?,
        None => arg.to_string(),
    };
    serde_json::from_str(&text)
        .map_err(|e| Failure::Core(Error::Parse(format!("transformation spec: {e}"))))
}

pub fn transform(
    input: &Path,
    spec: Option<&str>,
    sites: bool,
    reduce: Option<ReduceMode>,
    output: Option<&Path>,
) -> Result<Report, Failure> {
    let h = read_hypergraph(input)?;
    let mut inputs = json!({ "file": path_str(input) });
    let (result, checks, produced) = if let Some(arg) = spec {
        let spec = parse_spec(arg)?;
        inputs["spec"] = spec_json(&spec);
        let applied = apply(&h, &spec)?;
        let check = Check::new(
            format!("transform/{}", spec.kind()),
            applied.effect.holds(),
            format!("{:?}", applied.effect),
        );
        let result = json!({
            "before": { "hypergraph": summary(&applied.before), "zagreb": applied.before.zagreb().to_string() },
            "after": {
                "hypergraph": summary(&applied.result),
                "zagreb": applied.result.zagreb().to_string(),
                "edges": applied.result.edges(),
            },
            "effect": effect_json(&applied.effect),
        });
        (result, vec![check], Some(applied.result))
    } else if sites {
        inputs["sites"] = json!(true);
        let mut found = legal_sites(&h);
        found.extend(merge_sites(&h));
        let checks = found
            .iter()
            .enumerate()
            .map(|(i, (s, a))| {
                Check::new(
                    format!("site/{i:04}/{}", s.kind()),
                    a.effect.holds(),
                    format!("{:?}", a.effect),
                )
            })
            .collect();
        let rows: Vec<Value> = found
            .iter()
            .map(|(s, a)| json!({ "kind": s.kind(), "spec": spec_json(s), "effect": effect_json(&a.effect) }))
            .collect();
        (
            json!({ "hypergraph": summary(&h), "count": rows.len(), "sites": rows }),
            checks,
            None,
        )
    } else if let Some(mode) = reduce {
        let (mode, name) = match mode {
            ReduceMode::StarWard => (Mode::StarWard, "star-ward"),
            ReduceMode::PathWard => (Mode::PathWard, "path-ward"),
        };
        inputs["reduce"] = json!(name);
        let steps = reduce_to_extremal(&h, mode)?;
        let terminal = steps.last().map_or_else(|| h.clone(), |s| s.result.clone());
        let checks = steps
            .iter()
            .enumerate()
            .map(|(i, s)| {
                Check::new(
                    format!("step/{i:04}/{}", s.spec.kind()),
                    s.effect.holds(),
                    format!("{:?}", s.effect),
                )
            })
            .collect();
        let rows: Vec<Value> = steps
            .iter()
            .enumerate()
            .map(|(i, s)| json!({ "step": i, "kind": s.spec.kind(), "spec": spec_json(&s.spec), "effect": effect_json(&s.effect) }))
            .collect();
        let result = json!({
            "mode": name,
            "steps": rows,
            "terminal": { "hypergraph": summary(&terminal), "edges": terminal.edges() },
        });
        (result, checks, Some(terminal))
    } else {
        return Err(Failure::Input(
            "transform needs --spec, --sites or --reduce".into(),
        ));
    };
    if let (Some(path), Some(h)) = (output, &produced) {
        write_hypergraph(path, h)?;
        inputs["output"] = json!(path_str(path));
    }
    Ok(Report::new("transform", inputs, result).with_checks(checks))
}
