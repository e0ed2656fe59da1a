//! The `verify` driver: exhaustive ordering, formula and transformation
//! checks over small enumerated families.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;

use hypermoment::census::{count_pattern, Pattern};
use hypermoment::enumerate::{enumerate_family_capped, Caps, Family, FamilyQuery};
use hypermoment::family::{hypercycle, hyperpath, hyperstar, pendant_cycle, tailed_cycle};
use hypermoment::moments::{
    general_moment, matrix_oracle, moment_sequence, omega_cycle, s0, s_m, tree_moment,
    unicyclic_s2m, unicyclic_s3m,
};
use hypermoment::order::sort_family;
use hypermoment::transform::{path_shift, reduce_to_extremal, sites_of_kind, Effect, Mode};
use hypermoment::{isomorphic, Error, Girth, Hypergraph};

use crate::report::{Check, Failure, Report};
use crate::{FamilyArgs, Suite};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn text(h: &Hypergraph) -> String {
    h.to_text().trim().replace('\n', "; ")
}

struct Ctx<'a> {
    caps: &'a Caps,
    checks: Vec<Check>,
}

impl Ctx<'_> {
    fn family(&self, family: Family, m: usize) -> Result<Vec<Hypergraph>, Failure> {
        Ok(enumerate_family_capped(
            &FamilyQuery::new(family, m),
            self.caps,
        )?)
    }

    fn push(&mut self, name: String, outcome: Outcome) {
        self.checks.push(Check::from_result(name, outcome));
    }
}

/// First and last blocks hold exactly the expected members, and every
/// member of maximum degree at most 2 precedes every other member.
fn ordering_checks(
    ctx: &mut Ctx,
    prefix: &str,
    hs: &[Hypergraph],
    d_max: usize,
    (first, first_name): (&Hypergraph, &str),
    (last, last_name): (&Hypergraph, &str),
) {
    let blocks = match sort_family(hs, d_max) {
        Ok(b) => b,
        Err(e) => {
            ctx.push(format!("{prefix}/sort"), Err(err(e)));
            return;
        }
    };
    let head = &blocks[0].members;
    let tail = &blocks[blocks.len() - 1].members;
    ctx.push(
        format!("{prefix}/first-is-{first_name}"),
        ensure(
            head.len() == 1 && isomorphic(&head[0].hypergraph, first),
            || {
                format!(
                    "first block holds {} members: {}",
                    head.len(),
                    text(&head[0].hypergraph)
                )
            },
        )
        .map(|_| format!("unique first of {} members", hs.len())),
    );
    ctx.push(
        format!("{prefix}/last-is-{last_name}"),
        ensure(
            tail.len() == 1 && isomorphic(&tail[0].hypergraph, last),
            || {
                format!(
                    "last block holds {} members: {}",
                    tail.len(),
                    text(&tail[0].hypergraph)
                )
            },
        )
        .map(|_| format!("unique last of {} blocks", blocks.len())),
    );
    let binary = |h: &Hypergraph| h.max_degree() <= 2;
    let last_binary = blocks
        .iter()
        .rposition(|b| b.members.iter().any(|x| binary(&x.hypergraph)));
    let first_other = blocks
        .iter()
        .position(|b| b.members.iter().any(|x| !binary(&x.hypergraph)));
    let outcome = match (last_binary, first_other) {
        (Some(lb), Some(fo)) => ensure(lb < fo, || {
            format!("binary block {lb} follows non-binary block {fo}")
        })
        .map(|_| format!("binary members fill blocks 0..={lb}")),
        _ => Ok("only one kind of member".into()),
    };
    ctx.push(format!("{prefix}/binary-before-other"), outcome);
}

fn engines_agree(
    hs: &[Hypergraph],
    orders: &[usize],
    closed: impl Fn(&Hypergraph, usize) -> hypermoment::Result<BigInt>,
) -> Outcome {
    let mut n = 0;
    for h in hs {
        for &d in orders {
            let a = general_moment(h, d).map_err(err)?;
            let b = closed(h, d).map_err(err)?;
            ensure(a == b, || {
                format!("{} at d={d}: expansion {a}, closed form {b}", text(h))
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} values agree"))
}

fn oracle_agrees(
    hs: &[Hypergraph],
    orders: &[usize],
    closed: impl Fn(&Hypergraph, usize) -> hypermoment::Result<BigInt>,
) -> Outcome {
    let mut n = 0;
    for h in hs {
        for &d in orders {
            let a = closed(h, d).map_err(err)?;
            let b = matrix_oracle(h, d).map_err(err)?;
            ensure(a == b, || {
                format!("{} at d={d}: closed form {a}, walk count {b}", text(h))
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} values agree"))
}

fn trees(ctx: &mut Ctx, args: &FamilyArgs) -> Result<(), Failure> {
    let instances = match (args.m, args.q) {
        (Some(m), Some(q)) => vec![(m, q)],
        (m, q) => [(3, 4), (3, 5), (2, 5), (2, 6)]
            .into_iter()
            .filter(|&(a, b)| m.is_none_or(|m| m == a) && q.is_none_or(|q| q == b))
            .collect(),
    };
    for (m, q) in instances {
        let hs = ctx.family(Family::Hypertrees { q }, m)?;
        let prefix = format!("trees/m{m}/q{q}");
        let (path, star) = (hyperpath(m, q)?, hyperstar(m, q)?);
        ordering_checks(
            ctx,
            &prefix,
            &hs,
            3 * m,
            (&path, "hyperpath"),
            (&star, "hyperstar"),
        );
        let orders = [m, 2 * m, 3 * m];
        let outcome = if m >= 3 {
            engines_agree(&hs, &orders, tree_moment)
        } else {
            oracle_agrees(&hs, &orders, tree_moment)
        };
        ctx.push(format!("{prefix}/closed-forms"), outcome);
    }
    Ok(())
}

fn pendant_cycle_zagreb(ctx: &Ctx, m: usize, q: usize) -> Result<Outcome, Failure> {
    if q < 3 {
        return Ok(Err(format!("q = {q} leaves no cycle")));
    }
    let (mi, qi) = (m as i64, q as i64);
    let mut values = Vec::new();
    for l in 3..=qi {
        let h = pendant_cycle(m, l as usize, (qi - l) as usize)?;
        let formula = l * l - l - 2 * qi * l + qi * mi + 3 * qi + qi * qi;
        let actual = h.zagreb() as i64;
        if actual != formula {
            return Ok(Err(format!(
                "l={l}: M = {actual}, polynomial gives {formula}"
            )));
        }
        values.push(actual);
    }
    if values.len() > 1 && values[1..].iter().any(|&v| v >= values[0]) {
        return Ok(Err(format!("l=3 is not the unique maximum: {values:?}")));
    }
    let all = ctx.family(Family::UnicyclicAll { q }, m)?;
    let blocks = sort_family(&all, 3 * m)?;
    let tail = &blocks[blocks.len() - 1].members;
    let target = pendant_cycle(m, 3, q - 3)?;
    if tail.len() != 1 || !isomorphic(&tail[0].hypergraph, &target) {
        return Ok(Err(format!("F(3,{}) is not the unique last member", q - 3)));
    }
    Ok(Ok(format!(
        "M(F(l,{q}-l)) = {values:?}; F(3,{}) last of {} members",
        q - 3,
        all.len()
    )))
}

fn unicyclic(ctx: &mut Ctx, args: &FamilyArgs) -> Result<(), Failure> {
    let m = args.m.unwrap_or(3);
    if m < 3 {
        return Err(Error::OutOfScope("the unicyclic ordering checks need m >= 3".into()).into());
    }
    let instances = match args.e {
        Some(e) => vec![(e, args.f.unwrap_or(0))],
        None => vec![(3, 1), (3, 2), (4, 1), (4, 2)],
    };
    for (e, f) in instances {
        let hs = ctx.family(Family::Unicyclic { e, f }, m)?;
        let prefix = format!("unicyclic/m{m}/e{e}/f{f}");
        let (first, last) = (tailed_cycle(m, e, f)?, pendant_cycle(m, e, f)?);
        ordering_checks(
            ctx,
            &prefix,
            &hs,
            3 * m,
            (&first, "tailed-cycle"),
            (&last, "pendant-cycle"),
        );
        let outcome = engines_agree(&hs, &[2 * m, 3 * m], |h, d| {
            if d == 2 * m {
                unicyclic_s2m(h)
            } else {
                unicyclic_s3m(h)
            }
        });
        ctx.push(format!("{prefix}/closed-forms"), outcome);
    }
    if args.e.is_none() {
        let q = args.q.unwrap_or(5);
        let outcome = pendant_cycle_zagreb(ctx, m, q)?;
        ctx.push(
            format!("unicyclic/m{m}/q{q}/zagreb-pendant-cycles"),
            outcome,
        );
    }
    Ok(())
}

fn zagreb_sites(hosts: &[Hypergraph], kind: &str) -> Outcome {
    let mut n = 0;
    for h in hosts {
        for (spec, a) in sites_of_kind(h, kind) {
            ensure(
                matches!(a.effect, Effect::Zagreb { .. }) && a.effect.holds(),
                || format!("{spec:?} on {}: {:?}", text(h), a.effect),
            )?;
            ensure(a.result.n() == h.n() && a.result.q() == h.q(), || {
                format!("{spec:?} changed the size")
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} sites on {} hosts", hosts.len()))
}

fn t5_sites(hosts: &[Hypergraph]) -> Outcome {
    let mut n = 0;
    for h in hosts {
        for (spec, a) in sites_of_kind(h, "T5") {
            let before = count_pattern(h, Pattern::P3).map_err(err)?;
            let after = count_pattern(&a.result, Pattern::P3).map_err(err)?;
            ensure(
                after < before && a.effect == Effect::P3 { before, after },
                || format!("{spec:?} on {}: P3 {before} -> {after}", text(h)),
            )?;
            n += 1;
        }
    }
    Ok(format!("{n} instances"))
}

fn path_shifts(hosts: &[Hypergraph]) -> Outcome {
    let mut n = 0;
    for h in hosts {
        for ei in 0..h.q() {
            let edge = h.edge(ei).to_vec();
            let ones: Vec<usize> = edge.iter().copied().filter(|&x| h.degree(x) == 1).collect();
            for (i, &u) in ones.iter().enumerate() {
                for &v in &ones[i + 1..] {
                    for (r, s) in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)] {
                        let Ok(shift) = path_shift(h, &edge, u, v, r, s) else {
                            continue;
                        };
                        ensure(shift.holds(), || {
                            format!(
                                "{} r={r} s={s}: {} vs {}",
                                text(h),
                                shift.p3_split,
                                shift.p3_merged
                            )
                        })?;
                        n += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{n} instances"))
}

fn reductions(hosts: &[Hypergraph], mode: Mode) -> Outcome {
    let mut steps = 0;
    for h in hosts {
        if h.m() == 2 && mode == Mode::PathWard && h.cycle_edges().is_some() {
            continue;
        }
        let trace = reduce_to_extremal(h, mode).map_err(|e| format!("{}: {e}", text(h)))?;
        ensure(trace.iter().all(|s| s.effect.holds()), || {
            format!("a step on {} is not monotone", text(h))
        })?;
        steps += trace.len();
    }
    Ok(format!("{} hosts reduced in {steps} steps", hosts.len()))
}

fn transforms(ctx: &mut Ctx, args: &FamilyArgs) -> Result<(), Failure> {
    let m = args.m.unwrap_or(3);
    let max_q = args.q.unwrap_or(5);
    let mut trees = Vec::new();
    for q in 1..=max_q {
        trees.extend(ctx.family(Family::Hypertrees { q }, m)?);
    }
    let mut cycles = Vec::new();
    for e in 3..=max_q {
        for f in 0..=max_q - e {
            cycles.extend(ctx.family(Family::Unicyclic { e, f }, m)?);
        }
    }
    let all: Vec<Hypergraph> = trees.iter().chain(&cycles).cloned().collect();
    let prefix = format!("transforms/m{m}/q{max_q}");
    for kind in ["T1", "T2", "T3", "T4"] {
        ctx.push(format!("{prefix}/{kind}-zagreb"), zagreb_sites(&all, kind));
    }
    if m >= 3 {
        let mut binary = Vec::new();
        for e in 3..=max_q.max(3) {
            for f in 2..=(max_q + 2).saturating_sub(e) {
                binary.extend(ctx.family(Family::UnicyclicBinary { e, f }, m)?);
            }
        }
        ctx.push(format!("{prefix}/T5-p3"), t5_sites(&binary));
        ctx.push(format!("{prefix}/path-shift-p3"), path_shifts(&all));
    }
    ctx.push(
        format!("{prefix}/reduce-star-ward"),
        reductions(&all, Mode::StarWard),
    );
    ctx.push(
        format!("{prefix}/reduce-path-ward"),
        reductions(&all, Mode::PathWard),
    );
    Ok(())
}

fn oracles(ctx: &mut Ctx, args: &FamilyArgs) -> Result<(), Failure> {
    let omega = omega_cycle(&[1, 1, 1]).map_err(err).and_then(|w| {
        ensure(w == BigRational::from_integer(4.into()), || {
            format!("got {w}")
        })
        .map(|_| "4".to_string())
    });
    ctx.push("oracles/omega-triangle".into(), omega);

    let anchors = (|| -> Outcome {
        let c = hypercycle(3, 3).map_err(err)?;
        let closed = [
            s_m(&c),
            unicyclic_s2m(&c).map_err(err)?,
            unicyclic_s3m(&c).map_err(err)?,
        ];
        let general = [3, 6, 9]
            .iter()
            .map(|&d| general_moment(&c, d).map_err(err))
            .collect::<Result<Vec<_>, _>>()?;
        let expected = [216, 540, 1836].map(BigInt::from);
        ensure(closed == expected && general[..] == expected[..], || {
            format!("closed {closed:?}, expansion {general:?}")
        })?;
        Ok("216 540 1836 from both engines".into())
    })();
    ctx.push("oracles/triangle-m3".into(), anchors);

    let max_q = args.q.unwrap_or(8);
    let mut trees = Vec::new();
    for q in 1..=max_q {
        trees.extend(ctx.family(Family::Hypertrees { q }, 2)?);
    }
    ctx.push(
        format!("oracles/m2/q{max_q}/trees"),
        oracle_agrees(&trees, &[2, 4, 6], tree_moment),
    );

    let mut cycles = Vec::new();
    for q in 3..=max_q {
        cycles.extend(ctx.family(Family::UnicyclicAll { q }, 2)?);
    }
    let unicyclic = (|| -> Outcome {
        let mut n = 0;
        for u in &cycles {
            let Girth::Finite(g) = u.girth().map_err(err)? else {
                return Err(format!("{} has no cycle", text(u)));
            };
            if g >= 5 {
                let (a, b) = (
                    unicyclic_s2m(u).map_err(err)?,
                    matrix_oracle(u, 4).map_err(err)?,
                );
                ensure(a == b, || format!("{} S4: {a} vs {b}", text(u)))?;
                n += 1;
            }
            if g == 3 || g == 5 || g >= 7 {
                let (a, b) = (
                    unicyclic_s3m(u).map_err(err)?,
                    matrix_oracle(u, 6).map_err(err)?,
                );
                ensure(a == b, || format!("{} S6: {a} vs {b}", text(u)))?;
                n += 1;
            }
        }
        let (t, c5) = (
            hypercycle(2, 3).map_err(err)?,
            hypercycle(2, 5).map_err(err)?,
        );
        ensure(unicyclic_s3m(&t).map_err(err)? == BigInt::from(66), || {
            "triangle S6 is not 66".into()
        })?;
        ensure(unicyclic_s2m(&c5).map_err(err)? == BigInt::from(30), || {
            "C5 S4 is not 30".into()
        })?;
        Ok(format!("{n} values agree; anchors 66 and 30"))
    })();
    ctx.push(format!("oracles/m2/q{max_q}/unicyclic"), unicyclic);

    let mut members = Vec::new();
    for q in 1..=5 {
        members.extend(ctx.family(Family::Hypertrees { q }, 3)?);
    }
    for e in 3..=5 {
        members.extend(ctx.family(Family::Unicyclic { e, f: 5 - e }, 3)?);
    }
    let zeros = (|| -> Outcome {
        for h in &members {
            let seq = moment_sequence(h, 9).map_err(err)?;
            for d in [1, 2, 4, 5, 7, 8] {
                ensure(seq.get(d) == Some(&BigInt::from(0)), || {
                    format!("{} S{d} is nonzero", text(h))
                })?;
            }
            let expected = BigInt::from(h.n()) * BigInt::from(2).pow((h.n() - 1) as u32);
            ensure(seq.get(0) == Some(&expected) && s0(h) == expected, || {
                format!("{} S0", text(h))
            })?;
        }
        Ok(format!("{} members", members.len()))
    })();
    ctx.push("oracles/m3/zero-pattern".into(), zeros);
    Ok(())
}

pub fn run(suite: Suite, args: &FamilyArgs, caps: &Caps) -> Result<Report, Failure> {
    let mut ctx = Ctx {
        caps,
        checks: Vec::new(),
    };
    let all = suite == Suite::All;
    // With every suite selected the per-suite parameters keep their defaults.
    let defaults = FamilyArgs::default();
    let scoped = if all { &defaults } else { args };
    if all || suite == Suite::Trees {
        trees(&mut ctx, scoped)?;
    }
    if all || suite == Suite::Unicyclic {
        unicyclic(&mut ctx, scoped)?;
    }
    if all || suite == Suite::Transforms {
        transforms(&mut ctx, scoped)?;
    }
    if all || suite == Suite::Oracles {
        oracles(&mut ctx, scoped)?;
    }
    let passed = ctx.checks.iter().filter(|c| c.passed).count();
    let suite_name = format!("{suite:?}").to_lowercase();
    let inputs = json!({
        "suite": suite_name,
        "m": scoped.m,
        "q": scoped.q,
        "e": scoped.e,
        "f": scoped.f,
        "caps": caps.to_string(),
    });
    let result = json!({ "checks": ctx.checks.len(), "passed": passed, "failed": ctx.checks.len() - passed });
    Ok(Report::new("verify", inputs, result).with_checks(ctx.checks))
}
