use std::io::Write;
use std::time::Instant;

use fracx_core::coloring::{
    lp_to_set_coloring, search_ab_coloring, search_set_coloring, verify_set_coloring,
    SearchOutcome, Verification,
};
use fracx_core::graph::{encode_graph6, enumerate_subcubic_trianglefree, Graph, VertexSet};
use fracx_core::lp::{chi_f_capped, solve_frac, DemandFunction, LpSolution};
use fracx_core::rational::{format_rational, parse_rational, Rational};
use fracx_core::structure::{demand_f_b, enumerate_nails, is_nail, weight_scores, DangerousKind};
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::input::{load_coloring, load_demands, parse_vertex_list, resolve_budget};
use crate::report::{render_report, vertex_list, RationalStr, Report, Status, VertexMap};
use crate::{Cli, CliError, Command, CommonArgs, EXIT_OK, EXIT_REJECT, EXIT_RESOURCE};

type Out<'a> = &'a mut dyn Write;

pub(crate) fn dispatch(
    cli: &Cli,
    env_budget: Option<&str>,
    out: Out,
    err: Out,
) -> Result<i32, CliError> {
    let common = &cli.common;
    match &cli.command {
        Command::Chif { graph, coloring } => {
            let (g, label) = graph.load()?;
            chif(&g, &label, *coloring, common, out, err)
        }
        Command::Feasible { graph, demands } => {
            let (g, label) = graph.load()?;
            let f = load_demands(demands, &g)?;
            feasible(&g, &label, &f, common, out, err)
        }
        Command::Verify {
            graph,
            coloring,
            demands,
        } => {
            let (g, label) = graph.load()?;
            let f = load_demands(demands, &g)?;
            let c = load_coloring(coloring)?;
            verify(&g, &label, &f, &c, out, err)
        }
        Command::Sweep {
            min_n,
            max_n,
            bound,
            nails,
        } => {
            let bound = parse_rational(bound).map_err(fracx_core::Error::from)?;
            sweep(*min_n, *max_n, &bound, *nails, common, out, err)
        }
        Command::NailCheck {
            graph,
            nail,
            search,
            colors,
            budget,
        } => {
            let (g, label) = graph.load()?;
            let budget = resolve_budget(*budget, env_budget)?;
            let search = search.then_some((*colors, budget));
            nail_check(&g, &label, nail.as_deref(), search, common, out, err)
        }
        Command::Search {
            graph,
            a,
            b,
            demands,
            n_colors,
            budget,
        } => {
            let (g, label) = graph.load()?;
            let budget = resolve_budget(*budget, env_budget)?;
            let target = match (a, b, demands, n_colors) {
                (Some(a), Some(b), None, None) => SearchTarget::Ab(*a, *b),
                (None, None, Some(d), Some(n)) => SearchTarget::Demands(load_demands(d, &g)?, *n),
                _ => {
                    return Err(CliError::Usage(
                        "search needs either --a and --b, or --demands and --N".into(),
                    ))
                }
            };
            search(&g, &label, &target, budget, common, out, err)
        }
        Command::Wv {
            graph,
            weights,
            seed,
        } => {
            let (g, label) = graph.load()?;
            let w = match (weights, seed) {
                (Some(path), None) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))?;
                    fracx_core::rational::parse_vertex_values(&text, g.n())
                        .map_err(fracx_core::Error::from)?
                }
                (None, Some(seed)) => random_weights(g.n(), *seed),
                _ => return Err(CliError::Usage("wv needs exactly one of --weights, --seed".into())),
            };
            wv(&g, &label, &w, out, err)
        }
    }
}

fn elapsed(start: Instant, common: &CommonArgs) -> u64 {
    if common.timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    }
}

/// Solution of the covering LP scaled to total weight one, so that it
/// certifies the uniform demand `1/value`.
fn normalized(sol: &LpSolution) -> LpSolution {
    LpSolution {
        value: Rational::one(),
        support: sol
            .support
            .iter()
            .map(|(s, w)| (*s, w / &sol.value))
            .collect(),
    }
}

fn chif(
    g: &Graph,
    label: &str,
    with_coloring: bool,
    common: &CommonArgs,
    out: Out,
    err: Out,
) -> Result<i32, CliError> {
    let start = Instant::now();
    let c = chi_f_capped(g, common.mis_cap)?;
    let coloring = if with_coloring {
        let f = DemandFunction::uniform(g.n(), c.value.recip())?;
        Some(lp_to_set_coloring(g, &f, &normalized(&c.primal))?)
    } else {
        None
    };
    let report = Report {
        chi_f: Some(c.value.clone()),
        primal: c.primal.support,
        dual: c.dual.y,
        coloring,
        elapsed_ms: elapsed(start, common),
        ..Report::for_graph(g)?
    };
    writeln!(out, "{}", render_report(&report))?;
    writeln!(err, "{label}: chi_f = {} (n={}, m={}, alpha={})", format_rational(&c.value), report.n, report.m, report.alpha)?;
    Ok(EXIT_OK)
}

fn feasible(
    g: &Graph,
    label: &str,
    f: &DemandFunction,
    common: &CommonArgs,
    out: Out,
    err: Out,
) -> Result<i32, CliError> {
    let start = Instant::now();
    let cert = solve_frac(g, f, common.mis_cap)?;
    let ok = cert.primal.value <= Rational::one();
    let coloring = if ok {
        Some(lp_to_set_coloring(g, f, &cert.primal)?)
    } else {
        None
    };
    let report = Report {
        chi_f: Some(cert.primal.value.clone()),
        primal: cert.primal.support,
        dual: cert.dual.y,
        coloring,
        status: if ok { Status::Ok } else { Status::Infeasible },
        elapsed_ms: elapsed(start, common),
        ..Report::for_graph(g)?
    };
    writeln!(out, "{}", render_report(&report))?;
    let verdict = if ok { "FEASIBLE" } else { "INFEASIBLE" };
    writeln!(err, "{label}: {verdict}, LP value {}", format_rational(&cert.primal.value))?;
    Ok(if ok { EXIT_OK } else { EXIT_REJECT })
}

fn verify(
    g: &Graph,
    label: &str,
    f: &DemandFunction,
    c: &fracx_core::coloring::SetColoring,
    out: Out,
    err: Out,
) -> Result<i32, CliError> {
    let verdict = verify_set_coloring(g, f, c)?;
    let violation = match &verdict {
        Verification::Accept => Value::Null,
        Verification::Reject(v) => Value::String(v.to_string()),
    };
    let word = if verdict.is_accept() { "ACCEPT" } else { "REJECT" };
    let line = json!({
        "graph": encode_graph6(g)?,
        "n": g.n(),
        "colors": c.n_colors(),
        "verdict": word,
        "violation": violation,
    });
    writeln!(out, "{line}")?;
    match &verdict {
        Verification::Accept => writeln!(err, "{label}: ACCEPT")?,
        Verification::Reject(v) => writeln!(err, "{label}: REJECT ({v})")?,
    }
    Ok(if verdict.is_accept() { EXIT_OK } else { EXIT_REJECT })
}

struct ClassResult {
    line: String,
    chi_f: Rational,
    nails_checked: usize,
    bad_nails: Vec<VertexSet>,
}

fn sweep_class(g: &Graph, nails: bool, common: &CommonArgs) -> Result<ClassResult, CliError> {
    let start = Instant::now();
    let c = chi_f_capped(g, common.mis_cap)?;
    let mut checked = 0;
    let mut bad = Vec::new();
    if nails {
        for b in enumerate_nails(g) {
            let f = demand_f_b(g, b)?;
            checked += 1;
            if solve_frac(g, &f, common.mis_cap)?.primal.value > Rational::one() {
                bad.push(b);
            }
        }
    }
    let report = Report {
        chi_f: Some(c.value.clone()),
        primal: c.primal.support,
        dual: c.dual.y,
        elapsed_ms: elapsed(start, common),
        ..Report::for_graph(g)?
    };
    Ok(ClassResult {
        line: render_report(&report),
        chi_f: c.value,
        nails_checked: checked,
        bad_nails: bad,
    })
}

fn sweep(
    min_n: usize,
    max_n: usize,
    bound: &Rational,
    nails: bool,
    common: &CommonArgs,
    out: Out,
    err: Out,
) -> Result<i32, CliError> {
    if min_n == 0 || min_n > max_n {
        return Err(CliError::Usage(format!("bad range {min_n}..={max_n}")));
    }
    let mut classes = serde_json::Map::new();
    let mut total = 0usize;
    let mut max_chi: Option<Rational> = None;
    let mut violations = 0usize;
    let mut nails_checked = 0usize;
    let mut nails_infeasible = 0usize;
    for n in min_n..=max_n {
        let graphs: Vec<Graph> = enumerate_subcubic_trianglefree(n)?.collect();
        let results: Vec<Result<ClassResult, CliError>> =
            graphs.par_iter().map(|g| sweep_class(g, nails, common)).collect();
        for (g, r) in graphs.iter().zip(results) {
            let r = r?;
            writeln!(out, "{}", r.line)?;
            if r.chi_f > *bound {
                violations += 1;
                writeln!(err, "{}: chi_f {} exceeds bound", encode_graph6(g)?, format_rational(&r.chi_f))?;
            }
            for b in &r.bad_nails {
                writeln!(err, "{}: nail {:?} not f_B-colorable", encode_graph6(g)?, vertex_list(*b))?;
            }
            nails_checked += r.nails_checked;
            nails_infeasible += r.bad_nails.len();
            if max_chi.as_ref().is_none_or(|m| r.chi_f > *m) {
                max_chi = Some(r.chi_f);
            }
        }
        classes.insert(n.to_string(), json!(graphs.len()));
        total += graphs.len();
    }
    let mut summary = serde_json::Map::new();
    summary.insert("min_n".into(), json!(min_n));
    summary.insert("max_n".into(), json!(max_n));
    summary.insert("classes".into(), Value::Object(classes));
    summary.insert("total".into(), json!(total));
    summary.insert("bound".into(), json!(format_rational(bound)));
    summary.insert("max_chi_f".into(), json!(max_chi.as_ref().map(format_rational)));
    summary.insert("violations".into(), json!(violations));
    if nails {
        summary.insert("nails_checked".into(), json!(nails_checked));
        summary.insert("nails_infeasible".into(), json!(nails_infeasible));
    }
    writeln!(out, "{}", json!({ "summary": summary }))?;
    writeln!(
        err,
        "{total} classes with {min_n} <= n <= {max_n}, max chi_f {}, {violations} above {}",
        max_chi.as_ref().map_or("-".into(), format_rational),
        format_rational(bound)
    )?;
    if nails {
        writeln!(err, "{nails_checked} nails checked, {nails_infeasible} not f_B-colorable")?;
    }
    Ok(if violations == 0 && nails_infeasible == 0 {
        EXIT_OK
    } else {
        EXIT_REJECT
    })
}

fn kind_name(k: DangerousKind) -> &'static str {
    match k {
        DangerousKind::C5 => "C5",
        DangerousKind::K4Prime => "K4'",
    }
}

/// Outcome of checking one candidate nail, as `(json, accepted, out_of_budget)`.
fn check_one_nail(
    g: &Graph,
    b: VertexSet,
    search: Option<(usize, u64)>,
    common: &CommonArgs,
) -> Result<(Value, bool, bool), CliError> {
    let report = is_nail(g, b)?;
    let occurrences: Vec<Value> = report
        .bad_occurrences
        .iter()
        .map(|o| {
            json!({
                "kind": kind_name(o.kind),
                "vertices": vertex_list(o.vertices),
                "special": vertex_list(o.special),
            })
        })
        .collect();
    let mut line = serde_json::Map::new();
    line.insert("graph".into(), json!(encode_graph6(g)?));
    line.insert("b".into(), json!(vertex_list(b)));
    line.insert("is_nail".into(), json!(report.is_nail));
    line.insert("degree_violations".into(), json!(report.degree_violations));
    line.insert("bad_occurrences".into(), Value::Array(occurrences));
    let mut accepted = report.is_nail;
    let mut out_of_budget = false;
    let (mut feasible, mut value, mut coloring, mut status) =
        (Value::Null, Value::Null, Value::Null, Value::Null);
    if report.is_nail {
        let f = demand_f_b(g, b)?;
        let cert = solve_frac(g, &f, common.mis_cap)?;
        let ok = cert.primal.value <= Rational::one();
        accepted = ok;
        feasible = json!(ok);
        value = json!(format_rational(&cert.primal.value));
        if let Some((n, budget)) = search {
            let outcome = search_set_coloring(g, &f, n, budget)?;
            let (word, found) = match &outcome {
                SearchOutcome::Found(c) => {
                    let verified = verify_set_coloring(g, &f, c)?.is_accept();
                    coloring = json!(c.to_string());
                    (if verified { "OK" } else { "ERROR" }, verified)
                }
                SearchOutcome::Exhausted => ("INFEASIBLE", false),
                SearchOutcome::BudgetExceeded { .. } => {
                    out_of_budget = true;
                    ("BUDGET", false)
                }
            };
            status = json!(word);
            accepted &= found;
        }
    }
    line.insert("feasible".into(), feasible);
    line.insert("value".into(), value);
    if search.is_some() {
        line.insert("search".into(), status);
        line.insert("coloring".into(), coloring);
    }
    Ok((Value::Object(line), accepted, out_of_budget))
}

fn nail_check(
    g: &Graph,
    label: &str,
    nail: Option<&str>,
    search: Option<(usize, u64)>,
    common: &CommonArgs,
    out: Out,
    err: Out,
) -> Result<i32, CliError> {
    let candidates: Vec<VertexSet> = match nail {
        Some(text) => {
            let mut set = 0u64;
            for v in parse_vertex_list(text)? {
                if v >= g.n() {
                    return Err(fracx_core::Error::VertexOutOfRange { vertex: v, n: g.n() }.into());
                }
                set |= 1 << v;
            }
            vec![set]
        }
        None => enumerate_nails(g),
    };
    let mut rejected = 0;
    let mut budget_hit = false;
    for &b in &candidates {
        let (line, accepted, out_of_budget) = check_one_nail(g, b, search, common)?;
        writeln!(out, "{line}")?;
        rejected += usize::from(!accepted);
        budget_hit |= out_of_budget;
    }
    writeln!(err, "{label}: {} candidate set(s), {rejected} rejected", candidates.len())?;
    Ok(if budget_hit {
        EXIT_RESOURCE
    } else if rejected > 0 {
        EXIT_REJECT
    } else {
        EXIT_OK
    })
}

enum SearchTarget {
    Ab(usize, usize),
    Demands(DemandFunction, usize),
}

fn search(
    g: &Graph,
    label: &str,
    target: &SearchTarget,
    budget: u64,
    common: &CommonArgs,
    out: Out,
    err: Out,
) -> Result<i32, CliError> {
    let start = Instant::now();
    let outcome = match target {
        SearchTarget::Ab(a, b) => search_ab_coloring(g, *a, *b, budget)?,
        SearchTarget::Demands(f, n) => search_set_coloring(g, f, *n, budget)?,
    };
    let (status, code, note) = match &outcome {
        SearchOutcome::Found(_) => (Status::Ok, EXIT_OK, "found".to_string()),
        SearchOutcome::Exhausted => (Status::Infeasible, EXIT_REJECT, "none exists".to_string()),
        SearchOutcome::BudgetExceeded { nodes } => {
            (Status::Budget, EXIT_RESOURCE, format!("budget exhausted after {nodes} nodes"))
        }
    };
    let report = Report {
        coloring: outcome.coloring().cloned(),
        status,
        elapsed_ms: elapsed(start, common),
        ..Report::for_graph(g)?
    };
    writeln!(out, "{}", render_report(&report))?;
    let what = match target {
        SearchTarget::Ab(a, b) => format!("({a}:{b})-coloring"),
        SearchTarget::Demands(_, n) => format!("(f, {n})-coloring"),
    };
    writeln!(err, "{label}: {what}: {note}")?;
    Ok(code)
}

fn random_weights(n: usize, seed: u64) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let p: i64 = rng.gen_range(-20..=20);
            let q: i64 = rng.gen_range(1..=9);
            fracx_core::rational::ratio(p, q)
        })
        .collect()
}

fn wv(g: &Graph, label: &str, w: &[Rational], out: Out, err: Out) -> Result<i32, CliError> {
    let ws = weight_scores(g, w)?;
    let line = json!({
        "graph": encode_graph6(g)?,
        "weights": VertexMap(w),
        "scores": VertexMap(&ws.scores),
        "total": RationalStr(&ws.total),
        "argmax": ws.argmax,
    });
    writeln!(out, "{line}")?;
    writeln!(
        err,
        "{label}: total {}, argmax {}",
        format_rational(&ws.total),
        ws.argmax.map_or("-".into(), |v| v.to_string())
    )?;
    Ok(EXIT_OK)
}
