use std::collections::BTreeSet;

use klmov_core::characters::brauer_table;
use klmov_core::combinatorics::{MultiPartition, Partition};
use klmov_core::lmov::{check_conjecture, degree_check, genus_label, ConjectureReport, InvariantSource};
use klmov_core::torus::{ctilde, ctilde_columns, TorusLinkSpec};
use klmov_core::typeb::{sb_closed_form, sb_in_pb};
use klmov_core::verify::{self, is_known_discrepancy, CriterionReport};
use klmov_core::{bmw, rmatrix};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::render::{emit, table, Rendered};
use crate::{Cli, Command, Failure, RCheck, Source, Suite};

pub fn run(cli: &Cli) -> Result<(), Failure> {
    let (rendered, ok) = match &cli.command {
        Command::CharTable { n } => (char_table(*n)?, true),
        Command::Sb { partition, closed, .. } => (sb(partition, *closed)?, true),
        Command::Ctilde { colors, r } => (ctilde_table(colors, *r)?, true),
        Command::Invariant { source, colors } => (invariant(source, colors)?, true),
        Command::Lmov { source, mu, no_antisym } => lmov(source, mu, !*no_antisym)?,
        Command::Degree { source, mu } => degree(source, mu)?,
        Command::Bmw { .. } => named_checks("bmw", json!({}), bmw::relation_checks()?),
        Command::Rmatrix { n, check } => rmatrix_checks(*n, *check)?,
        Command::Verify { suite, only, seed } => verify_suite(*suite, only, *seed)?,
    };
    emit(&rendered, cli.format, cli.out.as_deref())?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Finding)
    }
}

fn parse_source(s: &Source) -> Result<InvariantSource, Failure> {
    match (&s.torus, s.unlink) {
        (Some(t), None) => Ok(InvariantSource::Torus(t.parse::<TorusLinkSpec>()?)),
        (None, Some(l)) if l > 0 => Ok(InvariantSource::Unlink(l)),
        (None, Some(_)) => Err(Failure::Usage("--unlink needs at least one component".into())),
        _ => Err(Failure::Usage("give exactly one of --torus or --unlink".into())),
    }
}

fn paren(p: &Partition) -> String {
    format!("({p})")
}

fn char_table(n: usize) -> Result<Rendered, Failure> {
    if n == 0 {
        return Err(Failure::Usage("--n must be positive".into()));
    }
    klmov_core::config::check(klmov_core::config::Bound::Partitions, n)?;
    let t = brauer_table(n);
    let mut header = vec!["χ".to_string()];
    header.extend(t.classes.iter().map(paren));
    let rows: Vec<Vec<String>> = t
        .labels
        .iter()
        .zip(&t.values)
        .map(|(l, vals)| std::iter::once(paren(l)).chain(vals.iter().map(|v| v.to_string())).collect())
        .collect();
    let mut csv = Vec::new();
    for (l, vals) in t.labels.iter().zip(&t.values) {
        for (c, v) in t.classes.iter().zip(vals) {
            csv.push(vec![l.to_string(), c.to_string(), v.to_string()]);
        }
    }
    let j = json!({
        "n": n,
        "labels": t.labels.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "classes": t.classes.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "values": t.values,
    });
    Ok(Rendered::new("char-table", table(&header, &rows), j).with_csv(vec!["label", "class", "value"], csv))
}

fn sb(partition: &str, closed: bool) -> Result<Rendered, Failure> {
    let a: Partition = partition.parse()?;
    if closed {
        let v = sb_closed_form(&a).to_string();
        let j = json!({"partition": a.to_string(), "closed": v});
        return Ok(Rendered::new("sb", format!("sb_({a}) = {v}"), j)
            .with_csv(vec!["partition", "closed"], vec![vec![a.to_string(), v]]));
    }
    let x = sb_in_pb(&a)?;
    let terms: Vec<(String, String)> = x.terms().map(|(p, c)| (p.to_string(), c.to_string())).collect();
    let j = json!({
        "partition": a.to_string(),
        "basis": "pb",
        "terms": terms.iter().map(|(p, c)| json!({"partition": p, "coeff": c})).collect::<Vec<_>>(),
    });
    let csv = terms.iter().map(|(p, c)| vec![p.clone(), c.clone()]).collect();
    Ok(Rendered::new("sb", format!("sb_({a}) = {x}"), j).with_csv(vec!["partition", "coeff"], csv))
}

fn colors_label(m: &MultiPartition) -> String {
    m.components().iter().map(paren).collect::<Vec<_>>().join(",")
}

fn ctilde_table(colors: &str, r: u32) -> Result<Rendered, Failure> {
    let colors: MultiPartition = colors.parse()?;
    let t = ctilde(&colors, r)?;
    let columns = ctilde_columns(t.degree(), None);
    let mut header = vec!["c̃".to_string()];
    header.extend(columns.iter().map(paren));
    let mut row = vec![colors_label(&colors)];
    row.extend(t.row_cells(&columns));
    let entries: Vec<(String, String)> = t.entries.iter().map(|(l, c)| (l.to_string(), c.to_string())).collect();
    let j = json!({
        "colors": colors.to_string(),
        "r": r,
        "entries": entries.iter().map(|(l, c)| json!({"lambda": l, "c": c})).collect::<Vec<_>>(),
    });
    let csv = entries.iter().map(|(l, c)| vec![l.clone(), c.clone()]).collect();
    Ok(Rendered::new("ctilde", table(&header, &[row]), j).with_csv(vec!["lambda", "c"], csv))
}

fn invariant(source: &Source, colors: &str) -> Result<Rendered, Failure> {
    let src = parse_source(source)?;
    let colors: MultiPartition = colors.parse()?;
    let w = src.invariant(&colors)?.to_string();
    let j = json!({"link": src.to_string(), "colors": colors.to_string(), "value": w});
    Ok(Rendered::new("invariant", format!("W_{{{colors}}}({src}) = {w}"), j)
        .with_csv(vec!["link", "colors", "value"], vec![vec![src.to_string(), colors.to_string(), w]]))
}

fn n_text(rep: &ConjectureReport) -> String {
    let head = format!("{} μ={}", rep.src, rep.mu);
    let Some(tab) = &rep.table else {
        let why = rep.finding.as_ref().map(|e| e.to_string()).unwrap_or_default();
        return format!("{head}: NOT integral\n  {why}");
    };
    if tab.is_empty() {
        return format!("{head}: integral, all N vanish");
    }
    let betas: BTreeSet<i64> = tab.entries.keys().map(|(_, b)| *b).collect();
    let gs: BTreeSet<u32> = tab.entries.keys().map(|(g, _)| *g).collect();
    let mut header = vec!["g \\ β".to_string()];
    header.extend(betas.iter().map(|b| b.to_string()));
    let rows: Vec<Vec<String>> = gs
        .iter()
        .map(|&g| std::iter::once(genus_label(g)).chain(betas.iter().map(|&b| tab.get(g, b).to_string())).collect())
        .collect();
    format!("{head}: integral\n{}", table(&header, &rows))
}

fn n_json(rep: &ConjectureReport) -> Value {
    let entries: Vec<Value> = rep
        .table
        .iter()
        .flat_map(|t| t.entries.iter())
        .map(|((g, b), n)| json!({"g": genus_label(*g), "beta": b, "N": n.to_string()}))
        .collect();
    let mut j = json!({
        "link": rep.src.to_string(),
        "mu": rep.mu.to_string(),
        "antisymmetrize": rep.antisymmetrize,
        "integral": rep.integral(),
        "entries": entries,
    });
    if let Some(f) = &rep.finding {
        j["finding"] = json!(f.to_string());
    }
    j
}

fn lmov(source: &Source, mus: &[String], antisym: bool) -> Result<(Rendered, bool), Failure> {
    let src = parse_source(source)?;
    let mus: Vec<MultiPartition> = mus.iter().map(|m| m.parse()).collect::<Result<_, _>>()?;
    let reports: Vec<ConjectureReport> =
        mus.par_iter().map(|m| check_conjecture(&src, m, antisym)).collect::<Result<_, _>>()?;
    let ok = reports.iter().all(|r| r.integral());
    let text = reports.iter().map(n_text).collect::<Vec<_>>().join("\n\n");
    let single = reports.len() == 1;
    let j =
        if single { n_json(&reports[0]) } else { json!({"results": reports.iter().map(n_json).collect::<Vec<_>>()}) };
    let mut csv = Vec::new();
    for r in &reports {
        for ((g, b), n) in r.table.iter().flat_map(|t| t.entries.iter()) {
            let mut row = vec![genus_label(*g), b.to_string(), n.to_string()];
            if !single {
                row.insert(0, r.mu.to_string());
            }
            csv.push(row);
        }
    }
    let header = if single { vec!["g", "beta", "N"] } else { vec!["mu", "g", "beta", "N"] };
    Ok((Rendered::new("lmov", text, j).with_csv(header, csv), ok))
}

fn degree(source: &Source, mu: &str) -> Result<(Rendered, bool), Failure> {
    let src = parse_source(source)?;
    let mu: MultiPartition = mu.parse()?;
    let rep = degree_check(&src, &mu)?;
    let v = rep.valuation.map_or("none (F = 0)".to_string(), |v| v.to_string());
    let text = format!(
        "{src} μ={mu}: ord_(q=1) F = {v}, bound ℓ-2 = {}: {}",
        rep.bound,
        if rep.pass { "pass" } else { "FAIL" }
    );
    let j = json!({"link": src.to_string(), "mu": mu.to_string(), "valuation": rep.valuation, "bound": rep.bound, "pass": rep.pass});
    let csv =
        vec![vec![rep.valuation.map_or(String::new(), |v| v.to_string()), rep.bound.to_string(), rep.pass.to_string()]];
    Ok((Rendered::new("degree", text, j).with_csv(vec!["valuation", "bound", "pass"], csv), rep.pass))
}

fn named_checks(kind: &str, mut base: Value, checks: Vec<(String, bool)>) -> (Rendered, bool) {
    let ok = checks.iter().all(|(_, p)| *p);
    let text =
        checks.iter().map(|(n, p)| format!("{} {n}", if *p { "PASS" } else { "FAIL" })).collect::<Vec<_>>().join("\n");
    base["passed"] = json!(ok);
    base["checks"] = json!(checks.iter().map(|(n, p)| json!({"name": n, "pass": p})).collect::<Vec<_>>());
    let csv = checks.iter().map(|(n, p)| vec![n.clone(), p.to_string()]).collect();
    (Rendered::new(kind, text, base).with_csv(vec!["check", "pass"], csv), ok)
}

fn rmatrix_checks(n: usize, which: RCheck) -> Result<(Rendered, bool), Failure> {
    if n == 0 {
        return Err(Failure::Usage("--N must be positive".into()));
    }
    let checks = match which {
        RCheck::Ribbon => vec![("θ_V = q^{2N}".to_string(), rmatrix::ribbon_check(n)?)],
        RCheck::All => rmatrix::bmw_relations(n)?,
        RCheck::Braid => rmatrix::bmw_relations(n)?.into_iter().filter(|(name, _)| name.contains("braid")).collect(),
        RCheck::Bmw => rmatrix::bmw_relations(n)?
            .into_iter()
            .filter(|(name, _)| !name.contains("braid") && !name.contains("θ"))
            .collect(),
    };
    Ok(named_checks("rmatrix", json!({"N": n}), checks))
}

fn criterion_json(r: &CriterionReport) -> Value {
    let mut j = serde_json::to_value(r).unwrap_or(Value::Null);
    j["passed"] = json!(r.passed());
    j
}

fn verify_suite(suite: Suite, only: &[String], seed: u64) -> Result<(Rendered, bool), Failure> {
    let ids: Vec<u32> = match suite {
        Suite::Properties if !only.is_empty() => {
            return Err(Failure::Usage("--only applies to the reference suite".into()));
        }
        Suite::Properties => vec![verify::PROPERTY_ID],
        Suite::Paper if only.is_empty() => verify::REFERENCE_IDS.collect(),
        Suite::Paper => only
            .iter()
            .map(|k| verify::lookup(k).ok_or_else(|| Failure::Usage(format!("unknown criterion {k:?}"))))
            .collect::<Result<_, _>>()?,
    };
    let reports: Vec<CriterionReport> = ids.par_iter().map(|&id| verify::run(id, seed)).collect::<Result<_, _>>()?;
    let ok = reports.iter().all(|r| r.passed());
    let mut lines = Vec::new();
    let mut csv = Vec::new();
    for r in &reports {
        let n = r.checks.len();
        let bad = r.failures().count();
        lines.push(format!(
            "{} {:>2} {}: {} ({}/{n} checks)",
            if r.passed() { "PASS" } else { "FAIL" },
            r.id,
            r.key,
            r.title,
            n - bad
        ));
        for c in r.failures() {
            let tag = if is_known_discrepancy(&c.name) { " [known discrepancy]" } else { "" };
            lines.push(format!(
                "       - {}{tag}{}",
                c.name,
                c.detail.as_deref().map(|d| format!(": {d}")).unwrap_or_default()
            ));
        }
        for c in &r.checks {
            csv.push(vec![
                r.id.to_string(),
                r.key.to_string(),
                c.name.clone(),
                c.pass.to_string(),
                c.detail.clone().unwrap_or_default(),
            ]);
        }
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    lines.push(format!("{passed} of {} criteria passed", reports.len()));
    let suite_name = match suite {
        Suite::Paper => "paper",
        Suite::Properties => "properties",
    };
    let j = json!({
        "suite": suite_name,
        "seed": seed,
        "passed": ok,
        "criteria": reports.iter().map(criterion_json).collect::<Vec<_>>(),
    });
    Ok((
        Rendered::new("verify", lines.join("\n"), j).with_csv(vec!["criterion", "key", "check", "pass", "detail"], csv),
        ok,
    ))
}
