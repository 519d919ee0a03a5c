use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::io::Read;

use anyhow::{anyhow, bail, Context, Result};
use serde::Serialize;
use serde_json::json;
use typeb_cells::analysis::{
    combinatorial_cells, predicted_module, regime, run_verification, CellKind, Check,
    CombinatorialCell, VerificationReport, VerifyOptions,
};
use typeb_cells::characters::CharacterTable;
use typeb_cells::cycles::{cycles, move_through_set, orbit, Cycle};
use typeb_cells::hecke::{cache, CellPartition, Side, WeightFunction};
use typeb_cells::insertion::{g_r, g_r_trace};
use typeb_cells::partition::{rank_and_core, Partition};
use typeb_cells::perm::SignedPermutation;
use typeb_cells::report::{default_sweep, worked_examples};
use typeb_cells::symbols::{
    bipartition_to_partition, partition_to_bipartition, partition_to_symbol, sign_on_bipartition,
    WeightParams,
};
use typeb_cells::tableau::{enumerate_all_tableaux, enumerate_tableaux, DominoTableau, TableauJson};

use crate::{Cli, Command, Format, Global, Kind, TableauInput, VerifyWhat, Which};

/// Hard ceiling for `--max-n-kl`.
const KL_CEILING: usize = 5;

/// Runs one command. `Ok(false)` means a verification mismatch.
pub fn run(cli: &Cli) -> Result<bool> {
    let g = &cli.global;
    if g.max_n_kl > KL_CEILING {
        bail!("--max-n-kl {} exceeds the ceiling {}", g.max_n_kl, KL_CEILING);
    }
    let mut out = String::new();
    let passed = match &cli.command {
        Command::Rank { parts } => rank(g, parts, &mut out)?,
        Command::Rs { rank, word, trace } => rs(g, *rank, word, *trace, &mut out)?,
        Command::Tableaux { n, rank, shape, count } => {
            tableaux(g, *n, *rank, shape.as_deref(), *count, &mut out)?
        }
        Command::Cycles { input } => show_cycles(g, input, &mut out)?,
        Command::Mt { input, labels, orbit } => mt(g, input, labels, *orbit, &mut out)?,
        Command::Symbols { parts, weights } => symbols(g, parts, weights.a, weights.b, &mut out)?,
        Command::CellsComb { n, weights, rank, kind } => {
            cells_comb(g, *n, weights.a, weights.b, *rank, *kind, &mut out)?
        }
        Command::CellsKl { n, weights, side } => cells_kl(g, *n, weights.a, weights.b, side, &mut out)?,
        Command::Characters { n } => characters(g, *n, &mut out)?,
        Command::Verify { check, n, weights } => verify(g, *check, *n, weights.a, weights.b, &mut out)?,
        Command::Report { n, weights } => report(g, n, weights, &mut out)?,
    };
    match &g.output {
        Some(path) => fs::write(path, &out).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{}", out),
    }
    Ok(passed)
}

fn verify_options(g: &Global) -> VerifyOptions {
    VerifyOptions {
        cache_dir: (!g.no_cache).then(|| g.cache_dir.clone()),
        max_n_kl: g.max_n_kl,
        max_n_asymptotic: g.max_n_asymptotic,
        timings: g.timings,
    }
}

fn json_line<T: Serialize>(out: &mut String, v: &T) -> Result<()> {
    out.push_str(&serde_json::to_string_pretty(v)?);
    out.push('\n');
    Ok(())
}

fn no_csv(g: &Global, what: &str) -> Result<()> {
    if g.format == Format::Csv {
        bail!("{} has no CSV output", what);
    }
    Ok(())
}

fn parse_partition(parts: &[String]) -> Result<Partition> {
    parts
        .join(",")
        .parse()
        .map_err(|e| anyhow!("{}", e))
}

/// `[4,3,3,1]`, the same as the JSON form.
fn brackets(p: &Partition) -> String {
    serde_json::to_string(p.parts()).unwrap()
}

fn render(t: &DominoTableau) -> String {
    if t.shape().is_empty() {
        "(empty)\n".into()
    } else {
        t.render()
    }
}

fn rank(g: &Global, parts: &[String], out: &mut String) -> Result<bool> {
    let p = parse_partition(parts)?;
    let d = rank_and_core(&p);
    match g.format {
        Format::Text => writeln!(out, "rank {}, core {}", d.rank, brackets(&d.core))?,
        Format::Json => json_line(out, &d)?,
        Format::Csv => {
            writeln!(out, "partition,rank,core,dominoes")?;
            writeln!(out, "\"{}\",{},\"{}\",{}", brackets(&p), d.rank, brackets(&d.core), p.size() / 2 - d.core.size() / 2)?;
        }
    }
    Ok(true)
}

fn parse_word(word: &str) -> Result<SignedPermutation> {
    word.parse().map_err(|e| anyhow!("{}", e))
}

fn rs(g: &Global, r: usize, word: &str, trace: bool, out: &mut String) -> Result<bool> {
    no_csv(g, "rs")?;
    let w = parse_word(word)?;
    if trace {
        let steps = g_r_trace(&w, r).map_err(|e| anyhow!("{}", e))?;
        json_line(out, &steps)?;
        return Ok(true);
    }
    let pair = g_r(&w, r);
    match g.format {
        Format::Json => json_line(
            out,
            &json!({"word": w, "rank": r, "insertion": pair.left, "recording": pair.right}),
        )?,
        _ => {
            writeln!(out, "w = [{}], r = {}", w, r)?;
            writeln!(out, "insertion:")?;
            out.push_str(&render(&pair.left));
            writeln!(out, "recording:")?;
            out.push_str(&render(&pair.right));
        }
    }
    Ok(true)
}

fn tableaux(
    g: &Global,
    n: usize,
    r: usize,
    shape: Option<&str>,
    count: bool,
    out: &mut String,
) -> Result<bool> {
    no_csv(g, "tableaux")?;
    let ts = match shape {
        Some(s) => {
            let p: Partition = s.parse().map_err(|e| anyhow!("{}", e))?;
            enumerate_tableaux(&p)
        }
        None => enumerate_all_tableaux(n, r),
    };
    match (g.format, count) {
        (Format::Json, true) => json_line(out, &json!({"count": ts.len()}))?,
        (Format::Json, false) => json_line(out, &ts)?,
        (_, true) => writeln!(out, "{}", ts.len())?,
        (_, false) => {
            for (i, t) in ts.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                out.push_str(&render(t));
            }
        }
    }
    Ok(true)
}

fn read_tableau(input: &TableauInput) -> Result<DominoTableau> {
    if let Some(path) = &input.tableau {
        let text = if path.as_os_str() == "-" {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        } else {
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        };
        let j: TableauJson = serde_json::from_str(&text).context("tableau JSON")?;
        return DominoTableau::from_json(&j).map_err(|e| anyhow!("{}", e));
    }
    let word = input
        .word
        .as_deref()
        .ok_or_else(|| anyhow!("give --tableau or --word"))?;
    let pair = g_r(&parse_word(word)?, input.rank);
    Ok(match input.side {
        Which::Left => pair.left,
        Which::Right => pair.right,
    })
}

fn square(s: Option<(usize, usize)>) -> String {
    s.map_or("-".into(), |(i, j)| format!("({},{})", i, j))
}

fn cycle_line(c: &Cycle) -> String {
    let labels: Vec<String> = c.labels.iter().map(u32::to_string).collect();
    let kind = if !c.is_open() {
        "closed"
    } else if c.core_open {
        "core-open"
    } else {
        "open"
    };
    format!(
        "{{{}}} {} remove {} add {}",
        labels.join(","),
        kind,
        square(c.s_b),
        square(c.s_f)
    )
}

fn show_cycles(g: &Global, input: &TableauInput, out: &mut String) -> Result<bool> {
    let t = read_tableau(input)?;
    let cs = cycles(&t);
    match g.format {
        Format::Json => json_line(out, &json!({"tableau": t, "cycles": cs}))?,
        Format::Csv => {
            writeln!(out, "labels,open,core_open,s_b,s_f")?;
            for c in &cs {
                let labels: Vec<String> = c.labels.iter().map(u32::to_string).collect();
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    labels.join(" "),
                    c.is_open(),
                    c.core_open,
                    square(c.s_b),
                    square(c.s_f)
                )?;
            }
        }
        Format::Text => {
            out.push_str(&render(&t));
            for c in &cs {
                writeln!(out, "{}", cycle_line(c))?;
            }
        }
    }
    Ok(true)
}

fn mt(g: &Global, input: &TableauInput, labels: &[u32], show_orbit: bool, out: &mut String) -> Result<bool> {
    no_csv(g, "mt")?;
    let t = read_tableau(input)?;
    let images = if show_orbit {
        orbit(&t)
    } else {
        let cs = cycles(&t);
        let mut chosen: Vec<Cycle> = Vec::new();
        for &l in labels {
            let c = cs
                .iter()
                .find(|c| c.labels.contains(&l))
                .ok_or_else(|| anyhow!("label {} is not in the tableau", l))?;
            if !chosen.contains(c) {
                chosen.push(c.clone());
            }
        }
        vec![move_through_set(&t, &chosen).map_err(|e| anyhow!("{}", e))?]
    };
    match g.format {
        Format::Json if show_orbit => json_line(out, &images)?,
        Format::Json => json_line(out, &images[0])?,
        _ => {
            for (i, u) in images.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                out.push_str(&render(u));
            }
        }
    }
    Ok(true)
}

fn weight_params(a: u32, b: u32) -> Result<WeightParams> {
    WeightParams::new(a, b).map_err(|e| anyhow!("{}", e))
}

fn symbols(g: &Global, parts: &[String], a: u32, b: u32, out: &mut String) -> Result<bool> {
    no_csv(g, "symbols")?;
    let p = parse_partition(parts)?;
    let wp = weight_params(a, b)?;
    let r = rank_and_core(&p).rank;
    let sym = partition_to_symbol(&p, wp.epsilon);
    let bp = partition_to_bipartition(&p);
    let signed = bipartition_to_partition(&sign_on_bipartition(&bp), r);
    match g.format {
        Format::Json => json_line(
            out,
            &json!({
                "partition": p,
                "rank": r,
                "epsilon": wp.epsilon.to_string(),
                "symbol": sym,
                "defect": sym.defect(),
                "bipartition": bp,
                "sign": signed,
            }),
        )?,
        _ => {
            writeln!(out, "partition   {}", brackets(&p))?;
            writeln!(out, "rank        {}", r)?;
            writeln!(out, "symbol      {}  (eps {}, defect {})", sym.render(), wp.epsilon, sym.defect())?;
            writeln!(out, "bipartition {}", bp)?;
            writeln!(out, "sign        {}", brackets(&signed))?;
        }
    }
    Ok(true)
}

fn perms(v: &[SignedPermutation]) -> String {
    v.iter().map(|w| format!("[{}]", w)).collect::<Vec<_>>().join(" ")
}

fn cells_comb(
    g: &Global,
    n: usize,
    a: u32,
    b: u32,
    rank: Option<usize>,
    kind: Option<Kind>,
    out: &mut String,
) -> Result<bool> {
    let wp = weight_params(a, b)?;
    let (k0, r0) = regime(&wp);
    let r = rank.unwrap_or(r0);
    let kind = match kind {
        Some(Kind::Irreducible) => CellKind::Irreducible,
        Some(Kind::Reducible) => CellKind::Reducible,
        None => k0,
    };
    let cells = combinatorial_cells(n, r, kind);
    match g.format {
        Format::Json => json_line(out, &json!({"n": n, "rank": r, "kind": kind, "cells": cells}))?,
        Format::Csv => {
            writeln!(out, "cell,element")?;
            for (i, c) in cells.iter().enumerate() {
                for w in &c.members {
                    writeln!(out, "{},{}", i, w)?;
                }
            }
        }
        Format::Text => {
            writeln!(out, "n = {}, rank {}, {:?}, {} cells", n, r, kind, cells.len())?;
            for c in &cells {
                writeln!(out, "{}  {}", module_text(c), perms(&c.members))?;
            }
        }
    }
    Ok(true)
}

fn module_text(c: &CombinatorialCell) -> String {
    let shapes: Vec<String> = predicted_module(c).iter().map(brackets).collect();
    shapes.join("+")
}

fn cells_kl(g: &Global, n: usize, a: u32, b: u32, side: &str, out: &mut String) -> Result<bool> {
    let side: Side = side.parse().map_err(|e| anyhow!("{}", e))?;
    let wf = WeightFunction::new(a, b).map_err(|e| anyhow!("{}", e))?;
    let opts = verify_options(g);
    let table = cache::load_or_compute(opts.cache_dir.as_deref(), n, wf, g.max_n_kl)
        .map_err(|e| anyhow!("{}", e))?;
    let mut blocks = CellPartition::compute(&table, side).blocks(&table);
    blocks.sort_by(|x, y| x[0].cmp(&y[0]));
    match g.format {
        Format::Json => json_line(
            out,
            &json!({"n": n, "a": a, "b": b, "side": side.to_string(), "cells": blocks}),
        )?,
        Format::Csv => {
            writeln!(out, "cell,element")?;
            for (i, c) in blocks.iter().enumerate() {
                for w in c {
                    writeln!(out, "{},{}", i, w)?;
                }
            }
        }
        Format::Text => {
            writeln!(out, "n = {}, a = {}, b = {}, {} {} cells", n, a, b, blocks.len(), side)?;
            for c in &blocks {
                writeln!(out, "{}", perms(c))?;
            }
        }
    }
    Ok(true)
}

fn characters(g: &Global, n: usize, out: &mut String) -> Result<bool> {
    let ct = CharacterTable::new(n).map_err(|e| anyhow!("{}", e))?;
    match g.format {
        Format::Json => json_line(out, &ct)?,
        _ => out.push_str(&ct.to_csv()),
    }
    Ok(true)
}

fn checks(what: VerifyWhat) -> Vec<Check> {
    match what {
        VerifyWhat::Conjecture => vec![Check::Conjecture],
        VerifyWhat::Modules => vec![Check::Modules],
        VerifyWhat::Hom => vec![Check::Hom],
        VerifyWhat::Properties => vec![Check::Properties],
        VerifyWhat::All => Check::ALL.to_vec(),
    }
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn report_text(r: &VerificationReport, out: &mut String) -> Result<()> {
    let p = &r.params;
    writeln!(out, "n = {}, a = {}, b = {} (s = {}, r = {}, eps = {})", p.n, p.a, p.b, p.s, p.r, p.epsilon)?;
    if let Some(c) = &r.conjecture {
        writeln!(
            out,
            "  conjecture  {}  {} Hecke cells, {} combinatorial cells",
            pass(c.passed),
            c.hecke_cells,
            c.combinatorial_cells
        )?;
        if let Some(m) = &c.mismatch {
            writeln!(out, "    mismatch: [{}] and [{}]", m.w, m.w2)?;
        }
    }
    if let Some(m) = &r.modules {
        writeln!(out, "  modules     {}  {} cells", pass(m.passed), m.cells.len())?;
    }
    if let Some(h) = &r.hom {
        writeln!(out, "  hom         {}  total {} of {}", pass(h.passed), h.total, h.group_order)?;
    }
    if let Some(pr) = &r.properties {
        let failed: Vec<String> = pr
            .results
            .iter()
            .filter(|x| !x.passed)
            .map(|x| x.property.to_string())
            .collect();
        let status = match (pr.passed, pr.gating) {
            (true, _) => "pass",
            (false, true) => "FAIL",
            (false, false) => "diagnostic",
        };
        if failed.is_empty() {
            writeln!(out, "  properties  {}", status)?;
        } else {
            writeln!(out, "  properties  {}  failing {}", status, failed.join(","))?;
        }
    }
    if let Some(ms) = r.timings.table_ms {
        writeln!(out, "  table {} ms, checks {} ms", ms, r.timings.checks_ms.unwrap_or(0))?;
    }
    Ok(())
}

fn emit_reports(g: &Global, reports: &[VerificationReport], out: &mut String) -> Result<()> {
    match g.format {
        Format::Json if reports.len() == 1 => json_line(out, &reports[0])?,
        Format::Json => json_line(out, &reports)?,
        Format::Csv => {
            writeln!(out, "{}", VerificationReport::CSV_HEADER)?;
            for r in reports {
                writeln!(out, "{}", r.csv_row())?;
            }
        }
        Format::Text => {
            for r in reports {
                report_text(r, out)?;
            }
        }
    }
    Ok(())
}

fn verify(g: &Global, what: VerifyWhat, n: usize, a: u32, b: u32, out: &mut String) -> Result<bool> {
    let report = run_verification(n, a, b, &checks(what), &verify_options(g))
        .map_err(|e| anyhow!("{}", e))?;
    let passed = report.passed();
    emit_reports(g, &[report], out)?;
    Ok(passed)
}

fn parse_weight(s: &str) -> Result<(u32, u32)> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| anyhow!("weights are written a:b, got {:?}", s))?;
    Ok((a.trim().parse()?, b.trim().parse()?))
}

fn report(g: &Global, ns: &[usize], weights: &[String], out: &mut String) -> Result<bool> {
    let fixed = weights
        .iter()
        .map(|w| parse_weight(w))
        .collect::<Result<Vec<_>>>()?;
    // one run per (n, a, b), in sorted key order
    let mut jobs = BTreeSet::new();
    for &n in ns {
        let ws = if fixed.is_empty() { default_sweep(n) } else { fixed.clone() };
        for (a, b) in ws {
            jobs.insert((n, a, b));
        }
    }
    let opts = verify_options(g);
    let reports = jobs
        .iter()
        .map(|&(n, a, b)| run_verification(n, a, b, &Check::ALL, &opts))
        .collect::<typeb_cells::Result<Vec<_>>>()
        .map_err(|e| anyhow!("{}", e))?;
    let passed = reports.iter().all(VerificationReport::passed);
    match g.format {
        Format::Json => json_line(
            out,
            &json!({"runs": reports, "examples": worked_examples()}),
        )?,
        Format::Csv => emit_reports(g, &reports, out)?,
        Format::Text => {
            emit_reports(g, &reports, out)?;
            writeln!(out, "worked examples")?;
            for e in worked_examples() {
                writeln!(out, "  {}: {}", e.name, e.value)?;
            }
        }
    }
    Ok(passed)
}
