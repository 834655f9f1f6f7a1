use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use rayon::prelude::*;
use serde::Serialize;

use monocurve::families::{instance, FamilyName};
use monocurve::toric::IdealReport;
use monocurve::{initial_ideal, Analysis, AperyTable, Engine, Error, GroebnerBasis, PhiIndex, Sequence, VarNames};

use crate::output::{Bases, FamilyLine, ReportJson};
use crate::{Config, Format};

fn json_line<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string(value).context("serializing output")
}

/// Runs the full analysis and fails on any disagreement between criteria.
pub fn analyze_sequence(cfg: &Config, a: &Sequence) -> Result<(Analysis, ReportJson)> {
    let an = Analysis::with_limits(a, cfg.limits)?;
    let report = an.report()?;
    if !report.criteria.all_agree() {
        return Err(Error::InternalInconsistency(format!(
            "{a}: criteria {:?} disagree with d = {}",
            report.criteria.dissenters(),
            report.criteria.d
        ))
        .into());
    }
    Ok((an, ReportJson::new(report)))
}

pub fn analyze(cfg: &Config, seq: &str, with_gb: bool, with_apery: bool) -> Result<ExitCode> {
    let a = cfg.parse_sequence(seq)?;
    let (an, mut report) = analyze_sequence(cfg, &a)?;
    if with_gb {
        report.bases = Some(Bases::new(&an));
    }
    if with_apery {
        report = report.with_apery(&an);
    }
    match cfg.format {
        Format::Json => println!("{}", json_line(&report)?),
        Format::Text => print!("{}", report.text()),
        Format::Tsv => println!("{}\n{}", ReportJson::tsv_header(), report.tsv_line()),
    }
    Ok(if report.verdict { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[derive(Serialize)]
struct GbJson {
    sequence: Sequence,
    a: IdealReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    dual: Option<IdealReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    last_var: Option<IdealReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dual_last_var: Option<IdealReport>,
}

pub fn gb(cfg: &Config, seq: &str, all: bool) -> Result<ExitCode> {
    let a = cfg.parse_sequence(seq)?;
    let engine = Engine::new(cfg.limits);
    let g = engine.toric_gb(&a)?;
    let mut sections: Vec<(&str, GroebnerBasis)> = vec![("I(a)", g.clone())];
    if all {
        let dual = a.dual();
        let dg = engine.toric_gb(&dual)?;
        sections.push(("I(a')", dg.clone()));
        sections.push(("(x_n, I(a))", engine.gb_with_last_variable_from(&a, &g)?));
        sections.push(("(x_n, I(a'))", engine.gb_with_last_variable_from(&dual, &dg)?));
    }
    match cfg.format {
        Format::Json => {
            let mut reports = sections.iter().map(|(_, g)| IdealReport::new(g, None));
            let out = GbJson {
                sequence: a,
                a: reports.next().expect("basis of I(a)"),
                dual: reports.next(),
                last_var: reports.next(),
                dual_last_var: reports.next(),
            };
            println!("{}", json_line(&out)?);
        }
        Format::Text | Format::Tsv => {
            for (title, g) in &sections {
                if all {
                    println!("# {title}");
                }
                for line in g.format_lines() {
                    println!("{line}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct AperyJson {
    sequence: Sequence,
    frobenius: i64,
    rows: Vec<monocurve::apery::AperyRowJson>,
}

pub fn apery(cfg: &Config, seq: &str) -> Result<ExitCode> {
    let a = cfg.parse_sequence(seq)?;
    let engine = Engine::new(cfg.limits);
    let gx = engine.gb_with_last_variable(&a)?;
    let std = engine.standard_monomials(&initial_ideal(&gx), a.len())?;
    let table = AperyTable::build(&a, &PhiIndex::new(&a, &std)?)?;
    let names = VarNames::new(a.len(), false);
    match cfg.format {
        Format::Json => {
            let out = AperyJson {
                sequence: a,
                frobenius: table.frobenius_number(),
                rows: table.to_json(&names),
            };
            println!("{}", json_line(&out)?);
        }
        Format::Tsv => print!("{}", table.to_tsv(&names)),
        Format::Text => {
            print!("{}", table.to_tsv(&names));
            println!("frobenius\t{}", table.frobenius_number());
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// `a..b` or `a..=b`, both inclusive.
pub fn parse_range(s: &str) -> Result<(u64, u64)> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| anyhow!("expected a range like 2..6, got {s:?}"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: u64 = lo.trim().parse().with_context(|| format!("bad range start in {s:?}"))?;
    let hi: u64 = hi.trim().parse().with_context(|| format!("bad range end in {s:?}"))?;
    if lo > hi {
        bail!("empty range {s:?}");
    }
    Ok((lo, hi))
}

/// True when `e` reports criteria that disagree with each other.
pub fn is_inconsistency(e: &anyhow::Error) -> bool {
    matches!(e.downcast_ref::<Error>(), Some(Error::InternalInconsistency(_)))
}

fn family_line(cfg: &Config, name: FamilyName, h: u64, base: Option<&Sequence>) -> (FamilyLine, bool) {
    let mut line = FamilyLine {
        family: name.to_string(),
        parameter: h,
        gb_size: None,
        expected_verdict: None,
        expected_gb_matches: None,
        report: None,
        error: None,
    };
    let result = instance(name, h, base)
        .map_err(anyhow::Error::from)
        .and_then(|inst| {
            cfg.check_sequence(&inst.sequence)?;
            Ok(inst)
        })
        .and_then(|inst| {
            let (an, report) = analyze_sequence(cfg, &inst.sequence)?;
            Ok((inst, an, report))
        });
    match result {
        Ok((inst, an, report)) => {
            line.gb_size = Some(an.gb.len());
            line.expected_verdict = inst.expected_verdict;
            line.expected_gb_matches = inst.expected_gb.map(|e| e == an.gb.elements());
            line.report = Some(report);
        }
        Err(e) => {
            line.error = Some(format!("{e:#}"));
            return (line, is_inconsistency(&e));
        }
    }
    (line, false)
}

pub fn family(cfg: &Config, name: &str, h: Option<u64>, range: Option<&str>, base: Option<&str>) -> Result<ExitCode> {
    let name: FamilyName = name.parse()?;
    let (lo, hi) = match (h, range) {
        (Some(h), None) => (h, h),
        (None, Some(r)) => parse_range(r)?,
        _ => bail!("give exactly one of --h and --h-range"),
    };
    let base = base.map(|b| cfg.parse_sequence(b)).transpose()?;
    let pool = cfg.pool()?;
    let results: Vec<(FamilyLine, bool)> = pool.install(|| {
        (lo..=hi)
            .into_par_iter()
            .map(|h| family_line(cfg, name, h, base.as_ref()))
            .collect()
    });
    for (l, _) in &results {
        match cfg.format {
            Format::Json => println!("{}", json_line(l)?),
            Format::Text | Format::Tsv => match (&l.report, &l.error) {
                (Some(r), _) => println!(
                    "{}\t{}\t{}\t{}\tgb_size={}",
                    l.family,
                    l.parameter,
                    r.sequence,
                    r.verdict_word(),
                    l.gb_size.unwrap_or(0)
                ),
                (None, Some(e)) => println!("{}\t{}\terror\t{}", l.family, l.parameter, e),
                (None, None) => unreachable!(),
            },
        }
    }
    let failed = results.iter().all(|(l, _)| l.error.is_some()) || results.iter().any(|&(_, bad)| bad);
    Ok(if failed { ExitCode::from(2) } else { ExitCode::SUCCESS })
}
