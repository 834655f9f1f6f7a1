//! Random and exhaustive sweeps over sequences.

use std::process::ExitCode;

use anyhow::{bail, Result};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use monocurve::sequences::gcd;
use monocurve::Sequence;

use crate::commands::{analyze_sequence, is_inconsistency};
use crate::output::{ErrorLine, ReportJson, Summary, SummaryLine};
use crate::{Config, Format};

fn checked(entries: &[u64]) -> Sequence {
    let raw: Vec<i64> = entries.iter().map(|&x| x as i64).collect();
    Sequence::validate(&raw).expect("valid by construction")
}

/// Every sequence `a_1 < ... < a_n <= an_max` with gcd one.
pub fn enumerate(n: usize, an_max: u64) -> Vec<Sequence> {
    fn rec(prefix: &mut Vec<u64>, n: usize, an_max: u64, out: &mut Vec<Sequence>) {
        if prefix.len() == n {
            if prefix.iter().fold(0, |g, &x| gcd(g, x)) == 1 {
                out.push(checked(prefix));
            }
            return;
        }
        let start = prefix.last().map_or(1, |&x| x + 1);
        let left = (n - prefix.len() - 1) as u64;
        for x in start..=an_max.saturating_sub(left) {
            prefix.push(x);
            rec(prefix, n, an_max, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, an_max, &mut out);
    out
}

/// `count` random valid sequences with increasing entries and `a_n <= an_max`.
pub fn random(n: usize, an_max: u64, count: usize, seed: u64) -> Vec<Sequence> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let an = rng.gen_range(n as u64..=an_max);
        let mut entries: Vec<u64> = sample(&mut rng, (an - 1) as usize, n - 1)
            .into_iter()
            .map(|i| i as u64 + 1)
            .collect();
        entries.sort_unstable();
        entries.push(an);
        if entries.iter().fold(0, |g, &x| gcd(g, x)) == 1 {
            out.push(checked(&entries));
        }
    }
    out
}

pub fn run(cfg: &Config, n: usize, count: usize, seed: u64, exhaustive: bool) -> Result<ExitCode> {
    if n < 2 {
        bail!("--n must be at least 2");
    }
    if cfg.an_max < n as u64 {
        bail!("--an-max must be at least n = {n}");
    }
    let seqs = if exhaustive {
        enumerate(n, cfg.an_max)
    } else {
        random(n, cfg.an_max, count, seed)
    };
    let pool = cfg.pool()?;
    let results: Vec<Result<ReportJson>> = pool.install(|| {
        seqs.par_iter()
            .map(|a| analyze_sequence(cfg, a).map(|(_, r)| r))
            .collect()
    });

    let (mut acm, mut errors, mut inconsistencies) = (0, 0, 0);
    if cfg.format == Format::Tsv {
        println!("{}", ReportJson::tsv_header());
    }
    for (a, r) in seqs.iter().zip(&results) {
        match r {
            Ok(r) => {
                acm += usize::from(r.verdict);
                match cfg.format {
                    Format::Json => println!("{}", serde_json::to_string(r)?),
                    Format::Tsv => println!("{}", r.tsv_line()),
                    Format::Text => println!("{}\t{}", r.sequence, r.verdict_word()),
                }
            }
            Err(e) => {
                errors += 1;
                inconsistencies += usize::from(is_inconsistency(e));
                let line = ErrorLine {
                    sequence: a.to_string(),
                    error: format!("{e:#}"),
                };
                match cfg.format {
                    Format::Json => println!("{}", serde_json::to_string(&line)?),
                    _ => println!("{}\terror\t{}", line.sequence, line.error),
                }
            }
        }
    }
    let analyzed = seqs.len() - errors;
    let summary = Summary {
        instances: seqs.len(),
        acm,
        not_acm: analyzed - acm,
        errors,
        inconsistencies,
        acm_ratio: if analyzed == 0 { 0.0 } else { acm as f64 / analyzed as f64 },
    };
    match cfg.format {
        Format::Json => println!("{}", serde_json::to_string(&SummaryLine { summary })?),
        _ => println!(
            "summary\tinstances={}\tacm={}\tnot_acm={}\terrors={}\tinconsistencies={}\tacm_ratio={:.6}",
            summary.instances, summary.acm, summary.not_acm, summary.errors, summary.inconsistencies, summary.acm_ratio
        ),
    }
    Ok(if inconsistencies > 0 { ExitCode::from(2) } else { ExitCode::SUCCESS })
}
