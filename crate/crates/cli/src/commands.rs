use std::fs::File;
use std::io::{self, Write};
use std::path::Path;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use sinklab_core::engel::{gamma_values, right_engel_sink};
use sinklab_core::structure::{fitting_subgroup, nilpotency_class};
use sinklab_core::verify::{self, CheckResult, ScanRow, DEFAULT_ORACLE_CAP};
use sinklab_core::{GroupSpec, GroupTable};

use crate::corpus;
use crate::report::{GammaJson, GroupSummary, Report, SinkJson};
use crate::Failure;

pub struct Options {
    pub cap: usize,
    pub timing: bool,
}

impl Options {
    fn clock(&self) -> Option<Instant> {
        self.timing.then(Instant::now)
    }
}

pub const CHECKS: &[&str] = &[
    "heineken",
    "centralizer_power",
    "sink_oracle",
    "m1_nilpotent",
    "fitting",
    "orbit_lemma",
    "simple_product_gamma",
];

fn load(opts: &Options, path: &Path) -> Result<(String, GroupSpec, GroupTable), Failure> {
    let (id, spec) = corpus::read_spec(path)?;
    let group = spec
        .build(opts.cap)
        .with_context(|| format!("building {}", path.display()))?;
    Ok((id, spec, group))
}

pub fn build(opts: &Options, path: &Path, audit: bool) -> Result<(), Failure> {
    let started = opts.clock();
    let (_, spec, group) = load(opts, path)?;
    let fitting = fitting_subgroup(&group)?;
    let class = nilpotency_class(&group);
    let summary = GroupSummary {
        order: group.order(),
        exponent: group.exponent(),
        nilpotent: class.is_some(),
        nilpotency_class: class,
        fitting_order: fitting.len(),
        fitting_index: group.order() / fitting.len(),
        generators: group.generators().iter().map(|&g| group.label(g).to_string()).collect(),
        associative: audit.then(|| group.check_associativity()),
    };
    Report::new("build", spec.to_string(), vec![summary], started).print();
    Ok(())
}

pub fn sink(opts: &Options, path: &Path, element: &str) -> Result<(), Failure> {
    let started = opts.clock();
    let (_, spec, group) = load(opts, path)?;
    let g = group.resolve(element)?;
    let report = right_engel_sink(&group, g);
    Report::new("sink", spec.to_string(), vec![SinkJson::new(&group, &report)], started).print();
    Ok(())
}

pub fn gamma(opts: &Options, path: &Path, k: usize) -> Result<(), Failure> {
    if k == 0 {
        return Err(Failure::Usage(anyhow!("k must be at least 1")));
    }
    let started = opts.clock();
    let (_, spec, group) = load(opts, path)?;
    let values = gamma_values(&group, k);
    let result = GammaJson {
        k,
        size: values.len(),
        order: group.order(),
        labels: group.labels_of(&values),
    };
    Report::new("gamma", spec.to_string(), vec![result], started).print();
    Ok(())
}

fn run_check(
    name: &str,
    spec: &GroupSpec,
    group: &GroupTable,
    k: usize,
    explicit: bool,
) -> Result<Vec<CheckResult>, Failure> {
    let results = match name {
        "heineken" => vec![verify::check_heineken(group)],
        "centralizer_power" => vec![verify::check_centralizer_power(group)],
        "sink_oracle" => {
            if group.order() > DEFAULT_ORACLE_CAP && !explicit {
                vec![]
            } else {
                vec![verify::check_sink_oracle(group, DEFAULT_ORACLE_CAP)?]
            }
        }
        "m1_nilpotent" if explicit => vec![verify::check_m1_iff_nilpotent(group, k)],
        "m1_nilpotent" => vec![
            verify::check_m1_iff_nilpotent(group, 2),
            verify::check_m1_iff_nilpotent(group, 3),
        ],
        "fitting" => vec![verify::check_fitting(group)?],
        "orbit_lemma" => match spec.family().and_then(|f| f.semidirect_parts(group)) {
            Some((kernel, a)) => vec![verify::check_orbit_lemma(group, &kernel, a, k)?],
            None if explicit => {
                return Err(Failure::Usage(anyhow!(
                    "orbit_lemma needs a group built as inversion_extension or frobenius"
                )))
            }
            None => vec![],
        },
        "simple_product_gamma" => vec![verify::check_simple_product_gamma(group, k)],
        other => {
            return Err(Failure::Usage(anyhow!(
                "unknown check `{other}`; expected one of {} or all",
                CHECKS.join(", ")
            )))
        }
    };
    Ok(results)
}

pub fn verify(opts: &Options, path: &Path, check: &str, k: usize) -> Result<(), Failure> {
    if k == 0 {
        return Err(Failure::Usage(anyhow!("k must be at least 1")));
    }
    let started = opts.clock();
    let (id, spec, group) = load(opts, path)?;
    let mut results = Vec::new();
    if check == "all" {
        // simple_product_gamma only makes sense for products of simple groups
        for name in CHECKS.iter().filter(|&&c| c != "simple_product_gamma") {
            results.extend(run_check(name, &spec, &group, k, false)?);
        }
    } else {
        results.extend(run_check(check, &spec, &group, k, true)?);
    }
    let results: Vec<CheckResult> = results.into_iter().map(|r| r.with_group(id.clone())).collect();
    let passed = results.iter().all(|r| r.passed);
    Report::new("verify", spec.to_string(), results, started).print();
    if passed {
        Ok(())
    } else {
        Err(Failure::ChecksFailed)
    }
}

fn write_rows(rows: &[ScanRow], out: Option<&Path>) -> anyhow::Result<()> {
    let sink: Box<dyn Write> = match out {
        Some(path) => Box::new(File::create(path).with_context(|| format!("cannot create {}", path.display()))?),
        None => Box::new(io::stdout().lock()),
    };
    let mut writer = csv::Writer::from_writer(sink);
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn scan(opts: &Options, dir: &Path, k: usize, out: Option<&Path>) -> Result<(), Failure> {
    if k == 0 {
        return Err(Failure::Usage(anyhow!("k must be at least 1")));
    }
    let entries = corpus::load(dir)?;
    let outcome = verify::theorem_scan(&entries, k, opts.cap);
    write_rows(&outcome.rows, out)?;
    let mut code = None;
    for (id, error) in outcome.failures {
        eprintln!("warning: {id}: {error}");
        let failure = Failure::from(error);
        code = match (code, failure) {
            (Some(Failure::Cap(e)), _) | (_, Failure::Cap(e)) => Some(Failure::Cap(e)),
            (_, f) => Some(f),
        };
    }
    code.map_or(Ok(()), Err)
}

fn parse_ranks(text: &str) -> anyhow::Result<std::ops::RangeInclusive<usize>> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| anyhow!("ranks must look like A..B, got `{text}`"))?;
    let a: usize = a.trim().parse().with_context(|| format!("bad rank `{a}`"))?;
    let b: usize = b.trim_start_matches('=').trim().parse().with_context(|| format!("bad rank `{b}`"))?;
    if a == 0 || a > b {
        bail!("rank range {a}..{b} must satisfy 1 ≤ A ≤ B");
    }
    Ok(a..=b)
}

pub fn contrast(opts: &Options, p: usize, ranks: &str, out: Option<&Path>) -> Result<(), Failure> {
    let ranks = parse_ranks(ranks)?;
    let rows = verify::contrast_report(p, ranks, opts.cap)?;
    write_rows(&rows, out)?;
    Ok(())
}
