//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::fs;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use sinklab_core::engel::{gamma_values, left_engel_elements};
use sinklab_core::structure::fitting_subgroup;
use sinklab_core::verify::{
    check_centralizer_power, check_component_sinks, check_fitting, check_heineken, check_m1_iff_nilpotent,
    check_orbit_lemma, check_simple_product_gamma, check_sink_oracle, contrast_report, CheckResult,
};
use sinklab_core::{FamilySpec, GroupSpec, GroupTable, DEFAULT_ORDER_CAP};

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn corpus() -> Vec<(String, GroupTable)> {
    let dir = corpus_dir();
    fs::read_to_string(dir.join("MANIFEST"))
        .expect("corpus manifest")
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty())
        .map(|file| {
            let spec = GroupSpec::parse(&fs::read_to_string(dir.join(file)).unwrap()).unwrap();
            let group = spec.build(DEFAULT_ORDER_CAP).unwrap();
            (spec.name.unwrap_or_else(|| file.to_string()), group)
        })
        .collect()
}

fn build(text: &str) -> GroupTable {
    FamilySpec::parse(text).unwrap().build(DEFAULT_ORDER_CAP).unwrap()
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

/// Runs `check` on every group and reports the first failure.
fn suite<'a>(
    groups: impl Iterator<Item = &'a (String, GroupTable)>,
    check: impl Fn(&GroupTable) -> Vec<CheckResult>,
) -> Outcome {
    let mut count = 0;
    for (id, g) in groups {
        count += 1;
        for r in check(g) {
            if !r.passed {
                return outcome(false, format!("{} failed on {id}: {:?}", r.check, r.counterexample));
            }
        }
    }
    outcome(true, format!("{count} groups"))
}

fn sink_oracle(corpus: &[(String, GroupTable)]) -> Outcome {
    let started = Instant::now();
    let result = suite(corpus.iter().filter(|(_, g)| g.order() <= 100), |g| {
        vec![check_sink_oracle(g, 100).expect("within oracle cap")]
    });
    let elapsed = started.elapsed();
    if result.passed && elapsed > Duration::from_secs(120) {
        return outcome(false, format!("took {elapsed:?}, limit 120s"));
    }
    outcome(result.passed, format!("{} in {elapsed:.2?}", result.detail))
}

fn fitting_certification(corpus: &[(String, GroupTable)]) -> Outcome {
    let result = suite(corpus.iter().filter(|(_, g)| g.order() <= 60), |g| {
        let mut r = check_fitting(g).expect("fitting subgroup is consistent");
        if fitting_subgroup(g).unwrap() != left_engel_elements(g) {
            r.passed = false;
        }
        vec![r]
    });
    if !result.passed {
        return result;
    }
    let s3 = build("symmetric 3");
    let s4 = build("symmetric 4");
    let f3 = fitting_subgroup(&s3).unwrap();
    let f4 = fitting_subgroup(&s4).unwrap();
    let a3 = ["e", "(1 2 3)", "(1 3 2)"];
    let v4 = ["e", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"];
    let mut l3 = s3.labels_of(&f3);
    let mut l4 = s4.labels_of(&f4);
    l3.sort();
    l4.sort();
    let mut e3 = a3.map(String::from).to_vec();
    let mut e4 = v4.map(String::from).to_vec();
    e3.sort();
    e4.sort();
    let spots = l3 == e3 && 6 / f3.len() == 2 && l4 == e4 && 24 / f4.len() == 6;
    outcome(spots, format!("{}; F(S3) = A3 index {}, F(S4) = V4 index {}", result.detail, 6 / f3.len(), 24 / f4.len()))
}

fn orbit_lemma() -> Outcome {
    let mut flags = Vec::new();
    for text in [
        "inversion_extension 3 1",
        "inversion_extension 3 2",
        "inversion_extension 3 3",
        "frobenius 7 3 2",
        "frobenius 13 3 3",
    ] {
        let spec = FamilySpec::parse(text).unwrap();
        let g = spec.build(DEFAULT_ORDER_CAP).unwrap();
        let (kernel, a) = spec.semidirect_parts(&g).unwrap();
        for k in [2, 3] {
            let r = match check_orbit_lemma(&g, &kernel, a, k) {
                Ok(r) => r,
                Err(e) => return outcome(false, format!("{text}: {e}")),
            };
            let parts = ["part_a", "part_b", "part_c_weak"].iter().all(|p| r.stats[*p] == 1);
            if !parts || !r.passed {
                return outcome(false, format!("{text} k = {k}: {r:?}"));
            }
            if k == 2 {
                flags.push(format!("{text}: sink = orbit ∪ {{e}}? {}", r.stats["sink_equals_orbit"] == 1));
            }
        }
    }
    outcome(true, flags.join("; "))
}

fn simple_products() -> Outcome {
    let a5 = build("alternating 5");
    for k in 2..=4 {
        if !check_simple_product_gamma(&a5, k).passed {
            return outcome(false, format!("A5 k = {k}"));
        }
    }
    let started = Instant::now();
    let square = build("direct_power 2 alternating 5");
    let r = check_simple_product_gamma(&square, 2);
    let elapsed = started.elapsed();
    outcome(
        r.passed && elapsed < Duration::from_secs(300),
        format!("A5 k = 2..4; A5×A5 k = 2 ({} values) in {elapsed:.2?}", gamma_values(&square, 2).len()),
    )
}

fn contrast() -> Outcome {
    let rows = contrast_report(3, 1..=4, DEFAULT_ORDER_CAP).unwrap();
    let got: Vec<_> = rows.iter().map(|r| (r.m_full, r.fitting_index, r.residual_order)).collect();
    let expected: Vec<_> = (1..=4).map(|r| (2, 2, 3usize.pow(r))).collect();
    outcome(got == expected, format!("(mFull, fittingIndex, residualOrder) = {got:?}"))
}

fn components() -> Outcome {
    let mut sizes = Vec::new();
    for s in 1..=3 {
        let r = check_component_sinks(3, s, DEFAULT_ORDER_CAP).unwrap();
        if !r.passed {
            return outcome(false, format!("s = {s}: {:?}", r.counterexample));
        }
        sizes.push(r.stats["sink_nontrivial"]);
    }
    outcome(true, format!("sizeNontrivial(sink(w)) for s = 1..3: {sizes:?}"))
}

fn determinism() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_sinklab");
    let run = || {
        Command::new(exe)
            .args(["scan", "--corpus"])
            .arg(corpus_dir())
            .args(["-k", "2"])
            .output()
            .expect("spawn sinklab")
    };
    let (a, b) = (run(), run());
    let ok = a.status.success() && b.status.success() && a.stdout == b.stdout && !a.stdout.is_empty();
    outcome(ok, format!("{} CSV bytes, identical: {}", a.stdout.len(), a.stdout == b.stdout))
}

fn main() {
    let corpus = corpus();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("1 sink oracle equivalence (order <= 100)", Box::new(|| sink_oracle(&corpus))),
        ("2 Heineken on the whole corpus", Box::new(|| suite(corpus.iter(), |g| vec![check_heineken(g)]))),
        (
            "3 centralizer power (order <= 100)",
            Box::new(|| suite(corpus.iter().filter(|(_, g)| g.order() <= 100), |g| vec![check_centralizer_power(g)])),
        ),
        ("4 Fitting via left Engel elements (order <= 60)", Box::new(|| fitting_certification(&corpus))),
        ("5 orbit lemma parts (a), (b), (c-weak)", Box::new(orbit_lemma)),
        ("6 every element a gamma_k-value in A5, A5xA5", Box::new(simple_products)),
        ("7 contrast family p = 3, r = 1..4", Box::new(contrast)),
        (
            "8 m = 1 iff nilpotent at k = 2, 3",
            Box::new(|| {
                suite(corpus.iter(), |g| vec![check_m1_iff_nilpotent(g, 2), check_m1_iff_nilpotent(g, 3)])
            }),
        ),
        ("9 component sink lower bound p = 3, s = 1..3", Box::new(components)),
        ("10 deterministic scan output", Box::new(determinism)),
    ];

    let mut failures = 0;
    for (name, run) in &criteria {
        let started = Instant::now();
        let result = run();
        let status = if result.passed { "PASS" } else { "FAIL" };
        println!("[{status}] criterion {name}: {} ({:.2?})", result.detail, started.elapsed());
        failures += usize::from(!result.passed);
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
