//! Exhaustive checks of finite-group statements about Engel sinks, and scans
//! that tabulate sink sizes against Fitting-type structure.
//!
//! A failed [`CheckResult`] always carries a counterexample made of element
//! indices that can be replayed through the public operations.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::constructors::FamilySpec;
use crate::engel::{
    all_sinks, gamma_values, left_engel_elements, orbit_under, right_engel_elements, right_engel_sink,
    sink_profile, sinks_of,
};
use crate::error::{Error, Result};
use crate::product::power_embedding;
use crate::set::ElementSet;
use crate::spec::GroupSpec;
use crate::structure::{
    fitting_by_normal_closures, fitting_maximality_check, fitting_subgroup, is_nilpotent, nilpotent_residual,
};
use crate::table::GroupTable;

/// Largest order accepted by the windowed sink oracle by default.
pub const DEFAULT_ORACLE_CAP: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub elements: Vec<usize>,
    pub labels: Vec<String>,
    pub values: BTreeMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub group: String,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    pub stats: BTreeMap<String, i64>,
}

impl CheckResult {
    fn new(check: &str) -> Self {
        CheckResult {
            check: check.to_string(),
            group: String::new(),
            passed: true,
            counterexample: None,
            stats: BTreeMap::new(),
        }
    }

    pub fn with_group(mut self, id: impl Into<String>) -> Self {
        self.group = id.into();
        self
    }

    fn stat(&mut self, key: &str, value: impl TryInto<i64>) {
        self.stats.insert(key.to_string(), value.try_into().unwrap_or(i64::MAX));
    }

    /// Records a failure; only the first counterexample is kept.
    fn fail(&mut self, group: &GroupTable, elements: &[usize], values: &[(&str, i64)]) {
        self.passed = false;
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                elements: elements.to_vec(),
                labels: elements.iter().map(|&e| group.label(e).to_string()).collect(),
                values: values.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            });
        }
    }
}

/// One row of a corpus or contrast scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub group: String,
    pub n: usize,
    pub k: usize,
    #[serde(rename = "mFull")]
    pub m_full: usize,
    #[serde(rename = "mNontrivial")]
    pub m_nontrivial: usize,
    #[serde(rename = "fittingIndex")]
    pub fitting_index: usize,
    #[serde(rename = "residualOrder")]
    pub residual_order: usize,
    #[serde(rename = "quotientExponent")]
    pub quotient_exponent: usize,
}

/// Right Engel elements have left Engel inverses.
pub fn check_heineken(group: &GroupTable) -> CheckResult {
    let mut result = CheckResult::new("heineken");
    let right = right_engel_elements(group);
    let left = left_engel_elements(group);
    for g in right.iter() {
        if !left.contains(group.inv(g)) {
            result.fail(group, &[g, group.inv(g)], &[]);
        }
    }
    result.stat("right_engel", right.len());
    result.stat("left_engel", left.len());
    result
}

/// If `m = |R(g)|` and `h` centralizes `g`, then `h^(m!)` centralizes `R(g)`.
pub fn check_centralizer_power(group: &GroupTable) -> CheckResult {
    let mut result = CheckResult::new("centralizer_power");
    let n = group.order();
    let sinks = all_sinks(group);
    let mut pairs = 0usize;
    for g in 0..n {
        let sink = &sinks[g];
        let m = sink.len();
        for h in group.centralizer(&ElementSet::singleton(n, g)).iter() {
            let order = group.element_order(h);
            let reduced = (1..=m).fold(1 % order, |acc, i| acc * (i % order) % order);
            let power = group.pow(h, reduced as i64);
            pairs += 1;
            if let Some(z) = sink.iter().find(|&z| group.mul(power, z) != group.mul(z, power)) {
                result.fail(group, &[g, h, z], &[("m", m as i64)]);
            }
        }
    }
    result.stat("pairs", pairs);
    result.stat("max_sink", sinks.iter().map(ElementSet::len).max().unwrap_or(0));
    result
}

/// Orbit structure of `u ↦ [u, a]` on an abelian `V = [V, a]` normalized by
/// `a`, checked inside `⟨V, a⟩`:
/// (a) the map is a permutation of `V` fixing only the identity;
/// (b) every element of `V` is a γ_k-value;
/// (c) the orbit of each `v` lies in its sink and avoids the identity when `v ≠ 1`.
///
/// Whether each sink equals orbit ∪ {1} is recorded in the `sink_equals_orbit` stat.
pub fn check_orbit_lemma(group: &GroupTable, kernel: &ElementSet, a: usize, k: usize) -> Result<CheckResult> {
    let hyp = |s: &str| Err(Error::HypothesisFailed(s.to_string()));
    let n = group.order();
    group.element(a)?;
    if !group.is_subgroup(kernel) {
        return hyp("V is not a subgroup");
    }
    if kernel.iter().any(|u| kernel.iter().any(|w| group.mul(u, w) != group.mul(w, u))) {
        return hyp("V is not abelian");
    }
    if kernel.iter().any(|u| !kernel.contains(group.conj(u, a))) {
        return hyp("a does not normalize V");
    }
    let images = ElementSet::from_indices(n, kernel.iter().map(|u| group.comm(u, a)));
    if images != *kernel {
        return hyp("V ≠ [V, a]");
    }

    let mut result = CheckResult::new("orbit_lemma");
    let mut generators = kernel.clone();
    generators.insert(a);
    let span = group.subgroup_closure(&generators);
    let (local, embedding) = group.subgroup_table(&span)?;
    let to_local = |g: usize| embedding.binary_search(&g).expect("element of the span");
    let m = local.order();
    let local_kernel = ElementSet::from_indices(m, kernel.iter().map(to_local));
    let local_a = to_local(a);

    // (a)
    let fixed: Vec<usize> = kernel.iter().filter(|&u| group.comm(u, a) == 0).collect();
    let part_a = fixed == [0] && images.len() == kernel.len();
    if !part_a {
        result.fail(group, &fixed, &[("part", 1)]);
    }

    // (b)
    let gamma = gamma_values(&local, k);
    let part_b = local_kernel.is_subset(&gamma);
    if !part_b {
        let missing = local_kernel.iter().find(|&u| !gamma.contains(u)).expect("not a subset");
        result.fail(group, &[embedding[missing]], &[("part", 2), ("k", k as i64)]);
    }

    // (c)
    let sinks = sinks_of(&local, &local_kernel);
    let mut part_c = true;
    let mut equal = true;
    let mut max_orbit = 0;
    for (v, sink) in local_kernel.iter().zip(&sinks) {
        let orbit = orbit_under(&local, local_a, v);
        max_orbit = max_orbit.max(orbit.len());
        let orbit_set = ElementSet::from_indices(m, orbit.iter().copied());
        let avoids_identity = v == 0 || !orbit_set.contains(0);
        if !orbit_set.is_subset(sink) || !avoids_identity {
            part_c = false;
            result.fail(group, &[embedding[v]], &[("part", 3)]);
        }
        if v != 0 {
            let mut with_identity = orbit_set;
            with_identity.insert(0);
            equal &= with_identity == *sink;
        }
    }

    result.stat("part_a", part_a as i64);
    result.stat("part_b", part_b as i64);
    result.stat("part_c_weak", part_c as i64);
    result.stat("sink_equals_orbit", equal as i64);
    result.stat("kernel_order", kernel.len());
    result.stat("max_orbit", max_orbit);
    result.stat("max_sink", sinks.iter().map(ElementSet::len).max().unwrap_or(0));
    Ok(result)
}

/// Every element is a γ_k-value. Meant for direct products of non-abelian
/// simple groups.
pub fn check_simple_product_gamma(group: &GroupTable, k: usize) -> CheckResult {
    let mut result = CheckResult::new("simple_product_gamma");
    let values = gamma_values(group, k);
    if let Some(missing) = values.complement().iter().next() {
        result.fail(group, &[missing], &[("k", k as i64)]);
    }
    result.stat("k", k);
    result.stat("gamma_values", values.len());
    result
}

/// All γ_k-values having trivial sinks is equivalent to nilpotency.
pub fn check_m1_iff_nilpotent(group: &GroupTable, k: usize) -> CheckResult {
    let mut result = CheckResult::new(&format!("m1_nilpotent_k{k}"));
    let profile = sink_profile(group, k);
    let nilpotent = is_nilpotent(group);
    if (profile.m_full == 1) != nilpotent {
        let elements = if profile.m_full > 1 { vec![profile.argmax] } else { vec![] };
        result.fail(
            group,
            &elements,
            &[("m_full", profile.m_full as i64), ("nilpotent", nilpotent as i64)],
        );
    }
    result.stat("k", k);
    result.stat("m_full", profile.m_full);
    result.stat("nilpotent", nilpotent as i64);
    result
}

/// Fitting subgroup via left Engel elements: normal, nilpotent, maximal, and
/// equal to the product of all nilpotent normal closures of single elements.
pub fn check_fitting(group: &GroupTable) -> Result<CheckResult> {
    let mut result = CheckResult::new("fitting");
    let fitting = fitting_subgroup(group)?;
    if !fitting_maximality_check(group)? {
        let witness = fitting
            .complement()
            .iter()
            .find(|&x| {
                let mut c = group.normal_closure(&ElementSet::singleton(group.order(), x));
                c.union_with(&fitting);
                crate::structure::is_nilpotent_subgroup(group, &group.subgroup_closure(&c))
            })
            .expect("maximality failed for some element");
        result.fail(group, &[witness], &[("part", 1)]);
    }
    let independent = fitting_by_normal_closures(group);
    if independent != fitting {
        let mut diff = independent.clone();
        diff.intersect_with(&fitting.complement());
        let mut other = fitting.clone();
        other.intersect_with(&independent.complement());
        diff.union_with(&other);
        result.fail(group, &diff.to_vec(), &[("part", 2)]);
    }
    result.stat("fitting_order", fitting.len());
    result.stat("fitting_index", group.order() / fitting.len());
    Ok(result)
}

/// Windowed brute force: for every `g` and `x`, collect `[g,ₙx]` for `n` in
/// `[|G|, 3|G|]`, and compare the union with the cycle-detected sink.
pub fn check_sink_oracle(group: &GroupTable, oracle_cap: usize) -> Result<CheckResult> {
    let n = group.order();
    if n > oracle_cap {
        return Err(Error::HypothesisFailed(format!("order {n} exceeds oracle cap {oracle_cap}")));
    }
    let mut result = CheckResult::new("sink_oracle");
    let oracle: Vec<ElementSet> = (0..n)
        .into_par_iter()
        .map(|g| {
            let mut values = ElementSet::empty(n);
            for x in 0..n {
                let mut c = g;
                for _ in 0..n {
                    c = group.comm(c, x);
                }
                values.insert(c);
                for _ in n..3 * n {
                    c = group.comm(c, x);
                    values.insert(c);
                }
            }
            values
        })
        .collect();
    for (g, expected) in oracle.iter().enumerate() {
        let report = right_engel_sink(group, g);
        if report.sink != *expected {
            result.fail(
                group,
                &[g],
                &[("oracle_size", expected.len() as i64), ("sink_size", report.size_full as i64)],
            );
        }
    }
    result.stat("elements", n);
    result.stat("max_sink", oracle.iter().map(ElementSet::len).max().unwrap_or(0));
    Ok(result)
}

/// In `direct_power(inversion_extension(p, 1), s)` take `vᵢ` nontrivial in
/// component `i` and `w = v₁⋯v_s`. Checks that `w` is a γ₂-value, that
/// `[w,ₙaᵢ] = [vᵢ,ₙaᵢ] ≠ 1` for the inverting element `aᵢ` of each component
/// and all `n ≤ |G|`, and that `w` has at least `s` nontrivial sink elements.
pub fn check_component_sinks(p: usize, copies: usize, order_cap: usize) -> Result<CheckResult> {
    if !(1..=4).contains(&copies) {
        return Err(Error::params("component_sinks", "number of components must be in 1..=4"));
    }
    let base_spec = FamilySpec::InversionExtension { p, rank: 1 };
    let spec = FamilySpec::DirectPower { base: Box::new(base_spec.clone()), copies };
    let group = spec.build(order_cap)?;
    let base = base_spec.build(order_cap)?;
    let (kernel, alpha) = base_spec.semidirect_parts(&base).expect("semidirect family");
    let t = kernel.iter().find(|&u| u != 0).expect("kernel is nontrivial");

    let embed = |i: usize, a: usize| power_embedding(base.order(), copies, i, a);
    let components: Vec<usize> = (0..copies).map(|i| embed(i, t)).collect();
    let actors: Vec<usize> = (0..copies).map(|i| embed(i, alpha)).collect();
    let w = components.iter().fold(0, |acc, &v| group.mul(acc, v));

    let mut result = CheckResult::new("component_sinks");
    if !gamma_values(&group, 2).contains(w) {
        result.fail(&group, &[w], &[("part", 1)]);
    }
    for (&v, &a) in components.iter().zip(&actors) {
        let (mut cw, mut cv) = (w, v);
        for steps in 1..=group.order() {
            cw = group.comm(cw, a);
            cv = group.comm(cv, a);
            if cw != cv || cv == 0 {
                result.fail(&group, &[w, v, a], &[("part", 2), ("steps", steps as i64)]);
                break;
            }
        }
    }
    let report = right_engel_sink(&group, w);
    if report.size_nontrivial < copies {
        result.fail(&group, &[w], &[("part", 3), ("sink_nontrivial", report.size_nontrivial as i64)]);
    }
    result.stat("components", copies);
    result.stat("order", group.order());
    result.stat("sink_nontrivial", report.size_nontrivial);
    Ok(result.with_group(spec.to_string()))
}

pub fn scan_row(id: &str, group: &GroupTable, k: usize) -> Result<ScanRow> {
    let profile = sink_profile(group, k);
    let fitting = fitting_subgroup(group)?;
    let quotient = group.quotient(&fitting)?;
    Ok(ScanRow {
        group: id.to_string(),
        n: group.order(),
        k,
        m_full: profile.m_full,
        m_nontrivial: profile.m_nontrivial,
        fitting_index: group.order() / fitting.len(),
        residual_order: nilpotent_residual(group).len(),
        quotient_exponent: quotient.table.exponent(),
    })
}

/// Rows for `inversion_extension(p, r)` over `ranks` at `k = 2`.
pub fn contrast_report(p: usize, ranks: RangeInclusive<usize>, order_cap: usize) -> Result<Vec<ScanRow>> {
    ranks
        .map(|rank| {
            let spec = FamilySpec::InversionExtension { p, rank };
            let group = spec.build(order_cap)?;
            scan_row(&format!("inversion_extension_{p}_{rank}"), &group, 2)
        })
        .collect()
}

#[derive(Debug, Default)]
pub struct ScanOutcome {
    pub rows: Vec<ScanRow>,
    pub failures: Vec<(String, Error)>,
}

/// One row per corpus entry, sorted by group id. Build failures are collected
/// and do not stop the scan.
pub fn theorem_scan(corpus: &[(String, GroupSpec)], k: usize, order_cap: usize) -> ScanOutcome {
    let results: Vec<(String, Result<ScanRow>)> = corpus
        .par_iter()
        .map(|(id, spec)| (id.clone(), spec.build(order_cap).and_then(|g| scan_row(id, &g, k))))
        .collect();
    let mut outcome = ScanOutcome::default();
    for (id, r) in results {
        match r {
            Ok(row) => outcome.rows.push(row),
            Err(e) => outcome.failures.push((id, e)),
        }
    }
    outcome.rows.sort_by(|a, b| a.group.cmp(&b.group));
    outcome.failures.sort_by(|a, b| a.0.cmp(&b.0));
    outcome
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(text: &str) -> GroupTable {
        FamilySpec::parse(text).unwrap().build(10_000).unwrap()
    }

    #[test]
    fn heineken_examples() {
        for text in ["symmetric 4", "cyclic 10", "inversion_extension 3 2"] {
            assert!(check_heineken(&build(text)).passed, "{text}");
        }
    }

    #[test]
    fn centralizer_power_examples() {
        for text in ["symmetric 3", "frobenius 7 3 2", "quaternion8"] {
            assert!(check_centralizer_power(&build(text)).passed, "{text}");
        }
    }

    #[test]
    fn orbit_lemma_examples() {
        for (text, k) in [("inversion_extension 3 1", 3), ("inversion_extension 3 2", 2), ("frobenius 7 3 2", 2)] {
            let spec = FamilySpec::parse(text).unwrap();
            let g = spec.build(1000).unwrap();
            let (v, a) = spec.semidirect_parts(&g).unwrap();
            let r = check_orbit_lemma(&g, &v, a, k).unwrap();
            assert!(r.passed, "{text}: {r:?}");
            let eq = r.stats["sink_equals_orbit"];
            if text.starts_with("inversion") {
                assert_eq!(eq, 1);
            } else {
                // directions a² contribute the orbit of u ↦ u³, of length 6
                assert_eq!(eq, 0);
                assert_eq!(r.stats["max_sink"], 7);
            }
        }
    }

    #[test]
    fn orbit_lemma_hypotheses() {
        let s3 = build("symmetric 3");
        let a3 = s3.subgroup_closure(&ElementSet::singleton(6, 1));
        // a = (1 2 3) centralizes A3, so [A3, a] = 1
        let err = check_orbit_lemma(&s3, &a3, 1, 2).unwrap_err();
        assert_eq!(err, Error::HypothesisFailed("V ≠ [V, a]".into()));
        let s4 = build("symmetric 4");
        let a4 = crate::structure::derived_subgroup(&s4);
        assert!(matches!(
            check_orbit_lemma(&s4, &a4, 2, 2),
            Err(Error::HypothesisFailed(m)) if m.contains("abelian")
        ));
    }

    #[test]
    fn simple_products() {
        let a5 = build("alternating 5");
        assert!(check_simple_product_gamma(&a5, 2).passed);
        assert!(check_simple_product_gamma(&a5, 4).passed);
        let s3 = build("symmetric 3");
        let r = check_simple_product_gamma(&s3, 2);
        assert!(!r.passed);
        let missing = r.counterexample.unwrap().elements[0];
        assert!(!gamma_values(&s3, 2).contains(missing));
    }

    #[test]
    fn m1_examples() {
        assert!(check_m1_iff_nilpotent(&build("dihedral 4"), 2).passed);
        let r = check_m1_iff_nilpotent(&build("symmetric 3"), 2);
        assert!(r.passed);
        assert_eq!(r.stats["m_full"], 2);
        assert!(check_m1_iff_nilpotent(&build("cyclic 6"), 3).passed);
    }

    #[test]
    fn oracle_examples() {
        for text in ["symmetric 3", "quaternion8", "frobenius 7 3 2"] {
            let r = check_sink_oracle(&build(text), DEFAULT_ORACLE_CAP).unwrap();
            assert!(r.passed, "{text}");
        }
        assert!(check_sink_oracle(&build("symmetric 5"), DEFAULT_ORACLE_CAP).is_err());
    }

    #[test]
    fn component_sinks() {
        for s in 1..=3 {
            let r = check_component_sinks(3, s, 10_000).unwrap();
            assert!(r.passed, "s = {s}: {r:?}");
            assert!(r.stats["sink_nontrivial"] >= s as i64);
        }
    }

    #[test]
    fn scan_rows() {
        let row = scan_row("S3", &build("symmetric 3"), 2).unwrap();
        assert_eq!(
            (row.n, row.k, row.m_full, row.m_nontrivial, row.fitting_index, row.residual_order, row.quotient_exponent),
            (6, 2, 2, 1, 2, 3, 2)
        );
        let d4 = scan_row("D4", &build("dihedral 4"), 2).unwrap();
        assert_eq!((d4.m_full, d4.fitting_index), (1, 1));
        assert_eq!(scan_row("S4", &build("symmetric 4"), 2).unwrap().fitting_index, 6);
    }

    #[test]
    fn contrast_rows() {
        let rows = contrast_report(3, 1..=3, 10_000).unwrap();
        let got: Vec<_> = rows.iter().map(|r| (r.m_full, r.residual_order, r.fitting_index)).collect();
        assert_eq!(got, vec![(2, 3, 2), (2, 9, 2), (2, 27, 2)]);
    }

    #[test]
    fn scans_collect_failures() {
        let corpus = vec![
            ("b".to_string(), GroupSpec::parse("group construct symmetric 3").unwrap()),
            ("a".to_string(), GroupSpec::parse("group construct symmetric 7").unwrap()),
        ];
        let out = theorem_scan(&corpus, 2, 1000);
        assert_eq!(out.rows.len(), 1);
        assert_eq!(out.failures, vec![("a".to_string(), Error::CapExceeded { cap: 1000 })]);
    }
}
