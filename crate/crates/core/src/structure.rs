//! Derived and lower central series, nilpotency, the nilpotent residual and
//! the Fitting subgroup.
//!
//! The Fitting subgroup is computed as the set of left Engel elements, which
//! for finite groups is exactly the largest normal nilpotent subgroup (Baer).

use serde::Serialize;

use crate::engel::left_engel_elements;
use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::table::GroupTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    LowerCentral,
    Derived,
}

/// Terms `G = term₁ ⊋ term₂ ⊋ … ⊋ term_r = term_{r+1}`; the repeated final
/// term is kept so the stable point is visible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub terms: Vec<ElementSet>,
    pub stable: bool,
}

impl SeriesReport {
    pub fn limit(&self) -> &ElementSet {
        self.terms.last().expect("series has at least one term")
    }

    /// Number of strict inclusions.
    pub fn strict_steps(&self) -> usize {
        self.terms.len().saturating_sub(2)
    }
}

fn series_from(group: &GroupTable, start: &ElementSet, kind: SeriesKind) -> SeriesReport {
    let mut terms = vec![start.clone()];
    loop {
        let last = terms.last().unwrap();
        let against = match kind {
            SeriesKind::LowerCentral => start,
            SeriesKind::Derived => last,
        };
        let next = group.commutator_subgroup(last, against);
        let done = next == *last;
        terms.push(next);
        if done {
            break;
        }
    }
    SeriesReport { kind, terms, stable: true }
}

pub fn derived_subgroup(group: &GroupTable) -> ElementSet {
    group.commutator_subgroup(&group.whole(), &group.whole())
}

pub fn lower_central_series(group: &GroupTable) -> SeriesReport {
    series_from(group, &group.whole(), SeriesKind::LowerCentral)
}

pub fn derived_series(group: &GroupTable) -> SeriesReport {
    series_from(group, &group.whole(), SeriesKind::Derived)
}

/// Lower central series of a subgroup, computed inside the ambient table.
pub fn lower_central_series_of(group: &GroupTable, subgroup: &ElementSet) -> SeriesReport {
    series_from(group, subgroup, SeriesKind::LowerCentral)
}

pub fn is_nilpotent(group: &GroupTable) -> bool {
    nilpotency_class(group).is_some()
}

pub fn nilpotency_class(group: &GroupTable) -> Option<usize> {
    let series = lower_central_series(group);
    (series.limit().len() == 1).then(|| series.strict_steps())
}

pub fn is_nilpotent_subgroup(group: &GroupTable, subgroup: &ElementSet) -> bool {
    lower_central_series_of(group, subgroup).limit().len() == 1
}

/// Smallest normal subgroup with nilpotent quotient: the limit of the lower
/// central series.
pub fn nilpotent_residual(group: &GroupTable) -> ElementSet {
    lower_central_series(group).limit().clone()
}

/// Left Engel elements, checked to form a normal nilpotent subgroup.
pub fn fitting_subgroup(group: &GroupTable) -> Result<ElementSet> {
    let fitting = left_engel_elements(group);
    if !group.is_subgroup(&fitting) {
        return Err(Error::InternalInconsistency("left Engel elements do not form a subgroup".into()));
    }
    if !group.is_normal(&fitting)? {
        return Err(Error::InternalInconsistency("left Engel subgroup is not normal".into()));
    }
    if !is_nilpotent_subgroup(group, &fitting) {
        return Err(Error::InternalInconsistency("left Engel subgroup is not nilpotent".into()));
    }
    Ok(fitting)
}

pub fn fitting_index(group: &GroupTable) -> Result<usize> {
    Ok(group.order() / fitting_subgroup(group)?.len())
}

/// For every `x ∉ F(G)`, the subgroup generated by `F(G)` and the normal
/// closure of `x` is not nilpotent.
pub fn fitting_maximality_check(group: &GroupTable) -> Result<bool> {
    let fitting = fitting_subgroup(group)?;
    Ok(fitting.complement().iter().all(|x| {
        let mut candidate = group.normal_closure(&ElementSet::singleton(group.order(), x));
        candidate.union_with(&fitting);
        !is_nilpotent_subgroup(group, &group.subgroup_closure(&candidate))
    }))
}

/// Largest normal nilpotent subgroup assembled without Engel elements: the
/// product of all nilpotent normal closures of single elements.
pub fn fitting_by_normal_closures(group: &GroupTable) -> ElementSet {
    let n = group.order();
    let mut union = group.trivial();
    for x in 0..n {
        if union.contains(x) {
            continue;
        }
        let closure = group.normal_closure(&ElementSet::singleton(n, x));
        if is_nilpotent_subgroup(group, &closure) {
            union.union_with(&closure);
        }
    }
    group.subgroup_closure(&union)
}
