//! Engel calculus on a group table: iterated commutators `[g, x, x, …, x]`,
//! minimal right Engel sinks, Engel element tests and γ_k-value sets.
//!
//! In a finite group the sequence `c₀ = g, cᵢ₊₁ = [cᵢ, x]` is eventually
//! periodic. The minimal right Engel sink of `g` is the union over all `x` of
//! the periodic parts, so it always contains the identity (take `x = 1`).

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::set::ElementSet;
use crate::table::GroupTable;

/// The walk `g, [g,x], [g,x,x], …` split into its preperiod and its cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailTrace {
    pub start: usize,
    pub direction: usize,
    pub preperiod: Vec<usize>,
    /// Cycle elements in walk order, beginning where the walk enters the cycle.
    pub cycle: Vec<usize>,
}

impl TailTrace {
    pub fn cycle_set(&self, order: usize) -> ElementSet {
        ElementSet::from_indices(order, self.cycle.iter().copied())
    }

    /// Number of commutator steps from `g` to the position of the `i`-th cycle
    /// element, moved forward by one period when that position is 0.
    fn steps_to(&self, i: usize) -> usize {
        let p = self.preperiod.len() + i;
        if p == 0 {
            self.cycle.len()
        } else {
            p
        }
    }
}

/// Reusable first-visit marks for tail walks.
struct Walker {
    stamp: Vec<u32>,
    position: Vec<u32>,
    epoch: u32,
}

impl Walker {
    fn new(order: usize) -> Self {
        Walker {
            stamp: vec![0; order],
            position: vec![0; order],
            epoch: 0,
        }
    }

    fn trace(&mut self, group: &GroupTable, g: usize, x: usize) -> TailTrace {
        self.epoch += 1;
        let mut path = Vec::new();
        let mut c = g;
        while self.stamp[c] != self.epoch {
            self.stamp[c] = self.epoch;
            self.position[c] = path.len() as u32;
            path.push(c);
            c = group.comm(c, x);
        }
        let cycle = path.split_off(self.position[c] as usize);
        TailTrace {
            start: g,
            direction: x,
            preperiod: path,
            cycle,
        }
    }
}

pub fn commutator_tail(group: &GroupTable, g: usize, x: usize) -> TailTrace {
    Walker::new(group.order()).trace(group, g, x)
}

/// One `(x, n)` with `z = [g,ₙx] = [g,ₙ₊ₘx]` for some `m ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub direction: usize,
    pub steps: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SinkReport {
    pub element: usize,
    pub sink: ElementSet,
    pub size_full: usize,
    pub size_nontrivial: usize,
    /// First witness found for each sink element, scanning directions in index order.
    pub witnesses: BTreeMap<usize, Witness>,
}

/// Minimal right Engel sink of `g`, with a witness for each member.
pub fn right_engel_sink(group: &GroupTable, g: usize) -> SinkReport {
    let n = group.order();
    let mut walker = Walker::new(n);
    let mut sink = ElementSet::empty(n);
    let mut witnesses = BTreeMap::new();
    for x in 0..n {
        let trace = walker.trace(group, g, x);
        for (i, &z) in trace.cycle.iter().enumerate() {
            if sink.insert(z) {
                witnesses.insert(
                    z,
                    Witness {
                        direction: x,
                        steps: trace.steps_to(i),
                    },
                );
            }
        }
    }
    let size_full = sink.len();
    SinkReport {
        element: g,
        size_nontrivial: size_full - usize::from(sink.contains(0)),
        size_full,
        sink,
        witnesses,
    }
}

/// Cycle structure of the whole functional graph `c ↦ [c, x]`.
#[derive(Clone, Debug)]
pub struct CommutatorMap {
    cycle_of: Vec<u32>,
    cycles: Vec<Vec<usize>>,
}

impl CommutatorMap {
    pub fn new(group: &GroupTable, x: usize) -> Self {
        const UNSEEN: u32 = u32::MAX;
        const ON_PATH: u32 = u32::MAX - 1;
        let n = group.order();
        let mut cycle_of = vec![UNSEEN; n];
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut path = Vec::new();
        for start in 0..n {
            if cycle_of[start] != UNSEEN {
                continue;
            }
            path.clear();
            let mut c = start;
            while cycle_of[c] == UNSEEN {
                cycle_of[c] = ON_PATH;
                path.push(c);
                c = group.comm(c, x);
            }
            let id = if cycle_of[c] == ON_PATH {
                let at = path.iter().position(|&p| p == c).expect("c is on the current path");
                cycles.push(path[at..].to_vec());
                (cycles.len() - 1) as u32
            } else {
                cycle_of[c]
            };
            for &p in &path {
                cycle_of[p] = id;
            }
        }
        CommutatorMap { cycle_of, cycles }
    }

    /// The cycle that the walk from `g` eventually enters.
    pub fn cycle_from(&self, g: usize) -> &[usize] {
        &self.cycles[self.cycle_of[g] as usize]
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }
}

/// Sinks of every member of `elements`, in the member order of `elements`.
pub fn sinks_of(group: &GroupTable, elements: &ElementSet) -> Vec<ElementSet> {
    let n = group.order();
    let members = elements.to_vec();
    (0..n)
        .into_par_iter()
        .fold(
            || vec![ElementSet::empty(n); members.len()],
            |mut acc, x| {
                let map = CommutatorMap::new(group, x);
                for (slot, &g) in acc.iter_mut().zip(&members) {
                    for &z in map.cycle_from(g) {
                        slot.insert(z);
                    }
                }
                acc
            },
        )
        .reduce(
            || vec![ElementSet::empty(n); members.len()],
            |mut a, b| {
                for (s, t) in a.iter_mut().zip(&b) {
                    s.union_with(t);
                }
                a
            },
        )
}

/// Sinks of all elements, indexed by element.
pub fn all_sinks(group: &GroupTable) -> Vec<ElementSet> {
    sinks_of(group, &group.whole())
}

pub fn is_right_engel(group: &GroupTable, g: usize) -> bool {
    let mut walker = Walker::new(group.order());
    (0..group.order()).all(|x| walker.trace(group, g, x).cycle == [0])
}

/// Every walk `g, [g,x], [g,x,x], …` reaches the identity.
pub fn is_left_engel(group: &GroupTable, x: usize) -> bool {
    CommutatorMap::new(group, x).cycles() == [vec![0]]
}

pub fn right_engel_elements(group: &GroupTable) -> ElementSet {
    let sinks = all_sinks(group);
    ElementSet::from_indices(group.order(), (0..group.order()).filter(|&g| sinks[g].len() == 1))
}

pub fn left_engel_elements(group: &GroupTable) -> ElementSet {
    let flags: Vec<bool> = (0..group.order())
        .into_par_iter()
        .map(|x| is_left_engel(group, x))
        .collect();
    ElementSet::from_indices(group.order(), (0..group.order()).filter(|&x| flags[x]))
}

/// γ_k-values `[g₁, …, g_k]`: `X₁ = G`, `Xᵢ₊₁ = {[x, g] : x ∈ Xᵢ, g ∈ G}`.
pub fn gamma_values(group: &GroupTable, k: usize) -> ElementSet {
    assert!(k >= 1, "k must be at least 1");
    let n = group.order();
    let mut current = group.whole();
    for _ in 1..k {
        let members = current.to_vec();
        let next = members
            .par_iter()
            .fold(
                || ElementSet::empty(n),
                |mut acc, &x| {
                    for g in 0..n {
                        acc.insert(group.comm(x, g));
                    }
                    acc
                },
            )
            .reduce(
                || ElementSet::empty(n),
                |mut a, b| {
                    a.union_with(&b);
                    a
                },
            );
        if next == current {
            break;
        }
        current = next;
    }
    current
}

/// Largest sink sizes over the γ_k-values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SinkProfile {
    pub m_full: usize,
    pub m_nontrivial: usize,
    /// Least γ_k-value attaining `m_full`.
    pub argmax: usize,
}

pub fn sink_profile(group: &GroupTable, k: usize) -> SinkProfile {
    let values = gamma_values(group, k);
    let sinks = sinks_of(group, &values);
    let mut profile = SinkProfile {
        m_full: 0,
        m_nontrivial: 0,
        argmax: 0,
    };
    for (g, sink) in values.iter().zip(&sinks) {
        let full = sink.len();
        if full > profile.m_full {
            profile.m_full = full;
            profile.argmax = g;
        }
        profile.m_nontrivial = profile.m_nontrivial.max(full - usize::from(sink.contains(0)));
    }
    profile
}

/// `v, [v,a], [v,a,a], …` up to (not including) the first repeated value.
pub fn orbit_under(group: &GroupTable, a: usize, v: usize) -> Vec<usize> {
    let trace = commutator_tail(group, v, a);
    let mut out = trace.preperiod;
    out.extend(trace.cycle);
    out
}
