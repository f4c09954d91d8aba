//! Expected values computed by composing permutations directly, without the
//! multiplication tables.

use std::collections::BTreeSet;

use sinklab_core::engel::{gamma_values, right_engel_sink};
use sinklab_core::structure::{fitting_subgroup, lower_central_series};
use sinklab_core::{ElementSet, FamilySpec, GroupTable, Permutation};

fn perm(d: usize, s: &str) -> Permutation {
    Permutation::parse(d, s).unwrap()
}

fn comm(a: &Permutation, b: &Permutation) -> Permutation {
    a.inverse().then(&b.inverse()).then(a).then(b)
}

/// Every permutation of `1..=d`.
fn all_perms(d: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<usize>, d: usize, out: &mut Vec<Permutation>) {
        if prefix.len() == d {
            out.push(Permutation::from_images(prefix).unwrap());
            return;
        }
        for p in 1..=d {
            if !prefix.contains(&p) {
                prefix.push(p);
                rec(prefix, d, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), d, &mut out);
    out
}

fn labels(g: &GroupTable, set: &ElementSet) -> BTreeSet<String> {
    g.labels_of(set).into_iter().collect()
}

fn names(perms: impl IntoIterator<Item = Permutation>) -> BTreeSet<String> {
    perms.into_iter().map(|p| p.to_string()).collect()
}

#[test]
fn s3_commutator_value() {
    let (r, t) = (perm(3, "(1 2 3)"), perm(3, "(1 2)"));
    assert_eq!(comm(&r, &t).to_string(), "(1 2 3)");
    let g = FamilySpec::Symmetric(3).build(100).unwrap();
    let (ri, ti) = (g.resolve("(1 2 3)").unwrap(), g.resolve("(1 2)").unwrap());
    assert_eq!(g.label(g.comm(ri, ti)), "(1 2 3)");
}

#[test]
fn s3_gamma2_from_all_36_pairs() {
    let s3 = all_perms(3);
    let expected = names(s3.iter().flat_map(|a| s3.iter().map(move |b| comm(a, b))));
    assert_eq!(expected.len(), 3);
    let g = FamilySpec::Symmetric(3).build(100).unwrap();
    assert_eq!(labels(&g, &gamma_values(&g, 2)), expected);
}

#[test]
fn a5_every_element_is_a_commutator() {
    let a5: Vec<_> = all_perms(5)
        .into_iter()
        .filter(|p| p.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0)
        .collect();
    assert_eq!(a5.len(), 60);
    let values = names(a5.iter().flat_map(|a| a5.iter().map(move |b| comm(a, b))));
    assert_eq!(values.len(), 60);
}

#[test]
fn s4_left_engel_elements_are_v4() {
    // x is left Engel iff every walk g, [g,x], ... hits the identity
    let s4 = all_perms(4);
    let left_engel: Vec<_> = s4
        .iter()
        .filter(|x| {
            s4.iter().all(|g| {
                let mut c = g.clone();
                (0..=24).any(|_| {
                    let hit = c.is_identity();
                    c = comm(&c, x);
                    hit
                })
            })
        })
        .cloned()
        .collect();
    let expected = names(left_engel);
    assert_eq!(expected, names(["e", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"].map(|s| perm(4, s))));

    let g = FamilySpec::Symmetric(4).build(100).unwrap();
    assert_eq!(labels(&g, &fitting_subgroup(&g).unwrap()), expected);
}

#[test]
fn s3_sink_of_rotation() {
    // recurrent values of [g, x, x, ...] over all x, by iterating 3·|G| steps
    let s3 = all_perms(3);
    let g0 = perm(3, "(1 2 3)");
    let mut recurrent = BTreeSet::new();
    for x in &s3 {
        let mut c = g0.clone();
        for step in 0..18 {
            if step >= 6 {
                recurrent.insert(c.to_string());
            }
            c = comm(&c, x);
        }
    }
    assert_eq!(recurrent, names([perm(3, "e"), g0]));
    let g = FamilySpec::Symmetric(3).build(100).unwrap();
    let report = right_engel_sink(&g, g.resolve("(1 2 3)").unwrap());
    assert_eq!(labels(&g, &report.sink), recurrent);
}

#[test]
fn d4_lower_central_series() {
    let g = FamilySpec::Dihedral(4).build(100).unwrap();
    let d4: Vec<Permutation> = g.permutations().unwrap().to_vec();
    let derived = names(d4.iter().flat_map(|a| d4.iter().map(move |b| comm(a, b))));
    // the commutator set of D4 is already a subgroup: {e, rotation by π}
    assert_eq!(derived, names([perm(4, "e"), perm(4, "(1 3)(2 4)")]));
    let series = lower_central_series(&g);
    assert_eq!(labels(&g, &series.terms[1]), derived);
    assert_eq!(series.terms[2].len(), 1);
}
