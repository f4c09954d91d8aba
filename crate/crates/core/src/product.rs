//! Direct and semidirect products, and quotients by normal subgroups.

use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::table::{check_cap, GroupTable};

/// Action of `H` on `N`: `action[h][u]` is the image `u^h` of `u ∈ N`.
///
/// Actions are right actions, so `action[h1 * h2] = action[h1]` followed by
/// `action[h2]`.
pub type Action = Vec<Vec<usize>>;

pub fn direct_product(left: &GroupTable, right: &GroupTable, order_cap: usize) -> Result<GroupTable> {
    let identity: Action = vec![(0..left.order()).collect(); right.order()];
    semidirect_product(left, right, &identity, order_cap)
}

/// `N ⋊ H` on pairs `(u, h)` indexed `u * |H| + h`, where `(u, h)` stands for
/// the product `u·h` and `h⁻¹ u h = u^h`.
pub fn semidirect_product(
    normal: &GroupTable,
    acting: &GroupTable,
    action: &Action,
    order_cap: usize,
) -> Result<GroupTable> {
    let (nn, nh) = (normal.order(), acting.order());
    check_cap(nn * nh, order_cap)?;
    check_action(normal, acting, action)?;

    // (u1, h1)(u2, h2) = (u1 · u2^(h1⁻¹), h1 h2)
    let n = nn * nh;
    let mut mul = vec![0u16; n * n];
    for u1 in 0..nn {
        for h1 in 0..nh {
            let row = (u1 * nh + h1) * n;
            let twist = &action[acting.inv(h1)];
            for u2 in 0..nn {
                let u = normal.mul(u1, twist[u2]);
                for h2 in 0..nh {
                    mul[row + u2 * nh + h2] = (u * nh + acting.mul(h1, h2)) as u16;
                }
            }
        }
    }
    let generators = normal
        .generators()
        .iter()
        .map(|&u| u * nh)
        .chain(acting.generators().iter().copied())
        .collect();
    GroupTable::from_table(mul, n, generators, None)
}

fn check_action(normal: &GroupTable, acting: &GroupTable, action: &Action) -> Result<()> {
    let nn = normal.order();
    if action.len() != acting.order() {
        return Err(Error::InvalidParameters {
            family: "semidirect_product".into(),
            reason: format!("action has {} entries for a group of order {}", action.len(), acting.order()),
        });
    }
    for (h, map) in action.iter().enumerate() {
        if map.len() != nn {
            return Err(Error::NotAnAutomorphism(h));
        }
        let image = ElementSet::from_indices(nn, map.iter().copied().filter(|&u| u < nn));
        if map.iter().any(|&u| u >= nn) || image.len() != nn {
            return Err(Error::NotAnAutomorphism(h));
        }
        for a in 0..nn {
            for b in 0..nn {
                if map[normal.mul(a, b)] != normal.mul(map[a], map[b]) {
                    return Err(Error::NotAnAutomorphism(h));
                }
            }
        }
    }
    for h1 in 0..acting.order() {
        for h2 in 0..acting.order() {
            let composed = &action[acting.mul(h1, h2)];
            if (0..nn).any(|u| composed[u] != action[h2][action[h1][u]]) {
                return Err(Error::NotAHomomorphism(h1, h2));
            }
        }
    }
    Ok(())
}

/// Iterated direct product `A × A × … × A` with `copies` factors, associated
/// to the left. Component `i` (0-based) of an element is digit `i` of its index
/// written in base `|A|`, most significant first.
pub fn direct_power(base: &GroupTable, copies: usize, order_cap: usize) -> Result<GroupTable> {
    if copies == 0 {
        return GroupTable::from_table(vec![0], 1, vec![], None);
    }
    let total = (0..copies).try_fold(1usize, |acc, _| acc.checked_mul(base.order()));
    check_cap(total.unwrap_or(usize::MAX), order_cap)?;
    let mut g = base.clone();
    for _ in 1..copies {
        g = direct_product(&g, base, order_cap)?;
    }
    Ok(g)
}

/// Index in `direct_power(base, copies)` of the element that is `a` in
/// component `component` and trivial elsewhere.
pub fn power_embedding(base_order: usize, copies: usize, component: usize, a: usize) -> usize {
    a * base_order.pow((copies - 1 - component) as u32)
}

/// A quotient table with the projection from the parent group.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub table: GroupTable,
    pub projection: Vec<usize>,
}

impl GroupTable {
    /// `G / N`. Cosets are numbered by their least element, so the identity
    /// coset is 0.
    pub fn quotient(&self, normal: &ElementSet) -> Result<Quotient> {
        if !self.is_normal(normal)? {
            return Err(Error::NotNormal);
        }
        let n = self.order();
        let mut projection = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for a in 0..n {
            if projection[a] != usize::MAX {
                continue;
            }
            let coset = reps.len();
            reps.push(a);
            for u in normal.iter() {
                projection[self.mul(a, u)] = coset;
            }
        }
        let m = reps.len();
        let mut mul = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                mul.push(projection[self.mul(a, b)] as u16);
            }
        }
        let generators = self.generators().iter().map(|&g| projection[g]).collect();
        let table = GroupTable::from_table(mul, m, generators, None)?;
        Ok(Quotient { table, projection })
    }
}
