//! Subsets, subgroups and normality, computed by direct scans of the table.

use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::table::GroupTable;

impl GroupTable {
    pub fn whole(&self) -> ElementSet {
        ElementSet::full(self.order())
    }

    pub fn trivial(&self) -> ElementSet {
        ElementSet::singleton(self.order(), 0)
    }

    /// Smallest subgroup containing `set`.
    pub fn subgroup_closure(&self, set: &ElementSet) -> ElementSet {
        let mut closure = self.trivial();
        let mut gens: Vec<usize> = Vec::new();
        for s in set.iter() {
            if closure.contains(s) {
                continue;
            }
            gens.push(s);
            closure = self.close_under(&gens);
        }
        closure
    }

    /// Orbit of the identity under right multiplication by `gens`.
    fn close_under(&self, gens: &[usize]) -> ElementSet {
        let mut members = self.trivial();
        let mut queue = vec![0usize];
        while let Some(a) = queue.pop() {
            for &g in gens {
                let b = self.mul(a, g);
                if members.insert(b) {
                    queue.push(b);
                }
            }
        }
        members
    }

    pub fn is_subgroup(&self, set: &ElementSet) -> bool {
        set.contains(0)
            && set
                .iter()
                .all(|a| set.contains(self.inv(a)) && set.iter().all(|b| set.contains(self.mul(a, b))))
    }

    pub fn is_normal(&self, subgroup: &ElementSet) -> Result<bool> {
        if !self.is_subgroup(subgroup) {
            return Err(Error::NotASubgroup);
        }
        Ok(self.is_invariant(subgroup))
    }

    /// Closed under conjugation by every generator (hence by the whole group).
    fn is_invariant(&self, set: &ElementSet) -> bool {
        self.generators()
            .iter()
            .all(|&g| set.iter().all(|h| set.contains(self.conj(h, g))))
    }

    /// Smallest normal subgroup containing `set`.
    pub fn normal_closure(&self, set: &ElementSet) -> ElementSet {
        let mut conjugates = ElementSet::empty(self.order());
        for s in set.iter() {
            for g in 0..self.order() {
                conjugates.insert(self.conj(s, g));
            }
        }
        self.subgroup_closure(&conjugates)
    }

    pub fn centralizer(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.order(),
            (0..self.order()).filter(|&g| set.iter().all(|s| self.mul(g, s) == self.mul(s, g))),
        )
    }

    pub fn center(&self) -> ElementSet {
        self.centralizer(&self.whole())
    }

    /// Subgroup generated by `[a, b]` for `a ∈ left`, `b ∈ right`.
    pub fn commutator_subgroup(&self, left: &ElementSet, right: &ElementSet) -> ElementSet {
        let mut values = self.trivial();
        for a in left.iter() {
            for b in right.iter() {
                values.insert(self.comm(a, b));
            }
        }
        self.subgroup_closure(&values)
    }

    /// Materializes a subgroup as its own table. Returns the table and the
    /// embedding from subgroup indices to indices of `self`; subgroup elements
    /// keep their relative order and their labels.
    pub fn subgroup_table(&self, subgroup: &ElementSet) -> Result<(GroupTable, Vec<usize>)> {
        if !self.is_subgroup(subgroup) {
            return Err(Error::NotASubgroup);
        }
        let embedding = subgroup.to_vec();
        let mut local = vec![u16::MAX; self.order()];
        for (i, &g) in embedding.iter().enumerate() {
            local[g] = i as u16;
        }
        let m = embedding.len();
        let mut mul = Vec::with_capacity(m * m);
        for &a in &embedding {
            for &b in &embedding {
                mul.push(local[self.mul(a, b)]);
            }
        }
        // greedy generating set in index order
        let mut gens = Vec::new();
        let mut reached = self.trivial();
        for &g in &embedding {
            if !reached.contains(g) {
                gens.push(g);
                reached = self.subgroup_closure(&ElementSet::from_indices(self.order(), gens.iter().copied()));
            }
        }
        let local_gens = gens.iter().map(|&g| local[g] as usize).collect();
        let labels = embedding.iter().map(|&g| self.label(g).to_string()).collect();
        let table = GroupTable::from_table(mul, m, local_gens, Some(labels))?;
        Ok((table, embedding))
    }
}
