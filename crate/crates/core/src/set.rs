use std::fmt;

/// A subset of the element indices `0..order` of some group, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    order: usize,
    blocks: Vec<u64>,
}

impl ElementSet {
    pub fn empty(order: usize) -> Self {
        ElementSet {
            order,
            blocks: vec![0; order.div_ceil(64)],
        }
    }

    pub fn full(order: usize) -> Self {
        let mut s = ElementSet::empty(order);
        for i in 0..order {
            s.insert(i);
        }
        s
    }

    pub fn singleton(order: usize, i: usize) -> Self {
        let mut s = ElementSet::empty(order);
        s.insert(i);
        s
    }

    pub fn from_indices(order: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = ElementSet::empty(order);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Order of the owning group.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Returns whether `i` was newly inserted.
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.order, "index {i} outside 0..{}", self.order);
        let (b, m) = (i / 64, 1u64 << (i % 64));
        let fresh = self.blocks[b] & m == 0;
        self.blocks[b] |= m;
        fresh
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.order {
            self.blocks[i / 64] &= !(1u64 << (i % 64));
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.order && self.blocks[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.order
    }

    /// Members in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &block)| {
            let mut rest = block;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(bi * 64 + bit)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        debug_assert_eq!(self.order, other.order);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.order, other.order);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.order, other.order);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
    }

    pub fn complement(&self) -> ElementSet {
        let mut s = ElementSet::empty(self.order);
        for i in 0..self.order {
            if !self.contains(i) {
                s.insert(i);
            }
        }
        s
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
