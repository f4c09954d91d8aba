//! Finite groups materialized as complete multiplication tables.

use std::collections::{HashMap, VecDeque};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::set::ElementSet;
use crate::word::Word;

/// Default bound on the number of elements a construction may produce.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Largest order representable with 16-bit table entries.
pub const MAX_ORDER: usize = u16::MAX as usize + 1;

/// A finite group with element 0 as identity and an `n × n` product table.
///
/// Tables are immutable once built; every constructor checks the Latin-square,
/// identity and inverse laws. Associativity is inherited from the construction
/// (permutation composition, product constructions) and can be audited with
/// [`GroupTable::check_associativity`].
#[derive(Clone)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    generators: Vec<usize>,
    words: Vec<Word>,
    labels: Vec<String>,
    perms: Option<Vec<Permutation>>,
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupTable")
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish_non_exhaustive()
    }
}

pub(crate) fn check_cap(order: usize, cap: usize) -> Result<()> {
    if order > cap.min(MAX_ORDER) {
        return Err(Error::CapExceeded { cap: cap.min(MAX_ORDER) });
    }
    Ok(())
}

/// Builds the group generated by `gens` under left-to-right composition.
///
/// Elements are numbered in breadth-first discovery order from the identity,
/// applying generators in input order, so each element's word is a shortest
/// positive word with ties broken by generator order.
pub fn close_generators(gens: &[Permutation], order_cap: usize) -> Result<GroupTable> {
    let degree = gens.first().map_or(1, Permutation::degree);
    if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
        return Err(Error::InvalidPermutation(format!(
            "generator {g} has degree {}, expected {degree}",
            g.degree()
        )));
    }
    let cap = order_cap.min(MAX_ORDER);

    let mut elements = vec![Permutation::identity(degree)];
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    index.insert(elements[0].key().to_vec(), 0);
    // right[a * k + j] = a * gens[j]
    let mut right: Vec<u16> = Vec::new();
    let mut i = 0;
    while i < elements.len() {
        for g in gens {
            let p = elements[i].then(g);
            let next = match index.get(p.key()) {
                Some(&j) => j,
                None => {
                    let j = elements.len();
                    if j + 1 > cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    index.insert(p.key().to_vec(), j);
                    elements.push(p);
                    j
                }
            };
            right.push(next as u16);
        }
        i += 1;
    }

    let n = elements.len();
    let k = gens.len();
    let generators: Vec<usize> = gens.iter().map(|g| index[g.key()]).collect();
    let words = bfs_words(n, &generators, |a, j| right[a * k + j] as usize)
        .expect("every element was reached from the generators");

    // Row a: mul[a][b] = mul[a][parent(b)] * gen, with parent(b) < b in BFS order.
    let parents = bfs_parents(n, &generators, |a, j| right[a * k + j] as usize);
    let mut mul = vec![0u16; n * n];
    for a in 0..n {
        let row = &mut mul[a * n..(a + 1) * n];
        row[0] = a as u16;
        for b in 1..n {
            let (pb, j) = parents[b];
            row[b] = right[row[pb] as usize * k + j];
        }
    }

    let labels = elements.iter().map(|p| p.to_string()).collect();
    GroupTable::assemble(mul, n, generators, Some(words), Some(labels), Some(elements))
}

fn bfs_parents(
    n: usize,
    generators: &[usize],
    step: impl Fn(usize, usize) -> usize,
) -> Vec<(usize, usize)> {
    let mut parent = vec![(usize::MAX, usize::MAX); n];
    parent[0] = (0, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(a) = queue.pop_front() {
        for j in 0..generators.len() {
            let b = step(a, j);
            if parent[b].0 == usize::MAX {
                parent[b] = (a, j);
                queue.push_back(b);
            }
        }
    }
    parent
}

/// Shortest positive generator words by breadth-first search; `None` if the
/// generators do not reach every element.
fn bfs_words(
    n: usize,
    generators: &[usize],
    step: impl Fn(usize, usize) -> usize,
) -> Option<Vec<Word>> {
    let mut words: Vec<Option<Word>> = vec![None; n];
    words[0] = Some(Word::identity());
    let mut queue = VecDeque::from([0usize]);
    while let Some(a) = queue.pop_front() {
        for j in 0..generators.len() {
            let b = step(a, j);
            if words[b].is_none() {
                let mut w = words[a].clone().expect("queued elements have words");
                w.push(j, 1);
                words[b] = Some(w);
                queue.push_back(b);
            }
        }
    }
    words.into_iter().collect()
}

impl GroupTable {
    /// Validates a raw row-major table and wraps it. `generators` must generate
    /// the whole group; labels default to the generator words.
    pub fn from_table(
        mul: Vec<u16>,
        order: usize,
        generators: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Result<GroupTable> {
        GroupTable::assemble(mul, order, generators, None, labels, None)
    }

    pub(crate) fn assemble(
        mul: Vec<u16>,
        order: usize,
        generators: Vec<usize>,
        words: Option<Vec<Word>>,
        labels: Option<Vec<String>>,
        perms: Option<Vec<Permutation>>,
    ) -> Result<GroupTable> {
        let n = order;
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidTable(format!("unsupported order {n}")));
        }
        if mul.len() != n * n {
            return Err(Error::InvalidTable("table is not n × n".into()));
        }
        if let Some(&g) = generators.iter().find(|&&g| g >= n) {
            return Err(Error::IndexOutOfRange { index: g, order: n });
        }
        validate_latin_identity(&mul, n)?;
        let mut inv = vec![0u16; n];
        for a in 0..n {
            let b = mul[a * n..(a + 1) * n]
                .iter()
                .position(|&c| c == 0)
                .expect("Latin rows contain the identity");
            if mul[b * n + a] != 0 {
                return Err(Error::InvalidTable(format!("element {a} has no two-sided inverse")));
            }
            inv[a] = b as u16;
        }
        let words = match words {
            Some(w) => w,
            None => bfs_words(n, &generators, |a, j| mul[a * n + generators[j]] as usize)
                .ok_or_else(|| Error::InvalidTable("generators do not generate the group".into()))?,
        };
        let labels = labels.unwrap_or_else(|| words.iter().map(Word::to_string).collect());
        Ok(GroupTable {
            order: n,
            mul,
            inv,
            generators,
            words,
            labels,
            perms,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `b⁻¹ a b`.
    #[inline]
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(b), a), b)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    #[inline]
    pub fn comm(&self, a: usize, b: usize) -> usize {
        self.mul(self.inv(a), self.conj(a, b))
    }

    /// Returns `index` if it names an element of this group.
    pub fn element(&self, index: usize) -> Result<usize> {
        if index < self.order {
            Ok(index)
        } else {
            Err(Error::IndexOutOfRange { index, order: self.order })
        }
    }

    pub fn pow(&self, a: usize, exponent: i64) -> usize {
        let base = if exponent < 0 { self.inv(a) } else { a };
        let mut e = exponent.unsigned_abs() % self.element_order(a) as u64;
        let (mut result, mut square) = (0, base);
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, square);
            }
            square = self.mul(square, square);
            e >>= 1;
        }
        result
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1, |acc, a| acc.lcm(&self.element_order(a)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Shortest generator word found at discovery time.
    pub fn word(&self, a: usize) -> &Word {
        &self.words[a]
    }

    /// Permutations behind each element, for groups built from permutation generators.
    pub fn permutations(&self) -> Option<&[Permutation]> {
        self.perms.as_deref()
    }

    pub fn eval_word(&self, word: &Word) -> Result<usize> {
        let mut x = 0;
        for &(g, e) in word.letters() {
            let gen = *self.generators.get(g).ok_or_else(|| Error::UnknownElement(word.to_string()))?;
            x = self.mul(x, self.pow(gen, e));
        }
        Ok(x)
    }

    /// Resolves an element written as an index, a label, cycle notation (for
    /// permutation groups) or a generator word.
    pub fn resolve(&self, text: &str) -> Result<usize> {
        let text = text.trim();
        if let Ok(i) = text.parse::<usize>() {
            return self.element(i);
        }
        if let Some(i) = self.labels.iter().position(|l| l == text) {
            return Ok(i);
        }
        if let Some(perms) = &self.perms {
            if let Ok(p) = Permutation::parse(perms[0].degree(), text) {
                return perms
                    .iter()
                    .position(|q| *q == p)
                    .ok_or_else(|| Error::UnknownElement(text.to_string()));
            }
        }
        Word::parse(text).and_then(|w| self.eval_word(&w))
    }

    pub fn labels_of(&self, set: &ElementSet) -> Vec<String> {
        set.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// Full `O(n³)` associativity audit.
    pub fn check_associativity(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.mul(a, b);
                (0..n).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
            })
        })
    }

    /// Re-checks the Latin-square, identity and inverse laws.
    pub fn check_laws(&self) -> bool {
        validate_latin_identity(&self.mul, self.order).is_ok()
            && (0..self.order).all(|a| self.mul(a, self.inv(a)) == 0 && self.mul(self.inv(a), a) == 0)
    }

    #[cfg(test)]
    pub(crate) fn raw_mul(&self) -> &[u16] {
        &self.mul
    }
}

fn validate_latin_identity(mul: &[u16], n: usize) -> Result<()> {
    for i in 0..n {
        if mul[i] as usize != i || mul[i * n] as usize != i {
            return Err(Error::InvalidTable("element 0 is not the identity".into()));
        }
    }
    let mut seen = vec![usize::MAX; n];
    for a in 0..n {
        for b in 0..n {
            let c = mul[a * n + b] as usize;
            if c >= n || seen[c] == a {
                return Err(Error::InvalidTable(format!("row {a} is not a permutation")));
            }
            seen[c] = a;
        }
    }
    seen.fill(usize::MAX);
    for b in 0..n {
        for a in 0..n {
            let c = mul[a * n + b] as usize;
            if seen[c] == b {
                return Err(Error::InvalidTable(format!("column {b} is not a permutation")));
            }
            seen[c] = b;
        }
    }
    Ok(())
}
