//! Permutations of `{1..degree}` with left-to-right composition.
//!
//! `a.then(&b)` maps a point `i` to `b(a(i))`, so products read in the order
//! the factors are applied. Commutator values depend on this choice.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images; point i (1-based) maps to image[i - 1] + 1.
    image: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            image: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let mut seen = vec![false; degree];
        let mut image = Vec::with_capacity(degree);
        for (i, &p) in images.iter().enumerate() {
            if p == 0 || p > degree {
                return Err(Error::InvalidPermutation(format!(
                    "image {p} of point {} is outside 1..{degree}",
                    i + 1
                )));
            }
            if std::mem::replace(&mut seen[p - 1], true) {
                return Err(Error::InvalidPermutation(format!("point {p} appears twice")));
            }
            image.push((p - 1) as u32);
        }
        Ok(Permutation { image })
    }

    /// Builds a permutation of the given degree from disjoint-or-not cycles of
    /// 1-based points. Cycles are composed left to right.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let mut result = Permutation::identity(degree);
        for cycle in cycles {
            let mut seen = vec![false; degree];
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} is outside 1..{degree}"
                    )));
                }
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} repeated inside one cycle"
                    )));
                }
            }
            let mut step = Permutation::identity(degree);
            for (i, &p) in cycle.iter().enumerate() {
                let q = cycle[(i + 1) % cycle.len()];
                step.image[p - 1] = (q - 1) as u32;
            }
            result = result.then(&step);
        }
        Ok(result)
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)`. `e` and `()` denote the identity.
    pub fn parse(degree: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "e" {
            return Permutation::from_cycles(degree, &[]);
        }
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::InvalidPermutation(format!("expected `(` in `{text}`")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in `{text}`")))?;
            let points = open[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad point `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = open[close + 1..].trim_start();
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// Image of the 1-based point `p`.
    pub fn apply(&self, p: usize) -> usize {
        self.image[p - 1] as usize + 1
    }

    /// Apply `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            image: self.image.iter().map(|&i| other.image[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0u32; self.degree()];
        for (i, &j) in self.image.iter().enumerate() {
            image[j as usize] = i as u32;
        }
        Permutation { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.image[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.image[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub(crate) fn key(&self) -> &[u32] {
        &self.image
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("e");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}
