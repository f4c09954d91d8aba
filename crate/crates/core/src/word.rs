use std::fmt;

use crate::error::{Error, Result};

/// A product of generator powers, `g1^2*g3^-1`. Generator numbering in text is 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    /// Appends `generator^exponent`, merging with a trailing power of the same generator.
    pub fn push(&mut self, generator: usize, exponent: i64) {
        if exponent == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.0 == generator {
                last.1 += exponent;
                if last.1 == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((generator, exponent));
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of absolute exponents.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    /// Parses `e`, `g1^2*g2^-1` or the space-separated `g1^2 g2^-1`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let mut word = Word::identity();
        if text == "e" || text.is_empty() {
            return Ok(word);
        }
        let bad = || Error::UnknownElement(text.to_string());
        for token in text.split(|c: char| c == '*' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            let body = token.strip_prefix('g').ok_or_else(bad)?;
            let (index, exponent) = match body.split_once('^') {
                Some((i, e)) => (i, e.parse::<i64>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let index = index.parse::<usize>().map_err(|_| bad())?;
            if index == 0 {
                return Err(bad());
            }
            word.push(index - 1, exponent);
        }
        Ok(word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (i, &(g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "g{}", g + 1)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
