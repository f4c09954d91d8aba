//! Text format for describing a group.
//!
//! ```text
//! # the symmetric group on three points
//! name S3
//! group perm
//! degree 3
//! gen (1 2 3)
//! gen (1 2)
//! ```
//!
//! or `group construct <family> <params...>` (see [`FamilySpec`]).
//! Permutations compose left to right: in `gen a` followed by `gen b`, the
//! product `ab` applies `a` first.

use std::fmt;

use crate::constructors::FamilySpec;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::table::{close_generators, GroupTable};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSource {
    Perm { degree: usize, gens: Vec<Permutation> },
    Construct(FamilySpec),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: Option<String>,
    pub source: GroupSource,
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let err = |line: usize, message: String| Error::Parse { line, message };
        let mut name = None;
        let mut kind: Option<(usize, &str)> = None;
        let mut family = None;
        let mut degree: Option<usize> = None;
        let mut gen_lines: Vec<(usize, &str)> = Vec::new();

        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            match key {
                "name" => {
                    if rest.is_empty() || rest.contains(char::is_whitespace) || rest.contains(',') {
                        return Err(err(line_no, "name must be a single token without commas".into()));
                    }
                    name = Some(rest.to_string());
                }
                "group" => {
                    if kind.is_some() {
                        return Err(err(line_no, "duplicate `group` line".into()));
                    }
                    let (k, params) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                    match k {
                        "perm" if params.trim().is_empty() => kind = Some((line_no, "perm")),
                        "construct" => {
                            let spec = FamilySpec::parse(params).map_err(|e| err(line_no, e.to_string()))?;
                            family = Some(spec);
                            kind = Some((line_no, "construct"));
                        }
                        _ => return Err(err(line_no, format!("expected `group perm` or `group construct`, got `{line}`"))),
                    }
                }
                "degree" => {
                    let d = rest
                        .parse::<usize>()
                        .ok()
                        .filter(|&d| d > 0)
                        .ok_or_else(|| err(line_no, format!("bad degree `{rest}`")))?;
                    degree = Some(d);
                }
                "gen" => gen_lines.push((line_no, rest)),
                other => return Err(err(line_no, format!("unknown directive `{other}`"))),
            }
        }

        let last_line = text.lines().count().max(1);
        let source = match kind {
            None => return Err(err(last_line, "missing `group` line".into())),
            Some((line_no, "construct")) => {
                if let Some(&(l, _)) = gen_lines.first() {
                    return Err(err(l, "`gen` is only allowed with `group perm`".into()));
                }
                if degree.is_some() {
                    return Err(err(line_no, "`degree` is only allowed with `group perm`".into()));
                }
                GroupSource::Construct(family.expect("set with kind"))
            }
            Some((line_no, _)) => {
                let degree = degree.ok_or_else(|| err(line_no, "`group perm` needs a `degree` line".into()))?;
                let gens = gen_lines
                    .iter()
                    .map(|&(l, g)| Permutation::parse(degree, g).map_err(|e| err(l, e.to_string())))
                    .collect::<Result<Vec<_>>>()?;
                GroupSource::Perm { degree, gens }
            }
        };
        Ok(GroupSpec { name, source })
    }

    pub fn build(&self, order_cap: usize) -> Result<GroupTable> {
        match &self.source {
            GroupSource::Perm { degree, gens } => {
                if gens.is_empty() {
                    close_generators(&[Permutation::identity(*degree)], order_cap)
                } else {
                    close_generators(gens, order_cap)
                }
            }
            GroupSource::Construct(family) => family.build(order_cap),
        }
    }

    pub fn family(&self) -> Option<&FamilySpec> {
        match &self.source {
            GroupSource::Construct(f) => Some(f),
            GroupSource::Perm { .. } => None,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            writeln!(f, "name {name}")?;
        }
        match &self.source {
            GroupSource::Perm { degree, gens } => {
                writeln!(f, "group perm")?;
                writeln!(f, "degree {degree}")?;
                for g in gens {
                    writeln!(f, "gen {g}")?;
                }
                Ok(())
            }
            GroupSource::Construct(family) => writeln!(f, "group construct {family}"),
        }
    }
}
