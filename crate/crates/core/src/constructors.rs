//! Named group families.
//!
//! Families are written as a name followed by integer parameters, e.g.
//! `inversion_extension 3 2` or `frobenius 7 3 2`. `direct_power <s> <family>`
//! takes a nested family, and families joined by `x` form a direct product:
//! `symmetric 3 x cyclic 2`.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::product::{direct_power, direct_product, semidirect_product, Action};
use crate::set::ElementSet;
use crate::table::{close_generators, GroupTable};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Cyclic(usize),
    ElementaryAbelian { p: usize, rank: usize },
    /// Symmetries of a regular `n`-gon, order `2n`.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
    /// `(C_p)^rank ⋊ C_2` with the generator of `C_2` inverting every element.
    InversionExtension { p: usize, rank: usize },
    /// `C_p ⋊ C_q` with the generator of `C_q` acting as `u ↦ u^t`.
    Frobenius { p: usize, q: usize, t: usize },
    DirectPower { base: Box<FamilySpec>, copies: usize },
    DirectProduct(Vec<FamilySpec>),
}

pub const FAMILY_NAMES: &[&str] = &[
    "cyclic",
    "elementary_abelian",
    "dihedral",
    "symmetric",
    "alternating",
    "quaternion8",
    "inversion_extension",
    "frobenius",
    "direct_power",
];

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn pow_mod(base: usize, exp: usize, m: usize) -> usize {
    (0..exp).fold(1 % m, |acc, _| acc * base % m)
}

impl FamilySpec {
    /// Parses whitespace-separated tokens.
    pub fn parse(text: &str) -> Result<Self> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let mut factors = Vec::new();
        let mut pos = 0;
        loop {
            let (family, next) = parse_one(&tokens, pos)?;
            factors.push(family);
            pos = next;
            match tokens.get(pos) {
                None => break,
                Some(&"x") => pos += 1,
                Some(t) => return Err(Error::params("family", format!("unexpected token `{t}`"))),
            }
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            FamilySpec::DirectProduct(factors)
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Cyclic(_) => "cyclic",
            FamilySpec::ElementaryAbelian { .. } => "elementary_abelian",
            FamilySpec::Dihedral(_) => "dihedral",
            FamilySpec::Symmetric(_) => "symmetric",
            FamilySpec::Alternating(_) => "alternating",
            FamilySpec::Quaternion8 => "quaternion8",
            FamilySpec::InversionExtension { .. } => "inversion_extension",
            FamilySpec::Frobenius { .. } => "frobenius",
            FamilySpec::DirectPower { .. } => "direct_power",
            FamilySpec::DirectProduct(_) => "direct_product",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |reason: String| Err(Error::params(self.name(), reason));
        match *self {
            FamilySpec::Cyclic(n) if n == 0 => fail("n must be at least 1".into()),
            FamilySpec::ElementaryAbelian { p, rank } => {
                if !is_prime(p) {
                    fail(format!("{p} is not prime"))
                } else if rank == 0 {
                    fail("rank must be at least 1".into())
                } else {
                    Ok(())
                }
            }
            FamilySpec::Dihedral(n) if n < 3 => fail(format!("n = {n} must be at least 3")),
            FamilySpec::Symmetric(0) | FamilySpec::Alternating(0) => fail("degree must be at least 1".into()),
            FamilySpec::InversionExtension { p, rank } => {
                if !is_prime(p) || p == 2 {
                    fail(format!("p = {p} must be an odd prime"))
                } else if rank == 0 {
                    fail("rank must be at least 1".into())
                } else {
                    Ok(())
                }
            }
            FamilySpec::Frobenius { p, q, t } => {
                if !is_prime(p) {
                    fail(format!("p = {p} is not prime"))
                } else if q < 2 {
                    fail(format!("q = {q} must be at least 2"))
                } else if p % q != 1 {
                    fail(format!("p ≡ 1 (mod q) fails: {p} mod {q} = {}", p % q))
                } else if pow_mod(t, q, p) != 1 {
                    fail(format!("t^q ≡ 1 (mod p) fails: {t}^{q} mod {p} = {}", pow_mod(t, q, p)))
                } else if t % p == 1 {
                    fail(format!("t ≢ 1 (mod p) fails: {t} mod {p} = 1"))
                } else {
                    Ok(())
                }
            }
            FamilySpec::DirectPower { ref base, copies } => {
                if copies == 0 {
                    fail("number of copies must be at least 1".into())
                } else {
                    base.validate()
                }
            }
            FamilySpec::DirectProduct(ref factors) => factors.iter().try_for_each(FamilySpec::validate),
            _ => Ok(()),
        }
    }

    pub fn build(&self, order_cap: usize) -> Result<GroupTable> {
        self.validate()?;
        let perms = |d: usize, cycles: &[&str]| -> Vec<Permutation> {
            cycles.iter().map(|c| Permutation::parse(d, c).expect("well-formed cycle")).collect()
        };
        match *self {
            FamilySpec::Cyclic(n) => close_generators(&[n_cycle(1, n, n)], order_cap),
            FamilySpec::ElementaryAbelian { p, rank } => {
                direct_power(&FamilySpec::Cyclic(p).build(order_cap)?, rank, order_cap)
            }
            FamilySpec::Dihedral(n) => {
                let cycles: Vec<Vec<usize>> = (1..=n / 2).map(|i| vec![i, n + 1 - i]).collect();
                let reflection = Permutation::from_cycles(n, &cycles)?;
                close_generators(&[n_cycle(1, n, n), reflection], order_cap)
            }
            FamilySpec::Symmetric(d) => match d {
                1 => close_generators(&[Permutation::identity(1)], order_cap),
                2 => close_generators(&perms(2, &["(1 2)"]), order_cap),
                _ => close_generators(&[n_cycle(1, d, d), Permutation::parse(d, "(1 2)")?], order_cap),
            },
            FamilySpec::Alternating(d) => match d {
                1 | 2 => close_generators(&[Permutation::identity(d)], order_cap),
                3 => close_generators(&perms(3, &["(1 2 3)"]), order_cap),
                _ => {
                    let long = if d % 2 == 1 { n_cycle(1, d, d) } else { n_cycle(2, d, d) };
                    close_generators(&[Permutation::parse(d, "(1 2 3)")?, long], order_cap)
                }
            },
            FamilySpec::Quaternion8 => {
                close_generators(&perms(8, &["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"]), order_cap)
            }
            FamilySpec::InversionExtension { p, rank } => {
                let torsion = FamilySpec::ElementaryAbelian { p, rank }.build(order_cap)?;
                let c2 = FamilySpec::Cyclic(2).build(order_cap)?;
                let action: Action = vec![
                    (0..torsion.order()).collect(),
                    (0..torsion.order()).map(|u| torsion.inv(u)).collect(),
                ];
                semidirect_product(&torsion, &c2, &action, order_cap)
            }
            FamilySpec::Frobenius { p, q, t } => {
                // In a cyclic table built from one cycle, index j is the j-th power.
                let kernel = FamilySpec::Cyclic(p).build(order_cap)?;
                let complement = FamilySpec::Cyclic(q).build(order_cap)?;
                let action: Action = (0..q)
                    .map(|i| {
                        let s = pow_mod(t, i, p);
                        (0..p).map(|j| j * s % p).collect()
                    })
                    .collect();
                semidirect_product(&kernel, &complement, &action, order_cap)
            }
            FamilySpec::DirectPower { ref base, copies } => direct_power(&base.build(order_cap)?, copies, order_cap),
            FamilySpec::DirectProduct(ref factors) => {
                let mut iter = factors.iter();
                let first = iter
                    .next()
                    .ok_or_else(|| Error::params("direct_product", "no factors"))?
                    .build(order_cap)?;
                iter.try_fold(first, |acc, f| direct_product(&acc, &f.build(order_cap)?, order_cap))
            }
        }
    }

    /// For the semidirect families, the abelian normal part `V` and the index
    /// of the acting generator `a` in the built table.
    pub fn semidirect_parts(&self, table: &GroupTable) -> Option<(ElementSet, usize)> {
        let acting_order = match *self {
            FamilySpec::InversionExtension { .. } => 2,
            FamilySpec::Frobenius { q, .. } => q,
            _ => return None,
        };
        let n = table.order();
        let kernel = ElementSet::from_indices(n, (0..n).step_by(acting_order));
        Some((kernel, 1))
    }
}

fn n_cycle(from: usize, to: usize, degree: usize) -> Permutation {
    let cycle: Vec<usize> = (from..=to).collect();
    let cycles = if cycle.len() > 1 { vec![cycle] } else { vec![] };
    Permutation::from_cycles(degree, &cycles).expect("points lie in 1..=degree")
}

fn parse_one(tokens: &[&str], pos: usize) -> Result<(FamilySpec, usize)> {
    let name = *tokens
        .get(pos)
        .ok_or_else(|| Error::params("family", "missing family name"))?;
    let int = |i: usize| -> Result<usize> {
        let t = tokens
            .get(pos + i)
            .ok_or_else(|| Error::params(name, format!("missing parameter {i}")))?;
        t.parse()
            .map_err(|_| Error::params(name, format!("parameter `{t}` is not a non-negative integer")))
    };
    let (family, used) = match name {
        "cyclic" => (FamilySpec::Cyclic(int(1)?), 1),
        "elementary_abelian" => (FamilySpec::ElementaryAbelian { p: int(1)?, rank: int(2)? }, 2),
        "dihedral" => (FamilySpec::Dihedral(int(1)?), 1),
        "symmetric" => (FamilySpec::Symmetric(int(1)?), 1),
        "alternating" => (FamilySpec::Alternating(int(1)?), 1),
        "quaternion8" => (FamilySpec::Quaternion8, 0),
        "inversion_extension" => (FamilySpec::InversionExtension { p: int(1)?, rank: int(2)? }, 2),
        "frobenius" => (FamilySpec::Frobenius { p: int(1)?, q: int(2)?, t: int(3)? }, 3),
        "direct_power" => {
            let copies = int(1)?;
            let (base, next) = parse_one(tokens, pos + 2)?;
            return Ok((FamilySpec::DirectPower { base: Box::new(base), copies }, next));
        }
        other => return Err(Error::params("family", format!("unknown family `{other}`"))),
    };
    Ok((family, pos + 1 + used))
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cyclic(n) | FamilySpec::Dihedral(n) | FamilySpec::Symmetric(n) | FamilySpec::Alternating(n) => {
                write!(f, "{} {n}", self.name())
            }
            FamilySpec::ElementaryAbelian { p, rank } | FamilySpec::InversionExtension { p, rank } => {
                write!(f, "{} {p} {rank}", self.name())
            }
            FamilySpec::Quaternion8 => f.write_str("quaternion8"),
            FamilySpec::Frobenius { p, q, t } => write!(f, "frobenius {p} {q} {t}"),
            FamilySpec::DirectPower { base, copies } => write!(f, "direct_power {copies} {base}"),
            FamilySpec::DirectProduct(factors) => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    write!(f, "{factor}")?;
                }
                Ok(())
            }
        }
    }
}
