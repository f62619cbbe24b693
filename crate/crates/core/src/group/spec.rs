//! The group spec mini-language: `Z:n`, `D:n`, `U:n`, `S:n`, `A:n`,
//! `EA:p^k`, and `x`-separated direct products such as `Z:3xZ:5`.

use std::fmt;
use std::str::FromStr;

use super::construct::*;
use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::numtheory;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Units(usize),
    Symmetric(usize),
    Alternating(usize),
    ElementaryAbelian { p: usize, k: u32 },
    Product(Vec<GroupSpec>),
}

impl GroupSpec {
    /// Group order, or `None` on overflow.
    pub fn order(&self) -> Option<u64> {
        fn factorial(n: usize) -> u64 {
            (1..=n as u64).product()
        }
        match *self {
            GroupSpec::Cyclic(n) => Some(n as u64),
            GroupSpec::Dihedral(n) => (n as u64).checked_mul(2),
            GroupSpec::Units(n) => numtheory::euler_phi(n as u64).ok(),
            GroupSpec::Symmetric(n) => Some(factorial(n)),
            GroupSpec::Alternating(n) => Some(factorial(n) / 2),
            GroupSpec::ElementaryAbelian { p, k } => (p as u64).checked_pow(k),
            GroupSpec::Product(ref parts) => parts.iter().try_fold(1u64, |acc, s| acc.checked_mul(s.order()?)),
        }
    }

    /// Builds the group, refusing anything larger than `max_order`.
    pub fn build(&self, max_order: usize) -> Result<FiniteGroup> {
        match self.order() {
            Some(o) if o <= max_order as u64 => {}
            Some(o) => return Err(Error::CapExceeded { what: "group order", size: o, cap: max_order as u64 }),
            None => return Err(Error::Overflow("group order")),
        }
        match *self {
            GroupSpec::Cyclic(n) => cyclic_group(n),
            GroupSpec::Dihedral(n) => dihedral_group(n),
            GroupSpec::Units(n) => units_group(n),
            GroupSpec::Symmetric(n) => symmetric_group(n),
            GroupSpec::Alternating(n) => alternating_group(n),
            GroupSpec::ElementaryAbelian { p, k } => elementary_abelian(p, k),
            GroupSpec::Product(ref parts) => {
                let mut iter = parts.iter();
                let first = iter.next().expect("products have at least two factors").build(max_order)?;
                iter.try_fold(first, |acc, s| direct_product(&acc, &s.build(max_order)?, max_order))
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D:{n}"),
            GroupSpec::Units(n) => write!(f, "U:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S:{n}"),
            GroupSpec::Alternating(n) => write!(f, "A:{n}"),
            GroupSpec::ElementaryAbelian { p, k } => write!(f, "EA:{p}^{k}"),
            GroupSpec::Product(parts) => {
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{part}")?;
                }
                Ok(())
            }
        }
    }
}

fn parse_atom(input: &str, atom: &str) -> Result<GroupSpec> {
    let fail = |reason: String| Error::Parse { input: input.to_string(), reason };
    let (kind, arg) = atom.split_once(':').ok_or_else(|| fail(format!("expected KIND:ARG, found {atom:?}")))?;
    let number = |s: &str| s.trim().parse::<usize>().map_err(|_| fail(format!("{s:?} is not a non-negative integer")));
    match kind.trim() {
        "Z" => Ok(GroupSpec::Cyclic(number(arg)?)),
        "D" => Ok(GroupSpec::Dihedral(number(arg)?)),
        "U" => Ok(GroupSpec::Units(number(arg)?)),
        "S" => Ok(GroupSpec::Symmetric(number(arg)?)),
        "A" => Ok(GroupSpec::Alternating(number(arg)?)),
        "EA" => {
            let (p, k) = arg.split_once('^').ok_or_else(|| fail(format!("expected p^k, found {arg:?}")))?;
            let k = u32::try_from(number(k)?).map_err(|_| fail("exponent too large".into()))?;
            Ok(GroupSpec::ElementaryAbelian { p: number(p)?, k })
        }
        other => Err(fail(format!("unknown group kind {other:?}"))),
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let mut parts = input.split('x').map(|atom| parse_atom(input, atom.trim())).collect::<Result<Vec<_>>>()?;
        if parts.len() == 1 {
            Ok(parts.pop().unwrap())
        } else {
            Ok(GroupSpec::Product(parts))
        }
    }
}
