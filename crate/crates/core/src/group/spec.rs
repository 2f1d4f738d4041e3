//! Symbolic descriptions of groups, independent of any concrete table.
//!
//! A [`GroupSpec`] names a standard family member or a direct product of
//! them. Rendering and parsing round-trip; the CLI owns the parser, this
//! module owns the structure, rendering, and table construction.

use std::fmt;

use super::families;
use super::{Group, Limits};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `C<n>`, order `n`.
    Cyclic(u32),
    /// `D<n>`, order `2n`, `n >= 3`.
    Dihedral(u32),
    /// `S<n>`, order `n!`.
    Symmetric(u32),
    /// `A<n>`, order `n!/2`.
    Alternating(u32),
    /// `Dic<n>`, order `4n`, `n >= 2`; generalized quaternion for `n` a
    /// power of 2.
    Dicyclic(u32),
    /// `E<p>^<k>`, order `p^k`, `p` prime.
    ElemAbelian(u32, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Atom(Family),
    /// Direct product of two or more factors, in order.
    Product(Vec<GroupSpec>),
}

impl Family {
    /// Order of the group this family member would have, without building
    /// it. Parameters are not bounds-checked here.
    pub fn order(&self) -> u64 {
        match *self {
            Family::Cyclic(n) => u64::from(n),
            Family::Dihedral(n) => 2 * u64::from(n),
            Family::Symmetric(n) => factorial(n),
            Family::Alternating(n) => factorial(n).div_euclid(2).max(1),
            Family::Dicyclic(n) => 4 * u64::from(n),
            Family::ElemAbelian(p, k) => u64::from(p).saturating_pow(k),
        }
    }

    fn build(&self, limits: &Limits) -> Result<Group> {
        match *self {
            Family::Cyclic(n) => families::make_cyclic_limited(n, limits),
            Family::Dihedral(n) => families::make_dihedral_limited(n, limits),
            Family::Symmetric(n) => families::make_symmetric_limited(n, limits),
            Family::Alternating(n) => families::make_alternating_limited(n, limits),
            Family::Dicyclic(n) => families::make_dicyclic_limited(n, limits),
            Family::ElemAbelian(p, k) => families::make_elem_abelian_limited(p, k, limits),
        }
    }
}

impl GroupSpec {
    pub fn order(&self) -> u64 {
        match self {
            GroupSpec::Atom(f) => f.order(),
            GroupSpec::Product(fs) => fs
                .iter()
                .map(GroupSpec::order)
                .fold(1u64, u64::saturating_mul),
        }
    }

    pub fn build(&self) -> Result<Group> {
        self.build_with(&Limits::default())
    }

    pub fn build_with(&self, limits: &Limits) -> Result<Group> {
        match self {
            GroupSpec::Atom(f) => f.build(limits),
            GroupSpec::Product(fs) => {
                let mut fs = fs.iter();
                let first = fs
                    .next()
                    .ok_or_else(|| Error::Usage("empty product".into()))?;
                let mut acc = first.build_with(limits)?;
                for f in fs {
                    acc = families::direct_product_limited(&acc, &f.build_with(limits)?, limits)?;
                }
                Ok(acc)
            }
        }
    }
}

fn factorial(n: u32) -> u64 {
    (1..=u64::from(n)).fold(1u64, u64::saturating_mul)
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Cyclic(n) => write!(f, "C{n}"),
            Family::Dihedral(n) => write!(f, "D{n}"),
            Family::Symmetric(n) => write!(f, "S{n}"),
            Family::Alternating(n) => write!(f, "A{n}"),
            Family::Dicyclic(n) => write!(f, "Dic{n}"),
            Family::ElemAbelian(p, k) => write!(f, "E{p}^{k}"),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Atom(fam) => fam.fmt(f),
            GroupSpec::Product(fs) => {
                for (i, spec) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    spec.fmt(f)?;
                }
                Ok(())
            }
        }
    }
}
