use std::cmp::Ordering;
use std::fmt;

use crate::error::{domain, Error, Result};

/// Largest supported type index; masks over `n + 1` generators fit in a `u64`
/// and the ambient genus stays well inside `i64`.
pub const MAX_TYPE: usize = 40;

/// The generalized Humbert group of type `n`, `H ≅ Z₂ⁿ`, presented by the
/// standard generators `a₁, …, a_{n+1}` subject to `a₁⋯a_{n+1} = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupContext {
    n: usize,
}

impl GroupContext {
    pub fn new(n: usize) -> Result<Self> {
        if n < 4 {
            return domain(format!("type n = {n} must be at least 4"));
        }
        if n > MAX_TYPE {
            return Err(Error::Capacity {
                what: format!("type n = {n}"),
                cap: MAX_TYPE,
            });
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generator_count(&self) -> usize {
        self.n + 1
    }

    pub fn group_order(&self) -> u64 {
        1u64 << self.n
    }

    /// Genus of the Humbert curve, `1 − 2ⁿ + (n+1)·2^{n−2}`.
    pub fn ambient_genus(&self) -> i64 {
        let n = self.n as i64;
        1 - (1i64 << n) + (n + 1) * (1i64 << (n - 2))
    }

    pub(crate) fn full_mask(&self) -> u64 {
        (1u64 << (self.n + 1)) - 1
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { ctx: *self, mask: 0 }
    }

    /// The standard generator `a_j`, `1 ≤ j ≤ n+1`.
    pub fn generator(&self, j: usize) -> Result<GroupElement> {
        self.element(&[j])
    }

    pub fn generators(&self) -> Vec<GroupElement> {
        (0..=self.n)
            .map(|b| GroupElement {
                ctx: *self,
                mask: 1 << b,
            })
            .collect()
    }

    /// Canonical representative of `∏_{j ∈ indices} a_j`. Repeated indices cancel.
    pub fn element(&self, indices: &[usize]) -> Result<GroupElement> {
        let mut mask = 0u64;
        for &j in indices {
            if j == 0 || j > self.n + 1 {
                return domain(format!(
                    "generator index {j} outside 1..={}",
                    self.n + 1
                ));
            }
            mask ^= 1 << (j - 1);
        }
        Ok(self.from_mask(mask))
    }

    pub(crate) fn from_mask(&self, mask: u64) -> GroupElement {
        GroupElement {
            ctx: *self,
            mask: canonicalize(self.n, mask & self.full_mask()),
        }
    }

    /// Element whose representative avoiding index `n+1` is `coord`.
    pub(crate) fn from_coord(&self, coord: u64) -> GroupElement {
        self.from_mask(coord)
    }

    /// All `2ⁿ` elements in canonical order.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut all: Vec<_> = (0..self.group_order())
            .map(|c| self.from_coord(c))
            .collect();
        all.sort();
        all
    }
}

fn canonicalize(n: usize, mask: u64) -> u64 {
    let total = n as u32 + 1;
    let w = mask.count_ones();
    if 2 * w < total || (2 * w == total && mask & (1 << n) == 0) {
        mask
    } else {
        mask ^ ((1u64 << (n + 1)) - 1)
    }
}

/// An element of `H`, stored as the canonical subset of generator indices:
/// of a subset and its complement, the one of smaller weight, ties broken
/// by excluding index `n+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    ctx: GroupContext,
    mask: u64,
}

impl GroupElement {
    pub fn context(&self) -> GroupContext {
        self.ctx
    }

    /// Bit `j−1` set iff `a_j` occurs in the canonical product.
    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn weight(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_identity(&self) -> bool {
        self.mask == 0
    }

    /// 1-based generator indices of the canonical product, ascending.
    pub fn indices(&self) -> Vec<usize> {
        (0..=self.ctx.n)
            .filter(|b| self.mask >> b & 1 == 1)
            .map(|b| b + 1)
            .collect()
    }

    /// Coordinates in `GF(2)ⁿ`: the representative that avoids `a_{n+1}`.
    pub(crate) fn coord(&self) -> u64 {
        if self.mask >> self.ctx.n & 1 == 1 {
            self.mask ^ self.ctx.full_mask()
        } else {
            self.mask
        }
    }

    pub fn multiply(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.ctx != other.ctx {
            return domain(format!(
                "cannot multiply elements of types {} and {}",
                self.ctx.n, other.ctx.n
            ));
        }
        Ok(self.ctx.from_mask(self.mask ^ other.mask))
    }

    /// Only the standard generators have fixed points on the curve.
    pub fn has_fixed_points(&self) -> Result<bool> {
        if self.is_identity() {
            return domain("fixed-point predicate undefined for identity");
        }
        Ok(self.weight() == 1)
    }
}

impl Ord for GroupElement {
    /// Weight first, then lexicographic on the ascending index lists.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ctx.n)
            .cmp(&other.ctx.n)
            .then(self.weight().cmp(&other.weight()))
            .then_with(|| {
                let diff = self.mask ^ other.mask;
                if diff == 0 {
                    Ordering::Equal
                } else if self.mask & diff & diff.wrapping_neg() != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            })
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.indices().iter().map(|j| format!("a{j}")).collect();
        f.write_str(&parts.join("*"))
    }
}
