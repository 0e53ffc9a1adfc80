use std::cmp::Ordering;
use std::fmt;

use super::element::{GroupContext, GroupElement};
use crate::error::{domain, Result};

/// A subgroup of `H`, i.e. a `GF(2)`-subspace of `Z₂ⁿ`.
///
/// The basis is kept in reduced row echelon form over the coordinates that
/// avoid `a_{n+1}`: the pivot of a row is its lowest set bit, pivots increase
/// strictly and no pivot appears in another row. This form is unique per
/// subspace, so structural equality is subgroup equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    ctx: GroupContext,
    rows: Vec<u64>,
}

fn pivot(v: u64) -> u64 {
    v & v.wrapping_neg()
}

impl Subgroup {
    pub fn trivial(ctx: GroupContext) -> Self {
        Self { ctx, rows: Vec::new() }
    }

    /// Smallest subgroup containing `generators`.
    pub fn span(ctx: GroupContext, generators: &[GroupElement]) -> Result<Self> {
        let mut s = Self::trivial(ctx);
        for g in generators {
            s = s.adjoin(g)?;
        }
        Ok(s)
    }

    pub(crate) fn from_rows_unchecked(ctx: GroupContext, rows: Vec<u64>) -> Self {
        Self { ctx, rows }
    }

    /// `⟨self, e⟩`.
    pub fn adjoin(&self, e: &GroupElement) -> Result<Self> {
        if e.context() != self.ctx {
            return domain("generator belongs to a different group");
        }
        let v = self.reduce(e.coord());
        if v == 0 {
            return Ok(self.clone());
        }
        let p = pivot(v);
        let mut rows: Vec<u64> = self
            .rows
            .iter()
            .map(|&r| if r & p != 0 { r ^ v } else { r })
            .collect();
        rows.push(v);
        rows.sort_by_key(|&r| pivot(r));
        Ok(Self { ctx: self.ctx, rows })
    }

    pub fn join(&self, other: &Subgroup) -> Result<Self> {
        Self::span(self.ctx, &[self.basis(), other.basis()].concat())
    }

    pub fn context(&self) -> GroupContext {
        self.ctx
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn order(&self) -> u64 {
        1 << self.rows.len()
    }

    /// Echelon basis as group elements.
    pub fn basis(&self) -> Vec<GroupElement> {
        self.rows.iter().map(|&r| self.ctx.from_coord(r)).collect()
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Normal form of a coordinate vector modulo the subgroup; zero iff contained.
    pub(crate) fn reduce(&self, mut v: u64) -> u64 {
        for &r in &self.rows {
            if v & pivot(r) != 0 {
                v ^= r;
            }
        }
        v
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        e.context() == self.ctx && self.reduce(e.coord()) == 0
    }

    pub(crate) fn coords(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.order()).map(move |sel| {
            self.rows
                .iter()
                .enumerate()
                .filter(|(i, _)| sel >> i & 1 == 1)
                .fold(0, |acc, (_, r)| acc ^ r)
        })
    }

    /// All `2^rank` elements in canonical order, identity first.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out: Vec<_> = self.coords().map(|c| self.ctx.from_coord(c)).collect();
        out.sort();
        out
    }

    /// No nonidentity element is a standard generator.
    pub fn acts_freely(&self) -> bool {
        self.ctx.generators().iter().all(|a| !self.contains(a))
    }

    /// A minimal generating set chosen greedily in canonical element order;
    /// this is the form used for display, e.g. `⟨a1*a2, a1*a3⟩`.
    pub fn display_generators(&self) -> Vec<GroupElement> {
        let mut acc = Subgroup::trivial(self.ctx);
        let mut gens = Vec::new();
        for e in self.elements() {
            if acc.rank() == self.rank() {
                break;
            }
            if !acc.contains(&e) {
                acc = acc.adjoin(&e).expect("same context");
                gens.push(e);
            }
        }
        gens
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.ctx == other.ctx && self.rows.iter().all(|&r| other.reduce(r) == 0)
    }
}

impl Ord for Subgroup {
    /// Rank, then the sorted element lists compared lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.ctx
            .cmp(&other.ctx)
            .then(self.rank().cmp(&other.rank()))
            .then_with(|| self.elements().cmp(&other.elements()))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self
            .display_generators()
            .iter()
            .map(|e| e.to_string())
            .collect();
        write!(f, "<{}>", g.join(", "))
    }
}

/// Sort a list of subgroups into canonical order, caching element lists.
pub(crate) fn sort_subgroups(list: &mut Vec<Subgroup>) {
    let mut keyed: Vec<_> = list
        .drain(..)
        .map(|s| ((s.rank(), s.elements()), s))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    list.extend(keyed.into_iter().map(|(_, s)| s));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize) -> GroupContext {
        GroupContext::new(n).unwrap()
    }

    fn el(c: GroupContext, ix: &[usize]) -> GroupElement {
        c.element(ix).unwrap()
    }

    /// Closure by repeated multiplication, independent of the echelon code.
    fn brute_closure(c: GroupContext, gens: &[GroupElement]) -> Vec<GroupElement> {
        let mut set = vec![c.identity()];
        loop {
            let mut grew = false;
            for g in gens {
                for x in set.clone() {
                    let y = x.multiply(g).unwrap();
                    if !set.contains(&y) {
                        set.push(y);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        set.sort();
        set
    }

    #[test]
    fn span_examples() {
        let c = ctx(4);
        let s = Subgroup::span(c, &[el(c, &[1, 2]), el(c, &[2, 3])]).unwrap();
        assert_eq!(s.rank(), 2);
        let mut want = vec![c.identity(), el(c, &[1, 2]), el(c, &[2, 3]), el(c, &[1, 3])];
        want.sort();
        assert_eq!(s.elements(), want);

        let s = Subgroup::span(c, &[el(c, &[1, 2]), el(c, &[1, 2])]).unwrap();
        assert_eq!(s.rank(), 1);

        let gens = [el(c, &[1, 2]), el(c, &[1, 3]), el(c, &[1, 4]), el(c, &[1, 5])];
        let s = Subgroup::span(c, &gens).unwrap();
        assert_eq!(s.rank(), 4);
        assert!(s.contains(&el(c, &[5])));
        assert_eq!(s.elements(), brute_closure(c, &gens));
    }

    #[test]
    fn echelon_invariants() {
        let c = ctx(6);
        let gens = [el(c, &[1, 2, 3]), el(c, &[2, 5]), el(c, &[3, 4, 7]), el(c, &[1, 3, 5])];
        let s = Subgroup::span(c, &gens).unwrap();
        let rows = s.rows();
        for w in rows.windows(2) {
            assert!(pivot(w[0]) < pivot(w[1]));
        }
        for (i, &r) in rows.iter().enumerate() {
            for (j, &o) in rows.iter().enumerate() {
                if i != j {
                    assert_eq!(o & pivot(r), 0);
                }
            }
        }
        assert_eq!(s.elements(), brute_closure(c, &gens));
    }

    #[test]
    fn acts_freely_examples() {
        let c = ctx(4);
        let k1 = Subgroup::span(c, &[el(c, &[1, 2]), el(c, &[1, 3])]).unwrap();
        assert!(k1.acts_freely());
        assert!(!Subgroup::span(c, &[el(c, &[1])]).unwrap().acts_freely());
        let big = Subgroup::span(
            c,
            &[el(c, &[1, 2]), el(c, &[1, 3]), el(c, &[1, 4]), el(c, &[1, 5])],
        )
        .unwrap();
        assert!(!big.acts_freely());
    }

    #[test]
    fn display_uses_greedy_generators() {
        let c = ctx(4);
        let k = Subgroup::span(c, &[el(c, &[2, 3]), el(c, &[1, 3])]).unwrap();
        assert_eq!(k.to_string(), "<a1*a2, a1*a3>");
    }

    #[test]
    fn adjoin_rejects_foreign_element() {
        let s = Subgroup::trivial(ctx(4));
        assert!(s.adjoin(&ctx(5).identity()).is_err());
    }
}
