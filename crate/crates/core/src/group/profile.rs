use super::element::GroupElement;
use super::subgroup::Subgroup;
use crate::error::{domain, Error, Result};

/// Largest type for which cosets are scanned element by element.
pub const PROFILE_CAP: usize = 24;

/// A coset `eK`, represented by its weight-then-lexicographic minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coset {
    subgroup: Subgroup,
    representative: GroupElement,
}

impl Coset {
    pub fn new(subgroup: &Subgroup, e: &GroupElement) -> Result<Self> {
        if e.context() != subgroup.context() {
            return domain("coset representative belongs to a different group");
        }
        let ctx = subgroup.context();
        let base = e.coord();
        let representative = subgroup
            .coords()
            .map(|k| ctx.from_coord(base ^ k))
            .min()
            .expect("subgroup is nonempty");
        Ok(Self {
            subgroup: subgroup.clone(),
            representative,
        })
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn representative(&self) -> GroupElement {
        self.representative
    }

    pub fn is_identity(&self) -> bool {
        self.representative.is_identity()
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        self.subgroup.reduce(e.coord()) == self.subgroup.reduce(self.representative.coord())
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        let ctx = self.subgroup.context();
        let base = self.representative.coord();
        let mut v: Vec<_> = self.subgroup.coords().map(|k| ctx.from_coord(base ^ k)).collect();
        v.sort();
        v
    }
}

/// All cosets of `k` in `H`, ordered by representative.
pub fn cosets(k: &Subgroup) -> Result<Vec<Coset>> {
    let ctx = k.context();
    if ctx.n() > PROFILE_CAP {
        return Err(Error::Capacity {
            what: format!("coset scan for type n = {}", ctx.n()),
            cap: PROFILE_CAP,
        });
    }
    let pivots: u64 = k.rows().iter().map(|r| r & r.wrapping_neg()).fold(0, |a, p| a | p);
    let free: Vec<u64> = (0..ctx.n())
        .map(|b| 1u64 << b)
        .filter(|b| pivots & b == 0)
        .collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for sel in 0u64..(1 << free.len()) {
        let v = free
            .iter()
            .enumerate()
            .filter(|(i, _)| sel >> i & 1 == 1)
            .fold(0, |acc, (_, b)| acc | b);
        out.push(Coset::new(k, &ctx.from_coord(v))?);
    }
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileRow {
    pub coset: Coset,
    /// Number of standard generators lying in the coset.
    pub generator_count: usize,
    /// Fixed points of the induced involution on `S/K`.
    pub fixed_points: u64,
}

/// Fixed-point data of `H/K` acting on `S/K` for a freely acting `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientProfile {
    pub subgroup: Subgroup,
    pub quotient_genus: i64,
    pub rows: Vec<ProfileRow>,
    /// An involution with `2g + 2` fixed points, if `H/K` has one.
    pub hyperelliptic_witness: Option<Coset>,
}

impl QuotientProfile {
    pub fn new(k: &Subgroup) -> Result<Self> {
        if !k.acts_freely() {
            return domain(format!("subgroup {k} does not act freely"));
        }
        let ctx = k.context();
        let n = ctx.n();
        let rank = k.rank();
        let quotient_genus = 1 + (ctx.ambient_genus() - 1) / (1i64 << rank);
        // each a_j fixes 2^{n-1} points; a free K of order 2^rank identifies them in orbits
        let per_generator = 1u64 << (n - 1 - rank);
        let gens = ctx.generators();
        let rows: Vec<ProfileRow> = cosets(k)?
            .into_iter()
            .map(|coset| {
                let generator_count = gens.iter().filter(|a| coset.contains(a)).count();
                ProfileRow {
                    coset,
                    generator_count,
                    fixed_points: generator_count as u64 * per_generator,
                }
            })
            .collect();
        let target = (2 * quotient_genus + 2) as u64;
        let hyperelliptic_witness = rows
            .iter()
            .find(|r| !r.coset.is_identity() && r.fixed_points == target)
            .map(|r| r.coset.clone());
        Ok(Self {
            subgroup: k.clone(),
            quotient_genus,
            rows,
            hyperelliptic_witness,
        })
    }

    pub fn nonidentity_rows(&self) -> impl Iterator<Item = &ProfileRow> {
        self.rows.iter().filter(|r| !r.coset.is_identity())
    }

    pub fn count_with_fixed_points(&self, fp: u64) -> usize {
        self.nonidentity_rows().filter(|r| r.fixed_points == fp).count()
    }
}

pub fn quotient_profile(k: &Subgroup) -> Result<QuotientProfile> {
    QuotientProfile::new(k)
}
