//! Subgroup censuses: exhaustive sweeps over all subspaces of a given rank,
//! and the constructive families (pair, triple and full-rank subgroups and
//! their rank-`(n−1)` extensions).

use std::collections::BTreeSet;

use super::element::{GroupContext, GroupElement};
use super::subgroup::{sort_subgroups, Subgroup};
use crate::error::{domain, Error, Result};

/// Largest type swept exhaustively; `[9 choose 4]₂ ≈ 3.3·10⁶` subspaces.
pub const EXHAUSTIVE_CAP: usize = 9;

/// Every rank-`rank` subgroup acting freely, in canonical order.
///
/// Walks all reduced echelon matrices of the given rank: choose the pivot
/// columns, then fill the non-pivot columns to the right of each pivot.
pub fn enumerate_free_subgroups(ctx: GroupContext, rank: usize) -> Result<Vec<Subgroup>> {
    let n = ctx.n();
    if rank == 0 || rank > n {
        return domain(format!("rank {rank} outside 1..={n}"));
    }
    if n > EXHAUSTIVE_CAP {
        return Err(Error::Capacity {
            what: format!("exhaustive subgroup sweep for type n = {n}"),
            cap: EXHAUSTIVE_CAP,
        });
    }
    let gens: Vec<u64> = ctx.generators().iter().map(|a| a.coord()).collect();
    let mut out = Vec::new();
    for pivots in combinations(n, rank) {
        let pivot_mask: u64 = pivots.iter().fold(0, |m, &p| m | 1 << p);
        // free positions per row: above the pivot, not a pivot column
        let free: Vec<Vec<u64>> = pivots
            .iter()
            .map(|&p| {
                (p + 1..n)
                    .map(|b| 1u64 << b)
                    .filter(|b| pivot_mask & b == 0)
                    .collect()
            })
            .collect();
        let total_free: usize = free.iter().map(Vec::len).sum();
        for fill in 0u64..(1u64 << total_free) {
            let mut bit = 0;
            let rows: Vec<u64> = pivots
                .iter()
                .zip(&free)
                .map(|(&p, fr)| {
                    let mut r = 1u64 << p;
                    for &b in fr {
                        if fill >> bit & 1 == 1 {
                            r |= b;
                        }
                        bit += 1;
                    }
                    r
                })
                .collect();
            let k = Subgroup::from_rows_unchecked(ctx, rows);
            if gens.iter().all(|&g| k.reduce(g) != 0) {
                out.push(k);
            }
        }
    }
    sort_subgroups(&mut out);
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn check_index(ctx: GroupContext, j: usize) -> Result<()> {
    if j == 0 || j > ctx.generator_count() {
        return domain(format!(
            "branch index {j} outside 1..={}",
            ctx.generator_count()
        ));
    }
    Ok(())
}

/// Subgroup of all even products over the given indices.
pub fn even_subgroup(ctx: GroupContext, included: &[usize]) -> Result<Subgroup> {
    for &j in included {
        check_index(ctx, j)?;
    }
    let Some((&first, rest)) = included.split_first() else {
        return Ok(Subgroup::trivial(ctx));
    };
    let gens = rest
        .iter()
        .map(|&j| ctx.element(&[first, j]))
        .collect::<Result<Vec<GroupElement>>>()?;
    Subgroup::span(ctx, &gens)
}

fn complement(ctx: GroupContext, omitted: &[usize]) -> Vec<usize> {
    (1..=ctx.generator_count())
        .filter(|j| !omitted.contains(j))
        .collect()
}

/// The rank-`(n−2)` free subgroup determined by an omitted index pair.
pub fn pair_subgroup(ctx: GroupContext, p: usize, q: usize) -> Result<Subgroup> {
    check_index(ctx, p)?;
    check_index(ctx, q)?;
    if p == q {
        return domain(format!("omitted pair needs distinct indices, got {{{p}, {q}}}"));
    }
    even_subgroup(ctx, &complement(ctx, &[p, q]))
}

/// The rank-`(n−3)` free subgroup attached to a triple of branch indices.
pub fn triple_subgroup(ctx: GroupContext, triple: [usize; 3]) -> Result<Subgroup> {
    for &j in &triple {
        check_index(ctx, j)?;
    }
    let [a, b, c] = triple;
    if a == b || b == c || a == c {
        return domain(format!("triple {triple:?} has repeated indices"));
    }
    even_subgroup(ctx, &complement(ctx, &triple))
}

/// `⟨a₁a₂, …, a₁aₙ⟩`, the unique rank-`(n−1)` free subgroup for odd `n`.
pub fn full_rank_subgroup(ctx: GroupContext) -> Result<Subgroup> {
    if ctx.n() % 2 == 0 {
        return domain(format!(
            "n = {} is even: every rank-(n-1) subgroup acts non-freely",
            ctx.n()
        ));
    }
    even_subgroup(ctx, &(1..=ctx.n()).collect::<Vec<_>>())
}

/// Ranks `m` for which a free `Z₂ᵐ` can have hyperelliptic quotient.
pub fn hyperelliptic_rank_bound(ctx: GroupContext) -> BTreeSet<usize> {
    let n = ctx.n();
    let mut s: BTreeSet<usize> = [n - 3, n - 2].into_iter().collect();
    if n % 2 == 1 {
        s.insert(n - 1);
    }
    s
}

fn require_even(ctx: GroupContext) -> Result<()> {
    if ctx.n() % 2 == 1 {
        return domain(format!("n = {} must be even", ctx.n()));
    }
    Ok(())
}

/// All pairs `{p < q}` of branch indices.
pub fn index_pairs(ctx: GroupContext) -> Vec<(usize, usize)> {
    let m = ctx.generator_count();
    (1..=m)
        .flat_map(|p| (p + 1..=m).map(move |q| (p, q)))
        .collect()
}

pub fn index_triples(ctx: GroupContext) -> Vec<[usize; 3]> {
    let m = ctx.generator_count();
    let mut out = Vec::new();
    for a in 1..=m {
        for b in a + 1..=m {
            for c in b + 1..=m {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// The rank-`(n−1)` subgroups `⟨K, a_j⟩` with `K` a pair subgroup and `a_j`
/// one of its included generators (`n` even), deduplicated.
pub fn hyperelliptic_extensions(ctx: GroupContext) -> Result<Vec<Subgroup>> {
    require_even(ctx)?;
    let mut out: Vec<Subgroup> = Vec::new();
    for (p, q) in index_pairs(ctx) {
        let k = pair_subgroup(ctx, p, q)?;
        for j in complement(ctx, &[p, q]) {
            let l = k.adjoin(&ctx.generator(j)?)?;
            if !out.contains(&l) {
                out.push(l);
            }
        }
    }
    sort_subgroups(&mut out);
    Ok(out)
}

/// The rank-`(n−1)` subgroups `⟨K, a_p⟩` with `a_p` one of the two generators
/// omitted by the pair subgroup `K` (`n` even), deduplicated.
pub fn non_hyperelliptic_extensions(ctx: GroupContext) -> Result<Vec<Subgroup>> {
    require_even(ctx)?;
    let mut out: Vec<Subgroup> = Vec::new();
    for (p, q) in index_pairs(ctx) {
        let k = pair_subgroup(ctx, p, q)?;
        for r in [p, q] {
            let l = k.adjoin(&ctx.generator(r)?)?;
            if !out.contains(&l) {
                out.push(l);
            }
        }
    }
    sort_subgroups(&mut out);
    Ok(out)
}

/// The omitted pair `{p, q}` if `u` is a pair subgroup.
pub fn pair_form(u: &Subgroup) -> Option<(usize, usize)> {
    let ctx = u.context();
    if u.rank() + 2 != ctx.n() {
        return None;
    }
    index_pairs(ctx)
        .into_iter()
        .find(|&(p, q)| pair_subgroup(ctx, p, q).map(|k| &k == u).unwrap_or(false))
}

/// Whether `⟨U₁, a_r⟩ = ⟨U₂, a_r⟩` for pair subgroups `U₁, U₂` whose
/// included index sets both avoid `r`.
pub fn adjoined_spans_agree(u1: &Subgroup, u2: &Subgroup, r: usize) -> Result<bool> {
    let ctx = u1.context();
    if u2.context() != ctx {
        return domain("subgroups belong to different groups");
    }
    check_index(ctx, r)?;
    for u in [u1, u2] {
        let Some((p, q)) = pair_form(u) else {
            return domain(format!("{u} is not a pair subgroup"));
        };
        if r != p && r != q {
            return domain(format!("a{r} is among the included generators of {u}"));
        }
    }
    let a = ctx.generator(r)?;
    Ok(u1.adjoin(&a)? == u2.adjoin(&a)?)
}
