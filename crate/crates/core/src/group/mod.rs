//! Combinatorics of the generalized Humbert group `H ≅ Z₂ⁿ`.

mod census;
mod element;
mod profile;
mod subgroup;

pub use census::{
    adjoined_spans_agree, enumerate_free_subgroups, even_subgroup, full_rank_subgroup,
    hyperelliptic_extensions, hyperelliptic_rank_bound, index_pairs, index_triples,
    non_hyperelliptic_extensions, pair_form, pair_subgroup, triple_subgroup, EXHAUSTIVE_CAP,
};
pub use element::{GroupContext, GroupElement, MAX_TYPE};
pub use profile::{cosets, quotient_profile, Coset, ProfileRow, QuotientProfile, PROFILE_CAP};
pub use subgroup::Subgroup;
