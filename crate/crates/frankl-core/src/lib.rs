//! Certification engine for FC-families of the union-closed sets conjecture.
//!
//! A family `Fc` is an FC-family when every union-closed family containing
//! it has an element in at least half of its member sets. Such families can
//! be certified by computation: find an integer weight function under which
//! every union-closed extension of `Fc` has a non-negative family share.
//! This crate provides the bitset set encoding, family and closure
//! operations, share tables, the pruned extension search, the permutation
//! sieve that collapses equivalent candidate families, and the brute-force
//! oracles the optimized paths are tested against.

pub mod error;
pub mod family;
pub mod oracle;
pub mod search;
pub mod setcode;
pub mod symmetry;
pub mod weights;

pub use error::{Error, Result};
pub use family::Family;
pub use search::{
    insert_close_shared, negative_share_list, ssn_abstract, ssn_refined, ssn_refined_with_stats,
    ssn_with_options, verify_fc_candidate, LOrder, NegEntry, SearchOptions, SearchState,
    SearchStats, Verdict,
};
pub use setcode::{ElementId, SetCode, MAX_DOMAIN};
pub use symmetry::{
    all_permutations, check_533, check_634, combine, gen_families, nef, perm_family, perm_set,
    NkmList, Permutation,
};
pub use weights::{Share, ShareTable, WeightFn, MAX_WEIGHT};
