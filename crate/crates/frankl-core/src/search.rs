//! The share-nonnegativity search.
//!
//! To certify that a candidate family `Fc` is an FC-family it suffices to
//! exhibit a weight function `w` under which every union-closed extension of
//! `Fc` has a non-negative family share. The search below decides exactly
//! that: it traverses all union-closed extensions, branching on the subsets
//! of `⋃Fc` whose share is negative (only those can drag a family share below
//! zero), and reports whether some extension with negative share exists.
//!
//! Two variants are provided. [`ssn_abstract`] transcribes the defining
//! recursion with set-semantics family operations and freshly recomputed
//! shares; it is the reference the optimized engine is tested against.
//! [`ssn_refined`] keeps the family share cached, looks all shares up in a
//! precomputed [`ShareTable`], maintains the current family in place with
//! undo, and applies two prunings:
//!
//! * bound prune — if the cached share plus the total share of the remaining
//!   candidates is already non-negative, no completion can go negative;
//! * membership prune — a candidate already inside the current family was
//!   absorbed by an earlier closure step, so including it changes nothing.
//!
//! Both prunings and the processing order of the candidate list are
//! correctness-neutral, which the differential tests exercise.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::family::{insert_close_additions, Family};
use crate::setcode::SetCode;
use crate::weights::{Share, ShareTable, WeightFn};

/// One entry of the candidate list `L`: a subset of `⋃Fc` with negative share.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NegEntry {
    pub code: SetCode,
    pub share: Share,
}

/// The pair carried through the refined recursion: the current family
/// together with its cached family share.
#[derive(Clone, Debug)]
pub struct SearchState {
    pub family: Family,
    pub cached_share: Share,
}

impl SearchState {
    pub fn empty() -> Self {
        SearchState {
            family: Family::new(),
            cached_share: 0,
        }
    }
}

/// Outcome of a search run.
///
/// `all_nonnegative = true` certifies the candidate (no union-closed
/// extension has negative share). Otherwise `witness` carries one extension
/// whose family share is negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub all_nonnegative: bool,
    pub witness: Option<Family>,
}

/// Search effort counters, reported per run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes_bound: u64,
    pub prunes_member: u64,
}

/// Processing order of the candidate list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LOrder {
    /// Most negative share first; ties by ascending code. The default: it
    /// tends to trip the bound prune earliest.
    MostNegativeFirst,
    /// Ascending code order.
    AscendingCode,
    /// Deterministic shuffle; used to test order independence.
    Shuffled { seed: u64 },
}

/// Knobs for differential testing; the defaults are what production runs use.
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub bound_prune: bool,
    pub membership_prune: bool,
    pub order: LOrder,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            bound_prune: true,
            membership_prune: true,
            order: LOrder::MostNegativeFirst,
        }
    }
}

/// All subsets of the table's domain with negative share, most negative
/// first (ties by ascending code), together with their total share.
pub fn negative_share_list(table: &ShareTable) -> (Vec<NegEntry>, Share) {
    let mut entries: Vec<NegEntry> = table
        .domain()
        .submasks()
        .into_iter()
        .filter_map(|code| {
            let share = table.share(code);
            (share < 0).then_some(NegEntry { code, share })
        })
        .collect();
    entries.sort_unstable_by_key(|e| (e.share, e.code));
    let total = entries.iter().map(|e| e.share).sum();
    (entries, total)
}

fn validate(fc: &Family, w: &WeightFn) -> Result<SetCode> {
    let x = fc.big_union();
    if !x.is_subset(w.domain()) {
        return Err(Error::InvalidWeight(
            "weight function is not defined on the whole family union".into(),
        ));
    }
    if !w.is_weight_function_on(x)? {
        return Err(Error::InvalidWeight(
            "no element of the family union has positive weight".into(),
        ));
    }
    Ok(x)
}

/// Reference search: the defining recursion, verbatim.
///
/// Returns `true` iff some union-closed extension of `fc` has a negative
/// family share under `w`. Every share is recomputed from scratch and the
/// family is rebuilt persistently at each inclusion step, so this is only
/// usable on small domains; its role is to anchor the refined engine.
pub fn ssn_abstract(fc: &Family, w: &WeightFn) -> Result<bool> {
    let x = validate(fc, w)?;
    let closed = fc.closure();
    let l: Vec<SetCode> = x
        .submasks()
        .into_iter()
        .filter(|&a| w.set_share(a, x).expect("submask of a checked domain") < 0)
        .collect();
    Ok(ssn_aux(&l, &Family::new(), &closed, w, x))
}

fn ssn_aux(l: &[SetCode], f_t: &Family, f_c: &Family, w: &WeightFn, x: SetCode) -> bool {
    let share_of =
        |a: SetCode| w.set_share(a, x).expect("submask of a checked domain");
    let family_share =
        |f: &Family| w.family_share(f, x).expect("members stay inside the domain");
    let Some((&h, t)) = l.split_first() else {
        return family_share(f_t) < 0;
    };
    let remaining: Share = l.iter().copied().map(share_of).sum();
    if family_share(f_t) + remaining >= 0 {
        return false;
    }
    if ssn_aux(t, f_t, f_c, w, x) {
        return true;
    }
    if f_t.contains(h) {
        return false;
    }
    ssn_aux(t, &f_t.insert_close_for(f_c, h), f_c, w, x)
}

/// Optimized search with cached shares, table lookups and in-place state.
pub fn ssn_refined(fc: &Family, w: &WeightFn) -> Result<Verdict> {
    ssn_with_options(fc, w, &SearchOptions::default()).map(|(verdict, _)| verdict)
}

/// [`ssn_refined`] plus effort counters.
pub fn ssn_refined_with_stats(fc: &Family, w: &WeightFn) -> Result<(Verdict, SearchStats)> {
    ssn_with_options(fc, w, &SearchOptions::default())
}

/// Refined search with explicit ordering and pruning knobs.
pub fn ssn_with_options(
    fc: &Family,
    w: &WeightFn,
    opts: &SearchOptions,
) -> Result<(Verdict, SearchStats)> {
    let x = validate(fc, w)?;
    let closed = fc.closure();
    let table = ShareTable::build(w, x)?;
    let (mut entries, total) = negative_share_list(&table);
    match opts.order {
        LOrder::MostNegativeFirst => {}
        LOrder::AscendingCode => entries.sort_unstable_by_key(|e| e.code),
        LOrder::Shuffled { seed } => {
            entries.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        }
    }
    let mut engine = Engine {
        entries,
        fc: closed.members().to_vec(),
        table: &table,
        opts,
        members: Vec::new(),
        present: vec![false; x.bits() as usize + 1],
        share: 0,
        stats: SearchStats::default(),
    };
    let verdict = engine.run(total);
    debug_assert!(engine.check_witness(&verdict, &closed, w, x));
    Ok((verdict, engine.stats))
}

/// One inclusion step of the refined recursion as a standalone operation:
/// insert `h` into the state's family, close against the family itself and
/// against `fc`, and advance the cached share by the table shares of the
/// genuinely added sets.
///
/// `fc` must be union closed (the search always passes a closure) and `h`
/// must not already be a member.
pub fn insert_close_shared(
    fc: &Family,
    h: SetCode,
    state: &SearchState,
    table: &ShareTable,
) -> SearchState {
    debug_assert!(!state.family.contains(h));
    let mut seen: HashSet<SetCode> = state.family.iter().copied().collect();
    let added = insert_close_additions(fc.members(), state.family.members(), h, |u| {
        seen.insert(u)
    });
    let delta: Share = added.iter().map(|&a| table.share(a)).sum();
    let members: Vec<SetCode> = added
        .iter()
        .chain(state.family.iter())
        .copied()
        .collect();
    let next = SearchState {
        family: Family::from_codes(members),
        cached_share: state.cached_share + delta,
    };
    debug_assert_eq!(
        next.cached_share,
        next.family.iter().map(|&a| table.share(a)).sum::<Share>()
    );
    next
}

/// Runs the full certification pipeline for one candidate: validates the
/// weight function, closes `fc`, builds the share table and searches.
///
/// `all_nonnegative = true` certifies that `fc` is an FC-family; `false`
/// only means this particular weight function fails to certify it.
pub fn verify_fc_candidate(fc: &Family, w: &WeightFn) -> Result<Verdict> {
    if fc.is_empty() {
        return Err(Error::EmptyFamily);
    }
    ssn_refined(fc, w)
}

enum Task {
    /// Explore the node at position `idx` with `rem` the total share of
    /// `entries[idx..]`.
    Visit { idx: usize, rem: Share },
    /// Skip branch finished without a hit; try including `entries[idx]`.
    Include { idx: usize, rem: Share },
    /// Backtrack the state to `len` members and cached share `share`.
    Undo { len: usize, share: Share },
}

struct Engine<'a> {
    entries: Vec<NegEntry>,
    fc: Vec<SetCode>,
    table: &'a ShareTable,
    opts: &'a SearchOptions,
    members: Vec<SetCode>,
    present: Vec<bool>,
    share: Share,
    stats: SearchStats,
}

impl Engine<'_> {
    /// Depth-first traversal with an explicit stack; the skip branch of each
    /// node is exhausted before the include branch, mirroring the recursion.
    fn run(&mut self, total: Share) -> Verdict {
        let mut stack = vec![Task::Visit { idx: 0, rem: total }];
        while let Some(task) = stack.pop() {
            match task {
                Task::Visit { idx, rem } => {
                    self.stats.nodes += 1;
                    if idx == self.entries.len() {
                        if self.share < 0 {
                            return Verdict {
                                all_nonnegative: false,
                                witness: Some(Family::from_codes(self.members.iter().copied())),
                            };
                        }
                        continue;
                    }
                    if self.opts.bound_prune && self.share + rem >= 0 {
                        self.stats.prunes_bound += 1;
                        continue;
                    }
                    let child_rem = rem - self.entries[idx].share;
                    stack.push(Task::Include { idx, rem: child_rem });
                    stack.push(Task::Visit { idx: idx + 1, rem: child_rem });
                }
                Task::Include { idx, rem } => {
                    let h = self.entries[idx].code;
                    // With the prune disabled an already-present candidate
                    // falls through; the step is a no-op and the subtree
                    // below repeats the skip branch.
                    if self.present[h.bits() as usize] && self.opts.membership_prune {
                        self.stats.prunes_member += 1;
                        continue;
                    }
                    let (prev_len, prev_share) = (self.members.len(), self.share);
                    self.apply_include(h);
                    stack.push(Task::Undo { len: prev_len, share: prev_share });
                    stack.push(Task::Visit { idx: idx + 1, rem });
                }
                Task::Undo { len, share } => {
                    for &a in &self.members[len..] {
                        self.present[a.bits() as usize] = false;
                    }
                    self.members.truncate(len);
                    self.share = share;
                }
            }
        }
        Verdict {
            all_nonnegative: true,
            witness: None,
        }
    }

    fn apply_include(&mut self, h: SetCode) {
        let present = &mut self.present;
        let added = insert_close_additions(&self.fc, &self.members, h, |u| {
            let slot = &mut present[u.bits() as usize];
            !std::mem::replace(slot, true)
        });
        for &a in &added {
            self.share += self.table.share(a);
        }
        self.members.extend_from_slice(&added);
        debug_assert_eq!(
            self.share,
            self.members.iter().map(|&a| self.table.share(a)).sum::<Share>(),
            "cached share diverged from the family"
        );
    }

    #[cfg(debug_assertions)]
    fn check_witness(&self, verdict: &Verdict, closed: &Family, w: &WeightFn, x: SetCode) -> bool {
        match &verdict.witness {
            None => verdict.all_nonnegative,
            Some(f) => {
                !verdict.all_nonnegative
                    && f.big_union().is_subset(x)
                    && f.is_union_closed_for(closed)
                    && w.family_share(f, x).expect("witness stays inside the domain") < 0
            }
        }
    }

    #[cfg(not(debug_assertions))]
    fn check_witness(&self, _: &Verdict, _: &Family, _: &WeightFn, _: SetCode) -> bool {
        true
    }
}
