//! Uniform nkm-families, the permutation action on them, and the
//! non-equivalent-representative sieve that collapses each permutation orbit
//! to a single family before the expensive share search runs.

use itertools::Itertools;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::setcode::{ElementId, SetCode, MAX_DOMAIN};

/// A natural uniform nkm-family: a lexicographically sorted, distinct list of
/// `m` sorted, distinct `k`-element lists over `{0, …, n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NkmList {
    sets: Vec<Vec<ElementId>>,
}

impl NkmList {
    /// Validates shape: sorted distinct inner lists of equal length, sorted
    /// distinct outer list, elements inside the supported domain.
    pub fn new(sets: Vec<Vec<ElementId>>) -> Result<Self> {
        for s in &sets {
            if !s.windows(2).all(|p| p[0] < p[1]) {
                return Err(Error::InvalidFamily(
                    "member sets must be sorted and distinct".into(),
                ));
            }
            if let Some(&e) = s.iter().find(|&&e| e >= MAX_DOMAIN) {
                return Err(Error::DomainTooLarge(e + 1));
            }
            if s.len() != sets[0].len() {
                return Err(Error::InvalidFamily(
                    "member sets must all have the same size".into(),
                ));
            }
        }
        if !sets.windows(2).all(|p| p[0] < p[1]) {
            return Err(Error::InvalidFamily(
                "the family must be sorted and distinct".into(),
            ));
        }
        Ok(NkmList { sets })
    }

    fn from_sorted(sets: Vec<Vec<ElementId>>) -> Self {
        debug_assert!(NkmList::new(sets.clone()).is_ok());
        NkmList { sets }
    }

    pub fn sets(&self) -> &[Vec<ElementId>] {
        &self.sets
    }

    pub fn member_count(&self) -> usize {
        self.sets.len()
    }

    pub fn to_family(&self) -> Result<Family> {
        Family::from_sets(&self.sets)
    }

    fn member_codes(&self) -> Result<Vec<SetCode>> {
        self.sets.iter().map(|s| SetCode::encode(s)).collect()
    }
}

/// A permutation of `{0, …, n-1}`; `mapping[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    mapping: Vec<ElementId>,
}

impl Permutation {
    pub fn identity(n: u32) -> Self {
        Permutation {
            mapping: (0..n).collect(),
        }
    }

    pub fn new(mapping: Vec<ElementId>) -> Result<Self> {
        let n = mapping.len();
        let mut hit = vec![false; n];
        for &v in &mapping {
            if (v as usize) >= n || hit[v as usize] {
                return Err(Error::InvalidPermutation(n));
            }
            hit[v as usize] = true;
        }
        Ok(Permutation { mapping })
    }

    pub fn degree(&self) -> u32 {
        self.mapping.len() as u32
    }

    pub fn mapping(&self) -> &[ElementId] {
        &self.mapping
    }

    pub fn apply(&self, e: ElementId) -> ElementId {
        self.mapping[e as usize]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.mapping.len()];
        for (i, &v) in self.mapping.iter().enumerate() {
            inv[v as usize] = i as ElementId;
        }
        Permutation { mapping: inv }
    }

    /// Image of a bitset under the permutation.
    pub fn apply_to_code(&self, a: SetCode) -> SetCode {
        let mut bits = 0u32;
        for e in a.decode() {
            bits |= 1 << self.mapping[e as usize];
        }
        SetCode::from_bits_unchecked(bits)
    }

    /// Image of a whole family under the permutation.
    pub fn apply_to_family(&self, f: &Family) -> Family {
        Family::from_codes(f.iter().map(|&a| self.apply_to_code(a)))
    }
}

/// All sorted `k`-element sublists of a sorted list, in lexicographic order.
pub fn combine<T: Clone>(l: &[T], k: usize) -> Vec<Vec<T>> {
    if k == 0 {
        return vec![vec![]];
    }
    if k > l.len() {
        return vec![];
    }
    let mut out = Vec::new();
    for (i, first) in l.iter().enumerate() {
        for rest in combine(&l[i + 1..], k - 1) {
            let mut sub = Vec::with_capacity(k);
            sub.push(first.clone());
            sub.extend(rest);
            out.push(sub);
        }
    }
    out
}

/// All natural uniform nkm-families for the given parameters, in
/// lexicographic order: every choice of `m` distinct `k`-element subsets of
/// `{0, …, n-1}`.
pub fn gen_families(n: u32, k: usize, m: usize) -> Vec<NkmList> {
    let base: Vec<ElementId> = (0..n).collect();
    combine(&combine(&base, k), m)
        .into_iter()
        .map(NkmList::from_sorted)
        .collect()
}

/// All `n!` permutations of `{0, …, n-1}` in lexicographic order.
pub fn all_permutations(n: u32) -> Result<Vec<Permutation>> {
    if n > 10 {
        return Err(Error::DomainTooLarge(n));
    }
    Ok((0..n)
        .permutations(n as usize)
        .map(|mapping| Permutation { mapping })
        .collect())
}

/// Sorted image of a sorted element list under `p`.
pub fn perm_set(a: &[ElementId], p: &Permutation) -> Vec<ElementId> {
    let mut img: Vec<ElementId> = a.iter().map(|&e| p.apply(e)).collect();
    img.sort_unstable();
    img
}

/// Image of an nkm-family under `p`, re-sorted into canonical form.
pub fn perm_family(f: &NkmList, p: &Permutation) -> NkmList {
    let mut sets: Vec<Vec<ElementId>> = f.sets.iter().map(|s| perm_set(s, p)).collect();
    sets.sort_unstable();
    NkmList::from_sorted(sets)
}

/// Non-equivalent representatives: repeatedly takes the head of the
/// remaining candidate list, removes its whole orbit under `perms`, and
/// keeps going until nothing is left. Every input family is equivalent to
/// exactly one output representative.
///
/// `perms` must contain the identity (it does whenever it is a full
/// permutation group), otherwise the head would survive its own sieving.
pub fn nef(candidates: &[NkmList], perms: &[Permutation]) -> Vec<NkmList> {
    let mut remaining = candidates.to_vec();
    let mut selected = Vec::new();
    while let Some(rep) = remaining.first().cloned() {
        let orbit: HashSet<NkmList> = perms.iter().map(|p| perm_family(&rep, p)).collect();
        let before = remaining.len();
        remaining.retain(|f| !orbit.contains(f));
        assert!(
            remaining.len() < before,
            "sieve made no progress; perms must contain the identity"
        );
        selected.push(rep);
    }
    // The recursion conses each representative onto its accumulator, so the
    // first one selected comes out last.
    selected.reverse();
    selected
}

fn four_triples(f: &NkmList) -> Result<Vec<SetCode>> {
    if f.member_count() != 4 || f.sets.iter().any(|s| s.len() != 3) {
        return Err(Error::ArityMismatch {
            want_sets: 4,
            want_size: 3,
        });
    }
    f.member_codes()
}

/// Whether some 3 of the 4 triples have a union of at most 5 elements, in
/// which case the family is already covered by the uniform-533 result.
pub fn check_533(f: &NkmList) -> Result<bool> {
    let codes = four_triples(f)?;
    Ok(combine(&codes, 3).into_iter().any(|three| {
        three
            .into_iter()
            .fold(SetCode::EMPTY, SetCode::union)
            .cardinality()
            <= 5
    }))
}

/// Whether the union of all 4 triples has at most 6 elements, in which case
/// the family is already covered by the uniform-634 result.
pub fn check_634(f: &NkmList) -> Result<bool> {
    let codes = four_triples(f)?;
    Ok(codes
        .into_iter()
        .fold(SetCode::EMPTY, SetCode::union)
        .cardinality()
        <= 6)
}
