//! Families of sets as distinct lists of set codes, with union-closure
//! predicates and the insert-and-close operations that maintain closure
//! incrementally.

use std::collections::HashSet;
use std::fmt;

use crate::error::Result;
use crate::setcode::{ElementId, SetCode};

/// Above this size membership tests go through a hash-set shadow instead of
/// scanning the member list.
const SHADOW_THRESHOLD: usize = 64;

/// A family of sets: a duplicate-free list of [`SetCode`]s.
///
/// Member order is kept for reproducible output but carries no meaning;
/// two families compare equal iff they are equal as sets of codes.
#[derive(Clone, Default)]
pub struct Family {
    members: Vec<SetCode>,
    shadow: Option<HashSet<SetCode>>,
}

impl Family {
    pub fn new() -> Self {
        Family::default()
    }

    /// Builds a family from codes, dropping duplicates (first occurrence wins).
    pub fn from_codes(codes: impl IntoIterator<Item = SetCode>) -> Self {
        let mut members = Vec::new();
        let mut seen = HashSet::new();
        for code in codes {
            if seen.insert(code) {
                members.push(code);
            }
        }
        Family::with_members(members)
    }

    /// Builds a family from explicit element lists.
    pub fn from_sets(sets: &[Vec<ElementId>]) -> Result<Self> {
        let codes = sets
            .iter()
            .map(|s| SetCode::encode(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Family::from_codes(codes))
    }

    /// `members` must already be duplicate-free.
    fn with_members(members: Vec<SetCode>) -> Self {
        let shadow = if members.len() > SHADOW_THRESHOLD {
            Some(members.iter().copied().collect())
        } else {
            None
        };
        Family { members, shadow }
    }

    pub fn members(&self) -> &[SetCode] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SetCode> {
        self.members.iter()
    }

    pub fn contains(&self, a: SetCode) -> bool {
        match &self.shadow {
            Some(s) => s.contains(&a),
            None => self.members.contains(&a),
        }
    }

    /// Adds one set, prepending it unless it is already present.
    pub fn add_set(&self, a: SetCode) -> Family {
        if self.contains(a) {
            return self.clone();
        }
        let mut members = Vec::with_capacity(self.members.len() + 1);
        members.push(a);
        members.extend_from_slice(&self.members);
        Family::with_members(members)
    }

    /// Union of two families as sets of codes.
    pub fn family_union(&self, other: &Family) -> Family {
        other
            .iter()
            .fold(self.clone(), |acc, &code| acc.add_set(code))
    }

    /// `∀A,B ∈ self: A ∪ B ∈ self`.
    pub fn is_union_closed(&self) -> bool {
        self.members.iter().enumerate().all(|(i, &a)| {
            self.members[i..]
                .iter()
                .all(|&b| self.contains(a.union(b)))
        })
    }

    /// Union closed, and also absorbs unions with every member of `fc`.
    pub fn is_union_closed_for(&self, fc: &Family) -> bool {
        self.is_union_closed()
            && self
                .members
                .iter()
                .all(|&a| fc.iter().all(|&b| self.contains(a.union(b))))
    }

    /// Inserts `a` and restores union closure.
    pub fn insert_close(&self, a: SetCode) -> Family {
        self.insert_close_for(&Family::new(), a)
    }

    /// Inserts `a`, restoring closure both internally and against `fc`.
    ///
    /// The result is union closed for `fc` whenever `self` is and `fc` is
    /// itself union closed (the only way the search ever calls this).
    pub fn insert_close_for(&self, fc: &Family, a: SetCode) -> Family {
        let mut seen: HashSet<SetCode> = self.members.iter().copied().collect();
        let added = insert_close_additions(fc.members(), &self.members, a, |u| seen.insert(u));
        if added.is_empty() {
            return self.clone();
        }
        let mut members = added;
        members.extend_from_slice(&self.members);
        Family::with_members(members)
    }

    /// The minimal union-closed superfamily, built by folding insert-and-close.
    pub fn closure(&self) -> Family {
        self.members
            .iter()
            .fold(Family::new(), |acc, &a| acc.insert_close(a))
    }

    /// Union of all members; the empty set for an empty family.
    pub fn big_union(&self) -> SetCode {
        self.members
            .iter()
            .fold(SetCode::EMPTY, |acc, &a| acc.union(a))
    }

    /// Members in ascending code order, the canonical form used for equality.
    pub fn canonical_members(&self) -> Vec<SetCode> {
        let mut sorted = self.members.clone();
        sorted.sort_unstable();
        sorted
    }

    /// Decoded members as element lists, in ascending code order.
    pub fn to_sets(&self) -> Vec<Vec<ElementId>> {
        self.canonical_members()
            .into_iter()
            .map(SetCode::decode)
            .collect()
    }
}

impl PartialEq for Family {
    fn eq(&self, other: &Self) -> bool {
        self.canonical_members() == other.canonical_members()
    }
}

impl Eq for Family {}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.iter()).finish()
    }
}

impl FromIterator<SetCode> for Family {
    fn from_iter<I: IntoIterator<Item = SetCode>>(iter: I) -> Self {
        Family::from_codes(iter)
    }
}

/// Sets genuinely added when inserting `h` into `family` and closing against
/// `family` and `fc`: the duplicate-free, not-already-present part of
/// `[h] ++ [h ∪ A | A ∈ family] ++ [h ∪ A | A ∈ fc]`, in that order.
///
/// `try_mark(u)` must return `true` exactly when `u` is neither in the family
/// nor previously marked, and record `u` as present from then on. Both the
/// persistent family operation above and the search engine's in-place state
/// funnel through this one definition.
pub(crate) fn insert_close_additions(
    fc: &[SetCode],
    family: &[SetCode],
    h: SetCode,
    mut try_mark: impl FnMut(SetCode) -> bool,
) -> Vec<SetCode> {
    let mut added = Vec::new();
    if try_mark(h) {
        added.push(h);
    }
    for &b in family {
        let u = h.union(b);
        if try_mark(u) {
            added.push(u);
        }
    }
    for &b in fc {
        let u = h.union(b);
        if try_mark(u) {
            added.push(u);
        }
    }
    added
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(bits: &[u32]) -> Family {
        Family::from_codes(bits.iter().map(|&b| SetCode::from_bits(b).unwrap()))
    }

    fn code(bits: u32) -> SetCode {
        SetCode::from_bits(bits).unwrap()
    }

    #[test]
    fn add_set_prepends_when_absent() {
        let f = fam(&[6, 7]).add_set(code(3));
        assert_eq!(f.members(), &[code(3), code(6), code(7)]);
        let same = fam(&[6, 7]).add_set(code(6));
        assert_eq!(same, fam(&[6, 7]));
        assert_eq!(Family::new().add_set(SetCode::EMPTY).members(), &[code(0)]);
    }

    #[test]
    fn family_union_examples() {
        assert_eq!(fam(&[3]).family_union(&fam(&[6, 7])), fam(&[3, 6, 7]));
        let f = fam(&[1, 5]);
        assert_eq!(f.family_union(&Family::new()), f);
        assert_eq!(f.family_union(&f), f);
    }

    #[test]
    fn union_closed_examples() {
        assert!(fam(&[3, 6, 7]).is_union_closed());
        assert!(!fam(&[3, 6]).is_union_closed());
        assert!(Family::new().is_union_closed());
    }

    #[test]
    fn union_closed_for_examples() {
        assert!(Family::new().is_union_closed_for(&fam(&[1, 2, 7])));
        assert!(fam(&[1]).is_union_closed_for(&fam(&[1])));
        assert!(!fam(&[2]).is_union_closed_for(&fam(&[1])));
    }

    #[test]
    fn insert_close_examples() {
        assert_eq!(Family::new().insert_close(code(3)), fam(&[3]));
        assert_eq!(fam(&[6]).insert_close(code(1)), fam(&[1, 6, 7]));
        let closed = fam(&[3, 6, 7]);
        assert_eq!(closed.insert_close(code(6)), closed);
    }

    #[test]
    fn insert_close_for_examples() {
        assert_eq!(
            Family::new().insert_close_for(&fam(&[1]), code(2)),
            fam(&[2, 3])
        );
        let closed = fam(&[3, 6, 7]);
        assert_eq!(closed.insert_close_for(&fam(&[3]), code(7)), closed);
        assert_eq!(
            fam(&[6]).insert_close_for(&Family::new(), code(1)),
            fam(&[6]).insert_close(code(1))
        );
    }

    #[test]
    fn closure_examples() {
        assert_eq!(fam(&[3, 6]).closure(), fam(&[3, 6, 7]));
        assert_eq!(Family::new().closure(), Family::new());
        assert_eq!(fam(&[1, 2, 4]).closure(), fam(&[1, 2, 3, 4, 5, 6, 7]));
    }

    #[test]
    fn closure_result_is_closed_and_contains_input() {
        let f = fam(&[9, 18, 5]);
        let c = f.closure();
        assert!(c.is_union_closed());
        assert!(f.iter().all(|&a| c.contains(a)));
    }

    #[test]
    fn big_union_examples() {
        assert_eq!(fam(&[3, 6, 7]).big_union(), code(7));
        assert_eq!(Family::new().big_union(), SetCode::EMPTY);
        assert_eq!(fam(&[5]).big_union(), code(5));
    }

    #[test]
    fn equality_ignores_order_and_duplicates() {
        assert_eq!(fam(&[7, 3, 6]), fam(&[3, 6, 7]));
        assert_eq!(fam(&[3, 3, 6]), fam(&[6, 3]));
        assert_ne!(fam(&[3]), fam(&[3, 6]));
    }

    #[test]
    fn shadow_membership_matches_scan() {
        let big: Vec<SetCode> = (0..200).map(|b| SetCode::from_bits(b).unwrap()).collect();
        let f = Family::from_codes(big);
        assert_eq!(f.len(), 200);
        assert!(f.contains(code(150)));
        assert!(!f.contains(code(300)));
    }
}
