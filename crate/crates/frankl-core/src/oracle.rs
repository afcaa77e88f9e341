//! Brute-force ground truth the optimized engine is tested against:
//! direct checks of the half-occurrence condition, closure by the
//! powerset-union formula, exhaustive enumeration of union-closed
//! extensions, and the hypercube decomposition of family shares.
//!
//! Everything here favors being obviously correct over being fast, and is
//! guarded against exponential blowup.

use crate::error::{Error, Result};
use crate::family::Family;
use crate::setcode::{ElementId, SetCode};
use crate::weights::{Share, WeightFn};

/// Number of members of `f` containing the element `a`.
pub fn cnt(a: ElementId, f: &Family) -> usize {
    f.iter().filter(|&&m| m.contains(a)).count()
}

/// Whether some element of `⋃f` occurs in at least half of the members.
/// Vacuously false when the union is empty (`f = {}` or `f = {∅}`).
pub fn is_frankl(f: &Family) -> bool {
    f.big_union()
        .decode()
        .into_iter()
        .any(|a| 2 * cnt(a, f) >= f.len())
}

/// Union closure by its defining formula: the unions of all non-empty
/// subfamilies. Exponential in the member count, hence the guard.
pub fn closure_oracle(f: &Family) -> Result<Family> {
    if f.len() > 20 {
        return Err(Error::TooLarge(format!(
            "closure by powerset formula over {} members",
            f.len()
        )));
    }
    let members = f.members();
    let codes = (1u32..1 << members.len()).map(|picks| {
        members
            .iter()
            .enumerate()
            .filter(|(i, _)| picks & (1 << i) != 0)
            .fold(SetCode::EMPTY, |acc, (_, &m)| acc.union(m))
    });
    Ok(Family::from_codes(codes))
}

/// Every union-closed extension of `fc`: each subfamily of `pow(⋃fc)` that
/// is union closed and absorbs unions with the members of `fc`, including
/// the empty family. Exhaustive over all `2^(2^n)` subfamilies, hence the
/// hard cap at `n ≤ 4`.
pub fn enumerate_uce(fc: &Family) -> Result<Vec<Family>> {
    let x = fc.big_union();
    if x.cardinality() > 4 {
        return Err(Error::TooLarge(format!(
            "union-closed extension enumeration over a {}-element union",
            x.cardinality()
        )));
    }
    let subs = x.submasks();
    let mut out = Vec::new();
    for picks in 0u32..1 << subs.len() {
        let members = subs
            .iter()
            .enumerate()
            .filter(|(i, _)| picks & (1 << i) != 0)
            .map(|(_, &s)| s);
        let candidate = Family::from_codes(members);
        if candidate.is_union_closed_for(fc) {
            out.push(candidate);
        }
    }
    Ok(out)
}

/// The `s`-hypercube with base `k`: all sets between `k` and `k ∪ s`,
/// i.e. `{k ∪ a | a ∈ pow(s)}`. Base and spread must be disjoint — the two
/// characterizations diverge otherwise.
pub fn hypercube(k: SetCode, s: SetCode) -> Result<Family> {
    if !k.is_disjoint(s) {
        return Err(Error::OverlappingBase);
    }
    Ok(Family::from_codes(
        s.submasks().into_iter().map(|a| k.union(a)),
    ))
}

fn in_hypercube(a: SetCode, k: SetCode, s: SetCode) -> bool {
    k.is_subset(a) && a.is_subset(k.union(s))
}

/// Projection of `f` onto the hypercube: members inside the cube with the
/// base removed.
pub fn project(k: SetCode, s: SetCode, f: &Family) -> Result<Family> {
    if !k.is_disjoint(s) {
        return Err(Error::OverlappingBase);
    }
    Ok(Family::from_codes(
        f.iter()
            .filter(|&&a| in_hypercube(a, k, s))
            .map(|&a| a.difference(k)),
    ))
}

/// Sum of set shares over the members of `f` lying in the hypercube.
pub fn hyper_share(
    k: SetCode,
    s: SetCode,
    f: &Family,
    w: &WeightFn,
    x: SetCode,
) -> Result<Share> {
    if !k.is_disjoint(s) {
        return Err(Error::OverlappingBase);
    }
    if !f.big_union().is_subset(x) {
        return Err(Error::OutOfDomain);
    }
    f.iter()
        .filter(|&&a| in_hypercube(a, k, s))
        .map(|&a| w.set_share(a, x))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(bits: u32) -> SetCode {
        SetCode::from_bits(bits).unwrap()
    }

    fn fam(bits: &[u32]) -> Family {
        Family::from_codes(bits.iter().map(|&b| code(b)))
    }

    #[test]
    fn cnt_examples() {
        // {{0,1},{1,2},{1}}
        let f = fam(&[3, 6, 2]);
        assert_eq!(cnt(1, &f), 3);
        assert_eq!(cnt(5, &f), 0);
        assert_eq!(cnt(1, &Family::new()), 0);
    }

    #[test]
    fn is_frankl_examples() {
        assert!(is_frankl(&fam(&[3, 6, 2])));
        assert!(!is_frankl(&Family::new()));
        assert!(is_frankl(&fam(&[1])));
        assert!(!is_frankl(&fam(&[0])));
    }

    #[test]
    fn closure_oracle_examples() {
        assert_eq!(closure_oracle(&fam(&[3, 6])).unwrap(), fam(&[3, 6, 7]));
        assert_eq!(closure_oracle(&fam(&[5])).unwrap(), fam(&[5]));
        assert_eq!(
            closure_oracle(&fam(&[1, 2, 4])).unwrap(),
            fam(&[1, 2, 3, 4, 5, 6, 7])
        );
        assert_eq!(closure_oracle(&Family::new()).unwrap(), Family::new());
    }

    #[test]
    fn closure_oracle_guard() {
        let big = Family::from_codes((0..21).map(code));
        assert!(matches!(closure_oracle(&big), Err(Error::TooLarge(_))));
    }

    #[test]
    fn enumerate_uce_singleton() {
        let exts = enumerate_uce(&fam(&[1])).unwrap();
        assert_eq!(exts.len(), 3);
        assert!(exts.contains(&Family::new()));
        assert!(exts.contains(&fam(&[1])));
        assert!(exts.contains(&fam(&[0, 1])));
        // {∅} alone is not union closed for {{0}}: ∅ ∪ {0} is missing.
        assert!(!exts.contains(&fam(&[0])));
    }

    #[test]
    fn enumerate_uce_empty_family() {
        let exts = enumerate_uce(&Family::new()).unwrap();
        assert_eq!(exts, vec![Family::new(), fam(&[0])]);
    }

    #[test]
    fn enumerate_uce_guard() {
        assert!(matches!(
            enumerate_uce(&fam(&[0b11111])),
            Err(Error::TooLarge(_))
        ));
    }

    // The worked configuration used across the hypercube examples:
    // k0=0, k1=1, s0=2, s1=3.
    const K0: u32 = 1 << 0;
    const K1: u32 = 1 << 1;
    const S0: u32 = 1 << 2;
    const S1: u32 = 1 << 3;

    #[test]
    fn hypercube_examples() {
        let s = code(S0 | S1);
        assert_eq!(
            hypercube(SetCode::EMPTY, s).unwrap(),
            fam(&[0, S0, S1, S0 | S1])
        );
        assert_eq!(
            hypercube(code(K0), s).unwrap(),
            fam(&[K0, K0 | S0, K0 | S1, K0 | S0 | S1])
        );
        assert_eq!(hypercube(code(K0), SetCode::EMPTY).unwrap(), fam(&[K0]));
        assert_eq!(hypercube(code(3), code(6)), Err(Error::OverlappingBase));
    }

    fn example_family() -> Family {
        // {{s0}, {s1}, {k0,s0}, {k0,k1,s0,s1}}
        fam(&[S0, S1, K0 | S0, K0 | K1 | S0 | S1])
    }

    #[test]
    fn hyper_share_examples() {
        let s = code(S0 | S1);
        let x = code(K0 | K1 | S0 | S1);
        let f = example_family();
        let w = WeightFn::new(vec![1, 1, 1, 1]).unwrap();
        let hs = |k: u32| hyper_share(code(k), s, &f, &w, x).unwrap();
        assert_eq!(hs(0), -4);
        assert_eq!(hs(K0), 0);
        assert_eq!(hs(K1), 0);
        assert_eq!(hs(K0 | K1), 4);
        // A family disjoint from the cube contributes nothing.
        assert_eq!(
            hyper_share(code(K1), s, &fam(&[K0]), &w, x).unwrap(),
            0
        );
    }

    #[test]
    fn projection_examples() {
        let s = code(S0 | S1);
        let f = example_family();
        let prj = |k: u32| project(code(k), s, &f).unwrap();
        assert_eq!(prj(0), fam(&[S0, S1]));
        assert_eq!(prj(K0), fam(&[S0]));
        assert_eq!(prj(K1), Family::new());
        assert_eq!(prj(K0 | K1), fam(&[S0 | S1]));
        assert_eq!(project(code(3), code(6), &f), Err(Error::OverlappingBase));
    }
}
