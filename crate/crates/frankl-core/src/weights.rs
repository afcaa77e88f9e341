//! Weight functions, set and family weights and shares, and the precomputed
//! share lookup table used by the refined search.
//!
//! Weights are non-negative integers and shares are signed: the share of a
//! set `A` inside `X` is `2·weight(A) − weight(X)`, which is negative exactly
//! when `A` carries less than half of the total weight. Keeping everything in
//! integers makes every comparison in the search exact.

use std::fmt;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::setcode::{SetCode, MAX_DOMAIN};

/// A signed share value.
pub type Share = i64;

/// Per-element weights are capped so that every share and every family share
/// over a `MAX_DOMAIN`-sized domain fits comfortably in an `i64`.
pub const MAX_WEIGHT: u64 = 1 << 20;

/// Non-negative integer weights over an initial range `{0, …, n-1}`.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightFn {
    values: Vec<u64>,
    domain: SetCode,
}

impl WeightFn {
    /// `values[i]` is the weight of element `i`; the domain is `{0, …, len-1}`.
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if values.len() > MAX_DOMAIN as usize {
            return Err(Error::DomainTooLarge(values.len() as u32));
        }
        if let Some(&v) = values.iter().find(|&&v| v > MAX_WEIGHT) {
            return Err(Error::InvalidWeight(format!(
                "weight {v} exceeds the maximum of {MAX_WEIGHT}"
            )));
        }
        let domain = SetCode::full_domain(values.len() as u32)?;
        Ok(WeightFn { values, domain })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// The full set `{0, …, n-1}` this function is defined on.
    pub fn domain(&self) -> SetCode {
        self.domain
    }

    fn check_in_domain(&self, a: SetCode) -> Result<()> {
        if a.is_subset(self.domain) {
            Ok(())
        } else {
            Err(Error::OutOfDomain)
        }
    }

    fn set_weight_unchecked(&self, a: SetCode) -> u64 {
        a.decode().iter().map(|&e| self.values[e as usize]).sum()
    }

    /// Sum of element weights over `a`.
    pub fn set_weight(&self, a: SetCode) -> Result<u64> {
        self.check_in_domain(a)?;
        Ok(self.set_weight_unchecked(a))
    }

    /// Sum of set weights over the members of `f`.
    pub fn family_weight(&self, f: &Family) -> Result<u64> {
        self.check_in_domain(f.big_union())?;
        Ok(f.iter().map(|&a| self.set_weight_unchecked(a)).sum())
    }

    /// `2·weight(a) − weight(x)`, for `a ⊆ x ⊆ domain`.
    pub fn set_share(&self, a: SetCode, x: SetCode) -> Result<Share> {
        self.check_in_domain(x)?;
        if !a.is_subset(x) {
            return Err(Error::OutOfDomain);
        }
        Ok(2 * self.set_weight_unchecked(a) as Share - self.set_weight_unchecked(x) as Share)
    }

    /// Sum of set shares over the members of `f`.
    pub fn family_share(&self, f: &Family, x: SetCode) -> Result<Share> {
        self.check_in_domain(x)?;
        if !f.big_union().is_subset(x) {
            return Err(Error::OutOfDomain);
        }
        let wx = self.set_weight_unchecked(x) as Share;
        Ok(f.iter()
            .map(|&a| 2 * self.set_weight_unchecked(a) as Share - wx)
            .sum())
    }

    /// Whether some element of `a` has positive weight.
    pub fn is_weight_function_on(&self, a: SetCode) -> Result<bool> {
        self.check_in_domain(a)?;
        Ok(a.decode().iter().any(|&e| self.values[e as usize] > 0))
    }
}

impl fmt::Debug for WeightFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightFn{:?}", self.values)
    }
}

/// Precomputed shares of every subset of a fixed set `X`, indexed directly by
/// set code. Entries at non-subset codes are unused.
#[derive(Clone, Debug)]
pub struct ShareTable {
    domain: SetCode,
    entries: Vec<Share>,
}

impl ShareTable {
    /// Tabulates `set_share(·, x)` over all submasks of `x`.
    pub fn build(w: &WeightFn, x: SetCode) -> Result<Self> {
        if !x.is_subset(w.domain()) {
            return Err(Error::OutOfDomain);
        }
        let wx = w.set_weight_unchecked(x) as Share;
        let mut entries = vec![0; x.bits() as usize + 1];
        for sub in x.submasks() {
            entries[sub.bits() as usize] = 2 * w.set_weight_unchecked(sub) as Share - wx;
        }
        Ok(ShareTable { domain: x, entries })
    }

    /// The set `X` the table was built over.
    pub fn domain(&self) -> SetCode {
        self.domain
    }

    /// Share of `a`, which must be a subset of the table domain.
    pub fn share(&self, a: SetCode) -> Share {
        debug_assert!(a.is_subset(self.domain));
        self.entries[a.bits() as usize]
    }
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

    // The running example: w(0)=1, w(1)=2, all other weights 0.
    fn example_w() -> WeightFn {
        WeightFn::new(vec![1, 2, 0]).unwrap()
    }

    #[test]
    fn set_weight_examples() {
        let w = example_w();
        assert_eq!(w.set_weight(code(7)).unwrap(), 3);
        assert_eq!(w.set_weight(SetCode::EMPTY).unwrap(), 0);
        assert_eq!(w.set_weight(code(2)).unwrap(), 2);
    }

    #[test]
    fn family_weight_example() {
        let w = example_w();
        // {{0,1},{1,2},{1}}
        assert_eq!(w.family_weight(&fam(&[3, 6, 2])).unwrap(), 7);
        assert_eq!(w.family_weight(&Family::new()).unwrap(), 0);
        assert_eq!(w.family_weight(&fam(&[2])).unwrap(), 2);
    }

    #[test]
    fn set_share_examples() {
        let w = example_w();
        let x = code(7);
        assert_eq!(w.set_share(code(6), x).unwrap(), 1);
        assert_eq!(w.set_share(x, x).unwrap(), 3);
        assert_eq!(w.set_share(SetCode::EMPTY, x).unwrap(), -3);
    }

    #[test]
    fn family_share_examples() {
        let w = example_w();
        let x = code(7);
        assert_eq!(w.family_share(&fam(&[3, 6, 2]), x).unwrap(), 5);
        assert_eq!(w.family_share(&Family::new(), x).unwrap(), 0);
        assert_eq!(w.family_share(&fam(&[7]), x).unwrap(), 3);
    }

    #[test]
    fn share_table_matches_direct_shares() {
        let w = example_w();
        let x = code(7);
        let table = ShareTable::build(&w, x).unwrap();
        assert_eq!(table.share(code(6)), 1);
        assert_eq!(table.share(SetCode::EMPTY), -3);
        assert_eq!(table.share(x), 3);
        for sub in x.submasks() {
            assert_eq!(table.share(sub), w.set_share(sub, x).unwrap());
        }
    }

    #[test]
    fn weight_function_condition() {
        let w = example_w();
        assert!(w.is_weight_function_on(code(7)).unwrap());
        let zero = WeightFn::new(vec![0, 0, 0]).unwrap();
        assert!(!zero.is_weight_function_on(code(7)).unwrap());
        assert!(!w.is_weight_function_on(SetCode::EMPTY).unwrap());
    }

    #[test]
    fn out_of_domain_is_rejected() {
        let w = example_w();
        assert_eq!(w.set_weight(code(8)), Err(Error::OutOfDomain));
        assert_eq!(w.set_share(code(8), code(15)), Err(Error::OutOfDomain));
        assert_eq!(w.set_share(code(3), code(1)), Err(Error::OutOfDomain));
        assert_eq!(ShareTable::build(&w, code(15)).err(), Some(Error::OutOfDomain));
    }

    #[test]
    fn weight_cap_is_enforced() {
        assert!(WeightFn::new(vec![MAX_WEIGHT]).is_ok());
        assert!(matches!(
            WeightFn::new(vec![MAX_WEIGHT + 1]),
            Err(Error::InvalidWeight(_))
        ));
        assert!(matches!(
            WeightFn::new(vec![0; MAX_DOMAIN as usize + 1]),
            Err(Error::DomainTooLarge(_))
        ));
    }
}
