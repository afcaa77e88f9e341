//! Bit-level encoding of finite sets of small naturals.
//!
//! A set `A ⊆ {0, …, n-1}` is stored as the machine integer whose bit `k`
//! is set exactly when `k ∈ A`. Set union is then a single bitwise-or,
//! which is what makes the whole search engine fast.

use std::fmt;
use std::ops::BitOr;

use crate::error::{Error, Result};

/// Largest supported element, exclusive. Every set code fits one machine
/// word and every dense share table stays addressable.
pub const MAX_DOMAIN: u32 = 30;

/// An element of the ambient domain `{0, …, MAX_DOMAIN-1}`.
pub type ElementId = u32;

/// A finite set of naturals packed into a machine integer.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetCode(u32);

impl SetCode {
    /// The empty set.
    pub const EMPTY: SetCode = SetCode(0);

    /// Wraps a raw bit pattern, rejecting codes outside the supported domain.
    pub fn from_bits(bits: u32) -> Result<Self> {
        if bits < (1u32 << MAX_DOMAIN) {
            Ok(SetCode(bits))
        } else {
            Err(Error::DomainTooLarge(32 - bits.leading_zeros()))
        }
    }

    pub(crate) const fn from_bits_unchecked(bits: u32) -> Self {
        SetCode(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// Encodes a list of elements; bit `k` is set iff `k` occurs in the list.
    pub fn encode(elements: &[ElementId]) -> Result<Self> {
        let mut bits = 0u32;
        for &e in elements {
            if e >= MAX_DOMAIN {
                return Err(Error::DomainTooLarge(e + 1));
            }
            bits |= 1 << e;
        }
        Ok(SetCode(bits))
    }

    /// The singleton `{e}`.
    pub fn singleton(e: ElementId) -> Result<Self> {
        Self::encode(&[e])
    }

    /// The full initial range `{0, …, n-1}`.
    pub fn full_domain(n: u32) -> Result<Self> {
        if n > MAX_DOMAIN {
            return Err(Error::DomainTooLarge(n));
        }
        Ok(SetCode(((1u64 << n) - 1) as u32))
    }

    /// Elements of the set in ascending order.
    pub fn decode(self) -> Vec<ElementId> {
        let mut out = Vec::with_capacity(self.cardinality() as usize);
        let mut bits = self.0;
        while bits != 0 {
            out.push(bits.trailing_zeros());
            bits &= bits - 1;
        }
        out
    }

    pub fn union(self, other: SetCode) -> SetCode {
        SetCode(self.0 | other.0)
    }

    pub fn intersection(self, other: SetCode) -> SetCode {
        SetCode(self.0 & other.0)
    }

    /// Set difference `self − other`.
    pub fn difference(self, other: SetCode) -> SetCode {
        SetCode(self.0 & !other.0)
    }

    pub fn cardinality(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: ElementId) -> bool {
        e < 32 && self.0 & (1 << e) != 0
    }

    pub fn is_subset(self, other: SetCode) -> bool {
        self.0 | other.0 == other.0
    }

    pub fn is_disjoint(self, other: SetCode) -> bool {
        self.0 & other.0 == 0
    }

    /// All `2^|self|` subsets of this set, in ascending code order.
    pub fn submasks(self) -> Vec<SetCode> {
        let mask = self.0;
        let mut out = Vec::with_capacity(1usize << self.cardinality());
        let mut sub = 0u32;
        loop {
            out.push(SetCode(sub));
            if sub == mask {
                return out;
            }
            // Next subset of `mask` in increasing numeric order.
            sub = sub.wrapping_sub(mask) & mask;
        }
    }
}

impl BitOr for SetCode {
    type Output = SetCode;

    fn bitor(self, rhs: SetCode) -> SetCode {
        self.union(rhs)
    }
}

impl fmt::Debug for SetCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.decode().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for SetCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
