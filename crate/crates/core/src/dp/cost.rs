use std::fmt;

use serde::{Serialize, Serializer};

/// Table value in `{0, .., k} ∪ {∞}`.
///
/// Arithmetic saturates: anything above the budget `k` collapses to ∞.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cost(u32);

impl Cost {
    pub const ZERO: Cost = Cost(0);
    pub const INF: Cost = Cost(u32::MAX);

    /// `value` if it is at most `k`, otherwise ∞.
    pub fn capped(value: usize, k: usize) -> Cost {
        if value <= k {
            Cost(value as u32)
        } else {
            Cost::INF
        }
    }

    pub fn is_inf(self) -> bool {
        self == Cost::INF
    }

    pub fn value(self) -> Option<usize> {
        (!self.is_inf()).then_some(self.0 as usize)
    }

    pub fn add(self, other: Cost, k: usize) -> Cost {
        match (self.value(), other.value()) {
            (Some(a), Some(b)) => Cost::capped(a + b, k),
            _ => Cost::INF,
        }
    }
}

impl fmt::Debug for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("∞"),
        }
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for Cost {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.value().serialize(s)
    }
}
