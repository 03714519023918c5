//! Canonical keys: order-independent byte serializations of descriptors.

use std::fmt;

/// Deterministic byte serialization of a descriptor with labeling identity
/// removed. Two keys are equal exactly when the underlying descriptors are
/// equal, so grouping by key realizes descriptor comparison.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn new(bytes: Vec<u8>) -> Self {
        CanonicalKey(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match std::str::from_utf8(&self.0) {
            Ok(text) if text.chars().all(|c| !c.is_control() || c == '\n') => {
                write!(f, "CanonicalKey({text:?})")
            }
            _ => {
                write!(f, "CanonicalKey(0x")?;
                for byte in &self.0 {
                    write!(f, "{byte:02x}")?;
                }
                write!(f, ")")
            }
        }
    }
}
