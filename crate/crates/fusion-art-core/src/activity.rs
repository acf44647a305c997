use crate::{ArtError, Real};

/// An ordered list of activity values, each in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ActivityVector<F: Real> {
    values: Vec<F>,
}

impl<F: Real> ActivityVector<F> {
    /// Validates that every element lies in `[0, 1]`.
    pub fn new(values: Vec<F>) -> Result<Self, ArtError> {
        for (index, &value) in values.iter().enumerate() {
            if !(value >= F::zero() && value <= F::one()) {
                return Err(ArtError::ActivityOutOfRange {
                    index,
                    value: value.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(Self { values })
    }

    /// Internal constructor for values already known to be in range.
    pub(crate) fn from_validated(values: Vec<F>) -> Self {
        debug_assert!(values.iter().all(|&v| v >= F::zero() && v <= F::one()));
        Self { values }
    }

    pub fn zeros(len: usize) -> Self {
        Self {
            values: vec![F::zero(); len],
        }
    }

    pub fn ones(len: usize) -> Self {
        Self {
            values: vec![F::one(); len],
        }
    }

    /// Binary activity vector from a bit pattern.
    pub fn from_bits(bits: &[bool]) -> Self {
        Self {
            values: bits
                .iter()
                .map(|&b| if b { F::one() } else { F::zero() })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }

    /// L1 norm: the sum of elements (the fuzzy-ART `|·|`).
    pub fn l1_norm(&self) -> F {
        self.values.iter().copied().sum()
    }
}

impl<F: Real> AsRef<[F]> for ActivityVector<F> {
    fn as_ref(&self) -> &[F] {
        &self.values
    }
}
