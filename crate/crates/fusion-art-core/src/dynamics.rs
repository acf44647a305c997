use crate::{ActivityVector, ArtError, CategoryNode, ChannelParams, Real};

/// Sum of element-wise minima: the fuzzy-AND norm `|x ∧ w|`.
pub(crate) fn fuzzy_and_norm<F: Real>(x: &[F], w: &[F]) -> F {
    x.iter().zip(w).map(|(&a, &b)| a.min(b)).sum()
}

pub(crate) fn l1<F: Real>(v: &[F]) -> F {
    v.iter().copied().sum()
}

/// Choice function over all channels:
/// `T = Σ_k γ^k · |x^k ∧ w^k| / (α^k + |w^k|)`.
///
/// Channels with `γ^k = 0` are skipped: they contribute exactly zero and
/// must not cost work or divide by an empty template under `α^k = 0`.
pub fn choice_activation<F: Real>(
    inputs: &[ActivityVector<F>],
    node: &CategoryNode<F>,
    params: &[ChannelParams<F>],
) -> Result<F, ArtError> {
    if inputs.len() != node.channel_count() {
        return Err(ArtError::ChannelCountMismatch {
            expected: node.channel_count(),
            actual: inputs.len(),
        });
    }
    if params.len() != node.channel_count() {
        return Err(ArtError::ChannelCountMismatch {
            expected: node.channel_count(),
            actual: params.len(),
        });
    }
    let mut total = F::zero();
    for (channel, (input, p)) in inputs.iter().zip(params).enumerate() {
        let weights = node.weights(channel)?;
        if input.len() != weights.len() {
            return Err(ArtError::DimensionMismatch {
                channel,
                input_len: input.len(),
                weight_len: weights.len(),
            });
        }
        if p.gamma().is_zero() {
            continue;
        }
        total = total
            + p.gamma() * fuzzy_and_norm(input.values(), weights) / (p.alpha() + l1(weights));
    }
    Ok(total)
}

/// Outcome of one template match: the match ratio and whether it meets
/// the vigilance criterion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchOutcome<F> {
    pub ratio: F,
    pub resonant: bool,
}

/// Match function `m = |x ∧ w| / |x|`; resonance holds when `m ≥ ρ`.
///
/// A zero-norm input matches any template with `m = 1`: an empty activity
/// places no constraint on the code.
pub fn template_match<F: Real>(
    x: &ActivityVector<F>,
    weights: &[F],
    rho: F,
) -> Result<MatchOutcome<F>, ArtError> {
    if x.len() != weights.len() {
        return Err(ArtError::LengthMismatch {
            input_len: x.len(),
            weight_len: weights.len(),
        });
    }
    let norm = x.l1_norm();
    let ratio = if norm.is_zero() {
        F::one()
    } else {
        fuzzy_and_norm(x.values(), weights) / norm
    };
    Ok(MatchOutcome {
        ratio,
        resonant: ratio >= rho,
    })
}

/// Learning rule `w ← (1 − β)·w + β·(x ∧ w)`, returned as a new vector.
pub fn template_learn<F: Real>(
    weights: &[F],
    x: &ActivityVector<F>,
    beta: F,
) -> Result<Vec<F>, ArtError> {
    if x.len() != weights.len() {
        return Err(ArtError::LengthMismatch {
            input_len: x.len(),
            weight_len: weights.len(),
        });
    }
    if !(beta >= F::zero() && beta <= F::one()) {
        return Err(ArtError::InvalidParameter {
            name: "beta",
            value: beta.to_f64().unwrap_or(f64::NAN),
        });
    }
    let one = F::one();
    Ok(weights
        .iter()
        .zip(x.values())
        .map(|(&w, &xi)| (one - beta) * w + beta * xi.min(w))
        .collect())
}
