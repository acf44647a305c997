use crate::rank::SearchConfig;
use fusion_art_core::Real;
use stem_memory::{CollectiveMemory, Positivity};

/// The pooled evidence trace: one bit per event node, the fuzzy OR of the
/// evidence vectors of all tested-positive individuals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvidenceVector {
    bits: Vec<bool>,
}

impl EvidenceVector {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn zeros(len: usize) -> Self {
        Self {
            bits: vec![false; len],
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_set(&self, index: usize) -> bool {
        self.bits.get(index).copied().unwrap_or(false)
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Fuzzy OR of a sparse evidence set into the pool.
    pub fn merge_indices(&mut self, indices: &[usize]) {
        for &index in indices {
            if index < self.bits.len() {
                self.bits[index] = true;
            }
        }
    }
}

/// Activation of an individual node on the positivity channel alone
/// (`γ^e = 0`, `γ^c = 1`, input c = (1)):
/// `T = |(1) ∧ w^c| / (α + |w^c|) = w^c / (α + w^c)`.
fn positivity_activation<F: Real>(positivity: Positivity, alpha: F) -> F {
    let w: F = positivity.weight();
    w / (alpha + w)
}

/// Evidence pooling: activate the individual layer with c = (1) and the
/// episode channel switched off, then fuzzy-OR the evidence of every node
/// with positive activation into one pooled vector.
///
/// No tested-positive individuals yields the all-zero vector.
pub fn pool_evidence<F: Real>(
    memory: &CollectiveMemory<F>,
    cfg: &SearchConfig<F>,
) -> EvidenceVector {
    let mut pooled = EvidenceVector::zeros(memory.registry().len());
    for node in memory.individuals() {
        if positivity_activation::<F>(node.positivity(), cfg.alpha) > F::zero() {
            pooled.merge_indices(node.evidence_indices());
        }
    }
    pooled
}

/// Frequency-weighted pooling: per event node, the fraction of
/// tested-positive individuals whose evidence covers it. Binarizing at any
/// threshold above zero reduces to the fuzzy OR pool.
pub fn pool_evidence_weighted<F: Real>(memory: &CollectiveMemory<F>) -> Vec<F> {
    let mut counts = vec![0usize; memory.registry().len()];
    let mut positives = 0usize;
    for node in memory.individuals() {
        if node.positivity() == Positivity::Positive {
            positives += 1;
            for &index in node.evidence_indices() {
                counts[index] += 1;
            }
        }
    }
    if positives == 0 {
        return vec![F::zero(); counts.len()];
    }
    let total = F::from_usize(positives).expect("positive count fits scalar");
    counts
        .into_iter()
        .map(|c| F::from_usize(c).expect("count fits scalar") / total)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use stem_memory::{build_memory, EpisodicTrace, Event};

    fn trace(agent_id: u32, events: &[(u32, u32)]) -> EpisodicTrace {
        EpisodicTrace::new(
            agent_id,
            events.iter().map(|&(t, p)| Event::new(t, p)).collect(),
        )
        .unwrap()
    }

    fn memory(dataset: Vec<(EpisodicTrace, Positivity)>) -> CollectiveMemory<f64> {
        build_memory(10, 4, &dataset).unwrap()
    }

    #[test]
    fn no_positives_pools_to_zero() {
        let m = memory(vec![
            (trace(0, &[(0, 0)]), Positivity::Untested),
            (trace(1, &[(1, 1)]), Positivity::Untested),
        ]);
        let pooled = pool_evidence(&m, &SearchConfig::default());
        assert_eq!(pooled.count_ones(), 0);
        assert_eq!(pooled.len(), 2);
    }

    #[test]
    fn single_positive_is_identity() {
        // The untested agent introduces nodes (0,0) and (1,1) first, so the
        // positive's evidence lands on nodes {0, 2}: w_e = (1, 0, 1).
        let m = memory(vec![
            (trace(0, &[(0, 0), (1, 1)]), Positivity::Untested),
            (trace(1, &[(0, 0), (2, 2)]), Positivity::Positive),
        ]);
        let pooled = pool_evidence(&m, &SearchConfig::default());
        assert_eq!(pooled.bits(), &[true, false, true]);
    }

    #[test]
    fn pooling_is_element_wise_max() {
        // Positives cover (1, 0, 1) and (0, 0, 1); the pool is the
        // element-wise max (1, 0, 1).
        let m = memory(vec![
            (trace(0, &[(0, 0), (1, 1)]), Positivity::Untested),
            (trace(1, &[(0, 0), (2, 2)]), Positivity::Positive),
            (trace(2, &[(2, 2)]), Positivity::Positive),
        ]);
        let pooled = pool_evidence(&m, &SearchConfig::default());
        assert_eq!(pooled.bits(), &[true, false, true]);
    }

    #[test]
    fn weighted_pool_averages_positive_frequency() {
        let m = memory(vec![
            (trace(0, &[(0, 0), (2, 2)]), Positivity::Positive),
            (trace(1, &[(2, 2)]), Positivity::Positive),
        ]);
        let weighted = pool_evidence_weighted(&m);
        assert_eq!(weighted, vec![0.5, 1.0]);
    }

    #[test]
    fn weighted_pool_single_positive_is_its_trace() {
        let m = memory(vec![(trace(0, &[(0, 0), (3, 1)]), Positivity::Positive)]);
        assert_eq!(pool_evidence_weighted(&m), vec![1.0, 1.0]);
    }

    #[test]
    fn weighted_pool_no_positives_is_zero() {
        let m = memory(vec![(trace(0, &[(0, 0)]), Positivity::Untested)]);
        assert_eq!(pool_evidence_weighted(&m), vec![0.0]);
    }
}
