use crate::{EvidenceVector, SearchError};
use fusion_art_core::{ChannelParams, Real};
use stem_memory::{CollectiveMemory, Positivity};

/// Which similarity engine answers a query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Stem,
    Baseline,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::Stem => "stem",
            Method::Baseline => "baseline",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "stem" => Some(Method::Stem),
            "baseline" => Some(Method::Baseline),
            _ => None,
        }
    }
}

/// How positive evidence is pooled. Fuzzy OR is the normative behavior;
/// the frequency-weighted variant is an experiment flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pooling {
    FuzzyOr,
    Weighted,
}

/// Which selection rule a query applies: only one of the two is ever used
/// per query, even though both parameters are carried.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectionMode {
    TopK,
    Threshold,
}

/// Query parameters for pooling, ranking and candidate selection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchConfig<F: Real> {
    /// Activation threshold for threshold-mode selection.
    pub delta_c: F,
    /// Candidate count for top-k selection.
    pub k: usize,
    pub method: Method,
    pub pooling: Pooling,
    pub selection: SelectionMode,
    /// Choice parameter of the episode channel.
    pub alpha: F,
    /// Contribution of the episode channel.
    pub gamma_e: F,
    /// Contribution of the positivity channel.
    pub gamma_c: F,
}

impl<F: Real> Default for SearchConfig<F> {
    fn default() -> Self {
        Self {
            delta_c: F::zero(),
            k: 5,
            method: Method::Stem,
            pooling: Pooling::FuzzyOr,
            selection: SelectionMode::TopK,
            alpha: ChannelParams::<F>::default_alpha(),
            gamma_e: F::one(),
            gamma_c: F::one(),
        }
    }
}

impl<F: Real> SearchConfig<F> {
    pub fn validate(&self) -> Result<(), SearchError> {
        if self.k == 0 {
            return Err(SearchError::ZeroK);
        }
        let unit = |name: &'static str, v: F| {
            if v >= F::zero() && v <= F::one() {
                Ok(())
            } else {
                Err(SearchError::InvalidParameter {
                    name,
                    value: v.to_f64().unwrap_or(f64::NAN),
                })
            }
        };
        if !(self.alpha >= F::zero()) {
            return Err(SearchError::InvalidParameter {
                name: "alpha",
                value: self.alpha.to_f64().unwrap_or(f64::NAN),
            });
        }
        if !(self.delta_c >= F::zero()) {
            return Err(SearchError::InvalidParameter {
                name: "delta_c",
                value: self.delta_c.to_f64().unwrap_or(f64::NAN),
            });
        }
        unit("gamma_e", self.gamma_e)?;
        unit("gamma_c", self.gamma_c)
    }
}

/// An untested individual scored against the pooled evidence. `rank` is
/// 1-based in activation order, ties broken by ascending agent id.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankedCandidate<F: Real> {
    pub agent_id: u32,
    pub activation: F,
    pub rank: usize,
}

/// Choice activation of one individual code against binary evidence:
/// `γ_e · |E ∧ w^e| / (α + |w^e|)`, evaluated on the sparse evidence set.
///
/// The positivity channel is presented with c = (0) during search, so its
/// fuzzy-AND term is identically zero and contributes nothing here;
/// untested-only candidacy is enforced by filtering on the stored CP.
pub(crate) fn evidence_activation<F: Real>(
    evidence: &EvidenceVector,
    indices: &[usize],
    alpha: F,
    gamma_e: F,
) -> F {
    let overlap = indices.iter().filter(|&&i| evidence.is_set(i)).count();
    let norm = F::from_usize(indices.len()).expect("evidence length fits scalar");
    gamma_e * F::from_usize(overlap).expect("overlap fits scalar") / (alpha + norm)
}

/// Scores every individual whose stored positivity is 0 and returns them
/// ordered by activation (descending), ties by ascending agent id.
///
/// Exactly one choice-function evaluation runs per individual node.
pub fn rank_untested<F: Real>(
    memory: &CollectiveMemory<F>,
    evidence: &EvidenceVector,
    cfg: &SearchConfig<F>,
) -> Result<Vec<RankedCandidate<F>>, SearchError> {
    cfg.validate()?;
    if evidence.len() != memory.registry().len() {
        return Err(SearchError::EvidenceLengthMismatch {
            evidence_len: evidence.len(),
            registry_len: memory.registry().len(),
        });
    }
    let mut ranked: Vec<RankedCandidate<F>> = memory
        .individuals()
        .iter()
        .filter(|node| node.positivity() == Positivity::Untested)
        .map(|node| RankedCandidate {
            agent_id: node.agent_id(),
            activation: evidence_activation(
                evidence,
                node.evidence_indices(),
                cfg.alpha,
                cfg.gamma_e,
            ),
            rank: 0,
        })
        .collect();
    sort_candidates(&mut ranked);
    Ok(ranked)
}

pub(crate) fn sort_candidates<F: Real>(ranked: &mut [RankedCandidate<F>]) {
    ranked.sort_by(|a, b| {
        b.activation
            .partial_cmp(&a.activation)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.agent_id.cmp(&b.agent_id))
    });
    for (position, candidate) in ranked.iter_mut().enumerate() {
        candidate.rank = position + 1;
    }
}

/// Applies the configured selection rule: top-k keeps the first `k`
/// candidates (all of them when fewer exist); threshold keeps those with
/// activation strictly above `δ_c`.
pub fn select_candidates<F: Real>(
    ranked: &[RankedCandidate<F>],
    cfg: &SearchConfig<F>,
) -> Vec<u32> {
    match cfg.selection {
        SelectionMode::TopK => ranked
            .iter()
            .take(cfg.k)
            .map(|c| c.agent_id)
            .collect(),
        SelectionMode::Threshold => ranked
            .iter()
            .filter(|c| c.activation > cfg.delta_c)
            .map(|c| c.agent_id)
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pool_evidence;
    use stem_memory::{build_memory, EpisodicTrace, Event};

    fn trace(agent_id: u32, events: &[(u32, u32)]) -> EpisodicTrace {
        EpisodicTrace::new(
            agent_id,
            events.iter().map(|&(t, p)| Event::new(t, p)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn disjoint_candidate_scores_zero() {
        let dataset = vec![
            (trace(0, &[(0, 0), (1, 0)]), Positivity::Positive),
            (trace(1, &[(2, 1), (3, 1)]), Positivity::Untested),
        ];
        let memory = build_memory::<f64>(10, 4, &dataset).unwrap();
        let cfg = SearchConfig::default();
        let evidence = pool_evidence(&memory, &cfg);
        let ranked = rank_untested(&memory, &evidence, &cfg).unwrap();
        assert_eq!(ranked.len(), 1);
        assert_eq!(ranked[0].agent_id, 1);
        assert_eq!(ranked[0].activation, 0.0);
    }

    #[test]
    fn activation_matches_hand_computed_overlap_ratio() {
        // |w_e| = 480, overlap with evidence = 48, alpha = 0.001:
        // activation = 48 / 480.001.
        let horizon = 480;
        let positive_events: Vec<(u32, u32)> = (0..48).map(|t| (t, 0)).collect();
        let untested_events: Vec<(u32, u32)> = (0..480).map(|t| (t, 0)).collect();
        let dataset = vec![
            (trace(0, &positive_events), Positivity::Positive),
            (trace(1, &untested_events), Positivity::Untested),
        ];
        let memory = build_memory::<f64>(horizon, 4, &dataset).unwrap();
        let cfg = SearchConfig::default();
        let evidence = pool_evidence(&memory, &cfg);
        let ranked = rank_untested(&memory, &evidence, &cfg).unwrap();
        assert_eq!(ranked[0].activation, 48.0 / 480.001);
        assert!((ranked[0].activation - 0.09999979).abs() < 1e-7);
    }

    #[test]
    fn equal_scores_order_by_agent_id() {
        let dataset = vec![
            (trace(5, &[(0, 0)]), Positivity::Positive),
            (trace(9, &[(0, 0), (1, 1)]), Positivity::Untested),
            (trace(3, &[(0, 0), (2, 2)]), Positivity::Untested),
        ];
        let memory = build_memory::<f64>(10, 4, &dataset).unwrap();
        let cfg = SearchConfig::default();
        let evidence = pool_evidence(&memory, &cfg);
        let ranked = rank_untested(&memory, &evidence, &cfg).unwrap();
        assert_eq!(ranked[0].agent_id, 3);
        assert_eq!(ranked[0].rank, 1);
        assert_eq!(ranked[1].agent_id, 9);
        assert_eq!(ranked[1].rank, 2);
        assert_eq!(ranked[0].activation, ranked[1].activation);
    }

    #[test]
    fn evidence_length_is_checked() {
        let dataset = vec![(trace(0, &[(0, 0)]), Positivity::Untested)];
        let memory = build_memory::<f64>(10, 4, &dataset).unwrap();
        let evidence = EvidenceVector::new(vec![false; 3]);
        let err = rank_untested(&memory, &evidence, &SearchConfig::default()).unwrap_err();
        assert!(matches!(err, SearchError::EvidenceLengthMismatch { .. }));
    }

    #[test]
    fn selection_rules() {
        let ranked: Vec<RankedCandidate<f64>> = [(1u32, 0.9), (2, 0.5), (3, 0.5), (4, 0.1), (5, 0.0)]
            .iter()
            .enumerate()
            .map(|(i, &(agent_id, activation))| RankedCandidate {
                agent_id,
                activation,
                rank: i + 1,
            })
            .collect();

        let mut cfg = SearchConfig::<f64>::default();
        cfg.k = 3;
        assert_eq!(select_candidates(&ranked, &cfg), vec![1, 2, 3]);

        cfg.k = 10;
        assert_eq!(select_candidates(&ranked, &cfg), vec![1, 2, 3, 4, 5]);

        cfg.selection = SelectionMode::Threshold;
        cfg.delta_c = 0.0;
        // Strictly above zero: the overlapping candidates, not the zero one.
        assert_eq!(select_candidates(&ranked, &cfg), vec![1, 2, 3, 4]);

        cfg.delta_c = 0.5;
        assert_eq!(select_candidates(&ranked, &cfg), vec![1]);
    }

    #[test]
    fn config_validation() {
        let mut cfg = SearchConfig::<f64>::default();
        cfg.k = 0;
        assert!(matches!(cfg.validate(), Err(SearchError::ZeroK)));
        let mut cfg = SearchConfig::<f64>::default();
        cfg.gamma_e = 1.5;
        assert!(cfg.validate().is_err());
        let mut cfg = SearchConfig::<f64>::default();
        cfg.alpha = -0.5;
        assert!(cfg.validate().is_err());
    }
}
