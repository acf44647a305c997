use std::time::{Duration, Instant};

use crate::baseline::{merge_positive_events, similarity_scan};
use crate::rank::{rank_untested, sort_candidates, RankedCandidate, SearchConfig};
use crate::{pool_evidence, SearchError};
use fusion_art_core::Real;
use stem_memory::{CollectiveMemory, EpisodicTrace};

/// A ranking together with the wall-clock time of the similarity
/// computation that produced it.
#[derive(Debug, Clone)]
pub struct TimedQuery<F: Real> {
    pub ranked: Vec<RankedCandidate<F>>,
    pub elapsed: Duration,
}

/// Runs the memory-based query and times exactly its two steps: evidence
/// pooling and choice-function ranking. The memory is built beforehand and
/// is not part of the measurement.
pub fn stem_query_timed<F: Real>(
    memory: &CollectiveMemory<F>,
    cfg: &SearchConfig<F>,
) -> Result<TimedQuery<F>, SearchError> {
    let start = Instant::now();
    let evidence = pool_evidence(memory, cfg);
    let ranked = rank_untested(memory, &evidence, cfg)?;
    let elapsed = start.elapsed();
    Ok(TimedQuery { ranked, elapsed })
}

/// Runs the brute-force query and times exactly the similarity loop over
/// the untested traces. Merging the positive events prepares the loop's
/// input and happens outside the timed region.
pub fn baseline_query_timed<F: Real>(
    positives: &[&EpisodicTrace],
    untested: &[&EpisodicTrace],
    time_horizon: u32,
) -> TimedQuery<F> {
    let merged = merge_positive_events(positives);
    let start = Instant::now();
    let mut ranked: Vec<RankedCandidate<F>> = similarity_scan(&merged, untested, time_horizon)
        .into_iter()
        .map(|(agent_id, similarity)| RankedCandidate {
            agent_id,
            activation: similarity,
            rank: 0,
        })
        .collect();
    sort_candidates(&mut ranked);
    let elapsed = start.elapsed();
    TimedQuery { ranked, elapsed }
}

#[cfg(test)]
mod tests {
    use super::*;
    use stem_memory::{build_memory, Event, Positivity};

    #[test]
    fn tiny_instance_times_both_methods() {
        let horizon = 6;
        let traces = vec![
            EpisodicTrace::new(0, (0..4).map(|t| Event::new(t, 0)).collect()).unwrap(),
            EpisodicTrace::new(1, (0..6).map(|t| Event::new(t, t % 2)).collect()).unwrap(),
        ];
        let dataset = vec![
            (traces[0].clone(), Positivity::Positive),
            (traces[1].clone(), Positivity::Untested),
        ];
        let memory = build_memory::<f64>(horizon, 4, &dataset).unwrap();
        let cfg = SearchConfig::default();

        let stem = stem_query_timed(&memory, &cfg).unwrap();
        let baseline = baseline_query_timed::<f64>(&[&traces[0]], &[&traces[1]], horizon);

        assert_eq!(stem.ranked.len(), 1);
        assert_eq!(baseline.ranked.len(), 1);
        assert!(stem.elapsed >= Duration::ZERO);
        assert!(baseline.elapsed >= Duration::ZERO);
    }
}
