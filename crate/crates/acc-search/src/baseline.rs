use std::collections::HashSet;

use crate::rank::{sort_candidates, RankedCandidate};
use fusion_art_core::Real;
use stem_memory::{EpisodicTrace, Event};

/// Deduplicated union of all positive-case events, in first-seen order.
pub fn merge_positive_events(positives: &[&EpisodicTrace]) -> Vec<Event> {
    let mut seen = HashSet::new();
    let mut merged = Vec::new();
    for trace in positives {
        for &event in trace.events() {
            if seen.insert(event) {
                merged.push(event);
            }
        }
    }
    merged
}

/// The naive similarity loop: for each untested trace, count its events by
/// scanning the merged list front-to-back per event, then divide by the
/// horizon. Deliberately brute force; this is the quadratic reference the
/// memory-based search is compared against.
pub fn similarity_scan<F: Real>(
    merged: &[Event],
    untested: &[&EpisodicTrace],
    time_horizon: u32,
) -> Vec<(u32, F)> {
    let horizon = F::from_u32(time_horizon).expect("horizon fits scalar");
    untested
        .iter()
        .map(|trace| {
            let mut count = 0usize;
            for event in trace.events() {
                for candidate in merged {
                    if candidate == event {
                        count += 1;
                        break;
                    }
                }
            }
            (
                trace.agent_id(),
                F::from_usize(count).expect("count fits scalar") / horizon,
            )
        })
        .collect()
}

/// Merges the positive traces and scores every untested trace with
/// `s = c / T`, returned in activation order with the shared tie rule.
pub fn baseline_similarities<F: Real>(
    positives: &[&EpisodicTrace],
    untested: &[&EpisodicTrace],
    time_horizon: u32,
) -> Vec<RankedCandidate<F>> {
    let merged = merge_positive_events(positives);
    let mut ranked: Vec<RankedCandidate<F>> = similarity_scan(&merged, untested, time_horizon)
        .into_iter()
        .map(|(agent_id, similarity)| RankedCandidate {
            agent_id,
            activation: similarity,
            rank: 0,
        })
        .collect();
    sort_candidates(&mut ranked);
    ranked
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trace(agent_id: u32, events: &[(u32, u32)]) -> EpisodicTrace {
        EpisodicTrace::new(
            agent_id,
            events.iter().map(|&(t, p)| Event::new(t, p)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn full_containment_scores_one() {
        let horizon = 4;
        let positive = trace(0, &[(0, 1), (1, 1), (2, 2), (3, 0)]);
        let untested = trace(1, &[(0, 1), (1, 1), (2, 2), (3, 0)]);
        let ranked = baseline_similarities::<f64>(&[&positive], &[&untested], horizon);
        assert_eq!(ranked[0].activation, 1.0);
    }

    #[test]
    fn no_overlap_scores_zero() {
        let positive = trace(0, &[(0, 1)]);
        let untested = trace(1, &[(0, 2), (1, 2)]);
        let ranked = baseline_similarities::<f64>(&[&positive], &[&untested], 4);
        assert_eq!(ranked[0].activation, 0.0);
    }

    #[test]
    fn partial_overlap_is_count_over_horizon() {
        // 48 of 480 hourly events shared.
        let positive_events: Vec<(u32, u32)> = (0..48).map(|t| (t, 0)).collect();
        let untested_events: Vec<(u32, u32)> = (0..480).map(|t| (t, 0)).collect();
        let positive = trace(0, &positive_events);
        let untested = trace(1, &untested_events);
        let ranked = baseline_similarities::<f64>(&[&positive], &[&untested], 480);
        assert_eq!(ranked[0].activation, 0.1);
    }

    #[test]
    fn merge_deduplicates_shared_events() {
        let a = trace(0, &[(0, 1), (1, 2)]);
        let b = trace(1, &[(1, 2), (2, 3)]);
        let merged = merge_positive_events(&[&a, &b]);
        assert_eq!(
            merged,
            vec![Event::new(0, 1), Event::new(1, 2), Event::new(2, 3)]
        );
    }
}
