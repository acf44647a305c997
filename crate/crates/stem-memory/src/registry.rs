use std::collections::HashMap;

use crate::{Event, MemoryError};
use fusion_art_core::Real;

/// A learned event node: the raw (t, p) pair and its normalized weights.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EventNode<F: Real> {
    pub time_step: u32,
    pub place_id: u32,
    pub weight_time: F,
    pub weight_place: F,
}

/// The episode field: one node per distinct (time, place) event seen so far,
/// in creation order, with an exact-lookup index.
///
/// Matching an incoming event costs one hash lookup plus, at most, one node
/// commit; there is no scan over existing nodes.
#[derive(Debug, Clone)]
pub struct EventNodeRegistry<F: Real> {
    time_horizon: u32,
    place_count: u32,
    nodes: Vec<EventNode<F>>,
    index: HashMap<(u32, u32), usize>,
    lookups: u64,
}

impl<F: Real> EventNodeRegistry<F> {
    pub fn new(time_horizon: u32, place_count: u32) -> Result<Self, MemoryError> {
        if time_horizon == 0 || place_count == 0 {
            return Err(MemoryError::InvalidBounds {
                time_horizon,
                place_count,
            });
        }
        Ok(Self {
            time_horizon,
            place_count,
            nodes: Vec::new(),
            index: HashMap::new(),
            lookups: 0,
        })
    }

    pub fn time_horizon(&self) -> u32 {
        self.time_horizon
    }

    pub fn place_count(&self) -> u32 {
        self.place_count
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, index: usize) -> Option<&EventNode<F>> {
        self.nodes.get(index)
    }

    pub fn nodes(&self) -> &[EventNode<F>] {
        &self.nodes
    }

    /// Number of exact lookups performed so far; together with `len()` this
    /// exposes the per-event cost (one lookup, at most one commit).
    pub fn lookup_count(&self) -> u64 {
        self.lookups
    }

    pub fn find(&self, time_step: u32, place_id: u32) -> Option<usize> {
        self.index.get(&(time_step, place_id)).copied()
    }

    /// Returns the node index for the event, committing a new node with
    /// weights `(t/T, p/P)` when the event is novel.
    pub fn encode_event(&mut self, time_step: u32, place_id: u32) -> Result<usize, MemoryError> {
        if time_step >= self.time_horizon {
            return Err(MemoryError::TimeOutOfRange {
                value: time_step,
                bound: self.time_horizon,
            });
        }
        if place_id >= self.place_count {
            return Err(MemoryError::PlaceOutOfRange {
                value: place_id,
                bound: self.place_count,
            });
        }
        self.lookups += 1;
        if let Some(&existing) = self.index.get(&(time_step, place_id)) {
            return Ok(existing);
        }
        let index = self.nodes.len();
        self.nodes.push(EventNode {
            time_step,
            place_id,
            weight_time: F::from_u32(time_step).expect("time fits scalar")
                / F::from_u32(self.time_horizon).expect("horizon fits scalar"),
            weight_place: F::from_u32(place_id).expect("place fits scalar")
                / F::from_u32(self.place_count).expect("place count fits scalar"),
        });
        self.index.insert((time_step, place_id), index);
        Ok(index)
    }

    /// Maps node indices back to raw events.
    pub fn decode(&self, indices: &[usize]) -> Vec<Event> {
        indices
            .iter()
            .filter_map(|&i| self.nodes.get(i))
            .map(|n| Event::new(n.time_step, n.place_id))
            .collect()
    }

    /// Worst-case node capacity for a population of `individuals`:
    /// `T * min(N, P)`.
    pub fn capacity_bound(&self, individuals: usize) -> u64 {
        self.time_horizon as u64 * (individuals as u64).min(self.place_count as u64)
    }
}
