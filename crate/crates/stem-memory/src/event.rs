use crate::MemoryError;
use fusion_art_core::Real;

/// One hour of one agent's trajectory: a (time step, place id) pair.
/// Time steps are global hour indices in `[0, T)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Event {
    pub time_step: u32,
    pub place_id: u32,
}

impl Event {
    pub fn new(time_step: u32, place_id: u32) -> Self {
        Self {
            time_step,
            place_id,
        }
    }
}

/// COVID-19 test status of an individual: untested, or tested positive
/// (symptomatic and isolated).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Positivity {
    Untested,
    Positive,
}

impl Positivity {
    pub fn from_flag(flag: u8) -> Option<Self> {
        match flag {
            0 => Some(Positivity::Untested),
            1 => Some(Positivity::Positive),
            _ => None,
        }
    }

    pub fn flag(self) -> u8 {
        match self {
            Positivity::Untested => 0,
            Positivity::Positive => 1,
        }
    }

    /// The stored connection weight on the positivity channel.
    pub fn weight<F: Real>(self) -> F {
        match self {
            Positivity::Untested => F::zero(),
            Positivity::Positive => F::one(),
        }
    }
}

/// An agent's hourly trajectory: events in strictly increasing time order.
/// A trace may be shorter than the horizon when the agent was isolated
/// partway through the observation window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpisodicTrace {
    agent_id: u32,
    events: Vec<Event>,
}

impl EpisodicTrace {
    pub fn new(agent_id: u32, events: Vec<Event>) -> Result<Self, MemoryError> {
        for (position, pair) in events.windows(2).enumerate() {
            if pair[1].time_step <= pair[0].time_step {
                return Err(MemoryError::NonIncreasingTrace {
                    agent_id,
                    position: position + 1,
                });
            }
        }
        Ok(Self { agent_id, events })
    }

    pub fn agent_id(&self) -> u32 {
        self.agent_id
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Checks every event against the memory bounds and the trace length
    /// against the horizon.
    pub fn validate_bounds(&self, time_horizon: u32, place_count: u32) -> Result<(), MemoryError> {
        if self.events.len() > time_horizon as usize {
            return Err(MemoryError::TraceTooLong {
                agent_id: self.agent_id,
                len: self.events.len(),
                bound: time_horizon,
            });
        }
        for event in &self.events {
            if event.time_step >= time_horizon {
                return Err(MemoryError::TimeOutOfRange {
                    value: event.time_step,
                    bound: time_horizon,
                });
            }
            if event.place_id >= place_count {
                return Err(MemoryError::PlaceOutOfRange {
                    value: event.place_id,
                    bound: place_count,
                });
            }
        }
        Ok(())
    }
}
