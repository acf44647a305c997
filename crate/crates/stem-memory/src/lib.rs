//! Collective spatio-temporal episodic memory.
//!
//! The memory is a two-layer network. The bottom layer categorizes hourly
//! (time, place) events into a shared *episode field*: one node per distinct
//! event across the whole population, holding the normalized pair
//! `(t/T, p/P)`. The top layer stores one code per individual: a binary
//! evidence vector over the episode field marking the events that person
//! experienced, together with their test status.
//!
//! Because a distinct `(t, p)` pair fully identifies an event, the bottom
//! layer's resonance search collapses to an exact integer lookup; the
//! normalized weights are still stored so the ART dynamics stay computable
//! over the field.

mod error;
mod event;
mod memory;
mod registry;
mod snapshot;

pub use error::MemoryError;
pub use event::{EpisodicTrace, Event, Positivity};
pub use memory::{build_memory, episode_vector, CollectiveMemory, IndividualNode};
pub use registry::{EventNode, EventNodeRegistry};
pub use snapshot::{read_snapshot, write_snapshot};

pub use fusion_art_core::Real;

/// Double-precision aliases for the common case.
pub type EventNodeRegistry64 = EventNodeRegistry<f64>;
pub type CollectiveMemory64 = CollectiveMemory<f64>;
