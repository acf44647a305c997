//! Multi-channel fusion ART primitives.
//!
//! A fusion ART network categorizes patterns presented on several parallel
//! input channels at once. Each category node holds one weight vector per
//! channel; bottom-up *choice activation* scores nodes against an input,
//! top-down *template matching* decides whether the winner resonates, and
//! *template learning* erodes the winner's weights toward the input.
//!
//! These primitives drive both layers of the collective episodic memory:
//! the episode field that categorizes (time, place) events and the
//! individual field that aggregates them per person.

mod activity;
mod dynamics;
mod error;
mod field;
mod params;
mod scalar;

pub use activity::ActivityVector;
pub use dynamics::{choice_activation, template_learn, template_match, MatchOutcome};
pub use error::ArtError;
pub use field::{CategoryNode, ChannelSpec, FusionField, ResonanceOutcome};
pub use params::ChannelParams;
pub use scalar::Real;

/// Double-precision aliases for the common case.
pub type ActivityVector64 = ActivityVector<f64>;
pub type ChannelParams64 = ChannelParams<f64>;
pub type CategoryNode64 = CategoryNode<f64>;
pub type FusionField64 = FusionField<f64>;
