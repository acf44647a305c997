//! Agent-based COVID-19 spreading simulator.
//!
//! The world is a set of places in four infection-risk categories. Agents
//! live in households of four (very-high-risk homes), hold a fixed
//! workplace (middle risk) and visit shopping/social venues (high risk) and
//! outdoor spaces (low risk) on a daily cycle. Symptomatic cases follow a
//! step-function infectiousness profile: latent after infection, shedding
//! from one fifth of the incubation period, isolated at symptom onset.
//! Asymptomatic cases stay contagious for the rest of the simulation.
//!
//! A run is a pure function of (config, seed): it produces hourly traces,
//! positivity labels, per-agent ground truth and the infection log.

mod agent;
mod config;
mod dataset;
mod error;
mod output;
mod place;
mod schedule;
mod world;

pub use agent::{Agent, AgentProfile, Destiny, DiseaseState};
pub use config::{IndexProfile, InfectionRates, ScenarioConfig};
pub use dataset::{read_dataset, write_dataset, Dataset};
pub use error::SimError;
pub use output::{CaseStatus, GroundTruthRecord, HourCounts, InfectionRecord, SimulationOutput};
pub use place::{Place, PlaceCategory, PlaceLayout};
pub use schedule::{daily_block_hours, BlockHours};
pub use world::{build_world, hourly_infection_roll, run_simulation, sample_incubation, World};
