use std::collections::BTreeSet;

use stem_memory::{EpisodicTrace, Positivity};

use crate::{Destiny, ScenarioConfig};

/// End-of-run classification of an agent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseStatus {
    Healthy,
    /// Asymptomatic carrier infected during the run.
    Acc,
    /// Infected with symptomatic destiny, onset not reached by the end.
    SccPresymptomatic,
    /// Symptomatic, tested positive, isolated: the only CP = 1 status.
    SccIsolated,
    /// Seeded patient zero; untested and counted with the carriers.
    Index,
}

impl CaseStatus {
    pub fn label(self) -> &'static str {
        match self {
            CaseStatus::Healthy => "healthy",
            CaseStatus::Acc => "acc",
            CaseStatus::SccPresymptomatic => "scc_presymptomatic",
            CaseStatus::SccIsolated => "scc_isolated",
            CaseStatus::Index => "index",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "healthy" => Some(CaseStatus::Healthy),
            "acc" => Some(CaseStatus::Acc),
            "scc_presymptomatic" => Some(CaseStatus::SccPresymptomatic),
            "scc_isolated" => Some(CaseStatus::SccIsolated),
            "index" => Some(CaseStatus::Index),
            _ => None,
        }
    }
}

/// Per-agent ground truth recorded by the simulator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroundTruthRecord {
    pub agent_id: u32,
    pub status: CaseStatus,
    pub destiny: Option<Destiny>,
    pub infection_hour: Option<u32>,
}

/// One transmission: an infectious source co-located with the target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InfectionRecord {
    pub hour: u32,
    pub place_id: u32,
    pub source_id: u32,
    pub target_id: u32,
}

/// Cumulative case counts at the beginning of an hour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct HourCounts {
    /// Asymptomatic carriers, index cases included.
    pub acc: u32,
    /// Tested-positive (isolated) symptomatic cases.
    pub tscc: u32,
    /// All symptomatic-destiny infections, isolated or not.
    pub scc: u32,
}

/// Everything a run produces.
#[derive(Debug, Clone)]
pub struct SimulationOutput {
    pub config: ScenarioConfig,
    pub seed: u64,
    /// Hourly trajectory per agent, truncated at isolation.
    pub traces: Vec<EpisodicTrace>,
    /// CP label per agent, indexed by agent id.
    pub labels: Vec<Positivity>,
    pub ground_truth: Vec<GroundTruthRecord>,
    pub infection_log: Vec<InfectionRecord>,
    /// Cumulative counts at the beginning of each hour, length = horizon.
    pub counts: Vec<HourCounts>,
    /// Raw incubation draws (hours), for distribution diagnostics.
    pub incubation_draws: Vec<f64>,
}

impl SimulationOutput {
    /// Agents evaluated as carrier targets: true ACCs plus the index cases.
    pub fn acc_targets(&self) -> BTreeSet<u32> {
        self.ground_truth
            .iter()
            .filter(|r| matches!(r.status, CaseStatus::Acc | CaseStatus::Index))
            .map(|r| r.agent_id)
            .collect()
    }

    pub fn index_targets(&self) -> BTreeSet<u32> {
        self.ground_truth
            .iter()
            .filter(|r| r.status == CaseStatus::Index)
            .map(|r| r.agent_id)
            .collect()
    }

    pub fn positive_traces(&self) -> Vec<&EpisodicTrace> {
        self.traces
            .iter()
            .filter(|t| self.labels[t.agent_id() as usize] == Positivity::Positive)
            .collect()
    }

    pub fn untested_traces(&self) -> Vec<&EpisodicTrace> {
        self.traces
            .iter()
            .filter(|t| self.labels[t.agent_id() as usize] == Positivity::Untested)
            .collect()
    }

    /// Dataset view for memory construction, in agent-id order.
    pub fn dataset(&self) -> Vec<(EpisodicTrace, Positivity)> {
        self.traces
            .iter()
            .map(|t| (t.clone(), self.labels[t.agent_id() as usize]))
            .collect()
    }

    /// Number of infections attributed to the given source agent.
    pub fn secondary_infections(&self, source_id: u32) -> usize {
        self.infection_log
            .iter()
            .filter(|r| r.source_id == source_id)
            .count()
    }
}
