use std::collections::{BTreeSet, HashMap};

use crate::{EpisodicTrace, Event, EventNodeRegistry, MemoryError, Positivity};
use fusion_art_core::Real;

/// A learned per-individual code: the sparse evidence over event nodes and
/// the stored positivity weight.
///
/// The semantic contract is a dense binary vector over the full episode
/// field, implicitly zero-extended whenever the field grows; storage is the
/// sorted set of indices where that vector is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndividualNode {
    agent_id: u32,
    evidence: Vec<usize>,
    positivity: Positivity,
}

impl IndividualNode {
    pub(crate) fn new(agent_id: u32, evidence: Vec<usize>, positivity: Positivity) -> Self {
        debug_assert!(evidence.windows(2).all(|w| w[0] < w[1]));
        Self {
            agent_id,
            evidence,
            positivity,
        }
    }

    pub fn agent_id(&self) -> u32 {
        self.agent_id
    }

    /// Sorted indices of the event nodes this individual experienced.
    pub fn evidence_indices(&self) -> &[usize] {
        &self.evidence
    }

    /// `|w^e|`: the number of distinct events in the individual's trace.
    pub fn evidence_len(&self) -> usize {
        self.evidence.len()
    }

    pub fn positivity(&self) -> Positivity {
        self.positivity
    }

    /// The dense evidence vector, zero-extended to `registry_len`.
    pub fn dense_evidence<F: Real>(&self, registry_len: usize) -> Vec<F> {
        let mut dense = vec![F::zero(); registry_len];
        for &index in &self.evidence {
            if index < registry_len {
                dense[index] = F::one();
            }
        }
        dense
    }
}

/// The two-layer memory: the shared episode field plus one code per
/// encoded individual, in encoding order.
///
/// Construction is sequential; once built the memory is immutable and safe
/// to share across any number of concurrent readers.
#[derive(Debug, Clone)]
pub struct CollectiveMemory<F: Real> {
    registry: EventNodeRegistry<F>,
    individuals: Vec<IndividualNode>,
    by_agent: HashMap<u32, usize>,
}

impl<F: Real> CollectiveMemory<F> {
    pub fn new(time_horizon: u32, place_count: u32) -> Result<Self, MemoryError> {
        Ok(Self {
            registry: EventNodeRegistry::new(time_horizon, place_count)?,
            individuals: Vec::new(),
            by_agent: HashMap::new(),
        })
    }

    pub fn registry(&self) -> &EventNodeRegistry<F> {
        &self.registry
    }

    pub fn individuals(&self) -> &[IndividualNode] {
        &self.individuals
    }

    pub fn individual_count(&self) -> usize {
        self.individuals.len()
    }

    pub fn individual(&self, agent_id: u32) -> Option<&IndividualNode> {
        self.by_agent.get(&agent_id).map(|&i| &self.individuals[i])
    }

    /// Encodes one individual bottom-up: every event of the trace is looked
    /// up or committed in the episode field, the resulting index set becomes
    /// the evidence code, and a fresh top-layer node stores it together with
    /// the positivity by overwrite learning.
    pub fn encode_individual(
        &mut self,
        trace: &EpisodicTrace,
        positivity: Positivity,
    ) -> Result<&IndividualNode, MemoryError> {
        if self.by_agent.contains_key(&trace.agent_id()) {
            return Err(MemoryError::DuplicateAgent {
                agent_id: trace.agent_id(),
            });
        }
        trace.validate_bounds(self.registry.time_horizon(), self.registry.place_count())?;

        let mut indices = BTreeSet::new();
        for event in trace.events() {
            indices.insert(self.registry.encode_event(event.time_step, event.place_id)?);
        }
        let node = IndividualNode::new(
            trace.agent_id(),
            indices.into_iter().collect(),
            positivity,
        );
        self.by_agent
            .insert(trace.agent_id(), self.individuals.len());
        self.individuals.push(node);
        Ok(self.individuals.last().expect("just pushed"))
    }

    /// Maps an individual's evidence back to the raw events it stands for.
    pub fn recover_events(&self, node: &IndividualNode) -> Vec<Event> {
        self.registry.decode(node.evidence_indices())
    }

    pub(crate) fn from_parts(
        registry: EventNodeRegistry<F>,
        individuals: Vec<IndividualNode>,
    ) -> Self {
        let by_agent = individuals
            .iter()
            .enumerate()
            .map(|(i, node)| (node.agent_id(), i))
            .collect();
        Self {
            registry,
            individuals,
            by_agent,
        }
    }
}

/// The dense episode vector of a trace against the registry's current state,
/// encoding novel events on the fly.
pub fn episode_vector<F: Real>(
    trace: &EpisodicTrace,
    registry: &mut EventNodeRegistry<F>,
) -> Result<Vec<bool>, MemoryError> {
    trace.validate_bounds(registry.time_horizon(), registry.place_count())?;
    let mut indices = Vec::with_capacity(trace.len());
    for event in trace.events() {
        indices.push(registry.encode_event(event.time_step, event.place_id)?);
    }
    let mut dense = vec![false; registry.len()];
    for index in indices {
        dense[index] = true;
    }
    Ok(dense)
}

/// Builds the memory for a whole dataset, one individual at a time in
/// dataset order.
pub fn build_memory<F: Real>(
    time_horizon: u32,
    place_count: u32,
    dataset: &[(EpisodicTrace, Positivity)],
) -> Result<CollectiveMemory<F>, MemoryError> {
    let mut memory = CollectiveMemory::new(time_horizon, place_count)?;
    for (trace, positivity) in dataset {
        memory.encode_individual(trace, *positivity)?;
    }
    Ok(memory)
}
