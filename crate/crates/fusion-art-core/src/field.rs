use crate::dynamics::{choice_activation, template_learn, template_match};
use crate::{ActivityVector, ArtError, ChannelParams, Real};

/// A category node: one weight vector per channel.
#[derive(Debug, Clone, PartialEq)]
pub struct CategoryNode<F: Real> {
    weights: Vec<Vec<F>>,
    committed: bool,
}

impl<F: Real> CategoryNode<F> {
    /// A fresh uncommitted node carries all-ones weights, so the first
    /// `β = 1` learning step stores the input exactly.
    pub fn uncommitted(dims: &[usize]) -> Self {
        Self {
            weights: dims.iter().map(|&d| vec![F::one(); d]).collect(),
            committed: false,
        }
    }

    /// A committed node from explicit weights, validated to `[0, 1]`.
    pub fn from_weights(weights: Vec<Vec<F>>) -> Result<Self, ArtError> {
        for channel in &weights {
            for (index, &value) in channel.iter().enumerate() {
                if !(value >= F::zero() && value <= F::one()) {
                    return Err(ArtError::ActivityOutOfRange {
                        index,
                        value: value.to_f64().unwrap_or(f64::NAN),
                    });
                }
            }
        }
        Ok(Self {
            weights,
            committed: true,
        })
    }

    pub fn channel_count(&self) -> usize {
        self.weights.len()
    }

    pub fn is_committed(&self) -> bool {
        self.committed
    }

    pub fn weights(&self, channel: usize) -> Result<&[F], ArtError> {
        self.weights
            .get(channel)
            .map(Vec::as_slice)
            .ok_or(ArtError::UnknownChannel {
                channel,
                channels: self.weights.len(),
            })
    }

    /// Readout: a copy of the stored template for one channel. The node is
    /// not mutated.
    pub fn readout(&self, channel: usize) -> Result<ActivityVector<F>, ArtError> {
        Ok(ActivityVector::from_validated(
            self.weights(channel)?.to_vec(),
        ))
    }

    /// Applies the learning rule on every channel and commits the node.
    pub fn learn(
        &mut self,
        inputs: &[ActivityVector<F>],
        params: &[ChannelParams<F>],
    ) -> Result<(), ArtError> {
        if inputs.len() != self.weights.len() || params.len() != self.weights.len() {
            return Err(ArtError::ChannelCountMismatch {
                expected: self.weights.len(),
                actual: inputs.len(),
            });
        }
        // Validate all channels before touching any weights.
        let mut learned = Vec::with_capacity(self.weights.len());
        for ((w, x), p) in self.weights.iter().zip(inputs).zip(params) {
            // An uncommitted node always stores the input exactly.
            let beta = if self.committed { p.beta() } else { F::one() };
            learned.push(template_learn(w, x, beta)?);
        }
        self.weights = learned;
        self.committed = true;
        Ok(())
    }
}

/// One channel of a field: its dimension and dynamics parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelSpec<F: Real> {
    pub dim: usize,
    pub params: ChannelParams<F>,
}

/// What a resonance search did: which node won and whether it is new.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResonanceOutcome {
    pub node: usize,
    pub recruited: bool,
}

/// A category field: parallel input channels and the ordered list of nodes
/// learned so far. Node order is creation order and never changes, which
/// downstream ranking relies on for tie-breaking.
#[derive(Debug, Clone)]
pub struct FusionField<F: Real> {
    channels: Vec<ChannelSpec<F>>,
    nodes: Vec<CategoryNode<F>>,
}

impl<F: Real> FusionField<F> {
    pub fn new(channels: Vec<ChannelSpec<F>>) -> Self {
        Self {
            channels,
            nodes: Vec::new(),
        }
    }

    pub fn channel_count(&self) -> usize {
        self.channels.len()
    }

    pub fn channels(&self) -> &[ChannelSpec<F>] {
        &self.channels
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, index: usize) -> Option<&CategoryNode<F>> {
        self.nodes.get(index)
    }

    pub fn nodes(&self) -> &[CategoryNode<F>] {
        &self.nodes
    }

    fn check_inputs(&self, inputs: &[ActivityVector<F>]) -> Result<(), ArtError> {
        if inputs.len() != self.channels.len() {
            return Err(ArtError::ChannelCountMismatch {
                expected: self.channels.len(),
                actual: inputs.len(),
            });
        }
        for (channel, (input, spec)) in inputs.iter().zip(&self.channels).enumerate() {
            if input.len() != spec.dim {
                return Err(ArtError::DimensionMismatch {
                    channel,
                    input_len: input.len(),
                    weight_len: spec.dim,
                });
            }
        }
        Ok(())
    }

    fn params_vec(&self) -> Vec<ChannelParams<F>> {
        self.channels.iter().map(|c| c.params).collect()
    }

    /// Choice activation of every node against the inputs, in node order.
    pub fn activate_all(&self, inputs: &[ActivityVector<F>]) -> Result<Vec<F>, ArtError> {
        self.check_inputs(inputs)?;
        let params = self.params_vec();
        self.nodes
            .iter()
            .map(|node| choice_activation(inputs, node, &params))
            .collect()
    }

    /// One resonance search: rank nodes by activation, take the best node
    /// that passes vigilance on every channel and learn the input into it;
    /// recruit a fresh node when none resonates.
    pub fn resonance_search(
        &mut self,
        inputs: &[ActivityVector<F>],
    ) -> Result<ResonanceOutcome, ArtError> {
        let activations = self.activate_all(inputs)?;
        let params = self.params_vec();

        let mut order: Vec<usize> = (0..self.nodes.len()).collect();
        order.sort_by(|&a, &b| {
            activations[b]
                .partial_cmp(&activations[a])
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.cmp(&b))
        });

        'candidates: for index in order {
            let node = &self.nodes[index];
            for (channel, (input, p)) in inputs.iter().zip(&params).enumerate() {
                let outcome = template_match(input, node.weights(channel)?, p.rho())?;
                if !outcome.resonant {
                    continue 'candidates;
                }
            }
            self.nodes[index].learn(inputs, &params)?;
            return Ok(ResonanceOutcome {
                node: index,
                recruited: false,
            });
        }

        let dims: Vec<usize> = self.channels.iter().map(|c| c.dim).collect();
        let mut node = CategoryNode::uncommitted(&dims);
        node.learn(inputs, &params)?;
        self.nodes.push(node);
        Ok(ResonanceOutcome {
            node: self.nodes.len() - 1,
            recruited: true,
        })
    }
}
