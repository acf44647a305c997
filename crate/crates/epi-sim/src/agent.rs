/// Whether an infection will turn symptomatic; drawn at infection time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Destiny {
    WillBeSymptomatic,
    Asymptomatic,
}

impl Destiny {
    pub fn label(self) -> &'static str {
        match self {
            Destiny::WillBeSymptomatic => "symptomatic",
            Destiny::Asymptomatic => "asymptomatic",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "symptomatic" => Some(Destiny::WillBeSymptomatic),
            "asymptomatic" => Some(Destiny::Asymptomatic),
            _ => None,
        }
    }
}

/// Daily life cycle of an agent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AgentProfile {
    Normal,
    /// Index case of the superspreading scenario: about ten hours per day
    /// at high-risk venues, the rest at home.
    HighRiskIndex,
}

/// Disease progression. Symptomatic cases move rightward through the
/// latent, shedding and isolated stages; asymptomatic cases jump straight
/// to the contagious state and stay there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiseaseState {
    Susceptible,
    /// Infected, not yet shedding. `shed_at` is infection + 0.2 * T_in,
    /// `onset_at` infection + T_in.
    LatentScc { shed_at: u32, onset_at: u32 },
    /// Shedding before symptom onset.
    InfectiousPresymptomatic { onset_at: u32 },
    /// Symptomatic, tested positive and isolated; occupies no place.
    IsolatedPositive { since: u32 },
    /// Asymptomatic carrier, contagious for the rest of the simulation.
    InfectiousAsymptomatic { since: u32 },
}

impl DiseaseState {
    pub fn is_susceptible(&self) -> bool {
        matches!(self, DiseaseState::Susceptible)
    }

    pub fn is_infectious(&self) -> bool {
        matches!(
            self,
            DiseaseState::InfectiousPresymptomatic { .. }
                | DiseaseState::InfectiousAsymptomatic { .. }
        )
    }

    pub fn is_isolated(&self) -> bool {
        matches!(self, DiseaseState::IsolatedPositive { .. })
    }

    pub fn is_infected(&self) -> bool {
        !self.is_susceptible()
    }
}

/// One simulated person.
#[derive(Debug, Clone)]
pub struct Agent {
    pub id: u32,
    /// Home place id; fixed, shared by the household.
    pub home: u32,
    /// Workplace id; fixed for the whole simulation.
    pub workplace: u32,
    pub profile: AgentProfile,
    pub disease: DiseaseState,
    pub destiny: Option<Destiny>,
    pub infection_hour: Option<u32>,
    /// Seeded patient zero.
    pub is_index: bool,
    /// Hour of day at which this agent's daily cycle starts.
    pub phase: u32,
    /// Habitual shopping/social venue; `None` redraws uniformly per visit.
    pub high_venue: Option<u32>,
    /// Habitual outdoor venue; `None` redraws uniformly per visit.
    pub low_venue: Option<u32>,
    /// Identifier of this agent's dedicated schedule RNG substream.
    pub schedule_stream: u64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn state_predicates() {
        assert!(DiseaseState::Susceptible.is_susceptible());
        assert!(!DiseaseState::Susceptible.is_infected());
        let latent = DiseaseState::LatentScc {
            shed_at: 10,
            onset_at: 50,
        };
        assert!(latent.is_infected());
        assert!(!latent.is_infectious());
        assert!(DiseaseState::InfectiousPresymptomatic { onset_at: 50 }.is_infectious());
        assert!(DiseaseState::InfectiousAsymptomatic { since: 0 }.is_infectious());
        let isolated = DiseaseState::IsolatedPositive { since: 50 };
        assert!(isolated.is_isolated());
        assert!(!isolated.is_infectious());
    }
}
