use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use stem_memory::{EpisodicTrace, Event, Positivity};

use crate::schedule::daily_schedule;
use crate::{
    Agent, AgentProfile, CaseStatus, Destiny, DiseaseState, GroundTruthRecord, HourCounts,
    IndexProfile, InfectionRecord, PlaceLayout, ScenarioConfig, SimError, SimulationOutput,
};

/// Fraction of the incubation period elapsed before viral shedding starts.
const SHED_FRACTION: f64 = 0.2;

/// Agents keep a habitual shopping and outdoor venue instead of redrawing
/// one per visit.
const HABITUAL_VENUES: bool = true;

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Independent substream seed for (run seed, stream index).
fn derive_seed(seed: u64, stream: u64) -> u64 {
    splitmix64(seed ^ splitmix64(stream))
}

/// One per-hour exposure roll: infection probability `min(1, rate * k)`
/// for `k` infectious co-occupants.
pub fn hourly_infection_roll(rate: f64, infectious: usize, rng: &mut ChaCha8Rng) -> bool {
    let p = (rate * infectious as f64).min(1.0);
    rng.random_bool(p)
}

/// Draws an incubation duration in hours from N(mean, sd^2), resampling
/// the (astronomically rare) non-positive values.
pub fn sample_incubation(mean: f64, sd: f64, rng: &mut ChaCha8Rng) -> f64 {
    let normal = Normal::new(mean, sd).expect("validated incubation parameters");
    loop {
        let draw = normal.sample(rng);
        if draw > 0.0 {
            return draw;
        }
    }
}

/// Mutable simulation state for one run.
#[derive(Debug)]
pub struct World {
    cfg: ScenarioConfig,
    seed: u64,
    layout: PlaceLayout,
    agents: Vec<Agent>,
    /// Today's hourly place per agent, refreshed at each day boundary.
    today: Vec<[u32; 24]>,
    schedule_rngs: Vec<ChaCha8Rng>,
    rng: ChaCha8Rng,
    hour: u32,
    traces: Vec<Vec<Event>>,
    infection_log: Vec<InfectionRecord>,
    counts: Vec<HourCounts>,
    incubation_draws: Vec<f64>,
    /// Scratch occupancy buffer, place id -> agent ids present this hour.
    occupancy: Vec<Vec<u32>>,
}

/// Builds the initial world: the place graph, households of four, fixed
/// workplaces, and the seeded index cases (asymptomatic and infectious from
/// hour 0). Bit-identical for identical (config, seed).
pub fn build_world(cfg: &ScenarioConfig, seed: u64) -> Result<World, SimError> {
    cfg.validate()?;
    let layout = PlaceLayout::from_config(cfg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, 0));

    let mut agents: Vec<Agent> = (0..cfg.agent_count)
        .map(|id| Agent {
            id,
            home: id / 4,
            workplace: rng.random_range(layout.workplaces()),
            profile: AgentProfile::Normal,
            disease: DiseaseState::Susceptible,
            destiny: None,
            infection_hour: None,
            is_index: false,
            phase: rng.random_range(0..24),
            high_venue: if HABITUAL_VENUES {
                Some(rng.random_range(layout.high_venues()))
            } else {
                None
            },
            low_venue: if HABITUAL_VENUES {
                Some(rng.random_range(layout.outdoor()))
            } else {
                None
            },
            schedule_stream: u64::from(id) + 1,
        })
        .collect();

    let chosen = rand::seq::index::sample(&mut rng, cfg.agent_count as usize, cfg.index_count as usize);
    for index in chosen.iter() {
        let agent = &mut agents[index];
        agent.disease = DiseaseState::InfectiousAsymptomatic { since: 0 };
        agent.destiny = Some(Destiny::Asymptomatic);
        agent.infection_hour = Some(0);
        agent.is_index = true;
        if cfg.index_profile == IndexProfile::HighRisk {
            agent.profile = AgentProfile::HighRiskIndex;
        }
    }

    let schedule_rngs = agents
        .iter()
        .map(|a| ChaCha8Rng::seed_from_u64(derive_seed(seed, a.schedule_stream)))
        .collect();

    let population = cfg.agent_count as usize;
    Ok(World {
        cfg: cfg.clone(),
        seed,
        occupancy: vec![Vec::new(); layout.total() as usize],
        layout,
        today: vec![[0; 24]; population],
        schedule_rngs,
        rng,
        hour: 0,
        traces: vec![Vec::with_capacity(cfg.time_horizon as usize); population],
        infection_log: Vec::new(),
        counts: Vec::with_capacity(cfg.time_horizon as usize),
        incubation_draws: Vec::new(),
        agents,
    })
}

impl World {
    pub fn agents(&self) -> &[Agent] {
        &self.agents
    }

    pub fn layout(&self) -> &PlaceLayout {
        &self.layout
    }

    pub fn hour(&self) -> u32 {
        self.hour
    }

    fn cumulative_counts(&self) -> HourCounts {
        let mut counts = HourCounts::default();
        for agent in &self.agents {
            match agent.destiny {
                Some(Destiny::Asymptomatic) => counts.acc += 1,
                Some(Destiny::WillBeSymptomatic) => {
                    counts.scc += 1;
                    if agent.disease.is_isolated() {
                        counts.tscc += 1;
                    }
                }
                None => {}
            }
        }
        counts
    }

    /// Advances the world by one hour: disease-stage transitions, movement
    /// along today's schedules, then co-location infection rolls.
    pub fn step_hour(&mut self) {
        let hour = self.hour;

        // Stage transitions due at this hour. Isolation truncates the trace
        // here: the isolated agent occupies no place from this hour on.
        for agent in &mut self.agents {
            if let DiseaseState::LatentScc { shed_at, onset_at } = agent.disease {
                if hour >= shed_at {
                    agent.disease = DiseaseState::InfectiousPresymptomatic { onset_at };
                }
            }
            if let DiseaseState::InfectiousPresymptomatic { onset_at } = agent.disease {
                if hour >= onset_at {
                    agent.disease = DiseaseState::IsolatedPositive { since: onset_at };
                }
            }
        }

        // Cumulative counts at the beginning of the hour, before any new
        // infection lands.
        self.counts.push(self.cumulative_counts());

        // Fresh schedules at each day boundary.
        if hour % 24 == 0 {
            for (index, agent) in self.agents.iter().enumerate() {
                if !agent.disease.is_isolated() {
                    self.today[index] =
                        daily_schedule(agent, &self.layout, &mut self.schedule_rngs[index]);
                }
            }
        }

        // Movement: non-isolated agents occupy their scheduled place and
        // extend their trace.
        for occupants in &mut self.occupancy {
            occupants.clear();
        }
        for agent in &self.agents {
            if agent.disease.is_isolated() {
                continue;
            }
            let place = self.today[agent.id as usize][(hour % 24) as usize];
            self.occupancy[place as usize].push(agent.id);
            self.traces[agent.id as usize].push(Event::new(hour, place));
        }

        // Infections, place by place. Sources are the infectious occupants
        // at the start of the hour, so an agent infected now first exposes
        // others the following hour.
        for place_id in 0..self.occupancy.len() {
            let occupants = &self.occupancy[place_id];
            if occupants.len() < 2 {
                continue;
            }
            let infectious: Vec<u32> = occupants
                .iter()
                .copied()
                .filter(|&id| self.agents[id as usize].disease.is_infectious())
                .collect();
            if infectious.is_empty() {
                continue;
            }
            let category = self
                .layout
                .category_of(place_id as u32)
                .expect("occupied place exists");
            let rate = self.cfg.rates.for_category(category);

            let susceptible: Vec<u32> = occupants
                .iter()
                .copied()
                .filter(|&id| self.agents[id as usize].disease.is_susceptible())
                .collect();
            for target in susceptible {
                if !hourly_infection_roll(rate, infectious.len(), &mut self.rng) {
                    continue;
                }
                let source = infectious[self.rng.random_range(0..infectious.len())];
                self.infect(target, hour, place_id as u32, source);
            }
        }

        self.hour += 1;
    }

    fn infect(&mut self, target: u32, hour: u32, place_id: u32, source: u32) {
        let asymptomatic = self.rng.random_bool(self.cfg.acc_fraction);
        let agent = &mut self.agents[target as usize];
        agent.infection_hour = Some(hour);
        if asymptomatic {
            agent.destiny = Some(Destiny::Asymptomatic);
            agent.disease = DiseaseState::InfectiousAsymptomatic { since: hour };
        } else {
            agent.destiny = Some(Destiny::WillBeSymptomatic);
            let incubation = sample_incubation(
                self.cfg.incubation_mean_hours,
                self.cfg.incubation_sd_hours,
                &mut self.rng,
            );
            self.incubation_draws.push(incubation);
            let onset_offset = (incubation.round() as u32).max(1);
            let shed_offset = ((SHED_FRACTION * incubation).round() as u32).min(onset_offset);
            agent.disease = DiseaseState::LatentScc {
                shed_at: hour + shed_offset,
                onset_at: hour + onset_offset,
            };
        }
        self.infection_log.push(InfectionRecord {
            hour,
            place_id,
            source_id: source,
            target_id: target,
        });
    }

    /// Steps through the whole horizon and assembles the outputs.
    pub fn run(mut self) -> SimulationOutput {
        while self.hour < self.cfg.time_horizon {
            self.step_hour();
        }

        let labels: Vec<Positivity> = self
            .agents
            .iter()
            .map(|a| {
                if a.disease.is_isolated() {
                    Positivity::Positive
                } else {
                    Positivity::Untested
                }
            })
            .collect();

        let ground_truth = self
            .agents
            .iter()
            .map(|a| GroundTruthRecord {
                agent_id: a.id,
                status: if a.is_index {
                    CaseStatus::Index
                } else {
                    match a.disease {
                        DiseaseState::InfectiousAsymptomatic { .. } => CaseStatus::Acc,
                        DiseaseState::IsolatedPositive { .. } => CaseStatus::SccIsolated,
                        DiseaseState::LatentScc { .. }
                        | DiseaseState::InfectiousPresymptomatic { .. } => {
                            CaseStatus::SccPresymptomatic
                        }
                        DiseaseState::Susceptible => CaseStatus::Healthy,
                    }
                },
                destiny: a.destiny,
                infection_hour: a.infection_hour,
            })
            .collect();

        let traces = self
            .traces
            .into_iter()
            .enumerate()
            .map(|(id, events)| {
                EpisodicTrace::new(id as u32, events).expect("hourly events increase in time")
            })
            .collect();

        SimulationOutput {
            config: self.cfg,
            seed: self.seed,
            traces,
            labels,
            ground_truth,
            infection_log: self.infection_log,
            counts: self.counts,
            incubation_draws: self.incubation_draws,
        }
    }
}

/// Builds and runs one world; the output is a pure function of
/// (config, seed).
pub fn run_simulation(cfg: &ScenarioConfig, seed: u64) -> Result<SimulationOutput, SimError> {
    Ok(build_world(cfg, seed)?.run())
}
