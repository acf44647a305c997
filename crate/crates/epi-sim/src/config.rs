use crate::{PlaceCategory, SimError};

/// Per-hour infection probability contribution by place category.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InfectionRates {
    pub very_high: f64,
    pub high: f64,
    pub middle: f64,
    pub low: f64,
}

impl Default for InfectionRates {
    fn default() -> Self {
        Self {
            very_high: 0.01,
            high: 0.005,
            middle: 0.001,
            low: 0.0001,
        }
    }
}

impl InfectionRates {
    pub fn for_category(&self, category: PlaceCategory) -> f64 {
        match category {
            PlaceCategory::VeryHigh => self.very_high,
            PlaceCategory::High => self.high,
            PlaceCategory::Middle => self.middle,
            PlaceCategory::Low => self.low,
        }
    }
}

/// Life cycle assigned to the seeded index cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexProfile {
    /// Ordinary daily routine.
    Normal,
    /// About ten hours a day at high-risk venues; models superspreading.
    HighRisk,
}

impl IndexProfile {
    pub fn label(self) -> &'static str {
        match self {
            IndexProfile::Normal => "normal",
            IndexProfile::HighRisk => "high_risk",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "normal" => Some(IndexProfile::Normal),
            "high_risk" => Some(IndexProfile::HighRisk),
            _ => None,
        }
    }
}

/// Full parameterization of one simulated world.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub name: String,
    pub agent_count: u32,
    pub very_high_places: u32,
    pub high_places: u32,
    pub middle_places: u32,
    pub low_places: u32,
    /// Number of seeded index cases, asymptomatic and infectious from hour 0.
    pub index_count: u32,
    pub index_profile: IndexProfile,
    /// Simulated duration in hours.
    pub time_horizon: u32,
    /// Fraction of infections destined to stay asymptomatic.
    pub acc_fraction: f64,
    pub rates: InfectionRates,
    pub incubation_mean_hours: f64,
    pub incubation_sd_hours: f64,
    /// Batch size for experiment runs.
    pub runs: u32,
    /// Master seed; run `i` of a batch uses `seed + i`.
    pub seed: u64,
}

pub const DEFAULT_SEED: u64 = 42;

impl ScenarioConfig {
    /// The three published scenario presets.
    pub fn preset(name: &str) -> Result<Self, SimError> {
        let (agent_count, very_high, high, middle, low, index_count, profile) = match name {
            "S200N" => (200, 50, 2, 10, 2, 1, IndexProfile::Normal),
            "S200H" => (200, 50, 2, 10, 2, 1, IndexProfile::HighRisk),
            "S1000N" => (1000, 250, 10, 50, 10, 5, IndexProfile::Normal),
            other => return Err(SimError::UnknownScenario(other.to_string())),
        };
        Ok(Self {
            name: name.to_string(),
            agent_count,
            very_high_places: very_high,
            high_places: high,
            middle_places: middle,
            low_places: low,
            index_count,
            index_profile: profile,
            time_horizon: 480,
            acc_fraction: 0.2,
            rates: InfectionRates::default(),
            incubation_mean_hours: 120.0,
            incubation_sd_hours: 12.0,
            runs: 15,
            seed: DEFAULT_SEED,
        })
    }

    pub fn place_count(&self) -> u32 {
        self.very_high_places + self.high_places + self.middle_places + self.low_places
    }

    /// Households of four; a non-divisible population leaves the last
    /// household smaller.
    pub fn household_count(&self) -> u32 {
        self.agent_count.div_ceil(4)
    }

    pub fn validate(&self) -> Result<(), SimError> {
        if self.agent_count == 0 {
            return Err(SimError::InvalidConfig("agent count must be positive".into()));
        }
        if self.time_horizon == 0 {
            return Err(SimError::InvalidConfig("time horizon must be positive".into()));
        }
        if self.index_count > self.agent_count {
            return Err(SimError::InvalidConfig(format!(
                "{} index cases exceed the population of {}",
                self.index_count, self.agent_count
            )));
        }
        if !(0.0..=1.0).contains(&self.acc_fraction) {
            return Err(SimError::InvalidConfig(format!(
                "acc fraction {} outside [0, 1]",
                self.acc_fraction
            )));
        }
        if self.household_count() > self.very_high_places {
            return Err(SimError::InvalidConfig(format!(
                "{} households need more homes than the {} very-high-risk places",
                self.household_count(),
                self.very_high_places
            )));
        }
        for (name, rate) in [
            ("very_high", self.rates.very_high),
            ("high", self.rates.high),
            ("middle", self.rates.middle),
            ("low", self.rates.low),
        ] {
            if !(0.0..=1.0).contains(&rate) {
                return Err(SimError::InvalidConfig(format!(
                    "{name} rate {rate} outside [0, 1]"
                )));
            }
        }
        if !(self.incubation_mean_hours > 0.0) || !(self.incubation_sd_hours >= 0.0) {
            return Err(SimError::InvalidConfig(
                "incubation parameters must be positive".into(),
            ));
        }
        if self.runs == 0 {
            return Err(SimError::InvalidConfig("runs must be positive".into()));
        }
        Ok(())
    }
}
