use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::{Agent, AgentProfile, PlaceLayout};

/// Hours per activity block for one day. Always sums to 24.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockHours {
    pub home: u32,
    pub work: u32,
    pub high: u32,
    pub low: u32,
}

impl BlockHours {
    pub fn total(&self) -> u32 {
        self.home + self.work + self.high + self.low
    }
}

fn jittered(base: i64, jitter: i64) -> u32 {
    (base + jitter).max(1) as u32
}

/// Block durations for a day. The canonical cycle is about 10 h home, 8 h
/// work, 3 h shopping/social, 3 h outdoors; `jitter` perturbs the work,
/// high and low blocks by up to an hour each (clamped to at least one hour)
/// and the home block absorbs the remainder. The high-risk index profile
/// spends about 10 h at high-risk venues and the rest at home.
pub fn daily_block_hours(profile: AgentProfile, jitter: [i64; 3]) -> BlockHours {
    match profile {
        AgentProfile::Normal => {
            let work = jittered(8, jitter[0]);
            let high = jittered(3, jitter[1]);
            let low = jittered(3, jitter[2]);
            BlockHours {
                home: 24 - work - high - low,
                work,
                high,
                low,
            }
        }
        AgentProfile::HighRiskIndex => {
            let high = jittered(10, jitter[0]);
            BlockHours {
                home: 24 - high,
                work: 0,
                high,
                low: 0,
            }
        }
    }
}

/// One day of hourly place assignments for an agent.
///
/// Blocks run contiguously in home, work, high, low order, starting at the
/// agent's fixed daily phase: households keep a stable routine, so the
/// population's venue visits spread over the whole day instead of piling
/// into the same hours, while housemates still share their home block.
/// High- and low-risk venues are drawn uniformly per visit.
pub fn daily_schedule(agent: &Agent, layout: &PlaceLayout, rng: &mut ChaCha8Rng) -> [u32; 24] {
    let jitter = [
        rng.random_range(-1..=1),
        rng.random_range(-1..=1),
        rng.random_range(-1..=1),
    ];
    let blocks = daily_block_hours(agent.profile, jitter);
    let offset = agent.phase;

    let high_venue = match agent.high_venue {
        Some(v) => v,
        None => rng.random_range(layout.high_venues()),
    };
    let low_venue = match agent.low_venue {
        Some(v) => v,
        None => rng.random_range(layout.outdoor()),
    };

    let mut canonical = [0u32; 24];
    let mut position = 0;
    for (hours, place) in [
        (blocks.home, agent.home),
        (blocks.work, agent.workplace),
        (blocks.high, high_venue),
        (blocks.low, low_venue),
    ] {
        for _ in 0..hours {
            canonical[position] = place;
            position += 1;
        }
    }
    debug_assert_eq!(position, 24);

    let mut day = [0u32; 24];
    for (hour, slot) in day.iter_mut().enumerate() {
        *slot = canonical[(hour as u32 + 24 - offset) as usize % 24];
    }
    day
}
