use std::ops::Range;

use crate::{ScenarioConfig, SimError};

/// Infection-risk category of a place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlaceCategory {
    /// Homes, nursing rooms: very high risk.
    VeryHigh,
    /// Cafes, restaurants, shopping malls: high risk.
    High,
    /// Offices and factories: middle risk.
    Middle,
    /// Playgrounds, parks, open spaces: low risk.
    Low,
}

impl PlaceCategory {
    pub fn label(self) -> &'static str {
        match self {
            PlaceCategory::VeryHigh => "very_high",
            PlaceCategory::High => "high",
            PlaceCategory::Middle => "middle",
            PlaceCategory::Low => "low",
        }
    }
}

/// One place in the world graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Place {
    pub id: u32,
    pub category: PlaceCategory,
}

/// Contiguous id layout of the place graph: homes first, then high-risk
/// venues, workplaces and outdoor spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaceLayout {
    very_high: Range<u32>,
    high: Range<u32>,
    middle: Range<u32>,
    low: Range<u32>,
}

impl PlaceLayout {
    pub fn from_config(cfg: &ScenarioConfig) -> Result<Self, SimError> {
        let vh_end = cfg.very_high_places;
        let h_end = vh_end + cfg.high_places;
        let m_end = h_end + cfg.middle_places;
        let l_end = m_end + cfg.low_places;
        if cfg.very_high_places == 0
            || cfg.high_places == 0
            || cfg.middle_places == 0
            || cfg.low_places == 0
        {
            return Err(SimError::InvalidConfig(
                "every place category needs at least one place".into(),
            ));
        }
        Ok(Self {
            very_high: 0..vh_end,
            high: vh_end..h_end,
            middle: h_end..m_end,
            low: m_end..l_end,
        })
    }

    pub fn total(&self) -> u32 {
        self.low.end
    }

    pub fn category_of(&self, place_id: u32) -> Option<PlaceCategory> {
        if self.very_high.contains(&place_id) {
            Some(PlaceCategory::VeryHigh)
        } else if self.high.contains(&place_id) {
            Some(PlaceCategory::High)
        } else if self.middle.contains(&place_id) {
            Some(PlaceCategory::Middle)
        } else if self.low.contains(&place_id) {
            Some(PlaceCategory::Low)
        } else {
            None
        }
    }

    pub fn homes(&self) -> Range<u32> {
        self.very_high.clone()
    }

    pub fn high_venues(&self) -> Range<u32> {
        self.high.clone()
    }

    pub fn workplaces(&self) -> Range<u32> {
        self.middle.clone()
    }

    pub fn outdoor(&self) -> Range<u32> {
        self.low.clone()
    }

    /// All places in id order.
    pub fn places(&self) -> Vec<Place> {
        (0..self.total())
            .map(|id| Place {
                id,
                category: self.category_of(id).expect("id within layout"),
            })
            .collect()
    }
}
