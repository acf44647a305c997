//! Search for likely asymptomatic carriers over a built episodic memory.
//!
//! The query runs in two steps. *Evidence pooling* activates the individual
//! layer on the positivity channel alone and fuzzy-ORs the evidence vectors
//! of every tested-positive case into a single pooled trace. *Ranking*
//! activates every untested individual's code against that pooled trace
//! with the choice function and orders them by activation.
//!
//! A brute-force baseline computes the same similarities directly from raw
//! traces by scanning the merged positive event list per event; it is the
//! reference the memory-based path is checked against, and the yardstick
//! for the timing comparison.

mod baseline;
mod error;
mod evidence;
mod rank;
mod table;
mod timing;

pub use baseline::{baseline_similarities, merge_positive_events, similarity_scan};
pub use error::SearchError;
pub use evidence::{pool_evidence, pool_evidence_weighted, EvidenceVector};
pub use rank::{
    rank_untested, select_candidates, Method, Pooling, RankedCandidate, SearchConfig,
    SelectionMode,
};
pub use table::{read_query_table, write_query_table, QueryMeta, QueryRow};
pub use timing::{baseline_query_timed, stem_query_timed, TimedQuery};

pub use fusion_art_core::Real;

/// Double-precision aliases for the common case.
pub type SearchConfig64 = SearchConfig<f64>;
pub type RankedCandidate64 = RankedCandidate<f64>;
