use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use stem_memory::{EpisodicTrace, Event, Positivity};

use crate::{
    CaseStatus, Destiny, GroundTruthRecord, IndexProfile, InfectionRates, InfectionRecord,
    ScenarioConfig, SimError, SimulationOutput,
};

pub const TRACES_FILE: &str = "traces.csv";
pub const LABELS_FILE: &str = "labels.csv";
pub const GROUND_TRUTH_FILE: &str = "ground_truth.csv";
pub const INFECTION_LOG_FILE: &str = "infection_log.csv";
pub const MANIFEST_FILE: &str = "manifest.csv";

/// A dataset read back from disk: the run's configuration, seed and the
/// four record files.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub config: ScenarioConfig,
    pub seed: u64,
    pub traces: Vec<EpisodicTrace>,
    pub labels: Vec<(u32, Positivity)>,
    pub ground_truth: Vec<GroundTruthRecord>,
    pub infection_log: Vec<InfectionRecord>,
}

impl Dataset {
    /// Labels in agent-id order, for populations indexed 0..N.
    pub fn label_of(&self, agent_id: u32) -> Option<Positivity> {
        self.labels
            .iter()
            .find(|(id, _)| *id == agent_id)
            .map(|&(_, p)| p)
    }

    /// Memory-building view, in trace order.
    pub fn memory_dataset(&self) -> Vec<(EpisodicTrace, Positivity)> {
        self.traces
            .iter()
            .map(|t| {
                let label = self
                    .label_of(t.agent_id())
                    .expect("label present for every trace");
                (t.clone(), label)
            })
            .collect()
    }

    pub fn acc_targets(&self) -> std::collections::BTreeSet<u32> {
        self.ground_truth
            .iter()
            .filter(|r| matches!(r.status, CaseStatus::Acc | CaseStatus::Index))
            .map(|r| r.agent_id)
            .collect()
    }

    pub fn index_targets(&self) -> std::collections::BTreeSet<u32> {
        self.ground_truth
            .iter()
            .filter(|r| r.status == CaseStatus::Index)
            .map(|r| r.agent_id)
            .collect()
    }
}

fn open_writer(dir: &Path, file: &str) -> Result<BufWriter<fs::File>, SimError> {
    let path = dir.join(file);
    Ok(BufWriter::new(
        fs::File::create(&path).map_err(SimError::io(path.display().to_string()))?,
    ))
}

fn write_or_io<T>(result: std::io::Result<T>, path: &Path) -> Result<T, SimError> {
    result.map_err(SimError::io(path.display().to_string()))
}

/// Writes the five-file dataset: hourly traces, positivity labels, ground
/// truth, infection log and the run manifest. All record files are
/// comma-delimited with a header line.
pub fn write_dataset(dir: &Path, output: &SimulationOutput) -> Result<(), SimError> {
    fs::create_dir_all(dir).map_err(SimError::io(dir.display().to_string()))?;

    let path = dir.join(TRACES_FILE);
    let mut w = open_writer(dir, TRACES_FILE)?;
    write_or_io(writeln!(w, "agent_id,t,place_id"), &path)?;
    for trace in &output.traces {
        for event in trace.events() {
            write_or_io(
                writeln!(w, "{},{},{}", trace.agent_id(), event.time_step, event.place_id),
                &path,
            )?;
        }
    }

    let path = dir.join(LABELS_FILE);
    let mut w = open_writer(dir, LABELS_FILE)?;
    write_or_io(writeln!(w, "agent_id,cp"), &path)?;
    for (agent_id, label) in output.labels.iter().enumerate() {
        write_or_io(writeln!(w, "{},{}", agent_id, label.flag()), &path)?;
    }

    let path = dir.join(GROUND_TRUTH_FILE);
    let mut w = open_writer(dir, GROUND_TRUTH_FILE)?;
    write_or_io(writeln!(w, "agent_id,status,destiny,infection_hour"), &path)?;
    for record in &output.ground_truth {
        let destiny = record.destiny.map_or("-", Destiny::label);
        let hour = record
            .infection_hour
            .map_or_else(|| "-".to_string(), |h| h.to_string());
        write_or_io(
            writeln!(
                w,
                "{},{},{},{}",
                record.agent_id,
                record.status.label(),
                destiny,
                hour
            ),
            &path,
        )?;
    }

    let path = dir.join(INFECTION_LOG_FILE);
    let mut w = open_writer(dir, INFECTION_LOG_FILE)?;
    write_or_io(writeln!(w, "hour,place_id,source_id,target_id"), &path)?;
    for record in &output.infection_log {
        write_or_io(
            writeln!(
                w,
                "{},{},{},{}",
                record.hour, record.place_id, record.source_id, record.target_id
            ),
            &path,
        )?;
    }

    write_manifest(dir, &output.config, output.seed)?;
    Ok(())
}

/// The manifest is a key,value table echoing the fully resolved scenario
/// configuration plus the run seed.
pub fn write_manifest(dir: &Path, cfg: &ScenarioConfig, run_seed: u64) -> Result<(), SimError> {
    let path = dir.join(MANIFEST_FILE);
    let mut w = open_writer(dir, MANIFEST_FILE)?;
    let rows = manifest_rows(cfg, run_seed);
    write_or_io(writeln!(w, "key,value"), &path)?;
    for (key, value) in rows {
        write_or_io(writeln!(w, "{key},{value}"), &path)?;
    }
    Ok(())
}

fn manifest_rows(cfg: &ScenarioConfig, run_seed: u64) -> Vec<(&'static str, String)> {
    vec![
        ("format_version", "1".into()),
        ("scenario", cfg.name.clone()),
        ("agents", cfg.agent_count.to_string()),
        ("places_very_high", cfg.very_high_places.to_string()),
        ("places_high", cfg.high_places.to_string()),
        ("places_middle", cfg.middle_places.to_string()),
        ("places_low", cfg.low_places.to_string()),
        ("index_cases", cfg.index_count.to_string()),
        ("index_profile", cfg.index_profile.label().into()),
        ("time_horizon_hours", cfg.time_horizon.to_string()),
        ("acc_fraction", cfg.acc_fraction.to_string()),
        ("rate_very_high", cfg.rates.very_high.to_string()),
        ("rate_high", cfg.rates.high.to_string()),
        ("rate_middle", cfg.rates.middle.to_string()),
        ("rate_low", cfg.rates.low.to_string()),
        ("incubation_mean_hours", cfg.incubation_mean_hours.to_string()),
        ("incubation_sd_hours", cfg.incubation_sd_hours.to_string()),
        ("runs", cfg.runs.to_string()),
        ("master_seed", cfg.seed.to_string()),
        ("run_seed", run_seed.to_string()),
    ]
}

struct FileLines {
    file: &'static str,
    lines: std::io::Lines<BufReader<fs::File>>,
    number: usize,
}

impl FileLines {
    fn open(dir: &Path, file: &'static str) -> Result<Self, SimError> {
        let path = dir.join(file);
        let handle = fs::File::open(&path).map_err(SimError::io(path.display().to_string()))?;
        Ok(Self {
            file,
            lines: BufReader::new(handle).lines(),
            number: 0,
        })
    }

    fn next(&mut self) -> Result<Option<String>, SimError> {
        self.number += 1;
        match self.lines.next() {
            None => Ok(None),
            Some(Ok(line)) => Ok(Some(line)),
            Some(Err(e)) => Err(SimError::io(self.file)(e)),
        }
    }

    fn expect_header(&mut self, header: &str) -> Result<(), SimError> {
        match self.next()? {
            Some(line) if line == header => Ok(()),
            Some(line) => Err(SimError::parse(
                self.file,
                self.number,
                format!("expected header {header:?}, got {line:?}"),
            )),
            None => Err(SimError::parse(self.file, self.number, "empty file")),
        }
    }

    fn error(&self, message: impl Into<String>) -> SimError {
        SimError::parse(self.file, self.number, message)
    }
}

fn parse_field<T: std::str::FromStr>(
    lines: &FileLines,
    field: &str,
    value: &str,
) -> Result<T, SimError> {
    value
        .parse()
        .map_err(|_| lines.error(format!("invalid {field}: {value:?}")))
}

/// Reads a dataset directory written by [`write_dataset`].
pub fn read_dataset(dir: &Path) -> Result<Dataset, SimError> {
    let (config, seed) = read_manifest(dir)?;

    let mut lines = FileLines::open(dir, TRACES_FILE)?;
    lines.expect_header("agent_id,t,place_id")?;
    let mut events_by_agent: Vec<(u32, Vec<Event>)> = Vec::new();
    while let Some(line) = lines.next()? {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(lines.error(format!("expected 3 fields, got {}", fields.len())));
        }
        let agent_id: u32 = parse_field(&lines, "agent_id", fields[0])?;
        let t: u32 = parse_field(&lines, "t", fields[1])?;
        let place: u32 = parse_field(&lines, "place_id", fields[2])?;
        match events_by_agent.last_mut() {
            Some((id, events)) if *id == agent_id => events.push(Event::new(t, place)),
            _ => events_by_agent.push((agent_id, vec![Event::new(t, place)])),
        }
    }

    let mut lines = FileLines::open(dir, LABELS_FILE)?;
    lines.expect_header("agent_id,cp")?;
    let mut labels = Vec::new();
    while let Some(line) = lines.next()? {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 2 {
            return Err(lines.error(format!("expected 2 fields, got {}", fields.len())));
        }
        let agent_id: u32 = parse_field(&lines, "agent_id", fields[0])?;
        let flag: u8 = parse_field(&lines, "cp", fields[1])?;
        let label = Positivity::from_flag(flag)
            .ok_or_else(|| lines.error(format!("cp flag {flag} not in {{0, 1}}")))?;
        labels.push((agent_id, label));
    }

    // Agents isolated at hour 0 would have empty traces; emit them from the
    // label list so every labeled agent has a trace.
    let mut traces = Vec::with_capacity(labels.len());
    for &(agent_id, _) in &labels {
        let events = events_by_agent
            .iter()
            .find(|(id, _)| *id == agent_id)
            .map(|(_, events)| events.clone())
            .unwrap_or_default();
        traces.push(EpisodicTrace::new(agent_id, events)?);
    }

    let mut lines = FileLines::open(dir, GROUND_TRUTH_FILE)?;
    lines.expect_header("agent_id,status,destiny,infection_hour")?;
    let mut ground_truth = Vec::new();
    while let Some(line) = lines.next()? {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(lines.error(format!("expected 4 fields, got {}", fields.len())));
        }
        let agent_id: u32 = parse_field(&lines, "agent_id", fields[0])?;
        let status = CaseStatus::parse(fields[1])
            .ok_or_else(|| lines.error(format!("unknown status {:?}", fields[1])))?;
        let destiny = match fields[2] {
            "-" => None,
            other => Some(
                Destiny::parse(other)
                    .ok_or_else(|| lines.error(format!("unknown destiny {other:?}")))?,
            ),
        };
        let infection_hour = match fields[3] {
            "-" => None,
            other => Some(parse_field(&lines, "infection_hour", other)?),
        };
        ground_truth.push(GroundTruthRecord {
            agent_id,
            status,
            destiny,
            infection_hour,
        });
    }

    let mut lines = FileLines::open(dir, INFECTION_LOG_FILE)?;
    lines.expect_header("hour,place_id,source_id,target_id")?;
    let mut infection_log = Vec::new();
    while let Some(line) = lines.next()? {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(lines.error(format!("expected 4 fields, got {}", fields.len())));
        }
        infection_log.push(InfectionRecord {
            hour: parse_field(&lines, "hour", fields[0])?,
            place_id: parse_field(&lines, "place_id", fields[1])?,
            source_id: parse_field(&lines, "source_id", fields[2])?,
            target_id: parse_field(&lines, "target_id", fields[3])?,
        });
    }

    Ok(Dataset {
        config,
        seed,
        traces,
        labels,
        ground_truth,
        infection_log,
    })
}

/// Reads the manifest back into a configuration and the run seed.
pub fn read_manifest(dir: &Path) -> Result<(ScenarioConfig, u64), SimError> {
    let mut lines = FileLines::open(dir, MANIFEST_FILE)?;
    lines.expect_header("key,value")?;
    let mut pairs = std::collections::HashMap::new();
    while let Some(line) = lines.next()? {
        let (key, value) = line
            .split_once(',')
            .ok_or_else(|| lines.error(format!("expected key,value, got {line:?}")))?;
        pairs.insert(key.to_string(), value.to_string());
    }
    let get = |key: &str| {
        pairs
            .get(key)
            .cloned()
            .ok_or_else(|| SimError::parse(MANIFEST_FILE, 0, format!("missing key {key:?}")))
    };
    let parse_num = |key: &str| -> Result<u64, SimError> {
        get(key)?
            .parse()
            .map_err(|_| SimError::parse(MANIFEST_FILE, 0, format!("invalid {key}")))
    };
    let parse_float = |key: &str| -> Result<f64, SimError> {
        get(key)?
            .parse()
            .map_err(|_| SimError::parse(MANIFEST_FILE, 0, format!("invalid {key}")))
    };

    let version = parse_num("format_version")?;
    if version != 1 {
        return Err(SimError::parse(
            MANIFEST_FILE,
            0,
            format!("unsupported format version {version}"),
        ));
    }
    let profile_label = get("index_profile")?;
    let config = ScenarioConfig {
        name: get("scenario")?,
        agent_count: parse_num("agents")? as u32,
        very_high_places: parse_num("places_very_high")? as u32,
        high_places: parse_num("places_high")? as u32,
        middle_places: parse_num("places_middle")? as u32,
        low_places: parse_num("places_low")? as u32,
        index_count: parse_num("index_cases")? as u32,
        index_profile: IndexProfile::parse(&profile_label).ok_or_else(|| {
            SimError::parse(
                MANIFEST_FILE,
                0,
                format!("unknown index profile {profile_label:?}"),
            )
        })?,
        time_horizon: parse_num("time_horizon_hours")? as u32,
        acc_fraction: parse_float("acc_fraction")?,
        rates: InfectionRates {
            very_high: parse_float("rate_very_high")?,
            high: parse_float("rate_high")?,
            middle: parse_float("rate_middle")?,
            low: parse_float("rate_low")?,
        },
        incubation_mean_hours: parse_float("incubation_mean_hours")?,
        incubation_sd_hours: parse_float("incubation_sd_hours")?,
        runs: parse_num("runs")? as u32,
        seed: parse_num("master_seed")?,
    };
    config.validate()?;
    Ok((config, parse_num("run_seed")?))
}
