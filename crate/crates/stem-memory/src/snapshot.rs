use std::io::{BufRead, Write};

use crate::memory::CollectiveMemory;
use crate::{EventNodeRegistry, IndividualNode, MemoryError, Positivity};
use fusion_art_core::Real;

const MAGIC: &str = "STEM-MEMORY";
const VERSION: u32 = 1;

/// Writes the memory as versioned line-delimited text:
///
/// ```text
/// STEM-MEMORY v1
/// T <hours>
/// P <places>
/// REGISTRY <count>
/// <t> <p>                    one line per event node, in node order
/// INDIVIDUALS <count>
/// <agent> <cp> <n> <idx...>  sparse evidence indices, ascending
/// ```
///
/// Node weights are not stored; they are recomputed as `(t/T, p/P)` on
/// load, so the round trip is bit-exact.
pub fn write_snapshot<F: Real, W: Write>(
    memory: &CollectiveMemory<F>,
    writer: &mut W,
) -> Result<(), MemoryError> {
    let registry = memory.registry();
    writeln!(writer, "{MAGIC} v{VERSION}")?;
    writeln!(writer, "T {}", registry.time_horizon())?;
    writeln!(writer, "P {}", registry.place_count())?;
    writeln!(writer, "REGISTRY {}", registry.len())?;
    for node in registry.nodes() {
        writeln!(writer, "{} {}", node.time_step, node.place_id)?;
    }
    writeln!(writer, "INDIVIDUALS {}", memory.individual_count())?;
    for individual in memory.individuals() {
        write!(
            writer,
            "{} {} {}",
            individual.agent_id(),
            individual.positivity().flag(),
            individual.evidence_len()
        )?;
        for index in individual.evidence_indices() {
            write!(writer, " {index}")?;
        }
        writeln!(writer)?;
    }
    Ok(())
}

struct Lines<R: BufRead> {
    reader: R,
    number: usize,
}

impl<R: BufRead> Lines<R> {
    fn next(&mut self) -> Result<String, MemoryError> {
        let mut buf = String::new();
        self.number += 1;
        let n = self.reader.read_line(&mut buf)?;
        if n == 0 {
            return Err(MemoryError::parse(self.number, "unexpected end of file"));
        }
        Ok(buf.trim_end_matches(['\n', '\r']).to_string())
    }

    fn expect_kv(&mut self, key: &str) -> Result<u64, MemoryError> {
        let line = self.next()?;
        let mut parts = line.split(' ');
        match (parts.next(), parts.next(), parts.next()) {
            (Some(k), Some(v), None) if k == key => v
                .parse()
                .map_err(|_| self.error(format!("invalid {key} value: {v:?}"))),
            _ => Err(self.error(format!("expected `{key} <value>`, got {line:?}"))),
        }
    }

    fn error(&self, message: impl Into<String>) -> MemoryError {
        MemoryError::parse(self.number, message)
    }
}

/// Reads a snapshot produced by [`write_snapshot`].
pub fn read_snapshot<F: Real, R: BufRead>(reader: R) -> Result<CollectiveMemory<F>, MemoryError> {
    let mut lines = Lines { reader, number: 0 };

    let header = lines.next()?;
    if header != format!("{MAGIC} v{VERSION}") {
        return Err(lines.error(format!("unsupported snapshot header {header:?}")));
    }
    let time_horizon = lines.expect_kv("T")? as u32;
    let place_count = lines.expect_kv("P")? as u32;

    let mut registry = EventNodeRegistry::<F>::new(time_horizon, place_count)
        .map_err(|e| lines.error(e.to_string()))?;
    let node_count = lines.expect_kv("REGISTRY")? as usize;
    for expected in 0..node_count {
        let line = lines.next()?;
        let mut parts = line.split(' ');
        let (t, p) = match (parts.next(), parts.next(), parts.next()) {
            (Some(t), Some(p), None) => (
                t.parse::<u32>()
                    .map_err(|_| lines.error(format!("invalid time step {t:?}")))?,
                p.parse::<u32>()
                    .map_err(|_| lines.error(format!("invalid place id {p:?}")))?,
            ),
            _ => return Err(lines.error(format!("expected `<t> <p>`, got {line:?}"))),
        };
        let index = registry
            .encode_event(t, p)
            .map_err(|e| lines.error(e.to_string()))?;
        if index != expected {
            return Err(lines.error(format!("duplicate event node ({t}, {p})")));
        }
    }

    let individual_count = lines.expect_kv("INDIVIDUALS")? as usize;
    let mut individuals = Vec::with_capacity(individual_count);
    let mut seen = std::collections::HashSet::new();
    for _ in 0..individual_count {
        let line = lines.next()?;
        let mut parts = line.split(' ');
        let agent_id: u32 = parts
            .next()
            .ok_or_else(|| lines.error("missing agent id"))?
            .parse()
            .map_err(|_| lines.error("invalid agent id"))?;
        let flag: u8 = parts
            .next()
            .ok_or_else(|| lines.error("missing positivity flag"))?
            .parse()
            .map_err(|_| lines.error("invalid positivity flag"))?;
        let positivity = Positivity::from_flag(flag)
            .ok_or_else(|| lines.error(format!("positivity flag {flag} not in {{0, 1}}")))?;
        let count: usize = parts
            .next()
            .ok_or_else(|| lines.error("missing evidence count"))?
            .parse()
            .map_err(|_| lines.error("invalid evidence count"))?;
        let mut evidence = Vec::with_capacity(count);
        for _ in 0..count {
            let index: usize = parts
                .next()
                .ok_or_else(|| lines.error("missing evidence index"))?
                .parse()
                .map_err(|_| lines.error("invalid evidence index"))?;
            if index >= registry.len() {
                return Err(lines.error(format!("evidence index {index} out of range")));
            }
            if let Some(&last) = evidence.last() {
                if index <= last {
                    return Err(lines.error("evidence indices must be strictly ascending"));
                }
            }
            evidence.push(index);
        }
        if parts.next().is_some() {
            return Err(lines.error("trailing fields on individual line"));
        }
        if !seen.insert(agent_id) {
            return Err(lines.error(format!("agent {agent_id} encoded twice")));
        }
        individuals.push(IndividualNode::new(agent_id, evidence, positivity));
    }

    Ok(CollectiveMemory::from_parts(registry, individuals))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{build_memory, EpisodicTrace, Event};

    fn sample_memory() -> CollectiveMemory<f64> {
        let dataset = vec![
            (
                EpisodicTrace::new(
                    4,
                    vec![Event::new(0, 2), Event::new(1, 2), Event::new(3, 0)],
                )
                .unwrap(),
                Positivity::Positive,
            ),
            (
                EpisodicTrace::new(2, vec![Event::new(1, 2), Event::new(2, 1)]).unwrap(),
                Positivity::Untested,
            ),
        ];
        build_memory(10, 4, &dataset).unwrap()
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let memory = sample_memory();
        let mut bytes = Vec::new();
        write_snapshot(&memory, &mut bytes).unwrap();

        let restored = read_snapshot::<f64, _>(bytes.as_slice()).unwrap();
        let mut again = Vec::new();
        write_snapshot(&restored, &mut again).unwrap();
        assert_eq!(bytes, again);

        assert_eq!(restored.individual_count(), memory.individual_count());
        assert_eq!(restored.registry().len(), memory.registry().len());
        for (a, b) in memory.individuals().iter().zip(restored.individuals()) {
            assert_eq!(a, b);
        }
        for (a, b) in memory.registry().nodes().iter().zip(restored.registry().nodes()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let memory = sample_memory();
        let mut bytes = Vec::new();
        write_snapshot(&memory, &mut bytes).unwrap();
        let text = String::from_utf8(bytes).unwrap();

        // Corrupt the first registry line (line 5).
        let corrupted = text.replace("0 2\n", "0 x\n");
        let err = read_snapshot::<f64, _>(corrupted.as_bytes()).unwrap_err();
        match err {
            MemoryError::SnapshotParse { line, .. } => assert_eq!(line, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn truncated_snapshot_is_rejected() {
        let memory = sample_memory();
        let mut bytes = Vec::new();
        write_snapshot(&memory, &mut bytes).unwrap();
        bytes.truncate(bytes.len() - 10);
        assert!(read_snapshot::<f64, _>(bytes.as_slice()).is_err());
    }
}
