use std::collections::BTreeSet;
use std::io::{BufRead, Write};

use crate::rank::{Method, RankedCandidate};
use crate::SearchError;
use fusion_art_core::Real;

/// Run metadata echoed at the top of every query table.
#[derive(Debug, Clone, PartialEq)]
pub struct QueryMeta {
    pub scenario: String,
    pub seed: u64,
    pub k: usize,
    pub delta_c: f64,
}

/// One parsed row of a query table.
#[derive(Debug, Clone, PartialEq)]
pub struct QueryRow {
    pub agent_id: u32,
    pub activation: f64,
    pub rank: usize,
    pub method: Method,
    pub hit: Option<bool>,
}

/// Writes the ranked candidates as a comma-delimited table with `#`-prefixed
/// metadata lines. When a ground-truth target set is supplied, a `hit`
/// column marks candidates that are true targets.
pub fn write_query_table<F: Real, W: Write>(
    writer: &mut W,
    meta: &QueryMeta,
    method: Method,
    ranked: &[RankedCandidate<F>],
    targets: Option<&BTreeSet<u32>>,
) -> Result<(), SearchError> {
    writeln!(writer, "# scenario={}", meta.scenario)?;
    writeln!(writer, "# seed={}", meta.seed)?;
    writeln!(writer, "# k={}", meta.k)?;
    writeln!(writer, "# delta_c={}", meta.delta_c)?;
    match targets {
        Some(_) => writeln!(writer, "agent_id,activation,rank,method,hit")?,
        None => writeln!(writer, "agent_id,activation,rank,method")?,
    }
    for candidate in ranked {
        let activation = candidate.activation.to_f64().unwrap_or(f64::NAN);
        match targets {
            Some(set) => writeln!(
                writer,
                "{},{},{},{},{}",
                candidate.agent_id,
                activation,
                candidate.rank,
                method.label(),
                u8::from(set.contains(&candidate.agent_id)),
            )?,
            None => writeln!(
                writer,
                "{},{},{},{}",
                candidate.agent_id,
                activation,
                candidate.rank,
                method.label(),
            )?,
        }
    }
    Ok(())
}

/// Reads a table produced by [`write_query_table`].
pub fn read_query_table<R: BufRead>(
    reader: R,
) -> Result<(QueryMeta, Vec<QueryRow>), SearchError> {
    let mut scenario = None;
    let mut seed = None;
    let mut k = None;
    let mut delta_c = None;
    let mut rows = Vec::new();
    let mut header_seen = false;
    let mut expect_hit = false;

    for (index, line) in reader.lines().enumerate() {
        let number = index + 1;
        let line = line?;
        let parse = |message: String| SearchError::TableParse {
            line: number,
            message,
        };
        if let Some(rest) = line.strip_prefix("# ") {
            let (key, value) = rest
                .split_once('=')
                .ok_or_else(|| parse(format!("bad metadata line {rest:?}")))?;
            match key {
                "scenario" => scenario = Some(value.to_string()),
                "seed" => {
                    seed = Some(value.parse().map_err(|_| parse("bad seed".into()))?)
                }
                "k" => k = Some(value.parse().map_err(|_| parse("bad k".into()))?),
                "delta_c" => {
                    delta_c =
                        Some(value.parse().map_err(|_| parse("bad delta_c".into()))?)
                }
                other => return Err(parse(format!("unknown metadata key {other:?}"))),
            }
            continue;
        }
        if !header_seen {
            expect_hit = match line.as_str() {
                "agent_id,activation,rank,method" => false,
                "agent_id,activation,rank,method,hit" => true,
                other => return Err(parse(format!("unexpected header {other:?}"))),
            };
            header_seen = true;
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let expected = if expect_hit { 5 } else { 4 };
        if fields.len() != expected {
            return Err(parse(format!(
                "expected {expected} fields, got {}",
                fields.len()
            )));
        }
        rows.push(QueryRow {
            agent_id: fields[0]
                .parse()
                .map_err(|_| parse("bad agent id".into()))?,
            activation: fields[1]
                .parse()
                .map_err(|_| parse("bad activation".into()))?,
            rank: fields[2].parse().map_err(|_| parse("bad rank".into()))?,
            method: Method::parse(fields[3])
                .ok_or_else(|| parse(format!("unknown method {:?}", fields[3])))?,
            hit: if expect_hit {
                Some(match fields[4] {
                    "0" => false,
                    "1" => true,
                    other => return Err(parse(format!("bad hit flag {other:?}"))),
                })
            } else {
                None
            },
        });
    }

    let meta = QueryMeta {
        scenario: scenario.ok_or_else(|| SearchError::TableParse {
            line: 0,
            message: "missing scenario metadata".into(),
        })?,
        seed: seed.ok_or_else(|| SearchError::TableParse {
            line: 0,
            message: "missing seed metadata".into(),
        })?,
        k: k.ok_or_else(|| SearchError::TableParse {
            line: 0,
            message: "missing k metadata".into(),
        })?,
        delta_c: delta_c.ok_or_else(|| SearchError::TableParse {
            line: 0,
            message: "missing delta_c metadata".into(),
        })?,
    };
    Ok((meta, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_round_trips() {
        let ranked = vec![
            RankedCandidate {
                agent_id: 42,
                activation: 0.125,
                rank: 1,
            },
            RankedCandidate {
                agent_id: 7,
                activation: 0.0625,
                rank: 2,
            },
        ];
        let meta = QueryMeta {
            scenario: "S200N".into(),
            seed: 9,
            k: 5,
            delta_c: 0.0,
        };
        let targets: BTreeSet<u32> = [7].into_iter().collect();

        let mut bytes = Vec::new();
        write_query_table(&mut bytes, &meta, Method::Stem, &ranked, Some(&targets)).unwrap();
        let (parsed_meta, rows) = read_query_table(bytes.as_slice()).unwrap();
        assert_eq!(parsed_meta, meta);
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].agent_id, 42);
        assert_eq!(rows[0].hit, Some(false));
        assert_eq!(rows[1].hit, Some(true));
        assert_eq!(rows[1].activation, 0.0625);
        assert_eq!(rows[0].method, Method::Stem);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let text = "# scenario=S200N\n# seed=1\n# k=3\n# delta_c=0\nagent_id,activation,rank,method\n1,notanumber,1,stem\n";
        let err = read_query_table(text.as_bytes()).unwrap_err();
        match err {
            SearchError::TableParse { line, .. } => assert_eq!(line, 6),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
