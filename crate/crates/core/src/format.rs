//! File formats: plain-text tables for ternary cubes and binary groups, and
//! JSON emitters for representations and command reports.
//!
//! Cube format (`tgc v1`):
//!
//! ```text
//! tgc v1
//! order 3
//! # comments run to the end of the line
//! 0 1 2
//! 1 2 0
//! ...
//! ```
//!
//! The header is followed by `order³` integers: the value of `[x y z]` with
//! `x` varying slowest and `z` fastest (the serializer writes one line per
//! `(x, y)`). Binary tables (`tgb v1`) hold `order²` integers row-major.
//! Parsing is whitespace-tolerant; serializing is deterministic, so
//! serialize ∘ parse ∘ serialize is byte-identical.

use serde::Serialize;

use crate::binary::BinaryTable;
use crate::cube::CayleyCube;
use crate::error::Error;
use crate::reps::Representation;

fn tokenize(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        for tok in body.split_whitespace() {
            out.push((i + 1, tok));
        }
    }
    out
}

fn parse_table(
    text: &str,
    magic: &str,
    entries_for: impl Fn(usize) -> usize,
) -> Result<(usize, Vec<usize>), Error> {
    let toks = tokenize(text);
    if toks.len() < 2 || toks[0].1 != magic || toks[1].1 != "v1" {
        return Err(Error::Parse {
            line: toks.first().map_or(1, |t| t.0),
            msg: format!("expected header `{magic} v1`"),
        });
    }
    if toks.len() < 4 || toks[2].1 != "order" {
        return Err(Error::Parse {
            line: toks.get(2).map_or(toks[1].0, |t| t.0),
            msg: "expected `order <n>` after the header".into(),
        });
    }
    let order: usize = toks[3].1.parse().map_err(|_| Error::Parse {
        line: toks[3].0,
        msg: format!("invalid order `{}`", toks[3].1),
    })?;
    if order == 0 {
        return Err(Error::Parse {
            line: toks[3].0,
            msg: "order must be positive".into(),
        });
    }
    let need = entries_for(order);
    let rest = &toks[4..];
    if rest.len() != need {
        return Err(Error::Parse {
            line: rest.last().map_or(toks[3].0, |t| t.0),
            msg: format!("expected {need} table entries, found {}", rest.len()),
        });
    }
    let mut table = Vec::with_capacity(need);
    for (line, tok) in rest {
        let v: usize = tok.parse().map_err(|_| Error::Parse {
            line: *line,
            msg: format!("invalid table entry `{tok}`"),
        })?;
        table.push(v);
    }
    Ok((order, table))
}

/// Parses the `tgc v1` cube format.
pub fn parse_cube(text: &str) -> Result<CayleyCube, Error> {
    let (order, table) = parse_table(text, "tgc", |n| n * n * n)?;
    CayleyCube::from_raw(order, table)
}

/// Serializes a cube in the `tgc v1` format (one line per `(x, y)` pair).
pub fn serialize_cube(cube: &CayleyCube) -> String {
    let n = cube.order();
    let mut s = format!("tgc v1\norder {n}\n");
    for x in 0..n {
        for y in 0..n {
            let row: Vec<String> = (0..n).map(|z| cube.get(x, y, z).to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
    }
    s
}

/// Parses the `tgb v1` binary-table format.
pub fn parse_binary(text: &str) -> Result<BinaryTable, Error> {
    let (order, table) = parse_table(text, "tgb", |n| n * n)?;
    BinaryTable::from_raw(order, table)
}

/// Serializes a binary table in the `tgb v1` format (one line per row).
pub fn serialize_binary(table: &BinaryTable) -> String {
    let n = table.order();
    let mut s = format!("tgb v1\norder {n}\n");
    for x in 0..n {
        let row: Vec<String> = (0..n).map(|y| table.get(x, y).to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

/// JSON form of a representation: kind, order, dimension, and one matrix per
/// pair keyed `"x,y"`, each matrix as rows of `[re, im]` entries.
pub fn representation_json(rep: &Representation) -> serde_json::Value {
    let mut entries = serde_json::Map::new();
    for x in 0..rep.order() {
        for y in 0..rep.order() {
            entries.insert(
                format!("{x},{y}"),
                serde_json::to_value(rep.mat(x, y)).expect("matrices serialize"),
            );
        }
    }
    serde_json::json!({
        "kind": rep.kind().name(),
        "order": rep.order(),
        "dim": rep.dim(),
        "entries": entries,
    })
}

/// Companion data written beside a `tgb v1` file for covering groups: which
/// element is neutral and which elements form the index-two subgroup.
#[derive(Debug, Clone, Serialize)]
pub struct CoverSidecar {
    pub neutral: usize,
    pub h_mask: Vec<bool>,
}

/// Top-level JSON document produced by the command-line tool.
#[derive(Debug, Clone, Serialize)]
pub struct ReportFile {
    /// Subcommand that produced the report.
    pub command: String,
    /// Input description (file path or example name), when applicable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    /// Command-specific payload.
    pub result: serde_json::Value,
    /// Counterexamples or witnesses, when the command produces them.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<serde_json::Value>,
    /// Wall-clock duration of the computation.
    pub timing_ms: u64,
}
