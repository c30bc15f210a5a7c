//! Text grammars for colorings, ground sets, index sets, matrices and block
//! families. Every list argument is either inline text or a path to a file
//! holding the same text; an existing file wins.
//!
//! * Numbers: separated by commas or whitespace. Ground sets also accept
//!   inclusive ranges `a..=b`.
//! * Color tables: one `x c1 c2 ...` line per entry, an optional
//!   `default c1 c2 ...` line, `#` starts a comment.
//! * Matrices: a file starts with `N M` followed by `N` rows of `M`
//!   integers; inline matrices separate rows with `;`.
//! * Block families: one block per line (files) or per `;` (inline),
//!   exponents separated by commas or whitespace.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use canonsum_core::encoding::BlockFamily;
use canonsum_core::rado::RationalMatrix;
use canonsum_core::{Color, ColoringSpec, GroundSet, IndexSet};
use num_bigint::BigUint;

/// Input problems: unreadable files and malformed text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn bad(msg: impl Into<String>) -> InputError {
    InputError(msg.into())
}

/// Color assigned to values missing from a table file without a `default` line.
pub const TABLE_DEFAULT: i64 = -1;

/// Reads `arg` as a file when one exists at that path, else returns it as is.
pub fn source_text(arg: &str) -> Result<(String, bool), InputError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| bad(format!("cannot read {arg}: {e}")))?;
        Ok((text, true))
    } else {
        Ok((arg.to_string(), false))
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn tokens(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .flat_map(|l| strip_comment(l).split(|c: char| c == ',' || c.is_whitespace()))
        .filter(|t| !t.is_empty())
}

fn parse_big(t: &str) -> Result<BigUint, InputError> {
    t.parse().map_err(|_| bad(format!("not a non-negative integer: {t:?}")))
}

fn parse_num<T: std::str::FromStr>(t: &str) -> Result<T, InputError> {
    t.parse().map_err(|_| bad(format!("not an integer: {t:?}")))
}

pub fn parse_ground(arg: &str) -> Result<GroundSet, InputError> {
    let (text, _) = source_text(arg)?;
    let mut values = Vec::new();
    for t in tokens(&text) {
        if let Some((a, b)) = t.split_once("..=") {
            let (a, b) = (parse_big(a)?, parse_big(b)?);
            let mut v = a;
            while v <= b {
                values.push(v.clone());
                v += 1u32;
            }
        } else {
            values.push(parse_big(t)?);
        }
    }
    GroundSet::new(values).map_err(|e| bad(format!("ground set: {e}")))
}

pub fn parse_values(arg: &str) -> Result<Vec<BigUint>, InputError> {
    let (text, _) = source_text(arg)?;
    tokens(&text).map(parse_big).collect()
}

pub fn parse_ints(arg: &str) -> Result<Vec<i64>, InputError> {
    let (text, _) = source_text(arg)?;
    tokens(&text).map(parse_num).collect()
}

pub fn parse_index_set(arg: &str) -> Result<IndexSet, InputError> {
    let (text, _) = source_text(arg)?;
    let v = tokens(&text).map(parse_num).collect::<Result<Vec<usize>, _>>()?;
    IndexSet::new(v).map_err(|e| bad(format!("index set: {e}")))
}

pub fn parse_exponent_set(arg: &str) -> Result<BTreeSet<u64>, InputError> {
    let (text, _) = source_text(arg)?;
    tokens(&text).map(parse_num).collect()
}

pub fn parse_table(text: &str) -> Result<ColoringSpec, InputError> {
    let mut table = BTreeMap::new();
    let mut default = None;
    for (lineno, line) in text.lines().enumerate() {
        let mut parts = strip_comment(line).split_whitespace();
        let Some(head) = parts.next() else { continue };
        let color = Color(parts.map(parse_num).collect::<Result<_, _>>()?);
        if color.0.is_empty() {
            return Err(bad(format!("table line {}: missing color", lineno + 1)));
        }
        if head == "default" {
            if default.replace(color).is_some() {
                return Err(bad("table has two default lines"));
            }
        } else if table.insert(parse_big(head)?, color).is_some() {
            return Err(bad(format!("table line {}: repeated value {head}", lineno + 1)));
        }
    }
    let default = default.unwrap_or_else(|| Color::single(TABLE_DEFAULT));
    ColoringSpec::explicit_table(table, default).map_err(|e| bad(format!("table: {e}")))
}

/// `interval:B`, `valuation:K`, `valres:P`, `sqrt2mod5`, `mono`,
/// `table:PATH` and `product:S1+S2+...`.
pub fn parse_coloring(arg: &str) -> Result<ColoringSpec, InputError> {
    let spec = |r: Result<ColoringSpec, canonsum_core::Error>| r.map_err(|e| bad(format!("coloring {arg:?}: {e}")));
    if let Some(rest) = arg.strip_prefix("product:") {
        let parts = rest.split('+').map(parse_coloring).collect::<Result<Vec<_>, _>>()?;
        return spec(ColoringSpec::product(parts));
    }
    if let Some(path) = arg.strip_prefix("table:") {
        let text = fs::read_to_string(path).map_err(|e| bad(format!("cannot read {path}: {e}")))?;
        return parse_table(&text);
    }
    match arg.split_once(':') {
        None if arg == "sqrt2mod5" => Ok(ColoringSpec::sqrt2_mod5()),
        None if arg == "mono" => Ok(ColoringSpec::monochromatic(Color::single(0))),
        Some(("interval", b)) => spec(ColoringSpec::interval_base(parse_num(b)?)),
        Some(("valuation", k)) => spec(ColoringSpec::valuation_only(parse_num(k)?)),
        Some(("valres", p)) => spec(ColoringSpec::valuation_residue(parse_num(p)?)),
        _ => Err(bad(format!("unknown coloring {arg:?}"))),
    }
}

pub fn parse_matrix(arg: &str) -> Result<RationalMatrix, InputError> {
    let (text, from_file) = source_text(arg)?;
    let rows: Vec<Vec<i64>> = if from_file {
        let mut lines = text.lines().map(strip_comment).filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| bad("matrix file is empty"))?;
        let dims = header
            .split_whitespace()
            .map(parse_num)
            .collect::<Result<Vec<usize>, _>>()?;
        let [n, m] = dims[..] else {
            return Err(bad("matrix header must be \"N M\""));
        };
        let rows = lines
            .map(|l| l.split_whitespace().map(parse_num).collect::<Result<Vec<i64>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        if rows.len() != n || rows.iter().any(|r| r.len() != m) {
            return Err(bad(format!("matrix body does not match header {n} {m}")));
        }
        rows
    } else {
        text.split(';')
            .map(|r| tokens(r).map(parse_num).collect())
            .collect::<Result<_, _>>()?
    };
    RationalMatrix::from_integers(&rows).map_err(|e| bad(format!("matrix: {e}")))
}

pub fn parse_blocks(arg: &str) -> Result<BlockFamily, InputError> {
    let (text, from_file) = source_text(arg)?;
    let chunks: Vec<&str> = if from_file {
        text.lines().map(strip_comment).collect()
    } else {
        text.split(';').collect()
    };
    let blocks = chunks
        .into_iter()
        .filter(|c| !c.trim().is_empty())
        .map(|c| tokens(c).map(parse_num).collect::<Result<BTreeSet<u64>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    BlockFamily::new(blocks).map_err(|e| bad(format!("blocks: {e}")))
}
