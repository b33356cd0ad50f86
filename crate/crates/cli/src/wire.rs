//! Text format for partitions and bipartitions: `6,5,2,2,1,1`, with `""`,
//! `-` or `∅` for the empty partition and `|` between the two components.
//! The empty partition is printed as `∅`.

use std::fmt;

use mullineux::level2::{Bicharge, Bipartition};
use mullineux::{Modulus, Partition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_partition(text: &str) -> Result<Partition, ParseError> {
    let text = text.trim();
    if text.is_empty() || text == "-" || text == "∅" {
        return Ok(Partition::empty());
    }
    let parts = text
        .split(',')
        .map(|chunk| match chunk.trim().parse::<usize>() {
            Ok(0) => Err(ParseError(format!("parts must be positive in {text:?}"))),
            Ok(v) => Ok(v),
            Err(_) => Err(ParseError(format!(
                "{chunk:?} is not a positive integer in {text:?}"
            ))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| ParseError(format!("{text:?}: {e}")))
}

pub fn parse_bipartition(text: &str) -> Result<Bipartition, ParseError> {
    let (first, second) = text
        .split_once('|')
        .ok_or_else(|| ParseError(format!("bipartition {text:?} needs the form \"a|b\"")))?;
    if second.contains('|') {
        return Err(ParseError(format!(
            "bipartition {text:?} has more than two components"
        )));
    }
    Ok(Bipartition::new(
        parse_partition(first)?,
        parse_partition(second)?,
    ))
}

pub fn parse_charges(text: &str) -> Result<Bicharge, ParseError> {
    let values = text
        .split(',')
        .map(|v| v.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| ParseError(format!("charges {text:?} must be two integers \"s1,s2\"")))?;
    match values[..] {
        [s1, s2] => Ok(Bicharge::new(s1, s2)),
        _ => Err(ParseError(format!(
            "charges {text:?} must be two integers \"s1,s2\""
        ))),
    }
}

pub fn parse_modulus(text: &str) -> Result<Modulus, ParseError> {
    let e = text
        .trim()
        .parse::<usize>()
        .map_err(|_| ParseError(format!("{text:?} is not a modulus")))?;
    Modulus::new(e).map_err(|e| ParseError(e.to_string()))
}

pub fn format_partition(lambda: &Partition) -> String {
    if lambda.is_empty() {
        return "∅".to_string();
    }
    lambda
        .parts()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn format_bipartition(b: &Bipartition) -> String {
    format!(
        "{}|{}",
        format_partition(&b.first),
        format_partition(&b.second)
    )
}
