//! Reading graphs and set families from the command line.

use std::fs;
use std::path::Path;

use serde::Deserialize;

use gammagraphs::clutter::{validate_clutter, Clutter, ClutterDocument};
use gammagraphs::{parse_graph6, parse_graph6_lines, Graph};

use crate::{Failure, GraphInput, SetsInput};

pub fn graph6_file(path: &Path) -> Result<Vec<Graph>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let graphs = parse_graph6_lines(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    if graphs.is_empty() {
        return Err(Failure::Usage(format!("{}: no graphs", path.display())));
    }
    Ok(graphs)
}

pub fn graphs(input: &GraphInput) -> Result<Vec<Graph>, Failure> {
    if let Some(word) = &input.graph6 {
        return Ok(vec![parse_graph6(word)?]);
    }
    if let Some(path) = &input.input {
        return graph6_file(path);
    }
    if let Some(f) = input.family {
        return Ok(vec![f.build()?]);
    }
    unreachable!("clap requires one graph source")
}

/// `123,124` as `{1,2,3}, {1,2,4}`; the ground set runs up to the largest symbol.
fn parse_digit_sets(spec: &str) -> Result<Vec<Vec<u32>>, Failure> {
    spec.split(',')
        .map(|word| {
            let word = word.trim();
            if word.is_empty() {
                return Err(Failure::Usage("empty set in --sets".into()));
            }
            word.chars()
                .map(|c| match c.to_digit(10) {
                    Some(d) if d > 0 => Ok(d),
                    _ => Err(Failure::Usage(format!("symbol {c:?} in --sets is not a digit 1-9"))),
                })
                .collect()
        })
        .collect()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SetsFile {
    Clutter(ClutterDocument),
    List(Vec<Vec<u32>>),
}

fn ground_of(sets: &[Vec<u32>]) -> usize {
    sets.iter().flatten().copied().max().unwrap_or(0) as usize
}

pub fn clutter(input: &SetsInput) -> Result<Clutter, Failure> {
    let sets = if let Some(spec) = &input.sets {
        parse_digit_sets(spec)?
    } else if let Some(path) = &input.sets_file {
        let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        match serde_json::from_str::<SetsFile>(&text) {
            Ok(SetsFile::Clutter(doc)) => return Ok(Clutter::from_document(&doc)?),
            Ok(SetsFile::List(sets)) => sets,
            Err(_) if !text.trim_start().starts_with(['{', '[']) => text
                .lines()
                .filter(|l| !l.trim().is_empty())
                .map(|l| {
                    l.split(|c: char| c == ',' || c.is_whitespace())
                        .filter(|t| !t.is_empty())
                        .map(|t| t.parse::<u32>().map_err(|e| Failure::Usage(format!("{}: {t:?}: {e}", path.display()))))
                        .collect()
                })
                .collect::<Result<_, _>>()?,
            Err(e) => return Err(Failure::Usage(format!("{}: {e}", path.display()))),
        }
    } else {
        unreachable!("clap requires one set source")
    };
    Ok(validate_clutter(ground_of(&sets), &sets)?)
}
