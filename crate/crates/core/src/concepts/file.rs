//! Text formats for domains and concept classes.
//!
//! Short specs (CLI and experiment configs):
//!
//! | spec                          | class                                       |
//! |-------------------------------|---------------------------------------------|
//! | `thresholds:N`                | thresholds on the line `1..N`               |
//! | `full:N`                      | all labellings of `N` points                |
//! | `rectangles:5x5`              | axis-aligned boxes on a grid                |
//! | `balls:5x5`                   | Euclidean balls on a grid                   |
//! | `ground-state:<region spec>`  | zero concept plus the region indicators     |
//! | `file:PATH`                   | a class file                                |
//!
//! Class file, `#` starts a comment:
//!
//! ```text
//! domain line 4          # or: domain grid 5 5 | domain ids a b c
//! generator explicit     # or: thresholds | full | rectangles | balls | ground-state <generator>
//! 0 1 0 1                # explicit only: one row per concept, one column per point
//! 1100                   # separators are optional
//! ```

use std::path::Path;

use super::class::{Concept, ConceptClass};
use super::domain::Domain;
use crate::{Error, Result};

fn parse_usize(s: &str, line: usize) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::parse(line, format!("expected a positive integer, found `{s}`")))
}

fn parse_shape(s: &str, line: usize) -> Result<Vec<usize>> {
    s.split(['x', 'X', ' ', ',']).filter(|t| !t.is_empty()).map(|t| parse_usize(t, line)).collect()
}

/// `line:N`, `grid:AxB` or `ids:a,b,c`.
pub fn parse_domain_spec(spec: &str) -> Result<Domain> {
    let (kind, rest) = spec.split_once(':').ok_or_else(|| Error::Spec(format!("invalid domain spec `{spec}`")))?;
    match kind {
        "line" => Domain::line(parse_usize(rest, 0)?),
        "grid" => Domain::grid(&parse_shape(rest, 0)?),
        "ids" => Domain::new(rest.split(',').map(|s| s.trim().to_string()).collect()),
        _ => Err(Error::Spec(format!("unknown domain kind `{kind}`"))),
    }
}

fn generate(name: &str, domain: Domain) -> Result<ConceptClass> {
    match name {
        "thresholds" => ConceptClass::thresholds(domain),
        "full" => ConceptClass::full(domain),
        "rectangles" | "axis-rectangles" => ConceptClass::axis_rectangles(domain),
        "balls" => ConceptClass::balls(domain),
        _ => Err(Error::Spec(format!("unknown class generator `{name}`"))),
    }
}

pub fn parse_class_spec(spec: &str) -> Result<ConceptClass> {
    let (kind, rest) = spec.split_once(':').ok_or_else(|| Error::Spec(format!("invalid class spec `{spec}`")))?;
    match kind {
        "file" => read_class_file(rest),
        "ground-state" => ConceptClass::ground_state(&parse_class_spec(rest)?),
        "thresholds" | "full" => generate(kind, Domain::line(parse_usize(rest, 0)?)?),
        "rectangles" | "axis-rectangles" | "balls" => generate(kind, Domain::grid(&parse_shape(rest, 0)?)?),
        _ => Err(Error::Spec(format!("unknown class spec `{kind}`"))),
    }
}

pub fn parse_class(text: &str) -> Result<ConceptClass> {
    let mut domain = None;
    let mut generator: Option<(usize, Vec<String>)> = None;
    let mut rows = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let mut words = body.split_whitespace();
        match words.next() {
            Some("domain") => {
                let kind = words.next().ok_or_else(|| Error::parse(line, "missing domain kind"))?;
                let args: Vec<&str> = words.collect();
                domain = Some(match kind {
                    "line" if args.len() == 1 => Domain::line(parse_usize(args[0], line)?)?,
                    "grid" if !args.is_empty() => {
                        Domain::grid(&args.iter().map(|a| parse_usize(a, line)).collect::<Result<Vec<_>>>()?)?
                    }
                    "ids" if !args.is_empty() => Domain::new(args.iter().map(|s| s.to_string()).collect())?,
                    _ => return Err(Error::parse(line, format!("invalid domain line `{body}`"))),
                });
            }
            Some("generator") => generator = Some((line, words.map(str::to_string).collect())),
            _ => {
                let bits: Vec<u8> = body
                    .chars()
                    .filter(|c| !c.is_whitespace() && *c != ',')
                    .map(|c| match c {
                        '0' => Ok(0),
                        '1' => Ok(1),
                        _ => Err(Error::parse(line, format!("unexpected character `{c}` in label row"))),
                    })
                    .collect::<Result<_>>()?;
                rows.push((line, bits));
            }
        }
    }
    let domain = domain.ok_or_else(|| Error::parse(0, "missing `domain` line"))?;
    let (gline, words) = generator.ok_or_else(|| Error::parse(0, "missing `generator` line"))?;
    let name = words.first().map(String::as_str).unwrap_or("");
    if name != "explicit" {
        if let Some((line, _)) = rows.first() {
            return Err(Error::parse(*line, "label rows are only allowed for explicit classes"));
        }
    }
    match name {
        "explicit" => {
            let n = domain.len();
            let members = rows
                .into_iter()
                .map(|(line, bits)| {
                    if bits.len() != n {
                        return Err(Error::parse(line, format!("expected {n} labels, found {}", bits.len())));
                    }
                    Concept::new(bits)
                })
                .collect::<Result<Vec<_>>>()?;
            ConceptClass::explicit(domain, members)
        }
        "ground-state" => {
            let inner = words.get(1).ok_or_else(|| Error::parse(gline, "ground-state needs a region generator"))?;
            ConceptClass::ground_state(&generate(inner, domain)?)
        }
        other => generate(other, domain),
    }
}

pub fn read_class_file(path: impl AsRef<Path>) -> Result<ConceptClass> {
    parse_class(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_file() {
        let class = parse_class("domain ids a b c\ngenerator explicit\n0 1 0\n111 # all ones\n").unwrap();
        assert_eq!(class.len(), 2);
        assert_eq!(class.member(1), &Concept::constant(3, 1));
        assert!(matches!(parse_class("domain line 3\ngenerator explicit\n01\n"), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn generated_file_and_specs() {
        let a = parse_class("domain grid 3 3\ngenerator ground-state rectangles\n").unwrap();
        let b = parse_class_spec("ground-state:rectangles:3x3").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_class_spec("thresholds:50").unwrap().len(), 51);
        assert!(matches!(parse_class_spec("wiggles:3"), Err(Error::Spec(_))));
        assert_eq!(parse_domain_spec("ids:p,q").unwrap().len(), 2);
    }
}
