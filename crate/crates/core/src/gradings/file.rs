//! Text format for gradings:
//!
//! ```text
//! group: Z3 * Z2
//! field: 6
//! blocks: 1,2,3; 4,5
//! 1: (1, 1, 1, 0, 0); (0, 0, 0, 1, 1)
//! 1@(1): (1, z^2, z^4, 0, 0)
//! ```
//!
//! `field: m` fixes the coordinate field `Q(ζ_m)` with `z = ζ_m` (default:
//! the lcm of the factor exponents). `blocks:` lists 1-based coordinates per
//! free factor and may be omitted when the blocks are consecutive.

use std::collections::BTreeMap;

use itertools::Itertools;

use super::freeprod::{FreeProductPresentation, FreeWord};
use super::grading::{Grading, Vector};
use super::GradingError;
use crate::exactnum::Cyclotomic;
use crate::groups::FiniteAbelianGroup;

fn default_field(factors: &[FiniteAbelianGroup]) -> u64 {
    factors.iter().fold(1, |acc, g| num_integer::lcm(acc, g.exponent()))
}

fn consecutive_blocks(factors: &[FiniteAbelianGroup]) -> Vec<Vec<usize>> {
    let mut offset = 0;
    factors
        .iter()
        .map(|g| {
            let m = g.order() as usize;
            offset += m;
            (offset - m..offset).collect()
        })
        .collect()
}

pub fn parse_grading(text: &str) -> Result<Grading, GradingError> {
    let mut group: Option<FreeProductPresentation> = None;
    let mut field: Option<u64> = None;
    let mut blocks: Option<Vec<Vec<usize>>> = None;
    let mut raw: Vec<(usize, String, String)> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let err = |why: String| GradingError::Parse(format!("line {lineno}: {why}"));
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once(':').ok_or_else(|| err("expected `key: value`".into()))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "group" => {
                let factors = if value == "Z1" || value == "1" {
                    Vec::new()
                } else {
                    value
                        .split('*')
                        .map(|f| f.trim().parse::<FiniteAbelianGroup>().map_err(|e| err(e.to_string())))
                        .collect::<Result<Vec<_>, _>>()?
                };
                group = Some(FreeProductPresentation { factors, blocks: Vec::new() });
            }
            "field" => field = Some(value.parse().ok().filter(|&m| m > 0).ok_or_else(|| err(format!("bad field order {value:?}")))?),
            "blocks" => {
                let parsed = value
                    .split(';')
                    .map(|b| {
                        b.split(',')
                            .map(|c| c.trim().parse::<usize>().ok().and_then(|c| c.checked_sub(1)).ok_or_else(|| err(format!("bad coordinate {c:?}"))))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                blocks = Some(parsed);
            }
            _ => raw.push((lineno, key.to_string(), value.to_string())),
        }
    }
    let mut group = group.ok_or_else(|| GradingError::Parse("missing `group:` line".into()))?;
    let field = field.unwrap_or_else(|| default_field(&group.factors));
    let mut n: Option<usize> = None;
    let mut components: BTreeMap<FreeWord, Vec<Vector>> = BTreeMap::new();
    for (lineno, key, value) in raw {
        let err = |why: String| GradingError::Parse(format!("line {lineno}: {why}"));
        let g = group.parse_element(&key).map_err(|e| err(e.to_string()))?;
        if components.contains_key(&g) {
            return Err(err(format!("component {key} listed twice")));
        }
        let mut vectors = Vec::new();
        for tuple in value.split(';') {
            let inner = tuple
                .trim()
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| err(format!("expected a coordinate tuple, got {:?}", tuple.trim())))?;
            let v: Vector = inner
                .split(',')
                .map(|c| Cyclotomic::parse_in(field, c).map_err(|e| err(e.to_string())))
                .collect::<Result<_, _>>()?;
            match n {
                None => n = Some(v.len()),
                Some(m) if m != v.len() => return Err(err(format!("tuple has {} coordinates, expected {m}", v.len()))),
                _ => {}
            }
            vectors.push(v);
        }
        components.insert(g, vectors);
    }
    let n = n.ok_or_else(|| GradingError::Parse("no components".into()))?;
    group.blocks = match blocks {
        Some(b) => {
            if b.len() != group.factors.len() || b.iter().flatten().any(|&c| c >= n) {
                return Err(GradingError::Parse("`blocks:` does not match the group factors and n".into()));
            }
            b
        }
        None if group.factors.iter().map(|g| g.order() as usize).sum::<usize>() == n => consecutive_blocks(&group.factors),
        None => Vec::new(),
    };
    Grading::new(n, group, components)
}

pub fn render_grading(grading: &Grading) -> String {
    let group = grading.group();
    let field = grading
        .components()
        .values()
        .flatten()
        .flatten()
        .fold(default_field(&group.factors), |acc, c| num_integer::lcm(acc, c.minimal_order().order()));
    let mut out = format!("group: {}\nfield: {field}\n", group.descriptor());
    if !group.blocks.is_empty() && group.blocks != consecutive_blocks(&group.factors) {
        let b = group.blocks.iter().map(|b| b.iter().map(|c| c + 1).join(",")).join("; ");
        out.push_str(&format!("blocks: {b}\n"));
    }
    for (g, vs) in grading.components() {
        let tuples = vs
            .iter()
            .map(|v| {
                let coords = v.iter().map(|c| c.embed(field).expect("order divides field").to_z_string()).join(", ");
                format!("({coords})")
            })
            .join("; ");
        out.push_str(&format!("{}: {tuples}\n", group.format(g)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::grading::{grading_from_partition, grading_from_regular_abelian, verify_grading};
    use super::*;
    use crate::report::Verdict;

    #[test]
    fn round_trip() {
        let gs = [
            grading_from_regular_abelian(&"Z2xZ2".parse().unwrap()),
            grading_from_partition(&[3, 2], &["Z3".parse().unwrap(), "Z2".parse().unwrap()]).unwrap(),
            Grading::trivial(3),
        ];
        for g in gs {
            let text = render_grading(&g);
            assert_eq!(render_grading(&parse_grading(&text).unwrap()), text);
            assert_eq!(verify_grading(&parse_grading(&text).unwrap()).verdict, verify_grading(&g).verdict);
        }
    }

    #[test]
    fn broken_grading_is_refuted() {
        let text = "group: Z3\n1: (1, 1, 1)\n(1): (1, z, z^2)\n(2): (1, z, z^2)\n";
        let g = parse_grading(text).unwrap();
        assert_eq!(verify_grading(&g).verdict, Verdict::RefutedWithWitness);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_grading("group: Z2\n1: (1, 1)\n(1): (1, -1, 0)\n").unwrap_err();
        assert!(e.to_string().contains("line 3"), "{e}");
        assert!(parse_grading("1: (1)\n").is_err());
    }
}
