//! Presentation files.
//!
//! ```text
//! # comment
//! generators: p q
//! order: deglex
//! p.p - p
//! q.q - q
//! ```
//!
//! `generators:` must come first; `order:` is optional (`deglex` or
//! `deglex-right`, default `deglex`). Every other non-blank line is one
//! relation polynomial, read as `relation = 0`.

use std::sync::Arc;

use super::{RewriteError, RewriteSystem};
use crate::ncalg::{Alphabet, MonomialOrder, NCPoly};

#[derive(Debug, Clone)]
pub struct PresentationFile {
    pub alphabet: Arc<Alphabet>,
    pub order: MonomialOrder,
    pub relations: Vec<NCPoly>,
}

impl PresentationFile {
    pub fn system(&self) -> Result<RewriteSystem, RewriteError> {
        RewriteSystem::from_relations(&self.alphabet, self.order, &self.relations)
    }

    pub fn render(&self) -> String {
        let mut out = format!("generators: {}\norder: {}\n", self.alphabet.names().join(" "), self.order.name());
        for r in &self.relations {
            out.push_str(&format!("{r}\n"));
        }
        out
    }
}

pub fn parse_presentation(text: &str) -> Result<PresentationFile, RewriteError> {
    let mut alphabet: Option<Arc<Alphabet>> = None;
    let mut order = MonomialOrder::DegLex;
    let mut relations = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let fail = |reason: String| RewriteError::File { line: line_no, reason };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("generators:") {
            if alphabet.is_some() {
                return Err(fail("generators declared twice".into()));
            }
            let names: Vec<&str> = rest.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()).collect();
            alphabet = Some(Alphabet::new(names).map_err(|e| fail(e.to_string()))?);
        } else if let Some(rest) = line.strip_prefix("order:") {
            order = MonomialOrder::parse(rest).ok_or_else(|| fail(format!("unknown order {:?}", rest.trim())))?;
        } else {
            let a = alphabet.as_ref().ok_or_else(|| fail("relation before generators declaration".into()))?;
            relations.push(NCPoly::parse(a, line).map_err(|e| fail(e.to_string()))?);
        }
    }
    let alphabet = alphabet.ok_or(RewriteError::File { line: 0, reason: "missing generators declaration".into() })?;
    Ok(PresentationFile { alphabet, order, relations })
}
