use std::fmt::Write;

use itertools::Itertools;

use super::{RunReport, SubReport};
use crate::gradings::{Classification, ClassifiedGrading, OrbitReport};

fn orbit(o: &OrbitReport, out: &mut String) {
    let _ = writeln!(out, "orbit decomposition of K^{}: partition ({}), k = {}", o.n, o.partition.iter().join(", "), o.k);
    for b in &o.blocks {
        let _ = writeln!(
            out,
            "  block {{{}}}: {} components, ergodic = {}, {}",
            b.coordinates.iter().join(", "),
            b.components,
            b.ergodic,
            b.verdict
        );
    }
}

fn line(c: &ClassifiedGrading) -> String {
    format!(
        "({}) by {}: {}, dim A_1 = {}, recovered ({})",
        c.partition.iter().join(", "),
        c.grading_group,
        c.verdict,
        c.dim_a1,
        c.orbit_partition.iter().join(", ")
    )
}

fn classification(c: &Classification, out: &mut String) {
    let _ = writeln!(out, "gradings of K^{}: {}", c.n, c.verdict);
    let _ = writeln!(out, "ergodic ({}):", c.ergodic.len());
    for g in &c.ergodic {
        let _ = writeln!(out, "  {}", g.groups[0]);
    }
    if !c.general.is_empty() {
        let _ = writeln!(out, "by partition ({}):", c.general.len());
        for g in &c.general {
            let _ = writeln!(out, "  {}", line(g));
        }
    }
    let _ = writeln!(out, "{}", c.conclusion);
    for n in &c.scope_notes {
        let _ = writeln!(out, "  note: {n}");
    }
}

pub(super) fn text(report: &RunReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "qperm {}", report.command.join(" "));
    for r in &report.reports {
        out.push('\n');
        match r {
            SubReport::Certificate(c) => out.push_str(&c.to_string()),
            SubReport::Orbit(o) => orbit(o, &mut out),
            SubReport::Classification(c) => classification(c, &mut out),
            SubReport::Presentation(p) => {
                let _ = writeln!(out, "{}: {} generators, {} relation instances ({} distinct)", p.presentation, p.counts.generators, p.counts.instances, p.counts.distinct);
                for (f, k) in &p.counts.per_family {
                    let _ = writeln!(out, "  {}: {k}", f.name());
                }
                for (label, poly) in &p.relations {
                    let _ = writeln!(out, "  {label}: {poly}");
                }
                if let Some(c) = &p.completion {
                    let _ = writeln!(out, "completion at cap {}: {}, {} rules (max degree {})", c.cap, c.status, c.rules, c.max_rule_degree);
                    let _ = writeln!(out, "  filtration: {}", c.filtration.iter().join(", "));
                    if let Some(b) = &c.basis {
                        let _ = writeln!(out, "  basis ({}): {}", b.len(), b.join(", "));
                    }
                }
            }
        }
    }
    let _ = writeln!(out, "\nverdict: {}", report.verdict);
    if let Some(ms) = report.wall_time_ms {
        let _ = writeln!(out, "wall time: {ms} ms");
    }
    out
}
