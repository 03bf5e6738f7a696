use std::collections::BTreeMap;
use std::path::Path;

use itertools::Itertools;
use serde::Serialize;
use serde_json::{json, Value};

use super::{Command, SubReport, UsageError};
use crate::gradings::{classify_gradings, grading_from_partition, orbit_decompose, parse_grading, render_grading, verify_grading, Grading};
use crate::groups::{
    e_sigma_product_check, regularity_report, transitive_abelian_subgroups, FiniteAbelianGroup, SubgroupMode,
    BRUTE_FORCE_MAX_DEGREE,
};
use crate::ncalg::{Alphabet, NCPoly, Word};
use crate::qperm::{
    column_sum_identity, magic_presentation, pi_n, pi_n_isomorphism_check, pi_n_relations_check, semi_magic_presentation,
    three_family_identity, verify_hopf_axioms, wang_witness, Family, RelationCounts,
};
use crate::report::{CertificateReport, Verdict};
use crate::rewrite::{parse_presentation, CompletionStatus, RewriteSystem};

/// Largest `n` for which functions on `S_n` are tabulated.
pub const PI_N_MAX_DEGREE: usize = 7;
/// Largest `n` for which the presentation is completed on request.
pub const PRESENT_COMPLETE_MAX_DEGREE: usize = 5;

type Config = BTreeMap<String, Value>;

/// Relations of a presentation and, optionally, its completed system.
#[derive(Debug, Clone, Serialize)]
pub struct PresentationSummary {
    pub presentation: String,
    pub generators: Vec<String>,
    pub counts: RelationCounts,
    /// `(label, polynomial)` per relation instance.
    pub relations: Vec<(String, String)>,
    pub completion: Option<CompletionSummary>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct CompletionSummary {
    pub cap: usize,
    pub status: CompletionStatus,
    pub rules: usize,
    pub max_rule_degree: usize,
    /// Dimensions of the span of words of length `≤ d`, `d = 0, 1, …`, as
    /// far as the completion status certifies them.
    pub filtration: Vec<usize>,
    /// The irreducible words, when there are finitely many.
    pub basis: Option<Vec<String>>,
}

fn word_string(alphabet: &Alphabet, w: &Word) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.letters().iter().map(|&g| alphabet.name(g)).join(".")
    }
}

fn completion_summary(sys: &RewriteSystem, cap: usize, depth: usize) -> Result<CompletionSummary, UsageError> {
    // Counts are only reported as far as the completion degree certifies them.
    let certified = sys.filtration_dimension(depth).or_else(|_| match sys.status() {
        CompletionStatus::CompleteUpTo(e) if e >= sys.max_rule_degree() => sys.filtration_dimension(e - sys.max_rule_degree()),
        _ => Ok(Vec::new()),
    });
    let filtration = certified.map_err(UsageError::from)?;
    let basis = sys
        .finite_basis(cap)
        .map(|ws| ws.iter().map(|w| word_string(sys.alphabet(), w)).collect());
    Ok(CompletionSummary {
        cap,
        status: sys.status(),
        rules: sys.rules().len(),
        max_rule_degree: sys.max_rule_degree(),
        filtration,
        basis,
    })
}

fn read(path: &Path) -> Result<String, UsageError> {
    std::fs::read_to_string(path).map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))
}

fn guard(what: &str, n: usize, min: usize, max: usize) -> Result<(), UsageError> {
    if n < min || n > max {
        return Err(UsageError(format!("{what} needs {min} <= n <= {max} (got n = {n})")));
    }
    Ok(())
}

fn config(pairs: &[(&str, Value)]) -> Config {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn grading_reports(grading: &Grading) -> Vec<SubReport> {
    let mut cert = verify_grading(grading);
    let mut out = Vec::new();
    match orbit_decompose(grading) {
        Ok(orbit) => out.push(SubReport::Orbit(orbit)),
        Err(e) => {
            cert.fact("orbit decomposition", false, e.to_string());
        }
    }
    out.insert(0, SubReport::Certificate(cert));
    out
}

pub(super) fn dispatch(command: &Command) -> Result<(Config, Vec<SubReport>), UsageError> {
    let cap_ok = |cap: usize| if cap == 0 { Err(UsageError("--cap must be positive".into())) } else { Ok(()) };
    match command {
        Command::Present { n, semi, complete, cap, depth } => {
            guard("present", *n, 1, 12)?;
            cap_ok(*cap)?;
            let hopf = if *semi { semi_magic_presentation(*n) } else { magic_presentation(*n) };
            let completion = if *complete {
                guard("present --complete", *n, 1, PRESENT_COMPLETE_MAX_DEGREE)?;
                let sys = hopf.complete(*cap).map_err(UsageError::from)?;
                Some(completion_summary(&sys, *cap, *depth)?)
            } else {
                None
            };
            let verdict = match &completion {
                Some(c) if c.status != CompletionStatus::Confluent => Verdict::Inconclusive,
                _ => Verdict::Verified,
            };
            let summary = PresentationSummary {
                presentation: format!("{} n = {n}", if *semi { "semi-magic" } else { "magic" }),
                generators: hopf.alphabet().names().to_vec(),
                counts: hopf.relation_counts(),
                relations: hopf.relations().iter().map(|r| (r.label.clone(), r.poly.to_string())).collect(),
                completion,
                verdict,
            };
            let cfg = config(&[("n", json!(n)), ("semi", json!(semi)), ("complete", json!(complete)), ("cap", json!(cap)), ("depth", json!(depth))]);
            Ok((cfg, vec![SubReport::Presentation(summary)]))
        }
        Command::VerifyHopf { n, cap, semi } => {
            guard("verify-hopf", *n, 1, 5)?;
            cap_ok(*cap)?;
            let hopf = if *semi { semi_magic_presentation(*n) } else { magic_presentation(*n) };
            let r = verify_hopf_axioms(&hopf, *cap).map_err(UsageError::from)?;
            Ok((config(&[("n", json!(n)), ("cap", json!(cap)), ("semi", json!(semi))]), vec![SubReport::Certificate(r)]))
        }
        Command::ThreeFamilies { n, families, cap } => {
            guard("three-families", *n, 1, 5)?;
            cap_ok(*cap)?;
            let fams: Vec<Family> = families.iter().map(|f| f.parse()).collect::<Result<_, _>>().map_err(UsageError::from)?;
            let r = three_family_identity(*n, &fams, *cap).map_err(UsageError::from)?;
            let names: Vec<&str> = fams.iter().map(|f| f.name()).collect();
            Ok((config(&[("n", json!(n)), ("families", json!(names)), ("cap", json!(cap))]), vec![SubReport::Certificate(r)]))
        }
        Command::ColumnSums { n, cap } => {
            guard("column-sums", *n, 1, 6)?;
            cap_ok(*cap)?;
            let r = column_sum_identity(*n, *cap).map_err(UsageError::from)?;
            Ok((config(&[("n", json!(n)), ("cap", json!(cap))]), vec![SubReport::Certificate(r)]))
        }
        Command::PiN { n, poly } => {
            guard("pi-n", *n, 1, PI_N_MAX_DEGREE)?;
            let mut cfg = config(&[("n", json!(n))]);
            let reports = match poly {
                None => vec![
                    SubReport::Certificate(pi_n_relations_check(*n).map_err(UsageError::from)?),
                    SubReport::Certificate(e_sigma_product_check(*n)),
                ],
                Some(path) => {
                    cfg.insert("poly".into(), json!(path.display().to_string()));
                    let alphabet = Alphabet::matrix("u", *n);
                    let mut r = CertificateReport::new(format!("images of polynomials in functions on S_{n}"));
                    let mut images = Vec::new();
                    for (idx, line) in read(path)?.lines().enumerate() {
                        let line = line.split('#').next().unwrap_or("").trim();
                        if line.is_empty() {
                            continue;
                        }
                        let p = NCPoly::parse(&alphabet, line).map_err(|e| UsageError(format!("{}:{}: {e}", path.display(), idx + 1)))?;
                        let f = pi_n(&p, *n).map_err(UsageError::from)?;
                        let support: Vec<String> = f.support().iter().map(|(s, c)| format!("{s}: {c}")).collect();
                        images.push(json!({ "polynomial": p.to_string(), "zero": f.is_zero(), "support": support }));
                    }
                    r.set_data("images", images);
                    vec![SubReport::Certificate(r)]
                }
            };
            Ok((cfg, reports))
        }
        Command::IsoCheck { n, cap } => {
            guard("iso-check", *n, 1, 5)?;
            cap_ok(*cap)?;
            let r = pi_n_isomorphism_check(*n, *cap).map_err(UsageError::from)?;
            Ok((config(&[("n", json!(n)), ("cap", json!(cap))]), vec![SubReport::Certificate(r)]))
        }
        Command::Wang { n, depth } => {
            guard("wang", *n, 4, 12)?;
            let r = wang_witness(*n, *depth).map_err(UsageError::from)?;
            Ok((config(&[("n", json!(n)), ("depth", json!(depth))]), vec![SubReport::Certificate(r)]))
        }
        Command::Classify { n, ergodic_only } => {
            let c = classify_gradings(*n, *ergodic_only).map_err(UsageError::from)?;
            let classes = transitive_abelian_subgroups(*n, SubgroupMode::Classified).map_err(UsageError::from)?;
            let mut sub = CertificateReport::new(format!("transitive abelian subgroups of S_{n}"));
            sub.fact(
                "one subgroup class per ergodic grading group",
                classes.iter().map(|c| &c.group).eq(c.ergodic.iter().map(|e| &e.groups[0])),
                format!("{} classes", classes.len()),
            );
            for class in &classes {
                sub.absorb(&format!("{}: ", class.group), regularity_report(&class.elements));
            }
            if *n <= BRUTE_FORCE_MAX_DEGREE {
                let brute = transitive_abelian_subgroups(*n, SubgroupMode::BruteForce).map_err(UsageError::from)?;
                let keys = |cs: &[crate::groups::TransitiveAbelianClass]| cs.iter().map(|c| (c.group.clone(), c.conjugacy_key.clone())).collect::<Vec<_>>();
                sub.fact("brute force agrees up to conjugacy", keys(&brute) == keys(&classes), format!("{} classes by direct search", brute.len()));
            } else {
                sub.note(format!("brute-force enumeration is limited to n <= {BRUTE_FORCE_MAX_DEGREE}"));
            }
            let generators: Vec<Value> = classes
                .iter()
                .map(|c| json!({ "group": c.group, "generators": c.generators.iter().map(ToString::to_string).collect::<Vec<_>>() }))
                .collect();
            sub.set_data("classes", generators);
            Ok((
                config(&[("n", json!(n)), ("ergodic_only", json!(ergodic_only))]),
                vec![SubReport::Classification(c), SubReport::Certificate(sub)],
            ))
        }
        Command::Grade { blocks, groups, emit } => {
            let gs: Vec<FiniteAbelianGroup> = groups.iter().map(|g| g.parse()).collect::<Result<_, _>>().map_err(UsageError::from)?;
            let grading = grading_from_partition(blocks, &gs).map_err(UsageError::from)?;
            if let Some(path) = emit {
                std::fs::write(path, render_grading(&grading)).map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))?;
            }
            let names: Vec<String> = gs.iter().map(ToString::to_string).collect();
            Ok((config(&[("blocks", json!(blocks)), ("groups", json!(names))]), grading_reports(&grading)))
        }
        Command::OrbitDecompose { input } | Command::VerifyGrading { input } => {
            let grading = parse_grading(&read(input)?).map_err(|e| UsageError(format!("{}: {e}", input.display())))?;
            let cfg = config(&[("input", json!(input.display().to_string()))]);
            let reports = if matches!(command, Command::VerifyGrading { .. }) {
                vec![SubReport::Certificate(verify_grading(&grading))]
            } else {
                grading_reports(&grading)
            };
            Ok((cfg, reports))
        }
        Command::Complete { input, cap, depth } => {
            cap_ok(*cap)?;
            let file = parse_presentation(&read(input)?).map_err(|e| UsageError(format!("{}: {e}", input.display())))?;
            let sys = file.system().map_err(UsageError::from)?;
            let result = sys.complete(*cap).map_err(UsageError::from)?;
            let done = &result.system;
            let mut r = CertificateReport::new(format!("completion of {} relations at cap {cap}", file.relations.len()));
            if result.status == CompletionStatus::Confluent {
                r.fact("confluent", true, format!("{} rules", done.rules().len()));
            } else {
                r.undecided("confluent", format!("stopped at {}; overlaps above the cap were not resolved", result.status));
            }
            let rules: Vec<String> = done.rules().iter().map(|rule| format!("{} -> {}", word_string(done.alphabet(), &rule.lhs), rule.rhs)).collect();
            r.set_data("rules", rules);
            r.set_data("rule_count_history", &result.rule_count_history);
            r.set_data("completion", completion_summary(done, *cap, *depth)?);
            Ok((
                config(&[("input", json!(input.display().to_string())), ("cap", json!(cap)), ("depth", json!(depth)), ("order", json!(file.order.name()))]),
                vec![SubReport::Certificate(r)],
            ))
        }
    }
}
