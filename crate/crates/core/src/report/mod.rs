//! Certificates: the shared report shape for every verifier.
//!
//! A [`CertificateReport`] is a list of polynomial identities checked by
//! reduction plus a list of other exact facts (ranks, counts, scalar
//! evaluations). Its verdict is `verified` only when every identity came out
//! as expected and every fact holds; any definite failure makes it
//! `refuted_with_witness`; otherwise a nonzero normal form against a
//! truncated system makes it `inconclusive`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::Value;

use crate::exactnum::Scalar;
use crate::ncalg::NCPoly;
use crate::rewrite::RewriteSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Verified,
    Inconclusive,
    RefutedWithWitness,
}

impl Verdict {
    /// Combines sub-verdicts: any refutation wins, then inconclusive.
    pub fn combine(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
        verdicts.into_iter().max().unwrap_or(Verdict::Verified)
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Verified => 0,
            Verdict::RefutedWithWitness => 1,
            Verdict::Inconclusive => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Verified => "verified",
            Verdict::Inconclusive => "inconclusive",
            Verdict::RefutedWithWitness => "refuted_with_witness",
        })
    }
}

/// One polynomial reduced against a system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckedIdentity {
    pub label: String,
    pub expression: String,
    pub normal_form: String,
    /// `false` for claims of the form "this is nonzero".
    pub expect_zero: bool,
    pub reduced_to_zero: bool,
    pub inconclusive: bool,
}

impl CheckedIdentity {
    pub fn passed(&self) -> bool {
        !self.inconclusive && self.reduced_to_zero == self.expect_zero
    }

    fn verdict(&self) -> Verdict {
        if self.passed() {
            Verdict::Verified
        } else if self.inconclusive {
            Verdict::Inconclusive
        } else {
            Verdict::RefutedWithWitness
        }
    }
}

/// A non-polynomial exact check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub label: String,
    pub holds: bool,
    /// The check could not be decided; `holds` is then `false`.
    pub inconclusive: bool,
    pub detail: String,
}

impl Fact {
    fn verdict(&self) -> Verdict {
        if self.holds {
            Verdict::Verified
        } else if self.inconclusive {
            Verdict::Inconclusive
        } else {
            Verdict::RefutedWithWitness
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificateReport {
    pub claim: String,
    pub identities: Vec<CheckedIdentity>,
    pub facts: Vec<Fact>,
    pub verdict: Verdict,
    /// Label of the first failing identity or fact.
    pub witness: Option<String>,
    pub notes: Vec<String>,
    pub data: BTreeMap<String, Value>,
}

impl CertificateReport {
    pub fn new(claim: impl Into<String>) -> Self {
        CertificateReport {
            claim: claim.into(),
            identities: Vec::new(),
            facts: Vec::new(),
            verdict: Verdict::Verified,
            witness: None,
            notes: Vec::new(),
            data: BTreeMap::new(),
        }
    }

    /// Reduces `p` against `sys` and records whether it vanishes.
    pub fn check_zero<C: Scalar>(&mut self, label: impl Into<String>, p: &NCPoly<C>, sys: &RewriteSystem<C>) -> bool {
        self.check(label, p, sys, true)
    }

    /// Records the claim that `p` is nonzero modulo `sys`. Only a confluent
    /// system can confirm it.
    pub fn check_nonzero<C: Scalar>(&mut self, label: impl Into<String>, p: &NCPoly<C>, sys: &RewriteSystem<C>) -> bool {
        self.check(label, p, sys, false)
    }

    fn check<C: Scalar>(&mut self, label: impl Into<String>, p: &NCPoly<C>, sys: &RewriteSystem<C>, expect_zero: bool) -> bool {
        let r = sys.reduce(p);
        let id = CheckedIdentity {
            label: label.into(),
            expression: p.to_string(),
            normal_form: r.normal_form.to_string(),
            expect_zero,
            reduced_to_zero: r.reduced_to_zero,
            inconclusive: r.inconclusive,
        };
        let ok = id.passed();
        self.push_identity(id);
        ok
    }

    pub fn push_identity(&mut self, id: CheckedIdentity) {
        self.identities.push(id);
        self.refresh();
    }

    pub fn fact(&mut self, label: impl Into<String>, holds: bool, detail: impl Into<String>) -> bool {
        self.facts.push(Fact { label: label.into(), holds, inconclusive: false, detail: detail.into() });
        self.refresh();
        holds
    }

    /// Records a check that could not be decided.
    pub fn undecided(&mut self, label: impl Into<String>, detail: impl Into<String>) {
        self.facts.push(Fact { label: label.into(), holds: false, inconclusive: true, detail: detail.into() });
        self.refresh();
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn set_data(&mut self, key: &str, value: impl Serialize) {
        self.data.insert(key.to_string(), serde_json::to_value(value).expect("serializable report data"));
    }

    /// Folds a sub-certificate into this one, prefixing its labels.
    pub fn absorb(&mut self, prefix: &str, other: CertificateReport) {
        for mut id in other.identities {
            id.label = format!("{prefix}{}", id.label);
            self.identities.push(id);
        }
        for mut f in other.facts {
            f.label = format!("{prefix}{}", f.label);
            self.facts.push(f);
        }
        self.notes.extend(other.notes.into_iter().map(|n| format!("{prefix}{n}")));
        self.refresh();
    }

    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }

    pub fn all_identities_passed(&self) -> bool {
        self.identities.iter().all(CheckedIdentity::passed)
    }

    fn refresh(&mut self) {
        let ids = self.identities.iter().map(|i| (i.verdict(), &i.label));
        let facts = self.facts.iter().map(|f| (f.verdict(), &f.label));
        let all: Vec<(Verdict, &String)> = ids.chain(facts).collect();
        self.verdict = Verdict::combine(all.iter().map(|(v, _)| *v));
        self.witness = all.iter().find(|(v, _)| *v == self.verdict && *v != Verdict::Verified).map(|(_, l)| (*l).clone());
    }
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "claim: {}", self.claim)?;
        writeln!(f, "verdict: {}", self.verdict)?;
        if let Some(w) = &self.witness {
            writeln!(f, "witness: {w}")?;
        }
        let passed = self.identities.iter().filter(|i| i.passed()).count();
        writeln!(f, "identities: {passed}/{} as expected", self.identities.len())?;
        for id in self.identities.iter().filter(|i| !i.passed()) {
            let state = if id.inconclusive { "inconclusive" } else { "FAILED" };
            writeln!(f, "  [{state}] {}: {} -> {}", id.label, id.expression, id.normal_form)?;
        }
        for fact in &self.facts {
            let mark = if fact.holds {
                "ok"
            } else if fact.inconclusive {
                "undecided"
            } else {
                "FAILED"
            };
            writeln!(f, "  [{mark}] {}: {}", fact.label, fact.detail)?;
        }
        for (k, v) in &self.data {
            writeln!(f, "  {k} = {v}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
