use std::collections::BTreeSet;

use super::presentation::{generating_entries, Family};
use super::QpermError;
use crate::ncalg::{Alphabet, MonomialOrder, NCPoly};
use crate::report::CertificateReport;
use crate::rewrite::RewriteSystem;

/// Which product of `x` with its transpose a set of three families makes
/// the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum TransposeIdentity {
    /// `x·x^t = I`, from `row-sum` and `col-orth`.
    XXt,
    /// `x^t·x = I`, from `row-orth` and `col-sum`.
    XtX,
}

impl TransposeIdentity {
    pub fn for_families(families: &BTreeSet<Family>) -> Option<Self> {
        if families.contains(&Family::RowSum) && families.contains(&Family::ColOrth) {
            Some(TransposeIdentity::XXt)
        } else if families.contains(&Family::RowOrth) && families.contains(&Family::ColSum) {
            Some(TransposeIdentity::XtX)
        } else {
            None
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TransposeIdentity::XXt => "x.x^t = I",
            TransposeIdentity::XtX => "x^t.x = I",
        }
    }
}

fn system_for(n: usize, families: &[Family], cap: usize) -> Result<(std::sync::Arc<Alphabet>, Vec<Vec<NCPoly>>, RewriteSystem), QpermError> {
    let alphabet = Alphabet::matrix("x", n);
    let x = generating_entries(&alphabet, n);
    let rels: Vec<NCPoly> = families.iter().flat_map(|f| f.instances(&x, &alphabet)).map(|r| r.poly).collect();
    let raw = RewriteSystem::from_relations(&alphabet, MonomialOrder::DegLex, &rels)?;
    let sys = raw.complete(cap.max(raw.max_rule_degree()))?.system;
    Ok((alphabet, x, sys))
}

/// From three of the four families, the transpose of `x` is a one-sided
/// inverse: every entry of `x·x^t − I` (or `x^t·x − I`) reduces to zero
/// modulo the three families alone. The step that turns this into the
/// fourth family needs the antipode of a Hopf algebra and is not checked.
pub fn three_family_identity(n: usize, families: &[Family], cap: usize) -> Result<CertificateReport, QpermError> {
    let set: BTreeSet<Family> = families.iter().copied().collect();
    if set.len() != 3 || families.len() != 3 {
        return Err(QpermError::InvalidArgument(format!("exactly three distinct families are required, got {families:?}")));
    }
    if n == 0 {
        return Err(QpermError::InvalidArgument("n must be positive".into()));
    }
    let which = TransposeIdentity::for_families(&set).expect("every 3-subset contains one of the two pairs");
    let fourth = Family::ALL.into_iter().find(|f| !set.contains(f)).expect("one family is left out");
    let fam: Vec<Family> = set.iter().copied().collect();
    let (alphabet, x, sys) = system_for(n, &fam, cap)?;
    let names: Vec<&str> = fam.iter().map(|f| f.name()).collect();
    let mut r = CertificateReport::new(format!("{} from families {} (n = {n})", which.name(), names.join(", ")));
    for i in 0..n {
        for j in 0..n {
            let mut p = NCPoly::zero(&alphabet);
            for k in 0..n {
                let term = match which {
                    TransposeIdentity::XXt => &x[i][k] * &x[j][k],
                    TransposeIdentity::XtX => &x[k][i] * &x[k][j],
                };
                p = &p + &term;
            }
            if i == j {
                p = &p - &NCPoly::one(&alphabet);
            }
            r.check_zero(format!("entry[{},{}]", i + 1, j + 1), &p, &sys);
        }
    }
    r.set_data("families", &names);
    r.set_data("identity", which.name());
    r.set_data("fourth_family", fourth.name());
    r.set_data("status", sys.status());
    r.note(format!(
        "machine-checked: every entry of {}; not checked: the antipode/invertibility step concluding {}",
        which.name().replace(" = I", " - I"),
        fourth.name()
    ));
    Ok(r)
}

/// Over the semi-magic presentation, `(x^t·x)_ij − δ_ij u_i` reduces to zero
/// for all `i, j`, with `u_i = Σ_k x_ki`.
pub fn column_sum_identity(n: usize, cap: usize) -> Result<CertificateReport, QpermError> {
    if n == 0 {
        return Err(QpermError::InvalidArgument("n must be positive".into()));
    }
    let (alphabet, x, sys) = system_for(n, &Family::SEMI_MAGIC, cap)?;
    let mut r = CertificateReport::new(format!("x^t.x = diag(u_1, ..., u_{n}) over the semi-magic presentation"));
    for i in 0..n {
        let u_i = (0..n).fold(NCPoly::zero(&alphabet), |acc, k| &acc + &x[k][i]);
        for j in 0..n {
            let mut p = (0..n).fold(NCPoly::zero(&alphabet), |acc, k| &acc + &(&x[k][i] * &x[k][j]));
            if i == j {
                p = &p - &u_i;
            }
            r.check_zero(format!("entry[{},{}]", i + 1, j + 1), &p, &sys);
        }
    }
    r.set_data("n", n);
    r.set_data("status", sys.status());
    Ok(r)
}
