use std::sync::Arc;

use super::report::TheoremReport;
use super::HarnessError;
use crate::bialg::Bialgebra;
use crate::catlim::{default_stable_family, diagonal_point, is_stably_strong, is_strong_split_extension, CatError};
use crate::finmon::FiniteMonoid;
use crate::hopfadj::{antipode, grouplikes};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Antipode, grouplike-group and strongness verdicts for one cocommutative bialgebra.
///
/// Strongness is tested on the diagonal point `(π₁, Δ)` and on its pullbacks along the
/// default stable family built from `family`. `monoid`, when given, is compared with `G(b)`.
pub fn theorem2_report(
    name: &str,
    b: &Arc<Bialgebra>,
    monoid: Option<&FiniteMonoid>,
    family: &[(String, Arc<FiniteMonoid>)],
) -> Result<TheoremReport, HarnessError> {
    if !b.is_cocommutative() {
        return Err(CatError::NotCocommutative.into());
    }
    let mut report = TheoremReport::new(format!("{name} (dim {}, {})", b.dim(), b.field()));

    let s = antipode(b)?;
    let hopf = s.is_hopf();
    let detail = match s.witness {
        Some(i) => format!("no antipode; equations at {} are inconsistent", b.label(i)),
        None => "antipode exists".to_string(),
    };
    report.observe("hopf.antipode", hopf, detail);

    let gl = grouplikes(b)?;
    let group = gl.monoid().is_group();
    report.observe("hopf.grouplike-group", group, format!("G = {} with {} elements", gl.monoid(), gl.len()));
    if let Some(m) = monoid {
        report.check("hopf.grouplike-monoid", gl.monoid().matches_by_labels(m), format!("G compared with {m}"));
    }

    let point = diagonal_point(b)?;
    let verdict = is_strong_split_extension(&point)?;
    let mut detail = format!(
        "diagonal point: kernel dim {}, join closure dim {} of {}",
        point.kernel().source().dim(),
        verdict.closure_dim,
        verdict.dim
    );
    if let Some((label, _)) = &verdict.witness {
        detail.push_str(&format!(", witness {label}"));
    }
    report.observe("join.canonical-point", verdict.strong, detail);

    let maps = default_stable_family(b, family)?;
    let morphisms: Vec<_> = maps.iter().map(|(_, h)| h.clone()).collect();
    let verdicts = is_stably_strong(&point, &morphisms)?;
    let failing: Vec<&str> =
        maps.iter().zip(&verdicts).filter(|(_, v)| !v.strong).map(|((n, _), _)| n.as_str()).collect();
    let mut detail = format!("{} of {} pullbacks strong", verdicts.len() - failing.len(), verdicts.len());
    if let Some(first) = failing.first() {
        detail.push_str(&format!(", first failure along {first}"));
    }
    let stable = failing.is_empty();
    report.observe("join.stable-family", stable, detail);

    let agree = hopf == group && group == verdict.strong && verdict.strong == stable;
    report.check(
        "equivalence.agree",
        agree,
        format!(
            "antipode {}, grouplike group {}, diagonal strong {}, stably strong {}",
            yes_no(hopf),
            yes_no(group),
            yes_no(verdict.strong),
            yes_no(stable)
        ),
    );
    Ok(report)
}
