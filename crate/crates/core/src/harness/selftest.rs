use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::catalog::LoadedCatalog;
use super::report::{OutputFormat, TheoremReport};
use super::theorem::theorem2_report;
use super::HarnessError;
use crate::bialg::{section4_identity_check, tensor_bialgebra, BialgMorphism, Bialgebra, RawBialgebra};
use crate::catlim::{
    categorical_kernel, default_stable_family, is_stably_strong, is_strong_split_extension, largest_subcoalgebra_in,
    pullback_coc, BialgSplitExtension,
};
use crate::exactla::{Field, Scalar, Subspace};
use crate::finmon::{
    enumerate_homs, enumerate_split_points, kernel_mon, pullback_mon, FiniteMonoid, MonSplitExtension, MonoidHom,
    ENUMERATION_GUARD,
};
use crate::hopfadj::{
    adjunction_counit, antipode, apply_g_between, component_decomposition, grouplikes, monoid_algebra,
    monoid_algebra_map, monoid_algebra_map_between, retraction,
};

const Q: Field = Field::Rational;
const SEED: u64 = 0x5eed;

/// Runs every criterion twice and adds a determinism claim comparing the two machine renderings.
pub fn selftest(cat: &LoadedCatalog) -> TheoremReport {
    let mut report = run_criteria(cat);
    let first = report.render(OutputFormat::Machine);
    let second = run_criteria(cat).render(OutputFormat::Machine);
    report.check("criterion-9.determinism", first == second, format!("{} report bytes reproduced", first.len()));
    report
}

type Criterion = fn(&LoadedCatalog, &mut TheoremReport) -> Result<(), HarnessError>;

fn run_criteria(cat: &LoadedCatalog) -> TheoremReport {
    let mut r = TheoremReport::new("catalog");
    let criteria: [(usize, Criterion); 8] = [
        (1, axiom_suite),
        (2, object_fact),
        (3, hopf_detection),
        (4, hopf_points_strong),
        (5, converse_evidence),
        (6, limit_oracles),
        (7, pairing_identity),
        (8, retraction_checks),
    ];
    for (n, criterion) in criteria {
        if let Err(e) = criterion(cat, &mut r) {
            r.check(format!("criterion-{n}.error"), false, e.to_string());
        }
    }
    r
}

fn bialgebra<'a>(cat: &'a LoadedCatalog, name: &str) -> Result<&'a Arc<Bialgebra>, HarnessError> {
    cat.bialgebra(name).ok_or_else(|| HarnessError::UnknownEntry(name.to_string()))
}

fn monoid<'a>(cat: &'a LoadedCatalog, name: &str) -> Result<&'a Arc<FiniteMonoid>, HarnessError> {
    cat.monoid(name).ok_or_else(|| HarnessError::UnknownEntry(name.to_string()))
}

fn extension<'a>(cat: &'a LoadedCatalog, name: &str) -> Result<&'a BialgSplitExtension, HarnessError> {
    cat.extension(name).ok_or_else(|| HarnessError::UnknownEntry(name.to_string()))
}

/// Every copy of `raw` with one nonzero structure constant `c` replaced by `c + 1`.
pub(crate) fn single_constant_mutations(raw: &RawBialgebra) -> Vec<(String, RawBialgebra)> {
    let n = raw.dim();
    let one = raw.field.one();
    let bump = |c: &Scalar| c + &one;
    let mut out = Vec::new();
    for (slot, entries) in raw.mul.iter().enumerate() {
        for (pos, (k, c)) in entries.iter().enumerate() {
            let mut m = raw.clone();
            m.mul[slot][pos].1 = bump(c);
            m.mul[slot].retain(|(_, c)| !c.is_zero());
            out.push((format!("mul({}, {}; {})", raw.labels[slot / n], raw.labels[slot % n], raw.labels[*k]), m));
        }
    }
    for (i, entries) in raw.comul.iter().enumerate() {
        for (pos, (jk, c)) in entries.iter().enumerate() {
            let mut m = raw.clone();
            m.comul[i][pos].1 = bump(c);
            m.comul[i].retain(|(_, c)| !c.is_zero());
            out.push((format!("comul({}; {}, {})", raw.labels[i], raw.labels[jk / n], raw.labels[jk % n]), m));
        }
    }
    for i in 0..n {
        if !raw.unit[i].is_zero() {
            let mut m = raw.clone();
            m.unit[i] = bump(&raw.unit[i]);
            out.push((format!("unit({})", raw.labels[i]), m));
        }
        if !raw.counit[i].is_zero() {
            let mut m = raw.clone();
            m.counit[i] = bump(&raw.counit[i]);
            out.push((format!("counit({})", raw.labels[i]), m));
        }
    }
    out
}

fn axiom_suite(cat: &LoadedCatalog, r: &mut TheoremReport) -> Result<(), HarnessError> {
    r.check("criterion-1.count", cat.bialgebras.len() >= 8, format!("{} catalog bialgebras", cat.bialgebras.len()));
    for (name, b) in &cat.bialgebras {
        let report = b.raw().axiom_report()?;
        let broken: Vec<String> = report.iter().filter_map(|(_, v)| v.as_ref().map(|v| v.to_string())).collect();
        let mutations = single_constant_mutations(b.raw());
        let mut missed = Vec::new();
        for (what, m) in &mutations {
            let caught = m.axiom_report().map(|rep| rep.iter().any(|(_, v)| v.is_some())).unwrap_or(true);
            if !caught {
                missed.push(what.clone());
            }
        }
        let mut detail = format!(
            "{} axiom failures; {} of {} mutations detected",
            broken.len(),
            mutations.len() - missed.len(),
            mutations.len()
        );
        if let Some(first) = broken.first().or(missed.first()) {
            detail.push_str(&format!("; first problem: {first}"));
        }
        r.check(format!("criterion-1.{name}"), broken.is_empty() && missed.is_empty() && !mutations.is_empty(), detail);
    }
    Ok(())
}

fn object_fact(cat: &LoadedCatalog, r: &mut TheoremReport) -> Result<(), HarnessError> {
    for field in [Q, Field::Prime(5)] {
        for (name, m) in &cat.monoids {
            let b = Arc::new(monoid_algebra(m, field));
            let gl = grouplikes(&b)?;
            let ok = gl.len() == m.order() && gl.monoid().matches_by_labels(m);
            r.check(
                format!("criterion-2.{name}.{}", field_tag(field)),
                ok,
                format!("{} grouplikes for a monoid of order {}", gl.len(), m.order()),
            );
        }
    }
    Ok(())
}

fn field_tag(field: Field) -> String {
    match field {
        Field::Rational => "q".into(),
        Field::Prime(p) => format!("f{p}"),
    }
}

fn hopf_detection(cat: &LoadedCatalog, r: &mut TheoremReport) -> Result<(), HarnessError> {
    for name in ["q_c2", "q_c3", "q_c2xc2", "q_s3"] {
        let b = bialgebra(cat, name)?;
        let s = antipode(b)?;
        let gl = grouplikes(b)?;
        let inverses = gl.monoid().inverses();
        let ok = match (&s.antipode, &inverses) {
            (Some(matrix), Some(inv)) => gl
                .elements()
                .iter()
                .enumerate()
                .all(|(g, x)| matrix.apply(x).ok().as_deref() == Some(gl.elements()[inv[g]].as_slice())),
            _ => false,
        };
        r.check(format!("criterion-3.{name}"), ok, "antipode sends every basis grouplike to its inverse");
    }
    for name in ["q_m2", "q_f3"] {
        let s = antipode(bialgebra(cat, name)?)?;
        let detail = match s.witness {
            Some(i) => format!("antipode: none, inconsistent at {}", bialgebra(cat, name)?.label(i)),
            None => "antipode found".into(),
        };
        r.check(format!("criterion-3.{name}"), !s.is_hopf(), detail);
    }
    let mut checked = 0;
    let mut disagreements = Vec::new();
    for (name, b) in &cat.bialgebras {
        if !b.is_cocommutative() {
            continue;
        }
        let decomposition = match component_decomposition(b) {
            Ok(d) => d,
            Err(crate::hopfadj::HopfError::NotPointed { .. }) => continue,
            Err(e) => return Err(e.into()),
        };
        checked += 1;
        if antipode(b)?.is_hopf() != decomposition.grouplikes.monoid().is_group() {
            disagreements.push(name.as_str());
        }
    }
    r.check(
        "criterion-3.dichotomy",
        disagreements.is_empty() && checked > 0,
        format!("antipode existence matches is_group on {checked} pointed objects{}", list_suffix(&disagreements)),
    );
    Ok(())
}

fn list_suffix(items: &[&str]) -> String {
    if items.is_empty() {
        String::new()
    } else {
        format!("; disagreement on {}", items.join(", "))
    }
}

fn hopf_points_strong(cat: &LoadedCatalog, r: &mut TheoremReport) -> Result<(), HarnessError> {
    for y in ["q_c2", "q_c3", "q_s3"] {
        let base = bialgebra(cat, y)?;
        let family = default_stable_family(base, &cat.monoids)?;
        let maps: Vec<BialgMorphism> = family.iter().map(|(_, h)| h.clone()).collect();
        for ext_name in [format!("diag_{y}"), format!("prod_q_c2_{y}")] {
            let ext = extension(cat, &ext_name)?;
            let here = is_strong_split_extension(ext)?;
            let pulled = is_stably_strong(ext, &maps)?;
            let failing: Vec<&str> =
                family.iter().zip(&pulled).filter(|(_, v)| !v.strong).map(|((n, _), _)| n.as_str()).collect();
            r.check(
                format!("criterion-4.{ext_name}"),
                here.strong && failing.is_empty(),
                format!(
                    "strong: {}; {} of {} pullbacks strong{}",
                    here.strong,
                    pulled.len() - failing.len(),
                    pulled.len(),
                    failing.first().map(|f| format!(", first failure along {f}")).unwrap_or_default()
                ),
            );
        }
    }
    let catalog_homs = |y: &Arc<FiniteMonoid>| -> Result<Vec<MonoidHom>, HarnessError> {
        let mut out = Vec::new();
        for (_, w) in &cat.monoids {
            out.extend(enumerate_homs(w, y, ENUMERATION_GUARD)?);
        }
        Ok(out)
    };
    for y_name in ["c2", "c3", "c2xc2"] {
        let y = monoid(cat, y_name)?;
        let test_homs = catalog_homs(y)?;
        let mut middles: Vec<Arc<FiniteMonoid>> = cat.monoids.iter().map(|(_, m)| m.clone()).collect();
        for z in ["c2", "m2", "f3"] {
            middles.push(Arc::new(y.product(monoid(cat, z)?)));
        }
        let (mut points, mut pullbacks, mut weak) = (0usize, 0usize, 0usize);
        for x in &middles {
            for (f, s) in enumerate_split_points(x, y, ENUMERATION_GUARD)? {
                let ext = MonSplitExtension::from_point(f, s)?;
                points += 1;
                weak += usize::from(!ext.is_strong().strong);
                for v in ext.stable_verdicts(&test_homs)? {
                    pullbacks += 1;
                    weak += usize::from(!v.strong);
                }
            }
        }
        r.check(
            format!("criterion-4.monoid-points.{y_name}"),
            weak == 0 && points > 0,
            format!("{points} split extensions and {pullbacks} pullbacks along catalog homs; {weak} not strong"),
        );
    }
    Ok(())
}

fn converse_evidence(cat: &LoadedCatalog, r: &mut TheoremReport) -> Result<(), HarnessError> {
    for (name, kernel_dim, closure_dim, witness) in
        [("q_m2", Some(2), Some(3), Some("e⊗1")), ("q_f3", None, None, None)]
    {
        let b = bialgebra(cat, name)?;
        let ext = extension(cat, &format!("diag_{name}"))?;
        let verdict = is_strong_split_extension(ext)?;
        let k = ext.kernel().source().dim();
        let found = verdict.witness.as_ref().map(|(l, _)| l.as_str());
        let ok = !verdict.strong
            && verdict.closure_dim < verdict.dim
            && kernel_dim.is_none_or(|d| d == k)
            && closure_dim.is_none_or(|d| d == verdict.closure_dim)
            && witness.is_none_or(|w| Some(w) == found);
        r.check(
            format!("criterion-5.{name}.point"),
            ok,
            format!(
                "kernel dim {k}, join closure dim {} of {}, witness {}",
                verdict.closure_dim,
                verdict.dim,
                found.unwrap_or("none")
            ),
        );
        let t2 = theorem2_report(name, b, None, &cat.monoids)?;
        let negative = ["hopf.antipode", "hopf.grouplike-group", "join.canonical-point", "join.stable-family"]
            .iter()
            .all(|id| t2.claim(id).is_some_and(|c| c.verdict == super::Verdict::No));
        let agree = t2.claim("equivalence.agree").is_some_and(|c| c.verdict == super::Verdict::Pass);
        r.check(
            format!("criterion-5.{name}.agree"),
            negative && agree,
            t2.claim("equivalence.agree").map(|c| c.detail.clone()).unwrap_or_default(),
        );
    }
    Ok(())
}

fn all_catalog_homs(cat: &LoadedCatalog) -> Result<Vec<MonoidHom>, HarnessError> {
    let mut out = Vec::new();
    for (_, x) in &cat.monoids {
        for (_, y) in &cat.monoids {
            out.extend(enumerate_homs(x, y, ENUMERATION_GUARD)?);
        }
    }
    Ok(out)
}

fn random_subspace(rng: &mut ChaCha8Rng, field: Field, n: usize) -> Result<Subspace, HarnessError> {
    let count = rng.random_range(0..=n);
    let vectors: Vec<Vec<Scalar>> = (0..count)
        .map(|_| {
            (0..n)
                .map(|_| if rng.random_bool(0.4) { field.zero() } else { field.from_i64(rng.random_range(-3..=3)) })
                .collect()
        })
        .collect();
    Ok(Subspace::span(field, n, &vectors)?)
}

fn limit_oracles(cat: &LoadedCatalog, r: &mut TheoremReport) -> Result<(), HarnessError> {
    let homs = all_catalog_homs(cat)?;
    let mut mismatched = Vec::new();
    for f in &homs {
        let k = categorical_kernel(&monoid_algebra_map(f, Q))?;
        let (km, _) = kernel_mon(f)?;
        if !grouplikes(&k.object)?.monoid().matches_by_labels(&km) {
            mismatched.push(format!("{:?}", f.map()));
        }
    }
    r.check(
        "criterion-6.kernels",
        mismatched.is_empty(),
        format!("{} catalog homs; G(kernel) = kernel_mon on all but {}", homs.len(), mismatched.len()),
    );

    let (mut pairs, mut mismatched) = (0usize, 0usize);
    let images: Vec<BialgMorphism> = homs.iter().map(|h| monoid_algebra_map(h, Q)).collect();
    for (i, g) in homs.iter().enumerate() {
        for (j, f) in homs.iter().enumerate() {
            if g.target() != f.target() {
                continue;
            }
            pairs += 1;
            let pb = pullback_coc(&images[i], &images[j])?;
            let direct = monoid_algebra(&pullback_mon(g, f)?.monoid, Q);
            let mut relabelled = pb.object().raw().clone();
            relabelled.labels = direct.labels().to_vec();
            if &relabelled != direct.raw() {
                mismatched += 1;
            }
        }
    }
    r.check(
        "criterion-6.pullbacks",
        mismatched == 0 && pairs > 0,
        format!("{pairs} composable pairs; {mismatched} differ from the monoid algebra of the monoid pullback"),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut spans, mut random, mut bad) = (0usize, 0usize, 0usize);
    for name in ["trivial", "c2", "c3", "c2xc2"] {
        let b = Arc::new(monoid_algebra(monoid(cat, name)?, Q));
        let n = b.dim();
        for mask in 0u32..(1 << n) {
            spans += 1;
            let v = Subspace::coordinate(Q, n, (0..n).filter(|i| mask >> i & 1 == 1));
            bad += usize::from(largest_subcoalgebra_in(&b, &v)? != v);
        }
        for _ in 0..25 {
            random += 1;
            let v = random_subspace(&mut rng, Q, n)?;
            let members: Vec<usize> = (0..n).filter(|&i| v.contains(&b.basis_vector(i))).collect();
            bad += usize::from(largest_subcoalgebra_in(&b, &v)? != Subspace::coordinate(Q, n, members));
        }
    }
    r.check(
        "criterion-6.subcoalgebra-oracle",
        bad == 0,
        format!("{spans} coordinate spans and {random} random subspaces against the grouplike-subset oracle; {bad} mismatches"),
    );

    let mut bad = 0usize;
    for i in 0..100 {
        let (_, b) = &cat.bialgebras[i % cat.bialgebras.len()];
        let v = random_subspace(&mut rng, b.field(), b.dim())?;
        let w = v.sum(&random_subspace(&mut rng, b.field(), b.dim())?)?;
        let dv = largest_subcoalgebra_in(b, &v)?;
        let dw = largest_subcoalgebra_in(b, &w)?;
        let ok = dv.is_subspace_of(&v) && dv.is_subspace_of(&dw) && largest_subcoalgebra_in(b, &dv)? == dv;
        bad += usize::from(!ok);
    }
    r.check("criterion-6.monotone-idempotent", bad == 0, format!("100 random subspaces; {bad} violations"));
    Ok(())
}

fn pairing_identity(cat: &LoadedCatalog, r: &mut TheoremReport) -> Result<(), HarnessError> {
    let (mut homs, mut failures) = (0usize, Vec::new());
    for (left, right) in [("c2", "c2"), ("c2", "m2"), ("m2", "m2"), ("c3", "c2")] {
        let (x, y) = (monoid(cat, left)?, monoid(cat, right)?);
        let product = Arc::new(x.product(y));
        let tp = tensor_bialgebra(&Arc::new(monoid_algebra(x, Q)), &Arc::new(monoid_algebra(y, Q)))?;
        for (source_name, m) in &cat.monoids {
            let source = Arc::new(monoid_algebra(m, Q));
            for phi in enumerate_homs(m, &product, ENUMERATION_GUARD)? {
                homs += 1;
                let h = monoid_algebra_map_between(&phi, source.clone(), tp.tensor.clone());
                let verdict = section4_identity_check(&h, &tp)?;
                if !verdict.holds {
                    failures.push(format!("{source_name} → {left}×{right} at {}", verdict.witness.unwrap_or_default()));
                }
            }
        }
    }
    r.check(
        "criterion-7.pairing",
        failures.is_empty() && homs >= 20,
        format!(
            "{homs} morphisms into tensor targets; {} failures{}",
            failures.len(),
            failures.first().map(|f| format!(", first {f}")).unwrap_or_default()
        ),
    );

    let (mut pairs, mut broken) = (0usize, Vec::new());
    for (xn, x) in &cat.bialgebras {
        for (yn, y) in &cat.bialgebras {
            if x.field() != y.field() {
                continue;
            }
            pairs += 1;
            let tp = tensor_bialgebra(x, y)?;
            let ok = tp.pi_left.compose(&tp.iota_left)?.is_identity()
                && tp.pi_right.compose(&tp.iota_right)?.is_identity()
                && tp.pi_right.compose(&tp.iota_left)?.is_zero_morphism()
                && tp.pi_left.compose(&tp.iota_right)?.is_zero_morphism();
            if !ok {
                broken.push(format!("{xn}⊗{yn}"));
            }
        }
    }
    r.check(
        "criterion-7.structural-maps",
        broken.is_empty(),
        format!("{pairs} tensor pairs; {} with a failing projection or inclusion equation", broken.len()),
    );
    Ok(())
}

fn retraction_checks(cat: &LoadedCatalog, r: &mut TheoremReport) -> Result<(), HarnessError> {
    for (name, b) in &cat.bialgebras {
        if !b.is_cocommutative() {
            continue;
        }
        let d = match component_decomposition(b) {
            Ok(d) => d,
            Err(crate::hopfadj::HopfError::NotPointed { .. }) => continue,
            Err(e) => return Err(e.into()),
        };
        let pi = retraction(&d)?;
        let eps = adjunction_counit(&d.grouplikes)?;
        let ok = pi.compose(&eps)?.is_identity();
        r.check(
            format!("criterion-8.{name}"),
            ok,
            format!("retraction onto {} grouplikes splits the counit", d.grouplikes.len()),
        );
    }
    let homs = all_catalog_homs(cat)?;
    let mut broken = 0usize;
    let decompose = |m: &Arc<FiniteMonoid>| -> Result<_, HarnessError> {
        let b = Arc::new(monoid_algebra(m, Q));
        let d = component_decomposition(&b)?;
        let pi = retraction(&d)?;
        Ok((b, d, pi))
    };
    let objects = cat.monoids.iter().map(|(_, m)| decompose(m)).collect::<Result<Vec<_>, _>>()?;
    let position =
        |m: &Arc<FiniteMonoid>| cat.monoids.iter().position(|(_, x)| Arc::ptr_eq(x, m)).expect("catalog monoid");
    for phi in &homs {
        let (xb, xd, xpi) = &objects[position(phi.source())];
        let (yb, yd, ypi) = &objects[position(phi.target())];
        let h = monoid_algebra_map_between(phi, xb.clone(), yb.clone());
        let g = apply_g_between(&h, &xd.grouplikes, &yd.grouplikes)?;
        let kg = monoid_algebra_map_between(&g, xpi.target().clone(), ypi.target().clone());
        if ypi.compose(&h)? != kg.compose(xpi)? {
            broken += 1;
        }
    }
    r.check(
        "criterion-8.naturality",
        broken == 0,
        format!("{} catalog homs; {broken} squares fail to commute", homs.len()),
    );
    Ok(())
}
