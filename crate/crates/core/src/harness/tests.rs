use std::sync::Arc;

use super::format::*;
use super::*;
use crate::bialg::{check_bialgebra, Axiom, BialgError, Bialgebra, RawBialgebra};
use crate::exactla::Field;
use crate::finmon::FiniteMonoid;
use crate::hopfadj::monoid_algebra;

const Q: Field = Field::Rational;

fn loaded() -> LoadedCatalog {
    Loader::new(Catalog::embedded(), Q).load_catalog().unwrap()
}

#[test]
fn catalog_files_are_canonical() {
    for (path, text) in Catalog::embedded().files() {
        let again = match detect_kind(text).unwrap() {
            DocKind::Monoid => serialize_monoid(&parse_monoid(text).unwrap()),
            DocKind::Bialgebra => serialize_bialgebra(&parse_bialgebra(text).unwrap()),
            DocKind::Morphism => serialize_morphism_doc(&parse_morphism_doc(text).unwrap()),
            DocKind::Extension => serialize_extension_doc(&parse_extension_doc(text).unwrap()),
        };
        assert_eq!(again, text, "{path}");
    }
}

#[test]
fn catalog_matches_library_constructors() {
    let cat = loaded();
    let c2 = FiniteMonoid::cyclic(2);
    let expected = [
        ("trivial", FiniteMonoid::trivial()),
        ("c2", c2.clone()),
        ("c3", FiniteMonoid::cyclic(3)),
        ("c2xc2", c2.product(&c2)),
        ("s3", FiniteMonoid::symmetric3()),
        ("m2", FiniteMonoid::idempotent()),
        ("f3", FiniteMonoid::flip_flop()),
    ];
    assert_eq!(cat.monoids.len(), expected.len());
    for (name, m) in &expected {
        assert_eq!(&**cat.monoid(name).unwrap(), m, "{name}");
        assert_eq!(
            &**cat.bialgebra(&format!("q_{name}")).unwrap_or(&Arc::new(Bialgebra::trivial(Q))),
            &monoid_algebra(m, Q)
        );
        if m.is_group() && *name != "trivial" {
            assert_eq!(&**cat.bialgebra(&format!("f5_{name}")).unwrap(), &monoid_algebra(m, Field::Prime(5)));
        }
    }
    assert_eq!(&**cat.bialgebra("k").unwrap(), &Bialgebra::trivial(Q));
    let dual = cat.bialgebra("f2_dual").unwrap();
    assert_eq!(dual.field(), Field::Prime(2));
    assert!(dual.coproduct_of_basis(1).len() == 2 && dual.product_of_basis(1, 1).is_empty());
    assert_eq!(cat.extensions.len(), 17);
}

#[test]
fn c2_monoid_file_round_trips_byte_for_byte() {
    let text = Catalog::embedded().files().find(|(p, _)| *p == "monoids/c2.toml").unwrap().1.to_string();
    assert_eq!(
        text,
        "elements = [\"1\", \"g\"]\nidentity = \"1\"\ntable = [\n    [\"1\", \"g\"],\n    [\"g\", \"1\"],\n]\n"
    );
    assert_eq!(serialize_monoid(&parse_monoid(&text).unwrap()), text);
}

#[test]
fn malformed_row_is_named() {
    let text =
        "elements = [\"1\", \"g\"]\nidentity = \"1\"\ntable = [\n    [\"1\", \"g\"],\n    [\"g\", \"1\", \"g\"],\n]\n";
    let err = parse_monoid(text).unwrap_err().to_string();
    assert!(
        err.contains("line 5") && err.contains("table row 2") && err.contains("expected 2 entries, found 3"),
        "{err}"
    );
    let unknown = text.replace("[\"g\", \"1\", \"g\"]", "[\"g\", \"h\"]");
    assert!(parse_monoid(&unknown).unwrap_err().to_string().contains("unknown element \"h\""));
}

#[test]
fn duplicate_sparse_entry_is_named() {
    let text = "basis = [\"1\", \"g\"]\ncomul = [\n    [0, 0, 0, \"1\"],\n    [1, 1, 1, \"1\"],\n    [1, 1, 1, \"2\"],\n]\ncounit = [\"1\", \"1\"]\nfield = \"Q\"\nmul = []\nunit = [\"1\", \"0\"]\n";
    let err = parse_raw_bialgebra(text).unwrap_err().to_string();
    assert!(
        err.contains("comul entry (1, 1, 1)") && err.contains("line 5") && err.contains("first given on line 4"),
        "{err}"
    );
}

#[test]
fn syntax_errors_carry_positions() {
    let err = parse_monoid("elements = [\"1\"\nidentity = \"1\"\n").unwrap_err().to_string();
    assert!(err.contains("line"), "{err}");
    assert!(parse_raw_bialgebra("basis = []\ncounit = []\nfield = \"F_p:4\"\nunit = []\n")
        .unwrap_err()
        .to_string()
        .contains("F_p:4"));
    assert!(matches!(detect_kind("x = 1"), Err(HarnessError::Format(_))));
}

#[test]
fn zero_coefficients_are_dropped_and_fractions_kept() {
    let text = "basis = [\"1\"]\ncomul = [\n    [0, 0, 0, \"2/2\"],\n]\ncounit = [\"1\"]\nfield = \"Q\"\nmul = [\n    [0, 0, 0, \"1\"],\n    [0, 0, 0, \"0\"],\n]\nunit = [\"1\"]\n";
    let err = parse_raw_bialgebra(text).unwrap_err().to_string();
    assert!(err.contains("duplicate"), "{err}");
    let raw = RawBialgebra {
        field: Q,
        labels: vec!["1".into(), "x".into()],
        mul: vec![
            vec![(0, Q.one())],
            vec![(1, Q.one())],
            vec![(1, Q.one())],
            vec![(1, Q.parse_scalar("-1/2").unwrap())],
        ],
        unit: vec![Q.one(), Q.zero()],
        comul: vec![vec![(0, Q.one())], vec![]],
        counit: vec![Q.one(), Q.zero()],
    };
    let text = serialize_raw_bialgebra(&raw);
    assert!(text.contains("[1, 1, 1, \"-1/2\"]"));
    assert_eq!(parse_raw_bialgebra(&text).unwrap(), raw);
}

#[test]
fn mutated_bialgebra_fails_validation_naming_the_axiom() {
    let text = serialize_bialgebra(&monoid_algebra(&FiniteMonoid::cyclic(2), Q));
    let mutated = text.replace("[1, 1, 0, \"1\"]", "[1, 1, 0, \"2\"]");
    match parse_bialgebra(&mutated) {
        Err(HarnessError::Bialg(BialgError::Axiom(v))) => assert_eq!(v.axiom, Axiom::Compatibility),
        other => panic!("{other:?}"),
    }
}

#[test]
fn every_single_mutation_is_caught() {
    for (_, b) in &loaded().bialgebras {
        for (what, m) in selftest::single_constant_mutations(b.raw()) {
            assert!(check_bialgebra(m).is_err(), "{what}");
        }
    }
}

#[test]
fn equivalence_report_examples() {
    let cat = loaded();
    let r =
        theorem2_report("q_c2", cat.bialgebra("q_c2").unwrap(), cat.monoid("c2").map(|m| &**m), &cat.monoids).unwrap();
    for id in ["hopf.antipode", "hopf.grouplike-group", "join.canonical-point", "join.stable-family"] {
        assert_eq!(r.claim(id).unwrap().verdict, Verdict::Yes, "{id}");
    }
    assert_eq!(r.claim("hopf.grouplike-monoid").unwrap().verdict, Verdict::Pass);
    assert!(!r.failed());

    let r = theorem2_report("q_m2", cat.bialgebra("q_m2").unwrap(), None, &cat.monoids).unwrap();
    for id in ["hopf.antipode", "hopf.grouplike-group", "join.canonical-point", "join.stable-family"] {
        assert_eq!(r.claim(id).unwrap().verdict, Verdict::No, "{id}");
    }
    assert!(r
        .claim("join.canonical-point")
        .unwrap()
        .detail
        .ends_with("kernel dim 2, join closure dim 3 of 4, witness e⊗1"));
    assert_eq!(r.claim("equivalence.agree").unwrap().verdict, Verdict::Pass);

    let r = theorem2_report("k", cat.bialgebra("k").unwrap(), None, &cat.monoids).unwrap();
    assert!(r.claims.iter().all(|c| matches!(c.verdict, Verdict::Yes | Verdict::Pass)));
}

#[test]
fn equivalence_report_agrees_on_the_whole_catalog() {
    let cat = loaded();
    for (name, b) in &cat.bialgebras {
        let r = theorem2_report(name, b, None, &cat.monoids[..3]).unwrap();
        assert!(!r.failed(), "{name}: {}", r.render(OutputFormat::Text));
    }
}

#[test]
fn equivalence_report_rejects_non_cocommutative_input() {
    let m = FiniteMonoid::flip_flop();
    let n = m.order();
    let one = Q.one();
    let mut comul = vec![Vec::new(); n];
    for a in 0..n {
        for b in 0..n {
            comul[m.mul(a, b)].push((a * n + b, one.clone()));
        }
    }
    let mut counit = vec![Q.zero(); n];
    counit[m.identity()] = one.clone();
    let functions = Arc::new(
        check_bialgebra(RawBialgebra {
            field: Q,
            labels: m.labels().to_vec(),
            mul: (0..n * n).map(|k| if k / n == k % n { vec![(k / n, one.clone())] } else { vec![] }).collect(),
            unit: vec![one; n],
            comul,
            counit,
        })
        .unwrap(),
    );
    let err = theorem2_report("functions", &functions, None, &[]).unwrap_err();
    assert!(err.to_string().contains("cocommutative"));
}

#[test]
fn machine_reports_are_tab_separated() {
    let mut r = TheoremReport::new("x");
    r.check("a.b", true, "fine\twith tab");
    r.observe("c", false, "line\nbreak");
    let text = r.render(OutputFormat::Machine);
    assert_eq!(
        text,
        "target\tnote\tx\ncaveat\tnote\tbase-field-rational grouplikes only\na.b\tpass\tfine with tab\nc\tno\tline break\n"
    );
    assert!(!r.failed());
    r.check("d", false, "");
    assert!(r.failed());
    assert!(r.render(OutputFormat::Text).ends_with("3 claims, 1 failed\n"));
}

#[test]
fn loader_resolves_relative_references_on_disk() {
    let dir = tempfile::tempdir().unwrap();
    let objects = dir.path().join("objects");
    std::fs::create_dir(&objects).unwrap();
    std::fs::write(objects.join("c2.toml"), serialize_monoid(&FiniteMonoid::cyclic(2))).unwrap();
    let doc = MorphismDoc {
        matrix: vec![vec!["1".into(), "0".into()], vec!["0".into(), "1".into()]],
        source: "objects/c2.toml".into(),
        target: "@q_c2".into(),
    };
    std::fs::write(dir.path().join("id.toml"), serialize_morphism_doc(&doc)).unwrap();
    let loader = Loader::new(Catalog::embedded(), Q);
    let h = loader.morphism(dir.path().join("id.toml").to_str().unwrap(), None).unwrap();
    assert!(h.is_identity());

    let bad = MorphismDoc { matrix: vec![vec!["0".into(), "1".into()], vec!["1".into(), "0".into()]], ..doc.clone() };
    std::fs::write(dir.path().join("bad.toml"), serialize_morphism_doc(&bad)).unwrap();
    let err = loader.morphism(dir.path().join("bad.toml").to_str().unwrap(), None).unwrap_err().to_string();
    assert!(err.contains("bad.toml") && err.contains("not a morphism"), "{err}");

    let short = MorphismDoc { matrix: vec![vec!["1".into()], vec!["0".into(), "1".into()]], ..doc };
    std::fs::write(dir.path().join("short.toml"), serialize_morphism_doc(&short)).unwrap();
    let err = loader.morphism(dir.path().join("short.toml").to_str().unwrap(), None).unwrap_err().to_string();
    assert!(err.contains("matrix row 1"), "{err}");

    let missing = loader.monoid(dir.path().join("nope.toml").to_str().unwrap(), None).unwrap_err();
    assert!(matches!(missing, HarnessError::Io { .. }));
    assert!(matches!(loader.bialgebra("@nothing", None), Err(HarnessError::UnknownEntry(_))));
}

#[test]
fn explicit_extension_documents() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    // C2 × C2 with the first projection and the diagonal, written out by hand
    std::fs::write(p.join("x.toml"), serialize_monoid(&FiniteMonoid::cyclic(2).product(&FiniteMonoid::cyclic(2))))
        .unwrap();
    let f = MorphismDoc {
        matrix: vec![
            vec!["1".into(), "1".into(), "0".into(), "0".into()],
            vec!["0".into(), "0".into(), "1".into(), "1".into()],
        ],
        source: "x.toml".into(),
        target: "@c2".into(),
    };
    let s = MorphismDoc {
        matrix: ["1", "0", "0", "0", "0", "0", "0", "1"]
            .chunks(2)
            .map(|r| r.iter().map(|c| c.to_string()).collect())
            .collect(),
        source: "@c2".into(),
        target: "x.toml".into(),
    };
    std::fs::write(p.join("f.toml"), serialize_morphism_doc(&f)).unwrap();
    std::fs::write(p.join("s.toml"), serialize_morphism_doc(&s)).unwrap();
    let ext = ExtensionDoc {
        point: "explicit".into(),
        projection: Some("f.toml".into()),
        section: Some("s.toml".into()),
        ..Default::default()
    };
    std::fs::write(p.join("e.toml"), serialize_extension_doc(&ext)).unwrap();
    let loader = Loader::new(Catalog::embedded(), Q);
    let e = loader.extension(p.join("e.toml").to_str().unwrap(), None).unwrap();
    assert_eq!(e.kernel().source().dim(), 2);
    assert!(crate::catlim::is_strong_split_extension(&e).unwrap().strong);

    let no_section = "point = \"explicit\"\nprojection = \"f.toml\"\n";
    assert!(parse_extension_doc(no_section).unwrap_err().to_string().contains("section"));
    assert!(parse_extension_doc("point = \"other\"\n").is_err());
}

#[test]
fn catalog_directory_overrides_and_missing_files() {
    let dir = tempfile::tempdir().unwrap();
    for (path, text) in Catalog::embedded().files() {
        let target = dir.path().join(path);
        std::fs::create_dir_all(target.parent().unwrap()).unwrap();
        std::fs::write(target, text).unwrap();
    }
    assert_eq!(Catalog::from_dir(dir.path()).unwrap(), Catalog::embedded());
    std::fs::remove_file(dir.path().join("bialgebras/q_c2.toml")).unwrap();
    let cat = Catalog::from_dir(dir.path()).unwrap();
    let err = Loader::new(cat, Q).load_catalog().unwrap_err();
    assert!(matches!(err, HarnessError::Io { .. }), "{err}");
    assert!(Catalog::from_dir(&dir.path().join("absent")).is_err());
}
