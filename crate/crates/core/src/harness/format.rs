//! Canonical TOML documents for monoids, bialgebras, morphisms and extensions.
//!
//! Parsing goes through `toml`; serialization writes the canonical layout
//! directly: keys sorted, one table row or sparse entry per line.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::ops::Range;

use serde::Deserialize;
use toml::Spanned;

use super::HarnessError;
use crate::bialg::{Bialgebra, RawBialgebra};
use crate::exactla::sparse::SparseVec;
use crate::exactla::{Field, Scalar};
use crate::finmon::{check_monoid, FiniteMonoid};

/// Which kind of document a file holds, decided by its keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DocKind {
    Monoid,
    Bialgebra,
    Morphism,
    Extension,
}

pub fn detect_kind(text: &str) -> Result<DocKind, HarnessError> {
    let table: toml::Table = toml::from_str(text).map_err(syntax)?;
    let kind = if table.contains_key("table") {
        DocKind::Monoid
    } else if table.contains_key("mul") || table.contains_key("comul") {
        DocKind::Bialgebra
    } else if table.contains_key("matrix") {
        DocKind::Morphism
    } else if table.contains_key("point") {
        DocKind::Extension
    } else {
        return Err(HarnessError::Format(
            "unrecognised document: expected a monoid, bialgebra, morphism or extension".into(),
        ));
    };
    Ok(kind)
}

fn syntax(e: toml::de::Error) -> HarnessError {
    HarnessError::Format(e.to_string().trim_end().to_string())
}

fn line_of(text: &str, span: Range<usize>) -> usize {
    text[..span.start.min(text.len())].matches('\n').count() + 1
}

fn quote(s: &str) -> String {
    toml::Value::String(s.to_string()).to_string()
}

fn string_list<'a>(items: impl IntoIterator<Item = &'a str>) -> String {
    let parts: Vec<String> = items.into_iter().map(quote).collect();
    format!("[{}]", parts.join(", "))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MonoidDoc {
    elements: Vec<String>,
    identity: String,
    table: Vec<Spanned<Vec<String>>>,
}

pub fn parse_monoid(text: &str) -> Result<FiniteMonoid, HarnessError> {
    let doc: MonoidDoc = toml::from_str(text).map_err(syntax)?;
    let index: HashMap<&str, usize> = doc.elements.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let lookup = |label: &str, at: String| {
        index.get(label).copied().ok_or_else(|| HarnessError::Format(format!("{at}: unknown element {label:?}")))
    };
    let identity = lookup(&doc.identity, "identity".into())?;
    let n = doc.elements.len();
    if doc.table.len() != n {
        return Err(HarnessError::Format(format!("table: {} rows for {n} elements", doc.table.len())));
    }
    let mut table = Vec::with_capacity(n);
    for (r, row) in doc.table.iter().enumerate() {
        let at = format!("line {}: table row {} ({:?})", line_of(text, row.span()), r + 1, doc.elements[r]);
        if row.get_ref().len() != n {
            return Err(HarnessError::Format(format!("{at}: expected {n} entries, found {}", row.get_ref().len())));
        }
        table.push(row.get_ref().iter().map(|l| lookup(l, at.clone())).collect::<Result<Vec<_>, _>>()?);
    }
    Ok(check_monoid(doc.elements, identity, table)?)
}

pub fn serialize_monoid(m: &FiniteMonoid) -> String {
    let mut out = String::new();
    writeln!(out, "elements = {}", string_list(m.labels().iter().map(String::as_str))).unwrap();
    writeln!(out, "identity = {}", quote(m.label(m.identity()))).unwrap();
    writeln!(out, "table = [").unwrap();
    for row in m.table() {
        writeln!(out, "    {},", string_list(row.iter().map(|&k| m.label(k)))).unwrap();
    }
    writeln!(out, "]").unwrap();
    out
}

type Entry = (usize, usize, usize, String);

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BialgebraDoc {
    basis: Vec<String>,
    #[serde(default)]
    comul: Vec<Spanned<Entry>>,
    counit: Vec<String>,
    field: String,
    #[serde(default)]
    mul: Vec<Spanned<Entry>>,
    unit: Vec<String>,
}

fn coefficients(field: Field, what: &str, raw: &[String]) -> Result<Vec<Scalar>, HarnessError> {
    raw.iter()
        .enumerate()
        .map(|(i, c)| field.parse_scalar(c).map_err(|e| HarnessError::Format(format!("{what}[{i}]: {e}"))))
        .collect()
}

/// Collects `(i, j, k, c)` entries into `slots[slot(i, j, k)]`, rejecting repeats and bad indices.
fn sparse_table(
    text: &str,
    field: Field,
    what: &str,
    entries: &[Spanned<Entry>],
    n: usize,
    slots: usize,
    slot: impl Fn(usize, usize, usize) -> (usize, usize),
) -> Result<Vec<SparseVec>, HarnessError> {
    let mut seen: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    let mut out: Vec<SparseVec> = vec![Vec::new(); slots];
    for e in entries {
        let (i, j, k, c) = e.get_ref();
        let line = line_of(text, e.span());
        let at = format!("line {line}: {what} entry ({i}, {j}, {k})");
        if *i >= n || *j >= n || *k >= n {
            return Err(HarnessError::Format(format!("{at}: index out of range for dimension {n}")));
        }
        if let Some(first) = seen.insert((*i, *j, *k), line) {
            return Err(HarnessError::Format(format!("{at}: duplicate entry (first given on line {first})")));
        }
        let c = field.parse_scalar(c).map_err(|err| HarnessError::Format(format!("{at}: {err}")))?;
        if !c.is_zero() {
            let (s, idx) = slot(*i, *j, *k);
            out[s].push((idx, c));
        }
    }
    for v in &mut out {
        v.sort_by_key(|(i, _)| *i);
    }
    Ok(out)
}

/// Parses without validating the bialgebra laws.
pub fn parse_raw_bialgebra(text: &str) -> Result<RawBialgebra, HarnessError> {
    let doc: BialgebraDoc = toml::from_str(text).map_err(syntax)?;
    let field: Field = doc.field.parse().map_err(|e| HarnessError::Format(format!("field: {e}")))?;
    let n = doc.basis.len();
    let unit = coefficients(field, "unit", &doc.unit)?;
    let counit = coefficients(field, "counit", &doc.counit)?;
    for (what, v) in [("unit", &unit), ("counit", &counit)] {
        if v.len() != n {
            return Err(HarnessError::Format(format!("{what}: {} coefficients for {n} basis elements", v.len())));
        }
    }
    let mul = sparse_table(text, field, "mul", &doc.mul, n, n * n, |i, j, k| (i * n + j, k))?;
    let comul = sparse_table(text, field, "comul", &doc.comul, n, n, |i, j, k| (i, j * n + k))?;
    Ok(RawBialgebra { field, labels: doc.basis, mul, unit, comul, counit })
}

pub fn parse_bialgebra(text: &str) -> Result<Bialgebra, HarnessError> {
    Ok(crate::bialg::check_bialgebra(parse_raw_bialgebra(text)?)?)
}

pub fn serialize_raw_bialgebra(b: &RawBialgebra) -> String {
    let n = b.dim();
    let scalars =
        |v: &[Scalar]| string_list(v.iter().map(|c| c.to_string()).collect::<Vec<_>>().iter().map(String::as_str));
    let entries = |out: &mut String, rows: Vec<(usize, usize, usize, &Scalar)>| {
        if rows.is_empty() {
            out.push_str("[]\n");
            return;
        }
        out.push_str("[\n");
        for (i, j, k, c) in rows {
            writeln!(out, "    [{i}, {j}, {k}, {}],", quote(&c.to_string())).unwrap();
        }
        out.push_str("]\n");
    };
    let mut out = String::new();
    writeln!(out, "basis = {}", string_list(b.labels.iter().map(String::as_str))).unwrap();
    let mut comul: Vec<_> = (0..n)
        .flat_map(|i| b.comul[i].iter().filter(|(_, c)| !c.is_zero()).map(move |(jk, c)| (i, jk / n, jk % n, c)))
        .collect();
    comul.sort_by_key(|&(i, j, k, _)| (i, j, k));
    out.push_str("comul = ");
    entries(&mut out, comul);
    writeln!(out, "counit = {}", scalars(&b.counit)).unwrap();
    writeln!(out, "field = {}", quote(&b.field.to_string())).unwrap();
    let mut mul: Vec<_> = (0..n * n)
        .flat_map(|ij| b.mul[ij].iter().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (ij / n, ij % n, *k, c)))
        .collect();
    mul.sort_by_key(|&(i, j, k, _)| (i, j, k));
    out.push_str("mul = ");
    entries(&mut out, mul);
    writeln!(out, "unit = {}", scalars(&b.unit)).unwrap();
    out
}

pub fn serialize_bialgebra(b: &Bialgebra) -> String {
    serialize_raw_bialgebra(b.raw())
}

/// A morphism document: object references plus the matrix, one row per target basis element.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub matrix: Vec<Vec<String>>,
    pub source: String,
    pub target: String,
}

pub fn parse_morphism_doc(text: &str) -> Result<MorphismDoc, HarnessError> {
    toml::from_str(text).map_err(syntax)
}

pub fn serialize_morphism_doc(doc: &MorphismDoc) -> String {
    let mut out = String::from("matrix = [\n");
    for row in &doc.matrix {
        writeln!(out, "    {},", string_list(row.iter().map(String::as_str))).unwrap();
    }
    out.push_str("]\n");
    writeln!(out, "source = {}", quote(&doc.source)).unwrap();
    writeln!(out, "target = {}", quote(&doc.target)).unwrap();
    out
}

/// A split extension document.
///
/// `point = "diagonal"` needs `base`; `point = "product"` needs `left` and `right`;
/// `point = "explicit"` needs `projection` and `section`, with `kernel` optional.
#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionDoc {
    pub base: Option<String>,
    pub kernel: Option<String>,
    pub left: Option<String>,
    pub point: String,
    pub projection: Option<String>,
    pub right: Option<String>,
    pub section: Option<String>,
}

pub fn parse_extension_doc(text: &str) -> Result<ExtensionDoc, HarnessError> {
    let doc: ExtensionDoc = toml::from_str(text).map_err(syntax)?;
    let need = |field: &Option<String>, name: &str| {
        field.as_ref().map(|_| ()).ok_or_else(|| HarnessError::Format(format!("{} point needs `{name}`", doc.point)))
    };
    match doc.point.as_str() {
        "diagonal" => need(&doc.base, "base")?,
        "product" => {
            need(&doc.left, "left")?;
            need(&doc.right, "right")?;
        }
        "explicit" => {
            need(&doc.projection, "projection")?;
            need(&doc.section, "section")?;
        }
        other => {
            return Err(HarnessError::Format(format!(
                "point: unknown kind {other:?} (expected diagonal, product or explicit)"
            )))
        }
    }
    Ok(doc)
}

pub fn serialize_extension_doc(doc: &ExtensionDoc) -> String {
    let mut out = String::new();
    let fields = [
        ("base", &doc.base),
        ("kernel", &doc.kernel),
        ("left", &doc.left),
        ("point", &Some(doc.point.clone())),
        ("projection", &doc.projection),
        ("right", &doc.right),
        ("section", &doc.section),
    ];
    for (key, value) in fields {
        if let Some(v) = value {
            writeln!(out, "{key} = {}", quote(v)).unwrap();
        }
    }
    out
}
