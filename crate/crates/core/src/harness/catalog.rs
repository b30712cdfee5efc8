use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::{Component, Path, PathBuf};
use std::sync::Arc;

use super::format::{self, DocKind};
use super::HarnessError;
use crate::bialg::{check_morphism, BialgMorphism, Bialgebra};
use crate::catlim::{diagonal_point, product_point, BialgSplitExtension};
use crate::exactla::{Field, Matrix};
use crate::finmon::FiniteMonoid;
use crate::hopfadj::monoid_algebra;

const KIND_DIRS: [&str; 3] = ["monoids", "bialgebras", "extensions"];

macro_rules! embed {
    ($($path:literal),* $(,)?) => {
        &[$(($path, include_str!(concat!("../../catalog/", $path)))),*]
    };
}

const EMBEDDED: &[(&str, &str)] = embed![
    "monoids/trivial.toml",
    "monoids/c2.toml",
    "monoids/c3.toml",
    "monoids/c2xc2.toml",
    "monoids/s3.toml",
    "monoids/m2.toml",
    "monoids/f3.toml",
    "bialgebras/k.toml",
    "bialgebras/q_c2.toml",
    "bialgebras/q_c3.toml",
    "bialgebras/q_c2xc2.toml",
    "bialgebras/q_s3.toml",
    "bialgebras/q_m2.toml",
    "bialgebras/q_f3.toml",
    "bialgebras/f5_c2.toml",
    "bialgebras/f5_c3.toml",
    "bialgebras/f5_c2xc2.toml",
    "bialgebras/f5_s3.toml",
    "bialgebras/f2_dual.toml",
    "extensions/diag_k.toml",
    "extensions/diag_q_c2.toml",
    "extensions/diag_q_c3.toml",
    "extensions/diag_q_c2xc2.toml",
    "extensions/diag_q_s3.toml",
    "extensions/diag_q_m2.toml",
    "extensions/diag_q_f3.toml",
    "extensions/diag_f5_c2.toml",
    "extensions/diag_f5_c3.toml",
    "extensions/diag_f5_c2xc2.toml",
    "extensions/diag_f5_s3.toml",
    "extensions/diag_f2_dual.toml",
    "extensions/prod_q_c2_q_c2.toml",
    "extensions/prod_q_c2_q_c3.toml",
    "extensions/prod_q_c2_q_s3.toml",
    "extensions/prod_q_c3_q_m2.toml",
    "extensions/prod_q_m2_q_c2.toml",
];

/// Catalog documents keyed by relative path, e.g. `monoids/c2.toml`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    files: BTreeMap<String, String>,
}

impl Catalog {
    pub fn embedded() -> Self {
        Catalog { files: EMBEDDED.iter().map(|(p, t)| (p.to_string(), t.to_string())).collect() }
    }

    /// Reads every `*.toml` under `monoids/`, `bialgebras/` and `extensions/`.
    pub fn from_dir(dir: &Path) -> Result<Self, HarnessError> {
        let io = |path: &Path, e: std::io::Error| HarnessError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        };
        let mut files = BTreeMap::new();
        for kind in KIND_DIRS {
            let sub = dir.join(kind);
            for entry in std::fs::read_dir(&sub).map_err(|e| io(&sub, e))? {
                let path = entry.map_err(|e| io(&sub, e))?.path();
                if path.extension().and_then(|e| e.to_str()) != Some("toml") {
                    continue;
                }
                let name = path.file_name().and_then(|n| n.to_str()).expect("listed file has a name");
                let text = std::fs::read_to_string(&path).map_err(|e| io(&path, e))?;
                files.insert(format!("{kind}/{name}"), text);
            }
        }
        Ok(Catalog { files })
    }

    pub fn files(&self) -> impl Iterator<Item = (&str, &str)> {
        self.files.iter().map(|(p, t)| (p.as_str(), t.as_str()))
    }

    /// Entry names of one kind directory, sorted.
    pub fn names(&self, kind: &str) -> Vec<String> {
        let prefix = format!("{kind}/");
        self.files.keys().filter_map(|p| p.strip_prefix(&prefix)?.strip_suffix(".toml")).map(str::to_string).collect()
    }

    fn resolve(&self, name: &str) -> Option<String> {
        KIND_DIRS.iter().map(|k| format!("{k}/{name}.toml")).find(|p| self.files.contains_key(p))
    }
}

/// Where a document lives.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Location {
    Disk(PathBuf),
    Catalog(String),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Disk(p) => write!(f, "{}", p.display()),
            Location::Catalog(p) => write!(f, "catalog:{p}"),
        }
    }
}

fn join_catalog_path(base: &str, reference: &str) -> String {
    let mut parts: Vec<&str> = base.split('/').collect();
    parts.pop();
    for c in Path::new(reference).components() {
        match c {
            Component::ParentDir => {
                parts.pop();
            }
            Component::Normal(s) => parts.push(s.to_str().unwrap_or_default()),
            _ => {}
        }
    }
    parts.join("/")
}

/// The validated catalog, in name order within each kind.
#[derive(Clone, Debug)]
pub struct LoadedCatalog {
    pub monoids: Vec<(String, Arc<FiniteMonoid>)>,
    pub bialgebras: Vec<(String, Arc<Bialgebra>)>,
    pub extensions: Vec<(String, BialgSplitExtension)>,
}

impl LoadedCatalog {
    pub fn monoid(&self, name: &str) -> Option<&Arc<FiniteMonoid>> {
        self.monoids.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    pub fn bialgebra(&self, name: &str) -> Option<&Arc<Bialgebra>> {
        self.bialgebras.iter().find(|(n, _)| n == name).map(|(_, b)| b)
    }

    pub fn extension(&self, name: &str) -> Option<&BialgSplitExtension> {
        self.extensions.iter().find(|(n, _)| n == name).map(|(_, e)| e)
    }
}

/// Resolves references (`@name`, or paths relative to the referring document) and caches objects.
///
/// Monoid documents given where a bialgebra is expected become monoid algebras over `field`.
pub struct Loader {
    catalog: Catalog,
    field: Field,
    monoids: RefCell<HashMap<Location, Arc<FiniteMonoid>>>,
    bialgebras: RefCell<HashMap<Location, Arc<Bialgebra>>>,
}

impl Loader {
    pub fn new(catalog: Catalog, field: Field) -> Self {
        Loader { catalog, field, monoids: RefCell::default(), bialgebras: RefCell::default() }
    }

    pub fn catalog(&self) -> &Catalog {
        &self.catalog
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn locate(&self, reference: &str, base: Option<&Location>) -> Result<Location, HarnessError> {
        if let Some(name) = reference.strip_prefix('@') {
            return self
                .catalog
                .resolve(name)
                .map(Location::Catalog)
                .ok_or_else(|| HarnessError::UnknownEntry(name.to_string()));
        }
        Ok(match base {
            Some(Location::Catalog(p)) => Location::Catalog(join_catalog_path(p, reference)),
            Some(Location::Disk(p)) => Location::Disk(p.parent().unwrap_or(Path::new("")).join(reference)),
            None => Location::Disk(PathBuf::from(reference)),
        })
    }

    pub fn read(&self, loc: &Location) -> Result<String, HarnessError> {
        match loc {
            Location::Disk(p) => std::fs::read_to_string(p)
                .map_err(|e| HarnessError::Io { path: p.display().to_string(), message: e.to_string() }),
            Location::Catalog(p) => self
                .catalog
                .files
                .get(p)
                .cloned()
                .ok_or_else(|| HarnessError::Io { path: loc.to_string(), message: "no such catalog file".into() }),
        }
    }

    fn in_file<T>(loc: &Location, r: Result<T, HarnessError>) -> Result<T, HarnessError> {
        r.map_err(|e| match e {
            e @ (HarnessError::Io { .. } | HarnessError::InFile { .. }) => e,
            e => HarnessError::InFile { path: loc.to_string(), source: Box::new(e) },
        })
    }

    pub fn kind(&self, loc: &Location) -> Result<DocKind, HarnessError> {
        Self::in_file(loc, format::detect_kind(&self.read(loc)?))
    }

    pub fn monoid_at(&self, loc: &Location) -> Result<Arc<FiniteMonoid>, HarnessError> {
        if let Some(m) = self.monoids.borrow().get(loc) {
            return Ok(m.clone());
        }
        let text = self.read(loc)?;
        let m = Arc::new(Self::in_file(loc, format::parse_monoid(&text))?);
        self.monoids.borrow_mut().insert(loc.clone(), m.clone());
        Ok(m)
    }

    pub fn monoid(&self, reference: &str, base: Option<&Location>) -> Result<Arc<FiniteMonoid>, HarnessError> {
        let loc = self.locate(reference, base)?;
        if self.kind(&loc)? != DocKind::Monoid {
            return Self::in_file(&loc, Err(HarnessError::WrongKind { expected: "monoid" }));
        }
        self.monoid_at(&loc)
    }

    pub fn bialgebra_at(&self, loc: &Location) -> Result<Arc<Bialgebra>, HarnessError> {
        if let Some(b) = self.bialgebras.borrow().get(loc) {
            return Ok(b.clone());
        }
        let b = match self.kind(loc)? {
            DocKind::Bialgebra => Arc::new(Self::in_file(loc, format::parse_bialgebra(&self.read(loc)?))?),
            DocKind::Monoid => Arc::new(monoid_algebra(&*self.monoid_at(loc)?, self.field)),
            _ => return Self::in_file(loc, Err(HarnessError::WrongKind { expected: "bialgebra or monoid" })),
        };
        self.bialgebras.borrow_mut().insert(loc.clone(), b.clone());
        Ok(b)
    }

    pub fn bialgebra(&self, reference: &str, base: Option<&Location>) -> Result<Arc<Bialgebra>, HarnessError> {
        self.bialgebra_at(&self.locate(reference, base)?)
    }

    pub fn morphism_at(&self, loc: &Location) -> Result<BialgMorphism, HarnessError> {
        let text = self.read(loc)?;
        let doc = Self::in_file(loc, format::parse_morphism_doc(&text))?;
        let source = self.bialgebra(&doc.source, Some(loc))?;
        let target = self.bialgebra(&doc.target, Some(loc))?;
        let field = target.field();
        let build = || -> Result<BialgMorphism, HarnessError> {
            if source.field() != field {
                return Err(crate::bialg::BialgError::FieldMismatch(source.field(), field).into());
            }
            if doc.matrix.len() != target.dim() {
                return Err(HarnessError::Format(format!(
                    "matrix: {} rows for a target of dimension {}",
                    doc.matrix.len(),
                    target.dim()
                )));
            }
            let mut rows = Vec::with_capacity(doc.matrix.len());
            for (r, row) in doc.matrix.iter().enumerate() {
                let at = format!("matrix row {} ({:?})", r + 1, target.label(r));
                if row.len() != source.dim() {
                    return Err(HarnessError::Format(format!(
                        "{at}: expected {} entries, found {}",
                        source.dim(),
                        row.len()
                    )));
                }
                let parsed = row
                    .iter()
                    .map(|c| field.parse_scalar(c).map_err(|e| HarnessError::Format(format!("{at}: {e}"))))
                    .collect::<Result<Vec<_>, _>>()?;
                rows.push(parsed);
            }
            let matrix = Matrix::from_rows(field, rows, source.dim())?;
            Ok(check_morphism(matrix, source.clone(), target.clone())?)
        };
        Self::in_file(loc, build())
    }

    pub fn morphism(&self, reference: &str, base: Option<&Location>) -> Result<BialgMorphism, HarnessError> {
        self.morphism_at(&self.locate(reference, base)?)
    }

    pub fn extension_at(&self, loc: &Location) -> Result<BialgSplitExtension, HarnessError> {
        let doc = Self::in_file(loc, format::parse_extension_doc(&self.read(loc)?))?;
        let required = |field: &Option<String>| field.clone().expect("checked by the parser");
        let ext = match doc.point.as_str() {
            "diagonal" => {
                let y = self.bialgebra(&required(&doc.base), Some(loc))?;
                Self::in_file(loc, diagonal_point(&y).map_err(Into::into))?
            }
            "product" => {
                let x = self.bialgebra(&required(&doc.left), Some(loc))?;
                let y = self.bialgebra(&required(&doc.right), Some(loc))?;
                Self::in_file(loc, product_point(&x, &y).map_err(Into::into))?
            }
            _ => {
                let f = self.morphism(&required(&doc.projection), Some(loc))?;
                let s = self.morphism(&required(&doc.section), Some(loc))?;
                let built = match &doc.kernel {
                    Some(k) => BialgSplitExtension::new(self.morphism(k, Some(loc))?, f, s),
                    None => BialgSplitExtension::from_point(f, s),
                };
                Self::in_file(loc, built.map_err(Into::into))?
            }
        };
        Ok(ext)
    }

    pub fn extension(&self, reference: &str, base: Option<&Location>) -> Result<BialgSplitExtension, HarnessError> {
        self.extension_at(&self.locate(reference, base)?)
    }

    /// Loads and validates every catalog entry.
    pub fn load_catalog(&self) -> Result<LoadedCatalog, HarnessError> {
        let at = |kind: &str, name: &str| Location::Catalog(format!("{kind}/{name}.toml"));
        let monoids = self
            .catalog
            .names("monoids")
            .into_iter()
            .map(|n| Ok((n.clone(), self.monoid_at(&at("monoids", &n))?)))
            .collect::<Result<Vec<_>, HarnessError>>()?;
        let bialgebras = self
            .catalog
            .names("bialgebras")
            .into_iter()
            .map(|n| Ok((n.clone(), self.bialgebra_at(&at("bialgebras", &n))?)))
            .collect::<Result<Vec<_>, HarnessError>>()?;
        let extensions = self
            .catalog
            .names("extensions")
            .into_iter()
            .map(|n| Ok((n.clone(), self.extension_at(&at("extensions", &n))?)))
            .collect::<Result<Vec<_>, HarnessError>>()?;
        Ok(LoadedCatalog { monoids, bialgebras, extensions })
    }
}
