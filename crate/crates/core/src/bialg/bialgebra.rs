use std::collections::HashSet;
use std::fmt;

use super::BialgError;
use crate::exactla::sparse::{to_dense, Accum, SparseVec};
use crate::exactla::{Field, Matrix, Scalar};

/// Unvalidated structure constants of a bialgebra on a finite basis.
///
/// `mul[i * n + j]` is `b_i b_j`; `comul[i]` is `Δ b_i` over the basis
/// `b_j ⊗ b_k` of `B ⊗ B`, indexed `j * n + k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RawBialgebra {
    pub field: Field,
    pub labels: Vec<String>,
    pub mul: Vec<SparseVec>,
    pub unit: Vec<Scalar>,
    pub comul: Vec<SparseVec>,
    pub counit: Vec<Scalar>,
}

/// The five families of bialgebra laws, checked independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Associativity,
    Unitality,
    Coassociativity,
    Counitality,
    Compatibility,
}

impl Axiom {
    pub const ALL: [Axiom; 5] =
        [Axiom::Associativity, Axiom::Unitality, Axiom::Coassociativity, Axiom::Counitality, Axiom::Compatibility];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::Unitality => "unitality",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counitality => "counitality",
            Axiom::Compatibility => "compatibility",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A failed law with the basis elements that witness it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub detail: String,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {}", self.axiom, self.detail)
    }
}

impl RawBialgebra {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    fn check_shape(&self) -> Result<(), BialgError> {
        let n = self.dim();
        let shape = |what: &str, msg: String| Err(BialgError::Shape(format!("{what}: {msg}")));
        let mut seen = HashSet::new();
        if let Some(l) = self.labels.iter().find(|l| !seen.insert(l.as_str())) {
            return shape("basis", format!("duplicate label {l:?}"));
        }
        if n == 0 {
            return shape("basis", "empty".into());
        }
        if self.mul.len() != n * n {
            return shape("mul", format!("{} products for dimension {n}", self.mul.len()));
        }
        if self.comul.len() != n {
            return shape("comul", format!("{} coproducts for dimension {n}", self.comul.len()));
        }
        if self.unit.len() != n || self.counit.len() != n {
            return shape("unit/counit", format!("expected {n} coefficients"));
        }
        let scalars = self
            .unit
            .iter()
            .chain(&self.counit)
            .chain(self.mul.iter().flatten().map(|(_, c)| c))
            .chain(self.comul.iter().flatten().map(|(_, c)| c));
        for s in scalars {
            if s.field() != self.field {
                return Err(BialgError::MixedFields(self.field, s.field()));
            }
        }
        if self.mul.iter().flatten().any(|(k, _)| *k >= n) {
            return shape("mul", "target index out of range".into());
        }
        if self.comul.iter().flatten().any(|(k, _)| *k >= n * n) {
            return shape("comul", "target index out of range".into());
        }
        Ok(())
    }

    /// Checks every law family separately, in a fixed order.
    pub fn axiom_report(&self) -> Result<Vec<(Axiom, Option<AxiomViolation>)>, BialgError> {
        self.check_shape()?;
        Ok(Axiom::ALL.iter().map(|&a| (a, self.check_axiom(a).err())).collect())
    }

    pub fn check_axiom(&self, axiom: Axiom) -> Result<(), AxiomViolation> {
        match axiom {
            Axiom::Associativity => self.check_associativity(),
            Axiom::Unitality => self.check_unitality(),
            Axiom::Coassociativity => self.check_coassociativity(),
            Axiom::Counitality => self.check_counitality(),
            Axiom::Compatibility => self.check_compatibility(),
        }
    }

    fn violation(&self, axiom: Axiom, at: &[usize]) -> AxiomViolation {
        let names: Vec<&str> = at.iter().map(|&i| self.labels[i].as_str()).collect();
        AxiomViolation { axiom, detail: format!("({})", names.join(", ")) }
    }

    pub(crate) fn mul_vec(&self, u: &[(usize, Scalar)], v: &[(usize, Scalar)]) -> SparseVec {
        let n = self.dim();
        let mut acc = Accum::new();
        for (i, a) in u {
            for (j, b) in v {
                acc.add_scaled(&self.mul[i * n + j], &(a * b));
            }
        }
        acc.finish()
    }

    fn unit_sparse(&self) -> SparseVec {
        crate::exactla::sparse::to_sparse(&self.unit)
    }

    fn check_associativity(&self) -> Result<(), AxiomViolation> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = &self.mul[i * n + j];
                for k in 0..n {
                    let left = self.mul_vec(ij, &[(k, self.field.one())]);
                    let right = self.mul_vec(&[(i, self.field.one())], &self.mul[j * n + k]);
                    if left != right {
                        return Err(self.violation(Axiom::Associativity, &[i, j, k]));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_unitality(&self) -> Result<(), AxiomViolation> {
        let eta = self.unit_sparse();
        for i in 0..self.dim() {
            let b = vec![(i, self.field.one())];
            if self.mul_vec(&eta, &b) != b || self.mul_vec(&b, &eta) != b {
                return Err(self.violation(Axiom::Unitality, &[i]));
            }
        }
        Ok(())
    }

    fn check_coassociativity(&self) -> Result<(), AxiomViolation> {
        let n = self.dim();
        for i in 0..n {
            let mut left = Accum::new();
            let mut right = Accum::new();
            for (jk, c) in &self.comul[i] {
                let (j, k) = (jk / n, jk % n);
                for (ab, d) in &self.comul[j] {
                    // (Δ⊗1): b_j ⊗ b_k ↦ Δb_j ⊗ b_k
                    left.add(ab * n + k, c * d);
                }
                for (ab, d) in &self.comul[k] {
                    right.add(j * n * n + ab, c * d);
                }
            }
            if left.finish() != right.finish() {
                return Err(self.violation(Axiom::Coassociativity, &[i]));
            }
        }
        Ok(())
    }

    fn check_counitality(&self) -> Result<(), AxiomViolation> {
        let n = self.dim();
        for i in 0..n {
            let mut left = Accum::new();
            let mut right = Accum::new();
            for (jk, c) in &self.comul[i] {
                let (j, k) = (jk / n, jk % n);
                left.add(k, c * &self.counit[j]);
                right.add(j, c * &self.counit[k]);
            }
            let b = vec![(i, self.field.one())];
            if left.finish() != b || right.finish() != b {
                return Err(self.violation(Axiom::Counitality, &[i]));
            }
        }
        Ok(())
    }

    /// Coproduct of a sparse element.
    pub(crate) fn comul_vec(&self, u: &[(usize, Scalar)]) -> SparseVec {
        let mut acc = Accum::new();
        for (i, a) in u {
            acc.add_scaled(&self.comul[*i], a);
        }
        acc.finish()
    }

    /// Product in the algebra `B ⊗ B` (componentwise).
    pub(crate) fn mul_tensor(&self, u: &[(usize, Scalar)], v: &[(usize, Scalar)]) -> SparseVec {
        let n = self.dim();
        let mut acc = Accum::new();
        for (ab, x) in u {
            let (a, b) = (ab / n, ab % n);
            for (cd, y) in v {
                let (c, d) = (cd / n, cd % n);
                let xy = x * y;
                for (p, s) in &self.mul[a * n + c] {
                    for (q, t) in &self.mul[b * n + d] {
                        acc.add(p * n + q, &xy * &(s * t));
                    }
                }
            }
        }
        acc.finish()
    }

    fn check_compatibility(&self) -> Result<(), AxiomViolation> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.comul_vec(&self.mul[i * n + j]);
                let rhs = self.mul_tensor(&self.comul[i], &self.comul[j]);
                if lhs != rhs {
                    return Err(self.violation(Axiom::Compatibility, &[i, j]));
                }
                let eps_prod = self.counit_of(&self.mul[i * n + j]);
                if eps_prod != &self.counit[i] * &self.counit[j] {
                    return Err(self.violation(Axiom::Compatibility, &[i, j]));
                }
            }
        }
        let eta = self.unit_sparse();
        let eta_eta: SparseVec = {
            let mut acc = Accum::new();
            for (a, x) in &eta {
                for (b, y) in &eta {
                    acc.add(a * n + b, x * y);
                }
            }
            acc.finish()
        };
        if self.comul_vec(&eta) != eta_eta || !self.counit_of(&eta).is_one() {
            return Err(AxiomViolation { axiom: Axiom::Compatibility, detail: "(unit)".into() });
        }
        Ok(())
    }

    pub(crate) fn counit_of(&self, u: &[(usize, Scalar)]) -> Scalar {
        u.iter().fold(self.field.zero(), |acc, (i, c)| &acc + &(c * &self.counit[*i]))
    }

    fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        self.comul.iter().all(|d| {
            let twisted = crate::exactla::sparse::normalize(d.iter().map(|(jk, c)| ((jk % n) * n + jk / n, c.clone())));
            twisted == *d
        })
    }
}

/// A validated finite-dimensional bialgebra with its cocommutativity flag.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bialgebra {
    data: RawBialgebra,
    cocommutative: bool,
}

/// Validates structure constants, returning the first failed law.
pub fn check_bialgebra(raw: RawBialgebra) -> Result<Bialgebra, BialgError> {
    raw.check_shape()?;
    for axiom in Axiom::ALL {
        raw.check_axiom(axiom).map_err(BialgError::Axiom)?;
    }
    let cocommutative = raw.is_cocommutative();
    Ok(Bialgebra { data: raw, cocommutative })
}

impl Bialgebra {
    /// Wraps structure constants produced by a construction known to satisfy the laws.
    pub(crate) fn from_trusted(raw: RawBialgebra) -> Self {
        debug_assert!(raw.check_shape().is_ok());
        let cocommutative = raw.is_cocommutative();
        Bialgebra { data: raw, cocommutative }
    }

    /// The one-dimensional bialgebra `K`, the zero object.
    pub fn trivial(field: Field) -> Self {
        Bialgebra::from_trusted(RawBialgebra {
            field,
            labels: vec!["1".into()],
            mul: vec![vec![(0, field.one())]],
            unit: vec![field.one()],
            comul: vec![vec![(0, field.one())]],
            counit: vec![field.one()],
        })
    }

    pub fn raw(&self) -> &RawBialgebra {
        &self.data
    }

    pub fn into_raw(self) -> RawBialgebra {
        self.data
    }

    pub fn field(&self) -> Field {
        self.data.field
    }

    pub fn dim(&self) -> usize {
        self.data.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.data.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.data.labels[i]
    }

    pub fn is_cocommutative(&self) -> bool {
        self.cocommutative
    }

    pub fn product_of_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.data.mul[i * self.dim() + j]
    }

    pub fn coproduct_of_basis(&self, i: usize) -> &SparseVec {
        &self.data.comul[i]
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.data.unit
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.data.counit
    }

    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let prod = self.data.mul_vec(&crate::exactla::sparse::to_sparse(u), &crate::exactla::sparse::to_sparse(v));
        to_dense(self.field(), self.dim(), &prod)
    }

    pub fn multiply_sparse(&self, u: &[(usize, Scalar)], v: &[(usize, Scalar)]) -> SparseVec {
        self.data.mul_vec(u, v)
    }

    /// `Δu` over the basis of `B ⊗ B`.
    pub fn coproduct(&self, u: &[Scalar]) -> SparseVec {
        self.data.comul_vec(&crate::exactla::sparse::to_sparse(u))
    }

    pub fn coproduct_sparse(&self, u: &[(usize, Scalar)]) -> SparseVec {
        self.data.comul_vec(u)
    }

    pub fn counit_of(&self, u: &[Scalar]) -> Scalar {
        self.data.counit_of(&crate::exactla::sparse::to_sparse(u))
    }

    /// `μ` as an `n × n²` matrix.
    pub fn mul_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field(), n, n * n);
        for (col, v) in self.data.mul.iter().enumerate() {
            for (row, c) in v {
                m.set(*row, col, c.clone());
            }
        }
        m
    }

    /// `Δ` as an `n² × n` matrix.
    pub fn comul_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field(), n * n, n);
        for (col, v) in self.data.comul.iter().enumerate() {
            for (row, c) in v {
                m.set(*row, col, c.clone());
            }
        }
        m
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field().zero(); self.dim()];
        v[i] = self.field().one();
        v
    }

    /// Human-readable name of a vector: a basis label when it is one, otherwise a combination.
    pub fn describe(&self, v: &[Scalar]) -> String {
        describe_vector(self.labels(), v)
    }
}

pub(crate) fn describe_vector(labels: &[String], v: &[Scalar]) -> String {
    let terms: Vec<(usize, &Scalar)> = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    match terms.as_slice() {
        [] => "0".to_string(),
        [(i, c)] if c.is_one() => labels[*i].clone(),
        _ => terms
            .iter()
            .map(|(i, c)| if c.is_one() { labels[*i].clone() } else { format!("{c}*{}", labels[*i]) })
            .collect::<Vec<_>>()
            .join(" + "),
    }
}

impl fmt::Display for Bialgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bialgebra over {} on [{}]", self.field(), self.labels().join(", "))
    }
}
