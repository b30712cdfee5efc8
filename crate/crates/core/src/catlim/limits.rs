use std::sync::Arc;

use super::coalg::largest_subcoalgebra_in_kernel;
use super::sub::SubBialgebra;
use super::CatError;
use crate::bialg::{tensor_bialgebra, BialgMorphism, Bialgebra, TensorProduct};
use crate::exactla::sparse::{to_sparse, SparseVec};

/// An equalizer (or kernel) as a sub-bialgebra, its extracted object and inclusion.
#[derive(Clone, Debug)]
pub struct Equalizer {
    pub sub: SubBialgebra,
    pub object: Arc<Bialgebra>,
    pub inclusion: BialgMorphism,
}

impl Equalizer {
    pub fn dim(&self) -> usize {
        self.sub.dim()
    }
}

/// The largest subcoalgebra of `ker(a − b)`, which is closed under the algebra structure too.
pub fn equalizer_coc(a: &BialgMorphism, b: &BialgMorphism) -> Result<Equalizer, CatError> {
    if a.source() != b.source() || a.target() != b.target() {
        return Err(CatError::NotParallel);
    }
    let diff = a.matrix().sub(b.matrix())?;
    let functionals: Vec<SparseVec> =
        diff.row_vectors().iter().map(|r| to_sparse(r)).filter(|r| !r.is_empty()).collect();
    let space = largest_subcoalgebra_in_kernel(a.source(), &functionals)?;
    let sub = SubBialgebra::analyze(a.source().clone(), space);
    if !sub.is_subbialgebra() {
        return Err(CatError::Internal("equalizer subspace is not a sub-bialgebra".into()));
    }
    let (object, inclusion) = sub.extract()?;
    Ok(Equalizer { sub, object, inclusion })
}

/// Result of probing the equalizer's universal property.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProbeOutcome {
    /// Candidates with `a ∘ h = b ∘ h`.
    pub equalizing: usize,
    /// Of those, how many land inside the equalizer.
    pub factoring: usize,
}

impl ProbeOutcome {
    pub fn holds(&self) -> bool {
        self.equalizing == self.factoring
    }
}

pub fn probe_equalizer(
    eq: &Equalizer,
    a: &BialgMorphism,
    b: &BialgMorphism,
    candidates: &[BialgMorphism],
) -> Result<ProbeOutcome, CatError> {
    let mut out = ProbeOutcome { equalizing: 0, factoring: 0 };
    for h in candidates.iter().filter(|h| h.target() == a.source()) {
        if a.compose(h)? != b.compose(h)? {
            continue;
        }
        out.equalizing += 1;
        if h.image().is_subspace_of(&eq.sub.space) {
            out.factoring += 1;
        }
    }
    Ok(out)
}

/// `equalizer(f, η∘ε)`.
pub fn categorical_kernel(f: &BialgMorphism) -> Result<Equalizer, CatError> {
    let zero = BialgMorphism::zero(f.source().clone(), f.target().clone());
    equalizer_coc(f, &zero)
}

#[derive(Clone, Debug)]
pub struct Pullback {
    pub tensor: TensorProduct,
    pub equalizer: Equalizer,
    pub proj_left: BialgMorphism,
    pub proj_right: BialgMorphism,
}

impl Pullback {
    pub fn object(&self) -> &Arc<Bialgebra> {
        &self.equalizer.object
    }
}

/// `W ×_Y X` as the equalizer of `g ∘ π_W` and `f ∘ π_X` inside `W ⊗ X`.
pub fn pullback_coc(g: &BialgMorphism, f: &BialgMorphism) -> Result<Pullback, CatError> {
    if g.target() != f.target() {
        return Err(CatError::CodomainMismatch);
    }
    let tensor = tensor_bialgebra(g.source(), f.source())?;
    let a = g.compose(&tensor.pi_left)?;
    let b = f.compose(&tensor.pi_right)?;
    let equalizer = equalizer_coc(&a, &b)?;
    let proj_left = tensor.pi_left.compose(&equalizer.inclusion)?;
    let proj_right = tensor.pi_right.compose(&equalizer.inclusion)?;
    Ok(Pullback { tensor, equalizer, proj_left, proj_right })
}
