use std::sync::Arc;

use super::join::generated_subbialgebra;
use super::limits::{categorical_kernel, pullback_coc, Pullback};
use super::sub::corestrict;
use super::CatError;
use crate::bialg::{pair_into_tensor, tensor_bialgebra, BialgMorphism, Bialgebra};
use crate::exactla::{Scalar, Subspace};
use crate::finmon::{enumerate_homs, FiniteMonoid, ENUMERATION_GUARD};
use crate::hopfadj::grouplikes;

/// A split extension `K --k--> X <--s-- --f--> Y` of cocommutative bialgebras.
#[derive(Clone, Debug)]
pub struct BialgSplitExtension {
    kernel: BialgMorphism,
    projection: BialgMorphism,
    section: BialgMorphism,
}

/// Strongness verdict: whether `im k` and `im s` generate the middle object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongReport {
    pub strong: bool,
    pub closure_dim: usize,
    pub dim: usize,
    /// First basis element outside the closure, with its label.
    pub witness: Option<(String, Vec<Scalar>)>,
}

impl BialgSplitExtension {
    pub fn new(kernel: BialgMorphism, projection: BialgMorphism, section: BialgMorphism) -> Result<Self, CatError> {
        if section.target() != projection.source() || kernel.target() != projection.source() {
            return Err(CatError::Bialg(crate::bialg::BialgError::NotComposable));
        }
        if !projection.compose(&section)?.is_identity() {
            return Err(CatError::NotSplit);
        }
        for b in [kernel.source(), projection.source(), projection.target()] {
            if !b.is_cocommutative() {
                return Err(CatError::NotCocommutative);
            }
        }
        let expected = categorical_kernel(&projection)?;
        if !kernel.is_injective() || kernel.image() != expected.sub.space {
            return Err(CatError::NotAKernel);
        }
        Ok(BialgSplitExtension { kernel, projection, section })
    }

    /// Completes a point `(f, s)` with the categorical kernel of `f`.
    pub fn from_point(projection: BialgMorphism, section: BialgMorphism) -> Result<Self, CatError> {
        let kernel = categorical_kernel(&projection)?;
        BialgSplitExtension::new(kernel.inclusion, projection, section)
    }

    pub fn kernel(&self) -> &BialgMorphism {
        &self.kernel
    }

    pub fn projection(&self) -> &BialgMorphism {
        &self.projection
    }

    pub fn section(&self) -> &BialgMorphism {
        &self.section
    }

    pub fn middle(&self) -> &Arc<Bialgebra> {
        self.projection.source()
    }

    pub fn base(&self) -> &Arc<Bialgebra> {
        self.projection.target()
    }

    /// `im k ∩ im s`, which is `span{1}` for a genuine split extension.
    pub fn kernel_section_meet(&self) -> Result<Subspace, CatError> {
        Ok(self.kernel.image().intersect(&self.section.image())?)
    }

    /// Pulls the point back along `g : W → Y`, with the induced section `⟨1_W, s∘g⟩`.
    pub fn pullback_along(&self, g: &BialgMorphism) -> Result<(Pullback, BialgSplitExtension), CatError> {
        let pb = pullback_coc(g, &self.projection)?;
        let id_w = BialgMorphism::identity(g.source().clone());
        let sg = self.section.compose(g)?;
        let pair = pair_into_tensor(&id_w, &sg, &pb.tensor)?;
        let section = corestrict(&pair, &pb.equalizer.sub, &pb.equalizer.inclusion)?;
        let ext = BialgSplitExtension::from_point(pb.proj_left.clone(), section)?;
        Ok((pb, ext))
    }
}

/// Strong with respect to injective subobjects: the join closure of kernel and section images must be everything.
pub fn is_strong_split_extension(ext: &BialgSplitExtension) -> Result<StrongReport, CatError> {
    let x = ext.middle();
    let generators = ext.kernel.image().sum(&ext.section.image())?;
    let closure = generated_subbialgebra(x, &generators)?;
    let witness = closure.space.first_missing_coordinate().map(|i| (x.label(i).to_string(), x.basis_vector(i)));
    Ok(StrongReport { strong: witness.is_none(), closure_dim: closure.dim(), dim: x.dim(), witness })
}

/// Strongness of every pullback along the supplied maps, in input order.
pub fn is_stably_strong(ext: &BialgSplitExtension, test_maps: &[BialgMorphism]) -> Result<Vec<StrongReport>, CatError> {
    test_maps
        .iter()
        .map(|g| {
            if g.target() != ext.base() {
                return Err(CatError::CodomainMismatch);
            }
            let (_, pulled) = ext.pullback_along(g)?;
            is_strong_split_extension(&pulled)
        })
        .collect()
}

/// `{id_Y, K → Y}` plus `ε_Y ∘ K[φ]` for every hom `φ : M → G(Y)` from the given monoids.
pub fn default_stable_family(
    y: &Arc<Bialgebra>,
    monoids: &[(String, Arc<FiniteMonoid>)],
) -> Result<Vec<(String, BialgMorphism)>, CatError> {
    let mut family = vec![
        ("id".to_string(), BialgMorphism::identity(y.clone())),
        ("unit".to_string(), BialgMorphism::unit_of(y.clone())),
    ];
    let gl = grouplikes(y)?;
    for (name, m) in monoids {
        let source = Arc::new(crate::hopfadj::monoid_algebra(m, y.field()));
        for phi in enumerate_homs(m, gl.monoid(), ENUMERATION_GUARD)? {
            let columns: Vec<Vec<Scalar>> = phi.map().iter().map(|&g| gl.elements()[g].clone()).collect();
            let matrix = crate::exactla::Matrix::from_columns(y.field(), y.dim(), &columns);
            let h = crate::bialg::check_morphism(matrix, source.clone(), y.clone())?;
            let images: Vec<&str> = phi.map().iter().map(|&g| gl.label(g)).collect();
            family.push((format!("{name}[{}]", images.join(",")), h));
        }
    }
    Ok(family)
}

/// `(π₁, Δ)` on `Y ⊗ Y`.
pub fn diagonal_point(y: &Arc<Bialgebra>) -> Result<BialgSplitExtension, CatError> {
    let tp = tensor_bialgebra(y, y)?;
    let id = BialgMorphism::identity(y.clone());
    let diagonal = pair_into_tensor(&id, &id, &tp)?;
    BialgSplitExtension::from_point(tp.pi_left, diagonal)
}

/// `(π_Y, ι_Y)` on `X ⊗ Y`.
pub fn product_point(x: &Arc<Bialgebra>, y: &Arc<Bialgebra>) -> Result<BialgSplitExtension, CatError> {
    let tp = tensor_bialgebra(x, y)?;
    BialgSplitExtension::from_point(tp.pi_right, tp.iota_right)
}
