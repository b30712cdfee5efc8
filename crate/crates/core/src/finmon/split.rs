use std::sync::Arc;

use super::{enumerate_homs, FiniteMonoid, MonoidError, MonoidHom};

/// Kernel `f⁻¹{1}` as a submonoid of the source, with its inclusion.
pub fn kernel_mon(f: &MonoidHom) -> Result<(Arc<FiniteMonoid>, MonoidHom), MonoidError> {
    let one = f.target().identity();
    let elements = (0..f.source().order()).filter(|&a| f.apply(a) == one).collect();
    f.source().submonoid(&elements)
}

/// The pullback `W ×_Y X` of `g: W → Y` and `f: X → Y`.
#[derive(Clone, Debug)]
pub struct MonPullback {
    pub monoid: Arc<FiniteMonoid>,
    /// Element `i` of the pullback is the pair `pairs[i]`, in lexicographic order.
    pub pairs: Vec<(usize, usize)>,
    pub proj_left: MonoidHom,
    pub proj_right: MonoidHom,
}

impl MonPullback {
    pub fn index_of(&self, w: usize, x: usize) -> Option<usize> {
        self.pairs.binary_search(&(w, x)).ok()
    }
}

pub fn pullback_mon(g: &MonoidHom, f: &MonoidHom) -> Result<MonPullback, MonoidError> {
    if g.target() != f.target() {
        return Err(MonoidError::NotComposable);
    }
    let (w, x) = (g.source(), f.source());
    let pairs: Vec<(usize, usize)> = (0..w.order())
        .flat_map(|a| (0..x.order()).map(move |b| (a, b)))
        .filter(|&(a, b)| g.apply(a) == f.apply(b))
        .collect();
    let index = |p: (usize, usize)| pairs.binary_search(&p).expect("pullback is closed");
    let labels = pairs.iter().map(|&(a, b)| format!("({},{})", w.label(a), x.label(b))).collect();
    let table =
        pairs.iter().map(|&(a, b)| pairs.iter().map(|&(c, d)| index((w.mul(a, c), x.mul(b, d)))).collect()).collect();
    let identity = index((w.identity(), x.identity()));
    let monoid = Arc::new(super::check_monoid(labels, identity, table)?);
    let proj_left = MonoidHom::new(monoid.clone(), w.clone(), pairs.iter().map(|p| p.0).collect())?;
    let proj_right = MonoidHom::new(monoid.clone(), x.clone(), pairs.iter().map(|p| p.1).collect())?;
    Ok(MonPullback { monoid, pairs, proj_left, proj_right })
}

/// A split extension `K --k--> X <--s-- Y` with `f ∘ s = 1` and `k` the kernel of `f`.
#[derive(Clone, Debug)]
pub struct MonSplitExtension {
    kernel: MonoidHom,
    projection: MonoidHom,
    section: MonoidHom,
}

/// Outcome of the strong-point test; the witness lies outside the generated submonoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongVerdict {
    pub strong: bool,
    pub closure_size: usize,
    pub witness: Option<usize>,
}

impl MonSplitExtension {
    pub fn new(kernel: MonoidHom, projection: MonoidHom, section: MonoidHom) -> Result<Self, MonoidError> {
        if !projection.compose(&section)?.is_identity() {
            return Err(MonoidError::NotSplit);
        }
        if kernel.target() != projection.source() || !kernel.is_injective() {
            return Err(MonoidError::NotAKernel);
        }
        let one = projection.target().identity();
        let preimage: Vec<usize> = (0..projection.source().order()).filter(|&a| projection.apply(a) == one).collect();
        if kernel.image().into_iter().collect::<Vec<_>>() != preimage {
            return Err(MonoidError::NotAKernel);
        }
        Ok(MonSplitExtension { kernel, projection, section })
    }

    /// Completes a point `(f, s)` with the kernel of `f`.
    pub fn from_point(projection: MonoidHom, section: MonoidHom) -> Result<Self, MonoidError> {
        let (_, k) = kernel_mon(&projection)?;
        Self::new(k, projection, section)
    }

    pub fn kernel(&self) -> &MonoidHom {
        &self.kernel
    }

    pub fn projection(&self) -> &MonoidHom {
        &self.projection
    }

    pub fn section(&self) -> &MonoidHom {
        &self.section
    }

    pub fn middle(&self) -> &Arc<FiniteMonoid> {
        self.projection.source()
    }

    pub fn base(&self) -> &Arc<FiniteMonoid> {
        self.projection.target()
    }

    /// Strong iff `im(k) ∪ im(s)` generates the middle monoid.
    pub fn is_strong(&self) -> StrongVerdict {
        let x = self.middle();
        let closure = x.generated_submonoid(self.kernel.image().into_iter().chain(self.section.image()));
        let witness = (0..x.order()).find(|a| !closure.contains(a));
        StrongVerdict { strong: witness.is_none(), closure_size: closure.len(), witness }
    }

    /// The pulled-back point `(π_W, ⟨1_W, s∘g⟩)` along `g: W → Y`, with its kernel.
    pub fn pullback_along(&self, g: &MonoidHom) -> Result<(MonPullback, MonSplitExtension), MonoidError> {
        let pb = pullback_mon(g, &self.projection)?;
        let w = g.source();
        let section_map = (0..w.order())
            .map(|a| pb.index_of(a, self.section.apply(g.apply(a))).ok_or(MonoidError::NotInPullback))
            .collect::<Result<Vec<_>, _>>()?;
        let section = MonoidHom::new(w.clone(), pb.monoid.clone(), section_map)?;
        let ext = MonSplitExtension::from_point(pb.proj_left.clone(), section)?;
        Ok((pb, ext))
    }

    /// Strongness of every pullback along the supplied homs into the base.
    pub fn stable_verdicts(&self, test_homs: &[MonoidHom]) -> Result<Vec<StrongVerdict>, MonoidError> {
        test_homs.iter().map(|g| Ok(self.pullback_along(g)?.1.is_strong())).collect()
    }

    /// Writes a pullback element `(w, x)` as `α·β` with `α = (1, x·s(g(w))⁻¹)` in the
    /// kernel of `π_W` and `β = (w, s(g(w)))` in the image of `⟨1_W, s∘g⟩`.
    ///
    /// Needs the base to be a group. Returns pullback indices `(α, β)`.
    pub fn decompose_pullback_element(
        &self,
        pb: &MonPullback,
        g: &MonoidHom,
        w: usize,
        x: usize,
    ) -> Result<(usize, usize), MonoidError> {
        let y = self.base();
        let inverses = y.inverses().ok_or(MonoidError::NotAGroup)?;
        if g.apply(w) != self.projection.apply(x) {
            return Err(MonoidError::NotInPullback);
        }
        let xm = self.middle();
        let sgw = self.section.apply(g.apply(w));
        let sgw_inv = self.section.apply(inverses[g.apply(w)]);
        let alpha = pb.index_of(g.source().identity(), xm.mul(x, sgw_inv)).ok_or(MonoidError::NotInPullback)?;
        let beta = pb.index_of(w, sgw).ok_or(MonoidError::NotInPullback)?;
        Ok((alpha, beta))
    }
}

/// All points `(f: X → Y, s: Y → X)` with `f ∘ s = 1_Y`, sorted by `(f, s)` tables.
pub fn enumerate_split_points(
    x: &Arc<FiniteMonoid>,
    y: &Arc<FiniteMonoid>,
    guard: u128,
) -> Result<Vec<(MonoidHom, MonoidHom)>, MonoidError> {
    let projections = enumerate_homs(x, y, guard)?;
    let sections = enumerate_homs(y, x, guard)?;
    let mut out = Vec::new();
    for f in &projections {
        for s in &sections {
            if f.compose(s)?.is_identity() {
                out.push((f.clone(), s.clone()));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmon::ENUMERATION_GUARD;

    struct Square {
        y: Arc<FiniteMonoid>,
        x: Arc<FiniteMonoid>,
        p1: MonoidHom,
        diag: MonoidHom,
    }

    fn square(y: FiniteMonoid) -> Square {
        let y = Arc::new(y);
        let x = Arc::new(y.product(&y));
        let p1 = MonoidHom::first_projection(x.clone(), y.clone(), &y).unwrap();
        let id = MonoidHom::identity(y.clone());
        let diag = MonoidHom::pair(&id, &id, x.clone()).unwrap();
        Square { y, x, p1, diag }
    }

    #[test]
    fn kernels_of_projections() {
        let id = MonoidHom::identity(Arc::new(FiniteMonoid::cyclic(2)));
        assert_eq!(kernel_mon(&id).unwrap().0.order(), 1);

        for (y, other) in [(FiniteMonoid::cyclic(2), "g"), (FiniteMonoid::idempotent(), "e")] {
            let sq = square(y.clone());
            let (k, _) = kernel_mon(&sq.p1).unwrap();
            assert_eq!(k.labels(), &["(1,1)".to_string(), format!("(1,{other})")]);
            assert!(k.isomorphism_to(&y).unwrap().is_some());
        }
    }

    #[test]
    fn pullbacks() {
        let sq = square(FiniteMonoid::cyclic(2));
        let id_y = MonoidHom::identity(sq.y.clone());
        let pb = pullback_mon(&id_y, &sq.p1).unwrap();
        assert_eq!(pb.monoid.order(), sq.x.order());
        assert!(pb.monoid.isomorphism_to(&sq.x).unwrap().is_some());

        assert_eq!(pullback_mon(&sq.p1, &sq.p1).unwrap().monoid.order(), 8);

        let trivial = Arc::new(FiniteMonoid::trivial());
        let unit = MonoidHom::constant(trivial, sq.y.clone());
        let pb = pullback_mon(&unit, &sq.p1).unwrap();
        let (k, _) = kernel_mon(&sq.p1).unwrap();
        assert_eq!(pb.monoid.order(), k.order());
        assert!(pb.monoid.isomorphism_to(&k).unwrap().is_some());
    }

    #[test]
    fn diagonal_points() {
        let sq = square(FiniteMonoid::cyclic(2));
        let ext = MonSplitExtension::from_point(sq.p1.clone(), sq.diag.clone()).unwrap();
        assert!(ext.is_strong().strong);

        let sq = square(FiniteMonoid::idempotent());
        let ext = MonSplitExtension::from_point(sq.p1.clone(), sq.diag.clone()).unwrap();
        let v = ext.is_strong();
        assert!(!v.strong);
        assert_eq!(v.closure_size, 3);
        assert_eq!(sq.x.label(v.witness.unwrap()), "(e,1)");
    }

    #[test]
    fn product_point_with_trivial_kernel_is_strong() {
        let y = Arc::new(FiniteMonoid::symmetric3());
        let k = Arc::new(FiniteMonoid::trivial());
        let x = Arc::new(k.product(&y));
        let f = MonoidHom::second_projection(x.clone(), y.clone()).unwrap();
        let s =
            MonoidHom::pair(&MonoidHom::constant(y.clone(), k.clone()), &MonoidHom::identity(y.clone()), x).unwrap();
        assert!(MonSplitExtension::from_point(f, s).unwrap().is_strong().strong);
    }

    #[test]
    fn decomposition_examples() {
        let sq = square(FiniteMonoid::cyclic(2));
        let ext = MonSplitExtension::from_point(sq.p1.clone(), sq.diag.clone()).unwrap();
        let g = MonoidHom::identity(sq.y.clone());
        let (pb, _) = ext.pullback_along(&g).unwrap();
        let xi = |l: &str| sq.x.index_of(l).unwrap();
        let gy = sq.y.index_of("g").unwrap();

        let (alpha, beta) = ext.decompose_pullback_element(&pb, &g, gy, xi("(g,1)")).unwrap();
        assert_eq!(pb.pairs[alpha], (0, xi("(1,g)")));
        assert_eq!(pb.pairs[beta], (gy, xi("(g,g)")));
        assert_eq!(pb.pairs[pb.monoid.mul(alpha, beta)], (gy, xi("(g,1)")));

        // identity element
        let (alpha, beta) = ext.decompose_pullback_element(&pb, &g, 0, xi("(1,g)")).unwrap();
        assert_eq!(pb.pairs[alpha], (0, xi("(1,g)")));
        assert_eq!(pb.pairs[beta], (0, xi("(1,1)")));

        // elements already in the section image
        let (alpha, beta) = ext.decompose_pullback_element(&pb, &g, gy, xi("(g,g)")).unwrap();
        assert_eq!(alpha, pb.monoid.identity());
        assert_eq!(pb.pairs[beta], (gy, xi("(g,g)")));

        assert!(matches!(ext.decompose_pullback_element(&pb, &g, gy, xi("(1,1)")), Err(MonoidError::NotInPullback)));
    }

    #[test]
    fn decomposition_requires_a_group() {
        let sq = square(FiniteMonoid::idempotent());
        let ext = MonSplitExtension::from_point(sq.p1.clone(), sq.diag.clone()).unwrap();
        let g = MonoidHom::identity(sq.y.clone());
        let (pb, _) = ext.pullback_along(&g).unwrap();
        assert!(matches!(ext.decompose_pullback_element(&pb, &g, 0, 0), Err(MonoidError::NotAGroup)));
    }

    #[test]
    fn split_point_enumeration() {
        let c2 = Arc::new(FiniteMonoid::cyclic(2));
        let points = enumerate_split_points(&c2, &c2, ENUMERATION_GUARD).unwrap();
        assert_eq!(points.len(), 1);
        assert!(points[0].0.is_identity() && points[0].1.is_identity());

        let trivial = Arc::new(FiniteMonoid::trivial());
        for x in [FiniteMonoid::cyclic(3), FiniteMonoid::flip_flop(), FiniteMonoid::symmetric3()] {
            let x = Arc::new(x);
            assert_eq!(enumerate_split_points(&x, &trivial, ENUMERATION_GUARD).unwrap().len(), 1);
        }

        let sq = square(FiniteMonoid::cyclic(2));
        let points = enumerate_split_points(&sq.x, &sq.y, ENUMERATION_GUARD).unwrap();
        assert!(points.iter().any(|(f, s)| *f == sq.p1 && *s == sq.diag));
    }

    #[test]
    fn kernel_meets_section_trivially() {
        for y in [FiniteMonoid::cyclic(2), FiniteMonoid::idempotent(), FiniteMonoid::flip_flop()] {
            let sq = square(y);
            for (f, s) in enumerate_split_points(&sq.x, &sq.y, ENUMERATION_GUARD).unwrap() {
                let ext = MonSplitExtension::from_point(f, s).unwrap();
                let meet: Vec<usize> = ext.kernel().image().intersection(&ext.section().image()).copied().collect();
                assert_eq!(meet, vec![sq.x.identity()]);
            }
        }
    }

    #[test]
    fn rejects_non_split_pairs() {
        let sq = square(FiniteMonoid::cyclic(2));
        let s = MonoidHom::constant(sq.y.clone(), sq.x.clone());
        assert!(matches!(MonSplitExtension::from_point(sq.p1.clone(), s), Err(MonoidError::NotSplit)));
    }
}
