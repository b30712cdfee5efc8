use std::collections::BTreeSet;
use std::sync::Arc;

use super::{FiniteMonoid, MonoidError};

/// Default bound on the number of candidate maps a brute-force search may visit.
pub const ENUMERATION_GUARD: u128 = 1_000_000;

/// A monoid homomorphism given by its index table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonoidHom {
    source: Arc<FiniteMonoid>,
    target: Arc<FiniteMonoid>,
    map: Vec<usize>,
}

impl MonoidHom {
    pub fn new(source: Arc<FiniteMonoid>, target: Arc<FiniteMonoid>, map: Vec<usize>) -> Result<Self, MonoidError> {
        if map.len() != source.order() {
            return Err(MonoidError::HomShape { expected: source.order(), found: map.len() });
        }
        if let Some(&v) = map.iter().find(|&&v| v >= target.order()) {
            return Err(MonoidError::IndexOutOfRange { row: None, value: v });
        }
        if map[source.identity()] != target.identity() {
            return Err(MonoidError::HomNotUnital);
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(MonoidError::HomNotMultiplicative {
                        pair: [source.label(a).to_string(), source.label(b).to_string()],
                    });
                }
            }
        }
        Ok(MonoidHom { source, target, map })
    }

    pub fn identity(m: Arc<FiniteMonoid>) -> Self {
        let map = (0..m.order()).collect();
        MonoidHom { source: m.clone(), target: m, map }
    }

    /// The hom sending everything to the identity.
    pub fn constant(source: Arc<FiniteMonoid>, target: Arc<FiniteMonoid>) -> Self {
        let map = vec![target.identity(); source.order()];
        MonoidHom { source, target, map }
    }

    pub fn source(&self) -> &Arc<FiniteMonoid> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteMonoid> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &MonoidHom) -> Result<MonoidHom, MonoidError> {
        if inner.target != self.source {
            return Err(MonoidError::NotComposable);
        }
        let map = inner.map.iter().map(|&a| self.map[a]).collect();
        Ok(MonoidHom { source: inner.source.clone(), target: self.target.clone(), map })
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.map.len()
    }

    pub fn image(&self) -> BTreeSet<usize> {
        self.map.iter().copied().collect()
    }

    /// Projection `a × b → a` of a product built with [`FiniteMonoid::product`].
    pub fn first_projection(
        product: Arc<FiniteMonoid>,
        a: Arc<FiniteMonoid>,
        b: &FiniteMonoid,
    ) -> Result<Self, MonoidError> {
        let m = b.order();
        let map = (0..product.order()).map(|x| x / m).collect();
        MonoidHom::new(product, a, map)
    }

    pub fn second_projection(product: Arc<FiniteMonoid>, b: Arc<FiniteMonoid>) -> Result<Self, MonoidError> {
        let m = b.order();
        let map = (0..product.order()).map(|x| x % m).collect();
        MonoidHom::new(product, b, map)
    }

    /// `⟨f, g⟩ : Z → X × Y` into a product built with [`FiniteMonoid::product`].
    pub fn pair(f: &MonoidHom, g: &MonoidHom, product: Arc<FiniteMonoid>) -> Result<Self, MonoidError> {
        if f.source != g.source || product.order() != f.target.order() * g.target.order() {
            return Err(MonoidError::NotComposable);
        }
        let m = g.target.order();
        let map = (0..f.source.order()).map(|z| f.map[z] * m + g.map[z]).collect();
        MonoidHom::new(f.source.clone(), product, map)
    }

    /// Lexicographic key used to order enumeration results.
    pub fn encoding(&self) -> &[usize] {
        &self.map
    }
}

/// All homomorphisms `x → y`.
///
/// A hom is fixed by its values on a generating set, so the search visits
/// `|y|^|gens|` candidate assignments and refuses when that exceeds `guard`.
/// Results are sorted by their index tables.
pub fn enumerate_homs(
    x: &Arc<FiniteMonoid>,
    y: &Arc<FiniteMonoid>,
    guard: u128,
) -> Result<Vec<MonoidHom>, MonoidError> {
    let gens = x.greedy_generators();
    let candidates = (y.order() as u128).checked_pow(gens.len() as u32).unwrap_or(u128::MAX);
    if candidates > guard {
        return Err(MonoidError::GuardExceeded { candidates, guard });
    }
    let mut out = Vec::new();
    let mut assignment = vec![0usize; gens.len()];
    loop {
        if let Some(map) = extend_from_generators(x, y, &gens, &assignment) {
            if let Ok(h) = MonoidHom::new(x.clone(), y.clone(), map) {
                out.push(h);
            }
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == assignment.len() {
                out.sort_by(|a, b| a.map.cmp(&b.map));
                out.dedup();
                return Ok(out);
            }
            assignment[k] += 1;
            if assignment[k] < y.order() {
                break;
            }
            assignment[k] = 0;
            k += 1;
        }
    }
}

/// Propagates generator images along right multiplication; `None` on a conflict.
fn extend_from_generators(x: &FiniteMonoid, y: &FiniteMonoid, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; x.order()];
    map[x.identity()] = y.identity();
    let mut frontier = vec![x.identity()];
    while let Some(a) = frontier.pop() {
        for (&g, &img) in gens.iter().zip(images) {
            let c = x.mul(a, g);
            let v = y.mul(map[a], img);
            if map[c] == usize::MAX {
                map[c] = v;
                frontier.push(c);
            } else if map[c] != v {
                return None;
            }
        }
    }
    map.iter().all(|&v| v != usize::MAX).then_some(map)
}
