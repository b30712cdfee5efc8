use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use super::{MonoidError, MonoidHom};

/// Largest order for which brute-force isomorphism search is attempted.
pub const ISOMORPHISM_GUARD: usize = 8;

/// A finite monoid presented by its Cayley table.
///
/// `table[i][j]` is the index of `e_i * e_j`. Equality is by presentation:
/// same labels, same identity, same table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteMonoid {
    labels: Vec<String>,
    identity: usize,
    table: Vec<Vec<usize>>,
}

/// Validates a Cayley table, reporting the first failure found.
pub fn check_monoid(labels: Vec<String>, identity: usize, table: Vec<Vec<usize>>) -> Result<FiniteMonoid, MonoidError> {
    let n = labels.len();
    if n == 0 {
        return Err(MonoidError::Empty);
    }
    let mut seen = HashSet::new();
    for l in &labels {
        if !seen.insert(l.as_str()) {
            return Err(MonoidError::DuplicateLabel(l.clone()));
        }
    }
    if identity >= n {
        return Err(MonoidError::IndexOutOfRange { row: None, value: identity });
    }
    if table.len() != n {
        return Err(MonoidError::TableShape { row: table.len().min(n), expected: n, found: table.len() });
    }
    for (r, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(MonoidError::TableShape { row: r, expected: n, found: row.len() });
        }
        if let Some(&v) = row.iter().find(|&&v| v >= n) {
            return Err(MonoidError::IndexOutOfRange { row: Some(r), value: v });
        }
    }
    for i in 0..n {
        if table[identity][i] != i || table[i][identity] != i {
            return Err(MonoidError::UnitFailure { identity: labels[identity].clone(), element: labels[i].clone() });
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return Err(MonoidError::NonAssociative {
                        triple: [labels[i].clone(), labels[j].clone(), labels[k].clone()],
                    });
                }
            }
        }
    }
    Ok(FiniteMonoid { labels, identity, table })
}

impl FiniteMonoid {
    pub fn trivial() -> Self {
        FiniteMonoid { labels: vec!["1".into()], identity: 0, table: vec![vec![0]] }
    }

    /// Cyclic group of order `n` with elements `1, g, g2, ...`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g{k}"),
            })
            .collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteMonoid { labels, identity: 0, table }
    }

    /// `{1, e}` with `e * e = e`.
    pub fn idempotent() -> Self {
        FiniteMonoid { labels: vec!["1".into(), "e".into()], identity: 0, table: vec![vec![0, 1], vec![1, 1]] }
    }

    /// The flip-flop monoid `{1, a, b}`: `a` and `b` are right zeros.
    pub fn flip_flop() -> Self {
        let table = (0..3).map(|i| (0..3).map(|j| if j == 0 { i } else { j }).collect()).collect();
        FiniteMonoid { labels: vec!["1".into(), "a".into(), "b".into()], identity: 0, table }
    }

    /// The symmetric group on three points, elements `r^i s^j` with `r = (0 1 2)`, `s = (1 2)`.
    pub fn symmetric3() -> Self {
        let r = [1usize, 2, 0];
        let s = [0usize, 2, 1];
        let id = [0usize, 1, 2];
        let compose = |a: [usize; 3], b: [usize; 3]| [a[b[0]], a[b[1]], a[b[2]]];
        let mut perms = Vec::new();
        let mut labels = Vec::new();
        let mut ri = id;
        for i in 0..3 {
            let mut rs = ri;
            for j in 0..2 {
                perms.push(rs);
                let rpart = match i {
                    0 => "",
                    1 => "r",
                    _ => "r2",
                };
                labels.push(match (rpart, j) {
                    ("", 0) => "1".to_string(),
                    (p, 0) => p.to_string(),
                    (p, _) => format!("{p}s"),
                });
                rs = compose(rs, s);
            }
            ri = compose(ri, r);
        }
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed under composition");
        let table = perms.iter().map(|&a| perms.iter().map(|&b| index(compose(a, b))).collect()).collect();
        FiniteMonoid { labels, identity: 0, table }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// Two-sided inverse table when every element is invertible.
    pub fn inverses(&self) -> Option<Vec<usize>> {
        (0..self.order())
            .map(|a| (0..self.order()).find(|&b| self.mul(a, b) == self.identity && self.mul(b, a) == self.identity))
            .collect()
    }

    pub fn is_group(&self) -> bool {
        self.inverses().is_some()
    }

    /// Direct product with elements `(a,b)` at index `a * |other| + b`.
    pub fn product(&self, other: &FiniteMonoid) -> FiniteMonoid {
        let m = other.order();
        let labels = self.labels.iter().flat_map(|a| other.labels.iter().map(move |b| format!("({a},{b})"))).collect();
        let n = self.order() * m;
        let table =
            (0..n).map(|x| (0..n).map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m)).collect()).collect();
        FiniteMonoid { labels, identity: self.identity * m + other.identity, table }
    }

    /// Smallest subset containing the seeds and the identity closed under multiplication.
    pub fn generated_submonoid(&self, seeds: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = seeds.into_iter().collect();
        set.insert(self.identity);
        let mut frontier: Vec<usize> = set.iter().copied().collect();
        while let Some(a) = frontier.pop() {
            let current: Vec<usize> = set.iter().copied().collect();
            for b in current {
                for c in [self.mul(a, b), self.mul(b, a)] {
                    if set.insert(c) {
                        frontier.push(c);
                    }
                }
            }
        }
        set
    }

    /// The submonoid on `elements` (which must contain the identity and be closed),
    /// labels preserved, with its inclusion.
    pub fn submonoid(
        self: &Arc<Self>,
        elements: &BTreeSet<usize>,
    ) -> Result<(Arc<FiniteMonoid>, MonoidHom), MonoidError> {
        let order: Vec<usize> = elements.iter().copied().collect();
        let pos: HashMap<usize, usize> = order.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let identity = *pos.get(&self.identity).ok_or(MonoidError::NotClosed)?;
        let mut table = Vec::with_capacity(order.len());
        for &a in &order {
            let mut row = Vec::with_capacity(order.len());
            for &b in &order {
                row.push(*pos.get(&self.mul(a, b)).ok_or(MonoidError::NotClosed)?);
            }
            table.push(row);
        }
        let labels = order.iter().map(|&e| self.labels[e].clone()).collect();
        let sub = Arc::new(FiniteMonoid { labels, identity, table });
        let inclusion = MonoidHom::new(sub.clone(), self.clone(), order)?;
        Ok((sub, inclusion))
    }

    /// True when both monoids have the same label set and agree on every product.
    pub fn matches_by_labels(&self, other: &FiniteMonoid) -> bool {
        if self.order() != other.order() {
            return false;
        }
        let Some(map) = self.labels.iter().map(|l| other.index_of(l)).collect::<Option<Vec<usize>>>() else {
            return false;
        };
        map[self.identity] == other.identity
            && (0..self.order()).all(|a| (0..self.order()).all(|b| map[self.mul(a, b)] == other.mul(map[a], map[b])))
    }

    /// Brute-force isomorphism search over bijections fixing the identity.
    pub fn isomorphism_to(&self, other: &FiniteMonoid) -> Result<Option<Vec<usize>>, MonoidError> {
        if self.order() != other.order() {
            return Ok(None);
        }
        if self.order() > ISOMORPHISM_GUARD {
            return Err(MonoidError::GuardExceeded {
                candidates: self.order() as u128,
                guard: ISOMORPHISM_GUARD as u128,
            });
        }
        let n = self.order();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[self.identity] = other.identity;
        used[other.identity] = true;
        fn search(a: &FiniteMonoid, b: &FiniteMonoid, k: usize, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let n = a.order();
            if k == n {
                return (0..n).all(|x| (0..n).all(|y| map[a.mul(x, y)] == b.mul(map[x], map[y])));
            }
            if map[k] != usize::MAX {
                return search(a, b, k + 1, map, used);
            }
            for t in 0..n {
                if !used[t] {
                    used[t] = true;
                    map[k] = t;
                    if search(a, b, k + 1, map, used) {
                        return true;
                    }
                    map[k] = usize::MAX;
                    used[t] = false;
                }
            }
            false
        }
        Ok(search(self, other, 0, &mut map, &mut used).then_some(map))
    }

    /// A generating set chosen greedily in index order.
    pub fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut closure = self.generated_submonoid([]);
        for e in 0..self.order() {
            if !closure.contains(&e) {
                gens.push(e);
                closure = self.generated_submonoid(gens.iter().copied());
            }
        }
        gens
    }
}

impl fmt::Display for FiniteMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels.join(", "))
    }
}
