//! Univariate polynomials over the exact fields, just enough to find the
//! base-field roots of minimal polynomials.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, LinAlgError, Matrix, Scalar};

/// Trial division bound used when enumerating rational root candidates.
const TRIAL_DIVISION_LIMIT: u64 = 10_000_000;

/// Primes at or below this size are searched exhaustively.
const BRUTE_FORCE_PRIME: u64 = 4096;

/// Coefficients from the constant term upwards, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    fn monomial(field: Field, degree: usize) -> Self {
        let mut c = vec![field.zero(); degree + 1];
        c[degree] = field.one();
        Poly { field, coeffs: c }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.inv().expect("leading coefficient is nonzero");
                Poly::new(self.field, self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    fn sub(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = self.field.zero();
        Poly::new(
            self.field,
            (0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) - rhs.coeffs.get(i).unwrap_or(&z)).collect(),
        )
    }

    fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::new(self.field, Vec::new());
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    /// Quotient and remainder; panics on division by zero.
    fn div_rem(&self, rhs: &Poly) -> (Poly, Poly) {
        let d = rhs.degree().expect("division by the zero polynomial");
        let inv = rhs.coeffs[d].inv().expect("leading coefficient is nonzero");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len().saturating_sub(d).max(1)];
        while rem.len() > d && !rem.is_empty() {
            let top = rem.len() - 1;
            let factor = &rem[top] * &inv;
            if !factor.is_zero() {
                for (k, c) in rhs.coeffs.iter().enumerate() {
                    let idx = top - d + k;
                    rem[idx] = &rem[idx] - &(&factor * c);
                }
                quot[top - d] = factor;
            }
            rem.pop();
        }
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    fn gcd(&self, rhs: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    fn pow_mod(&self, mut exp: u64, modulus: &Poly) -> Poly {
        let mut base = self.div_rem(modulus).1;
        let mut acc = Poly::new(self.field, vec![self.field.one()]).div_rem(modulus).1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).div_rem(modulus).1;
            }
            base = base.mul(&base).div_rem(modulus).1;
            exp >>= 1;
        }
        acc
    }
}

/// Monic minimal polynomial of a square matrix, found as the first linear
/// dependency among `I, M, M^2, ...`.
pub fn minimal_polynomial(m: &Matrix) -> Result<Poly, LinAlgError> {
    let n = m.rows();
    if m.cols() != n {
        return Err(LinAlgError::DimensionMismatch(format!("minimal polynomial of {}x{}", n, m.cols())));
    }
    let field = m.field();
    let flatten = |a: &Matrix| -> Vec<Scalar> { (0..n * n).map(|k| a.get(k / n, k % n).clone()).collect() };
    let mut powers = vec![flatten(&Matrix::identity(field, n))];
    let mut current = Matrix::identity(field, n);
    for k in 1..=n.max(1) {
        current = current.compose(m)?;
        let target = flatten(&current);
        let system = Matrix::from_fn(field, n * n, k, |r, c| powers[c][r].clone());
        if let Some(c) = system.solve(&target)? {
            let mut coeffs: Vec<Scalar> = c.iter().map(|x| -x).collect();
            coeffs.push(field.one());
            return Ok(Poly::new(field, coeffs));
        }
        powers.push(target);
    }
    unreachable!("Cayley-Hamilton bounds the minimal polynomial degree by n")
}

/// Distinct roots lying in the base field, in ascending order of their printed form's
/// numeric value (rationals) or representative (`F_p`).
pub fn roots_in_field(poly: &Poly) -> Result<Vec<Scalar>, LinAlgError> {
    if poly.is_zero() {
        return Err(LinAlgError::ZeroPolynomial);
    }
    let mut roots = match poly.field {
        Field::Rational => rational_roots(poly)?,
        Field::Prime(p) => modular_roots(poly, p),
    };
    roots.sort_by(compare_scalars);
    roots.dedup();
    Ok(roots)
}

fn compare_scalars(a: &Scalar, b: &Scalar) -> std::cmp::Ordering {
    match (a, b) {
        (Scalar::Rational(x), Scalar::Rational(y)) => x.cmp(y),
        (Scalar::Modular { value: x, .. }, Scalar::Modular { value: y, .. }) => x.cmp(y),
        _ => panic!("mixed field tags"),
    }
}

fn rational_roots(poly: &Poly) -> Result<Vec<Scalar>, LinAlgError> {
    let mut ints = integer_coefficients(poly);
    let mut roots = Vec::new();
    let leading_zeros = ints.iter().take_while(|c| c.is_zero()).count();
    if leading_zeros > 0 {
        roots.push(Field::Rational.zero());
        ints.drain(..leading_zeros);
    }
    if ints.len() <= 1 {
        return Ok(roots);
    }
    let constant = ints[0].abs();
    let lead = ints[ints.len() - 1].abs();
    let numerators = divisors(&constant)?;
    let denominators = divisors(&lead)?;
    for p in &numerators {
        for q in &denominators {
            if !p.gcd(q).is_one() {
                continue;
            }
            for sign in [1, -1] {
                let r = BigRational::new(p * BigInt::from(sign), q.clone());
                let candidate = Scalar::Rational(r);
                if poly.eval(&candidate).is_zero() {
                    roots.push(candidate);
                }
            }
        }
    }
    Ok(roots)
}

fn integer_coefficients(poly: &Poly) -> Vec<BigInt> {
    let rationals: Vec<BigRational> = poly
        .coeffs
        .iter()
        .map(|c| match c {
            Scalar::Rational(q) => q.clone(),
            _ => unreachable!(),
        })
        .collect();
    let lcm = rationals.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    rationals.iter().map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer()).collect()
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>, LinAlgError> {
    debug_assert!(n.sign() == Sign::Plus);
    let mut rest = n.clone();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_LIMIT {
        let dd = BigInt::from(d);
        if &dd * &dd > rest {
            break;
        }
        let mut e = 0;
        while (&rest % &dd).is_zero() {
            rest /= &dd;
            e += 1;
        }
        if e > 0 {
            factors.push((dd, e));
        }
        d += 1;
    }
    if rest > BigInt::one() {
        let limit = BigInt::from(TRIAL_DIVISION_LIMIT);
        if rest > &limit * &limit {
            return Err(LinAlgError::RootSearchTooLarge(n.to_string()));
        }
        factors.push((rest, 1));
    }
    let mut out = vec![BigInt::one()];
    for (prime, e) in factors {
        let mut next = Vec::new();
        for base in &out {
            let mut pw = BigInt::one();
            for _ in 0..=e {
                next.push(base * &pw);
                pw *= &prime;
            }
        }
        out = next;
    }
    Ok(out)
}

fn modular_roots(poly: &Poly, p: u64) -> Vec<Scalar> {
    let field = poly.field;
    if p <= BRUTE_FORCE_PRIME {
        return (0..p as i64).map(|v| field.from_i64(v)).filter(|x| poly.eval(x).is_zero()).collect();
    }
    // product of the distinct linear factors: gcd(f, x^p - x)
    let f = poly.monic();
    let x = Poly::monomial(field, 1);
    let xp = x.pow_mod(p, &f);
    let split = f.gcd(&xp.sub(&x));
    let mut roots = Vec::new();
    split_linear(&split, p, &mut roots);
    roots
}

/// Splits a squarefree product of linear factors over `F_p`, `p` odd.
fn split_linear(g: &Poly, p: u64, roots: &mut Vec<Scalar>) {
    let field = g.field;
    match g.degree() {
        None | Some(0) => {}
        Some(1) => roots.push(-&g.monic().coeffs[0]),
        Some(_) => {
            for a in 0..p {
                let shifted = Poly::new(field, vec![field.from_i64(a as i64), field.one()]);
                let h = shifted.pow_mod((p - 1) / 2, g).sub(&Poly::new(field, vec![field.one()]));
                let d = g.gcd(&h);
                if let Some(k) = d.degree() {
                    if k > 0 && Some(k) < g.degree() {
                        split_linear(&d, p, roots);
                        split_linear(&g.div_rem(&d).0, p, roots);
                        return;
                    }
                }
            }
            unreachable!("distinct roots are separated by some shift");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qpoly(c: &[i64]) -> Poly {
        Poly::new(Field::Rational, c.iter().map(|&v| Field::Rational.from_i64(v)).collect())
    }

    #[test]
    fn rational_roots_of_factored_cubic() {
        // (x - 1)(2x + 3)(x^2 + 1) = 2x^4 + x^3 - x^2 + x - 3
        let p = qpoly(&[-3, 1, -1, 1, 2]);
        let roots = roots_in_field(&p).unwrap();
        let shown: Vec<String> = roots.iter().map(ToString::to_string).collect();
        assert_eq!(shown, vec!["-3/2", "1"]);
    }

    #[test]
    fn zero_root_is_found() {
        let roots = roots_in_field(&qpoly(&[0, 0, 1, 1])).unwrap();
        let shown: Vec<String> = roots.iter().map(ToString::to_string).collect();
        assert_eq!(shown, vec!["-1", "0"]);
    }

    #[test]
    fn irrational_roots_are_absent() {
        assert!(roots_in_field(&qpoly(&[-2, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn modular_roots_small_and_large_primes() {
        for p in [5u64, 10007] {
            let f = Field::Prime(p);
            // (x - 2)(x - 3)
            let poly = Poly::new(f, vec![f.from_i64(6), f.from_i64(-5), f.one()]);
            let roots: Vec<i64> = roots_in_field(&poly).unwrap().iter().map(|r| r.to_i64().unwrap()).collect();
            assert_eq!(roots, vec![2, 3]);
        }
    }

    #[test]
    fn large_prime_split_agrees_with_brute_force() {
        let p = 10007u64;
        let f = Field::Prime(p);
        let mut poly = Poly::new(f, vec![f.one()]);
        for r in [5i64, 17, 9000, 123] {
            poly = poly.mul(&Poly::new(f, vec![f.from_i64(-r), f.one()]));
        }
        poly = poly.mul(&Poly::new(f, vec![f.from_i64(1), f.zero(), f.one()]));
        let roots = roots_in_field(&poly).unwrap();
        let brute: Vec<Scalar> = (0..p as i64).map(|v| f.from_i64(v)).filter(|x| poly.eval(x).is_zero()).collect();
        assert_eq!(roots, brute);
    }

    #[test]
    fn minimal_polynomial_of_projection() {
        let f = Field::Rational;
        let m = Matrix::from_fn(f, 3, 3, |r, c| if r == c && r < 2 { f.one() } else { f.zero() });
        assert_eq!(minimal_polynomial(&m).unwrap(), qpoly(&[0, -1, 1]));
        assert_eq!(minimal_polynomial(&Matrix::identity(f, 4)).unwrap(), qpoly(&[-1, 1]));
    }
}
