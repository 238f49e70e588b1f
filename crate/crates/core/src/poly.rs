//! Univariate polynomials over a [`Field`], coefficients low to high.
//!
//! Only what the matrix analyses need: characteristic and minimal
//! polynomials, evaluation at a matrix, and small-degree factor search.

use crate::fields::{Field, Scalar};
use crate::linalg::{Matrix, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn x_minus(field: &Field, a: &Scalar) -> Self {
        Poly::new(field, vec![field.neg(a), field.one()])
    }

    pub fn one(field: &Field) -> Self {
        Poly {
            coeffs: vec![field.one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial given degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn add(&self, field: &Field, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = field.zero();
        let coeffs = (0..n)
            .map(|i| {
                field.add(
                    self.coeffs.get(i).unwrap_or(&zero),
                    other.coeffs.get(i).unwrap_or(&zero),
                )
            })
            .collect();
        Poly::new(field, coeffs)
    }

    pub fn scale(&self, field: &Field, c: &Scalar) -> Poly {
        Poly::new(field, self.coeffs.iter().map(|x| field.mul(c, x)).collect())
    }

    pub fn mul(&self, field: &Field, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly { coeffs: Vec::new() };
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(&out[i + j], &field.mul(a, b));
            }
        }
        Poly::new(field, out)
    }

    /// Quotient and remainder; `divisor` must be nonzero.
    pub fn div_rem(&self, field: &Field, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let d = divisor.degree();
        let lead_inv = field.inv(divisor.coeffs.last().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Poly { coeffs: Vec::new() }, Poly::new(field, rem));
        }
        let mut quot = vec![field.zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = field.mul(&rem[k + d], &lead_inv);
            if field.is_zero(&c) {
                continue;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = field.sub(&rem[k + i], &field.mul(&c, dc));
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (Poly::new(field, quot), Poly::new(field, rem))
    }

    pub fn eval(&self, field: &Field, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(field.zero(), |acc, c| field.add(&field.mul(&acc, x), c))
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let f = m.field();
        let n = m.rows();
        let mut acc = Matrix::zeros(f, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m).add(&Matrix::identity(f, n).scale(c));
        }
        acc
    }
}

/// Characteristic polynomial `det(xI - M)` via reduction to upper Hessenberg
/// form; valid over any field.
pub fn characteristic_polynomial(m: &Matrix) -> Poly {
    assert!(m.is_square());
    let f = m.field().clone();
    let n = m.rows();
    let mut h = m.clone();
    for col in 1..n.saturating_sub(1) {
        let Some(i) = (col..n).find(|&i| !f.is_zero(h.get(i, col - 1))) else {
            continue;
        };
        if i != col {
            for j in 0..n {
                let (a, b) = (h.get(i, j).clone(), h.get(col, j).clone());
                h.set(i, j, b);
                h.set(col, j, a);
            }
            for r in 0..n {
                let (a, b) = (h.get(r, i).clone(), h.get(r, col).clone());
                h.set(r, i, b);
                h.set(r, col, a);
            }
        }
        let pivot_inv = f.inv(h.get(col, col - 1)).unwrap();
        for j in col + 1..n {
            let u = f.mul(h.get(j, col - 1), &pivot_inv);
            if f.is_zero(&u) {
                continue;
            }
            for k in 0..n {
                let v = f.sub(h.get(j, k), &f.mul(&u, h.get(col, k)));
                h.set(j, k, v);
            }
            for r in 0..n {
                let v = f.add(h.get(r, col), &f.mul(&u, h.get(r, j)));
                h.set(r, col, v);
            }
        }
    }
    // p_m = (x - h[m-1][m-1]) p_{m-1} - sum_i h[i-1][m-1] * prod(subdiagonal) * p_{i-1}
    let mut ps: Vec<Poly> = vec![Poly::one(&f)];
    for m in 1..=n {
        let mut next = Poly::x_minus(&f, h.get(m - 1, m - 1)).mul(&f, &ps[m - 1]);
        let mut t = f.one();
        for i in (1..m).rev() {
            t = f.mul(&t, h.get(i, i - 1));
            let c = f.mul(h.get(i - 1, m - 1), &t);
            if !f.is_zero(&c) {
                next = next.add(&f, &ps[i - 1].scale(&f, &f.neg(&c)));
            }
        }
        ps.push(next);
    }
    ps.pop().unwrap()
}

/// Monic minimal polynomial: the first linear dependency among I, M, M^2, ...
pub fn minimal_polynomial(m: &Matrix) -> Poly {
    assert!(m.is_square());
    let f = m.field().clone();
    let n = m.rows();
    let mut powers = vec![Matrix::identity(&f, n).into_flat()];
    loop {
        let next = Matrix::from_flat(&f, n, n, powers.last().unwrap().clone()).mul(m);
        let flat = next.into_flat();
        let k = powers.len();
        // solve sum_{i<k} c_i M^i = -M^k
        let cols: Vec<Vec<Scalar>> = powers.clone();
        let system = Matrix::from_columns(&f, n * n, &cols);
        let rhs: Vec<Scalar> = flat.iter().map(|x| f.neg(x)).collect();
        if let Some(c) = system.solve(&rhs) {
            let mut coeffs = c;
            coeffs.push(f.one());
            debug_assert_eq!(coeffs.len(), k + 1);
            return Poly::new(&f, coeffs);
        }
        powers.push(flat);
    }
}

/// Monic polynomials of exact degree `d` in code order.
fn monic_polys(field: &Field, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let elems: Vec<Scalar> = field.elements().expect("finite field").collect();
    let q = elems.len() as u64;
    (0..q.pow(d as u32)).map(move |code| {
        let mut coeffs: Vec<Scalar> = (0..d)
            .map(|i| elems[(code / q.pow(i as u32) % q) as usize].clone())
            .collect();
        coeffs.push(field.one());
        Poly { coeffs }
    })
}

/// Irreducible monic factors of `p` over a finite field, found by trial
/// division with monic polynomials of increasing degree. Only factors whose
/// irreducibility is certified are returned; a cofactor is certified when no
/// divisor up to half its degree exists. Searches at most `budget` candidates.
pub fn irreducible_factors(field: &Field, p: &Poly, budget: u64) -> Vec<Poly> {
    let q = field.order().expect("finite field");
    let mut rest = p.clone();
    let lead = rest.coeffs.last().cloned().unwrap_or_else(|| field.one());
    rest = rest.scale(field, &field.inv(&lead).unwrap());
    let mut out: Vec<Poly> = Vec::new();
    let mut spent = 0u64;
    let mut d = 1;
    while 2 * d <= rest.degree() {
        let count = q.checked_pow(d as u32).unwrap_or(u64::MAX);
        if spent.saturating_add(count) > budget {
            return out;
        }
        spent += count;
        for cand in monic_polys(field, d) {
            loop {
                let (quot, rem) = rest.div_rem(field, &cand);
                if !rem.is_zero() {
                    break;
                }
                if !out.contains(&cand) {
                    out.push(cand.clone());
                }
                rest = quot;
            }
        }
        d += 1;
    }
    if rest.degree() >= 1 && !out.contains(&rest) {
        out.push(rest);
    }
    out
}

/// Kernel of `p(M)`.
pub fn kernel_of(p: &Poly, m: &Matrix) -> Subspace {
    p.eval_matrix(m).nullspace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(f: &Field, n: usize, rng: &mut impl Rng) -> Matrix {
        Matrix::from_fn(f, n, n, |_, _| f.random(rng))
    }

    #[test]
    fn charpoly_matches_determinant_at_points() {
        // det(aI - M) evaluated directly is an independent route
        let f = Field::prime(101).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..=7 {
            let m = random_matrix(&f, n, &mut rng);
            let cp = characteristic_polynomial(&m);
            assert_eq!(cp.degree(), n);
            for a in 0..12 {
                let a = f.from_i64(a);
                let direct = Matrix::identity(&f, n).scale(&a).sub(&m).determinant();
                assert_eq!(cp.eval(&f, &a), direct);
            }
        }
    }

    #[test]
    fn cayley_hamilton_small_fields() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for f in [
            Field::prime(2).unwrap(),
            Field::prime(3).unwrap(),
            Field::finite(9).unwrap(),
        ] {
            for n in 1..=8 {
                let mut m = random_matrix(&f, n, &mut rng);
                if n > 2 {
                    // force zero subdiagonal entries to exercise the pivot search
                    m.set(1, 0, f.zero());
                    m.set(2, 0, f.zero());
                }
                let cp = characteristic_polynomial(&m);
                assert!(cp.eval_matrix(&m).is_zero());
                let mp = minimal_polynomial(&m);
                assert!(mp.eval_matrix(&m).is_zero());
                assert!(cp.div_rem(&f, &mp).1.is_zero());
            }
        }
    }

    #[test]
    fn minimal_polynomial_degrees() {
        let f = Field::rationals();
        assert_eq!(minimal_polynomial(&Matrix::identity(&f, 3)).degree(), 1);
        let d = Matrix::from_i64(&f, &[vec![2, 0, 0], vec![0, -1, 0], vec![0, 0, -1]]);
        assert_eq!(minimal_polynomial(&d).degree(), 2);
        let j = Matrix::from_i64(&f, &[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        assert_eq!(minimal_polynomial(&j).degree(), 3);
    }

    #[test]
    fn factor_search() {
        let f = Field::prime(3).unwrap();
        // (x + 1)^2 (x^2 + 1) = x^4 + 2x^3 + 2x^2 + 2x + 1
        let p = Poly::new(&f, [1, 2, 2, 2, 1].iter().map(|&c| f.from_i64(c)).collect());
        let factors = irreducible_factors(&f, &p, 1000);
        assert_eq!(factors.len(), 2);
        assert!(factors.contains(&Poly::new(&f, vec![f.one(), f.one()])));
        assert!(factors.contains(&Poly::new(&f, vec![f.one(), f.zero(), f.one()])));
        for g in &factors {
            assert!(p.div_rem(&f, g).1.is_zero());
        }
    }
}
