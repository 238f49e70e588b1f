//! Idempotents: exhaustive census over small fields, the order-3 automorphism
//! attached to an idempotent, the Petersson twist to a unital composition
//! algebra, and the characteristic-3 classification.

use rand::seq::index::sample;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{QuadraticForm, StructureConstantAlgebra, Vector};
use crate::error::{Error, Result};
use crate::fields::{FieldKind, Scalar};
use crate::liealg::{is_automorphism, LinearMap};
use crate::linalg::{self, Matrix, Subspace};
use crate::okubo::{CheckCount, Sl3Model};
use crate::poly::minimal_polynomial;

pub const DEFAULT_BUDGET: u128 = 100_000_000;

fn is_idempotent(alg: &StructureConstantAlgebra, f: &[Scalar]) -> bool {
    !linalg::is_zero_vec(alg.field(), f) && alg.mul(f, f) == f
}

fn require_idempotent(alg: &StructureConstantAlgebra, f: &[Scalar]) -> Result<()> {
    alg.check_element(f)?;
    if is_idempotent(alg, f) {
        Ok(())
    } else {
        Err(Error::NotIdempotent)
    }
}

fn require_char3(alg: &StructureConstantAlgebra) -> Result<()> {
    let p = alg.field().characteristic();
    if p != 3 {
        return Err(Error::BadCharacteristic {
            required: "characteristic 3",
            actual: p,
        });
    }
    Ok(())
}

/// Every nonzero `v` with `v * v = v`, in lexicographic coordinate order.
pub fn enumerate_idempotents(alg: &StructureConstantAlgebra, budget: u128) -> Result<Vec<Vector>> {
    let field = alg.field();
    let q = field.order().ok_or_else(|| Error::InfiniteField(field.to_string()))?;
    let n = alg.dim();
    let candidates = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if candidates > budget {
        return Err(Error::BudgetExceeded { candidates, budget });
    }
    let total = candidates as u64;
    // first coordinate is the most significant digit
    let decode = move |code: u64, out: &mut [u64]| {
        let mut c = code;
        for slot in out.iter_mut().rev() {
            *slot = c % q;
            c /= q;
        }
    };
    let found: Vec<Vec<u64>> = match field.kind() {
        FieldKind::Prime(p) => {
            let p = *p;
            let mut entries = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if let Scalar::Fin(c) = alg.coefficient(i, j, k) {
                            if *c != 0 {
                                entries.push((i, j, k, *c));
                            }
                        }
                    }
                }
            }
            (1..total)
                .into_par_iter()
                .map_init(
                    || (vec![0u64; n], vec![0u64; n]),
                    |(v, w), code| {
                        decode(code, v);
                        w.iter_mut().for_each(|x| *x = 0);
                        for &(i, j, k, c) in &entries {
                            if v[i] != 0 && v[j] != 0 {
                                w[k] = (w[k] + c * v[i] % p * v[j]) % p;
                            }
                        }
                        (v == w).then(|| v.clone())
                    },
                )
                .flatten()
                .collect()
        }
        _ => (1..total)
            .into_par_iter()
            .map_init(
                || vec![0u64; n],
                |digits, code| {
                    decode(code, digits);
                    let v: Vector = digits.iter().map(|&d| Scalar::Fin(d)).collect();
                    (alg.mul(&v, &v) == v).then(|| digits.clone())
                },
            )
            .flatten()
            .collect(),
    };
    Ok(found
        .into_iter()
        .map(|d| d.into_iter().map(Scalar::Fin).collect())
        .collect())
}

/// Searches random affine slices: all but `free` coordinates are fixed at
/// random values and the remaining ones are enumerated. Stops after `wanted`
/// distinct idempotents or `max_slices` slices.
pub fn slice_search<R: Rng + ?Sized>(
    alg: &StructureConstantAlgebra,
    free: usize,
    wanted: usize,
    max_slices: usize,
    rng: &mut R,
) -> Result<Vec<Vector>> {
    let field = alg.field();
    let elems: Vec<Scalar> = field.elements()?.collect();
    let q = elems.len() as u64;
    let n = alg.dim();
    let mut found: Vec<Vector> = Vec::new();
    for _ in 0..max_slices {
        if found.len() >= wanted {
            break;
        }
        let free_coords = sample(rng, n, free).into_vec();
        let base: Vector = (0..n).map(|_| field.random(rng)).collect();
        for code in 0..q.pow(free as u32) {
            let mut v = base.clone();
            let mut c = code;
            for &i in &free_coords {
                v[i] = elems[(c % q) as usize].clone();
                c /= q;
            }
            if is_idempotent(alg, &v) && !found.contains(&v) {
                found.push(v);
            }
        }
    }
    found.truncate(wanted);
    Ok(found)
}

/// `tau(x) = f * (f * x)`.
pub fn tau_map(alg: &StructureConstantAlgebra, f: &[Scalar]) -> Result<LinearMap> {
    require_idempotent(alg, f)?;
    let l = alg.left_mul_matrix(f);
    Ok(l.mul(&l))
}

/// `{x : x * f = f * x}`.
pub fn centralizer(alg: &StructureConstantAlgebra, f: &[Scalar]) -> Subspace {
    alg.right_mul_matrix(f).sub(&alg.left_mul_matrix(f)).nullspace()
}

pub fn fixed_space(map: &LinearMap) -> Subspace {
    map.sub(&Matrix::identity(map.field(), map.rows())).nullspace()
}

/// The twisted product `x . y = (f * x) * (y * f)`, same norm.
pub fn petersson_twist(alg: &StructureConstantAlgebra, f: &[Scalar]) -> Result<StructureConstantAlgebra> {
    require_idempotent(alg, f)?;
    let twisted = StructureConstantAlgebra::from_products(alg.field(), alg.labels().to_vec(), |i, j| {
        alg.mul(&alg.mul(f, &alg.basis_vector(i)), &alg.mul(&alg.basis_vector(j), f))
    })?;
    match alg.form() {
        Some(form) => twisted.with_form(form.clone()),
        None => Ok(twisted),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauReport {
    pub order_three: bool,
    pub not_identity: bool,
    pub automorphism_of_product: bool,
    pub automorphism_of_twist: bool,
    pub fixes_f: bool,
    pub fixed_equals_centralizer: bool,
    pub left_sixth_power_identity: bool,
    pub fixed_dim: usize,
}

impl TauReport {
    pub fn passed(&self) -> bool {
        self.order_three
            && self.not_identity
            && self.automorphism_of_product
            && self.automorphism_of_twist
            && self.fixes_f
            && self.fixed_equals_centralizer
            && self.left_sixth_power_identity
    }
}

pub fn verify_tau(alg: &StructureConstantAlgebra, f: &[Scalar]) -> Result<TauReport> {
    let tau = tau_map(alg, f)?;
    let twist = petersson_twist(alg, f)?;
    let fixed = fixed_space(&tau);
    Ok(TauReport {
        order_three: tau.pow(3).is_identity(),
        not_identity: !tau.is_identity(),
        automorphism_of_product: is_automorphism(alg, &tau),
        automorphism_of_twist: is_automorphism(&twist, &tau),
        fixes_f: tau.mul_vec(f) == f,
        fixed_equals_centralizer: fixed == centralizer(alg, f),
        left_sixth_power_identity: alg.left_mul_matrix(f).pow(6).is_identity(),
        fixed_dim: fixed.dim(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistReport {
    /// `f . x = x . f = x` on the basis.
    pub unit: bool,
    pub norm_multiplicative: CheckCount,
    /// `x . (x . y) = (x . x) . y` and `(y . x) . x = y . (x . x)`.
    pub alternative: CheckCount,
    /// `x * y = (x * f) . (f * y)`.
    pub recovery: CheckCount,
}

impl TwistReport {
    pub fn passed(&self) -> bool {
        self.unit && self.norm_multiplicative.passed() && self.alternative.passed() && self.recovery.passed()
    }
}

/// Checks that the twist at `f` is a unital composition algebra: unit `f`,
/// multiplicative norm on basis pairs and random pairs, alternative laws on
/// `trials` random pairs, and recovery of the original product.
pub fn verify_twist<R: Rng + ?Sized>(
    alg: &StructureConstantAlgebra,
    f: &[Scalar],
    trials: usize,
    rng: &mut R,
) -> Result<TwistReport> {
    let twist = petersson_twist(alg, f)?;
    let field = alg.field();
    let n = alg.dim();
    let unit = (0..n).all(|i| {
        let b = alg.basis_vector(i);
        twist.mul(f, &b) == b && twist.mul(&b, f) == b
    });
    let mut norm_multiplicative = CheckCount::default();
    let mut recovery = CheckCount::default();
    let multiplicative = |x: &[Scalar], y: &[Scalar]| -> Result<bool> {
        Ok(twist.norm(&twist.mul(x, y))? == field.mul(&twist.norm(x)?, &twist.norm(y)?))
    };
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (alg.basis_vector(i), alg.basis_vector(j));
            norm_multiplicative.record(multiplicative(&x, &y)?);
            recovery.record(alg.mul(&x, &y) == twist.mul(&alg.mul(&x, f), &alg.mul(f, &y)));
        }
    }
    let mut alternative = CheckCount::default();
    for _ in 0..trials {
        let (x, y) = (alg.random_element(rng), alg.random_element(rng));
        let xx = twist.mul(&x, &x);
        let left = twist.mul(&x, &twist.mul(&x, &y)) == twist.mul(&xx, &y);
        let right = twist.mul(&twist.mul(&y, &x), &x) == twist.mul(&y, &xx);
        alternative.record(left && right);
        norm_multiplicative.record(multiplicative(&x, &y)?);
    }
    Ok(TwistReport {
        unit,
        norm_multiplicative,
        alternative,
        recovery,
    })
}

/// `x o y = xbar . ybar` with `xbar = n(1, x) 1 - x`.
pub fn para_hurwitz_of(c: &StructureConstantAlgebra) -> Result<StructureConstantAlgebra> {
    let form = c.form().ok_or(Error::NoForm)?;
    let one = c.find_unit().ok_or(Error::NotUnital)?;
    let field = c.field();
    let bar = |x: &[Scalar]| linalg::vsub(field, &linalg::vscale(field, &form.polar_eval(&one, x), &one), x);
    StructureConstantAlgebra::from_products(field, c.labels().to_vec(), |i, j| {
        c.mul(&bar(&c.basis_vector(i)), &bar(&c.basis_vector(j)))
    })?
    .with_form(form.clone())
}

/// `dim S - dim S'`, where `S' = {v in S : q(v) = 0 and q(v, S) = 0}`.
///
/// The polar radical `R` of the restriction is solved linearly. Outside
/// characteristic 2, `q` vanishes on `R`, so `S' = R`. In characteristic 2,
/// `q` is additive on `R` with `q(cv) = c^2 q(v)`; over a perfect field its
/// kernel is a hyperplane of `R` unless `q` vanishes on a basis of `R`.
pub fn norm_rank_on(s: &Subspace, form: &QuadraticForm) -> usize {
    let field = s.field();
    let d = s.dim();
    if d == 0 {
        return 0;
    }
    let basis = s.basis();
    let gram = Matrix::from_fn(field, d, d, |a, b| form.polar_eval(&basis[a], &basis[b]));
    let radical = gram.nullspace();
    let mut singular_dim = radical.dim();
    if field.characteristic() == 2 {
        let q_nonzero = radical.basis().iter().any(|coords| {
            let terms: Vec<(Scalar, &[Scalar])> = coords.iter().cloned().zip(basis.iter().map(Vec::as_slice)).collect();
            !field.is_zero(&form.eval(&linalg::combine(field, s.ambient(), &terms)))
        });
        if q_nonzero {
            singular_dim -= 1;
        }
    }
    d - singular_dim
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdempotentType {
    Quaternionic,
    Quadratic,
    Singular,
    NonclassifiedCharNot3,
}

/// Assigns the characteristic-3 type from the centralizer signature.
pub fn type_from_signature(centralizer_dim: usize, norm_rank: usize) -> Result<IdempotentType> {
    match (centralizer_dim, norm_rank) {
        (6, 4) => Ok(IdempotentType::Quaternionic),
        (4, 2) => Ok(IdempotentType::Quadratic),
        (4, 1) => Ok(IdempotentType::Singular),
        (dim, rank) => Err(Error::ClassificationAnomaly { dim, rank }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentReport {
    pub element: Vector,
    pub norm_value: Scalar,
    pub centralizer_dim: usize,
    pub tau_fixed_dim: usize,
    pub norm_rank: usize,
    pub kind: IdempotentType,
}

/// Centralizer, fixed space of `tau` and norm rank of an idempotent; the
/// type is assigned in characteristic 3 and left unclassified otherwise.
pub fn analyze_idempotent(alg: &StructureConstantAlgebra, f: &[Scalar]) -> Result<IdempotentReport> {
    let form = alg.form().ok_or(Error::NoForm)?;
    let tau = tau_map(alg, f)?;
    let cent = centralizer(alg, f);
    let norm_rank = norm_rank_on(&cent, form);
    let kind = if alg.field().characteristic() == 3 {
        type_from_signature(cent.dim(), norm_rank)?
    } else {
        IdempotentType::NonclassifiedCharNot3
    };
    Ok(IdempotentReport {
        element: f.to_vec(),
        norm_value: form.eval(f),
        centralizer_dim: cent.dim(),
        tau_fixed_dim: fixed_space(&tau).dim(),
        norm_rank,
        kind,
    })
}

pub fn classify_idempotent(alg: &StructureConstantAlgebra, f: &[Scalar]) -> Result<IdempotentReport> {
    require_char3(alg)?;
    analyze_idempotent(alg, f)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Anomaly {
    pub element: String,
    pub centralizer_dim: usize,
    pub norm_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusSummary {
    pub field: String,
    pub total: usize,
    pub quaternionic: usize,
    pub quadratic: usize,
    pub singular: usize,
    pub quaternionic_witnesses: Vec<Vector>,
    pub anomalies: Vec<Anomaly>,
    pub norm_not_one: usize,
    pub tau_mismatch: usize,
    pub reports: Vec<IdempotentReport>,
}

/// Exhaustive census in characteristic 3 with each idempotent classified.
/// Anomalous signatures are collected rather than forced into a type.
pub fn census_summary(alg: &StructureConstantAlgebra, budget: u128) -> Result<CensusSummary> {
    require_char3(alg)?;
    let field = alg.field();
    let idempotents = enumerate_idempotents(alg, budget)?;
    let outcomes: Vec<Result<IdempotentReport>> = idempotents.par_iter().map(|f| classify_idempotent(alg, f)).collect();
    let mut summary = CensusSummary {
        field: field.to_string(),
        total: idempotents.len(),
        quaternionic: 0,
        quadratic: 0,
        singular: 0,
        quaternionic_witnesses: Vec::new(),
        anomalies: Vec::new(),
        norm_not_one: 0,
        tau_mismatch: 0,
        reports: Vec::with_capacity(idempotents.len()),
    };
    for (f, outcome) in idempotents.iter().zip(outcomes) {
        let report = match outcome {
            Ok(r) => r,
            Err(Error::ClassificationAnomaly { dim, rank }) => {
                summary.anomalies.push(Anomaly {
                    element: alg.format_element(f),
                    centralizer_dim: dim,
                    norm_rank: rank,
                });
                continue;
            }
            Err(e) => return Err(e),
        };
        match report.kind {
            IdempotentType::Quaternionic => {
                summary.quaternionic += 1;
                summary.quaternionic_witnesses.push(f.clone());
            }
            IdempotentType::Quadratic => summary.quadratic += 1,
            IdempotentType::Singular => summary.singular += 1,
            IdempotentType::NonclassifiedCharNot3 => unreachable!("characteristic checked"),
        }
        if !field.is_one(&report.norm_value) {
            summary.norm_not_one += 1;
        }
        if report.tau_fixed_dim != report.centralizer_dim {
            summary.tau_mismatch += 1;
        }
        summary.reports.push(report);
    }
    Ok(summary)
}

/// Degree of the minimal polynomial of `f` viewed as a 3x3 matrix.
pub fn minpoly_check_char_not3(model: &Sl3Model, f: &[Scalar]) -> Result<usize> {
    let m = model.matrix_of(f);
    if linalg::is_zero_vec(model.field(), f) || model.product(&m, &m) != m {
        return Err(Error::NotIdempotent);
    }
    Ok(minimal_polynomial(&m).degree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::Field;
    use crate::okubo::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf(q: u64) -> Field {
        Field::finite(q).unwrap()
    }

    fn element(alg: &StructureConstantAlgebra, terms: &[(i64, usize)]) -> Vector {
        let f = alg.field();
        let mut v = alg.zero();
        for &(c, i) in terms {
            v[i] = f.add(&v[i], &f.from_i64(c));
        }
        v
    }

    /// Literal definition of the singular part: count vectors of the polar
    /// radical on which q vanishes, then take the log base q.
    fn norm_rank_exhaustive(s: &Subspace, form: &QuadraticForm) -> usize {
        let field = s.field();
        let q = field.order().unwrap();
        let d = s.dim();
        let basis = s.basis();
        let elems: Vec<Scalar> = field.elements().unwrap().collect();
        let mut count = 0u64;
        for code in 0..q.pow(d as u32) {
            let mut c = code;
            let coeffs: Vec<Scalar> = (0..d)
                .map(|_| {
                    let x = elems[(c % q) as usize].clone();
                    c /= q;
                    x
                })
                .collect();
            let terms: Vec<(Scalar, &[Scalar])> = coeffs.into_iter().zip(basis.iter().map(Vec::as_slice)).collect();
            let v = linalg::combine(field, s.ambient(), &terms);
            if field.is_zero(&form.eval(&v)) && basis.iter().all(|b| field.is_zero(&form.polar_eval(&v, b))) {
                count += 1;
            }
        }
        let mut dim = 0;
        while q.pow(dim) < count {
            dim += 1;
        }
        assert_eq!(q.pow(dim), count, "singular part is a subspace");
        d - dim as usize
    }

    #[test]
    fn census_examples_gf3() {
        let alg = build_split_okubo(&gf(3));
        let all = enumerate_idempotents(&alg, DEFAULT_BUDGET).unwrap();
        let e = distinguished_idempotent(&alg).unwrap();
        assert!(all.contains(&e));
        for (a, b) in [(X10, XM10), (X01, X0M1), (X11, XM1M1), (XM11, X1M1)] {
            assert!(all.contains(&element(&alg, &[(1, a), (1, b)])));
        }
        let singular = element(&alg, &[(-1, X10), (-1, X01), (-1, XM1M1), (1, XM11), (1, X1M1)]);
        assert!(all.contains(&singular));
        assert!(all.iter().all(|f| alg.mul(f, f) == *f));
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all, "lexicographic order");
    }

    #[test]
    fn prime_and_generic_paths_agree() {
        // reading GF(3) as the extension-free generic path via a relabelled copy
        let alg = build_split_okubo(&gf(3));
        let generic: Vec<Vector> = (1..3u64.pow(8))
            .map(|code| {
                (0..8)
                    .rev()
                    .map(|i| Scalar::Fin(code / 3u64.pow(i) % 3))
                    .collect::<Vector>()
            })
            .filter(|v| alg.mul(v, v) == *v)
            .collect();
        assert_eq!(enumerate_idempotents(&alg, DEFAULT_BUDGET).unwrap(), generic);
    }

    #[test]
    fn budget_and_field_errors() {
        let alg = build_split_okubo(&gf(3));
        assert!(matches!(
            enumerate_idempotents(&alg, 100),
            Err(Error::BudgetExceeded { .. })
        ));
        let q = build_split_okubo(&Field::rationals());
        assert!(matches!(
            enumerate_idempotents(&q, DEFAULT_BUDGET),
            Err(Error::InfiniteField(_))
        ));
    }

    #[test]
    fn tau_examples() {
        let alg = build_split_okubo(&gf(3));
        let f = element(&alg, &[(1, X11), (1, XM1M1)]);
        let tau = tau_map(&alg, &f).unwrap();
        assert_eq!(tau.mul_vec(&alg.basis_vector(X10)), alg.basis_vector(X0M1));
        assert_eq!(tau.mul_vec(&f), f);
        assert!(verify_tau(&alg, &f).unwrap().passed());
        assert!(matches!(
            tau_map(&alg, &alg.basis_vector(X10)),
            Err(Error::NotIdempotent)
        ));
        assert!(matches!(tau_map(&alg, &alg.zero()), Err(Error::NotIdempotent)));
    }

    #[test]
    fn centralizer_dimensions() {
        let alg = build_split_okubo(&gf(3));
        let e = distinguished_idempotent(&alg).unwrap();
        assert_eq!(centralizer(&alg, &e).dim(), 6);
        let f = element(&alg, &[(1, X11), (1, XM1M1)]);
        assert_eq!(centralizer(&alg, &f).dim(), 4);

        let alg7 = build_split_okubo(&gf(7));
        let f7 = element(&alg7, &[(1, X11), (1, XM1M1)]);
        let r = analyze_idempotent(&alg7, &f7).unwrap();
        // matrix-side oracle: trace-zero matrices commuting with F, Gram of sr
        let model = Sl3Model::new(&gf(7)).unwrap();
        let fm = model.matrix_of(&f7);
        let commuting = Matrix::from_fn(&gf(7), 9, 8, |entry, k| {
            model.basis_matrix(k).commutator(&fm).as_flat()[entry].clone()
        })
        .nullspace();
        let mats: Vec<Matrix> = commuting.basis().iter().map(|c| model.matrix_of(c)).collect();
        let gram = Matrix::from_fn(&gf(7), mats.len(), mats.len(), |a, b| sr_polar(&mats[a], &mats[b]));
        assert_eq!((commuting.dim(), gram.rank()), (4, 4));
        assert_eq!((r.centralizer_dim, r.norm_rank), (4, 4));
        assert_eq!(r.kind, IdempotentType::NonclassifiedCharNot3);
        assert!(matches!(
            classify_idempotent(&alg7, &f7),
            Err(Error::BadCharacteristic { .. })
        ));
    }

    #[test]
    fn twist_examples() {
        let alg = build_split_okubo(&gf(3));
        let e = distinguished_idempotent(&alg).unwrap();
        let twist = petersson_twist(&alg, &e).unwrap();
        assert_eq!(twist.mul(&e, &alg.basis_vector(X10)), alg.basis_vector(X10));
        assert_eq!(twist.find_unit(), Some(e.clone()));
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let report = verify_twist(&alg, &e, 200, &mut rng).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.recovery.checked, 64);
    }

    #[test]
    fn para_hurwitz_examples() {
        let alg = build_split_okubo(&gf(3));
        let e = distinguished_idempotent(&alg).unwrap();
        let twist = petersson_twist(&alg, &e).unwrap();
        let para = para_hurwitz_of(&twist).unwrap();
        assert_eq!(para.mul(&e, &e), e);
        let center = para.commutative_center();
        assert!(center.contains(&e));
        assert_eq!(alg.commutative_center().dim(), 0);
        assert!(matches!(para_hurwitz_of(&alg), Err(Error::NotUnital)));
    }

    #[test]
    fn norm_rank_examples() {
        let f = gf(3);
        let alg = build_split_okubo(&f);
        let form = alg.form().unwrap();
        assert_eq!(norm_rank_on(&Subspace::full(&f, 8), form), 8);
        let e = distinguished_idempotent(&alg).unwrap();
        assert_eq!(norm_rank_on(&centralizer(&alg, &e), form), 4);
        let line = Subspace::span(&f, 8, &[alg.basis_vector(X10)]);
        assert_eq!(norm_rank_on(&line, form), 0);
    }

    #[test]
    fn norm_rank_matches_exhaustive_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for q in [2, 3, 4, 5] {
            let f = gf(q);
            let alg = build_split_okubo(&f);
            let form = alg.form().unwrap();
            for _ in 0..25 {
                let k = rng.gen_range(1..=4);
                let vs: Vec<Vector> = (0..k)
                    .map(|_| {
                        // sparse vectors so radicals are often nontrivial
                        let mut v = alg.zero();
                        for _ in 0..2 {
                            v[rng.gen_range(0..8)] = f.random(&mut rng);
                        }
                        v
                    })
                    .collect();
                let s = Subspace::span(&f, 8, &vs);
                assert_eq!(norm_rank_on(&s, form), norm_rank_exhaustive(&s, form), "GF({q})");
            }
        }
    }

    #[test]
    fn classification_examples() {
        let alg = build_split_okubo(&gf(3));
        let e = distinguished_idempotent(&alg).unwrap();
        assert_eq!(
            classify_idempotent(&alg, &e).unwrap().kind,
            IdempotentType::Quaternionic
        );
        let f = element(&alg, &[(1, X01), (1, X0M1)]);
        assert_eq!(classify_idempotent(&alg, &f).unwrap().kind, IdempotentType::Quadratic);
        let s = element(&alg, &[(-1, X10), (-1, X01), (-1, XM1M1), (1, XM11), (1, X1M1)]);
        let r = classify_idempotent(&alg, &s).unwrap();
        assert_eq!(r.kind, IdempotentType::Singular);
        assert_eq!((r.centralizer_dim, r.norm_rank), (4, 1));
        assert!(matches!(
            type_from_signature(5, 3),
            Err(Error::ClassificationAnomaly { dim: 5, rank: 3 })
        ));
    }

    #[test]
    fn census_gf3() {
        let alg = build_split_okubo(&gf(3));
        let s = census_summary(&alg, DEFAULT_BUDGET).unwrap();
        assert_eq!(s.quaternionic, 1);
        assert_eq!(s.quaternionic_witnesses, vec![distinguished_idempotent(&alg).unwrap()]);
        assert!(s.quadratic >= 4);
        assert!(s.anomalies.is_empty());
        assert_eq!(s.norm_not_one, 0);
        assert_eq!(s.tau_mismatch, 0);
        assert_eq!(s.total, s.quaternionic + s.quadratic + s.singular);
    }

    #[test]
    fn minpoly_examples() {
        let f = gf(7);
        let model = Sl3Model::new(&f).unwrap();
        let alg = model.to_algebra().unwrap();
        for (a, b) in [(X10, XM10), (X01, X0M1), (X11, XM1M1), (XM11, X1M1)] {
            let v = element(&alg, &[(1, a), (1, b)]);
            assert_eq!(minpoly_check_char_not3(&model, &v).unwrap(), 2);
        }
        // (1/(w - w^2)) diag(2, -1, -1)
        let w = model.omega().clone();
        let c = f.inv(&f.sub(&w, &f.mul(&w, &w))).unwrap();
        let d = Matrix::from_i64(&f, &[vec![2, 0, 0], vec![0, -1, 0], vec![0, 0, -1]]).scale(&c);
        let coords = model.coordinates(&d).unwrap();
        assert_eq!(minpoly_check_char_not3(&model, &coords).unwrap(), 2);
        assert!(minpoly_check_char_not3(&model, &alg.zero()).is_err());
    }

    #[test]
    fn slice_search_finds_idempotents() {
        let alg = build_split_okubo(&gf(7));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let found = slice_search(&alg, 4, 5, 400, &mut rng).unwrap();
        assert_eq!(found.len(), 5);
        assert!(found.iter().all(|f| alg.mul(f, f) == *f));
    }

    #[test]
    fn tau_maps_preserve_signatures() {
        let alg = build_split_okubo(&gf(3));
        let s = census_summary(&alg, DEFAULT_BUDGET).unwrap();
        let tau = tau_map(&alg, &s.reports[0].element).unwrap();
        for r in s.reports.iter().take(40) {
            let image = tau.mul_vec(&r.element);
            let ir = classify_idempotent(&alg, &image).unwrap();
            assert_eq!((ir.centralizer_dim, ir.norm_rank), (r.centralizer_dim, r.norm_rank));
        }
    }
}
