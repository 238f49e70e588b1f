//! The split Okubo algebra and its three models: the integral multiplication
//! table, the trace-zero 3x3 matrices with the twisted product (characteristic
//! not 3), and the trace-zero part of the truncated polynomial algebra with the
//! nodal product (characteristic 3).

use serde::Serialize;

use crate::algebra::{Degree, QuadraticForm, StructureConstantAlgebra, Vector};
use crate::error::{Error, Result};
use crate::fields::{Field, Scalar};
use crate::linalg::{self, Matrix};

pub const X10: usize = 0;
pub const XM10: usize = 1;
pub const X01: usize = 2;
pub const X0M1: usize = 3;
pub const X11: usize = 4;
pub const XM1M1: usize = 5;
pub const XM11: usize = 6;
pub const X1M1: usize = 7;

/// Index pairs `(i, j)` of the basis elements `x_{i,j}`, in table order.
pub const BASIS_INDICES: [(i8, i8); 8] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (-1, 1), (1, -1)];

/// The multiplication table: entry `(s, k)` means `x_a * x_b = s x_k`, with
/// `s = 0` for a zero product.
#[rustfmt::skip]
pub const TABLE: [[(i8, usize); 8]; 8] = [
    [(1, XM10), (0, 0), (0, 0), (-1, X1M1), (0, 0), (-1, X0M1), (0, 0), (-1, XM1M1)],
    [(0, 0), (1, X10), (-1, XM11), (0, 0), (-1, X01), (0, 0), (-1, X11), (0, 0)],
    [(-1, X11), (0, 0), (1, X0M1), (0, 0), (-1, X1M1), (0, 0), (0, 0), (-1, X10)],
    [(0, 0), (-1, XM1M1), (0, 0), (1, X01), (0, 0), (-1, XM11), (-1, XM10), (0, 0)],
    [(-1, XM11), (0, 0), (0, 0), (-1, X10), (1, XM1M1), (0, 0), (-1, X0M1), (0, 0)],
    [(0, 0), (-1, X1M1), (-1, XM10), (0, 0), (0, 0), (1, X11), (0, 0), (-1, X01)],
    [(-1, X01), (0, 0), (-1, XM1M1), (0, 0), (0, 0), (-1, X10), (1, X1M1), (0, 0)],
    [(0, 0), (-1, X0M1), (0, 0), (-1, X11), (-1, XM10), (0, 0), (0, 0), (1, XM11)],
];

pub fn basis_labels() -> Vec<String> {
    BASIS_INDICES.iter().map(|(i, j)| format!("x_{{{i},{j}}}")).collect()
}

pub fn basis_degrees() -> Vec<Degree> {
    BASIS_INDICES
        .iter()
        .map(|&(i, j)| (i.rem_euclid(3) as u8, j.rem_euclid(3) as u8))
        .collect()
}

/// Table position of `x_{i,j}` for exponents taken mod 3; `None` for `(0, 0)`.
pub fn index_of(i: i64, j: i64) -> Option<usize> {
    let (i, j) = (i.rem_euclid(3), j.rem_euclid(3));
    BASIS_INDICES
        .iter()
        .position(|&(a, b)| (a as i64).rem_euclid(3) == i && (b as i64).rem_euclid(3) == j)
}

/// The hyperbolic norm: `n(x_{i,j}) = 0`, `n(x_{i,j}, x_{k,l}) = 1` iff `(i,j) = -(k,l)`.
pub fn okubo_norm(field: &Field) -> QuadraticForm {
    let polar = Matrix::from_fn(field, 8, 8, |a, b| {
        let ((i, j), (k, l)) = (BASIS_INDICES[a], BASIS_INDICES[b]);
        if i == -k && j == -l {
            field.one()
        } else {
            field.zero()
        }
    });
    QuadraticForm::new(vec![field.zero(); 8], polar).expect("hyperbolic form is consistent")
}

/// The split Okubo algebra over `field` from its integral multiplication
/// table, with the hyperbolic norm and the Z3 x Z3 grading attached.
pub fn build_split_okubo(field: &Field) -> StructureConstantAlgebra {
    StructureConstantAlgebra::from_products(field, basis_labels(), |a, b| {
        let mut v = linalg::zero_vec(field, 8);
        let (s, k) = TABLE[a][b];
        if s != 0 {
            v[k] = field.from_i64(s as i64);
        }
        v
    })
    .and_then(|alg| alg.with_form(okubo_norm(field)))
    .and_then(|alg| alg.with_grading(basis_degrees()))
    .expect("table shape is fixed")
}

/// The sum of all eight basis elements; an idempotent in characteristic 3.
pub fn distinguished_idempotent(alg: &StructureConstantAlgebra) -> Result<Vector> {
    let f = alg.field();
    if f.characteristic() != 3 {
        return Err(Error::BadCharacteristic {
            required: "characteristic 3",
            actual: f.characteristic(),
        });
    }
    Ok(vec![f.one(); alg.dim()])
}

/// Sum of the principal 2x2 minors: the coefficient of X in `det(X - a)`.
pub fn sr_form(a: &Matrix) -> Scalar {
    assert!(a.rows() == 3 && a.cols() == 3);
    let f = a.field();
    let minor = |i: usize, j: usize| f.sub(&f.mul(a.get(i, i), a.get(j, j)), &f.mul(a.get(i, j), a.get(j, i)));
    f.add(&f.add(&minor(0, 1), &minor(0, 2)), &minor(1, 2))
}

/// Polar form of [`sr_form`]: `tr(a) tr(b) - tr(ab)`.
pub fn sr_polar(a: &Matrix, b: &Matrix) -> Scalar {
    let f = a.field();
    f.sub(&f.mul(&a.trace(), &b.trace()), &a.mul(b).trace())
}

fn require_not_char3(field: &Field) -> Result<Scalar> {
    if field.characteristic() == 3 {
        return Err(Error::BadCharacteristic {
            required: "characteristic not 3",
            actual: 3,
        });
    }
    field
        .cube_root_of_unity()
        .ok_or_else(|| Error::NoCubeRoot(field.to_string()))
}

fn require_char3(field: &Field) -> Result<()> {
    if field.characteristic() != 3 {
        return Err(Error::BadCharacteristic {
            required: "characteristic 3",
            actual: field.characteristic(),
        });
    }
    Ok(())
}

/// Trace-zero 3x3 matrices with `x*y = w xy - w^2 yx - (w - w^2)/3 tr(xy) 1`.
#[derive(Clone, Debug)]
pub struct Sl3Model {
    field: Field,
    omega: Scalar,
    pauli_x: Matrix,
    pauli_y: Matrix,
    basis: Vec<Matrix>,
    /// 9x8 matrix whose columns are the flattened basis matrices
    frame: Matrix,
}

impl Sl3Model {
    pub fn new(field: &Field) -> Result<Self> {
        let omega = require_not_char3(field)?;
        let f = field;
        let w2 = f.mul(&omega, &omega);
        let pauli_x = Matrix::from_fn(
            f,
            3,
            3,
            |i, j| if i == j { f.pow_u64(&omega, i as u64) } else { f.zero() },
        );
        let pauli_y = Matrix::from_fn(f, 3, 3, |i, j| if (j + 1) % 3 == i { f.one() } else { f.zero() });
        let denom_inv = f.inv(&f.sub(&omega, &w2))?;
        let basis: Vec<Matrix> = BASIS_INDICES
            .iter()
            .map(|&(i, j)| {
                let (i, j) = (i.rem_euclid(3) as u64, j.rem_euclid(3) as u64);
                let c = f.mul(&f.pow_u64(&omega, (i * j) % 3), &denom_inv);
                pauli_x.pow(i).mul(&pauli_y.pow(j)).scale(&c)
            })
            .collect();
        let cols: Vec<Vector> = basis.iter().map(|m| m.as_flat().to_vec()).collect();
        let frame = Matrix::from_columns(f, 9, &cols);
        Ok(Sl3Model {
            field: f.clone(),
            omega,
            pauli_x,
            pauli_y,
            basis,
            frame,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn omega(&self) -> &Scalar {
        &self.omega
    }

    pub fn pauli(&self) -> (&Matrix, &Matrix) {
        (&self.pauli_x, &self.pauli_y)
    }

    /// The matrix `x_{i,j}` at table position `k`.
    pub fn basis_matrix(&self, k: usize) -> &Matrix {
        &self.basis[k]
    }

    /// `sum v_k x_k` as a matrix.
    pub fn matrix_of(&self, v: &[Scalar]) -> Matrix {
        let f = &self.field;
        v.iter()
            .zip(&self.basis)
            .fold(Matrix::zeros(f, 3, 3), |acc, (c, m)| acc.add(&m.scale(c)))
    }

    /// Coordinates of a trace-zero matrix in the basis `x_{i,j}`.
    pub fn coordinates(&self, m: &Matrix) -> Option<Vector> {
        self.frame.solve(m.as_flat())
    }

    pub fn product(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let f = &self.field;
        let w2 = f.mul(&self.omega, &self.omega);
        let ab = a.mul(b);
        let c = f
            .div(&f.sub(&self.omega, &w2), &f.from_i64(3))
            .expect("3 is invertible");
        let correction = Matrix::identity(f, 3).scale(&f.mul(&c, &ab.trace()));
        ab.scale(&self.omega).sub(&b.mul(a).scale(&w2)).sub(&correction)
    }

    /// The model as a structure-constant algebra: products expanded in the
    /// matrix basis, norm `sr`, grading by `(i, j)`.
    pub fn to_algebra(&self) -> Result<StructureConstantAlgebra> {
        let f = &self.field;
        let mut tensor = Vec::with_capacity(512);
        for a in &self.basis {
            for b in &self.basis {
                let prod = self.product(a, b);
                let coords = self
                    .coordinates(&prod)
                    .ok_or_else(|| Error::BadAlgebraData("product is not trace zero".into()))?;
                tensor.extend(coords);
            }
        }
        let values = self.basis.iter().map(sr_form).collect();
        let polar = Matrix::from_fn(f, 8, 8, |i, j| sr_polar(&self.basis[i], &self.basis[j]));
        StructureConstantAlgebra::new(f, basis_labels(), tensor)?
            .with_form(QuadraticForm::new(values, polar)?)?
            .with_grading(basis_degrees())
    }

    /// Checks `(x*y)*x = x*(y*x) = sr(x) y` on all basis pairs with matrix arithmetic.
    pub fn check_flexible_norm_identity(&self) -> CheckCount {
        let mut count = CheckCount::default();
        for x in &self.basis {
            let s = sr_form(x);
            for y in &self.basis {
                let xy = self.product(x, y);
                let target = y.scale(&s);
                count.record(self.product(&xy, x) == target && self.product(x, &self.product(y, x)) == target);
            }
        }
        count
    }

    /// Checks that `x -> -x` carries the matrix commutator to `u*v - v*u`.
    pub fn check_minus_isomorphism(&self) -> CheckCount {
        let f = &self.field;
        let minus_one = f.neg(&f.one());
        let mut count = CheckCount::default();
        for a in &self.basis {
            for b in &self.basis {
                let lhs = a.commutator(b).scale(&minus_one);
                let (na, nb) = (a.scale(&minus_one), b.scale(&minus_one));
                let rhs = self.product(&na, &nb).sub(&self.product(&nb, &na));
                count.record(lhs == rhs);
            }
        }
        count
    }
}

pub fn build_sl3_model(field: &Field) -> Result<StructureConstantAlgebra> {
    Sl3Model::new(field)?.to_algebra()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckCount {
    pub checked: usize,
    pub matched: usize,
}

impl CheckCount {
    pub fn record(&mut self, ok: bool) {
        self.checked += 1;
        if ok {
            self.matched += 1;
        }
    }

    pub fn passed(&self) -> bool {
        self.checked == self.matched
    }
}

/// Outcome of transporting the multiplication table into another model.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IsomorphismReport {
    pub model: String,
    pub field: String,
    pub products: CheckCount,
    pub polar: CheckCount,
    pub norms: CheckCount,
    pub failures: Vec<String>,
}

impl IsomorphismReport {
    pub fn passed(&self) -> bool {
        self.products.passed() && self.polar.passed() && self.norms.passed()
    }
}

/// Maps `x_{i,j}` to the matrix `w^{ij}/(w - w^2) x^i y^j` and verifies the
/// linear map carries the table product to the matrix product and the
/// table norm to `sr`.
pub fn model_isomorphism_char_not3(field: &Field) -> Result<IsomorphismReport> {
    let model = Sl3Model::new(field)?;
    let table = build_split_okubo(field);
    let form = table.form().unwrap();
    let labels = table.labels();
    let mut report = IsomorphismReport {
        model: "sl3".into(),
        field: field.to_string(),
        products: CheckCount::default(),
        polar: CheckCount::default(),
        norms: CheckCount::default(),
        failures: Vec::new(),
    };
    for a in 0..8 {
        for b in 0..8 {
            let via_table = model.matrix_of(&table.basis_product(a, b));
            let direct = model.product(model.basis_matrix(a), model.basis_matrix(b));
            let ok = via_table == direct;
            report.products.record(ok);
            if !ok {
                report.failures.push(format!("product {} * {}", labels[a], labels[b]));
            }
            let ok = *form.polar().get(a, b) == sr_polar(model.basis_matrix(a), model.basis_matrix(b));
            report.polar.record(ok);
            if !ok {
                report.failures.push(format!("polar ({}, {})", labels[a], labels[b]));
            }
        }
        let ok = form.values()[a] == sr_form(model.basis_matrix(a));
        report.norms.record(ok);
        if !ok {
            report.failures.push(format!("norm {}", labels[a]));
        }
    }
    Ok(report)
}

/// Element of `F[x,y]/(x^3 - 1, y^3 - 1)`; coefficient of `x^i y^j` at `3i + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedPoly {
    pub coeffs: Vec<Scalar>,
}

/// The truncated polynomial algebra in characteristic 3 with its nodal product.
#[derive(Clone, Debug)]
pub struct NodalAlgebra {
    field: Field,
}

impl NodalAlgebra {
    pub fn new(field: &Field) -> Result<Self> {
        require_char3(field)?;
        Ok(NodalAlgebra { field: field.clone() })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn zero(&self) -> TruncatedPoly {
        TruncatedPoly {
            coeffs: vec![self.field.zero(); 9],
        }
    }

    pub fn monomial(&self, i: i64, j: i64) -> TruncatedPoly {
        let mut p = self.zero();
        p.coeffs[(i.rem_euclid(3) * 3 + j.rem_euclid(3)) as usize] = self.field.one();
        p
    }

    pub fn one(&self) -> TruncatedPoly {
        self.monomial(0, 0)
    }

    pub fn add(&self, f: &TruncatedPoly, g: &TruncatedPoly) -> TruncatedPoly {
        TruncatedPoly {
            coeffs: linalg::vadd(&self.field, &f.coeffs, &g.coeffs),
        }
    }

    pub fn sub(&self, f: &TruncatedPoly, g: &TruncatedPoly) -> TruncatedPoly {
        TruncatedPoly {
            coeffs: linalg::vsub(&self.field, &f.coeffs, &g.coeffs),
        }
    }

    pub fn scale(&self, c: &Scalar, f: &TruncatedPoly) -> TruncatedPoly {
        TruncatedPoly {
            coeffs: linalg::vscale(&self.field, c, &f.coeffs),
        }
    }

    fn bilinear(
        &self,
        f: &TruncatedPoly,
        g: &TruncatedPoly,
        rule: impl Fn(usize, usize, usize, usize) -> i64,
    ) -> TruncatedPoly {
        let fl = &self.field;
        let mut out = self.zero();
        for a in 0..9 {
            if fl.is_zero(&f.coeffs[a]) {
                continue;
            }
            for b in 0..9 {
                if fl.is_zero(&g.coeffs[b]) {
                    continue;
                }
                let (i, j, k, l) = (a / 3, a % 3, b / 3, b % 3);
                let c = fl.mul(&fl.mul(&f.coeffs[a], &g.coeffs[b]), &fl.from_i64(rule(i, j, k, l)));
                let idx = ((i + k) % 3) * 3 + (j + l) % 3;
                out.coeffs[idx] = fl.add(&out.coeffs[idx], &c);
            }
        }
        out
    }

    /// Commutative truncated product.
    pub fn product(&self, f: &TruncatedPoly, g: &TruncatedPoly) -> TruncatedPoly {
        self.bilinear(f, g, |_, _, _, _| 1)
    }

    /// `x^i y^j ◇ x^k y^l = (1 - (il - jk)) x^{i+k} y^{j+l}`, extended bilinearly.
    pub fn diamond(&self, f: &TruncatedPoly, g: &TruncatedPoly) -> TruncatedPoly {
        self.bilinear(f, g, |i, j, k, l| 1 - (i as i64 * l as i64 - j as i64 * k as i64))
    }

    fn partial(&self, f: &TruncatedPoly, wrt_x: bool) -> TruncatedPoly {
        let fl = &self.field;
        let mut out = self.zero();
        for a in 0..9 {
            let (i, j) = (a / 3, a % 3);
            let e = if wrt_x { i } else { j };
            if e == 0 {
                continue;
            }
            let idx = if wrt_x { (i - 1) * 3 + j } else { i * 3 + j - 1 };
            out.coeffs[idx] = fl.mul(&f.coeffs[a], &fl.from_i64(e as i64));
        }
        out
    }

    pub fn partial_x(&self, f: &TruncatedPoly) -> TruncatedPoly {
        self.partial(f, true)
    }

    pub fn partial_y(&self, f: &TruncatedPoly) -> TruncatedPoly {
        self.partial(f, false)
    }

    /// `fg - (f_x g_y - g_x f_y) xy`.
    pub fn diamond_via_partials(&self, f: &TruncatedPoly, g: &TruncatedPoly) -> TruncatedPoly {
        let jac = self.sub(
            &self.product(&self.partial_x(f), &self.partial_y(g)),
            &self.product(&self.partial_x(g), &self.partial_y(f)),
        );
        self.sub(&self.product(f, g), &self.product(&jac, &self.monomial(1, 1)))
    }

    /// Monomial for table position `k` (`x_{i,j} <-> x^i y^j`).
    pub fn basis_monomial(&self, k: usize) -> TruncatedPoly {
        let (i, j) = BASIS_INDICES[k];
        self.monomial(i as i64, j as i64)
    }

    /// Embeds an algebra vector into the trace-zero part.
    pub fn embed(&self, v: &[Scalar]) -> TruncatedPoly {
        (0..8).fold(self.zero(), |acc, k| {
            self.add(&acc, &self.scale(&v[k], &self.basis_monomial(k)))
        })
    }

    /// Splits a polynomial into its constant term and its trace-zero part
    /// expressed in table coordinates.
    pub fn split(&self, p: &TruncatedPoly) -> (Scalar, Vector) {
        let coords = (0..8)
            .map(|k| {
                let (i, j) = BASIS_INDICES[k];
                p.coeffs[(i.rem_euclid(3) * 3 + j.rem_euclid(3)) as usize].clone()
            })
            .collect();
        (p.coeffs[0].clone(), coords)
    }
}

/// The characteristic-3 model: restrict ◇ to the trace-zero monomials and
/// split `u ◇ v = n(u,v) 1 + u * v`. Returns the algebra and its comparison
/// against the multiplication table.
pub fn build_char3_model(field: &Field) -> Result<(StructureConstantAlgebra, IsomorphismReport)> {
    let nodal = NodalAlgebra::new(field)?;
    let f = field;
    let mut tensor = Vec::with_capacity(512);
    let mut polar = Matrix::zeros(f, 8, 8);
    for a in 0..8 {
        for b in 0..8 {
            let (scalar, rest) = nodal.split(&nodal.diamond(&nodal.basis_monomial(a), &nodal.basis_monomial(b)));
            polar.set(a, b, scalar);
            tensor.extend(rest);
        }
    }
    let half = f.inv(&f.from_i64(2))?;
    let values = (0..8).map(|i| f.mul(polar.get(i, i), &half)).collect();
    let alg = StructureConstantAlgebra::new(f, basis_labels(), tensor)?
        .with_form(QuadraticForm::new(values, polar)?)?
        .with_grading(basis_degrees())?;

    let table = build_split_okubo(f);
    let (tf, af) = (table.form().unwrap(), alg.form().unwrap());
    let mut report = IsomorphismReport {
        model: "truncated-polynomial".into(),
        field: f.to_string(),
        products: CheckCount::default(),
        polar: CheckCount::default(),
        norms: CheckCount::default(),
        failures: Vec::new(),
    };
    let labels = table.labels();
    for a in 0..8 {
        for b in 0..8 {
            let ok = alg.basis_product(a, b) == table.basis_product(a, b);
            report.products.record(ok);
            if !ok {
                report.failures.push(format!("product {} * {}", labels[a], labels[b]));
            }
            let ok = af.polar().get(a, b) == tf.polar().get(a, b);
            report.polar.record(ok);
            if !ok {
                report.failures.push(format!("polar ({}, {})", labels[a], labels[b]));
            }
        }
        let ok = af.values()[a] == tf.values()[a];
        report.norms.record(ok);
        if !ok {
            report.failures.push(format!("norm {}", labels[a]));
        }
    }
    Ok((alg, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf(q: u64) -> Field {
        Field::finite(q).unwrap()
    }

    #[test]
    fn table_matches_determinant_rule() {
        // x_{i,j} * x_{k,l} = c x_{i+k,j+l} with c = 1, 0, -1 for il - jk = 0, 1, 2 mod 3
        for a in 0..8 {
            for b in 0..8 {
                let ((i, j), (k, l)) = (BASIS_INDICES[a], BASIS_INDICES[b]);
                let delta = (i as i64 * l as i64 - j as i64 * k as i64).rem_euclid(3);
                let expected = match index_of((i + k) as i64, (j + l) as i64) {
                    None => (0, 0),
                    Some(t) => match delta {
                        0 => (1, t),
                        1 => (0, 0),
                        _ => (-1, t),
                    },
                };
                assert_eq!(TABLE[a][b], expected, "{a} * {b}");
            }
        }
    }

    #[test]
    fn table_examples() {
        let a = build_split_okubo(&gf(3));
        assert_eq!(a.mul(&a.basis_vector(X01), &a.basis_vector(X01)), a.basis_vector(X0M1));
    }

    #[test]
    fn gf2_polar_form_nondegenerate() {
        let a = build_split_okubo(&gf(2));
        assert_eq!(a.form().unwrap().polar().rank(), 8);
    }

    #[test]
    fn sr_examples() {
        let f = Field::rationals();
        assert_eq!(sr_form(&Matrix::identity(&f, 3)), f.from_i64(3));
        let d = Matrix::from_i64(&f, &[vec![1, 0, 0], vec![0, -1, 0], vec![0, 0, 0]]);
        assert_eq!(sr_form(&d), f.from_i64(-1));
        let f7 = gf(7);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let a = Matrix::from_fn(&f7, 3, 3, |_, _| f7.random(&mut rng));
            let b = Matrix::from_fn(&f7, 3, 3, |_, _| f7.random(&mut rng));
            let expanded = f7.sub(&f7.sub(&sr_form(&a.add(&b)), &sr_form(&a)), &sr_form(&b));
            assert_eq!(sr_polar(&a, &b), expanded);
        }
    }

    #[test]
    fn pauli_relations() {
        let m = Sl3Model::new(&gf(7)).unwrap();
        assert_eq!(m.omega(), &Scalar::Fin(2));
        let (x, y) = m.pauli();
        let f = m.field();
        assert!(x.pow(3).is_identity() && y.pow(3).is_identity());
        assert_eq!(x.mul(y), y.mul(x).scale(m.omega()));
        for k in 0..8 {
            assert_eq!(m.basis_matrix(k).trace(), f.zero());
        }
    }

    #[test]
    fn sl3_model_identities() {
        let m = Sl3Model::new(&gf(7)).unwrap();
        let c = m.check_flexible_norm_identity();
        assert_eq!(
            c,
            CheckCount {
                checked: 64,
                matched: 64
            }
        );
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let f = m.field().clone();
        for _ in 0..50 {
            let x = m.matrix_of(&(0..8).map(|_| f.random(&mut rng)).collect::<Vec<_>>());
            let y = m.matrix_of(&(0..8).map(|_| f.random(&mut rng)).collect::<Vec<_>>());
            assert_eq!(m.product(&x, &y).trace(), f.zero());
        }
        let qw = Field::rationals_omega();
        let alg = build_sl3_model(&qw).unwrap();
        for _ in 0..100 {
            let (x, y) = (alg.random_element(&mut rng), alg.random_element(&mut rng));
            assert_eq!(
                alg.norm(&alg.mul(&x, &y)).unwrap(),
                qw.mul(&alg.norm(&x).unwrap(), &alg.norm(&y).unwrap())
            );
        }
        assert!(Sl3Model::new(&qw).unwrap().check_minus_isomorphism().passed());
    }

    #[test]
    fn sl3_model_preconditions() {
        assert!(matches!(Sl3Model::new(&gf(3)), Err(Error::BadCharacteristic { .. })));
        assert!(matches!(Sl3Model::new(&gf(9)), Err(Error::BadCharacteristic { .. })));
        assert!(matches!(Sl3Model::new(&gf(5)), Err(Error::NoCubeRoot(_))));
        assert!(matches!(Sl3Model::new(&Field::rationals()), Err(Error::NoCubeRoot(_))));
        assert!(Sl3Model::new(&gf(4)).is_ok());
    }

    #[test]
    fn isomorphism_reports() {
        for f in [gf(7), Field::rationals_omega(), gf(4), gf(13)] {
            let r = model_isomorphism_char_not3(&f).unwrap();
            assert!(r.passed(), "{f}: {:?}", r.failures);
            assert_eq!(r.products.checked, 64);
            assert_eq!(build_sl3_model(&f).unwrap(), build_split_okubo(&f));
        }
        let m = Sl3Model::new(&Field::rationals_omega()).unwrap();
        assert_eq!(
            sr_polar(m.basis_matrix(X10), m.basis_matrix(XM10)),
            Field::rationals_omega().one()
        );
    }

    #[test]
    fn diamond_examples() {
        let n = NodalAlgebra::new(&gf(3)).unwrap();
        let (x, y) = (n.monomial(1, 0), n.monomial(0, 1));
        assert_eq!(n.diamond(&x, &y), n.zero());
        assert_eq!(n.diamond(&x, &x), n.monomial(2, 0));
        for a in 0..9 {
            let m = n.monomial(a / 3, a % 3);
            assert_eq!(n.diamond(&n.one(), &m), m);
        }
        assert_eq!(n.diamond_via_partials(&n.one(), &n.one()), n.one());
        assert!(matches!(
            NodalAlgebra::new(&gf(7)),
            Err(Error::BadCharacteristic { .. })
        ));
    }

    #[test]
    fn partials_formula_agrees_on_monomials() {
        let n = NodalAlgebra::new(&gf(3)).unwrap();
        let f = n.field().clone();
        let two = f.from_i64(2);
        for a in 0..9 {
            for b in 0..9 {
                let (p, q) = (n.monomial(a / 3, a % 3), n.monomial(b / 3, b % 3));
                assert_eq!(n.diamond(&p, &q), n.diamond_via_partials(&p, &q));
                // fg = (f◇g + g◇f) / 2
                let sym = n.add(&n.diamond(&p, &q), &n.diamond(&q, &p));
                assert_eq!(sym, n.scale(&two, &n.product(&p, &q)));
            }
        }
    }

    #[test]
    fn char3_model_matches_table() {
        for q in [3, 9] {
            let (alg, report) = build_char3_model(&gf(q)).unwrap();
            assert!(report.passed(), "{:?}", report.failures);
            assert_eq!(alg, build_split_okubo(&gf(q)));
        }
        assert!(build_char3_model(&gf(7)).is_err());
    }

    #[test]
    fn diamond_decomposition() {
        let f = gf(3);
        let n = NodalAlgebra::new(&f).unwrap();
        let table = build_split_okubo(&f);
        for a in 0..8 {
            for b in 0..8 {
                let d = n.diamond(&n.basis_monomial(a), &n.basis_monomial(b));
                let diff = n.sub(&d, &n.embed(&table.basis_product(a, b)));
                let polar = table
                    .norm_polar(&table.basis_vector(a), &table.basis_vector(b))
                    .unwrap();
                assert_eq!(diff, n.scale(&polar, &n.one()));
            }
        }
    }

    #[test]
    fn nilpotent_radical_top_power() {
        let f = gf(3);
        let n = NodalAlgebra::new(&f).unwrap();
        let xm1 = n.sub(&n.monomial(1, 0), &n.one());
        let ym1 = n.sub(&n.monomial(0, 1), &n.one());
        let sq = |p: &TruncatedPoly| n.product(p, p);
        let lhs = n.product(&sq(&xm1), &sq(&ym1));
        let e = distinguished_idempotent(&build_split_okubo(&f)).unwrap();
        assert_eq!(lhs, n.add(&n.one(), &n.embed(&e)));
    }

    #[test]
    fn distinguished_idempotent_behaviour() {
        let a = build_split_okubo(&gf(3));
        let e = distinguished_idempotent(&a).unwrap();
        assert_eq!(a.mul(&e, &e), e);
        assert_eq!(a.norm(&e).unwrap(), a.field().one());
        let a5 = build_split_okubo(&gf(5));
        assert!(distinguished_idempotent(&a5).is_err());
        let ones = vec![a5.field().one(); 8];
        assert_ne!(a5.mul(&ones, &ones), ones);
    }

    #[test]
    fn integral_structure_constants() {
        for f in [gf(7), Field::rationals_omega()] {
            let alg = build_sl3_model(&f).unwrap();
            let allowed = [f.zero(), f.one(), f.neg(&f.one())];
            assert!(alg.tensor().iter().all(|c| allowed.contains(c)));
        }
        let (alg, _) = build_char3_model(&gf(9)).unwrap();
        let f = gf(9);
        let allowed = [f.zero(), f.one(), f.neg(&f.one())];
        assert!(alg.tensor().iter().all(|c| allowed.contains(c)));
    }
}
