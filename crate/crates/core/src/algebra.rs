//! Finite-dimensional algebras given by structure constants, with an optional
//! quadratic form and an optional Z3 x Z3 grading.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::{Field, Scalar};
use crate::linalg::{self, Matrix, Subspace};

pub type Vector = Vec<Scalar>;

/// Grading degree in Z3 x Z3, components stored in `0..3`.
pub type Degree = (u8, u8);

pub fn degree_add(a: Degree, b: Degree) -> Degree {
    ((a.0 + b.0) % 3, (a.1 + b.1) % 3)
}

/// Displays a `0..3` component as `-1, 0, 1`.
pub fn signed_component(c: u8) -> i8 {
    if c == 2 {
        -1
    } else {
        c as i8
    }
}

fn unsigned_component(c: i8) -> u8 {
    c.rem_euclid(3) as u8
}

/// A quadratic form stored as its values on the basis plus its polar
/// bilinear form, so characteristic 2 is representable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    values: Vec<Scalar>,
    polar: Matrix,
}

impl QuadraticForm {
    pub fn new(values: Vec<Scalar>, polar: Matrix) -> Result<Self> {
        let f = polar.field().clone();
        let n = values.len();
        if polar.rows() != n || polar.cols() != n {
            return Err(Error::BadForm(format!(
                "polar matrix is {}x{}, expected {n}x{n}",
                polar.rows(),
                polar.cols()
            )));
        }
        for i in 0..n {
            f.ensure(&values[i])?;
            if *polar.get(i, i) != f.add(&values[i], &values[i]) {
                return Err(Error::BadForm(format!("B[{i}][{i}] != 2 q(b_{i})")));
            }
            for j in 0..i {
                if polar.get(i, j) != polar.get(j, i) {
                    return Err(Error::BadForm(format!("polar matrix not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(QuadraticForm { values, polar })
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn polar(&self) -> &Matrix {
        &self.polar
    }

    /// `q(sum a_i b_i) = sum a_i^2 q(b_i) + sum_{i<j} a_i a_j B_ij`.
    pub fn eval(&self, x: &[Scalar]) -> Scalar {
        let f = self.polar.field();
        let mut acc = f.zero();
        for i in 0..x.len() {
            if f.is_zero(&x[i]) {
                continue;
            }
            acc = f.add(&acc, &f.mul(&f.mul(&x[i], &x[i]), &self.values[i]));
            for j in i + 1..x.len() {
                if !f.is_zero(&x[j]) {
                    acc = f.add(&acc, &f.mul(&f.mul(&x[i], &x[j]), self.polar.get(i, j)));
                }
            }
        }
        acc
    }

    pub fn polar_eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        linalg::dot(self.polar.field(), x, &self.polar.mul_vec(y))
    }
}

/// `b_i * b_j = sum_k c[i][j][k] b_k`.
#[derive(Clone, Debug)]
pub struct StructureConstantAlgebra {
    field: Field,
    dim: usize,
    labels: Vec<String>,
    tensor: Vec<Scalar>,
    /// nonzero `(k, c)` per basis pair, row-major in `(i, j)`
    sparse: Vec<Vec<(usize, Scalar)>>,
    form: Option<QuadraticForm>,
    grading: Option<Vec<Degree>>,
}

impl PartialEq for StructureConstantAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.labels == other.labels
            && self.tensor == other.tensor
            && self.form == other.form
            && self.grading == other.grading
    }
}

impl StructureConstantAlgebra {
    pub fn new(field: &Field, labels: Vec<String>, tensor: Vec<Scalar>) -> Result<Self> {
        let dim = labels.len();
        if tensor.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                got: tensor.len(),
            });
        }
        for c in &tensor {
            field.ensure(c)?;
        }
        let sparse = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter(|&k| !field.is_zero(&tensor[ij * dim + k]))
                    .map(|k| (k, tensor[ij * dim + k].clone()))
                    .collect()
            })
            .collect();
        Ok(StructureConstantAlgebra {
            field: field.clone(),
            dim,
            labels,
            tensor,
            sparse,
            form: None,
            grading: None,
        })
    }

    /// Builds the tensor from a closure giving `b_i * b_j` as a coordinate vector.
    pub fn from_products(
        field: &Field,
        labels: Vec<String>,
        mut product: impl FnMut(usize, usize) -> Vector,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut tensor = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                if v.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        got: v.len(),
                    });
                }
                tensor.extend(v);
            }
        }
        StructureConstantAlgebra::new(field, labels, tensor)
    }

    pub fn with_form(mut self, form: QuadraticForm) -> Result<Self> {
        if form.values.len() != self.dim || *form.polar.field() != self.field {
            return Err(Error::BadForm("form does not match algebra".into()));
        }
        self.form = Some(form);
        Ok(self)
    }

    pub fn with_grading(mut self, grading: Vec<Degree>) -> Result<Self> {
        if grading.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: grading.len(),
            });
        }
        self.grading = Some(grading.into_iter().map(|(a, b)| (a % 3, b % 3)).collect());
        Ok(self)
    }

    pub fn without_grading(mut self) -> Self {
        self.grading = None;
        self
    }

    /// Copy with one structure constant replaced.
    pub fn with_coefficient(&self, i: usize, j: usize, k: usize, value: Scalar) -> Self {
        let mut tensor = self.tensor.clone();
        tensor[(i * self.dim + j) * self.dim + k] = value;
        let mut out = StructureConstantAlgebra::new(&self.field, self.labels.clone(), tensor).expect("same shape");
        out.form = self.form.clone();
        out.grading = self.grading.clone();
        out
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn form(&self) -> Option<&QuadraticForm> {
        self.form.as_ref()
    }

    pub fn grading(&self) -> Option<&[Degree]> {
        self.grading.as_deref()
    }

    pub fn tensor(&self) -> &[Scalar] {
        &self.tensor
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.tensor[(i * self.dim + j) * self.dim + k]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        linalg::unit_vec(&self.field, self.dim, i)
    }

    pub fn zero(&self) -> Vector {
        linalg::zero_vec(&self.field, self.dim)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        self.tensor[(i * self.dim + j) * self.dim..(i * self.dim + j + 1) * self.dim].to_vec()
    }

    /// Bilinear product; lengths are assumed to match (see [`Self::multiply`]).
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let f = &self.field;
        let mut out = self.zero();
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let entries = &self.sparse[i * self.dim + j];
                if entries.is_empty() {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, ck) in entries {
                    out[*k] = f.add(&out[*k], &f.mul(&c, ck));
                }
            }
        }
        out
    }

    pub fn check_element(&self, x: &[Scalar]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::AlgebraMismatch(format!(
                "vector of length {} in a {}-dimensional algebra",
                x.len(),
                self.dim
            )));
        }
        for c in x {
            self.field
                .ensure(c)
                .map_err(|e| Error::AlgebraMismatch(e.to_string()))?;
        }
        Ok(())
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.mul(x, y))
    }

    /// Matrix of `y -> x * y` (column `j` is `x * b_j`).
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    /// Matrix of `y -> y * x`.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    pub fn norm(&self, x: &[Scalar]) -> Result<Scalar> {
        Ok(self.form.as_ref().ok_or(Error::NoForm)?.eval(x))
    }

    pub fn norm_polar(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        Ok(self.form.as_ref().ok_or(Error::NoForm)?.polar_eval(x, y))
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Vector {
        (0..self.dim).map(|_| self.field.random(rng)).collect()
    }

    /// Human-readable element, e.g. `x_{1,0} + 2*x_{0,1}`.
    pub fn format_element(&self, x: &[Scalar]) -> String {
        let terms: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(i, c)| {
                if self.field.is_one(c) {
                    self.labels[i].clone()
                } else {
                    format!("({})*{}", self.field.format(c), self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// `{u : u * v = v * u for all v}`.
    pub fn commutative_center(&self) -> Subspace {
        let f = &self.field;
        let n = self.dim;
        let m = Matrix::from_fn(f, n * n, n, |row, i| {
            let (j, k) = (row / n, row % n);
            f.sub(self.coefficient(i, j, k), self.coefficient(j, i, k))
        });
        m.nullspace()
    }

    /// True iff every nonzero structure constant respects degree addition.
    pub fn check_grading(&self) -> Result<bool> {
        let g = self.grading.as_ref().ok_or(Error::NoGrading)?;
        let n = self.dim;
        Ok((0..n).all(|i| {
            (0..n).all(|j| {
                self.sparse[i * n + j]
                    .iter()
                    .all(|(k, _)| g[*k] == degree_add(g[i], g[j]))
            })
        }))
    }

    /// Two-sided unit, if one exists.
    pub fn find_unit(&self) -> Option<Vector> {
        let f = &self.field;
        let n = self.dim;
        // rows: (side, j, k); u * b_j = b_j and b_j * u = b_j
        let m = Matrix::from_fn(f, 2 * n * n, n, |row, i| {
            let (side, j, k) = (row / (n * n), (row / n) % n, row % n);
            if side == 0 {
                self.coefficient(i, j, k).clone()
            } else {
                self.coefficient(j, i, k).clone()
            }
        });
        let rhs: Vec<Scalar> = (0..2 * n * n)
            .map(|row| if (row / n) % n == row % n { f.one() } else { f.zero() })
            .collect();
        m.solve(&rhs)
    }

    /// Verifies the symmetric composition identities exhaustively on basis
    /// pairs and triples, then on `trials` random elements.
    pub fn check_symmetric_composition<R: Rng + ?Sized>(
        &self,
        trials: usize,
        rng: &mut R,
    ) -> Result<CompositionReport> {
        let form = self.form.as_ref().ok_or(Error::NoForm)?;
        let f = &self.field;
        let n = self.dim;
        let basis: Vec<Vector> = (0..n).map(|i| self.basis_vector(i)).collect();
        let mut checks = vec![
            IdentityCheck::new("n(x*y) = n(x)n(y)"),
            IdentityCheck::new("n(x*y, z) = n(x, y*z)"),
            IdentityCheck::new("(x*y)*x = n(x)y"),
            IdentityCheck::new("x*(y*x) = n(x)y"),
        ];
        let describe_basis = |idx: &[usize]| {
            idx.iter()
                .map(|&i| self.labels[i].clone())
                .collect::<Vec<_>>()
                .join(", ")
        };

        let pair = |checks: &mut Vec<IdentityCheck>, x: &[Scalar], y: &[Scalar], what: &dyn Fn() -> String| {
            let xy = self.mul(x, y);
            let nx = form.eval(x);
            checks[0].record(form.eval(&xy) == f.mul(&nx, &form.eval(y)), what);
            let nxy = linalg::vscale(f, &nx, y);
            checks[2].record(self.mul(&xy, x) == nxy, what);
            checks[3].record(self.mul(x, &self.mul(y, x)) == nxy, what);
        };
        for i in 0..n {
            for j in 0..n {
                pair(&mut checks, &basis[i], &basis[j], &|| describe_basis(&[i, j]));
            }
        }
        let products: Vec<Vec<Vector>> = (0..n)
            .map(|i| (0..n).map(|j| self.basis_product(i, j)).collect())
            .collect();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ok = form.polar_eval(&products[i][j], &basis[k]) == form.polar_eval(&basis[i], &products[j][k]);
                    checks[1].record(ok, &|| describe_basis(&[i, j, k]));
                }
            }
        }
        for t in 0..trials {
            let x = self.random_element(rng);
            let y = self.random_element(rng);
            let z = self.random_element(rng);
            let what = || {
                format!(
                    "random trial {t}: x = {}, y = {}, z = {}",
                    self.format_element(&x),
                    self.format_element(&y),
                    self.format_element(&z)
                )
            };
            pair(&mut checks, &x, &y, &what);
            let ok = form.polar_eval(&self.mul(&x, &y), &z) == form.polar_eval(&x, &self.mul(&y, &z));
            checks[1].record(ok, &what);
        }
        Ok(CompositionReport {
            field: self.field.to_string(),
            trials,
            checks,
        })
    }

    /// Serializable form using canonical scalar strings.
    pub fn to_file(&self) -> AlgebraFile {
        let f = &self.field;
        let n = self.dim;
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in &self.sparse[i * n + j] {
                    entries.push((i, j, *k, f.format(c)));
                }
            }
        }
        AlgebraFile {
            field: f.to_string(),
            dim: n,
            labels: self.labels.clone(),
            entries,
            form: self.form.as_ref().map(|q| FormFile {
                values: q.values.iter().map(|v| f.format(v)).collect(),
                polar: q
                    .polar
                    .to_rows()
                    .iter()
                    .map(|r| r.iter().map(|v| f.format(v)).collect())
                    .collect(),
            }),
            grading: self.grading.as_ref().map(|g| {
                g.iter()
                    .map(|&(a, b)| (signed_component(a), signed_component(b)))
                    .collect()
            }),
        }
    }

    pub fn from_file(file: &AlgebraFile) -> Result<Self> {
        let field = Field::parse(&file.field)?;
        let n = file.dim;
        if file.labels.len() != n {
            return Err(Error::BadAlgebraData(format!(
                "{} labels for dimension {n}",
                file.labels.len()
            )));
        }
        let mut tensor = vec![field.zero(); n * n * n];
        for (i, j, k, c) in &file.entries {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::BadAlgebraData(format!(
                    "entry index ({i}, {j}, {k}) out of range"
                )));
            }
            tensor[(i * n + j) * n + k] = field.parse_scalar(c)?;
        }
        let mut alg = StructureConstantAlgebra::new(&field, file.labels.clone(), tensor)?;
        if let Some(form) = &file.form {
            let values = form
                .values
                .iter()
                .map(|v| field.parse_scalar(v))
                .collect::<Result<Vec<_>>>()?;
            let rows = form
                .polar
                .iter()
                .map(|r| r.iter().map(|v| field.parse_scalar(v)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            alg = alg.with_form(QuadraticForm::new(values, Matrix::from_rows(&field, rows)?)?)?;
        }
        if let Some(g) = &file.grading {
            alg = alg.with_grading(
                g.iter()
                    .map(|&(a, b)| (unsigned_component(a), unsigned_component(b)))
                    .collect(),
            )?;
        }
        Ok(alg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::BadAlgebraData(e.to_string()))?;
        StructureConstantAlgebra::from_file(&file)
    }

    /// Multiplication table as CSV: header row of labels, one row per left
    /// factor, cells are formatted products.
    pub fn multiplication_table_csv(&self) -> String {
        let mut out = String::from("*");
        for l in &self.labels {
            out.push(',');
            out.push_str(l);
        }
        out.push('\n');
        for i in 0..self.dim {
            out.push_str(&self.labels[i]);
            for j in 0..self.dim {
                out.push(',');
                out.push_str(&self.format_element(&self.basis_product(i, j)).replace(' ', ""));
            }
            out.push('\n');
        }
        out
    }
}

/// On-disk structure-constant format. Only nonzero tensor entries are listed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub field: String,
    pub dim: usize,
    pub labels: Vec<String>,
    pub entries: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<FormFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<(i8, i8)>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FormFile {
    pub values: Vec<String>,
    pub polar: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub cases: usize,
    pub failures: usize,
    pub witness: Option<String>,
}

impl IdentityCheck {
    fn new(identity: &str) -> Self {
        IdentityCheck {
            identity: identity.into(),
            cases: 0,
            failures: 0,
            witness: None,
        }
    }

    fn record(&mut self, ok: bool, what: &dyn Fn() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompositionReport {
    pub field: String,
    pub trials: usize,
    pub checks: Vec<IdentityCheck>,
}

impl CompositionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn check(&self, identity_prefix: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.identity.starts_with(identity_prefix))
    }
}

impl fmt::Display for CompositionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(
                f,
                "{:<24} {:>6} cases  {}",
                c.identity,
                c.cases,
                if c.passed() { "ok" } else { "FAIL" }
            )?;
            if let Some(w) = &c.witness {
                write!(f, "  witness: {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
