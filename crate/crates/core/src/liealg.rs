//! Derivation algebras and Lie-algebra analysis: inner derivations, derived
//! subalgebras, Killing forms, centers, an irreducibility test for the
//! adjoint module, gradings on derivations and conjugation automorphisms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{degree_add, signed_component, Degree, StructureConstantAlgebra, Vector};
use crate::error::{Error, Result};
use crate::fields::{Field, Scalar};
use crate::linalg::{self, Matrix, Subspace};
use crate::okubo::{self, CheckCount, Sl3Model, BASIS_INDICES};
use crate::poly::{self, characteristic_polynomial};

/// A linear endomorphism of an algebra; column `i` is the image of `b_i`.
pub type LinearMap = Matrix;

/// Row-major flattening, so entry `D[m][i]` sits at `m * n + i`.
pub fn flatten(map: &LinearMap) -> Vector {
    map.as_flat().to_vec()
}

pub fn unflatten(field: &Field, n: usize, v: &[Scalar]) -> LinearMap {
    Matrix::from_flat(field, n, n, v.to_vec())
}

/// The Leibniz system `D(b_i * b_j) = D(b_i) * b_j + b_i * D(b_j)` as an
/// `n^3 x n^2` matrix over the flattened unknowns.
fn leibniz_system(alg: &StructureConstantAlgebra) -> Matrix {
    let f = alg.field();
    let n = alg.dim();
    let mut m = Matrix::zeros(f, n * n * n, n * n);
    let bump = |m: &mut Matrix, row: usize, col: usize, c: &Scalar, negate: bool| {
        if f.is_zero(c) {
            return;
        }
        let c = if negate { f.neg(c) } else { c.clone() };
        let v = f.add(m.get(row, col), &c);
        m.set(row, col, v);
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let row = (i * n + j) * n + k;
                for l in 0..n {
                    bump(&mut m, row, k * n + l, alg.coefficient(i, j, l), false);
                }
                for mm in 0..n {
                    bump(&mut m, row, mm * n + i, alg.coefficient(mm, j, k), true);
                    bump(&mut m, row, mm * n + j, alg.coefficient(i, mm, k), true);
                }
            }
        }
    }
    m
}

/// All derivations, as a subspace of flattened `n x n` maps.
pub fn derivations(alg: &StructureConstantAlgebra) -> Subspace {
    leibniz_system(alg).nullspace()
}

/// Checks the Leibniz rule on all basis pairs.
pub fn is_derivation(alg: &StructureConstantAlgebra, d: &LinearMap) -> bool {
    let n = alg.dim();
    let images: Vec<Vector> = (0..n).map(|i| d.column(i)).collect();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let bi = alg.basis_vector(i);
            let bj = alg.basis_vector(j);
            let lhs = d.mul_vec(&alg.mul(&bi, &bj));
            let rhs = linalg::vadd(alg.field(), &alg.mul(&images[i], &bj), &alg.mul(&bi, &images[j]));
            lhs == rhs
        })
    })
}

/// `v -> u * v - v * u`.
pub fn inner_derivation(alg: &StructureConstantAlgebra, u: &[Scalar]) -> LinearMap {
    alg.left_mul_matrix(u).sub(&alg.right_mul_matrix(u))
}

/// Span of the inner derivations of the basis elements. Each is checked
/// against the Leibniz rule; a failure is reported as `NotClosed`.
pub fn inner_derivation_span(alg: &StructureConstantAlgebra) -> Result<Subspace> {
    let n = alg.dim();
    let mut maps = Vec::with_capacity(n);
    for i in 0..n {
        let ad = inner_derivation(alg, &alg.basis_vector(i));
        if !is_derivation(alg, &ad) {
            return Err(Error::NotClosed(format!("ad {} is not a derivation", alg.labels()[i])));
        }
        maps.push(flatten(&ad));
    }
    Ok(Subspace::span(alg.field(), n * n, &maps))
}

/// A Lie algebra given by structure constants `[b_i, b_j] = sum_k c_ijk b_k`,
/// optionally realized by linear maps with the commutator bracket.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    field: Field,
    dim: usize,
    structure: Vec<Scalar>,
    maps: Option<Vec<LinearMap>>,
}

impl LieAlgebra {
    /// Validates antisymmetry and the Jacobi identity on all basis triples.
    pub fn from_structure(field: &Field, dim: usize, structure: Vec<Scalar>) -> Result<Self> {
        if structure.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                got: structure.len(),
            });
        }
        let l = LieAlgebra {
            field: field.clone(),
            dim,
            structure,
            maps: None,
        };
        l.validate()?;
        Ok(l)
    }

    pub fn abelian(field: &Field, dim: usize) -> Self {
        LieAlgebra {
            field: field.clone(),
            dim,
            structure: vec![field.zero(); dim * dim * dim],
            maps: None,
        }
    }

    fn validate(&self) -> Result<()> {
        let f = &self.field;
        let n = self.dim;
        for i in 0..n {
            for j in 0..=i {
                let sum = linalg::vadd(f, &self.basis_bracket(i, j), &self.basis_bracket(j, i));
                if !linalg::is_zero_vec(f, &sum) {
                    return Err(Error::NotLie(format!("[b_{i}, b_{j}] is not antisymmetric")));
                }
            }
        }
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad_basis(i)).collect();
        for i in 0..n {
            for j in 0..n {
                // ad [b_i, b_j] = [ad b_i, ad b_j]
                if self.ad(&self.basis_bracket(i, j)) != ads[i].commutator(&ads[j]) {
                    return Err(Error::NotLie(format!("Jacobi identity fails for (b_{i}, b_{j})")));
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure(&self) -> &[Scalar] {
        &self.structure
    }

    /// The realizing maps, when the algebra came from [`lie_close`].
    pub fn maps(&self) -> Option<&[LinearMap]> {
        self.maps.as_deref()
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        let n = self.dim;
        self.structure[(i * n + j) * n..(i * n + j + 1) * n].to_vec()
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let f = &self.field;
        let n = self.dim;
        let mut out = linalg::zero_vec(f, n);
        for i in (0..n).filter(|&i| !f.is_zero(&x[i])) {
            for j in (0..n).filter(|&j| !f.is_zero(&y[j])) {
                let c = f.mul(&x[i], &y[j]);
                for k in 0..n {
                    let s = &self.structure[(i * n + j) * n + k];
                    if !f.is_zero(s) {
                        out[k] = f.add(&out[k], &f.mul(&c, s));
                    }
                }
            }
        }
        out
    }

    /// Matrix of `y -> [x, y]`.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.bracket(x, &linalg::unit_vec(&self.field, self.dim, j)))
            .collect();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.basis_bracket(i, j)).collect();
        Matrix::from_columns(&self.field, self.dim, &cols)
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.iter().all(|c| self.field.is_zero(c))
    }

    /// The span of the realizing maps, flattened.
    pub fn map_span(&self) -> Option<Subspace> {
        let maps = self.maps.as_ref()?;
        let n = maps.first().map_or(0, |m| m.rows());
        let flat: Vec<Vector> = maps.iter().map(flatten).collect();
        Some(Subspace::span(&self.field, n * n, &flat))
    }

    /// The subalgebra spanned by `s` (coordinates in this algebra).
    pub fn subalgebra(&self, s: &Subspace) -> Result<LieAlgebra> {
        if s.ambient() != self.dim {
            return Err(Error::AmbientMismatch(s.ambient(), self.dim));
        }
        let basis = s.basis();
        let mut structure = Vec::with_capacity(basis.len().pow(3));
        for a in basis {
            for b in basis {
                let coords = s
                    .coordinates(&self.bracket(a, b))
                    .ok_or_else(|| Error::NotClosed("bracket leaves the subspace".into()))?;
                structure.extend(coords);
            }
        }
        let maps = self.maps.as_ref().map(|maps| {
            basis
                .iter()
                .map(|v| {
                    let n = maps[0].rows();
                    v.iter()
                        .zip(maps)
                        .fold(Matrix::zeros(&self.field, n, n), |acc, (c, m)| acc.add(&m.scale(c)))
                })
                .collect()
        });
        Ok(LieAlgebra {
            field: self.field.clone(),
            dim: basis.len(),
            structure,
            maps,
        })
    }
}

/// The Lie algebra on a commutator-closed subspace of flattened `n x n` maps.
pub fn lie_close(s: &Subspace) -> Result<LieAlgebra> {
    let f = s.field();
    let n = (s.ambient() as f64).sqrt().round() as usize;
    if n * n != s.ambient() {
        return Err(Error::BadAlgebraData(format!(
            "ambient {} is not a square",
            s.ambient()
        )));
    }
    let maps: Vec<LinearMap> = s.basis().iter().map(|v| unflatten(f, n, v)).collect();
    let mut structure = Vec::with_capacity(maps.len().pow(3));
    for a in &maps {
        for b in &maps {
            let coords = s
                .coordinates(&flatten(&a.commutator(b)))
                .ok_or_else(|| Error::NotClosed("commutator leaves the subspace".into()))?;
            structure.extend(coords);
        }
    }
    let mut l = LieAlgebra::from_structure(f, maps.len(), structure)?;
    l.maps = Some(maps);
    Ok(l)
}

/// `[L, L]`, the span of all brackets.
pub fn derived_subalgebra(l: &LieAlgebra) -> LieAlgebra {
    let n = l.dim();
    let brackets: Vec<Vector> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| l.basis_bracket(i, j))
        .collect();
    let span = Subspace::span(l.field(), n, &brackets);
    l.subalgebra(&span).expect("the derived algebra is an ideal")
}

/// `K[i][j] = tr(ad b_i ad b_j)`.
pub fn killing_form(l: &LieAlgebra) -> Matrix {
    let ads: Vec<Matrix> = (0..l.dim()).map(|i| l.ad_basis(i)).collect();
    Matrix::from_fn(l.field(), l.dim(), l.dim(), |i, j| ads[i].mul(&ads[j]).trace())
}

/// `{x : [x, L] = 0}`.
pub fn center_of(l: &LieAlgebra) -> Subspace {
    let n = l.dim();
    let s = l.structure();
    Matrix::from_fn(l.field(), n * n, n, |row, i| s[(i * n + row / n) * n + row % n].clone()).nullspace()
}

/// Closure of `span{v}` under the generators.
pub fn spin(gens: &[Matrix], v: &[Scalar]) -> Subspace {
    let f = gens[0].field();
    let n = v.len();
    let mut span = Subspace::span(f, n, &[v.to_vec()]);
    let mut frontier = vec![v.to_vec()];
    while let Some(w) = frontier.pop() {
        for g in gens {
            let gw = g.mul_vec(&w);
            if !span.contains(&gw) {
                span = span.sum(&Subspace::span(f, n, std::slice::from_ref(&gw))).unwrap();
                frontier.push(gw);
            }
        }
    }
    span
}

/// Searches for a proper nonzero invariant subspace of the module generated
/// by `gens` acting on column vectors. Returns `Ok(None)` once irreducibility
/// is certified by the Norton criterion and `Ok(Some(sub))` on finding one.
pub fn find_submodule(gens: &[Matrix], seed: u64, trials: usize) -> Result<Option<Subspace>> {
    let f = gens[0].field().clone();
    if !f.is_finite() {
        return Err(Error::InfiniteField(f.to_string()));
    }
    let n = gens[0].rows();
    if n <= 1 {
        return Ok(None);
    }
    let transposes: Vec<Matrix> = gens.iter().map(Matrix::transpose).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<Matrix> = gens.to_vec();
    for _ in 0..trials {
        let (a, b) = (rng.gen_range(0..pool.len()), rng.gen_range(0..pool.len()));
        let word = pool[a].mul(&pool[b]);
        pool.push(word);
        let theta = pool
            .iter()
            .fold(Matrix::zeros(&f, n, n), |acc, m| acc.add(&m.scale(&f.random(&mut rng))));
        let cp = characteristic_polynomial(&theta);
        let mut factors = poly::irreducible_factors(&f, &cp, 100_000);
        factors.sort_by_key(|p| p.degree());
        for p in factors {
            let pt = p.eval_matrix(&theta);
            let kernel = pt.nullspace();
            let v = &kernel.basis()[0];
            let sub = spin(gens, v);
            if sub.dim() < n {
                return Ok(Some(sub));
            }
            if kernel.dim() == p.degree() {
                let dual_kernel = pt.transpose().nullspace();
                let dual = spin(&transposes, &dual_kernel.basis()[0]);
                if dual.dim() < n {
                    // the annihilator of a dual submodule is a submodule
                    return Ok(Some(dual.annihilator()));
                }
                return Ok(None);
            }
        }
    }
    Err(Error::Inconclusive(trials))
}

/// Simplicity over a finite field: nonabelian with an irreducible adjoint module.
pub fn is_simple_finite(l: &LieAlgebra, seed: u64, trials: usize) -> Result<bool> {
    if !l.field().is_finite() {
        return Err(Error::InfiniteField(l.field().to_string()));
    }
    if l.dim() == 0 || l.is_abelian() {
        return Ok(false);
    }
    let ads: Vec<Matrix> = (0..l.dim()).map(|i| l.ad_basis(i)).collect();
    Ok(find_submodule(&ads, seed, trials)?.is_none())
}

/// The commutator algebra `u*v - v*u` of `alg`.
pub fn minus_algebra(alg: &StructureConstantAlgebra) -> Result<LieAlgebra> {
    let f = alg.field();
    let n = alg.dim();
    let mut structure = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                structure.push(f.sub(alg.coefficient(i, j, k), alg.coefficient(j, i, k)));
            }
        }
    }
    LieAlgebra::from_structure(f, n, structure)
}

/// Checks `[x^i y^j, x^k y^l] = (il - jk) x^{i+k} y^{j+l}` on all pairs of
/// nonconstant monomials, reading `x_{i,j}` as `x^i y^j`.
pub fn block_bracket_check(alg: &StructureConstantAlgebra) -> Result<CheckCount> {
    let f = alg.field();
    if f.characteristic() != 3 {
        return Err(Error::BadCharacteristic {
            required: "characteristic 3",
            actual: f.characteristic(),
        });
    }
    let mut count = CheckCount::default();
    for a in 0..8 {
        for b in 0..8 {
            let ((i, j), (k, l)) = (BASIS_INDICES[a], BASIS_INDICES[b]);
            let (ua, ub) = (alg.basis_vector(a), alg.basis_vector(b));
            let bracket = linalg::vsub(f, &alg.mul(&ua, &ub), &alg.mul(&ub, &ua));
            let delta = f.from_i64(i as i64 * l as i64 - j as i64 * k as i64);
            let expected = match okubo::index_of((i + k) as i64, (j + l) as i64) {
                Some(t) => linalg::vscale(f, &delta, &alg.basis_vector(t)),
                None => alg.zero(),
            };
            count.record(bracket == expected);
        }
    }
    Ok(count)
}

/// Checks `[ad u, ad v] = ad [u, v]` on basis pairs: `u -> ad u` is a Lie
/// homomorphism from the commutator algebra onto the inner derivations.
pub fn inner_bracket_transport(alg: &StructureConstantAlgebra) -> CheckCount {
    let f = alg.field();
    let n = alg.dim();
    let ads: Vec<Matrix> = (0..n).map(|i| inner_derivation(alg, &alg.basis_vector(i))).collect();
    let mut count = CheckCount::default();
    for i in 0..n {
        for j in 0..n {
            let (u, v) = (alg.basis_vector(i), alg.basis_vector(j));
            let uv = linalg::vsub(f, &alg.mul(&u, &v), &alg.mul(&v, &u));
            count.record(ads[i].commutator(&ads[j]) == inner_derivation(alg, &uv));
        }
    }
    count
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivationGrading {
    /// Dimension of each homogeneous component, degrees shown in `{-1, 0, 1}`.
    pub dims: Vec<((i8, i8), usize)>,
    pub total: usize,
    /// `(ad u)^3` is a derivation of degree `(0, 0)` for each basis element `u`.
    pub cube_checks: CheckCount,
}

impl DerivationGrading {
    pub fn dim_of(&self, degree: (i8, i8)) -> Option<usize> {
        self.dims.iter().find(|(d, _)| *d == degree).map(|(_, k)| *k)
    }
}

fn is_homogeneous(map: &LinearMap, grading: &[Degree], g: Degree) -> bool {
    let f = map.field();
    let n = map.rows();
    (0..n).all(|m| (0..n).all(|h| grading[m] == degree_add(grading[h], g) || f.is_zero(map.get(m, h))))
}

/// Homogeneous components of the derivation algebra in characteristic 3.
/// A map has degree `g` when it sends `O_h` into `O_{h+g}`; each component is
/// solved as the Leibniz system plus those support constraints.
pub fn grading_on_derivations(alg: &StructureConstantAlgebra) -> Result<DerivationGrading> {
    let f = alg.field();
    if f.characteristic() != 3 {
        return Err(Error::BadCharacteristic {
            required: "characteristic 3",
            actual: f.characteristic(),
        });
    }
    let grading = alg.grading().ok_or(Error::NoGrading)?.to_vec();
    let n = alg.dim();
    let base = leibniz_system(alg);
    let mut dims = Vec::with_capacity(9);
    for g0 in 0..3u8 {
        for g1 in 0..3u8 {
            let g = (g0, g1);
            let mut rows = base.to_rows();
            for m in 0..n {
                for h in 0..n {
                    if grading[m] != degree_add(grading[h], g) {
                        rows.push(linalg::unit_vec(f, n * n, m * n + h));
                    }
                }
            }
            let dim = Matrix::from_rows(f, rows)?.nullspace().dim();
            dims.push(((signed_component(g0), signed_component(g1)), dim));
        }
    }
    let mut cube_checks = CheckCount::default();
    for i in 0..n {
        let cube = inner_derivation(alg, &alg.basis_vector(i)).pow(3);
        cube_checks.record(is_derivation(alg, &cube) && is_homogeneous(&cube, &grading, (0, 0)));
    }
    let total = dims.iter().map(|(_, d)| d).sum();
    Ok(DerivationGrading {
        dims,
        total,
        cube_checks,
    })
}

/// `x -> g x g^{-1}` on the trace-zero matrices, in the model basis.
pub fn conjugation_automorphism(model: &Sl3Model, g: &Matrix) -> Result<LinearMap> {
    let g_inv = g.inverse()?;
    let cols: Vec<Vector> = (0..8)
        .map(|k| {
            let image = g.mul(model.basis_matrix(k)).mul(&g_inv);
            model.coordinates(&image).expect("conjugation preserves trace zero")
        })
        .collect();
    Ok(Matrix::from_columns(model.field(), 8, &cols))
}

/// `phi(b_i * b_j) = phi(b_i) * phi(b_j)` on all basis pairs, for an invertible `phi`.
pub fn is_automorphism(alg: &StructureConstantAlgebra, phi: &LinearMap) -> bool {
    let n = alg.dim();
    let images: Vec<Vector> = (0..n).map(|i| phi.column(i)).collect();
    phi.rank() == n
        && (0..n).all(|i| (0..n).all(|j| phi.mul_vec(&alg.basis_product(i, j)) == alg.mul(&images[i], &images[j])))
}

/// `phi` preserves the norm values and the polar form on the basis.
pub fn is_isometry(alg: &StructureConstantAlgebra, phi: &LinearMap) -> Result<bool> {
    let n = alg.dim();
    let images: Vec<Vector> = (0..n).map(|i| phi.column(i)).collect();
    for i in 0..n {
        if alg.norm(&images[i])? != alg.norm(&alg.basis_vector(i))? {
            return Ok(false);
        }
        for j in 0..n {
            if alg.norm_polar(&images[i], &images[j])? != alg.norm_polar(&alg.basis_vector(i), &alg.basis_vector(j))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
