use std::path::Path;

use anyhow::{bail, Context, Result};
use okubo_core::algebra::StructureConstantAlgebra;
use okubo_core::idempotents::{
    analyze_idempotent, census_summary, enumerate_idempotents, minpoly_check_char_not3, para_hurwitz_of,
    petersson_twist, verify_tau, verify_twist, DEFAULT_BUDGET,
};
use okubo_core::liealg::{
    center_of, derivations as derivation_space, derived_subalgebra, grading_on_derivations, inner_derivation_span,
    is_simple_finite, killing_form, lie_close, LieAlgebra,
};
use okubo_core::okubo::{
    build_char3_model, build_split_okubo, distinguished_idempotent, model_isomorphism_char_not3, NodalAlgebra, Sl3Model,
};
use okubo_core::{Error, Field, Vector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::Common;

const SIMPLICITY_TRIALS: usize = 20;

pub struct Outcome {
    pub field: String,
    pub results: Value,
    pub passed: bool,
}

fn parse_field(spec: &str) -> Result<Field> {
    Field::parse(spec).with_context(|| format!("invalid field spec {spec:?}"))
}

fn element_json(alg: &StructureConstantAlgebra, v: &[okubo_core::Scalar]) -> Value {
    json!({
        "element": alg.format_element(v),
        "coordinates": v.iter().map(|c| alg.field().format(c)).collect::<Vec<_>>(),
    })
}

pub fn verify(c: &Common) -> Result<Outcome> {
    let field = parse_field(&c.field)?;
    let alg = build_split_okubo(&field);
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    let composition = alg.check_symmetric_composition(c.trials, &mut rng)?;
    let grading = alg.check_grading()?;
    let center = alg.commutative_center().dim();
    let passed = composition.passed() && grading;
    Ok(Outcome {
        field: field.to_string(),
        results: json!({
            "composition": composition,
            "grading_respected": grading,
            "commutative_center_dim": center,
        }),
        passed,
    })
}

pub fn models(c: &Common) -> Result<Outcome> {
    let field = parse_field(&c.field)?;
    let (results, passed) = if field.characteristic() == 3 {
        let (_, report) = build_char3_model(&field)?;
        let nodal = NodalAlgebra::new(&field)?;
        let mut agree = 0;
        for a in 0..9 {
            for b in 0..9 {
                let (p, q) = (nodal.monomial(a / 3, a % 3), nodal.monomial(b / 3, b % 3));
                if nodal.diamond(&p, &q) == nodal.diamond_via_partials(&p, &q) {
                    agree += 1;
                }
            }
        }
        let passed = report.passed() && agree == 81;
        (
            json!({ "isomorphism": report, "partials_formula": { "checked": 81, "matched": agree } }),
            passed,
        )
    } else {
        let report = model_isomorphism_char_not3(&field)?;
        let model = Sl3Model::new(&field)?;
        let flexible = model.check_flexible_norm_identity();
        let minus = model.check_minus_isomorphism();
        let passed = report.passed() && flexible.passed() && minus.passed();
        (
            json!({ "isomorphism": report, "flexible_norm_identity": flexible, "commutator_transport": minus }),
            passed,
        )
    };
    Ok(Outcome {
        field: field.to_string(),
        results,
        passed,
    })
}

fn simplicity(l: &LieAlgebra, seed: u64) -> Result<Value> {
    if !l.field().is_finite() {
        return Ok(Value::Null);
    }
    match is_simple_finite(l, seed, SIMPLICITY_TRIALS) {
        Ok(s) => Ok(json!(s)),
        Err(Error::Inconclusive(_)) => Ok(json!("inconclusive")),
        Err(e) => Err(e.into()),
    }
}

fn lie_summary(l: &LieAlgebra, seed: u64) -> Result<Value> {
    Ok(json!({
        "dim": l.dim(),
        "killing_rank": killing_form(l).rank(),
        "center_dim": center_of(l).dim(),
        "simple": simplicity(l, seed)?,
    }))
}

pub fn derivations(c: &Common) -> Result<Outcome> {
    let field = parse_field(&c.field)?;
    let alg = build_split_okubo(&field);
    let der_space = derivation_space(&alg);
    let inner = inner_derivation_span(&alg)?;
    let der = lie_close(&der_space)?;
    let derived = derived_subalgebra(&der);
    let derived_span = derived.map_span().expect("derived algebra carries maps");
    let p = field.characteristic();

    let mut checks = Map::new();
    checks.insert("inner_within_der".into(), json!(inner.is_subspace_of(&der_space)?));
    if p == 3 {
        checks.insert("inner_equals_derived".into(), json!(inner == derived_span));
    } else if p != 2 {
        checks.insert("der_equals_inner".into(), json!(der_space == inner));
    }
    let grading = if p == 3 {
        let g = grading_on_derivations(&alg)?;
        checks.insert("cube_of_ad_degree_zero".into(), json!(g.cube_checks.passed()));
        let dims: Map<String, Value> = g
            .dims
            .iter()
            .map(|((i, j), d)| (format!("({i},{j})"), json!(d)))
            .collect();
        Value::Object(dims)
    } else {
        Value::Null
    };
    let passed = checks.values().all(|v| v == &json!(true));
    let derived_summary = lie_summary(&derived, c.seed)?;
    Ok(Outcome {
        field: field.to_string(),
        results: json!({
            "dim_der": der.dim(),
            "dim_inner": inner.dim(),
            "dim_derived": derived.dim(),
            "killing_rank": derived_summary["killing_rank"],
            "center_dim": derived_summary["center_dim"],
            "simple": derived_summary["simple"],
            "grading_dims": grading,
            "der": lie_summary(&der, c.seed)?,
            "derived": derived_summary,
            "checks": checks,
        }),
        passed,
    })
}

fn full_field_census(spec: &str) -> Result<(Value, bool)> {
    let field = parse_field(spec)?;
    if field.characteristic() == 3 {
        bail!("--full-field expects characteristic not 3, got {field}");
    }
    let model = Sl3Model::new(&field)?;
    let alg = model.to_algebra()?;
    let all = enumerate_idempotents(&alg, DEFAULT_BUDGET)?;
    let mut max_degree = 0;
    let mut signatures = std::collections::BTreeMap::<String, usize>::new();
    for f in &all {
        max_degree = max_degree.max(minpoly_check_char_not3(&model, f)?);
        let r = analyze_idempotent(&alg, f)?;
        *signatures
            .entry(format!("({},{})", r.centralizer_dim, r.norm_rank))
            .or_default() += 1;
    }
    let passed = max_degree <= 2;
    Ok((
        json!({
            "field": field.to_string(),
            "total": all.len(),
            "max_minpoly_degree": max_degree,
            "centralizer_signatures": signatures,
        }),
        passed,
    ))
}

pub fn census(c: &Common, full_field: Option<&str>) -> Result<Outcome> {
    let field = parse_field(&c.field)?;
    let alg = build_split_okubo(&field);
    let summary = census_summary(&alg, DEFAULT_BUDGET)?;
    let e = distinguished_idempotent(&alg)?;
    let witness = match summary.quaternionic_witnesses.as_slice() {
        [w] => element_json(&alg, w),
        _ => Value::Null,
    };
    let mut passed = summary.anomalies.is_empty() && summary.norm_not_one == 0 && summary.tau_mismatch == 0;
    let mut results = json!({
        "total": summary.total,
        "by_type": {
            "quaternionic": summary.quaternionic,
            "quadratic": summary.quadratic,
            "singular": summary.singular,
        },
        "quaternionic_witness": witness,
        "witness_is_e": summary.quaternionic_witnesses == vec![e],
        "anomalies": summary.anomalies,
        "norm_not_one": summary.norm_not_one,
    });
    if let Some(spec) = full_field {
        let (full, ok) = full_field_census(spec)?;
        results["full_field"] = full;
        passed &= ok;
    }
    Ok(Outcome {
        field: field.to_string(),
        results,
        passed,
    })
}

fn parse_element(alg: &StructureConstantAlgebra, text: &str) -> Result<Vector> {
    let coords: Vec<&str> = text.split(',').map(str::trim).collect();
    if coords.len() != alg.dim() {
        bail!("expected {} coordinates, got {}", alg.dim(), coords.len());
    }
    coords.iter().map(|s| Ok(alg.field().parse_scalar(s)?)).collect()
}

pub fn twist(c: &Common, idempotent: Option<&str>) -> Result<Outcome> {
    let field = parse_field(&c.field)?;
    let alg = build_split_okubo(&field);
    let f = match idempotent {
        Some(text) => parse_element(&alg, text)?,
        None => distinguished_idempotent(&alg).context("--idempotent is required outside characteristic 3")?,
    };
    let tau = verify_tau(&alg, &f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    let twist = verify_twist(&alg, &f, c.trials, &mut rng)?;
    let twisted = petersson_twist(&alg, &f)?;
    let para = para_hurwitz_of(&twisted)?;
    let para_center = para.commutative_center();
    let unit_central = para_center.contains(&f);
    let passed = tau.passed() && twist.passed() && unit_central;
    Ok(Outcome {
        field: field.to_string(),
        results: json!({
            "idempotent": element_json(&alg, &f),
            "tau": tau,
            "twist": twist,
            "para_hurwitz": {
                "unit_in_commutative_center": unit_central,
                "commutative_center_dim": para_center.dim(),
                "original_commutative_center_dim": alg.commutative_center().dim(),
            },
        }),
        passed,
    })
}

pub fn export(c: &Common, path: &Path, csv: Option<&Path>) -> Result<Outcome> {
    let field = parse_field(&c.field)?;
    let alg = build_split_okubo(&field);
    let text = alg.to_json();
    std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
    if let Some(csv) = csv {
        std::fs::write(csv, alg.multiplication_table_csv()).with_context(|| format!("writing {}", csv.display()))?;
    }
    let reread = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let round_trip = StructureConstantAlgebra::from_json(&reread)? == alg;
    let nonzero = alg.tensor().iter().filter(|x| !field.is_zero(x)).count();
    Ok(Outcome {
        field: field.to_string(),
        results: json!({
            "path": path.display().to_string(),
            "dim": alg.dim(),
            "nonzero_structure_constants": nonzero,
            "round_trip": round_trip,
        }),
        passed: round_trip,
    })
}
