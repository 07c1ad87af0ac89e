//! JSON encodings of library results. Exact field elements and bound values
//! are strings; floating values carry `"approx": true`.

use serde_json::{json, Map, Value};
use sgstar::bounds::{BoundReport, CubicCertificate, QuadraticCertificate};
use sgstar::srg::SrgParameters;
use sgstar::starcomp::{ExtensionCatalog, GoodVector, StarPartition};
use sgstar::{EigenvalueDescriptor, ExactScalar, SpectrumReport, VertexSet};

/// Floats are rounded to 12 significant digits so output does not depend on
/// the last bits of the eigensolver.
fn rounded(x: f64) -> f64 {
    format!("{x:.11e}").parse().expect("formatted float parses")
}

pub fn exact(x: &ExactScalar) -> Value {
    Value::String(x.to_string())
}

pub fn set(s: &VertexSet) -> Value {
    s.iter().collect()
}

pub fn descriptor(d: &EigenvalueDescriptor) -> Value {
    let mut m = Map::new();
    match d.exact() {
        Some(x) => {
            m.insert("value".into(), exact(x));
        }
        None => {
            m.insert("value".into(), rounded(d.approx()).into());
            m.insert("approx".into(), Value::Bool(true));
        }
    }
    m.insert("multiplicity".into(), d.multiplicity.into());
    m.insert("main".into(), d.is_main.map_or(Value::Null, Value::Bool));
    Value::Object(m)
}

pub fn spectrum(r: &SpectrumReport) -> Value {
    json!({
        "n": r.n,
        "fully_exact": r.is_fully_exact(),
        "eigenvalues": r.descriptors.iter().map(descriptor).collect::<Vec<_>>(),
    })
}

pub fn bound(r: &BoundReport) -> Value {
    json!({
        "bound": r.kind.name(),
        "applicable": r.applicable,
        "reason": r.reason,
        "n": r.n,
        "t": r.t,
        "bound_value": r.bound_value.to_string(),
        "holds": r.holds,
        "attained": r.attained,
    })
}

pub fn partition(p: &StarPartition) -> Value {
    json!({
        "mu": exact(p.mu()),
        "k": p.k(),
        "t": p.t(),
        "star_set": set(p.star_set()),
        "complement": set(p.complement()),
        "star_complement": p.complement_graph().to_text(),
        "b_columns": p.star_vectors().iter().map(|v| v.b.clone()).collect::<Vec<_>>(),
    })
}

pub fn good_vector(v: &GoodVector) -> Value {
    json!({ "b": v.b, "image": v.image.iter().map(exact).collect::<Vec<_>>() })
}

pub fn catalog(c: &ExtensionCatalog) -> Value {
    json!({
        "good_vectors": c.good_vectors.iter().map(good_vector).collect::<Vec<_>>(),
        "cliques": c.cliques,
        "truncated": c.truncated,
    })
}

pub fn srg_parameters(p: &SrgParameters) -> Value {
    let class = |x: Option<i64>| x.map_or(Value::String("vacuous".into()), Value::from);
    json!({
        "degree": p.degree,
        "net_degree": p.net_degree,
        "a": class(p.a),
        "b": class(p.b),
        "c": class(p.c),
    })
}

pub fn cubic_certificate(c: &CubicCertificate) -> Value {
    json!({
        "n": c.n,
        "t": c.t,
        "rank": c.rank,
        "dim_h3": c.dim_h3,
        "independent": c.independent,
        "determinant": c.determinant.as_ref().map(exact),
    })
}

pub fn quadratic_certificate(c: &QuadraticCertificate) -> Value {
    json!({
        "n": c.n,
        "t": c.t,
        "rank": c.rank,
        "dim_h2": c.dim_h2,
        "independent": c.independent,
        "hypothesis": c.hypothesis,
        "gram_identity": c.gram_identity,
    })
}
