//! Response encoding: lattice integers and rationals become decimal strings, matrices are
//! row-major, and ray or cone indices are 1-based.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use toric_core::cones::Cone;
use toric_core::divisors::Divisor;
use toric_core::fans::Fan;
use toric_core::ideals::{LaurentPolynomial, MonomialOrder, Polynomial};
use toric_core::polytopes::{Facet, LatticePolytope};
use toric_core::zlattice::{AbelianGroupPresentation, IntegerMatrix};

pub fn int(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn rational(x: &BigRational) -> Value {
    Value::String(x.to_string())
}

pub fn vector(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn vectors(vs: &[Vec<BigInt>]) -> Value {
    Value::Array(vs.iter().map(|v| vector(v)).collect())
}

pub fn rational_vectors(vs: &[Vec<BigRational>]) -> Value {
    Value::Array(vs.iter().map(|v| Value::Array(v.iter().map(rational).collect())).collect())
}

pub fn matrix(m: &IntegerMatrix) -> Value {
    vectors(&m.row_vecs())
}

pub fn one_based(idx: &[usize]) -> Value {
    Value::Array(idx.iter().map(|&i| json!(i + 1)).collect())
}

pub fn index_sets(sets: &[Vec<usize>]) -> Value {
    Value::Array(sets.iter().map(|s| one_based(s)).collect())
}

pub fn group(g: &AbelianGroupPresentation) -> Value {
    json!({
        "free_rank": g.free_rank,
        "torsion": vector(&g.invariant_factors),
        "text": g.to_string(),
    })
}

pub fn cone(c: &Cone) -> Value {
    json!({
        "dim": c.dim(),
        "ambient_dim": c.ambient_dim(),
        "rays": vectors(c.ray_vectors()),
        "lineality": vectors(c.lineality()),
        "facets": vectors(c.facets()),
        "equations": vectors(c.equations()),
    })
}

fn facets(fs: &[Facet]) -> Value {
    Value::Array(fs.iter().map(|f| json!({"normal": vector(&f.normal), "offset": int(&f.offset)})).collect())
}

pub fn polytope(p: &LatticePolytope) -> Value {
    json!({
        "dim": p.dim(),
        "ambient_dim": p.ambient_dim(),
        "vertices": vectors(p.vertices()),
        "facets": facets(p.facets()),
        "equations": facets(p.equations()),
    })
}

/// Input-compatible fan object plus its dimension.
pub fn fan(f: &Fan) -> Value {
    json!({
        "dim": f.ambient_dim(),
        "rays": vectors(f.rays()),
        "max_cones": index_sets(f.max_cones()),
    })
}

pub fn divisor(d: &Divisor) -> Value {
    json!({ "coeffs": vector(&d.coeffs) })
}

/// Input-compatible term list plus a readable rendering.
pub fn polynomial(p: &Polynomial) -> Value {
    let terms: Vec<Value> = p
        .sorted_terms(MonomialOrder::GrevLex)
        .iter()
        .map(|(m, c)| json!({"exp": m, "coeff": rational(c)}))
        .collect();
    json!({ "text": p.to_string(), "terms": terms })
}

pub fn laurent(p: &LaurentPolynomial) -> Value {
    let terms: Vec<Value> =
        p.terms().iter().map(|(m, c)| json!({"exp": vector(m), "coeff": rational(c)})).collect();
    json!({ "text": p.to_string(), "terms": terms })
}
