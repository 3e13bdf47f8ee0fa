//! One handler per `<group> <op>` command.

use num_bigint::BigInt;
use serde_json::{json, Value};

use toric_core::counting::{bezout_count, bkk_count, bkk_count_with_fan, kushnirenko_count, SparseSystem};
use toric_core::cox::{cox_data, dehomogenize, homogenize, irrelevant_ideal, primitive_collections};
use toric_core::divisors::{
    cartier_data, class_group, divisor_polyhedron, global_sections, linearly_equivalent, minimal_cartier_multiple,
    picard_group, polytope_divisor, CartierMultiple, Divisor,
};
use toric_core::fans::{normal_fan, Fan, LatticeMap};
use toric_core::ideals::{hilbert_function, membership, toric_ideal, toric_minimal_generators, MonomialOrder, Polynomial};
use toric_core::polytopes::{mixed_volume, LatticePolytope};
use toric_core::zlattice::IntegerMatrix;

use crate::encode as enc;
use crate::schema::{schema_error, Node, Res};
use crate::CliError;

pub const COMMANDS: &[&str] = &[
    "cone dual",
    "cone rays",
    "cone hilbert-basis",
    "cone is-smooth",
    "cone is-simplicial",
    "cone faces",
    "polytope facets",
    "polytope lattice-points",
    "polytope volume",
    "polytope normalized-volume",
    "polytope ehrhart",
    "polytope minkowski",
    "polytope mixed-volume",
    "polytope is-normal",
    "polytope is-very-ample",
    "polytope project-full",
    "fan validate",
    "fan normal-fan",
    "fan is-complete",
    "fan is-smooth",
    "fan is-simplicial",
    "fan star-subdivide",
    "fan product",
    "fan limit-cone",
    "fan star-quotient",
    "fan orbits",
    "fan compatible",
    "ideal toric",
    "ideal member",
    "ideal hilbert-function",
    "divisor class-group",
    "divisor picard-group",
    "divisor is-cartier",
    "divisor min-cartier-multiple",
    "divisor sections",
    "divisor from-polytope",
    "divisor polyhedron",
    "divisor lin-equiv",
    "cox data",
    "cox irrelevant",
    "cox primitive-collections",
    "cox degree",
    "cox homogenize",
    "cox dehomogenize",
    "count kushnirenko",
    "count bkk",
    "count bezout",
];

pub fn dispatch(command: &str, p: Node<'_>) -> Res<Value> {
    match command {
        "cone dual" => Ok(json!({ "cone": enc::cone(&p.field("cone")?.node().cone()?.dual()) })),
        "cone rays" => {
            let c = p.field("cone")?.node().cone()?;
            Ok(json!({ "rays": enc::vectors(c.ray_vectors()), "lineality": enc::vectors(c.lineality()) }))
        }
        "cone hilbert-basis" => {
            let hb = p.field("cone")?.node().cone()?.hilbert_basis()?;
            Ok(json!({ "elements": enc::vectors(&hb.elements) }))
        }
        "cone is-smooth" => Ok(json!({ "smooth": p.field("cone")?.node().cone()?.is_smooth() })),
        "cone is-simplicial" => Ok(json!({ "simplicial": p.field("cone")?.node().cone()?.is_simplicial() })),
        "cone faces" => cone_faces(p),
        "polytope facets" => Ok(enc::polytope(&p.field("polytope")?.node().polytope()?)),
        "polytope lattice-points" => {
            let pts = p.field("polytope")?.node().polytope()?.lattice_points();
            Ok(json!({ "count": pts.len(), "points": enc::vectors(&pts) }))
        }
        "polytope volume" => {
            let q = p.field("polytope")?.node().polytope()?;
            Ok(json!({ "dim": q.dim(), "volume": enc::rational(&q.volume()) }))
        }
        "polytope normalized-volume" => {
            let q = p.field("polytope")?.node().polytope()?;
            Ok(json!({ "dim": q.dim(), "normalized_volume": enc::int(&q.normalized_volume()) }))
        }
        "polytope ehrhart" => {
            let e = p.field("polytope")?.node().polytope()?.ehrhart();
            let coeffs: Vec<Value> = e.coeffs().iter().map(enc::rational).collect();
            Ok(json!({ "coeffs": coeffs, "text": e.to_string() }))
        }
        "polytope minkowski" => {
            let ps = polytopes(p)?;
            let mut sum = ps[0].clone();
            for q in &ps[1..] {
                sum = sum.minkowski_sum(q)?;
            }
            Ok(json!({ "polytope": enc::polytope(&sum) }))
        }
        "polytope mixed-volume" => Ok(json!({ "mixed_volume": enc::int(&mixed_volume(&polytopes(p)?)?) })),
        "polytope is-normal" => Ok(json!({ "normal": p.field("polytope")?.node().polytope()?.is_normal() })),
        "polytope is-very-ample" => {
            Ok(json!({ "very_ample": p.field("polytope")?.node().polytope()?.is_very_ample() }))
        }
        "polytope project-full" => {
            let (q, map) = p.field("polytope")?.node().polytope()?.project_full();
            Ok(json!({
                "polytope": enc::polytope(&q),
                "origin": enc::vector(&map.origin),
                "basis": enc::vectors(&map.basis.column_vecs()),
            }))
        }
        "fan validate" => {
            let f = fan(p)?;
            Ok(json!({ "valid": true, "fan": enc::fan(&f) }))
        }
        "fan normal-fan" => Ok(json!({ "fan": enc::fan(&normal_fan(&p.field("polytope")?.node().polytope()?)?) })),
        "fan is-complete" => Ok(json!({ "complete": fan(p)?.is_complete() })),
        "fan is-smooth" => {
            let f = fan(p)?;
            Ok(json!({ "smooth": f.is_smooth(), "smooth_cones": f.smoothness_vector() }))
        }
        "fan is-simplicial" => Ok(json!({ "simplicial": fan(p)?.is_simplicial() })),
        "fan star-subdivide" => {
            let f = fan(p)?;
            let c = p.field("cone")?.node().index(f.max_cones().len())?;
            Ok(json!({ "fan": enc::fan(&f.star_subdivision(c)?) }))
        }
        "fan product" => {
            let fs = p.field("fans")?;
            let items = fs.node().items()?;
            if items.len() != 2 {
                return Err(schema_error(fs.node().path(), "expected exactly two fans"));
            }
            let (a, b) = (items[0].node().fan()?, items[1].node().fan()?);
            Ok(json!({ "fan": enc::fan(&a.product(&b)) }))
        }
        "fan limit-cone" => {
            let f = fan(p)?;
            let u = vector_of_len(p, "u", f.ambient_dim())?;
            let cone = f.cone_containing_relint(&u);
            Ok(json!({ "exists": cone.is_some(), "cone": cone.map(|c| enc::one_based(&c)) }))
        }
        "fan star-quotient" => {
            let f = fan(p)?;
            let tau = ray_set(p, "cone", &f)?;
            let (q, map) = f.star_quotient(&tau)?;
            Ok(json!({ "fan": enc::fan(&q), "projection": enc::matrix(&map.matrix) }))
        }
        "fan orbits" => {
            let table = fan(p)?.orbit_table();
            let rows: Vec<Value> = table
                .iter()
                .map(|e| json!({ "cone": enc::one_based(&e.cone), "orbit_dim": e.orbit_dim, "closure": enc::one_based(&e.closure) }))
                .collect();
            Ok(json!({ "orbits": rows }))
        }
        "fan compatible" => {
            let source = fan(p)?;
            let target = p.field("target")?.node().fan()?;
            let m = p.field("map")?;
            let matrix = m.node().matrix()?;
            if matrix.rows() != target.ambient_dim() || matrix.cols() != source.ambient_dim() {
                return Err(schema_error(
                    m.node().path(),
                    format!("expected a {}x{} matrix", target.ambient_dim(), source.ambient_dim()),
                ));
            }
            Ok(json!({ "compatible": source.is_compatible(&LatticeMap { matrix }, &target) }))
        }
        "ideal toric" => {
            let a = p.field("matrix")?.node().matrix()?;
            let minimal = p.opt_field("minimal")?.map(|m| m.node().boolean()).transpose()?.unwrap_or(false);
            let gens = if minimal { toric_minimal_generators(&a)? } else { toric_ideal(&a) };
            let out: Vec<Value> = gens.iter().map(enc::polynomial).collect();
            Ok(json!({ "count": gens.len(), "generators": out }))
        }
        "ideal member" => {
            let nvars = p.opt_field("nvars")?.map(|n| n.node().count()).transpose()?;
            let gens_node = p.field("generators")?;
            let gens: Vec<Polynomial> =
                gens_node.node().items()?.iter().map(|g| g.node().polynomial(nvars)).collect::<Res<_>>()?;
            let n = nvars.or(gens.first().map(|g| g.nvars()));
            let f = p.field("polynomial")?.node().polynomial(n)?;
            if let Some(g) = gens.iter().position(|g| g.nvars() != f.nvars()) {
                return Err(schema_error(&format!("{}/{g}", gens_node.path), "variable count differs from the polynomial"));
            }
            Ok(json!({ "member": membership(&f, &gens, MonomialOrder::GrevLex) }))
        }
        "ideal hilbert-function" => {
            let a = p.field("matrix")?.node().matrix()?;
            let d = p.field("d")?.node().count()?;
            let d = u32::try_from(d).map_err(|_| schema_error("/payload/d", "degree too large"))?;
            Ok(json!({ "value": hilbert_function(&a, d) }))
        }
        "divisor class-group" => {
            let f = fan(p)?;
            let cl = class_group(&f);
            let k = f.rays().len();
            let weights: Vec<_> = (0..k).map(|i| cl.class_of(&Divisor::prime(k, i))).collect();
            Ok(json!({ "group": enc::group(cl.group()), "ray_classes": enc::vectors(&weights), "torus_factor": cl.torus_factor }))
        }
        "divisor picard-group" => Ok(json!({ "group": enc::group(&picard_group(&fan(p)?)) })),
        "divisor is-cartier" => {
            let (f, d) = fan_divisor(p)?;
            match cartier_data(&f, &d) {
                Ok(data) => Ok(json!({ "cartier": true, "characters": enc::vectors(&data.characters) })),
                Err(toric_core::Error::NotCartier(c)) => Ok(json!({ "cartier": false, "failing_cone": c + 1 })),
                Err(e) => Err(e.into()),
            }
        }
        "divisor min-cartier-multiple" => {
            let (f, d) = fan_divisor(p)?;
            Ok(match minimal_cartier_multiple(&f, &d)? {
                CartierMultiple::Finite(m) => json!({ "finite": true, "multiple": enc::int(&m) }),
                CartierMultiple::Infinite => json!({ "finite": false, "multiple": null }),
            })
        }
        "divisor sections" => {
            let (f, d) = fan_divisor(p)?;
            let ms = global_sections(&f, &d)?;
            Ok(json!({ "dimension": ms.len(), "exponents": enc::vectors(&ms) }))
        }
        "divisor from-polytope" => {
            let poly = p.field("polytope")?.node().polytope()?;
            let f = match p.opt_field("fan")? {
                Some(n) => n.node().fan()?,
                None => normal_fan(&poly)?,
            };
            Ok(json!({ "divisor": enc::divisor(&polytope_divisor(&poly, &f)?), "fan": enc::fan(&f) }))
        }
        "divisor polyhedron" => {
            let (f, d) = fan_divisor(p)?;
            let pd = divisor_polyhedron(&f, &d)?;
            let ineqs: Vec<Value> =
                pd.inequalities.iter().map(|(u, a)| json!({"normal": enc::vector(u), "offset": enc::int(a)})).collect();
            Ok(json!({
                "inequalities": ineqs,
                "bounded": pd.bounded,
                "vertices": enc::rational_vectors(&pd.vertices),
                "lattice_points": pd.lattice_points.as_ref().map(|v| enc::vectors(v)),
            }))
        }
        "divisor lin-equiv" => {
            let f = fan(p)?;
            let ds = p.field("divisors")?;
            let items = ds.node().items()?;
            if items.len() != 2 {
                return Err(schema_error(ds.node().path(), "expected exactly two divisors"));
            }
            let k = f.rays().len();
            let (d, e) = (items[0].node().divisor(k)?, items[1].node().divisor(k)?);
            let m = linearly_equivalent(&f, &d, &e)?;
            Ok(json!({ "equivalent": m.is_some(), "character": m.map(|m| enc::vector(&m)) }))
        }
        "cox data" => {
            let cd = cox_data(&fan(p)?)?;
            Ok(json!({
                "class_group": enc::group(cd.class_group.group()),
                "weights": enc::vectors(&cd.weights),
                "irrelevant": monomials(&cd.irrelevant),
                "primitive_collections": enc::index_sets(&cd.primitive_collections),
            }))
        }
        "cox irrelevant" => Ok(json!({ "generators": monomials(&irrelevant_ideal(&fan(p)?)) })),
        "cox primitive-collections" => {
            Ok(json!({ "collections": enc::index_sets(&primitive_collections(&fan(p)?)) }))
        }
        "cox degree" => {
            let f = fan(p)?;
            let cd = cox_data(&f)?;
            let a = vector_of_len(p, "exponent", f.rays().len())?;
            Ok(json!({ "class": enc::vector(&cd.degree(&a)) }))
        }
        "cox homogenize" => {
            let (f, d) = fan_divisor(p)?;
            let g = p.field("polynomial")?.node().laurent(f.ambient_dim())?;
            Ok(json!({ "polynomial": enc::polynomial(&homogenize(&f, &g, &d)?) }))
        }
        "cox dehomogenize" => {
            let (f, d) = fan_divisor(p)?;
            let g = p.field("polynomial")?.node().polynomial(Some(f.rays().len()))?;
            let cone = p.field("cone")?.node().index(f.max_cones().len())?;
            Ok(json!({ "polynomial": enc::laurent(&dehomogenize(&f, &g, &d, cone)?) }))
        }
        "count kushnirenko" => {
            let pts = p.field("points")?.node().rows(None)?;
            if pts.is_empty() {
                return Err(schema_error("/payload/points", "expected at least one point"));
            }
            let k = kushnirenko_count(&IntegerMatrix::from_columns(pts[0].len(), &pts))?;
            Ok(json!({
                "degree": enc::int(&k.degree),
                "normalized_volume": enc::int(&k.normalized_volume),
                "index": enc::int(&k.index),
            }))
        }
        "count bkk" => count_bkk(p),
        "count bezout" => {
            let d = p.field("degrees")?.node().vector()?;
            Ok(json!({ "bezout": enc::int(&bezout_count(&d)?) }))
        }
        other => Err(CliError::UnknownCommand(other.to_string())),
    }
}

fn fan(p: Node<'_>) -> Res<Fan> {
    p.field("fan")?.node().fan()
}

fn fan_divisor(p: Node<'_>) -> Res<(Fan, Divisor)> {
    let f = fan(p)?;
    let d = p.field("divisor")?.node().divisor(f.rays().len())?;
    Ok((f, d))
}

fn polytopes(p: Node<'_>) -> Res<Vec<LatticePolytope>> {
    let ps = p.field("polytopes")?;
    let items = ps.node().items()?;
    if items.is_empty() {
        return Err(schema_error(ps.node().path(), "expected at least one polytope"));
    }
    items.iter().map(|q| q.node().polytope()).collect()
}

fn vector_of_len(p: Node<'_>, key: &str, n: usize) -> Res<Vec<BigInt>> {
    let f = p.field(key)?;
    let v = f.node().vector()?;
    if v.len() != n {
        return Err(schema_error(f.node().path(), format!("expected {n} entries, found {}", v.len())));
    }
    Ok(v)
}

/// 1-based ray indices naming a cone of the fan, returned sorted and 0-based.
fn ray_set(p: Node<'_>, key: &str, f: &Fan) -> Res<Vec<usize>> {
    let c = p.field(key)?;
    let mut idx: Vec<usize> = c.node().items()?.iter().map(|i| i.node().index(f.rays().len())).collect::<Res<_>>()?;
    idx.sort_unstable();
    idx.dedup();
    if !f.all_cones().contains(&idx) {
        return Err(schema_error(c.node().path(), "rays do not span a cone of the fan"));
    }
    Ok(idx)
}

fn monomials(ms: &[Vec<u32>]) -> Value {
    Value::Array(
        ms.iter()
            .map(|m| {
                let p = Polynomial::monomial(m.clone(), num_rational::BigRational::from_integer(1.into()));
                json!({ "exp": m, "text": p.to_string() })
            })
            .collect(),
    )
}

/// `{"equations": [laurent], "fan"?: fan, "points"?: [[p/q]]}`; `points` are checked for
/// being common zeros of the homogenized system.
fn count_bkk(p: Node<'_>) -> Res<Value> {
    let eqs_node = p.field("equations")?;
    let items = eqs_node.node().items()?;
    let n = items.len();
    let eqs = items.iter().map(|e| e.node().laurent(n)).collect::<Res<Vec<_>>>()?;
    let system = SparseSystem::new(n, eqs)?;
    let report = match p.opt_field("fan")? {
        Some(f) => bkk_count_with_fan(&system, &f.node().fan()?)?,
        None => bkk_count(&system)?,
    };
    let zeros = match p.opt_field("points")? {
        Some(pts) => {
            let k = report.fan.rays().len();
            let mut v = Vec::new();
            for it in pts.node().items()? {
                let q = it.node().rational_vector()?;
                if q.len() != k {
                    return Err(schema_error(it.node().path(), format!("expected {k} coordinates")));
                }
                v.push(q);
            }
            Some(report.common_zeros(&v)?)
        }
        None => None,
    };
    Ok(json!({
        "bkk": enc::int(&report.bkk),
        "kushnirenko": report.kushnirenko.as_ref().map(enc::int),
        "bezout": report.bezout.as_ref().map(enc::int),
        "lattice_index": enc::int(&report.lattice_index),
        "semantics": "upper bound on isolated solutions in the torus, attained for generic coefficients",
        "fan": enc::fan(&report.fan),
        "divisors": report.divisors.iter().map(enc::divisor).collect::<Vec<_>>(),
        "homogenized": report.homogenized.iter().map(enc::polynomial).collect::<Vec<_>>(),
        "common_zeros": zeros,
    }))
}

/// Faces as 1-based index sets into the cone's extreme rays, smallest first.
fn cone_faces(p: Node<'_>) -> Res<Value> {
    let c = p.field("cone")?.node().cone()?;
    let faces: Vec<Value> = c
        .face_ray_sets()
        .iter()
        .zip(c.faces())
        .map(|(s, f)| json!({ "dim": f.dim(), "rays": enc::one_based(s) }))
        .collect();
    Ok(json!({ "rays": enc::vectors(c.ray_vectors()), "faces": faces }))
}
