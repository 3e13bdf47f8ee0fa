//! Randomized checks of the library against the oracles. Each check draws one instance
//! from `rng` and reports the first disagreement.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use std::collections::BTreeSet;

use toric_core::cones::Cone;
use toric_core::divisors::{divisor_polyhedron, polytope_divisor};
use toric_core::fans::{normal_fan, Fan};
use toric_core::polytopes::{mixed_volume, LatticePolytope};

use super::*;

pub type Check = Result<(), String>;

fn polytope(h: &[[i64; 2]]) -> LatticePolytope {
    let pts: Vec<Vec<BigInt>> = h.iter().map(|p| big(p)).collect();
    LatticePolytope::hull(2, &pts).expect("nonempty point set")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `(σ^∨)^∨ = σ`, and `σ^∨` agrees with the pairing test on a box of characters.
pub fn cone_biduality<R: Rng>(rng: &mut R) -> Check {
    let (d, gens) = random_pointed_cone(rng);
    let bg: Vec<Vec<BigInt>> = gens.iter().map(|g| big(g)).collect();
    let c = Cone::new(d, &bg).map_err(|e| format!("{gens:?}: {e}"))?;
    ensure(c.is_pointed(), || format!("{gens:?} reported not pointed"))?;
    let dual = c.dual();
    ensure(dual.dual() == c, || format!("{gens:?}: double dual differs"))?;
    for m in box_vectors(d, 2) {
        let expected = gens.iter().all(|g| dot(g, &m) >= 0);
        ensure(dual.contains(&big(&m)) == expected, || format!("{gens:?}: dual membership of {m:?}"))?;
    }
    Ok(())
}

/// Ehrhart polynomial against brute-force counts of `kP` at `k = 3, 4`, plus the leading
/// coefficient against the area.
pub fn ehrhart_out_of_sample<R: Rng>(rng: &mut R) -> Check {
    let (_, h) = random_polygon(rng, 3);
    let e = polytope(&h).ehrhart();
    for k in [3i64, 4] {
        let want = polygon_points(&h, k).len();
        let got = e.eval_int(k);
        ensure(got == BigRational::from_integer(want.into()), || format!("{h:?}: L({k}) = {got}, brute force {want}"))?;
    }
    let lead = BigRational::new(twice_area(&h).into(), 2.into());
    ensure(e.coeffs().get(2) == Some(&lead), || format!("{h:?}: leading coefficient"))
}

pub fn lattice_points_polygon<R: Rng>(rng: &mut R) -> Check {
    let (_, h) = random_polygon(rng, 4);
    let mut want: Vec<Vec<i64>> = polygon_points(&h, 1).iter().map(|p| p.to_vec()).collect();
    want.sort();
    let mut got: Vec<Vec<i64>> = polytope(&h).lattice_points().iter().map(|p| small(p)).collect();
    got.sort();
    ensure(got == want, || format!("{h:?}: lattice points differ"))
}

pub fn lattice_points_simplex<R: Rng>(rng: &mut R) -> Check {
    let v = random_simplex_3d(rng, 3);
    let pts: Vec<Vec<BigInt>> = v.iter().map(|p| big(p)).collect();
    let p = LatticePolytope::hull(3, &pts).map_err(|e| e.to_string())?;
    let (got, want) = (p.lattice_points().len(), simplex_points(&v));
    ensure(got == want, || format!("{v:?}: {got} points, brute force {want}"))
}

/// Symmetry, additivity in each argument, `MV(P, P) = 2·area` and
/// `MV(P, Q) = area(P+Q) − area(P) − area(Q)`.
pub fn mixed_volume_laws<R: Rng>(rng: &mut R) -> Check {
    let (_, a) = random_polygon(rng, 2);
    let (_, b) = random_polygon(rng, 2);
    let (_, c) = random_polygon(rng, 2);
    let (pa, pb, pc) = (polytope(&a), polytope(&b), polytope(&c));
    let mv = |x: &LatticePolytope, y: &LatticePolytope| mixed_volume(&[x.clone(), y.clone()]).unwrap();
    let ab = mv(&pa, &pb);
    ensure(ab == mv(&pb, &pa), || format!("{a:?} {b:?}: not symmetric"))?;
    let ac = mv(&pa, &pc);
    let sum = pb.minkowski_sum(&pc).map_err(|e| e.to_string())?;
    ensure(mv(&pa, &sum) == &ab + &ac, || format!("{a:?} {b:?} {c:?}: not additive"))?;
    ensure(mv(&pa, &pa) == BigInt::from(twice_area(&a)), || format!("{a:?}: MV(P, P)"))?;
    let ab_sum: Vec<[i64; 2]> =
        a.iter().flat_map(|p| b.iter().map(move |q| [p[0] + q[0], p[1] + q[1]])).collect();
    let oracle = (twice_area(&hull_2d(&ab_sum)) - twice_area(&a) - twice_area(&b)) / 2;
    ensure(ab == BigInt::from(oracle), || format!("{a:?} {b:?}: MV {ab}, inclusion-exclusion {oracle}"))
}

/// `P_{D_P} = P` on the normal fan of `P`.
pub fn polytope_divisor_round_trip<R: Rng>(rng: &mut R) -> Check {
    let (_, h) = random_polygon(rng, 3);
    let p = polytope(&h);
    let fan = normal_fan(&p).map_err(|e| e.to_string())?;
    let d = polytope_divisor(&p, &fan).map_err(|e| e.to_string())?;
    let pd = divisor_polyhedron(&fan, &d).map_err(|e| e.to_string())?;
    let got: BTreeSet<Vec<BigRational>> = pd.vertices.into_iter().collect();
    let want: BTreeSet<Vec<BigRational>> =
        h.iter().map(|v| v.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    ensure(got == want, || format!("{h:?}: P_(D_P) has vertices {got:?}"))?;
    let n_pts = pd.lattice_points.map(|v| v.len());
    ensure(n_pts == Some(polygon_points(&h, 1).len()), || format!("{h:?}: lattice points of P_(D_P)"))
}

/// Fans that violate one validity condition each.
pub fn invalid_fans() -> Vec<(&'static str, toric_core::Result<Fan>)> {
    vec![
        (
            "overlapping cones",
            Fan::from_i64(2, &[&[1, 0], &[1, 2], &[1, 1], &[0, 1]], &[&[0, 1], &[2, 3]]),
        ),
        ("cone containing a line", Fan::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1]], &[&[0, 1, 2]])),
        ("zero ray", Fan::from_i64(2, &[&[1, 0], &[0, 0]], &[&[0, 1]])),
        ("non-extreme listed ray", Fan::from_i64(2, &[&[1, 0], &[1, 1], &[0, 1]], &[&[0, 1, 2]])),
        ("ray of the wrong length", Fan::from_i64(2, &[&[1, 0], &[0, 1, 0]], &[&[0, 1]])),
        ("cone index out of range", Fan::from_i64(2, &[&[1, 0], &[0, 1]], &[&[0, 2]])),
        ("cones crossing in their interiors", {
            Fan::from_i64(3, &[&[1, 0, 1], &[-1, 0, 1], &[0, 1, 1], &[0, -1, 1]], &[&[0, 1], &[2, 3]])
        }),
    ]
}

pub fn invalid_fans_rejected() -> Check {
    for (what, res) in invalid_fans() {
        ensure(res.is_err(), || format!("accepted a fan with {what}"))?;
    }
    Ok(())
}
