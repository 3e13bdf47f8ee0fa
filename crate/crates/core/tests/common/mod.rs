//! Random instance generators and brute-force oracles shared by the property and
//! acceptance suites. The oracles work on plain `i64` and never call the library; the
//! checks comparing the two live in `suites`.
#![allow(dead_code)]

pub mod suites;

use num_bigint::BigInt;
use rand::Rng;

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn small(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| i64::try_from(x).expect("small coordinate")).collect()
}

fn cross(o: [i64; 2], a: [i64; 2], b: [i64; 2]) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Counter-clockwise strict convex hull (monotone chain).
pub fn hull_2d(points: &[[i64; 2]]) -> Vec<[i64; 2]> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<[i64; 2]> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<[i64; 2]> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Twice the area of a counter-clockwise polygon.
pub fn twice_area(hull: &[[i64; 2]]) -> i64 {
    (0..hull.len()).map(|i| cross([0, 0], hull[i], hull[(i + 1) % hull.len()])).sum()
}

/// Lattice points of `k·conv(hull)` by scanning the bounding box.
pub fn polygon_points(hull: &[[i64; 2]], k: i64) -> Vec<[i64; 2]> {
    let scaled: Vec<[i64; 2]> = hull.iter().map(|p| [k * p[0], k * p[1]]).collect();
    let (x0, x1) = (scaled.iter().map(|p| p[0]).min().unwrap(), scaled.iter().map(|p| p[0]).max().unwrap());
    let (y0, y1) = (scaled.iter().map(|p| p[1]).min().unwrap(), scaled.iter().map(|p| p[1]).max().unwrap());
    let mut out = Vec::new();
    for x in x0..=x1 {
        for y in y0..=y1 {
            let q = [x, y];
            if (0..scaled.len()).all(|i| cross(scaled[i], scaled[(i + 1) % scaled.len()], q) >= 0) {
                out.push(q);
            }
        }
    }
    out
}

/// Full-dimensional polygon: 3 to 7 random points in `[-r, r]²`, returned with its hull.
pub fn random_polygon<R: Rng>(rng: &mut R, r: i64) -> (Vec<[i64; 2]>, Vec<[i64; 2]>) {
    loop {
        let n = rng.gen_range(3..=7);
        let pts: Vec<[i64; 2]> = (0..n).map(|_| [rng.gen_range(-r..=r), rng.gen_range(-r..=r)]).collect();
        let h = hull_2d(&pts);
        if h.len() >= 3 {
            return (pts, h);
        }
    }
}

pub fn det3(m: [[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Full-dimensional lattice tetrahedron in `[-r, r]³`.
pub fn random_simplex_3d<R: Rng>(rng: &mut R, r: i64) -> [[i64; 3]; 4] {
    loop {
        let mut v = [[0i64; 3]; 4];
        for p in v.iter_mut() {
            for c in p.iter_mut() {
                *c = rng.gen_range(-r..=r);
            }
        }
        let e = |i: usize| [v[i][0] - v[0][0], v[i][1] - v[0][1], v[i][2] - v[0][2]];
        if det3([e(1), e(2), e(3)]) != 0 {
            return v;
        }
    }
}

/// Lattice points of a tetrahedron: `q` is inside iff replacing any vertex by `q` never
/// flips the orientation sign.
pub fn simplex_points(v: &[[i64; 3]; 4]) -> usize {
    let orient = |w: &[[i64; 3]; 4]| {
        let e = |i: usize| [w[i][0] - w[0][0], w[i][1] - w[0][1], w[i][2] - w[0][2]];
        det3([e(1), e(2), e(3)]).signum()
    };
    let s = orient(v);
    let lo: Vec<i64> = (0..3).map(|c| v.iter().map(|p| p[c]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..3).map(|c| v.iter().map(|p| p[c]).max().unwrap()).collect();
    let mut count = 0;
    for x in lo[0]..=hi[0] {
        for y in lo[1]..=hi[1] {
            for z in lo[2]..=hi[2] {
                let inside = (0..4).all(|i| {
                    let mut w = *v;
                    w[i] = [x, y, z];
                    orient(&w) * s >= 0
                });
                count += usize::from(inside);
            }
        }
    }
    count
}

/// Generators of a random pointed cone in dimension 1 to 4: all generators pair positively
/// with a random interior functional.
pub fn random_pointed_cone<R: Rng>(rng: &mut R) -> (usize, Vec<Vec<i64>>) {
    let d = rng.gen_range(1..=4);
    let w: Vec<i64> = (0..d).map(|_| rng.gen_range(-2..=2)).collect();
    let w = if w.iter().all(|&x| x == 0) { vec![1; d] } else { w };
    let k = rng.gen_range(1..=6);
    let mut gens = Vec::new();
    while gens.len() < k {
        let g: Vec<i64> = (0..d).map(|_| rng.gen_range(-3..=3)).collect();
        if g.iter().zip(&w).map(|(a, b)| a * b).sum::<i64>() > 0 {
            gens.push(g);
        }
    }
    (d, gens)
}

/// Every integer vector in `[-r, r]^d`.
pub fn box_vectors(d: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..d {
        out = out.into_iter().flat_map(|v| (-r..=r).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
