//! Lattice polytopes: hulls, lattice points, dilates, Minkowski sums, volumes,
//! mixed volumes, Ehrhart polynomials and normality predicates.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cones::{pulling_triangulation, semigroup_member, span_lattice_basis, Cone};
use crate::error::{Error, Result};
use crate::fans::{normal_fan, Fan};
use crate::zlattice::{
    add_vec, dot, interpolate, scale_vec, solve_integer, sub_vec, IVec, IntegerMatrix,
    RationalPolynomial,
};

/// Facet inequality `⟨normal, x⟩ + offset ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: IVec,
    pub offset: BigInt,
}

impl Facet {
    pub fn value(&self, x: &[BigInt]) -> BigInt {
        dot(&self.normal, x) + &self.offset
    }
}

/// Convex hull of finitely many lattice points.
///
/// Vertices are sorted lexicographically and facets by `(normal, offset)`. `equations`
/// cut out the affine hull (empty when full-dimensional).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePolytope {
    ambient: usize,
    vertices: Vec<IVec>,
    facets: Vec<Facet>,
    equations: Vec<Facet>,
}

/// Exponent vectors of a Laurent polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSupport {
    pub ambient: usize,
    pub exponents: Vec<IVec>,
}

/// `x ↦ origin + basis·y`, a bijection from `ℤ^d` onto the lattice points of an affine span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineLatticeMap {
    pub origin: IVec,
    pub basis: IntegerMatrix,
}

impl AffineLatticeMap {
    pub fn to_ambient(&self, y: &[BigInt]) -> IVec {
        add_vec(&self.origin, &self.basis.mul_vec(y))
    }

    pub fn to_local(&self, x: &[BigInt]) -> Option<IVec> {
        solve_integer(&self.basis, &sub_vec(x, &self.origin))
    }
}

impl LatticePolytope {
    pub fn hull(ambient: usize, points: &[IVec]) -> Result<LatticePolytope> {
        if points.is_empty() {
            return Err(Error::EmptyConfiguration);
        }
        for p in points {
            if p.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, found: p.len() });
            }
        }
        let lifted: Vec<IVec> = points
            .iter()
            .map(|p| {
                let mut q = p.clone();
                q.push(BigInt::one());
                q
            })
            .collect();
        let cone = Cone::new(ambient + 1, &lifted)?;
        let split = |v: &IVec| Facet { normal: v[..ambient].to_vec(), offset: v[ambient].clone() };
        let mut vertices: Vec<IVec> = cone.ray_vectors().iter().map(|r| r[..ambient].to_vec()).collect();
        vertices.sort();
        // For a point the homogenized cone is a ray whose only facet is tight nowhere.
        let mut facets: Vec<Facet> = cone
            .facets()
            .iter()
            .map(split)
            .filter(|f| vertices.iter().any(|v| f.value(v).is_zero()))
            .collect();
        facets.sort();
        let equations = cone.equations().iter().map(split).collect();
        Ok(LatticePolytope { ambient, vertices, facets, equations })
    }

    pub fn from_i64(points: &[&[i64]]) -> Result<LatticePolytope> {
        let n = points.first().map_or(0, |p| p.len());
        Self::hull(n, &crate::zlattice::ivecs(points))
    }

    pub fn from_columns(points: &IntegerMatrix) -> Result<LatticePolytope> {
        Self::hull(points.rows(), &points.column_vecs())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.equations.len()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn vertices(&self) -> &[IVec] {
        &self.vertices
    }

    pub fn vertex_matrix(&self) -> IntegerMatrix {
        IntegerMatrix::from_columns(self.ambient, &self.vertices)
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn equations(&self) -> &[Facet] {
        &self.equations
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.equations.iter().all(|e| e.value(x).is_zero())
            && self.facets.iter().all(|f| !f.value(x).is_negative())
    }

    /// Indices of the vertices lying on each facet.
    pub fn facet_vertex_sets(&self) -> Vec<BTreeSet<usize>> {
        self.facets
            .iter()
            .map(|f| (0..self.vertices.len()).filter(|&i| f.value(&self.vertices[i]).is_zero()).collect())
            .collect()
    }

    pub fn translate(&self, m: &[BigInt]) -> LatticePolytope {
        let pts: Vec<IVec> = self.vertices.iter().map(|v| add_vec(v, m)).collect();
        Self::hull(self.ambient, &pts).expect("nonempty vertex set")
    }

    pub fn dilate(&self, k: u64) -> LatticePolytope {
        let k = BigInt::from(k);
        let pts: Vec<IVec> = self.vertices.iter().map(|v| scale_vec(&k, v)).collect();
        Self::hull(self.ambient, &pts).expect("nonempty vertex set")
    }

    pub fn minkowski_sum(&self, other: &LatticePolytope) -> Result<LatticePolytope> {
        if other.ambient != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        let mut pts = BTreeSet::new();
        for v in &self.vertices {
            for w in &other.vertices {
                pts.insert(add_vec(v, w));
            }
        }
        Self::hull(self.ambient, &pts.into_iter().collect::<Vec<_>>())
    }

    /// Image in a basis of the saturated lattice of the affine span.
    ///
    /// Full-dimensional polytopes map by the identity. Otherwise the lexicographically
    /// smallest vertex goes to the origin and the Hermite basis of the span lattice is used.
    pub fn project_full(&self) -> (LatticePolytope, AffineLatticeMap) {
        let n = self.ambient;
        if self.is_full_dimensional() {
            let map = AffineLatticeMap { origin: vec![BigInt::zero(); n], basis: IntegerMatrix::identity(n) };
            return (self.clone(), map);
        }
        let origin = self.vertices[0].clone();
        let diffs: Vec<IVec> = self.vertices[1..].iter().map(|v| sub_vec(v, &origin)).collect();
        let basis = span_lattice_basis(n, &diffs);
        let map = AffineLatticeMap { origin, basis };
        let d = map.basis.cols();
        let local: Vec<IVec> = self
            .vertices
            .iter()
            .map(|v| map.to_local(v).expect("vertex lies in the span lattice"))
            .collect();
        (Self::hull(d, &local).expect("nonempty vertex set"), map)
    }

    /// All lattice points, sorted lexicographically.
    pub fn lattice_points(&self) -> Vec<IVec> {
        let (q, map) = self.project_full();
        let mut pts: Vec<IVec> = Vec::new();
        q.visit_dilate_points(1, &mut |y| pts.push(map.to_ambient(y)));
        pts.sort();
        pts
    }

    pub fn lattice_point_matrix(&self) -> IntegerMatrix {
        IntegerMatrix::from_columns(self.ambient, &self.lattice_points())
    }

    /// Number of lattice points of `k·P` for a full-dimensional `P`.
    fn count_dilate(&self, k: u64) -> u64 {
        let mut c = 0u64;
        self.visit_dilate_points(k, &mut |_| c += 1);
        c
    }

    /// Visits every lattice point of `k·P`; requires a full-dimensional polytope.
    fn visit_dilate_points(&self, k: u64, f: &mut dyn FnMut(&[BigInt])) {
        assert!(self.is_full_dimensional());
        let n = self.ambient;
        let kb = BigInt::from(k);
        if n == 0 {
            f(&[]);
            return;
        }
        let lo: IVec = (0..n).map(|i| self.vertices.iter().map(|v| &v[i] * &kb).min().unwrap()).collect();
        let hi: IVec = (0..n).map(|i| self.vertices.iter().map(|v| &v[i] * &kb).max().unwrap()).collect();
        let facets: Vec<(IVec, BigInt)> =
            self.facets.iter().map(|fc| (fc.normal.clone(), &fc.offset * &kb)).collect();
        let small = facets
            .iter()
            .flat_map(|(u, a)| u.iter().chain(std::iter::once(a)))
            .chain(lo.iter())
            .chain(hi.iter())
            .all(|x| x.bits() < 40);
        if small {
            let to = |x: &BigInt| x.to_i128().expect("checked bit size");
            let fs: Vec<(Vec<i128>, i128)> =
                facets.iter().map(|(u, a)| (u.iter().map(to).collect(), to(a))).collect();
            let lo: Vec<i128> = lo.iter().map(to).collect();
            let hi: Vec<i128> = hi.iter().map(to).collect();
            let mut conv = |p: &[i128]| {
                let v: IVec = p.iter().map(|&x| BigInt::from(x)).collect();
                f(&v)
            };
            box_points(&fs, &lo, &hi, &mut conv);
        } else {
            box_points(&facets, &lo, &hi, &mut |p: &[BigInt]| f(p));
        }
    }

    /// Euclidean volume in the ambient space (zero unless full-dimensional).
    pub fn volume(&self) -> BigRational {
        if !self.is_full_dimensional() {
            return BigRational::zero();
        }
        BigRational::new(self.scaled_volume(), factorial(self.ambient))
    }

    /// `n!·Vol`, computed through a pulling triangulation from the first vertex.
    fn scaled_volume(&self) -> BigInt {
        let n = self.ambient;
        if n == 0 {
            return BigInt::one();
        }
        let lifted: Vec<IVec> = self
            .vertices
            .iter()
            .map(|v| {
                let mut q = v.clone();
                q.push(BigInt::one());
                q
            })
            .collect();
        let simplices = pulling_triangulation(&lifted, &self.facet_vertex_sets());
        simplices
            .iter()
            .map(|s| {
                let cols: Vec<IVec> = s.iter().map(|&i| lifted[i].clone()).collect();
                IntegerMatrix::from_columns(n + 1, &cols).det().abs()
            })
            .sum()
    }

    /// `d!·Vol` measured in the saturated lattice of the affine span (`d = dim P`).
    pub fn normalized_volume(&self) -> BigInt {
        let (q, _) = self.project_full();
        q.scaled_volume()
    }

    /// Ehrhart polynomial, by counting dilates `d = 0..dim` in the span lattice.
    pub fn ehrhart(&self) -> RationalPolynomial {
        let (q, _) = self.project_full();
        let d = q.ambient;
        let pts: Vec<(BigInt, BigRational)> = (0..=d as u64)
            .map(|k| (BigInt::from(k), BigRational::from_integer(q.count_dilate(k).into())))
            .collect();
        interpolate(&pts).expect("distinct abscissae")
    }

    /// Number of lattice points of `k·P`.
    pub fn count_dilate_points(&self, k: u64) -> u64 {
        let (q, _) = self.project_full();
        q.count_dilate(k)
    }

    /// The face minimizing `⟨u, ·⟩`.
    pub fn face_in_direction(&self, u: &[BigInt]) -> Result<LatticePolytope> {
        if u.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: u.len() });
        }
        let min = self.vertices.iter().map(|v| dot(u, v)).min().expect("nonempty");
        let pts: Vec<IVec> = self.vertices.iter().filter(|v| dot(u, v) == min).cloned().collect();
        Self::hull(self.ambient, &pts)
    }

    /// `(P∩M) + (kP∩M) = ((k+1)P)∩M` for `k = 1..dim−1`, in the span lattice.
    pub fn is_normal(&self) -> bool {
        let (q, _) = self.project_full();
        let d = q.ambient;
        let base = q.lattice_points();
        let mut prev: Vec<IVec> = base.clone();
        for k in 1..d as u64 {
            let sums: HashSet<IVec> =
                base.iter().flat_map(|p| prev.iter().map(move |r| add_vec(p, r))).collect();
            let next = q.dilate(k + 1).lattice_points();
            if next.iter().any(|p| !sums.contains(p)) {
                return false;
            }
            prev = next;
        }
        true
    }

    /// Every Hilbert basis element of `Cone(P∩M − v)` lies in `ℕ(P∩M − v)`, for each vertex `v`.
    pub fn is_very_ample(&self) -> bool {
        let (q, _) = self.project_full();
        let pts = q.lattice_points();
        q.vertices.iter().all(|v| {
            let gens: Vec<IVec> = pts.iter().map(|p| sub_vec(p, v)).filter(|g| g.iter().any(|x| !x.is_zero())).collect();
            if gens.is_empty() {
                return true;
            }
            let cone = Cone::new(q.ambient, &gens).expect("ambient length");
            let hb = cone.hilbert_basis().expect("vertex cone is pointed");
            hb.elements.iter().all(|h| semigroup_member(&gens, h).is_some())
        })
    }

    /// Smoothness of the normal fan, in the span lattice.
    pub fn is_smooth(&self) -> bool {
        let (q, _) = self.project_full();
        normal_fan(&q).map(|f| f.is_smooth()).unwrap_or(false)
    }

    pub fn normal_fan(&self) -> Result<Fan> {
        normal_fan(self)
    }
}

pub fn newton_polytope(support: &LaurentSupport) -> Result<LatticePolytope> {
    LatticePolytope::hull(support.ambient, &support.exponents)
}

/// `MV(P₁,…,Pₙ) = Σ_{∅≠S} (−1)^{n−|S|} Vol(Σ_{i∈S} Pᵢ)`.
pub fn mixed_volume(ps: &[LatticePolytope]) -> Result<BigInt> {
    let n = ps.first().map_or(0, |p| p.ambient);
    if ps.len() != n || n == 0 {
        return Err(Error::WrongPolytopeCount { expected: n, found: ps.len() });
    }
    for p in ps {
        if p.ambient != n {
            return Err(Error::DimensionMismatch { expected: n, found: p.ambient });
        }
    }
    let mut total = BigRational::zero();
    for mask in 1u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let mut sum = ps[members[0]].clone();
        for &i in &members[1..] {
            sum = sum.minkowski_sum(&ps[i])?;
        }
        let v = sum.volume();
        if (n - members.len()).is_multiple_of(2) {
            total += v;
        } else {
            total -= v;
        }
    }
    assert!(total.is_integer(), "mixed volume of lattice polytopes is an integer");
    Ok(total.to_integer())
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Visits the integer points of `{x ∈ [lo, hi] : ⟨u, x⟩ + a ≥ 0}`, pruning each coordinate
/// range by the facet inequalities given the prefix chosen so far.
pub(crate) fn box_points<T>(facets: &[(Vec<T>, T)], lo: &[T], hi: &[T], f: &mut dyn FnMut(&[T]))
where
    T: Integer + Signed + Clone,
{
    let n = lo.len();
    // rest[f][i]: maximum of Σ_{j≥i} u_j x_j over the box.
    let rest: Vec<Vec<T>> = facets
        .iter()
        .map(|(u, _)| {
            let mut r = vec![T::zero(); n + 1];
            for i in (0..n).rev() {
                let a = u[i].clone() * lo[i].clone();
                let b = u[i].clone() * hi[i].clone();
                r[i] = r[i + 1].clone() + if a > b { a } else { b };
            }
            r
        })
        .collect();
    let partial: Vec<T> = facets.iter().map(|(_, a)| a.clone()).collect();
    let mut x = vec![T::zero(); n];
    box_rec(0, facets, lo, hi, &rest, partial, &mut x, f);
}

#[allow(clippy::too_many_arguments)]
fn box_rec<T>(
    i: usize,
    facets: &[(Vec<T>, T)],
    lo: &[T],
    hi: &[T],
    rest: &[Vec<T>],
    partial: Vec<T>,
    x: &mut Vec<T>,
    f: &mut dyn FnMut(&[T]),
) where
    T: Integer + Signed + Clone,
{
    let n = lo.len();
    if i == n {
        if partial.iter().all(|p| !p.is_negative()) {
            f(x);
        }
        return;
    }
    let mut l = lo[i].clone();
    let mut h = hi[i].clone();
    for (k, (u, _)) in facets.iter().enumerate() {
        // u_i x_i ≥ −(partial + rest[i+1])
        let need = -(partial[k].clone() + rest[k][i + 1].clone());
        let c = &u[i];
        if c.is_zero() {
            if need.is_positive() {
                return;
            }
        } else if c.is_positive() {
            let b = need.div_ceil(c);
            if b > l {
                l = b;
            }
        } else {
            let b = need.div_floor(c);
            if b < h {
                h = b;
            }
        }
    }
    let mut v = l;
    while v <= h {
        let next: Vec<T> = facets
            .iter()
            .zip(&partial)
            .map(|((u, _), p)| p.clone() + u[i].clone() * v.clone())
            .collect();
        x[i] = v.clone();
        box_rec(i + 1, facets, lo, hi, rest, next, x, f);
        v = v + T::one();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlattice::{ivec, ivecs};

    fn poly(p: &[&[i64]]) -> LatticePolytope {
        LatticePolytope::from_i64(p).unwrap()
    }

    fn pentagon() -> LatticePolytope {
        poly(&[&[0, 0], &[1, 0], &[0, 1], &[2, 1], &[1, 2]])
    }

    fn brute_points(p: &LatticePolytope, k: i64) -> usize {
        // Oracle: full box scan of k·P with exact facet tests.
        let n = p.ambient_dim();
        let lo: Vec<i64> = (0..n).map(|i| p.vertices().iter().map(|v| v[i].to_i64().unwrap() * k).min().unwrap()).collect();
        let hi: Vec<i64> = (0..n).map(|i| p.vertices().iter().map(|v| v[i].to_i64().unwrap() * k).max().unwrap()).collect();
        let mut count = 0;
        let mut x = lo.clone();
        loop {
            let xb = ivec(&x);
            let ok = p.equations().iter().all(|e| (dot(&e.normal, &xb) + &e.offset * k).is_zero())
                && p.facets().iter().all(|f| !(dot(&f.normal, &xb) + &f.offset * k).is_negative());
            if ok {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                x[i] += 1;
                if x[i] <= hi[i] {
                    break;
                }
                x[i] = lo[i];
                i += 1;
            }
        }
    }

    #[test]
    fn pentagon_data() {
        let p = pentagon();
        assert_eq!(p.vertices().len(), 5);
        assert_eq!(p.facets().len(), 5);
        assert_eq!(p.lattice_points().len(), 6);
        assert_eq!(p.normalized_volume(), BigInt::from(5));
        let e = p.ehrhart();
        assert_eq!(e.to_string(), "5/2*x^2 + 5/2*x + 1");
        for k in 0..5 {
            assert_eq!(p.count_dilate_points(k) as usize, brute_points(&p, k as i64));
        }
    }

    #[test]
    fn polygon1_normals() {
        let t = poly(&[&[6, -6], &[0, 6], &[-6, 0]]);
        let normals: Vec<IVec> = t.facets().iter().map(|f| f.normal.clone()).collect();
        assert_eq!(normals, ivecs(&[&[-2, -1], &[1, -1], &[1, 2]]));
        assert!(t.facets().iter().all(|f| f.offset == BigInt::from(6)));
    }

    #[test]
    fn point_and_simplex() {
        let pt = poly(&[&[3, 4]]);
        assert_eq!(pt.dim(), 0);
        assert!(pt.facets().is_empty());
        assert_eq!(pt.lattice_points(), ivecs(&[&[3, 4]]));
        assert_eq!(pt.ehrhart(), RationalPolynomial::from_integers(&[1]));
        let d2 = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(d2.volume(), BigRational::new(1.into(), 2.into()));
        assert_eq!(d2.normalized_volume(), BigInt::one());
        assert!(d2.is_smooth() && d2.is_normal() && d2.is_very_ample());
        let sq = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(sq.normalized_volume(), BigInt::from(2));
    }

    #[test]
    fn permutohedra() {
        let pi3 = poly(&[&[1, 2, 3], &[1, 3, 2], &[2, 1, 3], &[2, 3, 1], &[3, 1, 2], &[3, 2, 1]]);
        assert_eq!(pi3.dim(), 2);
        assert_eq!(pi3.lattice_points().len(), 7);
        assert_eq!(pi3.ehrhart(), RationalPolynomial::from_integers(&[1, 3, 3]));
        let (q, _) = pi3.project_full();
        assert_eq!(q.lattice_points().len(), 7);
    }

    #[test]
    fn projections() {
        let seg = poly(&[&[0, 0], &[2, 4]]);
        let (q, map) = seg.project_full();
        assert_eq!(q.vertices(), &ivecs(&[&[0], &[2]])[..]);
        assert_eq!(map.basis.column(0), ivec(&[1, 2]));
        assert_eq!(seg.lattice_points().len(), 3);
        let full = pentagon();
        let (q, map) = full.project_full();
        assert_eq!(q, full);
        assert_eq!(map.basis, IntegerMatrix::identity(2));
    }

    #[test]
    fn minkowski_and_mixed_volume() {
        let s1 = poly(&[&[0, 0], &[1, 0]]);
        let s2 = poly(&[&[0, 0], &[0, 1]]);
        assert_eq!(s1.minkowski_sum(&s2).unwrap(), poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]));
        let p1 = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[2, 1], &[3, 1]]);
        let p2 = poly(&[&[0, 0], &[0, 1], &[1, 1], &[2, 1]]);
        assert_eq!(mixed_volume(&[p1.clone(), p2.clone()]).unwrap(), BigInt::from(3));
        assert_eq!(p1.minkowski_sum(&p2).unwrap().lattice_points().len(), 12);
        let p = pentagon();
        assert_eq!(mixed_volume(&[p.clone(), p.clone()]).unwrap(), BigInt::from(5));
        let tri2 = poly(&[&[0, 0], &[2, 0], &[0, 2]]);
        assert_eq!(mixed_volume(&[tri2.clone(), tri2]).unwrap(), BigInt::from(4));
        assert!(mixed_volume(&[p]).is_err());
        assert_eq!(p1.dilate(1), p1);
    }

    #[test]
    fn faces_in_directions() {
        let sq = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(sq.face_in_direction(&ivec(&[0, 0])).unwrap(), sq);
        assert_eq!(sq.face_in_direction(&ivec(&[1, 0])).unwrap(), poly(&[&[0, 0], &[0, 1]]));
        let t = poly(&[&[6, -6], &[0, 6], &[-6, 0]]);
        let f = t.face_in_direction(&ivec(&[1, 2])).unwrap();
        assert_eq!(f, poly(&[&[-6, 0], &[6, -6]]));
    }

    #[test]
    fn newton_polytopes() {
        let full = LaurentSupport { ambient: 2, exponents: ivecs(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[2, 0], &[0, 2]]) };
        assert_eq!(newton_polytope(&full).unwrap(), poly(&[&[0, 0], &[2, 0], &[0, 2]]));
        let bilinear = LaurentSupport { ambient: 2, exponents: ivecs(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]) };
        assert_eq!(newton_polytope(&bilinear).unwrap().vertices().len(), 4);
        let mono = LaurentSupport { ambient: 2, exponents: ivecs(&[&[2, 3]]) };
        assert_eq!(newton_polytope(&mono).unwrap().dim(), 0);
    }

    #[test]
    fn singular_triangle_is_not_smooth() {
        let t = poly(&[&[0, 0], &[1, 2], &[2, 1]]);
        assert!(!t.is_smooth());
        assert!(t.is_normal());
    }
}
