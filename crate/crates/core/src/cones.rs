//! Rational polyhedral cones: double description, faces, structural predicates,
//! Hilbert bases and semigroup membership.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::zlattice::{
    dot, hnf, is_zero_vec, kernel_basis, neg_vec, primitive, rank_of_rows, scale_vec, snf,
    solve_integer, sub_vec, IVec, IntegerMatrix,
};

/// Extreme rays and lineality basis of `{x : ⟨a, x⟩ ≥ 0 (a ∈ ineqs), ⟨e, x⟩ = 0 (e ∈ eqs)}`.
#[derive(Clone, Debug)]
pub(crate) struct DoubleDescription {
    pub rays: Vec<IVec>,
    pub lineality: Vec<IVec>,
}

struct DdRay {
    v: IVec,
    zeros: Vec<bool>,
}

/// Incremental double description; inequalities are inserted in the given order.
pub(crate) fn double_description(n: usize, ineqs: &[IVec], eqs: &[IVec]) -> DoubleDescription {
    let mut lin: Vec<IVec> = (0..n)
        .map(|i| {
            let mut e = vec![BigInt::zero(); n];
            e[i] = BigInt::one();
            e
        })
        .collect();
    for e in eqs {
        restrict_lineality(&mut lin, e);
    }
    let m = ineqs.len();
    let mut rays: Vec<DdRay> = Vec::new();
    for (k, a) in ineqs.iter().enumerate() {
        if let Some(pos) = lin.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lin.remove(pos);
            let mut a0 = dot(a, &l0);
            if a0.is_negative() {
                l0 = neg_vec(&l0);
                a0 = -a0;
            }
            for l in lin.iter_mut() {
                let al = dot(a, l);
                if !al.is_zero() {
                    *l = primitive(&sub_vec(&scale_vec(&a0, l), &scale_vec(&al, &l0)));
                }
            }
            for r in rays.iter_mut() {
                let ar = dot(a, &r.v);
                if !ar.is_zero() {
                    r.v = primitive(&sub_vec(&scale_vec(&a0, &r.v), &scale_vec(&ar, &l0)));
                }
                r.zeros[k] = true;
            }
            let mut zeros = vec![false; m];
            for z in zeros.iter_mut().take(k) {
                *z = true;
            }
            rays.push(DdRay { v: primitive(&l0), zeros });
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        let mut fresh = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common: Vec<bool> =
                    (0..k).map(|j| rays[p].zeros[j] && rays[q].zeros[j]).collect();
                let adjacent = (0..rays.len()).all(|r| {
                    r == p || r == q || (0..k).any(|j| common[j] && !rays[r].zeros[j])
                });
                if !adjacent {
                    continue;
                }
                let v = sub_vec(&scale_vec(&vals[p], &rays[q].v), &scale_vec(&vals[q], &rays[p].v));
                let mut zeros = common;
                zeros.resize(m, false);
                zeros[k] = true;
                fresh.push(DdRay { v: primitive(&v), zeros });
            }
        }
        let mut next = Vec::with_capacity(rays.len() + fresh.len());
        for (i, mut r) in rays.into_iter().enumerate() {
            if vals[i].is_negative() {
                continue;
            }
            if vals[i].is_zero() {
                r.zeros[k] = true;
            }
            next.push(r);
        }
        next.extend(fresh);
        rays = next;
    }
    DoubleDescription { rays: rays.into_iter().map(|r| r.v).collect(), lineality: lin }
}

fn restrict_lineality(lin: &mut Vec<IVec>, e: &[BigInt]) {
    let Some(pos) = lin.iter().position(|l| !dot(e, l).is_zero()) else { return };
    let l0 = lin.remove(pos);
    let a0 = dot(e, &l0);
    for l in lin.iter_mut() {
        let al = dot(e, l);
        if !al.is_zero() {
            *l = primitive(&sub_vec(&scale_vec(&a0, l), &scale_vec(&al, &l0)));
        }
    }
}

/// A rational polyhedral cone held in both representations.
///
/// `rays` are primitive and minimal modulo `lineality`; `facets` are primitive inward
/// normals and `equations` is a basis of the orthogonal complement of the span.
#[derive(Clone, Debug)]
pub struct Cone {
    ambient: usize,
    rays: Vec<IVec>,
    lineality: Vec<IVec>,
    facets: Vec<IVec>,
    equations: Vec<IVec>,
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.contains_cone(other) && other.contains_cone(self)
    }
}

impl Eq for Cone {}

impl Cone {
    /// Cone generated by the given vectors; redundant and zero generators are accepted.
    pub fn new(ambient: usize, gens: &[IVec]) -> Result<Cone> {
        for g in gens {
            if g.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, found: g.len() });
            }
        }
        let nonzero: Vec<IVec> = gens.iter().filter(|g| !is_zero_vec(g)).map(|g| primitive(g)).collect();
        let dual = double_description(ambient, &nonzero, &[]);
        let facets = dual.rays;
        let equations = dual.lineality;
        let primal = double_description(ambient, &facets, &equations);
        let mut rays = Vec::new();
        if primal.lineality.is_empty() {
            // Order rays by first appearance among the inputs.
            let set: HashSet<&IVec> = primal.rays.iter().collect();
            for g in &nonzero {
                if set.contains(g) && !rays.contains(g) {
                    rays.push(g.clone());
                }
            }
            debug_assert_eq!(rays.len(), primal.rays.len());
        } else {
            rays = primal.rays;
        }
        Ok(Cone { ambient, rays, lineality: primal.lineality, facets, equations })
    }

    pub fn from_columns(gens: &IntegerMatrix) -> Cone {
        Cone::new(gens.rows(), &gens.column_vecs()).expect("columns have the ambient length")
    }

    pub fn from_i64(ambient: usize, gens: &[&[i64]]) -> Result<Cone> {
        Cone::new(ambient, &crate::zlattice::ivecs(gens))
    }

    /// `{x : ⟨a, x⟩ ≥ 0, ⟨e, x⟩ = 0}`.
    pub fn from_inequalities(ambient: usize, ineqs: &[IVec], eqs: &[IVec]) -> Cone {
        let primal = double_description(ambient, ineqs, eqs);
        let mut gens = primal.rays.clone();
        for l in &primal.lineality {
            gens.push(l.clone());
            gens.push(neg_vec(l));
        }
        let mut c = Cone::new(ambient, &gens).expect("generated vectors have ambient length");
        if primal.lineality.is_empty() {
            c.rays = primal.rays;
        }
        c
    }

    pub fn zero(ambient: usize) -> Cone {
        Cone::new(ambient, &[]).expect("empty generator set")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.equations.len()
    }

    /// Primitive extreme rays (modulo the lineality space when the cone is not pointed).
    pub fn ray_vectors(&self) -> &[IVec] {
        &self.rays
    }

    pub fn lineality(&self) -> &[IVec] {
        &self.lineality
    }

    pub fn facets(&self) -> &[IVec] {
        &self.facets
    }

    pub fn equations(&self) -> &[IVec] {
        &self.equations
    }

    /// All generators: rays and both signs of the lineality basis.
    pub fn generators(&self) -> Vec<IVec> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(neg_vec(l));
        }
        g
    }

    /// Primitive ray generators as matrix columns.
    pub fn rays(&self) -> Result<IntegerMatrix> {
        if !self.is_pointed() {
            return Err(Error::NotPointed);
        }
        Ok(IntegerMatrix::from_columns(self.ambient, &self.rays))
    }

    pub fn contains(&self, u: &[BigInt]) -> bool {
        self.equations.iter().all(|e| dot(e, u).is_zero())
            && self.facets.iter().all(|f| !dot(f, u).is_negative())
    }

    pub fn relint_contains(&self, u: &[BigInt]) -> bool {
        self.equations.iter().all(|e| dot(e, u).is_zero())
            && self.facets.iter().all(|f| dot(f, u).is_positive())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.generators().iter().all(|g| self.contains(g))
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_simplicial(&self) -> bool {
        self.is_pointed() && self.rays.len() == self.dim()
    }

    /// Rays form part of a ℤ-basis.
    pub fn is_smooth(&self) -> bool {
        if !self.is_simplicial() {
            return false;
        }
        if self.rays.is_empty() {
            return true;
        }
        let m = IntegerMatrix::from_columns(self.ambient, &self.rays);
        let (s, _, _) = snf(&m);
        (0..self.rays.len()).all(|i| s.get(i, i).is_one())
    }

    pub fn dual(&self) -> Cone {
        Cone {
            ambient: self.ambient,
            rays: self.facets.clone(),
            lineality: self.equations.clone(),
            facets: self.rays.clone(),
            equations: self.lineality.clone(),
        }
    }

    pub fn intersection(&self, other: &Cone) -> Cone {
        let mut ineqs = self.facets.clone();
        ineqs.extend(other.facets.iter().cloned());
        let mut eqs = self.equations.clone();
        eqs.extend(other.equations.iter().cloned());
        Cone::from_inequalities(self.ambient, &ineqs, &eqs)
    }

    /// Index sets (into `ray_vectors`) of all faces, smallest first.
    pub fn face_ray_sets(&self) -> Vec<Vec<usize>> {
        let tight: Vec<BTreeSet<usize>> = self
            .facets
            .iter()
            .map(|f| (0..self.rays.len()).filter(|&i| dot(f, &self.rays[i]).is_zero()).collect())
            .collect();
        let all: BTreeSet<usize> = (0..self.rays.len()).collect();
        let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        let mut stack = vec![all.clone()];
        seen.insert(all);
        while let Some(s) = stack.pop() {
            for t in &tight {
                let i: BTreeSet<usize> = s.intersection(t).cloned().collect();
                if seen.insert(i.clone()) {
                    stack.push(i);
                }
            }
        }
        let mut faces: Vec<(usize, Vec<usize>)> = seen
            .into_iter()
            .map(|s| {
                let v: Vec<usize> = s.into_iter().collect();
                let mut vecs: Vec<IVec> = v.iter().map(|&i| self.rays[i].clone()).collect();
                vecs.extend(self.lineality.iter().cloned());
                (rank_of_rows(&vecs, self.ambient), v)
            })
            .collect();
        faces.sort();
        faces.into_iter().map(|(_, v)| v).collect()
    }

    fn face_from_rays(&self, idx: &[usize]) -> Cone {
        let mut gens: Vec<IVec> = idx.iter().map(|&i| self.rays[i].clone()).collect();
        for l in &self.lineality {
            gens.push(l.clone());
            gens.push(neg_vec(l));
        }
        Cone::new(self.ambient, &gens).expect("face generators have ambient length")
    }

    /// The complete face lattice, including the minimal face and the cone itself.
    pub fn faces(&self) -> Vec<Cone> {
        self.face_ray_sets().iter().map(|s| self.face_from_rays(s)).collect()
    }

    /// `σ ∩ H_m` for `m` in the dual cone.
    pub fn face_from_character(&self, m: &[BigInt]) -> Result<Cone> {
        if m.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: m.len() });
        }
        if !self.dual().contains(m) {
            return Err(Error::NotInDual);
        }
        let idx: Vec<usize> = (0..self.rays.len()).filter(|&i| dot(m, &self.rays[i]).is_zero()).collect();
        Ok(self.face_from_rays(&idx))
    }

    /// Whether `tau` (contained in `self`) is a face of `self`.
    pub fn has_face(&self, tau: &Cone) -> bool {
        if !self.contains_cone(tau) {
            return false;
        }
        // Smallest face containing tau: facets tight on a relative-interior point of tau.
        let p = tau.generators().iter().fold(vec![BigInt::zero(); self.ambient], |acc, g| {
            acc.iter().zip(g).map(|(a, b)| a + b).collect()
        });
        let idx: Vec<usize> = (0..self.rays.len())
            .filter(|&i| {
                self.facets.iter().all(|f| !dot(f, &p).is_zero() || dot(f, &self.rays[i]).is_zero())
            })
            .collect();
        let face = self.face_from_rays(&idx);
        tau.contains_cone(&face)
    }

    /// Hilbert basis of `σ ∩ ℤⁿ`, sorted lexicographically.
    pub fn hilbert_basis(&self) -> Result<HilbertBasis> {
        if !self.is_pointed() {
            return Err(Error::NotPointed);
        }
        let mut elems = pointed_hilbert_basis(self);
        elems.sort();
        Ok(HilbertBasis { ambient: self.ambient, elements: elems })
    }

    /// Generators of the (not necessarily pointed) semigroup `σ ∩ ℤⁿ`: the Hilbert basis of
    /// the pointed quotient lifted back, followed by ± a basis of the lineality lattice.
    pub fn semigroup_generators(&self) -> Vec<IVec> {
        if self.is_pointed() {
            let mut e = pointed_hilbert_basis(self);
            e.sort();
            return e;
        }
        let n = self.ambient;
        let lin_mat = IntegerMatrix::from_columns(n, &self.lineality);
        // Saturated lineality lattice and a complement via the Smith form.
        let (s, p, _) = snf(&lin_mat);
        let r = self.lineality.len();
        debug_assert!((0..r).all(|i| !s.get(i, i).is_zero()));
        // Rows r.. of P map ℤⁿ onto ℤⁿ / (saturated lineality lattice).
        let quot_rows: Vec<IVec> = (r..n).map(|i| p.row(i).to_vec()).collect();
        let quot = IntegerMatrix::from_rows(n, &quot_rows);
        let pinv_cols = inverse_unimodular(&p);
        let image_gens: Vec<IVec> = self.rays.iter().map(|g| quot.mul_vec(g)).collect();
        let image = Cone::new(n - r, &image_gens).expect("quotient dimension");
        let mut out: Vec<IVec> = pointed_hilbert_basis(&image)
            .into_iter()
            .map(|h| {
                // Lift with the section given by the last columns of P⁻¹.
                let mut v = vec![BigInt::zero(); n];
                for (k, hk) in h.iter().enumerate() {
                    for (i, x) in v.iter_mut().enumerate() {
                        *x += hk * pinv_cols.get(i, r + k);
                    }
                }
                v
            })
            .collect();
        out.sort();
        for i in 0..r {
            let l = pinv_cols.column(i);
            out.push(l.clone());
            out.push(neg_vec(&l));
        }
        out
    }

    /// 0/1 values on the generators of `S_σ = σ^∨ ∩ M`: 1 exactly on `σ^⊥`.
    pub fn distinguished_point(&self) -> Result<DistinguishedPoint> {
        if !self.is_pointed() {
            return Err(Error::NotPointed);
        }
        let gens = self.dual().semigroup_generators();
        let values = gens
            .iter()
            .map(|m| self.rays.iter().all(|r| dot(r, m).is_zero()))
            .collect();
        Ok(DistinguishedPoint { generators: gens, values })
    }

    /// The distinguished point is torus-fixed iff the cone is full-dimensional.
    pub fn is_fixed_point(&self) -> bool {
        self.dim() == self.ambient
    }
}

/// Inverse of a unimodular matrix.
pub(crate) fn inverse_unimodular(p: &IntegerMatrix) -> IntegerMatrix {
    let n = p.rows();
    let cols: Vec<IVec> = (0..n)
        .map(|j| {
            let mut e = vec![BigInt::zero(); n];
            e[j] = BigInt::one();
            solve_integer(p, &e).expect("unimodular matrix is invertible over ℤ")
        })
        .collect();
    IntegerMatrix::from_columns(n, &cols)
}

/// Hilbert basis of a cone, elements sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBasis {
    pub ambient: usize,
    pub elements: Vec<IVec>,
}

impl HilbertBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn matrix(&self) -> IntegerMatrix {
        IntegerMatrix::from_columns(self.ambient, &self.elements)
    }
}

/// Value 1 on a generator exactly when the generator vanishes on the cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishedPoint {
    pub generators: Vec<IVec>,
    pub values: Vec<bool>,
}

/// Pulling triangulation of a pointed cone spanned by `vecs`: simplicial index sets.
///
/// `facet_sets` lists, for each facet, the indices of `vecs` lying on it.
pub(crate) fn pulling_triangulation(vecs: &[IVec], facet_sets: &[BTreeSet<usize>]) -> Vec<Vec<usize>> {
    let n = vecs.first().map_or(0, |v| v.len());
    let all: BTreeSet<usize> = (0..vecs.len()).collect();
    let rank = |s: &BTreeSet<usize>| -> usize {
        let v: Vec<IVec> = s.iter().map(|&i| vecs[i].clone()).collect();
        rank_of_rows(&v, n)
    };
    let d = rank(&all);
    let mut memo: BTreeMap<BTreeSet<usize>, Vec<Vec<usize>>> = BTreeMap::new();
    triangulate_face(&all, d, facet_sets, &rank, &mut memo)
}

fn triangulate_face(
    s: &BTreeSet<usize>,
    d: usize,
    facet_sets: &[BTreeSet<usize>],
    rank: &dyn Fn(&BTreeSet<usize>) -> usize,
    memo: &mut BTreeMap<BTreeSet<usize>, Vec<Vec<usize>>>,
) -> Vec<Vec<usize>> {
    if let Some(t) = memo.get(s) {
        return t.clone();
    }
    let out = if s.len() == d {
        vec![s.iter().cloned().collect()]
    } else {
        let apex = *s.iter().next().expect("nonempty face");
        let mut subfaces: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        for f in facet_sets {
            let i: BTreeSet<usize> = s.intersection(f).cloned().collect();
            if i.len() < s.len() && !i.contains(&apex) && i.len() + 1 >= d && rank(&i) + 1 == d {
                subfaces.insert(i);
            }
        }
        let mut out = Vec::new();
        for f in &subfaces {
            for mut simplex in triangulate_face(f, d - 1, facet_sets, rank, memo) {
                simplex.insert(0, apex);
                out.push(simplex);
            }
        }
        out
    };
    memo.insert(s.clone(), out.clone());
    out
}

/// Lattice points of the half-open parallelepiped `{Σ λᵢ gᵢ : 0 ≤ λᵢ < 1}` of a full-rank square
/// generator set, enumerated through residues modulo the Hermite form of the generators.
pub(crate) fn parallelepiped_points(gens: &[IVec]) -> Vec<IVec> {
    let n = gens.len();
    let g = IntegerMatrix::from_columns(n, gens);
    let (h, _) = hnf(&g);
    let det = g.det();
    let d_abs = det.abs();
    let adj = adjugate(&g);
    let bounds: Vec<BigInt> = (0..n).map(|i| h.get(i, i).clone()).collect();
    let mut out = Vec::new();
    let mut r = vec![BigInt::zero(); n];
    loop {
        // λ·det = adj·r ; fractional parts scaled by |det|.
        let w = adj.mul_vec(&r);
        let f: IVec = w
            .iter()
            .map(|x| if det.is_negative() { (-x).mod_floor(&d_abs) } else { x.mod_floor(&d_abs) })
            .collect();
        let p: IVec = g.mul_vec(&f).iter().map(|x| x / &d_abs).collect();
        out.push(p);
        // Advance the mixed-radix counter.
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            r[i] += 1;
            if r[i] < bounds[i] {
                break;
            }
            r[i] = BigInt::zero();
            i += 1;
        }
    }
}

pub(crate) fn adjugate(g: &IntegerMatrix) -> IntegerMatrix {
    let n = g.rows();
    let mut adj = IntegerMatrix::zeros(n, n);
    if n == 1 {
        adj.set(0, 0, BigInt::one());
        return adj;
    }
    for i in 0..n {
        for j in 0..n {
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let minor = g.select_rows(&rows).select_columns(&cols).det();
            let sign = if (i + j) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            adj.set(i, j, sign * minor);
        }
    }
    adj
}

/// Saturated basis (columns) of `span(vecs) ∩ ℤⁿ`, in Hermite form.
pub(crate) fn span_lattice_basis(n: usize, vecs: &[IVec]) -> IntegerMatrix {
    if vecs.is_empty() {
        return IntegerMatrix::zeros(n, 0);
    }
    let m = IntegerMatrix::from_columns(n, vecs);
    let orth = kernel_basis(&m.transpose());
    if orth.cols() == 0 {
        return IntegerMatrix::identity(n);
    }
    kernel_basis(&orth.transpose())
}

fn pointed_hilbert_basis(cone: &Cone) -> Vec<IVec> {
    let n = cone.ambient;
    if cone.rays.is_empty() {
        return Vec::new();
    }
    let d = cone.dim();
    if d < n {
        let basis = span_lattice_basis(n, &cone.rays);
        let coords: Vec<IVec> = cone
            .rays
            .iter()
            .map(|r| solve_integer(&basis, r).expect("ray lies in its span lattice"))
            .collect();
        let sub = Cone::new(d, &coords).expect("coordinates have span dimension");
        return pointed_hilbert_basis(&sub).iter().map(|h| basis.mul_vec(h)).collect();
    }
    let facet_sets: Vec<BTreeSet<usize>> = cone
        .facets
        .iter()
        .map(|f| (0..cone.rays.len()).filter(|&i| dot(f, &cone.rays[i]).is_zero()).collect())
        .collect();
    let simplices = pulling_triangulation(&cone.rays, &facet_sets);
    let mut candidates: BTreeSet<IVec> = cone.rays.iter().cloned().collect();
    for s in &simplices {
        let gens: Vec<IVec> = s.iter().map(|&i| cone.rays[i].clone()).collect();
        for p in parallelepiped_points(&gens) {
            if !is_zero_vec(&p) {
                candidates.insert(p);
            }
        }
    }
    // Reduce: x is reducible iff x − h ∈ σ for an irreducible h of smaller degree.
    let w: IVec = cone.facets.iter().fold(vec![BigInt::zero(); n], |acc, f| {
        acc.iter().zip(f).map(|(a, b)| a + b).collect()
    });
    let mut sorted: Vec<(BigInt, IVec)> = candidates.into_iter().map(|c| (dot(&w, &c), c)).collect();
    sorted.sort();
    let mut basis: Vec<(BigInt, IVec)> = Vec::new();
    for (deg, x) in sorted {
        let reducible = basis
            .iter()
            .any(|(dh, h)| *dh < deg && cone.contains(&sub_vec(&x, h)));
        if !reducible {
            basis.push((deg, x));
        }
    }
    basis.into_iter().map(|(_, x)| x).collect()
}

/// Nonnegative integer coefficients `c` with `Σ cᵢ gᵢ = target`, if any exist.
pub fn semigroup_member(gens: &[IVec], target: &[BigInt]) -> Option<IVec> {
    let n = target.len();
    let k = gens.len();
    if is_zero_vec(target) {
        return Some(vec![BigInt::zero(); k]);
    }
    let active: Vec<usize> = (0..k).filter(|&i| !is_zero_vec(&gens[i])).collect();
    if active.is_empty() {
        return None;
    }
    let act_gens: Vec<IVec> = active.iter().map(|&i| gens[i].clone()).collect();
    let cone = Cone::new(n, &act_gens).ok()?;
    if !cone.contains(target) {
        return None;
    }
    let all_mat = IntegerMatrix::from_columns(n, &act_gens);
    solve_integer(&all_mat, target)?;
    // Split generators into the lineality part (a group) and the pointed part.
    let in_lin = |g: &IVec| cone.facets.iter().all(|f| dot(f, g).is_zero());
    let lin_idx: Vec<usize> = (0..act_gens.len()).filter(|&i| in_lin(&act_gens[i])).collect();
    let mut pt_idx: Vec<usize> = (0..act_gens.len()).filter(|&i| !in_lin(&act_gens[i])).collect();
    let w: IVec = cone.facets.iter().fold(vec![BigInt::zero(); n], |acc, f| {
        acc.iter().zip(f).map(|(a, b)| a + b).collect()
    });
    pt_idx.sort_by(|&a, &b| dot(&w, &act_gens[b]).cmp(&dot(&w, &act_gens[a])).then(a.cmp(&b)));
    let lin_gens: Vec<IVec> = lin_idx.iter().map(|&i| act_gens[i].clone()).collect();
    let pt_gens: Vec<IVec> = pt_idx.iter().map(|&i| act_gens[i].clone()).collect();
    // Suffix cones for pruning: residual must lie in cone(pt_gens[i..] ∪ lin_gens).
    let suffix: Vec<Cone> = (0..=pt_gens.len())
        .map(|i| {
            let mut g: Vec<IVec> = pt_gens[i..].to_vec();
            g.extend(lin_gens.iter().cloned());
            Cone::new(n, &g).expect("ambient length")
        })
        .collect();
    let mut search = MemberSearch {
        pt_gens: &pt_gens,
        lin_gens: &lin_gens,
        weights: pt_gens.iter().map(|g| dot(&w, g)).collect(),
        w: &w,
        suffix: &suffix,
        failed: HashSet::new(),
        coeffs: vec![BigInt::zero(); pt_gens.len()],
    };
    let lin_coeffs = search.run(0, target.to_vec())?;
    let mut out = vec![BigInt::zero(); k];
    for (j, &i) in pt_idx.iter().enumerate() {
        out[active[i]] = search.coeffs[j].clone();
    }
    for (j, &i) in lin_idx.iter().enumerate() {
        out[active[i]] = lin_coeffs[j].clone();
    }
    Some(out)
}

struct MemberSearch<'a> {
    pt_gens: &'a [IVec],
    lin_gens: &'a [IVec],
    weights: Vec<BigInt>,
    w: &'a IVec,
    suffix: &'a [Cone],
    failed: HashSet<(usize, IVec)>,
    coeffs: Vec<BigInt>,
}

impl MemberSearch<'_> {
    /// Returns the lineality coefficients once the pointed part is fixed.
    fn run(&mut self, i: usize, residual: IVec) -> Option<IVec> {
        if !self.suffix[i].contains(&residual) || self.failed.contains(&(i, residual.clone())) {
            return None;
        }
        if i == self.pt_gens.len() {
            let r = self.finish_lineality(&residual);
            if r.is_none() {
                self.failed.insert((i, residual));
            }
            return r;
        }
        let budget = dot(self.w, &residual);
        let max = budget.div_floor(&self.weights[i]);
        let mut c = max;
        while !c.is_negative() {
            let next = sub_vec(&residual, &scale_vec(&c, &self.pt_gens[i]));
            if let Some(l) = self.run(i + 1, next) {
                self.coeffs[i] = c;
                return Some(l);
            }
            c -= 1;
        }
        self.failed.insert((i, residual));
        None
    }

    fn finish_lineality(&self, residual: &IVec) -> Option<IVec> {
        if self.lin_gens.is_empty() {
            return if is_zero_vec(residual) { Some(Vec::new()) } else { None };
        }
        let n = residual.len();
        let m = IntegerMatrix::from_columns(n, self.lin_gens);
        let x = solve_integer(&m, residual)?;
        // A strictly positive relation among the lineality generators makes x nonnegative.
        let k = self.lin_gens.len();
        let unit: Vec<IVec> = (0..k)
            .map(|i| {
                let mut e = vec![BigInt::zero(); k];
                e[i] = BigInt::one();
                e
            })
            .collect();
        let rel = double_description(k, &unit, &m.row_vecs());
        let mu = rel.rays.iter().fold(vec![BigInt::zero(); k], |acc, r| {
            acc.iter().zip(r).map(|(a, b)| a + b).collect()
        });
        if mu.iter().any(|v| !v.is_positive()) {
            return None;
        }
        let shift = (0..k)
            .map(|i| if x[i].is_negative() { (-&x[i]).div_ceil(&mu[i]) } else { BigInt::zero() })
            .max()
            .unwrap_or_default();
        Some((0..k).map(|i| &x[i] + &shift * &mu[i]).collect())
    }
}

/// A character `m ∈ σ₁^∨ ∩ (−σ₂^∨) ∩ M` cutting out `σ₁ ∩ σ₂` on both cones.
pub fn separating_character(s1: &Cone, s2: &Cone) -> Result<IVec> {
    let n = s1.ambient;
    if s2.ambient != n {
        return Err(Error::DimensionMismatch { expected: n, found: s2.ambient });
    }
    let tau = s1.intersection(s2);
    if !s1.has_face(&tau) || !s2.has_face(&tau) {
        return Err(Error::NotCommonFace);
    }
    let cuts = |m: &IVec| -> bool {
        let f1 = s1.face_from_character(m);
        let f2 = s2.face_from_character(&neg_vec(m));
        matches!((f1, f2), (Ok(a), Ok(b)) if a == tau && b == tau)
    };
    let zero = vec![BigInt::zero(); n];
    if cuts(&zero) {
        return Ok(zero);
    }
    let mut ineqs = s1.generators();
    ineqs.extend(s2.generators().iter().map(|g| neg_vec(g)));
    let c = Cone::from_inequalities(n, &ineqs, &[]);
    let cands = c.semigroup_generators();
    if let Some(m) = cands.iter().find(|m| cuts(m)) {
        return Ok(m.clone());
    }
    let relint = c.ray_vectors().iter().fold(zero, |acc, r| acc.iter().zip(r).map(|(a, b)| a + b).collect());
    if cuts(&relint) {
        return Ok(primitive(&relint));
    }
    Err(Error::NotCommonFace)
}
