//! Polyhedral fans: validation, normal fans, global predicates, subdivisions,
//! products, orbit data, quotient fans and toric-morphism compatibility.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::cones::{semigroup_member, separating_character, Cone};
use crate::error::{Error, Result};
use crate::polytopes::LatticePolytope;
use crate::zlattice::{
    add_vec, cokernel, dot, is_zero_vec, primitive, rank_of_rows, scale_vec, sub_vec, IVec,
    IntegerMatrix,
};

/// Linear map `N₁ → N₂` given by an `n₂ × n₁` integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeMap {
    pub matrix: IntegerMatrix,
}

impl LatticeMap {
    pub fn apply(&self, v: &[BigInt]) -> IVec {
        self.matrix.mul_vec(v)
    }
}

/// A fan given by primitive rays and maximal cones as sorted ray-index sets.
#[derive(Clone, Debug)]
pub struct Fan {
    ambient: usize,
    rays: Vec<IVec>,
    max_cones: Vec<Vec<usize>>,
    cones: Vec<Cone>,
}

impl PartialEq for Fan {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.rays == other.rays && self.max_cones == other.max_cones
    }
}

/// One torus orbit `O(σ)`: its cone, dimension `n − dim σ`, and the orbits in its closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitEntry {
    pub cone: Vec<usize>,
    pub orbit_dim: usize,
    /// Table indices of the cones having this cone as a face.
    pub closure: Vec<usize>,
}

/// Transition data between the affine charts of two maximal cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartTransition {
    pub m: IVec,
    /// Generators of `S_σ₁`.
    pub source_basis: Vec<IVec>,
    /// Generators of `S_σ₂`.
    pub target_basis: Vec<IVec>,
    /// Row `i` expresses `target_basis[i]` as a ℤ-combination of `source_basis`.
    pub expressions: IntegerMatrix,
}

impl Fan {
    /// Validated fan. Duplicate rays are merged; listed cones contained in others are dropped.
    pub fn new(ambient: usize, rays: &[IVec], max_cones: &[Vec<usize>]) -> Result<Fan> {
        let mut uniq: Vec<IVec> = Vec::new();
        let mut remap = Vec::with_capacity(rays.len());
        for r in rays {
            if r.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, found: r.len() });
            }
            if is_zero_vec(r) {
                return Err(Error::InvalidFan("zero ray".into()));
            }
            let p = primitive(r);
            match uniq.iter().position(|u| *u == p) {
                Some(i) => remap.push(i),
                None => {
                    remap.push(uniq.len());
                    uniq.push(p);
                }
            }
        }
        let mut sets: Vec<Vec<usize>> = Vec::new();
        for c in max_cones {
            let mut s = BTreeSet::new();
            for &i in c {
                if i >= rays.len() {
                    return Err(Error::IndexOutOfRange { index: i, len: rays.len() });
                }
                s.insert(remap[i]);
            }
            sets.push(s.into_iter().collect());
        }
        if sets.is_empty() {
            sets.push(Vec::new());
        }
        let mut cones = Vec::with_capacity(sets.len());
        for (j, s) in sets.iter().enumerate() {
            let gens: Vec<IVec> = s.iter().map(|&i| uniq[i].clone()).collect();
            let c = Cone::new(ambient, &gens)?;
            if !c.is_pointed() {
                return Err(Error::ConeNotPointed(j));
            }
            if c.ray_vectors().len() != s.len() {
                return Err(Error::RayNotExtreme(j));
            }
            cones.push(c);
        }
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                let tau = cones[i].intersection(&cones[j]);
                if !cones[i].has_face(&tau) || !cones[j].has_face(&tau) {
                    return Err(Error::BadIntersection(i, j));
                }
            }
        }
        // Drop cones that are faces of other listed cones.
        let keep: Vec<bool> = (0..sets.len())
            .map(|i| {
                !(0..sets.len()).any(|j| {
                    j != i
                        && sets[i].iter().all(|x| sets[j].contains(x))
                        && (sets[i].len() < sets[j].len() || j < i)
                })
            })
            .collect();
        let mut ms = Vec::new();
        let mut cs = Vec::new();
        for (i, (s, c)) in sets.into_iter().zip(cones).enumerate() {
            if keep[i] {
                ms.push(s);
                cs.push(c);
            }
        }
        let used: BTreeSet<usize> = ms.iter().flatten().cloned().collect();
        if used.len() != uniq.len() {
            return Err(Error::InvalidFan("a ray lies in no cone".into()));
        }
        Ok(Fan { ambient, rays: uniq, max_cones: ms, cones: cs })
    }

    pub fn from_i64(ambient: usize, rays: &[&[i64]], max_cones: &[&[usize]]) -> Result<Fan> {
        let cones: Vec<Vec<usize>> = max_cones.iter().map(|c| c.to_vec()).collect();
        Fan::new(ambient, &crate::zlattice::ivecs(rays), &cones)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rays(&self) -> &[IVec] {
        &self.rays
    }

    /// `F = [u₁ ⋯ u_k]`, rays as columns.
    pub fn ray_matrix(&self) -> IntegerMatrix {
        IntegerMatrix::from_columns(self.ambient, &self.rays)
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    pub fn max_cone(&self, i: usize) -> &Cone {
        &self.cones[i]
    }

    pub fn cone_of(&self, idx: &[usize]) -> Cone {
        let gens: Vec<IVec> = idx.iter().map(|&i| self.rays[i].clone()).collect();
        Cone::new(self.ambient, &gens).expect("rays have the ambient length")
    }

    /// Every cone of the fan as a sorted ray-index set, ordered by dimension then indices.
    pub fn all_cones(&self) -> Vec<Vec<usize>> {
        let mut set: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
        for (s, c) in self.max_cones.iter().zip(&self.cones) {
            for local in c.face_ray_sets() {
                let global: Vec<usize> = local.iter().map(|&i| s[i]).collect();
                set.insert((global.len(), global));
            }
        }
        // Simplicial faces have dimension = ray count; for the rest use the rank.
        let mut v: Vec<(usize, Vec<usize>)> = set
            .into_iter()
            .map(|(_, g)| {
                let vecs: Vec<IVec> = g.iter().map(|&i| self.rays[i].clone()).collect();
                (rank_of_rows(&vecs, self.ambient), g)
            })
            .collect();
        v.sort();
        v.into_iter().map(|(_, g)| g).collect()
    }

    pub fn is_smooth(&self) -> bool {
        self.cones.iter().all(|c| c.is_smooth())
    }

    pub fn is_simplicial(&self) -> bool {
        self.cones.iter().all(|c| c.is_simplicial())
    }

    /// Smoothness of each maximal cone, in listed order.
    pub fn smoothness_vector(&self) -> Vec<bool> {
        self.cones.iter().map(|c| c.is_smooth()).collect()
    }

    /// Facets of each full-dimensional maximal cone as ray-index sets.
    fn facet_sets(&self, i: usize) -> Vec<Vec<usize>> {
        let s = &self.max_cones[i];
        let c = &self.cones[i];
        c.facets()
            .iter()
            .map(|f| s.iter().cloned().filter(|&r| dot(f, &self.rays[r]).is_zero()).collect())
            .collect()
    }

    /// All maximal cones are full-dimensional and each of their facets lies in exactly two.
    pub fn is_complete(&self) -> bool {
        let n = self.ambient;
        if self.cones.iter().any(|c| c.dim() != n) {
            return false;
        }
        if n == 0 {
            return true;
        }
        let mut count: HashMap<Vec<usize>, usize> = HashMap::new();
        for i in 0..self.cones.len() {
            for f in self.facet_sets(i) {
                *count.entry(f).or_insert(0) += 1;
            }
        }
        count.values().all(|&c| c == 2)
    }

    pub fn has_torus_factor(&self) -> bool {
        rank_of_rows(&self.rays, self.ambient) < self.ambient
    }

    /// Replaces a smooth full-dimensional maximal cone by its subdivision through `u₀ = Σ uᵢ`.
    pub fn star_subdivision(&self, cone: usize) -> Result<Fan> {
        if cone >= self.cones.len() {
            return Err(Error::IndexOutOfRange { index: cone, len: self.cones.len() });
        }
        let c = &self.cones[cone];
        if !c.is_smooth() || c.dim() != self.ambient {
            return Err(Error::NotSmoothFullDim(cone));
        }
        let s = &self.max_cones[cone];
        let u0 = s.iter().fold(vec![BigInt::zero(); self.ambient], |acc, &i| add_vec(&acc, &self.rays[i]));
        let mut rays = self.rays.clone();
        let new = rays.len();
        rays.push(u0);
        let mut cones: Vec<Vec<usize>> = Vec::new();
        for (j, t) in self.max_cones.iter().enumerate() {
            if j != cone {
                cones.push(t.clone());
                continue;
            }
            for &drop in t {
                let mut c: Vec<usize> = t.iter().cloned().filter(|&r| r != drop).collect();
                c.push(new);
                cones.push(c);
            }
        }
        Fan::new(self.ambient, &rays, &cones)
    }

    /// Cones `σ₁ × σ₂` in `N₁ ⊕ N₂`.
    pub fn product(&self, other: &Fan) -> Fan {
        let n = self.ambient + other.ambient;
        let mut rays: Vec<IVec> = Vec::new();
        for r in &self.rays {
            let mut v = r.clone();
            v.extend(std::iter::repeat_n(BigInt::zero(), other.ambient));
            rays.push(v);
        }
        for r in &other.rays {
            let mut v = vec![BigInt::zero(); self.ambient];
            v.extend(r.iter().cloned());
            rays.push(v);
        }
        let k = self.rays.len();
        let mut cones = Vec::new();
        for a in &self.max_cones {
            for b in &other.max_cones {
                let mut c = a.clone();
                c.extend(b.iter().map(|&i| i + k));
                cones.push(c);
            }
        }
        Fan::new(n, &rays, &cones).expect("products of fans are fans")
    }

    /// The cone whose relative interior contains `u`, if `u` lies in the support.
    pub fn cone_containing_relint(&self, u: &[BigInt]) -> Option<Vec<usize>> {
        if u.len() != self.ambient {
            return None;
        }
        self.all_cones().into_iter().find(|s| self.cone_of(s).relint_contains(u))
    }

    /// Fan of `V(τ)` in `N/N_τ`, with the quotient map.
    pub fn star_quotient(&self, tau: &[usize]) -> Result<(Fan, LatticeMap)> {
        let mut t: Vec<usize> = tau.to_vec();
        t.sort();
        t.dedup();
        if !self.all_cones().contains(&t) {
            return Err(Error::Invalid(format!("{tau:?} is not a cone of the fan")));
        }
        let r = IntegerMatrix::from_columns(
            self.ambient,
            &t.iter().map(|&i| self.rays[i].clone()).collect::<Vec<_>>(),
        );
        let ck = cokernel(&r);
        let f = ck.group.free_rank;
        let q = ck.proj.select_rows(&(0..f).collect::<Vec<_>>());
        let map = LatticeMap { matrix: q };
        let mut rays: Vec<IVec> = Vec::new();
        let mut cones: Vec<Vec<usize>> = Vec::new();
        for s in &self.max_cones {
            if !t.iter().all(|i| s.contains(i)) {
                continue;
            }
            let mut c = Vec::new();
            for &i in s {
                if t.contains(&i) {
                    continue;
                }
                let img = primitive(&map.apply(&self.rays[i]));
                let idx = match rays.iter().position(|x| *x == img) {
                    Some(k) => k,
                    None => {
                        rays.push(img);
                        rays.len() - 1
                    }
                };
                c.push(idx);
            }
            cones.push(c);
        }
        Ok((Fan::new(f, &rays, &cones)?, map))
    }

    /// All torus orbits with dimensions and closure relations.
    pub fn orbit_table(&self) -> Vec<OrbitEntry> {
        let cones = self.all_cones();
        let dims: Vec<usize> = cones
            .iter()
            .map(|s| rank_of_rows(&s.iter().map(|&i| self.rays[i].clone()).collect::<Vec<_>>(), self.ambient))
            .collect();
        (0..cones.len())
            .map(|i| OrbitEntry {
                cone: cones[i].clone(),
                orbit_dim: self.ambient - dims[i],
                closure: (0..cones.len())
                    .filter(|&j| cones[i].iter().all(|x| cones[j].contains(x)))
                    .collect(),
            })
            .collect()
    }

    /// Minimal cone of `self` containing `F(σ₁)`, if any.
    pub fn image_cone(&self, f: &LatticeMap, sigma: &Cone) -> Option<Vec<usize>> {
        let imgs: Vec<IVec> = sigma.generators().iter().map(|g| f.apply(g)).collect();
        let p = imgs.iter().fold(vec![BigInt::zero(); self.ambient], |acc, g| add_vec(&acc, g));
        let tau = self.cone_containing_relint(&p)?;
        let c = self.cone_of(&tau);
        imgs.iter().all(|g| c.contains(g)).then_some(tau)
    }

    /// Every cone of `self` maps into a cone of `target`.
    pub fn is_compatible(&self, f: &LatticeMap, target: &Fan) -> bool {
        if f.matrix.rows() != target.ambient || f.matrix.cols() != self.ambient {
            return false;
        }
        self.cones.iter().all(|c| target.image_cone(f, c).is_some())
    }

    /// Every cone lies in a cone of `coarse` and the supports coincide.
    pub fn is_refinement_of(&self, coarse: &Fan) -> bool {
        if self.ambient != coarse.ambient {
            return false;
        }
        if !self.cones.iter().all(|c| coarse.cones.iter().any(|d| d.contains_cone(c))) {
            return false;
        }
        // Each coarse cone must be covered: facets of the fine cones of full dimension inside it
        // pair up, except those on its boundary, which occur once.
        for big in &coarse.cones {
            let d = big.dim();
            if d == 0 {
                continue;
            }
            let inside: Vec<usize> =
                (0..self.cones.len()).filter(|&i| self.cones[i].dim() == d && big.contains_cone(&self.cones[i])).collect();
            if inside.is_empty() {
                return false;
            }
            let mut count: HashMap<Vec<usize>, usize> = HashMap::new();
            for &i in &inside {
                for f in self.facet_sets(i) {
                    *count.entry(f).or_insert(0) += 1;
                }
            }
            for (f, c) in count {
                let boundary = big
                    .facets()
                    .iter()
                    .any(|nrm| f.iter().all(|&r| dot(nrm, &self.rays[r]).is_zero()));
                if c != if boundary { 1 } else { 2 } {
                    return false;
                }
            }
        }
        true
    }

    /// Separating character and chart-gluing exponents from `S_σ₁` to `S_σ₂`.
    pub fn chart_transition(&self, i: usize, j: usize) -> Result<ChartTransition> {
        for &k in &[i, j] {
            if k >= self.cones.len() {
                return Err(Error::IndexOutOfRange { index: k, len: self.cones.len() });
            }
        }
        let (s1, s2) = (&self.cones[i], &self.cones[j]);
        let m = separating_character(s1, s2)?;
        let dual1 = s1.dual();
        let src = dual1.semigroup_generators();
        let tgt = s2.dual().semigroup_generators();
        let m_expr = semigroup_member(&src, &m).ok_or(Error::NotCommonFace)?;
        let mut rows = Vec::new();
        for h in &tgt {
            // Least k ≥ 0 with h + k·m ∈ σ₁^∨; then h = (h + k·m) − k·m.
            let mut k = BigInt::zero();
            if !dual1.contains(h) {
                for f in dual1.facets() {
                    let hv = dot(f, h);
                    let mv = dot(f, &m);
                    if hv.is_negative() {
                        if !mv.is_positive() {
                            return Err(Error::NotCommonFace);
                        }
                        let need = (-hv).div_ceil(&mv);
                        if need > k {
                            k = need;
                        }
                    }
                }
            }
            let shifted = add_vec(h, &scale_vec(&k, &m));
            let c = semigroup_member(&src, &shifted).ok_or(Error::NotCommonFace)?;
            rows.push(sub_vec(&c, &scale_vec(&k, &m_expr)));
        }
        Ok(ChartTransition {
            m,
            source_basis: src.clone(),
            target_basis: tgt,
            expressions: IntegerMatrix::from_rows(src.len(), &rows),
        })
    }
}

/// Normal fan of a full-dimensional polytope: rays are the facet normals (facet order),
/// maximal cones are indexed by vertices (vertex order).
pub fn normal_fan(p: &LatticePolytope) -> Result<Fan> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional { dim: p.dim(), ambient: p.ambient_dim() });
    }
    let rays: Vec<IVec> = p.facets().iter().map(|f| f.normal.clone()).collect();
    let cones: Vec<Vec<usize>> = p
        .vertices()
        .iter()
        .map(|v| (0..rays.len()).filter(|&i| p.facets()[i].value(v).is_zero()).collect())
        .collect();
    Fan::new(p.ambient_dim(), &rays, &cones)
}

/// Group the maximal cones by ray support for stable lookups.
pub fn cone_index(fan: &Fan) -> BTreeMap<Vec<usize>, usize> {
    fan.max_cones().iter().cloned().enumerate().map(|(i, s)| (s, i)).collect()
}
