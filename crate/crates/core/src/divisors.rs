//! Torus-invariant divisors on a fan: principal divisors, class and Picard groups,
//! Cartier data, section polyhedra `P_D` and the divisor of a polytope.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cones::Cone;
use crate::error::{Error, Result};
use crate::fans::Fan;
use crate::polytopes::{box_points, LatticePolytope};
use crate::zlattice::{
    cokernel, dot, kernel_basis, lattice_basis, snf, solve_integer, AbelianGroupPresentation, Cokernel, IVec,
    IntegerMatrix,
};

/// `D = Σ a_ρ D_ρ`, coefficients indexed by the rays of the fan.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Divisor {
    pub coeffs: IVec,
}

impl Divisor {
    pub fn new(coeffs: IVec) -> Self {
        Divisor { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Divisor { coeffs: crate::zlattice::ivec(c) }
    }

    pub fn zero(k: usize) -> Self {
        Divisor { coeffs: vec![BigInt::zero(); k] }
    }

    /// `D_i` (0-based).
    pub fn prime(k: usize, i: usize) -> Self {
        let mut c = vec![BigInt::zero(); k];
        c[i] = BigInt::one();
        Divisor { coeffs: c }
    }

    pub fn add(&self, other: &Divisor) -> Divisor {
        Divisor { coeffs: crate::zlattice::add_vec(&self.coeffs, &other.coeffs) }
    }

    pub fn sub(&self, other: &Divisor) -> Divisor {
        Divisor { coeffs: crate::zlattice::sub_vec(&self.coeffs, &other.coeffs) }
    }

    pub fn scale(&self, l: &BigInt) -> Divisor {
        Divisor { coeffs: crate::zlattice::scale_vec(l, &self.coeffs) }
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.iter().all(|a| !a.is_negative())
    }
}

fn check_len(fan: &Fan, d: &Divisor) -> Result<()> {
    let k = fan.rays().len();
    if d.coeffs.len() != k {
        return Err(Error::DimensionMismatch { expected: k, found: d.coeffs.len() });
    }
    Ok(())
}

/// `div(χ^m) = Σ ⟨u_ρ, m⟩ D_ρ`.
pub fn principal_divisor(fan: &Fan, m: &[BigInt]) -> Result<Divisor> {
    if m.len() != fan.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: fan.ambient_dim(), found: m.len() });
    }
    Ok(Divisor { coeffs: fan.rays().iter().map(|u| dot(u, m)).collect() })
}

/// `Cl = Div_T / im Fᵀ` with canonical class coordinates.
#[derive(Clone, Debug)]
pub struct ClassGroup {
    pub cokernel: Cokernel,
    /// The rays do not span, so `M → Div_T` is not injective.
    pub torus_factor: bool,
}

impl ClassGroup {
    pub fn group(&self) -> &AbelianGroupPresentation {
        &self.cokernel.group
    }

    /// Free coordinates, then torsion residues.
    pub fn class_of(&self, d: &Divisor) -> IVec {
        self.cokernel.class_of(&d.coeffs)
    }

    pub fn is_zero_class(&self, d: &Divisor) -> bool {
        self.cokernel.is_zero_class(&d.coeffs)
    }
}

pub fn class_group(fan: &Fan) -> ClassGroup {
    ClassGroup { cokernel: cokernel(&fan.ray_matrix().transpose()), torus_factor: fan.has_torus_factor() }
}

/// Local characters `m_σ` with `⟨u_ρ, m_σ⟩ = −a_ρ` for `ρ ∈ σ(1)`, one per maximal cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartierData {
    pub characters: Vec<IVec>,
}

/// `Fᵀ` restricted to the rays of maximal cone `i`.
fn local_matrix(fan: &Fan, i: usize) -> IntegerMatrix {
    let rows: Vec<IVec> = fan.max_cones()[i].iter().map(|&r| fan.rays()[r].clone()).collect();
    IntegerMatrix::from_rows(fan.ambient_dim(), &rows)
}

fn local_rhs(fan: &Fan, i: usize, d: &Divisor) -> IVec {
    fan.max_cones()[i].iter().map(|&r| -d.coeffs[r].clone()).collect()
}

/// Cartier data, or `NotCartier(i)` for the first maximal cone whose system has no integer solution.
pub fn cartier_data(fan: &Fan, d: &Divisor) -> Result<CartierData> {
    check_len(fan, d)?;
    let mut characters = Vec::with_capacity(fan.max_cones().len());
    for i in 0..fan.max_cones().len() {
        let m = solve_integer(&local_matrix(fan, i), &local_rhs(fan, i, d)).ok_or(Error::NotCartier(i))?;
        characters.push(m);
    }
    Ok(CartierData { characters })
}

pub fn is_cartier(fan: &Fan, d: &Divisor) -> bool {
    cartier_data(fan, d).is_ok()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CartierMultiple {
    Finite(BigInt),
    Infinite,
}

/// Least `ℓ > 0` with `ℓD` Cartier: with `P·F_σᵀ·Q = S` and `b = −a_σ`, cone `σ` needs
/// `dᵢ | ℓ(Pb)ᵢ` below the rank and `(Pb)ᵢ = 0` above it.
pub fn minimal_cartier_multiple(fan: &Fan, d: &Divisor) -> Result<CartierMultiple> {
    check_len(fan, d)?;
    let mut l = BigInt::one();
    for i in 0..fan.max_cones().len() {
        let m = local_matrix(fan, i);
        let (s, p, _) = snf(&m);
        let pb = p.mul_vec(&local_rhs(fan, i, d));
        for (k, v) in pb.iter().enumerate() {
            let dk = if k < s.cols() { s.get(k, k).clone() } else { BigInt::zero() };
            if dk.is_zero() {
                if !v.is_zero() {
                    return Ok(CartierMultiple::Infinite);
                }
            } else {
                l = l.lcm(&(&dk / dk.gcd(v)));
            }
        }
    }
    Ok(CartierMultiple::Finite(l))
}

/// Basis (columns) of `CDiv_T ⊆ ℤ^{Σ(1)}`: the intersection over maximal cones of the
/// lattices `{a : a|_σ ∈ im F_σᵀ}`, computed as one kernel of stacked conditions.
pub fn cartier_lattice(fan: &Fan) -> IntegerMatrix {
    let k = fan.rays().len();
    // Conditions on (a, z): exact rows T·a = 0 and congruences T·a − d·z = 0.
    let mut exact: Vec<IVec> = Vec::new();
    let mut congr: Vec<(IVec, BigInt)> = Vec::new();
    for i in 0..fan.max_cones().len() {
        let cone = &fan.max_cones()[i];
        let (s, p, _) = snf(&local_matrix(fan, i));
        for r in 0..p.rows() {
            // Row r of P applied to a|_σ, lifted to ℤ^k.
            let mut t = vec![BigInt::zero(); k];
            for (j, &ray) in cone.iter().enumerate() {
                t[ray] = p.get(r, j).clone();
            }
            let dr = if r < s.cols() { s.get(r, r).clone() } else { BigInt::zero() };
            if dr.is_zero() {
                exact.push(t);
            } else if !dr.is_one() {
                congr.push((t, dr));
            }
        }
    }
    let width = k + congr.len();
    let mut rows: Vec<IVec> = Vec::new();
    for t in exact {
        let mut row = t;
        row.resize(width, BigInt::zero());
        rows.push(row);
    }
    for (c, (t, dr)) in congr.iter().enumerate() {
        let mut row = t.clone();
        row.resize(width, BigInt::zero());
        row[k + c] = -dr.clone();
        rows.push(row);
    }
    if rows.is_empty() {
        return IntegerMatrix::identity(k);
    }
    let ker = kernel_basis(&IntegerMatrix::from_rows(width, &rows));
    let projected: Vec<IVec> = ker.column_vecs().into_iter().map(|v| v[..k].to_vec()).collect();
    if projected.is_empty() {
        return IntegerMatrix::zeros(k, 0);
    }
    lattice_basis(&IntegerMatrix::from_columns(k, &projected))
}

/// `Pic = CDiv_T / im Fᵀ`.
pub fn picard_group(fan: &Fan) -> AbelianGroupPresentation {
    let b = cartier_lattice(fan);
    let ft = fan.ray_matrix().transpose();
    // Coordinates of the principal divisors in the CDiv basis.
    let cols: Vec<IVec> = ft
        .column_vecs()
        .iter()
        .map(|c| solve_integer(&b, c).expect("principal divisors are Cartier"))
        .collect();
    let x = IntegerMatrix::from_columns(b.cols(), &cols);
    cokernel(&x).group
}

/// `P_D = {m : ⟨u_ρ, m⟩ + a_ρ ≥ 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorPolyhedron {
    /// `(u_ρ, a_ρ)` per ray, redundant inequalities kept.
    pub inequalities: Vec<(IVec, BigInt)>,
    pub bounded: bool,
    /// Vertices in lexicographic order; empty when `P_D` is empty or has no vertices.
    pub vertices: Vec<Vec<BigRational>>,
    /// Present when bounded, lexicographically sorted.
    pub lattice_points: Option<Vec<IVec>>,
}

impl DivisorPolyhedron {
    pub fn contains(&self, m: &[BigInt]) -> bool {
        self.inequalities.iter().all(|(u, a)| !(dot(u, m) + a).is_negative())
    }
}

pub fn divisor_polyhedron(fan: &Fan, d: &Divisor) -> Result<DivisorPolyhedron> {
    check_len(fan, d)?;
    let n = fan.ambient_dim();
    let inequalities: Vec<(IVec, BigInt)> =
        fan.rays().iter().cloned().zip(d.coeffs.iter().cloned()).collect();
    let recession = Cone::from_inequalities(n, fan.rays(), &[]);
    let bounded = recession.dim() == 0;
    // Homogenize: (m, s) with ⟨u, m⟩ + a·s ≥ 0 and s ≥ 0.
    let mut hom: Vec<IVec> = inequalities
        .iter()
        .map(|(u, a)| {
            let mut v = u.clone();
            v.push(a.clone());
            v
        })
        .collect();
    let mut last = vec![BigInt::zero(); n + 1];
    last[n] = BigInt::one();
    hom.push(last);
    let cone = Cone::from_inequalities(n + 1, &hom, &[]);
    let mut vertices: Vec<Vec<BigRational>> = if cone.is_pointed() {
        cone.ray_vectors()
            .iter()
            .filter(|r| r[n].is_positive())
            .map(|r| r[..n].iter().map(|x| BigRational::new(x.clone(), r[n].clone())).collect())
            .collect()
    } else {
        Vec::new()
    };
    vertices.sort();
    let lattice_points = if bounded {
        let mut pts = Vec::new();
        if !vertices.is_empty() {
            let lo: IVec = (0..n).map(|i| vertices.iter().map(|v| v[i].ceil().to_integer()).min().unwrap()).collect();
            let hi: IVec = (0..n).map(|i| vertices.iter().map(|v| v[i].floor().to_integer()).max().unwrap()).collect();
            box_points(&inequalities, &lo, &hi, &mut |x: &[BigInt]| pts.push(x.to_vec()));
            pts.sort();
        }
        Some(pts)
    } else {
        None
    };
    Ok(DivisorPolyhedron { inequalities, bounded, vertices, lattice_points })
}

/// Exponents `m` of the monomial basis of `Γ(X_Σ, 𝒪(D))`.
pub fn global_sections(fan: &Fan, d: &Divisor) -> Result<Vec<IVec>> {
    divisor_polyhedron(fan, d)?.lattice_points.ok_or(Error::Unbounded)
}

/// `D_P = Σ a_ρ D_ρ` with `a_ρ = −min_{v ∈ P} ⟨u_ρ, v⟩`. Each maximal cone must have a
/// vertex minimizing all of its rays at once.
pub fn polytope_divisor(p: &LatticePolytope, fan: &Fan) -> Result<Divisor> {
    if p.ambient_dim() != fan.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: fan.ambient_dim(), found: p.ambient_dim() });
    }
    let coeffs: IVec = fan
        .rays()
        .iter()
        .map(|u| -p.vertices().iter().map(|v| dot(u, v)).min().unwrap())
        .collect();
    for (i, cone) in fan.max_cones().iter().enumerate() {
        let common = p.vertices().iter().any(|v| cone.iter().all(|&r| dot(&fan.rays()[r], v) == -coeffs[r].clone()));
        if !common {
            return Err(Error::NotRefined { cone: i });
        }
    }
    Ok(Divisor { coeffs })
}

/// `m` with `D − D′ = div(χ^m)`, if any.
pub fn linearly_equivalent(fan: &Fan, d: &Divisor, e: &Divisor) -> Result<Option<IVec>> {
    check_len(fan, d)?;
    check_len(fan, e)?;
    Ok(solve_integer(&fan.ray_matrix().transpose(), &d.sub(e).coeffs))
}
