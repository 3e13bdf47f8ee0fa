//! Cox-ring data of a fan: grading by the class group, irrelevant ideal, primitive
//! collections, and homogenization/dehomogenization of Laurent polynomials.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::divisors::{class_group, global_sections, ClassGroup, Divisor};
use crate::error::{Error, Result};
use crate::fans::Fan;
use crate::ideals::{LaurentPolynomial, Monomial, Polynomial};
use crate::zlattice::{dot, solve_integer, sub_vec, IVec};

/// Cox ring `S = ℚ[x₁,…,x_k]` graded by `Cl`, variable `xᵢ` attached to ray `i`.
#[derive(Clone, Debug)]
pub struct CoxData {
    pub fan: Fan,
    pub class_group: ClassGroup,
    /// `x^σ̂` per maximal cone, duplicates removed.
    pub irrelevant: Vec<Monomial>,
    pub primitive_collections: Vec<Vec<usize>>,
    /// Class of each `D_i`: the character of `G` acting on `x_i`.
    pub weights: Vec<IVec>,
}

impl CoxData {
    pub fn degree(&self, a: &[BigInt]) -> IVec {
        self.class_group.class_of(&Divisor::new(a.to_vec()))
    }
}

pub fn cox_data(fan: &Fan) -> Result<CoxData> {
    if fan.has_torus_factor() {
        return Err(Error::TorusFactor);
    }
    let cl = class_group(fan);
    let k = fan.rays().len();
    let weights = (0..k).map(|i| cl.class_of(&Divisor::prime(k, i))).collect();
    Ok(CoxData {
        fan: fan.clone(),
        irrelevant: irrelevant_ideal(fan),
        primitive_collections: primitive_collections(fan),
        class_group: cl,
        weights,
    })
}

/// `x^σ̂ = ∏_{ρᵢ ∉ σ} xᵢ` for each maximal cone, in cone order.
pub fn irrelevant_ideal(fan: &Fan) -> Vec<Monomial> {
    let k = fan.rays().len();
    let mut out: Vec<Monomial> = Vec::new();
    for cone in fan.max_cones() {
        let m: Monomial = (0..k).map(|i| u32::from(!cone.contains(&i))).collect();
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

fn in_some_cone(fan: &Fan, s: &[usize]) -> bool {
    fan.max_cones().iter().any(|c| s.iter().all(|i| c.contains(i)))
}

/// Minimal ray sets contained in no `σ(1)`, lexicographically ordered.
pub fn primitive_collections(fan: &Fan) -> Vec<Vec<usize>> {
    let k = fan.rays().len();
    let max_size = fan.max_cones().iter().map(|c| c.len()).max().unwrap_or(0) + 1;
    let mut found: Vec<Vec<usize>> = Vec::new();
    for size in 1..=max_size.min(k) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            if !in_some_cone(fan, &idx) && !found.iter().any(|c| c.iter().all(|i| idx.contains(i))) {
                found.push(idx.clone());
            }
            // Next combination.
            let mut i = size;
            while i > 0 && idx[i - 1] == k - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    found.sort();
    found
}

/// Cones (as ray-index sets) that are not simplicial; their orbits make up the complement
/// of the locus where the quotient is geometric.
pub fn non_simplicial_cones(fan: &Fan) -> Vec<Vec<usize>> {
    fan.all_cones().into_iter().filter(|c| !fan.cone_of(c).is_simplicial()).collect()
}

fn to_monomial(v: &[BigInt]) -> Monomial {
    v.iter().map(|x| x.to_u32().expect("nonnegative exponent")).collect()
}

/// `x^{Fᵀm + a}` for `m ∈ P_D ∩ M`.
pub fn graded_piece(fan: &Fan, d: &Divisor) -> Result<Vec<Monomial>> {
    let ms = global_sections(fan, d)?;
    Ok(ms.iter().map(|m| to_monomial(&homogenized_exponent(fan, m, d))).collect())
}

fn homogenized_exponent(fan: &Fan, m: &[BigInt], d: &Divisor) -> IVec {
    fan.rays().iter().zip(&d.coeffs).map(|(u, a)| dot(u, m) + a).collect()
}

/// `t^m ↦ x^{Fᵀm + a}`; every exponent must lie in `P_D`.
pub fn homogenize(fan: &Fan, f: &LaurentPolynomial, d: &Divisor) -> Result<Polynomial> {
    if f.nvars() != fan.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: fan.ambient_dim(), found: f.nvars() });
    }
    if d.coeffs.len() != fan.rays().len() {
        return Err(Error::DimensionMismatch { expected: fan.rays().len(), found: d.coeffs.len() });
    }
    let k = fan.rays().len();
    let mut terms = Vec::new();
    for (m, c) in f.terms() {
        let e = homogenized_exponent(fan, m, d);
        if e.iter().any(|x| x.is_negative()) {
            let txt: Vec<String> = m.iter().map(|x| x.to_string()).collect();
            return Err(Error::OutsideSectionPolytope(format!("({})", txt.join(","))));
        }
        terms.push((to_monomial(&e), c.clone()));
    }
    Ok(Polynomial::from_terms(k, terms))
}

/// `f / x^{Fᵀv + a}` in the chart of maximal cone `cone`, where `⟨u_ρ, v⟩ = −a_ρ` on `σ(1)`:
/// each term `x^{Fᵀm + a}` becomes `t^{m − v}`.
pub fn dehomogenize(fan: &Fan, f: &Polynomial, d: &Divisor, cone: usize) -> Result<LaurentPolynomial> {
    let n = fan.ambient_dim();
    let k = fan.rays().len();
    if cone >= fan.max_cones().len() {
        return Err(Error::IndexOutOfRange { index: cone, len: fan.max_cones().len() });
    }
    if f.nvars() != k || d.coeffs.len() != k {
        return Err(Error::DimensionMismatch { expected: k, found: f.nvars().min(d.coeffs.len()) });
    }
    let ft = fan.ray_matrix().transpose();
    let rows: Vec<IVec> = fan.max_cones()[cone].iter().map(|&r| fan.rays()[r].clone()).collect();
    let rhs: IVec = fan.max_cones()[cone].iter().map(|&r| -d.coeffs[r].clone()).collect();
    let v = solve_integer(&crate::zlattice::IntegerMatrix::from_rows(n, &rows), &rhs)
        .ok_or(Error::NotCartier(cone))?;
    let mut terms = Vec::new();
    for (e, c) in f.terms() {
        let ev: IVec = e.iter().map(|&x| BigInt::from(x)).collect();
        let m = solve_integer(&ft, &sub_vec(&ev, &d.coeffs)).ok_or(Error::DegreeMismatch)?;
        terms.push((sub_vec(&m, &v), c.clone()));
    }
    LaurentPolynomial::new(n, terms)
}

/// The character `v` used by [`dehomogenize`] for maximal cone `cone`.
pub fn chart_character(fan: &Fan, d: &Divisor, cone: usize) -> Result<IVec> {
    if cone >= fan.max_cones().len() {
        return Err(Error::IndexOutOfRange { index: cone, len: fan.max_cones().len() });
    }
    let rows: Vec<IVec> = fan.max_cones()[cone].iter().map(|&r| fan.rays()[r].clone()).collect();
    let rhs: IVec = fan.max_cones()[cone].iter().map(|&r| -d.coeffs[r].clone()).collect();
    solve_integer(&crate::zlattice::IntegerMatrix::from_rows(fan.ambient_dim(), &rows), &rhs)
        .ok_or(Error::NotCartier(cone))
}

/// Whether every exponent's class equals `[D]`.
pub fn is_homogeneous_of_class(fan: &Fan, f: &Polynomial, d: &Divisor) -> bool {
    let ft = fan.ray_matrix().transpose();
    f.terms().keys().all(|e| {
        let ev: IVec = e.iter().map(|&x| BigInt::from(x)).collect();
        solve_integer(&ft, &sub_vec(&ev, &d.coeffs)).is_some()
    })
}
