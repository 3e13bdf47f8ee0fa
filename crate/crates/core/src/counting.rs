//! Root counts for sparse systems: Kushnirenko degree, BKK mixed-volume bound, Bézout
//! number, and the compactification data (summand divisors, homogenized equations).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cox::homogenize;
use crate::divisors::{polytope_divisor, Divisor};
use crate::error::{Error, Result};
use crate::fans::{normal_fan, Fan};
use crate::ideals::{LaurentPolynomial, Polynomial};
use crate::polytopes::{mixed_volume, LatticePolytope};
use crate::zlattice::{lattice_index, sub_vec, IVec, IntegerMatrix, LatticeIndex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KushnirenkoCount {
    /// Volume of `Conv(𝒜)` measured in the lattice `ℤ'𝒜`.
    pub degree: BigInt,
    /// Normalized volume in the saturated lattice of the affine span.
    pub normalized_volume: BigInt,
    /// Index of `ℤ'𝒜` in that saturated lattice.
    pub index: BigInt,
}

/// Index of the lattice generated by the differences of `points` inside `ℤ^n`, restricted
/// to its saturation.
fn difference_index(n: usize, points: &[IVec]) -> BigInt {
    let base = &points[0];
    let diffs: Vec<IVec> = points[1..].iter().map(|p| sub_vec(p, base)).collect();
    if diffs.is_empty() {
        return BigInt::one();
    }
    let sub = IntegerMatrix::from_columns(n, &diffs);
    let sat = crate::cones::span_lattice_basis(n, &diffs);
    match lattice_index(&sub, &sat) {
        Ok(LatticeIndex::Finite(i)) => i,
        _ => unreachable!("a lattice has finite index in its saturation"),
    }
}

/// Degree of the projective toric variety of the columns of `a` (Kushnirenko).
pub fn kushnirenko_count(a: &IntegerMatrix) -> Result<KushnirenkoCount> {
    if a.cols() == 0 {
        return Err(Error::EmptyConfiguration);
    }
    let pts = a.column_vecs();
    let p = LatticePolytope::hull(a.rows(), &pts)?;
    let normalized_volume = p.normalized_volume();
    let index = difference_index(a.rows(), &pts);
    Ok(KushnirenkoCount { degree: &normalized_volume / &index, normalized_volume, index })
}

pub fn bezout_count(degrees: &[BigInt]) -> Result<BigInt> {
    if degrees.iter().any(|d| !d.is_positive()) {
        return Err(Error::Invalid("Bézout degrees must be positive".into()));
    }
    Ok(degrees.iter().product())
}

/// `n` Laurent polynomials in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseSystem {
    pub n: usize,
    pub equations: Vec<LaurentPolynomial>,
}

impl SparseSystem {
    pub fn new(n: usize, equations: Vec<LaurentPolynomial>) -> Result<Self> {
        if equations.len() != n {
            return Err(Error::WrongPolytopeCount { expected: n, found: equations.len() });
        }
        if let Some(e) = equations.iter().find(|e| e.nvars() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: e.nvars() });
        }
        if equations.iter().any(|e| e.terms().is_empty()) {
            return Err(Error::EmptyConfiguration);
        }
        Ok(SparseSystem { n, equations })
    }

    pub fn newton_polytopes(&self) -> Result<Vec<LatticePolytope>> {
        self.equations.iter().map(|e| LatticePolytope::hull(self.n, &e.support())).collect()
    }

    /// Total degree of each support after translating it into the positive orthant.
    pub fn degrees(&self) -> Vec<BigInt> {
        self.equations
            .iter()
            .map(|e| {
                let sup = e.support();
                let mins: IVec = (0..self.n).map(|i| sup.iter().map(|m| m[i].clone()).min().unwrap()).collect();
                sup.iter().map(|m| sub_vec(m, &mins).iter().sum::<BigInt>()).max().unwrap()
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct CountReport {
    /// `n!·Vol(P)` when all supports have the same Newton polytope.
    pub kushnirenko: Option<BigInt>,
    pub bkk: BigInt,
    /// Product of the translated total degrees; `None` when some degree is 0.
    pub bezout: Option<BigInt>,
    /// Index of the lattice generated by all support differences in `ℤⁿ`.
    pub lattice_index: BigInt,
    /// Fan of the compactification: the normal fan of the Minkowski sum unless supplied.
    pub fan: Fan,
    /// `Eᵢ` with `a_{i,j} = −min_{m ∈ Pᵢ} ⟨u_j, m⟩`.
    pub divisors: Vec<Divisor>,
    pub homogenized: Vec<Polynomial>,
}

impl CountReport {
    /// Whether each point of `ℚ^k` is a common zero of the homogenized system.
    pub fn common_zeros(&self, points: &[Vec<BigRational>]) -> Result<Vec<bool>> {
        let k = self.fan.rays().len();
        if let Some(p) = points.iter().find(|p| p.len() != k) {
            return Err(Error::DimensionMismatch { expected: k, found: p.len() });
        }
        Ok(points.iter().map(|p| self.homogenized.iter().all(|f| f.eval(p).is_zero())).collect())
    }
}

/// BKK count on the normal fan of the Minkowski sum of the Newton polytopes.
pub fn bkk_count(system: &SparseSystem) -> Result<CountReport> {
    let sum = minkowski_total(system)?;
    let fan = normal_fan(&sum)?;
    bkk_count_with_fan(system, &fan)
}

fn minkowski_total(system: &SparseSystem) -> Result<LatticePolytope> {
    let ps = system.newton_polytopes()?;
    let mut sum = ps[0].clone();
    for p in &ps[1..] {
        sum = sum.minkowski_sum(p)?;
    }
    if !sum.is_full_dimensional() {
        return Err(Error::Degenerate { dim: sum.dim(), ambient: system.n });
    }
    Ok(sum)
}

/// BKK count with the compactification on a given fan, which must refine the normal fan
/// of every Newton polytope.
pub fn bkk_count_with_fan(system: &SparseSystem, fan: &Fan) -> Result<CountReport> {
    let n = system.n;
    minkowski_total(system)?;
    let ps = system.newton_polytopes()?;
    let bkk = mixed_volume(&ps)?;
    let kushnirenko = ps.iter().all(|p| p == &ps[0]).then(|| ps[0].normalized_volume());
    let degrees = system.degrees();
    let bezout = if degrees.iter().any(|d| d.is_zero()) { None } else { Some(bezout_count(&degrees)?) };
    let mut diffs: Vec<IVec> = Vec::new();
    for e in &system.equations {
        let sup = e.support();
        diffs.extend(sup[1..].iter().map(|m| sub_vec(m, &sup[0])));
    }
    let lattice_index = match lattice_index(&IntegerMatrix::from_columns(n, &diffs), &IntegerMatrix::identity(n))? {
        LatticeIndex::Finite(i) => i,
        LatticeIndex::Infinite => unreachable!("differences span ℝⁿ when the Minkowski sum is full-dimensional"),
    };
    let divisors: Vec<Divisor> = ps.iter().map(|p| polytope_divisor(p, fan)).collect::<Result<_>>()?;
    let homogenized = system
        .equations
        .iter()
        .zip(&divisors)
        .map(|(f, d)| homogenize(fan, f, d))
        .collect::<Result<_>>()?;
    Ok(CountReport { kushnirenko, bkk, bezout, lattice_index, fan: fan.clone(), divisors, homogenized })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlattice::ivec;

    fn cols(pts: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_columns(pts[0].len(), &crate::zlattice::ivecs(pts))
    }

    fn sys(n: usize, eqs: &[&str]) -> SparseSystem {
        SparseSystem::new(n, eqs.iter().map(|e| LaurentPolynomial::parse(e, n).unwrap()).collect()).unwrap()
    }

    fn hirzebruch() -> Fan {
        Fan::from_i64(2, &[&[1, 0], &[0, 1], &[-1, 2], &[0, -1]], &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]).unwrap()
    }

    #[test]
    fn kushnirenko_degrees() {
        let v2 = cols(&[&[0, 0], &[1, 0], &[2, 0], &[0, 1], &[1, 1], &[0, 2]]);
        assert_eq!(kushnirenko_count(&v2).unwrap().degree, BigInt::from(4));
        let sq = cols(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(kushnirenko_count(&sq).unwrap().degree, BigInt::from(2));
        let pent = cols(&[&[0, 0], &[1, 0], &[0, 1], &[2, 1], &[1, 2]]);
        let k = kushnirenko_count(&pent).unwrap();
        assert_eq!((k.degree, k.index), (BigInt::from(5), BigInt::one()));
        let minus = cols(&[&[1, 0], &[0, 1], &[2, 1], &[1, 2]]);
        let k = kushnirenko_count(&minus).unwrap();
        assert_eq!(
            (k.normalized_volume, k.index, k.degree),
            (BigInt::from(4), BigInt::from(2), BigInt::from(2))
        );
        // Twisted cubic: a segment of length 3 in its span lattice.
        let curve = cols(&[&[0], &[1], &[2], &[3]]);
        assert_eq!(kushnirenko_count(&curve).unwrap().degree, BigInt::from(3));
        let sparse = cols(&[&[0, 1], &[2, 1], &[3, 1]]);
        assert_eq!(kushnirenko_count(&sparse).unwrap().degree, BigInt::from(3));
    }

    #[test]
    fn bezout_numbers() {
        let b = |v: &[i64]| bezout_count(&ivec(v)).unwrap();
        assert_eq!(b(&[2, 2]), BigInt::from(4));
        assert_eq!(b(&[1, 1, 1]), BigInt::one());
        assert_eq!(b(&[3, 5]), BigInt::from(15));
        assert!(bezout_count(&ivec(&[0, 2])).is_err());
    }

    #[test]
    fn dense_and_bilinear_systems() {
        let full = sys(2, &["1 + t1 + t2 + t1^2 + t1*t2 + t2^2", "1 + 2*t1 + 3*t2 + 5*t1^2 + 7*t1*t2 + 11*t2^2"]);
        let r = bkk_count(&full).unwrap();
        assert_eq!((r.bkk.clone(), r.bezout.clone()), (BigInt::from(4), Some(BigInt::from(4))));
        assert_eq!(r.kushnirenko, Some(BigInt::from(4)));
        let bil = sys(2, &["1 + t1 + t2 + t1*t2", "2 + 3*t1 + 5*t2 + 7*t1*t2"]);
        let r = bkk_count(&bil).unwrap();
        assert_eq!((r.bkk, r.bezout), (BigInt::from(2), Some(BigInt::from(4))));
    }

    #[test]
    fn hirzebruch_system() {
        let s = sys(2, &["1 + t1 + t2 + t1*t2 + t1^2*t2 + t1^3*t2", "1 + t2 + t1*t2 + t1^2*t2"]);
        let r = bkk_count_with_fan(&s, &hirzebruch()).unwrap();
        assert_eq!(r.bkk, BigInt::from(3));
        assert_eq!(r.divisors, vec![Divisor::from_i64(&[0, 0, 1, 1]), Divisor::from_i64(&[0, 0, 0, 1])]);
        let z = |v: &[i64]| -> Vec<BigRational> { v.iter().map(|&x| BigRational::from_integer(x.into())).collect() };
        let pts = [z(&[-1, -1, 1, 1]), z(&[0, -1, 1, 1]), z(&[1, -1, 0, 1]), z(&[1, 1, 1, 1])];
        assert_eq!(r.common_zeros(&pts).unwrap(), vec![true, true, true, false]);
        // Same count on the normal fan of the Minkowski sum, whatever its ray order.
        assert_eq!(bkk_count(&s).unwrap().bkk, BigInt::from(3));
    }

    #[test]
    fn summand_divisors_add_up() {
        let s = sys(2, &["1 + t1 + t2 + t1*t2 + t1^2*t2 + t1^3*t2", "1 + t2 + t1*t2 + t1^2*t2"]);
        let r = bkk_count(&s).unwrap();
        let ps = s.newton_polytopes().unwrap();
        let total = polytope_divisor(&ps[0].minkowski_sum(&ps[1]).unwrap(), &r.fan).unwrap();
        assert_eq!(r.divisors[0].add(&r.divisors[1]), total);
        for (f, h) in s.equations.iter().zip(&r.homogenized) {
            assert_eq!(f.terms().len(), h.len());
        }
    }

    #[test]
    fn degenerate_systems() {
        let s = sys(2, &["1 + t1", "2 + t1^2"]);
        assert_eq!(bkk_count(&s).unwrap_err(), Error::Degenerate { dim: 1, ambient: 2 });
        assert!(SparseSystem::new(2, vec![LaurentPolynomial::parse("1 + t1", 2).unwrap()]).is_err());
    }
}
