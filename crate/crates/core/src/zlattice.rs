//! Exact integer linear algebra: Hermite and Smith normal forms, saturated
//! kernels, cokernels, integer solving and lattice indices.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer vector shorthand.
pub type IVec = Vec<BigInt>;

pub fn ivec(v: &[i64]) -> IVec {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn ivecs(vs: &[&[i64]]) -> Vec<IVec> {
    vs.iter().map(|v| ivec(v)).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn gcd_of(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
pub fn primitive(v: &[BigInt]) -> IVec {
    let g = gcd_of(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn add_vec(a: &[BigInt], b: &[BigInt]) -> IVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[BigInt], b: &[BigInt]) -> IVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(k: &BigInt, a: &[BigInt]) -> IVec {
    a.iter().map(|x| k * x).collect()
}

pub fn neg_vec(a: &[BigInt]) -> IVec {
    a.iter().map(|x| -x).collect()
}

/// Dense integer matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds from explicit rows. All rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[IVec]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix row");
            data.extend(r.iter().cloned());
        }
        IntegerMatrix { rows: rows.len(), cols, data }
    }

    /// Builds from columns of length `rows`.
    pub fn from_columns(rows: usize, columns: &[IVec]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged matrix column");
            for (i, x) in c.iter().enumerate() {
                m.data[i * cols + j] = x.clone();
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, &ivecs(rows))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<IVec> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> IVec {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn column_vecs(&self) -> Vec<IVec> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> IVec {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn select_columns(&self, idx: &[usize]) -> IntegerMatrix {
        let cols: Vec<IVec> = idx.iter().map(|&c| self.column(c)).collect();
        Self::from_columns(self.rows, &cols)
    }

    pub fn select_rows(&self, idx: &[usize]) -> IntegerMatrix {
        let rows: Vec<IVec> = idx.iter().map(|&r| self.row(r).to_vec()).collect();
        Self::from_rows(self.cols, &rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Rank over the rationals (fraction-free elimination).
    pub fn rank(&self) -> usize {
        rank_of_rows(&self.row_vecs(), self.cols)
    }

    /// Determinant of a square matrix via Bareiss elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.row_vecs();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }
}

impl Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;
    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        self.get(r, c)
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "] ({}x{})", self.rows, self.cols)
    }
}

/// Rank of a list of vectors of length `n`.
pub fn rank_of_rows(rows: &[IVec], n: usize) -> usize {
    let mut a: Vec<IVec> = rows.iter().filter(|r| !is_zero_vec(r)).cloned().collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank].clone();
        for row in a.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for j in col..n {
                row[j] = &row[j] * &pivot[col] - &f * &pivot[j];
            }
            *row = primitive(row);
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

fn col_axpy(cols: &mut [IVec], dst: usize, q: &BigInt, src: usize) {
    // cols[dst] -= q * cols[src]
    let (a, b) = if dst < src {
        let (l, r) = cols.split_at_mut(src);
        (&mut l[dst], &r[0])
    } else {
        let (l, r) = cols.split_at_mut(dst);
        (&mut r[0], &l[src])
    };
    for (x, y) in a.iter_mut().zip(b.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

/// Column-style Hermite normal form `H = M·U` with `U` unimodular.
///
/// `H` is lower-triangular echelon: each pivot is positive, entries to the right of a
/// pivot in its row are zero and entries to its left lie in `[0, pivot)`.
pub fn hnf(m: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix) {
    let (r, c) = (m.rows(), m.cols());
    let mut h = m.column_vecs();
    let mut u = IntegerMatrix::identity(c).column_vecs();
    let mut piv = 0;
    for i in 0..r {
        if piv == c {
            break;
        }
        let mut found = false;
        loop {
            let best = (piv..c)
                .filter(|&j| !h[j][i].is_zero())
                .min_by(|&a, &b| h[a][i].abs().cmp(&h[b][i].abs()).then(a.cmp(&b)));
            let Some(b) = best else { break };
            found = true;
            h.swap(piv, b);
            u.swap(piv, b);
            let mut done = true;
            for j in piv + 1..c {
                if h[j][i].is_zero() {
                    continue;
                }
                let q = h[j][i].div_floor(&h[piv][i]);
                col_axpy(&mut h, j, &q, piv);
                col_axpy(&mut u, j, &q, piv);
                if !h[j][i].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !found {
            continue;
        }
        if h[piv][i].is_negative() {
            h[piv] = neg_vec(&h[piv]);
            u[piv] = neg_vec(&u[piv]);
        }
        for j in 0..piv {
            let q = h[j][i].div_floor(&h[piv][i]);
            if !q.is_zero() {
                col_axpy(&mut h, j, &q, piv);
                col_axpy(&mut u, j, &q, piv);
            }
        }
        piv += 1;
    }
    (IntegerMatrix::from_columns(r, &h), IntegerMatrix::from_columns(c, &u))
}

/// Nonzero columns of the Hermite form: a canonical basis of the lattice spanned by the columns.
pub fn lattice_basis(m: &IntegerMatrix) -> IntegerMatrix {
    let (h, _) = hnf(m);
    let cols: Vec<IVec> = h.column_vecs().into_iter().filter(|c| !is_zero_vec(c)).collect();
    IntegerMatrix::from_columns(m.rows(), &cols)
}

/// Smith normal form `S = P·M·Q` with `P`, `Q` unimodular and `d₁ | d₂ | …` on the diagonal.
pub fn snf(m: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix, IntegerMatrix) {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.row_vecs();
    let mut p = IntegerMatrix::identity(r).row_vecs();
    // Q is kept as a list of columns so that column operations are row operations on it.
    let mut q = IntegerMatrix::identity(c).column_vecs();
    for t in 0..r.min(c) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish_snf(r, c, a, p, q);
            };
            a.swap(t, pi);
            p.swap(t, pi);
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                q.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..r {
                if a[i][t].is_zero() {
                    continue;
                }
                let f = a[i][t].div_floor(&a[t][t]);
                let (top, rest) = a.split_at_mut(i);
                for (x, y) in rest[0].iter_mut().zip(top[t].iter()) {
                    *x -= &f * y;
                }
                let (ptop, prest) = p.split_at_mut(i);
                for (x, y) in prest[0].iter_mut().zip(ptop[t].iter()) {
                    *x -= &f * y;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..c {
                if a[t][j].is_zero() {
                    continue;
                }
                let f = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut() {
                    let y = row[t].clone();
                    row[j] -= &f * y;
                }
                col_axpy(&mut q, j, &f, t);
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let mut bad = None;
            'search: for i in t + 1..r {
                for j in t + 1..c {
                    if !a[i][j].is_multiple_of(&a[t][t]) {
                        bad = Some(i);
                        break 'search;
                    }
                }
            }
            match bad {
                Some(i) => {
                    let (top, rest) = a.split_at_mut(i);
                    for (x, y) in top[t].iter_mut().zip(rest[0].iter()) {
                        *x += y;
                    }
                    let (ptop, prest) = p.split_at_mut(i);
                    for (x, y) in ptop[t].iter_mut().zip(prest[0].iter()) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            a[t] = neg_vec(&a[t]);
            p[t] = neg_vec(&p[t]);
        }
    }
    finish_snf(r, c, a, p, q)
}

fn finish_snf(
    r: usize,
    c: usize,
    a: Vec<IVec>,
    p: Vec<IVec>,
    q: Vec<IVec>,
) -> (IntegerMatrix, IntegerMatrix, IntegerMatrix) {
    (
        IntegerMatrix::from_rows(c, &a),
        IntegerMatrix::from_rows(r, &p),
        IntegerMatrix::from_columns(c, &q),
    )
}

/// Nonzero diagonal entries of the Smith form.
pub fn invariant_factors(m: &IntegerMatrix) -> Vec<BigInt> {
    let (s, _, _) = snf(m);
    (0..s.rows().min(s.cols())).map(|i| s.get(i, i).clone()).filter(|d| !d.is_zero()).collect()
}

/// Basis (as columns) of the saturated lattice `{x ∈ ℤ^cols : M·x = 0}`, in Hermite form.
/// LLL-reduced basis (δ = 3/4) of the lattice spanned by linearly independent vectors.
pub fn lll_reduce(basis: &[IVec]) -> Vec<IVec> {
    let mut b: Vec<IVec> = basis.to_vec();
    let n = b.len();
    if n < 2 {
        return b;
    }
    let rat = |v: &IVec| -> Vec<BigRational> { v.iter().map(|x| BigRational::from_integer(x.clone())).collect() };
    let rdot = |x: &[BigRational], y: &[BigRational]| -> BigRational {
        x.iter().zip(y).fold(BigRational::zero(), |s, (a, c)| s + a * c)
    };
    let gram_schmidt = |b: &[IVec]| -> (Vec<Vec<BigRational>>, Vec<Vec<BigRational>>, Vec<BigRational>) {
        let mut star: Vec<Vec<BigRational>> = Vec::with_capacity(b.len());
        let mut mu = vec![vec![BigRational::zero(); b.len()]; b.len()];
        let mut norms = Vec::with_capacity(b.len());
        for i in 0..b.len() {
            let bi = rat(&b[i]);
            let mut v = bi.clone();
            for j in 0..i {
                mu[i][j] = rdot(&bi, &star[j]) / &norms[j];
                for (vk, sk) in v.iter_mut().zip(&star[j]) {
                    *vk -= &mu[i][j] * sk;
                }
            }
            norms.push(rdot(&v, &v));
            star.push(v);
        }
        (star, mu, norms)
    };
    let delta = BigRational::new(3.into(), 4.into());
    let (_, mut mu, mut norms) = gram_schmidt(&b);
    let mut k = 1;
    while k < n {
        for j in (0..k).rev() {
            let q = mu[k][j].round();
            if !q.is_zero() {
                let qi = q.to_integer();
                let bj = b[j].clone();
                for (x, y) in b[k].iter_mut().zip(&bj) {
                    *x -= &qi * y;
                }
                let mu_j = mu[j].clone();
                for (l, m) in mu[k].iter_mut().enumerate().take(j + 1) {
                    *m -= if l == j { q.clone() } else { &q * &mu_j[l] };
                }
            }
        }
        let lhs = &norms[k];
        let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &norms[k - 1];
        if *lhs >= rhs {
            k += 1;
        } else {
            b.swap(k, k - 1);
            let gs = gram_schmidt(&b);
            mu = gs.1;
            norms = gs.2;
            k = (k - 1).max(1);
        }
    }
    b
}

pub fn kernel_basis(m: &IntegerMatrix) -> IntegerMatrix {
    let (s, _, q) = snf(m);
    let rank = (0..s.rows().min(s.cols())).filter(|&i| !s.get(i, i).is_zero()).count();
    let cols: Vec<IVec> = (rank..m.cols()).map(|j| q.column(j)).collect();
    if cols.is_empty() {
        return IntegerMatrix::zeros(m.cols(), 0);
    }
    lattice_basis(&IntegerMatrix::from_columns(m.cols(), &cols))
}

/// A finitely generated abelian group `ℤ^free_rank ⊕ ⊕ ℤ/dᵢ` with `dᵢ ≥ 2` and `dᵢ | dᵢ₊₁`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroupPresentation {
    pub free_rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

impl AbelianGroupPresentation {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }
}

impl fmt::Display for AbelianGroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `ℤ^rows / im M` together with the map sending a vector to its canonical class coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cokernel {
    pub group: AbelianGroupPresentation,
    /// Rows: free coordinates first, then one row per invariant factor.
    pub proj: IntegerMatrix,
}

impl Cokernel {
    /// Canonical coordinates: free part, then torsion residues in `[0, dᵢ)`.
    pub fn class_of(&self, v: &[BigInt]) -> IVec {
        let mut w = self.proj.mul_vec(v);
        let f = self.group.free_rank;
        for (k, d) in self.group.invariant_factors.iter().enumerate() {
            w[f + k] = w[f + k].mod_floor(d);
        }
        w
    }

    pub fn is_zero_class(&self, v: &[BigInt]) -> bool {
        is_zero_vec(&self.class_of(v))
    }
}

pub fn cokernel(m: &IntegerMatrix) -> Cokernel {
    let r = m.rows();
    let (s, p, _) = snf(m);
    let diag: Vec<BigInt> = (0..r.min(m.cols())).map(|i| s.get(i, i).clone()).collect();
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    // Free rows annihilate im M; put them in row-Hermite form for a canonical basis.
    let free: Vec<IVec> = (rank..r).map(|i| p.row(i).to_vec()).collect();
    let mut rows: Vec<IVec> = Vec::new();
    if !free.is_empty() {
        let basis = lattice_basis(&IntegerMatrix::from_rows(r, &free).transpose());
        rows.extend(basis.column_vecs());
    }
    let mut factors = Vec::new();
    for (i, d) in diag.iter().enumerate().take(rank) {
        if d.is_one() {
            continue;
        }
        rows.push(p.row(i).iter().map(|x| x.mod_floor(d)).collect());
        factors.push(d.clone());
    }
    Cokernel {
        group: AbelianGroupPresentation { free_rank: r - rank, invariant_factors: factors },
        proj: IntegerMatrix::from_rows(r, &rows),
    }
}

/// An integer solution of `M·x = b`, if one exists.
pub fn solve_integer(m: &IntegerMatrix, b: &[BigInt]) -> Option<IVec> {
    assert_eq!(m.rows(), b.len(), "right-hand side length");
    let (s, p, q) = snf(m);
    let pb = p.mul_vec(b);
    let mut y = vec![BigInt::zero(); m.cols()];
    for i in 0..m.rows() {
        let d = if i < m.cols() { s.get(i, i).clone() } else { BigInt::zero() };
        if d.is_zero() {
            if !pb[i].is_zero() {
                return None;
            }
        } else {
            let (quo, rem) = pb[i].div_rem(&d);
            if !rem.is_zero() {
                return None;
            }
            y[i] = quo;
        }
    }
    Some(q.mul_vec(&y))
}

/// A rational solution of `M·x = b` with free variables set to zero, if one exists.
pub fn solve_rational(m: &IntegerMatrix, b: &[BigInt]) -> Option<Vec<BigRational>> {
    let (r, c) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigRational>> = (0..r)
        .map(|i| {
            let mut row: Vec<BigRational> =
                m.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect();
            row.push(BigRational::from_integer(b[i].clone()));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..c {
        let Some(p) = (rank..r).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(rank, p);
        let inv = a[rank][col].recip();
        for x in a[rank].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= y * &f;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if (rank..r).any(|i| !a[i][c].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); c];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = a[i][c].clone();
    }
    Some(x)
}

/// Index of a sublattice, `None` standing for infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(BigInt),
    Infinite,
}

/// Index of the lattice spanned by the columns of `sub` inside the one spanned by `sup`.
pub fn lattice_index(sub: &IntegerMatrix, sup: &IntegerMatrix) -> Result<LatticeIndex> {
    if sub.rows() != sup.rows() {
        return Err(Error::DimensionMismatch { expected: sup.rows(), found: sub.rows() });
    }
    let basis = lattice_basis(sup);
    let mut coords = Vec::new();
    for j in 0..sub.cols() {
        match solve_integer(&basis, &sub.column(j)) {
            Some(x) => coords.push(x),
            None => return Err(Error::NotSublattice { column: j }),
        }
    }
    let r = basis.cols();
    let x = IntegerMatrix::from_columns(r, &coords);
    let factors = invariant_factors(&x);
    if factors.len() < r {
        return Ok(LatticeIndex::Infinite);
    }
    Ok(LatticeIndex::Finite(factors.iter().product()))
}

/// Differences `mⱼ − m₁` (j ≥ 2): generators of the affine lattice of a configuration.
pub fn affine_lattice_gens(a: &IntegerMatrix) -> Result<IntegerMatrix> {
    if a.cols() == 0 {
        return Err(Error::EmptyConfiguration);
    }
    let base = a.column(0);
    let cols: Vec<IVec> = (1..a.cols()).map(|j| sub_vec(&a.column(j), &base)).collect();
    Ok(IntegerMatrix::from_columns(a.rows(), &cols))
}

/// Univariate polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn from_integers(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(x.into()))
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let coef = if a.is_one() && k > 0 { String::new() } else { a.to_string() };
            match k {
                0 => write!(f, "{coef}")?,
                1 => write!(f, "{coef}{}x", if coef.is_empty() { "" } else { "*" })?,
                _ => write!(f, "{coef}{}x^{k}", if coef.is_empty() { "" } else { "*" })?,
            }
        }
        Ok(())
    }
}

/// The unique polynomial of degree < #points through the given points (Newton form).
pub fn interpolate(points: &[(BigInt, BigRational)]) -> Result<RationalPolynomial> {
    let n = points.len();
    for i in 0..n {
        for j in 0..i {
            if points[i].0 == points[j].0 {
                return Err(Error::DuplicateAbscissa(points[i].0.to_string()));
            }
        }
    }
    let xs: Vec<BigRational> = points.iter().map(|p| BigRational::from_integer(p.0.clone())).collect();
    let mut dd: Vec<BigRational> = points.iter().map(|p| p.1.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Horner expansion of the Newton form.
    let mut poly: Vec<BigRational> = Vec::new();
    for i in (0..n).rev() {
        // poly = poly * (x - xs[i]) + dd[i]
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &xs[i];
        }
        next[0] += &dd[i];
        poly = next;
    }
    Ok(RationalPolynomial::new(poly))
}
