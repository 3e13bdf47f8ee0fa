//! Request decoding. Every accessor carries the JSON pointer of the value it reads so
//! schema errors name the offending location.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;

use toric_core::cones::Cone;
use toric_core::divisors::Divisor;
use toric_core::fans::Fan;
use toric_core::ideals::{LaurentPolynomial, Polynomial};
use toric_core::polytopes::LatticePolytope;
use toric_core::zlattice::{IVec, IntegerMatrix};

use crate::CliError;

pub type Res<T> = Result<T, CliError>;

/// A JSON value together with its pointer inside the request.
#[derive(Clone, Copy)]
pub struct Node<'a> {
    pub value: &'a Value,
    path: &'a str,
}

/// Owned copy of a sub-value and its pointer; requests are small, so copying keeps the
/// borrow structure flat.
pub struct Located {
    pub value: Value,
    pub path: String,
}

fn escape(key: &str) -> String {
    key.replace('~', "~0").replace('/', "~1")
}

pub fn schema_error(path: &str, msg: impl Into<String>) -> CliError {
    CliError::Schema { pointer: if path.is_empty() { "/".into() } else { path.into() }, message: msg.into() }
}

impl<'a> Node<'a> {
    pub fn root(value: &'a Value) -> Self {
        Node { value, path: "" }
    }

    pub fn path(&self) -> &str {
        self.path
    }

    fn err(&self, msg: impl Into<String>) -> CliError {
        schema_error(self.path, msg)
    }

    pub fn field(&self, key: &str) -> Res<Located> {
        self.opt_field(key)?.ok_or_else(|| schema_error(self.path, format!("missing field \"{key}\"")))
    }

    pub fn opt_field(&self, key: &str) -> Res<Option<Located>> {
        let obj = self.value.as_object().ok_or_else(|| self.err("expected an object"))?;
        Ok(obj.get(key).filter(|v| !v.is_null()).map(|v| Located {
            value: v.clone(),
            path: format!("{}/{}", self.path, escape(key)),
        }))
    }

    pub fn items(&self) -> Res<Vec<Located>> {
        let arr = self.value.as_array().ok_or_else(|| self.err("expected an array"))?;
        Ok(arr
            .iter()
            .enumerate()
            .map(|(i, v)| Located { value: v.clone(), path: format!("{}/{i}", self.path) })
            .collect())
    }

    pub fn integer(&self) -> Res<BigInt> {
        match self.value {
            Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string().parse().unwrap()),
            Value::String(s) => s.trim().parse().map_err(|_| self.err("expected a decimal integer")),
            _ => Err(self.err("expected an integer (number or decimal string)")),
        }
    }

    pub fn rational(&self) -> Res<BigRational> {
        match self.value {
            Value::String(s) => {
                let s = s.trim();
                let parsed = match s.split_once('/') {
                    Some((p, q)) => match (p.trim().parse::<BigInt>(), q.trim().parse::<BigInt>()) {
                        (Ok(p), Ok(q)) if q != BigInt::from(0) => Some(BigRational::new(p, q)),
                        _ => None,
                    },
                    None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
                };
                parsed.ok_or_else(|| self.err("expected a rational \"p/q\""))
            }
            _ => self.integer().map(BigRational::from_integer).map_err(|_| self.err("expected a rational \"p/q\"")),
        }
    }

    pub fn count(&self) -> Res<usize> {
        self.value.as_u64().map(|n| n as usize).ok_or_else(|| self.err("expected a nonnegative integer"))
    }

    pub fn boolean(&self) -> Res<bool> {
        self.value.as_bool().ok_or_else(|| self.err("expected a boolean"))
    }

    /// 1-based index in `1..=len`, returned 0-based.
    pub fn index(&self, len: usize) -> Res<usize> {
        match self.value.as_u64() {
            Some(i) if i >= 1 && (i as usize) <= len => Ok(i as usize - 1),
            _ => Err(self.err(format!("expected an index in 1..={len}"))),
        }
    }

    pub fn vector(&self) -> Res<IVec> {
        self.items()?.iter().map(|it| it.node().integer()).collect()
    }

    pub fn rational_vector(&self) -> Res<Vec<BigRational>> {
        self.items()?.iter().map(|it| it.node().rational()).collect()
    }

    /// Rows of equal length `width` (when given).
    pub fn rows(&self, width: Option<usize>) -> Res<Vec<IVec>> {
        let mut out: Vec<IVec> = Vec::new();
        for it in self.items()? {
            let row = it.node().vector()?;
            let w = width.or(out.first().map(|r| r.len()));
            if let Some(w) = w {
                if row.len() != w {
                    return Err(it.node().err(format!("expected {w} entries, found {}", row.len())));
                }
            }
            out.push(row);
        }
        Ok(out)
    }

    /// Row-major integer matrix.
    pub fn matrix(&self) -> Res<IntegerMatrix> {
        let rows = self.rows(None)?;
        if rows.is_empty() {
            return Err(self.err("matrix must have at least one row"));
        }
        Ok(IntegerMatrix::from_rows(rows[0].len(), &rows))
    }

    /// `{"generators": [[...]], "dim"?: n}`; `dim` is needed only when there are no generators.
    pub fn cone(&self) -> Res<Cone> {
        let gens_node = self.field("generators")?;
        let dim = self.opt_field("dim")?.map(|d| d.node().count()).transpose()?;
        let gens = gens_node.node().rows(dim)?;
        let n = dim.or(gens.first().map(|g| g.len())).ok_or_else(|| self.err("empty cone needs \"dim\""))?;
        Cone::new(n, &gens).map_err(CliError::Domain)
    }

    /// `{"points": [[...]]}`.
    pub fn polytope(&self) -> Res<LatticePolytope> {
        let pts_node = self.field("points")?;
        let pts = pts_node.node().rows(None)?;
        if pts.is_empty() {
            return Err(pts_node.node().err("a polytope needs at least one point"));
        }
        LatticePolytope::hull(pts[0].len(), &pts).map_err(CliError::Domain)
    }

    /// `{"rays": [[...]], "max_cones": [[1-based ray indices]], "dim"?: n}`.
    pub fn fan(&self) -> Res<Fan> {
        let dim = self.opt_field("dim")?.map(|d| d.node().count()).transpose()?;
        let rays_node = self.field("rays")?;
        let rays = rays_node.node().rows(dim)?;
        let n = dim.or(rays.first().map(|r| r.len())).ok_or_else(|| self.err("fan without rays needs \"dim\""))?;
        let cones_node = self.field("max_cones")?;
        let mut cones = Vec::new();
        for c in cones_node.node().items()? {
            let idx: Res<Vec<usize>> = c.node().items()?.iter().map(|i| i.node().index(rays.len())).collect();
            cones.push(idx?);
        }
        Fan::new(n, &rays, &cones).map_err(CliError::Domain)
    }

    pub fn divisor(&self, k: usize) -> Res<Divisor> {
        let c = self.field("coeffs")?;
        let v = c.node().vector()?;
        if v.len() != k {
            return Err(c.node().err(format!("expected {k} coefficients, found {}", v.len())));
        }
        Ok(Divisor::new(v))
    }

    fn terms(&self, nvars: Option<usize>) -> Res<(usize, Vec<(IVec, BigRational)>)> {
        let terms = self.field("terms")?;
        let mut out = Vec::new();
        let mut n = nvars;
        for t in terms.node().items()? {
            let exp_node = t.node().field("exp")?;
            let exp = exp_node.node().vector()?;
            match n {
                Some(k) if k != exp.len() => {
                    return Err(exp_node.node().err(format!("expected {k} exponents, found {}", exp.len())))
                }
                _ => n = Some(exp.len()),
            }
            let coeff = t.node().field("coeff")?.node().rational()?;
            out.push((exp, coeff));
        }
        let n = n.ok_or_else(|| terms.node().err("no terms and no variable count"))?;
        Ok((n, out))
    }

    /// `{"terms": [{"exp": [...], "coeff": "p/q"}]}` or a string like `"1 + t1^-1*t2"`.
    pub fn laurent(&self, nvars: usize) -> Res<LaurentPolynomial> {
        if let Value::String(s) = self.value {
            return LaurentPolynomial::parse(s, nvars).map_err(|e| self.err(e.to_string()));
        }
        let (n, terms) = self.terms(Some(nvars))?;
        LaurentPolynomial::new(n, terms).map_err(|e| self.err(e.to_string()))
    }

    /// Same shapes as [`Node::laurent`] with nonnegative exponents and variables `x1, x2, …`.
    pub fn polynomial(&self, nvars: Option<usize>) -> Res<Polynomial> {
        if let Value::String(s) = self.value {
            let n = nvars.ok_or_else(|| self.err("text polynomials need \"nvars\""))?;
            return Polynomial::parse(s, n).map_err(|e| self.err(e.to_string()));
        }
        let (n, terms) = self.terms(nvars)?;
        let mut mono = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            let m: Option<Vec<u32>> = e.iter().map(|x| u32::try_from(x).ok()).collect();
            mono.push((m.ok_or_else(|| self.err("exponents must be nonnegative"))?, c));
        }
        Ok(Polynomial::from_terms(n, mono))
    }
}

impl Located {
    pub fn node(&self) -> Node<'_> {
        Node { value: &self.value, path: &self.path }
    }
}
