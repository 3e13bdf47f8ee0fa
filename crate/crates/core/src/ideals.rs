//! Sparse polynomials over ℚ, monomial orders, reduced Gröbner bases, saturation,
//! toric ideals of integer configurations and Hilbert functions `|d𝒜|`.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::zlattice::{kernel_basis, lll_reduce, solve_rational, IVec, IntegerMatrix};

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// The first `k` variables form a block eliminated before the rest; both blocks use grevlex.
    Elimination(usize),
}

fn grevlex_key(m: &[u32], out: &mut Vec<i64>) {
    out.push(m.iter().map(|&e| e as i64).sum());
    out.extend(m.iter().rev().map(|&e| -(e as i64)));
}

impl MonomialOrder {
    /// A vector whose lexicographic order matches this monomial order.
    pub fn key(&self, m: &[u32]) -> Vec<i64> {
        let mut k = Vec::with_capacity(m.len() + 2);
        match *self {
            MonomialOrder::Lex => k.extend(m.iter().map(|&e| e as i64)),
            MonomialOrder::GrevLex => grevlex_key(m, &mut k),
            MonomialOrder::Elimination(b) => {
                let b = b.min(m.len());
                grevlex_key(&m[..b], &mut k);
                grevlex_key(&m[b..], &mut k);
            }
        }
        k
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm_mono(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Polynomial in `ℚ[x₁,…,x_n]` with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::from_terms(nvars, vec![(vec![0; nvars], c)])
    }

    pub fn monomial(exps: Monomial, c: BigRational) -> Self {
        let n = exps.len();
        Self::from_terms(n, vec![(exps, c)])
    }

    /// Sums the given terms, dropping zero coefficients.
    pub fn from_terms(nvars: usize, terms: Vec<(Monomial, BigRational)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.len(), nvars, "monomial length");
            p.add_term(m, c);
        }
        p
    }

    /// `x^a − x^b` for integer vectors `a, b ≥ 0`.
    pub fn binomial(a: &[u32], b: &[u32]) -> Self {
        Self::from_terms(
            a.len(),
            vec![(a.to_vec(), BigRational::one()), (b.to_vec(), -BigRational::one())],
        )
    }

    /// `x^{ℓ₊} − x^{ℓ₋}` for an integer vector `ℓ`.
    pub fn lattice_binomial(l: &[BigInt]) -> Self {
        let pos: Monomial = l.iter().map(|x| if x.is_positive() { x.to_u32().unwrap() } else { 0 }).collect();
        let neg: Monomial = l.iter().map(|x| if x.is_negative() { (-x).to_u32().unwrap() } else { 0 }).collect();
        Self::binomial(&pos, &neg)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &[u32]) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in decreasing order.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Monomial, BigRational)> {
        let mut v: Vec<(Vec<i64>, Monomial, BigRational)> =
            self.terms.iter().map(|(m, c)| (order.key(m), m.clone(), c.clone())).collect();
        v.sort_by(|a, b| b.0.cmp(&a.0));
        v.into_iter().map(|(_, m, c)| (m, c)).collect()
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(Monomial, BigRational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let degs: BTreeSet<u32> = self.terms.keys().map(|m| m.iter().sum()).collect();
        degs.len() <= 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn neg(&self) -> Self {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut p = Polynomial::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let m: Monomial = a.iter().zip(b).map(|(i, j)| i + j).collect();
                p.add_term(m, x * y);
            }
        }
        p
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars, "point length");
        let mut s = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m) {
                for _ in 0..e {
                    t *= x;
                }
            }
            s += t;
        }
        s
    }

    /// Renames variables: variable `i` becomes variable `map[i]` of an `nvars`-variable ring.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; nvars];
                for (i, &x) in m.iter().enumerate() {
                    e[map[i]] += x;
                }
                (e, c.clone())
            })
            .collect();
        Self::from_terms(nvars, terms)
    }

    /// Text with terms in decreasing order, e.g. `x1^2*x4 - 3/2*x2`.
    pub fn format(&self, order: MonomialOrder, var: &str) -> String {
        let terms: Vec<(Vec<i64>, BigRational)> = self
            .sorted_terms(order)
            .into_iter()
            .map(|(m, c)| (m.into_iter().map(i64::from).collect(), c))
            .collect();
        format_terms(&terms, var)
    }

    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        let terms = parse_terms(text, nvars, "x", false)?;
        Ok(Self::from_terms(
            nvars,
            terms.into_iter().map(|(m, c)| (m.into_iter().map(|e| e as u32).collect(), c)).collect(),
        ))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(MonomialOrder::GrevLex, "x"))
    }
}

fn format_terms(terms: &[(Vec<i64>, BigRational)], var: &str) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (m, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mono: Vec<String> = m
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(j, &e)| if e == 1 { format!("{var}{}", j + 1) } else { format!("{var}{}^{e}", j + 1) })
            .collect();
        if mono.is_empty() {
            s.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                s.push_str(&a.to_string());
                s.push('*');
            }
            s.push_str(&mono.join("*"));
        }
    }
    s
}

/// Parses sums of terms like `3/2*x1^2*x3 - x2 + 1`; negative exponents only when `laurent`.
fn parse_terms(text: &str, nvars: usize, var: &str, laurent: bool) -> Result<Vec<(Vec<i64>, BigRational)>> {
    let bad = |msg: &str| Error::Invalid(format!("cannot parse polynomial {text:?}: {msg}"));
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad("empty"));
    }
    // Split into signed terms, ignoring '-' right after '^'.
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut prev = '\0';
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && prev != '^' {
            if !cur.is_empty() {
                pieces.push((neg, std::mem::take(&mut cur)));
            } else if prev != '\0' {
                return Err(bad("dangling sign"));
            }
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
        prev = ch;
    }
    if cur.is_empty() {
        return Err(bad("trailing sign"));
    }
    pieces.push((neg, cur));
    let mut out = Vec::new();
    for (neg, piece) in pieces {
        let mut coef = BigRational::one();
        let mut exps = vec![0i64; nvars];
        for factor in piece.split('*') {
            if let Some(rest) = factor.strip_prefix(var) {
                let (idx, e) = match rest.split_once('^') {
                    Some((i, e)) => (i, e.parse::<i64>().map_err(|_| bad("exponent"))?),
                    None => (rest, 1),
                };
                let i: usize = idx.parse().map_err(|_| bad("variable index"))?;
                if i == 0 || i > nvars {
                    return Err(bad("variable index out of range"));
                }
                if e < 0 && !laurent {
                    return Err(bad("negative exponent"));
                }
                exps[i - 1] += e;
            } else {
                let c: BigRational = factor.parse().map_err(|_| bad("coefficient"))?;
                coef *= c;
            }
        }
        out.push((exps, if neg { -coef } else { coef }));
    }
    Ok(out)
}

/// Working form: terms sorted by decreasing order key, leading coefficient 1.
#[derive(Clone)]
struct Ip {
    terms: Vec<(Vec<i64>, Monomial, BigRational)>,
}

impl Ip {
    fn from_poly(p: &Polynomial, order: MonomialOrder) -> Ip {
        let mut terms: Vec<_> = p.terms.iter().map(|(m, c)| (order.key(m), m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Ip { terms }
    }

    fn lead(&self) -> &Monomial {
        &self.terms[0].1
    }

    fn make_monic(&mut self) {
        let c = self.terms[0].2.clone();
        if !c.is_one() {
            for t in &mut self.terms {
                t.2 /= &c;
            }
        }
    }

    fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial { nvars, terms: self.terms.iter().map(|(_, m, c)| (m.clone(), c.clone())).collect() }
    }
}

/// Full reduction of the terms in `work` modulo monic `basis`.
fn reduce(work: BTreeMap<Vec<i64>, (Monomial, BigRational)>, basis: &[Ip], order: MonomialOrder) -> Ip {
    let mut work = work;
    let mut out = Vec::new();
    while let Some((k, (m, c))) = work.pop_last() {
        match basis.iter().find(|g| divides(g.lead(), &m)) {
            Some(g) => {
                let q: Monomial = m.iter().zip(g.lead()).map(|(a, b)| a - b).collect();
                for (_, gm, gc) in &g.terms[1..] {
                    let nm: Monomial = gm.iter().zip(&q).map(|(a, b)| a + b).collect();
                    let nk = order.key(&nm);
                    let delta = -(&c * gc);
                    match work.entry(nk) {
                        Entry::Vacant(e) => {
                            e.insert((nm, delta));
                        }
                        Entry::Occupied(mut e) => {
                            e.get_mut().1 += delta;
                            if e.get().1.is_zero() {
                                e.remove();
                            }
                        }
                    }
                }
            }
            None => out.push((k, m, c)),
        }
    }
    Ip { terms: out }
}

fn ip_work(p: &Ip) -> BTreeMap<Vec<i64>, (Monomial, BigRational)> {
    p.terms.iter().map(|(k, m, c)| (k.clone(), (m.clone(), c.clone()))).collect()
}

fn s_poly(f: &Ip, g: &Ip, order: MonomialOrder) -> BTreeMap<Vec<i64>, (Monomial, BigRational)> {
    let l = lcm_mono(f.lead(), g.lead());
    let mut work: BTreeMap<Vec<i64>, (Monomial, BigRational)> = BTreeMap::new();
    for (p, sign) in [(f, BigRational::one()), (g, -BigRational::one())] {
        let q: Monomial = l.iter().zip(p.lead()).map(|(a, b)| a - b).collect();
        for (_, m, c) in &p.terms[1..] {
            let nm: Monomial = m.iter().zip(&q).map(|(a, b)| a + b).collect();
            let k = order.key(&nm);
            let e = work.entry(k).or_insert((nm, BigRational::zero()));
            e.1 += c * &sign;
        }
    }
    work.retain(|_, v| !v.1.is_zero());
    work
}

/// `lead − trail` with `lead ≻ trail`.
#[derive(Clone)]
struct Bin {
    lead: Monomial,
    trail: Monomial,
}

/// Monomial normal form modulo a basis of pure difference binomials.
fn mono_nf(m: &Monomial, basis: &[Bin], skip: Option<usize>) -> Monomial {
    let mut m = m.clone();
    'outer: loop {
        for (i, g) in basis.iter().enumerate() {
            if Some(i) != skip && divides(&g.lead, &m) {
                for ((x, l), t) in m.iter_mut().zip(&g.lead).zip(&g.trail) {
                    *x = *x - l + t;
                }
                continue 'outer;
            }
        }
        return m;
    }
}

type KeyFn<'a> = &'a dyn Fn(&[u32]) -> Vec<i64>;

fn make_bin(u: Monomial, v: Monomial, key: KeyFn) -> Option<Bin> {
    match key(&u).cmp(&key(&v)) {
        Ordering::Equal => None,
        Ordering::Greater => Some(Bin { lead: u, trail: v }),
        Ordering::Less => Some(Bin { lead: v, trail: u }),
    }
}

/// `x^a − x^b` with coefficients exactly 1 and −1 in some order.
fn as_pure_binomial(p: &Polynomial) -> Option<(Monomial, Monomial)> {
    if p.len() != 2 {
        return None;
    }
    let mut it = p.terms.iter();
    let (a, ca) = it.next()?;
    let (b, cb) = it.next()?;
    if (ca + cb).is_zero() && ca.abs().is_one() {
        Some((a.clone(), b.clone()))
    } else {
        None
    }
}

/// Buchberger's algorithm specialised to pure difference binomials, where every
/// S-polynomial and remainder is again such a binomial.
fn binomial_buchberger(gens: &[(Monomial, Monomial)], key: KeyFn) -> Vec<Bin> {
    truncated_binomial_buchberger(gens, key, None)
}

/// With `max = Some(d)`, pairs whose lcm has `key(lcm)[0] > d` are skipped, leaving a basis
/// valid up to that degree when `key[0]` is a positive grading of homogeneous input.
fn truncated_binomial_buchberger(gens: &[(Monomial, Monomial)], key: KeyFn, max: Option<i64>) -> Vec<Bin> {
    let mut g: Vec<Bin> = gens.iter().filter_map(|(a, b)| make_bin(a.clone(), b.clone(), key)).collect();
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let pair = |g: &[Bin], i: usize, j: usize| -> u32 { lcm_mono(&g[i].lead, &g[j].lead).iter().sum() };
    for j in 0..g.len() {
        for i in 0..j {
            queue.insert((pair(&g, i, j), i, j));
            pending.insert((i, j));
        }
    }
    while let Some((_, i, j)) = queue.pop_first() {
        pending.remove(&(i, j));
        if g[i].lead.iter().zip(&g[j].lead).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let l = lcm_mono(&g[i].lead, &g[j].lead);
        if max.is_some_and(|d| key(&l)[0] > d) {
            continue;
        }
        let idx = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..g.len()).any(|k| {
            k != i && k != j && divides(&g[k].lead, &l) && !pending.contains(&idx(i, k)) && !pending.contains(&idx(j, k))
        });
        if chain {
            continue;
        }
        let shift = |b: &Bin| -> Monomial { l.iter().zip(&b.lead).zip(&b.trail).map(|((x, y), t)| x - y + t).collect() };
        let u = mono_nf(&shift(&g[i]), &g, None);
        let v = mono_nf(&shift(&g[j]), &g, None);
        if let Some(h) = make_bin(u, v, key) {
            g.push(h);
            let n = g.len() - 1;
            for k in 0..n {
                queue.insert((pair(&g, k, n), k, n));
                pending.insert((k, n));
            }
        }
    }
    let mut keep: Vec<Bin> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let redundant = g
            .iter()
            .enumerate()
            .any(|(j, q)| j != i && divides(&q.lead, &p.lead) && (q.lead != p.lead || j < i));
        if !redundant {
            keep.push(p.clone());
        }
    }
    keep.sort_by_key(|b| std::cmp::Reverse(key(&b.lead)));
    (0..keep.len())
        .map(|i| Bin { lead: keep[i].lead.clone(), trail: mono_nf(&keep[i].trail, &keep, Some(i)) })
        .collect()
}

fn bin_to_poly(b: &Bin) -> Polynomial {
    Polynomial::binomial(&b.lead, &b.trail)
}

/// Reduced Gröbner basis, sorted by decreasing leading monomial.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> Vec<Polynomial> {
    let nvars = match gens.first() {
        Some(g) => g.nvars,
        None => return Vec::new(),
    };
    let nonzero: Vec<&Polynomial> = gens.iter().filter(|p| !p.is_zero()).collect();
    let pure: Option<Vec<(Monomial, Monomial)>> = nonzero.iter().map(|p| as_pure_binomial(p)).collect();
    if let Some(pure) = pure {
        return binomial_buchberger(&pure, &|m| order.key(m)).iter().map(bin_to_poly).collect();
    }
    let mut g: Vec<Ip> = Vec::new();
    for p in gens.iter().filter(|p| !p.is_zero()) {
        let mut ip = Ip::from_poly(p, order);
        ip.make_monic();
        g.push(ip);
    }
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let push_pair = |queue: &mut BTreeSet<(u32, usize, usize)>, pending: &mut HashSet<(usize, usize)>, g: &[Ip], i: usize, j: usize| {
        let d = lcm_mono(g[i].lead(), g[j].lead()).iter().sum();
        queue.insert((d, i, j));
        pending.insert((i, j));
    };
    for j in 0..g.len() {
        for i in 0..j {
            push_pair(&mut queue, &mut pending, &g, i, j);
        }
    }
    while let Some((_, i, j)) = queue.pop_first() {
        pending.remove(&(i, j));
        let (li, lj) = (g[i].lead().clone(), g[j].lead().clone());
        if li.iter().zip(&lj).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let l = lcm_mono(&li, &lj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..g.len()).any(|k| {
            k != i && k != j && divides(g[k].lead(), &l) && !pending.contains(&key(i, k)) && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let h = reduce(s_poly(&g[i], &g[j], order), &g, order);
        if h.terms.is_empty() {
            continue;
        }
        let mut h = h;
        h.make_monic();
        g.push(h);
        let n = g.len() - 1;
        for k in 0..n {
            push_pair(&mut queue, &mut pending, &g, k, n);
        }
    }
    // Minimize, then interreduce.
    let mut keep: Vec<Ip> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let redundant = g.iter().enumerate().any(|(j, q)| {
            j != i && divides(q.lead(), p.lead()) && (q.lead() != p.lead() || j < i)
        });
        if !redundant {
            keep.push(p.clone());
        }
    }
    keep.sort_by(|a, b| b.terms[0].0.cmp(&a.terms[0].0));
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Ip> = keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p.clone()).collect();
        let head = keep[i].terms[0].clone();
        let tail = Ip { terms: keep[i].terms[1..].to_vec() };
        let mut r = reduce(ip_work(&tail), &others, order);
        r.terms.insert(0, head);
        out.push(r.to_poly(nvars));
    }
    out
}

/// Remainder of `f` modulo a Gröbner basis.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Polynomial {
    let ips: Vec<Ip> = basis
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let mut ip = Ip::from_poly(p, order);
            ip.make_monic();
            ip
        })
        .collect();
    reduce(ip_work(&Ip::from_poly(f, order)), &ips, order).to_poly(f.nvars)
}

/// `f ∈ ⟨gens⟩`.
pub fn membership(f: &Polynomial, gens: &[Polynomial], order: MonomialOrder) -> bool {
    if f.is_zero() {
        return true;
    }
    let gb = buchberger(gens, order);
    normal_form(f, &gb, order).is_zero()
}

/// Equality of ideals by mutual membership.
pub fn ideals_equal(a: &[Polynomial], b: &[Polynomial], order: MonomialOrder) -> bool {
    let ga = buchberger(a, order);
    let gb = buchberger(b, order);
    b.iter().all(|f| normal_form(f, &ga, order).is_zero()) && a.iter().all(|f| normal_form(f, &gb, order).is_zero())
}

/// `I : (∏_{i∈vars} x_i)^∞` as a reduced grevlex basis, via one auxiliary variable.
pub fn saturate(gens: &[Polynomial], vars: &[usize]) -> Vec<Polynomial> {
    let n = match gens.first() {
        Some(g) => g.nvars,
        None => return Vec::new(),
    };
    let shift: Vec<usize> = (1..=n).collect();
    let mut lifted: Vec<Polynomial> = gens.iter().map(|g| g.embed(n + 1, &shift)).collect();
    let mut tx = vec![0u32; n + 1];
    tx[0] = 1;
    for &v in vars {
        tx[v + 1] += 1;
    }
    lifted.push(Polynomial::from_terms(n + 1, vec![(tx, BigRational::one()), (vec![0; n + 1], -BigRational::one())]));
    let gb = buchberger(&lifted, MonomialOrder::Elimination(1));
    gb.into_iter()
        .filter(|p| p.terms.keys().all(|m| m[0] == 0))
        .map(|p| Polynomial {
            nvars: n,
            terms: p.terms.into_iter().map(|(m, c)| (m[1..].to_vec(), c)).collect(),
        })
        .collect()
}

/// Positive weights `w = Aᵀy` on the columns, when the columns lie in an open half-space.
fn positive_grading(a: &IntegerMatrix) -> Option<Vec<i64>> {
    let cols = a.column_vecs();
    if cols.iter().any(|c| crate::zlattice::is_zero_vec(c)) {
        return None;
    }
    let cone = crate::cones::Cone::new(a.rows(), &cols).ok()?;
    if !cone.is_pointed() {
        return None;
    }
    let dual = cone.dual();
    let y = dual.ray_vectors().iter().fold(vec![BigInt::zero(); a.rows()], |acc, r| crate::zlattice::add_vec(&acc, r));
    cols.iter().map(|c| crate::zlattice::dot(&y, c).to_i64()).collect()
}

/// Reduced grevlex basis of the toric ideal `I(Y_A)` of the columns of `a`: binomials of an
/// LLL-reduced saturated kernel basis, saturated by the product of all variables.
pub fn toric_ideal(a: &IntegerMatrix) -> Vec<Polynomial> {
    let k = lll_reduce(&kernel_basis(a).column_vecs());
    let gens: Vec<Polynomial> = k.iter().map(|l| Polynomial::lattice_binomial(l)).collect();
    if gens.is_empty() {
        return Vec::new();
    }
    let all: Vec<usize> = (0..a.cols()).collect();
    saturate(&gens, &all)
}

/// Minimal binomial generators of `I(Y_A)`, by increasing `w`-degree, when the columns lie
/// in an open half-space (so `w = Aᵀy > 0` grades the ideal positively).
pub fn toric_minimal_generators(a: &IntegerMatrix) -> Result<Vec<Polynomial>> {
    let w = positive_grading(a)
        .ok_or_else(|| Error::Invalid("columns do not lie in an open half-space".into()))?;
    let n = a.cols();
    let deg = |m: &[u32]| -> i64 { m.iter().zip(&w).map(|(&e, &x)| e as i64 * x).sum() };
    let mut cands: Vec<(i64, Polynomial)> = toric_ideal(a)
        .into_iter()
        .map(|p| (deg(p.terms.keys().next().unwrap()), p))
        .collect();
    cands.sort_by_key(|x| x.0);
    let key = |m: &[u32]| -> Vec<i64> {
        let mut k = Vec::with_capacity(n + 1);
        k.push(deg(m));
        k.extend(m.iter().rev().map(|&e| -(e as i64)));
        k
    };
    let mut kept: Vec<(Monomial, Monomial)> = Vec::new();
    let mut out = Vec::new();
    for (d, p) in cands {
        let (u, v) = as_pure_binomial(&p).expect("toric ideals are binomial");
        // Degree-truncated basis suffices for membership in degree d.
        let gb = truncated_binomial_buchberger(&kept, &key, Some(d));
        if mono_nf(&u, &gb, None) != mono_nf(&v, &gb, None) {
            kept.push((u, v));
            out.push(p);
        }
    }
    Ok(out)
}

/// `(u, c)` with `⟨u, a_i⟩ = c ≠ 0` for all columns, `u` integral and `gcd(u, c) = 1`, `c > 0`.
pub fn is_homogeneous_config(a: &IntegerMatrix) -> Option<(IVec, BigInt)> {
    let ones = vec![BigInt::one(); a.cols()];
    let u = solve_rational(&a.transpose(), &ones)?;
    let den = u.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ui: IVec = u.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    let g = ui.iter().fold(den.clone(), |g, x| g.gcd(x));
    Some((ui.iter().map(|x| x / &g).collect(), den / g))
}

/// `|d𝒜|`: size of the `d`-fold sumset of the columns.
pub fn hilbert_function(a: &IntegerMatrix, d: u32) -> usize {
    let cols = a.column_vecs();
    let mut cur: BTreeSet<IVec> = BTreeSet::new();
    cur.insert(vec![BigInt::zero(); a.rows()]);
    for _ in 0..d {
        let mut next = BTreeSet::new();
        for s in &cur {
            for c in &cols {
                next.insert(s.iter().zip(c).map(|(x, y)| x + y).collect::<IVec>());
            }
        }
        cur = next;
    }
    cur.len()
}

/// Configuration `𝒜 − m_i` of the chart at column `i`.
pub fn chart_config(a: &IntegerMatrix, i: usize) -> Result<IntegerMatrix> {
    if i >= a.cols() {
        return Err(Error::IndexOutOfRange { index: i, len: a.cols() });
    }
    let mi = a.column(i);
    let cols: Vec<IVec> = a.column_vecs().iter().map(|c| c.iter().zip(&mi).map(|(x, y)| x - y).collect()).collect();
    Ok(IntegerMatrix::from_columns(a.rows(), &cols))
}

/// Laurent polynomial in `ℚ[t₁^±,…,t_n^±]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<IVec, BigRational>,
}

impl LaurentPolynomial {
    pub fn new(nvars: usize, terms: Vec<(IVec, BigRational)>) -> Result<Self> {
        let mut map: BTreeMap<IVec, BigRational> = BTreeMap::new();
        for (m, c) in terms {
            if m.len() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: m.len() });
            }
            *map.entry(m).or_insert_with(BigRational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(LaurentPolynomial { nvars, terms: map })
    }

    /// Every exponent with coefficient 1.
    pub fn from_support(nvars: usize, support: &[IVec]) -> Result<Self> {
        Self::new(nvars, support.iter().map(|m| (m.clone(), BigRational::one())).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<IVec, BigRational> {
        &self.terms
    }

    pub fn support(&self) -> Vec<IVec> {
        self.terms.keys().cloned().collect()
    }

    pub fn parse(text: &str, nvars: usize) -> Result<Self> {
        let terms = parse_terms(text, nvars, "t", true)?;
        Self::new(nvars, terms.into_iter().map(|(m, c)| (m.into_iter().map(BigInt::from).collect(), c)).collect())
    }

    /// Text with terms in increasing lexicographic exponent order.
    pub fn format(&self) -> String {
        let terms: Vec<(Vec<i64>, BigRational)> =
            self.terms.iter().map(|(m, c)| (m.iter().map(|x| x.to_i64().unwrap()).collect(), c.clone())).collect();
        format_terms(&terms, "t")
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}
