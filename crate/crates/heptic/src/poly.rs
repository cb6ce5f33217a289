//! Sparse multivariate polynomials over an exact coefficient field.
//!
//! Terms are kept in a BTreeMap keyed by exponent vectors under the graded
//! reverse-lexicographic order, so iteration, leading terms and serialized
//! output are all canonical.

use crate::error::AlgebraError;
use crate::field::{rat_int, AlgNum, Coeff, Rat};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Exponent vector. Ordered by grevlex: higher total degree first; ties broken
/// so that the rightmost differing exponent is smaller on the larger monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub SmallVec<[u16; 6]>);

impl Monomial {
    pub fn zero(nvars: usize) -> Self {
        Monomial(smallvec::smallvec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut m = Self::zero(nvars);
        m.0[idx] = 1;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise divisibility.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            match a.cmp(b) {
                Ordering::Equal => {}
                // Smaller rightmost exponent means grevlex-larger.
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shared, immutable variable list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarSet(pub Arc<Vec<String>>);

impl VarSet {
    pub fn new(names: &[&str]) -> Self {
        VarSet(Arc::new(names.iter().map(|s| s.to_string()).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }
}

pub fn vars_y() -> VarSet {
    VarSet::new(&["y1", "y2", "y3"])
}

pub fn vars_x() -> VarSet {
    VarSet::new(&["x1", "x2", "x3"])
}

pub fn vars_w() -> VarSet {
    VarSet::new(&["w1", "w2", "w3"])
}

pub fn vars_wk() -> VarSet {
    VarSet::new(&["w1", "w2", "w3", "K1", "K2"])
}

pub fn vars_k() -> VarSet {
    VarSet::new(&["K1", "K2"])
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly<K: Coeff> {
    pub vars: VarSet,
    pub terms: BTreeMap<Monomial, K>,
}

pub type PolyA = Poly<AlgNum>;
pub type PolyE = Poly<crate::field::Ext3>;

impl<K: Coeff> Poly<K> {
    pub fn zero(vars: &VarSet) -> Self {
        Poly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &VarSet, c: K) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::zero(vars.len()), c);
        }
        Poly { vars: vars.clone(), terms }
    }

    pub fn var(vars: &VarSet, name: &str) -> Self {
        let idx = vars.index_of(name).expect("unknown variable");
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(vars.len(), idx), K::one());
        Poly { vars: vars.clone(), terms }
    }

    pub fn from_terms(vars: &VarSet, terms: impl IntoIterator<Item = (Monomial, K)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Grevlex-leading (monomial, coefficient).
    pub fn leading(&self) -> Option<(&Monomial, &K)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &Monomial) -> K {
        self.terms.get(m).cloned().unwrap_or_else(K::zero)
    }

    /// Coefficient of the monomial given by exponents.
    pub fn coeff_of(&self, exps: &[u16]) -> K {
        self.coeff(&Monomial(SmallVec::from_slice(exps)))
    }

    pub fn add_term(&mut self, m: Monomial, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.vars, rhs.vars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.vars, rhs.vars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k.mul(c))).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.vars, rhs.vars);
        let work = self.terms.len().saturating_mul(rhs.terms.len());
        if work > 1 << 18 {
            return self.mul_parallel(rhs);
        }
        let mut out = Self::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    fn mul_parallel(&self, rhs: &Self) -> Self {
        use rayon::prelude::*;
        let lhs: Vec<_> = self.terms.iter().collect();
        let nchunks = rayon::current_num_threads().max(1) * 4;
        let chunk = lhs.len().div_ceil(nchunks).max(1);
        let maps: Vec<BTreeMap<Monomial, K>> = lhs
            .par_chunks(chunk)
            .map(|part| {
                let mut acc: BTreeMap<Monomial, K> = BTreeMap::new();
                for (ma, ca) in part {
                    for (mb, cb) in &rhs.terms {
                        let m = ma.mul(mb);
                        let c = ca.mul(cb);
                        if c.is_zero() {
                            continue;
                        }
                        match acc.entry(m) {
                            std::collections::btree_map::Entry::Vacant(e) => {
                                e.insert(c);
                            }
                            std::collections::btree_map::Entry::Occupied(mut e) => {
                                let s = e.get().add(&c);
                                if s.is_zero() {
                                    e.remove();
                                } else {
                                    *e.get_mut() = s;
                                }
                            }
                        }
                    }
                }
                acc
            })
            .collect();
        let mut out = Self::zero(&self.vars);
        for map in maps {
            for (m, c) in map {
                out.add_term(m, c);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::constant(&self.vars, K::one());
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Formal partial derivative with respect to a named variable.
    pub fn diff(&self, var: &str) -> Result<Self, AlgebraError> {
        let idx = self
            .vars
            .index_of(var)
            .ok_or_else(|| AlgebraError::UnknownVariable(var.to_string()))?;
        Ok(self.diff_idx(idx))
    }

    pub fn diff_idx(&self, idx: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[idx] = e - 1;
            out.add_term(m2, c.mul(&K::from_int(i64::from(e))));
        }
        out
    }

    /// Exact evaluation at a point in the coefficient field.
    pub fn eval(&self, point: &[K]) -> Result<K, AlgebraError> {
        if point.len() != self.vars.len() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        // Power cache per variable.
        let maxdeg = self.degree() as usize;
        let mut pows: Vec<Vec<K>> = point
            .iter()
            .map(|x| {
                let mut v = Vec::with_capacity(maxdeg + 1);
                v.push(K::one());
                v.push(x.clone());
                v
            })
            .collect();
        for (i, x) in point.iter().enumerate() {
            while pows[i].len() <= maxdeg {
                let last = pows[i].last().unwrap().mul(x);
                pows[i].push(last);
            }
        }
        let mut acc = K::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&pows[i][e as usize]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Floating evaluation by direct monomial summation with cached powers.
    pub fn eval_c64(&self, point: &[Complex64]) -> Complex64 {
        assert_eq!(point.len(), self.vars.len(), "dimension mismatch");
        let maxdeg = self.degree() as usize;
        let mut pows: Vec<Vec<Complex64>> = Vec::with_capacity(point.len());
        for x in point {
            let mut v = Vec::with_capacity(maxdeg + 1);
            v.push(Complex64::new(1.0, 0.0));
            for k in 1..=maxdeg {
                let prev = v[k - 1];
                v.push(prev * x);
            }
            pows.push(v);
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = c.embed();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= pows[i][e as usize];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes x_i -> sum_j M[i][j] x_j (composition with a linear map).
    pub fn compose_linear(&self, m: &[Vec<K>]) -> Self {
        let n = self.vars.len();
        assert_eq!(m.len(), n);
        let lin: Vec<Poly<K>> = (0..n)
            .map(|i| {
                let mut p = Self::zero(&self.vars);
                for (j, c) in m[i].iter().enumerate() {
                    p.add_term(Monomial::var(n, j), c.clone());
                }
                p
            })
            .collect();
        // Memoize monomial images; each is built from a smaller one.
        let mut cache: BTreeMap<Monomial, Poly<K>> = BTreeMap::new();
        cache.insert(Monomial::zero(n), Self::constant(&self.vars, K::one()));
        let mut out = Self::zero(&self.vars);
        for (mono, c) in &self.terms {
            let img = Self::monomial_image(mono, &lin, &mut cache, n);
            for (mm, cc) in &img.terms {
                out.add_term(mm.clone(), cc.mul(c));
            }
        }
        out
    }

    fn monomial_image(
        mono: &Monomial,
        lin: &[Poly<K>],
        cache: &mut BTreeMap<Monomial, Poly<K>>,
        n: usize,
    ) -> Poly<K> {
        if let Some(p) = cache.get(mono) {
            return p.clone();
        }
        let i = mono.0.iter().position(|&e| e > 0).unwrap();
        let mut smaller = mono.clone();
        smaller.0[i] -= 1;
        let base = Self::monomial_image(&smaller, lin, cache, n);
        let img = base.mul(&lin[i]);
        cache.insert(mono.clone(), img.clone());
        img
    }

    /// Division with remainder by a single divisor under grevlex.
    /// For a principal ideal this is an exact divisibility test: the
    /// remainder vanishes iff `d` divides `self`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), AlgebraError> {
        if d.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let (lm, lc) = d.leading().unwrap();
        let lc_inv = lc.inv().expect("leading coefficient not invertible");
        let mut rem = self.clone();
        let mut quo = Self::zero(&self.vars);
        loop {
            let hit = rem
                .terms
                .iter()
                .rev()
                .find(|(m, _)| lm.divides(m))
                .map(|(m, c)| (m.clone(), c.clone()));
            match hit {
                None => break,
                Some((m, c)) => {
                    let qm = m.div(lm);
                    let qc = c.mul(&lc_inv);
                    // rem -= (qc * qm) * d
                    for (dm, dc) in &d.terms {
                        rem.add_term(qm.mul(dm), qc.mul(dc).neg());
                    }
                    quo.add_term(qm, qc);
                }
            }
        }
        Ok((quo, rem))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, d: &Self) -> Result<Self, AlgebraError> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(AlgebraError::InexactDivision)
        }
    }

    pub fn map_coeff<L: Coeff>(&self, f: impl Fn(&K) -> L) -> Poly<L> {
        let mut out = Poly::<L>::zero(&self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

impl PolyA {
    /// Promotes Q(θ) coefficients into Q(θ,√3).
    pub fn to_ext(&self) -> PolyE {
        self.map_coeff(|c| crate::field::Ext3::from_alg(c.clone()))
    }
}

impl PolyE {
    /// Back to Q(θ) when every √3 component vanishes.
    pub fn to_alg(&self) -> Option<PolyA> {
        let mut out = PolyA::zero(&self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.as_alg()?);
        }
        Some(out)
    }
}

// ---------------------------------------------------------------------------
// Content normalization
// ---------------------------------------------------------------------------

fn rat_content<'a>(coeffs: impl Iterator<Item = &'a Rat>) -> Rat {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for c in coeffs {
        num = num.gcd(c.numer());
        den = den.lcm(c.denom());
    }
    Rat::new(num, den)
}

impl PolyA {
    /// Divides out the content. For θ-free polynomials the content is the
    /// rational gcd-of-numerators over lcm-of-denominators with the sign fixed
    /// so the grevlex-leading coefficient is positive. A polynomial that is a
    /// Q(θ)-multiple of a θ-free one is first rescaled by its leading
    /// coefficient. Returns (primitive, scalar) with `self = scalar * primitive`.
    pub fn content_normalize(&self) -> Result<(PolyA, AlgNum), AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let theta_free = self.terms.values().all(|c| c.is_rational());
        if theta_free {
            let mut content = rat_content(self.terms.values().map(|c| &c.a));
            let (_, lead) = self.leading().unwrap();
            if lead.a.is_negative() {
                content = -content;
            }
            let inv = AlgNum::from_rat(content.clone()).inv().unwrap();
            return Ok((self.scale(&inv), AlgNum::from_rat(content)));
        }
        // Try factoring out the leading coefficient to reach a θ-free poly.
        let (_, lead) = self.leading().unwrap();
        let lead = lead.clone();
        let monic = self.scale(&lead.inv().unwrap());
        if monic.terms.values().all(|c| c.is_rational()) {
            let (prim, s) = monic.content_normalize()?;
            return Ok((prim, s.mul(&lead)));
        }
        // Genuinely mixed coefficients: extract the rational content of all
        // components, sign from the leading coefficient's rational part
        // (θ part if that vanishes).
        let mut content =
            rat_content(self.terms.values().flat_map(|c| [&c.a, &c.b].into_iter()));
        let sign_part = if lead.a.is_zero() { &lead.b } else { &lead.a };
        if sign_part.is_negative() {
            content = -content;
        }
        let inv = AlgNum::from_rat(content.clone()).inv().unwrap();
        Ok((self.scale(&inv), AlgNum::from_rat(content)))
    }
}

// ---------------------------------------------------------------------------
// Display
// ---------------------------------------------------------------------------

impl<K: Coeff> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<K: Coeff> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    write!(f, "*{}", self.vars.0[i])?;
                } else if e > 1 {
                    write!(f, "*{}^{}", self.vars.0[i], e)?;
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Text parser for transcribed displays
// ---------------------------------------------------------------------------

/// Parses an expanded polynomial expression over Q(θ).
///
/// Grammar: terms joined by `+`/`-`; a term is factors separated by `*` or
/// whitespace; a factor is an integer, a rational `p/q`, the symbol `t`
/// (meaning θ), or `name^exp` / `name`. Example: `3*y1^4 - 49*y3^4 + 42*y1*y2^2*y3`.
pub fn parse_poly(text: &str, vars: &VarSet) -> Result<PolyA, AlgebraError> {
    let cleaned: String = text.split_whitespace().collect::<Vec<_>>().join(" ");
    let mut out = PolyA::zero(vars);
    let mut term = String::new();
    let mut sign = 1i64;
    // Split on top-level + and - (no parentheses in the golden format).
    let flush = |term: &mut String, sign: i64, out: &mut PolyA| -> Result<(), AlgebraError> {
        if term.trim().is_empty() {
            return Ok(());
        }
        let (m, c) = parse_term(term.trim(), vars)?;
        out.add_term(m, if sign < 0 { c.neg() } else { c });
        term.clear();
        Ok(())
    };
    for ch in cleaned.chars() {
        match ch {
            '+' => {
                flush(&mut term, sign, &mut out)?;
                sign = 1;
            }
            '-' => {
                flush(&mut term, sign, &mut out)?;
                sign = -1;
            }
            _ => term.push(ch),
        }
    }
    flush(&mut term, sign, &mut out)?;
    Ok(out)
}

fn parse_term(term: &str, vars: &VarSet) -> Result<(Monomial, AlgNum), AlgebraError> {
    let mut coeff = AlgNum::one();
    let mut mono = Monomial::zero(vars.len());
    for factor in term.split(|c: char| c == '*' || c.is_whitespace()) {
        let factor = factor.trim();
        if factor.is_empty() {
            continue;
        }
        if factor == "t" {
            coeff = coeff.mul(&AlgNum::theta());
            continue;
        }
        let first = factor.chars().next().unwrap();
        if first.is_ascii_digit() {
            // integer or rational
            let r = parse_rat(factor)?;
            coeff = coeff.mul(&AlgNum::from_rat(r));
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let e: u16 = e
                    .parse()
                    .map_err(|_| AlgebraError::Parse(format!("bad exponent in `{factor}`")))?;
                (n, e)
            }
            None => (factor, 1),
        };
        let idx = vars
            .index_of(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        mono.0[idx] += exp;
    }
    Ok((mono, coeff))
}

fn parse_rat(s: &str) -> Result<Rat, AlgebraError> {
    let parse_int = |x: &str| -> Result<BigInt, AlgebraError> {
        x.parse::<BigInt>()
            .map_err(|_| AlgebraError::Parse(format!("bad number `{x}`")))
    };
    match s.split_once('/') {
        Some((n, d)) => Ok(Rat::new(parse_int(n)?, parse_int(d)?)),
        None => Ok(Rat::from(parse_int(s)?)),
    }
}

// ---------------------------------------------------------------------------
// Canonical JSON form
// ---------------------------------------------------------------------------

fn rat_str(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl PolyA {
    /// Canonical JSON value: variables list, then grevlex-ascending terms
    /// `[[exponents], "a", "b"]` meaning coefficient a + b·θ.
    pub fn to_json(&self) -> serde_json::Value {
        let vars: Vec<_> = self.vars.0.iter().cloned().collect();
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                serde_json::json!([
                    m.0.iter().map(|&e| e as u64).collect::<Vec<_>>(),
                    rat_str(&c.a),
                    rat_str(&c.b)
                ])
            })
            .collect();
        serde_json::json!({ "vars": vars, "terms": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<PolyA, AlgebraError> {
        let bad = || AlgebraError::Parse("malformed polynomial JSON".into());
        let vars_json = v.get("vars").and_then(|x| x.as_array()).ok_or_else(bad)?;
        let names: Vec<String> = vars_json
            .iter()
            .map(|x| x.as_str().map(str::to_string).ok_or_else(bad))
            .collect::<Result<_, _>>()?;
        let vars = VarSet(Arc::new(names));
        let mut out = PolyA::zero(&vars);
        for t in v.get("terms").and_then(|x| x.as_array()).ok_or_else(bad)? {
            let arr = t.as_array().ok_or_else(bad)?;
            if arr.len() != 3 {
                return Err(bad());
            }
            let exps = arr[0].as_array().ok_or_else(bad)?;
            let mono = Monomial(
                exps.iter()
                    .map(|e| e.as_u64().map(|u| u as u16).ok_or_else(bad))
                    .collect::<Result<_, _>>()?,
            );
            let a = parse_rat(arr[1].as_str().ok_or_else(bad)?)?;
            let b = parse_rat(arr[2].as_str().ok_or_else(bad)?)?;
            out.add_term(mono, AlgNum::new(a, b));
        }
        Ok(out)
    }

    /// Sum of coefficient digit data fed into derivation fingerprints.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        self.to_json().to_string().into_bytes()
    }
}

pub fn int_point(vals: &[i64]) -> Vec<AlgNum> {
    vals.iter().map(|&v| AlgNum::from_int(v)).collect()
}

pub fn rat_point(vals: &[Rat]) -> Vec<AlgNum> {
    vals.iter().map(|v| AlgNum::from_rat(v.clone())).collect()
}

pub fn scalar_rat(n: i64, d: i64) -> AlgNum {
    AlgNum::from_rat(Rat::new(BigInt::from(n), BigInt::from(d)))
}

pub fn big_scalar(n: &str) -> AlgNum {
    AlgNum::from_rat(Rat::from(n.parse::<BigInt>().expect("bad integer literal")))
}

pub fn rat_pow(base: &Rat, e: u32) -> Rat {
    let mut out = rat_int(1);
    for _ in 0..e {
        out *= base;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;
    use proptest::prelude::*;

    fn p(text: &str) -> PolyA {
        parse_poly(text, &vars_y()).unwrap()
    }

    #[test]
    fn grevlex_order_matches_reference() {
        // Degree-2 monomials in 3 vars, grevlex descending:
        // y1^2 > y1 y2 > y2^2 > y1 y3 > y2 y3 > y3^2
        let seq = ["y1^2", "y1*y2", "y2^2", "y1*y3", "y2*y3", "y3^2"];
        let monos: Vec<Monomial> =
            seq.iter().map(|s| p(s).terms.keys().next().unwrap().clone()).collect();
        for w in monos.windows(2) {
            assert!(w[0] > w[1], "{:?} should be grevlex-greater than {:?}", w[0], w[1]);
        }
    }

    #[test]
    fn parse_and_eval() {
        let f = p("3*y1^4 + 3*y2^4 - 49*y3^4 - 14*y1^3*y3 + 6*y1^2*y2^2 \
                   - 21*y1^2*y3^2 - 21*y2^2*y3^2 + 42*y1*y2^2*y3");
        assert_eq!(f.num_terms(), 8);
        let v = f.eval(&int_point(&[0, 0, 1])).unwrap();
        assert_eq!(v, AlgNum::from_int(-49));
        let v = f.eval(&int_point(&[1, 1, 1])).unwrap();
        assert_eq!(v, AlgNum::from_int(-51));
    }

    #[test]
    fn eval_at_zero_gives_constant_term() {
        let f = p("5 + 2*y1 - 3*y2*y3^2");
        assert_eq!(f.eval(&int_point(&[0, 0, 0])).unwrap(), AlgNum::from_int(5));
    }

    #[test]
    fn division_by_single_divisor_detects_divisibility() {
        let a = p("y1^2 - y2^2");
        let b = p("y1 + y2");
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, p("y1 - y2"));
        let c = p("y1^2 + y2^2");
        let (_, r) = c.div_rem(&b).unwrap();
        assert!(!r.is_zero());
    }

    #[test]
    fn content_normalization() {
        let a = p("2*y1^2 + 4*y2^2");
        let (prim, s) = a.content_normalize().unwrap();
        assert_eq!(prim, p("y1^2 + 2*y2^2"));
        assert_eq!(s, AlgNum::from_int(2));
        // Negative leading coefficient flips sign.
        let b = p("2*y1^2 + 4*y2^2").neg();
        let (prim2, s2) = b.content_normalize().unwrap();
        assert_eq!(prim2, prim);
        assert_eq!(s2, AlgNum::from_int(-2));
        // Idempotence: normalizing a primitive returns scalar 1.
        let (_, s3) = prim.content_normalize().unwrap();
        assert_eq!(s3, AlgNum::one());
        // θ-multiple of a rational polynomial.
        let c = a.scale(&AlgNum::of(0, 1));
        let (prim4, s4) = c.content_normalize().unwrap();
        assert_eq!(prim4, prim);
        assert_eq!(s4, AlgNum::of(0, 2));
        assert!(PolyA::zero(&vars_y()).content_normalize().is_err());
    }

    #[test]
    fn diff_unknown_variable_errors() {
        assert!(p("y1^2").diff("z9").is_err());
    }

    #[test]
    fn json_roundtrip_is_bit_exact() {
        let f = p("3*y1^4 - 49*y3^4 + 42*y1*y2^2*y3").scale(&AlgNum::new(rat_int(1), rat(1, 3)));
        let j1 = f.to_json().to_string();
        let g = PolyA::from_json(&serde_json::from_str(&j1).unwrap()).unwrap();
        let j2 = g.to_json().to_string();
        assert_eq!(j1, j2);
        assert_eq!(f, g);
    }

    fn arb_poly() -> impl Strategy<Value = PolyA> {
        proptest::collection::vec(
            ((0u16..3, 0u16..3, 0u16..3), -6i64..7, -3i64..4),
            0..6,
        )
        .prop_map(|terms| {
            let vars = vars_y();
            let mut p = PolyA::zero(&vars);
            for ((e1, e2, e3), a, b) in terms {
                p.add_term(Monomial(SmallVec::from_slice(&[e1, e2, e3])), AlgNum::of(a, b));
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.mul(&c)), a.mul(&b).mul(&c));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn product_rule(a in arb_poly(), b in arb_poly()) {
            let lhs = a.mul(&b).diff_idx(0);
            let rhs = a.diff_idx(0).mul(&b).add(&b.diff_idx(0).mul(&a));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn eval_commutes_with_embedding(a in arb_poly(), b in arb_poly(),
                                        x in -5i64..6, y in -5i64..6, z in -5i64..6) {
            let pt = int_point(&[x, y, z]);
            let exact = a.mul(&b).eval(&pt).unwrap().embed();
            let pt_c: Vec<_> = pt.iter().map(|v| v.embed()).collect();
            let float = a.eval_c64(&pt_c) * b.eval_c64(&pt_c);
            let scale = exact.norm().max(1.0);
            prop_assert!((exact - float).norm() / scale < 1e-9);
        }
    }
}
