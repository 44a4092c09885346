//! Exact polynomial arithmetic over arbitrary-precision integers.
//!
//! [`BivarPoly`] is a sparse polynomial in two formal variables, written λ and
//! μ. Which counting arguments λ and μ stand for is decided by the producer
//! (see [`crate::dc::Convention`]); this module only does the algebra.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("interpolated coefficient of λ^{i}*μ^{j} is {value}, not an integer")]
    NonIntegral { i: u32, j: u32, value: String },
    #[error("grid point ({0}, {1}) given twice")]
    DuplicatePoint(String, String),
    #[error("grid needs {expected}x{expected} tensor-product points: {detail}")]
    IncompleteGrid { expected: usize, detail: String },
    #[error("cannot parse polynomial term `{0}`")]
    Parse(String),
}

/// Univariate polynomial with integer coefficients, lowest degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![BigInt::one()])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(UniPoly::one(), |acc, _| &acc * self)
    }

    /// Reads this polynomial as one in λ alone.
    pub fn in_lambda(&self) -> BivarPoly {
        BivarPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| ((i as u32, 0), c.clone())),
        )
    }

    /// Reads this polynomial as one in μ alone.
    pub fn in_mu(&self) -> BivarPoly {
        BivarPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| ((0, j as u32), c.clone())),
        )
    }

    /// Renders highest degree first as `c*x^i` terms.
    pub fn display_in(&self, var: &str) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let body = if i == 0 { String::new() } else { format!("*{var}^{i}") };
                (c.clone(), body)
            });
        join_terms(terms)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

/// Sparse polynomial in λ and μ with integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn lambda() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn mu() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn monomial(c: impl Into<BigInt>, i: u32, j: u32) -> Self {
        Self::from_terms([((i, j), c.into())])
    }

    /// Sums the given terms; repeated exponents accumulate.
    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), BigInt)>) -> Self {
        let mut p = BivarPoly::zero();
        for (exp, c) in terms {
            p.add_term(exp, c);
        }
        p
    }

    fn add_term(&mut self, exp: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of λ^i μ^j.
    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Nonzero terms in display order: total degree descending, then λ
    /// degree descending.
    pub fn display_terms(&self) -> Vec<((u32, u32), &BigInt)> {
        let mut t: Vec<_> = self.terms().collect();
        t.sort_by(|((a, b), _), ((c, d), _)| (c + d, c).cmp(&(a + b, a)));
        t
    }

    pub fn deg_lambda(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn deg_mu(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return BivarPoly::zero();
        }
        BivarPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(BivarPoly::one(), |acc, _| &acc * self)
    }

    /// Exact evaluation at integer arguments.
    pub fn eval(&self, lambda: &BigInt, mu: &BigInt) -> BigInt {
        self.slice_lambda(lambda).eval(mu)
    }

    /// Exact evaluation at rational arguments.
    pub fn eval_rational(&self, lambda: &Rational, mu: &Rational) -> Rational {
        // Horner in λ over inner Horner polynomials in μ
        let top = self.deg_lambda().unwrap_or(0);
        let mut acc = Rational::zero();
        for i in (0..=top).rev() {
            let top_mu = self
                .terms
                .range((i, 0)..=(i, u32::MAX))
                .map(|(&(_, j), _)| j)
                .max()
                .unwrap_or(0);
            let mut inner = Rational::zero();
            for j in (0..=top_mu).rev() {
                inner = inner * mu + Rational::from_integer(self.coeff(i, j));
            }
            acc = acc * lambda + inner;
        }
        acc
    }

    /// Substitutes λ = `lambda`, leaving a polynomial in μ.
    pub fn slice_lambda(&self, lambda: &BigInt) -> UniPoly {
        let mut out: Vec<BigInt> = Vec::new();
        for (&(i, j), c) in &self.terms {
            let j = j as usize;
            if out.len() <= j {
                out.resize(j + 1, BigInt::zero());
            }
            out[j] += c * lambda.pow(i);
        }
        UniPoly::from_coeffs(out)
    }

    /// Substitutes μ = `mu`, leaving a polynomial in λ.
    pub fn slice_mu(&self, mu: &BigInt) -> UniPoly {
        let mut out: Vec<BigInt> = Vec::new();
        for (&(i, j), c) in &self.terms {
            let i = i as usize;
            if out.len() <= i {
                out.resize(i + 1, BigInt::zero());
            }
            out[i] += c * mu.pow(j);
        }
        UniPoly::from_coeffs(out)
    }

    /// Formal partial derivative with respect to μ.
    pub fn d_dmu(&self) -> Self {
        BivarPoly::from_terms(
            self.terms
                .iter()
                .filter(|(&(_, j), _)| j > 0)
                .map(|(&(i, j), c)| ((i, j - 1), c * BigInt::from(j))),
        )
    }

    /// Renders with custom variable names, e.g. `x`/`y` for the antibalance
    /// polynomial.
    pub fn display_with(&self, first: &str, second: &str) -> String {
        let terms = self.display_terms().into_iter().map(|((i, j), c)| {
            let mut body = String::new();
            if i > 0 {
                body.push_str(&format!("*{first}^{i}"));
            }
            if j > 0 {
                body.push_str(&format!("*{second}^{j}"));
            }
            (c.clone(), body)
        });
        join_terms(terms)
    }
}

fn join_terms(terms: impl Iterator<Item = (BigInt, String)>) -> String {
    let mut out = String::new();
    for (c, body) in terms {
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&c.abs().to_string());
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("λ", "μ"))
    }
}

impl FromStr for BivarPoly {
    type Err = PolyError;

    /// Parses the [`Display`](fmt::Display) form: `c*λ^i*μ^j` terms joined
    /// by `+`/`-`, with zero exponents omitted.
    fn from_str(s: &str) -> Result<Self, PolyError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(PolyError::Parse(s.to_string()));
        }
        let mut pieces = Vec::new();
        let mut current = String::new();
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !current.is_empty() {
                pieces.push(std::mem::take(&mut current));
            }
            current.push(ch);
        }
        pieces.push(current);

        let mut p = BivarPoly::zero();
        for piece in pieces {
            let (negative, body) = match piece.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, piece.strip_prefix('+').unwrap_or(&piece)),
            };
            let bad = || PolyError::Parse(piece.clone());
            let mut factors = body.split('*');
            let mut c: BigInt = factors.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if negative {
                c = -c;
            }
            let (mut i, mut j) = (0u32, 0u32);
            for factor in factors {
                let (var, exp) = factor.split_once('^').ok_or_else(bad)?;
                let exp: u32 = exp.parse().map_err(|_| bad())?;
                match var {
                    "λ" => i += exp,
                    "μ" => j += exp,
                    _ => return Err(bad()),
                }
            }
            p.add_term((i, j), c);
        }
        Ok(p)
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;

    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;

    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;

    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &rhs.terms {
                out.add_term((a + c, b + d), x * y);
            }
        }
        out
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;

    fn neg(self) -> BivarPoly {
        self.scale(&BigInt::from(-1))
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($trait:ident :: $method:ident),*) => {$(
        impl $trait for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}

forward_owned!(BivarPoly, Add::add, Sub::sub, Mul::mul);
forward_owned!(UniPoly, Add::add, Sub::sub, Mul::mul);

/// Lagrange basis polynomials for the nodes `xs`, as rational coefficient
/// vectors (lowest degree first).
fn lagrange_basis(xs: &[BigInt]) -> Vec<Vec<Rational>> {
    let n = xs.len();
    (0..n)
        .map(|i| {
            let mut coeffs = vec![Rational::one()];
            let mut denom = BigInt::one();
            for (m, xm) in xs.iter().enumerate() {
                if m == i {
                    continue;
                }
                // multiply by (x - xm)
                let mut next = vec![Rational::zero(); coeffs.len() + 1];
                for (d, c) in coeffs.iter().enumerate() {
                    next[d + 1] += c;
                    next[d] -= c * Rational::from_integer(xm.clone());
                }
                coeffs = next;
                denom *= &xs[i] - xm;
            }
            let denom = Rational::from_integer(denom);
            coeffs.into_iter().map(|c| c / &denom).collect()
        })
        .collect()
}

/// Recovers the unique polynomial with λ- and μ-degree at most `degree`
/// through the given `(λ, μ, value)` points.
///
/// The points must form a full tensor-product grid of `degree + 1` distinct λ
/// values by `degree + 1` distinct μ values. Arithmetic is exact; a
/// non-integral coefficient in the result is reported as an error.
pub fn interpolate_grid(
    points: impl IntoIterator<Item = (BigInt, BigInt, BigInt)>,
    degree: usize,
) -> Result<BivarPoly, PolyError> {
    let size = degree + 1;
    let mut values: BTreeMap<(BigInt, BigInt), BigInt> = BTreeMap::new();
    for (x, y, v) in points {
        if values.contains_key(&(x.clone(), y.clone())) {
            return Err(PolyError::DuplicatePoint(x.to_string(), y.to_string()));
        }
        values.insert((x, y), v);
    }
    let xs: Vec<BigInt> = values
        .keys()
        .map(|(x, _)| x.clone())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let ys: Vec<BigInt> = values
        .keys()
        .map(|(_, y)| y.clone())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if xs.len() != size || ys.len() != size || values.len() != size * size {
        return Err(PolyError::IncompleteGrid {
            expected: size,
            detail: format!(
                "{} distinct λ values, {} distinct μ values, {} points",
                xs.len(),
                ys.len(),
                values.len()
            ),
        });
    }

    let lx = lagrange_basis(&xs);
    let ly = lagrange_basis(&ys);
    let mut out = BivarPoly::zero();
    for a in 0..size {
        for b in 0..size {
            let mut c = Rational::zero();
            for (i, x) in xs.iter().enumerate() {
                if lx[i][a].is_zero() {
                    continue;
                }
                for (j, y) in ys.iter().enumerate() {
                    let v = &values[&(x.clone(), y.clone())];
                    if v.is_zero() {
                        continue;
                    }
                    c += &lx[i][a] * &ly[j][b] * Rational::from_integer(v.clone());
                }
            }
            if !c.is_integer() {
                return Err(PolyError::NonIntegral {
                    i: a as u32,
                    j: b as u32,
                    value: c.to_string(),
                });
            }
            out.add_term((a as u32, b as u32), c.to_integer());
        }
    }
    Ok(out)
}

/// Univariate analogue of [`interpolate_grid`]: the unique polynomial of
/// degree at most `degree` through `degree + 1` points with distinct `x`.
pub fn interpolate_univariate(
    points: impl IntoIterator<Item = (BigInt, BigInt)>,
    degree: usize,
) -> Result<UniPoly, PolyError> {
    let mut values: BTreeMap<BigInt, BigInt> = BTreeMap::new();
    for (x, v) in points {
        if values.contains_key(&x) {
            return Err(PolyError::DuplicatePoint(x.to_string(), String::new()));
        }
        values.insert(x, v);
    }
    if values.len() != degree + 1 {
        return Err(PolyError::IncompleteGrid {
            expected: degree + 1,
            detail: format!("{} points", values.len()),
        });
    }
    let xs: Vec<BigInt> = values.keys().cloned().collect();
    let basis = lagrange_basis(&xs);
    let mut coeffs = Vec::with_capacity(degree + 1);
    for a in 0..=degree {
        let mut c = Rational::zero();
        for (i, x) in xs.iter().enumerate() {
            c += &basis[i][a] * Rational::from_integer(values[x].clone());
        }
        if !c.is_integer() {
            return Err(PolyError::NonIntegral {
                i: a as u32,
                j: 0,
                value: c.to_string(),
            });
        }
        coeffs.push(c.to_integer());
    }
    Ok(UniPoly::from_coeffs(coeffs))
}
