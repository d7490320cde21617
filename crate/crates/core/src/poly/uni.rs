//! Univariate views: `UniPoly` has multivariate coefficients (the elimination
//! variable pulled out of a `MultiPoly`), `QPoly` is a dense polynomial over Q.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::multi::MultiPoly;
use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// Polynomial in the main variable `var` whose coefficients are `MultiPoly`s
/// (of the same arity) not involving `var`. Coefficient `i` multiplies `var^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    var: usize,
    nvars: usize,
    coeffs: Vec<MultiPoly>,
}

impl UniPoly {
    pub fn from_multi(p: &MultiPoly, var: usize) -> Self {
        let mut u = UniPoly { var, nvars: p.nvars(), coeffs: p.coefficients_in(var) };
        u.trim();
        u
    }

    pub fn from_coeffs(var: usize, nvars: usize, coeffs: Vec<MultiPoly>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.nvars() == nvars && !c.involves(var)));
        let mut u = UniPoly { var, nvars, coeffs };
        u.trim();
        u
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(MultiPoly::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> usize {
        self.var
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in the main variable; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> MultiPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(|| MultiPoly::zero(self.nvars))
    }

    pub fn leading_coeff(&self) -> MultiPoly {
        self.coeffs.last().cloned().unwrap_or_else(|| MultiPoly::zero(self.nvars))
    }

    pub fn to_multi(&self) -> MultiPoly {
        let t = MultiPoly::var(self.nvars, self.var);
        let mut acc = MultiPoly::zero(self.nvars);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &t) + c;
        }
        acc
    }

    pub fn scale(&self, c: &MultiPoly) -> UniPoly {
        UniPoly::from_coeffs(self.var, self.nvars, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: usize) -> UniPoly {
        let mut coeffs = vec![MultiPoly::zero(self.nvars); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { var: self.var, nvars: self.nvars, coeffs }
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect();
        UniPoly::from_coeffs(self.var, self.nvars, coeffs)
    }

    /// Divides every coefficient exactly by `d`; `None` if some division fails.
    pub fn exact_div_scalar(&self, d: &MultiPoly) -> Result<Option<UniPoly>> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            match c.exact_divide(d)? {
                Some(q) => out.push(q),
                None => return Ok(None),
            }
        }
        Ok(Some(UniPoly::from_coeffs(self.var, self.nvars, out)))
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &UniPoly) -> Result<UniPoly> {
        let db = b.degree().ok_or_else(|| Error::Domain("pseudo-remainder by zero".into()))?;
        let Some(da) = self.degree() else {
            return Ok(self.clone());
        };
        if da < db {
            return Ok(self.clone());
        }
        let lb = b.leading_coeff();
        let mut r = self.clone();
        let mut steps = 0u32;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading_coeff();
            // r <- lb * r - lr * x^(dr-db) * b
            let left = r.scale(&lb);
            let right = b.scale(&lr).shift(dr - db);
            let mut next = left.sub(&right);
            // leading term cancels by construction
            if next.coeffs.len() > dr {
                next.coeffs.truncate(dr);
                next.trim();
            }
            r = next;
            steps += 1;
        }
        let total = (da - db + 1) as u32;
        if total > steps {
            r = r.scale(&lb.pow(total - steps));
        }
        Ok(r)
    }
}

/// Dense univariate polynomial over Q, ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| rational::int(v)).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Exponent of the lowest nonzero term (multiplicity of the root t = 0).
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * t + rational::to_f64(c))
    }

    pub fn scale(&self, c: &Rational) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> QPoly {
        let mut r = QPoly::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    pub fn derivative(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * rational::int(i as i64)).collect())
    }

    pub fn make_monic(&self) -> QPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading_coeff();
        self.scale(&lc.recip())
    }

    pub fn div_rem(&self, d: &QPoly) -> Result<(QPoly, QPoly)> {
        let dd = d.degree().ok_or_else(|| Error::Domain("division by zero polynomial".into()))?;
        let mut r = self.coeffs.clone();
        let Some(dn) = self.degree() else {
            return Ok((QPoly::zero(), QPoly::zero()));
        };
        if dn < dd {
            return Ok((QPoly::zero(), self.clone()));
        }
        let lc = d.leading_coeff();
        let mut q = vec![Rational::zero(); dn - dd + 1];
        for i in (0..=dn - dd).rev() {
            let c = &r[i + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &c * dc;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((QPoly::new(q), QPoly::new(r)))
    }

    pub fn rem(&self, d: &QPoly) -> Result<QPoly> {
        Ok(self.div_rem(d)?.1)
    }

    /// Exact quotient or `None`.
    pub fn exact_div(&self, d: &QPoly) -> Result<Option<QPoly>> {
        let (q, r) = self.div_rem(d)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            // keep coefficients tame
            a = b;
            b = r.make_monic();
        }
        a.make_monic()
    }

    /// Squarefree part `p / gcd(p, p')`, monic.
    pub fn squarefree(&self) -> QPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.make_monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("nonzero").expect("gcd divides").make_monic()
    }

    /// Yun's squarefree decomposition: `p = c * prod s_i^i`, returned as `(i, s_i)`
    /// for nonconstant `s_i`.
    pub fn squarefree_decomposition(&self) -> Vec<(usize, QPoly)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.make_monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.exact_div(&a0).unwrap().unwrap();
        let mut c = fp.exact_div(&a0).unwrap().unwrap();
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((i, a.clone()));
            }
            b = b.exact_div(&a).unwrap().unwrap();
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.exact_div(&a).unwrap().unwrap();
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Converts to a `MultiPoly` in variable `var` of the given arity.
    pub fn to_multi(&self, nvars: usize, var: usize) -> MultiPoly {
        let terms = self.coeffs.iter().enumerate().map(|(i, c)| {
            let mut e = vec![0; nvars];
            e[var] = i as u32;
            (e, c.clone())
        });
        MultiPoly::from_terms(nvars, terms).expect("arity is consistent")
    }

    /// Reads a `MultiPoly` that only involves `var`.
    pub fn from_multi(p: &MultiPoly, var: usize) -> Result<QPoly> {
        let mut coeffs = vec![Rational::zero(); p.degree_in(var).unwrap_or(0) as usize + 1];
        for (m, c) in p.terms() {
            if m.exps().iter().enumerate().any(|(i, &e)| i != var && e > 0) {
                return Err(Error::Domain("polynomial involves other variables".into()));
            }
            coeffs[m.exps()[var] as usize] = c.clone();
        }
        Ok(QPoly::new(coeffs))
    }

    /// Homogeneous substitution for a binary form of formal degree `d`:
    /// `F(t, u) -> F(a t + b u, c t + e u)` dehomogenized at `u = 1`.
    pub fn mobius(&self, d: usize, a: &Rational, b: &Rational, c: &Rational, e: &Rational) -> QPoly {
        let num = QPoly::new(vec![b.clone(), a.clone()]);
        let den = QPoly::new(vec![e.clone(), c.clone()]);
        let mut acc = QPoly::zero();
        for (i, ci) in self.coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            acc = &acc + &(&num.pow(i as u32) * &den.pow((d - i) as u32)).scale(ci);
        }
        acc
    }

    pub fn sign_at(&self, t: &Rational) -> i32 {
        rational::sign(&self.eval(t))
    }

    pub fn is_negative_leading(&self) -> bool {
        self.leading_coeff().is_negative()
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({})", self.to_multi(1, 0).display_with(&["t"]))
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_multi(1, 0).display_with(&["t"]))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}
