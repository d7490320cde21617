//! Sparse multivariate polynomials over Q.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors ordered graded
//! lexicographically, so the last entry is the leading term and iteration in
//! reverse gives the canonical printing order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// Default printing names; index 3 is the symbolic congruence parameter.
pub const DEFAULT_VARS: [&str; 6] = ["x", "y", "z", "q", "w", "v"];

/// Exponent vector with graded-lex ordering.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, rational::int(c))
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for arity {nvars}");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::term(e, Rational::one())
    }

    pub fn term(exps: Vec<u32>, c: Rational) -> Self {
        let nvars = exps.len();
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial(exps), c);
        }
        p
    }

    /// Builds from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Arity(nvars, e.len()));
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    /// Lowest exponent of `var` over all terms.
    pub fn min_degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).min()
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    /// Terms in canonical (graded-lex descending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &MultiPoly) {
        assert_eq!(self.nvars, other.nvars, "arity mismatch in polynomial arithmetic");
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `pow` with a signed exponent; negative exponents are a domain error.
    pub fn checked_pow(&self, exp: i64) -> Result<MultiPoly> {
        if exp < 0 {
            return Err(Error::Domain(format!("negative exponent {exp}")));
        }
        Ok(self.pow(exp as u32))
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut v = rational::to_f64(c);
                for (x, &e) in point.iter().zip(&m.0) {
                    if e > 0 {
                        v *= x.powi(e as i32);
                    }
                }
                v
            })
            .sum()
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    v *= rational::pow(x, e);
                }
            }
            acc += v;
        }
        acc
    }

    /// Substitutes `vars[i]` for variable `i`; all replacements share one arity.
    pub fn compose(&self, vars: &[MultiPoly]) -> MultiPoly {
        assert_eq!(vars.len(), self.nvars);
        let out_n = vars.first().map(|v| v.nvars).unwrap_or(0);
        // cache powers per variable
        let mut powers: Vec<Vec<MultiPoly>> = vars.iter().map(|v| vec![MultiPoly::one(v.nvars), v.clone()]).collect();
        let mut acc = MultiPoly::zero(out_n);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(out_n, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &vars[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            acc += t;
        }
        acc
    }

    /// Replaces variable `var` by the constant `value`.
    pub fn substitute(&self, var: usize, value: &Rational) -> MultiPoly {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = std::mem::replace(&mut e[var], 0);
            out.add_term(Monomial(e), c * rational::pow(value, k));
        }
        out
    }

    /// Returns `F(x + o)` for a shift vector `o` (one entry per variable).
    pub fn translate(&self, origin: &[Rational]) -> Result<MultiPoly> {
        if origin.len() != self.nvars {
            return Err(Error::Arity(self.nvars, origin.len()));
        }
        let vars: Vec<MultiPoly> = origin
            .iter()
            .enumerate()
            .map(|(i, o)| &MultiPoly::var(self.nvars, i) + &MultiPoly::constant(self.nvars, o.clone()))
            .collect();
        Ok(self.compose(&vars))
    }

    /// Homogeneous components in ascending degree; empty degrees are omitted.
    pub fn homogeneous_components(&self) -> Vec<(u32, MultiPoly)> {
        let mut by_deg: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            by_deg
                .entry(m.degree())
                .or_insert_with(|| MultiPoly::zero(self.nvars))
                .terms
                .insert(m.clone(), c.clone());
        }
        by_deg.into_iter().collect()
    }

    /// Homogeneous components with respect to a subset of variables only.
    pub fn homogeneous_components_in(&self, vars: &[usize]) -> Vec<(u32, MultiPoly)> {
        let mut by_deg: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = vars.iter().map(|&v| m.0[v]).sum();
            by_deg
                .entry(d)
                .or_insert_with(|| MultiPoly::zero(self.nvars))
                .terms
                .insert(m.clone(), c.clone());
        }
        by_deg.into_iter().collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn derivative(&self, var: usize) -> MultiPoly {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let k = m.0[var];
            if k == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[var] -= 1;
            out.add_term(Monomial(e), c * rational::int(k as i64));
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn exact_divide(&self, divisor: &MultiPoly) -> Result<Option<MultiPoly>> {
        self.check_arity(divisor);
        if divisor.is_zero() {
            return Err(Error::Domain("division by the zero polynomial".into()));
        }
        let (lm, lc) = divisor.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((rm, rc)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            let Some(qm) = rm.div(&lm) else {
                return Ok(None);
            };
            let qc = &rc / &lc;
            rem -= &divisor.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Ok(Some(quot))
    }

    /// Divides out `divisor` as often as it goes; returns the cofactor and the count.
    pub fn divide_out(&self, divisor: &MultiPoly) -> (MultiPoly, u32) {
        let mut cur = self.clone();
        let mut k = 0;
        if divisor.is_constant() || cur.is_zero() {
            return (cur, 0);
        }
        while let Ok(Some(q)) = cur.exact_divide(divisor) {
            cur = q;
            k += 1;
        }
        (cur, k)
    }

    /// Adds `extra` trailing variables that the polynomial does not use.
    pub fn extend_vars(&self, extra: usize) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars + extra,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.resize(self.nvars + extra, 0);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Removes variable `var`, which must not occur.
    pub fn drop_var(&self, var: usize) -> Result<MultiPoly> {
        if self.involves(var) {
            return Err(Error::Domain(format!("variable {var} still occurs")));
        }
        Ok(MultiPoly {
            nvars: self.nvars - 1,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.remove(var);
                    (Monomial(e), c.clone())
                })
                .collect(),
        })
    }

    /// Reorders variables: variable `i` of `self` becomes variable `map[i]` of the result.
    pub fn remap_vars(&self, map: &[usize], nvars: usize) -> MultiPoly {
        assert_eq!(map.len(), self.nvars);
        let mut out = Self::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (i, &k) in m.0.iter().enumerate() {
                e[map[i]] += k;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Coefficients with respect to `var`: entry `k` multiplies `var^k` and no
    /// longer involves `var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(self.nvars); deg + 1];
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = std::mem::replace(&mut e[var], 0) as usize;
            out[k].terms.insert(Monomial(e), c.clone());
        }
        if self.is_zero() {
            out.clear();
        }
        out
    }

    /// Groups terms by their exponents in `vars`; the values no longer involve `vars`.
    pub fn coefficients_in_vars(&self, vars: &[usize]) -> BTreeMap<Vec<u32>, MultiPoly> {
        let mut out: BTreeMap<Vec<u32>, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key: Vec<u32> = vars.iter().map(|&v| m.0[v]).collect();
            let mut e = m.0.clone();
            for &v in vars {
                e[v] = 0;
            }
            out.entry(key).or_insert_with(|| Self::zero(self.nvars)).terms.insert(Monomial(e), c.clone());
        }
        out
    }

    /// The monomial dividing every term (componentwise minimum exponent).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one(self.nvars);
        };
        let mut e = first.0.clone();
        for m in it {
            for (a, b) in e.iter_mut().zip(&m.0) {
                *a = (*a).min(*b);
            }
        }
        Monomial(e)
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients with a positive leading coefficient is `sign * c`; returns
    /// `(sign * c, primitive)`.
    pub fn rational_content(&self) -> (Rational, MultiPoly) {
        if self.is_zero() {
            return (Rational::zero(), self.clone());
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if self.leading_coeff().is_negative() {
            content = -content;
        }
        let prim = self.scale(&content.recip());
        (content, prim)
    }

    /// Integer-primitive form with positive leading coefficient.
    pub fn normalized(&self) -> MultiPoly {
        self.rational_content().1
    }

    /// `Some(c)` when `self == c * other` for a nonzero rational `c`.
    pub fn scalar_ratio(&self, other: &MultiPoly) -> Option<Rational> {
        if self.nvars != other.nvars || self.terms.len() != other.terms.len() || self.is_zero() {
            return None;
        }
        let (m, a) = self.leading_term()?;
        let b = other.terms.get(m)?;
        let c = a / b;
        (*self == other.scale(&c)).then_some(c)
    }

    pub fn equals_up_to_scalar(&self, other: &MultiPoly) -> bool {
        self.scalar_ratio(other).is_some()
    }

    /// Largest absolute coefficient as `f64`.
    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().map(|c| rational::to_f64(c).abs()).fold(0.0, f64::max)
    }

    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, names }
    }
}

struct PolyDisplay<'a> {
    poly: &'a MultiPoly,
    names: &'a [&'a str],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.poly.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let name = self.names.get(i).map(|s| s.to_string()).unwrap_or_else(|| format!("v{i}"));
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", rational::format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", rational::format_rational(&abs), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = if self.nvars <= DEFAULT_VARS.len() { DEFAULT_VARS.to_vec() } else { Vec::new() };
        fmt::Display::fmt(&PolyDisplay { poly: self, names: &names }, f)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.nvars, self)
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        self.check_arity(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign<MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: MultiPoly) {
        self.check_arity(&rhs);
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        self.check_arity(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += rhs;
        self
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, rhs: MultiPoly) -> MultiPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_arity(rhs);
        let mut out = MultiPoly::zero(self.nvars);
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        let (small, large) = if self.terms.len() <= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

/// Shorthand used throughout the geometric layers: `x`, `y`, `z` in arity `n`.
pub fn xyz(nvars: usize) -> (MultiPoly, MultiPoly, MultiPoly) {
    (MultiPoly::var(nvars, 0), MultiPoly::var(nvars, 1), MultiPoly::var(nvars, 2))
}

/// `x^2 + y^2 + z^2`, the polynomial cutting out the absolute conic at infinity.
pub fn absolute_quadric(nvars: usize) -> MultiPoly {
    let (x, y, z) = xyz(nvars);
    &(&(&x * &x) + &(&y * &y)) + &(&z * &z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::{int, rat};

    fn x() -> MultiPoly {
        MultiPoly::var(3, 0)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(3, 1)
    }

    #[test]
    fn cancellation() {
        let p = &(&x() * &x()) + &y();
        let r = &p + &(-&y());
        assert_eq!(r, &x() * &x());
    }

    #[test]
    fn square_of_absolute_quadric() {
        let a = absolute_quadric(3);
        let sq = &a * &a;
        let expected = MultiPoly::from_terms(
            3,
            vec![
                (vec![4, 0, 0], int(1)),
                (vec![0, 4, 0], int(1)),
                (vec![0, 0, 4], int(1)),
                (vec![2, 2, 0], int(2)),
                (vec![2, 0, 2], int(2)),
                (vec![0, 2, 2], int(2)),
            ],
        )
        .unwrap();
        assert_eq!(sq, expected);
        assert_eq!(a.pow(2), expected);
    }

    #[test]
    fn plane_factor_pair() {
        let xm = &x() - &y();
        let xp = &x() + &y();
        let prod = &xm * &xp.pow(2);
        let expected = MultiPoly::from_terms(
            3,
            vec![(vec![3, 0, 0], int(1)), (vec![2, 1, 0], int(1)), (vec![1, 2, 0], int(-1)), (vec![0, 3, 0], int(-1))],
        )
        .unwrap();
        assert_eq!(prod, expected);
    }

    #[test]
    fn negative_power_is_domain_error() {
        assert!(matches!(x().checked_pow(-1), Err(Error::Domain(_))));
        assert_eq!(x().checked_pow(0).unwrap(), MultiPoly::one(3));
    }

    #[test]
    fn graded_lex_printing() {
        let p = &(&x() + &(&y() * &y())) + &MultiPoly::from_int(3, 3);
        assert_eq!(p.to_string(), "y^2 + x + 3");
        let q = p.scale(&rat(-1, 2));
        assert_eq!(q.to_string(), "-1/2*y^2 - 1/2*x - 3/2");
    }

    #[test]
    fn exact_division() {
        let a = &(&x() * &x()) - &(&y() * &y());
        let q = a.exact_divide(&(&x() - &y())).unwrap().unwrap();
        assert_eq!(q, &x() + &y());
        let b = &(&x() * &x()) + &MultiPoly::one(3);
        assert_eq!(b.exact_divide(&x()).unwrap(), None);
        assert!(b.exact_divide(&MultiPoly::zero(3)).is_err());
    }

    #[test]
    fn homogeneous_split() {
        let p = &x() + &(&x() * &x());
        let comps = p.homogeneous_components();
        assert_eq!(comps, vec![(1, x()), (2, &x() * &x())]);
        let a = absolute_quadric(3);
        assert_eq!(a.homogeneous_components(), vec![(2, a.clone())]);
    }

    #[test]
    fn translation() {
        let z = MultiPoly::var(3, 2);
        let t = z.translate(&[int(0), int(0), int(1)]).unwrap();
        assert_eq!(t, &z + &MultiPoly::one(3));
        let p = absolute_quadric(3);
        assert_eq!(p.translate(&[int(0), int(0), int(0)]).unwrap(), p);
    }

    #[test]
    fn rational_content_normalizes_sign() {
        let p = &x().scale(&rat(-2, 3)) + &y().scale(&rat(4, 9));
        let (c, prim) = p.rational_content();
        assert_eq!(c, rat(-2, 9));
        assert_eq!(prim, &x().scale(&int(3)) - &y().scale(&int(2)));
    }
}
