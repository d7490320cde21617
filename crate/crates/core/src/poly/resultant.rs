//! Resultants over Q[vars]: subresultant PRS as the working route, the
//! Sylvester determinant (fraction-free Bareiss) as an independent check.

use num_traits::One;

use super::multi::MultiPoly;
use super::uni::UniPoly;
use crate::error::{Error, Result};

fn exact(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly> {
    a.exact_divide(b)?
        .ok_or_else(|| Error::Domain("inexact division inside the subresultant sequence".into()))
}

/// `Res_t(P, Q)` via the subresultant polynomial remainder sequence.
pub fn resultant(p: &UniPoly, q: &UniPoly) -> Result<MultiPoly> {
    if p.var() != q.var() || p.nvars() != q.nvars() {
        return Err(Error::Domain("resultant operands use different main variables".into()));
    }
    if p.is_zero() || q.is_zero() {
        return Err(Error::Domain("resultant of a zero polynomial".into()));
    }
    let n = p.nvars();
    let (mut a, mut b) = (p.clone(), q.clone());
    let mut sign_neg = false;
    let da = a.degree().unwrap();
    let db = b.degree().unwrap();
    if da < db {
        std::mem::swap(&mut a, &mut b);
        if da % 2 == 1 && db % 2 == 1 {
            sign_neg = true;
        }
    }
    if b.degree() == Some(0) {
        let r = b.leading_coeff().pow(a.degree().unwrap() as u32);
        return Ok(if sign_neg { -r } else { r });
    }

    let mut g = MultiPoly::one(n);
    let mut h = MultiPoly::one(n);
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let r = a.pseudo_rem(&b)?;
        a = b;
        if r.is_zero() {
            return Ok(MultiPoly::zero(n));
        }
        let divisor = &g * &h.pow(delta);
        b = r
            .exact_div_scalar(&divisor)?
            .ok_or_else(|| Error::Domain("inexact division inside the subresultant sequence".into()))?;
        g = a.leading_coeff();
        // h <- g^delta / h^(delta - 1)
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => exact(&g.pow(delta), &h.pow(delta - 1))?,
        };
        if b.degree() == Some(0) {
            let da = a.degree().unwrap() as u32;
            // h <- h^(1 - da) * lc(b)^da
            let num = b.leading_coeff().pow(da);
            let res = if da == 0 {
                num
            } else {
                exact(&num, &h.pow(da - 1))?
            };
            return Ok(if sign_neg { -res } else { res });
        }
    }
}

/// `Res_t(P, Q)` as the determinant of the Sylvester matrix.
pub fn sylvester_resultant(p: &UniPoly, q: &UniPoly) -> Result<MultiPoly> {
    if p.var() != q.var() || p.nvars() != q.nvars() {
        return Err(Error::Domain("resultant operands use different main variables".into()));
    }
    if p.is_zero() || q.is_zero() {
        return Err(Error::Domain("resultant of a zero polynomial".into()));
    }
    let n = p.nvars();
    let m = p.degree().unwrap();
    let k = q.degree().unwrap();
    let size = m + k;
    if size == 0 {
        return Ok(MultiPoly::one(n));
    }
    let mut mat = vec![vec![MultiPoly::zero(n); size]; size];
    // rows 0..k: shifts of p, coefficients descending
    for (row, line) in mat.iter_mut().enumerate().take(k) {
        for j in 0..=m {
            line[row + j] = p.coeff(m - j);
        }
    }
    for row in 0..m {
        for j in 0..=k {
            mat[k + row][row + j] = q.coeff(k - j);
        }
    }
    bareiss_determinant(mat)
}

/// Fraction-free Gaussian elimination over an integral domain.
pub fn bareiss_determinant(mut mat: Vec<Vec<MultiPoly>>) -> Result<MultiPoly> {
    let size = mat.len();
    let n = mat.first().map(|r| r.first().map(|c| c.nvars()).unwrap_or(0)).unwrap_or(0);
    let mut sign_neg = false;
    let mut prev = MultiPoly::one(n);
    for k in 0..size {
        if mat[k][k].is_zero() {
            let Some(swap) = (k + 1..size).find(|&i| !mat[i][k].is_zero()) else {
                return Ok(MultiPoly::zero(n));
            };
            mat.swap(k, swap);
            sign_neg = !sign_neg;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&mat[i][j] * &mat[k][k]) - &(&mat[i][k] * &mat[k][j]);
                mat[i][j] = if prev.is_one_poly() { num } else { exact(&num, &prev)? };
            }
        }
        prev = mat[k][k].clone();
    }
    let det = mat[size - 1][size - 1].clone();
    Ok(if sign_neg { -det } else { det })
}

trait IsOne {
    fn is_one_poly(&self) -> bool;
}

impl IsOne for MultiPoly {
    fn is_one_poly(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::int;

    fn t(n: usize) -> MultiPoly {
        MultiPoly::var(n, n - 1)
    }

    fn uni(p: &MultiPoly) -> UniPoly {
        UniPoly::from_multi(p, p.nvars() - 1)
    }

    #[test]
    fn linear_case() {
        // vars a, b, t
        let n = 3;
        let a = MultiPoly::var(n, 0);
        let b = MultiPoly::var(n, 1);
        let r = resultant(&uni(&(&t(n) - &a)), &uni(&(&t(n) - &b))).unwrap();
        assert_eq!(r, &a - &b);
        assert_eq!(sylvester_resultant(&uni(&(&t(n) - &a)), &uni(&(&t(n) - &b))).unwrap(), &a - &b);
    }

    #[test]
    fn evaluates_at_root() {
        let n = 1;
        let p = &t(n).pow(2) + &MultiPoly::one(n);
        let q = &t(n) - &MultiPoly::from_int(n, 2);
        assert_eq!(resultant(&uni(&p), &uni(&q)).unwrap().constant_value(), Some(int(5)));
        assert_eq!(resultant(&uni(&q), &uni(&p)).unwrap().constant_value(), Some(int(5)));
    }

    #[test]
    fn projective_line_circle() {
        // Res_t(x t - y, t^2 + 1) = x^2 + y^2
        let n = 3;
        let x = MultiPoly::var(n, 0);
        let y = MultiPoly::var(n, 1);
        let p = &(&x * &t(n)) - &y;
        let q = &t(n).pow(2) + &MultiPoly::one(n);
        let expected = &x.pow(2) + &y.pow(2);
        assert_eq!(resultant(&uni(&p), &uni(&q)).unwrap(), expected);
        assert_eq!(sylvester_resultant(&uni(&p), &uni(&q)).unwrap(), expected);
    }

    #[test]
    fn zero_input_is_domain_error() {
        let z = UniPoly::from_multi(&MultiPoly::zero(2), 1);
        let p = uni(&t(2));
        assert!(resultant(&z, &p).is_err());
        assert!(resultant(&p, &z).is_err());
    }
}
