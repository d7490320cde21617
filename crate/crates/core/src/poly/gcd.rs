//! Multivariate gcd over Q by recursive primitive remainder sequences, and
//! the content/primitive splits built on it.

use super::multi::{Monomial, MultiPoly};
use super::uni::UniPoly;
use crate::error::{Error, Result};

/// Normalized gcd (coprime integer coefficients, positive leading coefficient).
/// `gcd(0, 0) = 0`.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    assert_eq!(a.nvars(), b.nvars(), "arity mismatch in gcd");
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    let n = a.nvars();
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(n);
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mono = Monomial(ma.exps().iter().zip(mb.exps()).map(|(x, y)| *x.min(y)).collect());
    let a = strip_monomial(a, &ma);
    let b = strip_monomial(b, &mb);
    let mono_poly = MultiPoly::term(mono.0, num_traits::One::one());

    let core = gcd_no_monomial(&a, &b);
    (&mono_poly * &core).normalized()
}

fn strip_monomial(p: &MultiPoly, m: &Monomial) -> MultiPoly {
    if m.degree() == 0 {
        return p.clone();
    }
    let d = MultiPoly::term(m.0.clone(), num_traits::One::one());
    p.exact_divide(&d).expect("nonzero").expect("monomial content divides")
}

fn gcd_no_monomial(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let n = a.nvars();
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(n);
    }
    let Some(v) = (0..n).rev().find(|&v| a.involves(v) || b.involves(v)) else {
        return MultiPoly::one(n);
    };
    match (a.involves(v), b.involves(v)) {
        (true, false) => gcd(&content_in(a, v), b),
        (false, true) => gcd(a, &content_in(b, v)),
        _ => {
            let ca = content_in(a, v);
            let cb = content_in(b, v);
            let c = gcd(&ca, &cb);
            let pa = divide(a, &ca);
            let pb = divide(b, &cb);
            let g = primitive_prs_gcd(&pa, &pb, v);
            &c * &g
        }
    }
}

fn divide(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    a.exact_divide(b).expect("nonzero divisor").expect("content divides")
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
pub fn content_in(p: &MultiPoly, var: usize) -> MultiPoly {
    content_in_vars(p, &[var])
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `vars`, with
/// coefficients in the remaining variables.
pub fn content_in_vars(p: &MultiPoly, vars: &[usize]) -> MultiPoly {
    let n = p.nvars();
    let mut acc = MultiPoly::zero(n);
    let coeffs = p.coefficients_in_vars(vars);
    // try small coefficients first: they bound the gcd quickly
    let mut polys: Vec<&MultiPoly> = coeffs.values().collect();
    polys.sort_by_key(|c| (c.degree().unwrap_or(0), c.num_terms()));
    for c in polys {
        acc = gcd(&acc, c);
        if acc.is_constant() {
            return MultiPoly::one(n);
        }
    }
    acc
}

fn primitive_part_in(p: &MultiPoly, var: usize) -> MultiPoly {
    divide(p, &content_in(p, var))
}

fn primitive_prs_gcd(a: &MultiPoly, b: &MultiPoly, var: usize) -> MultiPoly {
    let n = a.nvars();
    let (mut x, mut y) = (UniPoly::from_multi(a, var), UniPoly::from_multi(b, var));
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    loop {
        let r = x.pseudo_rem(&y).expect("nonzero divisor");
        if r.is_zero() {
            return primitive_part_in(&y.to_multi(), var);
        }
        if r.degree() == Some(0) {
            return MultiPoly::one(n);
        }
        x = y;
        y = UniPoly::from_multi(&primitive_part_in(&r.to_multi(), var), var);
    }
}

/// Splits `p = content * primitive`, where the content collects the rational
/// content, the monomial content and the gcd of the coefficients of the
/// remaining factor viewed as a polynomial in `split_var`.
pub fn content_and_primitive(p: &MultiPoly, split_var: usize) -> Result<(MultiPoly, MultiPoly)> {
    if p.is_zero() {
        return Err(Error::Domain("content of the zero polynomial".into()));
    }
    if split_var >= p.nvars() {
        return Err(Error::Arity(p.nvars(), split_var + 1));
    }
    let n = p.nvars();
    let (scalar, prim) = p.rational_content();
    let mono = prim.monomial_content();
    let rest = strip_monomial(&prim, &mono);
    let coeff_content = content_in(&rest, split_var);
    let primitive = divide(&rest, &coeff_content);
    let content = &(&MultiPoly::constant(n, scalar) * &MultiPoly::term(mono.0, num_traits::One::one())) * &coeff_content;
    Ok((content, primitive))
}

/// Exact `k`-th root of `p` in Q[vars] when one exists (term-by-term in
/// graded-lex order, leading term first).
pub fn perfect_root(p: &MultiPoly, k: u32) -> Option<MultiPoly> {
    use super::rational::nth_root;
    if k == 0 {
        return None;
    }
    if k == 1 || p.is_zero() {
        return Some(p.clone());
    }
    let n = p.nvars();
    let (lead_m, lead_c) = p.leading_term()?;
    if lead_m.exps().iter().any(|e| e % k != 0) {
        return None;
    }
    let c = nth_root(lead_c, k)?;
    let lead = MultiPoly::term(lead_m.exps().iter().map(|e| e / k).collect(), c.clone());
    let min_deg = p.terms().map(|(m, _)| m.degree()).min().unwrap_or(0);
    // derivative of R^k at the leading term: k * lt(R)^(k-1)
    let denom = lead.pow(k - 1).scale(&super::rational::int(k as i64));
    let (denom_m, denom_c) = {
        let (m, c) = denom.leading_term().expect("nonzero");
        (m.clone(), c.clone())
    };
    let mut root = lead;
    loop {
        let residual = p - &root.pow(k);
        if residual.is_zero() {
            return Some(root);
        }
        let (rm, rc) = residual.leading_term().expect("nonzero");
        let mut exps = Vec::with_capacity(n);
        for (a, b) in rm.exps().iter().zip(denom_m.exps()) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        let next = Monomial(exps);
        if next.degree() * k < min_deg {
            return None;
        }
        if let Some((last, _)) = root.terms().last() {
            if &next >= last {
                return None;
            }
        }
        root += &MultiPoly::term(next.0, rc / &denom_c);
    }
}
