#![allow(dead_code)]

use circsurf::poly::rational::int;
use circsurf::poly::{absolute_quadric, MultiPoly};

/// Tiny expression reader for reference polynomials: integers, the
/// variables `x, y, z, q`, `A = x² + y² + z²`, `+ - *`, `^n` and parentheses.
/// With `nvars == 3` the symbol `q` is replaced by `q_value`.
pub struct Expr<'a> {
    s: &'a [u8],
    i: usize,
    nvars: usize,
    q_value: i64,
}

impl<'a> Expr<'a> {
    fn peek(&mut self) -> Option<u8> {
        while self.i < self.s.len() && self.s[self.i] == b' ' {
            self.i += 1;
        }
        self.s.get(self.i).copied()
    }

    fn sum(&mut self) -> MultiPoly {
        let mut acc = if self.peek() == Some(b'-') {
            self.i += 1;
            -self.product()
        } else {
            self.product()
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    acc = &acc + &self.product();
                }
                Some(b'-') => {
                    self.i += 1;
                    acc = &acc - &self.product();
                }
                _ => return acc,
            }
        }
    }

    fn product(&mut self) -> MultiPoly {
        let mut acc = self.power();
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.i += 1;
                    acc = &acc * &self.power();
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => acc = &acc * &self.power(),
                _ => return acc,
            }
        }
    }

    fn power(&mut self) -> MultiPoly {
        let base = self.atom();
        if self.peek() == Some(b'^') {
            self.i += 1;
            let e = self.number();
            base.pow(e as u32)
        } else {
            base
        }
    }

    fn number(&mut self) -> i64 {
        self.peek();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        std::str::from_utf8(&self.s[start..self.i]).unwrap().parse().expect("number")
    }

    fn atom(&mut self) -> MultiPoly {
        let n = self.nvars;
        match self.peek().expect("unexpected end") {
            b'(' => {
                self.i += 1;
                let v = self.sum();
                assert_eq!(self.peek(), Some(b')'));
                self.i += 1;
                v
            }
            c if c.is_ascii_digit() => MultiPoly::from_int(n, self.number()),
            c => {
                self.i += 1;
                match c {
                    b'x' => MultiPoly::var(n, 0),
                    b'y' => MultiPoly::var(n, 1),
                    b'z' => MultiPoly::var(n, 2),
                    b'A' => absolute_quadric(n),
                    b'q' if n == 4 => MultiPoly::var(n, 3),
                    b'q' => MultiPoly::constant(n, int(self.q_value)),
                    _ => panic!("unknown symbol {}", c as char),
                }
            }
        }
    }
}

/// Polynomial in `x, y, z` with `q` fixed.
pub fn poly_q(src: &str, q: i64) -> MultiPoly {
    let mut e = Expr { s: src.as_bytes(), i: 0, nvars: 3, q_value: q };
    let p = e.sum();
    assert_eq!(e.peek(), None, "trailing input in {src}");
    p
}

/// Polynomial in `x, y, z, q`.
pub fn poly_sym(src: &str) -> MultiPoly {
    let mut e = Expr { s: src.as_bytes(), i: 0, nvars: 4, q_value: 0 };
    let p = e.sum();
    assert_eq!(e.peek(), None, "trailing input in {src}");
    p
}

/// Cubic through a line, with `p² = q`.
pub fn line_cyclide(b: i64, c: i64, q: i64) -> MultiPoly {
    poly_q(&format!("x*A - x^2*({} + 1 - q) - {}*x*y - {}*y^2 - q*x", c * c, 2 * b * c, b * b + 1), q)
}

pub const HYPERBOLA_H1: &str = "x*y*A^2 - (x^4 + 2*x^2*y^2 + q^2*x^2*y^2 + y^4 + 2*q*x*y*z^2) + q^2*x*y";
pub const HYPERBOLA_H2: &str = "x*y^2*A - (x^4 + x^2*y^2 - q*x^2*y^2 + y^4) - q*x*y^2";
pub const TWISTED_CUBIC: &str =
    "x*(x - y)*A^2 + (x^2 - y^2)^2 - q*(2*x^4 - 4*x^3*y + 2*x^2*y^2 + 2*x^2*z^2 - 2*x*y*z^2) + q^2*x^2*y^2 + q^2*x*(x - y)";
pub const TWISTED_CUBIC_PARABOLIC: &str = "x*A^2 + (x - y)*(x + y)^2";
pub const LATITUDE_TORUS: &str = "16*(A - 1)^2 - 36*(x^2 + y^2)";
