//! Exact integer characteristic polynomials of adjacency matrices.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::graph::{Bits, Graph};

/// Integer polynomial, coefficients stored from the constant term upward.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn from_coefficients(coeffs: Vec<BigInt>) -> IntPoly {
        let mut p = IntPoly { coeffs };
        while p.coeffs.len() > 1 && p.coeffs.last().is_some_and(Zero::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coefficients(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Horner evaluation in `f64`.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_int(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    /// All roots with multiplicity, if every root is an integer in
    /// `-bound..=bound`; otherwise `None`.
    pub fn integer_roots(&self, bound: i64) -> Option<Vec<i64>> {
        let mut rest = self.coeffs.clone();
        let mut roots = Vec::new();
        for r in -bound..=bound {
            while rest.len() > 1 {
                match divide_linear(&rest, r) {
                    Some(q) => {
                        roots.push(r);
                        rest = q;
                    }
                    None => break,
                }
            }
        }
        (rest.len() == 1).then_some(roots)
    }
}

/// Quotient of `p / (x - r)` when the division is exact.
fn divide_linear(p: &[BigInt], r: i64) -> Option<Vec<BigInt>> {
    let r = BigInt::from(r);
    let mut q = vec![BigInt::zero(); p.len() - 1];
    let mut carry = BigInt::zero();
    for k in (0..p.len()).rev() {
        let value = &p[k] + &carry * &r;
        if k == 0 {
            return value.is_zero().then_some(q);
        }
        q[k - 1] = value.clone();
        carry = value;
    }
    unreachable!()
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && !(k == 0 && first) {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = k == 0 || !magnitude.is_one();
            if show_coeff {
                write!(f, "{magnitude}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// `det(xI - A)` by the Faddeev-LeVerrier recurrence. Every division in the
/// recurrence is exact for integer matrices.
pub fn char_poly_int(g: &Graph) -> IntPoly {
    let n = g.order();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // M <- A M + c_{n-k+1} I
        let mut next = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in Bits(g.neighbor_mask(i)) {
                for j in 0..n {
                    let v = &m[l * n + j];
                    if !v.is_zero() {
                        next[i * n + j] += v;
                    }
                }
            }
            next[i * n + i] += &coeffs[n - k + 1];
        }
        m = next;
        // c_{n-k} = -tr(A M) / k
        let mut trace = BigInt::zero();
        for i in 0..n {
            for l in Bits(g.neighbor_mask(i)) {
                trace += &m[l * n + i];
            }
        }
        coeffs[n - k] = -(trace / BigInt::from(k));
    }
    IntPoly::from_coefficients(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn small_polynomials() {
        assert_eq!(char_poly_int(&Graph::complete(2)), IntPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(char_poly_int(&Graph::path(3)), IntPoly::from_i64(&[0, -2, 0, 1]));
        assert_eq!(
            char_poly_int(&Graph::complete_bipartite(2, 3)),
            IntPoly::from_i64(&[0, 0, 0, -6, 0, 1])
        );
        assert_eq!(char_poly_int(&Graph::empty(1)), IntPoly::from_i64(&[0, 1]));
        assert_eq!(char_poly_int(&Graph::empty(0)), IntPoly::from_i64(&[1]));
    }

    #[test]
    fn k4_and_c6() {
        // K4: (x - 3)(x + 1)^3
        assert_eq!(char_poly_int(&Graph::complete(4)), IntPoly::from_i64(&[-3, -8, -6, 0, 1]));
        // C6: (x-2)(x+2)(x-1)^2(x+1)^2 = x^6 - 6x^4 + 9x^2 - 4
        assert_eq!(
            char_poly_int(&Graph::cycle(6)),
            IntPoly::from_i64(&[-4, 0, 9, 0, -6, 0, 1])
        );
    }

    #[test]
    fn structure() {
        for g in [Graph::cycle(7), Graph::complete(5), Graph::star(6)] {
            let p = char_poly_int(&g);
            assert!(p.is_monic());
            assert_eq!(p.degree(), g.order());
            assert!(p.coefficient(g.order() - 1).is_zero());
            assert_eq!(p.coefficient(g.order() - 2), BigInt::from(-(g.size() as i64)));
        }
    }

    #[test]
    fn integer_roots() {
        let p = char_poly_int(&Graph::cycle(6));
        assert_eq!(p.integer_roots(6), Some(vec![-2, -1, -1, 1, 1, 2]));
        assert_eq!(char_poly_int(&Graph::path(3)).integer_roots(3), None);
    }

    #[test]
    fn display() {
        assert_eq!(IntPoly::from_i64(&[0, 0, 0, -6, 0, 1]).to_string(), "x^5 - 6x^3");
        assert_eq!(IntPoly::from_i64(&[-1, 0, 1]).to_string(), "x^2 - 1");
        assert_eq!(IntPoly::from_i64(&[0]).to_string(), "0");
        assert_eq!(IntPoly::from_i64(&[3, -2]).to_string(), "-2x + 3");
    }
}
