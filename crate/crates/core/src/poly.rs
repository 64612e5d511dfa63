//! Polynomials over GF(2) packed into a `u128` bitmask.

use std::fmt;
use std::ops::{Add, Mul, Rem};

/// Binary polynomial; bit `i` is the coefficient of `x^i`. Degree is at most 127.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Gf2Poly(u128);

impl Gf2Poly {
    pub const ZERO: Gf2Poly = Gf2Poly(0);
    pub const ONE: Gf2Poly = Gf2Poly(1);

    pub const fn from_bits(bits: u128) -> Self {
        Gf2Poly(bits)
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Gf2Poly(exps.iter().fold(0u128, |acc, &e| acc ^ (1u128 << e)))
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// `None` for the zero polynomial.
    pub const fn degree(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros())
        }
    }

    pub fn coeff(self, i: u32) -> bool {
        i < 128 && self.0 >> i & 1 == 1
    }

    /// Exponents with a nonzero coefficient, ascending.
    pub fn exponents(self) -> Vec<u32> {
        (0..128).filter(|&i| self.coeff(i)).collect()
    }

    /// Long division; returns `(quotient, remainder)`. Panics on a zero divisor.
    pub fn div_rem(self, divisor: Gf2Poly) -> (Gf2Poly, Gf2Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.0;
        let mut quot = 0u128;
        while let Some(dr) = Gf2Poly(rem).degree() {
            if dr < dd {
                break;
            }
            let shift = dr - dd;
            quot |= 1u128 << shift;
            rem ^= divisor.0 << shift;
        }
        (Gf2Poly(quot), Gf2Poly(rem))
    }
}

impl Add for Gf2Poly {
    type Output = Gf2Poly;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Gf2Poly) -> Gf2Poly {
        Gf2Poly(self.0 ^ rhs.0)
    }
}

impl Mul for Gf2Poly {
    type Output = Gf2Poly;

    /// Carry-less product. Panics in debug builds if the degree would exceed 127.
    fn mul(self, rhs: Gf2Poly) -> Gf2Poly {
        if let (Some(da), Some(db)) = (self.degree(), rhs.degree()) {
            debug_assert!(da + db < 128, "product degree overflow");
        }
        let mut acc = 0u128;
        let mut b = rhs.0;
        let mut shift = 0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= self.0 << shift;
            }
            b >>= 1;
            shift += 1;
        }
        Gf2Poly(acc)
    }
}

impl Rem for Gf2Poly {
    type Output = Gf2Poly;
    fn rem(self, rhs: Gf2Poly) -> Gf2Poly {
        self.div_rem(rhs).1
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn degree_and_display() {
        assert_eq!(Gf2Poly::ZERO.degree(), None);
        assert_eq!(Gf2Poly::ONE.degree(), Some(0));
        let p = Gf2Poly::from_exponents(&[0, 1, 6]);
        assert_eq!(p.degree(), Some(6));
        assert_eq!(p.to_string(), "1 + x + x^6");
        assert_eq!(p.exponents(), vec![0, 1, 6]);
    }

    #[test]
    fn generator_factorisation() {
        let a = Gf2Poly::from_exponents(&[0, 1, 6]);
        let b = Gf2Poly::from_exponents(&[0, 1, 2, 4, 6]);
        assert_eq!((a * b).exponents(), vec![0, 3, 4, 5, 8, 10, 12]);
    }

    #[test]
    fn small_division() {
        // x^12 mod g(x) = x^10 + x^8 + x^5 + x^4 + x^3 + 1
        let g = Gf2Poly::from_exponents(&[0, 3, 4, 5, 8, 10, 12]);
        let r = Gf2Poly::from_exponents(&[12]) % g;
        assert_eq!(r.exponents(), vec![0, 3, 4, 5, 8, 10]);
    }

    proptest! {
        #[test]
        fn div_rem_reconstructs(a in any::<u64>(), b in 1u64..) {
            let (a, b) = (Gf2Poly::from_bits(a as u128), Gf2Poly::from_bits(b as u128));
            let (q, r) = a.div_rem(b);
            prop_assert_eq!(q * b + r, a);
            prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
        }
    }
}
