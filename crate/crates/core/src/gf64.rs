//! Arithmetic in GF(2^6), built from the primitive polynomial `p(x) = 1 + x + x^6`.
//!
//! Elements are stored in polynomial basis: bit `i` of the 6-bit value is the
//! coefficient of `α^i`. Multiplication is available through log/antilog
//! tables ([`GfTables::mul`]) and through a table-free combinational form
//! ([`mul_mse`]); the two agree on every input pair.

use std::fmt;
use std::ops::{Add, AddAssign};
use std::sync::OnceLock;

use crate::error::DomainError;

/// Number of nonzero field elements, i.e. the order of α.
pub const GROUP_ORDER: u32 = 63;

/// `p(x) = 1 + x + x^6` as a bitmask (bit i = coefficient of x^i).
pub const PRIMITIVE_POLY: u8 = 0b100_0011;

/// Marker stored in `log[0]`; never a valid discrete log.
pub const LOG_ZERO: u8 = 0xFF;

const ELEMENT_MASK: u8 = 0b11_1111;

/// An element of GF(64) in polynomial-basis representation.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GfElement(u8);

impl GfElement {
    pub const ZERO: GfElement = GfElement(0);
    pub const ONE: GfElement = GfElement(1);
    pub const ALPHA: GfElement = GfElement(0b10);

    /// Wraps a raw 6-bit value. Values above 63 are rejected.
    pub fn new(value: u8) -> Result<Self, DomainError> {
        if value > ELEMENT_MASK {
            Err(DomainError::ElementOutOfRange(value))
        } else {
            Ok(GfElement(value))
        }
    }

    /// Keeps the low 6 bits of `value`.
    pub const fn from_bits_truncate(value: u8) -> Self {
        GfElement(value & ELEMENT_MASK)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Iterator over all 64 field elements in increasing value order.
    pub fn all() -> impl Iterator<Item = GfElement> + Clone {
        (0..64u8).map(GfElement)
    }

    /// Iterator over the 63 nonzero elements.
    pub fn nonzero() -> impl Iterator<Item = GfElement> + Clone {
        (1..64u8).map(GfElement)
    }
}

impl fmt::Debug for GfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GfElement({:06b})", self.0)
    }
}

impl fmt::Display for GfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:06b}", self.0)
    }
}

impl fmt::Binary for GfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Binary::fmt(&self.0, f)
    }
}

impl Add for GfElement {
    type Output = GfElement;

    fn add(self, rhs: GfElement) -> GfElement {
        add(self, rhs)
    }
}

impl AddAssign for GfElement {
    fn add_assign(&mut self, rhs: GfElement) {
        *self = add(*self, rhs);
    }
}

/// Field addition: coefficient-wise over GF(2).
#[inline]
pub fn add(a: GfElement, b: GfElement) -> GfElement {
    GfElement(a.0 ^ b.0)
}

/// Multiply by α once, reducing with α^6 = α + 1.
#[inline]
fn mul_alpha(a: u8) -> u8 {
    let shifted = a << 1;
    if shifted & 0b100_0000 != 0 {
        shifted ^ PRIMITIVE_POLY
    } else {
        shifted
    }
}

/// Log/antilog tables for GF(64).
#[derive(Clone, PartialEq, Eq)]
pub struct GfTables {
    antilog: [GfElement; 63],
    log: [u8; 64],
}

impl fmt::Debug for GfTables {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GfTables").finish_non_exhaustive()
    }
}

impl Default for GfTables {
    fn default() -> Self {
        Self::build()
    }
}

impl GfTables {
    /// Generates the tables by stepping through the powers of α.
    pub fn build() -> Self {
        let mut antilog = [GfElement::ZERO; 63];
        let mut log = [LOG_ZERO; 64];
        let mut x = 1u8;
        for (k, slot) in antilog.iter_mut().enumerate() {
            *slot = GfElement(x);
            log[x as usize] = k as u8;
            x = mul_alpha(x);
        }
        debug_assert_eq!(x, 1, "α must have order 63");
        GfTables { antilog, log }
    }

    /// Process-wide shared tables, built on first use.
    pub fn global() -> &'static GfTables {
        static TABLES: OnceLock<GfTables> = OnceLock::new();
        TABLES.get_or_init(GfTables::build)
    }

    /// `α^k` for `k` in `0..63`.
    #[inline]
    pub fn antilog(&self, k: usize) -> GfElement {
        self.antilog[k]
    }

    /// `α^e` for any integer exponent.
    #[inline]
    pub fn alpha_pow(&self, e: i64) -> GfElement {
        self.antilog[e.rem_euclid(GROUP_ORDER as i64) as usize]
    }

    /// Discrete log of a nonzero element, or `None` for zero.
    #[inline]
    pub fn log(&self, a: GfElement) -> Option<u8> {
        match self.log[a.0 as usize] {
            LOG_ZERO => None,
            k => Some(k),
        }
    }

    /// Raw log table including the zero sentinel.
    pub fn log_table(&self) -> &[u8; 64] {
        &self.log
    }

    pub fn antilog_table(&self) -> &[GfElement; 63] {
        &self.antilog
    }

    #[inline]
    pub fn mul(&self, a: GfElement, b: GfElement) -> GfElement {
        if a.is_zero() || b.is_zero() {
            return GfElement::ZERO;
        }
        let sum = self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize;
        self.antilog[sum % 63]
    }

    /// `a^e`; the exponent is reduced mod 63 for nonzero `a`.
    pub fn pow(&self, a: GfElement, e: i64) -> Result<GfElement, DomainError> {
        if a.is_zero() {
            return if e > 0 {
                Ok(GfElement::ZERO)
            } else {
                Err(DomainError::ZeroToNonPositivePower(e))
            };
        }
        let k = self.log[a.0 as usize] as i64;
        Ok(self.alpha_pow(k * e.rem_euclid(GROUP_ORDER as i64)))
    }

    pub fn inv(&self, a: GfElement) -> Result<GfElement, DomainError> {
        match self.log(a) {
            None => Err(DomainError::ZeroInverse),
            Some(k) => Ok(self.antilog[(63 - k as usize) % 63]),
        }
    }

    #[inline]
    pub fn square(&self, a: GfElement) -> GfElement {
        self.mul(a, a)
    }

    /// Plain-text dump, one `k <antilog[k] as 6 binary digits>` line per exponent.
    pub fn dump(&self) -> String {
        let mut out = String::with_capacity(63 * 10);
        for (k, e) in self.antilog.iter().enumerate() {
            out.push_str(&format!("{k} {:06b}\n", e.0));
        }
        out
    }
}

/// Table-free multiplier built from partial products.
///
/// The carry-less product `z = a·b` has terms `z0..z10`; the high terms fold
/// back through `α^6 = 1 + α`, `α^7 = α + α^2`, ..., `α^10 = α^4 + α^5`.
pub fn mul_mse(a: GfElement, b: GfElement) -> GfElement {
    let a: [u8; 6] = std::array::from_fn(|i| (a.0 >> i) & 1);
    let b: [u8; 6] = std::array::from_fn(|i| (b.0 >> i) & 1);

    let z0 = a[0] & b[0];
    let z1 = (a[1] & b[0]) ^ (a[0] & b[1]);
    let z2 = (a[2] & b[0]) ^ (a[1] & b[1]) ^ (a[0] & b[2]);
    let z3 = (a[3] & b[0]) ^ (a[2] & b[1]) ^ (a[1] & b[2]) ^ (a[0] & b[3]);
    let z4 = (a[4] & b[0]) ^ (a[3] & b[1]) ^ (a[2] & b[2]) ^ (a[1] & b[3]) ^ (a[0] & b[4]);
    let z5 = (a[5] & b[0]) ^ (a[4] & b[1]) ^ (a[3] & b[2]) ^ (a[2] & b[3]) ^ (a[1] & b[4]) ^ (a[0] & b[5]);
    let z6 = (a[5] & b[1]) ^ (a[4] & b[2]) ^ (a[3] & b[3]) ^ (a[2] & b[4]) ^ (a[1] & b[5]);
    let z7 = (a[5] & b[2]) ^ (a[4] & b[3]) ^ (a[3] & b[4]) ^ (a[2] & b[5]);
    let z8 = (a[5] & b[3]) ^ (a[4] & b[4]) ^ (a[3] & b[5]);
    let z9 = (a[5] & b[4]) ^ (a[4] & b[5]);
    let z10 = a[5] & b[5];

    let y0 = z0 ^ z6;
    let y1 = z1 ^ z6 ^ z7;
    let y2 = z2 ^ z7 ^ z8;
    let y3 = z3 ^ z8 ^ z9;
    let y4 = z4 ^ z9 ^ z10;
    let y5 = z5 ^ z10;

    GfElement(y0 | y1 << 1 | y2 << 2 | y3 << 3 | y4 << 4 | y5 << 5)
}
