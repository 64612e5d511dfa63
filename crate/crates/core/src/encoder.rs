//! Systematic encoding for the (63, 51) code and its (31, 19) shortening.
//!
//! Every bit vector follows one convention: bit `i` is the coefficient of
//! `x^i`, and the highest index is transmitted first. A codeword is laid out
//! as `c(x) = x^12 m(x) + r(x)`: message bits in positions 12..=62, parity
//! in positions 0..=11.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::DomainError;
use crate::gf64::{GfElement, GfTables, GROUP_ORDER};
use crate::poly::Gf2Poly;

/// Codeword length.
pub const N: usize = 63;
/// Message length.
pub const K: usize = 51;
/// Parity length, the degree of the generator.
pub const PARITY_BITS: usize = N - K;
/// Shortened codeword length.
pub const SHORT_N: usize = 31;
/// Shortened payload length.
pub const SHORT_K: usize = 19;

/// `g(x) = 1 + x^3 + x^4 + x^5 + x^8 + x^10 + x^12` (octal 12471), the product of
/// the minimal polynomials of `α` and `α^3`.
pub const GENERATOR: Gf2Poly = Gf2Poly::from_bits(0x1539);

/// Feedback taps of the parity register: the coefficients of `g` below `x^12`.
pub const LFSR_TAPS: u16 = 0x539;

const PARITY_MASK: u64 = (1 << PARITY_BITS) - 1;

macro_rules! bit_vector {
    ($(#[$meta:meta])* $name:ident, $repr:ty, $width:expr) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name($repr);

        impl $name {
            pub const WIDTH: usize = $width;
            pub const MASK: $repr = ((1u64 << $width) - 1) as $repr;

            /// Rejects values with bits set at or above `WIDTH`.
            pub fn new(bits: $repr) -> Result<Self, DomainError> {
                if bits & !Self::MASK != 0 {
                    Err(DomainError::WidthOverflow { value: bits as u64, bits: $width as u32 })
                } else {
                    Ok($name(bits))
                }
            }

            pub const fn from_bits_truncate(bits: $repr) -> Self {
                $name(bits & Self::MASK)
            }

            pub const fn bits(self) -> $repr {
                self.0
            }

            /// Coefficient of `x^i`; false for positions outside the vector.
            pub fn bit(self, i: usize) -> bool {
                i < $width && (self.0 >> i) & 1 == 1
            }

            pub fn weight(self) -> u32 {
                self.0.count_ones()
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, concat!(stringify!($name), "({:#0w$x})"), self.0, w = ($width as usize).div_ceil(4) + 2)
            }
        }

        impl std::ops::BitXor for $name {
            type Output = $name;
            fn bitxor(self, rhs: $name) -> $name {
                $name(self.0 ^ rhs.0)
            }
        }
    };
}

bit_vector!(
    /// 51 message bits; bit `i` is `m_i`.
    Message, u64, K
);
bit_vector!(
    /// A 63-bit codeword; bit `i` is `c_i`.
    Codeword, u64, N
);
bit_vector!(
    /// 19-bit payload of the shortened code.
    ShortMessage, u32, SHORT_K
);
bit_vector!(
    /// 31 transmitted bits of the shortened code: parity in 0..=11, payload in 12..=30.
    ShortCodeword, u32, SHORT_N
);

impl Message {
    pub fn as_poly(self) -> Gf2Poly {
        Gf2Poly::from_bits(self.0 as u128)
    }
}

impl Codeword {
    /// Assembles `x^12 m(x) + r(x)`. `parity` must fit in 12 bits.
    pub fn from_parts(message: Message, parity: u16) -> Self {
        debug_assert!(u64::from(parity) <= PARITY_MASK);
        Codeword(message.0 << PARITY_BITS | u64::from(parity))
    }

    /// Systematic message part, bits 12..=62.
    pub fn message(self) -> Message {
        Message(self.0 >> PARITY_BITS)
    }

    /// Parity part `r_0..r_11`.
    pub fn parity(self) -> u16 {
        (self.0 & PARITY_MASK) as u16
    }

    pub fn as_poly(self) -> Gf2Poly {
        Gf2Poly::from_bits(self.0 as u128)
    }
}

impl ShortMessage {
    /// Zero-extends the payload into `m_0..m_18` of a full message.
    pub fn to_message(self) -> Message {
        Message(u64::from(self.0))
    }
}

impl ShortCodeword {
    pub fn payload(self) -> ShortMessage {
        ShortMessage(self.0 >> PARITY_BITS)
    }

    /// Re-inserts the untransmitted zero positions 31..=62.
    pub fn to_codeword(self) -> Codeword {
        Codeword(u64::from(self.0))
    }
}

/// Bit-serial model of the 12-stage parity register.
///
/// Each clock takes one message bit, highest degree first; after all 51 the
/// register holds `x^12 m(x) mod g(x)` with `r_11` in the top cell.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LfsrState {
    register: u16,
}

impl LfsrState {
    pub const TAPS: u16 = LFSR_TAPS;

    pub fn new() -> Self {
        Self::default()
    }

    pub fn clock(&mut self, input: bool) {
        let feedback = input ^ (self.register >> (PARITY_BITS - 1) & 1 == 1);
        self.register = (self.register << 1) & PARITY_MASK as u16;
        if feedback {
            self.register ^= Self::TAPS;
        }
    }

    /// Register contents; bit `i` is cell `r_i`.
    pub fn register(self) -> u16 {
        self.register
    }
}

/// Generator polynomial of the binary BCH code of length 63 correcting `t` errors.
///
/// Roots `α..α^{2t}` are grouped into conjugacy classes `{α^{e·2^k}}`; each
/// class contributes its minimal polynomial once.
pub fn compute_generator(t: u32, tables: &GfTables) -> Result<Gf2Poly, DomainError> {
    if !(1..=2).contains(&t) {
        return Err(DomainError::UnsupportedCapability(t));
    }
    let mut covered = BTreeSet::new();
    let mut g = Gf2Poly::ONE;
    for root in 1..=2 * t {
        if covered.contains(&root) {
            continue;
        }
        let class = cyclotomic_class(root);
        covered.extend(class.iter().copied());
        g = g * minimal_polynomial(&class, tables);
    }
    Ok(g)
}

/// Exponents `{e, 2e, 4e, ...} mod 63`.
pub fn cyclotomic_class(e: u32) -> Vec<u32> {
    let mut class = Vec::new();
    let mut x = e % GROUP_ORDER;
    while !class.contains(&x) {
        class.push(x);
        x = (2 * x) % GROUP_ORDER;
    }
    class
}

/// `∏ (x + α^e)` over a conjugacy class; the product has binary coefficients.
pub fn minimal_polynomial(class: &[u32], tables: &GfTables) -> Gf2Poly {
    // coefficients over GF(64), index = degree
    let mut coeffs = vec![GfElement::ONE];
    for &e in class {
        let root = tables.alpha_pow(e as i64);
        let mut next = vec![GfElement::ZERO; coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] += tables.mul(c, root);
        }
        coeffs = next;
    }
    let mut bits = 0u128;
    for (i, c) in coeffs.iter().enumerate() {
        assert!(c.value() <= 1, "minimal polynomial coefficient outside GF(2)");
        bits |= u128::from(c.value()) << i;
    }
    Gf2Poly::from_bits(bits)
}

/// Encodes through the shift-register model, `m_50` first.
pub fn encode_lfsr(message: Message) -> Codeword {
    let mut lfsr = LfsrState::new();
    for i in (0..K).rev() {
        lfsr.clock(message.bit(i));
    }
    Codeword::from_parts(message, lfsr.register())
}

/// Encodes by long division of `x^12 m(x)` by `g(x)`.
pub fn encode_polydiv_oracle(message: Message) -> Codeword {
    let shifted = Gf2Poly::from_bits((message.0 as u128) << PARITY_BITS);
    let rem = shifted % GENERATOR;
    Codeword::from_parts(message, rem.bits() as u16)
}

/// Shortened encode: payload in `m_0..m_18`, high message bits fixed at zero
/// and dropped from the output.
pub fn encode_shortened(payload: ShortMessage) -> ShortCodeword {
    let full = encode_lfsr(payload.to_message());
    debug_assert_eq!(full.bits() >> SHORT_N, 0);
    ShortCodeword(full.bits() as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_for_t1_and_t2() {
        let t = GfTables::build();
        assert_eq!(compute_generator(1, &t).unwrap().exponents(), vec![0, 1, 6]);
        let g = compute_generator(2, &t).unwrap();
        assert_eq!(g.exponents(), vec![0, 3, 4, 5, 8, 10, 12]);
        assert_eq!(g, GENERATOR);
        let x63_plus_1 = Gf2Poly::from_exponents(&[0, 63]);
        assert!((x63_plus_1 % g).is_zero());
        // the variant with x^9 in place of x^8 is not a factor of x^63 + 1
        assert!(!(x63_plus_1 % Gf2Poly::from_exponents(&[0, 3, 4, 5, 9, 10, 12])).is_zero());
        assert_eq!(compute_generator(0, &t), Err(DomainError::UnsupportedCapability(0)));
        assert_eq!(compute_generator(3, &t), Err(DomainError::UnsupportedCapability(3)));
    }

    #[test]
    fn minimal_polynomials() {
        let t = GfTables::build();
        assert_eq!(cyclotomic_class(1), vec![1, 2, 4, 8, 16, 32]);
        assert_eq!(cyclotomic_class(3), vec![3, 6, 12, 24, 48, 33]);
        assert_eq!(
            minimal_polynomial(&cyclotomic_class(3), &t).exponents(),
            vec![0, 1, 2, 4, 6]
        );
    }

    #[test]
    fn taps_match_generator() {
        assert_eq!(u128::from(LFSR_TAPS) | 1 << 12, GENERATOR.bits());
    }

    #[test]
    fn zero_message() {
        assert_eq!(encode_lfsr(Message::default()), Codeword::default());
        assert_eq!(encode_polydiv_oracle(Message::default()), Codeword::default());
    }

    #[test]
    fn unit_message_parity() {
        let c = encode_lfsr(Message::new(1).unwrap());
        let parity: Vec<usize> = (0..12).filter(|&i| c.bit(i)).collect();
        assert_eq!(parity, vec![0, 3, 4, 5, 8, 10]);
        assert_eq!(c, encode_polydiv_oracle(Message::new(1).unwrap()));
    }

    #[test]
    fn top_message_bit() {
        let m = Message::new(1 << 50).unwrap();
        let expected = Gf2Poly::from_exponents(&[62]) % GENERATOR;
        assert_eq!(u128::from(encode_polydiv_oracle(m).parity()), expected.bits());
        assert_eq!(encode_lfsr(m), encode_polydiv_oracle(m));
    }

    #[test]
    fn width_checks() {
        assert!(Message::new(Message::MASK).is_ok());
        assert!(Message::new(1 << 51).is_err());
        assert!(Codeword::new(1 << 63).is_err());
        assert!(ShortMessage::new(1 << 19).is_err());
        assert!(ShortCodeword::new(1 << 31).is_err());
        assert!(!Message::new(1).unwrap().bit(51));
    }

    #[test]
    fn shortened_embedding() {
        assert_eq!(encode_shortened(ShortMessage::default()), ShortCodeword::default());
        let p = ShortMessage::new(1).unwrap();
        let short = encode_shortened(p);
        assert_eq!(short.to_codeword(), encode_lfsr(p.to_message()));
        assert_eq!(short.payload(), p);
        assert_eq!(
            short.bits() & 0xFFF,
            encode_lfsr(Message::new(1).unwrap()).parity() as u32
        );
    }

    #[test]
    fn lfsr_register_tracks_partial_remainder() {
        let m = Message::new(0x5_A5A5_5A5A_5A5A & Message::MASK).unwrap();
        let mut lfsr = LfsrState::new();
        for (steps, i) in (0..K).rev().enumerate() {
            lfsr.clock(m.bit(i));
            let high = Gf2Poly::from_bits(((m.bits() >> i) as u128) << PARITY_BITS);
            assert_eq!(
                u128::from(lfsr.register()),
                (high % GENERATOR).bits(),
                "after {} shifts",
                steps + 1
            );
        }
    }
}
