//! Bounded-distance decoder: syndromes, inversion-less locator, Chien search
//! and bit-flip correction.

use std::fmt;

use crate::encoder::{Codeword, ShortCodeword, ShortMessage, N, SHORT_N};
use crate::error::DomainError;
use crate::gf64::{GfElement, GfTables};

/// A possibly corrupted 63-bit word, `r(x) = c(x) + e(x)`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ReceivedWord(u64);

impl ReceivedWord {
    pub const MASK: u64 = (1 << N) - 1;

    pub fn new(bits: u64) -> Result<Self, DomainError> {
        if bits & !Self::MASK != 0 {
            Err(DomainError::WidthOverflow {
                value: bits,
                bits: N as u32,
            })
        } else {
            Ok(ReceivedWord(bits))
        }
    }

    pub const fn from_bits_truncate(bits: u64) -> Self {
        ReceivedWord(bits & Self::MASK)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn bit(self, i: usize) -> bool {
        i < N && self.0 >> i & 1 == 1
    }
}

impl fmt::Debug for ReceivedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReceivedWord({:#018x})", self.0)
    }
}

impl From<Codeword> for ReceivedWord {
    fn from(c: Codeword) -> Self {
        ReceivedWord(c.bits())
    }
}

/// `(S1, S2, S3)` with `S_i = r(α^i)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SyndromeSet {
    pub s1: GfElement,
    pub s2: GfElement,
    pub s3: GfElement,
}

impl SyndromeSet {
    pub fn is_zero(&self) -> bool {
        self.s1.is_zero() && self.s2.is_zero() && self.s3.is_zero()
    }

    /// Packs into 18 bits: `s1 | s2 << 6 | s3 << 12`.
    pub fn key(&self) -> u32 {
        u32::from(self.s1.value()) | u32::from(self.s2.value()) << 6 | u32::from(self.s3.value()) << 12
    }

    pub fn from_key(key: u32) -> Self {
        SyndromeSet {
            s1: GfElement::from_bits_truncate(key as u8),
            s2: GfElement::from_bits_truncate((key >> 6) as u8),
            s3: GfElement::from_bits_truncate((key >> 12) as u8),
        }
    }
}

impl std::ops::BitXor for SyndromeSet {
    type Output = SyndromeSet;
    fn bitxor(self, rhs: SyndromeSet) -> SyndromeSet {
        SyndromeSet {
            s1: self.s1 + rhs.s1,
            s2: self.s2 + rhs.s2,
            s3: self.s3 + rhs.s3,
        }
    }
}

/// Coefficients of `Λ(x) = λ0 + λ1·x + λ2·x^2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ErrorLocator {
    pub lambda0: GfElement,
    pub lambda1: GfElement,
    pub lambda2: GfElement,
}

impl ErrorLocator {
    pub fn is_zero(&self) -> bool {
        self.lambda0.is_zero() && self.lambda1.is_zero() && self.lambda2.is_zero()
    }

    /// Number of errors the locator claims: 2 when `λ2 ≠ 0`, else 1.
    pub fn expected_errors(&self) -> usize {
        if self.lambda2.is_zero() {
            1
        } else {
            2
        }
    }

    /// Direct evaluation of `Λ(α^j)` with exponentiation.
    pub fn eval_at_alpha_pow(&self, j: i64, tables: &GfTables) -> GfElement {
        let x = tables.alpha_pow(j);
        let x2 = tables.pow(x, 2).expect("α^j is nonzero");
        self.lambda0 + tables.mul(self.lambda1, x) + tables.mul(self.lambda2, x2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecodeStatus {
    NoError,
    Corrected,
    Uncorrectable,
}

impl fmt::Display for DecodeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecodeStatus::NoError => "no_error",
            DecodeStatus::Corrected => "corrected",
            DecodeStatus::Uncorrectable => "uncorrectable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeOutcome {
    pub status: DecodeStatus,
    /// Flipped positions, ascending. Empty unless `Corrected`.
    pub positions: Vec<usize>,
    /// Decoded word; `None` when uncorrectable.
    pub corrected: Option<Codeword>,
}

impl DecodeOutcome {
    pub fn uncorrectable() -> Self {
        DecodeOutcome {
            status: DecodeStatus::Uncorrectable,
            positions: Vec::new(),
            corrected: None,
        }
    }

    pub fn is_uncorrectable(&self) -> bool {
        self.status == DecodeStatus::Uncorrectable
    }
}

/// Outcome of a shortened decode, carrying the 19-bit payload.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortDecodeOutcome {
    pub status: DecodeStatus,
    pub positions: Vec<usize>,
    pub payload: Option<ShortMessage>,
}

/// All three syndromes in a single pass over the set bits of `r`.
pub fn compute_syndromes(r: ReceivedWord, tables: &GfTables) -> SyndromeSet {
    let mut s = SyndromeSet::default();
    let mut bits = r.bits();
    while bits != 0 {
        let j = bits.trailing_zeros() as i64;
        bits &= bits - 1;
        s.s1 += tables.alpha_pow(j);
        s.s2 += tables.alpha_pow(2 * j);
        s.s3 += tables.alpha_pow(3 * j);
    }
    s
}

/// `(λ0, λ1, λ2) = (S1, S1·S1, S3 + S1·S2)`; no field inversion.
pub fn solve_locator(s: SyndromeSet, tables: &GfTables) -> ErrorLocator {
    ErrorLocator {
        lambda0: s.s1,
        lambda1: tables.mul(s.s1, s.s1),
        lambda2: s.s3 + tables.mul(s.s1, s.s2),
    }
}

/// Chien search over `j = 0..63`, stepping the `λ1` cell by `α` and the `λ2`
/// cell by `α^2` each iteration. A root at `α^j` marks position `(63 - j) mod 63`.
/// Positions `>= n` are dropped. Result is ascending.
pub fn chien_search(locator: &ErrorLocator, n: usize, tables: &GfTables) -> Vec<usize> {
    let alpha2 = tables.antilog(2);
    let mut term1 = locator.lambda1;
    let mut term2 = locator.lambda2;
    let mut positions = Vec::with_capacity(2);
    for j in 0..N {
        if (locator.lambda0 + term1 + term2).is_zero() {
            let pos = (N - j) % N;
            if pos < n {
                positions.push(pos);
            }
        }
        term1 = tables.mul(term1, GfElement::ALPHA);
        term2 = tables.mul(term2, alpha2);
    }
    positions.sort_unstable();
    positions
}

/// Chien search by direct evaluation at each `α^j`; reference for [`chien_search`].
pub fn chien_search_direct(locator: &ErrorLocator, n: usize, tables: &GfTables) -> Vec<usize> {
    let mut positions: Vec<usize> = (0..N)
        .filter(|&j| locator.eval_at_alpha_pow(j as i64, tables).is_zero())
        .map(|j| (N - j) % N)
        .filter(|&p| p < n)
        .collect();
    positions.sort_unstable();
    positions
}

/// Flips the listed positions of `r`.
pub fn apply_correction(r: ReceivedWord, positions: &[usize]) -> Result<Codeword, DomainError> {
    let mut bits = r.bits();
    for &p in positions {
        if p >= N {
            return Err(DomainError::PositionOutOfRange { position: p, len: N });
        }
        bits ^= 1 << p;
    }
    Ok(Codeword::from_bits_truncate(bits))
}

/// Decodes a received 63-bit word, correcting up to two bit errors.
pub fn decode(r: ReceivedWord, tables: &GfTables) -> DecodeOutcome {
    decode_within(r, N, tables)
}

fn decode_within(r: ReceivedWord, n: usize, tables: &GfTables) -> DecodeOutcome {
    let s = compute_syndromes(r, tables);
    if s.is_zero() {
        return DecodeOutcome {
            status: DecodeStatus::NoError,
            positions: Vec::new(),
            corrected: Some(Codeword::from_bits_truncate(r.bits())),
        };
    }
    // λ0 = S1 = 0 leaves no locator of degree 1 or 2 with a valid constant term
    if s.s1.is_zero() {
        return DecodeOutcome::uncorrectable();
    }
    let locator = solve_locator(s, tables);
    let positions = chien_search(&locator, n, tables);
    if positions.len() != locator.expected_errors() {
        return DecodeOutcome::uncorrectable();
    }
    let corrected = apply_correction(r, &positions).expect("Chien positions are below 63");
    assert!(
        compute_syndromes(corrected.into(), tables).is_zero(),
        "corrected word {corrected:?} has nonzero syndromes"
    );
    DecodeOutcome {
        status: DecodeStatus::Corrected,
        positions,
        corrected: Some(corrected),
    }
}

/// Decodes a 31-bit shortened word. An error located in the untransmitted
/// positions 31..=62 makes the frame uncorrectable.
pub fn decode_shortened(r: ShortCodeword, tables: &GfTables) -> ShortDecodeOutcome {
    let full = decode(ReceivedWord(u64::from(r.bits())), tables);
    match full.status {
        DecodeStatus::Uncorrectable => short_uncorrectable(),
        _ if full.positions.iter().any(|&p| p >= SHORT_N) => short_uncorrectable(),
        status => {
            let c = full.corrected.expect("decoded word present");
            let short = ShortCodeword::new(c.bits() as u32).expect("padding stays zero");
            ShortDecodeOutcome {
                status,
                positions: full.positions,
                payload: Some(short.payload()),
            }
        }
    }
}

fn short_uncorrectable() -> ShortDecodeOutcome {
    ShortDecodeOutcome {
        status: DecodeStatus::Uncorrectable,
        positions: Vec::new(),
        payload: None,
    }
}
