//! Binary BCH(63, 51) codec correcting up to two bit errors per block.
//!
//! * [`gf64`]: GF(2^6) arithmetic from `p(x) = 1 + x + x^6`.
//! * [`encoder`]: generator derivation, shift-register encoding, the shortened
//!   (31, 19) variant and a long-division reference encoder.
//! * [`decoder`]: syndromes, inversion-less error locator, Chien search and
//!   bit-flip correction.
//! * [`channel`]: seeded error injection and a BER/FER harness.
//! * [`oracle`]: brute-force syndrome table for differential testing.
//! * [`frame`] and [`cli`]: hex frame files and the `bch` command line.
//!
//! ```
//! use bch63::{decode, encode_lfsr, GfTables, Message, ReceivedWord};
//!
//! let tables = GfTables::global();
//! let sent = encode_lfsr(Message::new(0x1_2345_6789).unwrap());
//! let received = ReceivedWord::new(sent.bits() ^ (1 << 3) ^ (1 << 40)).unwrap();
//! let out = decode(received, tables);
//! assert_eq!(out.positions, vec![3, 40]);
//! assert_eq!(out.corrected, Some(sent));
//! ```

pub mod channel;
pub mod cli;
pub mod decoder;
pub mod encoder;
mod error;
pub mod frame;
pub mod gf64;
pub mod oracle;
pub mod poly;
pub mod selftest;

pub use channel::{BerReport, BscConfig, ErrorPattern};
pub use decoder::{
    decode, decode_shortened, DecodeOutcome, DecodeStatus, ErrorLocator, ReceivedWord, ShortDecodeOutcome, SyndromeSet,
};
pub use encoder::{encode_lfsr, encode_shortened, Codeword, Message, ShortCodeword, ShortMessage};
pub use error::DomainError;
pub use gf64::{GfElement, GfTables};
pub use poly::Gf2Poly;
