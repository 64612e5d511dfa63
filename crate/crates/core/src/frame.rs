//! Hex frame files: one frame per line, bit `i` of the hex value is the
//! coefficient of `x^i`.
//!
//! Full-length frames are 16 hex digits, shortened frames 8. A line made of
//! `X` characters of the same width marks a frame that an earlier stage could
//! not decode; it is carried through unchanged so frame indices line up.

use std::fmt;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrameKind {
    Message,
    Codeword,
    ShortMessage,
    ShortCodeword,
}

impl FrameKind {
    /// Number of meaningful low bits.
    pub fn data_bits(self) -> u32 {
        match self {
            FrameKind::Message => 51,
            FrameKind::Codeword => 63,
            FrameKind::ShortMessage => 19,
            FrameKind::ShortCodeword => 31,
        }
    }

    pub fn hex_digits(self) -> usize {
        match self {
            FrameKind::Message | FrameKind::Codeword => 16,
            FrameKind::ShortMessage | FrameKind::ShortCodeword => 8,
        }
    }

    pub fn sentinel(self) -> &'static str {
        &"XXXXXXXXXXXXXXXX"[..self.hex_digits()]
    }
}

impl fmt::Display for FrameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FrameKind::Message => "message",
            FrameKind::Codeword => "codeword",
            FrameKind::ShortMessage => "shortened message",
            FrameKind::ShortCodeword => "shortened codeword",
        })
    }
}

/// A parsed line: a value, or the undecodable-frame sentinel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Frame {
    Value(u64),
    Lost,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameError {
    #[error("line {line}: expected {expected} hex digits, found {found:?}")]
    Length {
        line: usize,
        expected: usize,
        found: String,
    },
    #[error("line {line}: invalid hex {found:?}")]
    Hex { line: usize, found: String },
    #[error("line {line}: {kind} frame {value:#x} has reserved bits set above bit {}", .data_bits - 1)]
    ReservedBits {
        line: usize,
        kind: FrameKind,
        value: u64,
        data_bits: u32,
    },
}

/// Parses a whole file. Line numbers in errors are 1-based.
pub fn parse_frames(text: &str, kind: FrameKind) -> Result<Vec<Frame>, FrameError> {
    text.lines()
        .enumerate()
        .map(|(i, l)| parse_line(l, i + 1, kind))
        .collect()
}

fn parse_line(raw: &str, line: usize, kind: FrameKind) -> Result<Frame, FrameError> {
    let s = raw.strip_suffix('\r').unwrap_or(raw);
    if s.len() != kind.hex_digits() {
        return Err(FrameError::Length {
            line,
            expected: kind.hex_digits(),
            found: s.to_string(),
        });
    }
    if s == kind.sentinel() {
        return Ok(Frame::Lost);
    }
    if !s.bytes().all(|b| b.is_ascii_hexdigit()) {
        return Err(FrameError::Hex {
            line,
            found: s.to_string(),
        });
    }
    let value = u64::from_str_radix(s, 16).map_err(|_| FrameError::Hex {
        line,
        found: s.to_string(),
    })?;
    if value >> kind.data_bits() != 0 {
        return Err(FrameError::ReservedBits {
            line,
            kind,
            value,
            data_bits: kind.data_bits(),
        });
    }
    Ok(Frame::Value(value))
}

pub fn format_frame(frame: Frame, kind: FrameKind) -> String {
    match frame {
        Frame::Value(v) => format!("{v:0w$x}", w = kind.hex_digits()),
        Frame::Lost => kind.sentinel().to_string(),
    }
}

/// Serializes frames, one per line, each terminated by `\n`.
pub fn format_frames(frames: &[Frame], kind: FrameKind) -> String {
    let mut out = String::with_capacity(frames.len() * (kind.hex_digits() + 1));
    for &f in frames {
        out.push_str(&format_frame(f, kind));
        out.push('\n');
    }
    out
}
