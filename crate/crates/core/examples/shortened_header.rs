//! The (31, 19) shortened code used to protect a 19-bit header.
//!
//! ```bash
//! cargo run --example shortened_header
//! ```

use bch63::channel::random_error_pattern;
use bch63::decoder::decode_shortened;
use bch63::encoder::SHORT_N;
use bch63::{encode_shortened, GfTables, ShortCodeword, ShortMessage};

fn main() {
    let t = GfTables::global();
    let header = ShortMessage::new(0b101_0011_1100_0101_1010).unwrap();
    let sent = encode_shortened(header);
    println!("header  {:05x}  ->  codeword {:08x}", header.bits(), sent.bits());

    for seed in 0..5 {
        let weight = (seed % 3 + 1) as usize;
        let e = random_error_pattern(weight, SHORT_N, seed).unwrap();
        let r = ShortCodeword::new(sent.bits() ^ e.mask() as u32).unwrap();
        let out = decode_shortened(r, t);
        println!(
            "errors {:<12} -> {:<13} flipped {:<12} payload {}",
            format!("{:?}", e.positions()),
            out.status.to_string(),
            format!("{:?}", out.positions),
            out.payload.map_or("lost".to_string(), |p| format!("{:05x}", p.bits()))
        );
    }
}
