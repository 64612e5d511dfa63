//! Derive g(x) from minimal polynomials, then watch the parity register encode.
//!
//! ```bash
//! cargo run --example generator_and_lfsr
//! ```

use bch63::encoder::{compute_generator, cyclotomic_class, encode_polydiv_oracle, minimal_polynomial, LfsrState, K};
use bch63::{GfTables, Message};

fn main() {
    let t = GfTables::global();
    for e in [1, 3] {
        let class = cyclotomic_class(e);
        println!(
            "class of α^{e}: {class:?}  minimal polynomial {}",
            minimal_polynomial(&class, t)
        );
    }
    for cap in [1, 2] {
        println!("g(x) for t = {cap}: {}", compute_generator(cap, t).unwrap());
    }

    let m = Message::new(0x5_5555_0000_ffff).unwrap();
    let mut lfsr = LfsrState::new();
    println!("\nshift  in  register (r11..r0)");
    for (step, i) in (0..K).rev().enumerate() {
        lfsr.clock(m.bit(i));
        if !(6..K - 3).contains(&step) {
            println!("{:>5}  {:>2}  {:012b}", step + 1, m.bit(i) as u8, lfsr.register());
        } else if step == 6 {
            println!("  ...");
        }
    }
    let reference = encode_polydiv_oracle(m).parity();
    println!("\nlong division parity:  {reference:012b}");
    println!("registers agree: {}", reference == lfsr.register());
}
