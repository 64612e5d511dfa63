//! One codeword through the whole decoder, step by step.
//!
//! ```bash
//! cargo run --example encode_decode
//! ```

use bch63::channel::{inject_errors, ErrorPattern};
use bch63::decoder::{chien_search, compute_syndromes, decode, solve_locator};
use bch63::encoder::N;
use bch63::{encode_lfsr, GfTables, Message};

fn main() {
    let t = GfTables::global();
    let m = Message::new(0x1_2345_6789_abcd).unwrap();
    let c = encode_lfsr(m);
    println!("message  {:016x}", m.bits());
    println!("codeword {:016x} (parity {:03x})", c.bits(), c.parity());

    let e = ErrorPattern::from_positions(&[5, 48]).unwrap();
    let r = inject_errors(c, e);
    println!("received {:016x} (errors at {:?})", r.bits(), e.positions());

    let s = compute_syndromes(r, t);
    println!("\nS1 = {}  S2 = {}  S3 = {}", s.s1, s.s2, s.s3);
    let l = solve_locator(s, t);
    println!("λ0 = {}  λ1 = {}  λ2 = {}", l.lambda0, l.lambda1, l.lambda2);
    println!("Chien search positions: {:?}", chien_search(&l, N, t));

    let out = decode(r, t);
    println!("\nstatus {}, flipped {:?}", out.status, out.positions);
    println!("recovered message {:016x}", out.corrected.unwrap().message().bits());
    assert_eq!(out.corrected, Some(c));
}
