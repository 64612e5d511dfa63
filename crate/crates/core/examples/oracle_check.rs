//! Build the brute-force syndrome table and compare it with the algebraic decoder.
//!
//! ```bash
//! cargo run --release --example oracle_check
//! ```

use bch63::channel::SplitMix64;
use bch63::decoder::{decode, DecodeStatus, ReceivedWord};
use bch63::oracle::{brute_force_decode, build_syndrome_table, distinct_keys};
use bch63::GfTables;

fn main() {
    let t = GfTables::global();
    let table = build_syndrome_table(t).expect("weight-2 syndromes are distinct");
    println!(
        "syndrome table: {} entries, {} distinct keys",
        table.len(),
        distinct_keys(&table)
    );

    let mut rng = SplitMix64::new(1);
    let (mut agree, mut corrected, mut lost) = (0, 0, 0);
    let words = 100_000;
    for _ in 0..words {
        let r = ReceivedWord::from_bits_truncate(rng.next_u64());
        let alg = decode(r, t);
        if alg == brute_force_decode(r, &table, t) {
            agree += 1;
        }
        match alg.status {
            DecodeStatus::Corrected => corrected += 1,
            DecodeStatus::Uncorrectable => lost += 1,
            DecodeStatus::NoError => {}
        }
    }
    println!("random words: {words}, agreement {agree}, corrected {corrected}, uncorrectable {lost}");
    println!("expected corrected fraction ≈ 2016/4096 = {:.4}", 2016.0 / 4096.0);
}
