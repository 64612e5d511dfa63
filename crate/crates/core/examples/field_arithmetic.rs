//! GF(64) tables and the two multipliers.
//!
//! ```bash
//! cargo run --example field_arithmetic
//! ```

use bch63::gf64::{mul_mse, GfElement, GfTables};

fn main() {
    let t = GfTables::build();

    println!("first powers of α (p(x) = 1 + x + x^6):");
    for k in 0..10 {
        println!("  α^{k:<2} = {}", t.antilog(k));
    }

    let a = t.antilog(3);
    let b = t.antilog(4);
    println!("\nα^3 · α^4 via tables   = {}", t.mul(a, b));
    println!("α^3 · α^4 via partials = {}", mul_mse(a, b));
    println!("α^-1                   = {}", t.inv(GfElement::ALPHA).unwrap());

    let mismatches = GfElement::all()
        .flat_map(|x| GfElement::all().map(move |y| (x, y)))
        .filter(|&(x, y)| mul_mse(x, y) != t.mul(x, y))
        .count();
    println!("\nmultiplier mismatches over all 4096 pairs: {mismatches}");
}
