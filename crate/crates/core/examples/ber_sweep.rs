//! Monte Carlo BER/FER over a binary symmetric channel, against the
//! bounded-distance estimate.
//!
//! ```bash
//! cargo run --release --example ber_sweep
//! ```

use bch63::channel::{bounded_distance_fer, run_ber_experiment};
use bch63::{BerReport, GfTables};

fn main() {
    let t = GfTables::global();
    println!("{}", BerReport::CSV_HEADER);
    let mut rows = Vec::new();
    for p in [3e-2, 1e-2, 3e-3, 1e-3] {
        let r = run_ber_experiment(p, 200_000, 2024, t).unwrap();
        println!("{}", r.csv_row());
        rows.push((p, r.fer(), bounded_distance_fer(p, 63, 2)));
    }
    println!("\n{:>8} {:>12} {:>12}", "p", "FER", "analytic");
    for (p, fer, analytic) in rows {
        println!("{p:>8} {fer:>12.3e} {analytic:>12.3e}");
    }
}
