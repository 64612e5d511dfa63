use std::collections::HashMap;

use bch63::channel::run_ber_experiment;
use bch63::decoder::{compute_syndromes, ReceivedWord};
use bch63::oracle::build_syndrome_table;
use bch63::GfTables;

#[test]
fn fer_grows_with_crossover_probability() {
    let t = GfTables::global();
    let mean_fer = |p: f64| {
        (0..10u64)
            .map(|seed| run_ber_experiment(p, 20_000, seed, t).unwrap().fer())
            .sum::<f64>()
            / 10.0
    };
    let (high, low) = (mean_fer(1e-2), mean_fer(1e-3));
    assert!(high > low, "FER at 1e-2 = {high}, at 1e-3 = {low}");
}

#[test]
fn reports_are_reproducible_and_consistent() {
    let t = GfTables::global();
    for seed in [0, 1, u64::MAX] {
        let a = run_ber_experiment(0.02, 3_000, seed, t).unwrap();
        assert_eq!(a, run_ber_experiment(0.02, 3_000, seed, t).unwrap());
        assert_eq!(a.frame_errors, a.uncorrectable_frames + a.miscorrected_frames);
        if a.frame_errors == 0 {
            assert_eq!(a.post_fec_bit_errors, 0);
        }
    }
}

#[test]
fn syndrome_table_is_order_independent() {
    let t = GfTables::global();
    let a = build_syndrome_table(t).unwrap();
    let b = build_syndrome_table(t).unwrap();
    assert_eq!(a.entries(), b.entries());

    // enumerate in reverse and compare as a map
    let mut reversed = HashMap::new();
    for i in (0..63).rev() {
        for j in (i..63).rev() {
            let mask = 1u64 << i | 1u64 << j;
            let key = compute_syndromes(ReceivedWord::new(mask).unwrap(), t).key();
            assert!(reversed.insert(key, mask).is_none());
        }
    }
    reversed.insert(0, 0);
    let forward: HashMap<u32, u64> = a.entries().iter().map(|&(k, e)| (k, e.mask())).collect();
    assert_eq!(forward, reversed);
}
