//! Built-in consistency checks run by `bch selftest`.

use std::fmt;

use crate::channel::{frame_seed, SplitMix64};
use crate::decoder::{compute_syndromes, decode, DecodeStatus, ReceivedWord};
use crate::encoder::{encode_lfsr, Message, N};
use crate::gf64::{mul_mse, GfElement, GfTables};
use crate::oracle::{brute_force_decode, build_syndrome_table, verify_syndrome_distinctness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{verdict}] {}: {}", self.name, self.detail)
    }
}

/// Every (message, nonzero weight ≤ 2 pattern) pair over `messages` seeded messages;
/// returns the number of failed decodes.
pub fn double_error_sweep(messages: u64, seed: u64, tables: &GfTables) -> (u64, u64) {
    let mut calls = 0;
    let mut failures = 0;
    for i in 0..messages {
        let m = Message::from_bits_truncate(SplitMix64::new(frame_seed(seed, i)).next_u64());
        let c = encode_lfsr(m);
        for a in 0..N {
            for b in a..N {
                let mask = if a == b { 1u64 << a } else { 1u64 << a | 1u64 << b };
                let out = decode(ReceivedWord::from_bits_truncate(c.bits() ^ mask), tables);
                calls += 1;
                let expected: Vec<usize> = if a == b { vec![a] } else { vec![a, b] };
                let ok = out.status == DecodeStatus::Corrected
                    && out.positions == expected
                    && out.corrected.map(|w| w.message()) == Some(m);
                if !ok {
                    failures += 1;
                }
            }
        }
    }
    (calls, failures)
}

/// Decoder vs brute-force table on `words` seeded random 63-bit words; returns disagreements.
pub fn oracle_differential(words: u64, seed: u64, tables: &GfTables) -> u64 {
    let table = build_syndrome_table(tables).expect("weight-2 syndromes are distinct");
    let mut rng = SplitMix64::new(seed);
    let mut disagreements = 0;
    for _ in 0..words {
        let r = ReceivedWord::from_bits_truncate(rng.next_u64());
        let alg = decode(r, tables);
        let brute = brute_force_decode(r, &table, tables);
        let key = |c: Option<crate::encoder::Codeword>| c.map(|w| compute_syndromes(w.into(), tables).key());
        if alg.status != brute.status
            || (alg.status == DecodeStatus::Corrected && key(alg.corrected) != key(brute.corrected))
        {
            disagreements += 1;
        }
    }
    disagreements
}

/// Pairs where the combinational multiplier differs from the table multiplier.
pub fn multiplier_mismatches(tables: &GfTables) -> usize {
    GfElement::all()
        .flat_map(|a| GfElement::all().map(move |b| (a, b)))
        .filter(|&(a, b)| mul_mse(a, b) != tables.mul(a, b))
        .count()
}

pub fn run_all(tables: &GfTables) -> Vec<CheckResult> {
    let (calls, failures) = double_error_sweep(10, 0x5EED, tables);
    let disagreements = oracle_differential(100_000, 0x0AC1E, tables);
    let mismatches = multiplier_mismatches(tables);
    let table = build_syndrome_table(tables);
    vec![
        CheckResult {
            name: "double-error sweep",
            passed: failures == 0,
            detail: format!("{calls} decodes, {failures} failures"),
        },
        CheckResult {
            name: "oracle differential",
            passed: disagreements == 0,
            detail: format!("100000 random words, {disagreements} disagreements"),
        },
        CheckResult {
            name: "syndrome distinctness",
            passed: table.as_ref().map(verify_syndrome_distinctness).unwrap_or(false),
            detail: match &table {
                Ok(t) => format!("{} entries", t.len()),
                Err(e) => e.to_string(),
            },
        },
        CheckResult {
            name: "multiplier equivalence",
            passed: mismatches == 0,
            detail: format!("4096 pairs, {mismatches} mismatches"),
        },
    ]
}
