//! Brute-force syndrome table over every error pattern of weight at most two.
//!
//! The table shares only field arithmetic and [`compute_syndromes`] with the
//! algebraic decoder, so it can certify the locator and Chien search.

use std::collections::HashSet;

use thiserror::Error;

use crate::channel::ErrorPattern;
use crate::decoder::{compute_syndromes, DecodeOutcome, DecodeStatus, ReceivedWord, SyndromeSet};
use crate::encoder::{Codeword, N};
use crate::gf64::GfTables;

/// 1 + 63 + C(63, 2).
pub const TABLE_ENTRIES: usize = 2017;

const KEY_SPACE: usize = 1 << 18;
const EMPTY: u16 = u16::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syndrome key {key:#07x} shared by patterns {first:#x} and {second:#x}")]
pub struct SyndromeCollision {
    pub key: u32,
    pub first: u64,
    pub second: u64,
}

/// Map from packed syndrome key to the coset leader of weight ≤ 2.
#[derive(Clone)]
pub struct SyndromeTable {
    entries: Vec<(u32, ErrorPattern)>,
    index: Vec<u16>,
}

impl std::fmt::Debug for SyndromeTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SyndromeTable")
            .field("entries", &self.entries.len())
            .finish()
    }
}

impl SyndromeTable {
    /// Builds a table from raw entries without checking for collisions; later
    /// entries shadow earlier ones in lookups.
    pub fn from_entries_unchecked(entries: Vec<(u32, ErrorPattern)>) -> Self {
        let mut index = vec![EMPTY; KEY_SPACE];
        for (i, &(key, _)) in entries.iter().enumerate() {
            index[key as usize] = i as u16;
        }
        SyndromeTable { entries, index }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(u32, ErrorPattern)] {
        &self.entries
    }

    pub fn lookup(&self, s: &SyndromeSet) -> Option<ErrorPattern> {
        match self.index[s.key() as usize] {
            EMPTY => None,
            i => Some(self.entries[i as usize].1),
        }
    }
}

fn patterns_up_to_weight_two() -> impl Iterator<Item = u64> {
    let singles = (0..N).map(|i| 1u64 << i);
    let doubles = (0..N).flat_map(|i| (i + 1..N).map(move |j| 1u64 << i | 1u64 << j));
    std::iter::once(0).chain(singles).chain(doubles)
}

/// Enumerates all 2017 patterns of weight ≤ 2 and fails on the first key collision.
pub fn build_syndrome_table(tables: &GfTables) -> Result<SyndromeTable, SyndromeCollision> {
    let mut index = vec![EMPTY; KEY_SPACE];
    let mut entries: Vec<(u32, ErrorPattern)> = Vec::with_capacity(TABLE_ENTRIES);
    for mask in patterns_up_to_weight_two() {
        let key = compute_syndromes(ReceivedWord::from_bits_truncate(mask), tables).key();
        let slot = &mut index[key as usize];
        if *slot != EMPTY {
            return Err(SyndromeCollision {
                key,
                first: entries[*slot as usize].1.mask(),
                second: mask,
            });
        }
        *slot = entries.len() as u16;
        entries.push((key, ErrorPattern::new(mask).expect("63-bit pattern")));
    }
    Ok(SyndromeTable { entries, index })
}

/// Minimum-distance decoding within radius two by table lookup.
pub fn brute_force_decode(r: ReceivedWord, table: &SyndromeTable, tables: &GfTables) -> DecodeOutcome {
    let s = compute_syndromes(r, tables);
    match table.lookup(&s) {
        None => DecodeOutcome::uncorrectable(),
        Some(e) => {
            let corrected = Codeword::from_bits_truncate(r.bits() ^ e.mask());
            let status = if e.weight() == 0 {
                DecodeStatus::NoError
            } else {
                DecodeStatus::Corrected
            };
            DecodeOutcome {
                status,
                positions: e.positions(),
                corrected: Some(corrected),
            }
        }
    }
}

/// True iff every key in the table is distinct.
pub fn verify_syndrome_distinctness(table: &SyndromeTable) -> bool {
    distinct_keys(table) == table.len()
}

pub fn distinct_keys(table: &SyndromeTable) -> usize {
    table.entries.iter().map(|&(k, _)| k).collect::<HashSet<_>>().len()
}
