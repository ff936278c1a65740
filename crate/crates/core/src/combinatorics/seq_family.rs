use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Families of decreasing integer sequences.
///
/// - `C` (C_k): k ≥ λ_1, consecutive gaps ≥ 2, last entry 1.
/// - `D` (D_k): k ≥ λ_1 > … > λ_ℓ ≥ 2, λ_1 ≡ k (mod 2), adjacent entries of
///   opposite parity, last entry even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeqFamily {
    C,
    D,
}

impl SeqFamily {
    pub const ALL: [SeqFamily; 2] = [SeqFamily::C, SeqFamily::D];

    pub fn name(self) -> &'static str {
        match self {
            SeqFamily::C => "C",
            SeqFamily::D => "D",
        }
    }
}

impl fmt::Display for SeqFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeqFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        SeqFamily::ALL
            .into_iter()
            .find(|fam| fam.name() == s)
            .ok_or_else(|| Error::UnknownName { kind: "sequence family", name: s.to_string() })
    }
}

fn extend_c<F: FnMut(&[u32])>(seq: &mut Vec<u32>, visit: &mut F) {
    let last = *seq.last().expect("non-empty");
    if last == 1 {
        visit(seq);
        return;
    }
    // the final entry must be 1, so only entries ≥ 1 with room to reach it
    let mut next = last.saturating_sub(2);
    while next >= 1 {
        seq.push(next);
        extend_c(seq, visit);
        seq.pop();
        next -= 1;
    }
}

fn extend_d<F: FnMut(&[u32])>(seq: &mut Vec<u32>, visit: &mut F) {
    let last = *seq.last().expect("non-empty");
    if last % 2 == 0 {
        visit(seq);
    }
    let mut next = last - 1;
    while next >= 2 {
        seq.push(next);
        extend_d(seq, visit);
        seq.pop();
        next = next.saturating_sub(2);
    }
}

/// Calls `visit` on every member of the family at `k`, largest first
/// entry first. Negative `k` gives the empty family.
pub fn for_each_in_seq_family<F: FnMut(&[u32])>(family: SeqFamily, k: i64, mut visit: F) {
    let Ok(k) = u32::try_from(k) else { return };
    let mut seq = Vec::new();
    match family {
        SeqFamily::C => {
            for first in (1..=k).rev() {
                seq.push(first);
                extend_c(&mut seq, &mut visit);
                seq.pop();
            }
        }
        SeqFamily::D => {
            for first in (2..=k).rev().filter(|f| f % 2 == k % 2) {
                seq.push(first);
                extend_d(&mut seq, &mut visit);
                seq.pop();
            }
        }
    }
}

pub fn enumerate_seq_family(family: SeqFamily, k: i64) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    for_each_in_seq_family(family, k, |s| {
        out.insert(s.to_vec());
    });
    out
}
