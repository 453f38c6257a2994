//! Exhaustive search by increasing cardinality, straight from the distance
//! matrices. Independent of the constraint system and the branch and bound.

use std::collections::HashSet;

use itertools::Itertools;

use crate::bitset::VertexSet;
use crate::graph::DistanceMatrix;

pub const DEFAULT_ORACLE_CAP: usize = 16;

/// Distance vectors to `landmarks` are pairwise distinct in every matrix.
pub fn distinguishes_all(landmarks: &[usize], matrices: &[DistanceMatrix]) -> bool {
    matrices.iter().all(|d| {
        let mut seen = HashSet::with_capacity(d.n());
        (0..d.n()).all(|x| seen.insert(landmarks.iter().map(|&s| d.get(s, x)).collect::<Vec<u32>>()))
    })
}

/// Smallest `k` and the first size-`k` landmark set in lexicographic order,
/// plus the number of candidate sets examined.
pub fn exhaustive_minimum(n: usize, matrices: &[DistanceMatrix]) -> (usize, VertexSet, u64) {
    let mut checked = 0u64;
    for k in 0..=n {
        for combo in (0..n).combinations(k) {
            checked += 1;
            if distinguishes_all(&combo, matrices) {
                return (k, VertexSet::from_ids(n, combo), checked);
            }
        }
    }
    unreachable!("the full vertex set always resolves a connected graph")
}

/// Every size-`k` landmark set in lexicographic order, stopping after `limit`
/// hits. The flag reports whether more remained.
pub fn enumerate_generators(n: usize, k: usize, matrices: &[DistanceMatrix], limit: usize) -> (Vec<VertexSet>, bool) {
    let mut out = Vec::new();
    for combo in (0..n).combinations(k) {
        if distinguishes_all(&combo, matrices) {
            if out.len() == limit {
                return (out, true);
            }
            out.push(VertexSet::from_ids(n, combo));
        }
    }
    (out, false)
}
