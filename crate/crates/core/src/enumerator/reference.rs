//! Published reference values for the `B_k` searches.

use crate::graph::BkSpec;

const BSTAR_LIST: &str = include_str!("../../data/bstar.txt");

/// The 802 graphs `B_k(n_1, ..., n_k)` with `p = 2`, `η = 1`, `4 <= k <= 13`
/// and order at most 13, in normalized form.
pub fn bstar_list() -> Vec<BkSpec> {
    BSTAR_LIST
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.parse().expect("reference data is well formed"))
        .collect()
}

pub const BSTAR_TOTAL: usize = 802;

/// Number of listed graphs per `k`.
pub const BSTAR_COUNTS_BY_K: [(usize, usize); 10] = [
    (4, 18),
    (5, 47),
    (6, 138),
    (7, 161),
    (8, 205),
    (9, 124),
    (10, 78),
    (11, 24),
    (12, 6),
    (13, 1),
];

/// Orders 10, 11, 12, 13 of the listed graphs with `6 <= k <= 10`.
pub const MIDDLE_K_ORDER_HISTOGRAM: [(usize, usize); 4] = [(10, 4), (11, 32), (12, 150), (13, 520)];

/// `p = 2`, `η = 0` graphs per `k` that fall outside every parametric
/// family, as `(k, [(order, count)])`; none occur below order 10 or at order 13.
pub const BMINUS_SPECIFIC_COUNTS: [(usize, [(usize, usize); 3]); 6] = [
    (4, [(10, 5), (11, 10), (12, 10)]),
    (5, [(10, 13), (11, 25), (12, 25)]),
    (6, [(10, 22), (11, 54), (12, 69)]),
    (7, [(10, 18), (11, 52), (12, 73)]),
    (8, [(10, 12), (11, 42), (12, 80)]),
    (9, [(10, 3), (11, 17), (12, 39)]),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_is_consistent_with_counts() {
        let list = bstar_list();
        assert_eq!(list.len(), BSTAR_TOTAL);
        for (k, count) in BSTAR_COUNTS_BY_K {
            assert_eq!(list.iter().filter(|s| s.k() == k).count(), count, "k = {k}");
        }
        assert!(list.iter().all(|s| s.is_normalized() && s.order() <= 13));
        let mut sorted = list.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), BSTAR_TOTAL);
    }
}
