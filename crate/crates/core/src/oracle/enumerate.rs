use super::OracleError;
use crate::graph::Graph;

/// Largest order accepted by exhaustive labeled enumeration.
pub const EXHAUSTIVE_MAX_ORDER: usize = 7;

/// `2^(n(n-1)/2)`, the number of labeled simple graphs on `n` vertices.
pub fn labeled_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// The labeled graph whose edge set is given by `mask`: bit `k` is the
/// `k`-th vertex pair in graph6 order `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::with_capacity(mask.count_ones() as usize);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Graph::from_sorted_edges(n, edges)
}

/// Every labeled simple graph on `n` vertices, once each, by increasing
/// edge mask.
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Graph>, OracleError> {
    check_order(n)?;
    Ok((0..labeled_count(n)).map(move |mask| labeled_graph(n, mask)))
}

pub(super) fn check_order(n: usize) -> Result<(), OracleError> {
    if (1..=EXHAUSTIVE_MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(OracleError::OrderOutOfRange { n, max: EXHAUSTIVE_MAX_ORDER })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(enumerate_labeled(1).unwrap().count(), 1);
        assert_eq!(enumerate_labeled(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled(4).unwrap().count(), 64);
        assert_eq!(labeled_count(6), 32768);
        assert_eq!(labeled_count(7), 2_097_152);
    }

    #[test]
    fn out_of_range() {
        assert!(enumerate_labeled(0).is_err());
        assert!(enumerate_labeled(8).is_err());
    }

    #[test]
    fn each_graph_once() {
        let seen: HashSet<String> = enumerate_labeled(5).unwrap().map(|g| g.to_graph6()).collect();
        assert_eq!(seen.len(), 1024);
    }

    #[test]
    fn mask_matches_graph6_bits() {
        // The graph6 body lists the same pairs in the same order, so the
        // first and last masks are the edgeless and complete graphs and
        // mask 1 is the single edge (0, 1).
        let n = 4;
        assert_eq!(labeled_graph(n, 0).size(), 0);
        assert!(labeled_graph(n, labeled_count(n) - 1).is_complete());
        assert_eq!(labeled_graph(n, 1).edges(), &[(0, 1)]);
        assert_eq!(labeled_graph(n, 0b100).edges(), &[(1, 2)]);
        assert_eq!(labeled_graph(n, 0b1000).edges(), &[(0, 3)]);
    }
}
