//! Exact chromatic number by branch and bound.

use crate::graph::Graph;

/// Backtracking k-colorability over a fixed vertex order. `colors[c]` is
/// the mask of vertices already assigned color `c`; trying at most one
/// fresh color per level breaks color-permutation symmetry.
fn colorable(g: &Graph, order: &[usize], k: usize, colors: &mut Vec<u64>, idx: usize) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    let row = g.neighbors(v).bits();
    let tried = colors.len();
    for c in 0..tried.min(k) {
        if colors[c] & row == 0 {
            colors[c] |= 1 << v;
            if colorable(g, order, k, colors, idx + 1) {
                return true;
            }
            colors[c] &= !(1 << v);
        }
    }
    if tried < k {
        colors.push(1 << v);
        if colorable(g, order, k, colors, idx + 1) {
            return true;
        }
        colors.pop();
    }
    false
}

/// Greedy coloring along the given order; returns the number of colors used.
fn greedy_upper_bound(g: &Graph, order: &[usize]) -> usize {
    let mut colors: Vec<u64> = Vec::new();
    for &v in order {
        let row = g.neighbors(v).bits();
        match colors.iter_mut().find(|m| **m & row == 0) {
            Some(m) => *m |= 1 << v,
            None => colors.push(1 << v),
        }
    }
    colors.len()
}

/// A maximal clique grown greedily from the highest-degree vertices; its
/// size is a lower bound on the chromatic number.
fn greedy_clique_bound(g: &Graph, order: &[usize]) -> usize {
    let mut clique = 0u64;
    let mut size = 0usize;
    for &v in order {
        if clique & !g.neighbors(v).bits() == 0 {
            clique |= 1 << v;
            size += 1;
        }
    }
    size
}

/// Minimum number of colors in a proper coloring. Exact; intended for
/// desk scale (n <= 16).
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let lower = greedy_clique_bound(g, &order).max(2);
    let upper = greedy_upper_bound(g, &order);
    for k in lower..upper {
        let mut colors = Vec::with_capacity(k);
        if colorable(g, &order, k, &mut colors, 0) {
            return k;
        }
    }
    upper
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_multipartite, h_graph, PartitionSpec};

    #[test]
    fn multipartite_needs_one_color_per_class() {
        for parts in [vec![1, 1], vec![2, 3], vec![1, 2, 4], vec![2, 2, 2, 2]] {
            let r = parts.len();
            let g = complete_multipartite(&PartitionSpec::new(parts).unwrap());
            assert_eq!(chromatic_number(&g), r);
        }
    }

    #[test]
    fn matched_cliques_need_a_plus_t_colors() {
        for a in 1..=4u32 {
            for t in 0..=1u32 {
                let g = h_graph(a, t).unwrap();
                assert_eq!(chromatic_number(&g), (a + t) as usize, "a={a} t={t}");
            }
        }
    }

    #[test]
    fn join_adds_chromatic_numbers() {
        let h = h_graph(3, 0).unwrap();
        let k1 = Graph::edgeless(1).unwrap();
        assert_eq!(chromatic_number(&h.join(&k1).unwrap()), 4);

        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(
            chromatic_number(&c5.join(&k3).unwrap()),
            chromatic_number(&c5) + chromatic_number(&k3)
        );
    }

    #[test]
    fn odd_cycle_is_three_chromatic() {
        let c7 = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0)],
        )
        .unwrap();
        assert_eq!(chromatic_number(&c7), 3);
    }
}
