//! Canonical labeling and exact isomorphism testing.
//!
//! The canonical form of a graph is the labeling that minimizes the
//! adjacency rows lexicographically, found by iterative neighborhood
//! refinement plus backtracking over the refined cells. Canonical forms
//! of isomorphic graphs are bitwise equal, so the canonical graph6 string
//! doubles as a stable dictionary key.
//!
//! Intended for desk scale (roughly n <= 16 for arbitrary graphs). The
//! search prunes duplicate subtrees: whenever a completed labeling ties
//! the current best, the two labelings differ by an automorphism, so the
//! branch where they diverge cannot contribute anything new and is cut.

use crate::graph::{Graph, VertexSet};

/// Ordered partition of the vertices; cell order is significant.
type Partition = Vec<Vec<usize>>;

/// Splits cells by neighbor counts into every cell until stable.
fn refine(g: &Graph, partition: &mut Partition) {
    let n = g.n();
    loop {
        let masks: Vec<u64> = partition
            .iter()
            .map(|cell| cell.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut next: Partition = Vec::with_capacity(partition.len());
        let mut changed = false;
        for cell in partition.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: std::collections::BTreeMap<Vec<u32>, Vec<usize>> =
                std::collections::BTreeMap::new();
            for &v in cell {
                let row = g.neighbors(v).bits();
                let sig: Vec<u32> = masks.iter().map(|&m| (row & m).count_ones()).collect();
                groups.entry(sig).or_default().push(v);
            }
            if groups.len() > 1 {
                changed = true;
            }
            next.extend(groups.into_values());
        }
        *partition = next;
        if !changed || partition.len() == n {
            return;
        }
    }
}

fn is_discrete(partition: &Partition) -> bool {
    partition.iter().all(|c| c.len() == 1)
}

/// Index of the first smallest cell of size at least two.
fn target_cell(partition: &Partition) -> usize {
    let min = partition
        .iter()
        .map(|c| c.len())
        .filter(|&s| s >= 2)
        .min()
        .expect("partition is not discrete");
    partition.iter().position(|c| c.len() == min).unwrap()
}

/// Relabeled adjacency rows for a discrete partition, plus the placement
/// `perm[original] = position`.
fn leaf_rows(g: &Graph, partition: &Partition) -> (Vec<u64>, Vec<usize>) {
    let n = g.n();
    let mut perm = vec![0usize; n];
    for (pos, cell) in partition.iter().enumerate() {
        perm[cell[0]] = pos;
    }
    let mut rows = vec![0u64; n];
    for v in 0..n {
        for u in g.neighbors(v).iter() {
            rows[perm[v]] |= 1 << perm[u];
        }
    }
    (rows, perm)
}

struct Search<'a> {
    g: &'a Graph,
    best_rows: Option<Vec<u64>>,
    best_perm: Vec<usize>,
    best_path: Vec<usize>,
    path: Vec<usize>,
}

enum Step {
    Continue,
    /// Unwind the stack: the node that branched at this depth must move on
    /// to its next sibling.
    CutTo(usize),
}

impl<'a> Search<'a> {
    fn run(&mut self, mut partition: Partition) -> Step {
        refine(self.g, &mut partition);
        if is_discrete(&partition) {
            let (rows, perm) = leaf_rows(self.g, &partition);
            return match &self.best_rows {
                Some(best) => match rows.cmp(best) {
                    std::cmp::Ordering::Less => {
                        self.best_rows = Some(rows);
                        self.best_perm = perm;
                        self.best_path = self.path.clone();
                        Step::Continue
                    }
                    std::cmp::Ordering::Greater => Step::Continue,
                    std::cmp::Ordering::Equal => {
                        // Equal leaves certify an automorphism mapping this
                        // branch onto the already-explored one; everything
                        // below their divergence point is a duplicate.
                        match (0..self.path.len()).find(|&i| self.path[i] != self.best_path[i]) {
                            Some(d) => Step::CutTo(d),
                            None => Step::Continue,
                        }
                    }
                },
                None => {
                    self.best_rows = Some(rows);
                    self.best_perm = perm;
                    self.best_path = self.path.clone();
                    Step::Continue
                }
            };
        }

        let tc = target_cell(&partition);
        let depth = self.path.len();
        let cell = partition[tc].clone();
        for v in cell {
            let mut child = Vec::with_capacity(partition.len() + 1);
            for (i, c) in partition.iter().enumerate() {
                if i == tc {
                    child.push(vec![v]);
                    child.push(c.iter().copied().filter(|&u| u != v).collect());
                } else {
                    child.push(c.clone());
                }
            }
            self.path.push(v);
            let step = self.run(child);
            self.path.pop();
            if let Step::CutTo(d) = step {
                if d < depth {
                    return Step::CutTo(d);
                }
                // d == depth: abandon branch v, continue with the next one.
            }
        }
        Step::Continue
    }
}

/// The permutation `perm[v] = canonical position of v`.
pub fn canonical_permutation(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 1 {
        return vec![0; n];
    }
    let mut search = Search {
        g,
        best_rows: None,
        best_perm: Vec::new(),
        best_path: Vec::new(),
        path: Vec::new(),
    };
    search.run(vec![(0..n).collect()]);
    search.best_perm
}

/// The canonically relabeled copy of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    if n <= 1 {
        return g.clone();
    }
    let perm = canonical_permutation(g);
    apply_permutation(g, &perm)
}

/// Canonical graph6 line; the stable atlas key for graphs of order <= 62.
pub fn canonical_graph6(g: &Graph) -> crate::error::Result<String> {
    canonical_form(g).to_graph6()
}

/// Relabels `g` by `perm[v] = new label of v`.
pub fn apply_permutation(g: &Graph, perm: &[usize]) -> Graph {
    let n = g.n();
    assert_eq!(perm.len(), n);
    let mut adj = vec![0u64; n];
    for v in 0..n {
        for u in g.neighbors(v).iter() {
            adj[perm[v]] |= 1 << perm[u];
        }
    }
    Graph::from_adj(adj).expect("permutation preserves graph invariants")
}

/// Exact isomorphism via canonical-form equality.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_multipartite, h_graph, PartitionSpec};

    fn c(parts: &[u32]) -> Graph {
        complete_multipartite(&PartitionSpec::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn relabeled_graph_is_isomorphic() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let perm = [3, 0, 4, 1, 2];
        let h = apply_permutation(&g, &perm);
        assert!(is_isomorphic(&g, &h));
        assert_eq!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn path_and_cycle_are_not_isomorphic() {
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(!is_isomorphic(&p5, &c5));
    }

    #[test]
    fn matched_cliques_coincide_with_bipartite_only_at_two() {
        assert!(is_isomorphic(&h_graph(2, 0).unwrap(), &c(&[2, 2])));
        assert!(!is_isomorphic(&h_graph(3, 0).unwrap(), &c(&[3, 3])));
    }

    #[test]
    fn highly_symmetric_graphs_canonicalize_quickly() {
        // Complete, empty, and balanced multipartite graphs exercise the
        // duplicate-subtree cut; without it these would take factorial time.
        let k12 = Graph::complete(12).unwrap();
        assert_eq!(canonical_form(&k12), k12);
        let e12 = Graph::edgeless(12).unwrap();
        assert_eq!(canonical_form(&e12), e12);
        let g = c(&[4, 4, 4]);
        let h = apply_permutation(&g, &[7, 3, 11, 0, 5, 9, 1, 2, 10, 4, 6, 8]);
        assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (4, 5)]).unwrap();
        let perms = [[5, 4, 3, 2, 1, 0], [2, 0, 1, 5, 3, 4], [1, 3, 5, 0, 2, 4]];
        let canon = canonical_form(&g);
        for p in perms {
            assert_eq!(canonical_form(&apply_permutation(&g, &p)), canon);
        }
    }
}
