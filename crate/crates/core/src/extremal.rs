//! Shadows, the real-valued shadow lower bound, clique-freeness checks,
//! and the dominating-pair auxiliary graph.
//!
//! The shadow bound compares an integer shadow size against a real bound
//! produced by bisection, with a slack of 1e-6 — far below the 1.0
//! integrality gap, so no verdict can flip.

use num_bigint::BigUint;
use serde::Serialize;

use crate::dompoly::{binomial, is_dominating, SetFamily};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

const KK_SLACK: f64 = 1e-6;
const BISECT_TOL: f64 = 1e-9;

/// Outcome of the shadow-bound check on one uniform family.
#[derive(Clone, Debug, Serialize)]
pub struct KKReport {
    pub family_size: usize,
    pub k: usize,
    /// The real `x >= k` with `C(x, k) = family_size`.
    pub x_solved: f64,
    pub shadow_size: usize,
    /// The lower bound `C(x, k-1)` on the shadow size.
    pub bound: f64,
    pub bound_met: bool,
    /// True iff the bound is attained, which happens exactly when the
    /// family is all k-subsets of one ground set.
    pub equality: bool,
    pub clique_witness: Option<VertexSet>,
}

/// All (k-1)-subsets of members of `f`, deduplicated.
pub fn shadow(f: &SetFamily) -> Result<SetFamily> {
    if f.k() == 0 {
        return Err(Error::ShadowUndefined);
    }
    let mut out: Vec<VertexSet> = Vec::with_capacity(f.len() * f.k());
    for &s in f.sets() {
        for v in s.iter() {
            out.push(s.without(v));
        }
    }
    SetFamily::new(f.n(), f.k() - 1, out)
}

/// The falling-factorial binomial `x(x-1)...(x-k+1) / k!`, defined for
/// real `x >= k - 1`, where it is strictly increasing in `x`.
pub fn generalized_binomial(x: f64, k: usize) -> f64 {
    assert!(
        x >= k as f64 - 1.0,
        "generalized binomial requires x >= k-1 (x={x}, k={k})"
    );
    let mut acc = 1.0;
    for i in 0..k {
        acc *= (x - i as f64) / (i + 1) as f64;
    }
    acc
}

/// Inverts `C(x, k) = family_size` for the unique `x >= k`, by bisection
/// to absolute tolerance 1e-9.
pub fn solve_x(family_size: usize, k: usize) -> Result<f64> {
    if family_size == 0 {
        return Err(Error::EmptyFamily);
    }
    assert!(k >= 1, "solve_x requires k >= 1");
    let target = family_size as f64;
    // C(k + s, k) >= 1 + s, so the root lies in [k, k + family_size].
    let mut lo = k as f64;
    let mut hi = (k + family_size) as f64;
    while hi - lo > BISECT_TOL {
        let mid = (lo + hi) / 2.0;
        if generalized_binomial(mid, k) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) / 2.0)
}

/// Checks the shadow lower bound `|shadow| >= C(x, k-1)` for one family
/// and detects the equality case, verifying the clique structure rather
/// than trusting the numerics.
pub fn check_kk(f: &SetFamily) -> Result<KKReport> {
    if f.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let sh = shadow(f)?;
    let x = solve_x(f.len(), f.k())?;
    let bound = generalized_binomial(x, f.k() - 1);
    let shadow_size = sh.len();
    let bound_met = shadow_size as f64 >= bound - KK_SLACK;
    let mut equality = false;
    let mut clique_witness = None;
    if bound_met && (shadow_size as f64) <= bound + KK_SLACK {
        let rounded = x.round();
        if (x - rounded).abs() <= KK_SLACK {
            let union = f.ground_union();
            let size = union.len();
            if size as f64 == rounded
                && binomial(size as u64, f.k() as u64) == BigUint::from(f.len())
            {
                // |f| distinct k-subsets of an x-set with C(x,k) members
                // is necessarily all of them.
                equality = true;
                clique_witness = Some(union);
            }
        }
    }
    Ok(KKReport {
        family_size: f.len(),
        k: f.k(),
        x_solved: x,
        shadow_size,
        bound,
        bound_met,
        equality,
        clique_witness,
    })
}

/// True iff `g` contains no clique on `q` vertices. Exact backtracking
/// with candidate-count pruning; practical for n <= 20.
pub fn is_clique_free(g: &Graph, q: usize) -> bool {
    assert!(q >= 2, "clique size must be at least 2");
    !has_clique(g, q)
}

fn has_clique(g: &Graph, q: usize) -> bool {
    let n = g.n();
    if q > n {
        return false;
    }
    fn extend(g: &Graph, candidates: u64, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if (candidates.count_ones() as usize) < need {
            return false;
        }
        let mut rest = candidates;
        while rest != 0 {
            if (rest.count_ones() as usize) < need {
                return false;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // Extending through v only with higher candidates visits each
            // clique once.
            if extend(g, rest & g.neighbors(v).bits(), need - 1) {
                return true;
            }
        }
        false
    }
    extend(g, g.vertex_set().bits(), q)
}

/// Maximum edge count among K_{r+1}-free graphs on `r * a` vertices,
/// attained only by the complete equipartite graph: `C(r,2) * a^2`.
pub fn turan_max_edges(r: u32, a: u32) -> u64 {
    let (r, a) = (r as u64, a as u64);
    r * (r - 1) / 2 * a * a
}

/// The auxiliary graph on the same vertex set whose edges are exactly the
/// pairs `{u, v}` that dominate `g`.
pub fn dominating_pair_graph(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if is_dominating(g, VertexSet::singleton(u).with(v)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("pair graph is simple by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::constructions::{complete_multipartite, equipartite, j_graph, PartitionSpec};

    fn family(n: usize, k: usize, sets: &[&[usize]]) -> SetFamily {
        let sets = sets
            .iter()
            .map(|s| s.iter().copied().collect())
            .collect::<Vec<VertexSet>>();
        SetFamily::new(n, k, sets).unwrap()
    }

    #[test]
    fn shadow_of_triangle_edges_is_its_vertices() {
        let f = family(4, 2, &[&[1, 2], &[1, 3], &[2, 3]]);
        let sh = shadow(&f).unwrap();
        assert_eq!(sh, family(4, 1, &[&[1], &[2], &[3]]));
    }

    #[test]
    fn shadow_of_a_singleton_family() {
        let f = family(6, 3, &[&[0, 2, 5]]);
        let sh = shadow(&f).unwrap();
        assert_eq!(sh.len(), 3);
        assert_eq!(sh, family(6, 2, &[&[0, 2], &[0, 5], &[2, 5]]));
    }

    #[test]
    fn shadow_of_full_layer_is_full_layer_below() {
        // All (a-1)-subsets of an a-set shrink to all (a-2)-subsets.
        for a in [3usize, 4, 5] {
            let ground: Vec<usize> = (0..a).collect();
            let sets: Vec<VertexSet> = subsets_of(&ground, a - 1);
            let f = SetFamily::new(a, a - 1, sets).unwrap();
            let sh = shadow(&f).unwrap();
            assert_eq!(BigUint::from(sh.len()), binomial(a as u64, a as u64 - 2));
        }
    }

    #[test]
    fn shadow_rejects_zero_uniform_family() {
        let f = SetFamily::new(3, 0, vec![VertexSet::EMPTY]).unwrap();
        assert!(matches!(shadow(&f), Err(Error::ShadowUndefined)));
    }

    #[test]
    fn generalized_binomial_values() {
        assert_eq!(generalized_binomial(4.0, 2), 6.0);
        assert_eq!(generalized_binomial(7.25, 0), 1.0);
        assert!((generalized_binomial(4.5, 2) - 7.875).abs() < 1e-12);
        for n in 1..=10usize {
            for k in 0..=n {
                let exact: f64 = binomial(n as u64, k as u64).to_string().parse().unwrap();
                assert!((generalized_binomial(n as f64, k) - exact).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn solve_x_inverts_integer_and_fractional_sizes() {
        assert!((solve_x(6, 2).unwrap() - 4.0).abs() < 1e-7);
        assert!((solve_x(3, 2).unwrap() - 3.0).abs() < 1e-7);
        // C(x,2) = 7 means x(x-1) = 14, so x = (1 + sqrt(57)) / 2.
        let expected = (1.0 + 57f64.sqrt()) / 2.0;
        assert!((solve_x(7, 2).unwrap() - expected).abs() < 1e-7);
        assert!(matches!(solve_x(0, 2), Err(Error::EmptyFamily)));
    }

    #[test]
    fn clique_families_attain_the_bound() {
        let ground: Vec<usize> = vec![1, 3, 4, 6];
        let f = SetFamily::new(7, 2, subsets_of(&ground, 2)).unwrap();
        let report = check_kk(&f).unwrap();
        assert!(report.bound_met && report.equality);
        assert_eq!(
            report.clique_witness.unwrap(),
            ground.iter().copied().collect::<VertexSet>()
        );
        assert!((report.x_solved - 4.0).abs() < 1e-6);
    }

    #[test]
    fn disjoint_pairs_exceed_the_bound_strictly() {
        let f = family(5, 2, &[&[1, 2], &[3, 4]]);
        let report = check_kk(&f).unwrap();
        assert_eq!(report.shadow_size, 4);
        assert!((report.x_solved - 2.0).abs() < 1e-6);
        assert!((report.bound - 2.0).abs() < 1e-6);
        assert!(report.bound_met && !report.equality);
        assert!(report.clique_witness.is_none());
    }

    /// All k-subsets of the given ground elements.
    fn subsets_of(ground: &[usize], k: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut idx = vec![0usize; k];
        fn rec(
            ground: &[usize],
            k: usize,
            start: usize,
            idx: &mut Vec<usize>,
            depth: usize,
            out: &mut Vec<VertexSet>,
        ) {
            if depth == k {
                out.push(idx.iter().map(|&i| ground[i]).collect());
                return;
            }
            for i in start..ground.len() {
                idx[depth] = i;
                rec(ground, k, i + 1, idx, depth + 1, out);
            }
        }
        rec(ground, k, 0, &mut idx, 0, &mut out);
        out
    }

    #[test]
    fn tight_shadow_forces_the_full_layer() {
        // Exhaustive check: any family of exactly a many (a-1)-sets whose
        // shadow is no larger than C(a, a-2) must be the complete
        // (a-1)-layer of a single a-set.
        for a in [3usize, 4, 5] {
            let ground_n = a + 2;
            let ground: Vec<usize> = (0..ground_n).collect();
            let all = subsets_of(&ground, a - 1);
            let cap: usize = binomial(a as u64, a as u64 - 2)
                .to_string()
                .parse()
                .unwrap();
            let mut families = 0usize;
            let mut tight = 0usize;
            for_each_choice(all.len(), a, &mut |pick| {
                families += 1;
                let sets: Vec<VertexSet> = pick.iter().map(|&i| all[i]).collect();
                let f = SetFamily::new(ground_n, a - 1, sets).unwrap();
                let sh = shadow(&f).unwrap();
                if sh.len() <= cap {
                    tight += 1;
                    let union = f.ground_union();
                    assert_eq!(union.len(), a);
                    let expected = SetFamily::new(
                        ground_n,
                        a - 1,
                        subsets_of(&union.iter().collect::<Vec<_>>(), a - 1),
                    )
                    .unwrap();
                    assert_eq!(f, expected);
                }
            });
            // Exactly one tight family per a-subset of the ground set.
            let expected_tight: usize = binomial(ground_n as u64, a as u64)
                .to_string()
                .parse()
                .unwrap();
            assert_eq!(tight, expected_tight, "a={a} over {families} families");
        }
    }

    /// Visits every k-element index choice from 0..m.
    fn for_each_choice(m: usize, k: usize, f: &mut impl FnMut(&[usize])) {
        let mut pick = vec![0usize; k];
        fn rec(m: usize, k: usize, start: usize, depth: usize, pick: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
            if depth == k {
                f(pick);
                return;
            }
            for i in start..m {
                pick[depth] = i;
                rec(m, k, i + 1, depth + 1, pick, f);
            }
        }
        rec(m, k, 0, 0, &mut pick, f);
    }

    #[test]
    fn clique_detection_basics() {
        for (r, a) in [(2u32, 2u32), (3, 2), (3, 3), (4, 2)] {
            let g = equipartite(r, a).unwrap();
            assert!(is_clique_free(&g, r as usize + 1));
            assert!(!is_clique_free(&g, r as usize));
        }
        assert!(!is_clique_free(&Graph::complete(5).unwrap(), 5));
        assert!(is_clique_free(&Graph::edgeless(6).unwrap(), 2));
    }

    #[test]
    fn turan_bound_matches_equipartite_edge_counts() {
        assert_eq!(turan_max_edges(2, 2), 4);
        assert_eq!(turan_max_edges(3, 2), 12);
        assert_eq!(turan_max_edges(4, 3), 54);
        for (r, a) in [(2u32, 3u32), (3, 2), (4, 3), (5, 2)] {
            let g = equipartite(r, a).unwrap();
            assert_eq!(g.edge_count() as u64, turan_max_edges(r, a));
        }
    }

    #[test]
    fn pair_graph_of_multipartite_with_large_classes_is_itself() {
        // With every class of size at least 3, the only dominating pairs
        // are edges.
        for parts in [vec![3, 3], vec![3, 4], vec![3, 3, 3]] {
            let g = complete_multipartite(&PartitionSpec::new(parts).unwrap());
            assert_eq!(dominating_pair_graph(&g), g);
        }
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(dominating_pair_graph(&k5), k5);
    }

    #[test]
    fn pair_graph_gains_edges_below_the_class_size_boundary() {
        // In the 4-cycle a diagonal non-edge dominates, so the pair graph
        // is strictly larger than the graph.
        let c4 = equipartite(2, 2).unwrap();
        assert_eq!(dominating_pair_graph(&c4), Graph::complete(4).unwrap());
    }

    #[test]
    fn pair_graph_of_join_family_member_is_equipartite() {
        let g = j_graph(4, 3, 1).unwrap();
        let f = dominating_pair_graph(&g);
        assert!(is_isomorphic(&f, &equipartite(4, 3).unwrap()));
    }

    #[test]
    fn kk_report_serializes_with_witness_as_vertex_list() {
        let ground: Vec<usize> = vec![0, 1, 2];
        let f = SetFamily::new(3, 2, subsets_of(&ground, 2)).unwrap();
        let report = check_kk(&f).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["clique_witness"], serde_json::json!([0, 1, 2]));
        assert_eq!(json["equality"], serde_json::json!(true));
    }
}
