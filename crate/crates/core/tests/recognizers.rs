mod common;

use common::{adjacency_masks, brute_is_chordal, brute_is_split, brute_is_threshold};
use rainbow_core::enumerate::{graph_from_mask, pair_list};
use rainbow_core::graph::degree_profile;
use rainbow_core::recognize::{is_chordal, is_threshold, neighbourhood_nesting_check, split_partition};

/// Every labelled graph on `n` vertices.
fn for_all_graphs(n: usize, mut f: impl FnMut(u64)) {
    for mask in 0..1u64 << pair_list(n).len() {
        f(mask);
    }
}

#[test]
fn split_matches_bipartition_search_up_to_seven_vertices() {
    for n in 1..=7 {
        let mut split = 0usize;
        for_all_graphs(n, |mask| {
            let g = graph_from_mask(n, mask);
            let adj = adjacency_masks(&g);
            let part = split_partition(&g);
            assert_eq!(part.is_some(), brute_is_split(&adj), "n={n} mask={mask:#b}");
            if let Some(part) = part {
                split += 1;
                let clique: u32 = part.clique().iter().map(|&v| 1 << v).sum();
                for &v in part.clique() {
                    assert_eq!(clique & !(1 << v) & !adj[v], 0);
                }
                for &v in part.independent() {
                    assert_eq!(adj[v] & !clique, 0);
                }
            }
        });
        assert!(split > 0);
    }
}

#[test]
fn chordal_matches_induced_cycle_search_up_to_seven_vertices() {
    for n in 1..=7 {
        for_all_graphs(n, |mask| {
            let g = graph_from_mask(n, mask);
            assert_eq!(
                is_chordal(&g),
                brute_is_chordal(&adjacency_masks(&g)),
                "n={n} mask={mask:#b}"
            );
        });
    }
}

#[test]
fn threshold_matches_forbidden_subgraphs_up_to_seven_vertices() {
    for n in 1..=7 {
        let mut threshold = 0usize;
        for_all_graphs(n, |mask| {
            let g = graph_from_mask(n, mask);
            let seq = is_threshold(&g);
            assert_eq!(
                seq.is_some(),
                brute_is_threshold(&adjacency_masks(&g)),
                "n={n} mask={mask:#b}"
            );
            if let Some(seq) = seq {
                threshold += 1;
                // the certificate rebuilds the same graph
                assert_eq!(seq.build().edges().len(), g.m());
                assert!(seq.build().edges().iter().all(|&(u, v)| g.has_edge(u, v)));
                let part = split_partition(&g).expect("threshold graphs are split");
                assert!(neighbourhood_nesting_check(&g, &part));
            }
        });
        // labelled threshold graphs, OEIS A005840
        let expected = [1, 2, 8, 46, 332, 2_874, 29_024][n - 1];
        assert_eq!(threshold, expected, "n={n}");
    }
}

#[test]
fn split_graphs_are_chordal() {
    for_all_graphs(6, |mask| {
        let g = graph_from_mask(6, mask);
        if split_partition(&g).is_some() {
            assert!(is_chordal(&g));
        }
    });
}

#[test]
fn split_index_is_the_first_small_degree() {
    for_all_graphs(6, |mask| {
        let g = graph_from_mask(6, mask);
        let profile = degree_profile(&g);
        let d = profile.degrees();
        assert!(d.windows(2).all(|w| w[0] >= w[1]));
        let s = profile.split_index();
        assert!(d[..s].iter().enumerate().all(|(i, &di)| di > i));
        assert!(s == d.len() || d[s] <= s);
        for (i, &v) in profile.order().iter().enumerate() {
            assert_eq!(g.degree(v), d[i]);
            assert_eq!(profile.position_of(v), i);
        }
    });
}
