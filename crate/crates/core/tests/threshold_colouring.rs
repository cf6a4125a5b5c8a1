mod common;

use common::{random_threshold, shuffle_labels, PathOracle};
use rainbow_core::enumerate::enumerate_threshold;
use rainbow_core::graph::{EdgeColouring, Graph};
use rainbow_core::kraft::is_prefix_free;
use rainbow_core::rainbow::verify_rainbow;
use rainbow_core::recognize::split_partition;
use rainbow_core::threshold::{
    colour_threshold, colour_threshold_case2, colour_threshold_counted, threshold_rc, ThresholdCase, ThresholdError,
    ThresholdWork,
};
use rand::rngs::StdRng;
use rand::SeedableRng;

#[test]
fn every_small_threshold_graph_gets_a_rainbow_colouring_of_the_reported_size() {
    let mut rng = StdRng::seed_from_u64(11);
    for (_, g) in enumerate_threshold(8).unwrap() {
        let g = shuffle_labels(&mut rng, g.n(), g.edges().to_vec());
        let (col, report) = colour_threshold(&g).unwrap();
        assert_eq!(col.colour_count(), report.rc);
        assert_eq!(col.colours_used(), report.rc);
        assert!(verify_rainbow(&g, &col).unwrap().connected, "{:?}", g.edges());
        assert_eq!(report.case == ThresholdCase::Clique, g.is_complete());
        assert_eq!(threshold_rc(&g).unwrap(), report);
    }
}

/// Codeword of every independent vertex: the colours on its edges to the
/// clique, read in canonical clique order.
fn codewords(g: &Graph, col: &EdgeColouring) -> Vec<Vec<bool>> {
    let part = split_partition(g).unwrap();
    let profile = part.profile();
    part.independent()
        .iter()
        .map(|&v| {
            (0..g.degree(v))
                .map(|j| {
                    let e = g.edge_id(v, profile.vertex_at(j)).expect("nested neighbourhood");
                    col.colour(e) == 1
                })
                .collect()
        })
        .collect()
}

#[test]
fn rainbow_two_colourings_induce_prefix_free_codes() {
    let mut checked = 0;
    for (_, g) in enumerate_threshold(6).unwrap() {
        if g.is_complete() || threshold_rc(&g).unwrap().case != ThresholdCase::KraftTwo {
            continue;
        }
        let oracle = PathOracle::new(&g);
        for mask in 0u32..1 << g.m() {
            let colours: Vec<usize> = (0..g.m()).map(|e| (mask >> e & 1) as usize).collect();
            if !oracle.is_rainbow(&colours) {
                continue;
            }
            let col = EdgeColouring::new(&g, 2, colours).unwrap();
            assert!(is_prefix_free(&codewords(&g, &col)), "{:?} {mask:b}", g.edges());
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn case2_graphs_have_no_rainbow_two_colouring() {
    for (_, g) in enumerate_threshold(6).unwrap() {
        if threshold_rc(&g).unwrap().case != ThresholdCase::PendantThree {
            continue;
        }
        let oracle = PathOracle::new(&g);
        assert!((0u32..1 << g.m()).all(|mask| {
            let colours: Vec<usize> = (0..g.m()).map(|e| (mask >> e & 1) as usize).collect();
            !oracle.is_rainbow(&colours)
        }));
    }
}

#[test]
fn case2_refuses_kraft_graphs() {
    let paw_plus = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (3, 0), (3, 1)]).unwrap();
    assert_eq!(colour_threshold_case2(&paw_plus), Err(ThresholdError::KraftSatisfied));
    assert_eq!(
        colour_threshold(&Graph::path(4)).unwrap_err(),
        ThresholdError::NotThreshold
    );
}

#[test]
fn large_threshold_graphs_stay_within_three_visits_per_edge() {
    let mut rng = StdRng::seed_from_u64(3);
    for (n, density) in [(50, 0.5), (300, 0.1), (300, 0.9), (2000, 0.02), (1000, 0.3)] {
        let g = random_threshold(&mut rng, n, density);
        let mut work = ThresholdWork::default();
        let (col, report) = colour_threshold_counted(&g, &mut work).unwrap();
        assert!(
            work.edges.edge_visits <= 3 * g.m() as u64,
            "{} > 3·{}",
            work.edges.edge_visits,
            g.m()
        );
        assert_eq!(col.colours_used(), report.rc);
        if n <= 300 {
            assert!(verify_rainbow(&g, &col).unwrap().connected);
        }
    }
}
