mod common;

use common::*;
use medianecc::graph::{
    bfs, distance_matrix, eccentricities_oracle, interval, load_graph, median_of, parse_edge_list, verify_median, Median,
    DEFAULT_CAP,
};
use medianecc::harness::{hypercube, path};
use medianecc::Error;
use proptest::prelude::*;

#[test]
fn parse_remaps_ids_in_order_of_appearance() {
    let l = parse_edge_list("# comment\n10 20\n\n20 7\n").unwrap();
    assert_eq!(l.labels, vec![10, 20, 7]);
    assert_eq!(l.graph.n(), 3);
    assert_eq!(l.graph.m(), 2);
    assert!(l.graph.edge_id(0, 1).is_some());
    assert!(l.graph.edge_id(1, 2).is_some());
}

#[test]
fn parse_errors() {
    assert_eq!(load_graph("1 1\n").unwrap_err(), Error::SelfLoop(1));
    assert_eq!(load_graph("1 2\n2 1\n").unwrap_err(), Error::DuplicateEdge(1, 2));
    assert_eq!(load_graph("1 2\n3 4\n").unwrap_err(), Error::Disconnected);
    assert!(matches!(load_graph("1 2\n3\n"), Err(Error::Parse { line: 2, .. })));
    assert!(matches!(load_graph("1 x\n"), Err(Error::Parse { line: 1, .. })));
}

#[test]
fn empty_edge_list_is_one_vertex() {
    let g = load_graph("").unwrap();
    assert_eq!((g.n(), g.m()), (1, 0));
    assert_eq!(eccentricities_oracle(&g), vec![0]);
}

#[test]
fn edge_list_round_trip() {
    let g = grid_like();
    let l = parse_edge_list(&g.to_edge_list()).unwrap();
    assert_eq!(l.graph.n(), g.n());
    let (dh, dg) = (apsp(&l.graph), apsp(&g));
    for a in 0..g.n() {
        for b in 0..g.n() {
            assert_eq!(dh[a][b], dg[l.labels[a] as usize][l.labels[b] as usize]);
        }
    }
}

fn grid_like() -> medianecc::graph::Graph {
    medianecc::harness::grid(3, 4)
}

#[test]
fn bfs_on_cube_and_path() {
    let q3 = hypercube(3);
    let r = bfs(&q3, 0);
    let by_popcount: Vec<usize> = (0..8usize).map(|v| v.count_ones() as usize).collect();
    assert_eq!(r.dist, by_popcount);
    assert_eq!(r.parent[0], 0);
    for v in 1..8 {
        assert_eq!(r.dist[r.parent[v]] + 1, r.dist[v]);
    }
    assert_eq!(bfs(&path(4), 0).dist, vec![0, 1, 2, 3]);
}

#[test]
fn ecc_oracle_examples() {
    assert_eq!(eccentricities_oracle(&path(4)), vec![3, 2, 2, 3]);
    for d in 1..=5 {
        assert_eq!(eccentricities_oracle(&hypercube(d)), vec![d; 1 << d]);
    }
    let g = grid_like();
    assert_eq!(eccentricities_oracle(&g), ecc_brute(&g));
}

#[test]
fn medians() {
    let dm = distance_matrix(&hypercube(3), DEFAULT_CAP).unwrap();
    // majority vote of 0b011, 0b101, 0b110
    assert_eq!(median_of(&dm, 3, 5, 6), Median::Unique(7));
    assert_eq!(median_of(&dm, 0, 0, 7), Median::Unique(0));
    let c6 = distance_matrix(&cycle(6), DEFAULT_CAP).unwrap();
    assert_eq!(median_of(&c6, 0, 2, 4), Median::Empty);
    let k23 = distance_matrix(&k23(), DEFAULT_CAP).unwrap();
    assert_eq!(median_of(&k23, 2, 3, 4), Median::Multiple(2));
}

#[test]
fn interval_on_grid() {
    let g = grid_like();
    let dm = distance_matrix(&g, DEFAULT_CAP).unwrap();
    // corners of a 3x4 grid span everything
    assert_eq!(interval(&dm, 0, 11), (0..12).collect::<Vec<_>>());
    assert_eq!(interval(&dm, 0, 3), vec![0, 1, 2, 3]);
}

#[test]
fn verify_examples() {
    assert!(verify_median(&hypercube(3), DEFAULT_CAP).unwrap().ok);
    assert!(verify_median(&path(5), DEFAULT_CAP).unwrap().ok);
    let bad = verify_median(&k23(), DEFAULT_CAP).unwrap();
    assert!(!bad.ok);
    assert!(bad.violation.is_some());
    assert!(!verify_median(&cycle(6), DEFAULT_CAP).unwrap().ok);
    assert!(!verify_median(&cycle(5), DEFAULT_CAP).unwrap().ok);
    assert_eq!(
        verify_median(&hypercube(4), 10).unwrap_err(),
        Error::CapExceeded { n: 16, cap: 10 }
    );
}

/// Median check straight from the definition, for comparison.
fn median_brute(g: &medianecc::graph::Graph) -> bool {
    let d = apsp(g);
    let n = g.n();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let k = (0..n)
                    .filter(|&w| {
                        d[x][w] + d[w][y] == d[x][y] && d[y][w] + d[w][z] == d[y][z] && d[x][w] + d[w][z] == d[x][z]
                    })
                    .count();
                if k != 1 {
                    return false;
                }
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn verify_agrees_with_definition(n in 2usize..9, extra in proptest::collection::vec((0usize..9, 0usize..9), 0..6), seed in 0u64..1000) {
        // random tree plus a few chords
        let mut es: Vec<(usize, usize)> = (1..n).map(|i| ((seed as usize * 7 + i * 13) % i, i)).collect();
        for (a, b) in extra {
            let (a, b) = (a % n, b % n);
            if a != b && !es.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a)) {
                es.push((a, b));
            }
        }
        let g = graph(n, &es);
        prop_assert_eq!(verify_median(&g, DEFAULT_CAP).unwrap().ok, median_brute(&g));
        prop_assert_eq!(eccentricities_oracle(&g), ecc_brute(&g));
    }
}
