#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use medianecc::graph::Graph;
use medianecc::theta::ThetaStructure;

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).unwrap()
}

/// v0..v7 with classes E1 = {v0v2, v1v3}, E2 = {v2v5, v3v6, v4v7},
/// E3 = {v0v1, v2v3, v5v6}, E4 = {v3v4, v6v7}.
pub fn eight_vertex() -> Graph {
    graph(8, &[(0, 2), (1, 3), (2, 5), (3, 6), (4, 7), (0, 1), (2, 3), (5, 6), (3, 4), (6, 7)])
}

/// Representative edge per class of [`eight_vertex`], E1..E4.
pub const EIGHT_CLASSES: [(usize, usize); 4] = [(0, 2), (2, 5), (0, 1), (3, 4)];

/// 0 = v0, 1 = u, 2..8 the rest of the cube on u, 8 = x, 10 = v.
/// Classes: E1 = (1,5), E2 = (1,3), E3 = (1,2), E4 = (3,11), E5 = (4,9).
pub fn ladder_example() -> Graph {
    graph(
        13,
        &[
            (0, 1),
            (1, 2),
            (1, 3),
            (1, 5),
            (2, 4),
            (2, 6),
            (3, 7),
            (3, 4),
            (4, 8),
            (5, 6),
            (5, 7),
            (7, 8),
            (6, 8),
            (4, 9),
            (12, 10),
            (3, 11),
            (4, 12),
            (9, 10),
            (11, 12),
        ],
    )
}

pub const LADDER_CLASSES: [(usize, usize); 5] = [(1, 5), (1, 3), (1, 2), (3, 11), (4, 9)];

/// Oriented graph with basepoint 16 and a marked vertex 0 whose star has
/// 11 vertices.
pub fn star_example() -> Graph {
    // 0 P11, 1 P12, 2 P21, 3 P22, 4 P31, 5 P32, 6 P33, 7 P34, 8 P41, 9 P42,
    // 10 P51, 11 P52, 12 P61, 13 P62, 14 P63, 15 P11b, 16 P51b, 17 P41b,
    // 18 P52b, 19 P31b, 20 P42b
    graph(
        21,
        &[
            (0, 1),
            (0, 2),
            (1, 3),
            (2, 3),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
            (4, 5),
            (4, 6),
            (5, 7),
            (6, 7),
            (0, 8),
            (4, 9),
            (8, 9),
            (10, 0),
            (11, 8),
            (10, 11),
            (0, 12),
            (12, 13),
            (13, 14),
            (15, 0),
            (17, 8),
            (16, 10),
            (18, 11),
            (19, 4),
            (20, 9),
            (16, 15),
            (15, 17),
            (18, 17),
            (16, 18),
            (15, 19),
            (17, 20),
            (19, 20),
        ],
    )
}

/// v0 = 0, u = 3, u⁺ = 7, u⁺⁺ = 10, v = 18.
pub fn milestone_example() -> Graph {
    // 0 P11, 1 P12, 2 P13, 3 P21, 4 P22, 5 P23, 6 P24, 7 P32, 8 P25, 9 P31,
    // 10 P42, 11 P33, 12 P41, 13 P51, 14 P52, 15 P61, 16 P62, 17 P63, 18 P64
    graph(
        19,
        &[
            (0, 1),
            (0, 3),
            (1, 4),
            (3, 4),
            (3, 9),
            (4, 7),
            (9, 7),
            (4, 5),
            (5, 11),
            (7, 11),
            (4, 6),
            (5, 8),
            (6, 8),
            (2, 8),
            (9, 12),
            (7, 10),
            (12, 10),
            (12, 13),
            (10, 14),
            (13, 14),
            (12, 15),
            (10, 16),
            (13, 17),
            (14, 18),
            (15, 16),
            (15, 17),
            (16, 18),
            (17, 18),
        ],
    )
}

/// Two classes of size 3 (E1 = (2,4), E2 = (0,1)), the rest smaller.
pub fn split_example() -> Graph {
    // 0 P11, 1 P12, 2 P21, 3 P22, 4 P31, 5 P32, 6 P23, 7 P33, 8 P4
    graph(
        9,
        &[(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 5), (4, 5), (3, 6), (6, 7), (5, 7), (7, 8)],
    )
}

/// v0 = 0, u = 1; E1 = (1,4), E2 = (1,3), E3 = (0,1), E4 = (1,7).
pub fn aligned_example() -> Graph {
    // 0 P13, 1 P14, 2 P23, 3 P24, 4 P31, 5 P32, 6 P41, 7 P42
    graph(8, &[(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (7, 5), (0, 6), (1, 7), (4, 5), (6, 7)])
}

pub fn k23() -> Graph {
    graph(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
}

pub fn cycle(n: usize) -> Graph {
    let e: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    graph(n, &e)
}

pub fn star(k: usize) -> Graph {
    let e: Vec<(usize, usize)> = (1..=k).map(|i| (0, i)).collect();
    graph(k + 1, &e)
}

pub fn class_of(g: &Graph, ts: &ThetaStructure, a: usize, b: usize) -> usize {
    ts.class_of_edge[g.edge_id(a, b).expect("edge")]
}

pub fn names(g: &Graph, ts: &ThetaStructure, reps: &[(usize, usize)]) -> Vec<usize> {
    reps.iter().map(|&(a, b)| class_of(g, ts, a, b)).collect()
}

/// Sorted class ids for the 1-based names in `which`.
pub fn named(ids: &[usize], which: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = which.iter().map(|&i| ids[i - 1]).collect();
    v.sort_unstable();
    v
}

pub fn apsp(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n())
        .map(|s| {
            let mut d = vec![usize::MAX; g.n()];
            d[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &w in g.neighbors(u) {
                    if d[w] == usize::MAX {
                        d[w] = d[u] + 1;
                        q.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

pub fn ecc_brute(g: &Graph) -> Vec<usize> {
    apsp(g).into_iter().map(|r| r.into_iter().max().unwrap()).collect()
}

pub fn reach_brute(g: &Graph) -> Vec<usize> {
    let d = apsp(g);
    let n = g.n();
    (0..n)
        .map(|u| {
            let mut best = 0;
            for s in 0..n {
                for t in 0..n {
                    if d[s][u] + d[u][t] == d[s][t] {
                        best = best.max(d[s][u].min(d[u][t]));
                    }
                }
            }
            best
        })
        .collect()
}

/// Djoković–Winkler classes: edges ab, xy related when
/// d(a,x) + d(b,y) ≠ d(a,y) + d(b,x); closure by repeated merging.
pub fn theta_brute(g: &Graph) -> Vec<BTreeSet<usize>> {
    let d = apsp(g);
    let m = g.m();
    let mut label: Vec<usize> = (0..m).collect();
    for e in 0..m {
        for f in e + 1..m {
            let (a, b) = g.edge(e);
            let (x, y) = g.edge(f);
            if d[a][x] + d[b][y] != d[a][y] + d[b][x] {
                let (from, to) = (label[f].max(label[e]), label[f].min(label[e]));
                for l in label.iter_mut() {
                    if *l == from {
                        *l = to;
                    }
                }
            }
        }
    }
    let mut groups: Vec<BTreeSet<usize>> = Vec::new();
    let mut seen = std::collections::HashMap::new();
    for (e, &l) in label.iter().enumerate() {
        let i = *seen.entry(l).or_insert_with(|| {
            groups.push(BTreeSet::new());
            groups.len() - 1
        });
        groups[i].insert(e);
    }
    groups.sort();
    groups
}

pub fn partition_of(ts: &ThetaStructure) -> Vec<BTreeSet<usize>> {
    let mut v: Vec<BTreeSet<usize>> = ts.class_edges.iter().map(|c| c.iter().copied().collect()).collect();
    v.sort();
    v
}

/// Cliques of a graph on `k` vertices, as sorted vertex lists.
pub fn cliques_brute(k: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let adj = |a: usize, b: usize| edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a));
    (0u32..1 << k)
        .map(|m| (0..k).filter(|&i| m >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|c| c.iter().enumerate().all(|(i, &a)| c[i + 1..].iter().all(|&b| adj(a, b))))
        .collect()
}
