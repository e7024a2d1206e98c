mod common;

use std::collections::BTreeSet;

use common::*;
use medianecc::graph::Graph;
use medianecc::harness::{cogwheel, grid, hypercube, path, simplex_graph};
use medianecc::pof::{
    build_pof_index, count_induced_cubes, crossing_graph, enumerate_hypercubes, enumerate_mops, for_each_minimal_parallel,
    for_each_parallel_naive, maximal_pofs, mop_clique_bound, mop_count_bound, ortho_adjacent_classes, pof_stats, PofIndex,
};
use medianecc::theta::{compute_theta, orient};

fn index(g: &Graph, v0: usize) -> PofIndex {
    let ts = compute_theta(g).unwrap();
    build_pof_index(&ts, &orient(g, &ts, v0).unwrap()).unwrap()
}

fn four_cycles(g: &Graph) -> usize {
    let n = g.n();
    let mut count = 0;
    for a in 0..n {
        for c in a + 1..n {
            let common = g.neighbors(a).iter().filter(|x| g.neighbors(c).contains(x)).count();
            count += common * common.saturating_sub(1) / 2;
        }
    }
    count / 2
}

fn corpus() -> Vec<Graph> {
    vec![
        hypercube(3),
        hypercube(4),
        grid(3, 4),
        path(6),
        cogwheel(5),
        eight_vertex(),
        ladder_example(),
        star_example(),
        milestone_example(),
        split_example(),
        aligned_example(),
    ]
}

#[test]
fn pofs_are_in_bijection_with_vertices() {
    for g in corpus() {
        let p = index(&g, 0);
        let d = apsp(&g);
        let mut seen = BTreeSet::new();
        for v in 0..g.n() {
            assert_eq!(p.vertex_of(p.pof(v)), Some(v));
            let below = g.neighbors(v).iter().filter(|&&w| d[0][w] < d[0][v]).count();
            assert_eq!(p.pof(v).len(), below);
            assert!(seen.insert(p.pof(v).to_vec()));
        }
        assert_eq!(pof_stats(&p).pofs, g.n());
    }
}

#[test]
fn hypercube_pofs_are_bit_sets() {
    let g = hypercube(4);
    let ts = compute_theta(&g).unwrap();
    let p = build_pof_index(&ts, &orient(&g, &ts, 0).unwrap()).unwrap();
    let class_of_bit: Vec<usize> = (0..4).map(|b| class_of(&g, &ts, 0, 1 << b)).collect();
    for v in 0..16usize {
        let mut want: Vec<usize> = (0..4).filter(|b| v >> b & 1 == 1).map(|b| class_of_bit[b]).collect();
        want.sort_unstable();
        assert_eq!(p.pof(v), want.as_slice());
    }
    assert_eq!(p.d(), 4);
}

#[test]
fn tree_pofs_are_singletons() {
    let g = graph(6, &[(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]);
    let p = index(&g, 0);
    assert!((1..6).all(|v| p.pof(v).len() == 1));
    assert_eq!(p.d(), 1);
}

#[test]
fn hypercube_counts() {
    let expect = [(hypercube(2), 5), (hypercube(3), 19), (path(3), 2)];
    for (g, want) in expect {
        let s = pof_stats(&index(&g, 0));
        assert_eq!(s.hypercubes, want);
        assert_eq!(s.alpha, want + g.n());
    }
}

#[test]
fn cube_counts_match_direct_count() {
    for g in corpus() {
        let p = index(&g, 0);
        let mut by_dim = vec![g.n()];
        for h in enumerate_hypercubes(&p) {
            let k = h.signature.len();
            if by_dim.len() <= k {
                by_dim.resize(k + 1, 0);
            }
            by_dim[k] += 1;
        }
        let direct = count_induced_cubes(&g);
        let trimmed: Vec<usize> = direct.iter().copied().take_while(|&c| c > 0).collect();
        assert_eq!(by_dim, trimmed);
        assert_eq!(by_dim[1], g.m());
        if by_dim.len() > 2 {
            assert_eq!(by_dim[2], four_cycles(&g));
        }
        // contractible cube complex
        let euler: i64 = by_dim.iter().enumerate().map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        assert_eq!(euler, 1);
        // each vertex anchors 2^|POF| cubes
        let s = pof_stats(&p);
        let beta = p.beta();
        assert_eq!(beta.iter().sum::<usize>(), g.n());
        assert_eq!(s.alpha, beta.iter().enumerate().map(|(i, b)| b << i).sum::<usize>());
        assert_eq!(s.alpha, by_dim.iter().sum::<usize>());
        assert_eq!(s.hypercubes, s.alpha - g.n());
    }
}

#[test]
fn hypercube_signature_sizes_match_vertex_counts() {
    for g in corpus() {
        let p = index(&g, 0);
        for h in enumerate_hypercubes(&p) {
            let d = apsp(&g);
            assert_eq!(d[h.basis][h.anti], h.signature.len());
        }
    }
}

#[test]
fn maximal_pofs_of_small_graphs() {
    let q3 = index(&hypercube(3), 0);
    let m = maximal_pofs(&q3);
    assert_eq!(m.len(), 1);
    assert_eq!(m[0].0.len(), 3);
    assert_eq!(m[0].1.anti, 7);

    let p = index(&path(5), 0);
    assert_eq!(maximal_pofs(&p).len(), 4);

    let g = grid(3, 3);
    assert_eq!(maximal_pofs(&index(&g, 0)).len(), 4);
}

#[test]
fn crossing_graphs() {
    for d in 2..=5 {
        let c = crossing_graph(&index(&hypercube(d), 0));
        assert_eq!(c.edges().len(), d * (d - 1) / 2);
    }
    let c = crossing_graph(&index(&path(5), 0));
    assert!(c.edges().is_empty());

    // the simplex graph of a cycle crosses back to the cycle
    let c5 = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
    let k = simplex_graph(5, &c5);
    let cg = crossing_graph(&index(&k, 0));
    assert_eq!(cg.adj.len(), 5);
    assert!(cg.adj.iter().all(|l| l.len() == 2));
    assert_eq!(cg.edges().len(), 5);
    // connected, so a single 5-cycle
    let mut seen = vec![false; 5];
    let mut stack = vec![0];
    while let Some(a) = stack.pop() {
        if !std::mem::replace(&mut seen[a], true) {
            stack.extend(cg.adj[a].iter().copied());
        }
    }
    assert!(seen.iter().all(|&b| b));
}

#[test]
fn mop_counts() {
    let q2 = index(&hypercube(2), 0);
    assert_eq!(enumerate_mops(&q2).len(), 3);
    for d in 1..=5 {
        assert_eq!(enumerate_mops(&index(&hypercube(d), 0)).len(), (1 << d) - 1);
    }
    let t = graph(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (5, 6)]);
    assert_eq!(enumerate_mops(&index(&t, 0)).len(), 6);
}

#[test]
fn mop_bounds_hold() {
    for g in corpus() {
        let p = index(&g, 0);
        let mops = enumerate_mops(&p).len() as f64;
        assert!(mops <= mop_clique_bound(&p));
        if let Some(b) = mop_count_bound(p.d(), g.n()) {
            assert!(mops <= b + 1e-9, "{mops} > {b}");
        }
    }
    assert_eq!(mop_count_bound(1, 10), None);
}

#[test]
fn mops_are_maximal_outgoing_families() {
    for g in corpus() {
        let p = index(&g, 0);
        let mops: BTreeSet<usize> = enumerate_mops(&p).into_iter().collect();
        for u in 0..g.n() {
            let outs = p.out_cubes(u);
            for &c in &outs[1..] {
                let s: BTreeSet<usize> = p.sig(c).into_iter().collect();
                let has_super = outs.iter().any(|&o| {
                    let t: BTreeSet<usize> = p.sig(o).into_iter().collect();
                    t.len() > s.len() && s.is_subset(&t)
                });
                assert_eq!(mops.contains(&c), !has_super);
            }
        }
    }
}

#[test]
fn ortho_adjacent_on_grid() {
    let g = grid(3, 3);
    let ts = compute_theta(&g).unwrap();
    let p = build_pof_index(&ts, &orient(&g, &ts, 0).unwrap()).unwrap();
    let (row, col) = (class_of(&g, &ts, 0, 1), class_of(&g, &ts, 0, 3));
    let mut cols = vec![col, class_of(&g, &ts, 3, 6)];
    cols.sort_unstable();
    let mut both = vec![row, col];
    both.sort_unstable();
    assert_eq!(ortho_adjacent_classes(&p, &[row]), cols);
    assert!(ortho_adjacent_classes(&p, &both).is_empty());
    assert_eq!(ortho_adjacent_classes(&p, &[]).len(), ts.q);
}

#[test]
fn minimal_stream_refines_naive_stream() {
    for g in corpus() {
        let p = index(&g, 0);
        let mut naive = Vec::new();
        for_each_parallel_naive(&p, |r, l| naive.push((r, l)));
        let mut minimal = Vec::new();
        for_each_minimal_parallel(&p, |r, l| minimal.push((r, l)));
        let naive_set: BTreeSet<(usize, usize)> = naive.iter().copied().collect();
        assert_eq!(naive_set.len(), naive.len());
        for &(r, l) in &minimal {
            assert!(naive_set.contains(&(r, l)));
        }
        // every naive pair contains a minimal one on the same out cube
        for &(r, l) in &naive {
            let rs: BTreeSet<usize> = p.sig(r).into_iter().collect();
            assert!(minimal.iter().any(|&(r2, l2)| {
                l2 == l && p.cube(r2).anti == p.cube(r).anti && p.sig(r2).iter().all(|c| rs.contains(c))
            }));
        }
    }
}

#[test]
fn out_cubes_start_with_the_vertex() {
    for g in corpus() {
        let p = index(&g, 0);
        for u in 0..g.n() {
            let outs = p.out_cubes(u);
            assert_eq!(p.dim(outs[0]), 0);
            assert_eq!(p.cube(outs[0]).anti, u);
            assert!(outs.windows(2).all(|w| p.dim(w[0]) <= p.dim(w[1])));
            assert!(outs.iter().all(|&c| p.cube(c).basis == u));
        }
    }
}
