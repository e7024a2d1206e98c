mod common;

use common::*;
use medianecc::harness::{cogwheel, hypercube, path, simplex_graph};
use medianecc::pof::build_pof_index;
use medianecc::theta::{compute_theta, orient};
use medianecc::wopp::{build_refinement_tree, simplex_central_vertex, simplex_eccentricities, solve_wopp, Family};
use medianecc::Error;
use proptest::prelude::*;

fn clique_family(k: usize, edges: &[(usize, usize)]) -> Family {
    let mut orth = vec![Vec::new(); k];
    for &(a, b) in edges {
        orth[a].push(b);
        orth[b].push(a);
    }
    for l in &mut orth {
        l.sort_unstable();
    }
    Family { pofs: cliques_brute(k, edges), orth }
}

fn best_disjoint(f: &Family, w: &[u64]) -> Vec<u64> {
    f.pofs
        .iter()
        .map(|x| {
            (0..f.pofs.len())
                .filter(|&j| f.pofs[j].iter().all(|c| !x.contains(c)))
                .map(|j| w[j])
                .max()
                .unwrap()
        })
        .collect()
}

fn check(f: &Family, w: &[u64]) {
    let r = solve_wopp(f, w).unwrap();
    assert_eq!(r.weight, best_disjoint(f, w));
    for (i, &o) in r.op.iter().enumerate() {
        assert!(f.pofs[o].iter().all(|c| !f.pofs[i].contains(c)));
        assert_eq!(w[o], r.weight[i]);
    }
    let d = f.dim().max(1);
    assert!(r.memo_size <= d * d * f.pofs.len());
}

#[test]
fn central_vertex_examples() {
    let k = cogwheel(5);
    let ts = compute_theta(&k).unwrap();
    let c = simplex_central_vertex(&k, &ts).unwrap();
    assert_eq!(k.degree(c), 5);

    let p4 = path(4);
    assert_eq!(simplex_central_vertex(&p4, &compute_theta(&p4).unwrap()), None);
    assert_eq!(simplex_eccentricities(&p4).unwrap_err(), Error::NotSimplex);

    for d in 1..=4 {
        let q = hypercube(d);
        assert_eq!(simplex_central_vertex(&q, &compute_theta(&q).unwrap()), Some(0));
    }
}

#[test]
fn square_family() {
    // K(K2) = Q2: {}, {0}, {1}, {0,1}
    let f = clique_family(2, &[(0, 1)]);
    assert_eq!(f.pofs, vec![vec![], vec![0], vec![1], vec![0, 1]]);
    let w = [1, 2, 3, 4];
    let r = solve_wopp(&f, &w).unwrap();
    assert_eq!(r.op, vec![3, 2, 1, 0]);
    assert_eq!(r.weight, vec![4, 3, 2, 1]);
}

#[test]
fn cycle_family_opposites() {
    let c5 = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
    let f = clique_family(5, &c5);
    assert_eq!(f.pofs.len(), 11);
    let w: Vec<u64> = f.pofs.iter().map(|x| x.len() as u64 + 1).collect();
    let r = solve_wopp(&f, &w).unwrap();
    for (i, x) in f.pofs.iter().enumerate() {
        // every clique of C5 misses some edge of C5
        assert_eq!(r.weight[i], 3, "{x:?}");
    }
    check(&f, &w);
}

#[test]
fn star_family_picks_heaviest_other_leaf() {
    let f = clique_family(4, &[]);
    let w = [1, 5, 9, 2, 7];
    let r = solve_wopp(&f, &w).unwrap();
    assert_eq!(r.weight, vec![9, 9, 7, 9, 9]);
    assert_eq!(r.op[2], 4);
}

#[test]
fn zero_weight_rejected() {
    let f = clique_family(2, &[]);
    assert_eq!(solve_wopp(&f, &[1, 0, 1]).unwrap_err(), Error::BadWeight(1));
    assert!(matches!(solve_wopp(&f, &[1, 1]), Err(Error::Param(_))));
}

#[test]
fn simplex_eccentricities_match_bfs() {
    let c5 = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
    let k4: Vec<(usize, usize)> = (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).collect();
    for g in [simplex_graph(5, &c5), simplex_graph(4, &k4), simplex_graph(5, &[(0, 1), (2, 3)]), star(6), hypercube(4)] {
        assert_eq!(simplex_eccentricities(&g).unwrap(), ecc_brute(&g));
    }
    let k = cogwheel(5);
    assert_eq!(simplex_eccentricities(&k).unwrap().into_iter().max(), Some(4));
}

#[test]
fn index_family_matches_clique_family() {
    let es = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)];
    let g = simplex_graph(5, &es);
    let ts = compute_theta(&g).unwrap();
    let c = simplex_central_vertex(&g, &ts).unwrap();
    let p = build_pof_index(&ts, &orient(&g, &ts, c).unwrap()).unwrap();
    let f = Family::from_index(&p);
    let mut sizes: Vec<usize> = f.pofs.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    let mut want: Vec<usize> = cliques_brute(5, &es).iter().map(Vec::len).collect();
    want.sort_unstable();
    assert_eq!(sizes, want);
    let w: Vec<u64> = (0..f.pofs.len() as u64).map(|i| i % 5 + 1).collect();
    check(&f, &w);
}

#[test]
fn refinement_tree_shape() {
    let f = clique_family(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
    let w: Vec<u64> = (1..=f.pofs.len() as u64).collect();
    let t = build_refinement_tree(&f, &w).unwrap();
    let mut root: Vec<usize> = t.universe(t.root()).to_vec();
    root.sort_unstable();
    assert_eq!(root, (0..f.pofs.len()).collect::<Vec<_>>());
    for a in 0..t.nodes.len() {
        let u = t.universe(a);
        let top = *u.iter().max_by_key(|&&i| (w[i], std::cmp::Reverse(i))).unwrap();
        assert_eq!(t.index_of(a), top);
        if let (Some(pl), Some(mi)) = (t.nodes[a].plus, t.nodes[a].minus) {
            assert_eq!(t.universe(pl).len() + t.universe(mi).len(), u.len());
        }
    }
}

fn random_graph() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (2usize..8).prop_flat_map(|k| {
        let pairs: Vec<(usize, usize)> = (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).collect();
        let len = pairs.len();
        (Just(k), proptest::collection::vec(any::<bool>(), len)).prop_map(move |(k, keep)| {
            let es = pairs.iter().zip(keep).filter(|(_, b)| *b).map(|(e, _)| *e).collect();
            (k, es)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_weights_match_bruteforce((k, es) in random_graph(), seed in any::<u64>()) {
        let f = clique_family(k, &es);
        let mut s = seed;
        let w: Vec<u64> = (0..f.pofs.len())
            .map(|_| {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                s >> 60 | 1
            })
            .collect();
        check(&f, &w);
    }

    #[test]
    fn simplex_ecc_matches_bfs((k, es) in random_graph()) {
        let g = simplex_graph(k, &es);
        prop_assert_eq!(simplex_eccentricities(&g).unwrap(), ecc_brute(&g));
    }
}
