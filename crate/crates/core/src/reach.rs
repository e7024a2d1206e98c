//! Reach centrality from the label tables, and a cubic oracle.

use std::collections::VecDeque;

use crate::error::Result;
use crate::graph::{distance_matrix, median_of, DistMatrix, Graph, Median};
use crate::labels::{milestones, Labels};
use crate::pof::{self, PofIndex};
use crate::theta::ThetaStructure;

/// RC(u) = max over pairs with `u` on a geodesic of the nearer endpoint distance.
pub fn reach_oracle(g: &Graph, cap: usize) -> Result<Vec<usize>> {
    let dm = distance_matrix(g, cap)?;
    let n = g.n();
    let mut rc = vec![0; n];
    for s in 0..n {
        for t in s + 1..n {
            let dst = dm.get(s, t);
            for (u, r) in rc.iter_mut().enumerate() {
                let (a, b) = (dm.get(s, u), dm.get(u, t));
                if a + b == dst {
                    *r = (*r).max(a.min(b));
                }
            }
        }
    }
    Ok(rc)
}

/// Exact RC in O(nm): one BFS per source, then the longest descent in its
/// shortest-path DAG.
pub fn reach_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut rc = vec![0; n];
    let mut dist = vec![usize::MAX; n];
    let mut down = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.fill(usize::MAX);
        order.clear();
        dist[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        for &u in order.iter().rev() {
            down[u] = g.neighbors(u).iter().filter(|&&w| dist[w] == dist[u] + 1).map(|&w| down[w] + 1).max().unwrap_or(0);
            rc[u] = rc[u].max(dist[u].min(down[u]));
        }
    }
    rc
}

/// RC restricted to the pairs `s,t` where `u` is the median `m` of `s,t,v0`
/// or lies in a hypercube between consecutive milestones of `(m,s)` or `(m,t)`.
/// These are the configurations [`compute_reach`] accounts for.
pub fn reach_scope_oracle(ts: &ThetaStructure, p: &PofIndex, dm: &DistMatrix) -> Result<Vec<usize>> {
    let n = p.n();
    let mut rc = vec![0; n];
    let mut hubs = Vec::new();
    for s in 0..n {
        for t in s + 1..n {
            let Median::Unique(m) = median_of(dm, s, t, p.v0) else {
                return Err(crate::error::Error::NotMedian(format!("no unique median for {s}, {t}, {}", p.v0)));
            };
            hubs.clear();
            for x in [s, t] {
                if x != m {
                    let ch = milestones(ts, p, m, x)?;
                    hubs.extend(ch.vertices.windows(2).map(|w| (w[0], w[1])));
                }
            }
            let dst = dm.get(s, t);
            for (u, r) in rc.iter_mut().enumerate() {
                let (a, b) = (dm.get(s, u), dm.get(u, t));
                if a + b != dst {
                    continue;
                }
                if u == m || hubs.iter().any(|&(x, y)| dm.get(x, u) + dm.get(u, y) == dm.get(x, y)) {
                    *r = (*r).max(a.min(b));
                }
            }
        }
    }
    Ok(rc)
}

/// χ labels. They never exceed RC and agree with [`reach_scope_oracle`];
/// pairs outside that scope, such as the corner of a 2×3 grid farthest
/// from the basepoint, are missed.
pub fn compute_reach(p: &PofIndex, l: &Labels) -> Vec<usize> {
    let phi = &l.phi.phi;
    let mut chi = vec![0; p.n()];
    let spread = |chi: &mut Vec<usize>, c: usize, other: usize| {
        let full = p.cube(c).mask;
        let mut t = full;
        loop {
            let k = t.count_ones() as usize;
            let x = p.interior(c, t);
            if phi[c] >= k {
                chi[x] = chi[x].max((phi[c] - k).min(other + k));
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & full;
        }
    };
    for u in 0..p.n() {
        for &c in &p.out_cubes(u)[1..] {
            let o = l.op.op[c];
            if phi[c] < phi[o] {
                chi[u] = chi[u].max(phi[c]);
            }
            spread(&mut chi, c, phi[o]);
        }
    }
    pof::for_each_parallel_naive(p, |inn, out| {
        let u = p.cube(out).basis;
        chi[u] = chi[u].max(phi[out].min(l.psi[inn]));
        spread(&mut chi, out, l.psi[inn]);
    });
    chi
}
