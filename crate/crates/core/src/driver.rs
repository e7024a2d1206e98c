//! Halfspace splitting along large Θ-classes, leaf solves, and gate merges.

use std::collections::VecDeque;

use crate::error::Result;
use crate::graph::Graph;
use crate::labels::{compute_labels, ecc_from_labels, Backend};
use crate::pof::build_pof_index;
use crate::theta::{canonical_partition, compute_theta_with, orient, ThetaOptions, ThetaStructure};

/// Base of the leaf solver's exponential term for each backend.
pub fn default_c(backend: Backend) -> f64 {
    match backend {
        Backend::Naive => 4.0,
        Backend::Mop | Backend::Minpar => 3.5394,
    }
}

/// D = n^{1/(log₂ c + 1)}, clamped to [2, n].
pub fn threshold_for(n: usize, c: f64) -> usize {
    let e = 1.0 / (c.log2() + 1.0);
    let d = (n as f64).powf(e).round() as usize;
    d.max(2).min(n.max(2))
}

#[derive(Clone, Debug)]
pub struct SplitNode {
    /// Sorted global vertex ids.
    pub vertices: Vec<usize>,
    pub split_class: Option<usize>,
    /// (side containing the basepoint, other side).
    pub children: Option<(usize, usize)>,
    /// Class edges inside this node as (near endpoint, far endpoint).
    pub crossing: Vec<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct SplitTree {
    pub nodes: Vec<SplitNode>,
    pub threshold: usize,
    /// Classes of size at least the threshold, in processing order.
    pub split_classes: Vec<usize>,
}

impl SplitTree {
    pub fn root(&self) -> usize {
        0
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| self.nodes[i].children.is_none()).collect()
    }
}

/// Vertices on the basepoint side of class `c`, by BFS avoiding its edges.
fn near_side(g: &Graph, ts: &ThetaStructure, c: usize) -> Vec<bool> {
    let mut near = vec![false; g.n()];
    let mut queue = VecDeque::from([ts.v0]);
    near[ts.v0] = true;
    while let Some(u) = queue.pop_front() {
        for (&w, &e) in g.neighbors(u).iter().zip(g.incident_edges(u)) {
            if !near[w] && ts.class_of_edge[e] != c {
                near[w] = true;
                queue.push_back(w);
            }
        }
    }
    near
}

pub fn build_split_tree(g: &Graph, ts: &ThetaStructure, threshold: usize) -> SplitTree {
    let sizes = ts.class_sizes();
    let mut split_classes: Vec<usize> = (0..ts.q).filter(|&c| sizes[c] >= threshold).collect();
    split_classes.sort_by_key(|&c| (std::cmp::Reverse(sizes[c]), c));
    let mut nodes =
        vec![SplitNode { vertices: (0..g.n()).collect(), split_class: None, children: None, crossing: Vec::new() }];
    let mut leaf_of = vec![0usize; g.n()];
    let mut touched = Vec::new();
    for &c in &split_classes {
        let near = near_side(g, ts, c);
        touched.clear();
        for &e in &ts.class_edges[c] {
            let (a, b) = g.edge(e);
            if leaf_of[a] != leaf_of[b] {
                continue;
            }
            let leaf = leaf_of[a];
            if nodes[leaf].crossing.is_empty() {
                touched.push(leaf);
            }
            let pair = if near[a] { (a, b) } else { (b, a) };
            nodes[leaf].crossing.push(pair);
        }
        for &leaf in &touched {
            let (a, b): (Vec<usize>, Vec<usize>) = nodes[leaf].vertices.iter().partition(|&&v| near[v]);
            let (ia, ib) = (nodes.len(), nodes.len() + 1);
            for &v in &a {
                leaf_of[v] = ia;
            }
            for &v in &b {
                leaf_of[v] = ib;
            }
            for vs in [a, b] {
                nodes.push(SplitNode { vertices: vs, split_class: None, children: None, crossing: Vec::new() });
            }
            nodes[leaf].split_class = Some(c);
            nodes[leaf].children = Some((ia, ib));
        }
    }
    SplitTree { nodes, threshold, split_classes }
}

/// Gate of every vertex of one side in the other side, with its distance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GateMap {
    /// Aligned with the side's vertex list.
    pub gate: Vec<usize>,
    pub dist: Vec<usize>,
}

/// Multi-source BFS inside `side` from the endpoints of `crossing`
/// (pairs `(inside, across)`).
pub fn gate_bfs(g: &Graph, side: &[usize], crossing: &[(usize, usize)]) -> GateMap {
    let mut pos = vec![usize::MAX; g.n()];
    gate_bfs_with(g, side, crossing, &mut pos)
}

fn gate_bfs_with(g: &Graph, side: &[usize], crossing: &[(usize, usize)], pos: &mut [usize]) -> GateMap {
    for (i, &v) in side.iter().enumerate() {
        pos[v] = i;
    }
    let mut gate = vec![usize::MAX; side.len()];
    let mut dist = vec![usize::MAX; side.len()];
    let mut sources = crossing.to_vec();
    sources.sort_unstable();
    let mut queue = VecDeque::new();
    for (a, b) in sources {
        let i = pos[a];
        if dist[i] == usize::MAX {
            dist[i] = 1;
            gate[i] = b;
            queue.push_back(a);
        }
    }
    while let Some(u) = queue.pop_front() {
        let iu = pos[u];
        for &w in g.neighbors(u) {
            let iw = pos[w];
            if iw != usize::MAX && side.get(iw) == Some(&w) && dist[iw] == usize::MAX {
                dist[iw] = dist[iu] + 1;
                gate[iw] = gate[iu];
                queue.push_back(w);
            }
        }
    }
    for &v in side {
        pos[v] = usize::MAX;
    }
    GateMap { gate, dist }
}

/// Parent eccentricities of the vertices of `side` from both children.
pub fn merge_ecc(side: &[usize], ecc_side: &[usize], gates: &GateMap, other: &[usize], ecc_other: &[usize]) -> Vec<usize> {
    (0..side.len())
        .map(|i| {
            let j = other.binary_search(&gates.gate[i]).expect("gate lies on the other side");
            ecc_side[i].max(gates.dist[i] + ecc_other[j])
        })
        .collect()
}

/// Output of the splitting driver.
#[derive(Clone, Debug)]
pub struct SplitRun {
    pub ecc: Vec<usize>,
    pub tree: SplitTree,
    /// Dimension of each leaf, aligned with [`SplitTree::leaves`].
    pub leaf_dims: Vec<usize>,
}

fn solve_leaf(g: &Graph, vertices: &[usize], backend: Backend) -> Result<(Vec<usize>, usize)> {
    let (sub, _) = g.induced(vertices)?;
    let opts = ThetaOptions { v0: 0, dense_limit: 0 };
    let ts = compute_theta_with(&sub, &opts)?;
    let o = orient(&sub, &ts, 0)?;
    let p = build_pof_index(&ts, &o)?;
    let l = compute_labels(&p, backend)?;
    Ok((ecc_from_labels(&p, &l.phi, &l.psi), p.d()))
}

/// All eccentricities through the split tree with threshold from `c`.
pub fn ecc_subquadratic(g: &Graph, c: f64, backend: Backend) -> Result<SplitRun> {
    let ts = compute_theta_with(g, &ThetaOptions { v0: 0, dense_limit: 0 })?;
    let threshold = threshold_for(g.n(), c);
    let tree = build_split_tree(g, &ts, threshold);
    let mut tables: Vec<Option<Vec<usize>>> = vec![None; tree.nodes.len()];
    let mut leaf_dims = Vec::new();
    let mut pos = vec![usize::MAX; g.n()];
    for i in (0..tree.nodes.len()).rev() {
        let node = &tree.nodes[i];
        let table = match node.children {
            None => {
                let (ecc, d) = solve_leaf(g, &node.vertices, backend)?;
                leaf_dims.push(d);
                ecc
            }
            Some((a, b)) => {
                let (na, nb) = (&tree.nodes[a], &tree.nodes[b]);
                let ea = tables[a].take().unwrap();
                let eb = tables[b].take().unwrap();
                let ga = gate_bfs_with(g, &na.vertices, &node.crossing, &mut pos);
                let back: Vec<(usize, usize)> = node.crossing.iter().map(|&(x, y)| (y, x)).collect();
                let gb = gate_bfs_with(g, &nb.vertices, &back, &mut pos);
                let ma = merge_ecc(&na.vertices, &ea, &ga, &nb.vertices, &eb);
                let mb = merge_ecc(&nb.vertices, &eb, &gb, &na.vertices, &ea);
                let mut merged = vec![0; node.vertices.len()];
                let (mut ia, mut ib) = (0, 0);
                for (k, &v) in node.vertices.iter().enumerate() {
                    if ia < na.vertices.len() && na.vertices[ia] == v {
                        merged[k] = ma[ia];
                        ia += 1;
                    } else {
                        merged[k] = mb[ib];
                        ib += 1;
                    }
                }
                merged
            }
        };
        tables[i] = Some(table);
    }
    leaf_dims.reverse();
    Ok(SplitRun { ecc: tables[0].take().unwrap(), tree, leaf_dims })
}

/// For every leaf, compares its own Θ-classes with the restriction of the
/// parent classes to its edges.
pub fn leaf_classes_match(g: &Graph, ts: &ThetaStructure, tree: &SplitTree) -> Result<bool> {
    for leaf in tree.leaves() {
        let vs = &tree.nodes[leaf].vertices;
        let (sub, map) = g.induced(vs)?;
        let lts = compute_theta_with(&sub, &ThetaOptions { v0: 0, dense_limit: 0 })?;
        let global: Vec<usize> = sub
            .edges()
            .iter()
            .map(|&(a, b)| ts.class_of_edge[g.edge_id(map[a], map[b]).unwrap()])
            .collect();
        if canonical_partition(&global) != canonical_partition(&lts.class_of_edge) {
            return Ok(false);
        }
    }
    Ok(true)
}
