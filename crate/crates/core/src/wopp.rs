//! Weighted opposites on simplex graphs: ordered partition refinement and the
//! constraint-pair recursion.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pof::{build_pof_index, PofIndex};
use crate::theta::{compute_theta, orient, ThetaStructure};

/// A family of POFs closed under subsets, with the orthogonality relation of
/// its classes. Every clique of the relation must be a member.
#[derive(Clone, Debug)]
pub struct Family {
    pub pofs: Vec<Vec<usize>>,
    pub orth: Vec<Vec<usize>>,
}

impl Family {
    /// The in-POFs of every vertex; meaningful when the basepoint is central.
    pub fn from_index(p: &PofIndex) -> Family {
        Family {
            pofs: (0..p.n()).map(|v| p.pof(v).to_vec()).collect(),
            orth: (0..p.q).map(|c| p.orth_list(c).to_vec()).collect(),
        }
    }

    /// Outgoing POFs at `u`, in the order of [`PofIndex::out_cubes`], with
    /// classes renumbered by their position among the outgoing classes.
    pub fn star(p: &PofIndex, u: usize) -> Family {
        let classes: Vec<usize> = p.out_edges(u).iter().map(|e| e.0).collect();
        let local = |c: &usize| classes.binary_search(c).unwrap();
        let pofs: Vec<Vec<usize>> =
            p.out_cubes(u).iter().map(|&id| p.sig(id).iter().map(local).collect()).collect();
        let mut orth = vec![Vec::new(); classes.len()];
        for x in pofs.iter().filter(|x| x.len() == 2) {
            orth[x[0]].push(x[1]);
            orth[x[1]].push(x[0]);
        }
        for l in &mut orth {
            l.sort_unstable();
        }
        Family { pofs, orth }
    }

    pub fn dim(&self) -> usize {
        self.pofs.iter().map(Vec::len).max().unwrap_or(0)
    }

    fn orthogonal(&self, a: usize, b: usize) -> bool {
        self.orth[a].binary_search(&b).is_ok()
    }
}

#[derive(Clone, Debug)]
pub struct TreeNode {
    pub lo: usize,
    pub hi: usize,
    /// Max-weight member of the universe.
    pub top: usize,
    pub layer: usize,
    pub split: Option<usize>,
    pub plus: Option<usize>,
    pub minus: Option<usize>,
    /// Leaf cut off at the layer limit.
    pub truncated: bool,
    pub block_root: bool,
    /// Classes contained in every member of the universe.
    pub rplus: Vec<usize>,
}

/// Refinement tree over the POFs sorted by weight.
#[derive(Clone, Debug)]
pub struct RefinementTree {
    /// POF indices; each node owns the slice `perm[lo..hi]`, which later
    /// refinement may reorder.
    pub perm: Vec<usize>,
    /// Position of each POF in the weight order.
    pub rank: Vec<usize>,
    pub nodes: Vec<TreeNode>,
    pub d: usize,
}

impl RefinementTree {
    pub fn root(&self) -> usize {
        0
    }

    /// Max-weight member of a node's universe.
    pub fn index_of(&self, a: usize) -> usize {
        self.nodes[a].top
    }

    pub fn universe(&self, a: usize) -> &[usize] {
        &self.perm[self.nodes[a].lo..self.nodes[a].hi]
    }

    pub fn depth(&self) -> usize {
        let mut best = 0;
        let mut stack = vec![(0usize, 0usize)];
        while let Some((a, dep)) = stack.pop() {
            best = best.max(dep);
            for c in [self.nodes[a].plus, self.nodes[a].minus].into_iter().flatten() {
                stack.push((c, dep + 1));
            }
        }
        best
    }
}

pub fn build_refinement_tree(f: &Family, w: &[u64]) -> Result<RefinementTree> {
    if let Some(i) = w.iter().position(|&x| x == 0) {
        return Err(Error::BadWeight(i));
    }
    if w.len() != f.pofs.len() {
        return Err(Error::Param(format!("{} weights for {} POFs", w.len(), f.pofs.len())));
    }
    let mut perm: Vec<usize> = (0..f.pofs.len()).collect();
    perm.sort_by(|&a, &b| w[b].cmp(&w[a]).then(a.cmp(&b)));
    let mut rank = vec![0; perm.len()];
    for (r, &x) in perm.iter().enumerate() {
        rank[x] = r;
    }
    let mut t = RefinementTree { perm, rank, nodes: Vec::new(), d: f.dim() };
    let mut buf = Vec::new();
    // (node id, pending classes of the block, next pending position)
    let mut work: Vec<(usize, std::rc::Rc<Vec<usize>>, usize)> = Vec::new();
    let root = block_root(f, &mut t, 0, f.pofs.len(), 0, Vec::new());
    if let Some(p) = root.1 {
        work.push((root.0, p, 0));
    }
    while let Some((a, pending, j)) = work.pop() {
        let e = pending[j];
        let (lo, hi, layer) = (t.nodes[a].lo, t.nodes[a].hi, t.nodes[a].layer);
        buf.clear();
        let slice = &mut t.perm[lo..hi];
        let mut k = 0;
        for i in 0..slice.len() {
            if f.pofs[slice[i]].binary_search(&e).is_ok() {
                slice[k] = slice[i];
                k += 1;
            } else {
                buf.push(slice[i]);
            }
        }
        slice[k..].copy_from_slice(&buf);
        let mid = lo + k;
        t.nodes[a].split = Some(e);
        let rplus = t.nodes[a].rplus.clone();
        for (plus, range) in [(true, (lo, mid)), (false, (mid, hi))] {
            if range.0 == range.1 {
                continue;
            }
            let mut rp = rplus.clone();
            if plus {
                rp.push(e);
                rp.sort_unstable();
            }
            let child = if j + 1 < pending.len() && range.1 - range.0 > 1 {
                let id = push_node(&mut t, range.0, range.1, layer, false, rp);
                work.push((id, pending.clone(), j + 1));
                id
            } else if j + 1 < pending.len() {
                push_node(&mut t, range.0, range.1, layer, false, rp)
            } else {
                let (id, p) = block_root(f, &mut t, range.0, range.1, layer + 1, rp);
                if let Some(p) = p {
                    work.push((id, p, 0));
                }
                id
            };
            if plus {
                t.nodes[a].plus = Some(child);
            } else {
                t.nodes[a].minus = Some(child);
            }
        }
    }
    Ok(t)
}

fn push_node(t: &mut RefinementTree, lo: usize, hi: usize, layer: usize, block_root: bool, rplus: Vec<usize>) -> usize {
    let top = t.perm[lo];
    t.nodes.push(TreeNode {
        lo,
        hi,
        top,
        layer,
        split: None,
        plus: None,
        minus: None,
        truncated: false,
        block_root,
        rplus,
    });
    t.nodes.len() - 1
}

/// Creates a block root; returns its pending classes when it must be split.
fn block_root(
    f: &Family,
    t: &mut RefinementTree,
    lo: usize,
    hi: usize,
    layer: usize,
    rplus: Vec<usize>,
) -> (usize, Option<std::rc::Rc<Vec<usize>>>) {
    let la = &f.pofs[t.perm[lo]];
    let pending: Vec<usize> = la.iter().copied().filter(|c| rplus.binary_search(c).is_err()).collect();
    let id = push_node(t, lo, hi, layer, true, rplus);
    if hi - lo == 1 || pending.is_empty() {
        return (id, None);
    }
    if layer >= t.d {
        t.nodes[id].truncated = true;
        return (id, None);
    }
    (id, Some(std::rc::Rc::new(pending)))
}

/// Opposites for every POF of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WoppResult {
    /// Index of the opposite POF.
    pub op: Vec<usize>,
    pub weight: Vec<u64>,
    /// Number of memoized constraint pairs.
    pub memo_size: usize,
}

struct Solver<'a> {
    f: &'a Family,
    t: &'a RefinementTree,
    memo: HashMap<(usize, Vec<usize>), Option<usize>>,
}

impl Solver<'_> {
    fn best(&self, a: Option<usize>, b: Option<usize>) -> Option<usize> {
        match (a, b) {
            (Some(x), Some(y)) => Some(if self.t.rank[x] <= self.t.rank[y] { x } else { y }),
            (x, None) => x,
            (None, y) => y,
        }
    }

    fn h_opt(&mut self, a: Option<usize>, x: Vec<usize>) -> Option<usize> {
        a.and_then(|a| self.h(a, x))
    }

    fn h(&mut self, a: usize, x: Vec<usize>) -> Option<usize> {
        let la = self.t.index_of(a);
        if disjoint(&x, &self.f.pofs[la]) {
            return Some(la);
        }
        let key = (a, x);
        if let Some(&r) = self.memo.get(&key) {
            return r;
        }
        let (a, x) = key;
        let node = &self.t.nodes[a];
        let r = match node.split {
            None => {
                assert!(!node.truncated, "constraint pair reached a node below the layer limit");
                assert!(node.hi - node.lo == 1, "leaf index meets a constraint pair");
                None
            }
            Some(e) => {
                let (plus, minus) = (node.plus, node.minus);
                if let Ok(i) = x.binary_search(&e) {
                    let mut rest = x.clone();
                    rest.remove(i);
                    self.h_opt(minus, rest)
                } else if x.iter().all(|&c| self.f.orthogonal(c, e)) {
                    let p = self.h_opt(plus, x.clone());
                    let m = self.h_opt(minus, x.clone());
                    self.best(p, m)
                } else {
                    let m = self.h_opt(minus, x.clone());
                    let kept: Vec<usize> = x.iter().copied().filter(|&c| self.f.orthogonal(c, e)).collect();
                    let p = self.h_opt(plus, kept);
                    self.best(m, p)
                }
            }
        };
        self.memo.insert((a, x), r);
        r
    }
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// Opposite of every POF under positive weights `w`.
pub fn solve_wopp(f: &Family, w: &[u64]) -> Result<WoppResult> {
    let t = build_refinement_tree(f, w)?;
    Ok(solve_on_tree(f, &t, w))
}

pub fn solve_on_tree(f: &Family, t: &RefinementTree, w: &[u64]) -> WoppResult {
    let mut s = Solver { f, t, memo: HashMap::new() };
    let mut op = Vec::with_capacity(f.pofs.len());
    for x in &f.pofs {
        let y = s.h(t.root(), x.clone()).expect("the empty POF is always available");
        op.push(y);
    }
    let weight = op.iter().map(|&y| w[y]).collect();
    WoppResult { op, weight, memo_size: s.memo.len() }
}

/// Best disjoint weight per POF by scanning all pairs.
pub fn wopp_bruteforce(f: &Family, w: &[u64]) -> Vec<u64> {
    f.pofs
        .iter()
        .map(|x| {
            f.pofs
                .iter()
                .zip(w)
                .filter(|(y, _)| disjoint(x, y))
                .map(|(_, &wy)| wy)
                .max()
                .unwrap_or(0)
        })
        .collect()
}

/// Smallest vertex incident to every Θ-class, if any.
pub fn simplex_central_vertex(g: &Graph, ts: &ThetaStructure) -> Option<usize> {
    let mut seen = vec![usize::MAX; ts.q];
    (0..g.n()).find(|&v| {
        let mut count = 0;
        for &e in g.incident_edges(v) {
            let c = ts.class_of_edge[e];
            if seen[c] != v {
                seen[c] = v;
                count += 1;
            }
        }
        count == ts.q
    })
}

/// Eccentricities of a simplex graph via cardinality-weighted opposites.
pub fn simplex_eccentricities(g: &Graph) -> Result<Vec<usize>> {
    let ts = compute_theta(g)?;
    let c = simplex_central_vertex(g, &ts).ok_or(Error::NotSimplex)?;
    let o = orient(g, &ts, c)?;
    let p = build_pof_index(&ts, &o)?;
    let f = Family::from_index(&p);
    let w: Vec<u64> = f.pofs.iter().map(|x| x.len() as u64 + 1).collect();
    let r = solve_wopp(&f, &w)?;
    Ok((0..g.n()).map(|u| f.pofs[u].len() + f.pofs[r.op[u]].len()).collect())
}
