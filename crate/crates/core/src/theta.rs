//! Θ-classes, halfspaces, boundaries, the basepoint orientation and signatures.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{bfs, distance_matrix, Graph};

/// Above this many `q * m` steps the per-class component pass is skipped and
/// side queries fall back to walking the BFS tree.
pub const DEFAULT_DENSE_LIMIT: usize = 1 << 25;

#[derive(Clone, Debug)]
pub struct ThetaOptions {
    pub v0: usize,
    pub dense_limit: usize,
}

impl Default for ThetaOptions {
    fn default() -> Self {
        ThetaOptions { v0: 0, dense_limit: DEFAULT_DENSE_LIMIT }
    }
}

/// Edge partition into Θ-classes plus the halfspace data of every class.
#[derive(Clone, Debug)]
pub struct ThetaStructure {
    pub q: usize,
    pub v0: usize,
    pub class_of_edge: Vec<usize>,
    pub class_edges: Vec<Vec<usize>>,
    /// Sorted list of orthogonal classes per class.
    pub orth: Vec<Vec<usize>>,
    level: Vec<usize>,
    parent: Vec<usize>,
    parent_class: Vec<usize>,
    /// Per class, one bit per vertex set when the vertex lies in H″.
    sides: Option<Vec<Vec<u64>>>,
    /// Per class, matched boundary lists: `near[i]` is joined to `far[i]`.
    boundary: Vec<(Vec<usize>, Vec<usize>)>,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

pub fn compute_theta(g: &Graph) -> Result<ThetaStructure> {
    compute_theta_with(g, &ThetaOptions::default())
}

/// Θ-classes as the transitive closure of square-opposition.
pub fn compute_theta_with(g: &Graph, opts: &ThetaOptions) -> Result<ThetaStructure> {
    let n = g.n();
    let m = g.m();
    let v0 = opts.v0;
    if v0 >= n {
        return Err(Error::Param(format!("basepoint {v0} out of range")));
    }
    let mut dsu = Dsu((0..m).collect());
    let mut stamp = vec![usize::MAX; n];
    let mut orth_edges = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        // scan from the cheaper endpoint
        let (u, v) = if g.degree(a) <= g.degree(b) { (a, b) } else { (b, a) };
        for &y in g.neighbors(v) {
            stamp[y] = e;
        }
        for (i, &x) in g.neighbors(u).iter().enumerate() {
            if x == v {
                continue;
            }
            let ux = g.incident_edges(u)[i];
            for (j, &y) in g.neighbors(x).iter().enumerate() {
                if y != u && stamp[y] == e {
                    dsu.union(e, g.incident_edges(x)[j]);
                    orth_edges.push((e, ux));
                }
            }
        }
    }

    let mut class_of_edge = vec![usize::MAX; m];
    let mut root_class = vec![usize::MAX; m];
    let mut class_edges: Vec<Vec<usize>> = Vec::new();
    for e in 0..m {
        let r = dsu.find(e);
        if root_class[r] == usize::MAX {
            root_class[r] = class_edges.len();
            class_edges.push(Vec::new());
        }
        class_of_edge[e] = root_class[r];
        class_edges[root_class[r]].push(e);
    }
    let q = class_edges.len();

    let mut seen = HashSet::new();
    let mut orth = vec![Vec::new(); q];
    for (e, f) in orth_edges {
        let (a, b) = (class_of_edge[e], class_of_edge[f]);
        if a != b && seen.insert((a.min(b), a.max(b))) {
            orth[a].push(b);
            orth[b].push(a);
        }
    }
    for list in &mut orth {
        list.sort_unstable();
    }

    // matching check
    let mut last = vec![usize::MAX; n];
    for (c, es) in class_edges.iter().enumerate() {
        for &e in es {
            let (a, b) = g.edge(e);
            for x in [a, b] {
                if last[x] == c {
                    return Err(Error::NotMatching(c));
                }
                last[x] = c;
            }
        }
    }

    let row = bfs(g, v0);
    let level = row.dist;
    let parent = row.parent;
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if level[a] == level[b] {
            return Err(Error::NotBipartite(e));
        }
    }
    let mut parent_class = vec![usize::MAX; n];
    for v in 0..n {
        if v != v0 {
            parent_class[v] = class_of_edge[g.edge_id(v, parent[v]).unwrap()];
        }
    }

    let mut boundary = Vec::with_capacity(q);
    for es in &class_edges {
        let mut near = Vec::with_capacity(es.len());
        let mut far = Vec::with_capacity(es.len());
        for &e in es {
            let (a, b) = g.edge(e);
            if level[a] < level[b] {
                near.push(a);
                far.push(b);
            } else {
                near.push(b);
                far.push(a);
            }
        }
        boundary.push((near, far));
    }

    let sides = if q.saturating_mul(m.max(1)) <= opts.dense_limit {
        Some(component_sides(g, v0, &class_of_edge, &class_edges)?)
    } else {
        None
    };

    Ok(ThetaStructure {
        q,
        v0,
        class_of_edge,
        class_edges,
        orth,
        level,
        parent,
        parent_class,
        sides,
        boundary,
    })
}

/// Labels the two components of `G - E_c` for every class.
fn component_sides(
    g: &Graph,
    v0: usize,
    class_of_edge: &[usize],
    class_edges: &[Vec<usize>],
) -> Result<Vec<Vec<u64>>> {
    let n = g.n();
    let words = n.div_ceil(64);
    let mut out = Vec::with_capacity(class_edges.len());
    let mut comp = vec![0u8; n];
    let mut queue = VecDeque::new();
    for (c, es) in class_edges.iter().enumerate() {
        comp.iter_mut().for_each(|x| *x = 0);
        let mut flood = |start: usize, tag: u8, comp: &mut Vec<u8>| {
            let mut count = 0;
            comp[start] = tag;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                count += 1;
                for (&w, &e) in g.neighbors(u).iter().zip(g.incident_edges(u)) {
                    if comp[w] == 0 && class_of_edge[e] != c {
                        comp[w] = tag;
                        queue.push_back(w);
                    }
                }
            }
            count
        };
        let near = flood(v0, 1, &mut comp);
        let (a, b) = g.edge(es[0]);
        let start = if comp[a] == 1 { b } else { a };
        if comp[start] != 0 {
            return Err(Error::NotTwoComponents(c));
        }
        let far = flood(start, 2, &mut comp);
        if near + far != n {
            return Err(Error::NotTwoComponents(c));
        }
        for &e in es {
            let (a, b) = g.edge(e);
            if comp[a] == comp[b] {
                return Err(Error::NotTwoComponents(c));
            }
        }
        let mut bits = vec![0u64; words];
        for v in 0..n {
            if comp[v] == 2 {
                bits[v / 64] |= 1 << (v % 64);
            }
        }
        out.push(bits);
    }
    Ok(out)
}

impl ThetaStructure {
    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    pub fn orthogonal(&self, a: usize, b: usize) -> bool {
        self.orth[a].binary_search(&b).is_ok()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.class_edges.iter().map(Vec::len).collect()
    }

    pub fn has_dense_sides(&self) -> bool {
        self.sides.is_some()
    }

    /// Sorted classes crossed by any geodesic from the basepoint to `v`.
    pub fn signature_from_root(&self, mut v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.level[v]);
        while v != self.v0 {
            out.push(self.parent_class[v]);
            v = self.parent[v];
        }
        out.sort_unstable();
        out
    }

    /// `true` when `v` lies in the halfspace of class `c` avoiding the basepoint.
    pub fn far_side(&self, c: usize, v: usize) -> bool {
        match &self.sides {
            Some(s) => s[c][v / 64] >> (v % 64) & 1 == 1,
            None => self.signature_from_root(v).binary_search(&c).is_ok(),
        }
    }

    /// σ(u,v) as a sorted class list.
    pub fn signature(&self, u: usize, v: usize) -> Vec<usize> {
        let a = self.signature_from_root(u);
        let b = self.signature_from_root(v);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i] < b[j]) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j] < a[i] {
                out.push(b[j]);
                j += 1;
            } else {
                i += 1;
                j += 1;
            }
        }
        out
    }

    /// Matched boundaries (∂H′, ∂H″) of class `c`.
    pub fn boundary(&self, c: usize) -> (&[usize], &[usize]) {
        (&self.boundary[c].0, &self.boundary[c].1)
    }

    /// Vertex lists (H′, H″) of class `c`.
    pub fn halfspaces(&self, c: usize) -> (Vec<usize>, Vec<usize>) {
        (0..self.level.len()).partition(|&v| !self.far_side(c, v))
    }
}

/// Canonical relabelling of a partition: classes numbered by first appearance.
pub fn canonical_partition(labels: &[usize]) -> Vec<usize> {
    let mut map = std::collections::HashMap::new();
    labels
        .iter()
        .map(|&l| {
            let next = map.len();
            *map.entry(l).or_insert(next)
        })
        .collect()
}

/// Edge partition from the Djoković relation, by an all-pairs scan.
pub fn theta_oracle(g: &Graph, cap: usize) -> Result<Vec<usize>> {
    let dm = distance_matrix(g, cap)?;
    let m = g.m();
    let mut dsu = Dsu((0..m).collect());
    for e in 0..m {
        let (u, v) = g.edge(e);
        for f in e + 1..m {
            let (x, y) = g.edge(f);
            if dm.get(u, x) + dm.get(v, y) != dm.get(u, y) + dm.get(v, x) {
                dsu.union(e, f);
            }
        }
    }
    let roots: Vec<usize> = (0..m).map(|e| dsu.find(e)).collect();
    Ok(canonical_partition(&roots))
}

/// Edges directed away from a basepoint.
#[derive(Clone, Debug)]
pub struct Orientation {
    pub v0: usize,
    pub level: Vec<usize>,
    /// `(class, tail)` pairs of edges entering each vertex, sorted by class.
    pub in_edges: Vec<Vec<(usize, usize)>>,
    /// `(class, head)` pairs of edges leaving each vertex, sorted by class.
    pub out_edges: Vec<Vec<(usize, usize)>>,
    /// Vertices by nondecreasing level.
    pub order: Vec<usize>,
}

pub fn orient(g: &Graph, ts: &ThetaStructure, v0: usize) -> Result<Orientation> {
    let n = g.n();
    if v0 >= n {
        return Err(Error::Param(format!("basepoint {v0} out of range")));
    }
    let level = if v0 == ts.v0 { ts.level.clone() } else { bfs(g, v0).dist };
    let mut in_edges = vec![Vec::new(); n];
    let mut out_edges = vec![Vec::new(); n];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let c = ts.class_of_edge[e];
        let (t, h) = match level[a].cmp(&level[b]) {
            std::cmp::Ordering::Less => (a, b),
            std::cmp::Ordering::Greater => (b, a),
            std::cmp::Ordering::Equal => return Err(Error::NotBipartite(e)),
        };
        out_edges[t].push((c, h));
        in_edges[h].push((c, t));
    }
    for l in in_edges.iter_mut().chain(out_edges.iter_mut()) {
        l.sort_unstable();
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (level[v], v));
    Ok(Orientation { v0, level, in_edges, out_edges, order })
}

impl Orientation {
    /// E⁻(v), sorted.
    pub fn in_classes(&self, v: usize) -> Vec<usize> {
        self.in_edges[v].iter().map(|p| p.0).collect()
    }

    pub fn out_classes(&self, v: usize) -> Vec<usize> {
        self.out_edges[v].iter().map(|p| p.0).collect()
    }

    /// Head of the edge of class `c` leaving `v`.
    pub fn up(&self, v: usize, c: usize) -> Option<usize> {
        let l = &self.out_edges[v];
        l.binary_search_by_key(&c, |p| p.0).ok().map(|i| l[i].1)
    }

    /// Tail of the edge of class `c` entering `v`.
    pub fn down(&self, v: usize, c: usize) -> Option<usize> {
        let l = &self.in_edges[v];
        l.binary_search_by_key(&c, |p| p.0).ok().map(|i| l[i].1)
    }

    pub fn dimension(&self) -> usize {
        dimension(self)
    }
}

/// Largest in-degree under the orientation.
pub fn dimension(o: &Orientation) -> usize {
    o.in_edges.iter().map(Vec::len).max().unwrap_or(0)
}
