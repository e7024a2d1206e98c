//! Immutable undirected graphs, BFS, and the brute-force distance oracles.
//!
//! Vertex ids are dense `0..n`. Edge ids follow input order. Distance
//! matrices are only built on the oracle paths and are guarded by a size cap.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

/// Default vertex cap for anything that materializes a distance matrix.
pub const DEFAULT_CAP: usize = 4096;

/// Simple connected undirected graph with sorted adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    adj_edge: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph on `0..n`, rejecting self-loops, duplicates and
    /// disconnected inputs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let g = Self::build(n, edges)?;
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut norm = Vec::with_capacity(edges.len());
        for (id, &(a, b)) in edges.iter().enumerate() {
            if a >= n || b >= n {
                return Err(Error::Param(format!("edge {a}-{b} out of range for n = {n}")));
            }
            if a == b {
                return Err(Error::SelfLoop(a as u64));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            norm.push((u, v));
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        let mut out_adj = Vec::with_capacity(n);
        let mut out_edge = Vec::with_capacity(n);
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(Error::DuplicateEdge(u as u64, w[0].0 as u64));
            }
            out_adj.push(list.iter().map(|p| p.0).collect());
            out_edge.push(list.iter().map(|p| p.1).collect());
        }
        Ok(Graph { adj: out_adj, adj_edge: out_edge, edges: norm })
    }

    fn is_connected(&self) -> bool {
        bfs(self, 0).dist.iter().all(|&d| d != usize::MAX)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edge ids parallel to [`Graph::neighbors`].
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.adj_edge[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Endpoints `(u, v)` with `u < v`.
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.adj[u].binary_search(&v).ok().map(|i| self.adj_edge[u][i])
    }

    /// Induced subgraph on `vertices`, relabelled in the given order.
    /// Returns the subgraph and the local-to-global map.
    pub fn induced(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut local = HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            local.insert(v, i);
        }
        let mut es = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if let Some(&j) = local.get(&w) {
                    if i < j {
                        es.push((i, j));
                    }
                }
            }
        }
        let g = Graph::from_edges(vertices.len(), &es)?;
        Ok((g, vertices.to_vec()))
    }

    /// Serializes to the edge-list format.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("# n={} m={}\n", self.n(), self.m());
        if self.m() == 0 {
            s.push_str("# single vertex 0\n");
        }
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

/// A parsed edge list together with the original vertex labels.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub graph: Graph,
    /// `labels[i]` is the input id of vertex `i`.
    pub labels: Vec<u64>,
}

/// Parses the edge-list format, remapping ids in first-appearance order.
pub fn parse_edge_list(text: &str) -> Result<Loaded> {
    let mut ids: HashMap<u64, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    let mut intern = |x: u64, labels: &mut Vec<u64>| {
        *ids.entry(x).or_insert_with(|| {
            labels.push(x);
            labels.len() - 1
        })
    };
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(Error::Parse { line: i + 1, msg: format!("expected two ids, got {line:?}") });
        }
        let mut pair = [0u64; 2];
        for (slot, p) in pair.iter_mut().zip(&parts) {
            *slot = p
                .parse()
                .map_err(|_| Error::Parse { line: i + 1, msg: format!("bad vertex id {p:?}") })?;
        }
        if pair[0] == pair[1] {
            return Err(Error::SelfLoop(pair[0]));
        }
        let a = intern(pair[0], &mut labels);
        let b = intern(pair[1], &mut labels);
        edges.push((a, b));
    }
    if labels.is_empty() {
        // An edge list without edges describes the single-vertex graph.
        labels.push(0);
    }
    let graph = Graph::build(labels.len(), &edges).map_err(|e| match e {
        Error::DuplicateEdge(a, b) => Error::DuplicateEdge(labels[a as usize], labels[b as usize]),
        other => other,
    })?;
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(Loaded { graph, labels })
}

/// Parses an edge list and drops the label map.
pub fn load_graph(text: &str) -> Result<Graph> {
    parse_edge_list(text).map(|l| l.graph)
}

/// One BFS row.
#[derive(Clone, Debug)]
pub struct DistRow {
    pub source: usize,
    /// Hop distances; `usize::MAX` when unreachable.
    pub dist: Vec<usize>,
    /// Smallest-id neighbor one level closer to the source; `parent[source] == source`.
    pub parent: Vec<usize>,
}

/// Breadth-first search from `s`.
pub fn bfs(g: &Graph, s: usize) -> DistRow {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    dist[s] = 0;
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut parent = vec![usize::MAX; n];
    for v in 0..n {
        if v == s {
            parent[v] = s;
        } else if dist[v] != usize::MAX {
            parent[v] = *g
                .neighbors(v)
                .iter()
                .find(|&&w| dist[w] + 1 == dist[v])
                .expect("reached vertex has a parent");
        }
    }
    DistRow { source: s, dist, parent }
}

/// `ecc[u] = max_v d(u, v)` by one BFS per vertex.
pub fn eccentricities_oracle(g: &Graph) -> Vec<usize> {
    (0..g.n()).map(|s| bfs(g, s).dist.into_iter().max().unwrap_or(0)).collect()
}

/// Dense all-pairs distances.
#[derive(Clone, Debug)]
pub struct DistMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> usize {
        self.d[u * self.n + v] as usize
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }
}

pub fn distance_matrix(g: &Graph, cap: usize) -> Result<DistMatrix> {
    let n = g.n();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut d = Vec::with_capacity(n * n);
    for s in 0..n {
        d.extend(bfs(g, s).dist.into_iter().map(|x| x as u32));
    }
    Ok(DistMatrix { n, d })
}

/// `I(u, v)` in increasing vertex order.
pub fn interval(dm: &DistMatrix, u: usize, v: usize) -> Vec<usize> {
    let duv = dm.get(u, v);
    (0..dm.n()).filter(|&x| dm.get(u, x) + dm.get(x, v) == duv).collect()
}

/// Outcome of a median query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Median {
    Unique(usize),
    Empty,
    /// More than one vertex in the triple intersection; carries the count.
    Multiple(usize),
}

pub fn median_of(dm: &DistMatrix, x: usize, y: usize, z: usize) -> Median {
    let (dxy, dyz, dxz) = (dm.get(x, y), dm.get(y, z), dm.get(x, z));
    let mut found = Vec::new();
    for w in 0..dm.n() {
        let (a, b, c) = (dm.get(x, w), dm.get(y, w), dm.get(z, w));
        if a + b == dxy && b + c == dyz && a + c == dxz {
            found.push(w);
        }
    }
    match found.len() {
        0 => Median::Empty,
        1 => Median::Unique(found[0]),
        k => Median::Multiple(k),
    }
}

/// Result of the triple scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MedianCheck {
    pub ok: bool,
    pub violation: Option<(usize, usize, usize)>,
}

/// Checks that every triple has exactly one median.
///
/// For fixed `x`, a vertex of `I(x,y) ∩ I(x,z)` lies in `I(y,z)` iff its
/// distance to `x` is the Gromov product `(d(x,y)+d(x,z)-d(y,z))/2`, so each
/// triple costs one three-way bitset intersection.
pub fn verify_median(g: &Graph, cap: usize) -> Result<MedianCheck> {
    let dm = distance_matrix(g, cap)?;
    let n = g.n();
    let words = n.div_ceil(64);
    let mut ivals = vec![0u64; n * words];
    for x in 0..n {
        let dx = dm.row(x);
        let ecc = *dx.iter().max().unwrap() as usize;
        let mut spheres = vec![0u64; (ecc + 1) * words];
        for w in 0..n {
            spheres[dx[w] as usize * words + w / 64] |= 1 << (w % 64);
        }
        for y in 0..n {
            let row = &mut ivals[y * words..(y + 1) * words];
            row.iter_mut().for_each(|b| *b = 0);
            let dy = dm.row(y);
            for w in 0..n {
                if dx[w] + dy[w] == dx[y] {
                    row[w / 64] |= 1 << (w % 64);
                }
            }
        }
        for y in x + 1..n {
            let iy = &ivals[y * words..(y + 1) * words];
            for z in y + 1..n {
                let sum = dx[y] + dx[z];
                let dyz = dm.get(y, z) as u32;
                let ok = if sum < dyz || (sum - dyz) % 2 == 1 {
                    false
                } else {
                    let k = ((sum - dyz) / 2) as usize;
                    let iz = &ivals[z * words..(z + 1) * words];
                    let sk = &spheres[k * words..(k + 1) * words];
                    let mut count = 0;
                    for i in 0..words {
                        count += (iy[i] & iz[i] & sk[i]).count_ones();
                        if count > 1 {
                            break;
                        }
                    }
                    count == 1
                };
                if !ok {
                    return Ok(MedianCheck { ok: false, violation: Some((x, y, z)) });
                }
            }
        }
    }
    Ok(MedianCheck { ok: true, violation: None })
}
