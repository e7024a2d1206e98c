//! Pairwise orthogonal families: the vertex bijection, hypercubes, MOPs and
//! the parallel streams feeding the label algorithms.
//!
//! A hypercube is stored as its anti-basis `w` plus a bitmask over the sorted
//! list E⁻(w). Cube ids are `offset[w] + mask`, with anti-bases laid out by
//! BFS level, so every cube appears after the cubes of lower anti-bases.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::theta::{Orientation, ThetaStructure};

/// Dimension ceiling imposed by the `u64` masks.
pub const MAX_DIM: usize = 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cube {
    pub basis: usize,
    pub anti: usize,
    /// Signature as a bitmask over E⁻(anti).
    pub mask: u64,
}

/// A hypercube with an explicit signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypercube {
    pub basis: usize,
    pub anti: usize,
    pub signature: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct PofIndex {
    pub v0: usize,
    pub q: usize,
    d: usize,
    inpof: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    out_edges: Vec<Vec<(usize, usize)>>,
    map: HashMap<Vec<usize>, usize>,
    orth: Vec<Vec<usize>>,
    level: Vec<usize>,
    order: Vec<usize>,
    off: Vec<usize>,
    cubes: Vec<Cube>,
    out_of: Vec<Vec<usize>>,
}

/// Builds E⁻(v) for every vertex, the inverse map and the full cube table.
pub fn build_pof_index(ts: &ThetaStructure, o: &Orientation) -> Result<PofIndex> {
    let n = o.level.len();
    let inpof: Vec<Vec<usize>> = (0..n).map(|v| o.in_classes(v)).collect();
    let down: Vec<Vec<usize>> = o.in_edges.iter().map(|l| l.iter().map(|p| p.1).collect()).collect();
    let d = inpof.iter().map(Vec::len).max().unwrap_or(0);
    if d > MAX_DIM {
        return Err(Error::Param(format!("dimension {d} exceeds {MAX_DIM}")));
    }
    let mut map = HashMap::with_capacity(n);
    for (v, x) in inpof.iter().enumerate() {
        if map.insert(x.clone(), v).is_some() {
            return Err(Error::DuplicatePof(x.clone()));
        }
    }
    let mut off = vec![0; n];
    let mut cubes: Vec<Cube> = Vec::new();
    for &w in &o.order {
        off[w] = cubes.len();
        let k = inpof[w].len();
        for mask in 0..1u64 << k {
            let basis = if mask == 0 {
                w
            } else {
                let i = mask.trailing_zeros() as usize;
                let x = down[w][i];
                let rest = remap(&inpof[w], mask & !(1 << i), &inpof[x])
                    .ok_or_else(|| Error::NotMedian(format!("incoming classes of {w} do not span a cube")))?;
                cubes[off[x] + rest as usize].basis
            };
            cubes.push(Cube { basis, anti: w, mask });
        }
    }
    let mut out_of = vec![Vec::new(); n];
    for (id, c) in cubes.iter().enumerate() {
        out_of[c.basis].push(id);
    }
    for l in &mut out_of {
        l.sort_by_key(|&id| (cubes[id].mask.count_ones(), id));
    }
    Ok(PofIndex {
        v0: o.v0,
        q: ts.q,
        d,
        inpof,
        down,
        out_edges: o.out_edges.clone(),
        map,
        orth: ts.orth.clone(),
        level: o.level.clone(),
        order: o.order.clone(),
        off,
        cubes,
        out_of,
    })
}

/// Re-expresses the classes of `from` selected by `mask` as a mask over `to`.
fn remap(from: &[usize], mut mask: u64, to: &[usize]) -> Option<u64> {
    let mut out = 0;
    while mask != 0 {
        let i = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        out |= 1 << to.binary_search(&from[i]).ok()?;
    }
    Some(out)
}

/// Classes of `list` selected by `mask`.
pub fn mask_classes(list: &[usize], mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(list[mask.trailing_zeros() as usize]);
        mask &= mask - 1;
    }
    out
}

impl PofIndex {
    pub fn n(&self) -> usize {
        self.inpof.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// E⁻(v).
    pub fn pof(&self, v: usize) -> &[usize] {
        &self.inpof[v]
    }

    /// The vertex v_X with E⁻(v_X) = X (X sorted).
    pub fn vertex_of(&self, x: &[usize]) -> Option<usize> {
        self.map.get(x).copied()
    }

    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    /// Vertices by nondecreasing level.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn orthogonal(&self, a: usize, b: usize) -> bool {
        self.orth[a].binary_search(&b).is_ok()
    }

    pub fn orth_list(&self, c: usize) -> &[usize] {
        &self.orth[c]
    }

    /// `(class, head)` pairs leaving `v`.
    pub fn out_edges(&self, v: usize) -> &[(usize, usize)] {
        &self.out_edges[v]
    }

    pub fn up(&self, v: usize, c: usize) -> Option<usize> {
        let l = &self.out_edges[v];
        l.binary_search_by_key(&c, |p| p.0).ok().map(|i| l[i].1)
    }

    /// Tail of the `i`-th incoming edge of `v`.
    pub fn down(&self, v: usize, i: usize) -> usize {
        self.down[v][i]
    }

    pub fn cube_count(&self) -> usize {
        self.cubes.len()
    }

    pub fn cube(&self, id: usize) -> Cube {
        self.cubes[id]
    }

    pub fn cubes(&self) -> &[Cube] {
        &self.cubes
    }

    pub fn sig(&self, id: usize) -> Vec<usize> {
        let c = self.cubes[id];
        mask_classes(&self.inpof[c.anti], c.mask)
    }

    pub fn dim(&self, id: usize) -> usize {
        self.cubes[id].mask.count_ones() as usize
    }

    /// Cube with anti-basis `w` and signature `mask` over E⁻(w).
    pub fn in_cube(&self, w: usize, mask: u64) -> usize {
        self.off[w] + mask as usize
    }

    /// Number of cubes with anti-basis `w`.
    pub fn in_count(&self, w: usize) -> usize {
        1 << self.inpof[w].len()
    }

    /// Cube ids with basis `u`, by nondecreasing dimension; the first is (u, ∅).
    pub fn out_cubes(&self, u: usize) -> &[usize] {
        &self.out_of[u]
    }

    /// Mask over E⁻(w) of the sorted class list `x`, if all are present.
    pub fn mask_at(&self, w: usize, x: &[usize]) -> Option<u64> {
        let mut m = 0;
        for c in x {
            m |= 1 << self.inpof[w].binary_search(c).ok()?;
        }
        Some(m)
    }

    /// Cube with basis `u` and outgoing signature `l` (sorted).
    pub fn cube_of(&self, u: usize, l: &[usize]) -> Option<usize> {
        let mut x = u;
        for &c in l {
            x = self.up(x, c)?;
        }
        let m = self.mask_at(x, l)?;
        let id = self.in_cube(x, m);
        (self.cubes[id].basis == u).then_some(id)
    }

    /// Vertex of cube `id` reached from its basis by the classes in `t ⊆ mask`.
    pub fn interior(&self, id: usize, t: u64) -> usize {
        let c = self.cubes[id];
        self.cubes[self.off[c.anti] + (c.mask & !t) as usize].basis
    }

    /// Sub-cube of `id` with the same basis and signature `t ⊆ mask`.
    pub fn sub_cube(&self, id: usize, t: u64) -> usize {
        let c = self.cubes[id];
        let x = self.interior(id, t);
        let m = remap(&self.inpof[c.anti], t, &self.inpof[x]).expect("sub-cube classes enter its anti-basis");
        self.off[x] + m as usize
    }

    /// For each class of the outgoing cube `id`, the mask over E⁻(basis) of
    /// incoming classes not orthogonal to it.
    pub fn par_masks(&self, id: usize) -> Vec<u64> {
        let c = self.cubes[id];
        let ins = &self.inpof[c.basis];
        mask_classes(&self.inpof[c.anti], c.mask)
            .into_iter()
            .map(|e| {
                let mut m = 0;
                for (i, &f) in ins.iter().enumerate() {
                    if !self.orthogonal(e, f) {
                        m |= 1 << i;
                    }
                }
                m
            })
            .collect()
    }

    /// β_i: number of POFs of each size.
    pub fn beta(&self) -> Vec<usize> {
        let mut b = vec![0; self.d + 1];
        for x in &self.inpof {
            b[x.len()] += 1;
        }
        b
    }
}

/// `true` when every class of the outgoing cube is parallel to some class of `l`.
pub fn is_parallel(par: &[u64], l: u64) -> bool {
    !par.is_empty() && par.iter().all(|&m| m & l != 0)
}

/// All hypercubes with a nonempty signature, anti-bases by nondecreasing level.
pub fn enumerate_hypercubes(p: &PofIndex) -> Vec<Hypercube> {
    (0..p.cube_count())
        .filter(|&id| p.cubes[id].mask != 0)
        .map(|id| {
            let c = p.cubes[id];
            Hypercube { basis: c.basis, anti: c.anti, signature: p.sig(id) }
        })
        .collect()
}

/// Inclusion-maximal POFs with the hypercube whose anti-basis is v_X.
pub fn maximal_pofs(p: &PofIndex) -> Vec<(Vec<usize>, Hypercube)> {
    let n = p.n();
    let mut covered = vec![false; n];
    for w in 0..n {
        let x = &p.inpof[w];
        for i in 0..x.len() {
            let mut sub = x.clone();
            sub.remove(i);
            if let Some(v) = p.vertex_of(&sub) {
                covered[v] = true;
            }
        }
    }
    (0..n)
        .filter(|&v| !covered[v])
        .map(|v| {
            let id = p.in_cube(v, (1u64 << p.inpof[v].len()) - 1);
            let c = p.cubes[id];
            (p.inpof[v].clone(), Hypercube { basis: c.basis, anti: v, signature: p.inpof[v].clone() })
        })
        .collect()
}

/// The crossing graph: classes adjacent when orthogonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingGraph {
    pub adj: Vec<Vec<usize>>,
}

impl CrossingGraph {
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, l) in self.adj.iter().enumerate() {
            out.extend(l.iter().filter(|&&b| a < b).map(|&b| (a, b)));
        }
        out
    }
}

pub fn crossing_graph(p: &PofIndex) -> CrossingGraph {
    CrossingGraph { adj: p.orth.clone() }
}

/// Induced subgraph on the cubes based at `u`; local vertex 0 is `u`.
pub fn star_graph(g: &Graph, p: &PofIndex, u: usize) -> Result<(Graph, Vec<usize>)> {
    let vs: Vec<usize> = p.out_of[u].iter().map(|&id| p.cubes[id].anti).collect();
    g.induced(&vs)
}

/// Cube ids of the MOPs: nonempty outgoing signatures with no outgoing superset.
pub fn enumerate_mops(p: &PofIndex) -> Vec<usize> {
    let mut covered = vec![false; p.cube_count()];
    for id in 0..p.cube_count() {
        let mut m = p.cubes[id].mask;
        let full = m;
        while m != 0 {
            let b = m & m.wrapping_neg();
            m &= m - 1;
            covered[p.sub_cube(id, full & !b)] = true;
        }
    }
    (0..p.cube_count()).filter(|&id| p.cubes[id].mask != 0 && !covered[id]).collect()
}

/// Classes `E` such that `lp` is `E`-adjacent but not `E`-orthogonal.
pub fn aligned_classes(p: &PofIndex, lp: &[usize]) -> Option<Vec<usize>> {
    let v = p.vertex_of(lp)?;
    let id = p.in_cube(v, (1u64 << lp.len()) - 1);
    Some(p.inpof[p.cubes[id].basis].clone())
}

/// Classes `E` with `lp ∪ {E}` a POF.
pub fn ortho_adjacent_classes(p: &PofIndex, lp: &[usize]) -> Vec<usize> {
    let candidates: Vec<usize> = match lp.first() {
        None => (0..p.q).collect(),
        Some(&c) => p.orth[c].iter().copied().filter(|&e| lp.iter().all(|&f| p.orthogonal(e, f))).collect(),
    };
    candidates
        .into_iter()
        .filter(|e| {
            let mut x = lp.to_vec();
            x.push(*e);
            x.sort_unstable();
            p.vertex_of(&x).is_some()
        })
        .collect()
}

/// Visits every `(in cube, out cube)` pair sharing a vertex `u⁺` where the
/// outgoing signature is parallel to the incoming one.
pub fn for_each_parallel_naive(p: &PofIndex, mut f: impl FnMut(usize, usize)) {
    for up in 0..p.n() {
        parallel_naive_at(p, up, &mut f);
    }
}

/// The naive stream restricted to pairs meeting at `up`.
pub fn parallel_naive_at(p: &PofIndex, up: usize, f: &mut impl FnMut(usize, usize)) {
    let k = p.inpof[up].len();
    if k == 0 {
        return;
    }
    for &out in &p.out_of[up][1..] {
        let par = p.par_masks(out);
        for l in 1..1u64 << k {
            if is_parallel(&par, l) {
                f(p.in_cube(up, l), out);
            }
        }
    }
}

/// Same contract as [`for_each_parallel_naive`] restricted to minimal incoming
/// signatures. Returns the largest number of pairs emitted for one out cube.
pub fn for_each_minimal_parallel(p: &PofIndex, mut f: impl FnMut(usize, usize)) -> usize {
    (0..p.n()).map(|up| minimal_parallel_at(p, up, &mut f)).max().unwrap_or(0)
}

/// The minimal stream restricted to pairs meeting at `up`.
pub fn minimal_parallel_at(p: &PofIndex, up: usize, f: &mut impl FnMut(usize, usize)) -> usize {
    let mut worst = 0;
    if p.inpof[up].is_empty() {
        return 0;
    }
    for &out in &p.out_of[up][1..] {
        let lp = p.sig(out);
        let aligned = aligned_classes(p, &lp).expect("outgoing signature is a POF");
        let mut a = 0u64;
        for c in aligned {
            if let Ok(i) = p.inpof[up].binary_search(&c) {
                a |= 1 << i;
            }
        }
        if a == 0 {
            continue;
        }
        let par = p.par_masks(out);
        let mut count = 0;
        let mut l = a;
        while l != 0 {
            if is_parallel(&par, l) && minimal(&par, l) {
                f(p.in_cube(up, l), out);
                count += 1;
            }
            l = (l - 1) & a;
        }
        worst = worst.max(count);
    }
    worst
}

/// Flags the MOP cubes.
pub fn mop_flags(p: &PofIndex) -> Vec<bool> {
    let mut flag = vec![false; p.cube_count()];
    for id in enumerate_mops(p) {
        flag[id] = true;
    }
    flag
}

fn minimal(par: &[u64], l: u64) -> bool {
    let mut m = l;
    while m != 0 {
        let b = m & m.wrapping_neg();
        m &= m - 1;
        if is_parallel(par, l & !b) {
            return false;
        }
    }
    true
}

/// Σ over maximal POFs C of 2^|C|.
pub fn mop_clique_bound(p: &PofIndex) -> f64 {
    maximal_pofs(p).iter().map(|(x, _)| 2f64.powi(x.len() as i32)).sum()
}

/// f(d,n)·n with f(d,n) = (2(2^{log n/d} − 1)/2^{log n/d})^d; `None` for d ≤ 1.
pub fn mop_count_bound(d: usize, n: usize) -> Option<f64> {
    if d <= 1 {
        return None;
    }
    let t = 2f64.powf((n as f64).log2() / d as f64);
    Some((2.0 * (t - 1.0) / t).powi(d as i32) * n as f64)
}

/// Summary counts.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PofStats {
    pub pofs: usize,
    /// Hypercubes of dimension at least one.
    pub hypercubes: usize,
    /// Hypercubes including single vertices.
    pub alpha: usize,
    pub beta: Vec<usize>,
    pub mops: usize,
    pub maximal_pofs: usize,
}

pub fn pof_stats(p: &PofIndex) -> PofStats {
    PofStats {
        pofs: p.map.len(),
        hypercubes: p.cube_count() - p.n(),
        alpha: p.cube_count(),
        beta: p.beta(),
        mops: enumerate_mops(p).len(),
        maximal_pofs: maximal_pofs(p).len(),
    }
}

/// Independent count of induced hypercubes by dimension, built from each
/// vertex by closing squares over neighbor sets. Meant for small graphs.
pub fn count_induced_cubes(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut counts: Vec<usize> = vec![0];
    counts[0] = n;
    for x in 0..n {
        let nb = g.neighbors(x).to_vec();
        let mut chosen = Vec::new();
        grow(g, x, &nb, 0, &mut chosen, &mut counts);
    }
    for (k, c) in counts.iter_mut().enumerate().skip(1) {
        *c >>= k;
    }
    counts
}

fn grow(g: &Graph, x: usize, nb: &[usize], from: usize, chosen: &mut Vec<usize>, counts: &mut Vec<usize>) {
    for i in from..nb.len() {
        chosen.push(nb[i]);
        if let Some(verts) = cube_vertices(g, x, chosen) {
            let k = chosen.len();
            if counts.len() <= k {
                counts.resize(k + 1, 0);
            }
            if induces_cube(g, &verts) {
                counts[k] += 1;
            }
            grow(g, x, nb, i + 1, chosen, counts);
        }
        chosen.pop();
    }
}

/// Vertices of the cube spanned at `x` by the neighbors `dirs`, indexed by subset.
fn cube_vertices(g: &Graph, x: usize, dirs: &[usize]) -> Option<Vec<usize>> {
    let k = dirs.len();
    let mut v = vec![usize::MAX; 1 << k];
    v[0] = x;
    for (i, &y) in dirs.iter().enumerate() {
        v[1 << i] = y;
    }
    let mut subsets: Vec<usize> = (1..1usize << k).filter(|s| s.count_ones() >= 2).collect();
    subsets.sort_by_key(|s| s.count_ones());
    for s in subsets {
        let i = s.trailing_zeros() as usize;
        let j = (s & !(1 << i)).trailing_zeros() as usize;
        let (a, b, base) = (v[s & !(1 << i)], v[s & !(1 << j)], v[s & !(1 << i) & !(1 << j)]);
        let common: Vec<usize> = g
            .neighbors(a)
            .iter()
            .copied()
            .filter(|&z| z != base && g.neighbors(b).binary_search(&z).is_ok())
            .collect();
        if common.len() != 1 {
            return None;
        }
        v[s] = common[0];
    }
    Some(v)
}

fn induces_cube(g: &Graph, v: &[usize]) -> bool {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    for (s, &a) in v.iter().enumerate() {
        for (t, &b) in v.iter().enumerate().skip(s + 1) {
            let adjacent = g.neighbors(a).binary_search(&b).is_ok();
            if adjacent != ((s ^ t).count_ones() == 1) {
                return false;
            }
        }
    }
    true
}
