//! Instance generators, the cross-validation report and timing sweeps.
//!
//! Randomness comes from ChaCha8 seeded with the 64-bit seed, so a spec and
//! seed always give the same edge list on every platform.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::driver::{default_c, ecc_subquadratic, leaf_classes_match};
use crate::error::{Error, Result};
use crate::graph::{eccentricities_oracle, verify_median, Graph};
use crate::labels::{compute_labels, ecc_from_labels, phi_oracle, psi_oracle, Backend};
use crate::pof::{self, build_pof_index, count_induced_cubes, mop_clique_bound, mop_count_bound, pof_stats};
use crate::reach::{compute_reach, reach_bfs, reach_oracle, reach_scope_oracle};
use crate::theta::{canonical_partition, compute_theta, orient, theta_oracle};
use crate::wopp::{
    build_refinement_tree, simplex_central_vertex, simplex_eccentricities, solve_on_tree, solve_wopp, wopp_bruteforce, Family,
};

/// Verification cap used while growing random instances step by step.
pub const STEP_VERIFY_CAP: usize = 40;

#[derive(Clone, Debug, PartialEq)]
pub enum GenSpec {
    Hypercube(usize),
    Grid(usize, usize),
    Path(usize),
    Tree(usize),
    Cogwheel(usize),
    SimplexOfRandom(usize, f64),
    Mulder(usize),
    Product(Vec<GenSpec>),
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenSpec::Hypercube(d) => write!(f, "hypercube:{d}"),
            GenSpec::Grid(r, c) => write!(f, "grid:{r}x{c}"),
            GenSpec::Path(n) => write!(f, "path:{n}"),
            GenSpec::Tree(n) => write!(f, "tree:{n}"),
            GenSpec::Cogwheel(k) => write!(f, "cogwheel:{k}"),
            GenSpec::SimplexOfRandom(n, p) => write!(f, "simplex:{n}:{p}"),
            GenSpec::Mulder(n) => write!(f, "mulder:{n}"),
            GenSpec::Product(parts) => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", s.join("*"))
            }
        }
    }
}

impl GenSpec {
    /// Family tag without size parameters.
    pub fn family(&self) -> String {
        match self {
            GenSpec::Product(parts) => parts.iter().map(|p| p.family()).collect::<Vec<_>>().join("*"),
            other => other.to_string().split(':').next().unwrap().to_string(),
        }
    }
}

fn num<T: FromStr>(s: &str, spec: &str) -> Result<T> {
    s.parse().map_err(|_| Error::Param(format!("bad number {s:?} in spec {spec:?}")))
}

impl FromStr for GenSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GenSpec> {
        if s.contains('*') {
            return s.split('*').map(str::parse).collect::<Result<Vec<_>>>().map(GenSpec::Product);
        }
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::Param(format!("unrecognized spec {s:?}"));
        match (parts[0], parts.len()) {
            ("hypercube", 2) => Ok(GenSpec::Hypercube(num(parts[1], s)?)),
            ("path", 2) => Ok(GenSpec::Path(num(parts[1], s)?)),
            ("tree", 2) => Ok(GenSpec::Tree(num(parts[1], s)?)),
            ("cogwheel", 2) => Ok(GenSpec::Cogwheel(num(parts[1], s)?)),
            ("mulder", 2) => Ok(GenSpec::Mulder(num(parts[1], s)?)),
            ("simplex", 3) => Ok(GenSpec::SimplexOfRandom(num(parts[1], s)?, num(parts[2], s)?)),
            ("grid", 2) => {
                let (r, c) = parts[1].split_once('x').ok_or_else(bad)?;
                Ok(GenSpec::Grid(num(r, s)?, num(c, s)?))
            }
            _ => Err(bad()),
        }
    }
}

pub fn hypercube(d: usize) -> Graph {
    let n = 1usize << d;
    let mut es = Vec::new();
    for v in 0..n {
        for b in 0..d {
            let w = v ^ (1 << b);
            if v < w {
                es.push((v, w));
            }
        }
    }
    Graph::from_edges(n, &es).expect("hypercube")
}

pub fn grid(r: usize, c: usize) -> Graph {
    let mut es = Vec::new();
    for i in 0..r {
        for j in 0..c {
            let v = i * c + j;
            if j + 1 < c {
                es.push((v, v + 1));
            }
            if i + 1 < r {
                es.push((v, v + c));
            }
        }
    }
    Graph::from_edges(r * c, &es).expect("grid")
}

pub fn path(n: usize) -> Graph {
    let es: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &es).expect("path")
}

/// Random recursive tree: vertex `i` hangs below a uniform earlier vertex.
pub fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let es: Vec<(usize, usize)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::from_edges(n, &es).expect("tree")
}

/// All cliques of a graph on `0..k`, by size then lexicographically.
pub fn cliques(k: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![vec![false; k]; k];
    for &(a, b) in edges {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for c in &frontier {
            let start = c.last().map_or(0, |&x: &usize| x + 1);
            for v in start..k {
                if c.iter().all(|&x| adj[x][v]) {
                    let mut d = c.clone();
                    d.push(v);
                    next.push(d);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Simplex graph K(H) of a graph on `0..k`; vertex 0 is the empty clique.
pub fn simplex_graph(k: usize, edges: &[(usize, usize)]) -> Graph {
    let cl = cliques(k, edges);
    let index: HashMap<Vec<usize>, usize> = cl.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let mut es = Vec::new();
    for (i, c) in cl.iter().enumerate() {
        for j in 0..c.len() {
            let mut sub = c.clone();
            sub.remove(j);
            es.push((index[&sub], i));
        }
    }
    Graph::from_edges(cl.len(), &es).expect("simplex graph")
}

/// K(C_k).
pub fn cogwheel(k: usize) -> Graph {
    let es: Vec<(usize, usize)> = (0..k).map(|i| (i.min((i + 1) % k), i.max((i + 1) % k))).collect();
    simplex_graph(k, &es)
}

pub fn simplex_of_random(k: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut es = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            if rng.gen_bool(p) {
                es.push((a, b));
            }
        }
    }
    simplex_graph(k, &es)
}

pub fn product(a: &Graph, b: &Graph) -> Graph {
    let nb = b.n();
    let mut es = Vec::new();
    for x in 0..a.n() {
        for &(u, v) in b.edges() {
            es.push((x * nb + u, x * nb + v));
        }
    }
    for &(u, v) in a.edges() {
        for y in 0..nb {
            es.push((u * nb + y, v * nb + y));
        }
    }
    Graph::from_edges(a.n() * nb, &es).expect("product")
}

/// Random median graph grown by peripheral expansions from one vertex.
///
/// Each step picks a few vertices near a random center, takes the
/// intersection of all halfspaces containing them, and glues a copy of that
/// convex set along a new Θ-class.
pub fn mulder_random(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Param("mulder needs n >= 1".into()));
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new()];
    // side bits per vertex: bit c set when the vertex is on the new side of class c
    let mut sig: Vec<Vec<u64>> = vec![Vec::new()];
    let mut q = 0usize;
    while adj.len() < n {
        let room = n - adj.len();
        let mut hull = vec![0];
        for _ in 0..8 {
            let center = rng.gen_range(0..adj.len());
            let mut ball = vec![center];
            let mut seen = vec![false; adj.len()];
            seen[center] = true;
            let radius = rng.gen_range(0..=2);
            let mut frontier = vec![center];
            for _ in 0..radius {
                let mut next = Vec::new();
                for &u in &frontier {
                    for &w in &adj[u] {
                        if !seen[w] {
                            seen[w] = true;
                            next.push(w);
                        }
                    }
                }
                ball.extend(&next);
                frontier = next;
            }
            ball.shuffle(rng);
            let k = rng.gen_range(1..=3.min(ball.len()));
            let sample = &ball[..k];
            let words = q.div_ceil(64);
            let mut fixed = vec![0u64; words];
            let mut value = vec![0u64; words];
            for w in 0..words {
                let all_and = sample.iter().fold(!0u64, |a, &v| a & sig[v].get(w).copied().unwrap_or(0));
                let all_or = sample.iter().fold(0u64, |a, &v| a | sig[v].get(w).copied().unwrap_or(0));
                fixed[w] = all_and | !all_or;
                value[w] = all_and;
            }
            let cand: Vec<usize> = (0..adj.len())
                .filter(|&v| (0..words).all(|w| (sig[v].get(w).copied().unwrap_or(0) ^ value[w]) & fixed[w] == 0))
                .collect();
            if cand.len() <= room {
                hull = cand;
                break;
            }
            hull = vec![center];
        }
        // glue a copy of the hull along class q
        let base = adj.len();
        let pos: HashMap<usize, usize> = hull.iter().enumerate().map(|(i, &v)| (v, base + i)).collect();
        for &v in &hull {
            let mut s = sig[v].clone();
            if s.len() < (q + 1).div_ceil(64) {
                s.resize((q + 1).div_ceil(64), 0);
            }
            s[q / 64] |= 1 << (q % 64);
            sig.push(s);
            adj.push(vec![v]);
        }
        for (i, &v) in hull.iter().enumerate() {
            adj[v].push(base + i);
            let nbrs: Vec<usize> = adj[v].iter().copied().filter_map(|w| pos.get(&w).copied()).collect();
            adj[base + i].extend(nbrs);
        }
        q += 1;
        if adj.len() <= STEP_VERIFY_CAP {
            let g = adj_to_graph(&adj)?;
            if !verify_median(&g, STEP_VERIFY_CAP)?.ok {
                return Err(Error::NotMedian("expansion produced a non-median graph".into()));
            }
        }
    }
    adj_to_graph(&adj)
}

fn adj_to_graph(adj: &[Vec<usize>]) -> Result<Graph> {
    let mut es = Vec::new();
    for (u, l) in adj.iter().enumerate() {
        es.extend(l.iter().filter(|&&w| u < w).map(|&w| (u, w)));
    }
    Graph::from_edges(adj.len(), &es)
}

/// Builds the instance for `spec`; product factors use `seed + i`.
pub fn gen(spec: &GenSpec, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match *spec {
        GenSpec::Hypercube(d) if d <= 20 => Ok(hypercube(d)),
        GenSpec::Grid(r, c) if r >= 1 && c >= 1 => Ok(grid(r, c)),
        GenSpec::Path(n) if n >= 1 => Ok(path(n)),
        GenSpec::Tree(n) if n >= 1 => Ok(random_tree(n, &mut rng)),
        GenSpec::Cogwheel(k) if k >= 4 => Ok(cogwheel(k)),
        GenSpec::SimplexOfRandom(k, p) if (0.0..=1.0).contains(&p) && k <= 24 => Ok(simplex_of_random(k, p, &mut rng)),
        GenSpec::Mulder(n) => mulder_random(n, &mut rng),
        GenSpec::Product(ref parts) if !parts.is_empty() => {
            let mut g = gen(&parts[0], seed)?;
            for (i, p) in parts.iter().enumerate().skip(1) {
                g = product(&g, &gen(p, seed.wrapping_add(i as u64))?);
            }
            Ok(g)
        }
        _ => Err(Error::Param(format!("invalid parameters in {spec}"))),
    }
}

/// One named check in a report.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    /// `None` when skipped.
    pub ok: Option<bool>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub n: usize,
    pub m: usize,
    pub q: usize,
    pub d: usize,
    pub checks: Vec<Check>,
    pub timings_ms: Vec<(String, f64)>,
}

impl Report {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok != Some(false))
    }
}

/// Size caps for the oracle parts of [`crosscheck`].
#[derive(Clone, Debug)]
pub struct Caps {
    pub verify: usize,
    pub oracle: usize,
    pub reach: usize,
    pub labels: usize,
    pub cubes: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { verify: 600, oracle: 4096, reach: 300, labels: 200, cubes: 300 }
    }
}

fn push(checks: &mut Vec<Check>, name: &str, ok: Option<bool>, detail: impl Into<String>) {
    checks.push(Check { name: name.to_string(), ok, detail: detail.into() });
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// Runs every applicable algorithm against its oracle.
pub fn crosscheck(g: &Graph, caps: &Caps) -> Result<Report> {
    let n = g.n();
    let mut checks = Vec::new();
    let mut timings = Vec::new();

    if n <= caps.verify {
        let r = verify_median(g, caps.verify)?;
        let ok = r.ok;
        push(&mut checks, "verify_median", Some(ok), format!("{:?}", r.violation));
        if !ok {
            return Ok(Report { schema: 1, n, m: g.m(), q: 0, d: 0, checks, timings_ms: timings });
        }
    } else {
        push(&mut checks, "verify_median", None, "above cap");
    }

    let ts = compute_theta(g)?;
    let o = orient(g, &ts, 0)?;
    let p = build_pof_index(&ts, &o)?;
    let d = p.d();
    let q = ts.q;

    if n <= caps.oracle {
        let oracle = theta_oracle(g, caps.oracle)?;
        push(&mut checks, "theta_vs_oracle", Some(oracle == canonical_partition(&ts.class_of_edge)), "");
    }

    let stats = pof_stats(&p);
    let anchored: usize = stats.beta.iter().enumerate().map(|(i, b)| b << i).sum();
    push(&mut checks, "pof_count", Some(stats.pofs == n), format!("{} POFs", stats.pofs));
    push(&mut checks, "cube_count", Some(anchored == stats.alpha), format!("alpha {} sum {}", stats.alpha, anchored));
    if n <= caps.cubes {
        let direct: usize = count_induced_cubes(g).iter().sum();
        push(&mut checks, "cube_count_direct", Some(direct == stats.alpha), format!("direct {direct}"));
    }
    push(&mut checks, "euler", Some(2 * n <= g.m() + q + 2), format!("2n-m-q = {}", 2 * n as i64 - g.m() as i64 - q as i64));
    push(&mut checks, "dim_log_n", Some(d <= n.ilog2() as usize), format!("d = {d}"));
    let dmax = ts.class_sizes().into_iter().max().unwrap_or(1);
    push(&mut checks, "dim_log_dmax", Some(d <= dmax.ilog2() as usize + 1), format!("largest class {dmax}"));
    let clique_bound = mop_clique_bound(&p);
    push(&mut checks, "mop_clique_bound", Some(stats.mops as f64 <= clique_bound), format!("{} <= {clique_bound}", stats.mops));
    match mop_count_bound(d, n) {
        Some(b) => push(&mut checks, "mop_count_bound", Some(stats.mops as f64 <= b + 1e-9), format!("{} <= {b:.2}", stats.mops)),
        None => push(&mut checks, "mop_count_bound", None, "d <= 1"),
    }
    let worst = pof::for_each_minimal_parallel(&p, |_, _| {});
    let bound = 1.7697f64.powi(d as i32);
    push(&mut checks, "minpar_count", Some(worst as f64 <= bound), format!("{worst} <= {bound:.2}"));

    let t = Instant::now();
    let truth = if n <= caps.oracle { Some(eccentricities_oracle(g)) } else { None };
    timings.push(("oracle".to_string(), ms(t)));

    let mut tables = Vec::new();
    let mut memo_ok = true;
    for b in Backend::ALL {
        let t = Instant::now();
        let l = compute_labels(&p, b)?;
        let ecc = ecc_from_labels(&p, &l.phi, &l.psi);
        timings.push((format!("fpt-{}", b.name()), ms(t)));
        memo_ok &= l.op.memo_within_bound;
        if let Some(truth) = &truth {
            push(&mut checks, &format!("ecc_fpt_{}", b.name()), Some(&ecc == truth), "");
        }
        tables.push(l);
    }
    if n <= caps.labels {
        let ok = (0..n).all(|u| {
            let f = Family::star(&p, u);
            let w: Vec<u64> = p.out_cubes(u).iter().map(|&c| tables[0].phi.phi[c] as u64 + 1).collect();
            solve_wopp(&f, &w).map(|r| r.weight == wopp_bruteforce(&f, &w)).unwrap_or(false)
        });
        push(&mut checks, "wopp_star_vs_bruteforce", Some(ok), "");
    }
    push(&mut checks, "wopp_memo_bound", Some(memo_ok), format!("largest memo {}", tables[0].op.memo_max));
    let same = tables.iter().all(|l| l.phi.phi == tables[0].phi.phi && l.psi == tables[0].psi);
    push(&mut checks, "backend_equivalence", Some(same), "");

    for (b, c) in [(Backend::Naive, 4.0), (Backend::Minpar, default_c(Backend::Minpar))] {
        let t = Instant::now();
        let run = ecc_subquadratic(g, c, b)?;
        timings.push((format!("split-{}-{c}", b.name()), ms(t)));
        if let Some(truth) = &truth {
            push(&mut checks, &format!("ecc_split_c{c}"), Some(&run.ecc == truth), "");
        }
        let limit = run.tree.threshold.ilog2() as usize + 1;
        let dims_ok = run.leaf_dims.iter().all(|&x| x <= limit);
        push(&mut checks, &format!("leaf_dims_c{c}"), Some(dims_ok), format!("limit {limit}"));
        push(&mut checks, &format!("leaf_classes_c{c}"), Some(leaf_classes_match(g, &ts, &run.tree)?), "");
    }

    if n <= caps.labels {
        let dm = crate::graph::distance_matrix(g, caps.labels)?;
        push(&mut checks, "phi_vs_oracle", Some(phi_oracle(&p, &dm) == tables[0].phi.phi), "");
        let mut pso = psi_oracle(&p, &dm);
        for (c, x) in pso.iter_mut().enumerate() {
            if p.dim(c) == 0 {
                *x = 0;
            }
        }
        let mut ps = tables[0].psi.clone();
        for (c, x) in ps.iter_mut().enumerate() {
            if p.dim(c) == 0 {
                *x = 0;
            }
        }
        push(&mut checks, "psi_vs_oracle", Some(pso == ps), "");
    }

    if n <= caps.reach {
        let rc = reach_oracle(g, caps.reach)?;
        let chi = compute_reach(&p, &tables[0]);
        let missed = chi.iter().zip(&rc).filter(|(a, b)| a != b).count();
        push(&mut checks, "reach_vs_oracle", Some(missed == 0), format!("{missed} of {n} differ"));
        push(&mut checks, "reach_bfs_vs_oracle", Some(reach_bfs(g) == rc), "");
        if n <= caps.labels {
            let dm = crate::graph::distance_matrix(g, caps.labels)?;
            let scope = reach_scope_oracle(&ts, &p, &dm)?;
            push(&mut checks, "reach_vs_scope_oracle", Some(chi == scope), "");
        }
    }

    if let Some(c) = simplex_central_vertex(g, &ts) {
        let o = orient(g, &ts, c)?;
        let sp = build_pof_index(&ts, &o)?;
        let f = Family::from_index(&sp);
        let w: Vec<u64> = f.pofs.iter().map(|x| x.len() as u64 + 1).collect();
        let tree = build_refinement_tree(&f, &w)?;
        let r = solve_on_tree(&f, &tree, &w);
        let dd = f.dim().max(1);
        push(&mut checks, "wopp_memo_simplex", Some(r.memo_size <= dd * dd * n), format!("{}", r.memo_size));
        if n <= 2000 {
            push(&mut checks, "wopp_vs_bruteforce", Some(r.weight == wopp_bruteforce(&f, &w)), "");
        }
        if let Some(truth) = &truth {
            push(&mut checks, "simplex_ecc", Some(&simplex_eccentricities(g)? == truth), "");
        }
    }

    Ok(Report { schema: 1, n, m: g.m(), q, d, checks, timings_ms: timings })
}

/// One timing row.
#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub spec: String,
    pub family: String,
    pub n: usize,
    pub d: usize,
    pub q: usize,
    pub threshold: usize,
    pub algo: String,
    pub elapsed_ms: f64,
}

pub const BENCH_HEADER: &str = "spec,n,d,q,D,algo,elapsed_ms";

impl BenchRow {
    pub fn csv(&self) -> String {
        format!("{},{},{},{},{},{},{:.3}", self.spec, self.n, self.d, self.q, self.threshold, self.algo, self.elapsed_ms)
    }
}

/// Runs one named algorithm and returns its eccentricities.
pub fn run_algo(g: &Graph, algo: &str, c: Option<f64>, backend: Backend) -> Result<Vec<usize>> {
    match algo {
        "oracle" => Ok(eccentricities_oracle(g)),
        "fpt-naive" => crate::labels::fpt_eccentricities(g, Backend::Naive),
        "fpt-mop" => crate::labels::fpt_eccentricities(g, Backend::Mop),
        "fpt-minpar" => crate::labels::fpt_eccentricities(g, Backend::Minpar),
        "split" => Ok(ecc_subquadratic(g, c.unwrap_or_else(|| default_c(backend)), backend)?.ecc),
        "simplex" => simplex_eccentricities(g),
        _ => Err(Error::Param(format!("unknown algorithm {algo:?}"))),
    }
}

/// Times every algorithm on every spec.
pub fn bench(specs: &[GenSpec], algos: &[String], seed: u64, c: Option<f64>, backend: Backend) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for spec in specs {
        let g = gen(spec, seed)?;
        let ts = crate::theta::compute_theta_with(&g, &crate::theta::ThetaOptions { v0: 0, dense_limit: 0 })?;
        let d = crate::theta::dimension(&orient(&g, &ts, 0)?);
        let threshold = crate::driver::threshold_for(g.n(), c.unwrap_or_else(|| default_c(backend)));
        for algo in algos {
            let t = Instant::now();
            run_algo(&g, algo, c, backend)?;
            rows.push(BenchRow {
                spec: spec.to_string(),
                family: spec.family(),
                n: g.n(),
                d,
                q: ts.q,
                threshold,
                algo: algo.clone(),
                elapsed_ms: ms(t),
            });
        }
    }
    Ok(rows)
}

/// Least-squares slope of log(elapsed) against log(n) per (family, algo).
pub fn fit_slopes(rows: &[BenchRow]) -> Vec<(String, String, f64)> {
    let mut groups: Vec<((String, String), Vec<(f64, f64)>)> = Vec::new();
    for r in rows {
        let key = (r.family.clone(), r.algo.clone());
        let pt = ((r.n as f64).ln(), r.elapsed_ms.max(1e-3).ln());
        match groups.iter_mut().find(|(k, _)| *k == key) {
            Some((_, v)) => v.push(pt),
            None => groups.push((key, vec![pt])),
        }
    }
    groups
        .into_iter()
        .filter(|(_, pts)| pts.len() >= 2)
        .map(|((f, a), pts)| (f, a, slope(&pts)))
        .collect()
}

pub fn slope(pts: &[(f64, f64)]) -> f64 {
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    if sxx == 0.0 {
        0.0
    } else {
        sxy / sxx
    }
}
