//! Ladder (φ), opposite (op) and anti-ladder (ψ) labels, three backends, and
//! the eccentricity assembly.
//!
//! Every table is indexed by cube id. For a cube with basis `u`, anti-basis
//! `w` and signature `S`, `phi[id] = φ(u,S)`, `op[id] = op_u(S)` and
//! `psi[id] = ψ(w,S)`.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{DistMatrix, Graph};
use crate::pof::{self, build_pof_index, PofIndex};
use crate::theta::{compute_theta_with, orient, ThetaOptions, ThetaStructure};
use crate::wopp::{solve_wopp, Family};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    Naive,
    Mop,
    Minpar,
}

impl Backend {
    pub const ALL: [Backend; 3] = [Backend::Naive, Backend::Mop, Backend::Minpar];

    pub fn name(self) -> &'static str {
        match self {
            Backend::Naive => "naive",
            Backend::Mop => "mop",
            Backend::Minpar => "minpar",
        }
    }
}

impl FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Backend> {
        match s {
            "naive" => Ok(Backend::Naive),
            "mop" => Ok(Backend::Mop),
            "minpar" => Ok(Backend::Minpar),
            _ => Err(Error::Param(format!("unknown backend {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiTable {
    pub phi: Vec<usize>,
    /// A vertex realizing each entry.
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpTable {
    pub op: Vec<usize>,
    /// Largest memo size over all per-vertex solves.
    pub memo_max: usize,
    /// Every solve stayed within max(d,1)²·n constraint pairs.
    pub memo_within_bound: bool,
}

#[derive(Clone, Debug)]
pub struct Labels {
    pub phi: PhiTable,
    pub op: OpTable,
    pub psi: Vec<usize>,
}

pub fn compute_phi(p: &PofIndex, backend: Backend) -> PhiTable {
    let mut phi: Vec<usize> = (0..p.cube_count()).map(|id| p.dim(id)).collect();
    let mut witness: Vec<usize> = p.cubes().iter().map(|c| c.anti).collect();
    let mut scratch = vec![0usize; p.cube_count()];
    let mut arg = vec![0usize; p.cube_count()];
    let mops = if backend == Backend::Mop { pof::mop_flags(p) } else { Vec::new() };
    for &up in p.order().iter().rev() {
        let k = p.pof(up).len();
        if k == 0 {
            continue;
        }
        match backend {
            Backend::Naive => pof::parallel_naive_at(p, up, &mut |inn, out| {
                let cand = p.dim(inn) + phi[out];
                if cand > phi[inn] {
                    phi[inn] = cand;
                    witness[inn] = witness[out];
                }
            }),
            Backend::Mop => {
                // φ_⊆ over the outgoing lattice at up
                for &c in p.out_cubes(up) {
                    scratch[c] = phi[c];
                    arg[c] = c;
                    let full = p.cube(c).mask;
                    let mut m = full;
                    while m != 0 {
                        let b = m & m.wrapping_neg();
                        m &= m - 1;
                        let s = p.sub_cube(c, full & !b);
                        if scratch[s] > scratch[c] {
                            scratch[c] = scratch[s];
                            arg[c] = arg[s];
                        }
                    }
                }
                for &mop in p.out_cubes(up).iter().filter(|&&c| mops[c]) {
                    let par = p.par_masks(mop);
                    let bits = bit_list(p.cube(mop).mask);
                    for l in 1..1u64 << k {
                        let t = perp_mask(&par, &bits, l);
                        if t == 0 {
                            continue;
                        }
                        let s = p.sub_cube(mop, t);
                        let inn = p.in_cube(up, l);
                        let cand = l.count_ones() as usize + scratch[s];
                        if cand > phi[inn] {
                            phi[inn] = cand;
                            witness[inn] = witness[arg[s]];
                        }
                    }
                }
            }
            Backend::Minpar => {
                let size = 1usize << k;
                let mut val = vec![0usize; size];
                let mut who = vec![usize::MAX; size];
                pof::minimal_parallel_at(p, up, &mut |inn, out| {
                    let l = p.cube(inn).mask as usize;
                    if phi[out] > val[l] {
                        val[l] = phi[out];
                        who[l] = witness[out];
                    }
                });
                for l in 1..size {
                    let mut m = l;
                    while m != 0 {
                        let b = m & m.wrapping_neg();
                        m &= m - 1;
                        if val[l & !b] > val[l] {
                            val[l] = val[l & !b];
                            who[l] = who[l & !b];
                        }
                    }
                    if val[l] > 0 {
                        let inn = p.in_cube(up, l as u64);
                        phi[inn] = l.count_ones() as usize + val[l];
                        witness[inn] = who[l];
                    }
                }
            }
        }
    }
    PhiTable { phi, witness }
}

fn bit_list(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while m != 0 {
        out.push(m & m.wrapping_neg());
        m &= m - 1;
    }
    out
}

/// Classes of an outgoing cube (as bits of its own mask) parallel to `l`.
fn perp_mask(par: &[u64], bits: &[u64], l: u64) -> u64 {
    par.iter().zip(bits).filter(|(&pm, _)| pm & l != 0).fold(0, |t, (_, &b)| t | b)
}

/// op_u(L) for every outgoing cube, by one weighted-opposite solve per vertex.
pub fn compute_op(p: &PofIndex, phi: &PhiTable) -> Result<OpTable> {
    let mut op = vec![0; p.cube_count()];
    let mut memo_max = 0;
    let mut ok = true;
    for u in 0..p.n() {
        let outs = p.out_cubes(u);
        if outs.len() == 1 {
            op[outs[0]] = outs[0];
            continue;
        }
        let f = Family::star(p, u);
        let w: Vec<u64> = outs.iter().map(|&c| phi.phi[c] as u64 + 1).collect();
        let r = solve_wopp(&f, &w)?;
        let d = f.dim().max(1);
        ok &= r.memo_size <= d * d * outs.len();
        memo_max = memo_max.max(r.memo_size);
        for (i, &c) in outs.iter().enumerate() {
            op[c] = outs[r.op[i]];
        }
    }
    Ok(OpTable { op, memo_max, memo_within_bound: ok })
}

pub fn compute_psi(p: &PofIndex, phi: &PhiTable, op: &OpTable, backend: Backend) -> Vec<usize> {
    let mut psi: Vec<usize> =
        (0..p.cube_count()).map(|c| if p.dim(c) == 0 { 0 } else { p.dim(c) + phi.phi[op.op[c]] }).collect();
    let mut excess = vec![0usize; p.cube_count()];
    let mops = if backend == Backend::Mop { pof::mop_flags(p) } else { Vec::new() };
    for &x in p.order() {
        let k = p.pof(x).len();
        if k == 0 {
            continue;
        }
        match backend {
            Backend::Naive => pof::parallel_naive_at(p, x, &mut |inn, out| {
                psi[out] = psi[out].max(p.dim(out) + psi[inn]);
            }),
            Backend::Mop => {
                let outs = p.out_cubes(x);
                for &c in outs {
                    excess[c] = 0;
                }
                for &mop in outs.iter().filter(|&&c| mops[c]) {
                    let par = p.par_masks(mop);
                    let bits = bit_list(p.cube(mop).mask);
                    for l in 1..1u64 << k {
                        let t = perp_mask(&par, &bits, l);
                        if t != 0 {
                            let s = p.sub_cube(mop, t);
                            excess[s] = excess[s].max(psi[p.in_cube(x, l)]);
                        }
                    }
                }
                for &c in outs.iter().rev() {
                    let full = p.cube(c).mask;
                    let mut m = full;
                    while m != 0 {
                        let b = m & m.wrapping_neg();
                        m &= m - 1;
                        let s = p.sub_cube(c, full & !b);
                        excess[s] = excess[s].max(excess[c]);
                    }
                    if full != 0 && excess[c] > 0 {
                        psi[c] = psi[c].max(p.dim(c) + excess[c]);
                    }
                }
            }
            Backend::Minpar => {
                let size = 1usize << k;
                let mut sup: Vec<usize> = (0..size).map(|l| psi[p.in_cube(x, l as u64)]).collect();
                for l in (1..size).rev() {
                    for b in 0..k {
                        let sup_l = l | 1 << b;
                        if sup_l != l && sup[sup_l] > sup[l] {
                            sup[l] = sup[sup_l];
                        }
                    }
                }
                pof::minimal_parallel_at(p, x, &mut |inn, out| {
                    let l = p.cube(inn).mask as usize;
                    psi[out] = psi[out].max(p.dim(out) + sup[l]);
                });
            }
        }
    }
    psi
}

pub fn compute_labels(p: &PofIndex, backend: Backend) -> Result<Labels> {
    let phi = compute_phi(p, backend);
    let op = compute_op(p, &phi)?;
    let psi = compute_psi(p, &phi, &op, backend);
    Ok(Labels { phi, op, psi })
}

/// ecc(u) as the largest φ or ψ label at `u`.
pub fn ecc_from_labels(p: &PofIndex, phi: &PhiTable, psi: &[usize]) -> Vec<usize> {
    (0..p.n())
        .map(|u| {
            let a = p.out_cubes(u).iter().map(|&c| phi.phi[c]).max().unwrap_or(0);
            let b = (1..p.in_count(u)).map(|l| psi[p.in_cube(u, l as u64)]).max().unwrap_or(0);
            a.max(b)
        })
        .collect()
}

/// Theta, orientation, index and labels from basepoint 0, then ecc.
pub fn fpt_eccentricities(g: &Graph, backend: Backend) -> Result<Vec<usize>> {
    fpt_eccentricities_with(g, backend, &ThetaOptions::default())
}

pub fn fpt_eccentricities_with(g: &Graph, backend: Backend, opts: &ThetaOptions) -> Result<Vec<usize>> {
    let ts = compute_theta_with(g, opts)?;
    let o = orient(g, &ts, opts.v0)?;
    let p = build_pof_index(&ts, &o)?;
    let l = compute_labels(&p, backend)?;
    Ok(ecc_from_labels(&p, &l.phi, &l.psi))
}

/// L_{u,v}: classes of σ(u,v) with an edge at `u`. Requires u ∈ I(v0,v).
pub fn ladder_set(ts: &ThetaStructure, p: &PofIndex, u: usize, v: usize) -> Result<Vec<usize>> {
    let sig = ts.signature(u, v);
    if p.level(u) + sig.len() != p.level(v) {
        return Err(Error::Param(format!("{u} is not between the basepoint and {v}")));
    }
    Ok(sig.into_iter().filter(|&c| p.up(u, c).is_some()).collect())
}

/// Milestones from `u` to `v` with the ladder set of each step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MilestoneChain {
    pub vertices: Vec<usize>,
    /// `ladders[i]` signs the cube from `vertices[i]` to `vertices[i + 1]`.
    pub ladders: Vec<Vec<usize>>,
}

impl MilestoneChain {
    pub fn penultimate(&self) -> Option<usize> {
        (self.vertices.len() >= 2).then(|| self.vertices[self.vertices.len() - 2])
    }

    /// The anti-ladder set: ladder set of the final step.
    pub fn anti_ladder(&self) -> Option<&[usize]> {
        self.ladders.last().map(Vec::as_slice)
    }
}

pub fn milestones(ts: &ThetaStructure, p: &PofIndex, u: usize, v: usize) -> Result<MilestoneChain> {
    let mut vertices = vec![u];
    let mut ladders = Vec::new();
    let mut x = u;
    while x != v {
        let l = ladder_set(ts, p, x, v)?;
        let id = p.cube_of(x, &l).ok_or_else(|| Error::NotMedian(format!("ladder set at {x} spans no cube")))?;
        x = p.cube(id).anti;
        vertices.push(x);
        ladders.push(l);
    }
    Ok(MilestoneChain { vertices, ladders })
}

/// Ladder set from distances only: out-neighbors of `u` one step closer to `v`.
fn ladder_by_distance(p: &PofIndex, dm: &DistMatrix, u: usize, v: usize) -> Vec<usize> {
    let duv = dm.get(u, v);
    p.out_edges(u).iter().filter(|&&(_, y)| dm.get(y, v) + 1 == duv).map(|&(c, _)| c).collect()
}

/// φ by scanning every `v` with `u ∈ I(v0,v)`.
pub fn phi_oracle(p: &PofIndex, dm: &DistMatrix) -> Vec<usize> {
    let mut out = vec![0; p.cube_count()];
    for u in 0..p.n() {
        for v in 0..p.n() {
            let duv = dm.get(u, v);
            if p.level(u) + duv != p.level(v) {
                continue;
            }
            let l = ladder_by_distance(p, dm, u, v);
            let id = p.cube_of(u, &l).expect("ladder sets are outgoing POFs");
            out[id] = out[id].max(duv);
        }
    }
    out
}

/// ψ by scanning every pair whose median with the basepoint differs from `u`.
pub fn psi_oracle(p: &PofIndex, dm: &DistMatrix) -> Vec<usize> {
    let n = p.n();
    let v0 = p.v0;
    let mut out = vec![0; p.cube_count()];
    for u in 0..n {
        for v in 0..n {
            let duv = dm.get(u, v);
            let m = (0..n)
                .find(|&w| {
                    dm.get(u, w) + dm.get(w, v) == duv
                        && dm.get(v0, w) + dm.get(w, u) == p.level(u)
                        && dm.get(v0, w) + dm.get(w, v) == p.level(v)
                })
                .expect("median graph");
            if m == u {
                continue;
            }
            let mut x = m;
            loop {
                let l = ladder_by_distance(p, dm, x, u);
                let id = p.cube_of(x, &l).expect("ladder sets are outgoing POFs");
                if p.cube(id).anti == u {
                    out[id] = out[id].max(duv);
                    break;
                }
                x = p.cube(id).anti;
            }
        }
    }
    out
}
