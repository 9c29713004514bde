//! Exact diagonalization of short periodic chains, used as an independent
//! check of the infinite-chain and two-qubit results.
//!
//! Site `k` of an `N`-site chain is bit `N - 1 - k` of the basis index, and a
//! set bit is the `sigma_z = -1` state, matching the two-qubit `|ab> = 2a + b`
//! convention. Both models flip spins in pairs, so the Hamiltonian is block
//! diagonal in the parity of the number of down spins and each block is
//! diagonalized densely.

use std::collections::HashMap;

use faer::{Mat, Side};

use crate::error::{Error, Result};
use crate::matrix::dense::{kron, paulis, Matrix4, C64};
use crate::matrix::state::DensityMatrix;
use crate::xy::{CorrelatorSet, Separation};

pub const MAX_SITES: usize = 12;
/// Ground-space degeneracy tolerance, relative to the largest |eigenvalue|.
pub const DEGENERACY_TOL: f64 = 1e-10;
/// Boltzmann weights below this fraction of the largest are skipped.
const WEIGHT_CUTOFF: f64 = 1e-18;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ChainModel {
    /// `sum_j [(1+g) Sx Sx + (1-g) Sy Sy] - h sum_j Sz`, `S = sigma/2`.
    XY { gamma: f64, h: f64 },
    /// `sum_j (B sz_j + J s_j . s_{j+1})`
    Heisenberg { j: f64, b: f64 },
}

/// A periodic chain of `sites` spins at temperature `temperature` (0 allowed).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FiniteChainSpec {
    pub sites: usize,
    pub model: ChainModel,
    pub temperature: f64,
}

impl FiniteChainSpec {
    pub fn new(sites: usize, model: ChainModel, temperature: f64) -> Result<Self> {
        let s = FiniteChainSpec {
            sites,
            model,
            temperature,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.sites > MAX_SITES {
            return Err(Error::SizeLimit {
                sites: self.sites,
                max: MAX_SITES,
            });
        }
        if self.sites < 2 {
            return Err(Error::DomainError(format!("need at least 2 sites, got {}", self.sites)));
        }
        if !(self.temperature >= 0.0) {
            return Err(Error::DomainError(format!(
                "temperature = {} must be >= 0",
                self.temperature
            )));
        }
        match self.model {
            ChainModel::XY { gamma, h } => {
                if !(0.0..=1.0).contains(&gamma) || !h.is_finite() {
                    return Err(Error::DomainError(format!("XY parameters gamma = {gamma}, h = {h}")));
                }
            }
            ChainModel::Heisenberg { j, b } => {
                if !(j > 0.0) || !j.is_finite() || !b.is_finite() {
                    return Err(Error::DomainError(format!("Heisenberg parameters J = {j}, B = {b}")));
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        1 << self.sites
    }

    fn bit(&self, state: usize, site: usize) -> usize {
        (state >> (self.sites - 1 - site)) & 1
    }

    fn flip_mask(&self, a: usize, b: usize) -> usize {
        (1 << (self.sites - 1 - a)) | (1 << (self.sites - 1 - b))
    }
}

/// Real symmetric Hamiltonian stored as its diagonal plus every nonzero
/// off-diagonal entry (both triangles).
#[derive(Clone, Debug)]
pub struct ChainHamiltonian {
    pub dim: usize,
    pub diagonal: Vec<f64>,
    pub off_diagonal: Vec<(usize, usize, f64)>,
}

impl ChainHamiltonian {
    pub fn entry(&self, i: usize, j: usize) -> f64 {
        if i == j {
            return self.diagonal[i];
        }
        self.off_diagonal
            .iter()
            .filter(|&&(r, c, _)| r == i && c == j)
            .map(|e| e.2)
            .sum()
    }

    pub fn to_dense(&self) -> Mat<f64> {
        let mut m = Mat::<f64>::zeros(self.dim, self.dim);
        for (i, &d) in self.diagonal.iter().enumerate() {
            m[(i, i)] = d;
        }
        for &(i, j, v) in &self.off_diagonal {
            m[(i, j)] += v;
        }
        m
    }

    fn entry_map(&self) -> HashMap<(usize, usize), f64> {
        let mut map = HashMap::new();
        for &(i, j, v) in &self.off_diagonal {
            *map.entry((i, j)).or_insert(0.0) += v;
        }
        for (i, &d) in self.diagonal.iter().enumerate() {
            if d != 0.0 {
                map.insert((i, i), d);
            }
        }
        map
    }

    /// `max |[H, P]|` for the basis permutation `P: s -> perm(s)`.
    pub fn commutator_with_permutation(&self, perm: impl Fn(usize) -> usize) -> f64 {
        let map = self.entry_map();
        let mut worst = 0.0f64;
        for (&(i, j), &v) in &map {
            let w = map.get(&(perm(i), perm(j))).copied().unwrap_or(0.0);
            worst = worst.max((v - w).abs());
        }
        worst
    }

    /// `max |[H, sum_k sz_k]|` entry.
    pub fn commutator_with_total_sz(&self) -> f64 {
        self.off_diagonal
            .iter()
            .map(|&(i, j, v)| {
                let dz = 2.0 * (i.count_ones() as f64 - j.count_ones() as f64);
                (v * dz).abs()
            })
            .fold(0.0, f64::max)
    }
}

/// Cyclic translation by one site, `site k -> site k+1`, on basis indices.
pub fn translate(spec: &FiniteChainSpec, state: usize) -> usize {
    let n = spec.sites;
    ((state >> 1) | ((state & 1) << (n - 1))) & (spec.dim() - 1)
}

pub fn build_hamiltonian(spec: &FiniteChainSpec) -> Result<ChainHamiltonian> {
    spec.validate()?;
    let n = spec.sites;
    let dim = spec.dim();
    let mut diagonal = vec![0.0; dim];
    let mut off: HashMap<(usize, usize), f64> = HashMap::new();
    let z = |spec: &FiniteChainSpec, s: usize, k: usize| 1.0 - 2.0 * spec.bit(s, k) as f64;

    for s in 0..dim {
        for a in 0..n {
            let b = (a + 1) % n;
            let equal = spec.bit(s, a) == spec.bit(s, b);
            let flipped = s ^ spec.flip_mask(a, b);
            let (amp, diag) = match spec.model {
                ChainModel::XY { gamma, h } => {
                    let amp = if equal { 0.5 * gamma } else { 0.5 };
                    (amp, -0.5 * h * z(spec, s, a))
                }
                ChainModel::Heisenberg { j, b: field } => {
                    let amp = if equal { 0.0 } else { 2.0 * j };
                    (amp, j * z(spec, s, a) * z(spec, s, b) + field * z(spec, s, a))
                }
            };
            diagonal[s] += diag;
            if amp != 0.0 {
                *off.entry((flipped, s)).or_insert(0.0) += amp;
            }
        }
    }
    let mut off_diagonal: Vec<(usize, usize, f64)> = Vec::with_capacity(off.len());
    for ((i, j), v) in off {
        if i == j {
            diagonal[i] += v;
        } else if v != 0.0 {
            off_diagonal.push((i, j, v));
        }
    }
    off_diagonal.sort_by_key(|e| (e.0, e.1));
    Ok(ChainHamiltonian {
        dim,
        diagonal,
        off_diagonal,
    })
}

struct Block {
    states: Vec<usize>,
    values: Vec<f64>,
    vectors: Mat<f64>,
}

/// Full spectrum of a chain, one block per spin-flip parity.
pub struct ChainSpectrum {
    spec: FiniteChainSpec,
    blocks: Vec<Block>,
    /// Boltzmann weight of each eigenpair, normalized to sum to one.
    weights: Vec<Vec<f64>>,
}

impl ChainSpectrum {
    pub fn compute(spec: &FiniteChainSpec) -> Result<Self> {
        let h = build_hamiltonian(spec)?;
        let mut blocks = Vec::with_capacity(2);
        for parity in 0..2u32 {
            let states: Vec<usize> = (0..h.dim).filter(|s| s.count_ones() % 2 == parity).collect();
            let mut position = vec![usize::MAX; h.dim];
            for (k, &s) in states.iter().enumerate() {
                position[s] = k;
            }
            let m = states.len();
            let mut dense = Mat::<f64>::zeros(m, m);
            for (k, &s) in states.iter().enumerate() {
                dense[(k, k)] = h.diagonal[s];
            }
            for &(i, j, v) in &h.off_diagonal {
                if position[i] != usize::MAX {
                    dense[(position[i], position[j])] += v;
                }
            }
            let eig = dense
                .self_adjoint_eigen(Side::Lower)
                .map_err(|e| Error::DomainError(format!("eigensolver failed: {e:?}")))?;
            let values: Vec<f64> = (0..m).map(|k| eig.S()[k]).collect();
            blocks.push(Block {
                states,
                values,
                vectors: eig.U().to_owned(),
            });
        }
        let weights = boltzmann_weights(&blocks, spec.temperature);
        Ok(ChainSpectrum {
            spec: *spec,
            blocks,
            weights,
        })
    }

    pub fn spec(&self) -> &FiniteChainSpec {
        &self.spec
    }

    /// All eigenvalues, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.blocks.iter().flat_map(|b| b.values.iter().copied()).collect();
        v.sort_by(f64::total_cmp);
        v
    }

    /// Thermal state reduced to sites `(i, j)`, `i != j`, ordered as `|s_i s_j>`.
    pub fn pair_state_at(&self, i: usize, j: usize) -> Result<DensityMatrix> {
        let n = self.spec.sites;
        if i >= n || j >= n || i == j {
            return Err(Error::DomainError(format!("site pair ({i}, {j}) invalid for N = {n}")));
        }
        let spec = &self.spec;
        let clear = !spec.flip_mask(i, j) & (spec.dim() - 1);
        let set = |s: usize, ab: usize| {
            let mut t = s & clear;
            if ab & 2 != 0 {
                t |= 1 << (n - 1 - i);
            }
            if ab & 1 != 0 {
                t |= 1 << (n - 1 - j);
            }
            t
        };
        let mut acc = [[0.0f64; 4]; 4];
        for (block, weights) in self.blocks.iter().zip(&self.weights) {
            let mut position = vec![usize::MAX; spec.dim()];
            for (k, &s) in block.states.iter().enumerate() {
                position[s] = k;
            }
            // partner[k][ab]: block index of state k with the pair set to ab
            let partners: Vec<(usize, [usize; 4])> = block
                .states
                .iter()
                .map(|&s| {
                    let ab = 2 * spec.bit(s, i) + spec.bit(s, j);
                    (ab, std::array::from_fn(|x| position[set(s, x)]))
                })
                .collect();
            for (col, &w) in weights.iter().enumerate() {
                if w == 0.0 {
                    continue;
                }
                let v = block.vectors.col(col);
                let mut local = [[0.0f64; 4]; 4];
                for (k, (ab, p)) in partners.iter().enumerate() {
                    let c = v[k];
                    for (x, &pk) in p.iter().enumerate() {
                        if pk != usize::MAX {
                            local[*ab][x] += c * v[pk];
                        }
                    }
                }
                for r in 0..4 {
                    for c in 0..4 {
                        acc[r][c] += w * local[r][c];
                    }
                }
            }
        }
        let m = Matrix4::from_fn(|r, c| C64::new(0.5 * (acc[r][c] + acc[c][r]), 0.0));
        DensityMatrix::new(m)
    }

    /// Thermal state of sites `(0, r)`.
    pub fn pair_state(&self, r: usize) -> Result<DensityMatrix> {
        let n = self.spec.sites;
        if r < 1 || 2 * r > n {
            return Err(Error::DomainError(format!("separation {r} outside 1..={}", n / 2)));
        }
        self.pair_state_at(0, r)
    }

    pub fn correlators(&self, r: usize) -> Result<CorrelatorSet> {
        Ok(correlators_of(&self.pair_state(r)?, r))
    }
}

fn boltzmann_weights(blocks: &[Block], temperature: f64) -> Vec<Vec<f64>> {
    let all = blocks.iter().flat_map(|b| b.values.iter().copied());
    let e_min = all.clone().fold(f64::INFINITY, f64::min);
    let scale = all.fold(0.0f64, |m, e| m.max(e.abs())).max(f64::MIN_POSITIVE);
    let raw = |e: f64| -> f64 {
        if temperature.is_infinite() {
            1.0
        } else if temperature == 0.0 {
            if e - e_min <= DEGENERACY_TOL * scale {
                1.0
            } else {
                0.0
            }
        } else {
            (-(e - e_min) / temperature).exp()
        }
    };
    let mut w: Vec<Vec<f64>> = blocks.iter().map(|b| b.values.iter().map(|&e| raw(e)).collect()).collect();
    let z: f64 = w.iter().flatten().sum();
    for x in w.iter_mut().flatten() {
        *x /= z;
        if *x < WEIGHT_CUTOFF {
            *x = 0.0;
        }
    }
    w
}

/// Pauli-pair expectations of a pair state, with `mz = <sz_A>/2`.
pub fn correlators_of(rho: &DensityMatrix, r: usize) -> CorrelatorSet {
    let s = paulis();
    let t = |a: usize, b: usize| rho.expectation(&kron(&s[a], &s[b])).re;
    let sz_a = rho.expectation(&kron(&s[2], &crate::matrix::dense::Matrix2::identity())).re;
    CorrelatorSet {
        txx: t(0, 0),
        tyy: t(1, 1),
        tzz: t(2, 2),
        txy: t(0, 1),
        mz: 0.5 * sz_a,
        separation: Separation::Finite(r as u32),
        limit: None,
    }
}

/// Thermal two-site state of sites `(0, R)`.
pub fn reduced_pair_state(spec: &FiniteChainSpec, r: usize) -> Result<DensityMatrix> {
    ChainSpectrum::compute(spec)?.pair_state(r)
}

pub fn oracle_correlators(spec: &FiniteChainSpec, r: usize) -> Result<CorrelatorSet> {
    ChainSpectrum::compute(spec)?.correlators(r)
}
