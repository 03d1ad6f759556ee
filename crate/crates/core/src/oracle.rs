//! Independent ground truth for Hom dimensions: explicit matrix
//! representations of the cyclic quiver over a prime field, with Hom
//! spaces computed by solving the intertwining equations exactly.
//!
//! The combinatorial layer formulas in `crate::stable_hom` are certified
//! against this module; the two share no code path beyond the module
//! coordinates themselves. Dimensions of Hom spaces between uniserial
//! representations are characteristic-free, which the sweep checks by
//! running over two different primes.

use alloc::vec::Vec;

use crate::algebra::{Algebra, IndecModule};
use crate::error::{Error, Result};
use crate::stable_hom;

/// Default primes for the certification sweep.
pub const SWEEP_PRIMES: [u64; 2] = [2, 101];

/// A representation of the cyclic quiver: one vector space per vertex and
/// one matrix per arrow `v -> v+1`, over the prime field `F_p`.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    p: u64,
    dims: Vec<usize>,
    /// `arrows[v]` maps vertex `v+1`'s space into... stored as a
    /// `dims[v+1] x dims[v]` matrix acting on column vectors at vertex `v`
    /// (vertices 0-indexed here, wrapping cyclically).
    arrows: Vec<FpMatrix>,
}

impl MatrixRep {
    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Per-vertex dimensions (the dimension vector).
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// The matrix of the arrow `v -> v+1`, vertices numbered from 1.
    pub fn arrow(&self, v: u32) -> &FpMatrix {
        &self.arrows[v as usize - 1]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// Realizes a module as the uniserial representation with one basis
/// vector per Loewy layer; layer `t` sits at vertex `top + t` and each
/// arrow shifts layers down by one.
pub fn realize(alg: &Algebra, m: &IndecModule, p: u64) -> MatrixRep {
    let n = alg.n() as usize;
    let dims: Vec<usize> = alg.dim_vector(m).iter().map(|&x| x as usize).collect();
    // layer_index[t] = row index of layer t inside its vertex space.
    let mut per_vertex_seen = alloc::vec![0usize; n];
    let mut layer_slot = Vec::with_capacity(m.len() as usize);
    let mut layer_vertex = Vec::with_capacity(m.len() as usize);
    for t in 0..m.len() {
        let v = alg.vertex(m.top() as i64 + t as i64) as usize - 1;
        layer_vertex.push(v);
        layer_slot.push(per_vertex_seen[v]);
        per_vertex_seen[v] += 1;
    }
    let mut arrows: Vec<FpMatrix> = (0..n)
        .map(|v| FpMatrix::zero(dims[(v + 1) % n], dims[v], p))
        .collect();
    for t in 0..m.len() as usize - 1 {
        let v = layer_vertex[t];
        debug_assert_eq!(layer_vertex[t + 1], (v + 1) % n);
        arrows[v].set(layer_slot[t + 1], layer_slot[t], 1);
    }
    MatrixRep { p, dims, arrows }
}

/// Dimension of `Hom(A, B)` as the nullity of the intertwining system
/// `phi_{v+1} a_v^A = a_v^B phi_v`.
pub fn hom_dim(a: &MatrixRep, b: &MatrixRep) -> Result<u32> {
    Ok(hom_basis(a, b)?.len() as u32)
}

/// Dimension of the stable Hom space: Hom minus the maps factoring
/// through the projective cover of `N` (for a uniserial target, every map
/// from a projective lifts through the cover).
pub fn stable_hom_dim(alg: &Algebra, m: &IndecModule, n: &IndecModule, p: u64) -> Result<u32> {
    for x in [m, n] {
        if alg.is_projective(x) {
            return Err(Error::ProjectiveModule { top: x.top(), len: x.len() });
        }
    }
    let rep_m = realize(alg, m, p);
    let rep_n = realize(alg, n, p);
    let cover = alg.projective(n.top()).expect("projective cover exists");
    let rep_p = realize(alg, &cover, p);

    let total = hom_dim(&rep_m, &rep_n)?;
    let through_cover = hom_basis(&rep_m, &rep_p)?;
    if through_cover.is_empty() {
        return Ok(total);
    }

    // pi: P_N -> N keeps layer t for t < len(N), kills the rest.
    let pi = cover_projection(alg, n, p);
    // Compose each basis map with pi and measure the rank of the image
    // inside the coordinate space of Hom(M, N).
    let coords = coord_layout(&rep_m, &rep_n);
    let mut composed = FpMatrix::zero(through_cover.len(), coords.total, p);
    for (row, g) in through_cover.iter().enumerate() {
        for v in 0..alg.n() as usize {
            // (pi compose g)_v = pi_v * g_v
            let prod = pi[v].mul(&g[v]);
            for r in 0..prod.rows {
                for c in 0..prod.cols {
                    let val = prod.get(r, c);
                    if val != 0 {
                        composed.set(row, coords.offset(v, r, c), val);
                    }
                }
            }
        }
    }
    Ok(total - composed.rank() as u32)
}

/// Per-vertex matrices of the projective cover map `P_{top(N)} -> N`.
fn cover_projection(alg: &Algebra, n: &IndecModule, p: u64) -> Vec<FpMatrix> {
    let nv = alg.n() as usize;
    let cover = alg.projective(n.top()).expect("valid projective");
    let rep_p = realize(alg, &cover, p);
    let rep_n = realize(alg, n, p);
    let mut mats: Vec<FpMatrix> = (0..nv)
        .map(|v| FpMatrix::zero(rep_n.dims[v], rep_p.dims[v], p))
        .collect();
    // Both modules share the top vertex, so layer t occupies the same slot
    // inside its vertex space in both realizations.
    let mut per_vertex_seen = alloc::vec![0usize; nv];
    for t in 0..cover.len() {
        let v = alg.vertex(n.top() as i64 + t as i64) as usize - 1;
        let slot = per_vertex_seen[v];
        per_vertex_seen[v] += 1;
        if t < n.len() {
            mats[v].set(slot, slot, 1);
        }
    }
    mats
}

struct CoordLayout {
    offsets: Vec<usize>,
    cols_b: Vec<usize>,
    total: usize,
}

impl CoordLayout {
    fn offset(&self, v: usize, row: usize, col: usize) -> usize {
        self.offsets[v] + row * self.cols_b[v] + col
    }
}

/// Flat coordinates for a per-vertex family of `dimB_v x dimA_v` matrices.
fn coord_layout(a: &MatrixRep, b: &MatrixRep) -> CoordLayout {
    let mut offsets = Vec::with_capacity(a.dims.len());
    let mut cols_b = Vec::with_capacity(a.dims.len());
    let mut total = 0usize;
    for v in 0..a.dims.len() {
        offsets.push(total);
        cols_b.push(a.dims[v]);
        total += a.dims[v] * b.dims[v];
    }
    CoordLayout { offsets, cols_b, total }
}

/// Basis of `Hom(A, B)`, each element a per-vertex family of matrices.
fn hom_basis(a: &MatrixRep, b: &MatrixRep) -> Result<Vec<Vec<FpMatrix>>> {
    if a.dims.len() != b.dims.len() {
        return Err(Error::RepMismatch(alloc::format!(
            "vertex counts differ: {} vs {}",
            a.dims.len(),
            b.dims.len()
        )));
    }
    if a.p != b.p {
        return Err(Error::RepMismatch(alloc::format!("fields differ: {} vs {}", a.p, b.p)));
    }
    let n = a.dims.len();
    let p = a.p;
    let layout = coord_layout(a, b);

    // One block of equations per arrow: phi_{v+1} a_v - b_v phi_v = 0,
    // i.e. dimB_{v+1} x dimA_v scalar equations.
    let eq_count: usize = (0..n).map(|v| b.dims[(v + 1) % n] * a.dims[v]).sum();
    let mut system = FpMatrix::zero(eq_count, layout.total, p);
    let mut eq = 0usize;
    for v in 0..n {
        let w = (v + 1) % n;
        for r in 0..b.dims[w] {
            for c in 0..a.dims[v] {
                // sum_s phi_w[r][s] * aA[s][c]  -  sum_s bB[r][s] * phi_v[s][c] = 0
                for s in 0..a.dims[w] {
                    let coeff = a.arrows[v].get(s, c);
                    if coeff != 0 {
                        system.add_at(eq, layout.offset(w, r, s), coeff);
                    }
                }
                for s in 0..b.dims[v] {
                    let coeff = b.arrows[v].get(r, s);
                    if coeff != 0 {
                        system.add_at(eq, layout.offset(v, s, c), p - coeff);
                    }
                }
                eq += 1;
            }
        }
    }
    let null = system.nullspace();
    Ok(null
        .into_iter()
        .map(|vecn| {
            (0..n)
                .map(|v| {
                    let mut m = FpMatrix::zero(b.dims[v], a.dims[v], p);
                    for r in 0..b.dims[v] {
                        for c in 0..a.dims[v] {
                            m.set(r, c, vecn[layout.offset(v, r, c)]);
                        }
                    }
                    m
                })
                .collect()
        })
        .collect())
}

/// Dense matrix over `F_p` with row-reduction, rank and nullspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    p: u64,
    data: Vec<u64>,
}

impl FpMatrix {
    pub fn zero(rows: usize, cols: usize, p: u64) -> Self {
        FpMatrix { rows, cols, p, data: alloc::vec![0; rows * cols] }
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, val: u64) {
        self.data[r * self.cols + c] = val % self.p;
    }

    fn add_at(&mut self, r: usize, c: usize, val: u64) {
        let idx = r * self.cols + c;
        self.data[idx] = (self.data[idx] + val) % self.p;
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| self.get(r, c) == u64::from(r == c))
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    fn mul(&self, other: &FpMatrix) -> FpMatrix {
        debug_assert_eq!(self.cols, other.rows);
        let mut out = FpMatrix::zero(self.rows, other.cols, self.p);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    out.add_at(r, c, a * other.get(k, c) % self.p);
                }
            }
        }
        out
    }

    fn inv_mod(&self, x: u64) -> u64 {
        // Fermat: p is prime and x nonzero mod p.
        pow_mod(x, self.p - 2, self.p)
    }

    /// In-place reduction to row echelon form; returns pivot columns.
    fn echelon(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..self.cols {
            let Some(pr) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            for c in 0..self.cols {
                self.data.swap(row * self.cols + c, pr * self.cols + c);
            }
            let inv = self.inv_mod(self.get(row, col));
            for c in col..self.cols {
                let v = self.get(row, c) * inv % self.p;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && self.get(r, col) != 0 {
                    let factor = self.get(r, col);
                    for c in col..self.cols {
                        let v = (self.get(r, c) + (self.p - factor) * self.get(row, c)) % self.p;
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().echelon().len()
    }

    /// Basis of the right nullspace `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let mut reduced = self.clone();
        let pivots = reduced.echelon();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = alloc::vec![None; self.cols];
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = Some(i);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut x = alloc::vec![0u64; self.cols];
            x[free] = 1;
            for (prow, &pcol) in pivots.iter().enumerate() {
                let coeff = reduced.get(prow, free);
                if coeff != 0 {
                    x[pcol] = self.p - coeff;
                }
            }
            basis.push(x);
        }
        basis
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// First disagreement found by a certification sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub n: u32,
    pub ell: u32,
    pub from: IndecModule,
    pub to: IndecModule,
    pub what: &'static str,
    pub combinatorial: u32,
    pub oracle: u32,
}

impl core::fmt::Display for Counterexample {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "A_{}^{} {}: {} -> {}: combinatorial {} vs oracle {}",
            self.n, self.ell, self.what, self.from, self.to, self.combinatorial, self.oracle
        )
    }
}

/// Statistics from a completed sweep.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweepStats {
    pub algebras: u64,
    pub hom_pairs: u64,
    pub stable_pairs: u64,
}

/// Sweeps every algebra with `n <= max_n`, `ell <= max_ell` and compares
/// the layer-counting Hom formulas against the matrix oracle over each
/// given prime. Hom is checked on all ordered pairs (projectives
/// included), stable Hom on all non-projective ordered pairs.
pub fn agreement_sweep(
    max_n: u32,
    max_ell: u32,
    primes: &[u64],
) -> core::result::Result<SweepStats, Counterexample> {
    sweep_against(max_n, max_ell, primes, stable_hom::hom_dim, |alg, m, n| {
        stable_hom::stable_hom_dim(alg, m, n).expect("non-projective pair")
    })
}

/// Sweep with injectable combinatorial routes, so tests can prove the
/// sweep actually detects disagreements.
pub(crate) fn sweep_against(
    max_n: u32,
    max_ell: u32,
    primes: &[u64],
    hom_route: impl Fn(&Algebra, &IndecModule, &IndecModule) -> u32,
    stable_route: impl Fn(&Algebra, &IndecModule, &IndecModule) -> u32,
) -> core::result::Result<SweepStats, Counterexample> {
    let mut stats = SweepStats::default();
    for n in 1..=max_n {
        for ell in 1..=max_ell {
            let alg = Algebra::new(n, ell).expect("positive parameters");
            stats.algebras += 1;
            let all = alg.all_modules();
            let nonproj = alg.nonprojective_modules();
            for &p in primes {
                let reps: Vec<MatrixRep> = all.iter().map(|m| realize(&alg, m, p)).collect();
                for (im, m) in all.iter().enumerate() {
                    for (ix, x) in all.iter().enumerate() {
                        let by_oracle =
                            hom_dim(&reps[im], &reps[ix]).expect("same algebra and field");
                        let by_formula = hom_route(&alg, m, x);
                        stats.hom_pairs += 1;
                        if by_formula != by_oracle {
                            return Err(Counterexample {
                                n,
                                ell,
                                from: *m,
                                to: *x,
                                what: "hom_dim",
                                combinatorial: by_formula,
                                oracle: by_oracle,
                            });
                        }
                    }
                }
                for m in &nonproj {
                    for x in &nonproj {
                        let by_oracle =
                            stable_hom_dim(&alg, m, x, p).expect("non-projective pair");
                        let by_formula = stable_route(&alg, m, x);
                        stats.stable_pairs += 1;
                        if by_formula != by_oracle {
                            return Err(Counterexample {
                                n,
                                ell,
                                from: *m,
                                to: *x,
                                what: "stable_hom_dim",
                                combinatorial: by_formula,
                                oracle: by_oracle,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(stats)
}
