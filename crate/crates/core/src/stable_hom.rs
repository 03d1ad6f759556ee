//! Hom and stable Hom dimensions between indecomposables, by layer
//! counting.
//!
//! Every nonzero map between uniserial modules has image `rad^t(N)` for
//! some `t`, and the maps with image inside `rad^t(N)` form a flag, so the
//! Hom dimension is the number of admissible layers `t`. A layer map
//! factors through a projective exactly when `len(M) + t >= ell + 1`;
//! dropping those layers gives the stable dimension. Both formulas are
//! certified against the linear-algebra oracle in `crate::oracle` rather
//! than trusted on derivation.

use alloc::vec::Vec;

use crate::algebra::{Algebra, IndecModule};
use crate::error::{Error, Result};

/// Dimension of `Hom(M, N)`: the number of layers `t` of `N` where an
/// image of `M` can start. Projectives are allowed on either side.
pub fn hom_dim(alg: &Algebra, m: &IndecModule, n: &IndecModule) -> u32 {
    admissible_layers(alg, m, n).count() as u32
}

/// Layers `t` of `N` admitting a surjection `M ->> rad^t(N)`, i.e. with
/// matching top and `len(N) - t <= len(M)`.
fn admissible_layers<'a>(
    alg: &'a Algebra,
    m: &'a IndecModule,
    n: &'a IndecModule,
) -> impl Iterator<Item = u32> + 'a {
    let (m, n) = (*m, *n);
    (0..n.len()).filter(move |&t| {
        alg.vertex(n.top() as i64 + t as i64) == m.top() && n.len() - t <= m.len()
    })
}

/// Whether a nonzero map `M -> N` with image `rad^t(N)` factors through a
/// projective: true iff `len(M) + t >= ell + 1`. The predicate depends
/// only on `len(M)` and `t`; existence of the map is the caller's business.
#[allow(clippy::int_plus_one)] // the threshold is len(M) + t >= ell + 1
pub fn factors_through_projective(alg: &Algebra, m: &IndecModule, t: u32) -> bool {
    m.len() as u64 + t as u64 >= alg.ell() as u64 + 1
}

/// Dimension of the stable Hom space: admissible layers that do not
/// factor through a projective.
pub fn stable_hom_dim(alg: &Algebra, m: &IndecModule, n: &IndecModule) -> Result<u32> {
    for x in [m, n] {
        if alg.is_projective(x) {
            return Err(Error::ProjectiveModule { top: x.top(), len: x.len() });
        }
    }
    Ok(admissible_layers(alg, m, n)
        .filter(|&t| !factors_through_projective(alg, m, t))
        .count() as u32)
}

/// Whether `M` is a stable brick, i.e. its stable endomorphism space is
/// one-dimensional.
pub fn is_stable_brick(alg: &Algebra, m: &IndecModule) -> Result<bool> {
    Ok(stable_hom_dim(alg, m, m)? == 1)
}

/// Whether the given modules form an orthogonal system: every member a
/// stable brick and stable Hom zero in both directions between distinct
/// members. Errors on duplicate or projective members.
pub fn is_orthogonal_system(alg: &Algebra, set: &[IndecModule]) -> Result<bool> {
    let mut sorted: Vec<IndecModule> = set.to_vec();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateModule { top: w[0].top(), len: w[0].len() });
        }
    }
    for m in set {
        if !is_stable_brick(alg, m)? {
            return Ok(false);
        }
    }
    for m in set {
        for n in set {
            if m != n && stable_hom_dim(alg, m, n)? != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Closed form for whether the whole `nu`-orbit of `M` is an orthogonal
/// system: `len(M) <= e` or `ell + 1 - e <= len(M) <= ell`.
pub fn nu_orbit_orthogonal(alg: &Algebra, m: &IndecModule) -> Result<bool> {
    if alg.is_projective(m) {
        return Err(Error::ProjectiveModule { top: m.top(), len: m.len() });
    }
    let e = alg.e();
    Ok(m.len() <= e || alg.ell() + 1 - e <= m.len())
}
