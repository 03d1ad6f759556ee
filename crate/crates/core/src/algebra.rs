//! The algebra `A_n^ell` and arithmetic on its indecomposable modules.
//!
//! Conventions fixed once and certified by the linear-algebra oracle:
//! arrows run `i -> i+1 (mod n)`, modules are left modules, and the
//! projective `P_i` has radical layers `S_i, S_{i+1}, ..., S_{i+ell}` from
//! top to socle. Vertex arithmetic always normalizes into `1..=n`.
//!
//! An indecomposable is stored canonically as `(top, len)`; the symbol
//! `M^i_{j,k}` (top `i`, socle `j`, multiplicity of `S_i` equal to `k+1`)
//! is a derived view, related by `len = n*k + [j - i) + 1` where `[x)` is
//! the least non-negative residue of `x` mod `n`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// The self-injective Nakayama algebra with `n` simples and Loewy length
/// `ell + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Algebra {
    n: u32,
    ell: u32,
}

/// An indecomposable module, canonically `(top vertex, Loewy length)`.
///
/// `len == ell + 1` means the module is projective (and injective).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndecModule {
    top: u32,
    len: u32,
}

/// The symbol view `M^top_{soc, mult}` of an indecomposable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Symbol {
    /// Top vertex `i`.
    pub top: u32,
    /// Socle vertex `j`.
    pub soc: u32,
    /// Multiplicity index `k`: the simple `S_i` occurs `k + 1` times.
    pub mult: u32,
}

// No `is_empty`: the zero module is not representable, len >= 1 always.
#[allow(clippy::len_without_is_empty)]
impl IndecModule {
    /// Top vertex in `1..=n`.
    pub fn top(&self) -> u32 {
        self.top
    }

    /// Loewy length (number of composition factors).
    pub fn len(&self) -> u32 {
        self.len
    }
}

/// Least positive representative of `x` modulo `n`, in `1..=n`: the
/// normalization applied to every vertex index.
pub fn overline(x: i64, n: u32) -> u32 {
    ((x - 1).rem_euclid(n as i64) + 1) as u32
}

/// Forward cyclic distance from `a` to `b` on `n` vertices: the least
/// non-negative residue `[b - a)`.
pub fn fwd_dist(a: u32, b: u32, n: u32) -> u32 {
    (b + n - a) % n
}

/// The forward cyclic interval `{a, a+1, ..., b}` on `n` vertices.
pub fn fwd_interval(a: u32, b: u32, n: u32) -> Vec<u32> {
    (0..=fwd_dist(a, b, n)).map(|t| overline(a as i64 + t as i64, n)).collect()
}

impl Algebra {
    /// Builds `A_n^ell`; both parameters must be positive.
    pub fn new(n: u32, ell: u32) -> Result<Self> {
        if n == 0 || ell == 0 {
            return Err(Error::InvalidAlgebra { n, ell });
        }
        Ok(Algebra { n, ell })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// `gcd(n, ell)`, the size of the ground set for partitions.
    pub fn e(&self) -> u32 {
        gcd(self.n, self.ell)
    }

    /// `ell / n` when the algebra is symmetric (`n` divides `ell`).
    pub fn d(&self) -> Option<u32> {
        self.ell.is_multiple_of(self.n).then_some(self.ell / self.n)
    }

    /// Requires symmetry and returns `d = ell / n`.
    pub fn symmetric_d(&self) -> Result<u32> {
        self.d().ok_or(Error::NotSymmetric { n: self.n, ell: self.ell })
    }

    /// Loewy length of the projectives, `ell + 1`.
    pub fn projective_len(&self) -> u32 {
        self.ell + 1
    }

    /// Normalizes an integer to a vertex in `1..=n`.
    pub fn vertex(&self, x: i64) -> u32 {
        overline(x, self.n)
    }

    /// The module with the given top vertex and Loewy length.
    pub fn module(&self, top: u32, len: u32) -> Result<IndecModule> {
        if top < 1 || top > self.n || len < 1 || len > self.ell + 1 {
            return Err(Error::InvalidModule { top, len, n: self.n, ell: self.ell });
        }
        Ok(IndecModule { top, len })
    }

    /// The simple module `S_i`.
    pub fn simple(&self, i: u32) -> Result<IndecModule> {
        self.module(i, 1)
    }

    /// The projective cover `P_i` of `S_i`.
    pub fn projective(&self, i: u32) -> Result<IndecModule> {
        self.module(i, self.ell + 1)
    }

    pub fn is_projective(&self, m: &IndecModule) -> bool {
        m.len == self.ell + 1
    }

    fn require_nonprojective(&self, m: &IndecModule) -> Result<()> {
        if self.is_projective(m) {
            Err(Error::ProjectiveModule { top: m.top, len: m.len })
        } else {
            Ok(())
        }
    }

    /// Socle vertex: `top + len - 1` normalized to `1..=n`.
    pub fn socle(&self, m: &IndecModule) -> u32 {
        self.vertex(m.top as i64 + m.len as i64 - 1)
    }

    /// The module `M^i_{j,k}`: top `i`, socle `j`, with `S_i` occurring
    /// `k + 1` times, so `len = n*k + [j - i) + 1`.
    pub fn from_symbol(&self, i: u32, j: u32, k: u32) -> Result<IndecModule> {
        if i < 1 || i > self.n {
            return Err(Error::OutOfRange { what: "top vertex", value: i, max: self.n });
        }
        if j < 1 || j > self.n {
            return Err(Error::OutOfRange { what: "socle vertex", value: j, max: self.n });
        }
        let len = self.n as u64 * k as u64 + fwd_dist(i, j, self.n) as u64 + 1;
        if len > (self.ell + 1) as u64 {
            return Err(Error::InvalidModule { top: i, len: len as u32, n: self.n, ell: self.ell });
        }
        Ok(IndecModule { top: i, len: len as u32 })
    }

    /// The symbol view of a module; inverse of [`Algebra::from_symbol`].
    pub fn to_symbol(&self, m: &IndecModule) -> Symbol {
        let soc = self.socle(m);
        let mult = (m.len - 1 - fwd_dist(m.top, soc, self.n)) / self.n;
        Symbol { top: m.top, soc, mult }
    }

    /// Number of composition factors isomorphic to each simple; entry `v-1`
    /// counts `S_v`. Entries sum to `len`.
    pub fn dim_vector(&self, m: &IndecModule) -> Vec<u32> {
        let mut dims = alloc::vec![0u32; self.n as usize];
        for t in 0..m.len {
            let v = self.vertex(m.top as i64 + t as i64);
            dims[v as usize - 1] += 1;
        }
        dims
    }

    /// `rad^t(M)`: strips `t` top layers; `None` once `t >= len` (the zero
    /// module is not representable).
    pub fn radical_power(&self, m: &IndecModule, t: u32) -> Option<IndecModule> {
        (t < m.len).then(|| IndecModule {
            top: self.vertex(m.top as i64 + t as i64),
            len: m.len - t,
        })
    }

    /// Inverse Auslander-Reiten translate `tau^{-1}`: shifts the top by one
    /// arrow, keeping the length. Defined on non-projectives only.
    pub fn ar_translate_inverse(&self, m: &IndecModule) -> Result<IndecModule> {
        self.require_nonprojective(m)?;
        Ok(IndecModule { top: self.vertex(m.top as i64 + 1), len: m.len })
    }

    /// Nakayama functor `nu = tau^{-ell}` on non-projectives: shifts the top
    /// by `ell`.
    pub fn nakayama(&self, m: &IndecModule) -> Result<IndecModule> {
        self.require_nonprojective(m)?;
        Ok(IndecModule { top: self.vertex(m.top as i64 + self.ell as i64), len: m.len })
    }

    /// The `nu`-orbit of `m`: tops `top, top+e, ..., top+n-e`, all with the
    /// same length. Sorted, with `n/e` elements.
    pub fn nu_orbit(&self, m: &IndecModule) -> Result<Vec<IndecModule>> {
        self.require_nonprojective(m)?;
        let e = self.e();
        let mut orbit: Vec<IndecModule> = (0..self.n / e)
            .map(|s| IndecModule {
                top: self.vertex(m.top as i64 + (s * e) as i64),
                len: m.len,
            })
            .collect();
        orbit.sort();
        Ok(orbit)
    }

    /// Syzygy `Omega`: kernel of the projective cover, `(top + len, ell + 1 - len)`.
    pub fn syzygy(&self, m: &IndecModule) -> Result<IndecModule> {
        self.require_nonprojective(m)?;
        Ok(IndecModule {
            top: self.vertex(m.top as i64 + m.len as i64),
            len: self.ell + 1 - m.len,
        })
    }

    /// Cosyzygy `Omega^{-1}`: two-sided inverse of [`Algebra::syzygy`].
    pub fn cosyzygy(&self, m: &IndecModule) -> Result<IndecModule> {
        self.require_nonprojective(m)?;
        Ok(IndecModule {
            top: self.vertex(m.top as i64 + m.len as i64 - self.ell as i64 - 1),
            len: self.ell + 1 - m.len,
        })
    }

    /// All indecomposables, projectives included, in canonical order.
    pub fn all_modules(&self) -> Vec<IndecModule> {
        let mut out = Vec::with_capacity((self.n * (self.ell + 1)) as usize);
        for top in 1..=self.n {
            for len in 1..=self.ell + 1 {
                out.push(IndecModule { top, len });
            }
        }
        out
    }

    /// All non-projective indecomposables (`len <= ell`), canonical order.
    pub fn nonprojective_modules(&self) -> Vec<IndecModule> {
        let mut out = Vec::with_capacity((self.n * self.ell) as usize);
        for top in 1..=self.n {
            for len in 1..=self.ell {
                out.push(IndecModule { top, len });
            }
        }
        out
    }

    /// Renders the symbol form `M^i_j,k`.
    pub fn symbol_string(&self, m: &IndecModule) -> String {
        let s = self.to_symbol(m);
        alloc::format!("M^{}_{},{}", s.top, s.soc, s.mult)
    }

    /// Parses either text form of a module: `M(top=<i>,len=<L>)` or
    /// `M^<i>_<j>,<k>`. Whitespace is ignored.
    pub fn parse_module(&self, s: &str) -> Result<IndecModule> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(alloc::format!("unrecognized module format: {s}"));
        if let Some(body) = compact.strip_prefix("M(").and_then(|r| r.strip_suffix(')')) {
            let (top_part, len_part) = body.split_once(',').ok_or_else(bad)?;
            let top = top_part.strip_prefix("top=").ok_or_else(bad)?;
            let len = len_part.strip_prefix("len=").ok_or_else(bad)?;
            let top: u32 = top.parse().map_err(|_| bad())?;
            let len: u32 = len.parse().map_err(|_| bad())?;
            self.module(top, len)
        } else if let Some(body) = compact.strip_prefix("M^") {
            let (i_part, rest) = body.split_once('_').ok_or_else(bad)?;
            let (j_part, k_part) = rest.split_once(',').ok_or_else(bad)?;
            let i: u32 = i_part.parse().map_err(|_| bad())?;
            let j: u32 = j_part.parse().map_err(|_| bad())?;
            let k: u32 = k_part.parse().map_err(|_| bad())?;
            self.from_symbol(i, j, k)
        } else {
            Err(bad())
        }
    }
}

impl fmt::Display for IndecModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M(top={},len={})", self.top, self.len)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
