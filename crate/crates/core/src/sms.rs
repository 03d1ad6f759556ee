//! Construction of the sms families from non-crossing partitions, the
//! covering lift to general `A_n^ell`, partition extraction, family
//! equality predicates, and the family-level (co)syzygy action.
//!
//! Over a symmetric algebra `A_n^{dn}`, a partition `p` of `{1..n}` and an
//! index `k` produce two families, each with one member per top vertex
//! `i`, with socle `sigma(i)`:
//!
//! * long type: multiplicity index `d - 1` whenever the hat interval of
//!   `i` meets the block of `k`, else `0`;
//! * short type: the same, except the member at `i = k` is forced to `0`.
//!
//! Over a general `A_n^ell` the families are built over the base
//! `A_e^ell`, `e = gcd(n, ell)`, and pulled back through the covering
//! functor, concretely: each base member with top `i` lifts to the
//! `nu`-orbit `{i, i+e, ..., i+n-e}` at the same length.

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{Algebra, IndecModule};
use crate::error::{Error, Result};
use crate::noncrossing::NonCrossingPartition;

/// A finite set of indecomposables proposed as an sms: pairwise distinct,
/// all non-projective, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SmsCandidate {
    algebra: Algebra,
    modules: Vec<IndecModule>,
}

impl SmsCandidate {
    /// Validates membership: every module must live over `alg`, be
    /// non-projective, and occur once.
    pub fn new(alg: Algebra, mut modules: Vec<IndecModule>) -> Result<Self> {
        for m in &modules {
            // Re-derive through the algebra to catch out-of-range values.
            alg.module(m.top(), m.len())?;
            if alg.is_projective(m) {
                return Err(Error::ProjectiveModule { top: m.top(), len: m.len() });
            }
        }
        modules.sort();
        for w in modules.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateModule { top: w[0].top(), len: w[0].len() });
            }
        }
        Ok(SmsCandidate { algebra: alg, modules })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    /// Members in canonical order.
    pub fn modules(&self) -> &[IndecModule] {
        &self.modules
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn contains(&self, m: &IndecModule) -> bool {
        self.modules.binary_search(m).is_ok()
    }
}

/// Which of the two family types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilyKind {
    Long,
    Short,
}

impl FamilyKind {
    pub fn letter(&self) -> char {
        match self {
            FamilyKind::Long => 'L',
            FamilyKind::Short => 'S',
        }
    }
}

/// A `(type, p, k)` label naming a constructed family.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FamilyLabel {
    pub kind: FamilyKind,
    pub partition: NonCrossingPartition,
    pub k: u32,
}

impl FamilyLabel {
    pub fn new(kind: FamilyKind, partition: NonCrossingPartition, k: u32) -> Self {
        FamilyLabel { kind, partition, k }
    }

    /// Header form `L[p={1|2},k=1]` used by the text rendering.
    pub fn header(&self) -> String {
        alloc::format!("{}[p={},k={}]", self.kind.letter(), self.partition, self.k)
    }
}

impl core::fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.header())
    }
}

fn check_build_inputs(alg: &Algebra, p: &NonCrossingPartition, k: u32) -> Result<u32> {
    let d = alg.symmetric_d()?;
    if p.ground_size() != alg.n() {
        return Err(Error::OutOfRange {
            what: "partition ground size",
            value: p.ground_size(),
            max: alg.n(),
        });
    }
    if k < 1 || k > alg.n() {
        return Err(Error::OutOfRange { what: "family index k", value: k, max: alg.n() });
    }
    Ok(d)
}

fn build_family(
    alg: &Algebra,
    p: &NonCrossingPartition,
    k: u32,
    short_at_k: bool,
) -> Result<SmsCandidate> {
    let d = check_build_inputs(alg, p, k)?;
    let block_k = p.block_of(k);
    let mut modules = Vec::with_capacity(alg.n() as usize);
    for i in 1..=alg.n() {
        let hat = p.hat(i)?;
        let meets = hat.iter().any(|v| block_k.binary_search(v).is_ok());
        let l = if !meets || (short_at_k && i == k) { 0 } else { d - 1 };
        modules.push(alg.from_symbol(i, p.successor(i), l)?);
    }
    SmsCandidate::new(*alg, modules)
}

/// The long-type family over a symmetric algebra: one member per top
/// vertex, the whole block of `k` at maximal multiplicity.
pub fn build_long(alg: &Algebra, p: &NonCrossingPartition, k: u32) -> Result<SmsCandidate> {
    build_family(alg, p, k, false)
}

/// The short-type family: as long-type, but the member at `k` itself is
/// forced to minimal multiplicity.
pub fn build_short(alg: &Algebra, p: &NonCrossingPartition, k: u32) -> Result<SmsCandidate> {
    build_family(alg, p, k, true)
}

/// Dispatches on the family kind.
pub fn build(alg: &Algebra, label: &FamilyLabel) -> Result<SmsCandidate> {
    match label.kind {
        FamilyKind::Long => build_long(alg, &label.partition, label.k),
        FamilyKind::Short => build_short(alg, &label.partition, label.k),
    }
}

/// Pulls a family over the base `A_e^ell` back through the covering: each
/// member with top `i` becomes the modules with tops `i, i+e, ..., i+n-e`
/// at the same length. The result has `n` members and is a union of
/// `nu`-orbits.
pub fn lift(target: &Algebra, family: &SmsCandidate) -> Result<SmsCandidate> {
    let e = target.e();
    let base = family.algebra();
    if base.n() != e || base.ell() != target.ell() {
        return Err(Error::CoveringMismatch {
            expected_e: e,
            found_n: base.n(),
            ell: target.ell(),
        });
    }
    let mut modules = Vec::with_capacity(target.n() as usize);
    for m in family.modules() {
        for s in 0..target.n() / e {
            modules.push(
                target.module(target.vertex(m.top() as i64 + (s * e) as i64), m.len())?,
            );
        }
    }
    SmsCandidate::new(*target, modules)
}

/// Builds the (possibly lifted) family over an arbitrary `A_n^ell`: the
/// family is constructed over the base `A_e^ell` and lifted. When `n = e`
/// the lift is the identity.
pub fn build_lifted(target: &Algebra, label: &FamilyLabel) -> Result<SmsCandidate> {
    let base = Algebra::new(target.e(), target.ell())?;
    lift(target, &build(&base, label)?)
}

/// The covering image `F(S)`: tops reduced mod `e`, lengths kept. For a
/// Nakayama-stable set this collapses each `nu`-orbit to one module over
/// `A_e^ell`.
pub fn covering_image(s: &SmsCandidate) -> Result<SmsCandidate> {
    let alg = s.algebra();
    let base = Algebra::new(alg.e(), alg.ell())?;
    let mut modules: Vec<IndecModule> = s
        .modules()
        .iter()
        .map(|m| base.module(crate::algebra::overline(m.top() as i64, base.n()), m.len()))
        .collect::<Result<_>>()?;
    modules.sort();
    modules.dedup();
    SmsCandidate::new(base, modules)
}

/// Reads the non-crossing partition of an sms: vertex `i` is joined to
/// the socle of the member with top `i`, and the blocks are the cycles of
/// that successor map. Returns the partition together with the per-block
/// cyclic orderings (each cycle listed from its minimal element), since
/// the anti-clockwise traversal is data the plain partition loses.
pub fn extract_partition(
    s: &SmsCandidate,
) -> Result<(NonCrossingPartition, Vec<Vec<u32>>)> {
    if let Err(failure) = crate::verifier::check_sms(s) {
        return Err(Error::NotAnSms(alloc::format!("{failure}")));
    }
    let alg = s.algebra();
    let n = alg.n();
    let mut socle_of_top = alloc::vec![0u32; n as usize + 1];
    for m in s.modules() {
        if socle_of_top[m.top() as usize] != 0 {
            return Err(Error::NotAnSms(alloc::format!(
                "two members share top vertex {}",
                m.top()
            )));
        }
        socle_of_top[m.top() as usize] = alg.socle(m);
    }
    if let Some(i) = (1..=n).find(|&i| socle_of_top[i as usize] == 0) {
        return Err(Error::NotAnSms(alloc::format!("no member has top vertex {i}")));
    }
    let mut used = alloc::vec![false; n as usize + 1];
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    for start in 1..=n {
        if used[start as usize] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut w = start;
        loop {
            used[w as usize] = true;
            cycle.push(w);
            w = socle_of_top[w as usize];
            if w == start {
                break;
            }
        }
        cycles.push(cycle);
    }
    let partition = NonCrossingPartition::new(n, cycles.clone())?;
    Ok((partition, cycles))
}

fn check_equality_inputs(
    alg: &Algebra,
    p: &NonCrossingPartition,
    k: u32,
    p2: &NonCrossingPartition,
    k2: u32,
) -> Result<()> {
    let e = alg.e();
    for q in [p, p2] {
        if q.ground_size() != e {
            return Err(Error::OutOfRange {
                what: "partition ground size",
                value: q.ground_size(),
                max: e,
            });
        }
    }
    for k in [k, k2] {
        if k < 1 || k > e {
            return Err(Error::OutOfRange { what: "family index k", value: k, max: e });
        }
    }
    Ok(())
}

/// Whether the long-type families at `(p, k)` and `(p', k')` coincide:
/// `p = p'` and the two indices share a block. For `ell = e` all families
/// with the same partition collapse.
pub fn families_equal_long(
    alg: &Algebra,
    p: &NonCrossingPartition,
    k: u32,
    p2: &NonCrossingPartition,
    k2: u32,
) -> Result<bool> {
    check_equality_inputs(alg, p, k, p2, k2)?;
    if p != p2 {
        return Ok(false);
    }
    if alg.ell() == alg.e() {
        return Ok(true);
    }
    Ok(p.block_of(k) == p.block_of(k2))
}

/// Whether the short-type families at `(p, k)` and `(p', k')` coincide:
/// `p = p'` and either `k = k'`, or the hats are disjoint and merging the
/// two blocks stays non-crossing.
pub fn families_equal_short(
    alg: &Algebra,
    p: &NonCrossingPartition,
    k: u32,
    p2: &NonCrossingPartition,
    k2: u32,
) -> Result<bool> {
    check_equality_inputs(alg, p, k, p2, k2)?;
    if p != p2 {
        return Ok(false);
    }
    if alg.ell() == alg.e() {
        return Ok(true);
    }
    if k == k2 {
        return Ok(true);
    }
    let hat_k = p.hat(k)?;
    let hat_k2 = p.hat(k2)?;
    if hat_k.iter().any(|v| hat_k2.contains(v)) {
        return Ok(false);
    }
    Ok(p.join_blocks(k, k2)?.is_noncrossing())
}

/// Memberwise syzygy of a family.
pub fn syzygy_family(s: &SmsCandidate) -> Result<SmsCandidate> {
    let alg = *s.algebra();
    let modules = s.modules().iter().map(|m| alg.syzygy(m)).collect::<Result<Vec<_>>>()?;
    SmsCandidate::new(alg, modules)
}

/// Memberwise cosyzygy of a family.
pub fn cosyzygy_family(s: &SmsCandidate) -> Result<SmsCandidate> {
    let alg = *s.algebra();
    let modules = s.modules().iter().map(|m| alg.cosyzygy(m)).collect::<Result<Vec<_>>>()?;
    SmsCandidate::new(alg, modules)
}

/// Transports a family label along the syzygy functor:
/// `Omega S_{p,i} = L_{m1(p),i}` and `Omega L_{p,i} = S_{m1(p), sigma(i)+1}`.
pub fn syzygy_label(label: &FamilyLabel) -> FamilyLabel {
    let p = &label.partition;
    match label.kind {
        FamilyKind::Short => FamilyLabel::new(FamilyKind::Long, p.m1(), label.k),
        FamilyKind::Long => {
            let next = crate::algebra::overline(
                p.successor(label.k) as i64 + 1,
                p.ground_size(),
            );
            FamilyLabel::new(FamilyKind::Short, p.m1(), next)
        }
    }
}

/// Transports a family label along the cosyzygy functor:
/// `Omega^{-1} L_{p,i} = S_{m2(p),i}` and `Omega^{-1} S_{p,i} = L_{m2(p), sigma(i)}`.
pub fn cosyzygy_label(label: &FamilyLabel) -> FamilyLabel {
    let p = &label.partition;
    match label.kind {
        FamilyKind::Long => FamilyLabel::new(FamilyKind::Short, p.m2(), label.k),
        FamilyKind::Short => {
            FamilyLabel::new(FamilyKind::Long, p.m2(), p.successor(label.k))
        }
    }
}
