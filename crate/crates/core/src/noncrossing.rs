//! Non-crossing partitions of `{1..e}` and their combinatorics.
//!
//! A partition is non-crossing when no two blocks interleave: there is no
//! `a < x < b < y` with `a, b` in one block and `x, y` in another. The
//! number of non-crossing partitions of `{1..e}` is the Catalan number
//! `C_e`, refined by block count through the Narayana numbers `N(e, k)`.
//!
//! Two pieces of structure matter downstream. First, the successor map
//! `sigma`: within each block the elements are traversed anti-clockwise,
//! and `sigma(i)` is the nearest block-mate reached by stepping backward
//! cyclically from `i` (itself for singletons). Second, the mutually
//! inverse bijections `m1` and `m2`, whose blocks are the cycles of the
//! vertex maps `w -> sigma(w) + 1` and `w -> sigma^{-1}(w) - 1`; they
//! realize the action of the (co)syzygy functor on sms families.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::algebra::{fwd_interval, overline};
use crate::error::{Error, Result};

/// A non-crossing partition of `{1..e}` in canonical form: blocks sorted
/// by minimum element, elements ascending within each block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NonCrossingPartition {
    ground: u32,
    blocks: Vec<Vec<u32>>,
}

/// Result of merging two blocks: the merge always exists as a set
/// partition, but it may cross.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JoinResult {
    NonCrossing(NonCrossingPartition),
    Crossing(Vec<Vec<u32>>),
}

impl JoinResult {
    pub fn is_noncrossing(&self) -> bool {
        matches!(self, JoinResult::NonCrossing(_))
    }
}

/// Canonicalizes raw blocks and checks they partition `{1..ground}`.
fn canonicalize(ground: u32, blocks: &[Vec<u32>]) -> Result<Vec<Vec<u32>>> {
    let mut seen = alloc::vec![false; ground as usize + 1];
    let mut canon: Vec<Vec<u32>> = Vec::with_capacity(blocks.len());
    for block in blocks {
        if block.is_empty() {
            return Err(Error::NotAPartition(String::from("empty block")));
        }
        let mut b = block.clone();
        b.sort_unstable();
        for &x in &b {
            if x < 1 || x > ground {
                return Err(Error::NotAPartition(alloc::format!(
                    "element {x} outside ground set 1..={ground}"
                )));
            }
            if seen[x as usize] {
                return Err(Error::NotAPartition(alloc::format!("element {x} repeated")));
            }
            seen[x as usize] = true;
        }
        canon.push(b);
    }
    if let Some(missing) = (1..=ground).find(|&x| !seen[x as usize]) {
        return Err(Error::NotAPartition(alloc::format!("element {missing} not covered")));
    }
    canon.sort();
    Ok(canon)
}

/// Checks two canonical (sorted) blocks for a crossing `a < x < b < y`.
fn blocks_cross(b1: &[u32], b2: &[u32]) -> bool {
    // b1 and b2 cross iff some element of b2 lies strictly between two
    // elements of b1 and some other lies outside that span's "gap".
    for w in b1.windows(2) {
        let (a, b) = (w[0], w[1]);
        let inside = b2.iter().any(|&x| a < x && x < b);
        let outside = b2.iter().any(|&y| y < a || y > b);
        if inside && outside {
            return true;
        }
    }
    false
}

/// Checks the non-crossing property for raw blocks; errors if the blocks
/// do not partition `{1..ground}` at all.
pub fn is_noncrossing(ground: u32, blocks: &[Vec<u32>]) -> Result<bool> {
    let canon = canonicalize(ground, blocks)?;
    for (idx, b1) in canon.iter().enumerate() {
        for b2 in &canon[idx + 1..] {
            if blocks_cross(b1, b2) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl NonCrossingPartition {
    /// Validates and canonicalizes the given blocks.
    pub fn new(ground: u32, blocks: Vec<Vec<u32>>) -> Result<Self> {
        if ground == 0 {
            return Err(Error::NotAPartition(String::from("empty ground set")));
        }
        if !is_noncrossing(ground, &blocks)? {
            return Err(Error::CrossingPartition(render_blocks(&canonicalize(
                ground, &blocks,
            )?)));
        }
        Ok(NonCrossingPartition { ground, blocks: canonicalize(ground, &blocks)? })
    }

    /// The all-singletons partition of `{1..e}`.
    pub fn singletons(ground: u32) -> Self {
        NonCrossingPartition {
            ground,
            blocks: (1..=ground).map(|i| alloc::vec![i]).collect(),
        }
    }

    pub fn ground_size(&self) -> u32 {
        self.ground
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    /// The block containing `i`.
    pub fn block_of(&self, i: u32) -> &[u32] {
        self.blocks
            .iter()
            .find(|b| b.binary_search(&i).is_ok())
            .expect("element in ground set")
    }

    fn check_index(&self, what: &'static str, i: u32) -> Result<()> {
        if i < 1 || i > self.ground {
            Err(Error::OutOfRange { what, value: i, max: self.ground })
        } else {
            Ok(())
        }
    }

    /// The successor `sigma(i) = k_i`: nearest block-mate stepping backward
    /// cyclically from `i`; `i` itself for singleton blocks.
    pub fn successor(&self, i: u32) -> u32 {
        let block = self.block_of(i);
        if block.len() == 1 {
            return i;
        }
        for step in 1..self.ground {
            let cand = overline(i as i64 - step as i64, self.ground);
            if block.binary_search(&cand).is_ok() {
                return cand;
            }
        }
        i
    }

    /// Inverse of [`NonCrossingPartition::successor`].
    pub fn successor_inv(&self, i: u32) -> u32 {
        let block = self.block_of(i);
        if block.len() == 1 {
            return i;
        }
        for step in 1..self.ground {
            let cand = overline(i as i64 + step as i64, self.ground);
            if block.binary_search(&cand).is_ok() {
                return cand;
            }
        }
        i
    }

    /// The hat interval: the forward cyclic interval `{i, i+1, ..., sigma(i)}`.
    pub fn hat(&self, i: u32) -> Result<Vec<u32>> {
        self.check_index("hat index", i)?;
        Ok(fwd_interval(i, self.successor(i), self.ground))
    }

    /// The partition `p'` whose blocks are the cycles of `w -> sigma(w) + 1`.
    ///
    /// Tracks the syzygy: `Omega` of the short-type family at `(p, i)` is
    /// the long-type family at `(m1(p), i)`.
    pub fn m1(&self) -> Self {
        self.cycles_of(|w| overline(self.successor(w) as i64 + 1, self.ground))
    }

    /// The partition `p''` whose blocks are the cycles of `w -> sigma^{-1}(w) - 1`.
    /// Inverse bijection of [`NonCrossingPartition::m1`].
    pub fn m2(&self) -> Self {
        self.cycles_of(|w| overline(self.successor_inv(w) as i64 - 1, self.ground))
    }

    fn cycles_of(&self, step: impl Fn(u32) -> u32) -> Self {
        let mut used = alloc::vec![false; self.ground as usize + 1];
        let mut blocks = Vec::new();
        for start in 1..=self.ground {
            if used[start as usize] {
                continue;
            }
            let mut block = Vec::new();
            let mut w = start;
            loop {
                used[w as usize] = true;
                block.push(w);
                w = step(w);
                if w == start {
                    break;
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        // Cycles of a permutation partition the ground set; m1/m2 outputs
        // are non-crossing whenever the input is (certified in tests).
        NonCrossingPartition::new(self.ground, blocks).expect("cycle partition is non-crossing")
    }

    /// Merges the blocks of `k` and `k'`, flagging whether the merged
    /// partition is still non-crossing.
    pub fn join_blocks(&self, k: u32, k2: u32) -> Result<JoinResult> {
        self.check_index("join index", k)?;
        self.check_index("join index", k2)?;
        if self.block_of(k) == self.block_of(k2) {
            return Ok(JoinResult::NonCrossing(self.clone()));
        }
        let mut merged: Vec<u32> = self.block_of(k).to_vec();
        merged.extend_from_slice(self.block_of(k2));
        merged.sort_unstable();
        let mut blocks: Vec<Vec<u32>> = self
            .blocks
            .iter()
            .filter(|b| b.binary_search(&k).is_err() && b.binary_search(&k2).is_err())
            .cloned()
            .collect();
        blocks.push(merged);
        blocks.sort();
        if is_noncrossing(self.ground, &blocks)? {
            Ok(JoinResult::NonCrossing(NonCrossingPartition { ground: self.ground, blocks }))
        } else {
            Ok(JoinResult::Crossing(blocks))
        }
    }
}

/// Enumerates all non-crossing partitions of `{1..e}` in lexicographic
/// order of their canonical block lists.
///
/// Works by recursive block insertion: the block containing the smallest
/// remaining element splits what is left into independent gaps, so no
/// crossing candidate is ever generated. The filter-over-all-partitions
/// method survives as a test oracle for small `e`.
pub fn enumerate(e: u32) -> Vec<NonCrossingPartition> {
    let ground: Vec<u32> = (1..=e).collect();
    let mut parts: Vec<NonCrossingPartition> = segment_partitions(&ground)
        .into_iter()
        .map(|mut blocks| {
            blocks.sort();
            NonCrossingPartition { ground: e, blocks }
        })
        .collect();
    parts.sort();
    parts
}

/// All non-crossing partitions of one ascending segment of elements.
fn segment_partitions(seg: &[u32]) -> Vec<Vec<Vec<u32>>> {
    fn choose_block(
        first: u32,
        tail: &[u32],
        from: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        // Close the block of `first` with the currently chosen tail
        // elements; they carve `tail` into gaps partitioned independently.
        let mut block = alloc::vec![first];
        block.extend(chosen.iter().map(|&idx| tail[idx]));
        let mut gaps: Vec<&[u32]> = Vec::new();
        let mut start = 0usize;
        for &idx in chosen.iter() {
            gaps.push(&tail[start..idx]);
            start = idx + 1;
        }
        gaps.push(&tail[start..]);
        let mut partial: Vec<Vec<Vec<u32>>> = alloc::vec![alloc::vec![block]];
        for gap in gaps {
            let sub = segment_partitions(gap);
            let mut next = Vec::with_capacity(partial.len() * sub.len());
            for p in &partial {
                for q in &sub {
                    let mut r = p.clone();
                    r.extend(q.iter().cloned());
                    next.push(r);
                }
            }
            partial = next;
        }
        out.extend(partial);
        // Or keep growing the block.
        for idx in from..tail.len() {
            chosen.push(idx);
            choose_block(first, tail, idx + 1, chosen, out);
            chosen.pop();
        }
    }

    if seg.is_empty() {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    choose_block(seg[0], &seg[1..], 0, &mut Vec::new(), &mut out);
    out
}

/// Catalan number `C_e = binom(2e, e) / (e + 1)`.
pub fn catalan(e: u32) -> u64 {
    binomial(2 * e as u64, e as u64) / (e as u64 + 1)
}

/// Narayana number `N(e, k) = binom(e, k) * binom(e, k-1) / e`: the number
/// of non-crossing partitions of `{1..e}` with exactly `k` blocks.
pub fn narayana(e: u32, k: u32) -> Result<u64> {
    if k < 1 || k > e {
        return Err(Error::OutOfRange { what: "narayana block count", value: k, max: e });
    }
    Ok(binomial(e as u64, k as u64) * binomial(e as u64, k as u64 - 1) / e as u64)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

fn render_blocks(blocks: &[Vec<u32>]) -> String {
    let mut s = String::from("{");
    for (bi, block) in blocks.iter().enumerate() {
        if bi > 0 {
            s.push('|');
        }
        for (xi, x) in block.iter().enumerate() {
            if xi > 0 {
                s.push(',');
            }
            s.push_str(&alloc::format!("{x}"));
        }
    }
    s.push('}');
    s
}

impl fmt::Display for NonCrossingPartition {
    /// Text format `{a,b|c|d,e}`: blocks separated by `|`, elements by `,`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_blocks(&self.blocks))
    }
}

impl FromStr for NonCrossingPartition {
    type Err = Error;

    /// Parses `{1,6,4|2,3|5}`; whitespace and element order are ignored.
    /// The ground size is the largest element, and the union must cover
    /// `{1..max}` exactly.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = compact
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(alloc::format!("partition must be braced: {s}")))?;
        if body.is_empty() {
            return Err(Error::Parse(String::from("empty partition")));
        }
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        for block_str in body.split('|') {
            let mut block = Vec::new();
            for elem in block_str.split(',') {
                let x: u32 = elem
                    .parse()
                    .map_err(|_| Error::Parse(alloc::format!("bad element {elem:?} in {s}")))?;
                block.push(x);
            }
            blocks.push(block);
        }
        let ground = blocks.iter().flatten().copied().max().unwrap_or(0);
        NonCrossingPartition::new(ground, blocks)
    }
}
