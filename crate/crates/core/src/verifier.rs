//! First-principles sms verification, exhaustive enumeration on small
//! algebras, classification against the constructed families, and
//! closed-form counting.
//!
//! A candidate set is an sms iff it is an orthogonal system, has as many
//! members as there are non-projective simples (that is, `n`), and is
//! permuted by the Nakayama functor. Enumeration exploits the structure
//! those conditions force: an sms is a union of `nu`-orbits, members have
//! pairwise distinct tops, and each orbit covers one residue class of
//! tops mod `e`, so the search space is one orbit choice (a length in
//! `1..=ell`) per residue class. Every surviving candidate is still passed
//! through the full first-principles check.

use alloc::vec::Vec;

use crate::algebra::{Algebra, IndecModule};
use crate::error::{Error, Result};
use crate::noncrossing;
use crate::sms::{self, FamilyKind, FamilyLabel, SmsCandidate};
use crate::stable_hom;

/// Default ceiling on `n * ell` for exhaustive enumeration.
pub const DEFAULT_SEARCH_GUARD: u64 = 48;

/// Why a candidate fails to be an sms, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SmsFailure {
    /// Condition (1): some stable Hom is nonzero where it must vanish
    /// (`from == to` means the member is not a stable brick).
    NotOrthogonal { from: IndecModule, to: IndecModule },
    /// Condition (2): wrong number of members.
    WrongCardinality { found: usize, expected: usize },
    /// Condition (3): the Nakayama functor moves a member out of the set.
    NotNakayamaStable { module: IndecModule, image: IndecModule },
}

impl core::fmt::Display for SmsFailure {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SmsFailure::NotOrthogonal { from, to } if from == to => {
                write!(f, "condition (1): {from} is not a stable brick")
            }
            SmsFailure::NotOrthogonal { from, to } => {
                write!(f, "condition (1): nonzero stable Hom {from} -> {to}")
            }
            SmsFailure::WrongCardinality { found, expected } => {
                write!(f, "condition (2): {found} members, expected {expected}")
            }
            SmsFailure::NotNakayamaStable { module, image } => {
                write!(f, "condition (3): nu({module}) = {image} is not a member")
            }
        }
    }
}

/// Verdict of the first-principles check.
pub type SmsVerdict = core::result::Result<(), SmsFailure>;

/// Checks the three sms conditions, reporting the first failure with a
/// witness. Well-formedness (no duplicates, no projectives) is already
/// guaranteed by the [`SmsCandidate`] constructor.
pub fn check_sms(s: &SmsCandidate) -> SmsVerdict {
    let alg = s.algebra();
    let expected = alg.n() as usize;
    if s.len() != expected {
        return Err(SmsFailure::WrongCardinality { found: s.len(), expected });
    }
    for m in s.modules() {
        let image = alg.nakayama(m).expect("members are non-projective");
        if !s.contains(&image) {
            return Err(SmsFailure::NotNakayamaStable { module: *m, image });
        }
    }
    for m in s.modules() {
        for x in s.modules() {
            let dim = stable_hom::stable_hom_dim(alg, m, x).expect("non-projective members");
            let bad = if m == x { dim != 1 } else { dim != 0 };
            if bad {
                return Err(SmsFailure::NotOrthogonal { from: *m, to: *x });
            }
        }
    }
    Ok(())
}

pub fn is_sms(s: &SmsCandidate) -> bool {
    check_sms(s).is_ok()
}

/// Exhaustively enumerates all sms's, deterministic canonical order.
/// Refuses when `n * ell` exceeds [`DEFAULT_SEARCH_GUARD`].
pub fn enumerate_sms(alg: &Algebra) -> Result<Vec<SmsCandidate>> {
    enumerate_sms_guarded(alg, DEFAULT_SEARCH_GUARD)
}

/// Enumeration with an explicit guard (callers opt in to larger sweeps).
pub fn enumerate_sms_guarded(alg: &Algebra, guard: u64) -> Result<Vec<SmsCandidate>> {
    let size = alg.n() as u64 * alg.ell() as u64;
    if size > guard {
        return Err(Error::SearchGuardExceeded { size, guard });
    }
    let e = alg.e();
    // One nu-orbit per top-residue class mod e: members of an sms have
    // pairwise distinct tops, so two orbits sharing a residue class would
    // collide. The orbit of residue r with length len has tops
    // r, r+e, ..., r+n-e.
    let mut out = Vec::new();
    let mut lens = alloc::vec![1u32; e as usize];
    loop {
        if let Some(candidate) = orbit_union(alg, &lens) {
            // Incremental pruning happens inside orbit_union; the final
            // word still belongs to the first-principles check.
            if check_sms(&candidate).is_ok() {
                out.push(candidate);
            }
        }
        // Odometer over length choices.
        let mut idx = 0usize;
        loop {
            if idx == lens.len() {
                out.sort();
                return Ok(out);
            }
            lens[idx] += 1;
            if lens[idx] <= alg.ell() {
                break;
            }
            lens[idx] = 1;
            idx += 1;
        }
    }
}

/// Assembles the union of the orbits `(residue r, lens[r-1])`, pruning
/// with the closed-form orbit test before paying for the full check.
fn orbit_union(alg: &Algebra, lens: &[u32]) -> Option<SmsCandidate> {
    let e = alg.e();
    let mut modules = Vec::with_capacity(alg.n() as usize);
    for r in 1..=e {
        let seed = alg.module(r, lens[r as usize - 1]).expect("in range");
        if !stable_hom::nu_orbit_orthogonal(alg, &seed).expect("non-projective") {
            return None;
        }
        modules.extend(alg.nu_orbit(&seed).expect("non-projective"));
    }
    Some(SmsCandidate::new(*alg, modules).expect("orbits are disjoint and non-projective"))
}

/// One equivalence class in the classification: a realized sms together
/// with every `(type, p, k)` label that constructs it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmsClass {
    pub sms: SmsCandidate,
    pub labels: Vec<FamilyLabel>,
}

/// Outcome of classifying the enumerated sms's against the constructed
/// families. The classification is complete when every enumerated sms
/// carries at least one label, every constructed family was found by the
/// enumeration, and the count matches the closed form.
#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub algebra: Algebra,
    pub count_formula: u64,
    pub count_enumerated: u64,
    pub classes: Vec<SmsClass>,
    /// Enumerated sms's no constructed family produces (completeness hole).
    pub unlabeled: Vec<SmsCandidate>,
    /// Constructed families the enumeration failed to find (soundness hole).
    pub unrealized: Vec<FamilyLabel>,
}

impl ClassificationReport {
    /// The completeness certificate.
    pub fn is_complete(&self) -> bool {
        self.unlabeled.is_empty()
            && self.unrealized.is_empty()
            && self.count_formula == self.count_enumerated
    }
}

/// Enumerates all sms's and maps each to the family labels producing it.
pub fn classify_all(alg: &Algebra) -> Result<ClassificationReport> {
    classify_all_guarded(alg, DEFAULT_SEARCH_GUARD)
}

pub fn classify_all_guarded(alg: &Algebra, guard: u64) -> Result<ClassificationReport> {
    let enumerated = enumerate_sms_guarded(alg, guard)?;
    let e = alg.e();
    let mut classes: Vec<SmsClass> =
        enumerated.iter().map(|s| SmsClass { sms: s.clone(), labels: Vec::new() }).collect();
    let mut unrealized = Vec::new();
    for p in noncrossing::enumerate(e) {
        for k in 1..=e {
            for kind in [FamilyKind::Long, FamilyKind::Short] {
                let label = FamilyLabel::new(kind, p.clone(), k);
                let family = sms::build_lifted(alg, &label)?;
                match classes.iter_mut().find(|c| c.sms == family) {
                    Some(class) => class.labels.push(label),
                    None => unrealized.push(label),
                }
            }
        }
    }
    let unlabeled: Vec<SmsCandidate> = classes
        .iter()
        .filter(|c| c.labels.is_empty())
        .map(|c| c.sms.clone())
        .collect();
    Ok(ClassificationReport {
        algebra: *alg,
        count_formula: count_sms(alg),
        count_enumerated: enumerated.len() as u64,
        classes,
        unlabeled,
        unrealized,
    })
}

/// Closed-form sms count: `C_e` when `ell = e`, else `(e + 1) C_e`.
pub fn count_sms(alg: &Algebra) -> u64 {
    let e = alg.e();
    if alg.ell() == e {
        noncrossing::catalan(e)
    } else {
        (e as u64 + 1) * noncrossing::catalan(e)
    }
}

/// Sms count of a Brauer tree algebra with `n_edges` edges and exceptional
/// multiplicity `m0`, via its stable equivalence with `A_n^{n m0}`.
pub fn count_sms_brauer_tree(n_edges: u32, m0: u32) -> Result<u64> {
    if n_edges == 0 || m0 == 0 {
        return Err(Error::InvalidAlgebra { n: n_edges, ell: n_edges.saturating_mul(m0) });
    }
    Ok(count_sms(&Algebra::new(n_edges, n_edges * m0)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::noncrossing::NonCrossingPartition;
    use alloc::vec;

    fn alg(n: u32, ell: u32) -> Algebra {
        Algebra::new(n, ell).unwrap()
    }

    fn ncp(s: &str) -> NonCrossingPartition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_a4_4_set_is_sms() {
        let a = alg(4, 4);
        let s = SmsCandidate::new(
            a,
            vec![
                a.simple(4).unwrap(),
                a.from_symbol(2, 1, 0).unwrap(),
                a.from_symbol(3, 2, 0).unwrap(),
                a.from_symbol(1, 3, 0).unwrap(),
            ],
        )
        .unwrap();
        assert!(is_sms(&s));
    }

    #[test]
    fn simples_form_sms_on_symmetric() {
        for n in 1..=4u32 {
            for d in 1..=3u32 {
                let a = alg(n, d * n);
                let simples =
                    SmsCandidate::new(a, (1..=n).map(|i| a.simple(i).unwrap()).collect())
                        .unwrap();
                assert!(is_sms(&simples));
            }
        }
    }

    #[test]
    fn failure_reasons() {
        let a = alg(2, 6);
        let short = SmsCandidate::new(a, vec![a.simple(1).unwrap()]).unwrap();
        assert!(matches!(
            check_sms(&short),
            Err(SmsFailure::WrongCardinality { found: 1, expected: 2 })
        ));

        // Right size, not orthogonal: shared top is impossible here, use
        // a non-brick member instead.
        let bad = SmsCandidate::new(
            a,
            vec![a.from_symbol(1, 2, 1).unwrap(), a.from_symbol(2, 1, 0).unwrap()],
        )
        .unwrap();
        assert!(matches!(check_sms(&bad), Err(SmsFailure::NotOrthogonal { .. })));

        // Nakayama instability needs a non-symmetric algebra.
        let b = alg(4, 6);
        let unstable = SmsCandidate::new(
            b,
            vec![
                b.simple(1).unwrap(),
                b.simple(2).unwrap(),
                b.module(3, 2).unwrap(),
                b.module(4, 3).unwrap(),
            ],
        )
        .unwrap();
        assert!(matches!(check_sms(&unstable), Err(SmsFailure::NotNakayamaStable { .. })));
    }

    #[test]
    fn enumerate_a2_6_matches_the_six_families() {
        let a = alg(2, 6);
        let found = enumerate_sms(&a).unwrap();
        assert_eq!(found.len(), 6);
        let p1 = ncp("{1|2}");
        let p2 = ncp("{1,2}");
        let mut expect = vec![
            sms::build_long(&a, &p1, 1).unwrap(),
            sms::build_long(&a, &p1, 2).unwrap(),
            sms::build_long(&a, &p2, 1).unwrap(),
            sms::build_short(&a, &p2, 1).unwrap(),
            sms::build_short(&a, &p2, 2).unwrap(),
            sms::build_short(&a, &p1, 1).unwrap(),
        ];
        expect.sort();
        assert_eq!(found, expect);
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_sms(&alg(4, 4)).unwrap().len(), 14);
        assert_eq!(enumerate_sms(&alg(1, 4)).unwrap().len(), 2);
        assert_eq!(enumerate_sms(&alg(1, 1)).unwrap().len(), 1);
    }

    #[test]
    fn a1_ell_sms_listing() {
        let a = alg(1, 4);
        let found = enumerate_sms(&a).unwrap();
        let expect = vec![
            SmsCandidate::new(a, vec![a.simple(1).unwrap()]).unwrap(),
            SmsCandidate::new(a, vec![a.module(1, 4).unwrap()]).unwrap(),
        ];
        assert_eq!(found, expect);
    }

    #[test]
    fn guard_refuses_large_search() {
        let a = alg(12, 12);
        assert!(matches!(
            enumerate_sms(&a),
            Err(Error::SearchGuardExceeded { size: 144, guard: 48 })
        ));
        // Overridable.
        assert!(enumerate_sms_guarded(&alg(7, 7), 49).is_ok());
    }

    #[test]
    fn classification_a2_6() {
        let report = classify_all(&alg(2, 6)).unwrap();
        assert!(report.is_complete());
        assert_eq!(report.count_formula, 6);
        assert_eq!(report.count_enumerated, 6);
        assert_eq!(report.classes.len(), 6);
        // The two collapses: L_{p2,1} = L_{p2,2} and S_{p1,1} = S_{p1,2}.
        let double_labeled: Vec<&SmsClass> =
            report.classes.iter().filter(|c| c.labels.len() == 2).collect();
        assert_eq!(double_labeled.len(), 2);
    }

    #[test]
    fn classification_d1_collapse() {
        // ell = e: long and short coincide, so every class carries both
        // labels and the class count is the Catalan number.
        let report = classify_all(&alg(2, 2)).unwrap();
        assert!(report.is_complete());
        assert_eq!(report.count_enumerated, 2);
        for class in &report.classes {
            assert!(class.labels.len() >= 2);
        }
    }

    #[test]
    fn every_built_family_is_an_sms() {
        // Soundness without enumeration, so it reaches beyond the guard
        // of the completeness sweep.
        for e in 1..=4u32 {
            for d in 1..=3u32 {
                let a = alg(e, d * e);
                for p in noncrossing::enumerate(e) {
                    for k in 1..=e {
                        for kind in [FamilyKind::Long, FamilyKind::Short] {
                            let label = FamilyLabel::new(kind, p.clone(), k);
                            let fam = sms::build(&a, &label).unwrap();
                            assert!(is_sms(&fam), "{} over A_{e}^{}", label.header(), d * e);
                        }
                    }
                }
            }
        }
        // Lifted families over non-symmetric algebras.
        for (n, ell) in [(4, 6), (6, 4), (6, 9), (5, 7), (6, 8)] {
            let a = alg(n, ell);
            for p in noncrossing::enumerate(a.e()) {
                for k in 1..=a.e() {
                    for kind in [FamilyKind::Long, FamilyKind::Short] {
                        let label = FamilyLabel::new(kind, p.clone(), k);
                        let fam = sms::build_lifted(&a, &label).unwrap();
                        assert!(is_sms(&fam), "{} over A_{n}^{ell}", label.header());
                    }
                }
            }
        }
    }

    #[test]
    fn counting_formulas() {
        assert_eq!(count_sms(&alg(2, 6)), 6);
        assert_eq!(count_sms(&alg(4, 4)), 14);
        assert_eq!(count_sms(&alg(3, 6)), 20);
        assert_eq!(count_sms(&alg(3, 3)), 5);
        assert_eq!(count_sms(&alg(1, 4)), 2);
        assert_eq!(count_sms_brauer_tree(2, 3).unwrap(), 6);
        assert_eq!(count_sms_brauer_tree(1, 1).unwrap(), 1);
        assert_eq!(count_sms_brauer_tree(4, 1).unwrap(), 14);
        assert!(count_sms_brauer_tree(0, 1).is_err());
        assert!(count_sms_brauer_tree(2, 0).is_err());
    }
}
