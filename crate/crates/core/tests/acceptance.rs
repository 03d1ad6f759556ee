//! Acceptance suite: one test per release criterion, each printing a
//! pass line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Every tolerance here is exact integer equality; there are no tunable
//! thresholds.

use nakayama_sms::algebra::overline;
use nakayama_sms::arcs;
use nakayama_sms::noncrossing::{self, NonCrossingPartition};
use nakayama_sms::oracle;
use nakayama_sms::sms::{self, FamilyKind, FamilyLabel, SmsCandidate};
use nakayama_sms::stable_hom;
use nakayama_sms::verifier;
use nakayama_sms::{Algebra, IndecModule};

fn alg(n: u32, ell: u32) -> Algebra {
    Algebra::new(n, ell).unwrap()
}

fn ncp(s: &str) -> NonCrossingPartition {
    s.parse().unwrap()
}

fn set(alg: &Algebra, mods: &[(u32, u32)]) -> SmsCandidate {
    SmsCandidate::new(
        *alg,
        mods.iter().map(|&(top, len)| alg.module(top, len).unwrap()).collect(),
    )
    .unwrap()
}

fn long(a: &Algebra, p: &str, k: u32) -> SmsCandidate {
    sms::build_long(a, &ncp(p), k).unwrap()
}

fn short(a: &Algebra, p: &str, k: u32) -> SmsCandidate {
    sms::build_short(a, &ncp(p), k).unwrap()
}

/// Criterion 1: the six sms's of A_2^6 equal the listed families as
/// module sets, including the two coincidences.
#[test]
fn criterion_01_a2_6_families() {
    let a = alg(2, 6);

    assert_eq!(long(&a, "{1|2}", 1), set(&a, &[(1, 5), (2, 1)]));
    assert_eq!(long(&a, "{1|2}", 2), set(&a, &[(1, 1), (2, 5)]));
    assert_eq!(short(&a, "{1,2}", 1), set(&a, &[(1, 2), (2, 6)]));
    assert_eq!(short(&a, "{1,2}", 2), set(&a, &[(1, 6), (2, 2)]));
    assert_eq!(long(&a, "{1,2}", 1), set(&a, &[(1, 6), (2, 6)]));
    assert_eq!(short(&a, "{1|2}", 1), set(&a, &[(1, 1), (2, 1)]));

    // Coincidences.
    assert_eq!(long(&a, "{1,2}", 1), long(&a, "{1,2}", 2));
    assert_eq!(short(&a, "{1|2}", 1), short(&a, "{1|2}", 2));

    // And the enumeration finds exactly these six.
    let mut expected = vec![
        long(&a, "{1|2}", 1),
        long(&a, "{1|2}", 2),
        short(&a, "{1,2}", 1),
        short(&a, "{1,2}", 2),
        long(&a, "{1,2}", 1),
        short(&a, "{1|2}", 1),
    ];
    expected.sort();
    expected.dedup();
    assert_eq!(expected.len(), 6);
    assert_eq!(verifier::enumerate_sms(&a).unwrap(), expected);

    println!("criterion 01 (A_2^6 six families, exact): PASS");
}

/// Criterion 2: the six sms's of A_4^6 match the lifted families
/// memberwise.
#[test]
fn criterion_02_a4_6_lifted_families() {
    let t = alg(4, 6);
    let lifted = |kind, p: &str, k| sms::build_lifted(&t, &FamilyLabel::new(kind, ncp(p), k)).unwrap();

    let listed = [
        (lifted(FamilyKind::Long, "{1|2}", 1), vec![(1, 5), (3, 5), (2, 1), (4, 1)]),
        (lifted(FamilyKind::Short, "{1,2}", 1), vec![(1, 2), (3, 2), (2, 6), (4, 6)]),
        (lifted(FamilyKind::Long, "{1|2}", 2), vec![(1, 1), (3, 1), (2, 5), (4, 5)]),
        (lifted(FamilyKind::Short, "{1,2}", 2), vec![(1, 6), (3, 6), (2, 2), (4, 2)]),
        (lifted(FamilyKind::Long, "{1,2}", 1), vec![(1, 6), (3, 6), (2, 6), (4, 6)]),
        (lifted(FamilyKind::Short, "{1|2}", 1), vec![(1, 1), (3, 1), (2, 1), (4, 1)]),
    ];
    let mut families = Vec::new();
    for (built, mods) in listed {
        assert_eq!(built, set(&t, &mods));
        families.push(built);
    }
    assert_eq!(lifted(FamilyKind::Long, "{1,2}", 1), lifted(FamilyKind::Long, "{1,2}", 2));
    assert_eq!(lifted(FamilyKind::Short, "{1|2}", 1), lifted(FamilyKind::Short, "{1|2}", 2));

    families.sort();
    assert_eq!(verifier::enumerate_sms(&t).unwrap(), families);

    println!("criterion 02 (A_4^6 six lifted families, exact): PASS");
}

/// Criterion 3: the worked A_4^4 set is an sms and its partition and
/// successor values extract exactly.
#[test]
fn criterion_03_a4_4_extraction() {
    let a = alg(4, 4);
    let s = set(&a, &[(4, 1), (2, 4), (3, 4), (1, 3)]);
    assert!(verifier::is_sms(&s));

    let (p, cycles) = sms::extract_partition(&s).unwrap();
    assert_eq!(p, ncp("{1,2,3|4}"));
    for i in [1, 2, 3] {
        assert_eq!(p.block_of(i), &[1, 2, 3]);
    }
    assert_eq!(p.block_of(4), &[4]);
    // sigma(1) = 3, sigma(2) = 1, sigma(3) = 2, sigma(4) = 4.
    assert_eq!(cycles, vec![vec![1, 3, 2], vec![4]]);
    assert_eq!(p.successor(1), 3);
    assert_eq!(p.successor(2), 1);
    assert_eq!(p.successor(3), 2);
    assert_eq!(p.successor(4), 4);

    println!("criterion 03 (A_4^4 worked example extraction, exact): PASS");
}

/// Criterion 4: for every n <= 4, ell <= 6, brute-force enumeration
/// equals the constructed families and the closed-form count.
#[test]
fn criterion_04_completeness_sweep() {
    for n in 1..=4u32 {
        for ell in 1..=6u32 {
            let a = alg(n, ell);
            let enumerated = verifier::enumerate_sms(&a).unwrap();
            let report = verifier::classify_all(&a).unwrap();
            assert!(
                report.is_complete(),
                "classification incomplete for A_{n}^{ell}: unlabeled {:?}, unrealized {:?}",
                report.unlabeled,
                report.unrealized
            );
            assert_eq!(enumerated.len() as u64, verifier::count_sms(&a), "A_{n}^{ell}");
        }
    }
    let spot = [((2, 6), 6), ((4, 4), 14), ((3, 6), 20), ((3, 3), 5), ((1, 4), 2)];
    for ((n, ell), count) in spot {
        assert_eq!(verifier::enumerate_sms(&alg(n, ell)).unwrap().len() as u64, count);
    }

    println!("criterion 04 (completeness sweep n<=4, ell<=6, exact): PASS");
}

/// Criterion 5: the combinatorial Hom formulas agree with the
/// linear-algebra oracle on every ordered pair, over two prime fields.
#[test]
fn criterion_05_oracle_equivalence() {
    let stats = oracle::agreement_sweep(4, 6, &oracle::SWEEP_PRIMES)
        .unwrap_or_else(|cx| panic!("oracle disagreement: {cx}"));
    assert_eq!(stats.algebras, 24);
    // Over both primes: sum of (n(ell+1))^2 ordered pairs for hom and
    // (n*ell)^2 for stable hom across the 24 algebras.
    assert_eq!(stats.hom_pairs, 8340);
    assert_eq!(stats.stable_pairs, 5460);

    println!(
        "criterion 05 (oracle equivalence, {} hom / {} stable pairs, exact): PASS",
        stats.hom_pairs, stats.stable_pairs
    );
}

/// Criterion 6: arc-based orthogonality agrees with Hom-based
/// orthogonality on all symmetric algebras n <= 5, d <= 3, and the
/// crossing pattern forces a nonzero stable map.
#[test]
fn criterion_06_arc_classification() {
    let mut pairs = 0u64;
    let mut crossings = 0u64;
    for n in 1..=5u32 {
        for d in 1..=3u32 {
            let a = alg(n, d * n);
            let mods = a.nonprojective_modules();
            for m in &mods {
                for x in &mods {
                    if m == x {
                        continue;
                    }
                    let by_arcs = arcs::orthogonal_by_arcs(&a, m, x).unwrap();
                    let by_hom = stable_hom::is_orthogonal_system(&a, &[*m, *x]).unwrap();
                    assert_eq!(by_arcs, by_hom, "{m} vs {x} over A_{n}^{}", d * n);
                    pairs += 1;
                    if arcs::crossing_pattern(&a, m, x).unwrap() {
                        crossings += 1;
                        assert!(
                            stable_hom::stable_hom_dim(&a, x, m).unwrap() >= 1,
                            "crossing pattern must force {x} -> {m}"
                        );
                    }
                }
            }
        }
    }
    assert!(crossings > 0, "sweep must exercise the crossing pattern");

    println!("criterion 06 (arc classification on {pairs} pairs, exact): PASS");
}

/// Criterion 7: the four (co)syzygy identities on families, their lifted
/// versions, and the worked m1/m2 and A_2^6 syzygy equations.
#[test]
fn criterion_07_syzygy_theorems() {
    // Four identities over A_e^{de}, e <= 4, d <= 3.
    for e in 1..=4u32 {
        for d in 1..=3u32 {
            let a = alg(e, d * e);
            check_syzygy_identities(&a, |label| sms::build(&a, label).unwrap());
        }
    }
    // Lifted versions over all A_n^ell with n <= 6, ell <= 6.
    for n in 1..=6u32 {
        for ell in 1..=6u32 {
            let a = alg(n, ell);
            check_syzygy_identities(&a, |label| sms::build_lifted(&a, label).unwrap());
        }
    }

    // m1/m2 worked example.
    let p = ncp("{1,6,4|2,3|5}");
    assert_eq!(p.m1(), ncp("{1|4,2|3|6,5}"));
    assert_eq!(p.m2(), ncp("{1,3|2|4,5|6}"));
    assert_eq!(p.m1().m2(), p);
    assert_eq!(p.m2().m1(), p);

    // The eight equation groups for A_2^6.
    let a = alg(2, 6);
    let om = |s: &SmsCandidate| sms::syzygy_family(s).unwrap();
    let om_inv = |s: &SmsCandidate| sms::cosyzygy_family(s).unwrap();
    assert_eq!(om(&short(&a, "{1,2}", 1)), long(&a, "{1|2}", 1));
    assert_eq!(om_inv(&short(&a, "{1,2}", 2)), long(&a, "{1|2}", 1));
    assert_eq!(om_inv(&long(&a, "{1|2}", 1)), short(&a, "{1,2}", 1));
    assert_eq!(om(&long(&a, "{1|2}", 2)), short(&a, "{1,2}", 1));
    assert_eq!(om(&short(&a, "{1,2}", 2)), long(&a, "{1|2}", 2));
    assert_eq!(om_inv(&short(&a, "{1,2}", 1)), long(&a, "{1|2}", 2));
    assert_eq!(om(&short(&a, "{1|2}", 1)), long(&a, "{1,2}", 2));
    assert_eq!(om(&short(&a, "{1|2}", 2)), long(&a, "{1,2}", 1));
    assert_eq!(om_inv(&short(&a, "{1|2}", 1)), long(&a, "{1,2}", 1));
    assert_eq!(om_inv(&long(&a, "{1|2}", 2)), short(&a, "{1,2}", 2));
    assert_eq!(om(&long(&a, "{1|2}", 1)), short(&a, "{1,2}", 2));
    assert_eq!(om_inv(&long(&a, "{1,2}", 1)), short(&a, "{1|2}", 1));
    assert_eq!(om_inv(&long(&a, "{1,2}", 2)), short(&a, "{1|2}", 2));
    assert_eq!(om(&long(&a, "{1,2}", 1)), short(&a, "{1|2}", 1));

    println!("criterion 07 (syzygy theorems and worked equations, exact): PASS");
}

fn check_syzygy_identities(a: &Algebra, build: impl Fn(&FamilyLabel) -> SmsCandidate) {
    let e = a.e();
    for p in noncrossing::enumerate(e) {
        for i in 1..=e {
            let long_label = FamilyLabel::new(FamilyKind::Long, p.clone(), i);
            let short_label = FamilyLabel::new(FamilyKind::Short, p.clone(), i);
            let l = build(&long_label);
            let s = build(&short_label);
            let m1 = p.m1();
            let m2 = p.m2();
            // Omega(S_{p,i}) = L_{m1(p),i}
            assert_eq!(
                sms::syzygy_family(&s).unwrap(),
                build(&FamilyLabel::new(FamilyKind::Long, m1.clone(), i))
            );
            // Omega^{-1}(L_{p,i}) = S_{m2(p),i}
            assert_eq!(
                sms::cosyzygy_family(&l).unwrap(),
                build(&FamilyLabel::new(FamilyKind::Short, m2.clone(), i))
            );
            // Omega^{-1}(S_{p,i}) = L_{m2(p), sigma(i)}
            assert_eq!(
                sms::cosyzygy_family(&s).unwrap(),
                build(&FamilyLabel::new(FamilyKind::Long, m2.clone(), p.successor(i)))
            );
            // Omega(L_{p,i}) = S_{m1(p), sigma(i)+1}
            let i1 = overline(p.successor(i) as i64 + 1, e);
            assert_eq!(
                sms::syzygy_family(&l).unwrap(),
                build(&FamilyLabel::new(FamilyKind::Short, m1.clone(), i1))
            );
            // Consistency with the label transport.
            assert_eq!(sms::syzygy_label(&short_label).kind, FamilyKind::Long);
            assert_eq!(
                build(&sms::cosyzygy_label(&sms::syzygy_label(&long_label))),
                l
            );
        }
    }
}

/// Criterion 8: Catalan/Narayana identities for e <= 10.
#[test]
fn criterion_08_combinatorial_identities() {
    for e in 1..=10u32 {
        assert_eq!(noncrossing::enumerate(e).len() as u64, noncrossing::catalan(e));
        let total: u64 = (1..=e).map(|k| noncrossing::narayana(e, k).unwrap()).sum();
        assert_eq!(total, noncrossing::catalan(e));
        for k in 1..=e {
            assert_eq!(
                noncrossing::narayana(e, k).unwrap(),
                noncrossing::narayana(e, e - k + 1).unwrap()
            );
        }
        let weighted: u64 =
            (1..=e).map(|k| k as u64 * noncrossing::narayana(e, k).unwrap()).sum();
        assert_eq!(2 * weighted, (e as u64 + 1) * noncrossing::catalan(e));
    }

    println!("criterion 08 (counting identities e<=10, exact): PASS");
}

/// Criterion 9: the equality predicates agree with extensional equality
/// of the built families at d = 2, and with the m1 reformulation.
#[test]
fn criterion_09_equality_predicates() {
    for e in 1..=5u32 {
        let a = alg(e, 2 * e);
        let partitions = noncrossing::enumerate(e);
        let mut built: Vec<(usize, u32, SmsCandidate, SmsCandidate)> = Vec::new();
        for (pi, p) in partitions.iter().enumerate() {
            for k in 1..=e {
                built.push((
                    pi,
                    k,
                    sms::build_long(&a, p, k).unwrap(),
                    sms::build_short(&a, p, k).unwrap(),
                ));
            }
        }
        for &(pi, k, ref l1, ref s1) in &built {
            for &(qi, k2, ref l2, ref s2) in &built {
                let p = &partitions[pi];
                let q = &partitions[qi];
                assert_eq!(
                    sms::families_equal_long(&a, p, k, q, k2).unwrap(),
                    l1 == l2,
                    "long equality at e={e}, ({p},{k}) vs ({q},{k2})"
                );
                let short_eq = sms::families_equal_short(&a, p, k, q, k2).unwrap();
                assert_eq!(short_eq, s1 == s2, "short equality at e={e}, ({p},{k}) vs ({q},{k2})");
                // Long and short never coincide at d = 2.
                assert_ne!(l1, s2);
                // Equivalent formulation through m1.
                let via_m1 = p == q && p.m1().block_of(k) == q.m1().block_of(k2);
                assert_eq!(short_eq, via_m1);
            }
        }
    }

    println!("criterion 09 (equality predicates vs extensional equality, exact): PASS");
}

/// Criterion 10: structural invariants of every enumerated sms.
#[test]
fn criterion_10_structural_invariants() {
    for n in 1..=4u32 {
        for ell in 1..=6u32 {
            let a = alg(n, ell);
            let e = a.e();
            for s in verifier::enumerate_sms(&a).unwrap() {
                // Top set and socle set are the full set of simples.
                let mut tops: Vec<u32> = s.modules().iter().map(|m| m.top()).collect();
                let mut socs: Vec<u32> = s.modules().iter().map(|m| a.socle(m)).collect();
                tops.sort_unstable();
                socs.sort_unstable();
                let all: Vec<u32> = (1..=n).collect();
                assert_eq!(tops, all);
                assert_eq!(socs, all);

                // Union of exactly e nu-orbits, each orthogonal by the
                // closed form.
                let mut orbits: Vec<Vec<IndecModule>> = Vec::new();
                for m in s.modules() {
                    assert!(stable_hom::nu_orbit_orthogonal(&a, m).unwrap());
                    let orbit = a.nu_orbit(m).unwrap();
                    assert!(orbit.iter().all(|x| s.contains(x)));
                    if !orbits.contains(&orbit) {
                        orbits.push(orbit);
                    }
                }
                assert_eq!(orbits.len() as u32, e);

                // Per-block multiplicity structure, read on the symmetric
                // covering image (where d = ell / e makes sense), when the
                // image algebra has d >= 2.
                if ell / e >= 2 {
                    let image = sms::covering_image(&s).unwrap();
                    let base = *image.algebra();
                    let d = base.symmetric_d().unwrap();
                    let (p, _) = sms::extract_partition(&image).unwrap();
                    let mult_at_top = |top: u32| {
                        let m = image.modules().iter().find(|m| m.top() == top).unwrap();
                        base.to_symbol(m).mult
                    };
                    let mut has_all_max_block = false;
                    for block in p.blocks() {
                        let zeros =
                            block.iter().filter(|&&i| mult_at_top(i) == 0).count();
                        assert!(zeros <= 1, "block {block:?} of {p} has {zeros} zeros");
                        if block.iter().all(|&i| mult_at_top(i) == d - 1) && d >= 2 {
                            has_all_max_block = true;
                        }
                    }
                    if has_all_max_block {
                        for block in p.blocks() {
                            if block.iter().all(|&i| mult_at_top(i) == d - 1) {
                                continue;
                            }
                            let zeros =
                                block.iter().filter(|&&i| mult_at_top(i) == 0).count();
                            assert_eq!(zeros, 1);
                        }
                    }
                }
            }
        }
    }

    println!("criterion 10 (structural invariants of enumerated sms's, exact): PASS");
}
