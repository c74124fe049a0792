//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines; assertions fail loudly either way.

use std::time::Instant;

use num::{BigInt, BigRational};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use supercong::cyclo::{quadruple_product, quintuple_product, CycloContext};
use supercong::gamma::{g1_at_zero, shared_table};
use supercong::hyper::{finite_rhs_sum, weighted_sum_6, weighted_sum_10, SumFamily};
use supercong::oracle;
use supercong::padic::{valuation_of_difference, PAdicContext, Valuation};
use supercong::suite::{
    cross_consistency, grid_passes, run_check, run_grid, CheckId, CongruenceReport,
    ConsistencyPair, Status, ALL_PAIRS,
};

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn tally(reports: &[CongruenceReport]) -> (usize, usize, usize) {
    let mut pass = 0;
    let mut skip = 0;
    let mut fail = 0;
    for r in reports {
        match r.status {
            Status::Pass | Status::ConjecturalPass => pass += 1,
            Status::Skipped => skip += 1,
            Status::Fail | Status::ConjecturalFail => fail += 1,
        }
    }
    (pass, skip, fail)
}

fn assert_clean(criterion: u32, label: &str, reports: &[CongruenceReport], min_val: u32) {
    let (pass, skip, fail) = tally(reports);
    for r in reports {
        if r.status != Status::Skipped {
            assert!(
                r.diff_valuation.at_least(min_val),
                "{label}: p={:?} r={:?} has valuation {} < {min_val}",
                r.p,
                r.r,
                r.diff_valuation
            );
        }
    }
    assert_eq!(fail, 0, "{label}: {fail} failures");
    assert!(pass > 0, "{label}: nothing was actually checked");
    println!("criterion {criterion}: PASS - {label}: {pass} pass, {skip} skip, 0 fail");
}

#[test]
fn criterion_01_cubic_family_full_grid() {
    let t0 = Instant::now();
    let reports = run_grid(CheckId::Thm11, 37, -9, None, 0).unwrap();
    assert!(grid_passes(CheckId::Thm11, &reports));
    assert_clean(1, "cubic family mod p^6, p <= 37, r in [-9,1]", &reports, 6);
    assert!(t0.elapsed().as_secs() < 120, "took {:?}", t0.elapsed());
}

#[test]
fn criterion_02_quintic_family_full_grid() {
    let t0 = Instant::now();
    let reports = run_grid(CheckId::Thm12, 61, -9, None, 0).unwrap();
    assert!(grid_passes(CheckId::Thm12, &reports));
    // the lone even case is settled exactly, not skipped
    let even = reports
        .iter()
        .find(|r| r.p == Some(2) && r.r == Some(1))
        .expect("p = 2, r = 1 must be on the grid");
    assert_eq!(even.status, Status::Pass);
    assert_clean(2, "quintic family mod p^5, p <= 61 incl. p = 2", &reports, 5);
    assert!(t0.elapsed().as_secs() < 120, "took {:?}", t0.elapsed());
}

#[test]
fn criterion_03_strengthened_r1_congruence_and_sharpness() {
    let reports = run_grid(CheckId::Lr11, 37, 1, None, 0).unwrap();
    let in_range: Vec<_> = reports
        .iter()
        .filter(|r| r.p.unwrap() >= 5)
        .cloned()
        .collect();
    assert!(in_range.iter().all(|r| r.status == Status::Pass));
    assert!(in_range.iter().all(|r| r.diff_valuation.at_least(6)));

    // negative control: at some prime the congruence fails mod p^7,
    // i.e. the difference has valuation exactly 6
    let sharp = run_grid(CheckId::Lr11ModP7Failure, 37, 1, None, 0).unwrap();
    assert!(grid_passes(CheckId::Lr11ModP7Failure, &sharp));
    let witnesses = sharp.iter().filter(|r| r.status == Status::Pass).count();
    assert!(witnesses >= 1);
    println!(
        "criterion 3: PASS - r = 1 congruence mod p^6 for 5 <= p <= 37 ({} primes), \
         with {witnesses} primes of valuation exactly 6",
        in_range.len()
    );
}

#[test]
fn criterion_04_named_single_prime_congruences() {
    let d2 = run_grid(CheckId::VanHammeD2, 61, 1, None, 0).unwrap();
    let gs = run_grid(CheckId::Gs12, 61, 1, None, 0).unwrap();
    let liu = run_grid(CheckId::Liu13, 61, 1, None, 0).unwrap();
    for (label, reports, min_val) in [
        ("mod p^4 (both classes)", &d2, 4u32),
        ("mod p^4 (p = 1 mod 6)", &gs, 4),
        ("mod p^5 (p != 5)", &liu, 5),
    ] {
        let (pass, _, fail) = tally(reports);
        assert_eq!(fail, 0, "{label}: {fail} failures");
        assert!(pass > 0);
        for r in reports {
            if r.status != Status::Skipped {
                assert!(r.diff_valuation.at_least(min_val), "{label} at p={:?}", r.p);
            }
        }
    }
    println!(
        "criterion 4: PASS - three named r = +-1 congruences over all primes <= 61: \
         {} + {} + {} passes",
        tally(&d2).0,
        tally(&gs).0,
        tally(&liu).0
    );
}

#[test]
fn criterion_05_open_conjecture_grid() {
    let reports = run_grid(CheckId::Conj41, 61, -9, None, 0).unwrap();
    let (pass, skip, fail) = tally(&reports);
    // any conjectural_fail is surfaced by this assertion, never hidden
    let refuted: Vec<_> = reports
        .iter()
        .filter(|r| r.status == Status::ConjecturalFail)
        .map(|r| (r.p, r.r))
        .collect();
    assert!(refuted.is_empty(), "conjectural failures at {refuted:?}");
    assert_eq!(fail, 0);
    assert!(pass > 0);
    assert!(reports
        .iter()
        .filter(|r| r.status != Status::Skipped)
        .all(|r| r.status == Status::ConjecturalPass));
    println!(
        "criterion 5: PASS - open quintic conjecture, p <= 61, r in [-9,1]: \
         {pass} conjectural_pass, {skip} skip"
    );
}

#[test]
fn criterion_06_transformation_identity_exactly() {
    let t0 = Instant::now();
    let instances = oracle::sample_instances(100, 0xACCE_5515);
    assert_eq!(instances.len(), 100);
    for inst in &instances {
        let lhs = oracle::transformation_lhs(inst).unwrap();
        let rhs = oracle::transformation_rhs(inst).unwrap();
        assert_eq!(lhs, rhs, "transformation broke at {inst:?}");
    }
    // exhaustive small-order grid at fixed non-integral parameters
    let mut grid = 0;
    for n in 0..=3u32 {
        for m in 0..=3u32 {
            let inst = oracle::IdentityInstance {
                n,
                m,
                t: rat(1, 3),
                a: rat(1, 4),
                b: rat(1, 5),
                c: rat(1, 7),
            };
            let lhs = oracle::transformation_lhs(&inst).unwrap();
            let rhs = oracle::transformation_rhs(&inst).unwrap();
            assert_eq!(lhs, rhs, "transformation broke at n={n}, m={m}");
            grid += 1;
        }
    }
    assert!(t0.elapsed().as_secs() < 30, "took {:?}", t0.elapsed());
    println!(
        "criterion 6: PASS - series transformation exact over Q on 100 random \
         instances and a {grid}-point boundary grid"
    );
}

#[test]
fn criterion_07_gamma_defining_identities() {
    let t0 = Instant::now();
    let mut checked = 0;
    for p in supercong::suite::primes_up_to(97) {
        for k in 1..=6 {
            let rep = run_check(CheckId::Lemma22, Some(p), None, Some(k), 0).unwrap();
            match rep.status {
                Status::Skipped => assert_eq!(p, 2),
                Status::Pass => checked += 1,
                other => panic!("p = {p}, k = {k}: {other:?}"),
            }
        }
    }
    assert!(checked >= 24 * 6);
    assert!(t0.elapsed().as_secs() < 60, "took {:?}", t0.elapsed());
    println!(
        "criterion 7: PASS - Gamma reflection/shift/stability contract at \
         {checked} (p, k) points, p <= 97, k <= 6"
    );
}

#[test]
fn criterion_08_gamma_expansion_all_residues() {
    let mut checked = 0;
    for p in [5u64, 7, 11, 13] {
        let ctx = PAdicContext::new(p, 2).unwrap();
        let tbl = shared_table(p, 2).unwrap();
        let g1 = g1_at_zero(ctx).unwrap();
        let g1_lift = ctx.from_residue(g1.residue());
        for x in 0..p as i128 {
            // truncated harmonic sum attached to the residue of -x
            let bound = p as i128 - 1 - (-x).rem_euclid(p as i128);
            let mut h = ctx.zero();
            for j in 1..=bound {
                h = h + ctx.from_integer(j).inv().unwrap();
            }
            let gx = tbl.gamma(x, 1).unwrap().value;
            for t in 1..=3i128 {
                let lhs = tbl.gamma(x + t * p as i128, 1).unwrap().value * gx.inv().unwrap();
                let tp = ctx.from_integer(t * p as i128);
                let rhs = ctx.one() + g1_lift * tp + tp * h;
                assert_eq!(
                    valuation_of_difference(&lhs, &rhs).unwrap(),
                    Valuation::Top,
                    "expansion broke at p = {p}, x = {x}, t = {t}"
                );
                checked += 1;
            }
        }
        let rep = run_check(CheckId::Lemma23, Some(p), None, None, 0).unwrap();
        assert_eq!(rep.status, Status::Pass);
    }
    println!(
        "criterion 8: PASS - mod p^2 Gamma shift expansion at all {checked} \
         (x, t) points for p in {{5, 7, 11, 13}}"
    );
}

#[test]
fn criterion_09_cyclotomic_pochhammer_congruences() {
    for p in [7u64, 11, 13] {
        let quintic = run_check(CheckId::Lemma24, Some(p), None, None, 0).unwrap();
        assert_eq!(quintic.status, Status::Pass, "quintic at p = {p}");
        assert!(quintic.diff_valuation.at_least(6));
        let quartic = run_check(CheckId::Lemma31, Some(p), None, None, 0).unwrap();
        assert_eq!(quartic.status, Status::Pass, "quartic at p = {p}");
        assert!(quartic.diff_valuation.at_least(5));

        // exact single-factor identities behind both congruences
        let base = PAdicContext::new(p, 6).unwrap();
        let c5 = CycloContext::new(base, 5).unwrap();
        let c4 = CycloContext::new(base, 4).unwrap();
        let pp = base.from_integer(p as i128);
        let mut rng = ChaCha8Rng::seed_from_u64(p);
        for _ in 0..10 {
            let u = base.from_integer(rng.gen_range(-50i128..=50));
            let v = base.from_integer(rng.gen_range(-50i128..=50));
            let j = base.from_integer(rng.gen_range(0i128..=20));
            let lhs5 = quintuple_product(&c5, u, v, j).unwrap();
            let rhs5 = c5.embed((u + j).pow(5) + (v * pp).pow(5));
            assert!(lhs5.try_sub(&rhs5).unwrap().is_zero());
            let lhs4 = quadruple_product(&c4, u, v, j).unwrap();
            let rhs4 = c4.embed((u + j).pow(4) - (v * pp).pow(4));
            assert!(lhs4.try_sub(&rhs4).unwrap().is_zero());
        }
    }
    println!(
        "criterion 9: PASS - zeta-shifted Pochhammer congruences mod p^6 / p^5 \
         for p in {{7, 11, 13}}, plus exact factor identities"
    );
}

#[test]
fn criterion_10_mod_p_lemmas_full_grid() {
    let mut total = 0;
    for id in [
        CheckId::Lemma25,
        CheckId::Lemma27,
        CheckId::Lemma32,
        CheckId::GlsModpFacts,
    ] {
        let reports = run_grid(id, 61, -9, None, 0).unwrap();
        let (pass, _, fail) = tally(&reports);
        assert_eq!(fail, 0, "{id} has failures");
        assert!(pass > 0, "{id} never ran");
        total += pass;
    }
    let exact = run_grid(CheckId::Lemma26, 61, -9, None, 0).unwrap();
    let (pass, _, fail) = tally(&exact);
    assert_eq!(fail, 0);
    assert!(pass > 0);
    println!(
        "criterion 10: PASS - mod-p harmonic lemmas over p <= 61, r in [-9,1] \
         ({total} points) and the exact rational symmetry for {pass} values of r"
    );
}

#[test]
fn criterion_11_key_mod_p2_congruence() {
    let reports = run_grid(CheckId::Eq23Key, 37, -9, None, 0).unwrap();
    assert_clean(
        11,
        "key product congruence mod p^2 over the cubic grid",
        &reports,
        2,
    );
}

#[test]
fn criterion_12_oracle_equivalence() {
    // modular weighted sums vs independent exact-rational reductions
    let mut agreed = 0;
    for p in [5u64, 7, 11, 13] {
        let ctx6 = PAdicContext::new(p, 6).unwrap();
        let ctx5 = PAdicContext::new(p, 5).unwrap();
        let upper = p as i64 - 1;
        for r in -9..=1i64 {
            if let Ok(fast) = weighted_sum_6(ctx6, r, upper) {
                let exact = oracle::reduce(ctx6, &oracle::s6_rational(r, upper)).unwrap();
                assert_eq!(fast.residue(), exact.residue(), "S6 at p={p}, r={r}");
                agreed += 1;
            }
            if let Ok(fast) = weighted_sum_10(ctx5, r, upper) {
                let exact = oracle::reduce(ctx5, &oracle::s10_rational(r, upper)).unwrap();
                assert_eq!(fast.residue(), exact.residue(), "S10 at p={p}, r={r}");
                agreed += 1;
            }
            if let Ok(fast) = finite_rhs_sum(&ctx6, SumFamily::Cubic, r) {
                if let Ok(exact) = oracle::reduce(ctx6, &oracle::cubic_rhs_rational(r)) {
                    assert_eq!(fast.residue(), exact.residue(), "cubic rhs p={p}, r={r}");
                    agreed += 1;
                }
            }
            if let Ok(fast) = finite_rhs_sum(&ctx5, SumFamily::Quintic, r) {
                if let Ok(exact) = oracle::reduce(ctx5, &oracle::quintic_rhs_rational(r)) {
                    assert_eq!(fast.residue(), exact.residue(), "quintic rhs p={p}, r={r}");
                    agreed += 1;
                }
            }
        }
    }
    assert!(agreed >= 60, "only {agreed} oracle comparisons ran");

    // block-product factorial vs the naive unit product
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut points = 0;
    for (p, k) in [(5u64, 6u32), (7, 6), (13, 6), (31, 4), (97, 4)] {
        let tbl = shared_table(p, k).unwrap();
        let m = tbl.context().modulus();
        let limit = m.min(1_000_000);
        let ell = tbl.block_len();
        let mut samples = vec![0u128, 1, 2, p as u128, p as u128 + 1, ell - 1, ell, ell + 1];
        for _ in 0..12 {
            samples.push(rng.gen_range(0..=limit));
        }
        for n in samples {
            let mut naive: u128 = 1;
            for j in 1..n {
                if j % p as u128 != 0 {
                    naive = naive * j % m;
                }
            }
            let fast = tbl.morita_factorial(n).unwrap();
            assert_eq!(fast.residue(), naive, "factorial at p={p}, k={k}, n={n}");
            points += 1;
        }
    }
    println!(
        "criterion 12: PASS - {agreed} sum reductions and {points} factorial \
         points match the exact oracles bit-for-bit"
    );
}

#[test]
fn criterion_13_cross_consistency_of_closed_forms() {
    for pair in ALL_PAIRS {
        let mut passes = 0;
        for p in supercong::suite::primes_up_to(37) {
            if p == 2 {
                continue;
            }
            let rep = cross_consistency(pair, p).unwrap();
            match rep.status {
                Status::Pass => passes += 1,
                Status::Skipped => {}
                other => panic!("{} at p = {p}: {other:?}", pair.name()),
            }
        }
        assert!(passes > 0, "{} never applied", pair.name());
    }
    // the third pair exercises a closed form that both sides must agree on
    assert_eq!(
        cross_consistency(ConsistencyPair::QuinticR1VsCorollary, 7)
            .unwrap()
            .status,
        Status::Pass
    );
    println!(
        "criterion 13: PASS - all {} registered closed-form specializations \
         agree at every admissible prime <= 37",
        ALL_PAIRS.len()
    );
}
