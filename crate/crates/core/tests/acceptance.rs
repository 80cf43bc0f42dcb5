//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the values it checked (visible with `cargo test -- --nocapture`).
//!
//! Every threshold is exact — integer equality or boolean — and every random
//! batch is driven by a fixed seed, so the suite is fully deterministic.

use ehrmagic_core::cl;
use ehrmagic_core::families::{self, FamilySpec};
use ehrmagic_core::hstar::{self, HStarVector};
use ehrmagic_core::magic::{self, MagicExpansion};
use ehrmagic_core::poly::{rat, rat_int, Polynomial, Rat};
use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn m_index_value(spec: &FamilySpec) -> BigInt {
    let f = families::ehrhart(spec).unwrap();
    magic::m_index(&f)
        .unwrap()
        .value
        .unwrap_or_else(|| panic!("{}: no m-index found", spec.label()))
}

/// Full linear rescan 1..=value: the oracle confirming each binary-search
/// answer (value is positive, everything below it is not).
fn confirm_by_linear_scan(spec: &FamilySpec, value: &BigInt) {
    let f = families::ehrhart(spec).unwrap();
    let mut k = BigInt::one();
    while &k < value {
        assert!(
            !magic::is_magic_positive_at(&f, &Rat::from_integer(k.clone())).unwrap(),
            "{}: already magic positive at {k} < {value}",
            spec.label()
        );
        k += 1;
    }
    assert!(magic::is_magic_positive_at(&f, &Rat::from_integer(value.clone())).unwrap());
}

#[test]
fn criterion_01_cross_polytope_table() {
    let expect = [1u64, 1, 2, 4, 6, 10, 13, 18, 23, 29, 35, 42, 50, 59, 68, 78];
    let mut got = Vec::new();
    for (d, e) in (1..=16usize).zip(expect) {
        let spec = FamilySpec::CrossPolytope { d };
        let v = m_index_value(&spec);
        assert_eq!(v, BigInt::from(e), "cross d={d}");
        confirm_by_linear_scan(&spec, &v);
        got.push(e);
    }
    println!("criterion 01 PASS: m-index of cross polytopes d=1..16 = {got:?}");
}

#[test]
fn criterion_02_reflexive_simplex_table() {
    let expect = [
        1u64, 2, 4, 10, 20, 34, 55, 83, 119, 163, 218, 284, 361, 452, 557, 677,
    ];
    let mut got = Vec::new();
    for (d, e) in (1..=16usize).zip(expect) {
        let spec = FamilySpec::StandardReflexiveSimplex { d };
        let v = m_index_value(&spec);
        assert_eq!(v, BigInt::from(e), "reflexive simplex d={d}");
        confirm_by_linear_scan(&spec, &v);
        got.push(e);
    }
    println!("criterion 02 PASS: m-index of standard reflexive simplices d=1..16 = {got:?}");
}

#[test]
fn criterion_03_standard_simplex_mindex_is_d() {
    for d in 1..=20usize {
        let spec = FamilySpec::StandardSimplex { d };
        let v = m_index_value(&spec);
        assert_eq!(v, BigInt::from(d), "simplex d={d}");
        confirm_by_linear_scan(&spec, &v);
    }
    println!("criterion 03 PASS: m-index(simplex d) = d for d = 1..20");
}

#[test]
fn criterion_04_minimal_matroid_mindex() {
    for n in 2..=12usize {
        let spec = FamilySpec::MinimalMatroid { k: 1, n };
        let v = m_index_value(&spec);
        assert_eq!(v, BigInt::from(n - 1), "D_1,{n}");
        confirm_by_linear_scan(&spec, &v);
    }
    for n in 4..=12usize {
        let spec = FamilySpec::MinimalMatroid { k: 2, n };
        let v = m_index_value(&spec);
        assert_eq!(v, BigInt::from(n - 2), "D_2,{n}");
        confirm_by_linear_scan(&spec, &v);
    }
    println!("criterion 04 PASS: m-index(B(T_1,n)) = n-1 (n=2..12), m-index(B(T_2,n)) = n-2 (n=4..12)");
}

#[test]
fn criterion_05_multipartite_table() {
    let table: [(&[u64], u64); 8] = [
        (&[1, 1, 1], 2),
        (&[2, 2, 2], 2),
        (&[3, 3, 3], 4),
        (&[1, 2, 3], 3),
        (&[1, 2, 4], 4),
        (&[1, 2, 5], 5),
        (&[1, 2, 3, 4], 5),
        (&[1, 1, 1, 5], 5),
    ];
    for (parts, expect) in table {
        let spec = FamilySpec::CompleteMultipartite {
            parts: parts.to_vec(),
        };
        let v = m_index_value(&spec);
        assert_eq!(v, BigInt::from(expect), "{}", spec.label());
        confirm_by_linear_scan(&spec, &v);
    }
    println!("criterion 05 PASS: multipartite m-indices (2,2,4,3,4,5,5,5) reproduced");
}

#[test]
fn criterion_06_bipartite_formula() {
    for q1 in 2..=8u64 {
        for q2 in 2..=8u64 {
            let spec = FamilySpec::CompleteMultipartite {
                parts: vec![q1, q2],
            };
            let v = m_index_value(&spec);
            assert_eq!(
                v,
                BigInt::from((q1 - 1).max(q2 - 1)),
                "bipartite ({q1},{q2})"
            );
        }
    }
    println!("criterion 06 PASS: m-index(bipartite q1,q2) = max(q1-1, q2-1) for 2 <= q1,q2 <= 8");
}

#[test]
fn criterion_07_hypersimplex_half_dilation_positive() {
    for n in 4..=12usize {
        let k = n.div_ceil(2) as u64;
        let f = families::ehrhart_dilated(&FamilySpec::Hypersimplex { k: 2, n }, k).unwrap();
        assert!(
            magic::is_magic_positive(&f).unwrap(),
            "E_2,{n} at dilation {k}"
        );
    }
    for n in 6..=12usize {
        let k = n.div_ceil(2) as u64;
        let f = families::ehrhart_dilated(&FamilySpec::Hypersimplex { k: 3, n }, k).unwrap();
        assert!(
            magic::is_magic_positive(&f).unwrap(),
            "E_3,{n} at dilation {k}"
        );
    }
    println!("criterion 07 PASS: ceil(n/2)-dilates of hypersimplices k=2 (n=4..12) and k=3 (n=6..12) are magic positive");
}

#[test]
fn criterion_08_degree_two_always_positive_at_two() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ec7a11);
    for case in 0..200 {
        let b = rng.gen_range(0..=50i64);
        let a = rng.gen_range(b..=50i64);
        let h = HStarVector::from_ints(&[1, a, b]);
        let f = hstar::ehrhart_from_hstar(&h);
        let m = magic::m_index(&f).unwrap().value.unwrap();
        assert!(
            m <= BigInt::from(2),
            "case {case}: h* = (1,{a},{b}) has m-index {m} > 2"
        );
    }
    println!("criterion 08 PASS: 200 random d=2 h*-vectors (1,a,b), a >= b >= 0 <= 50: m-index <= 2");
}

#[test]
fn criterion_09_counterexample_search_terminates_and_verifies() {
    for d in 3..=6usize {
        for k in 1..=5u64 {
            let q = families::counterexample_q(d, k).unwrap();
            let f =
                families::ehrhart_dilated(&FamilySpec::SpikedSimplex { q, d }, k).unwrap();
            assert!(
                !magic::is_magic_positive(&f).unwrap(),
                "d={d}, k={k}: q={q} should fail"
            );
            if q > 1 {
                let prev = families::ehrhart_dilated(
                    &FamilySpec::SpikedSimplex { q: q - 1, d },
                    k,
                )
                .unwrap();
                assert!(
                    magic::is_magic_positive(&prev).unwrap(),
                    "d={d}, k={k}: q-1={} should still be positive",
                    q - 1
                );
            }
        }
    }
    println!("criterion 09 PASS: counterexample q found and verified minimal for d in 3..6, k in 1..5");
}

#[test]
fn criterion_10_monotonicity_of_dilation() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xd11a7e);
    let mut checked = 0u32;
    for _ in 0..500 {
        let deg = rng.gen_range(1..=8usize);
        let coeffs: Vec<Rat> = (0..=deg)
            .map(|_| rat(rng.gen_range(1..=100), rng.gen_range(1..=20)))
            .collect();
        let f = Polynomial::from_coeffs(coeffs);
        for k in 1..=20i64 {
            if magic::is_magic_positive_at(&f, &rat_int(k)).unwrap() {
                for dk in 1..=5 {
                    assert!(
                        magic::is_magic_positive_at(&f, &rat_int(k + dk)).unwrap(),
                        "violation at integer k' = {} after k = {k}",
                        k + dk
                    );
                }
                for _ in 0..3 {
                    let kp = rat_int(k) + rat(rng.gen_range(1..=200), rng.gen_range(1..=40));
                    assert!(
                        magic::is_magic_positive_at(&f, &kp).unwrap(),
                        "violation at rational k' = {kp} after k = {k}"
                    );
                }
                checked += 1;
            }
        }
    }
    println!("criterion 10 PASS: dilation monotonicity held at {checked} positive dilation points, zero violations");
}

#[test]
fn criterion_11_nonnegative_expansions_have_real_rooted_numerators() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7ea1);
    for case in 0..300 {
        let d = rng.gen_range(0..=8usize);
        let mut coeffs: Vec<Rat> = (0..=d)
            .map(|_| rat(rng.gen_range(0..=30), rng.gen_range(1..=8)))
            .collect();
        let idx = rng.gen_range(0..=d);
        coeffs[idx] += rat_int(rng.gen_range(1..=5));
        let e = MagicExpansion::new(coeffs);
        let numerator = hstar::numerator_from_magic(&e).polynomial();
        assert!(
            hstar::is_real_rooted(&numerator).unwrap(),
            "case {case}: numerator {numerator} is not real-rooted"
        );
    }
    println!("criterion 11 PASS: 300 random non-negative magic expansions (d <= 8) give real-rooted numerators");
}

#[test]
fn criterion_12_formula_vs_enumeration_sweep() {
    let specs = families::verification_sweep();
    let mut tuples = 0u32;
    for spec in &specs {
        let f = families::ehrhart(spec).unwrap();
        for dilation in 1..=3u64 {
            for n in 1..=3u64 {
                let count = families::lattice_count(spec, dilation, n).unwrap().count;
                let value = f.eval(&rat_int((dilation * n) as i64));
                assert!(value.is_integer(), "{}: E({}) not an integer", spec.label(), dilation * n);
                assert_eq!(
                    value.to_integer(),
                    count,
                    "{}: formula vs enumeration at dilation {dilation}, n = {n}",
                    spec.label()
                );
                tuples += 1;
            }
        }
    }
    println!(
        "criterion 12 PASS: formula = enumeration on {} family instances x 9 (dilation, n) pairs = {tuples} counts",
        specs.len()
    );
}

#[test]
fn criterion_13_identities_and_round_trips() {
    for n in 3..=8usize {
        let ones = families::ehrhart(&FamilySpec::CompleteMultipartite { parts: vec![1; n] })
            .unwrap();
        let hyper = families::ehrhart(&FamilySpec::Hypersimplex { k: 2, n }).unwrap();
        assert_eq!(ones, hyper, "all-ones multipartite vs second hypersimplex, n = {n}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x0a0b0c);
    for _ in 0..500 {
        let deg = rng.gen_range(0..=8usize);
        let coeffs: Vec<Rat> = (0..=deg)
            .map(|_| rat(rng.gen_range(-60..=60), rng.gen_range(1..=12)))
            .collect();
        let f = Polynomial::from_coeffs(coeffs);
        if f.is_zero() {
            continue;
        }
        let k = rat(rng.gen_range(1..=40), rng.gen_range(1..=10));
        let e = magic::to_magic(&f, &k).unwrap();
        assert_eq!(magic::from_magic(&e), f.scale_arg(&k), "magic round trip");
        let h = hstar::hstar_from_ehrhart(&f).unwrap();
        assert_eq!(hstar::ehrhart_from_hstar(&h), f, "h* round trip");
    }
    println!("criterion 13 PASS: multipartite/hypersimplex identity (n <= 8) and 500 random round trips, all exact");
}

#[test]
fn criterion_14_cl_pipeline_bounds() {
    for d in 1..=10usize {
        for spec in [
            FamilySpec::CrossPolytope { d },
            FamilySpec::StandardReflexiveSimplex { d },
        ] {
            let f = families::ehrhart(&spec).unwrap();
            let cert = cl::cl_check(&f).unwrap();
            assert!(cert.is_cl, "{} must be CL", spec.label());
            let m = magic::m_index(&f).unwrap().value.unwrap();
            let bound = cl::cl_mindex_bound(&f).unwrap();
            let dim = cl::dimension_only_bound(d as u64);
            assert!(
                m <= bound && bound <= dim,
                "{}: need m-index {m} <= {bound} <= {dim}",
                spec.label()
            );
        }
    }
    println!("criterion 14 PASS: CL certificates hold and m-index <= CL bound <= dimension bound for both families, d <= 10");
}

#[test]
fn criterion_15_reflexivity_criteria_agree() {
    let mut specs: Vec<FamilySpec> = Vec::new();
    for d in 1..=8 {
        specs.push(FamilySpec::StandardSimplex { d });
        specs.push(FamilySpec::CrossPolytope { d });
        specs.push(FamilySpec::StandardReflexiveSimplex { d });
    }
    for q in 1..=3u64 {
        for d in 1..=8usize {
            specs.push(FamilySpec::SpikedSimplex { q, d });
        }
    }
    for n in 2..=9usize {
        for k in 1..n {
            specs.push(FamilySpec::MinimalMatroid { k, n });
        }
    }
    for n in 3..=9usize {
        for k in 1..n {
            specs.push(FamilySpec::Hypersimplex { k, n });
        }
    }
    for parts in [
        vec![1u64, 1, 1],
        vec![2, 2, 2],
        vec![1, 2, 3],
        vec![1, 2, 4],
        vec![2, 3],
        vec![3, 3],
        vec![4, 4],
    ] {
        specs.push(FamilySpec::CompleteMultipartite { parts });
    }
    let mut checked = 0u32;
    for spec in &specs {
        let f = families::ehrhart(spec).unwrap();
        if f.degree().unwrap() > 8 {
            continue;
        }
        let magic_side = hstar::reflexive_magic_check(&f).unwrap();
        let hstar_side = hstar::is_palindromic(&hstar::hstar_from_ehrhart(&f).unwrap());
        assert_eq!(magic_side, hstar_side, "{}", spec.label());
        checked += 1;
    }
    println!("criterion 15 PASS: magic-palindromicity <=> h*-palindromicity on {checked} family instances (d <= 8)");
}
