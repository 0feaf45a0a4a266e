//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Run with `cargo test -p riordan-cli --test acceptance -- --nocapture`.
//! Everything here is exact rational arithmetic; every comparison is an
//! exact equality, no tolerances anywhere.

use std::process::Command;

use riordan::bell;
use riordan::catalog;
use riordan::identities::{self, ibinom, SuiteBounds, SUITE_NAMES};
use riordan::onepth::{self, Orientation};
use riordan::riordan::recurrence_violation;
use riordan::{Rat, RatArray, RatSeries};

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

fn int(v: i64) -> Rat {
    Rat::from_integer(v.into())
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_riordan"))
}

/// Tiny deterministic generator for the "random" grids; keeps the suite
/// reproducible without an RNG dependency.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % (hi - lo + 1) as u64) as i64
    }

    fn rat(&mut self, lo: i64, hi: i64, max_den: i64) -> Rat {
        rat(self.int_in(lo, hi), self.int_in(1, max_den))
    }
}

#[test]
fn criterion_1_onepth_constructions_match_index_extraction() {
    // parent order 25 so the p = 1 construction still covers row 24
    let parent_order = 25usize;
    let budget = 24usize;
    for entry in catalog::arrays() {
        let parent = (entry.build)(parent_order);
        for p in 1..=4usize {
            for r in 0..=3usize {
                let n_max = (budget - r) / p;
                for orientation in [Orientation::Vertical, Orientation::Horizontal] {
                    let spec = onepth::OnePthSpec::new(p, r, orientation);
                    let constructed = spec.build(&parent).unwrap();
                    assert!(
                        constructed.order() >= n_max,
                        "{} p={p} r={r} {orientation}: order {} < {n_max}",
                        entry.name,
                        constructed.order()
                    );
                    let extracted = spec.oracle(&parent, n_max + 1).unwrap();
                    for (n, row) in extracted.iter().enumerate() {
                        for (k, want) in row.iter().enumerate() {
                            assert_eq!(
                                constructed.entry(n, k).unwrap(),
                                *want,
                                "{} p={p} r={r} {orientation} entry ({n},{k})",
                                entry.name
                            );
                        }
                    }
                }
            }
        }
    }
    println!("criterion 1 PASS: one-pth constructions equal index extraction (pn+r <= 24)");
}

#[test]
fn criterion_2_a_sequence_claims() {
    let parent_order = 25usize;
    for entry in catalog::arrays() {
        let parent = (entry.build)(parent_order);
        for p in 1..=4usize {
            for r in 0..=3usize {
                for orientation in [Orientation::Vertical, Orientation::Horizontal] {
                    let spec = onepth::OnePthSpec::new(p, r, orientation);
                    let constructed = spec.build(&parent).unwrap();
                    let computed = constructed.a_sequence().unwrap();
                    let formula = onepth::a_seq_formula(&parent, p, orientation).unwrap();
                    assert!(
                        computed.agrees_with(&formula),
                        "{} p={p} r={r} {orientation}: A-sequence mismatch",
                        entry.name
                    );
                }
            }
        }
    }
    println!("criterion 2 PASS: A-sequences equal (f/t)^(p-1) / A(t)^p on the whole grid");
}

#[test]
fn criterion_3_displayed_matrices_byte_for_byte() {
    let out = bin()
        .args(["show", "pascal", "--rows", "5"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "1\n1  1\n1  2  1\n1  3  3  1\n1  4  6  4  1\n"
    );

    let out = bin()
        .args(["inverse", "pascal", "--rows", "5"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        " 1\n-1   1\n 1  -2   1\n-1   3  -3   1\n 1  -4   6  -4  1\n"
    );
    println!("criterion 3 PASS: Pascal and its inverse render byte-for-byte");
}

#[test]
fn criterion_4_identity_suites_have_zero_failures() {
    let bounds = SuiteBounds::default();
    let reports = identities::run_suite(&SUITE_NAMES, &bounds).unwrap();
    assert_eq!(reports.len(), SUITE_NAMES.len());
    for rep in &reports {
        assert_eq!(rep.total, rep.passed + rep.failed, "{}", rep.name);
        assert!(
            rep.all_passed(),
            "suite {} failed: {:?}",
            rep.name,
            rep.first_failure
        );
        assert!(rep.total > 0, "{} ran no cases", rep.name);
    }
    println!("criterion 4 PASS: all nine identity suites report zero failures");
}

#[test]
fn criterion_5_fuss_catalan_properties() {
    let order = 24usize;

    for m in 0..=5usize {
        let f = catalog::fuss_catalan(m, order);
        let rhs = f
            .pow_int(m as i64)
            .unwrap()
            .shift(1)
            .unwrap()
            .add(&RatSeries::one(order + 1));
        assert!(rhs.agrees_with(&f), "F_{m} = 1 + t F_{m}^{m}");
    }

    for p in 2..=5usize {
        let f = catalog::fuss_catalan(p, order);
        let mut lin = vec![Rat::new(0.into(), 1.into()); order + 1];
        lin[0] = int(1);
        lin[1] = int(-1);
        let inner =
            RatSeries::identity(order).mul(&RatSeries::new(lin).pow_int(p as i64 - 1).unwrap());
        let composed = f.compose(&inner).unwrap();
        let geometric = RatSeries::new(vec![Rat::from_integer(1.into()); order + 1]);
        assert!(composed.agrees_with(&geometric), "p = {p}");
    }

    let exponents = [
        (int(1), (1i64, 1u64)),
        (int(2), (2, 1)),
        (int(3), (3, 1)),
        (rat(1, 2), (1, 2)),
    ];
    for m in 0..=4usize {
        let base = catalog::fuss_catalan(m, order);
        for (r, (num, den)) in &exponents {
            assert_eq!(
                catalog::fuss_catalan_power(m, r, order),
                base.pow_rational(*num, *den).unwrap(),
                "m = {m}, r = {r}"
            );
        }
    }

    let t = catalog::ternary(order);
    for (n, v) in [1i64, 1, 3, 12, 55, 273, 1428].iter().enumerate() {
        assert_eq!(t.coeff(n).unwrap(), int(*v), "ternary n = {n}");
    }
    println!(
        "criterion 5 PASS: Fuss-Catalan functional equation, collapse, powers, ternary prefix"
    );
}

#[test]
fn criterion_6_closed_form_coefficients() {
    // with w = revert(t/(1+t)^p): [t^n] (1+w)^(r+1)/(1-(p-1)w) = binom(pn+r, n)
    let order = 13usize;
    for p in 2..=3usize {
        let mut one_plus = vec![Rat::new(0.into(), 1.into()); order + 1];
        one_plus[0] = int(1);
        one_plus[1] = int(1);
        let one_plus_t = RatSeries::new(one_plus);
        let w = RatSeries::identity(order)
            .div(&one_plus_t.pow_int(p as i64).unwrap())
            .unwrap()
            .revert()
            .unwrap();
        // sanity: w satisfies w = t (1+w)^p
        let rhs = w
            .add(&RatSeries::one(order))
            .pow_int(p as i64)
            .unwrap()
            .shift(1)
            .unwrap();
        assert!(rhs.agrees_with(&w), "w = t(1+w)^{p}");

        let one_plus_w = w.add(&RatSeries::one(order));
        let denom = RatSeries::one(order).sub(&w.scale(&int(p as i64 - 1)));
        for r in 0..=2usize {
            let series = one_plus_w
                .pow_int(r as i64 + 1)
                .unwrap()
                .div(&denom)
                .unwrap();
            for n in 0..=12i64 {
                assert_eq!(
                    series.coeff(n as usize).unwrap(),
                    ibinom(p as i64 * n + r as i64, n),
                    "p={p} r={r} n={n}"
                );
            }
        }
    }
    println!("criterion 6 PASS: (1+w)^(r+1)/(1-(p-1)w) has coefficients binom(pn+r, n)");
}

#[test]
fn criterion_7_bell_and_faa_di_bruno() {
    let mut lcg = Lcg(0x5eed_cafe);

    // partition-sum Bell polynomials equal the series route, n <= 8
    for _ in 0..20 {
        let mut coeffs = vec![0i64];
        for _ in 0..8 {
            coeffs.push(lcg.int_in(-2, 2));
        }
        if coeffs[1] == 0 {
            coeffs[1] = 1;
        }
        let f = RatSeries::from_ints(&coeffs);
        for n in 1..=8usize {
            for k in 1..=n {
                let xs: Vec<Rat> = (1..=(n - k + 1))
                    .map(|i| bell::factorial::<Rat>(i) * f.coeff(i).unwrap())
                    .collect();
                assert_eq!(
                    bell::bell_polynomial(n, k, &xs),
                    bell::bell_via_series(&f, n, k).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
    }

    // reciprocal relations round-trip on random alpha-lists
    let n = 8usize;
    for round in 0..10 {
        let alpha: Vec<Rat> = (0..n).map(|_| lcg.rat(-4, 4, 3)).collect();
        let mut fderivs: Vec<Rat> = (0..=n).map(|_| lcg.rat(-3, 3, 2)).collect();
        while fderivs[1] == int(0) {
            fderivs[1] = lcg.rat(-3, 3, 2);
        }
        let beta = bell::reciprocal_forward(&alpha, &fderivs, n).unwrap();
        let fs = RatSeries::new(
            (0..=n)
                .map(|k| {
                    if k == 0 {
                        Rat::new(0.into(), 1.into())
                    } else {
                        &fderivs[k] / bell::factorial::<Rat>(k)
                    }
                })
                .collect(),
        );
        let fbar = fs.revert().unwrap();
        let fbar_derivs: Vec<Rat> = (0..=n)
            .map(|k| bell::factorial::<Rat>(k) * fbar.coeff(k).unwrap())
            .collect();
        let back = bell::reciprocal_backward(&beta, &fbar_derivs, n).unwrap();
        assert_eq!(back, alpha, "round {round}");
    }

    // power case equals pow_rational
    for (num, den) in [(5i64, 3u64), (1, 2), (-2, 3), (3, 1)] {
        let alpha: Vec<Rat> = (0..n).map(|_| lcg.rat(-3, 3, 2)).collect();
        let p = rat(num, den as i64);
        let beta = bell::power_case_beta(&alpha, &p, n);
        let mut coeffs = vec![int(1)];
        coeffs.extend(alpha.iter().cloned());
        let powed = RatSeries::new(coeffs).pow_rational(num, den).unwrap();
        for j in 1..=n {
            assert_eq!(beta[j - 1], powed.coeff(j).unwrap(), "p={p} j={j}");
        }
    }

    // iteration-matrix law (1, f o g) = (1, g)(1, f)
    for round in 0..10 {
        let mut fc = vec![0i64, lcg.int_in(1, 3)];
        let mut gc = vec![0i64, lcg.int_in(1, 3)];
        for _ in 0..9 {
            fc.push(lcg.int_in(-3, 3));
            gc.push(lcg.int_in(-3, 3));
        }
        let f = RatSeries::from_ints(&fc);
        let g = RatSeries::from_ints(&gc);
        let one = RatSeries::one(f.order());
        let left = RatArray::new(one.clone(), f.compose(&g).unwrap()).unwrap();
        let right = RatArray::new(one.clone(), g.clone())
            .unwrap()
            .multiply(&RatArray::new(one.clone(), f.clone()).unwrap())
            .unwrap();
        assert_eq!(left, right, "round {round}");
    }
    println!("criterion 7 PASS: Bell routes, reciprocal round-trips, power case, iteration law");
}

#[test]
fn criterion_8_kernel_properties() {
    let order = 16usize;
    let mut lcg = Lcg(0xfeed_beef);

    // reversion round-trips on every catalog f and 50 random admissible f
    let t = RatSeries::identity(order);
    let mut candidates: Vec<RatSeries> = catalog::arrays()
        .iter()
        .map(|e| (e.build)(order).f().clone())
        .collect();
    for _ in 0..50 {
        let mut coeffs = vec![0i64, lcg.int_in(1, 4)];
        for _ in 0..(order - 1) {
            coeffs.push(lcg.int_in(-4, 4));
        }
        candidates.push(RatSeries::from_ints(&coeffs));
    }
    for f in &candidates {
        let w = f.revert().unwrap();
        assert!(f.compose(&w).unwrap().agrees_with(&t));
        assert!(w.compose(f).unwrap().agrees_with(&t));
    }

    // group axioms on the catalog
    let arrays: Vec<RatArray> = catalog::arrays().iter().map(|e| (e.build)(order)).collect();
    let identity = RatArray::group_identity(order);
    for a in &arrays {
        assert_eq!(&a.multiply(&identity).unwrap(), a);
        assert_eq!(&identity.multiply(a).unwrap(), a);
        let inv = a.inverse().unwrap();
        assert_eq!(a.multiply(&inv).unwrap(), identity);
        assert_eq!(inv.multiply(a).unwrap(), identity);
    }
    for a in &arrays {
        for b in &arrays {
            for c in &arrays {
                assert_eq!(
                    a.multiply(b).unwrap().multiply(c).unwrap(),
                    a.multiply(&b.multiply(c).unwrap()).unwrap()
                );
            }
        }
    }

    // FTRA equals the truncated matrix-vector product
    for a in &arrays {
        for d in [
            RatSeries::one(order)
                .div(&{
                    let mut v = vec![Rat::new(0.into(), 1.into()); order + 1];
                    v[0] = int(1);
                    v[1] = int(-1);
                    RatSeries::new(v)
                })
                .unwrap(),
            catalog::catalan(order),
            RatSeries::from_ints(&[3, -1, 4, 1, -5, 9, 2, -6, 5, 3, 5, 8, 9, 7, 9, 3, 2]),
        ] {
            let h = a.apply_ftra(&d);
            for n in 0..=order {
                let mut acc = Rat::new(0.into(), 1.into());
                for k in 0..=n {
                    acc += a.entry(n, k).unwrap() * d.coeff(k).unwrap();
                }
                assert_eq!(h.coeff(n).unwrap(), acc, "n = {n}");
            }
        }
    }
    println!("criterion 8 PASS: reversion round-trips, group axioms, FTRA at order 16");
}

#[test]
fn criterion_9_negative_controls() {
    // a perturbed beta makes the summation suite fail with a located case
    let bounds = SuiteBounds {
        order: 12,
        max_p: 2,
        max_r: 1,
        max_n: 4,
        perturb_beta: true,
        ..SuiteBounds::default()
    };
    let rep = identities::suite_by_name("summation", &bounds).unwrap();
    assert!(rep.failed > 0, "perturbed beta must fail");
    let fail = rep
        .first_failure
        .as_ref()
        .expect("a located counterexample");
    assert!(!fail.pass);
    assert_ne!(fail.lhs, fail.rhs);
    assert!(fail.params.iter().any(|(k, _)| *k == "n"));

    // a corrupted entry is located by the row-recurrence check
    let p = catalog::pascal(12);
    let a = p.a_sequence().unwrap();
    let z = p.z_sequence().unwrap();
    let mut triangle = p.triangle().to_vec();
    triangle[6][3] += int(1);
    assert_eq!(recurrence_violation(&a, &z, &triangle, 10), Some((6, 3)));

    // and through the CLI: exit code 1 with the counterexample on stdout
    let out = bin()
        .args([
            "identities",
            "--suite",
            "summation",
            "--perturb-beta",
            "--max-p",
            "2",
            "--max-r",
            "1",
            "--max-n",
            "4",
            "--order",
            "12",
        ])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1), "perturbed run must exit 1");
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("FAIL"), "stdout: {stdout}");
    assert!(stdout.contains("first counterexample"), "stdout: {stdout}");

    // unperturbed, the same invocation passes with exit 0
    let out = bin()
        .args([
            "identities",
            "--suite",
            "summation",
            "--max-p",
            "2",
            "--max-r",
            "1",
            "--max-n",
            "4",
            "--order",
            "12",
        ])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    println!("criterion 9 PASS: perturbations fail with located counterexamples, exit code 1");
}
