//! Parameterized identity checks, swept over integer (and rational) grids.
//!
//! Every check computes its left and right sides by genuinely independent
//! routes: closed-form binomial sums against series-extracted entries, or two
//! different theorems against each other. A sweep produces an
//! [`IdentityReport`] with pass/fail counts and the first counterexample,
//! which is what the CLI renders.

use num::{One, Zero};

use crate::catalog;
use crate::error::Result;
use crate::onepth;
use crate::series::PowerSeries;
use crate::{Rat, RatArray, RatSeries};

/// Generalized binomial coefficient `binom(x, k) = x(x-1)...(x-k+1)/k!` for
/// rational `x`; equals the integer binomial for integer `x >= 0` and is 0
/// for `k < 0` by convention.
pub fn gbinom(x: &Rat, k: i64) -> Rat {
    if k < 0 {
        return Rat::zero();
    }
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= x - Rat::from_integer(i.into());
        acc /= Rat::from_integer((i + 1).into());
    }
    acc
}

/// Integer-argument convenience wrapper around [`gbinom`].
pub fn ibinom(n: i64, k: i64) -> Rat {
    gbinom(&Rat::from_integer(n.into()), k)
}

fn int(v: i64) -> Rat {
    Rat::from_integer(v.into())
}

/// One evaluated grid point: both sides of one identity, exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCase {
    pub name: String,
    pub params: Vec<(&'static str, String)>,
    pub lhs: Rat,
    pub rhs: Rat,
    pub pass: bool,
}

impl IdentityCase {
    fn new(name: &str, params: Vec<(&'static str, String)>, lhs: Rat, rhs: Rat) -> Self {
        let pass = lhs == rhs;
        IdentityCase {
            name: name.to_owned(),
            params,
            lhs,
            rhs,
            pass,
        }
    }

    /// Renders the parameters as `p=2 r=0 n=3 k=1`.
    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Result of sweeping one named identity over its grid.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub name: String,
    pub grid: String,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    /// Singular grid points (zero denominators), counted separately and
    /// never treated as failures.
    pub skipped: usize,
    pub first_failure: Option<IdentityCase>,
    /// Every evaluated case, in grid order (for verbose output).
    pub cases: Vec<IdentityCase>,
}

impl IdentityReport {
    fn new(name: &str, grid: String) -> Self {
        IdentityReport {
            name: name.to_owned(),
            grid,
            total: 0,
            passed: 0,
            failed: 0,
            skipped: 0,
            first_failure: None,
            cases: Vec::new(),
        }
    }

    fn push(&mut self, case: IdentityCase) {
        self.total += 1;
        if case.pass {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(case.clone());
            }
        }
        self.cases.push(case);
    }

    fn skip(&mut self) {
        self.skipped += 1;
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Grid bounds for the identity suites.
#[derive(Debug, Clone)]
pub struct SuiteBounds {
    /// Truncation order for every series-backed route.
    pub order: usize,
    pub max_p: usize,
    pub max_r: usize,
    pub max_n: usize,
    /// Rational grid for the Gould / generalized-binomial sweeps.
    pub rational_grid: Vec<Rat>,
    /// Negative control: adds 1 to the beta_1 coefficient used by the
    /// summation suite, which must make it fail with a located case.
    pub perturb_beta: bool,
}

impl Default for SuiteBounds {
    fn default() -> Self {
        let grid = [
            (1, 2),
            (1, 1),
            (5, 2),
            (-1, 2),
            (3, 2),
            (2, 1),
            (-5, 3),
            (7, 2),
            (1, 3),
        ];
        SuiteBounds {
            order: crate::DEFAULT_ORDER,
            max_p: 4,
            max_r: 3,
            max_n: 10,
            rational_grid: grid
                .iter()
                .map(|&(n, d)| Rat::new(n.into(), d.into()))
                .collect(),
            perturb_beta: false,
        }
    }
}

/// The stable suite names, in canonical run order.
pub const SUITE_NAMES: [&str; 9] = [
    "pascal-onepth",
    "summation",
    "fib-catalan",
    "catalan-array",
    "chu-vandermonde",
    "fuss-convolution",
    "gkp-562",
    "gould",
    "fuss-functional",
];

// ---------------------------------------------------------------------------
// individual checks
// ---------------------------------------------------------------------------

/// The beta coefficients of the summation formula: `beta_j = [t^j] A(t)^p`
/// where `A` is the A-sequence of `parent`.
pub fn beta_coeffs(parent: &RatArray, p: usize, len: usize) -> Result<Vec<Rat>> {
    let a_pow = parent.a_sequence()?.pow_int(p as i64)?;
    (0..len).map(|j| a_pow.coeff(j)).collect()
}

fn summation_case(
    parent: &RatArray,
    beta: &[Rat],
    array_name: &str,
    p: usize,
    r: usize,
    n: usize,
    k: usize,
) -> Result<IdentityCase> {
    assert!(beta.len() > n - k, "beta coefficients must cover the sum");
    let lhs = parent.entry(p * (n + 1) + r, (p - 1) * (n + 1) + r + k + 1)?;
    let mut rhs = Rat::zero();
    for (j, b) in beta.iter().enumerate().take(n - k + 1) {
        let d = parent.entry(p * n + r, (p - 1) * n + r + k + j)?;
        if d.is_zero() {
            continue;
        }
        rhs += b * d;
    }
    Ok(IdentityCase::new(
        "summation",
        vec![
            ("array", array_name.to_owned()),
            ("p", p.to_string()),
            ("r", r.to_string()),
            ("n", n.to_string()),
            ("k", k.to_string()),
        ],
        lhs,
        rhs,
    ))
}

/// The one-pth summation formula on a concrete array:
/// `d_{p(n+1)+r, (p-1)(n+1)+r+k+1} = sum_j beta_j d_{pn+r, (p-1)n+r+k+j}`
/// with `beta_j = [t^j] A(t)^p`. Both sides are read from the parent's
/// entries; beta comes from the computed A-sequence.
pub fn check_summation_formula(
    parent: &RatArray,
    p: usize,
    r: usize,
    n: usize,
    k: usize,
) -> Result<IdentityCase> {
    assert!(p >= 1 && k <= n);
    let beta = beta_coeffs(parent, p, n - k + 1)?;
    summation_case(parent, &beta, "custom", p, r, n, k)
}

/// Pure-binomial instance of the summation formula on Pascal:
/// `binom(p(n+1)+r, (p-1)(n+1)+r+k+1)
///  = sum_{j=0}^{min(p, n-k)} binom(p,j) binom(pn+r, (p-1)n+r+k+j)`.
/// The sum is also extended to `n-k`; the extra terms must all vanish.
pub fn check_pascal_onepth(p: i64, r: i64, n: i64, k: i64) -> IdentityCase {
    let lhs = ibinom(p * (n + 1) + r, (p - 1) * (n + 1) + r + k + 1);
    let mut rhs_printed = Rat::zero();
    for j in 0..=p.min(n - k) {
        rhs_printed += ibinom(p, j) * ibinom(p * n + r, (p - 1) * n + r + k + j);
    }
    let mut rhs_full = Rat::zero();
    for j in 0..=(n - k) {
        rhs_full += ibinom(p, j) * ibinom(p * n + r, (p - 1) * n + r + k + j);
    }
    // out-of-range binomials vanish, so both summation bounds agree
    assert_eq!(rhs_printed, rhs_full, "truncated and full sums must agree");
    IdentityCase::new(
        "pascal-onepth",
        vec![
            ("p", p.to_string()),
            ("r", r.to_string()),
            ("n", n.to_string()),
            ("k", k.to_string()),
        ],
        lhs,
        rhs_full,
    )
}

/// The Fibonacci-Catalan double-sum identity from the summation formula on
/// `(1/(1-t-t^2), tC(t))`, evaluated entirely with Fibonacci numbers and
/// binomial weights.
pub fn check_fibonacci_catalan(p: i64, r: i64, n: i64, k: i64) -> IdentityCase {
    let fib = catalog::fibonacci((n - k + 1) as usize);
    let kk = ((p - 1) * (n + 1) + r + k + 1) as usize;
    let mut lhs = Rat::zero();
    for j in 0..=(n - k) as usize {
        let w = catalog::catalan_weight(kk, j);
        if w.is_zero() {
            continue;
        }
        lhs += &fib[(n - k) as usize - j] * w;
    }
    let mut rhs = Rat::zero();
    for i in 0..=(n - k) {
        let ki = ((p - 1) * n + r + k + i) as usize;
        let mut inner = Rat::zero();
        for j in 0..=(n - k - i) as usize {
            let w = catalog::catalan_weight(ki, j);
            if w.is_zero() {
                continue;
            }
            inner += &fib[(n - k - i) as usize - j] * w;
        }
        rhs += ibinom(p + i - 1, i) * inner;
    }
    IdentityCase::new(
        "fib-catalan",
        vec![
            ("p", p.to_string()),
            ("r", r.to_string()),
            ("n", n.to_string()),
            ("k", k.to_string()),
        ],
        lhs,
        rhs,
    )
}

/// The `(C, tC)` identity from the summation formula, with both sides as
/// closed binomial forms.
pub fn check_catalan_array(p: i64, r: i64, n: i64, k: i64) -> IdentityCase {
    let lhs = int((p - 1) * (n + 1) + r + k + 2) / int((p + 1) * (n + 1) + r - k)
        * ibinom((p + 1) * (n + 1) + r - k, n - k);
    let mut rhs = Rat::zero();
    for j in 0..=(n - k) {
        rhs += int((p - 1) * n + r + k + j + 1) / int((p + 1) * n + r - k - j + 1)
            * ibinom(p + j - 1, j)
            * ibinom((p + 1) * n + r - k - j + 1, n - k - j);
    }
    IdentityCase::new(
        "catalan-array",
        vec![
            ("p", p.to_string()),
            ("r", r.to_string()),
            ("n", n.to_string()),
            ("k", k.to_string()),
        ],
        lhs,
        rhs,
    )
}

/// Chu-Vandermonde in convolution form:
/// `sum_{j=s}^n binom(n-j, k-s) binom(j-1, s-1) = binom(n, k)`.
pub fn check_chu_vandermonde(n: i64, k: i64, s: i64) -> IdentityCase {
    let mut lhs = Rat::zero();
    for j in s..=n {
        lhs += ibinom(n - j, k - s) * ibinom(j - 1, s - 1);
    }
    let rhs = ibinom(n, k);
    IdentityCase::new(
        "chu-vandermonde",
        vec![
            ("n", n.to_string()),
            ("k", k.to_string()),
            ("s", s.to_string()),
        ],
        lhs,
        rhs,
    )
}

/// The Fuss-Catalan convolution identity
/// `sum_{j=s}^n (s/j) binom(pj, j-s) binom(p(n-j)+r, n-j-k+s)
///  = binom(pn+r, n-k)`.
pub fn check_fuss_convolution(p: i64, r: i64, n: i64, k: i64, s: i64) -> IdentityCase {
    let mut lhs = Rat::zero();
    for j in s..=n {
        lhs += Rat::new(s.into(), j.into())
            * ibinom(p * j, j - s)
            * ibinom(p * (n - j) + r, n - j - k + s);
    }
    let rhs = ibinom(p * n + r, n - k);
    IdentityCase::new(
        "fuss-convolution",
        vec![
            ("p", p.to_string()),
            ("r", r.to_string()),
            ("n", n.to_string()),
            ("k", k.to_string()),
            ("s", s.to_string()),
        ],
        lhs,
        rhs,
    )
}

/// The `s = 1` corollary written with `1/(pj+1) binom(pj+1, j)` terms.
pub fn check_fuss_convolution_s1(p: i64, r: i64, n: i64, k: i64) -> IdentityCase {
    let mut lhs = Rat::zero();
    for j in 1..=n {
        lhs += ibinom(p * j + 1, j) / int(p * j + 1) * ibinom(p * (n - j) + r, n - j - k + 1);
    }
    let rhs = ibinom(p * n + r, n - k);
    IdentityCase::new(
        "fuss-convolution/s1",
        vec![
            ("p", p.to_string()),
            ("r", r.to_string()),
            ("n", n.to_string()),
            ("k", k.to_string()),
        ],
        lhs,
        rhs,
    )
}

/// The shifted `s = 1` corollary: adding `binom(pn+r, n-k+1)` to both sides
/// extends the sum to `j = 0` and bumps the right side to
/// `binom(pn+r+1, n-k+1)`.
pub fn check_fuss_convolution_shifted(p: i64, r: i64, n: i64, k: i64) -> IdentityCase {
    let mut lhs = Rat::zero();
    for j in 0..=n {
        lhs += ibinom(p * j + 1, j) / int(p * j + 1) * ibinom(p * (n - j) + r, n - j - k + 1);
    }
    let rhs = ibinom(p * n + r + 1, n - k + 1);
    IdentityCase::new(
        "fuss-convolution/shifted",
        vec![
            ("p", p.to_string()),
            ("r", r.to_string()),
            ("n", n.to_string()),
            ("k", k.to_string()),
        ],
        lhs,
        rhs,
    )
}

/// The generalized Vandermonde form
/// `sum_i (x/(x+pi)) binom(x+pi, i) binom(y+p(n-i), n-i) = binom(x+y+pn, n)`
/// over rational `x, y` and integer step `p` (negative steps allowed).
/// Returns `None` when some `x + pi` vanishes on the grid point.
pub fn check_gkp562(x: &Rat, y: &Rat, p: i64, n: i64) -> Option<IdentityCase> {
    for i in 0..=n {
        if (x + int(p * i)).is_zero() {
            return None;
        }
    }
    let mut lhs = Rat::zero();
    for i in 0..=n {
        let xp = x + int(p * i);
        lhs += x / &xp * gbinom(&xp, i) * gbinom(&(y + int(p * (n - i))), n - i);
    }
    let rhs = gbinom(&(x + y + int(p * n)), n);
    Some(IdentityCase::new(
        "gkp-562",
        vec![
            ("x", x.to_string()),
            ("y", y.to_string()),
            ("p", p.to_string()),
            ("n", n.to_string()),
        ],
        lhs,
        rhs,
    ))
}

/// The Gould identity
/// `sum_i (r/(r-qi)) binom(r-qi, i) binom(p+qi, n-i) = binom(r+p, n)` with
/// rational `r`. Returns `None` when some `r - qi` vanishes on the grid
/// point.
pub fn check_gould(r: &Rat, q: i64, p: i64, n: i64) -> Option<IdentityCase> {
    for i in 0..=n {
        if (r - int(q * i)).is_zero() {
            return None;
        }
    }
    let mut lhs = Rat::zero();
    for i in 0..=n {
        let rq = r - int(q * i);
        lhs += r / &rq * gbinom(&rq, i) * gbinom(&(int(p) + int(q * i)), n - i);
    }
    let rhs = gbinom(&(r + int(p)), n);
    Some(IdentityCase::new(
        "gould",
        vec![
            ("r", r.to_string()),
            ("q", q.to_string()),
            ("p", p.to_string()),
            ("n", n.to_string()),
        ],
        lhs,
        rhs,
    ))
}

// ---------------------------------------------------------------------------
// suites
// ---------------------------------------------------------------------------

fn pascal_onepth_suite(b: &SuiteBounds) -> IdentityReport {
    let mut rep = IdentityReport::new(
        "pascal-onepth",
        format!("p<={} r<={} 0<=k<=n<={}", b.max_p, b.max_r, b.max_n),
    );
    for p in 1..=b.max_p as i64 {
        for r in 0..=b.max_r as i64 {
            for n in 0..=b.max_n as i64 {
                for k in 0..=n {
                    rep.push(check_pascal_onepth(p, r, n, k));
                }
            }
        }
    }
    rep
}

fn summation_suite(b: &SuiteBounds) -> IdentityReport {
    let mut rep = IdentityReport::new(
        "summation",
        format!(
            "every catalog array, p<={} r<={} n<={} within order {}",
            b.max_p, b.max_r, b.max_n, b.order
        ),
    );
    for entry in catalog::arrays() {
        let parent = (entry.build)(b.order);
        for p in 1..=b.max_p {
            let beta_len = b.max_n.min(b.order.saturating_sub(1)) + 1;
            let mut beta = beta_coeffs(&parent, p, beta_len).expect("A-sequence order suffices");
            if b.perturb_beta && beta.len() > 1 {
                beta[1] += Rat::one();
            }
            for r in 0..=b.max_r {
                for n in 0..=b.max_n {
                    if p * (n + 1) + r > b.order {
                        break;
                    }
                    for k in 0..=n {
                        let case = summation_case(&parent, &beta, entry.name, p, r, n, k)
                            .expect("indices bounded by order");
                        rep.push(case);
                    }
                }
            }
        }
    }
    rep
}

fn fib_catalan_suite(b: &SuiteBounds) -> IdentityReport {
    let mut rep = IdentityReport::new(
        "fib-catalan",
        format!("p<={} r<={} 0<=k<=n<={}", b.max_p, b.max_r, b.max_n),
    );
    let parent = catalog::fibonacci_catalan_array(b.order);
    for p in 1..=b.max_p as i64 {
        for r in 0..=b.max_r as i64 {
            for n in 0..=b.max_n as i64 {
                for k in 0..=n {
                    let case = check_fibonacci_catalan(p, r, n, k);
                    // cross-check the closed-form left side against the
                    // series-built array entries where the order allows
                    if (p as usize) * (n as usize + 1) + r as usize <= b.order {
                        let entry = parent
                            .entry(
                                p as usize * (n as usize + 1) + r as usize,
                                (p as usize - 1) * (n as usize + 1) + r as usize + k as usize + 1,
                            )
                            .expect("bounded");
                        rep.push(IdentityCase::new(
                            "fib-catalan/entries",
                            case.params.clone(),
                            case.lhs.clone(),
                            entry,
                        ));
                    }
                    rep.push(case);
                }
            }
        }
    }
    rep
}

fn catalan_array_suite(b: &SuiteBounds) -> IdentityReport {
    let mut rep = IdentityReport::new(
        "catalan-array",
        format!("p<={} r<={} 0<=k<=n<={}", b.max_p, b.max_r, b.max_n),
    );
    let parent = catalog::catalan_array(b.order);
    for p in 1..=b.max_p as i64 {
        for r in 0..=b.max_r as i64 {
            for n in 0..=b.max_n as i64 {
                for k in 0..=n {
                    let case = check_catalan_array(p, r, n, k);
                    if (p as usize) * (n as usize + 1) + r as usize <= b.order {
                        let entry = parent
                            .entry(
                                p as usize * (n as usize + 1) + r as usize,
                                (p as usize - 1) * (n as usize + 1) + r as usize + k as usize + 1,
                            )
                            .expect("bounded");
                        rep.push(IdentityCase::new(
                            "catalan-array/entries",
                            case.params.clone(),
                            case.lhs.clone(),
                            entry,
                        ));
                    }
                    rep.push(case);
                }
            }
        }
    }
    rep
}

fn chu_vandermonde_suite(b: &SuiteBounds) -> IdentityReport {
    let mut rep = IdentityReport::new("chu-vandermonde", format!("1<=s<=k<=n<={}", b.max_n));
    for n in 1..=b.max_n as i64 {
        for k in 1..=n {
            for s in 1..=k {
                rep.push(check_chu_vandermonde(n, k, s));
            }
        }
    }
    rep
}

fn fuss_convolution_suite(b: &SuiteBounds) -> IdentityReport {
    let mut rep = IdentityReport::new(
        "fuss-convolution",
        format!(
            "p<={} r<={} 1<=s<=k<=n<={} plus s=1 corollaries and the one-pth array oracle",
            b.max_p, b.max_r, b.max_n
        ),
    );
    for p in 1..=b.max_p {
        for r in 0..=b.max_r {
            // the horizontal one-pth of Pascal realizes the identity; its
            // convolution is the series-route oracle
            let parent = catalog::pascal(p * b.max_n + r + 2);
            let h = onepth::horizontal_onepth(&parent, p, r).expect("order raised to fit");
            for n in 1..=b.max_n as i64 {
                for k in 1..=n {
                    for s in 1..=k {
                        rep.push(check_fuss_convolution(p as i64, r as i64, n, k, s));
                        let (olhs, orhs) = h
                            .convolution_identity(n as usize, k as usize, s as usize)
                            .expect("within order");
                        let mut params = vec![
                            ("p", p.to_string()),
                            ("r", r.to_string()),
                            ("n", n.to_string()),
                            ("k", k.to_string()),
                            ("s", s.to_string()),
                        ];
                        params.push(("route", "one-pth array".to_owned()));
                        rep.push(IdentityCase::new(
                            "fuss-convolution/array",
                            params,
                            olhs,
                            orhs,
                        ));
                    }
                    rep.push(check_fuss_convolution_s1(p as i64, r as i64, n, k));
                    rep.push(check_fuss_convolution_shifted(p as i64, r as i64, n, k));
                }
            }
        }
    }
    rep
}

fn gkp_suite(b: &SuiteBounds) -> IdentityReport {
    let mut rep = IdentityReport::new(
        "gkp-562",
        "9 rational (x, y) pairs, p in {1,2,3}, n<=6".to_owned(),
    );
    let xs = &b.rational_grid[..3.min(b.rational_grid.len())];
    let ys = if b.rational_grid.len() >= 6 {
        &b.rational_grid[3..6]
    } else {
        xs
    };
    for x in xs {
        for y in ys {
            for p in 1..=3i64 {
                for n in 0..=6i64 {
                    match check_gkp562(x, y, p, n) {
                        Some(case) => rep.push(case),
                        None => rep.skip(),
                    }
                }
            }
        }
    }
    rep
}

fn gould_suite(b: &SuiteBounds) -> IdentityReport {
    let mut rep = IdentityReport::new(
        "gould",
        format!(
            "{}-point rational r grid, q in {{1,2}}, p in {{2,3}}, n<=5",
            b.rational_grid.len()
        ),
    );
    for r in &b.rational_grid {
        for q in [1i64, 2] {
            for p in [2i64, 3] {
                for n in 0..=5i64 {
                    match check_gould(r, q, p, n) {
                        Some(case) => rep.push(case),
                        None => rep.skip(),
                    }
                }
            }
        }
    }
    rep
}

fn fuss_functional_suite(b: &SuiteBounds) -> IdentityReport {
    let mut rep = IdentityReport::new(
        "fuss-functional",
        format!(
            "functional equation m<=5, geometric collapse p<=5, Lambert powers m<=4, \
             closed form p in {{2,3}} r<=2 n<=12, order {}",
            b.order
        ),
    );
    let order = b.order;

    // F_m = 1 + t F_m^m, coefficient by coefficient
    for m in 0..=5usize {
        let f = catalog::fuss_catalan(m, order);
        let rhs = f
            .pow_int(m as i64)
            .expect("nonnegative power")
            .shift(1)
            .expect("positive shift")
            .add(&RatSeries::one(order + 1));
        for n in 0..=order {
            rep.push(IdentityCase::new(
                "fuss-functional/equation",
                vec![("m", m.to_string()), ("n", n.to_string())],
                f.coeff(n).unwrap(),
                rhs.coeff(n).unwrap(),
            ));
        }
    }

    // F_p(t (1-t)^(p-1)) = 1/(1-t)
    for p in 2..=5usize {
        let f = catalog::fuss_catalan(p, order);
        let mut lin = vec![Rat::zero(); order + 1];
        lin[0] = Rat::one();
        lin[1] = -Rat::one();
        let inner = PowerSeries::identity(order).mul(
            &RatSeries::new(lin)
                .pow_int(p as i64 - 1)
                .expect("nonnegative power"),
        );
        let composed = f.compose(&inner).expect("inner has zero constant term");
        for n in 0..=composed.order() {
            rep.push(IdentityCase::new(
                "fuss-functional/geometric-collapse",
                vec![("p", p.to_string()), ("n", n.to_string())],
                composed.coeff(n).unwrap(),
                Rat::one(),
            ));
        }
    }

    // Lambert's power formula against the ODE recurrence
    let exponents: [(i64, u64); 4] = [(1, 1), (2, 1), (3, 1), (1, 2)];
    for m in 0..=4usize {
        let base = catalog::fuss_catalan(m, order);
        for &(num, den) in &exponents {
            let r = Rat::new(num.into(), (den as i64).into());
            let formula = catalog::fuss_catalan_power(m, &r, order);
            let powed = base.pow_rational(num, den).expect("constant term 1");
            for n in 0..=order {
                rep.push(IdentityCase::new(
                    "fuss-functional/lambert-power",
                    vec![
                        ("m", m.to_string()),
                        ("r", r.to_string()),
                        ("n", n.to_string()),
                    ],
                    formula.coeff(n).unwrap(),
                    powed.coeff(n).unwrap(),
                ));
            }
        }
    }

    // closed form: with w = revert(t/(1+t)^p),
    // [t^n] (1+w)^(r+1) / (1 - (p-1)w) = binom(pn+r, n)
    let closed_order = 12usize.min(order);
    for p in 2..=3usize {
        let mut one_plus = vec![Rat::zero(); closed_order + 2];
        one_plus[0] = Rat::one();
        one_plus[1] = Rat::one();
        let one_plus_t = RatSeries::new(one_plus);
        let w = PowerSeries::identity(closed_order + 1)
            .div(&one_plus_t.pow_int(p as i64).expect("nonnegative power"))
            .expect("unit divisor")
            .revert()
            .expect("revertible");
        let one_plus_w = w.add(&RatSeries::one(w.order()));
        let scaled = w.scale(&int(p as i64 - 1));
        let denom = RatSeries::one(scaled.order()).sub(&scaled);
        for r in 0..=2usize {
            let series = one_plus_w
                .pow_int(r as i64 + 1)
                .expect("nonnegative power")
                .div(&denom)
                .expect("unit divisor");
            for n in 0..=closed_order as i64 {
                rep.push(IdentityCase::new(
                    "fuss-functional/closed-form",
                    vec![
                        ("p", p.to_string()),
                        ("r", r.to_string()),
                        ("n", n.to_string()),
                    ],
                    series.coeff(n as usize).unwrap(),
                    ibinom(p as i64 * n + r as i64, n),
                ));
            }
        }
    }

    // frozen ternary prefix
    let t = catalog::ternary(order.max(6));
    for (n, v) in [1i64, 1, 3, 12, 55, 273, 1428].iter().enumerate() {
        rep.push(IdentityCase::new(
            "fuss-functional/ternary-prefix",
            vec![("n", n.to_string())],
            t.coeff(n).unwrap(),
            int(*v),
        ));
    }

    rep
}

/// Runs one named suite; `None` for an unknown name.
pub fn suite_by_name(name: &str, bounds: &SuiteBounds) -> Option<IdentityReport> {
    match name {
        "pascal-onepth" => Some(pascal_onepth_suite(bounds)),
        "summation" => Some(summation_suite(bounds)),
        "fib-catalan" => Some(fib_catalan_suite(bounds)),
        "catalan-array" => Some(catalan_array_suite(bounds)),
        "chu-vandermonde" => Some(chu_vandermonde_suite(bounds)),
        "fuss-convolution" => Some(fuss_convolution_suite(bounds)),
        "gkp-562" => Some(gkp_suite(bounds)),
        "gould" => Some(gould_suite(bounds)),
        "fuss-functional" => Some(fuss_functional_suite(bounds)),
        _ => None,
    }
}

/// Sweeps the named identities (in the given order) over the bounds.
/// Unknown names are reported as an error string for the caller to surface
/// as a usage problem.
pub fn run_suite(
    names: &[&str],
    bounds: &SuiteBounds,
) -> std::result::Result<Vec<IdentityReport>, String> {
    names
        .iter()
        .map(|name| suite_by_name(name, bounds).ok_or_else(|| format!("unknown suite: {name}")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn gbinom_values() {
        assert_eq!(gbinom(&int(5), 2), int(10));
        for k in 0..=6 {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(gbinom(&int(-1), k), int(sign), "k = {k}");
        }
        assert_eq!(gbinom(&rat(1, 2), 2), rat(-1, 8));
        assert_eq!(gbinom(&rat(1, 2), -1), Rat::zero());
        assert_eq!(ibinom(3, 5), Rat::zero());

        // additive Pascal-triangle oracle for integer arguments
        let mut prev = vec![Rat::one()];
        for n in 1..=12i64 {
            let mut row = vec![Rat::one()];
            for k in 1..n {
                row.push(&prev[k as usize - 1] + &prev[k as usize]);
            }
            row.push(Rat::one());
            for (k, v) in row.iter().enumerate() {
                assert_eq!(ibinom(n, k as i64), *v, "n={n} k={k}");
            }
            prev = row;
        }
    }

    #[test]
    fn summation_formula_on_pascal() {
        let p = catalog::pascal(12);
        let case = check_summation_formula(&p, 2, 0, 1, 0).unwrap();
        assert_eq!(case.lhs, int(4));
        assert_eq!(case.rhs, int(4));
        assert!(case.pass);

        // p = 1, r = 0 reduces to the Pascal rule
        for n in 0..=8usize {
            for k in 0..=n {
                let case = check_summation_formula(&p, 1, 0, n, k).unwrap();
                assert!(case.pass, "n={n} k={k}");
                assert_eq!(case.lhs, ibinom(n as i64 + 1, k as i64 + 1));
            }
        }

        // boundary k = n: single beta_0 term
        let p20 = catalog::pascal(20);
        let case = check_summation_formula(&p20, 3, 2, 4, 4).unwrap();
        assert!(case.pass);
    }

    #[test]
    fn pascal_onepth_points() {
        let case = check_pascal_onepth(2, 0, 2, 0);
        assert_eq!(case.lhs, int(15));
        assert!(case.pass);

        for n in 0..=6 {
            for k in 0..=n {
                assert!(check_pascal_onepth(1, 0, n, k).pass, "n={n} k={k}");
            }
        }
        assert!(check_pascal_onepth(3, 1, 5, 5).pass);
    }

    #[test]
    fn fibonacci_catalan_points_match_array_entries() {
        let parent = catalog::fibonacci_catalan_array(22);
        for (p, r, n, k) in [
            (1i64, 0i64, 2i64, 0i64),
            (2, 1, 3, 1),
            (3, 0, 4, 2),
            (2, 0, 5, 5),
        ] {
            let case = check_fibonacci_catalan(p, r, n, k);
            assert!(case.pass, "p={p} r={r} n={n} k={k}");
            let entry = parent
                .entry(
                    (p * (n + 1) + r) as usize,
                    ((p - 1) * (n + 1) + r + k + 1) as usize,
                )
                .unwrap();
            assert_eq!(case.lhs, entry, "entry route p={p} r={r} n={n} k={k}");
        }
    }

    #[test]
    fn catalan_array_points_match_array_entries() {
        let parent = catalog::catalan_array(22);
        for (p, r, n, k) in [
            (2i64, 0i64, 1i64, 0i64),
            (1, 0, 3, 1),
            (3, 2, 3, 0),
            (2, 1, 4, 4),
        ] {
            let case = check_catalan_array(p, r, n, k);
            assert!(case.pass, "p={p} r={r} n={n} k={k}");
            let entry = parent
                .entry(
                    (p * (n + 1) + r) as usize,
                    ((p - 1) * (n + 1) + r + k + 1) as usize,
                )
                .unwrap();
            assert_eq!(case.lhs, entry, "entry route p={p} r={r} n={n} k={k}");
        }
    }

    #[test]
    fn chu_vandermonde_points() {
        for n in 1..=9i64 {
            for k in 1..=n {
                for s in 1..=k {
                    assert!(check_chu_vandermonde(n, k, s).pass, "n={n} k={k} s={s}");
                }
            }
        }
        let trivial = check_chu_vandermonde(4, 4, 4);
        assert_eq!(trivial.lhs, Rat::one());
    }

    #[test]
    fn fuss_convolution_points() {
        let case = check_fuss_convolution(2, 0, 2, 1, 1);
        assert_eq!(case.rhs, int(4));
        assert!(case.pass);
        assert!(check_fuss_convolution(3, 2, 4, 4, 4).pass);
        assert!(check_fuss_convolution_s1(2, 1, 4, 2).pass);
        assert!(check_fuss_convolution_shifted(2, 1, 4, 2).pass);

        // series route: the convolution on the actual one-pth array
        let parent = catalog::pascal(14);
        let h = onepth::horizontal_onepth(&parent, 2, 0).unwrap();
        for n in 1..=5usize {
            for k in 1..=n {
                let (lhs, rhs) = h.convolution_identity(n, k, 1).unwrap();
                assert_eq!(lhs, rhs, "n={n} k={k}");
                assert_eq!(lhs, ibinom(2 * n as i64, n as i64 - k as i64));
            }
        }
    }

    #[test]
    fn gkp_and_gould_points() {
        let case = check_gkp562(&int(1), &Rat::zero(), 2, 2).unwrap();
        assert_eq!(case.lhs, int(10));
        assert!(case.pass);
        assert!(check_gkp562(&rat(1, 2), &rat(3, 2), 3, 0).unwrap().pass);
        // singular point is skipped, not failed
        assert!(check_gkp562(&int(-2), &Rat::one(), 1, 3).is_none());

        let case = check_gould(&rat(1, 2), 2, 3, 2).unwrap();
        assert_eq!(case.rhs, rat(35, 8));
        assert!(case.pass);
        assert!(check_gould(&int(2), 1, 3, 4).is_none());

        // substitution p -> -q, x = r, y = p + qn maps Gould onto the
        // generalized Vandermonde form
        for (r, q, p, n) in [(rat(1, 2), 2i64, 3i64, 3i64), (rat(-5, 3), 1, 2, 4)] {
            let gould = check_gould(&r, q, p, n).unwrap();
            let gkp = check_gkp562(&r, &(int(p + q * n)), -q, n).unwrap();
            assert_eq!(gould.lhs, gkp.lhs);
            assert_eq!(gould.rhs, gkp.rhs);
            assert!(gould.pass && gkp.pass);
        }
    }

    #[test]
    fn run_suite_smoke_and_negative_control() {
        let bounds = SuiteBounds {
            order: 12,
            max_p: 2,
            max_r: 1,
            max_n: 4,
            ..SuiteBounds::default()
        };
        let reports = run_suite(&SUITE_NAMES, &bounds).unwrap();
        assert_eq!(reports.len(), 9);
        for rep in &reports {
            assert_eq!(rep.total, rep.passed + rep.failed, "{}", rep.name);
            assert!(
                rep.all_passed(),
                "{} failed: {:?}",
                rep.name,
                rep.first_failure
            );
        }

        assert!(run_suite(&[], &bounds).unwrap().is_empty());
        assert!(run_suite(&["nope"], &bounds).is_err());

        let perturbed = SuiteBounds {
            perturb_beta: true,
            ..bounds
        };
        let rep = suite_by_name("summation", &perturbed).unwrap();
        assert!(rep.failed > 0);
        let fail = rep.first_failure.as_ref().unwrap();
        assert!(!fail.pass);
        assert!(!fail.params.is_empty());
    }
}
