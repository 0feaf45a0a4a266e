//! Named series and Riordan arrays, each built from generating functions and
//! paired with a closed-form coefficient formula where one is known. The two
//! routes are independent, so either can serve as the other's oracle.
//!
//! Stable names, also used by the CLI: `pascal`, `delannoy`, `catalan`,
//! `central-binomial`, `fuss:<m>`, `ternary`, `fib-catalan`, `catalan-array`.

use num::{One, Zero};

use crate::identities::{gbinom, ibinom};
use crate::{Rat, RatArray, RatSeries};

fn int(v: i64) -> Rat {
    Rat::from_integer(v.into())
}

fn geometric_denominator(order: usize) -> RatSeries {
    let mut c = vec![Rat::zero(); order + 1];
    c[0] = Rat::one();
    c[1] = -Rat::one();
    RatSeries::new(c)
}

/// The Catalan generating function `C(t) = sum binom(2n,n) t^n / (n+1)`.
/// Satisfies `C = 1 + t C^2`.
pub fn catalan(order: usize) -> RatSeries {
    RatSeries::new(
        (0..=order as i64)
            .map(|n| ibinom(2 * n, n) / int(n + 1))
            .collect(),
    )
}

/// Central binomial coefficients `binom(2n, n)`; equals `(1 - 4t)^(-1/2)`.
pub fn central_binomial(order: usize) -> RatSeries {
    RatSeries::new((0..=order as i64).map(|n| ibinom(2 * n, n)).collect())
}

/// The order-`m` Fuss-Catalan generating function,
/// `F_m(t) = sum 1/(mn+1) binom(mn+1, n) t^n`, the solution of
/// `F_m = 1 + t F_m^m`. (`F_0 = 1 + t`, `F_1 = 1/(1-t)`, `F_2 = C`.)
pub fn fuss_catalan(m: usize, order: usize) -> RatSeries {
    let m = m as i64;
    RatSeries::new(
        (0..=order as i64)
            .map(|n| ibinom(m * n + 1, n) / int(m * n + 1))
            .collect(),
    )
}

/// Lambert's expansion of `F_m^r`:
/// `sum r/(mn+r) binom(mn+r, n) t^n`, valid for rational `r`. Must equal
/// `pow_rational(fuss_catalan(m), r)`. Requires `mn + r != 0` for every
/// `n <= order`.
pub fn fuss_catalan_power(m: usize, r: &Rat, order: usize) -> RatSeries {
    if r.is_zero() {
        return RatSeries::one(order);
    }
    let m = m as i64;
    RatSeries::new(
        (0..=order as i64)
            .map(|n| {
                let upper = int(m * n) + r;
                assert!(!upper.is_zero(), "singular Lambert coefficient at n = {n}");
                r / &upper * gbinom(&upper, n)
            })
            .collect(),
    )
}

/// Ternary numbers `1/(3n+1) binom(3n+1, n)`: the `m = 3` Fuss-Catalan case.
pub fn ternary(order: usize) -> RatSeries {
    fuss_catalan(3, order)
}

/// Fibonacci numbers with the `1/(1 - t - t^2)` convention:
/// `1, 1, 2, 3, 5, ...`.
pub fn fibonacci(count: usize) -> Vec<Rat> {
    let mut f = vec![Rat::one(), Rat::one()];
    while f.len() < count {
        let next = &f[f.len() - 1] + &f[f.len() - 2];
        f.push(next);
    }
    f.truncate(count);
    f
}

/// The Pascal matrix `(1/(1-z), z/(1-z))`.
pub fn pascal(order: usize) -> RatArray {
    let d = geometric_denominator(order);
    RatArray::new(
        RatSeries::one(order).div(&d).unwrap(),
        RatSeries::identity(order).div(&d).unwrap(),
    )
    .unwrap()
}

/// The Delannoy matrix `(1/(1-z), z(1+z)/(1-z))`.
pub fn delannoy(order: usize) -> RatArray {
    let d = geometric_denominator(order);
    let mut numer = vec![Rat::zero(); order + 1];
    numer[1] = Rat::one();
    if order >= 2 {
        numer[2] = Rat::one();
    }
    RatArray::new(
        RatSeries::one(order).div(&d).unwrap(),
        RatSeries::new(numer).div(&d).unwrap(),
    )
    .unwrap()
}

/// The array `(1/(1 - t - t^2), t C(t))`: Fibonacci zeroth column, shifted
/// Catalan powers across the columns.
pub fn fibonacci_catalan_array(order: usize) -> RatArray {
    let mut d = vec![Rat::zero(); order + 1];
    d[0] = Rat::one();
    d[1] = -Rat::one();
    if order >= 2 {
        d[2] = -Rat::one();
    }
    RatArray::new(
        RatSeries::one(order).div(&RatSeries::new(d)).unwrap(),
        catalan(order).shift(1).unwrap(),
    )
    .unwrap()
}

/// The Catalan array `(C(t), t C(t))`.
pub fn catalan_array(order: usize) -> RatArray {
    RatArray::new(catalan(order), catalan(order).shift(1).unwrap()).unwrap()
}

/// Closed form for Pascal entries: `binom(n, k)`.
pub fn pascal_entry(n: usize, k: usize) -> Rat {
    ibinom(n as i64, k as i64)
}

/// Closed form for Delannoy entries: `sum_j binom(k,j) binom(n-j, k)`.
pub fn delannoy_entry(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let (n, k) = (n as i64, k as i64);
    let mut acc = Rat::zero();
    for j in 0..=k.min(n - k) {
        acc += ibinom(k, j) * ibinom(n - j, k);
    }
    acc
}

/// The column weight `k/(2j+k) binom(2j+k, j)` of the shifted Catalan
/// powers, i.e. `[t^j] C(t)^k`. The `k = 0` column is the empty product:
/// the weight is 1 at `j = 0` and 0 otherwise.
pub fn catalan_weight(k: usize, j: usize) -> Rat {
    if k == 0 {
        return if j == 0 { Rat::one() } else { Rat::zero() };
    }
    let (k, j) = (k as i64, j as i64);
    int(k) / int(2 * j + k) * ibinom(2 * j + k, j)
}

/// Closed form for `(1/(1-t-t^2), tC)` entries:
/// `sum_j F_(n-k-j) * k/(2j+k) binom(2j+k, j)`.
pub fn fibonacci_catalan_entry(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let fib = fibonacci(n - k + 1);
    let mut acc = Rat::zero();
    for j in 0..=(n - k) {
        let w = catalan_weight(k, j);
        if w.is_zero() {
            continue;
        }
        acc += &fib[n - k - j] * w;
    }
    acc
}

/// Closed form for `(C, tC)` entries:
/// `(k+1)/(2n-k+1) binom(2n-k+1, n-k)`.
pub fn catalan_array_entry(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let (n, k) = (n as i64, k as i64);
    int(k + 1) / int(2 * n - k + 1) * ibinom(2 * n - k + 1, n - k)
}

/// A named array together with its closed-form entry formula; builder and
/// formula must agree on every index within the truncation.
pub struct ArrayEntry {
    pub name: &'static str,
    pub build: fn(usize) -> RatArray,
    pub closed_form: fn(usize, usize) -> Rat,
}

/// The catalog arrays the identity suites sweep over.
pub fn arrays() -> &'static [ArrayEntry] {
    &[
        ArrayEntry {
            name: "pascal",
            build: pascal,
            closed_form: pascal_entry,
        },
        ArrayEntry {
            name: "delannoy",
            build: delannoy,
            closed_form: delannoy_entry,
        },
        ArrayEntry {
            name: "fib-catalan",
            build: fibonacci_catalan_array,
            closed_form: fibonacci_catalan_entry,
        },
        ArrayEntry {
            name: "catalan-array",
            build: catalan_array,
            closed_form: catalan_array_entry,
        },
    ]
}

/// Either kind of catalog item.
pub enum CatalogItem {
    Series(RatSeries),
    Array(RatArray),
}

fn normalize(name: &str) -> String {
    name.trim().replace('_', "-")
}

/// Resolves a catalog series name (`catalan`, `central-binomial`,
/// `fuss:<m>`, `ternary`; underscores accepted for hyphens).
pub fn series_by_name(name: &str, order: usize) -> Option<RatSeries> {
    let name = normalize(name);
    if let Some(m) = name.strip_prefix("fuss:") {
        return m.parse::<usize>().ok().map(|m| fuss_catalan(m, order));
    }
    match name.as_str() {
        "catalan" => Some(catalan(order)),
        "central-binomial" => Some(central_binomial(order)),
        "ternary" => Some(ternary(order)),
        _ => None,
    }
}

/// Resolves a catalog array name (`pascal`, `delannoy`, `fib-catalan`,
/// `catalan-array`).
pub fn array_by_name(name: &str, order: usize) -> Option<RatArray> {
    let name = normalize(name);
    arrays()
        .iter()
        .find(|e| e.name == name)
        .map(|e| (e.build)(order))
}

/// Resolves any catalog name to its item.
pub fn build(name: &str, order: usize) -> Option<CatalogItem> {
    if let Some(a) = array_by_name(name, order) {
        return Some(CatalogItem::Array(a));
    }
    series_by_name(name, order).map(CatalogItem::Series)
}
