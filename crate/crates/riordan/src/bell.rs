//! Integer partitions, partial Bell polynomials, and partition-sum
//! composition coefficients.
//!
//! A partition of `n` with `k` parts is stored as its multiplicity vector
//! `(k_1, ..., k_n)` with `sum i*k_i = n` and `sum k_i = k`. The partition
//! sums here evaluate `[t^n] (f o phi)` from the derivative values
//! `f^(k)(a)` and the coefficients of `phi`, which yields the reciprocal
//! coefficient relations and, for `f(x) = x^p`, the rational-power case.

use crate::error::{Error, Result};
use crate::series::{Coeff, PowerSeries};

/// A partition of `n`, stored as part multiplicities: `counts[i-1]` is the
/// number of parts equal to `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionVector {
    counts: Vec<usize>,
}

impl PartitionVector {
    /// Multiplicities `(k_1, ..., k_n)`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// The partitioned integer `sum i * k_i`.
    pub fn n(&self) -> usize {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, c)| (i + 1) * c)
            .sum()
    }

    /// The number of parts `sum k_i`.
    pub fn parts(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// All partitions of `n` with exactly `k` parts, enumerated deterministically
/// with the largest parts placed first. Requires `1 <= k <= n`.
pub fn partitions(n: usize, k: usize) -> Vec<PartitionVector> {
    assert!(1 <= k && k <= n, "need 1 <= k <= n");
    let mut out = Vec::new();
    let mut counts = vec![0usize; n];
    descend(n, n, k, &mut counts, &mut out);
    out
}

fn descend(
    part: usize,
    rem_n: usize,
    rem_k: usize,
    counts: &mut Vec<usize>,
    out: &mut Vec<PartitionVector>,
) {
    if part == 0 {
        if rem_n == 0 && rem_k == 0 {
            out.push(PartitionVector {
                counts: counts.clone(),
            });
        }
        return;
    }
    let max_c = (rem_n / part).min(rem_k);
    for c in (0..=max_c).rev() {
        counts[part - 1] = c;
        descend(part - 1, rem_n - c * part, rem_k - c, counts, out);
        counts[part - 1] = 0;
    }
}

/// `n!` in the coefficient field.
pub fn factorial<C: Coeff>(n: usize) -> C {
    let mut acc = C::one();
    for i in 2..=n {
        acc = acc * C::from_usize(i).expect("factorial argument fits");
    }
    acc
}

/// Falling factorial `(p)_k = p (p-1) ... (p-k+1)`, with `(p)_0 = 1`.
pub fn falling_factorial<C: Coeff>(p: &C, k: usize) -> C {
    let mut acc = C::one();
    for i in 0..k {
        acc = acc * (p.clone() - C::from_usize(i).expect("index fits"));
    }
    acc
}

/// The partial Bell polynomial
/// `B_{n,k}(x_1, ..., x_{n-k+1}) =
///  sum over partitions of n with k parts of
///  n!/(k_1! k_2! ...) (x_1/1!)^{k_1} (x_2/2!)^{k_2} ...`,
/// with `x[i-1]` holding `x_i`.
pub fn bell_polynomial<C: Coeff>(n: usize, k: usize, x: &[C]) -> C {
    assert!(1 <= k && k <= n, "need 1 <= k <= n");
    assert!(x.len() > n - k, "need x_1 ..= x_(n-k+1)");
    let n_fact: C = factorial(n);
    let mut acc = C::zero();
    for pv in partitions(n, k) {
        let mut term = n_fact.clone();
        for (i, &c) in pv.counts().iter().enumerate() {
            if c == 0 {
                continue;
            }
            let fact_i: C = factorial(i + 1);
            let scaled = x[i].clone() / fact_i;
            let mut power = C::one();
            for _ in 0..c {
                power = power * scaled.clone();
            }
            term = term * power / factorial::<C>(c);
        }
        acc = acc + term;
    }
    acc
}

/// `B_{n,k}` read off a series with `f(0) = 0`, via
/// `(1/k!) f^k = sum B_{n,k} t^n / n!`. Must agree with
/// [`bell_polynomial`] at `x_i = i! [t^i] f`.
pub fn bell_via_series<C: Coeff>(f: &PowerSeries<C>, n: usize, k: usize) -> Result<C> {
    assert!(1 <= k && k <= n, "need 1 <= k <= n");
    assert!(f.constant_term().is_zero(), "need f(0) = 0");
    if n > f.order() {
        return Err(Error::OrderExceeded {
            wanted: n,
            order: f.order(),
        });
    }
    let coeff = f.pow_int(k as i64).expect("nonnegative power").coeff(n)?;
    Ok(coeff * factorial::<C>(n) / factorial::<C>(k))
}

/// `[t^n] (f o phi)` as a partition sum over the derivative values
/// `derivs[k] = f^(k)(a)` and the coefficients `alpha[i-1] = [t^i] phi`
/// (the constant term of `phi` is the expansion point `a`).
fn composition_coeff<C: Coeff>(derivs: &[C], alpha: &[C], n: usize) -> C {
    if n == 0 {
        return derivs[0].clone();
    }
    let mut acc = C::zero();
    for (k, deriv) in derivs.iter().enumerate().take(n + 1).skip(1) {
        if deriv.is_zero() {
            continue;
        }
        let mut inner = C::zero();
        for pv in partitions(n, k) {
            let mut term = C::one();
            for (i, &c) in pv.counts().iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for _ in 0..c {
                    term = term * alpha[i].clone();
                }
                term = term / factorial::<C>(c);
            }
            inner = inner + term;
        }
        acc = acc + deriv.clone() * inner;
    }
    acc
}

/// Faa di Bruno coefficient extraction: `[t^n] (f o phi)` from the supplied
/// derivative list `fderivs[k] = f^(k)(phi(0))` and the series `phi`.
/// The derivative values are always explicit data; nothing here
/// differentiates an analytic expression.
pub fn faa_di_bruno_coeff<C: Coeff>(fderivs: &[C], phi: &PowerSeries<C>, n: usize) -> Result<C> {
    if fderivs.len() < n + 1 {
        return Err(Error::InsufficientDerivatives {
            required: n + 1,
            available: fderivs.len(),
        });
    }
    if n > phi.order() {
        return Err(Error::OrderExceeded {
            wanted: n,
            order: phi.order(),
        });
    }
    Ok(composition_coeff(fderivs, &phi.coeffs()[1..], n))
}

/// Forward reciprocal relation: from `alpha[i-1] = [t^i] h` and
/// `fderivs[k] = f^(k)(a)` (with `a = h(0)`), returns
/// `beta_1 ..= beta_n` where `beta_m = [t^m] (f o h)`.
pub fn reciprocal_forward<C: Coeff>(alpha: &[C], fderivs: &[C], n: usize) -> Result<Vec<C>> {
    if fderivs.len() < n + 1 {
        return Err(Error::InsufficientDerivatives {
            required: n + 1,
            available: fderivs.len(),
        });
    }
    assert!(alpha.len() >= n, "need alpha_1 ..= alpha_n");
    Ok((1..=n)
        .map(|m| composition_coeff(fderivs, alpha, m))
        .collect())
}

/// Backward reciprocal relation: the same partition sum driven by the
/// derivative values of the compositional inverse,
/// `fbar_derivs[k] = fbar^(k)(f(a))`, recovering `alpha_1 ..= alpha_n`
/// from `beta`.
pub fn reciprocal_backward<C: Coeff>(beta: &[C], fbar_derivs: &[C], n: usize) -> Result<Vec<C>> {
    reciprocal_forward(beta, fbar_derivs, n)
}

/// The power case `f(x) = x^p`: coefficients `beta_1 ..= beta_n` of
/// `(1 + sum alpha_i t^i)^p`, as the partition sum with falling factorials
/// `(p)_k` in place of the derivative values. Must agree with
/// `pow_rational`.
pub fn power_case_beta<C: Coeff>(alpha: &[C], p: &C, n: usize) -> Vec<C> {
    assert!(alpha.len() >= n, "need alpha_1 ..= alpha_n");
    let derivs: Vec<C> = (0..=n).map(|k| falling_factorial(p, k)).collect();
    (1..=n)
        .map(|m| composition_coeff(&derivs, alpha, m))
        .collect()
}
