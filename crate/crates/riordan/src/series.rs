//! Truncated formal power series over an exact coefficient field.
//!
//! A [`PowerSeries`] stores coefficients `c_0 .. c_N` together with its
//! truncation order `N` (implicitly, as `coeffs.len() - 1`). Every operation
//! returns a series that is correct for *all* coefficients up to the order it
//! reports; binary operations truncate to the minimum operand order rather
//! than padding the shorter operand with zeros.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::traits::{FromPrimitive, Num};

use crate::error::{Error, Result};

/// Requirements on series coefficients: an exact field with conversions from
/// machine integers. Satisfied by `BigRational` (the type every layer above
/// the kernel uses) and by the primitive floats.
pub trait Coeff: Num + Clone + Neg<Output = Self> + FromPrimitive + fmt::Debug {}

impl<T> Coeff for T where T: Num + Clone + Neg<Output = Self> + FromPrimitive + fmt::Debug {}

/// A formal power series truncated at a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> PowerSeries<C> {
    /// Builds a series from its coefficient vector; the truncation order is
    /// `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least c_0");
        PowerSeries { coeffs }
    }

    /// Builds a series from integer coefficients.
    pub fn from_ints(vals: &[i64]) -> Self {
        Self::new(
            vals.iter()
                .map(|&v| C::from_i64(v).expect("integer does not fit the coefficient type"))
                .collect(),
        )
    }

    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        Self::new(vec![C::zero(); order + 1])
    }

    /// The constant series 1 at the given order.
    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    /// The constant series `c` at the given order.
    pub fn constant(c: C, order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[0] = c;
        Self::new(coeffs)
    }

    /// The identity series `t`. Requires `order >= 1`.
    pub fn identity(order: usize) -> Self {
        Self::monomial(C::one(), 1, order)
    }

    /// The monomial `c * t^power`. Requires `power <= order`.
    pub fn monomial(c: C, power: usize, order: usize) -> Self {
        assert!(power <= order, "monomial exponent exceeds order");
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    /// Truncation order `N`; coefficients `c_0 .. c_N` are stored.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// All stored coefficients, index `n` holding `[t^n]`.
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// The constant term `c_0`.
    pub fn constant_term(&self) -> &C {
        &self.coeffs[0]
    }

    /// `[t^n]` of this series; errors when `n` lies beyond the truncation.
    pub fn coeff(&self, n: usize) -> Result<C> {
        self.coeffs.get(n).cloned().ok_or(Error::OrderExceeded {
            wanted: n,
            order: self.order(),
        })
    }

    /// True when every stored coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Index of the first nonzero coefficient, or `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// A copy truncated to `min(order, self.order())`. Never pads.
    pub fn truncated(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        Self::new(self.coeffs[..keep].to_vec())
    }

    /// True when the two series agree on every coefficient up to the smaller
    /// of the two truncation orders.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let n = self.order().min(other.order());
        self.coeffs[..=n] == other.coeffs[..=n]
    }

    /// Coefficientwise sum, truncated to the minimum operand order.
    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self::new(
            (0..=n)
                .map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone())
                .collect(),
        )
    }

    /// Coefficientwise difference, truncated to the minimum operand order.
    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self::new(
            (0..=n)
                .map(|i| self.coeffs[i].clone() - rhs.coeffs[i].clone())
                .collect(),
        )
    }

    /// Coefficientwise negation.
    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    /// Multiplies every coefficient by the scalar `c`.
    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    /// Cauchy product, truncated to the minimum operand order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![C::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + self.coeffs[i].clone() * rhs.coeffs[j].clone();
            }
        }
        Self::new(out)
    }

    /// Quotient `q` with `q * rhs = self` up to the result order.
    /// Requires a unit divisor: `rhs(0) != 0`.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.coeffs[0].is_zero() {
            return Err(Error::NonUnitDivisor);
        }
        let n = self.order().min(rhs.order());
        let mut q = vec![C::zero(); n + 1];
        for m in 0..=n {
            let mut acc = self.coeffs[m].clone();
            for i in 1..=m {
                if rhs.coeffs[i].is_zero() || q[m - i].is_zero() {
                    continue;
                }
                acc = acc - rhs.coeffs[i].clone() * q[m - i].clone();
            }
            q[m] = acc / rhs.coeffs[0].clone();
        }
        Ok(Self::new(q))
    }

    /// Division that factors out the divisor's valuation: with
    /// `rhs = t^v * b` (`b` a unit), returns `(self / t^v) / b`, which costs
    /// `v` orders of truncation. Errors with [`Error::NotDivisibleByT`] when
    /// `self` is not divisible by `t^v`.
    pub fn div_exact(&self, rhs: &Self) -> Result<Self> {
        let v = rhs.valuation().ok_or(Error::NonUnitDivisor)?;
        if v == 0 {
            return self.div(rhs);
        }
        let a = self.shift(-(v as i64))?;
        let b = rhs
            .shift(-(v as i64))
            .expect("valuation guarantees divisibility");
        a.div(&b)
    }

    /// Composition `self(inner)`, by Horner evaluation over the coefficient
    /// ring. Requires `inner(0) = 0`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order().min(inner.order());
        let g = inner.truncated(n);
        let mut acc = Self::constant(self.coeffs[n].clone(), n);
        for i in (0..n).rev() {
            acc = acc.mul(&g);
            acc.coeffs[0] = acc.coeffs[0].clone() + self.coeffs[i].clone();
        }
        Ok(acc)
    }

    /// Compositional inverse: the series `w` with `self(w) = w(self) = t` up
    /// to the truncation order. Requires `f(0) = 0` and `f'(0) != 0`.
    ///
    /// Solved coefficient by coefficient from `sum_k w_k [t^m] f^k = [m = 1]`
    /// with incrementally maintained powers of `f`.
    pub fn revert(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotRevertible);
        }
        if self.order() == 0 || self.coeffs[1].is_zero() {
            return Err(Error::NotRevertible);
        }
        let n = self.order();
        let f1 = self.coeffs[1].clone();
        let mut w = vec![C::zero(); n + 1];
        w[1] = C::one() / f1.clone();
        // powers[k-1] = f^k; only needed up to f^(n-1)
        let mut powers: Vec<PowerSeries<C>> = vec![self.clone()];
        for _ in 2..n {
            powers.push(powers.last().unwrap().mul(self));
        }
        let mut f1_pow = f1.clone();
        for m in 2..=n {
            f1_pow = f1_pow * f1.clone();
            let mut acc = C::zero();
            for k in 1..m {
                let fk_m = &powers[k - 1].coeffs[m];
                if w[k].is_zero() || fk_m.is_zero() {
                    continue;
                }
                acc = acc + w[k].clone() * fk_m.clone();
            }
            w[m] = -acc / f1_pow.clone();
        }
        Ok(Self::new(w))
    }

    /// Termwise derivative; the order drops by one (a constant at order 0
    /// differentiates to the zero series at order 0).
    pub fn derive(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::new(
            (1..=self.order())
                .map(|i| {
                    self.coeffs[i].clone()
                        * C::from_usize(i).expect("order fits the coefficient type")
                })
                .collect(),
        )
    }

    /// Integer power by repeated squaring. Negative exponents require a unit
    /// constant term.
    pub fn pow_int(&self, k: i64) -> Result<Self> {
        if k < 0 {
            let inv = Self::one(self.order()).div(self)?;
            return inv.pow_int(-k);
        }
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(result)
    }

    /// Rational power `self^(num/den)` for a series with constant term 1,
    /// via the first-order recurrence obtained from
    /// `den * f * g' = num * f' * g`.
    pub fn pow_rational(&self, num: i64, den: u64) -> Result<Self> {
        assert!(den > 0, "denominator must be positive");
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstant);
        }
        let n = self.order();
        let mut g = vec![C::zero(); n + 1];
        g[0] = C::one();
        for m in 1..=n {
            let mut acc = C::zero();
            for i in 1..=m {
                if self.coeffs[i].is_zero() {
                    continue;
                }
                // weight = num*i - den*(m-i), exact in i128
                let weight = num as i128 * i as i128 - den as i128 * (m - i) as i128;
                if weight == 0 || g[m - i].is_zero() {
                    continue;
                }
                let w = C::from_i128(weight).expect("weight fits the coefficient type");
                acc = acc + w * self.coeffs[i].clone() * g[m - i].clone();
            }
            let denom =
                C::from_i128(den as i128 * m as i128).expect("weight fits the coefficient type");
            g[m] = acc / denom;
        }
        Ok(Self::new(g))
    }

    /// Multiplies by `t^k` (k > 0) or divides by `t^|k|` (k < 0). Positive
    /// shifts raise the order by `k`; negative shifts drop it by `|k|` and
    /// error when a nonzero coefficient would be discarded.
    pub fn shift(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            let k = k as usize;
            let mut coeffs = vec![C::zero(); k];
            coeffs.extend(self.coeffs.iter().cloned());
            return Ok(Self::new(coeffs));
        }
        let k = (-k) as usize;
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::NotDivisibleByT);
        }
        if k > self.order() {
            return Ok(Self::zero(0));
        }
        Ok(Self::new(self.coeffs[k..].to_vec()))
    }
}

impl<C: Coeff> Add for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn add(self, rhs: Self) -> PowerSeries<C> {
        PowerSeries::add(self, rhs)
    }
}

impl<C: Coeff> Sub for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn sub(self, rhs: Self) -> PowerSeries<C> {
        PowerSeries::sub(self, rhs)
    }
}

impl<C: Coeff> Mul for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn mul(self, rhs: Self) -> PowerSeries<C> {
        PowerSeries::mul(self, rhs)
    }
}

impl<C: Coeff> Neg for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn neg(self) -> PowerSeries<C> {
        PowerSeries::neg(self)
    }
}

/// Renders the coefficient list as comma-separated exact values,
/// e.g. `1, 1, 1/2, 1/6`.
impl<C: Coeff + fmt::Display> fmt::Display for PowerSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rat, RatSeries};

    // A polynomial padded with zeros up to the requested order.
    fn poly(vals: &[i64], order: usize) -> RatSeries {
        let mut v = vals.to_vec();
        v.resize(order + 1, 0);
        RatSeries::from_ints(&v)
    }

    fn geometric(order: usize) -> RatSeries {
        RatSeries::one(order).div(&poly(&[1, -1], order)).unwrap()
    }

    fn ones(order: usize) -> RatSeries {
        RatSeries::new(vec![Rat::one(); order + 1])
    }

    // Catalan numbers by the segmented recurrence C_{n+1} = sum C_i C_{n-i}.
    fn catalan_numbers(count: usize) -> Vec<Rat> {
        let mut c = vec![Rat::one()];
        for n in 0..count - 1 {
            let mut next = Rat::zero();
            for i in 0..=n {
                next += &c[i] * &c[n - i];
            }
            c.push(next);
        }
        c
    }

    // Fibonacci with the 1/(1 - t - t^2) convention: 1, 1, 2, 3, 5, ...
    fn fibonacci_numbers(count: usize) -> Vec<Rat> {
        let mut f = vec![Rat::one(), Rat::one()];
        while f.len() < count {
            let next = &f[f.len() - 1] + &f[f.len() - 2];
            f.push(next);
        }
        f.truncate(count);
        f
    }

    use num::{One, Zero};

    #[test]
    fn add_cancels_and_truncates() {
        let a = RatSeries::from_ints(&[1, 1]);
        let b = RatSeries::from_ints(&[1, -1]);
        assert_eq!(a.add(&b), RatSeries::from_ints(&[2, 0]));

        let s = RatSeries::from_ints(&[3, 1, 4]);
        assert_eq!(RatSeries::zero(2).add(&s), s);

        let long = RatSeries::from_ints(&[1, 2, 3]);
        let short = RatSeries::from_ints(&[1, 1]);
        assert_eq!(long.add(&short), RatSeries::from_ints(&[2, 3]));
    }

    #[test]
    fn mul_geometric_inverse() {
        let g = ones(10);
        assert_eq!(poly(&[1, -1], 10).mul(&g), RatSeries::one(10));

        let t = RatSeries::identity(4);
        assert_eq!(t.mul(&t), RatSeries::monomial(Rat::one(), 2, 4));
    }

    #[test]
    fn mul_catalan_square_matches_closed_form() {
        // [t^n] C(t)^2 = 2/(2n+2) * binom(2n+2, n), evaluated directly.
        let order = 10;
        let c = RatSeries::new(catalan_numbers(order + 1));
        let c2 = c.mul(&c);
        for n in 0..=order {
            let mut binom = Rat::one();
            // binom(2n+2, n) as a product
            for i in 0..n {
                binom *= Rat::from_integer(((2 * n + 2 - i) as i64).into());
                binom /= Rat::from_integer(((i + 1) as i64).into());
            }
            let expected = Rat::new(2.into(), ((2 * n + 2) as i64).into()) * binom;
            assert_eq!(c2.coeff(n).unwrap(), expected, "n = {n}");
        }
    }

    #[test]
    fn div_geometric_and_fibonacci() {
        assert_eq!(geometric(8), ones(8));

        let t_over = RatSeries::identity(6).div(&poly(&[1, -1], 6)).unwrap();
        assert_eq!(t_over, RatSeries::from_ints(&[0, 1, 1, 1, 1, 1, 1]));

        let fib = RatSeries::one(7).div(&poly(&[1, -1, -1], 7)).unwrap();
        assert_eq!(fib.coeffs(), &fibonacci_numbers(8)[..]);
    }

    #[test]
    fn div_rejects_non_unit() {
        let t = RatSeries::identity(3);
        assert_eq!(RatSeries::one(3).div(&t), Err(Error::NonUnitDivisor));
    }

    #[test]
    fn div_exact_removes_valuation() {
        // (t + t^2) / t = 1 + t
        let f = RatSeries::from_ints(&[0, 1, 1]);
        let q = f.div_exact(&RatSeries::identity(2)).unwrap();
        assert_eq!(q, RatSeries::from_ints(&[1, 1]));
        // 1 / t is not a power series
        assert_eq!(
            RatSeries::one(2).div_exact(&RatSeries::identity(2)),
            Err(Error::NotDivisibleByT)
        );
    }

    #[test]
    fn compose_identity_and_pascal_pair() {
        let f = RatSeries::from_ints(&[2, 3, 5, 7]);
        assert_eq!(f.compose(&RatSeries::identity(3)).unwrap(), f);

        // 1/(1-z) composed with z/(1+z) collapses to 1 + z.
        let order = 8;
        let g = geometric(order);
        let fbar = RatSeries::identity(order)
            .div(&poly(&[1, 1], order))
            .unwrap();
        let composed = g.compose(&fbar).unwrap();
        assert_eq!(composed, poly(&[1, 1], order));
    }

    #[test]
    fn compose_matches_direct_expansion() {
        // 1/(1-t) composed with u = t(1-t), against the direct geometric
        // expansion sum_k u^k computed term by term.
        let order = 9;
        let u = poly(&[0, 1, -1], order);
        let composed = geometric(order).compose(&u).unwrap();

        let mut expected = RatSeries::one(order);
        let mut power = u.clone();
        for _ in 1..=order {
            expected = expected.add(&power);
            power = power.mul(&u);
        }
        assert_eq!(composed, expected);

        // Same oracle with u = t(1+t) reproduces the Fibonacci numbers.
        let u = poly(&[0, 1, 1], order);
        let composed = geometric(order).compose(&u).unwrap();
        assert_eq!(composed.coeffs(), &fibonacci_numbers(order + 1)[..]);
    }

    #[test]
    fn compose_rejects_nonzero_constant() {
        let f = RatSeries::one(3);
        assert_eq!(f.compose(&f), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn revert_pascal_f() {
        // revert(z/(1-z)) = z/(1+z)
        let order = 10;
        let f = RatSeries::identity(order)
            .div(&poly(&[1, -1], order))
            .unwrap();
        let fbar = f.revert().unwrap();
        assert_eq!(
            fbar,
            RatSeries::identity(order)
                .div(&poly(&[1, 1], order))
                .unwrap()
        );
    }

    #[test]
    fn revert_round_trips() {
        let order = 12;
        let t = RatSeries::identity(order);
        assert_eq!(t.revert().unwrap(), t);

        // revert(t - t^2) = sum Catalan_n t^(n+1)
        let f = poly(&[0, 1, -1], order);
        let w = f.revert().unwrap();
        let cat = catalan_numbers(order);
        for n in 1..=order {
            assert_eq!(w.coeff(n).unwrap(), cat[n - 1], "n = {n}");
        }
        assert!(f.compose(&w).unwrap().agrees_with(&t));
        assert!(w.compose(&f).unwrap().agrees_with(&t));
    }

    #[test]
    fn revert_rejects_bad_input() {
        assert_eq!(RatSeries::one(3).revert(), Err(Error::NotRevertible));
        assert_eq!(
            RatSeries::monomial(Rat::one(), 2, 3).revert(),
            Err(Error::NotRevertible)
        );
    }

    #[test]
    fn derive_examples() {
        assert_eq!(
            RatSeries::from_ints(&[1, 1, 1]).derive(),
            RatSeries::from_ints(&[1, 2])
        );
        assert_eq!(
            RatSeries::constant(Rat::one(), 0).derive(),
            RatSeries::zero(0)
        );
        let g = ones(6);
        let expected = RatSeries::from_ints(&[1, 2, 3, 4, 5, 6]);
        assert_eq!(g.derive(), expected);
    }

    #[test]
    fn pow_int_binomial_and_unit() {
        let f = RatSeries::from_ints(&[1, 1, 0, 0, 0, 0]);
        assert_eq!(
            f.pow_int(5).unwrap(),
            RatSeries::from_ints(&[1, 5, 10, 10, 5, 1])
        );
        assert_eq!(f.pow_int(0).unwrap(), RatSeries::one(5));

        // negative power: (1-t)^(-1) is the geometric series
        let one_minus_t = RatSeries::from_ints(&[1, -1, 0, 0, 0]);
        assert_eq!(one_minus_t.pow_int(-1).unwrap(), ones(4));
        assert_eq!(
            RatSeries::identity(4).pow_int(-1),
            Err(Error::NonUnitDivisor)
        );
    }

    #[test]
    fn pow_int_shifted_catalan_closed_form() {
        // [t^n] (tC)^k = k/(2n-k) binom(2n-k, n-k)
        let order = 12;
        let mut tc_coeffs = vec![Rat::zero()];
        tc_coeffs.extend(catalan_numbers(order));
        let tc = RatSeries::new(tc_coeffs);
        for k in 1..=4i64 {
            let p = tc.pow_int(k).unwrap();
            for n in (k as usize)..=order {
                let mut binom = Rat::one();
                let top = 2 * n as i64 - k;
                let low = n as i64 - k;
                for i in 0..low {
                    binom *= Rat::from_integer((top - i).into());
                    binom /= Rat::from_integer((i + 1).into());
                }
                let expected = Rat::new(k.into(), (2 * n as i64 - k).into()) * binom;
                assert_eq!(p.coeff(n).unwrap(), expected, "k = {k}, n = {n}");
            }
        }
    }

    #[test]
    fn pow_rational_sqrt_gives_catalan() {
        let order = 12;
        let one_minus_4t = poly(&[1, -4], order);
        let root = one_minus_4t.pow_rational(1, 2).unwrap();
        // (1 - sqrt(1-4t)) / (2t)
        let numer = RatSeries::one(order).sub(&root);
        let c = numer
            .shift(-1)
            .unwrap()
            .scale(&Rat::new(1.into(), 2.into()));
        let cat = catalan_numbers(order);
        assert_eq!(c.coeffs(), &cat[..]);

        // square back
        assert!(root.mul(&root).agrees_with(&one_minus_4t));
    }

    #[test]
    fn pow_rational_round_trips() {
        let f = RatSeries::from_ints(&[1, 3, -2, 5, 0, 1, -1, 2]);
        assert_eq!(f.pow_rational(1, 1).unwrap(), f);
        let third = f.pow_rational(1, 3).unwrap();
        assert_eq!(third.pow_rational(3, 1).unwrap(), f);
        assert_eq!(third.pow_int(3).unwrap(), f);
        assert_eq!(
            RatSeries::from_ints(&[2, 1]).pow_rational(1, 2),
            Err(Error::NonUnitConstant)
        );
    }

    #[test]
    fn coeff_and_shift() {
        let g = ones(8);
        assert_eq!(g.coeff(7).unwrap(), Rat::one());
        assert_eq!(
            g.coeff(9),
            Err(Error::OrderExceeded {
                wanted: 9,
                order: 8
            })
        );
        assert_eq!(
            RatSeries::monomial(Rat::one(), 2, 2).coeff(1).unwrap(),
            Rat::zero()
        );

        assert_eq!(
            RatSeries::monomial(Rat::one(), 2, 2).shift(-1).unwrap(),
            RatSeries::identity(1)
        );
        assert_eq!(
            RatSeries::one(0).shift(2).unwrap(),
            RatSeries::monomial(Rat::one(), 2, 2)
        );
        assert_eq!(
            RatSeries::from_ints(&[0, 1, 1]).shift(-1).unwrap(),
            RatSeries::from_ints(&[1, 1])
        );
        assert_eq!(
            RatSeries::from_ints(&[1, 1]).shift(-1),
            Err(Error::NotDivisibleByT)
        );
    }

    #[test]
    fn display_renders_exact_tokens() {
        let s = RatSeries::new(vec![
            Rat::one(),
            Rat::one(),
            Rat::new(1.into(), 2.into()),
            Rat::new(1.into(), 6.into()),
        ]);
        assert_eq!(s.to_string(), "1, 1, 1/2, 1/6");
    }
}
