//! Riordan arrays: lower-triangular matrices `d_{n,k} = [t^n] g f^k` defined
//! by a pair of series, with the group operations, the fundamental-theorem
//! action, A- and Z-sequences, subgroup classification, and the column
//! convolution identity.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::series::{Coeff, PowerSeries};

/// A Riordan array `(g, f)` truncated at a common order.
///
/// Invariants, checked at construction: `g(0) != 0`, `f(0) = 0`,
/// `f'(0) != 0`. Entries with `k > n` are zero.
#[derive(Debug)]
pub struct RiordanArray<C> {
    g: PowerSeries<C>,
    f: PowerSeries<C>,
    // Materialized entries, built on first access. Purely an optimization;
    // safe for concurrent readers.
    triangle: OnceLock<Vec<Vec<C>>>,
}

impl<C: Coeff> Clone for RiordanArray<C> {
    fn clone(&self) -> Self {
        RiordanArray {
            g: self.g.clone(),
            f: self.f.clone(),
            triangle: OnceLock::new(),
        }
    }
}

impl<C: Coeff> PartialEq for RiordanArray<C> {
    fn eq(&self, other: &Self) -> bool {
        self.g == other.g && self.f == other.f
    }
}

impl<C: Coeff> RiordanArray<C> {
    /// Builds an array from the pair `(g, f)`, truncating both series to the
    /// smaller of the two orders.
    pub fn new(g: PowerSeries<C>, f: PowerSeries<C>) -> Result<Self> {
        if g.constant_term().is_zero() {
            return Err(Error::InvalidArray("g(0) must be nonzero"));
        }
        if !f.constant_term().is_zero() {
            return Err(Error::InvalidArray("f(0) must be zero"));
        }
        if f.order() < 1 || f.coeff(1).unwrap().is_zero() {
            return Err(Error::InvalidArray("f'(0) must be nonzero"));
        }
        let order = g.order().min(f.order());
        Ok(RiordanArray {
            g: g.truncated(order),
            f: f.truncated(order),
            triangle: OnceLock::new(),
        })
    }

    /// The identity element `(1, t)`.
    pub fn group_identity(order: usize) -> Self {
        Self::new(PowerSeries::one(order), PowerSeries::identity(order))
            .expect("(1, t) is a Riordan array")
    }

    pub fn g(&self) -> &PowerSeries<C> {
        &self.g
    }

    pub fn f(&self) -> &PowerSeries<C> {
        &self.f
    }

    /// Common truncation order of `g` and `f`.
    pub fn order(&self) -> usize {
        self.g.order()
    }

    /// All entries `d_{n,k}` for `0 <= k <= n <= order`, row by row.
    pub fn triangle(&self) -> &[Vec<C>] {
        self.triangle.get_or_init(|| {
            let n = self.order();
            let mut rows: Vec<Vec<C>> = (0..=n).map(|r| Vec::with_capacity(r + 1)).collect();
            // column k has generating function g * f^k
            let mut col = self.g.clone();
            for k in 0..=n {
                for (r, row) in rows.iter_mut().enumerate().take(n + 1).skip(k) {
                    row.push(col.coeffs()[r].clone());
                }
                if k < n {
                    col = col.mul(&self.f);
                }
            }
            rows
        })
    }

    /// The entry `d_{n,k} = [t^n] g f^k`; zero for `k > n`.
    pub fn entry(&self, n: usize, k: usize) -> Result<C> {
        if n > self.order() {
            return Err(Error::OrderExceeded {
                wanted: n,
                order: self.order(),
            });
        }
        if k > n {
            return Ok(C::zero());
        }
        Ok(self.triangle()[n][k].clone())
    }

    /// Group product `(g, f)(ghat, fhat) = (g * (ghat o f), fhat o f)`. The
    /// matrix of the result equals the product of the truncated matrices.
    pub fn multiply(&self, rhs: &Self) -> Result<Self> {
        let ghat_of_f = rhs.g.compose(&self.f)?;
        let fhat_of_f = rhs.f.compose(&self.f)?;
        Self::new(self.g.mul(&ghat_of_f), fhat_of_f)
    }

    /// Group inverse `(1/(g o fbar), fbar)`.
    pub fn inverse(&self) -> Result<Self> {
        let fbar = self.f.revert()?;
        let g_of_fbar = self.g.compose(&fbar)?;
        let ginv = PowerSeries::one(self.order()).div(&g_of_fbar)?;
        Self::new(ginv, fbar)
    }

    /// The fundamental-theorem action on a column generating function:
    /// `h = g * (d o f)`, i.e. the matrix-vector product in series form.
    pub fn apply_ftra(&self, d: &PowerSeries<C>) -> PowerSeries<C> {
        let composed = d.compose(&self.f).expect("f(0) = 0 by invariant");
        self.g.mul(&composed)
    }

    /// Generating function `A` of the A-sequence, computed as `A = t / fbar`.
    /// Satisfies `f = t * A(f)` up to the truncation order.
    pub fn a_sequence(&self) -> Result<PowerSeries<C>> {
        let fbar = self.f.revert()?;
        PowerSeries::identity(self.order()).div_exact(&fbar)
    }

    /// Generating function `Z` of the Z-sequence,
    /// `Z = (g(fbar) - 1) / (fbar * g(fbar))`. Requires the normalization
    /// `g(0) = 1`; satisfies `g = 1 / (1 - t Z(f))`.
    pub fn z_sequence(&self) -> Result<PowerSeries<C>> {
        if !self.g.constant_term().is_one() {
            return Err(Error::UnnormalizedG);
        }
        let fbar = self.f.revert()?;
        let g_of_fbar = self.g.compose(&fbar)?;
        let numer = g_of_fbar.sub(&PowerSeries::one(g_of_fbar.order()));
        numer.div_exact(&fbar.mul(&g_of_fbar))
    }

    /// Both characteristic sequences at once.
    pub fn sequence_pair(&self) -> Result<SequencePair<C>> {
        Ok(SequencePair {
            a_seq: self.a_sequence()?,
            z_seq: self.z_sequence()?,
        })
    }

    /// Checks that the A- and Z-sequence recurrences reproduce rows
    /// `1..=rows` of the array exactly. Returns the first failing `(n, k)`
    /// if any (with `n` the produced row).
    pub fn row_recurrence_violation(&self, rows: usize) -> Result<Option<(usize, usize)>> {
        if rows > self.order() {
            return Err(Error::OrderExceeded {
                wanted: rows,
                order: self.order(),
            });
        }
        let a = self.a_sequence()?;
        let z = self.z_sequence()?;
        Ok(recurrence_violation(&a, &z, self.triangle(), rows))
    }

    /// True iff both row recurrences hold exactly for all produced rows
    /// `1..=rows`.
    pub fn row_recurrence_check(&self, rows: usize) -> Result<bool> {
        Ok(self.row_recurrence_violation(rows)?.is_none())
    }

    /// The subgroups (of the six classical ones) whose defining relation
    /// holds to the full truncation order. Decided at truncation order only.
    pub fn classify_subgroups(&self) -> BTreeSet<Subgroup> {
        let order = self.order();
        let mut out = BTreeSet::new();
        let t = PowerSeries::identity(order);
        if self.f == t {
            out.insert(Subgroup::Appell);
        }
        if self.g == PowerSeries::one(order) {
            out.insert(Subgroup::Lagrange);
        }
        for k in 1..=8u8 {
            let tgk = self
                .g
                .pow_int(k as i64)
                .expect("nonnegative power")
                .shift(1)
                .expect("positive shift");
            if self.f.agrees_with(&tgk) {
                out.insert(Subgroup::Bell(k));
            }
        }
        let f_prime = self.f.derive();
        let tfp = f_prime.shift(1).expect("positive shift");
        if let Ok(ht) = tfp.div_exact(&self.f) {
            if self.g.agrees_with(&ht) {
                out.insert(Subgroup::HittingTime);
            }
        }
        if self.g.agrees_with(&f_prime) {
            out.insert(Subgroup::Derivative);
        }
        let g_even = self
            .g
            .coeffs()
            .iter()
            .skip(1)
            .step_by(2)
            .all(|c| c.is_zero());
        let f_odd = self.f.coeffs().iter().step_by(2).all(|c| c.is_zero());
        if g_even && f_odd {
            out.insert(Subgroup::Checkerboard);
        }
        out
    }

    /// True iff `(self * (1, -t))^2` is the identity up to the truncation
    /// order.
    pub fn is_pseudo_involution(&self) -> bool {
        let order = self.order();
        let neg = Self::new(
            PowerSeries::one(order),
            PowerSeries::monomial(-C::one(), 1, order),
        )
        .expect("(1, -t) is a Riordan array");
        let m = self.multiply(&neg).expect("product with (1, -t)");
        let sq = m.multiply(&m).expect("square");
        sq.g.agrees_with(&PowerSeries::one(sq.order()))
            && sq.f.agrees_with(&PowerSeries::identity(sq.order()))
    }

    /// Both sides of the column convolution
    /// `d_{n,k} = sum_{j=s}^{n} d_{n-j,k-s} [t^j] f^s`, computed
    /// independently (entry extraction on the left, a fresh power of `f` on
    /// the right). Requires `k >= s >= 1`.
    pub fn convolution_identity(&self, n: usize, k: usize, s: usize) -> Result<(C, C)> {
        assert!(s >= 1 && k >= s, "need k >= s >= 1");
        let lhs = self.entry(n, k)?;
        let fs = self.f.pow_int(s as i64).expect("nonnegative power");
        let mut rhs = C::zero();
        for j in s..=n {
            let d = self.entry(n - j, k - s)?;
            if d.is_zero() {
                continue;
            }
            rhs = rhs + d * fs.coeffs()[j].clone();
        }
        Ok((lhs, rhs))
    }
}

/// Checks the A/Z row recurrences against an explicit entry triangle;
/// returns the first `(row, column)` where the produced row disagrees.
///
/// Row `n+1` must satisfy `d_{n+1,k} = sum_j a_j d_{n,k-1+j}` for `k >= 1`
/// and `d_{n+1,0} = sum_j z_j d_{n,j}`.
pub fn recurrence_violation<C: Coeff>(
    a: &PowerSeries<C>,
    z: &PowerSeries<C>,
    triangle: &[Vec<C>],
    rows: usize,
) -> Option<(usize, usize)> {
    for n in 0..rows {
        let mut zero_col = C::zero();
        for (j, zj) in z.coeffs().iter().enumerate().take(n + 1) {
            zero_col = zero_col + zj.clone() * triangle[n][j].clone();
        }
        if zero_col != triangle[n + 1][0] {
            return Some((n + 1, 0));
        }
        for k in 1..=(n + 1) {
            let mut acc = C::zero();
            for (j, aj) in a.coeffs().iter().enumerate() {
                if k - 1 + j > n {
                    break;
                }
                acc = acc + aj.clone() * triangle[n][k - 1 + j].clone();
            }
            if acc != triangle[n + 1][k] {
                return Some((n + 1, k));
            }
        }
    }
    None
}

/// The A- and Z-sequence generating functions of an array: `A(0) != 0`,
/// `f = t A(f)` and `g = 1/(1 - t Z(f))` up to the truncation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequencePair<C> {
    pub a_seq: PowerSeries<C>,
    pub z_seq: PowerSeries<C>,
}

/// The six classical subgroups of the Riordan group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Subgroup {
    Appell,
    Lagrange,
    /// k-Bell: `f = t g^k` for the reported `k >= 1`.
    Bell(u8),
    HittingTime,
    Derivative,
    Checkerboard,
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subgroup::Appell => write!(f, "Appell"),
            Subgroup::Lagrange => write!(f, "Lagrange"),
            Subgroup::Bell(k) => write!(f, "Bell({k})"),
            Subgroup::HittingTime => write!(f, "hitting-time"),
            Subgroup::Derivative => write!(f, "derivative"),
            Subgroup::Checkerboard => write!(f, "checkerboard"),
        }
    }
}
