//! Vertical and horizontal one-pth Riordan arrays.
//!
//! Given `(g, f)` and integers `p >= 1`, `r >= 0`, the vertical one-pth
//! array has entries `d_{pn+r-k, (p-1)n+r}` and the horizontal one
//! `d_{pn+r, (p-1)n+r+k}`. Both are again Riordan arrays, built from the
//! reversion `phi = revert(t^p / f^(p-1))`:
//!
//! - vertical:   `( t phi' g(phi) f(phi)^r / phi^(r+1), phi )`
//! - horizontal: `( t phi' g(phi) f(phi)^r / phi^(r+1), f(phi) )`
//!
//! This module provides the generating-function constructions, brute-force
//! index-extraction oracles that read the entries straight out of the parent
//! matrix, the A-sequence formulas of the new arrays, and a
//! Lagrange-inversion coefficient extractor.

use crate::error::{Error, Result};
use crate::riordan::RiordanArray;
use crate::series::{Coeff, PowerSeries};

/// Which one-pth construction to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Vertical,
    Horizontal,
}

impl std::fmt::Display for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Orientation::Vertical => write!(f, "vertical"),
            Orientation::Horizontal => write!(f, "horizontal"),
        }
    }
}

/// Parameters selecting a one-pth construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OnePthSpec {
    pub p: usize,
    pub r: usize,
    pub orientation: Orientation,
}

impl OnePthSpec {
    pub fn new(p: usize, r: usize, orientation: Orientation) -> Self {
        assert!(p >= 1, "p must be at least 1");
        OnePthSpec { p, r, orientation }
    }

    /// Builds the selected one-pth array of `parent`.
    pub fn build<C: Coeff>(&self, parent: &RiordanArray<C>) -> Result<RiordanArray<C>> {
        match self.orientation {
            Orientation::Vertical => vertical_onepth(parent, self.p, self.r),
            Orientation::Horizontal => horizontal_onepth(parent, self.p, self.r),
        }
    }

    /// The index-extraction oracle for the selected construction.
    pub fn oracle<C: Coeff>(&self, parent: &RiordanArray<C>, rows: usize) -> Result<Vec<Vec<C>>> {
        match self.orientation {
            Orientation::Vertical => oracle_vertical(parent, self.p, self.r, rows),
            Orientation::Horizontal => oracle_horizontal(parent, self.p, self.r, rows),
        }
    }
}

/// The reversion `phi` driving a one-pth construction, together with
/// `u = (f/t)^(p-1)` and `phi'`. Satisfies `phi = t u(phi)` and
/// `(t^p / f^(p-1)) o phi = t` up to the truncation order.
#[derive(Debug, Clone)]
pub struct PhiData<C> {
    pub phi: PowerSeries<C>,
    pub u: PowerSeries<C>,
    pub phi_prime: PowerSeries<C>,
}

/// Computes `phi = revert(t^p / f^(p-1))` for `f(0) = 0`, `f'(0) != 0`.
///
/// The series `t^p / f^(p-1)` is formed as `t * (t/f)^(p-1)` so that every
/// intermediate object is a genuine power series.
pub fn compute_phi<C: Coeff>(f: &PowerSeries<C>, p: usize) -> Result<PhiData<C>> {
    assert!(p >= 1, "p must be at least 1");
    if !f.constant_term().is_zero() || f.order() < 1 || f.coeff(1).unwrap().is_zero() {
        return Err(Error::NotRevertible);
    }
    let u = f.shift(-1)?.pow_int(p as i64 - 1)?;
    let psi = PowerSeries::one(u.order()).div(&u)?.shift(1)?;
    let phi = psi.revert()?;
    let phi_prime = phi.derive();
    Ok(PhiData { phi, u, phi_prime })
}

/// Largest result order the parent's truncation supports: the parent must
/// hold every extracted entry (`p*m + r <= N`) and the assembly division by
/// `phi^(r+1)` costs `r + 1` orders.
fn result_order(parent_order: usize, p: usize, r: usize) -> Result<usize> {
    let required = (p + r).max(r + 2);
    if parent_order < required {
        return Err(Error::InsufficientOrder {
            required,
            available: parent_order,
        });
    }
    Ok(((parent_order - r) / p).min(parent_order - r - 1))
}

struct Components<C> {
    g_new: PowerSeries<C>,
    phi: PowerSeries<C>,
    f_of_phi: PowerSeries<C>,
    order: usize,
}

fn onepth_components<C: Coeff>(
    parent: &RiordanArray<C>,
    p: usize,
    r: usize,
) -> Result<Components<C>> {
    assert!(p >= 1, "p must be at least 1");
    let m = result_order(parent.order(), p, r)?;
    let l = m + r + 1;
    let g = parent.g().truncated(l);
    let f = parent.f().truncated(l);
    let pd = compute_phi(&f, p)?;
    let t_phi_prime = pd.phi_prime.shift(1)?;
    let g_of_phi = g.compose(&pd.phi)?;
    let f_of_phi = f.compose(&pd.phi)?;
    let numer = t_phi_prime.mul(&g_of_phi).mul(&f_of_phi.pow_int(r as i64)?);
    let denom = pd.phi.pow_int(r as i64 + 1)?;
    let g_new = numer.div_exact(&denom)?;
    debug_assert_eq!(g_new.order(), m);
    Ok(Components {
        g_new,
        phi: pd.phi,
        f_of_phi,
        order: m,
    })
}

/// The `(p, r)` vertical one-pth array of `parent`: entries
/// `d_{pn+r-k, (p-1)n+r}`, generating functions
/// `( t phi' g(phi) f(phi)^r / phi^(r+1), phi )`.
///
/// The result order is what the parent truncation supports; raise the
/// parent's order to `p * rows + r` to obtain `rows` rows.
pub fn vertical_onepth<C: Coeff>(
    parent: &RiordanArray<C>,
    p: usize,
    r: usize,
) -> Result<RiordanArray<C>> {
    let c = onepth_components(parent, p, r)?;
    RiordanArray::new(c.g_new, c.phi.truncated(c.order))
}

/// The `(p, r)` horizontal one-pth array of `parent`: entries
/// `d_{pn+r, (p-1)n+r+k}`, generating functions
/// `( t phi' g(phi) f(phi)^r / phi^(r+1), f(phi) )`.
pub fn horizontal_onepth<C: Coeff>(
    parent: &RiordanArray<C>,
    p: usize,
    r: usize,
) -> Result<RiordanArray<C>> {
    let c = onepth_components(parent, p, r)?;
    RiordanArray::new(c.g_new, c.f_of_phi.truncated(c.order))
}

/// Brute-force extraction of the vertical one-pth entries
/// `d_{pn+r-k, (p-1)n+r}` from the parent's materialized matrix. Fully
/// independent of the reversion machinery.
pub fn oracle_vertical<C: Coeff>(
    parent: &RiordanArray<C>,
    p: usize,
    r: usize,
    rows: usize,
) -> Result<Vec<Vec<C>>> {
    assert!(p >= 1 && rows >= 1);
    let top = p * (rows - 1) + r;
    if top > parent.order() {
        return Err(Error::OrderExceeded {
            wanted: top,
            order: parent.order(),
        });
    }
    (0..rows)
        .map(|n| {
            (0..=n)
                .map(|k| parent.entry(p * n + r - k, (p - 1) * n + r))
                .collect()
        })
        .collect()
}

/// Brute-force extraction of the horizontal one-pth entries
/// `d_{pn+r, (p-1)n+r+k}` from the parent's materialized matrix.
pub fn oracle_horizontal<C: Coeff>(
    parent: &RiordanArray<C>,
    p: usize,
    r: usize,
    rows: usize,
) -> Result<Vec<Vec<C>>> {
    assert!(p >= 1 && rows >= 1);
    let top = p * (rows - 1) + r;
    if top > parent.order() {
        return Err(Error::OrderExceeded {
            wanted: top,
            order: parent.order(),
        });
    }
    (0..rows)
        .map(|n| {
            (0..=n)
                .map(|k| parent.entry(p * n + r, (p - 1) * n + r + k))
                .collect()
        })
        .collect()
}

/// Lagrange inversion: `[t^n] F(phi)` for the `phi` implicitly defined by
/// `phi = t u(phi)`, computed as `[t^n] F u^(n-1) (u - t u')` without ever
/// constructing `phi`. Requires `u(0) != 0` and `n >= 1`.
pub fn lif_coeff<C: Coeff>(f: &PowerSeries<C>, u: &PowerSeries<C>, n: usize) -> Result<C> {
    assert!(n >= 1, "the inversion formula needs n >= 1");
    if u.constant_term().is_zero() {
        return Err(Error::NonUnitDivisor);
    }
    let avail = f.order().min(u.order());
    if n > avail {
        return Err(Error::OrderExceeded {
            wanted: n,
            order: avail,
        });
    }
    let u_pow = u.pow_int(n as i64 - 1)?;
    let t_u_prime = u.derive().shift(1)?;
    f.mul(&u_pow).mul(&u.sub(&t_u_prime)).coeff(n)
}

/// The A-sequence generating function of a one-pth array, straight from the
/// parent: `(f/t)^(p-1)` for the vertical construction and `A(t)^p` for the
/// horizontal one, where `A` is the parent's A-sequence.
pub fn a_seq_formula<C: Coeff>(
    parent: &RiordanArray<C>,
    p: usize,
    orientation: Orientation,
) -> Result<PowerSeries<C>> {
    assert!(p >= 1, "p must be at least 1");
    match orientation {
        Orientation::Vertical => parent.f().shift(-1)?.pow_int(p as i64 - 1),
        Orientation::Horizontal => parent.a_sequence()?.pow_int(p as i64),
    }
}
