//! Divisor classes on the Hirzebruch surface F_t.
//!
//! Num(F_t) is generated by the negative section `C0` and a fibre `f`, with
//! `C0^2 = -t`, `C0.f = 1`, `f^2 = 0`.

use crate::error::{Error, Result};
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

/// `alpha*C0 + beta*f` on F_t.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    pub t: i64,
    pub alpha: i64,
    pub beta: i64,
}

impl DivisorClass {
    pub fn new(t: i64, alpha: i64, beta: i64) -> Result<Self> {
        if t < 0 {
            return Err(Error::domain(format!("F_t needs t >= 0, got {t}")));
        }
        Ok(DivisorClass { t, alpha, beta })
    }

    pub fn section(t: i64) -> Self {
        DivisorClass { t, alpha: 1, beta: 0 }
    }

    pub fn fibre(t: i64) -> Self {
        DivisorClass { t, alpha: 0, beta: 1 }
    }

    /// `K = -2C0 - (t+2)f`.
    pub fn canonical(t: i64) -> Self {
        DivisorClass { t, alpha: -2, beta: -(t + 2) }
    }

    /// The class `4C0 + (lambda+t)f` of a 4-gonal standard model.
    pub fn gonal(lambda: i64, t: i64) -> Self {
        DivisorClass { t, alpha: 4, beta: lambda + t }
    }

    pub fn add(self, other: Self) -> Result<Self> {
        same_surface(&self, &other)?;
        Ok(DivisorClass { t: self.t, alpha: self.alpha + other.alpha, beta: self.beta + other.beta })
    }

    pub fn scale(self, k: i64) -> Self {
        DivisorClass { t: self.t, alpha: k * self.alpha, beta: k * self.beta }
    }
}

fn same_surface(d1: &DivisorClass, d2: &DivisorClass) -> Result<()> {
    if d1.t != d2.t {
        return Err(Error::usage(format!("classes on F_{} and F_{}", d1.t, d2.t)));
    }
    Ok(())
}

pub fn intersect(d1: &DivisorClass, d2: &DivisorClass) -> Result<i64> {
    same_surface(d1, d2)?;
    Ok(d1.alpha * d2.beta + d2.alpha * d1.beta - d1.t * d1.alpha * d2.alpha)
}

/// Adjunction: `1 + D.(D+K)/2`.
pub fn arithmetic_genus(d: &DivisorClass) -> Result<i64> {
    if d.alpha < 0 {
        return Err(Error::range("arithmetic genus needs alpha >= 0"));
    }
    let k = DivisorClass::canonical(d.t);
    let twice = intersect(d, &d.add(k)?)?;
    assert!(twice % 2 == 0, "D.(D+K) is always even");
    Ok(1 + twice / 2)
}

/// Arithmetic genus of a `q`-secant curve of degree `deg_y` on a ruled surface
/// of degree `deg_r`: `(q-1)/2 * (2(deg_y - 1) - q deg_r)`.
pub fn genus_formula_qsecant(q: i64, deg_y: i64, deg_r: i64) -> Result<Ratio<i64>> {
    if q < 1 {
        return Err(Error::range("q-secant needs q >= 1"));
    }
    Ok(Ratio::new(q - 1, 2) * Ratio::from_integer(2 * (deg_y - 1) - q * deg_r))
}

/// `h^0(O(C0 + nf))` for `n >= t`.
pub fn h0_unisecant(n: i64, t: i64) -> Result<i64> {
    if t < 0 || n < t {
        return Err(Error::range(format!("h0 of C0+{n}f on F_{t} needs n >= t")));
    }
    Ok(2 * n - t + 2)
}

/// Pushforward to P^1: `sum_{i=0..alpha} max(0, beta - i t + 1)`.
pub fn h0_line_bundle(d: &DivisorClass) -> Result<i64> {
    if d.alpha < 0 {
        return Err(Error::range("h0 needs alpha >= 0"));
    }
    Ok((0..=d.alpha).map(|i| (d.beta - i * d.t + 1).max(0)).sum())
}

/// Dimension of the family of degree-`d` unisecants on a ruled surface of
/// degree `r` (valid when the unisecants have self-intersection above `t`).
pub fn unisecant_family_dim(d: i64, r: i64) -> i64 {
    2 * d + 1 - r
}

pub fn very_ample(d: &DivisorClass) -> bool {
    d.alpha >= 1 && d.beta > d.alpha * d.t
}

/// `lambda >= max(3t, t+5)`: the general member of `|4C0 + (lambda+t)f|` is
/// irreducible and the bisecant model embeds.
pub fn foursecant_irreducible_bound(lambda: i64, t: i64) -> bool {
    lambda >= (3 * t).max(t + 5)
}
