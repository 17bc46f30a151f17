//! Admissible invariants `(g, t, lambda, a, b, c)` of 4-gonal curves.
//!
//! Every range check is done on cleared denominators, never on floats: the
//! branch points such as `(2g+3t+6)/5` are decided by exact integer
//! comparisons.

use crate::error::{Error, Result};
use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A violated constraint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Reason {
    /// `(g+3)/3 + t <= lambda <= (g+3)/2`
    R1,
    /// `a_min <= a <= (g-3)/3`
    R2,
    /// `g-lambda-1 <= a+b <= 2(g-3)/3`
    R3,
    /// `0 <= a <= b <= c`
    #[serde(rename = "order")]
    Order,
    /// `delta >= 0`
    #[serde(rename = "delta")]
    Delta,
    /// `1 <= t <= (g+3)/6`
    #[serde(rename = "t-range")]
    TRange,
    /// `lambda >= 2 delta + 3t`: the nodes on `C0` lie in distinct fibres.
    #[serde(rename = "distinct-points")]
    DistinctPoints,
    /// `lambda <= (2g+3t+6)/5`
    #[serde(rename = "slope")]
    Slope,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Reason::R1 => "R1: (g+3)/3 + t <= lambda <= (g+3)/2",
            Reason::R2 => "R2: a_min <= a <= (g-3)/3",
            Reason::R3 => "R3: g-lambda-1 <= a+b <= 2(g-3)/3",
            Reason::Order => "order: 0 <= a <= b <= c",
            Reason::Delta => "delta: 3(lambda-t-1) - g >= 0",
            Reason::TRange => "t-range: 1 <= t <= (g+3)/6",
            Reason::DistinctPoints => "distinct-points: lambda >= 2 delta + 3t",
            Reason::Slope => "slope: lambda <= (2g+3t+6)/5",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantTuple {
    pub g: i64,
    pub t: i64,
    pub lambda: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub delta: i64,
    pub eps: u8,
    pub tau: u8,
    pub xi: u8,
    pub a_min: i64,
    pub admissible: bool,
    pub reasons: Vec<Reason>,
}

/// Degrees of the gonal series, the double-point series and the hyperplane
/// section on the standard model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDegrees {
    pub phi_degree: i64,
    pub delta_series_degree: i64,
    pub hyperplane_degree: i64,
}

pub fn series_degrees(lambda: i64, t: i64) -> SeriesDegrees {
    SeriesDegrees { phi_degree: 4, delta_series_degree: lambda + t, hyperplane_degree: lambda + t + 4 }
}

pub fn delta(g: i64, lambda: i64, t: i64) -> i64 {
    3 * (lambda - t - 1) - g
}

/// Smallest attainable `a`.
pub fn a_min(g: i64, lambda: i64, t: i64) -> i64 {
    if 5 * lambda >= 2 * g + 3 * t + 6 {
        // ceil((lambda-t-4)/2)
        (lambda - t - 4).div_euclid(2) + (lambda - t - 4).rem_euclid(2)
    } else {
        g - 2 * lambda + t + 1
    }
}

pub fn eps_tau_xi(g: i64, lambda: i64, a: i64, b: i64, c: i64) -> (u8, u8, u8) {
    let eps = if b < c {
        0
    } else if a < b {
        1
    } else {
        2
    };
    let tau = u8::from(a == b);
    let xi = u8::from(2 * lambda == g + 3);
    (eps, tau, xi)
}

/// Largest `lambda` for genus `g`: `floor((g+3)/2)`, which is also
/// `ceil((g+2)/2)`.
pub fn lambda_max(g: i64) -> i64 {
    (g + 3).div_euclid(2)
}

/// Smallest `lambda` at `t = 0`: `ceil((g+3)/3)`.
pub fn lambda_min(g: i64) -> i64 {
    (g + 5).div_euclid(3)
}

fn require_genus(g: i64) -> Result<()> {
    if g < 10 {
        return Err(Error::domain(format!("genus {g} is below 10")));
    }
    Ok(())
}

fn order_ok(a: i64, b: i64, c: i64) -> bool {
    0 <= a && a <= b && b <= c
}

/// Checks the three admissibility ranges at `t = 0`; `c = g-3-a-b`.
pub fn check_admissible_t0(g: i64, lambda: i64, a: i64, b: i64) -> Result<InvariantTuple> {
    require_genus(g)?;
    let c = g - 3 - a - b;
    let d = delta(g, lambda, 0);
    let amin = a_min(g, lambda, 0);
    let mut reasons = Vec::new();
    if !(3 * lambda >= g + 3 && 2 * lambda <= g + 3) {
        reasons.push(Reason::R1);
    }
    if !(a >= amin && 3 * a <= g - 3) {
        reasons.push(Reason::R2);
    }
    if !(a + b >= g - lambda - 1 && 3 * (a + b) <= 2 * (g - 3)) {
        reasons.push(Reason::R3);
    }
    if !order_ok(a, b, c) {
        reasons.push(Reason::Order);
    }
    if d < 0 {
        reasons.push(Reason::Delta);
    }
    let (eps, tau, xi) = eps_tau_xi(g, lambda, a, b, c);
    Ok(InvariantTuple {
        g,
        t: 0,
        lambda,
        a,
        b,
        c,
        delta: d,
        eps,
        tau,
        xi,
        a_min: amin,
        admissible: reasons.is_empty(),
        reasons,
    })
}

/// Checks `t >= 1` in the distinct-double-points regime, where `a`, `b`, `c`
/// are forced: `a = g+t-2 lambda+1`, `b = lambda-t-2`, `c = lambda-2`.
pub fn check_admissible_tpos(g: i64, lambda: i64, t: i64) -> Result<InvariantTuple> {
    require_genus(g)?;
    if t < 1 {
        return Err(Error::usage("check_admissible_tpos needs t >= 1"));
    }
    let a = g + t - 2 * lambda + 1;
    let b = lambda - t - 2;
    let c = lambda - 2;
    let d = delta(g, lambda, t);
    let mut reasons = Vec::new();
    if !(3 * lambda >= g + 3 + 3 * t && 2 * lambda <= g + 3) {
        reasons.push(Reason::R1);
    }
    if 6 * t > g + 3 {
        reasons.push(Reason::TRange);
    }
    if !order_ok(a, b, c) {
        reasons.push(Reason::Order);
    }
    if d < 0 {
        reasons.push(Reason::Delta);
    }
    if lambda < 2 * d + 3 * t {
        reasons.push(Reason::DistinctPoints);
    }
    if 5 * lambda > 2 * g + 3 * t + 6 {
        reasons.push(Reason::Slope);
    }
    let (eps, tau, xi) = eps_tau_xi(g, lambda, a, b, c);
    Ok(InvariantTuple {
        g,
        t,
        lambda,
        a,
        b,
        c,
        delta: d,
        eps,
        tau,
        xi,
        a_min: a_min(g, lambda, t),
        admissible: reasons.is_empty(),
        reasons,
    })
}

/// All admissible tuples for `(g, t)`, sorted by `(lambda, a, b)`.
pub fn enumerate_admissible(g: i64, t: i64) -> Result<Vec<InvariantTuple>> {
    require_genus(g)?;
    if t < 0 {
        return Err(Error::domain("t must be nonnegative"));
    }
    let lambdas: Vec<i64> = (lambda_min(g)..=lambda_max(g) + 1).collect();
    let per_lambda: Vec<Vec<InvariantTuple>> = lambdas
        .par_iter()
        .map(|&lambda| {
            if t == 0 {
                let mut out = Vec::new();
                for a in 0..=g {
                    for b in 0..=g {
                        let tup = check_admissible_t0(g, lambda, a, b).expect("g checked");
                        if tup.admissible {
                            out.push(tup);
                        }
                    }
                }
                out
            } else {
                let tup = check_admissible_tpos(g, lambda, t).expect("g and t checked");
                if tup.admissible {
                    vec![tup]
                } else {
                    Vec::new()
                }
            }
        })
        .collect();
    let out: Vec<InvariantTuple> = per_lambda.into_iter().flatten().collect();
    for tup in &out {
        assert!(
            Ratio::from_integer(tup.a + tup.b) >= ab_floor(g),
            "admissible tuple below the a+b floor: {tup:?}"
        );
    }
    Ok(out)
}

/// `(g-5)/2`, the lower bound for `a + b`.
pub fn ab_floor(g: i64) -> Ratio<i64> {
    Ratio::new(g - 5, 2)
}
