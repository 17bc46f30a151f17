//! Dimensions of the gonality strata of M_{g,4}.

use crate::error::{Error, Result};
use crate::invariants::{self, check_admissible_t0, check_admissible_tpos, InvariantTuple};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Where a dimension comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// `g + 2 lambda + 1` below the top invariant.
    LambdaStratum,
    /// The top invariant, where the stratum is open in M_{g,4}.
    TopStratum,
    /// `2(2a+b+lambda) + 10 - g - eps - tau - xi`, for `2a >= g-lambda-1`.
    LargeA,
    /// `2(a+b) + lambda + 8 - eps - xi`, for `2a < g-lambda-1`.
    SmallA,
    /// `2g - lambda + 6` for `t >= 1`.
    PositiveT,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumRecord {
    pub g: i64,
    pub t: i64,
    pub lambda: i64,
    /// `None` for a whole lambda-stratum, `Some` for an `(a, b)` sub-stratum.
    pub tuple: Option<InvariantTuple>,
    /// Dimension of the parameter space (for a sub-stratum: of its preimage).
    pub dim_w: i64,
    pub dim_fiber_theta: i64,
    pub dim_m: i64,
    pub is_generic_stratum: bool,
    pub source: Source,
}

pub fn dim_w_lambda(g: i64, lambda: i64) -> i64 {
    g + 2 * lambda + 7
}

/// Dimension of the fibres of the parameter space over the moduli space.
pub fn theta_fiber_dim(g: i64, lambda: i64) -> i64 {
    if g % 2 == 1 && lambda == invariants::lambda_max(g) {
        7
    } else {
        6
    }
}

pub fn dim_m_lambda(g: i64, lambda: i64) -> i64 {
    let d = dim_w_lambda(g, lambda) - theta_fiber_dim(g, lambda);
    if lambda < invariants::lambda_max(g) {
        debug_assert_eq!(d, g + 2 * lambda + 1);
    } else if lambda == invariants::lambda_max(g) {
        debug_assert_eq!(d, 2 * g + 3);
    }
    d
}

fn admissible_t0(g: i64, lambda: i64, a: i64, b: i64) -> Result<InvariantTuple> {
    let tup = check_admissible_t0(g, lambda, a, b)?;
    if !tup.admissible {
        return Err(Error::domain(format!(
            "(g, lambda, a, b) = ({g}, {lambda}, {a}, {b}) is not admissible: {}",
            reasons_text(&tup)
        )));
    }
    Ok(tup)
}

pub(crate) fn reasons_text(tup: &InvariantTuple) -> String {
    tup.reasons.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

fn dim_ab(tup: &InvariantTuple) -> (i64, Source) {
    let (g, lambda, a, b) = (tup.g, tup.lambda, tup.a, tup.b);
    let (eps, tau, xi) = (tup.eps as i64, tup.tau as i64, tup.xi as i64);
    if 2 * a >= g - lambda - 1 {
        (2 * (2 * a + b + lambda) + 10 - g - eps - tau - xi, Source::LargeA)
    } else {
        // a = b = c forces 2a >= g-lambda-1, so eps is 0 or 1 here
        debug_assert!(eps < 2);
        (2 * (a + b) + lambda + 8 - eps - xi, Source::SmallA)
    }
}

/// Dimension of the `(a, b)` sub-stratum at `t = 0`.
pub fn dim_m_lambda_ab(g: i64, lambda: i64, a: i64, b: i64) -> Result<i64> {
    Ok(dim_ab(&admissible_t0(g, lambda, a, b)?).0)
}

/// `(dim W, dim M)` for `t >= 1`.
pub fn dim_m_lambda_t(g: i64, lambda: i64, t: i64) -> Result<(i64, i64)> {
    let tup = check_admissible_tpos(g, lambda, t)?;
    if !tup.admissible {
        return Err(Error::domain(format!(
            "(g, lambda, t) = ({g}, {lambda}, {t}) is not admissible: {}",
            reasons_text(&tup)
        )));
    }
    let dw = 2 * g + t - lambda + 11;
    let dm = 2 * g - lambda + 6;
    debug_assert_eq!(dw - dm, t + 5);
    Ok((dw, dm))
}

/// The scroll type of the general curve with invariant `lambda`.
pub fn generic_tuple(g: i64) -> (i64, i64, i64) {
    let p = g.div_euclid(3);
    match g.rem_euclid(3) {
        0 => (p - 1, p - 1, p - 1),
        1 => (p - 1, p - 1, p),
        _ => (p - 1, p, p),
    }
}

fn admissible_lambdas(g: i64) -> Vec<i64> {
    (invariants::lambda_min(g)..=invariants::lambda_max(g))
        .filter(|&l| invariants::delta(g, l, 0) >= 0)
        .collect()
}

/// The full t = 0 stratification: for each lambda (descending), the
/// lambda-stratum followed by its `(a, b)` sub-strata.
pub fn stratification_table(g: i64) -> Result<Vec<StratumRecord>> {
    let all = invariants::enumerate_admissible(g, 0)?;
    let lambda_top = invariants::lambda_max(g);
    let mut lambdas = admissible_lambdas(g);
    lambdas.reverse();
    let blocks: Vec<Vec<StratumRecord>> = lambdas
        .par_iter()
        .map(|&lambda| {
            let theta = theta_fiber_dim(g, lambda);
            let dim_m = dim_m_lambda(g, lambda);
            let source = if lambda == lambda_top { Source::TopStratum } else { Source::LambdaStratum };
            let mut block = vec![StratumRecord {
                g,
                t: 0,
                lambda,
                tuple: None,
                dim_w: dim_w_lambda(g, lambda),
                dim_fiber_theta: theta,
                dim_m,
                is_generic_stratum: lambda == lambda_top,
                source,
            }];
            for tup in all.iter().filter(|x| x.lambda == lambda) {
                let (d, src) = dim_ab(tup);
                block.push(StratumRecord {
                    g,
                    t: 0,
                    lambda,
                    tuple: Some(tup.clone()),
                    dim_w: d + theta,
                    dim_fiber_theta: theta,
                    dim_m: d,
                    is_generic_stratum: d == dim_m,
                    source: src,
                });
            }
            block
        })
        .collect();
    let table: Vec<StratumRecord> = blocks.into_iter().flatten().collect();
    let tops: Vec<i64> = table.iter().filter(|r| r.tuple.is_none()).map(|r| r.dim_m).collect();
    assert!(tops.windows(2).all(|w| w[0] > w[1]), "lambda-strata dimensions not increasing");
    assert_eq!(tops.first().copied(), Some(2 * g + 3));
    Ok(table)
}

/// Records for `t >= 1`, one per admissible `lambda`, descending.
pub fn stratification_table_t(g: i64, t: i64) -> Result<Vec<StratumRecord>> {
    if t < 1 {
        return Err(Error::usage("positive-t table needs t >= 1"));
    }
    let mut out = Vec::new();
    for tup in invariants::enumerate_admissible(g, t)?.into_iter().rev() {
        let (dw, dm) = dim_m_lambda_t(g, tup.lambda, t)?;
        out.push(StratumRecord {
            g,
            t,
            lambda: tup.lambda,
            tuple: Some(tup),
            dim_w: dw,
            dim_fiber_theta: t + 5,
            dim_m: dm,
            is_generic_stratum: false,
            source: Source::PositiveT,
        });
    }
    Ok(out)
}

/// Checks that, for every admissible `lambda` at `t = 0`, the sub-strata never
/// exceed the lambda-stratum and reach it exactly at the generic scroll type
/// (when that type is admissible). For `g = 3p+1` the neighbour
/// `(p-2, p, p)` must stay strictly below. Returns one line per violation.
pub fn generic_maximality_violations(g: i64) -> Result<Vec<String>> {
    let all = invariants::enumerate_admissible(g, 0)?;
    let (ga, gb, gc) = generic_tuple(g);
    let mut out = Vec::new();
    for lambda in admissible_lambdas(g) {
        let top = dim_m_lambda(g, lambda);
        for tup in all.iter().filter(|x| x.lambda == lambda) {
            let (d, _) = dim_ab(tup);
            let is_generic = (tup.a, tup.b, tup.c) == (ga, gb, gc);
            if d > top {
                out.push(format!("{tup:?}: dim {d} exceeds lambda-stratum dim {top}"));
            } else if d == top && !is_generic {
                out.push(format!("{tup:?}: non-generic tuple reaches dim {top}"));
            } else if d < top && is_generic {
                out.push(format!("{tup:?}: generic tuple stays below {top} (dim {d})"));
            }
            if g % 3 == 1 && (tup.a, tup.b, tup.c) == (g / 3 - 2, g / 3, g / 3) && d >= top {
                out.push(format!("{tup:?}: (p-2,p,p) reaches dim {d} >= {top}"));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_space_examples() {
        assert_eq!(dim_w_lambda(12, 6), 31);
        assert_eq!(dim_w_lambda(10, 5), 27);
        for g in 10..50 {
            for lambda in 0..40 {
                let d = invariants::delta(g, lambda, 0);
                assert_eq!(5 * lambda + 4 - d, dim_w_lambda(g, lambda));
            }
        }
    }

    #[test]
    fn fibre_dims() {
        assert_eq!(theta_fiber_dim(11, 7), 7);
        assert_eq!(theta_fiber_dim(12, 7), 6);
        assert_eq!(theta_fiber_dim(11, 6), 6);
    }

    #[test]
    fn lambda_strata() {
        assert_eq!(dim_m_lambda(11, 7), 25);
        assert_eq!(dim_m_lambda(12, 7), 27);
        assert_eq!(dim_m_lambda(12, 6), 25);
        for g in 10..80 {
            assert_eq!(dim_m_lambda(g, invariants::lambda_max(g)), 2 * g + 3);
        }
    }

    #[test]
    fn sub_strata() {
        assert_eq!(dim_m_lambda_ab(12, 6, 3, 3).unwrap(), 25);
        assert_eq!(dim_m_lambda_ab(12, 6, 2, 3).unwrap(), 24);
        assert_eq!(dim_m_lambda_ab(12, 6, 1, 4).unwrap(), 23);
        assert!(matches!(dim_m_lambda_ab(12, 9, 1, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn positive_t() {
        assert_eq!(dim_m_lambda_t(15, 7, 1).unwrap(), (35, 29));
        assert_eq!(dim_m_lambda_t(21, 12, 4).unwrap(), (45, 36));
        for g in 10..60 {
            for t in 1..=(g + 3) / 6 {
                for x in invariants::enumerate_admissible(g, t).unwrap() {
                    let (w, m) = dim_m_lambda_t(g, x.lambda, t).unwrap();
                    assert_eq!(w - m, t + 5);
                }
            }
        }
    }

    #[test]
    fn generic_tuples() {
        assert_eq!(generic_tuple(12), (3, 3, 3));
        assert_eq!(generic_tuple(13), (3, 3, 4));
        assert_eq!(generic_tuple(14), (3, 4, 4));
        for g in 10..100 {
            let (a, b, c) = generic_tuple(g);
            assert_eq!(a + b + c, g - 3);
        }
    }

    #[test]
    fn table_for_genus_12() {
        let table = stratification_table(12).unwrap();
        let chain: Vec<(i64, i64)> =
            table.iter().filter(|r| r.tuple.is_none()).map(|r| (r.lambda, r.dim_m)).collect();
        assert_eq!(chain, vec![(7, 27), (6, 25), (5, 23)]);
        let top = stratification_table(10).unwrap();
        assert_eq!(top[0].dim_m, 23);
        for r in &table {
            assert_eq!(r.dim_m, r.dim_w - r.dim_fiber_theta);
            assert!(r.dim_m <= 2 * 12 + 3);
        }
    }

    #[test]
    fn maximality_holds() {
        for g in 10..=60 {
            let v = generic_maximality_violations(g).unwrap();
            assert!(v.is_empty(), "g = {g}: {v:#?}");
        }
    }
}
