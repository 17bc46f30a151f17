//! The rank claim on F_t, `t >= 1`.
//!
//! Sections of `O(4C0 + (lambda+t)f)` are `sum_{i<=4} c_i(u) v^i` with
//! `deg c_i <= lambda + t - i t`. The negative section `C0` is `v = infinity`;
//! in the chart `w = 1/v` a section reads `sum c_i(u) w^(4-i)` and the nodes
//! sit at `(u_k, 0)` with distinct `u_k` (distinct fibres).

use super::conditions::RankExperiment;
use crate::error::{Error, Result};
use crate::ff::{Field, MatrixFp, PrimeField};
use crate::invariants::check_admissible_tpos;
use crate::rng::{derive_seed, rng_for};
use rayon::prelude::*;
use crate::strata::reasons_text;
use rand::seq::index::sample;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TposRankCheck {
    pub rank: usize,
    pub expected: usize,
    pub pass: bool,
    pub basis_size: usize,
}

/// Monomials `(j, e)` meaning `u^j w^e`, with `e = 4 - i`.
pub fn tpos_basis(lambda: i64, t: i64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..=4i64 {
        let top = lambda + t - i * t;
        for j in 0..=top.max(-1) {
            out.push((j as usize, (4 - i) as usize));
        }
    }
    out
}

pub fn keylemma_rank_experiment_tpos(g: i64, lambda: i64, t: i64, p: u64, seed: u64) -> Result<TposRankCheck> {
    let tup = check_admissible_tpos(g, lambda, t)?;
    if !tup.admissible {
        return Err(Error::domain(format!("(g, lambda, t) = ({g}, {lambda}, {t}) is not admissible: {}", reasons_text(&tup))));
    }
    let field = PrimeField::new(p)?;
    let delta = tup.delta as usize;
    let basis = tpos_basis(lambda, t);
    debug_assert_eq!(basis.len() as i64, 5 * (lambda - t) + 5);
    if delta == 0 {
        return Ok(TposRankCheck { rank: 0, expected: 0, pass: true, basis_size: basis.len() });
    }
    if (p as usize) <= delta {
        return Err(Error::domain("p too small for distinct fibres"));
    }
    let mut rng = rng_for(seed, &[]);
    let us: Vec<u64> = sample(&mut rng, p as usize, delta).into_iter().map(|x| x as u64).collect();
    let mut m = MatrixFp::zeros(field, 3 * delta, basis.len());
    for (k, &u) in us.iter().enumerate() {
        for (col, &(j, e)) in basis.iter().enumerate() {
            // at w = 0 only e = 0 survives in G, e = 0 in G_u, e = 1 in G_w
            let uj = field.pow(&u, j as u64);
            if e == 0 {
                m.set(3 * k, col, uj);
                if j > 0 {
                    m.set(3 * k + 1, col, field.mul(&field.from_i64(j as i64), &field.pow(&u, j as u64 - 1)));
                }
            }
            if e == 1 {
                m.set(3 * k + 2, col, uj);
            }
        }
    }
    let rank = m.rank();
    Ok(TposRankCheck { rank, expected: 3 * delta, pass: rank == 3 * delta, basis_size: basis.len() })
}

/// `trials` independent placements, seeded `derive_seed(seed, [k])`.
pub fn rank_experiment_tpos(g: i64, lambda: i64, t: i64, p: u64, seed: u64, trials: usize) -> Result<RankExperiment> {
    let first = keylemma_rank_experiment_tpos(g, lambda, t, p, seed)?;
    let results: Vec<(u64, TposRankCheck)> = (0..trials as u64)
        .into_par_iter()
        .map(|k| {
            let s = derive_seed(seed, &[k]);
            Ok((s, keylemma_rank_experiment_tpos(g, lambda, t, p, s)?))
        })
        .collect::<Result<_>>()?;
    let failures: Vec<(u64, usize)> = results.iter().filter(|(_, r)| !r.pass).map(|(s, r)| (*s, r.rank)).collect();
    let passed = trials - failures.len();
    let pass_rate = if trials == 0 { 1.0 } else { passed as f64 / trials as f64 };
    Ok(RankExperiment { trials, passed, pass_rate, expected_rank: first.expected, failures })
}
