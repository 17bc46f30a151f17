use super::form::{monomial_index, BidegreeForm, U_DEGREE};
use super::plan::{build_node_plan, NodePlan};
use crate::error::{Error, Result};
use crate::ff::{Field, MatrixFp, PrimeField};
use crate::rng::{derive_seed, rng_for};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Rows `f`, `f_u`, `f_v` at each plan point against the monomials `u^i v^j`.
pub fn node_condition_matrix(plan: &NodePlan) -> Result<MatrixFp> {
    let field = PrimeField::new(plan.p)?;
    let lambda = plan.lambda;
    let cols = (U_DEGREE + 1) * (lambda + 1);
    let pts = plan.points();
    let mut m = MatrixFp::zeros(field, 3 * pts.len(), cols);
    for (k, pt) in pts.iter().enumerate() {
        let upow: Vec<u64> = (0..=U_DEGREE).map(|i| field.pow(&pt.u, i as u64)).collect();
        let vpow: Vec<u64> = (0..=lambda).map(|j| field.pow(&pt.v, j as u64)).collect();
        for i in 0..=U_DEGREE {
            for j in 0..=lambda {
                let col = monomial_index(lambda, i, j);
                m.set(3 * k, col, field.mul(&upow[i], &vpow[j]));
                if i > 0 {
                    let du = field.mul(&field.from_i64(i as i64), &field.mul(&upow[i - 1], &vpow[j]));
                    m.set(3 * k + 1, col, du);
                }
                if j > 0 {
                    let dv = field.mul(&field.from_i64(j as i64), &field.mul(&upow[i], &vpow[j - 1]));
                    m.set(3 * k + 2, col, dv);
                }
            }
        }
    }
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCheck {
    pub rank: usize,
    pub expected: usize,
    pub pass: bool,
    pub kernel_dim: usize,
    #[serde(skip)]
    pub kernel: Vec<Vec<u64>>,
}

/// Do the plan's nodes impose `3 delta` independent conditions?
pub fn keylemma_rank_check(plan: &NodePlan) -> Result<RankCheck> {
    let m = node_condition_matrix(plan)?;
    let rk = m.rank_and_kernel();
    let expected = 3 * plan.delta();
    Ok(RankCheck { rank: rk.rank, expected, pass: rk.rank == expected, kernel_dim: rk.kernel.len(), kernel: rk.kernel })
}

/// A random nonzero combination of kernel vectors.
pub fn sample_curve(field: PrimeField, lambda: usize, kernel: &[Vec<u64>], seed: u64) -> Result<BidegreeForm> {
    if kernel.is_empty() {
        return Err(Error::Resample("empty kernel".into()));
    }
    for draw in 0..16u64 {
        let mut rng = rng_for(seed, &[draw]);
        let mut acc = vec![0u64; kernel[0].len()];
        for k in kernel {
            let c = rng.gen_range(0..field.p());
            for (x, y) in acc.iter_mut().zip(k) {
                *x = field.add(x, &field.mul(&c, y));
            }
        }
        if acc.iter().any(|&x| x != 0) {
            return BidegreeForm::from_vector(field, lambda, &acc);
        }
    }
    Err(Error::Resample("kernel combination kept vanishing".into()))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RankExperiment {
    pub trials: usize,
    pub passed: usize,
    pub pass_rate: f64,
    pub expected_rank: usize,
    /// Seeds of the failing trials with their observed rank.
    pub failures: Vec<(u64, usize)>,
}

/// Runs `trials` independent plans and counts full-rank condition matrices.
pub fn rank_experiment(g: i64, lambda: i64, a: i64, b: i64, p: u64, seed: u64, trials: usize) -> Result<RankExperiment> {
    build_node_plan(g, lambda, a, b, p, seed)?;
    let results: Vec<(u64, RankCheck)> = (0..trials as u64)
        .into_par_iter()
        .map(|k| {
            let s = derive_seed(seed, &[k]);
            let plan = build_node_plan(g, lambda, a, b, p, s)?;
            Ok((s, keylemma_rank_check(&plan)?))
        })
        .collect::<Result<_>>()?;
    let expected_rank = results.first().map_or(0, |(_, r)| r.expected);
    let failures: Vec<(u64, usize)> = results.iter().filter(|(_, r)| !r.pass).map(|(s, r)| (*s, r.rank)).collect();
    let passed = trials - failures.len();
    let pass_rate = if trials == 0 { 1.0 } else { passed as f64 / trials as f64 };
    Ok(RankExperiment { trials, passed, pass_rate, expected_rank, failures })
}
