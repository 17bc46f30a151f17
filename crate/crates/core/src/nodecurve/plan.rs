use crate::error::{Error, Result};
use crate::ff::PrimeField;
use crate::invariants::check_admissible_t0;
use crate::strata::reasons_text;
use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuadricPoint {
    pub u: u64,
    pub v: u64,
}

/// Where the `delta` nodes go: `lambda-2-a` on the line `u = m_line`,
/// `lambda-2-b` on `u = n_line`, and one on each fibre `v = q` for
/// `q in q_fibers`, off both lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodePlan {
    pub p: u64,
    pub lambda: usize,
    pub m_line: u64,
    pub n_line: u64,
    pub q_fibers: Vec<u64>,
    pub pts_m: Vec<QuadricPoint>,
    pub pts_n: Vec<QuadricPoint>,
    pub pts_q: Vec<QuadricPoint>,
}

impl NodePlan {
    pub fn points(&self) -> Vec<QuadricPoint> {
        self.pts_m.iter().chain(&self.pts_n).chain(&self.pts_q).copied().collect()
    }

    pub fn delta(&self) -> usize {
        self.pts_m.len() + self.pts_n.len() + self.pts_q.len()
    }

    /// Rebuilds a plan from a node list and the two lines; nodes off both
    /// lines are `Q`-nodes.
    pub fn from_nodes(p: u64, lambda: usize, m_line: u64, n_line: u64, nodes: &[QuadricPoint]) -> Self {
        let pts_m: Vec<_> = nodes.iter().filter(|q| q.u == m_line).copied().collect();
        let pts_n: Vec<_> = nodes.iter().filter(|q| q.u == n_line && q.u != m_line).copied().collect();
        let pts_q: Vec<_> = nodes.iter().filter(|q| q.u != m_line && q.u != n_line).copied().collect();
        let q_fibers = pts_q.iter().map(|q| q.v).collect();
        NodePlan { p, lambda, m_line, n_line, q_fibers, pts_m, pts_n, pts_q }
    }

    /// Violated structural conditions: distinct points, distinct fibres
    /// (unless `relaxed`), `Q`-nodes off `M` and `N`, and no line carrying
    /// more than `lambda/2` nodes.
    pub fn violations(&self, relaxed: bool) -> Vec<String> {
        let mut out = Vec::new();
        let pts = self.points();
        let mut sorted = pts.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != pts.len() {
            out.push("repeated point".into());
        }
        let mut vs: Vec<u64> = pts.iter().map(|q| q.v).collect();
        vs.sort();
        let max_share = vs.chunk_by(|x, y| x == y).map(<[u64]>::len).max().unwrap_or(0);
        if max_share > if relaxed { 2 } else { 1 } {
            out.push(format!("{max_share} nodes share a fibre"));
        }
        if self.m_line == self.n_line {
            out.push("M and N coincide".into());
        }
        if self.pts_m.iter().any(|q| q.u != self.m_line) || self.pts_n.iter().any(|q| q.u != self.n_line) {
            out.push("node off its line".into());
        }
        if self.pts_q.iter().any(|q| q.u == self.m_line || q.u == self.n_line) {
            out.push("Q-node on M or N".into());
        }
        for (name, k) in [("M", self.pts_m.len()), ("N", self.pts_n.len())] {
            if 2 * k > self.lambda {
                out.push(format!("{k} nodes on {name} trivially degenerate it"));
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanOptions {
    /// Experimental: let the first node of `N` share a fibre with the first
    /// node of `M`. At most two nodes then lie on a common fibre.
    pub relaxed_fibres: bool,
}

pub(crate) fn check_preconditions(g: i64, lambda: i64, a: i64, b: i64, p: u64) -> Result<(PrimeField, i64)> {
    let tup = check_admissible_t0(g, lambda, a, b)?;
    if !tup.admissible {
        return Err(Error::domain(format!(
            "(g, lambda, a, b) = ({g}, {lambda}, {a}, {b}) is not admissible: {}",
            reasons_text(&tup)
        )));
    }
    let field = PrimeField::new(p)?;
    let need = (4 * tup.delta + 4 * lambda).max(2 * (4 + lambda) * 4);
    if (p as i128) <= need as i128 {
        return Err(Error::domain(format!("p = {p} too small, need p > {need}")));
    }
    Ok((field, tup.c))
}

pub fn build_node_plan(g: i64, lambda: i64, a: i64, b: i64, p: u64, seed: u64) -> Result<NodePlan> {
    build_node_plan_with(g, lambda, a, b, p, seed, PlanOptions::default())
}

pub fn build_node_plan_with(
    g: i64,
    lambda: i64,
    a: i64,
    b: i64,
    p: u64,
    seed: u64,
    opts: PlanOptions,
) -> Result<NodePlan> {
    let (field, c) = check_preconditions(g, lambda, a, b, p)?;
    let (nm, nn, nq) = ((lambda - 2 - a) as usize, (lambda - 2 - b) as usize, (lambda - 2 - c) as usize);
    let delta = nm + nn + nq;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = field.p();

    // distinct fibres, one per node (one fewer when two share)
    let share = opts.relaxed_fibres && nm > 0 && nn > 0;
    let nv = delta - usize::from(share);
    let vs: Vec<u64> = sample(&mut rng, p as usize, nv).into_iter().map(|x| x as u64).collect();

    let lines = sample(&mut rng, p as usize, 2);
    let (m_line, n_line) = (lines.index(0) as u64, lines.index(1) as u64);

    let mut it = vs.iter().copied();
    let pts_m: Vec<_> = (0..nm).map(|_| QuadricPoint { u: m_line, v: it.next().unwrap() }).collect();
    let pts_n: Vec<_> = (0..nn)
        .map(|k| {
            let v = if share && k == 0 { pts_m[0].v } else { it.next().unwrap() };
            QuadricPoint { u: n_line, v }
        })
        .collect();
    let q_fibers: Vec<u64> = it.by_ref().take(nq).collect();
    let pts_q = q_fibers
        .iter()
        .map(|&v| {
            let u = loop {
                let u = rng.gen_range(0..p);
                if u != m_line && u != n_line {
                    break u;
                }
            };
            QuadricPoint { u, v }
        })
        .collect();
    let plan = NodePlan { p, lambda: lambda as usize, m_line, n_line, q_fibers, pts_m, pts_n, pts_q };
    debug_assert!(plan.violations(opts.relaxed_fibres).is_empty());
    Ok(plan)
}
