use super::plan::NodePlan;
use crate::error::Result;
use crate::ff::{Field, MatrixFp, PrimeField};
use crate::scroll::ScrollType;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecoveredInvariants {
    /// Scroll type read off the adjoint ranks.
    pub scroll: ScrollType,
    /// `(lambda-2-#M, lambda-2-#N, lambda-2-#Q)` from the plan.
    pub from_plan: (i64, i64, i64),
    /// `h^0(K - k g^1_4)` for `k = 0, 1, ...`.
    pub h0_sequence: Vec<i64>,
    pub consistent: bool,
}

/// Recovers the scroll type of the normalization from its nodes.
///
/// Sections of `K - k g^1_4` are adjoints of bidegree `(2, lambda-2-k)`
/// through the nodes, so `N_k = 3(lambda-1-k) - rank` of the evaluation
/// matrix. On the scroll `N_k = sum_x max(0, x-k+1)` over the parts `x`, so
/// `N_k - N_{k+1}` counts the parts `>= k`.
pub fn recover_scroll_type(plan: &NodePlan) -> Result<RecoveredInvariants> {
    let field = PrimeField::new(plan.p)?;
    let lambda = plan.lambda as i64;
    let pts = plan.points();
    let mut h0 = Vec::new();
    for k in 0..lambda {
        let dv = lambda - 2 - k;
        if dv < 0 {
            h0.push(0);
            continue;
        }
        let cols = 3 * (dv + 1) as usize;
        let rows: Vec<Vec<u64>> = pts
            .iter()
            .map(|pt| {
                let mut r = Vec::with_capacity(cols);
                for i in 0..3u64 {
                    for j in 0..=dv as u64 {
                        r.push(field.mul(&field.pow(&pt.u, i), &field.pow(&pt.v, j)));
                    }
                }
                r
            })
            .collect();
        let rank = if rows.is_empty() { 0 } else { MatrixFp::from_rows(field, rows).rank() };
        h0.push(cols as i64 - rank as i64);
    }
    h0.push(0);
    // at_least[k] = #{parts >= k}
    let at_least: Vec<i64> = h0.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for (k, w) in at_least.windows(2).enumerate() {
        for _ in 0..(w[0] - w[1]).max(0) {
            parts.push(k as i64);
        }
    }
    if let Some(&last) = at_least.last() {
        for _ in 0..last.max(0) {
            parts.push(at_least.len() as i64 - 1);
        }
    }
    parts.sort();
    let scroll = if parts.len() == 3 {
        ScrollType { a: parts[0], b: parts[1], c: parts[2] }
    } else {
        // not a 3-part splitting: the nodes fail to impose independent conditions
        ScrollType { a: -1, b: -1, c: -1 }
    };
    let from_plan = (
        lambda - 2 - plan.pts_m.len() as i64,
        lambda - 2 - plan.pts_n.len() as i64,
        lambda - 2 - plan.pts_q.len() as i64,
    );
    let mut sorted = [from_plan.0, from_plan.1, from_plan.2];
    sorted.sort();
    let consistent = parts.len() == 3 && sorted == [scroll.a, scroll.b, scroll.c];
    h0.pop();
    Ok(RecoveredInvariants { scroll, from_plan, h0_sequence: h0, consistent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nodecurve::build_node_plan;

    #[test]
    fn flagship_scroll_type() {
        let plan = build_node_plan(12, 6, 2, 3, 10007, 1).unwrap();
        let r = recover_scroll_type(&plan).unwrap();
        assert_eq!(r.scroll, ScrollType { a: 2, b: 3, c: 4 });
        assert_eq!(r.h0_sequence[0], 12);
        assert!(r.consistent);
    }

    #[test]
    fn other_fixtures() {
        for (g, l, a, b) in [(10, 5, 1, 3), (10, 5, 2, 2), (12, 6, 3, 3), (12, 6, 1, 4), (13, 6, 3, 3), (14, 6, 3, 4)] {
            let plan = build_node_plan(g, l, a, b, 10007, 2).unwrap();
            let r = recover_scroll_type(&plan).unwrap();
            assert_eq!((r.scroll.a, r.scroll.b, r.scroll.c), (a, b, g - 3 - a - b), "({g},{l},{a},{b})");
            assert_eq!(r.h0_sequence[0], g);
        }
    }
}
