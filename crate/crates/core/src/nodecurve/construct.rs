use super::conditions::{keylemma_rank_check, sample_curve};
use super::form::BidegreeForm;
use super::irreducible::{irreducibility_certificate, IrreducibilityCertificate, IrreducibilityTag};
use super::plan::{build_node_plan_with, check_preconditions, NodePlan, PlanOptions};
use super::recover::{recover_scroll_type, RecoveredInvariants};
use super::singular::{singular_locus_complete, verify_nodes, NodeCertificate, SingularSweep};
use crate::error::{Error, Result};
use crate::rng::derive_seed;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructOptions {
    /// Fresh samples per plan.
    pub max_retries: usize,
    /// Fresh plans before giving up.
    pub max_plans: usize,
    pub plan: PlanOptions,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        ConstructOptions { max_retries: 32, max_plans: 8, plan: PlanOptions::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructedCurve {
    pub g: i64,
    pub a: i64,
    pub b: i64,
    pub form: BidegreeForm,
    pub plan: NodePlan,
    pub rank_observed: usize,
    pub kernel_dim: usize,
    pub node_certificate: NodeCertificate,
    pub sweep: SingularSweep,
    pub irreducibility: IrreducibilityCertificate,
    pub genus: i64,
    pub recovered: RecoveredInvariants,
    pub seed: u64,
    pub p: u64,
    /// Samples drawn in total, including the successful one.
    pub attempts: usize,
}

impl ConstructedCurve {
    pub fn recovered_a(&self) -> i64 {
        self.recovered.scroll.a
    }

    pub fn recovered_b(&self) -> i64 {
        self.recovered.scroll.b
    }
}

/// Builds and certifies a curve of genus `g` with invariants `lambda, a, b`.
pub fn construct(g: i64, lambda: i64, a: i64, b: i64, p: u64, seed: u64, opts: ConstructOptions) -> Result<ConstructedCurve> {
    let (field, c) = check_preconditions(g, lambda, a, b, p)?;
    let delta = crate::invariants::delta(g, lambda, 0);
    let mut trace = Vec::new();
    let mut attempts = 0;
    for plan_idx in 0..opts.max_plans as u64 {
        let plan = build_node_plan_with(g, lambda, a, b, p, derive_seed(seed, &[plan_idx]), opts.plan)?;
        let rank = keylemma_rank_check(&plan)?;
        if !rank.pass {
            trace.push(format!("plan {plan_idx}: rank {} < {}", rank.rank, rank.expected));
            continue;
        }
        assert_eq!(rank.kernel_dim as i64, 5 * lambda + 5 - 3 * delta);
        let recovered = recover_scroll_type(&plan)?;
        if !recovered.consistent || (recovered.scroll.a, recovered.scroll.b, recovered.scroll.c) != (a, b, c) {
            trace.push(format!("plan {plan_idx}: adjoint ranks give {:?}", recovered.scroll));
            continue;
        }
        for sample_idx in 0..opts.max_retries as u64 {
            attempts += 1;
            let s = derive_seed(seed, &[plan_idx, sample_idx]);
            let tag = format!("plan {plan_idx} sample {sample_idx}");
            let form = match sample_curve(field, lambda as usize, &rank.kernel, s) {
                Ok(f) => f,
                Err(e) => {
                    trace.push(format!("{tag}: {e}"));
                    continue;
                }
            };
            let nodes = verify_nodes(&form, &plan);
            if !nodes.pass {
                trace.push(format!("{tag}: degenerate node at {:?}", nodes.failed()));
                continue;
            }
            let sweep = match singular_locus_complete(&form, &plan, s) {
                Ok(sw) if sw.pass => sw,
                Ok(sw) => {
                    trace.push(format!("{tag}: extra singularities {:?}", sw.extra_singular));
                    continue;
                }
                Err(Error::Resample(msg)) => {
                    trace.push(format!("{tag}: {msg}"));
                    continue;
                }
                Err(e) => return Err(e),
            };
            let irr = irreducibility_certificate(&form, s);
            if !matches!(irr.tag, IrreducibilityTag::Certified | IrreducibilityTag::CertifiedByFallback) {
                trace.push(format!("{tag}: irreducibility {:?}: {}", irr.tag, irr.detail));
                continue;
            }
            let genus = 3 * (lambda - 1) - delta;
            debug_assert_eq!(genus, g);
            return Ok(ConstructedCurve {
                g,
                a,
                b,
                form,
                plan,
                rank_observed: rank.rank,
                kernel_dim: rank.kernel_dim,
                node_certificate: nodes,
                sweep,
                irreducibility: irr,
                genus,
                recovered,
                seed,
                p,
                attempts,
            });
        }
    }
    Err(Error::ConstructionFailed { attempts, trace })
}
