use super::form::{BidegreeForm, U_DEGREE};
use super::plan::{NodePlan, QuadricPoint};
use crate::error::{Error, Result};
use crate::ff::{resultant, uni_factor, ExtField, Field, PrimeField, UniPoly};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeEntry {
    pub point: QuadricPoint,
    pub value: u64,
    pub grad: [u64; 2],
    /// `f_uu f_vv - f_uv^2`.
    pub hessian: u64,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeCertificate {
    pub entries: Vec<NodeEntry>,
    pub pass: bool,
}

impl NodeCertificate {
    pub fn failed(&self) -> Vec<QuadricPoint> {
        self.entries.iter().filter(|e| !e.ok).map(|e| e.point).collect()
    }
}

/// Checks that each planned point is an ordinary node: `f = f_u = f_v = 0`
/// with nonzero Hessian. The tangents may be conjugate over F_{p^2}.
pub fn verify_nodes(form: &BidegreeForm, plan: &NodePlan) -> NodeCertificate {
    let f = form.field();
    let entries: Vec<NodeEntry> = plan
        .points()
        .into_iter()
        .map(|pt| {
            let d = |i, j| form.eval_partial(i, j, pt.u, pt.v);
            let (value, fu, fv) = (d(0, 0), d(1, 0), d(0, 1));
            let fuv = d(1, 1);
            let hessian = f.sub(&f.mul(&d(2, 0), &d(0, 2)), &f.mul(&fuv, &fuv));
            let ok = value == 0 && fu == 0 && fv == 0 && hessian != 0;
            NodeEntry { point: pt, value, grad: [fu, fv], hessian, ok }
        })
        .collect();
    let pass = entries.iter().all(|e| e.ok);
    NodeCertificate { entries, pass }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularSweep {
    /// Unplanned singular points, described by where they sit.
    pub extra_singular: Vec<String>,
    /// How many planned points the sweep found singular.
    pub planned_found: usize,
    pub resultant_degree: usize,
    pub pass: bool,
}

fn embed_poly(k: &ExtField, p: &UniPoly<PrimeField>) -> UniPoly<ExtField> {
    UniPoly::new(k.clone(), p.coeffs().iter().map(|&c| k.embed(c)).collect())
}

/// `c(alpha)` for `c` over F_p and `alpha` in the extension.
fn eval_in(k: &ExtField, c: &UniPoly<PrimeField>, alpha: &Vec<u64>) -> Vec<u64> {
    c.coeffs().iter().rev().fold(k.zero(), |acc, &x| k.add(&k.mul(&acc, alpha), &k.embed(x)))
}

fn gcd3<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>, c: &UniPoly<F>) -> Result<UniPoly<F>> {
    a.gcd(b)?.gcd(c)
}

fn describe(p: &UniPoly<PrimeField>) -> String {
    let terms: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, c)| match i {
            0 => format!("{c}"),
            1 => format!("{c}*x"),
            _ => format!("{c}*x^{i}"),
        })
        .collect();
    terms.join(" + ")
}

/// Finds every singular point of the curve on `P^1 x P^1` and reports the
/// ones not in the plan.
///
/// Affine part: the `u`-coordinates of singular points are roots of
/// `R(u) = Res_v(f_u, f_v)`. For each irreducible factor `phi` of `R` the
/// common `v`-roots above a root of `phi` are `gcd(f, f_u, f_v)` computed over
/// `F_p[x]/(phi)`. The three lines at infinity are checked directly with the
/// corresponding leading coefficients.
pub fn singular_locus_complete(form: &BidegreeForm, plan: &NodePlan, seed: u64) -> Result<SingularSweep> {
    let field = form.field();
    let lambda = form.lambda();
    let fv_poly = form.as_poly_in_v();
    let du = fv_poly.diff_u();
    let dv = fv_poly.diff_v();
    if du.is_zero() || dv.is_zero() {
        return Err(Error::Resample("form constant in one variable".into()));
    }
    let r = resultant(&du, &dv)?;
    if r.is_zero() {
        return Err(Error::Resample("Res_v(f_u, f_v) vanishes identically".into()));
    }
    let mut extra = Vec::new();
    let mut planned_found = 0;
    let fact = uni_factor(&r, seed)?;
    for (phi, _) in &fact.factors {
        let k = ExtField::from_modulus(phi)?;
        let alpha = k.generator();
        let over_ext = |bp: &crate::ff::BiPoly<PrimeField>| {
            UniPoly::new(k.clone(), bp.coeffs().iter().map(|c| eval_in(&k, c, &alpha)).collect())
        };
        let mut h = gcd3(&over_ext(&fv_poly), &over_ext(&du), &over_ext(&dv))?;
        if h.is_zero() {
            return Err(Error::Resample(format!("whole fibre singular over u-root of {}", describe(phi))));
        }
        if phi.degree() == Some(1) {
            let u0 = k.generator()[0];
            for pt in plan.points().iter().filter(|q| q.u == u0) {
                let lin = embed_poly(&k, &UniPoly::new(field, vec![field.neg(&pt.v), 1]));
                let mut hit = false;
                while lin.divides(&h)? {
                    h = h.exact_div(&lin)?;
                    hit = true;
                }
                planned_found += usize::from(hit);
            }
        }
        if !h.is_constant() {
            extra.push(format!(
                "affine: u-root of {} (degree {}), {} v-value(s)",
                describe(phi),
                phi.deg0(),
                h.deg0()
            ));
        }
    }

    // u = infinity, v finite: gcd(c_4, c_4', c_3) with c_i the coefficient of u^i
    let rows = form.as_poly_in_u();
    let c4 = rows.coeff(U_DEGREE);
    let c3 = rows.coeff(U_DEGREE - 1);
    let g_u = gcd3(&c4, &c4.derivative(), &c3)?;
    if g_u.is_zero() || !g_u.is_constant() {
        extra.push(format!("u = infinity: gcd of degree {}", g_u.degree().map_or("inf".into(), |d| d.to_string())));
    }
    // v = infinity, u finite
    let dl = fv_poly.coeff(lambda);
    let dl1 = fv_poly.coeff(lambda - 1);
    let g_v = gcd3(&dl, &dl.derivative(), &dl1)?;
    if g_v.is_zero() || !g_v.is_constant() {
        extra.push(format!("v = infinity: gcd of degree {}", g_v.degree().map_or("inf".into(), |d| d.to_string())));
    }
    // the corner
    let a = form.coeffs();
    if a[U_DEGREE][lambda] == 0 && a[U_DEGREE - 1][lambda] == 0 && a[U_DEGREE][lambda - 1] == 0 {
        extra.push("corner (infinity, infinity)".into());
    }

    let pass = extra.is_empty() && planned_found == plan.delta();
    Ok(SingularSweep { extra_singular: extra, planned_found, resultant_degree: r.deg0(), pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nodecurve::{build_node_plan, keylemma_rank_check, sample_curve};
    use crate::rng::rng_for;
    use rand::Rng;

    fn flagship() -> (BidegreeForm, NodePlan) {
        let plan = build_node_plan(12, 6, 2, 3, 10007, 1).unwrap();
        let rc = keylemma_rank_check(&plan).unwrap();
        let form = sample_curve(PrimeField::new(10007).unwrap(), 6, &rc.kernel, 7).unwrap();
        (form, plan)
    }

    #[test]
    fn sampled_curve_has_exactly_the_planned_nodes() {
        let (form, plan) = flagship();
        let cert = verify_nodes(&form, &plan);
        assert!(cert.pass, "{cert:?}");
        let sweep = singular_locus_complete(&form, &plan, 3).unwrap();
        assert!(sweep.pass, "{sweep:?}");
        assert_eq!(sweep.planned_found, 3);
    }

    #[test]
    fn sweep_finds_unplanned_nodes() {
        // hide one planned node from the sweep
        let (form, plan) = flagship();
        let mut partial = plan.clone();
        partial.pts_n.clear();
        let sweep = singular_locus_complete(&form, &partial, 3).unwrap();
        assert!(!sweep.pass);
        assert_eq!(sweep.extra_singular.len(), 1);
    }

    #[test]
    fn empty_plan_smooth_curve() {
        let field = PrimeField::new(10007).unwrap();
        let mut rng = rng_for(5, &[]);
        let coeffs: Vec<Vec<u64>> = (0..5).map(|_| (0..6).map(|_| rng.gen_range(0..10007)).collect()).collect();
        let form = BidegreeForm::new(field, 5, coeffs).unwrap();
        let plan = NodePlan::from_nodes(10007, 5, 0, 1, &[]);
        let cert = verify_nodes(&form, &plan);
        assert!(cert.pass && cert.entries.is_empty());
        let sweep = singular_locus_complete(&form, &plan, 1).unwrap();
        assert!(sweep.pass, "{sweep:?}");
    }

    #[test]
    fn tacnode_fixture_fails_hessian() {
        // (v - v0)^2 * h(u, v), h of bidegree (4, lambda - 2)
        let field = PrimeField::new(10007).unwrap();
        let lambda = 6;
        let v0 = 42;
        let mut rng = rng_for(11, &[]);
        let h: Vec<Vec<u64>> = (0..5).map(|_| (0..lambda - 1).map(|_| rng.gen_range(0..10007)).collect()).collect();
        let sq = [field.mul(&v0, &v0), field.neg(&field.mul(&2, &v0)), 1];
        let mut c = vec![vec![0u64; lambda + 1]; 5];
        for i in 0..5 {
            for (j, &hj) in h[i].iter().enumerate() {
                for (k, &s) in sq.iter().enumerate() {
                    c[i][j + k] = field.add(&c[i][j + k], &field.mul(&hj, &s));
                }
            }
        }
        let form = BidegreeForm::new(field, lambda, c).unwrap();
        let plan = NodePlan::from_nodes(10007, lambda, 3, 4, &[QuadricPoint { u: 3, v: v0 }]);
        let cert = verify_nodes(&form, &plan);
        assert!(!cert.pass);
        assert_eq!(cert.failed(), vec![QuadricPoint { u: 3, v: v0 }]);
        assert_eq!(cert.entries[0].hessian, 0);
        assert_eq!(cert.entries[0].value, 0);
        assert!(matches!(singular_locus_complete(&form, &plan, 1), Err(Error::Resample(_))));
    }

    #[test]
    fn square_form_asks_for_resample() {
        let field = PrimeField::new(10007).unwrap();
        let mut rng = rng_for(12, &[]);
        // q of bidegree (2, 3), f = q^2 of bidegree (4, 6)
        let q: Vec<Vec<u64>> = (0..3).map(|_| (0..4).map(|_| rng.gen_range(1..10007)).collect()).collect();
        let mut c = vec![vec![0u64; 7]; 5];
        for i in 0..3 {
            for j in 0..4 {
                for k in 0..3 {
                    for l in 0..4 {
                        c[i + k][j + l] = field.add(&c[i + k][j + l], &field.mul(&q[i][j], &q[k][l]));
                    }
                }
            }
        }
        let form = BidegreeForm::new(field, 6, c).unwrap();
        let plan = NodePlan::from_nodes(10007, 6, 0, 1, &[]);
        assert!(matches!(singular_locus_complete(&form, &plan, 1), Err(Error::Resample(_))));
    }

    #[test]
    fn singular_point_at_infinity_detected() {
        // a form with no u^4 and no u^3 terms is singular along u = infinity
        let field = PrimeField::new(10007).unwrap();
        let mut rng = rng_for(13, &[]);
        let mut c: Vec<Vec<u64>> = (0..5).map(|_| (0..6).map(|_| rng.gen_range(1..10007)).collect()).collect();
        c[4] = vec![0; 6];
        c[4][0] = 1;
        c[4][1] = field.neg(&2); // c_4 = (v-1)^2
        c[4][2] = 1;
        c[3] = vec![0; 6];
        c[3][1] = 1;
        c[3][0] = field.neg(&1); // c_3 = v - 1
        let form = BidegreeForm::new(field, 5, c).unwrap();
        let plan = NodePlan::from_nodes(10007, 5, 0, 1, &[]);
        let sweep = singular_locus_complete(&form, &plan, 1).unwrap();
        assert!(sweep.extra_singular.iter().any(|s| s.starts_with("u = infinity")), "{sweep:?}");
    }
}
