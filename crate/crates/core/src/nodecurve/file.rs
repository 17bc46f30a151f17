use super::construct::ConstructedCurve;
use super::form::BidegreeForm;
use super::irreducible::{irreducibility_certificate, IrreducibilityCertificate, IrreducibilityTag};
use super::plan::{check_preconditions, NodePlan, QuadricPoint};
use super::recover::recover_scroll_type;
use super::singular::{singular_locus_complete, verify_nodes, SingularSweep};
use crate::error::{Error, Result};
use crate::ff::PrimeField;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

/// The serialized curve. Field order here is the order on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveFile {
    pub schema_version: String,
    pub p: u64,
    pub lambda: usize,
    pub g: i64,
    pub a: i64,
    pub b: i64,
    /// `coeffs[i][j]` is the coefficient of `u^i v^j`, as a decimal string.
    pub coeffs: Vec<Vec<String>>,
    pub nodes: Vec<[String; 2]>,
    pub seed: u64,
    pub certificates: CurveCertificates,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveCertificates {
    pub m_line: String,
    pub n_line: String,
    pub rank: usize,
    pub kernel_dim: usize,
    pub singular_sweep: SingularSweep,
    pub irreducibility: IrreducibilityCertificate,
    pub genus: i64,
    pub recovered_scroll: [i64; 3],
    pub attempts: usize,
}

fn parse_elem(s: &str, p: u64) -> Result<u64> {
    let x: u64 = s.trim().parse().map_err(|_| Error::Format(format!("not a decimal integer: {s:?}")))?;
    if x >= p {
        return Err(Error::Format(format!("{x} is not reduced mod {p}")));
    }
    Ok(x)
}

impl CurveFile {
    pub fn from_curve(c: &ConstructedCurve) -> Self {
        let s = c.recovered.scroll;
        CurveFile {
            schema_version: SCHEMA_VERSION.into(),
            p: c.p,
            lambda: c.form.lambda(),
            g: c.g,
            a: c.a,
            b: c.b,
            coeffs: c.form.coeffs().iter().map(|r| r.iter().map(u64::to_string).collect()).collect(),
            nodes: c.plan.points().iter().map(|q| [q.u.to_string(), q.v.to_string()]).collect(),
            seed: c.seed,
            certificates: CurveCertificates {
                m_line: c.plan.m_line.to_string(),
                n_line: c.plan.n_line.to_string(),
                rank: c.rank_observed,
                kernel_dim: c.kernel_dim,
                singular_sweep: c.sweep.clone(),
                irreducibility: c.irreducibility.clone(),
                genus: c.genus,
                recovered_scroll: [s.a, s.b, s.c],
                attempts: c.attempts,
            },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn form(&self) -> Result<BidegreeForm> {
        let field = PrimeField::new(self.p)?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|r| r.iter().map(|s| parse_elem(s, self.p)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        BidegreeForm::new(field, self.lambda, coeffs)
    }

    pub fn plan(&self) -> Result<NodePlan> {
        let nodes = self
            .nodes
            .iter()
            .map(|[u, v]| Ok(QuadricPoint { u: parse_elem(u, self.p)?, v: parse_elem(v, self.p)? }))
            .collect::<Result<Vec<_>>>()?;
        let m = parse_elem(&self.certificates.m_line, self.p)?;
        let n = parse_elem(&self.certificates.n_line, self.p)?;
        Ok(NodePlan::from_nodes(self.p, self.lambda, m, n, &nodes))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<VerifyCheck>,
    pub pass: bool,
}

impl VerifyReport {
    pub fn failed(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect()
    }
}

/// Re-certifies a loaded curve from scratch.
pub fn verify_curve_file(file: &CurveFile) -> Result<VerifyReport> {
    let mut checks = Vec::new();
    let mut push = |name: &str, pass: bool, detail: String| {
        checks.push(VerifyCheck { name: name.into(), pass, detail });
    };
    push("schema", file.schema_version == SCHEMA_VERSION, format!("version {}", file.schema_version));
    let lambda = file.lambda as i64;
    let (_, c) = check_preconditions(file.g, lambda, file.a, file.b, file.p)?;
    let form = file.form()?;
    let plan = file.plan()?;
    let delta = crate::invariants::delta(file.g, lambda, 0);

    let violations = plan.violations(false);
    let counts = (plan.pts_m.len() as i64, plan.pts_n.len() as i64, plan.pts_q.len() as i64);
    let want = (lambda - 2 - file.a, lambda - 2 - file.b, lambda - 2 - c);
    push(
        "plan",
        violations.is_empty() && counts == want,
        format!("node counts {counts:?}, expected {want:?}; {}", violations.join("; ")),
    );

    let nodes = verify_nodes(&form, &plan);
    push(
        "nodes",
        nodes.pass && plan.delta() as i64 == delta,
        format!("{} of {} ordinary nodes, failed at {:?}", nodes.entries.iter().filter(|e| e.ok).count(), delta, nodes.failed()),
    );

    match singular_locus_complete(&form, &plan, file.seed) {
        Ok(sw) => push(
            "singular-locus",
            sw.pass,
            format!("found {} planned, extra {:?}", sw.planned_found, sw.extra_singular),
        ),
        Err(e) => push("singular-locus", false, e.to_string()),
    }

    let irr = irreducibility_certificate(&form, file.seed);
    push(
        "irreducibility",
        matches!(irr.tag, IrreducibilityTag::Certified | IrreducibilityTag::CertifiedByFallback),
        format!("{:?}: {}", irr.tag, irr.detail),
    );

    let genus = 3 * (lambda - 1) - plan.delta() as i64;
    push("genus", genus == file.g, format!("3(lambda-1) - delta = {genus}"));

    let rec = recover_scroll_type(&plan)?;
    let s = rec.scroll;
    push(
        "invariants",
        rec.consistent && (s.a, s.b, s.c) == (file.a, file.b, c),
        format!("recovered ({}, {}, {})", s.a, s.b, s.c),
    );

    let pass = checks.iter().all(|c| c.pass);
    Ok(VerifyReport { checks, pass })
}
