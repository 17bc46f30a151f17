use super::form::{BidegreeForm, U_DEGREE};
use crate::ff::{is_irreducible, resultant, roots, Field, MatrixFp, UniPoly};
use crate::rng::rng_for;
use rand::Rng;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IrreducibilityTag {
    Certified,
    CertifiedByFallback,
    Reducible,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibilityCertificate {
    pub tag: IrreducibilityTag,
    /// `v0` with `f(u, v0)` an irreducible quartic over F_p.
    pub specialization: Option<u64>,
    /// A smooth F_p-rational point.
    pub smooth_point: Option<(u64, u64)>,
    /// Dimension of the derivation system: the number of absolutely
    /// irreducible factors.
    pub fallback_dim: Option<usize>,
    pub detail: String,
}

const SPECIALIZATION_BUDGET: u64 = 64;
const SMOOTH_POINT_BUDGET: u64 = 256;

fn content(parts: impl Iterator<Item = UniPoly<crate::ff::PrimeField>>) -> UniPoly<crate::ff::PrimeField> {
    parts.fold(None, |acc: Option<UniPoly<_>>, p| {
        Some(match acc {
            None => p.monic(),
            Some(a) => a.gcd(&p).expect("single field"),
        })
    })
    .expect("at least one part")
}

/// A sufficient certificate of absolute irreducibility.
///
/// 1. Content: no factor depends on only one of `u`, `v`, and the bidegree is
///    exactly `(4, lambda)` (no line at infinity splits off).
/// 2. A specialization `f(u, v0)` that is an irreducible quartic rules out any
///    split into two factors of positive `u`-degree, so `f` is irreducible
///    over F_p. A smooth F_p-point then rules out a split into conjugate
///    components over an extension, whose rational points would all be
///    singular.
/// 3. Otherwise, count the absolutely irreducible factors as the solution
///    dimension of `f g_v - g f_v = f h_u - h f_u` with
///    `deg g <= (3, lambda)` and `deg h <= (4, lambda - 1)`. Valid when
///    `f` and `f_u` are coprime and `p > 7 lambda`.
pub fn irreducibility_certificate(form: &BidegreeForm, seed: u64) -> IrreducibilityCertificate {
    let field = form.field();
    let lambda = form.lambda();
    let mut cert = IrreducibilityCertificate {
        tag: IrreducibilityTag::Inconclusive,
        specialization: None,
        smooth_point: None,
        fallback_dim: None,
        detail: String::new(),
    };
    if form.deg_u() != U_DEGREE || form.deg_v() != lambda {
        cert.tag = IrreducibilityTag::Reducible;
        cert.detail = format!("bidegree ({}, {}) below (4, {lambda})", form.deg_u(), form.deg_v());
        return cert;
    }
    let in_u = form.as_poly_in_u();
    let in_v = form.as_poly_in_v();
    let cv = content(in_u.coeffs().iter().cloned());
    let cu = content(in_v.coeffs().iter().cloned());
    if !cv.is_constant() || !cu.is_constant() {
        cert.tag = IrreducibilityTag::Reducible;
        cert.detail = format!("content of degree {} in v, {} in u", cv.deg0(), cu.deg0());
        return cert;
    }

    let mut rng = rng_for(seed, &[0]);
    for _ in 0..SPECIALIZATION_BUDGET {
        let v0 = rng.gen_range(0..field.p());
        let q = form.at_v(v0);
        if q.degree() == Some(U_DEGREE) && is_irreducible(&q).unwrap_or(false) {
            cert.specialization = Some(v0);
            break;
        }
    }
    if cert.specialization.is_some() {
        let mut rng = rng_for(seed, &[1]);
        for k in 0..SMOOTH_POINT_BUDGET {
            let u0 = rng.gen_range(0..field.p());
            let line = form.at_u(u0);
            if line.is_zero() {
                continue;
            }
            let found = roots(&line, seed ^ k).unwrap_or_default().into_iter().find(|&v0| {
                form.eval_partial(1, 0, u0, v0) != 0 || form.eval_partial(0, 1, u0, v0) != 0
            });
            if let Some(v0) = found {
                cert.smooth_point = Some((u0, v0));
                cert.tag = IrreducibilityTag::Certified;
                cert.detail = "irreducible specialization and smooth rational point".into();
                return cert;
            }
        }
    }

    // fallback: derivation system
    if field.p() <= 7 * lambda as u64 {
        cert.detail = format!("fallback needs p > {}", 7 * lambda);
        return cert;
    }
    let du = in_u.diff_v(); // in_u is a polynomial in u over F_p[v]: this is f_u
    match resultant(&in_u, &du) {
        Ok(r) if !r.is_zero() => {}
        _ => {
            cert.detail = "f and f_u share a factor; fallback does not apply".into();
            return cert;
        }
    }
    let dim = derivation_system_dim(form);
    cert.fallback_dim = Some(dim);
    match dim {
        1 => {
            cert.tag = IrreducibilityTag::CertifiedByFallback;
            cert.detail = "one absolutely irreducible factor".into();
        }
        0 => cert.detail = "derivation system has no solution".into(),
        n => {
            cert.tag = IrreducibilityTag::Reducible;
            cert.detail = format!("{n} absolutely irreducible factors");
        }
    }
    cert
}

/// Solution dimension of `f g_v - g f_v - f h_u + h f_u = 0`.
fn derivation_system_dim(form: &BidegreeForm) -> usize {
    let field = form.field();
    let lambda = form.lambda();
    let a = form.coeffs();
    let rows_u = U_DEGREE + U_DEGREE; // result u-degree <= 7
    let rows_v = 2 * lambda; // result v-degree <= 2 lambda - 1
    let row = |i: usize, j: usize| i * rows_v + j;
    let g_cols = U_DEGREE * (lambda + 1);
    let h_cols = (U_DEGREE + 1) * lambda;
    let mut m = MatrixFp::zeros(field, rows_u * rows_v, g_cols + h_cols);
    let add = |m: &mut MatrixFp, r: usize, c: usize, x: u64| {
        let cur = m.get(r, c);
        m.set(r, c, field.add(&cur, &x));
    };
    let fi = |n: usize| field.from_i64(n as i64);
    // unknown g_{kl} u^k v^l, k <= 3, l <= lambda
    for k in 0..U_DEGREE {
        for l in 0..=lambda {
            let col = k * (lambda + 1) + l;
            for i in 0..=U_DEGREE {
                for j in 0..=lambda {
                    let c = a[i][j];
                    if c == 0 {
                        continue;
                    }
                    // f g_v: a_ij * l * u^{i+k} v^{j+l-1}
                    if l > 0 {
                        add(&mut m, row(i + k, j + l - 1), col, field.mul(&c, &fi(l)));
                    }
                    // - g f_v: -a_ij * j * u^{i+k} v^{j-1+l}
                    if j > 0 {
                        add(&mut m, row(i + k, j + l - 1), col, field.neg(&field.mul(&c, &fi(j))));
                    }
                }
            }
        }
    }
    // unknown h_{kl} u^k v^l, k <= 4, l <= lambda - 1
    for k in 0..=U_DEGREE {
        for l in 0..lambda {
            let col = g_cols + k * lambda + l;
            for i in 0..=U_DEGREE {
                for j in 0..=lambda {
                    let c = a[i][j];
                    if c == 0 {
                        continue;
                    }
                    // - f h_u: -a_ij * k * u^{i+k-1} v^{j+l}
                    if k > 0 {
                        add(&mut m, row(i + k - 1, j + l), col, field.neg(&field.mul(&c, &fi(k))));
                    }
                    // + h f_u: a_ij * i * u^{i-1+k} v^{j+l}
                    if i > 0 {
                        add(&mut m, row(i + k - 1, j + l), col, field.mul(&c, &fi(i)));
                    }
                }
            }
        }
    }
    m.rank_and_kernel().kernel.len()
}
