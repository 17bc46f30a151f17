use super::{BiPoly, Field, UniPoly};
use crate::error::{Error, Result};

/// Resultant of two univariate polynomials over a field by the Euclidean
/// recurrence `Res(a, b) = (-1)^(mn) lc(b)^(m - deg r) Res(b, a mod b)`.
pub fn uni_resultant<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>) -> Result<F::Elem> {
    if a.field() != b.field() {
        return Err(Error::usage("resultant of polynomials over different fields"));
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::usage("resultant with a zero polynomial"));
    }
    let field = a.field().clone();
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut acc = field.one();
    loop {
        let m = a.deg0();
        let n = b.deg0();
        if n == 0 {
            return Ok(field.mul(&acc, &field.pow(&b.lc(), m as u64)));
        }
        let r = a.rem(&b)?;
        if r.is_zero() {
            return Ok(field.zero());
        }
        let k = r.deg0();
        if (m * n) % 2 == 1 {
            acc = field.neg(&acc);
        }
        acc = field.mul(&acc, &field.pow(&b.lc(), (m - k) as u64));
        a = b;
        b = r;
    }
}

/// `Res_v(a, b)` for polynomials in `v` over `F[u]`, via the subresultant
/// pseudo-remainder sequence. The sign follows the Sylvester-matrix convention.
pub fn resultant<F: Field>(a: &BiPoly<F>, b: &BiPoly<F>) -> Result<UniPoly<F>> {
    if a.field() != b.field() {
        return Err(Error::usage("resultant of polynomials over different fields"));
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::usage("resultant with a zero polynomial"));
    }
    let field = a.field().clone();
    let one = UniPoly::one(field.clone());
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut negate = false;
    let deg = |p: &BiPoly<F>| p.degree().expect("nonzero");
    if deg(&a) < deg(&b) {
        std::mem::swap(&mut a, &mut b);
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            negate = true;
        }
    }
    if deg(&b) == 0 {
        let r = b.lc().pow(deg(&a));
        return Ok(if negate { r.neg() } else { r });
    }
    let mut g = one.clone();
    let mut h = one.clone();
    loop {
        let da = deg(&a);
        let db = deg(&b);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.prem(&b)?;
        a = b;
        if r.is_zero() {
            return Ok(UniPoly::zero(field));
        }
        b = r.exact_div_u(&g.mul_unchecked(&h.pow(delta)))?;
        g = a.lc();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).exact_div(&h.pow(delta - 1))?
        };
        if deg(&b) == 0 {
            break;
        }
    }
    let da = deg(&a);
    let res = b.lc().pow(da).exact_div(&h.pow(da - 1))?;
    Ok(if negate { res.neg() } else { res })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::{MatrixFp, PrimeField};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fp() -> PrimeField {
        PrimeField::new(10007).unwrap()
    }

    fn upoly(f: PrimeField, c: &[i64]) -> UniPoly<PrimeField> {
        UniPoly::new(f, c.iter().map(|&x| f.from_i64(x)).collect())
    }

    /// Sylvester-determinant oracle over F_p.
    fn sylvester(a: &UniPoly<PrimeField>, b: &UniPoly<PrimeField>) -> u64 {
        let f = *a.field();
        let (m, n) = (a.deg0(), b.deg0());
        let size = m + n;
        let mut rows = Vec::new();
        for i in 0..n {
            let mut row = vec![0; size];
            for (k, c) in a.coeffs().iter().rev().enumerate() {
                row[i + k] = *c;
            }
            rows.push(row);
        }
        for i in 0..m {
            let mut row = vec![0; size];
            for (k, c) in b.coeffs().iter().rev().enumerate() {
                row[i + k] = *c;
            }
            rows.push(row);
        }
        MatrixFp::from_rows(f, rows).determinant().unwrap()
    }

    fn random_poly(f: PrimeField, deg: usize, rng: &mut ChaCha8Rng) -> UniPoly<PrimeField> {
        let mut c: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..f.p())).collect();
        c.push(rng.gen_range(1..f.p()));
        UniPoly::new(f, c)
    }

    #[test]
    fn euclid_resultant_matches_sylvester() {
        let f = fp();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (m, n) in [(1, 1), (2, 3), (3, 2), (4, 4), (5, 1), (6, 3)] {
            let a = random_poly(f, m, &mut rng);
            let b = random_poly(f, n, &mut rng);
            assert_eq!(uni_resultant(&a, &b).unwrap(), sylvester(&a, &b), "({m},{n})");
        }
    }

    #[test]
    fn coprime_cubics_have_nonzero_resultant() {
        let f = fp();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let a = random_poly(f, 3, &mut rng);
        let b = random_poly(f, 3, &mut rng);
        // brute-force oracle: no common root in F_p
        let common = (0..f.p()).any(|x| a.eval(&x) == 0 && b.eval(&x) == 0);
        assert!(!common);
        assert_ne!(sylvester(&a, &b), 0);
        assert_eq!(a.gcd(&b).unwrap(), UniPoly::one(f));
        assert_ne!(uni_resultant(&a, &b).unwrap(), 0);
    }

    fn bi(f: PrimeField, grid: &[&[i64]]) -> BiPoly<PrimeField> {
        // grid[j] = coefficients in u of v^j
        let coeffs = grid.iter().map(|c| upoly(f, c)).collect();
        BiPoly::new(f, coeffs).unwrap()
    }

    #[test]
    fn linear_pair_gives_minus_u() {
        let f = fp();
        let a = bi(f, &[&[0, -1], &[1]]); // v - u
        let b = bi(f, &[&[0, -2], &[1]]); // v - 2u
        // 2x2 Sylvester determinant: det [[1, -u], [1, -2u]] = -u
        assert_eq!(resultant(&a, &b).unwrap(), upoly(f, &[0, -1]));
    }

    #[test]
    fn identical_inputs_vanish() {
        let f = fp();
        let a = bi(f, &[&[0], &[1]]);
        assert!(resultant(&a, &a).unwrap().is_zero());
        assert!(matches!(resultant(&a, &BiPoly::zero(f)), Err(Error::Usage(_))));
    }

    fn random_bi(f: PrimeField, du: usize, dv: usize, rng: &mut ChaCha8Rng) -> BiPoly<PrimeField> {
        let coeffs = (0..=dv).map(|_| random_poly(f, du, rng)).collect();
        BiPoly::new(f, coeffs).unwrap()
    }

    #[test]
    fn subresultant_matches_pointwise_sylvester() {
        let f = fp();
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for (du, dva, dvb) in [(1, 2, 1), (2, 3, 3), (3, 4, 2), (2, 5, 4), (4, 6, 5)] {
            let a = random_bi(f, du, dva, &mut rng);
            let b = random_bi(f, du, dvb, &mut rng);
            let r = resultant(&a, &b).unwrap();
            assert!(r.deg0() <= du * (dva + dvb));
            for _ in 0..6 {
                let u0 = rng.gen_range(0..f.p());
                let expected = sylvester(&a.eval_u(&u0), &b.eval_u(&u0));
                assert_eq!(r.eval(&u0), expected);
            }
        }
    }

    #[test]
    fn degree_bound_for_four_lines() {
        // f = (v-u)(v-2u)(v-3u)(v-4u) + 1 ; Res_v(f_u, f_v)
        let f = fp();
        let mut prod = bi(f, &[&[1]]);
        for k in 1..=4 {
            let lin = bi(f, &[&[0, -k], &[1]]);
            let mut coeffs = vec![UniPoly::zero(f); 5];
            for (i, c) in prod.coeffs().iter().enumerate() {
                for (j, d) in lin.coeffs().iter().enumerate() {
                    coeffs[i + j] = coeffs[i + j].add(&c.mul(d).unwrap()).unwrap();
                }
            }
            prod = BiPoly::new(f, coeffs).unwrap();
        }
        let fu = prod.diff_u();
        let fv = prod.diff_v();
        let r = resultant(&fu, &fv).unwrap();
        // Sylvester bound: deg_u <= deg_v(fv)*deg_u(fu) + deg_v(fu)*deg_u(fv)
        assert!(r.deg0() <= 3 * 3 + 3 * 3);
    }
}
