//! Factorization over finite fields: squarefree decomposition, distinct-degree
//! splitting, then Cantor-Zassenhaus equal-degree splitting driven by a seeded
//! ChaCha stream so that results are reproducible for a given `(p, seed)`.

use super::{Field, UniPoly};
use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `f = lc * prod factor^multiplicity`, factors monic irreducible, sorted by
/// degree and then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<F: Field> {
    pub lc: F::Elem,
    pub factors: Vec<(UniPoly<F>, usize)>,
}

impl<F: Field> Factorization<F> {
    /// Multiplies everything back together.
    pub fn expand(&self, field: &F) -> UniPoly<F> {
        let mut acc = UniPoly::constant(field.clone(), self.lc.clone());
        for (g, m) in &self.factors {
            acc = acc.mul_unchecked(&g.pow(*m));
        }
        acc
    }
}

/// Factor a nonzero polynomial into monic irreducibles.
pub fn uni_factor<F: Field>(f: &UniPoly<F>, seed: u64) -> Result<Factorization<F>> {
    if f.is_zero() {
        return Err(Error::usage("cannot factor the zero polynomial"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (sqf, mult) in squarefree_decomposition(&f.monic())? {
        for (d, block) in distinct_degree(&sqf)? {
            for g in equal_degree(&block, d, &mut rng)? {
                factors.push((g, mult));
            }
        }
    }
    factors.sort_by(|(a, ma), (b, mb)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
            .then(ma.cmp(mb))
    });
    Ok(Factorization { lc: f.lc(), factors })
}

/// `[(g_i, i)]` with `f = prod g_i^i`, each `g_i` squarefree and pairwise coprime.
/// Input must be monic.
pub fn squarefree_decomposition<F: Field>(f: &UniPoly<F>) -> Result<Vec<(UniPoly<F>, usize)>> {
    let field = f.field().clone();
    let p = field.characteristic() as usize;
    let mut out = Vec::new();
    if f.deg0() == 0 {
        return Ok(out);
    }
    let df = f.derivative();
    if df.is_zero() {
        for (g, m) in squarefree_decomposition(&pth_root_poly(f))? {
            out.push((g, m * p));
        }
        return Ok(out);
    }
    let mut c = f.gcd(&df)?;
    let mut w = f.exact_div(&c)?;
    let mut i = 1;
    while w.deg0() > 0 {
        let y = w.gcd(&c)?;
        let z = w.exact_div(&y)?;
        if z.deg0() > 0 {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.exact_div(&w)?;
    }
    if c.deg0() > 0 {
        for (g, m) in squarefree_decomposition(&pth_root_poly(&c))? {
            out.push((g, m * p));
        }
    }
    out.sort_by_key(|(_, m)| *m);
    Ok(out)
}

/// For `f = g(x^p)` return `g` with coefficients replaced by their p-th roots.
fn pth_root_poly<F: Field>(f: &UniPoly<F>) -> UniPoly<F> {
    let field = f.field().clone();
    let p = field.characteristic() as usize;
    let coeffs = f.coeffs().iter().step_by(p).map(|c| field.pth_root(c)).collect();
    UniPoly::new(field, coeffs)
}

/// `x^q mod modulus` where q is the field order.
fn frobenius_x<F: Field>(h: &UniPoly<F>, q: &BigUint, modulus: &UniPoly<F>) -> Result<UniPoly<F>> {
    h.pow_mod(q, modulus)
}

/// Split a squarefree monic polynomial into products of irreducibles of equal degree.
fn distinct_degree<F: Field>(f: &UniPoly<F>) -> Result<Vec<(usize, UniPoly<F>)>> {
    let field = f.field().clone();
    let q = field.order();
    let x = UniPoly::x(field.clone());
    let mut rest = f.clone();
    let mut h = x.rem(&rest)?;
    let mut out = Vec::new();
    let mut d = 0;
    while rest.deg0() >= 2 * (d + 1) {
        d += 1;
        h = frobenius_x(&h, &q, &rest)?;
        let g = rest.gcd(&h.sub_unchecked(&x))?;
        if g.deg0() > 0 {
            rest = rest.exact_div(&g)?;
            h = h.rem(&rest)?;
            out.push((d, g));
        }
    }
    if rest.deg0() > 0 {
        out.push((rest.deg0(), rest));
    }
    Ok(out)
}

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles of degree `d`.
fn equal_degree<F: Field>(f: &UniPoly<F>, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<UniPoly<F>>> {
    let n = f.deg0();
    if n == d {
        return Ok(vec![f.monic()]);
    }
    let field = f.field().clone();
    // (q^d - 1) / 2; q is odd
    let exponent = (field.order().pow(d as u32) - BigUint::one()) >> 1;
    loop {
        let coeffs = (0..n).map(|_| field.random(rng)).collect();
        let a = UniPoly::new(field.clone(), coeffs);
        if a.deg0() == 0 {
            continue;
        }
        let mut g = a.gcd(f)?;
        if g.deg0() == 0 {
            let b = a.pow_mod(&exponent, f)?;
            g = b.sub_unchecked(&UniPoly::one(field.clone())).gcd(f)?;
        }
        if g.deg0() > 0 && g.deg0() < n {
            let other = f.exact_div(&g)?;
            let mut out = equal_degree(&g, d, rng)?;
            out.extend(equal_degree(&other, d, rng)?);
            return Ok(out);
        }
    }
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test: `f` of degree n is irreducible iff `x^(q^n) = x mod f` and
/// `gcd(x^(q^(n/r)) - x, f) = 1` for every prime `r | n`.
pub fn is_irreducible<F: Field>(f: &UniPoly<F>) -> Result<bool> {
    let n = match f.degree() {
        None => return Err(Error::usage("irreducibility of the zero polynomial")),
        Some(0) => return Ok(false),
        Some(1) => return Ok(true),
        Some(n) => n,
    };
    let field = f.field().clone();
    let f = f.monic();
    let q = field.order();
    let x = UniPoly::x(field.clone());
    // powers[k] = x^(q^k) mod f for k = 0..=n
    let mut powers = vec![x.rem(&f)?];
    for k in 1..=n {
        let next = frobenius_x(&powers[k - 1], &q, &f)?;
        powers.push(next);
    }
    if powers[n] != x.rem(&f)? {
        return Ok(false);
    }
    for r in prime_divisors(n) {
        let g = f.gcd(&powers[n / r].sub_unchecked(&x))?;
        if g.deg0() > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Distinct roots lying in the base field of `f`, sorted.
pub fn roots<F: Field>(f: &UniPoly<F>, seed: u64) -> Result<Vec<F::Elem>> {
    if f.is_zero() {
        return Err(Error::usage("roots of the zero polynomial"));
    }
    let field = f.field().clone();
    let x = UniPoly::x(field.clone());
    let monic = f.monic();
    if monic.deg0() == 0 {
        return Ok(Vec::new());
    }
    let xq = frobenius_x(&x.rem(&monic)?, &field.order(), &monic)?;
    let split = monic.gcd(&xq.sub_unchecked(&x))?;
    if split.deg0() == 0 {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<F::Elem> = equal_degree(&split, 1, &mut rng)?
        .into_iter()
        .map(|lin| field.neg(&lin.coeff(0)))
        .collect();
    out.sort();
    Ok(out)
}
