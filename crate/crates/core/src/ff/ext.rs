use super::{is_irreducible, Field, PrimeField, UniPoly};
use crate::error::{Error, Result};
use rand::Rng;
use std::sync::Arc;

/// F_{p^m} = F_p[x] / (modulus), elements stored as `m` coefficients low-to-high.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtField {
    base: PrimeField,
    /// Monic, irreducible, length m + 1.
    modulus: Arc<Vec<u64>>,
}

impl ExtField {
    /// Wraps a modulus after checking that it is monic and irreducible.
    pub fn from_modulus(modulus: &UniPoly<PrimeField>) -> Result<Self> {
        let m = modulus
            .degree()
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::usage("extension modulus must have degree >= 1"))?;
        if !modulus.is_monic() {
            return Err(Error::usage("extension modulus must be monic"));
        }
        if !is_irreducible(modulus)? {
            return Err(Error::usage(format!("modulus of degree {m} is reducible")));
        }
        Ok(ExtField {
            base: *modulus.field(),
            modulus: Arc::new(modulus.coeffs().to_vec()),
        })
    }

    /// F_{p^m} with the first monic irreducible modulus in counting order of its
    /// low coefficients (c_0 fastest).
    pub fn searched(base: PrimeField, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::usage("extension degree must be >= 1"));
        }
        let p = base.p();
        let mut low = vec![0u64; m];
        loop {
            let mut coeffs = low.clone();
            coeffs.push(1);
            let cand = UniPoly::new(base, coeffs);
            if is_irreducible(&cand)? {
                return Ok(ExtField { base, modulus: Arc::new(cand.into_coeffs()) });
            }
            // odometer increment, c_0 fastest
            let mut i = 0;
            loop {
                if i == m {
                    return Err(Error::domain(format!("no irreducible of degree {m} over F_{p}")));
                }
                low[i] += 1;
                if low[i] < p {
                    break;
                }
                low[i] = 0;
                i += 1;
            }
        }
    }

    pub fn base(&self) -> PrimeField {
        self.base
    }

    pub fn modulus(&self) -> UniPoly<PrimeField> {
        UniPoly::new(self.base, self.modulus.as_ref().clone())
    }

    fn m(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Image of a prime-field element.
    pub fn embed(&self, a: u64) -> Vec<u64> {
        let mut v = vec![0; self.m()];
        v[0] = self.base.reduce(a);
        v
    }

    /// The class of `x`, a root of the modulus.
    pub fn generator(&self) -> Vec<u64> {
        if self.m() == 1 {
            // x = -c_0 in F_p[x]/(x + c_0)
            return vec![self.base.neg(&self.modulus[0])];
        }
        let mut v = vec![0; self.m()];
        v[1] = 1;
        v
    }

    fn reduce(&self, mut prod: Vec<u64>) -> Vec<u64> {
        let f = &self.base;
        let m = self.m();
        for k in (m..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for j in 0..m {
                prod[k - m + j] = f.sub(&prod[k - m + j], &f.mul(&c, &self.modulus[j]));
            }
            prod[k] = 0;
        }
        prod.truncate(m);
        prod.resize(m, 0);
        prod
    }
}

impl Field for ExtField {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.m()]
    }

    fn one(&self) -> Vec<u64> {
        self.embed(1)
    }

    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|&c| c == 0)
    }

    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }

    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }

    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let m = self.m();
        if m == 1 {
            return vec![self.base.mul(&a[0], &b[0])];
        }
        let p = self.base.p() as u128;
        // accumulate in u128 and reduce once per slot
        let mut acc = vec![0u128; 2 * m - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                acc[i + j] = (acc[i + j] + x as u128 * y as u128) % p;
            }
        }
        self.reduce(acc.into_iter().map(|c| c as u64).collect())
    }

    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().map(|x| self.base.neg(x)).collect()
    }

    fn inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        if self.is_zero(a) {
            return None;
        }
        let ap = UniPoly::new(self.base, a.clone());
        let (g, s, _) = ap.ext_gcd(&self.modulus()).ok()?;
        debug_assert!(g.degree() == Some(0));
        let mut v = s.into_coeffs();
        v.resize(self.m(), 0);
        Some(v)
    }

    fn from_i64(&self, n: i64) -> Vec<u64> {
        self.embed(self.base.from_i64(n))
    }

    fn characteristic(&self) -> u64 {
        self.base.p()
    }

    fn degree(&self) -> usize {
        self.m()
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u64> {
        (0..self.m()).map(|_| self.base.random(rng)).collect()
    }
}
