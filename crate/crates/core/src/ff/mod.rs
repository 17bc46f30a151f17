//! Finite fields, univariate polynomials over them, and dense linear algebra
//! over prime fields.
//!
//! Fields are runtime objects (the prime is configurable), so arithmetic goes
//! through a field context in the style of `field.mul(&a, &b)`. Elements are
//! plain data and carry no back-reference; containers such as [`UniPoly`]
//! hold their field and refuse to mix with values from another one.

mod bipoly;
mod ext;
mod factor;
mod matrix;
mod poly;
mod prime;
mod resultant;

pub use bipoly::BiPoly;
pub use ext::ExtField;
pub use factor::{is_irreducible, roots, squarefree_decomposition, uni_factor, Factorization};
pub use matrix::{MatrixFp, RankKernel};
pub use poly::UniPoly;
pub use prime::{is_prime_u64, PrimeField, DEFAULT_PRIME};
pub use resultant::{resultant, uni_resultant};

use num_bigint::BigUint;
use rand::Rng;
use std::fmt::Debug;

/// A finite field of odd characteristic.
pub trait Field: Clone + PartialEq + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Ord + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Image of a signed integer under the prime-field embedding.
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn characteristic(&self) -> u64;
    /// Degree over the prime field.
    fn degree(&self) -> usize;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Number of elements, `p^m`.
    fn order(&self) -> BigUint {
        BigUint::from(self.characteristic()).pow(self.degree() as u32)
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// The unique `p`-th root (Frobenius is bijective on a finite field).
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem {
        // a^(p^(m-1)) inverts the Frobenius a -> a^p.
        let p = self.characteristic();
        let mut r = a.clone();
        for _ in 1..self.degree() {
            r = self.pow(&r, p);
        }
        r
    }
}
