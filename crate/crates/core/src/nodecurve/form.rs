use crate::error::{Error, Result};
use crate::ff::{BiPoly, Field, PrimeField, UniPoly};

/// `f(u, v) = sum a[i][j] u^i v^j`, `0 <= i <= 4`, `0 <= j <= lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BidegreeForm {
    field: PrimeField,
    lambda: usize,
    coeffs: Vec<Vec<u64>>,
}

pub(crate) const U_DEGREE: usize = 4;

/// Column of `u^i v^j` in the flattened coefficient vector.
pub(crate) fn monomial_index(lambda: usize, i: usize, j: usize) -> usize {
    i * (lambda + 1) + j
}

/// `n (n-1) ... (n-k+1)` as a field element.
fn falling(field: &PrimeField, n: usize, k: usize) -> u64 {
    (0..k).fold(1, |acc, s| field.mul(&acc, &field.from_i64(n as i64 - s as i64)))
}

impl BidegreeForm {
    pub fn new(field: PrimeField, lambda: usize, coeffs: Vec<Vec<u64>>) -> Result<Self> {
        if coeffs.len() != U_DEGREE + 1 || coeffs.iter().any(|r| r.len() != lambda + 1) {
            return Err(Error::Format(format!("coefficient grid must be 5 x {}", lambda + 1)));
        }
        if coeffs.iter().flatten().any(|&c| c >= field.p()) {
            return Err(Error::Format("coefficient not reduced mod p".into()));
        }
        if coeffs.iter().flatten().all(|&c| c == 0) {
            return Err(Error::usage("zero form"));
        }
        Ok(BidegreeForm { field, lambda, coeffs })
    }

    /// From the flattened vector in `monomial_index` order.
    pub fn from_vector(field: PrimeField, lambda: usize, v: &[u64]) -> Result<Self> {
        if v.len() != (U_DEGREE + 1) * (lambda + 1) {
            return Err(Error::usage("coefficient vector has the wrong length"));
        }
        let coeffs = v.chunks(lambda + 1).map(<[u64]>::to_vec).collect();
        Self::new(field, lambda, coeffs)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn coeffs(&self) -> &[Vec<u64>] {
        &self.coeffs
    }

    pub fn to_vector(&self) -> Vec<u64> {
        self.coeffs.iter().flatten().copied().collect()
    }

    /// `d^(du+dv) f / du^du dv^dv` at `(u, v)`.
    pub fn eval_partial(&self, du: usize, dv: usize, u: u64, v: u64) -> u64 {
        let f = &self.field;
        let mut acc = 0;
        let mut upow = 1;
        for i in du..=U_DEGREE {
            let mut vpow = 1;
            for j in dv..=self.lambda {
                let a = self.coeffs[i][j];
                if a != 0 {
                    let c = f.mul(&f.mul(&falling(f, i, du), &falling(f, j, dv)), &a);
                    acc = f.add(&acc, &f.mul(&c, &f.mul(&upow, &vpow)));
                }
                vpow = f.mul(&vpow, &v);
            }
            upow = f.mul(&upow, &u);
        }
        acc
    }

    pub fn eval(&self, u: u64, v: u64) -> u64 {
        self.eval_partial(0, 0, u, v)
    }

    /// As a polynomial in `v` with coefficients in `F_p[u]`.
    pub fn as_poly_in_v(&self) -> BiPoly<PrimeField> {
        let cols = (0..=self.lambda)
            .map(|j| UniPoly::new(self.field, (0..=U_DEGREE).map(|i| self.coeffs[i][j]).collect()))
            .collect();
        BiPoly::new(self.field, cols).expect("single field")
    }

    /// As a polynomial in `u` with coefficients in `F_p[v]`.
    pub fn as_poly_in_u(&self) -> BiPoly<PrimeField> {
        let rows = self.coeffs.iter().map(|r| UniPoly::new(self.field, r.clone())).collect();
        BiPoly::new(self.field, rows).expect("single field")
    }

    /// `f(u0, v)`.
    pub fn at_u(&self, u0: u64) -> UniPoly<PrimeField> {
        self.as_poly_in_v().eval_u(&u0)
    }

    /// `f(u, v0)`.
    pub fn at_v(&self, v0: u64) -> UniPoly<PrimeField> {
        self.as_poly_in_u().eval_u(&v0)
    }

    pub fn deg_u(&self) -> usize {
        self.as_poly_in_u().degree().unwrap_or(0)
    }

    pub fn deg_v(&self) -> usize {
        self.as_poly_in_v().degree().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partials_match_finite_formulas() {
        let f = PrimeField::new(10007).unwrap();
        // f = u^2 v^3 + 5 u^4 + 7 v
        let mut c = vec![vec![0u64; 4]; 5];
        c[2][3] = 1;
        c[4][0] = 5;
        c[0][1] = 7;
        let form = BidegreeForm::new(f, 3, c).unwrap();
        let (u, v) = (3, 2);
        assert_eq!(form.eval(u, v), 9 * 8 + 5 * 81 + 14);
        assert_eq!(form.eval_partial(1, 0, u, v), 2 * 3 * 8 + 20 * 27);
        assert_eq!(form.eval_partial(0, 1, u, v), 9 * 3 * 4 + 7);
        assert_eq!(form.eval_partial(1, 1, u, v), 2 * 3 * 3 * 4);
        assert_eq!(form.eval_partial(2, 0, u, v), 2 * 8 + 60 * 9);
        assert_eq!(form.eval_partial(0, 2, u, v), 9 * 6 * 2);
        assert_eq!(form.at_u(u).eval(&v), form.eval(u, v));
        assert_eq!(form.at_v(v).eval(&u), form.eval(u, v));
        assert_eq!((form.deg_u(), form.deg_v()), (4, 3));
        let back = BidegreeForm::from_vector(f, 3, &form.to_vector()).unwrap();
        assert_eq!(back, form);
    }
}
