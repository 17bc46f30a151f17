use super::{Field, UniPoly};
use crate::error::{Error, Result};

/// A polynomial in `v` whose coefficients are polynomials in `u`:
/// `sum_j coeffs[j](u) * v^j`, with no trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly<F: Field> {
    field: F,
    coeffs: Vec<UniPoly<F>>,
}

impl<F: Field> BiPoly<F> {
    pub fn new(field: F, mut coeffs: Vec<UniPoly<F>>) -> Result<Self> {
        if coeffs.iter().any(|c| *c.field() != field) {
            return Err(Error::usage("coefficient over a different field"));
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Ok(BiPoly { field, coeffs })
    }

    /// Builds from a dense grid `grid[i][j]` = coefficient of `u^i v^j`.
    pub fn from_grid(field: F, grid: &[Vec<F::Elem>]) -> Self {
        let dv = grid.iter().map(Vec::len).max().unwrap_or(0);
        let coeffs = (0..dv)
            .map(|j| {
                let col = grid
                    .iter()
                    .map(|row| row.get(j).cloned().unwrap_or_else(|| field.zero()))
                    .collect();
                UniPoly::new(field.clone(), col)
            })
            .collect();
        Self::new(field, coeffs).expect("single field")
    }

    pub fn zero(field: F) -> Self {
        BiPoly { field, coeffs: Vec::new() }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[UniPoly<F>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `v`; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, j: usize) -> UniPoly<F> {
        self.coeffs.get(j).cloned().unwrap_or_else(|| UniPoly::zero(self.field.clone()))
    }

    pub fn lc(&self) -> UniPoly<F> {
        self.coeffs.last().cloned().unwrap_or_else(|| UniPoly::zero(self.field.clone()))
    }

    /// Specialize `u` to a field element; yields a polynomial in `v`.
    pub fn eval_u(&self, u: &F::Elem) -> UniPoly<F> {
        UniPoly::new(self.field.clone(), self.coeffs.iter().map(|c| c.eval(u)).collect())
    }

    pub fn scale(&self, s: &UniPoly<F>) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c.mul_unchecked(s)).collect();
        Self::new(self.field.clone(), coeffs).expect("single field")
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|j| self.coeff(j).sub_unchecked(&other.coeff(j))).collect();
        Self::new(self.field.clone(), coeffs).expect("single field")
    }

    /// Multiply by `c(u) * v^k`.
    fn mul_term(&self, c: &UniPoly<F>, k: usize) -> Self {
        let mut coeffs = vec![UniPoly::zero(self.field.clone()); k];
        coeffs.extend(self.coeffs.iter().map(|x| x.mul_unchecked(c)));
        Self::new(self.field.clone(), coeffs).expect("single field")
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a = q*b + r`, `deg r < deg b`.
    pub fn prem(&self, b: &Self) -> Result<Self> {
        let db = b.degree().ok_or_else(|| Error::usage("pseudo-division by zero"))?;
        let Some(da) = self.degree() else {
            return Ok(self.clone());
        };
        if da < db {
            return Ok(self.clone());
        }
        let lb = b.lc();
        let mut r = self.clone();
        let mut steps = da - db + 1;
        while let Some(dr) = r.degree().filter(|&d| d >= db) {
            let lr = r.lc();
            r = r.scale(&lb).sub(&b.mul_term(&lr, dr - db));
            steps -= 1;
        }
        // pad the remaining powers of lc(b)
        for _ in 0..steps {
            r = r.scale(&lb);
        }
        Ok(r)
    }

    /// Coefficientwise exact division by a polynomial in `u`.
    pub fn exact_div_u(&self, d: &UniPoly<F>) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.exact_div(d))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.field.clone(), coeffs)
    }

    /// Partial derivative in `v`.
    pub fn diff_v(&self) -> Self {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c.scale(&f.from_i64(j as i64)))
            .collect();
        Self::new(f.clone(), coeffs).expect("single field")
    }

    /// Partial derivative in `u`.
    pub fn diff_u(&self) -> Self {
        let coeffs = self.coeffs.iter().map(UniPoly::derivative).collect();
        Self::new(self.field.clone(), coeffs).expect("single field")
    }
}
