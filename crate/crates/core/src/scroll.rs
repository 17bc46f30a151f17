//! Rank-3 rational normal scrolls `P(O(a) + O(b) + O(c))`.

use crate::error::{Error, Result};
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ScrollType {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl ScrollType {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if a < 0 || a > b || b > c {
            return Err(Error::domain(format!("scroll type needs 0 <= a <= b <= c, got ({a},{b},{c})")));
        }
        Ok(ScrollType { a, b, c })
    }

    pub fn degree(&self) -> i64 {
        self.a + self.b + self.c
    }
}

/// `h^0(V, O_V(k)) = h^0(P^1, Sym^k(O(a)+O(b)+O(c)))`, by enumerating the
/// degree-`k` monomials in three variables.
pub fn h0_twist(s: &ScrollType, k: i64) -> Result<i64> {
    if k < 0 {
        return Err(Error::range("twist must be nonnegative"));
    }
    let mut total = 0;
    for i in 0..=k {
        for j in 0..=k - i {
            let l = k - i - j;
            total += (i * s.a + j * s.b + l * s.c + 1).max(0);
        }
    }
    Ok(total)
}

/// Projective dimension of the space of quadrics containing the canonical
/// curve but not the scroll.
pub fn quadric_space_dim(g: i64) -> Result<i64> {
    if g < 10 {
        return Err(Error::domain(format!("genus {g} below 10")));
    }
    Ok(g - 4)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceBound {
    pub bound: i64,
    #[serde(with = "crate::ratio_serde")]
    pub pencil_degree: Ratio<i64>,
    /// `3g - 7` even: the bound can be reached by a pencil of surfaces.
    pub is_pencil_case: bool,
}

/// `ceil((3g-8)/2)` and `(3g-7)/2`.
pub fn min_surface_degree_bound(g: i64) -> SurfaceBound {
    let bound = Ratio::new(3 * g - 8, 2).ceil().to_integer();
    let pencil_degree = Ratio::new(3 * g - 7, 2);
    SurfaceBound { bound, pencil_degree, is_pencil_case: pencil_degree.is_integer() }
}

/// Degree of the intersection of an `m1`-secant and an `m2`-secant subscheme
/// of a scroll of degree `deg_w`.
pub fn intersection_formula(m1: i64, deg1: i64, m2: i64, deg2: i64, deg_w: i64) -> i64 {
    m1 * deg2 + m2 * deg1 - m1 * m2 * deg_w
}

/// `(lambda-2-2t, lambda-2-t, lambda-2)`.
pub fn standard_scroll_splitting(lambda: i64, t: i64) -> Result<ScrollType> {
    if t < 0 || lambda - 2 - 2 * t < 0 {
        return Err(Error::range(format!("lambda = {lambda} too small for t = {t}")));
    }
    ScrollType::new(lambda - 2 - 2 * t, lambda - 2 - t, lambda - 2)
}

/// Dimension of the family of ruled surfaces `P(O(a)+O(b))` in the scroll.
pub fn ruled_subsurface_family_dim(s: &ScrollType) -> i64 {
    if s.b < s.c {
        0
    } else if s.a < s.b {
        1
    } else {
        2
    }
}

/// `g + lambda - t - 5`.
pub fn deg_min_surface(g: i64, lambda: i64, t: i64) -> i64 {
    let d = g + lambda - t - 5;
    debug_assert_eq!(d, 4 * (lambda - t - 2) - crate::invariants::delta(g, lambda, t));
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn twist_counts() {
        for a in 0..5 {
            for b in a..6 {
                for c in b..7 {
                    let s = ScrollType::new(a, b, c).unwrap();
                    let g = a + b + c + 3;
                    assert_eq!(h0_twist(&s, 0).unwrap(), 1);
                    assert_eq!(h0_twist(&s, 1).unwrap(), g);
                    assert_eq!(h0_twist(&s, 2).unwrap(), 4 * g - 6);
                    if g >= 10 {
                        let q = quadric_space_dim(g).unwrap();
                        assert_eq!(h0_twist(&s, 2).unwrap() - 3 * (g - 1) - 1, q);
                    }
                }
            }
        }
        assert!(h0_twist(&ScrollType::new(1, 1, 1).unwrap(), -1).is_err());
        assert_eq!(quadric_space_dim(10).unwrap(), 6);
        assert_eq!(quadric_space_dim(13).unwrap(), 9);
        assert!(quadric_space_dim(9).is_err());
    }

    #[test]
    fn surface_bounds() {
        let b = min_surface_degree_bound(11);
        assert_eq!((b.bound, b.pencil_degree, b.is_pencil_case), (13, Ratio::from_integer(13), true));
        let b = min_surface_degree_bound(12);
        assert_eq!((b.bound, b.pencil_degree, b.is_pencil_case), (14, Ratio::new(29, 2), false));
        assert_eq!(min_surface_degree_bound(10).bound, 11);
    }

    #[test]
    fn intersection_formula_examples() {
        for g in 10..40 {
            let deg_v = g - 3;
            for ab in 0..g {
                // a unisecant ruled surface of degree a+b against the canonical curve
                let d = intersection_formula(1, ab, 4, 2 * g - 2, deg_v);
                assert_eq!(d, 4 * ab - 2 * g + 10);
                assert_eq!(d, 2 * (2 * ab - g + 5));
            }
            // two bisecant surfaces of the same scroll
            for (s1, s2) in [(g, g + 1), (13, 17)] {
                assert_eq!(intersection_formula(2, s1, 2, s2, deg_v), 2 * s1 + 2 * s2 - 4 * deg_v);
            }
        }
        assert_eq!(intersection_formula(0, 0, 3, 9, 4), 0);
    }

    #[test]
    fn splitting_and_families() {
        for lambda in 2..20 {
            let s = standard_scroll_splitting(lambda, 0).unwrap();
            assert_eq!((s.a, s.b, s.c), (lambda - 2, lambda - 2, lambda - 2));
        }
        assert_eq!(standard_scroll_splitting(8, 1).unwrap(), ScrollType { a: 4, b: 5, c: 6 });
        for t in 0..5 {
            for lambda in 2 * t + 2..30 {
                assert_eq!(standard_scroll_splitting(lambda, t).unwrap().degree(), 3 * (lambda - t - 2));
            }
        }
        assert!(standard_scroll_splitting(3, 1).is_err());
        let fam = |a, b, c| ruled_subsurface_family_dim(&ScrollType::new(a, b, c).unwrap());
        assert_eq!(fam(3, 3, 3), 2);
        assert_eq!(fam(2, 3, 3), 1);
        assert_eq!(fam(1, 3, 4), 0);
    }

    #[test]
    fn min_surface_degree() {
        assert_eq!(deg_min_surface(12, 6, 0), 13);
    }

    proptest! {
        #[test]
        fn twist_monotone(a in 0i64..6, db in 0i64..6, dc in 0i64..6, k in 0i64..5, bump in 0usize..3) {
            let s = ScrollType::new(a, a + db, a + db + dc).unwrap();
            let mut parts = [s.a, s.b, s.c];
            parts[bump] += 1;
            parts.sort();
            let t = ScrollType::new(parts[0], parts[1], parts[2]).unwrap();
            prop_assert!(h0_twist(&t, k).unwrap() >= h0_twist(&s, k).unwrap());
            prop_assert_eq!(h0_twist(&s, 1).unwrap(), s.degree() + 3);
        }

        #[test]
        fn intersection_formula_symmetric(m1 in 0i64..6, d1 in 0i64..50, m2 in 0i64..6, d2 in 0i64..50, w in 0i64..30) {
            prop_assert_eq!(intersection_formula(m1, d1, m2, d2, w), intersection_formula(m2, d2, m1, d1, w));
        }

        #[test]
        fn min_surface_identity(g in 10i64..200, lambda in 0i64..200, t in 0i64..30) {
            let delta = 3 * (lambda - t - 1) - g;
            prop_assert_eq!(deg_min_surface(g, lambda, t), 4 * (lambda - t - 2) - delta);
        }
    }
}
