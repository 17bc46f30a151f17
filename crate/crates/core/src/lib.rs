//! Invariants, strata and finite-field constructions for 4-gonal curves on
//! Hirzebruch surfaces.

pub mod error;
pub mod ff;
pub mod fiberclass;
pub mod hirzebruch;
pub mod invariants;
pub mod nodecurve;
pub mod rng;
pub mod scroll;
pub mod strata;

pub use error::{Error, Result};

/// Rationals as `"num/den"` strings (integers without a denominator).
pub mod ratio_serde {
    use num_rational::Ratio;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn format(r: &Ratio<i64>) -> String {
        if r.is_integer() {
            r.numer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    }

    pub fn serialize<S: Serializer>(r: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio<i64>, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|_| D::Error::custom(format!("bad rational {s:?}")))
    }
}
