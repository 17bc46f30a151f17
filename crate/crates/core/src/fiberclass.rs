//! Degenerate fibres of a conic bundle and the double points they produce.
//!
//! A fibre is described by its blow-up script: the first center lies on the
//! fibre `f0`, later ones on the strict transform of `f0`, on the last
//! exceptional line, or at the point where two components meet. The 4-gonal
//! divisor on the final fibre is given symbolically.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlowupStep {
    OnFibre,
    OnStrictTransform,
    OnLastExceptional,
    AtIntersectionPoint,
}

impl BlowupStep {
    pub fn token(self) -> char {
        match self {
            BlowupStep::OnFibre => 'f',
            BlowupStep::OnStrictTransform => 's',
            BlowupStep::OnLastExceptional => 'e',
            BlowupStep::AtIntersectionPoint => 'i',
        }
    }
}

/// Parses `f,e,i`-style scripts. Long names (`on-fibre`, ...) are accepted too.
pub fn parse_script(s: &str) -> Result<Vec<BlowupStep>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::usage("empty blow-up script"));
    }
    s.split(',')
        .map(|tok| match tok.trim() {
            "f" | "on-fibre" => Ok(BlowupStep::OnFibre),
            "s" | "on-strict-transform" => Ok(BlowupStep::OnStrictTransform),
            "e" | "on-last-exceptional" => Ok(BlowupStep::OnLastExceptional),
            "i" | "at-intersection-point" => Ok(BlowupStep::AtIntersectionPoint),
            other => Err(Error::usage(format!("unknown blow-up center {other:?} (expected f, s, e or i)"))),
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "n")]
pub enum FiberType {
    F1,
    FnA(u32),
    FnD(u32),
}

impl FiberType {
    pub fn level(self) -> u32 {
        match self {
            FiberType::F1 => 1,
            FiberType::FnA(n) | FiberType::FnD(n) => n,
        }
    }
}

impl fmt::Display for FiberType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberType::F1 => write!(f, "F1"),
            FiberType::FnA(n) => write!(f, "F{n}(A)"),
            FiberType::FnD(n) => write!(f, "F{n}(D)"),
        }
    }
}

fn check_script(script: &[BlowupStep]) -> Result<()> {
    match script.first() {
        None => return Err(Error::usage("empty blow-up script")),
        Some(BlowupStep::OnFibre) => {}
        Some(s) => return Err(Error::usage(format!("first center must lie on the fibre, got '{}'", s.token()))),
    }
    if let Some(k) = script.iter().skip(1).position(|&s| s == BlowupStep::OnFibre) {
        return Err(Error::usage(format!("step {}: 'f' is only valid as the first step", k + 2)));
    }
    Ok(())
}

pub fn classify_fiber(script: &[BlowupStep]) -> Result<FiberType> {
    check_script(script)?;
    let n = script.len() as u32;
    Ok(if n == 1 {
        FiberType::F1
    } else if script.contains(&BlowupStep::AtIntersectionPoint) {
        FiberType::FnD(n)
    } else {
        FiberType::FnA(n)
    })
}

pub fn level(script: &[BlowupStep]) -> usize {
    script.len()
}

/// Sum of fibre levels; this is the number `delta` of points blown up.
pub fn surface_level(scripts: &[Vec<BlowupStep>]) -> usize {
    scripts.iter().map(|s| level(s)).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Node,
    Cusp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Attitude {
    Transversal,
    Tangential,
}

/// A double point `y^2 = x^(2n)` (node of kind n) or `y^2 = x^(2n+1)`
/// (cusp of kind n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SingularityKind {
    pub family: Family,
    pub kind: u32,
    pub attitude: Attitude,
}

impl SingularityKind {
    pub fn multiplicity(&self) -> u32 {
        2
    }

    pub fn name(&self) -> String {
        match (self.family, self.kind) {
            (Family::Node, 1) => "node".into(),
            (Family::Node, 2) => "tacnode".into(),
            (Family::Node, 3) => "oscnode".into(),
            (Family::Cusp, 1) => "cusp".into(),
            (Family::Cusp, 2) => "ramphoid cusp".into(),
            (Family::Node, n) => format!("node of kind {n}"),
            (Family::Cusp, n) => format!("cusp of kind {n}"),
        }
    }
}

impl fmt::Display for SingularityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let att = match self.attitude {
            Attitude::Transversal => "transversal",
            Attitude::Tangential => "tangential",
        };
        write!(f, "{att} {}", self.name())
    }
}

/// The seven placements of the 4-gonal divisor on a level-1 fibre
/// `f0 + E` with `A = f0 . E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level1Case {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Level1Case {
    pub const ALL: [Level1Case; 7] =
        [Level1Case::A, Level1Case::B, Level1Case::C, Level1Case::D, Level1Case::E, Level1Case::F, Level1Case::G];

    pub fn letter(self) -> char {
        (b'a' + self as u8) as char
    }

    pub fn divisor(self) -> &'static str {
        match self {
            Level1Case::A => "P1 + P2 + Q1 + Q2",
            Level1Case::B => "P1 + P2 + 2Q1",
            Level1Case::C => "2P1 + Q1 + Q2",
            Level1Case::D => "2P1 + 2Q1",
            Level1Case::E => "P1 + 2A + Q1",
            Level1Case::F => "P1 + 3A",
            Level1Case::G => "3A + Q1",
        }
    }

    /// Point multiplicities of the divisor restricted to `f0` and to `E`.
    pub fn restrictions(self) -> (&'static [u32], &'static [u32]) {
        match self {
            Level1Case::A => (&[1, 1], &[1, 1]),
            Level1Case::B => (&[1, 1], &[2]),
            Level1Case::C => (&[2], &[1, 1]),
            Level1Case::D => (&[2], &[2]),
            Level1Case::E => (&[1, 1], &[1, 1]),
            Level1Case::F => (&[1, 1], &[2]),
            Level1Case::G => (&[2], &[1, 1]),
        }
    }

    /// Whether the divisor passes through `A`.
    pub fn through_intersection(self) -> bool {
        matches!(self, Level1Case::E | Level1Case::F | Level1Case::G)
    }

    /// Cases through `A` never sit under a level-2 fibre.
    pub fn liftable(self) -> bool {
        !self.through_intersection()
    }

    pub fn singularity(self) -> SingularityKind {
        let family = match self {
            Level1Case::B | Level1Case::D | Level1Case::F => Family::Cusp,
            _ => Family::Node,
        };
        let attitude = if self.through_intersection() { Attitude::Tangential } else { Attitude::Transversal };
        SingularityKind { family, kind: 1, attitude }
    }
}

/// One of the two points in a split pattern on an `F_n(A)` fibre.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SplitPoint {
    pub kind: u32,
    /// The curve is tangent to the last exceptional line over this point.
    pub tangent_to_exceptional: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "pattern", rename_all = "kebab-case")]
pub enum DivisorPattern {
    Level1 { case: Level1Case },
    /// One singular point on `f0`; the curve meets `E^(n-1)` in two points
    /// or is tangent to it.
    Single { tangent_to_exceptional: bool },
    Split { first: SplitPoint, second: SplitPoint },
    /// `2A + 2B` on the double line.
    TwoPairs,
    /// `4A` on the double line.
    Quadruple,
}

impl DivisorPattern {
    pub fn describe(&self) -> String {
        match self {
            DivisorPattern::Level1 { case } => format!("({}) {}", case.letter(), case.divisor()),
            DivisorPattern::Single { tangent_to_exceptional: false } => "single point, transversal to E".into(),
            DivisorPattern::Single { tangent_to_exceptional: true } => "single point, tangent to E".into(),
            DivisorPattern::Split { first, second } => {
                let t = |p: &SplitPoint| if p.tangent_to_exceptional { "tangent" } else { "transversal" };
                format!("split {}+{} ({}, {})", first.kind, second.kind, t(first), t(second))
            }
            DivisorPattern::TwoPairs => "2A + 2B".into(),
            DivisorPattern::Quadruple => "4A".into(),
        }
    }
}

fn mismatch(ft: FiberType, dp: &DivisorPattern) -> Error {
    Error::Classification(format!("pattern {} does not fit a fibre of type {ft}", dp.describe()))
}

fn family_of(tangent: bool) -> Family {
    if tangent {
        Family::Cusp
    } else {
        Family::Node
    }
}

/// The double points of the birational model lying over one fibre.
pub fn singularities_from_fiber(ft: FiberType, dp: &DivisorPattern) -> Result<Vec<SingularityKind>> {
    match (ft, dp) {
        (FiberType::FnA(n) | FiberType::FnD(n), _) if n < 2 => {
            Err(Error::Classification(format!("{ft} has level below 2")))
        }
        (FiberType::F1, DivisorPattern::Level1 { case }) => Ok(vec![case.singularity()]),
        (FiberType::FnA(n), DivisorPattern::Single { tangent_to_exceptional }) => Ok(vec![SingularityKind {
            family: family_of(*tangent_to_exceptional),
            kind: n,
            attitude: Attitude::Transversal,
        }]),
        (FiberType::FnA(n), DivisorPattern::Split { first, second }) => {
            if first.kind == 0 || second.kind == 0 || first.kind + second.kind != n {
                return Err(Error::Classification(format!(
                    "split kinds {} + {} must be positive and add up to {n}",
                    first.kind, second.kind
                )));
            }
            let mut out: Vec<_> = [first, second]
                .iter()
                .map(|p| SingularityKind {
                    family: family_of(p.tangent_to_exceptional),
                    kind: p.kind,
                    attitude: Attitude::Transversal,
                })
                .collect();
            out.sort();
            Ok(out)
        }
        (FiberType::FnD(n), DivisorPattern::TwoPairs | DivisorPattern::Quadruple) => Ok(vec![SingularityKind {
            family: if *dp == DivisorPattern::Quadruple { Family::Cusp } else { Family::Node },
            kind: n,
            attitude: Attitude::Tangential,
        }]),
        _ => Err(mismatch(ft, dp)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelTableRow {
    pub fiber: FiberType,
    pub pattern: DivisorPattern,
    pub description: String,
    pub singularities: Vec<SingularityKind>,
    /// Level-1 rows: can sit under a fibre of higher level.
    pub liftable: bool,
    /// Level-1 cases a row of level >= 2 can come from.
    pub ancestry: Vec<Level1Case>,
}

fn ancestry_of(family: Family) -> Vec<Level1Case> {
    match family {
        Family::Node => vec![Level1Case::A, Level1Case::C],
        Family::Cusp => vec![Level1Case::B, Level1Case::D],
    }
}

/// Every fibre type and divisor pattern up to level `n`.
pub fn enumerate_level_table(n: u32) -> Result<Vec<LevelTableRow>> {
    if n == 0 {
        return Err(Error::usage("level must be at least 1"));
    }
    let mut rows = Vec::new();
    let mut push = |fiber: FiberType, pattern: DivisorPattern, liftable: bool| -> Result<()> {
        let singularities = singularities_from_fiber(fiber, &pattern)?;
        let mut ancestry: Vec<Level1Case> = if fiber == FiberType::F1 {
            Vec::new()
        } else {
            singularities.iter().flat_map(|s| ancestry_of(s.family)).collect()
        };
        ancestry.sort();
        ancestry.dedup();
        rows.push(LevelTableRow { fiber, description: pattern.describe(), pattern, singularities, liftable, ancestry });
        Ok(())
    };
    for case in Level1Case::ALL {
        push(FiberType::F1, DivisorPattern::Level1 { case }, case.liftable())?;
    }
    for m in 2..=n {
        for tangent in [false, true] {
            push(FiberType::FnA(m), DivisorPattern::Single { tangent_to_exceptional: tangent }, true)?;
        }
        for h in 1..=m / 2 {
            let k = m - h;
            for t1 in [false, true] {
                for t2 in [false, true] {
                    // equal kinds: the two points are unordered
                    if h == k && t1 && !t2 {
                        continue;
                    }
                    let first = SplitPoint { kind: h, tangent_to_exceptional: t1 };
                    let second = SplitPoint { kind: k, tangent_to_exceptional: t2 };
                    push(FiberType::FnA(m), DivisorPattern::Split { first, second }, true)?;
                }
            }
        }
        push(FiberType::FnD(m), DivisorPattern::TwoPairs, true)?;
        push(FiberType::FnD(m), DivisorPattern::Quadruple, true)?;
    }
    Ok(rows)
}
