use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::poly::{sign, IntPoly, MPoly};

/// Every identity the crate can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationId {
    FhTilde,
    Reciprocity,
    DsF,
    DsFInverse,
    DsH,
    SemiEulerianH,
    Macdonald,
    SrReciprocity,
    FlagFhTilde,
    FlagReciprocity,
    BalancedDs,
    BalancedSemiEulerian,
    SrReciprocityColored,
}

impl RelationId {
    /// Relations that need only the complex.
    pub const UNIVARIATE: [RelationId; 8] = [
        RelationId::FhTilde,
        RelationId::Reciprocity,
        RelationId::DsF,
        RelationId::DsFInverse,
        RelationId::DsH,
        RelationId::SemiEulerianH,
        RelationId::Macdonald,
        RelationId::SrReciprocity,
    ];

    /// Relations that also need a balanced coloring.
    pub const COLORED: [RelationId; 5] = [
        RelationId::FlagFhTilde,
        RelationId::FlagReciprocity,
        RelationId::BalancedDs,
        RelationId::BalancedSemiEulerian,
        RelationId::SrReciprocityColored,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RelationId::FhTilde => "fh-tilde",
            RelationId::Reciprocity => "reciprocity",
            RelationId::DsF => "ds-f",
            RelationId::DsFInverse => "ds-f-inverse",
            RelationId::DsH => "ds-h",
            RelationId::SemiEulerianH => "semi-eulerian-h",
            RelationId::Macdonald => "macdonald",
            RelationId::SrReciprocity => "sr-reciprocity",
            RelationId::FlagFhTilde => "flag-fh-tilde",
            RelationId::FlagReciprocity => "flag-reciprocity",
            RelationId::BalancedDs => "balanced-ds",
            RelationId::BalancedSemiEulerian => "balanced-semi-eulerian",
            RelationId::SrReciprocityColored => "sr-reciprocity-colored",
        }
    }

    pub fn parse(name: &str) -> Option<RelationId> {
        Self::UNIVARIATE
            .into_iter()
            .chain(Self::COLORED)
            .find(|r| r.name() == name)
    }

    pub fn is_colored(self) -> bool {
        Self::COLORED.contains(&self)
    }
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One compared quantity: a coefficient, or one scalar relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    /// What is compared, e.g. `coeff` for polynomial coefficients.
    pub label: String,
    /// Degree, relation index or exponent vector.
    pub index: Vec<u32>,
    #[serde(with = "crate::decimal")]
    pub lhs: BigInt,
    #[serde(with = "crate::decimal")]
    pub rhs: BigInt,
    #[serde(with = "crate::decimal")]
    pub residual: BigInt,
}

/// Outcome of checking one identity, with per-index residuals
/// `lhs - rhs`. `holds` is true exactly when every residual is zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub relation: RelationId,
    pub holds: bool,
    pub d: usize,
    #[serde(with = "crate::decimal")]
    pub chi_reduced: BigInt,
    #[serde(with = "crate::decimal")]
    pub m_empty: BigInt,
    /// Both sides were multiplied by this factor to keep them integral.
    pub scale: u32,
    pub rows: Vec<Row>,
}

impl RelationReport {
    /// Empty report; `m_∅ = (-1)^(d-1) χ̃` is filled in from the context.
    pub fn new(relation: RelationId, d: usize, chi_reduced: BigInt) -> Self {
        let m_empty = &chi_reduced * sign(d as i64 - 1);
        RelationReport {
            relation,
            holds: true,
            d,
            chi_reduced,
            m_empty,
            scale: 1,
            rows: Vec::new(),
        }
    }

    pub fn with_scale(mut self, scale: u32) -> Self {
        self.scale = scale;
        self
    }

    pub fn push(&mut self, label: &str, index: Vec<u32>, lhs: BigInt, rhs: BigInt) {
        let residual = &lhs - &rhs;
        if !residual.is_zero() {
            self.holds = false;
        }
        self.rows.push(Row {
            label: label.to_string(),
            index,
            lhs,
            rhs,
            residual,
        });
    }

    /// One row per coefficient up to the larger degree bound.
    pub fn compare_polys(&mut self, label: &str, lhs: &IntPoly, rhs: &IntPoly) {
        let d = lhs.degree_bound().max(rhs.degree_bound());
        for k in 0..=d {
            self.push(label, vec![k as u32], lhs.coeff(k), rhs.coeff(k));
        }
    }

    /// One row per exponent vector present on either side.
    pub fn compare_mpolys(&mut self, label: &str, lhs: &MPoly, rhs: &MPoly) {
        let mut keys: Vec<&Vec<u32>> = lhs.terms().chain(rhs.terms()).map(|(k, _)| k).collect();
        keys.sort();
        keys.dedup();
        for key in keys {
            self.push(label, key.clone(), lhs.coeff(key), rhs.coeff(key));
        }
    }

    pub fn failing_rows(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.residual.is_zero())
    }

    pub fn row(&self, label: &str, index: &[u32]) -> Option<&Row> {
        self.rows.iter().find(|r| r.label == label && r.index == index)
    }

    /// Merges another report's rows into this one.
    pub fn absorb(&mut self, other: RelationReport) {
        self.holds &= other.holds;
        self.rows.extend(other.rows);
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.holds { "holds" } else { "FAILS" };
        writeln!(f, "{}: {verdict} (d = {}, reduced chi = {})", self.relation, self.d, self.chi_reduced)?;
        for r in self.failing_rows() {
            let idx: Vec<String> = r.index.iter().map(u32::to_string).collect();
            writeln!(
                f,
                "  {}[{}]: lhs {} rhs {} residual {}",
                r.label,
                idx.join(","),
                r.lhs,
                r.rhs,
                r.residual
            )?;
        }
        Ok(())
    }
}
