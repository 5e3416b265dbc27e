//! Parsed verification requests, bound against a model's target table.

use super::{Mdp, StateId};
use crate::num::Rational;
use num_traits::{One, Signed};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueryMode {
    Strict,
    NonStrict,
    Lex,
    Frontier,
}

/// A verification request over target names, before binding to a model.
#[derive(Debug, Clone, PartialEq)]
pub struct Query {
    pub mode: QueryMode,
    /// Threshold per target name (Strict / NonStrict modes).
    pub thresholds: Vec<(String, Rational)>,
    /// Priority order of target names (Lex mode).
    pub order: Vec<String>,
    pub start: Option<String>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QueryError {
    #[error("unknown target `{0}`")]
    UnknownTarget(String),
    #[error("target `{0}` referenced twice")]
    DuplicateTarget(String),
    #[error("target `{0}` missing from the query")]
    MissingTarget(String),
    #[error("threshold for `{0}` must lie in [0,1]")]
    ThresholdRange(String),
    #[error("no start state: the model has no initial state and none was given")]
    MissingStart,
    #[error("unknown start state `{0}`")]
    UnknownState(String),
}

/// A query resolved against a concrete model: thresholds in model target
/// order, lex order as target indices, start resolved.
#[derive(Debug, Clone)]
pub struct BoundQuery {
    pub mode: QueryMode,
    pub thresholds: Vec<Rational>,
    pub order: Vec<usize>,
    pub start: StateId,
}

impl Query {
    pub fn frontier() -> Query {
        Query { mode: QueryMode::Frontier, thresholds: Vec::new(), order: Vec::new(), start: None }
    }

    pub fn bind(&self, m: &Mdp) -> Result<BoundQuery, QueryError> {
        let start = match &self.start {
            Some(name) => m
                .state_by_name(name)
                .ok_or_else(|| QueryError::UnknownState(name.clone()))?,
            None => m.initial().ok_or(QueryError::MissingStart)?,
        };
        let n = m.targets().len();
        let mut thresholds = vec![None; n];
        match self.mode {
            QueryMode::Strict | QueryMode::NonStrict => {
                for (name, p) in &self.thresholds {
                    let idx = m
                        .target_index(name)
                        .ok_or_else(|| QueryError::UnknownTarget(name.clone()))?;
                    if thresholds[idx].is_some() {
                        return Err(QueryError::DuplicateTarget(name.clone()));
                    }
                    if p.is_negative() || p > &Rational::one() {
                        return Err(QueryError::ThresholdRange(name.clone()));
                    }
                    thresholds[idx] = Some(p.clone());
                }
                for (i, t) in thresholds.iter().enumerate() {
                    if t.is_none() {
                        return Err(QueryError::MissingTarget(m.targets()[i].name.clone()));
                    }
                }
            }
            QueryMode::Lex => {
                let mut seen = vec![false; n];
                for name in &self.order {
                    let idx = m
                        .target_index(name)
                        .ok_or_else(|| QueryError::UnknownTarget(name.clone()))?;
                    if seen[idx] {
                        return Err(QueryError::DuplicateTarget(name.clone()));
                    }
                    seen[idx] = true;
                }
                for (i, s) in seen.iter().enumerate() {
                    if !s {
                        return Err(QueryError::MissingTarget(m.targets()[i].name.clone()));
                    }
                }
            }
            QueryMode::Frontier => {}
        }
        Ok(BoundQuery {
            mode: self.mode,
            thresholds: thresholds.into_iter().map(|t| t.unwrap_or_else(crate::num::zero)).collect(),
            order: self
                .order
                .iter()
                .map(|name| m.target_index(name).expect("validated above"))
                .collect(),
            start,
        })
    }
}
