//! Runtime registry of the decision procedures: each query mode is served by
//! one procedure behind a common trait, selected by name from the parsed
//! query. New procedures register by appending to [`registry`].

use super::{decide_nonstrict, decide_strict, lex_optimize, PipelineConfig, PipelineError, Verdict};
use crate::geometry::{frontier, Polytope};
use crate::model::{BoundQuery, Mdp, QueryMode};

pub enum ProcedureOutcome {
    Decision(Verdict),
    Frontier(Polytope),
}

pub trait DecisionProcedure: Sync {
    fn name(&self) -> &'static str;
    fn handles(&self, mode: QueryMode) -> bool;
    fn run(
        &self,
        m: &Mdp,
        query: &BoundQuery,
        cfg: &PipelineConfig,
    ) -> Result<ProcedureOutcome, PipelineError>;
}

struct StrictProcedure;

impl DecisionProcedure for StrictProcedure {
    fn name(&self) -> &'static str {
        "strict-thresholds"
    }
    fn handles(&self, mode: QueryMode) -> bool {
        mode == QueryMode::Strict
    }
    fn run(
        &self,
        m: &Mdp,
        query: &BoundQuery,
        cfg: &PipelineConfig,
    ) -> Result<ProcedureOutcome, PipelineError> {
        decide_strict(m, &query.thresholds, query.start, cfg).map(ProcedureOutcome::Decision)
    }
}

struct NonStrictProcedure;

impl DecisionProcedure for NonStrictProcedure {
    fn name(&self) -> &'static str {
        "non-strict-thresholds"
    }
    fn handles(&self, mode: QueryMode) -> bool {
        mode == QueryMode::NonStrict
    }
    fn run(
        &self,
        m: &Mdp,
        query: &BoundQuery,
        cfg: &PipelineConfig,
    ) -> Result<ProcedureOutcome, PipelineError> {
        decide_nonstrict(m, &query.thresholds, query.start, cfg).map(ProcedureOutcome::Decision)
    }
}

struct LexProcedure;

impl DecisionProcedure for LexProcedure {
    fn name(&self) -> &'static str {
        "lexicographic-max"
    }
    fn handles(&self, mode: QueryMode) -> bool {
        mode == QueryMode::Lex
    }
    fn run(
        &self,
        m: &Mdp,
        query: &BoundQuery,
        cfg: &PipelineConfig,
    ) -> Result<ProcedureOutcome, PipelineError> {
        lex_optimize(m, &query.order, query.start, cfg).map(ProcedureOutcome::Decision)
    }
}

struct FrontierProcedure;

impl DecisionProcedure for FrontierProcedure {
    fn name(&self) -> &'static str {
        "frontier"
    }
    fn handles(&self, mode: QueryMode) -> bool {
        mode == QueryMode::Frontier
    }
    fn run(
        &self,
        m: &Mdp,
        query: &BoundQuery,
        _cfg: &PipelineConfig,
    ) -> Result<ProcedureOutcome, PipelineError> {
        frontier(m, query.start)
            .map(ProcedureOutcome::Frontier)
            .map_err(PipelineError::from)
    }
}

/// All registered decision procedures, in dispatch order.
pub fn registry() -> Vec<Box<dyn DecisionProcedure>> {
    vec![
        Box::new(StrictProcedure),
        Box::new(NonStrictProcedure),
        Box::new(LexProcedure),
        Box::new(FrontierProcedure),
    ]
}

/// The procedure serving a query mode.
pub fn procedure_for(mode: QueryMode) -> Option<Box<dyn DecisionProcedure>> {
    registry().into_iter().find(|p| p.handles(mode))
}
