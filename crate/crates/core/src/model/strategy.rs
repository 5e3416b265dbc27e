//! Compositional witness strategies.
//!
//! Strategies reference states and actions by name so that one witness can be
//! induced on a model, on its projections, and on pruned sub-models without
//! re-indexing.

use crate::num::Rational;
use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StrategyError {
    #[error("strategy plays action `{action}` at state `{state}` where it is not enabled")]
    ActionNotEnabled { state: String, action: String },
    #[error("strategy has no decision for state `{state}`")]
    MissingDecision { state: String },
    #[error("output distribution at `{state}` does not sum to 1")]
    OutputNotStochastic { state: String },
    #[error("mixture weights must be positive and sum to 1")]
    BadMixtureWeights,
}

/// Map state name -> distribution over action names.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MemorylessStrategy {
    pub choices: BTreeMap<String, Vec<(String, Rational)>>,
}

impl MemorylessStrategy {
    pub fn deterministic(pairs: &[(&str, &str)]) -> Self {
        let choices = pairs
            .iter()
            .map(|(s, a)| (s.to_string(), vec![(a.to_string(), Rational::one())]))
            .collect();
        MemorylessStrategy { choices }
    }

    pub fn decision(&self, state: &str) -> Option<&[(String, Rational)]> {
        self.choices.get(state).map(|v| v.as_slice())
    }

    pub fn set(&mut self, state: &str, action: &str) {
        self.choices
            .insert(state.to_string(), vec![(action.to_string(), Rational::one())]);
    }

    pub fn set_randomized(&mut self, state: &str, dist: Vec<(String, Rational)>) {
        self.choices.insert(state.to_string(), dist);
    }

    pub fn is_deterministic(&self) -> bool {
        self.choices.values().all(|d| d.len() == 1)
    }

    fn validate(&self) -> Result<(), StrategyError> {
        for (state, dist) in &self.choices {
            let total: Rational = dist.iter().map(|(_, w)| w.clone()).sum();
            if !total.is_one() || dist.iter().any(|(_, w)| !w.is_positive()) {
                return Err(StrategyError::OutputNotStochastic { state: state.clone() });
            }
        }
        Ok(())
    }
}

/// Finite-state-machine strategy: at model state `s` in mode `q` play
/// `output[q][s]` and move to mode `delta[q][s]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FsmStrategy {
    pub num_modes: usize,
    pub initial_mode: usize,
    pub delta: BTreeMap<(usize, String), usize>,
    pub output: BTreeMap<(usize, String), Vec<(String, Rational)>>,
}

impl FsmStrategy {
    pub fn decision(&self, mode: usize, state: &str) -> Option<&[(String, Rational)]> {
        self.output.get(&(mode, state.to_string())).map(|v| v.as_slice())
    }

    pub fn next_mode(&self, mode: usize, state: &str) -> usize {
        *self.delta.get(&(mode, state.to_string())).unwrap_or(&mode)
    }

    /// Drops modes that no (mode, state) transition can reach from the
    /// initial mode and renumbers the rest.
    pub fn trim_reachable(&self) -> FsmStrategy {
        let mut reachable = vec![false; self.num_modes];
        let mut queue = vec![self.initial_mode];
        reachable[self.initial_mode] = true;
        while let Some(q) = queue.pop() {
            for ((mode, _), next) in &self.delta {
                if *mode == q && !reachable[*next] {
                    reachable[*next] = true;
                    queue.push(*next);
                }
            }
        }
        let mut remap = vec![usize::MAX; self.num_modes];
        let mut count = 0;
        for (q, &r) in reachable.iter().enumerate() {
            if r {
                remap[q] = count;
                count += 1;
            }
        }
        FsmStrategy {
            num_modes: count,
            initial_mode: remap[self.initial_mode],
            delta: self
                .delta
                .iter()
                .filter(|((q, _), _)| reachable[*q])
                .map(|((q, s), next)| ((remap[*q], s.clone()), remap[*next]))
                .collect(),
            output: self
                .output
                .iter()
                .filter(|((q, _), _)| reachable[*q])
                .map(|((q, s), d)| ((remap[*q], s.clone()), d.clone()))
                .collect(),
        }
    }

    fn validate(&self) -> Result<(), StrategyError> {
        for ((_, state), dist) in &self.output {
            let total: Rational = dist.iter().map(|(_, w)| w.clone()).sum();
            if !total.is_one() || dist.iter().any(|(_, w)| !w.is_positive()) {
                return Err(StrategyError::OutputNotStochastic { state: state.clone() });
            }
        }
        Ok(())
    }
}

/// A witness strategy in one of the compositional forms the decision
/// procedures emit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strategy {
    Memoryless(MemorylessStrategy),
    Fsm(FsmStrategy),
    /// Play `first` while the step counter is at most `horizon`, then switch
    /// to `second` forever. The counter is kept symbolically; the induced
    /// chain only materializes it below the configured cap.
    Stitched {
        first: MemorylessStrategy,
        horizon: BigUint,
        second: Box<Strategy>,
    },
    /// Initial coin flip over sub-strategies with positive weights summing to 1.
    Mixture(Vec<(Rational, Strategy)>),
}

impl Strategy {
    pub fn memoryless_deterministic(pairs: &[(&str, &str)]) -> Strategy {
        Strategy::Memoryless(MemorylessStrategy::deterministic(pairs))
    }

    pub fn stitched(first: MemorylessStrategy, horizon: u64, second: Strategy) -> Strategy {
        Strategy::Stitched {
            first,
            horizon: BigUint::from(horizon),
            second: Box::new(second),
        }
    }

    pub fn validate(&self) -> Result<(), StrategyError> {
        match self {
            Strategy::Memoryless(m) => m.validate(),
            Strategy::Fsm(f) => f.validate(),
            Strategy::Stitched { first, second, .. } => {
                first.validate()?;
                second.validate()
            }
            Strategy::Mixture(parts) => {
                let total: Rational = parts.iter().map(|(w, _)| w.clone()).sum();
                if !total.is_one() || parts.iter().any(|(w, _)| !w.is_positive()) {
                    return Err(StrategyError::BadMixtureWeights);
                }
                for (_, s) in parts {
                    s.validate()?;
                }
                Ok(())
            }
        }
    }

    /// A short human-readable classification for reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Strategy::Memoryless(m) if m.is_deterministic() => "memoryless deterministic",
            Strategy::Memoryless(_) => "memoryless randomized",
            Strategy::Fsm(_) => "finite-state",
            Strategy::Stitched { .. } => "stitched",
            Strategy::Mixture(_) => "mixture",
        }
    }

    /// Memory size of the witness: number of distinct memory modes needed by
    /// a state-machine presentation of this strategy.
    pub fn memory_size(&self) -> BigUint {
        match self {
            Strategy::Memoryless(_) => BigUint::one(),
            Strategy::Fsm(f) => BigUint::from(f.num_modes.max(1)),
            Strategy::Stitched { horizon, second, .. } => {
                // counter values 0..=horizon plus the tail machine
                horizon + BigUint::one() + second.memory_size()
            }
            Strategy::Mixture(parts) => parts
                .iter()
                .map(|(_, s)| s.memory_size())
                .fold(BigUint::zero(), |a, b| a + b)
                .max(BigUint::one()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    #[test]
    fn mixture_weights_must_sum_to_one() {
        let part = Strategy::memoryless_deterministic(&[("s", "a")]);
        let bad = Strategy::Mixture(vec![(rat(1, 2), part.clone()), (rat(1, 3), part.clone())]);
        assert!(bad.validate().is_err());
        let good = Strategy::Mixture(vec![(rat(1, 2), part.clone()), (rat(1, 2), part)]);
        assert!(good.validate().is_ok());
    }

    #[test]
    fn fsm_trim_drops_unreachable_modes() {
        let fsm = FsmStrategy {
            num_modes: 3,
            initial_mode: 0,
            delta: BTreeMap::from([((0, "s".to_string()), 1), ((1, "s".to_string()), 0)]),
            output: BTreeMap::from([
                ((0, "s".to_string()), vec![("a".to_string(), rat(1, 1))]),
                ((1, "s".to_string()), vec![("b".to_string(), rat(1, 1))]),
                ((2, "s".to_string()), vec![("a".to_string(), rat(1, 1))]),
            ]),
        };
        let trimmed = fsm.trim_reachable();
        assert_eq!(trimmed.num_modes, 2);
    }
}
