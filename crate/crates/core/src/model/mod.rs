//! The MDP data model: states, actions, exact transition distributions,
//! priorities and named sink target sets, plus the sub-MDP closure used by
//! every pruning step.

mod chain;
mod clean;
mod query;
mod strategy;

pub use chain::{
    bounded_reach, expected_hitting_time, induce, reach_probability, reach_probability_mask,
    simulate, sure_parity_on_chain, tarjan_sccs, ChainState, InduceError, MarkovChain,
    SimulationReport,
};
pub use clean::{check_clean_targets, CleanTargetsReport};
pub use query::{BoundQuery, Query, QueryError, QueryMode};
pub use strategy::{FsmStrategy, MemorylessStrategy, Strategy, StrategyError};

use crate::num::Rational;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

pub const SINK_ACTION: &str = "*";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ActionId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetSet {
    pub name: String,
    pub states: BTreeSet<StateId>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("transition row of state `{state}` action `{action}` is not a probability distribution")]
    RowNotStochastic { state: String, action: String },
    #[error("target state `{state}` is not a sink")]
    TargetNotSink { state: String },
    #[error("state `{state}` has no enabled action")]
    NoEnabledAction { state: String },
    #[error("duplicate state `{name}`")]
    DuplicateState { name: String },
    #[error("unknown state `{name}`")]
    UnknownState { name: String },
    #[error("duplicate target name `{name}`")]
    DuplicateTargetName { name: String },
    #[error("model has no states")]
    Empty,
}

/// A validated finite MDP. Construct through [`MdpBuilder`]; every instance
/// satisfies the row-stochasticity, sink-target and enabledness invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mdp {
    state_names: Vec<String>,
    action_names: Vec<String>,
    /// Per state: enabled actions with their distributions, sorted by action id.
    transitions: Vec<Vec<(ActionId, Vec<(StateId, Rational)>)>>,
    priorities: Vec<u32>,
    targets: Vec<TargetSet>,
    initial: Option<StateId>,
}

#[derive(Debug, Clone, Default)]
pub struct MdpBuilder {
    states: Vec<(String, u32)>,
    index: BTreeMap<String, usize>,
    actions: Vec<String>,
    action_index: BTreeMap<String, usize>,
    rows: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
    targets: Vec<(String, BTreeSet<usize>)>,
    initial: Option<usize>,
    errors: Vec<ModelError>,
}

impl MdpBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn state(&mut self, name: &str, priority: u32) -> &mut Self {
        if self.index.contains_key(name) {
            self.errors.push(ModelError::DuplicateState { name: name.into() });
            return self;
        }
        self.index.insert(name.to_string(), self.states.len());
        self.states.push((name.to_string(), priority));
        self
    }

    /// Declares a sink with the canonical `*` self-loop and optional target
    /// memberships.
    pub fn sink(&mut self, name: &str, priority: u32, targets: &[&str]) -> &mut Self {
        self.state(name, priority);
        if let Some(&s) = self.index.get(name) {
            let a = self.intern_action(SINK_ACTION);
            self.rows.insert((s, a), vec![(s, Rational::one())]);
            for t in targets {
                self.target_membership(t, name);
            }
        }
        self
    }

    fn intern_action(&mut self, name: &str) -> usize {
        if let Some(&a) = self.action_index.get(name) {
            return a;
        }
        self.action_index.insert(name.to_string(), self.actions.len());
        self.actions.push(name.to_string());
        self.actions.len() - 1
    }

    pub fn action(&mut self, state: &str, action: &str, successors: &[(&str, Rational)]) -> &mut Self {
        let Some(&s) = self.index.get(state) else {
            self.errors.push(ModelError::UnknownState { name: state.into() });
            return self;
        };
        let a = self.intern_action(action);
        let mut row = Vec::with_capacity(successors.len());
        for (succ, w) in successors {
            match self.index.get(*succ) {
                Some(&t) => row.push((t, w.clone())),
                None => {
                    self.errors.push(ModelError::UnknownState { name: (*succ).into() });
                    return self;
                }
            }
        }
        self.rows.insert((s, a), row);
        self
    }

    pub fn target_membership(&mut self, target: &str, state: &str) -> &mut Self {
        let Some(&s) = self.index.get(state) else {
            self.errors.push(ModelError::UnknownState { name: state.into() });
            return self;
        };
        if let Some((_, set)) = self.targets.iter_mut().find(|(n, _)| n == target) {
            set.insert(s);
        } else {
            self.targets.push((target.to_string(), BTreeSet::from([s])));
        }
        self
    }

    /// Declares a target set by name even when it has no member states yet.
    pub fn target(&mut self, target: &str) -> &mut Self {
        if !self.targets.iter().any(|(n, _)| n == target) {
            self.targets.push((target.to_string(), BTreeSet::new()));
        }
        self
    }

    pub fn initial(&mut self, state: &str) -> &mut Self {
        match self.index.get(state) {
            Some(&s) => self.initial = Some(s),
            None => self.errors.push(ModelError::UnknownState { name: state.into() }),
        }
        self
    }

    /// Validates all model invariants and normalizes sinks to the canonical
    /// `*` self-loop action.
    pub fn build(self) -> Result<Mdp, ModelError> {
        if let Some(err) = self.errors.into_iter().next() {
            return Err(err);
        }
        if self.states.is_empty() {
            return Err(ModelError::Empty);
        }
        let n = self.states.len();
        let mut transitions: Vec<Vec<(usize, Vec<(usize, Rational)>)>> = vec![Vec::new(); n];
        for ((s, a), row) in &self.rows {
            transitions[*s].push((*a, row.clone()));
        }

        let mut seen = BTreeSet::new();
        for (name, _) in &self.targets {
            if !seen.insert(name.clone()) {
                return Err(ModelError::DuplicateTargetName { name: name.clone() });
            }
        }

        for (s, rows) in transitions.iter().enumerate() {
            if rows.is_empty() {
                return Err(ModelError::NoEnabledAction { state: self.states[s].0.clone() });
            }
            for (a, row) in rows {
                let mut total = Rational::zero();
                for (_, w) in row {
                    if w.is_negative() || w > &Rational::one() {
                        return Err(ModelError::RowNotStochastic {
                            state: self.states[s].0.clone(),
                            action: self.actions[*a].clone(),
                        });
                    }
                    total += w;
                }
                if !total.is_one() {
                    return Err(ModelError::RowNotStochastic {
                        state: self.states[s].0.clone(),
                        action: self.actions[*a].clone(),
                    });
                }
            }
        }

        let is_sink = |s: usize, transitions: &Vec<Vec<(usize, Vec<(usize, Rational)>)>>| {
            transitions[s]
                .iter()
                .all(|(_, row)| row.len() == 1 && row[0].0 == s && row[0].1.is_one())
        };

        for (_, members) in &self.targets {
            for &s in members {
                if !is_sink(s, &transitions) {
                    return Err(ModelError::TargetNotSink { state: self.states[s].0.clone() });
                }
            }
        }

        // Normalize sinks: a single canonical `*` self-loop.
        let mut actions = self.actions.clone();
        let mut action_index = self.action_index.clone();
        let star = *action_index.entry(SINK_ACTION.to_string()).or_insert_with(|| {
            actions.push(SINK_ACTION.to_string());
            actions.len() - 1
        });
        for s in 0..n {
            if is_sink(s, &transitions) {
                transitions[s] = vec![(star, vec![(s, Rational::one())])];
            }
            transitions[s].sort_by_key(|(a, _)| *a);
        }

        Ok(Mdp {
            state_names: self.states.iter().map(|(n, _)| n.clone()).collect(),
            action_names: actions,
            transitions: transitions
                .into_iter()
                .map(|rows| {
                    rows.into_iter()
                        .map(|(a, row)| {
                            (
                                ActionId(a),
                                row.into_iter().map(|(t, w)| (StateId(t), w)).collect(),
                            )
                        })
                        .collect()
                })
                .collect(),
            priorities: self.states.iter().map(|(_, p)| *p).collect(),
            targets: self
                .targets
                .into_iter()
                .map(|(name, members)| TargetSet {
                    name,
                    states: members.into_iter().map(StateId).collect(),
                })
                .collect(),
            initial: self.initial.map(StateId),
        })
    }
}

impl Mdp {
    pub fn num_states(&self) -> usize {
        self.state_names.len()
    }

    pub fn states(&self) -> impl Iterator<Item = StateId> {
        (0..self.num_states()).map(StateId)
    }

    pub fn state_name(&self, s: StateId) -> &str {
        &self.state_names[s.0]
    }

    pub fn state_by_name(&self, name: &str) -> Option<StateId> {
        self.state_names.iter().position(|n| n == name).map(StateId)
    }

    pub fn action_name(&self, a: ActionId) -> &str {
        &self.action_names[a.0]
    }

    pub fn action_by_name(&self, name: &str) -> Option<ActionId> {
        self.action_names.iter().position(|n| n == name).map(ActionId)
    }

    pub fn priority(&self, s: StateId) -> u32 {
        self.priorities[s.0]
    }

    pub fn max_priority(&self) -> u32 {
        self.priorities.iter().copied().max().unwrap_or(0)
    }

    pub fn initial(&self) -> Option<StateId> {
        self.initial
    }

    pub fn enabled(&self, s: StateId) -> &[(ActionId, Vec<(StateId, Rational)>)] {
        &self.transitions[s.0]
    }

    pub fn distribution(&self, s: StateId, a: ActionId) -> Option<&[(StateId, Rational)]> {
        self.transitions[s.0]
            .iter()
            .find(|(b, _)| *b == a)
            .map(|(_, row)| row.as_slice())
    }

    pub fn is_sink(&self, s: StateId) -> bool {
        self.transitions[s.0]
            .iter()
            .all(|(_, row)| row.len() == 1 && row[0].0 == s && row[0].1.is_one())
    }

    pub fn targets(&self) -> &[TargetSet] {
        &self.targets
    }

    pub fn target_names(&self) -> Vec<&str> {
        self.targets.iter().map(|t| t.name.as_str()).collect()
    }

    pub fn target_index(&self, name: &str) -> Option<usize> {
        self.targets.iter().position(|t| t.name == name)
    }

    /// Union of all target sets.
    pub fn target_union(&self) -> BTreeSet<StateId> {
        let mut union = BTreeSet::new();
        for t in &self.targets {
            union.extend(t.states.iter().copied());
        }
        union
    }

    pub fn in_target(&self, s: StateId, target: usize) -> bool {
        self.targets[target].states.contains(&s)
    }

    /// Number of enabled non-sink state-action pairs; the size guard for
    /// exhaustive strategy sweeps.
    pub fn non_sink_pairs(&self) -> usize {
        self.states()
            .filter(|&s| !self.is_sink(s))
            .map(|s| self.enabled(s).len())
            .sum()
    }

    /// Largest sub-MDP inside `keep`: repeatedly drops actions whose support
    /// leaves the kept set and states left with no action, until stable.
    /// The empty result is valid; callers interpret a missing start state.
    pub fn restrict(&self, keep: &BTreeSet<StateId>) -> Mdp {
        let mut alive: Vec<bool> = (0..self.num_states()).map(|i| keep.contains(&StateId(i))).collect();
        loop {
            let mut changed = false;
            for s in 0..self.num_states() {
                if !alive[s] {
                    continue;
                }
                let has_action = self.transitions[s].iter().any(|(_, row)| {
                    row.iter().all(|(t, _)| alive[t.0])
                });
                if !has_action {
                    alive[s] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        self.sub_mdp(&alive, |_, _| true)
    }

    /// Sub-MDP over `alive` states keeping only actions accepted by
    /// `keep_action` whose support stays alive.
    pub(crate) fn sub_mdp<F>(&self, alive: &[bool], keep_action: F) -> Mdp
    where
        F: Fn(StateId, ActionId) -> bool,
    {
        let mut remap = vec![usize::MAX; self.num_states()];
        let mut state_names = Vec::new();
        let mut priorities = Vec::new();
        for s in 0..self.num_states() {
            if alive[s] {
                remap[s] = state_names.len();
                state_names.push(self.state_names[s].clone());
                priorities.push(self.priorities[s]);
            }
        }
        let transitions: Vec<Vec<(ActionId, Vec<(StateId, Rational)>)>> = (0..self.num_states())
            .filter(|&s| alive[s])
            .map(|s| {
                self.transitions[s]
                    .iter()
                    .filter(|(a, row)| {
                        keep_action(StateId(s), *a) && row.iter().all(|(t, _)| alive[t.0])
                    })
                    .map(|(a, row)| {
                        (
                            *a,
                            row.iter()
                                .map(|(t, w)| (StateId(remap[t.0]), w.clone()))
                                .collect(),
                        )
                    })
                    .collect()
            })
            .collect();
        let targets = self
            .targets
            .iter()
            .map(|t| TargetSet {
                name: t.name.clone(),
                states: t
                    .states
                    .iter()
                    .filter(|s| alive[s.0])
                    .map(|s| StateId(remap[s.0]))
                    .collect(),
            })
            .collect();
        let initial = self.initial.filter(|s| alive[s.0]).map(|s| StateId(remap[s.0]));
        Mdp {
            state_names,
            action_names: self.action_names.clone(),
            transitions,
            priorities,
            targets,
            initial,
        }
    }

    /// Keeps only the listed non-sink (state, action) pairs (sinks keep their
    /// canonical action), then closes under the restriction rule. States in
    /// `keep_states` survive if an action remains after closure.
    pub fn restrict_actions(
        &self,
        keep_states: &BTreeSet<StateId>,
        keep: &BTreeSet<(StateId, ActionId)>,
    ) -> Mdp {
        let alive: Vec<bool> = (0..self.num_states())
            .map(|s| keep_states.contains(&StateId(s)))
            .collect();
        let remapped = self.sub_mdp(&alive, |s, a| self.is_sink(s) || keep.contains(&(s, a)));
        let all: BTreeSet<StateId> = remapped.states().collect();
        remapped.restrict(&all)
    }
}

impl fmt::Display for Mdp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.states() {
            let kind = if self.is_sink(s) { "sink" } else { "state" };
            write!(f, "{} {} priority {}", kind, self.state_name(s), self.priority(s))?;
            let memberships: Vec<&str> = self
                .targets
                .iter()
                .filter(|t| t.states.contains(&s))
                .map(|t| t.name.as_str())
                .collect();
            if !memberships.is_empty() {
                write!(f, " target {}", memberships.join(" "))?;
            }
            writeln!(f)?;
        }
        if let Some(init) = self.initial {
            writeln!(f, "init {}", self.state_name(init))?;
        }
        for s in self.states() {
            if self.is_sink(s) {
                continue;
            }
            for (a, row) in self.enabled(s) {
                write!(f, "act {} {}", self.state_name(s), self.action_name(*a))?;
                for (t, w) in row {
                    write!(f, " {}:{}", self.state_name(*t), w)?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
