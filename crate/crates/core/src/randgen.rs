//! Seeded random model and chain generators for the randomized self-check
//! suites (oracle agreement, bound guarantees, monotonicity properties).

use crate::model::{Mdp, MdpBuilder, MarkovChain, ChainState, StateId};
use crate::num::Rational;
use crate::rng::SplitMix64;
use num_bigint::BigInt;
use num_traits::Zero;

/// Random small MDP with every target state a sink. Priorities are from
/// `0..=max_priority`; sinks get even priorities so cleaning is meaningful.
pub struct RandomMdpSpec {
    pub max_states: usize,
    pub max_actions: usize,
    pub max_priority: u32,
    pub num_targets: usize,
}

pub fn random_mdp(rng: &mut SplitMix64, spec: &RandomMdpSpec) -> Mdp {
    let non_sinks = 1 + rng.below(spec.max_states as u64) as usize;
    let sinks = 1 + rng.below(2) as usize;
    let mut b = MdpBuilder::new();
    let names: Vec<String> = (0..non_sinks).map(|i| format!("s{i}")).collect();
    for name in &names {
        let priority = rng.below(spec.max_priority as u64 + 1) as u32;
        b.state(name, priority);
    }
    let sink_names: Vec<String> = (0..sinks).map(|i| format!("f{i}")).collect();
    let target_names: Vec<String> = (0..spec.num_targets).map(|i| format!("F{i}")).collect();
    for (i, name) in sink_names.iter().enumerate() {
        // Even sink priority, possibly nonzero.
        let priority = 2 * rng.below(spec.max_priority as u64 / 2 + 1) as u32;
        let members: Vec<&str> = target_names
            .iter()
            .enumerate()
            .filter(|(k, _)| *k == i % spec.num_targets.max(1) || rng.below(2) == 0)
            .map(|(_, n)| n.as_str())
            .collect();
        b.sink(name, priority, &members);
    }
    for t in &target_names {
        b.target(t);
    }

    let all: Vec<&String> = names.iter().chain(sink_names.iter()).collect();
    for name in &names {
        let actions = 1 + rng.below(spec.max_actions as u64) as usize;
        for a in 0..actions {
            let action = format!("a{a}");
            // Random distribution over up to 3 successors with denominator 4.
            let succ_count = 1 + rng.below(3) as usize;
            let mut weights = vec![0u64; succ_count];
            for _ in 0..4 {
                let k = rng.below(succ_count as u64) as usize;
                weights[k] += 1;
            }
            let mut row: Vec<(&str, Rational)> = Vec::new();
            for (k, w) in weights.iter().enumerate() {
                if *w == 0 {
                    continue;
                }
                let succ = all[rng.below(all.len() as u64) as usize];
                let weight = Rational::new(BigInt::from(*w), BigInt::from(4));
                if let Some(entry) = row.iter_mut().find(|(n, _)| *n == succ.as_str()) {
                    entry.1 += weight;
                } else {
                    row.push((succ.as_str(), weight));
                }
                let _ = k;
            }
            b.action(name, &action, &row);
        }
    }
    b.initial(&names[0]);
    b.build().expect("generated model is valid by construction")
}

/// Random Markov chain over at most `max_states` states with one target set;
/// the last state is an absorbing target, rows have denominator 4.
pub fn random_chain(rng: &mut SplitMix64, max_states: usize) -> MarkovChain {
    let n = 2 + rng.below(max_states.max(3) as u64 - 1) as usize;
    let target = n - 1;
    let mut trans: Vec<Vec<(usize, Rational)>> = Vec::new();
    for s in 0..n {
        if s == target {
            trans.push(vec![(s, Rational::new(BigInt::from(1), BigInt::from(1)))]);
            continue;
        }
        let mut weights = vec![0u64; n];
        for _ in 0..4 {
            weights[rng.below(n as u64) as usize] += 1;
        }
        let row: Vec<(usize, Rational)> = weights
            .iter()
            .enumerate()
            .filter(|(_, w)| **w > 0)
            .map(|(t, w)| (t, Rational::new(BigInt::from(*w), BigInt::from(4))))
            .collect();
        trans.push(row);
    }
    let priorities = vec![0; n];
    let target_flags: Vec<Vec<bool>> = (0..n).map(|s| vec![s == target]).collect();
    MarkovChain {
        states: (0..n)
            .map(|s| ChainState { state: StateId(s), label: format!("c{s}") })
            .collect(),
        trans,
        initial: 0,
        priorities,
        target_flags,
        num_targets: 1,
    }
}

/// A chain's exact reach probability of its single target, for test oracles.
pub fn chain_reach(chain: &MarkovChain) -> Rational {
    crate::model::reach_probability(chain, 0)[chain.initial].clone()
}

/// True when the chain has positive probability of reaching the target.
pub fn chain_reaches(chain: &MarkovChain) -> bool {
    !chain_reach(chain).is_zero()
}
