//! Induced Markov chains and their exact analyses: reachability values,
//! truncated expected hitting times, the sure-parity cycle check, bounded
//! transient analysis and seeded simulation.

use super::strategy::Strategy;
use super::{Mdp, StateId};
use crate::lp::solve_linear_system;
use crate::num::Rational;
use crate::rng::SplitMix64;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InduceError {
    #[error("strategy plays `{action}` at `{state}` where it is not enabled")]
    ActionNotEnabled { state: String, action: String },
    #[error("strategy has no decision for state `{state}`")]
    MissingDecision { state: String },
    #[error("stitched horizon {horizon} exceeds the materialization cap {cap}")]
    HorizonAboveCap { horizon: BigUint, cap: BigUint },
    #[error("unsupported strategy composition: {0}")]
    Unsupported(&'static str),
}

/// One chain state: an underlying model state plus the strategy's memory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainState {
    pub state: StateId,
    pub label: String,
}

#[derive(Debug, Clone)]
pub struct MarkovChain {
    pub states: Vec<ChainState>,
    pub trans: Vec<Vec<(usize, Rational)>>,
    pub initial: usize,
    pub priorities: Vec<u32>,
    /// `target_flags[s][i]` iff chain state `s` projects into target `i`.
    pub target_flags: Vec<Vec<bool>>,
    pub num_targets: usize,
}

impl MarkovChain {
    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn target_mask(&self, target: usize) -> Vec<bool> {
        self.target_flags.iter().map(|f| f[target]).collect()
    }

    /// Reach probability of each target from the initial state.
    pub fn reach_vector(&self) -> Vec<Rational> {
        (0..self.num_targets)
            .map(|i| reach_probability(self, i)[self.initial].clone())
            .collect()
    }
}

/// Strategy memory during product construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Cursor {
    Leaf,
    Fsm(usize),
    StitchCount(u64),
    StitchTail(Box<Cursor>),
}

fn initial_cursor(strategy: &Strategy) -> Result<Cursor, InduceError> {
    Ok(match strategy {
        Strategy::Memoryless(_) => Cursor::Leaf,
        Strategy::Fsm(f) => Cursor::Fsm(f.initial_mode),
        Strategy::Stitched { .. } => Cursor::StitchCount(0),
        Strategy::Mixture(_) => {
            return Err(InduceError::Unsupported("mixture nested below another combinator"))
        }
    })
}

fn decision<'a>(
    strategy: &'a Strategy,
    cursor: &Cursor,
    state: &str,
) -> Result<&'a [(String, Rational)], InduceError> {
    match (strategy, cursor) {
        (Strategy::Memoryless(m), Cursor::Leaf) => m
            .decision(state)
            .ok_or_else(|| InduceError::MissingDecision { state: state.into() }),
        (Strategy::Fsm(f), Cursor::Fsm(q)) => f
            .decision(*q, state)
            .ok_or_else(|| InduceError::MissingDecision { state: state.into() }),
        (Strategy::Stitched { first, .. }, Cursor::StitchCount(_)) => first
            .decision(state)
            .ok_or_else(|| InduceError::MissingDecision { state: state.into() }),
        (Strategy::Stitched { second, .. }, Cursor::StitchTail(inner)) => {
            decision(second, inner, state)
        }
        _ => Err(InduceError::Unsupported("cursor does not match strategy shape")),
    }
}

fn advance(strategy: &Strategy, cursor: &Cursor, state: &str) -> Result<Cursor, InduceError> {
    Ok(match (strategy, cursor) {
        (Strategy::Memoryless(_), Cursor::Leaf) => Cursor::Leaf,
        (Strategy::Fsm(f), Cursor::Fsm(q)) => Cursor::Fsm(f.next_mode(*q, state)),
        (Strategy::Stitched { horizon, second, .. }, Cursor::StitchCount(k)) => {
            if BigUint::from(*k) < *horizon {
                Cursor::StitchCount(k + 1)
            } else {
                Cursor::StitchTail(Box::new(initial_cursor(second)?))
            }
        }
        (Strategy::Stitched { second, .. }, Cursor::StitchTail(inner)) => {
            Cursor::StitchTail(Box::new(advance(second, inner, state)?))
        }
        _ => return Err(InduceError::Unsupported("cursor does not match strategy shape")),
    })
}

fn cursor_label(cursor: &Cursor) -> String {
    match cursor {
        Cursor::Leaf => String::new(),
        Cursor::Fsm(q) => format!("#{q}"),
        Cursor::StitchCount(k) => format!("@{k}"),
        Cursor::StitchTail(inner) => format!("!{}", cursor_label(inner)),
    }
}

/// Builds the induced Markov chain of `strategy` on `m` from `start`,
/// trimmed to reachable product states.
///
/// Stitched horizons are materialized as counter modes only up to `cap`;
/// larger horizons must go through the certified verification path instead.
pub fn induce(
    m: &Mdp,
    strategy: &Strategy,
    start: StateId,
    cap: &BigUint,
) -> Result<MarkovChain, InduceError> {
    if let Strategy::Mixture(parts) = strategy {
        return induce_mixture(m, parts, start, cap);
    }
    check_horizons(strategy, cap)?;

    let mut states: Vec<(StateId, Cursor)> = Vec::new();
    let mut index: HashMap<(usize, Cursor), usize> = HashMap::new();
    let mut trans: Vec<Vec<(usize, Rational)>> = Vec::new();

    let init_cursor = initial_cursor(strategy)?;
    states.push((start, init_cursor.clone()));
    index.insert((start.0, init_cursor), 0);

    let mut frontier = 0;
    while frontier < states.len() {
        let (s, cursor) = states[frontier].clone();
        let name = m.state_name(s).to_string();
        let action_dist = decision(strategy, &cursor, &name)?.to_vec();
        let next_cursor = advance(strategy, &cursor, &name)?;

        let mut row: HashMap<usize, Rational> = HashMap::new();
        for (action_name, weight) in &action_dist {
            let action = m.action_by_name(action_name).ok_or_else(|| {
                InduceError::ActionNotEnabled { state: name.clone(), action: action_name.clone() }
            })?;
            let dist = m.distribution(s, action).ok_or_else(|| {
                InduceError::ActionNotEnabled { state: name.clone(), action: action_name.clone() }
            })?;
            for (t, p) in dist {
                let key = (t.0, next_cursor.clone());
                let idx = *index.entry(key.clone()).or_insert_with(|| {
                    states.push((*t, next_cursor.clone()));
                    states.len() - 1
                });
                let mass = weight * p;
                row.entry(idx).and_modify(|w| *w += &mass).or_insert(mass);
            }
        }
        let mut row: Vec<(usize, Rational)> = row.into_iter().collect();
        row.sort_by_key(|(t, _)| *t);
        trans.push(row);
        frontier += 1;
    }

    let priorities = states.iter().map(|(s, _)| m.priority(*s)).collect();
    let target_flags = states
        .iter()
        .map(|(s, _)| (0..m.targets().len()).map(|i| m.in_target(*s, i)).collect())
        .collect();
    let chain_states = states
        .iter()
        .map(|(s, c)| ChainState {
            state: *s,
            label: format!("{}{}", m.state_name(*s), cursor_label(c)),
        })
        .collect();
    Ok(MarkovChain {
        states: chain_states,
        trans,
        initial: 0,
        priorities,
        target_flags,
        num_targets: m.targets().len(),
    })
}

fn check_horizons(strategy: &Strategy, cap: &BigUint) -> Result<(), InduceError> {
    match strategy {
        Strategy::Stitched { horizon, second, .. } => {
            if horizon > cap {
                return Err(InduceError::HorizonAboveCap {
                    horizon: horizon.clone(),
                    cap: cap.clone(),
                });
            }
            check_horizons(second, cap)
        }
        Strategy::Mixture(parts) => parts.iter().try_for_each(|(_, s)| check_horizons(s, cap)),
        _ => Ok(()),
    }
}

/// Mixture: a fresh initial branching state carrying the mixture weights,
/// followed by each component's induced chain.
fn induce_mixture(
    m: &Mdp,
    parts: &[(Rational, Strategy)],
    start: StateId,
    cap: &BigUint,
) -> Result<MarkovChain, InduceError> {
    let mut states = vec![ChainState {
        state: start,
        label: format!("{}&mix", m.state_name(start)),
    }];
    let mut trans: Vec<Vec<(usize, Rational)>> = vec![Vec::new()];
    let mut priorities = vec![m.priority(start)];
    let mut target_flags = vec![(0..m.targets().len()).map(|i| m.in_target(start, i)).collect()];

    for (k, (weight, part)) in parts.iter().enumerate() {
        let sub = induce(m, part, start, cap)?;
        let offset = states.len();
        trans[0].push((offset + sub.initial, weight.clone()));
        for (i, cs) in sub.states.iter().enumerate() {
            states.push(ChainState {
                state: cs.state,
                label: format!("{}.{}", k, cs.label),
            });
            trans.push(
                sub.trans[i]
                    .iter()
                    .map(|(t, w)| (offset + t, w.clone()))
                    .collect(),
            );
            priorities.push(sub.priorities[i]);
            target_flags.push(sub.target_flags[i].clone());
        }
    }
    Ok(MarkovChain {
        states,
        trans,
        initial: 0,
        priorities,
        target_flags,
        num_targets: m.targets().len(),
    })
}

/// Tarjan SCC decomposition; components are emitted successors-first, which
/// is exactly the order needed for bottom-up value propagation.
pub fn tarjan_sccs(trans: &[Vec<(usize, Rational)>]) -> Vec<Vec<usize>> {
    let n = trans.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut sccs: Vec<Vec<usize>> = Vec::new();
    let mut counter = 0;

    // Iterative Tarjan: (vertex, next-successor-offset) frames.
    let mut call: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        call.push((root, 0));
        while let Some(&mut (v, ref mut off)) = call.last_mut() {
            if *off == 0 {
                index[v] = counter;
                low[v] = counter;
                counter += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if let Some(&(w, _)) = trans[v].get(*off) {
                *off += 1;
                if index[w] == usize::MAX {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    sccs.push(comp);
                }
                call.pop();
                if let Some(&mut (parent, _)) = call.last_mut() {
                    low[parent] = low[parent].min(low[v]);
                }
            }
        }
    }
    sccs
}

/// Exact probabilities of eventually hitting the masked state set, solved
/// SCC by SCC so that layered chains stay cheap.
pub fn reach_probability_mask(chain: &MarkovChain, fmask: &[bool]) -> Vec<Rational> {
    let n = chain.num_states();
    let mut value: Vec<Option<Rational>> = vec![None; n];
    for s in 0..n {
        if fmask[s] {
            value[s] = Some(Rational::one());
        }
    }
    for scc in tarjan_sccs(&chain.trans) {
        let unknown: Vec<usize> = scc.iter().copied().filter(|&s| value[s].is_none()).collect();
        if unknown.is_empty() {
            continue;
        }
        let in_scc: Vec<bool> = {
            let mut mask = vec![false; n];
            for &s in &scc {
                mask[s] = true;
            }
            mask
        };
        // Bottom SCC without target states: unreachable target, value zero.
        let escapes = scc
            .iter()
            .any(|&s| chain.trans[s].iter().any(|(t, _)| !in_scc[*t] || fmask[*t]));
        if !escapes {
            for &s in &unknown {
                value[s] = Some(Rational::zero());
            }
            continue;
        }
        if unknown.len() == 1 && chain.trans[unknown[0]].iter().all(|(t, _)| *t != unknown[0]) {
            // Transient singleton: plain weighted sum over known successors.
            let s = unknown[0];
            let mut v = Rational::zero();
            for (t, w) in &chain.trans[s] {
                v += w * value[*t].as_ref().expect("successor value computed");
            }
            value[s] = Some(v);
            continue;
        }
        let pos: HashMap<usize, usize> = unknown.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let k = unknown.len();
        let mut a = vec![vec![Rational::zero(); k]; k];
        let mut b = vec![Rational::zero(); k];
        for (i, &s) in unknown.iter().enumerate() {
            a[i][i] = Rational::one();
            for (t, w) in &chain.trans[s] {
                match pos.get(t) {
                    Some(&j) => a[i][j] -= w,
                    None => b[i] += w * value[*t].as_ref().expect("successor value computed"),
                }
            }
        }
        let x = solve_linear_system(&a, &b)
            .expect("reach system is nonsingular on escaping components");
        for (i, &s) in unknown.iter().enumerate() {
            value[s] = Some(x[i].clone());
        }
    }
    value.into_iter().map(|v| v.expect("all values computed")).collect()
}

/// Exact `Pr_s(eventually target_i)` for every chain state.
pub fn reach_probability(chain: &MarkovChain, target: usize) -> Vec<Rational> {
    reach_probability_mask(chain, &chain.target_mask(target))
}

/// Exact truncated expected hitting times: the unique solution of
/// `x_s = Pr_s(reach F) + sum_t P(s,t) x_t` on states outside `F` that can
/// reach `F`, and zero elsewhere.
pub fn expected_hitting_time(chain: &MarkovChain, fmask: &[bool]) -> Vec<Rational> {
    let n = chain.num_states();
    let pr = reach_probability_mask(chain, fmask);
    let active: Vec<bool> = (0..n).map(|s| !fmask[s] && pr[s].is_positive()).collect();
    let mut value: Vec<Option<Rational>> = (0..n)
        .map(|s| if active[s] { None } else { Some(Rational::zero()) })
        .collect();

    for scc in tarjan_sccs(&chain.trans) {
        let unknown: Vec<usize> = scc.iter().copied().filter(|&s| value[s].is_none()).collect();
        if unknown.is_empty() {
            continue;
        }
        if unknown.len() == 1 && chain.trans[unknown[0]].iter().all(|(t, _)| *t != unknown[0]) {
            let s = unknown[0];
            let mut v = pr[s].clone();
            for (t, w) in &chain.trans[s] {
                v += w * value[*t].as_ref().expect("successor computed");
            }
            value[s] = Some(v);
            continue;
        }
        let pos: HashMap<usize, usize> = unknown.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let k = unknown.len();
        let mut a = vec![vec![Rational::zero(); k]; k];
        let mut b: Vec<Rational> = unknown.iter().map(|&s| pr[s].clone()).collect();
        for (i, &s) in unknown.iter().enumerate() {
            a[i][i] = Rational::one();
            for (t, w) in &chain.trans[s] {
                match pos.get(t) {
                    Some(&j) => a[i][j] -= w,
                    None => b[i] += w * value[*t].as_ref().expect("successor computed"),
                }
            }
        }
        let x = solve_linear_system(&a, &b)
            .expect("hitting-time system is nonsingular on states that can reach F");
        for (i, &s) in unknown.iter().enumerate() {
            value[s] = Some(x[i].clone());
        }
    }
    value.into_iter().map(|v| v.expect("all values computed")).collect()
}

/// Sure satisfaction of the parity objective on every path from the initial
/// state: no reachable cycle has an odd maximum priority. Checked per odd
/// priority `d` by searching the priority-filtered subgraph for a nontrivial
/// SCC (or self-loop) through a priority-`d` state.
pub fn sure_parity_on_chain(chain: &MarkovChain) -> bool {
    let n = chain.num_states();
    let mut reachable = vec![false; n];
    let mut queue = vec![chain.initial];
    reachable[chain.initial] = true;
    while let Some(s) = queue.pop() {
        for (t, _) in &chain.trans[s] {
            if !reachable[*t] {
                reachable[*t] = true;
                queue.push(*t);
            }
        }
    }

    let mut odd_priorities: Vec<u32> = (0..n)
        .filter(|&s| reachable[s] && chain.priorities[s] % 2 == 1)
        .map(|s| chain.priorities[s])
        .collect();
    odd_priorities.sort_unstable();
    odd_priorities.dedup();

    for d in odd_priorities {
        // Subgraph of reachable states with priority <= d.
        let keep: Vec<bool> = (0..n)
            .map(|s| reachable[s] && chain.priorities[s] <= d)
            .collect();
        let mut remap = vec![usize::MAX; n];
        let kept: Vec<usize> = (0..n).filter(|&s| keep[s]).collect();
        for (i, &s) in kept.iter().enumerate() {
            remap[s] = i;
        }
        let sub: Vec<Vec<(usize, Rational)>> = kept
            .iter()
            .map(|&s| {
                chain.trans[s]
                    .iter()
                    .filter(|(t, _)| keep[*t])
                    .map(|(t, w)| (remap[*t], w.clone()))
                    .collect()
            })
            .collect();
        for scc in tarjan_sccs(&sub) {
            let nontrivial = scc.len() > 1
                || sub[scc[0]].iter().any(|(t, _)| *t == scc[0]);
            if !nontrivial {
                continue;
            }
            if scc.iter().any(|&i| chain.priorities[kept[i]] == d) {
                return false;
            }
        }
    }
    true
}

/// Probability of hitting each target within at most `steps` transitions,
/// by exact forward propagation with the target made absorbing.
pub fn bounded_reach(chain: &MarkovChain, steps: u64) -> Vec<Rational> {
    (0..chain.num_targets)
        .map(|i| {
            let fmask = chain.target_mask(i);
            let mut dist = vec![Rational::zero(); chain.num_states()];
            dist[chain.initial] = Rational::one();
            for _ in 0..steps {
                let mut next = vec![Rational::zero(); chain.num_states()];
                for (s, mass) in dist.iter().enumerate() {
                    if mass.is_zero() {
                        continue;
                    }
                    if fmask[s] {
                        next[s] += mass;
                        continue;
                    }
                    for (t, w) in &chain.trans[s] {
                        next[*t] += mass * w;
                    }
                }
                dist = next;
            }
            dist.iter()
                .enumerate()
                .filter(|(s, _)| fmask[*s])
                .map(|(_, m)| m.clone())
                .sum()
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct SimulationReport {
    pub episodes: u64,
    pub horizon: u64,
    pub seed: u64,
    /// Fraction of episodes that hit each target within the horizon.
    pub frequencies: Vec<Rational>,
    /// Simulation estimates bounded reachability only; sure properties are
    /// not sampleable.
    pub bounded_only: bool,
}

/// Deterministic Monte-Carlo estimate of bounded reach frequencies.
pub fn simulate(chain: &MarkovChain, episodes: u64, horizon: u64, seed: u64) -> SimulationReport {
    assert!(episodes >= 1 && horizon >= 1);
    // Pre-scale each row's cumulative weights to u128 thresholds against a
    // 64-bit draw; ties cannot occur because 2^64 scaling is injective
    // enough for distinct cumulative sums at these sizes.
    let two64 = BigInt::from(1u128 << 64);
    let thresholds: Vec<Vec<(usize, u128)>> = chain
        .trans
        .iter()
        .map(|row| {
            let mut cum = Rational::zero();
            row.iter()
                .map(|(t, w)| {
                    cum += w;
                    let scaled = (cum.numer() * &two64) / cum.denom();
                    (*t, scaled.to_u128().unwrap_or(u128::MAX))
                })
                .collect()
        })
        .collect();

    let mut rng = SplitMix64::new(seed);
    let mut hits = vec![0u64; chain.num_targets];
    for _ in 0..episodes {
        let mut s = chain.initial;
        let mut seen: Vec<bool> = chain.target_flags[s].clone();
        for _ in 0..horizon {
            if thresholds[s].is_empty() {
                break;
            }
            let draw = rng.next_u64() as u128;
            let mut next = thresholds[s].last().unwrap().0;
            for (t, bound) in &thresholds[s] {
                if draw < *bound {
                    next = *t;
                    break;
                }
            }
            s = next;
            for (i, f) in chain.target_flags[s].iter().enumerate() {
                if *f {
                    seen[i] = true;
                }
            }
        }
        for (i, hit) in seen.iter().enumerate() {
            if *hit {
                hits[i] += 1;
            }
        }
    }
    SimulationReport {
        episodes,
        horizon,
        seed,
        frequencies: hits
            .iter()
            .map(|h| Rational::new(BigInt::from(*h), BigInt::from(episodes)))
            .collect(),
        bounded_only: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::gameshow;
    use crate::model::{MdpBuilder, MemorylessStrategy};
    use crate::num::rat;

    fn pair1_then_a() -> Strategy {
        Strategy::memoryless_deterministic(&[
            ("s", "pair1"),
            ("s1", "a"),
            ("s2", "a"),
            ("r1", "*"),
            ("r2", "*"),
            ("r12", "*"),
        ])
    }

    fn cap() -> BigUint {
        BigUint::from(100u32)
    }

    #[test]
    fn pair1_forever_reaches_f1_surely() {
        let m = gameshow();
        let chain = induce(&m, &pair1_then_a(), m.initial().unwrap(), &cap()).unwrap();
        assert_eq!(chain.reach_vector(), vec![rat(1, 1), rat(1, 3)]);
    }

    #[test]
    fn stitched_two_steps_then_b() {
        let m = gameshow();
        let first = MemorylessStrategy::deterministic(&[
            ("s", "pair1"),
            ("s1", "a"),
            ("s2", "a"),
            ("r1", "*"),
            ("r2", "*"),
            ("r12", "*"),
        ]);
        let second = Strategy::memoryless_deterministic(&[
            ("s", "pair1"),
            ("s1", "b"),
            ("s2", "b"),
            ("r1", "*"),
            ("r2", "*"),
            ("r12", "*"),
        ]);
        let stitched = Strategy::stitched(first, 2, second);
        let chain = induce(&m, &stitched, m.initial().unwrap(), &cap()).unwrap();
        assert_eq!(chain.reach_vector(), vec![rat(3, 4), rat(1, 2)]);
    }

    #[test]
    fn mixture_averages_reach_vectors() {
        let m = gameshow();
        let p2 = Strategy::memoryless_deterministic(&[
            ("s", "pair2"),
            ("s1", "a"),
            ("s2", "a"),
            ("r1", "*"),
            ("r2", "*"),
            ("r12", "*"),
        ]);
        let mix = Strategy::Mixture(vec![(rat(1, 2), pair1_then_a()), (rat(1, 2), p2)]);
        let chain = induce(&m, &mix, m.initial().unwrap(), &cap()).unwrap();
        assert_eq!(chain.reach_vector(), vec![rat(2, 3), rat(2, 3)]);
    }

    #[test]
    fn stitched_above_cap_is_rejected() {
        let m = gameshow();
        let first = MemorylessStrategy::deterministic(&[("s", "pair1"), ("s1", "a"), ("s2", "a")]);
        let second = Strategy::memoryless_deterministic(&[("s", "pair1"), ("s1", "b"), ("s2", "b")]);
        let stitched = Strategy::Stitched {
            first,
            horizon: BigUint::from(1_000_000u64),
            second: Box::new(second),
        };
        match induce(&m, &stitched, m.initial().unwrap(), &cap()) {
            Err(InduceError::HorizonAboveCap { .. }) => {}
            other => panic!("expected cap rejection, got {other:?}"),
        }
    }

    /// x -> F with 1/2, x -> x with 1/2.
    fn geometric_chain() -> MarkovChain {
        MarkovChain {
            states: vec![
                ChainState { state: StateId(0), label: "x".into() },
                ChainState { state: StateId(1), label: "F".into() },
            ],
            trans: vec![
                vec![(0, rat(1, 2)), (1, rat(1, 2))],
                vec![(1, rat(1, 1))],
            ],
            initial: 0,
            priorities: vec![1, 0],
            target_flags: vec![vec![false], vec![true]],
            num_targets: 1,
        }
    }

    #[test]
    fn geometric_chain_reaches_almost_surely() {
        let chain = geometric_chain();
        let pr = reach_probability(&chain, 0);
        assert_eq!(pr[0], rat(1, 1));
        assert_eq!(pr[1], rat(1, 1));
    }

    #[test]
    fn hitting_time_solves_the_equation_system() {
        let chain = geometric_chain();
        let e = expected_hitting_time(&chain, &chain.target_mask(0));
        assert_eq!(e[0], rat(2, 1));
        // target states and unreachable states sit at zero
        assert_eq!(e[1], rat(0, 1));
    }

    #[test]
    fn hitting_time_zero_outside_reachers() {
        // two isolated states: y cannot reach F at all
        let chain = MarkovChain {
            states: vec![
                ChainState { state: StateId(0), label: "y".into() },
                ChainState { state: StateId(1), label: "F".into() },
            ],
            trans: vec![vec![(0, rat(1, 1))], vec![(1, rat(1, 1))]],
            initial: 0,
            priorities: vec![0, 0],
            target_flags: vec![vec![false], vec![true]],
            num_targets: 1,
        };
        let e = expected_hitting_time(&chain, &chain.target_mask(0));
        assert_eq!(e[0], rat(0, 1));
        let pr = reach_probability(&chain, 0);
        assert_eq!(pr[0], rat(0, 1));
    }

    #[test]
    fn parity_fails_on_odd_self_loop() {
        let m = gameshow();
        let chain = induce(&m, &pair1_then_a(), m.initial().unwrap(), &cap()).unwrap();
        // the a-loop at s1 carries priority 1
        assert!(!sure_parity_on_chain(&chain));
    }

    #[test]
    fn parity_holds_when_only_sinks_cycle() {
        let m = gameshow();
        let b_everywhere = Strategy::memoryless_deterministic(&[
            ("s", "pair1"),
            ("s1", "b"),
            ("s2", "b"),
            ("r1", "*"),
            ("r2", "*"),
            ("r12", "*"),
        ]);
        let chain = induce(&m, &b_everywhere, m.initial().unwrap(), &cap()).unwrap();
        assert!(sure_parity_on_chain(&chain));
    }

    #[test]
    fn parity_sees_odd_max_two_state_cycle() {
        let chain = MarkovChain {
            states: vec![
                ChainState { state: StateId(0), label: "s".into() },
                ChainState { state: StateId(1), label: "t".into() },
            ],
            trans: vec![vec![(1, rat(1, 1))], vec![(0, rat(1, 1))]],
            initial: 0,
            priorities: vec![3, 2],
            target_flags: vec![vec![false], vec![false]],
            num_targets: 1,
        };
        assert!(!sure_parity_on_chain(&chain));
    }

    #[test]
    fn bounded_reach_of_geometric_chain() {
        let chain = geometric_chain();
        assert_eq!(bounded_reach(&chain, 5), vec![rat(31, 32)]);
        assert_eq!(bounded_reach(&chain, 1), vec![rat(1, 2)]);
        assert_eq!(bounded_reach(&chain, 0), vec![rat(0, 1)]);
    }

    #[test]
    fn simulation_tracks_exact_values() {
        let m = gameshow();
        let chain = induce(&m, &pair1_then_a(), m.initial().unwrap(), &cap()).unwrap();
        let report = simulate(&chain, 100_000, 200, 0xfeed);
        assert!(report.bounded_only);
        // F1 is reached almost surely; the estimate must land within 0.01.
        let diff = rat(1, 1) - report.frequencies[0].clone();
        assert!(diff.abs() < rat(1, 100), "estimate too far: {}", report.frequencies[0]);
        // determinism
        let again = simulate(&chain, 100_000, 200, 0xfeed);
        assert_eq!(report.frequencies, again.frequencies);
    }

    #[test]
    fn simulation_frequency_zero_and_one_edges() {
        let mut b = MdpBuilder::new();
        b.sink("f", 0, &["F1"]).sink("g", 0, &["F2"]).initial("f");
        let m = b.build().unwrap();
        let strat = Strategy::memoryless_deterministic(&[("f", "*"), ("g", "*")]);
        let chain = induce(&m, &strat, m.initial().unwrap(), &cap()).unwrap();
        let report = simulate(&chain, 100, 5, 7);
        assert_eq!(report.frequencies[0], rat(1, 1));
        assert_eq!(report.frequencies[1], rat(0, 1));
    }
}
