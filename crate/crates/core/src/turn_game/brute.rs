//! Exhaustive oracle for the conjunction check: enumerates pure finite-state
//! strategies up to a memory bound and accepts a state when some induced
//! chain has no reachable odd-max cycle and all bottom SCCs inside the
//! target union.
//!
//! Independent of the fair-game solver by construction: it works on the
//! product of model states and memory modes directly. The search is a DFS
//! over partial assignments with canonical mode allocation,
//! conflict-directed backjumping, and sound pruning: doomed partial
//! structures (odd-max cycles, regions cut off from targets and open slots)
//! fail immediately, and states that cannot win at any memory bound (outside
//! the plain sure-parity region, or unable to graph-reach the target union)
//! are filtered up front.

use crate::model::{Mdp, StateId};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BruteForceError {
    #[error("model too large for exhaustive search: {states} states x {pairs} pairs x {bound} modes exceeds budget {budget}")]
    BudgetExceeded {
        states: usize,
        pairs: usize,
        bound: usize,
        budget: u64,
    },
}

/// States hopeless at every memory bound: outside the plain sure-parity
/// region (the adversary forces an odd-max path against any strategy), or
/// unable to even graph-reach the target union.
fn hopeless_states(m: &Mdp) -> Vec<bool> {
    let (parity_region, _) = crate::turn_game::sure_parity_region(m);
    let union = m.target_union();
    let n = m.num_states();
    let mut reaches = vec![false; n];
    for &f in &union {
        reaches[f.0] = true;
    }
    loop {
        let mut changed = false;
        for v in 0..n {
            if reaches[v] {
                continue;
            }
            let ok = m
                .enabled(StateId(v))
                .iter()
                .any(|(_, dist)| dist.iter().any(|(t, _)| reaches[t.0]));
            if ok {
                reaches[v] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    (0..n)
        .map(|v| !parity_region.contains(&StateId(v)) || !reaches[v])
        .collect()
}

/// Slots participating in a doom certificate.
type Conflict = BTreeSet<usize>;

enum SearchResult {
    Won,
    /// Failed; the union of conflict slots explaining every failure below.
    Failed(Conflict),
}

struct Search<'a> {
    m: &'a Mdp,
    bound: usize,
    fstate: Vec<bool>,
    hopeless: Vec<bool>,
    /// Product node s * bound + q -> chosen (action row index, next mode).
    assign: Vec<Option<(usize, usize)>>,
}

impl<'a> Search<'a> {
    fn node(&self, s: usize, q: usize) -> usize {
        s * self.bound + q
    }

    fn successors(&self, node: usize) -> Option<Vec<usize>> {
        let s = node / self.bound;
        let (row, next_mode) = self.assign[node]?;
        let (_, dist) = &self.m.enabled(StateId(s))[row];
        Some(dist.iter().map(|(t, _)| self.node(t.0, next_mode)).collect())
    }

    fn reachable(&self, start: usize) -> Vec<bool> {
        let total = self.m.num_states() * self.bound;
        let mut reach = vec![false; total];
        let mut stack = vec![start];
        reach[start] = true;
        while let Some(v) = stack.pop() {
            if let Some(succs) = self.successors(v) {
                for w in succs {
                    if !reach[w] {
                        reach[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        reach
    }

    /// Assigned slots on some path from the start into `targets`.
    fn path_slots(&self, reach: &[bool], targets: &Conflict) -> Conflict {
        let total = self.m.num_states() * self.bound;
        let mut back = vec![false; total];
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); total];
        for v in 0..total {
            if !reach[v] {
                continue;
            }
            if let Some(succs) = self.successors(v) {
                for w in succs {
                    preds[w].push(v);
                }
            }
        }
        let mut queue: Vec<usize> = targets.iter().copied().filter(|&v| reach[v]).collect();
        for &v in &queue {
            back[v] = true;
        }
        while let Some(w) = queue.pop() {
            for &v in &preds[w] {
                if !back[v] {
                    back[v] = true;
                    queue.push(v);
                }
            }
        }
        (0..total)
            .filter(|&v| back[v] && reach[v] && self.assign[v].is_some())
            .collect()
    }

    /// Checks whether the assigned part reachable from `start` is already
    /// beyond repair; returns the conflict slots when it is.
    fn doomed(&self, start: usize) -> Option<Conflict> {
        let total = self.m.num_states() * self.bound;
        let reach = self.reachable(start);
        let pri = |v: usize| self.m.priority(StateId(v / self.bound));

        // Hopeless state reached: the conflict is the path there.
        if let Some(bad) = (0..total).find(|&v| reach[v] && self.hopeless[v / self.bound]) {
            let targets: Conflict = [bad].into_iter().collect();
            return Some(self.path_slots(&reach, &targets));
        }

        // Odd-max cycle: for each odd priority d, a nontrivial SCC within
        // priority <= d containing priority d.
        let mut odd: Vec<u32> = (0..total)
            .filter(|&v| reach[v] && pri(v) % 2 == 1)
            .map(pri)
            .collect();
        odd.sort_unstable();
        odd.dedup();
        for d in odd {
            let keep: Vec<usize> = (0..total).filter(|&v| reach[v] && pri(v) <= d).collect();
            if let Some(cycle) = odd_scc(self, &keep, d) {
                let targets: Conflict = cycle.into_iter().collect();
                return Some(self.path_slots(&reach, &targets));
            }
        }

        // Dead region: an assigned node that can no longer reach a target or
        // an open slot can never be repaired.
        let mut alive_fwd = vec![false; total];
        let mut queue: Vec<usize> = (0..total)
            .filter(|&v| reach[v] && (self.fstate[v / self.bound] || self.assign[v].is_none()))
            .collect();
        for &v in &queue {
            alive_fwd[v] = true;
        }
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); total];
        for v in 0..total {
            if !reach[v] {
                continue;
            }
            if let Some(succs) = self.successors(v) {
                for w in succs {
                    preds[w].push(v);
                }
            }
        }
        while let Some(w) = queue.pop() {
            for &v in &preds[w] {
                if !alive_fwd[v] {
                    alive_fwd[v] = true;
                    queue.push(v);
                }
            }
        }
        let dead: Conflict = (0..total).filter(|&v| reach[v] && !alive_fwd[v]).collect();
        if !dead.is_empty() {
            return Some(self.path_slots(&reach, &dead));
        }
        None
    }

    fn find_open(&self, start: usize) -> Option<usize> {
        let reach = self.reachable(start);
        (0..reach.len())
            .filter(|&v| reach[v] && self.assign[v].is_none())
            .min()
    }

    fn search(&mut self, start: usize, used_modes: usize) -> SearchResult {
        let Some(node) = self.find_open(start) else {
            // Complete and undoomed: a winning strategy.
            return SearchResult::Won;
        };
        let (s, q) = (node / self.bound, node % self.bound);
        let state = StateId(s);
        let enabled = self.m.enabled(state);
        let mut conflict: Conflict = Conflict::new();
        // Rows with identical supports are interchangeable for cycle and
        // bottom structure; try the first of each support class.
        let mut rows: Vec<usize> = Vec::new();
        for (i, (_, dist)) in enabled.iter().enumerate() {
            let support: Vec<usize> = dist.iter().map(|(t, _)| t.0).collect();
            let dup = enabled[..i]
                .iter()
                .any(|(_, d)| d.iter().map(|(t, _)| t.0).collect::<Vec<usize>>() == support);
            if !dup {
                rows.push(i);
            }
        }
        for row in rows {
            let support = &enabled[row].1;
            let all_sinks = support.iter().all(|(t, _)| self.m.is_sink(*t));
            let pure_self = support.len() == 1 && support[0].0 == state;
            let mode_choices: Vec<usize> = if self.m.is_sink(state) || pure_self {
                // Absorption or a pure wait step: memory change never helps.
                vec![q]
            } else if all_sinks {
                vec![0]
            } else {
                (0..=used_modes.min(self.bound - 1)).collect()
            };
            for &q_next in &mode_choices {
                self.assign[node] = Some((row, q_next));
                match self.doomed(start) {
                    Some(c) => {
                        conflict.extend(c);
                    }
                    None => {
                        let used = used_modes.max(q_next + 1).min(self.bound);
                        match self.search(start, used) {
                            SearchResult::Won => {
                                self.assign[node] = None;
                                return SearchResult::Won;
                            }
                            SearchResult::Failed(c) => {
                                // Conflict-directed backjump: failures that do
                                // not involve this slot cannot be repaired by
                                // its remaining values.
                                if !c.contains(&node) {
                                    self.assign[node] = None;
                                    return SearchResult::Failed(c);
                                }
                                conflict.extend(c);
                            }
                        }
                    }
                }
            }
        }
        self.assign[node] = None;
        conflict.remove(&node);
        // The failure also depends on whatever made this slot reachable.
        let reach = self.reachable(start);
        let targets: Conflict = [node].into_iter().collect();
        conflict.extend(self.path_slots(&reach, &targets));
        conflict.remove(&node);
        SearchResult::Failed(conflict)
    }
}

fn odd_scc(search: &Search, keep: &[usize], d: u32) -> Option<Vec<usize>> {
    let mut remap = std::collections::HashMap::new();
    for (i, &v) in keep.iter().enumerate() {
        remap.insert(v, i);
    }
    let trans: Vec<Vec<(usize, crate::num::Rational)>> = keep
        .iter()
        .map(|&v| {
            search
                .successors(v)
                .map(|succs| {
                    succs
                        .into_iter()
                        .filter_map(|w| remap.get(&w).copied())
                        .map(|w| (w, crate::num::one()))
                        .collect()
                })
                .unwrap_or_default()
        })
        .collect();
    for scc in crate::model::tarjan_sccs(&trans) {
        let nontrivial = scc.len() > 1 || trans[scc[0]].iter().any(|(t, _)| *t == scc[0]);
        if nontrivial
            && scc
                .iter()
                .any(|&i| search.m.priority(StateId(keep[i] / search.bound)) == d)
        {
            return Some(scc.iter().map(|&i| keep[i]).collect());
        }
    }
    None
}

/// Enumerates all pure finite-state strategies with at most `memory_bound`
/// modes; a state is accepted iff some strategy's induced chain has no
/// reachable odd-max cycle and every bottom SCC inside the target union.
pub fn brute_force_conj(
    m: &Mdp,
    memory_bound: usize,
    budget: u64,
) -> Result<BTreeSet<StateId>, BruteForceError> {
    let pairs: usize = m.states().map(|s| m.enabled(s).len()).sum();
    let cost = (m.num_states() as u64)
        .saturating_mul(pairs as u64)
        .saturating_mul(memory_bound as u64);
    if cost > budget {
        return Err(BruteForceError::BudgetExceeded {
            states: m.num_states(),
            pairs,
            bound: memory_bound,
            budget,
        });
    }
    let bound = memory_bound.max(1);
    let union = m.target_union();
    let fstate: Vec<bool> = m.states().map(|s| union.contains(&s)).collect();
    let hopeless = hopeless_states(m);
    let mut region = BTreeSet::new();
    for s in m.states() {
        if union.contains(&s) {
            region.insert(s);
            continue;
        }
        if m.is_sink(s) || hopeless[s.0] {
            continue;
        }
        // Iterative deepening finds small witnesses quickly; the full bound
        // is only exhausted on no-instances.
        let mut found = false;
        for b in 1..=bound {
            let mut search = Search {
                m,
                bound: b,
                fstate: fstate.clone(),
                hopeless: hopeless.clone(),
                assign: vec![None; m.num_states() * b],
            };
            let start = search.node(s.0, 0);
            if matches!(search.search(start, 1), SearchResult::Won) {
                found = true;
                break;
            }
        }
        if found {
            region.insert(s);
        }
    }
    Ok(region)
}
