//! Turn-based game extraction and solving.
//!
//! The controller owns one vertex per MDP state, the adversary one vertex per
//! enabled (state, action) pair; adversary vertices stand for the resolved
//! randomness and carry a strong-transition-fairness mark. Plain parity games
//! (sure parity, cleaning) are solved by recursive Zielonka; the combined
//! `S(parity) and almost-sure reach` check lives in [`conj`].

mod brute;
mod conj;

pub use brute::{brute_force_conj, BruteForceError};
pub use conj::{conj_region, ConjResult};

use crate::model::{ActionId, Mdp, StateId};
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Owner {
    Controller,
    Adversary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexOrigin {
    State(StateId),
    Pair(StateId, ActionId),
}

#[derive(Debug, Clone)]
pub struct GameVertex {
    pub owner: Owner,
    pub priority: u32,
    pub successors: Vec<usize>,
    /// Strong-transition-fairness mark; set on every adversary vertex.
    pub fair: bool,
    pub origin: VertexOrigin,
}

#[derive(Debug, Clone)]
pub struct TurnBasedGame {
    pub vertices: Vec<GameVertex>,
    /// Controller vertex of each model state.
    pub state_vertex: Vec<usize>,
    predecessors: Vec<Vec<usize>>,
}

impl TurnBasedGame {
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn controller_count(&self) -> usize {
        self.vertices
            .iter()
            .filter(|v| v.owner == Owner::Controller)
            .count()
    }

    pub fn adversary_count(&self) -> usize {
        self.vertices.len() - self.controller_count()
    }

    pub fn predecessors(&self, v: usize) -> &[usize] {
        &self.predecessors[v]
    }
}

/// Bipartite game of `m`: controller picks actions, the adversary resolves
/// distributions. Adversary vertices inherit the priority of their source
/// state, so inserting them never changes any play's maximum priority seen
/// infinitely often.
pub fn build_game(m: &Mdp) -> TurnBasedGame {
    let mut vertices: Vec<GameVertex> = Vec::new();
    let mut state_vertex = vec![usize::MAX; m.num_states()];
    for s in m.states() {
        state_vertex[s.0] = vertices.len();
        vertices.push(GameVertex {
            owner: Owner::Controller,
            priority: m.priority(s),
            successors: Vec::new(),
            fair: false,
            origin: VertexOrigin::State(s),
        });
    }
    for s in m.states() {
        for (a, row) in m.enabled(s) {
            let pair = vertices.len();
            vertices.push(GameVertex {
                owner: Owner::Adversary,
                priority: m.priority(s),
                successors: row.iter().map(|(t, _)| state_vertex[t.0]).collect(),
                fair: true,
                origin: VertexOrigin::Pair(s, *a),
            });
            vertices[state_vertex[s.0]].successors.push(pair);
        }
    }
    let mut predecessors = vec![Vec::new(); vertices.len()];
    for (v, vertex) in vertices.iter().enumerate() {
        for &w in &vertex.successors {
            predecessors[w].push(v);
        }
    }
    TurnBasedGame { vertices, state_vertex, predecessors }
}

/// Classical attractor of `player` to `base` within `alive`. Also returns,
/// for the attracting player's vertices, the successor used to attract.
pub(crate) fn attractor(
    g: &TurnBasedGame,
    alive: &[bool],
    player: Owner,
    base: &[usize],
) -> (Vec<bool>, Vec<Option<usize>>) {
    let n = g.num_vertices();
    let mut in_attr = vec![false; n];
    let mut edge = vec![None; n];
    // For opponent vertices: number of alive successors not yet attracted.
    let mut pending: Vec<usize> = (0..n)
        .map(|v| {
            g.vertices[v]
                .successors
                .iter()
                .filter(|&&w| alive[w])
                .count()
        })
        .collect();
    let mut queue: Vec<usize> = Vec::new();
    for &b in base {
        if alive[b] && !in_attr[b] {
            in_attr[b] = true;
            queue.push(b);
        }
    }
    while let Some(w) = queue.pop() {
        for &v in g.predecessors(w) {
            if !alive[v] || in_attr[v] {
                continue;
            }
            if g.vertices[v].owner == player {
                in_attr[v] = true;
                edge[v] = Some(w);
                queue.push(v);
            } else {
                pending[v] -= 1;
                if pending[v] == 0 {
                    in_attr[v] = true;
                    queue.push(v);
                }
            }
        }
    }
    (in_attr, edge)
}

#[derive(Debug, Clone)]
pub struct WinningRegions {
    pub even: BTreeSet<usize>,
    pub odd: BTreeSet<usize>,
    /// Memoryless deterministic strategy: winner's vertices map to the chosen
    /// successor vertex.
    pub even_strategy: Vec<Option<usize>>,
    pub odd_strategy: Vec<Option<usize>>,
}

/// Recursive Zielonka on the plain parity game (fairness plays no role for
/// sure objectives). Highest priority first; attractor ties break by vertex
/// order, so output is deterministic.
pub fn zielonka(g: &TurnBasedGame) -> WinningRegions {
    let alive = vec![true; g.num_vertices()];
    let (even, odd, even_strategy, odd_strategy) = zielonka_rec(g, &alive);
    WinningRegions {
        even: even.iter().enumerate().filter(|(_, &w)| w).map(|(v, _)| v).collect(),
        odd: odd.iter().enumerate().filter(|(_, &w)| w).map(|(v, _)| v).collect(),
        even_strategy,
        odd_strategy,
    }
}

type RegionsAndStrategies = (Vec<bool>, Vec<bool>, Vec<Option<usize>>, Vec<Option<usize>>);

fn zielonka_rec(g: &TurnBasedGame, alive: &[bool]) -> RegionsAndStrategies {
    let n = g.num_vertices();
    let mut even = vec![false; n];
    let mut odd = vec![false; n];
    let mut even_strategy: Vec<Option<usize>> = vec![None; n];
    let mut odd_strategy: Vec<Option<usize>> = vec![None; n];
    let Some(d) = (0..n).filter(|&v| alive[v]).map(|v| g.vertices[v].priority).max() else {
        return (even, odd, even_strategy, odd_strategy);
    };

    let player = if d % 2 == 0 { Owner::Controller } else { Owner::Adversary };
    let base: Vec<usize> = (0..n)
        .filter(|&v| alive[v] && g.vertices[v].priority == d)
        .collect();
    let (a_set, a_edge) = attractor(g, alive, player, &base);

    let mut sub_alive = alive.to_vec();
    for v in 0..n {
        if a_set[v] {
            sub_alive[v] = false;
        }
    }
    let (sub_even, sub_odd, sub_es, sub_os) = zielonka_rec(g, &sub_alive);

    let (opp_region, opp_is_even) = match player {
        Owner::Controller => (&sub_odd, false),
        Owner::Adversary => (&sub_even, true),
    };

    if opp_region.iter().all(|&w| !w) {
        // `player` wins everywhere alive: attractor edges toward the top
        // priority, any alive successor on the top vertices themselves, and
        // the sub-strategy below.
        let (win, strategy, sub_strat) = match player {
            Owner::Controller => (&mut even, &mut even_strategy, sub_es),
            Owner::Adversary => (&mut odd, &mut odd_strategy, sub_os),
        };
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            win[v] = true;
            if g.vertices[v].owner != player {
                continue;
            }
            strategy[v] = if a_set[v] {
                match a_edge[v] {
                    Some(e) => Some(e),
                    // Base vertices: any alive successor keeps the play inside.
                    None => g.vertices[v].successors.iter().copied().find(|&w| alive[w]),
                }
            } else {
                sub_strat[v]
            };
        }
        return (even, odd, even_strategy, odd_strategy);
    }

    let opp = match player {
        Owner::Controller => Owner::Adversary,
        Owner::Adversary => Owner::Controller,
    };
    let opp_base: Vec<usize> = (0..n).filter(|&v| opp_region[v]).collect();
    let (b_set, b_edge) = attractor(g, alive, opp, &opp_base);
    let mut rest_alive = alive.to_vec();
    for v in 0..n {
        if b_set[v] {
            rest_alive[v] = false;
        }
    }
    let (rest_even, rest_odd, rest_es, rest_os) = zielonka_rec(g, &rest_alive);

    for v in 0..n {
        if !alive[v] {
            continue;
        }
        if b_set[v] {
            if opp_is_even {
                even[v] = true;
                even_strategy[v] = if opp_region[v] { sub_es[v] } else { b_edge[v] };
            } else {
                odd[v] = true;
                odd_strategy[v] = if opp_region[v] { sub_os[v] } else { b_edge[v] };
            }
        } else if rest_even[v] {
            even[v] = true;
            even_strategy[v] = rest_es[v];
        } else if rest_odd[v] {
            odd[v] = true;
            odd_strategy[v] = rest_os[v];
        }
    }
    (even, odd, even_strategy, odd_strategy)
}

/// States from which the controller surely satisfies the parity objective,
/// with a memoryless deterministic witness. The witness is verified on the
/// closed sub-model by exact cycle analysis before being returned.
pub fn sure_parity_region(m: &Mdp) -> (BTreeSet<StateId>, crate::model::MemorylessStrategy) {
    let g = build_game(m);
    let regions = zielonka(&g);
    let mut states = BTreeSet::new();
    let mut strategy = crate::model::MemorylessStrategy::default();
    for s in m.states() {
        let v = g.state_vertex[s.0];
        if !regions.even.contains(&v) {
            continue;
        }
        states.insert(s);
        let choice = regions.even_strategy[v].expect("winning controller vertex has a choice");
        match g.vertices[choice].origin {
            VertexOrigin::Pair(_, a) => strategy.set(m.state_name(s), m.action_name(a)),
            VertexOrigin::State(_) => unreachable!("controller successors are action vertices"),
        }
    }

    // Mandatory re-check: the strategy must win from every region state of
    // the closed sub-model.
    let closed = m.restrict(&states);
    for s in closed.states() {
        let chain = crate::model::induce(
            &closed,
            &crate::model::Strategy::Memoryless(strategy.clone()),
            s,
            &num_bigint::BigUint::from(1u32),
        )
        .expect("parity witness is playable on the closed sub-model");
        assert!(
            crate::model::sure_parity_on_chain(&chain),
            "internal certificate failure: parity witness loses from {}",
            closed.state_name(s)
        );
    }
    (states, strategy)
}

/// Removes every state that cannot surely satisfy the parity objective and
/// closes under the restriction rule.
pub fn clean_wrt_parity(m: &Mdp) -> Mdp {
    let (region, _) = sure_parity_region(m);
    m.restrict(&region)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::gameshow;
    use crate::model::MdpBuilder;
    use crate::num::rat;

    #[test]
    fn gameshow_game_shape() {
        let m = gameshow();
        let g = build_game(&m);
        assert_eq!(g.controller_count(), 6);
        // pair1, pair2, a/b at s1, a/b at s2, and one * per sink.
        assert_eq!(g.adversary_count(), 9);
        assert!(g.vertices.iter().filter(|v| v.owner == Owner::Adversary).all(|v| v.fair));
    }

    #[test]
    fn gameshow_is_clean_for_parity() {
        let m = gameshow();
        let g = build_game(&m);
        let regions = zielonka(&g);
        assert_eq!(regions.even.len(), g.num_vertices());
        let (states, _) = sure_parity_region(&m);
        assert_eq!(states.len(), 6);
    }

    #[test]
    fn single_odd_self_loop_is_lost() {
        let mut b = MdpBuilder::new();
        b.sink("u", 1, &[]);
        let m = b.build().unwrap();
        let g = build_game(&m);
        let regions = zielonka(&g);
        assert!(regions.even.is_empty());
        assert_eq!(regions.odd.len(), 2);
    }

    #[test]
    fn controller_wins_by_looping_even_state() {
        // s(3) -> t(2), t can return to s or loop at t; looping wins.
        let mut b = MdpBuilder::new();
        b.state("s", 3)
            .state("t", 2)
            .action("s", "go", &[("t", rat(1, 1))])
            .action("t", "back", &[("s", rat(1, 1))])
            .action("t", "stay", &[("t", rat(1, 1))]);
        let m = b.build().unwrap();
        let (states, strategy) = sure_parity_region(&m);
        assert_eq!(states.len(), 2);
        assert_eq!(
            strategy.decision("t").unwrap(),
            &[("stay".to_string(), rat(1, 1))]
        );
    }

    #[test]
    fn clean_wrt_parity_removes_odd_trap() {
        // u has only a losing self-loop at odd priority; w escapes to an even sink.
        let mut b = MdpBuilder::new();
        b.state("u", 1)
            .state("w", 1)
            .sink("f", 0, &["F"])
            .action("u", "loop", &[("u", rat(1, 1))])
            .action("w", "out", &[("f", rat(1, 1))])
            .action("w", "risk", &[("u", rat(1, 2)), ("f", rat(1, 2))]);
        let m = b.build().unwrap();
        let cleaned = clean_wrt_parity(&m);
        assert!(cleaned.state_by_name("u").is_none());
        let w = cleaned.state_by_name("w").unwrap();
        // The risk action leads into the removed state and must be gone.
        assert_eq!(cleaned.enabled(w).len(), 1);
    }

    #[test]
    fn all_even_sinks_are_winning_everywhere() {
        let mut b = MdpBuilder::new();
        b.sink("f", 0, &["F"]).sink("g", 2, &[]);
        let m = b.build().unwrap();
        let (states, _) = sure_parity_region(&m);
        assert_eq!(states.len(), 2);
        let cleaned = clean_wrt_parity(&m);
        assert_eq!(cleaned.num_states(), 2);
    }

    #[test]
    fn no_even_priorities_cleans_to_empty() {
        let mut b = MdpBuilder::new();
        b.state("x", 1).action("x", "loop", &[("x", rat(1, 1))]);
        let m = b.build().unwrap();
        let cleaned = clean_wrt_parity(&m);
        assert_eq!(cleaned.num_states(), 0);
    }
}
