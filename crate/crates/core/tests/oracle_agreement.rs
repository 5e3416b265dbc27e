//! Randomized agreement between the game-based conjunction check and the
//! exhaustive strategy-enumeration oracle, plus monotonicity of the region
//! under sub-MDP restriction.

use parmo::model::StateId;
use parmo::randgen::{random_mdp, RandomMdpSpec};
use parmo::rng::SplitMix64;
use parmo::turn_game::{brute_force_conj, conj_region};
use std::collections::BTreeSet;

#[test]
fn conjunction_agrees_with_oracle_on_random_models() {
    let spec = RandomMdpSpec { max_states: 3, max_actions: 2, max_priority: 3, num_targets: 1 };
    let mut rng = SplitMix64::new(0x5eed_0001);
    let mut yes_instances = 0;
    for round in 0..300 {
        let m = random_mdp(&mut rng, &spec);
        let game = conj_region(&m);
        let oracle = brute_force_conj(&m, 4, 50_000_000).expect("within budget");
        assert_eq!(
            game.region, oracle,
            "disagreement on round {round}:\n{m}\ngame: {:?}\noracle: {:?}",
            game.region, oracle
        );
        if !game.region.is_empty() {
            yes_instances += 1;
        }
    }
    assert!(yes_instances > 50, "generator should produce nontrivial instances");
}

#[test]
fn conjunction_region_is_monotone_under_restriction() {
    let spec = RandomMdpSpec { max_states: 3, max_actions: 2, max_priority: 3, num_targets: 1 };
    let mut rng = SplitMix64::new(0x5eed_0002);
    for _ in 0..100 {
        let m = random_mdp(&mut rng, &spec);
        let full = conj_region(&m);
        // Drop one non-initial state and compare.
        let all: Vec<StateId> = m.states().collect();
        if all.len() < 2 {
            continue;
        }
        let dropped = all[all.len() - 1];
        let keep: BTreeSet<StateId> = m.states().filter(|&s| s != dropped).collect();
        let sub = m.restrict(&keep);
        let sub_region = conj_region(&sub);
        for s in sub_region.region {
            let name = sub.state_name(s);
            let orig = m.state_by_name(name).expect("restriction keeps names");
            assert!(
                full.region.contains(&orig) || !keep.contains(&orig),
                "restriction grew the region at {name}\n{m}"
            );
        }
    }
}
