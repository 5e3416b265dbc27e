use parmo::randgen::{random_mdp, RandomMdpSpec};
use parmo::rng::SplitMix64;
use parmo::turn_game::{brute_force_conj, conj_region};
use std::time::Instant;

fn main() {
    let spec = RandomMdpSpec { max_states: 3, max_actions: 2, max_priority: 3, num_targets: 1 };
    let mut rng = SplitMix64::new(0xacce_97ed);
    for round in 0..=12 {
        let m = random_mdp(&mut rng, &spec);
        if round == 12 {
            let game = conj_region(&m);
            let t = Instant::now();
            let oracle = brute_force_conj(&m, 6, 50_000_000).unwrap();
            println!("round 12: oracle {:?} in {:.2}s (game {:?})", oracle, t.elapsed().as_secs_f64(), game.region);
        }
    }
}
