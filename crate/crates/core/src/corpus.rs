//! Bundled example models used by the documentation, the test suites and the
//! CLI corpus files.

use crate::model::{Mdp, MdpBuilder};
use crate::num::rat;

/// The game-show gamble: a contestant picks one of two dice pairs and rolls
/// for a bike (`F1`), a surfboard (`F2`) or both, under the house rule that
/// the show must surely end (priority 1 on non-sinks, 0 on sinks).
pub fn gameshow() -> Mdp {
    let mut b = MdpBuilder::new();
    b.state("s", 1)
        .state("s1", 1)
        .state("s2", 1)
        .sink("r1", 0, &["F1"])
        .sink("r12", 0, &["F1", "F2"])
        .sink("r2", 0, &["F2"])
        .initial("s")
        .action("s", "pair1", &[("s1", rat(1, 1))])
        .action("s", "pair2", &[("s2", rat(1, 1))])
        .action(
            "s1",
            "a",
            &[("r1", rat(1, 3)), ("r12", rat(1, 6)), ("s1", rat(1, 2))],
        )
        .action("s1", "b", &[("r2", rat(1, 1))])
        .action(
            "s2",
            "a",
            &[("r2", rat(1, 3)), ("r12", rat(1, 6)), ("s2", rat(1, 2))],
        )
        .action(
            "s2",
            "b",
            &[("r1", rat(1, 3)), ("r2", rat(1, 3)), ("r12", rat(1, 3))],
        );
    let m = b.build().expect("gameshow model is valid");
    debug_assert_eq!(m.target_names(), vec!["F1", "F2"]);
    m
}

/// Two transient states where reaching the target forces an odd cycle: `s`
/// (priority 3) feeds `t` (priority 2), whose only productive action risks
/// bouncing back to `s`. No strategy satisfies the parity-and-reach
/// conjunction from `s` or `t`.
pub fn odd_bounce() -> Mdp {
    let mut b = MdpBuilder::new();
    b.state("s", 3)
        .state("t", 2)
        .sink("f", 0, &["F"])
        .initial("s")
        .action("s", "go", &[("t", rat(1, 1))])
        .action("t", "try", &[("f", rat(1, 2)), ("s", rat(1, 2))])
        .action("t", "stall", &[("t", rat(1, 1))]);
    b.build().expect("odd bounce model is valid")
}

/// A conjunction witness here needs two memory modes: recharging the even
/// priority 4 at `r` and attempting the target from `u` must alternate.
pub fn alternation() -> Mdp {
    let mut b = MdpBuilder::new();
    b.state("u", 3)
        .state("r", 4)
        .sink("f", 0, &["F"])
        .initial("u")
        .action("u", "recharge", &[("r", rat(1, 1))])
        .action("u", "try", &[("f", rat(1, 2)), ("u", rat(1, 2))])
        .action("r", "back", &[("u", rat(1, 1))]);
    b.build().expect("alternation model is valid")
}
