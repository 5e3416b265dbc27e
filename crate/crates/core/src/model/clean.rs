//! Cleanness check with respect to the target sets: every target state is a
//! sink (guaranteed by validation) and the maximal probability of reaching
//! the target union is 1 from every state.

use super::{Mdp, StateId};
use crate::reach::max_reach_values;
use num_traits::One;

#[derive(Debug, Clone)]
pub struct CleanTargetsReport {
    pub clean: bool,
    /// States whose maximal reach probability of the target union is below 1.
    pub offenders: Vec<StateId>,
}

pub fn check_clean_targets(m: &Mdp) -> CleanTargetsReport {
    let union = m.target_union();
    let (values, _) = max_reach_values(m, &union);
    let offenders: Vec<StateId> = m
        .states()
        .filter(|s| !values[s.0].is_one())
        .collect();
    CleanTargetsReport { clean: offenders.is_empty(), offenders }
}
