//! Adversarial instances, hardness gadgets and seeded random families.

mod random;
mod sat;
mod star;
mod worstcase;

use std::collections::BTreeMap;

use serde_json::json;

use crate::model::Instance;

pub use random::{gen_random, RandomFamily, RandomOptions};
pub use sat::{brute_force_sat, four_center_clustering, gen_sat_gadget, two_center_clustering, Cnf, SatVariant};
pub use star::{clique_cover_brute_force, gen_star_gadget, multicut_brute_force, set_cover_brute_force, StarKind};
pub use worstcase::{gen_worstcase_i, gen_worstcase_iprime, radius_two_clustering, s_sequence};

/// A generated instance with named point sets (centers, special points, ...).
#[derive(Clone, Debug)]
pub struct GadgetMeta<S> {
    pub instance: Instance<S>,
    pub roles: BTreeMap<String, Vec<usize>>,
}

impl<S: crate::Scalar> GadgetMeta<S> {
    fn new(instance: Instance<S>) -> Self {
        Self { instance, roles: BTreeMap::new() }
    }

    fn with_role(mut self, name: &str, ids: Vec<usize>) -> Self {
        self.roles.insert(name.to_owned(), ids);
        self
    }

    /// The ids under `name`, or an empty slice.
    pub fn role(&self, name: &str) -> &[usize] {
        self.roles.get(name).map_or(&[], Vec::as_slice)
    }

    /// Side-file contents: roles, the budget and the point labels.
    pub fn annotations_json(&self) -> serde_json::Value {
        json!({
            "k": self.instance.k(),
            "roles": self.roles,
            "labels": self.instance.labels(),
        })
    }
}
