//! Restriction of irreducible representations to subgroups: a generic
//! weight-diagram algorithm and closed-form rules checked against it.

pub mod catalog;
pub mod rules;
pub mod verify;

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::charalg::{group_dimension, group_weight_multiplicities, FormalCharacter};
use crate::error::{LieError, Result};
use crate::lattice::{GroupSpec, Weight};
use crate::rational::Rat;

pub use catalog::{catalog, embedding, EmbeddingMap};
pub use rules::{
    branch_so5_to_so3so2, branch_sp2_to_su2su2, branch_sp4_to_sp2sp2,
    branch_spin10_halfspin_to_spin8u1, branch_su6_omega3_to_sp2su2u1, branch_su6_omega3_to_sp3,
    SignedCharacter,
};
pub use verify::{verify_rule, Rule};

/// Largest source dimension accepted by [`restrict_generic`].
pub const DEFAULT_BUDGET: u64 = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchResult {
    pub embedding: &'static str,
    pub source_group: GroupSpec,
    pub source: Weight,
    pub source_dimension: BigUint,
    pub decomposition: FormalCharacter,
}

impl BranchResult {
    pub fn conserves_dimension(&self) -> bool {
        self.decomposition.total_dimension() == self.source_dimension
    }
}

pub fn restrict_generic(e: &'static EmbeddingMap, hw: &Weight) -> Result<BranchResult> {
    restrict_generic_with_budget(e, hw, DEFAULT_BUDGET)
}

/// Restricts `V_hw` along `e` by mapping its full weight diagram and peeling
/// off irreducibles of the small group from the top.
pub fn restrict_generic_with_budget(
    e: &'static EmbeddingMap,
    hw: &Weight,
    budget: u64,
) -> Result<BranchResult> {
    let hw = e.big.check_highest_weight(hw)?;
    let source_dimension = group_dimension(&e.big, &hw)?;
    if source_dimension > BigUint::from(budget) {
        return Err(LieError::BudgetExceeded {
            dimension: source_dimension.to_string(),
            budget,
        });
    }
    let big = group_weight_multiplicities(&e.big, &hw)?;
    let mut image: BTreeMap<Weight, i64> = BTreeMap::new();
    for (w, m) in &big.support {
        *image.entry(e.restrict_weight(w)?).or_insert(0) += m;
    }

    let small = &e.small;
    let restricted = crate::charalg::WeightFunction {
        group: small.clone(),
        support: image.clone(),
    };
    if !restricted.is_weyl_invariant() {
        let bad = image
            .keys()
            .find(|w| !small.is_dominant(w))
            .cloned()
            .unwrap_or_else(|| hw.clone());
        return Err(LieError::NotWeylInvariant {
            embedding: e.name.to_string(),
            weight: bad.to_string(),
        });
    }

    let mut dominant: Vec<(Rat, Weight)> = image
        .keys()
        .filter(|w| small.is_dominant(w))
        .map(|w| (small.height(w), w.clone()))
        .collect();
    dominant.sort_by(|a, b| b.cmp(a));

    let mut result = FormalCharacter::new(small.clone());
    for (_, w) in dominant {
        let m = image.get(&w).copied().unwrap_or(0);
        if m < 0 {
            return Err(LieError::NegativeMultiplicity {
                embedding: e.name.to_string(),
                weight: w.to_string(),
                multiplicity: m,
            });
        }
        if m == 0 {
            continue;
        }
        let irr = group_weight_multiplicities(small, &w)?;
        for (u, k) in irr.support {
            *image.entry(u).or_insert(0) -= m * k;
        }
        result.add(w, m as u64);
    }
    if let Some((w, m)) = image.iter().find(|(_, m)| **m != 0) {
        return Err(LieError::NegativeMultiplicity {
            embedding: e.name.to_string(),
            weight: w.to_string(),
            multiplicity: *m,
        });
    }
    let out = BranchResult {
        embedding: e.name,
        source_group: e.big.clone(),
        source: hw,
        source_dimension,
        decomposition: result,
    };
    debug_assert!(out.conserves_dimension());
    Ok(out)
}
