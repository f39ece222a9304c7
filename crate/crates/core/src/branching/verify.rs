//! Sweeps comparing each closed-form rule with the generic restriction.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::catalog::embedding;
use super::restrict_generic_with_budget;
use super::rules::*;
use crate::charalg::FormalCharacter;
use crate::error::{LieError, Result};
use crate::lattice::Weight;
use crate::rational::{frac, int, Rat};
use crate::report::{Check, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Sp4ToSp2Sp2,
    Sp2ToSu2Su2,
    So5ToSo3So2,
    Spin10HalfspinToSpin8U1,
    Su6Omega3ToSp2Su2U1,
    Su6Omega3ToSp3,
}

impl Rule {
    pub const ALL: [Rule; 6] = [
        Rule::Sp4ToSp2Sp2,
        Rule::Sp2ToSu2Su2,
        Rule::So5ToSo3So2,
        Rule::Spin10HalfspinToSpin8U1,
        Rule::Su6Omega3ToSp2Su2U1,
        Rule::Su6Omega3ToSp3,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Rule::Sp4ToSp2Sp2 => "sp4_to_sp2sp2",
            Rule::Sp2ToSu2Su2 => "sp2_to_su2su2",
            Rule::So5ToSo3So2 => "so5_to_so3so2",
            Rule::Spin10HalfspinToSpin8U1 => "spin10_halfspin",
            Rule::Su6Omega3ToSp2Su2U1 => "su6_omega3",
            Rule::Su6Omega3ToSp3 => "su6_omega3_to_sp3",
        }
    }

    /// Catalog embedding used as the oracle.
    pub fn embedding_name(self) -> &'static str {
        match self {
            Rule::Sp4ToSp2Sp2 => "sp2xsp2_in_sp4",
            Rule::Sp2ToSu2Su2 => "su2su2_in_sp2",
            Rule::So5ToSo3So2 => "so3so2_in_so5",
            Rule::Spin10HalfspinToSpin8U1 => "spin8u1_in_spin10",
            Rule::Su6Omega3ToSp2Su2U1 => "sp2su2u1_in_su6",
            Rule::Su6Omega3ToSp3 => "sp3_in_su6",
        }
    }

    /// Largest parameter swept by default.
    pub fn default_range(self) -> u32 {
        match self {
            Rule::Sp2ToSu2Su2 => 8,
            Rule::So5ToSo3So2 => 5,
            _ => 4,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Rule {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Rule::ALL
            .into_iter()
            .find(|r| r.id() == s)
            .or(match s {
                "su6_omega3_to_sp2su2u1" => Some(Rule::Su6Omega3ToSp2Su2U1),
                "spin10_halfspin_to_spin8u1" => Some(Rule::Spin10HalfspinToSpin8U1),
                _ => None,
            })
            .ok_or_else(|| LieError::UnknownEmbedding(s.to_string()))
    }
}

fn half_vec(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| frac(x, 2)).collect()
}

/// `(label, source weight)` pairs swept for `rule` up to `max`.
fn parameters(rule: Rule, max: u32) -> Vec<(String, Weight)> {
    let m = max as i64;
    let mut out = Vec::new();
    match rule {
        Rule::Sp4ToSp2Sp2 => {
            for n in 0..=m {
                out.push((format!("n={n}"), Weight::from_ints(&[&[n, n, n, n]], &[])));
            }
        }
        Rule::Sp2ToSu2Su2 => {
            for x in 0..=m {
                for y in 0..=x {
                    out.push((format!("x={x},y={y}"), Weight::from_ints(&[&[x, y]], &[])));
                }
            }
        }
        Rule::So5ToSo3So2 => {
            for a2 in 0..=2 * m {
                for b2 in (a2 % 2..=a2).step_by(2) {
                    let w = Weight::simple(half_vec(&[a2, b2]));
                    out.push((format!("a={},b={}", frac(a2, 2), frac(b2, 2)), w));
                }
            }
        }
        Rule::Spin10HalfspinToSpin8U1 => {
            for n in 0..=m {
                out.push((format!("n={n}"), Weight::simple(half_vec(&[n; 5]))));
            }
        }
        Rule::Su6Omega3ToSp2Su2U1 | Rule::Su6Omega3ToSp3 => {
            for n in 0..=m {
                let hw = Weight::from_ints(&[&[n, n, n, 0, 0, 0]], &[]);
                out.push((format!("n={n}"), hw));
            }
        }
    }
    out
}

/// The closed-form side as `(label suffix, charge filter, character)` blocks.
type Block = (String, Option<Rat>, FormalCharacter);

fn closed_form(rule: Rule, w: &Weight) -> Result<Vec<Block>> {
    let p = &w.parts[0];
    let level = |q: &Rat| (q.to_integer()) as u32;
    Ok(match rule {
        Rule::Sp4ToSp2Sp2 => vec![(String::new(), None, branch_sp4_to_sp2sp2(level(&p[0])))],
        Rule::Sp2ToSu2Su2 => vec![(
            String::new(),
            None,
            branch_sp2_to_su2su2(level(&p[0]), level(&p[1]))?,
        )],
        Rule::So5ToSo3So2 => vec![(String::new(), None, branch_so5_to_so3so2(p[0], p[1])?)],
        Rule::Spin10HalfspinToSpin8U1 => vec![(
            String::new(),
            None,
            branch_spin10_halfspin_to_spin8u1(level(&(p[0] * int(2)))),
        )],
        Rule::Su6Omega3ToSp2Su2U1 => {
            let n = (p[0] - p[5]).to_integer();
            (-n..=n)
                .map(|m| {
                    (
                        format!(",m={m}"),
                        Some(int(m)),
                        branch_su6_omega3_to_sp2su2u1(n as u32, m),
                    )
                })
                .collect()
        }
        Rule::Su6Omega3ToSp3 => {
            let n = (p[0] - p[5]).to_integer() as u32;
            vec![(String::new(), None, branch_su6_omega3_to_sp3(n).character)]
        }
    })
}

fn checks_for(rule: Rule, label: &str, w: &Weight, budget: u64) -> Result<Vec<Check>> {
    let e = embedding(rule.embedding_name())?;
    let generic = restrict_generic_with_budget(e, w, budget)?;
    let mut checks = Vec::new();
    for (suffix, charge, expected) in closed_form(rule, w)? {
        let actual = match charge {
            Some(m) => {
                let mut block = FormalCharacter::new(generic.decomposition.group.clone());
                for (t, k) in &generic.decomposition.terms {
                    if t.charges == [m] {
                        block.add(t.clone(), *k);
                    }
                }
                block
            }
            None => generic.decomposition.clone(),
        };
        checks.push(Check::compare(
            format!("{} {label}{suffix}", rule.id()),
            expected.pretty(),
            actual.pretty(),
        ));
    }
    checks.push(Check::compare(
        format!("{} {label} dimension", rule.id()),
        generic.source_dimension.to_string(),
        generic.decomposition.total_dimension().to_string(),
    ));
    Ok(checks)
}

/// Compares the closed form for `rule` with the generic restriction for all
/// parameters up to `max`. Checks come back sorted by parameter.
pub fn verify_rule(rule: Rule, max: u32, budget: u64) -> Result<Report> {
    let params = parameters(rule, max);
    let per_param: Vec<Result<Vec<Check>>> = params
        .par_iter()
        .map(|(label, w)| checks_for(rule, label, w, budget))
        .collect();
    let mut report = Report::new(format!("rule {}", rule.id()));
    for r in per_param {
        for c in r? {
            report.push(c);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branching::DEFAULT_BUDGET;

    #[test]
    fn rule_ids_round_trip() {
        for r in Rule::ALL {
            assert_eq!(r.id().parse::<Rule>().unwrap(), r);
        }
        assert!("nope".parse::<Rule>().is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        for r in Rule::ALL {
            let report = verify_rule(r, 2, DEFAULT_BUDGET).unwrap();
            assert!(
                report.all_passed(),
                "{:?}",
                report.failures().collect::<Vec<_>>()
            );
        }
    }
}
