//! Closed-form branching rules. Each returns a character of the small group
//! of the matching catalog embedding, so results compare directly with
//! [`super::restrict_generic`].

use std::collections::BTreeMap;

use crate::charalg::FormalCharacter;
use crate::error::{LieError, Result};
use crate::lattice::{CartanType, GroupSpec, Weight};
use crate::rational::{frac, int, is_half_odd, Rat};

use CartanType::{A, C, D};

fn group(types: &[CartanType], circles: usize) -> GroupSpec {
    GroupSpec::product(types, circles).expect("rule groups are supported")
}

/// A character together with a ±1 tag on each term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedCharacter {
    pub character: FormalCharacter,
    pub signs: BTreeMap<Weight, i8>,
}

impl SignedCharacter {
    /// Σ sign · mult · dim.
    pub fn signed_dimension(&self) -> num_bigint::BigInt {
        self.character
            .terms
            .iter()
            .map(|(w, m)| {
                let d = crate::charalg::group_dimension(&self.character.group, w)
                    .expect("stored weights are valid");
                num_bigint::BigInt::from(d) * (*m as i64) * (self.signs[w] as i64)
            })
            .sum()
    }
}

/// `V_{nω₄}` of `Sp(4)` on `Sp(2) × Sp(2)`: `V_μ ⊠ V_μ` over `n ≥ x ≥ y ≥ 0`.
pub fn branch_sp4_to_sp2sp2(n: u32) -> FormalCharacter {
    let n = n as i64;
    let mut out = FormalCharacter::new(group(&[C(2), C(2)], 0));
    for x in 0..=n {
        for y in 0..=x {
            out.add(Weight::from_ints(&[&[x, y], &[x, y]], &[]), 1);
        }
    }
    out
}

/// `V_{(x,y)}` of `Sp(2)` on `SU₂ × SU₂`: `V_a ⊠ V_b` with
/// `|a−b| ≤ x−y ≤ a+b ≤ x+y` and `a+b ≡ x+y (mod 2)`.
pub fn branch_sp2_to_su2su2(x: u32, y: u32) -> Result<FormalCharacter> {
    if y > x {
        return Err(LieError::NotDominant {
            group: "C2".into(),
            weight: format!("{x},{y}"),
        });
    }
    let (x, y) = (x as i64, y as i64);
    let mut out = FormalCharacter::new(group(&[A(1), A(1)], 0));
    for a in 0..=x + y {
        for b in 0..=x + y - a {
            let s = a + b;
            if (a - b).abs() <= x - y && x - y <= s && s <= x + y && (s - x - y) % 2 == 0 {
                out.add(Weight::from_ints(&[&[a], &[b]], &[]), 1);
            }
        }
    }
    Ok(out)
}

/// `χ_n + χ_{n−step} + … + χ_{−n}` as charge → multiplicity.
fn so2_string(n: Rat, step: i64) -> BTreeMap<Rat, u64> {
    let mut out = BTreeMap::new();
    let mut k = n;
    while k >= -n {
        *out.entry(k).or_insert(0) += 1;
        k -= int(step);
    }
    out
}

fn so2_product(a: &BTreeMap<Rat, u64>, b: &BTreeMap<Rat, u64>) -> BTreeMap<Rat, u64> {
    let mut out = BTreeMap::new();
    for (p, m) in a {
        for (q, k) in b {
            *out.entry(p + q).or_insert(0) += m * k;
        }
    }
    out
}

/// `SO(5)` highest weight `(a, b)` on `SO(3) × SO(2)`. The `SO(3)` weight `c`
/// is reported as the `A1` label `2c`; charges may be half-integers.
pub fn branch_so5_to_so3so2(a: Rat, b: Rat) -> Result<FormalCharacter> {
    let same_class = (a.is_integer() && b.is_integer()) || (is_half_odd(&a) && is_half_odd(&b));
    if !same_class || b < int(0) || a < b {
        return Err(LieError::NotDominant {
            group: "B2".into(),
            weight: format!("{a},{b}"),
        });
    }
    let mut out = FormalCharacter::new(group(&[A(1)], 1));
    let mut c = if a.is_integer() { int(0) } else { frac(1, 2) };
    while c <= a {
        let chi = if c >= b {
            so2_product(&so2_string(b, 1), &so2_string(a - c, 2))
        } else {
            so2_product(&so2_string(c, 1), &so2_string(a - b, 2))
        };
        for (k, m) in chi {
            out.add(Weight::new(vec![vec![int(2) * c]], vec![k]), m);
        }
        c += int(1);
    }
    Ok(out)
}

/// `V_{nω₅}` of `Spin(10)` on `Spin(8) × U(1)`: `V_{(n,n,n,b)/2} ⊠ χ_b`
/// over `|b| ≤ n`, `b ≡ n (mod 2)`.
pub fn branch_spin10_halfspin_to_spin8u1(n: u32) -> FormalCharacter {
    let n = n as i64;
    let mut out = FormalCharacter::new(group(&[D(4)], 1));
    for b in (-n..=n).step_by(2) {
        let h = frac(n, 2);
        out.add(
            Weight::new(vec![vec![h, h, h, frac(b, 2)]], vec![int(b)]),
            1,
        );
    }
    out
}

/// Charge-`m` block of `V_{nω₃}` of `SU(6)` on `Sp(2) × SU₂ × U(1)`:
/// `V_{(x,y)} ⊗ V_{n−m−2t}` over `t` and `(x,y)` with
/// `2n−2t−2m ≥ x+y−m ≥ 2t ≥ x−y−m ≥ 0`, `x+y ≡ m (mod 2)`.
/// Negative `m` is the charge negation of `|m|`; `|m| > n` is empty.
pub fn branch_su6_omega3_to_sp2su2u1(n: u32, m: i64) -> FormalCharacter {
    let g = group(&[C(2), A(1)], 1);
    let mut out = FormalCharacter::new(g);
    let n = n as i64;
    let am = m.abs();
    if am > n {
        return out;
    }
    for t in 0..=(n - am) / 2 {
        let k = n - am - 2 * t;
        for x in 0..=2 * n {
            for y in 0..=x {
                let s = x + y - am;
                let d = x - y - am;
                if 2 * n - 2 * t - 2 * am >= s
                    && s >= 2 * t
                    && 2 * t >= d
                    && d >= 0
                    && (x + y - am) % 2 == 0
                {
                    out.add(Weight::from_ints(&[&[x, y], &[k]], &[m]), 1);
                }
            }
        }
    }
    out
}

/// Full `V_{nω₃}` on `Sp(2) × SU₂ × U(1)`, all charges.
pub fn branch_su6_omega3_all_charges(n: u32) -> FormalCharacter {
    let mut out = FormalCharacter::new(group(&[C(2), A(1)], 1));
    for m in -(n as i64)..=n as i64 {
        out.extend(&branch_su6_omega3_to_sp2su2u1(n, m));
    }
    out
}

/// `V_{nω₃}` of `SU(6)` on `Sp(3)`: `V_{(n,m,m)}` for `0 ≤ m ≤ n`, tagged by
/// the sign `(−1)^{n−m}` of the outer involution centralizing `Sp(3)`.
pub fn branch_su6_omega3_to_sp3(n: u32) -> SignedCharacter {
    let n = n as i64;
    let mut character = FormalCharacter::new(group(&[C(3)], 0));
    let mut signs = BTreeMap::new();
    for m in 0..=n {
        let w = Weight::from_ints(&[&[n, m, m]], &[]);
        character.add(w.clone(), 1);
        signs.insert(w, if (n - m) % 2 == 0 { 1 } else { -1 });
    }
    SignedCharacter { character, signs }
}
