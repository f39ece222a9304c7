//! Graded K-type models of minimal representations and their restrictions
//! to the compact parts of dual pairs.
//!
//! Sign convention: a K-type whose graded sign at its first level is `+1`
//! is assigned to `ρ(1)`, a sign of `−1` to `ε`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::branching::{
    branch_so5_to_so3so2, branch_sp2_to_su2su2, branch_su6_omega3_to_sp2su2u1,
    branch_su6_omega3_to_sp3, embedding, restrict_generic,
};
use crate::charalg::{tensor_decompose, FormalCharacter};
use crate::error::{LieError, Result};
use crate::lattice::{root_system, CartanType, GroupSpec, Weight};
use crate::rational::{frac, int, ints, Rat};

use CartanType::{A, C, D};

fn group(types: &[CartanType], circles: usize) -> GroupSpec {
    GroupSpec::product(types, circles).expect("supported")
}

fn parity_sign(n: i64) -> i8 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// A1 Clebsch–Gordan through the generic tensor product.
fn su2_tensor(a: i64, b: i64) -> Vec<i64> {
    let rs = root_system(A(1)).expect("A1");
    tensor_decompose(&rs, &ints(&[a]), &ints(&[b]))
        .expect("A1 labels are dominant")
        .terms
        .keys()
        .map(|w| w.parts[0][0].to_integer())
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MinrepCase {
    SplitE6,
    HermitianE6,
    E62Compact,
}

impl MinrepCase {
    pub const ALL: [MinrepCase; 3] = [
        MinrepCase::SplitE6,
        MinrepCase::HermitianE6,
        MinrepCase::E62Compact,
    ];

    pub fn id(self) -> &'static str {
        match self {
            MinrepCase::SplitE6 => "split-E6",
            MinrepCase::HermitianE6 => "hermitian-E6",
            MinrepCase::E62Compact => "e62-compact",
        }
    }

    pub fn group(self) -> GroupSpec {
        match self {
            MinrepCase::SplitE6 => group(&[C(4)], 0),
            MinrepCase::HermitianE6 => group(&[A(1), A(5)], 0),
            MinrepCase::E62Compact => group(&[D(5)], 1),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DualPairCase {
    SplitJSplitE,
    SplitJMixedE,
    HermJMixedE,
    E62Spin8,
}

impl DualPairCase {
    pub const ALL: [DualPairCase; 4] = [
        DualPairCase::SplitJSplitE,
        DualPairCase::SplitJMixedE,
        DualPairCase::HermJMixedE,
        DualPairCase::E62Spin8,
    ];

    pub fn id(self) -> &'static str {
        match self {
            DualPairCase::SplitJSplitE => "splitJ-splitE",
            DualPairCase::SplitJMixedE => "splitJ-mixedE",
            DualPairCase::HermJMixedE => "hermJ-mixedE",
            DualPairCase::E62Spin8 => "e62-spin8",
        }
    }

    pub fn group(self) -> GroupSpec {
        match self {
            DualPairCase::SplitJSplitE => group(&[A(1), A(1), A(1), A(1)], 0),
            DualPairCase::SplitJMixedE | DualPairCase::HermJMixedE => group(&[C(2), A(1)], 1),
            DualPairCase::E62Spin8 => group(&[D(4)], 3),
        }
    }

    /// Group of the K-types without circle factors.
    pub fn type_group(self) -> GroupSpec {
        GroupSpec {
            factors: self.group().factors,
            circle_count: 0,
        }
    }

    /// Charge grading of a term, for the cases that carry one.
    pub fn charge_of(self, w: &Weight) -> Option<Rat> {
        match self {
            DualPairCase::SplitJSplitE => None,
            DualPairCase::SplitJMixedE | DualPairCase::HermJMixedE => Some(w.charges[0]),
            DualPairCase::E62Spin8 => Some(w.parts[0][3] * int(2)),
        }
    }

    /// Sign grading of level `n`, for the cases that carry one.
    pub fn sign_of_level(self, n: u32) -> Option<i8> {
        match self {
            DualPairCase::SplitJSplitE => Some(parity_sign(n as i64)),
            _ => None,
        }
    }
}

macro_rules! case_names {
    ($t:ty) => {
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.id())
            }
        }

        impl FromStr for $t {
            type Err = LieError;

            fn from_str(s: &str) -> Result<Self> {
                <$t>::ALL
                    .into_iter()
                    .find(|c| c.id().eq_ignore_ascii_case(s.trim()))
                    .ok_or_else(|| LieError::InvalidInput(format!("unknown case {s:?}")))
            }
        }
    };
}

case_names!(MinrepCase);
case_names!(DualPairCase);

/// Levels `0..=N` of a graded K-type decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCharacter {
    pub group: GroupSpec,
    pub levels: Vec<FormalCharacter>,
    pub charge_grading: Option<Vec<BTreeMap<Weight, Rat>>>,
    pub sign_grading: Option<Vec<BTreeMap<Weight, i8>>>,
}

impl GradedCharacter {
    pub fn truncation(&self) -> u32 {
        self.levels.len().saturating_sub(1) as u32
    }

    pub fn level(&self, n: u32) -> Option<&FormalCharacter> {
        self.levels.get(n as usize)
    }

    /// Gradings, when present, cover exactly the terms of every level.
    pub fn gradings_cover_terms(&self) -> bool {
        fn covers<V>(levels: &[FormalCharacter], g: &Option<Vec<BTreeMap<Weight, V>>>) -> bool {
            match g {
                None => true,
                Some(g) => {
                    g.len() == levels.len()
                        && levels
                            .iter()
                            .zip(g)
                            .all(|(l, m)| l.terms.keys().eq(m.keys()))
                }
            }
        }
        covers(&self.levels, &self.charge_grading) && covers(&self.levels, &self.sign_grading)
    }
}

fn minrep_level(case: MinrepCase, n: u32) -> FormalCharacter {
    let g = case.group();
    let k = n as i64;
    let w = match case {
        MinrepCase::SplitE6 => Weight::from_ints(&[&[k, k, k, k]], &[]),
        MinrepCase::HermitianE6 => {
            g.normalize(&Weight::from_ints(&[&[k + 2], &[k, k, k, 0, 0, 0]], &[]))
        }
        MinrepCase::E62Compact => Weight::new(vec![vec![frac(k, 2); 5]], vec![int(k + 4)]),
    };
    let mut out = FormalCharacter::new(g);
    out.add(w, 1);
    out
}

/// The minimal representation as a graded sum of K-types up to level `n_max`.
pub fn minrep_levels(case: MinrepCase, n_max: u32) -> GradedCharacter {
    let levels: Vec<FormalCharacter> = (0..=n_max).map(|n| minrep_level(case, n)).collect();
    let grade = |f: &dyn Fn(u32, &Weight) -> Rat| -> Vec<BTreeMap<Weight, Rat>> {
        levels
            .iter()
            .enumerate()
            .map(|(n, l)| {
                l.terms
                    .keys()
                    .map(|w| (w.clone(), f(n as u32, w)))
                    .collect()
            })
            .collect()
    };
    let charge_grading = match case {
        MinrepCase::E62Compact => Some(grade(&|_, w| w.charges[0])),
        _ => None,
    };
    let sign_grading = match case {
        MinrepCase::SplitE6 => Some(
            levels
                .iter()
                .enumerate()
                .map(|(n, l)| {
                    l.terms
                        .keys()
                        .map(|w| (w.clone(), parity_sign(n as i64)))
                        .collect()
                })
                .collect(),
        ),
        _ => None,
    };
    GradedCharacter {
        group: case.group(),
        levels,
        charge_grading,
        sign_grading,
    }
}

/// Charge-`m` part of `V_{nω₃} ⊗ V_{n+2}` on `Sp(2) × SU₂ × U(1)`.
pub fn hermj_block(n: u32, m: i64) -> Arc<FormalCharacter> {
    type Cache = Mutex<HashMap<(u32, i64), Arc<FormalCharacter>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.lock().expect("cache").get(&(n, m)) {
        return c.clone();
    }
    let block = branch_su6_omega3_to_sp2su2u1(n, m);
    let mut out = FormalCharacter::new(block.group.clone());
    for (w, mult) in &block.terms {
        let k = w.parts[1][0].to_integer();
        for j in su2_tensor(k, n as i64 + 2) {
            out.add(
                Weight::new(vec![w.parts[0].clone(), ints(&[j])], w.charges.clone()),
                *mult,
            );
        }
    }
    let out = Arc::new(out);
    cache.lock().expect("cache").insert((n, m), out.clone());
    out
}

fn compute_dualpair_level(case: DualPairCase, n: u32) -> Result<FormalCharacter> {
    let mut out = FormalCharacter::new(case.group());
    let k = n as i64;
    match case {
        DualPairCase::SplitJSplitE => {
            for x in 0..=n {
                for y in 0..=x {
                    let b = branch_sp2_to_su2su2(x, y)?;
                    for (u, p) in &b.terms {
                        for (v, q) in &b.terms {
                            let parts = vec![
                                u.parts[0].clone(),
                                u.parts[1].clone(),
                                v.parts[0].clone(),
                                v.parts[1].clone(),
                            ];
                            out.add(Weight::new(parts, vec![]), p * q);
                        }
                    }
                }
            }
        }
        DualPairCase::SplitJMixedE => {
            for x in 0..=k {
                for y in 0..=x {
                    let b = branch_so5_to_so3so2(frac(x + y, 2), frac(x - y, 2))?;
                    for (u, p) in &b.terms {
                        let parts = vec![ints(&[x, y]), u.parts[0].clone()];
                        out.add(Weight::new(parts, u.charges.clone()), *p);
                    }
                }
            }
        }
        DualPairCase::HermJMixedE => {
            for m in -k..=k {
                out.extend(&hermj_block(n, m));
            }
        }
        DualPairCase::E62Spin8 => {
            for b in (-k..=k).step_by(2) {
                let h = frac(k, 2);
                let w = Weight::new(
                    vec![vec![h, h, h, frac(b, 2)]],
                    vec![int(k + 4), frac(-(b + k), 2) - 2, frac(b - k, 2) - 2],
                );
                out.add(w, 1);
            }
        }
    }
    Ok(out)
}

/// Level `n` of the restriction of the minimal representation to the
/// compact part of the dual pair, cached.
pub fn dualpair_level(case: DualPairCase, n: u32) -> Result<Arc<FormalCharacter>> {
    type Cache = Mutex<HashMap<(DualPairCase, u32), Arc<FormalCharacter>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.lock().expect("cache").get(&(case, n)) {
        return Ok(c.clone());
    }
    let level = Arc::new(compute_dualpair_level(case, n)?);
    cache
        .lock()
        .expect("cache")
        .insert((case, n), level.clone());
    Ok(level)
}

pub fn dualpair_graded(case: DualPairCase, n_max: u32) -> Result<GradedCharacter> {
    let levels: Vec<FormalCharacter> = (0..=n_max)
        .into_par_iter()
        .map(|n| dualpair_level(case, n).map(|l| (*l).clone()))
        .collect::<Result<_>>()?;
    let charge_grading = match case {
        DualPairCase::SplitJSplitE => None,
        _ => Some(
            levels
                .iter()
                .map(|l| {
                    l.terms
                        .keys()
                        .map(|w| (w.clone(), case.charge_of(w).expect("charged case")))
                        .collect()
                })
                .collect(),
        ),
    };
    let sign_grading = case.sign_of_level(0).map(|_| {
        levels
            .iter()
            .enumerate()
            .map(|(n, l)| {
                let s = case.sign_of_level(n as u32).expect("signed case");
                l.terms.keys().map(|w| (w.clone(), s)).collect()
            })
            .collect()
    });
    Ok(GradedCharacter {
        group: case.group(),
        levels,
        charge_grading,
        sign_grading,
    })
}

fn invalid(case: DualPairCase, reason: impl Into<String>) -> LieError {
    LieError::InvalidType {
        case: case.id().to_string(),
        reason: reason.into(),
    }
}

/// Checks that `ty` (charges ignored) and `m` can occur in `case`.
/// Returns the normalized type without charges.
pub fn validate_type(case: DualPairCase, ty: &Weight, m: Option<Rat>) -> Result<Weight> {
    let ty = case
        .type_group()
        .check_highest_weight(&ty.without_charges())?;
    let label = |i: usize| ty.parts[i][0].to_integer();
    match case {
        DualPairCase::SplitJSplitE => {
            if m.is_some() {
                return Err(invalid(case, "this case carries no charge grading"));
            }
        }
        DualPairCase::SplitJMixedE => {
            let (x, y) = (ty.parts[0][0].to_integer(), ty.parts[0][1].to_integer());
            if (x + y - label(1)) % 2 != 0 {
                return Err(invalid(
                    case,
                    format!("{ty}: z must have the parity of x+y"),
                ));
            }
            if let Some(m) = m {
                if !(m - frac(x - y, 2)).is_integer() {
                    return Err(invalid(case, format!("charge {m} impossible for {ty}")));
                }
            }
        }
        DualPairCase::HermJMixedE => {
            let (x, y) = (ty.parts[0][0].to_integer(), ty.parts[0][1].to_integer());
            if (x + y - label(1)) % 2 != 0 {
                return Err(invalid(
                    case,
                    format!("{ty}: z must have the parity of x+y"),
                ));
            }
            if let Some(m) = m {
                if !m.is_integer() || (m.to_integer() - x - y) % 2 != 0 {
                    return Err(invalid(case, format!("charge {m} impossible for {ty}")));
                }
            }
        }
        DualPairCase::E62Spin8 => {
            if let Some(m) = m {
                if !m.is_integer() {
                    return Err(invalid(case, format!("charge {m} is not an integer")));
                }
            }
        }
    }
    Ok(ty)
}

fn count_in_level(case: DualPairCase, level: &FormalCharacter, ty: &Weight, m: Option<Rat>) -> u64 {
    level
        .terms
        .iter()
        .filter(|(w, _)| w.parts == ty.parts && (m.is_none() || case.charge_of(w) == m))
        .map(|(_, k)| *k)
        .sum()
}

/// Multiplicity of the K-type `ty` in level `n`, restricted to charge `m` when given.
pub fn ktype_multiplicity(case: DualPairCase, ty: &Weight, m: Option<Rat>, n: u32) -> Result<u64> {
    let ty = validate_type(case, ty, m)?;
    Ok(count_in_level(case, &*dualpair_level(case, n)?, &ty, m))
}

/// Multiplicities of `ty` at levels `0..=n_max`.
pub fn ktype_values(
    case: DualPairCase,
    ty: &Weight,
    m: Option<Rat>,
    n_max: u32,
) -> Result<Vec<u64>> {
    let ty = validate_type(case, ty, m)?;
    (0..=n_max)
        .into_par_iter()
        .map(|n| Ok(count_in_level(case, &*dualpair_level(case, n)?, &ty, m)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct So3Invariants {
    pub count: u64,
    /// Set when `a+b+c+d` is odd; the count is then 0.
    pub parity_warning: bool,
}

/// Dimension of the `SU₂`-invariants in `V_a ⊗ V_b ⊗ V_c ⊗ V_d`.
pub fn so3_invariants(a: u32, b: u32, c: u32, d: u32) -> So3Invariants {
    if !(a + b + c + d).is_multiple_of(2) {
        return So3Invariants {
            count: 0,
            parity_warning: true,
        };
    }
    let mut acc: BTreeMap<i64, u64> = BTreeMap::from([(a as i64, 1)]);
    for f in [b, c] {
        let mut next = BTreeMap::new();
        for (j, k) in &acc {
            for l in su2_tensor(*j, f as i64) {
                *next.entry(l).or_insert(0) += k;
            }
        }
        acc = next;
    }
    So3Invariants {
        count: acc.get(&(d as i64)).copied().unwrap_or(0),
        parity_warning: false,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignTag {
    Rho1,
    Epsilon,
}

impl SignTag {
    pub fn from_sign(s: i8) -> Self {
        if s > 0 {
            SignTag::Rho1
        } else {
            SignTag::Epsilon
        }
    }
}

impl fmt::Display for SignTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignTag::Rho1 => "rho1",
            SignTag::Epsilon => "epsilon",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignAssignment {
    pub tag: SignTag,
    /// First level at which the type occurs.
    pub level: u32,
    pub sign: i8,
}

/// Trace of the `O(2)` reflection on the `Sp(1) × SO(2)`-invariants of
/// `Sym^{2k}(ℂ⁴)`, read off `h_{2k}(t, 1/t, −t, −1/t)` as `[t⁰] − [t²]`.
pub fn o2_reflection_trace(k: u32) -> i64 {
    let deg = 2 * k as usize;
    // poly[e + deg] = coefficient of t^e.
    let width = 2 * deg + 1;
    let vars: [(i64, i64); 4] = [(1, 1), (-1, 1), (1, -1), (-1, -1)];
    // h_d over the first j variables, built one variable at a time.
    let mut table: Vec<Vec<i64>> = (0..=deg)
        .map(|d| {
            let mut p = vec![0; width];
            if d == 0 {
                p[deg] = 1;
            }
            p
        })
        .collect();
    for (exp, coef) in vars {
        let prev = table.clone();
        for d in 1..=deg {
            let mut p = prev[d].clone();
            for (i, c) in table[d - 1].iter().enumerate() {
                if *c != 0 {
                    let j = (i as i64 + exp) as usize;
                    p[j] += coef * c;
                }
            }
            table[d] = p;
        }
    }
    let h = &table[deg];
    let at = |e: i64| h.get((e + deg as i64) as usize).copied().unwrap_or(0);
    at(0) - at(2)
}

fn not_covered(case: DualPairCase, ty: &Weight) -> LieError {
    LieError::NotCovered(format!("sign rule for {ty} in {case}"))
}

/// Scan limit for first appearances.
const FIRST_LEVEL_SCAN: u32 = 64;

fn first_level(case: DualPairCase, ty: &Weight, m: Option<Rat>, limit: u32) -> Result<Option<u32>> {
    for n in 0..=limit {
        if count_in_level(case, &*dualpair_level(case, n)?, ty, m) > 0 {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Signed and unsigned multiplicity of `V_{(0,0)} ⊗ V_{2k}` at level `n` of
/// the hermitian model, with the sign of `V_{(n,j,j)}` inside `V_{nω₃}|Sp(3)`
/// carried through the generic restriction to `Sp(2) × Sp(1)`.
pub fn hermj_trivial_type_signed(n: u32, z: i64) -> Result<(i64, u64)> {
    let e = embedding("sp2sp1_in_sp3")?;
    let sp3 = branch_su6_omega3_to_sp3(n);
    let mut signed = 0i64;
    let mut unsigned = 0u64;
    for (w, mult) in &sp3.character.terms {
        let s = sp3.signs[w] as i64;
        let r = restrict_generic(e, w)?;
        for (u, k) in &r.decomposition.terms {
            if u.parts[0].iter().any(|q| *q != int(0)) {
                continue;
            }
            let j = u.parts[1][0].to_integer();
            let hits = su2_tensor(j, n as i64 + 2)
                .into_iter()
                .filter(|l| *l == z)
                .count() as u64;
            signed += s * (hits * k * mult) as i64;
            unsigned += hits * k * mult;
        }
    }
    Ok((signed, unsigned))
}

/// `ρ(1)`/`ε` assignment of a K-type, with its first level.
///
/// Covered families: even `V(a,b,c,0)` triangle types (any position of the
/// zero) in splitJ-splitE; `V_{(2k,0)} ⊗ V₀` at charge 0 in splitJ-mixedE;
/// `V_{(0,0)} ⊗ V_{2k}`, `k > 0`, in hermJ-mixedE.
pub fn sign_first_appearance(case: DualPairCase, ty: &Weight) -> Result<SignAssignment> {
    let ty = validate_type(case, ty, None)?;
    match case {
        DualPairCase::SplitJSplitE => {
            let l: Vec<i64> = (0..4).map(|i| ty.parts[i][0].to_integer()).collect();
            let Some(zero) = l.iter().position(|v| *v == 0) else {
                return Err(not_covered(case, &ty));
            };
            let rest: Vec<i64> = (0..4).filter(|i| *i != zero).map(|i| l[i]).collect();
            let s: i64 = rest.iter().sum();
            let triangle = rest.iter().all(|v| 2 * v <= s);
            if l.iter().any(|v| v % 2 != 0) || !triangle {
                return Err(not_covered(case, &ty));
            }
            let level = first_level(case, &ty, None, FIRST_LEVEL_SCAN)?
                .ok_or_else(|| not_covered(case, &ty))?;
            let sign = case.sign_of_level(level).expect("signed case");
            Ok(SignAssignment {
                tag: SignTag::from_sign(sign),
                level,
                sign,
            })
        }
        DualPairCase::SplitJMixedE => {
            let (x, y, z) = (
                ty.parts[0][0].to_integer(),
                ty.parts[0][1].to_integer(),
                ty.parts[1][0].to_integer(),
            );
            if y != 0 || z != 0 || x % 2 != 0 {
                return Err(not_covered(case, &ty));
            }
            let level = first_level(case, &ty, Some(int(0)), FIRST_LEVEL_SCAN)?
                .ok_or_else(|| not_covered(case, &ty))?;
            let sign =
                parity_sign(level as i64) * o2_reflection_trace((x / 2) as u32).signum() as i8;
            Ok(SignAssignment {
                tag: SignTag::from_sign(sign),
                level,
                sign,
            })
        }
        DualPairCase::HermJMixedE => {
            let (x, y, z) = (
                ty.parts[0][0].to_integer(),
                ty.parts[0][1].to_integer(),
                ty.parts[1][0].to_integer(),
            );
            if x != 0 || y != 0 || z == 0 || z % 2 != 0 {
                return Err(not_covered(case, &ty));
            }
            for n in 0..=FIRST_LEVEL_SCAN {
                let (signed, unsigned) = hermj_trivial_type_signed(n, z)?;
                if unsigned == 0 {
                    continue;
                }
                if signed.unsigned_abs() != unsigned {
                    return Err(LieError::NotCovered(format!(
                        "{ty} occurs with mixed signs at level {n}"
                    )));
                }
                let sign = signed.signum() as i8;
                return Ok(SignAssignment {
                    tag: SignTag::from_sign(sign),
                    level: n,
                    sign,
                });
            }
            Err(not_covered(case, &ty))
        }
        DualPairCase::E62Spin8 => Err(not_covered(case, &ty)),
    }
}

/// Outcome of the graded-growth check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthVerdict {
    pub accepted: bool,
    /// Eventual constant increment.
    pub bound: Option<u64>,
    /// First index of the final run of equal increments.
    pub onset: Option<u32>,
    pub reason: Option<String>,
}

/// Accepts a non-decreasing sequence whose increments are eventually constant
/// (final run of at least two equal increments).
pub fn verify_growth(values: &[u64]) -> GrowthVerdict {
    let reject = |reason: String| GrowthVerdict {
        accepted: false,
        bound: None,
        onset: None,
        reason: Some(reason),
    };
    if let Some(i) = (1..values.len()).find(|&i| values[i] < values[i - 1]) {
        return reject(format!(
            "decreases at index {i}: {} -> {}",
            values[i - 1],
            values[i]
        ));
    }
    if values.len() < 2 {
        return reject("need at least two terms".to_string());
    }
    let inc: Vec<u64> = std::iter::once(values[0])
        .chain(values.windows(2).map(|w| w[1] - w[0]))
        .collect();
    let last = *inc.last().expect("non-empty");
    let mut onset = inc.len() - 1;
    while onset > 0 && inc[onset - 1] == last {
        onset -= 1;
    }
    if inc.len() - onset < 2 {
        return reject("increments have not settled".to_string());
    }
    GrowthVerdict {
        accepted: true,
        bound: Some(last),
        onset: Some(onset as u32),
        reason: None,
    }
}

/// Multiplicities of one K-type across levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicitySeries {
    pub target: String,
    pub values: Vec<u64>,
    pub first_level: Option<u32>,
    pub stabilized_value: u64,
}

/// How the stabilized value of a series is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stabilization {
    /// Eventual constant increment of the values.
    Increment,
    /// Eventual constant value.
    Value,
}

impl MultiplicitySeries {
    pub fn new(target: impl Into<String>, values: Vec<u64>, mode: Stabilization) -> Self {
        let first_level = values.iter().position(|v| *v > 0).map(|i| i as u32);
        let last = values.last().copied().unwrap_or(0);
        let stabilized_value = match mode {
            Stabilization::Value => last,
            Stabilization::Increment => match values.len() {
                0 => 0,
                1 => last,
                k => last - values[k - 2].min(last),
            },
        };
        MultiplicitySeries {
            target: target.into(),
            values,
            first_level,
            stabilized_value,
        }
    }

    pub fn cumulative(&self) -> Vec<u64> {
        self.values
            .iter()
            .scan(0u64, |acc, v| {
                *acc += v;
                Some(*acc)
            })
            .collect()
    }

    /// Runs the growth check on the values themselves (`Increment` series)
    /// or on their partial sums (`Value` series).
    pub fn growth(&self, mode: Stabilization) -> GrowthVerdict {
        match mode {
            Stabilization::Increment => verify_growth(&self.values),
            Stabilization::Value => {
                let mut v = verify_growth(&self.cumulative());
                if let Some(i) =
                    (1..self.values.len()).find(|&i| self.values[i] < self.values[i - 1])
                {
                    v = GrowthVerdict {
                        accepted: false,
                        bound: None,
                        onset: None,
                        reason: Some(format!("multiplicity decreases at level {i}")),
                    };
                }
                v
            }
        }
    }
}

/// Series of `ty` (charge `m` when given) over levels `0..=n_max`.
pub fn ktype_series(
    case: DualPairCase,
    ty: &Weight,
    m: Option<Rat>,
    n_max: u32,
    mode: Stabilization,
) -> Result<MultiplicitySeries> {
    let values = ktype_values(case, ty, m, n_max)?;
    let target = match m {
        Some(m) => format!("{}[{m}]", crate::charalg::pretty_weight(ty)),
        None => crate::charalg::pretty_weight(ty),
    };
    Ok(MultiplicitySeries::new(target, values, mode))
}
