//! Characters of irreducible representations: Weyl dimension formula,
//! Freudenthal multiplicities, tensor products, infinitesimal characters.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{LieError, Result};
use crate::lattice::{CartanType, GroupSpec, RootSystem, Weight};
use crate::rational::{add, dot, fmt_list, int, sub, Rat};

/// A genuine (non-negative) character: dominant weight -> multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalCharacter {
    pub group: GroupSpec,
    pub terms: BTreeMap<Weight, u64>,
}

impl FormalCharacter {
    pub fn new(group: GroupSpec) -> Self {
        FormalCharacter {
            group,
            terms: BTreeMap::new(),
        }
    }

    pub fn trivial(group: GroupSpec) -> Self {
        let w = Weight::new(
            group
                .factors
                .iter()
                .map(|rs| vec![Rat::zero(); rs.ambient_dim])
                .collect(),
            vec![Rat::zero(); group.circle_count],
        );
        let mut c = FormalCharacter::new(group);
        c.add(w, 1);
        c
    }

    pub fn add(&mut self, w: Weight, mult: u64) {
        if mult > 0 {
            *self.terms.entry(w).or_insert(0) += mult;
        }
    }

    pub fn extend(&mut self, other: &FormalCharacter) {
        for (w, m) in &other.terms {
            self.add(w.clone(), *m);
        }
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Number of irreducible summands counted with multiplicity.
    pub fn total_multiplicity(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn total_dimension(&self) -> BigUint {
        self.terms
            .iter()
            .map(|(w, m)| group_dimension(&self.group, w).expect("stored weights are valid") * m)
            .sum()
    }

    /// Converts an integer-valued map, failing on negative entries.
    pub fn from_virtual(group: GroupSpec, v: BTreeMap<Weight, i64>, context: &str) -> Result<Self> {
        let mut c = FormalCharacter::new(group);
        for (w, m) in v {
            if m < 0 {
                return Err(LieError::NegativeMultiplicity {
                    embedding: context.to_string(),
                    weight: w.to_string(),
                    multiplicity: m,
                });
            }
            c.add(w, m as u64);
        }
        Ok(c)
    }

    /// Terms with the given charge vector, charges dropped from the keys' group.
    pub fn charge_block(&self, charges: &[Rat]) -> FormalCharacter {
        let group = GroupSpec {
            factors: self.group.factors.clone(),
            circle_count: 0,
        };
        let mut out = FormalCharacter::new(group);
        for (w, m) in &self.terms {
            if w.charges == charges {
                out.add(w.without_charges(), *m);
            }
        }
        out
    }

    /// Human readable form such as `2·V(1,0)xV0[1] + V(0,0)xV2[-1]`.
    pub fn pretty(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, m)| {
                let name = pretty_weight(w);
                if *m == 1 {
                    name
                } else {
                    format!("{m}·{name}")
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for FormalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

/// `V(1,0)xV0[1]`.
pub fn pretty_weight(w: &Weight) -> String {
    let blocks: Vec<String> = w
        .parts
        .iter()
        .map(|p| {
            if p.len() == 1 {
                format!("V{}", p[0])
            } else {
                format!("V({})", fmt_list(p))
            }
        })
        .collect();
    let mut s = blocks.join("x");
    if !w.charges.is_empty() {
        s.push_str(&format!("[{}]", fmt_list(&w.charges)));
    }
    s
}

/// All weights of a representation with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFunction {
    pub group: GroupSpec,
    pub support: BTreeMap<Weight, i64>,
}

impl WeightFunction {
    pub fn total(&self) -> i64 {
        self.support.values().sum()
    }

    pub fn get(&self, w: &Weight) -> i64 {
        self.support.get(w).copied().unwrap_or(0)
    }

    /// True when every simple reflection of every factor preserves the function.
    pub fn is_weyl_invariant(&self) -> bool {
        self.support.iter().all(|(w, m)| {
            self.group.factors.iter().enumerate().all(|(f, rs)| {
                (0..rs.rank()).all(|i| {
                    let mut r = w.clone();
                    r.parts[f] = rs.reflect(&w.parts[f], i);
                    self.get(&r) == *m
                })
            })
        })
    }
}

/// Weyl-orbit representative of `λ + ρ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InfChar {
    pub rep: Vec<Rat>,
}

impl InfChar {
    /// Orbit of an arbitrary vector.
    pub fn of_vector(rs: &RootSystem, v: &[Rat]) -> Self {
        InfChar {
            rep: rs.dominant_conjugate(v).0,
        }
    }
}

impl fmt::Display for InfChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", fmt_list(&self.rep))
    }
}

fn require_dominant(rs: &RootSystem, hw: &[Rat]) -> Result<Vec<Rat>> {
    rs.check_highest_weight(hw)
}

/// Weyl dimension formula, exact.
pub fn dimension(rs: &RootSystem, hw: &[Rat]) -> Result<BigUint> {
    let hw = require_dominant(rs, hw)?;
    let shifted = add(&hw, &rs.weyl_vector);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for cv in &rs.positive_coroots {
        // Both pairings are positive integers for dominant integral weights.
        let a = dot(&shifted, cv);
        let b = dot(&rs.weyl_vector, cv);
        num *= BigUint::from(a.to_integer() as u64);
        den *= BigUint::from(b.to_integer() as u64);
    }
    Ok(num / den)
}

pub fn dimension_u64(rs: &RootSystem, hw: &[Rat]) -> Result<u64> {
    let d = dimension(rs, hw)?;
    d.to_u64()
        .ok_or_else(|| LieError::InvalidInput(format!("dimension {d} does not fit in 64 bits")))
}

/// Product of the factor dimensions; circle charges contribute 1.
pub fn group_dimension(g: &GroupSpec, w: &Weight) -> Result<BigUint> {
    g.check_shape(w)?;
    let mut d = BigUint::one();
    for (rs, p) in g.factors.iter().zip(&w.parts) {
        d *= dimension(rs, p)?;
    }
    Ok(d)
}

type DominantTable = Arc<BTreeMap<Vec<Rat>, u64>>;

type FreudenthalCache = Mutex<HashMap<(CartanType, Vec<Rat>), DominantTable>>;

fn freudenthal_cache() -> &'static FreudenthalCache {
    static CACHE: OnceLock<FreudenthalCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Dominant weights of `V_hw`. Covers in the dominance order on dominant
/// weights differ by a positive root, so stepping down by positive roots and
/// keeping dominant results reaches all of them.
fn dominant_weights(rs: &RootSystem, hw: &[Rat]) -> Vec<Vec<Rat>> {
    let mut seen: HashSet<Vec<Rat>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(hw.to_vec());
    queue.push_back(hw.to_vec());
    while let Some(mu) = queue.pop_front() {
        for a in &rs.positive_roots {
            let nu = sub(&mu, a);
            if rs.is_dominant(&nu) && seen.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }
    seen.into_iter().collect()
}

/// Freudenthal recursion on dominant weights, memoized per `(type, hw)`.
pub fn dominant_multiplicities(rs: &RootSystem, hw: &[Rat]) -> Result<DominantTable> {
    let hw = require_dominant(rs, hw)?;
    let key = (rs.cartan_type, hw.clone());
    if let Some(t) = freudenthal_cache().lock().unwrap().get(&key) {
        return Ok(t.clone());
    }
    let mut doms = dominant_weights(rs, &hw);
    let depth = |mu: &Vec<Rat>| rs.height(&sub(&hw, mu));
    doms.sort_by(|a, b| depth(a).cmp(&depth(b)).then_with(|| b.cmp(a)));

    let lam_rho = add(&hw, &rs.weyl_vector);
    let top = dot(&lam_rho, &lam_rho);
    let mut mult: HashMap<Vec<Rat>, u64> = HashMap::new();
    for mu in &doms {
        if *mu == hw {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut acc = Rat::zero();
        for a in &rs.positive_roots {
            let mut k = 1i64;
            loop {
                let nu = add(mu, &crate::rational::scale(a, int(k)));
                let (d, _) = rs.dominant_conjugate(&nu);
                match mult.get(&d) {
                    Some(&m) => acc += int(m as i64) * dot(&nu, a),
                    None => break,
                }
                k += 1;
            }
        }
        let mu_rho = add(mu, &rs.weyl_vector);
        let m = int(2) * acc / (top - dot(&mu_rho, &mu_rho));
        debug_assert!(m.is_integer() && !m.is_negative());
        if !m.is_zero() {
            mult.insert(mu.clone(), m.to_integer() as u64);
        }
    }
    let table: DominantTable = Arc::new(mult.into_iter().collect());
    freudenthal_cache()
        .lock()
        .unwrap()
        .insert(key, table.clone());
    Ok(table)
}

/// Full weight diagram of `V_hw` as ambient vectors.
pub fn weight_diagram(rs: &RootSystem, hw: &[Rat]) -> Result<BTreeMap<Vec<Rat>, i64>> {
    let dom = dominant_multiplicities(rs, hw)?;
    let mut out = BTreeMap::new();
    for (mu, m) in dom.iter() {
        for w in rs.weyl_orbit(mu) {
            out.insert(w, *m as i64);
        }
    }
    Ok(out)
}

/// Weight multiplicities of `V_hw` for a simple group.
pub fn weight_multiplicities(rs: &Arc<RootSystem>, hw: &[Rat]) -> Result<WeightFunction> {
    let group = GroupSpec {
        factors: vec![rs.clone()],
        circle_count: 0,
    };
    let support = weight_diagram(rs, hw)?
        .into_iter()
        .map(|(v, m)| (Weight::simple(v), m))
        .collect();
    Ok(WeightFunction { group, support })
}

/// Weight multiplicities of an outer tensor product; charges are carried along.
pub fn group_weight_multiplicities(g: &GroupSpec, hw: &Weight) -> Result<WeightFunction> {
    let hw = g.check_highest_weight(hw)?;
    let mut acc: Vec<(Vec<Vec<Rat>>, i64)> = vec![(Vec::new(), 1)];
    for (rs, p) in g.factors.iter().zip(&hw.parts) {
        let diag = weight_diagram(rs, p)?;
        let mut next = Vec::with_capacity(acc.len() * diag.len());
        for (parts, m) in &acc {
            for (v, k) in &diag {
                let mut np = parts.clone();
                np.push(v.clone());
                next.push((np, m * k));
            }
        }
        acc = next;
    }
    let support = acc
        .into_iter()
        .map(|(parts, m)| (Weight::new(parts, hw.charges.clone()), m))
        .collect();
    Ok(WeightFunction {
        group: g.clone(),
        support,
    })
}

/// Virtual decomposition of `V_small_weights ⊗ V_hw` by reflecting
/// `μ + hw + ρ` into the dominant chamber.
fn shifted_orbit_sum(
    rs: &RootSystem,
    weights: &BTreeMap<Vec<Rat>, i64>,
    hw: &[Rat],
) -> BTreeMap<Vec<Rat>, i64> {
    let base = add(hw, &rs.weyl_vector);
    let mut out: BTreeMap<Vec<Rat>, i64> = BTreeMap::new();
    for (mu, m) in weights {
        let (d, s) = rs.dominant_conjugate(&add(mu, &base));
        if s != 0 {
            *out.entry(sub(&d, &rs.weyl_vector)).or_insert(0) += s as i64 * m;
        }
    }
    out.retain(|_, m| *m != 0);
    out
}

/// Decomposes `V_hw1 ⊗ V_hw2` into irreducibles.
pub fn tensor_decompose(rs: &Arc<RootSystem>, hw1: &[Rat], hw2: &[Rat]) -> Result<FormalCharacter> {
    let hw1 = require_dominant(rs, hw1)?;
    let hw2 = require_dominant(rs, hw2)?;
    let (small, big) = if dimension(rs, &hw1)? <= dimension(rs, &hw2)? {
        (hw1, hw2)
    } else {
        (hw2, hw1)
    };
    let virt = shifted_orbit_sum(rs, &weight_diagram(rs, &small)?, &big);
    let group = GroupSpec {
        factors: vec![rs.clone()],
        circle_count: 0,
    };
    let virt = virt
        .into_iter()
        .map(|(v, m)| (Weight::simple(v), m))
        .collect();
    FormalCharacter::from_virtual(group, virt, "tensor product")
}

/// Factorwise tensor product of two irreducibles of a product group; charges add.
pub fn group_tensor_decompose(g: &GroupSpec, w1: &Weight, w2: &Weight) -> Result<FormalCharacter> {
    let w1 = g.check_highest_weight(w1)?;
    let w2 = g.check_highest_weight(w2)?;
    let charges = add(&w1.charges, &w2.charges);
    let mut acc: Vec<(Vec<Vec<Rat>>, u64)> = vec![(Vec::new(), 1)];
    for (i, rs) in g.factors.iter().enumerate() {
        let t = tensor_decompose(rs, &w1.parts[i], &w2.parts[i])?;
        let mut next = Vec::new();
        for (parts, m) in &acc {
            for (w, k) in &t.terms {
                let mut np = parts.clone();
                np.push(w.parts[0].clone());
                next.push((np, m * k));
            }
        }
        acc = next;
    }
    let mut out = FormalCharacter::new(g.clone());
    for (parts, m) in acc {
        out.add(Weight::new(parts, charges.clone()), m);
    }
    Ok(out)
}

/// Tensors every term of `c` with the irreducible `w`.
pub fn character_tensor(c: &FormalCharacter, w: &Weight) -> Result<FormalCharacter> {
    let mut out = FormalCharacter::new(c.group.clone());
    for (t, m) in &c.terms {
        let prod = group_tensor_decompose(&c.group, t, w)?;
        for (u, k) in prod.terms {
            out.add(u, k * m);
        }
    }
    Ok(out)
}

/// Infinitesimal character of `V_hw`: dominant representative of `hw + ρ`.
pub fn infinitesimal_character(rs: &RootSystem, hw: &[Rat]) -> Result<InfChar> {
    let hw = require_dominant(rs, hw)?;
    Ok(InfChar::of_vector(rs, &add(&hw, &rs.weyl_vector)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_root_system;
    use crate::rational::{frac, ints};
    use proptest::prelude::*;

    fn dim(label: &str, hw: &[i64]) -> u64 {
        dimension_u64(&build_root_system(label).unwrap(), &ints(hw)).unwrap()
    }

    /// Closed dimension formula for `C_n`, written out independently of the
    /// root system code: with `l_i = λ_i + n - i + 1`,
    /// `dim = Π_{i<j} (l_i - l_j)(l_i + l_j)/((j-i)(2n+2-i-j)) · Π_i l_i/(n-i+1)`.
    fn symplectic_dim_oracle(hw: &[i64]) -> u128 {
        let n = hw.len() as i64;
        let l: Vec<i64> = (0..n).map(|i| hw[i as usize] + n - i).collect();
        let r: Vec<i64> = (0..n).map(|i| n - i).collect();
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for i in 0..n as usize {
            for j in i + 1..n as usize {
                num *= ((l[i] - l[j]) * (l[i] + l[j])) as u128;
                den *= ((r[i] - r[j]) * (r[i] + r[j])) as u128;
            }
            num *= l[i] as u128;
            den *= r[i] as u128;
        }
        num / den
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(dim("C2", &[1, 0]), 4);
        assert_eq!(dim("C2", &[1, 1]), 5);
        for n in 0..10 {
            assert_eq!(dim("A1", &[n]), n as u64 + 1);
        }
        assert_eq!(
            dim("C4", &[1, 1, 1, 1]),
            symplectic_dim_oracle(&[1, 1, 1, 1]) as u64
        );
        assert_eq!(dim("C4", &[1, 1, 1, 1]), 42);
        assert_eq!(
            dim("C4", &[2, 2, 2, 2]),
            symplectic_dim_oracle(&[2, 2, 2, 2]) as u64
        );
        assert_eq!(dim("C4", &[2, 2, 2, 2]), 594);
        assert_eq!(dim("D5", &[1, 0, 0, 0, 0]), 10);
        assert_eq!(dim("B2", &[1, 0]), 5);
        let b2 = build_root_system("B2").unwrap();
        assert_eq!(dimension_u64(&b2, &[frac(1, 2), frac(1, 2)]).unwrap(), 4);
        let a5 = build_root_system("A5").unwrap();
        assert_eq!(dimension_u64(&a5, &ints(&[1, 1, 1, 0, 0, 0])).unwrap(), 20);
    }

    #[test]
    fn non_dominant_rejected() {
        let c2 = build_root_system("C2").unwrap();
        assert!(matches!(
            dimension(&c2, &ints(&[0, 1])),
            Err(LieError::NotDominant { .. })
        ));
    }

    #[test]
    fn weight_multiplicity_examples() {
        let a1 = build_root_system("A1").unwrap();
        let wf = weight_diagram(&a1, &ints(&[2])).unwrap();
        let expected: BTreeMap<Vec<Rat>, i64> =
            [(ints(&[2]), 1), (ints(&[0]), 1), (ints(&[-2]), 1)]
                .into_iter()
                .collect();
        assert_eq!(wf, expected);

        let c2 = build_root_system("C2").unwrap();
        let wf = weight_diagram(&c2, &ints(&[1, 1])).unwrap();
        assert_eq!(wf.len(), 5);
        assert_eq!(wf[&ints(&[0, 0])], 1);
        assert_eq!(wf[&ints(&[-1, 1])], 1);
        assert_eq!(weight_diagram(&c2, &ints(&[0, 0])).unwrap().len(), 1);
    }

    #[test]
    fn freudenthal_total_matches_weyl_dimension() {
        let cases: &[(&str, &[&[i64]])] = &[
            ("A1", &[&[0], &[3], &[7]]),
            ("C2", &[&[1, 0], &[2, 1], &[3, 3], &[4, 0]]),
            ("C3", &[&[1, 1, 1], &[2, 1, 0], &[2, 2, 2]]),
            ("C4", &[&[1, 1, 1, 1], &[2, 1, 1, 0], &[2, 2, 2, 2]]),
            ("B2", &[&[1, 0], &[2, 1], &[1, 1]]),
            (
                "D4",
                &[&[1, 0, 0, 0], &[1, 1, 0, 0], &[2, 2, 2, 0], &[1, 1, 1, 1]],
            ),
            ("D5", &[&[1, 0, 0, 0, 0], &[1, 1, 1, 1, 1]]),
            (
                "A5",
                &[
                    &[1, 1, 1, 0, 0, 0],
                    &[2, 2, 2, 0, 0, 0],
                    &[2, 1, 0, 0, 0, 0],
                ],
            ),
        ];
        for (label, hws) in cases {
            let rs = build_root_system(label).unwrap();
            for hw in *hws {
                let hw = rs.normalize(&ints(hw));
                let total: i64 = weight_diagram(&rs, &hw).unwrap().values().sum();
                assert_eq!(
                    total as u64,
                    dimension_u64(&rs, &hw).unwrap(),
                    "{label} {hw:?}"
                );
            }
        }
        // Half-integral spin weights.
        let d4 = build_root_system("D4").unwrap();
        for hw in [[1, 1, 1, 1], [1, 1, 1, -1], [3, 1, 1, 1]] {
            let v: Vec<Rat> = hw.iter().map(|&x| frac(x, 2)).collect();
            let total: i64 = weight_diagram(&d4, &v).unwrap().values().sum();
            assert_eq!(total as u64, dimension_u64(&d4, &v).unwrap());
        }
    }

    #[test]
    fn weight_functions_are_weyl_invariant() {
        let c3 = build_root_system("C3").unwrap();
        assert!(weight_multiplicities(&c3, &ints(&[2, 1, 0]))
            .unwrap()
            .is_weyl_invariant());
        let d4 = build_root_system("D4").unwrap();
        assert!(weight_multiplicities(&d4, &ints(&[2, 1, 1, 0]))
            .unwrap()
            .is_weyl_invariant());
    }

    #[test]
    fn memoization_is_invisible() {
        let c3 = build_root_system("C3").unwrap();
        let a = dominant_multiplicities(&c3, &ints(&[2, 2, 1])).unwrap();
        let b = dominant_multiplicities(&c3, &ints(&[2, 2, 1])).unwrap();
        assert_eq!(a, b);
    }

    fn clebsch_gordan(a: i64, b: i64) -> Vec<i64> {
        ((a - b).abs()..=a + b).step_by(2).collect()
    }

    #[test]
    fn tensor_examples() {
        let a1 = build_root_system("A1").unwrap();
        let t = tensor_decompose(&a1, &ints(&[2]), &ints(&[2])).unwrap();
        let got: Vec<i64> = t.terms.keys().map(|w| w.parts[0][0].to_integer()).collect();
        assert_eq!(got, vec![0, 2, 4]);
        assert!(t.terms.values().all(|&m| m == 1));

        let c2 = build_root_system("C2").unwrap();
        let t = tensor_decompose(&c2, &ints(&[1, 0]), &ints(&[0, 0])).unwrap();
        assert_eq!(t.terms.len(), 1);
        assert_eq!(t.multiplicity(&Weight::simple(ints(&[1, 0]))), 1);

        // V4 ⊗ V4 of C2 has dimension 16 = 1 + 5 + 10.
        let t = tensor_decompose(&c2, &ints(&[1, 0]), &ints(&[1, 0])).unwrap();
        assert_eq!(t.total_dimension(), BigUint::from(16u32));
        assert_eq!(t.len(), 3);
    }

    #[test]
    fn tensor_with_shifted_range_matches_clebsch_gordan() {
        let a1 = build_root_system("A1").unwrap();
        for n in 0..8i64 {
            for m in 0..=n {
                for t in 0..=(n - m) / 2 {
                    let k = n - m - 2 * t;
                    let dec = tensor_decompose(&a1, &ints(&[n + 2]), &ints(&[k])).unwrap();
                    let got: Vec<i64> = dec
                        .terms
                        .keys()
                        .map(|w| w.parts[0][0].to_integer())
                        .collect();
                    let expected: Vec<i64> = ((m + 2 * t + 2)..=(2 * n - m - 2 * t + 2))
                        .step_by(2)
                        .collect();
                    assert_eq!(got, expected);
                    assert_eq!(got, clebsch_gordan(n + 2, k));
                }
            }
        }
    }

    #[test]
    fn associativity_on_a1() {
        let a1 = build_root_system("A1").unwrap();
        let g = GroupSpec::simple(CartanType::A(1)).unwrap();
        let v1 = Weight::simple(ints(&[1]));
        let left = character_tensor(
            &tensor_decompose(&a1, &ints(&[1]), &ints(&[1])).unwrap(),
            &v1,
        )
        .unwrap();
        let mut right = FormalCharacter::new(g.clone());
        for (w, m) in tensor_decompose(&a1, &ints(&[1]), &ints(&[1]))
            .unwrap()
            .terms
        {
            let t = group_tensor_decompose(&g, &v1, &w).unwrap();
            for (u, k) in t.terms {
                right.add(u, m * k);
            }
        }
        assert_eq!(left, right);
        assert_eq!(left.multiplicity(&Weight::simple(ints(&[1]))), 2);
        assert_eq!(left.multiplicity(&Weight::simple(ints(&[3]))), 1);
    }

    #[test]
    fn infinitesimal_characters() {
        let d4 = build_root_system("D4").unwrap();
        assert_eq!(
            infinitesimal_character(&d4, &ints(&[0, 0, 0, 0]))
                .unwrap()
                .rep,
            ints(&[3, 2, 1, 0])
        );
        for n in 0..6i64 {
            for b in (-n..=n).step_by(2) {
                let hw = vec![frac(n, 2), frac(n, 2), frac(n, 2), frac(b, 2)];
                let ic = infinitesimal_character(&d4, &hw).unwrap();
                let expected = vec![frac(n + 6, 2), frac(n + 4, 2), frac(n + 2, 2), frac(b, 2)];
                assert_eq!(ic.rep, expected);
            }
        }
        let a1 = build_root_system("A1").unwrap();
        assert_eq!(
            infinitesimal_character(&a1, &ints(&[0])).unwrap().rep,
            ints(&[1])
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn tensor_is_symmetric_and_dimension_multiplicative(
            a in 0i64..4, b in 0i64..=3, c in 0i64..4, d in 0i64..=3
        ) {
            let c2 = build_root_system("C2").unwrap();
            let w1 = ints(&[a.max(b), a.min(b)]);
            let w2 = ints(&[c.max(d), c.min(d)]);
            let t12 = tensor_decompose(&c2, &w1, &w2).unwrap();
            let t21 = tensor_decompose(&c2, &w2, &w1).unwrap();
            prop_assert_eq!(&t12, &t21);
            let expected = dimension(&c2, &w1).unwrap() * dimension(&c2, &w2).unwrap();
            prop_assert_eq!(t12.total_dimension(), expected);
        }

        #[test]
        fn a1_tensor_is_clebsch_gordan(a in 0i64..12, b in 0i64..12) {
            let a1 = build_root_system("A1").unwrap();
            let t = tensor_decompose(&a1, &ints(&[a]), &ints(&[b])).unwrap();
            let got: Vec<i64> = t.terms.keys().map(|w| w.parts[0][0].to_integer()).collect();
            prop_assert_eq!(got, clebsch_gordan(a, b));
        }
    }
}
