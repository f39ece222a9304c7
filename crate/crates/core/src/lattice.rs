//! Root systems of the classical types in their standard ε-coordinates,
//! Weyl group actions, and the product groups/weights built from them.
//!
//! Conventions:
//! - `A1` is realized on a single axis with simple root `2ε₁`, so the weight
//!   `n` is the highest weight of the `(n+1)`-dimensional representation and
//!   coincides with the `Sp(1)` labelling.
//! - `A_n` for `n ≥ 2` lives in `Q^{n+1}`; weights are stored normalized to
//!   coordinate sum zero.
//! - `B_n`, `C_n`, `D_n` use the usual `±ε_i ± ε_j`, `ε_i`/`2ε_i` roots.
//!
//! All pairings use the standard dot product on the ambient space.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::rational::{add, dot, fmt_list, int, scale, sub, Rat};

/// Cartan type plus rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
}

impl CartanType {
    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) | CartanType::D(n) => n,
        }
    }

    /// Dimension of the Lie algebra.
    pub fn algebra_dimension(self) -> usize {
        match self {
            CartanType::A(n) => n * (n + 2),
            CartanType::B(n) | CartanType::C(n) => n * (2 * n + 1),
            CartanType::D(n) => n * (2 * n - 1),
        }
    }

    pub fn weyl_group_order(self) -> u64 {
        let fact = |k: usize| (1..=k as u64).product::<u64>();
        match self {
            CartanType::A(n) => fact(n + 1),
            CartanType::B(n) | CartanType::C(n) => (1u64 << n) * fact(n),
            CartanType::D(n) => (1u64 << (n - 1)) * fact(n),
        }
    }

    fn check(self) -> Result<Self> {
        let ok = match self {
            CartanType::A(n) => (1..=8).contains(&n),
            CartanType::B(n) | CartanType::C(n) => (2..=8).contains(&n),
            CartanType::D(n) => (4..=8).contains(&n),
        };
        if ok {
            Ok(self)
        } else {
            Err(LieError::UnsupportedType(self.to_string()))
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (c, n) = match self {
            CartanType::A(n) => ('A', n),
            CartanType::B(n) => ('B', n),
            CartanType::C(n) => ('C', n),
            CartanType::D(n) => ('D', n),
        };
        write!(f, "{c}{n}")
    }
}

impl FromStr for CartanType {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unsupported = || LieError::UnsupportedType(s.to_string());
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(unsupported)?;
        let rank: usize = chars.as_str().parse().map_err(|_| unsupported())?;
        let t = match letter.to_ascii_uppercase() {
            'A' => CartanType::A(rank),
            'B' => CartanType::B(rank),
            'C' => CartanType::C(rank),
            'D' => CartanType::D(rank),
            _ => return Err(unsupported()),
        };
        t.check().map_err(|_| unsupported())
    }
}

/// A simple root system realized in rational ambient coordinates.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    pub ambient_dim: usize,
    pub simple_roots: Vec<Vec<Rat>>,
    pub simple_coroots: Vec<Vec<Rat>>,
    pub positive_roots: Vec<Vec<Rat>>,
    pub positive_coroots: Vec<Vec<Rat>>,
    /// Half-sum of the positive roots.
    pub weyl_vector: Vec<Rat>,
    /// Half-sum of the positive coroots; pairs to 1 with every simple root.
    pub weyl_covector: Vec<Rat>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.cartan_type == other.cartan_type
    }
}

impl Eq for RootSystem {}

fn unit(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[i] = int(1);
    v
}

fn coroot(alpha: &[Rat]) -> Vec<Rat> {
    let norm = dot(alpha, alpha);
    scale(alpha, int(2) / norm)
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Result<Self> {
        let t = cartan_type.check()?;
        let n = t.rank();
        let e = |dim: usize, i: usize| unit(dim, i);
        let (dim, simple, positive) = match t {
            CartanType::A(1) => (1, vec![ints_vec(&[2])], vec![ints_vec(&[2])]),
            CartanType::A(_) => {
                let d = n + 1;
                let simple = (0..n).map(|i| sub(&e(d, i), &e(d, i + 1))).collect();
                let mut pos = Vec::new();
                for i in 0..d {
                    for j in i + 1..d {
                        pos.push(sub(&e(d, i), &e(d, j)));
                    }
                }
                (d, simple, pos)
            }
            CartanType::B(_) | CartanType::C(_) | CartanType::D(_) => {
                let d = n;
                let mut simple: Vec<Vec<Rat>> =
                    (0..n - 1).map(|i| sub(&e(d, i), &e(d, i + 1))).collect();
                match t {
                    CartanType::B(_) => simple.push(e(d, n - 1)),
                    CartanType::C(_) => simple.push(scale(&e(d, n - 1), int(2))),
                    _ => simple.push(add(&e(d, n - 2), &e(d, n - 1))),
                }
                let mut pos = Vec::new();
                for i in 0..d {
                    for j in i + 1..d {
                        pos.push(sub(&e(d, i), &e(d, j)));
                        pos.push(add(&e(d, i), &e(d, j)));
                    }
                }
                match t {
                    CartanType::B(_) => pos.extend((0..d).map(|i| e(d, i))),
                    CartanType::C(_) => pos.extend((0..d).map(|i| scale(&e(d, i), int(2)))),
                    _ => {}
                }
                (d, simple, pos)
            }
        };
        let simple_coroots: Vec<Vec<Rat>> = simple.iter().map(|a| coroot(a)).collect();
        let positive_coroots: Vec<Vec<Rat>> = positive.iter().map(|a| coroot(a)).collect();
        let sum = |vs: &[Vec<Rat>]| {
            vs.iter()
                .fold(vec![Rat::zero(); dim], |acc, v| add(&acc, v))
        };
        let weyl_vector = scale(&sum(&positive), Rat::new(1, 2));
        let weyl_covector = scale(&sum(&positive_coroots), Rat::new(1, 2));
        Ok(RootSystem {
            cartan_type: t,
            ambient_dim: dim,
            simple_roots: simple,
            simple_coroots,
            positive_roots: positive,
            positive_coroots,
            weyl_vector,
            weyl_covector,
        })
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    /// Cartan matrix `a_ij = <α_i^∨, α_j>` computed from the realization.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple_coroots
            .iter()
            .map(|cv| {
                self.simple_roots
                    .iter()
                    .map(|a| dot(cv, a).to_integer())
                    .collect()
            })
            .collect()
    }

    /// `<v, α_i^∨>`.
    pub fn pairing(&self, v: &[Rat], i: usize) -> Rat {
        dot(v, &self.simple_coroots[i])
    }

    pub fn dynkin_labels(&self, v: &[Rat]) -> Vec<Rat> {
        (0..self.rank()).map(|i| self.pairing(v, i)).collect()
    }

    /// Pairing with ρ^∨; equals the number of simple roots in a root-lattice element.
    pub fn height(&self, v: &[Rat]) -> Rat {
        dot(v, &self.weyl_covector)
    }

    /// Puts an ambient vector into canonical form (coordinate sum zero for `A_n`, `n ≥ 2`).
    pub fn normalize(&self, v: &[Rat]) -> Vec<Rat> {
        match self.cartan_type {
            CartanType::A(n) if n >= 2 => {
                let mean = v.iter().fold(Rat::zero(), |a, x| a + x) / int(v.len() as i64);
                v.iter().map(|x| x - mean).collect()
            }
            _ => v.to_vec(),
        }
    }

    pub fn check_shape(&self, v: &[Rat]) -> Result<()> {
        if v.len() != self.ambient_dim {
            return Err(LieError::ShapeMismatch {
                group: self.cartan_type.to_string(),
                weight: fmt_list(v),
            });
        }
        Ok(())
    }

    /// Integral pairing with every simple coroot.
    pub fn in_weight_lattice(&self, v: &[Rat]) -> bool {
        v.len() == self.ambient_dim && (0..self.rank()).all(|i| self.pairing(v, i).is_integer())
    }

    pub fn is_dominant(&self, v: &[Rat]) -> bool {
        (0..self.rank()).all(|i| !self.pairing(v, i).is_negative())
    }

    /// Normalizes and validates a highest weight.
    pub fn check_highest_weight(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        self.check_shape(v)?;
        let v = self.normalize(v);
        if !self.in_weight_lattice(&v) {
            return Err(LieError::NotInWeightLattice {
                group: self.cartan_type.to_string(),
                weight: fmt_list(&v),
            });
        }
        if !self.is_dominant(&v) {
            return Err(LieError::NotDominant {
                group: self.cartan_type.to_string(),
                weight: fmt_list(&v),
            });
        }
        Ok(v)
    }

    pub fn reflect(&self, v: &[Rat], i: usize) -> Vec<Rat> {
        let p = self.pairing(v, i);
        sub(v, &scale(&self.simple_roots[i], p))
    }

    /// Unique dominant element of the Weyl orbit of `v`, with the determinant
    /// of the Weyl element used; the sign is `0` when `v` is fixed by a reflection.
    pub fn dominant_conjugate(&self, v: &[Rat]) -> (Vec<Rat>, i8) {
        let mut w = v.to_vec();
        let mut flips = 0usize;
        'outer: loop {
            for i in 0..self.rank() {
                if self.pairing(&w, i).is_negative() {
                    w = self.reflect(&w, i);
                    flips += 1;
                    continue 'outer;
                }
            }
            break;
        }
        let singular = (0..self.rank()).any(|i| self.pairing(&w, i).is_zero());
        let sign = if singular {
            0
        } else if flips.is_multiple_of(2) {
            1
        } else {
            -1
        };
        (w, sign)
    }

    /// Full Weyl orbit by breadth-first search over simple reflections.
    pub fn weyl_orbit(&self, v: &[Rat]) -> Vec<Vec<Rat>> {
        self.orbit_under(v, &(0..self.rank()).collect::<Vec<_>>())
    }

    fn orbit_under(&self, v: &[Rat], generators: &[usize]) -> Vec<Vec<Rat>> {
        let mut seen: HashSet<Vec<Rat>> = HashSet::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(v.to_vec());
        queue.push_back(v.to_vec());
        while let Some(w) = queue.pop_front() {
            for &i in generators {
                if self.pairing(&w, i).is_zero() {
                    continue;
                }
                let r = self.reflect(&w, i);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
            order.push(w);
        }
        order
    }

    /// `|W| / |Stab(w)|` for dominant `w`; the stabilizer is the parabolic
    /// subgroup generated by the simple reflections fixing `w`.
    pub fn weyl_orbit_size(&self, w: &[Rat]) -> Result<u64> {
        self.check_shape(w)?;
        if !self.is_dominant(w) {
            return Err(LieError::NotDominant {
                group: self.cartan_type.to_string(),
                weight: fmt_list(w),
            });
        }
        let fixing: Vec<usize> = (0..self.rank())
            .filter(|&i| self.pairing(w, i).is_zero())
            .collect();
        // ρ is regular, so its orbit under the parabolic subgroup is free.
        let stab = self.orbit_under(&self.weyl_vector, &fixing).len() as u64;
        Ok(self.cartan_type.weyl_group_order() / stab)
    }
}

fn ints_vec(v: &[i64]) -> Vec<Rat> {
    v.iter().copied().map(int).collect()
}

/// Cartan matrix read off the Dynkin diagram, independent of any realization.
pub fn standard_cartan_matrix(t: CartanType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain_end = match t {
        CartanType::D(_) => n - 1,
        _ => n,
    };
    for i in 0..chain_end.saturating_sub(1) {
        a[i][i + 1] = -1;
        a[i + 1][i] = -1;
    }
    match t {
        CartanType::B(_) => a[n - 1][n - 2] = -2,
        CartanType::C(_) => a[n - 2][n - 1] = -2,
        CartanType::D(_) => {
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
        CartanType::A(_) => {}
    }
    a
}

fn cache() -> &'static Mutex<HashMap<CartanType, Arc<RootSystem>>> {
    static CACHE: OnceLock<Mutex<HashMap<CartanType, Arc<RootSystem>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Shared, immutable root system for `t`.
pub fn root_system(t: CartanType) -> Result<Arc<RootSystem>> {
    if let Some(rs) = cache().lock().unwrap().get(&t) {
        return Ok(rs.clone());
    }
    let rs = Arc::new(RootSystem::new(t)?);
    Ok(cache().lock().unwrap().entry(t).or_insert(rs).clone())
}

/// Builds the root system for a label such as `"C4"`.
pub fn build_root_system(label: &str) -> Result<Arc<RootSystem>> {
    root_system(label.parse()?)
}

/// A weight of a product group: one coordinate vector per simple factor plus
/// one rational charge per circle factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub parts: Vec<Vec<Rat>>,
    pub charges: Vec<Rat>,
}

impl Weight {
    pub fn new(parts: Vec<Vec<Rat>>, charges: Vec<Rat>) -> Self {
        Weight { parts, charges }
    }

    pub fn simple(v: Vec<Rat>) -> Self {
        Weight {
            parts: vec![v],
            charges: Vec::new(),
        }
    }

    /// Convenience constructor from integer blocks.
    pub fn from_ints(parts: &[&[i64]], charges: &[i64]) -> Self {
        Weight {
            parts: parts.iter().map(|p| ints_vec(p)).collect(),
            charges: ints_vec(charges),
        }
    }

    pub fn with_charges(mut self, charges: Vec<Rat>) -> Self {
        self.charges = charges;
        self
    }

    pub fn without_charges(&self) -> Self {
        Weight {
            parts: self.parts.clone(),
            charges: Vec::new(),
        }
    }

    pub fn flatten(&self) -> Vec<Rat> {
        let mut v: Vec<Rat> = self.parts.iter().flatten().copied().collect();
        v.extend(self.charges.iter().copied());
        v
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .parts
            .iter()
            .map(|p| {
                if p.len() == 1 {
                    p[0].to_string()
                } else {
                    format!("({})", fmt_list(p))
                }
            })
            .collect();
        write!(f, "{}", blocks.join("x"))?;
        if !self.charges.is_empty() {
            write!(f, "[{}]", fmt_list(&self.charges))?;
        }
        Ok(())
    }
}

/// An ordered product of simple factors and circle factors.
#[derive(Clone, Debug)]
pub struct GroupSpec {
    pub factors: Vec<Arc<RootSystem>>,
    pub circle_count: usize,
}

impl PartialEq for GroupSpec {
    fn eq(&self, other: &Self) -> bool {
        self.circle_count == other.circle_count
            && self.factors.len() == other.factors.len()
            && self
                .factors
                .iter()
                .zip(&other.factors)
                .all(|(a, b)| a.cartan_type == b.cartan_type)
    }
}

impl Eq for GroupSpec {}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut names: Vec<String> = self
            .factors
            .iter()
            .map(|rs| rs.cartan_type.to_string())
            .collect();
        names.extend(std::iter::repeat_n("U1".to_string(), self.circle_count));
        write!(f, "{}", names.join("x"))
    }
}

impl FromStr for GroupSpec {
    type Err = LieError;

    /// `"C2xA1xU1"`: simple factors and `U1` circles separated by `x`.
    fn from_str(s: &str) -> Result<Self> {
        let mut types = Vec::new();
        let mut circles = 0;
        for tok in s.split(['x', '*']) {
            let tok = tok.trim();
            if tok.eq_ignore_ascii_case("U1") || tok.eq_ignore_ascii_case("T1") {
                circles += 1;
            } else if circles > 0 {
                return Err(LieError::InvalidInput(format!(
                    "circle factors must come last in {s:?}"
                )));
            } else {
                types.push(tok.parse::<CartanType>()?);
            }
        }
        GroupSpec::product(&types, circles)
    }
}

impl GroupSpec {
    pub fn product(types: &[CartanType], circle_count: usize) -> Result<Self> {
        let factors = types
            .iter()
            .map(|&t| root_system(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupSpec {
            factors,
            circle_count,
        })
    }

    pub fn simple(t: CartanType) -> Result<Self> {
        GroupSpec::product(&[t], 0)
    }

    pub fn coordinate_count(&self) -> usize {
        self.factors.iter().map(|rs| rs.ambient_dim).sum::<usize>() + self.circle_count
    }

    pub fn check_shape(&self, w: &Weight) -> Result<()> {
        let ok = w.parts.len() == self.factors.len()
            && w.charges.len() == self.circle_count
            && w.parts
                .iter()
                .zip(&self.factors)
                .all(|(p, rs)| p.len() == rs.ambient_dim);
        if ok {
            Ok(())
        } else {
            Err(LieError::ShapeMismatch {
                group: self.to_string(),
                weight: w.to_string(),
            })
        }
    }

    pub fn normalize(&self, w: &Weight) -> Weight {
        Weight {
            parts: w
                .parts
                .iter()
                .zip(&self.factors)
                .map(|(p, rs)| rs.normalize(p))
                .collect(),
            charges: w.charges.clone(),
        }
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        w.parts
            .iter()
            .zip(&self.factors)
            .all(|(p, rs)| rs.is_dominant(p))
    }

    /// Shape, normalization, lattice membership and dominance.
    pub fn check_highest_weight(&self, w: &Weight) -> Result<Weight> {
        self.check_shape(w)?;
        let parts = w
            .parts
            .iter()
            .zip(&self.factors)
            .map(|(p, rs)| rs.check_highest_weight(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight {
            parts,
            charges: w.charges.clone(),
        })
    }

    pub fn dominant_conjugate(&self, w: &Weight) -> (Weight, i8) {
        let mut sign = 1i8;
        let parts = w
            .parts
            .iter()
            .zip(&self.factors)
            .map(|(p, rs)| {
                let (d, s) = rs.dominant_conjugate(p);
                sign *= s;
                d
            })
            .collect();
        (
            Weight {
                parts,
                charges: w.charges.clone(),
            },
            sign,
        )
    }

    pub fn height(&self, w: &Weight) -> Rat {
        w.parts
            .iter()
            .zip(&self.factors)
            .fold(Rat::zero(), |acc, (p, rs)| acc + rs.height(p))
    }

    /// Splits a flat coordinate vector into factor blocks and charges.
    pub fn unflatten(&self, flat: &[Rat]) -> Result<Weight> {
        if flat.len() != self.coordinate_count() {
            return Err(LieError::ShapeMismatch {
                group: self.to_string(),
                weight: fmt_list(flat),
            });
        }
        let mut parts = Vec::with_capacity(self.factors.len());
        let mut at = 0;
        for rs in &self.factors {
            parts.push(flat[at..at + rs.ambient_dim].to_vec());
            at += rs.ambient_dim;
        }
        Ok(Weight {
            parts,
            charges: flat[at..].to_vec(),
        })
    }

    /// Parses `"(2,0)x0"`, `"1,1,1,1"` or `"0x0x0x0"`, filling factors in order.
    pub fn parse_weight(&self, s: &str, charges: Vec<Rat>) -> Result<Weight> {
        let blocks: Vec<Vec<Rat>> = s
            .split('x')
            .map(crate::rational::parse_rat_list)
            .collect::<Result<_>>()?;
        let flat: Vec<Rat> = blocks.iter().flatten().copied().collect();
        let simple_coords = self.coordinate_count() - self.circle_count;
        let w = if blocks.len() == self.factors.len()
            && blocks
                .iter()
                .zip(&self.factors)
                .all(|(b, rs)| b.len() == rs.ambient_dim)
        {
            Weight::new(blocks, charges)
        } else if flat.len() == simple_coords {
            let mut full = flat;
            full.extend(charges.iter().copied());
            self.unflatten(&full)?
        } else {
            return Err(LieError::ShapeMismatch {
                group: self.to_string(),
                weight: s.to_string(),
            });
        };
        self.check_shape(&w)?;
        Ok(self.normalize(&w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, ints};

    const SUPPORTED: [&str; 8] = ["A1", "A5", "B2", "C2", "C3", "C4", "D4", "D5"];

    #[test]
    fn d4_simple_roots_are_standard() {
        let rs = build_root_system("D4").unwrap();
        let expected = vec![
            ints(&[1, -1, 0, 0]),
            ints(&[0, 1, -1, 0]),
            ints(&[0, 0, 1, -1]),
            ints(&[0, 0, 1, 1]),
        ];
        assert_eq!(rs.simple_roots, expected);
        assert_eq!(rs.weyl_vector, ints(&[3, 2, 1, 0]));
    }

    #[test]
    fn a1_rank_one() {
        let rs = build_root_system("A1").unwrap();
        assert_eq!(rs.simple_roots.len(), 1);
        assert_eq!(rs.pairing(&rs.weyl_vector, 0), int(1));
    }

    #[test]
    fn c4_positive_roots_and_rho() {
        let rs = build_root_system("C4").unwrap();
        assert_eq!(rs.positive_roots.len(), 16);
        assert_eq!(rs.weyl_vector, ints(&[4, 3, 2, 1]));
    }

    #[test]
    fn structural_invariants_for_every_supported_type() {
        for label in SUPPORTED {
            let rs = build_root_system(label).unwrap();
            let t = rs.cartan_type;
            assert_eq!(rs.cartan_matrix(), standard_cartan_matrix(t), "{label}");
            for i in 0..rs.rank() {
                assert_eq!(rs.pairing(&rs.weyl_vector, i), int(1), "{label}");
                assert_eq!(
                    dot(&rs.simple_roots[i], &rs.weyl_covector),
                    int(1),
                    "{label}"
                );
            }
            assert_eq!(
                rs.positive_roots.len(),
                (t.algebra_dimension() - t.rank()) / 2,
                "{label}"
            );
            // Positive and negative roots cancel.
            let total = rs
                .positive_roots
                .iter()
                .chain(rs.positive_roots.iter())
                .zip(
                    std::iter::repeat_n(1, rs.positive_roots.len())
                        .chain(std::iter::repeat_n(-1, rs.positive_roots.len())),
                )
                .fold(vec![Rat::zero(); rs.ambient_dim], |acc, (r, s)| {
                    add(&acc, &scale(r, int(s)))
                });
            assert!(total.iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn positive_roots_match_reflection_closure() {
        for label in SUPPORTED {
            let rs = build_root_system(label).unwrap();
            let mut all: HashSet<Vec<Rat>> = HashSet::new();
            for a in &rs.simple_roots {
                all.extend(rs.weyl_orbit(a));
            }
            let expected: HashSet<Vec<Rat>> = rs
                .positive_roots
                .iter()
                .flat_map(|a| [a.clone(), scale(a, int(-1))])
                .collect();
            assert_eq!(all, expected, "{label}");
        }
    }

    #[test]
    fn unsupported_labels_are_rejected() {
        for bad in ["E6", "G2", "D3", "C1", "A0", "X", ""] {
            assert!(
                matches!(build_root_system(bad), Err(LieError::UnsupportedType(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn construction_is_deterministic() {
        let a = RootSystem::new(CartanType::D(5)).unwrap();
        let b = RootSystem::new(CartanType::D(5)).unwrap();
        assert_eq!(a.simple_roots, b.simple_roots);
        assert_eq!(a.positive_roots, b.positive_roots);
    }

    #[test]
    fn dominant_conjugate_examples() {
        let d4 = build_root_system("D4").unwrap();
        let (w, s) = d4.dominant_conjugate(&ints(&[3, -1, -2, 0]));
        assert_eq!(w, ints(&[3, 2, 1, 0]));
        // (3,-1,-2,0) -> (3,2,1,0): swap of the 2nd and 3rd coordinates composed
        // with two sign changes; the permutation is odd.
        assert_eq!(s, -1);

        let a1 = build_root_system("A1").unwrap();
        assert_eq!(a1.dominant_conjugate(&ints(&[0])), (ints(&[0]), 0));

        let c2 = build_root_system("C2").unwrap();
        assert_eq!(c2.dominant_conjugate(&ints(&[1, 2])), (ints(&[2, 1]), -1));
    }

    #[test]
    fn dominant_conjugate_idempotent_on_dominant() {
        let c2 = build_root_system("C2").unwrap();
        let (w, s) = c2.dominant_conjugate(&ints(&[3, 1]));
        assert_eq!((w, s), (ints(&[3, 1]), 1));
    }

    #[test]
    fn orbit_sizes() {
        let c2 = build_root_system("C2").unwrap();
        assert_eq!(c2.weyl_orbit_size(&ints(&[0, 0])).unwrap(), 1);
        assert_eq!(c2.weyl_orbit_size(&ints(&[1, 1])).unwrap(), 4);
        let d4 = build_root_system("D4").unwrap();
        assert_eq!(d4.weyl_orbit_size(&ints(&[1, 1, 0, 0])).unwrap(), 24);
        assert_eq!(d4.weyl_orbit(&ints(&[1, 1, 0, 0])).len(), 24);
        assert!(matches!(
            c2.weyl_orbit_size(&ints(&[0, 1])),
            Err(LieError::NotDominant { .. })
        ));
    }

    #[test]
    fn weight_lattice_membership() {
        let b2 = build_root_system("B2").unwrap();
        assert!(b2.in_weight_lattice(&[frac(1, 2), frac(1, 2)]));
        assert!(!b2.in_weight_lattice(&[frac(1, 2), int(0)]));
        let c2 = build_root_system("C2").unwrap();
        assert!(!c2.in_weight_lattice(&[frac(1, 2), frac(1, 2)]));
        let a5 = build_root_system("A5").unwrap();
        let w = a5.check_highest_weight(&ints(&[1, 1, 1, 0, 0, 0])).unwrap();
        assert_eq!(w[0], frac(1, 2));
        assert!(a5.check_highest_weight(&ints(&[0, 1, 0, 0, 0, 0])).is_err());
    }

    #[test]
    fn group_parsing_and_weights() {
        let g: GroupSpec = "C2xA1xU1".parse().unwrap();
        assert_eq!(g.circle_count, 1);
        assert_eq!(g.to_string(), "C2xA1xU1");
        let w = g.parse_weight("(2,0)x0", vec![int(0)]).unwrap();
        assert_eq!(w, Weight::from_ints(&[&[2, 0], &[0]], &[0]));
        let split: GroupSpec = "A1xA1xA1xA1".parse().unwrap();
        let w = split.parse_weight("1,1,0,0", vec![]).unwrap();
        assert_eq!(w.parts.len(), 4);
        assert!(split.parse_weight("1,1,0", vec![]).is_err());
        assert!("U1xC2".parse::<GroupSpec>().is_err());
    }
}
