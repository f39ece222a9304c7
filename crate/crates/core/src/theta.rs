//! Theta-correspondence bookkeeping: infinitesimal characters of torus
//! characters, principal-series K-type counts compared with the stabilized
//! multiplicities of the minimal representation, and the lowest K-type tables.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::charalg::{group_dimension, infinitesimal_character, InfChar};
use crate::error::{LieError, Result};
use crate::lattice::{root_system, CartanType, GroupSpec, Weight};
use crate::minrep::{
    hermj_block, sign_first_appearance, so3_invariants, DualPairCase, MultiplicitySeries,
    SignAssignment, Stabilization,
};
use crate::rational::{frac, int, ints, Rat};
use crate::report::{Check, Report};

/// The four shapes of the two-dimensional torus, by the étale algebra `E`
/// and the quadratic algebra `K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TorusCase {
    /// `E = ℝ³`, `K = ℝ²`: `(ℝ^×)³/Δ`.
    R3R2,
    /// `E = ℝ × ℂ`, `K = ℝ²`.
    RcR2,
    /// `E = ℝ³`, `K = ℂ`: `𝕋³/Δ𝕋`, integer triples.
    R3C,
    /// `E = ℝ × ℂ`, `K = ℂ`: `(m, χ_ℂ)` with `m ∈ ℤ`.
    RcC,
}

impl TorusCase {
    pub const ALL: [TorusCase; 4] = [
        TorusCase::R3R2,
        TorusCase::RcR2,
        TorusCase::R3C,
        TorusCase::RcC,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TorusCase::R3R2 => "R3/R2",
            TorusCase::RcR2 => "RxC/R2",
            TorusCase::R3C => "R3/C",
            TorusCase::RcC => "RxC/C",
        }
    }
}

impl fmt::Display for TorusCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Rational stand-in `(ν₁, ν₂, ν₃)`, `ν₁+ν₂+ν₃ = 0`, for a torus character.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusCharacterData {
    pub nu: [Rat; 3],
    pub case: TorusCase,
}

impl TorusCharacterData {
    pub fn new(nu: [Rat; 3], case: TorusCase) -> Result<Self> {
        if nu[0] + nu[1] + nu[2] != int(0) {
            return Err(LieError::InvalidInput(format!(
                "({}, {}, {}) does not sum to zero",
                nu[0], nu[1], nu[2]
            )));
        }
        let integral = match case {
            TorusCase::R3C => nu.iter().all(|q| q.is_integer()),
            TorusCase::RcC => nu[0].is_integer(),
            _ => true,
        };
        if !integral {
            return Err(LieError::InvalidInput(format!(
                "({}, {}, {}) violates the integrality of case {case}",
                nu[0], nu[1], nu[2]
            )));
        }
        Ok(TorusCharacterData { nu, case })
    }

    /// Unconstrained stand-in, used for parameter sweeps.
    pub fn generic(nu: [Rat; 3]) -> Result<Self> {
        Self::new(nu, TorusCase::R3R2)
    }
}

fn d4() -> std::sync::Arc<crate::lattice::RootSystem> {
    root_system(CartanType::D(4)).expect("D4")
}

/// `½(ν₁+2, −ν₁+2, ν₂+ν₃, ν₃−ν₂)` before passing to the dominant chamber.
pub fn infchar_lift_vector(nu: &TorusCharacterData) -> Vec<Rat> {
    let [a, b, c] = nu.nu;
    let h = frac(1, 2);
    vec![(a + 2) * h, (-a + 2) * h, (b + c) * h, (c - b) * h]
}

/// Same vector with the last coordinate negated, i.e. composed with the
/// outer automorphism of `D4` exchanging `ε₃−ε₄` and `ε₃+ε₄`.
pub fn infchar_lift_vector_swapped(nu: &TorusCharacterData) -> Vec<Rat> {
    let mut v = infchar_lift_vector(nu);
    v[3] = -v[3];
    v
}

/// Infinitesimal character of `D4` attached to the torus character `nu`.
pub fn infchar_lift(nu: &TorusCharacterData) -> InfChar {
    InfChar::of_vector(&d4(), &infchar_lift_vector(nu))
}

/// `β + (a/2)α₁ + (b/2)α₂ + (c/2)α₃` with `β = (1,1,0,0)`, `α₁ = ε₁−ε₂`,
/// `α₂ = ε₃−ε₄`, `α₃ = ε₃+ε₄`.
pub fn infchar_symmetric_form(nu: &TorusCharacterData) -> InfChar {
    let [a, b, c] = nu.nu;
    let h = frac(1, 2);
    let beta = ints(&[1, 1, 0, 0]);
    let alphas = [
        ints(&[1, -1, 0, 0]),
        ints(&[0, 0, 1, -1]),
        ints(&[0, 0, 1, 1]),
    ];
    let mut v = beta;
    for (coef, alpha) in [a, b, c].into_iter().zip(alphas) {
        for (vi, ai) in v.iter_mut().zip(alpha) {
            *vi += coef * h * ai;
        }
    }
    InfChar::of_vector(&d4(), &v)
}

/// Torus character `(n+4, −(b+n)/2−2, (b−n)/2−2)` paired with the `Spin(8)`
/// type `(n/2, n/2, n/2, b/2)`.
pub fn spin8_partner(n: i64, b: i64) -> Result<(TorusCharacterData, Weight)> {
    if b.abs() > n || (n - b) % 2 != 0 {
        return Err(LieError::InvalidInput(format!(
            "b={b} not admissible for n={n}"
        )));
    }
    let nu = [int(n + 4), frac(-(b + n), 2) - 2, frac(b - n, 2) - 2];
    let h = frac(n, 2);
    Ok((
        TorusCharacterData::generic(nu)?,
        Weight::simple(vec![h, h, h, frac(b, 2)]),
    ))
}

/// For `n ≤ n_max` and every `|b| ≤ n`, `b ≡ n (mod 2)`, compares the lift of
/// the torus character with the infinitesimal character of the `Spin(8)` type.
pub fn lemma_infchar_consistency(n_max: u32) -> Report {
    let mut report = Report::new("infinitesimal characters");
    let rs = d4();
    for n in 0..=n_max as i64 {
        for b in (-n..=n).step_by(2) {
            let (nu, w) = spin8_partner(n, b).expect("admissible");
            let expected = infinitesimal_character(&rs, &w.parts[0]).expect("dominant");
            let actual = infchar_lift(&nu);
            report.push(Check::compare(format!("n={n},b={b}"), expected, actual));
        }
    }
    report
}

/// Principal-series multiplicity of `V(a,b,c,d)` in the split case.
pub fn ps_multiplicity_split(a: u32, b: u32, c: u32, d: u32) -> u64 {
    so3_invariants(a, b, c, d).count
}

/// Principal-series multiplicity of `V_(x,y) ⊗ V_z` with charge `m` in the
/// quasi-split case. Negative `m` is handled through `|m|`.
pub fn ps_multiplicity_quasisplit(x: u32, y: u32, z: u32, m: i64) -> u64 {
    let (x, y, z, m) = (x as i64, y as i64, z as i64, m.abs());
    let d = x - y;
    if y > x || !(z > d && d >= m) || (z - d) % 2 != 0 || (d - m) % 2 != 0 {
        return 0;
    }
    (0..=x + y)
        .filter(|t| x + y - m >= 2 * t && 2 * t >= d - m && z >= 2 * t + 2 + m)
        .count() as u64
}

/// Values of `t` counted by the stable multiplicity of `V_(x,y) ⊗ V_z[m]`
/// in the hermitian model: empty unless `x+y ≡ z ≡ m (mod 2)`.
pub fn stable_range(x: u32, y: u32, z: u32, m: i64) -> Vec<i64> {
    let (x, y, z, m) = (x as i64, y as i64, z as i64, m.abs());
    if (x + y - m) % 2 != 0 || (z - m) % 2 != 0 {
        return Vec::new();
    }
    (0..=x + y)
        .filter(|t| {
            x + y - m >= 2 * t && 2 * t >= x - y - m && x - y - m >= 0 && z >= m + 2 * t + 2
        })
        .collect()
}

pub fn predicted_stable_value(x: u32, y: u32, z: u32, m: i64) -> u64 {
    stable_range(x, y, z, m).len() as u64
}

/// Level from which the multiplicity is constant: the largest level at which
/// a new `t` starts contributing.
pub fn predicted_onset(x: u32, y: u32, z: u32, m: i64) -> u32 {
    let (x, y, z, am) = (x as i64, y as i64, z as i64, m.abs());
    let ceil_half = |v: i64| (v + 1).div_euclid(2);
    stable_range(x as u32, y as u32, z as u32, m)
        .into_iter()
        .map(|t| ceil_half(x + y + am + 2 * t).max(ceil_half(z + am + 2 * t - 2)))
        .max()
        .unwrap_or(0) as u32
}

/// Multiplicity of `V_(x,y) ⊗ V_z` at charge `m` in level `n` of the
/// hermitian model.
pub fn minrep_multiplicity_quasisplit(x: u32, y: u32, z: u32, m: i64, n: u32) -> u64 {
    if y > x {
        return 0;
    }
    let w = Weight::from_ints(&[&[x as i64, y as i64], &[z as i64]], &[m]);
    hermj_block(n, m).multiplicity(&w)
}

pub fn quasisplit_series(x: u32, y: u32, z: u32, m: i64, n_max: u32) -> MultiplicitySeries {
    let values = (0..=n_max)
        .map(|n| minrep_multiplicity_quasisplit(x, y, z, m, n))
        .collect();
    MultiplicitySeries::new(
        format!("V({x},{y})xV{z}[{m}]"),
        values,
        Stabilization::Value,
    )
}

/// Types `(x, y, z, m)` with `x ≥ y`, `x+y+z ≤ max_sum`, `0 ≤ m ≤ max_m`.
pub fn quasisplit_types(max_sum: u32, max_m: u32) -> Vec<(u32, u32, u32, i64)> {
    let mut out = Vec::new();
    for m in 0..=max_m as i64 {
        for x in 0..=max_sum {
            for y in 0..=x.min(max_sum - x) {
                for z in 0..=max_sum - x - y {
                    out.push((x, y, z, m));
                }
            }
        }
    }
    out
}

/// Per type: the series out to two levels past the predicted onset, its
/// growth verdict, and both multiplicity counts.
pub fn compare_ps_vs_stabilized(max_sum: u32, max_m: u32) -> Report {
    let types = quasisplit_types(max_sum, max_m);
    let checks: Vec<Check> = types
        .par_iter()
        .map(|&(x, y, z, m)| {
            let onset = predicted_onset(x, y, z, m);
            let series = quasisplit_series(x, y, z, m, onset + 2);
            let verdict = series.growth(Stabilization::Value);
            let ps = ps_multiplicity_quasisplit(x, y, z, m);
            let expected = format!("{ps} from level {onset}");
            let actual = match (verdict.accepted, verdict.onset) {
                (true, Some(o)) => format!("{} from level {o}", series.stabilized_value),
                _ => format!("rejected: {}", verdict.reason.unwrap_or_default()),
            };
            Check::compare(format!("({x},{y},{z}) m={m}"), expected, actual)
        })
        .collect();
    let mut report = Report::new("principal series vs stabilized multiplicities");
    for c in checks {
        report.push(c);
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableKind {
    Split,
    Quasisplit,
}

impl TableKind {
    pub const ALL: [TableKind; 2] = [TableKind::Split, TableKind::Quasisplit];

    pub fn id(self) -> &'static str {
        match self {
            TableKind::Split => "split",
            TableKind::Quasisplit => "quasisplit",
        }
    }

    pub fn file_name(self) -> &'static str {
        match self {
            TableKind::Split => "split.tsv",
            TableKind::Quasisplit => "quasisplit.tsv",
        }
    }

    pub fn embedded(self) -> &'static str {
        match self {
            TableKind::Split => include_str!("../../../fixtures/split.tsv"),
            TableKind::Quasisplit => include_str!("../../../fixtures/quasisplit.tsv"),
        }
    }

    pub fn row_count(self) -> u32 {
        match self {
            TableKind::Split => 25,
            TableKind::Quasisplit => 11,
        }
    }

    /// Group of the lowest K-types.
    pub fn group(self) -> GroupSpec {
        use CartanType::{A, C};
        match self {
            TableKind::Split => GroupSpec::product(&[A(1), A(1), A(1), A(1)], 0),
            TableKind::Quasisplit => GroupSpec::product(&[C(2), A(1)], 0),
        }
        .expect("supported")
    }

    /// Cartan subgroup each row is attached to.
    pub fn cartan_class(self, row: u32) -> &'static str {
        match (self, row) {
            (TableKind::Split, 0..=1) => "split",
            (TableKind::Split, 2..=5 | 13..=16) => "T^2 x C^x",
            (TableKind::Split, 6) => "C^x x (R^x)^2",
            (TableKind::Split, 7..=12) => "T x C^x x R^x",
            (TableKind::Split, _) => "compact",
            (TableKind::Quasisplit, 0 | 1 | 4 | 5) => "C^x x (R^x)^2",
            (TableKind::Quasisplit, 2 | 3 | 8) => "(C^x)^2",
            (TableKind::Quasisplit, _) => "T^2 x C^x",
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TableKind {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "split" => Ok(TableKind::Split),
            "quasisplit" | "quasi-split" => Ok(TableKind::Quasisplit),
            other => Err(LieError::InvalidInput(format!("unknown table {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub weight: Weight,
    pub dimension: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub label: u32,
    pub entries: Vec<TableEntry>,
    pub cartan_class: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableFixture {
    pub kind: TableKind,
    pub rows: Vec<TableRow>,
}

/// Parses `row_id<TAB>weight_csv<TAB>dimension` lines; a repeated `row_id`
/// adds another lowest K-type to the same row. Blank lines and `#` comments
/// are skipped.
pub fn parse_table(kind: TableKind, text: &str) -> Result<TableFixture> {
    let g = kind.group();
    let mut rows: Vec<TableRow> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let fail = |reason: String| LieError::Fixture {
            line: line_no,
            reason,
        };
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 3 {
            return Err(fail(format!("expected 3 columns, found {}", cols.len())));
        }
        let label: u32 = cols[0]
            .trim()
            .parse()
            .map_err(|e| fail(format!("row id: {e}")))?;
        let coords: Vec<i64> = cols[1]
            .split(',')
            .map(|c| c.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| fail(format!("weight: {e}")))?;
        let dimension: u64 = cols[2]
            .trim()
            .parse()
            .map_err(|e| fail(format!("dimension: {e}")))?;
        let weight = g
            .unflatten(&ints(&coords))
            .and_then(|w| g.check_highest_weight(&w))
            .map_err(|e| fail(e.to_string()))?;
        let entry = TableEntry { weight, dimension };
        match rows.last_mut() {
            Some(r) if r.label == label => r.entries.push(entry),
            _ => {
                let expected = rows.len() as u32;
                if label != expected {
                    return Err(fail(format!(
                        "row id {label} out of order, expected {expected}"
                    )));
                }
                rows.push(TableRow {
                    label,
                    entries: vec![entry],
                    cartan_class: kind.cartan_class(label),
                });
            }
        }
    }
    if rows.len() as u32 != kind.row_count() {
        return Err(LieError::Fixture {
            line: text.lines().count(),
            reason: format!("expected {} rows, found {}", kind.row_count(), rows.len()),
        });
    }
    Ok(TableFixture { kind, rows })
}

/// One check per row: Weyl dimensions of its K-types against the listed ones.
pub fn verify_fixture(fixture: &TableFixture) -> Result<Report> {
    let g = fixture.kind.group();
    let mut report = Report::new(format!("{} table", fixture.kind));
    for row in &fixture.rows {
        let expected: Vec<String> = row
            .entries
            .iter()
            .map(|e| e.dimension.to_string())
            .collect();
        let actual: Vec<String> = row
            .entries
            .iter()
            .map(|e| group_dimension(&g, &e.weight).map(|d| d.to_string()))
            .collect::<Result<_>>()?;
        report.push(Check::compare(
            format!("{} row {} ({})", fixture.kind, row.label, row.cartan_class),
            expected.join(","),
            actual.join(","),
        ));
    }
    Ok(report)
}

/// Verifies the embedded copy of a table.
pub fn verify_table(kind: TableKind) -> Result<Report> {
    verify_fixture(&parse_table(kind, kind.embedded())?)
}

/// Sign assignments of the split-table K-types that fall in the even
/// triangle family with a zero coordinate.
pub fn split_table_signs() -> Result<Vec<(u32, Weight, SignAssignment)>> {
    let fixture = parse_table(TableKind::Split, TableKind::Split.embedded())?;
    let mut out = Vec::new();
    for row in &fixture.rows {
        for e in &row.entries {
            let l: Vec<i64> = e.weight.parts.iter().map(|p| p[0].to_integer()).collect();
            let s: i64 = l.iter().sum();
            let in_family = l.contains(&0) && l.iter().all(|v| v % 2 == 0 && 2 * v <= s);
            if in_family {
                let a = sign_first_appearance(DualPairCase::SplitJSplitE, &e.weight)?;
                out.push((row.label, e.weight.clone(), a));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minrep::SignTag;
    use proptest::prelude::*;

    fn t(a: i64, b: i64, c: i64) -> TorusCharacterData {
        TorusCharacterData::generic([int(a), int(b), int(c)]).unwrap()
    }

    /// Dominant representative by sorting absolute values and fixing the sign
    /// of the last entry by the parity of negative entries.
    fn d4_dominant(v: &[Rat]) -> Vec<Rat> {
        let mut a: Vec<Rat> = v
            .iter()
            .map(|q| if *q < int(0) { -*q } else { *q })
            .collect();
        a.sort_by(|p, q| q.cmp(p));
        let negatives = v.iter().filter(|q| **q < int(0)).count();
        if negatives % 2 == 1 && a[3] != int(0) {
            a[3] = -a[3];
        }
        a
    }

    #[test]
    fn lift_examples() {
        assert_eq!(infchar_lift(&t(0, 0, 0)).rep, ints(&[1, 1, 0, 0]));
        assert_eq!(infchar_lift(&t(2, -1, -1)).rep, ints(&[2, 1, 0, 0]));
        assert_eq!(infchar_lift(&t(4, -2, -2)).rep, ints(&[3, 2, 1, 0]));
        assert_eq!(infchar_symmetric_form(&t(0, 0, 0)).rep, ints(&[1, 1, 0, 0]));
    }

    #[test]
    fn lift_matches_sorting_oracle() {
        for nu in [t(3, -1, -2), t(5, -3, -2), t(7, -2, -5), t(-4, 1, 3)] {
            assert_eq!(
                infchar_lift(&nu).rep,
                d4_dominant(&infchar_lift_vector(&nu))
            );
        }
    }

    #[test]
    fn swapped_lift_differs_only_by_the_outer_automorphism() {
        // With b = 1 the swapped lift lands on the wrong D4 orbit.
        let (nu, w) = spin8_partner(1, 1).unwrap();
        let target = infinitesimal_character(&d4(), &w.parts[0]).unwrap();
        assert_eq!(infchar_lift(&nu), target);
        let swapped = InfChar::of_vector(&d4(), &infchar_lift_vector_swapped(&nu));
        assert_ne!(swapped, target);
        let mut flipped = swapped.rep.clone();
        flipped[3] = -flipped[3];
        assert_eq!(flipped, target.rep);
    }

    #[test]
    fn consistency_small() {
        let r = lemma_infchar_consistency(4);
        assert_eq!(r.checks.len(), 15);
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    proptest! {
        #[test]
        fn symmetric_form_agrees(a in -40i64..40, b in -40i64..40, da in 1i64..7, db in 1i64..7) {
            let (p, q) = (frac(a, da), frac(b, db));
            let nu = TorusCharacterData::generic([p, q, -p - q]).unwrap();
            prop_assert_eq!(infchar_lift(&nu), infchar_symmetric_form(&nu));
        }
    }

    #[test]
    fn torus_integrality() {
        assert!(TorusCharacterData::new([int(1), int(1), int(1)], TorusCase::R3R2).is_err());
        assert!(
            TorusCharacterData::new([frac(1, 2), frac(-1, 2), int(0)], TorusCase::R3C).is_err()
        );
        assert!(TorusCharacterData::new([int(2), int(-1), int(-1)], TorusCase::R3C).is_ok());
        assert!(
            TorusCharacterData::new([int(1), frac(-1, 2), frac(-1, 2)], TorusCase::RcC).is_ok()
        );
        assert!(
            TorusCharacterData::new([frac(1, 2), frac(-1, 4), frac(-1, 4)], TorusCase::RcC)
                .is_err()
        );
        assert!(
            TorusCharacterData::new([frac(1, 3), frac(-1, 3), int(0)], TorusCase::RcR2).is_ok()
        );
    }

    #[test]
    fn ps_examples() {
        assert_eq!(ps_multiplicity_split(0, 0, 0, 0), 1);
        assert_eq!(ps_multiplicity_split(1, 1, 1, 1), 2);
        assert_eq!(ps_multiplicity_split(2, 2, 2, 0), 1);
        assert_eq!(ps_multiplicity_quasisplit(0, 0, 2, 0), 1);
        assert_eq!(ps_multiplicity_quasisplit(2, 0, 4, 0), 1);
        assert_eq!(ps_multiplicity_quasisplit(2, 2, 4, 2), 0);
        assert_eq!(
            ps_multiplicity_quasisplit(2, 0, 4, -2),
            ps_multiplicity_quasisplit(2, 0, 4, 2)
        );
    }

    #[test]
    fn minrep_quasisplit_examples() {
        assert_eq!(minrep_multiplicity_quasisplit(0, 0, 2, 0, 0), 1);
        for n in 1..6 {
            assert_eq!(minrep_multiplicity_quasisplit(1, 1, 2, 0, n), 1);
        }
        assert_eq!(minrep_multiplicity_quasisplit(1, 1, 2, 0, 0), 0);
        // z ≤ x − y never occurs.
        for n in 0..6 {
            assert_eq!(minrep_multiplicity_quasisplit(3, 1, 2, 0, n), 0);
        }
    }

    #[test]
    fn comparison_small() {
        let r = compare_ps_vs_stabilized(6, 2);
        assert!(
            r.all_passed(),
            "{:?}",
            r.failures().take(5).collect::<Vec<_>>()
        );
    }

    #[test]
    fn tables_verify() {
        for kind in TableKind::ALL {
            let r = verify_table(kind).unwrap();
            assert_eq!(r.checks.len() as u32, kind.row_count());
            assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn table_parse_errors() {
        let err = parse_table(TableKind::Quasisplit, "0\t0,0\t3\n").unwrap_err();
        assert!(matches!(err, LieError::Fixture { line: 1, .. }));
        let err = parse_table(TableKind::Quasisplit, "1\t0,0,2\t3\n").unwrap_err();
        assert!(matches!(err, LieError::Fixture { line: 1, .. }));
        let err = parse_table(TableKind::Quasisplit, "0\t0,0,2\tthree\n").unwrap_err();
        assert!(matches!(err, LieError::Fixture { line: 1, .. }));
        let err = parse_table(TableKind::Quasisplit, "0\t0,0,2\t3\n").unwrap_err();
        assert!(matches!(err, LieError::Fixture { .. }));
    }

    #[test]
    fn table_rows_carry_classes() {
        let f = parse_table(TableKind::Quasisplit, TableKind::Quasisplit.embedded()).unwrap();
        assert_eq!(f.rows[5].entries.len(), 2);
        assert_eq!(f.rows[8].cartan_class, "(C^x)^2");
        let f = parse_table(TableKind::Split, TableKind::Split.embedded()).unwrap();
        assert_eq!(f.rows[1].entries.len(), 4);
        assert_eq!(f.rows[24].cartan_class, "compact");
    }

    #[test]
    fn split_table_signs_follow_half_sum_parity() {
        let signs = split_table_signs().unwrap();
        assert!(!signs.is_empty());
        for (_, w, a) in signs {
            let s: i64 = w.parts.iter().map(|p| p[0].to_integer()).sum();
            let expected = if (s / 2) % 2 == 0 {
                SignTag::Rho1
            } else {
                SignTag::Epsilon
            };
            assert_eq!(a.tag, expected, "{w}");
            assert_eq!(a.level as i64, s / 2);
        }
    }
}
