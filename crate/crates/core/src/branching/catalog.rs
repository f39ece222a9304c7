//! Fixed catalog of subgroup embeddings, each given as a rational matrix on
//! concatenated weight coordinates (factor blocks first, then charges).

use std::sync::OnceLock;

use crate::error::{LieError, Result};
use crate::lattice::{CartanType, GroupSpec, Weight};
use crate::rational::{dot, frac, int, Rat};

#[derive(Clone, Debug)]
pub struct EmbeddingMap {
    pub name: &'static str,
    pub big: GroupSpec,
    pub small: GroupSpec,
    /// One row per small coordinate, one column per big coordinate.
    pub matrix: Vec<Vec<Rat>>,
}

impl EmbeddingMap {
    /// Builds the matrix by evaluating a linear map on unit vectors.
    fn from_linear(
        name: &'static str,
        big: GroupSpec,
        small: GroupSpec,
        f: impl Fn(&[Rat]) -> Vec<Rat>,
    ) -> Self {
        let n = big.coordinate_count();
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![int(0); n];
            e[j] = int(1);
            let image = f(&e);
            assert_eq!(image.len(), small.coordinate_count(), "{name}");
            cols.push(image);
        }
        let matrix = (0..small.coordinate_count())
            .map(|i| cols.iter().map(|c| c[i]).collect())
            .collect();
        EmbeddingMap {
            name,
            big,
            small,
            matrix,
        }
    }

    pub fn restrict_flat(&self, v: &[Rat]) -> Vec<Rat> {
        self.matrix.iter().map(|row| dot(row, v)).collect()
    }

    pub fn restrict_weight(&self, w: &Weight) -> Result<Weight> {
        self.big.check_shape(w)?;
        let image = self.restrict_flat(&w.flatten());
        let small = self.small.unflatten(&image)?;
        Ok(self.small.normalize(&small))
    }
}

fn g(types: &[CartanType], circles: usize) -> GroupSpec {
    GroupSpec::product(types, circles).expect("catalog groups are supported")
}

use CartanType::{A, B, C, D};

fn build() -> Vec<EmbeddingMap> {
    let mut out = vec![
        EmbeddingMap::from_linear("sp2xsp2_in_sp4", g(&[C(4)], 0), g(&[C(2), C(2)], 0), |w| {
            w.to_vec()
        }),
        EmbeddingMap::from_linear(
            "su2x4_in_sp4",
            g(&[C(4)], 0),
            g(&[A(1), A(1), A(1), A(1)], 0),
            |w| w.to_vec(),
        ),
        EmbeddingMap::from_linear("su2su2_in_sp2", g(&[C(2)], 0), g(&[A(1), A(1)], 0), |w| {
            w.to_vec()
        }),
        // SO(3) weight c is the A1 label 2c; the SO(2) charge is the second coordinate.
        EmbeddingMap::from_linear("so3so2_in_so5", g(&[B(2)], 0), g(&[A(1)], 1), |w| {
            vec![int(2) * w[0], w[1]]
        }),
        // Same subgroup seen inside Sp(2), with charges in the SO(5) normalization:
        // (x, y) = (a + b, a - b).
        EmbeddingMap::from_linear("sp1so2_in_sp2", g(&[C(2)], 0), g(&[A(1)], 1), |w| {
            vec![w[0] + w[1], (w[0] - w[1]) * frac(1, 2)]
        }),
        EmbeddingMap::from_linear("spin8u1_in_spin10", g(&[D(5)], 0), g(&[D(4)], 1), |w| {
            vec![w[0], w[1], w[2], w[3], int(2) * w[4]]
        }),
        // Charge is the pairing with h = (1,1,1,1,-2,-2)/3.
        EmbeddingMap::from_linear("sp2su2u1_in_su6", g(&[A(5)], 0), g(&[C(2), A(1)], 1), |u| {
            let h = (u[0] + u[1] + u[2] + u[3]) * frac(1, 3) - (u[4] + u[5]) * frac(2, 3);
            vec![u[0] - u[3], u[1] - u[2], u[4] - u[5], h]
        }),
        EmbeddingMap::from_linear("sp3_in_su6", g(&[A(5)], 0), g(&[C(3)], 0), |u| {
            vec![u[0] - u[3], u[1] - u[2], u[4] - u[5]]
        }),
        EmbeddingMap::from_linear("sp2sp1_in_sp3", g(&[C(3)], 0), g(&[C(2), A(1)], 0), |w| {
            w.to_vec()
        }),
    ];
    for (k, name) in [
        (2, "diag_su2_in_su2x2"),
        (3, "diag_su2_in_su2x3"),
        (4, "diag_su2_in_su2x4"),
    ] {
        out.push(EmbeddingMap::from_linear(
            name,
            g(&vec![A(1); k], 0),
            g(&[A(1)], 0),
            |w| vec![w.iter().copied().sum()],
        ));
    }
    out
}

pub fn catalog() -> &'static [EmbeddingMap] {
    static CATALOG: OnceLock<Vec<EmbeddingMap>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

pub fn embedding(name: &str) -> Result<&'static EmbeddingMap> {
    catalog()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| LieError::UnknownEmbedding(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ints;
    use std::collections::HashSet;

    #[test]
    fn names_are_unique() {
        let names: HashSet<&str> = catalog().iter().map(|e| e.name).collect();
        assert_eq!(names.len(), catalog().len());
        assert!(embedding("nope").is_err());
    }

    #[test]
    fn h_charge_on_top_weight_of_omega3() {
        let e = embedding("sp2su2u1_in_su6").unwrap();
        let w = e.big.normalize(&Weight::simple(ints(&[1, 1, 1, 0, 0, 0])));
        let r = e.restrict_weight(&w).unwrap();
        assert_eq!(r, Weight::from_ints(&[&[1, 0], &[0]], &[1]));
    }

    #[test]
    fn spin_charge_is_twice_last_coordinate() {
        let e = embedding("spin8u1_in_spin10").unwrap();
        let w = Weight::simple(vec![frac(1, 2); 5]);
        let r = e.restrict_weight(&w).unwrap();
        assert_eq!(r.charges, vec![int(1)]);
    }

    #[test]
    fn so5_forms_agree_under_coordinate_change() {
        let a = embedding("so3so2_in_so5").unwrap();
        let b = embedding("sp1so2_in_sp2").unwrap();
        for (x, y) in [(3, 1), (2, 0), (5, -4), (0, 0)] {
            let sp = Weight::simple(ints(&[x, y]));
            let so = Weight::simple(vec![frac(x + y, 2), frac(x - y, 2)]);
            assert_eq!(
                a.restrict_weight(&so).unwrap(),
                b.restrict_weight(&sp).unwrap()
            );
        }
    }
}
