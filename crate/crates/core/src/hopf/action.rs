use std::collections::BTreeMap;

use super::{AbelianGroup, AlgebraKind, HopfAlgebra, HopfError};
use crate::field::Scalar;
use crate::linalg::Matrix;

/// A finite abelian group acting on a Hopf algebra by Hopf automorphisms.
///
/// `maps[g]` is the matrix of `x ↦ g·x` (column `j` is the image of `e_j`).
#[derive(Debug, Clone)]
pub struct GroupAction {
    group: AbelianGroup,
    maps: Vec<Matrix>,
    description: String,
}

impl GroupAction {
    /// Builds the action from the images of the group generators and checks
    /// that each is a Hopf automorphism and that the group relations hold.
    pub fn from_generator_maps(
        base: &HopfAlgebra,
        group: AbelianGroup,
        generator_maps: Vec<Matrix>,
        description: &str,
    ) -> Result<GroupAction, HopfError> {
        let n = base.dim();
        let k = base.field();
        if generator_maps.len() != group.rank() {
            return Err(HopfError::NotAutomorphism(format!(
                "{} generator maps for a group of rank {}",
                generator_maps.len(),
                group.rank()
            )));
        }
        for (i, m) in generator_maps.iter().enumerate() {
            if m.rows() != n || m.cols() != n || m.field() != k {
                return Err(HopfError::NotAutomorphism(format!(
                    "map for {} has the wrong shape or field",
                    group.names()[i]
                )));
            }
            check_hopf_automorphism(base, m)
                .map_err(|w| HopfError::NotAutomorphism(format!("{}: {w}", group.names()[i])))?;
            if !m.pow(group.orders()[i]).is_identity() {
                return Err(HopfError::NotAutomorphism(format!(
                    "{} does not have order dividing {}",
                    group.names()[i],
                    group.orders()[i]
                )));
            }
        }
        for a in 0..generator_maps.len() {
            for b in a + 1..generator_maps.len() {
                let (x, y) = (&generator_maps[a], &generator_maps[b]);
                if x.mul(y) != y.mul(x) {
                    return Err(HopfError::NotAutomorphism("generator maps do not commute".into()));
                }
            }
        }
        let maps = (0..group.order())
            .map(|g| {
                group
                    .exponents(g)
                    .iter()
                    .zip(&generator_maps)
                    .fold(Matrix::identity(k, n), |acc, (&e, m)| acc.mul(&m.pow(e)))
            })
            .collect();
        Ok(GroupAction {
            group,
            maps,
            description: description.to_string(),
        })
    }

    pub fn trivial(base: &HopfAlgebra, group: AbelianGroup) -> GroupAction {
        let id = Matrix::identity(base.field(), base.dim());
        GroupAction {
            maps: vec![id; group.order()],
            group,
            description: "trivial".into(),
        }
    }

    /// Action of `G` on a group algebra `kE` permuting the generators of `E`:
    /// the `i`-th generator of `G` sends `g_j` to `g_{perms[i][j]}`.
    pub fn permute_group_generators(
        base: &HopfAlgebra,
        group: AbelianGroup,
        perms: &[Vec<usize>],
        description: &str,
    ) -> Result<GroupAction, HopfError> {
        let AlgebraKind::Group(e) = base.kind() else {
            return Err(HopfError::UnsupportedAlgebra(format!(
                "{} is not a group algebra",
                base.name()
            )));
        };
        let k = base.field();
        let mut maps = Vec::new();
        for perm in perms {
            if perm.len() != e.rank() || perm.iter().any(|&j| j >= e.rank()) {
                return Err(HopfError::NotAutomorphism("bad generator permutation".into()));
            }
            if (0..e.rank()).any(|j| e.orders()[j] != e.orders()[perm[j]]) {
                return Err(HopfError::NotAutomorphism("permutation mixes cyclic orders".into()));
            }
            let mut m = Matrix::zeros(k, base.dim(), base.dim());
            for idx in 0..e.order() {
                let exps = e.exponents(idx);
                let mut image = vec![0; e.rank()];
                for (j, &a) in exps.iter().enumerate() {
                    image[perm[j]] = a;
                }
                m.set(e.index(&image), idx, k.one());
            }
            maps.push(m);
        }
        GroupAction::from_generator_maps(base, group, maps, description)
    }

    /// `Z/2` (generator `h`) interchanging the two generators of a rank-2 group algebra.
    pub fn swap_generators(base: &HopfAlgebra) -> Result<GroupAction, HopfError> {
        let g = AbelianGroup::new(&[2], "h");
        GroupAction::permute_group_generators(base, g, &[vec![1, 0]], "swap-generators")
    }

    /// `Z/r` (generator `h`) cycling `g_1 → g_2 → ... → g_r → g_1` on a rank-`r` group algebra.
    pub fn cycle_generators(base: &HopfAlgebra) -> Result<GroupAction, HopfError> {
        let AlgebraKind::Group(e) = base.kind() else {
            return Err(HopfError::UnsupportedAlgebra(format!(
                "{} is not a group algebra",
                base.name()
            )));
        };
        let r = e.rank();
        let g = AbelianGroup::new(&[r as u32], "h");
        let perm: Vec<usize> = (0..r).map(|j| (j + 1) % r).collect();
        GroupAction::permute_group_generators(base, g, &[perm], "cycle-generators")
    }

    /// `Z/2` (generator `h`) interchanging the factors of `B ⊗ B`.
    pub fn swap_tensor_factors(base: &HopfAlgebra) -> Result<GroupAction, HopfError> {
        let AlgebraKind::Tensor(l, r) = base.kind() else {
            return Err(HopfError::UnsupportedAlgebra(format!(
                "{} is not a tensor product",
                base.name()
            )));
        };
        if l.dim() != r.dim() || l.parts().mult != r.parts().mult || l.parts().comul != r.parts().comul {
            return Err(HopfError::NotAutomorphism("tensor factors differ".into()));
        }
        let d = l.dim();
        let k = base.field();
        let mut m = Matrix::zeros(k, d * d, d * d);
        for i in 0..d {
            for j in 0..d {
                m.set(j * d + i, i * d + j, k.one());
            }
        }
        let g = AbelianGroup::new(&[2], "h");
        GroupAction::from_generator_maps(base, g, vec![m], "swap-factors")
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn map(&self, g: usize) -> &Matrix {
        &self.maps[g]
    }

    /// `g · v`.
    pub fn apply(&self, g: usize, v: &[Scalar]) -> Vec<Scalar> {
        self.maps[g].mul_vec(v)
    }

    /// `g · e_j` as a sparse vector.
    pub fn apply_basis(&self, g: usize, j: usize) -> Vec<(usize, Scalar)> {
        let m = &self.maps[g];
        let k = m.field();
        (0..m.rows())
            .filter(|&i| !k.is_zero(m.get(i, j)))
            .map(|i| (i, m.get(i, j).clone()))
            .collect()
    }
}

/// Checks that `m` is an invertible map preserving product, unit, Δ, ε and S.
/// Returns a description of the first failure.
pub(crate) fn check_hopf_automorphism(a: &HopfAlgebra, m: &Matrix) -> Result<(), String> {
    let n = a.dim();
    let k = a.field();
    if m.rank() != n {
        return Err("map is not invertible".into());
    }
    let col = |j: usize| -> Vec<(usize, Scalar)> {
        (0..n)
            .filter(|&i| !k.is_zero(m.get(i, j)))
            .map(|i| (i, m.get(i, j).clone()))
            .collect()
    };
    let images: Vec<_> = (0..n).map(col).collect();
    let apply = |v: &[(usize, Scalar)]| -> BTreeMap<usize, Scalar> {
        let mut acc = BTreeMap::new();
        for (j, c) in v {
            for (i, d) in &images[*j] {
                let e = acc.entry(*i).or_insert_with(|| k.zero());
                *e = k.add(e, &k.mul(c, d));
            }
        }
        super::prune(k, acc)
    };
    let one: Vec<(usize, Scalar)> = a.parts().unit.clone();
    if apply(&one) != one.iter().cloned().collect::<BTreeMap<_, _>>() {
        return Err("unit not preserved".into());
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = apply(a.mul_basis(i, j));
            let rhs = a.mul_sparse(&images[i], &images[j]);
            if lhs != rhs {
                return Err(format!("product ({}, {}) not preserved", a.labels()[i], a.labels()[j]));
            }
        }
    }
    for i in 0..n {
        let img = a.densify(&images[i]);
        if a.counit(&img) != *a.counit_basis(i) {
            return Err(format!("counit not preserved at {}", a.labels()[i]));
        }
        // Δ(φ(e_i)) = (φ⊗φ)Δ(e_i)
        let lhs = a.comul(&img);
        let mut rhs: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (l, r, c) in a.comul_basis(i) {
            for (x, cx) in &images[*l] {
                for (y, cy) in &images[*r] {
                    let e = rhs.entry((*x, *y)).or_insert_with(|| k.zero());
                    *e = k.add(e, &k.mul(c, &k.mul(cx, cy)));
                }
            }
        }
        if lhs != super::prune(k, rhs) {
            return Err(format!("comultiplication not preserved at {}", a.labels()[i]));
        }
        let s_img = a.sparsify(&a.antipode(&img));
        let img_s = apply(a.antipode_basis(i));
        if s_img.into_iter().collect::<BTreeMap<_, _>>() != img_s {
            return Err(format!("antipode not preserved at {}", a.labels()[i]));
        }
    }
    Ok(())
}
