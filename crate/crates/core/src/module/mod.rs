//! Finite-dimensional left modules given by action matrices.

mod hom;

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub use hom::{hom_space, iso_test, iso_test_seeded, rigidity_split, IsoResult, IsoWitness, RigidityReport};

use crate::field::{FieldError, Scalar};
use crate::hopf::{ideal_closure, AlgebraKind, GroupAction, HopfAlgebra, HopfError};
use crate::linalg::{LinalgError, Matrix, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("modules live over different algebras: {0} vs {1}")]
    AlgebraMismatch(String, String),
    #[error("bad action data: {0}")]
    Shape(String),
    #[error("not a module: {0}")]
    NotAModule(String),
    #[error("no group action data on {0}")]
    NoActionData(String),
    #[error("{0} is not a smash coproduct")]
    NotSmashCoproduct(String),
    #[error("{0}")]
    TooLarge(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A left module: one `dim × dim` matrix per algebra basis element.
#[derive(Clone)]
pub struct Module {
    algebra: Arc<HopfAlgebra>,
    dim: usize,
    actions: Arc<Vec<Matrix>>,
    label: String,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Module({}, dim {} over {})",
            self.label,
            self.dim,
            self.algebra.name()
        )
    }
}

/// A linear map between modules of the same algebra.
#[derive(Debug, Clone)]
pub struct ModuleMap {
    pub source: Module,
    pub target: Module,
    /// `dim target × dim source`.
    pub matrix: Matrix,
}

impl ModuleMap {
    /// Whether `matrix · ρ_source(a) = ρ_target(a) · matrix` for every basis element.
    pub fn is_module_map(&self) -> bool {
        (0..self.source.algebra.dim())
            .all(|a| self.matrix.mul(self.source.action(a)) == self.target.action(a).mul(&self.matrix))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ModuleReport {
    pub module: String,
    pub checks: Vec<RelationCheck>,
}

impl ModuleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// All basis pairs are checked when `dim(A)² · dim(M)³` stays below this;
/// otherwise products with algebra generators are checked, which suffices.
const FULL_PAIR_BUDGET: usize = 50_000_000;

pub(crate) fn same_algebra(a: &HopfAlgebra, b: &HopfAlgebra) -> bool {
    std::ptr::eq(a, b)
        || (a.name() == b.name() && a.dim() == b.dim() && a.field() == b.field() && a.labels() == b.labels())
}

pub(crate) fn check_same(a: &Module, b: &Module) -> Result<(), ModuleError> {
    if same_algebra(&a.algebra, &b.algebra) {
        Ok(())
    } else {
        Err(ModuleError::AlgebraMismatch(
            a.algebra.name().into(),
            b.algebra.name().into(),
        ))
    }
}

/// `Σ c_i ρ(e_i)` for a sparse combination.
fn combine(k: &crate::field::Field, dim: usize, actions: &[Matrix], v: &[(usize, Scalar)]) -> Matrix {
    let mut out = Matrix::zeros(k, dim, dim);
    for (i, c) in v {
        out.add_scaled_assign(c, &actions[*i]);
    }
    out
}

/// Checks `ρ(1) = I` and multiplicativity, reporting the first failing pair.
pub fn validate_module(m: &Module) -> ModuleReport {
    let a = &m.algebra;
    let k = a.field();
    let n = a.dim();
    let d = m.dim;
    let mut checks = Vec::new();
    let shape_ok = m.actions.len() == n
        && m.actions
            .iter()
            .all(|x| x.rows() == d && x.cols() == d && x.field() == k);
    checks.push(RelationCheck {
        relation: "shape".into(),
        passed: shape_ok,
        witness: (!shape_ok).then(|| format!("expected {n} matrices of size {d}x{d} over {}", k.name())),
    });
    if !shape_ok {
        return ModuleReport {
            module: m.label.clone(),
            checks,
        };
    }
    let unit_ok = combine(k, d, &m.actions, &a.parts().unit).is_identity();
    checks.push(RelationCheck {
        relation: "unit".into(),
        passed: unit_ok,
        witness: (!unit_ok).then(|| "1".to_string()),
    });
    let full = n.saturating_mul(n).saturating_mul(d.pow(3)) <= FULL_PAIR_BUDGET;
    let rights: Vec<(String, Vec<(usize, Scalar)>)> = if full {
        (0..n).map(|j| (a.labels()[j].clone(), vec![(j, k.one())])).collect()
    } else {
        a.generators().into_iter().map(|(s, v)| (s, a.sparsify(&v))).collect()
    };
    let right_mats: Vec<Matrix> = rights.iter().map(|(_, v)| combine(k, d, &m.actions, v)).collect();
    let witness = (0..n * rights.len()).into_par_iter().find_map_first(|ij| {
        let (i, j) = (ij / rights.len(), ij % rights.len());
        let prod = a.mul_sparse(&[(i, k.one())], &rights[j].1);
        let expect = combine(k, d, &m.actions, &prod.into_iter().collect::<Vec<_>>());
        (m.actions[i].mul(&right_mats[j]) != expect).then(|| format!("({}, {})", a.labels()[i], rights[j].0))
    });
    checks.push(RelationCheck {
        relation: "product".into(),
        passed: witness.is_none(),
        witness,
    });
    ModuleReport {
        module: m.label.clone(),
        checks,
    }
}

impl Module {
    /// Builds a module and validates it.
    pub fn new(algebra: Arc<HopfAlgebra>, actions: Vec<Matrix>, label: &str) -> Result<Module, ModuleError> {
        let dim = actions.first().map(|m| m.rows()).unwrap_or(0);
        let m = Module::new_unchecked(algebra, dim, actions, label);
        let report = validate_module(&m);
        match report.first_failure() {
            None => Ok(m),
            Some(c) if c.relation == "shape" => Err(ModuleError::Shape(c.witness.clone().unwrap_or_default())),
            Some(c) => Err(ModuleError::NotAModule(format!(
                "{} fails at {}",
                c.relation,
                c.witness.clone().unwrap_or_default()
            ))),
        }
    }

    /// Builds a module without checking the relations.
    pub fn new_unchecked(algebra: Arc<HopfAlgebra>, dim: usize, actions: Vec<Matrix>, label: &str) -> Module {
        Module {
            algebra,
            dim,
            actions: Arc::new(actions),
            label: label.to_string(),
        }
    }

    /// Builds a module from the images of the algebra generators
    /// ([`HopfAlgebra::generators`]), extending multiplicatively.
    pub fn from_generator_images(
        algebra: Arc<HopfAlgebra>,
        images: &[(String, Matrix)],
        label: &str,
    ) -> Result<Module, ModuleError> {
        let k = algebra.field().clone();
        let n = algebra.dim();
        let gens = algebra.generators();
        let dim = images.first().map(|(_, m)| m.rows()).unwrap_or(0);
        let mut gen_mats = Vec::new();
        for (name, v) in &gens {
            let m = images
                .iter()
                .find(|(s, _)| s == name)
                .map(|(_, m)| m.clone())
                .ok_or_else(|| ModuleError::Shape(format!("no image given for generator {name}")))?;
            if m.rows() != dim || m.cols() != dim || m.field() != &k {
                return Err(ModuleError::Shape(format!("image of {name} has the wrong shape")));
            }
            gen_mats.push((algebra.sparsify(v), m));
        }
        if let Some((s, _)) = images.iter().find(|(s, _)| !gens.iter().any(|(g, _)| g == s)) {
            return Err(ModuleError::Shape(format!(
                "{s} is not a generator of {}",
                algebra.name()
            )));
        }
        // words in the generators until they span the algebra
        let mut span = Subspace::new(&k, n);
        let mut found: Vec<(Vec<Scalar>, Matrix)> = Vec::new();
        let one = algebra.one();
        span.insert(&one);
        found.push((one, Matrix::identity(&k, dim)));
        let mut head = 0;
        while head < found.len() && span.dim() < n {
            let (v, m) = found[head].clone();
            head += 1;
            let sv = algebra.sparsify(&v);
            for (g, gm) in &gen_mats {
                let w = algebra.densify(&algebra.mul_sparse(g, &sv).into_iter().collect::<Vec<_>>());
                if span.insert(&w) {
                    found.push((w, gm.mul(&m)));
                }
            }
        }
        if span.dim() < n {
            return Err(ModuleError::Shape("generators do not span the algebra".into()));
        }
        let basis = Matrix::from_fn(&k, n, n, |i, j| found[j].0[i].clone());
        let inv = basis.inverse().expect("spanning words are independent");
        let actions = (0..n)
            .map(|i| {
                let mut acc = Matrix::zeros(&k, dim, dim);
                for (j, (_, m)) in found.iter().enumerate() {
                    let c = inv.get(j, i);
                    if !k.is_zero(c) {
                        acc.add_scaled_assign(c, m);
                    }
                }
                acc
            })
            .collect();
        Module::new(algebra, actions, label)
    }

    /// The trivial module `k`, with `a` acting by `ε(a)`.
    pub fn trivial(algebra: &Arc<HopfAlgebra>) -> Module {
        let k = algebra.field();
        let actions = (0..algebra.dim())
            .map(|i| Matrix::from_fn(k, 1, 1, |_, _| algebra.counit_basis(i).clone()))
            .collect();
        Module::new_unchecked(algebra.clone(), 1, actions, "k")
    }

    /// The left regular module.
    pub fn regular(algebra: &Arc<HopfAlgebra>) -> Module {
        let actions = (0..algebra.dim())
            .into_par_iter()
            .map(|i| algebra.left_mult_matrix(&algebra.basis_element(i)))
            .collect();
        Module::new_unchecked(algebra.clone(), algebra.dim(), actions, "regular")
    }

    /// The zero module.
    pub fn zero(algebra: &Arc<HopfAlgebra>) -> Module {
        let k = algebra.field();
        let actions = (0..algebra.dim()).map(|_| Matrix::zeros(k, 0, 0)).collect();
        Module::new_unchecked(algebra.clone(), 0, actions, "0")
    }

    /// `A / (A x_1 + ... + A x_r)` for the left ideal generated by `elements`.
    pub fn quotient_of_regular(
        algebra: &Arc<HopfAlgebra>,
        elements: &[Vec<Scalar>],
        label: &str,
    ) -> Result<Module, ModuleError> {
        let gens: Vec<_> = algebra.generators().iter().map(|(_, v)| algebra.sparsify(v)).collect();
        let ideal = ideal_closure(algebra, elements, &gens, false);
        let reg = Module::regular(algebra);
        Ok(reg.quotient(&ideal.basis_matrix())?.relabel(label))
    }

    pub fn algebra(&self) -> &Arc<HopfAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn relabel(mut self, label: &str) -> Module {
        self.label = label.to_string();
        self
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    /// `ρ(e_i)`.
    pub fn action(&self, i: usize) -> &Matrix {
        &self.actions[i]
    }

    /// `ρ(a)` for an algebra element.
    pub fn act(&self, a: &[Scalar]) -> Matrix {
        combine(self.algebra.field(), self.dim, &self.actions, &self.algebra.sparsify(a))
    }

    /// Action of a named algebra element, e.g. `x1` or `g2-1`.
    pub fn act_expr(&self, expr: &str) -> Result<Matrix, ModuleError> {
        Ok(self.act(&self.algebra.parse_element(expr)?))
    }

    /// Smallest submodule containing the columns of `vectors`.
    pub fn submodule_generated(&self, vectors: &Matrix) -> Subspace {
        let k = self.algebra.field();
        let gens: Vec<Matrix> = self.algebra.generators().iter().map(|(_, v)| self.act(v)).collect();
        let mut space = Subspace::new(k, self.dim);
        let mut queue = Vec::new();
        for j in 0..vectors.cols() {
            let v = vectors.column(j);
            if space.insert(&v) {
                queue.push(v);
            }
        }
        while let Some(v) = queue.pop() {
            for g in &gens {
                let w = g.mul_vec(&v);
                if space.insert(&w) {
                    queue.push(w);
                }
            }
        }
        space
    }

    /// The submodule spanned by the columns of `basis`, which must be stable.
    pub fn submodule(&self, basis: &Matrix) -> Result<Module, ModuleError> {
        let cb = basis.column_basis();
        let mut actions = Vec::with_capacity(self.actions.len());
        for m in self.actions.iter() {
            let img = m.mul(&cb.basis);
            if !cb.contains(&img) {
                return Err(ModuleError::NotAModule("subspace is not stable".into()));
            }
            actions.push(cb.coordinates(&img));
        }
        Ok(Module::new_unchecked(
            self.algebra.clone(),
            cb.dim(),
            actions,
            &format!("sub({})", self.label),
        ))
    }

    /// The quotient by the submodule spanned by the columns of `basis`, in the
    /// coordinates of the complementary standard basis vectors.
    pub fn quotient(&self, basis: &Matrix) -> Result<Module, ModuleError> {
        let k = self.algebra.field();
        let cb = basis.column_basis();
        let comp = cb.complement_rows();
        let lift = Matrix::from_fn(
            k,
            self.dim,
            comp.len(),
            |i, j| if comp[j] == i { k.one() } else { k.zero() },
        );
        let mut actions = Vec::with_capacity(self.actions.len());
        for m in self.actions.iter() {
            if cb.dim() > 0 && !cb.contains(&m.mul(&cb.basis)) {
                return Err(ModuleError::NotAModule("subspace is not stable".into()));
            }
            actions.push(if cb.dim() == 0 {
                m.clone()
            } else {
                cb.quotient_coordinates(&m.mul(&lift))
            });
        }
        Ok(Module::new_unchecked(
            self.algebra.clone(),
            comp.len(),
            actions,
            &format!("quot({})", self.label),
        ))
    }

    pub fn direct_sum(&self, other: &Module) -> Result<Module, ModuleError> {
        check_same(self, other)?;
        let k = self.algebra.field();
        let actions = self
            .actions
            .iter()
            .zip(other.actions.iter())
            .map(|(x, y)| Matrix::block_diag(k, &[x, y]))
            .collect();
        Ok(Module::new_unchecked(
            self.algebra.clone(),
            self.dim + other.dim,
            actions,
            &format!("({})+({})", self.label, other.label),
        ))
    }

    /// `M ⊗ N` with `a` acting by `Σ ρ_M(a_1) ⊗ ρ_N(a_2)`.
    pub fn tensor(&self, other: &Module) -> Result<Module, ModuleError> {
        check_same(self, other)?;
        let a = &self.algebra;
        let k = a.field();
        let d = self.dim * other.dim;
        let actions = (0..a.dim())
            .into_par_iter()
            .map(|i| {
                let mut acc = Matrix::zeros(k, d, d);
                for (l, r, c) in a.comul_basis(i) {
                    let t = self.actions[*l].kron(&other.actions[*r]).expect("same field");
                    acc.add_scaled_assign(c, &t);
                }
                acc
            })
            .collect();
        Ok(Module::new_unchecked(
            a.clone(),
            d,
            actions,
            &format!("({})*({})", self.label, other.label),
        ))
    }

    /// The left dual `M*`, with `a` acting by `ρ(S(a))ᵀ`.
    pub fn dual(&self) -> Module {
        let a = &self.algebra;
        let k = a.field();
        let actions = (0..a.dim())
            .map(|i| combine(k, self.dim, &self.actions, a.antipode_basis(i)).transpose())
            .collect();
        Module::new_unchecked(a.clone(), self.dim, actions, &format!("({})^*", self.label))
    }

    /// Restriction along an algebra map `sub → A` given by the matrix whose
    /// column `j` is the image of the `j`-th basis element of `sub`.
    pub fn restrict(&self, sub: &Arc<HopfAlgebra>, embedding: &Matrix) -> Result<Module, ModuleError> {
        let a = &self.algebra;
        if embedding.rows() != a.dim() || embedding.cols() != sub.dim() {
            return Err(ModuleError::Shape(format!(
                "embedding must be {}x{}",
                a.dim(),
                sub.dim()
            )));
        }
        let actions = (0..sub.dim()).map(|j| self.act(&embedding.column(j))).collect();
        Module::new(sub.clone(), actions, &format!("res({})", self.label))
    }

    /// The conjugate `ᵍM` with `x` acting by `ρ(g⁻¹·x)`.
    pub fn conjugate(&self, action: &GroupAction, g: usize) -> Result<Module, ModuleError> {
        let a = &self.algebra;
        let k = a.field();
        if action.map(0).rows() != a.dim() {
            return Err(ModuleError::NoActionData(a.name().into()));
        }
        let gi = action.group().inv(g);
        let actions = (0..a.dim())
            .map(|i| combine(k, self.dim, &self.actions, &action.apply_basis(gi, i)))
            .collect();
        let name = action.group().ident_label(g);
        Ok(Module::new_unchecked(
            a.clone(),
            self.dim,
            actions,
            &format!("{name}({})", self.label),
        ))
    }

    /// The component `M_g = (1 ⊗ p_g)·M` of a module over a smash coproduct,
    /// as a module over the base algebra.
    pub fn component(&self, g: usize) -> Result<Module, ModuleError> {
        let (base, action) = smash_data(&self.algebra)?;
        let ng = action.group().order();
        let k = self.algebra.field();
        let mut proj = Matrix::zeros(k, self.dim, self.dim);
        for (u, c) in &base.parts().unit {
            proj.add_scaled_assign(c, &self.actions[u * ng + g]);
        }
        let cb = proj.column_basis();
        let actions = (0..base.dim())
            .map(|b| cb.coordinates(&self.actions[b * ng + g].mul(&cb.basis)))
            .collect();
        let name = action.group().ident_label(g);
        Ok(Module::new_unchecked(
            base.clone(),
            cb.dim(),
            actions,
            &format!("{}_{name}", self.label),
        ))
    }

    /// All components, indexed by group element.
    pub fn components(&self) -> Result<Vec<Module>, ModuleError> {
        let (_, action) = smash_data(&self.algebra)?;
        (0..action.group().order()).map(|g| self.component(g)).collect()
    }

    /// Conjugate of a base-algebra module by an element of the acting group of `smash`.
    pub fn smash_conjugate(&self, smash: &HopfAlgebra, g: usize) -> Result<Module, ModuleError> {
        let (base, action) = smash_data(smash)?;
        if !same_algebra(base, &self.algebra) {
            return Err(ModuleError::AlgebraMismatch(
                base.name().into(),
                self.algebra.name().into(),
            ));
        }
        self.conjugate(action, g)
    }

    /// The `B ♮ k^G`-module `U ⊗ k p_g` supported at `g`, for a `B`-module `U`.
    pub fn place_at(&self, smash: &Arc<HopfAlgebra>, g: usize) -> Result<Module, ModuleError> {
        let (base, action) = smash_data(smash)?;
        if !same_algebra(base, &self.algebra) {
            return Err(ModuleError::AlgebraMismatch(
                base.name().into(),
                self.algebra.name().into(),
            ));
        }
        let ng = action.group().order();
        let k = smash.field();
        let zero = Matrix::zeros(k, self.dim, self.dim);
        let actions = (0..smash.dim())
            .map(|x| {
                if x % ng == g {
                    self.actions[x / ng].clone()
                } else {
                    zero.clone()
                }
            })
            .collect();
        let name = action.group().ident_label(g);
        Ok(Module::new_unchecked(
            smash.clone(),
            self.dim,
            actions,
            &format!("{}@{name}", self.label),
        ))
    }

    /// `⊕_g (U_g ⊗ k p_g)` from one base module per group element.
    pub fn from_components(smash: &Arc<HopfAlgebra>, comps: &[Module]) -> Result<Module, ModuleError> {
        let (_, action) = smash_data(smash)?;
        if comps.len() != action.group().order() {
            return Err(ModuleError::Shape(format!(
                "{} components for a group of order {}",
                comps.len(),
                action.group().order()
            )));
        }
        let mut acc = Module::zero(smash);
        for (g, u) in comps.iter().enumerate() {
            if u.dim > 0 {
                acc = if acc.dim == 0 {
                    u.place_at(smash, g)?
                } else {
                    acc.direct_sum(&u.place_at(smash, g)?)?
                };
            }
        }
        Ok(acc)
    }

    /// The `A ⊗ B`-module `U ⊠ V` for an `A`-module `U` and a `B`-module `V`.
    pub fn outer_tensor(&self, other: &Module, product: &Arc<HopfAlgebra>) -> Result<Module, ModuleError> {
        let AlgebraKind::Tensor(l, r) = product.kind() else {
            return Err(ModuleError::AlgebraMismatch(
                product.name().into(),
                "a tensor product".into(),
            ));
        };
        if !same_algebra(l, &self.algebra) || !same_algebra(r, &other.algebra) {
            return Err(ModuleError::AlgebraMismatch(
                product.name().into(),
                self.algebra.name().into(),
            ));
        }
        let db = r.dim();
        let actions = (0..product.dim())
            .into_par_iter()
            .map(|x| self.actions[x / db].kron(&other.actions[x % db]).expect("same field"))
            .collect();
        Ok(Module::new_unchecked(
            product.clone(),
            self.dim * other.dim,
            actions,
            &format!("({})#({})", self.label, other.label),
        ))
    }
}

pub(crate) fn smash_data(a: &HopfAlgebra) -> Result<(&Arc<HopfAlgebra>, &GroupAction), ModuleError> {
    match a.kind() {
        AlgebraKind::Smash { base, action } => Ok((base, action)),
        _ => Err(ModuleError::NotSmashCoproduct(a.name().into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::hopf::{group_algebra, smash_coproduct, AbelianGroup};

    fn klein() -> Arc<HopfAlgebra> {
        Arc::new(group_algebra(&AbelianGroup::new(&[2, 2], "g"), &Field::prime(2).unwrap()).unwrap())
    }

    fn u(a: &Arc<HopfAlgebra>) -> Module {
        Module::quotient_of_regular(a, &[a.parse_element("g2-1").unwrap()], "U").unwrap()
    }

    #[test]
    fn trivial_and_regular_validate() {
        let a = klein();
        assert!(validate_module(&Module::trivial(&a)).passed());
        assert!(validate_module(&Module::regular(&a)).passed());
        assert!(validate_module(&u(&a)).passed());
        assert_eq!(u(&a).dim(), 2);
    }

    #[test]
    fn corrupted_action_has_witness() {
        let a = klein();
        let m = u(&a);
        let mut acts = m.actions().to_vec();
        let g2 = a.labels().iter().position(|l| l == "g2").unwrap();
        acts[g2] = m.act_expr("g1-1").unwrap();
        let bad = Module::new_unchecked(a.clone(), 2, acts, "bad");
        let r = validate_module(&bad);
        assert!(!r.passed());
        assert_eq!(r.first_failure().unwrap().witness.as_deref(), Some("(g2, g2)"));
    }

    #[test]
    fn tensor_of_grouplike_is_kron() {
        let a = klein();
        let m = u(&a);
        let t = m.tensor(&m).unwrap();
        let g1 = a.labels().iter().position(|l| l == "g1").unwrap();
        assert_eq!(*t.action(g1), m.action(g1).kron(m.action(g1)).unwrap());
        assert!(validate_module(&t).passed());
    }

    #[test]
    fn unit_strand_deletion() {
        let a = klein();
        let m = u(&a);
        let k = Module::trivial(&a);
        let km = k.tensor(&m).unwrap();
        let mk = m.tensor(&k).unwrap();
        assert_eq!(km.actions(), m.actions());
        assert_eq!(mk.actions(), m.actions());
    }

    #[test]
    fn generator_images_reproduce_module() {
        let a = klein();
        let m = u(&a);
        let images: Vec<(String, Matrix)> = ["g1", "g2"]
            .iter()
            .map(|s| (s.to_string(), m.act_expr(s).unwrap()))
            .collect();
        let n = Module::from_generator_images(a.clone(), &images, "U'").unwrap();
        assert_eq!(n.actions(), m.actions());
    }

    #[test]
    fn smash_components() {
        let a = klein();
        let s = Arc::new(smash_coproduct(&a, GroupAction::swap_generators(&a).unwrap()).unwrap());
        let m = u(&a).place_at(&s, 1).unwrap();
        assert!(validate_module(&m).passed());
        assert_eq!(m.component(1).unwrap().actions(), u(&a).actions());
        assert_eq!(m.component(0).unwrap().dim(), 0);
        let reg = Module::regular(&s);
        for c in reg.components().unwrap() {
            assert_eq!(c.dim(), 4);
        }
        let k = Module::trivial(&s);
        assert_eq!(k.component(0).unwrap().dim(), 1);
        assert_eq!(k.component(1).unwrap().dim(), 0);
        let d = m.dual();
        assert!(validate_module(&d).passed());
        assert!(validate_module(&m.tensor(&m).unwrap()).passed());
    }

    #[test]
    fn conjugate_swaps_generators() {
        let a = klein();
        let act = GroupAction::swap_generators(&a).unwrap();
        let hu = u(&a).conjugate(&act, 1).unwrap();
        assert!(hu.act_expr("g1").unwrap().is_identity());
        assert!(!hu.act_expr("g2").unwrap().is_identity());
    }
}
