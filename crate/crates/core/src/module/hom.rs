use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{check_same, Module, ModuleError, ModuleMap};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::variety::{format_partition, shifted_operators, standard_probes, DEFAULT_SEED};

/// Hom spaces are solved densely; this bounds `dim M · dim N`.
pub const MAX_HOM_UNKNOWNS: usize = 1600;

/// Random combinations of a Hom basis tried per field before giving up.
pub const ISO_TRIES: usize = 64;

/// Intertwiner conditions `ρ_N(s) F = F ρ_M(s)` for the algebra generators,
/// restricted successively to the solutions of the previous ones.
fn hom_basis(m: &Module, n: &Module) -> Result<Vec<Matrix>, ModuleError> {
    check_same(m, n)?;
    let (dm, dn) = (m.dim(), n.dim());
    let u = dm * dn;
    if u > MAX_HOM_UNKNOWNS {
        return Err(ModuleError::TooLarge(format!(
            "Hom space with {dn}x{dm} unknowns exceeds the dense limit {MAX_HOM_UNKNOWNS}"
        )));
    }
    let a = m.algebra();
    let k = a.field();
    if u == 0 {
        return Ok(Vec::new());
    }
    // current solution space: columns of `sol` are vec_r(F) with F dn×dm
    let mut sol = Matrix::identity(k, u);
    for (_, g) in a.generators() {
        let (sm, sn) = (m.act(&g), n.act(&g));
        let cols: Vec<Vec<_>> = (0..sol.cols())
            .map(|c| {
                let f = Matrix::from_vec(k, dn, dm, sol.column(c)).expect("shape");
                sn.mul(&f).sub(&f.mul(&sm)).data().to_vec()
            })
            .collect();
        let eqs = Matrix::from_fn(k, u, cols.len(), |i, j| cols[j][i].clone());
        let ker = eqs.kernel_basis();
        sol = sol.mul(&ker);
        if sol.cols() == 0 {
            break;
        }
    }
    Ok((0..sol.cols())
        .map(|c| Matrix::from_vec(k, dn, dm, sol.column(c)).expect("shape"))
        .collect())
}

/// A basis of `Hom_A(M, N)`.
pub fn hom_space(m: &Module, n: &Module) -> Result<Vec<ModuleMap>, ModuleError> {
    Ok(hom_basis(m, n)?
        .into_iter()
        .map(|matrix| ModuleMap {
            source: m.clone(),
            target: n.clone(),
            matrix,
        })
        .collect())
}

/// An invertible intertwiner; over a finite prime field the search may
/// succeed only over an extension, which still proves isomorphism over the
/// base field.
#[derive(Debug, Clone)]
pub struct IsoWitness {
    pub matrix: Matrix,
    pub over_extension: bool,
}

#[derive(Debug, Clone)]
pub enum IsoResult {
    Isomorphic(IsoWitness),
    NotIsomorphic(String),
    Inconclusive(String),
}

impl IsoResult {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoResult::Isomorphic(_))
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            IsoResult::Isomorphic(_) => "isomorphic",
            IsoResult::NotIsomorphic(_) => "not isomorphic",
            IsoResult::Inconclusive(_) => "inconclusive",
        }
    }

    pub fn detail(&self) -> String {
        match self {
            IsoResult::Isomorphic(w) if w.over_extension => "intertwiner found over an extension field".into(),
            IsoResult::Isomorphic(_) => "invertible intertwiner found".into(),
            IsoResult::NotIsomorphic(s) | IsoResult::Inconclusive(s) => s.clone(),
        }
    }
}

fn intertwines(m: &Module, n: &Module, f: &Matrix) -> bool {
    let k = f.field();
    (0..m.algebra().dim()).all(|a| {
        let (sm, sn) = match (m.action(a).lift(k), n.action(a).lift(k)) {
            (Ok(x), Ok(y)) => (x, y),
            _ => return false,
        };
        f.mul(&sm) == sn.mul(f)
    })
}

/// Rank profile `rank ρ(x)^j` for the algebra generators, radical
/// generators and idempotents.
fn rank_invariant(m: &Module, n: &Module) -> Option<String> {
    let a = m.algebra();
    let mut probes: Vec<(String, Vec<_>)> = a.generators();
    for (i, r) in a.radical_generators().iter().enumerate() {
        probes.push((format!("radical generator {}", i + 1), r.clone()));
    }
    for e in a.idempotents() {
        probes.push((format!("idempotent {}", e.label), e.vector.clone()));
    }
    let d = m.dim();
    for (name, v) in probes {
        let (x, y) = (m.act(&v), n.act(&v));
        let (mut px, mut py) = (x.clone(), y.clone());
        for j in 1..=d.max(1) {
            let (rx, ry) = (px.rank(), py.rank());
            if rx != ry {
                return Some(format!("rank of ({name})^{j}: {rx} vs {ry}"));
            }
            if rx == 0 {
                break;
            }
            px = px.mul(&x);
            py = py.mul(&y);
        }
    }
    None
}

fn jordan_invariant(m: &Module, n: &Module) -> Option<String> {
    let (om, on) = (shifted_operators(m).ok()?, shifted_operators(n).ok()?);
    let probes = standard_probes(&om.field, om.nvars(), DEFAULT_SEED).ok()?;
    for pt in probes {
        let (jm, jn) = (om.jordan_type(&pt).ok()?, on.jordan_type(&pt).ok()?);
        if jm != jn {
            return Some(format!(
                "Jordan type at λ={pt}: {} vs {}",
                format_partition(&jm),
                format_partition(&jn)
            ));
        }
    }
    None
}

fn random_search(m: &Module, n: &Module, basis: &[Matrix], field: &Field, seed: u64) -> Option<Matrix> {
    let lifted: Vec<Matrix> = basis.iter().map(|b| b.lift(field)).collect::<Result<_, _>>().ok()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = m.dim();
    for _ in 0..ISO_TRIES {
        let mut f = Matrix::zeros(field, d, d);
        for b in &lifted {
            f.add_scaled_assign(&field.random(&mut rng), b);
        }
        if f.rank() == d && intertwines(m, n, &f) {
            return Some(f);
        }
    }
    None
}

/// Decides whether `M ≅ N`. Non-isomorphism is certified by an invariant
/// (dimension, Jordan type at a probe, rank profile, or Hom dimension);
/// isomorphism by an invertible intertwiner found by seeded random search.
pub fn iso_test(m: &Module, n: &Module) -> Result<IsoResult, ModuleError> {
    iso_test_seeded(m, n, DEFAULT_SEED)
}

pub fn iso_test_seeded(m: &Module, n: &Module, seed: u64) -> Result<IsoResult, ModuleError> {
    check_same(m, n)?;
    if m.dim() != n.dim() {
        return Ok(IsoResult::NotIsomorphic(format!(
            "dimension {} vs {}",
            m.dim(),
            n.dim()
        )));
    }
    let k = m.algebra().field().clone();
    if m.dim() == 0 {
        return Ok(IsoResult::Isomorphic(IsoWitness {
            matrix: Matrix::zeros(&k, 0, 0),
            over_extension: false,
        }));
    }
    if m.actions() == n.actions() {
        return Ok(IsoResult::Isomorphic(IsoWitness {
            matrix: Matrix::identity(&k, m.dim()),
            over_extension: false,
        }));
    }
    if let Some(c) = jordan_invariant(m, n) {
        return Ok(IsoResult::NotIsomorphic(c));
    }
    if let Some(c) = rank_invariant(m, n) {
        return Ok(IsoResult::NotIsomorphic(c));
    }
    let basis = hom_basis(m, n)?;
    let end = hom_basis(m, m)?;
    if basis.len() != end.len() {
        return Ok(IsoResult::NotIsomorphic(format!(
            "dim Hom(M,N) = {} but dim End(M) = {}",
            basis.len(),
            end.len()
        )));
    }
    let back = hom_basis(n, m)?;
    if back.len() != end.len() {
        return Ok(IsoResult::NotIsomorphic(format!(
            "dim Hom(N,M) = {} but dim End(M) = {}",
            back.len(),
            end.len()
        )));
    }
    if let Some(f) = random_search(m, n, &basis, &k, seed) {
        return Ok(IsoResult::Isomorphic(IsoWitness {
            matrix: f,
            over_extension: false,
        }));
    }
    if k.is_prime_field() && k.characteristic() > 0 {
        let ext = Field::gf(k.characteristic(), 4)?;
        if let Some(f) = random_search(m, n, &basis, &ext, seed) {
            return Ok(IsoResult::Isomorphic(IsoWitness {
                matrix: f,
                over_extension: true,
            }));
        }
    }
    Ok(IsoResult::Inconclusive(format!(
        "invariants agree; no invertible intertwiner among {ISO_TRIES} random combinations"
    )))
}

/// Coevaluation, evaluation and the zig-zag composite for a module.
#[derive(Debug, Clone, Serialize)]
pub struct RigidityReport {
    pub module: String,
    pub dim: usize,
    /// `coev: k → M ⊗ M*` and `ev: M* ⊗ M → k` intertwine the actions.
    pub coev_is_module_map: bool,
    pub ev_is_module_map: bool,
    /// `(id_M ⊗ ev) ∘ (coev ⊗ id_M) = id_M`.
    pub composite_is_identity: bool,
    #[serde(skip)]
    pub coev: Matrix,
    #[serde(skip)]
    pub ev: Matrix,
    #[serde(skip)]
    pub composite: Matrix,
}

/// Builds `coev = Σ e_i ⊗ e_i*` and `ev(f ⊗ m) = f(m)`, and checks the
/// rigidity identity exactly.
pub fn rigidity_split(m: &Module) -> RigidityReport {
    let a = m.algebra();
    let k = a.field();
    let d = m.dim();
    let mut coev = Matrix::zeros(k, d * d, 1);
    let mut ev = Matrix::zeros(k, 1, d * d);
    for i in 0..d {
        coev.set(i * d + i, 0, k.one());
        ev.set(0, i * d + i, k.one());
    }
    // With the Kronecker convention (A ⊗ B)·vec(X) = vec(A X Bᵀ) and ρ*(b) = ρ(S b)ᵀ:
    // ρ_{M⊗M*}(a)·coev = vec(Σ ρ(a_1) ρ(S a_2)) and ev·ρ_{M*⊗M}(a) = vec(Σ ρ(S a_1) ρ(a_2))ᵀ.
    let ident = Matrix::identity(k, d);
    let mut coev_ok = true;
    let mut ev_ok = true;
    for i in 0..a.dim() {
        let mut left = Matrix::zeros(k, d, d);
        let mut right = Matrix::zeros(k, d, d);
        for (l, r, c) in a.comul_basis(i) {
            let s_r = m.act(&a.antipode(&a.basis_element(*r)));
            let s_l = m.act(&a.antipode(&a.basis_element(*l)));
            left.add_scaled_assign(c, &m.action(*l).mul(&s_r));
            right.add_scaled_assign(c, &s_l.mul(m.action(*r)));
        }
        let expect = ident.scale(a.counit_basis(i));
        coev_ok &= left == expect;
        ev_ok &= right == expect;
    }
    // (id ⊗ ev)(coev ⊗ id): e_c ↦ Σ_i e_i ⊗ e_i* ⊗ e_c ↦ Σ_i e_i · δ_{ic}
    let mut composite = Matrix::zeros(k, d, d);
    for c in 0..d {
        for i in 0..d {
            // coefficient of e_i ⊗ e_i* in coev, times ev(e_i* ⊗ e_c)
            let x = k.mul(coev.get(i * d + i, 0), ev.get(0, i * d + c));
            if !k.is_zero(&x) {
                let cur = composite.get(i, c).clone();
                composite.set(i, c, k.add(&cur, &x));
            }
        }
    }
    RigidityReport {
        module: m.label().to_string(),
        dim: d,
        coev_is_module_map: coev_ok,
        ev_is_module_map: ev_ok,
        composite_is_identity: composite.is_identity(),
        coev,
        ev,
        composite,
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::hopf::{group_algebra, smash_coproduct, AbelianGroup, GroupAction, HopfAlgebra};

    fn klein() -> Arc<HopfAlgebra> {
        Arc::new(group_algebra(&AbelianGroup::new(&[2, 2], "g"), &Field::prime(2).unwrap()).unwrap())
    }

    fn u(a: &Arc<HopfAlgebra>) -> Module {
        Module::quotient_of_regular(a, &[a.parse_element("g2-1").unwrap()], "U").unwrap()
    }

    #[test]
    fn hom_dimensions() {
        let a = klein();
        let k = Module::trivial(&a);
        assert_eq!(hom_space(&k, &k).unwrap().len(), 1);
        let m = u(&a);
        let h = hom_space(&m, &m).unwrap();
        assert_eq!(h.len(), 2);
        assert!(h.iter().all(|f| f.is_module_map()));
        let (md, ud) = (m.dual(), m.clone());
        assert_eq!(hom_space(&ud, &m).unwrap().len(), hom_space(&md, &md).unwrap().len());
    }

    #[test]
    fn iso_examples() {
        let a = klein();
        let m = u(&a);
        assert!(iso_test(&m, &m).unwrap().is_isomorphic());
        let r = iso_test(&m, &m.dual()).unwrap();
        let IsoResult::Isomorphic(w) = r else {
            panic!("U* should be isomorphic to U")
        };
        assert!(intertwines(&m, &m.dual(), &w.matrix));
        let act = GroupAction::swap_generators(&a).unwrap();
        let hu = m.conjugate(&act, 1).unwrap();
        match iso_test(&m, &hu).unwrap() {
            IsoResult::NotIsomorphic(c) => assert_eq!(c, "Jordan type at λ=(0,1): [1,1] vs [2]"),
            other => panic!("unexpected {other:?}"),
        }
        let other = Module::quotient_of_regular(&a, &[a.parse_element("g1-1").unwrap()], "U1").unwrap();
        assert!(iso_test(&hu, &other).unwrap().is_isomorphic());
    }

    #[test]
    fn rigidity_holds() {
        let a = klein();
        let s = Arc::new(smash_coproduct(&a, GroupAction::swap_generators(&a).unwrap()).unwrap());
        let m = u(&a).place_at(&s, 1).unwrap();
        for module in [u(&a), Module::regular(&a), m.clone(), Module::regular(&s)] {
            let r = rigidity_split(&module);
            assert!(r.coev_is_module_map && r.ev_is_module_map && r.composite_is_identity);
        }
    }
}
