//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Multiplication, comultiplication and antipode are stored sparsely per
//! basis element. Tensor indices follow the Kronecker convention
//! `e_i ⊗ e_j ↦ i·dim + j` throughout.

mod action;
mod constructors;
mod group;
mod validate;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use thiserror::Error;

pub use action::GroupAction;
pub use constructors::{
    dual_group_algebra, group_algebra, quantum_elementary_abelian, smash_coproduct, tensor_algebra,
};
pub use group::AbelianGroup;
pub(crate) use validate::ideal_closure;
pub use validate::{validate_hopf, Axiom, AxiomCheck, ValidationReport};

use crate::expr::{self, ExprRing};
use crate::field::{Field, FieldError, Scalar};
use crate::linalg::{LinalgError, Matrix};

pub type SparseVec = Vec<(usize, Scalar)>;
pub type SparseTensor = Vec<(usize, usize, Scalar)>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("field {0} has no primitive {1}-th root of unity")]
    NoPrimitiveRoot(String, u32),
    #[error("not a Hopf automorphism: {0}")]
    NotAutomorphism(String),
    #[error("Hopf axioms fail: {0}")]
    ValidationFailed(String),
    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),
    #[error("cannot parse element: {0}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone)]
pub struct Idempotent {
    pub vector: Vec<Scalar>,
    pub label: String,
}

/// How an algebra was built; drives rank varieties, conjugation and components.
#[derive(Debug, Clone)]
pub enum AlgebraKind {
    Group(AbelianGroup),
    DualGroup(AbelianGroup),
    QuantumElementary {
        m: usize,
        n: u32,
        q: Scalar,
    },
    Tensor(Arc<HopfAlgebra>, Arc<HopfAlgebra>),
    Smash {
        base: Arc<HopfAlgebra>,
        action: GroupAction,
    },
    Custom,
}

/// Raw data of a Hopf algebra. No axiom is checked when building from parts.
#[derive(Debug, Clone)]
pub struct HopfParts {
    pub name: String,
    pub field: Field,
    pub labels: Vec<String>,
    /// `mult[i * dim + j]` is `e_i e_j`.
    pub mult: Vec<SparseVec>,
    pub unit: SparseVec,
    pub comul: Vec<SparseTensor>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<SparseVec>,
    /// Columns span the Jacobson radical.
    pub radical: Matrix,
    /// Primitive orthogonal idempotents lifting the one-dimensional simples;
    /// empty when the semisimple quotient is not split basic.
    pub idempotents: Vec<Idempotent>,
    /// Named algebra generators, usable in element expressions.
    pub symbols: Vec<(String, Vec<Scalar>)>,
    /// Generators of the radical as a two-sided ideal.
    pub radical_generators: Vec<Vec<Scalar>>,
    pub kind: AlgebraKind,
}

/// Data of the indecomposable projective `A e` for one idempotent `e`.
#[derive(Debug, Clone)]
pub struct Pim {
    /// Columns (in algebra coordinates) form a reduced basis of `A e`.
    pub basis: crate::linalg::ColumnBasis,
    /// Left multiplication by each algebra basis element, in that basis.
    pub actions: Vec<Matrix>,
}

pub struct HopfAlgebra {
    parts: HopfParts,
    pims: OnceLock<Vec<Pim>>,
}

impl fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "HopfAlgebra({}, dim {} over {})",
            self.parts.name,
            self.dim(),
            self.parts.field.name()
        )
    }
}

impl Clone for HopfAlgebra {
    fn clone(&self) -> Self {
        HopfAlgebra::from_parts(self.parts.clone())
    }
}

fn add_into(field: &Field, acc: &mut BTreeMap<usize, Scalar>, idx: usize, c: &Scalar) {
    if field.is_zero(c) {
        return;
    }
    let e = acc.entry(idx).or_insert_with(|| field.zero());
    *e = field.add(e, c);
}

pub(crate) fn prune<K: Ord + Clone>(field: &Field, m: BTreeMap<K, Scalar>) -> BTreeMap<K, Scalar> {
    m.into_iter().filter(|(_, v)| !field.is_zero(v)).collect()
}

impl HopfAlgebra {
    pub fn from_parts(parts: HopfParts) -> HopfAlgebra {
        HopfAlgebra {
            parts,
            pims: OnceLock::new(),
        }
    }

    pub fn parts(&self) -> &HopfParts {
        &self.parts
    }

    pub fn into_parts(self) -> HopfParts {
        self.parts
    }

    pub fn name(&self) -> &str {
        &self.parts.name
    }

    pub fn dim(&self) -> usize {
        self.parts.labels.len()
    }

    pub fn field(&self) -> &Field {
        &self.parts.field
    }

    pub fn labels(&self) -> &[String] {
        &self.parts.labels
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.parts.kind
    }

    pub fn radical_basis(&self) -> &Matrix {
        &self.parts.radical
    }

    pub fn idempotents(&self) -> &[Idempotent] {
        &self.parts.idempotents
    }

    pub fn symbols(&self) -> &[(String, Vec<Scalar>)] {
        &self.parts.symbols
    }

    pub fn symbol(&self, name: &str) -> Option<&[Scalar]> {
        self.parts
            .symbols
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_slice())
    }

    /// Algebra generators: the named symbols, or the whole basis when there are none.
    pub fn generators(&self) -> Vec<(String, Vec<Scalar>)> {
        if self.parts.symbols.is_empty() {
            (0..self.dim())
                .map(|i| (self.parts.labels[i].clone(), self.basis_element(i)))
                .collect()
        } else {
            self.parts.symbols.clone()
        }
    }

    pub fn radical_generators(&self) -> &[Vec<Scalar>] {
        &self.parts.radical_generators
    }

    /// Whether the radical quotient is a product of copies of the field, with
    /// lifted primitive idempotents available.
    pub fn is_split_basic(&self) -> bool {
        !self.parts.idempotents.is_empty()
    }

    pub fn basis_element(&self, i: usize) -> Vec<Scalar> {
        let k = self.field();
        let mut v = vec![k.zero(); self.dim()];
        v[i] = k.one();
        v
    }

    pub fn zero_element(&self) -> Vec<Scalar> {
        vec![self.field().zero(); self.dim()]
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.densify(&self.parts.unit)
    }

    pub fn densify(&self, s: &[(usize, Scalar)]) -> Vec<Scalar> {
        let k = self.field();
        let mut v = self.zero_element();
        for (i, c) in s {
            v[*i] = k.add(&v[*i], c);
        }
        v
    }

    pub fn sparsify(&self, v: &[Scalar]) -> SparseVec {
        let k = self.field();
        v.iter()
            .enumerate()
            .filter(|(_, c)| !k.is_zero(c))
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }

    #[inline]
    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.parts.mult[i * self.dim() + j]
    }

    pub fn comul_basis(&self, i: usize) -> &SparseTensor {
        &self.parts.comul[i]
    }

    pub fn counit_basis(&self, i: usize) -> &Scalar {
        &self.parts.counit[i]
    }

    pub fn antipode_basis(&self, i: usize) -> &SparseVec {
        &self.parts.antipode[i]
    }

    pub(crate) fn mul_sparse(&self, a: &[(usize, Scalar)], b: &[(usize, Scalar)]) -> BTreeMap<usize, Scalar> {
        let k = self.field();
        let mut acc = BTreeMap::new();
        for (i, x) in a {
            for (j, y) in b {
                let xy = k.mul(x, y);
                if k.is_zero(&xy) {
                    continue;
                }
                for (l, c) in self.mul_basis(*i, *j) {
                    add_into(k, &mut acc, *l, &k.mul(&xy, c));
                }
            }
        }
        prune(k, acc)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let r = self.mul_sparse(&self.sparsify(a), &self.sparsify(b));
        self.densify(&r.into_iter().collect::<Vec<_>>())
    }

    pub fn add(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let k = self.field();
        a.iter().zip(b).map(|(x, y)| k.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let k = self.field();
        a.iter().zip(b).map(|(x, y)| k.sub(x, y)).collect()
    }

    pub fn scale(&self, c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
        let k = self.field();
        a.iter().map(|x| k.mul(c, x)).collect()
    }

    pub fn pow(&self, a: &[Scalar], k: u32) -> Vec<Scalar> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// `Δ(a)` as a map `(i, j) ↦ coefficient of e_i ⊗ e_j`.
    pub fn comul(&self, a: &[Scalar]) -> BTreeMap<(usize, usize), Scalar> {
        let k = self.field();
        let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (i, x) in a.iter().enumerate() {
            if k.is_zero(x) {
                continue;
            }
            for (l, r, c) in self.comul_basis(i) {
                let e = acc.entry((*l, *r)).or_insert_with(|| k.zero());
                *e = k.add(e, &k.mul(x, c));
            }
        }
        prune(k, acc)
    }

    pub fn counit(&self, a: &[Scalar]) -> Scalar {
        let k = self.field();
        a.iter()
            .zip(&self.parts.counit)
            .fold(k.zero(), |acc, (x, e)| k.add(&acc, &k.mul(x, e)))
    }

    pub fn antipode(&self, a: &[Scalar]) -> Vec<Scalar> {
        let k = self.field();
        let mut out = self.zero_element();
        for (i, x) in a.iter().enumerate() {
            if k.is_zero(x) {
                continue;
            }
            for (j, c) in self.antipode_basis(i) {
                out[*j] = k.add(&out[*j], &k.mul(x, c));
            }
        }
        out
    }

    /// Δ as a `dim² × dim` matrix in the Kronecker basis.
    pub fn comul_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field(), n * n, n);
        for i in 0..n {
            for (l, r, c) in self.comul_basis(i) {
                m.set(l * n + r, i, c.clone());
            }
        }
        m
    }

    pub fn antipode_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field(), n, n);
        for i in 0..n {
            for (j, c) in self.antipode_basis(i) {
                m.set(*j, i, c.clone());
            }
        }
        m
    }

    pub fn counit_row(&self) -> Matrix {
        Matrix::from_vec(self.field(), 1, self.dim(), self.parts.counit.clone()).expect("length dim")
    }

    /// Matrix of `x ↦ a x` on the algebra.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let k = self.field();
        let mut m = Matrix::zeros(k, n, n);
        let sa = self.sparsify(a);
        for j in 0..n {
            for (i, x) in &sa {
                for (l, c) in self.mul_basis(*i, j) {
                    let cur = m.get(*l, j).clone();
                    m.set(*l, j, k.add(&cur, &k.mul(x, c)));
                }
            }
        }
        m
    }

    /// Matrix of `x ↦ x a` on the algebra.
    pub fn right_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let k = self.field();
        let mut m = Matrix::zeros(k, n, n);
        let sa = self.sparsify(a);
        for j in 0..n {
            for (i, x) in &sa {
                for (l, c) in self.mul_basis(j, *i) {
                    let cur = m.get(*l, j).clone();
                    m.set(*l, j, k.add(&cur, &k.mul(x, c)));
                }
            }
        }
        m
    }

    pub fn antipode_squared_is_identity(&self) -> bool {
        let s = self.antipode_matrix();
        s.mul(&s).is_identity()
    }

    /// Parses an element expression over the algebra's symbols, e.g. `g2-1`
    /// or `z*x1 + p_h`. Integers and the field generator act as scalars.
    pub fn parse_element(&self, s: &str) -> Result<Vec<Scalar>, HopfError> {
        let e = expr::parse(s).map_err(|e| HopfError::Parse(e.to_string()))?;
        expr::eval(&ElementRing(self), &e).map_err(HopfError::Parse)
    }

    pub fn format_element(&self, v: &[Scalar]) -> String {
        let k = self.field();
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !k.is_zero(c))
            .map(|(i, c)| {
                let cs = k.format(c);
                let label = &self.parts.labels[i];
                match (cs.as_str(), label.as_str()) {
                    (_, "1") => cs,
                    ("1", _) => label.clone(),
                    _ => format!("({cs})*{label}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Indecomposable projectives `A e_χ`, one per idempotent (cached).
    pub fn projective_indecomposables(&self) -> &[Pim] {
        self.pims.get_or_init(|| {
            self.parts
                .idempotents
                .iter()
                .map(|idem| {
                    let span = self.right_mult_matrix(&idem.vector);
                    let basis = span.column_basis();
                    let cols: Vec<SparseVec> = (0..basis.dim())
                        .map(|c| self.sparsify(&basis.basis.column(c)))
                        .collect();
                    let k = self.field();
                    let actions = (0..self.dim())
                        .into_par_iter()
                        .map(|a| {
                            let mut act = Matrix::zeros(k, self.dim(), cols.len());
                            for (c, col) in cols.iter().enumerate() {
                                for (l, v) in self.mul_sparse(&[(a, k.one())], col) {
                                    act.set(l, c, v);
                                }
                            }
                            basis.coordinates(&act)
                        })
                        .collect();
                    Pim { basis, actions }
                })
                .collect()
        })
    }
}

struct ElementRing<'a>(&'a HopfAlgebra);

impl ExprRing for ElementRing<'_> {
    type Value = Vec<Scalar>;

    fn int(&self, n: &num_bigint::BigInt) -> Result<Vec<Scalar>, String> {
        let c = crate::field::ScalarRing(self.0.field()).int(n)?;
        Ok(self.0.scale(&c, &self.0.one()))
    }

    fn var(&self, name: &str) -> Result<Vec<Scalar>, String> {
        if let Some(v) = self.0.symbol(name) {
            return Ok(v.to_vec());
        }
        if let Some(i) = self.0.labels().iter().position(|l| l == name) {
            return Ok(self.0.basis_element(i));
        }
        let c = crate::field::ScalarRing(self.0.field())
            .var(name)
            .map_err(|_| format!("unknown symbol {name:?} in {}", self.0.name()))?;
        Ok(self.0.scale(&c, &self.0.one()))
    }

    fn add(&self, a: &Vec<Scalar>, b: &Vec<Scalar>) -> Vec<Scalar> {
        self.0.add(a, b)
    }

    fn sub(&self, a: &Vec<Scalar>, b: &Vec<Scalar>) -> Vec<Scalar> {
        self.0.sub(a, b)
    }

    fn mul(&self, a: &Vec<Scalar>, b: &Vec<Scalar>) -> Vec<Scalar> {
        self.0.mul(a, b)
    }

    fn neg(&self, a: &Vec<Scalar>) -> Vec<Scalar> {
        let k = self.0.field();
        a.iter().map(|x| k.neg(x)).collect()
    }

    fn div(&self, a: &Vec<Scalar>, b: &Vec<Scalar>) -> Result<Vec<Scalar>, String> {
        // only division by scalars
        let one = self.0.one();
        let k = self.0.field();
        let pos = one.iter().position(|c| !k.is_zero(c)).ok_or("algebra has no unit")?;
        let c = k.div(&b[pos], &one[pos]).map_err(|e| e.to_string())?;
        if self.0.scale(&c, &one) != *b {
            return Err("division by a non-scalar element".into());
        }
        let inv = k.inv(&c).map_err(|e| e.to_string())?;
        Ok(self.0.scale(&inv, a))
    }

    fn one(&self) -> Vec<Scalar> {
        self.0.one()
    }
}
