//! Rank varieties of modules over elementary abelian `p`-groups and the
//! one-parameter analogue for the quantum algebra `A(n)`.

mod poly;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub use poly::{poly_determinant, univariate_gcd, Monomial, MultiPoly};

use crate::field::{Field, FieldError, Scalar};
use crate::hopf::AlgebraKind;
use crate::linalg::Matrix;
use crate::module::{smash_data, Module, ModuleError};

/// Default seed for randomized probes.
pub const DEFAULT_SEED: u64 = 0xC0FFEE;

/// Symbolic minors are enumerated only when `dim M / p ≤ 6`, there are at
/// most 4 variables, and the number of minors stays below this.
pub const MAX_MINORS: u64 = 40_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VarietyError {
    #[error("the probe point is zero")]
    ZeroPoint,
    #[error("rank varieties are not available for {0}")]
    UnsupportedAlgebra(String),
    #[error("smash coproduct base {0} is not an elementary abelian group algebra")]
    UnsupportedBase(String),
    #[error("point counting needs a finite field")]
    CyclotomicEnumerationUnsupported,
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Coefficients `λ_1..λ_n` of the shifted generator `Σ λ_i x_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftedSubgroupPoint {
    pub field: Field,
    pub coords: Vec<Scalar>,
}

impl ShiftedSubgroupPoint {
    pub fn new(field: &Field, coords: Vec<Scalar>) -> ShiftedSubgroupPoint {
        ShiftedSubgroupPoint {
            field: field.clone(),
            coords,
        }
    }

    pub fn from_ints(field: &Field, coords: &[i64]) -> ShiftedSubgroupPoint {
        ShiftedSubgroupPoint::new(field, coords.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| self.field.is_zero(c))
    }

    pub fn scaled(&self, c: &Scalar) -> ShiftedSubgroupPoint {
        ShiftedSubgroupPoint::new(&self.field, self.coords.iter().map(|x| self.field.mul(c, x)).collect())
    }
}

impl fmt::Display for ShiftedSubgroupPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| self.field.format(c)).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The operators `ρ(x_i)` whose combinations are probed, and their
/// nilpotency degree (`p` for `kE`, `n` for `A(n)`).
#[derive(Debug, Clone)]
pub struct ShiftedOperators {
    pub field: Field,
    pub ops: Vec<Matrix>,
    pub degree: usize,
}

pub fn shifted_operators(m: &Module) -> Result<ShiftedOperators, VarietyError> {
    let a = m.algebra();
    let k = a.field();
    match a.kind() {
        AlgebraKind::Group(e) if k.characteristic() > 0 && e.is_elementary_abelian(k.characteristic()) => {
            let ops = e
                .names()
                .iter()
                .map(|g| m.act_expr(&format!("{g}-1")))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(ShiftedOperators {
                field: k.clone(),
                ops,
                degree: k.characteristic() as usize,
            })
        }
        AlgebraKind::QuantumElementary { m: 1, n, .. } => Ok(ShiftedOperators {
            field: k.clone(),
            ops: vec![m.act_expr("x")?],
            degree: *n as usize,
        }),
        _ => Err(VarietyError::UnsupportedAlgebra(a.name().into())),
    }
}

impl ShiftedOperators {
    pub fn nvars(&self) -> usize {
        self.ops.len()
    }

    /// `X(λ) = Σ λ_i ρ(x_i)` over the field of `λ`.
    pub fn operator_at(&self, lambda: &ShiftedSubgroupPoint) -> Result<Matrix, VarietyError> {
        if lambda.coords.len() != self.ops.len() {
            return Err(VarietyError::UnsupportedAlgebra(format!(
                "point has {} coordinates, expected {}",
                lambda.coords.len(),
                self.ops.len()
            )));
        }
        if lambda.is_zero() {
            return Err(VarietyError::ZeroPoint);
        }
        let k = &lambda.field;
        let d = self.ops.first().map(|m| m.rows()).unwrap_or(0);
        let mut x = Matrix::zeros(k, d, d);
        for (c, op) in lambda.coords.iter().zip(&self.ops) {
            if !k.is_zero(c) {
                let lifted = op
                    .lift(k)
                    .map_err(|_| FieldError::FieldMismatch(self.field.name(), k.name()))?;
                x.add_scaled_assign(c, &lifted);
            }
        }
        Ok(x)
    }

    /// Ranks of `X^j` for `j = 0..=degree`.
    pub fn rank_chain(&self, lambda: &ShiftedSubgroupPoint) -> Result<Vec<usize>, VarietyError> {
        let x = self.operator_at(lambda)?;
        let mut ranks = vec![x.rows()];
        let mut pow = x.clone();
        for _ in 0..self.degree {
            let r = pow.rank();
            ranks.push(r);
            if r == 0 {
                break;
            }
            pow = pow.mul(&x);
        }
        while ranks.len() < self.degree + 1 {
            ranks.push(0);
        }
        Ok(ranks)
    }

    pub fn jordan_type(&self, lambda: &ShiftedSubgroupPoint) -> Result<Vec<usize>, VarietyError> {
        Ok(partition_from_ranks(&self.rank_chain(lambda)?))
    }

    pub fn is_free_at(&self, lambda: &ShiftedSubgroupPoint) -> Result<bool, VarietyError> {
        let x = self.operator_at(lambda)?;
        let d = x.rows();
        if d % self.degree != 0 {
            return Ok(false);
        }
        Ok(x.pow(self.degree as u32 - 1).rank() == d / self.degree)
    }
}

/// Block sizes (descending) of a nilpotent operator from `rank X^j`, `j = 0, 1, ...`.
pub fn partition_from_ranks(ranks: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let at_least = |j: usize| -> usize {
        // number of blocks of size ≥ j
        let a = ranks.get(j - 1).copied().unwrap_or(0);
        let b = ranks.get(j).copied().unwrap_or(0);
        a - b
    };
    for j in (1..ranks.len()).rev() {
        let exactly = at_least(j) - if j + 1 < ranks.len() { at_least(j + 1) } else { 0 };
        out.extend(std::iter::repeat_n(j, exactly));
    }
    out
}

pub fn format_partition(p: &[usize]) -> String {
    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

pub fn jordan_type(m: &Module, lambda: &ShiftedSubgroupPoint) -> Result<Vec<usize>, VarietyError> {
    shifted_operators(m)?.jordan_type(lambda)
}

pub fn is_free_at(m: &Module, lambda: &ShiftedSubgroupPoint) -> Result<bool, VarietyError> {
    shifted_operators(m)?.is_free_at(lambda)
}

/// The field over which probes of degree `e` are taken.
pub fn probe_field(base: &Field, e: u32) -> Result<Field, VarietyError> {
    if e == 1 {
        return Ok(base.clone());
    }
    if base.characteristic() == 0 {
        return Err(VarietyError::CyclotomicEnumerationUnsupported);
    }
    Ok(Field::gf(base.characteristic(), e)?)
}

/// All nonzero points of `F^n` for a finite field `F`.
pub fn all_points(field: &Field, n: usize) -> Result<Vec<ShiftedSubgroupPoint>, VarietyError> {
    let elems = field.elements().ok_or(VarietyError::CyclotomicEnumerationUnsupported)?;
    let q = elems.len();
    let total = q.pow(n as u32);
    Ok((1..total)
        .map(|mut idx| {
            let mut coords = vec![field.zero(); n];
            for slot in coords.iter_mut().rev() {
                *slot = elems[idx % q].clone();
                idx /= q;
            }
            ShiftedSubgroupPoint::new(field, coords)
        })
        .collect())
}

/// `count` random nonzero points over `field`, reproducible from `seed`.
pub fn random_points(field: &Field, n: usize, count: usize, seed: u64) -> Vec<ShiftedSubgroupPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = ShiftedSubgroupPoint::new(field, (0..n).map(|_| field.random(&mut rng)).collect());
        if !p.is_zero() {
            out.push(p);
        }
    }
    out
}

/// The fixed probe list: all nonzero points over the prime field when
/// `n ≤ 2`, plus 16 seeded points over the degree-4 extension.
pub fn standard_probes(field: &Field, n: usize, seed: u64) -> Result<Vec<ShiftedSubgroupPoint>, VarietyError> {
    if field.characteristic() == 0 {
        let mut pts = vec![ShiftedSubgroupPoint::new(field, vec![field.one(); n])];
        pts.extend(
            random_points(field, n, 4, seed)
                .into_iter()
                .take(if n == 1 { 0 } else { 4 }),
        );
        return Ok(pts);
    }
    let mut pts = if n <= 2 { all_points(field, n)? } else { Vec::new() };
    if field.is_prime_field() {
        let ext = Field::gf(field.characteristic(), 4)?;
        pts.extend(random_points(&ext, n, 16, seed));
    } else {
        pts.extend(random_points(field, n, 16, seed));
    }
    Ok(pts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VarietyMode {
    /// Zero locus of the listed generators.
    Ideal,
    /// All of `k^n` (the characteristic does not divide the dimension).
    Whole,
    /// Only the origin (zero module).
    Origin,
    /// No symbolic ideal; membership is decided by the rank criterion.
    MembershipOnly,
}

/// A conical variety in `k^n` given by homogeneous generators or by a rank test.
#[derive(Debug, Clone, Serialize)]
pub struct VarietyHandle {
    pub ambient: usize,
    pub characteristic: u32,
    pub field: String,
    pub mode: VarietyMode,
    pub generators: Vec<MultiPoly>,
    pub point_counts: BTreeMap<u32, u64>,
    pub origin_only: bool,
    /// Agreement of ideal membership with the rank test on sampled points.
    pub self_check: Option<bool>,
    pub note: Option<String>,
    #[serde(skip)]
    operators: Option<ShiftedOperators>,
}

impl VarietyHandle {
    /// Whether `λ` lies in the variety (the origin always does, except for `Origin` mode
    /// where it is the only point).
    pub fn contains(&self, lambda: &ShiftedSubgroupPoint) -> Result<bool, VarietyError> {
        if lambda.is_zero() {
            return Ok(true);
        }
        match self.mode {
            VarietyMode::Origin => Ok(false),
            VarietyMode::Whole => Ok(true),
            VarietyMode::Ideal => Ok(self
                .generators
                .iter()
                .all(|g| lambda.field.is_zero(&g.eval(&lambda.field, &lambda.coords)))),
            VarietyMode::MembershipOnly => {
                let ops = self.operators.as_ref().expect("membership handles keep operators");
                Ok(!ops.is_free_at(lambda)?)
            }
        }
    }

    /// Every variable has a pure power among the generators, so the zero
    /// locus is the origin.
    fn pure_powers_cover(&self) -> bool {
        let vars: BTreeSet<usize> = self.generators.iter().filter_map(|g| g.pure_power_variable()).collect();
        vars.len() == self.ambient
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..r).collect();
    if r > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = r;
        while i > 0 && cur[i - 1] == n - r + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..r {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Symbolic `X(λ)^{deg-1}` with polynomial entries.
fn symbolic_power(ops: &ShiftedOperators) -> Vec<Vec<MultiPoly>> {
    let k = &ops.field;
    let n = ops.nvars();
    let d = ops.ops.first().map(|m| m.rows()).unwrap_or(0);
    let x: Vec<Vec<MultiPoly>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let coeffs: Vec<Scalar> = ops.ops.iter().map(|m| m.get(i, j).clone()).collect();
                    MultiPoly::linear(k, &coeffs)
                })
                .collect()
        })
        .collect();
    let mut pow = x.clone();
    for _ in 1..ops.degree - 1 {
        pow = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        (0..d).fold(MultiPoly::zero(k, n), |acc, l| {
                            if pow[i][l].is_zero() || x[l][j].is_zero() {
                                acc
                            } else {
                                acc.add(&pow[i][l].mul(&x[l][j]))
                            }
                        })
                    })
                    .collect()
            })
            .collect();
    }
    pow
}

/// The rank variety decided pointwise by the rank criterion, with no ideal.
pub fn rank_variety_membership(m: &Module) -> Result<VarietyHandle, VarietyError> {
    let ops = shifted_operators(m)?;
    let k = ops.field.clone();
    Ok(VarietyHandle {
        ambient: ops.nvars(),
        characteristic: k.characteristic(),
        field: k.name(),
        mode: if m.dim() == 0 {
            VarietyMode::Origin
        } else {
            VarietyMode::MembershipOnly
        },
        generators: Vec::new(),
        point_counts: BTreeMap::new(),
        origin_only: m.dim() == 0,
        self_check: None,
        note: Some("membership by the rank criterion".into()),
        operators: Some(ops),
    })
}

/// The rank variety as the locus `rank X(λ)^{p-1} < dim M / p`, i.e. the
/// common zeros of the `(dim M/p)`-minors of the symbolic matrix.
pub fn rank_variety_ideal(m: &Module) -> Result<VarietyHandle, VarietyError> {
    let ops = shifted_operators(m)?;
    let k = ops.field.clone();
    let n = ops.nvars();
    let d = m.dim();
    let p = ops.degree;
    let mut handle = VarietyHandle {
        ambient: n,
        characteristic: k.characteristic(),
        field: k.name(),
        mode: VarietyMode::Ideal,
        generators: Vec::new(),
        point_counts: BTreeMap::new(),
        origin_only: false,
        self_check: None,
        note: None,
        operators: Some(ops.clone()),
    };
    if d == 0 {
        handle.mode = VarietyMode::Origin;
        handle.origin_only = true;
        handle.note = Some("zero module".into());
        return Ok(handle);
    }
    if !d.is_multiple_of(p) {
        handle.mode = VarietyMode::Whole;
        handle.note = Some(format!("{p} does not divide dim {d}"));
        return Ok(handle);
    }
    let quantum = matches!(m.algebra().kind(), AlgebraKind::QuantumElementary { .. });
    let r = d / p;
    let minors = binomial(d as u64, r as u64).saturating_pow(2);
    if quantum || r > 6 || n > 4 || minors > MAX_MINORS {
        handle.mode = VarietyMode::MembershipOnly;
        handle.note = Some(if quantum {
            "one-parameter quantum case: membership only".into()
        } else {
            format!("{minors} minors of size {r} in {n} variables exceed the enumeration caps")
        });
        return Ok(handle);
    }
    let xp = symbolic_power(&ops);
    let rows = subsets(d, r);
    let found: Vec<MultiPoly> = rows
        .par_iter()
        .flat_map_iter(|rs| {
            let xp = &xp;
            subsets(d, r).into_iter().filter_map(move |cs| {
                let sub: Vec<Vec<MultiPoly>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| xp[i][j].clone()).collect())
                    .collect();
                let det = poly_determinant(&sub);
                (!det.is_zero()).then(|| det.monic())
            })
        })
        .collect();
    let mut seen = BTreeSet::new();
    for g in found {
        if seen.insert(g.format()) {
            handle.generators.push(g);
        }
    }
    handle.generators.sort_by(|a, b| {
        let ka: Vec<_> = a.terms().keys().rev().collect();
        let kb: Vec<_> = b.terms().keys().rev().collect();
        ka.cmp(&kb)
    });
    handle.origin_only = handle.pure_powers_cover();
    // self-check against the rank criterion on sampled points
    if k.characteristic() > 0 {
        let ext = probe_field(&k, if k.is_prime_field() { 2 } else { 1 })?;
        let pts = random_points(&ext, n, 100, DEFAULT_SEED);
        let ok = pts.par_iter().all(|pt| {
            let by_ideal = handle.contains(pt).expect("ideal membership");
            let by_rank = !ops.is_free_at(pt).expect("nonzero point");
            by_ideal == by_rank
        });
        handle.self_check = Some(ok);
    }
    Ok(handle)
}

#[derive(Debug, Clone, Serialize)]
pub struct DimensionEstimate {
    pub dim: usize,
    pub exact: bool,
    pub method: String,
    /// `(e, |V(F_{p^e})|)`.
    pub counts: Vec<(u32, u64)>,
    pub residual: f64,
    pub heuristic: bool,
}

/// Number of points of the variety over `F_{p^e}`, origin included.
pub fn count_points(v: &VarietyHandle, e: u32) -> Result<u64, VarietyError> {
    if v.characteristic == 0 {
        return Err(VarietyError::CyclotomicEnumerationUnsupported);
    }
    let ops = v.operators.as_ref();
    let base = ops.map(|o| o.field.clone()).unwrap_or(Field::prime(v.characteristic)?);
    let f = if base.is_prime_field() {
        probe_field(&base, e)?
    } else {
        base.clone()
    };
    let pts = all_points(&f, v.ambient)?;
    let inside = pts
        .par_iter()
        .map(|p| v.contains(p).map(|b| b as u64))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(1 + inside.iter().sum::<u64>())
}

fn slope_fit(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = if sxx == 0.0 { 0.0 } else { sxy / sxx };
    let icept = my - slope * mx;
    let rss: f64 = xs.iter().zip(ys).map(|(x, y)| (y - icept - slope * x).powi(2)).sum();
    (slope, (rss / n).sqrt())
}

/// Dimension of the variety: exact for the whole space, the origin, pure
/// powers, and in two variables via the gcd of the dehomogenized generators;
/// otherwise estimated from point counts over `F_{p^e}`, `e = 1..=e_max`.
pub fn variety_dimension(v: &mut VarietyHandle, e_max: u32) -> Result<DimensionEstimate, VarietyError> {
    if v.characteristic == 0 {
        return Err(VarietyError::CyclotomicEnumerationUnsupported);
    }
    let exact = |dim: usize, method: &str| DimensionEstimate {
        dim,
        exact: true,
        method: method.to_string(),
        counts: Vec::new(),
        residual: 0.0,
        heuristic: false,
    };
    match v.mode {
        VarietyMode::Origin => return Ok(exact(0, "origin")),
        VarietyMode::Whole => return Ok(exact(v.ambient, "whole space")),
        VarietyMode::Ideal => {
            if v.generators.is_empty() {
                return Ok(exact(v.ambient, "zero ideal"));
            }
            if v.origin_only || v.pure_powers_cover() {
                v.origin_only = true;
                return Ok(exact(0, "pure powers"));
            }
            if v.ambient == 1 {
                v.origin_only = true;
                return Ok(exact(0, "nonzero ideal in one variable"));
            }
            if v.ambient == 2 {
                let k = v.generators[0].field().clone();
                let at_infinity = v
                    .generators
                    .iter()
                    .all(|g| k.is_zero(&g.eval(&k, &[k.one(), k.zero()])));
                let g = v.generators.iter().fold(Vec::new(), |acc: Vec<Scalar>, f| {
                    univariate_gcd(&k, &acc, &f.dehomogenize())
                });
                let dim = usize::from(at_infinity || g.len() > 1);
                v.origin_only = dim == 0;
                return Ok(exact(dim, "gcd of binary forms"));
            }
        }
        VarietyMode::MembershipOnly => {}
    }
    let mut counts = Vec::new();
    for e in 1..=e_max.max(2) {
        let c = match v.point_counts.get(&e) {
            Some(&c) => c,
            None => {
                let c = count_points(v, e)?;
                v.point_counts.insert(e, c);
                c
            }
        };
        counts.push((e, c));
    }
    let p = v.characteristic as f64;
    let xs: Vec<f64> = counts.iter().map(|(e, _)| *e as f64).collect();
    let ys: Vec<f64> = counts.iter().map(|(_, c)| (*c as f64).ln() / p.ln()).collect();
    let (slope, residual) = slope_fit(&xs, &ys);
    let dim = slope.round().max(0.0) as usize;
    if dim == 0 && counts.iter().all(|(_, c)| *c == 1) {
        v.origin_only = true;
    }
    Ok(DimensionEstimate {
        dim,
        exact: false,
        method: "point count".into(),
        counts,
        residual,
        heuristic: residual > 0.15,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentVariety {
    pub group_element: String,
    pub module_dim: usize,
    pub variety: VarietyHandle,
    pub dimension: DimensionEstimate,
}

#[derive(Debug, Clone, Serialize)]
pub struct SmashVarietyReport {
    pub module: String,
    pub components: Vec<ComponentVariety>,
    pub dim: usize,
    /// Every component variety is the origin.
    pub projective: bool,
}

impl SmashVarietyReport {
    pub fn render_text(&self) -> String {
        let mut out = format!("variety report for {}\n", self.module);
        for c in &self.components {
            let body = match c.variety.mode {
                VarietyMode::Origin => "origin".to_string(),
                VarietyMode::Whole => "whole space".to_string(),
                VarietyMode::MembershipOnly => "membership only".to_string(),
                VarietyMode::Ideal if c.variety.origin_only => "origin".to_string(),
                VarietyMode::Ideal => {
                    let gens: Vec<String> = c.variety.generators.iter().take(200).map(|g| g.format()).collect();
                    format!("V({})", gens.join(", "))
                }
            };
            out.push_str(&format!(
                "  {}: dim M_g = {}, {}, dim {}\n",
                c.group_element, c.module_dim, body, c.dimension.dim
            ));
        }
        out.push_str(&format!("  total dim {}, projective: {}\n", self.dim, self.projective));
        out
    }
}

/// Varieties of the components `M_g` of a module over `kL ♮ k^G`.
pub fn smash_variety_report(m: &Module) -> Result<SmashVarietyReport, VarietyError> {
    let (base, action) = smash_data(m.algebra())?;
    let k = base.field();
    match base.kind() {
        AlgebraKind::Group(e) if k.characteristic() > 0 && e.is_elementary_abelian(k.characteristic()) => {}
        _ => return Err(VarietyError::UnsupportedBase(base.name().into())),
    }
    let mut components = Vec::new();
    for g in 0..action.group().order() {
        let comp = m.component(g)?;
        let mut variety = rank_variety_ideal(&comp)?;
        let dimension = variety_dimension(&mut variety, 3)?;
        components.push(ComponentVariety {
            group_element: action.group().label(g),
            module_dim: comp.dim(),
            variety,
            dimension,
        });
    }
    let dim = components.iter().map(|c| c.dimension.dim).max().unwrap_or(0);
    let projective = components.iter().all(|c| c.dimension.dim == 0);
    Ok(SmashVarietyReport {
        module: m.label().to_string(),
        components,
        dim,
        projective,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::hopf::{group_algebra, AbelianGroup, HopfAlgebra};

    fn klein() -> Arc<HopfAlgebra> {
        Arc::new(group_algebra(&AbelianGroup::new(&[2, 2], "g"), &Field::prime(2).unwrap()).unwrap())
    }

    fn u(a: &Arc<HopfAlgebra>) -> Module {
        Module::quotient_of_regular(a, &[a.parse_element("g2-1").unwrap()], "U").unwrap()
    }

    #[test]
    fn partitions_from_rank_chains() {
        assert_eq!(partition_from_ranks(&[4, 2, 0]), vec![2, 2]);
        assert_eq!(partition_from_ranks(&[2, 0, 0]), vec![1, 1]);
        assert_eq!(partition_from_ranks(&[3, 1, 0]), vec![2, 1]);
        assert_eq!(partition_from_ranks(&[3, 2, 1, 0]), vec![3]);
    }

    #[test]
    fn jordan_types_of_u() {
        let a = klein();
        let k = a.field().clone();
        let m = u(&a);
        assert_eq!(
            jordan_type(&m, &ShiftedSubgroupPoint::from_ints(&k, &[1, 0])).unwrap(),
            vec![2]
        );
        assert_eq!(
            jordan_type(&m, &ShiftedSubgroupPoint::from_ints(&k, &[0, 1])).unwrap(),
            vec![1, 1]
        );
        assert!(matches!(
            jordan_type(&m, &ShiftedSubgroupPoint::from_ints(&k, &[0, 0])),
            Err(VarietyError::ZeroPoint)
        ));
    }

    #[test]
    fn regular_is_free_over_f4() {
        let a = klein();
        let reg = Module::regular(&a);
        let f4 = Field::gf(2, 2).unwrap();
        for pt in all_points(&f4, 2).unwrap() {
            assert_eq!(jordan_type(&reg, &pt).unwrap(), vec![2, 2]);
        }
    }

    #[test]
    fn ideal_of_u_is_the_line() {
        let a = klein();
        let mut v = rank_variety_ideal(&u(&a)).unwrap();
        assert_eq!(v.generators.len(), 1);
        assert_eq!(v.generators[0].format(), "l1");
        assert_eq!(v.self_check, Some(true));
        let d = variety_dimension(&mut v, 3).unwrap();
        assert_eq!(d.dim, 1);
        assert!(d.exact);
        assert_eq!(count_points(&v, 1).unwrap(), 2);
        assert_eq!(count_points(&v, 2).unwrap(), 4);
        assert_eq!(count_points(&v, 3).unwrap(), 8);
    }

    #[test]
    fn regular_and_trivial_varieties() {
        let a = klein();
        let mut reg = rank_variety_ideal(&Module::regular(&a)).unwrap();
        assert_eq!(variety_dimension(&mut reg, 3).unwrap().dim, 0);
        let mut triv = rank_variety_ideal(&Module::trivial(&a)).unwrap();
        assert_eq!(triv.mode, VarietyMode::Whole);
        assert_eq!(variety_dimension(&mut triv, 3).unwrap().dim, 2);
        assert_eq!(count_points(&triv, 2).unwrap(), 16);
    }

    #[test]
    fn point_count_fallback_matches() {
        let a = klein();
        let mut v = rank_variety_ideal(&u(&a)).unwrap();
        v.mode = VarietyMode::MembershipOnly;
        let d = variety_dimension(&mut v, 3).unwrap();
        assert_eq!(d.dim, 1);
        assert!(!d.exact);
        assert_eq!(d.counts, vec![(1, 2), (2, 4), (3, 8)]);
    }

    #[test]
    fn subsets_enumeration() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(binomial(12, 6), 924);
    }
}
