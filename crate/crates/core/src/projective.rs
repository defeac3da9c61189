//! Projective covers, minimal resolutions and complexity.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::field::Scalar;
use crate::hopf::AlgebraKind;
use crate::linalg::{Matrix, Subspace};
use crate::module::{Module, ModuleError, ModuleMap};
use crate::variety::{is_free_at, standard_probes, VarietyError, DEFAULT_SEED};

/// Resolution depth used when none is given.
pub const DEFAULT_STEPS: usize = 12;

/// Fewest resolution steps the growth estimate accepts.
pub const MIN_COMPLEXITY_STEPS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectiveError {
    #[error("{0} has no idempotents lifting its simples")]
    MissingRadicalData(String),
    #[error("could not lift the top of {0} to a surjection")]
    LiftFailed(String),
    #[error("complexity needs at least {needed} resolution steps, got {got}")]
    InsufficientSteps { needed: usize, got: usize },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Variety(#[from] VarietyError),
}

/// `JM`, the radical times the module.
pub fn radical_submodule(m: &Module) -> Subspace {
    let a = m.algebra();
    let k = a.field();
    let mut gens: Vec<Vec<Scalar>> = a.radical_generators().to_vec();
    if gens.is_empty() {
        let r = a.radical_basis();
        gens = (0..r.cols()).map(|j| r.column(j)).collect();
    }
    let images: Vec<Matrix> = gens.iter().map(|r| m.act(r)).collect();
    if images.is_empty() || m.dim() == 0 {
        return Subspace::new(k, m.dim());
    }
    m.submodule_generated(&Matrix::hstack_all(k, m.dim(), &images))
}

/// Multiplicities of the one-dimensional simples in `M / JM`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Top {
    pub simples: Vec<String>,
    pub multiplicities: Vec<usize>,
    pub dim: usize,
}

/// Top of `M` together with, per simple, vectors `v = e v` lifting a basis of
/// `e (M/JM)`.
struct TopLift {
    top: Top,
    lifts: Vec<Vec<Vec<Scalar>>>,
}

fn top_lift(m: &Module) -> Result<TopLift, ProjectiveError> {
    let a = m.algebra();
    if a.idempotents().is_empty() {
        return Err(ProjectiveError::MissingRadicalData(a.name().into()));
    }
    let mut space = radical_submodule(m);
    let jdim = space.dim();
    let mut lifts = Vec::new();
    for e in a.idempotents() {
        let img = m.act(&e.vector);
        let mut chosen = Vec::new();
        for j in 0..img.cols() {
            let v = img.column(j);
            if space.insert(&v) {
                chosen.push(v);
            }
        }
        lifts.push(chosen);
    }
    let top = Top {
        simples: a.idempotents().iter().map(|e| e.label.clone()).collect(),
        multiplicities: lifts.iter().map(Vec::len).collect(),
        dim: m.dim() - jdim,
    };
    if top.multiplicities.iter().sum::<usize>() != top.dim {
        return Err(ProjectiveError::MissingRadicalData(format!(
            "{} (idempotents do not exhaust the top of {})",
            a.name(),
            m.label()
        )));
    }
    Ok(TopLift { top, lifts })
}

pub fn top(m: &Module) -> Result<Top, ProjectiveError> {
    Ok(top_lift(m)?.top)
}

/// A projective cover `P → M` with `P = ⊕ A e_χ`.
#[derive(Debug, Clone)]
pub struct ProjectiveCover {
    pub projective: Module,
    pub map: ModuleMap,
    /// Idempotent index of each indecomposable summand of `P`, in order.
    pub summands: Vec<usize>,
    pub top: Top,
}

pub fn projective_cover(m: &Module) -> Result<ProjectiveCover, ProjectiveError> {
    let a = m.algebra();
    let k = a.field();
    let TopLift { top, lifts } = top_lift(m)?;
    let pims = a.projective_indecomposables();
    let mut summands = Vec::new();
    let mut columns: Vec<Vec<Scalar>> = Vec::new();
    for (chi, vs) in lifts.iter().enumerate() {
        let basis = &pims[chi].basis.basis;
        for v in vs {
            // images of the algebra basis on v, then of the basis of A e_χ
            let w: Vec<Vec<Scalar>> = m.actions().iter().map(|x| x.mul_vec(v)).collect();
            for c in 0..basis.cols() {
                let mut col = vec![k.zero(); m.dim()];
                for (i, wi) in w.iter().enumerate() {
                    let b = basis.get(i, c);
                    if k.is_zero(b) {
                        continue;
                    }
                    for (x, y) in col.iter_mut().zip(wi) {
                        *x = k.add(x, &k.mul(b, y));
                    }
                }
                columns.push(col);
            }
            summands.push(chi);
        }
    }
    let dim_p = columns.len();
    let matrix = Matrix::from_fn(k, m.dim(), dim_p, |i, j| columns[j][i].clone());
    if matrix.rank() != m.dim() {
        return Err(ProjectiveError::LiftFailed(m.label().into()));
    }
    let actions = (0..a.dim())
        .map(|x| {
            let blocks: Vec<&Matrix> = summands.iter().map(|&chi| &pims[chi].actions[x]).collect();
            Matrix::block_diag(k, &blocks)
        })
        .collect();
    let projective = Module::new_unchecked(a.clone(), dim_p, actions, &format!("P({})", m.label()));
    Ok(ProjectiveCover {
        map: ModuleMap {
            source: projective.clone(),
            target: m.clone(),
            matrix,
        },
        projective,
        summands,
        top,
    })
}

fn cover_dim(m: &Module) -> Result<usize, ProjectiveError> {
    let t = top(m)?;
    let pims = m.algebra().projective_indecomposables();
    Ok(t.multiplicities.iter().zip(pims).map(|(c, p)| c * p.basis.dim()).sum())
}

/// `M` is projective iff its projective cover has the same dimension. Over a
/// group algebra of an elementary abelian group a projective answer is also
/// checked to be free on every probed cyclic shifted subgroup.
pub fn is_projective(m: &Module) -> Result<bool, ProjectiveError> {
    let projective = cover_dim(m)? == m.dim();
    let k = m.algebra().field();
    if let AlgebraKind::Group(e) = m.algebra().kind() {
        let p = k.characteristic();
        if projective && p > 0 && e.is_elementary_abelian(p) && m.dim() > 0 {
            for pt in standard_probes(k, e.rank(), DEFAULT_SEED)? {
                if !is_free_at(m, &pt)? {
                    return Err(ProjectiveError::Inconsistent(format!(
                        "{} has a projective cover of its own dimension but is not free at λ={pt}",
                        m.label()
                    )));
                }
            }
        }
    }
    Ok(projective)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiStep {
    pub step: usize,
    /// Multiplicity of each indecomposable projective in `P_j`.
    pub multiplicities: Vec<usize>,
    pub dim_p: usize,
}

/// Dimensions along a minimal projective resolution `P_• → M`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolutionProfile {
    pub module: String,
    pub simples: Vec<String>,
    pub betti: Vec<BettiStep>,
    /// `dim Ω^j` for `j = 0..=betti.len()`.
    pub omega_dims: Vec<usize>,
    pub steps_requested: usize,
    /// Some syzygy vanished within the requested steps.
    pub terminated: bool,
}

pub fn minimal_resolution(m: &Module, steps: usize) -> Result<ResolutionProfile, ProjectiveError> {
    let simples: Vec<String> = m.algebra().idempotents().iter().map(|e| e.label.clone()).collect();
    if simples.is_empty() {
        return Err(ProjectiveError::MissingRadicalData(m.algebra().name().into()));
    }
    let mut omega = m.clone();
    let mut betti = Vec::new();
    let mut omega_dims = vec![m.dim()];
    let mut terminated = m.dim() == 0;
    for j in 0..steps {
        if omega.dim() == 0 {
            terminated = true;
            break;
        }
        let cover = projective_cover(&omega)?;
        let dim_p = cover.projective.dim();
        let ker = cover.map.matrix.kernel_basis();
        let jp = radical_submodule(&cover.projective);
        if (0..ker.cols()).any(|c| !jp.contains(&ker.column(c))) {
            return Err(ProjectiveError::Inconsistent(format!(
                "cover kernel at step {j} of {} leaves the radical",
                m.label()
            )));
        }
        betti.push(BettiStep {
            step: j,
            multiplicities: cover.top.multiplicities.clone(),
            dim_p,
        });
        omega = if ker.cols() == 0 {
            Module::zero(m.algebra())
        } else {
            cover.projective.submodule(&ker)?
        };
        omega_dims.push(omega.dim());
        if omega.dim() == 0 {
            terminated = true;
        }
    }
    Ok(ResolutionProfile {
        module: m.label().to_string(),
        simples,
        betti,
        omega_dims,
        steps_requested: steps,
        terminated,
    })
}

impl ResolutionProfile {
    pub fn dims_p(&self) -> Vec<usize> {
        self.betti.iter().map(|b| b.dim_p).collect()
    }

    /// Rows `j, dim P_j, dim Ω^j, multiplicities...`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("j,dim_P,dim_Omega");
        for s in &self.simples {
            out.push_str(&format!(",mult_{}", s.replace(',', ";")));
        }
        out.push('\n');
        for b in &self.betti {
            out.push_str(&format!("{},{},{}", b.step, b.dim_p, self.omega_dims[b.step]));
            for c in &b.multiplicities {
                out.push_str(&format!(",{c}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("minimal resolution of {}\n", self.module);
        for b in &self.betti {
            let mults: Vec<String> = self
                .simples
                .iter()
                .zip(&b.multiplicities)
                .filter(|(_, &c)| c > 0)
                .map(|(s, c)| format!("{c}x{s}"))
                .collect();
            out.push_str(&format!(
                "  P_{}: dim {} ({}), dim Omega^{} = {}\n",
                b.step,
                b.dim_p,
                mults.join(" + "),
                b.step,
                self.omega_dims[b.step]
            ));
        }
        if self.terminated {
            out.push_str("  resolution terminates\n");
        }
        out
    }
}

/// Polynomial growth rate of `dim P_j`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComplexityEstimate {
    pub complexity: usize,
    /// Set when the regression cannot separate two adjacent values.
    pub range: Option<(usize, usize)>,
    pub exact: bool,
    pub method: String,
    /// Distance of the fitted log-log slope from the nearest integer.
    pub residual: f64,
    /// Steps `[from, to]` used by the regression.
    pub window: (usize, usize),
    /// `dim P_{2j} / dim P_j` at the middle of the profile.
    pub doubling_ratio: Option<f64>,
}

impl ComplexityEstimate {
    pub fn inconclusive(&self) -> bool {
        self.range.is_some()
    }
}

impl fmt::Display for ComplexityEstimate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.range {
            Some((lo, hi)) => write!(
                f,
                "between {lo} and {hi} (inconclusive, {}, residual {:.2})",
                self.method, self.residual
            ),
            None if self.exact => write!(f, "{} (exact, {})", self.complexity, self.method),
            None => write!(
                f,
                "{} (estimate, {}, residual {:.2})",
                self.complexity, self.method, self.residual
            ),
        }
    }
}

fn eventual_difference_degree(seq: &[i64]) -> Option<usize> {
    let mut cur = seq.to_vec();
    for d in 0..seq.len() {
        if cur.len() < 3 {
            return None;
        }
        let tail = &cur[cur.len() - (cur.len() / 2).max(3)..];
        if tail[0] != 0 && tail.iter().all(|&x| x == tail[0]) {
            return Some(d);
        }
        cur = cur.windows(2).map(|w| w[1] - w[0]).collect();
    }
    None
}

pub fn complexity(profile: &ResolutionProfile) -> Result<ComplexityEstimate, ProjectiveError> {
    let n = profile.betti.len();
    if profile.terminated {
        return Ok(ComplexityEstimate {
            complexity: 0,
            range: None,
            exact: true,
            method: "resolution terminates".into(),
            residual: 0.0,
            window: (0, n),
            doubling_ratio: None,
        });
    }
    if n < MIN_COMPLEXITY_STEPS {
        return Err(ProjectiveError::InsufficientSteps {
            needed: MIN_COMPLEXITY_STEPS,
            got: n,
        });
    }
    let dims = profile.dims_p();
    let mid = (n - 1) / 2;
    let doubling_ratio = (mid >= 1).then(|| dims[2 * mid] as f64 / dims[mid] as f64);
    let seq: Vec<i64> = dims.iter().map(|&d| d as i64).collect();
    if let Some(d) = eventual_difference_degree(&seq) {
        return Ok(ComplexityEstimate {
            complexity: d + 1,
            range: None,
            exact: true,
            method: "difference-table".into(),
            residual: 0.0,
            window: (0, n - 1),
            doubling_ratio,
        });
    }
    // least squares of ln dim P_j against ln(j + 1) over the upper half
    let from = n / 2;
    let pts: Vec<(f64, f64)> = (from..n)
        .map(|j| (((j + 1) as f64).ln(), (dims[j] as f64).ln()))
        .collect();
    let m = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let num: f64 = pts.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = pts.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
    let slope = if den > 0.0 { num / den } else { 0.0 };
    let rounded = slope.round().max(0.0);
    let residual = (slope - rounded).abs();
    let complexity = rounded as usize + 1;
    let range = (residual > 0.25).then(|| {
        let lo = slope.floor().max(0.0) as usize + 1;
        (lo, lo + 1)
    });
    Ok(ComplexityEstimate {
        complexity,
        range,
        exact: false,
        method: "regression".into(),
        residual,
        window: (from, n - 1),
        doubling_ratio,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::field::Field;
    use crate::hopf::{group_algebra, smash_coproduct, AbelianGroup, GroupAction, HopfAlgebra};

    fn group(orders: &[u32]) -> Arc<HopfAlgebra> {
        Arc::new(group_algebra(&AbelianGroup::new(orders, "g"), &Field::prime(2).unwrap()).unwrap())
    }

    fn u(a: &Arc<HopfAlgebra>) -> Module {
        Module::quotient_of_regular(a, &[a.parse_element("g2-1").unwrap()], "U").unwrap()
    }

    #[test]
    fn tops() {
        let a = group(&[2, 2]);
        assert_eq!(top(&Module::regular(&a)).unwrap().multiplicities, vec![1]);
        assert_eq!(top(&u(&a)).unwrap().multiplicities, vec![1]);
        assert_eq!(top(&Module::trivial(&a).direct_sum(&u(&a)).unwrap()).unwrap().dim, 2);
        let s = Arc::new(smash_coproduct(&a, GroupAction::swap_generators(&a).unwrap()).unwrap());
        let m = u(&a).place_at(&s, 1).unwrap();
        let t = top(&m).unwrap();
        assert_eq!(t.multiplicities, vec![0, 1]);
        assert!(t.simples[1].ends_with("p_h"));
    }

    #[test]
    fn covers() {
        let a = group(&[2, 2]);
        let c = projective_cover(&u(&a)).unwrap();
        assert_eq!(c.projective.dim(), 4);
        assert!(c.map.is_module_map());
        assert_eq!(c.map.matrix.kernel_basis().cols(), 2);
        let r = projective_cover(&Module::regular(&a)).unwrap();
        assert!(r.map.matrix.inverse().is_some());
        let s = Arc::new(smash_coproduct(&a, GroupAction::swap_generators(&a).unwrap()).unwrap());
        let m = u(&a).place_at(&s, 1).unwrap();
        let c = projective_cover(&m).unwrap();
        assert_eq!(c.projective.dim(), 4);
        assert!(c.map.is_module_map());
    }

    #[test]
    fn projectivity() {
        let a = group(&[2, 2]);
        assert!(is_projective(&Module::regular(&a)).unwrap());
        assert!(!is_projective(&u(&a)).unwrap());
        assert!(!is_projective(&Module::trivial(&a)).unwrap());
        assert!(is_projective(&Module::regular(&a).tensor(&u(&a)).unwrap()).unwrap());
        assert!(is_projective(&Module::zero(&a)).unwrap());
    }

    #[test]
    fn resolutions() {
        let c2 = group(&[2]);
        let p = minimal_resolution(&Module::trivial(&c2), 6).unwrap();
        assert_eq!(p.dims_p(), vec![2; 6]);
        let a = group(&[2, 2]);
        let p = minimal_resolution(&Module::trivial(&a), 12).unwrap();
        assert_eq!(p.dims_p(), (0..12).map(|j| 4 * (j + 1)).collect::<Vec<_>>());
        assert_eq!(p.omega_dims, (0..13).map(|j| 2 * j + 1).collect::<Vec<_>>());
        assert_eq!(complexity(&p).unwrap().to_string(), "2 (exact, difference-table)");
        let proj = minimal_resolution(&Module::regular(&a), 12).unwrap();
        assert!(proj.terminated);
        assert_eq!(proj.omega_dims, vec![4, 0]);
        assert_eq!(complexity(&proj).unwrap().complexity, 0);
        let u = minimal_resolution(&u(&a), 8).unwrap();
        assert_eq!(complexity(&u).unwrap().complexity, 1);
        let csv = p.to_csv();
        assert!(csv.starts_with("j,dim_P,dim_Omega,mult_chi0_0\n0,4,1,1\n"));
    }

    #[test]
    fn rank_three_complexity() {
        let e = group(&[2, 2, 2]);
        let p = minimal_resolution(&Module::trivial(&e), 8).unwrap();
        let binom = |j: usize| (j + 2) * (j + 1) / 2;
        assert_eq!(p.dims_p(), (0..8).map(|j| 8 * binom(j)).collect::<Vec<_>>());
        assert_eq!(complexity(&p).unwrap().complexity, 3);
        assert!(matches!(
            complexity(&minimal_resolution(&Module::trivial(&e), 4).unwrap()),
            Err(ProjectiveError::InsufficientSteps { .. })
        ));
    }

    #[test]
    fn regression_fallback() {
        let profile = ResolutionProfile {
            module: "synthetic".into(),
            simples: vec!["s".into()],
            betti: (0..12)
                .map(|j| BettiStep {
                    step: j,
                    multiplicities: vec![1],
                    dim_p: (j + 1) * (j + 1) + (j % 2),
                })
                .collect(),
            omega_dims: vec![1; 13],
            steps_requested: 12,
            terminated: false,
        };
        let c = complexity(&profile).unwrap();
        assert!(!c.exact);
        assert_eq!(c.complexity, 3);
        assert!(!c.inconclusive());
    }

    #[test]
    fn missing_idempotents() {
        let k = Field::prime(2).unwrap();
        let a = Arc::new(group_algebra(&AbelianGroup::new(&[3], "g"), &k).unwrap());
        assert!(matches!(
            top(&Module::regular(&a)),
            Err(ProjectiveError::MissingRadicalData(_))
        ));
    }
}
