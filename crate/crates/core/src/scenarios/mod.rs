//! End-to-end reproductions of the tensor product counterexamples over smash
//! coproducts, and of the positive cases over elementary abelian groups.

pub mod corpus;

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::hopf::{smash_coproduct, tensor_algebra, validate_hopf, GroupAction, HopfAlgebra, HopfError};
use crate::module::{iso_test, rigidity_split, smash_data, Module, ModuleError};
use crate::projective::{complexity, is_projective, minimal_resolution, ProjectiveError};
use crate::variety::{
    all_points, is_free_at, probe_field, rank_variety_ideal, smash_variety_report, standard_probes, variety_dimension,
    SmashVarietyReport, VarietyError, VarietyHandle, VarietyMode, DEFAULT_SEED,
};

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),
    #[error("tensor power scenario supports 2 <= n <= 4, got {0}")]
    UnsupportedN(usize),
    #[error("unsupported swap base {0:?}")]
    UnsupportedBase(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Projective(#[from] ProjectiveError),
    #[error(transparent)]
    Variety(#[from] VarietyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub label: String,
    pub expected: String,
    pub computed: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScenarioResult {
    pub id: String,
    pub description: String,
    pub claims: Vec<Claim>,
    pub passed: bool,
}

impl ScenarioResult {
    fn new(id: &str, description: &str) -> ScenarioResult {
        ScenarioResult {
            id: id.into(),
            description: description.into(),
            claims: Vec::new(),
            passed: true,
        }
    }

    fn claim(&mut self, label: &str, expected: impl ToString, computed: impl ToString, witness: Option<String>) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let passed = expected == computed;
        self.passed &= passed;
        self.claims.push(Claim {
            label: label.into(),
            expected,
            computed,
            witness,
            passed,
        });
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "scenario {}: {}\n  {}\n",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.description
        );
        for c in &self.claims {
            out.push_str(&format!(
                "  [{}] {}: expected {}, computed {}\n",
                if c.passed { "pass" } else { "FAIL" },
                c.label,
                c.expected,
                c.computed
            ));
            if let Some(w) = &c.witness {
                out.push_str(&format!("         {w}\n"));
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario results serialize")
    }
}

pub const SCENARIO_IDS: &[&str] = &[
    "klein-four",
    "tensor-power-2",
    "tensor-power-3",
    "tensor-power-4",
    "swap-klein-four",
    "swap-quantum",
    "positive-cases",
];

pub fn run_scenario(id: &str) -> Result<ScenarioResult, ScenarioError> {
    match id {
        "klein-four" => scenario_klein_four(),
        "swap-klein-four" => scenario_swap(SwapBase::KleinFour),
        "swap-quantum" => scenario_swap(SwapBase::Quantum { m: 1, n: 3 }),
        "positive-cases" => scenario_positive_cases(),
        _ => match id.strip_prefix("tensor-power-").and_then(|n| n.parse().ok()) {
            Some(n) => scenario_tensor_power(n),
            None => Err(ScenarioError::UnknownScenario(id.into())),
        },
    }
}

pub fn run_all() -> Result<Vec<ScenarioResult>, ScenarioError> {
    SCENARIO_IDS.iter().map(|id| run_scenario(id)).collect()
}

/// Short description of a conical variety, e.g. `line λ1=0`.
pub fn describe_variety(v: &VarietyHandle) -> String {
    match v.mode {
        VarietyMode::Origin => return "origin".into(),
        VarietyMode::Whole => return "whole space".into(),
        VarietyMode::MembershipOnly => return "membership only".into(),
        VarietyMode::Ideal if v.origin_only => return "origin".into(),
        VarietyMode::Ideal => {}
    }
    let vars: Option<Vec<usize>> = v.generators.iter().map(|g| g.pure_power_variable()).collect();
    match vars {
        Some(mut vars) => {
            vars.sort_unstable();
            vars.dedup();
            let eqs: Vec<String> = vars.iter().map(|i| format!("λ{}", i + 1)).collect();
            let kind = match v.ambient - vars.len() {
                0 => "origin",
                1 => "line",
                2 => "plane",
                _ => "subspace",
            };
            format!("{kind} {}=0", eqs.join("="))
        }
        None if v.generators.len() > 4 => format!("V({} forms)", v.generators.len()),
        None => {
            let gens: Vec<String> = v.generators.iter().map(|g| g.format()).collect();
            format!("V({})", gens.join(", "))
        }
    }
}

/// Non-origin components of a smash variety report and the total dimension.
pub fn describe_support(r: &SmashVarietyReport) -> String {
    let parts: Vec<String> = r
        .components
        .iter()
        .filter(|c| c.dimension.dim > 0)
        .map(|c| format!("{} at {}", describe_variety(&c.variety), c.group_element))
        .collect();
    if parts.is_empty() {
        format!("origin only, dim {}", r.dim)
    } else {
        format!("{}, dim {}", parts.join("; "), r.dim)
    }
}

/// `⊕_{ab=g} M_a ⊗ ᵃN_b` as a module over the base algebra.
pub fn tensor_component_model(m: &Module, n: &Module, g: usize) -> Result<Module, ModuleError> {
    let (base, action) = smash_data(m.algebra())?;
    let grp = action.group();
    let mut acc: Option<Module> = None;
    for a in 0..grp.order() {
        let b = grp.mul(grp.inv(a), g);
        let (ma, nb) = (m.component(a)?, n.component(b)?);
        if ma.dim() == 0 || nb.dim() == 0 {
            continue;
        }
        let term = ma.tensor(&nb.conjugate(action, a)?)?;
        acc = Some(match acc {
            None => term,
            Some(x) => x.direct_sum(&term)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Module::zero(base)))
}

/// Checks `(M⊗N)_g ≅ ⊕_{ab=g} M_a ⊗ ᵃN_b` for every `g` with a verified
/// intertwiner; returns the first failing group element.
pub fn check_tensor_components(m: &Module, n: &Module) -> Result<Result<(), String>, ScenarioError> {
    let (_, action) = smash_data(m.algebra())?;
    let t = m.tensor(n)?;
    for g in 0..action.group().order() {
        let lhs = t.component(g)?;
        let rhs = tensor_component_model(m, n, g)?;
        match iso_test(&lhs, &rhs)? {
            crate::module::IsoResult::Isomorphic(w) => {
                let k = w.matrix.field().clone();
                let ok = w.matrix.rank() == lhs.dim()
                    && (0..lhs.algebra().dim()).all(|x| {
                        let (a, b) = (lhs.action(x).lift(&k), rhs.action(x).lift(&k));
                        matches!((a, b), (Ok(a), Ok(b)) if w.matrix.mul(&a) == b.mul(&w.matrix))
                    });
                if !ok {
                    return Ok(Err(format!(
                        "witness at {} does not intertwine",
                        action.group().label(g)
                    )));
                }
            }
            other => {
                return Ok(Err(format!(
                    "component at {}: {} ({})",
                    action.group().label(g),
                    other.verdict(),
                    other.detail()
                )))
            }
        }
    }
    Ok(Ok(()))
}

fn verdict(r: Result<(), String>) -> (String, Option<String>) {
    match r {
        Ok(()) => ("isomorphic for all g".into(), None),
        Err(w) => ("mismatch".into(), Some(w)),
    }
}

pub fn scenario_klein_four() -> Result<ScenarioResult, ScenarioError> {
    let mut res = ScenarioResult::new(
        "klein-four",
        "kL#k^G with L = Z/2 x Z/2, G = Z/2 swapping g1 and g2; U = kL/(g2-1), M = U@h, N = U@1",
    );
    let s = corpus::klein_four_smash();
    let (base, action) = smash_data(&s)?;
    let u = corpus::cyclic_quotient(base, &["g2-1"], "U")?;
    let hu = u.conjugate(action, 1)?;
    let m = u.place_at(&s, 1)?.relabel("M");
    let n = u.place_at(&s, 0)?.relabel("N");

    let vu = rank_variety_ideal(&u)?;
    res.claim("(a) V_L(U)", "line λ1=0", describe_variety(&vu), None);
    let vhu = rank_variety_ideal(&hu)?;
    res.claim("(a) V_L(hU)", "line λ2=0", describe_variety(&vhu), None);

    let (c, w) = verdict(check_tensor_components(&m, &n)?);
    res.claim("(b) components of M⊗N", "isomorphic for all g", c, w);
    let (c, w) = verdict(check_tensor_components(&n, &m)?);
    res.claim("(b) components of N⊗M", "isomorphic for all g", c, w);

    let mn = m.tensor(&n)?;
    let nm = n.tensor(&m)?;
    let mm = m.tensor(&m)?;
    res.claim("(c) M⊗N projective", true, is_projective(&mn)?, None);
    res.claim("(c) N⊗M projective", false, is_projective(&nm)?, None);
    res.claim("(c) M⊗M projective", true, is_projective(&mm)?, None);
    res.claim("(c) M projective", false, is_projective(&m)?, None);

    res.claim(
        "(d) variety of N⊗M",
        "line λ1=0 at h, dim 1",
        describe_support(&smash_variety_report(&nm)?),
        None,
    );
    res.claim(
        "(d) variety of M⊗N",
        "origin only, dim 0",
        describe_support(&smash_variety_report(&mn)?),
        None,
    );

    let vm = describe_support(&smash_variety_report(&m)?);
    let vd = describe_support(&smash_variety_report(&m.dual())?);
    res.claim(
        "(e) V(M*) vs V(M)",
        "different",
        if vm == vd { "equal" } else { "different" },
        Some(format!("V(M): {vm}; V(M*): {vd}")),
    );
    Ok(res)
}

/// `M^{⊗n}` projective while `M^{⊗(n-1)}` is not, over `k(Z/2)^n ♮ k^(Z/n)`
/// with `Z/n` cycling the generators.
pub fn scenario_tensor_power(n: usize) -> Result<ScenarioResult, ScenarioError> {
    if !(2..=4).contains(&n) {
        return Err(ScenarioError::UnsupportedN(n));
    }
    let rels: Vec<String> = (2..=n).map(|i| format!("g{i}-1")).collect();
    let mut res = ScenarioResult::new(
        &format!("tensor-power-{n}"),
        &format!(
            "k(Z/2)^{n}#k^(Z/{n}) with Z/{n} cycling the generators; U = kL/({}), M = U@h",
            rels.join(",")
        ),
    );
    let base = corpus::elementary_abelian(2, n)?;
    let s = Arc::new(smash_coproduct(&base, GroupAction::cycle_generators(&base)?)?);
    let rel_refs: Vec<&str> = rels.iter().map(String::as_str).collect();
    let u = corpus::cyclic_quotient(&base, &rel_refs, "U")?;
    let m = u.place_at(&s, 1)?.relabel("M");
    let k = Module::trivial(&s);
    let (mut power, mut kpower) = (m.clone(), k.clone());
    for j in 1..=n {
        if j > 1 {
            power = power.tensor(&m)?;
            kpower = kpower.tensor(&k)?;
        }
        res.claim(&format!("M^{j} projective"), j == n, is_projective(&power)?, None);
        let report = smash_variety_report(&power)?;
        let support = if j == n {
            "1".to_string()
        } else if j == 1 {
            "h".to_string()
        } else {
            format!("h^{j}")
        };
        let comp = report
            .components
            .iter()
            .find(|c| c.module_dim > 0)
            .map(|c| c.group_element.clone());
        res.claim(
            &format!("M^{j} supported at"),
            &support,
            comp.unwrap_or_else(|| "nowhere".into()),
            None,
        );
        res.claim(
            &format!("dim V(M^{j})"),
            n - j,
            report.dim,
            Some(describe_support(&report)),
        );
        res.claim(&format!("k^{j} projective"), false, is_projective(&kpower)?, None);
    }
    Ok(res)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwapBase {
    KleinFour,
    Quantum { m: usize, n: u32 },
}

impl SwapBase {
    pub fn parse(s: &str) -> Result<SwapBase, ScenarioError> {
        match s {
            "klein-four" => Ok(SwapBase::KleinFour),
            "quantum(1,3)" | "quantum" => Ok(SwapBase::Quantum { m: 1, n: 3 }),
            _ => Err(ScenarioError::UnsupportedBase(s.into())),
        }
    }
}

/// `(B ⊗ B) ♮ k^(Z/2)` with `Z/2` swapping the factors; `M` and `N` are
/// `B ⊠ k` placed at the swap and at the identity.
pub fn scenario_swap(base: SwapBase) -> Result<ScenarioResult, ScenarioError> {
    let (id, b) = match base {
        SwapBase::KleinFour => ("swap-klein-four", corpus::klein_four()),
        SwapBase::Quantum { m: 1, n: 3 } => ("swap-quantum", corpus::quantum(3)?),
        SwapBase::Quantum { m, n } => return Err(ScenarioError::UnsupportedBase(format!("quantum({m},{n})"))),
    };
    let mut res = ScenarioResult::new(
        id,
        &format!(
            "K = ({0} x {0})#k^(Z/2) swapping the factors; M = (B#k)@h, N = (B#k)@1 with B the regular module",
            b.name()
        ),
    );
    let bb = Arc::new(tensor_algebra(&b, &b)?);
    let k_alg = Arc::new(smash_coproduct(&bb, GroupAction::swap_tensor_factors(&bb)?)?);
    let report = validate_hopf(&k_alg);
    res.claim(
        "K is a Hopf algebra",
        true,
        report.passed(),
        Some(format!("dim K = {}", k_alg.dim())),
    );
    let u = Module::regular(&b).outer_tensor(&Module::trivial(&b), &bb)?;
    let m = u.place_at(&k_alg, 1)?.relabel("M");
    let n = u.place_at(&k_alg, 0)?.relabel("N");
    res.claim("M projective", false, is_projective(&m)?, None);
    res.claim("N projective", false, is_projective(&n)?, None);
    res.claim("M⊗M projective", true, is_projective(&m.tensor(&m)?)?, None);
    res.claim("M⊗N projective", true, is_projective(&m.tensor(&n)?)?, None);
    res.claim("N⊗M projective", false, is_projective(&n.tensor(&m)?)?, None);
    Ok(res)
}

/// Pointwise `V(M⊗N) = V(M) ∩ V(N)` on a probe grid: returns the number of
/// violations and the first one.
pub fn tensor_property_violations(
    corpus: &[Module],
    grid: &[crate::variety::ShiftedSubgroupPoint],
) -> Result<(usize, Option<String>), ScenarioError> {
    let mut count = 0;
    let mut first = None;
    let free: Vec<Vec<bool>> = corpus
        .iter()
        .map(|m| grid.iter().map(|p| is_free_at(m, p)).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;
    for (i, m) in corpus.iter().enumerate() {
        for (j, n) in corpus.iter().enumerate() {
            let t = m.tensor(n)?;
            for (pi, p) in grid.iter().enumerate() {
                let lhs = !is_free_at(&t, p)?;
                let rhs = !free[i][pi] && !free[j][pi];
                if lhs != rhs {
                    count += 1;
                    first.get_or_insert_with(|| format!("{}⊗{} at λ={p}", m.label(), n.label()));
                }
            }
        }
    }
    Ok((count, first))
}

/// Exhaustive grid of nonzero points over `F_p` and `F_{p^2}`.
pub fn exhaustive_grid(
    a: &HopfAlgebra,
    rank: usize,
) -> Result<Vec<crate::variety::ShiftedSubgroupPoint>, ScenarioError> {
    let mut grid = Vec::new();
    for e in [1, 2] {
        let f = probe_field(a.field(), e)?;
        grid.extend(all_points(&f, rank)?.into_iter().filter(|p| !p.is_zero()));
    }
    Ok(grid)
}

/// Name, algebra, corpus, resolution steps and probe grid.
type Family = (
    String,
    Arc<HopfAlgebra>,
    Vec<Module>,
    usize,
    Vec<crate::variety::ShiftedSubgroupPoint>,
);

pub fn scenario_positive_cases() -> Result<ScenarioResult, ScenarioError> {
    let mut res = ScenarioResult::new(
        "positive-cases",
        "tensor product property, commutativity of projectivity, rigidity and complexity over kE and A(3)",
    );
    let mut families: Vec<Family> = Vec::new();
    for rank in [2, 3] {
        let a = corpus::elementary_abelian(2, rank)?;
        let grid = exhaustive_grid(&a, rank)?;
        let c = corpus::elementary_abelian_corpus(&a)?;
        families.push((a.name().to_string(), a, c, if rank == 2 { 12 } else { 8 }, grid));
    }
    let q = corpus::quantum(3)?;
    let qgrid = standard_probes(q.field(), 1, DEFAULT_SEED)?;
    let qc = corpus::quantum_corpus(&q)?;
    families.push((q.name().to_string(), q, qc, 0, qgrid));

    for (name, _, modules, steps, grid) in &families {
        let (count, first) = tensor_property_violations(modules, grid)?;
        res.claim(
            &format!("(a) {name}: V(M⊗N) = V(M)∩V(N) on {} modules", modules.len()),
            0,
            count,
            first,
        );
        let mut asym = None;
        for m in modules {
            for n in modules {
                if is_projective(&m.tensor(n)?)? != is_projective(&n.tensor(m)?)? {
                    asym.get_or_insert_with(|| format!("{} and {}", m.label(), n.label()));
                }
            }
        }
        res.claim(
            &format!("(b) {name}: M⊗N projective iff N⊗M projective"),
            "holds",
            if asym.is_some() { "fails" } else { "holds" },
            asym,
        );
        let bad: Vec<String> = modules
            .iter()
            .filter(|m| {
                let r = rigidity_split(m);
                !(r.coev_is_module_map && r.ev_is_module_map && r.composite_is_identity)
            })
            .map(|m| m.label().to_string())
            .collect();
        res.claim(
            &format!("(c) {name}: rigidity composite is the identity"),
            "holds",
            if bad.is_empty() { "holds" } else { "fails" },
            (!bad.is_empty()).then(|| bad.join(", ")),
        );
        if *steps > 0 {
            let mut mismatches = Vec::new();
            for m in modules {
                let cx = complexity(&minimal_resolution(m, *steps)?)?;
                let mut v = rank_variety_ideal(m)?;
                let d = variety_dimension(&mut v, 3)?;
                if cx.complexity != d.dim || !cx.exact || d.heuristic {
                    mismatches.push(format!("{}: cx {} vs dim {}", m.label(), cx, d.dim));
                }
            }
            res.claim(
                &format!("(d) {name}: complexity = variety dimension"),
                "holds",
                if mismatches.is_empty() { "holds" } else { "fails" },
                (!mismatches.is_empty()).then(|| mismatches.join("; ")),
            );
        }
    }
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_four_passes() {
        let r = scenario_klein_four().unwrap();
        assert!(r.passed, "{}", r.render_text());
    }

    #[test]
    fn tensor_power_two_and_three() {
        for n in [2, 3] {
            let r = scenario_tensor_power(n).unwrap();
            assert!(r.passed, "{}", r.render_text());
        }
        assert!(matches!(scenario_tensor_power(5), Err(ScenarioError::UnsupportedN(5))));
    }

    #[test]
    fn swap_klein_four() {
        let r = scenario_swap(SwapBase::KleinFour).unwrap();
        assert!(r.passed, "{}", r.render_text());
    }

    #[test]
    fn unknown_id() {
        assert!(matches!(run_scenario("nope"), Err(ScenarioError::UnknownScenario(_))));
    }
}
