//! Workspace files: named algebra and module specs in JSON, and their
//! evaluation into algebras and modules.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::de::{self, MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::field::{Field, FieldError, FieldSpec};
use crate::hopf::{
    dual_group_algebra, group_algebra, quantum_elementary_abelian, smash_coproduct, tensor_algebra, AbelianGroup,
    GroupAction, HopfAlgebra, HopfError,
};
use crate::linalg::Matrix;
use crate::module::{smash_data, Module, ModuleError};
use crate::scenarios::corpus::radical_module;

pub const WORKSPACE_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WorkspaceError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        message: String,
        line: usize,
        column: usize,
    },
    #[error("workspace version {found} is not supported (expected {expected})")]
    VersionMismatch { found: u32, expected: u32 },
    #[error("undefined reference {0:?}")]
    DanglingReference(String),
    #[error("invalid spec for {name}: {message}")]
    Invalid { name: String, message: String },
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

impl WorkspaceError {
    fn invalid(name: &str, message: impl ToString) -> WorkspaceError {
        WorkspaceError::Invalid {
            name: name.into(),
            message: message.to_string(),
        }
    }
}

impl From<serde_json::Error> for WorkspaceError {
    fn from(e: serde_json::Error) -> Self {
        let msg = e.to_string();
        // serde_json appends " at line L column C"; keep the message itself
        let message = match msg.rfind(" at line ") {
            Some(i) => msg[..i].to_string(),
            None => msg,
        };
        WorkspaceError::Parse {
            message,
            line: e.line(),
            column: e.column(),
        }
    }
}

/// An algebra given by name or inline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraRef {
    Name(String),
    Inline(Box<AlgebraSpec>),
}

impl Serialize for AlgebraRef {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            AlgebraRef::Name(n) => s.serialize_str(n),
            AlgebraRef::Inline(spec) => spec.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for AlgebraRef {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = AlgebraRef;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an algebra name or an algebra spec object")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<AlgebraRef, E> {
                Ok(AlgebraRef::Name(v.to_string()))
            }

            fn visit_map<A: MapAccess<'de>>(self, map: A) -> Result<AlgebraRef, A::Error> {
                let spec = AlgebraSpec::deserialize(de::value::MapAccessDeserializer::new(map))?;
                Ok(AlgebraRef::Inline(Box::new(spec)))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuantumSpec {
    pub m: usize,
    pub n: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct SmashSpec {
    pub base: AlgebraRef,
    pub acting_group: Vec<u32>,
    /// `swap-generators`, `cycle-generators`, `swap-factors` or `trivial`.
    pub action: String,
}

/// Constructor spec of a Hopf algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "AlgebraSpecRaw", into = "AlgebraSpecRaw")]
pub enum AlgebraSpec {
    Group { orders: Vec<u32>, field: FieldSpec },
    DualGroup { orders: Vec<u32>, field: FieldSpec },
    Quantum { m: usize, n: u32, field: Option<FieldSpec> },
    Tensor(AlgebraRef, AlgebraRef),
    Smash(SmashSpec),
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct AlgebraSpecRaw {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    group: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dual_group: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    quantum: Option<QuantumSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tensor: Option<Vec<AlgebraRef>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    smash: Option<SmashSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    field: Option<FieldSpec>,
}

impl TryFrom<AlgebraSpecRaw> for AlgebraSpec {
    type Error = String;

    fn try_from(r: AlgebraSpecRaw) -> Result<AlgebraSpec, String> {
        let kinds = [
            r.group.is_some(),
            r.dual_group.is_some(),
            r.quantum.is_some(),
            r.tensor.is_some(),
            r.smash.is_some(),
        ];
        if kinds.iter().filter(|&&b| b).count() != 1 {
            return Err("an algebra needs exactly one of `group`, `dual-group`, `quantum`, `tensor`, `smash`".into());
        }
        let need_field = |f: Option<FieldSpec>| f.ok_or_else(|| "group algebras need a `field`".to_string());
        let no_field = |f: &Option<FieldSpec>, what: &str| match f {
            Some(_) => Err(format!("`field` is not allowed for {what}")),
            None => Ok(()),
        };
        if let Some(orders) = r.group {
            return Ok(AlgebraSpec::Group {
                orders,
                field: need_field(r.field)?,
            });
        }
        if let Some(orders) = r.dual_group {
            return Ok(AlgebraSpec::DualGroup {
                orders,
                field: need_field(r.field)?,
            });
        }
        if let Some(q) = r.quantum {
            return Ok(AlgebraSpec::Quantum {
                m: q.m,
                n: q.n,
                field: r.field,
            });
        }
        if let Some(t) = r.tensor {
            no_field(&r.field, "tensor products")?;
            let [a, b]: [AlgebraRef; 2] = t
                .try_into()
                .map_err(|_| "`tensor` takes exactly two algebras".to_string())?;
            return Ok(AlgebraSpec::Tensor(a, b));
        }
        no_field(&r.field, "smash coproducts")?;
        Ok(AlgebraSpec::Smash(r.smash.expect("one kind is set")))
    }
}

impl From<AlgebraSpec> for AlgebraSpecRaw {
    fn from(s: AlgebraSpec) -> AlgebraSpecRaw {
        let mut r = AlgebraSpecRaw::default();
        match s {
            AlgebraSpec::Group { orders, field } => {
                r.group = Some(orders);
                r.field = Some(field);
            }
            AlgebraSpec::DualGroup { orders, field } => {
                r.dual_group = Some(orders);
                r.field = Some(field);
            }
            AlgebraSpec::Quantum { m, n, field } => {
                r.quantum = Some(QuantumSpec { m, n });
                r.field = field;
            }
            AlgebraSpec::Tensor(a, b) => r.tensor = Some(vec![a, b]),
            AlgebraSpec::Smash(s) => r.smash = Some(s),
        }
        r
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuotientSpec {
    /// Only `regular` is supported.
    pub of: String,
    /// Elements generating the left ideal.
    pub by: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentSpec {
    /// A module over the base of the smash coproduct.
    pub base: String,
    /// Group element label.
    pub at: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConjugateSpec {
    pub module: String,
    pub by: String,
}

/// How a module is built. Module references are workspace names or
/// `builtin@algebra` with builtin one of `k`, `trivial`, `regular`, `zero`, `rad`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ModuleSpecRaw", into = "ModuleSpecRaw")]
pub enum ModuleSpec {
    /// Generator images; each matrix is a list of rows of scalar strings.
    Actions {
        algebra: AlgebraRef,
        actions: BTreeMap<String, Vec<Vec<String>>>,
    },
    Quotient {
        algebra: AlgebraRef,
        quotient: QuotientSpec,
    },
    /// `U ⊗ k p_g` over the smash coproduct `algebra`.
    Component {
        algebra: AlgebraRef,
        component: ComponentSpec,
    },
    /// Conjugate of a base module by an element acting in the smash `algebra`.
    Conjugate {
        algebra: AlgebraRef,
        conjugate: ConjugateSpec,
    },
    Tensor(Vec<String>),
    DirectSum(Vec<String>),
    Dual(String),
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct ModuleSpecRaw {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    algebra: Option<AlgebraRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    actions: Option<BTreeMap<String, Vec<Vec<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    quotient: Option<QuotientSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    component_module: Option<ComponentSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    conjugate: Option<ConjugateSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tensor: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    direct_sum: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dual: Option<String>,
}

impl TryFrom<ModuleSpecRaw> for ModuleSpec {
    type Error = String;

    fn try_from(r: ModuleSpecRaw) -> Result<ModuleSpec, String> {
        let kinds = [
            r.actions.is_some(),
            r.quotient.is_some(),
            r.component_module.is_some(),
            r.conjugate.is_some(),
            r.tensor.is_some(),
            r.direct_sum.is_some(),
            r.dual.is_some(),
        ];
        if kinds.iter().filter(|&&b| b).count() != 1 {
            return Err(
                "a module needs exactly one of `actions`, `quotient`, `component-module`, `conjugate`, \
                        `tensor`, `direct-sum`, `dual`"
                    .into(),
            );
        }
        let needs_algebra =
            r.actions.is_some() || r.quotient.is_some() || r.component_module.is_some() || r.conjugate.is_some();
        match (needs_algebra, r.algebra) {
            (true, None) => Err("this module kind needs an `algebra`".into()),
            (false, Some(_)) => Err("`algebra` is implied for tensor, direct-sum and dual".into()),
            (true, Some(algebra)) => Ok(if let Some(actions) = r.actions {
                ModuleSpec::Actions { algebra, actions }
            } else if let Some(quotient) = r.quotient {
                ModuleSpec::Quotient { algebra, quotient }
            } else if let Some(component) = r.component_module {
                ModuleSpec::Component { algebra, component }
            } else {
                ModuleSpec::Conjugate {
                    algebra,
                    conjugate: r.conjugate.expect("one kind is set"),
                }
            }),
            (false, None) => Ok(if let Some(t) = r.tensor {
                ModuleSpec::Tensor(t)
            } else if let Some(t) = r.direct_sum {
                ModuleSpec::DirectSum(t)
            } else {
                ModuleSpec::Dual(r.dual.expect("one kind is set"))
            }),
        }
    }
}

impl From<ModuleSpec> for ModuleSpecRaw {
    fn from(s: ModuleSpec) -> ModuleSpecRaw {
        let mut r = ModuleSpecRaw::default();
        match s {
            ModuleSpec::Actions { algebra, actions } => {
                r.algebra = Some(algebra);
                r.actions = Some(actions);
            }
            ModuleSpec::Quotient { algebra, quotient } => {
                r.algebra = Some(algebra);
                r.quotient = Some(quotient);
            }
            ModuleSpec::Component { algebra, component } => {
                r.algebra = Some(algebra);
                r.component_module = Some(component);
            }
            ModuleSpec::Conjugate { algebra, conjugate } => {
                r.algebra = Some(algebra);
                r.conjugate = Some(conjugate);
            }
            ModuleSpec::Tensor(t) => r.tensor = Some(t),
            ModuleSpec::DirectSum(t) => r.direct_sum = Some(t),
            ModuleSpec::Dual(m) => r.dual = Some(m),
        }
        r
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub scenario: String,
}

/// Map that rejects repeated keys.
fn unique_map<'de, D, T>(d: D) -> Result<BTreeMap<String, T>, D::Error>
where
    D: Deserializer<'de>,
    T: Deserialize<'de>,
{
    struct V<T>(std::marker::PhantomData<T>);
    impl<'de, T: Deserialize<'de>> Visitor<'de> for V<T> {
        type Value = BTreeMap<String, T>;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("a map of named specs")
        }

        fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Self::Value, A::Error> {
            let mut out = BTreeMap::new();
            while let Some(k) = map.next_key::<String>()? {
                if k.contains('@') {
                    return Err(de::Error::custom(format!("name {k:?} must not contain '@'")));
                }
                if out.contains_key(&k) {
                    return Err(de::Error::custom(format!("duplicate name {k:?}")));
                }
                let v = map.next_value()?;
                out.insert(k, v);
            }
            Ok(out)
        }
    }
    d.deserialize_map(V(std::marker::PhantomData))
}

/// Contents of a `*.workspace.json` file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkspaceFile {
    pub version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, deserialize_with = "unique_map")]
    pub algebras: BTreeMap<String, AlgebraSpec>,
    #[serde(default, deserialize_with = "unique_map")]
    pub modules: BTreeMap<String, ModuleSpec>,
    #[serde(default, deserialize_with = "unique_map")]
    pub scenarios: BTreeMap<String, ScenarioConfig>,
}

fn f2() -> FieldSpec {
    FieldSpec::prime(2)
}

/// Algebras available by name in every workspace.
pub fn builtin_algebra(name: &str) -> Option<AlgebraSpec> {
    let named = |n: &str| AlgebraRef::Name(n.into());
    Some(match name {
        "z2" => AlgebraSpec::Group {
            orders: vec![2],
            field: f2(),
        },
        "kleinfour" => AlgebraSpec::Group {
            orders: vec![2, 2],
            field: f2(),
        },
        "e8" => AlgebraSpec::Group {
            orders: vec![2, 2, 2],
            field: f2(),
        },
        "kleinfour-smash" => AlgebraSpec::Smash(SmashSpec {
            base: named("kleinfour"),
            acting_group: vec![2],
            action: "swap-generators".into(),
        }),
        "quantum3" => AlgebraSpec::Quantum {
            m: 1,
            n: 3,
            field: None,
        },
        "swap-klein-four" => AlgebraSpec::Smash(SmashSpec {
            base: AlgebraRef::Inline(Box::new(AlgebraSpec::Tensor(named("kleinfour"), named("kleinfour")))),
            acting_group: vec![2],
            action: "swap-factors".into(),
        }),
        "swap-quantum" => AlgebraSpec::Smash(SmashSpec {
            base: AlgebraRef::Inline(Box::new(AlgebraSpec::Tensor(named("quantum3"), named("quantum3")))),
            acting_group: vec![2],
            action: "swap-factors".into(),
        }),
        _ => return None,
    })
}

pub const BUILTIN_ALGEBRAS: &[&str] = &[
    "z2",
    "kleinfour",
    "e8",
    "kleinfour-smash",
    "quantum3",
    "swap-klein-four",
    "swap-quantum",
];

pub const BUILTIN_MODULES: &[&str] = &["k", "trivial", "regular", "zero", "rad"];

impl WorkspaceFile {
    pub fn empty() -> WorkspaceFile {
        WorkspaceFile {
            version: WORKSPACE_VERSION,
            seed: None,
            algebras: BTreeMap::new(),
            modules: BTreeMap::new(),
            scenarios: BTreeMap::new(),
        }
    }

    /// The Klein four counterexample: `U`, its conjugate, `M = U@h` and `N = U@1`.
    pub fn klein_four() -> WorkspaceFile {
        let mut w = WorkspaceFile::empty();
        w.seed = Some(crate::variety::DEFAULT_SEED);
        w.algebras.insert(
            "L".into(),
            AlgebraSpec::Group {
                orders: vec![2, 2],
                field: f2(),
            },
        );
        w.algebras.insert(
            "A".into(),
            AlgebraSpec::Smash(SmashSpec {
                base: AlgebraRef::Name("L".into()),
                acting_group: vec![2],
                action: "swap-generators".into(),
            }),
        );
        w.modules.insert(
            "U".into(),
            ModuleSpec::Quotient {
                algebra: AlgebraRef::Name("L".into()),
                quotient: QuotientSpec {
                    of: "regular".into(),
                    by: vec!["g2-1".into()],
                },
            },
        );
        w.modules.insert(
            "hU".into(),
            ModuleSpec::Conjugate {
                algebra: AlgebraRef::Name("A".into()),
                conjugate: ConjugateSpec {
                    module: "U".into(),
                    by: "h".into(),
                },
            },
        );
        for (name, at) in [("M", "h"), ("N", "1")] {
            w.modules.insert(
                name.into(),
                ModuleSpec::Component {
                    algebra: AlgebraRef::Name("A".into()),
                    component: ComponentSpec {
                        base: "U".into(),
                        at: at.into(),
                    },
                },
            );
        }
        w.modules
            .insert("MN".into(), ModuleSpec::Tensor(vec!["M".into(), "N".into()]));
        w.modules
            .insert("NM".into(), ModuleSpec::Tensor(vec!["N".into(), "M".into()]));
        w.scenarios.insert(
            "counterexample".into(),
            ScenarioConfig {
                scenario: "klein-four".into(),
            },
        );
        w
    }

    pub fn from_json(text: &str) -> Result<WorkspaceFile, WorkspaceError> {
        let w: WorkspaceFile = serde_json::from_str(text)?;
        if w.version != WORKSPACE_VERSION {
            return Err(WorkspaceError::VersionMismatch {
                found: w.version,
                expected: WORKSPACE_VERSION,
            });
        }
        w.check_references()?;
        Ok(w)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("workspace serializes");
        s.push('\n');
        s
    }

    fn has_algebra(&self, name: &str) -> bool {
        self.algebras.contains_key(name) || builtin_algebra(name).is_some()
    }

    fn check_algebra_ref(&self, r: &AlgebraRef) -> Result<(), WorkspaceError> {
        match r {
            AlgebraRef::Name(n) if self.has_algebra(n) => Ok(()),
            AlgebraRef::Name(n) => Err(WorkspaceError::DanglingReference(n.clone())),
            AlgebraRef::Inline(spec) => self.check_algebra_spec(spec),
        }
    }

    fn check_algebra_spec(&self, s: &AlgebraSpec) -> Result<(), WorkspaceError> {
        match s {
            AlgebraSpec::Tensor(a, b) => {
                self.check_algebra_ref(a)?;
                self.check_algebra_ref(b)
            }
            AlgebraSpec::Smash(sm) => self.check_algebra_ref(&sm.base),
            _ => Ok(()),
        }
    }

    fn check_module_ref(&self, r: &str) -> Result<(), WorkspaceError> {
        if self.modules.contains_key(r) {
            return Ok(());
        }
        match r.split_once('@') {
            Some((b, alg)) if BUILTIN_MODULES.contains(&b) => {
                if self.has_algebra(alg) {
                    Ok(())
                } else {
                    Err(WorkspaceError::DanglingReference(alg.into()))
                }
            }
            _ => Err(WorkspaceError::DanglingReference(r.into())),
        }
    }

    /// Every named algebra and module reference resolves.
    pub fn check_references(&self) -> Result<(), WorkspaceError> {
        for spec in self.algebras.values() {
            self.check_algebra_spec(spec)?;
        }
        for spec in self.modules.values() {
            match spec {
                ModuleSpec::Actions { algebra, .. } | ModuleSpec::Quotient { algebra, .. } => {
                    self.check_algebra_ref(algebra)?
                }
                ModuleSpec::Component { algebra, component } => {
                    self.check_algebra_ref(algebra)?;
                    self.check_module_ref(&component.base)?;
                }
                ModuleSpec::Conjugate { algebra, conjugate } => {
                    self.check_algebra_ref(algebra)?;
                    self.check_module_ref(&conjugate.module)?;
                }
                ModuleSpec::Tensor(ms) | ModuleSpec::DirectSum(ms) => {
                    for m in ms {
                        self.check_module_ref(m)?;
                    }
                }
                ModuleSpec::Dual(m) => self.check_module_ref(m)?,
            }
        }
        for (name, s) in &self.scenarios {
            if !crate::scenarios::SCENARIO_IDS.contains(&s.scenario.as_str()) {
                return Err(WorkspaceError::invalid(
                    name,
                    format!("unknown scenario {:?}", s.scenario),
                ));
            }
        }
        Ok(())
    }
}

pub fn load_workspace(path: &Path) -> Result<WorkspaceFile, WorkspaceError> {
    let text = std::fs::read_to_string(path).map_err(|e| WorkspaceError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    WorkspaceFile::from_json(&text)
}

pub fn save_workspace(path: &Path, w: &WorkspaceFile) -> Result<(), WorkspaceError> {
    std::fs::write(path, w.to_json()).map_err(|e| WorkspaceError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Evaluates the specs of a workspace, caching algebras and modules by name.
pub struct Workspace {
    pub file: WorkspaceFile,
    algebras: RefCell<BTreeMap<String, Arc<HopfAlgebra>>>,
    modules: RefCell<BTreeMap<String, Module>>,
    resolving: RefCell<Vec<String>>,
}

impl Workspace {
    pub fn new(file: WorkspaceFile) -> Workspace {
        Workspace {
            file,
            algebras: RefCell::new(BTreeMap::new()),
            modules: RefCell::new(BTreeMap::new()),
            resolving: RefCell::new(Vec::new()),
        }
    }

    pub fn seed(&self) -> u64 {
        self.file.seed.unwrap_or(crate::variety::DEFAULT_SEED)
    }

    fn enter(&self, key: String) -> Result<(), WorkspaceError> {
        let mut r = self.resolving.borrow_mut();
        if r.contains(&key) {
            return Err(WorkspaceError::invalid(&key, "cyclic reference"));
        }
        r.push(key);
        Ok(())
    }

    fn leave(&self) {
        self.resolving.borrow_mut().pop();
    }

    pub fn algebra(&self, name: &str) -> Result<Arc<HopfAlgebra>, WorkspaceError> {
        if let Some(a) = self.algebras.borrow().get(name) {
            return Ok(a.clone());
        }
        let spec = match self.file.algebras.get(name) {
            Some(s) => s.clone(),
            None => builtin_algebra(name).ok_or_else(|| WorkspaceError::DanglingReference(name.into()))?,
        };
        self.enter(format!("algebra {name}"))?;
        let built = self.build_algebra(name, &spec);
        self.leave();
        let a = built?;
        self.algebras.borrow_mut().insert(name.into(), a.clone());
        Ok(a)
    }

    pub fn algebra_ref(&self, r: &AlgebraRef) -> Result<Arc<HopfAlgebra>, WorkspaceError> {
        match r {
            AlgebraRef::Name(n) => self.algebra(n),
            AlgebraRef::Inline(spec) => self.build_algebra("inline algebra", spec),
        }
    }

    fn build_algebra(&self, name: &str, spec: &AlgebraSpec) -> Result<Arc<HopfAlgebra>, WorkspaceError> {
        let a = match spec {
            AlgebraSpec::Group { orders, field } => {
                group_algebra(&AbelianGroup::new(orders, "g"), &Field::new(field)?)?
            }
            AlgebraSpec::DualGroup { orders, field } => {
                dual_group_algebra(&AbelianGroup::new(orders, "g"), &Field::new(field)?)?
            }
            AlgebraSpec::Quantum { m, n, field } => {
                let f = match field {
                    Some(f) => Field::new(f)?,
                    None => Field::cyclotomic(*n as i64)?,
                };
                quantum_elementary_abelian(*m, *n, &f)?
            }
            AlgebraSpec::Tensor(x, y) => tensor_algebra(&self.algebra_ref(x)?, &self.algebra_ref(y)?)?,
            AlgebraSpec::Smash(s) => {
                let base = self.algebra_ref(&s.base)?;
                let action = match s.action.as_str() {
                    "swap-generators" => GroupAction::swap_generators(&base)?,
                    "cycle-generators" => GroupAction::cycle_generators(&base)?,
                    "swap-factors" => GroupAction::swap_tensor_factors(&base)?,
                    "trivial" => GroupAction::trivial(&base, AbelianGroup::new(&s.acting_group, "h")),
                    other => return Err(WorkspaceError::invalid(name, format!("unknown action {other:?}"))),
                };
                if action.group().orders() != s.acting_group.as_slice() {
                    return Err(WorkspaceError::invalid(
                        name,
                        format!(
                            "action {} is by a group with orders {:?}, not {:?}",
                            s.action,
                            action.group().orders(),
                            s.acting_group
                        ),
                    ));
                }
                smash_coproduct(&base, action)?
            }
        };
        Ok(Arc::new(a))
    }

    /// A module by workspace name or as `builtin@algebra`.
    pub fn module(&self, name: &str) -> Result<Module, WorkspaceError> {
        if let Some(m) = self.modules.borrow().get(name) {
            return Ok(m.clone());
        }
        let m = match self.file.modules.get(name) {
            Some(spec) => {
                let spec = spec.clone();
                self.enter(format!("module {name}"))?;
                let built = self.build_module(name, &spec);
                self.leave();
                built?.relabel(name)
            }
            None => {
                let (b, alg) = name
                    .split_once('@')
                    .filter(|(b, _)| BUILTIN_MODULES.contains(b))
                    .ok_or_else(|| WorkspaceError::DanglingReference(name.into()))?;
                let a = self.algebra(alg)?;
                match b {
                    "k" | "trivial" => Module::trivial(&a),
                    "regular" => Module::regular(&a),
                    "zero" => Module::zero(&a),
                    _ => radical_module(&a)?,
                }
                .relabel(name)
            }
        };
        self.modules.borrow_mut().insert(name.into(), m.clone());
        Ok(m)
    }

    fn build_module(&self, name: &str, spec: &ModuleSpec) -> Result<Module, WorkspaceError> {
        Ok(match spec {
            ModuleSpec::Actions { algebra, actions } => {
                let a = self.algebra_ref(algebra)?;
                let k = a.field();
                let mut images = Vec::new();
                for (g, rows) in actions {
                    let m = Matrix::from_strings(k, rows)
                        .map_err(|e| WorkspaceError::invalid(name, format!("action of {g}: {e}")))?;
                    images.push((g.clone(), m));
                }
                Module::from_generator_images(a, &images, name)?
            }
            ModuleSpec::Quotient { algebra, quotient } => {
                if quotient.of != "regular" {
                    return Err(WorkspaceError::invalid(
                        name,
                        "quotients are taken of the regular module",
                    ));
                }
                let a = self.algebra_ref(algebra)?;
                let elems = quotient
                    .by
                    .iter()
                    .map(|e| a.parse_element(e))
                    .collect::<Result<Vec<_>, _>>()?;
                Module::quotient_of_regular(&a, &elems, name)?
            }
            ModuleSpec::Component { algebra, component } => {
                let s = self.algebra_ref(algebra)?;
                let (_, action) = smash_data(&s)?;
                let g = action
                    .group()
                    .find(&component.at)
                    .ok_or_else(|| WorkspaceError::invalid(name, format!("no group element {:?}", component.at)))?;
                self.module(&component.base)?.place_at(&s, g)?
            }
            ModuleSpec::Conjugate { algebra, conjugate } => {
                let s = self.algebra_ref(algebra)?;
                let (_, action) = smash_data(&s)?;
                let g = action
                    .group()
                    .find(&conjugate.by)
                    .ok_or_else(|| WorkspaceError::invalid(name, format!("no group element {:?}", conjugate.by)))?;
                self.module(&conjugate.module)?.smash_conjugate(&s, g)?
            }
            ModuleSpec::Tensor(ms) | ModuleSpec::DirectSum(ms) => {
                let is_tensor = matches!(spec, ModuleSpec::Tensor(_));
                let mut it = ms.iter();
                let first = it
                    .next()
                    .ok_or_else(|| WorkspaceError::invalid(name, "needs at least one module"))?;
                let mut acc = self.module(first)?;
                for m in it {
                    let next = self.module(m)?;
                    acc = if is_tensor {
                        acc.tensor(&next)?
                    } else {
                        acc.direct_sum(&next)?
                    };
                }
                acc
            }
            ModuleSpec::Dual(m) => self.module(m)?.dual(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_four_round_trip() {
        let w = WorkspaceFile::klein_four();
        let back = WorkspaceFile::from_json(&w.to_json()).unwrap();
        assert_eq!(back, w);
        let ws = Workspace::new(back);
        assert_eq!(ws.module("M").unwrap().dim(), 2);
        assert_eq!(ws.module("MN").unwrap().dim(), 4);
        assert_eq!(ws.module("hU").unwrap().dim(), 2);
        assert_eq!(ws.module("regular@kleinfour").unwrap().dim(), 4);
    }

    #[test]
    fn unknown_field_kind_is_named() {
        let text = r#"{"version":1,"algebras":{"L":{"group":[2,2],"field":{"quaternion":2}}}}"#;
        match WorkspaceFile::from_json(text) {
            Err(WorkspaceError::Parse { message, line, column }) => {
                assert!(message.contains("quaternion"), "{message}");
                assert_eq!(line, 1);
                assert!(column > 0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn dangling_and_version() {
        let text = r#"{"version":1,"modules":{"T":{"tensor":["X","regular@kleinfour"]}}}"#;
        assert_eq!(
            WorkspaceFile::from_json(text),
            Err(WorkspaceError::DanglingReference("X".into()))
        );
        assert!(matches!(
            WorkspaceFile::from_json(r#"{"version":2}"#),
            Err(WorkspaceError::VersionMismatch { found: 2, expected: 1 })
        ));
        let dup = r#"{"version":1,"modules":{"T":{"dual":"k@z2"},"T":{"dual":"k@z2"}}}"#;
        assert!(matches!(
            WorkspaceFile::from_json(dup),
            Err(WorkspaceError::Parse { .. })
        ));
    }

    #[test]
    fn explicit_actions_and_cycles() {
        let text = r#"{"version":1,"modules":{
            "V":{"algebra":"kleinfour","actions":{"g1":[["1","1"],["0","1"]],"g2":[["1","0"],["0","1"]]}},
            "C":{"dual":"D"},"D":{"dual":"C"}}}"#;
        let ws = Workspace::new(WorkspaceFile::from_json(text).unwrap());
        let u = ws.module("V").unwrap();
        assert_eq!(u.dim(), 2);
        assert!(matches!(ws.module("C"), Err(WorkspaceError::Invalid { .. })));
    }

    #[test]
    fn builtins_resolve() {
        let ws = Workspace::new(WorkspaceFile::empty());
        for name in [
            "z2",
            "kleinfour",
            "e8",
            "kleinfour-smash",
            "quantum3",
            "swap-klein-four",
        ] {
            ws.algebra(name).unwrap();
        }
        assert_eq!(ws.algebra("kleinfour-smash").unwrap().dim(), 8);
    }
}
