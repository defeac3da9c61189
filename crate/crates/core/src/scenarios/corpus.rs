//! Named algebras and module collections used by the scenarios and tests.

use std::sync::Arc;

use rand::Rng;

use crate::field::Field;
use crate::hopf::{
    group_algebra, quantum_elementary_abelian, smash_coproduct, AbelianGroup, GroupAction, HopfAlgebra, HopfError,
};
use crate::module::{Module, ModuleError};

/// `k E` for `E = (Z/p)^rank` over `F_p`, generators `g1..g_rank`.
pub fn elementary_abelian(p: u32, rank: usize) -> Result<Arc<HopfAlgebra>, HopfError> {
    let k = Field::prime(p)?;
    Ok(Arc::new(group_algebra(&AbelianGroup::new(&vec![p; rank], "g"), &k)?))
}

pub fn klein_four() -> Arc<HopfAlgebra> {
    elementary_abelian(2, 2).expect("Klein four group algebra")
}

/// `A(n)` over `Q(ζ_n)`.
pub fn quantum(n: u32) -> Result<Arc<HopfAlgebra>, HopfError> {
    let k = Field::cyclotomic(n as i64)?;
    Ok(Arc::new(quantum_elementary_abelian(1, n, &k)?))
}

/// `kL ♮ k^(Z/2)` with `Z/2` swapping the generators of the Klein four group.
pub fn klein_four_smash() -> Arc<HopfAlgebra> {
    let base = klein_four();
    let action = GroupAction::swap_generators(&base).expect("swap action");
    Arc::new(smash_coproduct(&base, action).expect("smash coproduct"))
}

/// `A / A·(r_1, ..., r_k)` labelled by its name.
pub fn cyclic_quotient(a: &Arc<HopfAlgebra>, relations: &[&str], label: &str) -> Result<Module, ModuleError> {
    let elems = relations
        .iter()
        .map(|r| a.parse_element(r))
        .collect::<Result<Vec<_>, _>>()?;
    Module::quotient_of_regular(a, &elems, label)
}

/// The radical `J·A` of the regular module.
pub fn radical_module(a: &Arc<HopfAlgebra>) -> Result<Module, ModuleError> {
    let reg = Module::regular(a);
    Ok(reg.submodule(a.radical_basis())?.relabel("rad"))
}

/// Modules over `k E` for `E` elementary abelian of rank 2 or 3, with
/// varieties ranging from the origin to the whole space.
pub fn elementary_abelian_corpus(a: &Arc<HopfAlgebra>) -> Result<Vec<Module>, ModuleError> {
    let rank = a.symbols().len();
    let k = Module::trivial(a).relabel("k");
    let mut out = vec![k.clone(), Module::regular(a).relabel("regular"), radical_module(a)?];
    match rank {
        2 => {
            out.push(cyclic_quotient(a, &["g2-1"], "U")?);
            out.push(cyclic_quotient(a, &["g1-1"], "hU")?);
            out.push(cyclic_quotient(a, &["g1-g2"], "kE/(g1-g2)")?);
            out.push(cyclic_quotient(a, &["(g1-1)*(g2-1)"], "kE/soc")?);
        }
        _ => {
            out.push(cyclic_quotient(a, &["g2-1", "g3-1"], "kE/(g2-1,g3-1)")?);
            out.push(cyclic_quotient(a, &["g3-1"], "kE/(g3-1)")?);
            out.push(cyclic_quotient(a, &["g1-g2"], "kE/(g1-g2)")?);
        }
    }
    let u = out[3].clone();
    out.push(k.direct_sum(&u)?.relabel(&format!("k+{}", u.label())));
    Ok(out)
}

/// Modules over `A(n)`: trivial, regular, quotients and a nontrivial simple.
pub fn quantum_corpus(a: &Arc<HopfAlgebra>) -> Result<Vec<Module>, ModuleError> {
    Ok(vec![
        Module::trivial(a).relabel("k"),
        Module::regular(a).relabel("regular"),
        cyclic_quotient(a, &["x"], "A/Ax")?,
        cyclic_quotient(a, &["x^2"], "A/Ax^2")?,
        cyclic_quotient(a, &["g-1"], "A/A(g-1)")?,
        cyclic_quotient(a, &["x", "g-z"], "S_z")?,
    ])
}

/// Modules over the Klein four smash coproduct built from base-module components.
pub fn klein_four_smash_corpus(s: &Arc<HopfAlgebra>) -> Result<Vec<Module>, ModuleError> {
    let base = klein_four();
    let u = cyclic_quotient(&base, &["g2-1"], "U")?;
    let k = Module::trivial(&base).relabel("k");
    Ok(vec![
        Module::trivial(s).relabel("k"),
        Module::regular(s).relabel("regular"),
        u.place_at(s, 1)?.relabel("M"),
        u.place_at(s, 0)?.relabel("N"),
        Module::from_components(s, &[k.clone(), u.clone()])?.relabel("k@1+U@h"),
        Module::regular(&base).place_at(s, 1)?.relabel("kL@h"),
    ])
}

/// A random module over a smash coproduct whose components are drawn from
/// the base corpus (zero included).
pub fn random_smash_module<R: Rng>(
    s: &Arc<HopfAlgebra>,
    base_corpus: &[Module],
    rng: &mut R,
) -> Result<Module, ModuleError> {
    let (_, action) = crate::module::smash_data(s)?;
    let base = base_corpus[0].algebra();
    let mut comps = Vec::new();
    let mut names = Vec::new();
    for _ in 0..action.group().order() {
        let pick = rng.gen_range(0..=base_corpus.len());
        if pick == base_corpus.len() {
            comps.push(Module::zero(base));
            names.push("0".to_string());
        } else {
            comps.push(base_corpus[pick].clone());
            names.push(base_corpus[pick].label().to_string());
        }
    }
    Ok(Module::from_components(s, &comps)?.relabel(&format!("[{}]", names.join(", "))))
}
