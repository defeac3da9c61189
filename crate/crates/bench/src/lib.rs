//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use hopfmod::hopf::{quantum_elementary_abelian, smash_coproduct, tensor_algebra};
use hopfmod::scenarios::corpus::{elementary_abelian, klein_four_smash};
use hopfmod::{Field, GroupAction, HopfAlgebra, Matrix, Module};

/// Left action of `1 + g1 + g2 + ...` on the regular module of `k(Z/2)^rank`,
/// a dense singular matrix of size `2^rank`.
pub fn regular_operator(rank: usize) -> Matrix {
    let a = elementary_abelian(2, rank).expect("group algebra");
    let reg = Module::regular(&a);
    let gens: Vec<String> = (1..=rank).map(|i| format!("g{i}")).collect();
    reg.act_expr(&format!("1+{}", gens.join("+"))).expect("element parses")
}

/// The dim-8 smash coproduct and its regular module.
pub fn smash_regular() -> (Arc<HopfAlgebra>, Module) {
    let s = klein_four_smash();
    let reg = Module::regular(&s);
    (s, reg)
}

/// `(A(1,3) ⊗ A(1,3)) ♮ k^(Z/2)`, dimension 162.
pub fn quantum_swap() -> HopfAlgebra {
    let k = Field::cyclotomic(3).expect("cyclotomic field");
    let q = Arc::new(quantum_elementary_abelian(1, 3, &k).expect("quantum algebra"));
    let b = Arc::new(tensor_algebra(&q, &q).expect("tensor algebra"));
    let act = GroupAction::swap_tensor_factors(&b).expect("swap action");
    smash_coproduct(&b, act).expect("smash coproduct")
}
