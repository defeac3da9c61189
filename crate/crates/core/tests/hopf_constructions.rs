use std::sync::Arc;
use std::time::Instant;

use hopfmod::hopf::{quantum_elementary_abelian, smash_coproduct, tensor_algebra, validate_hopf};
use hopfmod::{Field, GroupAction};

#[test]
fn quantum_swap_smash_coproduct() {
    let start = Instant::now();
    let k = Field::cyclotomic(3).unwrap();
    let a = Arc::new(quantum_elementary_abelian(1, 3, &k).unwrap());
    let b = Arc::new(tensor_algebra(&a, &a).unwrap());
    assert_eq!(b.dim(), 81);
    let act = GroupAction::swap_tensor_factors(&b).unwrap();
    let s = smash_coproduct(&b, act).unwrap();
    assert_eq!(s.dim(), 162);
    assert!(validate_hopf(&s).passed());
    eprintln!("built and validated in {:?}", start.elapsed());
}
