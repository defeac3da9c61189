use std::collections::BTreeMap;
use std::sync::Arc;

use super::{
    prune, validate_hopf, AbelianGroup, AlgebraKind, GroupAction, HopfAlgebra, HopfError, HopfParts, Idempotent,
    SparseTensor, SparseVec,
};
use crate::field::{Field, Scalar};
use crate::linalg::{Matrix, Subspace};

type Tensor2 = BTreeMap<(usize, usize), Scalar>;

fn unit_vec(k: &Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![k.zero(); n];
    v[i] = k.one();
    v
}

fn tensor_list(t: Tensor2) -> SparseTensor {
    t.into_iter().map(|((a, b), c)| (a, b, c)).collect()
}

fn columns_matrix(k: &Field, n: usize, cols: &[Vec<Scalar>]) -> Matrix {
    Matrix::from_fn(k, n, cols.len(), |i, j| cols[j][i].clone())
}

fn character_label(exps: &[u32]) -> String {
    let parts: Vec<String> = exps.iter().map(|e| e.to_string()).collect();
    format!("chi{}", parts.join("_"))
}

/// Idempotents `|G|^{-1} Σ_g χ(g)^{-1} g` of `k[G]`, indexed by characters
/// `χ_k(g) = Π ω_i^{k_i a_i}` where `ω_i` is a primitive `n_i`-th root of unity.
/// `place(g)` gives the algebra index of the group element with index `g`.
fn character_idempotents(
    k: &Field,
    group: &AbelianGroup,
    dim: usize,
    place: impl Fn(usize) -> usize,
) -> Result<Vec<Idempotent>, HopfError> {
    let roots = group
        .orders()
        .iter()
        .map(|&n| {
            k.root_of_unity(n)
                .ok_or_else(|| HopfError::NoPrimitiveRoot(k.name(), n))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let size = k.from_int(group.order() as i64);
    let inv_size = k.inv(&size)?;
    let mut out = Vec::new();
    for chi in 0..group.order() {
        let ks = group.exponents(chi);
        let mut v = vec![k.zero(); dim];
        for g in 0..group.order() {
            let a = group.exponents(g);
            let mut val = k.one();
            for ((w, &ki), (&ai, &n)) in roots.iter().zip(&ks).zip(a.iter().zip(group.orders())) {
                // χ(g)^{-1} = ω^{-k a} = ω^{n - (k a mod n)}
                let e = (n - (ki * ai) % n) % n;
                val = k.mul(&val, &k.pow(w, e as u64));
            }
            v[place(g)] = k.mul(&val, &inv_size);
        }
        out.push(Idempotent {
            vector: v,
            label: character_label(&ks),
        });
    }
    Ok(out)
}

fn group_name(group: &AbelianGroup) -> String {
    let parts: Vec<String> = group.orders().iter().map(|n| format!("Z/{n}")).collect();
    parts.join("x")
}

fn checked(parts: HopfParts) -> Result<HopfAlgebra, HopfError> {
    let a = HopfAlgebra::from_parts(parts);
    let report = validate_hopf(&a);
    match report.first_failure() {
        None => Ok(a),
        Some(c) => Err(HopfError::ValidationFailed(format!(
            "{}: {:?} fails{}",
            a.name(),
            c.axiom,
            c.witness.as_deref().map(|w| format!(" at {w}")).unwrap_or_default()
        ))),
    }
}

/// The group algebra `k[G]` of a finite abelian group.
///
/// If the characteristic divides `|G|`, `G` must be a `p`-group (then `k[G]`
/// is local). Otherwise the character idempotents are used when the field
/// contains the needed roots of unity; if it does not, the algebra is
/// semisimple but not split and carries no idempotents.
pub fn group_algebra(group: &AbelianGroup, field: &Field) -> Result<HopfAlgebra, HopfError> {
    let k = field;
    let n = group.order();
    let p = k.characteristic();
    let labels: Vec<String> = (0..n).map(|g| group.label(g)).collect();
    let mult = (0..n * n)
        .map(|ij| vec![(group.mul(ij / n, ij % n), k.one())])
        .collect();
    let comul = (0..n).map(|g| vec![(g, g, k.one())]).collect();
    let antipode = (0..n).map(|g| vec![(group.inv(g), k.one())]).collect();
    let symbols: Vec<(String, Vec<Scalar>)> = (0..group.rank())
        .map(|i| (group.names()[i].clone(), unit_vec(k, n, group.generator(i))))
        .collect();
    let modular = p > 0 && n.is_multiple_of(p as usize);
    let (radical, radical_generators, idempotents) = if modular {
        if !group.is_p_group(p) {
            return Err(HopfError::UnsupportedAlgebra(format!(
                "k[{}] in characteristic {p} is neither local nor semisimple",
                group_name(group)
            )));
        }
        let cols: Vec<Vec<Scalar>> = (1..n)
            .map(|g| {
                let mut v = unit_vec(k, n, g);
                v[0] = k.neg(&k.one());
                v
            })
            .collect();
        let gens = (0..group.rank())
            .map(|i| cols[group.generator(i) - 1].clone())
            .collect();
        let idem = vec![Idempotent {
            vector: unit_vec(k, n, 0),
            label: character_label(&vec![0; group.rank()]),
        }];
        (columns_matrix(k, n, &cols), gens, idem)
    } else {
        let idem = match character_idempotents(k, group, n, |g| g) {
            Ok(v) => v,
            Err(HopfError::NoPrimitiveRoot(..)) => Vec::new(),
            Err(e) => return Err(e),
        };
        (Matrix::zeros(k, n, 0), Vec::new(), idem)
    };
    checked(HopfParts {
        name: format!("k[{}]", group_name(group)),
        field: k.clone(),
        labels,
        mult,
        unit: vec![(0, k.one())],
        comul,
        counit: vec![k.one(); n],
        antipode,
        radical,
        idempotents,
        symbols,
        radical_generators,
        kind: AlgebraKind::Group(group.clone()),
    })
}

/// The dual group algebra `k^G` with basis the point functions `p_g`.
pub fn dual_group_algebra(group: &AbelianGroup, field: &Field) -> Result<HopfAlgebra, HopfError> {
    let k = field;
    let n = group.order();
    let labels: Vec<String> = (0..n).map(|g| format!("p_{}", group.ident_label(g))).collect();
    let mult = (0..n * n)
        .map(|ij| {
            if ij / n == ij % n {
                vec![(ij / n, k.one())]
            } else {
                Vec::new()
            }
        })
        .collect();
    let comul = (0..n)
        .map(|g| (0..n).map(|a| (a, group.mul(group.inv(a), g), k.one())).collect())
        .collect();
    let counit = (0..n).map(|g| if g == 0 { k.one() } else { k.zero() }).collect();
    let antipode = (0..n).map(|g| vec![(group.inv(g), k.one())]).collect();
    let idempotents = (0..n)
        .map(|g| Idempotent {
            vector: unit_vec(k, n, g),
            label: labels[g].clone(),
        })
        .collect();
    let symbols = (0..n).map(|g| (labels[g].clone(), unit_vec(k, n, g))).collect();
    checked(HopfParts {
        name: format!("k^({})", group_name(group)),
        field: k.clone(),
        labels,
        mult,
        unit: (0..n).map(|g| (g, k.one())).collect(),
        comul,
        counit,
        antipode,
        radical: Matrix::zeros(k, n, 0),
        idempotents,
        symbols,
        radical_generators: Vec::new(),
        kind: AlgebraKind::DualGroup(group.clone()),
    })
}

/// Multiplication in `A ⊗ A` of two tensors given as coefficient maps.
pub(crate) fn tensor_mul(a: &HopfAlgebra, x: &Tensor2, y: &Tensor2) -> Tensor2 {
    let k = a.field();
    let mut acc: Tensor2 = BTreeMap::new();
    for ((a1, a2), c) in x {
        for ((b1, b2), d) in y {
            let cd = k.mul(c, d);
            let left = a.mul_basis(*a1, *b1);
            if left.is_empty() {
                continue;
            }
            for (l, cl) in left {
                for (r, cr) in a.mul_basis(*a2, *b2) {
                    let e = acc.entry((*l, *r)).or_insert_with(|| k.zero());
                    *e = k.add(e, &k.mul(&cd, &k.mul(cl, cr)));
                }
            }
        }
    }
    prune(k, acc)
}

/// The quantum elementary abelian group `A(m, n)`: generated by `x_i, g_i`
/// (`i = 1..m`) with `x_i^n = 0`, `g_i^n = 1`, `g_i x_i = q x_i g_i` for a
/// primitive `n`-th root of unity `q`, all other pairs commuting;
/// `Δ(x_i) = x_i ⊗ 1 + g_i ⊗ x_i`, `Δ(g_i) = g_i ⊗ g_i`.
///
/// The basis is `x^a g^b` ordered lexicographically in `(a_1..a_m, b_1..b_m)`.
pub fn quantum_elementary_abelian(m: usize, n: u32, field: &Field) -> Result<HopfAlgebra, HopfError> {
    let k = field;
    if m == 0 || n < 2 {
        return Err(HopfError::UnsupportedAlgebra(format!("A({m}, {n})")));
    }
    let q = k
        .root_of_unity(n)
        .ok_or_else(|| HopfError::NoPrimitiveRoot(k.name(), n))?;
    let digits = AbelianGroup::new(&vec![n; 2 * m], "d");
    let dim = digits.order();
    let (xs, gs): (Vec<String>, Vec<String>) = if m == 1 {
        (vec!["x".into()], vec!["g".into()])
    } else {
        (
            (1..=m).map(|i| format!("x{i}")).collect(),
            (1..=m).map(|i| format!("g{i}")).collect(),
        )
    };
    let label = |idx: usize| -> String {
        let e = digits.exponents(idx);
        let mut parts = Vec::new();
        for (i, &a) in e.iter().enumerate() {
            let name = if i < m { &xs[i] } else { &gs[i - m] };
            match a {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{a}")),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    };
    let labels: Vec<String> = (0..dim).map(label).collect();
    let q_pows: Vec<Scalar> = (0..n).map(|e| k.pow(&q, e as u64)).collect();
    let mut mult = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        let (a, b) = {
            let e = digits.exponents(i);
            (e[..m].to_vec(), e[m..].to_vec())
        };
        for j in 0..dim {
            let e = digits.exponents(j);
            let (c, d) = (&e[..m], &e[m..]);
            if a.iter().zip(c).any(|(x, y)| x + y >= n) {
                mult.push(Vec::new());
                continue;
            }
            let twist = b.iter().zip(c).map(|(x, y)| x * y).sum::<u32>() % n;
            let mut out: Vec<u32> = a.iter().zip(c).map(|(x, y)| x + y).collect();
            out.extend(b.iter().zip(d).map(|(x, y)| (x + y) % n));
            mult.push(vec![(digits.index(&out), q_pows[twist as usize].clone())]);
        }
    }
    let x_idx: Vec<usize> = (0..m).map(|i| digits.generator(i)).collect();
    let g_idx: Vec<usize> = (0..m).map(|i| digits.generator(m + i)).collect();
    let counit: Vec<Scalar> = (0..dim)
        .map(|i| {
            if digits.exponents(i)[..m].iter().all(|&a| a == 0) {
                k.one()
            } else {
                k.zero()
            }
        })
        .collect();
    let mut parts = HopfParts {
        name: if m == 1 {
            format!("A({n})")
        } else {
            format!("A({m},{n})")
        },
        field: k.clone(),
        labels,
        mult,
        unit: vec![(0, k.one())],
        comul: Vec::new(),
        counit,
        antipode: Vec::new(),
        radical: Matrix::zeros(k, dim, 0),
        idempotents: Vec::new(),
        symbols: Vec::new(),
        radical_generators: Vec::new(),
        kind: AlgebraKind::QuantumElementary { m, n, q: q.clone() },
    };
    let tmp = HopfAlgebra::from_parts(parts.clone());
    let one2: Tensor2 = [((0, 0), k.one())].into_iter().collect();
    let dx: Vec<Tensor2> = (0..m)
        .map(|i| {
            [((x_idx[i], 0), k.one()), ((g_idx[i], x_idx[i]), k.one())]
                .into_iter()
                .collect()
        })
        .collect();
    let dg: Vec<Tensor2> = (0..m)
        .map(|i| [((g_idx[i], g_idx[i]), k.one())].into_iter().collect())
        .collect();
    // S(x_i) = -g_i^{-1} x_i, S(g_i) = g_i^{-1}
    let g_inv: Vec<usize> = (0..m)
        .map(|i| {
            let mut e = vec![0; 2 * m];
            e[m + i] = n - 1;
            digits.index(&e)
        })
        .collect();
    let sx: Vec<SparseVec> = (0..m)
        .map(|i| {
            tmp.mul_sparse(&[(g_inv[i], k.neg(&k.one()))], &[(x_idx[i], k.one())])
                .into_iter()
                .collect()
        })
        .collect();
    let sg: Vec<SparseVec> = (0..m).map(|i| vec![(g_inv[i], k.one())]).collect();
    let mut comul = Vec::with_capacity(dim);
    let mut antipode = Vec::with_capacity(dim);
    for idx in 0..dim {
        let e = digits.exponents(idx);
        let mut d = one2.clone();
        let mut s: SparseVec = vec![(0, k.one())];
        for i in 0..m {
            for _ in 0..e[i] {
                d = tensor_mul(&tmp, &d, &dx[i]);
                s = tmp.mul_sparse(&s, &sx[i]).into_iter().collect();
            }
        }
        for i in 0..m {
            for _ in 0..e[m + i] {
                d = tensor_mul(&tmp, &d, &dg[i]);
                s = tmp.mul_sparse(&sg[i], &s).into_iter().collect();
            }
        }
        comul.push(tensor_list(d));
        antipode.push(s);
    }
    parts.comul = comul;
    parts.antipode = antipode;
    let rad_cols: Vec<Vec<Scalar>> = (0..dim)
        .filter(|&i| digits.exponents(i)[..m].iter().any(|&a| a > 0))
        .map(|i| unit_vec(k, dim, i))
        .collect();
    parts.radical = columns_matrix(k, dim, &rad_cols);
    parts.radical_generators = x_idx.iter().map(|&i| unit_vec(k, dim, i)).collect();
    let gpart = AbelianGroup::with_names(&vec![n; m], gs.clone());
    parts.idempotents = character_idempotents(k, &gpart, dim, |g| {
        let mut e = vec![0; m];
        e.extend(gpart.exponents(g));
        digits.index(&e)
    })?;
    parts.symbols = xs
        .iter()
        .zip(&x_idx)
        .chain(gs.iter().zip(&g_idx))
        .map(|(s, &i)| (s.clone(), unit_vec(k, dim, i)))
        .collect();
    checked(parts)
}

/// The tensor product Hopf algebra `A ⊗ B`, basis `e_i ⊗ f_j ↦ i·dim B + j`.
///
/// Symbols `s` of `A` become `s_1 = s ⊗ 1` and symbols `t` of `B` become `t_2 = 1 ⊗ t`.
pub fn tensor_algebra(a: &Arc<HopfAlgebra>, b: &Arc<HopfAlgebra>) -> Result<HopfAlgebra, HopfError> {
    if a.field() != b.field() {
        return Err(HopfError::FieldMismatch(a.field().name(), b.field().name()));
    }
    let k = a.field();
    let (da, db) = (a.dim(), b.dim());
    let dim = da * db;
    let at = |i: usize, j: usize| i * db + j;
    let kron = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> {
        let mut w = Vec::with_capacity(dim);
        for x in u {
            for y in v {
                w.push(k.mul(x, y));
            }
        }
        w
    };
    let labels = (0..dim)
        .map(|ij| format!("{}|{}", a.labels()[ij / db], b.labels()[ij % db]))
        .collect();
    let mut mult = Vec::with_capacity(dim * dim);
    for x in 0..dim {
        let (i, j) = (x / db, x % db);
        for y in 0..dim {
            let (l, r) = (y / db, y % db);
            let mut out = Vec::new();
            for (u, c) in a.mul_basis(i, l) {
                for (v, d) in b.mul_basis(j, r) {
                    out.push((at(*u, *v), k.mul(c, d)));
                }
            }
            mult.push(out);
        }
    }
    let mut unit = Vec::new();
    for (u, c) in &a.parts().unit {
        for (v, d) in &b.parts().unit {
            unit.push((at(*u, *v), k.mul(c, d)));
        }
    }
    let mut comul = Vec::with_capacity(dim);
    let mut counit = Vec::with_capacity(dim);
    let mut antipode = Vec::with_capacity(dim);
    for x in 0..dim {
        let (i, j) = (x / db, x % db);
        let mut d = Vec::new();
        for (a1, a2, c) in a.comul_basis(i) {
            for (b1, b2, e) in b.comul_basis(j) {
                d.push((at(*a1, *b1), at(*a2, *b2), k.mul(c, e)));
            }
        }
        comul.push(d);
        counit.push(k.mul(a.counit_basis(i), b.counit_basis(j)));
        let mut s = Vec::new();
        for (u, c) in a.antipode_basis(i) {
            for (v, e) in b.antipode_basis(j) {
                s.push((at(*u, *v), k.mul(c, e)));
            }
        }
        antipode.push(s);
    }
    let (one_a, one_b) = (a.one(), b.one());
    let mut rad = Subspace::new(k, dim);
    let ra = a.radical_basis();
    for c in 0..ra.cols() {
        for j in 0..db {
            rad.insert(&kron(&ra.column(c), &unit_vec(k, db, j)));
        }
    }
    let rb = b.radical_basis();
    for c in 0..rb.cols() {
        for i in 0..da {
            rad.insert(&kron(&unit_vec(k, da, i), &rb.column(c)));
        }
    }
    let idempotents = a
        .idempotents()
        .iter()
        .flat_map(|e| {
            b.idempotents().iter().map(move |f| Idempotent {
                vector: kron(&e.vector, &f.vector),
                label: format!("{}|{}", e.label, f.label),
            })
        })
        .collect();
    let symbols = a
        .symbols()
        .iter()
        .map(|(s, v)| (format!("{s}_1"), kron(v, &one_b)))
        .chain(b.symbols().iter().map(|(s, v)| (format!("{s}_2"), kron(&one_a, v))))
        .collect();
    let radical_generators = a
        .radical_generators()
        .iter()
        .map(|v| kron(v, &one_b))
        .chain(b.radical_generators().iter().map(|v| kron(&one_a, v)))
        .collect();
    checked(HopfParts {
        name: format!("{}⊗{}", a.name(), b.name()),
        field: k.clone(),
        labels,
        mult,
        unit,
        comul,
        counit,
        antipode,
        radical: rad.basis_matrix(),
        idempotents,
        symbols,
        radical_generators,
        kind: AlgebraKind::Tensor(a.clone(), b.clone()),
    })
}

/// The smash coproduct `B ♮ k^G` for a group `G` acting on `B` by Hopf
/// automorphisms. As an algebra it is `B ⊗ k^G`; the coalgebra is twisted:
/// `Δ(b ⊗ p_g) = Σ_a (b_1 ⊗ p_a) ⊗ ((a^{-1}·b_2) ⊗ p_{a^{-1}g})`.
///
/// Basis `e_b ⊗ p_g ↦ b·|G| + g`.
pub fn smash_coproduct(base: &Arc<HopfAlgebra>, action: GroupAction) -> Result<HopfAlgebra, HopfError> {
    let k = base.field();
    let group = action.group().clone();
    for g in 0..group.order() {
        if action.map(g).rows() != base.dim() || action.map(g).field() != k {
            return Err(HopfError::NotAutomorphism("action does not match the algebra".into()));
        }
        super::action::check_hopf_automorphism(base, action.map(g))
            .map_err(|w| HopfError::NotAutomorphism(format!("{}: {w}", group.label(g))))?;
    }
    let ng = group.order();
    let db = base.dim();
    let dim = db * ng;
    let at = |b: usize, g: usize| b * ng + g;
    let labels = (0..dim)
        .map(|x| format!("{}#p_{}", base.labels()[x / ng], group.ident_label(x % ng)))
        .collect();
    let mut mult = Vec::with_capacity(dim * dim);
    for x in 0..dim {
        let (b, g) = (x / ng, x % ng);
        for y in 0..dim {
            let (b2, g2) = (y / ng, y % ng);
            if g != g2 {
                mult.push(Vec::new());
            } else {
                mult.push(
                    base.mul_basis(b, b2)
                        .iter()
                        .map(|(u, c)| (at(*u, g), c.clone()))
                        .collect(),
                );
            }
        }
    }
    let unit = base
        .parts()
        .unit
        .iter()
        .flat_map(|(u, c)| (0..ng).map(move |g| (at(*u, g), c.clone())))
        .collect();
    let images: Vec<Vec<SparseVec>> = (0..ng)
        .map(|g| (0..db).map(|j| action.apply_basis(g, j)).collect())
        .collect();
    let mut comul = Vec::with_capacity(dim);
    let mut counit = Vec::with_capacity(dim);
    let mut antipode = Vec::with_capacity(dim);
    for x in 0..dim {
        let (b, g) = (x / ng, x % ng);
        let mut d: Tensor2 = BTreeMap::new();
        for a in 0..ng {
            let ai = group.inv(a);
            let rest = group.mul(ai, g);
            for (b1, b2, c) in base.comul_basis(b) {
                for (u, e) in &images[ai][*b2] {
                    let slot = d.entry((at(*b1, a), at(*u, rest))).or_insert_with(|| k.zero());
                    *slot = k.add(slot, &k.mul(c, e));
                }
            }
        }
        comul.push(tensor_list(prune(k, d)));
        counit.push(if g == 0 { base.counit_basis(b).clone() } else { k.zero() });
        let gi = group.inv(g);
        let mut s: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (v, c) in base.antipode_basis(b) {
            for (u, e) in &images[gi][*v] {
                let slot = s.entry(at(*u, gi)).or_insert_with(|| k.zero());
                *slot = k.add(slot, &k.mul(c, e));
            }
        }
        antipode.push(prune(k, s).into_iter().collect());
    }
    let rb = base.radical_basis();
    let mut rad_cols = Vec::new();
    for c in 0..rb.cols() {
        let col = rb.column(c);
        for g in 0..ng {
            let mut v = vec![k.zero(); dim];
            for (b, x) in col.iter().enumerate() {
                v[at(b, g)] = x.clone();
            }
            rad_cols.push(v);
        }
    }
    let spread = |v: &[Scalar], g: Option<usize>| -> Vec<Scalar> {
        let mut w = vec![k.zero(); dim];
        for (b, x) in v.iter().enumerate() {
            match g {
                Some(g) => w[at(b, g)] = x.clone(),
                None => {
                    for h in 0..ng {
                        w[at(b, h)] = x.clone();
                    }
                }
            }
        }
        w
    };
    let idempotents = base
        .idempotents()
        .iter()
        .flat_map(|e| {
            (0..ng).map(|g| Idempotent {
                vector: spread(&e.vector, Some(g)),
                label: format!("{}#p_{}", e.label, group.ident_label(g)),
            })
        })
        .collect();
    let one_b = base.one();
    let symbols = base
        .symbols()
        .iter()
        .map(|(s, v)| (s.clone(), spread(v, None)))
        .chain((0..ng).map(|g| (format!("p_{}", group.ident_label(g)), spread(&one_b, Some(g)))))
        .collect();
    let radical_generators = base.radical_generators().iter().map(|v| spread(v, None)).collect();
    checked(HopfParts {
        name: format!("{}#k^({})", base.name(), group_name(&group)),
        field: k.clone(),
        labels,
        mult,
        unit,
        comul,
        counit,
        antipode,
        radical: columns_matrix(k, dim, &rad_cols),
        idempotents,
        symbols,
        radical_generators,
        kind: AlgebraKind::Smash {
            base: base.clone(),
            action,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn cyclic_group_algebra_over_f2() {
        let a = group_algebra(&AbelianGroup::new(&[2], "g"), &f(2)).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.radical_basis().cols(), 1);
        let g = a.parse_element("g").unwrap();
        assert_eq!(a.mul(&g, &g), a.one());
        assert!(a.antipode_squared_is_identity());
    }

    #[test]
    fn klein_four_radical() {
        let a = group_algebra(&AbelianGroup::new(&[2, 2], "g"), &f(2)).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.radical_basis().cols(), 3);
        assert_eq!(a.idempotents().len(), 1);
    }

    #[test]
    fn semisimple_non_split_group_algebra() {
        let a = group_algebra(&AbelianGroup::new(&[3], "g"), &f(2)).unwrap();
        assert_eq!(a.radical_basis().cols(), 0);
        assert!(!a.is_split_basic());
        let b = group_algebra(&AbelianGroup::new(&[3], "g"), &Field::gf(2, 2).unwrap()).unwrap();
        assert_eq!(b.idempotents().len(), 3);
    }

    #[test]
    fn mixed_order_group_rejected() {
        let r = group_algebra(&AbelianGroup::new(&[6], "g"), &f(2));
        assert!(matches!(r, Err(HopfError::UnsupportedAlgebra(_))));
    }

    #[test]
    fn dual_group_algebra_is_semisimple() {
        let a = dual_group_algebra(&AbelianGroup::new(&[2, 2], "g"), &f(2)).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.idempotents().len(), 4);
        assert_eq!(a.counit(&a.parse_element("p_g1").unwrap()), f(2).zero());
    }

    #[test]
    fn quantum_a3_relations() {
        let k = Field::cyclotomic(3).unwrap();
        let a = quantum_elementary_abelian(1, 3, &k).unwrap();
        assert_eq!(a.dim(), 9);
        let x = a.parse_element("x").unwrap();
        let g = a.parse_element("g").unwrap();
        assert!(a.pow(&x, 3).iter().all(|c| k.is_zero(c)));
        assert!(a.pow(&x, 2).iter().any(|c| !k.is_zero(c)));
        let gx = a.mul(&g, &x);
        let xg = a.mul(&x, &g);
        assert_eq!(gx, a.scale(&k.generator(), &xg));
        assert_eq!(a.pow(&g, 3), a.one());
        assert_eq!(a.radical_basis().cols(), 6);
        assert_eq!(a.idempotents().len(), 3);
        assert!(!a.antipode_squared_is_identity());
    }

    #[test]
    fn quantum_rank_two_over_rationals() {
        let k = Field::cyclotomic(2).unwrap();
        let a = quantum_elementary_abelian(2, 2, &k).unwrap();
        assert_eq!(a.dim(), 16);
        let x1 = a.parse_element("x1").unwrap();
        let g1 = a.parse_element("g1").unwrap();
        let x2 = a.parse_element("x2").unwrap();
        assert_eq!(a.mul(&g1, &x1), a.scale(&k.from_int(-1), &a.mul(&x1, &g1)));
        assert_eq!(
            a.mul(&a.parse_element("g2").unwrap(), &x1),
            a.mul(&x1, &a.parse_element("g2").unwrap())
        );
        assert_eq!(a.mul(&x1, &x2), a.mul(&x2, &x1));
    }

    #[test]
    fn missing_root_of_unity() {
        let r = quantum_elementary_abelian(1, 3, &f(2));
        assert!(matches!(r, Err(HopfError::NoPrimitiveRoot(_, 3))));
    }

    #[test]
    fn tensor_and_smash_dimensions() {
        let k = f(2);
        let e = Arc::new(group_algebra(&AbelianGroup::new(&[2, 2], "g"), &k).unwrap());
        let act = GroupAction::swap_generators(&e).unwrap();
        let s = smash_coproduct(&e, act).unwrap();
        assert_eq!(s.dim(), 8);
        assert_eq!(s.radical_basis().cols(), 6);
        assert_eq!(s.idempotents().len(), 2);
        let c = Arc::new(group_algebra(&AbelianGroup::new(&[2], "g"), &k).unwrap());
        let t = tensor_algebra(&c, &c).unwrap();
        assert_eq!(t.dim(), 4);
        assert_eq!(t.radical_basis().cols(), 3);
    }

    #[test]
    fn smash_coproduct_is_not_cocommutative() {
        let k = f(2);
        let e = Arc::new(group_algebra(&AbelianGroup::new(&[2, 2], "g"), &k).unwrap());
        let s = smash_coproduct(&e, GroupAction::swap_generators(&e).unwrap()).unwrap();
        let x = s.parse_element("g1").unwrap();
        let d = s.comul(&x);
        let flipped: Tensor2 = d.iter().map(|((a, b), c)| ((*b, *a), c.clone())).collect();
        assert_ne!(d, flipped);
    }

    #[test]
    fn trivial_action_gives_tensor_coalgebra() {
        let k = f(2);
        let e = Arc::new(group_algebra(&AbelianGroup::new(&[2], "g"), &k).unwrap());
        let h = AbelianGroup::new(&[2], "h");
        let s = smash_coproduct(&e, GroupAction::trivial(&e, h.clone())).unwrap();
        let t = tensor_algebra(&e, &Arc::new(dual_group_algebra(&h, &k).unwrap())).unwrap();
        assert_eq!(s.parts().mult.len(), t.parts().mult.len());
        for i in 0..s.dim() {
            let mut a = s.comul_basis(i).clone();
            let mut b = t.comul_basis(i).clone();
            a.sort_by_key(|x| (x.0, x.1));
            b.sort_by_key(|x| (x.0, x.1));
            assert_eq!(a, b);
        }
    }
}
