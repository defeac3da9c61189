use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::Serialize;

use crate::field::{Field, Scalar};

/// Exponent vector, ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Monomial {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `n` variables `l1..ln`; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(field: &Field, nvars: usize) -> MultiPoly {
        MultiPoly {
            field: field.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &Field, nvars: usize, c: Scalar) -> MultiPoly {
        let mut p = MultiPoly::zero(field, nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn var(field: &Field, nvars: usize, i: usize) -> MultiPoly {
        let mut p = MultiPoly::zero(field, nvars);
        p.add_term(Monomial::var(nvars, i), field.one());
        p
    }

    /// `Σ c_i l_i`.
    pub fn linear(field: &Field, coeffs: &[Scalar]) -> MultiPoly {
        let mut p = MultiPoly::zero(field, coeffs.len());
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(coeffs.len(), i), c.clone());
        }
        p
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        let k = &self.field;
        if k.is_zero(&c) {
            return;
        }
        let v = match self.terms.get(&m) {
            Some(x) => k.add(x, &c),
            None => c,
        };
        if k.is_zero(&v) {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, v);
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), self.field.neg(c));
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.field, self.nvars);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), self.field.mul(c, x));
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.field, self.nvars);
        for (m, x) in &self.terms {
            for (n, y) in &other.terms {
                out.add_term(m.mul(n), self.field.mul(x, y));
            }
        }
        out
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Scaled so that the leading coefficient is 1.
    pub fn monic(&self) -> MultiPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field.inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// If this is `c · l_i^d`, returns `i`.
    pub fn pure_power_variable(&self) -> Option<usize> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, _) = self.terms.iter().next()?;
        let nz: Vec<usize> = (0..self.nvars).filter(|&i| m.0[i] > 0).collect();
        (nz.len() == 1).then(|| nz[0])
    }

    /// Value at a point whose coordinates lie in `at_field`, which must contain
    /// the coefficient field.
    pub fn eval(&self, at_field: &Field, point: &[Scalar]) -> Scalar {
        let mut acc = at_field.zero();
        for (m, c) in &self.terms {
            let mut t = at_field.embed(&self.field, c).expect("coefficients embed");
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = at_field.mul(&t, &at_field.pow(x, e as u64));
                }
            }
            acc = at_field.add(&acc, &t);
        }
        acc
    }

    /// Univariate coefficients (lowest degree first) of `f(t, 1)` for a
    /// polynomial in two variables.
    pub fn dehomogenize(&self) -> Vec<Scalar> {
        assert_eq!(self.nvars, 2, "two variables expected");
        let deg = self.terms.keys().map(|m| m.0[0]).max().unwrap_or(0) as usize;
        let mut out = vec![self.field.zero(); deg + 1];
        for (m, c) in &self.terms {
            let i = m.0[0] as usize;
            out[i] = self.field.add(&out[i], c);
        }
        out
    }

    /// Text form in the variables `l1, l2, ...`, highest term first.
    pub fn format(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let k = &self.field;
        let terms: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let vars: Vec<String> =
                    m.0.iter()
                        .enumerate()
                        .filter(|(_, &e)| e > 0)
                        .map(|(i, &e)| {
                            if e == 1 {
                                format!("l{}", i + 1)
                            } else {
                                format!("l{}^{e}", i + 1)
                            }
                        })
                        .collect();
                let cs = k.format(c);
                match (vars.is_empty(), cs.as_str()) {
                    (true, _) => cs,
                    (false, "1") => vars.join("*"),
                    (false, _) if cs.contains(['+', '-', '*']) => format!("({cs})*{}", vars.join("*")),
                    (false, _) => format!("{cs}*{}", vars.join("*")),
                }
            })
            .collect();
        terms.join(" + ")
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.format())
    }
}

/// Determinant of a square matrix of polynomials by cofactor expansion,
/// memoized over column subsets.
pub fn poly_determinant(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let r = m.len();
    let field = m[0][0].field().clone();
    let nvars = m[0][0].nvars();
    // memo[mask] = determinant of rows r-|mask|..r restricted to the columns in mask
    let mut memo: Vec<Option<MultiPoly>> = vec![None; 1 << r];
    memo[0] = Some(MultiPoly::constant(&field, nvars, field.one()));
    for mask in 1usize..(1 << r) {
        let size = mask.count_ones() as usize;
        let row = r - size;
        let mut acc = MultiPoly::zero(&field, nvars);
        let mut sign_pos = 0;
        for c in 0..r {
            if mask & (1 << c) == 0 {
                continue;
            }
            let entry = &m[row][c];
            if !entry.is_zero() {
                let sub = memo[mask & !(1 << c)].as_ref().expect("smaller subsets first");
                if !sub.is_zero() {
                    let t = entry.mul(sub);
                    acc = if sign_pos % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
                }
            }
            sign_pos += 1;
        }
        memo[mask] = Some(acc);
    }
    memo[(1 << r) - 1].take().expect("full determinant")
}

/// Monic gcd of univariate polynomials (coefficients lowest degree first).
pub fn univariate_gcd(k: &Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let trim = |v: &[Scalar]| -> Vec<Scalar> {
        let mut v = v.to_vec();
        while v.last().is_some_and(|c| k.is_zero(c)) {
            v.pop();
        }
        v
    };
    let (mut x, mut y) = (trim(a), trim(b));
    while !y.is_empty() {
        // x mod y
        let lead_inv = k.inv(y.last().expect("nonzero")).expect("nonzero lead");
        while x.len() >= y.len() {
            let c = k.mul(x.last().expect("nonempty"), &lead_inv);
            let shift = x.len() - y.len();
            for (i, yc) in y.iter().enumerate() {
                x[shift + i] = k.sub(&x[shift + i], &k.mul(&c, yc));
            }
            x = trim(&x);
            if x.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
    if let Some(l) = x.last() {
        let inv = k.inv(l).expect("nonzero");
        x = x.iter().map(|c| k.mul(c, &inv)).collect();
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn graded_lex_order() {
        let a = Monomial(vec![2, 0]);
        let b = Monomial(vec![0, 3]);
        let c = Monomial(vec![1, 1]);
        assert!(a < b);
        assert!(c < a);
    }

    #[test]
    fn determinant_of_symbolic_matrix() {
        let k = Field::prime(3).unwrap();
        let l1 = MultiPoly::var(&k, 2, 0);
        let l2 = MultiPoly::var(&k, 2, 1);
        let z = MultiPoly::zero(&k, 2);
        let m = vec![vec![l1.clone(), l2.clone()], vec![z.clone(), l1.clone()]];
        assert_eq!(poly_determinant(&m), l1.mul(&l1));
        let m = vec![vec![l1.clone(), l2.clone()], vec![l2.clone(), l1.clone()]];
        assert_eq!(poly_determinant(&m), l1.mul(&l1).sub(&l2.mul(&l2)));
        assert!(poly_determinant(&m).is_homogeneous());
    }

    #[test]
    fn evaluation_in_extension() {
        let k = f2();
        let f4 = Field::gf(2, 2).unwrap();
        let p = MultiPoly::var(&k, 2, 0)
            .mul(&MultiPoly::var(&k, 2, 1))
            .add(&MultiPoly::var(&k, 2, 0).mul(&MultiPoly::var(&k, 2, 0)));
        let w = f4.generator();
        let v = p.eval(&f4, &[w.clone(), f4.one()]);
        assert_eq!(v, f4.add(&w, &f4.mul(&w, &w)));
        assert_eq!(p.format(), "l1^2 + l1*l2");
    }

    #[test]
    fn gcd_of_univariates() {
        let k = f2();
        // (t+1)^2 = t^2+1 and t^2+t = t(t+1)
        let a = vec![k.one(), k.zero(), k.one()];
        let b = vec![k.zero(), k.one(), k.one()];
        assert_eq!(univariate_gcd(&k, &a, &b), vec![k.one(), k.one()]);
        let c = vec![k.one(), k.one(), k.one()];
        assert_eq!(univariate_gcd(&k, &a, &c), vec![k.one()]);
    }
}
