//! Cyclotomic fields `Q(ζ_n)` as `Q[x]/(Φ_n)` with exact rational coefficients.

use smallvec::SmallVec;

use super::rational::Rational;
use super::FieldError;

/// Coefficient vector of length `φ(n)`, low degree first.
pub type CycElem = SmallVec<[Rational; 2]>;

/// Integer coefficients of the `n`-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let div = cyclotomic_polynomial(d);
            num = exact_div(&num, &div);
        }
    }
    num
}

fn exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    // b is monic
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let dq = a.len() - 1 - db;
    let mut q = vec![0i64; dq + 1];
    for k in (0..=dq).rev() {
        let c = r[k + db];
        q[k] = c;
        for (i, &bi) in b.iter().enumerate() {
            r[k + i] -= c * bi;
        }
    }
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

#[derive(Debug)]
pub struct CyclotomicField {
    n: u32,
    phi: usize,
    modulus: Vec<i64>,
    // x^k mod Φ_n for k in 0..2φ-1
    powers: Vec<Vec<Rational>>,
}

impl CyclotomicField {
    pub(crate) fn new(n: i64) -> Result<Self, FieldError> {
        if !(1..=256).contains(&n) {
            return Err(FieldError::InvalidN(n));
        }
        let n = n as u32;
        let modulus = cyclotomic_polynomial(n);
        let phi = modulus.len() - 1;
        let mut powers: Vec<Vec<Rational>> = Vec::with_capacity(2 * phi);
        let mut cur = vec![Rational::ZERO; phi];
        cur[0] = Rational::ONE;
        for _ in 0..(2 * phi).max(2) {
            powers.push(cur.clone());
            // multiply by x and reduce the overflow coefficient
            let top = cur[phi - 1].clone();
            let mut next = vec![Rational::ZERO; phi];
            for i in (1..phi).rev() {
                next[i] = cur[i - 1].clone();
            }
            for (i, slot) in next.iter_mut().enumerate() {
                let c = Rational::from_int(modulus[i]);
                *slot = slot.sub(&top.mul(&c));
            }
            cur = next;
        }
        Ok(CyclotomicField {
            n,
            phi,
            modulus,
            powers,
        })
    }

    pub fn order_of_root(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    pub fn zero(&self) -> CycElem {
        SmallVec::from_elem(Rational::ZERO, self.phi)
    }

    pub fn from_rational(&self, r: Rational) -> CycElem {
        let mut v = self.zero();
        v[0] = r;
        v
    }

    /// ζ_n as the class of `x`.
    pub fn zeta(&self) -> CycElem {
        self.powers[1].iter().cloned().collect()
    }

    pub fn is_zero(&self, a: &CycElem) -> bool {
        a.iter().all(Rational::is_zero)
    }

    pub fn add(&self, a: &CycElem, b: &CycElem) -> CycElem {
        a.iter().zip(b.iter()).map(|(x, y)| x.add(y)).collect()
    }

    pub fn sub(&self, a: &CycElem, b: &CycElem) -> CycElem {
        a.iter().zip(b.iter()).map(|(x, y)| x.sub(y)).collect()
    }

    pub fn neg(&self, a: &CycElem) -> CycElem {
        a.iter().map(Rational::neg).collect()
    }

    pub fn mul(&self, a: &CycElem, b: &CycElem) -> CycElem {
        let phi = self.phi;
        if phi == 1 {
            return SmallVec::from_elem(a[0].mul(&b[0]), 1);
        }
        let mut prod = vec![Rational::ZERO; 2 * phi - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] = prod[i + j].add(&x.mul(y));
            }
        }
        let mut out: CycElem = prod[..phi].iter().cloned().collect();
        for (k, c) in prod.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (slot, r) in out.iter_mut().zip(&self.powers[k]) {
                if !r.is_zero() {
                    *slot = slot.add(&c.mul(r));
                }
            }
        }
        out
    }

    /// Inverse by solving the linear system `a · y = 1` in the power basis.
    pub fn inv(&self, a: &CycElem) -> Option<CycElem> {
        if self.is_zero(a) {
            return None;
        }
        let phi = self.phi;
        // column j of the multiplication matrix is a * x^j
        let mut cols: Vec<CycElem> = Vec::with_capacity(phi);
        for j in 0..phi {
            let xj: CycElem = self.powers[j].iter().cloned().collect();
            cols.push(self.mul(a, &xj));
        }
        // augmented rows: [M | e_0]
        let mut rows: Vec<Vec<Rational>> = (0..phi)
            .map(|i| {
                let mut r: Vec<Rational> = cols.iter().map(|c| c[i].clone()).collect();
                r.push(if i == 0 { Rational::ONE } else { Rational::ZERO });
                r
            })
            .collect();
        for col in 0..phi {
            let piv = (col..phi).find(|&r| !rows[r][col].is_zero())?;
            rows.swap(col, piv);
            let inv = rows[col][col].inv()?;
            for x in rows[col].iter_mut() {
                *x = x.mul(&inv);
            }
            for r in 0..phi {
                if r != col && !rows[r][col].is_zero() {
                    let f = rows[r][col].clone();
                    let pivot_row = rows[col].clone();
                    for (x, y) in rows[r].iter_mut().zip(pivot_row.iter()) {
                        *x = x.sub(&f.mul(y));
                    }
                }
            }
        }
        Some(rows.iter().map(|r| r[phi].clone()).collect())
    }

    /// Reduces an arbitrary-length coefficient vector modulo Φ_n.
    pub fn reduce(&self, coeffs: &[Rational]) -> CycElem {
        let mut acc = self.zero();
        let mut xpow = self.from_rational(Rational::ONE);
        let x = self.zeta();
        for c in coeffs {
            if !c.is_zero() {
                let term: CycElem = xpow.iter().map(|r| r.mul(c)).collect();
                acc = self.add(&acc, &term);
            }
            xpow = self.mul(&xpow, &x);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn zeta_in_degenerate_cases() {
        let q1 = CyclotomicField::new(1).unwrap();
        assert_eq!(q1.zeta()[0], Rational::ONE);
        let q2 = CyclotomicField::new(2).unwrap();
        assert_eq!(q2.zeta()[0], Rational::from_int(-1));
        assert!(matches!(CyclotomicField::new(0), Err(FieldError::InvalidN(0))));
    }
}
