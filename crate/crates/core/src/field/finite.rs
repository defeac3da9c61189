//! Finite fields `F_{p^e}` with elements packed as base-`p` digit strings in a `u32`.
//!
//! The element `c_0 + c_1 w + ... + c_{e-1} w^{e-1}` is stored as
//! `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`. Prime-field elements therefore keep
//! the same encoding inside every extension, which makes lifting free.

use super::FieldError;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

pub(crate) fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Dense polynomials over F_p, coefficients low to high, no trailing zeros.
type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u64], f: &[u64], p: u64) -> Poly {
    let mut r: Poly = a.to_vec();
    let df = f.len() - 1;
    let lead_inv = mod_pow(f[df], p - 2, p);
    while r.len() > df {
        let top = r.len() - 1;
        let c = r[top] * lead_inv % p;
        if c != 0 {
            for (i, &fi) in f.iter().enumerate() {
                let idx = top - df + i;
                r[idx] = (r[idx] + p - c * fi % p) % p;
            }
        }
        r.pop();
        r = trim(r);
    }
    trim(r)
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(&trim(prod), f, p)
}

fn poly_powmod(base: &[u64], mut exp: u64, f: &[u64], p: u64) -> Poly {
    let mut acc: Poly = vec![1];
    let mut b = poly_rem(base, f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_mulmod(&acc, &b, f, p);
        }
        b = poly_mulmod(&b, &b, f, p);
        exp >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

/// Rabin's irreducibility test for a monic polynomial of degree `e` over `F_p`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let e = f.len() as u64 - 1;
    if e == 0 {
        return false;
    }
    if e == 1 {
        return true;
    }
    // No roots in F_p: a cheap necessary condition, decisive for e <= 3.
    let has_root = (0..p).any(|x| {
        let mut v = 0;
        for &c in f.iter().rev() {
            v = (v * x + c) % p;
        }
        v == 0
    });
    if has_root {
        return false;
    }
    let x: Poly = vec![0, 1];
    // x^{p^k} mod f for k = 0..=e
    let mut frob = vec![poly_rem(&x, f, p)];
    for k in 1..=e as usize {
        let next = poly_powmod(&frob[k - 1], p, f, p);
        frob.push(next);
    }
    if !poly_sub(&frob[e as usize], &x, p).is_empty() {
        return false;
    }
    for q in prime_factors(e) {
        let g = poly_gcd(f, &poly_sub(&frob[(e / q) as usize], &x, p), p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

#[derive(Debug)]
pub struct FiniteField {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    // Discrete log tables, only for e > 1. exp has length q - 1.
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl FiniteField {
    pub(crate) fn new(p: u32, e: u32, modulus: Option<Vec<u32>>) -> Result<Self, FieldError> {
        if !is_prime(p as u64) {
            return Err(FieldError::NonPrimeP(p as u64));
        }
        if e == 0 {
            return Err(FieldError::BadModulus("extension degree must be positive".into()));
        }
        let q = (p as u64).checked_pow(e).filter(|&q| q <= MAX_ORDER);
        let Some(q) = q else {
            return Err(FieldError::TooLarge { p: p as u64, e });
        };
        let modulus: Vec<u64> = match modulus {
            Some(m) => {
                if m.len() != e as usize + 1 || m[e as usize] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(FieldError::BadModulus(format!(
                        "expected monic coefficient list of length {} with entries below {p}",
                        e + 1
                    )));
                }
                let m: Vec<u64> = m.iter().map(|&c| c as u64).collect();
                if !is_irreducible(&m, p as u64) {
                    return Err(FieldError::ReducibleModulus);
                }
                m
            }
            None => default_modulus(p as u64, e),
        };
        let mut field = FiniteField {
            p,
            e,
            q: q as u32,
            modulus: modulus.iter().map(|&c| c as u32).collect(),
            exp: Vec::new(),
            log: Vec::new(),
        };
        if e > 1 {
            field.build_log_tables();
        }
        Ok(field)
    }

    fn encode(&self, poly: &[u64]) -> u32 {
        let mut v = 0u64;
        for &c in poly.iter().rev() {
            v = v * self.p as u64 + c;
        }
        v as u32
    }

    fn decode(&self, mut a: u32) -> Poly {
        let mut out = Vec::with_capacity(self.e as usize);
        for _ in 0..self.e {
            out.push((a % self.p) as u64);
            a /= self.p;
        }
        trim(out)
    }

    fn build_log_tables(&mut self) {
        let p = self.p as u64;
        let f: Vec<u64> = self.modulus.iter().map(|&c| c as u64).collect();
        let n = self.q as usize - 1;
        for candidate in 2..self.q {
            let g = self.decode(candidate);
            let mut exp = Vec::with_capacity(n);
            let mut cur: Poly = vec![1];
            let mut ok = true;
            for i in 0..n {
                let code = self.encode(&cur);
                if i > 0 && code == 1 {
                    ok = false;
                    break;
                }
                exp.push(code);
                cur = poly_mulmod(&cur, &g, &f, p);
            }
            if ok {
                let mut log = vec![0u32; self.q as usize];
                for (i, &v) in exp.iter().enumerate() {
                    log[v as usize] = i as u32;
                }
                self.exp = exp;
                self.log = log;
                return;
            }
        }
        unreachable!("multiplicative group of a finite field is cyclic");
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.e == 1 {
            let s = a + b;
            if s >= self.p {
                s - self.p
            } else {
                s
            }
        } else if self.p == 2 {
            a ^ b
        } else {
            let (mut a, mut b) = (a, b);
            let mut out = 0;
            let mut place = 1;
            for _ in 0..self.e {
                let d = (a % self.p + b % self.p) % self.p;
                out += d * place;
                place *= self.p;
                a /= self.p;
                b /= self.p;
            }
            out
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.e == 1 {
            if a == 0 {
                0
            } else {
                self.p - a
            }
        } else if self.p == 2 {
            a
        } else {
            let mut a = a;
            let mut out = 0;
            let mut place = 1;
            for _ in 0..self.e {
                let d = (self.p - a % self.p) % self.p;
                out += d * place;
                place *= self.p;
                a /= self.p;
            }
            out
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.e == 1 {
            ((a as u64 * b as u64) % self.p as u64) as u32
        } else {
            let n = self.q - 1;
            let s = self.log[a as usize] + self.log[b as usize];
            self.exp[(if s >= n { s - n } else { s }) as usize]
        }
    }

    /// Inverse of a nonzero element.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        if self.e == 1 {
            mod_pow(a as u64, self.p as u64 - 2, self.p as u64) as u32
        } else {
            let n = self.q - 1;
            self.exp[((n - self.log[a as usize]) % n) as usize]
        }
    }

    pub fn pow(&self, a: u32, mut k: u64) -> u32 {
        let mut acc = 1;
        let mut b = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            k >>= 1;
        }
        acc
    }

    /// The class of `w` (the modulus variable). Equals 1 in a prime field.
    pub fn generator(&self) -> u32 {
        if self.e == 1 {
            1
        } else {
            self.p
        }
    }

    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    /// Base-`p` coefficients of `a`, low degree first, always of length `e`.
    pub fn coefficients(&self, mut a: u32) -> Vec<u32> {
        (0..self.e)
            .map(|_| {
                let c = a % self.p;
                a /= self.p;
                c
            })
            .collect()
    }
}

/// Smallest monic primitive polynomial of degree `e` over `F_p`, in the
/// order of the base-`p` encoding of its lower coefficients.
pub(crate) fn default_modulus(p: u64, e: u32) -> Vec<u64> {
    if e == 1 {
        return vec![0, 1];
    }
    let q = p.pow(e);
    for code in 1..q {
        let mut f = Vec::with_capacity(e as usize + 1);
        let mut c = code;
        for _ in 0..e {
            f.push(c % p);
            c /= p;
        }
        f.push(1);
        if !is_irreducible(&f, p) {
            continue;
        }
        // primitive: x has order q - 1
        let order = q - 1;
        let x = vec![0, 1];
        let primitive = prime_factors(order)
            .into_iter()
            .all(|r| poly_powmod(&x, order / r, &f, p) != vec![1]);
        if primitive {
            return f;
        }
    }
    unreachable!("primitive polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_moduli_for_characteristic_two() {
        assert_eq!(default_modulus(2, 2), vec![1, 1, 1]);
        assert_eq!(default_modulus(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(default_modulus(2, 4), vec![1, 1, 0, 0, 1]);
    }

    #[test]
    fn rabin_test_matches_root_test_for_small_degrees() {
        // every monic cubic over F_3 without roots is irreducible
        for code in 0..27u64 {
            let f = vec![code % 3, (code / 3) % 3, code / 9, 1];
            let rootless = (0..3).all(|x| (f[0] + f[1] * x + f[2] * x * x + x * x * x) % 3 != 0);
            assert_eq!(is_irreducible(&f, 3), rootless, "{f:?}");
        }
        // x^4 + x^2 + 1 = (x^2+x+1)^2 over F_2 has no roots but is reducible
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
    }

    #[test]
    fn f4_inverse_of_w() {
        let f = FiniteField::new(2, 2, None).unwrap();
        let w = f.generator();
        // w + 1 is encoded as 3
        assert_eq!(f.inv(w), 3);
        assert_eq!(f.mul(w, 3), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(FiniteField::new(4, 1, None), Err(FieldError::NonPrimeP(4))));
        assert!(matches!(
            FiniteField::new(2, 2, Some(vec![1, 0, 1])),
            Err(FieldError::ReducibleModulus)
        ));
    }
}
