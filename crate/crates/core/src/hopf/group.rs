/// A finite abelian group `Z/n_1 × ... × Z/n_r` with named generators.
///
/// Elements are exponent vectors, indexed in lexicographic order with the
/// first generator most significant; the identity has index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    orders: Vec<u32>,
    names: Vec<String>,
}

impl AbelianGroup {
    /// Generators are named `g` (one factor) or `g1, g2, ...`.
    pub fn new(orders: &[u32], prefix: &str) -> AbelianGroup {
        assert!(orders.iter().all(|&n| n >= 1), "cyclic factor orders must be positive");
        let names = if orders.len() == 1 {
            vec![prefix.to_string()]
        } else {
            (1..=orders.len()).map(|i| format!("{prefix}{i}")).collect()
        };
        AbelianGroup {
            orders: orders.to_vec(),
            names,
        }
    }

    pub fn with_names(orders: &[u32], names: Vec<String>) -> AbelianGroup {
        assert_eq!(orders.len(), names.len());
        AbelianGroup {
            orders: orders.to_vec(),
            names,
        }
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> usize {
        self.orders.iter().map(|&n| n as usize).product()
    }

    /// Least common multiple of the factor orders.
    pub fn exponent(&self) -> u32 {
        self.orders.iter().fold(1, |acc, &n| num_integer::lcm(acc, n))
    }

    pub fn index(&self, exps: &[u32]) -> usize {
        exps.iter()
            .zip(&self.orders)
            .fold(0, |acc, (&a, &n)| acc * n as usize + (a % n) as usize)
    }

    pub fn exponents(&self, mut idx: usize) -> Vec<u32> {
        let mut out = vec![0; self.orders.len()];
        for (slot, &n) in out.iter_mut().zip(&self.orders).rev() {
            *slot = (idx % n as usize) as u32;
            idx /= n as usize;
        }
        out
    }

    pub fn generator(&self, i: usize) -> usize {
        let mut e = vec![0; self.rank()];
        e[i] = 1;
        self.index(&e)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.exponents(a), self.exponents(b));
        let s: Vec<u32> = x.iter().zip(&y).map(|(p, q)| p + q).collect();
        self.index(&s)
    }

    pub fn inv(&self, a: usize) -> usize {
        let x = self.exponents(a);
        let s: Vec<u32> = x.iter().zip(&self.orders).map(|(&p, &n)| (n - p) % n).collect();
        self.index(&s)
    }

    /// `1`, `h`, `g1*g2^2`, ...
    pub fn label(&self, idx: usize) -> String {
        let parts: Vec<String> = self
            .exponents(idx)
            .iter()
            .zip(&self.names)
            .filter(|(&a, _)| a > 0)
            .map(|(&a, n)| if a == 1 { n.clone() } else { format!("{n}^{a}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// Label usable as part of an identifier: `h^2` becomes `h_2`, `*` is dropped.
    pub fn ident_label(&self, idx: usize) -> String {
        self.label(idx).replace('*', "").replace('^', "_")
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        (0..self.order()).find(|&i| self.label(i) == label || self.ident_label(i) == label)
    }

    /// Whether the order is a power of `p`.
    pub fn is_p_group(&self, p: u32) -> bool {
        let mut n = self.order();
        if p < 2 {
            return n == 1;
        }
        while n.is_multiple_of(p as usize) {
            n /= p as usize;
        }
        n == 1
    }

    pub fn is_elementary_abelian(&self, p: u32) -> bool {
        self.orders.iter().all(|&n| n == p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_round_trips() {
        let g = AbelianGroup::new(&[2, 3], "g");
        assert_eq!(g.order(), 6);
        for i in 0..6 {
            assert_eq!(g.index(&g.exponents(i)), i);
            assert_eq!(g.mul(i, g.inv(i)), 0);
        }
        assert_eq!(g.label(g.generator(1)), "g2");
        assert_eq!(g.label(5), "g1*g2^2");
        assert_eq!(g.find("g1*g2^2"), Some(5));
        assert_eq!(g.exponent(), 6);
    }

    #[test]
    fn p_group_detection() {
        assert!(AbelianGroup::new(&[2, 4], "g").is_p_group(2));
        assert!(!AbelianGroup::new(&[2, 3], "g").is_p_group(2));
        assert!(AbelianGroup::new(&[2, 2], "g").is_elementary_abelian(2));
    }
}
