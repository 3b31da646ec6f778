//! Named group families.

use super::{Elem, FiniteGroup, Subset};
use crate::error::{Error, Result};

impl FiniteGroup {
    /// `C_n`; element `i` is `a^i`.
    pub fn cyclic(n: usize) -> Result<Self> {
        Ok(Self::from_fn(format!("C{n}"), n, |a, b| (a + b) % n)?
            .with_labels(if n > 1 { vec![("a".into(), 1)] } else { Vec::new() }))
    }

    /// `C_2^k`; element `i` is the vector whose bits are the binary digits of `i`,
    /// so `x_{j+1}` is `1 << j`.
    pub fn elementary_abelian(k: u32) -> Result<Self> {
        let n = 1usize
            .checked_shl(k)
            .filter(|&n| n <= super::MAX_ORDER)
            .ok_or_else(|| Error::Resource(format!("C2^{k} is too large")))?;
        let labels = (0..k).map(|j| (format!("x{}", j + 1), 1usize << j)).collect();
        Ok(Self::from_fn(format!("C2^{k}"), n, |a, b| a ^ b)?.with_labels(labels))
    }

    /// `C_{m_1} x ... x C_{m_r}` in mixed radix: the coordinate of the first
    /// factor is the most significant digit. Generators are labelled `a1, a2, ...`.
    pub fn abelian(moduli: &[usize]) -> Result<Self> {
        if moduli.contains(&0) {
            return Err(Error::Argument("cyclic factors must be non-trivial".into()));
        }
        let n: usize = moduli.iter().product();
        let strides: Vec<usize> = (0..moduli.len())
            .map(|i| moduli[i + 1..].iter().product())
            .collect();
        let name = if moduli.is_empty() {
            "C1".to_string()
        } else {
            abelian_name(moduli)
        };
        let g = Self::from_fn(name, n.max(1), |a, b| {
            let mut c = 0;
            for (i, &m) in moduli.iter().enumerate() {
                let s = strides[i];
                let x = (a / s) % m;
                let y = (b / s) % m;
                c += ((x + y) % m) * s;
            }
            c
        })?;
        let labels = strides
            .iter()
            .enumerate()
            .filter(|&(i, _)| moduli[i] > 1)
            .map(|(i, &s)| (format!("a{}", i + 1), s))
            .collect();
        Ok(g.with_labels(labels))
    }

    /// `G x H`; the pair `(g, h)` has index `g * |H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self> {
        let m = h.order();
        let p = Self::from_fn(format!("{}x{}", g.name(), h.name()), g.order() * m, |a, b| {
            g.mul(a / m, b / m) * m + h.mul(a % m, b % m)
        })?;
        let mut labels: Vec<(String, Elem)> =
            g.labels().iter().map(|(s, e)| (s.clone(), e * m)).collect();
        for (s, e) in h.labels() {
            let mut name = s.clone();
            while labels.iter().any(|(t, _)| *t == name) {
                name.push('\'');
            }
            labels.push((name, *e));
        }
        Ok(p.with_labels(labels))
    }

    /// `Q_8` with `0 = 1, 1 = -1, 2 = i, 3 = -i, 4 = j, 5 = -j, 6 = k, 7 = -k`.
    pub fn quaternion8() -> Self {
        // Unit products on the basis (1, i, j, k): (sign flip, basis index).
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        Self::from_fn("Q8", 8, |a, b| {
            let (flip, basis) = UNIT[a / 2][b / 2];
            2 * basis + ((a % 2) ^ (b % 2) ^ flip)
        })
        .expect("quaternion table is a group")
        .with_labels(vec![("i".into(), 2), ("j".into(), 4)])
    }

    /// The generalised dihedral group `<tau, A>` with `tau a tau = a^{-1}`.
    /// Element `a` of `A` keeps its index; `tau * a` is `|A| + a`.
    pub fn generalized_dihedral(a: &FiniteGroup) -> Result<Self> {
        if !a.is_abelian() {
            return Err(Error::Argument(format!(
                "generalised dihedral group needs an abelian base, {} is not",
                a.name()
            )));
        }
        let m = a.order();
        let name = if a.labels().len() == 1 && a.order() > 2 {
            format!("D{m}")
        } else {
            format!("Dih({})", a.name())
        };
        let g = Self::from_fn(name, 2 * m, |x, y| {
            let (s, u) = (x / m, x % m);
            let (t, v) = (y / m, y % m);
            let u = if t == 1 { a.inv(u) } else { u };
            ((s + t) % 2) * m + a.mul(u, v)
        })?;
        let mut labels = a.labels().to_vec();
        labels.push(("t".into(), m));
        Ok(g.with_labels(labels))
    }

    /// Dihedral group of order `2n`.
    pub fn dihedral(n: usize) -> Result<Self> {
        Self::generalized_dihedral(&Self::cyclic(n)?)
    }

    /// `D_4 o D_4`: the direct square of `D_4` with the two centres identified
    /// (the extraspecial group of order 32 of plus type).
    pub fn central_product_d4d4() -> Self {
        let d4 = Self::dihedral(4).expect("D4");
        let sq = Self::direct_product(&d4, &d4).expect("D4 x D4");
        // The centre of D4 in our encoding is {0, 2} (the half-turn a^2).
        let z = 2 * 8 + 2;
        let n = Subset::from_elems(64, [0, z]);
        let (q, _) = sq.quotient(&n).expect("diagonal centre is normal");
        q.with_name("D4oD4")
    }
}

fn abelian_name(moduli: &[usize]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < moduli.len() {
        let mut j = i;
        while j < moduli.len() && moduli[j] == moduli[i] {
            j += 1;
        }
        if j - i == 1 {
            parts.push(format!("C{}", moduli[i]));
        } else {
            parts.push(format!("C{}^{}", moduli[i], j - i));
        }
        i = j;
    }
    parts.join("x")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_convention() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(c4.mul(1, 1), 2);
        for x in c4.elements() {
            assert_eq!(c4.mul(0, x), x);
        }
    }

    #[test]
    fn quaternion_labeling() {
        let q8 = FiniteGroup::quaternion8();
        let (i, j, k) = (2, 4, 6);
        assert_eq!(q8.mul(i, j), k);
        assert_eq!(q8.mul(j, i), 7);
        assert_eq!(q8.mul(i, i), 1);
        assert_eq!(q8.mul(j, k), i);
        assert_eq!(q8.mul(k, i), j);
        assert!((2..8).all(|x| q8.order_of(x) == 4));
    }

    #[test]
    fn elementary_abelian_orders() {
        let e = FiniteGroup::elementary_abelian(3).unwrap();
        assert_eq!(e.order(), 8);
        assert!((1..8).all(|x| e.order_of(x) == 2));
    }

    #[test]
    fn generalized_dihedral_of_c4_is_d4() {
        let d4 = FiniteGroup::generalized_dihedral(&FiniteGroup::cyclic(4).unwrap()).unwrap();
        assert_eq!(d4.order(), 8);
        assert!((4..8).all(|x| d4.order_of(x) == 2));
        assert_eq!(d4.center().to_vec(), vec![0, 2]);
        assert!(FiniteGroup::generalized_dihedral(&FiniteGroup::quaternion8()).is_err());
    }

    #[test]
    fn d4d4_is_extraspecial() {
        let g = FiniteGroup::central_product_d4d4();
        assert_eq!(g.order(), 32);
        assert_eq!(g.center().len(), 2);
        assert_eq!(g.exponent(), 4);
    }

    #[test]
    fn abelian_mixed_radix() {
        let g = FiniteGroup::abelian(&[8, 2]).unwrap();
        assert_eq!(g.name(), "C8xC2");
        assert_eq!(g.order_of(2), 8);
        assert_eq!(g.order_of(1), 2);
        assert_eq!(FiniteGroup::abelian(&[4, 2, 2]).unwrap().name(), "C4xC2^2");
    }
}
