//! Standard constructors. Each documents its element ordering.

use std::collections::HashMap;

use num_integer::Integer;

use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::numtheory;

/// Default cap on group order for products and parsed specs.
pub const DEFAULT_MAX_ORDER: usize = 512;

fn tabulate(
    order: usize,
    product: impl Fn(usize, usize) -> usize,
    labels: Vec<String>,
    spec: String,
) -> Result<FiniteGroup> {
    let mut table = Vec::with_capacity(order * order);
    for i in 0..order {
        for j in 0..order {
            table.push(product(i, j) as u32);
        }
    }
    FiniteGroup::from_table(order, table, labels, spec)
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => "e".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

/// `Z_n` with element `k` standing for `a^k`.
pub fn cyclic_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::TooSmall { min: 1, got: 0 });
    }
    let labels = (0..n).map(|k| power_label("a", k)).collect();
    tabulate(n, |i, j| (i + j) % n, labels, format!("Z:{n}"))
}

/// `D_n` of order `2n`: indices `0..n` are the rotations `a^i`, indices
/// `n..2n` are the reflections `a^i b`.
pub fn dihedral_group(n: usize) -> Result<FiniteGroup> {
    if n < 3 {
        return Err(Error::TooSmall { min: 3, got: n as u64 });
    }
    let labels = (0..n)
        .map(|i| power_label("a", i))
        .chain((0..n).map(|i| match i {
            0 => "b".to_string(),
            _ => format!("{} b", power_label("a", i)),
        }))
        .collect();
    // b a^j = a^-j b
    let product = |x: usize, y: usize| {
        let (i, xr) = (x % n, x >= n);
        let (j, yr) = (y % n, y >= n);
        match (xr, yr) {
            (false, false) => (i + j) % n,
            (false, true) => n + (i + j) % n,
            (true, false) => n + (i + n - j) % n,
            (true, true) => (i + n - j) % n,
        }
    };
    tabulate(2 * n, product, labels, format!("D:{n}"))
}

/// `U(Z_n)`: residues coprime to `n` in ascending order. `U(Z_1)` is the
/// trivial group on the residue 0.
pub fn units_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::TooSmall { min: 1, got: 0 });
    }
    let residues: Vec<usize> = if n == 1 { vec![0] } else { (1..n).filter(|x| x.gcd(&n) == 1).collect() };
    let index: HashMap<usize, usize> = residues.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let labels = residues.iter().map(|r| r.to_string()).collect();
    let product = |i: usize, j: usize| index[&(residues[i] * residues[j] % n)];
    tabulate(residues.len(), product, labels, format!("U:{n}"))
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    // lexicographic, identity first
    let mut current: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![current.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

fn is_even(p: &[u8]) -> bool {
    let inversions =
        (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    inversions % 2 == 0
}

fn cycle_notation(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut k = p[start] as usize;
        while k != start {
            seen[k] = true;
            cycle.push(k + 1);
            k = p[k] as usize;
        }
        let body: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        "()".to_string()
    } else {
        out
    }
}

fn permutation_group(perms: Vec<Vec<u8>>, spec: String) -> Result<FiniteGroup> {
    let index: HashMap<&[u8], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    let degree = perms[0].len();
    // (p q)(k) = p(q(k)): q acts first
    let product = |i: usize, j: usize| {
        let composed: Vec<u8> = (0..degree).map(|k| perms[i][perms[j][k] as usize]).collect();
        index[composed.as_slice()]
    };
    tabulate(perms.len(), product, labels, spec)
}

/// `S_n` for `1 <= n <= 6`, permutations in lexicographic order of their
/// one-line notation.
pub fn symmetric_group(n: usize) -> Result<FiniteGroup> {
    if !(1..=6).contains(&n) {
        return Err(Error::OutOfRange { got: n as u64, min: 1, max: 6 });
    }
    permutation_group(permutations(n), format!("S:{n}"))
}

/// `A_n` for `3 <= n <= 6`, even permutations in lexicographic order.
pub fn alternating_group(n: usize) -> Result<FiniteGroup> {
    if !(3..=6).contains(&n) {
        return Err(Error::OutOfRange { got: n as u64, min: 3, max: 6 });
    }
    let even = permutations(n).into_iter().filter(|p| is_even(p)).collect();
    permutation_group(even, format!("A:{n}"))
}

/// `(Z_p)^k`: element index `sum c_i p^i` is the vector `(c_0, .., c_{k-1})`.
pub fn elementary_abelian(p: usize, k: u32) -> Result<FiniteGroup> {
    if !numtheory::is_prime(p) {
        return Err(Error::NotPrime(p as u64));
    }
    if k == 0 {
        return Err(Error::TooSmall { min: 1, got: 0 });
    }
    let order = numtheory::checked_pow(p, k)?;
    if order > u32::MAX as usize {
        return Err(Error::CapExceeded { what: "group order", size: order as u64, cap: u32::MAX as u64 });
    }
    let digits = |mut x: usize| {
        (0..k)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect::<Vec<_>>()
    };
    let labels = (0..order)
        .map(|x| {
            let body: Vec<String> = digits(x).iter().map(|d| d.to_string()).collect();
            format!("({})", body.join(","))
        })
        .collect();
    let product = |x: usize, y: usize| {
        let (a, b) = (digits(x), digits(y));
        a.iter().zip(&b).rev().fold(0, |acc, (&u, &v)| acc * p + (u + v) % p)
    };
    tabulate(order, product, labels, format!("EA:{p}^{k}"))
}

/// `G x H` with `(g, h)` at index `g * |H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup, max_order: usize) -> Result<FiniteGroup> {
    let (m, n) = (g.order(), h.order());
    let order = m.checked_mul(n).ok_or(Error::Overflow("direct_product"))?;
    if order > max_order {
        return Err(Error::CapExceeded { what: "group order", size: order as u64, cap: max_order as u64 });
    }
    let labels = (0..order).map(|x| format!("({},{})", g.label(x / n), h.label(x % n))).collect();
    let product = |x: usize, y: usize| g.mul(x / n, y / n) * n + h.mul(x % n, y % n);
    tabulate(order, product, labels, format!("{}x{}", g.spec(), h.spec()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(g: &FiniteGroup) -> Vec<(u64, usize)> {
        g.order_partition().sizes()
    }

    #[test]
    fn cyclic_examples() {
        let z1 = cyclic_group(1).unwrap();
        assert_eq!((z1.order(), z1.identity()), (1, 0));
        assert_eq!(profile(&cyclic_group(8).unwrap()), vec![(1, 1), (2, 1), (4, 2), (8, 4)]);
        assert_eq!(profile(&cyclic_group(15).unwrap()), vec![(1, 1), (3, 2), (5, 4), (15, 8)]);
        assert!(cyclic_group(0).is_err());
        assert_eq!(cyclic_group(3).unwrap().labels(), &["e", "a", "a^2"]);
    }

    #[test]
    fn dihedral_examples() {
        assert_eq!(profile(&dihedral_group(3).unwrap()), vec![(1, 1), (2, 3), (3, 2)]);
        assert_eq!(profile(&dihedral_group(4).unwrap()), vec![(1, 1), (2, 5), (4, 2)]);
        assert!(dihedral_group(2).is_err());
        for n in 3..=12 {
            let d = dihedral_group(n).unwrap();
            assert_eq!(d.order(), 2 * n);
            for k in 0..n {
                assert_eq!(d.element_order(n + k).unwrap(), 2, "a^{k} b in D_{n}");
            }
            // a^n = b^2 = (ab)^2 = e
            let (a, b) = (1, n);
            assert_eq!(d.pow(a, n as u64), d.identity());
            assert_eq!(d.mul(b, b), d.identity());
            let ab = d.mul(a, b);
            assert_eq!(d.mul(ab, ab), d.identity());
        }
        let d4 = dihedral_group(4).unwrap();
        assert_eq!(d4.label(6), "a^2 b");
    }

    #[test]
    fn units_examples() {
        assert_eq!(profile(&units_group(8).unwrap()), vec![(1, 1), (2, 3)]);
        let u24 = units_group(24).unwrap();
        assert_eq!(profile(&u24), vec![(1, 1), (2, 7)]);
        assert_eq!(profile(&units_group(5).unwrap()), vec![(1, 1), (2, 1), (4, 2)]);
        assert_eq!(units_group(1).unwrap().order(), 1);
        assert_eq!(units_group(2).unwrap().order(), 1);
        for n in 1..=60 {
            assert_eq!(units_group(n).unwrap().order(), numtheory::euler_phi(n).unwrap());
        }
        assert!(units_group(0).is_err());
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(profile(&alternating_group(4).unwrap()), vec![(1, 1), (2, 3), (3, 8)]);
        let a5 = alternating_group(5).unwrap();
        assert_eq!(profile(&a5), vec![(1, 1), (2, 15), (3, 20), (5, 24)]);
        assert!(a5.all_nonidentity_prime_order());
        assert_eq!(profile(&symmetric_group(3).unwrap()), profile(&dihedral_group(3).unwrap()));
        assert_eq!(symmetric_group(1).unwrap().order(), 1);
        assert_eq!(symmetric_group(4).unwrap().order(), 24);
        assert!(symmetric_group(7).is_err());
        assert!(alternating_group(2).is_err());
        let s3 = symmetric_group(3).unwrap();
        assert_eq!(s3.labels(), &["()", "(2 3)", "(1 2)", "(1 2 3)", "(1 3 2)", "(1 3)"]);
    }

    #[test]
    fn elementary_abelian_examples() {
        let z2 = elementary_abelian(2, 1).unwrap();
        assert_eq!(profile(&z2), profile(&cyclic_group(2).unwrap()));
        assert_eq!(profile(&elementary_abelian(3, 2).unwrap()), vec![(1, 1), (3, 8)]);
        assert_eq!(profile(&elementary_abelian(2, 3).unwrap()), vec![(1, 1), (2, 7)]);
        assert_eq!(elementary_abelian(2, 3).unwrap().spec(), "EA:2^3");
        assert!(elementary_abelian(4, 2).is_err());
        assert!(elementary_abelian(2, 0).is_err());
    }

    #[test]
    fn direct_product_examples() {
        let z3 = cyclic_group(3).unwrap();
        let z5 = cyclic_group(5).unwrap();
        let trivial = cyclic_group(1).unwrap();
        let p = direct_product(&z3, &z5, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(profile(&p), profile(&cyclic_group(15).unwrap()));
        assert_eq!(p.spec(), "Z:3xZ:5");
        let d4 = dihedral_group(4).unwrap();
        assert_eq!(profile(&direct_product(&d4, &trivial, 64).unwrap()), profile(&d4));
        let z2 = cyclic_group(2).unwrap();
        assert_eq!(profile(&direct_product(&z2, &z2, 64).unwrap()), vec![(1, 1), (2, 3)]);
        assert!(matches!(direct_product(&d4, &d4, 63), Err(Error::CapExceeded { size: 64, cap: 63, .. })));
    }

    #[test]
    fn product_order_is_lcm_of_component_orders() {
        let small = [
            cyclic_group(4).unwrap(),
            cyclic_group(6).unwrap(),
            dihedral_group(4).unwrap(),
            dihedral_group(3).unwrap(),
            elementary_abelian(2, 2).unwrap(),
            units_group(9).unwrap(),
        ];
        for g in &small {
            for h in &small {
                if g.order() * h.order() > 64 {
                    continue;
                }
                let p = direct_product(g, h, 64).unwrap();
                for x in p.elements() {
                    let (a, b) = (x / h.order(), x % h.order());
                    let lcm = g.element_order(a).unwrap().lcm(&h.element_order(b).unwrap());
                    assert_eq!(p.element_order(x).unwrap(), lcm);
                }
            }
        }
    }
}
