//! Trial-division number theory: factorization, Euler's phi, divisors and
//! primality.
//!
//! Every function is generic over the unsigned primitive integers so the same
//! code serves `u32` table indices and `u64` orders. Inputs of zero are
//! rejected where the operation is undefined.

use num_integer::Integer;
use num_traits::{PrimInt, Unsigned};

use crate::error::{Error, Result};

/// Unsigned primitive integer usable by this module.
pub trait UInt: PrimInt + Unsigned + Integer + std::fmt::Debug {}
impl<T: PrimInt + Unsigned + Integer + std::fmt::Debug> UInt for T {}

/// Prime factorization as `(prime, exponent)` pairs, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization<T> {
    factors: Vec<(T, u32)>,
}

impl<T: UInt> Factorization<T> {
    pub fn factors(&self) -> &[(T, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = T> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of distinct prime factors.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    /// Exponent of `p`, zero when `p` does not appear.
    pub fn exponent_of(&self, p: T) -> u32 {
        self.factors.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, e)| e)
    }

    /// Multiplies the factorization back out. Returns `None` on overflow.
    pub fn value(&self) -> Option<T> {
        self.factors.iter().try_fold(T::one(), |acc, &(p, e)| (0..e).try_fold(acc, |acc, _| acc.checked_mul(&p)))
    }

    /// `Some(p)` when the factored integer is a power `p^k`, `k >= 1`.
    pub fn single_prime(&self) -> Option<T> {
        match self.factors.as_slice() {
            [(p, _)] => Some(*p),
            _ => None,
        }
    }
}

fn nonzero<T: UInt>(n: T) -> Result<()> {
    if n.is_zero() {
        Err(Error::TooSmall { min: 1, got: 0 })
    } else {
        Ok(())
    }
}

pub fn factorize<T: UInt>(n: T) -> Result<Factorization<T>> {
    nonzero(n)?;
    let mut rest = n;
    let mut factors = Vec::new();
    let two = T::one() + T::one();
    let mut p = two;
    // p <= rest / p avoids overflowing p * p near T::max_value()
    while p <= rest / p {
        if (rest % p).is_zero() {
            let mut e = 0;
            while (rest % p).is_zero() {
                rest = rest / p;
                e += 1;
            }
            factors.push((p, e));
        }
        p = if p == two { p + T::one() } else { p + two };
    }
    if rest > T::one() {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

pub fn euler_phi<T: UInt>(n: T) -> Result<T> {
    let f = factorize(n)?;
    // n * prod (1 - 1/p), dividing first so nothing exceeds n
    Ok(f.factors.iter().fold(n, |acc, &(p, _)| acc / p * (p - T::one())))
}

/// All positive divisors of `n`, strictly increasing.
pub fn divisors<T: UInt>(n: T) -> Result<Vec<T>> {
    nonzero(n)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = T::one();
    while d <= n / d {
        if (n % d).is_zero() {
            small.push(d);
            let q = n / d;
            if q != d {
                large.push(q);
            }
        }
        d = d + T::one();
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

pub fn is_prime<T: UInt>(n: T) -> bool {
    let two = T::one() + T::one();
    if n < two {
        return false;
    }
    let mut d = two;
    while d <= n / d {
        if (n % d).is_zero() {
            return false;
        }
        d = d + T::one();
    }
    true
}

/// Primes up to and including `bound`, ascending.
pub fn primes_up_to<T: UInt>(bound: T) -> Vec<T> {
    let mut out = Vec::new();
    let mut n = T::one() + T::one();
    while n <= bound {
        if is_prime(n) {
            out.push(n);
        }
        if n == T::max_value() {
            break;
        }
        n = n + T::one();
    }
    out
}

/// `Some(p)` when `n = p^k` for a prime `p` and `k >= 1`.
pub fn prime_power_base<T: UInt>(n: T) -> Option<T> {
    if n.is_zero() {
        return None;
    }
    factorize(n).ok()?.single_prime()
}

/// `base^exp` with overflow reported as an error.
pub fn checked_pow<T: UInt>(base: T, exp: u32) -> Result<T> {
    num_traits::checked_pow(base, exp as usize).ok_or(Error::Overflow("checked_pow"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi_by_gcd(n: u64) -> u64 {
        (1..=n).filter(|&x| x.gcd(&n) == 1).count() as u64
    }

    fn factor_oracle(mut n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let bound = n;
        for p in 2..=bound {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            if e > 0 {
                out.push((p, e));
            }
        }
        out
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1u64).unwrap().is_empty());
        assert_eq!(factorize(12u64).unwrap().factors(), factor_oracle(12));
        assert_eq!(factorize(12u64).unwrap().factors(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(24u64).unwrap().factors(), &[(2, 3), (3, 1)]);
        assert_eq!(factorize(0u64), Err(Error::TooSmall { min: 1, got: 0 }));
    }

    #[test]
    fn factorize_matches_oracle() {
        for n in 1..=500u64 {
            let f = factorize(n).unwrap();
            assert_eq!(f.factors(), factor_oracle(n).as_slice(), "n={n}");
            assert_eq!(f.value(), Some(n));
        }
    }

    #[test]
    fn factorize_large_prime_near_max() {
        let p = 4_294_967_291u64; // largest prime below 2^32
        assert_eq!(factorize(p).unwrap().factors(), &[(p, 1)]);
        assert_eq!(factorize(u32::MAX).unwrap().value(), Some(u32::MAX));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1u64).unwrap(), 1);
        assert_eq!(euler_phi(8u64).unwrap(), 4);
        assert_eq!(euler_phi(30u64).unwrap(), 8);
        assert!(euler_phi(0u32).is_err());
        for p in [2u64, 3, 5, 7] {
            for i in 1..5 {
                assert_eq!(euler_phi(p.pow(i)).unwrap(), p.pow(i - 1) * (p - 1));
            }
        }
    }

    #[test]
    fn phi_matches_gcd_count() {
        for n in 1..=300u64 {
            assert_eq!(euler_phi(n).unwrap(), phi_by_gcd(n), "n={n}");
        }
    }

    #[test]
    fn phi_multiplicative_on_coprime_pairs() {
        for m in 1..=100u64 {
            for n in 1..=100u64 {
                if m.gcd(&n) == 1 {
                    assert_eq!(euler_phi(m * n).unwrap(), euler_phi(m).unwrap() * euler_phi(n).unwrap());
                }
            }
        }
    }

    #[test]
    fn phi_sums_over_divisors() {
        for n in 1..=1000u64 {
            let s: u64 = divisors(n).unwrap().into_iter().map(|d| euler_phi(d).unwrap()).sum();
            assert_eq!(s, n);
        }
    }

    #[test]
    fn divisors_examples_and_oracle() {
        assert_eq!(divisors(1u64).unwrap(), vec![1]);
        assert_eq!(divisors(15u64).unwrap(), vec![1, 3, 5, 15]);
        assert_eq!(divisors(30u64).unwrap(), vec![1, 2, 3, 5, 6, 10, 15, 30]);
        assert!(divisors(0u64).is_err());
        for n in 1..=1000u64 {
            let brute: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(divisors(n).unwrap(), brute);
        }
    }

    #[test]
    fn primality() {
        assert!(!is_prime(0u64));
        assert!(!is_prime(1u64));
        assert!(is_prime(2u64));
        assert!(!is_prime(91u64));
        for n in 0..=500u64 {
            let two_divisors = n >= 1 && (1..=n).filter(|d| n % d == 0).count() == 2;
            assert_eq!(is_prime(n), two_divisors, "n={n}");
        }
        assert_eq!(primes_up_to(20u32), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert_eq!(primes_up_to(u8::MAX).last(), Some(&251));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power_base(1u64), None);
        assert_eq!(prime_power_base(27u64), Some(3));
        assert_eq!(prime_power_base(12u64), None);
        assert_eq!(checked_pow(3u64, 4).unwrap(), 81);
        assert!(checked_pow(2u8, 8).is_err());
    }
}
