//! Exact big-integer helpers: valuation splitting and integer square roots.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The decomposition `x = base^val * unit` with `base` not dividing `unit`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ValuationPair {
    pub val: u64,
    pub unit: BigUint,
}

/// Splits `x` into its `base`-adic valuation and the remaining cofactor.
pub fn valuation_split(x: &BigUint, base: u64) -> Result<ValuationPair> {
    if x.is_zero() {
        return Err(Error::domain("valuation of zero is undefined"));
    }
    if base < 2 {
        return Err(Error::domain("valuation base must be at least 2"));
    }
    if base == 2 {
        let val = x.trailing_zeros().unwrap_or(0);
        return Ok(ValuationPair { val, unit: x >> val });
    }
    let b = BigUint::from(base);
    let mut unit = x.clone();
    let mut val = 0;
    loop {
        let (q, r) = unit.div_rem(&b);
        if !r.is_zero() {
            break;
        }
        unit = q;
        val += 1;
    }
    Ok(ValuationPair { val, unit })
}

/// Valuation of a machine integer, for hot loops that never leave `u128`.
pub fn valuation_u128(mut x: u128, base: u64) -> Result<(u64, u128)> {
    if x == 0 {
        return Err(Error::domain("valuation of zero is undefined"));
    }
    if base < 2 {
        return Err(Error::domain("valuation base must be at least 2"));
    }
    let b = base as u128;
    let mut val = 0;
    while x.is_multiple_of(b) {
        x /= b;
        val += 1;
    }
    Ok((val, x))
}

/// Floor of the square root, by Newton iteration from an over-estimate.
pub fn isqrt(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    // 2^ceil(bits/2) >= sqrt(n), so the iteration decreases monotonically.
    let mut x = BigUint::one() << n.bits().div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1u32;
        if y >= x {
            break;
        }
        x = y;
    }
    // exact correction
    while &x * &x > *n {
        x -= 1u32;
    }
    while (&x + 1u32) * (&x + 1u32) <= *n {
        x += 1u32;
    }
    x
}

/// The least integer `r` with `r^2 >= b^i`, i.e. `ceil(sqrt(b)^i)`.
pub fn ceil_sqrt_pow(b: u64, i: u32) -> Result<BigUint> {
    if b < 2 {
        return Err(Error::domain("square-root base must be at least 2"));
    }
    let n = BigUint::from(b).pow(i);
    let r = isqrt(&n);
    if &r * &r == n {
        Ok(r)
    } else {
        Ok(r + 1u32)
    }
}

/// Index `i` with `base^i <= x < base^(i+1)`.
pub fn interval_index(x: &BigUint, base: u64) -> Result<u64> {
    if x.is_zero() {
        return Err(Error::domain("interval index of zero is undefined"));
    }
    if base < 2 {
        return Err(Error::domain("interval base must be at least 2"));
    }
    if base.is_power_of_two() {
        let shift = base.trailing_zeros() as u64;
        return Ok((x.bits() - 1) / shift);
    }
    let b = BigUint::from(base);
    let mut next = b.clone();
    let mut i = 0;
    while next <= *x {
        next *= &b;
        i += 1;
    }
    Ok(i)
}

/// Trial-division primality, sufficient for coloring parameters.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn split_examples() {
        assert_eq!(
            valuation_split(&big(12), 3).unwrap(),
            ValuationPair { val: 1, unit: big(4) }
        );
        assert_eq!(
            valuation_split(&big(7), 3).unwrap(),
            ValuationPair { val: 0, unit: big(7) }
        );
        assert_eq!(
            valuation_split(&big(27), 3).unwrap(),
            ValuationPair { val: 3, unit: big(1) }
        );
        assert_eq!(
            valuation_split(&big(40), 2).unwrap(),
            ValuationPair { val: 3, unit: big(5) }
        );
    }

    #[test]
    fn split_rejects_bad_domain() {
        assert!(matches!(valuation_split(&big(0), 3), Err(Error::Domain(_))));
        assert!(matches!(valuation_split(&big(5), 1), Err(Error::Domain(_))));
        assert!(valuation_u128(0, 3).is_err());
    }

    #[test]
    fn split_reconstructs_exhaustively() {
        for base in [2u64, 3, 5, 7] {
            for x in 1..=100_000u64 {
                let s = valuation_split(&big(x), base).unwrap();
                assert_eq!(big(base).pow(s.val as u32) * &s.unit, big(x));
                assert!(!(&s.unit % base).is_zero());
                assert_eq!(
                    valuation_u128(x as u128, base).unwrap(),
                    (s.val, x as u128 / (base as u128).pow(s.val as u32))
                );
            }
        }
    }

    #[test]
    fn ceil_sqrt_examples() {
        assert_eq!(ceil_sqrt_pow(2, 0).unwrap(), big(1));
        assert_eq!(ceil_sqrt_pow(2, 3).unwrap(), big(3));
        assert_eq!(ceil_sqrt_pow(2, 10).unwrap(), big(32));
        assert!(ceil_sqrt_pow(1, 3).is_err());
    }

    #[test]
    fn ceil_sqrt_bounds() {
        for b in [2u64, 3, 5, 10] {
            for i in 0..300u32 {
                let r = ceil_sqrt_pow(b, i).unwrap();
                let n = big(b).pow(i);
                assert!(&r * &r >= n);
                let below = &r - 1u32;
                assert!(&below * &below < n);
            }
        }
    }

    #[test]
    fn sqrt2_interval_chain_partitions_integers() {
        let bounds: Vec<u64> = (0..40)
            .map(|i| ceil_sqrt_pow(2, i).unwrap().try_into().unwrap())
            .collect();
        for i in 1..39 {
            assert!(bounds[i] <= bounds[i + 1]);
        }
        // every x >= 2 lies in exactly one [ceil(r^i), ceil(r^(i+1)) - 1], i >= 2
        for x in 2..200_000u64 {
            let hits = (2..39).filter(|&i| bounds[i] <= x && x < bounds[i + 1]).count();
            assert_eq!(hits, 1, "x = {x}");
        }
    }

    #[test]
    fn interval_index_matches_powers() {
        for base in [2u64, 3, 4, 10] {
            for i in 0..60u32 {
                let p = big(base).pow(i);
                assert_eq!(interval_index(&p, base).unwrap(), i as u64);
                assert_eq!(interval_index(&(&p * base - 1u32), base).unwrap(), i as u64);
            }
        }
    }

    #[test]
    fn primes_and_binomials() {
        let ps: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(10, 4), 210);
        assert_eq!(binomial(3, 5), 0);
    }

    proptest! {
        #[test]
        fn isqrt_agrees_with_num(n in proptest::collection::vec(any::<u32>(), 1..12)) {
            let n = BigUint::new(n);
            let r = isqrt(&n);
            prop_assert_eq!(&r, &num_integer::Roots::sqrt(&n));
            prop_assert!(&r * &r <= n);
            prop_assert!((&r + 1u32) * (&r + 1u32) > n);
        }
    }
}
