//! Exact rational helpers shared by every module.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{EmError, Result};

/// Exact rational number. The whole crate computes in these; floats only
/// appear at the reporting boundary.
pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// 2^bits as an exact rational; `bits` may be negative.
pub fn pow2(bits: i64) -> Rat {
    if bits >= 0 {
        Rat::from_integer(BigInt::one() << (bits as usize))
    } else {
        Rat::new(BigInt::one(), BigInt::one() << ((-bits) as usize))
    }
}

/// Parses "p/q" or "p" (optionally signed). Whitespace around tokens is ignored.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| EmError::InvalidInput(format!("bad rational {s:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| EmError::InvalidInput(format!("bad rational {s:?}")))?;
    if d.is_zero() {
        return Err(EmError::InvalidInput(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(n, d))
}

/// Canonical "p/q" form, "p" when the denominator is 1.
pub fn fmt_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn rat_to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Largest dyadic p/2^bits that is <= x.
pub fn floor_dyadic(x: &Rat, bits: u32) -> Rat {
    let scaled = x * pow2(bits as i64);
    let fl = scaled.numer().div_floor(scaled.denom());
    Rat::new(fl, BigInt::one() << bits as usize)
}

/// Smallest dyadic p/2^bits that is >= x.
pub fn ceil_dyadic(x: &Rat, bits: u32) -> Rat {
    let scaled = x * pow2(bits as i64);
    let cl = scaled.numer().div_ceil(scaled.denom());
    Rat::new(cl, BigInt::one() << bits as usize)
}

/// floor(log2(x)) for x > 0, i.e. the e with 2^e <= x < 2^{e+1}.
pub fn ilog2(x: &Rat) -> i64 {
    assert!(x.is_positive(), "ilog2 of non-positive rational");
    let nb = x.numer().magnitude().bits() as i64;
    let db = x.denom().magnitude().bits() as i64;
    let mut e = nb - db;
    while pow2(e) > *x {
        e -= 1;
    }
    while pow2(e + 1) <= *x {
        e += 1;
    }
    e
}

/// floor of the k-th root of a non-negative integer.
pub fn nth_root_floor(n: &BigInt, k: u32) -> BigInt {
    assert!(n.sign() != Sign::Minus, "root of negative integer");
    num_integer::Roots::nth_root(n, k)
}

/// The unique rational with smallest denominator in [lo, hi]
/// (continued-fraction / Stern-Brocot descent).
pub fn simplest_in(lo: &Rat, hi: &Rat) -> Rat {
    assert!(lo <= hi, "simplest_in: empty interval");
    if !lo.is_positive() && !hi.is_negative() {
        return Rat::zero();
    }
    if hi.is_negative() {
        return -simplest_in(&-hi.clone(), &-lo.clone());
    }
    // 0 < lo <= hi
    let lo_ceil = lo.ceil();
    if lo_ceil <= hi.floor() {
        return lo_ceil;
    }
    let a = lo.floor();
    let inner = simplest_in(&(hi - &a).recip(), &(lo - &a).recip());
    a + inner.recip()
}

/// Smallest positive q with q*x_j integral for all coordinates.
pub fn common_denominator(coords: &[Rat]) -> BigInt {
    let mut q = BigInt::one();
    for c in coords {
        q = q.lcm(c.denom());
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-3/4", "17", "0", "-6/4"] {
            let r = parse_rat(s).unwrap();
            let back = parse_rat(&fmt_rat(&r)).unwrap();
            assert_eq!(r, back);
        }
        assert_eq!(fmt_rat(&parse_rat("-6/4").unwrap()), "-3/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn dyadic_rounding_brackets() {
        let x = rat(10, 7);
        let lo = floor_dyadic(&x, 16);
        let hi = ceil_dyadic(&x, 16);
        assert!(lo <= x && x <= hi);
        assert!(&hi - &lo <= pow2(-16));
    }

    #[test]
    fn ilog2_matches_definition() {
        for (n, d, want) in [(1, 1, 0), (3, 1, 1), (1, 3, -2), (8, 1, 3), (7, 8, -1)] {
            assert_eq!(ilog2(&rat(n, d)), want, "{n}/{d}");
        }
    }

    #[test]
    fn simplest_picks_smallest_denominator() {
        assert_eq!(simplest_in(&rat(49, 100), &rat(1, 2)), rat(1, 2));
        assert_eq!(simplest_in(&rat(-1, 3), &rat(1, 5)), rat_int(0));
        assert_eq!(simplest_in(&rat(31, 10), &rat(42, 10)), rat_int(4));
        assert_eq!(simplest_in(&rat(2, 7), &rat(1, 3)), rat(1, 3));
        let x = rat(355, 113);
        assert_eq!(simplest_in(&x, &x), x);
        // simplest in (pi-ish window) is 22/7
        assert_eq!(simplest_in(&rat(314, 100), &rat(315, 100)), rat(22, 7));
    }

    #[test]
    fn common_denominator_is_lcm() {
        let v = [rat(1, 2), rat(3, 4), rat_int(5)];
        assert_eq!(common_denominator(&v), BigInt::from(4));
    }
}
