//! Interval arithmetic with exact rational endpoints.
//!
//! Every enclosure produced here is a true outer bound: ring operations are
//! exact on the endpoints, and the transcendental enclosures (`ln_enc`,
//! `exp_enc`, `sqrt_enc`) carry explicit truncation-error bounds. Floats are
//! never consulted, so a comparison that succeeds on intervals is a proof.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rat::{ceil_dyadic, floor_dyadic, ilog2, nth_root_floor, pow2, rat_to_f64, Rat};

/// Closed interval [lo, hi] with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RatInterval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo <= hi, "inverted interval");
        RatInterval { lo, hi }
    }

    pub fn point(x: Rat) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn zero() -> Self {
        Self::point(Rat::zero())
    }

    pub fn hull(a: &Rat, b: &Rat) -> Self {
        if a <= b {
            Self::new(a.clone(), b.clone())
        } else {
            Self::new(b.clone(), a.clone())
        }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) / crate::rat::rat_int(2)
    }

    pub fn contains(&self, x: &Rat) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn disjoint(&self, other: &Self) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        Self::new(lo, hi)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_negative() {
            Self::new(&self.hi * s, &self.lo * s)
        } else {
            Self::new(&self.lo * s, &self.hi * s)
        }
    }

    pub fn shift(&self, s: &Rat) -> Self {
        Self::new(&self.lo + s, &self.hi + s)
    }

    /// Enclosure of x^2; never negative.
    pub fn square(&self) -> Self {
        if self.contains_zero() {
            let m = self.lo.abs().max(self.hi.abs());
            Self::new(Rat::zero(), &m * &m)
        } else {
            let a = &self.lo * &self.lo;
            let b = &self.hi * &self.hi;
            if a <= b {
                Self::new(a, b)
            } else {
                Self::new(b, a)
            }
        }
    }

    /// Enclosure of |x|.
    pub fn abs(&self) -> Self {
        if self.contains_zero() {
            Self::new(Rat::zero(), self.lo.abs().max(self.hi.abs()))
        } else if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn sup_abs(&self) -> Rat {
        self.lo.abs().max(self.hi.abs())
    }

    /// inf |x| over the interval; 0 when it straddles 0.
    pub fn inf_abs(&self) -> Rat {
        if self.contains_zero() {
            Rat::zero()
        } else {
            self.lo.abs().min(self.hi.abs())
        }
    }

    /// 1/x; requires the interval to be bounded away from zero.
    pub fn recip(&self) -> Self {
        assert!(!self.contains_zero(), "recip of interval containing 0");
        Self::new(self.hi.recip(), self.lo.recip())
    }

    /// Outward rounding of both endpoints to denominators 2^bits; used to
    /// stop exact-endpoint bit growth in long computations.
    pub fn coarsen(&self, bits: u32) -> Self {
        Self::new(floor_dyadic(&self.lo, bits), ceil_dyadic(&self.hi, bits))
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.mid())
    }
}

/// Axis-aligned rectangle in the complex plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CplxInterval {
    pub re: RatInterval,
    pub im: RatInterval,
}

impl CplxInterval {
    pub fn new(re: RatInterval, im: RatInterval) -> Self {
        CplxInterval { re, im }
    }

    pub fn point(re: Rat, im: Rat) -> Self {
        CplxInterval { re: RatInterval::point(re), im: RatInterval::point(im) }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        Self::new(re, im)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self::new(self.re.scale(s), self.im.scale(s))
    }

    /// Enclosure of |z|^2 = re^2 + im^2.
    pub fn abs_sq(&self) -> RatInterval {
        self.re.square().add(&self.im.square())
    }

    pub fn width(&self) -> Rat {
        self.re.width().max(self.im.width())
    }

    pub fn disjoint(&self, o: &Self) -> bool {
        self.re.disjoint(&o.re) || self.im.disjoint(&o.im)
    }

    pub fn coarsen(&self, bits: u32) -> Self {
        Self::new(self.re.coarsen(bits), self.im.coarsen(bits))
    }
}

/// [lb, ub] enclosing sqrt(x) for x >= 0, with ub - lb <= 2^{1-prec}.
pub fn sqrt_enc_point(x: &Rat, prec: u32) -> RatInterval {
    assert!(!x.is_negative(), "sqrt of negative rational");
    if x.is_zero() {
        return RatInterval::zero();
    }
    let scaled = x * pow2(2 * prec as i64);
    let fl = scaled.numer().magnitude() / scaled.denom().magnitude();
    let root = nth_root_floor(&BigInt::from(fl), 2);
    let lo = Rat::new(root.clone(), BigInt::one() << prec as usize);
    let hi = Rat::new(root + BigInt::one(), BigInt::one() << prec as usize);
    RatInterval::new(lo, hi)
}

/// Enclosure of sqrt over a non-negative interval.
pub fn sqrt_enc(x: &RatInterval, prec: u32) -> RatInterval {
    let lo = if x.lo.is_negative() { Rat::zero() } else { x.lo.clone() };
    RatInterval::new(
        sqrt_enc_point(&lo, prec).lo,
        sqrt_enc_point(&x.hi, prec).hi,
    )
}

/// [lb, ub] enclosing x^{1/d} for x >= 0.
pub fn nth_root_enc_point(x: &Rat, d: u32, prec: u32) -> RatInterval {
    assert!(!x.is_negative());
    if x.is_zero() {
        return RatInterval::zero();
    }
    let scaled = x * pow2(d as i64 * prec as i64);
    let fl = scaled.numer().magnitude() / scaled.denom().magnitude();
    let root = nth_root_floor(&BigInt::from(fl), d);
    RatInterval::new(
        Rat::new(root.clone(), BigInt::one() << prec as usize),
        Rat::new(root + BigInt::one(), BigInt::one() << prec as usize),
    )
}

/// atanh-series enclosure of ln(m) for m in roughly [1/2, 5/2].
/// ln m = 2 atanh(t), t = (m-1)/(m+1); |t| <= 3/7 there, so the series with
/// tail bound 2|t|^{2N+1}/((2N+1)(1-t^2)) converges geometrically.
fn ln_series(m: &Rat, prec: u32) -> RatInterval {
    let t = (m - Rat::one()) / (m + Rat::one());
    let t2 = &t * &t;
    let target = pow2(-(prec as i64) - 2);
    let mut sum = Rat::zero();
    let mut power = t.clone(); // t^{2k+1}
    let mut k: u64 = 0;
    loop {
        sum += &power / Rat::from_integer(BigInt::from(2 * k + 1));
        power *= &t2;
        k += 1;
        // tail bound, valid for |t| < 1
        let tail = power.abs() / (Rat::from_integer(BigInt::from(2 * k + 1)) * (Rat::one() - &t2));
        if tail < target {
            let two = crate::rat::rat_int(2);
            let s = &two * &sum;
            let tb = two * tail;
            return RatInterval::new(&s - &tb, &s + &tb).coarsen(prec + 2);
        }
    }
}

/// Certified enclosure of ln 2.
pub fn ln2_enc(prec: u32) -> RatInterval {
    ln_series(&crate::rat::rat_int(2), prec)
}

/// Certified enclosure of ln(x) for a positive rational x.
pub fn ln_enc_point(x: &Rat, prec: u32) -> RatInterval {
    assert!(x.is_positive(), "ln of non-positive rational");
    let work = prec + 8;
    let e = ilog2(x);
    // m = x / 2^e is in [1, 2); round it to dyadic before the series so the
    // series terms stay small.
    let m = x * pow2(-e);
    let m_enc = RatInterval::new(floor_dyadic(&m, work), ceil_dyadic(&m, work));
    let ln_m = RatInterval::new(ln_series(&m_enc.lo, work).lo, ln_series(&m_enc.hi, work).hi);
    let ln2 = ln2_enc(work);
    let e_rat = Rat::from_integer(BigInt::from(e));
    ln_m.add(&ln2.scale(&e_rat)).coarsen(prec)
}

/// Enclosure of ln over a strictly positive interval.
pub fn ln_enc(x: &RatInterval, prec: u32) -> RatInterval {
    assert!(x.lo.is_positive(), "ln of interval touching 0");
    RatInterval::new(ln_enc_point(&x.lo, prec).lo, ln_enc_point(&x.hi, prec).hi)
}

/// Taylor enclosure of exp(y) for |y| <= 1/4.
fn exp_series(y: &Rat, prec: u32) -> RatInterval {
    let target = pow2(-(prec as i64) - 2);
    let mut sum = Rat::one();
    let mut term = Rat::one();
    let mut k: u64 = 0;
    loop {
        k += 1;
        term = term * y / Rat::from_integer(BigInt::from(k));
        sum += &term;
        // |tail| <= |term| * sum_{j>=1} |y|^j <= |term| * 1/3 for |y| <= 1/4
        let tail = term.abs() / crate::rat::rat_int(3);
        if tail < target {
            return RatInterval::new(&sum - &tail, &sum + &tail).coarsen(prec + 2);
        }
    }
}

/// Certified enclosure of exp(x) for rational x.
pub fn exp_enc_point(x: &Rat, prec: u32) -> RatInterval {
    if x.is_negative() {
        let pos = exp_enc_point(&-x.clone(), prec + 4);
        return pos.recip().coarsen(prec);
    }
    let work = prec + 16;
    // halve until the argument is small, then square back
    let mut s = 0u32;
    let quarter = crate::rat::rat(1, 4);
    let mut y = x.clone();
    while y.abs() > quarter {
        y /= crate::rat::rat_int(2);
        s += 1;
    }
    let y = RatInterval::new(floor_dyadic(&y, work), ceil_dyadic(&y, work));
    let mut r = RatInterval::new(exp_series(&y.lo, work).lo, exp_series(&y.hi, work).hi);
    for _ in 0..s {
        r = r.mul(&r).coarsen(work);
    }
    r.coarsen(prec)
}

pub fn exp_enc(x: &RatInterval, prec: u32) -> RatInterval {
    RatInterval::new(exp_enc_point(&x.lo, prec).lo, exp_enc_point(&x.hi, prec).hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn close(iv: &RatInterval, v: f64, tol: f64) {
        assert!(
            (iv.to_f64() - v).abs() < tol,
            "expected {v}, got {} width {}",
            iv.to_f64(),
            rat_to_f64(&iv.width())
        );
    }

    #[test]
    fn ring_ops_bracket() {
        let a = RatInterval::new(rat(1, 3), rat(1, 2));
        let b = RatInterval::new(rat(-1, 4), rat(1, 4));
        let p = a.mul(&b);
        assert!(p.contains(&(rat(1, 3) * rat(-1, 4))));
        assert!(p.contains(&(rat(1, 2) * rat(1, 4))));
        let s = a.square();
        assert!(s.lo >= Rat::zero());
        assert!(s.contains(&rat(1, 6)));
        assert!(b.square().lo.is_zero());
    }

    #[test]
    fn sqrt_enclosure_tight_and_sound() {
        let e = sqrt_enc_point(&rat_int(2), 60);
        assert!(e.width() <= pow2(-59));
        assert!(&e.lo * &e.lo <= rat_int(2));
        assert!(&e.hi * &e.hi >= rat_int(2));
        close(&e, std::f64::consts::SQRT_2, 1e-12);
        assert_eq!(sqrt_enc_point(&Rat::zero(), 30), RatInterval::zero());
    }

    #[test]
    fn nth_root_enclosure() {
        let e = nth_root_enc_point(&rat_int(8), 3, 60);
        close(&e, 2.0, 1e-12);
        let e = nth_root_enc_point(&rat(49, 1), 3, 60);
        close(&e, 49f64.powf(1.0 / 3.0), 1e-12);
    }

    #[test]
    fn ln_enclosure_known_values() {
        close(&ln2_enc(80), std::f64::consts::LN_2, 1e-15);
        close(&ln_enc_point(&rat_int(10), 80), 10f64.ln(), 1e-13);
        close(&ln_enc_point(&rat(1, 7), 80), (1f64 / 7.0).ln(), 1e-13);
        // rational close to 1 + sqrt(2); ln(1 + sqrt 2) = 0.88137358701954...
        let x = rat(2414213562373095, 1000000000000000);
        close(&ln_enc_point(&x, 80), 0.881373587019543, 1e-12);
    }

    #[test]
    fn exp_enclosure_known_values() {
        close(&exp_enc_point(&rat_int(1), 80), std::f64::consts::E, 1e-13);
        close(&exp_enc_point(&rat_int(-2), 80), (-2f64).exp(), 1e-13);
        close(&exp_enc_point(&rat(881373, 1000000), 80), 0.881373f64.exp(), 1e-12);
        // exp and ln are mutually inverse on enclosures
        let x = rat(7, 3);
        let ln = ln_enc_point(&x, 100);
        let back = exp_enc(&ln, 100);
        assert!(back.contains(&x));
    }

    #[test]
    fn complex_ops() {
        let z = CplxInterval::point(rat_int(3), rat_int(4));
        assert!(z.abs_sq().contains(&rat_int(25)));
        let w = z.mul(&CplxInterval::point(rat_int(0), rat_int(1)));
        assert!(w.re.contains(&rat_int(-4)) && w.im.contains(&rat_int(3)));
    }

    #[test]
    fn coarsen_is_outward() {
        let x = RatInterval::new(rat(1, 3), rat(2, 3));
        let c = x.coarsen(10);
        assert!(c.lo <= x.lo && x.hi <= c.hi);
        assert!(c.width() <= x.width() + pow2(-9));
    }
}
