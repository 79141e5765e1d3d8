//! Dense univariate polynomials over the integers and rationals.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::interval::{CplxInterval, RatInterval};
use crate::rat::Rat;

/// Integer polynomial, constant term first. Kept trimmed (no leading zeros).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZPoly {
    pub coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().unwrap().is_one()
    }

    pub fn derivative(&self) -> ZPoly {
        if self.coeffs.len() <= 1 {
            return ZPoly::new(vec![BigInt::zero()]);
        }
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| a * BigInt::from(k))
            .collect();
        ZPoly::new(c)
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_interval(&self, x: &RatInterval) -> RatInterval {
        let mut acc = RatInterval::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&RatInterval::point(Rat::from_integer(c.clone())));
        }
        acc
    }

    /// Exact evaluation at a Gaussian rational a + bi.
    pub fn eval_cplx_rat(&self, a: &Rat, b: &Rat) -> (Rat, Rat) {
        let mut re = Rat::zero();
        let mut im = Rat::zero();
        for c in self.coeffs.iter().rev() {
            let nre = &re * a - &im * b + Rat::from_integer(c.clone());
            let nim = re * b + im * a;
            re = nre;
            im = nim;
        }
        (re, im)
    }

    pub fn eval_cplx_interval(&self, z: &CplxInterval) -> CplxInterval {
        let mut acc = CplxInterval::point(Rat::zero(), Rat::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc
                .mul(z)
                .add(&CplxInterval::point(Rat::from_integer(c.clone()), Rat::zero()));
        }
        acc
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }

    /// 1 + max |a_i| for a monic polynomial: all roots have modulus below it.
    pub fn cauchy_bound(&self) -> Rat {
        assert!(self.is_monic());
        let mut m = BigInt::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = c.abs();
            if a > m {
                m = a;
            }
        }
        Rat::from_integer(m + BigInt::one())
    }
}

/// Rational polynomial, constant term first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    pub coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![Rat::zero()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn make_monic(&self) -> QPoly {
        let lead = self.coeffs.last().unwrap().clone();
        assert!(!lead.is_zero());
        QPoly::new(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    /// Remainder of self divided by a non-zero divisor.
    pub fn rem(&self, div: &QPoly) -> QPoly {
        assert!(!div.is_zero());
        let mut r = self.coeffs.clone();
        let dd = div.degree();
        let lead = div.coeffs[dd].clone();
        while r.len() > dd && r.len() > 1 {
            let k = r.len() - 1;
            if r[k].is_zero() {
                r.pop();
                continue;
            }
            let factor = &r[k] / &lead;
            for j in 0..=dd {
                let t = &factor * &div.coeffs[j];
                r[k - dd + j] -= t;
            }
            r.pop();
        }
        QPoly::new(r)
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.make_monic()
        }
    }
}

/// Sturm chain of a squarefree rational polynomial.
pub struct SturmChain {
    chain: Vec<QPoly>,
}

impl SturmChain {
    pub fn new(p: &ZPoly) -> Self {
        let p0 = p.to_qpoly();
        let p1 = p.derivative().to_qpoly();
        let mut chain = vec![p0, p1];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(QPoly::new(r.coeffs.iter().map(|c| -c.clone()).collect()));
        }
        SturmChain { chain }
    }

    fn variations(&self, x: &Rat) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.chain {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let sign = v.is_positive();
            if let Some(l) = last {
                if l != sign {
                    count += 1;
                }
            }
            last = Some(sign);
        }
        count
    }

    /// Number of real roots in the half-open interval (a, b].
    pub fn count_roots(&self, a: &Rat, b: &Rat) -> usize {
        assert!(a <= b);
        self.variations(a) - self.variations(b)
    }
}

/// Resultant of two integer polynomials via the Sylvester matrix with exact
/// rational elimination. Used as an independent oracle for discriminants.
pub fn resultant(p: &ZPoly, q: &ZPoly) -> Rat {
    let n = p.degree();
    let m = q.degree();
    if n == 0 {
        return Rat::from_integer(p.coeffs[0].clone()).pow(m as i32);
    }
    if m == 0 {
        return Rat::from_integer(q.coeffs[0].clone()).pow(n as i32);
    }
    let size = n + m;
    let mut mat = vec![vec![Rat::zero(); size]; size];
    for row in 0..m {
        for (k, c) in p.coeffs.iter().rev().enumerate() {
            mat[row][row + k] = Rat::from_integer(c.clone());
        }
    }
    for row in 0..n {
        for (k, c) in q.coeffs.iter().rev().enumerate() {
            mat[m + row][row + k] = Rat::from_integer(c.clone());
        }
    }
    crate::linalg::det(&mat)
}

/// disc(p) = (-1)^{n(n-1)/2} res(p, p') / lead(p); independent oracle used by
/// tests to cross-check field discriminants.
pub fn poly_discriminant(p: &ZPoly) -> Rat {
    let n = p.degree();
    let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
    let res = resultant(p, &p.derivative());
    let lead = Rat::from_integer(p.coeffs.last().unwrap().clone());
    Rat::from_integer(BigInt::from(sign)) * res / lead
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn zp(v: &[i64]) -> ZPoly {
        ZPoly::new(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn eval_and_derivative() {
        let p = zp(&[-2, 0, 1]); // x^2 - 2
        assert_eq!(p.eval_rat(&rat_int(3)), rat_int(7));
        assert_eq!(p.derivative(), zp(&[0, 2]));
        let (re, im) = zp(&[1, 0, 1]).eval_cplx_rat(&rat_int(0), &rat_int(1));
        assert!(re.is_zero() && im.is_zero());
    }

    #[test]
    fn gcd_detects_square_factors() {
        // (x-1)^2 = x^2 - 2x + 1
        let p = zp(&[1, -2, 1]);
        let g = p.to_qpoly().gcd(&p.derivative().to_qpoly());
        assert_eq!(g.degree(), 1);
        let q = zp(&[-2, 0, 1]);
        let g = q.to_qpoly().gcd(&q.derivative().to_qpoly());
        assert_eq!(g.degree(), 0);
    }

    #[test]
    fn sturm_counts_real_roots() {
        let p = zp(&[-2, 0, 1]); // roots +-sqrt(2)
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_roots(&rat_int(-3), &rat_int(3)), 2);
        assert_eq!(chain.count_roots(&rat_int(0), &rat_int(3)), 1);
        assert_eq!(chain.count_roots(&rat_int(2), &rat_int(3)), 0);

        let c = zp(&[1, -2, -1, 1]); // x^3 - x^2 - 2x + 1, three real roots
        let chain = SturmChain::new(&c);
        assert_eq!(chain.count_roots(&rat_int(-3), &rat_int(3)), 3);

        let g = zp(&[1, 0, 1]); // x^2 + 1, none
        let chain = SturmChain::new(&g);
        assert_eq!(chain.count_roots(&rat_int(-3), &rat_int(3)), 0);
    }

    #[test]
    fn resultant_and_discriminant() {
        // disc(x^2 - 2) = 8, disc(x^2 + 1) = -4
        assert_eq!(poly_discriminant(&zp(&[-2, 0, 1])), rat_int(8));
        assert_eq!(poly_discriminant(&zp(&[1, 0, 1])), rat_int(-4));
        // disc(x^3 - x^2 - 2x + 1) = 49
        assert_eq!(poly_discriminant(&zp(&[1, -2, -1, 1])), rat_int(49));
        // res(x^2-2, x) = constant term relation
        assert_eq!(resultant(&zp(&[-2, 0, 1]), &zp(&[0, 1])), rat_int(-2));
        let _ = rat(1, 2);
    }
}
