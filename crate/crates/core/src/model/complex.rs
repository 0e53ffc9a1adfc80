use astro_float::{BigFloat, Consts, Radix, RoundingMode};

use crate::rational::Rational;

const RM: RoundingMode = RoundingMode::ToEven;

/// Arithmetic at a fixed binary precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arith {
    pub bits: usize,
}

impl Arith {
    pub fn real_int(&self, v: i64) -> BigFloat {
        BigFloat::from_i64(v, self.bits)
    }

    pub fn real_rational(&self, q: &Rational) -> BigFloat {
        let mut cc = Consts::new().expect("constants cache");
        let num = BigFloat::parse(&q.numer().to_string(), Radix::Dec, self.bits, RM, &mut cc);
        let den = BigFloat::parse(&q.denom().to_string(), Radix::Dec, self.bits, RM, &mut cc);
        num.div(&den, self.bits, RM)
    }

    /// `2^e`.
    pub fn pow2(&self, e: i64) -> BigFloat {
        let two = self.real_int(2);
        let p = two.powi(e.unsigned_abs() as usize, self.bits, RM);
        if e < 0 {
            p.reciprocal(self.bits, RM)
        } else {
            p
        }
    }

    pub fn zero(&self) -> Complex {
        Complex::new(self.real_int(0), self.real_int(0))
    }

    pub fn one(&self) -> Complex {
        Complex::new(self.real_int(1), self.real_int(0))
    }

    pub fn i(&self) -> Complex {
        Complex::new(self.real_int(0), self.real_int(1))
    }

    pub fn from_rational(&self, q: &Rational) -> Complex {
        Complex::new(self.real_rational(q), self.real_int(0))
    }

    pub fn add(&self, a: &Complex, b: &Complex) -> Complex {
        Complex::new(a.re.add(&b.re, self.bits, RM), a.im.add(&b.im, self.bits, RM))
    }

    pub fn sub(&self, a: &Complex, b: &Complex) -> Complex {
        Complex::new(a.re.sub(&b.re, self.bits, RM), a.im.sub(&b.im, self.bits, RM))
    }

    pub fn mul(&self, a: &Complex, b: &Complex) -> Complex {
        let p = self.bits;
        let re = a.re.mul(&b.re, p, RM).sub(&a.im.mul(&b.im, p, RM), p, RM);
        let im = a.re.mul(&b.im, p, RM).add(&a.im.mul(&b.re, p, RM), p, RM);
        Complex::new(re, im)
    }

    pub fn scale(&self, a: &Complex, r: &BigFloat) -> Complex {
        Complex::new(a.re.mul(r, self.bits, RM), a.im.mul(r, self.bits, RM))
    }

    pub fn div(&self, a: &Complex, b: &Complex) -> Complex {
        let d = self.norm_sqr(b);
        let conj = Complex::new(b.re.clone(), b.im.neg());
        let n = self.mul(a, &conj);
        Complex::new(n.re.div(&d, self.bits, RM), n.im.div(&d, self.bits, RM))
    }

    pub fn norm_sqr(&self, a: &Complex) -> BigFloat {
        let p = self.bits;
        a.re.mul(&a.re, p, RM).add(&a.im.mul(&a.im, p, RM), p, RM)
    }

    pub fn abs(&self, a: &Complex) -> BigFloat {
        self.norm_sqr(a).sqrt(self.bits, RM)
    }

    /// Principal square root: nonnegative real part, and a nonnegative
    /// imaginary part on the negative real axis.
    pub fn sqrt(&self, a: &Complex) -> Complex {
        let p = self.bits;
        if a.re.is_zero() && a.im.is_zero() {
            return self.zero();
        }
        let r = self.abs(a);
        let half = self.pow2(-1);
        let re = r.add(&a.re, p, RM).mul(&half, p, RM).abs().sqrt(p, RM);
        let mut im = r.sub(&a.re, p, RM).mul(&half, p, RM).abs().sqrt(p, RM);
        if a.im.is_negative() {
            im = im.neg();
        }
        Complex::new(re, im)
    }

    pub fn real_le(&self, a: &BigFloat, b: &BigFloat) -> bool {
        matches!(a.cmp(b), Some(c) if c <= 0)
    }
}

/// A complex number over `BigFloat`.
#[derive(Clone, Debug)]
pub struct Complex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl Complex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        Self { re, im }
    }

    pub fn neg(&self) -> Self {
        Self::new(self.re.neg(), self.im.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `a+bi` with `digits` significant decimal digits per part.
    pub fn render(&self, digits: usize) -> String {
        let re = render_real(&self.re, digits);
        let im = render_real(&self.im, digits);
        if im.starts_with('-') {
            format!("{re}{im}i")
        } else {
            format!("{re}+{im}i")
        }
    }
}

/// Scientific notation with `digits` significant digits, e.g. `1.4142e0`.
pub fn render_real(x: &BigFloat, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut cc = Consts::new().expect("constants cache");
    let s = match x.format(Radix::Dec, RM, &mut cc) {
        Ok(s) => s,
        Err(_) => return "nan".to_string(),
    };
    let (mant, exp) = s.split_once('e').unwrap_or((&s, "0"));
    let (sign, mant) = match mant.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mant),
    };
    let exp: i64 = exp.parse().unwrap_or(0);
    let all: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    let int_len = mant.find('.').unwrap_or(mant.len()) as i64;
    let lead = all.find(|c| c != '0').unwrap_or(0);
    let d = digits.max(1);
    let body = format!("{:0<d$}", &all[lead..]);
    let exp = exp + int_len - lead as i64 - 1;
    let head = &body[..1];
    let tail = body.get(1..d).unwrap_or("");
    if tail.is_empty() {
        format!("{sign}{head}e{exp}")
    } else {
        format!("{sign}{head}.{tail}e{exp}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    const A: Arith = Arith { bits: 128 };

    fn close(a: &Complex, b: &Complex) -> bool {
        A.real_le(&A.abs(&A.sub(a, b)), &A.pow2(-100))
    }

    #[test]
    fn sqrt_squares_back() {
        for (re, im) in [(4, 0), (-4, 0), (3, 4), (-3, -4), (0, 2), (2, -7)] {
            let z = Complex::new(A.real_int(re), A.real_int(im));
            let r = A.sqrt(&z);
            assert!(close(&A.mul(&r, &r), &z), "{re} {im}");
            assert!(!r.re.is_negative());
        }
        let r = A.sqrt(&Complex::new(A.real_int(-4), A.real_int(0)));
        assert!(close(&r, &Complex::new(A.real_int(0), A.real_int(2))));
    }

    #[test]
    fn division_and_rationals() {
        let a = A.from_rational(&ratio(1, 3));
        let b = A.from_rational(&ratio(3, 1));
        assert!(close(&A.mul(&a, &b), &A.one()));
        let z = Complex::new(A.real_int(1), A.real_int(2));
        assert!(close(&A.mul(&A.div(&A.one(), &z), &z), &A.one()));
    }

    #[test]
    fn rendering() {
        assert_eq!(render_real(&A.real_int(0), 5), "0");
        assert_eq!(render_real(&A.real_int(2).sqrt(128, RM), 5), "1.4142e0");
        assert_eq!(render_real(&A.real_int(-1500), 3), "-1.50e3");
        assert_eq!(render_real(&A.pow2(-3), 3), "1.25e-1");
        assert_eq!(A.i().render(3), "0+1.00e0i");
    }
}
