//! Complex scalar tower: exact arithmetic in the cyclotomic field Q(zeta_24)
//! with a floating-point fallback, and the conjugation `tau`.
//!
//! The field Q(zeta_24) contains i, the primitive cube root omega, and the
//! 8th and 12th roots of unity, which covers every scalar produced by the
//! algebra layers above. Exact values are stored as rational coordinates in
//! the power basis 1, z, ..., z^7 reduced modulo the 24th cyclotomic
//! polynomial z^8 - z^4 + 1.

use num::rational::BigRational;
use num::{BigInt, One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::OnceLock;

type Q = BigRational;

/// Degree of Q(zeta_24) over Q.
pub const CYCLO_DEGREE: usize = 8;

/// An element of Q(zeta_24) in the reduced power basis. Rational values
/// (the overwhelmingly common case) skip the seven zero coordinates.
#[derive(Clone)]
pub enum Cyclo {
    Rat(Q),
    Poly(Box<[Q; CYCLO_DEGREE]>),
}

fn q_zero() -> Q {
    Q::zero()
}

fn zero_coeffs() -> [Q; CYCLO_DEGREE] {
    std::array::from_fn(|_| q_zero())
}

impl Cyclo {
    pub fn zero() -> Self {
        Cyclo::Rat(q_zero())
    }

    pub fn from_rational(q: Q) -> Self {
        Cyclo::Rat(q)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Q::from_integer(BigInt::from(n)))
    }

    /// Canonicalize: collapse to the rational representation when possible.
    fn normalize(self) -> Self {
        match self {
            Cyclo::Poly(p) if p[1..].iter().all(|c| c.is_zero()) => Cyclo::Rat(p[0].clone()),
            other => other,
        }
    }

    fn coeff(&self, k: usize) -> Q {
        match self {
            Cyclo::Rat(q) => {
                if k == 0 {
                    q.clone()
                } else {
                    q_zero()
                }
            }
            Cyclo::Poly(p) => p[k].clone(),
        }
    }

    fn to_coeffs(&self) -> [Q; CYCLO_DEGREE] {
        match self {
            Cyclo::Rat(q) => {
                let mut c = zero_coeffs();
                c[0] = q.clone();
                c
            }
            Cyclo::Poly(p) => (**p).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Cyclo::Rat(q) => q.is_zero(),
            Cyclo::Poly(p) => p.iter().all(|c| c.is_zero()),
        }
    }

    pub fn is_rational(&self) -> bool {
        match self {
            Cyclo::Rat(_) => true,
            Cyclo::Poly(p) => p[1..].iter().all(|c| c.is_zero()),
        }
    }

    /// zeta_24^k for any integer k, reduced to the power basis.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(24) as usize;
        zeta_table()[k].clone()
    }

    fn reduce(buf: &mut [Q; 2 * CYCLO_DEGREE - 1]) -> Self {
        // z^8 = z^4 - 1
        for k in (CYCLO_DEGREE..2 * CYCLO_DEGREE - 1).rev() {
            if buf[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut buf[k], q_zero());
            buf[k - 4] = &buf[k - 4] + &c;
            buf[k - 8] = &buf[k - 8] - &c;
        }
        let mut coeffs = zero_coeffs();
        for (dst, src) in coeffs.iter_mut().zip(buf.iter()) {
            *dst = src.clone();
        }
        Cyclo::Poly(Box::new(coeffs)).normalize()
    }

    pub fn mul(&self, rhs: &Cyclo) -> Cyclo {
        match (self, rhs) {
            (Cyclo::Rat(a), Cyclo::Rat(b)) => Cyclo::Rat(a * b),
            (Cyclo::Rat(a), other) | (other, Cyclo::Rat(a)) => other.scale(a),
            (Cyclo::Poly(a), Cyclo::Poly(b)) => {
                let mut buf: [Q; 2 * CYCLO_DEGREE - 1] = Default::default();
                for (i, ca) in a.iter().enumerate() {
                    if ca.is_zero() {
                        continue;
                    }
                    for (j, cb) in b.iter().enumerate() {
                        if cb.is_zero() {
                            continue;
                        }
                        buf[i + j] = &buf[i + j] + ca * cb;
                    }
                }
                Self::reduce(&mut buf)
            }
        }
    }

    pub fn add(&self, rhs: &Cyclo) -> Cyclo {
        match (self, rhs) {
            (Cyclo::Rat(a), Cyclo::Rat(b)) => Cyclo::Rat(a + b),
            _ => {
                let a = self.to_coeffs();
                let b = rhs.to_coeffs();
                let mut coeffs = zero_coeffs();
                for (k, dst) in coeffs.iter_mut().enumerate() {
                    *dst = &a[k] + &b[k];
                }
                Cyclo::Poly(Box::new(coeffs)).normalize()
            }
        }
    }

    pub fn sub(&self, rhs: &Cyclo) -> Cyclo {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Cyclo {
        match self {
            Cyclo::Rat(q) => Cyclo::Rat(-q),
            Cyclo::Poly(p) => {
                let mut coeffs = zero_coeffs();
                for (k, dst) in coeffs.iter_mut().enumerate() {
                    *dst = -&p[k];
                }
                Cyclo::Poly(Box::new(coeffs))
            }
        }
    }

    /// Field conjugation zeta |-> zeta^{-1}.
    pub fn conj(&self) -> Cyclo {
        match self {
            Cyclo::Rat(_) => self.clone(),
            Cyclo::Poly(p) => {
                let mut out = Cyclo::zero();
                for (k, c) in p.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let zk = Cyclo::zeta_pow(-(k as i64));
                    out = out.add(&zk.scale(c));
                }
                out
            }
        }
    }

    fn scale(&self, q: &Q) -> Cyclo {
        if q.is_zero() {
            return Cyclo::zero();
        }
        match self {
            Cyclo::Rat(a) => Cyclo::Rat(a * q),
            Cyclo::Poly(p) => {
                let mut coeffs = zero_coeffs();
                for (k, dst) in coeffs.iter_mut().enumerate() {
                    *dst = &p[k] * q;
                }
                Cyclo::Poly(Box::new(coeffs))
            }
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in
    /// Q[z] modulo z^8 - z^4 + 1. Panics on zero.
    pub fn inv(&self) -> Cyclo {
        assert!(!self.is_zero(), "division by zero scalar");
        if let Cyclo::Rat(q) = self {
            return Cyclo::Rat(q.recip());
        }
        // z^8 - z^4 + 1, coefficients low-to-high
        let modulus: Vec<Q> = {
            let mut m = vec![q_zero(); 9];
            m[0] = Q::one();
            m[4] = -Q::one();
            m[8] = Q::one();
            m
        };
        let a: Vec<Q> = self.to_coeffs().to_vec();
        let (g, _, t) = poly_ext_gcd(&modulus, &a);
        // g must be a nonzero constant
        assert_eq!(poly_deg(&g), Some(0), "element not invertible mod Phi_24");
        let ginv = g[0].recip();
        let mut buf: [Q; 2 * CYCLO_DEGREE - 1] = Default::default();
        for (k, c) in t.iter().enumerate() {
            if k < buf.len() {
                buf[k] = c * &ginv;
            }
        }
        Self::reduce(&mut buf)
    }

    pub fn to_complex(&self) -> (f64, f64) {
        match self {
            Cyclo::Rat(q) => (rational_to_f64(q), 0.0),
            Cyclo::Poly(p) => {
                let mut re = 0.0;
                let mut im = 0.0;
                for (k, c) in p.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let v = rational_to_f64(c);
                    let ang = 2.0 * std::f64::consts::PI * (k as f64) / 24.0;
                    re += v * ang.cos();
                    im += v * ang.sin();
                }
                (re, im)
            }
        }
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Cyclo::Rat(a), Cyclo::Rat(b)) => a == b,
            _ => (0..CYCLO_DEGREE).all(|k| self.coeff(k) == other.coeff(k)),
        }
    }
}

impl Eq for Cyclo {}

impl Default for Cyclo {
    fn default() -> Self {
        Cyclo::zero()
    }
}

fn rational_to_f64(q: &Q) -> f64 {
    let n = q.numer();
    let d = q.denom();
    // exact for the small rationals this library produces
    let nf: f64 = n.to_string().parse().unwrap_or(f64::NAN);
    let df: f64 = d.to_string().parse().unwrap_or(f64::NAN);
    nf / df
}

fn poly_deg(p: &[Q]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn poly_divmod(num: &[Q], den: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let dd = poly_deg(den).expect("division by zero polynomial");
    let mut rem = num.to_vec();
    let mut quot = vec![q_zero(); num.len().max(1)];
    while let Some(dr) = poly_deg(&rem) {
        if dr < dd {
            break;
        }
        let f = &rem[dr] / &den[dd];
        quot[dr - dd] = f.clone();
        for k in 0..=dd {
            let v = &den[k] * &f;
            rem[dr - dd + k] = &rem[dr - dd + k] - v;
        }
    }
    (quot, rem)
}

fn poly_ext_gcd(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>, Vec<Q>) {
    // returns (g, s, t) with s*a + t*b = g
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut s0 = vec![Q::one()];
    let mut s1 = vec![q_zero()];
    let mut t0 = vec![q_zero()];
    let mut t1 = vec![Q::one()];
    while poly_deg(&r1).is_some() {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        let t = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    (r0, s0, t0)
}

fn poly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let (da, db) = match (poly_deg(a), poly_deg(b)) {
        (Some(da), Some(db)) => (da, db),
        _ => return vec![q_zero()],
    };
    let mut out = vec![q_zero(); da + db + 1];
    for i in 0..=da {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..=db {
            if b[j].is_zero() {
                continue;
            }
            out[i + j] = &out[i + j] + &a[i] * &b[j];
        }
    }
    out
}

fn poly_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len().max(b.len());
    let mut out = vec![q_zero(); n];
    for (k, dst) in out.iter_mut().enumerate() {
        let av = a.get(k).cloned().unwrap_or_else(q_zero);
        let bv = b.get(k).cloned().unwrap_or_else(q_zero);
        *dst = av - bv;
    }
    out
}

fn zeta_table() -> &'static [Cyclo; 24] {
    static TABLE: OnceLock<[Cyclo; 24]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table: Vec<Cyclo> = Vec::with_capacity(24);
        for k in 0..24usize {
            let mut dense = vec![q_zero(); k + 1];
            dense[k] = Q::one();
            // reduce z^k by repeated z^8 = z^4 - 1
            while let Some(d) = poly_deg(&dense) {
                if d < CYCLO_DEGREE {
                    break;
                }
                let c = std::mem::replace(&mut dense[d], q_zero());
                dense[d - 4] = &dense[d - 4] + &c;
                dense[d - 8] = &dense[d - 8] - &c;
            }
            let mut coeffs = zero_coeffs();
            for (i, v) in dense.iter().enumerate().take(CYCLO_DEGREE) {
                coeffs[i] = v.clone();
            }
            table.push(Cyclo::Poly(Box::new(coeffs)).normalize());
        }
        table.try_into().unwrap_or_else(|_| unreachable!())
    })
}

/// A complex scalar, exact or floating.
///
/// Exact scalars live in Q(zeta_24); mixing an exact value with a float
/// demotes the result to float. All algebra layers are generic over this
/// tower, so a whole computation runs exact by default and floating only
/// when seeded with float inputs.
#[derive(Clone, PartialEq)]
pub enum Scalar {
    Exact(Cyclo),
    Float { re: f64, im: f64 },
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact(Cyclo::zero())
    }

    pub fn one() -> Self {
        Scalar::Exact(Cyclo::from_int(1))
    }

    pub fn int(n: i64) -> Self {
        Scalar::Exact(Cyclo::from_int(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::Exact(Cyclo::from_rational(Q::new(
            BigInt::from(num),
            BigInt::from(den),
        )))
    }

    /// The imaginary unit i = zeta_24^6.
    pub fn i() -> Self {
        Scalar::Exact(Cyclo::zeta_pow(6))
    }

    /// The primitive cube root omega = zeta_24^8.
    pub fn omega() -> Self {
        Scalar::Exact(Cyclo::zeta_pow(8))
    }

    pub fn float(re: f64, im: f64) -> Self {
        Scalar::Float { re, im }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(c) => c.is_zero(),
            Scalar::Float { re, im } => *re == 0.0 && *im == 0.0,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    /// Complex conjugation; the field automorphism zeta |-> zeta^{-1} on
    /// exact values.
    pub fn tau(&self) -> Scalar {
        match self {
            Scalar::Exact(c) => Scalar::Exact(c.conj()),
            Scalar::Float { re, im } => Scalar::Float { re: *re, im: -im },
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Exact(c) => Scalar::Exact(c.inv()),
            Scalar::Float { re, im } => {
                let n = re * re + im * im;
                Scalar::Float {
                    re: re / n,
                    im: -im / n,
                }
            }
        }
    }

    pub fn to_complex(&self) -> (f64, f64) {
        match self {
            Scalar::Exact(c) => c.to_complex(),
            Scalar::Float { re, im } => (*re, *im),
        }
    }

    /// Demote to the float realization.
    pub fn to_float(&self) -> Scalar {
        let (re, im) = self.to_complex();
        Scalar::Float { re, im }
    }

    pub fn abs(&self) -> f64 {
        let (re, im) = self.to_complex();
        (re * re + im * im).sqrt()
    }

    /// Real part (z + tau z)/2, an element of the real subfield.
    pub fn re_part(&self) -> Scalar {
        match self {
            Scalar::Exact(_) => {
                let half = Scalar::ratio(1, 2);
                &(self + &self.tau()) * &half
            }
            Scalar::Float { re, .. } => Scalar::Float { re: *re, im: 0.0 },
        }
    }

    /// Imaginary part (z - tau z)/(2i), an element of the real subfield.
    pub fn im_part(&self) -> Scalar {
        match self {
            Scalar::Exact(_) => {
                let half_over_i = &Scalar::ratio(-1, 2) * &Scalar::i();
                &(self - &self.tau()) * &half_over_i
            }
            Scalar::Float { im, .. } => Scalar::Float { re: *im, im: 0.0 },
        }
    }

    pub fn approx_eq(&self, other: &Scalar, tol: f64) -> bool {
        let (ar, ai) = self.to_complex();
        let (br, bi) = other.to_complex();
        (ar - br).abs() <= tol && (ai - bi).abs() <= tol
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(c) => {
                if c.is_zero() {
                    return write!(f, "0");
                }
                let mut first = true;
                for k in 0..CYCLO_DEGREE {
                    let q = c.coeff(k);
                    if q.is_zero() {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    if k == 0 {
                        write!(f, "{}", q)?;
                    } else {
                        write!(f, "{}*z{}", q, k)?;
                    }
                }
                Ok(())
            }
            Scalar::Float { re, im } => write!(f, "{}+{}i", re, im),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a.add(b)),
            _ => {
                let (ar, ai) = self.to_complex();
                let (br, bi) = rhs.to_complex();
                Scalar::Float {
                    re: ar + br,
                    im: ai + bi,
                }
            }
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a.sub(b)),
            _ => {
                let (ar, ai) = self.to_complex();
                let (br, bi) = rhs.to_complex();
                Scalar::Float {
                    re: ar - br,
                    im: ai - bi,
                }
            }
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a.mul(b)),
            _ => {
                let (ar, ai) = self.to_complex();
                let (br, bi) = rhs.to_complex();
                Scalar::Float {
                    re: ar * br - ai * bi,
                    im: ar * bi + ai * br,
                }
            }
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(c) => Scalar::Exact(c.neg()),
            Scalar::Float { re, im } => Scalar::Float { re: -re, im: -im },
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $fn:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $fn(self, rhs: Scalar) -> Scalar {
                (&self).$fn(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $fn(self, rhs: &Scalar) -> Scalar {
                (&self).$fn(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Errors raised by scalar constructors.
#[derive(Debug, thiserror::Error)]
pub enum ScalarError {
    #[error("order {0} does not divide 24; not representable exactly")]
    OrderNotDividing24(u32),
}

/// exp(2 pi i k / n) as an exact scalar. Requires n | 24.
pub fn root_of_unity(n: u32, k: i64) -> Result<Scalar, ScalarError> {
    if n == 0 || 24 % n != 0 {
        return Err(ScalarError::OrderNotDividing24(n));
    }
    let step = (24 / n) as i64;
    Ok(Scalar::Exact(Cyclo::zeta_pow(step * k)))
}

/// exp(2 pi i k / n) in the float realization, any n >= 1.
pub fn root_of_unity_float(n: u32, k: i64) -> Scalar {
    let ang = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64);
    Scalar::Float {
        re: ang.cos(),
        im: ang.sin(),
    }
}
