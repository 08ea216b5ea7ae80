//! Exact scalar arithmetic in the three coefficient fields used by the rest
//! of the crate: the rationals, cyclotomic extensions `Q(zeta_N)`, and the
//! rational function field `Q(t)`.
//!
//! Every element is kept in a canonical form (reduced fractions, residues of
//! degree less than the cyclotomic modulus, coprime fractions with monic
//! denominator), so equality and zero-testing are plain representation
//! comparisons. No floating point is involved anywhere.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num::{BigInt, BigRational, One, Zero};

use crate::error::Error;

/// Which coefficient field scalars live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// The rational numbers `Q`.
    Rational,
    /// The cyclotomic field `Q(zeta_N)`, i.e. `Q[z]` modulo the N-th
    /// cyclotomic polynomial. `N >= 1`.
    Cyclotomic(u32),
    /// The field of rational functions `Q(t)` in one formal parameter.
    Generic,
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::Cyclotomic(n) => write!(f, "cyclotomic:{n}"),
            FieldSpec::Generic => write!(f, "generic"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "rational" => Ok(FieldSpec::Rational),
            "generic" => Ok(FieldSpec::Generic),
            _ => {
                let n = s
                    .strip_prefix("cyclotomic:")
                    .and_then(|n| n.parse::<u32>().ok())
                    .filter(|n| *n >= 1)
                    .ok_or_else(|| {
                        Error::Parse(format!(
                            "unknown field {s:?}; expected rational, cyclotomic:N, or generic"
                        ))
                    })?;
                Ok(FieldSpec::Cyclotomic(n))
            }
        }
    }
}

type Coeffs = Vec<BigRational>;

fn trim(mut v: Coeffs) -> Coeffs {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn p_add(a: &[BigRational], b: &[BigRational]) -> Coeffs {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut c = BigRational::zero();
        if i < a.len() {
            c += &a[i];
        }
        if i < b.len() {
            c += &b[i];
        }
        out.push(c);
    }
    trim(out)
}

fn p_neg(a: &[BigRational]) -> Coeffs {
    a.iter().map(|c| -c.clone()).collect()
}

fn p_sub(a: &[BigRational], b: &[BigRational]) -> Coeffs {
    p_add(a, &p_neg(b))
}

fn p_mul(a: &[BigRational], b: &[BigRational]) -> Coeffs {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    trim(out)
}

/// Exact division with remainder; the divisor must be nonzero.
fn p_divrem(num: &[BigRational], den: &[BigRational]) -> (Coeffs, Coeffs) {
    assert!(!den.is_empty(), "polynomial division by zero");
    let mut rem: Coeffs = trim(num.to_vec());
    let dd = den.len() - 1;
    let lead = &den[dd];
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    while rem.len() > dd {
        let k = rem.len() - 1 - dd;
        let c = rem.last().unwrap() / lead;
        quot[k] = c.clone();
        for i in 0..=dd {
            let t = &c * &den[i];
            rem[k + i] -= t;
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

fn p_monic(v: Coeffs) -> Coeffs {
    match v.last() {
        None => v,
        Some(lead) if lead.is_one() => v,
        Some(lead) => {
            let l = lead.clone();
            v.into_iter().map(|c| c / &l).collect()
        }
    }
}

fn p_gcd(a: &[BigRational], b: &[BigRational]) -> Coeffs {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = p_divrem(&x, &y);
        x = y;
        y = r;
    }
    p_monic(x)
}

fn p_const(c: BigRational) -> Coeffs {
    trim(vec![c])
}

fn p_one() -> Coeffs {
    vec![BigRational::one()]
}

/// `x^n - 1`.
fn p_xn_minus_1(n: u32) -> Coeffs {
    let mut v = vec![BigRational::zero(); n as usize + 1];
    v[0] = -BigRational::one();
    v[n as usize] = BigRational::one();
    v
}

fn cyclo_cache() -> &'static Mutex<HashMap<u32, Coeffs>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Coeffs>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The N-th cyclotomic polynomial `Phi_N` over `Q`, computed as
/// `(x^N - 1) / prod_{d | N, d < N} Phi_d` and memoized.
pub(crate) fn cyclotomic_polynomial(n: u32) -> Coeffs {
    assert!(n >= 1, "cyclotomic index must be at least 1");
    if let Some(v) = cyclo_cache().lock().unwrap().get(&n) {
        return v.clone();
    }
    let mut result = p_xn_minus_1(n);
    for d in 1..n {
        if n % d == 0 {
            let pd = cyclotomic_polynomial(d);
            let (q, r) = p_divrem(&result, &pd);
            debug_assert!(r.is_empty());
            result = q;
        }
    }
    cyclo_cache().lock().unwrap().insert(n, result.clone());
    result
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    Rational(BigRational),
    /// Residue coefficients, degree strictly below `deg Phi_N`, trailing
    /// zeros trimmed. Empty vector is zero.
    Cyclotomic(Coeffs),
    /// Coprime fraction of polynomials in `t` with monic nonzero denominator.
    Generic { num: Coeffs, den: Coeffs },
}

/// A scalar in one of the supported exact fields.
///
/// Arithmetic between elements of different `FieldSpec`s is a programming
/// error and panics; use the spec-checked constructors at data boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    spec: FieldSpec,
    repr: Repr,
}

impl FieldElement {
    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn zero(spec: FieldSpec) -> Self {
        Self::from_big_rational(spec, BigRational::zero())
    }

    pub fn one(spec: FieldSpec) -> Self {
        Self::from_big_rational(spec, BigRational::one())
    }

    pub fn from_int(spec: FieldSpec, n: i64) -> Self {
        Self::from_big_rational(spec, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(spec: FieldSpec, num: i64, den: i64) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_big_rational(
            spec,
            BigRational::new(BigInt::from(num), BigInt::from(den)),
        ))
    }

    pub fn from_big_rational(spec: FieldSpec, r: BigRational) -> Self {
        let repr = match spec {
            FieldSpec::Rational => Repr::Rational(r),
            FieldSpec::Cyclotomic(n) => {
                // Phi_1 = x - 1 has degree 1, so constants always survive.
                let _ = n;
                Repr::Cyclotomic(p_const(r))
            }
            FieldSpec::Generic => Repr::Generic { num: p_const(r), den: p_one() },
        };
        FieldElement { spec, repr }
    }

    /// The distinguished generator: `zeta_N` in cyclotomic mode, `t` in
    /// generic mode. The rationals have none.
    pub fn generator(spec: FieldSpec) -> Option<Self> {
        let x = vec![BigRational::zero(), BigRational::one()];
        match spec {
            FieldSpec::Rational => None,
            FieldSpec::Cyclotomic(_) => Some(Self::from_coeffs(spec, x)),
            FieldSpec::Generic => Some(FieldElement {
                spec,
                repr: Repr::Generic { num: x, den: p_one() },
            }),
        }
    }

    /// Builds an element from polynomial coefficients in the generator.
    ///
    /// In rational mode only constant polynomials are meaningful, so higher
    /// coefficients are rejected by the parser before reaching here.
    fn from_coeffs(spec: FieldSpec, coeffs: Coeffs) -> Self {
        let coeffs = trim(coeffs);
        let repr = match spec {
            FieldSpec::Rational => {
                assert!(coeffs.len() <= 1, "non-constant polynomial in rational mode");
                Repr::Rational(coeffs.into_iter().next().unwrap_or_else(BigRational::zero))
            }
            FieldSpec::Cyclotomic(n) => {
                let modulus = cyclotomic_polynomial(n);
                let (_, r) = p_divrem(&coeffs, &modulus);
                Repr::Cyclotomic(r)
            }
            FieldSpec::Generic => Repr::Generic { num: coeffs, den: p_one() },
        };
        FieldElement { spec, repr }
    }

    fn normalize_generic(num: Coeffs, den: Coeffs) -> (Coeffs, Coeffs) {
        assert!(!den.is_empty(), "zero denominator");
        if num.is_empty() {
            return (Vec::new(), p_one());
        }
        let g = p_gcd(&num, &den);
        let (num, _) = p_divrem(&num, &g);
        let (den, _) = p_divrem(&den, &g);
        let lead = den.last().unwrap().clone();
        let num = num.into_iter().map(|c| c / &lead).collect();
        let den = p_monic(den);
        (num, den)
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rational(r) => r.is_zero(),
            Repr::Cyclotomic(c) => c.is_empty(),
            Repr::Generic { num, .. } => num.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == FieldElement::one(self.spec)
    }

    fn assert_same_spec(&self, other: &Self) {
        assert_eq!(
            self.spec, other.spec,
            "field spec mismatch: {} vs {}",
            self.spec, other.spec
        );
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let repr = match &self.repr {
            Repr::Rational(r) => Repr::Rational(r.recip()),
            Repr::Cyclotomic(c) => {
                let modulus = match self.spec {
                    FieldSpec::Cyclotomic(n) => cyclotomic_polynomial(n),
                    _ => unreachable!(),
                };
                Repr::Cyclotomic(ext_gcd_inverse(c, &modulus))
            }
            Repr::Generic { num, den } => {
                let (n, d) = Self::normalize_generic(den.clone(), num.clone());
                Repr::Generic { num: n, den: d }
            }
        };
        Ok(FieldElement { spec: self.spec, repr })
    }

    /// Integer power, with negative exponents via inversion.
    pub fn pow(&self, e: i128) -> Result<Self, Error> {
        if e == 0 {
            return Ok(Self::one(self.spec));
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = Self::one(self.spec);
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &sq;
            }
            exp >>= 1;
            if exp > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Returns the least `k` in `1..=bound` with `self^k == 1`, if any.
    pub fn is_root_of_unity(&self, bound: u32) -> Option<u32> {
        let one = Self::one(self.spec);
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc == one {
                return Some(k);
            }
            acc = &acc * self;
        }
        None
    }

    /// Parses the scalar literal syntax: an integer `-3`, a fraction `5/7`,
    /// a coefficient list `[1,-2/3,1]` in the field generator, or a quotient
    /// of two such terms (top-level `/` outside brackets).
    pub fn parse(spec: FieldSpec, s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar literal".into()));
        }
        let mut depth = 0usize;
        let mut split = None;
        for (i, ch) in s.char_indices() {
            match ch {
                '[' => depth += 1,
                ']' => {
                    depth = depth
                        .checked_sub(1)
                        .ok_or_else(|| Error::Parse(format!("unbalanced brackets in {s:?}")))?;
                }
                '/' if depth == 0 => {
                    if split.is_some() {
                        return Err(Error::Parse(format!("more than one top-level '/' in {s:?}")));
                    }
                    split = Some(i);
                }
                _ => {}
            }
        }
        if depth != 0 {
            return Err(Error::Parse(format!("unbalanced brackets in {s:?}")));
        }
        match split {
            None => Self::parse_term(spec, s),
            Some(i) => {
                let num = Self::parse_term(spec, &s[..i])?;
                let den = Self::parse_term(spec, &s[i + 1..])?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(&num * &den.inv()?)
            }
        }
    }

    fn parse_term(spec: FieldSpec, s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse(format!("unterminated list in {s:?}")))?;
            let mut coeffs = Vec::new();
            if !inner.trim().is_empty() {
                for part in inner.split(',') {
                    coeffs.push(parse_rational(part)?);
                }
            }
            if spec == FieldSpec::Rational && trim(coeffs.clone()).len() > 1 {
                return Err(Error::Parse(format!(
                    "non-constant coefficient list {s:?} in rational mode"
                )));
            }
            Ok(Self::from_coeffs(spec, coeffs))
        } else {
            Ok(Self::from_big_rational(spec, parse_rational(s)?))
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    s.parse::<BigRational>()
        .map_err(|_| Error::Parse(format!("invalid rational literal {s:?}")))
}

/// Inverse of `a` modulo `m` (both over `Q`, `m` irreducible, `a` nonzero).
fn ext_gcd_inverse(a: &[BigRational], m: &[BigRational]) -> Coeffs {
    // Extended Euclid: maintain r = s*a + t*m and return s when r is a unit.
    let mut r0: Coeffs = m.to_vec();
    let mut r1: Coeffs = a.to_vec();
    let mut s0: Coeffs = Vec::new();
    let mut s1: Coeffs = p_one();
    while !r1.is_empty() {
        let (q, r) = p_divrem(&r0, &r1);
        let s = p_sub(&s0, &p_mul(&q, &s1));
        r0 = r1;
        s0 = s1;
        r1 = r;
        s1 = s;
    }
    assert_eq!(r0.len(), 1, "modulus not coprime to argument");
    let unit = r0[0].clone();
    let inv: Coeffs = s0.into_iter().map(|c| c / &unit).collect();
    let (_, rem) = p_divrem(&inv, m);
    rem
}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_spec(rhs);
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a + b),
            (Repr::Cyclotomic(a), Repr::Cyclotomic(b)) => Repr::Cyclotomic(p_add(a, b)),
            (Repr::Generic { num: n1, den: d1 }, Repr::Generic { num: n2, den: d2 }) => {
                let num = p_add(&p_mul(n1, d2), &p_mul(n2, d1));
                let den = p_mul(d1, d2);
                let (num, den) = FieldElement::normalize_generic(num, den);
                Repr::Generic { num, den }
            }
            _ => unreachable!(),
        };
        FieldElement { spec: self.spec, repr }
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let repr = match &self.repr {
            Repr::Rational(a) => Repr::Rational(-a),
            Repr::Cyclotomic(a) => Repr::Cyclotomic(p_neg(a)),
            Repr::Generic { num, den } => {
                Repr::Generic { num: p_neg(num), den: den.clone() }
            }
        };
        FieldElement { spec: self.spec, repr }
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_spec(rhs);
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a * b),
            (Repr::Cyclotomic(a), Repr::Cyclotomic(b)) => {
                let modulus = match self.spec {
                    FieldSpec::Cyclotomic(n) => cyclotomic_polynomial(n),
                    _ => unreachable!(),
                };
                let (_, r) = p_divrem(&p_mul(a, b), &modulus);
                Repr::Cyclotomic(r)
            }
            (Repr::Generic { num: n1, den: d1 }, Repr::Generic { num: n2, den: d2 }) => {
                let (num, den) =
                    FieldElement::normalize_generic(p_mul(n1, n2), p_mul(d1, d2));
                Repr::Generic { num, den }
            }
            _ => unreachable!(),
        };
        FieldElement { spec: self.spec, repr }
    }
}

fn fmt_ratio(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

fn fmt_poly_term(c: &[BigRational], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.len() <= 1 {
        return fmt_ratio(c.first().unwrap_or(&BigRational::zero()), f);
    }
    write!(f, "[")?;
    for (i, coeff) in c.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        fmt_ratio(coeff, f)?;
    }
    write!(f, "]")
}

impl fmt::Display for FieldElement {
    /// Renders the canonical literal; `parse` round-trips this exactly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rational(r) => fmt_ratio(r, f),
            Repr::Cyclotomic(c) => fmt_poly_term(c, f),
            Repr::Generic { num, den } => {
                if den.len() == 1 {
                    fmt_poly_term(num, f)
                } else {
                    fmt_poly_term(num, f)?;
                    write!(f, "/")?;
                    fmt_poly_term(den, f)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: u32) -> FieldElement {
        FieldElement::generator(FieldSpec::Cyclotomic(n)).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials_match_known_tables() {
        let as_i64 = |v: Coeffs| -> Vec<i64> {
            v.iter().map(|c| {
                assert!(c.denom().is_one());
                i64::try_from(c.numer().clone()).unwrap()
            }).collect()
        };
        assert_eq!(as_i64(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(5)), vec![1, 1, 1, 1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
        // First index with a coefficient outside {-1, 0, 1}.
        let c105 = cyclotomic_polynomial(105);
        assert_eq!(c105[7], BigRational::from_integer(BigInt::from(-2)));
    }

    #[test]
    fn rational_arithmetic_reduces() {
        let s = FieldSpec::Rational;
        let half = FieldElement::from_ratio(s, 1, 2).unwrap();
        let third = FieldElement::from_ratio(s, 1, 3).unwrap();
        let sum = &half + &third;
        assert_eq!(sum, FieldElement::from_ratio(s, 5, 6).unwrap());
        assert_eq!(sum.to_string(), "5/6");
        assert_eq!(&half - &half, FieldElement::zero(s));
    }

    #[test]
    fn zeta_three_satisfies_its_minimal_polynomial() {
        let z = q(3);
        let z2 = z.pow(2).unwrap();
        let sum = &(&z2 + &z) + &FieldElement::one(z.spec());
        assert!(sum.is_zero());
        // zeta + zeta^2 = -1
        assert_eq!(&z + &z2, -&FieldElement::one(z.spec()));
    }

    #[test]
    fn quartic_root_defect_is_nonzero() {
        // 1 - q - q^2 + q^3 at q = zeta_4 reduces to 2 - 2q.
        let z = q(4);
        let one = FieldElement::one(z.spec());
        let v = &(&(&one - &z) - &z.pow(2).unwrap()) + &z.pow(3).unwrap();
        let two = FieldElement::from_int(z.spec(), 2);
        let expected = &two - &(&two * &z);
        assert_eq!(v, expected);
        assert!(!v.is_zero());
        assert_eq!(v.to_string(), "[2,-2]");
    }

    #[test]
    fn cyclotomic_inverse_via_extended_euclid() {
        let z = q(3);
        let inv = z.inv().unwrap();
        assert!((&z * &inv).is_one());
        // 1/zeta_3 = zeta_3^2 = -1 - zeta_3.
        assert_eq!(inv, z.pow(2).unwrap());
        assert_eq!(inv.to_string(), "[-1,-1]");
    }

    #[test]
    fn generic_fractions_normalize_to_monic_coprime_form() {
        let s = FieldSpec::Generic;
        let t = FieldElement::generator(s).unwrap();
        let one = FieldElement::one(s);
        // (t^2 - 1) / (t - 1) = t + 1.
        let n = &t.pow(2).unwrap() - &one;
        let d = &t - &one;
        let v = &n * &d.inv().unwrap();
        assert_eq!(v, &t + &one);
        assert_eq!(v.to_string(), "[1,1]");
        let tinv = t.inv().unwrap();
        assert_eq!(tinv.to_string(), "1/[0,1]");
        assert!((&t * &tinv).is_one());
    }

    #[test]
    fn root_of_unity_detection() {
        assert_eq!(q(3).is_root_of_unity(10), Some(3));
        assert_eq!(q(12).is_root_of_unity(12), Some(12));
        let minus_one = FieldElement::from_int(FieldSpec::Rational, -1);
        assert_eq!(minus_one.is_root_of_unity(8), Some(2));
        let t = FieldElement::generator(FieldSpec::Generic).unwrap();
        assert_eq!(t.is_root_of_unity(8), None);
        let two = FieldElement::from_int(FieldSpec::Rational, 2);
        assert_eq!(two.is_root_of_unity(16), None);
    }

    #[test]
    fn negative_powers() {
        let z = q(5);
        assert_eq!(z.pow(-1).unwrap(), z.pow(4).unwrap());
        assert_eq!(z.pow(-7).unwrap(), z.pow(3).unwrap());
        assert!(FieldElement::zero(FieldSpec::Rational).pow(-1).is_err());
        assert!(FieldElement::zero(FieldSpec::Rational).pow(0).unwrap().is_one());
    }

    #[test]
    fn parse_and_display_round_trip() {
        let cases = [
            (FieldSpec::Rational, "5"),
            (FieldSpec::Rational, "-3/7"),
            (FieldSpec::Cyclotomic(4), "[2,-2]"),
            (FieldSpec::Cyclotomic(3), "[-1,-1]"),
            (FieldSpec::Cyclotomic(3), "1/2"),
            (FieldSpec::Generic, "[1,1]"),
            (FieldSpec::Generic, "1/[0,1]"),
            (FieldSpec::Generic, "[0,3]/[1,0,1]"),
            (FieldSpec::Generic, "-2/3"),
        ];
        for (spec, text) in cases {
            let v = FieldElement::parse(spec, text).unwrap();
            assert_eq!(v.to_string(), text, "round trip failed for {text}");
            assert_eq!(FieldElement::parse(spec, &v.to_string()).unwrap(), v);
        }
    }

    #[test]
    fn parse_reduces_to_canonical_form() {
        // zeta_4^2 folds to the constant -1.
        let v = FieldElement::parse(FieldSpec::Cyclotomic(4), "[0,0,1]").unwrap();
        assert_eq!(v, FieldElement::from_int(FieldSpec::Cyclotomic(4), -1));
        assert_eq!(v.to_string(), "-1");
        // [0,2]/[0,4] reduces to 1/2.
        let w = FieldElement::parse(FieldSpec::Generic, "[0,2]/[0,4]").unwrap();
        assert_eq!(w, FieldElement::from_ratio(FieldSpec::Generic, 1, 2).unwrap());
        // Division of plain integers parses as a fraction.
        let u = FieldElement::parse(FieldSpec::Rational, "6/4").unwrap();
        assert_eq!(u.to_string(), "3/2");
    }

    #[test]
    fn parse_rejects_malformed_literals() {
        assert!(FieldElement::parse(FieldSpec::Rational, "").is_err());
        assert!(FieldElement::parse(FieldSpec::Rational, "[1,2]").is_err());
        assert!(FieldElement::parse(FieldSpec::Rational, "1/0").is_err());
        assert!(FieldElement::parse(FieldSpec::Rational, "1/2/3").is_err());
        assert!(FieldElement::parse(FieldSpec::Cyclotomic(3), "[1,").is_err());
        assert!(FieldElement::parse(FieldSpec::Cyclotomic(3), "x").is_err());
        assert!(FieldElement::parse(FieldSpec::Generic, "[1]/[0]").is_err());
    }

    #[test]
    #[should_panic(expected = "field spec mismatch")]
    fn mixed_spec_arithmetic_panics() {
        let a = FieldElement::one(FieldSpec::Rational);
        let b = FieldElement::one(FieldSpec::Generic);
        let _ = &a + &b;
    }
}
