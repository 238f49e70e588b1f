//! Exact coefficient fields: GF(p), GF(p^k) for k <= 4, Q and Q(w).
//!
//! Scalars are plain values; all arithmetic goes through the owning [`Field`],
//! which carries the modulus and knows how to reduce. Representations are
//! canonical so structural equality is field equality.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Largest extension field order accepted at construction.
pub const MAX_EXTENSION_ORDER: u64 = 1 << 32;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Prime(u64),
    /// `modulus` is monic, coefficients low to high, length `degree + 1`.
    Extension {
        p: u64,
        modulus: Vec<u64>,
    },
    Rationals,
    /// Q adjoined a primitive cube root of unity w, with w^2 = -1 - w.
    RationalsOmega,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cardinality {
    Finite(u64),
    Infinite,
}

/// A field element in canonical form.
///
/// * `Fin(c)`: for GF(p) the least nonnegative residue; for GF(p^k) the
///   code `c0 + c1 p + ... + c_{k-1} p^{k-1}` of the reduced polynomial
///   `c0 + c1 t + ...`.
/// * `Rat(r)`: reduced fraction with positive denominator.
/// * `Omega(a, b)`: `a + b w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Fin(u64),
    Rat(BigRational),
    Omega(BigRational, BigRational),
}

/// Field descriptor. Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Field(Arc<FieldKind>);

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Remainder of `a` modulo a monic `m` over GF(p); both low to high.
fn poly_rem_modp(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let k = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > k {
        let c = r.pop().unwrap();
        if c != 0 {
            let base = r.len() - k;
            for (i, &mi) in m[..k].iter().enumerate() {
                r[base + i] = (r[base + i] + (p - c) * mi) % p;
            }
        }
    }
    r
}

fn eval_modp(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

/// Exhaustive irreducibility check for a monic polynomial of degree 2..=4.
fn is_irreducible_small(modulus: &[u64], p: u64) -> bool {
    let degree = modulus.len() - 1;
    if (0..p).any(|x| eval_modp(modulus, x, p) == 0) {
        return false;
    }
    if degree == 4 {
        for a in 0..p {
            for b in 0..p {
                let quad = [b, a, 1];
                if poly_rem_modp(modulus, &quad, p).iter().all(|&c| c == 0) {
                    return false;
                }
            }
        }
    }
    true
}

fn format_poly(coeffs: &[u64], var: char) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => var.to_string(),
            (1, c) => format!("{c}*{var}"),
            (i, 1) => format!("{var}^{i}"),
            (i, c) => format!("{c}*{var}^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// Parses `[+-] term ([+-] term)*` where a term is `c`, `c*v`, `c*v^n`, `v` or `v^n`
/// and `c` is an integer or `num/den`.
fn parse_terms(input: &str, var: Option<char>) -> std::result::Result<Vec<(BigRational, u32)>, String> {
    let s: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty expression".into());
    }
    let mut pos = 0;
    let mut terms = Vec::new();
    let read_int = |pos: &mut usize| -> Option<BigInt> {
        let start = *pos;
        while *pos < s.len() && s[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if start == *pos {
            None
        } else {
            s[start..*pos].iter().collect::<String>().parse().ok()
        }
    };
    while pos < s.len() {
        let negative = match s[pos] {
            '+' => {
                pos += 1;
                false
            }
            '-' => {
                pos += 1;
                true
            }
            _ if terms.is_empty() => false,
            c => return Err(format!("unexpected `{c}`")),
        };
        let mut coeff = match read_int(&mut pos) {
            Some(num) => {
                if pos < s.len() && s[pos] == '/' {
                    pos += 1;
                    let den = read_int(&mut pos).ok_or("missing denominator")?;
                    if den.is_zero() {
                        return Err("zero denominator".into());
                    }
                    Some(BigRational::new(num, den))
                } else {
                    Some(BigRational::from_integer(num))
                }
            }
            None => None,
        };
        let mut power = 0u32;
        let has_star = pos < s.len() && s[pos] == '*';
        if has_star {
            if coeff.is_none() {
                return Err("`*` without coefficient".into());
            }
            pos += 1;
        }
        if pos < s.len() && Some(s[pos]) == var {
            pos += 1;
            power = 1;
            if pos < s.len() && s[pos] == '^' {
                pos += 1;
                power = read_int(&mut pos).and_then(|n| n.to_u32()).ok_or("bad exponent")?;
            }
        } else if has_star || coeff.is_none() {
            return Err(format!("expected term at position {pos}"));
        }
        let mut c = coeff.take().unwrap_or_else(BigRational::one);
        if negative {
            c = -c;
        }
        terms.push((c, power));
    }
    Ok(terms)
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 32 {
            return Err(Error::NotPrime(p));
        }
        Ok(Field(Arc::new(FieldKind::Prime(p))))
    }

    /// GF(p^k) with the given modulus (low to high coefficients, any nonzero
    /// leading coefficient; normalized to monic).
    pub fn extension(p: u64, modulus: &[u64]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut m: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        while m.last() == Some(&0) {
            m.pop();
        }
        let degree = m.len().saturating_sub(1);
        if !(2..=4).contains(&degree) {
            return Err(Error::UnsupportedExtension(format!(
                "modulus degree {degree} outside 2..=4"
            )));
        }
        match p.checked_pow(degree as u32) {
            Some(q) if q <= MAX_EXTENSION_ORDER => {}
            _ => return Err(Error::UnsupportedExtension(format!("order {p}^{degree} too large"))),
        }
        let lead_inv = mod_pow(m[degree], p - 2, p);
        for c in m.iter_mut() {
            *c = *c * lead_inv % p;
        }
        if !is_irreducible_small(&m, p) {
            return Err(Error::ReducibleModulus(format_poly(&m, 't'), p));
        }
        Ok(Field(Arc::new(FieldKind::Extension { p, modulus: m })))
    }

    /// The field with `q` elements; extension fields use the smallest monic
    /// irreducible modulus in coefficient-code order.
    pub fn finite(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::NotPrime(q));
        }
        let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
        let mut k = 0u32;
        let mut rest = q;
        while rest.is_multiple_of(p) {
            rest /= p;
            k += 1;
        }
        if rest != 1 {
            return Err(Error::BadFieldSpec(
                format!("gf({q})"),
                "order is not a prime power".into(),
            ));
        }
        if k == 1 {
            return Field::prime(p);
        }
        Field::default_extension(p, k)
    }

    pub fn default_extension(p: u64, degree: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !(2..=4).contains(&degree) {
            return Err(Error::UnsupportedExtension(format!("degree {degree} outside 2..=4")));
        }
        let count = p
            .checked_pow(degree)
            .filter(|&q| q <= MAX_EXTENSION_ORDER)
            .ok_or_else(|| Error::UnsupportedExtension(format!("order {p}^{degree} too large")))?;
        for code in 0..count {
            let mut m: Vec<u64> = (0..degree).map(|i| code / p.pow(i) % p).collect();
            m.push(1);
            if is_irreducible_small(&m, p) {
                return Ok(Field(Arc::new(FieldKind::Extension { p, modulus: m })));
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn rationals() -> Self {
        Field(Arc::new(FieldKind::Rationals))
    }

    pub fn rationals_omega() -> Self {
        Field(Arc::new(FieldKind::RationalsOmega))
    }

    /// Parses `gf(7)`, `gf(9)`, `gf(3^2)`, `gf(3^2;t^2+1)`, `q`, `q(w)`.
    pub fn parse(spec: &str) -> Result<Self> {
        let s: String = spec
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .to_lowercase();
        let bad = |why: &str| Error::BadFieldSpec(spec.to_string(), why.to_string());
        match s.as_str() {
            "q" => return Ok(Field::rationals()),
            "q(w)" => return Ok(Field::rationals_omega()),
            _ => {}
        }
        let inner = s
            .strip_prefix("gf(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| bad("expected gf(...), q or q(w)"))?;
        let (order, modulus) = match inner.split_once(';') {
            Some((o, m)) => (o, Some(m)),
            None => (inner, None),
        };
        let (p, k) = match order.split_once('^') {
            Some((p, k)) => (
                p.parse::<u64>().map_err(|_| bad("bad prime"))?,
                Some(k.parse::<u32>().map_err(|_| bad("bad degree"))?),
            ),
            None => (order.parse::<u64>().map_err(|_| bad("bad order"))?, None),
        };
        match (k, modulus) {
            (None, None) => Field::finite(p),
            (Some(1), None) => Field::prime(p),
            (Some(k), None) => Field::default_extension(p, k),
            (k, Some(m)) => {
                let terms = parse_terms(m, Some('t')).map_err(|e| bad(&e))?;
                let degree = terms.iter().map(|(_, d)| *d).max().unwrap_or(0) as usize;
                let mut coeffs = vec![0u64; degree + 1];
                for (c, d) in terms {
                    if !c.is_integer() {
                        return Err(bad("modulus coefficients must be integers"));
                    }
                    let r = c.to_integer().mod_floor(&BigInt::from(p)).to_u64().unwrap();
                    coeffs[d as usize] = (coeffs[d as usize] + r) % p;
                }
                let field = Field::extension(p, &coeffs)?;
                if let Some(k) = k {
                    if field.degree() != k {
                        return Err(bad("modulus degree does not match exponent"));
                    }
                }
                Ok(field)
            }
        }
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0
    }

    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            FieldKind::Prime(p) | FieldKind::Extension { p, .. } => *p,
            _ => 0,
        }
    }

    /// Degree over the prime field (1 for GF(p), Q; 2 for Q(w)).
    pub fn degree(&self) -> u32 {
        match &*self.0 {
            FieldKind::Extension { modulus, .. } => (modulus.len() - 1) as u32,
            FieldKind::RationalsOmega => 2,
            _ => 1,
        }
    }

    pub fn cardinality(&self) -> Cardinality {
        match &*self.0 {
            FieldKind::Prime(p) => Cardinality::Finite(*p),
            FieldKind::Extension { p, modulus } => Cardinality::Finite(p.pow(modulus.len() as u32 - 1)),
            _ => Cardinality::Infinite,
        }
    }

    pub fn order(&self) -> Option<u64> {
        match self.cardinality() {
            Cardinality::Finite(q) => Some(q),
            Cardinality::Infinite => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    pub fn zero(&self) -> Scalar {
        match &*self.0 {
            FieldKind::Prime(_) | FieldKind::Extension { .. } => Scalar::Fin(0),
            FieldKind::Rationals => Scalar::Rat(BigRational::zero()),
            FieldKind::RationalsOmega => Scalar::Omega(BigRational::zero(), BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match &*self.0 {
            FieldKind::Prime(p) | FieldKind::Extension { p, .. } => {
                Scalar::Fin(n.mod_floor(&BigInt::from(*p)).to_u64().unwrap())
            }
            FieldKind::Rationals => Scalar::Rat(BigRational::from_integer(n.clone())),
            FieldKind::RationalsOmega => Scalar::Omega(BigRational::from_integer(n.clone()), BigRational::zero()),
        }
    }

    pub fn from_rational(&self, r: &BigRational) -> Result<Scalar> {
        let num = self.from_bigint(r.numer());
        let den = self.from_bigint(r.denom());
        self.div(&num, &den)
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        *a == self.zero()
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        *a == self.one()
    }

    /// True when `a` is a canonical element of this field.
    pub fn contains(&self, a: &Scalar) -> bool {
        match (&*self.0, a) {
            (FieldKind::Prime(p), Scalar::Fin(c)) => c < p,
            (FieldKind::Extension { .. }, Scalar::Fin(c)) => *c < self.order().unwrap(),
            (FieldKind::Rationals, Scalar::Rat(_)) => true,
            (FieldKind::RationalsOmega, Scalar::Omega(_, _)) => true,
            _ => false,
        }
    }

    pub fn ensure(&self, a: &Scalar) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::FieldMismatch(format!("{a:?}"), self.to_string()))
        }
    }

    fn digits(&self, code: u64) -> Vec<u64> {
        let FieldKind::Extension { p, modulus } = &*self.0 else {
            unreachable!()
        };
        let k = modulus.len() - 1;
        let mut out = Vec::with_capacity(k);
        let mut c = code;
        for _ in 0..k {
            out.push(c % p);
            c /= p;
        }
        out
    }

    fn encode(&self, digits: &[u64]) -> u64 {
        let p = self.characteristic();
        digits.iter().rev().fold(0, |acc, &d| acc * p + d)
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&*self.0, a, b) {
            (FieldKind::Prime(p), Scalar::Fin(x), Scalar::Fin(y)) => Scalar::Fin((x + y) % p),
            (FieldKind::Extension { p, .. }, Scalar::Fin(x), Scalar::Fin(y)) => {
                let (dx, dy) = (self.digits(*x), self.digits(*y));
                let sum: Vec<u64> = dx.iter().zip(&dy).map(|(u, v)| (u + v) % p).collect();
                Scalar::Fin(self.encode(&sum))
            }
            (FieldKind::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (FieldKind::RationalsOmega, Scalar::Omega(a0, a1), Scalar::Omega(b0, b1)) => {
                Scalar::Omega(a0 + b0, a1 + b1)
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (&*self.0, a) {
            (FieldKind::Prime(p), Scalar::Fin(x)) => Scalar::Fin((p - x) % p),
            (FieldKind::Extension { p, .. }, Scalar::Fin(x)) => {
                let d: Vec<u64> = self.digits(*x).iter().map(|u| (p - u) % p).collect();
                Scalar::Fin(self.encode(&d))
            }
            (FieldKind::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (FieldKind::RationalsOmega, Scalar::Omega(x, y)) => Scalar::Omega(-x, -y),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&*self.0, a, b) {
            (FieldKind::Prime(p), Scalar::Fin(x), Scalar::Fin(y)) => Scalar::Fin(x * y % p),
            (FieldKind::Extension { p, modulus }, Scalar::Fin(x), Scalar::Fin(y)) => {
                let (dx, dy) = (self.digits(*x), self.digits(*y));
                let mut prod = vec![0u64; 2 * dx.len() - 1];
                for (i, u) in dx.iter().enumerate() {
                    for (j, v) in dy.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + u * v) % p;
                    }
                }
                Scalar::Fin(self.encode(&poly_rem_modp(&prod, modulus, *p)))
            }
            (FieldKind::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (FieldKind::RationalsOmega, Scalar::Omega(a0, a1), Scalar::Omega(b0, b1)) => {
                // (a0 + a1 w)(b0 + b1 w) with w^2 = -1 - w
                let bd = a1 * b1;
                Scalar::Omega(a0 * b0 - &bd, a0 * b1 + a1 * b0 - bd)
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match (&*self.0, a) {
            (FieldKind::Prime(p), Scalar::Fin(x)) => Scalar::Fin(mod_pow(*x, p - 2, *p)),
            (FieldKind::Extension { .. }, Scalar::Fin(_)) => self.pow_u64(a, self.order().unwrap() - 2),
            (FieldKind::Rationals, Scalar::Rat(x)) => Scalar::Rat(x.recip()),
            (FieldKind::RationalsOmega, Scalar::Omega(x, y)) => {
                // conjugate x + y w^2 = (x - y) - y w, norm x^2 - x y + y^2
                let norm = x * x - x * y + y * y;
                Scalar::Omega((x - y) / &norm, -(y / &norm))
            }
            _ => panic!("scalar does not belong to {self}"),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow_u64(&self, a: &Scalar, mut exp: u64) -> Scalar {
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// `a^exp`; negative exponents invert first.
    pub fn pow(&self, a: &Scalar, exp: i64) -> Result<Scalar> {
        if exp < 0 {
            Ok(self.pow_u64(&self.inv(a)?, exp.unsigned_abs()))
        } else {
            Ok(self.pow_u64(a, exp as u64))
        }
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a Scalar>>(&self, items: I) -> Scalar {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// A primitive cube root of unity, the smaller of the two in canonical
    /// order for finite fields, `w` itself for Q(w).
    pub fn cube_root_of_unity(&self) -> Option<Scalar> {
        match &*self.0 {
            FieldKind::Rationals => None,
            FieldKind::RationalsOmega => Some(Scalar::Omega(BigRational::zero(), BigRational::one())),
            _ => {
                let q = self.order().unwrap();
                if !(q - 1).is_multiple_of(3) {
                    return None;
                }
                let one = self.one();
                (2..q).map(Scalar::Fin).find_map(|a| {
                    let w = self.pow_u64(&a, (q - 1) / 3);
                    (w != one).then(|| {
                        let w2 = self.mul(&w, &w);
                        w.min(w2)
                    })
                })
            }
        }
    }

    /// All elements in canonical order (increasing code; for GF(p^k) this is
    /// lexicographic on the coefficient vector read from the top degree down).
    pub fn elements(&self) -> Result<impl Iterator<Item = Scalar>> {
        let q = self.order().ok_or_else(|| Error::InfiniteField(self.to_string()))?;
        Ok((0..q).map(Scalar::Fin))
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        let small_rat = |rng: &mut R| {
            BigRational::new(
                BigInt::from(rng.gen_range(-9i64..=9)),
                BigInt::from(rng.gen_range(1i64..=4)),
            )
        };
        match &*self.0 {
            FieldKind::Rationals => Scalar::Rat(small_rat(rng)),
            FieldKind::RationalsOmega => Scalar::Omega(small_rat(rng), small_rat(rng)),
            _ => Scalar::Fin(rng.gen_range(0..self.order().unwrap())),
        }
    }

    /// Canonical text form: integers, `num/den`, `c0+c1*t`, `a+b*w`.
    pub fn format(&self, a: &Scalar) -> String {
        match (&*self.0, a) {
            (FieldKind::Prime(_), Scalar::Fin(x)) => x.to_string(),
            (FieldKind::Extension { .. }, Scalar::Fin(x)) => format_poly(&self.digits(*x), 't'),
            (FieldKind::Rationals, Scalar::Rat(r)) => r.to_string(),
            (FieldKind::RationalsOmega, Scalar::Omega(x, y)) => {
                let wterm = |y: &BigRational| {
                    if y.is_one() {
                        "w".to_string()
                    } else {
                        format!("{y}*w")
                    }
                };
                match (x.is_zero(), y.is_zero()) {
                    (_, true) => x.to_string(),
                    (true, false) if y.is_negative() => format!("-{}", wterm(&y.abs())),
                    (true, false) => wterm(y),
                    (false, false) if y.is_negative() => format!("{x}-{}", wterm(&y.abs())),
                    (false, false) => format!("{x}+{}", wterm(y)),
                }
            }
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let var = match &*self.0 {
            FieldKind::Extension { .. } => Some('t'),
            FieldKind::RationalsOmega => Some('w'),
            _ => None,
        };
        let terms = parse_terms(text, var).map_err(|e| Error::BadScalar(text.to_string(), e))?;
        let generator = match &*self.0 {
            FieldKind::Extension { .. } => Scalar::Fin(self.characteristic()),
            FieldKind::RationalsOmega => Scalar::Omega(BigRational::zero(), BigRational::one()),
            _ => self.one(),
        };
        let mut acc = self.zero();
        for (c, power) in terms {
            let c = self
                .from_rational(&c)
                .map_err(|_| Error::BadScalar(text.to_string(), "denominator vanishes in field".into()))?;
            acc = self.add(&acc, &self.mul(&c, &self.pow_u64(&generator, power as u64)));
        }
        Ok(acc)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            FieldKind::Prime(p) => write!(f, "gf({p})"),
            FieldKind::Extension { p, modulus } => {
                write!(f, "gf({p}^{};{})", modulus.len() - 1, format_poly(modulus, 't'))
            }
            FieldKind::Rationals => write!(f, "q"),
            FieldKind::RationalsOmega => write!(f, "q(w)"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Field::parse(s)
    }
}
