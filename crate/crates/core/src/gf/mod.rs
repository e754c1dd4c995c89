//! Small finite fields in discrete-log form.
//!
//! Every nonzero element is stored as its discrete log with respect to the
//! class of `x` modulo the defining polynomial. Addition goes through a Zech
//! table, so multiplication, powers, roots of unity and norms are all integer
//! arithmetic on exponents.

mod poly;
mod prime;
mod tower;

pub use poly::Poly;
pub use prime::{factor_u64, is_prime};
pub use tower::Tower;

use crate::error::{Error, Result};
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// A field element: discrete log, or zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elt(u32);

impl Elt {
    pub const ZERO: Elt = Elt(u32::MAX);
    pub const ONE: Elt = Elt(0);

    #[inline]
    pub fn from_dlog(d: u32) -> Elt {
        Elt(d)
    }

    #[inline]
    pub fn dlog(self) -> Option<u32> {
        if self.0 == u32::MAX {
            None
        } else {
            Some(self.0)
        }
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == u32::MAX
    }

    #[inline]
    pub fn raw(self) -> u32 {
        self.0
    }
}

impl fmt::Debug for Elt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.dlog() {
            None => write!(f, "0"),
            Some(d) => write!(f, "w^{}", d),
        }
    }
}

struct FieldData {
    p: u32,
    m: u32,
    q: u32,
    defpoly: Vec<u32>,
    /// dlog -> polynomial code (base-p digits, constant term least significant)
    exp: Vec<u32>,
    /// polynomial code -> dlog
    log: Vec<u32>,
    /// k -> dlog(1 + w^k)
    zech: Vec<u32>,
    neg_one: u32,
}

/// Handle to an immutable field. Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.defpoly == other.0.defpoly)
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

static CANONICAL: Lazy<Mutex<HashMap<(u32, u32), Field>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// The canonical field GF(p^m): defining polynomial is the least primitive
/// polynomial, coefficients compared constant term first.
pub fn field_create(p: u64, m: u32) -> Result<Field> {
    check_size(p, m)?;
    let key = (p as u32, m);
    if let Some(f) = CANONICAL.lock().unwrap().get(&key) {
        return Ok(f.clone());
    }
    let def = prime::least_primitive(p as u32, m, |_| true)
        .ok_or_else(|| Error::Internal(format!("no primitive polynomial for GF({}^{})", p, m)))?;
    let f = Field::build(p as u32, def);
    let mut cache = CANONICAL.lock().unwrap();
    Ok(cache.entry(key).or_insert(f).clone())
}

pub(crate) fn check_size(p: u64, m: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::Invalid("extension degree must be at least 1".into()));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut q: u64 = 1;
    for _ in 0..m {
        q = q.saturating_mul(p);
        if q > MAX_ORDER {
            return Err(Error::SizeCap(format!("GF({}^{}) exceeds {} elements", p, m, MAX_ORDER)));
        }
    }
    Ok(())
}

impl Field {
    /// Field defined by an explicit primitive polynomial (constant term first, monic).
    pub fn with_defpoly(p: u64, defpoly: &[u32]) -> Result<Field> {
        let m = defpoly.len().saturating_sub(1) as u32;
        check_size(p, m)?;
        if defpoly.last() != Some(&1) || defpoly.iter().any(|&c| c as u64 >= p) {
            return Err(Error::Invalid("defining polynomial must be monic over GF(p)".into()));
        }
        if !prime::is_primitive(p as u32, defpoly) {
            return Err(Error::Invalid("defining polynomial is not primitive".into()));
        }
        Ok(Field::build(p as u32, defpoly.to_vec()))
    }

    fn build(p: u32, defpoly: Vec<u32>) -> Field {
        let m = (defpoly.len() - 1) as u32;
        let q = p.pow(m);
        let n = (q - 1) as usize;
        let mut exp = vec![0u32; n];
        let mut log = vec![u32::MAX; q as usize];
        let mut digits = vec![0u32; m as usize];
        digits[0] = 1;
        for (k, slot) in exp.iter_mut().enumerate() {
            let code = encode(&digits, p);
            *slot = code;
            log[code as usize] = k as u32;
            // multiply by x and reduce
            let top = digits[m as usize - 1];
            for i in (1..m as usize).rev() {
                digits[i] = digits[i - 1];
            }
            digits[0] = 0;
            if top != 0 {
                for i in 0..m as usize {
                    let sub = (top as u64 * defpoly[i] as u64 % p as u64) as u32;
                    digits[i] = (digits[i] + p - sub) % p;
                }
            }
        }
        let mut zech = vec![u32::MAX; n];
        for k in 0..n {
            let code = exp[k];
            let d0 = code % p;
            let plus1 = if d0 == p - 1 { code - (p - 1) } else { code + 1 };
            zech[k] = log[plus1 as usize];
        }
        let neg_one = if p == 2 { 0 } else { (q - 1) / 2 };
        Field(Arc::new(FieldData { p, m, q, defpoly, exp, log, zech, neg_one }))
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.0.p
    }
    #[inline]
    pub fn m(&self) -> u32 {
        self.0.m
    }
    #[inline]
    pub fn q(&self) -> u32 {
        self.0.q
    }
    /// Order of the unit group.
    #[inline]
    pub fn units(&self) -> u32 {
        self.0.q - 1
    }
    pub fn defpoly(&self) -> &[u32] {
        &self.0.defpoly
    }
    pub fn name(&self) -> String {
        format!("GF({}^{})", self.0.p, self.0.m)
    }

    #[inline]
    pub fn zero(&self) -> Elt {
        Elt::ZERO
    }
    #[inline]
    pub fn one(&self) -> Elt {
        Elt::ONE
    }
    /// The primitive element w (class of x).
    #[inline]
    pub fn gen(&self) -> Elt {
        Elt(1 % self.units())
    }

    #[inline]
    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        if a.is_zero() || b.is_zero() {
            return Elt::ZERO;
        }
        let s = a.0 + b.0;
        let n = self.units();
        Elt(if s >= n { s - n } else { s })
    }

    #[inline]
    pub fn add(&self, a: Elt, b: Elt) -> Elt {
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let n = self.units();
        let (lo, hi) = if a.0 <= b.0 { (a.0, b.0) } else { (b.0, a.0) };
        let z = self.0.zech[(hi - lo) as usize];
        if z == u32::MAX {
            Elt::ZERO
        } else {
            let s = lo + z;
            Elt(if s >= n { s - n } else { s })
        }
    }

    #[inline]
    pub fn neg(&self, a: Elt) -> Elt {
        self.mul(a, Elt(self.0.neg_one))
    }

    #[inline]
    pub fn sub(&self, a: Elt, b: Elt) -> Elt {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn inv(&self, a: Elt) -> Result<Elt> {
        match a.dlog() {
            None => Err(Error::ZeroInverse),
            Some(0) => Ok(Elt(0)),
            Some(d) => Ok(Elt(self.units() - d)),
        }
    }

    pub fn div(&self, a: Elt, b: Elt) -> Result<Elt> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^k for any integer k; 0^k = 0 for k > 0, 0^0 = 1, 0^k errors for k < 0.
    pub fn pow(&self, a: Elt, k: i64) -> Result<Elt> {
        match a.dlog() {
            None => {
                if k > 0 {
                    Ok(Elt::ZERO)
                } else if k == 0 {
                    Ok(Elt::ONE)
                } else {
                    Err(Error::ZeroInverse)
                }
            }
            Some(d) => {
                let n = self.units() as i64;
                Ok(Elt(((d as i64 * k.rem_euclid(n)) % n) as u32))
            }
        }
    }

    /// Power by a nonnegative exponent that may exceed u32; never fails.
    #[inline]
    pub fn pow_u(&self, a: Elt, k: u64) -> Elt {
        match a.dlog() {
            None => {
                if k == 0 {
                    Elt::ONE
                } else {
                    Elt::ZERO
                }
            }
            Some(d) => {
                let n = self.units() as u64;
                Elt(((d as u64 * (k % n)) % n) as u32)
            }
        }
    }

    /// Multiplicative order of a unit.
    pub fn order(&self, a: Elt) -> Option<u32> {
        let d = a.dlog()?;
        let n = self.units();
        Some(n / gcd(d as u64, n as u64) as u32)
    }

    /// Image of an integer under Z -> GF(p).
    pub fn from_int(&self, c: i64) -> Elt {
        let r = c.rem_euclid(self.0.p as i64) as usize;
        Elt(self.0.log[r])
    }

    /// Coefficients over GF(p) in the power basis 1, x, ..., x^{m-1}.
    pub fn to_poly(&self, a: Elt) -> Vec<u32> {
        let code = match a.dlog() {
            None => 0,
            Some(d) => self.0.exp[d as usize],
        };
        decode(code, self.0.p, self.0.m)
    }

    pub fn from_poly(&self, coeffs: &[u32]) -> Elt {
        let mut code: u64 = 0;
        for i in (0..self.0.m as usize).rev() {
            let c = coeffs.get(i).copied().unwrap_or(0) % self.0.p;
            code = code * self.0.p as u64 + c as u64;
        }
        Elt(self.0.log[code as usize])
    }

    /// Polynomial code of an element (integer with base-p digits).
    pub fn code(&self, a: Elt) -> u32 {
        match a.dlog() {
            None => 0,
            Some(d) => self.0.exp[d as usize],
        }
    }

    pub fn from_code(&self, code: u32) -> Elt {
        Elt(self.0.log[code as usize])
    }

    /// All elements, zero first then by dlog.
    pub fn elements(&self) -> impl Iterator<Item = Elt> {
        std::iter::once(Elt::ZERO).chain((0..self.units()).map(Elt))
    }

    /// Validate an element produced outside this field.
    pub fn check(&self, a: Elt) -> Result<Elt> {
        match a.dlog() {
            Some(d) if d >= self.units() => Err(Error::Invalid(format!("dlog {} out of range for {}", d, self.name()))),
            _ => Ok(a),
        }
    }

    /// w_N = w^{(q-1)/N}, an element of exact order N.
    pub fn omega(&self, n: u64) -> Result<Elt> {
        let u = self.units() as u64;
        if n == 0 || !u.is_multiple_of(n) {
            return Err(Error::Constraint(format!("{} does not divide |{}^x| = {}", n, self.name(), u)));
        }
        Ok(Elt((u / n) as u32 % self.units()))
    }

    /// The canonical N-th root [1/N]: write x = w_M^j with M the order of x
    /// and 0 <= j < M, return w_{MN}^j.
    pub fn root_section(&self, n: u64, x: Elt) -> Result<Elt> {
        let d = x.dlog().ok_or(Error::ZeroInverse)? as u64;
        let u = self.units() as u64;
        if n == 0 {
            return Err(Error::Invalid("root of order 0".into()));
        }
        let m = u / gcd(d, u);
        let j = d * m / u;
        if j == 0 {
            return Ok(Elt::ONE);
        }
        if !u.is_multiple_of(m * n) {
            return Err(Error::Constraint(format!(
                "{} has no primitive root of unity of order {}",
                self.name(),
                m * n
            )));
        }
        Ok(Elt(((u / (m * n)) * j % u) as u32))
    }

    /// x^{p^j}
    pub fn frobenius(&self, j: u64, x: Elt) -> Elt {
        match x.dlog() {
            None => x,
            Some(d) => {
                let u = self.units() as u64;
                let pj = prime::pow_mod(self.0.p as u64, j, u);
                Elt((d as u64 * pj % u) as u32)
            }
        }
    }

    /// Sum of a slice.
    pub fn sum(&self, xs: impl IntoIterator<Item = Elt>) -> Elt {
        xs.into_iter().fold(Elt::ZERO, |acc, x| self.add(acc, x))
    }

    pub fn elt(&self, a: Elt) -> FieldElt {
        FieldElt { field: self.clone(), elt: a }
    }
}

fn encode(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * p + d)
}

fn decode(mut code: u32, p: u32, m: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(m as usize);
    for _ in 0..m {
        out.push(code % p);
        code /= p;
    }
    out
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// An element that remembers its field; arithmetic checks the fields agree.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElt {
    pub field: Field,
    pub elt: Elt,
}

impl fmt::Debug for FieldElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} in {}", self.elt, self.field.name())
    }
}

impl FieldElt {
    fn same(&self, o: &FieldElt) -> Result<()> {
        if self.field == o.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }
    pub fn add(&self, o: &FieldElt) -> Result<FieldElt> {
        self.same(o)?;
        Ok(self.field.elt(self.field.add(self.elt, o.elt)))
    }
    pub fn mul(&self, o: &FieldElt) -> Result<FieldElt> {
        self.same(o)?;
        Ok(self.field.elt(self.field.mul(self.elt, o.elt)))
    }
    pub fn inv(&self) -> Result<FieldElt> {
        Ok(self.field.elt(self.field.inv(self.elt)?))
    }
    pub fn pow(&self, k: i64) -> Result<FieldElt> {
        Ok(self.field.elt(self.field.pow(self.elt, k)?))
    }
    pub fn to_json(&self) -> EltJson {
        match self.elt.dlog() {
            None => EltJson::Zero { zero: true },
            Some(d) => EltJson::Unit { field: self.field.name(), dlog: d },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum EltJson {
    Unit { field: String, dlog: u32 },
    Zero { zero: bool },
}

/// Field metadata as serialized alongside algebras.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FieldJson {
    pub name: String,
    pub p: u32,
    pub m: u32,
    pub defpoly: Vec<u32>,
}

impl From<&Field> for FieldJson {
    fn from(f: &Field) -> Self {
        FieldJson { name: f.name(), p: f.p(), m: f.m(), defpoly: f.defpoly().to_vec() }
    }
}

impl FieldJson {
    pub fn to_field(&self) -> Result<Field> {
        let canon = field_create(self.p as u64, self.m)?;
        if canon.defpoly() == self.defpoly.as_slice() {
            Ok(canon)
        } else {
            Field::with_defpoly(self.p as u64, &self.defpoly)
        }
    }
}

/// Parse "p^e" (or a bare prime).
pub fn parse_field_spec(s: &str) -> Result<Field> {
    let s = s.trim();
    let (p, e) = match s.split_once('^') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let p: u64 = p.parse().map_err(|_| Error::Parse(format!("bad field spec '{}'", s)))?;
    let e: u32 = e.parse().map_err(|_| Error::Parse(format!("bad field spec '{}'", s)))?;
    field_create(p, e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf3_and_gf9_defpolys() {
        assert_eq!(field_create(3, 1).unwrap().defpoly(), &[1, 1]);
        let f9 = field_create(3, 2).unwrap();
        assert_eq!(f9.defpoly(), &[2, 1, 1]);
        let w = f9.gen();
        assert_eq!(f9.order(w), Some(8));
        // w^2 = 2w + 1
        assert_eq!(f9.to_poly(f9.mul(w, w)), vec![1, 2]);
    }

    #[test]
    fn size_cap_and_primality() {
        assert!(matches!(field_create(2, 20), Err(Error::SizeCap(_))));
        assert!(matches!(field_create(4, 1), Err(Error::NotPrime(4))));
        assert!(field_create(2, 16).is_ok());
    }

    #[test]
    fn small_arithmetic() {
        let f3 = field_create(3, 1).unwrap();
        let two = f3.from_int(2);
        assert_eq!(f3.add(two, two), f3.one());
        assert_eq!(f3.add(two, f3.zero()), two);
        assert_eq!(f3.inv(f3.zero()), Err(Error::ZeroInverse));
        assert_eq!(f3.gen(), two);
    }

    #[test]
    fn omega_and_roots() {
        let f9 = field_create(3, 2).unwrap();
        assert_eq!(f9.omega(8).unwrap(), Elt::from_dlog(1));
        assert_eq!(f9.omega(2).unwrap(), f9.from_int(2));
        assert!(field_create(3, 1).unwrap().omega(4).is_err());
        assert_eq!(f9.root_section(2, Elt::from_dlog(2)).unwrap(), Elt::from_dlog(1));
        assert_eq!(f9.root_section(1, Elt::from_dlog(5)).unwrap(), Elt::from_dlog(5));
        assert_eq!(f9.root_section(3, Elt::ONE).unwrap(), Elt::ONE);
        // w_4 has order 4; [1/4] would need order 16
        assert!(f9.root_section(4, Elt::from_dlog(2)).is_err());
    }

    #[test]
    fn gf2_is_degenerate_but_fine() {
        let f2 = field_create(2, 1).unwrap();
        assert_eq!(f2.units(), 1);
        assert_eq!(f2.add(f2.one(), f2.one()), f2.zero());
        assert_eq!(f2.gen(), f2.one());
        assert_eq!(f2.neg(f2.one()), f2.one());
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = field_create(3, 1).unwrap().elt(Elt::ONE);
        let b = field_create(5, 1).unwrap().elt(Elt::ONE);
        assert_eq!(a.add(&b), Err(Error::FieldMismatch));
    }
}
