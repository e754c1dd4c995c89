//! Univariate polynomials over a `Field`, with factorization
//! (square-free, distinct-degree, equal-degree splitting).

use super::{Elt, Field};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Coefficients constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    f: Field,
    c: Vec<Elt>,
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.c)
    }
}

impl Poly {
    pub fn new(f: &Field, mut c: Vec<Elt>) -> Poly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { f: f.clone(), c }
    }
    pub fn zero(f: &Field) -> Poly {
        Poly::new(f, vec![])
    }
    pub fn one(f: &Field) -> Poly {
        Poly::new(f, vec![Elt::ONE])
    }
    pub fn x(f: &Field) -> Poly {
        Poly::new(f, vec![Elt::ZERO, Elt::ONE])
    }
    pub fn coeffs(&self) -> &[Elt] {
        &self.c
    }
    pub fn field(&self) -> &Field {
        &self.f
    }
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    /// Degree; the zero polynomial reports -1.
    pub fn degree(&self) -> isize {
        self.c.len() as isize - 1
    }
    pub fn lead(&self) -> Elt {
        self.c.last().copied().unwrap_or(Elt::ZERO)
    }
    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0] == Elt::ONE
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.f.inv(self.lead()).expect("nonzero lead");
        self.scale(inv)
    }

    pub fn scale(&self, s: Elt) -> Poly {
        Poly::new(&self.f, self.c.iter().map(|&x| self.f.mul(x, s)).collect())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let f = &self.f;
        let v = (0..n)
            .map(|i| f.add(self.c.get(i).copied().unwrap_or(Elt::ZERO), o.c.get(i).copied().unwrap_or(Elt::ZERO)))
            .collect();
        Poly::new(f, v)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(self.f.neg(Elt::ONE)))
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(&self.f);
        }
        let f = &self.f;
        let mut v = vec![Elt::ZERO; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                v[i + j] = f.add(v[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, v)
    }

    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let f = &self.f;
        if self.degree() < d.degree() {
            return (Poly::zero(f), self.clone());
        }
        let mut r = self.c.clone();
        let dl = d.c.len();
        let inv = f.inv(d.lead()).unwrap();
        let mut q = vec![Elt::ZERO; r.len() - dl + 1];
        for k in (0..q.len()).rev() {
            let c = f.mul(r[k + dl - 1], inv);
            q[k] = c;
            if c.is_zero() {
                continue;
            }
            for (i, &di) in d.c.iter().enumerate() {
                r[k + i] = f.sub(r[k + i], f.mul(c, di));
            }
        }
        r.truncate(dl - 1);
        (Poly::new(f, q), Poly::new(f, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero());
        q
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// (g, s, t) with s*self + t*o = g monic.
    pub fn xgcd(&self, o: &Poly) -> (Poly, Poly, Poly) {
        let f = &self.f;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(r0.lead()).unwrap();
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.f;
        let v = self.c.iter().enumerate().skip(1).map(|(i, &c)| f.mul(c, f.from_int(i as i64))).collect();
        Poly::new(f, v)
    }

    pub fn eval(&self, x: Elt) -> Elt {
        let f = &self.f;
        self.c.iter().rev().fold(Elt::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// self^e mod m
    pub fn powmod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut result = Poly::one(&self.f).rem(m);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        result
    }

    /// Square-free decomposition: pairs (g, multiplicity), g monic square-free.
    pub fn squarefree(&self) -> Vec<(Poly, u32)> {
        let f = &self.f;
        let p = f.p();
        let mut out = Vec::new();
        let a = self.monic();
        if a.degree() <= 0 {
            return out;
        }
        let mut c = a.gcd(&a.derivative());
        let mut w = a.div_exact(&c);
        let mut i = 1u32;
        while !w.is_one() {
            let y = w.gcd(&c);
            let fac = w.div_exact(&y);
            if fac.degree() > 0 {
                out.push((fac, i));
            }
            w = y;
            c = c.div_exact(&w);
            i += 1;
        }
        if c.degree() > 0 {
            // c is a polynomial in x^p; take the p-th root
            let m = f.m() as u64;
            let root: Vec<Elt> =
                c.c.iter().step_by(p as usize).map(|&x| f.frobenius(m.saturating_sub(1), x)).collect();
            let r = Poly::new(f, root);
            for (g, j) in r.squarefree() {
                out.push((g, j * p));
            }
        }
        out
    }

    /// Distinct-degree factorization of a monic square-free polynomial.
    pub fn distinct_degree(&self) -> Vec<(Poly, u32)> {
        let f = &self.f;
        let q = f.q() as u64;
        let mut out = Vec::new();
        let mut rest = self.monic();
        let x = Poly::x(f);
        let mut h = x.rem(&rest);
        let mut i = 1u32;
        while rest.degree() >= 2 * i as isize {
            h = h.powmod(q, &rest);
            let g = rest.gcd(&h.sub(&x));
            if g.degree() > 0 {
                rest = rest.div_exact(&g);
                h = h.rem(&rest);
                out.push((g, i));
            }
            i += 1;
        }
        if rest.degree() > 0 {
            let d = rest.degree() as u32;
            out.push((rest, d));
        }
        out
    }

    /// Split a monic square-free product of irreducibles of degree d.
    pub fn equal_degree(&self, d: u32, rng: &mut ChaCha8Rng) -> Vec<Poly> {
        let f = &self.f;
        let n = self.degree() as u32;
        if n == d {
            return vec![self.monic()];
        }
        let q = f.q() as u64;
        loop {
            let a = Poly::new(f, (0..n).map(|_| random_elt(f, rng)).collect());
            if a.degree() < 1 {
                continue;
            }
            let b = if q % 2 == 1 {
                // a^{(q^d - 1)/2} = prod_i (a^{(q-1)/2})^{q^i}
                let base = a.powmod((q - 1) / 2, self);
                let mut acc = Poly::one(f);
                let mut cur = base;
                for _ in 0..d {
                    acc = acc.mul(&cur).rem(self);
                    cur = cur.powmod(q, self);
                }
                acc.sub(&Poly::one(f))
            } else {
                // trace to GF(2): a + a^2 + ... + a^{2^{m d - 1}}
                let steps = f.m() * d;
                let mut acc = Poly::zero(f);
                let mut cur = a.rem(self);
                for _ in 0..steps {
                    acc = acc.add(&cur);
                    cur = cur.mul(&cur).rem(self);
                }
                acc
            };
            let g = self.gcd(&b);
            if g.degree() > 0 && g.degree() < self.degree() {
                let mut out = g.equal_degree(d, rng);
                out.extend(self.div_exact(&g).equal_degree(d, rng));
                return out;
            }
        }
    }

    /// Complete factorization into monic irreducibles with multiplicities,
    /// sorted by (degree, coefficients).
    pub fn factor(&self, seed: u64) -> Vec<(Poly, u32)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        for (g, mult) in self.squarefree() {
            for (h, d) in g.distinct_degree() {
                for irr in h.equal_degree(d, &mut rng) {
                    out.push((irr, mult));
                }
            }
        }
        out.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.c.cmp(&b.0.c)));
        // merge equal factors coming from different square-free layers
        let mut merged: Vec<(Poly, u32)> = Vec::new();
        for (g, m) in out {
            match merged.last_mut() {
                Some((h, k)) if *h == g => *k += m,
                _ => merged.push((g, m)),
            }
        }
        merged
    }

    pub fn is_irreducible(&self) -> bool {
        if self.degree() < 1 {
            return false;
        }
        let fac = self.factor(0);
        fac.len() == 1 && fac[0].1 == 1
    }
}

fn random_elt(f: &Field, rng: &mut ChaCha8Rng) -> Elt {
    let k = rng.gen_range(0..f.q());
    if k == 0 {
        Elt::ZERO
    } else {
        Elt::from_dlog(k - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field_create;

    fn prod(fs: &[(Poly, u32)], f: &Field) -> Poly {
        let mut acc = Poly::one(f);
        for (g, m) in fs {
            for _ in 0..*m {
                acc = acc.mul(g);
            }
        }
        acc
    }

    #[test]
    fn factor_recovers_product() {
        for &(p, m) in &[(2u64, 1u32), (3, 1), (2, 2), (3, 2), (5, 1), (7, 1)] {
            let f = field_create(p, m).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for _ in 0..20 {
                let deg = rng.gen_range(1..9);
                let mut c: Vec<Elt> = (0..deg).map(|_| random_elt(&f, &mut rng)).collect();
                c.push(Elt::ONE);
                let a = Poly::new(&f, c);
                let fac = a.factor(3);
                assert_eq!(prod(&fac, &f), a);
                for (g, _) in &fac {
                    // brute-force irreducibility for small degree: no root when deg 2 or 3
                    if g.degree() == 2 || g.degree() == 3 {
                        assert!(f.elements().all(|x| !g.eval(x).is_zero()));
                    }
                }
            }
        }
    }

    #[test]
    fn x2_plus_1_over_gf3_irreducible() {
        let f = field_create(3, 1).unwrap();
        let a = Poly::new(&f, vec![Elt::ONE, Elt::ZERO, Elt::ONE]);
        assert!(a.is_irreducible());
        let b = Poly::new(&f, vec![f.from_int(2), Elt::ZERO, Elt::ONE]);
        assert!(!b.is_irreducible());
    }
}
