//! Minimal polynomials and primitive idempotents of semisimple algebras.

use super::Algebra;
use crate::error::{Error, Result};
use crate::gf::{Elt, Poly};
use crate::linalg::Echelon;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Minimal polynomial of x by Krylov iteration 1, x, x^2, ...
pub fn minpoly(a: &Algebra, x: &[Elt]) -> Poly {
    let f = a.field();
    let d = a.dim();
    let mut powers: Vec<Vec<Elt>> = vec![a.unit().to_vec()];
    loop {
        let next = a.mul(powers.last().unwrap(), x);
        // solve sum c_i x^i = x^k via the echelon span of the powers so far
        let cols = powers.clone();
        let m = crate::linalg::Matrix::from_cols(&cols, d);
        if let Some(c) = crate::linalg::solve(f, &m, &next) {
            let mut coeffs: Vec<Elt> = c.iter().map(|&v| f.neg(v)).collect();
            coeffs.push(Elt::ONE);
            return Poly::new(f, coeffs);
        }
        powers.push(next);
    }
}

/// Is `a` a field? Finite division rings are commutative, so this is the
/// same as being a division algebra.
pub fn is_field(a: &Algebra, seed: u64) -> bool {
    let d = a.dim();
    if d == 0 || !a.is_commutative() {
        return false;
    }
    if d == 1 {
        return true;
    }
    let f = a.field();
    // a commutative algebra is a field iff some element has an irreducible
    // minimal polynomial of full degree
    let total = (f.q() as u64).checked_pow(d as u32);
    if let Some(t) = total.filter(|&t| t <= 4096) {
        return (1..t).all(|code| a.is_invertible(&decode(a, code)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        let x = random_vec(a, &mut rng);
        let mp = minpoly(a, &x);
        if mp.degree() as usize == d {
            return mp.is_irreducible();
        }
        let fac = mp.factor(seed);
        if fac.len() > 1 || fac.iter().any(|(_, m)| *m > 1) {
            return false;
        }
    }
    false
}

fn decode(a: &Algebra, mut code: u64) -> Vec<Elt> {
    let f = a.field();
    let q = f.q() as u64;
    (0..a.dim())
        .map(|_| {
            let c = code % q;
            code /= q;
            if c == 0 {
                Elt::ZERO
            } else {
                Elt::from_dlog(c as u32 - 1)
            }
        })
        .collect()
}

fn random_vec(a: &Algebra, rng: &mut ChaCha8Rng) -> Vec<Elt> {
    let q = a.field().q();
    (0..a.dim())
        .map(|_| {
            let c = rng.gen_range(0..q);
            if c == 0 {
                Elt::ZERO
            } else {
                Elt::from_dlog(c - 1)
            }
        })
        .collect()
}

/// A nontrivial idempotent polynomial in x, if its minimal polynomial has
/// two coprime factors.
fn split_by(a: &Algebra, x: &[Elt], seed: u64) -> Option<Vec<Elt>> {
    let mp = minpoly(a, x);
    let fac = mp.factor(seed);
    if fac.len() < 2 {
        return None;
    }
    let (p, m) = &fac[0];
    let mut g = Poly::one(a.field());
    for _ in 0..*m {
        g = g.mul(p);
    }
    let h = mp.div_exact(&g);
    let (_, _, t) = g.xgcd(&h);
    // t h = 1 mod g and 0 mod h
    let e = a.eval_poly(&t.mul(&h).rem(&mp), x);
    Some(e)
}

pub fn split_primitive_idempotent(a: &Algebra) -> Result<Vec<Elt>> {
    split_primitive_idempotent_seeded(a, 0)
}

/// A primitive idempotent of a semisimple algebra. Candidates are tried in
/// a deterministic order: basis elements, then pairwise sums, then seeded
/// random elements.
pub fn split_primitive_idempotent_seeded(a: &Algebra, seed: u64) -> Result<Vec<Elt>> {
    let mut cur = a.clone();
    // ambient coordinates of the current corner's basis
    let mut embed: Vec<Vec<Elt>> = (0..a.dim()).map(|i| a.basis_vec(i)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        if is_field(&cur, seed) {
            let e = crate::linalg::combine(a.field(), cur.unit(), &embed, a.dim());
            return Ok(e);
        }
        let d = cur.dim();
        let mut found = None;
        let mut candidates: Vec<Vec<Elt>> = Vec::new();
        let skip = (seed as usize) % d.max(1);
        for i in 0..d {
            candidates.push(cur.basis_vec((i + skip) % d));
        }
        for i in 0..d {
            for j in i + 1..d {
                candidates.push(cur.add(&cur.basis_vec(i), &cur.basis_vec(j)));
            }
        }
        for _ in 0..400 {
            candidates.push(random_vec(&cur, &mut rng));
        }
        for x in &candidates {
            if let Some(e) = split_by(&cur, x, seed) {
                found = Some(e);
                break;
            }
        }
        let Some(e) = found else {
            return Err(Error::Constraint("no idempotent splits the algebra; input is not semisimple".into()));
        };
        if cur.mul(&e, &e) != e {
            return Err(Error::Internal("split element is not idempotent".into()));
        }
        // pass to e cur e
        let f = cur.field().clone();
        let span: Vec<Vec<Elt>> = (0..d).map(|i| cur.mul(&cur.mul(&e, &cur.basis_vec(i)), &e)).collect();
        let ech = Echelon::span(&f, &span, d);
        if ech.rank() == 0 || ech.rank() == d {
            return Err(Error::Internal("corner did not shrink".into()));
        }
        let sub = cur.subalgebra(&ech.rows, &e)?;
        embed = sub.basis().iter().map(|v| crate::linalg::combine(&f, v, &embed, a.dim())).collect();
        cur = sub.alg;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{matrix_algebra, quotient_ring};
    use crate::gf::field_create;

    fn all_idempotents(a: &Algebra) -> usize {
        let q = a.field().q() as u64;
        (0..q.pow(a.dim() as u32)).filter(|&c| {
            let x = decode(a, c);
            a.mul(&x, &x) == x
        }).count()
    }

    #[test]
    fn mat2_corner_is_one_dimensional() {
        let f3 = field_create(3, 1).unwrap();
        let m2 = matrix_algebra(&f3, 2);
        for seed in 0..3 {
            let e = split_primitive_idempotent_seeded(&m2, seed).unwrap();
            assert_eq!(m2.mul(&e, &e), e);
            let span: Vec<Vec<Elt>> = (0..4).map(|i| m2.mul(&m2.mul(&e, &m2.basis_vec(i)), &e)).collect();
            let corner = m2.subalgebra(&span, &e).unwrap();
            assert_eq!(corner.alg.dim(), 1);
            // oracle: the corner has exactly the idempotents 0 and 1
            assert_eq!(all_idempotents(&corner.alg), 2);
        }
    }

    #[test]
    fn field_and_product() {
        let f3 = field_create(3, 1).unwrap();
        let gf9 = quotient_ring(&Poly::new(&f3, vec![Elt::ONE, Elt::ZERO, Elt::ONE])).unwrap();
        assert!(is_field(&gf9, 0));
        assert_eq!(split_primitive_idempotent(&gf9).unwrap(), gf9.unit().to_vec());
        // x^2 - 1 = (x-1)(x+1)
        let fxf = quotient_ring(&Poly::new(&f3, vec![f3.from_int(-1), Elt::ZERO, Elt::ONE])).unwrap();
        assert!(!is_field(&fxf, 0));
        let e = split_primitive_idempotent(&fxf).unwrap();
        assert_eq!(fxf.mul(&e, &e), e);
        assert_ne!(e, fxf.unit().to_vec());
        assert_eq!(all_idempotents(&fxf), 4);
        let x = fxf.basis_vec(1);
        assert_eq!(minpoly(&fxf, &x).degree(), 2);
    }

    #[test]
    fn nilpotent_input_is_rejected() {
        let f3 = field_create(3, 1).unwrap();
        let dual = quotient_ring(&Poly::new(&f3, vec![Elt::ZERO, Elt::ZERO, Elt::ONE])).unwrap();
        assert!(!is_field(&dual, 0));
        assert!(split_primitive_idempotent(&dual).is_err());
    }
}
