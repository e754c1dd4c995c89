//! Finite-dimensional associative algebras over a finite field, stored by
//! sparse structure constants.

mod gaction;
mod graded;
mod idempotent;

pub use gaction::{gamma_of, induce, smash_dual, smash_group, DualSmash, GAlgebra, Gamma};
pub use graded::{corner, cocycle_twist, loop_twisted, twisted_group_algebra, GradedAlgebra};
pub use idempotent::{is_field, minpoly, split_primitive_idempotent, split_primitive_idempotent_seeded};

use crate::error::{Error, Result};
use crate::gf::{Elt, Field, Poly};
use crate::linalg::{inverse, nullspace, solve, Echelon, Matrix};
use crate::par;
use std::sync::Arc;

/// Associativity is verified at construction up to this dimension.
pub const CHECK_DIM: usize = 64;

#[derive(Clone)]
pub struct Algebra {
    field: Field,
    dim: usize,
    /// entry i*dim+j lists (k, c) with b_i b_j = sum c b_k
    sc: Arc<Vec<Vec<(u32, Elt)>>>,
    unit: Vec<Elt>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra(dim {} over {})", self.dim, self.field.name())
    }
}

impl PartialEq for Algebra {
    fn eq(&self, o: &Self) -> bool {
        self.field == o.field && self.dim == o.dim && self.unit == o.unit && self.sc == o.sc
    }
}
impl Eq for Algebra {}

fn sparse(v: &[Elt]) -> Vec<(u32, Elt)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, &c)| (k as u32, c)).collect()
}

impl Algebra {
    /// Build from basis products; checks unit and associativity when dim <= CHECK_DIM.
    pub fn from_fn(field: &Field, dim: usize, unit: Vec<Elt>, prod: impl Fn(usize, usize) -> Vec<Elt> + Sync) -> Result<Algebra> {
        let sc = par::map_range(dim * dim, |ij| sparse(&prod(ij / dim, ij % dim)));
        Self::new(field, dim, sc, unit)
    }

    pub fn new(field: &Field, dim: usize, sc: Vec<Vec<(u32, Elt)>>, unit: Vec<Elt>) -> Result<Algebra> {
        let a = Self::new_unchecked(field, dim, sc, unit)?;
        if !a.is_unital() {
            return Err(Error::Invalid("unit axiom fails".into()));
        }
        if dim <= CHECK_DIM && !a.is_associative() {
            return Err(Error::Invalid("structure constants are not associative".into()));
        }
        Ok(a)
    }

    pub fn new_unchecked(field: &Field, dim: usize, sc: Vec<Vec<(u32, Elt)>>, unit: Vec<Elt>) -> Result<Algebra> {
        if sc.len() != dim * dim || unit.len() != dim {
            return Err(Error::Invalid("structure constant table has the wrong shape".into()));
        }
        if sc.iter().flatten().any(|&(k, c)| k as usize >= dim || field.check(c).is_err()) {
            return Err(Error::Invalid("structure constant out of range".into()));
        }
        Ok(Algebra { field: field.clone(), dim, sc: Arc::new(sc), unit })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn unit(&self) -> &[Elt] {
        &self.unit
    }
    pub fn basis_product(&self, i: usize, j: usize) -> &[(u32, Elt)] {
        &self.sc[i * self.dim + j]
    }
    pub fn basis_vec(&self, i: usize) -> Vec<Elt> {
        let mut v = vec![Elt::ZERO; self.dim];
        v[i] = Elt::ONE;
        v
    }
    pub fn zero_vec(&self) -> Vec<Elt> {
        vec![Elt::ZERO; self.dim]
    }
    pub fn scalar(&self, c: Elt) -> Vec<Elt> {
        self.unit.iter().map(|&u| self.field.mul(c, u)).collect()
    }

    pub fn mul(&self, x: &[Elt], y: &[Elt]) -> Vec<Elt> {
        let f = &self.field;
        let mut out = vec![Elt::ZERO; self.dim];
        let ys: Vec<(usize, Elt)> = y.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, &c)| (j, c)).collect();
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let row = &self.sc[i * self.dim..(i + 1) * self.dim];
            for &(j, yj) in &ys {
                let c = f.mul(xi, yj);
                for &(k, v) in &row[j] {
                    out[k as usize] = f.add(out[k as usize], f.mul(c, v));
                }
            }
        }
        out
    }

    pub fn add(&self, x: &[Elt], y: &[Elt]) -> Vec<Elt> {
        crate::linalg::vec_add(&self.field, x, y)
    }
    pub fn sub(&self, x: &[Elt], y: &[Elt]) -> Vec<Elt> {
        crate::linalg::vec_sub(&self.field, x, y)
    }
    pub fn scale(&self, c: Elt, x: &[Elt]) -> Vec<Elt> {
        crate::linalg::vec_scale(&self.field, c, x)
    }

    pub fn pow(&self, x: &[Elt], mut e: u64) -> Vec<Elt> {
        let mut r = self.unit.clone();
        let mut b = x.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        r
    }

    /// Matrix of y -> x y (column j is x b_j).
    pub fn left_matrix(&self, x: &[Elt]) -> Matrix {
        let cols: Vec<Vec<Elt>> = (0..self.dim).map(|j| self.mul(x, &self.basis_vec(j))).collect();
        Matrix::from_cols(&cols, self.dim)
    }

    /// Matrix of y -> y x.
    pub fn right_matrix(&self, x: &[Elt]) -> Matrix {
        let cols: Vec<Vec<Elt>> = (0..self.dim).map(|j| self.mul(&self.basis_vec(j), x)).collect();
        Matrix::from_cols(&cols, self.dim)
    }

    pub fn inverse(&self, x: &[Elt]) -> Option<Vec<Elt>> {
        let y = solve(&self.field, &self.left_matrix(x), &self.unit)?;
        if self.mul(&y, x) == self.unit {
            Some(y)
        } else {
            None
        }
    }

    pub fn is_invertible(&self, x: &[Elt]) -> bool {
        inverse(&self.field, &self.left_matrix(x)).is_some()
    }

    pub fn is_unital(&self) -> bool {
        (0..self.dim).all(|i| {
            let b = self.basis_vec(i);
            self.mul(&self.unit, &b) == b && self.mul(&b, &self.unit) == b
        })
    }

    pub fn is_associative(&self) -> bool {
        let d = self.dim;
        par::map_range(d, |i| {
            let bi = self.basis_vec(i);
            (0..d).all(|j| {
                let bij = self.mul(&bi, &self.basis_vec(j));
                (0..d).all(|k| {
                    let bk = self.basis_vec(k);
                    let rhs = self.mul(&bi, &self.mul(&self.basis_vec(j), &bk));
                    self.mul(&bij, &bk) == rhs
                })
            })
        })
        .into_iter()
        .all(|b| b)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Basis of {x : x s = s x for all s in gens}, in echelon form.
    pub fn centralizer(&self, gens: &[Vec<Elt>]) -> Vec<Vec<Elt>> {
        let f = &self.field;
        let d = self.dim;
        let mut rows = Vec::with_capacity(gens.len() * d);
        for s in gens {
            let m = self.right_matrix(s).sub(f, &self.left_matrix(s));
            for i in 0..d {
                rows.push(m.row(i).to_vec());
            }
        }
        if rows.is_empty() {
            return (0..d).map(|i| self.basis_vec(i)).collect();
        }
        let ns = nullspace(f, &Matrix::from_rows(&rows, d));
        Echelon::span(f, &ns, d).rows
    }

    pub fn center(&self) -> Vec<Vec<Elt>> {
        let gens: Vec<Vec<Elt>> = (0..self.dim).map(|i| self.basis_vec(i)).collect();
        self.centralizer(&gens)
    }

    pub fn opposite(&self) -> Algebra {
        let d = self.dim;
        let sc = (0..d * d).map(|ij| self.sc[(ij % d) * d + ij / d].clone()).collect();
        Algebra { field: self.field.clone(), dim: d, sc: Arc::new(sc), unit: self.unit.clone() }
    }

    /// A ⊗ B with basis a_i ⊗ b_j at index i * dim(B) + j.
    pub fn tensor(&self, o: &Algebra) -> Result<Algebra> {
        if self.field != o.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let (m, n) = (self.dim, o.dim);
        let mut sc = Vec::with_capacity(m * m * n * n);
        for i1 in 0..m {
            for j1 in 0..n {
                for i2 in 0..m {
                    for j2 in 0..n {
                        let mut e = Vec::new();
                        for &(k1, c1) in self.basis_product(i1, i2) {
                            for &(k2, c2) in o.basis_product(j1, j2) {
                                e.push((k1 * n as u32 + k2, f.mul(c1, c2)));
                            }
                        }
                        sc.push(e);
                    }
                }
            }
        }
        let mut unit = vec![Elt::ZERO; m * n];
        for i in 0..m {
            for j in 0..n {
                unit[i * n + j] = f.mul(self.unit[i], o.unit[j]);
            }
        }
        Ok(Algebra { field: f.clone(), dim: m * n, sc: Arc::new(sc), unit })
    }

    /// The subalgebra spanned by `basis` with identity `unit` (which need not
    /// be the ambient one, as for corners eAe). Returned with the echelon basis
    /// it was built on.
    pub fn subalgebra(&self, basis: &[Vec<Elt>], unit: &[Elt]) -> Result<SubAlgebra> {
        let f = &self.field;
        let ech = Echelon::span(f, basis, self.dim);
        let r = ech.rank();
        let rows = ech.rows.clone();
        let prods = par::map_range(r * r, |ij| {
            let p = self.mul(&rows[ij / r], &rows[ij % r]);
            ech.coords(f, &p).map(|c| sparse(&c))
        });
        let sc = prods.into_iter().collect::<Option<Vec<_>>>().ok_or_else(|| Error::Invalid("subspace is not closed under multiplication".into()))?;
        let u = ech.coords(f, unit).ok_or_else(|| Error::Invalid("unit lies outside the subspace".into()))?;
        let alg = Algebra::new(f, r, sc, u)?;
        Ok(SubAlgebra { alg, ech })
    }

    /// The same algebra written in another basis (given in current
    /// coordinates); `unit` is the identity expressed in current coordinates.
    pub fn rebase(&self, basis: &[Vec<Elt>], unit: &[Elt]) -> Result<Algebra> {
        let f = &self.field;
        let d = basis.len();
        let m = Matrix::from_cols(basis, self.dim);
        let ech = Echelon::span(f, basis, self.dim);
        if ech.rank() != d {
            return Err(Error::Invalid("basis vectors are dependent".into()));
        }
        let coords = |v: &[Elt]| -> Result<Vec<Elt>> {
            if !ech.contains(f, v) {
                return Err(Error::Invalid("span is not closed under multiplication".into()));
            }
            solve(f, &m, v).ok_or_else(|| Error::Internal("change of basis".into()))
        };
        let prods = par::map_range(d * d, |ij| coords(&self.mul(&basis[ij / d], &basis[ij % d])).map(|c| sparse(&c)));
        let sc = prods.into_iter().collect::<Result<Vec<_>>>()?;
        Algebra::new(f, d, sc, coords(unit)?)
    }

    /// Minimal polynomial of x over the base field.
    pub fn minpoly(&self, x: &[Elt]) -> Poly {
        minpoly(self, x)
    }

    /// Evaluate a polynomial at x.
    pub fn eval_poly(&self, p: &Poly, x: &[Elt]) -> Vec<Elt> {
        let mut acc = self.zero_vec();
        for &c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, x);
            acc = self.add(&acc, &self.scalar(c));
        }
        acc
    }

    /// A^psi for psi = Frobenius^frob_power: the same ring with c acting as
    /// psi(c). Coordinates and structure constants move by psi^{-1}.
    pub fn pull_scalars(&self, frob_power: u64) -> Algebra {
        let f = &self.field;
        let m = f.m() as u64;
        let inv_power = (m - frob_power % m) % m;
        let sc = self.sc.iter().map(|e| e.iter().map(|&(k, c)| (k, f.frobenius(inv_power, c))).collect()).collect();
        Algebra {
            field: f.clone(),
            dim: self.dim,
            sc: Arc::new(sc),
            unit: self.unit.iter().map(|&c| f.frobenius(inv_power, c)).collect(),
        }
    }

    /// All structure constants as (i, j, k, c).
    pub fn sc_entries(&self) -> Vec<(usize, usize, usize, Elt)> {
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for &(k, c) in self.basis_product(i, j) {
                    out.push((i, j, k as usize, c));
                }
            }
        }
        out
    }

    /// Is the linear map `m` (columns = images of basis vectors) an algebra
    /// homomorphism self -> target?
    pub fn is_homomorphism(&self, target: &Algebra, m: &Matrix) -> bool {
        let f = &self.field;
        if m.apply(f, &self.unit) != target.unit {
            return false;
        }
        let imgs: Vec<Vec<Elt>> = (0..self.dim).map(|i| m.col(i)).collect();
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let p = m.apply(f, &self.mul(&self.basis_vec(i), &self.basis_vec(j)));
                p == target.mul(&imgs[i], &imgs[j])
            })
        })
    }

    /// Is `m` an anti-homomorphism: m(xy) = m(y) m(x)?
    pub fn is_antihomomorphism(&self, target: &Algebra, m: &Matrix) -> bool {
        self.opposite().is_homomorphism(target, m)
    }
}

/// A subalgebra together with the echelon basis used for its coordinates.
#[derive(Clone, Debug)]
pub struct SubAlgebra {
    pub alg: Algebra,
    pub ech: Echelon,
}

impl SubAlgebra {
    /// Ambient vector of a subalgebra element.
    pub fn embed(&self, c: &[Elt]) -> Vec<Elt> {
        crate::linalg::combine(self.alg.field(), c, &self.ech.rows, self.ech.dim)
    }
    /// Subalgebra coordinates of an ambient vector, if it lies inside.
    pub fn coords(&self, v: &[Elt]) -> Option<Vec<Elt>> {
        self.ech.coords(self.alg.field(), v)
    }
    pub fn basis(&self) -> &[Vec<Elt>] {
        &self.ech.rows
    }
}

/// The matrix algebra M_n(F) with basis e_ij at index i*n + j.
pub fn matrix_algebra(f: &Field, n: usize) -> Algebra {
    let d = n * n;
    let mut unit = vec![Elt::ZERO; d];
    for i in 0..n {
        unit[i * n + i] = Elt::ONE;
    }
    let sc = (0..d * d)
        .map(|ij| {
            let (a, b) = (ij / d, ij % d);
            if a % n == b / n {
                vec![((a / n * n + b % n) as u32, Elt::ONE)]
            } else {
                vec![]
            }
        })
        .collect();
    Algebra::new(f, d, sc, unit).expect("matrix algebra")
}

/// F[x]/(p) with basis 1, x, ..., x^{d-1}.
pub fn quotient_ring(p: &Poly) -> Result<Algebra> {
    let f = p.field().clone();
    let d = p.degree();
    if d < 1 {
        return Err(Error::Invalid("modulus must have positive degree".into()));
    }
    let d = d as usize;
    let p = p.monic();
    let mut powers = Vec::with_capacity(2 * d);
    for k in 0..2 * d - 1 {
        let mut c = vec![Elt::ZERO; k + 1];
        c[k] = Elt::ONE;
        let r = Poly::new(&f, c).rem(&p);
        let mut v = r.coeffs().to_vec();
        v.resize(d, Elt::ZERO);
        powers.push(sparse(&v));
    }
    let sc = (0..d * d).map(|ij| powers[ij / d + ij % d].clone()).collect();
    let mut unit = vec![Elt::ZERO; d];
    unit[0] = Elt::ONE;
    Algebra::new(&f, d, sc, unit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field_create;

    #[test]
    fn matrix_algebra_center_is_scalars() {
        let f3 = field_create(3, 1).unwrap();
        let m2 = matrix_algebra(&f3, 2);
        assert_eq!(m2.center().len(), 1);
        assert!(!m2.is_commutative());
        let op = m2.opposite();
        assert_eq!(op.opposite(), m2);
        assert_eq!(m2.centralizer(&(0..4).map(|i| m2.basis_vec(i)).collect::<Vec<_>>()), m2.center());
    }

    #[test]
    fn tensor_dims_and_quotient_rings() {
        let f3 = field_create(3, 1).unwrap();
        let x2p1 = Poly::new(&f3, vec![Elt::ONE, Elt::ZERO, Elt::ONE]);
        let r = quotient_ring(&x2p1).unwrap();
        assert!(r.is_commutative());
        assert_eq!(r.opposite(), r);
        let t = r.tensor(&matrix_algebra(&f3, 2)).unwrap();
        assert_eq!(t.dim(), 8);
        assert!(t.is_associative());
        // x^2 = -1 so x is invertible
        let x = r.basis_vec(1);
        let xi = r.inverse(&x).unwrap();
        assert_eq!(r.mul(&x, &xi), r.unit().to_vec());
        let x2 = Poly::new(&f3, vec![Elt::ZERO, Elt::ZERO, Elt::ONE]);
        let n = quotient_ring(&x2).unwrap();
        assert!(n.inverse(&n.basis_vec(1)).is_none());
    }

    #[test]
    fn rejects_nonassociative() {
        let f3 = field_create(3, 1).unwrap();
        // b1 (b1 b1) = b0 but (b1 b1) b1 = b1
        let nonassoc = vec![
            vec![(0, Elt::ONE)],
            vec![(1, Elt::ONE)],
            vec![(2, Elt::ONE)],
            vec![(1, Elt::ONE)],
            vec![(2, Elt::ONE)],
            vec![(0, Elt::ONE)],
            vec![(2, Elt::ONE)],
            vec![(1, Elt::ONE)],
            vec![(2, Elt::ONE)],
        ];
        assert!(Algebra::new(&f3, 3, nonassoc, vec![Elt::ONE, Elt::ZERO, Elt::ZERO]).is_err());
    }
}
