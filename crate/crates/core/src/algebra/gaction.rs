//! Algebras with a finite abelian group acting by automorphisms, and the two
//! smash products.

use super::{Algebra, GradedAlgebra, SubAlgebra};
use crate::abgroup::{cosets, AbGroup, Subgroup};
use crate::error::{Error, Result};
use crate::gf::Elt;
use crate::linalg::{nullspace, Matrix};

/// An algebra with G acting by F-linear automorphisms; mats[g] has the image
/// of basis vector j in column j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GAlgebra {
    pub alg: Algebra,
    pub group: AbGroup,
    pub mats: Vec<Matrix>,
}

impl GAlgebra {
    /// From one matrix per element; checks the homomorphism and automorphism laws.
    pub fn new(alg: Algebra, group: &AbGroup, mats: Vec<Matrix>) -> Result<GAlgebra> {
        let f = alg.field().clone();
        let d = alg.dim();
        if mats.len() != group.size() || mats.iter().any(|m| m.rows != d || m.cols != d) {
            return Err(Error::Invalid("one d x d matrix per group element expected".into()));
        }
        if !mats[0].is_identity() {
            return Err(Error::Invalid("identity must act trivially".into()));
        }
        for g in group.gens() {
            if !alg.is_homomorphism(&alg, &mats[g]) {
                return Err(Error::Invalid(format!("{} does not act by an automorphism", group.fmt_elem(g))));
            }
        }
        for x in group.elements() {
            for g in group.gens() {
                if mats[group.add(x, g)] != mats[x].mul(&f, &mats[g]) {
                    return Err(Error::Invalid("action matrices do not respect the group law".into()));
                }
            }
        }
        Ok(GAlgebra { alg, group: group.clone(), mats })
    }

    /// From matrices for the standard generators of `group`.
    pub fn from_gens(alg: Algebra, group: &AbGroup, gens: &[Matrix]) -> Result<GAlgebra> {
        let f = alg.field().clone();
        let d = alg.dim();
        let unit_gens = group.gens();
        if gens.len() != unit_gens.len() {
            return Err(Error::Invalid("one matrix per group generator expected".into()));
        }
        for (i, m) in gens.iter().enumerate() {
            if m.rows != d || m.cols != d {
                return Err(Error::Invalid("generator matrix has the wrong size".into()));
            }
            if !m.pow(&f, group.orders()[i] as u64).is_identity() {
                return Err(Error::Invalid(format!("generator {} does not have the right order", i)));
            }
            for m2 in gens {
                if m.mul(&f, m2) != m2.mul(&f, m) {
                    return Err(Error::Invalid("generator matrices do not commute".into()));
                }
            }
        }
        let mats = group
            .elements()
            .map(|x| {
                let c = group.coords(x);
                let mut m = Matrix::identity(d);
                for (i, &ci) in c.iter().enumerate() {
                    m = m.mul(&f, &gens[i].pow(&f, ci as u64));
                }
                m
            })
            .collect();
        Self::new(alg, group, mats)
    }

    /// Trivial action.
    pub fn trivial(alg: &Algebra, group: &AbGroup) -> GAlgebra {
        let d = alg.dim();
        GAlgebra { alg: alg.clone(), group: group.clone(), mats: vec![Matrix::identity(d); group.size()] }
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn act(&self, g: usize, v: &[Elt]) -> Vec<Elt> {
        self.mats[g].apply(self.alg.field(), v)
    }

    /// Basis of the fixed subspace C^G.
    pub fn fixed_space(&self) -> Vec<Vec<Elt>> {
        let f = self.alg.field();
        let d = self.dim();
        let mut rows = Vec::new();
        for g in self.group.gens() {
            let m = self.mats[g].sub(f, &Matrix::identity(d));
            for i in 0..d {
                rows.push(m.row(i).to_vec());
            }
        }
        if rows.is_empty() {
            return (0..d).map(|i| self.alg.basis_vec(i)).collect();
        }
        nullspace(f, &Matrix::from_rows(&rows, d))
    }

    /// Elements acting trivially.
    pub fn kernel(&self) -> Vec<usize> {
        self.group.elements().filter(|&g| self.mats[g].is_identity()).collect()
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel() == vec![0]
    }

    pub fn opposite(&self) -> GAlgebra {
        GAlgebra { alg: self.alg.opposite(), group: self.group.clone(), mats: self.mats.clone() }
    }

    /// The action on `Algebra::pull_scalars(frob_power)`.
    pub fn pull_scalars(&self, frob_power: u64) -> GAlgebra {
        let f = self.alg.field();
        let m = f.m() as u64;
        let inv = (m - frob_power % m) % m;
        GAlgebra {
            alg: self.alg.pull_scalars(frob_power),
            group: self.group.clone(),
            mats: self.mats.iter().map(|a| a.map(|c| f.frobenius(inv, c))).collect(),
        }
    }

    /// Restrict to an invariant subalgebra.
    pub fn restrict(&self, sub: &SubAlgebra) -> Result<GAlgebra> {
        let f = self.alg.field();
        let mats = self
            .mats
            .iter()
            .map(|m| {
                let cols: Vec<Vec<Elt>> = sub
                    .basis()
                    .iter()
                    .map(|b| sub.coords(&m.apply(f, b)).ok_or_else(|| Error::Invalid("subalgebra is not invariant".into())))
                    .collect::<Result<_>>()?;
                Ok(Matrix::from_cols(&cols, sub.alg.dim()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GAlgebra { alg: sub.alg.clone(), group: self.group.clone(), mats })
    }

    /// Pull the action back along an injective homomorphism from `h` into
    /// this algebra's group (given as the image of each element of `h`).
    pub fn pullback(&self, h: &AbGroup, image: &[usize]) -> GAlgebra {
        GAlgebra { alg: self.alg.clone(), group: h.clone(), mats: image.iter().map(|&g| self.mats[g].clone()).collect() }
    }

    /// The same action viewed on a subgroup T of the acting group, with T
    /// relabelled as an abstract group.
    pub fn restrict_group(&self, t: &Subgroup) -> GAlgebra {
        let a = t.as_abgroup();
        let image: Vec<usize> = a.elements().map(|i| t.abstract_to_parent(&a, i)).collect();
        self.pullback(&a, &image)
    }
}

/// C # FG, graded by G, basis c_i g at index g * dim C + i.
pub fn smash_group(c: &GAlgebra) -> Result<GradedAlgebra> {
    let g = &c.group;
    let d = c.dim();
    let n = g.size();
    let f = c.alg.field();
    // images g . b_j
    let acted: Vec<Vec<Vec<Elt>>> = (0..n).map(|x| (0..d).map(|j| c.mats[x].col(j)).collect()).collect();
    let mut unit = vec![Elt::ZERO; d * n];
    unit[..d].copy_from_slice(c.alg.unit());
    let alg = Algebra::from_fn(f, d * n, unit, |x, y| {
        let (gx, i) = (x / d, x % d);
        let (gy, j) = (y / d, y % d);
        let p = c.alg.mul(&c.alg.basis_vec(i), &acted[gx][j]);
        let gz = g.add(gx, gy);
        let mut out = vec![Elt::ZERO; d * n];
        out[gz * d..(gz + 1) * d].copy_from_slice(&p);
        out
    })?;
    let deg = (0..d * n).map(|x| x / d).collect();
    GradedAlgebra::new(alg, g, deg)
}

/// A # (FG)^* with its G-action, basis a_i eps_g at index g * dim A + i,
/// and the embedding a -> sum_g a eps_g.
#[derive(Clone, Debug)]
pub struct DualSmash {
    pub galg: GAlgebra,
    pub embed: Matrix,
}

pub fn smash_dual(a: &GradedAlgebra) -> Result<DualSmash> {
    let g = &a.group;
    let d = a.dim();
    let n = g.size();
    let f = a.alg.field();
    let mut unit = vec![Elt::ZERO; d * n];
    for x in 0..n {
        unit[x * d..(x + 1) * d].copy_from_slice(a.alg.unit());
    }
    let mut sc = Vec::with_capacity(d * n * d * n);
    for gx in 0..n {
        for i in 0..d {
            for gy in 0..n {
                for j in 0..d {
                    // (b_i eps_gx)(b_j eps_gy) = [deg b_j = gx - gy] b_i b_j eps_gy
                    if a.deg[j] == g.sub(gx, gy) {
                        sc.push(a.alg.basis_product(i, j).iter().map(|&(k, c)| ((gy * d) as u32 + k, c)).collect());
                    } else {
                        sc.push(Vec::new());
                    }
                }
            }
        }
    }
    let alg = Algebra::new(f, d * n, sc, unit)?;
    let mats = g
        .elements()
        .map(|x| {
            let mut m = Matrix::zeros(d * n, d * n);
            for h in 0..n {
                let to = g.sub(h, x);
                for i in 0..d {
                    m.set(to * d + i, h * d + i, Elt::ONE);
                }
            }
            m
        })
        .collect();
    let galg = GAlgebra::new(alg, g, mats)?;
    let mut embed = Matrix::zeros(d * n, d);
    for h in 0..n {
        for i in 0..d {
            embed.set(h * d + i, i, Elt::ONE);
        }
    }
    Ok(DualSmash { galg, embed })
}

/// Gamma(A): the centralizer of A inside A # (FG)^*, with the inherited action.
#[derive(Clone, Debug)]
pub struct Gamma {
    pub dual: DualSmash,
    pub sub: SubAlgebra,
    pub galg: GAlgebra,
}

pub fn gamma_of(a: &GradedAlgebra) -> Result<Gamma> {
    let dual = smash_dual(a)?;
    let gens: Vec<Vec<Elt>> = (0..a.dim()).map(|i| dual.embed.col(i)).collect();
    let cent = dual.galg.alg.centralizer(&gens);
    let sub = dual.galg.alg.subalgebra(&cent, dual.galg.alg.unit())?;
    let galg = dual.galg.restrict(&sub)?;
    Ok(Gamma { dual, sub, galg })
}

/// Ind_T^G(C) for a T-algebra C (C's group is T relabelled, see
/// `Subgroup::as_abgroup`). Functions f: G -> C with f(t + g) = t . f(g),
/// stored by their values on the least coset representatives: basis
/// index i * dim C + j is the function with value b_j at the i-th representative.
pub fn induce(t: &Subgroup, c: &GAlgebra) -> Result<GAlgebra> {
    let g = t.parent();
    let a = t.as_abgroup();
    if c.group != a {
        return Err(Error::Invalid("algebra must be acted on by the subgroup".into()));
    }
    let mut to_abstract = vec![usize::MAX; g.size()];
    for i in a.elements() {
        to_abstract[t.abstract_to_parent(&a, i)] = i;
    }
    let reps: Vec<usize> = cosets(&Subgroup::whole(g), t).iter().map(|c| c.rep).collect();
    let m = reps.len();
    let d = c.dim();
    let f = c.alg.field();
    let mut unit = vec![Elt::ZERO; m * d];
    for i in 0..m {
        unit[i * d..(i + 1) * d].copy_from_slice(c.alg.unit());
    }
    let alg = Algebra::from_fn(f, m * d, unit, |x, y| {
        let mut out = vec![Elt::ZERO; m * d];
        if x / d == y / d {
            let i = x / d;
            let p = c.alg.mul(&c.alg.basis_vec(x % d), &c.alg.basis_vec(y % d));
            out[i * d..(i + 1) * d].copy_from_slice(&p);
        }
        out
    })?;
    // rep index and T-part of any element
    let mut split = vec![(0usize, 0usize); g.size()];
    for (k, &r) in reps.iter().enumerate() {
        for &s in t.elems() {
            split[g.add(s, r)] = (k, to_abstract[s]);
        }
    }
    let mats = g
        .elements()
        .map(|x| {
            // (x . f)(g_i) = f(g_i + x) = s . f(g_k) where g_i + x = s + g_k
            let mut mat = Matrix::zeros(m * d, m * d);
            for (i, &gi) in reps.iter().enumerate() {
                let (k, s) = split[g.add(gi, x)];
                for j in 0..d {
                    let col = c.mats[s].col(j);
                    for (r, &v) in col.iter().enumerate() {
                        mat.set(i * d + r, k * d + j, v);
                    }
                }
            }
            mat
        })
        .collect();
    GAlgebra::new(alg, g, mats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::quotient_ring;
    use crate::gf::{field_create, Poly};

    /// GF(9) = GF(3)[x]/(x^2 + 1) with Frobenius x -> -x.
    pub(crate) fn gf9_frobenius() -> GAlgebra {
        let f3 = field_create(3, 1).unwrap();
        let l = quotient_ring(&Poly::new(&f3, vec![Elt::ONE, Elt::ZERO, Elt::ONE])).unwrap();
        let frob = Matrix::from_rows(&[vec![Elt::ONE, Elt::ZERO], vec![Elt::ZERO, f3.from_int(-1)]], 2);
        GAlgebra::from_gens(l, &AbGroup::new(&[2]).unwrap(), &[frob]).unwrap()
    }

    #[test]
    fn smash_products_shapes() {
        let c = gf9_frobenius();
        assert!(c.is_faithful());
        assert_eq!(c.fixed_space().len(), 1);
        let s = smash_group(&c).unwrap();
        assert_eq!(s.dim(), 4);
        assert_eq!(s.alg.center().len(), 1);
        let d = smash_dual(&s).unwrap();
        assert_eq!(d.galg.dim(), 8);
        // eps_g are orthogonal idempotents summing to 1
        let n = 2;
        let eps: Vec<Vec<Elt>> = (0..n)
            .map(|g| {
                let mut v = vec![Elt::ZERO; 8];
                v[g * 4..g * 4 + 4].copy_from_slice(s.alg.unit());
                v
            })
            .collect();
        for a in 0..n {
            for b in 0..n {
                let p = d.galg.alg.mul(&eps[a], &eps[b]);
                if a == b {
                    assert_eq!(p, eps[a]);
                } else {
                    assert!(p.iter().all(|x| x.is_zero()));
                }
            }
        }
        assert!(s.alg.is_homomorphism(&d.galg.alg, &d.embed));
    }

    #[test]
    fn trivial_grading_dual_smash_is_product() {
        let f3 = field_create(3, 1).unwrap();
        let l = quotient_ring(&Poly::new(&f3, vec![Elt::ONE, Elt::ZERO, Elt::ONE])).unwrap();
        let g = AbGroup::new(&[2]).unwrap();
        let a = GradedAlgebra::trivial(&l, &g);
        let d = smash_dual(&a).unwrap();
        // central eps and commutative factors: the whole thing is commutative
        assert!(d.galg.alg.is_commutative());
        let gam = gamma_of(&a).unwrap();
        assert_eq!(gam.galg.dim(), 4);
    }

    #[test]
    fn induce_from_trivial_subgroup() {
        let f3 = field_create(3, 1).unwrap();
        let g = AbGroup::new(&[4]).unwrap();
        let t = Subgroup::trivial(&g);
        let point = Algebra::new(&f3, 1, vec![vec![(0, Elt::ONE)]], vec![Elt::ONE]).unwrap();
        let c = GAlgebra::trivial(&point, &t.as_abgroup());
        let ind = induce(&t, &c).unwrap();
        assert_eq!(ind.dim(), 4);
        assert!(ind.is_faithful());
        assert_eq!(ind.fixed_space().len(), 1);
        let same = induce(&Subgroup::whole(&g), &GAlgebra::trivial(&point, &Subgroup::whole(&g).as_abgroup())).unwrap();
        assert_eq!(same.dim(), 1);
    }
}
