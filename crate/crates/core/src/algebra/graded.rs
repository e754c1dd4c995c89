//! Group-graded algebras with a homogeneous basis.

use super::{is_field, Algebra, SubAlgebra};
use crate::abgroup::{AbGroup, Quotient, Subgroup};
use crate::cochain::Cocycle2;
use crate::error::{Error, Result};
use crate::gf::{Elt, Tower};
use crate::linalg::Echelon;

/// An algebra whose i-th basis vector is homogeneous of degree deg[i].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    pub alg: Algebra,
    pub group: AbGroup,
    pub deg: Vec<usize>,
}

impl GradedAlgebra {
    pub fn new(alg: Algebra, group: &AbGroup, deg: Vec<usize>) -> Result<GradedAlgebra> {
        if deg.len() != alg.dim() || deg.iter().any(|&g| g >= group.size()) {
            return Err(Error::Invalid("degree map has the wrong shape".into()));
        }
        for (i, j, k, _) in alg.sc_entries() {
            if deg[k] != group.add(deg[i], deg[j]) {
                return Err(Error::Invalid(format!("product of basis {} and {} leaves degree {}", i, j, group.fmt_elem(group.add(deg[i], deg[j])))));
            }
        }
        if alg.unit().iter().zip(&deg).any(|(c, &d)| !c.is_zero() && d != 0) {
            return Err(Error::Invalid("unit is not of trivial degree".into()));
        }
        Ok(GradedAlgebra { alg, group: group.clone(), deg })
    }

    /// Trivially graded copy of an algebra.
    pub fn trivial(alg: &Algebra, group: &AbGroup) -> GradedAlgebra {
        GradedAlgebra { alg: alg.clone(), group: group.clone(), deg: vec![0; alg.dim()] }
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn component(&self, g: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.deg[i] == g).collect()
    }

    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.deg.clone();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn support_subgroup(&self) -> Result<Subgroup> {
        let s = self.support();
        let sub = Subgroup::generated(&self.group, &s)?;
        if sub.order() != s.len() {
            return Err(Error::Constraint("support is not a subgroup".into()));
        }
        Ok(sub)
    }

    /// Degree-g part of a vector.
    pub fn project(&self, v: &[Elt], g: usize) -> Vec<Elt> {
        v.iter().zip(&self.deg).map(|(&c, &d)| if d == g { c } else { Elt::ZERO }).collect()
    }

    pub fn is_homogeneous(&self, v: &[Elt], g: usize) -> bool {
        v.iter().zip(&self.deg).all(|(c, &d)| c.is_zero() || d == g)
    }

    pub fn identity_component(&self) -> Result<SubAlgebra> {
        let basis: Vec<Vec<Elt>> = self.component(0).into_iter().map(|i| self.alg.basis_vec(i)).collect();
        self.alg.subalgebra(&basis, self.alg.unit())
    }

    /// Every nonzero homogeneous element is invertible. The identity
    /// component must be a division algebra (a field, over a finite base),
    /// and each other component must be D_e u for an invertible u of the
    /// same dimension.
    pub fn is_graded_division(&self) -> bool {
        let Ok(e) = self.identity_component() else { return false };
        if !is_field(&e.alg, 0) {
            return false;
        }
        let de = e.alg.dim();
        self.support().into_iter().all(|g| {
            let comp = self.component(g);
            comp.len() == de && self.alg.is_invertible(&self.alg.basis_vec(comp[0]))
        })
    }

    /// The center, split by degree: (degree, basis of Z ∩ A_g).
    pub fn graded_center(&self) -> Vec<(usize, Vec<Vec<Elt>>)> {
        let f = self.alg.field();
        let z = self.alg.center();
        let mut out = Vec::new();
        for g in self.support() {
            let parts: Vec<Vec<Elt>> = z.iter().map(|v| self.project(v, g)).collect();
            let ech = Echelon::span(f, &parts, self.dim());
            if ech.rank() > 0 {
                out.push((g, ech.rows));
            }
        }
        out
    }

    pub fn center_support(&self) -> Vec<usize> {
        self.graded_center().into_iter().map(|(g, _)| g).collect()
    }

    /// Z ∩ A_e = F 1
    pub fn is_graded_central(&self) -> bool {
        self.graded_center().iter().find(|(g, _)| *g == 0).is_some_and(|(_, b)| b.len() == 1)
    }

    pub fn pull_scalars(&self, frob_power: u64) -> GradedAlgebra {
        GradedAlgebra { alg: self.alg.pull_scalars(frob_power), group: self.group.clone(), deg: self.deg.clone() }
    }

    pub fn opposite(&self) -> GradedAlgebra {
        GradedAlgebra { alg: self.alg.opposite(), group: self.group.clone(), deg: self.deg.clone() }
    }

    pub fn tensor(&self, o: &GradedAlgebra) -> Result<GradedAlgebra> {
        if self.group != o.group {
            return Err(Error::Invalid("tensor factors graded by different groups".into()));
        }
        let alg = self.alg.tensor(&o.alg)?;
        let mut deg = Vec::with_capacity(alg.dim());
        for &a in &self.deg {
            for &b in &o.deg {
                deg.push(self.group.add(a, b));
            }
        }
        Ok(GradedAlgebra { alg, group: self.group.clone(), deg })
    }

    /// Dimensions of the homogeneous components in group order.
    pub fn component_dims(&self) -> Vec<usize> {
        let mut d = vec![0; self.group.size()];
        for &g in &self.deg {
            d[g] += 1;
        }
        d
    }

    /// Commutation scalars: for homogeneous invertible u_g, u_h with
    /// u_g u_h = c u_h u_g, return c when it is a scalar. Used to compare the
    /// commutation data of graded-division algebras.
    pub fn commutation(&self, g: usize, h: usize) -> Option<Elt> {
        let a = &self.alg;
        let ug = a.basis_vec(*self.component(g).first()?);
        let uh = a.basis_vec(*self.component(h).first()?);
        let lhs = a.mul(&ug, &uh);
        let rhs = a.mul(&uh, &ug);
        let f = a.field();
        let k = rhs.iter().position(|c| !c.is_zero())?;
        let c = f.div(lhs[k], rhs[k]).ok()?;
        if a.scale(c, &rhs) == lhs {
            Some(c)
        } else {
            None
        }
    }
}

/// L^tau K as an F-algebra with basis b_j X_k at index pos(k) * n + j,
/// where b_j = w_L^j and L is central.
pub fn twisted_group_algebra(tower: &Tower, tau: &Cocycle2) -> Result<GradedAlgebra> {
    let l = tower.top();
    if tau.field != *l {
        return Err(Error::Invalid("cocycle must take values in the top field".into()));
    }
    let k = &tau.domain;
    let g = k.parent();
    let n = tower.degree() as usize;
    let dim = n * k.order();
    let elems = k.elems().to_vec();
    let t00 = tau.at(0, 0);
    let mut unit = vec![Elt::ZERO; dim];
    let u = l.inv(t00)?;
    for (j, &c) in tower.coords(u).iter().enumerate() {
        unit[j] = c;
    }
    let alg = Algebra::from_fn(tower.base(), dim, unit, |x, y| {
        let (kx, ix) = (elems[x / n], x % n);
        let (ky, iy) = (elems[y / n], y % n);
        let kz = g.add(kx, ky);
        let v = l.mul(Elt::from_dlog(((ix + iy) % l.units() as usize) as u32), tau.at(kx, ky));
        let base = k.pos(kz).unwrap() * n;
        let mut out = vec![Elt::ZERO; dim];
        for (j, &c) in tower.coords(v).iter().enumerate() {
            out[base + j] = c;
        }
        out
    })?;
    let deg = (0..dim).map(|i| elems[i / n]).collect();
    GradedAlgebra::new(alg, g, deg)
}

/// x * y = gamma(deg x, deg y) x y on homogeneous elements.
pub fn cocycle_twist(a: &GradedAlgebra, gamma: &Cocycle2) -> Result<GradedAlgebra> {
    let f = a.alg.field();
    if gamma.field != *f {
        return Err(Error::FieldMismatch);
    }
    if gamma.domain.parent() != &a.group || a.support().iter().any(|&s| !gamma.domain.contains(s)) {
        return Err(Error::Invalid("twisting cocycle must be defined on the support".into()));
    }
    let d = a.dim();
    let mut sc = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let c = gamma.at(a.deg[i], a.deg[j]);
            sc.push(a.alg.basis_product(i, j).iter().map(|&(k, v)| (k, f.mul(c, v))).collect());
        }
    }
    let unit = a.alg.scale(f.inv(gamma.at(0, 0))?, a.alg.unit());
    let alg = Algebra::new(f, d, sc, unit)?;
    GradedAlgebra::new(alg, &a.group, a.deg.clone())
}

/// The twisted loop algebra: sum over t in T of Dbar_{pi(t)} ⊗ t with
/// (x ⊗ s)(y ⊗ t) = gamma(s, t) xy ⊗ (s + t). T is gamma's domain and `q`
/// projects it onto the grading group of `dbar`. Basis ordered by t, then
/// by the basis of Dbar_{pi(t)}.
pub fn loop_twisted(q: &Quotient, gamma: &Cocycle2, dbar: &GradedAlgebra) -> Result<GradedAlgebra> {
    let t = &gamma.domain;
    let g = t.parent();
    let f = dbar.alg.field();
    if gamma.field != *f {
        return Err(Error::FieldMismatch);
    }
    if dbar.group != q.group {
        return Err(Error::Invalid("Dbar must be graded by the quotient group".into()));
    }
    if t.elems().iter().any(|&x| q.project(x) == usize::MAX) {
        return Err(Error::Invalid("projection is undefined on part of the domain".into()));
    }
    // basis list: (t, dbar index)
    let mut basis: Vec<(usize, usize)> = Vec::new();
    let mut index = vec![usize::MAX; g.size() * dbar.dim()];
    for &x in t.elems() {
        for i in dbar.component(q.project(x)) {
            index[x * dbar.dim() + i] = basis.len();
            basis.push((x, i));
        }
    }
    let d = basis.len();
    let unit_scale = f.inv(gamma.at(0, 0))?;
    let mut unit = vec![Elt::ZERO; d];
    for (idx, &(x, i)) in basis.iter().enumerate() {
        if x == 0 {
            unit[idx] = f.mul(unit_scale, dbar.alg.unit()[i]);
        }
    }
    let mut sc = Vec::with_capacity(d * d);
    for &(x, i) in &basis {
        for &(y, j) in &basis {
            let c = gamma.at(x, y);
            let z = g.add(x, y);
            sc.push(dbar.alg.basis_product(i, j).iter().map(|&(k, v)| (index[z * dbar.dim() + k as usize] as u32, f.mul(c, v))).collect());
        }
    }
    let alg = Algebra::new(f, d, sc, unit)?;
    let deg = basis.iter().map(|&(x, _)| x).collect();
    GradedAlgebra::new(alg, g, deg)
}

/// E A E graded by E A_g E, for an idempotent E of trivial degree.
pub fn corner(e: &[Elt], a: &GradedAlgebra) -> Result<GradedAlgebra> {
    let alg = &a.alg;
    let f = alg.field();
    if !a.is_homogeneous(e, 0) {
        return Err(Error::Invalid("idempotent is not of trivial degree".into()));
    }
    if alg.mul(e, e) != e {
        return Err(Error::Invalid("not an idempotent".into()));
    }
    let mut basis = Vec::new();
    let mut deg = Vec::new();
    for g in a.group.elements() {
        let comp = a.component(g);
        if comp.is_empty() {
            continue;
        }
        let span: Vec<Vec<Elt>> = comp.iter().map(|&i| alg.mul(&alg.mul(e, &alg.basis_vec(i)), e)).collect();
        let ech = Echelon::span(f, &span, alg.dim());
        for r in ech.rows {
            basis.push(r);
            deg.push(g);
        }
    }
    let calg = alg.rebase(&basis, e)?;
    GradedAlgebra::new(calg, &a.group, deg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroup::{quotient, Bicharacter};
    use crate::cochain::upper_triangular_cocycle;
    use crate::gf::{field_create, Poly};

    fn klein_c00() -> GradedAlgebra {
        let f3 = field_create(3, 1).unwrap();
        let g = AbGroup::new(&[2, 2]).unwrap();
        let k = Subgroup::whole(&g);
        let beta = Bicharacter::from_upper(&k, &f3, &[1]).unwrap();
        let tau = upper_triangular_cocycle(&beta);
        twisted_group_algebra(&Tower::new(&f3, 1).unwrap(), &tau).unwrap()
    }

    #[test]
    fn quaternion_like_klein_algebra() {
        let d = klein_c00();
        assert_eq!(d.dim(), 4);
        assert_eq!(d.alg.center().len(), 1);
        assert!(d.is_graded_division());
        assert!(d.is_graded_central());
        assert_eq!(d.center_support(), vec![0]);
        let (a, b) = (1, 2);
        assert_eq!(d.commutation(a, b), Some(field_create(3, 1).unwrap().from_int(-1)));
    }

    #[test]
    fn group_algebra_and_twist() {
        let f3 = field_create(3, 1).unwrap();
        let g = AbGroup::new(&[2]).unwrap();
        let k = Subgroup::whole(&g);
        let triv = Cocycle2::trivial(&k, &f3);
        let fz2 = twisted_group_algebra(&Tower::new(&f3, 1).unwrap(), &triv).unwrap();
        assert!(fz2.is_graded_division());
        assert!(!crate::algebra::is_field(&fz2.alg, 0));
        assert_eq!(fz2.center_support(), vec![0, 1]);
        let gamma = Cocycle2::from_fn(&k, &f3, |x, y| if x == 1 && y == 1 { f3.from_int(-1) } else { Elt::ONE });
        let tw = cocycle_twist(&fz2, &gamma).unwrap();
        assert!(crate::algebra::is_field(&tw.alg, 0));
        // x^2 = -1
        let x = tw.alg.basis_vec(1);
        assert_eq!(tw.alg.minpoly(&x), Poly::new(&f3, vec![Elt::ONE, Elt::ZERO, Elt::ONE]));
        let back = cocycle_twist(&tw, &gamma.inverse()).unwrap();
        assert_eq!(back, fz2);
        assert_eq!(cocycle_twist(&fz2, &triv).unwrap(), fz2);
    }

    #[test]
    fn nilpotent_grading_is_not_division() {
        let f3 = field_create(3, 1).unwrap();
        let g = AbGroup::new(&[2]).unwrap();
        let dual = crate::algebra::quotient_ring(&Poly::new(&f3, vec![Elt::ZERO, Elt::ZERO, Elt::ONE])).unwrap();
        let gr = GradedAlgebra::new(dual, &g, vec![0, 1]).unwrap();
        assert!(!gr.is_graded_division());
    }

    #[test]
    fn loop_over_trivial_quotient() {
        let f3 = field_create(3, 1).unwrap();
        let g = AbGroup::new(&[2]).unwrap();
        let t = Subgroup::whole(&g);
        let q = quotient(&t, &t).unwrap();
        let point = Algebra::new(&f3, 1, vec![vec![(0, Elt::ONE)]], vec![Elt::ONE]).unwrap();
        let dbar = GradedAlgebra::trivial(&point, &q.group);
        for (c, field) in [(Elt::ONE, false), (f3.from_int(-1), true)] {
            let gamma = Cocycle2::from_fn(&t, &f3, |x, y| if x == 1 && y == 1 { c } else { Elt::ONE });
            let l = loop_twisted(&q, &gamma, &dbar).unwrap();
            assert_eq!(l.dim(), 2);
            assert!(l.is_graded_division() && l.is_graded_central());
            assert_eq!(l.center_support(), vec![0, 1]);
            assert_eq!(crate::algebra::is_field(&l.alg, 0), field);
        }
    }

    #[test]
    fn corner_by_unit_is_identity() {
        let d = klein_c00();
        let c = corner(d.alg.unit(), &d).unwrap();
        assert_eq!(c.dim(), 4);
        assert_eq!(c.component_dims(), d.component_dims());
    }
}
