//! The intrinsic invariant of a simple Galois extension, and an independent
//! brute-force isomorphism test.

use super::{center_subalgebra, mu_component};
use crate::abgroup::{Bicharacter, Subgroup};
use crate::algebra::{is_field, quotient_ring, split_primitive_idempotent, Algebra, GAlgebra, SubAlgebra};
use crate::error::{Error, Result};
use crate::gf::{Elt, Field, Poly, Tower};
use crate::linalg::{inverse, rank, solve, Matrix};
use serde::Serialize;

/// (n, theta, K, beta, s): the relative degree of the center, theta on the
/// standard generators of G, the kernel K of the action on the center, the
/// commutation bicharacter on K's basis (as dlogs) and the power data s.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PsiInvariant {
    pub n: u32,
    pub theta: Vec<u32>,
    pub kernel: Vec<usize>,
    pub beta: Vec<Vec<u32>>,
    pub s: Vec<u32>,
}

fn outer(f: &Field, x: &[Elt], y: &[Elt]) -> Vec<Elt> {
    let mut v = Vec::with_capacity(x.len() * y.len());
    for &a in x {
        for &b in y {
            v.push(f.mul(a, b));
        }
    }
    v
}

/// All F-algebra isomorphisms between two fields given as algebras, as
/// matrices whose column i is the image of basis vector i. One comes from a
/// primitive idempotent e of a ⊗ b via e(x ⊗ 1) = e(1 ⊗ y); the rest are its
/// Frobenius twists. Empty when the dimensions differ.
pub fn field_isos(a: &Algebra, b: &Algebra) -> Result<Vec<Matrix>> {
    let f = a.field();
    let n = a.dim();
    if b.dim() != n || b.field() != f {
        return Ok(Vec::new());
    }
    let t = a.tensor(b)?;
    let e = split_primitive_idempotent(&t)?;
    let cols: Vec<Vec<Elt>> = (0..n).map(|j| t.mul(&e, &outer(f, a.unit(), &b.basis_vec(j)))).collect();
    let m = Matrix::from_cols(&cols, n * n);
    let mut images = Vec::with_capacity(n);
    for i in 0..n {
        let target = t.mul(&e, &outer(f, &a.basis_vec(i), b.unit()));
        match solve(f, &m, &target) {
            Some(y) => images.push(y),
            None => return Ok(Vec::new()),
        }
    }
    let first = Matrix::from_cols(&images, n);
    if rank(f, &first) != n || !a.is_homomorphism(b, &first) {
        return Ok(Vec::new());
    }
    let q = f.q() as u64;
    let frob_cols: Vec<Vec<Elt>> = (0..n).map(|j| b.pow(&b.basis_vec(j), q)).collect();
    let frob = Matrix::from_cols(&frob_cols, n);
    let mut out = vec![first];
    for _ in 1..n {
        let next = frob.mul(f, out.last().unwrap());
        if next == out[0] {
            break;
        }
        out.push(next);
    }
    Ok(out)
}

/// theta(g) = j when g acts on the center as z -> z^{|F|^j}.
fn theta_on_center(zg: &GAlgebra) -> Result<Vec<u32>> {
    let z = &zg.alg;
    let f = z.field();
    let n = z.dim();
    let q = f.q() as u64;
    let frob_cols: Vec<Vec<Elt>> = (0..n).map(|j| z.pow(&z.basis_vec(j), q)).collect();
    let frob = Matrix::from_cols(&frob_cols, n);
    let mut powers = vec![Matrix::identity(n)];
    for _ in 1..n {
        powers.push(frob.mul(f, powers.last().unwrap()));
    }
    zg.mats
        .iter()
        .map(|m| {
            powers
                .iter()
                .position(|p| p == m)
                .map(|j| j as u32)
                .ok_or_else(|| Error::Constraint("group does not act on the center by Frobenius powers".into()))
        })
        .collect()
}

fn unit_in_component(c: &GAlgebra, h: usize) -> Result<Vec<Elt>> {
    mu_component(c, h)
        .into_iter()
        .find(|v| c.alg.is_invertible(v))
        .ok_or_else(|| Error::Constraint(format!("no unit of MU degree {}", c.group.fmt_elem(h))))
}

/// The scalar c with y = c x, if there is one.
fn ratio(f: &Field, y: &[Elt], x: &[Elt]) -> Option<Elt> {
    let p = x.iter().position(|c| !c.is_zero())?;
    let c = f.div(y[p], x[p]).ok()?;
    x.iter().zip(y).all(|(&a, &b)| f.mul(c, a) == b).then_some(c)
}

struct CenterData {
    z: SubAlgebra,
    zg: GAlgebra,
    theta_all: Vec<u32>,
    kernel: Subgroup,
}

fn center_data(c: &GAlgebra) -> Result<CenterData> {
    let z = center_subalgebra(&c.alg)?;
    if !is_field(&z.alg, 0) {
        return Err(Error::Constraint("center is not a field".into()));
    }
    let zg = c.restrict(&z)?;
    let theta_all = theta_on_center(&zg)?;
    let ker: Vec<usize> = c.group.elements().filter(|&x| theta_all[x] == 0).collect();
    let kernel = Subgroup::generated(&c.group, &ker)?;
    Ok(CenterData { z, zg, theta_all, kernel })
}

pub fn psi_invariant(c: &GAlgebra) -> Result<PsiInvariant> {
    psi_invariant_with_root(c, 0)
}

/// Psi computed with the `root`-th identification of the center with the
/// canonical field L (roots of the defining polynomial of w_L in Z(C),
/// taken in a fixed order). The result does not depend on `root`.
pub fn psi_invariant_with_root(c: &GAlgebra, root: usize) -> Result<PsiInvariant> {
    let f = c.alg.field().clone();
    let g = &c.group;
    let CenterData { z, theta_all, kernel: k, .. } = center_data(c)?;
    let n = z.alg.dim();
    let theta = g.gens().into_iter().map(|x| theta_all[x]).collect();
    let kernel = k.elems().to_vec();
    if k.order() == 1 {
        return Ok(PsiInvariant { n: n as u32, theta, kernel, beta: Vec::new(), s: Vec::new() });
    }
    let basis = k.basis().to_vec();
    let m = basis.len();
    let xs: Vec<Vec<Elt>> = basis.iter().map(|&a| unit_in_component(c, a)).collect::<Result<_>>()?;

    let mut beta = vec![vec![0u32; m]; m];
    for (i, &a) in basis.iter().enumerate() {
        for j in 0..m {
            let sc = ratio(&f, &c.act(a, &xs[j]), &xs[j]).ok_or_else(|| Error::Constraint("kernel does not act on MU components by scalars".into()))?;
            beta[i][j] = sc.dlog().unwrap();
        }
    }
    let bich = Bicharacter::new(&k, &f, beta.clone())?;

    let tower = Tower::new(&f, n as u32)?;
    let l = tower.top().clone();
    let lalg = quotient_ring(&Poly::new(&f, tower.minpoly().to_vec()))?;
    let mut isos = field_isos(&lalg, &z.alg)?;
    if isos.len() != n {
        return Err(Error::Internal(format!("found {} of {} identifications of the center", isos.len(), n)));
    }
    let key_col = if n > 1 { 1 } else { 0 };
    isos.sort_by_key(|iso| iso.col(key_col).iter().map(|e| e.raw()).collect::<Vec<_>>());
    let iota = &isos[root % n];
    let iota_inv = inverse(&f, iota).ok_or_else(|| Error::Internal("identification is singular".into()))?;
    let to_z = |x: Elt| z.embed(&iota.apply(&f, tower.coords(x)));
    let from_z = |v: &[Elt]| -> Result<Elt> {
        let zc = z.coords(v).ok_or_else(|| Error::Internal("element is not central".into()))?;
        Ok(tower.from_coords(&iota_inv.apply(&f, &zc)))
    };

    let t0 = if n > 1 { g.elements().find(|&x| theta_all[x] == 1).unwrap() } else { 0 };
    let nt0 = g.mul(n as i64, t0);
    let ul = l.units() as u64;
    let uf = f.units() as u64;
    let qm1 = f.q() as u64 - 1;
    let index = tower.index();
    let mut s = Vec::with_capacity(m);
    for (i, &a) in basis.iter().enumerate() {
        let o = k.basis_orders()[i] as u64;
        let ji = bich.dlog_at(nt0, a) as u64;
        let x = &xs[i];
        let xinv = c.alg.inverse(x).unwrap();
        let h = from_z(&c.alg.mul(&c.act(t0, x), &xinv))?;
        // rescale X by m in Z with sigma(m)/m = w_L^{j} / h, so that t0
        // acts on it by the canonical value
        let r = l.div(Elt::from_dlog(ji as u32 % l.units()), h)?.dlog().unwrap() as u64;
        if !r.is_multiple_of(qm1) {
            return Err(Error::Constraint("action on a MU component has the wrong norm".into()));
        }
        let scale = to_z(Elt::from_dlog((r / qm1) as u32));
        let xn = c.alg.mul(&scale, x);
        let mu = from_z(&c.alg.pow(&xn, o))?;
        let shift = o * ji / uf;
        let y = (mu.dlog().unwrap() as u64 + ul - shift % ul) % ul;
        if !y.is_multiple_of(index) {
            return Err(Error::Constraint("power of a MU generator is off the expected coset".into()));
        }
        s.push(((y / index) % o) as u32);
    }
    Ok(PsiInvariant { n: n as u32, theta, kernel, beta, s })
}

/// Brute-force test for an isomorphism of G-algebras between two simple
/// Galois extensions whose MU components are one-dimensional over the
/// center. Every isomorphism restricts to an equivariant isomorphism rho of
/// centers and sends a chosen unit X_i of MU degree a_i to l_i Y_i; all rho
/// and all l_i in Z^x are tried, and a hit is confirmed on the full basis.
pub fn galois_iso_oracle(c1: &GAlgebra, c2: &GAlgebra) -> Result<bool> {
    let f = c1.alg.field().clone();
    if c1.group != c2.group || c1.dim() != c2.dim() || *c2.alg.field() != f {
        return Ok(false);
    }
    let g = &c1.group;
    let d1 = center_data(c1)?;
    let d2 = center_data(c2)?;
    if d1.z.alg.dim() != d2.z.alg.dim() || d1.kernel.elems() != d2.kernel.elems() {
        return Ok(false);
    }
    let gens = g.gens();
    let rhos: Vec<Matrix> = field_isos(&d1.z.alg, &d2.z.alg)?
        .into_iter()
        .filter(|r| gens.iter().all(|&x| r.mul(&f, &d1.zg.mats[x]) == d2.zg.mats[x].mul(&f, r)))
        .collect();
    if rhos.is_empty() {
        return Ok(false);
    }
    let k = &d1.kernel;
    let basis = k.basis().to_vec();
    let orders = k.basis_orders().to_vec();
    let xs: Vec<Vec<Elt>> = basis.iter().map(|&a| unit_in_component(c1, a)).collect::<Result<_>>()?;
    let ys: Vec<Vec<Elt>> = basis.iter().map(|&a| unit_in_component(c2, a)).collect::<Result<_>>()?;
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            let comm = |c: &GAlgebra, v: &[Vec<Elt>]| ratio(&f, &c.alg.mul(&v[i], &v[j]), &c.alg.mul(&v[j], &v[i]));
            if comm(c1, &xs) != comm(c2, &ys) {
                return Ok(false);
            }
        }
    }
    let n = d2.z.alg.dim();
    let q = f.q() as u64;
    let total = q.checked_pow(n as u32).filter(|&t| t <= 1 << 16).ok_or_else(|| Error::SizeCap("center too large for the brute-force oracle".into()))?;
    let nonzero: Vec<Vec<Elt>> = (1..total)
        .map(|mut code| {
            let coeffs: Vec<Elt> = (0..n)
                .map(|_| {
                    let r = (code % q) as u32;
                    code /= q;
                    f.from_code(r)
                })
                .collect();
            d2.z.embed(&coeffs)
        })
        .collect();
    let z1_basis: Vec<Vec<Elt>> = d1.z.basis().to_vec();

    for rho in &rhos {
        let rho_amb = |v: &[Elt]| d2.z.embed(&rho.apply(&f, &d1.z.coords(v).unwrap()));
        let mut cands: Vec<Vec<Vec<Elt>>> = Vec::with_capacity(basis.len());
        for (i, x) in xs.iter().enumerate() {
            let xinv = c1.alg.inverse(x).unwrap();
            let power = rho_amb(&c1.alg.pow(x, orders[i] as u64));
            let hs: Vec<Vec<Elt>> = gens.iter().map(|&gg| rho_amb(&c1.alg.mul(&c1.act(gg, x), &xinv))).collect();
            let ok: Vec<Vec<Elt>> = nonzero
                .iter()
                .map(|l| c2.alg.mul(l, &ys[i]))
                .filter(|y| {
                    c2.alg.pow(y, orders[i] as u64) == power
                        && gens.iter().zip(&hs).all(|(&gg, h)| c2.act(gg, y) == c2.alg.mul(h, y))
                })
                .collect();
            if ok.is_empty() {
                break;
            }
            cands.push(ok);
        }
        if cands.len() != basis.len() {
            continue;
        }
        // the conditions above decouple, so the first tuple should already
        // work; keep searching a little in case it does not
        let mut idx = vec![0usize; cands.len()];
        for _ in 0..10_000 {
            let images: Vec<&Vec<Elt>> = idx.iter().enumerate().map(|(i, &t)| &cands[i][t]).collect();
            if verify_map(c1, c2, k, &z1_basis, &xs, &images, &rho_amb)? {
                return Ok(true);
            }
            let mut p = 0;
            loop {
                if p == idx.len() {
                    break;
                }
                idx[p] += 1;
                if idx[p] < cands[p].len() {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
            if p == idx.len() {
                break;
            }
        }
    }
    Ok(false)
}

/// Build the linear map z X^c -> rho(z) Y^c on the monomial basis and check
/// it is an equivariant algebra isomorphism.
fn verify_map(
    c1: &GAlgebra,
    c2: &GAlgebra,
    k: &Subgroup,
    z1_basis: &[Vec<Elt>],
    xs: &[Vec<Elt>],
    ys: &[&Vec<Elt>],
    rho_amb: &dyn Fn(&[Elt]) -> Vec<Elt>,
) -> Result<bool> {
    let f = c1.alg.field();
    let d = c1.dim();
    let mut src = Vec::with_capacity(d);
    let mut dst = Vec::with_capacity(d);
    for &kk in k.elems() {
        let coords = k.basis_coords(kk);
        let mut m1 = c1.alg.unit().to_vec();
        let mut m2 = c2.alg.unit().to_vec();
        for (i, &e) in coords.iter().enumerate() {
            m1 = c1.alg.mul(&m1, &c1.alg.pow(&xs[i], e as u64));
            m2 = c2.alg.mul(&m2, &c2.alg.pow(ys[i], e as u64));
        }
        for zb in z1_basis {
            src.push(c1.alg.mul(zb, &m1));
            dst.push(c2.alg.mul(&rho_amb(zb), &m2));
        }
    }
    if src.len() != d {
        return Ok(false);
    }
    let p1 = Matrix::from_cols(&src, d);
    let Some(p1i) = inverse(f, &p1) else { return Ok(false) };
    let psi = Matrix::from_cols(&dst, d).mul(f, &p1i);
    Ok(rank(f, &psi) == d
        && c1.alg.is_homomorphism(&c2.alg, &psi)
        && c1.group.gens().into_iter().all(|g| psi.mul(f, &c1.mats[g]) == c2.mats[g].mul(f, &psi)))
}
