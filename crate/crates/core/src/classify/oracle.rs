//! Brute-force isomorphism tests for graded-division algebras.

use crate::algebra::{GradedAlgebra, SubAlgebra};
use crate::error::{Error, Result};
use crate::galois::field_isos;
use crate::gf::Elt;
use crate::linalg::{inverse, rank, Matrix};
use serde::Serialize;

const MAX_IDENTITY_COMPONENT: u64 = 1 << 16;
const MAX_TUPLES: usize = 100_000;

struct Frame {
    e: SubAlgebra,
    basis: Vec<usize>,
    orders: Vec<u32>,
    units: Vec<Vec<Elt>>,
    /// conjugation by units[i] on the identity component
    conj: Vec<Matrix>,
}

fn conj_on(d: &GradedAlgebra, e: &SubAlgebra, u: &[Elt]) -> Result<Matrix> {
    let ui = d.alg.inverse(u).ok_or_else(|| Error::Constraint("homogeneous element is not a unit".into()))?;
    let cols = e
        .basis()
        .iter()
        .map(|b| {
            let v = d.alg.mul(&d.alg.mul(u, b), &ui);
            e.coords(&v).ok_or_else(|| Error::Internal("conjugation leaves the identity component".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_cols(&cols, e.alg.dim()))
}

fn frame(d: &GradedAlgebra) -> Result<Frame> {
    if !d.is_graded_division() {
        return Err(Error::Constraint("not graded-division".into()));
    }
    let t = d.support_subgroup()?;
    let e = d.identity_component()?;
    let basis = t.basis().to_vec();
    let orders = t.basis_orders().to_vec();
    let units: Vec<Vec<Elt>> = basis.iter().map(|&g| d.alg.basis_vec(d.component(g)[0])).collect();
    let conj = units.iter().map(|u| conj_on(d, &e, u)).collect::<Result<Vec<_>>>()?;
    Ok(Frame { e, basis, orders, units, conj })
}

fn monomial(d: &GradedAlgebra, gens: &[Vec<Elt>], c: &[u32]) -> Vec<Elt> {
    let mut m = d.alg.unit().to_vec();
    for (g, &e) in gens.iter().zip(c) {
        m = d.alg.mul(&m, &d.alg.pow(g, e as u64));
    }
    m
}

fn commutator(d: &GradedAlgebra, x: &[Elt], y: &[Elt]) -> Option<Vec<Elt>> {
    let a = &d.alg;
    Some(a.mul(&a.mul(&a.mul(x, y), &a.inverse(x)?), &a.inverse(y)?))
}

/// Every nonzero element of the identity component, in ambient coordinates.
fn nonzero_elements(d: &GradedAlgebra, e: &SubAlgebra) -> Result<Vec<Vec<Elt>>> {
    let f = d.alg.field();
    let q = f.q() as u64;
    let n = e.alg.dim() as u32;
    let total = q.checked_pow(n).filter(|&t| t <= MAX_IDENTITY_COMPONENT).ok_or_else(|| {
        Error::SizeCap("identity component too large to enumerate".into())
    })?;
    Ok((1..total)
        .map(|mut code| {
            let c: Vec<Elt> = (0..n)
                .map(|_| {
                    let r = (code % q) as u32;
                    code /= q;
                    f.from_code(r)
                })
                .collect();
            e.embed(&c)
        })
        .collect())
}

/// Is there an F-linear graded isomorphism D1 -> D2? Both must be
/// graded-division with the same support. Searches identity-component
/// isomorphisms compatible with conjugation, then unit images of a basis
/// of the support matching powers and commutators, and verifies the
/// resulting map.
pub fn graded_iso_oracle(d1: &GradedAlgebra, d2: &GradedAlgebra) -> Result<bool> {
    if d1.group != d2.group || d1.alg.field() != d2.alg.field() {
        return Err(Error::Invalid("algebras must share the group and field".into()));
    }
    if d1.support() != d2.support() || d1.component_dims() != d2.component_dims() {
        return Ok(false);
    }
    let a = frame(d1)?;
    let b = frame(d2)?;
    let f = d1.alg.field();
    let t = d1.support_subgroup()?;
    let rhos: Vec<Matrix> = field_isos(&a.e.alg, &b.e.alg)?
        .into_iter()
        .filter(|r| a.conj.iter().zip(&b.conj).all(|(s, tau)| r.mul(f, s) == tau.mul(f, r)))
        .collect();
    if rhos.is_empty() {
        return Ok(false);
    }
    let e2 = nonzero_elements(d2, &b.e)?;
    let m = a.basis.len();
    let comms1: Vec<Vec<Option<Vec<Elt>>>> =
        (0..m).map(|i| (0..i).map(|j| commutator(d1, &a.units[i], &a.units[j])).collect()).collect();

    for rho in &rhos {
        let rho_amb = |v: &[Elt]| -> Option<Vec<Elt>> { a.e.coords(v).map(|c| b.e.embed(&rho.apply(f, &c))) };
        let mut cands: Vec<Vec<Vec<Elt>>> = Vec::with_capacity(m);
        for i in 0..m {
            let target = rho_amb(&d1.alg.pow(&a.units[i], a.orders[i] as u64))
                .ok_or_else(|| Error::Internal("power of a unit leaves the identity component".into()))?;
            let c: Vec<Vec<Elt>> = e2
                .iter()
                .map(|l| d2.alg.mul(l, &b.units[i]))
                .filter(|y| d2.alg.pow(y, a.orders[i] as u64) == target)
                .collect();
            if c.is_empty() {
                break;
            }
            cands.push(c);
        }
        if cands.len() < m {
            continue;
        }
        let mut chosen: Vec<usize> = Vec::with_capacity(m);
        let mut tried = 0usize;
        let mut next = 0usize;
        loop {
            let i = chosen.len();
            if i == m {
                tried += 1;
                let ys: Vec<Vec<Elt>> = chosen.iter().enumerate().map(|(i, &c)| cands[i][c].clone()).collect();
                if verify(d1, d2, &t, &a, &ys, &rho_amb)? {
                    return Ok(true);
                }
                if tried >= MAX_TUPLES {
                    return Err(Error::SizeCap("too many candidate tuples".into()));
                }
                next = chosen.pop().unwrap() + 1;
                continue;
            }
            let mut placed = false;
            for c in next..cands[i].len() {
                let y = &cands[i][c];
                let ok = (0..i).all(|j| {
                    let yj = &cands[j][chosen[j]];
                    match (&comms1[i][j], commutator(d2, y, yj)) {
                        (Some(c1), Some(c2)) => rho_amb(c1).as_ref() == Some(&c2),
                        _ => false,
                    }
                });
                if ok {
                    chosen.push(c);
                    next = 0;
                    placed = true;
                    break;
                }
            }
            if !placed {
                match chosen.pop() {
                    Some(c) => next = c + 1,
                    None => break,
                }
            }
        }
    }
    Ok(false)
}

fn verify(
    d1: &GradedAlgebra,
    d2: &GradedAlgebra,
    t: &crate::abgroup::Subgroup,
    a: &Frame,
    ys: &[Vec<Elt>],
    rho_amb: &dyn Fn(&[Elt]) -> Option<Vec<Elt>>,
) -> Result<bool> {
    let f = d1.alg.field();
    let d = d1.dim();
    let mut src = Vec::with_capacity(d);
    let mut dst = Vec::with_capacity(d);
    for &g in t.elems() {
        let c = t.basis_coords(g);
        let m1 = monomial(d1, &a.units, c);
        let m2 = monomial(d2, ys, c);
        for eb in a.e.basis() {
            src.push(d1.alg.mul(eb, &m1));
            let Some(img) = rho_amb(eb) else { return Ok(false) };
            dst.push(d2.alg.mul(&img, &m2));
        }
    }
    if src.len() != d {
        return Ok(false);
    }
    let Some(si) = inverse(f, &Matrix::from_cols(&src, d)) else { return Ok(false) };
    let map = Matrix::from_cols(&dst, d).mul(f, &si);
    Ok(rank(f, &map) == d && d1.alg.is_homomorphism(&d2.alg, &map))
}

/// Graded ring isomorphism: an F-semilinear graded isomorphism, i.e. an
/// F-linear one from some Frobenius pull of D1.
pub fn graded_ring_iso_oracle(d1: &GradedAlgebra, d2: &GradedAlgebra) -> Result<bool> {
    let m = d1.alg.field().m() as u64;
    for k in 0..m {
        if graded_iso_oracle(&d1.pull_scalars(k), d2)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Cheap invariants of a graded-division algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GdrFingerprint {
    pub support: Vec<usize>,
    pub center_support: Vec<usize>,
    pub identity_dim: usize,
    /// degrees whose units centralize the identity component
    pub centralizing: Vec<usize>,
    /// per support element, the k with u x u^-1 = x^{|F|^k} on D_e
    pub theta: Vec<u32>,
}

pub fn gdr_fingerprint(d: &GradedAlgebra) -> Result<GdrFingerprint> {
    if !d.is_graded_division() {
        return Err(Error::Constraint("not graded-division".into()));
    }
    let e = d.identity_component()?;
    let f = d.alg.field();
    let n = e.alg.dim();
    let q = f.q() as u64;
    let frob_cols: Vec<Vec<Elt>> = (0..n).map(|j| e.alg.pow(&e.alg.basis_vec(j), q)).collect();
    let frob = Matrix::from_cols(&frob_cols, n);
    let mut powers = vec![Matrix::identity(n)];
    for _ in 1..n {
        powers.push(frob.mul(f, powers.last().unwrap()));
    }
    let support = d.support();
    let theta = support
        .iter()
        .map(|&g| {
            let c = conj_on(d, &e, &d.alg.basis_vec(d.component(g)[0]))?;
            powers
                .iter()
                .position(|p| *p == c)
                .map(|k| k as u32)
                .ok_or_else(|| Error::Internal("conjugation is not a Frobenius power".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let centralizing = support.iter().zip(&theta).filter(|(_, &k)| k == 0).map(|(&g, _)| g).collect();
    Ok(GdrFingerprint { center_support: d.center_support(), identity_dim: n, centralizing, theta, support })
}
