//! Classification over finite fields: simple G-Galois extensions and
//! G-graded-division algebras, with explicit representatives.

mod gdr;
mod oracle;
mod twist;

pub use gdr::{construct_gdr, enumerate_gdr, f0_degree, gdr_iso_classes, Gdr, GdrClass, GdrParams, MAX_GDR_DIM};
pub use oracle::{gdr_fingerprint, graded_iso_oracle, graded_ring_iso_oracle, GdrFingerprint};
pub use twist::{frobenius_twist_check, merge_check, MergeReport, TwistReport};

use crate::abgroup::{
    all_alternating, enumerate_subgroups, generating_cosets, is_hyperbolic, AbGroup, Bicharacter, Character, Coset,
    Subgroup,
};
use crate::abgroup::bichar::cartesian;
use crate::algebra::{quotient_ring, twisted_group_algebra, GAlgebra, GradedAlgebra};
use crate::cochain::{extend_character, ActionSpec, Cocycle2};
use crate::error::{Error, Result};
use crate::gf::{Elt, Field, Poly, Tower};
use crate::linalg::Matrix;

/// Largest group accepted by the enumerators.
pub const MAX_GROUP: usize = 64;

/// (K, C, beta, s) for a simple G-Galois extension of F.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisParams {
    pub field: Field,
    pub group: AbGroup,
    pub kernel: Subgroup,
    pub coset: Coset,
    pub beta: Bicharacter,
    pub s: Vec<u32>,
}

impl GaloisParams {
    /// [G:K], the degree of the center over F.
    pub fn n(&self) -> u32 {
        (self.group.size() / self.kernel.order()) as u32
    }

    pub fn dim(&self) -> usize {
        self.group.size()
    }

    pub fn validate(&self) -> Result<()> {
        let k = &self.kernel;
        if k.parent() != &self.group || self.coset.sub != *k || self.beta.group != *k || self.beta.field != self.field {
            return Err(Error::Invalid("kernel, coset and bicharacter must share the subgroup".into()));
        }
        if !is_hyperbolic(k) {
            return Err(Error::Constraint("K is not of the form A x A".into()));
        }
        if !self.field.units().is_multiple_of(k.exponent()) {
            return Err(Error::Constraint(format!("exp(K) = {} does not divide |F^x| = {}", k.exponent(), self.field.units())));
        }
        if !self.beta.is_nondegenerate()? {
            return Err(Error::Constraint("bicharacter is degenerate".into()));
        }
        if !generating_cosets(&Subgroup::whole(&self.group), k).contains(&self.coset) {
            return Err(Error::Constraint("coset does not generate G/K".into()));
        }
        let ords = k.basis_orders();
        if self.s.len() != ords.len() || self.s.iter().zip(ords).any(|(&s, &o)| s >= o) {
            return Err(Error::Constraint(format!("s must have {} entries with 0 <= s_i < o(a_i)", ords.len())));
        }
        Ok(())
    }
}

/// j with beta(n t0, k) = w_F^j and 0 <= j < |F^x|, where t0 is the coset's
/// canonical representative and n = [G:K].
pub fn jcb(coset: &Coset, beta: &Bicharacter, k: usize) -> u32 {
    let g = coset.sub.parent();
    let n = g.size() / coset.sub.order();
    beta.dlog_at(g.mul(n as i64, coset.rep), k)
}

/// The constructed extension C(s) together with its K-grading.
#[derive(Clone, Debug)]
pub struct SimpleGalois {
    pub params: GaloisParams,
    pub galg: GAlgebra,
    /// graded by G with support K; basis w_L^j X_k at index pos(k) * n + j
    pub graded: GradedAlgebra,
    /// None when L was realized as F[x]/(f) because it is too large for tables
    pub tower: Option<Tower>,
}

pub fn construct_simple_galois(p: &GaloisParams) -> Result<SimpleGalois> {
    p.validate()?;
    let n = p.n();
    match Tower::new(&p.field, n) {
        Ok(tower) => construct_with_tower(p, tower),
        Err(Error::SizeCap(_)) if p.kernel.order() == 1 => construct_big_field(p),
        Err(e) => Err(e),
    }
}

fn construct_with_tower(p: &GaloisParams, tower: Tower) -> Result<SimpleGalois> {
    let f = &p.field;
    let g = &p.group;
    let k = &p.kernel;
    let l = tower.top().clone();
    let n = tower.degree() as usize;
    let spec = ActionSpec::new(&tower, g, k, &p.coset)?;
    let basis = k.basis().to_vec();
    let ords = k.basis_orders().to_vec();
    let m = basis.len();
    let ul = l.units() as u64;
    let uf = f.units() as u64;
    let index = tower.index();

    let mu_dlogs: Vec<u64> = (0..m)
        .map(|i| {
            let j = jcb(&p.coset, &p.beta, basis[i]) as u64;
            (ords[i] as u64 * j / uf + index * p.s[i] as u64) % ul
        })
        .collect();
    let beta_dl = |i: usize, j: usize| p.beta.dlog_at(basis[i], basis[j]) as u64;
    // X^c X^d = prod_{i>j} beta(a_i, a_j)^{c_i d_j} prod_{c_i + d_i >= o_i} mu_i X^{c+d}
    let tau = Cocycle2::from_fn(k, &l, |x, y| {
        let cx = k.basis_coords(x);
        let cy = k.basis_coords(y);
        let mut d = 0u64;
        for i in 0..m {
            for j in 0..i {
                d += cx[i] as u64 * cy[j] as u64 * beta_dl(i, j) * index;
            }
            if cx[i] + cy[i] >= ords[i] {
                d += mu_dlogs[i];
            }
        }
        Elt::from_dlog((d % ul) as u32)
    });
    let graded = twisted_group_algebra(&tower, &tau)?;

    let cocycles = (0..m)
        .map(|i| {
            let lam = Character::new(k, f, (0..m).map(|j| p.beta.dlog_at(basis[j], basis[i])).collect())?;
            extend_character(&spec, &lam, None)
        })
        .collect::<Result<Vec<_>>>()?;
    let dim = n * k.order();
    let mats = g
        .elements()
        .map(|x| {
            let mut mat = Matrix::zeros(dim, dim);
            for (pos, &kk) in k.elems().iter().enumerate() {
                let c = k.basis_coords(kk);
                let mut factor = Elt::ONE;
                for i in 0..m {
                    factor = l.mul(factor, l.pow_u(cocycles[i].at(x), c[i] as u64));
                }
                for j in 0..n {
                    let v = l.mul(spec.sigma(x, Elt::from_dlog(j as u32 % l.units())), factor);
                    for (r, &cr) in tower.coords(v).iter().enumerate() {
                        mat.set(pos * n + r, pos * n + j, cr);
                    }
                }
            }
            mat
        })
        .collect();
    let galg = GAlgebra::new(graded.alg.clone(), g, mats)?;
    Ok(SimpleGalois { params: p.clone(), galg, graded, tower: Some(tower) })
}

/// The least monic irreducible polynomial of degree n, coefficients ordered
/// by their integer codes with the constant term least significant.
pub fn least_irreducible(f: &Field, n: u32) -> Result<Poly> {
    let q = f.q() as u64;
    let total = q.checked_pow(n).ok_or_else(|| Error::SizeCap("search space for irreducibles".into()))?;
    for code in 0..total {
        let mut c = code;
        let mut coeffs: Vec<Elt> = (0..n)
            .map(|_| {
                let r = (c % q) as u32;
                c /= q;
                f.from_code(r)
            })
            .collect();
        if coeffs[0].is_zero() && n > 1 {
            continue;
        }
        coeffs.push(Elt::ONE);
        let poly = Poly::new(f, coeffs);
        if poly.is_irreducible() {
            return Ok(poly);
        }
    }
    Err(Error::Internal(format!("no irreducible polynomial of degree {}", n)))
}

/// K = 1 and L too large for log tables: L = F[x]/(f) with the least
/// irreducible f, and t0 acting as x -> x^{|F|}.
fn construct_big_field(p: &GaloisParams) -> Result<SimpleGalois> {
    let f = &p.field;
    let g = &p.group;
    let n = p.n();
    let alg = quotient_ring(&least_irreducible(f, n)?)?;
    let d = alg.dim();
    let q = f.q() as u64;
    let frob_cols: Vec<Vec<Elt>> = (0..d).map(|j| alg.pow(&alg.basis_vec(j), q)).collect();
    let frob = Matrix::from_cols(&frob_cols, d);
    let t0 = p.coset.rep;
    let mut mats = vec![Matrix::identity(d); g.size()];
    let mut x = 0usize;
    let mut m = Matrix::identity(d);
    for _ in 0..n {
        mats[x] = m.clone();
        x = g.add(x, t0);
        m = frob.mul(f, &m);
    }
    let galg = GAlgebra::new(alg.clone(), g, mats)?;
    let graded = GradedAlgebra::trivial(&alg, g);
    Ok(SimpleGalois { params: p.clone(), galg, graded, tower: None })
}

/// Every (K, C, beta, s), one per isomorphism class: K hyperbolic with
/// exp(K) | |F^x| and G/K cyclic, C a generating coset, beta any
/// nondegenerate alternating bicharacter, s in prod Z/o(a_i).
pub fn enumerate_simple_galois(f: &Field, g: &AbGroup) -> Result<Vec<GaloisParams>> {
    if g.size() > MAX_GROUP {
        return Err(Error::SizeCap(format!("|G| = {} exceeds {}", g.size(), MAX_GROUP)));
    }
    let whole = Subgroup::whole(g);
    let mut out = Vec::new();
    for k in enumerate_subgroups(g)? {
        if !is_hyperbolic(&k) || !f.units().is_multiple_of(k.exponent()) {
            continue;
        }
        let cs = generating_cosets(&whole, &k);
        if cs.is_empty() {
            continue;
        }
        let mut betas = Vec::new();
        for b in all_alternating(&k, f) {
            if b.is_nondegenerate()? {
                betas.push(b);
            }
        }
        let s_choices: Vec<Vec<u32>> = k.basis_orders().iter().map(|&o| (0..o).collect()).collect();
        let ss = cartesian(&s_choices);
        for c in &cs {
            for b in &betas {
                for s in &ss {
                    out.push(GaloisParams {
                        field: f.clone(),
                        group: g.clone(),
                        kernel: k.clone(),
                        coset: c.clone(),
                        beta: b.clone(),
                        s: s.clone(),
                    });
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
