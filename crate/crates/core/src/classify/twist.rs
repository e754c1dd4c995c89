//! Frobenius pullbacks: explicit rescaling isomorphisms on the Galois side
//! and agreement of the chi-orbit merge with graded ring isomorphism.

use super::gdr::{construct_gdr, f0_degree, gdr_iso_classes};
use super::oracle::{graded_iso_oracle, graded_ring_iso_oracle};
use super::{construct_simple_galois, jcb, GaloisParams};
use crate::abgroup::AbGroup;
use crate::error::{Error, Result};
use crate::gf::{Elt, Field};
use crate::linalg::{rank, Matrix};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct TwistReport {
    /// [F0 : prime field]
    pub f0_degree: u32,
    /// X_i -> w_L^{e_i} X_i
    pub rescaling: Vec<u64>,
    pub multiplicative: bool,
    pub bijective: bool,
    pub equivariant: bool,
    pub ok: bool,
}

/// For C = C(0, ..., 0) with beta valued in F0, the map
/// l X^c -> psi(l) prod (w_L^{e_i} X_i)^{c_i}, psi = x^{|F0|} on L and
/// e_i = |F0^x| j(a_i) / |F^x|, is a G-equivariant F-isomorphism from C
/// onto its pullback along psi restricted to F.
pub fn frobenius_twist_check(p: &GaloisParams) -> Result<TwistReport> {
    if p.s.iter().any(|&s| s != 0) {
        return Err(Error::Invalid("the rescaling applies to s = 0".into()));
    }
    let sg = construct_simple_galois(p)?;
    let tower = sg.tower.as_ref().ok_or_else(|| Error::SizeCap("extension field too large for tables".into()))?;
    let f = &p.field;
    let l = tower.top();
    let k = &p.kernel;
    let e0 = f0_degree(f, k.exponent());
    let uf = f.units() as u64;
    let ul = l.units() as u64;
    let uf0 = f.p() as u64;
    let uf0 = uf0.pow(e0) - 1;
    let rescaling = k
        .basis()
        .iter()
        .map(|&a| {
            let num = uf0 * jcb(&p.coset, &p.beta, a) as u64;
            if !num.is_multiple_of(uf) {
                return Err(Error::Constraint("bicharacter values are not in F0".into()));
            }
            Ok(num / uf)
        })
        .collect::<Result<Vec<_>>>()?;

    let n = tower.degree() as usize;
    let dim = sg.galg.dim();
    let m = f.m() as u64;
    let back = (m - e0 as u64 % m) % m;
    let mut theta = Matrix::zeros(dim, dim);
    for (pos, &kk) in k.elems().iter().enumerate() {
        let c = k.basis_coords(kk);
        let shift: u64 = c.iter().zip(&rescaling).map(|(&ci, &ei)| ci as u64 * ei).sum::<u64>() % ul;
        for j in 0..n {
            let v = l.mul(l.frobenius(e0 as u64, Elt::from_dlog(j as u32 % l.units())), Elt::from_dlog(shift as u32));
            for (r, &cr) in tower.coords(v).iter().enumerate() {
                theta.set(pos * n + r, pos * n + j, f.frobenius(back, cr));
            }
        }
    }
    let pulled = sg.galg.pull_scalars(e0 as u64);
    let multiplicative = sg.galg.alg.is_homomorphism(&pulled.alg, &theta);
    let bijective = rank(f, &theta) == dim;
    let equivariant = p.group.gens().into_iter().all(|g| theta.mul(f, &sg.galg.mats[g]) == pulled.mats[g].mul(f, &theta));
    Ok(TwistReport { f0_degree: e0, rescaling, multiplicative, bijective, equivariant, ok: multiplicative && bijective && equivariant })
}

#[derive(Clone, Debug, Serialize)]
pub struct MergeReport {
    pub quintuples: usize,
    pub classes: usize,
    /// pulled along Gal(F/F0), each representative matches the chi-shifted one
    pub pullbacks_match: bool,
    /// pairs with equal (T, H, C, O) compared by the ring oracle
    pub pairs_checked: usize,
    pub disagreements: usize,
    pub ok: bool,
}

/// Checks gdr_iso_classes against the graded ring oracle on every pair of
/// quintuples that share (T, H, C, O), and that the F0-Frobenius pullback
/// of D(chi) is F-isomorphic to D(psi o chi).
pub fn merge_check(f: &Field, g: &AbGroup, dim_cap: usize, seed: u64) -> Result<MergeReport> {
    let classes = gdr_iso_classes(f, g, dim_cap)?;
    let mut all = Vec::new();
    for (ci, c) in classes.iter().enumerate() {
        for p in &c.members {
            all.push((ci, p.clone(), construct_gdr(p, seed)?));
        }
    }
    let mut pullbacks_match = true;
    for (_, p, d) in &all {
        let e0 = f0_degree(f, p.beta_bar.group.exponent()) as u64;
        let shifted = p.chi.frobenius(e0);
        let Some((_, _, other)) = all.iter().find(|(_, q, _)| {
            q.t == p.t && q.h == p.h && q.coset == p.coset && q.beta_bar == p.beta_bar && q.chi == shifted
        }) else {
            pullbacks_match = false;
            continue;
        };
        if !graded_iso_oracle(&d.graded.pull_scalars(e0), &other.graded)? {
            pullbacks_match = false;
        }
    }
    let mut pairs_checked = 0;
    let mut disagreements = 0;
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            let (ci, p, di) = &all[i];
            let (cj, q, dj) = &all[j];
            if p.t != q.t || p.h != q.h || p.coset != q.coset || p.beta_bar != q.beta_bar {
                continue;
            }
            pairs_checked += 1;
            if (ci == cj) != graded_ring_iso_oracle(&di.graded, &dj.graded)? {
                disagreements += 1;
            }
        }
    }
    Ok(MergeReport {
        quintuples: all.len(),
        classes: classes.len(),
        pullbacks_match,
        pairs_checked,
        disagreements,
        ok: pullbacks_match && disagreements == 0,
    })
}
