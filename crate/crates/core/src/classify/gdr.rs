//! Graded-division algebras D(F, T, H, C, O, chi).

use super::{construct_simple_galois, GaloisParams, SimpleGalois, MAX_GROUP};
use crate::abgroup::{
    bichar_orbit_reps, characters, enumerate_subgroups, generating_cosets, is_hyperbolic, quotient, torsion, AbGroup,
    Bicharacter, Character, Coset, Quotient, Subgroup,
};
use crate::algebra::{corner, loop_twisted, smash_group, split_primitive_idempotent_seeded, GradedAlgebra};
use crate::cochain::{gamma_from_character, Cocycle2};
use crate::error::{Error, Result};
use crate::gf::{Elt, Field, Tower};

/// Largest dimension the constructor accepts.
pub const MAX_GDR_DIM: usize = 256;

/// H <= K <= T in G, C a coset of K generating T/K, beta_bar an Aut(F)-orbit
/// representative on K/H (a subgroup of the abstract T/H), and chi a
/// character of K_[|F^x|].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GdrParams {
    pub field: Field,
    pub group: AbGroup,
    pub t: Subgroup,
    pub h: Subgroup,
    pub coset: Coset,
    pub beta_bar: Bicharacter,
    pub chi: Character,
}

impl GdrParams {
    pub fn kernel(&self) -> &Subgroup {
        &self.coset.sub
    }

    /// [T:K]
    pub fn n(&self) -> usize {
        self.t.order() / self.kernel().order()
    }

    /// |T| [T:K]
    pub fn dim(&self) -> usize {
        self.t.order() * self.n()
    }

    pub fn quotient(&self) -> Result<Quotient> {
        quotient(&self.t, &self.h)
    }

    /// The Galois data on T/H used for the central simple part.
    pub fn galois_params(&self) -> Result<GaloisParams> {
        let q = self.quotient()?;
        let kbar = q.image(self.kernel());
        let cbar = Coset::new(&kbar, q.project(self.coset.rep));
        let s = vec![0; kbar.basis().len()];
        Ok(GaloisParams { field: self.field.clone(), group: q.group.clone(), kernel: kbar, coset: cbar, beta: self.beta_bar.clone(), s })
    }

    pub fn validate(&self) -> Result<()> {
        let g = &self.group;
        let k = self.kernel();
        if self.t.parent() != g || self.h.parent() != g || k.parent() != g {
            return Err(Error::Invalid("subgroups must live in G".into()));
        }
        if !self.h.is_subgroup_of(k) || !k.is_subgroup_of(&self.t) {
            return Err(Error::Constraint("need H <= K <= T".into()));
        }
        if !generating_cosets(&self.t, k).contains(&self.coset) {
            return Err(Error::Constraint("coset does not generate T/K".into()));
        }
        let n = self.field.units() as u64;
        if self.chi.group != torsion(k, n) || self.chi.field != self.field {
            return Err(Error::Invalid("chi must be a character of K_[|F^x|] into F^x".into()));
        }
        if self.dim() > MAX_GDR_DIM {
            return Err(Error::SizeCap(format!("dimension {} exceeds {}", self.dim(), MAX_GDR_DIM)));
        }
        self.galois_params()?.validate()
    }
}

/// A constructed representative with its intermediate pieces.
#[derive(Clone, Debug)]
pub struct Gdr {
    pub params: GdrParams,
    pub graded: GradedAlgebra,
    pub cbar: SimpleGalois,
    /// E (Cbar^op # F Tbar) E, graded by T/H
    pub dbar: GradedAlgebra,
    /// the primitive idempotent of Cbar^op used for the corner
    pub idempotent: Vec<Elt>,
}

/// An extension of chi to all of T, valued in the smallest extension of F
/// holding |F^x|-th roots of every value.
fn extend_chi(chi: &Character, t: &Subgroup) -> Result<(Tower, Character)> {
    let f = &chi.field;
    let q = f.q() as u64;
    let mut e = t.exponent() as u64;
    // characters of p-groups into a field of characteristic p are trivial
    while e.is_multiple_of(f.p() as u64) {
        e /= f.p() as u64;
    }
    // room for |F^x|-th roots of the values
    e *= f.units() as u64;
    let mut r = 1u32;
    let mut qr = q;
    while !(qr - 1).is_multiple_of(e) {
        r += 1;
        qr = qr.checked_mul(q).ok_or_else(|| Error::SizeCap("root field for chi".into()))?;
    }
    let tower = Tower::new(f, r)?;
    let m = tower.top();
    for cand in characters(t, m) {
        if chi.group.elems().iter().all(|&k| cand.eval(k) == tower.embed(chi.eval(k))) {
            return Ok((tower, cand));
        }
    }
    Err(Error::Internal("character does not extend".into()))
}

/// D(F, T, H, C, O, chi): Cbar = C(0, ..., 0) on T/H, the corner of
/// Cbar^op # F(T/H) by a primitive idempotent of Cbar^op (chosen with
/// `seed`), then the twisted loop along T -> T/H with gamma from chi.
pub fn construct_gdr(p: &GdrParams, seed: u64) -> Result<Gdr> {
    p.validate()?;
    let q = p.quotient()?;
    let cbar = construct_simple_galois(&p.galois_params()?)?;
    let cop = cbar.galg.opposite();
    let e = split_primitive_idempotent_seeded(&cop.alg, seed)?;
    let smash = smash_group(&cop)?;
    let mut e_smash = vec![Elt::ZERO; smash.dim()];
    e_smash[..e.len()].copy_from_slice(&e);
    let dbar = corner(&e_smash, &smash)?;
    let (root, chi_ext) = extend_chi(&p.chi, &p.t)?;
    let gamma: Cocycle2 = gamma_from_character(&root, &chi_ext)?;
    let graded = loop_twisted(&q, &gamma, &dbar)?;
    if graded.dim() != p.dim() {
        return Err(Error::Internal(format!("built dimension {} but expected {}", graded.dim(), p.dim())));
    }
    Ok(Gdr { params: p.clone(), graded, cbar, dbar, idempotent: e })
}

/// All quintuples (T, H, C, O, chi) with |T| [T:K] <= dim_cap, in a fixed order:
/// T, then H, then K by subgroup enumeration order, then cosets, orbit
/// representatives and characters.
pub fn enumerate_gdr(f: &Field, g: &AbGroup, dim_cap: usize) -> Result<Vec<GdrParams>> {
    if g.size() > MAX_GROUP / 2 {
        return Err(Error::SizeCap(format!("|G| = {} exceeds {}", g.size(), MAX_GROUP / 2)));
    }
    if dim_cap > MAX_GDR_DIM {
        return Err(Error::SizeCap(format!("dimension cap {} exceeds {}", dim_cap, MAX_GDR_DIM)));
    }
    let subs = enumerate_subgroups(g)?;
    let nf = f.units() as u64;
    let mut out = Vec::new();
    for t in &subs {
        for h in subs.iter().filter(|h| h.is_subgroup_of(t)) {
            let q = quotient(t, h)?;
            for k in subs.iter().filter(|k| h.is_subgroup_of(k) && k.is_subgroup_of(t)) {
                let kbar = q.image(k);
                if !is_hyperbolic(&kbar) || !nf.is_multiple_of(kbar.exponent() as u64) {
                    continue;
                }
                let n = t.order() / k.order();
                if t.order() * n > dim_cap {
                    continue;
                }
                let cs = generating_cosets(t, k);
                if cs.is_empty() {
                    continue;
                }
                let reps = bichar_orbit_reps(&kbar, f)?;
                let chis = characters(&torsion(k, nf), f);
                for c in &cs {
                    for b in &reps {
                        for chi in &chis {
                            out.push(GdrParams {
                                field: f.clone(),
                                group: g.clone(),
                                t: t.clone(),
                                h: h.clone(),
                                coset: c.clone(),
                                beta_bar: b.clone(),
                                chi: chi.clone(),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// One graded-ring isomorphism class: members differ only in chi, along
/// an orbit of Gal(F/F0).
#[derive(Clone, Debug)]
pub struct GdrClass {
    pub rep: GdrParams,
    pub members: Vec<GdrParams>,
    /// [F0 : prime field]
    pub f0_degree: u32,
}

/// Least e0 with exp | p^{e0} - 1: F0 = GF(p^{e0}) is generated by the
/// values of any nondegenerate bicharacter on a group of that exponent.
pub fn f0_degree(f: &Field, exponent: u32) -> u32 {
    let p = f.p() as u64;
    let mut e0 = 1u32;
    let mut pe = p;
    while !(pe - 1).is_multiple_of(exponent as u64) {
        e0 += 1;
        pe *= p;
    }
    e0
}

/// Quintuples merged along chi -> psi o chi, psi in Gal(F/F0).
pub fn gdr_iso_classes(f: &Field, g: &AbGroup, dim_cap: usize) -> Result<Vec<GdrClass>> {
    let all = enumerate_gdr(f, g, dim_cap)?;
    let mut classes: Vec<GdrClass> = Vec::new();
    let m = f.m();
    for p in all {
        let e0 = f0_degree(f, p.beta_bar.group.exponent());
        let orbit: Vec<Character> = (0..m / e0).map(|i| p.chi.frobenius((i * e0) as u64)).collect();
        let hit = classes.iter_mut().find(|c| {
            let r = &c.rep;
            r.t == p.t && r.h == p.h && r.coset == p.coset && r.beta_bar == p.beta_bar && orbit.contains(&r.chi)
        });
        match hit {
            Some(c) => c.members.push(p),
            None => classes.push(GdrClass { rep: p.clone(), members: vec![p], f0_degree: e0 }),
        }
    }
    Ok(classes)
}
