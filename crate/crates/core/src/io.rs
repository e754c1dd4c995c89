//! JSON documents for algebras, parameters and invariants. Field elements
//! are integer codes: the coefficient vector in the field's power basis read
//! as base-p digits, constant term least significant.

use crate::abgroup::{AbGroup, Subgroup};
use crate::algebra::{Algebra, GAlgebra, GradedAlgebra};
use crate::classify::{GaloisParams, GdrParams};
use crate::error::{Error, Result};
use crate::galois::PsiInvariant;
use crate::gf::{Elt, Field, FieldJson};
use crate::linalg::Matrix;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraJson {
    pub field: FieldJson,
    pub dim: usize,
    pub unit: Vec<u32>,
    /// (i, j, k, c): b_i b_j has coefficient c on b_k
    pub structure_constants: Vec<[u32; 4]>,
}

/// An algebra with optional G-action (one matrix per standard generator,
/// row-major) and optional grading (one group element per basis vector).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraDoc {
    pub algebra: AlgebraJson,
    pub group: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<Vec<u32>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<Vec<u32>>>,
}

pub fn algebra_json(a: &Algebra) -> AlgebraJson {
    let f = a.field();
    AlgebraJson {
        field: f.into(),
        dim: a.dim(),
        unit: a.unit().iter().map(|&c| f.code(c)).collect(),
        structure_constants: a
            .sc_entries()
            .into_iter()
            .map(|(i, j, k, c)| [i as u32, j as u32, k as u32, f.code(c)])
            .collect(),
    }
}

fn decode(f: &Field, code: u32) -> Result<Elt> {
    if code >= f.q() {
        return Err(Error::Parse(format!("element code {} out of range for {}", code, f.name())));
    }
    Ok(f.from_code(code))
}

pub fn algebra_from_json(j: &AlgebraJson) -> Result<Algebra> {
    let f = j.field.to_field()?;
    let d = j.dim;
    if j.unit.len() != d {
        return Err(Error::Parse("unit has the wrong length".into()));
    }
    let mut sc: Vec<Vec<(u32, Elt)>> = vec![Vec::new(); d * d];
    for &[i, k, l, c] in &j.structure_constants {
        let (i, k, l) = (i as usize, k as usize, l as usize);
        if i >= d || k >= d || l >= d {
            return Err(Error::Parse("structure constant index out of range".into()));
        }
        let v = decode(&f, c)?;
        if !v.is_zero() {
            sc[i * d + k].push((l as u32, v));
        }
    }
    for e in &mut sc {
        e.sort_by_key(|&(k, _)| k);
        if e.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::Parse("repeated structure constant".into()));
        }
    }
    let unit = j.unit.iter().map(|&c| decode(&f, c)).collect::<Result<Vec<_>>>()?;
    Algebra::new(&f, d, sc, unit)
}

fn matrix_json(f: &Field, m: &Matrix) -> Vec<Vec<u32>> {
    (0..m.rows).map(|i| m.row(i).iter().map(|&c| f.code(c)).collect()).collect()
}

fn matrix_from_json(f: &Field, rows: &[Vec<u32>], d: usize) -> Result<Matrix> {
    if rows.len() != d || rows.iter().any(|r| r.len() != d) {
        return Err(Error::Parse("action matrix has the wrong shape".into()));
    }
    let data = rows.iter().flatten().map(|&c| decode(f, c)).collect::<Result<Vec<_>>>()?;
    Ok(Matrix { rows: d, cols: d, data })
}

pub fn galgebra_doc(c: &GAlgebra) -> AlgebraDoc {
    let f = c.alg.field();
    AlgebraDoc {
        algebra: algebra_json(&c.alg),
        group: c.group.orders().to_vec(),
        action: Some(c.group.gens().into_iter().map(|g| matrix_json(f, &c.mats[g])).collect()),
        degrees: None,
    }
}

pub fn graded_doc(a: &GradedAlgebra) -> AlgebraDoc {
    AlgebraDoc {
        algebra: algebra_json(&a.alg),
        group: a.group.orders().to_vec(),
        action: None,
        degrees: Some(a.deg.iter().map(|&x| a.group.coords(x)).collect()),
    }
}

impl AlgebraDoc {
    pub fn group(&self) -> Result<AbGroup> {
        AbGroup::new(&self.group)
    }

    pub fn algebra(&self) -> Result<Algebra> {
        algebra_from_json(&self.algebra)
    }

    pub fn galgebra(&self) -> Result<Option<GAlgebra>> {
        let Some(act) = &self.action else { return Ok(None) };
        let alg = self.algebra()?;
        let f = alg.field().clone();
        let gens = act.iter().map(|m| matrix_from_json(&f, m, alg.dim())).collect::<Result<Vec<_>>>()?;
        GAlgebra::from_gens(alg, &self.group()?, &gens).map(Some)
    }

    pub fn graded(&self) -> Result<Option<GradedAlgebra>> {
        let Some(deg) = &self.degrees else { return Ok(None) };
        let g = self.group()?;
        let deg = deg
            .iter()
            .map(|c| {
                if c.len() != g.rank() {
                    return Err(Error::Parse("degree has the wrong length".into()));
                }
                Ok(g.index_u(c))
            })
            .collect::<Result<Vec<_>>>()?;
        GradedAlgebra::new(self.algebra()?, &g, deg).map(Some)
    }
}

fn tuples(g: &AbGroup, xs: &[usize]) -> Vec<Vec<u32>> {
    xs.iter().map(|&x| g.coords(x)).collect()
}

fn sub_json(s: &Subgroup) -> SubgroupJson {
    let g = s.parent();
    SubgroupJson { order: s.order(), basis: tuples(g, s.basis()), basis_orders: s.basis_orders().to_vec(), elements: tuples(g, s.elems()) }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SubgroupJson {
    pub order: usize,
    pub basis: Vec<Vec<u32>>,
    pub basis_orders: Vec<u32>,
    pub elements: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GaloisParamsJson {
    #[serde(rename = "K")]
    pub kernel: SubgroupJson,
    pub coset_rep: Vec<u32>,
    /// beta(a_i, a_j) for i < j on the basis of K, as dlogs of w_F
    pub beta_upper_dlogs: Vec<u32>,
    pub s: Vec<u32>,
}

pub fn galois_params_json(p: &GaloisParams) -> GaloisParamsJson {
    GaloisParamsJson {
        kernel: sub_json(&p.kernel),
        coset_rep: p.group.coords(p.coset.rep),
        beta_upper_dlogs: p.beta.upper(),
        s: p.s.clone(),
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GdrParamsJson {
    #[serde(rename = "T")]
    pub t: SubgroupJson,
    #[serde(rename = "H")]
    pub h: SubgroupJson,
    #[serde(rename = "K")]
    pub kernel: SubgroupJson,
    pub coset_rep: Vec<u32>,
    /// T/H as an abstract group and the basis of K/H inside it
    pub quotient_group: Vec<u32>,
    pub kbar_basis: Vec<Vec<u32>>,
    pub beta_bar_upper_dlogs: Vec<u32>,
    /// chi on the basis of K_[|F^x|], as dlogs of w_F
    pub chi_domain_basis: Vec<Vec<u32>>,
    pub chi_dlogs: Vec<u32>,
}

pub fn gdr_params_json(p: &GdrParams) -> GdrParamsJson {
    let g = &p.group;
    let kbar = &p.beta_bar.group;
    GdrParamsJson {
        t: sub_json(&p.t),
        h: sub_json(&p.h),
        kernel: sub_json(p.kernel()),
        coset_rep: g.coords(p.coset.rep),
        quotient_group: kbar.parent().orders().to_vec(),
        kbar_basis: tuples(kbar.parent(), kbar.basis()),
        beta_bar_upper_dlogs: p.beta_bar.upper(),
        chi_domain_basis: tuples(g, p.chi.group.basis()),
        chi_dlogs: p.chi.dlogs.clone(),
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PsiJson {
    pub n: u32,
    pub theta_gen_images: Vec<u32>,
    #[serde(rename = "K")]
    pub kernel: Vec<Vec<u32>>,
    pub beta_matrix_dlogs: Vec<Vec<u32>>,
    pub s: Vec<u32>,
}

pub fn psi_json(g: &AbGroup, psi: &PsiInvariant) -> PsiJson {
    PsiJson {
        n: psi.n,
        theta_gen_images: psi.theta.clone(),
        kernel: tuples(g, &psi.kernel),
        beta_matrix_dlogs: psi.beta.clone(),
        s: psi.s.clone(),
    }
}
