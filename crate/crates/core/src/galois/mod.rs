//! Galois tests for G-algebras and the structure maps around the two smash
//! products.

mod psi;

pub use psi::{field_isos, galois_iso_oracle, psi_invariant, psi_invariant_with_root, PsiInvariant};

use crate::abgroup::{characters, cosets, quotient, Subgroup};
use crate::algebra::{gamma_of, induce, is_field, smash_group, Algebra, GAlgebra, GradedAlgebra, SubAlgebra};
use crate::error::{Error, Result};
use crate::gf::Elt;
use crate::linalg::{nullspace, rank, solve, Echelon, Matrix};
use crate::par;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Phi: C # FG -> End_F(C), c g -> (x -> c (g . x)). Column g * d + i is the
/// flattened (row-major) matrix of the image of b_i g.
pub fn phi_matrix(c: &GAlgebra) -> Matrix {
    let d = c.dim();
    let f = c.alg.field();
    let n = c.group.size();
    let cols: Vec<Vec<Elt>> = par::map_range(n * d, |gi| {
        let (g, i) = (gi / d, gi % d);
        let op = c.alg.left_matrix(&c.alg.basis_vec(i)).mul(f, &c.mats[g]);
        op.data.clone()
    });
    Matrix::from_cols(&cols, d * d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GaloisFailure {
    FixedSubalgebraTooBig,
    NotFaithful,
    PhiNotBijective,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisCertificate {
    pub dim: usize,
    pub group_order: usize,
    pub faithful: bool,
    pub fixed_dim: usize,
    pub phi_rank: usize,
    pub verdict: bool,
    pub failure: Option<GaloisFailure>,
}

/// C is G-Galois when C^G = F and Phi is bijective.
pub fn is_galois_extension(c: &GAlgebra) -> GaloisCertificate {
    let d = c.dim();
    let n = c.group.size();
    let faithful = c.is_faithful();
    let fixed_dim = c.fixed_space().len();
    let phi_rank = rank(c.alg.field(), &phi_matrix(c));
    let failure = if fixed_dim != 1 {
        Some(GaloisFailure::FixedSubalgebraTooBig)
    } else if !faithful {
        Some(GaloisFailure::NotFaithful)
    } else if phi_rank != d * d || d != n {
        Some(GaloisFailure::PhiNotBijective)
    } else {
        None
    };
    GaloisCertificate { dim: d, group_order: n, faithful, fixed_dim, phi_rank, verdict: failure.is_none(), failure }
}

/// Center of an algebra as a subalgebra.
pub fn center_subalgebra(a: &Algebra) -> Result<SubAlgebra> {
    a.subalgebra(&a.center(), a.unit())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub center_is_field: bool,
    /// kernel of the action on the center
    pub kernel: Vec<usize>,
    pub dim_matches: bool,
    pub center_galois: bool,
    pub exponent_divides: bool,
    pub eigenspaces_invertible: bool,
    pub verdict: bool,
}

/// The four-condition test for a G-algebra: dim C = |G|, Z(C) is
/// G/K-Galois for the kernel K of the action on Z(C), exp K divides |F^x|,
/// and every character eigenspace of K contains a unit.
pub fn galois_criterion(c: &GAlgebra) -> Result<CriterionReport> {
    let f = c.alg.field();
    let g = &c.group;
    let z = center_subalgebra(&c.alg)?;
    let center_is_field = is_field(&z.alg, 0);
    let zg = c.restrict(&z)?;
    let kernel = zg.kernel();
    let k = Subgroup::generated(g, &kernel)?;
    let dim_matches = c.dim() == g.size();

    let q = quotient(&Subgroup::whole(g), &k)?;
    let qmats = q.section.iter().map(|&x| zg.mats[x].clone()).collect();
    let zq = GAlgebra::new(z.alg.clone(), &q.group, qmats)?;
    let center_galois = is_galois_extension(&zq).verdict;

    let exponent_divides = f.units().is_multiple_of(k.exponent());
    let eigenspaces_invertible = exponent_divides
        && characters(&k, f).iter().all(|chi| {
            let mut rows = Vec::new();
            for &a in k.basis() {
                let m = c.mats[a].sub(f, &Matrix::identity(c.dim()).map(|x| f.mul(x, chi.eval(a))));
                for i in 0..c.dim() {
                    rows.push(m.row(i).to_vec());
                }
            }
            let space = if rows.is_empty() {
                (0..c.dim()).map(|i| c.alg.basis_vec(i)).collect()
            } else {
                nullspace(f, &Matrix::from_rows(&rows, c.dim()))
            };
            has_invertible(&c.alg, &space, 0)
        });
    let verdict = dim_matches && center_galois && exponent_divides && eigenspaces_invertible;
    Ok(CriterionReport { center_is_field, kernel, dim_matches, center_galois, exponent_divides, eigenspaces_invertible, verdict })
}

/// Exhaustive up to 2^16 elements, seeded random probes beyond.
pub fn has_invertible(a: &Algebra, space: &[Vec<Elt>], seed: u64) -> bool {
    let f = a.field();
    if space.is_empty() {
        return false;
    }
    if space.iter().any(|v| a.is_invertible(v)) {
        return true;
    }
    let q = f.q() as u64;
    let dim = a.dim();
    let combo = |coeffs: &[Elt]| crate::linalg::combine(f, coeffs, space, dim);
    let total = q.checked_pow(space.len() as u32).filter(|&t| t <= 1 << 16);
    if let Some(t) = total {
        return par::any_range(t as usize, |code| {
            let mut code = code as u64;
            let coeffs: Vec<Elt> = (0..space.len())
                .map(|_| {
                    let r = (code % q) as u32;
                    code /= q;
                    f.from_code(r)
                })
                .collect();
            a.is_invertible(&combo(&coeffs))
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..400).any(|_| {
        let coeffs: Vec<Elt> = (0..space.len()).map(|_| f.from_code(rng.gen_range(0..f.q()))).collect();
        a.is_invertible(&combo(&coeffs))
    })
}

/// The Miyashita-Ulbrich grading: C_h = {x : x y = (h . y) x for all y},
/// for h in the kernel K of the action on the center.
#[derive(Clone, Debug)]
pub struct MuGrading {
    pub graded: GradedAlgebra,
    /// the new basis in the original coordinates
    pub basis: Vec<Vec<Elt>>,
    pub kernel: Subgroup,
}

/// Basis of the MU component of h.
pub fn mu_component(c: &GAlgebra, h: usize) -> Vec<Vec<Elt>> {
    let f = c.alg.field();
    let d = c.dim();
    let mut rows = Vec::new();
    for j in 0..d {
        let bj = c.alg.basis_vec(j);
        let m = c.alg.right_matrix(&bj).sub(f, &c.alg.left_matrix(&c.act(h, &bj)));
        for i in 0..d {
            rows.push(m.row(i).to_vec());
        }
    }
    let ns = nullspace(f, &Matrix::from_rows(&rows, d));
    Echelon::span(f, &ns, d).rows
}

pub fn mu_grading(c: &GAlgebra) -> Result<MuGrading> {
    let z = center_subalgebra(&c.alg)?;
    let kernel = Subgroup::generated(&c.group, &c.restrict(&z)?.kernel())?;
    let mut basis = Vec::new();
    let mut deg = Vec::new();
    for &h in kernel.elems() {
        for v in mu_component(c, h) {
            basis.push(v);
            deg.push(h);
        }
    }
    if basis.len() != c.dim() {
        return Err(Error::Constraint(format!("MU components span {} of {} dimensions", basis.len(), c.dim())));
    }
    let alg = c.alg.rebase(&basis, c.alg.unit())?;
    let graded = GradedAlgebra::new(alg, &c.group, deg)?;
    Ok(MuGrading { graded, basis, kernel })
}

/// Outcome of checking one of the structure maps into Gamma(A).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub source_dim: usize,
    pub target_dim: usize,
    pub into_target: bool,
    pub bijective: bool,
    /// homomorphism or anti-homomorphism, whichever the map should be
    pub multiplicative: bool,
    pub equivariant: bool,
    pub ok: bool,
}

/// An invertible element in each support component, in support order.
fn homogeneous_units(a: &GradedAlgebra, support: &[usize]) -> Result<Vec<Vec<Elt>>> {
    support
        .iter()
        .map(|&g| {
            a.component(g)
                .into_iter()
                .map(|i| a.alg.basis_vec(i))
                .find(|v| a.alg.is_invertible(v))
                .ok_or_else(|| Error::Constraint(format!("no invertible element of degree {}", a.group.fmt_elem(g))))
        })
        .collect()
}

/// Cent_A(A_e) with T acting by conjugation with homogeneous units.
fn conj_centralizer(a: &GradedAlgebra, t: &Subgroup) -> Result<(SubAlgebra, GAlgebra, Vec<Vec<Elt>>)> {
    let alg = &a.alg;
    let e: Vec<Vec<Elt>> = a.component(0).into_iter().map(|i| alg.basis_vec(i)).collect();
    let cent = alg.subalgebra(&alg.centralizer(&e), alg.unit())?;
    let units = homogeneous_units(a, t.elems())?;
    let abs = t.as_abgroup();
    let mats = abs
        .elements()
        .map(|i| {
            let s = t.abstract_to_parent(&abs, i);
            let u = &units[t.pos(s).unwrap()];
            let ui = alg.inverse(u).unwrap();
            let cols: Vec<Vec<Elt>> = cent
                .basis()
                .iter()
                .map(|b| cent.coords(&alg.mul(&alg.mul(u, b), &ui)).ok_or_else(|| Error::Internal("conjugation leaves the centralizer".into())))
                .collect::<Result<_>>()?;
            Ok(Matrix::from_cols(&cols, cent.alg.dim()))
        })
        .collect::<Result<Vec<_>>>()?;
    let cg = GAlgebra::new(cent.alg.clone(), &abs, mats)?;
    Ok((cent, cg, units))
}

/// Check a linear map `m` (columns = images of the source basis, in the
/// dual smash coordinates) against Gamma(A).
fn check_into_gamma(
    src: &GAlgebra,
    a: &GradedAlgebra,
    m: &Matrix,
    anti: bool,
    src_group_to_parent: &dyn Fn(usize) -> usize,
) -> Result<StructureReport> {
    let gam = gamma_of(a)?;
    let f = a.alg.field();
    let cols: Vec<Vec<Elt>> = (0..m.cols).map(|j| m.col(j)).collect();
    let into_target = cols.iter().all(|v| gam.sub.coords(v).is_some());
    let r = rank(f, m);
    let bijective = into_target && r == src.dim() && r == gam.sub.alg.dim();
    let big = &gam.dual.galg.alg;
    let multiplicative = if anti { src.alg.is_antihomomorphism(big, m) } else { src.alg.is_homomorphism(big, m) };
    let equivariant = src.group.gens().into_iter().all(|g| {
        let pg = src_group_to_parent(g);
        m.mul(f, &src.mats[g]) == gam.dual.galg.mats[pg].mul(f, m)
    });
    Ok(StructureReport {
        source_dim: src.dim(),
        target_dim: gam.sub.alg.dim(),
        into_target,
        bijective,
        multiplicative,
        equivariant,
        ok: into_target && bijective && multiplicative && equivariant,
    })
}

/// For a graded algebra with a unit in every degree: C = Cent_A(A_e) with
/// g . c = u_g c u_g^{-1}, and psi(c) = sum_g (g . c) eps_g is a G-equivariant
/// anti-isomorphism C -> Gamma(A).
pub fn crossed_check(a: &GradedAlgebra) -> Result<StructureReport> {
    let g = &a.group;
    let t = Subgroup::whole(g);
    if a.support().len() != g.size() {
        return Err(Error::Constraint("support is not the whole group".into()));
    }
    let (cent, cg, _) = conj_centralizer(a, &t)?;
    let d = a.dim();
    let n = g.size();
    let cols: Vec<Vec<Elt>> = cent
        .basis()
        .iter()
        .enumerate()
        .map(|(j, _)| {
            let mut v = vec![Elt::ZERO; d * n];
            for x in g.elements() {
                let gx = cent.embed(&cg.mats[x].col(j));
                v[x * d..(x + 1) * d].copy_from_slice(&gx);
            }
            v
        })
        .collect();
    let m = Matrix::from_cols(&cols, d * n);
    check_into_gamma(&cg, a, &m, true, &|x| x)
}

/// For a graded-division algebra with support T: Ind_T^G Cent_D(D_e) is
/// anti-isomorphic to Gamma(D) as a G-algebra through f -> sum_g f(g) eps_g.
pub fn induced_centralizer_check(dalg: &GradedAlgebra) -> Result<StructureReport> {
    let g = &dalg.group;
    let t = dalg.support_subgroup()?;
    let (cent, cg, _) = conj_centralizer(dalg, &t)?;
    let ind = induce(&t, &cg)?;
    let abs = t.as_abgroup();
    let reps: Vec<usize> = cosets(&Subgroup::whole(g), &t).iter().map(|c| c.rep).collect();
    let d = dalg.dim();
    let n = g.size();
    let dc = cent.alg.dim();
    let mut cols = Vec::with_capacity(ind.dim());
    for &gi in &reps {
        for j in 0..dc {
            let mut v = vec![Elt::ZERO; d * n];
            for s in abs.elements() {
                let sp = t.abstract_to_parent(&abs, s);
                let h = g.add(sp, gi);
                let val = cent.embed(&cg.mats[s].col(j));
                v[h * d..(h + 1) * d].copy_from_slice(&val);
            }
            cols.push(v);
        }
    }
    let m = Matrix::from_cols(&cols, d * n);
    check_into_gamma(&ind, dalg, &m, true, &|x| x)
}

/// For a G-Galois algebra C with A = C # FG: c -> psi(Phi^{-1}(R_c)) is an
/// isomorphism of G-algebras C -> Gamma(A), where R_c is right
/// multiplication and psi is the crossed-product map of A.
pub fn double_smash_check(c: &GAlgebra) -> Result<StructureReport> {
    let a = smash_group(c)?;
    let f = c.alg.field();
    let d = c.dim();
    let g = &c.group;
    let n = g.size();
    let phi = phi_matrix(c);
    let da = a.dim();
    let units: Vec<Vec<Elt>> = g
        .elements()
        .map(|x| {
            let mut u = vec![Elt::ZERO; da];
            u[x * d..(x + 1) * d].copy_from_slice(c.alg.unit());
            u
        })
        .collect();
    let mut cols = Vec::with_capacity(d);
    for i in 0..d {
        let rc = c.alg.right_matrix(&c.alg.basis_vec(i));
        let pre = solve(f, &phi, &rc.data).ok_or_else(|| Error::Constraint("Phi is not onto; the algebra is not Galois".into()))?;
        let mut v = vec![Elt::ZERO; da * n];
        for x in g.elements() {
            let ui = a.alg.inverse(&units[x]).unwrap();
            let conj = a.alg.mul(&a.alg.mul(&units[x], &pre), &ui);
            v[x * da..(x + 1) * da].copy_from_slice(&conj);
        }
        cols.push(v);
    }
    let m = Matrix::from_cols(&cols, da * n);
    check_into_gamma(c, &a, &m, false, &|x| x)
}

#[cfg(test)]
mod tests;
