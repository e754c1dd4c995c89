//! Test corpora: every abelian group up to an order bound, and seeded
//! random G-algebras of several shapes.

use crate::abgroup::{characters, cosets, enumerate_subgroups, AbGroup, Coset, Subgroup};
use crate::algebra::{induce, quotient_ring, Algebra, GAlgebra};
use crate::classify::{construct_simple_galois, enumerate_simple_galois};
use crate::error::{Error, Result};
use crate::gf::{field_create, Elt, Field, Poly};
use crate::linalg::{inverse, Matrix};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// One representative per isomorphism class, in invariant-factor form
/// d_1 | d_2 | ..., ordered by order and then lexicographically.
pub fn abelian_groups(max_order: usize) -> Vec<AbGroup> {
    fn extend(prefix: &mut Vec<u32>, prod: usize, max: usize, out: &mut Vec<Vec<u32>>) {
        out.push(prefix.clone());
        let last = prefix.last().copied().unwrap_or(1) as usize;
        let mut d = if prefix.is_empty() { 2 } else { last };
        while prod * d <= max {
            if d % last == 0 {
                prefix.push(d as u32);
                extend(prefix, prod * d, max, out);
                prefix.pop();
            }
            d += 1;
        }
    }
    let mut all = Vec::new();
    extend(&mut Vec::new(), 1, max_order, &mut all);
    all.sort_by_key(|o| (o.iter().map(|&d| d as usize).product::<usize>(), o.clone()));
    all.iter().map(|o| AbGroup::new(o).unwrap()).collect()
}

/// A random invertible d x d matrix.
pub fn random_invertible(f: &Field, d: usize, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let mut m = Matrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                m.set(i, j, f.from_code(rng.gen_range(0..f.q())));
            }
        }
        if inverse(f, &m).is_some() {
            return m;
        }
    }
}

/// The same G-algebra in the basis given by the columns of `p`.
pub fn change_basis(c: &GAlgebra, p: &Matrix) -> Result<GAlgebra> {
    let f = c.alg.field();
    let pi = inverse(f, p).ok_or_else(|| Error::Invalid("change of basis is singular".into()))?;
    let cols: Vec<Vec<Elt>> = (0..p.cols).map(|j| p.col(j)).collect();
    let alg = c.alg.rebase(&cols, c.alg.unit())?;
    let mats = c.mats.iter().map(|m| pi.mul(f, &m.mul(f, p))).collect();
    GAlgebra::new(alg, &c.group, mats)
}

/// F^X for the G-set X = disjoint union of G/H_i, with G permuting the
/// idempotents.
pub fn gset_algebra(f: &Field, g: &AbGroup, stabilizers: &[Subgroup]) -> Result<GAlgebra> {
    let whole = Subgroup::whole(g);
    let points: Vec<(usize, Coset)> =
        stabilizers.iter().enumerate().flat_map(|(i, h)| cosets(&whole, h).into_iter().map(move |c| (i, c))).collect();
    let n = points.len();
    let mut unit = vec![Elt::ZERO; n];
    unit.iter_mut().for_each(|u| *u = Elt::ONE);
    let alg = Algebra::from_fn(f, n, unit, |i, j| {
        let mut v = vec![Elt::ZERO; n];
        if i == j {
            v[i] = Elt::ONE;
        }
        v
    })?;
    let mats = g
        .elements()
        .map(|x| {
            let mut m = Matrix::zeros(n, n);
            for (col, (i, c)) in points.iter().enumerate() {
                let moved = Coset::new(&stabilizers[*i], g.add(c.rep, x));
                let row = points.iter().position(|(j, d)| j == i && *d == moved).unwrap();
                m.set(row, col, Elt::ONE);
            }
            m
        })
        .collect();
    GAlgebra::new(alg, g, mats)
}

/// F[G] with x acting on the basis element e_h by prod_j chi_j(h)^{x_j},
/// chi_j the character attached to the j-th standard generator.
pub fn dual_action_group_algebra(f: &Field, g: &AbGroup, chis: &[usize]) -> Result<GAlgebra> {
    let n = g.size();
    let mut unit = vec![Elt::ZERO; n];
    unit[0] = Elt::ONE;
    let alg = Algebra::from_fn(f, n, unit, |i, j| {
        let mut v = vec![Elt::ZERO; n];
        v[g.add(i, j)] = Elt::ONE;
        v
    })?;
    let all = characters(&Subgroup::whole(g), f);
    let gens: Vec<Matrix> = chis
        .iter()
        .map(|&c| {
            let mut m = Matrix::zeros(n, n);
            for h in g.elements() {
                m.set(h, h, all[c].eval(h));
            }
            m
        })
        .collect();
    GAlgebra::from_gens(alg, g, &gens)
}

/// Characters whose order divides the order of each standard generator.
fn compatible_characters(f: &Field, g: &AbGroup) -> Vec<Vec<usize>> {
    let all = characters(&Subgroup::whole(g), f);
    g.orders()
        .iter()
        .map(|&o| {
            (0..all.len())
                .filter(|&c| g.elements().all(|h| f.pow_u(all[c].eval(h), o as u64) == Elt::ONE))
                .collect()
        })
        .collect()
}

/// Seeded random G-algebra with |G| <= 8 and dim <= 8. The shape is
/// chosen first: a permutation algebra of a G-set, a simple Galois
/// extension in a random basis (possibly with the action pulled back
/// along a random endomorphism, or padded by a trivial factor), an induced
/// extension, a group algebra with a dual action, or F[x]/(f) with a
/// trivial action.
pub fn random_g_algebra(seed: u64) -> Result<GAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let groups: Vec<AbGroup> = abelian_groups(8).into_iter().filter(|g| g.size() > 1).collect();
    let fields = [(2u64, 1u32), (3, 1), (2, 2), (5, 1)];
    let (p, m) = fields[rng.gen_range(0..fields.len())];
    let f = field_create(p, m)?;
    let g = groups[rng.gen_range(0..groups.len())].clone();
    let shape = rng.gen_range(0..7);
    let c = match shape {
        0 => {
            let subs = enumerate_subgroups(&g)?;
            let mut stab = Vec::new();
            let mut total = 0;
            loop {
                let h = subs.choose(&mut rng).unwrap().clone();
                let size = g.size() / h.order();
                if total + size > 8 {
                    break;
                }
                total += size;
                stab.push(h);
                if rng.gen_bool(0.5) {
                    break;
                }
            }
            if stab.is_empty() {
                stab.push(Subgroup::whole(&g));
            }
            gset_algebra(&f, &g, &stab)?
        }
        1..=3 => {
            let f = field_create([3, 5][rng.gen_range(0..2)], 1)?;
            let ps = enumerate_simple_galois(&f, &g)?;
            if ps.is_empty() {
                return random_g_algebra(seed.wrapping_add(0x9e37_79b9));
            }
            let c = construct_simple_galois(ps.choose(&mut rng).unwrap())?.galg;
            match shape {
                2 => {
                    let imgs: Vec<usize> = g
                        .orders()
                        .iter()
                        .map(|&o| {
                            let ok: Vec<usize> = g.elements().filter(|&x| o % g.order_of(x) == 0).collect();
                            *ok.choose(&mut rng).unwrap()
                        })
                        .collect();
                    let image: Vec<usize> = g
                        .elements()
                        .map(|x| g.coords(x).iter().zip(&imgs).fold(0, |acc, (&k, &y)| g.add(acc, g.mul(k as i64, y))))
                        .collect();
                    c.pullback(&g, &image)
                }
                3 if c.dim() < 8 => pad_trivially(&c)?,
                _ => c,
            }
        }
        4 => {
            let subs: Vec<Subgroup> = enumerate_subgroups(&g)?.into_iter().filter(|t| t.order() < g.size()).collect();
            let t = subs.choose(&mut rng).unwrap().clone();
            let f = field_create([3, 5][rng.gen_range(0..2)], 1)?;
            let ps = enumerate_simple_galois(&f, &t.as_abgroup())?;
            match ps.choose(&mut rng) {
                Some(p) => induce(&t, &construct_simple_galois(p)?.galg)?,
                None => gset_algebra(&f, &g, &[t])?,
            }
        }
        5 => {
            let opts = compatible_characters(&f, &g);
            let chis: Vec<usize> = opts.iter().map(|o| *o.choose(&mut rng).unwrap()).collect();
            dual_action_group_algebra(&f, &g, &chis)?
        }
        _ => {
            let d = rng.gen_range(1..=8usize);
            let mut coeffs: Vec<Elt> = (0..d).map(|_| f.from_code(rng.gen_range(0..f.q()))).collect();
            coeffs.push(Elt::ONE);
            GAlgebra::trivial(&quotient_ring(&Poly::new(&f, coeffs))?, &g)
        }
    };
    let p = random_invertible(c.alg.field(), c.dim(), &mut rng);
    change_basis(&c, &p)
}

/// C x F with the action extended trivially.
fn pad_trivially(c: &GAlgebra) -> Result<GAlgebra> {
    let f = c.alg.field();
    let d = c.dim();
    let mut unit = c.alg.unit().to_vec();
    unit.push(Elt::ONE);
    let alg = Algebra::from_fn(f, d + 1, unit, |i, j| {
        let mut v = vec![Elt::ZERO; d + 1];
        if i < d && j < d {
            v[..d].copy_from_slice(&c.alg.mul(&c.alg.basis_vec(i), &c.alg.basis_vec(j)));
        } else if i == d && j == d {
            v[d] = Elt::ONE;
        }
        v
    })?;
    let mats = c
        .mats
        .iter()
        .map(|m| {
            let mut big = Matrix::zeros(d + 1, d + 1);
            for i in 0..d {
                for j in 0..d {
                    big.set(i, j, m.get(i, j));
                }
            }
            big.set(d, d, Elt::ONE);
            big
        })
        .collect();
    GAlgebra::new(alg, &c.group, mats)
}
