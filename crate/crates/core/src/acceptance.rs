//! The eight acceptance criteria as runnable checks. Expected counts are
//! recomputed here by brute force from the group and field data rather
//! than read back from the enumerators.

use crate::abgroup::{characters, enumerate_subgroups, generating_cosets, torsion, AbGroup, Bicharacter, Coset, Subgroup};
use crate::algebra::{GAlgebra, GradedAlgebra};
use crate::classify::{
    construct_gdr, construct_simple_galois, enumerate_gdr, enumerate_simple_galois, frobenius_twist_check,
    gdr_fingerprint, graded_iso_oracle, merge_check, GaloisParams,
};
use crate::cochain::{h1, ActionSpec};
use crate::corpus::{abelian_groups, change_basis, random_g_algebra, random_invertible};
use crate::error::{Error, Result};
use crate::galois::{
    crossed_check, galois_criterion, galois_iso_oracle, induced_centralizer_check, is_galois_extension, double_smash_check, psi_invariant,
    psi_invariant_with_root, PsiInvariant,
};
use crate::gf::{field_create, gcd, Elt, Field, Tower};
use crate::par;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{BTreeMap, HashSet};
use std::time::Instant;

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub millis: u128,
}

pub const NAMES: [&str; 8] = [
    "count law",
    "criterion equivalence",
    "complete invariant",
    "structure maps",
    "cohomology sizes",
    "graded-division classification",
    "frobenius twist",
    "kernel sanity",
];

pub fn run(id: u8) -> Outcome {
    let start = Instant::now();
    let res = match id {
        1 => count_law(),
        2 => criterion_equivalence(),
        3 => complete_invariant(),
        4 => structure_maps(),
        5 => cohomology_sizes(),
        6 => gdr_classification(),
        7 => frobenius_twist(),
        8 => kernel_sanity(),
        _ => Err(Error::Invalid(format!("no criterion {}", id))),
    };
    let (pass, detail) = match res {
        Ok((p, d)) => (p, d),
        Err(e) => (false, format!("error: {}", e)),
    };
    let name = NAMES.get(id.wrapping_sub(1) as usize).copied().unwrap_or("unknown");
    Outcome { id, name, pass, detail, millis: start.elapsed().as_millis() }
}

pub fn run_all() -> Vec<Outcome> {
    (1..=8).map(run).collect()
}

type Check = Result<(bool, String)>;

fn gf(p: u64, m: u32) -> Result<Field> {
    field_create(p, m)
}

/// Elements of G whose image generates G/K, counted up to K.
fn generating_coset_count(g: &AbGroup, k: &Subgroup) -> usize {
    let n = g.size() / k.order();
    let hits = g
        .elements()
        .filter(|&x| (1..=n).find(|&m| k.contains(g.mul(m as i64, x))) == Some(n))
        .count();
    hits / k.order()
}

/// Nondegenerate alternating pairings K x K -> F^x, by scanning every
/// upper-triangular value table and evaluating on all pairs.
fn nondegenerate_pairings(k: &Subgroup, f: &Field) -> Result<Vec<Bicharacter>> {
    let ords = k.basis_orders().to_vec();
    let m = ords.len();
    let u = f.units();
    let mut slots = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let o = gcd(ords[i] as u64, ords[j] as u64) as u32;
            if !u.is_multiple_of(o) {
                return Ok(Vec::new());
            }
            slots.push((0..o).map(|t| t * (u / o)).collect::<Vec<u32>>());
        }
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; slots.len()];
    loop {
        let upper: Vec<u32> = idx.iter().zip(&slots).map(|(&i, s)| s[i]).collect();
        let b = Bicharacter::from_upper(k, f, &upper)?;
        let nondeg = k.elems().iter().all(|&x| x == 0 || k.elems().iter().any(|&y| b.dlog_at(x, y) != 0));
        if nondeg {
            out.push(b);
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(out);
            }
            idx[pos] += 1;
            if idx[pos] < slots[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// sum over K of |K| * #generating cosets * #nondegenerate pairings, with
/// exp(K) dividing |F^x|.
fn expected_galois_count(f: &Field, g: &AbGroup) -> Result<usize> {
    let mut total = 0;
    for k in enumerate_subgroups(g)? {
        if !f.units().is_multiple_of(k.exponent()) {
            continue;
        }
        let cosets = generating_coset_count(g, &k);
        if cosets == 0 {
            continue;
        }
        total += k.order() * cosets * nondegenerate_pairings(&k, f)?.len();
    }
    Ok(total)
}

struct Built {
    params: GaloisParams,
    galg: GAlgebra,
}

fn build_all(f: &Field, g: &AbGroup) -> Result<Vec<Built>> {
    let ps = enumerate_simple_galois(f, g)?;
    par::map(&ps, |p| construct_simple_galois(p).map(|sg| Built { params: p.clone(), galg: sg.galg }))
        .into_iter()
        .collect()
}

fn count_law() -> Check {
    let mut log = Vec::new();
    let mut ok = true;
    let mut algebras = 0;
    let mut oracle_pairs = 0;
    for (p, m) in [(3, 1), (5, 1)] {
        let f = gf(p, m)?;
        for g in abelian_groups(16) {
            let built = build_all(&f, &g)?;
            let expected = expected_galois_count(&f, &g)?;
            let mut per_family: BTreeMap<(Vec<usize>, usize, Vec<u32>), usize> = BTreeMap::new();
            for b in &built {
                let key = (b.params.kernel.elems().to_vec(), b.params.coset.rep, b.params.beta.upper());
                *per_family.entry(key).or_default() += 1;
            }
            let family_ok = per_family.iter().all(|((k, _, _), &c)| c == k.len());
            let galois_ok = par::all(&built, |b| is_galois_extension(&b.galg).verdict);
            let psis: Vec<Result<PsiInvariant>> = par::map(&built, |b| psi_invariant(&b.galg));
            let psis: Vec<PsiInvariant> = psis.into_iter().collect::<Result<_>>()?;
            let distinct = psis.iter().collect::<HashSet<_>>().len() == psis.len();
            let mut non_iso = true;
            if g.size() <= 8 {
                let pairs: Vec<(usize, usize)> =
                    (0..built.len()).flat_map(|i| (i + 1..built.len()).map(move |j| (i, j))).collect();
                oracle_pairs += pairs.len();
                let hits: Vec<Result<bool>> = par::map(&pairs, |&(i, j)| galois_iso_oracle(&built[i].galg, &built[j].galg));
                for h in hits {
                    non_iso &= !h?;
                }
            }
            algebras += built.len();
            let this = built.len() == expected && family_ok && galois_ok && distinct && non_iso;
            if !this {
                log.push(format!(
                    "{} {:?}: {} emitted, {} expected, families {}, galois {}, psi distinct {}, non-isomorphic {}",
                    f.name(),
                    g.orders(),
                    built.len(),
                    expected,
                    family_ok,
                    galois_ok,
                    distinct,
                    non_iso
                ));
            }
            ok &= this;
        }
    }
    log.insert(0, format!("{} algebras over GF(3), GF(5) with |G| <= 16; {} oracle pairs", algebras, oracle_pairs));
    Ok((ok, log.join("; ")))
}

fn criterion_equivalence() -> Check {
    let seeds: Vec<u64> = (0..150).collect();
    let random: Vec<Result<(bool, bool)>> = par::map(&seeds, |&s| {
        let c = random_g_algebra(s)?;
        Ok((is_galois_extension(&c).verdict, galois_criterion(&c)?.verdict))
    });
    let mut agree = 0;
    let mut galois = 0;
    let mut total = 0;
    for r in random {
        let (a, b) = r?;
        total += 1;
        agree += (a == b) as usize;
        galois += a as usize;
    }
    let mut reps = Vec::new();
    for (p, m) in [(3, 1), (5, 1)] {
        let f = gf(p, m)?;
        for g in abelian_groups(8) {
            reps.extend(build_all(&f, &g)?.into_iter().map(|b| b.galg));
        }
    }
    let constructed: Vec<Result<bool>> =
        par::map(&reps, |c| Ok(is_galois_extension(c).verdict && galois_criterion(c)?.verdict));
    let mut rep_ok = 0;
    for r in constructed {
        rep_ok += r? as usize;
    }
    let ok = agree == total && rep_ok == reps.len();
    Ok((
        ok,
        format!(
            "random: {}/{} agree ({} Galois); constructed: {}/{} pass both tests",
            agree,
            total,
            galois,
            rep_ok,
            reps.len()
        ),
    ))
}

fn complete_invariant() -> Check {
    let f = gf(3, 1)?;
    let mut objects = 0;
    let mut pairs_total = 0;
    let mut bad_pairs = 0;
    let mut bad_roots = 0;
    for g in abelian_groups(8) {
        let built = build_all(&f, &g)?;
        if built.is_empty() {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(g.size() as u64);
        let mut corpus: Vec<GAlgebra> = Vec::new();
        for b in &built {
            corpus.push(b.galg.clone());
            let p = random_invertible(&f, b.galg.dim(), &mut rng);
            corpus.push(change_basis(&b.galg, &p)?);
        }
        let crit: Vec<Result<bool>> = par::map(&corpus, |c| Ok(galois_criterion(c)?.verdict));
        for c in crit {
            if !c? {
                return Ok((false, format!("a constructed extension over {:?} fails the criterion", g.orders())));
            }
        }
        let psis: Vec<Result<(PsiInvariant, bool)>> = par::map(&corpus, |c| {
            let base = psi_invariant(c)?;
            let n = base.n as usize;
            let mut same = true;
            for r in 1..n {
                same &= psi_invariant_with_root(c, r)? == base;
            }
            Ok((base, same))
        });
        let psis: Vec<(PsiInvariant, bool)> = psis.into_iter().collect::<Result<_>>()?;
        bad_roots += psis.iter().filter(|(_, s)| !s).count();
        let pairs: Vec<(usize, usize)> =
            (0..corpus.len()).flat_map(|i| (i + 1..corpus.len()).map(move |j| (i, j))).collect();
        let verdicts: Vec<Result<bool>> = par::map(&pairs, |&(i, j)| {
            Ok((psis[i].0 == psis[j].0) == galois_iso_oracle(&corpus[i], &corpus[j])?)
        });
        for v in verdicts {
            bad_pairs += !v? as usize;
        }
        objects += corpus.len();
        pairs_total += pairs.len();
    }
    let ok = bad_pairs == 0 && bad_roots == 0;
    Ok((
        ok,
        format!(
            "{} extensions (with rebased copies), {} pairs, {} disagreements, {} root-dependent invariants",
            objects, pairs_total, bad_pairs, bad_roots
        ),
    ))
}

fn structure_maps() -> Check {
    let f = gf(3, 1)?;
    let klein = AbGroup::new(&[2, 2])?;
    let k = Subgroup::whole(&klein);
    let beta = Bicharacter::from_upper(&k, &f, &[1])?;
    let p = GaloisParams { field: f.clone(), group: klein, coset: Coset::new(&k, 0), kernel: k, beta, s: vec![0, 0] };
    let c00 = construct_simple_galois(&p)?;
    let crossed_klein = crossed_check(&c00.graded)?.ok;
    let induced_klein = induced_centralizer_check(&c00.graded)?.ok;

    let z4 = AbGroup::new(&[4])?;
    let mat2 = enumerate_gdr(&f, &z4, 4)?
        .into_iter()
        .find(|p| p.t.order() == 2 && p.h.order() == 1)
        .ok_or_else(|| Error::Internal("no Mat2 representative".into()))?;
    let d = construct_gdr(&mat2, 0)?;
    let crossed_mat2 = crossed_check(&regrade_by_support(&d.graded)?)?.ok;
    let induced_mat2 = induced_centralizer_check(&d.graded)?.ok;

    let z2 = AbGroup::new(&[2])?;
    let l = construct_simple_galois(&enumerate_simple_galois(&f, &z2)?[0])?.galg;
    let double_smash = double_smash_check(&l)?.ok;
    let ok = crossed_klein && induced_klein && crossed_mat2 && induced_mat2 && double_smash;
    Ok((
        ok,
        format!(
            "klein crossed {} induced {}; Mat2 in Z/4 crossed {} induced {}; GF(9) smash-of-smash {}",
            crossed_klein, induced_klein, crossed_mat2, induced_mat2, double_smash
        ),
    ))
}

/// The same algebra graded by its support T instead of G.
fn regrade_by_support(a: &GradedAlgebra) -> Result<GradedAlgebra> {
    let t = a.support_subgroup()?;
    let abs = t.as_abgroup();
    let back: BTreeMap<usize, usize> = abs.elements().map(|i| (t.abstract_to_parent(&abs, i), i)).collect();
    GradedAlgebra::new(a.alg.clone(), &abs, a.deg.iter().map(|x| back[x]).collect())
}

/// |Hom(K, F^x)| from the cyclic factors of K.
fn hom_size(k: &Subgroup, f: &Field) -> usize {
    k.basis_orders().iter().map(|&o| gcd(o as u64, f.units() as u64) as usize).product()
}

fn cohomology_sizes() -> Check {
    let mut specs = Vec::new();
    for (p, m) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (3, 3), (5, 2), (3, 4)] {
        let f = gf(p, m)?;
        for g in abelian_groups(8) {
            for k in enumerate_subgroups(&g)? {
                let n = g.size() / k.order();
                if (f.q() as u64).pow(n as u32) > 81 {
                    continue;
                }
                for c in generating_cosets(&Subgroup::whole(&g), &k) {
                    specs.push((f.clone(), g.clone(), k.clone(), c));
                }
            }
        }
    }
    let res: Vec<Result<(bool, bool)>> = par::map(&specs, |(f, g, k, c)| {
        let t = Tower::new(f, (g.size() / k.order()) as u32)?;
        let a = ActionSpec::new(&t, g, k, c)?;
        let size = h1(&a)?.size;
        let admissible = f.units() % k.exponent() == 0;
        Ok((admissible, size == hom_size(k, f) && (!admissible || size == k.order())))
    });
    let mut admissible = 0;
    let mut bad = 0;
    for r in res {
        let (a, good) = r?;
        admissible += a as usize;
        bad += !good as usize;
    }
    let f3 = gf(3, 1)?;
    let hand = |orders: &[u32], kgens: &[i64], rep: i64| -> Result<usize> {
        let g = AbGroup::new(orders)?;
        let k = Subgroup::generated(&g, &kgens.iter().map(|&x| g.index(&[x])).collect::<Vec<_>>())?;
        let t = Tower::new(&f3, (g.size() / k.order()) as u32)?;
        Ok(h1(&ActionSpec::new(&t, &g, &k, &Coset::new(&k, g.index(&[rep])))?)?.size)
    };
    let z4 = hand(&[4], &[2], 1)?;
    let z2 = hand(&[2], &[], 1)?;
    let ok = bad == 0 && z4 == 2 && z2 == 1;
    Ok((
        ok,
        format!(
            "{} action specs ({} with exp K | |F^x|), {} mismatches; H1(Z/4, GF(9)^x) = {}, H1(Z/2, GF(9)^x) = {}",
            specs.len(),
            admissible,
            bad,
            z4,
            z2
        ),
    ))
}

/// Quintuple count over F with |F^x| = 2: chains H <= K <= T with T/K
/// cyclic and K/H elementary abelian of even rank, weighted by generating
/// cosets, nondegenerate pairings on K/H and characters of K_[2].
fn expected_gdr_count_gf3(g: &AbGroup) -> Result<usize> {
    let f = gf(3, 1)?;
    let subs = enumerate_subgroups(g)?;
    let mut total = 0;
    for t in &subs {
        let tg = t.as_abgroup();
        let tsubs = enumerate_subgroups(&tg)?;
        for kk in &tsubs {
            let cosets = generating_coset_count(&tg, kk);
            if cosets == 0 {
                continue;
            }
            let kg = kk.as_abgroup();
            let chis = kg.elements().filter(|&x| kg.mul(2, x) == 0).count();
            for h in enumerate_subgroups(&kg)? {
                if !kg.elements().all(|x| h.contains(kg.mul(2, x))) {
                    continue;
                }
                let quot = crate::abgroup::quotient(&Subgroup::whole(&kg), &h)?;
                let pairings = nondegenerate_pairings(&Subgroup::whole(&quot.group), &f)?.len();
                total += cosets * pairings * chis;
            }
        }
    }
    Ok(total)
}

fn gdr_classification() -> Check {
    let f = gf(3, 1)?;
    let mut log = Vec::new();
    let mut ok = true;
    for orders in [&[2][..], &[4], &[2, 2], &[4, 2]] {
        let g = AbGroup::new(orders)?;
        let ps = enumerate_gdr(&f, &g, 256)?;
        let expected = expected_gdr_count_gf3(&g)?;
        let built: Vec<Result<(bool, crate::classify::GdrFingerprint, usize)>> = par::map(&ps, |p| {
            let d = construct_gdr(p, 0)?;
            let a = &d.graded;
            let good = a.is_graded_division()
                && a.support() == p.t.elems().to_vec()
                && a.center_support() == p.h.elems().to_vec()
                && a.is_graded_central()
                && a.alg.dim() == p.dim();
            Ok((good, gdr_fingerprint(a)?, a.alg.dim()))
        });
        let built: Vec<(bool, crate::classify::GdrFingerprint, usize)> = built.into_iter().collect::<Result<_>>()?;
        let invariants = built.iter().all(|b| b.0);
        let mut oracle_pairs = 0;
        let mut large = 0;
        let mut collisions = 0;
        for i in 0..ps.len() {
            for j in i + 1..ps.len() {
                if built[i].1 != built[j].1 {
                    continue;
                }
                oracle_pairs += 1;
                large += (built[i].2 > 16) as usize;
                let a = construct_gdr(&ps[i], 0)?;
                let b = construct_gdr(&ps[j], 0)?;
                collisions += graded_iso_oracle(&a.graded, &b.graded)? as usize;
            }
        }
        let this = ps.len() == expected && invariants && collisions == 0;
        ok &= this;
        log.push(format!(
            "{:?}: {} quintuples ({} expected), checks {}, {} fingerprint collisions sent to the oracle ({} above dim 16), {} isomorphic",
            orders,
            ps.len(),
            expected,
            invariants,
            oracle_pairs,
            large,
            collisions
        ));
    }
    Ok((ok, log.join("; ")))
}

fn frobenius_twist() -> Check {
    let f = gf(3, 2)?;
    let mut twists = 0;
    let mut twist_ok = true;
    for orders in [&[2, 2][..], &[4, 2]] {
        let g = AbGroup::new(orders)?;
        let k = torsion(&Subgroup::whole(&g), 2);
        let whole = Subgroup::whole(&g);
        let units = f.units();
        for c in generating_cosets(&whole, &k) {
            let beta = Bicharacter::from_upper(&k, &f, &[units / 2])?;
            let p = GaloisParams { field: f.clone(), group: g.clone(), coset: c, kernel: k.clone(), beta, s: vec![0, 0] };
            let r = frobenius_twist_check(&p)?;
            twist_ok &= r.ok;
            twists += 1;
        }
    }
    let mut merges = Vec::new();
    let mut merge_ok = true;
    for orders in [&[2][..], &[2, 2], &[4, 2]] {
        let g = AbGroup::new(orders)?;
        let r = merge_check(&f, &g, 16, 0)?;
        merge_ok &= r.ok;
        merges.push(format!("{:?} {}->{} classes, {} pairs, {} disagreements", orders, r.quintuples, r.classes, r.pairs_checked, r.disagreements));
    }
    Ok((twist_ok && merge_ok, format!("{} explicit rescalings ok {}; merges: {}", twists, twist_ok, merges.join(", "))))
}

/// a * b in F_p[x]/(defpoly) on coefficient vectors.
fn poly_mul(p: u32, def: &[u32], a: &[u32], b: &[u32]) -> Vec<u32> {
    let m = def.len() - 1;
    let mut prod = vec![0u32; 2 * m];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for d in (m..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        for (i, &di) in def.iter().enumerate() {
            let idx = d - m + i;
            prod[idx] = (prod[idx] + p * p - c * di % p) % p;
        }
    }
    prod.truncate(m);
    prod
}

fn padded(f: &Field, x: Elt) -> Vec<u32> {
    let mut v = f.to_poly(x);
    v.resize(f.m() as usize, 0);
    v
}

fn kernel_sanity() -> Check {
    let mut fields = Vec::new();
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79] {
        let mut m = 1;
        while p.pow(m) <= 81 {
            fields.push(gf(p, m)?);
            m += 1;
        }
    }
    let zech_ok = par::all(&fields, |f| {
        let p = f.p();
        let els: Vec<Elt> = f.elements().collect();
        els.iter().all(|&a| {
            let pa = padded(f, a);
            els.iter().all(|&b| {
                let pb = padded(f, b);
                let sum: Vec<u32> = pa.iter().zip(&pb).map(|(x, y)| (x + y) % p).collect();
                padded(f, f.add(a, b)) == sum && padded(f, f.mul(a, b)) == poly_mul(p, f.defpoly(), &pa, &pb)
            })
        })
    });

    let omega_ok = fields.iter().all(|f| {
        let u = f.units() as u64;
        (1..=u).filter(|n| u.is_multiple_of(*n)).all(|n| {
            (1..=n).filter(|d| n % d == 0).all(|d| f.pow_u(f.omega(n).unwrap(), d) == f.omega(n / d).unwrap())
        })
    });
    let section_ok = fields.iter().all(|f| {
        let u = f.units() as u64;
        (1..=u).filter(|n| u.is_multiple_of(*n)).all(|n| {
            f.elements().filter(|x| !x.is_zero()).all(|x| {
                let ord = f.order(x).unwrap() as u64;
                !u.is_multiple_of(ord * n) || f.pow_u(f.root_section(n, x).unwrap(), n) == x
            })
        })
    });

    let mut tower_ok = true;
    let mut towers = 0;
    for f in &fields {
        let mut n = 2;
        while (f.q() as u64).pow(n) <= 81 {
            let t = Tower::new(f, n)?;
            tower_ok &= tower_axioms(&t);
            towers += 1;
            n += 1;
        }
    }

    let count = |o: &[u32]| -> Result<usize> { Ok(enumerate_subgroups(&AbGroup::new(o)?)?.len()) };
    let c222 = count(&[2, 2, 2])?;
    let c33 = count(&[3, 3])?;
    let chars_ok = fields.iter().take(6).all(|f| {
        let g = AbGroup::new(&[f.units().max(1), 2]).unwrap();
        let k = Subgroup::whole(&g);
        characters(&k, f).len() == hom_size(&k, f)
    });
    let ok = zech_ok && omega_ok && section_ok && tower_ok && c222 == 16 && c33 == 6 && chars_ok;
    Ok((
        ok,
        format!(
            "{} fields: arithmetic {}, omega {}, root section {}; {} towers {}; characters {}; subgroups (Z/2)^3 = {}, (Z/3)^2 = {}",
            fields.len(),
            zech_ok,
            omega_ok,
            section_ok,
            towers,
            tower_ok,
            chars_ok,
            c222,
            c33
        ),
    ))
}

fn tower_axioms(t: &Tower) -> bool {
    let f = t.base();
    let l = t.top();
    let n = t.degree() as u64;
    let emb_hom = f.elements().all(|a| {
        f.elements().all(|b| t.embed(f.add(a, b)) == l.add(t.embed(a), t.embed(b)) && t.embed(f.mul(a, b)) == l.mul(t.embed(a), t.embed(b)))
    });
    let gen_ok = t.embed(f.gen()) == l.pow_u(l.gen(), t.index()) && f.elements().all(|a| t.restrict(t.embed(a)) == Ok(a));
    let sigma_ok = l.elements().all(|x| t.sigma(n, x) == x && (t.sigma(1, x) == x) == t.in_base(x))
        && (1..n).all(|s| l.elements().any(|x| t.sigma(s, x) != x));
    let norm_ok = l.elements().all(|x| {
        let prod = (0..n).fold(Elt::ONE, |acc, s| l.mul(acc, t.sigma(s, x)));
        let nx = t.norm(x);
        nx == prod && t.in_base(nx)
    }) && t.norm(l.gen()) == t.embed(f.gen());
    let fibre = l.elements().filter(|&x| !x.is_zero() && t.norm(x) == Elt::ONE).count() as u64;
    let coords_ok = l.elements().all(|x| t.from_coords(t.coords(x)) == x);
    emb_hom && gen_ok && sigma_ok && norm_ok && fibre == t.index() && coords_ok
}
