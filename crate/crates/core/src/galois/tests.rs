use super::*;
use crate::abgroup::{torsion, AbGroup, Bicharacter, Coset};
use crate::classify::{construct_gdr, construct_simple_galois, enumerate_gdr, enumerate_simple_galois, GaloisParams};
use crate::gf::{field_create, Field};

fn gf(p: u64, m: u32) -> Field {
    field_create(p, m).unwrap()
}

fn klein(f: &Field, s: Vec<u32>) -> GAlgebra {
    let g = AbGroup::new(&[2, 2]).unwrap();
    let k = Subgroup::whole(&g);
    let beta = Bicharacter::from_upper(&k, f, &[f.units() / 2]).unwrap();
    let p = GaloisParams { field: f.clone(), group: g, coset: Coset::new(&k, 0), kernel: k, beta, s };
    construct_simple_galois(&p).unwrap().galg
}

fn frobenius_field(f: &Field, g: &AbGroup) -> GAlgebra {
    let ps = enumerate_simple_galois(f, g).unwrap();
    construct_simple_galois(&ps[0]).unwrap().galg
}

fn split_pair(f: &Field) -> Algebra {
    Algebra::from_fn(f, 2, vec![Elt::ONE, Elt::ONE], |i, j| {
        let mut v = vec![Elt::ZERO; 2];
        if i == j {
            v[i] = Elt::ONE;
        }
        v
    })
    .unwrap()
}

#[test]
fn phi_ranks() {
    let f = gf(3, 1);
    let z2 = AbGroup::new(&[2]).unwrap();
    let c = frobenius_field(&f, &z2);
    let phi = phi_matrix(&c);
    assert_eq!((phi.rows, phi.cols), (4, 4));
    assert_eq!(rank(&f, &phi), 4);

    let triv = GAlgebra::trivial(&split_pair(&f), &z2);
    assert!(rank(&f, &phi_matrix(&triv)) < 4);

    let one = AbGroup::trivial();
    let fa = Algebra::from_fn(&f, 1, vec![Elt::ONE], |_, _| vec![Elt::ONE]).unwrap();
    assert_eq!(rank(&f, &phi_matrix(&GAlgebra::trivial(&fa, &one))), 1);
}

#[test]
fn certificates() {
    let f = gf(3, 1);
    let z2 = AbGroup::new(&[2]).unwrap();
    assert!(is_galois_extension(&frobenius_field(&f, &z2)).verdict);
    let cert = is_galois_extension(&GAlgebra::trivial(&split_pair(&f), &z2));
    assert!(!cert.verdict);
    assert_eq!(cert.failure, Some(GaloisFailure::FixedSubalgebraTooBig));
    assert_eq!(serde_json::to_string(&cert.failure).unwrap(), "\"fixed_subalgebra_too_big\"");
    assert!(is_galois_extension(&klein(&f, vec![0, 0])).verdict);
}

#[test]
fn criterion_matches_definition() {
    let f = gf(3, 1);
    let z2 = AbGroup::new(&[2]).unwrap();
    let cases = vec![
        frobenius_field(&f, &z2),
        GAlgebra::trivial(&split_pair(&f), &z2),
        klein(&f, vec![0, 0]),
        klein(&f, vec![1, 1]),
    ];
    for c in &cases {
        assert_eq!(galois_criterion(c).unwrap().verdict, is_galois_extension(c).verdict);
    }
    let fa = Algebra::from_fn(&f, 1, vec![Elt::ONE], |_, _| vec![Elt::ONE]).unwrap();
    let r = galois_criterion(&GAlgebra::trivial(&fa, &z2)).unwrap();
    assert!(!r.dim_matches && !r.verdict);
}

#[test]
fn mu_components_of_klein() {
    let f = gf(3, 1);
    let c = klein(&f, vec![0, 0]);
    let mu = mu_grading(&c).unwrap();
    assert_eq!(mu.kernel.order(), 4);
    for &k in mu.kernel.elems() {
        let comp = mu_component(&c, k);
        assert_eq!(comp.len(), 1);
        // each component is an eigenline of the K-action
        let v = &comp[0];
        assert!(crate::linalg::rank(&f, &Matrix::from_cols(&[v.clone(), c.act(k, v)], 4)) == 1);
    }
    let l = frobenius_field(&f, &AbGroup::new(&[2]).unwrap());
    let mu = mu_grading(&l).unwrap();
    assert_eq!(mu.graded.support(), vec![0]);
}

#[test]
fn induced_extensions() {
    let f = gf(3, 1);
    let g = AbGroup::new(&[4]).unwrap();
    let t = Subgroup::generated(&g, &[2]).unwrap();
    let c = frobenius_field(&f, &t.as_abgroup());
    let ind = induce(&t, &c).unwrap();
    assert_eq!(ind.dim(), 4);
    assert!(is_galois_extension(&ind).verdict);

    let fa = Algebra::from_fn(&f, 1, vec![Elt::ONE], |_, _| vec![Elt::ONE]).unwrap();
    let reg = induce(&Subgroup::trivial(&g), &GAlgebra::trivial(&fa, &AbGroup::trivial())).unwrap();
    assert!(is_galois_extension(&reg).verdict);
    assert!(reg.alg.is_commutative());
}

#[test]
fn structure_maps() {
    let f = gf(3, 1);
    let g = AbGroup::new(&[2, 2]).unwrap();
    let k = Subgroup::whole(&g);
    let beta = Bicharacter::from_upper(&k, &f, &[1]).unwrap();
    let p = GaloisParams { field: f.clone(), group: g, coset: Coset::new(&k, 0), kernel: k, beta, s: vec![0, 0] };
    let c00 = construct_simple_galois(&p).unwrap();
    assert!(crossed_check(&c00.graded).unwrap().ok);
    assert!(induced_centralizer_check(&c00.graded).unwrap().ok);

    let z4 = AbGroup::new(&[4]).unwrap();
    let mat2 = enumerate_gdr(&f, &z4, 4)
        .unwrap()
        .into_iter()
        .find(|p| p.t.order() == 2 && p.h.order() == 1)
        .unwrap();
    let d = construct_gdr(&mat2, 0).unwrap();
    assert_eq!(d.graded.support(), vec![0, 2]);
    let r = induced_centralizer_check(&d.graded).unwrap();
    assert!(r.ok, "{:?}", r);
    assert_eq!(r.target_dim, 4);

    let l = frobenius_field(&f, &AbGroup::new(&[2]).unwrap());
    let r = double_smash_check(&l).unwrap();
    assert!(r.ok, "{:?}", r);
}

#[test]
fn opposite_stays_galois() {
    let f = gf(3, 1);
    for s in [vec![0, 0], vec![1, 0]] {
        assert!(is_galois_extension(&klein(&f, s).opposite()).verdict);
    }
}

#[test]
fn psi_root_independent() {
    let f = gf(3, 1);
    let g = AbGroup::new(&[4, 2]).unwrap();
    for p in enumerate_simple_galois(&f, &g).unwrap() {
        let c = construct_simple_galois(&p).unwrap().galg;
        let a = psi_invariant_with_root(&c, 0).unwrap();
        let b = psi_invariant_with_root(&c, 1).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.n, 2);
    }
}

#[test]
fn psi_of_field() {
    let f = gf(3, 1);
    let c = frobenius_field(&f, &AbGroup::new(&[2]).unwrap());
    let psi = psi_invariant(&c).unwrap();
    assert!(psi.s.is_empty() && psi.beta.is_empty());
    assert_eq!(psi.n, 2);
}

#[test]
fn oracle_on_klein() {
    let f = gf(3, 1);
    let c00 = klein(&f, vec![0, 0]);
    assert!(galois_iso_oracle(&c00, &c00).unwrap());
    assert!(!galois_iso_oracle(&c00, &klein(&f, vec![1, 0])).unwrap());
    let k = torsion(&Subgroup::whole(&c00.group), 2);
    assert_eq!(k.order(), 4);
}
