use super::*;
use crate::abgroup::torsion;
use crate::galois::{galois_criterion, is_galois_extension, psi_invariant};
use crate::gf::field_create;

fn gf(p: u64, m: u32) -> Field {
    field_create(p, m).unwrap()
}

fn klein_params(f: &Field, s: Vec<u32>) -> GaloisParams {
    let g = AbGroup::new(&[2, 2]).unwrap();
    let k = Subgroup::whole(&g);
    let beta = Bicharacter::from_upper(&k, f, &[f.units() / 2]).unwrap();
    GaloisParams { field: f.clone(), group: g, coset: Coset::new(&k, 0), kernel: k, beta, s }
}

#[test]
fn galois_counts() {
    let g22 = AbGroup::new(&[2, 2]).unwrap();
    let g2 = AbGroup::new(&[2]).unwrap();
    assert_eq!(enumerate_simple_galois(&gf(3, 1), &g22).unwrap().len(), 4);
    assert_eq!(enumerate_simple_galois(&gf(3, 1), &g2).unwrap().len(), 1);
    assert_eq!(enumerate_simple_galois(&gf(2, 1), &g22).unwrap().len(), 0);
}

#[test]
fn jcb_values() {
    let f = gf(3, 1);
    let p = klein_params(&f, vec![0, 0]);
    for &k in p.kernel.elems() {
        assert_eq!(jcb(&p.coset, &p.beta, k), 0);
    }
    let g = AbGroup::new(&[4, 2]).unwrap();
    let k = torsion(&Subgroup::whole(&g), 2);
    let beta = Bicharacter::from_upper(&k, &f, &[1]).unwrap();
    let c = Coset::new(&k, g.index(&[1, 0]));
    let two = g.index(&[2, 0]);
    for &x in k.elems() {
        assert_eq!(jcb(&c, &beta, x), beta.dlog_at(two, x));
    }
    assert_eq!(jcb(&c, &beta, g.index(&[0, 1])), 1);
}

#[test]
fn klein_relations() {
    let f = gf(3, 1);
    let minus = f.neg(Elt::ONE);
    for (s, sq) in [(vec![0, 0], Elt::ONE), (vec![1, 0], minus)] {
        let sg = construct_simple_galois(&klein_params(&f, s)).unwrap();
        let a = &sg.graded.alg;
        assert_eq!(a.dim(), 4);
        let k = &sg.params.kernel;
        let x1 = a.basis_vec(k.pos(k.basis()[0]).unwrap());
        let x2 = a.basis_vec(k.pos(k.basis()[1]).unwrap());
        assert_eq!(a.mul(&x1, &x1), a.scalar(sq));
        assert_eq!(a.mul(&x2, &x2), a.scalar(Elt::ONE));
        assert_eq!(a.mul(&x1, &x2), a.scale(minus, &a.mul(&x2, &x1)));
        assert_eq!(a.center().len(), 1);
        assert!(is_galois_extension(&sg.galg).verdict);
    }
}

#[test]
fn field_extension_case() {
    let f = gf(3, 1);
    let ps = enumerate_simple_galois(&f, &AbGroup::new(&[2]).unwrap()).unwrap();
    let sg = construct_simple_galois(&ps[0]).unwrap();
    assert_eq!(sg.galg.dim(), 2);
    assert!(sg.galg.alg.is_commutative());
    assert!(crate::algebra::is_field(&sg.galg.alg, 0));
    assert!(is_galois_extension(&sg.galg).verdict);
}

#[test]
fn big_field_fallback() {
    let f = gf(3, 1);
    let g = AbGroup::new(&[11]).unwrap();
    let ps = enumerate_simple_galois(&f, &g).unwrap();
    assert_eq!(ps.len(), 10);
    let sg = construct_simple_galois(&ps[0]).unwrap();
    assert!(sg.tower.is_none());
    assert!(is_galois_extension(&sg.galg).verdict);
}

#[test]
fn least_irreducible_small() {
    let f = gf(2, 1);
    let p = least_irreducible(&f, 2).unwrap();
    assert_eq!(p.coeffs(), &[Elt::ONE, Elt::ONE, Elt::ONE]);
    let p3 = least_irreducible(&f, 3).unwrap();
    assert_eq!(p3.coeffs(), &[Elt::ONE, Elt::ONE, Elt::ZERO, Elt::ONE]);
}

#[test]
fn constructed_are_galois_and_psi_recovers_s() {
    let f = gf(3, 1);
    for orders in [&[2, 2][..], &[4, 2], &[4], &[2, 2, 2]] {
        let g = AbGroup::new(orders).unwrap();
        for p in enumerate_simple_galois(&f, &g).unwrap() {
            let sg = construct_simple_galois(&p).unwrap();
            assert!(is_galois_extension(&sg.galg).verdict, "{:?}", p);
            assert!(galois_criterion(&sg.galg).unwrap().verdict);
            let psi = psi_invariant(&sg.galg).unwrap();
            assert_eq!(psi.s, p.s);
            assert_eq!(psi.kernel, p.kernel.elems().to_vec());
        }
    }
}

#[test]
fn validation_rejects() {
    let f = gf(3, 1);
    let mut p = klein_params(&f, vec![0, 0]);
    p.s = vec![2, 0];
    assert!(matches!(construct_simple_galois(&p), Err(Error::Constraint(_))));
    let mut p = klein_params(&f, vec![0, 0]);
    p.beta = Bicharacter::trivial(&p.kernel, &f);
    assert!(matches!(construct_simple_galois(&p), Err(Error::Constraint(_))));
}

fn check_gdr(d: &Gdr) {
    let p = &d.params;
    let g = &d.graded;
    assert!(g.is_graded_division(), "{:?}", p);
    assert_eq!(g.support(), p.t.elems().to_vec());
    assert_eq!(g.center_support(), p.h.elems().to_vec());
    assert!(g.is_graded_central());
}

#[test]
fn gdr_cyclic_two() {
    let f = gf(3, 1);
    let g = AbGroup::new(&[2]).unwrap();
    let all = enumerate_gdr(&f, &g, 256).unwrap();
    assert_eq!(all.len(), 4);
    let dims: Vec<usize> = all.iter().map(|p| p.dim()).collect();
    assert_eq!(dims, vec![1, 4, 2, 2]);
    let built: Vec<Gdr> = all.iter().map(|p| construct_gdr(p, 0).unwrap()).collect();
    for d in &built {
        check_gdr(d);
    }
    // T = H = Z/2: trivial chi splits, the other is GF(9)
    assert!(!crate::algebra::is_field(&built[2].graded.alg, 0));
    assert!(crate::algebra::is_field(&built[3].graded.alg, 0));
    // Mat_2(GF(3)) with D_e = GF(9)
    assert_eq!(built[1].graded.identity_component().unwrap().alg.dim(), 2);
    assert_eq!(built[1].graded.alg.center().len(), 1);
}

#[test]
fn gdr_characteristic_two() {
    let f = gf(2, 1);
    let g = AbGroup::new(&[2]).unwrap();
    let all = enumerate_gdr(&f, &g, 256).unwrap();
    assert_eq!(all.len(), 3);
    for p in &all {
        check_gdr(&construct_gdr(p, 0).unwrap());
    }
}

#[test]
fn gdr_fine_grading_matches_galois() {
    let f = gf(3, 1);
    let g = AbGroup::new(&[2, 2]).unwrap();
    let all = enumerate_gdr(&f, &g, 4).unwrap();
    let whole = Subgroup::whole(&g);
    let p = all
        .iter()
        .find(|p| p.t == whole && p.h.order() == 1 && p.chi.is_trivial())
        .unwrap();
    let d = construct_gdr(p, 0).unwrap();
    check_gdr(&d);
    let c00 = construct_simple_galois(&klein_params(&f, vec![0, 0])).unwrap();
    assert!(graded_iso_oracle(&d.graded, &c00.graded).unwrap());
    let c10 = construct_simple_galois(&klein_params(&f, vec![1, 0])).unwrap();
    // X_1^2 = -1 is not a square class in GF(3)
    assert!(!graded_iso_oracle(&c10.graded, &c00.graded).unwrap());
}

#[test]
fn idempotent_choice_is_irrelevant() {
    let f = gf(3, 1);
    let g = AbGroup::new(&[4]).unwrap();
    for p in enumerate_gdr(&f, &g, 16).unwrap() {
        let a = construct_gdr(&p, 0).unwrap();
        let b = construct_gdr(&p, 7).unwrap();
        check_gdr(&a);
        assert_eq!(gdr_fingerprint(&a.graded).unwrap(), gdr_fingerprint(&b.graded).unwrap());
        assert!(graded_iso_oracle(&a.graded, &b.graded).unwrap(), "{:?}", p);
    }
}

#[test]
fn oracle_separates_chi() {
    let f = gf(3, 1);
    let g = AbGroup::new(&[2]).unwrap();
    let all = enumerate_gdr(&f, &g, 4).unwrap();
    let a = construct_gdr(&all[2], 0).unwrap();
    let b = construct_gdr(&all[3], 0).unwrap();
    assert!(!graded_iso_oracle(&a.graded, &b.graded).unwrap());
    assert!(graded_iso_oracle(&b.graded, &b.graded).unwrap());
}

#[test]
fn merges_follow_frobenius() {
    let f = gf(3, 1);
    let g = AbGroup::new(&[2, 2]).unwrap();
    let classes = gdr_iso_classes(&f, &g, 16).unwrap();
    assert!(classes.iter().all(|c| c.members.len() == 1));
    assert_eq!(f0_degree(&gf(3, 2), 2), 1);
    assert_eq!(f0_degree(&gf(3, 2), 4), 2);
}

#[test]
fn twist_rescaling() {
    let f = gf(3, 2);
    let g = AbGroup::new(&[4, 2]).unwrap();
    let k = torsion(&Subgroup::whole(&g), 2);
    let beta = Bicharacter::from_upper(&k, &f, &[f.units() / 2]).unwrap();
    let p = GaloisParams {
        field: f.clone(),
        group: g.clone(),
        coset: Coset::new(&k, g.index(&[1, 0])),
        kernel: k,
        beta,
        s: vec![0, 0],
    };
    let r = frobenius_twist_check(&p).unwrap();
    assert_eq!(r.f0_degree, 1);
    assert!(r.rescaling.iter().any(|&e| e != 0));
    assert!(r.ok, "{:?}", r);
}

#[test]
fn twist_merge() {
    let f = gf(3, 2);
    let g = AbGroup::new(&[4, 2]).unwrap();
    let r = merge_check(&f, &g, 8, 0).unwrap();
    assert!(r.classes < r.quintuples);
    assert!(r.pairs_checked > 0);
    assert!(r.ok, "{:?}", r);
}
