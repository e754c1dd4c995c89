use gradalg::abgroup::{enumerate_subgroups, parse_elements, quotient, AbGroup, Subgroup};
use gradalg::classify::{construct_simple_galois, enumerate_simple_galois};
use gradalg::corpus::{change_basis, random_g_algebra, random_invertible};
use gradalg::galois::{galois_criterion, is_galois_extension, psi_invariant};
use gradalg::gf::{field_create, Elt, Field, Tower};
use gradalg::io::{algebra_from_json, algebra_json, galgebra_doc, AlgebraDoc};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const FIELDS: [(u64, u32); 8] = [(2, 1), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (2, 6)];

fn field(i: usize) -> Field {
    let (p, m) = FIELDS[i % FIELDS.len()];
    field_create(p, m).unwrap()
}

fn elt(f: &Field, code: u32) -> Elt {
    f.from_code(code % f.q())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(i in 0usize..8, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = field(i);
        let (a, b, c) = (elt(&f, a), elt(&f, b), elt(&f, c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Elt::ZERO);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Elt::ONE);
        }
        // Frobenius is additive and has order m
        prop_assert_eq!(f.frobenius(1, f.add(a, b)), f.add(f.frobenius(1, a), f.frobenius(1, b)));
        prop_assert_eq!(f.frobenius(f.m() as u64, a), a);
    }

    #[test]
    fn root_section_is_a_root(i in 0usize..8, a in 1u32..4096, n_pick in 0usize..16) {
        let f = field(i);
        let u = f.units() as u64;
        let divisors: Vec<u64> = (1..=u).filter(|d| u.is_multiple_of(*d)).collect();
        let n = divisors[n_pick % divisors.len()];
        let x = Elt::from_dlog(a % f.units());
        let ord = f.order(x).unwrap() as u64;
        match f.root_section(n, x) {
            Ok(r) => prop_assert_eq!(f.pow_u(r, n), x),
            Err(_) => prop_assert!(!u.is_multiple_of(ord * n)),
        }
    }

    #[test]
    fn norm_is_multiplicative(a in any::<u32>(), b in any::<u32>(), pick in 0usize..3) {
        let (base, n) = [((3, 1), 2), ((2, 1), 4), ((2, 2), 2)][pick];
        let t = Tower::new(&field_create(base.0, base.1).unwrap(), n).unwrap();
        let l = t.top();
        let (a, b) = (elt(l, a), elt(l, b));
        prop_assert_eq!(t.norm(l.mul(a, b)), l.mul(t.norm(a), t.norm(b)));
        prop_assert!(t.in_base(t.norm(a)));
    }

    #[test]
    fn subgroup_lattice(orders in prop::collection::vec(2u32..5, 1..4), picks in prop::collection::vec(any::<usize>(), 0..3)) {
        let g = AbGroup::new(&orders).unwrap();
        let gens: Vec<usize> = picks.iter().map(|&x| x % g.size()).collect();
        let s = Subgroup::generated(&g, &gens).unwrap();
        prop_assert!(gens.iter().all(|&x| s.contains(x)));
        prop_assert_eq!(g.size() % s.order(), 0);
        let q = quotient(&Subgroup::whole(&g), &s).unwrap();
        prop_assert_eq!(q.group.size() * s.order(), g.size());
        let text: Vec<String> = gens.iter().map(|&x| g.fmt_elem(x)).collect();
        if !text.is_empty() {
            prop_assert_eq!(parse_elements(&g, &text.join(";")).unwrap(), gens);
        }
        if g.size() <= 27 {
            let subs = enumerate_subgroups(&g).unwrap();
            prop_assert!(subs.contains(&s));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn criterion_agrees_with_definition(seed in 1000u64..1_000_000) {
        let c = random_g_algebra(seed).unwrap();
        prop_assert_eq!(galois_criterion(&c).unwrap().verdict, is_galois_extension(&c).verdict);
    }

    #[test]
    fn documents_round_trip(seed in 1000u64..1_000_000) {
        let c = random_g_algebra(seed).unwrap();
        let j = algebra_json(&c.alg);
        prop_assert_eq!(&algebra_json(&algebra_from_json(&j).unwrap()), &j);
        let doc = galgebra_doc(&c);
        let text = serde_json::to_string(&doc).unwrap();
        let back: AlgebraDoc = serde_json::from_str(&text).unwrap();
        let c2 = back.galgebra().unwrap().unwrap();
        prop_assert_eq!(galgebra_doc(&c2), doc);
    }

    #[test]
    fn invariant_survives_basis_change(pick in any::<usize>(), seed in any::<u64>()) {
        let f = field_create(3, 1).unwrap();
        let g = AbGroup::new(&[4, 2]).unwrap();
        let ps = enumerate_simple_galois(&f, &g).unwrap();
        let c = construct_simple_galois(&ps[pick % ps.len()]).unwrap().galg;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_invertible(&f, c.dim(), &mut rng);
        let moved = change_basis(&c, &p).unwrap();
        prop_assert_eq!(psi_invariant(&moved).unwrap(), psi_invariant(&c).unwrap());
    }
}
