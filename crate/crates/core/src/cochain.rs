//! 1- and 2-cochains for a finite abelian group acting on L^x through a
//! surjection onto Gal(L/F), and the explicit maps between them.

use crate::abgroup::{AbGroup, Bicharacter, Character, Coset, Subgroup};
use crate::error::{Error, Result};
use crate::gf::{gcd, Elt, Field, Tower};
use std::collections::HashSet;

/// G acting on L = tower.top() through theta: G -> Z/n, g -> sigma^{theta(g)},
/// where sigma is x -> x^{|F|}, with kernel K and theta(t0) = 1.
#[derive(Clone, Debug)]
pub struct ActionSpec {
    pub tower: Tower,
    pub group: AbGroup,
    pub kernel: Subgroup,
    pub coset: Coset,
    theta: Vec<u32>,
}

impl ActionSpec {
    pub fn new(tower: &Tower, group: &AbGroup, kernel: &Subgroup, coset: &Coset) -> Result<ActionSpec> {
        if kernel.parent() != group || coset.sub != *kernel {
            return Err(Error::Invalid("kernel and coset must live in the acting group".into()));
        }
        let n = (group.size() / kernel.order()) as u32;
        if n != tower.degree() {
            return Err(Error::Constraint(format!("[G:K] = {} but [L:F] = {}", n, tower.degree())));
        }
        let t0 = coset.rep;
        let mut theta = vec![u32::MAX; group.size()];
        let mut shift = 0usize;
        for j in 0..n {
            for &k in kernel.elems() {
                let g = group.add(k, shift);
                if theta[g] != u32::MAX {
                    return Err(Error::Constraint("coset does not generate G/K".into()));
                }
                theta[g] = j;
            }
            shift = group.add(shift, t0);
        }
        if !kernel.contains(shift) {
            return Err(Error::Constraint("coset does not generate G/K".into()));
        }
        Ok(ActionSpec { tower: tower.clone(), group: group.clone(), kernel: kernel.clone(), coset: coset.clone(), theta })
    }

    pub fn t0(&self) -> usize {
        self.coset.rep
    }
    pub fn n(&self) -> u32 {
        self.tower.degree()
    }
    pub fn top(&self) -> &Field {
        self.tower.top()
    }
    pub fn base(&self) -> &Field {
        self.tower.base()
    }
    pub fn theta(&self, g: usize) -> u32 {
        self.theta[g]
    }
    pub fn sigma(&self, g: usize, x: Elt) -> Elt {
        self.tower.sigma(self.theta[g] as u64, x)
    }
}

/// A 1-cocycle G -> L^x, indexed by group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle1 {
    pub table: Vec<Elt>,
}

impl Cocycle1 {
    pub fn at(&self, g: usize) -> Elt {
        self.table[g]
    }

    pub fn is_cocycle(&self, a: &ActionSpec) -> bool {
        let g = &a.group;
        let l = a.top();
        if self.table.iter().any(|x| x.is_zero()) {
            return false;
        }
        g.elements().all(|x| {
            g.elements().all(|y| self.table[g.add(x, y)] == l.mul(self.table[x], a.sigma(x, self.table[y])))
        })
    }

    pub fn mul(&self, o: &Cocycle1, l: &Field) -> Cocycle1 {
        Cocycle1 { table: self.table.iter().zip(&o.table).map(|(&x, &y)| l.mul(x, y)).collect() }
    }

    pub fn div(&self, o: &Cocycle1, l: &Field) -> Cocycle1 {
        Cocycle1 { table: self.table.iter().zip(&o.table).map(|(&x, &y)| l.div(x, y).unwrap()).collect() }
    }
}

/// g -> sigma_g(l) / l
pub fn coboundary1(a: &ActionSpec, l: Elt) -> Result<Cocycle1> {
    if l.is_zero() {
        return Err(Error::ZeroInverse);
    }
    let top = a.top();
    let inv = top.inv(l)?;
    Ok(Cocycle1 { table: a.group.elements().map(|g| top.mul(a.sigma(g, l), inv)).collect() })
}

/// Product of sigma^i(x) for i < j.
fn twisted_power(a: &ActionSpec, x: Elt, j: u32) -> Elt {
    let top = a.top();
    (0..j).fold(Elt::ONE, |acc, i| top.mul(acc, a.tower.sigma(i as u64, x)))
}

/// The default value at t0 for extending lambda: w_L^j where lambda(t0^n) = w_F^j.
pub fn auto_mu0(a: &ActionSpec, lambda: &Character) -> Elt {
    let tn = a.group.mul(a.n() as i64, a.t0());
    match lambda.eval(tn).dlog() {
        Some(j) => Elt::from_dlog(j),
        None => unreachable!(),
    }
}

/// The unique 1-cocycle restricting to lambda on K and sending t0 to mu0
/// (the default rule when mu0 is None).
pub fn extend_character(a: &ActionSpec, lambda: &Character, mu0: Option<Elt>) -> Result<Cocycle1> {
    if lambda.group != a.kernel || lambda.field != *a.base() {
        return Err(Error::Invalid("character must be on K with values in F".into()));
    }
    let top = a.top();
    let mu0 = mu0.unwrap_or_else(|| auto_mu0(a, lambda));
    let tn = a.group.mul(a.n() as i64, a.t0());
    if a.tower.norm(mu0) != a.tower.embed(lambda.eval(tn)) {
        return Err(Error::Constraint("norm of mu0 differs from lambda(t0^n)".into()));
    }
    let mut table = vec![Elt::ZERO; a.group.size()];
    let mut shift = 0usize;
    for j in 0..a.n() {
        let v = twisted_power(a, mu0, j);
        for &k in a.kernel.elems() {
            table[a.group.add(k, shift)] = top.mul(a.tower.embed(lambda.eval(k)), v);
        }
        shift = a.group.add(shift, a.t0());
    }
    Ok(Cocycle1 { table })
}

/// f restricted to K, as a character into F^x.
pub fn restriction(a: &ActionSpec, f: &Cocycle1) -> Result<Character> {
    let dlogs = a
        .kernel
        .basis()
        .iter()
        .map(|&k| {
            let v = a.tower.restrict(f.at(k)).map_err(|_| Error::Constraint("restriction leaves F^x".into()))?;
            v.dlog().ok_or(Error::ZeroInverse)
        })
        .collect::<Result<Vec<u32>>>()?;
    Character::new(&a.kernel, a.base(), dlogs)
}

pub const MAX_H1_GROUP: usize = 16;
pub const MAX_H1_FIELD: u32 = 81;

/// Brute-force Z^1 enumeration, assembled from values on the generators.
pub fn z1(a: &ActionSpec) -> Result<Vec<Cocycle1>> {
    let g = &a.group;
    let top = a.top();
    if g.size() > MAX_H1_GROUP || top.q() > MAX_H1_FIELD {
        return Err(Error::SizeCap("Z^1 enumeration needs |G| <= 16 and |L| <= 81".into()));
    }
    let gens: Vec<usize> = g.gens().into_iter().filter(|&x| x != 0).collect();
    let gens_orders: Vec<u32> = gens.iter().map(|&x| g.order_of(x)).collect();
    // candidates per generator: f(d g) = prod_{t<d} sigma_g^t(f(g)) must be 1
    let cands: Vec<Vec<Elt>> = gens
        .iter()
        .zip(&gens_orders)
        .map(|(&x, &d)| {
            (0..top.units())
                .map(Elt::from_dlog)
                .filter(|&v| {
                    let mut acc = Elt::ONE;
                    let mut cur = v;
                    for _ in 0..d {
                        acc = top.mul(acc, cur);
                        cur = a.sigma(x, cur);
                    }
                    acc == Elt::ONE
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    if cands.iter().any(|c| c.is_empty()) {
        return Ok(out);
    }
    loop {
        let vals: Vec<Elt> = choice.iter().zip(&cands).map(|(&i, c)| c[i]).collect();
        let pair_ok = (0..gens.len()).all(|i| {
            (i + 1..gens.len()).all(|j| {
                top.mul(vals[i], a.sigma(gens[i], vals[j])) == top.mul(vals[j], a.sigma(gens[j], vals[i]))
            })
        });
        if pair_ok {
            let f = assemble(a, &gens, &vals);
            if f.is_cocycle(a) {
                out.push(f);
            }
        }
        // odometer
        let mut i = gens.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < cands[i].len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// Spread generator values over G using f(x + g_i) = f(x) sigma_x(f(g_i)).
fn assemble(a: &ActionSpec, gens: &[usize], vals: &[Elt]) -> Cocycle1 {
    let g = &a.group;
    let top = a.top();
    let mut table = vec![Elt::ZERO; g.size()];
    table[0] = Elt::ONE;
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for (&gi, &v) in gens.iter().zip(vals) {
            let y = g.add(x, gi);
            if table[y].is_zero() {
                table[y] = top.mul(table[x], a.sigma(x, v));
                frontier.push(y);
            }
        }
    }
    Cocycle1 { table }
}

pub fn b1(a: &ActionSpec) -> Vec<Cocycle1> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for l in 0..a.top().units() {
        let c = coboundary1(a, Elt::from_dlog(l)).unwrap();
        if seen.insert(c.table.clone()) {
            out.push(c);
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct H1 {
    pub size: usize,
    pub z1: usize,
    pub b1: usize,
    pub reps: Vec<Cocycle1>,
}

pub fn h1(a: &ActionSpec) -> Result<H1> {
    let z = z1(a)?;
    let b = b1(a);
    let top = a.top();
    let mut covered: HashSet<Vec<Elt>> = HashSet::new();
    let mut reps = Vec::new();
    for f in &z {
        if covered.contains(&f.table) {
            continue;
        }
        for c in &b {
            covered.insert(f.mul(c, top).table);
        }
        reps.push(f.clone());
    }
    if z.len() % b.len() != 0 || reps.len() * b.len() != z.len() {
        return Err(Error::Internal("B^1 does not divide Z^1".into()));
    }
    Ok(H1 { size: reps.len(), z1: z.len(), b1: b.len(), reps })
}

/// A 2-cochain K x K -> field^x indexed by member positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle2 {
    pub domain: Subgroup,
    pub field: Field,
    pub table: Vec<Elt>,
}

impl Cocycle2 {
    pub fn from_fn(domain: &Subgroup, field: &Field, f: impl Fn(usize, usize) -> Elt) -> Cocycle2 {
        let e = domain.elems();
        let mut table = Vec::with_capacity(e.len() * e.len());
        for &x in e {
            for &y in e {
                table.push(f(x, y));
            }
        }
        Cocycle2 { domain: domain.clone(), field: field.clone(), table }
    }

    pub fn trivial(domain: &Subgroup, field: &Field) -> Cocycle2 {
        Self::from_fn(domain, field, |_, _| Elt::ONE)
    }

    pub fn at(&self, x: usize, y: usize) -> Elt {
        let n = self.domain.order();
        self.table[self.domain.pos(x).unwrap() * n + self.domain.pos(y).unwrap()]
    }

    pub fn is_cocycle(&self) -> bool {
        let e = self.domain.elems();
        let g = self.domain.parent();
        let f = &self.field;
        if self.table.iter().any(|x| x.is_zero()) {
            return false;
        }
        e.iter().all(|&x| {
            e.iter().all(|&y| {
                e.iter().all(|&z| {
                    f.mul(self.at(x, y), self.at(g.add(x, y), z)) == f.mul(self.at(y, z), self.at(x, g.add(y, z)))
                })
            })
        })
    }

    pub fn is_symmetric(&self) -> bool {
        let e = self.domain.elems();
        e.iter().all(|&x| e.iter().all(|&y| self.at(x, y) == self.at(y, x)))
    }

    pub fn mul(&self, o: &Cocycle2) -> Cocycle2 {
        let f = &self.field;
        Cocycle2 {
            domain: self.domain.clone(),
            field: f.clone(),
            table: self.table.iter().zip(&o.table).map(|(&x, &y)| f.mul(x, y)).collect(),
        }
    }

    pub fn inverse(&self) -> Cocycle2 {
        let f = &self.field;
        Cocycle2 {
            domain: self.domain.clone(),
            field: f.clone(),
            table: self.table.iter().map(|&x| f.inv(x).unwrap()).collect(),
        }
    }

    /// Restriction to a subgroup of the domain.
    pub fn restrict(&self, sub: &Subgroup) -> Cocycle2 {
        Cocycle2::from_fn(sub, &self.field, |x, y| self.at(x, y))
    }

    /// Map every value through h (e.g. a field embedding or automorphism).
    pub fn map_values(&self, field: &Field, h: impl Fn(Elt) -> Elt) -> Cocycle2 {
        Cocycle2 { domain: self.domain.clone(), field: field.clone(), table: self.table.iter().map(|&x| h(x)).collect() }
    }
}

/// beta(x, y) = tau(x, y) / tau(y, x)
pub fn alt(tau: &Cocycle2) -> Result<Bicharacter> {
    let f = &tau.field;
    let basis = tau.domain.basis();
    let matrix = basis
        .iter()
        .map(|&x| {
            basis.iter().map(|&y| f.div(tau.at(x, y), tau.at(y, x)).map(|v| v.dlog().unwrap())).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Bicharacter::new(&tau.domain, f, matrix)
}

/// tau(x, y) = prod_{i<j} beta(a_i, a_j)^{x_i y_j}
pub fn upper_triangular_cocycle(beta: &Bicharacter) -> Cocycle2 {
    let k = &beta.group;
    let u = beta.field.units() as u64;
    let m = k.basis().len();
    Cocycle2::from_fn(k, &beta.field, |x, y| {
        let cx = k.basis_coords(x);
        let cy = k.basis_coords(y);
        let mut s = 0u64;
        for i in 0..m {
            for j in i + 1..m {
                s += cx[i] as u64 * cy[j] as u64 * beta.matrix[i][j] as u64;
            }
        }
        Elt::from_dlog((s % u) as u32)
    })
}

/// f_{k1} f_{k2} = d(tau(k1, k2)) f_{k1 k2} for all k1, k2 in K.
/// `f` is indexed by member position of tau's domain.
pub fn check_compat(a: &ActionSpec, f: &[Cocycle1], tau: &Cocycle2) -> bool {
    let k = &tau.domain;
    let top = a.top();
    let e = k.elems();
    e.iter().all(|&x| {
        e.iter().all(|&y| {
            let fx = &f[k.pos(x).unwrap()];
            let fy = &f[k.pos(y).unwrap()];
            let fxy = &f[k.pos(k.parent().add(x, y)).unwrap()];
            let d = coboundary1(a, tau.at(x, y)).unwrap();
            a.group.elements().all(|g| top.mul(fx.at(g), fy.at(g)) == top.mul(d.at(g), fxy.at(g)))
        })
    })
}

/// Symmetric 2-cocycle on the domain of chi_ext with values in F^x:
/// x^{1/N} y^{1/N} / (xy)^{1/N} applied to chi_ext values, N = |F^x|.
/// chi_ext takes values in the top field of `root`, whose base is F.
pub fn gamma_from_character(root: &Tower, chi_ext: &Character) -> Result<Cocycle2> {
    let m = root.top();
    if chi_ext.field != *m {
        return Err(Error::Invalid("extension must take values in the root tower's top field".into()));
    }
    let f = root.base();
    let n = f.units() as u64;
    let dom = &chi_ext.group;
    let roots: Vec<Elt> =
        dom.elems().iter().map(|&x| m.root_section(n, chi_ext.eval(x))).collect::<Result<Vec<_>>>()?;
    let g = dom.parent();
    let mut table = Vec::with_capacity(roots.len() * roots.len());
    for (i, &x) in dom.elems().iter().enumerate() {
        for (j, &y) in dom.elems().iter().enumerate() {
            let xy = dom.pos(g.add(x, y)).unwrap();
            let v = m.div(m.mul(roots[i], roots[j]), roots[xy])?;
            table.push(root.restrict(v).map_err(|_| Error::Internal("gamma value outside F".into()))?);
        }
    }
    Ok(Cocycle2 { domain: dom.clone(), field: f.clone(), table })
}

/// The same construction on K for a character into the root field,
/// representing a class in Hom(K, Fbar^x / F^x).
pub fn eta_from_character(root: &Tower, chi: &Character) -> Result<Cocycle2> {
    gamma_from_character(root, chi)
}

/// alpha(x1, x2) = lambda(s(x1) + s(x2) - s(x1 + x2)) on T/K, s the least-representative section.
pub fn connecting_alpha(q: &crate::abgroup::Quotient, lambda: &Character) -> Result<Cocycle2> {
    let t = q.group.clone();
    let whole = Subgroup::whole(&t);
    let g = lambda.group.parent();
    for (x, &s) in q.section.iter().enumerate() {
        if q.project(s) != x {
            return Err(Error::Invalid("section is not a section".into()));
        }
    }
    let mut table = Vec::new();
    for x in t.elements() {
        for y in t.elements() {
            let d = g.sub(g.add(q.section[x], q.section[y]), q.section[t.add(x, y)]);
            if !lambda.group.contains(d) {
                return Err(Error::Invalid("section defect outside K".into()));
            }
            table.push(lambda.eval(d));
        }
    }
    Ok(Cocycle2 { domain: whole, field: lambda.field.clone(), table })
}

/// Is tau a coboundary c(x) c(y) / c(x + y) with c valued in the given subfield
/// of tau's field? Searches c on the basis and propagates.
pub fn is_coboundary2(tau: &Cocycle2, sub: Option<&Tower>) -> bool {
    let f = &tau.field;
    let k = &tau.domain;
    let g = k.parent();
    let basis = k.basis();
    let values: Vec<Elt> = match sub {
        None => (0..f.units()).map(Elt::from_dlog).collect(),
        Some(t) => (0..t.base().units()).map(|d| t.embed(Elt::from_dlog(d))).collect(),
    };
    let c0 = tau.at(0, 0);
    let mut choice = vec![0usize; basis.len()];
    loop {
        // c(x + a_i) = c(x) c(a_i) / tau(x, a_i), seeded from c(0) = tau(0, 0)
        let mut c = vec![Elt::ZERO; g.size()];
        c[0] = c0;
        let mut frontier = vec![0usize];
        let mut ok = true;
        let mut base_vals = Vec::new();
        for (i, &a) in basis.iter().enumerate() {
            base_vals.push((a, values[choice[i]]));
        }
        // set generator values first
        for &(a, v) in &base_vals {
            if a != 0 {
                c[a] = v;
            }
        }
        let mut seen = vec![false; g.size()];
        seen[0] = true;
        while let Some(x) = frontier.pop() {
            for &(a, v) in &base_vals {
                let y = g.add(x, a);
                let val = f.div(f.mul(c[x], v), tau.at(x, a)).unwrap();
                if !seen[y] {
                    if x == 0 && c[y] != val {
                        ok = false;
                    }
                    c[y] = val;
                    seen[y] = true;
                    frontier.push(y);
                }
            }
        }
        if ok
            && k.elems().iter().all(|&x| {
                k.elems().iter().all(|&y| f.div(f.mul(c[x], c[y]), c[g.add(x, y)]).unwrap() == tau.at(x, y))
            })
        {
            return true;
        }
        let mut i = basis.len();
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < values.len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// |Hom(K, F^x)| = prod gcd(o_i, |F^x|)
pub fn hom_count(k: &Subgroup, f: &Field) -> usize {
    k.basis_orders().iter().map(|&o| gcd(o as u64, f.units() as u64) as usize).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroup::{characters, Coset};
    use crate::gf::field_create;

    fn spec(p: u64, e: u32, orders: &[u32], kgens: &[Vec<i64>], t0: &[i64]) -> ActionSpec {
        let g = AbGroup::new(orders).unwrap();
        let kg: Vec<usize> = kgens.iter().map(|c| g.index(c)).collect();
        let k = Subgroup::generated(&g, &kg).unwrap();
        let n = (g.size() / k.order()) as u32;
        let f = field_create(p, e).unwrap();
        let t = Tower::new(&f, n).unwrap();
        ActionSpec::new(&t, &g, &k, &Coset::new(&k, g.index(t0))).unwrap()
    }

    #[test]
    fn coboundary_of_generator() {
        let a = spec(3, 1, &[2], &[], &[1]);
        let d = coboundary1(&a, Elt::from_dlog(1)).unwrap();
        assert_eq!(d.at(1), Elt::from_dlog(2));
        let one = coboundary1(&a, a.tower.embed(a.base().from_int(2))).unwrap();
        assert!(one.table.iter().all(|&x| x == Elt::ONE));
    }

    #[test]
    fn extend_z4_over_gf9() {
        let a = spec(3, 1, &[4], &[vec![2]], &[1]);
        let lam = Character::new(&a.kernel, a.base(), vec![1]).unwrap();
        let f = extend_character(&a, &lam, None).unwrap();
        assert_eq!(f.at(1), Elt::from_dlog(1));
        assert_eq!(f.at(2), Elt::from_dlog(4));
        assert!(f.is_cocycle(&a));
        // oracle: the unique cocycle in Z^1 with the same restriction and value at t0
        let matches: Vec<_> = z1(&a)
            .unwrap()
            .into_iter()
            .filter(|c| c.at(2) == a.tower.embed(lam.eval(2)) && c.at(1) == Elt::from_dlog(1))
            .collect();
        assert_eq!(matches, vec![f.clone()]);
        assert_eq!(restriction(&a, &f).unwrap(), lam);
        assert!(extend_character(&a, &lam, Some(Elt::ONE)).is_err());
        let triv = extend_character(&a, &Character::trivial(&a.kernel, a.base()), None).unwrap();
        assert!(triv.table.iter().all(|&x| x == Elt::ONE));
    }

    #[test]
    fn h1_hand_values() {
        let a = spec(3, 1, &[4], &[vec![2]], &[1]);
        let h = h1(&a).unwrap();
        assert_eq!((h.size, h.z1, h.b1), (2, 8, 4));
        let b = spec(3, 1, &[2], &[], &[1]);
        let h = h1(&b).unwrap();
        assert_eq!((h.size, h.z1, h.b1), (1, 4, 4));
        let c = spec(3, 1, &[2, 2], &[vec![1, 0], vec![0, 1]], &[0, 0]);
        assert_eq!(h1(&c).unwrap().size, 4);
        let reps = h1(&a).unwrap().reps;
        let r0 = restriction(&a, &reps[0]).unwrap();
        let r1 = restriction(&a, &reps[1]).unwrap();
        assert_ne!(r0, r1);
    }

    #[test]
    fn upper_cocycle_and_alt() {
        let g = AbGroup::new(&[2, 2]).unwrap();
        let k = Subgroup::whole(&g);
        let f3 = field_create(3, 1).unwrap();
        let beta = Bicharacter::from_upper(&k, &f3, &[1]).unwrap();
        let tau = upper_triangular_cocycle(&beta);
        assert!(tau.is_cocycle());
        assert_eq!(alt(&tau).unwrap(), beta);
        for x in g.elements() {
            for y in g.elements() {
                let (cx, cy) = (g.coords(x), g.coords(y));
                let want = if cx[0] * cy[1] % 2 == 1 { f3.from_int(-1) } else { Elt::ONE };
                assert_eq!(tau.at(x, y), want);
            }
        }
        assert!(!tau.is_symmetric());
        assert!(alt(&Cocycle2::trivial(&k, &f3)).unwrap().is_trivial());
    }

    #[test]
    fn gamma_and_alpha_examples() {
        let f3 = field_create(3, 1).unwrap();
        let root = Tower::new(&f3, 2).unwrap();
        let g = AbGroup::new(&[2]).unwrap();
        let whole = Subgroup::whole(&g);
        // chi_ext(a) = -1, whose canonical square root is w_4
        let ext = Character::new(&whole, root.top(), vec![4]).unwrap();
        let gamma = gamma_from_character(&root, &ext).unwrap();
        assert_eq!(gamma.at(1, 1), f3.from_int(-1));
        assert!(gamma.is_cocycle() && gamma.is_symmetric());
        assert!(!is_coboundary2(&gamma, None));

        let z4 = AbGroup::new(&[4]).unwrap();
        let k = Subgroup::generated(&z4, &[2]).unwrap();
        let q = crate::abgroup::quotient(&Subgroup::whole(&z4), &k).unwrap();
        let lam = Character::new(&k, &f3, vec![1]).unwrap();
        let alpha = connecting_alpha(&q, &lam).unwrap();
        assert_eq!(alpha.at(1, 1), f3.from_int(-1));
        assert!(alpha.is_cocycle() && alpha.is_symmetric());
    }

    #[test]
    fn gamma_class_independent_of_extension() {
        // G = Z/4 over GF(3): G_[2] = <2>; extensions of chi(2) = -1 differ by characters
        let f3 = field_create(3, 1).unwrap();
        let root = Tower::new(&f3, 2).unwrap();
        let g = AbGroup::new(&[4]).unwrap();
        let whole = Subgroup::whole(&g);
        let exts: Vec<Character> = characters(&whole, root.top())
            .into_iter()
            .filter(|c| c.eval(2) == root.embed(f3.from_int(-1)))
            .collect();
        assert_eq!(exts.len(), 2);
        let g0 = gamma_from_character(&root, &exts[0]).unwrap();
        let g1 = gamma_from_character(&root, &exts[1]).unwrap();
        assert!(is_coboundary2(&g0.mul(&g1.inverse()), None));
    }
}
