//! Finite abelian groups Z/d_1 x ... x Z/d_r with elements encoded as
//! mixed-radix indices (first coordinate most significant, so index order is
//! lexicographic order on tuples).

pub(crate) mod bichar;

pub use bichar::{
    all_alternating, bichar_orbit_reps, characters, Bicharacter, Character, SymplecticBasis,
};

use crate::error::{Error, Result};
use crate::gf::{factor_u64, gcd, lcm};
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

pub const MAX_MATERIALIZE: usize = 1 << 12;
pub const MAX_ENUMERATE: usize = 256;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AbGroup {
    orders: Vec<u32>,
    strides: Vec<usize>,
    size: usize,
}

impl fmt::Debug for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "1");
        }
        let s: Vec<String> = self.orders.iter().map(|d| format!("Z/{}", d)).collect();
        write!(f, "{}", s.join("x"))
    }
}

impl AbGroup {
    pub fn new(orders: &[u32]) -> Result<AbGroup> {
        if orders.contains(&0) {
            return Err(Error::Invalid("cyclic factor of order 0".into()));
        }
        let mut size: usize = 1;
        for &d in orders {
            size = size.checked_mul(d as usize).filter(|&s| s <= 1 << 20).ok_or_else(|| {
                Error::SizeCap("group too large".into())
            })?;
        }
        let mut strides = vec![1usize; orders.len()];
        for i in (0..orders.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * orders[i + 1] as usize;
        }
        Ok(AbGroup { orders: orders.to_vec(), strides, size })
    }

    pub fn trivial() -> AbGroup {
        AbGroup::new(&[]).unwrap()
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }
    pub fn size(&self) -> usize {
        self.size
    }
    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn coords(&self, x: usize) -> Vec<u32> {
        self.orders.iter().zip(&self.strides).map(|(&d, &s)| ((x / s) % d as usize) as u32).collect()
    }

    #[inline]
    pub fn coord(&self, x: usize, i: usize) -> u32 {
        ((x / self.strides[i]) % self.orders[i] as usize) as u32
    }

    /// Index of a tuple, reducing each entry modulo its order.
    pub fn index(&self, c: &[i64]) -> usize {
        self.orders
            .iter()
            .zip(&self.strides)
            .zip(c)
            .map(|((&d, &s), &ci)| ci.rem_euclid(d as i64) as usize * s)
            .sum()
    }

    pub fn index_u(&self, c: &[u32]) -> usize {
        self.orders.iter().zip(&self.strides).zip(c).map(|((&d, &s), &ci)| (ci % d) as usize * s).sum()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        let mut r = 0;
        for (&d, &s) in self.orders.iter().zip(&self.strides) {
            let d = d as usize;
            let x = (a / s) % d + (b / s) % d;
            r += if x >= d { x - d } else { x } * s;
        }
        r
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        let mut r = 0;
        for (&d, &s) in self.orders.iter().zip(&self.strides) {
            let d = d as usize;
            let x = (a / s) % d;
            r += if x == 0 { 0 } else { d - x } * s;
        }
        r
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, k: i64, a: usize) -> usize {
        let mut r = 0;
        for (&d, &s) in self.orders.iter().zip(&self.strides) {
            let x = ((a / s) % d as usize) as i64;
            r += ((x * k).rem_euclid(d as i64)) as usize * s;
        }
        r
    }

    pub fn order_of(&self, a: usize) -> u32 {
        let mut o = 1u64;
        for (&d, &s) in self.orders.iter().zip(&self.strides) {
            let x = ((a / s) % d as usize) as u64;
            o = lcm(o, d as u64 / gcd(x, d as u64));
        }
        o as u32
    }

    pub fn exponent(&self) -> u32 {
        self.orders.iter().fold(1u64, |a, &d| lcm(a, d as u64)) as u32
    }

    /// Unit-vector generators, one per cyclic factor (in user order).
    pub fn gens(&self) -> Vec<usize> {
        self.strides.clone()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    /// Invariant factors d_1 | d_2 | ... (trivial factors dropped).
    pub fn invariant_factors(&self) -> Vec<u32> {
        invariant_factors_from_orders(&self.orders)
    }

    pub fn fmt_elem(&self, a: usize) -> String {
        let c: Vec<String> = self.coords(a).iter().map(|x| x.to_string()).collect();
        format!("({})", c.join(","))
    }

    /// Lexicographic-friendly key used to pick "nice" generators: fewest
    /// nonzero coordinates, then earliest first nonzero coordinate, then index.
    fn gen_key(&self, a: usize) -> (usize, usize, usize) {
        let c = self.coords(a);
        let supp = c.iter().filter(|&&x| x != 0).count();
        let first = c.iter().position(|&x| x != 0).unwrap_or(usize::MAX);
        (supp, first, a)
    }
}

fn invariant_factors_from_orders(orders: &[u32]) -> Vec<u32> {
    // split into prime powers, then recombine largest-first per prime
    let mut per_prime: std::collections::BTreeMap<u64, Vec<u32>> = Default::default();
    for &d in orders {
        for (p, e) in factor_u64(d as u64) {
            per_prime.entry(p).or_default().push(e);
        }
    }
    invariant_factors_from_exponents(&per_prime)
}

fn invariant_factors_from_exponents(per_prime: &std::collections::BTreeMap<u64, Vec<u32>>) -> Vec<u32> {
    let r = per_prime.values().map(|v| v.len()).max().unwrap_or(0);
    let mut out = vec![1u64; r];
    for (&p, exps) in per_prime {
        let mut e = exps.clone();
        e.sort_unstable();
        // largest exponents go to the last factors
        for (k, &x) in e.iter().rev().enumerate() {
            out[r - 1 - k] *= p.pow(x);
        }
    }
    out.into_iter().map(|x| x as u32).collect()
}

/// Parse "d1xd2x..." ("1" is the trivial group).
pub fn parse_group_spec(s: &str) -> Result<AbGroup> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty group spec".into()));
    }
    let mut orders = Vec::new();
    for part in s.split(['x', 'X', '*']) {
        let d: u32 = part.trim().parse().map_err(|_| Error::Parse(format!("bad group spec '{}'", s)))?;
        if d == 0 {
            return Err(Error::Parse("cyclic factor of order 0".into()));
        }
        if d > 1 {
            orders.push(d);
        }
    }
    AbGroup::new(&orders)
}

/// Parse "(a,b);(c,d)" into element indices of g.
pub fn parse_elements(g: &AbGroup, s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(vec![]);
    }
    s.split(';')
        .map(|t| {
            let t = t.trim().trim_start_matches('(').trim_end_matches(')');
            let c: Vec<i64> = if t.trim().is_empty() {
                vec![]
            } else {
                t.split(',')
                    .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad element '{}'", t))))
                    .collect::<Result<_>>()?
            };
            if c.len() != g.rank() {
                return Err(Error::Parse(format!("element '{}' has wrong length for {:?}", t, g)));
            }
            Ok(g.index(&c))
        })
        .collect()
}

struct SubgroupData {
    parent: AbGroup,
    gens: Vec<usize>,
    elems: Vec<usize>,
    pos: Vec<u32>,
    basis: Vec<usize>,
    basis_orders: Vec<u32>,
    /// basis coordinates of each member, aligned with `elems`
    basis_coords: Vec<Vec<u32>>,
}

/// A subgroup with materialized, sorted elements and a fixed basis.
#[derive(Clone)]
pub struct Subgroup(Arc<SubgroupData>);

impl PartialEq for Subgroup {
    fn eq(&self, o: &Self) -> bool {
        self.0.parent == o.0.parent && self.0.elems == o.0.elems
    }
}
impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.0.elems.hash(h)
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.0.elems.iter().map(|&x| self.0.parent.fmt_elem(x)).collect();
        write!(f, "<{}>", e.join(" "))
    }
}

impl Subgroup {
    pub fn generated(parent: &AbGroup, gens: &[usize]) -> Result<Subgroup> {
        if parent.size() > MAX_MATERIALIZE {
            return Err(Error::SizeCap(format!("|G| = {} exceeds {}", parent.size(), MAX_MATERIALIZE)));
        }
        let mut member = vec![false; parent.size()];
        member[0] = true;
        let mut elems = vec![0usize];
        for &g in gens {
            if g >= parent.size() {
                return Err(Error::Invalid("generator outside the group".into()));
            }
            if member[g] {
                continue;
            }
            // S + <g>
            let cur = elems.clone();
            let mut m = g;
            while !member[m] {
                for &s in &cur {
                    let x = parent.add(s, m);
                    if !member[x] {
                        member[x] = true;
                        elems.push(x);
                    }
                }
                m = parent.add(m, g);
            }
        }
        elems.sort_unstable();
        Ok(Self::from_sorted(parent, gens.to_vec(), elems))
    }

    fn from_sorted(parent: &AbGroup, gens: Vec<usize>, elems: Vec<usize>) -> Subgroup {
        let mut pos = vec![u32::MAX; parent.size()];
        for (i, &e) in elems.iter().enumerate() {
            pos[e] = i as u32;
        }
        let (basis, basis_orders) = find_basis(parent, &elems, &pos);
        let basis_coords = coordinates(parent, &elems, &pos, &basis, &basis_orders);
        Subgroup(Arc::new(SubgroupData { parent: parent.clone(), gens, elems, pos, basis, basis_orders, basis_coords }))
    }

    pub fn whole(g: &AbGroup) -> Subgroup {
        Self::from_sorted(g, g.gens(), g.elements().collect())
    }

    pub fn trivial(g: &AbGroup) -> Subgroup {
        Self::from_sorted(g, vec![], vec![0])
    }

    pub fn parent(&self) -> &AbGroup {
        &self.0.parent
    }
    pub fn elems(&self) -> &[usize] {
        &self.0.elems
    }
    pub fn gens(&self) -> &[usize] {
        &self.0.gens
    }
    pub fn order(&self) -> usize {
        self.0.elems.len()
    }
    pub fn contains(&self, x: usize) -> bool {
        self.0.pos[x] != u32::MAX
    }
    /// Position of a member in `elems`.
    pub fn pos(&self, x: usize) -> Option<usize> {
        let p = self.0.pos[x];
        (p != u32::MAX).then_some(p as usize)
    }
    /// The fixed basis a_1..a_m (parent indices) of this subgroup.
    pub fn basis(&self) -> &[usize] {
        &self.0.basis
    }
    pub fn basis_orders(&self) -> &[u32] {
        &self.0.basis_orders
    }
    /// Coordinates of a member with respect to the basis.
    pub fn basis_coords(&self, x: usize) -> &[u32] {
        &self.0.basis_coords[self.pos(x).expect("not a member")]
    }
    /// Member with the given basis coordinates.
    pub fn from_basis_coords(&self, c: &[u32]) -> usize {
        let g = self.parent();
        let mut acc = 0;
        for (&b, &ci) in self.0.basis.iter().zip(c) {
            acc = g.add(acc, g.mul(ci as i64, b));
        }
        acc
    }

    pub fn exponent(&self) -> u32 {
        self.0.basis_orders.iter().fold(1u64, |a, &d| lcm(a, d as u64)) as u32
    }

    pub fn invariant_factors(&self) -> Vec<u32> {
        invariant_factors_from_orders(&self.0.basis_orders)
    }

    pub fn is_subgroup_of(&self, o: &Subgroup) -> bool {
        self.parent() == o.parent() && self.elems().iter().all(|&x| o.contains(x))
    }

    /// The subgroup viewed as an abstract group with its basis as cyclic factors.
    pub fn as_abgroup(&self) -> AbGroup {
        AbGroup::new(&self.0.basis_orders).unwrap()
    }

    /// Map from abstract index (see `as_abgroup`) to the parent element.
    pub fn abstract_to_parent(&self, a: &AbGroup, i: usize) -> usize {
        let c = a.coords(i);
        self.from_basis_coords(&c)
    }
}

/// DFS for a basis of invariant-factor orders, largest order first, candidates
/// in `gen_key` order. Returned sorted by `gen_key`.
fn find_basis(parent: &AbGroup, elems: &[usize], pos: &[u32]) -> (Vec<usize>, Vec<u32>) {
    let n = elems.len();
    if n == 1 {
        return (vec![], vec![]);
    }
    let orders: Vec<u32> = elems.iter().map(|&x| parent.order_of(x)).collect();
    let inv = invariant_factors_of(&orders, n);
    let mut cands: Vec<usize> = (0..n).collect();
    cands.sort_by_key(|&i| parent.gen_key(elems[i]));
    let targets: Vec<u32> = inv.iter().rev().copied().collect();
    let mut chosen = Vec::new();
    let mut member = vec![false; n];
    member[0] = true;
    let ok = dfs_basis(parent, elems, pos, &orders, &cands, &targets, &mut chosen, &mut member);
    assert!(ok, "basis search failed");
    let mut basis: Vec<(usize, u32)> = chosen.iter().map(|&i| (elems[i], orders[i])).collect();
    basis.sort_by_key(|&(x, _)| parent.gen_key(x));
    (basis.iter().map(|b| b.0).collect(), basis.iter().map(|b| b.1).collect())
}

#[allow(clippy::too_many_arguments)]
fn dfs_basis(
    parent: &AbGroup,
    elems: &[usize],
    pos: &[u32],
    orders: &[u32],
    cands: &[usize],
    targets: &[u32],
    chosen: &mut Vec<usize>,
    member: &mut Vec<bool>,
) -> bool {
    let k = chosen.len();
    if k == targets.len() {
        return true;
    }
    let want = targets[k];
    let current: Vec<usize> = (0..elems.len()).filter(|&i| member[i]).collect();
    for &c in cands {
        if orders[c] != want || member[c] {
            continue;
        }
        // check independence: S ∩ <c> = 0
        let mut indep = true;
        let mut m = elems[c];
        for _ in 1..want {
            if member[pos[m] as usize] {
                indep = false;
                break;
            }
            m = parent.add(m, elems[c]);
        }
        if !indep {
            continue;
        }
        let saved = member.clone();
        let mut m = elems[c];
        for _ in 1..want {
            for &s in &current {
                let x = parent.add(elems[s], m);
                member[pos[x] as usize] = true;
            }
            m = parent.add(m, elems[c]);
        }
        chosen.push(c);
        if dfs_basis(parent, elems, pos, orders, cands, targets, chosen, member) {
            return true;
        }
        chosen.pop();
        *member = saved;
    }
    false
}

/// Invariant factors of a finite abelian group from its element orders.
fn invariant_factors_of(orders: &[u32], n: usize) -> Vec<u32> {
    let mut per_prime: std::collections::BTreeMap<u64, Vec<u32>> = Default::default();
    for (p, e) in factor_u64(n as u64) {
        // c_k = #{x : ord(x) | p^k} = p^{sum_i min(k, e_i)}
        let mut counts = vec![1u64];
        for k in 1..=e {
            let pk = p.pow(k);
            counts.push(orders.iter().filter(|&&o| pk % o as u64 == 0 || (o as u64) == 1).count() as u64);
        }
        // number of factors with e_i >= k is log_p(c_k / c_{k-1})
        let mut ge = Vec::new();
        for k in 1..=e as usize {
            let ratio = counts[k] / counts[k - 1];
            let mut t = 0;
            let mut r = ratio;
            while r > 1 {
                r /= p;
                t += 1;
            }
            ge.push(t);
        }
        let mut exps = Vec::new();
        for k in 1..=e as usize {
            let next = if k < e as usize { ge[k] } else { 0 };
            for _ in 0..(ge[k - 1] - next) {
                exps.push(k as u32);
            }
        }
        per_prime.insert(p, exps);
    }
    invariant_factors_from_exponents(&per_prime)
}

fn coordinates(parent: &AbGroup, elems: &[usize], pos: &[u32], basis: &[usize], orders: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new(); elems.len()];
    let total: usize = orders.iter().map(|&o| o as usize).product();
    debug_assert_eq!(total, elems.len());
    for t in 0..total {
        let mut c = vec![0u32; orders.len()];
        let mut r = t;
        for i in (0..orders.len()).rev() {
            c[i] = (r % orders[i] as usize) as u32;
            r /= orders[i] as usize;
        }
        let mut x = 0;
        for (&b, &ci) in basis.iter().zip(&c) {
            x = parent.add(x, parent.mul(ci as i64, b));
        }
        out[pos[x] as usize] = c;
    }
    out
}

/// A coset x + K with canonical (least) representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    pub sub: Subgroup,
    pub rep: usize,
}

impl Coset {
    pub fn new(sub: &Subgroup, x: usize) -> Coset {
        let g = sub.parent();
        let rep = sub.elems().iter().map(|&k| g.add(x, k)).min().unwrap();
        Coset { sub: sub.clone(), rep }
    }
    pub fn elems(&self) -> Vec<usize> {
        let g = self.sub.parent();
        let mut v: Vec<usize> = self.sub.elems().iter().map(|&k| g.add(self.rep, k)).collect();
        v.sort_unstable();
        v
    }
    pub fn contains(&self, x: usize) -> bool {
        self.sub.contains(self.sub.parent().sub(x, self.rep))
    }
}

/// Cosets of K inside the subgroup T (pass the whole group for G/K).
pub fn cosets(t: &Subgroup, k: &Subgroup) -> Vec<Coset> {
    let mut seen = vec![false; t.parent().size()];
    let mut out = Vec::new();
    for &x in t.elems() {
        if seen[x] {
            continue;
        }
        let c = Coset::new(k, x);
        for y in c.elems() {
            seen[y] = true;
        }
        out.push(c);
    }
    out
}

/// G_[N] = {g : N g = 0} as a subgroup of the given subgroup's parent,
/// intersected with `within`.
pub fn torsion(within: &Subgroup, n: u64) -> Subgroup {
    let g = within.parent();
    let elems: Vec<usize> = within.elems().iter().copied().filter(|&x| n.is_multiple_of(g.order_of(x) as u64)).collect();
    Subgroup::from_sorted(g, elems.clone(), elems)
}

/// T/H with a projection and the least-representative section.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: AbGroup,
    /// parent index -> quotient index (usize::MAX outside T)
    pub proj: Vec<usize>,
    /// quotient index -> least representative in T
    pub section: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, x: usize) -> usize {
        self.proj[x]
    }
    /// Image of a subgroup of T.
    pub fn image(&self, s: &Subgroup) -> Subgroup {
        let mut e: Vec<usize> = s.elems().iter().map(|&x| self.proj[x]).collect();
        e.sort_unstable();
        e.dedup();
        Subgroup::from_sorted(&self.group, e.clone(), e)
    }
}

pub fn quotient(t: &Subgroup, h: &Subgroup) -> Result<Quotient> {
    if !h.is_subgroup_of(t) {
        return Err(Error::Invalid("quotient by a non-subgroup".into()));
    }
    let g = t.parent();
    let cs = cosets(t, h);
    // coset group: index by position in cs; reps sorted ascending already
    let nq = cs.len();
    let mut which = vec![usize::MAX; g.size()];
    for (i, c) in cs.iter().enumerate() {
        for y in c.elems() {
            which[y] = i;
        }
    }
    let reps: Vec<usize> = cs.iter().map(|c| c.rep).collect();
    let add = |a: usize, b: usize| which[g.add(reps[a], reps[b])];
    let qorder = |a: usize| {
        let mut k = 1;
        let mut m = a;
        while m != 0 {
            m = add(m, a);
            k += 1;
        }
        k as u32
    };
    let orders: Vec<u32> = (0..nq).map(qorder).collect();
    let inv = invariant_factors_of(&orders, nq);
    let targets: Vec<u32> = inv.iter().rev().copied().collect();
    let mut cands: Vec<usize> = (0..nq).collect();
    cands.sort_by_key(|&i| g.gen_key(reps[i]));
    // DFS over the coset group
    fn dfs(
        add: &dyn Fn(usize, usize) -> usize,
        orders: &[u32],
        cands: &[usize],
        targets: &[u32],
        chosen: &mut Vec<usize>,
        member: &mut Vec<bool>,
    ) -> bool {
        let k = chosen.len();
        if k == targets.len() {
            return true;
        }
        let want = targets[k];
        let current: Vec<usize> = (0..member.len()).filter(|&i| member[i]).collect();
        for &c in cands {
            if orders[c] != want || member[c] {
                continue;
            }
            let mut indep = true;
            let mut m = c;
            for _ in 1..want {
                if member[m] {
                    indep = false;
                    break;
                }
                m = add(m, c);
            }
            if !indep {
                continue;
            }
            let saved = member.clone();
            let mut m = c;
            for _ in 1..want {
                for &s in &current {
                    member[add(s, m)] = true;
                }
                m = add(m, c);
            }
            chosen.push(c);
            if dfs(add, orders, cands, targets, chosen, member) {
                return true;
            }
            chosen.pop();
            *member = saved;
        }
        false
    }
    let mut chosen = Vec::new();
    let mut member = vec![false; nq];
    member[0] = true;
    if !dfs(&add, &orders, &cands, &targets, &mut chosen, &mut member) {
        return Err(Error::Internal("quotient basis search failed".into()));
    }
    chosen.sort_by_key(|&c| g.gen_key(reps[c]));
    let qorders: Vec<u32> = chosen.iter().map(|&c| orders[c]).collect();
    let q = AbGroup::new(&qorders)?;
    let mut coset_to_q = vec![0usize; nq];
    for qi in q.elements() {
        let c = q.coords(qi);
        let mut acc = 0usize;
        for (&b, &ci) in chosen.iter().zip(&c) {
            for _ in 0..ci {
                acc = add(acc, b);
            }
        }
        coset_to_q[acc] = qi;
    }
    let mut proj = vec![usize::MAX; g.size()];
    let mut section = vec![0usize; q.size()];
    for (ci, c) in cs.iter().enumerate() {
        let qi = coset_to_q[ci];
        section[qi] = c.rep;
        for y in c.elems() {
            proj[y] = qi;
        }
    }
    Ok(Quotient { group: q, proj, section })
}

/// All subgroups, sorted by (order, element set).
pub fn enumerate_subgroups(g: &AbGroup) -> Result<Vec<Subgroup>> {
    if g.size() > MAX_ENUMERATE {
        return Err(Error::SizeCap(format!("subgroup enumeration needs |G| <= {}", MAX_ENUMERATE)));
    }
    let n = g.size();
    let words = n.div_ceil(64);
    let to_bits = |elems: &[usize]| {
        let mut b = vec![0u64; words];
        for &e in elems {
            b[e / 64] |= 1 << (e % 64);
        }
        b
    };
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::new();
    let triv = vec![0usize];
    seen.insert(to_bits(&triv));
    queue.push_back(triv);
    while let Some(s) = queue.pop_front() {
        let bits = to_bits(&s);
        for x in 0..n {
            if bits[x / 64] >> (x % 64) & 1 == 1 {
                continue;
            }
            let mut member = vec![false; n];
            for &e in &s {
                member[e] = true;
            }
            let mut elems = s.clone();
            let mut m = x;
            while !member[m] {
                for &e in &s {
                    let y = g.add(e, m);
                    if !member[y] {
                        member[y] = true;
                        elems.push(y);
                    }
                }
                m = g.add(m, x);
            }
            elems.sort_unstable();
            let b = to_bits(&elems);
            if seen.insert(b) {
                queue.push_back(elems);
            }
        }
        found.push(s);
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(found.into_iter().map(|e| Subgroup::from_sorted(g, e.clone(), e)).collect())
}

/// K ≅ A x A: every prime-power cyclic factor appears an even number of times.
pub fn is_hyperbolic(k: &Subgroup) -> bool {
    let mut counts: std::collections::BTreeMap<(u64, u32), u32> = Default::default();
    for &d in k.basis_orders() {
        for (p, e) in factor_u64(d as u64) {
            *counts.entry((p, e)).or_default() += 1;
        }
    }
    counts.values().all(|&c| c % 2 == 0)
}

/// Is the quotient G/K cyclic? Returns the generating cosets if so.
pub fn generating_cosets(t: &Subgroup, k: &Subgroup) -> Vec<Coset> {
    let idx = t.order() / k.order();
    let g = t.parent();
    cosets(t, k)
        .into_iter()
        .filter(|c| {
            // order of the coset in T/K
            let mut m = c.rep;
            let mut ord = 1;
            while !k.contains(m) {
                m = g.add(m, c.rep);
                ord += 1;
            }
            ord == idx
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(o: &[u32]) -> AbGroup {
        AbGroup::new(o).unwrap()
    }

    #[test]
    fn generated_examples() {
        let z42 = g(&[4, 2]);
        let s = Subgroup::generated(&z42, &[z42.index(&[2, 1])]).unwrap();
        assert_eq!(s.elems(), &[0, z42.index(&[2, 1])]);
        assert_eq!(s.invariant_factors(), vec![2]);
        assert_eq!(Subgroup::generated(&z42, &[]).unwrap().order(), 1);
        assert_eq!(Subgroup::generated(&z42, &z42.gens()).unwrap().order(), 8);
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(enumerate_subgroups(&g(&[2, 2])).unwrap().len(), 5);
        assert_eq!(enumerate_subgroups(&g(&[4])).unwrap().len(), 3);
        assert_eq!(enumerate_subgroups(&g(&[7])).unwrap().len(), 2);
        assert_eq!(enumerate_subgroups(&g(&[2, 2, 2])).unwrap().len(), 16);
        assert_eq!(enumerate_subgroups(&g(&[3, 3])).unwrap().len(), 6);
        assert_eq!(enumerate_subgroups(&g(&[3, 3, 3])).unwrap().len(), 28);
    }

    #[test]
    fn torsion_quotient_cosets() {
        let z42 = g(&[4, 2]);
        let t = torsion(&Subgroup::whole(&z42), 2);
        let want: Vec<usize> = [[0, 0], [0, 1], [2, 0], [2, 1]].iter().map(|c| z42.index(c)).collect();
        assert_eq!(t.elems(), want.as_slice());
        assert_eq!(t.invariant_factors(), vec![2, 2]);
        assert_eq!(t.basis(), &[z42.index(&[2, 0]), z42.index(&[0, 1])]);

        let z4 = g(&[4]);
        let h = Subgroup::generated(&z4, &[2]).unwrap();
        let q = quotient(&Subgroup::whole(&z4), &h).unwrap();
        assert_eq!(q.group.orders(), &[2]);
        assert_eq!(q.section, vec![0, 1]);
        let cs = cosets(&Subgroup::whole(&z4), &h);
        assert_eq!(cs.iter().map(|c| c.rep).collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn hyperbolic() {
        let v = g(&[2, 2]);
        assert!(is_hyperbolic(&Subgroup::whole(&v)));
        assert!(!is_hyperbolic(&Subgroup::whole(&g(&[2]))));
        assert!(!is_hyperbolic(&Subgroup::whole(&g(&[4, 2]))));
        assert!(is_hyperbolic(&Subgroup::whole(&g(&[6, 6]))));
        assert!(is_hyperbolic(&Subgroup::whole(&g(&[2, 3, 2, 3]))));
    }

    #[test]
    fn whole_group_basis_is_user_generators() {
        let z24 = g(&[2, 4]);
        let w = Subgroup::whole(&z24);
        assert_eq!(w.basis(), &[z24.index(&[1, 0]), z24.index(&[0, 1])]);
        assert_eq!(w.basis_orders(), &[2, 4]);
        assert_eq!(z24.invariant_factors(), vec![2, 4]);
        assert_eq!(g(&[6, 4]).invariant_factors(), vec![2, 12]);
    }

    #[test]
    fn quotient_sizes_over_all_subgroups() {
        for orders in [vec![4u32, 2], vec![2, 2, 2], vec![3, 3], vec![8], vec![4, 4]] {
            let gg = g(&orders);
            let whole = Subgroup::whole(&gg);
            for h in enumerate_subgroups(&gg).unwrap() {
                let q = quotient(&whole, &h).unwrap();
                assert_eq!(q.group.size() * h.order(), gg.size());
                for x in gg.elements() {
                    for y in gg.elements() {
                        assert_eq!(q.project(gg.add(x, y)), q.group.add(q.project(x), q.project(y)));
                    }
                }
                for (qi, &s) in q.section.iter().enumerate() {
                    assert_eq!(q.project(s), qi);
                }
            }
        }
    }
}
