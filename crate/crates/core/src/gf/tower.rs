use super::{check_size, field_create, prime, Elt, Field};
use crate::error::{Error, Result};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

struct TowerData {
    base: Field,
    top: Field,
    n: u32,
    index: u64,
    /// coordinates of w_L^k in the basis 1, w_L, ..., w_L^{n-1} over the base,
    /// row k (k = 0..|L^x|), then the zero element at the end
    coords: Vec<Elt>,
    /// minimal polynomial of w_L over the base, constant term first, monic
    minpoly: Vec<Elt>,
}

/// A pair F ⊆ L with [L:F] = n and w_L^{[L^x:F^x]} = w_F.
#[derive(Clone)]
pub struct Tower(Arc<TowerData>);

impl std::fmt::Debug for Tower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.top().name(), self.base().name())
    }
}

impl PartialEq for Tower {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.0, &o.0) || (self.base() == o.base() && self.top() == o.top())
    }
}
impl Eq for Tower {}

static TOWERS: Lazy<Mutex<HashMap<(u32, u32, u32), Tower>>> = Lazy::new(|| Mutex::new(HashMap::new()));

impl Tower {
    /// The tower over the canonical base GF(p^e) of relative degree n.
    ///
    /// When n > 1 the top field's defining polynomial is the least primitive
    /// one whose root w_L satisfies base.defpoly(w_L^index) = 0, so the
    /// embedding w_F -> w_L^index is a field homomorphism.
    pub fn new(base: &Field, n: u32) -> Result<Tower> {
        if n == 0 {
            return Err(Error::Invalid("relative degree must be positive".into()));
        }
        let key = (base.p(), base.m(), n);
        if let Some(t) = TOWERS.lock().unwrap().get(&key) {
            if t.base() == base {
                return Ok(t.clone());
            }
        }
        let t = Self::build(base, n)?;
        let mut cache = TOWERS.lock().unwrap();
        if *base == field_create(base.p() as u64, base.m())? {
            cache.entry(key).or_insert_with(|| t.clone());
        }
        Ok(t)
    }

    fn build(base: &Field, n: u32) -> Result<Tower> {
        let p = base.p();
        let e = base.m();
        let m = e * n;
        check_size(p as u64, m)?;
        let top = if n == 1 {
            base.clone()
        } else {
            let q_top = (p as u64).pow(m);
            let index = (q_top - 1) / (base.q() as u64 - 1);
            let bdef: Vec<u64> = base.defpoly().iter().map(|&c| c as u64).collect();
            let def = prime::least_primitive(p, m, |cand| {
                let f: Vec<u64> = cand.iter().map(|&c| c as u64).collect();
                let r = prime::powmod_x(index, &f, p as u64);
                // Horner evaluation of base.defpoly at r
                let mut acc = vec![0u64; m as usize];
                for &c in bdef.iter().rev() {
                    acc = prime::mulmod(&acc, &r, &f, p as u64);
                    acc[0] = (acc[0] + c) % p as u64;
                }
                acc.iter().all(|&c| c == 0)
            })
            .ok_or_else(|| Error::Internal("no compatible defining polynomial".into()))?;
            let canon = field_create(p as u64, m)?;
            if canon.defpoly() == def.as_slice() {
                canon
            } else {
                Field::build(p, def)
            }
        };
        let index = (top.units() / base.units()) as u64;
        let mut t = TowerData { base: base.clone(), top: top.clone(), n, index, coords: Vec::new(), minpoly: Vec::new() };
        t.minpoly = minpoly_of_generator(&t);
        t.coords = coordinate_table(&t);
        let tower = Tower(Arc::new(t));
        // sanity: embedding is additive on a generator pair
        let w = base.gen();
        let lhs = tower.embed(base.add(w, base.one()));
        let rhs = top.add(tower.embed(w), top.one());
        if lhs != rhs {
            return Err(Error::Internal("tower embedding is not additive".into()));
        }
        Ok(tower)
    }

    pub fn base(&self) -> &Field {
        &self.0.base
    }
    pub fn top(&self) -> &Field {
        &self.0.top
    }
    /// [L:F]
    pub fn degree(&self) -> u32 {
        self.0.n
    }
    /// [L^x : F^x]
    pub fn index(&self) -> u64 {
        self.0.index
    }
    /// Degree of the base over its prime field.
    pub fn e(&self) -> u32 {
        self.0.base.m()
    }

    pub fn embed(&self, x: Elt) -> Elt {
        match x.dlog() {
            None => Elt::ZERO,
            Some(d) => Elt::from_dlog((d as u64 * self.0.index) as u32),
        }
    }

    /// Inverse of `embed` on its image.
    pub fn restrict(&self, x: Elt) -> Result<Elt> {
        match x.dlog() {
            None => Ok(Elt::ZERO),
            Some(d) if (d as u64).is_multiple_of(self.0.index) => Ok(Elt::from_dlog((d as u64 / self.0.index) as u32)),
            Some(_) => Err(Error::Constraint("element does not lie in the base field".into())),
        }
    }

    pub fn in_base(&self, x: Elt) -> bool {
        x.dlog().is_none_or(|d| (d as u64).is_multiple_of(self.0.index))
    }

    /// x^{p^j} on the top field.
    pub fn frobenius(&self, j: u64, x: Elt) -> Elt {
        self.0.top.frobenius(j, x)
    }

    /// The generator of Gal(L/F) raised to the t-th power: x -> x^{|F|^t}.
    pub fn sigma(&self, t: u64, x: Elt) -> Elt {
        self.frobenius(self.e() as u64 * (t % self.0.n as u64), x)
    }

    /// N_{L/F}(x) = x^index, returned in the top field.
    pub fn norm(&self, x: Elt) -> Elt {
        self.0.top.pow_u(x, self.0.index)
    }

    /// Coordinates over the base in the basis 1, w_L, ..., w_L^{n-1}.
    pub fn coords(&self, x: Elt) -> &[Elt] {
        let n = self.0.n as usize;
        let row = match x.dlog() {
            None => self.0.top.units() as usize,
            Some(d) => d as usize,
        };
        &self.0.coords[row * n..(row + 1) * n]
    }

    pub fn from_coords(&self, c: &[Elt]) -> Elt {
        let top = &self.0.top;
        let mut acc = Elt::ZERO;
        for (j, &cj) in c.iter().enumerate() {
            if !cj.is_zero() {
                acc = top.add(acc, top.mul(self.embed(cj), Elt::from_dlog(j as u32 % top.units())));
            }
        }
        acc
    }

    /// Minimal polynomial of w_L over the base (monic, constant term first).
    pub fn minpoly(&self) -> &[Elt] {
        &self.0.minpoly
    }
}

fn minpoly_of_generator(t: &TowerData) -> Vec<Elt> {
    let top = &t.top;
    let qf = t.base.q() as u64;
    // prod_{i<n} (x - w^{qf^i}) computed in the top field
    let mut poly = vec![Elt::ONE];
    let mut root_exp = 1u64 % top.units() as u64;
    for _ in 0..t.n {
        let r = top.neg(Elt::from_dlog(root_exp as u32));
        let mut next = vec![Elt::ZERO; poly.len() + 1];
        for (i, &c) in poly.iter().enumerate() {
            next[i + 1] = top.add(next[i + 1], c);
            next[i] = top.add(next[i], top.mul(c, r));
        }
        poly = next;
        root_exp = root_exp * qf % top.units() as u64;
    }
    poly.into_iter()
        .map(|c| match c.dlog() {
            None => Elt::ZERO,
            Some(d) => Elt::from_dlog((d as u64 / t.index) as u32),
        })
        .collect()
}

fn coordinate_table(t: &TowerData) -> Vec<Elt> {
    let base = &t.base;
    let n = t.n as usize;
    let units = t.top.units() as usize;
    let mut table = Vec::with_capacity((units + 1) * n);
    let mut cur = vec![Elt::ZERO; n];
    cur[0] = Elt::ONE;
    for _ in 0..units {
        table.extend_from_slice(&cur);
        // multiply by w_L: shift and reduce with the minimal polynomial
        let top_c = cur[n - 1];
        for i in (1..n).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = Elt::ZERO;
        if !top_c.is_zero() {
            for i in 0..n {
                cur[i] = base.sub(cur[i], base.mul(top_c, t.minpoly[i]));
            }
        }
    }
    table.extend(std::iter::repeat_n(Elt::ZERO, n));
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf9_over_gf3() {
        let f3 = field_create(3, 1).unwrap();
        let t = Tower::new(&f3, 2).unwrap();
        assert_eq!(t.top().defpoly(), &[2, 1, 1]);
        assert_eq!(t.index(), 4);
        let w = t.top().gen();
        assert_eq!(t.norm(w), t.top().from_int(2));
        assert_eq!(t.frobenius(1, w), Elt::from_dlog(3));
        assert_eq!(t.frobenius(2, w), w);
        let fixed: Vec<_> = t.top().elements().filter(|&x| t.frobenius(1, x) == x).collect();
        assert_eq!(fixed.len(), 3);
        assert!(fixed.iter().all(|&x| t.in_base(x)));
    }

    #[test]
    fn coordinates_round_trip() {
        let f9 = field_create(3, 2).unwrap();
        let t = Tower::new(&f9, 2).unwrap();
        for x in t.top().elements() {
            assert_eq!(t.from_coords(t.coords(x)), x);
        }
    }

    #[test]
    fn embedding_is_homomorphism_for_several_towers() {
        for &(p, e, n) in &[(2u64, 1u32, 4u32), (2, 2, 2), (3, 1, 4), (5, 1, 2), (2, 2, 3), (3, 2, 2)] {
            let f = field_create(p, e).unwrap();
            let t = Tower::new(&f, n).unwrap();
            for x in f.elements() {
                for y in f.elements() {
                    assert_eq!(t.embed(f.add(x, y)), t.top().add(t.embed(x), t.embed(y)));
                    assert_eq!(t.embed(f.mul(x, y)), t.top().mul(t.embed(x), t.embed(y)));
                }
            }
            assert_eq!(t.top().order(Elt::from_dlog(t.index() as u32 % t.top().units())), Some(f.units()));
        }
    }
}
