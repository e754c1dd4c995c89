//! Characters and alternating bicharacters of a subgroup, valued in F^x.
//! Both are stored as discrete logs on the subgroup's fixed basis.

use super::Subgroup;
use crate::error::{Error, Result};
use crate::gf::{gcd, Elt, Field};

/// A homomorphism K -> F^x given by the dlogs of the basis images.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Character {
    pub group: Subgroup,
    pub field: Field,
    pub dlogs: Vec<u32>,
}

impl Character {
    pub fn new(group: &Subgroup, field: &Field, dlogs: Vec<u32>) -> Result<Character> {
        let u = field.units() as u64;
        if dlogs.len() != group.basis().len() {
            return Err(Error::Invalid("character needs one value per basis element".into()));
        }
        for (&d, &o) in dlogs.iter().zip(group.basis_orders()) {
            if d as u64 >= u.max(1) || !(d as u64 * o as u64).is_multiple_of(u) {
                return Err(Error::Invalid(format!("character value w^{} has order not dividing {}", d, o)));
            }
        }
        Ok(Character { group: group.clone(), field: field.clone(), dlogs })
    }

    pub fn trivial(group: &Subgroup, field: &Field) -> Character {
        Character { group: group.clone(), field: field.clone(), dlogs: vec![0; group.basis().len()] }
    }

    pub fn is_trivial(&self) -> bool {
        self.dlogs.iter().all(|&d| d == 0)
    }

    pub fn dlog_at(&self, k: usize) -> u32 {
        let u = self.field.units() as u64;
        let c = self.group.basis_coords(k);
        (c.iter().zip(&self.dlogs).map(|(&ci, &d)| ci as u64 * d as u64).sum::<u64>() % u) as u32
    }

    pub fn eval(&self, k: usize) -> Elt {
        Elt::from_dlog(self.dlog_at(k))
    }

    /// Compose with x -> x^{p^j}.
    pub fn frobenius(&self, j: u64) -> Character {
        let f = &self.field;
        let dlogs = self.dlogs.iter().map(|&d| f.frobenius(j, Elt::from_dlog(d)).raw()).collect();
        Character { group: self.group.clone(), field: f.clone(), dlogs }
    }
}

/// All characters K -> F^x, in lexicographic order of value dlogs.
pub fn characters(k: &Subgroup, f: &Field) -> Vec<Character> {
    let u = f.units() as u64;
    let choices: Vec<Vec<u32>> = k
        .basis_orders()
        .iter()
        .map(|&o| {
            let g = gcd(o as u64, u);
            (0..g).map(|t| (t * (u / g)) as u32).collect()
        })
        .collect();
    cartesian(&choices).into_iter().map(|dlogs| Character { group: k.clone(), field: f.clone(), dlogs }).collect()
}

pub(crate) fn cartesian(choices: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for c in choices {
        let mut next = Vec::with_capacity(out.len() * c.len());
        for prefix in &out {
            for &x in c {
                let mut v = prefix.clone();
                v.push(x);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// A bimultiplicative map K x K -> F^x, stored as dlogs on basis pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bicharacter {
    pub group: Subgroup,
    pub field: Field,
    /// matrix[i][j] = dlog beta(a_i, a_j)
    pub matrix: Vec<Vec<u32>>,
}

impl Bicharacter {
    pub fn new(group: &Subgroup, field: &Field, matrix: Vec<Vec<u32>>) -> Result<Bicharacter> {
        let m = group.basis().len();
        let u = field.units() as u64;
        if matrix.len() != m || matrix.iter().any(|r| r.len() != m) {
            return Err(Error::Invalid("bicharacter matrix has wrong shape".into()));
        }
        let ords = group.basis_orders();
        for i in 0..m {
            for j in 0..m {
                let d = matrix[i][j] as u64;
                let g = gcd(ords[i] as u64, ords[j] as u64);
                if d >= u.max(1) || !(d * g).is_multiple_of(u) {
                    return Err(Error::Invalid("bicharacter value has the wrong order".into()));
                }
            }
        }
        Ok(Bicharacter { group: group.clone(), field: field.clone(), matrix })
    }

    pub fn trivial(group: &Subgroup, field: &Field) -> Bicharacter {
        let m = group.basis().len();
        Bicharacter { group: group.clone(), field: field.clone(), matrix: vec![vec![0; m]; m] }
    }

    /// Alternating bicharacter from the upper triangle (i < j), row-major.
    pub fn from_upper(group: &Subgroup, field: &Field, upper: &[u32]) -> Result<Bicharacter> {
        let m = group.basis().len();
        let u = field.units();
        if upper.len() != m * m.saturating_sub(1) / 2 {
            return Err(Error::Invalid(format!("expected {} bicharacter entries", m * m.saturating_sub(1) / 2)));
        }
        let mut mat = vec![vec![0u32; m]; m];
        let mut it = upper.iter();
        for i in 0..m {
            for j in i + 1..m {
                let d = *it.next().unwrap() % u.max(1);
                mat[i][j] = d;
                mat[j][i] = (u - d) % u.max(1);
            }
        }
        Bicharacter::new(group, field, mat)
    }

    pub fn upper(&self) -> Vec<u32> {
        let m = self.matrix.len();
        let mut v = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                v.push(self.matrix[i][j]);
            }
        }
        v
    }

    pub fn dlog_at(&self, x: usize, y: usize) -> u32 {
        let u = self.field.units() as u64;
        let cx = self.group.basis_coords(x);
        let cy = self.group.basis_coords(y);
        let mut s = 0u64;
        for (i, &a) in cx.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in cy.iter().enumerate() {
                s += a as u64 * b as u64 * self.matrix[i][j] as u64;
            }
        }
        (s % u) as u32
    }

    pub fn eval(&self, x: usize, y: usize) -> Elt {
        Elt::from_dlog(self.dlog_at(x, y))
    }

    pub fn is_alternating(&self) -> bool {
        let m = self.matrix.len();
        let u = self.field.units();
        (0..m).all(|i| self.matrix[i][i] == 0)
            && (0..m).all(|i| (0..m).all(|j| (self.matrix[i][j] + self.matrix[j][i]).is_multiple_of(u.max(1))))
    }

    pub fn is_trivial(&self) -> bool {
        self.matrix.iter().flatten().all(|&d| d == 0)
    }

    /// {k : beta(k, K) = 1}
    pub fn radical(&self) -> Vec<usize> {
        let basis = self.group.basis();
        self.group.elems().iter().copied().filter(|&k| basis.iter().all(|&a| self.dlog_at(k, a) == 0)).collect()
    }

    pub fn is_nondegenerate(&self) -> Result<bool> {
        if !self.is_alternating() {
            return Err(Error::Invalid("bicharacter is not alternating".into()));
        }
        Ok(self.radical().len() == 1)
    }

    /// Compose with x -> x^{p^j}.
    pub fn frobenius(&self, j: u64) -> Bicharacter {
        let f = &self.field;
        let matrix =
            self.matrix.iter().map(|r| r.iter().map(|&d| f.frobenius(j, Elt::from_dlog(d)).raw()).collect()).collect();
        Bicharacter { group: self.group.clone(), field: f.clone(), matrix }
    }

    pub fn symplectic_basis(&self) -> Result<SymplecticBasis> {
        if !self.is_nondegenerate()? {
            return Err(Error::Constraint("bicharacter is degenerate".into()));
        }
        let g = self.group.parent();
        let u = self.field.units() as u64;
        let mut rest: Vec<usize> = self.group.elems().to_vec();
        let mut pairs = Vec::new();
        while rest.len() > 1 {
            let a = *rest.iter().max_by(|&&x, &&y| g.order_of(x).cmp(&g.order_of(y)).then(y.cmp(&x))).unwrap();
            let n = g.order_of(a);
            let b = *rest
                .iter()
                .find(|&&y| {
                    let d = self.dlog_at(a, y) as u64;
                    u / gcd(d, u) == n as u64
                })
                .ok_or_else(|| Error::Internal("no symplectic partner".into()))?;
            let zeta = self.eval(a, b);
            rest.retain(|&x| self.dlog_at(a, x) == 0 && self.dlog_at(b, x) == 0);
            pairs.push(SymplecticPair { a, b, order: n, zeta });
        }
        Ok(SymplecticBasis { pairs })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticPair {
    pub a: usize,
    pub b: usize,
    pub order: u32,
    pub zeta: Elt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticBasis {
    pub pairs: Vec<SymplecticPair>,
}

/// Every alternating bicharacter on K with values in F^x.
pub fn all_alternating(k: &Subgroup, f: &Field) -> Vec<Bicharacter> {
    let m = k.basis().len();
    let u = f.units() as u64;
    let ords = k.basis_orders();
    let mut choices = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let g = gcd(gcd(ords[i] as u64, ords[j] as u64), u);
            choices.push((0..g).map(|t| (t * (u / g)) as u32).collect::<Vec<u32>>());
        }
    }
    cartesian(&choices).into_iter().map(|up| Bicharacter::from_upper(k, f, &up).expect("valid entries")).collect()
}

/// One nondegenerate alternating bicharacter per orbit under Aut(F),
/// each the lexicographically least upper-triangle in its orbit.
pub fn bichar_orbit_reps(k: &Subgroup, f: &Field) -> Result<Vec<Bicharacter>> {
    if !super::is_hyperbolic(k) {
        return Err(Error::Constraint("subgroup is not of the form A x A".into()));
    }
    if !(f.units() as u64).is_multiple_of(k.exponent() as u64) {
        return Err(Error::Constraint(format!("exp(K) = {} does not divide |F^x|", k.exponent())));
    }
    let mut reps = Vec::new();
    for b in all_alternating(k, f) {
        if !b.is_nondegenerate()? {
            continue;
        }
        let up = b.upper();
        let least = (0..f.m() as u64).map(|j| b.frobenius(j).upper()).min().unwrap();
        if least == up {
            reps.push(b);
        }
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::super::{AbGroup, Subgroup};
    use super::*;
    use crate::gf::field_create;

    fn whole(o: &[u32]) -> Subgroup {
        Subgroup::whole(&AbGroup::new(o).unwrap())
    }

    #[test]
    fn klein_over_gf3() {
        let k = whole(&[2, 2]);
        let f3 = field_create(3, 1).unwrap();
        let b = Bicharacter::from_upper(&k, &f3, &[1]).unwrap();
        assert!(b.is_alternating());
        assert!(b.is_nondegenerate().unwrap());
        let sb = b.symplectic_basis().unwrap();
        assert_eq!(sb.pairs.len(), 1);
        assert_eq!(sb.pairs[0].order, 2);
        assert_eq!(sb.pairs[0].zeta, f3.from_int(-1));
        let reps = bichar_orbit_reps(&k, &f3).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].upper(), vec![1]);
        assert!(!Bicharacter::trivial(&k, &f3).is_nondegenerate().unwrap());
    }

    #[test]
    fn cyclic_is_degenerate() {
        let f5 = field_create(5, 1).unwrap();
        for b in all_alternating(&whole(&[4]), &f5) {
            assert!(b.is_trivial());
        }
    }

    #[test]
    fn trivial_group_has_one_rep() {
        let f = field_create(3, 1).unwrap();
        let reps = bichar_orbit_reps(&whole(&[]), &f).unwrap();
        assert_eq!(reps.len(), 1);
        assert!(reps[0].symplectic_basis().unwrap().pairs.is_empty());
    }

    #[test]
    fn z4_squared_over_gf9() {
        let f9 = field_create(3, 2).unwrap();
        let k = whole(&[4, 4]);
        let b = Bicharacter::from_upper(&k, &f9, &[2]).unwrap();
        let sb = b.symplectic_basis().unwrap();
        assert_eq!(sb.pairs.iter().map(|p| p.order).collect::<Vec<_>>(), vec![4]);
        // nondegenerate values: w^2 and w^6, swapped by Frobenius
        assert_eq!(bichar_orbit_reps(&k, &f9).unwrap().len(), 1);
    }

    #[test]
    fn characters_count() {
        let f3 = field_create(3, 1).unwrap();
        assert_eq!(characters(&whole(&[2, 2]), &f3).len(), 4);
        assert_eq!(characters(&whole(&[4]), &f3).len(), 2);
        let f9 = field_create(3, 2).unwrap();
        assert_eq!(characters(&whole(&[4, 2]), &f9).len(), 8);
    }
}
