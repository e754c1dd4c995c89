//! Dense exact linear algebra over a `Field`.

use crate::gf::{Elt, Field};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Elt>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Elt::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Elt::ONE;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Elt>], cols: usize) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            m.data[i * cols..(i + 1) * cols].copy_from_slice(&r[..cols]);
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<Elt>], rows: usize) -> Matrix {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..rows {
                m.data[i * cols.len() + j] = c[i];
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elt {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Elt> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, f: &Field, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows);
        let mut r = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let orow = o.row(k);
                let rrow = &mut r.data[i * o.cols..(i + 1) * o.cols];
                for (x, &b) in rrow.iter_mut().zip(orow) {
                    if !b.is_zero() {
                        *x = f.add(*x, f.mul(a, b));
                    }
                }
            }
        }
        r
    }

    pub fn apply(&self, f: &Field, v: &[Elt]) -> Vec<Elt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Elt::ZERO;
                for (a, &b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = f.add(acc, f.mul(*a, b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn sub(&self, f: &Field, o: &Matrix) -> Matrix {
        let data = self.data.iter().zip(&o.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn pow(&self, f: &Field, mut e: u64) -> Matrix {
        let mut r = Matrix::identity(self.rows);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(f, &b);
            }
            b = b.mul(f, &b);
            e >>= 1;
        }
        r
    }

    pub fn map(&self, g: impl Fn(Elt) -> Elt) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| g(x)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.rows)
    }
}

/// Reduce in place to reduced row echelon form; returns pivot columns.
pub fn rref(f: &Field, m: &mut Matrix) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    let cols = m.cols;
    for c in 0..cols {
        if r == m.rows {
            break;
        }
        let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
        if pr != r {
            for j in 0..cols {
                m.data.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(m.get(r, c)).unwrap();
        for j in c..cols {
            let v = m.get(r, j);
            m.set(r, j, f.mul(v, inv));
        }
        let pivot_row: Vec<Elt> = m.row(r)[c..].to_vec();
        for i in 0..m.rows {
            if i == r {
                continue;
            }
            let factor = m.get(i, c);
            if factor.is_zero() {
                continue;
            }
            let nf = f.neg(factor);
            let row = &mut m.data[i * cols + c..(i + 1) * cols];
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = f.add(*x, f.mul(nf, p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank via forward elimination only (cheaper than full rref).
pub fn rank(f: &Field, m: &Matrix) -> usize {
    let mut m = m.clone();
    let cols = m.cols;
    let mut r = 0;
    for c in 0..cols {
        if r == m.rows {
            break;
        }
        let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
        if pr != r {
            for j in 0..cols {
                m.data.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(m.get(r, c)).unwrap();
        let pivot_row: Vec<Elt> = m.row(r)[c..].to_vec();
        for i in r + 1..m.rows {
            let factor = m.get(i, c);
            if factor.is_zero() {
                continue;
            }
            let nf = f.neg(f.mul(factor, inv));
            let row = &mut m.data[i * cols + c..(i + 1) * cols];
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = f.add(*x, f.mul(nf, p));
                }
            }
        }
        r += 1;
    }
    r
}

/// Basis of {x : m x = 0}, one vector per free column (ascending), with a 1
/// in that free position.
pub fn nullspace(f: &Field, m: &Matrix) -> Vec<Vec<Elt>> {
    let mut a = m.clone();
    let pivots = rref(f, &mut a);
    let mut is_pivot = vec![false; a.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in 0..a.cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![Elt::ZERO; a.cols];
        v[free] = Elt::ONE;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(a.get(r, free));
        }
        out.push(v);
    }
    out
}

/// Some x with m x = b, if one exists.
pub fn solve(f: &Field, m: &Matrix, b: &[Elt]) -> Option<Vec<Elt>> {
    let mut aug = Matrix::zeros(m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug.set(i, j, m.get(i, j));
        }
        aug.set(i, m.cols, b[i]);
    }
    let pivots = rref(f, &mut aug);
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![Elt::ZERO; m.cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug.get(r, m.cols);
    }
    Some(x)
}

pub fn inverse(f: &Field, m: &Matrix) -> Option<Matrix> {
    let n = m.rows;
    if n != m.cols {
        return None;
    }
    let mut aug = Matrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j));
        }
        aug.set(i, n + i, Elt::ONE);
    }
    let pivots = rref(f, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let mut inv = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, aug.get(i, n + j));
        }
    }
    Some(inv)
}

/// A subspace held in reduced echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub dim: usize,
    pub rows: Vec<Vec<Elt>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn span(f: &Field, vectors: &[Vec<Elt>], dim: usize) -> Echelon {
        let mut m = Matrix::from_rows(vectors, dim);
        let pivots = rref(f, &mut m);
        let rows = (0..pivots.len()).map(|i| m.row(i).to_vec()).collect();
        Echelon { dim, rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Coordinates in the echelon basis, or None when v is outside the span.
    pub fn coords(&self, f: &Field, v: &[Elt]) -> Option<Vec<Elt>> {
        let c: Vec<Elt> = self.pivots.iter().map(|&p| v[p]).collect();
        let mut check = vec![Elt::ZERO; self.dim];
        for (ci, row) in c.iter().zip(&self.rows) {
            if ci.is_zero() {
                continue;
            }
            for (x, &r) in check.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = f.add(*x, f.mul(*ci, r));
                }
            }
        }
        if check == v {
            Some(c)
        } else {
            None
        }
    }

    pub fn contains(&self, f: &Field, v: &[Elt]) -> bool {
        self.coords(f, v).is_some()
    }
}

/// Linear combination sum c_i v_i.
pub fn combine(f: &Field, coeffs: &[Elt], vectors: &[Vec<Elt>], dim: usize) -> Vec<Elt> {
    let mut out = vec![Elt::ZERO; dim];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (x, &y) in out.iter_mut().zip(v) {
            if !y.is_zero() {
                *x = f.add(*x, f.mul(*c, y));
            }
        }
    }
    out
}

pub fn vec_add(f: &Field, a: &[Elt], b: &[Elt]) -> Vec<Elt> {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

pub fn vec_sub(f: &Field, a: &[Elt], b: &[Elt]) -> Vec<Elt> {
    a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect()
}

pub fn vec_scale(f: &Field, s: Elt, a: &[Elt]) -> Vec<Elt> {
    a.iter().map(|&x| f.mul(s, x)).collect()
}

pub fn is_zero_vec(a: &[Elt]) -> bool {
    a.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field_create;
    use rand::{Rng, SeedableRng};

    fn rand_matrix(f: &Field, r: usize, c: usize, rng: &mut impl Rng) -> Matrix {
        let mut m = Matrix::zeros(r, c);
        for x in m.data.iter_mut() {
            let k = rng.gen_range(0..f.q());
            *x = if k == 0 { Elt::ZERO } else { Elt::from_dlog(k - 1) };
        }
        m
    }

    #[test]
    fn inverse_and_nullspace() {
        let f = field_create(3, 2).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..30 {
            let m = rand_matrix(&f, 5, 5, &mut rng);
            let r = rank(&f, &m);
            let ns = nullspace(&f, &m);
            assert_eq!(r + ns.len(), 5);
            for v in &ns {
                assert!(is_zero_vec(&m.apply(&f, v)));
            }
            match inverse(&f, &m) {
                Some(inv) => {
                    assert_eq!(r, 5);
                    assert!(m.mul(&f, &inv).is_identity());
                }
                None => assert!(r < 5),
            }
        }
    }

    #[test]
    fn solve_consistent() {
        let f = field_create(5, 1).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for _ in 0..30 {
            let m = rand_matrix(&f, 4, 6, &mut rng);
            let x: Vec<Elt> = (0..6).map(|i| f.from_int(i * 3 + 1)).collect();
            let b = m.apply(&f, &x);
            let y = solve(&f, &m, &b).unwrap();
            assert_eq!(m.apply(&f, &y), b);
        }
    }
}
