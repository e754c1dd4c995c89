//! Integer helpers and dense polynomial arithmetic over GF(p) used to find
//! defining polynomials.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division, primes ascending with multiplicity.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut r = 1u64;
    let mut b = b % m;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    r
}

/// a*b mod f over GF(p); f monic, constant term first.
pub(crate) fn mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let m = f.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (m..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for i in 0..m {
            prod[k - m + i] = (prod[k - m + i] + (p - c) * f[i]) % p;
        }
    }
    prod.truncate(m);
    prod.resize(m, 0);
    prod
}

/// x^k mod f over GF(p).
pub(crate) fn powmod_x(mut k: u64, f: &[u64], p: u64) -> Vec<u64> {
    let m = f.len() - 1;
    let mut result = vec![0u64; m];
    result[0] = 1;
    let mut base = vec![0u64; m];
    if m == 1 {
        base[0] = (p - f[0]) % p;
    } else {
        base[1] = 1;
    }
    while k > 0 {
        if k & 1 == 1 {
            result = mulmod(&result, &base, f, p);
        }
        base = mulmod(&base, &base, f, p);
        k >>= 1;
    }
    result
}

fn is_one(v: &[u64]) -> bool {
    v[0] == 1 && v[1..].iter().all(|&c| c == 0)
}

/// The class of x generates the unit group of GF(p)[x]/(f). This forces f to be
/// irreducible: a reducible quotient has fewer than p^m - 1 units.
pub fn is_primitive(p: u32, f: &[u32]) -> bool {
    let p = p as u64;
    let m = f.len() - 1;
    if m == 0 || f[0] == 0 {
        return false;
    }
    let f: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let q = p.pow(m as u32);
    let n = q - 1;
    if !is_one(&powmod_x(n, &f, p)) {
        return false;
    }
    factor_u64(n).iter().all(|&(r, _)| !is_one(&powmod_x(n / r, &f, p)))
}

/// Least primitive monic polynomial of degree m, comparing coefficient
/// sequences constant term first, among those accepted by `filter`.
pub(crate) fn least_primitive(p: u32, m: u32, mut filter: impl FnMut(&[u32]) -> bool) -> Option<Vec<u32>> {
    let total = (p as u64).pow(m);
    for t in 0..total {
        // c0 is the most significant digit of t
        let mut coeffs = vec![0u32; m as usize + 1];
        let mut r = t;
        for i in (0..m as usize).rev() {
            coeffs[i] = (r % p as u64) as u32;
            r /= p as u64;
        }
        coeffs[m as usize] = 1;
        if coeffs[0] == 0 {
            continue;
        }
        if is_primitive(p, &coeffs) && filter(&coeffs) {
            return Some(coeffs);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_small() {
        assert_eq!(factor_u64(80), vec![(2, 4), (5, 1)]);
        assert_eq!(factor_u64(1), vec![]);
        assert_eq!(factor_u64(97), vec![(97, 1)]);
    }

    #[test]
    fn primitive_checks() {
        assert!(is_primitive(3, &[2, 1, 1]));
        assert!(!is_primitive(3, &[1, 0, 1])); // x^2+1 has root of order 4
        assert!(!is_primitive(3, &[1, 2, 1])); // (x+1)^2
        assert!(is_primitive(2, &[1, 1, 0, 1]));
    }
}
