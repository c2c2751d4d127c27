//! Arithmetic modulo word-sized primes, with Chinese remaindering and
//! rational reconstruction back to ℚ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Scalar;

/// The largest primes below `2^62`, in decreasing order.
pub const PRIMES: [u64; 48] = [
    4611686018427387847, 4611686018427387817, 4611686018427387787,
    4611686018427387761, 4611686018427387751, 4611686018427387737,
    4611686018427387733, 4611686018427387709, 4611686018427387701,
    4611686018427387631, 4611686018427387617, 4611686018427387587,
    4611686018427387461, 4611686018427387421, 4611686018427387409,
    4611686018427387329, 4611686018427387323, 4611686018427387301,
    4611686018427387271, 4611686018427387241, 4611686018427387139,
    4611686018427387131, 4611686018427387127, 4611686018427387113,
    4611686018427387091, 4611686018427387073, 4611686018427386981,
    4611686018427386923, 4611686018427386911, 4611686018427386903,
    4611686018427386897, 4611686018427386887, 4611686018427386707,
    4611686018427386663, 4611686018427386611, 4611686018427386551,
    4611686018427386471, 4611686018427386389, 4611686018427386351,
    4611686018427386329, 4611686018427386323, 4611686018427386309,
    4611686018427386287, 4611686018427386231, 4611686018427386207,
    4611686018427386203, 4611686018427386201, 4611686018427386081,
];

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub fn reduce(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

pub fn reduce_i64(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

/// Determinant by Gaussian elimination over `𝔽_p`.
pub fn det_mod(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut det = 1;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| m[i][k] != 0) else {
            return 0;
        };
        if piv != k {
            m.swap(piv, k);
            det = p - det;
        }
        det = mul_mod(det, m[k][k], p);
        let inv = inv_mod(m[k][k], p);
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest {
            let f = mul_mod(row[k], inv, p);
            if f == 0 {
                continue;
            }
            for j in k + 1..n {
                row[j] = sub_mod(row[j], mul_mod(f, pivot_row[j], p), p);
            }
        }
    }
    det % p
}

fn trim(mut c: Vec<u64>) -> Vec<u64> {
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

/// Coefficients (constant first) of the polynomial of degree `< ys.len()`
/// taking the value `ys[x]` at `x = 0, 1, …`.
pub fn interpolate_mod(ys: &[u64], p: u64) -> Vec<u64> {
    let n = ys.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        let inv = inv_mod(level as u64 % p, p);
        for i in (level..n).rev() {
            dd[i] = mul_mod(sub_mod(dd[i], dd[i - 1], p), inv, p);
        }
    }
    let mut c = vec![0u64; n];
    for i in (0..n).rev() {
        // c ← c·(x − i) + dd[i]
        let xi = i as u64 % p;
        let mut next = vec![0u64; n];
        for d in 0..n {
            if c[d] == 0 {
                continue;
            }
            if d + 1 < n {
                next[d + 1] = add_mod(next[d + 1], c[d], p);
            }
            next[d] = sub_mod(next[d], mul_mod(c[d], xi, p), p);
        }
        next[0] = add_mod(next[0], dd[i], p);
        c = next;
    }
    trim(c)
}

fn monic_mod(c: Vec<u64>, p: u64) -> Vec<u64> {
    let c = trim(c);
    match c.last() {
        None => c,
        Some(&l) => {
            let inv = inv_mod(l, p);
            c.into_iter().map(|x| mul_mod(x, inv, p)).collect()
        }
    }
}

/// Monic gcd over `𝔽_p`; the zero polynomial is the empty vector.
pub fn poly_gcd_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = monic_mod(a.to_vec(), p);
    let mut b = monic_mod(b.to_vec(), p);
    while !b.is_empty() {
        let db = b.len() - 1;
        while a.len() > db {
            let f = a[a.len() - 1];
            let shift = a.len() - 1 - db;
            for (d, &x) in b.iter().enumerate() {
                a[d + shift] = sub_mod(a[d + shift], mul_mod(f, x, p), p);
            }
            a = trim(a);
        }
        std::mem::swap(&mut a, &mut b);
        b = monic_mod(b, p);
    }
    a
}

/// The residue modulo `m·p` congruent to `a` mod `m` and `r` mod `p`.
pub fn crt(a: &BigInt, m: &BigInt, r: u64, p: u64) -> BigInt {
    let a_p = reduce(a, p);
    let m_p = reduce(m, p);
    let t = mul_mod(sub_mod(r % p, a_p, p), inv_mod(m_p, p), p);
    a + m * BigInt::from(t)
}

/// The fraction `u/v` with `u ≡ a v (mod m)` and `|u|, |v| ≤ √(m/2)`, if any.
pub fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<Scalar> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Scalar::from(r1) / Scalar::from(t1))
}
