//! Univariate polynomials over ℚ, enough for pencil determinants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Scalar;

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::new(vec![c])
    }

    /// `x - r`.
    pub fn linear_root(r: &Scalar) -> Self {
        Poly::new(vec![-r, Scalar::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().recip();
        Poly::new(self.coeffs.iter().map(|c| c * &inv).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_mul(a, b);
            }
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_default();
                    let b = other.coeffs.get(i).cloned().unwrap_or_default();
                    a - b
                })
                .collect(),
        )
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let inv = divisor.leading().recip();
        let mut quot = vec![Scalar::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] * &inv;
            if !q.is_zero() {
                let f = -&q;
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j].add_mul(&f, d);
                }
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            // keep coefficient growth in check
            b = r.primitive_part();
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Scalar::from_int(i as i64))
                .collect(),
        )
    }

    /// Product of the distinct irreducible factors (characteristic 0).
    pub fn square_free(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Integer polynomial with coprime coefficients and positive leading
    /// coefficient, proportional to `self`.
    pub fn integer_primitive(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let l = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom()));
        let mut ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !g.is_zero() {
            for c in &mut ints {
                *c /= &g;
            }
        }
        if ints.last().is_some_and(|c| c.is_negative()) {
            for c in &mut ints {
                *c = -&*c;
            }
        }
        ints
    }

    fn primitive_part(&self) -> Poly {
        Poly::new(self.integer_primitive().into_iter().map(Scalar::from).collect())
    }

    /// Newton interpolation through `(xs[i], ys[i])`.
    pub fn interpolate(xs: &[Scalar], ys: &[Scalar]) -> Poly {
        assert_eq!(xs.len(), ys.len());
        let n = xs.len();
        let mut dd = ys.to_vec();
        for level in 1..n {
            for i in (level..n).rev() {
                dd[i] = &(&dd[i] - &dd[i - 1]) / &(&xs[i] - &xs[i - level]);
            }
        }
        let mut p = Poly::constant(dd[n - 1].clone());
        for i in (0..n.saturating_sub(1)).rev() {
            p = p.mul(&Poly::linear_root(&xs[i]));
            let mut c = p.coeffs.clone();
            if c.is_empty() {
                c.push(Scalar::zero());
            }
            c[0] += &dd[i];
            p = Poly::new(c);
        }
        p
    }

    /// Rational roots (distinct, ascending) and the degree of the remaining
    /// factor without rational roots. `None` if a coefficient is too large to
    /// enumerate divisors of.
    pub fn rational_roots(&self) -> Option<(Vec<Scalar>, usize)> {
        if self.is_zero() {
            return Some((Vec::new(), 0));
        }
        let mut p = self.square_free();
        let mut roots = Vec::new();
        if p.coeffs.first().is_some_and(Scalar::is_zero) {
            roots.push(Scalar::zero());
            p = p.div_rem(&Poly::linear_root(&Scalar::zero())).0;
        }
        let ints = p.integer_primitive();
        let (Some(a0), Some(an)) = (ints.first(), ints.last()) else {
            return Some((roots, 0));
        };
        let nums = divisors(a0)?;
        let dens = divisors(an)?;
        for q in &dens {
            for n in &nums {
                for sign in [1i64, -1] {
                    let cand = Scalar::from(BigInt::from(*n) * sign) / Scalar::from(BigInt::from(*q));
                    if !roots.contains(&cand) && p.eval(&cand).is_zero() {
                        roots.push(cand.clone());
                    }
                }
            }
        }
        let mut rest = p;
        for r in &roots {
            if !r.is_zero() {
                rest = rest.div_rem(&Poly::linear_root(r)).0;
            }
        }
        roots.sort();
        Some((roots, rest.degree().unwrap_or(0)))
    }
}

const DIVISOR_LIMIT: u128 = 1 << 100;
const TRIAL_LIMIT: u128 = 1 << 22;

fn divisors(n: &BigInt) -> Option<Vec<u128>> {
    let n = n.abs().to_u128()?;
    if n == 0 || n > DIVISOR_LIMIT {
        return None;
    }
    let mut primes: Vec<(u128, u32)> = Vec::new();
    let mut m = n;
    let mut d = 2u128;
    while d * d <= m {
        if d > TRIAL_LIMIT {
            return None;
        }
        if m % d == 0 {
            let mut e = 0;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            primes.push((d, e));
        }
        d += 1;
    }
    if m > 1 {
        primes.push((m, 1));
    }
    let mut out = vec![1u128];
    for (p, e) in primes {
        let prev = out.clone();
        let mut pk = 1u128;
        for _ in 0..e {
            pk *= p;
            out.extend(prev.iter().map(|x| x * pk));
        }
    }
    out.sort();
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    #[test]
    fn gcd_of_products() {
        // (x-1)^2 (x+2) and (x-1)(x-3)
        let a = p(&[1, -1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1]));
        let b = p(&[-1, 1]).mul(&p(&[-3, 1]));
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = p(&[3, 0, -2, 5]);
        let xs: Vec<Scalar> = (0..4).map(Scalar::from_int).collect();
        let ys: Vec<Scalar> = xs.iter().map(|x| f.eval(x)).collect();
        assert_eq!(Poly::interpolate(&xs, &ys), f);
    }

    #[test]
    fn rational_roots_with_irrational_remainder() {
        // (2x - 1)(x - 1)^3 (x^2 - 2) x
        let f = p(&[-1, 2])
            .mul(&p(&[-1, 1]))
            .mul(&p(&[-1, 1]))
            .mul(&p(&[-1, 1]))
            .mul(&p(&[-2, 0, 1]))
            .mul(&p(&[0, 1]));
        let (roots, rest) = f.rational_roots().unwrap();
        assert_eq!(roots, vec![Scalar::zero(), Scalar::new(1, 2), Scalar::one()]);
        assert_eq!(rest, 2);
    }
}
