//! Cross-checks against a naive dense solver written from scratch here: its
//! own `sl(n)` basis from matrix units, its own elimination over `BigRational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use current_lie::algebras::{AssocAlgebra, CurrentAlgebra, LieAlgebra};
use current_lie::derivations::{antiderivations, derivation_space, lambda_candidates, PencilFamily};
use current_lie::forms::{invariant_symmetric_forms, verify_h2_decomposition};
use current_lie::graded::graded_h2;

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Structure constants `c[i][j][k]` and optional degrees.
#[derive(Clone)]
struct Alg {
    n: usize,
    c: Vec<Vec<Vec<Q>>>,
    deg: Vec<u32>,
}

impl Alg {
    fn zero(n: usize) -> Self {
        Alg { n, c: vec![vec![vec![Q::zero(); n]; n]; n], deg: vec![0; n] }
    }
}

/// Traceless `n×n` matrices: `E_ab` for `a ≠ b`, then `E_kk − E_{k+1,k+1}`.
fn sl(n: usize) -> Alg {
    let mut basis: Vec<Vec<Vec<i64>>> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b {
                let mut m = vec![vec![0; n]; n];
                m[a][b] = 1;
                basis.push(m);
            }
        }
    }
    for k in 0..n - 1 {
        let mut m = vec![vec![0; n]; n];
        m[k][k] = 1;
        m[k + 1][k + 1] = -1;
        basis.push(m);
    }
    let coords = |m: &Vec<Vec<i64>>| -> Vec<i64> {
        let mut v = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b {
                    v.push(m[a][b]);
                }
            }
        }
        let mut acc = 0;
        for k in 0..n - 1 {
            acc += m[k][k];
            v.push(acc);
        }
        v
    };
    let mul = |x: &Vec<Vec<i64>>, y: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
        (0..n).map(|a| (0..n).map(|b| (0..n).map(|m| x[a][m] * y[m][b]).sum()).collect()).collect()
    };
    let d = basis.len();
    let mut alg = Alg::zero(d);
    for i in 0..d {
        for j in 0..d {
            let p = mul(&basis[i], &basis[j]);
            let r = mul(&basis[j], &basis[i]);
            let comm: Vec<Vec<i64>> = (0..n).map(|a| (0..n).map(|b| p[a][b] - r[a][b]).collect()).collect();
            for (k, x) in coords(&comm).into_iter().enumerate() {
                alg.c[i][j][k] = q(x);
            }
        }
    }
    alg
}

/// `[x,y] = z` on `x, y, z`.
fn heis() -> Alg {
    let mut a = Alg::zero(3);
    a.c[0][1][2] = q(1);
    a.c[1][0][2] = q(-1);
    a
}

/// `tK[t]/(tⁿ)`, basis `t, …, t^{n-1}`.
fn tpoly(n: usize) -> Alg {
    let d = n - 1;
    let mut a = Alg::zero(d);
    for i in 0..d {
        a.deg[i] = i as u32 + 1;
        for j in 0..d {
            if i + j + 2 < n {
                a.c[i][j][i + j + 1] = q(1);
            }
        }
    }
    a
}

fn current(l: &Alg, a: &Alg) -> Alg {
    let n = l.n * a.n;
    let mut out = Alg::zero(n);
    for i in 0..l.n {
        for p in 0..a.n {
            out.deg[i * a.n + p] = a.deg[p];
            for j in 0..l.n {
                for r in 0..a.n {
                    for k in 0..l.n {
                        for s in 0..a.n {
                            let v = &l.c[i][j][k] * &a.c[p][r][s];
                            if !v.is_zero() {
                                out.c[i * a.n + p][j * a.n + r][k * a.n + s] += v;
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Rank by Gaussian elimination over ℚ.
fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let Some(cols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Q::one() / &rows[r][c];
        let pivot: Vec<Q> = rows[r].iter().map(|x| x * &inv).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

/// Maps with `D(x·y) = s (D(x)·y + x·D(y))`; unknown `D[l][m]` at `l·n + m`.
fn pencil_nullity(a: &Alg, s: Q) -> usize {
    let n = a.n;
    let mut rows = Vec::new();
    for x in 0..n {
        for y in x..n {
            for l in 0..n {
                let mut row = vec![Q::zero(); n * n];
                for m in 0..n {
                    row[l * n + m] += &a.c[x][y][m];
                    row[m * n + x] -= &s * &a.c[m][y][l];
                    row[m * n + y] -= &s * &a.c[x][m][l];
                }
                rows.push(row);
            }
        }
    }
    n * n - rank(rows)
}

/// `[D(x), y] = D([x, y])` for all `x, y`.
fn centroid_dim(a: &Alg) -> usize {
    let n = a.n;
    let mut rows = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for l in 0..n {
                let mut row = vec![Q::zero(); n * n];
                for m in 0..n {
                    row[m * n + x] += &a.c[m][y][l];
                    row[l * n + m] -= &a.c[x][y][m];
                }
                rows.push(row);
            }
        }
    }
    n * n - rank(rows)
}

fn pairs(a: &Alg, degree: Option<u32>) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..a.n {
        for j in i + 1..a.n {
            if degree.is_none_or(|d| a.deg[i] + a.deg[j] == d) {
                out.push((i, j));
            }
        }
    }
    out
}

/// `(dim Z², dim B²)` with trivial coefficients, optionally in one degree.
fn z2_b2(a: &Alg, degree: Option<u32>) -> (usize, usize) {
    let n = a.n;
    let ps = pairs(a, degree);
    let idx = |i: usize, j: usize| -> Option<(usize, Q)> {
        if i == j {
            return None;
        }
        let (u, v, s) = if i < j { (i, j, q(1)) } else { (j, i, q(-1)) };
        ps.iter().position(|&p| p == (u, v)).map(|k| (k, s))
    };
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if degree.is_some_and(|d| a.deg[i] + a.deg[j] + a.deg[k] != d) {
                    continue;
                }
                let mut row = vec![Q::zero(); ps.len()];
                for (x, y, z, sign) in [(i, j, k, 1), (i, k, j, -1), (j, k, i, 1)] {
                    for m in 0..n {
                        let c = &a.c[x][y][m];
                        if c.is_zero() {
                            continue;
                        }
                        if let Some((t, s)) = idx(m, z) {
                            row[t] += c * s * q(sign);
                        }
                    }
                }
                rows.push(row);
            }
        }
    }
    let z = ps.len() - rank(rows);
    let mut images = Vec::new();
    for m in 0..n {
        if degree.is_some_and(|d| a.deg[m] != d) {
            continue;
        }
        images.push(ps.iter().map(|&(i, j)| a.c[i][j][m].clone()).collect());
    }
    (z, rank(images))
}

/// Symmetric `φ` with `φ([x,y],z) = φ(x,[y,z])`.
fn invariant_sym_dim(a: &Alg) -> usize {
    let n = a.n;
    let sym = |i: usize, j: usize| if i <= j { i * n + j } else { j * n + i };
    let mut rows = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut row = vec![Q::zero(); n * n];
                for m in 0..n {
                    row[sym(m, z)] += &a.c[x][y][m];
                    row[sym(x, m)] -= &a.c[y][z][m];
                }
                rows.push(row);
            }
        }
    }
    let free = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).count();
    free - rank(rows)
}

fn crate_sl(n: usize) -> LieAlgebra {
    LieAlgebra::sl(n).unwrap()
}

fn crate_tpoly(n: usize) -> AssocAlgebra {
    AssocAlgebra::truncated_poly(n, false).unwrap()
}

#[test]
fn derivation_dims() {
    assert_eq!(pencil_nullity(&sl(2), q(1)), derivation_space(&crate_sl(2)).space_dim());
    assert_eq!(pencil_nullity(&sl(3), q(1)), derivation_space(&crate_sl(3)).space_dim());
    for n in 3..=4 {
        let c = CurrentAlgebra::new(&crate_sl(2), &crate_tpoly(n));
        assert_eq!(pencil_nullity(&current(&sl(2), &tpoly(n)), q(1)), derivation_space(c.algebra()).space_dim());
    }
}

#[test]
fn antiderivation_dims() {
    assert_eq!(pencil_nullity(&sl(2), q(-1)), 5);
    assert_eq!(antiderivations(&crate_sl(2)).space_dim(), 5);
    assert_eq!(pencil_nullity(&sl(3), q(-1)), 0);
    assert_eq!(antiderivations(&crate_sl(3)).space_dim(), 0);
}

#[test]
fn pencil_values_for_sl3() {
    let half = Q::new(BigInt::from(1), BigInt::from(2));
    let oracle = [(q(1), pencil_nullity(&sl(3), q(1))), (half.clone(), pencil_nullity(&sl(3), half))];
    assert_eq!((oracle[0].1, oracle[1].1), (8, 1));
    let found = lambda_candidates(&crate_sl(3), PencilFamily::DerivationLike, 0).unwrap();
    let got: Vec<(String, usize)> = found.lambdas().iter().map(|s| (s.lambda.to_string(), s.space.dim())).collect();
    assert_eq!(got, vec![("1/2".to_string(), 1), ("1".to_string(), 8)]);
}

#[test]
fn centroid_of_sl2() {
    assert_eq!(centroid_dim(&sl(2)), 1);
}

#[test]
fn cocycle_dims_of_current_algebras() {
    for (l, cl) in [(sl(2), crate_sl(2)), (heis(), LieAlgebra::heisenberg3())] {
        for n in 2..=4 {
            let (z, _) = z2_b2(&current(&l, &tpoly(n)), None);
            let r = verify_h2_decomposition(&cl, &crate_tpoly(n));
            assert_eq!(Some(z), r.dims.target.get("Z2").copied(), "{} tpoly:{n}", cl.name());
        }
    }
    let (z, b) = z2_b2(&sl(3), None);
    assert_eq!((z, b), (8, 8));
}

#[test]
fn invariant_form_dims_of_current_algebras() {
    for (l, cl) in [(sl(2), crate_sl(2)), (heis(), LieAlgebra::heisenberg3())] {
        for n in 2..=4 {
            let c = CurrentAlgebra::new(&cl, &crate_tpoly(n));
            let ours = invariant_symmetric_forms(c.algebra()).space.dim();
            assert_eq!(invariant_sym_dim(&current(&l, &tpoly(n))), ours, "{} tpoly:{n}", cl.name());
        }
    }
    assert_eq!(invariant_sym_dim(&current(&heis(), &tpoly(3))), 15);
}

#[test]
fn graded_h2_dims() {
    for d in 2..=5u32 {
        let (z, b) = z2_b2(&current(&sl(2), &tpoly(d as usize + 1)), Some(d));
        let g = graded_h2(&crate_sl(2), d).unwrap();
        assert_eq!((z, b, z - b), (g.z, g.b, g.h), "degree {d}");
    }
    for d in 2..=3u32 {
        let (z, b) = z2_b2(&current(&sl(3), &tpoly(d as usize + 1)), Some(d));
        assert_eq!(z - b, graded_h2(&crate_sl(3), d).unwrap().h);
    }
}
