//! Exact linear algebra over the scalar ring `Q[q, q^-1]`.
//!
//! The ring is Euclidean with the exponent span as size (monomials are
//! units), so linear systems are solved *in the ring* by a Hermite-style
//! column reduction: an invertible sequence of column operations brings
//! the matrix to echelon form, pivot rows are solved by exact division,
//! and the accumulated transform converts back.  Pivot counting gives the
//! rank; the transform columns over zero columns give a kernel basis with
//! Laurent entries.

use super::scalar::LaurentScalar;
use num_rational::BigRational;

fn span(s: &LaurentScalar) -> i64 {
    let (lo, hi) = s.degree_span().expect("span of nonzero scalar");
    hi - lo
}

fn leading(s: &LaurentScalar) -> (i64, BigRational) {
    let (k, c) = s
        .coeffs()
        .iter()
        .next_back()
        .expect("leading term of nonzero scalar");
    (*k, c.clone())
}

/// Division with remainder: `a = quot * b + rem` where the exponent span
/// of `rem` is strictly smaller than that of `b` (or `rem` is zero).
pub fn divmod(a: &LaurentScalar, b: &LaurentScalar) -> (LaurentScalar, LaurentScalar) {
    assert!(!b.is_zero(), "division by zero scalar");
    let bspan = span(b);
    let (bk, bc) = leading(b);
    let mut rem = a.clone();
    let mut quot = LaurentScalar::zero();
    while !rem.is_zero() && span(&rem) >= bspan {
        let (rk, rc) = leading(&rem);
        let mono = LaurentScalar::term(rk - bk, rc / &bc);
        rem -= &(&mono * b);
        quot += &mono;
    }
    (quot, rem)
}

/// Canonical form: primitive integer coefficients, positive leading
/// coefficient, lowest exponent zero.
fn canonical(s: &LaurentScalar) -> LaurentScalar {
    match s.content() {
        None => LaurentScalar::zero(),
        Some(c) => s.div_exact(&c).expect("content divides"),
    }
}

pub fn gcd(a: &LaurentScalar, b: &LaurentScalar) -> LaurentScalar {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    while !r1.is_zero() {
        let (_, r) = divmod(&r0, &r1);
        r0 = r1;
        r1 = r;
    }
    canonical(&r0)
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g` and `g`
/// canonical.
pub fn extended_gcd(
    a: &LaurentScalar,
    b: &LaurentScalar,
) -> (LaurentScalar, LaurentScalar, LaurentScalar) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = LaurentScalar::one();
    let mut s1 = LaurentScalar::zero();
    let mut t0 = LaurentScalar::zero();
    let mut t1 = LaurentScalar::one();
    while !r1.is_zero() {
        let (q, r) = divmod(&r0, &r1);
        let s2 = &s0 - &(&q * &s1);
        let t2 = &t0 - &(&q * &t1);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if r0.is_zero() {
        return (LaurentScalar::zero(), LaurentScalar::zero(), LaurentScalar::zero());
    }
    // Scale by the unit that makes the gcd canonical.
    let c = r0.content().expect("nonzero");
    let inv = unit_inverse(&c);
    (
        r0.div_exact(&c).expect("content divides"),
        &s0 * &inv,
        &t0 * &inv,
    )
}

/// Inverse of a unit `c q^k`.
fn unit_inverse(u: &LaurentScalar) -> LaurentScalar {
    let (k, c) = u.as_monomial().expect("unit must be a monomial");
    LaurentScalar::term(-k, c.recip())
}

/// Dense row-major matrix over the Laurent ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<LaurentScalar>,
}

impl LMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LMat {
            rows,
            cols,
            data: vec![LaurentScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = LMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, LaurentScalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentScalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        LMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &LaurentScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentScalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mat_vec(&self, x: &[LaurentScalar]) -> Vec<LaurentScalar> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = LaurentScalar::zero();
                for j in 0..self.cols {
                    let a = self.at(i, j);
                    if !a.is_zero() && !x[j].is_zero() {
                        acc += &(a * &x[j]);
                    }
                }
                acc
            })
            .collect()
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn scale_col(&mut self, j: usize, u: &LaurentScalar) {
        for i in 0..self.rows {
            let v = self.at(i, j) * u;
            self.set(i, j, v);
        }
    }

    /// `col_j -= f * col_c`.
    fn col_sub_mul(&mut self, j: usize, c: usize, f: &LaurentScalar) {
        for i in 0..self.rows {
            let v = self.at(i, j) - &(f * self.at(i, c));
            self.set(i, j, v);
        }
    }

    /// `(col_c, col_j) <- (s col_c + t col_j, va col_j - vb col_c)`.
    fn col_pair_transform(
        &mut self,
        c: usize,
        j: usize,
        s: &LaurentScalar,
        t: &LaurentScalar,
        va: &LaurentScalar,
        vb: &LaurentScalar,
    ) {
        for i in 0..self.rows {
            let x = self.at(i, c).clone();
            let y = self.at(i, j).clone();
            self.set(i, c, &(s * &x) + &(t * &y));
            self.set(i, j, &(va * &y) - &(vb * &x));
        }
    }
}

pub struct Hermite {
    pub h: LMat,
    pub u: LMat,
    /// `(row, col)` of each pivot, in increasing row and column order.
    pub pivots: Vec<(usize, usize)>,
}

/// Column-style Hermite reduction: returns `h = a * u` in column echelon
/// form with `u` invertible over the ring.
pub fn hermite(a: &LMat) -> Hermite {
    let mut h = a.clone();
    let mut u = LMat::identity(a.cols);
    let mut pivots = Vec::new();
    let mut c = 0usize;
    for r in 0..a.rows {
        if c == a.cols {
            break;
        }
        let Some(j0) = (c..a.cols).find(|&j| !h.at(r, j).is_zero()) else {
            continue;
        };
        h.swap_cols(c, j0);
        u.swap_cols(c, j0);
        for j in c + 1..a.cols {
            if h.at(r, j).is_zero() {
                continue;
            }
            let pa = h.at(r, c).clone();
            let pb = h.at(r, j).clone();
            if let Some(f) = pb.div_exact(&pa) {
                h.col_sub_mul(j, c, &f);
                u.col_sub_mul(j, c, &f);
                continue;
            }
            let (g, s, t) = extended_gcd(&pa, &pb);
            let va = pa.div_exact(&g).expect("gcd divides");
            let vb = pb.div_exact(&g).expect("gcd divides");
            // The pair transform has determinant s va + t vb = 1, hence the
            // accumulated u stays invertible.
            h.col_pair_transform(c, j, &s, &t, &va, &vb);
            u.col_pair_transform(c, j, &s, &t, &va, &vb);
        }
        // Unit-normalise the pivot column to tame coefficient growth.
        if let Some(ct) = h.at(r, c).content() {
            let inv = unit_inverse(&ct);
            h.scale_col(c, &inv);
            u.scale_col(c, &inv);
        }
        pivots.push((r, c));
        c += 1;
    }
    Hermite { h, u, pivots }
}

pub fn rank(a: &LMat) -> usize {
    hermite(a).pivots.len()
}

/// Solve `a x = b` for `x` with entries in the ring; `None` when no such
/// solution exists (inconsistent, or solvable only with denominators).
pub fn solve_in_ring(a: &LMat, b: &[LaurentScalar]) -> Option<Vec<LaurentScalar>> {
    assert_eq!(b.len(), a.rows);
    let hm = hermite(a);
    let mut y = vec![LaurentScalar::zero(); a.cols];
    for &(r, j) in &hm.pivots {
        let mut resid = b[r].clone();
        for (j2, yv) in y.iter().enumerate().take(j) {
            let hv = hm.h.at(r, j2);
            if !hv.is_zero() && !yv.is_zero() {
                resid -= &(hv * yv);
            }
        }
        y[j] = resid.div_exact(hm.h.at(r, j))?;
    }
    // Non-pivot rows must be satisfied too.
    if hm.h.mat_vec(&y) != b {
        return None;
    }
    Some(hm.u.mat_vec(&y))
}

/// Basis of `{x : a x = 0}` with Laurent entries, one vector per
/// non-pivot column, each divided by the gcd of its entries.
pub fn ring_kernel(a: &LMat) -> Vec<Vec<LaurentScalar>> {
    let hm = hermite(a);
    let pivot_cols: Vec<usize> = hm.pivots.iter().map(|&(_, c)| c).collect();
    let mut out = Vec::new();
    for j in 0..a.cols {
        if pivot_cols.contains(&j) {
            continue;
        }
        let mut v: Vec<LaurentScalar> = (0..a.cols).map(|i| hm.u.at(i, j).clone()).collect();
        let mut g = LaurentScalar::zero();
        for e in &v {
            g = gcd(&g, e);
        }
        if !g.is_zero() && !g.is_one() {
            for e in &mut v {
                *e = e.div_exact(&g).expect("gcd divides");
            }
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> LaurentScalar {
        LaurentScalar::q_pow(k)
    }

    fn int(n: i64) -> LaurentScalar {
        LaurentScalar::from_int(n)
    }

    #[test]
    fn divmod_and_gcd() {
        // (q^2 - 1) = (q + 1)(q - 1); gcd with q^2 - q = q(q - 1) is q - 1.
        let a = q(2) - int(1);
        let b = q(2) - q(1);
        let g = gcd(&a, &b);
        assert_eq!(g, q(1) - int(1));
        let (g2, s, t) = extended_gcd(&a, &b);
        assert_eq!(g2, g);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        // Remainders have smaller span.
        let (qt, r) = divmod(&a, &b);
        assert_eq!(&(&qt * &b) + &r, a);
    }

    #[test]
    fn gcd_with_units_is_canonical() {
        // gcd(q^-3 (q-1), 2 q^5 (q-1)) = q - 1 after unit normalisation.
        let a = &q(-3) * &(q(1) - int(1));
        let b = &(q(5) + q(5)) * &(q(1) - int(1));
        assert_eq!(gcd(&a, &b), q(1) - int(1));
    }

    #[test]
    fn solve_small_system() {
        // x1 + q x2 = 1 + q, (q^2 - 1) x2 = q^2 - 1  =>  x = (1, 1).
        let a = LMat::from_rows(vec![
            vec![int(1), q(1)],
            vec![int(0), q(2) - int(1)],
        ]);
        let b = vec![int(1) + q(1), q(2) - int(1)];
        let x = solve_in_ring(&a, &b).expect("solvable");
        assert_eq!(a.mat_vec(&x), b);
        assert_eq!(x, vec![int(1), int(1)]);
    }

    #[test]
    fn monomial_pivots_invert() {
        // q x = 1 has the Laurent solution q^-1.
        let a = LMat::from_rows(vec![vec![q(1)]]);
        let x = solve_in_ring(&a, &[int(1)]).unwrap();
        assert_eq!(x, vec![q(-1)]);
    }

    #[test]
    fn non_unit_pivot_blocks_ring_solution() {
        // (q - 1) x = 1 has no Laurent solution.
        let a = LMat::from_rows(vec![vec![q(1) - int(1)]]);
        assert!(solve_in_ring(&a, &[int(1)]).is_none());
        // ... but (q - 1) x = q^2 - 1 does.
        let x = solve_in_ring(&a, &[q(2) - int(1)]).unwrap();
        assert_eq!(x, vec![q(1) + int(1)]);
    }

    #[test]
    fn inconsistent_system_is_rejected() {
        let a = LMat::from_rows(vec![vec![int(1)], vec![int(1)]]);
        assert!(solve_in_ring(&a, &[int(1), int(2)]).is_none());
    }

    #[test]
    fn kernel_and_rank() {
        let a = LMat::from_rows(vec![vec![int(1), q(1)]]);
        let k = ring_kernel(&a);
        assert_eq!(k.len(), 1);
        assert_eq!(a.mat_vec(&k[0]), vec![LaurentScalar::zero()]);
        assert_eq!(rank(&a), 1);

        let b = LMat::from_rows(vec![
            vec![int(1), int(1)],
            vec![int(1), int(1)],
        ]);
        assert_eq!(rank(&b), 1);
        let kb = ring_kernel(&b);
        assert_eq!(kb.len(), 1);
        assert_eq!(
            b.mat_vec(&kb[0]),
            vec![LaurentScalar::zero(), LaurentScalar::zero()]
        );
    }

    #[test]
    fn random_consistency() {
        // A fixed 3x4 system with a known solution stays solvable and the
        // returned solution reproduces the right-hand side exactly.
        let a = LMat::from_rows(vec![
            vec![q(1), int(1), q(-1), int(0)],
            vec![int(0), q(2) - int(1), int(1), q(1)],
            vec![int(2), int(0), q(3), q(-2)],
        ]);
        let x0 = vec![int(1), q(1), -q(2), int(3)];
        let b = a.mat_vec(&x0);
        let x = solve_in_ring(&a, &b).expect("consistent by construction");
        assert_eq!(a.mat_vec(&x), b);
    }
}
