//! Dense exact matrices over a catalog ring.
//!
//! Indices are 0-based throughout the library API.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix over {} {:?}", self.ring, self.to_strings())
    }
}

impl Matrix {
    pub fn new(ring: &Ring, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix {
            ring: ring.clone(),
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Matrix {
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            data: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Matrix {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.data[i * n + i] = ring.one();
        }
        m
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Elem>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_ints(ring: &Ring, rows: &[&[i64]]) -> Matrix {
        let data = rows
            .iter()
            .map(|row| row.iter().map(|&x| ring.from_int(x)).collect())
            .collect();
        Matrix::from_rows(ring, data).expect("rectangular literal")
    }

    /// Parse a grid of element strings.
    pub fn from_strings<S: AsRef<str>>(ring: &Ring, rows: &[Vec<S>]) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len());
        for row in rows {
            let mut r = Vec::with_capacity(row.len());
            for s in row {
                r.push(ring.parse_elem(s.as_ref())?);
            }
            data.push(r);
        }
        Matrix::from_rows(ring, data)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.ring.format(self.get(i, j))).collect())
            .collect()
    }

    /// Column vector.
    pub fn column(ring: &Ring, entries: Vec<Elem>) -> Matrix {
        let n = entries.len();
        Matrix::new(ring, n, 1, entries).unwrap()
    }

    /// Row vector.
    pub fn row_vector(ring: &Ring, entries: Vec<Elem>) -> Matrix {
        let n = entries.len();
        Matrix::new(ring, 1, n, entries).unwrap()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    fn same_ring(&self, other: &Matrix) -> Result<()> {
        self.ring.check_same(&other.ring)
    }

    fn dims_err(&self, op: &str, other: &Matrix) -> Error {
        Error::DimensionMismatch(format!(
            "{op} of {}x{} and {}x{}",
            self.rows, self.cols, other.rows, other.cols
        ))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        if self.cols != other.rows {
            return Err(self.dims_err("product", other));
        }
        let r = &self.ring;
        let mut out = Matrix::zeros(r, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if r.is_zero(b) {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = r.add(&out.data[idx], &r.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(self.dims_err("sum", other));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.ring.add(a, b))
            .collect();
        Ok(Matrix { data, ..self.clone() })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Matrix {
        self.map(|r, x| r.neg(x))
    }

    pub fn scale(&self, c: &Elem) -> Matrix {
        self.map(|r, x| r.mul(c, x))
    }

    fn map(&self, f: impl Fn(&Ring, &Elem) -> Elem) -> Matrix {
        Matrix {
            data: self.data.iter().map(|x| f(&self.ring, x)).collect(),
            ..self.clone()
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.ring.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(&self.ring, self.rows)
    }

    pub fn trace(&self) -> Elem {
        let n = self.rows.min(self.cols);
        self.ring.sum((0..n).map(|i| self.get(i, i)))
    }

    /// Rectangular sub-block starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(&self.ring, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.set(i, j, self.get(r0 + i, c0 + j).clone());
            }
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, m: &Matrix) {
        for i in 0..m.rows {
            for j in 0..m.cols {
                self.set(r0 + i, c0 + j, m.get(i, j).clone());
            }
        }
    }

    /// Rows and columns picked by index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(&self.ring, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn col(&self, j: usize) -> Matrix {
        self.block(0, j, self.rows, 1)
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        let mut out = Matrix::zeros(&self.ring, self.rows + other.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, other);
        Ok(out)
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        if self.rows != other.rows {
            return Err(self.dims_err("hstack", other));
        }
        let mut out = Matrix::zeros(&self.ring, self.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(0, self.cols, other);
        Ok(out)
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        if self.cols != other.cols {
            return Err(self.dims_err("vstack", other));
        }
        let mut out = Matrix::zeros(&self.ring, self.rows + other.rows, self.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, 0, other);
        Ok(out)
    }

    /// Kronecker product, `kron(A,B)[a*rB + b][c*cB + d] = A[a][c] * B[b][d]`.
    pub fn kron(&self, other: &Matrix) -> Result<Matrix> {
        self.same_ring(other)?;
        let r = &self.ring;
        let (rb, cb) = (other.rows, other.cols);
        let mut out = Matrix::zeros(r, self.rows * rb, self.cols * cb);
        for a in 0..self.rows {
            for c in 0..self.cols {
                let x = self.get(a, c);
                if r.is_zero(x) {
                    continue;
                }
                for b in 0..rb {
                    for d in 0..cb {
                        out.set(a * rb + b, c * cb + d, r.mul(x, other.get(b, d)));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Matrix> {
        let mut acc = Matrix::identity(&self.ring, self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    /// Coefficients of `det(λI - M)`, highest degree first (Berkowitz).
    pub fn char_poly(&self) -> Result<Vec<Elem>> {
        self.require_square()?;
        let r = &self.ring;
        let mut c = vec![r.one()];
        for k in 0..self.rows {
            // toeplitz column: 1, -a_kk, -R S, -R A S, ..., -R A^{k-1} S
            let mut t = Vec::with_capacity(k + 2);
            t.push(r.one());
            t.push(r.neg(self.get(k, k)));
            let mut v: Vec<Elem> = (0..k).map(|i| self.get(i, k).clone()).collect();
            for _ in 0..k {
                let rv = r.sum_products((0..k).map(|j| (self.get(k, j), &v[j])));
                t.push(r.neg(&rv));
                v = (0..k)
                    .map(|i| r.sum_products((0..k).map(|j| (self.get(i, j), &v[j]))))
                    .collect();
            }
            let next = (0..k + 2)
                .map(|i| {
                    let lo = i.saturating_sub(t.len() - 1);
                    r.sum_products((lo..=i.min(k)).map(|j| (&t[i - j], &c[j])))
                })
                .collect();
            c = next;
        }
        Ok(c)
    }

    /// Division-free determinant.
    pub fn det(&self) -> Result<Elem> {
        let c = self.char_poly()?;
        let last = c.last().unwrap().clone();
        Ok(if self.rows.is_multiple_of(2) {
            last
        } else {
            self.ring.neg(&last)
        })
    }

    /// Adjugate via Cayley-Hamilton; `M * adj(M) = det(M) * I`.
    pub fn adjugate(&self) -> Result<Matrix> {
        let c = self.char_poly()?;
        let n = self.rows;
        let r = &self.ring;
        if n == 0 {
            return Ok(Matrix::zeros(r, 0, 0));
        }
        // Horner: A^{n-1} + c_1 A^{n-2} + ... + c_{n-1} I
        let mut acc = Matrix::identity(r, n);
        for ci in &c[1..n] {
            acc = acc.mul(self)?.add(&Matrix::identity(r, n).scale(ci))?;
        }
        Ok(if n % 2 == 1 { acc } else { acc.neg() })
    }

    /// Inverse when the determinant is a unit.
    pub fn inverse(&self) -> Result<Matrix> {
        let d = self.det()?;
        let inv = self
            .ring
            .inverse(&d)
            .ok_or_else(|| Error::NotInvertible(format!("determinant {}", self.ring.format(&d))))?;
        Ok(self.adjugate()?.scale(&inv))
    }

    /// Minors of size `d` indexed by lexicographic `d`-subsets.
    pub fn exterior_power(&self, d: usize) -> Matrix {
        let rs = subsets(self.rows, d);
        let cs = subsets(self.cols, d);
        let mut out = Matrix::zeros(&self.ring, rs.len(), cs.len());
        for (a, ri) in rs.iter().enumerate() {
            for (b, ci) in cs.iter().enumerate() {
                let m = self.select(ri, ci);
                out.set(a, b, m.det().unwrap());
            }
        }
        out
    }

    /// In-place `col j += c * col i` followed by `row j += c * row i`, i.e.
    /// congruence by the elementary matrix `I + c e_ij`.
    pub(crate) fn congruence_elementary_in_place(&mut self, i: usize, j: usize, c: &Elem) {
        let r = self.ring.clone();
        let n = self.rows;
        for k in 0..n {
            let v = r.mul(c, self.get(k, i));
            let idx = k * n + j;
            self.data[idx] = r.add(&self.data[idx], &v);
        }
        for k in 0..n {
            let v = r.mul(c, self.get(i, k));
            let idx = j * n + k;
            self.data[idx] = r.add(&self.data[idx], &v);
        }
    }
}

impl Ring {
    fn sum_products<'a>(&self, it: impl Iterator<Item = (&'a Elem, &'a Elem)>) -> Elem {
        it.fold(self.zero(), |acc, (a, b)| {
            if self.is_zero(a) || self.is_zero(b) {
                acc
            } else {
                self.add(&acc, &self.mul(a, b))
            }
        })
    }
}

/// Lexicographically ordered `d`-subsets of `0..n`.
pub fn subsets(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if d <= n {
        rec(0, n, d, &mut Vec::new(), &mut out);
    }
    out
}

/// `I_n + r e_ij`.
pub fn elementary_matrix(ring: &Ring, n: usize, i: usize, j: usize, r: &Elem) -> Result<Matrix> {
    if i == j || i >= n || j >= n {
        return Err(Error::BadIndices { n, i, j });
    }
    let mut m = Matrix::identity(ring, n);
    m.set(i, j, r.clone());
    Ok(m)
}

/// Square matrix with zero diagonal and `A = -A^T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingMatrix(Matrix);

impl AlternatingMatrix {
    pub fn check(m: Matrix) -> Result<AlternatingMatrix> {
        if !m.is_square() {
            return Err(Error::NotAlternating(format!("{}x{} is not square", m.rows, m.cols)));
        }
        let r = m.ring.clone();
        for i in 0..m.rows {
            if !r.is_zero(m.get(i, i)) {
                return Err(Error::NotAlternating(format!("nonzero diagonal entry at {i}")));
            }
            for j in i + 1..m.rows {
                if r.add(m.get(i, j), m.get(j, i)) != r.zero() {
                    return Err(Error::NotAlternating(format!("entries ({i},{j}) and ({j},{i}) are not opposite")));
                }
            }
        }
        Ok(AlternatingMatrix(m))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.rows
    }

    pub fn ring(&self) -> &Ring {
        &self.0.ring
    }

    /// `[[0,1],[-1,0]]`.
    pub fn psi2(ring: &Ring) -> AlternatingMatrix {
        AlternatingMatrix(Matrix::from_ints(ring, &[&[0, 1], &[-1, 0]]))
    }

    /// Orthogonal sum of `n` copies of `psi2`.
    pub fn standard(ring: &Ring, n: usize) -> AlternatingMatrix {
        let mut m = Matrix::zeros(ring, 2 * n, 2 * n);
        for b in 0..n {
            m.set(2 * b, 2 * b + 1, ring.one());
            m.set(2 * b + 1, 2 * b, ring.from_int(-1));
        }
        AlternatingMatrix(m)
    }

    pub fn empty(ring: &Ring) -> AlternatingMatrix {
        AlternatingMatrix(Matrix::zeros(ring, 0, 0))
    }

    pub fn perp(&self, other: &AlternatingMatrix) -> Result<AlternatingMatrix> {
        Ok(AlternatingMatrix(self.0.direct_sum(&other.0)?))
    }

    /// `G^T A G`, re-validated.
    pub fn congruence(&self, g: &Matrix) -> Result<AlternatingMatrix> {
        if !g.is_square() || g.rows != self.size() {
            return Err(Error::DimensionMismatch(format!(
                "congruence of size {} by {}x{}",
                self.size(),
                g.rows,
                g.cols
            )));
        }
        AlternatingMatrix::check(g.transpose().mul(&self.0)?.mul(g)?)
    }

    pub fn pfaffian(&self) -> Result<Elem> {
        pfaffian(&self.0)
    }

    #[cfg(test)]
    pub(crate) fn matrix_mut(&mut self) -> &mut Matrix {
        &mut self.0
    }
}

/// Pfaffian by memoized expansion along the first remaining row:
/// `Pf(S) = sum_k (-1)^k a[i][s_k] Pf(S - {i, s_k})`, where `i = min S` and `s_k`
/// is the `k`-th element of `S` (1-indexed, `k >= 2`).
pub fn pfaffian(m: &Matrix) -> Result<Elem> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch("Pfaffian of a non-square matrix".into()));
    }
    let n = m.rows;
    if n % 2 == 1 {
        return Err(Error::OddSize(n));
    }
    if n > 64 {
        return Err(Error::DimensionMismatch(format!("Pfaffian size {n} exceeds 64")));
    }
    AlternatingMatrix::check(m.clone())?;
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo: HashMap<u64, Elem> = HashMap::new();
    Ok(pf_rec(m, full, &mut memo))
}

fn pf_rec(m: &Matrix, set: u64, memo: &mut HashMap<u64, Elem>) -> Elem {
    let r = &m.ring;
    if set == 0 {
        return r.one();
    }
    if let Some(v) = memo.get(&set) {
        return v.clone();
    }
    let i = set.trailing_zeros() as usize;
    let rest = set & !(1u64 << i);
    let mut acc = r.zero();
    let mut k = 1;
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        k += 1;
        let a = m.get(i, j);
        if r.is_zero(a) {
            continue;
        }
        let sub = pf_rec(m, rest & !(1u64 << j), memo);
        let term = r.mul(a, &sub);
        acc = if k % 2 == 0 { r.add(&acc, &term) } else { r.sub(&acc, &term) };
    }
    memo.insert(set, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Ring {
        Ring::integers()
    }

    #[test]
    fn identity_and_elementary() {
        let r = z();
        let i3 = Matrix::identity(&r, 3);
        assert!(i3.is_identity());
        let e = elementary_matrix(&r, 3, 0, 1, &r.from_int(5)).unwrap();
        assert_eq!(e.get(0, 1), &r.from_int(5));
        assert_eq!(e.transpose(), elementary_matrix(&r, 3, 1, 0, &r.from_int(5)).unwrap());
        let einv = elementary_matrix(&r, 3, 0, 1, &r.from_int(-5)).unwrap();
        assert!(e.mul(&einv).unwrap().is_identity());
        assert!(matches!(
            elementary_matrix(&r, 3, 1, 1, &r.one()),
            Err(Error::BadIndices { .. })
        ));
        assert!(elementary_matrix(&r, 3, 0, 3, &r.one()).is_err());
        let e4 = elementary_matrix(&r, 4, 2, 0, &r.from_int(7)).unwrap();
        assert_eq!(e4.det().unwrap(), r.one());
    }

    #[test]
    fn elementary_over_polynomials() {
        let r = Ring::parse("Q[x]").unwrap();
        let x = r.parse_elem("x").unwrap();
        let e = elementary_matrix(&r, 2, 1, 0, &x).unwrap();
        assert_eq!(e.to_strings(), vec![vec!["1", "0"], vec!["x", "1"]]);
    }

    #[test]
    fn determinants() {
        let z6 = Ring::modular(6).unwrap();
        assert_eq!(Matrix::from_ints(&z6, &[&[2, 3], &[3, 2]]).det().unwrap(), z6.one());
        let r = z();
        assert_eq!(Matrix::from_ints(&r, &[&[0, -1], &[1, 0]]).det().unwrap(), r.one());
        let m = Matrix::from_ints(&r, &[&[2, -1, 3], &[0, 4, 5], &[1, 1, -2]]);
        // cofactor expansion: 2(-8-5) + 1(0-5) + 3(0-4) = -43
        assert_eq!(m.det().unwrap(), r.from_int(-43));
        assert_eq!(Matrix::zeros(&r, 0, 0).det().unwrap(), r.one());
        let adj = m.adjugate().unwrap();
        assert_eq!(m.mul(&adj).unwrap(), Matrix::identity(&r, 3).scale(&r.from_int(-43)));
    }

    #[test]
    fn exterior_powers_are_minors() {
        let r = z();
        let e = Matrix::from_ints(&r, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
        let l2 = e.exterior_power(2);
        assert_eq!(l2, Matrix::from_ints(&r, &[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]));
        assert_eq!(Matrix::identity(&r, 3).exterior_power(3), Matrix::identity(&r, 1));
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn pfaffian_small_cases() {
        let r = z();
        assert_eq!(AlternatingMatrix::psi2(&r).pfaffian().unwrap(), r.one());
        let a = Matrix::from_ints(&r, &[&[0, 2, 3, 5], &[-2, 0, 7, 11], &[-3, -7, 0, 13], &[-5, -11, -13, 0]]);
        // a12 a34 - a13 a24 + a14 a23
        assert_eq!(pfaffian(&a).unwrap(), r.from_int(2 * 13 - 3 * 11 + 5 * 7));
        assert!(matches!(pfaffian(&Matrix::zeros(&r, 3, 3)), Err(Error::OddSize(3))));
        assert_eq!(pfaffian(&Matrix::zeros(&r, 0, 0)).unwrap(), r.one());
    }

    #[test]
    fn alternating_validation() {
        let r = z();
        assert!(AlternatingMatrix::check(Matrix::from_ints(&r, &[&[0, 1], &[-1, 0]])).is_ok());
        assert!(AlternatingMatrix::check(Matrix::from_ints(&r, &[&[0, 1], &[1, 0]])).is_err());
        let f2 = Ring::galois(2).unwrap();
        let m = Matrix::from_ints(&f2, &[&[1, 1], &[1, 1]]);
        assert_eq!(m, m.neg().transpose());
        assert!(matches!(AlternatingMatrix::check(m), Err(Error::NotAlternating(_))));
    }

    #[test]
    fn congruence_and_perp() {
        let r = z();
        let psi = AlternatingMatrix::psi2(&r);
        let swap = Matrix::from_ints(&r, &[&[0, 1], &[1, 0]]);
        assert_eq!(psi.congruence(&swap).unwrap().matrix(), &psi.matrix().neg());
        assert_eq!(psi.congruence(&Matrix::identity(&r, 2)).unwrap(), psi);
        let pp = psi.perp(&psi).unwrap();
        assert_eq!(pp.pfaffian().unwrap(), r.one());
        let g = elementary_matrix(&r, 4, 0, 2, &r.one()).unwrap();
        let c = pp.congruence(&g).unwrap();
        let expected = Matrix::from_ints(&r, &[&[0, 1, 0, 0], &[-1, 0, -1, 0], &[0, 1, 0, 1], &[0, 0, -1, 0]]);
        assert_eq!(c.matrix(), &expected);
        let mut fast = pp.clone();
        fast.matrix_mut().congruence_elementary_in_place(0, 2, &r.one());
        assert_eq!(fast, c);
        assert_eq!(psi.perp(&AlternatingMatrix::empty(&r)).unwrap(), psi);
    }

    #[test]
    fn kron_layout() {
        let r = z();
        let a = Matrix::from_ints(&r, &[&[1, 2]]);
        let b = Matrix::from_ints(&r, &[&[0, 1], &[1, 0]]);
        let k = a.kron(&b).unwrap();
        assert_eq!(k, Matrix::from_ints(&r, &[&[0, 1, 0, 2], &[1, 0, 2, 0]]));
    }
}
