use std::fmt;
use std::ops::Mul;

use super::LinAlgError;
use crate::util::is_prime;

/// Matrix over the prime field F_p.
///
/// For p = 2 every row is a bit-packed `u64` (so at most 64 columns);
/// otherwise entries are stored densely, already reduced mod p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FqMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    store: Store,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Store {
    Bits(Vec<u64>),
    Dense(Vec<u32>),
}

impl FqMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        assert!(is_prime(p), "F_p needs a prime modulus, got {p}");
        let store = if p == 2 {
            assert!(cols <= 64, "packed F_2 rows hold at most 64 columns");
            Store::Bits(vec![0; rows])
        } else {
            Store::Dense(vec![0; rows * cols])
        };
        FqMatrix { p, rows, cols, store }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing every entry mod p.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(p, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v.rem_euclid(p as i64) as u32);
            }
        }
        m
    }

    pub fn from_fn(p: u32, rows: usize, cols: usize, f: impl Fn(usize, usize) -> u32) -> Self {
        let mut m = Self::zeros(p, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j) % p);
            }
        }
        m
    }

    /// Scalar multiple of the identity.
    pub fn scalar(p: u32, n: usize, c: i64) -> Self {
        let c = c.rem_euclid(p as i64) as u32;
        Self::from_fn(p, n, n, |i, j| if i == j { c } else { 0 })
    }

    pub fn p(&self) -> u32 {
        self.p
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

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        match &self.store {
            Store::Bits(b) => ((b[r] >> c) & 1) as u32,
            Store::Dense(d) => d[r * self.cols + c],
        }
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        let v = v % self.p;
        match &mut self.store {
            Store::Bits(b) => {
                if v == 1 {
                    b[r] |= 1 << c;
                } else {
                    b[r] &= !(1 << c);
                }
            }
            Store::Dense(d) => d[r * self.cols + c] = v,
        }
    }

    /// Packed row `r` (p = 2 only).
    pub fn bit_row(&self, r: usize) -> u64 {
        match &self.store {
            Store::Bits(b) => b[r],
            Store::Dense(_) => panic!("bit_row on a matrix over F_{}", self.p),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        match &self.store {
            Store::Bits(b) => b.iter().all(|&w| w == 0),
            Store::Dense(d) => d.iter().all(|&v| v == 0),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.p, self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.p, self.cols, self.rows, |i, j| self.get(j, i))
    }

    fn check_same_field(&self, other: &Self) -> Result<(), LinAlgError> {
        if self.p != other.p {
            return Err(LinAlgError::FieldMismatch { left: self.p, right: other.p });
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.check_same_field(other)?;
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let p = self.p;
        let mut out = Self::zeros(p, self.rows, other.cols);
        match (&self.store, &other.store, &mut out.store) {
            (Store::Bits(a), Store::Bits(b), Store::Bits(c)) => {
                for (i, row) in a.iter().enumerate() {
                    let mut acc = 0u64;
                    let mut bits = *row;
                    while bits != 0 {
                        let k = bits.trailing_zeros() as usize;
                        acc ^= b[k];
                        bits &= bits - 1;
                    }
                    c[i] = acc;
                }
            }
            (Store::Dense(a), Store::Dense(b), Store::Dense(c)) => {
                let (n, m, q) = (self.rows, self.cols, other.cols);
                for i in 0..n {
                    for j in 0..q {
                        let mut acc = 0u64;
                        for k in 0..m {
                            acc += a[i * m + k] as u64 * b[k * q + j] as u64;
                        }
                        c[i * q + j] = (acc % p as u64) as u32;
                    }
                }
            }
            _ => unreachable!("storage follows the field"),
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.check_same_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinAlgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = self.clone();
        match (&mut out.store, &other.store) {
            (Store::Bits(a), Store::Bits(b)) => a.iter_mut().zip(b).for_each(|(x, y)| *x ^= y),
            (Store::Dense(a), Store::Dense(b)) => a.iter_mut().zip(b).for_each(|(x, y)| *x = (*x + y) % self.p),
            _ => unreachable!("storage follows the field"),
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        if let Store::Dense(d) = &mut out.store {
            for v in d.iter_mut() {
                *v = (self.p - *v) % self.p;
            }
        }
        out
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, LinAlgError> {
        self.try_add(&other.neg())
    }

    /// `self − I`; used for fixed spaces and latin tests.
    pub fn minus_identity(&self) -> Self {
        self.try_sub(&Self::identity(self.p, self.rows)).expect("square matrix")
    }

    /// `I − self`.
    pub fn identity_minus(&self) -> Self {
        Self::identity(self.p, self.rows).try_sub(self).expect("square matrix")
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.p, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.p as u64;
        (0..self.rows)
            .map(|i| {
                let s: u64 = (0..self.cols).map(|j| self.get(i, j) as u64 * v[j] as u64).sum();
                (s % p) as u32
            })
            .collect()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, piv);
            let inv = inv_mod(m.get(r, c), m.p);
            m.scale_row(r, inv);
            for i in 0..m.rows {
                if i != r {
                    let f = m.get(i, c);
                    if f != 0 {
                        m.add_row_multiple(i, r, m.p - f);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        match &mut self.store {
            Store::Bits(rows) => rows.swap(a, b),
            Store::Dense(d) => {
                for j in 0..self.cols {
                    d.swap(a * self.cols + j, b * self.cols + j);
                }
            }
        }
    }

    fn scale_row(&mut self, r: usize, f: u32) {
        if let Store::Dense(d) = &mut self.store {
            for j in 0..self.cols {
                let idx = r * self.cols + j;
                d[idx] = ((d[idx] as u64 * f as u64) % self.p as u64) as u32;
            }
        }
    }

    /// row[dst] += f · row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, f: u32) {
        match &mut self.store {
            Store::Bits(rows) => {
                if f & 1 == 1 {
                    rows[dst] ^= rows[src];
                }
            }
            Store::Dense(d) => {
                let p = self.p as u64;
                for j in 0..self.cols {
                    let s = d[src * self.cols + j] as u64;
                    let t = &mut d[dst * self.cols + j];
                    *t = ((*t as u64 + f as u64 * s) % p) as u32;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn try_inverse(&self) -> Result<Self, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if self.p == 2 && 2 * n > 64 {
            return self.inverse_by_columns();
        }
        let aug = Self::from_fn(self.p, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j)
            } else if j - n == i {
                1
            } else {
                0
            }
        });
        let (red, pivots) = aug.rref();
        let rank = pivots.iter().filter(|&&c| c < n).count();
        if rank < n {
            return Err(LinAlgError::Singular { rank });
        }
        Ok(Self::from_fn(self.p, n, n, |i, j| red.get(i, j + n)))
    }

    fn inverse_by_columns(&self) -> Result<Self, LinAlgError> {
        let n = self.rows;
        let rank = self.rank();
        if rank < n {
            return Err(LinAlgError::Singular { rank });
        }
        let mut inv = Self::zeros(self.p, n, n);
        for j in 0..n {
            let mut e = vec![0u32; n];
            e[j] = 1;
            let x = self.solve(&e).expect("invertible system");
            for (i, v) in x.into_iter().enumerate() {
                inv.set(i, j, v);
            }
        }
        Ok(inv)
    }

    /// One solution of `self · x = b`, if any.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows);
        let aug =
            Self::from_fn(self.p, self.rows, self.cols + 1, |i, j| if j < self.cols { self.get(i, j) } else { b[i] });
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = red.get(r, self.cols);
        }
        Some(x)
    }

    /// Basis of the right null space {x : self · x = 0}.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u32; self.cols];
                v[f] = 1;
                for (r, &c) in pivots.iter().enumerate() {
                    v[c] = (self.p - red.get(r, f)) % self.p;
                }
                v
            })
            .collect()
    }

    /// Basis of the column space, as vectors.
    pub fn image_basis(&self) -> Vec<Vec<u32>> {
        let (red, pivots) = self.transpose().rref();
        (0..pivots.len()).map(|r| (0..self.rows).map(|j| red.get(r, j)).collect()).collect()
    }
}

impl Mul for &FqMatrix {
    type Output = FqMatrix;

    /// Panics on a dimension or field mismatch; use `try_mul` to recover.
    fn mul(self, rhs: &FqMatrix) -> FqMatrix {
        self.try_mul(rhs).expect("matrix product")
    }
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}{:?}", self.p, self.to_rows())
    }
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a as u64, p as u64 - 2, p as u64) as u32
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

pub fn mat_mul(a: &FqMatrix, b: &FqMatrix) -> Result<FqMatrix, LinAlgError> {
    a.try_mul(b)
}

/// Inverse; a singular input reports its rank.
pub fn mat_inv(a: &FqMatrix) -> Result<FqMatrix, LinAlgError> {
    a.try_inverse()
}

/// Multiplicative order of an invertible matrix.
pub fn mat_order(a: &FqMatrix) -> Result<u64, LinAlgError> {
    if !a.is_square() {
        return Err(LinAlgError::NotSquare { rows: a.rows, cols: a.cols });
    }
    let rank = a.rank();
    if rank < a.rows {
        return Err(LinAlgError::Singular { rank });
    }
    // Element orders in GL_n(p) never exceed p^n.
    let bound = (a.p as u64).saturating_pow(a.rows as u32).max(2);
    let mut cur = a.clone();
    for k in 1..=bound {
        if cur.is_identity() {
            return Ok(k);
        }
        cur = &cur * a;
    }
    Err(LinAlgError::OrderBound { bound })
}

/// Basis of {v : a v = v}.
pub fn fix_space(a: &FqMatrix) -> Result<Vec<Vec<u32>>, LinAlgError> {
    if !a.is_square() {
        return Err(LinAlgError::NotSquare { rows: a.rows, cols: a.cols });
    }
    Ok(a.minus_identity().kernel())
}

pub fn block_diag(blocks: &[FqMatrix]) -> Result<FqMatrix, LinAlgError> {
    let Some(first) = blocks.first() else {
        return Err(LinAlgError::InvalidArgument("block_diag of no blocks".into()));
    };
    let p = first.p;
    let mut n = 0;
    for b in blocks {
        first.check_same_field(b)?;
        if !b.is_square() {
            return Err(LinAlgError::NotSquare { rows: b.rows, cols: b.cols });
        }
        n += b.rows;
    }
    let mut m = FqMatrix::zeros(p, n, n);
    let mut off = 0;
    for b in blocks {
        for i in 0..b.rows {
            for j in 0..b.cols {
                m.set(off + i, off + j, b.get(i, j));
            }
        }
        off += b.rows;
    }
    Ok(m)
}

/// Basis of the space {X : X·a = b·X}; both inputs square of equal size.
pub fn intertwiners(a: &FqMatrix, b: &FqMatrix) -> Result<Vec<FqMatrix>, LinAlgError> {
    a.check_same_field(b)?;
    if !a.is_square() || !b.is_square() || a.rows != b.rows {
        return Err(LinAlgError::DimensionMismatch { left: (a.rows, a.cols), right: (b.rows, b.cols) });
    }
    let n = a.rows;
    let p = a.p;
    // Unknown X[i][k] sits at column i*n + k; equation (i, j) reads
    // sum_k X[i][k] a[k][j] − sum_k b[i][k] X[k][j] = 0.
    let vars = n * n;
    let mut sys = FqMatrix::zeros(p, vars, vars);
    for i in 0..n {
        for j in 0..n {
            let row = i * n + j;
            for k in 0..n {
                let c1 = i * n + k;
                sys.set(row, c1, (sys.get(row, c1) + a.get(k, j)) % p);
                let c2 = k * n + j;
                sys.set(row, c2, (sys.get(row, c2) + p - b.get(i, k)) % p);
            }
        }
    }
    Ok(sys.kernel().into_iter().map(|v| FqMatrix::from_fn(p, n, n, |i, k| v[i * n + k])).collect())
}

/// Index of a vector of Z_m^t in mixed radix, coordinate 0 least significant.
pub fn vec_to_index(m: u32, v: &[u32]) -> usize {
    v.iter().rev().fold(0usize, |acc, &x| acc * m as usize + x as usize)
}

pub fn index_to_vec(m: u32, t: usize, mut idx: usize) -> Vec<u32> {
    let mut v = vec![0u32; t];
    for x in v.iter_mut() {
        *x = (idx % m as usize) as u32;
        idx /= m as usize;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_of_quarter_turn_and_minus_identity() {
        let r = FqMatrix::from_rows(7, &[vec![0, -1], vec![1, 0]]);
        assert_eq!(mat_order(&r).unwrap(), 4);
        assert_eq!(mat_order(&FqMatrix::scalar(7, 2, -1)).unwrap(), 2);
    }

    #[test]
    fn fix_space_dimensions() {
        assert_eq!(fix_space(&FqMatrix::identity(3, 2)).unwrap().len(), 2);
        assert_eq!(fix_space(&FqMatrix::scalar(7, 2, -1)).unwrap().len(), 0);
        let d = FqMatrix::from_rows(5, &[vec![1, 0], vec![0, -1]]);
        assert_eq!(fix_space(&d).unwrap().len(), 1);
    }

    #[test]
    fn singular_inverse_reports_rank() {
        let a = FqMatrix::from_rows(5, &[vec![1, 2], vec![2, 4]]);
        assert_eq!(mat_inv(&a), Err(LinAlgError::Singular { rank: 1 }));
        let b = FqMatrix::from_rows(2, &[vec![1, 1], vec![1, 1]]);
        assert_eq!(mat_inv(&b), Err(LinAlgError::Singular { rank: 1 }));
    }

    #[test]
    fn mismatched_product_is_an_error() {
        let a = FqMatrix::zeros(3, 2, 3);
        assert!(matches!(mat_mul(&a, &a), Err(LinAlgError::DimensionMismatch { .. })));
    }

    #[test]
    fn packed_and_dense_agree_on_inverse() {
        let a = FqMatrix::from_rows(2, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 0]]);
        let inv = mat_inv(&a).unwrap();
        assert!((&a * &inv).is_identity());
        let b = FqMatrix::from_rows(3, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 0]]);
        assert!((&b * &mat_inv(&b).unwrap()).is_identity());
    }

    #[test]
    fn intertwiners_of_rotation_with_itself_form_the_commutant() {
        let r = FqMatrix::from_rows(3, &[vec![0, -1], vec![1, 0]]);
        let basis = intertwiners(&r, &r).unwrap();
        // x^2 + 1 is irreducible mod 3, so the commutant is F_9: dimension 2.
        assert_eq!(basis.len(), 2);
        for x in basis {
            assert_eq!(&x * &r, &r * &x);
        }
    }

    #[test]
    fn vector_index_round_trip() {
        for idx in 0..125 {
            assert_eq!(vec_to_index(5, &index_to_vec(5, 3, idx)), idx);
        }
    }
}
