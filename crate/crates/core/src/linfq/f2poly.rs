use std::fmt;
use std::ops::Mul;

use super::{FqMatrix, LinAlgError};
use crate::util::is_prime;

/// Polynomial over F_2; bit i is the coefficient of x^i.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Poly(pub u128);

impl F2Poly {
    pub const ONE: F2Poly = F2Poly(1);
    pub const X: F2Poly = F2Poly(2);

    /// x^n + 1, which equals x^n − 1 over F_2.
    pub fn x_pow_minus_one(n: u32) -> Self {
        assert!(n < 128);
        F2Poly((1u128 << n) | 1)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(self) -> Option<u32> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros())
    }

    pub fn coeff(self, i: u32) -> bool {
        (self.0 >> i) & 1 == 1
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(self, d: Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let mut q = 0u128;
        let mut r = self.0;
        while let Some(dr) = F2Poly(r).degree() {
            if dr < dd {
                break;
            }
            q |= 1 << (dr - dd);
            r ^= d.0 << (dr - dd);
        }
        (F2Poly(q), F2Poly(r))
    }

    pub fn gcd(self, other: Self) -> Self {
        let (mut a, mut b) = (self, other);
        while !b.is_zero() {
            let r = a.div_rem(b).1;
            a = b;
            b = r;
        }
        a
    }

    /// Evaluates at a square matrix over F_2 by Horner's rule.
    pub fn eval_matrix(self, m: &FqMatrix) -> FqMatrix {
        assert_eq!(m.p(), 2);
        let n = m.rows();
        let mut acc = FqMatrix::zeros(2, n, n);
        let Some(d) = self.degree() else { return acc };
        for i in (0..=d).rev() {
            acc = &acc * m;
            if self.coeff(i) {
                acc = acc.try_add(&FqMatrix::identity(2, n)).expect("same shape");
            }
        }
        acc
    }

    /// self · other mod m, for operands of degree below deg m.
    pub fn mul_mod(self, other: Self, m: Self) -> Self {
        let dm = m.degree().expect("nonzero modulus");
        let (mut a, mut b, mut acc) = (self.0, other.0, 0u128);
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a >> dm & 1 == 1 {
                a ^= m.0;
            }
        }
        F2Poly(acc)
    }

    /// x^(2^k) mod m by repeated squaring.
    fn frobenius_of_x(k: u32, m: Self) -> Self {
        let mut t = F2Poly::X.div_rem(m).1;
        for _ in 0..k {
            t = t.mul_mod(t, m);
        }
        t
    }

    /// Rabin's test: x^(2^d) = x mod f, and gcd(x^(2^(d/q)) − x, f) = 1
    /// for every prime q dividing d.
    pub fn is_irreducible(self) -> bool {
        let Some(d) = self.degree() else { return false };
        if d == 0 {
            return false;
        }
        let x = F2Poly::X.div_rem(self).1;
        if Self::frobenius_of_x(d, self) != x {
            return false;
        }
        (2..=d).filter(|&q| d % q == 0 && is_prime(q)).all(|q| {
            let t = F2Poly(Self::frobenius_of_x(d / q, self).0 ^ x.0);
            self.gcd(t) == F2Poly::ONE
        })
    }
}

impl Mul for F2Poly {
    type Output = Self;

    fn mul(self, other: Self) -> Self {
        let (da, db) = match (self.degree(), other.degree()) {
            (Some(a), Some(b)) => (a, b),
            _ => return F2Poly(0),
        };
        assert!(da + db < 128, "product degree overflows u128");
        let mut acc = 0u128;
        let mut b = other.0;
        while b != 0 {
            let k = b.trailing_zeros();
            acc ^= self.0 << k;
            b &= b - 1;
        }
        F2Poly(acc)
    }
}

impl fmt::Debug for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else { return write!(f, "0") };
        let terms: Vec<String> = (0..=d)
            .rev()
            .filter(|&i| self.coeff(i))
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join("+"))
    }
}

/// All irreducible polynomials over F_2 of degree 1..=max_deg, by a sieve.
pub fn irreducibles_up_to(max_deg: u32) -> Vec<F2Poly> {
    assert!(max_deg <= 16);
    let limit = 1usize << (max_deg + 1);
    let mut composite = vec![false; limit];
    let mut out = Vec::new();
    for a in 2..limit {
        if composite[a] {
            continue;
        }
        let pa = F2Poly(a as u128);
        out.push(pa);
        let da = pa.degree().unwrap();
        for b in 2..limit {
            let pb = F2Poly(b as u128);
            if da + pb.degree().unwrap() > max_deg {
                break;
            }
            composite[(pa * pb).0 as usize] = true;
        }
    }
    out
}

/// Multiplicative order of 2 modulo an odd p.
pub fn ord2_mod(p: u32) -> u32 {
    assert!(p % 2 == 1 && p > 1);
    let mut x = 2 % p;
    let mut k = 1;
    while x != 1 {
        x = x * 2 % p;
        k += 1;
    }
    k
}

/// Irreducible factors of x^p − 1 over F_2, sorted by degree then bits.
///
/// Every non-linear factor has degree d = ord_p(2); they are separated by
/// equal-degree splitting with trace maps t + t² + … + t^(2^(d−1)).
pub fn factor_x_pow_p_minus_1(p: u32) -> Result<Vec<F2Poly>, LinAlgError> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(LinAlgError::InvalidArgument(format!("x^p - 1 needs an odd prime p, got {p}")));
    }
    if p >= 128 {
        return Err(LinAlgError::InvalidArgument(format!("p = {p} exceeds the 127-degree limit")));
    }
    let d = ord2_mod(p);
    let (cyclotomic, r) = F2Poly::x_pow_minus_one(p).div_rem(F2Poly(0b11));
    debug_assert!(r.is_zero());
    let mut factors = vec![F2Poly(0b11)];
    split_equal_degree(cyclotomic, d, &mut factors);
    factors.sort_by_key(|f| (f.degree(), f.0));
    Ok(factors)
}

/// Splits a squarefree product of irreducibles of degree d.
fn split_equal_degree(f: F2Poly, d: u32, out: &mut Vec<F2Poly>) {
    let df = f.degree().expect("nonzero");
    if df == d {
        out.push(f);
        return;
    }
    // gcd(f, Tr t) collects the factors g with Tr(t mod g) = 0; some residue
    // t mod f makes that a proper divisor.
    for a in 2u128.. {
        let t = F2Poly(a).div_rem(f).1;
        let mut power = t;
        let mut trace = t;
        for _ in 1..d {
            power = power.mul_mod(power, f);
            trace = F2Poly(trace.0 ^ power.0);
        }
        let g = f.gcd(trace);
        if g.degree().is_some_and(|dg| dg > 0 && dg < df) {
            split_equal_degree(g, d, out);
            split_equal_degree(f.div_rem(g).0, d, out);
            return;
        }
    }
}

/// Companion matrix over F_2 of a monic polynomial: ones on the
/// subdiagonal, coefficients in the last column.
pub fn companion(f: F2Poly) -> Result<FqMatrix, LinAlgError> {
    let d = match f.degree() {
        Some(d) if d >= 1 => d as usize,
        _ => return Err(LinAlgError::InvalidArgument("companion of a constant".into())),
    };
    if d > 64 {
        return Err(LinAlgError::InvalidArgument("companion degree exceeds 64".into()));
    }
    let mut c = FqMatrix::zeros(2, d, d);
    for i in 1..d {
        c.set(i, i - 1, 1);
    }
    for i in 0..d {
        c.set(i, d - 1, f.coeff(i as u32) as u32);
    }
    Ok(c)
}

/// Companion matrix over F_p of a polynomial given by coefficients
/// c_0..c_d; the leading coefficient must be 1.
pub fn companion_fp(p: u32, coeffs: &[u32]) -> Result<FqMatrix, LinAlgError> {
    let d = coeffs
        .len()
        .checked_sub(1)
        .filter(|&d| d >= 1)
        .ok_or_else(|| LinAlgError::InvalidArgument("companion of a constant".into()))?;
    if coeffs[d] % p != 1 {
        return Err(LinAlgError::NotMonic);
    }
    let mut c = FqMatrix::zeros(p, d, d);
    for i in 1..d {
        c.set(i, i - 1, 1);
    }
    for (i, &a) in coeffs[..d].iter().enumerate() {
        c.set(i, d - 1, (p - a % p) % p);
    }
    Ok(c)
}
