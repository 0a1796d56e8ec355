use std::fmt;
use std::ops::Mul;

use super::PermError;
use crate::util::lcm;

/// Permutation of {0, .., n-1} stored as its image array.
///
/// Products compose as functions: `(a * b)(x) = a(b(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Box<[u16]>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u16::MAX as usize + 1, "degree {n} exceeds u16 points");
        Permutation((0..n).map(|i| i as u16).collect())
    }

    /// Validates that `images` is a bijection of 0..len.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        if n > u16::MAX as usize + 1 {
            return Err(PermError::DegreeTooLarge(n));
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x >= n || seen[x] {
                return Err(PermError::NotBijective);
            }
            seen[x] = true;
        }
        Ok(Permutation(images.iter().map(|&x| x as u16).collect()))
    }

    /// Trusted constructor for image arrays built by this crate.
    pub(crate) fn from_u16(images: Vec<u16>) -> Self {
        debug_assert!(Self::from_images(&images.iter().map(|&x| x as usize).collect::<Vec<_>>()).is_ok());
        Permutation(images.into_boxed_slice())
    }

    /// Cycle notation over 0-based points, e.g. `&[&[0, 1, 2, 3]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut img: Vec<usize> = (0..n).collect();
        for cyc in cycles {
            for (k, &x) in cyc.iter().enumerate() {
                if x >= n {
                    return Err(PermError::NotBijective);
                }
                img[x] = cyc[(k + 1) % cyc.len()];
            }
        }
        Self::from_images(&img)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u16; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Permutation(inv.into_boxed_slice())
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    /// `self⁻¹ ∘ other` without materialising the inverse.
    pub fn inverse_compose(&self, other: &Self, scratch: &mut Vec<u16>) -> Self {
        scratch.clear();
        scratch.resize(self.degree(), 0);
        for (i, &x) in self.0.iter().enumerate() {
            scratch[x as usize] = i as u16;
        }
        Permutation(other.0.iter().map(|&x| scratch[x as usize]).collect())
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// `self * other * self⁻¹`
    pub fn conjugate(&self, other: &Self) -> Self {
        self.compose(other).compose(&self.inverse())
    }

    /// `a⁻¹ b⁻¹ a b`
    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.inverse().compose(&b.inverse()).compose(a).compose(b)
    }

    /// Sorted cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable();
        out
    }

    pub fn order(&self) -> u64 {
        self.cycle_type().into_iter().fold(1, |acc, c| lcm(acc, c as u64))
    }

    /// Length of the cycle through x.
    pub fn cycle_length_of(&self, x: usize) -> usize {
        let mut y = self.apply(x);
        let mut len = 1;
        while y != x {
            y = self.apply(y);
            len += 1;
        }
        len
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for s in 0..n {
            if seen[s] || self.apply(s) == s {
                continue;
            }
            write!(f, "(")?;
            let mut x = s;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.apply(x);
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}
