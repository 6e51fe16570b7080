//! Dense polynomials over the prime field GF(p).
//!
//! Coefficients are stored little-endian (index = degree) and kept reduced
//! mod p with no trailing zeros, so the representation of every polynomial is
//! unique. The zero polynomial is the empty coefficient vector.

use serde::{Deserialize, Serialize};

/// A polynomial over GF(p). The modulus `p` is carried by the caller, not the
/// value; all binary operations require both operands reduced mod the same p.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Poly {
    coeffs: Vec<u32>,
}

impl Poly {
    /// Builds a polynomial from little-endian coefficients, reducing mod `p`
    /// and trimming trailing zeros.
    pub fn new(coeffs: Vec<u32>, p: u32) -> Self {
        let mut coeffs: Vec<u32> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }

    /// The monomial X.
    pub fn x() -> Self {
        Poly { coeffs: vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<u32> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == Some(1)
    }

    pub fn add(&self, rhs: &Poly, p: u32) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0u32; n];
        for (i, c) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = rhs.coeffs.get(i).copied().unwrap_or(0);
            *c = (a + b) % p;
        }
        Poly::new(out, p)
    }

    pub fn sub(&self, rhs: &Poly, p: u32) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0u32; n];
        for (i, c) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = rhs.coeffs.get(i).copied().unwrap_or(0);
            *c = (a + p - b) % p;
        }
        Poly::new(out, p)
    }

    pub fn mul(&self, rhs: &Poly, p: u32) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p as u64;
            }
        }
        Poly::new(out.into_iter().map(|c| c as u32).collect(), p)
    }

    /// Euclidean division: returns (quotient, remainder) with
    /// deg(remainder) < deg(divisor). Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly, p: u32) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dlead = divisor.leading_coeff().unwrap();
        let dlead_inv = mod_inverse(dlead, p);
        let ddeg = divisor.coeffs.len() - 1;

        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; self.coeffs.len().saturating_sub(ddeg)];
        while rem.len() > ddeg {
            let lead = *rem.last().unwrap();
            let shift = rem.len() - 1 - ddeg;
            let factor = (lead as u64 * dlead_inv as u64 % p as u64) as u32;
            if factor != 0 {
                quot[shift] = factor;
                for (i, &dc) in divisor.coeffs.iter().enumerate() {
                    let sub = factor as u64 * dc as u64 % p as u64;
                    let idx = shift + i;
                    rem[idx] = ((rem[idx] as u64 + p as u64 - sub) % p as u64) as u32;
                }
            }
            rem.pop();
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        (Poly::new(quot, p), Poly { coeffs: rem })
    }

    pub fn rem(&self, divisor: &Poly, p: u32) -> Poly {
        self.div_rem(divisor, p).1
    }

    /// Irreducibility over GF(p) by exhaustive trial division: a polynomial of
    /// degree t is reducible iff it has a monic factor of degree in [1, t/2].
    pub fn is_irreducible(&self, p: u32) -> bool {
        let deg = match self.degree() {
            None | Some(0) => return false, // constants are units or zero
            Some(1) => return true,
            Some(d) => d,
        };
        let mut divisor_degree = 1;
        while 2 * divisor_degree <= deg {
            for divisor in monic_polys(divisor_degree, p) {
                if self.rem(&divisor, p).is_zero() {
                    return false;
                }
            }
            divisor_degree += 1;
        }
        true
    }
}

/// Multiplicative inverse mod prime p via Fermat.
fn mod_inverse(a: u32, p: u32) -> u32 {
    mod_pow(a, p as u64 - 2, p)
}

fn mod_pow(base: u32, mut exp: u64, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut b = base as u64 % p as u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u64;
        }
        b = b * b % p as u64;
        exp >>= 1;
    }
    acc as u32
}

/// All monic polynomials of exactly `degree` over GF(p), in lexicographic
/// order of (c0, c1, ..., c_{degree-1}), constant term most significant.
pub fn monic_polys(degree: usize, p: u32) -> impl Iterator<Item = Poly> {
    let count = (p as u64).pow(degree as u32);
    (0..count).map(move |rank| {
        let mut coeffs = vec![0u32; degree + 1];
        coeffs[degree] = 1;
        // Peel digits with the constant term as the most significant digit.
        let mut r = rank;
        for i in (0..degree).rev() {
            coeffs[i] = (r % p as u64) as u32;
            r /= p as u64;
        }
        Poly { coeffs }
    })
}

/// The lexicographically smallest (constant term up) monic irreducible
/// polynomial of degree `t` over GF(p).
pub fn find_irreducible(p: u32, t: u32) -> Poly {
    monic_polys(t as usize, p)
        .find(|f| f.is_irreducible(p))
        .expect("an irreducible polynomial of every degree exists over GF(p)")
}
