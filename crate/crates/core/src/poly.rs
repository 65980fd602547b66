//! Dense univariate polynomials over a [`Field`].
//!
//! Coefficients are stored lowest power first with trailing zeros stripped, so
//! the zero polynomial is the empty vector. Degrees are `Option<usize>`: the
//! zero polynomial has degree `None`, which orders below every `Some(d)`.
//!
//! Multiplication is schoolbook on purpose: multiplying polynomials of degrees
//! `a` and `b` costs exactly `(a+1)(b+1)` counted field multiplications.

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniPoly<E> {
    coeffs: Vec<E>,
}

impl<E: Copy + Eq> UniPoly<E> {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs<F: Field<Elem = E>>(mut coeffs: Vec<E>, f: &F) -> Self {
        let z = f.zero();
        while coeffs.last() == Some(&z) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Builds a polynomial from canonical element indices, constant term first.
    pub fn from_indices<F: Field<Elem = E>>(indices: &[u64], f: &F) -> Result<Self> {
        let coeffs = indices
            .iter()
            .map(|&i| f.elem(i))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs, f))
    }

    pub fn constant<F: Field<Elem = E>>(c: E, f: &F) -> Self {
        Self::from_coeffs(vec![c], f)
    }

    pub fn one<F: Field<Elem = E>>(f: &F) -> Self {
        Self::constant(f.one(), f)
    }

    /// `c * x^d`.
    pub fn monomial<F: Field<Elem = E>>(c: E, d: usize, f: &F) -> Self {
        if f.is_zero(c) {
            return Self::zero();
        }
        let mut coeffs = vec![f.zero(); d + 1];
        coeffs[d] = c;
        UniPoly { coeffs }
    }

    /// `x - a`.
    pub fn linear<F: Field<Elem = E>>(a: E, f: &F) -> Self {
        UniPoly {
            coeffs: vec![f.neg(a), f.one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<E> {
        self.coeffs.last().copied()
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff<F: Field<Elem = E>>(&self, i: usize, f: &F) -> E {
        self.coeffs.get(i).copied().unwrap_or_else(|| f.zero())
    }

    /// Largest `s` with `x^s` dividing `self`; `None` for zero.
    pub fn x_valuation<F: Field<Elem = E>>(&self, f: &F) -> Option<usize> {
        self.coeffs.iter().position(|&c| !f.is_zero(c))
    }

    pub fn to_indices<F: Field<Elem = E>>(&self, f: &F) -> Vec<u64> {
        self.coeffs.iter().map(|&c| f.index(c)).collect()
    }

    pub fn add<F: Field<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, &s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = f.add(*c, s);
        }
        Self::from_coeffs(coeffs, f)
    }

    pub fn sub<F: Field<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.sub(self.coeff(i, f), other.coeff(i, f)))
            .collect();
        Self::from_coeffs(coeffs, f)
    }

    pub fn neg<F: Field<Elem = E>>(&self, f: &F) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect(),
        }
    }

    pub fn scale<F: Field<Elem = E>>(&self, c: E, f: &F) -> Self {
        if f.is_zero(c) {
            return Self::zero();
        }
        let coeffs = self.coeffs.iter().map(|&a| f.mul(a, c)).collect();
        Self::from_coeffs(coeffs, f)
    }

    /// Multiplies by `x^d`.
    pub fn shift<F: Field<Elem = E>>(&self, d: usize, f: &F) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![f.zero(); d];
        coeffs.extend_from_slice(&self.coeffs);
        UniPoly { coeffs }
    }

    pub fn mul<F: Field<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        Self::from_coeffs(coeffs, f)
    }

    pub fn pow<F: Field<Elem = E>>(&self, e: usize, f: &F) -> Self {
        (0..e).fold(Self::one(f), |acc, _| acc.mul(self, f))
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem<F: Field<Elem = E>>(&self, divisor: &Self, f: &F) -> Result<(Self, Self)> {
        let dg = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.coeffs[dg])?;
        let mut rem = self.coeffs.clone();
        let Some(df) = self.degree().filter(|&d| d >= dg) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![f.zero(); df - dg + 1];
        for top in (dg..=df).rev() {
            let c = rem[top];
            if f.is_zero(c) {
                continue;
            }
            let c = f.mul(c, lead_inv);
            let shift = top - dg;
            quot[shift] = c;
            for (i, &g) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = f.sub(rem[shift + i], f.mul(c, g));
            }
        }
        rem.truncate(dg);
        Ok((Self::from_coeffs(quot, f), Self::from_coeffs(rem, f)))
    }

    /// Horner evaluation.
    pub fn eval<F: Field<Elem = E>>(&self, a: E, f: &F) -> E {
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, &c| f.add(f.mul(acc, a), c))
    }

    /// `self(x + a)`, by repeated synthetic division by `x - a`.
    pub fn taylor_shift<F: Field<Elem = E>>(&self, a: E, f: &F) -> Self {
        let mut work = self.coeffs.clone();
        let mut out = Vec::with_capacity(work.len());
        while !work.is_empty() {
            // Synthetic division of `work` by (x - a): the remainder is work(a).
            let mut carry = f.zero();
            for c in work.iter_mut().rev() {
                let next = f.add(*c, f.mul(carry, a));
                *c = carry;
                carry = next;
            }
            out.push(carry);
            // work holds the quotient plus a zero top slot
            work.pop();
        }
        Self::from_coeffs(out, f)
    }

    /// Divides out a nonzero scalar so the leading coefficient is one.
    pub fn monic<F: Field<Elem = E>>(&self, f: &F) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(f.inv(lc).expect("leading coefficient is nonzero"), f),
            None => Self::zero(),
        }
    }
}

/// `prod (x - alpha_j)`.
pub fn node_poly<F: Field>(alphas: &[F::Elem], f: &F) -> Result<UniPoly<F::Elem>> {
    ensure_distinct(alphas)?;
    Ok(alphas
        .iter()
        .fold(UniPoly::one(f), |acc, &a| acc.mul(&UniPoly::linear(a, f), f)))
}

/// Lagrange basis `h_1..h_n` with `h_i(alpha_j) = [i == j]`.
pub fn lagrange_basis<F: Field>(alphas: &[F::Elem], f: &F) -> Result<Vec<UniPoly<F::Elem>>> {
    let eta = node_poly(alphas, f)?;
    alphas
        .iter()
        .map(|&a| {
            let (partial, rem) = eta.divrem(&UniPoly::linear(a, f), f)?;
            debug_assert!(rem.is_zero());
            let at_node = partial.eval(a, f);
            Ok(partial.scale(f.inv(at_node)?, f))
        })
        .collect()
}

/// The unique polynomial of degree `< n` taking value `values[i]` at `alphas[i]`.
pub fn interpolate<F: Field>(
    values: &[F::Elem],
    alphas: &[F::Elem],
    f: &F,
) -> Result<UniPoly<F::Elem>> {
    if values.len() != alphas.len() {
        return Err(Error::LengthMismatch {
            expected: alphas.len(),
            found: values.len(),
        });
    }
    let basis = lagrange_basis(alphas, f)?;
    Ok(combine_basis(values, &basis, f))
}

/// `sum values[i] * basis[i]`; skips zero weights.
pub(crate) fn combine_basis<F: Field>(
    values: &[F::Elem],
    basis: &[UniPoly<F::Elem>],
    f: &F,
) -> UniPoly<F::Elem> {
    values
        .iter()
        .zip(basis)
        .filter(|(&v, _)| !f.is_zero(v))
        .fold(UniPoly::zero(), |acc, (&v, h)| acc.add(&h.scale(v, f), f))
}

pub(crate) fn ensure_distinct<E: Ord + Copy>(alphas: &[E]) -> Result<()> {
    let mut sorted = alphas.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DuplicateNodes);
    }
    Ok(())
}
