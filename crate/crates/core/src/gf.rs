//! Small finite fields GF(p^m) with q <= 2^16.
//!
//! Prime fields use plain modular arithmetic with a precomputed inverse table.
//! Extension fields use log/antilog tables over a primitive element found at
//! construction. Every multiplication (and division) is tallied in a per-context
//! counter so that algorithm costs can be measured in field multiplications.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::field::Field;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// Element of a [`FieldCtx`], stored as its canonical index.
///
/// For extension fields the index, written in base p, is the coefficient vector
/// of the residue polynomial (least significant digit = constant term).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone)]
enum Repr {
    Prime {
        inverse: Vec<u32>,
    },
    Tables {
        /// exp[i] = g^i for 0 <= i < 2(q-1), doubled to skip a reduction.
        exp: Vec<u32>,
        log: Vec<u32>,
        /// p^i for each digit position.
        place: Vec<u32>,
    },
}

/// Arithmetic context for GF(p^m).
#[derive(Debug)]
pub struct FieldCtx {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    repr: Repr,
    mults: AtomicU64,
    inversions: AtomicU64,
}

impl Clone for FieldCtx {
    /// The clone starts from the current counter values and counts independently.
    fn clone(&self) -> Self {
        FieldCtx {
            p: self.p,
            m: self.m,
            q: self.q,
            modulus: self.modulus.clone(),
            repr: self.repr.clone(),
            mults: AtomicU64::new(self.mult_count()),
            inversions: AtomicU64::new(self.inversion_count()),
        }
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    /// Builds GF(p^m). `modulus`, when given, lists the m+1 coefficients of the
    /// defining polynomial from the constant term up; it is made monic and must
    /// be irreducible. Without one, the first irreducible in ascending order of
    /// its lower coefficients (read as a base-p integer) is used.
    pub fn new(p: u64, m: u32, modulus: Option<&[u64]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if m == 0 {
            return Err(Error::ZeroExtensionDegree);
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::FieldTooLarge { p, m })?;
        let p32 = p as u32;

        if m == 1 {
            if let Some(coeffs) = modulus {
                // A degree-1 modulus carries no information but must be well formed.
                check_modulus_shape(coeffs, 1, p)?;
            }
            let mut inverse = vec![0u32; p as usize];
            for a in 1..p {
                inverse[a as usize] = mod_pow(a, p - 2, p) as u32;
            }
            return Ok(FieldCtx {
                p: p32,
                m,
                q: q as u32,
                modulus: Vec::new(),
                repr: Repr::Prime { inverse },
                mults: AtomicU64::new(0),
                inversions: AtomicU64::new(0),
            });
        }

        let modulus = match modulus {
            Some(coeffs) => {
                check_modulus_shape(coeffs, m as usize, p)?;
                let lead_inv = mod_pow(coeffs[m as usize] % p, p - 2, p);
                let monic: Vec<u32> = coeffs
                    .iter()
                    .map(|&c| ((c % p) * lead_inv % p) as u32)
                    .collect();
                if !modp::is_irreducible(&monic, p32) {
                    return Err(Error::ReducibleModulus { p });
                }
                monic
            }
            None => modp::first_irreducible(m as usize, p32),
        };

        let place: Vec<u32> = (0..m).map(|i| p32.pow(i)).collect();
        let order = q as u32;
        let generator = (2..order)
            .find(|&g| modp::is_primitive(g, &modulus, p32, order))
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = vec![0u32; 2 * (order as usize - 1)];
        let mut log = vec![0u32; order as usize];
        let mut acc = 1u32;
        for i in 0..(order - 1) {
            exp[i as usize] = acc;
            exp[(i + order - 1) as usize] = acc;
            log[acc as usize] = i;
            acc = modp::mul_residues(acc, generator, &modulus, p32);
        }
        debug_assert_eq!(acc, 1);

        Ok(FieldCtx {
            p: p32,
            m,
            q: order,
            modulus,
            repr: Repr::Tables { exp, log, place },
            mults: AtomicU64::new(0),
            inversions: AtomicU64::new(0),
        })
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1, None)
    }

    pub fn extension_degree(&self) -> u32 {
        self.m
    }

    /// Monic defining polynomial, constant term first. Empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn mult_count(&self) -> u64 {
        self.mults.load(Ordering::Relaxed)
    }

    pub fn inversion_count(&self) -> u64 {
        self.inversions.load(Ordering::Relaxed)
    }

    pub fn reset_counters(&self) {
        self.mults.store(0, Ordering::Relaxed);
        self.inversions.store(0, Ordering::Relaxed);
    }

    fn count_mul(&self) {
        self.mults.fetch_add(1, Ordering::Relaxed);
    }

    fn count_inv(&self) {
        self.inversions.fetch_add(1, Ordering::Relaxed);
    }

    fn raw_inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.repr {
            Repr::Prime { inverse } => inverse[a as usize],
            Repr::Tables { exp, log, .. } => {
                let order = self.q - 1;
                exp[((order - log[a as usize]) % order) as usize]
            }
        })
    }

    fn raw_mul(&self, a: u32, b: u32) -> u32 {
        match &self.repr {
            Repr::Prime { .. } => ((a as u64 * b as u64) % self.p as u64) as u32,
            Repr::Tables { exp, log, .. } => {
                if a == 0 || b == 0 {
                    0
                } else {
                    exp[(log[a as usize] + log[b as usize]) as usize]
                }
            }
        }
    }
}

impl Field for FieldCtx {
    type Elem = FieldElement;

    fn order(&self) -> u64 {
        self.q as u64
    }

    fn characteristic(&self) -> u64 {
        self.p as u64
    }

    fn elem(&self, index: u64) -> Result<FieldElement> {
        if index < self.q as u64 {
            Ok(FieldElement(index as u32))
        } else {
            Err(Error::ValueOutOfRange {
                value: index,
                order: self.q as u64,
            })
        }
    }

    fn index(&self, a: FieldElement) -> u64 {
        a.0 as u64
    }

    fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        match &self.repr {
            Repr::Prime { .. } => {
                let s = a.0 + b.0;
                FieldElement(if s >= self.p { s - self.p } else { s })
            }
            Repr::Tables { .. } if self.p == 2 => FieldElement(a.0 ^ b.0),
            Repr::Tables { place, .. } => {
                let p = self.p;
                let (mut x, mut y, mut out) = (a.0, b.0, 0);
                for &w in place {
                    let d = (x % p + y % p) % p;
                    out += d * w;
                    x /= p;
                    y /= p;
                }
                FieldElement(out)
            }
        }
    }

    fn neg(&self, a: FieldElement) -> FieldElement {
        match &self.repr {
            Repr::Prime { .. } => FieldElement(if a.0 == 0 { 0 } else { self.p - a.0 }),
            Repr::Tables { .. } if self.p == 2 => a,
            Repr::Tables { place, .. } => {
                let p = self.p;
                let (mut x, mut out) = (a.0, 0);
                for &w in place {
                    let d = (p - x % p) % p;
                    out += d * w;
                    x /= p;
                }
                FieldElement(out)
            }
        }
    }

    fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.repr {
            Repr::Prime { .. } => FieldElement(if a.0 >= b.0 {
                a.0 - b.0
            } else {
                a.0 + self.p - b.0
            }),
            _ => self.add(a, self.neg(b)),
        }
    }

    fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a.0 < self.q && b.0 < self.q);
        self.count_mul();
        FieldElement(self.raw_mul(a.0, b.0))
    }

    fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        let r = self.raw_inv(a.0)?;
        self.count_inv();
        Ok(FieldElement(r))
    }

    fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        let binv = self.raw_inv(b.0)?;
        self.count_inv();
        self.count_mul();
        Ok(FieldElement(self.raw_mul(a.0, binv)))
    }

    fn integer(&self, n: u64) -> FieldElement {
        FieldElement((n % self.p as u64) as u32)
    }
}

fn check_modulus_shape(coeffs: &[u64], m: usize, p: u64) -> Result<()> {
    if coeffs.len() != m + 1 || coeffs[m].is_multiple_of(p) {
        return Err(Error::InvalidModulus {
            expected: m,
            found: coeffs.len(),
        });
    }
    Ok(())
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_pow(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Uncounted polynomial arithmetic over GF(p), used only to build tables.
mod modp {
    use super::mod_pow;

    fn trim(v: &mut Vec<u32>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub(super) fn rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
        let mut r: Vec<u32> = f.to_vec();
        trim(&mut r);
        let dg = g.len() - 1;
        let lead_inv = mod_pow(g[dg] as u64, p as u64 - 2, p as u64) as u32;
        while r.len() > dg {
            let top = r.len() - 1;
            let c = (r[top] as u64 * lead_inv as u64 % p as u64) as u32;
            let shift = top - dg;
            for (i, &gi) in g.iter().enumerate() {
                let sub = (c as u64 * gi as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
            trim(&mut r);
        }
        r
    }

    fn digits(mut x: u32, len: usize, p: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            out.push(x % p);
            x /= p;
        }
        out
    }

    fn undigits(v: &[u32], p: u32) -> u32 {
        v.iter().rev().fold(0, |acc, &d| acc * p + d)
    }

    pub(super) fn is_irreducible(f: &[u32], p: u32) -> bool {
        let deg = f.len() - 1;
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d as u32);
            for low in 0..count {
                let mut g = digits(low as u32, d, p);
                g.push(1);
                if rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    pub(super) fn first_irreducible(m: usize, p: u32) -> Vec<u32> {
        let count = (p as u64).pow(m as u32);
        (0..count)
            .map(|low| {
                let mut f = digits(low as u32, m, p);
                f.push(1);
                f
            })
            .find(|f| is_irreducible(f, p))
            .expect("irreducible polynomials exist in every degree")
    }

    pub(super) fn mul_residues(a: u32, b: u32, modulus: &[u32], p: u32) -> u32 {
        let m = modulus.len() - 1;
        let da = digits(a, m, p);
        let db = digits(b, m, p);
        let mut prod = vec![0u32; 2 * m];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
            }
        }
        let r = rem(&prod, modulus, p);
        undigits(&r, p)
    }

    fn pow_residue(a: u32, mut e: u64, modulus: &[u32], p: u32) -> u32 {
        let (mut base, mut acc) = (a, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_residues(acc, base, modulus, p);
            }
            base = mul_residues(base, base, modulus, p);
            e >>= 1;
        }
        acc
    }

    pub(super) fn is_primitive(g: u32, modulus: &[u32], p: u32, q: u32) -> bool {
        let order = (q - 1) as u64;
        let mut rest = order;
        let mut factor = 2u64;
        let mut primes = Vec::new();
        while factor * factor <= rest {
            if rest.is_multiple_of(factor) {
                primes.push(factor);
                while rest.is_multiple_of(factor) {
                    rest /= factor;
                }
            }
            factor += 1;
        }
        if rest > 1 {
            primes.push(rest);
        }
        primes
            .iter()
            .all(|&r| pow_residue(g, order / r, modulus, p) != 1)
    }
}
