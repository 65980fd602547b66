//! Polynomials of y-degree at most `l`, viewed as elements of the free
//! `F[x]`-module with basis `1, y, ..., y^l`, together with the
//! `(1, u)`-weighted monomial order.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::UniPoly;

/// Monomial `x^x * y^y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: usize,
    pub y: usize,
}

impl Monomial {
    pub fn new(x: usize, y: usize) -> Self {
        Monomial { x, y }
    }
}

/// The order `>_u`: compare `x + u*y` first; on a tie the larger y-power wins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeightedOrder {
    u: usize,
}

impl WeightedOrder {
    /// # Panics
    /// If `u == 0`.
    pub fn new(u: usize) -> Self {
        assert!(u >= 1, "y weight must be at least 1");
        WeightedOrder { u }
    }

    /// The order `>_{k-1}` used for decoding RS(n, k).
    pub fn for_dimension(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::KTooSmall(k));
        }
        Ok(WeightedOrder { u: k - 1 })
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn weight(&self, m: Monomial) -> usize {
        m.x + self.u * m.y
    }

    pub fn compare(&self, a: Monomial, b: Monomial) -> Ordering {
        self.weight(a)
            .cmp(&self.weight(b))
            .then_with(|| a.y.cmp(&b.y))
    }

    /// The first `count` monomials with y-power at most `l`, ascending.
    pub fn monomials(&self, l: usize, count: usize) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(count);
        let mut w = 0;
        while out.len() < count {
            for y in 0..=l.min(w / self.u) {
                if out.len() == count {
                    break;
                }
                out.push(Monomial::new(w - self.u * y, y));
            }
            w += 1;
        }
        out
    }
}

/// `sum_j rows[j](x) * y^j` with a fixed number of rows `l + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiPoly<E> {
    rows: Vec<UniPoly<E>>,
}

impl<E: Copy + Eq> BiPoly<E> {
    pub fn zero(l: usize) -> Self {
        BiPoly {
            rows: vec![UniPoly::zero(); l + 1],
        }
    }

    /// # Panics
    /// If `rows` is empty.
    pub fn from_rows(rows: Vec<UniPoly<E>>) -> Self {
        assert!(!rows.is_empty(), "a bivariate polynomial needs at least one row");
        BiPoly { rows }
    }

    /// `p(x) * y^j` in the module of y-degree bound `l`.
    pub fn from_uni(p: UniPoly<E>, j: usize, l: usize) -> Self {
        let mut out = Self::zero(l.max(j));
        out.rows[j] = p;
        out
    }

    /// The y-degree bound of the ambient module.
    pub fn bound(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[UniPoly<E>] {
        &self.rows
    }

    pub fn row(&self, j: usize) -> &UniPoly<E> {
        &self.rows[j]
    }

    pub fn into_rows(self) -> Vec<UniPoly<E>> {
        self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(UniPoly::is_zero)
    }

    pub fn y_degree(&self) -> Option<usize> {
        self.rows.iter().rposition(|r| !r.is_zero())
    }

    /// Re-embeds into the module of y-degree bound `l`.
    pub fn with_bound(mut self, l: usize) -> Result<Self> {
        if self.y_degree().is_some_and(|d| d > l) {
            return Err(Error::YDegreeOverflow { bound: l });
        }
        self.rows.resize(l + 1, UniPoly::zero());
        Ok(self)
    }

    fn zip_rows(
        &self,
        other: &Self,
        mut op: impl FnMut(&UniPoly<E>, &UniPoly<E>) -> UniPoly<E>,
    ) -> Self {
        let len = self.rows.len().max(other.rows.len());
        let zero = UniPoly::zero();
        let rows = (0..len)
            .map(|j| {
                op(
                    self.rows.get(j).unwrap_or(&zero),
                    other.rows.get(j).unwrap_or(&zero),
                )
            })
            .collect();
        BiPoly { rows }
    }

    pub fn add<F: Field<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        self.zip_rows(other, |a, b| a.add(b, f))
    }

    pub fn sub<F: Field<Elem = E>>(&self, other: &Self, f: &F) -> Self {
        self.zip_rows(other, |a, b| a.sub(b, f))
    }

    pub fn neg<F: Field<Elem = E>>(&self, f: &F) -> Self {
        self.map_rows(|r| r.neg(f))
    }

    pub fn scale<F: Field<Elem = E>>(&self, c: E, f: &F) -> Self {
        self.map_rows(|r| r.scale(c, f))
    }

    /// Multiplies by `x^d`.
    pub fn shift_x<F: Field<Elem = E>>(&self, d: usize, f: &F) -> Self {
        self.map_rows(|r| r.shift(d, f))
    }

    pub fn mul_uni<F: Field<Elem = E>>(&self, g: &UniPoly<E>, f: &F) -> Self {
        self.map_rows(|r| r.mul(g, f))
    }

    fn map_rows(&self, op: impl FnMut(&UniPoly<E>) -> UniPoly<E>) -> Self {
        BiPoly {
            rows: self.rows.iter().map(op).collect(),
        }
    }

    /// `(y - h) * self`.
    pub fn mul_linear_y<F: Field<Elem = E>>(&self, h: &UniPoly<E>, f: &F) -> Result<Self> {
        if self.y_degree() == Some(self.bound()) {
            return Err(Error::YDegreeOverflow { bound: self.bound() });
        }
        let mut rows = vec![UniPoly::zero(); self.rows.len()];
        for (j, r) in self.rows.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            rows[j + 1] = rows[j + 1].add(r, f);
            rows[j] = rows[j].sub(&r.mul(h, f), f);
        }
        Ok(BiPoly { rows })
    }

    /// Product in `F[x, y]`, kept in the larger of the two modules.
    pub fn mul<F: Field<Elem = E>>(&self, other: &Self, f: &F) -> Result<Self> {
        let l = self.bound().max(other.bound());
        let mut out = Self::zero(l);
        for (i, a) in self.rows.iter().enumerate().filter(|(_, r)| !r.is_zero()) {
            for (j, b) in other.rows.iter().enumerate().filter(|(_, r)| !r.is_zero()) {
                if i + j > l {
                    return Err(Error::YDegreeOverflow { bound: l });
                }
                out.rows[i + j] = out.rows[i + j].add(&a.mul(b, f), f);
            }
        }
        Ok(out)
    }

    pub fn wdeg(&self, order: &WeightedOrder) -> Result<usize> {
        self.leading_term(order)
            .map(|(m, _)| order.weight(m))
    }

    /// The `>_u`-largest monomial with nonzero coefficient, and that coefficient.
    pub fn leading_term(&self, order: &WeightedOrder) -> Result<(Monomial, E)> {
        let mut best: Option<(Monomial, E)> = None;
        for (j, r) in self.rows.iter().enumerate() {
            let (Some(d), Some(lc)) = (r.degree(), r.leading_coeff()) else {
                continue;
            };
            let m = Monomial::new(d, j);
            if best.is_none_or(|(b, _)| order.compare(m, b) == Ordering::Greater) {
                best = Some((m, lc));
            }
        }
        best.ok_or(Error::ZeroPolynomial)
    }

    /// `self(x, h(x))`.
    pub fn eval_y<F: Field<Elem = E>>(&self, h: &UniPoly<E>, f: &F) -> UniPoly<E> {
        self.rows
            .iter()
            .rev()
            .fold(UniPoly::zero(), |acc, r| acc.mul(h, f).add(r, f))
    }

    /// `self(x, y + b)`, by Horner's rule in y.
    pub fn shift_y<F: Field<Elem = E>>(&self, b: E, f: &F) -> Self {
        let mut acc: Vec<UniPoly<E>> = vec![UniPoly::zero(); self.rows.len()];
        for r in self.rows.iter().rev() {
            // acc <- acc * (y + b) + r; the top slot stays zero until the last step
            let mut next = vec![UniPoly::zero(); acc.len()];
            for t in 0..acc.len() {
                let mut c = acc[t].scale(b, f);
                if t > 0 {
                    c = c.add(&acc[t - 1], f);
                }
                next[t] = c;
            }
            next[0] = next[0].add(r, f);
            acc = next;
        }
        BiPoly { rows: acc }
    }

    /// `self(x + a, y + b)`.
    pub fn shift<F: Field<Elem = E>>(&self, a: E, b: E, f: &F) -> Self {
        self.map_rows(|r| r.taylor_shift(a, f)).shift_y(b, f)
    }

    /// Multiplicity of the curve `self = 0` at the point `(a, b)`.
    pub fn multiplicity<F: Field<Elem = E>>(&self, a: E, b: E, f: &F) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let shifted = self.shift(a, b, f);
        Ok(shifted
            .rows
            .iter()
            .enumerate()
            .filter_map(|(j, r)| r.x_valuation(f).map(|v| v + j))
            .min()
            .expect("shift of a nonzero polynomial is nonzero"))
    }

    /// Largest `s` with `x^s` dividing every row; `None` for zero.
    pub fn x_valuation<F: Field<Elem = E>>(&self, f: &F) -> Option<usize> {
        self.rows.iter().filter_map(|r| r.x_valuation(f)).min()
    }

    /// Scales so the `>_u`-leading coefficient is one.
    pub fn normalize<F: Field<Elem = E>>(&self, order: &WeightedOrder, f: &F) -> Result<Self> {
        let (_, lc) = self.leading_term(order)?;
        Ok(self.scale(f.inv(lc)?, f))
    }

    /// Scales so the leading coefficient of the top nonzero row is one.
    pub fn y_monic<F: Field<Elem = E>>(&self, f: &F) -> Result<Self> {
        let top = self.y_degree().ok_or(Error::ZeroPolynomial)?;
        let lc = self.rows[top].leading_coeff().expect("nonzero row");
        Ok(self.scale(f.inv(lc)?, f))
    }

    /// Whether `other = c * self` for some nonzero scalar `c`.
    pub fn same_up_to_scalar<F: Field<Elem = E>>(&self, other: &Self, f: &F) -> bool {
        match (self.y_monic(f), other.y_monic(f)) {
            (Ok(a), Ok(b)) => a.trimmed() == b.trimmed(),
            (Err(_), Err(_)) => true,
            _ => false,
        }
    }

    /// Drops zero rows above the y-degree (keeps at least one row).
    fn trimmed(&self) -> Self {
        let keep = self.y_degree().map_or(1, |d| d + 1);
        BiPoly {
            rows: self.rows[..keep].to_vec(),
        }
    }

    pub fn to_indices<F: Field<Elem = E>>(&self, f: &F) -> Vec<Vec<u64>> {
        self.rows.iter().map(|r| r.to_indices(f)).collect()
    }
}
