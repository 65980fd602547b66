//! The arithmetic interface every algebraic routine in this crate is written
//! against.
//!
//! A [`Field`] is a context object: elements are small `Copy` values and all
//! arithmetic goes through the context, so fields whose parameters are only
//! known at runtime (characteristic, extension degree, modulus) fit the same
//! generic code as compile-time ones.

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::Result;

pub trait Field {
    type Elem: Copy + Eq + Ord + Hash + Debug;

    /// Number of elements, `q`.
    fn order(&self) -> u64;

    fn characteristic(&self) -> u64;

    /// The element with canonical index `index`, `0 <= index < q`.
    fn elem(&self, index: u64) -> Result<Self::Elem>;

    /// Canonical index of `a` in `[0, q)`. Inverse of [`Field::elem`].
    fn index(&self, a: Self::Elem) -> u64;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;

    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Result<Self::Elem>;
    fn div(&self, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem>;

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    fn pow(&self, a: Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    /// The image of the integer `n` under `Z -> F`.
    fn integer(&self, n: u64) -> Self::Elem {
        let p = self.characteristic();
        let mut acc = self.zero();
        let one = self.one();
        for _ in 0..(n % p) {
            acc = self.add(acc, one);
        }
        acc
    }

    /// All elements in canonical order.
    fn elements(&self) -> impl Iterator<Item = Self::Elem> + '_ {
        (0..self.order()).map(move |i| self.elem(i).expect("index below order"))
    }
}
