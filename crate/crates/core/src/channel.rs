//! Random messages, words and error patterns from a caller-supplied RNG.

use rand::seq::index::sample;
use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::UniPoly;

pub fn random_elem<F: Field, R: Rng + ?Sized>(rng: &mut R, f: &F) -> F::Elem {
    f.elem(rng.gen_range(0..f.order())).expect("index below order")
}

pub fn random_nonzero<F: Field, R: Rng + ?Sized>(rng: &mut R, f: &F) -> F::Elem {
    f.elem(rng.gen_range(1..f.order())).expect("index below order")
}

/// A uniformly random polynomial of degree `< k`.
pub fn random_message<F: Field, R: Rng + ?Sized>(k: usize, rng: &mut R, f: &F) -> UniPoly<F::Elem> {
    UniPoly::from_coeffs((0..k).map(|_| random_elem(rng, f)).collect(), f)
}

pub fn random_word<F: Field, R: Rng + ?Sized>(n: usize, rng: &mut R, f: &F) -> Vec<F::Elem> {
    (0..n).map(|_| random_elem(rng, f)).collect()
}

/// Changes `t` distinct positions of `word`, each to a different value.
/// Returns the changed positions in increasing order.
pub fn corrupt<F: Field, R: Rng + ?Sized>(
    word: &mut [F::Elem],
    t: usize,
    rng: &mut R,
    f: &F,
) -> Result<Vec<usize>> {
    if t > word.len() {
        return Err(Error::LengthMismatch {
            expected: word.len(),
            found: t,
        });
    }
    let mut positions = sample(rng, word.len(), t).into_vec();
    positions.sort_unstable();
    for &i in &positions {
        word[i] = f.add(word[i], random_nonzero(rng, f));
    }
    Ok(positions)
}
