//! End-to-end decoders.
//!
//! [`list_decode`] interpolates, finds every y-root of degree `< k` and reports
//! each as a candidate with its distance to the received word. Any codeword
//! `c` with `wt(v - c) < n - w/m` (where `w` is the weighted degree of `Q`) is
//! guaranteed to be among them.
//!
//! [`unique_decode`] is the `m = l = 1` specialisation: the two-generator
//! reduction written out on the four polynomials `A, B, C, D`, where
//! `A*y + B` and `C*y + D` play the roles of `g_0` and `g_1`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::interp::{self, InterpParams};
use crate::poly::UniPoly;
use crate::rootfind;
use crate::rs::{hamming_distance, ReedSolomon};
use crate::wpoly::BiPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate<E> {
    pub message: UniPoly<E>,
    pub codeword: Vec<E>,
    pub distance: usize,
}

#[derive(Debug, Clone)]
pub struct DecodeResult<E> {
    pub q: BiPoly<E>,
    pub params: InterpParams,
    /// `(1, k-1)`-weighted degree of `q`.
    pub w: usize,
    /// Sorted by distance, then by message.
    pub candidates: Vec<Candidate<E>>,
    /// Largest `t` with `t < n - w/m`; `None` when no `t >= 0` qualifies.
    pub guarantee_radius: Option<usize>,
}

impl<E> DecodeResult<E> {
    /// Candidates whose distance is inside the guaranteed radius.
    pub fn within_radius(&self) -> impl Iterator<Item = &Candidate<E>> {
        let r = self.guarantee_radius;
        self.candidates
            .iter()
            .filter(move |c| r.is_some_and(|r| c.distance <= r))
    }
}

/// Largest `t >= 0` with `t < n - w/m`, i.e. `t*m + w < n*m`.
pub fn guarantee_radius(n: usize, m: usize, w: usize) -> Option<usize> {
    (n * m > w).then(|| (n * m - w - 1) / m)
}

pub fn list_decode<F: Field>(
    code: &ReedSolomon<F>,
    word: &[F::Elem],
    m: usize,
) -> Result<DecodeResult<F::Elem>> {
    list_decode_with(code, word, m, None)
}

/// [`list_decode`] with an explicit y-degree bound.
pub fn list_decode_with<F: Field>(
    code: &ReedSolomon<F>,
    word: &[F::Elem],
    m: usize,
    l_override: Option<usize>,
) -> Result<DecodeResult<F::Elem>> {
    code.check_len(word)?;
    let f = code.field();
    let (q, params) = interp::interpolate_q(code, word, m, l_override)?;
    let w = q.wdeg(&params.order())?;
    let mut candidates = rootfind::y_roots(&q, code.k(), f)?
        .into_iter()
        .map(|message| {
            let codeword = code.evaluate(&message);
            let distance = hamming_distance(word, &codeword)?;
            Ok(Candidate {
                message,
                codeword,
                distance,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    candidates.sort_by(|a, b| {
        a.distance
            .cmp(&b.distance)
            .then_with(|| a.message.cmp(&b.message))
    });
    Ok(DecodeResult {
        q,
        params,
        w,
        candidates,
        guarantee_radius: guarantee_radius(code.n(), m, w),
    })
}

/// Final state of the four-polynomial reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyEquationState<E> {
    pub a: UniPoly<E>,
    pub b: UniPoly<E>,
    pub c: UniPoly<E>,
    pub d: UniPoly<E>,
}

impl<E: Copy + Eq> KeyEquationState<E> {
    /// `(A*y + B, C*y + D)`.
    pub fn as_generators(&self) -> (BiPoly<E>, BiPoly<E>) {
        (
            BiPoly::from_rows(vec![self.b.clone(), self.a.clone()]),
            BiPoly::from_rows(vec![self.d.clone(), self.c.clone()]),
        )
    }
}

/// Runs the reduction from `(A, B, C, D) = (0, eta, 1, -h_v)` until
/// `deg C + k - 1 >= deg D`.
pub fn solve_key_equation<F: Field>(
    code: &ReedSolomon<F>,
    word: &[F::Elem],
) -> Result<KeyEquationState<F::Elem>> {
    let f = code.field();
    let k = code.k();
    let mut a = UniPoly::zero();
    let mut b = code.node_poly().clone();
    let mut c = UniPoly::one(f);
    let mut d = code.interpolate(word)?.neg(f);
    loop {
        let deg_c = c.degree().ok_or(Error::UnexpectedZero(1))?;
        if Some(deg_c + k - 1) >= d.degree() {
            break;
        }
        let deg_d = d.degree().expect("D outranks C*y, so D is nonzero");
        let deg_b = b.degree().ok_or(Error::UnexpectedZero(0))?;
        let coef = f.div(
            d.leading_coeff().expect("nonzero"),
            b.leading_coeff().expect("nonzero"),
        )?;
        if deg_d >= deg_b {
            let shift = deg_d - deg_b;
            c = c.sub(&a.scale(coef, f).shift(shift, f), f);
            d = d.sub(&b.scale(coef, f).shift(shift, f), f);
        } else {
            let shift = deg_b - deg_d;
            let next_c = c.shift(shift, f).sub(&a.scale(coef, f), f);
            let next_d = d.shift(shift, f).sub(&b.scale(coef, f), f);
            a = std::mem::replace(&mut c, next_c);
            b = std::mem::replace(&mut d, next_d);
        }
    }
    Ok(KeyEquationState { a, b, c, d })
}

/// Decodes up to `floor((n - k)/2)` errors. Returns
/// [`Error::NoCodewordInRange`] when no codeword lies that close.
pub fn unique_decode<F: Field>(code: &ReedSolomon<F>, word: &[F::Elem]) -> Result<UniPoly<F::Elem>> {
    let f = code.field();
    let state = solve_key_equation(code, word)?;
    let (quot, rem) = state.d.divrem(&state.c, f)?;
    if !rem.is_zero() {
        return Err(Error::NoCodewordInRange);
    }
    let h = quot.neg(f);
    if h.degree().is_some_and(|d| d >= code.k()) {
        return Err(Error::NoCodewordInRange);
    }
    // With n - k odd a root can sit one step outside the radius.
    if hamming_distance(word, &code.evaluate(&h))? > code.tau() {
        return Err(Error::NoCodewordInRange);
    }
    Ok(h)
}

/// `f_e * (y - h_c)`, where `f_e` vanishes exactly on the error positions of
/// `word` relative to `codeword`. For at most `tau` errors this is the
/// minimal polynomial of the `m = l = 1` interpolation module.
pub fn error_locator_check<F: Field>(
    code: &ReedSolomon<F>,
    word: &[F::Elem],
    codeword: &[F::Elem],
) -> Result<BiPoly<F::Elem>> {
    code.check_len(word)?;
    let f = code.field();
    let weight = hamming_distance(word, codeword)?;
    if weight > code.tau() {
        return Err(Error::TooManyErrors {
            weight,
            tau: code.tau(),
        });
    }
    let hc = code.interpolate(codeword)?;
    let locator = word
        .iter()
        .zip(codeword)
        .zip(code.alphas())
        .filter(|((v, c), _)| v != c)
        .fold(UniPoly::one(f), |acc, (_, &a)| acc.mul(&UniPoly::linear(a, f), f));
    BiPoly::from_uni(UniPoly::one(f), 0, 1)
        .mul_linear_y(&hc, f)
        .map(|g| g.mul_uni(&locator, f))
}
