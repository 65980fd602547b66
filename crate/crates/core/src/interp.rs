//! Interpolation step of list decoding: find the minimal polynomial, under
//! `>_{k-1}`, of the module of polynomials with y-degree at most `l` passing
//! through every received point `(alpha_i, v_i)` with multiplicity `m`.
//!
//! The module is generated by `(y - h_v)^i eta^(m-i)` for `i <= m` and
//! `y^(i-m) (y - h_v)^m` for `m < i <= l`; these are triangular in y, so
//! [`groebner::reduce`] turns them into a Gröbner basis directly.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{self, GeneratorSet};
use crate::poly::UniPoly;
use crate::rs::ReedSolomon;
use crate::wpoly::{BiPoly, WeightedOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InterpParams {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    /// Number of linear constraints plus one, `n * m(m+1)/2 + 1`.
    pub constraints: usize,
    pub l: usize,
}

impl InterpParams {
    pub fn order(&self) -> WeightedOrder {
        WeightedOrder::new(self.k - 1)
    }

    /// Whether `l < sqrt(2N/(k-1) + 1/4) - 1/2`, evaluated exactly as
    /// `l(l+1)(k-1) < 2N`.
    pub fn below_y_degree_bound(&self, l: usize) -> bool {
        l * (l + 1) * (self.k - 1) < 2 * self.constraints
    }
}

/// The largest `l` strictly below the y-degree bound, unless overridden.
pub fn choose_params(n: usize, k: usize, m: usize, l_override: Option<usize>) -> Result<InterpParams> {
    if k < 2 {
        return Err(Error::KTooSmall(k));
    }
    if m == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let constraints = n * m * (m + 1) / 2 + 1;
    let mut params = InterpParams {
        n,
        k,
        m,
        constraints,
        l: 0,
    };
    params.l = match l_override {
        Some(l) if l < m => return Err(Error::LOverrideBelowM { l, m }),
        Some(l) => l,
        None => {
            let mut l = 0;
            while params.below_y_degree_bound(l + 1) {
                l += 1;
            }
            l
        }
    };
    Ok(params)
}

/// Generators of the interpolation module, `g_i` of y-degree exactly `i`.
pub fn build_generators<F: Field>(
    code: &ReedSolomon<F>,
    word: &[F::Elem],
    params: &InterpParams,
) -> Result<GeneratorSet<F::Elem>> {
    let hv = code.interpolate(word)?;
    generators_from(code, &hv, params)
}

fn generators_from<F: Field>(
    code: &ReedSolomon<F>,
    hv: &UniPoly<F::Elem>,
    params: &InterpParams,
) -> Result<GeneratorSet<F::Elem>> {
    let f = code.field();
    let (m, l) = (params.m, params.l);
    let eta = code.node_poly();

    // (y - h_v)^i for i = 0..=m
    let mut lin_pows = vec![BiPoly::from_uni(UniPoly::one(f), 0, l)];
    for i in 0..m {
        let next = lin_pows[i].mul_linear_y(hv, f)?;
        lin_pows.push(next);
    }
    // eta^j for j = 0..=m
    let mut eta_pows = vec![UniPoly::one(f)];
    for j in 0..m {
        let next = eta_pows[j].mul(eta, f);
        eta_pows.push(next);
    }

    let mut gens = Vec::with_capacity(l + 1);
    for i in 0..=m {
        gens.push(lin_pows[i].mul_uni(&eta_pows[m - i], f));
    }
    for i in (m + 1)..=l {
        let mut rows = vec![UniPoly::zero(); l + 1];
        for (j, r) in lin_pows[m].rows().iter().enumerate().take(m + 1) {
            rows[j + i - m] = r.clone();
        }
        gens.push(BiPoly::from_rows(rows));
    }
    GeneratorSet::new(gens, params.order())
}

/// Everything produced by one interpolation run.
#[derive(Debug, Clone)]
pub struct Interpolation<E> {
    pub params: InterpParams,
    pub hv: UniPoly<E>,
    pub initial: GeneratorSet<E>,
    pub basis: GeneratorSet<E>,
    /// Minimal element of `basis`, leading coefficient one.
    pub q: BiPoly<E>,
}

pub fn interpolate_full<F: Field>(
    code: &ReedSolomon<F>,
    word: &[F::Elem],
    m: usize,
    l_override: Option<usize>,
) -> Result<Interpolation<F::Elem>> {
    let params = choose_params(code.n(), code.k(), m, l_override)?;
    let f = code.field();
    let hv = code.interpolate(word)?;
    let initial = generators_from(code, &hv, &params)?;
    let basis = groebner::reduce(initial.clone(), f)?;
    let q = basis.minimal_element(f)?;
    Ok(Interpolation {
        params,
        hv,
        initial,
        basis,
        q,
    })
}

/// The minimal interpolation polynomial `Q` and the parameters used.
pub fn interpolate_q<F: Field>(
    code: &ReedSolomon<F>,
    word: &[F::Elem],
    m: usize,
    l_override: Option<usize>,
) -> Result<(BiPoly<F::Elem>, InterpParams)> {
    let params = choose_params(code.n(), code.k(), m, l_override)?;
    let f = code.field();
    let gens = build_generators(code, word, &params)?;
    let basis = groebner::reduce(gens, f)?;
    Ok((basis.minimal_element(f)?, params))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;

    #[test]
    fn params_examples() {
        let p = choose_params(6, 3, 2, None).unwrap();
        assert_eq!((p.constraints, p.l), (19, 3));
        let p = choose_params(6, 3, 1, None).unwrap();
        assert_eq!((p.constraints, p.l), (7, 2));
        let p = choose_params(6, 3, 2, Some(2)).unwrap();
        assert_eq!(p.l, 2);
    }

    #[test]
    fn params_errors() {
        assert_eq!(choose_params(6, 1, 2, None).unwrap_err(), Error::KTooSmall(1));
        assert_eq!(
            choose_params(6, 3, 2, Some(1)).unwrap_err(),
            Error::LOverrideBelowM { l: 1, m: 2 }
        );
        assert_eq!(choose_params(6, 3, 0, None).unwrap_err(), Error::ZeroMultiplicity);
    }

    #[test]
    fn bound_matches_floating_formula() {
        for n in 4..40 {
            for k in 2..n {
                for m in 1..5 {
                    let p = choose_params(n, k, m, None).unwrap();
                    let bound = (2.0 * p.constraints as f64 / (k - 1) as f64 + 0.25).sqrt() - 0.5;
                    assert!((p.l as f64) < bound);
                    // skip exact-integer bounds where float rounding is ambiguous
                    if (bound - bound.round()).abs() > 1e-9 {
                        assert!((p.l + 1) as f64 > bound);
                    }
                    assert!(p.l >= m);
                }
            }
        }
    }

    #[test]
    fn generators_for_m1_l1() {
        let code = ReedSolomon::new(FieldCtx::prime(7).unwrap(), 6, 3, None).unwrap();
        let f = code.field();
        let v = code.word_from_indices(&[6, 2, 4, 4, 4, 2]).unwrap();
        let params = choose_params(6, 3, 1, Some(1)).unwrap();
        let gs = build_generators(&code, &v, &params).unwrap();
        let hv = code.interpolate(&v).unwrap();
        assert_eq!(gs.gens()[0], BiPoly::from_uni(code.node_poly().clone(), 0, 1));
        assert_eq!(gs.gens()[1], BiPoly::from_rows(vec![hv.neg(f), UniPoly::one(f)]));
    }
}
