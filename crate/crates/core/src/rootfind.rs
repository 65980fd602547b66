//! Polynomial roots `y = h(x)` of a bivariate polynomial, by coefficient
//! peeling: divide out the largest power of x, find the field roots `g` of
//! `Q(0, y)`, and recurse on `Q(x, x*y + g)`, fixing one coefficient of `h`
//! per level.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::UniPoly;
use crate::wpoly::BiPoly;

/// All `h` with `deg h < k` and `Q(x, h(x)) = 0`, sorted and without repeats.
pub fn y_roots<F: Field>(q: &BiPoly<F::Elem>, k: usize, f: &F) -> Result<Vec<UniPoly<F::Elem>>> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut found = Vec::new();
    let mut prefix = Vec::with_capacity(k);
    peel(q.clone(), k, &mut prefix, &mut found, f);
    found.retain(|h| q.eval_y(h, f).is_zero());
    found.sort();
    found.dedup();
    Ok(found)
}

fn peel<F: Field>(
    q: BiPoly<F::Elem>,
    k: usize,
    prefix: &mut Vec<F::Elem>,
    found: &mut Vec<UniPoly<F::Elem>>,
    f: &F,
) {
    let s = q.x_valuation(f).expect("substitution keeps Q nonzero");
    let q = strip_x(q, s, f);
    if prefix.len() == k {
        found.push(UniPoly::from_coeffs(prefix.clone(), f));
        return;
    }
    let at_zero = UniPoly::from_coeffs(q.rows().iter().map(|r| r.coeff(0, f)).collect(), f);
    for g in f.elements() {
        if !f.is_zero(at_zero.eval(g, f)) {
            continue;
        }
        // Q(x, x*y + g): shift y by g, then scale row j by x^j
        let rows = q
            .shift_y(g, f)
            .into_rows()
            .into_iter()
            .enumerate()
            .map(|(j, r)| r.shift(j, f))
            .collect();
        prefix.push(g);
        peel(BiPoly::from_rows(rows), k, prefix, found, f);
        prefix.pop();
    }
}

fn strip_x<F: Field>(q: BiPoly<F::Elem>, s: usize, f: &F) -> BiPoly<F::Elem> {
    if s == 0 {
        return q;
    }
    BiPoly::from_rows(
        q.into_rows()
            .into_iter()
            .map(|r| UniPoly::from_coeffs(r.coeffs().iter().skip(s).copied().collect(), f))
            .collect(),
    )
}
