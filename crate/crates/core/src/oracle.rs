//! Brute-force reference computations for cross-checking the fast paths.
//!
//! Nothing here is used by the decoders. The interpolation oracle solves the
//! multiplicity constraints as a plain linear system over the monomials in
//! increasing `>_{k-1}` order; the nearest-codeword oracle scans every
//! message.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::UniPoly;
use crate::rs::ReedSolomon;
use crate::wpoly::{BiPoly, Monomial, WeightedOrder};

/// Upper limit on the number of monomial columns the oracle will consider.
pub const MAX_MONOMIALS: usize = 2000;

/// Upper limit on `q^k` for [`nearest`].
pub const MAX_MESSAGES: u64 = 1_000_000;

/// Binomial coefficients reduced into the field, grown on demand.
struct Binomials<E> {
    rows: Vec<Vec<E>>,
}

impl<E: Copy> Binomials<E> {
    fn new<F: Field<Elem = E>>(f: &F) -> Self {
        Binomials {
            rows: vec![vec![f.one()]],
        }
    }

    fn get<F: Field<Elem = E>>(&mut self, n: usize, r: usize, f: &F) -> E {
        while self.rows.len() <= n {
            let prev = self.rows.last().expect("row 0 exists");
            let mut next = Vec::with_capacity(prev.len() + 1);
            next.push(f.one());
            for w in prev.windows(2) {
                next.push(f.add(w[0], w[1]));
            }
            next.push(f.one());
            self.rows.push(next);
        }
        if r > n {
            f.zero()
        } else {
            self.rows[n][r]
        }
    }
}

/// Coefficient of `x^a y^b` in `(x + alpha)^i (y + beta)^j`, for every
/// point `(alpha, beta)`, every `a + b < m`, and every monomial `x^i y^j`.
/// Rows are grouped by point; there are `n * m(m+1)/2` of them.
pub fn constraint_matrix<F: Field>(
    points: &[(F::Elem, F::Elem)],
    m: usize,
    monomials: &[Monomial],
    f: &F,
) -> Vec<Vec<F::Elem>> {
    let mut binom = Binomials::new(f);
    let columns: Vec<_> = monomials
        .iter()
        .map(|&mon| constraint_column(points, m, mon, &mut binom, f))
        .collect();
    let height = points.len() * m * (m + 1) / 2;
    (0..height)
        .map(|i| columns.iter().map(|c| c[i]).collect())
        .collect()
}

fn constraint_column<F: Field>(
    points: &[(F::Elem, F::Elem)],
    m: usize,
    mon: Monomial,
    binom: &mut Binomials<F::Elem>,
    f: &F,
) -> Vec<F::Elem> {
    let mut column = Vec::with_capacity(points.len() * m * (m + 1) / 2);
    for &(alpha, beta) in points {
        for total in 0..m {
            for b in 0..=total {
                let a = total - b;
                if mon.x < a || mon.y < b {
                    column.push(f.zero());
                    continue;
                }
                let cx = f.mul(binom.get(mon.x, a, f), f.pow(alpha, (mon.x - a) as u64));
                let cy = f.mul(binom.get(mon.y, b, f), f.pow(beta, (mon.y - b) as u64));
                column.push(f.mul(cx, cy));
            }
        }
    }
    column
}

/// Received points `(alpha_i, v_i)`.
pub fn points<F: Field>(code: &ReedSolomon<F>, word: &[F::Elem]) -> Result<Vec<(F::Elem, F::Elem)>> {
    code.check_len(word)?;
    Ok(code.alphas().iter().copied().zip(word.iter().copied()).collect())
}

/// One basis column kept during elimination.
struct Pivot<E> {
    row: usize,
    column: Vec<E>,
    /// Which combination of original columns produced `column`.
    combination: Vec<E>,
}

/// The nonzero polynomial with multiplicity `>= m` at every received point,
/// y-degree `<= l`, and the smallest possible leading monomial under
/// `>_{k-1}`, with leading coefficient one.
pub fn min_poly<F: Field>(
    code: &ReedSolomon<F>,
    word: &[F::Elem],
    m: usize,
    l: usize,
) -> Result<BiPoly<F::Elem>> {
    let order = WeightedOrder::for_dimension(code.k())?;
    min_poly_for_points(&points(code, word)?, m, l, &order, code.field())
}

/// [`min_poly`] for arbitrary points and order.
///
/// Columns (monomials) are added one at a time in increasing order; the first
/// column that depends linearly on the earlier ones yields the answer, since
/// every earlier prefix has a trivial kernel.
pub fn min_poly_for_points<F: Field>(
    points: &[(F::Elem, F::Elem)],
    m: usize,
    l: usize,
    order: &WeightedOrder,
    f: &F,
) -> Result<BiPoly<F::Elem>> {
    let monomials = order.monomials(l, MAX_MONOMIALS);
    let mut binom = Binomials::new(f);
    let mut columns = Vec::new();
    let mut pivots: Vec<Pivot<F::Elem>> = Vec::new();
    for (t, &mon) in monomials.iter().enumerate() {
        let original = constraint_column(points, m, mon, &mut binom, f);
        let mut column = original.clone();
        columns.push(original);
        let mut combination = vec![f.zero(); t + 1];
        combination[t] = f.one();
        for p in &pivots {
            let c = column[p.row];
            if f.is_zero(c) {
                continue;
            }
            let factor = f.div(c, p.column[p.row])?;
            for (x, &y) in column.iter_mut().zip(&p.column) {
                *x = f.sub(*x, f.mul(factor, y));
            }
            for (x, &y) in combination.iter_mut().zip(&p.combination) {
                *x = f.sub(*x, f.mul(factor, y));
            }
        }
        match column.iter().position(|&c| !f.is_zero(c)) {
            Some(row) => pivots.push(Pivot {
                row,
                column,
                combination,
            }),
            None => {
                assert!(
                    in_kernel(&columns, &combination, f),
                    "kernel vector fails the constraints"
                );
                return assemble(&monomials[..=t], &combination, l, f).normalize(order, f);
            }
        }
    }
    Err(Error::InstanceTooLarge(format!(
        "no solution among the first {MAX_MONOMIALS} monomials"
    )))
}

/// Whether `sum_t x[t] * columns[t]` is the zero vector.
pub fn in_kernel<F: Field>(columns: &[Vec<F::Elem>], x: &[F::Elem], f: &F) -> bool {
    let height = columns.first().map_or(0, Vec::len);
    (0..height).all(|i| {
        let dot = columns
            .iter()
            .zip(x)
            .fold(f.zero(), |acc, (col, &c)| f.add(acc, f.mul(col[i], c)));
        f.is_zero(dot)
    })
}

fn assemble<F: Field>(
    monomials: &[Monomial],
    coeffs: &[F::Elem],
    l: usize,
    f: &F,
) -> BiPoly<F::Elem> {
    let mut rows: Vec<Vec<F::Elem>> = vec![Vec::new(); l + 1];
    for (mon, &c) in monomials.iter().zip(coeffs) {
        let row = &mut rows[mon.y];
        if row.len() <= mon.x {
            row.resize(mon.x + 1, f.zero());
        }
        row[mon.x] = c;
    }
    BiPoly::from_rows(rows.into_iter().map(|r| UniPoly::from_coeffs(r, f)).collect())
}

/// `(message, codeword, distance)`.
pub type Nearest<E> = (UniPoly<E>, Vec<E>, usize);

/// Closest codeword by exhaustive search.
/// On ties the first message in canonical enumeration order wins.
pub fn nearest<F: Field>(code: &ReedSolomon<F>, word: &[F::Elem]) -> Result<Nearest<F::Elem>> {
    code.check_len(word)?;
    let f = code.field();
    let q = f.order();
    let k = code.k();
    let total = q
        .checked_pow(k as u32)
        .filter(|&t| t <= MAX_MESSAGES)
        .ok_or_else(|| Error::InstanceTooLarge(format!("q^k = {q}^{k} messages")))?;
    let digits_of = |index: u64| -> Result<Vec<F::Elem>> {
        (0..k)
            .scan(index, |rest, _| {
                let d = *rest % q;
                *rest /= q;
                Some(f.elem(d))
            })
            .collect()
    };
    let codeword_of = |digits: &[F::Elem]| -> Vec<F::Elem> {
        code.alphas()
            .iter()
            .map(|&a| {
                let mut acc = f.zero();
                let mut power = f.one();
                for &c in digits {
                    acc = f.add(acc, f.mul(c, power));
                    power = f.mul(power, a);
                }
                acc
            })
            .collect()
    };
    // (distance, message index)
    let mut best = (usize::MAX, 0);
    for index in 0..total {
        let codeword = codeword_of(&digits_of(index)?);
        let distance = word.iter().zip(&codeword).filter(|(a, b)| a != b).count();
        if distance < best.0 {
            best = (distance, index);
        }
    }
    let digits = digits_of(best.1)?;
    let codeword = codeword_of(&digits);
    Ok((UniPoly::from_coeffs(digits, f), codeword, best.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;

    #[test]
    fn one_point_minimal_polynomial_is_x() {
        let f = FieldCtx::prime(7).unwrap();
        let order = WeightedOrder::new(1);
        let q = min_poly_for_points(&[(f.zero(), f.zero())], 1, 1, &order, &f).unwrap();
        let x = UniPoly::from_indices(&[0, 1], &f).unwrap();
        assert_eq!(q, BiPoly::from_uni(x, 0, 1));
    }

    #[test]
    fn constraint_count_matches() {
        let f = FieldCtx::prime(11).unwrap();
        let pts: Vec<_> = (1..=5).map(|i| (f.elem(i).unwrap(), f.elem(2 * i % 11).unwrap())).collect();
        let order = WeightedOrder::new(2);
        for m in 1..4 {
            let mons = order.monomials(4, 10);
            assert_eq!(constraint_matrix(&pts, m, &mons, &f).len(), 5 * m * (m + 1) / 2);
        }
    }

    #[test]
    fn nearest_of_codeword_is_itself() {
        let code = ReedSolomon::new(FieldCtx::prime(7).unwrap(), 6, 3, None).unwrap();
        let f = code.field();
        let msg = UniPoly::from_indices(&[3, 1, 4], f).unwrap();
        let c = code.encode(&msg).unwrap();
        assert_eq!(nearest(&code, &c).unwrap(), (msg, c, 0));
    }

    #[test]
    fn nearest_refuses_huge_instances() {
        let code = ReedSolomon::new(FieldCtx::new(2, 8, None).unwrap(), 10, 3, None).unwrap();
        let v = vec![code.field().zero(); 10];
        assert!(matches!(nearest(&code, &v), Err(Error::InstanceTooLarge(_))));
    }
}
