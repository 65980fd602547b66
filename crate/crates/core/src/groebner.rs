//! Gröbner bases of submodules of `F[x,y]_l` under a weighted order.
//!
//! [`reduce`] takes generators `g_0..g_l` with `y-deg(g_i) = i` (a Gröbner
//! basis for the lexicographic order with y > x) and rewrites them in place
//! until the y-degrees of their `>_u`-leading terms are `0, 1, ..., l`. Since
//! those y-degrees are then pairwise distinct, the set is a Gröbner basis for
//! `>_u` and its smallest element is the minimal polynomial of the module.
//!
//! Generator `r` is processed for `r = 1..=l` in turn. While the leading term
//! of `g_r` sits at y-degree `s != r`, it is cancelled against `g_s`:
//!
//! * `d = deg(a_rs) - deg(a_ss) >= 0`: `g_r <- g_r - c x^d g_s`
//! * `d < 0`: `(g_s, g_r) <- (g_r, x^{-d} g_r - c g_s)`
//!
//! with `c = lc(a_rs) / lc(a_ss)`, where `a_ij` is the coefficient of `y^j` in
//! `g_i`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::UniPoly;
use crate::wpoly::{BiPoly, Monomial, WeightedOrder};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet<E> {
    gens: Vec<BiPoly<E>>,
    order: WeightedOrder,
}

impl<E: Copy + Eq> GeneratorSet<E> {
    /// Checks that `gens[i]` has y-degree exactly `i` and all share the bound
    /// `l = gens.len() - 1`.
    pub fn new(gens: Vec<BiPoly<E>>, order: WeightedOrder) -> Result<Self> {
        let l = gens.len().checked_sub(1).ok_or(Error::ZeroPolynomial)?;
        for (i, g) in gens.iter().enumerate() {
            if g.y_degree() != Some(i) || g.bound() != l {
                return Err(Error::MalformedInput {
                    index: i,
                    found: g.y_degree(),
                });
            }
        }
        Ok(GeneratorSet { gens, order })
    }

    pub fn gens(&self) -> &[BiPoly<E>] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<BiPoly<E>> {
        self.gens
    }

    pub fn order(&self) -> &WeightedOrder {
        &self.order
    }

    pub fn bound(&self) -> usize {
        self.gens.len() - 1
    }

    pub fn leading_terms(&self) -> Result<Vec<Monomial>> {
        self.gens
            .iter()
            .map(|g| g.leading_term(&self.order).map(|(m, _)| m))
            .collect()
    }

    /// Whether the leading terms have pairwise distinct y-degrees, which makes
    /// the set a Gröbner basis of the module it generates.
    pub fn has_distinct_leading_y(&self) -> bool {
        let Ok(lts) = self.leading_terms() else {
            return false;
        };
        let mut ys: Vec<usize> = lts.iter().map(|m| m.y).collect();
        ys.sort_unstable();
        ys.windows(2).all(|w| w[0] != w[1])
    }

    /// The generator with the smallest leading term, scaled to leading
    /// coefficient one.
    pub fn minimal_element<F: Field<Elem = E>>(&self, f: &F) -> Result<BiPoly<E>> {
        let mut best: Option<(&BiPoly<E>, Monomial)> = None;
        for g in &self.gens {
            let (m, _) = g.leading_term(&self.order)?;
            if best.is_none_or(|(_, b)| self.order.compare(m, b) == Ordering::Less) {
                best = Some((g, m));
            }
        }
        let (g, _) = best.expect("generator sets are nonempty");
        g.normalize(&self.order, f)
    }

    /// Remainder of `p` under multivariate division by the generators. For a
    /// Gröbner basis this is zero exactly when `p` lies in the module.
    pub fn normal_form<F: Field<Elem = E>>(&self, p: &BiPoly<E>, f: &F) -> Result<BiPoly<E>> {
        let lts = self
            .gens
            .iter()
            .map(|g| g.leading_term(&self.order))
            .collect::<Result<Vec<_>>>()?;
        let mut rest = p.clone().with_bound(self.bound())?;
        let mut rem = BiPoly::zero(self.bound());
        while let Ok((lt, lc)) = rest.leading_term(&self.order) {
            let divisor = lts
                .iter()
                .zip(&self.gens)
                .find(|((m, _), _)| m.y == lt.y && m.x <= lt.x);
            match divisor {
                Some(((m, glc), g)) => {
                    let c = f.div(lc, *glc)?;
                    rest = rest.sub(&g.scale(c, f).shift_x(lt.x - m.x, f), f);
                }
                None => {
                    let term = BiPoly::from_uni(UniPoly::monomial(lc, lt.x, f), lt.y, self.bound());
                    rest = rest.sub(&term, f);
                    rem = rem.add(&term, f);
                }
            }
        }
        Ok(rem)
    }
}

/// Whether one step replaced `g_r` alone or also swapped `g_r` into slot `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpdateKind {
    Reduce,
    Swap,
}

/// A single cancellation step, reported to the observer of [`reduce_traced`].
#[derive(Debug)]
pub struct Update<'a, E> {
    pub r: usize,
    pub s: usize,
    pub d: isize,
    pub kind: UpdateKind,
    pub before: &'a [BiPoly<E>],
    pub after: &'a [BiPoly<E>],
}

/// Converts a y-degree-triangular generating set into a `>_u` Gröbner basis.
pub fn reduce<F: Field>(gs: GeneratorSet<F::Elem>, f: &F) -> Result<GeneratorSet<F::Elem>> {
    run(gs, f, None)
}

/// [`reduce`], calling `observer` after every update with the states before
/// and after it.
pub fn reduce_traced<F: Field>(
    gs: GeneratorSet<F::Elem>,
    f: &F,
    mut observer: impl FnMut(&Update<'_, F::Elem>),
) -> Result<GeneratorSet<F::Elem>> {
    run(gs, f, Some(&mut observer))
}

type Observer<'o, E> = Option<&'o mut dyn FnMut(&Update<'_, E>)>;

fn run<F: Field>(
    mut gs: GeneratorSet<F::Elem>,
    f: &F,
    mut observer: Observer<'_, F::Elem>,
) -> Result<GeneratorSet<F::Elem>> {
    let order = gs.order;
    let g = &mut gs.gens;
    for r in 1..g.len() {
        loop {
            let (lt, lc_rs) = g[r]
                .leading_term(&order)
                .map_err(|_| Error::UnexpectedZero(r))?;
            let s = lt.y;
            if s == r {
                break;
            }
            let a_ss = g[s].row(s);
            let deg_ss = a_ss.degree().ok_or(Error::UnexpectedZero(s))?;
            let d = lt.x as isize - deg_ss as isize;
            let c = f.div(lc_rs, a_ss.leading_coeff().expect("nonzero row"))?;
            let before = observer.as_ref().map(|_| g.clone());

            let kind = if d >= 0 {
                g[r] = g[r].sub(&g[s].scale(c, f).shift_x(d as usize, f), f);
                UpdateKind::Reduce
            } else {
                let moved = g[r].clone();
                let old_s = std::mem::replace(&mut g[s], moved);
                g[r] = g[r].shift_x((-d) as usize, f).sub(&old_s.scale(c, f), f);
                UpdateKind::Swap
            };

            if let (Some(obs), Some(before)) = (observer.as_mut(), before.as_ref()) {
                obs(&Update {
                    r,
                    s,
                    d,
                    kind,
                    before,
                    after: g,
                });
            }
        }
    }
    Ok(gs)
}
