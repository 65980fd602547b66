//! Reed-Solomon codes as evaluation codes: a message polynomial of degree `< k`
//! is sent as its values at `n` distinct points.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{self, UniPoly};

/// RS(n, k) over a field, with the node polynomial and Lagrange basis cached.
#[derive(Debug, Clone)]
pub struct ReedSolomon<F: Field> {
    field: F,
    k: usize,
    alphas: Vec<F::Elem>,
    eta: UniPoly<F::Elem>,
    basis: Vec<UniPoly<F::Elem>>,
}

impl<F: Field> ReedSolomon<F> {
    /// Builds RS(n, k). Without explicit `alphas` the first `n` nonzero field
    /// elements in canonical order are used.
    pub fn new(field: F, n: usize, k: usize, alphas: Option<Vec<F::Elem>>) -> Result<Self> {
        if k < 2 {
            return Err(Error::KTooSmall(k));
        }
        if k >= n {
            return Err(Error::InvalidCode(format!("need k < n, got k = {k}, n = {n}")));
        }
        let alphas = match alphas {
            Some(a) => {
                if a.len() != n {
                    return Err(Error::LengthMismatch {
                        expected: n,
                        found: a.len(),
                    });
                }
                a
            }
            None => {
                if n as u64 >= field.order() {
                    return Err(Error::InvalidCode(format!(
                        "n = {n} exceeds the {} nonzero elements of the field",
                        field.order() - 1
                    )));
                }
                (1..=n as u64)
                    .map(|i| field.elem(i))
                    .collect::<Result<_>>()?
            }
        };
        let eta = poly::node_poly(&alphas, &field)?;
        let basis = poly::lagrange_basis(&alphas, &field)?;
        Ok(ReedSolomon {
            field,
            k,
            alphas,
            eta,
            basis,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn alphas(&self) -> &[F::Elem] {
        &self.alphas
    }

    /// `prod (x - alpha_j)`.
    pub fn node_poly(&self) -> &UniPoly<F::Elem> {
        &self.eta
    }

    pub fn lagrange_basis(&self) -> &[UniPoly<F::Elem>] {
        &self.basis
    }

    /// Unique decoding radius `floor((n - k) / 2)`.
    pub fn tau(&self) -> usize {
        (self.n() - self.k) / 2
    }

    pub fn encode(&self, message: &UniPoly<F::Elem>) -> Result<Vec<F::Elem>> {
        if let Some(d) = message.degree().filter(|&d| d >= self.k) {
            return Err(Error::MessageDegreeTooHigh { degree: d, k: self.k });
        }
        Ok(self.evaluate(message))
    }

    /// Values of `p` at the evaluation points, with no degree check.
    pub fn evaluate(&self, p: &UniPoly<F::Elem>) -> Vec<F::Elem> {
        self.alphas.iter().map(|&a| p.eval(a, &self.field)).collect()
    }

    /// The interpolating polynomial `h_v` of a word, degree `< n`.
    pub fn interpolate(&self, word: &[F::Elem]) -> Result<UniPoly<F::Elem>> {
        self.check_len(word)?;
        Ok(poly::combine_basis(word, &self.basis, &self.field))
    }

    pub fn check_len(&self, word: &[F::Elem]) -> Result<()> {
        if word.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                found: word.len(),
            });
        }
        Ok(())
    }

    /// Parses canonical element indices into a word of this code's length.
    pub fn word_from_indices(&self, indices: &[u64]) -> Result<Vec<F::Elem>> {
        let word = indices
            .iter()
            .map(|&i| self.field.elem(i))
            .collect::<Result<Vec<_>>>()?;
        self.check_len(&word)?;
        Ok(word)
    }
}

pub fn hamming_weight<F: Field>(u: &[F::Elem], f: &F) -> usize {
    u.iter().filter(|&&c| !f.is_zero(c)).count()
}

pub fn hamming_distance<E: Eq>(u: &[E], w: &[E]) -> Result<usize> {
    if u.len() != w.len() {
        return Err(Error::LengthMismatch {
            expected: u.len(),
            found: w.len(),
        });
    }
    Ok(u.iter().zip(w).filter(|(a, b)| a != b).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;

    fn rs63() -> ReedSolomon<FieldCtx> {
        ReedSolomon::new(FieldCtx::prime(7).unwrap(), 6, 3, None).unwrap()
    }

    #[test]
    fn default_alphas_are_first_nonzero_elements() {
        let code = rs63();
        let idx: Vec<u64> = code.alphas().iter().map(|&a| code.field().index(a)).collect();
        assert_eq!(idx, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(code.tau(), 1);
    }

    #[test]
    fn encode_examples() {
        let code = rs63();
        let f = code.field();
        let v = code.word_from_indices(&[6, 2, 4, 4, 4, 2]).unwrap();
        let msg = UniPoly::from_indices(&[5, 2, 6], f).unwrap();
        let c = code.encode(&msg).unwrap();
        assert!(hamming_distance(&v, &c).unwrap() <= 2);
        let diff: Vec<_> = v.iter().zip(&c).map(|(&a, &b)| f.sub(a, b)).collect();
        assert!(hamming_weight(&diff, f) <= 2);

        let zero = code.encode(&UniPoly::zero()).unwrap();
        assert_eq!(hamming_weight(&zero, f), 0);
        let three = code.encode(&UniPoly::from_indices(&[3], f).unwrap()).unwrap();
        assert_eq!(three, code.word_from_indices(&[3; 6]).unwrap());
        assert_eq!(hamming_distance(&three, &three).unwrap(), 0);
    }

    #[test]
    fn encode_rejects_high_degree() {
        let code = rs63();
        let msg = UniPoly::from_indices(&[0, 0, 0, 1], code.field()).unwrap();
        assert_eq!(
            code.encode(&msg).unwrap_err(),
            Error::MessageDegreeTooHigh { degree: 3, k: 3 }
        );
    }

    #[test]
    fn parameter_validation() {
        let f = FieldCtx::prime(7).unwrap();
        assert_eq!(
            ReedSolomon::new(f.clone(), 6, 1, None).unwrap_err(),
            Error::KTooSmall(1)
        );
        assert!(ReedSolomon::new(f.clone(), 3, 3, None).is_err());
        assert!(ReedSolomon::new(f.clone(), 7, 3, None).is_err());
        let all: Vec<_> = f.elements().collect();
        assert!(ReedSolomon::new(f.clone(), 7, 3, Some(all)).is_ok());
        let dup = vec![f.one(); 4];
        assert_eq!(
            ReedSolomon::new(f, 4, 2, Some(dup)).unwrap_err(),
            Error::DuplicateNodes
        );
    }

    #[test]
    fn minimum_distance_exhaustive() {
        let code = rs63();
        let f = code.field();
        for i in 1..343u64 {
            let msg = UniPoly::from_indices(&[i % 7, (i / 7) % 7, i / 49], f).unwrap();
            let c = code.encode(&msg).unwrap();
            assert!(hamming_weight(&c, f) >= 4);
        }
    }

    #[test]
    fn encode_is_linear() {
        let code = rs63();
        let f = code.field();
        let a = UniPoly::from_indices(&[1, 5, 3], f).unwrap();
        let b = UniPoly::from_indices(&[6, 6, 2], f).unwrap();
        let lhs = code.encode(&a.add(&b, f)).unwrap();
        let rhs: Vec<_> = code
            .encode(&a)
            .unwrap()
            .iter()
            .zip(code.encode(&b).unwrap())
            .map(|(&x, y)| f.add(x, y))
            .collect();
        assert_eq!(lhs, rhs);
    }
}
