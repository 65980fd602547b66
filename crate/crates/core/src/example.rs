//! A fully worked small instance with known intermediate values: RS(6,3) over
//! GF(7) at the points 1..6, received word (6,2,4,4,4,2), multiplicity 2 and
//! y-degree bound 3. Two codewords lie at distance 2 from the word.

use crate::decoder::{self, DecodeResult};
use crate::error::Result;
use crate::gf::{FieldCtx, FieldElement};
use crate::interp::{self, Interpolation};
use crate::poly::UniPoly;
use crate::rs::ReedSolomon;
use crate::wpoly::BiPoly;

pub const P: u64 = 7;
pub const N: usize = 6;
pub const K: usize = 3;
pub const WORD: [u64; N] = [6, 2, 4, 4, 4, 2];
pub const M: usize = 2;
pub const L: usize = 3;

/// Rows of the y-monic `Q`, coefficient of `y^j` low-to-high in x.
pub const Q_ROWS: [&[u64]; L + 1] = [
    &[6, 1, 2, 4, 3, 3, 4, 4],
    &[2, 6, 6, 4, 6, 3],
    &[5, 4, 0, 6],
    &[1],
];
pub const HV: [u64; 5] = [6, 4, 4, 5, 1];
pub const ETA: [u64; 7] = [6, 0, 0, 0, 0, 0, 1];
/// Sorted as [`crate::rootfind::y_roots`] returns them.
pub const ROOTS: [[u64; K]; 2] = [[1, 3, 4], [5, 2, 6]];
pub const ROOT_DISTANCE: usize = 2;

pub fn code() -> ReedSolomon<FieldCtx> {
    ReedSolomon::new(FieldCtx::prime(P).expect("7 is prime"), N, K, None).expect("valid code")
}

pub fn word(code: &ReedSolomon<FieldCtx>) -> Vec<FieldElement> {
    code.word_from_indices(&WORD).expect("symbols below 7")
}

pub fn expected_q(f: &FieldCtx) -> BiPoly<FieldElement> {
    BiPoly::from_rows(
        Q_ROWS
            .iter()
            .map(|r| UniPoly::from_indices(r, f).expect("symbols below 7"))
            .collect(),
    )
}

#[derive(Debug, Clone)]
pub struct ExampleReport {
    pub interpolation: Interpolation<FieldElement>,
    pub decoded: DecodeResult<FieldElement>,
    /// Names of the quantities that differ from the reference values.
    pub mismatches: Vec<&'static str>,
}

impl ExampleReport {
    pub fn is_exact(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Runs the instance end to end and compares against the constants above.
pub fn run() -> Result<ExampleReport> {
    let code = code();
    let f = code.field();
    let v = word(&code);
    let interpolation = interp::interpolate_full(&code, &v, M, None)?;
    let decoded = decoder::list_decode(&code, &v, M)?;

    let mut mismatches = Vec::new();
    if interpolation.params.l != L {
        mismatches.push("l");
    }
    if interpolation.hv.to_indices(f) != HV {
        mismatches.push("h_v");
    }
    if code.node_poly().to_indices(f) != ETA {
        mismatches.push("eta");
    }
    if interpolation.q.y_monic(f)? != expected_q(f) {
        mismatches.push("Q");
    }
    let roots: Vec<Vec<u64>> = decoded
        .candidates
        .iter()
        .map(|c| c.message.to_indices(f))
        .collect();
    let mut sorted = roots.clone();
    sorted.sort();
    if sorted != ROOTS.map(|r| r.to_vec()) {
        mismatches.push("roots");
    }
    if decoded.candidates.iter().any(|c| c.distance != ROOT_DISTANCE) {
        mismatches.push("distances");
    }
    Ok(ExampleReport {
        interpolation,
        decoded,
        mismatches,
    })
}
