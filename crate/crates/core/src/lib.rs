//! List decoding of Reed–Solomon codes over small finite fields.
//!
//! The interpolation step finds the minimal polynomial of a module over
//! `F[x]` by reducing an explicit generating set to a Gröbner basis; roots in
//! y of that polynomial are the candidate messages. A two-polynomial
//! specialisation of the same reduction gives a unique decoder up to half
//! the minimum distance.
//!
//! Everything algebraic is generic over [`Field`]; [`FieldCtx`] implements
//! it for GF(p^m) with `p^m <= 2^16`.
//!
//! ```
//! use rs_listdec::{decoder, Field, FieldCtx, GfCode, UniPoly};
//!
//! let code = GfCode::new(FieldCtx::prime(7)?, 6, 3, None)?;
//! let msg = UniPoly::from_indices(&[5, 2, 6], code.field())?;
//! let mut v = code.encode(&msg)?;
//! v[1] = code.field().elem(0)?;
//! v[4] = code.field().elem(0)?;
//! let out = decoder::list_decode(&code, &v, 2)?;
//! assert!(out.candidates.iter().any(|c| c.message == msg));
//! # Ok::<(), rs_listdec::Error>(())
//! ```

pub mod bench;
pub mod channel;
pub mod decoder;
pub mod error;
pub mod example;
pub mod field;
pub mod gf;
pub mod groebner;
pub mod interp;
pub mod oracle;
pub mod poly;
pub mod rootfind;
pub mod rs;
pub mod wpoly;

pub use decoder::{list_decode, unique_decode, Candidate, DecodeResult};
pub use error::{Error, Result};
pub use field::Field;
pub use gf::{FieldCtx, FieldElement};
pub use groebner::GeneratorSet;
pub use interp::{interpolate_q, InterpParams};
pub use poly::UniPoly;
pub use rs::ReedSolomon;
pub use wpoly::{BiPoly, Monomial, WeightedOrder};

pub type GfPoly = UniPoly<FieldElement>;
pub type GfBiPoly = BiPoly<FieldElement>;
pub type GfCode = ReedSolomon<FieldCtx>;
