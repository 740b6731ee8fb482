//! Exact linear algebra over small finite fields and the machinery for hulls,
//! minimum distances and shortest LCD embeddings of linear codes.

pub mod code;
pub mod distance;
pub mod embed;
pub mod error;
pub mod families;
pub mod gf;
pub mod matgf;
mod packed;
pub mod search;

#[cfg(test)]
mod test_util;

pub use code::{HullDecomposition, InnerProduct, LinearCode};
pub use distance::{DistanceMethod, DistanceReport, DistanceValue, MethodChoice, WeightEnumerator};
pub use embed::{EmbeddingResult, EmbeddingSpec, MinimalityCertificate};
pub use error::{Error, Result};
pub use families::{Family, FamilySpec};
pub use gf::{Field, FieldKind, GfElement};
pub use matgf::{block_matrix, schur_det, GfMatrix, RrefResult};
pub use search::{SearchConfig, SearchReport, Strategy};
