use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::gf::Field;
use crate::matgf::GfMatrix;

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub(crate) fn random_matrix(rng: &mut ChaCha8Rng, field: Field, rows: usize, cols: usize) -> GfMatrix {
    GfMatrix::random(rng, field, rows, cols)
}

pub(crate) fn random_invertible(rng: &mut ChaCha8Rng, field: Field, n: usize) -> GfMatrix {
    GfMatrix::random_invertible(rng, field, n)
}
