//! Simultaneous block decomposition of a matrix family.
//!
//! Finds one unitary change of basis that puts every matrix of the family
//! into the same block-diagonal shape:
//!
//! 1. When the all-ones vector is a common eigenvector (always true for
//!    permutation families), its span is split off as a 1×1 block.
//! 2. If the remaining matrices commute pairwise, a random complex linear
//!    combination — normal, since commuting unitaries share an eigenbasis —
//!    is diagonalized and its basis diagonalizes the whole family; seeds are
//!    retried on accidental eigenvalue collisions.
//! 3. Otherwise the remainder stays together as a single block.
//!
//! Blocks of dimension at most 3 are certified irreducible or reducible by
//! searching for a common eigenvector (valid because the verified families
//! are closed under inverses, hence under conjugate transposition); larger
//! blocks are reported without a certificate.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, OrderedF64};
use crate::matrix::{
    common_eigenvector_exists, extend_to_unitary, normal_eigen, Matrix, TOL_ENTRY,
    TOL_RESIDUAL, TOL_UNITARY,
};
use crate::reps::Representation;

/// Seed used by the command-line interface when none is given.
pub const DEFAULT_SEED: u64 = 7;

/// Largest matrix dimension accepted by [`decompose`].
pub const MAX_DIM: usize = 16;

const SEED_ATTEMPTS: u64 = 8;

/// A common block-diagonal form for a whole matrix family.
#[derive(Debug, Clone, Serialize)]
pub struct BlockDecomposition {
    /// Dimension of the input matrices.
    pub dim: usize,
    /// Seed that produced the successful diagonalization attempt.
    pub seed_used: u64,
    /// Unitary basis change `U` (columns are the new basis); every family
    /// member `M` satisfies `M ≈ U · C · U†` with `C` block diagonal.
    pub basis_change: Matrix,
    /// Sizes of the diagonal blocks, in order.
    pub block_dims: Vec<usize>,
    /// Per block: `Some(true)` certified irreducible, `Some(false)` certified
    /// reducible, `None` not certified (blocks larger than 3).
    pub irreducible: Vec<Option<bool>>,
    /// For each input matrix (in pair-index order), its diagonal blocks.
    pub blocks: Vec<Vec<Matrix>>,
}

fn pairwise_commuting(mats: &[Matrix]) -> bool {
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            if !mats[i].commutes_with(&mats[j], TOL_ENTRY) {
                return false;
            }
        }
    }
    true
}

/// Diagonalizes a pairwise-commuting unitary family; returns the basis and
/// the seed offset that succeeded.
fn diagonalize_commuting(mats: &[Matrix], seed: u64) -> Result<(Matrix, u64), Error> {
    let d = mats[0].dim();
    let ones = vec![1usize; d];
    let mut best = f64::INFINITY;
    for attempt in 0..SEED_ATTEMPTS {
        let current = seed.wrapping_add(attempt);
        let mut rng = ChaCha8Rng::seed_from_u64(current);
        let mut combo = Matrix::zeros(d);
        for m in mats {
            let c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            combo = combo.add(&m.scale(c));
        }
        let Ok((_, u)) = normal_eigen(&combo) else {
            continue;
        };
        let residual = mats
            .iter()
            .map(|m| u.dagger().mul(m).mul(&u).max_off_block(&ones))
            .fold(0.0f64, f64::max);
        if residual <= TOL_RESIDUAL {
            return Ok((u, attempt));
        }
        best = best.min(residual);
    }
    Err(Error::ToleranceFailure {
        what: "simultaneous diagonalization residual",
        value: OrderedF64(best),
        limit: OrderedF64(TOL_RESIDUAL),
    })
}

/// Computes a common block-diagonal form of the family, retrying the random
/// seed up to eight times when commuting matrices collide spectrally.
///
/// The input family should be verified beforehand; unitarity is required and
/// checked here. Dimensions above [`MAX_DIM`] are rejected.
pub fn decompose(rep: &Representation, seed: u64) -> Result<BlockDecomposition, Error> {
    let dim = rep.dim();
    if dim > MAX_DIM {
        return Err(Error::OrderTooLarge {
            order: dim,
            max: MAX_DIM,
        });
    }
    let mats = rep.mats();
    for m in mats {
        let dev = m.dagger().mul(m).max_abs_diff(&Matrix::identity(dim));
        if dev > TOL_UNITARY {
            return Err(Error::ToleranceFailure {
                what: "block decomposition requires unitary matrices",
                value: OrderedF64(dev),
                limit: OrderedF64(TOL_UNITARY),
            });
        }
    }

    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);

    // Phase 1: split the all-ones direction when the whole family fixes it
    // projectively (each image must have all components equal).
    let ones_vec = vec![one; dim];
    let ones_common = dim > 1
        && mats.iter().all(|m| {
            let v = m.apply(&ones_vec);
            v.iter().all(|&c| (c - v[0]).norm() <= TOL_ENTRY)
        });
    let (u0, rest): (Matrix, Vec<Matrix>) = if ones_common {
        let scale = (dim as f64).sqrt();
        let col: Vec<Complex64> = ones_vec.iter().map(|c| c / scale).collect();
        let u0 = extend_to_unitary(&[col], dim);
        let rest = mats
            .iter()
            .map(|m| u0.dagger().mul(m).mul(&u0).block(1, dim))
            .collect();
        (u0, rest)
    } else {
        (Matrix::identity(dim), mats.to_vec())
    };
    let d = rest[0].dim();

    // Phase 2/3: diagonalize the remainder if it commutes, else keep one block.
    let (ub, rest_dims, seed_used) = if d <= 1 {
        (Matrix::identity(d), vec![1usize; d], seed)
    } else if pairwise_commuting(&rest) {
        let (u, offset) = diagonalize_commuting(&rest, seed)?;
        (u, vec![1usize; d], seed.wrapping_add(offset))
    } else {
        (Matrix::identity(d), vec![d], seed)
    };

    let u = if ones_common {
        let embedded = Matrix::from_fn(dim, |i, j| {
            if i == 0 && j == 0 {
                one
            } else if i >= 1 && j >= 1 {
                ub.get(i - 1, j - 1)
            } else {
                zero
            }
        });
        u0.mul(&embedded)
    } else {
        ub
    };
    let mut block_dims = Vec::new();
    if ones_common {
        block_dims.push(1);
    }
    block_dims.extend(rest_dims);
    debug_assert_eq!(block_dims.iter().sum::<usize>(), dim);

    if !u.is_unitary(TOL_ENTRY) {
        return Err(Error::ToleranceFailure {
            what: "basis change is not unitary",
            value: OrderedF64(u.dagger().mul(&u).max_abs_diff(&Matrix::identity(dim))),
            limit: OrderedF64(TOL_ENTRY),
        });
    }

    let conjugated: Vec<Matrix> = mats.iter().map(|m| u.dagger().mul(m).mul(&u)).collect();
    for (m, c) in mats.iter().zip(&conjugated) {
        let residual = c.max_off_block(&block_dims);
        if residual > TOL_RESIDUAL {
            return Err(Error::ToleranceFailure {
                what: "off-block residual",
                value: OrderedF64(residual),
                limit: OrderedF64(TOL_RESIDUAL),
            });
        }
        let rebuilt = u.mul(c).mul(&u.dagger());
        if !rebuilt.approx_eq(m, TOL_RESIDUAL) {
            return Err(Error::ToleranceFailure {
                what: "reconstruction residual",
                value: OrderedF64(rebuilt.max_abs_diff(m)),
                limit: OrderedF64(TOL_RESIDUAL),
            });
        }
    }

    let mut blocks = Vec::with_capacity(conjugated.len());
    for c in &conjugated {
        let mut per = Vec::with_capacity(block_dims.len());
        let mut lo = 0;
        for &bd in &block_dims {
            per.push(c.block(lo, lo + bd));
            lo += bd;
        }
        blocks.push(per);
    }

    let mut irreducible = Vec::with_capacity(block_dims.len());
    let mut lo = 0;
    for &bd in &block_dims {
        let cert = if bd == 1 {
            Some(true)
        } else if bd <= 3 {
            let restricted: Vec<Matrix> =
                conjugated.iter().map(|c| c.block(lo, lo + bd)).collect();
            match common_eigenvector_exists(&restricted) {
                Ok(found) => Some(!found),
                Err(_) => None,
            }
        } else {
            None
        };
        irreducible.push(cert);
        lo += bd;
    }

    Ok(BlockDecomposition {
        dim,
        seed_used,
        basis_change: u,
        block_dims,
        irreducible,
        blocks,
    })
}
