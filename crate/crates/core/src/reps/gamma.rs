//! Single-index matrix families obtained by labeling pair classes.
//!
//! Every pair class of the left relation contains exactly one pair of the
//! form `(0, y)`, so the class — and its shared matrix — can be labeled by
//! the single element `y`. The labeled matrices `γ_i` then close under a
//! *binary* product `γ_i · γ_j = γ_{m(i,j)}`, and `m` is a group table.
//!
//! The middle relation admits the same labeling only when it has exactly
//! order-many classes; the labeled middle matrices close under *triple*
//! products, and the induced law is itself a ternary group table.

use serde::Serialize;

use crate::binary::BinaryTable;
use crate::cube::CayleyCube;
use crate::error::Error;
use crate::matrix::Matrix;
use crate::props;
use crate::reps::classes::{pair_classes, PairRelation};
use crate::reps::{left_regular, middle_regular, products_equal, FastRep, RepKind};

/// Composition law induced on class labels.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "arity", rename_all = "lowercase")]
pub enum GammaLaw {
    /// `γ_i · γ_j = γ_{table[i·size + j]}`; the table is a group table.
    Binary { size: usize, table: Vec<usize> },
    /// `γ_i · γ_j · γ_k = γ_{table[(i·size + j)·size + k]}`; the table is a
    /// ternary group table.
    Ternary { size: usize, table: Vec<usize> },
}

impl GammaLaw {
    pub fn binary_at(&self, i: usize, j: usize) -> Option<usize> {
        match self {
            GammaLaw::Binary { size, table } => Some(table[i * size + j]),
            GammaLaw::Ternary { .. } => None,
        }
    }

    pub fn ternary_at(&self, i: usize, j: usize, k: usize) -> Option<usize> {
        match self {
            GammaLaw::Binary { .. } => None,
            GammaLaw::Ternary { size, table } => Some(table[(i * size + j) * size + k]),
        }
    }
}

/// A pair family collapsed to one matrix per class label.
#[derive(Debug, Clone, Serialize)]
pub struct GammaFamily {
    pub kind: RepKind,
    pub order: usize,
    /// Label of each pair, indexed by `x · order + y`: the unique `i` such
    /// that the pair acts like `(0, i)`.
    pub labels: Vec<usize>,
    /// `matrices[i]` is the matrix shared by every pair labeled `i`.
    pub matrices: Vec<Matrix>,
    pub law: GammaLaw,
}

/// Labels the pair classes of the left or middle family of a ternary group.
///
/// Left families are always labelable (with exactly order-many classes, one
/// per `(0, y)`); for middle families this holds only sometimes, and a class
/// count different from the order reports [`Error::NotLabelable`]. The
/// induced composition law is verified exhaustively on matrices and checked
/// to be a (binary or ternary) group table.
pub fn gamma_family(cube: &CayleyCube, kind: RepKind) -> Result<GammaFamily, Error> {
    let skew = props::ternary_group_check(cube)?;
    let n = cube.order();
    match kind {
        RepKind::Left => {
            let part = pair_classes(cube, PairRelation::Left)?;
            if part.classes.len() != n {
                return Err(Error::InternalVerificationFailure(
                    "a ternary group must have exactly order-many left pair classes".into(),
                ));
            }
            // Constructive representative: (a, b) acts like (0, [0̄ a b]).
            for a in 0..n {
                for b in 0..n {
                    let y = cube.get(skew.get(0), a, b);
                    if part.class_of(a, b) != part.class_of(0, y) {
                        return Err(Error::InternalVerificationFailure(
                            "left class representative formula failed".into(),
                        ));
                    }
                }
            }
            for y in 0..n {
                if part.class_of(0, y) != y {
                    return Err(Error::InternalVerificationFailure(
                        "left classes are not labeled by their (0, y) member".into(),
                    ));
                }
            }
            let rep = left_regular(cube)?;
            let matrices: Vec<Matrix> = (0..n).map(|y| rep.mat(0, y).clone()).collect();
            let f = FastRep::new(&matrices);
            let mut table = vec![0usize; n * n];
            for i in 0..n {
                for j in 0..n {
                    let label = part.class_of(cube.get(0, i, 0), j);
                    table[i * n + j] = label;
                    if !products_equal(&[(&f, i), (&f, j)], &[(&f, label)]) {
                        return Err(Error::RepresentationViolation {
                            law: "labeled binary product law",
                            tuple: vec![i, j],
                        });
                    }
                }
            }
            let induced = BinaryTable::from_raw(n, table.clone())?;
            induced.group_check()?;
            Ok(GammaFamily {
                kind,
                order: n,
                labels: part.class_id.clone(),
                matrices,
                law: GammaLaw::Binary { size: n, table },
            })
        }
        RepKind::Middle => {
            let part = pair_classes(cube, PairRelation::Middle)?;
            if part.classes.len() != n {
                return Err(Error::NotLabelable {
                    reason: format!(
                        "middle family has {} classes but only {} labels",
                        part.classes.len(),
                        n
                    ),
                });
            }
            for y in 0..n {
                if part.class_of(0, y) != y {
                    return Err(Error::InternalVerificationFailure(
                        "middle classes are not labeled by their (0, y) member".into(),
                    ));
                }
            }
            let rep = middle_regular(cube)?;
            let matrices: Vec<Matrix> = (0..n).map(|y| rep.mat(0, y).clone()).collect();
            let f = FastRep::new(&matrices);
            let mut table = vec![0usize; n * n * n];
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        // γ_i·γ_j·γ_k applies γ_k first, so the middle triple
                        // product law pairs the first slots in reverse order.
                        let label = part.class_of(cube.get(0, 0, 0), cube.get(k, j, i));
                        table[(i * n + j) * n + k] = label;
                        if !products_equal(&[(&f, i), (&f, j), (&f, k)], &[(&f, label)]) {
                            return Err(Error::RepresentationViolation {
                                law: "labeled ternary product law",
                                tuple: vec![i, j, k],
                            });
                        }
                    }
                }
            }
            let induced = CayleyCube::from_fn(n, |i, j, k| table[(i * n + j) * n + k]);
            props::ternary_group_check(&induced)?;
            Ok(GammaFamily {
                kind,
                order: n,
                labels: part.class_id.clone(),
                matrices,
                law: GammaLaw::Ternary { size: n, table },
            })
        }
        RepKind::Right => Err(Error::NotLabelable {
            reason: "labeling is defined for left and middle families".into(),
        }),
    }
}
