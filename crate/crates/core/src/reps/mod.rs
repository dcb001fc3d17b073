//! Linear representations of ternary groups indexed by pairs of elements.
//!
//! A pair `(x, y)` acts on the group carrier by translation in three ways:
//!
//! * left:   `z ↦ [x y z]`
//! * right:  `z ↦ [z x y]`
//! * middle: `z ↦ [x z y]`
//!
//! Encoding each action as a permutation matrix yields the three *regular*
//! matrix families. Each family satisfies composition laws indexed by pairs
//! rather than single elements; this module builds the regular families,
//! verifies the defining laws of arbitrary (not necessarily permutation)
//! families, converts between the kinds, and checks the exchange laws that
//! couple different kinds.
//!
//! Matrix convention: the matrix of a translation `z ↦ t(z)` has entry
//! `(t(z), z) = 1`, i.e. columns are indexed by the source element, so
//! matrix products compose right-to-left like function application.

use serde::Serialize;

use crate::constructions::pair_index;
use crate::cube::{CayleyCube, SkewMap};
use crate::error::Error;
use crate::matrix::{Matrix, TOL_ENTRY, TOL_UNITARY};
use crate::props;

pub mod classes;
pub mod correspond;
pub mod decompose;
pub mod gamma;

/// Which of the three translation families a representation belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RepKind {
    Left,
    Right,
    Middle,
}

impl RepKind {
    /// All three kinds, in a fixed order.
    pub const ALL: [RepKind; 3] = [RepKind::Left, RepKind::Right, RepKind::Middle];

    /// Lowercase name used in file formats and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            RepKind::Left => "left",
            RepKind::Right => "right",
            RepKind::Middle => "middle",
        }
    }
}

impl std::fmt::Display for RepKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for RepKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "left" => Ok(RepKind::Left),
            "right" => Ok(RepKind::Right),
            "middle" => Ok(RepKind::Middle),
            _ => Err(Error::Parse {
                line: 0,
                msg: format!("unknown representation kind `{s}`; expected left, right, or middle"),
            }),
        }
    }
}

/// A family of square matrices indexed by ordered pairs of group elements.
///
/// The matrix for the pair `(x, y)` is stored at index `x * order + y`.
/// All matrices share one dimension, which need not equal the group order.
#[derive(Debug, Clone)]
pub struct Representation {
    kind: RepKind,
    order: usize,
    dim: usize,
    mats: Vec<Matrix>,
}

impl Representation {
    /// Wraps a pair-indexed family of matrices, checking shape only.
    ///
    /// Use [`verify_representation`] to check the composition laws.
    pub fn new(kind: RepKind, order: usize, mats: Vec<Matrix>) -> Result<Self, Error> {
        if order == 0 || mats.len() != order * order {
            return Err(Error::SizeMismatch {
                order,
                got: mats.len(),
                need: order.max(1) * order.max(1),
            });
        }
        let dim = mats[0].dim();
        for m in &mats {
            if m.dim() != dim {
                return Err(Error::SizeMismatch {
                    order,
                    got: m.dim(),
                    need: dim,
                });
            }
            if !m.is_finite() {
                return Err(Error::InternalVerificationFailure(
                    "representation matrix contains a non-finite entry".into(),
                ));
            }
        }
        Ok(Representation {
            kind,
            order,
            dim,
            mats,
        })
    }

    pub fn kind(&self) -> RepKind {
        self.kind
    }

    /// Order of the underlying group (the pair index ranges over its square).
    pub fn order(&self) -> usize {
        self.order
    }

    /// Dimension of every matrix in the family.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Matrix attached to the pair `(x, y)`.
    pub fn mat(&self, x: usize, y: usize) -> &Matrix {
        &self.mats[pair_index(self.order, x, y)]
    }

    /// All matrices in pair-index order.
    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }
}

/// A matrix family with an optional exact permutation shadow.
///
/// Law checks over permutation families compose index vectors instead of
/// multiplying dense matrices; families with any non-permutation member fall
/// back to dense products compared entrywise within [`TOL_ENTRY`].
pub(crate) struct FastRep<'a> {
    mats: &'a [Matrix],
    perms: Option<Vec<Vec<usize>>>,
    dim: usize,
}

impl<'a> FastRep<'a> {
    pub(crate) fn new(mats: &'a [Matrix]) -> FastRep<'a> {
        let dim = mats.first().map_or(0, Matrix::dim);
        let perms = mats.iter().map(Matrix::as_permutation).collect();
        FastRep { mats, perms, dim }
    }

    pub(crate) fn from_rep(rep: &'a Representation) -> FastRep<'a> {
        FastRep::new(rep.mats())
    }
}

/// Compares two products of family members: `lhs[0]·lhs[1]·…  ==  rhs[0]·…`.
///
/// An empty side denotes the identity matrix. Products are evaluated as
/// function composition (the last factor acts first), matching matrix
/// multiplication under the column-as-source convention.
pub(crate) fn products_equal(
    lhs: &[(&FastRep<'_>, usize)],
    rhs: &[(&FastRep<'_>, usize)],
) -> bool {
    let dim = lhs
        .first()
        .or_else(|| rhs.first())
        .map_or(0, |(f, _)| f.dim);
    let all_perm = lhs
        .iter()
        .chain(rhs.iter())
        .all(|(f, _)| f.perms.is_some());
    if all_perm {
        let image = |factors: &[(&FastRep<'_>, usize)], z: usize| {
            let mut v = z;
            for (f, i) in factors.iter().rev() {
                v = f.perms.as_ref().unwrap()[*i][v];
            }
            v
        };
        (0..dim).all(|z| image(lhs, z) == image(rhs, z))
    } else {
        let dense = |factors: &[(&FastRep<'_>, usize)]| {
            let mut acc = Matrix::identity(dim);
            for (f, i) in factors {
                acc = acc.mul(&f.mats[*i]);
            }
            acc
        };
        dense(lhs).approx_eq(&dense(rhs), TOL_ENTRY)
    }
}

fn regular(cube: &CayleyCube, kind: RepKind) -> Result<Representation, Error> {
    props::ternary_group_check(cube)?;
    let n = cube.order();
    let mut mats = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let images: Vec<usize> = (0..n)
                .map(|z| match kind {
                    RepKind::Left => cube.get(x, y, z),
                    RepKind::Right => cube.get(z, x, y),
                    RepKind::Middle => cube.get(x, z, y),
                })
                .collect();
            mats.push(Matrix::from_permutation(&images));
        }
    }
    let rep = Representation::new(kind, n, mats)?;
    verify_representation(&rep, cube)?;
    Ok(rep)
}

/// Regular left family: `(x, y)` acts by `z ↦ [x y z]`.
pub fn left_regular(cube: &CayleyCube) -> Result<Representation, Error> {
    regular(cube, RepKind::Left)
}

/// Regular right family: `(x, y)` acts by `z ↦ [z x y]`.
pub fn right_regular(cube: &CayleyCube) -> Result<Representation, Error> {
    regular(cube, RepKind::Right)
}

/// Regular middle family: `(x, y)` acts by `z ↦ [x z y]`.
pub fn middle_regular(cube: &CayleyCube) -> Result<Representation, Error> {
    regular(cube, RepKind::Middle)
}

/// Checks every defining law of the representation's kind over the cube.
///
/// Left family laws (all quantifiers exhaustive):
/// * product law       `Π(x₁,x₂)·Π(x₃,x₄) = Π([x₁x₂x₃], x₄)`
/// * pair merge law    `Π([x₁x₂x₃], x₄) = Π(x₁, [x₂x₃x₄])`
/// * skew-pair identity `Π(x, x̄) = 1`
/// * inverse pairs     `Π(x,z)·Π(z̄,x̄) = 1`
/// * pair splitting    `Π(x,y) = Π(x,z)·Π(z̄,y)`
///
/// Right family laws:
/// * product law       `Π(x₃,x₄)·Π(x₁,x₂) = Π(x₁, [x₂x₃x₄])`
/// * skew-pair identity, inverse pairs, pair splitting (mirrored).
///
/// Middle family laws:
/// * triple product law `Π(x₃,y₃)·Π(x₂,y₂)·Π(x₁,y₁) = Π([x₃x₂x₁], [y₁y₂y₃])`
/// * skew-pair inverses `Π(x,y)·Π(x̄,ȳ) = Π(x̄,ȳ)·Π(x,y) = 1`
/// * crossed skew pairs `Π(x,ȳ)·Π(x̄,y) = 1`
pub fn verify_representation(rep: &Representation, cube: &CayleyCube) -> Result<(), Error> {
    let skew = props::ternary_group_check(cube)?;
    if rep.order() != cube.order() {
        return Err(Error::SizeMismatch {
            order: cube.order(),
            got: rep.order(),
            need: cube.order(),
        });
    }
    match rep.kind() {
        RepKind::Left => verify_left(rep, cube, &skew),
        RepKind::Right => verify_right(rep, cube, &skew),
        RepKind::Middle => verify_middle(rep, cube, &skew),
    }
}

fn verify_left(rep: &Representation, cube: &CayleyCube, skew: &SkewMap) -> Result<(), Error> {
    let n = rep.order();
    let f = FastRep::from_rep(rep);
    let p = |x: usize, y: usize| pair_index(n, x, y);
    for x1 in 0..n {
        for x2 in 0..n {
            for x3 in 0..n {
                for x4 in 0..n {
                    let merged = [(&f, p(cube.get(x1, x2, x3), x4))];
                    if !products_equal(&[(&f, p(x1, x2)), (&f, p(x3, x4))], &merged) {
                        return Err(Error::RepresentationViolation {
                            law: "left product law",
                            tuple: vec![x1, x2, x3, x4],
                        });
                    }
                    if !products_equal(&merged, &[(&f, p(x1, cube.get(x2, x3, x4)))]) {
                        return Err(Error::RepresentationViolation {
                            law: "left pair merge law",
                            tuple: vec![x1, x2, x3, x4],
                        });
                    }
                }
            }
        }
    }
    for x in 0..n {
        if !products_equal(&[(&f, p(x, skew.get(x)))], &[]) {
            return Err(Error::RepresentationViolation {
                law: "left skew-pair identity",
                tuple: vec![x],
            });
        }
    }
    for x in 0..n {
        for z in 0..n {
            if !products_equal(&[(&f, p(x, z)), (&f, p(skew.get(z), skew.get(x)))], &[]) {
                return Err(Error::RepresentationViolation {
                    law: "left inverse pairs",
                    tuple: vec![x, z],
                });
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !products_equal(&[(&f, p(x, z)), (&f, p(skew.get(z), y))], &[(&f, p(x, y))]) {
                    return Err(Error::RepresentationViolation {
                        law: "left pair splitting",
                        tuple: vec![x, y, z],
                    });
                }
            }
        }
    }
    Ok(())
}

fn verify_right(rep: &Representation, cube: &CayleyCube, skew: &SkewMap) -> Result<(), Error> {
    let n = rep.order();
    let f = FastRep::from_rep(rep);
    let p = |x: usize, y: usize| pair_index(n, x, y);
    for x1 in 0..n {
        for x2 in 0..n {
            for x3 in 0..n {
                for x4 in 0..n {
                    let lhs = [(&f, p(x3, x4)), (&f, p(x1, x2))];
                    if !products_equal(&lhs, &[(&f, p(x1, cube.get(x2, x3, x4)))]) {
                        return Err(Error::RepresentationViolation {
                            law: "right product law",
                            tuple: vec![x1, x2, x3, x4],
                        });
                    }
                }
            }
        }
    }
    for x in 0..n {
        if !products_equal(&[(&f, p(x, skew.get(x)))], &[]) {
            return Err(Error::RepresentationViolation {
                law: "right skew-pair identity",
                tuple: vec![x],
            });
        }
    }
    for x in 0..n {
        for z in 0..n {
            if !products_equal(&[(&f, p(x, z)), (&f, p(skew.get(z), skew.get(x)))], &[]) {
                return Err(Error::RepresentationViolation {
                    law: "right inverse pairs",
                    tuple: vec![x, z],
                });
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !products_equal(&[(&f, p(skew.get(z), y)), (&f, p(x, z))], &[(&f, p(x, y))]) {
                    return Err(Error::RepresentationViolation {
                        law: "right pair splitting",
                        tuple: vec![x, y, z],
                    });
                }
            }
        }
    }
    Ok(())
}

fn verify_middle(rep: &Representation, cube: &CayleyCube, skew: &SkewMap) -> Result<(), Error> {
    let n = rep.order();
    let f = FastRep::from_rep(rep);
    let p = |x: usize, y: usize| pair_index(n, x, y);
    for x1 in 0..n {
        for y1 in 0..n {
            for x2 in 0..n {
                for y2 in 0..n {
                    for x3 in 0..n {
                        for y3 in 0..n {
                            let lhs =
                                [(&f, p(x3, y3)), (&f, p(x2, y2)), (&f, p(x1, y1))];
                            let rhs =
                                [(&f, p(cube.get(x3, x2, x1), cube.get(y1, y2, y3)))];
                            if !products_equal(&lhs, &rhs) {
                                return Err(Error::RepresentationViolation {
                                    law: "middle triple product law",
                                    tuple: vec![x1, y1, x2, y2, x3, y3],
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let a = (&f, p(x, y));
            let b = (&f, p(skew.get(x), skew.get(y)));
            if !products_equal(&[a, b], &[]) || !products_equal(&[b, a], &[]) {
                return Err(Error::RepresentationViolation {
                    law: "middle skew-pair inverses",
                    tuple: vec![x, y],
                });
            }
            let c = (&f, p(x, skew.get(y)));
            let d = (&f, p(skew.get(x), y));
            if !products_equal(&[c, d], &[]) {
                return Err(Error::RepresentationViolation {
                    law: "middle crossed skew-pair identity",
                    tuple: vec![x, y],
                });
            }
        }
    }
    Ok(())
}

/// Builds the right family dual to a left family and proves both claims:
/// the dual `D(x, y) = Π(ȳ, x̄)` satisfies every right-family law, and it is
/// the pointwise inverse of the input, `D(x,y)·Π(x,y) = Π(x,y)·D(x,y) = 1`.
pub fn dual_right_of_left(
    left: &Representation,
    cube: &CayleyCube,
) -> Result<Representation, Error> {
    if left.kind() != RepKind::Left {
        return Err(Error::RepresentationViolation {
            law: "dual construction requires a left family",
            tuple: vec![],
        });
    }
    let skew = props::ternary_group_check(cube)?;
    let n = cube.order();
    if left.order() != n {
        return Err(Error::SizeMismatch {
            order: n,
            got: left.order(),
            need: n,
        });
    }
    let mut mats = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            mats.push(left.mat(skew.get(y), skew.get(x)).clone());
        }
    }
    let dual = Representation::new(RepKind::Right, n, mats)?;
    verify_representation(&dual, cube)?;
    let fl = FastRep::from_rep(left);
    let fd = FastRep::from_rep(&dual);
    let p = |x: usize, y: usize| pair_index(n, x, y);
    for x in 0..n {
        for y in 0..n {
            let i = p(x, y);
            if !products_equal(&[(&fd, i), (&fl, i)], &[])
                || !products_equal(&[(&fl, i), (&fd, i)], &[])
            {
                return Err(Error::RepresentationViolation {
                    law: "dual pointwise inverse",
                    tuple: vec![x, y],
                });
            }
        }
    }
    Ok(dual)
}

/// Checks the exchange laws that couple the three regular families:
///
/// * left and right translations commute:
///   `Π^L(x₁,y₁)·Π^R(x₂,y₂) = Π^R(x₂,y₂)·Π^L(x₁,y₁)`
/// * middle over right: `Π^M(x₁,y₁)·Π^R(x₂,y₂) = Π^R(y₂,y₁)·Π^M(x₁,x₂)`
/// * middle over left:  `Π^M(x₁,y₁)·Π^L(x₂,y₂) = Π^L(x₁,x₂)·Π^M(y₂,y₁)`
pub fn commutation_check(cube: &CayleyCube) -> Result<(), Error> {
    let n = cube.order();
    let left = left_regular(cube)?;
    let right = right_regular(cube)?;
    let middle = middle_regular(cube)?;
    let fl = FastRep::from_rep(&left);
    let fr = FastRep::from_rep(&right);
    let fm = FastRep::from_rep(&middle);
    let p = |x: usize, y: usize| pair_index(n, x, y);
    for x1 in 0..n {
        for y1 in 0..n {
            for x2 in 0..n {
                for y2 in 0..n {
                    let tuple = || vec![x1, y1, x2, y2];
                    if !products_equal(
                        &[(&fl, p(x1, y1)), (&fr, p(x2, y2))],
                        &[(&fr, p(x2, y2)), (&fl, p(x1, y1))],
                    ) {
                        return Err(Error::RepresentationViolation {
                            law: "left-right commutation",
                            tuple: tuple(),
                        });
                    }
                    if !products_equal(
                        &[(&fm, p(x1, y1)), (&fr, p(x2, y2))],
                        &[(&fr, p(y2, y1)), (&fm, p(x1, x2))],
                    ) {
                        return Err(Error::RepresentationViolation {
                            law: "middle-right exchange",
                            tuple: tuple(),
                        });
                    }
                    if !products_equal(
                        &[(&fm, p(x1, y1)), (&fl, p(x2, y2))],
                        &[(&fl, p(x1, x2)), (&fm, p(y2, y1))],
                    ) {
                        return Err(Error::RepresentationViolation {
                            law: "middle-left exchange",
                            tuple: tuple(),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// True when every matrix of the family is unitary within [`TOL_UNITARY`].
pub fn unitarity_check(rep: &Representation) -> bool {
    rep.mats().iter().all(|m| m.is_unitary(TOL_UNITARY))
}

/// Builds a left family from a middle family using the base point `z`:
/// `Π_z^L(x, y) = Π^M(x, z)·Π^M(y, z̄)`. The result is verified against all
/// left-family laws.
pub fn left_from_middle(
    middle: &Representation,
    cube: &CayleyCube,
    z: usize,
) -> Result<Representation, Error> {
    if middle.kind() != RepKind::Middle {
        return Err(Error::RepresentationViolation {
            law: "base-point construction requires a middle family",
            tuple: vec![],
        });
    }
    let skew = props::ternary_group_check(cube)?;
    cube.check_element(z)?;
    let n = cube.order();
    let mut mats = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            mats.push(middle.mat(x, z).mul(middle.mat(y, skew.get(z))));
        }
    }
    let rep = Representation::new(RepKind::Left, n, mats)?;
    verify_representation(&rep, cube)?;
    Ok(rep)
}

/// Builds a right family from a middle family using the base point `z`:
/// `Π_z^R(x, y) = Π^M(z, y)·Π^M(z̄, x)`. The result is verified against all
/// right-family laws.
pub fn right_from_middle(
    middle: &Representation,
    cube: &CayleyCube,
    z: usize,
) -> Result<Representation, Error> {
    if middle.kind() != RepKind::Middle {
        return Err(Error::RepresentationViolation {
            law: "base-point construction requires a middle family",
            tuple: vec![],
        });
    }
    let skew = props::ternary_group_check(cube)?;
    cube.check_element(z)?;
    let n = cube.order();
    let mut mats = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            mats.push(middle.mat(z, y).mul(middle.mat(skew.get(z), x)));
        }
    }
    let rep = Representation::new(RepKind::Right, n, mats)?;
    verify_representation(&rep, cube)?;
    Ok(rep)
}

/// Verifies the product laws across base points for the families derived
/// from one middle family:
///
/// * `Π_z^L(x,y)·Π_{z'}^L(x',y') = Π_{z'}^L([x y x'], y')`
/// * `Π_z^R(x,y)·Π_{z'}^R(x',y') = Π_{z'}^R(x', [y' x y])`
///
/// quantified over all base points `z, z'` and all pairs.
pub fn cross_family_check(middle: &Representation, cube: &CayleyCube) -> Result<(), Error> {
    let n = cube.order();
    let lefts: Vec<Representation> = (0..n)
        .map(|z| left_from_middle(middle, cube, z))
        .collect::<Result<_, _>>()?;
    let rights: Vec<Representation> = (0..n)
        .map(|z| right_from_middle(middle, cube, z))
        .collect::<Result<_, _>>()?;
    let fls: Vec<FastRep<'_>> = lefts.iter().map(FastRep::from_rep).collect();
    let frs: Vec<FastRep<'_>> = rights.iter().map(FastRep::from_rep).collect();
    let p = |x: usize, y: usize| pair_index(n, x, y);
    for z in 0..n {
        for zp in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for xp in 0..n {
                        for yp in 0..n {
                            if !products_equal(
                                &[(&fls[z], p(x, y)), (&fls[zp], p(xp, yp))],
                                &[(&fls[zp], p(cube.get(x, y, xp), yp))],
                            ) {
                                return Err(Error::RepresentationViolation {
                                    law: "left base-point product law",
                                    tuple: vec![z, zp, x, y, xp, yp],
                                });
                            }
                            if !products_equal(
                                &[(&frs[z], p(x, y)), (&frs[zp], p(xp, yp))],
                                &[(&frs[zp], p(xp, cube.get(yp, x, y)))],
                            ) {
                                return Err(Error::RepresentationViolation {
                                    law: "right base-point product law",
                                    tuple: vec![z, zp, x, y, xp, yp],
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// If the middle family sends every skew pair to the identity matrix
/// (`Π^M(x, x̄) = 1` for all `x`), the same matrices form a left family and a
/// right family, and the family is symmetric (`Π^M(x,y) = Π^M(y,x)`).
///
/// Returns `Ok(false)` when the hypothesis fails, `Ok(true)` after verifying
/// all three conclusions, and an error if the implication itself is violated.
pub fn check_unit_skew_pair_middle(
    middle: &Representation,
    cube: &CayleyCube,
) -> Result<bool, Error> {
    if middle.kind() != RepKind::Middle {
        return Err(Error::RepresentationViolation {
            law: "hypothesis check requires a middle family",
            tuple: vec![],
        });
    }
    let skew = props::ternary_group_check(cube)?;
    let n = cube.order();
    let f = FastRep::from_rep(middle);
    let hypothesis = (0..n).all(|x| products_equal(&[(&f, pair_index(n, x, skew.get(x)))], &[]));
    if !hypothesis {
        return Ok(false);
    }
    let as_left = Representation::new(RepKind::Left, n, middle.mats().to_vec())?;
    verify_representation(&as_left, cube)?;
    let as_right = Representation::new(RepKind::Right, n, middle.mats().to_vec())?;
    verify_representation(&as_right, cube)?;
    for x in 0..n {
        for y in 0..n {
            if !middle.mat(x, y).approx_eq(middle.mat(y, x), TOL_ENTRY) {
                return Err(Error::RepresentationViolation {
                    law: "unit skew pairs force a symmetric family",
                    tuple: vec![x, y],
                });
            }
        }
    }
    Ok(true)
}
