//! Bridges between pair-indexed families and representations of the binary
//! structures attached to a ternary group: derived groups, retracts, the
//! pair middle group, and the double cover.

use serde::Serialize;

use crate::binary::BinaryTable;
use crate::constructions::{derive, pair_index, pair_middle_group, post_cover, retract};
use crate::cube::CayleyCube;
use crate::error::Error;
use crate::matrix::{Matrix, TOL_ENTRY};
use crate::props;
use crate::reps::{products_equal, verify_representation, FastRep, RepKind, Representation};

/// Checks that `mats[x]` is a matrix representation of the binary group:
/// one matrix per element, equal dimensions, `mats[e] = 1`, and
/// `mats[x]·mats[y] = mats[x·y]` for all `x, y`. Returns the identity.
pub fn check_binary_rep(group: &BinaryTable, mats: &[Matrix]) -> Result<usize, Error> {
    let e = group.group_check()?;
    let n = group.order();
    if mats.len() != n {
        return Err(Error::SizeMismatch {
            order: n,
            got: mats.len(),
            need: n,
        });
    }
    let dim = mats[0].dim();
    for m in mats {
        if m.dim() != dim {
            return Err(Error::SizeMismatch {
                order: n,
                got: m.dim(),
                need: dim,
            });
        }
    }
    let f = FastRep::new(mats);
    if !products_equal(&[(&f, e)], &[]) {
        return Err(Error::RepresentationViolation {
            law: "binary representation identity",
            tuple: vec![e],
        });
    }
    for x in 0..n {
        for y in 0..n {
            if !products_equal(&[(&f, x), (&f, y)], &[(&f, group.get(x, y))]) {
                return Err(Error::RepresentationViolation {
                    law: "binary representation homomorphism",
                    tuple: vec![x, y],
                });
            }
        }
    }
    Ok(e)
}

/// Left family of the derived group `[x y z] = (x·y)·z` built from a binary
/// representation: `Π(x, y) = π(x)·π(y)`. The result is verified against
/// every left-family law.
pub fn left_from_binary_rep(
    group: &BinaryTable,
    pi: &[Matrix],
) -> Result<Representation, Error> {
    check_binary_rep(group, pi)?;
    let cube = derive(group);
    let n = group.order();
    let mut mats = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            mats.push(pi[x].mul(&pi[y]));
        }
    }
    let rep = Representation::new(RepKind::Left, n, mats)?;
    verify_representation(&rep, &cube)?;
    Ok(rep)
}

/// Recovers a binary representation from a left family over the derived
/// group: `π(x) = Π(x, e)`. Proves the recovery is a homomorphism and that
/// it factors the family, `Π(x, y) = π(x)·π(y)`.
pub fn binary_rep_from_left(
    group: &BinaryTable,
    rep: &Representation,
) -> Result<Vec<Matrix>, Error> {
    if rep.kind() != RepKind::Left {
        return Err(Error::RepresentationViolation {
            law: "recovery requires a left family",
            tuple: vec![],
        });
    }
    let e = group.group_check()?;
    let cube = derive(group);
    verify_representation(rep, &cube)?;
    let n = group.order();
    let pi: Vec<Matrix> = (0..n).map(|x| rep.mat(x, e).clone()).collect();
    check_binary_rep(group, &pi)?;
    let fp = FastRep::new(&pi);
    let fr = FastRep::from_rep(rep);
    for x in 0..n {
        for y in 0..n {
            if !products_equal(&[(&fp, x), (&fp, y)], &[(&fr, pair_index(n, x, y))]) {
                return Err(Error::RepresentationViolation {
                    law: "left family factors through the binary representation",
                    tuple: vec![x, y],
                });
            }
        }
    }
    Ok(pi)
}

/// Restricts a left family to a representation of the retract at `a`:
/// `ρ(x) = Π(x, a)`, a representation of `x ∘ y = [x a y]` with identity
/// `ā`. The homomorphism property is verified exhaustively.
pub fn retract_rep(
    cube: &CayleyCube,
    a: usize,
    left: &Representation,
) -> Result<Vec<Matrix>, Error> {
    props::ternary_group_check(cube)?;
    cube.check_element(a)?;
    if left.kind() != RepKind::Left {
        return Err(Error::RepresentationViolation {
            law: "retract restriction requires a left family",
            tuple: vec![],
        });
    }
    let n = cube.order();
    let ret = retract(cube, a);
    let rho: Vec<Matrix> = (0..n).map(|x| left.mat(x, a).clone()).collect();
    check_binary_rep(&ret, &rho)?;
    Ok(rho)
}

/// Rebuilds a left family from a representation of the retract at `a`:
/// `Π(x, y) = ρ(x)·ρ([ā y ā])`. The second factor is `ρ` of the retract
/// inverse of `ȳ`, so no matrix inversion is needed. The result is verified
/// against every left-family law.
pub fn left_from_retract_rep(
    cube: &CayleyCube,
    a: usize,
    rho: &[Matrix],
) -> Result<Representation, Error> {
    let skew = props::ternary_group_check(cube)?;
    cube.check_element(a)?;
    let ret = retract(cube, a);
    check_binary_rep(&ret, rho)?;
    let n = cube.order();
    let abar = skew.get(a);
    let mut mats = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            // [ā y ā] is the retract inverse of ȳ: [ȳ a [ā y ā]] = ā.
            let inv = cube.get(abar, y, abar);
            mats.push(rho[x].mul(&rho[inv]));
        }
    }
    let rep = Representation::new(RepKind::Left, n, mats)?;
    verify_representation(&rep, cube)?;
    Ok(rep)
}

/// Middle family over the derived group built from two commuting binary
/// representations: `Π(x, y) = π(x)·ρ(y⁻¹)`.
///
/// Fails with [`Error::NonCommutingPair`] if some `π(x)` and `ρ(y)` do not
/// commute. The result is verified against every middle-family law, and the
/// factors are recovered back as `π(x) = Π(x, e)`, `ρ(x) = Π(e, x⁻¹)`.
pub fn middle_from_commuting_pair(
    group: &BinaryTable,
    pi: &[Matrix],
    rho: &[Matrix],
) -> Result<Representation, Error> {
    let e = check_binary_rep(group, pi)?;
    check_binary_rep(group, rho)?;
    if pi[0].dim() != rho[0].dim() {
        return Err(Error::SizeMismatch {
            order: group.order(),
            got: rho[0].dim(),
            need: pi[0].dim(),
        });
    }
    let n = group.order();
    for x in 0..n {
        for y in 0..n {
            if !pi[x].commutes_with(&rho[y], TOL_ENTRY) {
                return Err(Error::NonCommutingPair { x, y });
            }
        }
    }
    let cube = derive(group);
    let mut mats = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            mats.push(pi[x].mul(&rho[group.inverse(y)]));
        }
    }
    let rep = Representation::new(RepKind::Middle, n, mats)?;
    verify_representation(&rep, &cube)?;
    for x in 0..n {
        if !pi[x].approx_eq(rep.mat(x, e), TOL_ENTRY) {
            return Err(Error::RepresentationViolation {
                law: "first factor recovery",
                tuple: vec![x],
            });
        }
        if !rho[x].approx_eq(rep.mat(e, group.inverse(x)), TOL_ENTRY) {
            return Err(Error::RepresentationViolation {
                law: "second factor recovery",
                tuple: vec![x],
            });
        }
    }
    Ok(rep)
}

/// Representations induced by a middle family on the structures that cover
/// the group: the retract of the pair middle group and the double cover.
#[derive(Debug, Clone, Serialize)]
pub struct CoveringRep {
    /// `ρ(x, y) = Π(x, y)·Π(a, b)`, a representation of the retract of the
    /// pair middle group at `(a, b)`, indexed by `x·n + y`.
    pub retract_rep: Vec<Matrix>,
    /// `μ(x, 0) = Π(x, x̄)` and `μ(x, 1) = Π(x, x̄)·Π(a, ā)`, a representation
    /// of the double cover at base `a` (lower sheet `x`, upper sheet `x+n`).
    pub cover_rep: Vec<Matrix>,
    /// Embedding `x ↦ (x, x̄)` of the group into the pair middle group,
    /// recorded as pair indices.
    pub embedding: Vec<usize>,
}

/// Builds and verifies the induced representations of the pair-middle-group
/// retract at `(a, b)` and of the double cover at `a`, together with the
/// product-preserving embedding `x ↦ (x, x̄)`.
pub fn covering_rep(
    cube: &CayleyCube,
    middle: &Representation,
    a: usize,
    b: usize,
) -> Result<CoveringRep, Error> {
    if middle.kind() != RepKind::Middle {
        return Err(Error::RepresentationViolation {
            law: "covering construction requires a middle family",
            tuple: vec![],
        });
    }
    let skew = props::ternary_group_check(cube)?;
    cube.check_element(a)?;
    cube.check_element(b)?;
    verify_representation(middle, cube)?;
    let n = cube.order();

    let pairs = pair_middle_group(cube)?;
    let p0 = pair_index(n, a, b);
    let pair_retract = retract(&pairs, p0);
    let base = middle.mat(a, b);
    let retract_rep: Vec<Matrix> = (0..n * n)
        .map(|p| {
            let (x, y) = crate::constructions::pair_split(n, p);
            middle.mat(x, y).mul(base)
        })
        .collect();
    check_binary_rep(&pair_retract, &retract_rep)?;

    let cover = post_cover(cube, a)?;
    let cover_table = cover.group_table();
    let twist = middle.mat(a, skew.get(a));
    let mut cover_rep = Vec::with_capacity(2 * n);
    for x in 0..n {
        cover_rep.push(middle.mat(x, skew.get(x)).clone());
    }
    for x in 0..n {
        cover_rep.push(middle.mat(x, skew.get(x)).mul(twist));
    }
    check_binary_rep(&cover_table, &cover_rep)?;

    let embedding: Vec<usize> = (0..n).map(|x| pair_index(n, x, skew.get(x))).collect();
    for x in 0..n {
        for y in 0..n {
            if embedding[x] == embedding[y] && x != y {
                return Err(Error::InternalVerificationFailure(
                    "pair embedding is not injective".into(),
                ));
            }
            for z in 0..n {
                let lhs = pairs.get(embedding[x], embedding[y], embedding[z]);
                if lhs != embedding[cube.get(x, y, z)] {
                    return Err(Error::RepresentationViolation {
                        law: "pair embedding preserves the product",
                        tuple: vec![x, y, z],
                    });
                }
            }
        }
    }

    Ok(CoveringRep {
        retract_rep,
        cover_rep,
        embedding,
    })
}
