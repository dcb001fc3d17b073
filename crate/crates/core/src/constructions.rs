//! Bridges between binary and ternary operations: derived and shifted-derived
//! cubes, retracts, the decomposition of a ternary group over a binary group
//! with a twisting automorphism, the two-sheeted covering group, and the three
//! pair structures on G×G.
//!
//! The two theorem-shaped constructions ([`gluskin_hosszu`] and [`post_cover`])
//! re-verify every claimed invariant before returning; a verification failure
//! is reported as [`Error::InternalVerificationFailure`] because it can only
//! mean a bug in this crate.

use serde::Serialize;

use crate::binary::BinaryTable;
use crate::cube::CayleyCube;
use crate::error::Error;
use crate::props;

/// Fixed encoding of a pair `(x, y)` over a carrier of order `n`. All G×G
/// structures in this crate share it.
#[inline]
pub fn pair_index(n: usize, x: usize, y: usize) -> usize {
    debug_assert!(x < n && y < n);
    x * n + y
}

/// Inverse of [`pair_index`].
#[inline]
pub fn pair_split(n: usize, p: usize) -> (usize, usize) {
    debug_assert!(p < n * n);
    (p / n, p % n)
}

/// The cube `t[x][y][z] = (x ⊙ y) ⊙ z` obtained by iterating a binary
/// operation. Works for any table; the result is associative when the input
/// is.
pub fn derive(binary: &BinaryTable) -> CayleyCube {
    CayleyCube::from_fn(binary.order(), |x, y, z| {
        binary.get(binary.get(x, y), z)
    })
}

/// The shifted derived cube `t[x][y][z] = ((x ⊙ y) ⊙ z) ⊙ b`. For a binary
/// group this cube is associative exactly when `b` is central.
pub fn b_derive(binary: &BinaryTable, b: usize) -> CayleyCube {
    CayleyCube::from_fn(binary.order(), |x, y, z| {
        binary.get(binary.get(binary.get(x, y), z), b)
    })
}

/// The binary retract at base point `a`: `x ⊛ y = [x a y]`. For a ternary
/// group the retract is a binary group with identity `ā` and inverses
/// `x⁻¹ = [ā x̄ ā]`.
pub fn retract(cube: &CayleyCube, a: usize) -> BinaryTable {
    BinaryTable::from_fn(cube.order(), |x, y| cube.get(x, a, y))
}

/// A ternary group expressed over one of its retracts: `[xyz] =
/// x ⊛ φ(y) ⊛ φ²(z) ⊛ b` where `⊛` is the retract at `a`, `φ(x) = [ā x a]`,
/// and `b = [ā ā ā]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GhDecomposition {
    pub base_point: usize,
    pub retract: BinaryTableRepr,
    /// Identity of the retract, `ā`.
    pub identity: usize,
    /// The twisting automorphism `φ(x) = [ā x a]`; fixes `a`.
    pub phi: Vec<usize>,
    /// The shift `b = [ā ā ā]`.
    pub b_element: usize,
}

/// Serializable view of a [`BinaryTable`] (order plus row-major entries).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinaryTableRepr {
    pub order: usize,
    pub table: Vec<usize>,
}

impl From<&BinaryTable> for BinaryTableRepr {
    fn from(t: &BinaryTable) -> Self {
        BinaryTableRepr {
            order: t.order(),
            table: t.table().to_vec(),
        }
    }
}

impl GhDecomposition {
    /// The retract as an operation table.
    pub fn retract_table(&self) -> BinaryTable {
        BinaryTable::from_raw(self.retract.order, self.retract.table.clone())
            .expect("decomposition stores a validated table")
    }
}

/// Decomposes a ternary group over its retract at `a`, verifying that the
/// retract is a group with identity `ā`, that `φ` is an automorphism fixing
/// `a`, and that the reconstruction identity reproduces the cube entrywise.
pub fn gluskin_hosszu(cube: &CayleyCube, a: usize) -> Result<GhDecomposition, Error> {
    cube.check_element(a)?;
    let skew = props::ternary_group_check(cube)?;
    let n = cube.order();
    let ret = retract(cube, a);
    let a_bar = skew.get(a);
    let phi: Vec<usize> = (0..n).map(|x| cube.get(a_bar, x, a)).collect();
    let b = cube.get(a_bar, a_bar, a_bar);

    let fail = |msg: String| Err(Error::InternalVerificationFailure(msg));
    match ret.group_check() {
        Ok(e) if e == a_bar => {}
        Ok(e) => return fail(format!("retract identity is {e}, expected {a_bar}")),
        Err(err) => return fail(format!("retract at {a} is not a group: {err}")),
    }
    if phi[a] != a {
        return fail(format!("phi({a}) = {} does not fix the base point", phi[a]));
    }
    {
        let mut seen = vec![false; n];
        for &v in &phi {
            seen[v] = true;
        }
        if seen.iter().any(|&s| !s) {
            return fail("phi is not a bijection".into());
        }
    }
    for x in 0..n {
        for y in 0..n {
            if phi[ret.get(x, y)] != ret.get(phi[x], phi[y]) {
                return fail(format!("phi is not a homomorphism at ({x}, {y})"));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let rebuilt = ret.get(ret.get(ret.get(x, phi[y]), phi[phi[z]]), b);
                if rebuilt != cube.get(x, y, z) {
                    return fail(format!("reconstruction fails at [{x} {y} {z}]"));
                }
            }
        }
    }
    Ok(GhDecomposition {
        base_point: a,
        retract: BinaryTableRepr::from(&ret),
        identity: a_bar,
        phi,
        b_element: b,
    })
}

/// The two-sheeted covering group of a ternary group: the binary group on
/// `G × ℤ₂` (element `(x, s)` encoded as `x + s·n`) in which the original
/// ternary product appears as `(x,0) ⊛ (y,0) ⊛ (z,0) = ([xyz], 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoveringGroup {
    /// Order of the covered ternary group; the cover has order `2n`.
    pub base_order: usize,
    pub table: BinaryTableRepr,
    /// Encoded neutral element `(c̄, 1)`.
    pub neutral: usize,
    /// Membership mask of the index-2 subgroup `H = {(x, 1)}`.
    pub h_mask: Vec<bool>,
}

impl CoveringGroup {
    pub fn group_table(&self) -> BinaryTable {
        BinaryTable::from_raw(self.table.order, self.table.table.clone())
            .expect("covering group stores a validated table")
    }

    /// The subgroup `H` as a standalone table on carrier `x ↦ (x, 1)`.
    pub fn h_table(&self) -> BinaryTable {
        let n = self.base_order;
        let full = self.group_table();
        BinaryTable::from_fn(n, |x, y| full.get(x + n, y + n) - n)
    }
}

/// Builds the covering group at parameter `c` and verifies: the group axioms,
/// the neutral element `(c̄, 1)`, the inverse formulas `(x,0)⁻¹ = (x̄, 0)` and
/// `(x,1)⁻¹ = ([c̄ x̄ c̄], 1)`, normality and index 2 of `H = {(x, 1)}`, and
/// the embedding identity for all triples.
pub fn post_cover(cube: &CayleyCube, c: usize) -> Result<CoveringGroup, Error> {
    cube.check_element(c)?;
    let skew = props::ternary_group_check(cube)?;
    let n = cube.order();
    let c_bar = skew.get(c);
    let table = BinaryTable::from_fn(2 * n, |p, q| {
        let (x, s) = (p % n, p / n);
        let (y, t) = (q % n, q / n);
        match (s, t) {
            (0, 0) => cube.get(x, y, c_bar) + n,
            (0, 1) => cube.get(x, y, c),
            (1, 0) => cube.get(x, c, y),
            (1, 1) => cube.get(x, c, y) + n,
            _ => unreachable!("sheets are 0 or 1"),
        }
    });

    let fail = |msg: String| Err(Error::InternalVerificationFailure(msg));
    let neutral = c_bar + n;
    match table.group_check() {
        Ok(e) if e == neutral => {}
        Ok(e) => return fail(format!("cover neutral is {e}, expected {neutral}")),
        Err(err) => return fail(format!("cover is not a group: {err}")),
    }
    for x in 0..n {
        let inv0 = table.inverse(x);
        if inv0 != skew.get(x) {
            return fail(format!("inverse of ({x},0) is {inv0}, expected skew"));
        }
        let inv1 = table.inverse(x + n);
        let expect = cube.get(c_bar, skew.get(x), c_bar) + n;
        if inv1 != expect {
            return fail(format!("inverse of ({x},1) is {inv1}, expected {expect}"));
        }
    }
    // H is the upper sheet; closure, normality, index 2.
    for x in n..2 * n {
        for y in n..2 * n {
            if table.get(x, y) < n {
                return fail("H is not closed".into());
            }
        }
    }
    for g in 0..2 * n {
        let g_inv = table.inverse(g);
        for h in n..2 * n {
            if table.get(table.get(g, h), g_inv) < n {
                return fail(format!("H is not normal: conjugating {h} by {g}"));
            }
        }
    }
    // Embedding: the lower sheet multiplies back into the cube.
    for x in 0..n {
        for y in 0..n {
            let xy = table.get(x, y);
            for z in 0..n {
                if table.get(xy, z) != cube.get(x, y, z) {
                    return fail(format!("embedding fails at [{x} {y} {z}]"));
                }
            }
        }
    }
    let h_mask: Vec<bool> = (0..2 * n).map(|p| p >= n).collect();
    Ok(CoveringGroup {
        base_order: n,
        table: BinaryTableRepr::from(&table),
        neutral,
        h_mask,
    })
}

/// Checks that all retracts of a ternary group are pairwise isomorphic and
/// isomorphic to the subgroup `H` of every covering group. Exhaustive
/// bijection search with element-order pruning; intended for small orders.
pub fn retract_isomorphism_check(cube: &CayleyCube) -> Result<bool, Error> {
    props::ternary_group_check(cube)?;
    let n = cube.order();
    let reference = retract(cube, 0);
    for a in 1..n {
        if reference.isomorphism_to(&retract(cube, a)).is_none() {
            return Ok(false);
        }
    }
    for c in 0..n {
        let cover = post_cover(cube, c)?;
        if reference.isomorphism_to(&cover.h_table()).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The semigroup on G×G with `(x,y) ∗ (u,v) = ([xyu], v)`; verified
/// associative. Every `(u, ū)` is a left unit and each `(x, y)` has the
/// private right unit `(ȳ, y)`.
pub fn pair_star(cube: &CayleyCube) -> Result<BinaryTable, Error> {
    props::ternary_group_check(cube)?;
    let n = cube.order();
    let table = BinaryTable::from_fn(n * n, |p, q| {
        let (x, y) = pair_split(n, p);
        let (u, v) = pair_split(n, q);
        pair_index(n, cube.get(x, y, u), v)
    });
    if !table.is_associative() {
        return Err(Error::InternalVerificationFailure(
            "pair star operation is not associative".into(),
        ));
    }
    Ok(table)
}

/// The mirrored pair semigroup `(x,y) ⋄ (u,v) = (u, [vxy])` together with the
/// verified isomorphism onto the star semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiamondPair {
    pub table: BinaryTable,
    /// Pair-encoded images of the isomorphism `(x, y) ↦ (ȳ, x̄)` onto the
    /// star semigroup.
    pub iso_to_star: Vec<usize>,
}

/// Builds the diamond semigroup and verifies that `(x, y) ↦ (ȳ, x̄)` is an
/// isomorphism onto [`pair_star`].
pub fn pair_diamond(cube: &CayleyCube) -> Result<DiamondPair, Error> {
    let skew = props::ternary_group_check(cube)?;
    let n = cube.order();
    let table = BinaryTable::from_fn(n * n, |p, q| {
        let (x, y) = pair_split(n, p);
        let (u, v) = pair_split(n, q);
        pair_index(n, u, cube.get(v, x, y))
    });
    let star = pair_star(cube)?;
    let iso: Vec<usize> = (0..n * n)
        .map(|p| {
            let (x, y) = pair_split(n, p);
            pair_index(n, skew.get(y), skew.get(x))
        })
        .collect();
    let mut seen = vec![false; n * n];
    for &v in &iso {
        seen[v] = true;
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::InternalVerificationFailure(
            "pair map is not a bijection".into(),
        ));
    }
    for p in 0..n * n {
        for q in 0..n * n {
            if iso[table.get(p, q)] != star.get(iso[p], iso[q]) {
                return Err(Error::InternalVerificationFailure(format!(
                    "pair map fails to intertwine diamond and star at ({p}, {q})"
                )));
            }
        }
    }
    Ok(DiamondPair {
        table,
        iso_to_star: iso,
    })
}

/// The ternary group on G×G with componentwise-but-mirrored product
/// `⟨(x₁,y₁),(x₂,y₂),(x₃,y₃)⟩ = ([x₁x₂x₃], [y₃y₂y₁])`; verified to be a
/// ternary group whose skew maps `(x, y)` to `(x̄, ȳ)`.
pub fn pair_middle_group(cube: &CayleyCube) -> Result<CayleyCube, Error> {
    let skew = props::ternary_group_check(cube)?;
    let n = cube.order();
    let pair_cube = CayleyCube::from_fn(n * n, |p, q, r| {
        let (x1, y1) = pair_split(n, p);
        let (x2, y2) = pair_split(n, q);
        let (x3, y3) = pair_split(n, r);
        pair_index(n, cube.get(x1, x2, x3), cube.get(y3, y2, y1))
    });
    let pair_skew = props::ternary_group_check(&pair_cube).map_err(|e| {
        Error::InternalVerificationFailure(format!("pair cube is not a ternary group: {e}"))
    })?;
    for p in 0..n * n {
        let (x, y) = pair_split(n, p);
        let expect = pair_index(n, skew.get(x), skew.get(y));
        if pair_skew.get(p) != expect {
            return Err(Error::InternalVerificationFailure(format!(
                "pair skew at {p} is {}, expected componentwise {expect}",
                pair_skew.get(p)
            )));
        }
    }
    Ok(pair_cube)
}

/// Middle unit exhibiting the cube as a derived cube, if any: the smallest
/// `e` with `[e y e] = y` for all `y` and `cube = derive(retract(cube, e))`.
pub fn is_derived_from_binary(cube: &CayleyCube) -> Option<usize> {
    props::derived_from_binary(cube)
}
