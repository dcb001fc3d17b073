//! Built-in example cubes covering the main structural landscape: idempotent
//! and identity-free affine cubes, a noncommutative group of odd permutations
//! not derived from any binary group, the negated quaternion product, and
//! cubes derived from binary groups.

use crate::binary::{klein_four, symmetric_3};
use crate::constructions::{b_derive, derive};
use crate::cube::CayleyCube;
use crate::error::Error;

/// Names accepted by [`builtin_example`], in presentation order.
pub const BUILTIN_NAMES: [&str; 7] = [
    "z3",
    "z4p1",
    "s3odd",
    "quat",
    "bool2",
    "s3derived",
    "z4derived1",
];

/// Looks up a built-in cube by name.
///
/// - `z3`: order 3, `[xyz] = x − y + z (mod 3)` — idempotent, semicommutative,
///   no identities.
/// - `z4p1`: order 4, `[xyz] = x + y + z + 1 (mod 4)` — commutative, no
///   identities, no idempotents.
/// - `s3odd`: order 3, the odd permutations of S₃ on carrier
///   `[(12), (13), (23)]` under three-fold composition — a noncommutative
///   ternary group not derived from any binary group.
/// - `quat`: order 8, quaternion units `[1, −1, i, −i, j, −j, k, −k]` with
///   `[xyz] = −x·y·z` — the skew map swaps `1 ↔ −1` and fixes the rest.
/// - `bool2`: order 4, derived from ℤ₂ × ℤ₂ (bitwise XOR on 2-bit codes) —
///   every element is a ternary identity.
/// - `s3derived`: order 6, derived from S₃ on carrier
///   `[e, (12), (13), (23), (123), (132)]`.
/// - `z4derived1`: order 4, the 1-shifted derived cube of (ℤ₄, +); equals
///   `z4p1` entrywise.
pub fn builtin_example(name: &str) -> Result<CayleyCube, Error> {
    match name {
        "z3" => Ok(CayleyCube::from_fn(3, |x, y, z| (x + 2 * y + z) % 3)),
        "z4p1" => Ok(CayleyCube::from_fn(4, |x, y, z| (x + y + z + 1) % 4)),
        "s3odd" => Ok(s3_odd()),
        "quat" => Ok(quaternions()),
        "bool2" => Ok(derive(&klein_four())),
        "s3derived" => Ok(derive(&symmetric_3())),
        "z4derived1" => Ok(b_derive(
            &crate::binary::cyclic(4),
            1,
        )),
        _ => Err(Error::UnknownExample {
            name: name.to_string(),
            known: BUILTIN_NAMES.join(", "),
        }),
    }
}

/// Odd permutations of S₃ — the three transpositions — composed in argument
/// order: `[xyz](p) = z(y(x(p)))`.
fn s3_odd() -> CayleyCube {
    const TRANSPOSITIONS: [[usize; 3]; 3] = [[1, 0, 2], [2, 1, 0], [0, 2, 1]];
    CayleyCube::from_fn(3, |x, y, z| {
        let (a, b, c) = (TRANSPOSITIONS[x], TRANSPOSITIONS[y], TRANSPOSITIONS[z]);
        let composite = [c[b[a[0]]], c[b[a[1]]], c[b[a[2]]]];
        TRANSPOSITIONS
            .iter()
            .position(|&t| t == composite)
            .expect("product of three transpositions in S₃ is a transposition")
    })
}

/// Quaternion units encoded as `2·axis + sign`, with axes `1, i, j, k` and
/// sign bit `0 = +`, `1 = −`, so the carrier reads `[1, −1, i, −i, j, −j, k, −k]`.
/// The ternary product is the negated triple product `−x·y·z`, computed in
/// exact integer arithmetic.
fn quaternions() -> CayleyCube {
    // (sign flip, resulting axis) for axis·axis products over 1, i, j, k.
    fn unit_mul(a: usize, b: usize) -> (bool, usize) {
        match (a, b) {
            (0, b) => (false, b),
            (a, 0) => (false, a),
            (a, b) if a == b => (true, 0),          // i² = j² = k² = −1
            (1, 2) => (false, 3),                   // i·j = k
            (2, 1) => (true, 3),                    // j·i = −k
            (2, 3) => (false, 1),                   // j·k = i
            (3, 2) => (true, 1),                    // k·j = −i
            (3, 1) => (false, 2),                   // k·i = j
            (1, 3) => (true, 2),                    // i·k = −j
            _ => unreachable!("axes are 0..4"),
        }
    }
    fn mul(x: usize, y: usize) -> usize {
        let (flip, axis) = unit_mul(x / 2, y / 2);
        2 * axis + ((x % 2) ^ (y % 2) ^ usize::from(flip))
    }
    CayleyCube::from_fn(8, |x, y, z| mul(mul(x, y), z) ^ 1)
}
