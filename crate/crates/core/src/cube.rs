//! Cayley cubes: dense tables of a ternary operation on `{0, …, n−1}`.

use crate::error::Error;

/// The table of a finite ternary operation, stored flat with `x` outermost and
/// `z` innermost: entry `(x, y, z)` lives at `(x·n + y)·n + z`.
///
/// Elements are plain `usize` indices into the carrier `0..order`. Validation
/// happens once, at construction; lookups afterwards are unchecked in release
/// builds.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
pub struct CayleyCube {
    order: usize,
    table: Vec<usize>,
}

impl CayleyCube {
    /// Builds a cube from a flat table, checking size and closure.
    pub fn from_raw(order: usize, table: Vec<usize>) -> Result<Self, Error> {
        let need = order * order * order;
        if table.len() != need || order == 0 {
            return Err(Error::SizeMismatch {
                order,
                got: table.len(),
                need,
            });
        }
        for (index, &value) in table.iter().enumerate() {
            if value >= order {
                return Err(Error::ClosureViolation {
                    index,
                    value,
                    order,
                });
            }
        }
        Ok(Self { order, table })
    }

    /// Builds a cube by evaluating `f` on every triple. `f` must return
    /// in-range elements; this is checked in debug builds only.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize, usize) -> usize) -> Self {
        assert!(order > 0, "cube order must be positive");
        let mut table = Vec::with_capacity(order * order * order);
        for x in 0..order {
            for y in 0..order {
                for z in 0..order {
                    let v = f(x, y, z);
                    debug_assert!(v < order, "from_fn produced out-of-range element");
                    table.push(v);
                }
            }
        }
        Self { order, table }
    }

    /// Number of elements in the carrier.
    pub fn order(&self) -> usize {
        self.order
    }

    /// The product `[x y z]`.
    #[inline]
    pub fn get(&self, x: usize, y: usize, z: usize) -> usize {
        debug_assert!(x < self.order && y < self.order && z < self.order);
        self.table[(x * self.order + y) * self.order + z]
    }

    /// The flat table, `x` outermost and `z` innermost.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// Errors unless `element` lies in the carrier.
    pub fn check_element(&self, element: usize) -> Result<(), Error> {
        if element < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element,
                order: self.order,
            })
        }
    }

    /// Relabels the cube along a bijection `map` of the carrier: the result
    /// satisfies `[map(x) map(y) map(z)] = map([x y z])`.
    pub fn relabel(&self, map: &[usize]) -> Self {
        let n = self.order;
        debug_assert_eq!(map.len(), n);
        let mut inv = vec![0; n];
        for (i, &v) in map.iter().enumerate() {
            inv[v] = i;
        }
        Self::from_fn(n, |x, y, z| map[self.get(inv[x], inv[y], inv[z])])
    }
}

/// The skew map of a ternary group: `skew(x)` is the unique `z` with
/// `[x x z] = x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMap {
    map: Vec<usize>,
}

impl SkewMap {
    pub(crate) fn new(map: Vec<usize>) -> Self {
        Self { map }
    }

    pub fn order(&self) -> usize {
        self.map.len()
    }

    /// The skew element `x̄`.
    #[inline]
    pub fn get(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }
}

/// A permutation of the three argument positions of a ternary product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Permutation3([usize; 3]);

impl Permutation3 {
    /// Swap of the first two arguments.
    pub const SWAP_12: Self = Self([1, 0, 2]);
    /// Swap of the last two arguments.
    pub const SWAP_23: Self = Self([0, 2, 1]);
    /// Swap of the outer arguments.
    pub const SWAP_13: Self = Self([2, 1, 0]);
    /// The identity rearrangement.
    pub const IDENTITY: Self = Self([0, 1, 2]);

    /// Builds a position permutation, rejecting images that are not a
    /// permutation of `{0, 1, 2}`.
    pub fn new(images: [usize; 3]) -> Option<Self> {
        let mut seen = [false; 3];
        for &i in &images {
            if i > 2 || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Self(images))
    }

    /// Applies the rearrangement to an argument triple.
    #[inline]
    pub fn apply(&self, args: [usize; 3]) -> [usize; 3] {
        [args[self.0[0]], args[self.0[1]], args[self.0[2]]]
    }

    /// The position images.
    pub fn images(&self) -> [usize; 3] {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_raw_checks_size() {
        let err = CayleyCube::from_raw(2, vec![0; 7]).unwrap_err();
        assert_eq!(
            err,
            Error::SizeMismatch {
                order: 2,
                got: 7,
                need: 8
            }
        );
    }

    #[test]
    fn from_raw_checks_closure() {
        let err = CayleyCube::from_raw(2, vec![0, 0, 0, 0, 0, 0, 0, 2]).unwrap_err();
        assert_eq!(
            err,
            Error::ClosureViolation {
                index: 7,
                value: 2,
                order: 2
            }
        );
    }

    #[test]
    fn from_fn_layout_is_x_outer_z_inner() {
        let c = CayleyCube::from_fn(2, |x, y, z| (x + y + z) % 2);
        assert_eq!(c.table(), &[0, 1, 1, 0, 1, 0, 0, 1]);
        assert_eq!(c.get(1, 0, 1), 0);
        assert_eq!(c.get(1, 1, 1), 1);
    }

    #[test]
    fn relabel_conjugates_the_table() {
        let c = CayleyCube::from_fn(3, |x, y, z| (x + 2 * y + z) % 3);
        let map = [2, 0, 1];
        let r = c.relabel(&map);
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    assert_eq!(r.get(map[x], map[y], map[z]), map[c.get(x, y, z)]);
                }
            }
        }
    }

    #[test]
    fn permutation3_rejects_non_permutations() {
        assert!(Permutation3::new([0, 0, 1]).is_none());
        assert!(Permutation3::new([0, 1, 3]).is_none());
        assert_eq!(
            Permutation3::SWAP_13.apply([7, 8, 9]),
            [9, 8, 7]
        );
    }
}
