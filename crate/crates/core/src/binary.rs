//! Finite binary operations as Cayley tables, with just enough group theory
//! to support retracts, covers and the census: identity/inverse bookkeeping,
//! centres, automorphism groups and isomorphism tests.

use crate::error::Error;

/// A binary operation on `{0, …, n−1}` stored as a row-major Cayley table:
/// `table[x · n + y] = x ⊙ y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryTable {
    order: usize,
    table: Vec<usize>,
}

impl BinaryTable {
    pub fn from_raw(order: usize, table: Vec<usize>) -> Result<Self, Error> {
        let need = order * order;
        if order == 0 || table.len() != need {
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
        Ok(BinaryTable { order, table })
    }

    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        assert!(order > 0, "order must be positive");
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                let v = f(x, y);
                debug_assert!(v < order);
                table.push(v);
            }
        }
        BinaryTable { order, table }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        debug_assert!(x < self.order && y < self.order);
        self.table[x * self.order + y]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.get(self.get(x, y), z) != self.get(x, self.get(y, z)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Two-sided identity element, if any.
    pub fn identity(&self) -> Option<usize> {
        (0..self.order).find(|&e| (0..self.order).all(|x| self.get(e, x) == x && self.get(x, e) == x))
    }

    /// Checks the group axioms, returning the identity element.
    pub fn group_check(&self) -> Result<usize, Error> {
        if !self.is_associative() {
            return Err(Error::NotAGroup {
                reason: "not associative".into(),
            });
        }
        let e = self.identity().ok_or_else(|| Error::NotAGroup {
            reason: "no identity element".into(),
        })?;
        for x in 0..self.order {
            if !(0..self.order).any(|y| self.get(x, y) == e && self.get(y, x) == e) {
                return Err(Error::NotAGroup {
                    reason: format!("element {x} has no inverse"),
                });
            }
        }
        Ok(e)
    }

    pub fn is_group(&self) -> bool {
        self.group_check().is_ok()
    }

    /// Inverse of `x`; the table must be a group.
    pub fn inverse(&self, x: usize) -> usize {
        let e = self.identity().expect("inverse() requires a group");
        (0..self.order)
            .find(|&y| self.get(x, y) == e && self.get(y, x) == e)
            .expect("inverse() requires a group")
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| (x + 1..n).all(|y| self.get(x, y) == self.get(y, x)))
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> Vec<usize> {
        let n = self.order;
        (0..n)
            .filter(|&c| (0..n).all(|x| self.get(c, x) == self.get(x, c)))
            .collect()
    }

    /// Order of `x` in a group: least `k ≥ 1` with `x^k = e`.
    pub fn element_order(&self, x: usize) -> usize {
        let e = self.identity().expect("element_order() requires a group");
        let mut acc = x;
        let mut k = 1;
        while acc != e {
            acc = self.get(acc, x);
            k += 1;
            assert!(k <= self.order, "element order exceeded group order");
        }
        k
    }

    /// Sorted multiset of element orders — a cheap isomorphism invariant.
    pub fn element_orders(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = (0..self.order).map(|x| self.element_order(x)).collect();
        orders.sort_unstable();
        orders
    }

    /// All automorphisms, as permutation images. Exhaustive backtracking with
    /// element-order pruning; fine for the orders used here.
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        self.bijective_homomorphisms(self)
    }

    /// An isomorphism onto `other`, if one exists.
    pub fn isomorphism_to(&self, other: &BinaryTable) -> Option<Vec<usize>> {
        if self.order != other.order || self.element_orders() != other.element_orders() {
            return None;
        }
        let mut found = None;
        self.search_bijections(other, &mut |phi| {
            found = Some(phi.to_vec());
            true
        });
        found
    }

    fn bijective_homomorphisms(&self, other: &BinaryTable) -> Vec<Vec<usize>> {
        let mut all = Vec::new();
        if self.order == other.order {
            self.search_bijections(other, &mut |phi| {
                all.push(phi.to_vec());
                false
            });
        }
        all
    }

    /// Backtracking over bijections `self → other` preserving the operation.
    /// `emit` returns true to stop after the current hit.
    fn search_bijections(&self, other: &BinaryTable, emit: &mut impl FnMut(&[usize]) -> bool) {
        let n = self.order;
        let self_orders: Vec<usize> = (0..n).map(|x| self.element_order(x)).collect();
        let other_orders: Vec<usize> = (0..n).map(|x| other.element_order(x)).collect();
        let mut phi = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn rec(
            s: &BinaryTable,
            o: &BinaryTable,
            so: &[usize],
            oo: &[usize],
            phi: &mut [usize],
            used: &mut [bool],
            x: usize,
            emit: &mut impl FnMut(&[usize]) -> bool,
        ) -> bool {
            let n = s.order();
            if x == n {
                // Constraints whose product value was unmapped at assignment
                // time were deferred; settle them all with one full pass.
                let homo = (0..n)
                    .all(|u| (0..n).all(|v| phi[s.get(u, v)] == o.get(phi[u], phi[v])));
                return homo && emit(phi);
            }
            for img in 0..n {
                if used[img] || so[x] != oo[img] {
                    continue;
                }
                // Consistency with every already-assigned pair; products whose
                // value is not yet mapped (usize::MAX) are deferred to the
                // recursion level that maps them.
                let consistent = |v: usize, target: usize| phi[v] == usize::MAX || phi[v] == target;
                let ok = (0..x).all(|y| {
                    consistent(s.get(x, y), o.get(img, phi[y]))
                        && consistent(s.get(y, x), o.get(phi[y], img))
                }) && consistent(s.get(x, x), o.get(img, img));
                if !ok {
                    continue;
                }
                phi[x] = img;
                used[img] = true;
                if rec(s, o, so, oo, phi, used, x + 1, emit) {
                    return true;
                }
                phi[x] = usize::MAX;
                used[img] = false;
            }
            false
        }
        rec(
            self,
            other,
            &self_orders,
            &other_orders,
            &mut phi,
            &mut used,
            0,
            emit,
        );
    }
}

/// The cyclic group ℤ_n under addition.
pub fn cyclic(n: usize) -> BinaryTable {
    BinaryTable::from_fn(n, |x, y| (x + y) % n)
}

/// The Klein four-group as ℤ₂ × ℤ₂ with elements encoded as 2-bit strings.
pub fn klein_four() -> BinaryTable {
    BinaryTable::from_fn(4, |x, y| x ^ y)
}

/// The symmetric group S₃ on carrier `[e, (12), (13), (23), (123), (132)]`,
/// composed left-to-right on points: `(σ ⊙ τ)(p) = τ(σ(p))`.
pub fn symmetric_3() -> BinaryTable {
    // Permutations of {0,1,2} listed in the carrier order above.
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2],
        [2, 1, 0],
        [0, 2, 1],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let index_of = |p: [usize; 3]| PERMS.iter().position(|&q| q == p).unwrap();
    BinaryTable::from_fn(6, |x, y| {
        let (s, t) = (PERMS[x], PERMS[y]);
        index_of([t[s[0]], t[s[1]], t[s[2]]])
    })
}
