//! Enumeration, canonical forms, and isomorphism testing for small ternary
//! groups.
//!
//! Every ternary group arises from a binary group `(G, ·)`, an automorphism
//! `φ`, and an element `b` through `[x y z] = x · φ(y) · φ²(z) · b`; the
//! compatibility constraints on `(φ, b)` are absorbed by a final group-law
//! check on the resulting cube. Scanning the groups of each order up to
//! isomorphism, all of their automorphisms, and all translations `b` reaches
//! every ternary group of that order up to relabeling; canonical forms
//! remove the duplicates.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::binary::{cyclic, klein_four, symmetric_3, BinaryTable};
use crate::constructions::retract_isomorphism_check;
use crate::cube::CayleyCube;
use crate::error::Error;
use crate::props::{self, PropertyReport, MEDIALITY_DEFAULT_BOUND};

/// Largest order accepted by [`enumerate_ternary_groups`] and
/// [`canonical_form`] (the canonical form scans all `order!` relabelings).
pub const MAX_ENUM_ORDER: usize = 6;

/// Largest order accepted by [`is_isomorphic`].
pub const MAX_ISO_ORDER: usize = 8;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                extend(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// The groups of each order up to isomorphism, for orders 1 through 6.
pub fn small_groups(order: usize) -> Vec<(&'static str, BinaryTable)> {
    match order {
        1 => vec![("trivial", cyclic(1))],
        2 => vec![("cyclic2", cyclic(2))],
        3 => vec![("cyclic3", cyclic(3))],
        4 => vec![("cyclic4", cyclic(4)), ("klein4", klein_four())],
        5 => vec![("cyclic5", cyclic(5))],
        6 => vec![("cyclic6", cyclic(6)), ("sym3", symmetric_3())],
        _ => vec![],
    }
}

/// Lexicographically smallest table among all relabelings of the cube.
///
/// Two cubes are isomorphic exactly when their canonical forms agree, so the
/// form is a complete isomorphism invariant for orders up to
/// [`MAX_ENUM_ORDER`].
pub fn canonical_form(cube: &CayleyCube) -> Result<Vec<usize>, Error> {
    let n = cube.order();
    if n > MAX_ENUM_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: MAX_ENUM_ORDER,
        });
    }
    let mut best: Option<Vec<usize>> = None;
    for p in permutations(n) {
        let t = cube.relabel(&p).table().to_vec();
        if best.as_ref().map_or(true, |b| t < *b) {
            best = Some(t);
        }
    }
    Ok(best.expect("order is at least one"))
}

type ElementSignature = (usize, usize, usize, usize);

fn element_signature(cube: &CayleyCube, e: usize) -> ElementSignature {
    let n = cube.order();
    let mut s = (0, 0, 0, 0);
    for y in 0..n {
        for z in 0..n {
            if cube.get(e, y, z) == e {
                s.0 += 1;
            }
            if cube.get(y, e, z) == e {
                s.1 += 1;
            }
            if cube.get(y, z, e) == e {
                s.2 += 1;
            }
        }
    }
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                if cube.get(p, q, r) == e {
                    s.3 += 1;
                }
            }
        }
    }
    s
}

fn extend_isomorphism(
    a: &CayleyCube,
    b: &CayleyCube,
    sig_a: &[ElementSignature],
    sig_b: &[ElementSignature],
    phi: &mut [usize],
    used: &mut [bool],
    x: usize,
) -> bool {
    let n = a.order();
    if x == n {
        for p in 0..n {
            for q in 0..n {
                for r in 0..n {
                    if phi[a.get(p, q, r)] != b.get(phi[p], phi[q], phi[r]) {
                        return false;
                    }
                }
            }
        }
        return true;
    }
    for t in 0..n {
        if used[t] || sig_a[x] != sig_b[t] {
            continue;
        }
        phi[x] = t;
        used[t] = true;
        // Elements are assigned in order, so values at most `x` are mapped.
        let consistent = (0..=x).all(|p| {
            (0..=x).all(|q| {
                (0..=x).all(|r| {
                    let v = a.get(p, q, r);
                    v > x || b.get(phi[p], phi[q], phi[r]) == phi[v]
                })
            })
        });
        if consistent && extend_isomorphism(a, b, sig_a, sig_b, phi, used, x + 1) {
            return true;
        }
        used[t] = false;
    }
    phi[x] = usize::MAX;
    false
}

/// Searches for a relabeling `φ` with `φ([x y z]) = [φ(x) φ(y) φ(z)]'`.
///
/// Returns the witness permutation if the cubes are isomorphic. Elementwise
/// occurrence counts prune the backtracking; orders above [`MAX_ISO_ORDER`]
/// are rejected.
pub fn is_isomorphic(a: &CayleyCube, b: &CayleyCube) -> Result<Option<Vec<usize>>, Error> {
    if a.order() != b.order() {
        return Ok(None);
    }
    let n = a.order();
    if n > MAX_ISO_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: MAX_ISO_ORDER,
        });
    }
    let sig_a: Vec<ElementSignature> = (0..n).map(|e| element_signature(a, e)).collect();
    let sig_b: Vec<ElementSignature> = (0..n).map(|e| element_signature(b, e)).collect();
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return Ok(None);
    }
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend_isomorphism(a, b, &sig_a, &sig_b, &mut phi, &mut used, 0) {
        Ok(Some(phi))
    } else {
        Ok(None)
    }
}

/// One ternary group of the census, stored in canonical form together with
/// a recipe that rebuilds an isomorphic copy.
#[derive(Debug, Clone, Serialize)]
pub struct CensusEntry {
    /// Canonical representative of the isomorphism class.
    pub cube: CayleyCube,
    /// Property flags of the canonical representative.
    pub report: PropertyReport,
    /// Name of the binary group whose twisted derivation found this class.
    pub source_group: String,
    /// Automorphism used in the derivation (an isomorphic copy of the cube
    /// is `[x y z] = x·φ(y)·φ²(z)·b` over the source group).
    pub automorphism: Vec<usize>,
    /// Translation element `b` of the derivation.
    pub translation: usize,
}

/// Enumerates all ternary groups of the given order up to isomorphism,
/// sorted by canonical table.
pub fn enumerate_ternary_groups(order: usize) -> Result<Vec<CensusEntry>, Error> {
    if order == 0 || order > MAX_ENUM_ORDER {
        return Err(Error::OrderTooLarge {
            order,
            max: MAX_ENUM_ORDER,
        });
    }
    let mut found: BTreeMap<Vec<usize>, CensusEntry> = BTreeMap::new();
    for (name, group) in small_groups(order) {
        for phi in group.automorphisms() {
            for b in 0..order {
                let cube = CayleyCube::from_fn(order, |x, y, z| {
                    group.get(group.get(group.get(x, phi[y]), phi[phi[z]]), b)
                });
                if !props::is_ternary_group(&cube) {
                    continue;
                }
                let canon = canonical_form(&cube)?;
                if found.contains_key(&canon) {
                    continue;
                }
                let canonical = CayleyCube::from_raw(order, canon.clone())
                    .expect("canonical table stays closed");
                let report =
                    PropertyReport::build(&canonical, order <= MEDIALITY_DEFAULT_BOUND);
                found.insert(
                    canon,
                    CensusEntry {
                        cube: canonical,
                        report,
                        source_group: name.to_string(),
                        automorphism: phi.clone(),
                        translation: b,
                    },
                );
            }
        }
    }
    Ok(found.into_values().collect())
}

/// Direct search over all 256 order-two cubes; returns the sorted canonical
/// forms of those that are ternary groups. Used to cross-check the
/// parametrized enumeration on an exhaustive ground truth.
pub fn order_two_brute_force() -> Vec<Vec<usize>> {
    let mut canon: BTreeSet<Vec<usize>> = BTreeSet::new();
    for bits in 0u32..256 {
        let table: Vec<usize> = (0..8).map(|i| ((bits >> i) & 1) as usize).collect();
        let cube = CayleyCube::from_raw(2, table).expect("bits give a closed table");
        if props::is_ternary_group(&cube) {
            canon.insert(canonical_form(&cube).expect("order two is canonicalizable"));
        }
    }
    canon.into_iter().collect()
}

/// Census of one order.
#[derive(Debug, Clone, Serialize)]
pub struct OrderCensus {
    pub order: usize,
    pub count: usize,
    pub entries: Vec<CensusEntry>,
}

/// Enumerates every order up to `max_order` and cross-validates each entry:
/// the independent solvability characterization must accept it, all skew
/// identities must hold, all of its retracts must be isomorphic, and the
/// entries of one order must be pairwise non-isomorphic (checking the
/// canonical-form dedup against the backtracking isomorphism search).
pub fn census(max_order: usize) -> Result<Vec<OrderCensus>, Error> {
    let mut out = Vec::new();
    for order in 1..=max_order {
        let entries = enumerate_ternary_groups(order)?;
        for e in &entries {
            if !props::eq_solvability_check(&e.cube) {
                return Err(Error::InternalVerificationFailure(
                    "census entry rejected by the solvability characterization".into(),
                ));
            }
            let skew = props::ternary_group_check(&e.cube)?;
            props::verify_skew_identities(&e.cube, &skew).map_err(|v| {
                Error::InternalVerificationFailure(format!(
                    "census entry violates skew identity `{}` at {:?}",
                    v.identity, v.tuple
                ))
            })?;
            if !retract_isomorphism_check(&e.cube)? {
                return Err(Error::InternalVerificationFailure(
                    "census entry has non-isomorphic retracts".into(),
                ));
            }
        }
        for i in 0..entries.len() {
            for j in i + 1..entries.len() {
                if is_isomorphic(&entries[i].cube, &entries[j].cube)?.is_some() {
                    return Err(Error::InternalVerificationFailure(
                        "distinct canonical forms must not be isomorphic".into(),
                    ));
                }
            }
        }
        out.push(OrderCensus {
            order,
            count: entries.len(),
            entries,
        });
    }
    Ok(out)
}
