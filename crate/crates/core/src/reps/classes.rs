//! Partitions of element pairs that control when two pairs act identically.
//!
//! Every representation family is constant on the matching partition: two
//! pairs related by the left (resp. middle) relation have equal left (resp.
//! middle) translations, and conjugate pairs have equal matrix traces.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::constructions::{pair_index, pair_middle_group, pair_split};
use crate::cube::CayleyCube;
use crate::error::Error;
use crate::matrix::TOL_ENTRY;
use crate::props;
use crate::reps::{left_regular, middle_regular, Representation};

/// The three pair relations with representation-theoretic meaning.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PairRelation {
    /// `(a,b) ~ (c,d)` iff `[a b x] = [c d x]` for all `x`.
    Left,
    /// `(a,b) ~ (c,d)` iff `[a x b] = [c x d]` for all `x`.
    Middle,
    /// `(a,b) ~ (c,d)` iff `c = [x a x̄]` and `d = [y b ȳ]` for some `x, y`.
    Conjugate,
}

impl PairRelation {
    pub fn name(self) -> &'static str {
        match self {
            PairRelation::Left => "left",
            PairRelation::Middle => "middle",
            PairRelation::Conjugate => "conjugate",
        }
    }
}

impl std::fmt::Display for PairRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for PairRelation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "left" => Ok(PairRelation::Left),
            "middle" => Ok(PairRelation::Middle),
            "conj" | "conjugate" => Ok(PairRelation::Conjugate),
            _ => Err(Error::Parse {
                line: 0,
                msg: format!("unknown pair relation `{s}`; expected left, middle, or conj"),
            }),
        }
    }
}

/// A partition of all `order²` pairs, pairs encoded as `x · order + y`.
///
/// Classes are listed in order of their smallest pair index, and `class_id`
/// maps each pair index to its class position in `classes`.
#[derive(Debug, Clone, Serialize)]
pub struct PairPartition {
    pub order: usize,
    pub relation: PairRelation,
    pub class_id: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
}

impl PairPartition {
    /// Class of the pair `(x, y)`.
    pub fn class_of(&self, x: usize, y: usize) -> usize {
        self.class_id[pair_index(self.order, x, y)]
    }
}

fn partition_from_keys<K: std::hash::Hash + Eq>(
    order: usize,
    relation: PairRelation,
    keys: impl Iterator<Item = K>,
) -> PairPartition {
    let mut seen: HashMap<K, usize> = HashMap::new();
    let mut class_id = Vec::with_capacity(order * order);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (idx, key) in keys.enumerate() {
        let id = *seen.entry(key).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        class_id.push(id);
        classes[id].push(idx);
    }
    PairPartition {
        order,
        relation,
        class_id,
        classes,
    }
}

/// Partitions the pairs of a ternary group under the requested relation.
///
/// For the left relation this also proves the collapse property (pairs whose
/// translations agree at a single point agree everywhere) and, for left and
/// middle, that the matching regular family is constant on classes and
/// distinct across classes.
pub fn pair_classes(cube: &CayleyCube, relation: PairRelation) -> Result<PairPartition, Error> {
    match relation {
        PairRelation::Left | PairRelation::Middle => translation_classes(cube, relation),
        PairRelation::Conjugate => Ok(conjugacy_classes(cube)?.on_pairs),
    }
}

fn translation_classes(
    cube: &CayleyCube,
    relation: PairRelation,
) -> Result<PairPartition, Error> {
    props::ternary_group_check(cube)?;
    let n = cube.order();
    let translation = |a: usize, b: usize| -> Vec<usize> {
        (0..n)
            .map(|t| match relation {
                PairRelation::Left => cube.get(a, b, t),
                PairRelation::Middle => cube.get(a, t, b),
                PairRelation::Conjugate => unreachable!(),
            })
            .collect()
    };
    let mut keys: Vec<Vec<usize>> = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            keys.push(translation(a, b));
        }
    }
    let partition = partition_from_keys(n, relation, keys.iter().cloned());
    if relation == PairRelation::Left {
        // Collapse: left translations of inequivalent pairs differ at every
        // point, so agreement at one point already forces equality.
        let reps: Vec<&Vec<usize>> = partition.classes.iter().map(|c| &keys[c[0]]).collect();
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                if reps[i].iter().zip(reps[j]).any(|(u, v)| u == v) {
                    return Err(Error::InternalVerificationFailure(
                        "left translations that agree at one point must agree everywhere"
                            .into(),
                    ));
                }
            }
        }
    }
    // The regular family of the same kind must be constant on classes and
    // injective across them.
    let rep = match relation {
        PairRelation::Left => left_regular(cube)?,
        PairRelation::Middle => middle_regular(cube)?,
        PairRelation::Conjugate => unreachable!(),
    };
    for class in &partition.classes {
        let first = &rep.mats()[class[0]];
        for &member in &class[1..] {
            if !rep.mats()[member].approx_eq(first, 0.0) {
                return Err(Error::InternalVerificationFailure(
                    "regular family varies on a translation class".into(),
                ));
            }
        }
    }
    for i in 0..partition.classes.len() {
        for j in i + 1..partition.classes.len() {
            let a = &rep.mats()[partition.classes[i][0]];
            let b = &rep.mats()[partition.classes[j][0]];
            if a.approx_eq(b, 0.0) {
                return Err(Error::InternalVerificationFailure(
                    "regular family repeats a matrix across translation classes".into(),
                ));
            }
        }
    }
    Ok(partition)
}

/// Conjugacy classes of elements and of pairs.
#[derive(Debug, Clone, Serialize)]
pub struct ConjugacyClasses {
    /// Classes of single elements under `a ↦ [x a x̄]`.
    pub on_elements: Vec<Vec<usize>>,
    /// Class of each element.
    pub element_class_id: Vec<usize>,
    /// Componentwise classes of pairs.
    pub on_pairs: PairPartition,
}

/// Computes conjugacy classes, proving on the way that the one-step relation
/// `a ≂ a′ ⟺ ∃x: a′ = [x a x̄]` is already an equivalence, and — when the
/// group is medial — that both class structures are congruences (elementwise
/// for the ternary product, pairwise for the componentwise middle product).
///
/// Mediality is detected through semicommutativity, which is equivalent to it
/// on ternary groups and costs `O(n³)` instead of `O(n⁹)`.
pub fn conjugacy_classes(cube: &CayleyCube) -> Result<ConjugacyClasses, Error> {
    let skew = props::ternary_group_check(cube)?;
    let n = cube.order();
    let orbit: Vec<BTreeSet<usize>> = (0..n)
        .map(|a| (0..n).map(|x| cube.get(x, a, skew.get(x))).collect())
        .collect();
    for a in 0..n {
        if !orbit[a].contains(&a) {
            return Err(Error::InternalVerificationFailure(
                "conjugacy orbit must contain its base element".into(),
            ));
        }
        for &b in &orbit[a] {
            if orbit[b] != orbit[a] {
                return Err(Error::InternalVerificationFailure(
                    "one-step conjugation failed to be an equivalence".into(),
                ));
            }
        }
    }
    let mut element_class_id = vec![usize::MAX; n];
    let mut on_elements: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        if element_class_id[a] != usize::MAX {
            continue;
        }
        let id = on_elements.len();
        let members: Vec<usize> = orbit[a].iter().copied().collect();
        for &m in &members {
            element_class_id[m] = id;
        }
        on_elements.push(members);
    }
    let on_pairs = partition_from_keys(
        n,
        PairRelation::Conjugate,
        (0..n * n).map(|idx| {
            let (a, b) = pair_split(n, idx);
            (element_class_id[a], element_class_id[b])
        }),
    );
    if props::is_semicommutative(cube) {
        // Elementwise congruence for the ternary product.
        let mut seen: HashMap<(usize, usize, usize), usize> = HashMap::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let key = (
                        element_class_id[a],
                        element_class_id[b],
                        element_class_id[c],
                    );
                    let value = element_class_id[cube.get(a, b, c)];
                    if *seen.entry(key).or_insert(value) != value {
                        return Err(Error::InternalVerificationFailure(
                            "conjugacy is not a congruence on a medial group".into(),
                        ));
                    }
                }
            }
        }
        // Pairwise congruence for the componentwise middle product.
        let pairs = pair_middle_group(cube)?;
        let m = n * n;
        let mut seen: HashMap<(usize, usize, usize), usize> = HashMap::new();
        for p in 0..m {
            for q in 0..m {
                for r in 0..m {
                    let key = (
                        on_pairs.class_id[p],
                        on_pairs.class_id[q],
                        on_pairs.class_id[r],
                    );
                    let value = on_pairs.class_id[pairs.get(p, q, r)];
                    if *seen.entry(key).or_insert(value) != value {
                        return Err(Error::InternalVerificationFailure(
                            "pair conjugacy is not a congruence on a medial group".into(),
                        ));
                    }
                }
            }
        }
    }
    Ok(ConjugacyClasses {
        on_elements,
        element_class_id,
        on_pairs,
    })
}

/// Proves that matrix traces are constant on every class of the partition,
/// within an entrywise tolerance of `1e-9`.
pub fn trace_invariance(
    rep: &Representation,
    partition: &PairPartition,
) -> Result<(), Error> {
    if rep.order() != partition.order {
        return Err(Error::SizeMismatch {
            order: partition.order,
            got: rep.order(),
            need: partition.order,
        });
    }
    for class in &partition.classes {
        let first = rep.mats()[class[0]].trace();
        for &member in &class[1..] {
            let t = rep.mats()[member].trace();
            if (t - first).norm() > TOL_ENTRY {
                let (a, b) = pair_split(partition.order, class[0]);
                let (c, d) = pair_split(partition.order, member);
                return Err(Error::RepresentationViolation {
                    law: "trace constancy on classes",
                    tuple: vec![a, b, c, d],
                });
            }
        }
    }
    Ok(())
}
