//! Theorem-suite property tests: structural laws checked over the exhaustive
//! catalog of ternary groups of order ≤ 4, a corpus of cubes derived from
//! small binary groups, and randomized tables.

use std::sync::OnceLock;

use proptest::prelude::*;

use tgc::constructions::{b_derive, derive, gluskin_hosszu, retract};
use tgc::enumeration::{canonical_form, census, is_isomorphic, small_groups, OrderCensus};
use tgc::examples::builtin_example;
use tgc::format::{parse_cube, serialize_cube};
use tgc::props;
use tgc::reps::classes::{conjugacy_classes, pair_classes, trace_invariance, PairRelation};
use tgc::reps::decompose::{decompose, DEFAULT_SEED};
use tgc::reps::{
    commutation_check, dual_right_of_left, left_regular, middle_regular, right_regular,
    unitarity_check, verify_representation,
};
use tgc::{CayleyCube, Matrix, RepKind, Representation};

/// The census of all ternary groups of order ≤ 4, computed once per binary.
fn catalog() -> &'static [OrderCensus] {
    static CATALOG: OnceLock<Vec<OrderCensus>> = OnceLock::new();
    CATALOG.get_or_init(|| census(4).expect("small census builds"))
}

fn catalog_cubes() -> impl Iterator<Item = &'static CayleyCube> {
    catalog()
        .iter()
        .flat_map(|order| order.entries.iter().map(|e| &e.cube))
}

/// Every cube over binary groups of order ≤ 6 with every shift element.
fn derived_corpus() -> Vec<CayleyCube> {
    let mut out = Vec::new();
    for order in 1..=6 {
        for (_, group) in small_groups(order) {
            for b in 0..order {
                out.push(b_derive(&group, b));
            }
        }
    }
    out
}

#[test]
fn cancellativity_sides_are_equivalent_on_associative_cubes() {
    // Exhaustively over all 256 order-2 cubes, then over the derived corpus:
    // an associative cube is middle cancellative exactly when it is both left
    // and right cancellative.
    let mut checked = 0usize;
    for bits in 0..(1u32 << 8) {
        let table: Vec<usize> = (0..8).map(|i| ((bits >> i) & 1) as usize).collect();
        let cube = CayleyCube::from_raw(2, table).unwrap();
        if !props::is_associative(&cube) {
            continue;
        }
        let (left, middle, right) = props::cancellativity(&cube);
        assert_eq!(middle, left && right, "bits {bits:#010b}");
        checked += 1;
    }
    assert!(checked > 0, "some order-2 cubes are associative");
    for cube in derived_corpus() {
        // Twisting by a non-central element can break associativity; the
        // equivalence is only claimed for associative cubes.
        if !props::is_associative(&cube) {
            continue;
        }
        let (left, middle, right) = props::cancellativity(&cube);
        assert_eq!(middle, left && right);
        // Derived from groups, the associative ones cancel on all sides.
        assert!(left && middle && right);
    }
}

#[test]
fn semicommutativity_is_equivalent_to_a_middle_commuting_point() {
    // [xyz] = [zyx] for all triples ⟺ some a has [xay] = [yax] for all x, y.
    let mut semicommutative_seen = 0usize;
    for cube in catalog_cubes() {
        let n = cube.order();
        let exists_point = (0..n).any(|a| {
            (0..n).all(|x| (0..n).all(|y| cube.get(x, a, y) == cube.get(y, a, x)))
        });
        assert_eq!(props::is_semicommutative(cube), exists_point);
        if exists_point {
            semicommutative_seen += 1;
        }
    }
    assert!(semicommutative_seen > 0, "the equivalence was exercised");
}

#[test]
fn reversed_translation_identity_forces_commutativity() {
    // If [x y x̄] = y for all x, y then the cube is fully commutative.
    let mut premise_seen = 0usize;
    for cube in catalog_cubes() {
        let skew = props::skew_map(cube).unwrap();
        let n = cube.order();
        let premise =
            (0..n).all(|x| (0..n).all(|y| cube.get(x, y, skew.get(x)) == y));
        if premise {
            premise_seen += 1;
            assert!(props::is_commutative(cube));
        }
    }
    assert!(premise_seen >= 2, "the premise holds somewhere in the catalog");
}

#[test]
fn idempotent_groups_have_involutive_middle_matrices() {
    // In an idempotent ternary group every skew is trivial, so
    // [x [x z y] y] = [x x [z y y]] = [x x z] = z: middle translations square
    // to the identity.
    let mut idempotent_seen = 0usize;
    let extra = ["z3", "bool2", "s3odd"].map(|n| builtin_example(n).unwrap());
    let idempotent_cubes = catalog_cubes()
        .filter(|c| props::idempotents(c).len() == c.order())
        .cloned()
        .chain(extra);
    for cube in idempotent_cubes {
        idempotent_seen += 1;
        let middle = middle_regular(&cube).unwrap();
        let id = Matrix::identity(cube.order());
        for m in middle.mats() {
            assert_eq!(m.mul(m).max_abs_diff(&id), 0.0);
        }
    }
    assert!(idempotent_seen >= 3);
}

#[test]
fn medial_groups_have_commuting_left_families_and_involutive_twist() {
    let mut medial_seen = 0usize;
    for cube in catalog_cubes() {
        if !props::is_semicommutative(cube) {
            continue;
        }
        medial_seen += 1;
        let left = left_regular(cube).unwrap();
        for a in left.mats() {
            for b in left.mats() {
                assert!(a.commutes_with(b, 0.0));
            }
        }
        // The twisting automorphism of the retract decomposition is an
        // involution at every base point.
        for a in 0..cube.order() {
            let dec = gluskin_hosszu(cube, a).unwrap();
            for x in 0..cube.order() {
                assert_eq!(dec.phi[dec.phi[x]], x);
            }
        }
    }
    assert!(medial_seen > 0);
}

#[test]
fn commutative_groups_have_symmetric_left_families_that_verify_as_middle() {
    let mut commutative_seen = 0usize;
    for cube in catalog_cubes() {
        if !props::is_commutative(cube) {
            continue;
        }
        commutative_seen += 1;
        let left = left_regular(cube).unwrap();
        let n = cube.order();
        for x in 0..n {
            for y in 0..n {
                assert_eq!(left.mat(x, y).max_abs_diff(left.mat(y, x)), 0.0);
            }
        }
        let as_middle =
            Representation::new(RepKind::Middle, n, left.mats().to_vec()).unwrap();
        verify_representation(&as_middle, cube).unwrap();
    }
    assert!(commutative_seen > 0);
}

#[test]
fn derived_cubes_round_trip_through_their_retract() {
    let mut derived_seen = 0usize;
    for cube in catalog_cubes() {
        if let Some(e) = props::derived_from_binary(cube) {
            derived_seen += 1;
            assert_eq!(&derive(&retract(cube, e)), cube);
        }
    }
    assert!(derived_seen > 0);
}

#[test]
fn duality_and_exchange_laws_hold_across_the_catalog() {
    for cube in catalog_cubes() {
        let left = left_regular(cube).unwrap();
        // Internally verifies the right-family axioms and that the dual is
        // the pointwise inverse of the left family.
        dual_right_of_left(&left, cube).unwrap();
        commutation_check(cube).unwrap();
    }
}

#[test]
fn regular_families_are_unitary_with_class_constant_traces() {
    for cube in catalog_cubes() {
        for rep in [
            left_regular(cube).unwrap(),
            right_regular(cube).unwrap(),
            middle_regular(cube).unwrap(),
        ] {
            assert!(unitarity_check(&rep));
        }
        let middle = middle_regular(cube).unwrap();
        let by_translation = pair_classes(cube, PairRelation::Middle).unwrap();
        trace_invariance(&middle, &by_translation).unwrap();
        let conj = conjugacy_classes(cube).unwrap();
        trace_invariance(&middle, &conj.on_pairs).unwrap();
    }
}

#[test]
fn decomposition_reconstructs_within_tight_tolerance() {
    let jobs = [
        ("z3", RepKind::Left),
        ("z3", RepKind::Middle),
        ("z4p1", RepKind::Left),
        ("bool2", RepKind::Left),
        ("s3derived", RepKind::Left),
        ("quat", RepKind::Middle),
    ];
    for (name, kind) in jobs {
        let cube = builtin_example(name).unwrap();
        let rep = match kind {
            RepKind::Left => left_regular(&cube).unwrap(),
            RepKind::Right => right_regular(&cube).unwrap(),
            RepKind::Middle => middle_regular(&cube).unwrap(),
        };
        let dec = decompose(&rep, DEFAULT_SEED).unwrap();
        assert_eq!(dec.block_dims.iter().sum::<usize>(), rep.dim());
        let u = &dec.basis_change;
        assert!(u.is_unitary(1e-9));
        for (m, blocks) in rep.mats().iter().zip(&dec.blocks) {
            // Reassemble the block diagonal and conjugate back.
            let mut c = Matrix::zeros(rep.dim());
            let mut offset = 0;
            for b in blocks {
                for r in 0..b.dim() {
                    for s in 0..b.dim() {
                        c.set(offset + r, offset + s, b.get(r, s));
                    }
                }
                offset += b.dim();
            }
            let back = u.mul(&c).mul(&u.dagger());
            assert!(back.max_abs_diff(m) <= 1e-9, "{name} {kind:?}");
        }
    }
}

#[test]
fn isomorphism_is_reflexive_and_symmetric_with_canonical_fingerprints() {
    let cubes: Vec<&CayleyCube> = catalog_cubes().collect();
    for cube in &cubes {
        assert!(is_isomorphic(cube, cube).unwrap().is_some());
        // Relabeling produces an isomorphic cube with the same canonical form.
        let n = cube.order();
        let rotate: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let relabeled = cube.relabel(&rotate);
        assert_eq!(
            canonical_form(cube).unwrap(),
            canonical_form(&relabeled).unwrap()
        );
        assert!(is_isomorphic(cube, &relabeled).unwrap().is_some());
    }
    for a in &cubes {
        for b in &cubes {
            let ab = is_isomorphic(a, b).unwrap().is_some();
            let ba = is_isomorphic(b, a).unwrap().is_some();
            assert_eq!(ab, ba);
            // Census entries are pairwise non-isomorphic representatives.
            if !std::ptr::eq(*a, *b) {
                assert!(!ab);
            }
        }
    }
}

/// Strategy: a random cube of the given order with arbitrary in-range entries.
fn arb_cube(max_order: usize) -> impl Strategy<Value = CayleyCube> {
    (1..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n * n * n)
            .prop_map(move |table| CayleyCube::from_raw(n, table).unwrap())
    })
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn report_flags_match_their_witnesses(cube in arb_cube(3)) {
        let report = tgc::PropertyReport::build(&cube, true);
        prop_assert_eq!(report.associative, props::is_associative(&cube));
        prop_assert_eq!(report.semicommutative, props::is_semicommutative(&cube));
        prop_assert_eq!(report.commutative, props::is_commutative(&cube));
        prop_assert_eq!(report.is_ternary_group, props::is_ternary_group(&cube));
        prop_assert_eq!(report.medial, Some(props::is_medial(&cube)));
        prop_assert_eq!(
            report.idempotent,
            props::idempotents(&cube).len() == cube.order()
        );
        // A false flag always carries a witness that re-verifies.
        if let Some([x, y, z, u, v]) = report.witnesses.associativity {
            prop_assert!(!report.associative);
            let a = cube.get(cube.get(x, y, z), u, v);
            let b = cube.get(x, cube.get(y, z, u), v);
            let c = cube.get(x, y, cube.get(z, u, v));
            prop_assert!(a != b || b != c);
        } else {
            prop_assert!(report.associative);
        }
        if let Some([x, y, z]) = report.witnesses.semicommutativity {
            prop_assert!(cube.get(x, y, z) != cube.get(z, y, x));
        }
        if let Some(x) = report.witnesses.idempotence {
            prop_assert!(cube.get(x, x, x) != x);
        }
        // The slow two-sided solvability oracle agrees with the skew-based
        // group characterization whenever associativity holds.
        if report.associative {
            prop_assert_eq!(
                report.is_ternary_group,
                props::eq_solvability_check(&cube)
            );
        }
    }

    #[test]
    fn text_format_round_trips_any_cube(cube in arb_cube(4)) {
        let text = serialize_cube(&cube);
        let parsed = parse_cube(&text).unwrap();
        prop_assert_eq!(parsed.table(), cube.table());
        prop_assert_eq!(serialize_cube(&parsed), text);
    }

    #[test]
    fn canonical_form_is_a_relabeling_invariant(
        (cube, map) in arb_cube(3).prop_flat_map(|cube| {
            let n = cube.order();
            (Just(cube), arb_permutation(n))
        })
    ) {
        let relabeled = cube.relabel(&map);
        prop_assert_eq!(
            canonical_form(&cube).unwrap(),
            canonical_form(&relabeled).unwrap()
        );
        prop_assert!(is_isomorphic(&cube, &relabeled).unwrap().is_some());
    }
}
