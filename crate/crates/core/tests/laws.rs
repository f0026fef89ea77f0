//! Structural laws checked exhaustively over every enumerated frame of the
//! default search shapes, plus the bundled fixtures.

use pmalg::fixtures;
use pmalg::model::{tuple_at, ProtomodularFrame};
use pmalg::protomod::{
    alpha_separation_violation, alpha_unit_violation, check, check_consociative,
    check_malcev_associative, check_one_associative, check_protomodular, check_right_cancellable,
    check_simplified_rc, check_strict, classify_n1, derive_malcev, right_unit,
    unit_translation_violation, N1Class, Property,
};
use pmalg::reconstruct::{group_at, right_division};
use pmalg::search::{enumerate_frames, SearchSpec};
use pmalg::translations::{
    distinct_translations, kernel_partition, translation_group, translation_of, RcFrame,
};

const SHAPES: [(usize, usize); 4] = [(1, 1), (1, 2), (1, 3), (2, 2)];

fn all_frames() -> Vec<ProtomodularFrame> {
    SHAPES
        .iter()
        .flat_map(|&(n, k)| enumerate_frames(&SearchSpec::new(n, k)).unwrap())
        .collect()
}

fn rc_frames() -> Vec<ProtomodularFrame> {
    let mut out: Vec<_> = SHAPES
        .iter()
        .flat_map(|&(n, k)| {
            enumerate_frames(&SearchSpec::new(n, k).require(Property::RightCancellable)).unwrap()
        })
        .collect();
    out.extend(fixtures::right_cancellable().into_iter().map(|(_, f)| f));
    out
}

fn tuples(f: &ProtomodularFrame) -> Vec<Vec<usize>> {
    (0..f.tuple_count())
        .map(|r| tuple_at(f.size(), f.n(), r))
        .collect()
}

#[test]
fn enumerated_rc_set_is_nonempty_at_every_shape() {
    for (n, k) in SHAPES {
        let frames =
            enumerate_frames(&SearchSpec::new(n, k).require(Property::RightCancellable)).unwrap();
        assert!(!frames.is_empty(), "({n}, {k})");
    }
}

#[test]
fn section_two_facts_on_every_frame() {
    for f in all_frames() {
        assert!(check_protomodular(&f).holds);
        assert_eq!(alpha_separation_violation(&f), None, "{f:?}");
        assert_eq!(alpha_unit_violation(&f), None, "{f:?}");
        assert_eq!(unit_translation_violation(&f), None, "{f:?}");
    }
}

#[test]
fn kernel_of_theta_b_is_independent_of_b() {
    for f in rc_frames() {
        let first = kernel_partition(&f, 0).unwrap();
        for b in 1..f.size() {
            assert_eq!(kernel_partition(&f, b).unwrap(), first);
        }
    }
}

#[test]
fn translations_agreeing_at_a_point_are_equal() {
    for f in rc_frames() {
        let ts = tuples(&f);
        for a in &ts {
            let ta = translation_of(&f, a).unwrap();
            for c in &ts {
                let tc = translation_of(&f, c).unwrap();
                if (0..f.size()).any(|x| ta.map[x] == tc.map[x]) {
                    assert_eq!(ta.map, tc.map);
                }
            }
        }
    }
}

#[test]
fn translations_are_bijections_with_translation_inverses() {
    for f in rc_frames() {
        let maps: Vec<Vec<usize>> = distinct_translations(&f)
            .into_iter()
            .map(|t| t.map)
            .collect();
        for t in distinct_translations(&f) {
            let inv = t.inverse_map().expect("bijective");
            assert!(maps.contains(&inv));
        }
    }
}

#[test]
fn translation_group_laws_and_principal_action() {
    for f in rc_frames() {
        let g = translation_group(&f).unwrap();
        let k = f.size();
        assert_eq!(g.order(), k);
        let els = g.elements();
        for x in 0..g.order() {
            for y in 0..g.order() {
                assert_eq!(els[g.table().mul(x, y)].map, els[x].compose_map(&els[y]));
            }
        }
        assert!(els[g.unit_index()].is_identity());
        for a in 0..k {
            for b in 0..k {
                assert_eq!(els.iter().filter(|t| t.map[a] == b).count(), 1);
            }
        }
    }
}

#[test]
fn tuple_formulas_are_correct_for_every_u() {
    for f in rc_frames() {
        let rc = RcFrame::new(&f).unwrap();
        let ts = tuples(&f);
        for a in &ts {
            let ta = translation_of(&f, a).unwrap();
            let inverse = ta.inverse_map().unwrap();
            let reference = rc.inverse_tuple(a, 0).unwrap();
            for u in 0..f.size() {
                let b = rc.inverse_tuple(a, u).unwrap();
                assert_eq!(b, reference);
                assert_eq!(translation_of(&f, &b).unwrap().map, inverse);
            }
            for b in &ts {
                let tb = translation_of(&f, b).unwrap();
                let composite = ta.compose_map(&tb);
                let reference = rc.compose_tuple(a, b, 0).unwrap();
                for u in 0..f.size() {
                    let c = rc.compose_tuple(a, b, u).unwrap();
                    assert_eq!(c, reference);
                    assert_eq!(translation_of(&f, &c).unwrap().map, composite);
                }
            }
        }
    }
}

#[test]
fn alpha_is_invariant_under_right_multiplication() {
    for f in rc_frames() {
        let k = f.size();
        for u in 0..k {
            let g = group_at(&f, u).unwrap();
            for a in 0..k {
                for b in 0..k {
                    for c in 0..k {
                        assert_eq!(f.alphas(g.mul(a, c), g.mul(b, c)), f.alphas(a, b));
                    }
                }
            }
        }
    }
}

#[test]
fn right_division_inverts_the_product() {
    for f in rc_frames() {
        let k = f.size();
        for u in 0..k {
            let g = group_at(&f, u).unwrap();
            let d = right_division(&f, u).unwrap();
            for a in 0..k {
                // the product and inverse formulas, evaluated directly
                assert_eq!(g.inverse(a), f.theta(&f.alphas(u, a), u));
                for b in 0..k {
                    assert_eq!(g.mul(a, b), f.theta(&f.alphas(a, u), b));
                    assert_eq!(g.mul(d.get(a, b), b), a);
                    assert_eq!(f.alphas(d.get(a, b), u), f.alphas(a, b));
                }
            }
        }
    }
}

#[test]
fn malcev_operation_is_associative_on_rc_frames() {
    for f in rc_frames() {
        let p = derive_malcev(&f).unwrap();
        let k = f.size();
        for x in 0..k {
            for t in 0..k {
                for s in 0..k {
                    for y in 0..k {
                        for z in 0..k {
                            assert_eq!(p.get(x, t, p.get(s, y, z)), p.get(p.get(x, t, s), y, z));
                        }
                    }
                }
            }
        }
        assert!(check_malcev_associative(&p).holds);
    }
}

#[test]
fn right_cancellable_implies_simplified_conditions() {
    for f in all_frames() {
        if check_right_cancellable(&f).holds {
            let (ii, iii) = check_simplified_rc(&f);
            assert!(ii.holds && iii.holds);
        }
    }
}

#[test]
fn simplified_ii_suffices_under_associativity() {
    let mut exercised = 0;
    for f in all_frames() {
        let assoc = check_one_associative(&f).holds || check_consociative(&f).holds;
        if assoc && check_simplified_rc(&f).0.holds {
            exercised += 1;
            assert!(check_right_cancellable(&f).holds, "{f:?}");
        }
    }
    assert!(exercised > 0);
}

#[test]
fn n1_rc_frames_are_strict() {
    for f in rc_frames().into_iter().filter(|f| f.n() == 1) {
        assert!(check_strict(&f).holds);
    }
    let none = enumerate_frames(
        &SearchSpec::new(1, 3)
            .require(Property::RightCancellable)
            .forbid(Property::Strict),
    )
    .unwrap();
    assert!(none.is_empty());
}

#[test]
fn rc_loops_are_groups() {
    for f in rc_frames().into_iter().filter(|f| f.n() == 1) {
        let class = classify_n1(&f).unwrap();
        if class.contains(&N1Class::Loop) {
            assert!(class.contains(&N1Class::GroupUnderTheta));
        }
    }
}

#[test]
fn rc_with_right_unit_iff_group() {
    for f in all_frames().into_iter().filter(|f| f.n() == 1) {
        let lhs = check_right_cancellable(&f).holds && right_unit(&f);
        let rhs = classify_n1(&f).unwrap().contains(&N1Class::GroupUnderTheta);
        assert_eq!(lhs, rhs, "{f:?}");
    }
}

#[test]
fn bijective_translations_do_not_imply_right_cancellable() {
    let f = fixtures::lip6();
    assert!(check_protomodular(&f).holds);
    assert!(check_strict(&f).holds);
    let maps: Vec<Vec<usize>> = distinct_translations(&f)
        .into_iter()
        .map(|t| t.map)
        .collect();
    for m in &maps {
        let mut inv = vec![0; m.len()];
        for (x, &y) in m.iter().enumerate() {
            inv[y] = x;
        }
        assert!(maps.contains(&inv));
    }
    let rc = check_right_cancellable(&f);
    assert!(!rc.holds && rc.witness.is_some());
    let class = classify_n1(&f).unwrap();
    assert!(class.contains(&N1Class::Loop));
    assert!(!class.contains(&N1Class::GroupUnderTheta));
}

#[test]
fn no_small_frame_separates_bijective_translations_from_rc() {
    for f in all_frames()
        .into_iter()
        .filter(|f| f.n() == 1 && f.size() <= 3)
    {
        let maps: Vec<Vec<usize>> = distinct_translations(&f)
            .into_iter()
            .map(|t| t.map)
            .collect();
        let closed = maps.iter().all(|m| {
            let mut inv = vec![usize::MAX; m.len()];
            for (x, &y) in m.iter().enumerate() {
                inv[y] = x;
            }
            maps.contains(&inv)
        });
        if closed {
            assert!(check(&f, Property::RightCancellable).holds);
        }
    }
}
