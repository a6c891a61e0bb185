//! Property suites: graded-space algebra, Robbin–Salamon index axioms on
//! randomized rational phase data, Betti relations over random conical
//! actions, and the cross-module enumeration agreement.

use num_rational::Ratio;
use proptest::prelude::*;

use shs_core::floer::{AffinePhase, PhasePath};
use shs_core::graded::GradedVectorSpace;
use shs_core::half::HalfInt;
use shs_core::toric::{AnFan, Cocharacter};
use shs_core::ConePresentation;

fn graded_space() -> impl Strategy<Value = GradedVectorSpace> {
    prop::collection::vec((-10i64..=10, 1u64..=9), 0..6).prop_map(GradedVectorSpace::from_pairs)
}

fn angle() -> impl Strategy<Value = Ratio<i64>> {
    (-24i64..=24, 1i64..=8).prop_map(|(num, den)| Ratio::new(num, den))
}

fn phase_path(max_dim: usize) -> impl Strategy<Value = PhasePath> {
    prop::collection::vec((angle(), angle(), angle()), 1..=max_dim).prop_map(|coords| {
        let phases =
            coords.iter().map(|&(start, slope, _)| AffinePhase::new(start, slope)).collect();
        let reference = coords.iter().map(|&(_, _, r)| r).collect();
        PhasePath::new(phases, reference).unwrap()
    })
}

proptest! {
    #[test]
    fn shift_composes_additively(v in graded_space(), a in -20i64..=20, b in -20i64..=20) {
        prop_assert_eq!(v.shift(a).shift(b), v.shift(a + b));
    }

    #[test]
    fn shift_preserves_total_rank(v in graded_space(), d in -20i64..=20) {
        prop_assert_eq!(v.shift(d).total_rank(), v.total_rank());
    }

    #[test]
    fn direct_sum_commutes_and_associates(
        a in graded_space(),
        b in graded_space(),
        c in graded_space(),
    ) {
        let ab = GradedVectorSpace::direct_sum([&a, &b]);
        let ba = GradedVectorSpace::direct_sum([&b, &a]);
        prop_assert_eq!(&ab, &ba);
        let left = GradedVectorSpace::direct_sum([&ab, &c]);
        let bc = GradedVectorSpace::direct_sum([&b, &c]);
        let right = GradedVectorSpace::direct_sum([&a, &bc]);
        prop_assert_eq!(left, right);
        prop_assert_eq!(ab.total_rank(), a.total_rank() + b.total_rank());
    }

    #[test]
    fn palindromy_is_shift_covariant(
        v in graded_space(),
        center2 in -12i64..=12,
        d in -10i64..=10,
    ) {
        let center = HalfInt::from_doubled(center2);
        let shifted_center = center + HalfInt::from_int(d);
        prop_assert_eq!(
            v.shift(d).is_palindromic(shifted_center),
            v.is_palindromic(center)
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1200))]

    // Catenation axiom: splitting the interval at any rational time adds
    // the two restricted indices.
    #[test]
    fn rs_index_catenation(
        path in phase_path(4),
        split in (1i64..=7, 2i64..=8),
    ) {
        let (num, den) = split;
        prop_assume!(num < den);
        let s = Ratio::new(num, den);
        let first = path.restrict(Ratio::from_integer(0), s);
        let second = path.restrict(s, Ratio::from_integer(1));
        prop_assert_eq!(first.rs_index() + second.rs_index(), path.rs_index());
    }

    // Product axiom: the index of a direct-sum path is the sum over any
    // split of its coordinates.
    #[test]
    fn rs_index_product(path in phase_path(6), mask in 0u32..64) {
        let n = path.dimension();
        let pick = |keep: bool| {
            let phases: Vec<AffinePhase> = path
                .phases()
                .iter()
                .enumerate()
                .filter(|(j, _)| (mask >> j & 1 == 1) == keep)
                .map(|(_, &p)| p)
                .collect();
            let reference: Vec<Ratio<i64>> = path
                .reference()
                .iter()
                .enumerate()
                .filter(|(j, _)| (mask >> *j & 1 == 1) == keep)
                .map(|(_, &r)| r)
                .collect();
            PhasePath::new(phases, reference).unwrap()
        };
        let selected = pick(true);
        let rest = pick(false);
        prop_assert_eq!(selected.dimension() + rest.dimension(), n);
        prop_assert_eq!(selected.rs_index() + rest.rs_index(), path.rs_index());
    }

    #[test]
    fn rs_index_reversal(path in phase_path(4)) {
        prop_assume!(!path.has_endpoint_crossing());
        prop_assert_eq!(path.reversed().rs_index(), -path.rs_index());
    }
}

proptest! {
    #[test]
    fn betti_relation_holds_for_random_conical_actions(
        n in 1u32..=10,
        p in 1i64..=60,
        q in 1i64..=6,
    ) {
        let fan = AnFan::new(n).unwrap();
        let action = Cocharacter::new(p, q);
        prop_assume!(fan.is_conical(action));
        let model = fan.to_core_model(&[action]).unwrap();
        let check = model.verify_betti_relation(&action.id()).unwrap();
        prop_assert!(check.ok);
        prop_assert_eq!(check.rhs, GradedVectorSpace::from_pairs([(0, 1), (2, n as u64)]));
    }
}

#[test]
fn cone_enumeration_agrees_with_toric() {
    for n in 1..=16u32 {
        let fan = AnFan::new(n).unwrap();
        let toric: Vec<Vec<i64>> =
            fan.enumerate_weight1().into_iter().map(|a| vec![a.p, a.q]).collect();
        let cone = ConePresentation::an(n);
        let found = cone.enumerate_weight1(n as u64 + 1).unwrap();
        assert_eq!(found.characters, toric, "n={n}");
        assert!(found.bounded, "n={n}");
    }
}
