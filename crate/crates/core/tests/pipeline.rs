use dualfb_core::algebra::Rational;
use dualfb_core::bezout::find_cofilter;
use dualfb_core::cascade::cascade_run;
use dualfb_core::committee::committee_dual;
use dualfb_core::completion::{complete_fb, complete_q2, verify_wavelet_fb, FilterBank};
use dualfb_core::filterkit::{accuracy, burt_adelson, burt_adelson_cofilter, is_biorthogonal};
use dualfb_core::pyramid::Signal;
use proptest::prelude::*;

fn ba(n: i64, d: i64) -> dualfb_core::filterkit::Filter {
    burt_adelson(Rational::new(n, d))
}

#[test]
fn design_round_trip_through_json() {
    let h = ba(3, 5);
    let f = find_cofilter(&h).unwrap();
    let dual = committee_dual(&h, &f, &h).unwrap();
    assert!(dual.diagnostics.biorthogonal);
    assert_eq!(dual.d.tap_count(), 11);

    let bank = complete_fb(&h, &f, &h).unwrap();
    let restored = FilterBank::from_json(&bank.to_json()).unwrap();
    assert!(verify_wavelet_fb(&restored).passed());

    // the two completion routes agree on the dual pair
    let q2 = complete_q2(&h, &dual.d).unwrap();
    assert!(verify_wavelet_fb(&q2).passed());
}

#[test]
fn euclid_and_closed_form_cofilters_are_both_valid() {
    for (n, d) in [(3, 10), (1, 2), (3, 5), (3, 4), (9, 10)] {
        let h = ba(n, d);
        let a = find_cofilter(&h).unwrap();
        let b = burt_adelson_cofilter(Rational::new(n, d)).unwrap();
        assert!(is_biorthogonal(&a, &h).unwrap(), "euclid at {n}/{d}");
        assert!(is_biorthogonal(&b, &h).unwrap(), "closed form at {n}/{d}");
    }
}

#[test]
fn dual_renders_as_smooth_scaling_function() {
    let h = ba(3, 5);
    let d = committee_dual(&h, &find_cofilter(&h).unwrap(), &h).unwrap().d;
    let r = cascade_run(&d, 8).unwrap();
    assert!(r.partition_of_unity_error() < 1e-9);
    assert!((r.mass() - 1.0).abs() < 1e-9);
    assert!(r.deltas.windows(2).skip(3).all(|w| w[1] < w[0]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn banks_reconstruct_random_signals(
        n in (3i64..=36).prop_filter("singular", |n| *n != 10),
        x in prop::collection::vec(-20i64..=20, 1..12),
        start in -6i64..6,
    ) {
        let h = ba(n, 40);
        let f = find_cofilter(&h).unwrap();
        let bank = complete_fb(&h, &f, &h).unwrap();
        let signal = Signal::from_samples(start, x.into_iter().map(Rational::from)).lift();
        let channels = bank.analyze(&signal).unwrap();
        prop_assert_eq!(bank.synthesize(&channels).unwrap(), signal);
        prop_assert!(accuracy(&committee_dual(&h, &f, &h).unwrap().d).unwrap() >= 2);
    }
}
