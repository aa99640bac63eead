//! Algebraic invariants as property tests.

use proptest::prelude::*;
use quiver_moduli::euler::{euler_form, extension_additivity_check, riemann_roch_chi};
use quiver_moduli::rational::ratio;
use quiver_moduli::stability::{enumerate_walls, wall_from_subtype};
use quiver_moduli::types::{alpha_degree, alpha_slope, enumerate_subtypes, odometer_key};
use quiver_moduli::{DegreeWindow, GenusContext, Quiver, Rational, StabilityParameter, TypeVector};

const MAX_VERTICES: usize = 3;

fn type_of_len(n: usize) -> impl Strategy<Value = TypeVector> {
    prop::collection::vec((0u32..4, -6i64..=6), n).prop_map(|pairs| {
        let pairs: Vec<(u32, i64)> = pairs
            .into_iter()
            .map(|(r, d)| (r, if r == 0 { 0 } else { d }))
            .collect();
        TypeVector::from_pairs(&pairs).unwrap()
    })
}

fn nonzero_type_of_len(n: usize) -> impl Strategy<Value = TypeVector> {
    type_of_len(n).prop_filter("positive total rank", |t| t.total_rank() > 0)
}

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=9).prop_map(|(p, q)| ratio(p, q))
}

fn alpha_of_len(n: usize) -> impl Strategy<Value = StabilityParameter> {
    prop::collection::vec(rational(), n).prop_map(StabilityParameter::new)
}

/// A quiver on `n` vertices from an adjacency bit mask (loops included).
fn quiver_from_mask(n: usize, mask: u16) -> Quiver {
    let pairs: Vec<(usize, usize)> = (0..n * n)
        .filter(|k| mask & (1 << k) != 0)
        .map(|k| (k / n, k % n))
        .collect();
    Quiver::from_indices(n, &pairs).unwrap()
}

fn quiver_and_len() -> impl Strategy<Value = (Quiver, usize)> {
    (1..=MAX_VERTICES, any::<u16>()).prop_map(|(n, m)| (quiver_from_mask(n, m), n))
}

proptest! {
    #[test]
    fn alpha_degree_is_additive(
        (t1, t2, alpha) in (1..=MAX_VERTICES).prop_flat_map(|n| (type_of_len(n), type_of_len(n), alpha_of_len(n)))
    ) {
        let sum = &t1 + &t2;
        prop_assert_eq!(
            alpha_degree(&sum, &alpha).unwrap(),
            alpha_degree(&t1, &alpha).unwrap() + alpha_degree(&t2, &alpha).unwrap()
        );
    }

    #[test]
    fn slope_shift_law(
        (t, alpha) in (1..=MAX_VERTICES).prop_flat_map(|n| (nonzero_type_of_len(n), alpha_of_len(n))),
        c in rational(),
    ) {
        prop_assert_eq!(
            alpha_slope(&t, &alpha.shifted(&c)).unwrap(),
            alpha_slope(&t, &alpha).unwrap() + c
        );
    }

    #[test]
    fn riemann_roch_is_bilinear(
        r1 in 0u32..5, d1 in -9i64..9, r2 in 0u32..5, d2 in -9i64..9,
        r3 in 0u32..5, d3 in -9i64..9, g in 0u32..5,
    ) {
        let g = GenusContext::new(g);
        prop_assert_eq!(
            riemann_roch_chi(r1 + r2, d1 + d2, r3, d3, g),
            riemann_roch_chi(r1, d1, r3, d3, g) + riemann_roch_chi(r2, d2, r3, d3, g)
        );
        prop_assert_eq!(
            riemann_roch_chi(r3, d3, r1 + r2, d1 + d2, g),
            riemann_roch_chi(r3, d3, r1, d1, g) + riemann_roch_chi(r3, d3, r2, d2, g)
        );
    }

    #[test]
    fn euler_form_is_bilinear(
        ((q, _), t1, t2, s) in quiver_and_len().prop_flat_map(|(q, n)| {
            (Just((q, n)), type_of_len(n), type_of_len(n), type_of_len(n))
        }),
        g in 0u32..5,
    ) {
        let g = GenusContext::new(g);
        let chi = |a: &TypeVector, b: &TypeVector| euler_form(&q, a, b, g).unwrap().chi;
        let sum = &t1 + &t2;
        prop_assert_eq!(chi(&sum, &s), chi(&t1, &s) + chi(&t2, &s));
        prop_assert_eq!(chi(&s, &sum), chi(&s, &t1) + chi(&s, &t2));
    }

    #[test]
    fn extension_additivity(
        ((q, _), t1, t2) in quiver_and_len().prop_flat_map(|(q, n)| {
            (Just((q, n)), type_of_len(n), type_of_len(n))
        }),
        g in 0u32..5,
    ) {
        prop_assert!(extension_additivity_check(&q, &t1, &t2, GenusContext::new(g)).unwrap());
    }

    #[test]
    fn subtypes_are_sorted_distinct_and_proper(
        t in (1..=MAX_VERTICES).prop_flat_map(nonzero_type_of_len),
        lo in -3i64..=1, width in 0i64..3,
    ) {
        let w = DegreeWindow::uniform(t.len(), lo, lo + width);
        let subs = enumerate_subtypes(&t, &w).unwrap();
        for pair in subs.windows(2) {
            prop_assert!(odometer_key(&pair[0]) < odometer_key(&pair[1]));
        }
        for s in &subs {
            prop_assert!(!s.is_zero());
            prop_assert!(s != &t);
            for (e, f) in s.entries().iter().zip(t.entries()) {
                prop_assert!(e.rank <= f.rank);
            }
        }
    }

    #[test]
    fn larger_window_gives_more_subtypes(
        t in (1..=MAX_VERTICES).prop_flat_map(nonzero_type_of_len),
        lo in -3i64..=1, width in 0i64..3, grow_lo in 0i64..2, grow_hi in 0i64..2,
    ) {
        let n = t.len();
        let small = DegreeWindow::uniform(n, lo, lo + width);
        let large = DegreeWindow::uniform(n, lo - grow_lo, lo + width + grow_hi);
        prop_assert!(large.contains(&small));
        let big = enumerate_subtypes(&t, &large).unwrap();
        for s in enumerate_subtypes(&t, &small).unwrap() {
            prop_assert!(big.contains(&s));
        }
    }

    #[test]
    fn walls_are_slope_ties(
        (t, sub, alpha) in (1..=MAX_VERTICES).prop_flat_map(|n| {
            (nonzero_type_of_len(n), nonzero_type_of_len(n), alpha_of_len(n))
        })
    ) {
        let w = wall_from_subtype(&t, &sub).unwrap();
        let tie = alpha_slope(&sub, &alpha).unwrap() == alpha_slope(&t, &alpha).unwrap();
        prop_assert_eq!(w.contains(&alpha), tie);
        // Canonical form: content one, leading coefficient positive.
        let g = w.normal.iter().chain([&w.offset]).fold(0i64, |g, &x| num_integer::gcd(g, x));
        prop_assert!(g == 1 || (g == 0 && w.is_degenerate()));
        if let Some(&c) = w.normal.iter().find(|&&c| c != 0) {
            prop_assert!(c > 0);
        }
    }

    #[test]
    fn enumerated_walls_are_distinct_hyperplanes(
        t in (1..=MAX_VERTICES).prop_flat_map(nonzero_type_of_len),
        lo in -2i64..=0, width in 0i64..3,
    ) {
        let set = enumerate_walls(&t, &DegreeWindow::uniform(t.len(), lo, lo + width)).unwrap();
        for pair in set.walls.windows(2) {
            prop_assert!((&pair[0].normal, pair[0].offset) < (&pair[1].normal, pair[1].offset));
        }
        prop_assert!(set.walls.iter().all(|w| !w.is_degenerate()));
        prop_assert!(set.degenerate.iter().all(|w| w.is_degenerate()));
    }
}
