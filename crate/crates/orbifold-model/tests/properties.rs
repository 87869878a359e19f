use orbifold_model::{
    classify_geometry, euler_char, euler_char_cw, orientation_double, parse_signature, Geometry, OrbifoldSignature,
    Rational,
};
use proptest::prelude::*;

fn orders(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(2u32..9, 0..=max_len)
}

prop_compose! {
    fn any_signature()(
        orientable in any::<bool>(),
        genus in 0u32..4,
        cones in orders(4),
        c in 0u32..3,
        m in 0u32..3,
        mixed in 0u32..3,
        extra_b in 0u32..3,
        corners in orders(4),
    ) -> OrbifoldSignature {
        let b = if mixed > 0 { mixed + extra_b } else { 0 };
        let corners = if m + mixed > 0 { corners } else { Vec::new() };
        OrbifoldSignature {
            underlying_orientable: orientable,
            underlying_genus: if orientable { genus } else { genus + 1 },
            underlying_boundary_circles: c + m + mixed,
            cones,
            corners,
            boundary_circles: c,
            mirror_intervals: b,
            full_mirror_circles: m,
        }
    }
}

prop_compose! {
    /// Drops orbifold boundary; mirror circles stay.
    fn closed_signature()(o in any_signature()) -> OrbifoldSignature {
        OrbifoldSignature {
            underlying_boundary_circles: o.full_mirror_circles,
            boundary_circles: 0,
            mirror_intervals: 0,
            corners: if o.full_mirror_circles > 0 { o.corners } else { Vec::new() },
            ..o
        }
    }
}

prop_compose! {
    /// Orientable |O| with every boundary circle a full mirror.
    fn mirror_bounded()(genus in 0u32..3, circles in 1u32..4, cones in orders(3), corners in orders(5)) -> OrbifoldSignature {
        OrbifoldSignature {
            underlying_orientable: true,
            underlying_genus: genus,
            underlying_boundary_circles: circles,
            cones,
            corners,
            full_mirror_circles: circles,
            ..Default::default()
        }
    }
}

proptest! {
    #[test]
    fn generated_signatures_are_valid(o in any_signature()) {
        prop_assert!(o.validate().is_ok());
    }

    #[test]
    fn render_then_parse_is_identity(o in any_signature()) {
        let text = o.to_string();
        prop_assert_eq!(parse_signature(&text).unwrap(), o, "rendered as {}", text);
    }

    #[test]
    fn closed_form_matches_cell_count(o in any_signature()) {
        prop_assert_eq!(euler_char(&o), euler_char_cw(&o).unwrap());
    }

    #[test]
    fn double_has_twice_the_euler_characteristic(o in mirror_bounded()) {
        let d = orientation_double(&o).unwrap();
        prop_assert!(d.orbifold_orientable());
        prop_assert_eq!(euler_char(&d), euler_char(&o) * Rational::from_integer(2));
    }

    #[test]
    fn nonorientable_double(k in 1u32..5, cones in orders(4)) {
        let o = OrbifoldSignature::nonorientable(k, &cones);
        let d = orientation_double(&o).unwrap();
        prop_assert_eq!(euler_char(&d), euler_char(&o) * Rational::from_integer(2));
    }

    #[test]
    fn closed_classification_follows_sign(o in closed_signature()) {
        let g = classify_geometry(&o).unwrap();
        let chi = euler_char(&o);
        match g {
            Geometry::Hyperbolic => prop_assert!(chi < Rational::from_integer(0)),
            Geometry::Euclidean => prop_assert_eq!(chi, Rational::from_integer(0)),
            Geometry::Spherical | Geometry::Bad => prop_assert!(chi > Rational::from_integer(0)),
        }
    }
}

/// The seventeen closed Euclidean 2-orbifolds (wallpaper quotients).
const WALLPAPER: [&str; 17] = [
    "T2",
    "S2(2,2,2,2)",
    "S2(3,3,3)",
    "S2(2,4,4)",
    "S2(2,3,6)",
    "Q(2,2,2,2)",
    "T(3,3,3)",
    "T(2,4,4)",
    "T(2,3,6)",
    "Sg(g=0,h=2,m=2)",
    "Ng(g=1,h=1,m=1)",
    "D(2;2,2)",
    "D(3;3)",
    "D(4;2)",
    "D(2,2;)",
    "Ng(g=2)",
    "Ng(g=1)(2,2)",
];

#[test]
fn wallpaper_quotients_are_euclidean() {
    for s in WALLPAPER {
        let o = parse_signature(s).unwrap();
        assert_eq!(classify_geometry(&o), Ok(Geometry::Euclidean), "{s}");
        assert_eq!(euler_char_cw(&o).unwrap(), Rational::from_integer(0), "{s}");
    }
}

#[test]
fn euclidean_orbifolds_found_by_search_are_exactly_the_wallpaper_list() {
    // Exhaust small closed signatures and collect those with χ = 0.
    let mut found = Vec::new();
    let small = |n: usize| -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|v: Vec<u32>| {
                    let lo = v.last().copied().unwrap_or(2);
                    (lo..=7).map(move |k| {
                        let mut w = v.clone();
                        w.push(k);
                        w
                    })
                })
                .chain(std::iter::once(vec![]))
                .collect();
        }
        out.sort();
        out.dedup();
        out
    };
    let lists = small(4);
    for orientable in [true, false] {
        for genus in 0..3u32 {
            if !orientable && genus == 0 {
                continue;
            }
            for mirrors in 0..3u32 {
                for cones in &lists {
                    for corners in &lists {
                        if mirrors == 0 && !corners.is_empty() {
                            continue;
                        }
                        if mirrors > 1 && !corners.is_empty() {
                            continue;
                        }
                        let o = OrbifoldSignature {
                            underlying_orientable: orientable,
                            underlying_genus: genus,
                            underlying_boundary_circles: mirrors,
                            cones: cones.clone(),
                            corners: corners.clone(),
                            full_mirror_circles: mirrors,
                            ..Default::default()
                        };
                        if euler_char(&o) == Rational::from_integer(0) {
                            assert_eq!(classify_geometry(&o), Ok(Geometry::Euclidean), "{o}");
                            found.push(o.to_string());
                        }
                    }
                }
            }
        }
    }
    found.sort();
    let mut want: Vec<String> = WALLPAPER.iter().map(|s| parse_signature(s).unwrap().to_string()).collect();
    want.sort();
    assert_eq!(found, want);
}
