use lie_catalog::{sigma, Family, LieType};
use proptest::prelude::*;

fn all_groups(max_param: u32) -> Vec<LieType> {
    let mut out = Vec::new();
    for p in 1..=max_param {
        out.extend([LieType::psl(p), LieType::psp(p), LieType::po_odd(p), LieType::po_even(p)].into_iter().flatten());
    }
    out.extend(Family::EXCEPTIONAL.iter().map(|&f| LieType::exceptional(f).unwrap()));
    out
}

#[test]
fn dimension_matches_textbook_formulas() {
    for g in all_groups(200) {
        let p = g.param().unwrap_or(0) as u64;
        let textbook = match g.family() {
            Family::Psl => p * p - 1,
            Family::Psp | Family::PoOdd => 2 * p * p + p,
            Family::PoEven => 2 * p * p - p,
            Family::G2 => 14,
            Family::F4 => 52,
            Family::E6 => 78,
            Family::E7 => 133,
            Family::E8 => 248,
        };
        assert_eq!(g.dim(), textbook, "{g}");
        assert_eq!(g.rank() as usize, g.exponents().values().len());
    }
}

#[test]
fn exponents_sum_to_number_of_positive_roots() {
    // Σ d = number of positive roots = (dim − rank)/2
    for g in all_groups(60) {
        let s: u64 = g.exponents().iter().map(u64::from).sum();
        assert_eq!(2 * s, g.dim() - g.rank(), "{g}");
    }
}

#[test]
fn symplectic_and_odd_orthogonal_share_exponents() {
    for m in 1..=200 {
        assert_eq!(LieType::psp(m).unwrap().exponents(), LieType::po_odd(m).unwrap().exponents());
    }
}

fn sigma_by_residues(n: u64, k: u64) -> u64 {
    // n points split into k classes as evenly as possible; σ = Σ (class size)².
    (0..k).map(|c| (0..n).filter(|i| i % k == c).count() as u64).map(|s| s * s).sum()
}

#[test]
fn sigma_is_sum_of_squared_class_sizes() {
    for n in 1..=120 {
        for k in 1..=60 {
            assert_eq!(sigma(n, k).unwrap(), sigma_by_residues(n, k), "n={n} k={k}");
        }
    }
}

proptest! {
    #[test]
    fn sigma_closed_form(n in 1u64..500, k in 1u64..500) {
        let (q, r) = (n / k, n % k);
        prop_assert_eq!(sigma(n, k).unwrap(), n * q + (q + 1) * r);
        prop_assert_eq!(sigma(n, k).unwrap() % 2, n % 2);
    }

    #[test]
    fn display_parse_round_trip(p in 1u32..300, which in 0usize..4) {
        let g = match which {
            0 => LieType::psl(p + 1),
            1 => LieType::psp(p),
            2 => LieType::po_odd(p),
            _ => LieType::po_even(p + 2),
        }.unwrap();
        prop_assert_eq!(g.to_string().parse::<LieType>().unwrap(), g);
    }
}
