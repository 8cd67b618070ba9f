use lf_forge::fibrations::{
    glue_difference, glued_euler_by_excision, knot_surgered_fibration, x_family,
};
use lf_forge::search::{construct_bundle, solve_params, ParamSolution};
use proptest::prelude::*;

/// Independent enumeration: every (h, k, n, g) in a box satisfying the two
/// matching equations and the range constraints, with no closed-form solve.
fn brute_force(h_max: i64, k_max: i64) -> Vec<ParamSolution> {
    let mut out = Vec::new();
    for h in 2..=h_max {
        for k in (2..=k_max).filter(|k| k % 2 == 0) {
            for n in 2..=(h + k) {
                for g in 1..=(h + k) {
                    if h + k == n + 2 * g - 1 && 8 + 4 * h - 2 * k == 12 * n {
                        out.push(ParamSolution { h, k, n, g });
                    }
                }
            }
        }
    }
    out
}

#[test]
fn grid_search_is_complete_and_sound() {
    assert_eq!(solve_params(40, 40).unwrap(), brute_force(40, 40));
    assert_eq!(solve_params(17, 3).unwrap(), brute_force(17, 3));
}

#[test]
fn first_solutions() {
    // hand-checked: (5,2) n=2 g=3; (8,2) n=3 g=4; (7,6) n=2 g=6
    let sols = solve_params(8, 8).unwrap();
    let cells: Vec<_> = sols.iter().map(|s| (s.h, s.k, s.n, s.g)).collect();
    assert_eq!(cells, vec![(5, 2, 2, 3), (7, 6, 2, 6), (8, 2, 3, 4)]);
}

#[test]
fn full_grid_closed_form_checks() {
    let sols = solve_params(200, 200).unwrap();
    assert!(!sols.is_empty());
    for s in &sols {
        assert!(s.violations().is_empty(), "{s}");
        let x = x_family(s.h, s.k).unwrap();
        let enk = knot_surgered_fibration(s.n, s.g).unwrap();
        assert_eq!(x.total.e(), 12 * s.n);
        assert_eq!(x.total.e(), enk.total.e());
        assert_eq!(x.fiber_genus, enk.fiber_genus);
        assert_eq!(x.singular_fibers, enk.singular_fibers);

        let y = construct_bundle(s).unwrap();
        assert_eq!(
            (y.fiber_genus, y.base_genus, y.sigma),
            (s.h + s.k, 8 * s.h + 2 * s.k + 3, s.signature())
        );
        assert!(y.euler_is_product());
        assert_eq!(y.e, glued_euler_by_excision(&x, &enk));
        assert_eq!(glue_difference(&enk, &x).unwrap().sigma, -y.sigma);
    }
}

proptest! {
    #[test]
    fn off_grid_cells_have_no_matching_pair(h in 2i64..300, k in 2i64..300) {
        let in_grid = solve_params(h, k).unwrap().iter().any(|s| s.h == h && s.k == k);
        let x = x_family(h, k);
        // a cell has a solution iff some E(n)_K fibration is equivalent to X(h,k)
        let has_partner = x.as_ref().ok().is_some_and(|x| {
            (2..=h + k).any(|n| {
                (0..=h + k).any(|g| {
                    knot_surgered_fibration(n, g)
                        .map(|f| lf_forge::fibrations::equivalent(x, &f) && g >= 1)
                        .unwrap_or(false)
                })
            })
        });
        prop_assert_eq!(in_grid, has_partner);
    }
}
