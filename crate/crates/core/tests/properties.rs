mod support;

use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use polefiber::experiments::{random_plant, random_search, shapiro_system, CounterexampleData, SearchConfig};
use polefiber::homotopy::{classify_real, relative_distance, solve_system, TrackerConfig};
use polefiber::multipoly::{self, RatMultiPoly};
use polefiber::plucker::{center_subspace, complement_sign, enumerate_subsets, feedback_block, plucker_of_mfd};
use polefiber::polemap::{build_fiber_system, chi_mfd, chi_state, FiberMode, TargetPoly};
use polefiber::ratpoly::{combinations, rat_int, RatPoly};
use polefiber::sysmodel::{berstein_is_odd, controllable, observable, realize_left_mfd, schubert_degree, PlantModel};
use support::{distinct_roots, random_matrix, random_poly_matrix};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn poly_strategy() -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(-20i64..=20, 0..6).prop_map(|c| RatPoly::from_ints(&c))
}

/// A (2,2) plant, a target with distinct integer roots and its fiber.
fn small_instance(seed: u64) -> (PlantModel, TargetPoly) {
    let mut r = rng(seed);
    let (d, n) = random_plant(2, 2, (-9, 9), &mut r).unwrap();
    let plant = PlantModel::from_mfd(d, n).unwrap();
    let roots = distinct_roots(&mut r, 4, -12, 12);
    (plant, TargetPoly::from_int_roots(&roots).unwrap())
}

proptest! {
    #[test]
    fn ratpoly_ring_laws(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() && !b.is_zero() {
            prop_assert_eq!((&a * &b).degree(), a.degree() + b.degree());
        }
    }

    #[test]
    fn division_identity(a in poly_strategy(), b in poly_strategy()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
        let (ac, bc) = (&a * &c, &b * &c);
        let g = ac.gcd(&bc).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(ac.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(bc.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(g.div_rem(&c.monic()).unwrap().1.is_zero());
    }

    #[test]
    fn determinant_routes_agree(seed in any::<u64>(), size in 1usize..=4, degree in 0usize..=3) {
        let m = random_poly_matrix(&mut rng(seed), size, size, degree);
        prop_assert_eq!(m.det_interpolated().unwrap(), m.det_cofactor().unwrap());
    }

    #[test]
    fn column_swap_flips_determinant(seed in any::<u64>(), size in 2usize..=4, i in 0usize..4, j in 0usize..4) {
        let (i, j) = (i % size, j % size);
        prop_assume!(i != j);
        let m = random_poly_matrix(&mut rng(seed), size, size, 2);
        let mut cols: Vec<usize> = (0..size).collect();
        cols.swap(i, j);
        let swapped = m.select_columns(&cols);
        prop_assert_eq!(swapped.det().unwrap(), -m.det().unwrap());
    }

    #[test]
    fn laplace_identity(seed in any::<u64>(), m in 1usize..=3, p in 1usize..=3, degree in 0usize..=2) {
        let mut r = rng(seed);
        let mut d = random_poly_matrix(&mut r, p, p, degree);
        for i in 0..p {
            let bumped = &d.get(i, i).clone() + &RatPoly::monomial(rat_int(1), degree + 1);
            d.set(i, i, bumped);
        }
        let n = random_poly_matrix(&mut r, p, m, degree);
        let k = random_matrix(&mut r, m, p);
        let sys = plucker_of_mfd(&d, &n).unwrap();
        let block = feedback_block(&d, &n, &k).unwrap().det().unwrap();
        prop_assert_eq!(sys.closed_loop(&k).unwrap(), block);
    }

    #[test]
    fn center_dimension_bound(seed in any::<u64>(), m in 1usize..=3, p in 1usize..=3) {
        let (d, n) = random_plant(m, p, (-5, 5), &mut rng(seed)).unwrap();
        let sys = plucker_of_mfd(&d, &n).unwrap();
        let e = center_subspace(&sys);
        prop_assert_eq!(sys.n, m * p);
        prop_assert!(e.dim_e >= e.expected_dim());
        prop_assert_eq!(e.dim_e == e.expected_dim(), e.rank == sys.n + 1);
        prop_assert_eq!(sys.g[sys.alpha_bar.ordinal].degree(), sys.n as isize);
        prop_assert!(sys.g.iter().skip(1).all(|g| g.degree() < sys.n as isize));
    }

    #[test]
    fn state_space_and_fraction_agree(seed in any::<u64>(), m in 1usize..=2, p in 1usize..=2) {
        let mut r = rng(seed);
        let (d, n) = random_plant(m, p, (-6, 6), &mut r).unwrap();
        let ss = realize_left_mfd(&d, &n).unwrap();
        prop_assert_eq!(ss.n(), m * p);
        prop_assert!(observable(&ss.a, &ss.c).unwrap());
        let coprime = controllable(&ss.a, &ss.b).unwrap();
        let k = random_matrix(&mut r, m, p);
        prop_assert_eq!(chi_state(&ss, &k).unwrap(), chi_mfd(&d, &n, &k).unwrap());
        // A minimal realization of a coprime fraction is also controllable.
        let e = center_subspace(&plucker_of_mfd(&d, &n).unwrap());
        if e.rank == m * p + 1 {
            prop_assert!(coprime);
        }
    }

    #[test]
    fn fiber_degrees_bounded(seed in any::<u64>(), m in 1usize..=3, p in 1usize..=2) {
        let mut r = rng(seed);
        let (d, n) = random_plant(m, p, (-6, 6), &mut r).unwrap();
        let plant = PlantModel::from_mfd(d, n).unwrap();
        let roots = distinct_roots(&mut r, m * p, -12, 12);
        let target = TargetPoly::from_int_roots(&roots).unwrap();
        for mode in [FiberMode::RootEval, FiberMode::CoeffMatch] {
            let fiber = build_fiber_system(&plant, &target, mode).unwrap();
            prop_assert!(fiber.is_square());
            for eq in &fiber.exact {
                prop_assert!(eq.total_degree() <= m.min(p) as isize);
            }
        }
    }

    #[test]
    fn serde_round_trip(seed in any::<u64>()) {
        let mut data = CounterexampleData::load().unwrap();
        data.system.name = Some(format!("copy-{seed}"));
        let text = serde_json::to_string(&data).unwrap();
        let back: CounterexampleData = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
        prop_assert_eq!(back.plant().unwrap(), data.plant().unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn solver_is_deterministic_and_gamma_free(seed in any::<u64>(), g1 in any::<u64>(), g2 in any::<u64>()) {
        let (plant, target) = small_instance(seed);
        let fiber = build_fiber_system(&plant, &target, FiberMode::CoeffMatch).unwrap();
        let cfg = TrackerConfig::with_seed(g1);
        let a = solve_system(&fiber.system, &cfg).unwrap();
        let again = solve_system(&fiber.system, &cfg).unwrap();
        prop_assert_eq!(&a, &again);
        let b = solve_system(&fiber.system, &TrackerConfig::with_seed(g2)).unwrap();
        prop_assume!(a.paths_failed == 0 && b.paths_failed == 0);
        prop_assert_eq!(a.solutions.len(), b.solutions.len());
        for s in &a.solutions {
            prop_assert!(b.solutions.iter().any(|t| relative_distance(&s.point, &t.point) < 1e-6));
        }
    }

    #[test]
    fn real_systems_close_under_conjugation(seed in any::<u64>()) {
        let (plant, target) = small_instance(seed);
        let fiber = build_fiber_system(&plant, &target, FiberMode::CoeffMatch).unwrap();
        let cfg = TrackerConfig::default();
        let set = solve_system(&fiber.system, &cfg).unwrap();
        prop_assert!(set.solutions.len() <= set.bezout_bound);
        prop_assert!(set.solutions.len() <= 2);
        for s in &set.solutions {
            let conj: Vec<Complex64> = s.point.iter().map(|z| z.conj()).collect();
            prop_assert!(set.solutions.iter().any(|t| relative_distance(&conj, &t.point) < cfg.dedupe_tol));
        }
        let c = classify_real(&set, &cfg);
        prop_assert_eq!(c.num_real + 2 * c.pairs, set.solutions.len());
        prop_assert_eq!(c.unpaired, 0);
    }

    #[test]
    fn search_tallies_add_up(seed in any::<u64>()) {
        let cfg = SearchConfig { num_plants: 2, targets_per_plant: 2, m: 2, p: 2, seed, ..SearchConfig::default() };
        let r = random_search(&cfg).unwrap();
        prop_assert_eq!(r.instances_run + r.failures, 4);
        prop_assert!(r.all_real_count + r.all_complex_count <= r.instances_run);
        for t in r.instances.iter().filter(|t| t.failure.is_none()) {
            prop_assert_eq!(t.num_real + t.num_complex, t.num_solutions);
        }
    }
}

#[test]
fn complement_sign_matches_permutation_parity() {
    for total in 2..=8 {
        for p in 1..total {
            let m = total - p;
            for alpha in enumerate_subsets(m, p) {
                let mut perm = alpha.members.clone();
                perm.extend(alpha.complement(total));
                let inversions = (0..total)
                    .flat_map(|i| (i + 1..total).map(move |j| (i, j)))
                    .filter(|&(i, j)| perm[i] > perm[j])
                    .count();
                let expected = if inversions % 2 == 0 { 1 } else { -1 };
                assert_eq!(complement_sign(&alpha, p), expected, "{:?} in {m}+{p}", alpha.members);
            }
        }
    }
}

#[test]
fn subset_ordinals_are_lexicographic() {
    for (m, p) in [(1, 1), (2, 2), (4, 2), (3, 3)] {
        let subsets = enumerate_subsets(m, p);
        assert_eq!(subsets.len(), combinations(m + p, p).len());
        for (i, s) in subsets.iter().enumerate() {
            assert_eq!(s.ordinal, i);
            assert!(s.members.windows(2).all(|w| w[0] < w[1]));
        }
        assert!(subsets.windows(2).all(|w| w[0].members < w[1].members));
    }
}

#[test]
fn degree_parity_and_symmetry() {
    for m in 1..=8 {
        for p in 1..=8 {
            let d = schubert_degree(m, p);
            assert_eq!(d, schubert_degree(p, m));
            assert_eq!(d.bit(0), berstein_is_odd(m, p), "({m},{p})");
        }
    }
}

#[test]
fn shapiro_plucker_data() {
    for (m, p) in [(1, 1), (2, 1), (1, 3), (2, 2), (3, 2), (2, 3), (4, 2)] {
        let (d, n) = shapiro_system(m, p, None).unwrap();
        let sys = plucker_of_mfd(&d, &n).unwrap();
        assert_eq!(sys.n, m * p);
        let lead = &sys.g[0];
        assert_eq!(lead.monic(), RatPoly::monomial(rat_int(1), m * p));
        assert!(center_subspace(&sys).has_full_span(), "({m},{p})");
    }
}

#[test]
fn multipoly_determinant_matches_evaluation() {
    let mut r = rng(7);
    let nv = 2;
    let rows: Vec<Vec<RatMultiPoly>> = (0..3)
        .map(|_| {
            (0..3)
                .map(|_| {
                    let mut q = RatMultiPoly::zero(nv);
                    for e in multipoly::monomials_up_to(nv, 1) {
                        q.add_term(e, support::small_rat(&mut r, 4));
                    }
                    q
                })
                .collect()
        })
        .collect();
    let det = multipoly::det(&rows, nv);
    assert!(det.total_degree() <= 3);
    let point = [rat_int(2), support::small_rat(&mut r, 5)];
    let evaluated: Vec<Vec<polefiber::ratpoly::Rat>> =
        rows.iter().map(|row| row.iter().map(|q| q.eval(&point)).collect()).collect();
    let m = polefiber::ratpoly::RatMatrix::from_rows(evaluated).unwrap();
    assert_eq!(det.eval(&point), m.det().unwrap());
}
