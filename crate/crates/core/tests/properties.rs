mod common;

use jumplat::io::parse_graph;
use jumplat::lattice::QCycle;
use jumplat::rational::{int, rat, Rational};
use jumplat::seifert::{cont_frac, cont_frac_expand};
use jumplat::spectrum::{
    acampo_zeta, complete_graph, edge_exponents, edge_exponents_brute_force, extend_by_symmetry,
    hodge_spectrum_01, tsp, BetaAssignment,
};
use jumplat::splice::{hilbert, pg_splice, SpliceQuotient};
use jumplat::JumpInput;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::Rng;

/// A seed and a vertex count; the graph itself comes from the seeded generator.
fn tree_seed(max_n: usize) -> impl Strategy<Value = (u64, usize)> {
    (any::<u64>(), 1..=max_n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dual_cycles_match_oracle_and_are_positive((seed, n) in tree_seed(7)) {
        let g = common::random_tree(&mut common::rng(seed), n, 0, 2, false);
        for v in 0..n {
            let e = g.dual_cycle(v);
            prop_assert_eq!(e.coeffs().to_vec(), common::dual_oracle(&g, v));
            prop_assert!(e.coeffs().iter().all(|x| x > &Rational::zero()));
            for w in 0..n {
                let expect = if v == w { -Rational::one() } else { Rational::zero() };
                prop_assert_eq!(g.pairing_with_vertex(&e, w), expect);
            }
        }
    }

    #[test]
    fn canonical_cycle_and_riemann_roch((seed, n) in tree_seed(7)) {
        let mut rng = common::rng(seed);
        let g = common::random_tree(&mut rng, n, 1, 3, true);
        let zk = g.canonical_cycle().clone();
        prop_assert_eq!(zk.coeffs().to_vec(), common::zk_oracle(&g));
        for v in 0..n {
            let vx = g.vertex(v);
            let lhs = g.pairing_with_vertex(&zk, v);
            prop_assert_eq!(lhs, int(vx.euler + 2 - 2 * vx.genus as i64));
        }
        let l = QCycle::from_integers(&(0..n).map(|_| rng.gen_range(-3..=3)).collect::<Vec<_>>());
        let chi = g.chi(&l).unwrap();
        prop_assert_eq!(&chi, &common::chi_oracle(&g, l.coeffs()));
        prop_assert_eq!(&chi, &g.chi(&(zk.clone() - l.clone())).unwrap());
        let k = QCycle::from_integers(&(0..n).map(|_| rng.gen_range(-3..=3)).collect::<Vec<_>>());
        prop_assert_eq!(g.pairing(&l, &k).unwrap(), g.pairing(&k, &l).unwrap());
    }

    #[test]
    fn jumping_structure((seed, n) in tree_seed(5), num in 1i64..24, den in 1i64..6) {
        let mut rng = common::rng(seed);
        let g = common::random_tree(&mut rng, n, 1, 2, true);
        let f = common::random_antinef(&mut rng, &g, 3);
        let j = JumpInput::new(g.clone(), f.clone()).unwrap();
        let c = rat(num, den);
        prop_assert_eq!(j.d_of(&c), j.d_of(&(&c + int(1))));
        prop_assert!(j.l_of(&(&c + rat(1, 7))).ge(&j.l_of(&c)));
        prop_assert!(j.l_of(&c).ge(&j.l_minus(&c)));
        let m = j.mult_pos(&c).unwrap();
        prop_assert_eq!(m, j.mult_via_dc(&c).unwrap());
        let fi = f.to_integers().unwrap();
        prop_assert_eq!(m, common::mult_oracle(&g, &fi, &c));
        let (lct, _) = j.lct();
        let lo = &lct - int(1);
        // the library interval is closed, the oracle's is open on the left
        let mut expect = common::candidates_oracle(&g, &fi, &(&lo - int(1)), &c);
        expect.retain(|x| x >= &lo);
        prop_assert_eq!(j.candidates(&lo, &c), expect);
    }

    #[test]
    fn edge_criterion_matches_brute_force(
        (seed, n) in tree_seed(5),
        picks in proptest::collection::vec((0i64..6, 1i64..6), 5),
    ) {
        prop_assume!(n >= 2);
        let mut rng = common::rng(seed);
        let g = common::random_tree(&mut rng, n, 1, 2, false);
        let f = common::random_antinef(&mut rng, &g, 4);
        let cg = complete_graph(&g, &f).unwrap();
        let beta = BetaAssignment::new(
            (0..n).map(|v| {
                let (a, b) = picks[v];
                rat(a % b, b)
            }).collect(),
        ).unwrap();
        for &(v, w) in g.edges() {
            prop_assert_eq!(
                edge_exponents(&cg, &beta, v, w),
                edge_exponents_brute_force(&cg, &beta, v, w)
            );
        }
    }

    #[test]
    fn hodge_interior_is_tsp_at_zero_beta((seed, n) in tree_seed(6)) {
        let mut rng = common::rng(seed);
        let g = common::random_tree(&mut rng, n, 1, 2, true);
        let f = common::random_antinef(&mut rng, &g, 4);
        let cg = complete_graph(&g, &f).unwrap();
        let open = |c: &Rational| c > &Rational::zero() && c < &Rational::one();
        let h = hodge_spectrum_01(&cg);
        prop_assert_eq!(
            h.filter(open),
            tsp(&cg, &BetaAssignment::zero(n)).filter(open)
        );
        let gh = (g.total_genus() + g.first_betti()) as i64;
        prop_assert_eq!(h.get(&Rational::zero()), gh - 1);
        prop_assert_eq!(h.get(&Rational::one()), cg.total_arrows() + gh - 1);
        let ext = extend_by_symmetry(&h).unwrap();
        prop_assert_eq!(acampo_zeta(&cg).degree(), ext.total());
    }

    #[test]
    fn continued_fractions_round_trip(alpha in 2i64..200, omega in 1i64..200) {
        prop_assume!(omega < alpha && num_integer::gcd(alpha, omega) == 1);
        let b = cont_frac_expand(alpha, omega).unwrap();
        prop_assert!(b.iter().all(|&x| x >= 2));
        prop_assert_eq!(cont_frac(&b).unwrap(), (alpha, omega));
    }

    #[test]
    fn graph_files_round_trip((seed, n) in tree_seed(8), num in -9i64..9, den in 1i64..5) {
        let mut rng = common::rng(seed);
        let g = common::random_tree(&mut rng, n, 1, 3, true);
        let mut text = String::new();
        for v in g.vertices() {
            text.push_str(&format!("vertex {} euler={} genus={}\n", v.id, v.euler, v.genus));
        }
        for &(a, b) in g.edges() {
            text.push_str(&format!("edge {} {}\n", g.vertex(a).id, g.vertex(b).id));
        }
        text.push_str(&format!("arrow x{}\n", n - 1));
        text.push_str(&format!("cycle F x0={num}/{den}\n"));
        let gf = parse_graph(&text).unwrap();
        prop_assert_eq!(&gf.graph, &g);
        prop_assert_eq!(gf.cycle("F").unwrap().get(0), &rat(num, den));
        let again = parse_graph(&gf.print()).unwrap();
        prop_assert_eq!(&again, &gf);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn hilbert_matches_tuple_enumeration((seed, n) in tree_seed(4), pick in proptest::collection::vec(0i64..3, 4)) {
        let g = common::random_tree(&mut common::rng(seed), n, 0, 1, false);
        let l: Vec<i64> = pick[..n].to_vec();
        let h = hilbert(&g, &QCycle::from_integers(&l)).unwrap();
        prop_assert_eq!(h.value, common::hilbert_oracle(&g, &l));
    }

    #[test]
    fn rational_trees_have_pg_zero((seed, n) in tree_seed(6)) {
        let g = common::random_tree(&mut common::rng(seed), n, 0, 1, false);
        prop_assert_eq!(pg_splice(&g).unwrap(), 0);
    }

    #[test]
    fn series_tables_are_stable_under_restriction((seed, n) in tree_seed(5)) {
        let mut rng = common::rng(seed);
        let g = common::random_tree(&mut rng, n, 0, 1, false);
        let sq = SpliceQuotient::new(g.clone()).unwrap();
        let small = common::random_antinef(&mut rng, &g, 2);
        let big = small.scale(&int(2));
        let t_small = sq.zeta_table(&small).unwrap();
        let t_big = sq.zeta_table(&big).unwrap();
        prop_assert_eq!(t_big.restrict(&small), t_small.clone());
        prop_assert_eq!(sq.zeta_table_by_multiplication(&small).unwrap(), t_small);
    }
}
