use std::cmp::Ordering;

use num_traits::One;
use proptest::prelude::*;

use seidelkit::algebra::{psd_status, ratio};
use seidelkit::graph::is_switching_equivalent;
use seidelkit::maximality::{find_extension, is_maximal, is_strongly_maximal};
use seidelkit::seidel::{
    absolute_bound_holds, adjacency_shift, b_matrix, compare_largest, eigenvalues_desc, largest_eigenvalue, p_value,
    parity_check, rank_at, seidel_of,
};
use seidelkit::{Graph, QuadraticNumber};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            Graph::from_fn(n, |_, _| it.next().unwrap())
        })
    })
}

fn graph_and_switch(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 0..=n))
    })
}

fn q(n: i64) -> QuadraticNumber {
    QuadraticNumber::int(n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spectrum_is_switching_invariant((g, u) in graph_and_switch(8)) {
        prop_assert_eq!(g.seidel_char_poly(), g.switch(&u).seidel_char_poly());
    }

    #[test]
    fn graph6_round_trip(g in graph(12)) {
        prop_assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn parity_holds(g in graph(10)) {
        prop_assert!(parity_check(&seidel_of(&g)));
    }

    #[test]
    fn interlacing(g in graph(8).prop_filter("order >= 2", |g| g.order() >= 2), pick in any::<prop::sample::Index>()) {
        let n = g.order();
        let v = pick.index(n);
        let keep: Vec<usize> = (0..n).filter(|&i| i != v).collect();
        let mu = eigenvalues_desc(&g.seidel_char_poly());
        let nu = eigenvalues_desc(&g.induced(&keep).seidel_char_poly());
        prop_assert_eq!(mu.len(), n);
        prop_assert_eq!(nu.len(), n - 1);
        for i in 0..n - 1 {
            prop_assert!(mu[i].cmp_exact(&nu[i]) != Ordering::Less);
            prop_assert!(nu[i].cmp_exact(&mu[i + 1]) != Ordering::Less);
        }
    }

    #[test]
    fn theta_two_rank_identity(g in graph(7)) {
        let s = seidel_of(&g);
        let three = q(3);
        let b = b_matrix(&g, &q(2), &q(2));
        let side = compare_largest(&s, &three);
        prop_assert_eq!(side != Ordering::Greater, psd_status(&b).is_psd());
        if side != Ordering::Greater {
            prop_assert_eq!(rank_at(&s, &three) + 1, b.rank());
            prop_assert!(psd_status(&adjacency_shift(&g, &q(2))).is_psd());
            let p = p_value(&g, &q(2)).unwrap().unwrap();
            prop_assert!(p <= q(2));
        }
    }

    #[test]
    fn absolute_bound_for_distinct_lines(g in graph(8)) {
        let s = seidel_of(&g);
        if let Ok(l) = largest_eigenvalue(&s) {
            if l > q(1) {
                prop_assert!(absolute_bound_holds(g.order(), rank_at(&s, &l)));
            }
        }
    }

    #[test]
    fn regular_p_value(n in 3usize..=10, mask in 1u32..32) {
        // circulant graph with connection set from `mask`
        let g = Graph::from_fn(n, |i, j| {
            let d = (j + n - i) % n;
            let d = d.min(n - d);
            d >= 1 && d <= 5 && mask >> (d - 1) & 1 == 1
        });
        let k = g.regular_degree().unwrap();
        let s = seidel_of(&g);
        let Ok(l) = largest_eigenvalue(&s) else { return Ok(()) };
        let theta = (l + &QuadraticNumber::one()) / &q(2);
        let p = p_value(&g, &theta).unwrap();
        prop_assert_eq!(p, Some(q(n as i64) / &(q(k as i64) + &theta)));
    }

    #[test]
    fn quadratic_field_axioms(a in -20i64..20, b in -20i64..20, c in -20i64..20, e in 1i64..9, d in prop::sample::select(vec![2u64, 3, 5, 13])) {
        let x = QuadraticNumber::new(ratio(a, e), ratio(b, e), d);
        let y = QuadraticNumber::new(ratio(c, 1), ratio(1, e), d);
        prop_assert_eq!(x.clone() * &y - &(y.clone() * &x), q(0));
        let back = x.clone() * &y / &y;
        prop_assert_eq!(back, x.clone());
        let sum = x.clone() + &y;
        prop_assert_eq!(sum.to_f64() > x.to_f64(), y.to_f64() > 0.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn witness_is_sound(g in graph(7), keep_rank in any::<bool>()) {
        let s = seidel_of(&g);
        let Ok(l) = largest_eigenvalue(&s) else { return Ok(()) };
        let v = find_extension(&s, &l, keep_rank).unwrap();
        if let Some(ext) = v.extension() {
            prop_assert!(psd_status(&ext.shifted(&l)).is_psd());
            if keep_rank {
                prop_assert_eq!(rank_at(&ext, &l), rank_at(&s, &l));
            }
        }
    }

    #[test]
    fn strong_implies_maximal(g in graph(7)) {
        if let (Ok((strong, _)), Ok((maximal, _))) = (is_strongly_maximal(&g), is_maximal(&g)) {
            prop_assert!(!strong || maximal);
        }
    }

    #[test]
    fn verdicts_are_switching_invariant((g, u) in graph_and_switch(7)) {
        let h = g.switch(&u);
        if let (Ok(a), Ok(b)) = (is_maximal(&g), is_maximal(&h)) {
            prop_assert_eq!(a.0, b.0);
        }
        if let (Ok(a), Ok(b)) = (is_strongly_maximal(&g), is_strongly_maximal(&h)) {
            prop_assert_eq!(a.0, b.0);
        }
    }

    #[test]
    fn switching_and_relabelling_are_detected((g, u) in graph_and_switch(7), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let h = g.switch(&u).relabel(&perm);
        let cert = is_switching_equivalent(&g, &h).unwrap();
        prop_assert!(cert.is_some_and(|c| c.verify(&g, &h)));
    }
}
