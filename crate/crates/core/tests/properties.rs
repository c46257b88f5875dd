mod common;

use common::{block_assembly, instance};
use num_complex::Complex64;
use proptest::prelude::*;
use tbt_grc::{
    grc_full, index_exchange, tbt_factorization, tbt_grc, BandVector, CMatrix, InverseFactor,
    MatrixAccess, TbtGenerator,
};

fn complex() -> impl Strategy<Value = Complex64> {
    (-10.0f64..10.0, -10.0f64..10.0).prop_map(|(re, im)| Complex64::new(re, im))
}

/// Arbitrary generator with a Hermitian first block; not necessarily PD.
fn generator() -> impl Strategy<Value = TbtGenerator> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(n1, n2)| {
        let width = 2 * n1 - 1;
        (
            0.1f64..10.0,
            prop::collection::vec(complex(), n1 - 1),
            prop::collection::vec(prop::collection::vec(complex(), width), n2 - 1),
        )
            .prop_map(move |(c00, positive_lags, rest)| {
                let mut first = vec![Complex64::new(0.0, 0.0); width];
                first[n1 - 1] = Complex64::new(c00, 0.0);
                for (s, z) in positive_lags.into_iter().enumerate() {
                    first[n1 + s] = z;
                    first[n1 - 2 - s] = z.conj();
                }
                let mut values = vec![first];
                values.extend(rest);
                TbtGenerator::new(n1, n2, values).unwrap()
            })
    })
}

fn band() -> impl Strategy<Value = BandVector> {
    (1usize..12).prop_flat_map(|n| {
        (0..n).prop_flat_map(move |lo| {
            prop::collection::vec(complex(), 1..=n - lo)
                .prop_map(move |c| BandVector::new(n, lo, c).unwrap())
        })
    })
}

proptest! {
    #[test]
    fn entries_are_hermitian_and_match_blocks(g in generator()) {
        let oracle = block_assembly(&g);
        for i in 0..g.n() {
            for j in 0..g.n() {
                prop_assert_eq!(g.entry(i, j), oracle.get(i, j));
                prop_assert_eq!(g.entry(j, i), g.entry(i, j).conj());
            }
        }
    }

    #[test]
    fn exchange_is_distance_preserving_involution(n1 in 1usize..=8, n2 in 1usize..=8, a in 0usize..64, b in 0usize..64) {
        let n = n1 * n2;
        let (k, l) = ((a % n).min(b % n), (a % n).max(b % n));
        let (kk, ll) = index_exchange(k, l, n1);
        prop_assert!(ll < n);
        prop_assert_eq!(ll - kk, l - k);
        prop_assert_eq!(index_exchange(kk, ll, n1), (k, l));
    }

    #[test]
    fn shift_and_reversal_algebra(v in band(), t in -12isize..12) {
        prop_assert_eq!(v.reverse_support().reverse_support(), v.clone());
        prop_assert_eq!(v.conj().conj(), v.clone());
        prop_assert_eq!(v.mirrored(0).unwrap().mirrored(0).unwrap(), v.clone());
        match v.shift(t) {
            Ok(s) => {
                prop_assert_eq!(s.lo() as isize, v.lo() as isize + t);
                prop_assert_eq!(s.coeffs(), v.coeffs());
                prop_assert_eq!(s.shift(-t).unwrap(), v.clone());
            }
            Err(_) => {
                let lo = v.lo() as isize + t;
                prop_assert!(lo < 0 || v.hi() as isize + t >= v.len() as isize);
            }
        }
    }

    #[test]
    fn generator_text_round_trip_is_exact(g in generator()) {
        let mut buf = Vec::new();
        g.write_text(&mut buf).unwrap();
        let back = TbtGenerator::read_text(buf.as_slice()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn matrix_text_round_trip_is_exact(rows in 1usize..5, cols in 1usize..5, seed in any::<u64>()) {
        let mut rng = tbt_grc::SplitMix64::new(seed);
        let m = CMatrix::from_fn(rows, cols, |_, _| {
            let re = rng.next_signed_unit();
            Complex64::new(re, rng.next_signed_unit())
        });
        let mut buf = Vec::new();
        m.write_text(&mut buf).unwrap();
        let mut lines = tbt_grc::Lines::new(buf.as_slice());
        prop_assert_eq!(CMatrix::read_from(&mut lines).unwrap(), m);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fast_path_agrees_with_dense_recursion(n1 in 1usize..=4, n2 in 1usize..=4, seed in any::<u64>()) {
        let g = instance(n1, n2, seed);
        let fast = tbt_grc(&g).unwrap();
        let oracle = grc_full(&g.assemble_dense()).unwrap();
        for (k, l) in oracle.pairs() {
            prop_assert!(fast.fetch(k, l).unwrap().max_rel_deviation(oracle.get(k, l).unwrap()) <= 1e-10);
        }
    }

    #[test]
    fn factor_text_round_trip_is_exact(n1 in 1usize..=3, n2 in 1usize..=3, seed in any::<u64>()) {
        let f = tbt_factorization(&instance(n1, n2, seed)).unwrap();
        let mut buf = Vec::new();
        f.write_text(&mut buf).unwrap();
        let back = InverseFactor::read_text(buf.as_slice()).unwrap();
        prop_assert_eq!(back.diag(), f.diag());
        prop_assert_eq!(back.columns(), f.columns());
    }
}
