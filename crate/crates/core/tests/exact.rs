mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;

use common::{charpoly_cofactor, random_low_rank, random_matrix, rank_rational, rng};
use uvc::exact::modular::ModP;
use uvc::exact::{
    bareiss_rank, charpoly, charpoly_berkowitz, charpoly_multimodular, eval_poly_at_matrix, rank_exact,
    rank_mod_p, real_root_count, sturm_root_count, IntMatrix, IntPoly, Rat,
};
use uvc::families::{hamming_h, kneser};

#[test]
fn charpoly_agrees_with_cofactor_expansion() {
    let mut r = rng(1);
    for _ in 0..100 {
        let n = r.gen_range(1..=7);
        let a = random_matrix(&mut r, n, n, -3, 3);
        let want = charpoly_cofactor(&a);
        assert_eq!(charpoly(&a).unwrap(), want);
        assert_eq!(charpoly_multimodular(&a).unwrap(), want);
    }
}

#[test]
fn multimodular_matches_berkowitz_beyond_dispatch_size() {
    let mut r = rng(2);
    for n in [41, 45, 50] {
        let a = random_matrix(&mut r, n, n, -2, 2);
        assert_eq!(charpoly_multimodular(&a).unwrap(), charpoly_berkowitz(&a).unwrap());
    }
}

#[test]
fn cayley_hamilton_on_graphs() {
    for g in [kneser(5, 2).unwrap(), kneser(7, 2).unwrap(), hamming_h(5, 4).unwrap()] {
        let a = IntMatrix::adjacency(&g);
        let phi = charpoly(&a).unwrap();
        let zero = eval_poly_at_matrix(&phi, &a).unwrap();
        assert!(zero.entries().iter().all(|x| *x == BigInt::from(0)));
        // and the minimal polynomial already vanishes
        let m = eval_poly_at_matrix(&phi.squarefree(), &a).unwrap();
        assert!(m.entries().iter().all(|x| *x == BigInt::from(0)));
    }
}

#[test]
fn ranks_agree_with_rational_elimination() {
    let mut r = rng(3);
    for i in 0..100 {
        let rows = r.gen_range(1..=15);
        let cols = r.gen_range(1..=15);
        let a = if i % 2 == 0 {
            random_matrix(&mut r, rows, cols, -5, 5)
        } else {
            let k = r.gen_range(0..=rows.min(cols));
            random_low_rank(&mut r, rows, cols, k.max(1))
        };
        let want = rank_rational(&a);
        assert_eq!(bareiss_rank(&a), want);
        assert_eq!(rank_exact(&a), want);
        assert!(rank_mod_p(&a, ModP::new(7)) <= want);
    }
}

#[test]
fn modular_rank_is_a_lower_bound() {
    // det = 7·11, singular modulo both primes
    let a = IntMatrix::from_i64_rows(&[vec![7, 0], vec![0, 11]]).unwrap();
    assert_eq!(rank_mod_p(&a, ModP::new(7)), 1);
    assert_eq!(rank_mod_p(&a, ModP::new(11)), 1);
    assert_eq!(rank_exact(&a), 2);
}

#[test]
fn sturm_counts_match_known_roots() {
    // (x - 1)(x - 2)(x - 3)(x^2 - 2)
    let p = IntPoly::from_i64(&[-6, 11, -6, 1])
        .mul(&IntPoly::from_i64(&[-2, 0, 1]));
    assert_eq!(real_root_count(&p), 5);
    let r = |a: i64, b: i64| Rat::new(BigInt::from(a), BigInt::from(b));
    assert_eq!(sturm_root_count(&p, &r(0, 1), &r(5, 2)).unwrap(), 3);
    assert_eq!(sturm_root_count(&p, &r(-2, 1), &r(0, 1)).unwrap(), 1);
}

fn small_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-6i64..=6, 1..6).prop_map(|c| IntPoly::from_i64(&c))
}

proptest! {
    #[test]
    fn squarefree_divides_and_keeps_roots(p in small_poly(), q in small_poly()) {
        let f = p.mul(&q).mul(&q);
        prop_assume!(!f.is_zero());
        let s = f.squarefree();
        prop_assert!(f.div_exact(&s).is_some());
        prop_assert_eq!(real_root_count(&f), real_root_count(&s));
        for (root, _) in f.integer_roots() {
            prop_assert_eq!(s.eval(&root), BigInt::from(0));
        }
    }

    #[test]
    fn gcd_divides_both(p in small_poly(), q in small_poly(), c in small_poly()) {
        let (a, b) = (p.mul(&c), q.mul(&c));
        prop_assume!(!a.is_zero() && !b.is_zero());
        let g = a.gcd(&b);
        prop_assert!(a.div_exact(&g).is_some());
        prop_assert!(b.div_exact(&g).is_some());
        prop_assert!(c.degree() <= g.degree());
    }

    #[test]
    fn charpoly_of_symmetric_matrix_has_only_real_roots(seed in 0u64..500, n in 1usize..7) {
        let mut r = rng(seed);
        let a = random_matrix(&mut r, n, n, -3, 3);
        let s = a.add(&a.transpose()).unwrap();
        let phi = charpoly(&s).unwrap();
        let distinct = phi.squarefree().degree().unwrap();
        prop_assert_eq!(real_root_count(&phi), distinct);
    }
}
