mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use common::{corpus, petersen, rat, rook3};
use uvc::cert::{
    augmented_graph, canonical_gram, core_certificate, edge_gram_matrix, is_locally_injective_gram,
    spectral_data, uvc_test, uvc_test_from, uvc_test_gram, vector_chromatic, Reason, Verdict,
};
use uvc::exact::{bareiss_rank, IntMatrix};
use uvc::families::{binomial, hamming_h, hamming_h_word, kneser, kneser_vertices};
use uvc::hom::brute_force_hom;
use uvc::walkreg::is_one_walk_regular;
use uvc::{Error, Graph};

#[test]
fn projection_identities_on_corpus() {
    let mut checked = 0;
    for (name, g) in corpus() {
        let Ok(cg) = canonical_gram(&g) else { continue };
        checked += 1;
        let a = IntMatrix::adjacency(&g);
        let b = &cg.b;
        assert_eq!(a.mul(b).unwrap(), b.scale(&cg.tau), "{name}: AB = tau B");
        assert_eq!(b.mul(b).unwrap(), b.scale(&cg.c), "{name}: B^2 = cB");
        assert_eq!(b.trace(), &cg.c * BigInt::from(cg.d), "{name}: tr B = dc");
        assert!(cg.c.is_positive(), "{name}");
        let diag = b.get(0, 0);
        assert!((0..g.n()).all(|i| b.get(i, i) == diag), "{name}: constant diagonal");
        let edges = g.edges();
        let e0 = b.get(edges[0].i, edges[0].j);
        assert!(edges.iter().all(|e| b.get(e.i, e.j) == e0), "{name}: constant on edges");
        assert_eq!(cg.gram_entry(edges[0].i, edges[0].j), cg.edge_inner_product(), "{name}");
        assert_eq!(cg.gram_entry(0, 0), BigRational::one(), "{name}: unit vectors");
        // the Gram matrix has rank d
        assert_eq!(bareiss_rank(b), cg.d, "{name}");
        // and phi_tau(A) is recovered exactly
        let sd = spectral_data(&g).unwrap();
        assert_eq!(cg.phi_tau_matrix(), uvc::exact::eval_poly_at_matrix(&sd.phi_tau, &a).unwrap(), "{name}");
    }
    assert!(checked >= 15, "only {checked} corpus graphs were 1-walk-regular");
}

#[test]
fn coordinate_rank_equals_edge_gram_rank_on_corpus() {
    for (name, g) in corpus() {
        let Ok(cg) = canonical_gram(&g) else { continue };
        if g.edge_count() > 300 {
            continue;
        }
        assert_eq!(uvc_test_from(&cg, &g), uvc_test_gram(&cg, &g), "{name}");
        let m = edge_gram_matrix(&cg, &g);
        assert!(m.is_symmetric());
    }
}

#[test]
fn prism_is_outside_the_method() {
    let g = common::prism();
    assert!(!is_one_walk_regular(&g));
    assert_eq!(canonical_gram(&g), Err(Error::NotOneWalkRegular));
    let r = core_certificate(&g).unwrap();
    assert_eq!(r.reasons, vec![Reason::NotOneWalkRegular]);
    assert!(!r.is_certified());
}

fn kneser_inner_product(n: u32, r: u32, k: u32) -> BigRational {
    let gamma = rat(n as i64, r as i64);
    let one = BigRational::one();
    rat(k as i64, r as i64) * &gamma / (&gamma - &one) - one.clone() / (gamma - one)
}

#[test]
fn kneser_gram_matches_intersection_formula() {
    for (n, r) in [(5u32, 2u32), (7, 2), (7, 3), (6, 2)] {
        let g = kneser(n, r).unwrap();
        let cg = canonical_gram(&g).unwrap();
        let verts = kneser_vertices(n, r);
        for i in 0..g.n() {
            for j in 0..g.n() {
                let k = (verts[i] & verts[j]).count_ones();
                assert_eq!(cg.gram_entry(i, j), kneser_inner_product(n, r, k), "K({n},{r}) {i} {j}");
            }
        }
    }
}

#[test]
fn hamming_gram_matches_distance_formula() {
    for (n, k) in [(5u32, 4u32), (6, 4)] {
        let g = hamming_h(n, k).unwrap();
        let cg = canonical_gram(&g).unwrap();
        for i in 0..g.n() {
            for j in 0..g.n() {
                let dist = (hamming_h_word(n, i) ^ hamming_h_word(n, j)).count_ones() as i64;
                assert_eq!(cg.gram_entry(i, j), BigRational::one() - rat(2 * dist, n as i64));
            }
        }
    }
}

#[test]
fn kneser_spectra_and_chromatic_numbers() {
    for (n, r) in [(5u32, 2u32), (6, 2), (7, 2), (7, 3), (8, 3)] {
        let g = kneser(n, r).unwrap();
        let sd = spectral_data(&g).unwrap();
        assert_eq!(sd.tau, -BigInt::from(binomial((n - r - 1) as u64, (r - 1) as u64)));
        assert_eq!(sd.degree as u128, binomial((n - r) as u64, r as u64));
        assert_eq!(sd.d, n as usize - 1);
        assert_eq!(vector_chromatic(&g).unwrap(), rat(n as i64, r as i64));
    }
}

#[test]
fn table_rows_small() {
    assert_eq!(uvc_test(&rook3()).unwrap().verdict, Verdict::Loose);
    assert_eq!(uvc_test(&petersen()).unwrap().verdict, Verdict::Tight);
    assert_eq!(uvc_test(&petersen().complement()).unwrap().verdict, Verdict::Tight);
}

#[test]
fn certified_cores_have_no_retraction_to_a_vertex_deleted_subgraph() {
    for (name, g) in corpus() {
        if g.n() > 12 {
            continue;
        }
        let r = core_certificate(&g).unwrap();
        if r.is_certified() {
            let smaller = g.remove_vertex(0).unwrap();
            assert_eq!(brute_force_hom(&g, &smaller, 10_000_000).unwrap(), None, "{name}");
        }
    }
}

#[test]
fn injectivity_flags() {
    let g = petersen();
    let cg = canonical_gram(&g).unwrap();
    let inj = is_locally_injective_gram(&cg, &g);
    assert!(inj.injective && inj.locally_injective);
    // C_4: opposite vertices get the same vector
    let c4 = Graph::cycle(4);
    let cg = canonical_gram(&c4).unwrap();
    let inj = is_locally_injective_gram(&cg, &c4);
    assert!(!inj.injective && !inj.locally_injective);
}

#[test]
fn augmentation_contains_graph() {
    for (name, g) in corpus() {
        let Ok(a) = augmented_graph(&g) else { continue };
        assert!(g.is_spanning_subgraph_of(&a).unwrap(), "{name}");
    }
}
