mod common;

use common::*;
use rand::Rng;
use vaserstein::linalg::{pfaffian, AlternatingMatrix, Matrix};
use vaserstein::symbol::classical_vaserstein;
use vaserstein::Ring;

fn entry_size(r: &Ring) -> i64 {
    if r.poly_data().is_some() {
        2
    } else {
        9
    }
}

#[test]
fn determinant_is_multiplicative_and_matches_leibniz() {
    for r in catalog_rings() {
        let mut g = rng(11);
        let s = entry_size(&r);
        for k in 0..200 {
            let n = 1 + k % 4;
            let m = random_matrix(&r, &mut g, n, n, s);
            let p = random_matrix(&r, &mut g, n, n, s);
            let dm = m.det().unwrap();
            assert_eq!(m.mul(&p).unwrap().det().unwrap(), r.mul(&dm, &p.det().unwrap()), "{r}");
            if k % 5 == 0 {
                assert_eq!(dm, leibniz_det(&m), "{r}");
            }
        }
    }
}

#[test]
fn adjugate_and_inverse() {
    for r in catalog_rings() {
        let mut g = rng(12);
        for n in 1..=4 {
            let m = random_matrix(&r, &mut g, n, n, entry_size(&r));
            let adj = m.adjugate().unwrap();
            let d = m.det().unwrap();
            assert_eq!(m.mul(&adj).unwrap(), Matrix::identity(&r, n).scale(&d), "{r}");
            if let Some(u) = r.inverse(&d) {
                assert_eq!(m.inverse().unwrap(), adj.scale(&u));
            }
        }
    }
}

#[test]
fn pfaffian_squares_to_determinant() {
    for r in catalog_rings() {
        let mut g = rng(13);
        for n in [2, 4, 6] {
            for _ in 0..50 {
                let a = random_alternating(&r, &mut g, n, entry_size(&r));
                let pf = pfaffian(&a).unwrap();
                assert_eq!(pf, matching_pfaffian(&a), "{r}");
                assert_eq!(r.mul(&pf, &pf), a.det().unwrap(), "{r} size {n}");
            }
        }
    }
}

#[test]
fn pfaffian_transforms_by_determinant_under_congruence() {
    for r in catalog_rings() {
        let mut g = rng(14);
        for n in [2, 4, 6] {
            for _ in 0..50 {
                let a = AlternatingMatrix::check(random_alternating(&r, &mut g, n, entry_size(&r))).unwrap();
                let gm = random_matrix(&r, &mut g, n, n, entry_size(&r));
                let c = a.congruence(&gm).unwrap();
                assert_eq!(c.pfaffian().unwrap(), r.mul(&gm.det().unwrap(), &a.pfaffian().unwrap()), "{r}");
            }
        }
    }
}

#[test]
fn odd_pfaffian_is_rejected() {
    let r = Ring::integers();
    assert!(matches!(
        pfaffian(&Matrix::zeros(&r, 3, 3)),
        Err(vaserstein::Error::OddSize(3))
    ));
    assert_eq!(pfaffian(&Matrix::zeros(&r, 0, 0)).unwrap(), r.one());
}

#[test]
fn classical_symbol_has_unit_pfaffian() {
    for spec in ["Z", "Z/6", "GF(5)", "Q[x]", SPHERE] {
        let r = Ring::parse(spec).unwrap();
        for (a, b) in random_pairs(&r, 200, 15) {
            assert!(r.is_one(&r.dot(&a, &b)));
            let v = classical_vaserstein(&r, &a, &b).unwrap();
            assert!(r.is_one(&v.pfaffian().unwrap()), "{spec}");
            assert!(r.is_one(&matching_pfaffian(v.matrix())));
        }
    }
}

#[test]
fn elementary_congruence_keeps_alternating() {
    let r = Ring::galois(5).unwrap();
    let mut g = rng(16);
    let mut a = AlternatingMatrix::standard(&r, 3);
    for _ in 0..100 {
        let i = g.gen_range(0..6);
        let j = (i + g.gen_range(1..6)) % 6;
        let e = vaserstein::linalg::elementary_matrix(&r, 6, i, j, &r.random_elem(&mut g, 4)).unwrap();
        a = a.congruence(&e).unwrap();
        assert!(AlternatingMatrix::check(a.matrix().clone()).is_ok());
        assert!(r.is_one(&a.pfaffian().unwrap()));
    }
}
