mod common;

use common::*;
use vaserstein::linalg::{elementary_matrix, pfaffian, Matrix};
use vaserstein::projmod::{Iso, ModuleHom};
use vaserstein::symbol::{
    action_compatibility_witness, classical_vaserstein, chi_a_on, find_section,
    section_independence_witness, vaserstein_symbol, AutClass,
};
use vaserstein::witt::{ElementaryStep, ElementaryWord};

#[test]
fn sections_are_sections() {
    for c in section_cases() {
        c.epi.check_section(&c.s).unwrap_or_else(|e| panic!("{}: {e}", c.name));
        c.epi.check_section(&c.t).unwrap_or_else(|e| panic!("{}: {e}", c.name));
        find_section(&c.epi).unwrap();
    }
}

#[test]
fn symbol_is_section_independent() {
    for c in section_cases() {
        let w = section_independence_witness(&c.epi, &c.s, &c.t).unwrap_or_else(|e| panic!("{}: {e}", c.name));
        assert!(w.verified, "{}", c.name);
        assert!(w.chi_a_equal, "{}", c.name);
        let moved = chi_a_on(&c.epi, &w.with_s.kernel, &c.t, &w.with_s.line).unwrap();
        assert_eq!(moved.matrix(), w.with_s.chi_a.matrix(), "{}", c.name);
        assert_eq!(w.with_s.g0, w.with_t.g0, "{}", c.name);
    }
}

#[test]
fn free_symbol_has_unit_pfaffians() {
    let r = sphere();
    let c = &section_cases()[0];
    let sym = vaserstein_symbol(&c.epi, Some(&c.s)).unwrap();
    assert_eq!(sym.g1.matrix().rows(), 4);
    assert_eq!(pfaffian(sym.g0.matrix()).unwrap(), r.one());
    assert_eq!(pfaffian(sym.g1.matrix()).unwrap(), r.one());
}

#[test]
fn classical_symbol_over_sphere() {
    let r = sphere();
    let v = classical_vaserstein(&r, &elems(&r, &["x", "y", "z"]), &elems(&r, &["x", "y", "z"])).unwrap();
    assert_eq!(v.pfaffian().unwrap(), r.one());
}

#[test]
fn action_identities() {
    for c in section_cases() {
        let r = c.epi.ring().clone();
        let m = c.epi.module().clone();
        let k = m.ambient();
        // elementary move of the free coordinate by the first P0 generator
        let g = m.idempotent().col(0);
        let mut x = Matrix::identity(&r, k);
        for i in 0..k - 1 {
            x.set(i, k - 1, g.get(i, 0).clone());
        }
        let x = m.idempotent().mul(&x).unwrap().mul(m.idempotent()).unwrap();
        let phi = Iso::automorphism(ModuleHom::new(&m, &m, x).unwrap()).unwrap();
        let p0 = c.epi.p0().clone();
        let word = ElementaryWord::new(
            vec![p0.clone(), vaserstein::projmod::ProjModule::free(&r, 1)],
            vec![ElementaryStep::new(0, 1, g.block(0, 0, k - 1, 1))],
        )
        .unwrap();
        let w = action_compatibility_witness(&c.epi, &phi, &c.s, Some(&word)).unwrap_or_else(|e| panic!("{}: {e}", c.name));
        assert_eq!(w.class, AutClass::Elementary);
        assert!(w.intertwines_iso && w.intertwines_form);
    }
}

#[test]
fn action_by_general_automorphism_scales_form() {
    let z = vaserstein::Ring::integers();
    let c = &section_cases().into_iter().find(|c| c.name == "integers-last").unwrap();
    let m = c.epi.module().clone();
    let swap = Matrix::from_ints(&z, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    let phi = Iso::automorphism(ModuleHom::new(&m, &m, swap).unwrap()).unwrap();
    let w = action_compatibility_witness(&c.epi, &phi, &c.s, None).unwrap();
    assert_eq!(w.class, AutClass::General);
    assert_eq!(w.det, z.from_int(-1));
    let e = elementary_matrix(&z, 3, 2, 0, &z.from_int(3)).unwrap();
    let phi = Iso::automorphism(ModuleHom::new(&m, &m, e).unwrap()).unwrap();
    let w = action_compatibility_witness(&c.epi, &phi, &c.s, None).unwrap();
    assert_eq!(w.class, AutClass::DetOne);
}

#[test]
fn section_change_replays_in_v() {
    use vaserstein::witt::{congruence_witness, verify_witness, Certificate, Mode};
    for c in section_cases() {
        let w = section_independence_witness(&c.epi, &c.s, &c.t).unwrap();
        let mw = congruence_witness(&w.with_s.g0, &w.with_s.g1, &w.phi_l, Certificate::Elementary(w.word.clone())).unwrap();
        assert_eq!(mw.claim.rhs.terms()[0].1.f(), &w.with_t.g1, "{}", c.name);
        verify_witness(&mw, Mode::V).unwrap_or_else(|e| panic!("{}: {e}", c.name));
    }
}
