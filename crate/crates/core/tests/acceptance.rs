//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use rand::Rng;
use vaserstein::linalg::{elementary_matrix, pfaffian, AlternatingMatrix, Matrix};
use vaserstein::orbit::{e_generators, orbit_partition, symbol_constancy_check};
use vaserstein::projmod::{dual, Iso, ModuleHom, OrientedAltIso, ProjModule};
use vaserstein::report::{entry_paths, witness_json};
use vaserstein::symbol::{
    action_compatibility_witness, action_move_witness, chi_a_on, classical_vaserstein, free_crosscheck,
    section_independence_witness, section_move_witness, vaserstein_symbol, AutClass, UnimodularEpi,
};
use vaserstein::witt::search::SearchOptions;
use vaserstein::witt::{lemma21_witness, verify_witness, ElementaryStep, ElementaryWord, Mode};
use vaserstein::{Elem, Error, Ring, Verdict};

type Check = fn() -> Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    check: Check,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T>(r: vaserstein::Result<T>, ctx: impl FnOnce() -> String) -> Result<T, String> {
    r.map_err(|e| format!("{}: {e}", ctx()))
}

fn ring(s: &str) -> Ring {
    Ring::parse(s).unwrap()
}

fn pfaffian_one_law() -> Result<String, String> {
    let mut total = 0;
    for (k, spec) in ["Z", "Z/6", "GF(5)", "Q[x]", SPHERE].iter().enumerate() {
        let r = ring(spec);
        for (a, b) in random_pairs(&r, 200, 100 + k as u64) {
            let dot = a.iter().zip(&b).fold(r.zero(), |acc, (x, y)| r.add(&acc, &r.mul(x, y)));
            ensure(r.is_one(&dot), || format!("{spec}: generated pair is not unimodular"))?;
            let v = ok(classical_vaserstein(&r, &a, &b), || format!("{spec}: V(a, b)"))?;
            let pf = ok(v.pfaffian(), || spec.to_string())?;
            ensure(r.is_one(&pf) && matching_pfaffian(v.matrix()) == pf, || {
                format!("{spec}: Pf(V) = {} for a = {:?}", r.format(&pf), a)
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} pairs over 5 rings, Pf(V(a, b)) = 1"))
}

fn pfaffian_algebra() -> Result<String, String> {
    let mut g = rng(7);
    let mut total = 0;
    for r in catalog_rings() {
        for n in [2, 4, 6] {
            for _ in 0..50 {
                let a = random_alternating(&r, &mut g, n, 3);
                let pf = ok(pfaffian(&a), || format!("{r}: Pf"))?;
                let det = leibniz_det(&a);
                ensure(r.mul(&pf, &pf) == det && pf == matching_pfaffian(&a), || {
                    format!("{r}: Pf^2 != det at size {n}")
                })?;
                let m = random_matrix(&r, &mut g, n, n, 2);
                let moved = m.transpose().mul(&a).unwrap().mul(&m).unwrap();
                let lhs = ok(pfaffian(&moved), || format!("{r}: Pf(G^T A G)"))?;
                ensure(lhs == r.mul(&leibniz_det(&m), &pf), || format!("{r}: Pf(G^T A G) != det(G) Pf(A) at size {n}"))?;
                total += 1;
            }
        }
    }
    Ok(format!("{total} instances over {} rings at sizes 2, 4, 6", catalog_rings().len()))
}

fn section_suite() -> Result<String, String> {
    let cases = section_cases();
    ensure(cases.len() >= 6, || "fewer than 6 catalog instances".into())?;
    for c in &cases {
        let w = ok(section_independence_witness(&c.epi, &c.s, &c.t), || c.name.to_string())?;
        ensure(w.verified, || format!("{}: identity not verified", c.name))?;
        ensure(w.with_s.g0 == w.with_t.g0, || format!("{}: g0 depends on the section", c.name))?;
        let mw = ok(section_move_witness(&w), || c.name.to_string())?;
        ok(verify_witness(&mw, Mode::V), || format!("{}: replay", c.name))?;
    }
    Ok(format!("{} instances Verified (free over Z, Z/5, GF(3), Q[x], sphere; sphere tangent)", cases.len()))
}

fn nonzero(r: &Ring, g: &mut impl Rng) -> Elem {
    loop {
        let x = r.random_elem(g, 5);
        if !r.is_zero(&x) {
            return x;
        }
    }
}

fn action_suite() -> Result<String, String> {
    let mut g = rng(11);
    let mut generators = 0;
    let mut sl = 0;
    for (spec, row, unit) in [("Z", [6, 10, 15], -1), ("Z/5", [2, 0, 1], 2), ("GF(3)", [1, 1, 1], 2)] {
        let r = ring(spec);
        let p0 = ProjModule::free(&r, 2);
        let epi = UnimodularEpi::from_elems(&p0, &ints(&r, &row)).unwrap();
        let s = Matrix::column(&r, r.bezout(&ints(&r, &row)).unwrap());
        let m = epi.module().clone();
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    continue;
                }
                for _ in 0..3 {
                    let x = nonzero(&r, &mut g);
                    let e = elementary_matrix(&r, 3, i, j, &x).unwrap();
                    let phi = Iso::automorphism(ModuleHom::new(&m, &m, e).unwrap()).unwrap();
                    let word = ElementaryWord::new(
                        vec![ProjModule::free(&r, 1); 3],
                        vec![ElementaryStep::new(i, j, Matrix::column(&r, vec![x.clone()]))],
                    )
                    .unwrap();
                    let ctx = || format!("{spec}: E_{i}{j}({})", r.format(&x));
                    let w = ok(action_compatibility_witness(&epi, &phi, &s, Some(&word)), ctx)?;
                    ensure(w.intertwines_iso && w.intertwines_form && w.class == AutClass::Elementary, ctx)?;
                    let moved = ok(action_move_witness(&epi, &phi, &s, Some(&word)), ctx)?;
                    ensure(matches!(moved, Some((_, Mode::V))), ctx)?;
                    generators += 1;
                }
            }
        }
        let u = r.from_int(unit);
        let d = Matrix::from_rows(
            &r,
            vec![
                vec![u.clone(), r.zero(), r.zero()],
                vec![r.zero(), r.inverse(&u).unwrap(), r.zero()],
                vec![r.zero(), r.zero(), r.one()],
            ],
        )
        .unwrap();
        for k in 0..20 {
            let mut x = if k % 2 == 0 { d.clone() } else { Matrix::identity(&r, 3) };
            for _ in 0..4 {
                let i = g.gen_range(0..3);
                let j = (i + g.gen_range(1..3)) % 3;
                x = x.mul(&elementary_matrix(&r, 3, i, j, &nonzero(&r, &mut g)).unwrap()).unwrap();
            }
            let phi = Iso::automorphism(ModuleHom::new(&m, &m, x).unwrap()).unwrap();
            let ctx = || format!("{spec}: random SL element {k}");
            let w = ok(action_compatibility_witness(&epi, &phi, &s, None), ctx)?;
            ensure(w.intertwines_iso && w.intertwines_form && w.class == AutClass::DetOne, ctx)?;
            let moved = ok(action_move_witness(&epi, &phi, &s, None), ctx)?;
            ensure(matches!(moved, Some((_, Mode::VSl))), ctx)?;
            sl += 1;
        }
    }
    Ok(format!("{generators} elementary generators and {sl} SL elements over Z, Z/5, GF(3)"))
}

fn lemma21_suite() -> Result<String, String> {
    let mut g = rng(13);
    let mut count = 0;
    for r in catalog_rings() {
        let f = OrientedAltIso::from_free(AlternatingMatrix::standard(&r, 2).matrix()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                if i == j {
                    continue;
                }
                for x in [r.one(), nonzero(&r, &mut g)] {
                    let word = ElementaryWord::new(
                        vec![ProjModule::free(&r, 1); 4],
                        vec![ElementaryStep::new(i, j, Matrix::column(&r, vec![x.clone()]))],
                    )
                    .unwrap();
                    let ctx = || format!("{r}: E_{i}{j}({})", r.format(&x));
                    let w = ok(lemma21_witness(&word, &f), ctx)?;
                    ok(verify_witness(&w, Mode::V), ctx)?;
                    count += 1;
                }
            }
        }
    }
    let mut phi_l = 0;
    for c in section_cases() {
        let sw = ok(section_independence_witness(&c.epi, &c.s, &c.t), || c.name.to_string())?;
        let w = ok(lemma21_witness(&sw.word, &sw.with_s.g1), || format!("{}: φ_L", c.name))?;
        ok(verify_witness(&w, Mode::V), || format!("{}: φ_L replay", c.name))?;
        phi_l += 1;
        if c.name == "sphere-tangent" {
            // generators between the tangent summand and the free coordinate
            let sym = vaserstein_symbol(&c.epi, Some(&c.s)).unwrap();
            let p0 = c.epi.p0().clone();
            let k = p0.ambient();
            let r = c.epi.ring().clone();
            let rdual = dual(&ProjModule::free(&r, 1), &sym.line).unwrap();
            let into_p0 = p0.idempotent().col(0);
            let from_p0 = c.epi.row().block(0, 0, 1, k).mul(p0.idempotent()).unwrap();
            for step in [ElementaryStep::new(0, 1, into_p0), ElementaryStep::new(1, 0, from_p0)] {
                let word = ElementaryWord::new(vec![p0.clone(), ProjModule::free(&r, 1), rdual.clone()], vec![step]).unwrap();
                let w = ok(lemma21_witness(&word, &sym.g1), || "tangent generator".into())?;
                ok(verify_witness(&w, Mode::V), || "tangent generator replay".into())?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} generators over {} rings and {phi_l} section-change words", catalog_rings().len()))
}

fn chi_a_suite() -> Result<String, String> {
    let cases = section_cases();
    for c in &cases {
        let w = ok(section_independence_witness(&c.epi, &c.s, &c.t), || c.name.to_string())?;
        let from_t = ok(chi_a_on(&c.epi, &w.with_s.kernel, &c.t, &w.with_s.line), || c.name.to_string())?;
        let from_s = ok(chi_a_on(&c.epi, &w.with_t.kernel, &c.s, &w.with_t.line), || c.name.to_string())?;
        ensure(from_t.matrix() == w.with_s.chi_a.matrix(), || format!("{}: χ_a(t) != χ_a(s)", c.name))?;
        ensure(from_s.matrix() == w.with_t.chi_a.matrix(), || format!("{}: χ_a(s) != χ_a(t)", c.name))?;
        ensure(w.chi_a_equal, || format!("{}: witness flag", c.name))?;
    }
    Ok(format!("identical χ_a matrices on {} instances", cases.len()))
}

/// Every tuple over the ring with an explicit linear combination equal to one.
fn brute_force_um(r: &Ring, n: usize) -> Vec<Vec<Elem>> {
    let el = r.elements().unwrap();
    let mut rows: Vec<Vec<Elem>> = vec![vec![]];
    for _ in 0..n {
        rows = rows
            .into_iter()
            .flat_map(|row| el.iter().map(move |x| [row.clone(), vec![x.clone()]].concat()))
            .collect();
    }
    let combos = rows.clone();
    rows.into_iter()
        .filter(|a| {
            combos.iter().any(|b| {
                let dot = a.iter().zip(b).fold(r.zero(), |acc, (x, y)| r.add(&acc, &r.mul(x, y)));
                r.is_one(&dot)
            })
        })
        .collect()
}

fn finite_oracle() -> Result<String, String> {
    let mut parts = Vec::new();
    for (spec, n, expected) in [("GF(2)", 3, 7), ("GF(3)", 2, 8), ("Z/4", 3, 56)] {
        let r = ring(spec);
        let oracle = brute_force_um(&r, n);
        let listed = vaserstein::orbit::enumerate_um(&r, n).unwrap();
        ensure(oracle.len() == expected && listed == oracle, || {
            format!("{spec} n={n}: oracle {} rows, library {}", oracle.len(), listed.len())
        })?;
        let orbits = orbit_partition(&r, &oracle, &e_generators(&r, n).unwrap()).unwrap();
        ensure(orbits.len() == 1, || format!("{spec} n={n}: {} orbits", orbits.len()))?;
        parts.push(format!("{spec}^{n}: {expected} rows, 1 orbit"));
    }
    for spec in ["GF(2)", "GF(3)"] {
        let r = ring(spec);
        let rep = ok(symbol_constancy_check(&r, &SearchOptions::default()), || spec.to_string())?;
        let c = rep.symbol_constancy.unwrap();
        ensure(c.iter().all(|o| o.verdict == Verdict::Verified), || format!("{spec}: constancy not Verified"))?;
        parts.push(format!("constancy {spec} Verified ({} linked)", c.iter().map(|o| o.linked).sum::<usize>()));
    }
    Ok(parts.join("; "))
}

fn fuzz_suite() -> Result<String, String> {
    let z = Ring::integers();
    let mut docs = Vec::new();
    let word = ElementaryWord::new(
        vec![ProjModule::free(&z, 1); 4],
        vec![ElementaryStep::new(0, 2, Matrix::from_ints(&z, &[&[2]]))],
    )
    .unwrap();
    let f = OrientedAltIso::from_free(AlternatingMatrix::standard(&z, 2).matrix()).unwrap();
    docs.push((z.clone(), witness_json(&z, Mode::V, &lemma21_witness(&word, &f).unwrap())));
    for c in section_cases().into_iter().filter(|c| ["integers-6-10-15", "mod5", "gf3"].contains(&c.name)) {
        let sw = section_independence_witness(&c.epi, &c.s, &c.t).unwrap();
        let r = c.epi.ring().clone();
        docs.push((r.clone(), witness_json(&r, Mode::V, &section_move_witness(&sw).unwrap())));
    }
    let cross = free_crosscheck(&z, &ints(&z, &[1, 0, 0]), None, &SearchOptions::default()).unwrap();
    docs.push((z.clone(), witness_json(&z, Mode::V, &cross.witness.unwrap())));

    let mut g = rng(17);
    let mut trials = 0;
    for (k, (r, doc)) in docs.iter().enumerate() {
        ok(replay_doc(doc), || format!("document {k} does not verify before corruption"))?;
        let paths = entry_paths(doc);
        for _ in 0..110 {
            let path = &paths[g.gen_range(0..paths.len())];
            match replay_doc(&corrupt_entry(doc, r, path)) {
                Err(Error::WitnessInvalid { .. }) => trials += 1,
                Ok(()) => return Err(format!("document {k}: corruption at {path:?} verified")),
                Err(e) => return Err(format!("document {k}: corruption at {path:?} gave {e}")),
            }
        }
    }
    Ok(format!("{trials} corruptions of {} witnesses, all WitnessInvalid", docs.len()))
}

fn crosscheck_suite() -> Result<String, String> {
    let z = Ring::integers();
    let mut parts = Vec::new();
    for a in [[1, 0, 0], [0, 0, 1]] {
        let c = ok(free_crosscheck(&z, &ints(&z, &a), None, &SearchOptions::default()), || format!("{a:?}"))?;
        ensure(c.verdict == Verdict::Verified, || format!("Z {a:?}: {}", c.verdict.as_str()))?;
        ensure(c.pfaffian_general == c.pfaffian_classical, || format!("Z {a:?}: Pfaffians differ"))?;
        parts.push(format!("Z ({}, {}, {}) Verified", a[0], a[1], a[2]));
    }
    let rest: [(&str, [&str; 3]); 8] = [
        ("Z", ["6", "10", "15"]),
        ("Q", ["2", "3", "0"]),
        ("Z/6", ["2", "3", "0"]),
        ("GF(5)", ["2", "0", "1"]),
        ("GF(3)", ["1", "1", "1"]),
        ("Q[x]", ["x", "1-x", "x^2"]),
        (SPHERE, ["x", "y", "z"]),
        (SPHERE, ["z", "x", "y"]),
    ];
    for (spec, a) in rest {
        let r = ring(spec);
        let opts = SearchOptions { max_depth: 6, ..SearchOptions::default() };
        match free_crosscheck(&r, &elems(&r, &a), None, &opts) {
            Ok(c) => {
                ensure(c.verdict != Verdict::Falsified, || format!("{spec} ({}): Falsified", a.join(", ")))?;
                ensure(c.pfaffian_general == c.pfaffian_classical, || format!("{spec} {a:?}: Pfaffians differ"))?;
                parts.push(format!("{spec} ({}) {}", a.join(", "), c.verdict.as_str()));
            }
            Err(e) => return Err(format!("{spec} {a:?}: {e}")),
        }
    }
    Ok(parts.join("; "))
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, name: "Pfaffian-one law for V(a, b)", limit: secs(30), check: pfaffian_one_law },
        Criterion { id: 2, name: "Pfaffian algebra", limit: secs(60), check: pfaffian_algebra },
        Criterion { id: 3, name: "section independence witnesses", limit: secs(120), check: section_suite },
        Criterion { id: 4, name: "action compatibility witnesses", limit: secs(120), check: action_suite },
        Criterion { id: 5, name: "elementary congruence witnesses", limit: secs(60), check: lemma21_suite },
        Criterion { id: 6, name: "section independence of χ_a", limit: None, check: chi_a_suite },
        Criterion { id: 7, name: "finite-ring orbit oracle", limit: secs(120), check: finite_oracle },
        Criterion { id: 8, name: "witness corruption fuzzing", limit: None, check: fuzz_suite },
        Criterion { id: 9, name: "free-case crosscheck", limit: None, check: crosscheck_suite },
    ];
    let mut failed = 0;
    for c in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("over the {}s limit", limit.as_secs())),
            (o, _) => o,
        };
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} [{}] {}: {detail} ({:.1}s)", c.id, c.name, elapsed.as_secs_f64());
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
