#![allow(dead_code)]

use vaserstein::linalg::Matrix;
use vaserstein::projmod::ProjModule;
use vaserstein::symbol::UnimodularEpi;
use vaserstein::{Elem, Ring};

pub const SPHERE: &str = "Q[x,y,z]/(x^2+y^2+z^2-1)";

pub fn sphere() -> Ring {
    Ring::parse(SPHERE).unwrap()
}

pub fn elems(r: &Ring, xs: &[&str]) -> Vec<Elem> {
    xs.iter().map(|x| r.parse_elem(x).unwrap()).collect()
}

pub fn ints(r: &Ring, xs: &[i64]) -> Vec<Elem> {
    xs.iter().map(|&x| r.from_int(x)).collect()
}

pub fn col(r: &Ring, xs: &[&str]) -> Matrix {
    Matrix::column(r, elems(r, xs))
}

/// Tangent bundle of the 2-sphere: `I - v v^T` for `v = (x, y, z)`.
pub fn tangent(r: &Ring) -> ProjModule {
    let e = Matrix::from_strings(
        r,
        &[
            vec!["1-x^2", "-x*y", "-x*z"],
            vec!["-x*y", "1-y^2", "-y*z"],
            vec!["-x*z", "-y*z", "1-z^2"],
        ],
    )
    .unwrap();
    ProjModule::new(e).unwrap()
}

pub struct SectionCase {
    pub name: &'static str,
    pub epi: UnimodularEpi,
    pub s: Matrix,
    pub t: Matrix,
}

/// Unimodular epimorphisms with two sections each.
pub fn section_cases() -> Vec<SectionCase> {
    let mut out = Vec::new();
    let r = sphere();
    let p0 = ProjModule::free(&r, 2);
    out.push(SectionCase {
        name: "sphere-free",
        epi: UnimodularEpi::from_elems(&p0, &elems(&r, &["x", "y", "z"])).unwrap(),
        s: col(&r, &["x", "y", "z"]),
        t: col(&r, &["x-y", "x+y", "z"]),
    });
    let tp = tangent(&r);
    let epi = UnimodularEpi::from_elems(&tp, &elems(&r, &["1-x^2", "-x*y", "-x*z", "x"])).unwrap();
    let s = col(&r, &["1-x^2", "-x*y", "-x*z", "x"]);
    let q = epi.module().idempotent().sub(&s.mul(epi.row()).unwrap()).unwrap();
    let t = s.add(&q.col(0)).unwrap();
    let t2 = s.sub(&q.col(1)).unwrap();
    out.push(SectionCase {
        name: "sphere-tangent",
        epi: epi.clone(),
        s: s.clone(),
        t,
    });
    out.push(SectionCase {
        name: "sphere-tangent-second",
        epi,
        s,
        t: t2,
    });
    let z = Ring::integers();
    let p0 = ProjModule::free(&z, 2);
    out.push(SectionCase {
        name: "integers-last",
        epi: UnimodularEpi::from_elems(&p0, &ints(&z, &[0, 0, 1])).unwrap(),
        s: Matrix::column(&z, ints(&z, &[0, 0, 1])),
        t: Matrix::column(&z, ints(&z, &[1, 0, 1])),
    });
    out.push(SectionCase {
        name: "integers-6-10-15",
        epi: UnimodularEpi::from_elems(&p0, &ints(&z, &[6, 10, 15])).unwrap(),
        s: Matrix::column(&z, ints(&z, &[1, 1, -1])),
        t: Matrix::column(&z, ints(&z, &[-4, 1, 1])),
    });
    let f5 = Ring::modular(5).unwrap();
    let p0 = ProjModule::free(&f5, 2);
    out.push(SectionCase {
        name: "mod5",
        epi: UnimodularEpi::from_elems(&p0, &ints(&f5, &[2, 0, 1])).unwrap(),
        s: Matrix::column(&f5, ints(&f5, &[3, 0, 0])),
        t: Matrix::column(&f5, ints(&f5, &[0, 0, 1])),
    });
    let qx = Ring::parse("Q[x]").unwrap();
    let p0 = ProjModule::free(&qx, 2);
    out.push(SectionCase {
        name: "polynomial",
        epi: UnimodularEpi::from_elems(&p0, &elems(&qx, &["x", "1-x", "x^2"])).unwrap(),
        s: col(&qx, &["1", "1", "0"]),
        t: col(&qx, &["2-x", "1-x", "0"]),
    });
    let f3 = Ring::galois(3).unwrap();
    let p0 = ProjModule::free(&f3, 2);
    out.push(SectionCase {
        name: "gf3",
        epi: UnimodularEpi::from_elems(&p0, &ints(&f3, &[1, 1, 1])).unwrap(),
        s: Matrix::column(&f3, ints(&f3, &[1, 0, 0])),
        t: Matrix::column(&f3, ints(&f3, &[0, 0, 1])),
    });
    out
}

/// Rings exercised by the property suites.
pub fn catalog_rings() -> Vec<Ring> {
    ["Z", "Q", "Z/6", "GF(5)", "GF(3)", "Q[x]", SPHERE]
        .iter()
        .map(|s| Ring::parse(s).unwrap())
        .collect()
}

pub fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix<R: rand::Rng>(r: &Ring, g: &mut R, rows: usize, cols: usize, size: i64) -> Matrix {
    let data = (0..rows * cols).map(|_| r.random_elem(g, size)).collect();
    Matrix::new(r, rows, cols, data).unwrap()
}

pub fn random_alternating<R: rand::Rng>(r: &Ring, g: &mut R, n: usize, size: i64) -> Matrix {
    let mut m = Matrix::zeros(r, n, n);
    for i in 0..n {
        for j in i + 1..n {
            let x = r.random_elem(g, size);
            m.set(j, i, r.neg(&x));
            m.set(i, j, x);
        }
    }
    m
}

/// Determinant by the Leibniz permutation sum.
pub fn leibniz_det(m: &Matrix) -> Elem {
    let r = m.ring().clone();
    let n = m.rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut acc = r.zero();
    permute(&mut perm, 0, &mut |p| {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        let mut t = r.one();
        for (i, &j) in p.iter().enumerate() {
            t = r.mul(&t, m.get(i, j));
        }
        acc = if inversions % 2 == 0 { r.add(&acc, &t) } else { r.sub(&acc, &t) };
    });
    acc
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

/// Pfaffian as a signed sum over perfect matchings.
pub fn matching_pfaffian(m: &Matrix) -> Elem {
    let r = m.ring().clone();
    let idx: Vec<usize> = (0..m.rows()).collect();
    matchings(m, &r, &idx)
}

fn matchings(m: &Matrix, r: &Ring, idx: &[usize]) -> Elem {
    if idx.is_empty() {
        return r.one();
    }
    let first = idx[0];
    let mut acc = r.zero();
    for k in 1..idx.len() {
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != idx[k]).collect();
        let term = r.mul(m.get(first, idx[k]), &matchings(m, r, &rest));
        acc = if k % 2 == 1 { r.add(&acc, &term) } else { r.sub(&acc, &term) };
    }
    acc
}

/// Random pairs with `a·b = 1`, built by moving a known pair with elementary
/// matrices: `(a E, E^{-1} b)`.
pub fn random_pairs(r: &Ring, count: usize, seed: u64) -> Vec<(Vec<Elem>, Vec<Elem>)> {
    use rand::Rng;
    let mut g = rng(seed);
    let base: Vec<(Vec<Elem>, Vec<Elem>)> = if r.poly_data().map(|d| d.vars.len() == 3).unwrap_or(false) {
        vec![(elems(r, &["x", "y", "z"]), elems(r, &["x", "y", "z"]))]
    } else if r.poly_data().is_some() {
        vec![(elems(r, &["1+x", "x", "0"]), elems(r, &["1", "-1", "0"]))]
    } else {
        vec![(ints(r, &[1, 0, 0]), ints(r, &[1, 0, 0]))]
    };
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let (mut a, mut b) = base[k % base.len()].clone();
        for _ in 0..g.gen_range(1..=3) {
            let i = g.gen_range(0..3);
            let j = (i + g.gen_range(1..3)) % 3;
            let c = r.random_elem(&mut g, 3);
            // a -> a E_ij(c): a_j += c a_i; b -> E_ij(-c) b: b_i -= c b_j
            a[j] = r.add(&a[j], &r.mul(&c, &a[i]));
            b[i] = r.sub(&b[i], &r.mul(&c, &b[j]));
        }
        out.push((a, b));
    }
    out
}

/// Replace the entry at `path` of a witness document by itself plus one.
pub fn corrupt_entry(doc: &serde_json::Value, ring: &Ring, path: &[vaserstein::report::PathStep]) -> serde_json::Value {
    let mut out = doc.clone();
    let slot = vaserstein::report::value_at_mut(&mut out, path).unwrap();
    let old = ring.parse_elem(slot.as_str().unwrap()).unwrap();
    *slot = serde_json::Value::String(ring.format(&ring.add(&old, &ring.one())));
    out
}

/// Decode and replay a witness document in its recorded mode.
pub fn replay_doc(doc: &serde_json::Value) -> vaserstein::Result<()> {
    let d = vaserstein::report::witness_from_json(doc)?;
    vaserstein::witt::verify_witness(&d.witness, d.mode)
}
