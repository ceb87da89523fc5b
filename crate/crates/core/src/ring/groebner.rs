//! Buchberger's algorithm, normal forms, and unit-ideal certificates with
//! cofactor tracking.

use std::collections::VecDeque;

use num_rational::BigRational;
use super::poly::{BaseField, Monomial, Poly};

/// Remainder of full multivariate division of `p` by `basis`.
///
/// When `basis` is a Gröbner basis the result is the unique normal form.
pub fn normal_form(p: &Poly, basis: &[Poly], field: &BaseField) -> Poly {
    if basis.is_empty() || p.is_zero() {
        return p.clone();
    }
    let mut rest = p.clone();
    let mut rem = Poly::zero();
    while let Some((lm, lc)) = rest.leading() {
        let (lm, lc) = (lm.clone(), lc.clone());
        match basis
            .iter()
            .find(|g| g.leading().is_some_and(|(gm, _)| gm.divides(&lm)))
        {
            Some(g) => {
                let (gm, gc) = g.leading().unwrap();
                let factor = field.mul(&lc, &field.inv(gc).unwrap());
                let shift = gm.quotient_of(&lm);
                rest = rest.sub(&g.scale_term(&shift, &factor, field), field);
            }
            None => {
                let t = Poly::monomial(lm, lc);
                rest = rest.sub(&t, field);
                rem = rem.add(&t, field);
            }
        }
    }
    rem
}

fn s_polynomial(f: &Poly, g: &Poly, field: &BaseField) -> (Poly, (Monomial, BigRational), (Monomial, BigRational)) {
    let (fm, fc) = f.leading().unwrap();
    let (gm, gc) = g.leading().unwrap();
    let l = fm.lcm(gm);
    let cf = (fm.quotient_of(&l), field.inv(fc).unwrap());
    let cg = (gm.quotient_of(&l), field.inv(gc).unwrap());
    let s = f
        .scale_term(&cf.0, &cf.1, field)
        .sub(&g.scale_term(&cg.0, &cg.1, field), field);
    (s, cf, cg)
}

/// Reduced Gröbner basis of the ideal generated by `gens`, sorted by
/// ascending leading monomial. Deterministic for a given input.
pub fn groebner_basis(gens: &[Poly], field: &BaseField) -> Vec<Poly> {
    let mut basis: Vec<Poly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.make_monic(field))
        .collect();
    let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push_back((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop_front() {
        let (lmi, lmj) = (basis[i].leading().unwrap().0, basis[j].leading().unwrap().0);
        if lmi.coprime(lmj) {
            continue;
        }
        let (s, _, _) = s_polynomial(&basis[i], &basis[j], field);
        let r = normal_form(&s, &basis, field);
        if !r.is_zero() {
            let r = r.make_monic(field);
            let k = basis.len();
            basis.push(r);
            for i in 0..k {
                pairs.push_back((i, k));
            }
        }
    }
    reduce_basis(basis, field)
}

fn reduce_basis(basis: Vec<Poly>, field: &BaseField) -> Vec<Poly> {
    // drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<Poly> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let lm = g.leading().unwrap().0;
        let redundant = basis.iter().enumerate().any(|(jdx, h)| {
            let hm = h.leading().unwrap().0;
            jdx != idx && hm.divides(lm) && (hm != lm || jdx < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let (lm, lc) = minimal[i].leading().unwrap();
        let head = Poly::monomial(lm.clone(), lc.clone());
        let tail = normal_form(&minimal[i].sub(&head, field), &others, field);
        reduced.push(head.add(&tail, field).make_monic(field));
    }
    reduced.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    reduced
}

/// Working polynomial together with its cofactors against the tracked inputs.
#[derive(Clone)]
struct Tracked {
    poly: Poly,
    cofactors: Vec<Poly>,
}

impl Tracked {
    fn combine(&self, other: &Tracked, m1: &(Monomial, BigRational), m2: &(Monomial, BigRational), field: &BaseField, basis: &[Poly]) -> Tracked {
        let poly = self
            .poly
            .scale_term(&m1.0, &m1.1, field)
            .sub(&other.poly.scale_term(&m2.0, &m2.1, field), field);
        let cofactors = self
            .cofactors
            .iter()
            .zip(&other.cofactors)
            .map(|(a, b)| {
                let c = a
                    .scale_term(&m1.0, &m1.1, field)
                    .sub(&b.scale_term(&m2.0, &m2.1, field), field);
                normal_form(&c, basis, field)
            })
            .collect();
        Tracked { poly, cofactors }
    }
}

/// Cofactors `b` with `sum b_i a_i ≡ 1` modulo the ideal with Gröbner basis
/// `basis`, or `None` when the `a_i` together with the ideal do not generate
/// the unit ideal. Ideal cofactors are discarded; the returned `b_i` are
/// normal forms.
pub fn unit_ideal_cofactors(
    elems: &[Poly],
    basis: &[Poly],
    nvars: usize,
    field: &BaseField,
) -> Option<Vec<Poly>> {
    let n = elems.len();
    let zero_cof = vec![Poly::zero(); n];
    let mut work: Vec<Tracked> = basis
        .iter()
        .map(|g| Tracked {
            poly: g.clone(),
            cofactors: zero_cof.clone(),
        })
        .collect();
    let n_ideal = work.len();
    let finish = |t: &Tracked| -> Option<Vec<Poly>> {
        let c = t.poly.as_constant()?;
        let inv = field.inv(&c)?;
        Some(
            t.cofactors
                .iter()
                .map(|p| p.scale_term(&Monomial::one(nvars), &inv, field))
                .collect(),
        )
    };
    let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
    for (i, a) in elems.iter().enumerate() {
        let mut cof = zero_cof.clone();
        cof[i] = Poly::constant(nvars, BigRational::from_integer(1.into()));
        let t = reduce_tracked(
            Tracked {
                poly: normal_form(a, basis, field),
                cofactors: cof,
            },
            &work,
            field,
            basis,
        );
        if t.poly.is_zero() {
            continue;
        }
        if let Some(b) = finish(&t) {
            return Some(b);
        }
        let k = work.len();
        work.push(t);
        for j in 0..k {
            pairs.push_back((j, k));
        }
    }
    while let Some((i, j)) = pairs.pop_front() {
        if i < n_ideal && j < n_ideal {
            continue;
        }
        let (lmi, lmj) = (work[i].poly.leading().unwrap().0, work[j].poly.leading().unwrap().0);
        if lmi.coprime(lmj) {
            continue;
        }
        let (_, cf, cg) = s_polynomial(&work[i].poly, &work[j].poly, field);
        let s = work[i].combine(&work[j], &cf, &cg, field, basis);
        let r = reduce_tracked(s, &work, field, basis);
        if r.poly.is_zero() {
            continue;
        }
        if let Some(b) = finish(&r) {
            return Some(b);
        }
        let k = work.len();
        work.push(r);
        for i in 0..k {
            pairs.push_back((i, k));
        }
    }
    None
}

fn reduce_tracked(mut t: Tracked, work: &[Tracked], field: &BaseField, basis: &[Poly]) -> Tracked {
    // top-reduce, then tail-reduce term by term
    let mut rem = Tracked {
        poly: Poly::zero(),
        cofactors: t.cofactors.clone(),
    };
    while let Some((lm, lc)) = t.poly.leading() {
        let (lm, lc) = (lm.clone(), lc.clone());
        let divisor = work
            .iter()
            .find(|w| w.poly.leading().is_some_and(|(wm, _)| wm.divides(&lm)));
        match divisor {
            Some(w) => {
                let (wm, wc) = w.poly.leading().unwrap();
                let factor = field.mul(&lc, &field.inv(wc).unwrap());
                let shift = wm.quotient_of(&lm);
                t.poly = t.poly.sub(&w.poly.scale_term(&shift, &factor, field), field);
                rem.cofactors = rem
                    .cofactors
                    .iter()
                    .zip(&w.cofactors)
                    .map(|(a, b)| {
                        if b.is_zero() {
                            a.clone()
                        } else {
                            normal_form(&a.sub(&b.scale_term(&shift, &factor, field), field), basis, field)
                        }
                    })
                    .collect();
            }
            None => {
                let term = Poly::monomial(lm, lc);
                t.poly = t.poly.sub(&term, field);
                rem.poly = rem.poly.add(&term, field);
            }
        }
    }
    rem
}
