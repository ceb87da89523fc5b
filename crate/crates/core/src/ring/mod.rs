//! Catalog of effective commutative rings with canonical element forms.
//!
//! A [`Ring`] is a cheap, shareable handle; ring elements are plain
//! [`Elem`] payloads interpreted by the ring that owns them. Every payload
//! is kept in canonical form so that element equality is payload equality.

pub mod groebner;
mod parse;
pub mod poly;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use poly::{BaseField, Monomial, Poly};

pub use parse::parse_ring_spec;

/// The ring kinds supported by the catalog.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Integers,
    Rationals,
    ModularIntegers(u64),
    GaloisField(u64),
    PolyRing(PolyData),
    QuotientRing(PolyData),
}

/// Polynomial ring data. For a plain polynomial ring `ideal` and `basis` are
/// empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyData {
    pub base: BaseField,
    pub vars: Vec<String>,
    pub ideal: Vec<Poly>,
    /// Reduced Gröbner basis of `ideal` under grevlex.
    pub basis: Vec<Poly>,
}

impl PolyData {
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }
}

/// Shareable handle on a ring of the catalog.
#[derive(Clone)]
pub struct Ring(Arc<RingKind>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({self})")
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            RingKind::Integers => write!(f, "Z"),
            RingKind::Rationals => write!(f, "Q"),
            RingKind::ModularIntegers(n) => write!(f, "Z/{n}"),
            RingKind::GaloisField(p) => write!(f, "GF({p})"),
            RingKind::PolyRing(d) => write!(f, "{}[{}]", base_name(&d.base), d.vars.join(",")),
            RingKind::QuotientRing(d) => {
                let gens: Vec<String> = d.ideal.iter().map(|g| g.format(&d.vars)).collect();
                write!(f, "{}[{}]/({})", base_name(&d.base), d.vars.join(","), gens.join(","))
            }
        }
    }
}

fn base_name(b: &BaseField) -> String {
    match b {
        BaseField::Rationals => "Q".into(),
        BaseField::Prime(p) => format!("GF({p})"),
    }
}

/// Canonical element payload.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Int(BigInt),
    Residue(u64),
    Rational(BigRational),
    Poly(Poly),
}

impl Ring {
    pub fn new(kind: RingKind) -> Result<Ring> {
        match &kind {
            RingKind::ModularIntegers(n) if *n < 2 => {
                return Err(Error::SpecSyntax(format!("modulus {n} must be at least 2")))
            }
            RingKind::GaloisField(p) if !is_prime(*p) => {
                return Err(Error::SpecSyntax(format!("GF({p}): characteristic must be prime")))
            }
            RingKind::PolyRing(d) | RingKind::QuotientRing(d) => {
                if let BaseField::Prime(p) = d.base {
                    if !is_prime(p) {
                        return Err(Error::SpecSyntax(format!("GF({p}): characteristic must be prime")));
                    }
                }
                if d.vars.is_empty() {
                    return Err(Error::SpecSyntax("polynomial ring needs variables".into()));
                }
            }
            _ => {}
        }
        Ok(Ring(Arc::new(kind)))
    }

    pub fn integers() -> Ring {
        Ring(Arc::new(RingKind::Integers))
    }

    pub fn rationals() -> Ring {
        Ring(Arc::new(RingKind::Rationals))
    }

    pub fn modular(n: u64) -> Result<Ring> {
        Ring::new(RingKind::ModularIntegers(n))
    }

    pub fn galois(p: u64) -> Result<Ring> {
        Ring::new(RingKind::GaloisField(p))
    }

    /// `base[vars]` or `base[vars]/(ideal)`, with the Gröbner basis computed here.
    pub fn polynomial(base: BaseField, vars: Vec<String>, ideal: Vec<Poly>) -> Result<Ring> {
        if ideal.is_empty() {
            return Ring::new(RingKind::PolyRing(PolyData {
                base,
                vars,
                ideal,
                basis: Vec::new(),
            }));
        }
        let basis = groebner::groebner_basis(&ideal, &base);
        Ring::new(RingKind::QuotientRing(PolyData {
            base,
            vars,
            ideal,
            basis,
        }))
    }

    pub fn parse(text: &str) -> Result<Ring> {
        parse_ring_spec(text)
    }

    pub fn kind(&self) -> &RingKind {
        &self.0
    }

    pub fn poly_data(&self) -> Option<&PolyData> {
        match self.kind() {
            RingKind::PolyRing(d) | RingKind::QuotientRing(d) => Some(d),
            _ => None,
        }
    }

    pub fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.to_string(), other.to_string()))
        }
    }

    /// Characteristic-free test of whether the ring is a field in the catalog.
    pub fn is_field(&self) -> bool {
        matches!(self.kind(), RingKind::Rationals | RingKind::GaloisField(_))
    }

    pub fn zero(&self) -> Elem {
        self.from_int(0)
    }

    pub fn one(&self) -> Elem {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Elem {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Elem {
        match self.kind() {
            RingKind::Integers => Elem::Int(n.clone()),
            RingKind::Rationals => Elem::Rational(BigRational::from_integer(n.clone())),
            RingKind::ModularIntegers(m) | RingKind::GaloisField(m) => {
                Elem::Residue(n.mod_floor(&BigInt::from(*m)).to_u64().unwrap())
            }
            RingKind::PolyRing(d) | RingKind::QuotientRing(d) => {
                let c = d.base.from_int(n);
                Elem::Poly(self.reduce(Poly::constant(d.nvars(), c)))
            }
        }
    }

    /// Variable `i` of a polynomial or quotient ring.
    pub fn var(&self, i: usize) -> Option<Elem> {
        let d = self.poly_data()?;
        (i < d.nvars()).then(|| {
            Elem::Poly(self.reduce(Poly::monomial(
                Monomial::var(d.nvars(), i),
                BigRational::one(),
            )))
        })
    }

    fn reduce(&self, p: Poly) -> Poly {
        match self.kind() {
            RingKind::QuotientRing(d) => groebner::normal_form(&p, &d.basis, &d.base),
            _ => p,
        }
    }

    fn modulus(&self) -> Option<u64> {
        match self.kind() {
            RingKind::ModularIntegers(m) | RingKind::GaloisField(m) => Some(*m),
            _ => None,
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Int(x), Elem::Int(y)) => Elem::Int(x + y),
            (Elem::Rational(x), Elem::Rational(y)) => Elem::Rational(x + y),
            (Elem::Residue(x), Elem::Residue(y)) => {
                let m = self.modulus().unwrap() as u128;
                Elem::Residue(((*x as u128 + *y as u128) % m) as u64)
            }
            (Elem::Poly(x), Elem::Poly(y)) => {
                Elem::Poly(x.add(y, &self.poly_data().unwrap().base))
            }
            _ => panic!("element payload does not belong to ring {self}"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match a {
            Elem::Int(x) => Elem::Int(-x),
            Elem::Rational(x) => Elem::Rational(-x),
            Elem::Residue(x) => {
                let m = self.modulus().unwrap();
                Elem::Residue(if *x == 0 { 0 } else { m - x })
            }
            Elem::Poly(x) => Elem::Poly(x.neg(&self.poly_data().unwrap().base)),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Int(x), Elem::Int(y)) => Elem::Int(x * y),
            (Elem::Rational(x), Elem::Rational(y)) => Elem::Rational(x * y),
            (Elem::Residue(x), Elem::Residue(y)) => {
                let m = self.modulus().unwrap() as u128;
                Elem::Residue(((*x as u128 * *y as u128) % m) as u64)
            }
            (Elem::Poly(x), Elem::Poly(y)) => {
                if x.is_zero() || y.is_zero() {
                    return Elem::Poly(Poly::zero());
                }
                let d = self.poly_data().unwrap();
                Elem::Poly(self.reduce(x.mul(y, &d.base)))
            }
            _ => panic!("element payload does not belong to ring {self}"),
        }
    }

    pub fn pow(&self, a: &Elem, mut e: u32) -> Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Int(x) => x.is_zero(),
            Elem::Rational(x) => x.is_zero(),
            Elem::Residue(x) => *x == 0,
            Elem::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    /// Sum of a sequence of elements.
    pub fn sum<'a>(&self, it: impl IntoIterator<Item = &'a Elem>) -> Elem {
        it.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// `sum a_i b_i`.
    pub fn dot(&self, a: &[Elem], b: &[Elem]) -> Elem {
        a.iter()
            .zip(b)
            .fold(self.zero(), |acc, (x, y)| self.add(&acc, &self.mul(x, y)))
    }

    /// Whether `a` is a well-formed canonical payload of this ring.
    pub fn contains(&self, a: &Elem) -> bool {
        match (self.kind(), a) {
            (RingKind::Integers, Elem::Int(_)) => true,
            (RingKind::Rationals, Elem::Rational(_)) => true,
            (RingKind::ModularIntegers(m) | RingKind::GaloisField(m), Elem::Residue(x)) => x < m,
            (RingKind::PolyRing(d) | RingKind::QuotientRing(d), Elem::Poly(p)) => {
                p.terms().all(|(m, c)| m.0.len() == d.nvars() && d.base.canon(c.clone()) == *c)
                    && self.reduce(p.clone()) == *p
            }
            _ => false,
        }
    }

    /// Multiplicative inverse, when `a` is a unit.
    pub fn inverse(&self, a: &Elem) -> Option<Elem> {
        match (self.kind(), a) {
            (RingKind::Integers, Elem::Int(x)) => {
                (x.is_one() || (-x).is_one()).then(|| Elem::Int(x.clone()))
            }
            (RingKind::Rationals, Elem::Rational(x)) => {
                (!x.is_zero()).then(|| Elem::Rational(x.recip()))
            }
            (RingKind::ModularIntegers(m) | RingKind::GaloisField(m), Elem::Residue(x)) => {
                poly::mod_inverse(&BigInt::from(*x), &BigInt::from(*m))
                    .map(|v| Elem::Residue(v.to_u64().unwrap()))
            }
            (RingKind::PolyRing(d) | RingKind::QuotientRing(d), Elem::Poly(p)) => {
                if let Some(c) = p.as_constant() {
                    if let Some(inv) = d.base.inv(&c) {
                        return Some(Elem::Poly(Poly::constant(d.nvars(), inv)));
                    }
                    if c.is_zero() && matches!(self.kind(), RingKind::PolyRing(_)) {
                        return None;
                    }
                }
                if matches!(self.kind(), RingKind::PolyRing(_)) {
                    return None;
                }
                let b = groebner::unit_ideal_cofactors(std::slice::from_ref(p), &d.basis, d.nvars(), &d.base)?;
                let inv = Elem::Poly(b.into_iter().next().unwrap());
                self.is_one(&self.mul(a, &inv)).then_some(inv)
            }
            _ => None,
        }
    }

    /// Coefficients `b` with `sum a_i b_i = 1`, verified before returning,
    /// or `None` if the `a_i` do not generate the unit ideal.
    pub fn bezout(&self, a: &[Elem]) -> Option<Vec<Elem>> {
        if a.is_empty() {
            return None;
        }
        let b = match self.kind() {
            RingKind::Integers => {
                let ints: Vec<BigInt> = a.iter().map(|x| self.as_bigint(x)).collect();
                integer_bezout(&ints)?.into_iter().map(Elem::Int).collect()
            }
            RingKind::ModularIntegers(m) | RingKind::GaloisField(m) => {
                let mut ints: Vec<BigInt> = a.iter().map(|x| self.as_bigint(x)).collect();
                ints.push(BigInt::from(*m));
                let mut b = integer_bezout(&ints)?;
                b.pop();
                b.iter().map(|x| self.from_bigint(x)).collect()
            }
            RingKind::Rationals => unit_pick(self, a)?,
            RingKind::PolyRing(d) | RingKind::QuotientRing(d) => match unit_pick(self, a) {
                Some(b) => b,
                None => {
                    let polys: Vec<Poly> = a
                        .iter()
                        .map(|x| match x {
                            Elem::Poly(p) => p.clone(),
                            _ => panic!("element payload does not belong to ring {self}"),
                        })
                        .collect();
                    groebner::unit_ideal_cofactors(&polys, &d.basis, d.nvars(), &d.base)?
                        .into_iter()
                        .map(|p| Elem::Poly(self.reduce(p)))
                        .collect()
                }
            },
        };
        self.is_one(&self.dot(a, &b)).then_some(b)
    }

    /// Integer lift of an element of `Z`, `Z/n` or `GF(p)`.
    pub fn as_bigint(&self, a: &Elem) -> BigInt {
        match a {
            Elem::Int(x) => x.clone(),
            Elem::Residue(x) => BigInt::from(*x),
            _ => panic!("element has no integer lift"),
        }
    }

    pub fn format(&self, a: &Elem) -> String {
        match a {
            Elem::Int(x) => x.to_string(),
            Elem::Residue(x) => x.to_string(),
            Elem::Rational(x) => x.to_string(),
            Elem::Poly(p) => p.format(&self.poly_data().unwrap().vars),
        }
    }

    pub fn parse_elem(&self, text: &str) -> Result<Elem> {
        parse::parse_element(self, text)
    }

    pub fn is_finite(&self) -> bool {
        self.elements().is_some()
    }

    /// All elements of a finite ring in a fixed order, `None` otherwise.
    pub fn elements(&self) -> Option<Vec<Elem>> {
        match self.kind() {
            RingKind::ModularIntegers(m) | RingKind::GaloisField(m) => {
                Some((0..*m).map(Elem::Residue).collect())
            }
            RingKind::QuotientRing(d) => {
                let BaseField::Prime(p) = d.base else { return None };
                let standard = standard_monomials(d)?;
                let mut out = vec![Poly::zero()];
                for m in &standard {
                    let mut next = Vec::with_capacity(out.len() * p as usize);
                    for q in &out {
                        for c in 0..p {
                            let t = Poly::monomial(m.clone(), BigRational::from_integer(c.into()));
                            next.push(q.add(&t, &d.base));
                        }
                    }
                    out = next;
                }
                Some(out.into_iter().map(Elem::Poly).collect())
            }
            _ => None,
        }
    }

    /// Random element with "small" size parameter `size`.
    pub fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R, size: i64) -> Elem {
        match self.kind() {
            RingKind::Integers => Elem::Int(BigInt::from(rng.gen_range(-size..=size))),
            RingKind::Rationals => {
                let n = rng.gen_range(-size..=size);
                let d = rng.gen_range(1..=size.max(1));
                Elem::Rational(BigRational::new(n.into(), d.into()))
            }
            RingKind::ModularIntegers(m) | RingKind::GaloisField(m) => {
                Elem::Residue(rng.gen_range(0..*m))
            }
            RingKind::PolyRing(d) | RingKind::QuotientRing(d) => {
                let n = d.nvars();
                let mut p = Poly::zero();
                let nterms = rng.gen_range(0..=3);
                for _ in 0..nterms {
                    let mut e = vec![0u32; n];
                    for _ in 0..rng.gen_range(0..=2) {
                        e[rng.gen_range(0..n)] += 1;
                    }
                    let c = d.base.from_int(&BigInt::from(rng.gen_range(-size..=size)));
                    p = p.add(&Poly::monomial(Monomial(e), c), &d.base);
                }
                Elem::Poly(self.reduce(p))
            }
        }
    }
}

fn unit_pick(ring: &Ring, a: &[Elem]) -> Option<Vec<Elem>> {
    // a single cheap unit among the entries settles it
    for (i, x) in a.iter().enumerate() {
        let cheap = match x {
            Elem::Poly(p) => p.as_constant().is_some(),
            _ => true,
        };
        if cheap {
            if let Some(inv) = ring.inverse(x) {
                let mut b = vec![ring.zero(); a.len()];
                b[i] = inv;
                return Some(b);
            }
        }
    }
    None
}

/// Left-to-right extended gcd fold: `sum a_i b_i = ±gcd`, rescaled to 1.
fn integer_bezout(a: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut g = a[0].clone();
    let mut coeffs = vec![BigInt::one()];
    for x in &a[1..] {
        let e = g.extended_gcd(x);
        for c in coeffs.iter_mut() {
            *c *= &e.x;
        }
        coeffs.push(e.y);
        g = e.gcd;
    }
    if g.is_one() {
        Some(coeffs)
    } else if (-&g).is_one() {
        Some(coeffs.into_iter().map(|c| -c).collect())
    } else {
        None
    }
}

/// Monomials outside the leading-term ideal, if finitely many.
fn standard_monomials(d: &PolyData) -> Option<Vec<Monomial>> {
    let n = d.nvars();
    let leads: Vec<&Monomial> = d.basis.iter().map(|g| g.leading().unwrap().0).collect();
    let mut bounds = vec![0u32; n];
    for (i, b) in bounds.iter_mut().enumerate() {
        *b = leads
            .iter()
            .filter(|m| m.0.iter().enumerate().all(|(j, &e)| (j == i) == (e > 0)))
            .map(|m| m.0[i])
            .min()?;
    }
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    loop {
        let m = Monomial(e.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        let mut k = 0;
        loop {
            if k == n {
                out.sort();
                return Some(out);
            }
            e[k] += 1;
            if e[k] < bounds[k] {
                break;
            }
            e[k] = 0;
            k += 1;
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element bundled with its owning ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    pub ring: Ring,
    pub value: Elem,
}

impl RingElement {
    pub fn new(ring: &Ring, value: Elem) -> Self {
        RingElement {
            ring: ring.clone(),
            value,
        }
    }

    pub fn parse(ring: &Ring, text: &str) -> Result<Self> {
        Ok(RingElement::new(ring, ring.parse_elem(text)?))
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.ring.check_same(&other.ring)?;
        Ok(RingElement::new(&self.ring, self.ring.add(&self.value, &other.value)))
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.ring.check_same(&other.ring)?;
        Ok(RingElement::new(&self.ring, self.ring.mul(&self.value, &other.value)))
    }

    pub fn neg(&self) -> RingElement {
        RingElement::new(&self.ring, self.ring.neg(&self.value))
    }

    pub fn equals(&self, other: &RingElement) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        Ok(self.value == other.value)
    }

    pub fn inverse(&self) -> Option<RingElement> {
        self.ring
            .inverse(&self.value)
            .map(|v| RingElement::new(&self.ring, v))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format(&self.value))
    }
}

/// Bezout witness for a row of bundled elements.
pub fn bezout_witness(a: &[RingElement]) -> Result<Option<Vec<RingElement>>> {
    let Some(first) = a.first() else { return Ok(None) };
    for x in a {
        first.ring.check_same(&x.ring)?;
    }
    let vals: Vec<Elem> = a.iter().map(|x| x.value.clone()).collect();
    Ok(first
        .ring
        .bezout(&vals)
        .map(|b| b.into_iter().map(|v| RingElement::new(&first.ring, v)).collect()))
}
