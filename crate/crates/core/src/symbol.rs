//! The classical symbol matrix and the generalized symbol of a unimodular
//! epimorphism `a: P0 ⊕ R -> R` with `P0` of rank 2.
//!
//! `L = Λ^2 P0` throughout. The canonical identification
//! `Λ^3 (P0 ⊕ R) ≅ Λ^2 P0` keeps the coordinates `(i, j, last)` of a
//! lexicographic `Λ^3` vector as the coordinates `(i, j)`.

use crate::error::{Error, Result};
use crate::linalg::{subsets, AlternatingMatrix, Matrix};
use crate::projmod::{chi0, dual, LineModule, ModuleHom, OrientedAltIso, Iso, ProjModule};
use crate::ring::{Elem, Ring};
use crate::linalg::pfaffian;
use crate::witt::search::{bounded_equiv_search, path_to_witness, SearchOptions};
use crate::witt::{
    congruence_witness, verify_witness, Certificate, ElementaryStep, ElementaryWord, FormalSum, Mode,
    MoveWitness, Triple,
};
use crate::Verdict;

/// The 4x4 matrix with rows `(0, -a1, -a2, -a3)`, `(a1, 0, -b3, b2)`,
/// `(a2, b3, 0, -b1)`, `(a3, -b2, b1, 0)`.
pub fn classical_vaserstein(ring: &Ring, a: &[Elem], b: &[Elem]) -> Result<AlternatingMatrix> {
    if a.len() != 3 || b.len() != 3 {
        return Err(Error::DimensionMismatch("rows of length 3 expected".into()));
    }
    let dot = ring.dot(a, b);
    if !ring.is_one(&dot) {
        return Err(Error::NotBezoutPair(ring.format(&dot)));
    }
    let z = ring.zero();
    let n = |x: &Elem| ring.neg(x);
    let rows = vec![
        vec![z.clone(), n(&a[0]), n(&a[1]), n(&a[2])],
        vec![a[0].clone(), z.clone(), n(&b[2]), b[1].clone()],
        vec![a[1].clone(), b[2].clone(), z.clone(), n(&b[0])],
        vec![a[2].clone(), n(&b[1]), b[0].clone(), z],
    ];
    AlternatingMatrix::check(Matrix::from_rows(ring, rows)?)
}

/// Minor of the rows `rows` of the 3-column matrix `[x y z]`.
fn minor3(x: &[Elem], y: &[Elem], z: &[Elem], rows: [usize; 3], r: &Ring) -> Elem {
    let m = |i: usize, c: usize| match c {
        0 => &x[rows[i]],
        1 => &y[rows[i]],
        _ => &z[rows[i]],
    };
    let t = |a: &Elem, b: &Elem, c: &Elem| r.mul(a, &r.mul(b, c));
    let pos = r.add(
        &r.add(&t(m(0, 0), m(1, 1), m(2, 2)), &t(m(0, 1), m(1, 2), m(2, 0))),
        &t(m(0, 2), m(1, 0), m(2, 1)),
    );
    let neg = r.add(
        &r.add(&t(m(0, 2), m(1, 1), m(2, 0)), &t(m(0, 0), m(1, 2), m(2, 1))),
        &t(m(0, 1), m(1, 0), m(2, 2)),
    );
    r.sub(&pos, &neg)
}

/// Coordinates `(i, j)` of `x ∧ y ∧ z` against the last basis vector:
/// `Λ^3 R^n -> Λ^2 R^{n-1}`.
pub fn contract_last(x: &[Elem], y: &[Elem], z: &[Elem], r: &Ring) -> Vec<Elem> {
    let n = x.len();
    subsets(n - 1, 2)
        .iter()
        .map(|s| minor3(x, y, z, [s[0], s[1], n - 1], r))
        .collect()
}

fn column(m: &Matrix, j: usize) -> Vec<Elem> {
    (0..m.rows()).map(|i| m.get(i, j).clone()).collect()
}

fn basis_vec(r: &Ring, n: usize, i: usize) -> Vec<Elem> {
    (0..n).map(|t| if t == i { r.one() } else { r.zero() }).collect()
}

/// A unimodular epimorphism `a: P0 ⊕ R -> R`, stored as a row with `a = a E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularEpi {
    p0: ProjModule,
    module: ProjModule,
    row: Matrix,
}

impl UnimodularEpi {
    pub fn new(p0: &ProjModule, row: Matrix) -> Result<UnimodularEpi> {
        let r = p0.ring().clone();
        let module = p0.direct_sum(&ProjModule::free(&r, 1))?;
        if row.rows() != 1 || row.cols() != module.ambient() {
            return Err(Error::DimensionMismatch(format!(
                "epimorphism row must be 1x{}",
                module.ambient()
            )));
        }
        if row.mul(module.idempotent())? != row {
            return Err(Error::NotModuleMap);
        }
        if r.bezout(row.entries()).is_none() {
            return Err(Error::NotUnimodular);
        }
        Ok(UnimodularEpi {
            p0: p0.clone(),
            module,
            row,
        })
    }

    pub fn from_elems(p0: &ProjModule, a: &[Elem]) -> Result<UnimodularEpi> {
        UnimodularEpi::new(p0, Matrix::row_vector(p0.ring(), a.to_vec()))
    }

    pub fn p0(&self) -> &ProjModule {
        &self.p0
    }

    /// `P0 ⊕ R`.
    pub fn module(&self) -> &ProjModule {
        &self.module
    }

    pub fn row(&self) -> &Matrix {
        &self.row
    }

    pub fn ring(&self) -> &Ring {
        self.p0.ring()
    }

    /// Check `a s = 1` and `s = E s`.
    pub fn check_section(&self, s: &Matrix) -> Result<()> {
        if s.rows() != self.module.ambient() || s.cols() != 1 {
            return Err(Error::NotSection);
        }
        if !self.module.contains(s)? || !self.row.mul(s)?.is_identity() {
            return Err(Error::NotSection);
        }
        Ok(())
    }

    /// Precomposition `a φ`.
    pub fn compose(&self, phi: &ModuleHom) -> Result<UnimodularEpi> {
        UnimodularEpi::new(&self.p0, self.row.mul(phi.matrix())?)
    }
}

/// Deterministic section `E b` where `b` is the Bezout witness of the row.
pub fn find_section(a: &UnimodularEpi) -> Result<Matrix> {
    let r = a.ring();
    let b = r.bezout(a.row.entries()).ok_or(Error::NotUnimodular)?;
    let s = a.module.idempotent().mul(&Matrix::column(r, b))?;
    a.check_section(&s)?;
    Ok(s)
}

/// `P(a) = ker a`, presented by `q = E - s a`.
pub fn kernel_module(a: &UnimodularEpi, s: &Matrix) -> Result<ProjModule> {
    a.check_section(s)?;
    let q = a.module.idempotent().sub(&s.mul(&a.row)?)?;
    let p = ProjModule::new(q)?;
    if !a.row.mul(p.idempotent())?.is_zero() || !p.idempotent().mul(s)?.is_zero() {
        return Err(Error::VerificationFailed("kernel projector is inconsistent".into()));
    }
    Ok(p)
}

/// `i_s: P0 ⊕ R -> P(a) ⊕ R`, `p -> (r(p), a(p))`, with inverse `(p', c) -> p' + s c`.
pub fn iso_is(a: &UnimodularEpi, s: &Matrix) -> Result<Iso> {
    let pa = kernel_module(a, s)?;
    let r = a.ring();
    let target = pa.direct_sum(&ProjModule::free(r, 1))?;
    let q = pa.idempotent();
    let fwd = q.vstack(&a.row)?;
    let back = q.hstack(s)?;
    Iso::new(
        ModuleHom::new(&a.module, &target, fwd)?,
        ModuleHom::new(&target, &a.module, back)?,
    )
}

/// The form `χ_a(q)(p) = ι(p ∧ q ∧ s)` on `P(a)`, valued in `line`.
pub fn chi_a_form(a: &UnimodularEpi, s: &Matrix, line: &LineModule) -> Result<OrientedAltIso> {
    let pa = kernel_module(a, s)?;
    chi_a_on(a, &pa, s, line)
}

/// `χ_a` built from the section `s` on a given presentation `pa` of `ker a`.
pub fn chi_a_on(a: &UnimodularEpi, pa: &ProjModule, s: &Matrix, line: &LineModule) -> Result<OrientedAltIso> {
    a.check_section(s)?;
    if !a.row.mul(pa.idempotent())?.is_zero() {
        return Err(Error::VerificationFailed("presentation is not contained in ker a".into()));
    }
    let r = a.ring().clone();
    let n = a.module.ambient();
    let m = line.ambient();
    if m != subsets(n - 1, 2).len() {
        return Err(Error::DimensionMismatch("line is not Λ^2 of P0".into()));
    }
    let sv = column(s, 0);
    let mut raw = Matrix::zeros(&r, m * n, n);
    for j in 0..n {
        for i in 0..n {
            let w = contract_last(&basis_vec(&r, n, i), &basis_vec(&r, n, j), &sv, &r);
            for (rr, x) in w.into_iter().enumerate() {
                raw.set(rr + m * i, j, x);
            }
        }
    }
    let pd = dual(pa, line)?;
    let f = pd.idempotent().mul(&raw)?.mul(pa.idempotent())?;
    OrientedAltIso::from_rank2(line, pa, f)
}

/// `θ: Λ^2 P0 -> Λ^2 P(a)`, `ω -> contraction of Λ^3(i_s)(ω ∧ e_R)`.
pub fn theta(a: &UnimodularEpi, s: &Matrix, line: &LineModule) -> Result<ModuleHom> {
    let is = iso_is(a, s)?;
    let pa = kernel_module(a, s)?;
    let r = a.ring().clone();
    let n = a.module.ambient();
    let k = n - 1;
    let x = is.map().matrix();
    let cols = subsets(k, 2);
    let l2 = pa.exterior_power(2);
    let mut raw = Matrix::zeros(&r, l2.ambient(), cols.len());
    for (c, uv) in cols.iter().enumerate() {
        let w = contract_last(&column(x, uv[0]), &column(x, uv[1]), &column(x, k), &r);
        for (rr, v) in w.into_iter().enumerate() {
            raw.set(rr, c, v);
        }
    }
    ModuleHom::compressed(line.module(), &l2, &raw)
}

/// Everything computed for one symbol `V(a)`.
#[derive(Clone, Debug)]
pub struct SymbolComputation {
    pub epi: UnimodularEpi,
    pub line: LineModule,
    pub section: Matrix,
    /// `r = id - s a` on `P0 ⊕ R`.
    pub retraction: Matrix,
    pub kernel: ProjModule,
    pub i_s: Iso,
    pub theta: ModuleHom,
    pub chi0: OrientedAltIso,
    pub chi_a: OrientedAltIso,
    /// `P0 ⊕ R ⊕ R^∨`.
    pub module: ProjModule,
    pub g0: OrientedAltIso,
    pub g1: OrientedAltIso,
}

impl SymbolComputation {
    pub fn triple(&self) -> Triple {
        Triple::new(self.g0.clone(), self.g1.clone()).expect("forms share a module")
    }
}

/// `(χ_a ⊥ H_L(R))` pulled back along `i_s ⊕ 1`.
fn second_form(
    a: &UnimodularEpi,
    s: &Matrix,
    line: &LineModule,
    chi_a: &OrientedAltIso,
) -> Result<OrientedAltIso> {
    let r = a.ring();
    let hyper = OrientedAltIso::hyperbolic(&ProjModule::free(r, 1), line)?;
    let rdual = dual(&ProjModule::free(r, 1), line)?;
    let is1 = iso_is(a, s)?.direct_sum(&Iso::identity(&rdual))?;
    chi_a.perp(&hyper)?.pullback(&is1)
}

/// The generalized symbol of `a`, using `section` or the canonical one.
pub fn vaserstein_symbol(a: &UnimodularEpi, section: Option<&Matrix>) -> Result<SymbolComputation> {
    let r = a.ring().clone();
    let (line, c0) = chi0(&a.p0)?;
    let s = match section {
        Some(s) => {
            a.check_section(s)?;
            s.clone()
        }
        None => find_section(a)?,
    };
    let kernel = kernel_module(a, &s)?;
    let n = a.module.ambient();
    let retraction = Matrix::identity(&r, n).sub(&s.mul(&a.row)?)?;
    let i_s = iso_is(a, &s)?;
    let chi_a = chi_a_form(a, &s, &line)?;
    let th = theta(a, &s, &line)?;
    check_theta(&kernel, &s, &line, &th)?;
    let rfree = ProjModule::free(&r, 1);
    let hyper = OrientedAltIso::hyperbolic(&rfree, &line)?;
    let g0 = c0.perp(&hyper)?;
    let g1 = second_form(a, &s, &line, &chi_a)?;
    let module = g0.module().clone();
    if g1.module() != &module {
        return Err(Error::VerificationFailed("the two forms live on different modules".into()));
    }
    Ok(SymbolComputation {
        epi: a.clone(),
        line,
        section: s,
        retraction,
        kernel,
        i_s,
        theta: th,
        chi0: c0,
        chi_a,
        module,
        g0,
        g1,
    })
}

/// `θ(ι(p ∧ q ∧ s)) = p ∧ q` on generators of `P(a)`.
fn check_theta(kernel: &ProjModule, s: &Matrix, line: &LineModule, th: &ModuleHom) -> Result<()> {
    let r = kernel.ring().clone();
    let q = kernel.idempotent();
    let n = q.rows();
    let sv = column(s, 0);
    let l2 = kernel.exterior_power(2);
    for ij in subsets(n, 2) {
        let (p, qq) = (column(q, ij[0]), column(q, ij[1]));
        let w = Matrix::column(&r, contract_last(&p, &qq, &sv, &r));
        let lhs = th.matrix().mul(&line.idempotent().mul(&w)?)?;
        let rhs = l2.idempotent().mul(&Matrix::column(&r, crate::projmod::wedge2(&p, &qq, &r)))?;
        if lhs != rhs {
            return Err(Error::VerificationFailed("θ does not invert the wedge description of χ_a".into()));
        }
    }
    Ok(())
}

/// `d_L: P0 ⊕ R -> R^∨ ≅ L`, `p -> ι(s ∧ t ∧ p)`.
pub fn d_l(a: &UnimodularEpi, s: &Matrix, t: &Matrix, line: &LineModule) -> Result<Matrix> {
    let r = a.ring().clone();
    let n = a.module.ambient();
    let (sv, tv) = (column(s, 0), column(t, 0));
    let mut raw = Matrix::zeros(&r, line.ambient(), n);
    for c in 0..n {
        let w = contract_last(&sv, &tv, &basis_vec(&r, n, c), &r);
        for (rr, x) in w.into_iter().enumerate() {
            raw.set(rr, c, x);
        }
    }
    line.idempotent().mul(&raw)?.mul(a.module.idempotent())
}

/// Result of the section-independence check.
#[derive(Clone, Debug)]
pub struct SectionWitness {
    pub with_s: SymbolComputation,
    pub with_t: SymbolComputation,
    pub d_l: Matrix,
    /// `id - d_L` on `P0 ⊕ R ⊕ R^∨`.
    pub phi_l: Iso,
    /// `φ_L` as a product of elementary generators for the summands `P0, R, R^∨`.
    pub word: ElementaryWord,
    pub chi_a_equal: bool,
    pub verified: bool,
}

/// Build `φ_L = id - d_L` and check `φ_L^∨ g_s φ_L = g_t` exactly.
pub fn section_independence_witness(a: &UnimodularEpi, s: &Matrix, t: &Matrix) -> Result<SectionWitness> {
    a.check_section(s)?;
    a.check_section(t)?;
    let with_s = vaserstein_symbol(a, Some(s))?;
    let with_t = vaserstein_symbol(a, Some(t))?;
    let line = with_s.line.clone();
    let r = a.ring().clone();
    let d = d_l(a, s, t, &line)?;
    let k1 = a.module.ambient();
    let m = line.ambient();
    let module = with_s.module.clone();
    let mut dm = Matrix::zeros(&r, k1 + m, k1 + m);
    dm.set_block(k1, 0, &d);
    let id = Matrix::identity(&r, k1 + m);
    let fwd = ModuleHom::compressed(&module, &module, &id.sub(&dm)?)?;
    let back = ModuleHom::compressed(&module, &module, &id.add(&dm)?)?;
    let phi_l = Iso::new(fwd, back)?;
    let k = k1 - 1;
    let word = ElementaryWord::new(
        vec![
            a.p0.clone(),
            ProjModule::free(&r, 1),
            dual(&ProjModule::free(&r, 1), &line)?,
        ],
        vec![
            ElementaryStep::new(2, 0, d.block(0, 0, m, k).neg()),
            ElementaryStep::new(2, 1, d.block(0, k, m, 1).neg()),
        ],
    )?;
    if word.product()?.map() != phi_l.map() {
        return Err(Error::VerificationFailed("φ_L differs from its generator word".into()));
    }
    let moved = with_s.g1.pullback(&phi_l)?;
    let verified = moved.matrix() == with_t.g1.matrix();
    if !verified {
        return Err(Error::VerificationFailed(
            "φ_L^∨ g_s φ_L differs from g_t".into(),
        ));
    }
    let chi_a_equal = chi_a_on(a, &with_s.kernel, t, &line)? == with_s.chi_a
        && chi_a_on(a, &with_t.kernel, s, &line)? == with_t.chi_a;
    Ok(SectionWitness {
        with_s,
        with_t,
        d_l: d,
        phi_l,
        word,
        chi_a_equal,
        verified,
    })
}

/// How an automorphism of `P0 ⊕ R` was certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AutClass {
    Elementary,
    DetOne,
    General,
}

impl AutClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            AutClass::Elementary => "elementary",
            AutClass::DetOne => "det_one",
            AutClass::General => "general",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ActionWitness {
    pub phi: Iso,
    pub det: Elem,
    pub class: AutClass,
    /// `φ^{-1} s`, a section of `a φ`.
    pub moved_section: Matrix,
    pub moved_epi: UnimodularEpi,
    /// `φ̄ = φ|: P(aφ) -> P(a)`.
    pub phi_bar: ModuleHom,
    pub intertwines_iso: bool,
    pub intertwines_form: bool,
}

/// Check `(i_s ⊕ 1)(φ ⊕ 1) = (φ̄ ⊕ 1 ⊕ 1)(i_{φ^{-1}s} ⊕ 1)` and
/// `φ̄^∨ χ_a φ̄ = det(φ) χ_{aφ}`; the second reads `φ̄^∨ χ_a φ̄ = χ_{aφ}` for
/// determinant one.
pub fn action_compatibility_witness(
    a: &UnimodularEpi,
    phi: &Iso,
    s: &Matrix,
    word: Option<&ElementaryWord>,
) -> Result<ActionWitness> {
    a.check_section(s)?;
    if phi.map().source() != &a.module || phi.map().target() != &a.module {
        return Err(Error::NotInvertible("φ must be an automorphism of P0 ⊕ R".into()));
    }
    let r = a.ring().clone();
    let det = phi.map().det()?;
    let class = match word {
        Some(w) => {
            if w.product()?.map() != phi.map() {
                return Err(Error::NotElementaryGenerator("word does not multiply to φ".into()));
            }
            AutClass::Elementary
        }
        None if r.is_one(&det) => AutClass::DetOne,
        None => AutClass::General,
    };
    let line = LineModule::new(a.p0.exterior_power(2))?;
    let moved_epi = a.compose(phi.map())?;
    let moved_section = phi.inverse().matrix().mul(s)?;
    moved_epi.check_section(&moved_section)?;
    let pa = kernel_module(a, s)?;
    let pa2 = kernel_module(&moved_epi, &moved_section)?;
    let phi_bar = ModuleHom::new(&pa2, &pa, phi.map().matrix().mul(pa2.idempotent())?)?;

    let is = iso_is(a, s)?;
    let is2 = iso_is(&moved_epi, &moved_section)?;
    let rdual = dual(&ProjModule::free(&r, 1), &line)?;
    let one = ModuleHom::identity(&ProjModule::free(&r, 1));
    let idd = ModuleHom::identity(&rdual);
    let lhs = is.map().direct_sum(&idd)?.compose(&phi.map().direct_sum(&idd)?)?;
    let rhs = phi_bar
        .direct_sum(&one)?
        .direct_sum(&idd)?
        .compose(&is2.map().direct_sum(&idd)?)?;
    let intertwines_iso = lhs == rhs;

    let chi_a = chi_a_form(a, s, &line)?;
    let chi_moved = chi_a_form(&moved_epi, &moved_section, &line)?;
    let dbar = crate::projmod::dual_of_hom(&phi_bar, &line)?;
    let pulled = dbar.compose(chi_a.hom())?.compose(&phi_bar)?;
    let intertwines_form = *pulled.matrix() == chi_moved.matrix().scale(&det);
    if !intertwines_iso || !intertwines_form {
        return Err(Error::VerificationFailed(format!(
            "intertwining identities: iso {intertwines_iso}, form {intertwines_form}"
        )));
    }
    Ok(ActionWitness {
        phi: phi.clone(),
        det,
        class,
        moved_section,
        moved_epi,
        phi_bar,
        intertwines_iso,
        intertwines_form,
    })
}

/// `[M, g0, g1(a)] = [M, g0, g1(aφ)]` by one congruence with `φ ⊕ 1`, in the
/// smallest mode admitting the certificate. `None` when `det φ != 1`, where
/// the two symbols differ by the determinant.
pub fn action_move_witness(
    a: &UnimodularEpi,
    phi: &Iso,
    s: &Matrix,
    word: Option<&ElementaryWord>,
) -> Result<Option<(MoveWitness, Mode)>> {
    let act = action_compatibility_witness(a, phi, s, word)?;
    if act.class == AutClass::General {
        return Ok(None);
    }
    let before = vaserstein_symbol(a, Some(s))?;
    let after = vaserstein_symbol(&act.moved_epi, Some(&act.moved_section))?;
    let r = a.ring().clone();
    let rdual = dual(&ProjModule::free(&r, 1), &before.line)?;
    let big = phi.direct_sum(&Iso::identity(&rdual))?;
    let (cert, mode) = match word {
        Some(w) => {
            let mut summands = w.summands().to_vec();
            summands.push(rdual.clone());
            (
                Certificate::Elementary(ElementaryWord::new(summands, w.steps().to_vec())?),
                Mode::V,
            )
        }
        None => (Certificate::DetOne, Mode::VSl),
    };
    let w = congruence_witness(&before.g0, &before.g1, &big, cert)?;
    let expected = FormalSum::single(after.triple());
    if !w.claim.rhs.same_as(&expected) {
        return Err(Error::VerificationFailed("(φ ⊕ 1)^∨ g1(a) (φ ⊕ 1) differs from g1(aφ)".into()));
    }
    verify_witness(&w, mode)?;
    Ok(Some((w, mode)))
}

/// Comparison of the symbol of `a` on a free `P0 = R^2` with the classical matrix.
#[derive(Clone, Debug)]
pub struct FreeCrosscheck {
    pub general: AlternatingMatrix,
    pub classical: AlternatingMatrix,
    pub pfaffian_general: Elem,
    pub pfaffian_classical: Elem,
    pub verdict: Verdict,
    pub explored: usize,
    pub witness: Option<MoveWitness>,
}

/// Search for a chain linking `g1(a)` to `V(a, b)` over `R^4` with standard `g0`.
pub fn free_crosscheck(ring: &Ring, a: &[Elem], b: Option<&[Elem]>, opts: &SearchOptions) -> Result<FreeCrosscheck> {
    let b = match b {
        Some(b) => b.to_vec(),
        None => ring.bezout(a).ok_or(Error::NotUnimodular)?,
    };
    let classical = classical_vaserstein(ring, a, &b)?;
    let p0 = ProjModule::free(ring, 2);
    let epi = UnimodularEpi::from_elems(&p0, a)?;
    let section = epi.module.idempotent().mul(&Matrix::column(ring, b))?;
    let sym = vaserstein_symbol(&epi, Some(&section))?;
    if sym.g0.matrix() != AlternatingMatrix::standard(ring, 2).matrix() {
        return Err(Error::VerificationFailed("g0 on a free module is not the standard form".into()));
    }
    let general = AlternatingMatrix::check(sym.g1.matrix().clone())?;
    let pfaffian_general = pfaffian(general.matrix())?;
    let pfaffian_classical = pfaffian(classical.matrix())?;
    if pfaffian_general != pfaffian_classical {
        return Err(Error::VerificationFailed("Pfaffians of the two symbols differ".into()));
    }
    let (verdict, explored, witness) = match bounded_equiv_search(&general, &classical, opts) {
        Ok(path) => {
            let w = path_to_witness(&general, &classical, &path.steps)?;
            verify_witness(&w, Mode::V)?;
            (Verdict::Verified, path.explored, Some(w))
        }
        Err(Error::SearchExhausted { explored }) => (Verdict::Inconclusive, explored, None),
        Err(e) => return Err(e),
    };
    Ok(FreeCrosscheck {
        general,
        classical,
        pfaffian_general,
        pfaffian_classical,
        verdict,
        explored,
        witness,
    })
}

/// `[M, g0, g1(s)] = [M, g0, g1(t)]` by the congruence `φ_L`.
pub fn section_move_witness(w: &SectionWitness) -> Result<MoveWitness> {
    let mw = congruence_witness(&w.with_s.g0, &w.with_s.g1, &w.phi_l, Certificate::Elementary(w.word.clone()))?;
    if !mw.claim.rhs.same_as(&FormalSum::single(w.with_t.triple())) {
        return Err(Error::VerificationFailed("φ_L does not carry g1(s) to g1(t)".into()));
    }
    Ok(mw)
}
