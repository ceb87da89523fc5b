//! Relation-presented groups of triples `[P, g, f]` and replayable move
//! witnesses certifying equalities between formal sums of triples.
//!
//! Every move rewrites `amount` copies of one relation instance, so a replay
//! is sound regardless of the coefficients present in the state.

pub mod search;

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{pfaffian, Matrix};
use crate::projmod::{Iso, LineModule, ModuleHom, OrientedAltIso, ProjModule};

/// Which of the three groups a witness is checked in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    V,
    VSl,
    VGl,
}

impl Mode {
    pub fn parse(s: &str) -> Result<Mode> {
        match s {
            "V" => Ok(Mode::V),
            "V_SL" => Ok(Mode::VSl),
            "V_GL" => Ok(Mode::VGl),
            _ => Err(Error::SpecSyntax(format!("unknown mode {s:?}; use V, V_SL or V_GL"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::V => "V",
            Mode::VSl => "V_SL",
            Mode::VGl => "V_GL",
        })
    }
}

/// Two alternating isomorphisms `g`, `f` on the same module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    g: OrientedAltIso,
    f: OrientedAltIso,
}

impl Triple {
    pub fn new(g: OrientedAltIso, f: OrientedAltIso) -> Result<Triple> {
        if g.module() != f.module() {
            return Err(Error::DimensionMismatch("forms of a triple live on different modules".into()));
        }
        if g.line() != f.line() {
            return Err(Error::DimensionMismatch("forms of a triple use different lines".into()));
        }
        Ok(Triple { g, f })
    }

    pub fn module(&self) -> &ProjModule {
        self.g.module()
    }

    pub fn line(&self) -> &LineModule {
        self.g.line()
    }

    pub fn g(&self) -> &OrientedAltIso {
        &self.g
    }

    pub fn f(&self) -> &OrientedAltIso {
        &self.f
    }
}

/// Integer combination of triples, kept merged with zero entries dropped;
/// terms keep the order of their first appearance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalSum {
    terms: Vec<(i64, Triple)>,
}

impl FormalSum {
    pub fn new() -> FormalSum {
        FormalSum::default()
    }

    pub fn single(t: Triple) -> FormalSum {
        let mut s = FormalSum::new();
        s.add(1, t);
        s
    }

    pub fn from_terms(terms: Vec<(i64, Triple)>) -> FormalSum {
        let mut s = FormalSum::new();
        for (c, t) in terms {
            s.add(c, t);
        }
        s
    }

    pub fn terms(&self) -> &[(i64, Triple)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&mut self, c: i64, t: Triple) {
        if c == 0 {
            return;
        }
        if let Some(pos) = self.position(&t) {
            self.terms[pos].0 += c;
            if self.terms[pos].0 == 0 {
                self.terms.remove(pos);
            }
        } else {
            self.terms.push((c, t));
        }
    }

    pub fn position(&self, t: &Triple) -> Option<usize> {
        self.terms.iter().position(|(_, u)| u == t)
    }

    /// Equality as elements of the free abelian group.
    pub fn same_as(&self, other: &FormalSum) -> bool {
        self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .all(|(c, t)| other.position(t).is_some_and(|p| other.terms[p].0 == *c))
    }
}

/// An equality of formal sums to be certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub lhs: FormalSum,
    pub rhs: FormalSum,
}

/// One generator `id + s` with `s: P_j -> P_i` of an elementary word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryStep {
    pub i: usize,
    pub j: usize,
    pub map: Matrix,
}

impl ElementaryStep {
    pub fn new(i: usize, j: usize, map: Matrix) -> ElementaryStep {
        ElementaryStep { i, j, map }
    }
}

/// A product of elementary generators relative to a direct-sum decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryWord {
    summands: Vec<ProjModule>,
    steps: Vec<ElementaryStep>,
}

impl ElementaryWord {
    pub fn new(summands: Vec<ProjModule>, steps: Vec<ElementaryStep>) -> Result<ElementaryWord> {
        if summands.is_empty() {
            return Err(Error::NotElementaryGenerator("no summands".into()));
        }
        for st in &steps {
            let n = summands.len();
            if st.i == st.j || st.i >= n || st.j >= n {
                return Err(Error::NotElementaryGenerator(format!(
                    "summand indices ({}, {}) for {n} summands",
                    st.i, st.j
                )));
            }
            ModuleHom::new(&summands[st.j], &summands[st.i], st.map.clone())
                .map_err(|e| Error::NotElementaryGenerator(format!("step map: {e}")))?;
        }
        Ok(ElementaryWord { summands, steps })
    }

    pub fn summands(&self) -> &[ProjModule] {
        &self.summands
    }

    pub fn steps(&self) -> &[ElementaryStep] {
        &self.steps
    }

    pub fn module(&self) -> ProjModule {
        let mut m = self.summands[0].clone();
        for s in &self.summands[1..] {
            m = m.direct_sum(s).unwrap();
        }
        m
    }

    fn offset(&self, idx: usize) -> usize {
        self.summands[..idx].iter().map(ProjModule::ambient).sum()
    }

    /// The automorphism `id + s` of step `t`, with inverse `id - s`.
    pub fn generator(&self, t: usize) -> Result<Iso> {
        let st = &self.steps[t];
        let m = self.module();
        let mut nil = Matrix::zeros(m.ring(), m.ambient(), m.ambient());
        nil.set_block(self.offset(st.i), self.offset(st.j), &st.map);
        let fwd = m.idempotent().add(&nil)?;
        let back = m.idempotent().sub(&nil)?;
        Iso::new(ModuleHom::new(&m, &m, fwd)?, ModuleHom::new(&m, &m, back)?)
    }

    /// Product of the generators in order.
    pub fn product(&self) -> Result<Iso> {
        let mut acc = Iso::identity(&self.module());
        for t in 0..self.steps.len() {
            acc = acc.compose(&self.generator(t)?)?;
        }
        Ok(acc)
    }

    fn without_trivial(&self) -> ElementaryWord {
        ElementaryWord {
            summands: self.summands.clone(),
            steps: self.steps.iter().filter(|s| !s.map.is_zero()).cloned().collect(),
        }
    }
}

/// Why a congruence is admissible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Elementary(ElementaryWord),
    DetOne,
    General,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// `[P ⊕ P', g ⊥ g', f ⊥ f'] -> [P, g, f] + [P', g', f']`, split at ambient index `at`.
    PerpSplit { term: usize, at: usize, amount: i64 },
    /// Inverse of `PerpSplit`.
    PerpJoin { first: usize, second: usize, amount: i64 },
    /// `[P, h, f] -> [P, g, f] + [P, h, g]`.
    ChainInsert { term: usize, middle: OrientedAltIso, amount: i64 },
    /// `[P, g, f] + [P, h, g] -> [P, h, f]`.
    ChainJoin { first: usize, second: usize, amount: i64 },
    /// `[P, g, f] -> [P, g, φ^∨ f φ]`.
    Congruence { term: usize, phi: Iso, certificate: Certificate, amount: i64 },
    /// `[P, g, f] -> [N, φ^∨ g φ, φ^∨ f φ]` for an isomorphism `φ: N -> P`.
    Isometry { term: usize, phi: Iso, amount: i64 },
    /// Add `[P, f, f]`.
    Stabilize { form: OrientedAltIso, amount: i64 },
    /// Remove `[P, f, f]`.
    Destabilize { term: usize, amount: i64 },
    /// `[P, g, f] -> -[P, f, g]`.
    Antisymmetry { term: usize, amount: i64 },
}

impl Move {
    pub fn name(&self) -> &'static str {
        match self {
            Move::PerpSplit { .. } => "perp_split",
            Move::PerpJoin { .. } => "perp_join",
            Move::ChainInsert { .. } => "chain_insert",
            Move::ChainJoin { .. } => "chain_join",
            Move::Congruence { .. } => "congruence",
            Move::Isometry { .. } => "isometry",
            Move::Stabilize { .. } => "stabilize",
            Move::Destabilize { .. } => "destabilize",
            Move::Antisymmetry { .. } => "antisymmetry",
        }
    }
}

/// A claim together with the moves transforming its left side into its right side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveWitness {
    pub line: LineModule,
    pub claim: Claim,
    pub moves: Vec<Move>,
}

/// Replays a chain of moves on a formal sum.
#[derive(Clone, Debug)]
pub struct Replay {
    line: LineModule,
    mode: Mode,
    state: FormalSum,
    applied: usize,
}

fn invalid(index: usize, reason: impl Into<String>) -> Error {
    Error::WitnessInvalid {
        index,
        reason: reason.into(),
    }
}

impl Replay {
    pub fn new(line: &LineModule, mode: Mode, start: FormalSum) -> Result<Replay> {
        for (_, t) in start.terms() {
            if t.line() != line {
                return Err(invalid(0, "claim triple uses a different line"));
            }
        }
        Ok(Replay {
            line: line.clone(),
            mode,
            state: start,
            applied: 0,
        })
    }

    pub fn state(&self) -> &FormalSum {
        &self.state
    }

    fn term(&self, idx: usize) -> Result<Triple> {
        self.state
            .terms
            .get(idx)
            .map(|(_, t)| t.clone())
            .ok_or_else(|| invalid(self.applied, format!("no term {idx} in a state of {} terms", self.state.len())))
    }

    fn check_form(&self, f: &OrientedAltIso) -> Result<()> {
        if f.line() != &self.line {
            return Err(invalid(self.applied, "form uses a different line"));
        }
        Ok(())
    }

    /// Apply one move; errors carry the move index.
    pub fn apply(&mut self, mv: &Move) -> Result<()> {
        let index = self.applied;
        let wrap = |e: Error| match e {
            Error::WitnessInvalid { .. } | Error::ModeViolation { .. } | Error::VerificationFailed(_) => e,
            other => invalid(index, other.to_string()),
        };
        self.apply_inner(mv).map_err(wrap)?;
        self.applied += 1;
        Ok(())
    }

    fn apply_inner(&mut self, mv: &Move) -> Result<()> {
        let index = self.applied;
        let amount = match mv {
            Move::PerpSplit { amount, .. }
            | Move::PerpJoin { amount, .. }
            | Move::ChainInsert { amount, .. }
            | Move::ChainJoin { amount, .. }
            | Move::Congruence { amount, .. }
            | Move::Isometry { amount, .. }
            | Move::Stabilize { amount, .. }
            | Move::Destabilize { amount, .. }
            | Move::Antisymmetry { amount, .. } => *amount,
        };
        if amount == 0 {
            return Err(invalid(index, "zero amount"));
        }
        match mv {
            Move::PerpSplit { term, at, .. } => {
                let t = self.term(*term)?;
                let (a, b) = split_triple(&t, *at)?;
                self.state.add(-amount, t);
                self.state.add(amount, a);
                self.state.add(amount, b);
            }
            Move::PerpJoin { first, second, .. } => {
                let (a, b) = (self.term(*first)?, self.term(*second)?);
                let joined = Triple::new(a.g.perp(&b.g)?, a.f.perp(&b.f)?)?;
                self.state.add(-amount, a);
                self.state.add(-amount, b);
                self.state.add(amount, joined);
            }
            Move::ChainInsert { term, middle, .. } => {
                self.check_form(middle)?;
                let t = self.term(*term)?;
                let left = Triple::new(middle.clone(), t.f.clone())?;
                let right = Triple::new(t.g.clone(), middle.clone())?;
                self.state.add(-amount, t);
                self.state.add(amount, left);
                self.state.add(amount, right);
            }
            Move::ChainJoin { first, second, .. } => {
                let (a, b) = (self.term(*first)?, self.term(*second)?);
                if a.g != b.f {
                    return Err(invalid(index, "middle forms of the chain do not agree"));
                }
                let joined = Triple::new(b.g.clone(), a.f.clone())?;
                self.state.add(-amount, a);
                self.state.add(-amount, b);
                self.state.add(amount, joined);
            }
            Move::Congruence {
                term,
                phi,
                certificate,
                ..
            } => {
                let t = self.term(*term)?;
                if phi.map().source() != t.module() || phi.map().target() != t.module() {
                    return Err(invalid(index, "congruence by a map that is not an automorphism of the module"));
                }
                self.check_certificate(phi, certificate, &t)?;
                let moved = t.f.pullback(phi)?;
                self.check_pfaffian(&t.f, &moved, phi)?;
                let out = Triple::new(t.g.clone(), moved)?;
                self.state.add(-amount, t);
                self.state.add(amount, out);
            }
            Move::Isometry { term, phi, .. } => {
                let t = self.term(*term)?;
                if phi.map().target() != t.module() {
                    return Err(invalid(index, "isometry does not land in the term's module"));
                }
                let out = Triple::new(t.g.pullback(phi)?, t.f.pullback(phi)?)?;
                self.state.add(-amount, t);
                self.state.add(amount, out);
            }
            Move::Stabilize { form, .. } => {
                self.check_form(form)?;
                self.state.add(amount, Triple::new(form.clone(), form.clone())?);
            }
            Move::Destabilize { term, .. } => {
                let t = self.term(*term)?;
                if t.g != t.f {
                    return Err(invalid(index, "destabilized term has distinct forms"));
                }
                self.state.add(-amount, t);
            }
            Move::Antisymmetry { term, .. } => {
                let t = self.term(*term)?;
                let flipped = Triple::new(t.f.clone(), t.g.clone())?;
                self.state.add(-amount, t);
                self.state.add(-amount, flipped);
            }
        }
        Ok(())
    }

    fn check_certificate(&self, phi: &Iso, cert: &Certificate, t: &Triple) -> Result<()> {
        let index = self.applied;
        let violation = |reason: &str| Error::ModeViolation {
            index,
            mode: self.mode.to_string(),
            reason: reason.into(),
        };
        match cert {
            Certificate::Elementary(word) => {
                if word.module() != *t.module() {
                    return Err(invalid(index, "generator word is for a different decomposition"));
                }
                if word.product()?.map() != phi.map() {
                    return Err(invalid(index, "generator word does not multiply to φ"));
                }
                if self.mode == Mode::V {
                    // [P, g, f] = [P, g, φ^∨ f φ] rests on [P, f, φ^∨ f φ] = 0
                    let sub = lemma21_witness(word, &t.f)?;
                    verify_witness(&sub, Mode::V)
                        .map_err(|e| invalid(index, format!("generator word sub-claim: {e}")))?;
                }
            }
            Certificate::DetOne => {
                if self.mode == Mode::V {
                    return Err(violation("determinant-one congruence needs an elementary word in V"));
                }
                let d = phi.map().det()?;
                if !phi.map().source().ring().is_one(&d) {
                    return Err(invalid(index, "determinant certificate fails: det φ is not 1"));
                }
            }
            Certificate::General => {
                if self.mode != Mode::VGl {
                    return Err(violation("general automorphisms are only admissible in V_GL"));
                }
            }
        }
        Ok(())
    }

    /// Pf(φ^T f φ) = det(φ) Pf(f) for free forms with trivial line.
    fn check_pfaffian(&self, before: &OrientedAltIso, after: &OrientedAltIso, phi: &Iso) -> Result<()> {
        let m = before.module();
        if self.line.ambient() != 1 || !m.is_free_presentation() || m.ambient() % 2 == 1 {
            return Ok(());
        }
        let r = m.ring();
        let lhs = pfaffian(after.matrix())?;
        let rhs = r.mul(&phi.map().det()?, &pfaffian(before.matrix())?);
        if lhs != rhs {
            return Err(Error::VerificationFailed("Pfaffian changed under congruence".into()));
        }
        Ok(())
    }
}

fn split_triple(t: &Triple, at: usize) -> Result<(Triple, Triple)> {
    let (ga, gb) = split_form(&t.g, at)?;
    let (fa, fb) = split_form(&t.f, at)?;
    Ok((Triple::new(ga, fa)?, Triple::new(gb, fb)?))
}

fn split_form(f: &OrientedAltIso, at: usize) -> Result<(OrientedAltIso, OrientedAltIso)> {
    let e = f.module().idempotent();
    let k = e.rows();
    let m = f.line().ambient();
    if at == 0 || at >= k {
        return Err(Error::DimensionMismatch(format!("split point {at} outside 1..{k}")));
    }
    let diag = |x: &Matrix, r0: usize, c0: usize| -> Result<(Matrix, Matrix)> {
        if !x.block(0, c0, r0, x.cols() - c0).is_zero() || !x.block(r0, 0, x.rows() - r0, c0).is_zero() {
            return Err(Error::DimensionMismatch("not an orthogonal sum at the split point".into()));
        }
        Ok((
            x.block(0, 0, r0, c0),
            x.block(r0, c0, x.rows() - r0, x.cols() - c0),
        ))
    };
    let (e1, e2) = diag(e, at, at)?;
    let (p1, p2) = (ProjModule::new(e1)?, ProjModule::new(e2)?);
    let (m1, m2) = diag(f.matrix(), m * at, at)?;
    let (i1, i2) = diag(f.inverse_matrix(), at, m * at)?;
    let line = f.line();
    let d1 = crate::projmod::dual(&p1, line)?;
    let d2 = crate::projmod::dual(&p2, line)?;
    let a = OrientedAltIso::new(line, ModuleHom::new(&p1, &d1, m1)?, ModuleHom::new(&d1, &p1, i1)?)?;
    let b = OrientedAltIso::new(line, ModuleHom::new(&p2, &d2, m2)?, ModuleHom::new(&d2, &p2, i2)?)?;
    Ok((a, b))
}

/// Replay `w` in `mode`; `Ok(())` means the claim is certified.
pub fn verify_witness(w: &MoveWitness, mode: Mode) -> Result<()> {
    let mut replay = Replay::new(&w.line, mode, w.claim.lhs.clone())?;
    for (_, t) in w.claim.rhs.terms() {
        if t.line() != &w.line {
            return Err(invalid(0, "claim triple uses a different line"));
        }
    }
    for mv in &w.moves {
        replay.apply(mv)?;
    }
    if !replay.state.same_as(&w.claim.rhs) {
        return Err(invalid(w.moves.len(), "final state differs from the claimed right side"));
    }
    Ok(())
}

/// Emits moves while replaying them, so indices always refer to the live state.
struct Builder {
    replay: Replay,
    moves: Vec<Move>,
}

impl Builder {
    fn new(line: &LineModule, start: FormalSum) -> Result<Builder> {
        Ok(Builder {
            replay: Replay::new(line, Mode::V, start)?,
            moves: Vec::new(),
        })
    }

    fn push(&mut self, mv: Move) -> Result<()> {
        self.replay.apply(&mv).map_err(|e| {
            Error::VerificationFailed(format!("constructed witness fails to replay: {e}"))
        })?;
        self.moves.push(mv);
        Ok(())
    }

    fn index(&self, t: &Triple) -> Result<usize> {
        self.replay
            .state
            .position(t)
            .ok_or_else(|| Error::VerificationFailed("expected term missing from the state".into()))
    }

    /// `[P, f, φ^∨ f φ] -> [P, f, φ1^∨ f φ1] + [P, f, rest^∨ f rest]` for `φ = φ1 rest`.
    fn split_composite(&mut self, f: &OrientedAltIso, first: &Iso, rest: &Iso) -> Result<Triple> {
        let whole = f.pullback(&first.compose(rest)?)?;
        let middle = f.pullback(rest)?;
        let t = Triple::new(f.clone(), whole.clone())?;
        let idx = self.index(&t)?;
        self.push(Move::ChainInsert {
            term: idx,
            middle: middle.clone(),
            amount: 1,
        })?;
        let left = Triple::new(middle.clone(), whole)?;
        let idx = self.index(&left)?;
        self.push(Move::Isometry {
            term: idx,
            phi: rest.inverted(),
            amount: 1,
        })?;
        Triple::new(f.clone(), middle)
    }

    /// Reduce one copy of `[P, f, u^∨ f u]` for a single generator `u` to nothing.
    fn kill_generator(&mut self, word: &ElementaryWord, t: usize, f: &OrientedAltIso) -> Result<()> {
        let u = word.generator(t)?;
        let moved = f.pullback(&u)?;
        let target = Triple::new(f.clone(), moved.clone())?;
        if moved == *f {
            let idx = self.index(&target)?;
            return self.push(Move::Destabilize { term: idx, amount: 1 });
        }
        // [P, f, u^∨ f u] + [P, f, f] = [P ⊕ P, f ⊥ f, (u ⊕ 1)^∨ (f ⊥ f)(u ⊕ 1)]
        self.push(Move::Stabilize {
            form: f.clone(),
            amount: 1,
        })?;
        let first = self.index(&target)?;
        let second = self.index(&Triple::new(f.clone(), f.clone())?)?;
        self.push(Move::PerpJoin {
            first,
            second,
            amount: 1,
        })?;
        // u ⊕ 1 = [α, β] with α = id + s_{i,k}, β = id + id_{k,j}, k a fresh copy of P_j
        let st = &word.steps[t];
        let n = word.summands.len();
        let mut summands = word.summands.clone();
        summands.extend(word.summands.iter().cloned());
        let k = n + st.j;
        let jdem = word.summands[st.j].idempotent().clone();
        let doubled = ElementaryWord::new(
            summands,
            vec![
                ElementaryStep::new(st.i, k, st.map.clone()),
                ElementaryStep::new(k, st.j, jdem.clone()),
                ElementaryStep::new(st.i, k, st.map.neg()),
                ElementaryStep::new(k, st.j, jdem.neg()),
            ],
        )?;
        let big = f.perp(f)?;
        let uplus = u.direct_sum(&Iso::identity(f.module()))?;
        if doubled.product()?.map() != uplus.map() {
            return Err(Error::VerificationFailed("commutator identity failed".into()));
        }
        let factors: Vec<Iso> = (0..4).map(|t| doubled.generator(t)).collect::<Result<_>>()?;
        for t in 0..3 {
            let mut rest = factors[t + 1].clone();
            for fac in &factors[t + 2..] {
                rest = rest.compose(fac)?;
            }
            self.split_composite(&big, &factors[t], &rest)?;
        }
        for (u, uinv) in [(&factors[0], &factors[2]), (&factors[1], &factors[3])] {
            let a = Triple::new(big.clone(), big.pullback(u)?)?;
            if a.f == big {
                continue;
            }
            let idx = self.index(&a)?;
            self.push(Move::Isometry {
                term: idx,
                phi: uinv.clone(),
                amount: 1,
            })?;
            let moved_inv = big.pullback(uinv)?;
            let first = self.index(&Triple::new(moved_inv.clone(), big.clone())?)?;
            let second = self.index(&Triple::new(big.clone(), moved_inv)?)?;
            self.push(Move::ChainJoin {
                first,
                second,
                amount: 1,
            })?;
            let idx = self.index(&Triple::new(big.clone(), big.clone())?)?;
            self.push(Move::Destabilize { term: idx, amount: 1 })?;
        }
        // generators fixing f ⊥ f leave [Q, F, F] terms behind
        let trivial = Triple::new(big.clone(), big.clone())?;
        while let Some(idx) = self.replay.state.position(&trivial) {
            let c = self.replay.state.terms[idx].0;
            self.push(Move::Destabilize { term: idx, amount: c })?;
        }
        Ok(())
    }
}

/// Witness for `[P, f, φ^∨ f φ] = 0` in `V`, where `φ` is the product of `word`.
pub fn lemma21_witness(word: &ElementaryWord, f: &OrientedAltIso) -> Result<MoveWitness> {
    if word.module() != *f.module() {
        return Err(Error::NotElementaryGenerator(
            "generator word is for a different module".into(),
        ));
    }
    let word = word.without_trivial();
    let phi = word.product()?;
    let start = Triple::new(f.clone(), f.pullback(&phi)?)?;
    let claim = Claim {
        lhs: FormalSum::single(start),
        rhs: FormalSum::new(),
    };
    let mut b = Builder::new(f.line(), claim.lhs.clone())?;
    let n = word.steps.len();
    if n == 0 {
        b.push(Move::Destabilize { term: 0, amount: 1 })?;
    }
    for t in 0..n {
        if t + 1 < n {
            let mut rest = word.generator(t + 1)?;
            for u in t + 2..n {
                rest = rest.compose(&word.generator(u)?)?;
            }
            b.split_composite(f, &word.generator(t)?, &rest)?;
        }
        b.kill_generator(&word, t, f)?;
    }
    if !b.replay.state.is_empty() {
        return Err(Error::VerificationFailed("generator reduction left terms behind".into()));
    }
    Ok(MoveWitness {
        line: f.line().clone(),
        claim,
        moves: b.moves,
    })
}

/// Witness for `[P, g, f] = [P, g, φ^∨ f φ]` by one congruence move.
pub fn congruence_witness(
    g: &OrientedAltIso,
    f: &OrientedAltIso,
    phi: &Iso,
    certificate: Certificate,
) -> Result<MoveWitness> {
    let lhs = FormalSum::single(Triple::new(g.clone(), f.clone())?);
    let rhs = FormalSum::single(Triple::new(g.clone(), f.pullback(phi)?)?);
    Ok(MoveWitness {
        line: f.line().clone(),
        claim: Claim { lhs, rhs },
        moves: vec![Move::Congruence {
            term: 0,
            phi: phi.clone(),
            certificate,
            amount: 1,
        }],
    })
}
