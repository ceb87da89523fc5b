//! Bounded bidirectional search for chains of elementary congruences and
//! (de)stabilizations between free alternating forms.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{Certificate, Claim, ElementaryStep, ElementaryWord, FormalSum, Move, MoveWitness, Triple};
use crate::error::{Error, Result};
use crate::linalg::{AlternatingMatrix, Matrix};
use crate::projmod::{OrientedAltIso, ProjModule};
use crate::ring::{Elem, Ring};

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Total number of moves on a path.
    pub max_depth: usize,
    /// Largest matrix size reachable by stabilizing; `None` means two above the larger input.
    pub max_size: Option<usize>,
    /// Smallest matrix size reachable by destabilizing.
    pub min_size: usize,
    /// Entries `r` tried in `E_ij(r)`; `None` means every nonzero element of a
    /// finite ring and `±1` otherwise.
    pub values: Option<Vec<Elem>>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_depth: 8,
            max_size: None,
            min_size: 2,
            values: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchStep {
    /// `A -> E^T A E` with `E = I + r e_ij`.
    Congruence { i: usize, j: usize, r: Elem },
    /// `A -> A ⊥ psi2`.
    Stabilize,
    /// `A ⊥ psi2 -> A`.
    Destabilize,
}

#[derive(Clone, Debug)]
pub struct SearchPath {
    pub steps: Vec<SearchStep>,
    pub explored: usize,
}

type Key = Vec<Elem>;

fn key(a: &Matrix) -> Key {
    let n = a.rows();
    let mut k = Vec::with_capacity(1 + n * (n.saturating_sub(1)) / 2);
    k.push(Elem::Residue(n as u64));
    for i in 0..n {
        for j in i + 1..n {
            k.push(a.get(i, j).clone());
        }
    }
    k
}

fn apply(ring: &Ring, a: &Matrix, step: &SearchStep) -> Matrix {
    match step {
        SearchStep::Congruence { i, j, r } => {
            let mut m = a.clone();
            m.congruence_elementary_in_place(*i, *j, r);
            m
        }
        SearchStep::Stabilize => a.direct_sum(AlternatingMatrix::psi2(ring).matrix()).unwrap(),
        SearchStep::Destabilize => a.block(0, 0, a.rows() - 2, a.rows() - 2),
    }
}

fn invert(ring: &Ring, step: &SearchStep) -> SearchStep {
    match step {
        SearchStep::Congruence { i, j, r } => SearchStep::Congruence {
            i: *i,
            j: *j,
            r: ring.neg(r),
        },
        SearchStep::Stabilize => SearchStep::Destabilize,
        SearchStep::Destabilize => SearchStep::Stabilize,
    }
}

fn has_trailing_psi2(ring: &Ring, a: &Matrix) -> bool {
    let n = a.rows();
    if n < 2 {
        return false;
    }
    let psi = AlternatingMatrix::psi2(ring);
    a.block(n - 2, n - 2, 2, 2) == *psi.matrix() && a.block(0, n - 2, n - 2, 2).is_zero()
}

struct Side {
    parent: HashMap<Key, Option<(Key, SearchStep)>>,
    states: HashMap<Key, Matrix>,
    frontier: Vec<Key>,
}

impl Side {
    fn new(a: &Matrix) -> Side {
        let k = key(a);
        let mut parent = HashMap::new();
        parent.insert(k.clone(), None);
        let mut states = HashMap::new();
        states.insert(k.clone(), a.clone());
        Side {
            parent,
            states,
            frontier: vec![k],
        }
    }

    /// Steps from the root to `k`.
    fn path_to(&self, k: &Key) -> Vec<SearchStep> {
        let mut out = Vec::new();
        let mut cur = k.clone();
        while let Some(Some((p, s))) = self.parent.get(&cur) {
            out.push(s.clone());
            cur = p.clone();
        }
        out.reverse();
        out
    }
}

/// Search for a path of moves from `a` to `b`.
pub fn bounded_equiv_search(a: &AlternatingMatrix, b: &AlternatingMatrix, opts: &SearchOptions) -> Result<SearchPath> {
    let ring = a.ring().clone();
    ring.check_same(b.ring())?;
    if a.size() % 2 == 1 {
        return Err(Error::OddSize(a.size()));
    }
    if b.size() % 2 == 1 {
        return Err(Error::OddSize(b.size()));
    }
    let values: Vec<Elem> = match &opts.values {
        Some(v) => v.iter().filter(|x| !ring.is_zero(x)).cloned().collect(),
        None => match ring.elements() {
            Some(all) => all.into_iter().filter(|x| !ring.is_zero(x)).collect(),
            None => vec![ring.one(), ring.from_int(-1)],
        },
    };
    let max_size = opts.max_size.unwrap_or(a.size().max(b.size()) + 2);
    let min_size = opts.min_size;

    let neighbors = |m: &Matrix| -> Vec<(Matrix, SearchStep)> {
        let n = m.rows();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                for r in &values {
                    let s = SearchStep::Congruence { i, j, r: r.clone() };
                    out.push((apply(&ring, m, &s), s));
                }
            }
        }
        if n + 2 <= max_size {
            out.push((apply(&ring, m, &SearchStep::Stabilize), SearchStep::Stabilize));
        }
        if n >= min_size + 2 && has_trailing_psi2(&ring, m) {
            out.push((apply(&ring, m, &SearchStep::Destabilize), SearchStep::Destabilize));
        }
        out
    };

    let mut sides = [Side::new(a.matrix()), Side::new(b.matrix())];
    let explored = |s: &[Side; 2]| s[0].parent.len() + s[1].parent.len();
    let finish = |sides: &[Side; 2], k: &Key| -> SearchPath {
        let mut steps = sides[0].path_to(k);
        let back = sides[1].path_to(k);
        steps.extend(back.iter().rev().map(|s| invert(&ring, s)));
        SearchPath {
            steps,
            explored: sides[0].parent.len() + sides[1].parent.len(),
        }
    };
    let start = key(a.matrix());
    if sides[1].parent.contains_key(&start) {
        return Ok(finish(&sides, &start));
    }
    let mut depth = 0;
    while depth < opts.max_depth {
        let which = if sides[0].frontier.len() <= sides[1].frontier.len() { 0 } else { 1 };
        if sides[which].frontier.is_empty() {
            break;
        }
        let frontier = std::mem::take(&mut sides[which].frontier);
        let expanded: Vec<Vec<(Matrix, SearchStep)>> = frontier
            .par_iter()
            .map(|k| neighbors(&sides[which].states[k]))
            .collect();
        let mut next = Vec::new();
        for (k, nbrs) in frontier.iter().zip(expanded) {
            for (m, s) in nbrs {
                let nk = key(&m);
                if sides[which].parent.contains_key(&nk) {
                    continue;
                }
                sides[which].parent.insert(nk.clone(), Some((k.clone(), s)));
                sides[which].states.insert(nk.clone(), m);
                if sides[1 - which].parent.contains_key(&nk) {
                    return Ok(finish(&sides, &nk));
                }
                next.push(nk);
            }
        }
        sides[which].frontier = next;
        depth += 1;
    }
    Err(Error::SearchExhausted {
        explored: explored(&sides),
    })
}

fn free_form(m: &Matrix) -> Result<OrientedAltIso> {
    OrientedAltIso::from_free(m)
}

fn standard(ring: &Ring, size: usize) -> Matrix {
    AlternatingMatrix::standard(ring, size / 2).into_matrix()
}

/// Turn a search path into a move witness for
/// `[R^2n, psi_2n, A] = [R^2n', psi_2n', B]`.
pub fn path_to_witness(a: &AlternatingMatrix, b: &AlternatingMatrix, path: &[SearchStep]) -> Result<MoveWitness> {
    let ring = a.ring().clone();
    let lhs = Triple::new(free_form(&standard(&ring, a.size()))?, free_form(a.matrix())?)?;
    let rhs = Triple::new(free_form(&standard(&ring, b.size()))?, free_form(b.matrix())?)?;
    let line = lhs.line().clone();
    let psi2 = free_form(AlternatingMatrix::psi2(&ring).matrix())?;
    let mut state = FormalSum::single(lhs.clone());
    let mut cur = a.matrix().clone();
    let mut moves = Vec::new();
    let idx = |state: &FormalSum, t: &Triple| -> Result<usize> {
        state
            .position(t)
            .ok_or_else(|| Error::VerificationFailed("search witness lost its running term".into()))
    };
    for step in path {
        let n = cur.rows();
        let current = Triple::new(free_form(&standard(&ring, n))?, free_form(&cur)?)?;
        let mut local = Vec::new();
        match step {
            SearchStep::Congruence { i, j, r } => {
                let summands = (0..n).map(|_| ProjModule::free(&ring, 1)).collect();
                let word = ElementaryWord::new(
                    summands,
                    vec![ElementaryStep::new(*i, *j, Matrix::column(&ring, vec![r.clone()]))],
                )?;
                let phi = word.product()?;
                local.push(Move::Congruence {
                    term: idx(&state, &current)?,
                    phi,
                    certificate: Certificate::Elementary(word),
                    amount: 1,
                });
            }
            SearchStep::Stabilize => {
                local.push(Move::Stabilize {
                    form: psi2.clone(),
                    amount: 1,
                });
            }
            SearchStep::Destabilize => {
                local.push(Move::PerpSplit {
                    term: idx(&state, &current)?,
                    at: n - 2,
                    amount: 1,
                });
            }
        }
        // indices for the second half of two-move steps depend on the replayed state
        let mut replay = super::Replay::new(&line, super::Mode::VGl, state.clone())?;
        for mv in &local {
            replay.apply(mv)?;
        }
        match step {
            SearchStep::Stabilize => {
                let tp = Triple::new(psi2.clone(), psi2.clone())?;
                let mv = Move::PerpJoin {
                    first: idx(replay.state(), &current)?,
                    second: idx(replay.state(), &tp)?,
                    amount: 1,
                };
                replay.apply(&mv)?;
                local.push(mv);
            }
            SearchStep::Destabilize => {
                let tp = Triple::new(psi2.clone(), psi2.clone())?;
                let mv = Move::Destabilize {
                    term: idx(replay.state(), &tp)?,
                    amount: 1,
                };
                replay.apply(&mv)?;
                local.push(mv);
            }
            SearchStep::Congruence { .. } => {}
        }
        state = replay.state().clone();
        moves.extend(local);
        cur = apply(&ring, &cur, step);
    }
    if cur != *b.matrix() {
        return Err(Error::VerificationFailed("search path does not end at the target form".into()));
    }
    Ok(MoveWitness {
        line,
        claim: Claim {
            lhs: FormalSum::single(lhs),
            rhs: FormalSum::single(rhs),
        },
        moves,
    })
}
