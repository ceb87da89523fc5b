//! Exhaustive unimodular-row enumeration and orbit computations over finite rings.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{elementary_matrix, AlternatingMatrix, Matrix};
use crate::ring::{Elem, Ring};
use crate::symbol::classical_vaserstein;
use crate::witt::search::{bounded_equiv_search, path_to_witness, SearchOptions};
use crate::witt::{verify_witness, Mode};
use crate::Verdict;

/// All unimodular rows of length `n`, in lexicographic order of the ring's element list.
pub fn enumerate_um(ring: &Ring, n: usize) -> Result<Vec<Vec<Elem>>> {
    let elems = ring.elements().ok_or_else(|| Error::RingNotFinite(ring.to_string()))?;
    let q = elems.len();
    let total = q.checked_pow(n as u32).filter(|&t| t <= 10_000_000).ok_or_else(|| {
        Error::DimensionMismatch(format!("{q}^{n} rows exceed the enumeration limit"))
    })?;
    let rows: Vec<Vec<Elem>> = (0..total)
        .into_par_iter()
        .map(|mut idx| {
            let mut row = vec![elems[0].clone(); n];
            for slot in row.iter_mut().rev() {
                *slot = elems[idx % q].clone();
                idx /= q;
            }
            row
        })
        .filter(|row| ring.bezout(row).is_some())
        .collect();
    Ok(rows)
}

/// `E_ij(r)` for all `i != j` and nonzero `r`.
pub fn e_generators(ring: &Ring, n: usize) -> Result<Vec<Matrix>> {
    let elems = ring.elements().ok_or_else(|| Error::RingNotFinite(ring.to_string()))?;
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for r in elems.iter().filter(|r| !ring.is_zero(r)) {
                out.push(elementary_matrix(ring, n, i, j, r)?);
            }
        }
    }
    Ok(out)
}

fn times(ring: &Ring, row: &[Elem], g: &Matrix) -> Vec<Elem> {
    (0..g.cols())
        .map(|j| {
            row.iter()
                .enumerate()
                .fold(ring.zero(), |acc, (i, x)| ring.add(&acc, &ring.mul(x, g.get(i, j))))
        })
        .collect()
}

/// Orbits of `rows` under right multiplication by `generators` and their
/// inverses. Blocks hold indices into `rows`, each sorted, ordered by least member.
pub fn orbit_partition(ring: &Ring, rows: &[Vec<Elem>], generators: &[Matrix]) -> Result<Vec<Vec<usize>>> {
    let mut gens = Vec::with_capacity(2 * generators.len());
    for g in generators {
        gens.push(g.clone());
        gens.push(g.inverse()?);
    }
    let index: HashMap<&[Elem], usize> = rows.iter().enumerate().map(|(i, r)| (r.as_slice(), i)).collect();
    let mut seen = vec![false; rows.len()];
    let mut blocks = Vec::new();
    for start in 0..rows.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut block = vec![start];
        let mut frontier = vec![start];
        while !frontier.is_empty() {
            let images: Vec<Vec<Vec<Elem>>> = frontier
                .par_iter()
                .map(|&i| gens.iter().map(|g| times(ring, &rows[i], g)).collect())
                .collect();
            let mut next = Vec::new();
            for img in images.into_iter().flatten() {
                let j = *index.get(img.as_slice()).ok_or_else(|| {
                    Error::VerificationFailed("generator moves a row outside the given set".into())
                })?;
                if !seen[j] {
                    seen[j] = true;
                    block.push(j);
                    next.push(j);
                }
            }
            frontier = next;
        }
        block.sort_unstable();
        blocks.push(block);
    }
    Ok(blocks)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemberLink {
    pub member: usize,
    pub verdict: Verdict,
    pub moves: usize,
    pub explored: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitConstancy {
    pub representative: usize,
    pub size: usize,
    pub verdict: Verdict,
    pub linked: usize,
    pub explored: usize,
    pub links: Vec<MemberLink>,
}

#[derive(Clone, Debug)]
pub struct OrbitReport {
    pub ring: Ring,
    pub n: usize,
    pub rows: Vec<Vec<Elem>>,
    pub generator_set: String,
    pub orbits: Vec<Vec<usize>>,
    pub symbol_constancy: Option<Vec<OrbitConstancy>>,
}

impl OrbitReport {
    pub fn um_count(&self) -> usize {
        self.rows.len()
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }
}

/// Enumerate `Um_n` and its `E_n`-orbits.
pub fn orbit_report(ring: &Ring, n: usize) -> Result<OrbitReport> {
    let rows = enumerate_um(ring, n)?;
    let orbits = orbit_partition(ring, &rows, &e_generators(ring, n)?)?;
    Ok(OrbitReport {
        ring: ring.clone(),
        n,
        rows,
        generator_set: "E".into(),
        orbits,
        symbol_constancy: None,
    })
}

fn symbol_of(ring: &Ring, row: &[Elem]) -> Result<AlternatingMatrix> {
    let b = ring.bezout(row).ok_or(Error::NotUnimodular)?;
    classical_vaserstein(ring, row, &b)
}

/// Link the symbol of every orbit member to that of the orbit's least member
/// by a replay-verified chain of elementary congruences and stabilizations.
pub fn symbol_constancy_check(ring: &Ring, opts: &SearchOptions) -> Result<OrbitReport> {
    let mut report = orbit_report(ring, 3)?;
    let mut results = Vec::new();
    for block in &report.orbits {
        let rep = block[0];
        let target = symbol_of(ring, &report.rows[rep])?;
        let links: Vec<MemberLink> = block
            .iter()
            .map(|&member| link(ring, &report.rows[member], &target, opts).map(|(verdict, moves, explored)| MemberLink {
                member,
                verdict,
                moves,
                explored,
            }))
            .collect::<Result<_>>()?;
        let linked = links.iter().filter(|l| l.verdict == Verdict::Verified).count();
        results.push(OrbitConstancy {
            representative: rep,
            size: block.len(),
            verdict: if linked == block.len() {
                Verdict::Verified
            } else {
                Verdict::Inconclusive
            },
            linked,
            explored: links.iter().map(|l| l.explored).sum(),
            links,
        });
    }
    report.symbol_constancy = Some(results);
    Ok(report)
}

fn link(ring: &Ring, row: &[Elem], target: &AlternatingMatrix, opts: &SearchOptions) -> Result<(Verdict, usize, usize)> {
    let v = symbol_of(ring, row)?;
    match bounded_equiv_search(&v, target, opts) {
        Ok(path) => {
            let w = path_to_witness(&v, target, &path.steps)?;
            verify_witness(&w, Mode::V)?;
            Ok((Verdict::Verified, w.moves.len(), path.explored))
        }
        Err(Error::SearchExhausted { explored }) => Ok((Verdict::Inconclusive, 0, explored)),
        Err(e) => Err(e),
    }
}
