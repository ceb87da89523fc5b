//! Finitely generated projective modules presented as images of idempotents.
//!
//! A module `P` is an ambient rank `k` with an idempotent `e`. A line module
//! `L` has ambient rank `m` and idempotent `l`. The dual `Hom(P, L)` consists
//! of `m x k` matrices `Y` with `Y = l Y e`; it is flattened column-major, so
//! entry `Y[r][i]` sits at index `r + m * i` and the dual idempotent is
//! `kron(e^T, l)`. With this layout the dual of a direct sum is literally the
//! direct sum of the duals.

use crate::error::{Error, Result};
use crate::linalg::{subsets, Matrix};
use crate::ring::{Elem, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjModule {
    e: Matrix,
}

impl ProjModule {
    pub fn new(e: Matrix) -> Result<ProjModule> {
        if !e.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "idempotent must be square, got {}x{}",
                e.rows(),
                e.cols()
            )));
        }
        if e.mul(&e)? != e {
            return Err(Error::NotIdempotent);
        }
        Ok(ProjModule { e })
    }

    pub fn free(ring: &Ring, n: usize) -> ProjModule {
        ProjModule {
            e: Matrix::identity(ring, n),
        }
    }

    pub fn ring(&self) -> &Ring {
        self.e.ring()
    }

    pub fn ambient(&self) -> usize {
        self.e.rows()
    }

    pub fn idempotent(&self) -> &Matrix {
        &self.e
    }

    pub fn is_free_presentation(&self) -> bool {
        self.e.is_identity()
    }

    pub fn direct_sum(&self, other: &ProjModule) -> Result<ProjModule> {
        Ok(ProjModule {
            e: self.e.direct_sum(&other.e)?,
        })
    }

    /// `Λ^d e` on the lexicographic basis of `d`-subsets.
    pub fn exterior_power(&self, d: usize) -> ProjModule {
        ProjModule {
            e: self.e.exterior_power(d),
        }
    }

    /// Constant rank 2: `Λ^3 e = 0` and `trace(Λ^2 e) = 1`.
    pub fn is_rank2(&self) -> bool {
        let r = self.ring();
        self.e.exterior_power(3).is_zero() && r.is_one(&self.e.exterior_power(2).trace())
    }

    /// Constant rank 1: `Λ^2 e = 0` and `trace(e) = 1`.
    pub fn is_rank1(&self) -> bool {
        self.e.exterior_power(2).is_zero() && self.ring().is_one(&self.e.trace())
    }

    /// Whether the column vector `v` lies in the module.
    pub fn contains(&self, v: &Matrix) -> Result<bool> {
        Ok(self.e.mul(v)? == *v)
    }

    /// Generators `e ε_i` of the module.
    pub fn generators(&self) -> Vec<Matrix> {
        (0..self.ambient()).map(|i| self.e.col(i)).collect()
    }
}

/// A projective module of constant rank 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineModule(ProjModule);

impl LineModule {
    pub fn new(p: ProjModule) -> Result<LineModule> {
        if p.is_rank1() {
            Ok(LineModule(p))
        } else {
            Err(Error::RankNot1)
        }
    }

    pub fn trivial(ring: &Ring) -> LineModule {
        LineModule(ProjModule::free(ring, 1))
    }

    pub fn module(&self) -> &ProjModule {
        &self.0
    }

    pub fn idempotent(&self) -> &Matrix {
        self.0.idempotent()
    }

    pub fn ambient(&self) -> usize {
        self.0.ambient()
    }

    pub fn ring(&self) -> &Ring {
        self.0.ring()
    }
}

/// `Hom(P, L)` in flattened coordinates.
pub fn dual(p: &ProjModule, line: &LineModule) -> Result<ProjModule> {
    Ok(ProjModule {
        e: p.e.transpose().kron(line.idempotent())?,
    })
}

/// Evaluate the dual element `y` (flattened column) at `p`; the result lies in `L`.
pub fn evaluate(line: &LineModule, y: &Matrix, p: &Matrix) -> Result<Matrix> {
    let m = line.ambient();
    let k = p.rows();
    if y.rows() != m * k || y.cols() != 1 || p.cols() != 1 {
        return Err(Error::DimensionMismatch("evaluation of a dual element".into()));
    }
    unflatten(y, m, k).mul(p)
}

/// `m x k` matrix from its column-major flattening.
pub fn unflatten(y: &Matrix, m: usize, k: usize) -> Matrix {
    let mut out = Matrix::zeros(y.ring(), m, k);
    for i in 0..k {
        for r in 0..m {
            out.set(r, i, y.get(r + m * i, 0).clone());
        }
    }
    out
}

/// Column-major flattening of a matrix.
pub fn flatten(y: &Matrix) -> Matrix {
    let (m, k) = (y.rows(), y.cols());
    let mut out = Matrix::zeros(y.ring(), m * k, 1);
    for i in 0..k {
        for r in 0..m {
            out.set(r + m * i, 0, y.get(r, i).clone());
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleHom {
    source: ProjModule,
    target: ProjModule,
    matrix: Matrix,
}

impl ModuleHom {
    /// Validates `X = f X e`.
    pub fn new(source: &ProjModule, target: &ProjModule, matrix: Matrix) -> Result<ModuleHom> {
        if matrix.rows() != target.ambient() || matrix.cols() != source.ambient() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix between ambient ranks {} and {}",
                matrix.rows(),
                matrix.cols(),
                source.ambient(),
                target.ambient()
            )));
        }
        if target.e.mul(&matrix)?.mul(&source.e)? != matrix {
            return Err(Error::NotModuleMap);
        }
        Ok(ModuleHom {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    /// `f X e` for an arbitrary ambient matrix `X`.
    pub fn compressed(source: &ProjModule, target: &ProjModule, x: &Matrix) -> Result<ModuleHom> {
        let matrix = target.e.mul(x)?.mul(&source.e)?;
        ModuleHom::new(source, target, matrix)
    }

    pub fn identity(p: &ProjModule) -> ModuleHom {
        ModuleHom {
            source: p.clone(),
            target: p.clone(),
            matrix: p.e.clone(),
        }
    }

    pub fn zero(source: &ProjModule, target: &ProjModule) -> ModuleHom {
        ModuleHom {
            source: source.clone(),
            target: target.clone(),
            matrix: Matrix::zeros(source.ring(), target.ambient(), source.ambient()),
        }
    }

    pub fn source(&self) -> &ProjModule {
        &self.source
    }

    pub fn target(&self) -> &ProjModule {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleHom) -> Result<ModuleHom> {
        if other.target != self.source {
            return Err(Error::DimensionMismatch(
                "composition of morphisms with mismatched modules".into(),
            ));
        }
        Ok(ModuleHom {
            source: other.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }

    pub fn add(&self, other: &ModuleHom) -> Result<ModuleHom> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::DimensionMismatch("sum of morphisms between different modules".into()));
        }
        Ok(ModuleHom {
            matrix: self.matrix.add(&other.matrix)?,
            ..self.clone()
        })
    }

    pub fn neg(&self) -> ModuleHom {
        ModuleHom {
            matrix: self.matrix.neg(),
            ..self.clone()
        }
    }

    pub fn direct_sum(&self, other: &ModuleHom) -> Result<ModuleHom> {
        Ok(ModuleHom {
            source: self.source.direct_sum(&other.source)?,
            target: self.target.direct_sum(&other.target)?,
            matrix: self.matrix.direct_sum(&other.matrix)?,
        })
    }

    /// Determinant of an endomorphism, computed on `X + (I - e)`.
    pub fn det(&self) -> Result<Elem> {
        if self.source != self.target {
            return Err(Error::DimensionMismatch("determinant of a non-endomorphism".into()));
        }
        self.extended().det()
    }

    fn extended(&self) -> Matrix {
        let r = self.source.ring();
        let n = self.source.ambient();
        let comp = Matrix::identity(r, n).sub(&self.source.e).unwrap();
        self.matrix.add(&comp).unwrap()
    }

    /// `Λ^d` of the morphism, between the `d`-th exterior powers.
    pub fn exterior_power(&self, d: usize) -> ModuleHom {
        ModuleHom {
            source: self.source.exterior_power(d),
            target: self.target.exterior_power(d),
            matrix: self.matrix.exterior_power(d),
        }
    }
}

/// Precomposition `Hom(Q, L) -> Hom(P, L)`, `Y -> Y φ`, as `kron(φ^T, l)`.
pub fn dual_of_hom(phi: &ModuleHom, line: &LineModule) -> Result<ModuleHom> {
    Ok(ModuleHom {
        source: dual(&phi.target, line)?,
        target: dual(&phi.source, line)?,
        matrix: phi.matrix.transpose().kron(line.idempotent())?,
    })
}

/// An isomorphism together with its verified inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Iso {
    map: ModuleHom,
    inverse: ModuleHom,
}

impl Iso {
    pub fn new(map: ModuleHom, inverse: ModuleHom) -> Result<Iso> {
        if inverse.source != map.target || inverse.target != map.source {
            return Err(Error::NotInvertible("inverse has the wrong modules".into()));
        }
        if inverse.compose(&map)?.matrix != map.source.e {
            return Err(Error::NotInvertible("inverse ∘ map is not the identity".into()));
        }
        if map.compose(&inverse)?.matrix != map.target.e {
            return Err(Error::NotInvertible("map ∘ inverse is not the identity".into()));
        }
        Ok(Iso { map, inverse })
    }

    pub fn identity(p: &ProjModule) -> Iso {
        Iso {
            map: ModuleHom::identity(p),
            inverse: ModuleHom::identity(p),
        }
    }

    /// Automorphism with inverse obtained from the adjugate of `X + (I - e)`.
    pub fn automorphism(map: ModuleHom) -> Result<Iso> {
        let d = map.det()?;
        let r = map.source.ring().clone();
        let dinv = r
            .inverse(&d)
            .ok_or_else(|| Error::NotInvertible(format!("determinant {} is not a unit", r.format(&d))))?;
        let inv = map.extended().adjugate()?.scale(&dinv);
        let inverse = ModuleHom::compressed(&map.source, &map.source, &inv)?;
        Iso::new(map, inverse)
    }

    pub fn map(&self) -> &ModuleHom {
        &self.map
    }

    pub fn inverse(&self) -> &ModuleHom {
        &self.inverse
    }

    pub fn inverted(&self) -> Iso {
        Iso {
            map: self.inverse.clone(),
            inverse: self.map.clone(),
        }
    }

    pub fn compose(&self, other: &Iso) -> Result<Iso> {
        Ok(Iso {
            map: self.map.compose(&other.map)?,
            inverse: other.inverse.compose(&self.inverse)?,
        })
    }

    pub fn direct_sum(&self, other: &Iso) -> Result<Iso> {
        Ok(Iso {
            map: self.map.direct_sum(&other.map)?,
            inverse: self.inverse.direct_sum(&other.inverse)?,
        })
    }
}

/// Evaluation isomorphism `P -> Hom(Hom(P, L), L)`, with its explicit inverse.
pub fn can_iso(p: &ProjModule, line: &LineModule) -> Result<Iso> {
    let r = p.ring();
    let (k, m) = (p.ambient(), line.ambient());
    let pd = dual(p, line)?;
    let pdd = dual(&pd, line)?;
    let l = line.idempotent();
    let d = pd.idempotent();
    let id_m = Matrix::identity(r, m);
    // column j: the functional y -> Y ε_j, i.e. (ε_j^T ⊗ I_m) restricted to P^∨
    let mut raw = Matrix::zeros(r, m * m * k, k);
    for j in 0..k {
        let mut ej = Matrix::zeros(r, 1, k);
        ej.set(0, j, r.one());
        let functional = l.mul(&ej.kron(&id_m)?)?.mul(d)?;
        raw.set_block(0, j, &flatten(&functional));
    }
    let map = ModuleHom::compressed(p, &pdd, &raw)?;
    // p_j = sum_i Φ(l E_ij e)_i, using trace(l) = 1
    let mut inv = Matrix::zeros(r, k, m * m * k);
    for j in 0..k {
        for i in 0..m {
            let mut eij = Matrix::zeros(r, m, k);
            eij.set(i, j, r.one());
            let y = flatten(&l.mul(&eij)?.mul(p.idempotent())?);
            for t in 0..m * k {
                inv.set(j, i + m * t, y.get(t, 0).clone());
            }
        }
    }
    let inverse = ModuleHom::compressed(&pdd, p, &inv)?;
    Iso::new(map, inverse)
}

/// An `L`-valued alternating isomorphism `P -> Hom(P, L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedAltIso {
    line: LineModule,
    iso: Iso,
}

impl OrientedAltIso {
    pub fn new(line: &LineModule, map: ModuleHom, inverse: ModuleHom) -> Result<OrientedAltIso> {
        let pd = dual(map.source(), line)?;
        if *map.target() != pd {
            return Err(Error::DimensionMismatch("form does not land in the L-dual".into()));
        }
        check_alternating(line, map.matrix())?;
        Ok(OrientedAltIso {
            line: line.clone(),
            iso: Iso::new(map, inverse)?,
        })
    }

    /// Wrap a free alternating form with values in the trivial line.
    pub fn from_free(matrix: &Matrix) -> Result<OrientedAltIso> {
        let r = matrix.ring().clone();
        let p = ProjModule::free(&r, matrix.rows());
        let line = LineModule::trivial(&r);
        let map = ModuleHom::new(&p, &dual(&p, &line)?, matrix.clone())?;
        let inv = matrix.inverse()?;
        let inverse = ModuleHom::new(map.target(), &p, inv)?;
        OrientedAltIso::new(&line, map, inverse)
    }

    /// Alternating form on a rank-2 module, inverted by the rank-2 adjugate
    /// formula `G(ξ) = sum_{u<v} β_uv(ξ(h_u) h_v - ξ(h_v) h_u)` where
    /// `sum β_uv(f(h_v)(h_u)) = 1`.
    pub fn from_rank2(line: &LineModule, p: &ProjModule, matrix: Matrix) -> Result<OrientedAltIso> {
        let r = p.ring().clone();
        let (k, m) = (p.ambient(), line.ambient());
        let pd = dual(p, line)?;
        let map = ModuleHom::new(p, &pd, matrix)?;
        check_alternating(line, map.matrix())?;
        let f = map.matrix();
        let pairs: Vec<(usize, usize, usize)> = subsets(k, 2)
            .into_iter()
            .flat_map(|s| (0..m).map(move |rr| (s[0], s[1], rr)))
            .collect();
        let coords: Vec<Elem> = pairs
            .iter()
            .map(|&(u, v, rr)| f.get(rr + m * u, v).clone())
            .collect();
        let b = r
            .bezout(&coords)
            .ok_or_else(|| Error::NotInvertible("form values do not generate the unit ideal".into()))?;
        let e = p.idempotent();
        let mut g = Matrix::zeros(&r, k, m * k);
        for (idx, &(u, v, rr)) in pairs.iter().enumerate() {
            let c = &b[idx];
            if r.is_zero(c) {
                continue;
            }
            // column (rr, u) gains +c h_v, column (rr, v) gains -c h_u
            for t in 0..k {
                let cu = rr + m * u;
                let cv = rr + m * v;
                let hv = r.mul(c, e.get(t, v));
                let hu = r.mul(c, e.get(t, u));
                g.set(t, cu, r.add(g.get(t, cu), &hv));
                g.set(t, cv, r.sub(g.get(t, cv), &hu));
            }
        }
        let inverse = ModuleHom::compressed(&pd, p, &g)?;
        OrientedAltIso::new(line, map, inverse)
    }

    pub fn line(&self) -> &LineModule {
        &self.line
    }

    pub fn module(&self) -> &ProjModule {
        self.iso.map.source()
    }

    pub fn hom(&self) -> &ModuleHom {
        self.iso.map()
    }

    pub fn matrix(&self) -> &Matrix {
        self.iso.map.matrix()
    }

    pub fn inverse_matrix(&self) -> &Matrix {
        self.iso.inverse.matrix()
    }

    pub fn iso(&self) -> &Iso {
        &self.iso
    }

    /// `f(q)(p)` as a vector of `L`.
    pub fn pairing(&self, p: &Matrix, q: &Matrix) -> Result<Matrix> {
        let y = self.matrix().mul(q)?;
        evaluate(&self.line, &y, p)
    }

    pub fn perp(&self, other: &OrientedAltIso) -> Result<OrientedAltIso> {
        if self.line != other.line {
            return Err(Error::DimensionMismatch("orthogonal sum over different lines".into()));
        }
        Ok(OrientedAltIso {
            line: self.line.clone(),
            iso: self.iso.direct_sum(&other.iso)?,
        })
    }

    /// `φ^∨ f φ` for an isomorphism `φ: N -> P`.
    pub fn pullback(&self, phi: &Iso) -> Result<OrientedAltIso> {
        let dphi = dual_of_hom(phi.map(), &self.line)?;
        let dpsi = dual_of_hom(phi.inverse(), &self.line)?;
        let map = dphi.compose(self.hom())?.compose(phi.map())?;
        let inverse = phi.inverse().compose(self.iso.inverse())?.compose(&dpsi)?;
        OrientedAltIso::new(&self.line, map, inverse)
    }

    /// Hyperbolic form `[[0, id], [-can, 0]]` on `P ⊕ P^∨`.
    pub fn hyperbolic(p: &ProjModule, line: &LineModule) -> Result<OrientedAltIso> {
        let r = p.ring();
        let pd = dual(p, line)?;
        let can = can_iso(p, line)?;
        let (k, mk) = (p.ambient(), pd.ambient());
        let mmk = can.map().target().ambient();
        let mut h = Matrix::zeros(r, mk + mmk, k + mk);
        h.set_block(0, k, pd.idempotent());
        h.set_block(mk, 0, &can.map().matrix().neg());
        let mut hinv = Matrix::zeros(r, k + mk, mk + mmk);
        hinv.set_block(0, mk, &can.inverse().matrix().neg());
        hinv.set_block(k, 0, pd.idempotent());
        let m = p.direct_sum(&pd)?;
        let md = dual(&m, line)?;
        let map = ModuleHom::new(&m, &md, h)?;
        let inverse = ModuleHom::new(&md, &m, hinv)?;
        OrientedAltIso::new(line, map, inverse)
    }
}

/// The pairing tensor `T[r][i][j] = F[r + m i][j]` must vanish on the diagonal
/// and be skew.
pub fn check_alternating(line: &LineModule, f: &Matrix) -> Result<()> {
    let r = line.ring();
    let m = line.ambient();
    let k = f.cols();
    if f.rows() != m * k {
        return Err(Error::DimensionMismatch(format!(
            "form matrix {}x{} does not map into an L-dual of ambient {}",
            f.rows(),
            f.cols(),
            m * k
        )));
    }
    for rr in 0..m {
        for i in 0..k {
            if !r.is_zero(f.get(rr + m * i, i)) {
                return Err(Error::NotAlternating(format!("f(ε{i})(ε{i}) has nonzero coordinate {rr}")));
            }
            for j in i + 1..k {
                if !r.is_zero(&r.add(f.get(rr + m * i, j), f.get(rr + m * j, i))) {
                    return Err(Error::NotAlternating(format!("pairing of ε{i}, ε{j} is not skew")));
                }
            }
        }
    }
    Ok(())
}

/// `p ∧ q` in lexicographic `Λ^2` coordinates.
pub fn wedge2(p: &[Elem], q: &[Elem], ring: &Ring) -> Vec<Elem> {
    subsets(p.len(), 2)
        .iter()
        .map(|s| {
            let (a, b) = (s[0], s[1]);
            ring.sub(&ring.mul(&p[a], &q[b]), &ring.mul(&p[b], &q[a]))
        })
        .collect()
}

/// The form `χ0(q)(p) = p ∧ q` on a rank-2 module, with values in `Λ^2 P0`.
pub fn chi0(p0: &ProjModule) -> Result<(LineModule, OrientedAltIso)> {
    if !p0.is_rank2() {
        return Err(Error::RankNot2);
    }
    let r = p0.ring().clone();
    let line = LineModule::new(p0.exterior_power(2))?;
    let (k, m) = (p0.ambient(), line.ambient());
    let basis = |i: usize| -> Vec<Elem> {
        (0..k).map(|t| if t == i { r.one() } else { r.zero() }).collect()
    };
    let mut raw = Matrix::zeros(&r, m * k, k);
    for j in 0..k {
        for i in 0..k {
            let w = wedge2(&basis(i), &basis(j), &r);
            for (rr, x) in w.into_iter().enumerate() {
                raw.set(rr + m * i, j, x);
            }
        }
    }
    let pd = dual(p0, &line)?;
    let f = pd.idempotent().mul(&raw)?.mul(p0.idempotent())?;
    let form = OrientedAltIso::from_rank2(&line, p0, f)?;
    Ok((line, form))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{elementary_matrix, pfaffian};

    fn sphere() -> Ring {
        Ring::parse("Q[x,y,z]/(x^2+y^2+z^2-1)").unwrap()
    }

    fn tangent(r: &Ring) -> ProjModule {
        let v = Matrix::from_strings(r, &[vec!["x"], vec!["y"], vec!["z"]]).unwrap();
        let e = Matrix::identity(r, 3).sub(&v.mul(&v.transpose()).unwrap()).unwrap();
        ProjModule::new(e).unwrap()
    }

    #[test]
    fn modules_and_rank_tests() {
        let z = Ring::integers();
        let p = ProjModule::new(Matrix::from_ints(&z, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]])).unwrap();
        assert!(p.is_rank2());
        assert_eq!(
            p.exterior_power(2).idempotent(),
            &Matrix::from_ints(&z, &[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]])
        );
        assert!(!ProjModule::free(&z, 3).is_rank2());
        assert!(matches!(
            ProjModule::new(Matrix::from_ints(&z, &[&[1, 1], &[0, 1]])),
            Err(Error::NotIdempotent)
        ));
        let z6 = Ring::modular(6).unwrap();
        let p6 = ProjModule::new(Matrix::from_ints(&z6, &[&[3, 0], &[0, 3]])).unwrap();
        assert!(!p6.is_rank2());
    }

    #[test]
    fn tangent_module_is_rank2() {
        let r = sphere();
        let t = tangent(&r);
        assert!(t.is_rank2());
        let l2 = t.exterior_power(2);
        assert!(r.is_one(&l2.idempotent().trace()));
        assert!(LineModule::new(l2).is_ok());
        let line = LineModule::new(t.exterior_power(2)).unwrap();
        let dd = dual(&dual(&t, &line).unwrap(), &line).unwrap();
        assert_eq!(dd.ambient(), 27);
    }

    #[test]
    fn dual_of_elementary_is_transpose() {
        let z = Ring::integers();
        let p = ProjModule::free(&z, 2);
        let line = LineModule::trivial(&z);
        let e = elementary_matrix(&z, 2, 0, 1, &z.from_int(4)).unwrap();
        let phi = ModuleHom::new(&p, &p, e.clone()).unwrap();
        assert_eq!(dual_of_hom(&phi, &line).unwrap().matrix(), &e.transpose());
        let y = Matrix::from_ints(&z, &[&[0], &[1]]);
        let v = Matrix::from_ints(&z, &[&[3], &[5]]);
        assert_eq!(evaluate(&line, &y, &v).unwrap(), Matrix::from_ints(&z, &[&[5]]));
    }

    #[test]
    fn can_is_iso_on_free_and_tangent() {
        let z = Ring::integers();
        let c = can_iso(&ProjModule::free(&z, 1), &LineModule::trivial(&z)).unwrap();
        assert!(c.map().matrix().is_identity());
        let r = sphere();
        let t = tangent(&r);
        let line = LineModule::new(t.exterior_power(2)).unwrap();
        assert!(can_iso(&t, &line).is_ok());
    }

    #[test]
    fn hyperbolic_free_rank1_is_psi2() {
        let z = Ring::integers();
        let h = OrientedAltIso::hyperbolic(&ProjModule::free(&z, 1), &LineModule::trivial(&z)).unwrap();
        assert_eq!(h.matrix(), &Matrix::from_ints(&z, &[&[0, 1], &[-1, 0]]));
        assert_eq!(pfaffian(h.matrix()).unwrap(), z.one());
        let h2 = OrientedAltIso::hyperbolic(&ProjModule::free(&z, 2), &LineModule::trivial(&z)).unwrap();
        assert_eq!(h2.matrix().det().unwrap(), z.one());
    }

    #[test]
    fn chi0_free_and_tangent() {
        let z = Ring::integers();
        let (_, c) = chi0(&ProjModule::free(&z, 2)).unwrap();
        assert_eq!(c.matrix(), &Matrix::from_ints(&z, &[&[0, 1], &[-1, 0]]));
        let r = sphere();
        let t = tangent(&r);
        let (line, c) = chi0(&t).unwrap();
        assert_eq!(line.ambient(), 3);
        let p = t.idempotent().col(0);
        assert!(c.pairing(&p, &p).unwrap().is_zero());
        assert!(matches!(chi0(&ProjModule::free(&z, 3)), Err(Error::RankNot2)));
    }
}
