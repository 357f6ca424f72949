//! Finite-dimensional vector spaces over `𝔽p`.
//!
//! Morphisms are matrices acting on row vectors, so `compose(f, g)` is the
//! matrix product `f·g` in written order.

use std::fmt;

use crate::category::{Category, Cone, Equation};
use crate::error::{Error, Result};
use crate::groupoid::{InternalFunctor, InternalGroupoid};
use crate::linalg::{is_prime, Matrix};

/// `𝔽p^n`, identified with its dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dim(pub usize);

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpVect {
    p: u32,
}

impl Default for FpVect {
    fn default() -> Self {
        FpVect { p: 2 }
    }
}

impl FpVect {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidMorphism(format!("modulus {p} is not prime")));
        }
        Ok(FpVect { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn matrix(&self, cols: usize, rows: &[Vec<i64>]) -> Result<Matrix> {
        Matrix::from_rows(self.p, cols, rows)
    }

    fn own(&self, f: &Matrix) -> Result<()> {
        if f.modulus() != self.p {
            return Err(Error::ModulusMismatch(self.p, f.modulus()));
        }
        Ok(())
    }
}

impl Category for FpVect {
    type Obj = Dim;
    type Mor = Matrix;

    fn src(&self, f: &Matrix) -> Dim {
        Dim(f.rows())
    }

    fn dst(&self, f: &Matrix) -> Dim {
        Dim(f.cols())
    }

    fn identity(&self, a: &Dim) -> Matrix {
        Matrix::identity(self.p, a.0)
    }

    fn compose(&self, f: &Matrix, g: &Matrix) -> Result<Matrix> {
        f.mul(g)
    }

    fn zero_object(&self) -> Dim {
        Dim(0)
    }

    fn zero_mor(&self, a: &Dim, b: &Dim) -> Matrix {
        Matrix::zeros(self.p, a.0, b.0)
    }

    fn limit(&self, nodes: &[Dim], equations: &[Equation<Matrix>]) -> Result<Cone<Self>> {
        let mut offsets = Vec::with_capacity(nodes.len() + 1);
        let mut total = 0;
        for n in nodes {
            offsets.push(total);
            total += n.0;
        }
        offsets.push(total);
        let mut blocks = Vec::with_capacity(equations.len());
        for eq in equations {
            self.own(&eq.left_map)?;
            self.own(&eq.right_map)?;
            if eq.left >= nodes.len() || eq.right >= nodes.len() {
                return Err(Error::InvalidMorphism("equation names a missing node".into()));
            }
            if eq.left_map.rows() != nodes[eq.left].0 || eq.right_map.rows() != nodes[eq.right].0 {
                return Err(Error::CompositionMismatch {
                    left: format!("node {}", eq.left),
                    right: self.describe(&eq.left_map),
                });
            }
            if eq.left_map.cols() != eq.right_map.cols() {
                return Err(Error::CodomainMismatch {
                    left: self.describe(&eq.left_map),
                    right: self.describe(&eq.right_map),
                });
            }
            // rows of node `left` carry left_map, rows of node `right` carry −right_map
            let width = eq.left_map.cols();
            let mut parts = Vec::with_capacity(nodes.len());
            for (j, n) in nodes.iter().enumerate() {
                let mut part = Matrix::zeros(self.p, n.0, width);
                if j == eq.left {
                    part = part.add(&eq.left_map)?;
                }
                if j == eq.right {
                    part = part.sub(&eq.right_map)?;
                }
                parts.push(part);
            }
            let refs: Vec<&Matrix> = parts.iter().collect();
            blocks.push(Matrix::vstack(self.p, width, &refs)?);
        }
        let refs: Vec<&Matrix> = blocks.iter().collect();
        let constraint = Matrix::hstack(self.p, total, &refs)?;
        let basis = constraint.nullspace_basis();
        let legs = (0..nodes.len())
            .map(|j| basis.columns(offsets[j], offsets[j + 1]))
            .collect();
        Ok(Cone {
            apex: Dim(basis.rows()),
            legs,
        })
    }

    fn factor_through_legs(&self, competing: &[Matrix], legs: &[Matrix]) -> Result<Matrix> {
        if competing.len() != legs.len() || legs.is_empty() {
            return Err(Error::NoFactorization("leg count mismatch".into()));
        }
        for (c, l) in competing.iter().zip(legs) {
            self.own(c)?;
            self.own(l)?;
            if c.cols() != l.cols() || c.rows() != competing[0].rows() || l.rows() != legs[0].rows() {
                return Err(Error::NoFactorization(format!(
                    "{} cannot factor through {}",
                    self.describe(c),
                    self.describe(l)
                )));
            }
        }
        let c_refs: Vec<&Matrix> = competing.iter().collect();
        let l_refs: Vec<&Matrix> = legs.iter().collect();
        let c = Matrix::hstack(self.p, competing[0].rows(), &c_refs)?;
        let l = Matrix::hstack(self.p, legs[0].rows(), &l_refs)?;
        if l.rank() != l.rows() {
            return Err(Error::NoFactorization("legs are not jointly monic".into()));
        }
        l.solve_left(&c)?
            .ok_or_else(|| Error::NoFactorization("competing cone leaves the span of the legs".into()))
    }

    fn coequalizer(&self, f: &Matrix, g: &Matrix) -> Result<Matrix> {
        self.own(f)?;
        self.own(g)?;
        if f.rows() != g.rows() || f.cols() != g.cols() {
            return Err(Error::NotParallel {
                left: self.describe(f),
                right: self.describe(g),
            });
        }
        Ok(g.sub(f)?.cokernel())
    }

    fn image_factorization(&self, f: &Matrix) -> (Matrix, Matrix) {
        let m = f.colspace_basis();
        let e = m
            .solve_left(f)
            .ok()
            .flatten()
            .expect("every row lies in the row space");
        (e, m)
    }

    fn is_mono(&self, f: &Matrix) -> bool {
        f.rank() == f.rows()
    }

    fn is_regular_epi(&self, f: &Matrix) -> bool {
        f.rank() == f.cols()
    }

    fn find_section(&self, f: &Matrix) -> Option<Matrix> {
        f.solve_right_inverse()
    }

    fn size(&self, a: &Dim) -> usize {
        a.0
    }

    fn difference(&self, f: &Matrix, g: &Matrix) -> Option<String> {
        if f.rows() != g.rows() || f.cols() != g.cols() || f.modulus() != g.modulus() {
            return Some(format!("{f:?} and {g:?} are not parallel"));
        }
        (0..f.rows())
            .flat_map(|r| (0..f.cols()).map(move |c| (r, c)))
            .find(|&(r, c)| f.get(r, c) != g.get(r, c))
            .map(|(r, c)| format!("entry ({r}, {c}): {} vs {}", f.get(r, c), g.get(r, c)))
    }

    fn mono_witness(&self, f: &Matrix) -> Option<String> {
        let k = f.nullspace_basis();
        (k.rows() > 0).then(|| format!("nonzero kernel vector {:?}", k.row(0)))
    }

    fn epi_witness(&self, f: &Matrix) -> Option<String> {
        let (_, pivots) = f.rref();
        (0..f.cols())
            .find(|c| !pivots.contains(c))
            .map(|c| format!("unit vector e{c} is not in the image"))
    }

    fn describe(&self, f: &Matrix) -> String {
        format!("{f:?}")
    }
}

/// The groupoid presented by a 2-term complex `∂: C1 → C0`.
///
/// Arrows are pairs `(x, y)` in `C1 ⊕ C0` going from `y` to `x·∂ + y`.
pub fn complex_to_groupoid(cat: &FpVect, boundary: &Matrix) -> Result<InternalGroupoid<FpVect>> {
    cat.own(boundary)?;
    let p = cat.p;
    let (n1, n0) = (boundary.rows(), boundary.cols());
    let id0 = Matrix::identity(p, n0);
    let d = Matrix::vstack(p, n0, &[&Matrix::zeros(p, n1, n0), &id0])?;
    let c = Matrix::vstack(p, n0, &[boundary, &id0])?;
    let e = Matrix::hstack(p, n0, &[&Matrix::zeros(p, n0, n1), &id0])?;
    let b1 = Dim(n1 + n0);
    let composable = cat.pullback(&c, &d)?;
    let (p1, p2) = (&composable.legs[0], &composable.legs[1]);
    let m = p1.add(p2)?.sub(&cat.compose_all(&[p1, &c, &e])?)?;
    InternalGroupoid::new(cat.clone(), Dim(n0), b1, d, c, e, m, None)
}

/// The functor induced by a chain map `(f1, f0)` between 2-term complexes.
///
/// Requires `∂·f0 = f1·∂′`.
pub fn chain_map_functor(
    src: &std::sync::Arc<InternalGroupoid<FpVect>>,
    dst: &std::sync::Arc<InternalGroupoid<FpVect>>,
    f1: &Matrix,
    f0: &Matrix,
) -> Result<InternalFunctor<FpVect>> {
    let p = f0.modulus();
    let (a1, a0) = (f1.rows(), f0.rows());
    let (b1, b0) = (f1.cols(), f0.cols());
    let top = Matrix::hstack(p, a1, &[f1, &Matrix::zeros(p, a1, b0)])?;
    let bottom = Matrix::hstack(p, a0, &[&Matrix::zeros(p, a0, b1), f0])?;
    let big = Matrix::vstack(p, b1 + b0, &[&top, &bottom])?;
    InternalFunctor::new(src.clone(), dst.clone(), f0.clone(), big)
}
