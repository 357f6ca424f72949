//! The base category interface.
//!
//! Every construction in this crate is written against [`Category`]: a pointed
//! regular category with finite limits and reflexive coequalizers in which
//! every regular epimorphism splits. Composition is diagrammatic throughout,
//! so `compose(f, g)` is "first `f`, then `g`".

use std::fmt;

use crate::error::{Error, Result};

/// One defining equation of a finite limit: `leg[left] · left_map = leg[right] · right_map`.
///
/// `left` and `right` may name the same node, which is how conditions such as
/// `x · d = 0` are written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation<M> {
    pub left: usize,
    pub left_map: M,
    pub right: usize,
    pub right_map: M,
}

impl<M> Equation<M> {
    pub fn new(left: usize, left_map: M, right: usize, right_map: M) -> Self {
        Equation {
            left,
            left_map,
            right,
            right_map,
        }
    }
}

/// A limit cone: the apex and one projection per node of the diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone<C: Category> {
    pub apex: C::Obj,
    pub legs: Vec<C::Mor>,
}

impl<C: Category> Cone<C> {
    pub fn leg(&self, i: usize) -> &C::Mor {
        &self.legs[i]
    }

    /// The unique comparison into the apex from a competing family of legs.
    pub fn mediate(&self, cat: &C, competing: &[C::Mor]) -> Result<C::Mor> {
        cat.factor_through_legs(competing, &self.legs)
    }
}

pub trait Category: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Obj: Clone + fmt::Debug + PartialEq + Eq + Send + Sync;
    type Mor: Clone + fmt::Debug + PartialEq + Eq + Send + Sync;

    fn src(&self, f: &Self::Mor) -> Self::Obj;
    fn dst(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, a: &Self::Obj) -> Self::Mor;
    /// `f · g`: first `f`, then `g`.
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn zero_object(&self) -> Self::Obj;
    fn zero_mor(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor;

    /// The limit of a finite diagram given by its nodes and defining equations.
    fn limit(&self, nodes: &[Self::Obj], equations: &[Equation<Self::Mor>]) -> Result<Cone<Self>>;

    /// Returns `u` with `u · legs[i] = competing[i]` for every `i`. The legs must
    /// be jointly monic.
    fn factor_through_legs(&self, competing: &[Self::Mor], legs: &[Self::Mor]) -> Result<Self::Mor>;

    /// The canonical coequalizer of a parallel pair.
    fn coequalizer(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    /// `(e, m)` with `f = e · m`, `e` a regular epimorphism and `m` a monomorphism.
    fn image_factorization(&self, f: &Self::Mor) -> (Self::Mor, Self::Mor);

    fn is_mono(&self, f: &Self::Mor) -> bool;
    fn is_regular_epi(&self, f: &Self::Mor) -> bool;
    /// A morphism `s` with `s · f = id`, when one exists.
    fn find_section(&self, f: &Self::Mor) -> Option<Self::Mor>;

    /// Cardinality (pointed sets) or dimension (vector spaces).
    fn size(&self, a: &Self::Obj) -> usize;
    /// A human-readable witness of where two parallel morphisms differ.
    fn difference(&self, f: &Self::Mor, g: &Self::Mor) -> Option<String>;
    /// A witness that `f` is not a monomorphism.
    fn mono_witness(&self, f: &Self::Mor) -> Option<String>;
    /// A witness that `f` is not a regular epimorphism.
    fn epi_witness(&self, f: &Self::Mor) -> Option<String>;
    fn describe(&self, f: &Self::Mor) -> String;

    fn compose_all(&self, maps: &[&Self::Mor]) -> Result<Self::Mor> {
        let (first, rest) = maps
            .split_first()
            .expect("compose_all needs at least one morphism");
        let mut acc = (*first).clone();
        for g in rest {
            acc = self.compose(&acc, g)?;
        }
        Ok(acc)
    }

    fn is_iso(&self, f: &Self::Mor) -> bool {
        self.is_mono(f) && self.is_regular_epi(f)
    }

    fn is_zero(&self, f: &Self::Mor) -> bool {
        *f == self.zero_mor(&self.src(f), &self.dst(f))
    }

    fn to_zero(&self, a: &Self::Obj) -> Self::Mor {
        self.zero_mor(a, &self.zero_object())
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_zero(&self, a: &Self::Obj) -> Self::Mor {
        self.zero_mor(&self.zero_object(), a)
    }

    /// Pullback of `f` and `g`, legs `[π1, π2]` with `π1 · f = π2 · g`.
    fn pullback(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Cone<Self>> {
        if self.dst(f) != self.dst(g) {
            return Err(Error::CodomainMismatch {
                left: self.describe(f),
                right: self.describe(g),
            });
        }
        self.limit(
            &[self.src(f), self.src(g)],
            &[Equation::new(0, f.clone(), 1, g.clone())],
        )
    }

    fn product(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Cone<Self>> {
        self.limit(&[a.clone(), b.clone()], &[])
    }

    fn equalizer(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Cone<Self>> {
        check_parallel(self, f, g)?;
        self.limit(&[self.src(f)], &[Equation::new(0, f.clone(), 0, g.clone())])
    }

    /// Kernel of `f`; the single leg is the kernel inclusion.
    fn kernel(&self, f: &Self::Mor) -> Result<Cone<Self>> {
        let zero = self.zero_mor(&self.src(f), &self.dst(f));
        self.limit(&[self.src(f)], &[Equation::new(0, f.clone(), 0, zero)])
    }

    fn kernel_pair(&self, f: &Self::Mor) -> Result<Cone<Self>> {
        self.pullback(f, f)
    }

    /// `Ker(f) ∩ Ker(g)` for a parallel pair.
    fn joint_kernel(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Cone<Self>> {
        check_parallel(self, f, g)?;
        let zero = self.zero_mor(&self.src(f), &self.dst(f));
        self.limit(
            &[self.src(f)],
            &[
                Equation::new(0, f.clone(), 0, zero.clone()),
                Equation::new(0, g.clone(), 0, zero),
            ],
        )
    }

    /// Coequalizer of a pair admitting the common section `s`.
    fn reflexive_coequalizer(
        &self,
        f: &Self::Mor,
        g: &Self::Mor,
        s: &Self::Mor,
    ) -> Result<Self::Mor> {
        check_parallel(self, f, g)?;
        let id = self.identity(&self.dst(f));
        let sf = self.compose(s, f)?;
        let sg = self.compose(s, g)?;
        if sf != id || sg != id {
            return Err(Error::NotReflexive(format!(
                "section {} is not common to both maps",
                self.describe(s)
            )));
        }
        self.coequalizer(f, g)
    }

    /// `u` with `u · m = f`, for a monomorphism `m`.
    fn factor_through_mono(&self, f: &Self::Mor, m: &Self::Mor) -> Result<Self::Mor> {
        self.factor_through_legs(std::slice::from_ref(f), std::slice::from_ref(m))
    }

    /// `u` with `q · u = f`, for a regular epimorphism `q` coequalizing whatever `f` does.
    fn factor_through_regular_epi(&self, f: &Self::Mor, q: &Self::Mor) -> Result<Self::Mor> {
        let s = self.find_section(q).ok_or_else(|| {
            Error::NoFactorization(format!("{} is not a regular epimorphism", self.describe(q)))
        })?;
        let u = self.compose(&s, f)?;
        if self.compose(q, &u)? != *f {
            return Err(Error::NoFactorization(format!(
                "{} is not constant on the fibres of {}",
                self.describe(f),
                self.describe(q)
            )));
        }
        Ok(u)
    }
}

fn check_parallel<C: Category>(cat: &C, f: &C::Mor, g: &C::Mor) -> Result<()> {
    if cat.src(f) != cat.src(g) || cat.dst(f) != cat.dst(g) {
        return Err(Error::NotParallel {
            left: cat.describe(f),
            right: cat.describe(g),
        });
    }
    Ok(())
}
