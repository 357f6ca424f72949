//! Internal groupoids, functors and natural transformations with law validators.

use std::fmt;
use std::sync::Arc;

use crate::category::{Category, Cone, Equation};
use crate::error::{Error, Result};
use crate::finptset::{FinPtSet, PtMap, PtSet};

/// One law with its verdict; `witness` locates a failure when one is available.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawCheck {
    pub law: String,
    pub holds: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawReport {
    pub checks: Vec<LawCheck>,
}

impl LawReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }

    /// Converts the first failure into an error built by `wrap`.
    pub fn into_result(self, wrap: fn(String) -> Error) -> Result<()> {
        match self.failures().next() {
            None => Ok(()),
            Some(f) => Err(wrap(match &f.witness {
                Some(w) => format!("{} fails at {w}", f.law),
                None => format!("{} fails", f.law),
            })),
        }
    }

    fn push(&mut self, law: &str, holds: bool, witness: Option<String>) {
        self.checks.push(LawCheck {
            law: law.to_string(),
            holds,
            witness,
        });
    }

    pub(crate) fn equal<C: Category>(
        &mut self,
        cat: &C,
        law: &str,
        lhs: Result<C::Mor>,
        rhs: Result<C::Mor>,
    ) {
        match (lhs, rhs) {
            (Ok(a), Ok(b)) => {
                let witness = cat.difference(&a, &b);
                self.push(law, witness.is_none(), witness);
            }
            (Err(e), _) | (_, Err(e)) => self.push(law, false, Some(e.to_string())),
        }
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{:<28} {}", c.law, if c.holds { "ok" } else { "FAILED" })?;
            if let Some(w) = c.witness.as_ref().filter(|_| !c.holds) {
                write!(f, "  ({w})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A groupoid `(B0, B1, d, c, e, m, i)` internal to `C`.
///
/// `m` is a morphism out of the apex of `composable`, the pullback of `c`
/// along `d` with legs `π1, π2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InternalGroupoid<C: Category> {
    pub cat: C,
    pub b0: C::Obj,
    pub b1: C::Obj,
    pub d: C::Mor,
    pub c: C::Mor,
    pub e: C::Mor,
    pub m: C::Mor,
    pub i: C::Mor,
    pub composable: Cone<C>,
}

impl<C: Category> InternalGroupoid<C> {
    /// Checks shapes and computes `i` when it is not supplied. Laws are checked
    /// separately by [`validate`](Self::validate).
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        cat: C,
        b0: C::Obj,
        b1: C::Obj,
        d: C::Mor,
        c: C::Mor,
        e: C::Mor,
        m: C::Mor,
        i: Option<C::Mor>,
    ) -> Result<Self> {
        let shape = |name: &str, f: &C::Mor, s: &C::Obj, t: &C::Obj| check_shape(&cat, name, f, s, t);
        shape("d", &d, &b1, &b0)?;
        shape("c", &c, &b1, &b0)?;
        shape("e", &e, &b0, &b1)?;
        let composable = cat.pullback(&c, &d)?;
        shape("m", &m, &composable.apex, &b1)?;
        let mut g = InternalGroupoid {
            i: e.clone(),
            cat,
            b0,
            b1,
            d,
            c,
            e,
            m,
            composable,
        };
        g.i = match i {
            Some(i) => {
                check_shape(&g.cat, "i", &i, &g.b1, &g.b1)?;
                i
            }
            None => g.compute_inverse()?,
        };
        Ok(g)
    }

    /// Like [`new`](Self::new), then rejects the data unless every law holds.
    #[allow(clippy::too_many_arguments)]
    pub fn new_validated(
        cat: C,
        b0: C::Obj,
        b1: C::Obj,
        d: C::Mor,
        c: C::Mor,
        e: C::Mor,
        m: C::Mor,
        i: Option<C::Mor>,
    ) -> Result<Self> {
        let g = Self::new(cat, b0, b1, d, c, e, m, i)?;
        g.validate().into_result(Error::NotAGroupoid)?;
        Ok(g)
    }

    /// `[X]₀`: every structure map is the identity.
    pub fn discrete(cat: &C, x: &C::Obj) -> Result<Self> {
        let id = cat.identity(x);
        let composable = cat.pullback(&id, &id)?;
        let m = composable.legs[0].clone();
        Self::new(cat.clone(), x.clone(), x.clone(), id.clone(), id.clone(), id.clone(), m, Some(id))
    }

    /// The groupoid with zero object of objects and the group `h` of arrows;
    /// `mult` builds the multiplication from the canonical product cone `h × h`.
    pub fn one_object(
        cat: &C,
        h: &C::Obj,
        mult: impl FnOnce(&Cone<C>) -> Result<C::Mor>,
    ) -> Result<Self> {
        let zero = cat.zero_object();
        let d = cat.to_zero(h);
        let e = cat.from_zero(h);
        let composable = cat.pullback(&d, &d)?;
        let m = mult(&composable)?;
        let g = Self::new(cat.clone(), zero, h.clone(), d.clone(), d, e, m, None)
            .map_err(|e| Error::NotAGroup(e.to_string()))?;
        g.validate().into_result(Error::NotAGroup)?;
        Ok(g)
    }

    pub fn zero(cat: &C) -> Result<Self> {
        Self::discrete(cat, &cat.zero_object())
    }

    /// `i` from the inverse of `θ = ⟨π1, m⟩ : B1 ×_{c,d} B1 → B1 ×_{d,d} B1`.
    fn compute_inverse(&self) -> Result<C::Mor> {
        let cat = &self.cat;
        let dd = cat.pullback(&self.d, &self.d)?;
        let theta = dd.mediate(
            cat,
            &[self.composable.legs[0].clone(), self.m.clone()],
        )
        .map_err(|e| Error::NotAGroupoid(format!("composition does not preserve domains: {e}")))?;
        if !cat.is_iso(&theta) {
            return Err(Error::NotAGroupoid(
                "arrows do not have unique inverses".into(),
            ));
        }
        let theta_inv = cat.factor_through_mono(&cat.identity(&dd.apex), &theta)?;
        let id = cat.identity(&self.b1);
        let to_unit = dd.mediate(cat, &[id, cat.compose(&self.d, &self.e)?])?;
        cat.compose_all(&[&to_unit, &theta_inv, &self.composable.legs[1]])
    }

    pub fn pi1(&self) -> &C::Mor {
        &self.composable.legs[0]
    }

    pub fn pi2(&self) -> &C::Mor {
        &self.composable.legs[1]
    }

    /// `⟨f, g⟩` into the composable pairs.
    pub fn pair(&self, f: &C::Mor, g: &C::Mor) -> Result<C::Mor> {
        self.composable.mediate(&self.cat, &[f.clone(), g.clone()])
    }

    /// `⟨f, g⟩ · m`.
    pub fn compose_arrows(&self, f: &C::Mor, g: &C::Mor) -> Result<C::Mor> {
        self.cat.compose(&self.pair(f, g)?, &self.m)
    }

    /// `x · d · e`: the identity arrow on the domain of each `x`.
    pub fn unit_at_domain(&self, x: &C::Mor) -> Result<C::Mor> {
        self.cat.compose_all(&[x, &self.d, &self.e])
    }

    pub fn unit_at_codomain(&self, x: &C::Mor) -> Result<C::Mor> {
        self.cat.compose_all(&[x, &self.c, &self.e])
    }

    /// Composable triples, legs `t1, t2, t3`.
    pub fn composable_triples(&self) -> Result<Cone<C>> {
        let b1 = self.b1.clone();
        self.cat.limit(
            &[b1.clone(), b1.clone(), b1],
            &[
                Equation::new(0, self.c.clone(), 1, self.d.clone()),
                Equation::new(1, self.c.clone(), 2, self.d.clone()),
            ],
        )
    }

    pub fn validate(&self) -> LawReport {
        let cat = &self.cat;
        let mut r = LawReport::default();
        let id0 = cat.identity(&self.b0);
        let id1 = cat.identity(&self.b1);
        r.equal(cat, "e·d = id", cat.compose(&self.e, &self.d), Ok(id0.clone()));
        r.equal(cat, "e·c = id", cat.compose(&self.e, &self.c), Ok(id0));
        r.equal(
            cat,
            "m·d = π1·d",
            cat.compose(&self.m, &self.d),
            cat.compose(self.pi1(), &self.d),
        );
        r.equal(
            cat,
            "m·c = π2·c",
            cat.compose(&self.m, &self.c),
            cat.compose(self.pi2(), &self.c),
        );
        r.equal(
            cat,
            "left unit",
            cat.compose(&self.d, &self.e)
                .and_then(|de| self.compose_arrows(&de, &id1)),
            Ok(id1.clone()),
        );
        r.equal(
            cat,
            "right unit",
            cat.compose(&self.c, &self.e)
                .and_then(|ce| self.compose_arrows(&id1, &ce)),
            Ok(id1.clone()),
        );
        match self.composable_triples() {
            Ok(t) => {
                let lhs = self
                    .compose_arrows(&t.legs[0], &t.legs[1])
                    .and_then(|ab| self.compose_arrows(&ab, &t.legs[2]));
                let rhs = self
                    .compose_arrows(&t.legs[1], &t.legs[2])
                    .and_then(|bc| self.compose_arrows(&t.legs[0], &bc));
                r.equal(cat, "associativity", lhs, rhs);
            }
            Err(e) => r.push("associativity", false, Some(e.to_string())),
        }
        r.equal(cat, "i·d = c", cat.compose(&self.i, &self.d), Ok(self.c.clone()));
        r.equal(cat, "i·c = d", cat.compose(&self.i, &self.c), Ok(self.d.clone()));
        r.equal(
            cat,
            "⟨id, i⟩·m = d·e",
            self.compose_arrows(&id1, &self.i),
            cat.compose(&self.d, &self.e),
        );
        r.equal(
            cat,
            "⟨i, id⟩·m = c·e",
            self.compose_arrows(&self.i, &id1),
            cat.compose(&self.c, &self.e),
        );
        r
    }

    pub fn is_discrete(&self) -> bool {
        self.cat.is_iso(&self.e)
    }
}

impl InternalGroupoid<FinPtSet> {
    /// Builds a groupoid in pointed sets from element-level data; `mul(a, b)`
    /// composes `a` then `b` and is only called on composable pairs.
    pub fn from_tables(
        cat: &FinPtSet,
        objects: usize,
        d: &[usize],
        c: &[usize],
        e: &[usize],
        mul: impl Fn(usize, usize) -> usize,
        inverse: Option<&[usize]>,
    ) -> Result<Self> {
        let arrows = d.len();
        let d = PtMap::from_indices(objects, d)?;
        let c = PtMap::from_indices(objects, c)?;
        if c.src_size() != arrows {
            return Err(Error::NotAGroupoid("d and c have different domains".into()));
        }
        let e = PtMap::from_indices(arrows, e)?;
        let composable = cat.pullback(&c, &d)?;
        let table: Vec<usize> = (0..composable.apex.0)
            .map(|k| mul(composable.legs[0].at(k), composable.legs[1].at(k)))
            .collect();
        let m = PtMap::from_indices(arrows, &table)?;
        let i = inverse.map(|t| PtMap::from_indices(arrows, t)).transpose()?;
        Self::new(cat.clone(), PtSet(objects), PtSet(arrows), d, c, e, m, i)
    }

    /// `[H]₁` for a group given by its multiplication table, unit at index 0.
    pub fn group_from_table(cat: &FinPtSet, table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
            return Err(Error::NotAGroup("table is not square over its carrier".into()));
        }
        Self::one_object(cat, &PtSet(n), |cone| {
            let entries: Vec<usize> = (0..cone.apex.0)
                .map(|k| table[cone.legs[0].at(k)][cone.legs[1].at(k)])
                .collect();
            PtMap::from_indices(n, &entries).map_err(|e| Error::NotAGroup(e.to_string()))
        })
    }
}

fn check_shape<C: Category>(cat: &C, name: &str, f: &C::Mor, s: &C::Obj, t: &C::Obj) -> Result<()> {
    if cat.src(f) != *s || cat.dst(f) != *t {
        return Err(Error::NotAGroupoid(format!(
            "{name} = {} has the wrong domain or codomain",
            cat.describe(f)
        )));
    }
    Ok(())
}

pub type Groupoid<C> = Arc<InternalGroupoid<C>>;

pub(crate) fn same<C: Category>(a: &Groupoid<C>, b: &Groupoid<C>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A functor between internal groupoids, given level-wise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InternalFunctor<C: Category> {
    pub src: Groupoid<C>,
    pub dst: Groupoid<C>,
    pub f0: C::Mor,
    pub f1: C::Mor,
}

impl<C: Category> InternalFunctor<C> {
    pub fn new(src: Groupoid<C>, dst: Groupoid<C>, f0: C::Mor, f1: C::Mor) -> Result<Self> {
        let cat = &src.cat;
        if cat.src(&f0) != src.b0 || cat.dst(&f0) != dst.b0 {
            return Err(Error::InvalidFunctor(format!(
                "F0 = {} does not map objects to objects",
                cat.describe(&f0)
            )));
        }
        if cat.src(&f1) != src.b1 || cat.dst(&f1) != dst.b1 {
            return Err(Error::InvalidFunctor(format!(
                "F1 = {} does not map arrows to arrows",
                cat.describe(&f1)
            )));
        }
        Ok(InternalFunctor { src, dst, f0, f1 })
    }

    pub fn new_validated(src: Groupoid<C>, dst: Groupoid<C>, f0: C::Mor, f1: C::Mor) -> Result<Self> {
        let f = Self::new(src, dst, f0, f1)?;
        f.validate().into_result(Error::InvalidFunctor)?;
        Ok(f)
    }

    pub fn cat(&self) -> &C {
        &self.src.cat
    }

    pub fn identity(b: &Groupoid<C>) -> Self {
        InternalFunctor {
            src: b.clone(),
            dst: b.clone(),
            f0: b.cat.identity(&b.b0),
            f1: b.cat.identity(&b.b1),
        }
    }

    pub fn zero(a: &Groupoid<C>, b: &Groupoid<C>) -> Self {
        let cat = &a.cat;
        InternalFunctor {
            src: a.clone(),
            dst: b.clone(),
            f0: cat.zero_mor(&a.b0, &b.b0),
            f1: cat.zero_mor(&a.b1, &b.b1),
        }
    }

    /// `self · g`: first `self`, then `g`.
    pub fn then(&self, g: &InternalFunctor<C>) -> Result<Self> {
        if !same(&self.dst, &g.src) {
            return Err(Error::CompositionMismatch {
                left: "functor".into(),
                right: "functor with a different source".into(),
            });
        }
        let cat = self.cat();
        Ok(InternalFunctor {
            src: self.src.clone(),
            dst: g.dst.clone(),
            f0: cat.compose(&self.f0, &g.f0)?,
            f1: cat.compose(&self.f1, &g.f1)?,
        })
    }

    /// `F1 × F1` on composable pairs.
    pub fn on_composable(&self) -> Result<C::Mor> {
        let cat = self.cat();
        let a = &self.src;
        self.dst.pair(
            &cat.compose(a.pi1(), &self.f1)?,
            &cat.compose(a.pi2(), &self.f1)?,
        )
    }

    pub fn validate(&self) -> LawReport {
        let cat = self.cat();
        let (a, b) = (&self.src, &self.dst);
        let mut r = LawReport::default();
        r.equal(cat, "F1·d = d·F0", cat.compose(&self.f1, &b.d), cat.compose(&a.d, &self.f0));
        r.equal(cat, "F1·c = c·F0", cat.compose(&self.f1, &b.c), cat.compose(&a.c, &self.f0));
        r.equal(cat, "e·F1 = F0·e", cat.compose(&a.e, &self.f1), cat.compose(&self.f0, &b.e));
        r.equal(
            cat,
            "F preserves composition",
            self.on_composable().and_then(|p| cat.compose(&p, &b.m)),
            cat.compose(&a.m, &self.f1),
        );
        r
    }

    pub fn is_isomorphism(&self) -> bool {
        let cat = self.cat();
        cat.is_iso(&self.f0) && cat.is_iso(&self.f1)
    }
}

/// A natural transformation `α: F ⇒ G` with component `alpha: A0 → B1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTransformation<C: Category> {
    pub src: InternalFunctor<C>,
    pub dst: InternalFunctor<C>,
    pub alpha: C::Mor,
}

impl<C: Category> NatTransformation<C> {
    pub fn new(src: InternalFunctor<C>, dst: InternalFunctor<C>, alpha: C::Mor) -> Result<Self> {
        if !same(&src.src, &dst.src) || !same(&src.dst, &dst.dst) {
            return Err(Error::InvalidTransformation("functors are not parallel".into()));
        }
        let cat = src.cat();
        if cat.src(&alpha) != src.src.b0 || cat.dst(&alpha) != src.dst.b1 {
            return Err(Error::InvalidTransformation(format!(
                "component {} does not map objects to arrows",
                cat.describe(&alpha)
            )));
        }
        Ok(NatTransformation { src, dst, alpha })
    }

    pub fn new_validated(src: InternalFunctor<C>, dst: InternalFunctor<C>, alpha: C::Mor) -> Result<Self> {
        let t = Self::new(src, dst, alpha)?;
        t.validate().into_result(Error::InvalidTransformation)?;
        Ok(t)
    }

    pub fn cat(&self) -> &C {
        self.src.cat()
    }

    pub fn source_groupoid(&self) -> &Groupoid<C> {
        &self.src.src
    }

    pub fn target_groupoid(&self) -> &Groupoid<C> {
        &self.src.dst
    }

    pub fn identity(f: &InternalFunctor<C>) -> Self {
        let alpha = f
            .cat()
            .compose(&f.f0, &f.dst.e)
            .expect("F0 lands in the objects of the target");
        NatTransformation {
            src: f.clone(),
            dst: f.clone(),
            alpha,
        }
    }

    /// `α⁻¹: G ⇒ F`, component `α·i`.
    pub fn inverse(&self) -> Result<Self> {
        let alpha = self.cat().compose(&self.alpha, &self.target_groupoid().i)?;
        Ok(NatTransformation {
            src: self.dst.clone(),
            dst: self.src.clone(),
            alpha,
        })
    }

    /// Vertical composite `α` then `β`, component `⟨α, β⟩·m`.
    pub fn then(&self, beta: &NatTransformation<C>) -> Result<Self> {
        if self.dst != beta.src {
            return Err(Error::InvalidTransformation(
                "vertical composite of non-adjacent transformations".into(),
            ));
        }
        let alpha = self.target_groupoid().compose_arrows(&self.alpha, &beta.alpha)?;
        Ok(NatTransformation {
            src: self.src.clone(),
            dst: beta.dst.clone(),
            alpha,
        })
    }

    /// `H·α: H·F ⇒ H·G`, component `H0·α`.
    pub fn whisker_left(h: &InternalFunctor<C>, alpha: &NatTransformation<C>) -> Result<Self> {
        Ok(NatTransformation {
            src: h.then(&alpha.src)?,
            dst: h.then(&alpha.dst)?,
            alpha: h.cat().compose(&h.f0, &alpha.alpha)?,
        })
    }

    /// `α·K: F·K ⇒ G·K`, component `α·K1`.
    pub fn whisker_right(alpha: &NatTransformation<C>, k: &InternalFunctor<C>) -> Result<Self> {
        Ok(NatTransformation {
            src: alpha.src.then(k)?,
            dst: alpha.dst.then(k)?,
            alpha: k.cat().compose(&alpha.alpha, &k.f1)?,
        })
    }

    pub fn validate(&self) -> LawReport {
        let cat = self.cat();
        let a = self.source_groupoid();
        let b = self.target_groupoid();
        let mut r = LawReport::default();
        r.equal(cat, "α·d = F0", cat.compose(&self.alpha, &b.d), Ok(self.src.f0.clone()));
        r.equal(cat, "α·c = G0", cat.compose(&self.alpha, &b.c), Ok(self.dst.f0.clone()));
        let lhs = cat
            .compose(&a.c, &self.alpha)
            .and_then(|ca| b.compose_arrows(&self.src.f1, &ca));
        let rhs = cat
            .compose(&a.d, &self.alpha)
            .and_then(|da| b.compose_arrows(&da, &self.dst.f1));
        r.equal(cat, "naturality", lhs, rhs);
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{cyclic_table, z2, z4};

    #[test]
    fn discrete_groupoids_validate() {
        let cat = FinPtSet::new();
        for n in 1..=4 {
            let g = InternalGroupoid::discrete(&cat, &PtSet(n)).unwrap();
            assert!(g.validate().all_pass());
            assert!(g.is_discrete());
        }
    }

    #[test]
    fn one_object_cyclic_group() {
        let g = z4();
        assert_eq!(g.b1, PtSet(4));
        assert_eq!(g.b0, PtSet(1));
        assert_eq!(g.i.table(), &[0, 3, 2, 1]);
        assert!(g.validate().all_pass());
    }

    #[test]
    fn wrong_inverse_is_reported_at_one() {
        let cat = FinPtSet::new();
        let table = cyclic_table(4);
        let g = InternalGroupoid::from_tables(
            &cat,
            1,
            &[0; 4],
            &[0; 4],
            &[0],
            |a, b| table[a][b],
            Some(&[0, 1, 2, 3]),
        )
        .unwrap();
        let report = g.validate();
        let failed: Vec<&LawCheck> = report.failures().collect();
        assert_eq!(failed.len(), 2);
        assert_eq!(failed[0].law, "⟨id, i⟩·m = d·e");
        assert!(failed[0].witness.as_deref().unwrap().starts_with("x=1"));
    }

    #[test]
    fn broken_table_is_not_a_group() {
        let cat = FinPtSet::new();
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(
            InternalGroupoid::group_from_table(&cat, &bad),
            Err(Error::NotAGroup(_))
        ));
        let trivial = InternalGroupoid::group_from_table(&cat, &[vec![0]]).unwrap();
        assert_eq!(trivial, InternalGroupoid::zero(&cat).unwrap());
    }

    #[test]
    fn functor_composition() {
        let cat = FinPtSet::new();
        let (a, b) = (Arc::new(z2()), Arc::new(z4()));
        let double = InternalFunctor::new_validated(
            a.clone(),
            b.clone(),
            cat.identity(&PtSet(1)),
            cat.map(4, &[0, 2]).unwrap(),
        )
        .unwrap();
        let reduce = InternalFunctor::new_validated(
            b.clone(),
            a.clone(),
            cat.identity(&PtSet(1)),
            cat.map(2, &[0, 1, 0, 1]).unwrap(),
        )
        .unwrap();
        let composite = double.then(&reduce).unwrap();
        assert_eq!(composite, InternalFunctor::zero(&a, &a));
        let id = InternalFunctor::identity(&b);
        assert_eq!(double.then(&id).unwrap(), double);
        assert!(id.validate().all_pass());
    }

    #[test]
    fn whiskering_identities() {
        let a = Arc::new(z2());
        let b = Arc::new(z4());
        let f = InternalFunctor::zero(&a, &b);
        let id_b = InternalFunctor::identity(&b);
        let unit = NatTransformation::identity(&id_b);
        let w = NatTransformation::whisker_left(&f, &unit).unwrap();
        assert_eq!(w, NatTransformation::identity(&f));
        assert!(w.validate().all_pass());
    }

    #[test]
    fn components_out_of_a_point_are_forced() {
        // a component 1 → B1 must be pointed, so only the unit is available
        for g in 0..4 {
            assert_eq!(PtMap::from_indices(4, &[g]).is_ok(), g == 0);
        }
    }
}
