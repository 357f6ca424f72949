//! Connected components `π0` and the internal group of loops at the basepoint `π1`.

use crate::category::{Category, Cone};
use crate::error::Result;
use crate::groupoid::{InternalFunctor, InternalGroupoid, LawReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pi0<C: Category> {
    pub obj: C::Obj,
    /// `η: B0 → π0(B)`.
    pub eta: C::Mor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pi1<C: Category> {
    pub carrier: C::Obj,
    /// `ε: π1(B) → B1`.
    pub eps: C::Mor,
    /// `carrier × carrier`, the domain of `mult`.
    pub product: Cone<C>,
    pub mult: C::Mor,
    pub inv: C::Mor,
    /// `0 → carrier`.
    pub unit: C::Mor,
}

pub fn pi0<C: Category>(b: &InternalGroupoid<C>) -> Result<Pi0<C>> {
    let eta = b.cat.reflexive_coequalizer(&b.d, &b.c, &b.e)?;
    Ok(Pi0 {
        obj: b.cat.dst(&eta),
        eta,
    })
}

pub fn pi1<C: Category>(b: &InternalGroupoid<C>) -> Result<Pi1<C>> {
    let cat = &b.cat;
    let jk = cat.joint_kernel(&b.d, &b.c)?;
    let eps = jk.legs[0].clone();
    let carrier = jk.apex;
    let product = cat.product(&carrier, &carrier)?;
    let pair = b.pair(
        &cat.compose(&product.legs[0], &eps)?,
        &cat.compose(&product.legs[1], &eps)?,
    )?;
    let mult = cat.factor_through_mono(&cat.compose(&pair, &b.m)?, &eps)?;
    let inv = cat.factor_through_mono(&cat.compose(&eps, &b.i)?, &eps)?;
    let point = cat.from_zero(&b.b0);
    let unit = cat.factor_through_mono(&cat.compose(&point, &b.e)?, &eps)?;
    Ok(Pi1 {
        carrier,
        eps,
        product,
        mult,
        inv,
        unit,
    })
}

impl<C: Category> Pi1<C> {
    /// Group laws of `(carrier, mult, inv, unit)`.
    pub fn validate(&self, cat: &C) -> LawReport {
        let mut r = LawReport::default();
        let id = cat.identity(&self.carrier);
        let constant = cat.compose(&cat.to_zero(&self.carrier), &self.unit);
        let pair = |f: &C::Mor, g: &C::Mor| self.product.mediate(cat, &[f.clone(), g.clone()]);
        let times = |f: &C::Mor, g: &C::Mor| pair(f, g).and_then(|p| cat.compose(&p, &self.mult));
        r.equal(
            cat,
            "left unit",
            constant.clone().and_then(|u| times(&u, &id)),
            Ok(id.clone()),
        );
        r.equal(
            cat,
            "right unit",
            constant.clone().and_then(|u| times(&id, &u)),
            Ok(id.clone()),
        );
        r.equal(cat, "inverse", times(&id, &self.inv), constant.clone());
        let assoc = (|| -> Result<(C::Mor, C::Mor)> {
            let triple = cat.product(&self.carrier, &self.product.apex)?;
            let (x, yz) = (&triple.legs[0], &triple.legs[1]);
            let y = cat.compose(yz, &self.product.legs[0])?;
            let z = cat.compose(yz, &self.product.legs[1])?;
            let left = times(&times(x, &y)?, &z)?;
            let right = times(x, &cat.compose(yz, &self.mult)?)?;
            Ok((left, right))
        })();
        match assoc {
            Ok((left, right)) => r.equal(cat, "associativity", Ok(left), Ok(right)),
            Err(e) => r.equal::<C>(cat, "associativity", Err(e.clone()), Err(e)),
        }
        r
    }
}

/// `π0(F)`: the unique map with `η_A · π0(F) = F0 · η_B`.
pub fn pi0_map<C: Category>(f: &InternalFunctor<C>) -> Result<C::Mor> {
    pi0_map_with(f, &pi0(&f.src)?, &pi0(&f.dst)?)
}

pub fn pi0_map_with<C: Category>(f: &InternalFunctor<C>, a: &Pi0<C>, b: &Pi0<C>) -> Result<C::Mor> {
    let cat = f.cat();
    cat.factor_through_regular_epi(&cat.compose(&f.f0, &b.eta)?, &a.eta)
}

/// `π1(F)`: the unique map with `π1(F) · ε_B = ε_A · F1`.
pub fn pi1_map<C: Category>(f: &InternalFunctor<C>) -> Result<C::Mor> {
    pi1_map_with(f, &pi1(&f.src)?, &pi1(&f.dst)?)
}

pub fn pi1_map_with<C: Category>(f: &InternalFunctor<C>, a: &Pi1<C>, b: &Pi1<C>) -> Result<C::Mor> {
    let cat = f.cat();
    cat.factor_through_mono(&cat.compose(&a.eps, &f.f1)?, &b.eps)
}
