//! The groupoid of commutative squares of a groupoid.
//!
//! Its objects are the arrows of `B` and its arrows are squares
//! `(m1, m2) = ((a, b), (p, q))` with `a·b = p·q`, read as an arrow from `a`
//! to `q`. The square's left side `p` and right side `b` give the functors
//! `δ` and `γ`.

use std::sync::Arc;

use crate::category::{Category, Cone};
use crate::error::Result;
use crate::groupoid::{Groupoid, InternalFunctor, InternalGroupoid, NatTransformation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowGroupoid<C: Category> {
    pub base: Groupoid<C>,
    pub vec: Groupoid<C>,
    /// Pullback of `m` along itself; legs `m1, m2` into composable pairs.
    pub squares: Cone<C>,
    pub delta: InternalFunctor<C>,
    pub gamma: InternalFunctor<C>,
    /// `β: δ ⇒ γ` with component `id_{B1}`.
    pub beta: NatTransformation<C>,
}

impl<C: Category> ArrowGroupoid<C> {
    pub fn m1(&self) -> &C::Mor {
        &self.squares.legs[0]
    }

    pub fn m2(&self) -> &C::Mor {
        &self.squares.legs[1]
    }

    /// The square with top-right path `x1` and left-bottom path `x2`.
    pub fn square(&self, x1: &C::Mor, x2: &C::Mor) -> Result<C::Mor> {
        self.squares.mediate(&self.base.cat, &[x1.clone(), x2.clone()])
    }
}

pub fn arrow_groupoid<C: Category>(base: &Groupoid<C>) -> Result<ArrowGroupoid<C>> {
    let cat = &base.cat;
    let squares = cat.pullback(&base.m, &base.m)?;
    let (m1, m2) = (&squares.legs[0], &squares.legs[1]);
    let (pi1, pi2) = (base.pi1(), base.pi2());
    let a = cat.compose(m1, pi1)?;
    let b = cat.compose(m1, pi2)?;
    let p = cat.compose(m2, pi1)?;
    let q = cat.compose(m2, pi2)?;
    let id1 = cat.identity(&base.b1);

    let e = squares.mediate(
        cat,
        &[
            base.pair(&id1, &cat.compose(&base.c, &base.e)?)?,
            base.pair(&cat.compose(&base.d, &base.e)?, &id1)?,
        ],
    )?;
    let composable = cat.pullback(&q, &a)?;
    let (s1, s2) = (&composable.legs[0], &composable.legs[1]);
    let side = |leg: &C::Mor, part: &C::Mor| cat.compose(leg, part);
    let m = squares.mediate(
        cat,
        &[
            base.pair(
                &side(s1, &a)?,
                &base.compose_arrows(&side(s1, &b)?, &side(s2, &b)?)?,
            )?,
            base.pair(
                &base.compose_arrows(&side(s1, &p)?, &side(s2, &p)?)?,
                &side(s2, &q)?,
            )?,
        ],
    )?;
    let i = squares.mediate(
        cat,
        &[
            base.pair(&q, &cat.compose(&b, &base.i)?)?,
            base.pair(&cat.compose(&p, &base.i)?, &a)?,
        ],
    )?;
    let vec = Arc::new(InternalGroupoid::new(
        cat.clone(),
        base.b1.clone(),
        squares.apex.clone(),
        a,
        q,
        e,
        m,
        Some(i),
    )?);
    let delta = InternalFunctor::new(vec.clone(), base.clone(), base.d.clone(), p)?;
    let gamma = InternalFunctor::new(vec.clone(), base.clone(), base.c.clone(), b)?;
    let beta = NatTransformation::new(delta.clone(), gamma.clone(), id1)?;
    Ok(ArrowGroupoid {
        base: base.clone(),
        vec,
        squares,
        delta,
        gamma,
        beta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finptset::PtSet;
    use crate::fixtures::{codiscrete, discrete, one_object, s3_table, z4};

    #[test]
    fn squares_of_the_cyclic_group() {
        let ag = arrow_groupoid(&Arc::new(z4())).unwrap();
        assert_eq!(ag.vec.b0, PtSet(4));
        assert_eq!(ag.vec.b1, PtSet(64));
        assert!(ag.vec.validate().all_pass());
        assert!(ag.delta.validate().all_pass());
        assert!(ag.gamma.validate().all_pass());
        assert!(ag.beta.validate().all_pass());
    }

    #[test]
    fn discrete_base_has_only_identity_squares() {
        let ag = arrow_groupoid(&Arc::new(discrete(3))).unwrap();
        assert_eq!(ag.vec.b1, PtSet(3));
        assert!(ag.vec.validate().all_pass());
    }

    #[test]
    fn nonabelian_and_many_object_bases() {
        for base in [one_object(&s3_table()), codiscrete(2)] {
            let ag = arrow_groupoid(&Arc::new(base)).unwrap();
            assert!(ag.vec.validate().all_pass());
            assert!(ag.beta.validate().all_pass());
        }
        // k objects, trivial group: k^4 squares
        assert_eq!(arrow_groupoid(&Arc::new(codiscrete(2))).unwrap().vec.b1, PtSet(16));
    }

    #[test]
    fn legs_agree_with_structure_maps_on_objects() {
        let ag = arrow_groupoid(&Arc::new(z4())).unwrap();
        assert_eq!(ag.delta.f0, ag.base.d);
        assert_eq!(ag.gamma.f0, ag.base.c);
    }
}
