//! Small named groupoids and functors in finite pointed sets.

use std::sync::Arc;

use crate::category::Category;
use crate::finptset::{FinPtSet, PtSet};
use crate::groupoid::{InternalFunctor, InternalGroupoid};

pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

pub fn klein_table() -> Vec<Vec<usize>> {
    (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect()
}

/// Permutations of three letters in lexicographic order; `a·b` applies `a` first.
pub fn s3_table() -> Vec<Vec<usize>> {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| index([b[a[0]], b[a[1]], b[a[2]]]))
                .collect()
        })
        .collect()
}

pub fn one_object(table: &[Vec<usize>]) -> InternalGroupoid<FinPtSet> {
    InternalGroupoid::group_from_table(&FinPtSet::new(), table).expect("catalog tables are groups")
}

/// `B[ℤ/2]`.
pub fn z2() -> InternalGroupoid<FinPtSet> {
    one_object(&cyclic_table(2))
}

/// `B[ℤ/4]`.
pub fn z4() -> InternalGroupoid<FinPtSet> {
    one_object(&cyclic_table(4))
}

pub fn discrete(n: usize) -> InternalGroupoid<FinPtSet> {
    InternalGroupoid::discrete(&FinPtSet::new(), &PtSet(n)).expect("discrete groupoid")
}

/// One arrow between every ordered pair of `n` objects.
pub fn codiscrete(n: usize) -> InternalGroupoid<FinPtSet> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect();
    let d: Vec<usize> = pairs.iter().map(|p| p.0).collect();
    let c: Vec<usize> = pairs.iter().map(|p| p.1).collect();
    let e: Vec<usize> = (0..n).map(|u| u * n + u).collect();
    InternalGroupoid::from_tables(
        &FinPtSet::new(),
        n,
        &d,
        &c,
        &e,
        |a, b| pairs[a].0 * n + pairs[b].1,
        None,
    )
    .expect("codiscrete groupoid")
}

/// Doubling `B[ℤ/2] → B[ℤ/4]`.
pub fn z2_to_z4() -> InternalFunctor<FinPtSet> {
    let cat = FinPtSet::new();
    InternalFunctor::new_validated(
        Arc::new(z2()),
        Arc::new(z4()),
        cat.identity(&PtSet(1)),
        cat.map(4, &[0, 2]).unwrap(),
    )
    .expect("doubling is a homomorphism")
}

/// Reduction `B[ℤ/4] → B[ℤ/2]`.
pub fn z4_mod2() -> InternalFunctor<FinPtSet> {
    let cat = FinPtSet::new();
    InternalFunctor::new_validated(
        Arc::new(z4()),
        Arc::new(z2()),
        cat.identity(&PtSet(1)),
        cat.map(2, &[0, 1, 0, 1]).unwrap(),
    )
    .expect("reduction is a homomorphism")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_groups_validate() {
        for table in [cyclic_table(1), cyclic_table(5), klein_table(), s3_table()] {
            let g = one_object(&table);
            assert!(g.validate().all_pass());
        }
        // S3 is not abelian
        let s3 = s3_table();
        assert!((0..6).any(|a| (0..6).any(|b| s3[a][b] != s3[b][a])));
    }

    #[test]
    fn codiscrete_validates() {
        let g = codiscrete(3);
        assert!(g.validate().all_pass());
        assert_eq!(g.i.table(), &[0, 3, 6, 1, 4, 7, 2, 5, 8]);
    }
}
