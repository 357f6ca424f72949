//! Finite pointed sets.
//!
//! Objects are `{0, …, n−1}` with basepoint `0`; morphisms are index tables with
//! `table[0] = 0`. Limits enumerate satisfying tuples lexicographically, which
//! puts the tuple of basepoints at index 0.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use petgraph::unionfind::UnionFind;

use crate::category::{Category, Cone, Equation};
use crate::error::{Error, Result};

/// A finite pointed set of the given size; the basepoint is element 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PtSet(pub usize);

impl PtSet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidMorphism(
                "a pointed set has at least one element".into(),
            ));
        }
        Ok(PtSet(size))
    }

    pub fn size(self) -> usize {
        self.0
    }
}

impl fmt::Display for PtSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{0..{}}}", self.0)
    }
}

/// A basepoint-preserving map between finite pointed sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PtMap {
    dst: usize,
    table: Vec<u32>,
}

impl PtMap {
    pub fn new(dst: usize, table: Vec<u32>) -> Result<Self> {
        if table.is_empty() || dst == 0 {
            return Err(Error::InvalidMorphism("empty pointed set".into()));
        }
        if table[0] != 0 {
            return Err(Error::InvalidMorphism(format!(
                "table {:?} does not fix the basepoint",
                short(&table)
            )));
        }
        if let Some(&bad) = table.iter().find(|&&v| v as usize >= dst) {
            return Err(Error::IndexOutOfRange {
                index: bad as usize,
                size: dst,
            });
        }
        Ok(PtMap { dst, table })
    }

    pub fn from_indices(dst: usize, table: &[usize]) -> Result<Self> {
        Self::new(dst, table.iter().map(|&v| v as u32).collect())
    }

    pub(crate) fn from_raw(dst: usize, table: Vec<u32>) -> Self {
        debug_assert!(table[0] == 0 && table.iter().all(|&v| (v as usize) < dst));
        PtMap { dst, table }
    }

    pub fn src_size(&self) -> usize {
        self.table.len()
    }

    pub fn dst_size(&self) -> usize {
        self.dst
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn eval(&self, x: usize) -> Result<usize> {
        self.table
            .get(x)
            .map(|&v| v as usize)
            .ok_or(Error::IndexOutOfRange {
                index: x,
                size: self.table.len(),
            })
    }

    /// Table lookup; panics on an out-of-range index.
    pub fn at(&self, x: usize) -> usize {
        self.table[x] as usize
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.dst];
        self.table.iter().all(|&v| !std::mem::replace(&mut seen[v as usize], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.dst];
        for &v in &self.table {
            seen[v as usize] = true;
        }
        seen.into_iter().all(|s| s)
    }
}

impl fmt::Debug for PtMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}→{}", short(&self.table), self.table.len(), self.dst)
    }
}

fn short(table: &[u32]) -> String {
    if table.len() <= 12 {
        format!("{table:?}")
    } else {
        format!("{:?}…(+{})", &table[..12], table.len() - 12)
    }
}

/// Enumeration cutoffs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest object any construction may produce.
    pub max_object_size: usize,
    /// Largest number of maps `enumerate_maps` may stream.
    pub max_enumeration: u128,
    /// Largest object size on which brute-force universal-property checks run.
    pub max_brute_force_size: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_object_size: 1 << 22,
            max_enumeration: 1 << 24,
            max_brute_force_size: 8,
        }
    }
}

/// The category of finite pointed sets.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FinPtSet {
    pub limits: Limits,
}

impl FinPtSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_limits(limits: Limits) -> Self {
        FinPtSet { limits }
    }

    pub fn obj(&self, size: usize) -> Result<PtSet> {
        PtSet::new(size)
    }

    pub fn map(&self, dst: usize, table: &[usize]) -> Result<PtMap> {
        PtMap::from_indices(dst, table)
    }

    /// All pointed maps `a → b` in lexicographic order of their tables.
    pub fn enumerate_maps(&self, a: PtSet, b: PtSet) -> Result<MapEnumerator> {
        let count = (b.0 as u128).checked_pow((a.0 - 1) as u32);
        match count {
            Some(n) if n <= self.limits.max_enumeration => Ok(MapEnumerator {
                dst: b.0,
                next: Some(vec![0; a.0]),
            }),
            _ => Err(Error::SizeLimit {
                what: format!("hom({}, {})", a.0, b.0),
                size: count.unwrap_or(u128::MAX),
                limit: self.limits.max_enumeration,
            }),
        }
    }

    fn check_size(&self, what: &str, size: usize) -> Result<()> {
        if size > self.limits.max_object_size {
            return Err(Error::SizeLimit {
                what: what.into(),
                size: size as u128,
                limit: self.limits.max_object_size as u128,
            });
        }
        Ok(())
    }
}

/// Streams the pointed maps between two finite pointed sets.
#[derive(Clone, Debug)]
pub struct MapEnumerator {
    dst: usize,
    next: Option<Vec<u32>>,
}

impl Iterator for MapEnumerator {
    type Item = PtMap;

    fn next(&mut self) -> Option<PtMap> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = succ.len();
        loop {
            if pos <= 1 {
                break;
            }
            pos -= 1;
            if (succ[pos] as usize) + 1 < self.dst {
                succ[pos] += 1;
                self.next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(PtMap::from_raw(self.dst, current))
    }
}

struct Side<'a> {
    other: usize,
    other_map: &'a PtMap,
    preimage: Vec<Vec<u32>>,
}

fn preimages(map: &PtMap) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new(); map.dst];
    for (x, &v) in map.table.iter().enumerate() {
        out[v as usize].push(x as u32);
    }
    out
}

impl FinPtSet {
    fn search(
        &self,
        node: usize,
        sizes: &[usize],
        generators: &[Vec<Side<'_>>],
        checks: &[Vec<&Equation<PtMap>>],
        tuple: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) -> Result<()> {
        if node == sizes.len() {
            self.check_size("limit apex", out.len() + 1)?;
            out.push(tuple.clone());
            return Ok(());
        }
        let all: Vec<u32>;
        let candidates: &[u32] = match generators[node]
            .iter()
            .map(|s| &s.preimage[s.other_map.at(tuple[s.other] as usize)])
            .min_by_key(|v| v.len())
        {
            Some(list) => list,
            None => {
                all = (0..sizes[node] as u32).collect();
                &all
            }
        };
        for &x in candidates {
            tuple.push(x);
            let ok = checks[node].iter().all(|eq| {
                eq.left_map.at(tuple[eq.left] as usize) == eq.right_map.at(tuple[eq.right] as usize)
            });
            if ok {
                self.search(node + 1, sizes, generators, checks, tuple, out)?;
            }
            tuple.pop();
        }
        Ok(())
    }
}

fn cmp_tuple(legs: &[&[u32]], k: usize, target: &[u32]) -> Ordering {
    for (leg, &t) in legs.iter().zip(target) {
        match leg[k].cmp(&t) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

impl Category for FinPtSet {
    type Obj = PtSet;
    type Mor = PtMap;

    fn src(&self, f: &PtMap) -> PtSet {
        PtSet(f.table.len())
    }

    fn dst(&self, f: &PtMap) -> PtSet {
        PtSet(f.dst)
    }

    fn identity(&self, a: &PtSet) -> PtMap {
        PtMap::from_raw(a.0, (0..a.0 as u32).collect())
    }

    fn compose(&self, f: &PtMap, g: &PtMap) -> Result<PtMap> {
        if f.dst != g.table.len() {
            return Err(Error::CompositionMismatch {
                left: self.describe(f),
                right: self.describe(g),
            });
        }
        Ok(PtMap::from_raw(
            g.dst,
            f.table.iter().map(|&x| g.table[x as usize]).collect(),
        ))
    }

    fn zero_object(&self) -> PtSet {
        PtSet(1)
    }

    fn zero_mor(&self, a: &PtSet, b: &PtSet) -> PtMap {
        PtMap::from_raw(b.0, vec![0; a.0])
    }

    fn limit(&self, nodes: &[PtSet], equations: &[Equation<PtMap>]) -> Result<Cone<Self>> {
        for eq in equations {
            if eq.left >= nodes.len() || eq.right >= nodes.len() {
                return Err(Error::InvalidMorphism("equation names a missing node".into()));
            }
            if self.src(&eq.left_map) != nodes[eq.left]
                || self.src(&eq.right_map) != nodes[eq.right]
            {
                return Err(Error::CompositionMismatch {
                    left: format!("node {}", eq.left),
                    right: self.describe(&eq.left_map),
                });
            }
            if eq.left_map.dst != eq.right_map.dst {
                return Err(Error::CodomainMismatch {
                    left: self.describe(&eq.left_map),
                    right: self.describe(&eq.right_map),
                });
            }
        }
        let sizes: Vec<usize> = nodes.iter().map(|n| n.0).collect();
        let mut generators: Vec<Vec<Side<'_>>> = (0..nodes.len()).map(|_| Vec::new()).collect();
        let mut checks: Vec<Vec<&Equation<PtMap>>> = vec![Vec::new(); nodes.len()];
        for eq in equations {
            let node = eq.left.max(eq.right);
            checks[node].push(eq);
            if eq.left != eq.right {
                let (here, other, other_map) = if eq.left > eq.right {
                    (&eq.left_map, eq.right, &eq.right_map)
                } else {
                    (&eq.right_map, eq.left, &eq.left_map)
                };
                generators[node].push(Side {
                    other,
                    other_map,
                    preimage: preimages(here),
                });
            }
        }
        let mut out = Vec::new();
        let mut tuple = Vec::with_capacity(nodes.len());
        self.search(0, &sizes, &generators, &checks, &mut tuple, &mut out)?;
        let apex = PtSet(out.len());
        let legs = (0..nodes.len())
            .map(|j| PtMap::from_raw(sizes[j], out.iter().map(|t| t[j]).collect()))
            .collect();
        Ok(Cone { apex, legs })
    }

    fn factor_through_legs(&self, competing: &[PtMap], legs: &[PtMap]) -> Result<PtMap> {
        if competing.len() != legs.len() || legs.is_empty() {
            return Err(Error::NoFactorization("leg count mismatch".into()));
        }
        let x = competing[0].table.len();
        let p = legs[0].table.len();
        for (c, l) in competing.iter().zip(legs) {
            if c.table.len() != x || l.table.len() != p || c.dst != l.dst {
                return Err(Error::NoFactorization(format!(
                    "{} cannot factor through {}",
                    self.describe(c),
                    self.describe(l)
                )));
            }
        }
        let leg_tables: Vec<&[u32]> = legs.iter().map(|l| l.table.as_slice()).collect();
        let sorted = (1..p).all(|k| {
            let prev: Vec<u32> = leg_tables.iter().map(|t| t[k - 1]).collect();
            cmp_tuple(&leg_tables, k, &prev) == Ordering::Greater
        });
        let index: Option<HashMap<Vec<u32>, u32>> = if sorted {
            None
        } else {
            let mut map = HashMap::with_capacity(p);
            for k in 0..p {
                let key: Vec<u32> = leg_tables.iter().map(|t| t[k]).collect();
                if map.insert(key, k as u32).is_some() {
                    return Err(Error::NoFactorization("legs are not jointly monic".into()));
                }
            }
            Some(map)
        };
        let mut table = Vec::with_capacity(x);
        let mut target = vec![0u32; legs.len()];
        for t in 0..x {
            for (slot, c) in target.iter_mut().zip(competing) {
                *slot = c.table[t];
            }
            let found = match &index {
                Some(map) => map.get(&target).copied(),
                None => {
                    let (mut lo, mut hi) = (0usize, p);
                    let mut hit = None;
                    while lo < hi {
                        let mid = (lo + hi) / 2;
                        match cmp_tuple(&leg_tables, mid, &target) {
                            Ordering::Less => lo = mid + 1,
                            Ordering::Greater => hi = mid,
                            Ordering::Equal => {
                                hit = Some(mid as u32);
                                break;
                            }
                        }
                    }
                    hit
                }
            };
            match found {
                Some(k) => table.push(k),
                None => {
                    return Err(Error::NoFactorization(format!(
                        "element {t} maps to {target:?}, outside the image of the legs"
                    )))
                }
            }
        }
        if table[0] != 0 {
            return Err(Error::NoFactorization("basepoint not preserved".into()));
        }
        Ok(PtMap::from_raw(p, table))
    }

    fn coequalizer(&self, f: &PtMap, g: &PtMap) -> Result<PtMap> {
        if f.table.len() != g.table.len() || f.dst != g.dst {
            return Err(Error::NotParallel {
                left: self.describe(f),
                right: self.describe(g),
            });
        }
        let n = f.dst;
        let mut uf = UnionFind::<u32>::new(n);
        for (&a, &b) in f.table.iter().zip(&g.table) {
            uf.union(a, b);
        }
        let mut class_of_root = HashMap::new();
        let mut table = Vec::with_capacity(n);
        for b in 0..n as u32 {
            let root = uf.find(b);
            let next = class_of_root.len() as u32;
            table.push(*class_of_root.entry(root).or_insert(next));
        }
        Ok(PtMap::from_raw(class_of_root.len(), table))
    }

    fn image_factorization(&self, f: &PtMap) -> (PtMap, PtMap) {
        let mut values: Vec<u32> = f.table.clone();
        values.sort_unstable();
        values.dedup();
        let mut position = vec![u32::MAX; f.dst];
        for (i, &v) in values.iter().enumerate() {
            position[v as usize] = i as u32;
        }
        let e = PtMap::from_raw(
            values.len(),
            f.table.iter().map(|&v| position[v as usize]).collect(),
        );
        let m = PtMap::from_raw(f.dst, values);
        (e, m)
    }

    fn is_mono(&self, f: &PtMap) -> bool {
        f.is_injective()
    }

    fn is_regular_epi(&self, f: &PtMap) -> bool {
        f.is_surjective()
    }

    fn find_section(&self, f: &PtMap) -> Option<PtMap> {
        let mut section = vec![u32::MAX; f.dst];
        for (x, &v) in f.table.iter().enumerate() {
            if section[v as usize] == u32::MAX {
                section[v as usize] = x as u32;
            }
        }
        if section.contains(&u32::MAX) {
            return None;
        }
        Some(PtMap::from_raw(f.table.len(), section))
    }

    fn size(&self, a: &PtSet) -> usize {
        a.0
    }

    fn difference(&self, f: &PtMap, g: &PtMap) -> Option<String> {
        if f.table.len() != g.table.len() || f.dst != g.dst {
            return Some(format!("{} and {} are not parallel", self.describe(f), self.describe(g)));
        }
        f.table
            .iter()
            .zip(&g.table)
            .position(|(a, b)| a != b)
            .map(|x| format!("x={x}: {} vs {}", f.table[x], g.table[x]))
    }

    fn mono_witness(&self, f: &PtMap) -> Option<String> {
        let mut first = vec![u32::MAX; f.dst];
        for (x, &v) in f.table.iter().enumerate() {
            let seen = first[v as usize];
            if seen != u32::MAX {
                return Some(format!("x={seen} and x={x} both map to {v}"));
            }
            first[v as usize] = x as u32;
        }
        None
    }

    fn epi_witness(&self, f: &PtMap) -> Option<String> {
        let mut hit = vec![false; f.dst];
        for &v in &f.table {
            hit[v as usize] = true;
        }
        hit.iter().position(|h| !h).map(|y| format!("y={y} is not in the image"))
    }

    fn describe(&self, f: &PtMap) -> String {
        format!("{f:?}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat() -> FinPtSet {
        FinPtSet::new()
    }

    fn map(dst: usize, t: &[usize]) -> PtMap {
        PtMap::from_indices(dst, t).unwrap()
    }

    #[test]
    fn rejects_unpointed_tables() {
        assert!(PtMap::from_indices(3, &[1, 0]).is_err());
        assert!(matches!(
            PtMap::from_indices(2, &[0, 2]),
            Err(Error::IndexOutOfRange { index: 2, size: 2 })
        ));
    }

    #[test]
    fn eval_reads_the_table() {
        let c = cat();
        assert_eq!(c.identity(&PtSet(3)).eval(2).unwrap(), 2);
        assert_eq!(map(3, &[0, 2, 1]).eval(1).unwrap(), 2);
        assert_eq!(c.zero_mor(&PtSet(4), &PtSet(3)).eval(3).unwrap(), 0);
        assert!(matches!(
            map(3, &[0, 2, 1]).eval(3),
            Err(Error::IndexOutOfRange { index: 3, size: 3 })
        ));
    }

    #[test]
    fn composition_is_diagrammatic() {
        let c = cat();
        let f = map(3, &[0, 2]);
        let g = map(2, &[0, 1, 1]);
        assert_eq!(c.compose(&f, &g).unwrap(), map(2, &[0, 1]));
        assert!(matches!(
            c.compose(&f, &f),
            Err(Error::CompositionMismatch { .. })
        ));
        let id = c.identity(&PtSet(2));
        assert_eq!(c.compose(&id, &f).unwrap(), f);
    }

    #[test]
    fn map_counts() {
        let c = cat();
        assert_eq!(c.enumerate_maps(PtSet(1), PtSet(5)).unwrap().count(), 1);
        assert_eq!(c.enumerate_maps(PtSet(2), PtSet(3)).unwrap().count(), 3);
        assert_eq!(c.enumerate_maps(PtSet(3), PtSet(2)).unwrap().count(), 4);
        let tables: Vec<Vec<u32>> = c
            .enumerate_maps(PtSet(3), PtSet(2))
            .unwrap()
            .map(|m| m.table().to_vec())
            .collect();
        assert_eq!(tables, vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1]]);
        let small = FinPtSet::with_limits(Limits {
            max_enumeration: 10,
            ..Limits::default()
        });
        assert!(matches!(
            small.enumerate_maps(PtSet(4), PtSet(3)),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn pullback_of_the_fold() {
        let c = cat();
        let fold = map(2, &[0, 1, 1]);
        let pb = c.pullback(&fold, &fold).unwrap();
        // pairs (a, b) with fold(a) = fold(b), enumerated by hand
        let pairs: Vec<(usize, usize)> = (0..3)
            .flat_map(|a| (0..3).map(move |b| (a, b)))
            .filter(|&(a, b)| fold.at(a) == fold.at(b))
            .collect();
        assert_eq!(pairs.len(), 5);
        assert_eq!(pb.apex, PtSet(5));
        for (k, &(a, b)) in pairs.iter().enumerate() {
            assert_eq!((pb.legs[0].at(k), pb.legs[1].at(k)), (a, b));
        }
        let id = c.identity(&PtSet(4));
        let trivial = c.pullback(&id, &id).unwrap();
        assert_eq!(trivial.apex, PtSet(4));
        assert_eq!(trivial.legs[0], id);
    }

    #[test]
    fn equalizer_and_kernels() {
        let c = cat();
        let f = map(2, &[0, 1, 0]);
        let g = map(2, &[0, 1, 1]);
        let eq = c.equalizer(&f, &g).unwrap();
        assert_eq!(eq.legs[0], map(3, &[0, 1]));
        let ker = c.kernel(&map(2, &[0, 0, 1])).unwrap();
        assert_eq!(ker.legs[0], map(3, &[0, 1]));
        let z = c.zero_mor(&PtSet(3), &PtSet(2));
        assert_eq!(c.kernel(&z).unwrap().apex, PtSet(3));
        assert!(matches!(
            c.equalizer(&f, &map(3, &[0, 1, 0])),
            Err(Error::NotParallel { .. })
        ));
    }

    #[test]
    fn coequalizer_merges_classes() {
        let c = cat();
        // codiscrete groupoid on 3 elements: arrows are all pairs (u, v)
        let pairs: Vec<(usize, usize)> = (0..3).flat_map(|u| (0..3).map(move |v| (u, v))).collect();
        let d = map(3, &pairs.iter().map(|p| p.0).collect::<Vec<_>>());
        let cc = map(3, &pairs.iter().map(|p| p.1).collect::<Vec<_>>());
        let e = map(9, &[0, 4, 8]);
        let q = c.reflexive_coequalizer(&d, &cc, &e).unwrap();
        assert_eq!(c.dst(&q), PtSet(1));
        let q_id = c.coequalizer(&d, &d).unwrap();
        assert_eq!(q_id, c.identity(&PtSet(3)));
        assert!(matches!(
            c.reflexive_coequalizer(&d, &cc, &map(9, &[0, 1, 2])),
            Err(Error::NotReflexive(_))
        ));
    }

    #[test]
    fn image_and_sections() {
        let c = cat();
        let f = map(2, &[0, 0, 1, 1]);
        let (e, m) = c.image_factorization(&f);
        assert_eq!(c.dst(&e), PtSet(2));
        assert!(c.is_iso(&m));
        assert_eq!(c.compose(&e, &m).unwrap(), f);
        let s = c.find_section(&map(2, &[0, 1, 0])).unwrap();
        assert_eq!(s, map(3, &[0, 1]));
        let z = c.zero_mor(&PtSet(3), &PtSet(2));
        assert!(!c.is_regular_epi(&z));
        assert!(c.find_section(&z).is_none());
        let inj = map(4, &[0, 2]);
        let (e, m) = c.image_factorization(&inj);
        assert_eq!(e, c.identity(&PtSet(2)));
        assert_eq!(m, inj);
    }

    #[test]
    fn factor_through_kernel_inclusion() {
        let c = cat();
        let k = c.kernel(&map(2, &[0, 1, 0, 1])).unwrap();
        assert_eq!(k.legs[0], map(4, &[0, 2]));
        let f = map(4, &[0, 2, 2]);
        let u = c.factor_through_mono(&f, &k.legs[0]).unwrap();
        assert!(c.is_regular_epi(&u));
        assert_eq!(c.compose(&u, &k.legs[0]).unwrap(), f);
        assert!(matches!(
            c.factor_through_mono(&map(4, &[0, 1]), &k.legs[0]),
            Err(Error::NoFactorization(_))
        ));
    }

    #[test]
    fn mediator_on_own_legs_is_identity() {
        let c = cat();
        let f = map(3, &[0, 1, 2, 2]);
        let g = map(3, &[0, 2, 1]);
        let pb = c.pullback(&f, &g).unwrap();
        let u = pb.mediate(&c, &pb.legs).unwrap();
        assert_eq!(u, c.identity(&pb.apex));
    }

    /// Every cone over a cospan with small objects factors uniquely through the pullback.
    #[test]
    fn pullback_universal_property_by_enumeration() {
        let c = cat();
        let f = map(3, &[0, 1, 2, 1]);
        let g = map(3, &[0, 2, 1]);
        let pb = c.pullback(&f, &g).unwrap();
        for xs in 1..=3 {
            let x = PtSet(xs);
            for a in c.enumerate_maps(x, c.src(&f)).unwrap() {
                for b in c.enumerate_maps(x, c.src(&g)).unwrap() {
                    let is_cone = c.compose(&a, &f).unwrap() == c.compose(&b, &g).unwrap();
                    let factorizations = c
                        .enumerate_maps(x, pb.apex)
                        .unwrap()
                        .filter(|u| {
                            c.compose(u, &pb.legs[0]).unwrap() == a
                                && c.compose(u, &pb.legs[1]).unwrap() == b
                        })
                        .count();
                    assert_eq!(factorizations, usize::from(is_cone));
                    if is_cone {
                        let u = pb.mediate(&c, &[a.clone(), b.clone()]).unwrap();
                        assert_eq!(c.compose(&u, &pb.legs[0]).unwrap(), a);
                    }
                }
            }
        }
    }

    #[test]
    fn mono_and_epi_agree_with_cancellation() {
        let c = cat();
        for a in 1..=3 {
            for b in 1..=3 {
                for f in c.enumerate_maps(PtSet(a), PtSet(b)).unwrap() {
                    // left cancellation against all pairs of maps from a 3-element set
                    let mut left_cancels = true;
                    let maps: Vec<PtMap> = c.enumerate_maps(PtSet(3), PtSet(a)).unwrap().collect();
                    for u in &maps {
                        for v in &maps {
                            if u != v && c.compose(u, &f).unwrap() == c.compose(v, &f).unwrap() {
                                left_cancels = false;
                            }
                        }
                    }
                    assert_eq!(c.is_mono(&f), left_cancels, "{f:?}");
                    let mut right_cancels = true;
                    let outs: Vec<PtMap> = c.enumerate_maps(PtSet(b), PtSet(3)).unwrap().collect();
                    for u in &outs {
                        for v in &outs {
                            if u != v && c.compose(&f, u).unwrap() == c.compose(&f, v).unwrap() {
                                right_cancels = false;
                            }
                        }
                    }
                    assert_eq!(c.is_regular_epi(&f), right_cancels, "{f:?}");
                    assert_eq!(c.is_regular_epi(&f), c.find_section(&f).is_some());
                    let (_, m) = c.image_factorization(&f);
                    assert_eq!(c.is_regular_epi(&f), c.is_iso(&m));
                }
            }
        }
    }

    #[test]
    fn witnesses() {
        let c = cat();
        let f = map(3, &[0, 1, 1]);
        assert_eq!(c.mono_witness(&f).unwrap(), "x=1 and x=2 both map to 1");
        assert_eq!(c.epi_witness(&f).unwrap(), "y=2 is not in the image");
        assert!(c.difference(&f, &f).is_none());
    }
}
