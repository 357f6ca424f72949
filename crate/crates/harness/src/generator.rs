//! Seeded random groupoids, functors and chain maps.
//!
//! A generated groupoid in pointed sets is a disjoint union of full groupoids:
//! component `j` has `n_j` objects and vertex group `G_j`, and its arrows are
//! the triples `(u, v, h)` with `u, v` in the component and `h ∈ G_j`, going
//! from `u` to `v`. Arrows are numbered in lexicographic order of the triples
//! with objects numbered component by component, so object 0 (the basepoint)
//! is the first object of component 0 and arrow 0 is its unit.
//!
//! A generated functor picks a component map, an object map, a homomorphism
//! `φ_j` per component and a transport element `t_u` per object, and sends
//! `(u, v, h)` to `(F0 u, F0 v, t_u⁻¹ φ_j(h) t_v)`.

use std::sync::Arc;

use grpd_core::fpvect::{chain_map_functor, complex_to_groupoid, FpVect};
use grpd_core::fixtures::{cyclic_table, klein_table, s3_table};
use grpd_core::{FinPtSet, Groupoid, InternalFunctor, InternalGroupoid, Matrix};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type GenRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A finite group by its multiplication table, unit at 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    pub name: String,
    pub table: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
}

impl Group {
    pub fn new(name: impl Into<String>, table: Vec<Vec<usize>>) -> Self {
        let inverse = (0..table.len())
            .map(|a| (0..table.len()).find(|&b| table[a][b] == 0).expect("group table"))
            .collect();
        Group {
            name: name.into(),
            table,
            inverse,
        }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![0];
        for g in 1..self.order() {
            if !span.contains(&g) {
                gens.push(g);
                span = self.closure(&gens);
            }
        }
        gens
    }

    fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = vec![0];
        while let Some(x) = queue.pop() {
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        (0..self.order()).filter(|&g| seen[g]).collect()
    }
}

/// All homomorphisms `g → h`, as image tables.
pub fn homomorphisms(g: &Group, h: &Group) -> Vec<Vec<usize>> {
    let gens = g.generators();
    let mut out = Vec::new();
    let mut images = vec![0; gens.len()];
    loop {
        if let Some(map) = extend(g, h, &gens, &images) {
            out.push(map);
        }
        // odometer over generator images
        let mut k = 0;
        loop {
            if k == gens.len() {
                out.sort();
                out.dedup();
                return out;
            }
            images[k] += 1;
            if images[k] < h.order() {
                break;
            }
            images[k] = 0;
            k += 1;
        }
    }
}

fn extend(g: &Group, h: &Group, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    map[0] = 0;
    let mut queue = vec![0];
    while let Some(x) = queue.pop() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let image = h.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = image;
                queue.push(y);
            } else if map[y] != image {
                return None;
            }
        }
    }
    let hom = (0..g.order()).all(|a| (0..g.order()).all(|b| map[g.mul(a, b)] == h.mul(map[a], map[b])));
    hom.then_some(map)
}

fn injective(map: &[usize]) -> bool {
    let mut seen = map.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == map.len()
}

fn surjective(map: &[usize], order: usize) -> bool {
    let mut hit = vec![false; order];
    map.iter().for_each(|&x| hit[x] = true);
    hit.into_iter().all(|x| x)
}

/// Cyclic groups of order 1 to 6, the Klein four-group and `S3`.
pub fn catalog() -> Vec<Group> {
    let mut groups: Vec<Group> = (1..=6).map(|n| Group::new(format!("Z{n}"), cyclic_table(n))).collect();
    groups.push(Group::new("V4", klein_table()));
    groups.push(Group::new("S3", s3_table()));
    groups
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub max_objects: usize,
    pub max_group_order: usize,
    pub max_components: usize,
}

impl Default for GeneratorSpec {
    fn default() -> Self {
        GeneratorSpec {
            max_objects: 6,
            max_group_order: 6,
            max_components: 3,
        }
    }
}

impl GeneratorSpec {
    pub fn with_max_objects(max_objects: usize) -> Self {
        GeneratorSpec {
            max_objects: max_objects.max(1),
            ..Self::default()
        }
    }

    /// Bounds keeping every level of every generated groupoid at `limit`
    /// elements or fewer.
    pub fn tiny(limit: usize) -> Self {
        GeneratorSpec {
            max_objects: limit.max(1),
            max_group_order: limit.max(1),
            max_components: limit.max(1),
        }
    }
}

/// The combinatorial description of a generated groupoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shape {
    pub components: Vec<(usize, Group)>,
}

impl Shape {
    pub fn objects(&self) -> usize {
        self.components.iter().map(|(n, _)| n).sum()
    }

    pub fn arrows(&self) -> usize {
        self.components.iter().map(|(n, g)| n * n * g.order()).sum()
    }

    fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.components
            .iter()
            .map(|(n, _)| {
                let o = acc;
                acc += n;
                o
            })
            .collect()
    }

    /// Component of each object.
    pub fn component_of(&self) -> Vec<usize> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(j, (n, _))| std::iter::repeat_n(j, *n))
            .collect()
    }

    /// Index of the arrow `(u, v, h)`.
    pub fn arrow(&self, u: usize, v: usize, h: usize) -> usize {
        let comp = self.component_of();
        let j = comp[u];
        let offsets = self.offsets();
        let before: usize = self.components[..j].iter().map(|(n, g)| n * n * g.order()).sum();
        let (n, g) = &self.components[j];
        let (lu, lv) = (u - offsets[j], v - offsets[j]);
        before + (lu * n + lv) * g.order() + h
    }

    /// Every arrow as `(u, v, h)`, in index order.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        let offsets = self.offsets();
        let mut out = Vec::with_capacity(self.arrows());
        for ((n, g), o) in self.components.iter().zip(offsets) {
            for u in o..o + n {
                for v in o..o + n {
                    for h in 0..g.order() {
                        out.push((u, v, h));
                    }
                }
            }
        }
        out
    }

    pub fn build(&self, cat: &FinPtSet) -> grpd_core::Result<InternalGroupoid<FinPtSet>> {
        let triples = self.triples();
        let comp = self.component_of();
        let d: Vec<usize> = triples.iter().map(|t| t.0).collect();
        let c: Vec<usize> = triples.iter().map(|t| t.1).collect();
        let e: Vec<usize> = (0..self.objects()).map(|u| self.arrow(u, u, 0)).collect();
        let group = |u: usize| &self.components[comp[u]].1;
        let inverse: Vec<usize> = triples
            .iter()
            .map(|&(u, v, h)| self.arrow(v, u, group(u).inverse[h]))
            .collect();
        InternalGroupoid::from_tables(
            cat,
            self.objects(),
            &d,
            &c,
            &e,
            |a, b| {
                let (u, _, h) = triples[a];
                let (_, w, k) = triples[b];
                self.arrow(u, w, group(u).mul(h, k))
            },
            Some(&inverse),
        )
    }
}

pub fn random_shape(rng: &mut GenRng, spec: &GeneratorSpec) -> Shape {
    let groups: Vec<Group> = catalog()
        .into_iter()
        .filter(|g| g.order() <= spec.max_group_order.max(1))
        .collect();
    let components = rng.gen_range(1..=spec.max_components.min(spec.max_objects).max(1));
    let mut budget = spec.max_objects - components;
    let mut out = Vec::with_capacity(components);
    for _ in 0..components {
        let extra = rng.gen_range(0..=budget.min(2));
        budget -= extra;
        out.push((1 + extra, groups.choose(rng).expect("nonempty catalog").clone()));
    }
    Shape { components: out }
}

/// The kind of functor to generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Arbitrary,
    Fibration,
    Faithful,
    Full,
}

impl Flavor {
    pub const ALL: [Flavor; 4] = [Flavor::Arbitrary, Flavor::Fibration, Flavor::Faithful, Flavor::Full];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Arbitrary => "arbitrary",
            Flavor::Fibration => "fibration",
            Flavor::Faithful => "faithful",
            Flavor::Full => "full",
        }
    }
}

/// A generated functor together with the data it was assembled from.
#[derive(Clone, Debug)]
pub struct GeneratedFunctor {
    pub flavor: Flavor,
    pub src_shape: Shape,
    pub dst_shape: Shape,
    pub functor: InternalFunctor<FinPtSet>,
}

/// A random functor `A → B` of the requested flavor; `B` is generated first
/// and `A` is built component by component over it.
pub fn random_functor(rng: &mut GenRng, spec: &GeneratorSpec, flavor: Flavor) -> GeneratedFunctor {
    let dst_shape = random_shape(rng, spec);
    random_functor_into(rng, spec, flavor, dst_shape)
}

/// A random functor of the requested flavor into the groupoid of `dst_shape`.
pub fn random_functor_into(rng: &mut GenRng, spec: &GeneratorSpec, flavor: Flavor, dst_shape: Shape) -> GeneratedFunctor {
    let groups: Vec<Group> = catalog()
        .into_iter()
        .filter(|g| g.order() <= spec.max_group_order.max(1))
        .collect();
    let dst_offsets = dst_shape.offsets();

    let components = rng.gen_range(1..=spec.max_components.min(spec.max_objects).max(1));
    let mut budget = spec.max_objects;
    let mut src = Vec::new();
    // per source component: target component, object images (local) and hom
    let mut plan: Vec<(usize, Vec<usize>, Vec<usize>)> = Vec::new();
    for j in 0..components {
        let remaining = components - j - 1;
        if budget <= remaining {
            break;
        }
        // a full functor cannot send two components into one
        let free: Vec<usize> = (0..dst_shape.components.len())
            .filter(|t| flavor != Flavor::Full || plan.iter().all(|p| p.0 != *t))
            .collect();
        let target = match (j, free.choose(rng)) {
            (0, _) => 0,
            (_, Some(&t)) => t,
            (_, None) => break,
        };
        let (tn, tg) = &dst_shape.components[target];
        // the basepoint component of a fibration must cover its target, so it may use the whole budget
        let available = if flavor == Flavor::Fibration && j == 0 { budget } else { budget - remaining };
        let (n, locals) = if flavor == Flavor::Fibration {
            if *tn > available {
                continue;
            } else {
                let n = rng.gen_range(*tn..=available.min(tn + 1));
                let mut locals: Vec<usize> = (0..*tn).collect();
                locals.extend((*tn..n).map(|_| rng.gen_range(0..*tn)));
                locals[1..].shuffle(rng);
                (n, locals)
            }
        } else {
            let n = rng.gen_range(1..=available.min(3));
            let mut locals: Vec<usize> = (0..n).map(|_| rng.gen_range(0..*tn)).collect();
            if j == 0 {
                locals[0] = 0;
            }
            (n, locals)
        };
        let wanted = |map: &[usize]| match flavor {
            Flavor::Arbitrary => true,
            Flavor::Faithful => injective(map),
            Flavor::Full | Flavor::Fibration => surjective(map, tg.order()),
        };
        let mut options: Vec<(Group, Vec<usize>)> = Vec::new();
        // the target group itself keeps the identity available when the catalog is capped
        let own = (!groups.iter().any(|g| g.table == tg.table)).then(|| tg.clone());
        for g in groups.iter().chain(own.iter()) {
            for map in homomorphisms(g, tg) {
                if wanted(&map) {
                    options.push((g.clone(), map));
                }
            }
        }
        let (g, hom) = options.choose(rng).expect("identity hom is always available").clone();
        budget -= n;
        src.push((n, g));
        plan.push((target, locals, hom));
    }
    let src_shape = Shape { components: src };
    let src_comp = src_shape.component_of();
    let src_offsets = src_shape.offsets();
    let mut f0 = vec![0usize; src_shape.objects()];
    let mut transport = vec![0usize; src_shape.objects()];
    for u in 0..src_shape.objects() {
        let j = src_comp[u];
        let (target, locals, _) = &plan[j];
        f0[u] = dst_offsets[*target] + locals[u - src_offsets[j]];
        let tg = &dst_shape.components[*target].1;
        transport[u] = if u == 0 { 0 } else { rng.gen_range(0..tg.order()) };
    }
    let homs: Vec<Vec<usize>> = plan.into_iter().map(|p| p.2).collect();
    let functor = assemble(&src_shape, &dst_shape, &f0, &homs, &transport);
    GeneratedFunctor {
        flavor,
        src_shape,
        dst_shape,
        functor,
    }
}

/// The functor with object map `f0`, one homomorphism per source component
/// and one transport element per source object.
pub fn assemble(
    src_shape: &Shape,
    dst_shape: &Shape,
    f0: &[usize],
    homs: &[Vec<usize>],
    transport: &[usize],
) -> InternalFunctor<FinPtSet> {
    let cat = FinPtSet::new();
    let a = Arc::new(src_shape.build(&cat).expect("generated groupoids are valid"));
    let b = Arc::new(dst_shape.build(&cat).expect("generated groupoids are valid"));
    let src_comp = src_shape.component_of();
    let dst_comp = dst_shape.component_of();
    let f1: Vec<usize> = src_shape
        .triples()
        .iter()
        .map(|&(u, v, h)| {
            let tg = &dst_shape.components[dst_comp[f0[u]]].1;
            let image = homs[src_comp[u]][h];
            let k = tg.mul(tg.mul(tg.inverse[transport[u]], image), transport[v]);
            dst_shape.arrow(f0[u], f0[v], k)
        })
        .collect();
    InternalFunctor::new(
        a,
        b.clone(),
        cat.map(b.b0.0, f0).expect("object map"),
        cat.map(b.b1.0, &f1).expect("arrow map"),
    )
    .expect("shapes agree")
}

pub fn random_groupoid(rng: &mut GenRng, spec: &GeneratorSpec) -> (Shape, Groupoid<FinPtSet>) {
    let shape = random_shape(rng, spec);
    let g = Arc::new(shape.build(&FinPtSet::new()).expect("generated groupoids are valid"));
    (shape, g)
}

/// A random 2-term complex `∂: C1 → C0`.
pub fn random_complex(rng: &mut GenRng, cat: &FpVect, max_dim: usize) -> Matrix {
    let (n1, n0) = (rng.gen_range(0..=max_dim), rng.gen_range(0..=max_dim));
    random_matrix(rng, cat.modulus(), n1, n0)
}

pub fn random_matrix(rng: &mut GenRng, p: u32, rows: usize, cols: usize) -> Matrix {
    let data: Vec<i64> = (0..rows * cols).map(|_| rng.gen_range(0..p as i64)).collect();
    Matrix::new(p, rows, cols, &data).expect("dimensions agree")
}

/// A uniformly random chain map `(f1, f0)` from `∂a` to `∂b`: a random
/// combination of a basis of the solutions of `∂a·f0 = f1·∂b`.
pub fn random_chain_map(rng: &mut GenRng, da: &Matrix, db: &Matrix) -> (Matrix, Matrix) {
    let p = da.modulus();
    let (a1, a0) = (da.rows(), da.cols());
    let (b1, b0) = (db.rows(), db.cols());
    let unknowns = a1 * b1 + a0 * b0;
    let equations = a1 * b0;
    // x·M = 0, with x = (f1 entries, f0 entries) and one column per entry of ∂a·f0 − f1·∂b
    let mut m = vec![0i64; unknowns * equations];
    for i in 0..a1 {
        for j in 0..b0 {
            let col = i * b0 + j;
            for l in 0..b1 {
                let row = i * b1 + l;
                m[row * equations + col] -= db.get(l, j) as i64;
            }
            for k in 0..a0 {
                let row = a1 * b1 + k * b0 + j;
                m[row * equations + col] += da.get(i, k) as i64;
            }
        }
    }
    let system = Matrix::new(p, unknowns, equations, &m).expect("dimensions agree");
    let basis = system.nullspace_basis();
    let coeffs = random_matrix(rng, p, 1, basis.rows());
    let x = coeffs.mul(&basis).expect("shapes agree");
    let f1: Vec<i64> = (0..a1 * b1).map(|k| x.get(0, k) as i64).collect();
    let f0: Vec<i64> = (0..a0 * b0).map(|k| x.get(0, a1 * b1 + k) as i64).collect();
    (
        Matrix::new(p, a1, b1, &f1).expect("dimensions agree"),
        Matrix::new(p, a0, b0, &f0).expect("dimensions agree"),
    )
}

/// A random chain map between random complexes, as an internal functor.
#[derive(Clone, Debug)]
pub struct GeneratedChainMap {
    pub da: Matrix,
    pub db: Matrix,
    pub f1: Matrix,
    pub f0: Matrix,
    pub functor: InternalFunctor<FpVect>,
}

pub fn random_chain_functor(rng: &mut GenRng, cat: &FpVect, max_dim: usize) -> GeneratedChainMap {
    let da = random_complex(rng, cat, max_dim);
    let db = random_complex(rng, cat, max_dim);
    let (f1, f0) = random_chain_map(rng, &da, &db);
    let a = Arc::new(complex_to_groupoid(cat, &da).expect("complexes present groupoids"));
    let b = Arc::new(complex_to_groupoid(cat, &db).expect("complexes present groupoids"));
    let functor = chain_map_functor(&a, &b, &f1, &f0).expect("chain maps are functors");
    GeneratedChainMap {
        da,
        db,
        f1,
        f0,
        functor,
    }
}

/// The point, as a shape.
pub fn point_shape() -> Shape {
    Shape {
        components: vec![(1, Group::new("Z1", cyclic_table(1)))],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use grpd_core::classify::classify;
    use grpd_core::invariants::pi0;

    #[test]
    fn hom_counts() {
        let groups = catalog();
        let by = |n: &str| groups.iter().find(|g| g.name == n).unwrap();
        assert_eq!(homomorphisms(by("Z4"), by("Z4")).len(), 4);
        assert_eq!(homomorphisms(by("Z4"), by("Z2")).len(), 2);
        assert_eq!(homomorphisms(by("V4"), by("Z2")).len(), 4);
        assert_eq!(homomorphisms(by("S3"), by("S3")).len(), 10);
        assert_eq!(homomorphisms(by("Z6"), by("S3")).len(), 6);
        assert_eq!(homomorphisms(by("Z3"), by("Z2")).len(), 1);
    }

    #[test]
    fn generated_groupoids_validate() {
        let mut r = rng(1);
        for _ in 0..20 {
            let (shape, g) = random_groupoid(&mut r, &GeneratorSpec::default());
            assert!(g.validate().all_pass());
            assert!(shape.objects() <= 6);
            assert_eq!(pi0(&g).unwrap().obj.0, shape.components.len());
        }
    }

    #[test]
    fn one_trivial_component_is_a_point() {
        let g = point_shape().build(&FinPtSet::new()).unwrap();
        assert_eq!((g.b0.0, g.b1.0), (1, 1));
        assert!(g.is_discrete());
    }

    #[test]
    fn generated_functors_validate_with_their_flavor() {
        let mut r = rng(2);
        for flavor in Flavor::ALL {
            for _ in 0..10 {
                let f = random_functor(&mut r, &GeneratorSpec::default(), flavor).functor;
                assert!(f.validate().all_pass(), "{flavor:?}");
                let k = classify(&f).unwrap();
                match flavor {
                    Flavor::Arbitrary => {}
                    Flavor::Fibration => assert!(k.fibration),
                    Flavor::Faithful => assert!(k.faithful),
                    Flavor::Full => assert!(k.full),
                }
            }
        }
    }

    #[test]
    fn same_seed_same_functor() {
        let a = random_functor(&mut rng(9), &GeneratorSpec::default(), Flavor::Arbitrary);
        let b = random_functor(&mut rng(9), &GeneratorSpec::default(), Flavor::Arbitrary);
        assert_eq!(a.functor, b.functor);
    }

    #[test]
    fn chain_maps_commute() {
        let cat = FpVect::new(3).unwrap();
        let mut r = rng(3);
        for _ in 0..20 {
            let g = random_chain_functor(&mut r, &cat, 4);
            assert_eq!(g.da.mul(&g.f0).unwrap(), g.f1.mul(&g.db).unwrap());
            assert!(g.functor.validate().all_pass());
        }
    }
}
