//! Generalized matrix algebras: block-indexed algebras `A = (A_ij)` over an
//! index set of group elements, multiplying blockwise,
//! `(x y)_il = sum_j x_ij y_jl`.
//!
//! Each nonempty block carries its own basis; composition constants are
//! stored sparsely per block triple. The whole algebra flattens to a
//! [`GradedAlgebra`] graded by `deg A_ij = label(i) - label(j)`, which is
//! how bracket-level operations are reached.

use std::collections::BTreeMap;

use crate::algebra::{GradedAlgebra, GradedElement, StructureTable};
use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::grading::{Bicharacter, GroupElement, GroupSpec};
use crate::report::{CheckReport, Defect, Witness};

/// Composition key `(i, j, l, p, q)`: block row `i`, inner index `j`, block
/// column `l`, basis position `p` in `A_ij`, `q` in `A_jl`.
pub type CompKey = (usize, usize, usize, usize, usize);

/// Sparse composition constants: `A_ij[p] * A_jl[q] = sum c * A_il[r]`.
pub type CompTable = BTreeMap<CompKey, Vec<(usize, FieldElement)>>;

#[derive(Clone, Debug, PartialEq)]
pub struct GmAlgebra {
    field: FieldSpec,
    group: GroupSpec,
    index_set: Vec<GroupElement>,
    blocks: BTreeMap<(usize, usize), Vec<String>>,
    comp: CompTable,
    // Flattened view, fixed at construction: blocks in key order, then local
    // order. Parallel name/degree tables index the global basis.
    offsets: BTreeMap<(usize, usize), usize>,
    flat: Vec<((usize, usize), usize, String)>,
}

/// A sparse element: per block, sparse local coefficients. Zero coefficients
/// and empty blocks are never stored.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct GmElement {
    blocks: BTreeMap<(usize, usize), BTreeMap<usize, FieldElement>>,
}

impl GmElement {
    pub fn zero() -> Self {
        GmElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &BTreeMap<(usize, usize), BTreeMap<usize, FieldElement>> {
        &self.blocks
    }

    pub fn add_term(&mut self, block: (usize, usize), local: usize, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let slot = self.blocks.entry(block).or_default();
        match slot.entry(local) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = &*o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        if self.blocks.get(&block).is_some_and(|m| m.is_empty()) {
            self.blocks.remove(&block);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (block, locals) in &other.blocks {
            for (local, c) in locals {
                out.add_term(*block, *local, c.clone());
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (block, locals) in &other.blocks {
            for (local, c) in locals {
                out.add_term(*block, *local, -c);
            }
        }
        out
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        let mut out = GmElement::zero();
        for (block, locals) in &self.blocks {
            for (local, v) in locals {
                out.add_term(*block, *local, c * v);
            }
        }
        out
    }
}

impl GmAlgebra {
    /// Builds a generalized matrix algebra and validates block typing:
    /// index labels distinct, block bases nonempty with globally unique
    /// names, and every composition entry connecting existing blocks with
    /// matching inner index, landing in the declared `(i, l)` block.
    ///
    /// Associativity of the composition table is a verdict of
    /// [`check_associative`](GmAlgebra::check_associative), not an
    /// assumption.
    pub fn new(
        field: FieldSpec,
        group: GroupSpec,
        index_set: Vec<GroupElement>,
        blocks: BTreeMap<(usize, usize), Vec<String>>,
        comp: CompTable,
    ) -> Result<Self, Error> {
        let n = index_set.len();
        for g in &index_set {
            if g.coords().len() != group.rank() {
                return Err(Error::invalid("gm algebra", "index label has wrong coordinate count"));
            }
        }
        {
            let mut sorted = index_set.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != n {
                return Err(Error::invalid("gm algebra", "duplicate index labels"));
            }
        }
        let mut names: Vec<&String> = Vec::new();
        for ((i, j), basis) in &blocks {
            if *i >= n || *j >= n {
                return Err(Error::invalid(
                    "gm algebra",
                    format!("block ({i}, {j}) outside the index set"),
                ));
            }
            if basis.is_empty() {
                return Err(Error::invalid(
                    "gm algebra",
                    format!("block ({i}, {j}) declared empty; omit it instead"),
                ));
            }
            for name in basis {
                if name.is_empty() || name.chars().any(char::is_whitespace) {
                    return Err(Error::invalid("gm algebra", "basis names must be nonempty without whitespace"));
                }
                names.push(name);
            }
        }
        {
            let mut sorted = names.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != names.len() {
                return Err(Error::invalid("gm algebra", "basis names must be globally unique"));
            }
        }
        for (&(i, j, l, p, q), terms) in &comp {
            let left = blocks.get(&(i, j)).ok_or_else(|| {
                Error::invalid("gm algebra", format!("composition references missing block ({i}, {j})"))
            })?;
            let right = blocks.get(&(j, l)).ok_or_else(|| {
                Error::invalid("gm algebra", format!("composition references missing block ({j}, {l})"))
            })?;
            if p >= left.len() || q >= right.len() {
                return Err(Error::invalid(
                    "gm algebra",
                    format!("composition ({i},{j},{l},{p},{q}) indexes past a block basis"),
                ));
            }
            let target = blocks.get(&(i, l)).ok_or_else(|| {
                Error::invalid(
                    "gm algebra",
                    format!("composition ({i},{j},{l}) lands in undeclared block ({i}, {l})"),
                )
            })?;
            let mut seen = Vec::new();
            for (r, c) in terms {
                if *r >= target.len() {
                    return Err(Error::invalid("gm algebra", "composition target index out of range"));
                }
                if c.is_zero() {
                    return Err(Error::invalid("gm algebra", "explicit zero composition constant"));
                }
                if c.spec() != field {
                    return Err(Error::FieldMismatch(c.spec(), field));
                }
                if seen.contains(r) {
                    return Err(Error::invalid("gm algebra", "duplicate composition target"));
                }
                seen.push(*r);
            }
        }
        let mut offsets = BTreeMap::new();
        let mut flat = Vec::new();
        for (block, basis) in &blocks {
            offsets.insert(*block, flat.len());
            for (local, name) in basis.iter().enumerate() {
                flat.push((*block, local, name.clone()));
            }
        }
        Ok(GmAlgebra { field, group, index_set, blocks, comp, offsets, flat })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn index_set(&self) -> &[GroupElement] {
        &self.index_set
    }

    pub fn blocks(&self) -> &BTreeMap<(usize, usize), Vec<String>> {
        &self.blocks
    }

    pub fn comp(&self) -> &CompTable {
        &self.comp
    }

    pub fn dim(&self) -> usize {
        self.flat.len()
    }

    pub fn block_dim(&self, block: (usize, usize)) -> usize {
        self.blocks.get(&block).map_or(0, |b| b.len())
    }

    /// Position of a group element in the index set.
    pub fn index_of_label(&self, g: &GroupElement) -> Option<usize> {
        self.index_set.iter().position(|h| h == g)
    }

    /// Degree of block `(i, j)`: `label(i) - label(j)`.
    pub fn block_degree(&self, i: usize, j: usize) -> GroupElement {
        self.group.sub(&self.index_set[i], &self.index_set[j])
    }

    pub fn global_index(&self, block: (usize, usize), local: usize) -> usize {
        self.offsets[&block] + local
    }

    /// `(block, local, name)` of a flattened basis position.
    pub fn global_info(&self, g: usize) -> (&(usize, usize), usize, &str) {
        let (block, local, name) = &self.flat[g];
        (block, *local, name)
    }

    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.flat.iter().position(|(_, _, n)| n == name)
    }

    pub fn basis_element(&self, global: usize) -> GmElement {
        let (block, local, _) = &self.flat[global];
        let mut e = GmElement::zero();
        e.add_term(*block, *local, FieldElement::one(self.field));
        e
    }

    /// Blockwise product: inner indices must match, outputs accumulate per
    /// composition table.
    pub fn multiply(&self, a: &GmElement, b: &GmElement) -> GmElement {
        let mut out = GmElement::zero();
        for ((i, j), alocals) in a.blocks() {
            for ((j2, l), blocals) in b.blocks() {
                if j2 != j {
                    continue;
                }
                for (p, ca) in alocals {
                    for (q, cb) in blocals {
                        if let Some(terms) = self.comp.get(&(*i, *j, *l, *p, *q)) {
                            let cab = ca * cb;
                            for (r, c) in terms {
                                out.add_term((*i, *l), *r, &cab * c);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// The block of an element at the given index labels. Labels outside the
    /// index set are an error; an absent block is the zero map.
    pub fn block_of(
        &self,
        a: &GmElement,
        gi: &GroupElement,
        gj: &GroupElement,
    ) -> Result<BTreeMap<usize, FieldElement>, Error> {
        let i = self
            .index_of_label(gi)
            .ok_or_else(|| Error::precondition(format!("label {gi} is not in the index set")))?;
        let j = self
            .index_of_label(gj)
            .ok_or_else(|| Error::precondition(format!("label {gj} is not in the index set")))?;
        Ok(a.blocks().get(&(i, j)).cloned().unwrap_or_default())
    }

    /// Splits an element by block degree.
    pub fn degree_components(&self, a: &GmElement) -> BTreeMap<GroupElement, GmElement> {
        let mut out: BTreeMap<GroupElement, GmElement> = BTreeMap::new();
        for (block, locals) in a.blocks() {
            let deg = self.block_degree(block.0, block.1);
            let slot = out.entry(deg).or_default();
            for (local, c) in locals {
                slot.add_term(*block, *local, c.clone());
            }
        }
        out
    }

    /// Degree of a homogeneous element; zero is homogeneous of degree 0.
    pub fn degree_of(&self, a: &GmElement) -> Result<GroupElement, Error> {
        let comps = self.degree_components(a);
        match comps.len() {
            0 => Ok(self.group.zero()),
            1 => Ok(comps.into_keys().next().unwrap()),
            n => Err(Error::precondition(format!(
                "element is not homogeneous ({n} distinct block degrees)"
            ))),
        }
    }

    /// The braided bracket computed blockwise,
    /// `[a, b] = a b - r(|b|, |a|) b a` over homogeneous components.
    pub fn bracket(&self, r: &Bicharacter, a: &GmElement, b: &GmElement) -> GmElement {
        let mut out = GmElement::zero();
        for (u, ag) in self.degree_components(a) {
            for (v, bh) in self.degree_components(b) {
                let w = r.eval(&v, &u);
                let fwd = self.multiply(&ag, &bh);
                let bwd = self.multiply(&bh, &ag).scale(&w);
                out = out.add(&fwd.sub(&bwd));
            }
        }
        out
    }

    /// Associativity on all composable block-basis triples, checked directly
    /// on the composition table.
    pub fn check_associative(&self) -> CheckReport {
        let n = self.dim();
        for x in 0..n {
            let ex = self.basis_element(x);
            for y in 0..n {
                let ey = self.basis_element(y);
                let xy = self.multiply(&ex, &ey);
                for z in 0..n {
                    let ez = self.basis_element(z);
                    let lhs = self.multiply(&xy, &ez);
                    let rhs = self.multiply(&ex, &self.multiply(&ey, &ez));
                    let defect = lhs.sub(&rhs);
                    if !defect.is_zero() {
                        return CheckReport::fail(
                            "assoc",
                            Witness {
                                indices: vec![x, y, z],
                                labels: vec![
                                    self.flat[x].2.clone(),
                                    self.flat[y].2.clone(),
                                    self.flat[z].2.clone(),
                                ],
                                defect: self.vector_defect(&defect),
                            },
                        );
                    }
                }
            }
        }
        CheckReport::pass("assoc")
    }

    fn vector_defect(&self, v: &GmElement) -> Defect {
        let mut terms = Vec::new();
        for (block, locals) in v.blocks() {
            for (local, c) in locals {
                terms.push((self.blocks[block][*local].clone(), c.clone()));
            }
        }
        Defect::Vector(terms)
    }

    /// The flattened graded algebra: one basis vector per block-basis entry,
    /// `deg = label(i) - label(j)`, products from the composition table, and
    /// the given braiding.
    pub fn to_graded(&self, braiding: &Bicharacter) -> Result<GradedAlgebra, Error> {
        if braiding.group() != &self.group {
            return Err(Error::invalid("gm algebra", "braiding group differs from index group"));
        }
        if braiding.field() != self.field {
            return Err(Error::FieldMismatch(braiding.field(), self.field));
        }
        let basis: Vec<String> = self.flat.iter().map(|(_, _, n)| n.clone()).collect();
        let deg: Vec<GroupElement> = self
            .flat
            .iter()
            .map(|(block, _, _)| self.block_degree(block.0, block.1))
            .collect();
        let mut sc = StructureTable::new();
        for (&(i, j, l, p, q), terms) in &self.comp {
            let gp = self.global_index((i, j), p);
            let gq = self.global_index((j, l), q);
            let entry: Vec<(usize, FieldElement)> = terms
                .iter()
                .map(|(r, c)| (self.global_index((i, l), *r), c.clone()))
                .collect();
            sc.insert((gp, gq), entry);
        }
        let mut unit = None;
        // Detect a unit among sums of local identities is out of scope; a
        // single basis vector acting as a two-sided unit is recognized.
        for g in 0..self.dim() {
            let e = self.basis_element(g);
            if self.block_degree(self.flat[g].0 .0, self.flat[g].0 .1) != self.group.zero() {
                continue;
            }
            let is_unit = (0..self.dim()).all(|h| {
                let bh = self.basis_element(h);
                self.multiply(&e, &bh) == bh && self.multiply(&bh, &e) == bh
            });
            if is_unit {
                unit = Some(g);
                break;
            }
        }
        GradedAlgebra::new(self.field, self.group.clone(), braiding.clone(), basis, deg, sc, unit)
    }

    /// Flattens an element to coefficients over the graded basis.
    pub fn elem_to_graded(&self, a: &GmElement) -> GradedElement {
        let mut out = GradedElement::zero();
        for (block, locals) in a.blocks() {
            for (local, c) in locals {
                out.add_term(self.global_index(*block, *local), c.clone());
            }
        }
        out
    }

    /// Reassembles a flattened element into block form.
    pub fn elem_from_graded(&self, a: &GradedElement) -> GmElement {
        let mut out = GmElement::zero();
        for (g, c) in a.coeffs() {
            let (block, local, _) = &self.flat[*g];
            out.add_term(*block, *local, c.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::gl_block_algebra;

    fn one(spec: FieldSpec) -> FieldElement {
        FieldElement::one(spec)
    }

    /// The 2x2 upper triangular matrices as a gm algebra over Z_2.
    fn upper_triangular() -> GmAlgebra {
        let field = FieldSpec::Rational;
        let group = GroupSpec::new(vec![2]).unwrap();
        let index_set = vec![group.element(vec![0]).unwrap(), group.element(vec![1]).unwrap()];
        let mut blocks = BTreeMap::new();
        blocks.insert((0, 0), vec!["a".to_string()]);
        blocks.insert((0, 1), vec!["b".to_string()]);
        blocks.insert((1, 1), vec!["d".to_string()]);
        let mut comp = CompTable::new();
        comp.insert((0, 0, 0, 0, 0), vec![(0, one(field))]);
        comp.insert((0, 0, 1, 0, 0), vec![(0, one(field))]);
        comp.insert((0, 1, 1, 0, 0), vec![(0, one(field))]);
        comp.insert((1, 1, 1, 0, 0), vec![(0, one(field))]);
        GmAlgebra::new(field, group, index_set, blocks, comp).unwrap()
    }

    #[test]
    fn blockwise_products() {
        let alg = upper_triangular();
        let a = alg.basis_element(alg.index_of_name("a").unwrap());
        let b = alg.basis_element(alg.index_of_name("b").unwrap());
        let d = alg.basis_element(alg.index_of_name("d").unwrap());
        assert_eq!(alg.multiply(&a, &b), b);
        assert_eq!(alg.multiply(&b, &d), b);
        assert!(alg.multiply(&b, &b).is_zero());
        assert!(alg.multiply(&d, &a).is_zero());
        alg.check_associative().expect_pass();
    }

    #[test]
    fn block_degrees_and_accessor() {
        let alg = upper_triangular();
        let g = alg.group().clone();
        assert_eq!(alg.block_degree(0, 1), g.element(vec![-1]).unwrap());
        assert_eq!(alg.block_degree(0, 1), g.element(vec![1]).unwrap());
        let b = alg.basis_element(alg.index_of_name("b").unwrap());
        let zero = g.element(vec![0]).unwrap();
        let one_ = g.element(vec![1]).unwrap();
        let blk = alg.block_of(&b, &zero, &one_).unwrap();
        assert_eq!(blk.len(), 1);
        assert!(alg.block_of(&b, &zero, &zero).unwrap().is_empty());
        let outside = g.element(vec![0]).unwrap();
        let bad_group = GroupSpec::new(vec![5]).unwrap();
        let bad = bad_group.element(vec![3]).unwrap();
        assert!(alg.block_of(&b, &bad, &outside).is_err());
    }

    #[test]
    fn gm_product_agrees_with_flattened_product() {
        let alg = gl_block_algebra(
            GroupSpec::new(vec![2]).unwrap(),
            vec![vec![0], vec![1]],
            vec![2, 1],
            FieldSpec::Rational,
        )
        .unwrap();
        let r = Bicharacter::sign(alg.group().clone(), alg.field()).unwrap();
        let graded = alg.to_graded(&r).unwrap();
        for x in 0..alg.dim() {
            for y in 0..alg.dim() {
                let gm_prod = alg.multiply(&alg.basis_element(x), &alg.basis_element(y));
                let graded_prod = graded.multiply(&graded.basis_element(x), &graded.basis_element(y));
                assert_eq!(alg.elem_to_graded(&gm_prod), graded_prod);
                let back = alg.elem_from_graded(&graded_prod);
                assert_eq!(back, gm_prod);
            }
        }
        graded.check_graded().expect_pass();
        graded.check_associative().expect_pass();
    }

    #[test]
    fn gm_bracket_matches_graded_bracket() {
        let alg = gl_block_algebra(
            GroupSpec::new(vec![2]).unwrap(),
            vec![vec![0], vec![1]],
            vec![1, 1],
            FieldSpec::Rational,
        )
        .unwrap();
        let r = Bicharacter::sign(alg.group().clone(), alg.field()).unwrap();
        let graded = alg.to_graded(&r).unwrap();
        for x in 0..alg.dim() {
            for y in 0..alg.dim() {
                let gm_br = alg.bracket(&r, &alg.basis_element(x), &alg.basis_element(y));
                let graded_br = graded.bracket(&graded.basis_element(x), &graded.basis_element(y));
                assert_eq!(alg.elem_to_graded(&gm_br), graded_br);
            }
        }
    }

    #[test]
    fn unit_is_detected_only_when_a_basis_vector_is_one() {
        // Upper triangular matrices have unit a + d, not a single basis
        // vector, so no unit is detected.
        let alg = upper_triangular();
        let r = Bicharacter::sign(alg.group().clone(), alg.field()).unwrap();
        assert_eq!(alg.to_graded(&r).unwrap().unit(), None);

        // A single diagonal block of size 1 has its matrix unit as the unit.
        let tiny = gl_block_algebra(
            GroupSpec::new(vec![]).unwrap(),
            vec![vec![]],
            vec![1],
            FieldSpec::Rational,
        )
        .unwrap();
        let triv = Bicharacter::trivial(tiny.group().clone(), tiny.field());
        assert_eq!(tiny.to_graded(&triv).unwrap().unit(), Some(0));
    }

    #[test]
    fn constructor_rejects_malformed_tables() {
        let field = FieldSpec::Rational;
        let group = GroupSpec::new(vec![2]).unwrap();
        let idx = vec![group.element(vec![0]).unwrap(), group.element(vec![1]).unwrap()];
        let mut blocks = BTreeMap::new();
        blocks.insert((0, 0), vec!["a".to_string()]);
        blocks.insert((0, 1), vec!["a".to_string()]);
        assert!(GmAlgebra::new(field, group.clone(), idx.clone(), blocks, CompTable::new()).is_err());

        let mut blocks = BTreeMap::new();
        blocks.insert((0, 0), vec!["a".to_string()]);
        let mut comp = CompTable::new();
        // Inner mismatch: (0,0) composed with a missing (1,1) block.
        comp.insert((0, 1, 1, 0, 0), vec![(0, one(field))]);
        assert!(GmAlgebra::new(field, group.clone(), idx.clone(), blocks, comp).is_err());

        let dup = vec![group.element(vec![0]).unwrap(), group.element(vec![0]).unwrap()];
        assert!(GmAlgebra::new(field, group, dup, BTreeMap::new(), CompTable::new()).is_err());
    }

    #[test]
    fn associativity_defect_is_reported() {
        let field = FieldSpec::Rational;
        let group = GroupSpec::new(vec![]).unwrap();
        let idx = vec![group.zero()];
        let mut blocks = BTreeMap::new();
        blocks.insert((0, 0), vec!["u".to_string(), "v".to_string()]);
        // u*u = v, u*v = v: then (u*u)*u = v*u = 0 but u*(u*u) = u*v = v.
        let mut comp = CompTable::new();
        comp.insert((0, 0, 0, 0, 0), vec![(1, one(field))]);
        comp.insert((0, 0, 0, 0, 1), vec![(1, one(field))]);
        let alg = GmAlgebra::new(field, group, idx, blocks, comp).unwrap();
        let report = alg.check_associative();
        assert!(!report.pass);
        assert_eq!(report.witness.unwrap().indices, vec![0, 0, 0]);
    }
}
