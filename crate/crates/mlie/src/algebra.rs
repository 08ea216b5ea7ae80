//! Group-graded associative algebras with a braided bracket.
//!
//! An algebra is a finite homogeneous basis, a degree per basis vector, a
//! sparse structure-constant table, and a bicharacter `r` on the grading
//! group. The product induces the braided bracket
//! `[a, b] = a b - r(|b|, |a|) b a` on homogeneous elements, extended
//! bilinearly. The `check_*` methods decide, exactly, whether the table is
//! graded and associative and whether the bracket satisfies braided
//! antisymmetry, the braided Jacobi identity, and strictness.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::grading::{Bicharacter, GroupElement, GroupSpec};
use crate::report::{CheckReport, Defect, Witness};

/// Sparse structure constants: `(i, j) -> [(k, c)]` meaning
/// `b_i * b_j = sum c * b_k`.
pub type StructureTable = BTreeMap<(usize, usize), Vec<(usize, FieldElement)>>;

#[derive(Clone, Debug, PartialEq)]
pub struct GradedAlgebra {
    field: FieldSpec,
    group: GroupSpec,
    braiding: Bicharacter,
    basis: Vec<String>,
    deg: Vec<GroupElement>,
    sc: StructureTable,
    unit: Option<usize>,
}

/// An element as sparse coefficients over a basis; zero coefficients are
/// never stored, so equality is map comparison.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct GradedElement {
    coeffs: BTreeMap<usize, FieldElement>,
}

impl GradedElement {
    pub fn zero() -> Self {
        GradedElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, FieldElement> {
        &self.coeffs
    }

    pub fn from_coeffs(coeffs: impl IntoIterator<Item = (usize, FieldElement)>) -> Self {
        let mut e = GradedElement::zero();
        for (k, c) in coeffs {
            e.add_term(k, c);
        }
        e
    }

    pub fn add_term(&mut self, k: usize, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(k) {
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
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(*k, -c);
        }
        out
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        if c.is_zero() {
            return GradedElement::zero();
        }
        GradedElement {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, c * v)).collect(),
        }
    }

    /// Dense coordinate row of length `dim`.
    pub fn to_dense(&self, spec: FieldSpec, dim: usize) -> Vec<FieldElement> {
        let mut row = vec![FieldElement::zero(spec); dim];
        for (k, c) in &self.coeffs {
            row[*k] = c.clone();
        }
        row
    }

    pub fn from_dense(row: &[FieldElement]) -> Self {
        GradedElement::from_coeffs(
            row.iter().enumerate().map(|(k, c)| (k, c.clone())),
        )
    }
}

impl GradedAlgebra {
    /// Builds an algebra, validating shapes: the braiding must live on the
    /// same group and field, structure constants must reference valid basis
    /// indices with nonzero scalars and no duplicate targets, and a declared
    /// unit must actually be a two-sided unit of degree zero.
    ///
    /// Grading compatibility and associativity of the table are *not*
    /// enforced here; they are verdicts of [`check_graded`] and
    /// [`check_associative`], so defective tables can be built and examined.
    ///
    /// [`check_graded`]: GradedAlgebra::check_graded
    /// [`check_associative`]: GradedAlgebra::check_associative
    pub fn new(
        field: FieldSpec,
        group: GroupSpec,
        braiding: Bicharacter,
        basis: Vec<String>,
        deg: Vec<GroupElement>,
        sc: StructureTable,
        unit: Option<usize>,
    ) -> Result<Self, Error> {
        if braiding.field() != field {
            return Err(Error::FieldMismatch(braiding.field(), field));
        }
        if braiding.group() != &group {
            return Err(Error::invalid("algebra", "braiding group differs from grading group"));
        }
        let dim = basis.len();
        if deg.len() != dim {
            return Err(Error::invalid(
                "algebra",
                format!("{} degrees for {} basis vectors", deg.len(), dim),
            ));
        }
        {
            let mut names: Vec<&String> = basis.iter().collect();
            names.sort();
            names.dedup();
            if names.len() != dim {
                return Err(Error::invalid("algebra", "duplicate basis names"));
            }
        }
        if basis.iter().any(|n| n.is_empty() || n.chars().any(char::is_whitespace)) {
            return Err(Error::invalid("algebra", "basis names must be nonempty without whitespace"));
        }
        for d in &deg {
            if d.coords().len() != group.rank() {
                return Err(Error::invalid("algebra", "degree coordinate count differs from group rank"));
            }
        }
        for ((i, j), terms) in &sc {
            if *i >= dim || *j >= dim {
                return Err(Error::invalid(
                    "algebra",
                    format!("structure constant references pair ({i}, {j}) out of range"),
                ));
            }
            let mut seen = Vec::new();
            for (k, c) in terms {
                if *k >= dim {
                    return Err(Error::invalid(
                        "algebra",
                        format!("structure constant ({i}, {j}, {k}) out of range"),
                    ));
                }
                if c.is_zero() {
                    return Err(Error::invalid(
                        "algebra",
                        format!("explicit zero structure constant at ({i}, {j}, {k})"),
                    ));
                }
                if c.spec() != field {
                    return Err(Error::FieldMismatch(c.spec(), field));
                }
                if seen.contains(k) {
                    return Err(Error::invalid(
                        "algebra",
                        format!("duplicate structure constant target at ({i}, {j}, {k})"),
                    ));
                }
                seen.push(*k);
            }
        }
        let alg = GradedAlgebra { field, group, braiding, basis, deg, sc, unit };
        if let Some(u) = unit {
            if u >= dim {
                return Err(Error::invalid("algebra", "unit index out of range"));
            }
            if alg.deg[u] != alg.group.zero() {
                return Err(Error::invalid("algebra", "unit must have degree zero"));
            }
            for i in 0..dim {
                let e = alg.basis_element(i);
                if alg.multiply(&alg.basis_element(u), &e) != e
                    || alg.multiply(&e, &alg.basis_element(u)) != e
                {
                    return Err(Error::invalid(
                        "algebra",
                        format!("declared unit {} fails against basis vector {}", alg.basis[u], alg.basis[i]),
                    ));
                }
            }
        }
        Ok(alg)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn braiding(&self) -> &Bicharacter {
        &self.braiding
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn degree(&self, i: usize) -> &GroupElement {
        &self.deg[i]
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn structure_table(&self) -> &StructureTable {
        &self.sc
    }

    pub fn basis_element(&self, i: usize) -> GradedElement {
        assert!(i < self.dim());
        GradedElement::from_coeffs([(i, FieldElement::one(self.field))])
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|n| n == name)
    }

    fn labels(&self, indices: &[usize]) -> Vec<String> {
        indices.iter().map(|i| self.basis[*i].clone()).collect()
    }

    fn vector_defect(&self, v: &GradedElement) -> Defect {
        Defect::Vector(
            v.coeffs()
                .iter()
                .map(|(k, c)| (self.basis[*k].clone(), c.clone()))
                .collect(),
        )
    }

    /// Bilinear product from the structure-constant table.
    pub fn multiply(&self, a: &GradedElement, b: &GradedElement) -> GradedElement {
        let mut out = GradedElement::zero();
        for (i, ca) in a.coeffs() {
            for (j, cb) in b.coeffs() {
                if let Some(terms) = self.sc.get(&(*i, *j)) {
                    let cab = ca * cb;
                    for (k, c) in terms {
                        out.add_term(*k, &cab * c);
                    }
                }
            }
        }
        out
    }

    /// Splits an element into homogeneous components, keyed by degree.
    pub fn degree_components(&self, a: &GradedElement) -> BTreeMap<GroupElement, GradedElement> {
        let mut out: BTreeMap<GroupElement, GradedElement> = BTreeMap::new();
        for (k, c) in a.coeffs() {
            out.entry(self.deg[*k].clone())
                .or_default()
                .add_term(*k, c.clone());
        }
        out
    }

    /// The degree of a homogeneous element; zero is homogeneous of degree 0.
    pub fn degree_of(&self, a: &GradedElement) -> Result<GroupElement, Error> {
        let comps = self.degree_components(a);
        match comps.len() {
            0 => Ok(self.group.zero()),
            1 => Ok(comps.into_keys().next().unwrap()),
            n => Err(Error::precondition(format!(
                "element is not homogeneous ({n} distinct degrees)"
            ))),
        }
    }

    /// The braided bracket, extended bilinearly over homogeneous components:
    /// `[a, b] = a b - r(|b|, |a|) b a`.
    pub fn bracket(&self, a: &GradedElement, b: &GradedElement) -> GradedElement {
        let mut out = GradedElement::zero();
        for (u, ag) in self.degree_components(a) {
            for (v, bh) in self.degree_components(b) {
                let r = self.braiding.eval(&v, &u);
                let fwd = self.multiply(&ag, &bh);
                let bwd = self.multiply(&bh, &ag).scale(&r);
                out = out.add(&fwd.sub(&bwd));
            }
        }
        out
    }

    /// The braided jacobiator of homogeneous elements:
    /// `r(|c|,|a|) [a,[b,c]] + r(|b|,|a|) [b,[c,a]] + r(|c|,|b|) [c,[a,b]]`.
    ///
    /// Vanishes identically iff the braided Jacobi identity holds on the
    /// given triple.
    pub fn jacobiator(
        &self,
        a: &GradedElement,
        b: &GradedElement,
        c: &GradedElement,
    ) -> Result<GradedElement, Error> {
        let da = self.degree_of(a)?;
        let db = self.degree_of(b)?;
        let dc = self.degree_of(c)?;
        let t1 = self
            .bracket(a, &self.bracket(b, c))
            .scale(&self.braiding.eval(&dc, &da));
        let t2 = self
            .bracket(b, &self.bracket(c, a))
            .scale(&self.braiding.eval(&db, &da));
        let t3 = self
            .bracket(c, &self.bracket(a, b))
            .scale(&self.braiding.eval(&dc, &db));
        Ok(t1.add(&t2).add(&t3))
    }

    /// Checks `deg(b_k) = deg(b_i) + deg(b_j)` for every nonzero structure
    /// constant `c_{ij}^k`.
    pub fn check_graded(&self) -> CheckReport {
        for ((i, j), terms) in &self.sc {
            let expect = self.group.add(&self.deg[*i], &self.deg[*j]);
            for (k, c) in terms {
                if self.deg[*k] != expect {
                    return CheckReport::fail(
                        "graded",
                        Witness {
                            indices: vec![*i, *j, *k],
                            labels: self.labels(&[*i, *j, *k]),
                            defect: Defect::Scalar(c.clone()),
                        },
                    );
                }
            }
        }
        CheckReport::pass("graded")
    }

    /// Checks `(b_i b_j) b_k = b_i (b_j b_k)` on all basis triples.
    pub fn check_associative(&self) -> CheckReport {
        let n = self.dim();
        for i in 0..n {
            let bi = self.basis_element(i);
            for j in 0..n {
                let bj = self.basis_element(j);
                let ij = self.multiply(&bi, &bj);
                for k in 0..n {
                    let bk = self.basis_element(k);
                    let lhs = self.multiply(&ij, &bk);
                    let rhs = self.multiply(&bi, &self.multiply(&bj, &bk));
                    let defect = lhs.sub(&rhs);
                    if !defect.is_zero() {
                        return CheckReport::fail(
                            "assoc",
                            Witness {
                                indices: vec![i, j, k],
                                labels: self.labels(&[i, j, k]),
                                defect: self.vector_defect(&defect),
                            },
                        );
                    }
                }
            }
        }
        CheckReport::pass("assoc")
    }

    /// Braided antisymmetry: `[b_i, b_j] + r(|b_j|, |b_i|) [b_j, b_i] = 0`
    /// on all basis pairs.
    pub fn check_bas(&self) -> CheckReport {
        let n = self.dim();
        for i in 0..n {
            let bi = self.basis_element(i);
            for j in 0..n {
                let bj = self.basis_element(j);
                let r = self.braiding.eval(&self.deg[j], &self.deg[i]);
                let defect = self.bracket(&bi, &bj).add(&self.bracket(&bj, &bi).scale(&r));
                if !defect.is_zero() {
                    return CheckReport::fail(
                        "bas",
                        Witness {
                            indices: vec![i, j],
                            labels: self.labels(&[i, j]),
                            defect: self.vector_defect(&defect),
                        },
                    );
                }
            }
        }
        CheckReport::pass("bas")
    }

    /// Braided Jacobi identity: the jacobiator vanishes on all basis triples.
    pub fn check_bji(&self) -> CheckReport {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let defect = self
                        .jacobiator(
                            &self.basis_element(i),
                            &self.basis_element(j),
                            &self.basis_element(k),
                        )
                        .expect("basis elements are homogeneous");
                    if !defect.is_zero() {
                        return CheckReport::fail(
                            "bji",
                            Witness {
                                indices: vec![i, j, k],
                                labels: self.labels(&[i, j, k]),
                                defect: self.vector_defect(&defect),
                            },
                        );
                    }
                }
            }
        }
        CheckReport::pass("bji")
    }

    /// Strictness: `(r(|b_i|,|b_j|) r(|b_j|,|b_i|) - 1) [b_j, b_i] = 0` on
    /// all basis pairs.
    pub fn check_strict(&self) -> CheckReport {
        self.check_kappa_annihilates("strict", |bj, bi| self.bracket(bj, bi))
    }

    /// Symmetry of the braided product: the same coefficient must kill the
    /// plain product, `(r(|b_i|,|b_j|) r(|b_j|,|b_i|) - 1) (b_j b_i) = 0`.
    /// Equivalent to the braiding acting symmetrically through the
    /// multiplication map.
    pub fn check_product_symmetry(&self) -> CheckReport {
        self.check_kappa_annihilates("product-symmetry", |bj, bi| self.multiply(bj, bi))
    }

    fn check_kappa_annihilates(
        &self,
        name: &'static str,
        op: impl Fn(&GradedElement, &GradedElement) -> GradedElement,
    ) -> CheckReport {
        let n = self.dim();
        let one = FieldElement::one(self.field);
        for i in 0..n {
            for j in 0..n {
                let kappa = &(&self.braiding.eval(&self.deg[i], &self.deg[j])
                    * &self.braiding.eval(&self.deg[j], &self.deg[i]))
                    - &one;
                if kappa.is_zero() {
                    continue;
                }
                let defect = op(&self.basis_element(j), &self.basis_element(i)).scale(&kappa);
                if !defect.is_zero() {
                    return CheckReport::fail(
                        name,
                        Witness {
                            indices: vec![i, j],
                            labels: self.labels(&[i, j]),
                            defect: self.vector_defect(&defect),
                        },
                    );
                }
            }
        }
        CheckReport::pass(name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    fn zeta(n: u32) -> FieldElement {
        FieldElement::generator(FieldSpec::Cyclotomic(n)).unwrap()
    }

    /// Coefficient map of an element, by basis name, for terse assertions.
    fn coeffs_by_name(alg: &GradedAlgebra, e: &GradedElement) -> Vec<(String, FieldElement)> {
        e.coeffs()
            .iter()
            .map(|(k, c)| (alg.basis_names()[*k].clone(), c.clone()))
            .collect()
    }

    #[test]
    fn truncated_monomial_products() {
        let alg = instances::monomial_algebra_cyclotomic(4).unwrap();
        let x = alg.basis_element(1);
        let x2 = alg.basis_element(2);
        assert_eq!(
            coeffs_by_name(&alg, &alg.multiply(&x, &x2)),
            vec![("x3".to_string(), FieldElement::one(alg.field()))]
        );
        assert!(alg.multiply(&x2, &x2).is_zero());
        alg.check_graded().expect_pass();
        alg.check_associative().expect_pass();
    }

    #[test]
    fn bracket_of_x_with_itself() {
        // [x, x] = (1 - q) x^2.
        let alg = instances::monomial_algebra_cyclotomic(4).unwrap();
        let q = zeta(4);
        let x = alg.basis_element(1);
        let b = alg.bracket(&x, &x);
        let expect = alg
            .basis_element(2)
            .scale(&(&FieldElement::one(alg.field()) - &q));
        assert_eq!(b, expect);
    }

    #[test]
    fn bracket_of_x_with_x_squared() {
        // [x, x^2] = (1 - q^2) x^3.
        let alg = instances::monomial_algebra_cyclotomic(4).unwrap();
        let q = zeta(4);
        let b = alg.bracket(&alg.basis_element(1), &alg.basis_element(2));
        let expect = alg
            .basis_element(3)
            .scale(&(&FieldElement::one(alg.field()) - &q.pow(2).unwrap()));
        assert_eq!(b, expect);
    }

    #[test]
    fn jacobiator_of_x_x_x() {
        // 3 q (1 - q - q^2 + q^3) x^3 when x^3 survives truncation.
        for n in [4u32, 5, 6] {
            let alg = instances::monomial_algebra_cyclotomic(n).unwrap();
            let q = zeta(n);
            let x = alg.basis_element(1);
            let j = alg.jacobiator(&x, &x, &x).unwrap();
            let one = FieldElement::one(alg.field());
            let poly = &(&(&one - &q) - &q.pow(2).unwrap()) + &q.pow(3).unwrap();
            let coeff = &(&FieldElement::from_int(alg.field(), 3) * &q) * &poly;
            assert_eq!(j, alg.basis_element(3).scale(&coeff));
            assert!(!j.is_zero(), "jacobiator must obstruct for n = {n}");
        }
    }

    #[test]
    fn cubic_truncation_satisfies_jacobi_but_not_antisymmetry() {
        let alg = instances::monomial_algebra_cyclotomic(3).unwrap();
        alg.check_bji().expect_pass();

        let bas = alg.check_bas();
        assert!(!bas.pass);
        let w = bas.witness.unwrap();
        assert_eq!(w.labels, vec!["x", "x"]);
        // Defect [x,x] + q [x,x] = (1 - q^2) x^2.
        let q = zeta(3);
        let c = &FieldElement::one(alg.field()) - &q.pow(2).unwrap();
        assert_eq!(w.defect, alg.vector_defect(&alg.basis_element(2).scale(&c)));

        let strict = alg.check_strict();
        assert!(!strict.pass);
        assert_eq!(strict.witness.unwrap().labels, vec!["x", "x"]);

        let sym = alg.check_product_symmetry();
        assert!(!sym.pass);
        assert_eq!(sym.witness.unwrap().labels, vec!["x", "x"]);
    }

    #[test]
    fn quartic_truncation_fails_jacobi_at_x_x_x() {
        let alg = instances::monomial_algebra_cyclotomic(4).unwrap();
        let report = alg.check_bji();
        assert!(!report.pass);
        let w = report.witness.unwrap();
        assert_eq!(w.indices, vec![1, 1, 1]);
        assert_eq!(w.labels, vec!["x", "x", "x"]);
    }

    #[test]
    fn generic_truncation_matches_cyclotomic_verdicts() {
        let alg = instances::monomial_algebra_generic(4).unwrap();
        alg.check_graded().expect_pass();
        alg.check_associative().expect_pass();
        let report = alg.check_bji();
        assert!(!report.pass);
        let w = report.witness.unwrap();
        assert_eq!(w.labels, vec!["x", "x", "x"]);
        // Defect coefficient 3 t (1 - t - t^2 + t^3) on x^3.
        let t = FieldElement::generator(FieldSpec::Generic).unwrap();
        let one = FieldElement::one(FieldSpec::Generic);
        let poly = &(&(&one - &t) - &t.pow(2).unwrap()) + &t.pow(3).unwrap();
        let coeff = &(&FieldElement::from_int(FieldSpec::Generic, 3) * &t) * &poly;
        let expect = alg.basis_element(3).scale(&coeff);
        assert_eq!(w.defect, alg.vector_defect(&expect));
        assert!(!alg.check_bas().pass);
    }

    #[test]
    fn unit_brackets_vanish() {
        let alg = instances::monomial_algebra_cyclotomic(4).unwrap();
        let unit = alg.basis_element(alg.unit().unwrap());
        for i in 0..alg.dim() {
            assert!(alg.bracket(&unit, &alg.basis_element(i)).is_zero());
            assert!(alg.bracket(&alg.basis_element(i), &unit).is_zero());
        }
    }

    #[test]
    fn bracket_is_bilinear_over_mixed_degree_elements() {
        let alg = instances::monomial_algebra_cyclotomic(5).unwrap();
        let two = FieldElement::from_int(alg.field(), 2);
        let a = alg.basis_element(1).add(&alg.basis_element(2).scale(&two));
        let b = alg.basis_element(1).add(&alg.basis_element(3));
        let whole = alg.bracket(&a, &b);
        let mut parts = GradedElement::zero();
        for (_, ag) in alg.degree_components(&a) {
            for (_, bh) in alg.degree_components(&b) {
                parts = parts.add(&alg.bracket(&ag, &bh));
            }
        }
        assert_eq!(whole, parts);
    }

    #[test]
    fn jacobiator_requires_homogeneous_arguments() {
        let alg = instances::monomial_algebra_cyclotomic(4).unwrap();
        let mixed = alg.basis_element(1).add(&alg.basis_element(2));
        let x = alg.basis_element(1);
        assert!(alg.jacobiator(&mixed, &x, &x).is_err());
        assert!(alg.jacobiator(&GradedElement::zero(), &x, &x).is_ok());
    }

    #[test]
    fn grading_violation_is_caught_with_witness() {
        // Perturb the table of the cubic truncation: send x * x to x.
        let alg = instances::monomial_algebra_cyclotomic(3).unwrap();
        let mut sc = alg.structure_table().clone();
        sc.insert((1, 1), vec![(1, FieldElement::one(alg.field()))]);
        let bad = GradedAlgebra::new(
            alg.field(),
            alg.group().clone(),
            alg.braiding().clone(),
            alg.basis_names().to_vec(),
            (0..alg.dim()).map(|i| alg.degree(i).clone()).collect(),
            sc,
            None,
        )
        .unwrap();
        let report = bad.check_graded();
        assert!(!report.pass);
        assert_eq!(report.witness.unwrap().indices, vec![1, 1, 1]);
    }

    #[test]
    fn associativity_violation_is_caught_with_witness() {
        // x * x = x^2 but x^2 * x = 0 while x * (x * x) = x * x^2: break the
        // latter by removing (1, 2) -> x^3 and keeping (2, 1).
        let alg = instances::monomial_algebra_cyclotomic(4).unwrap();
        let mut sc = alg.structure_table().clone();
        sc.remove(&(1, 2));
        let bad = GradedAlgebra::new(
            alg.field(),
            alg.group().clone(),
            alg.braiding().clone(),
            alg.basis_names().to_vec(),
            (0..alg.dim()).map(|i| alg.degree(i).clone()).collect(),
            sc,
            None,
        )
        .unwrap();
        let report = bad.check_associative();
        assert!(!report.pass);
        let w = report.witness.unwrap();
        assert_eq!(w.indices, vec![1, 1, 1]);
    }

    #[test]
    fn constructor_rejects_bad_tables() {
        let alg = instances::monomial_algebra_cyclotomic(3).unwrap();
        let dup = {
            let mut sc = alg.structure_table().clone();
            sc.insert(
                (0, 0),
                vec![
                    (0, FieldElement::one(alg.field())),
                    (0, FieldElement::one(alg.field())),
                ],
            );
            sc
        };
        let rebuild = |sc: StructureTable, unit: Option<usize>| {
            GradedAlgebra::new(
                alg.field(),
                alg.group().clone(),
                alg.braiding().clone(),
                alg.basis_names().to_vec(),
                (0..alg.dim()).map(|i| alg.degree(i).clone()).collect(),
                sc,
                unit,
            )
        };
        assert!(rebuild(dup, None).is_err());

        let zero_entry = {
            let mut sc = alg.structure_table().clone();
            sc.insert((2, 2), vec![(0, FieldElement::zero(alg.field()))]);
            sc
        };
        assert!(rebuild(zero_entry, None).is_err());

        // Declared unit that is not a unit: x has degree 1 and fails anyway.
        assert!(rebuild(alg.structure_table().clone(), Some(1)).is_err());
    }

    #[test]
    fn trivial_braiding_gives_classical_commutator_checks() {
        // Full 2x2 matrix algebra, trivially graded: BAS and BJI hold for the
        // ordinary commutator, strictness holds since kappa = 0.
        let group = GroupSpec::new(vec![]).unwrap();
        let field = FieldSpec::Rational;
        let r = Bicharacter::trivial(group.clone(), field);
        let names = vec!["e11".into(), "e12".into(), "e21".into(), "e22".into()];
        let deg = vec![group.zero(); 4];
        let mut sc = StructureTable::new();
        let unit = |p: usize, q: usize| p * 2 + q;
        for p in 0..2 {
            for q in 0..2 {
                for s in 0..2 {
                    for w in 0..2 {
                        if q == s {
                            sc.insert(
                                (unit(p, q), unit(s, w)),
                                vec![(unit(p, w), FieldElement::one(field))],
                            );
                        }
                    }
                }
            }
        }
        let alg = GradedAlgebra::new(field, group, r, names, deg, sc, None).unwrap();
        alg.check_graded().expect_pass();
        alg.check_associative().expect_pass();
        alg.check_bas().expect_pass();
        alg.check_bji().expect_pass();
        alg.check_strict().expect_pass();
        alg.check_product_symmetry().expect_pass();
    }
}
