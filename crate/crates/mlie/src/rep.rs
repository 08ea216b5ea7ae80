//! Representations of braided bracket algebras: a graded carrier space and
//! one exact action matrix per basis element of the represented subspace,
//! with the bracket identity
//! `psi([a, b]) = psi(a) psi(b) - r(|b|, |a|) psi(b) psi(a)`
//! as the defining check. The module-style formulation through
//! `alpha(a, x) = psi(a)(x)` is implemented separately and cross-checked.

use crate::algebra::{GradedAlgebra, GradedElement};
use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::grading::{GroupElement, GroupSpec};
use crate::linalg::{self, Row};
use crate::report::{CheckReport, Defect, Witness};

type Matrix = Vec<Row>;

fn mat_zero(spec: FieldSpec, n: usize) -> Matrix {
    vec![vec![FieldElement::zero(spec); n]; n]
}

fn mat_mul(spec: FieldSpec, a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = mat_zero(spec, n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[k][j].is_zero() {
                    continue;
                }
                out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
            }
        }
    }
    out
}

fn mat_sub(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y).collect())
        .collect()
}

fn mat_scale(c: &FieldElement, a: &Matrix) -> Matrix {
    a.iter().map(|r| r.iter().map(|x| c * x).collect()).collect()
}

fn mat_add_assign(acc: &mut Matrix, c: &FieldElement, a: &Matrix) {
    for (ra, rb) in acc.iter_mut().zip(a) {
        for (x, y) in ra.iter_mut().zip(rb) {
            *x = &*x + &(c * y);
        }
    }
}

fn mat_is_zero(a: &Matrix) -> bool {
    a.iter().all(|r| r.iter().all(|c| c.is_zero()))
}

fn mat_vec(spec: FieldSpec, a: &Matrix, x: &Row) -> Row {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(FieldElement::zero(spec), |acc, (c, v)| &acc + &(c * v))
        })
        .collect()
}

/// A representation of a homogeneous subspace `L` of a graded algebra on a
/// graded carrier: per `L`-basis element, an exact carrier matrix that
/// shifts carrier degrees by the element's degree.
///
/// Basis independence, homogeneity, and the grading shift are enforced at
/// construction; the bracket identity itself is the verdict of
/// [`check_rep`](Representation::check_rep).
#[derive(Clone, Debug)]
pub struct Representation {
    ambient: GradedAlgebra,
    lie_basis: Vec<GradedElement>,
    lie_degrees: Vec<GroupElement>,
    lie_columns: Vec<Row>,
    carrier_names: Vec<String>,
    carrier_degrees: Vec<GroupElement>,
    action: Vec<Matrix>,
}

impl Representation {
    pub fn new(
        ambient: GradedAlgebra,
        lie_basis: Vec<GradedElement>,
        carrier_names: Vec<String>,
        carrier_degrees: Vec<GroupElement>,
        action: Vec<Matrix>,
    ) -> Result<Self, Error> {
        let spec = ambient.field();
        let group = ambient.group().clone();
        if carrier_names.len() != carrier_degrees.len() {
            return Err(Error::invalid("representation", "carrier names and degrees must be parallel"));
        }
        if carrier_names.is_empty() {
            return Err(Error::invalid("representation", "empty carrier"));
        }
        for name in &carrier_names {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::invalid("representation", "carrier names must be nonempty without whitespace"));
            }
        }
        {
            let mut sorted = carrier_names.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != carrier_names.len() {
                return Err(Error::invalid("representation", "duplicate carrier names"));
            }
        }
        for d in &carrier_degrees {
            if d.coords().len() != group.rank() {
                return Err(Error::invalid("representation", "carrier degree has wrong coordinate count"));
            }
        }
        let mut lie_degrees = Vec::with_capacity(lie_basis.len());
        let mut lie_columns = Vec::with_capacity(lie_basis.len());
        for e in &lie_basis {
            if e.is_zero() {
                return Err(Error::invalid("representation", "zero vector in the represented basis"));
            }
            lie_degrees.push(ambient.degree_of(e)?);
            lie_columns.push(e.to_dense(spec, ambient.dim()));
        }
        if linalg::rank(lie_columns.clone()) != lie_basis.len() {
            return Err(Error::invalid("representation", "represented basis is linearly dependent"));
        }
        if action.len() != lie_basis.len() {
            return Err(Error::invalid("representation", "one action matrix per basis element is required"));
        }
        let n = carrier_names.len();
        for (k, mat) in action.iter().enumerate() {
            if mat.len() != n || mat.iter().any(|r| r.len() != n) {
                return Err(Error::invalid("representation", "action matrix is not square over the carrier"));
            }
            for (i, row) in mat.iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if c.spec() != spec {
                        return Err(Error::FieldMismatch(c.spec(), spec));
                    }
                    let shifted = group.add(&carrier_degrees[j], &lie_degrees[k]);
                    if carrier_degrees[i] != shifted {
                        return Err(Error::invalid(
                            "representation",
                            format!(
                                "action {k} maps {} (degree {}) into {} (degree {}), breaking the degree shift {}",
                                carrier_names[j], carrier_degrees[j], carrier_names[i], carrier_degrees[i], lie_degrees[k]
                            ),
                        ));
                    }
                }
            }
        }
        Ok(Representation {
            ambient,
            lie_basis,
            lie_degrees,
            lie_columns,
            carrier_names,
            carrier_degrees,
            action,
        })
    }

    /// The left regular representation: the algebra acting on itself by
    /// left multiplication.
    pub fn regular(ambient: &GradedAlgebra) -> Result<Self, Error> {
        let spec = ambient.field();
        let n = ambient.dim();
        let lie_basis: Vec<GradedElement> = (0..n).map(|k| ambient.basis_element(k)).collect();
        let mut action = Vec::with_capacity(n);
        for k in 0..n {
            let mut mat = mat_zero(spec, n);
            for j in 0..n {
                let prod = ambient.multiply(&ambient.basis_element(k), &ambient.basis_element(j));
                for (i, c) in prod.coeffs() {
                    mat[*i][j] = c.clone();
                }
            }
            action.push(mat);
        }
        let names = ambient.basis_names().to_vec();
        let degrees: Vec<GroupElement> = (0..n).map(|i| ambient.degree(i).clone()).collect();
        Representation::new(ambient.clone(), lie_basis, names, degrees, action)
    }

    pub fn ambient(&self) -> &GradedAlgebra {
        &self.ambient
    }

    pub fn lie_dim(&self) -> usize {
        self.lie_basis.len()
    }

    pub fn lie_basis(&self) -> &[GradedElement] {
        &self.lie_basis
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier_names.len()
    }

    pub fn carrier_names(&self) -> &[String] {
        &self.carrier_names
    }

    pub fn carrier_degrees(&self) -> &[GroupElement] {
        &self.carrier_degrees
    }

    pub fn action(&self, k: usize) -> &Matrix {
        &self.action[k]
    }

    fn lie_label(&self, k: usize) -> String {
        let e = &self.lie_basis[k];
        if e.coeffs().len() == 1 {
            let (i, c) = e.coeffs().iter().next().unwrap();
            if c.is_one() {
                return self.ambient.basis_names()[*i].clone();
            }
        }
        format!("L{k}")
    }

    /// Coordinates of an ambient element in the represented basis, when it
    /// lies in the span.
    fn coords_of(&self, e: &GradedElement) -> Option<Vec<FieldElement>> {
        let dense = e.to_dense(self.ambient.field(), self.ambient.dim());
        linalg::solve_columns(self.ambient.field(), &self.lie_columns, &dense)
    }

    fn psi_of_coords(&self, coords: &[FieldElement]) -> Matrix {
        let mut out = mat_zero(self.ambient.field(), self.carrier_dim());
        for (c, mat) in coords.iter().zip(&self.action) {
            if !c.is_zero() {
                mat_add_assign(&mut out, c, mat);
            }
        }
        out
    }

    fn span_escape_witness(&self, name: &'static str, k: usize, l: usize, br: &GradedElement) -> CheckReport {
        let terms = br
            .coeffs()
            .iter()
            .map(|(i, c)| (self.ambient.basis_names()[*i].clone(), c.clone()))
            .collect();
        CheckReport::fail(
            name,
            Witness {
                indices: vec![k, l],
                labels: vec![self.lie_label(k), self.lie_label(l)],
                defect: Defect::Vector(terms),
            },
        )
    }

    /// The defining identity on all basis pairs:
    /// `psi([a, b]) = psi(a) psi(b) - r(|b|, |a|) psi(b) psi(a)`.
    /// A bracket leaving the represented span is itself a failure.
    pub fn check_rep(&self) -> CheckReport {
        let r = self.ambient.braiding();
        for k in 0..self.lie_dim() {
            for l in 0..self.lie_dim() {
                let br = self.ambient.bracket(&self.lie_basis[k], &self.lie_basis[l]);
                let Some(coords) = self.coords_of(&br) else {
                    return self.span_escape_witness("rep", k, l, &br);
                };
                let lhs = self.psi_of_coords(&coords);
                let w = r.eval(&self.lie_degrees[l], &self.lie_degrees[k]);
                let forward = mat_mul(self.ambient.field(), &self.action[k], &self.action[l]);
                let backward = mat_mul(self.ambient.field(), &self.action[l], &self.action[k]);
                let rhs = mat_sub(&forward, &mat_scale(&w, &backward));
                let diff = mat_sub(&lhs, &rhs);
                if !mat_is_zero(&diff) {
                    return CheckReport::fail(
                        "rep",
                        Witness {
                            indices: vec![k, l],
                            labels: vec![self.lie_label(k), self.lie_label(l)],
                            defect: Defect::Matrix(diff),
                        },
                    );
                }
            }
        }
        CheckReport::pass("rep")
    }

    /// The same identity stated pointwise on carrier vectors:
    /// `alpha([a,b], x) = alpha(a, alpha(b, x)) - r(|b|,|a|) alpha(b, alpha(a, x))`
    /// over all basis triples.
    pub fn check_module(&self) -> CheckReport {
        let spec = self.ambient.field();
        let r = self.ambient.braiding();
        let n = self.carrier_dim();
        for k in 0..self.lie_dim() {
            for l in 0..self.lie_dim() {
                let br = self.ambient.bracket(&self.lie_basis[k], &self.lie_basis[l]);
                let Some(coords) = self.coords_of(&br) else {
                    return self.span_escape_witness("module", k, l, &br);
                };
                let psi_br = self.psi_of_coords(&coords);
                let w = r.eval(&self.lie_degrees[l], &self.lie_degrees[k]);
                for x in 0..n {
                    let mut ex = vec![FieldElement::zero(spec); n];
                    ex[x] = FieldElement::one(spec);
                    let lhs = mat_vec(spec, &psi_br, &ex);
                    let bx = mat_vec(spec, &self.action[l], &ex);
                    let abx = mat_vec(spec, &self.action[k], &bx);
                    let ax = mat_vec(spec, &self.action[k], &ex);
                    let bax = mat_vec(spec, &self.action[l], &ax);
                    let defect: Row = lhs
                        .iter()
                        .zip(abx.iter().zip(&bax))
                        .map(|(lh, (f, b))| &(lh - f) + &(&w * b))
                        .collect();
                    if defect.iter().any(|c| !c.is_zero()) {
                        let terms = defect
                            .into_iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(i, c)| (self.carrier_names[i].clone(), c))
                            .collect();
                        return CheckReport::fail(
                            "module",
                            Witness {
                                indices: vec![k, l, x],
                                labels: vec![
                                    self.lie_label(k),
                                    self.lie_label(l),
                                    self.carrier_names[x].clone(),
                                ],
                                defect: Defect::Vector(terms),
                            },
                        );
                    }
                }
            }
        }
        CheckReport::pass("module")
    }

    /// Restriction along an inclusion: the given homogeneous elements of
    /// the represented span become the new basis, acting through their
    /// coordinates in the old one.
    pub fn restrict(&self, sub_basis: &[GradedElement]) -> Result<Representation, Error> {
        let mut action = Vec::with_capacity(sub_basis.len());
        for e in sub_basis {
            let coords = self.coords_of(e).ok_or_else(|| {
                Error::precondition("restriction target is not in the represented span".to_string())
            })?;
            action.push(self.psi_of_coords(&coords));
        }
        Representation::new(
            self.ambient.clone(),
            sub_basis.to_vec(),
            self.carrier_names.clone(),
            self.carrier_degrees.clone(),
            action,
        )
    }

    /// Whether the action map is injective, by exact rank of the flattened
    /// action matrices.
    pub fn is_faithful(&self) -> bool {
        let rows: Vec<Row> = self
            .action
            .iter()
            .map(|mat| mat.iter().flatten().cloned().collect())
            .collect();
        linalg::rank(rows) == self.lie_dim()
    }

    /// Composition with an algebra representation of the carrier's full
    /// operator algebra: faithfulness of this representation is required,
    /// and the result acts on the outer carrier.
    pub fn compose_faithful(&self, sigma: &OperatorRep) -> Result<Representation, Error> {
        if sigma.m_dim != self.carrier_dim() {
            return Err(Error::precondition(
                "operator representation is for a different carrier dimension".to_string(),
            ));
        }
        if sigma.field != self.ambient.field() {
            return Err(Error::FieldMismatch(sigma.field, self.ambient.field()));
        }
        if !self.is_faithful() {
            return Err(Error::precondition(
                "composition requires a faithful representation".to_string(),
            ));
        }
        let m = sigma.m_dim;
        let n = sigma.carrier_names.len();
        let mut action = Vec::with_capacity(self.lie_dim());
        for mat in &self.action {
            let mut out = mat_zero(self.ambient.field(), n);
            for p in 0..m {
                for q in 0..m {
                    if !mat[p][q].is_zero() {
                        mat_add_assign(&mut out, &mat[p][q], &sigma.matrices[p * m + q]);
                    }
                }
            }
            action.push(out);
        }
        Representation::new(
            self.ambient.clone(),
            self.lie_basis.clone(),
            sigma.carrier_names.clone(),
            sigma.carrier_degrees.clone(),
            action,
        )
    }
}

/// An algebra representation of the full operator algebra of an
/// `m`-dimensional space: one matrix per matrix unit `E_pq`, multiplicative
/// in the matrix-unit relations (validated at construction).
#[derive(Clone, Debug)]
pub struct OperatorRep {
    field: FieldSpec,
    m_dim: usize,
    carrier_names: Vec<String>,
    carrier_degrees: Vec<GroupElement>,
    matrices: Vec<Matrix>,
}

impl OperatorRep {
    pub fn new(
        field: FieldSpec,
        m_dim: usize,
        carrier_names: Vec<String>,
        carrier_degrees: Vec<GroupElement>,
        matrices: Vec<Matrix>,
    ) -> Result<Self, Error> {
        if m_dim == 0 {
            return Err(Error::invalid("operator representation", "empty inner space"));
        }
        if matrices.len() != m_dim * m_dim {
            return Err(Error::invalid(
                "operator representation",
                "one matrix per matrix unit is required",
            ));
        }
        let n = carrier_names.len();
        if n == 0 || carrier_degrees.len() != n {
            return Err(Error::invalid("operator representation", "carrier names and degrees must be parallel and nonempty"));
        }
        for mat in &matrices {
            if mat.len() != n || mat.iter().any(|r| r.len() != n) {
                return Err(Error::invalid("operator representation", "matrix is not square over the carrier"));
            }
        }
        let rep = OperatorRep { field, m_dim, carrier_names, carrier_degrees, matrices };
        for p in 0..m_dim {
            for q in 0..m_dim {
                for r in 0..m_dim {
                    for s in 0..m_dim {
                        let prod = mat_mul(
                            field,
                            &rep.matrices[p * m_dim + q],
                            &rep.matrices[r * m_dim + s],
                        );
                        let expected = if q == r {
                            rep.matrices[p * m_dim + s].clone()
                        } else {
                            mat_zero(field, n)
                        };
                        if !mat_is_zero(&mat_sub(&prod, &expected)) {
                            return Err(Error::invalid(
                                "operator representation",
                                format!("matrix unit relation fails at E_{p}{q} E_{r}{s}"),
                            ));
                        }
                    }
                }
            }
        }
        Ok(rep)
    }

    /// The identity representation: each matrix unit acts as itself on the
    /// inner space.
    pub fn identity(
        field: FieldSpec,
        carrier_names: Vec<String>,
        carrier_degrees: Vec<GroupElement>,
    ) -> Result<Self, Error> {
        let m = carrier_names.len();
        let mut matrices = Vec::with_capacity(m * m);
        for p in 0..m {
            for q in 0..m {
                let mut mat = mat_zero(field, m);
                mat[p][q] = FieldElement::one(field);
                matrices.push(mat);
            }
        }
        OperatorRep::new(field, m, carrier_names, carrier_degrees, matrices)
    }

    /// The left regular representation of the operator algebra on itself;
    /// the outer carrier is the space of matrix units, graded by degree
    /// differences.
    pub fn left_regular(
        field: FieldSpec,
        group: &GroupSpec,
        inner_degrees: &[GroupElement],
    ) -> Result<Self, Error> {
        let m = inner_degrees.len();
        let mut names = Vec::with_capacity(m * m);
        let mut degrees = Vec::with_capacity(m * m);
        for p in 0..m {
            for q in 0..m {
                names.push(format!("F_{p}_{q}"));
                degrees.push(group.sub(&inner_degrees[p], &inner_degrees[q]));
            }
        }
        let n = m * m;
        let mut matrices = Vec::with_capacity(n);
        for p in 0..m {
            for q in 0..m {
                // E_pq E_rs = [q = r] E_ps.
                let mut mat = mat_zero(field, n);
                for s in 0..m {
                    mat[p * m + s][q * m + s] = FieldElement::one(field);
                }
                matrices.push(mat);
            }
        }
        OperatorRep::new(field, m, names, degrees, matrices)
    }

    pub fn inner_dim(&self) -> usize {
        self.m_dim
    }

    pub fn carrier_names(&self) -> &[String] {
        &self.carrier_names
    }
}
