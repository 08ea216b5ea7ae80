//! Quantum traces and their kernels, generalized transposes and the
//! orthosymplectic subalgebras they cut out, and superization: regrouping a
//! group-graded matrix algebra over `Z_2` along the parity of `r(g, g)`.
//!
//! Subspaces are represented by exact row-reduced bases per degree, so
//! equality of subalgebras is equality of canonical forms.

use std::collections::BTreeMap;

use crate::algebra::{GradedAlgebra, GradedElement};
use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::gm::{CompTable, GmAlgebra, GmElement};
use crate::grading::{Bicharacter, GroupElement, GroupSpec};
use crate::linalg::{self, Row};
use crate::report::{CheckReport, Defect, Witness};

/// The full matrix algebra of a graded space with `dims[i]`-dimensional
/// component at `labels[i]`, as a generalized matrix algebra: block `(i, j)`
/// holds the maps from component `j` to component `i`, with matrix-unit
/// basis named `E_i_j_p_q`.
pub fn gl_block_algebra(
    group: GroupSpec,
    labels: Vec<Vec<i64>>,
    dims: Vec<usize>,
    field: FieldSpec,
) -> Result<GmAlgebra, Error> {
    if labels.len() != dims.len() || labels.is_empty() {
        return Err(Error::invalid("gl algebra", "labels and dims must be parallel and nonempty"));
    }
    if dims.contains(&0) {
        return Err(Error::invalid("gl algebra", "zero-dimensional components are not allowed"));
    }
    let index_set = labels
        .into_iter()
        .map(|c| group.element(c))
        .collect::<Result<Vec<_>, _>>()?;
    let n = index_set.len();
    let mut blocks = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let mut names = Vec::with_capacity(dims[i] * dims[j]);
            for p in 0..dims[i] {
                for q in 0..dims[j] {
                    names.push(format!("E_{i}_{j}_{p}_{q}"));
                }
            }
            blocks.insert((i, j), names);
        }
    }
    let one = FieldElement::one(field);
    let mut comp = CompTable::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                for p in 0..dims[i] {
                    for q in 0..dims[j] {
                        for s in 0..dims[l] {
                            comp.insert(
                                (i, j, l, p * dims[j] + q, q * dims[l] + s),
                                vec![(p * dims[l] + s, one.clone())],
                            );
                        }
                    }
                }
            }
        }
    }
    GmAlgebra::new(field, group, index_set, blocks, comp)
}

/// The identity of a [`gl_block_algebra`] with the given component sizes.
pub fn gl_identity(field: FieldSpec, dims: &[usize]) -> GmElement {
    let mut e = GmElement::zero();
    for (i, &d) in dims.iter().enumerate() {
        for p in 0..d {
            e.add_term((i, i), p * d + p, FieldElement::one(field));
        }
    }
    e
}

/// Ordinary blockwise trace on a [`gl_block_algebra`], packaged as a
/// [`QuantumTrace`] with the given braiding.
pub fn gl_trace(
    alg: &GmAlgebra,
    braiding: &Bicharacter,
    dims: &[usize],
) -> Result<QuantumTrace, Error> {
    let field = alg.field();
    let mut diag_maps = BTreeMap::new();
    for (i, &d) in dims.iter().enumerate() {
        if alg.block_dim((i, i)) != d * d {
            return Err(Error::invalid("gl trace", "dims do not match the algebra's diagonal blocks"));
        }
        let mut map = Vec::with_capacity(d * d);
        for p in 0..d {
            for q in 0..d {
                map.push(vec![if p == q {
                    FieldElement::one(field)
                } else {
                    FieldElement::zero(field)
                }]);
            }
        }
        diag_maps.insert(i, map);
    }
    QuantumTrace::new(alg.clone(), braiding.clone(), 1, diag_maps)
}

/// Ordinary transpose on a [`gl_block_algebra`]: `E_i_j_p_q -> E_j_i_q_p`.
pub fn gl_transpose(alg: &GmAlgebra, dims: &[usize]) -> Result<Transpose, Error> {
    let field = alg.field();
    let n = dims.len();
    let mut block_maps = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            if alg.block_dim((i, j)) != dims[i] * dims[j] {
                return Err(Error::invalid("gl transpose", "dims do not match the algebra's blocks"));
            }
            let target = dims[j] * dims[i];
            let mut map = Vec::with_capacity(dims[i] * dims[j]);
            for p in 0..dims[i] {
                for q in 0..dims[j] {
                    let mut row = vec![FieldElement::zero(field); target];
                    row[q * dims[i] + p] = FieldElement::one(field);
                    map.push(row);
                }
            }
            block_maps.insert((i, j), map);
        }
    }
    Transpose::new(alg.clone(), block_maps)
}

fn indices_by_degree(alg: &GmAlgebra) -> BTreeMap<GroupElement, Vec<usize>> {
    let mut out: BTreeMap<GroupElement, Vec<usize>> = BTreeMap::new();
    for g in 0..alg.dim() {
        let (block, _, _) = alg.global_info(g);
        out.entry(alg.block_degree(block.0, block.1)).or_default().push(g);
    }
    out
}

fn single_block(block: (usize, usize), locals: &BTreeMap<usize, FieldElement>) -> GmElement {
    let mut e = GmElement::zero();
    for (l, c) in locals {
        e.add_term(block, *l, c.clone());
    }
    e
}

/// A graded subspace of a flattened algebra, held as exact row-reduced
/// bases per degree over the global basis coordinates.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    field: FieldSpec,
    ambient_dim: usize,
    by_degree: BTreeMap<GroupElement, Vec<Row>>,
    combined: Vec<Row>,
    pivots: Vec<usize>,
}

impl Subalgebra {
    pub fn from_degree_rows(
        field: FieldSpec,
        ambient_dim: usize,
        by_degree: BTreeMap<GroupElement, Vec<Row>>,
    ) -> Self {
        let mut cleaned = BTreeMap::new();
        let mut combined = Vec::new();
        for (deg, mut rows) in by_degree {
            linalg::rref(&mut rows);
            if !rows.is_empty() {
                combined.extend(rows.iter().cloned());
                cleaned.insert(deg, rows);
            }
        }
        let pivots = linalg::rref(&mut combined);
        Subalgebra { field, ambient_dim, by_degree: cleaned, combined, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.combined.len()
    }

    pub fn degree_rows(&self) -> &BTreeMap<GroupElement, Vec<Row>> {
        &self.by_degree
    }

    pub fn degree_dims(&self) -> BTreeMap<GroupElement, usize> {
        self.by_degree.iter().map(|(g, rows)| (g.clone(), rows.len())).collect()
    }

    pub fn rows(&self) -> &[Row] {
        &self.combined
    }

    /// Residual of a vector after reduction against the subspace; zero iff
    /// the vector is contained.
    pub fn reduce(&self, v: &Row) -> Row {
        let mut w = v.clone();
        linalg::reduce_vector(&self.combined, &self.pivots, &mut w);
        w
    }

    pub fn contains_dense(&self, v: &Row) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }

    pub fn contains(&self, e: &GradedElement) -> bool {
        self.contains_dense(&e.to_dense(self.field, self.ambient_dim))
    }

    /// Degreewise row-space equality.
    pub fn same_space(&self, other: &Subalgebra) -> bool {
        if self.ambient_dim != other.ambient_dim {
            return false;
        }
        let keys: std::collections::BTreeSet<_> =
            self.by_degree.keys().chain(other.by_degree.keys()).cloned().collect();
        keys.iter().all(|k| {
            let empty: Vec<Row> = Vec::new();
            let a = self.by_degree.get(k).unwrap_or(&empty);
            let b = other.by_degree.get(k).unwrap_or(&empty);
            linalg::row_spaces_equal(a, b)
        })
    }

    /// Whether the bracket of every pair of basis rows stays inside the
    /// subspace, decided by row reduction in the flattened algebra.
    pub fn check_bracket_closed(&self, flat: &GradedAlgebra) -> Result<CheckReport, Error> {
        if flat.dim() != self.ambient_dim {
            return Err(Error::precondition(
                "subalgebra coordinates do not match the ambient algebra".to_string(),
            ));
        }
        let all: Vec<(&GroupElement, &Row)> = self
            .by_degree
            .iter()
            .flat_map(|(g, rows)| rows.iter().map(move |r| (g, r)))
            .collect();
        for (i, (u, row_a)) in all.iter().enumerate() {
            let a = GradedElement::from_dense(row_a);
            for (j, (v, row_b)) in all.iter().enumerate() {
                let b = GradedElement::from_dense(row_b);
                let br = flat.bracket(&a, &b);
                let residual = self.reduce(&br.to_dense(self.field, self.ambient_dim));
                if residual.iter().any(|c| !c.is_zero()) {
                    let terms = residual
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| (flat.basis_names()[k].clone(), c.clone()))
                        .collect();
                    return Ok(CheckReport::fail(
                        "bracket-closed",
                        Witness {
                            indices: vec![i, j],
                            labels: vec![format!("deg {u} #{i}"), format!("deg {v} #{j}")],
                            defect: Defect::Vector(terms),
                        },
                    ));
                }
            }
        }
        Ok(CheckReport::pass("bracket-closed"))
    }
}

/// A quantum trace: user-supplied linear maps on the diagonal blocks,
/// extended to the whole algebra by `tr(a) = sum_g r(g, g) f(a_gg)`.
///
/// The defining symmetry `f(a_ij b_ji) = f(b_ji a_ij)` is validated on all
/// block-basis pairs at construction.
#[derive(Clone, Debug)]
pub struct QuantumTrace {
    source: GmAlgebra,
    braiding: Bicharacter,
    target_dim: usize,
    diag_maps: BTreeMap<usize, Vec<Row>>,
}

impl QuantumTrace {
    pub fn new(
        source: GmAlgebra,
        braiding: Bicharacter,
        target_dim: usize,
        diag_maps: BTreeMap<usize, Vec<Row>>,
    ) -> Result<Self, Error> {
        if braiding.group() != source.group() {
            return Err(Error::invalid("quantum trace", "braiding group differs from the algebra's"));
        }
        if braiding.field() != source.field() {
            return Err(Error::FieldMismatch(braiding.field(), source.field()));
        }
        let diag_indices: Vec<usize> = source
            .blocks()
            .keys()
            .filter(|(i, j)| i == j)
            .map(|(i, _)| *i)
            .collect();
        for i in &diag_indices {
            let map = diag_maps.get(i).ok_or_else(|| {
                Error::invalid("quantum trace", format!("no diagonal map for block ({i}, {i})"))
            })?;
            if map.len() != source.block_dim((*i, *i)) {
                return Err(Error::invalid(
                    "quantum trace",
                    format!("diagonal map for block ({i}, {i}) has the wrong number of columns"),
                ));
            }
            for col in map {
                if col.len() != target_dim {
                    return Err(Error::invalid("quantum trace", "diagonal map value has wrong length"));
                }
                for c in col {
                    if c.spec() != source.field() {
                        return Err(Error::FieldMismatch(c.spec(), source.field()));
                    }
                }
            }
        }
        if diag_maps.keys().any(|i| !diag_indices.contains(i)) {
            return Err(Error::invalid("quantum trace", "diagonal map given for a missing block"));
        }
        let tr = QuantumTrace { source, braiding, target_dim, diag_maps };
        // Symmetry across opposite blocks: f(a_ij b_ji) = f(b_ji a_ij).
        let blocks: Vec<(usize, usize)> = tr.source.blocks().keys().copied().collect();
        for &(i, j) in &blocks {
            if !tr.source.blocks().contains_key(&(j, i)) {
                continue;
            }
            for p in 0..tr.source.block_dim((i, j)) {
                let a = tr.source.basis_element(tr.source.global_index((i, j), p));
                for q in 0..tr.source.block_dim((j, i)) {
                    let b = tr.source.basis_element(tr.source.global_index((j, i), q));
                    let fab = tr.f_of_diagonal(&tr.source.multiply(&a, &b));
                    let fba = tr.f_of_diagonal(&tr.source.multiply(&b, &a));
                    if fab != fba {
                        let (_, _, na) = tr.source.global_info(tr.source.global_index((i, j), p));
                        let (_, _, nb) = tr.source.global_info(tr.source.global_index((j, i), q));
                        return Err(Error::invalid(
                            "quantum trace",
                            format!("f({na} {nb}) != f({nb} {na}); diagonal maps are not trace-like"),
                        ));
                    }
                }
            }
        }
        Ok(tr)
    }

    pub fn source(&self) -> &GmAlgebra {
        &self.source
    }

    pub fn braiding(&self) -> &Bicharacter {
        &self.braiding
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn diag_maps(&self) -> &BTreeMap<usize, Vec<Row>> {
        &self.diag_maps
    }

    fn zero_target(&self) -> Row {
        vec![FieldElement::zero(self.source.field()); self.target_dim]
    }

    /// The unweighted diagonal evaluation `sum_g f(a_gg)`.
    fn f_of_diagonal(&self, a: &GmElement) -> Row {
        let mut out = self.zero_target();
        for ((i, j), locals) in a.blocks() {
            if i != j {
                continue;
            }
            let map = &self.diag_maps[i];
            for (local, c) in locals {
                for (k, slot) in out.iter_mut().enumerate() {
                    *slot = &*slot + &(c * &map[*local][k]);
                }
            }
        }
        out
    }

    /// `tr(a) = sum_g r(g, g) f(a_gg)`; off-diagonal blocks contribute zero.
    pub fn qtrace(&self, a: &GmElement) -> Row {
        let mut out = self.zero_target();
        for ((i, j), locals) in a.blocks() {
            if i != j {
                continue;
            }
            let g = &self.source.index_set()[*i];
            let w = self.braiding.eval(g, g);
            let map = &self.diag_maps[i];
            for (local, c) in locals {
                let wc = &w * c;
                for (k, slot) in out.iter_mut().enumerate() {
                    *slot = &*slot + &(&wc * &map[*local][k]);
                }
            }
        }
        out
    }

    /// The trace-kernel subalgebra `{a | tr(a) = 0}`, computed per degree as
    /// an exact kernel over the flattened basis.
    pub fn compute_sl(&self) -> Subalgebra {
        let field = self.source.field();
        let dim = self.source.dim();
        let mut by_degree = BTreeMap::new();
        for (deg, idxs) in indices_by_degree(&self.source) {
            let mut rows: Vec<Row> = vec![Vec::with_capacity(idxs.len()); self.target_dim];
            for &g in &idxs {
                let tr = self.qtrace(&self.source.basis_element(g));
                for (k, v) in tr.into_iter().enumerate() {
                    rows[k].push(v);
                }
            }
            let kernel = linalg::kernel_basis(field, &rows, idxs.len());
            let embedded: Vec<Row> = kernel
                .into_iter()
                .map(|k| {
                    let mut row = vec![FieldElement::zero(field); dim];
                    for (pos, c) in idxs.iter().zip(k) {
                        row[*pos] = c;
                    }
                    row
                })
                .collect();
            by_degree.insert(deg, embedded);
        }
        Subalgebra::from_degree_rows(field, dim, by_degree)
    }

    /// The obstruction to the trace kernel being bracket-closed at a
    /// homogeneous pair of opposite degrees `u` and `-u`:
    /// `sum_g (1 - r(u,u)^2 r(u,g) r(g,u)) tr(b_{g,g+u} a_{g+u,g})`.
    ///
    /// The trace of any bracket `[a, b]` equals `-r(u,u)^{-1}` times this
    /// sum, so the kernel is closed under brackets exactly when it vanishes
    /// for all such pairs.
    pub fn trace_closure_defect(&self, a: &GmElement, b: &GmElement) -> Result<Row, Error> {
        let group = self.source.group().clone();
        let u = self.source.degree_of(a)?;
        let v = self.source.degree_of(b)?;
        if v != group.neg(&u) {
            return Err(Error::precondition(format!(
                "degrees {u} and {v} are not opposite"
            )));
        }
        let ruu = self.braiding.eval(&u, &u);
        let ruu2 = &ruu * &ruu;
        let one = FieldElement::one(self.source.field());
        let mut out = self.zero_target();
        for (k, g) in self.source.index_set().iter().enumerate() {
            let gu = group.add(g, &u);
            let Some(l) = self.source.index_of_label(&gu) else { continue };
            let (Some(bloc), Some(aloc)) = (b.blocks().get(&(k, l)), a.blocks().get(&(l, k)))
            else {
                continue;
            };
            let coeff = &one - &(&ruu2 * &(&self.braiding.eval(&u, g) * &self.braiding.eval(g, &u)));
            if coeff.is_zero() {
                continue;
            }
            let prod = self.source.multiply(&single_block((k, l), bloc), &single_block((l, k), aloc));
            let tr = self.qtrace(&prod);
            for (slot, t) in out.iter_mut().zip(tr) {
                *slot = &*slot + &(&coeff * &t);
            }
        }
        Ok(out)
    }

    /// Certifies the nondegeneracy hypothesis behind bracket closure of the
    /// trace kernel: for every pair of opposite blocks, some product has
    /// nonzero trace.
    pub fn check_trace_nondegenerate(&self) -> CheckReport {
        let blocks: Vec<(usize, usize)> = self.source.blocks().keys().copied().collect();
        for &(i, j) in &blocks {
            if !self.source.blocks().contains_key(&(j, i)) {
                continue;
            }
            let mut found = false;
            'search: for p in 0..self.source.block_dim((i, j)) {
                let a = self.source.basis_element(self.source.global_index((i, j), p));
                for q in 0..self.source.block_dim((j, i)) {
                    let b = self.source.basis_element(self.source.global_index((j, i), q));
                    if self.qtrace(&self.source.multiply(&a, &b)).iter().any(|c| !c.is_zero()) {
                        found = true;
                        break 'search;
                    }
                }
            }
            if !found {
                let gi = &self.source.index_set()[i];
                let gj = &self.source.index_set()[j];
                return CheckReport::fail(
                    "trace-nondegenerate",
                    Witness {
                        indices: vec![i, j],
                        labels: vec![gi.to_string(), gj.to_string()],
                        defect: Defect::Scalar(FieldElement::zero(self.source.field())),
                    },
                );
            }
        }
        CheckReport::pass("trace-nondegenerate")
    }
}

/// A generalized transpose: per-block linear maps `t: A_ij -> A_ji` that
/// reverse products, `t(ab) = t(b) t(a)`; validated on all composable
/// block-basis pairs at construction.
#[derive(Clone, Debug)]
pub struct Transpose {
    source: GmAlgebra,
    block_maps: BTreeMap<(usize, usize), Vec<Row>>,
}

impl Transpose {
    pub fn new(
        source: GmAlgebra,
        block_maps: BTreeMap<(usize, usize), Vec<Row>>,
    ) -> Result<Self, Error> {
        for (block, _) in source.blocks() {
            if !block_maps.contains_key(block) {
                return Err(Error::invalid(
                    "transpose",
                    format!("no map for block ({}, {})", block.0, block.1),
                ));
            }
        }
        for (&(i, j), map) in &block_maps {
            if !source.blocks().contains_key(&(i, j)) {
                return Err(Error::invalid("transpose", format!("map given for missing block ({i}, {j})")));
            }
            if map.len() != source.block_dim((i, j)) {
                return Err(Error::invalid(
                    "transpose",
                    format!("map for block ({i}, {j}) has the wrong number of columns"),
                ));
            }
            let target = source.block_dim((j, i));
            for col in map {
                if col.len() != target {
                    return Err(Error::invalid(
                        "transpose",
                        format!("map for block ({i}, {j}) must land in block ({j}, {i})"),
                    ));
                }
                for c in col {
                    if c.spec() != source.field() {
                        return Err(Error::FieldMismatch(c.spec(), source.field()));
                    }
                }
            }
        }
        let t = Transpose { source, block_maps };
        // Product reversal on composable basis pairs.
        for (&(i, j, l, p, q), _) in t.source.comp() {
            let a = t.source.basis_element(t.source.global_index((i, j), p));
            let b = t.source.basis_element(t.source.global_index((j, l), q));
            let lhs = t.apply(&t.source.multiply(&a, &b));
            let rhs = t.source.multiply(&t.apply(&b), &t.apply(&a));
            if lhs != rhs {
                let (_, _, na) = t.source.global_info(t.source.global_index((i, j), p));
                let (_, _, nb) = t.source.global_info(t.source.global_index((j, l), q));
                return Err(Error::invalid(
                    "transpose",
                    format!("t({na} {nb}) != t({nb}) t({na}); maps do not reverse products"),
                ));
            }
        }
        Ok(t)
    }

    pub fn source(&self) -> &GmAlgebra {
        &self.source
    }

    pub fn block_maps(&self) -> &BTreeMap<(usize, usize), Vec<Row>> {
        &self.block_maps
    }

    /// `(t(a))_ij = t(a_ji)`.
    pub fn apply(&self, a: &GmElement) -> GmElement {
        let mut out = GmElement::zero();
        for ((i, j), locals) in a.blocks() {
            let map = &self.block_maps[&(*i, *j)];
            for (local, c) in locals {
                for (k, v) in map[*local].iter().enumerate() {
                    out.add_term((*j, *i), k, c * v);
                }
            }
        }
        out
    }

    /// The orthosymplectic subalgebra cut out by a nonzero form `M`: per
    /// degree `u`, the exact solution space of
    /// `t(a_{u+g, g}) M_{u+g, h} = -r(g, u) M_{g, u+h} a_{u+h, h}`
    /// over all `g, h`.
    pub fn compute_osp(&self, m: &GmElement, r: &Bicharacter) -> Result<Subalgebra, Error> {
        if m.is_zero() {
            return Err(Error::precondition("the form M must be nonzero".to_string()));
        }
        if r.group() != self.source.group() {
            return Err(Error::invalid("osp", "bicharacter group differs from the algebra's"));
        }
        if r.field() != self.source.field() {
            return Err(Error::FieldMismatch(r.field(), self.source.field()));
        }
        let field = self.source.field();
        let dim = self.source.dim();
        let mut by_degree = BTreeMap::new();
        for (deg, idxs) in indices_by_degree(&self.source) {
            // One equation element per unknown: t(e) M + r(row, u) M e,
            // which must vanish identically over the whole algebra.
            let mut rows: Vec<Row> = vec![Vec::with_capacity(idxs.len()); dim];
            for &beta in &idxs {
                let e = self.source.basis_element(beta);
                let q = self.source.multiply(&self.apply(&e), m);
                let p = self.source.multiply(m, &e);
                let mut scaled = GmElement::zero();
                for (block, locals) in p.blocks() {
                    let g = &self.source.index_set()[block.0];
                    let w = r.eval(g, &deg);
                    for (local, c) in locals {
                        scaled.add_term(*block, *local, &w * c);
                    }
                }
                let eq = q.add(&scaled);
                let col = self.source.elem_to_graded(&eq).to_dense(field, dim);
                for (k, v) in col.into_iter().enumerate() {
                    rows[k].push(v);
                }
            }
            let kernel = linalg::kernel_basis(field, &rows, idxs.len());
            let embedded: Vec<Row> = kernel
                .into_iter()
                .map(|k| {
                    let mut row = vec![FieldElement::zero(field); dim];
                    for (pos, c) in idxs.iter().zip(k) {
                        row[*pos] = c;
                    }
                    row
                })
                .collect();
            by_degree.insert(deg, embedded);
        }
        Ok(Subalgebra::from_degree_rows(field, dim, by_degree))
    }
}

/// The obstruction to bracket closure of an orthosymplectic subalgebra at
/// homogeneous degrees `u`, `v`: `(1 - r(u,v) r(v,u)) M a b`, whose block
/// components are the per-`(g, h)` sums of the closure identity.
pub fn osp_closure_defect(
    alg: &GmAlgebra,
    r: &Bicharacter,
    m: &GmElement,
    a: &GmElement,
    b: &GmElement,
) -> Result<GmElement, Error> {
    let u = alg.degree_of(a)?;
    let v = alg.degree_of(b)?;
    let kappa = &FieldElement::one(alg.field()) - &(&r.eval(&u, &v) * &r.eval(&v, &u));
    Ok(alg.multiply(&alg.multiply(m, a), b).scale(&kappa))
}

/// The regrouping of a `G`-indexed matrix algebra over `Z_2` along the
/// parity split `r(g, g) = ±1`, together with the coordinate maps between
/// the two presentations.
#[derive(Clone, Debug)]
pub struct Superization {
    source: GmAlgebra,
    result: GmAlgebra,
    braiding: Bicharacter,
    offset_in_super: BTreeMap<(usize, usize), usize>,
    super_block_of: BTreeMap<(usize, usize), (usize, usize)>,
    fwd_global: Vec<usize>,
}

/// Regroups blocks by the parity of their index labels: all blocks between
/// even labels merge into the even-even superblock, and so on. Requires a
/// skew-symmetric braiding, which makes the parity map additive; the
/// resulting `Z_2` algebra carries the sign braiding.
pub fn superize(source: &GmAlgebra, r: &Bicharacter) -> Result<Superization, Error> {
    if r.group() != source.group() {
        return Err(Error::invalid("superize", "bicharacter group differs from the algebra's"));
    }
    if r.field() != source.field() {
        return Err(Error::FieldMismatch(r.field(), source.field()));
    }
    let skew = r.is_skew_symmetric();
    if !skew.pass {
        return Err(Error::precondition(format!(
            "superization requires a skew-symmetric bicharacter; {}",
            skew.witness.map(|w| w.to_string()).unwrap_or_default()
        )));
    }
    let parities = source
        .index_set()
        .iter()
        .map(|g| r.parity(g))
        .collect::<Result<Vec<bool>, _>>()?;
    let z2 = GroupSpec::new(vec![2])?;
    let mut super_index = Vec::new();
    let mut pos_of_parity = [None, None];
    for &parity in &[false, true] {
        if parities.contains(&parity) {
            pos_of_parity[parity as usize] = Some(super_index.len());
            super_index.push(z2.element(vec![parity as i64])?);
        }
    }
    let sblock = |i: usize, j: usize| -> (usize, usize) {
        (
            pos_of_parity[parities[i] as usize].unwrap(),
            pos_of_parity[parities[j] as usize].unwrap(),
        )
    };
    let mut blocks: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
    let mut offset_in_super = BTreeMap::new();
    let mut super_block_of = BTreeMap::new();
    for (&(i, j), names) in source.blocks() {
        let sb = sblock(i, j);
        let slot = blocks.entry(sb).or_default();
        offset_in_super.insert((i, j), slot.len());
        super_block_of.insert((i, j), sb);
        slot.extend(names.iter().cloned());
    }
    let mut comp = CompTable::new();
    for (&(i, j, l, p, q), terms) in source.comp() {
        let (si, sj) = sblock(i, j);
        let (_, sl) = sblock(j, l);
        let sp = offset_in_super[&(i, j)] + p;
        let sq = offset_in_super[&(j, l)] + q;
        let entry = terms
            .iter()
            .map(|(t, c)| (offset_in_super[&(i, l)] + t, c.clone()))
            .collect();
        comp.insert((si, sj, sl, sp, sq), entry);
    }
    let result = GmAlgebra::new(source.field(), z2.clone(), super_index, blocks, comp)?;
    let braiding = Bicharacter::sign(z2, source.field())?;
    let mut fwd_global = Vec::with_capacity(source.dim());
    for g in 0..source.dim() {
        let (block, local, _) = source.global_info(g);
        let sb = super_block_of[block];
        fwd_global.push(result.global_index(sb, offset_in_super[block] + local));
    }
    Ok(Superization {
        source: source.clone(),
        result,
        braiding,
        offset_in_super,
        super_block_of,
        fwd_global,
    })
}

impl Superization {
    pub fn source(&self) -> &GmAlgebra {
        &self.source
    }

    pub fn result(&self) -> &GmAlgebra {
        &self.result
    }

    /// The sign braiding on `Z_2` carried by the regrouped algebra.
    pub fn braiding(&self) -> &Bicharacter {
        &self.braiding
    }

    /// Global basis index in the regrouped algebra for each source index.
    pub fn global_map(&self) -> &[usize] {
        &self.fwd_global
    }

    pub fn to_super(&self, a: &GmElement) -> GmElement {
        let mut out = GmElement::zero();
        for (block, locals) in a.blocks() {
            let sb = self.super_block_of[block];
            let off = self.offset_in_super[block];
            for (local, c) in locals {
                out.add_term(sb, off + local, c.clone());
            }
        }
        out
    }

    pub fn from_super(&self, a: &GmElement) -> GmElement {
        let mut out = GmElement::zero();
        for (sb, locals) in a.blocks() {
            for (local, c) in locals {
                let g = self.result.global_index(*sb, *local);
                let src = self.fwd_global.iter().position(|&x| x == g).expect("regrouping is a bijection");
                let (block, loc, _) = self.source.global_info(src);
                out.add_term(*block, loc, c.clone());
            }
        }
        out
    }

    /// Maps a dense coordinate row over the source basis to one over the
    /// regrouped basis.
    pub fn map_row(&self, row: &Row) -> Row {
        let mut out = vec![FieldElement::zero(self.source.field()); self.result.dim()];
        for (k, c) in row.iter().enumerate() {
            out[self.fwd_global[k]] = c.clone();
        }
        out
    }

    /// `(ab)^s = a^s b^s` on all basis pairs.
    pub fn check_multiplicative(&self) -> CheckReport {
        for x in 0..self.source.dim() {
            let ex = self.source.basis_element(x);
            for y in 0..self.source.dim() {
                let ey = self.source.basis_element(y);
                let lhs = self.to_super(&self.source.multiply(&ex, &ey));
                let rhs = self.result.multiply(&self.to_super(&ex), &self.to_super(&ey));
                if lhs != rhs {
                    let (_, _, nx) = self.source.global_info(x);
                    let (_, _, ny) = self.source.global_info(y);
                    let diff = lhs.sub(&rhs);
                    let terms = diff
                        .blocks()
                        .iter()
                        .flat_map(|(b, locals)| {
                            locals.iter().map(|(l, c)| {
                                (self.result.blocks()[b][*l].clone(), c.clone())
                            })
                        })
                        .collect();
                    return CheckReport::fail(
                        "superize-mult",
                        Witness {
                            indices: vec![x, y],
                            labels: vec![nx.to_string(), ny.to_string()],
                            defect: Defect::Vector(terms),
                        },
                    );
                }
            }
        }
        CheckReport::pass("superize-mult")
    }

    /// Transports a quantum trace: the regrouped diagonal maps apply the
    /// original `f` on parts coming from diagonal source blocks and vanish
    /// on parts coming from off-diagonal ones. The construction is
    /// revalidated from scratch.
    pub fn super_trace(&self, tr: &QuantumTrace) -> Result<QuantumTrace, Error> {
        if tr.source() != &self.source {
            return Err(Error::precondition("trace does not belong to the superized algebra".to_string()));
        }
        let field = self.source.field();
        let mut diag_maps: BTreeMap<usize, Vec<Row>> = BTreeMap::new();
        for (&sb, names) in self.result.blocks() {
            if sb.0 != sb.1 {
                continue;
            }
            diag_maps.insert(sb.0, vec![vec![FieldElement::zero(field); tr.target_dim()]; names.len()]);
        }
        for (&(i, j), &sb) in &self.super_block_of {
            if i != j || sb.0 != sb.1 {
                continue;
            }
            let off = self.offset_in_super[&(i, j)];
            let src_map = &tr.diag_maps()[&i];
            let dst = diag_maps.get_mut(&sb.0).expect("diagonal superblock exists");
            for (local, col) in src_map.iter().enumerate() {
                dst[off + local] = col.clone();
            }
        }
        QuantumTrace::new(self.result.clone(), self.braiding.clone(), tr.target_dim(), diag_maps)
    }

    /// Transports a transpose blockwise; anti-multiplicativity is
    /// revalidated from scratch on the regrouped algebra.
    pub fn super_transpose(&self, t: &Transpose) -> Result<Transpose, Error> {
        if t.source() != &self.source {
            return Err(Error::precondition("transpose does not belong to the superized algebra".to_string()));
        }
        let field = self.source.field();
        let mut block_maps: BTreeMap<(usize, usize), Vec<Row>> = BTreeMap::new();
        for (&sb, names) in self.result.blocks() {
            let target = self.result.block_dim((sb.1, sb.0));
            block_maps.insert(sb, vec![vec![FieldElement::zero(field); target]; names.len()]);
        }
        for (&(i, j), &sb) in &self.super_block_of {
            let off = self.offset_in_super[&(i, j)];
            let off_t = self.offset_in_super[&(j, i)];
            let src_map = &t.block_maps()[&(i, j)];
            let dst = block_maps.get_mut(&sb).expect("superblock exists");
            for (local, col) in src_map.iter().enumerate() {
                for (k, c) in col.iter().enumerate() {
                    dst[off + local][off_t + k] = c.clone();
                }
            }
        }
        Transpose::new(self.result.clone(), block_maps)
    }
}

/// Verifies that superization commutes with taking trace kernels and
/// orthosymplectic subalgebras: the regrouped image of each subalgebra must
/// equal the subalgebra computed directly on the regrouped data. Both sides
/// are produced by independent computations and compared per `Z_2` degree
/// as exact row spaces.
pub fn verify_superization(
    tr: &QuantumTrace,
    t: &Transpose,
    m: &GmElement,
) -> Result<CheckReport, Error> {
    if tr.source() != t.source() {
        return Err(Error::precondition("trace and transpose have different sources".to_string()));
    }
    let source = tr.source();
    let r = tr.braiding();
    let s = superize(source, r)?;
    let field = source.field();
    let z2 = s.result().group().clone();

    let transport = |sub: &Subalgebra| -> Result<Subalgebra, Error> {
        let mut by_degree: BTreeMap<GroupElement, Vec<Row>> = BTreeMap::new();
        for (u, rows) in sub.degree_rows() {
            let parity = r.parity(u)?;
            let key = z2.element(vec![parity as i64])?;
            by_degree
                .entry(key)
                .or_default()
                .extend(rows.iter().map(|row| s.map_row(row)));
        }
        Ok(Subalgebra::from_degree_rows(field, s.result().dim(), by_degree))
    };

    let sl_src = transport(&tr.compute_sl())?;
    let sl_sup = s.super_trace(tr)?.compute_sl();
    let osp_src = transport(&t.compute_osp(m, r)?)?;
    let osp_sup = s.super_transpose(t)?.compute_osp(&s.to_super(m), s.braiding())?;

    for (check, left, right) in [("sl", &sl_src, &sl_sup), ("osp", &osp_src, &osp_sup)] {
        if left.same_space(right) {
            continue;
        }
        for (a, b, side) in [(left, right, "regrouped"), (right, left, "direct")] {
            for (deg, rows) in a.degree_rows() {
                for row in rows {
                    let residual = b.reduce(row);
                    if residual.iter().all(|c| c.is_zero()) {
                        continue;
                    }
                    let terms = residual
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| (s.result().global_info(k).2.to_string(), c.clone()))
                        .collect();
                    return Ok(CheckReport::fail(
                        "superization",
                        Witness {
                            indices: vec![],
                            labels: vec![
                                check.to_string(),
                                format!("degree {deg}"),
                                format!("only in the {side} subalgebra"),
                            ],
                            defect: Defect::Vector(terms),
                        },
                    ));
                }
            }
        }
        // Spaces differ but every row embeds: dimensions must disagree.
        return Ok(CheckReport::fail(
            "superization",
            Witness {
                indices: vec![left.dim(), right.dim()],
                labels: vec![check.to_string(), "dimension mismatch".to_string()],
                defect: Defect::Scalar(FieldElement::from_int(
                    field,
                    left.dim() as i64 - right.dim() as i64,
                )),
            },
        ));
    }
    Ok(CheckReport::pass("superization"))
}
