//! Ready-made small instances used by the test suites, the CLI fixtures,
//! and as worked examples of the constructors.

use crate::algebra::{GradedAlgebra, StructureTable};
use crate::classical::{gl_block_algebra, gl_identity, gl_trace, gl_transpose, QuantumTrace, Transpose};
use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::gm::{GmAlgebra, GmElement};
use crate::grading::{Bicharacter, GroupSpec};
use crate::quiver::Quiver;

fn monomial_names(n: u32) -> Vec<String> {
    (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "x".to_string(),
            k => format!("x{k}"),
        })
        .collect()
}

fn monomial_table(field: FieldSpec, n: u32) -> StructureTable {
    let mut sc = StructureTable::new();
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                sc.insert(
                    (i as usize, j as usize),
                    vec![((i + j) as usize, FieldElement::one(field))],
                );
            }
        }
    }
    sc
}

/// The truncated polynomial algebra on one generator `x` with `x^n = 0`,
/// graded over `Z_n` by monomial degree, braided by
/// `r(k, m) = zeta_n^(k m)` over `Q(zeta_n)`. Basis `1, x, ..., x^(n-1)`.
pub fn monomial_algebra_cyclotomic(n: u32) -> Result<GradedAlgebra, Error> {
    if n < 2 {
        return Err(Error::precondition("truncation order must be at least 2".to_string()));
    }
    let braiding = Bicharacter::cyclic_root(n)?;
    let group = braiding.group().clone();
    let field = braiding.field();
    let deg = (0..n)
        .map(|k| group.element(vec![k as i64]))
        .collect::<Result<Vec<_>, _>>()?;
    GradedAlgebra::new(
        field,
        group,
        braiding,
        monomial_names(n),
        deg,
        monomial_table(field, n),
        Some(0),
    )
}

/// The same truncated algebra graded over `Z` with the symbolic braiding
/// `r(k, m) = t^(k m)` over `Q(t)`.
pub fn monomial_algebra_generic(n: u32) -> Result<GradedAlgebra, Error> {
    if n < 2 {
        return Err(Error::precondition("truncation order must be at least 2".to_string()));
    }
    let braiding = Bicharacter::generic_root()?;
    let group = braiding.group().clone();
    let field = braiding.field();
    let deg = (0..n)
        .map(|k| group.element(vec![k as i64]))
        .collect::<Result<Vec<_>, _>>()?;
    GradedAlgebra::new(
        field,
        group,
        braiding,
        monomial_names(n),
        deg,
        monomial_table(field, n),
        Some(0),
    )
}

fn z3_vertices(k: usize) -> Result<(GroupSpec, Vec<crate::grading::GroupElement>), Error> {
    let g = GroupSpec::new(vec![3])?;
    let verts = (1..=k as i64)
        .map(|i| g.element(vec![i]))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((g, verts))
}

/// A quiver on `k <= 3` vertices labeled `1..=k` in `Z_3` with no arrows;
/// its path algebra has dimension `k`.
pub fn isolated_vertices_quiver(k: usize) -> Result<Quiver, Error> {
    if !(1..=3).contains(&k) {
        return Err(Error::precondition("between 1 and 3 vertices".to_string()));
    }
    let (g, verts) = z3_vertices(k)?;
    Quiver::new(g, verts, vec![])
}

/// Vertices `1, 2, 3` in `Z_3` and one arrow `1 -> 2`; path algebra
/// dimension 4.
pub fn single_arrow_quiver() -> Result<Quiver, Error> {
    let (g, verts) = z3_vertices(3)?;
    let (v1, v2) = (verts[0].clone(), verts[1].clone());
    Quiver::new(g, verts, vec![("a12".to_string(), v1, v2)])
}

/// Vertices `1, 2, 3` in `Z_3` and arrows `1 -> 2`, `1 -> 3`; path algebra
/// dimension 5.
pub fn two_arrow_quiver() -> Result<Quiver, Error> {
    let (g, verts) = z3_vertices(3)?;
    let (v1, v2, v3) = (verts[0].clone(), verts[1].clone(), verts[2].clone());
    Quiver::new(
        g,
        verts,
        vec![
            ("a12".to_string(), v1.clone(), v2),
            ("a13".to_string(), v1, v3),
        ],
    )
}

/// Vertices `1, 2, 3` in `Z_3`, arrows `1 -> 2`, `2 -> 3`, and `n` parallel
/// arrows `1 -> 3`; path algebra dimension `n + 6`, with block `(1, 3)` of
/// dimension `n + 1` (the parallel arrows plus the composite through 2).
pub fn fan_quiver(n: usize) -> Result<Quiver, Error> {
    let (g, verts) = z3_vertices(3)?;
    let (v1, v2, v3) = (verts[0].clone(), verts[1].clone(), verts[2].clone());
    let mut arrows = vec![
        ("a12".to_string(), v1.clone(), v2.clone()),
        ("a23".to_string(), v2, v3.clone()),
    ];
    for k in 0..n {
        arrows.push((format!("b{k}"), v1.clone(), v3.clone()));
    }
    Quiver::new(g, verts, arrows)
}

/// A full block-matrix algebra bundled with the data the classical
/// constructions consume: its braiding, the block dimensions, and the
/// derived trace, transpose, and identity.
#[derive(Clone, Debug)]
pub struct ClassicalInstance {
    pub algebra: GmAlgebra,
    pub braiding: Bicharacter,
    pub dims: Vec<usize>,
}

impl ClassicalInstance {
    fn build(group: GroupSpec, labels: Vec<Vec<i64>>, dims: Vec<usize>, braiding: Bicharacter) -> Result<Self, Error> {
        let algebra = gl_block_algebra(group, labels, dims.clone(), braiding.field())?;
        Ok(ClassicalInstance { algebra, braiding, dims })
    }

    pub fn trace(&self) -> Result<QuantumTrace, Error> {
        gl_trace(&self.algebra, &self.braiding, &self.dims)
    }

    pub fn transpose(&self) -> Result<Transpose, Error> {
        gl_transpose(&self.algebra, &self.dims)
    }

    pub fn identity(&self) -> GmElement {
        gl_identity(self.algebra.field(), &self.dims)
    }
}

/// `gl` of a line each in degrees `0` and `1` of `Z_2`, sign-braided
/// over `Q`: the smallest super matrix algebra.
pub fn gl11_z2() -> Result<ClassicalInstance, Error> {
    let group = GroupSpec::new(vec![2])?;
    let r = Bicharacter::sign(group.clone(), FieldSpec::Rational)?;
    ClassicalInstance::build(group, vec![vec![0], vec![1]], vec![1, 1], r)
}

/// `gl` of a plane in degree `0` and a line in degree `1` of `Z_2`,
/// sign-braided over `Q`.
pub fn gl21_z2() -> Result<ClassicalInstance, Error> {
    let group = GroupSpec::new(vec![2])?;
    let r = Bicharacter::sign(group.clone(), FieldSpec::Rational)?;
    ClassicalInstance::build(group, vec![vec![0], vec![1]], vec![2, 1], r)
}

/// `gl` of a line in every degree of `Z_3`, braided by
/// `r(k, m) = zeta_3^(k m)` over `Q(zeta_3)`. This braiding is not skew,
/// so the trace kernel fails to close under the bracket.
pub fn gl_z3_dense() -> Result<ClassicalInstance, Error> {
    let r = Bicharacter::cyclic_root(3)?;
    let group = r.group().clone();
    ClassicalInstance::build(group, vec![vec![0], vec![1], vec![2]], vec![1, 1, 1], r)
}

/// `gl` of a line in every degree of `Z_4`, sign-braided over `Q`: skew
/// with parities `0, 2 -> even` and `1, 3 -> odd`, the standard
/// superization example.
pub fn gl1111_z4() -> Result<ClassicalInstance, Error> {
    let group = GroupSpec::new(vec![4])?;
    let r = Bicharacter::sign(group.clone(), FieldSpec::Rational)?;
    ClassicalInstance::build(
        group,
        vec![vec![0], vec![1], vec![2], vec![3]],
        vec![1, 1, 1, 1],
        r,
    )
}

/// Plain `2 x 2` matrices over `Q`: the trivial group with the trivial
/// braiding, where the quantum trace is the ordinary trace and the
/// orthosymplectic space of the identity form is an orthogonal algebra.
pub fn gl2_trivial() -> Result<ClassicalInstance, Error> {
    let group = GroupSpec::new(vec![])?;
    let r = Bicharacter::trivial(group.clone(), FieldSpec::Rational);
    ClassicalInstance::build(group, vec![vec![]], vec![2], r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_algebra_shapes() {
        let a = monomial_algebra_cyclotomic(5).unwrap();
        assert_eq!(a.dim(), 5);
        assert_eq!(a.basis_names()[4], "x4");
        assert_eq!(a.unit(), Some(0));
        let g = monomial_algebra_generic(3).unwrap();
        assert_eq!(g.dim(), 3);
        assert_eq!(g.group().orders(), &[0]);
        assert!(monomial_algebra_cyclotomic(1).is_err());
    }

    #[test]
    fn quiver_instance_dimensions() {
        for k in 1..=3 {
            let alg = isolated_vertices_quiver(k)
                .unwrap()
                .path_algebra(FieldSpec::Rational, None)
                .unwrap();
            assert_eq!(alg.dim(), k);
        }
        let dims: Vec<usize> = [
            single_arrow_quiver().unwrap(),
            two_arrow_quiver().unwrap(),
            fan_quiver(0).unwrap(),
            fan_quiver(2).unwrap(),
        ]
        .iter()
        .map(|q| q.path_algebra(FieldSpec::Rational, None).unwrap().dim())
        .collect();
        assert_eq!(dims, vec![4, 5, 6, 8]);
    }

    #[test]
    fn classical_instance_bundles_cohere() {
        for inst in [gl11_z2().unwrap(), gl21_z2().unwrap(), gl1111_z4().unwrap(), gl2_trivial().unwrap()] {
            let tr = inst.trace().unwrap();
            let t = inst.transpose().unwrap();
            let id = inst.identity();
            assert_eq!(inst.algebra.multiply(&id, &id), id);
            assert_eq!(t.apply(&t.apply(&id)), id);
            assert_eq!(tr.qtrace(&id).len(), 1);
        }
        let z3 = gl_z3_dense().unwrap();
        z3.braiding.is_skew_symmetric().expect_fail();
        gl1111_z4().unwrap().braiding.is_skew_symmetric().expect_pass();
    }
}
