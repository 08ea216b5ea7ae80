//! The JSON document model: a versioned, text-only interchange format for
//! groups, bicharacters, algebras, quivers, traces, transposes, forms, and
//! representations. Scalars are strings in the canonical literal syntax, so
//! documents stay exact and reviewable.
//!
//! Loading resolves sections in dependency order and enforces every
//! constructor invariant; a structure constant that violates the grading is
//! a load-time error naming the offending product.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{GradedAlgebra, GradedElement, StructureTable};
use crate::classical::{QuantumTrace, Transpose};
use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::gm::{CompTable, GmAlgebra, GmElement};
use crate::grading::{Bicharacter, GroupSpec};
use crate::quiver::Quiver;
use crate::rep::Representation;

pub const SCHEMA: &str = "mlie/1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub schema: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<Vec<u64>>,
    /// Generator-pair values of the bicharacter, as scalar literals.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bicharacter: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gm: Option<GmDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quiver: Option<QuiverDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transpose: Option<TransposeDoc>,
    /// A block-matrix element, e.g. the form defining an orthosymplectic
    /// subalgebra.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Vec<TermDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation: Option<RepDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub basis: Vec<String>,
    pub degrees: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
    /// Products of basis pairs; omitted pairs multiply to zero.
    pub products: Vec<ProductDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProductDoc {
    pub left: String,
    pub right: String,
    pub terms: Vec<TermDoc>,
}

/// One scalar coefficient on a named basis vector.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermDoc {
    pub basis: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GmDoc {
    pub index: Vec<Vec<i64>>,
    pub blocks: Vec<BlockDoc>,
    /// Products of block-basis pairs, addressed by (globally unique) names;
    /// omitted pairs multiply to zero.
    pub compositions: Vec<ProductDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockDoc {
    pub row: usize,
    pub col: usize,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuiverDoc {
    pub vertices: Vec<Vec<i64>>,
    pub arrows: Vec<ArrowDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArrowDoc {
    pub name: String,
    pub source: Vec<i64>,
    pub target: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceDoc {
    pub target_dim: usize,
    pub maps: Vec<TraceMapDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceMapDoc {
    /// Diagonal block index.
    pub block: usize,
    /// Per local basis vector, its image coordinates in the target space.
    pub values: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransposeDoc {
    pub maps: Vec<TransposeMapDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransposeMapDoc {
    pub row: usize,
    pub col: usize,
    /// Per local basis vector of block (row, col), its image coordinates
    /// over the basis of block (col, row).
    pub values: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepDoc {
    /// Represented basis vectors as coefficient lists over the algebra
    /// basis.
    pub lie: Vec<Vec<TermDoc>>,
    pub carrier: Vec<String>,
    pub carrier_degrees: Vec<Vec<i64>>,
    /// One carrier matrix (rows of scalar literals) per represented basis
    /// vector.
    pub matrices: Vec<Vec<Vec<String>>>,
}

impl Document {
    pub fn empty() -> Self {
        Document {
            schema: SCHEMA.to_string(),
            field: None,
            group: None,
            bicharacter: None,
            algebra: None,
            gm: None,
            quiver: None,
            trace: None,
            transpose: None,
            form: None,
            representation: None,
        }
    }
}

pub fn from_json(s: &str) -> Result<Document, Error> {
    let doc: Document = serde_json::from_str(s)?;
    if doc.schema != SCHEMA {
        return Err(Error::invalid(
            "document",
            format!("unsupported schema {:?}; this build reads {SCHEMA:?}", doc.schema),
        ));
    }
    Ok(doc)
}

pub fn to_json(doc: &Document) -> Result<String, Error> {
    let mut s = serde_json::to_string_pretty(doc)?;
    s.push('\n');
    Ok(s)
}

/// Folds several documents into one. Configuration sections (`field`,
/// `group`, `bicharacter`) may repeat only with identical content; object
/// sections must appear in at most one document.
pub fn merge(docs: Vec<Document>) -> Result<Document, Error> {
    let mut out = Document::empty();
    fn fill<T: PartialEq>(slot: &mut Option<T>, value: Option<T>, name: &str, config: bool) -> Result<(), Error> {
        match (slot.as_ref(), value) {
            (_, None) => Ok(()),
            (None, v) => {
                *slot = v;
                Ok(())
            }
            (Some(old), Some(new)) if config && *old == new => Ok(()),
            (Some(_), Some(_)) => Err(Error::invalid(
                "document",
                format!("section {name:?} appears in more than one input"),
            )),
        }
    }
    for doc in docs {
        fill(&mut out.field, doc.field, "field", true)?;
        fill(&mut out.group, doc.group, "group", true)?;
        fill(&mut out.bicharacter, doc.bicharacter, "bicharacter", true)?;
        fill(&mut out.algebra, doc.algebra, "algebra", false)?;
        fill(&mut out.gm, doc.gm, "gm", false)?;
        fill(&mut out.quiver, doc.quiver, "quiver", false)?;
        fill(&mut out.trace, doc.trace, "trace", false)?;
        fill(&mut out.transpose, doc.transpose, "transpose", false)?;
        fill(&mut out.form, doc.form, "form", false)?;
        fill(&mut out.representation, doc.representation, "representation", false)?;
    }
    Ok(out)
}

/// Everything a document (or a merged set of documents) describes, fully
/// constructed and validated.
#[derive(Clone, Debug)]
pub struct LoadedDocument {
    pub field: FieldSpec,
    pub group: Option<GroupSpec>,
    pub braiding: Option<Bicharacter>,
    pub algebra: Option<GradedAlgebra>,
    pub gm: Option<GmAlgebra>,
    pub quiver: Option<Quiver>,
    pub trace: Option<QuantumTrace>,
    pub transpose: Option<Transpose>,
    pub form: Option<GmElement>,
    pub representation: Option<Representation>,
}

fn need<'a, T>(opt: &'a Option<T>, what: &str, forr: &str) -> Result<&'a T, Error> {
    opt.as_ref()
        .ok_or_else(|| Error::invalid("document", format!("{forr} requires a {what} section")))
}

fn parse_scalar(field: FieldSpec, s: &str, at: &str) -> Result<FieldElement, Error> {
    FieldElement::parse(field, s)
        .map_err(|e| Error::invalid("document", format!("bad scalar {s:?} in {at}: {e}")))
}

fn resolve_gm_terms(
    gm: &GmAlgebra,
    terms: &[TermDoc],
    at: &str,
) -> Result<GmElement, Error> {
    let mut out = GmElement::zero();
    for term in terms {
        let g = gm.index_of_name(&term.basis).ok_or_else(|| {
            Error::invalid("document", format!("unknown basis name {:?} in {at}", term.basis))
        })?;
        let (block, local, _) = gm.global_info(g);
        out.add_term(*block, local, parse_scalar(gm.field(), &term.value, at)?);
    }
    Ok(out)
}

/// Builds every object the document describes. `field_override` replaces
/// the document's field mode before any scalar is parsed.
pub fn resolve(doc: &Document, field_override: Option<FieldSpec>) -> Result<LoadedDocument, Error> {
    let field = match (field_override, &doc.field) {
        (Some(f), _) => f,
        (None, Some(s)) => s.parse()?,
        (None, None) => FieldSpec::Rational,
    };
    let group = doc.group.clone().map(GroupSpec::new).transpose()?;

    let braiding = doc
        .bicharacter
        .as_ref()
        .map(|values| -> Result<Bicharacter, Error> {
            let g = need(&group, "group", "the bicharacter")?.clone();
            let parsed = values
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|s| parse_scalar(field, s, "bicharacter"))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            let report = Bicharacter::validate(&g, field, &parsed)?;
            if !report.pass {
                return Err(Error::invalid(
                    "document",
                    format!(
                        "bicharacter violates the torsion constraints: {}",
                        report.witness.map(|w| w.to_string()).unwrap_or_default()
                    ),
                ));
            }
            Bicharacter::new(g, field, parsed)
        })
        .transpose()?;

    let algebra = doc
        .algebra
        .as_ref()
        .map(|a| -> Result<GradedAlgebra, Error> {
            let g = need(&group, "group", "the algebra")?.clone();
            let r = need(&braiding, "bicharacter", "the algebra")?.clone();
            let index_of = |name: &str| -> Result<usize, Error> {
                a.basis.iter().position(|n| n == name).ok_or_else(|| {
                    Error::invalid("document", format!("unknown basis name {name:?} in algebra products"))
                })
            };
            let degrees = a
                .degrees
                .iter()
                .map(|c| g.element(c.clone()))
                .collect::<Result<Vec<_>, _>>()?;
            let mut sc = StructureTable::new();
            for p in &a.products {
                let i = index_of(&p.left)?;
                let j = index_of(&p.right)?;
                let terms = p
                    .terms
                    .iter()
                    .map(|t| Ok((index_of(&t.basis)?, parse_scalar(field, &t.value, "algebra products")?)))
                    .collect::<Result<Vec<_>, Error>>()?;
                if sc.insert((i, j), terms).is_some() {
                    return Err(Error::invalid(
                        "document",
                        format!("duplicate product entry for ({}, {})", p.left, p.right),
                    ));
                }
            }
            let unit = a.unit.as_deref().map(index_of).transpose()?;
            let alg = GradedAlgebra::new(field, g, r, a.basis.clone(), degrees, sc, unit)?;
            let graded = alg.check_graded();
            if !graded.pass {
                let w = graded.witness.expect("failing check carries a witness");
                return Err(Error::invalid(
                    "document",
                    format!(
                        "structure constants violate the grading at product ({}) with off-degree part {}",
                        w.labels.join(", "),
                        w.defect
                    ),
                ));
            }
            Ok(alg)
        })
        .transpose()?;

    let gm = doc
        .gm
        .as_ref()
        .map(|m| -> Result<GmAlgebra, Error> {
            let g = need(&group, "group", "the gm algebra")?.clone();
            let index_set = m
                .index
                .iter()
                .map(|c| g.element(c.clone()))
                .collect::<Result<Vec<_>, _>>()?;
            let mut blocks: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
            for b in &m.blocks {
                if blocks.insert((b.row, b.col), b.basis.clone()).is_some() {
                    return Err(Error::invalid(
                        "document",
                        format!("duplicate block ({}, {})", b.row, b.col),
                    ));
                }
            }
            // A shape-only prototype resolves names to block positions; the
            // real constructor then validates the composition table.
            let proto = GmAlgebra::new(field, g.clone(), index_set.clone(), blocks.clone(), CompTable::new())?;
            let locate = |name: &str, at: &str| -> Result<((usize, usize), usize), Error> {
                let g = proto.index_of_name(name).ok_or_else(|| {
                    Error::invalid("document", format!("unknown basis name {name:?} in {at}"))
                })?;
                let (block, local, _) = proto.global_info(g);
                Ok((*block, local))
            };
            let mut comp = CompTable::new();
            for c in &m.compositions {
                let ((bi, bj), p) = locate(&c.left, "gm compositions")?;
                let ((bj2, bl), q) = locate(&c.right, "gm compositions")?;
                if bj != bj2 {
                    return Err(Error::invalid(
                        "document",
                        format!(
                            "composition ({}, {}) is not block-composable: column index {bj} differs from row index {bj2}",
                            c.left, c.right
                        ),
                    ));
                }
                let terms = c
                    .terms
                    .iter()
                    .map(|t| -> Result<(usize, FieldElement), Error> {
                        let ((ti, tl), r) = locate(&t.basis, "gm compositions")?;
                        if (ti, tl) != (bi, bl) {
                            return Err(Error::invalid(
                                "document",
                                format!(
                                    "composition ({}, {}) lands in block ({bi}, {bl}) but names {:?} from block ({ti}, {tl})",
                                    c.left, c.right, t.basis
                                ),
                            ));
                        }
                        Ok((r, parse_scalar(field, &t.value, "gm compositions")?))
                    })
                    .collect::<Result<Vec<_>, Error>>()?;
                if comp.insert((bi, bj, bl, p, q), terms).is_some() {
                    return Err(Error::invalid(
                        "document",
                        format!("duplicate composition entry for ({}, {})", c.left, c.right),
                    ));
                }
            }
            GmAlgebra::new(field, g, index_set, blocks, comp)
        })
        .transpose()?;

    let quiver = doc
        .quiver
        .as_ref()
        .map(|q| -> Result<Quiver, Error> {
            let g = need(&group, "group", "the quiver")?.clone();
            let vertices = q
                .vertices
                .iter()
                .map(|c| g.element(c.clone()))
                .collect::<Result<Vec<_>, _>>()?;
            let arrows = q
                .arrows
                .iter()
                .map(|a| {
                    Ok((
                        a.name.clone(),
                        g.element(a.source.clone())?,
                        g.element(a.target.clone())?,
                    ))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            Quiver::new(g, vertices, arrows)
        })
        .transpose()?;

    let trace = doc
        .trace
        .as_ref()
        .map(|t| -> Result<QuantumTrace, Error> {
            let m = need(&gm, "gm", "the trace")?;
            let r = need(&braiding, "bicharacter", "the trace")?;
            let mut maps = BTreeMap::new();
            for entry in &t.maps {
                let parsed = entry
                    .values
                    .iter()
                    .map(|col| {
                        col.iter()
                            .map(|s| parse_scalar(field, s, "trace maps"))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if maps.insert(entry.block, parsed).is_some() {
                    return Err(Error::invalid(
                        "document",
                        format!("duplicate trace map for block {}", entry.block),
                    ));
                }
            }
            QuantumTrace::new(m.clone(), r.clone(), t.target_dim, maps)
        })
        .transpose()?;

    let transpose = doc
        .transpose
        .as_ref()
        .map(|t| -> Result<Transpose, Error> {
            let m = need(&gm, "gm", "the transpose")?;
            let mut maps = BTreeMap::new();
            for entry in &t.maps {
                let parsed = entry
                    .values
                    .iter()
                    .map(|col| {
                        col.iter()
                            .map(|s| parse_scalar(field, s, "transpose maps"))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if maps.insert((entry.row, entry.col), parsed).is_some() {
                    return Err(Error::invalid(
                        "document",
                        format!("duplicate transpose map for block ({}, {})", entry.row, entry.col),
                    ));
                }
            }
            Transpose::new(m.clone(), maps)
        })
        .transpose()?;

    let form = doc
        .form
        .as_ref()
        .map(|terms| {
            let m = need(&gm, "gm", "the form")?;
            resolve_gm_terms(m, terms, "form")
        })
        .transpose()?;

    let representation = doc
        .representation
        .as_ref()
        .map(|rd| -> Result<Representation, Error> {
            let alg = need(&algebra, "algebra", "the representation")?;
            let lie = rd
                .lie
                .iter()
                .map(|terms| -> Result<GradedElement, Error> {
                    let mut e = GradedElement::zero();
                    for t in terms {
                        let i = alg.index_of(&t.basis).ok_or_else(|| {
                            Error::invalid(
                                "document",
                                format!("unknown basis name {:?} in representation", t.basis),
                            )
                        })?;
                        e.add_term(i, parse_scalar(field, &t.value, "representation")?);
                    }
                    Ok(e)
                })
                .collect::<Result<Vec<_>, _>>()?;
            let g = alg.group();
            let carrier_degrees = rd
                .carrier_degrees
                .iter()
                .map(|c| g.element(c.clone()))
                .collect::<Result<Vec<_>, _>>()?;
            let matrices = rd
                .matrices
                .iter()
                .map(|mat| {
                    mat.iter()
                        .map(|row| {
                            row.iter()
                                .map(|s| parse_scalar(field, s, "representation matrices"))
                                .collect::<Result<Vec<_>, _>>()
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            Representation::new(alg.clone(), lie, rd.carrier.clone(), carrier_degrees, matrices)
        })
        .transpose()?;

    Ok(LoadedDocument {
        field,
        group,
        braiding,
        algebra,
        gm,
        quiver,
        trace,
        transpose,
        form,
        representation,
    })
}

fn braiding_section(r: &Bicharacter) -> Vec<Vec<String>> {
    r.generator_values()
        .iter()
        .map(|row| row.iter().map(|v| v.to_string()).collect())
        .collect()
}

/// A document describing a graded algebra (with its group, field, and
/// braiding).
pub fn graded_to_document(alg: &GradedAlgebra) -> Document {
    let mut doc = Document::empty();
    doc.field = Some(alg.field().to_string());
    doc.group = Some(alg.group().orders().to_vec());
    doc.bicharacter = Some(braiding_section(alg.braiding()));
    let products = alg
        .structure_table()
        .iter()
        .map(|(&(i, j), terms)| ProductDoc {
            left: alg.basis_names()[i].clone(),
            right: alg.basis_names()[j].clone(),
            terms: terms
                .iter()
                .map(|(k, c)| TermDoc { basis: alg.basis_names()[*k].clone(), value: c.to_string() })
                .collect(),
        })
        .collect();
    doc.algebra = Some(AlgebraDoc {
        basis: alg.basis_names().to_vec(),
        degrees: alg.basis_names().iter().enumerate().map(|(i, _)| alg.degree(i).coords().to_vec()).collect(),
        unit: alg.unit().map(|i| alg.basis_names()[i].clone()),
        products,
    });
    doc
}

/// A document describing a block-indexed algebra, optionally with a
/// braiding section.
pub fn gm_to_document(alg: &GmAlgebra, braiding: Option<&Bicharacter>) -> Document {
    let mut doc = Document::empty();
    doc.field = Some(alg.field().to_string());
    doc.group = Some(alg.group().orders().to_vec());
    doc.bicharacter = braiding.map(braiding_section);
    let name_of = |block: (usize, usize), local: usize| -> String {
        alg.blocks()[&block][local].clone()
    };
    let compositions = alg
        .comp()
        .iter()
        .map(|(&(i, j, l, p, q), terms)| ProductDoc {
            left: name_of((i, j), p),
            right: name_of((j, l), q),
            terms: terms
                .iter()
                .map(|(r, c)| TermDoc { basis: name_of((i, l), *r), value: c.to_string() })
                .collect(),
        })
        .collect();
    doc.gm = Some(GmDoc {
        index: alg.index_set().iter().map(|g| g.coords().to_vec()).collect(),
        blocks: alg
            .blocks()
            .iter()
            .map(|(&(row, col), basis)| BlockDoc { row, col, basis: basis.clone() })
            .collect(),
        compositions,
    });
    doc
}

/// A document describing a quiver over the given scalar field.
pub fn quiver_to_document(q: &Quiver, field: FieldSpec) -> Document {
    let mut doc = Document::empty();
    doc.field = Some(field.to_string());
    doc.group = Some(q.group().orders().to_vec());
    doc.quiver = Some(QuiverDoc {
        vertices: q.vertices().iter().map(|v| v.coords().to_vec()).collect(),
        arrows: q
            .arrows()
            .iter()
            .map(|a| ArrowDoc {
                name: a.name.clone(),
                source: q.vertices()[a.source].coords().to_vec(),
                target: q.vertices()[a.target].coords().to_vec(),
            })
            .collect(),
    });
    doc
}

/// The trace section for a quantum trace (attach to a document carrying
/// the matching gm and bicharacter sections).
pub fn trace_section(tr: &QuantumTrace) -> TraceDoc {
    TraceDoc {
        target_dim: tr.target_dim(),
        maps: tr
            .diag_maps()
            .iter()
            .map(|(&block, cols)| TraceMapDoc {
                block,
                values: cols
                    .iter()
                    .map(|col| col.iter().map(|c| c.to_string()).collect())
                    .collect(),
            })
            .collect(),
    }
}

/// The transpose section for a generalized transpose.
pub fn transpose_section(t: &Transpose) -> TransposeDoc {
    TransposeDoc {
        maps: t
            .block_maps()
            .iter()
            .map(|(&(row, col), cols)| TransposeMapDoc {
                row,
                col,
                values: cols
                    .iter()
                    .map(|col| col.iter().map(|c| c.to_string()).collect())
                    .collect(),
            })
            .collect(),
    }
}

/// A block-matrix element as named terms.
pub fn gm_element_terms(alg: &GmAlgebra, e: &GmElement) -> Vec<TermDoc> {
    let mut out = Vec::new();
    for (block, locals) in e.blocks() {
        for (local, c) in locals {
            out.push(TermDoc {
                basis: alg.blocks()[block][*local].clone(),
                value: c.to_string(),
            });
        }
    }
    out
}

/// The representation section for a representation (attach to a document
/// carrying the matching algebra section).
pub fn representation_section(rep: &Representation) -> RepDoc {
    let names = rep.ambient().basis_names();
    RepDoc {
        lie: rep
            .lie_basis()
            .iter()
            .map(|e| {
                e.coeffs()
                    .iter()
                    .map(|(i, c)| TermDoc { basis: names[*i].clone(), value: c.to_string() })
                    .collect()
            })
            .collect(),
        carrier: rep.carrier_names().to_vec(),
        carrier_degrees: rep.carrier_degrees().iter().map(|d| d.coords().to_vec()).collect(),
        matrices: (0..rep.lie_dim())
            .map(|k| {
                rep.action(k)
                    .iter()
                    .map(|row| row.iter().map(|c| c.to_string()).collect())
                    .collect()
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{gl_block_algebra, gl_identity, gl_trace, gl_transpose};
    use crate::instances::monomial_algebra_cyclotomic;
    use crate::rep::Representation;

    #[test]
    fn graded_algebra_round_trip() {
        let alg = monomial_algebra_cyclotomic(3).unwrap();
        let doc = graded_to_document(&alg);
        let json = to_json(&doc).unwrap();
        let parsed = from_json(&json).unwrap();
        assert_eq!(doc, parsed);
        let loaded = resolve(&parsed, None).unwrap();
        assert_eq!(loaded.algebra.as_ref().unwrap(), &alg);
        assert_eq!(to_json(&graded_to_document(loaded.algebra.as_ref().unwrap())).unwrap(), json);
    }

    #[test]
    fn gm_with_trace_and_transpose_round_trip() {
        let group = GroupSpec::new(vec![2]).unwrap();
        let alg = gl_block_algebra(group.clone(), vec![vec![0], vec![1]], vec![2, 1], FieldSpec::Rational).unwrap();
        let r = Bicharacter::sign(group, FieldSpec::Rational).unwrap();
        let tr = gl_trace(&alg, &r, &[2, 1]).unwrap();
        let t = gl_transpose(&alg, &[2, 1]).unwrap();
        let m = gl_identity(alg.field(), &[2, 1]);

        let mut doc = gm_to_document(&alg, Some(&r));
        doc.trace = Some(trace_section(&tr));
        doc.transpose = Some(transpose_section(&t));
        doc.form = Some(gm_element_terms(&alg, &m));

        let json = to_json(&doc).unwrap();
        let loaded = resolve(&from_json(&json).unwrap(), None).unwrap();
        assert_eq!(loaded.gm.as_ref().unwrap(), &alg);
        assert_eq!(loaded.form.as_ref().unwrap(), &m);
        assert_eq!(loaded.trace.as_ref().unwrap().qtrace(&m), tr.qtrace(&m));
        let e = alg.basis_element(0);
        assert_eq!(loaded.transpose.as_ref().unwrap().apply(&e), t.apply(&e));
    }

    #[test]
    fn quiver_round_trip() {
        let g = GroupSpec::new(vec![3]).unwrap();
        let v1 = g.element(vec![1]).unwrap();
        let v2 = g.element(vec![2]).unwrap();
        let q = Quiver::new(
            g,
            vec![v1.clone(), v2.clone()],
            vec![("x12".to_string(), v1, v2)],
        )
        .unwrap();
        let doc = quiver_to_document(&q, FieldSpec::Rational);
        let json = to_json(&doc).unwrap();
        let loaded = resolve(&from_json(&json).unwrap(), None).unwrap();
        let q2 = loaded.quiver.unwrap();
        assert_eq!(q2.vertices(), q.vertices());
        assert_eq!(q2.arrows().len(), 1);
        assert_eq!(q2.path_algebra(loaded.field, None).unwrap().dim(), 3);
    }

    #[test]
    fn representation_round_trip() {
        let alg = monomial_algebra_cyclotomic(3).unwrap();
        let rep = Representation::regular(&alg).unwrap();
        let mut doc = graded_to_document(&alg);
        doc.representation = Some(representation_section(&rep));
        let json = to_json(&doc).unwrap();
        let loaded = resolve(&from_json(&json).unwrap(), None).unwrap();
        let rep2 = loaded.representation.unwrap();
        rep2.check_rep().expect_pass();
        assert_eq!(rep2.action(1), rep.action(1));
    }

    #[test]
    fn grading_violations_fail_at_load() {
        let alg = monomial_algebra_cyclotomic(3).unwrap();
        let mut doc = graded_to_document(&alg);
        // x * x lands on x (degree 1) instead of x2 (degree 2).
        let products = &mut doc.algebra.as_mut().unwrap().products;
        let bad = products
            .iter_mut()
            .find(|p| p.left == "x" && p.right == "x")
            .unwrap();
        bad.terms[0].basis = "x".to_string();
        let err = resolve(&doc, None).unwrap_err().to_string();
        assert!(err.contains("grading"), "unexpected error: {err}");
        assert!(err.contains('x'), "witness should name the product: {err}");
    }

    #[test]
    fn bicharacter_torsion_violations_fail_at_load() {
        let mut doc = Document::empty();
        doc.field = Some("cyclotomic:3".to_string());
        doc.group = Some(vec![2]);
        doc.bicharacter = Some(vec![vec!["[0,1]".to_string()]]);
        let err = resolve(&doc, None).unwrap_err().to_string();
        assert!(err.contains("torsion"), "unexpected error: {err}");
    }

    #[test]
    fn merge_rules() {
        let alg = monomial_algebra_cyclotomic(3).unwrap();
        let base = graded_to_document(&alg);
        let mut rep_doc = Document::empty();
        rep_doc.field = base.field.clone();
        rep_doc.representation = Some(representation_section(&Representation::regular(&alg).unwrap()));
        let merged = merge(vec![base.clone(), rep_doc.clone()]).unwrap();
        let loaded = resolve(&merged, None).unwrap();
        loaded.representation.unwrap().check_rep().expect_pass();

        assert!(merge(vec![base.clone(), base.clone()]).is_err());
        let mut other_field = rep_doc;
        other_field.field = Some("rational".to_string());
        assert!(merge(vec![base, other_field]).is_err());
    }

    #[test]
    fn schema_and_field_errors() {
        assert!(from_json("{\"schema\":\"mlie/2\"}").is_err());
        let mut doc = Document::empty();
        doc.field = Some("complex".to_string());
        assert!(resolve(&doc, None).is_err());

        // A field override replaces the document's mode.
        let mut doc = Document::empty();
        doc.field = Some("rational".to_string());
        let loaded = resolve(&doc, Some(FieldSpec::Generic)).unwrap();
        assert_eq!(loaded.field, FieldSpec::Generic);
    }
}
