//! Builders for the document corpus that ships in `fixtures/`: truncated
//! monomial algebras, the small quiver family, block-matrix instances with
//! their traces, transposes, and forms, and a regular representation
//! together with a deliberately broken mutation of it.

use mlie::doc::{self, Document};
use mlie::instances::{
    fan_quiver, gl11_z2, gl1111_z4, gl21_z2, gl2_trivial, gl_z3_dense, isolated_vertices_quiver,
    monomial_algebra_cyclotomic, monomial_algebra_generic, single_arrow_quiver, two_arrow_quiver,
    ClassicalInstance,
};
use mlie::rep::Representation;
use mlie::{Bicharacter, Error, FieldElement, Quiver};

fn monomial_doc(n: u32, generic: bool) -> Result<Document, Error> {
    let alg = if generic {
        monomial_algebra_generic(n)?
    } else {
        monomial_algebra_cyclotomic(n)?
    };
    Ok(doc::graded_to_document(&alg))
}

/// A quiver document carrying the braiding `r(k, m) = zeta_3^(k m)` on its
/// `Z_3` vertex group, so path algebras built from it can be flattened and
/// checked directly.
fn quiver_doc(q: &Quiver) -> Result<Document, Error> {
    let r = Bicharacter::cyclic_root(3)?;
    let mut d = doc::quiver_to_document(q, r.field());
    d.bicharacter = Some(
        r.generator_values()
            .iter()
            .map(|row| row.iter().map(FieldElement::to_string).collect())
            .collect(),
    );
    Ok(d)
}

/// A block-matrix instance as a single document: the algebra with its
/// braiding, quantum trace, transpose, and the identity form.
fn classical_doc(inst: &ClassicalInstance) -> Result<Document, Error> {
    let mut d = doc::gm_to_document(&inst.algebra, Some(&inst.braiding));
    d.trace = Some(doc::trace_section(&inst.trace()?));
    d.transpose = Some(doc::transpose_section(&inst.transpose()?));
    d.form = Some(doc::gm_element_terms(&inst.algebra, &inst.identity()));
    Ok(d)
}

fn regular_rep_doc(n: u32) -> Result<Document, Error> {
    let alg = monomial_algebra_cyclotomic(n)?;
    let rep = Representation::regular(&alg)?;
    let mut d = doc::graded_to_document(&alg);
    d.representation = Some(doc::representation_section(&rep));
    Ok(d)
}

/// The regular representation with one action entry knocked off its
/// graded position; representation checks must fail on it with a witness.
fn perturbed_rep_doc(n: u32) -> Result<Document, Error> {
    let mut d = regular_rep_doc(n)?;
    let rep = d.representation.as_mut().expect("built with a representation");
    let field = monomial_algebra_cyclotomic(n)?.field();
    let entry = &mut rep.matrices[1][2][1];
    let bumped = &FieldElement::parse(field, entry)? + &FieldElement::one(field);
    *entry = bumped.to_string();
    Ok(d)
}

/// Every fixture as `(file name, document)`, in the order they are
/// written.
pub fn all() -> Result<Vec<(String, Document)>, Error> {
    let mut out: Vec<(String, Document)> = Vec::new();
    for n in 3..=6 {
        out.push((format!("monomial_n{n}.json"), monomial_doc(n, false)?));
        out.push((format!("monomial_n{n}_generic.json"), monomial_doc(n, true)?));
    }
    for k in 1..=3 {
        out.push((
            format!("quiver_isolated_{k}.json"),
            quiver_doc(&isolated_vertices_quiver(k)?)?,
        ));
    }
    out.push(("quiver_single_arrow.json".to_string(), quiver_doc(&single_arrow_quiver()?)?));
    out.push(("quiver_two_arrows.json".to_string(), quiver_doc(&two_arrow_quiver()?)?));
    for n in 0..=4 {
        out.push((format!("quiver_fan_n{n}.json"), quiver_doc(&fan_quiver(n)?)?));
    }
    out.push(("gl11_z2.json".to_string(), classical_doc(&gl11_z2()?)?));
    out.push(("gl21_z2.json".to_string(), classical_doc(&gl21_z2()?)?));
    out.push(("gl111_z3.json".to_string(), classical_doc(&gl_z3_dense()?)?));
    out.push(("gl1111_z4.json".to_string(), classical_doc(&gl1111_z4()?)?));
    out.push(("gl2_trivial.json".to_string(), classical_doc(&gl2_trivial()?)?));
    out.push(("rep_regular_n3.json".to_string(), regular_rep_doc(3)?));
    out.push(("rep_perturbed_n3.json".to_string(), perturbed_rep_doc(3)?));
    Ok(out)
}
