//! Pass/fail verdicts with counterexample witnesses.
//!
//! Every `check_*` operation walks its tuples in lexicographic basis order
//! and reports the first failure it meets, so reports are deterministic for
//! a given input.

use std::fmt;

use crate::field::FieldElement;

/// The nonzero value certifying a failed check.
#[derive(Clone, Debug, PartialEq)]
pub enum Defect {
    /// A scalar obstruction.
    Scalar(FieldElement),
    /// An element, given as coefficients over named basis vectors.
    Vector(Vec<(String, FieldElement)>),
    /// An operator defect, as a dense matrix.
    Matrix(Vec<Vec<FieldElement>>),
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::Scalar(c) => write!(f, "{c}"),
            Defect::Vector(terms) => {
                if terms.is_empty() {
                    return write!(f, "0");
                }
                for (i, (name, c)) in terms.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "({c})*{name}")?;
                }
                Ok(())
            }
            Defect::Matrix(rows) => {
                write!(f, "[")?;
                for (i, row) in rows.iter().enumerate() {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    for (j, c) in row.iter().enumerate() {
                        if j > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{c}")?;
                    }
                }
                write!(f, "]")
            }
        }
    }
}

/// The first failing tuple of a check: which basis entries broke the
/// identity and by how much.
#[derive(Clone, Debug)]
pub struct Witness {
    /// Positions of the offending basis entries (check-specific arity).
    pub indices: Vec<usize>,
    /// Their display names, parallel to `indices`.
    pub labels: Vec<String>,
    /// The nonzero defect.
    pub defect: Defect,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) defect {}", self.labels.join(","), self.defect)
    }
}

/// Outcome of a single structural check.
#[derive(Clone, Debug)]
pub struct CheckReport {
    /// Short stable name of the check, e.g. `"bas"` or `"assoc"`.
    pub name: &'static str,
    pub pass: bool,
    /// Populated exactly when `pass` is false.
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn pass(name: &'static str) -> Self {
        CheckReport { name, pass: true, witness: None }
    }

    pub fn fail(name: &'static str, witness: Witness) -> Self {
        CheckReport { name, pass: false, witness: Some(witness) }
    }

    /// Panics with the witness if the check failed; handy in tests.
    pub fn expect_pass(&self) {
        if !self.pass {
            panic!(
                "check {} failed: {}",
                self.name,
                self.witness.as_ref().map(|w| w.to_string()).unwrap_or_default()
            );
        }
    }

    /// Panics if the check passed; returns the witness otherwise.
    pub fn expect_fail(&self) -> &Witness {
        if self.pass {
            panic!("check {} unexpectedly passed", self.name);
        }
        self.witness.as_ref().expect("failing check carries a witness")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.pass, &self.witness) {
            (true, _) => write!(f, "{}: pass", self.name),
            (false, Some(w)) => write!(f, "{}: FAIL at {}", self.name, w),
            (false, None) => write!(f, "{}: FAIL", self.name),
        }
    }
}
