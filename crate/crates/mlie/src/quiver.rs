//! Path algebras of finite directed multigraphs.
//!
//! Vertices are labeled by group elements; block `(i, j)` of the resulting
//! generalized matrix algebra has basis all directed paths from vertex `i`
//! to vertex `j`, with every vertex contributing a trivial path acting as a
//! local identity. Multiplication is concatenation. Cyclic quivers have
//! infinitely many paths, so they require a maximum path length; the
//! truncation quotients by the ideal of longer paths and stays associative.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::gm::{CompTable, GmAlgebra};
use crate::grading::{GroupElement, GroupSpec};

#[derive(Clone, Debug)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug)]
pub struct Quiver {
    group: GroupSpec,
    vertices: Vec<GroupElement>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex labels and `(name, source, target)`
    /// arrow triples referring to those labels. Multi-arrows are allowed
    /// and distinguished by name; names must be unique, without whitespace
    /// or `*` (reserved for path names), and must not start with the
    /// trivial-path prefix `e_`.
    pub fn new(
        group: GroupSpec,
        vertices: Vec<GroupElement>,
        arrows: Vec<(String, GroupElement, GroupElement)>,
    ) -> Result<Self, Error> {
        if vertices.is_empty() {
            return Err(Error::invalid("quiver", "no vertices"));
        }
        for v in &vertices {
            if v.coords().len() != group.rank() {
                return Err(Error::invalid("quiver", "vertex label has wrong coordinate count"));
            }
        }
        {
            let mut sorted = vertices.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != vertices.len() {
                return Err(Error::invalid("quiver", "duplicate vertex labels"));
            }
        }
        let mut resolved = Vec::with_capacity(arrows.len());
        let mut names: Vec<&String> = Vec::new();
        for (name, src, tgt) in &arrows {
            if name.is_empty() || name.chars().any(char::is_whitespace) || name.contains('*') {
                return Err(Error::invalid(
                    "quiver",
                    format!("arrow name {name:?} must be nonempty without whitespace or '*'"),
                ));
            }
            if name.starts_with("e_") {
                return Err(Error::invalid(
                    "quiver",
                    format!("arrow name {name:?} collides with the trivial-path prefix e_"),
                ));
            }
            names.push(name);
            let source = vertices
                .iter()
                .position(|v| v == src)
                .ok_or_else(|| Error::invalid("quiver", format!("arrow {name} has undeclared source {src}")))?;
            let target = vertices
                .iter()
                .position(|v| v == tgt)
                .ok_or_else(|| Error::invalid("quiver", format!("arrow {name} has undeclared target {tgt}")))?;
            resolved.push(Arrow { name: name.clone(), source, target });
        }
        {
            let mut sorted = names.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != names.len() {
                return Err(Error::invalid("quiver", "duplicate arrow names"));
            }
        }
        Ok(Quiver { group, vertices, arrows: resolved })
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn vertices(&self) -> &[GroupElement] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// True when no directed cycle exists (loops included).
    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm on the vertex set; multi-arrows count separately
        // but do not change the verdict.
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for a in &self.arrows {
                if a.source == v {
                    indeg[a.target] -= 1;
                    if indeg[a.target] == 0 {
                        queue.push(a.target);
                    }
                }
            }
        }
        seen == n
    }

    /// All paths from vertex `i` to vertex `j` as arrow-index sequences,
    /// sorted lexicographically by arrow-name sequence. The trivial path
    /// (the empty sequence) appears exactly when `i == j`. Cyclic quivers
    /// require `max_len`.
    pub fn enumerate_paths(
        &self,
        i: usize,
        j: usize,
        max_len: Option<usize>,
    ) -> Result<Vec<Vec<usize>>, Error> {
        if i >= self.vertices.len() || j >= self.vertices.len() {
            return Err(Error::precondition("vertex index out of range".to_string()));
        }
        let cap = self.path_cap(max_len)?;
        Ok(self.paths_up_to(i, j, cap))
    }

    fn paths_up_to(&self, i: usize, j: usize, cap: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        self.collect_paths(i, j, cap, &mut stack, &mut out);
        out.sort_by(|a, b| {
            let na: Vec<&str> = a.iter().map(|&k| self.arrows[k].name.as_str()).collect();
            let nb: Vec<&str> = b.iter().map(|&k| self.arrows[k].name.as_str()).collect();
            na.cmp(&nb)
        });
        out
    }

    fn path_cap(&self, max_len: Option<usize>) -> Result<usize, Error> {
        match max_len {
            Some(0) => Err(Error::precondition("max_len must be positive".to_string())),
            Some(m) => Ok(m),
            None if self.is_acyclic() => Ok(self.vertices.len().saturating_sub(1)),
            None => Err(Error::precondition(
                "cyclic quiver has infinitely many paths; supply max_len".to_string(),
            )),
        }
    }

    fn collect_paths(
        &self,
        at: usize,
        goal: usize,
        remaining: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if at == goal {
            out.push(stack.clone());
        }
        if remaining == 0 {
            return;
        }
        for (k, a) in self.arrows.iter().enumerate() {
            if a.source == at {
                stack.push(k);
                self.collect_paths(a.target, goal, remaining - 1, stack, out);
                stack.pop();
            }
        }
    }

    fn path_name(&self, i: usize, path: &[usize]) -> String {
        if path.is_empty() {
            format!("e_{}", self.vertices[i])
        } else {
            path.iter().map(|&k| self.arrows[k].name.as_str()).collect::<Vec<_>>().join("*")
        }
    }

    /// The path algebra as a generalized matrix algebra: block `(i, j)` has
    /// basis all paths `i -> j` (within `max_len` when given), and products
    /// concatenate, truncating overlong concatenations to zero.
    pub fn path_algebra(&self, field: FieldSpec, max_len: Option<usize>) -> Result<GmAlgebra, Error> {
        let cap = self.path_cap(max_len)?;
        let n = self.vertices.len();
        let mut blocks: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
        let mut paths: BTreeMap<(usize, usize), Vec<Vec<usize>>> = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                let ps = self.paths_up_to(i, j, cap);
                if ps.is_empty() {
                    continue;
                }
                blocks.insert((i, j), ps.iter().map(|p| self.path_name(i, p)).collect());
                paths.insert((i, j), ps);
            }
        }
        let truncating = max_len.is_some();
        let mut comp = CompTable::new();
        for (&(i, j), left) in &paths {
            for (&(j2, l), right) in &paths {
                if j2 != j {
                    continue;
                }
                for (p, lp) in left.iter().enumerate() {
                    for (q, rq) in right.iter().enumerate() {
                        let mut cat = lp.clone();
                        cat.extend_from_slice(rq);
                        if truncating && cat.len() > cap {
                            continue;
                        }
                        let target = &paths[&(i, l)];
                        let r = target
                            .iter()
                            .position(|t| *t == cat)
                            .expect("concatenation of retained paths is a retained path");
                        comp.insert((i, j, l, p, q), vec![(r, FieldElement::one(field))]);
                    }
                }
            }
        }
        GmAlgebra::new(field, self.group.clone(), self.vertices.clone(), blocks, comp)
    }
}
