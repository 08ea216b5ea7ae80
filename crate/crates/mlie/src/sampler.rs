//! Deterministic pseudo-random streams of small graded algebras for
//! property testing.
//!
//! Every emitted multiplication table is associative and graded by
//! construction (nilpotent tables, twisted group algebras, truncated power
//! algebras, and flattened path algebras, optionally rescaled by a diagonal
//! change of basis), so identities can be exercised on arbitrary instances
//! without rejection filtering. Braidings are drawn from the full set of
//! bicharacters on the group with values in `Q(zeta_12)`, biased so that
//! skew-symmetric and non-skew instances both appear.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::{GradedAlgebra, StructureTable};
use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::grading::{Bicharacter, GroupSpec};
use crate::quiver::Quiver;

const FIELD: FieldSpec = FieldSpec::Cyclotomic(12);

/// One drawn instance: the algebra together with how its braiding was
/// sampled.
#[derive(Clone, Debug)]
pub struct SampledInstance {
    pub algebra: GradedAlgebra,
    /// Which construction produced the table.
    pub family: &'static str,
    /// Whether the braiding was drawn skew-symmetric.
    pub skew: bool,
}

/// A seeded stream of sampled instances. The same seed yields the same
/// stream.
pub struct Sampler {
    rng: StdRng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: StdRng::seed_from_u64(seed) }
    }

    /// Draws the next instance. Dimensions stay at most 6.
    pub fn next_instance(&mut self) -> Result<SampledInstance, Error> {
        let group = self.group();
        let (braiding, skew) = self.bicharacter(&group)?;
        let (family, algebra) = match self.rng.gen_range(0..4u8) {
            0 => ("zero", self.zero_algebra(&group, &braiding)?),
            1 => ("group", self.twisted_group_algebra(&group, &braiding)?),
            2 => ("power", self.truncated_power_algebra(&group, &braiding)?),
            _ => ("path", self.path_algebra(&group, &braiding)?),
        };
        Ok(SampledInstance { algebra, family, skew })
    }

    fn group(&mut self) -> GroupSpec {
        let orders: &[&[u64]] = &[&[2], &[3], &[2, 2]];
        GroupSpec::new(orders[self.rng.gen_range(0..3)].to_vec()).expect("fixed orders are valid")
    }

    /// A random bicharacter: entry `(i, j)` is a root of unity of order
    /// dividing both factor orders. A fair coin decides between forcing
    /// skew symmetry and sampling the entries freely.
    fn bicharacter(&mut self, group: &GroupSpec) -> Result<(Bicharacter, bool), Error> {
        let zeta = FieldElement::generator(FIELD).expect("cyclotomic field has a generator");
        let k = group.rank();
        let force_skew = self.rng.gen_bool(0.5);
        let mut values = vec![vec![FieldElement::one(FIELD); k]; k];
        for i in 0..k {
            for j in 0..k {
                let d = gcd(group.orders()[i], group.orders()[j]);
                if force_skew {
                    if j < i {
                        values[i][j] = values[j][i].inv()?;
                        continue;
                    }
                    if j == i && d % 2 != 0 {
                        // Only the trivial diagonal value squares to one.
                        continue;
                    }
                }
                let d = if force_skew && j == i { 2 } else { d };
                let e = self.rng.gen_range(0..d);
                values[i][j] = zeta.pow((12 / d * e) as i128)?;
            }
        }
        let r = Bicharacter::new(group.clone(), FIELD, values)?;
        let skew = r.is_skew_symmetric().pass;
        debug_assert!(!force_skew || skew);
        Ok((r, skew))
    }

    fn scalar(&mut self) -> FieldElement {
        match self.rng.gen_range(0..5u8) {
            0 => FieldElement::one(FIELD),
            1 => FieldElement::from_int(FIELD, -1),
            2 => FieldElement::from_int(FIELD, 2),
            3 => FieldElement::from_ratio(FIELD, 1, 2).expect("nonzero denominator"),
            _ => FieldElement::generator(FIELD).expect("cyclotomic field has a generator"),
        }
    }

    fn degrees(&mut self, group: &GroupSpec, n: usize) -> Result<Vec<crate::grading::GroupElement>, Error> {
        let all = group.enumerate()?;
        Ok((0..n).map(|_| all[self.rng.gen_range(0..all.len())].clone()).collect())
    }

    /// Rescales basis vector `k` by `d_k`: structure constants pick up
    /// `d_i d_j / d_k`, preserving associativity and the grading. Entry 0
    /// is left alone so a unit at position 0 survives.
    fn rescale(&mut self, table: &mut StructureTable, dim: usize) -> Result<(), Error> {
        let mut d = vec![FieldElement::one(FIELD)];
        for _ in 1..dim {
            d.push(self.scalar());
        }
        for (&(i, j), terms) in table.iter_mut() {
            for (k, c) in terms.iter_mut() {
                *c = &(&(&*c * &d[i]) * &d[j]) * &d[*k].inv()?;
            }
        }
        Ok(())
    }

    /// All products zero: associative and graded for any degree
    /// assignment.
    fn zero_algebra(&mut self, group: &GroupSpec, braiding: &Bicharacter) -> Result<GradedAlgebra, Error> {
        let n = self.rng.gen_range(1..=6);
        let deg = self.degrees(group, n)?;
        let names = (0..n).map(|i| format!("z{i}")).collect();
        GradedAlgebra::new(FIELD, group.clone(), braiding.clone(), names, deg, StructureTable::new(), None)
    }

    /// Basis `u_g` for all `g` with `u_g u_h = (b_g b_h / b_(g+h)) u_(g+h)`
    /// for random nonzero `b` with `b_0 = 1`: a coboundary twist of the
    /// group algebra, associative with unit `u_0`.
    fn twisted_group_algebra(&mut self, group: &GroupSpec, braiding: &Bicharacter) -> Result<GradedAlgebra, Error> {
        let elements = group.enumerate()?;
        let b: Vec<FieldElement> = std::iter::once(FieldElement::one(FIELD))
            .chain((1..elements.len()).map(|_| self.scalar()))
            .collect();
        let index_of = |g: &crate::grading::GroupElement| {
            elements.iter().position(|h| h == g).expect("sum stays in the group")
        };
        let mut sc = StructureTable::new();
        for (i, g) in elements.iter().enumerate() {
            for (j, h) in elements.iter().enumerate() {
                let k = index_of(&group.add(g, h));
                let c = &(&b[i] * &b[j]) * &b[k].inv()?;
                sc.insert((i, j), vec![(k, c)]);
            }
        }
        let names = elements
            .iter()
            .map(|g| {
                let parts: Vec<String> = g.coords().iter().map(i64::to_string).collect();
                format!("u{}", parts.join("_"))
            })
            .collect();
        GradedAlgebra::new(FIELD, group.clone(), braiding.clone(), names, elements.clone(), sc, Some(0))
    }

    /// `x^n = 0` with a random degree for `x`, diagonally rescaled.
    fn truncated_power_algebra(&mut self, group: &GroupSpec, braiding: &Bicharacter) -> Result<GradedAlgebra, Error> {
        let n = self.rng.gen_range(2..=6usize);
        let all = group.enumerate()?;
        let x_deg = all[self.rng.gen_range(0..all.len())].clone();
        let mut deg = vec![group.zero()];
        for k in 1..n {
            deg.push(group.add(&deg[k - 1], &x_deg));
        }
        let mut sc = StructureTable::new();
        for i in 0..n {
            for j in 0..n {
                if i + j < n {
                    sc.insert((i, j), vec![(i + j, FieldElement::one(FIELD))]);
                }
            }
        }
        self.rescale(&mut sc, n)?;
        let names = (0..n).map(|k| format!("p{k}")).collect();
        GradedAlgebra::new(FIELD, group.clone(), braiding.clone(), names, deg, sc, Some(0))
    }

    /// The flattened path algebra of a small random quiver, truncated at a
    /// random length.
    fn path_algebra(&mut self, group: &GroupSpec, braiding: &Bicharacter) -> Result<GradedAlgebra, Error> {
        let all = group.enumerate()?;
        for _ in 0..8 {
            let nv = self.rng.gen_range(1..=all.len().min(3));
            let mut labels = all.clone();
            for i in (1..labels.len()).rev() {
                labels.swap(i, self.rng.gen_range(0..=i));
            }
            labels.truncate(nv);
            let na = self.rng.gen_range(0..=3usize);
            let arrows = (0..na)
                .map(|k| {
                    (
                        format!("a{k}"),
                        labels[self.rng.gen_range(0..nv)].clone(),
                        labels[self.rng.gen_range(0..nv)].clone(),
                    )
                })
                .collect();
            let cap = self.rng.gen_range(1..=2usize);
            let quiver = Quiver::new(group.clone(), labels, arrows)?;
            let alg = quiver.path_algebra(FIELD, Some(cap))?;
            if alg.dim() <= 6 {
                return alg.to_graded(braiding);
            }
        }
        // Dense draws kept overflowing the size budget; fall back.
        self.zero_algebra(group, braiding)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}
