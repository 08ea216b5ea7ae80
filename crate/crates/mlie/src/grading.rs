//! Finitely generated abelian grading groups and bicharacters on them.
//!
//! A group is a product of factors `Z` (order 0 in the spec list) and
//! `Z_n` (order `n >= 2`). A bicharacter `r: G x G -> F*` is stored by its
//! values on generator pairs and evaluated by biadditivity.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::field::{FieldElement, FieldSpec};
use crate::report::{CheckReport, Defect, Witness};

/// Shape of a finitely generated abelian group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    orders: Vec<u64>,
}

/// An element, as one coordinate per factor. Torsion coordinates are kept
/// reduced to `0..n`, so equality is coordinate comparison.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    coords: Vec<i64>,
}

impl GroupSpec {
    /// `orders[i] == 0` means a `Z` factor, `orders[i] >= 2` a `Z_n` factor.
    pub fn new(orders: Vec<u64>) -> Result<Self, Error> {
        if let Some(o) = orders.iter().find(|o| **o == 1) {
            return Err(Error::invalid("group", format!("factor order {o} (use 0 for Z, n >= 2 for Z_n)")));
        }
        Ok(GroupSpec { orders })
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { coords: vec![0; self.orders.len()] }
    }

    /// Builds an element, reducing torsion coordinates.
    pub fn element(&self, coords: Vec<i64>) -> Result<GroupElement, Error> {
        if coords.len() != self.orders.len() {
            return Err(Error::invalid(
                "group element",
                format!("expected {} coordinates, got {}", self.orders.len(), coords.len()),
            ));
        }
        let mut e = GroupElement { coords };
        self.reduce(&mut e);
        Ok(e)
    }

    pub fn generator(&self, i: usize) -> GroupElement {
        assert!(i < self.orders.len());
        let mut coords = vec![0; self.orders.len()];
        coords[i] = 1;
        GroupElement { coords }
    }

    fn reduce(&self, e: &mut GroupElement) {
        for (c, o) in e.coords.iter_mut().zip(&self.orders) {
            if *o != 0 {
                *c = c.rem_euclid(*o as i64);
            }
        }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        assert_eq!(a.coords.len(), self.orders.len());
        assert_eq!(b.coords.len(), self.orders.len());
        let mut e = GroupElement {
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect(),
        };
        self.reduce(&mut e);
        e
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        let mut e = GroupElement { coords: a.coords.iter().map(|x| -x).collect() };
        self.reduce(&mut e);
        e
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    /// All elements of the group; only available when every factor is finite.
    pub fn enumerate(&self) -> Result<Vec<GroupElement>, Error> {
        if self.orders.iter().any(|o| *o == 0) {
            return Err(Error::precondition("cannot enumerate an infinite group"));
        }
        let mut out = vec![GroupElement { coords: Vec::new() }];
        for &o in &self.orders {
            let mut next = Vec::with_capacity(out.len() * o as usize);
            for prefix in &out {
                for c in 0..o as i64 {
                    let mut coords = prefix.coords.clone();
                    coords.push(c);
                    next.push(GroupElement { coords });
                }
            }
            out = next;
        }
        Ok(out)
    }
}

impl GroupElement {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.coords.len() {
            0 => write!(f, "0"),
            1 => write!(f, "{}", self.coords[0]),
            _ => {
                write!(f, "(")?;
                for (i, c) in self.coords.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// A bicharacter `r: G x G -> F*`, determined by its values on generator
/// pairs and extended biadditively:
/// `r(g, h) = prod_{i,j} B[i][j]^(g_i * h_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bicharacter {
    group: GroupSpec,
    field: FieldSpec,
    values: Vec<Vec<FieldElement>>,
}

impl Bicharacter {
    /// Validates generator values without constructing: every value must be
    /// nonzero and of the right field, and for each finite factor `i` of
    /// order `n`, `B[i][j]^n = 1` and `B[j][i]^n = 1` for all `j` (otherwise
    /// biadditive extension is not well defined).
    pub fn validate(
        group: &GroupSpec,
        field: FieldSpec,
        values: &[Vec<FieldElement>],
    ) -> Result<CheckReport, Error> {
        let k = group.rank();
        if values.len() != k || values.iter().any(|row| row.len() != k) {
            return Err(Error::invalid(
                "bicharacter",
                format!("expected a {k}x{k} generator value matrix"),
            ));
        }
        for row in values {
            for v in row {
                if v.spec() != field {
                    return Err(Error::FieldMismatch(v.spec(), field));
                }
            }
        }
        let witness = |i: usize, j: usize, defect: FieldElement| Witness {
            indices: vec![i, j],
            labels: vec![group.generator(i).to_string(), group.generator(j).to_string()],
            defect: Defect::Scalar(defect),
        };
        for (i, row) in values.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if v.is_zero() {
                    return Ok(CheckReport::fail(
                        "bicharacter",
                        witness(i, j, FieldElement::zero(field)),
                    ));
                }
            }
        }
        let one = FieldElement::one(field);
        for i in 0..k {
            let n = group.orders()[i];
            if n == 0 {
                continue;
            }
            for j in 0..k {
                for (a, b) in [(i, j), (j, i)] {
                    let p = values[a][b].pow(n as i128)?;
                    if p != one {
                        return Ok(CheckReport::fail("bicharacter", witness(a, b, &p - &one)));
                    }
                }
            }
        }
        Ok(CheckReport::pass("bicharacter"))
    }

    pub fn new(
        group: GroupSpec,
        field: FieldSpec,
        values: Vec<Vec<FieldElement>>,
    ) -> Result<Self, Error> {
        let report = Self::validate(&group, field, &values)?;
        if let Some(w) = report.witness {
            return Err(Error::invalid("bicharacter", format!("generator values at {w}")));
        }
        Ok(Bicharacter { group, field, values })
    }

    /// The trivial bicharacter `r == 1`.
    pub fn trivial(group: GroupSpec, field: FieldSpec) -> Self {
        let k = group.rank();
        let values = vec![vec![FieldElement::one(field); k]; k];
        Bicharacter { group, field, values }
    }

    /// The sign bicharacter `r(g, h) = (-1)^(sum g_i * sum h_j)`; requires
    /// every finite factor to have even order.
    pub fn sign(group: GroupSpec, field: FieldSpec) -> Result<Self, Error> {
        let k = group.rank();
        let minus_one = FieldElement::from_int(field, -1);
        let values = vec![vec![minus_one; k]; k];
        Bicharacter::new(group, field, values)
    }

    /// On a single cyclic factor `Z_n` over `Q(zeta_n)`:
    /// `r(k, m) = zeta_n^(k*m)`.
    pub fn cyclic_root(n: u32) -> Result<Self, Error> {
        let group = GroupSpec::new(vec![n as u64])?;
        let field = FieldSpec::Cyclotomic(n);
        let zeta = FieldElement::generator(field).expect("cyclotomic generator");
        Bicharacter::new(group, field, vec![vec![zeta]])
    }

    /// On the single infinite factor `Z` over `Q(t)`: `r(k, m) = t^(k*m)`.
    pub fn generic_root() -> Result<Self, Error> {
        let group = GroupSpec::new(vec![0])?;
        let field = FieldSpec::Generic;
        let t = FieldElement::generator(field).expect("generic generator");
        Bicharacter::new(group, field, vec![vec![t]])
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn generator_values(&self) -> &[Vec<FieldElement>] {
        &self.values
    }

    /// `r(g, h)` by biadditive extension.
    pub fn eval(&self, g: &GroupElement, h: &GroupElement) -> FieldElement {
        assert_eq!(g.coords().len(), self.group.rank());
        assert_eq!(h.coords().len(), self.group.rank());
        let mut acc = FieldElement::one(self.field);
        for (i, gi) in g.coords().iter().enumerate() {
            if *gi == 0 {
                continue;
            }
            for (j, hj) in h.coords().iter().enumerate() {
                if *hj == 0 {
                    continue;
                }
                let e = i128::from(*gi) * i128::from(*hj);
                let p = self.values[i][j].pow(e).expect("bicharacter values are nonzero");
                acc = &acc * &p;
            }
        }
        acc
    }

    /// Checks `r(g, h) * r(h, g) = 1` on all generator pairs, which by
    /// biadditivity settles it everywhere.
    pub fn is_skew_symmetric(&self) -> CheckReport {
        let one = FieldElement::one(self.field);
        let k = self.group.rank();
        for i in 0..k {
            for j in 0..k {
                let p = &self.values[i][j] * &self.values[j][i];
                if p != one {
                    return CheckReport::fail(
                        "skew-symmetric",
                        Witness {
                            indices: vec![i, j],
                            labels: vec![
                                self.group.generator(i).to_string(),
                                self.group.generator(j).to_string(),
                            ],
                            defect: Defect::Scalar(&p - &one),
                        },
                    );
                }
            }
        }
        CheckReport::pass("skew-symmetric")
    }

    /// Parity of a degree under a skew-symmetric bicharacter: `false` when
    /// `r(g, g) = 1`, `true` when `r(g, g) = -1`. Anything else is an error.
    pub fn parity(&self, g: &GroupElement) -> Result<bool, Error> {
        let v = self.eval(g, g);
        if v == FieldElement::one(self.field) {
            Ok(false)
        } else if v == FieldElement::from_int(self.field, -1) {
            Ok(true)
        } else {
            Err(Error::precondition(format!(
                "r({g}, {g}) = {v} is neither 1 nor -1; degree {g} has no parity"
            )))
        }
    }

    /// Splits a set of degrees into the even part (`r(g,g) = 1`) and the odd
    /// part (`r(g,g) = -1`).
    pub fn super_split(
        &self,
        degrees: &BTreeSet<GroupElement>,
    ) -> Result<(BTreeSet<GroupElement>, BTreeSet<GroupElement>), Error> {
        let mut even = BTreeSet::new();
        let mut odd = BTreeSet::new();
        for g in degrees {
            if self.parity(g)? {
                odd.insert(g.clone());
            } else {
                even.insert(g.clone());
            }
        }
        Ok((even, odd))
    }

    /// The induced super bicharacter value: `-1` when both degrees are odd,
    /// `1` otherwise.
    pub fn super_value(&self, g: &GroupElement, h: &GroupElement) -> Result<FieldElement, Error> {
        Ok(if self.parity(g)? && self.parity(h)? {
            FieldElement::from_int(self.field, -1)
        } else {
            FieldElement::one(self.field)
        })
    }

    /// The induced super bicharacter as a bicharacter on the same group.
    ///
    /// For skew-symmetric `r` the parity map `g -> [r(g,g) = -1]` is additive
    /// mod 2, so taking generator values `(-1)^(parity(e_i) * parity(e_j))`
    /// extends to exactly `super_value` everywhere.
    pub fn super_quotient(&self) -> Result<Bicharacter, Error> {
        let k = self.group.rank();
        let mut values = vec![vec![FieldElement::one(self.field); k]; k];
        let parities: Vec<bool> = (0..k)
            .map(|i| self.parity(&self.group.generator(i)))
            .collect::<Result<_, _>>()?;
        for i in 0..k {
            for j in 0..k {
                if parities[i] && parities[j] {
                    values[i][j] = FieldElement::from_int(self.field, -1);
                }
            }
        }
        Bicharacter::new(self.group.clone(), self.field, values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z_n(n: u64) -> GroupSpec {
        GroupSpec::new(vec![n]).unwrap()
    }

    #[test]
    fn torsion_coordinates_reduce() {
        let g = z_n(3);
        let e = g.element(vec![-1]).unwrap();
        assert_eq!(e.coords(), &[2]);
        let sum = g.add(&g.element(vec![2]).unwrap(), &g.element(vec![2]).unwrap());
        assert_eq!(sum.coords(), &[1]);
        assert_eq!(g.neg(&g.element(vec![1]).unwrap()).coords(), &[2]);
        let free = GroupSpec::new(vec![0]).unwrap();
        assert_eq!(free.element(vec![-5]).unwrap().coords(), &[-5]);
    }

    #[test]
    fn rejects_order_one_factor() {
        assert!(GroupSpec::new(vec![1]).is_err());
        assert!(GroupSpec::new(vec![2, 0, 5]).is_ok());
    }

    #[test]
    fn cyclic_root_bicharacter_values() {
        let r = Bicharacter::cyclic_root(3).unwrap();
        let g = r.group().clone();
        let q = FieldElement::generator(FieldSpec::Cyclotomic(3)).unwrap();
        let e = |k: i64| g.element(vec![k]).unwrap();
        // r(2, 2) = q^4 = q in Q(zeta_3).
        assert_eq!(r.eval(&e(2), &e(2)), q);
        assert_eq!(r.eval(&e(0), &e(2)), FieldElement::one(r.field()));
        assert_eq!(r.eval(&e(1), &e(2)), q.pow(2).unwrap());
    }

    #[test]
    fn biadditivity_on_a_mixed_group() {
        let group = GroupSpec::new(vec![2, 0]).unwrap();
        let field = FieldSpec::Cyclotomic(4);
        let i = FieldElement::generator(field).unwrap();
        let m1 = FieldElement::from_int(field, -1);
        let one = FieldElement::one(field);
        let r = Bicharacter::new(
            group.clone(),
            field,
            vec![vec![m1, one.clone()], vec![one, i]],
        )
        .unwrap();
        let a = group.element(vec![1, 2]).unwrap();
        let b = group.element(vec![1, -1]).unwrap();
        let ab = group.add(&a, &b);
        for probe in [group.element(vec![1, 3]).unwrap(), group.element(vec![0, -2]).unwrap()] {
            let lhs = r.eval(&ab, &probe);
            let rhs = &r.eval(&a, &probe) * &r.eval(&b, &probe);
            assert_eq!(lhs, rhs);
            let lhs2 = r.eval(&probe, &ab);
            let rhs2 = &r.eval(&probe, &a) * &r.eval(&probe, &b);
            assert_eq!(lhs2, rhs2);
        }
    }

    #[test]
    fn validation_rejects_incompatible_torsion_values() {
        // zeta_3 on a Z_2 factor: zeta_3^2 != 1.
        let group = z_n(2);
        let field = FieldSpec::Cyclotomic(3);
        let zeta = FieldElement::generator(field).unwrap();
        let report = Bicharacter::validate(&group, field, &[vec![zeta]]).unwrap();
        assert!(!report.pass);
        let w = report.witness.unwrap();
        assert_eq!(w.indices, vec![0, 0]);
        assert!(Bicharacter::new(group, field, vec![vec![FieldElement::generator(field).unwrap()]]).is_err());
    }

    #[test]
    fn validation_rejects_zero_values() {
        let group = z_n(2);
        let field = FieldSpec::Rational;
        let report =
            Bicharacter::validate(&group, field, &[vec![FieldElement::zero(field)]]).unwrap();
        assert!(!report.pass);
    }

    #[test]
    fn skew_symmetry_verdicts() {
        let sign = Bicharacter::sign(z_n(2), FieldSpec::Rational).unwrap();
        sign.is_skew_symmetric().expect_pass();

        let root = Bicharacter::cyclic_root(3).unwrap();
        let report = root.is_skew_symmetric();
        assert!(!report.pass);
        let w = report.witness.unwrap();
        assert_eq!(w.indices, vec![0, 0]);
        assert_eq!(w.labels, vec!["1", "1"]);
    }

    #[test]
    fn super_split_on_z4() {
        let r = Bicharacter::sign(z_n(4), FieldSpec::Rational).unwrap();
        let group = r.group().clone();
        let degrees: BTreeSet<_> = group.enumerate().unwrap().into_iter().collect();
        let (even, odd) = r.super_split(&degrees).unwrap();
        let coords = |s: &BTreeSet<GroupElement>| -> Vec<i64> {
            s.iter().map(|e| e.coords()[0]).collect()
        };
        assert_eq!(coords(&even), vec![0, 2]);
        assert_eq!(coords(&odd), vec![1, 3]);
    }

    #[test]
    fn super_value_and_quotient_idempotence() {
        let r = Bicharacter::sign(z_n(4), FieldSpec::Rational).unwrap();
        let group = r.group().clone();
        let r0 = r.super_quotient().unwrap();
        let r00 = r0.super_quotient().unwrap();
        for g in group.enumerate().unwrap() {
            for h in group.enumerate().unwrap() {
                let direct = r.super_value(&g, &h).unwrap();
                assert_eq!(r0.eval(&g, &h), direct);
                assert_eq!(r00.eval(&g, &h), direct);
                assert_eq!(r0.super_value(&g, &h).unwrap(), direct);
            }
        }
    }

    #[test]
    fn parity_rejects_non_sign_values() {
        let r = Bicharacter::cyclic_root(3).unwrap();
        let g = r.group().element(vec![1]).unwrap();
        // r(1,1) = zeta_3 is neither 1 nor -1.
        assert!(r.parity(&g).is_err());
        assert!(r.parity(&r.group().zero()).is_ok());
    }

    #[test]
    fn trivial_group_edge_case() {
        let group = GroupSpec::new(vec![]).unwrap();
        let r = Bicharacter::trivial(group.clone(), FieldSpec::Rational);
        let z = group.zero();
        assert!(r.eval(&z, &z).is_one());
        r.is_skew_symmetric().expect_pass();
        assert_eq!(group.enumerate().unwrap().len(), 1);
    }
}
