use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::scalars::{FpScalar, PrimeField, Rational};
use crate::{Error, Result};

/// A polynomial variable. Each variable carries its weight; weight `w`
/// corresponds to cohomological degree `2w`.
///
/// * `E(w)`: the Euler class of a `2w`-dimensional bundle, weight `w`.
/// * `P(i)`: Pontryagin class `p_i`, weight `2i`.
/// * `X(i)`: L-class coordinate `x_i`, weight `2i`.
/// * `A(j)`: Chern root `a_j`, weight 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    E(u32),
    P(u32),
    X(u32),
    A(u32),
}

impl Var {
    pub fn weight(&self) -> u32 {
        match *self {
            Var::E(w) => w,
            Var::P(i) | Var::X(i) => 2 * i,
            Var::A(_) => 1,
        }
    }

    // Most significant first: e, then x and p by descending index, then a by
    // ascending index.
    fn key(&self) -> (u8, i64) {
        match *self {
            Var::E(w) => (0, w as i64),
            Var::X(i) => (1, -(i as i64)),
            Var::P(i) => (2, -(i as i64)),
            Var::A(j) => (3, j as i64),
        }
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::E(_) => write!(f, "e"),
            Var::P(i) => write!(f, "p{i}"),
            Var::X(i) => write!(f, "x{i}"),
            Var::A(j) => write!(f, "a{j}"),
        }
    }
}

/// A monomial: variables in significance order with positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, exp: u32) -> Monomial {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, exp)])
        }
    }

    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Monomial {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_default() += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|(v, e)| v.weight() * e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |&(_, e)| e)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, o: &Monomial) -> Monomial {
        Monomial::from_pairs(self.0.iter().chain(o.0.iter()).copied())
    }

    /// Graded lexicographic comparison: weight first, then exponents in
    /// variable significance order.
    pub fn grlex_cmp(&self, o: &Monomial) -> Ordering {
        self.weight().cmp(&o.weight()).then_with(|| {
            let (mut i, mut j) = (0, 0);
            loop {
                match (self.0.get(i), o.0.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(&eb);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial over the rationals with weighted variables.
///
/// The variable table always contains every variable that occurs; it may
/// contain more (for instance after multiplying by zero). Equality compares
/// the terms only.
#[derive(Clone, Debug, Default)]
pub struct GradedPolynomial {
    vars: BTreeSet<Var>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for GradedPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for GradedPolynomial {}

impl GradedPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v, 1), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.vars.extend(m.factors().iter().map(|&(v, _)| v));
        p.add_term(m, c);
        p
    }

    /// Adds variables to the table without changing the polynomial.
    pub fn with_variables<I: IntoIterator<Item = Var>>(mut self, vars: I) -> Self {
        self.vars.extend(vars);
        self
    }

    /// The same polynomial with its table reduced to the given variables
    /// plus those actually used.
    pub fn restricted_to<I: IntoIterator<Item = Var>>(mut self, vars: I) -> Self {
        self.vars = self.used_variables();
        self.vars.extend(vars);
        self
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        self.vars.extend(m.factors().iter().map(|&(v, _)| v));
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn variables(&self) -> &BTreeSet<Var> {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms in canonical (descending graded lexicographic) order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.grlex_cmp(a.0));
        v
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The common weight of all terms, or `None` if the polynomial is zero
    /// or not homogeneous.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::weight);
        let w = it.next()?;
        it.all(|x| x == w).then_some(w)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_weight().is_some()
    }

    /// Largest index `i` with `p_i` (resp. `x_i`) occurring; 0 if none.
    pub fn max_pontryagin_index(&self) -> u32 {
        self.used_variables()
            .iter()
            .filter_map(|v| match v {
                Var::P(i) | Var::X(i) => Some(*i),
                _ => None,
            })
            .max()
            .unwrap_or(0)
    }

    /// Variables occurring with nonzero exponent.
    pub fn used_variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(v, _)| v))
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one().with_variables(self.vars.iter().copied());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Ring homomorphism sending each assigned variable to its image and
    /// fixing the rest. Every assigned variable must be in the table.
    pub fn substitute(&self, assignment: &BTreeMap<Var, GradedPolynomial>) -> Result<Self> {
        if let Some(v) = assignment.keys().find(|v| !self.vars.contains(v)) {
            return Err(Error::UnknownVariable(v.to_string()));
        }
        let mut out = Self::zero().with_variables(self.vars.iter().filter(|v| !assignment.contains_key(v)).copied());
        for img in assignment.values() {
            out.vars.extend(img.vars.iter().copied());
        }
        let mut powers: BTreeMap<(Var, u32), GradedPolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            for &(v, e) in m.factors() {
                match assignment.get(&v) {
                    Some(img) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| img.pow(e));
                        term = &term * &*pw;
                    }
                    None => term = &term * &Self::monomial(Monomial::var(v, e), Rational::one()),
                }
                if term.is_zero() {
                    break;
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// [`substitute`](Self::substitute), additionally requiring every image to
    /// be homogeneous of the weight of the variable it replaces.
    pub fn substitute_graded(&self, assignment: &BTreeMap<Var, GradedPolynomial>) -> Result<Self> {
        for (v, img) in assignment {
            if img.is_zero() {
                continue;
            }
            match img.homogeneous_weight() {
                Some(w) if w == v.weight() => {}
                found => {
                    return Err(Error::WeightMismatch {
                        var: v.to_string(),
                        expected: v.weight(),
                        found: found.map_or("mixed weights".into(), |w| w.to_string()),
                    })
                }
            }
        }
        self.substitute(assignment)
    }

    pub fn evaluate(&self, point: &BTreeMap<Var, Rational>) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.factors() {
                let x = point
                    .get(&v)
                    .ok_or_else(|| Error::Domain(format!("no value for variable {v}")))?;
                t *= num_traits::pow(x.clone(), e as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Evaluation in `F_p`; coefficient denominators must be prime to `p`.
    pub fn evaluate_mod(&self, field: &PrimeField, point: &BTreeMap<Var, FpScalar>) -> Result<FpScalar> {
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = field.from_rational(c)?;
            for &(v, e) in m.factors() {
                let x = point
                    .get(&v)
                    .ok_or_else(|| Error::Domain(format!("no value for variable {v}")))?;
                t = t * x.pow(e as u64);
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Largest prime appearing in any coefficient denominator (1 if none).
    pub fn largest_denominator_prime(&self) -> Result<u64> {
        let mut best = 1;
        for c in self.terms.values() {
            best = best.max(crate::scalars::largest_prime_factor(&Rational::from_integer(
                c.denom().clone(),
            ))?);
        }
        Ok(best)
    }
}

impl fmt::Display for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a GradedPolynomial> for &'a GradedPolynomial {
    type Output = GradedPolynomial;
    fn add(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = self.clone();
        out.vars.extend(rhs.vars.iter().copied());
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a GradedPolynomial> for &'a GradedPolynomial {
    type Output = GradedPolynomial;
    fn sub(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn neg(self) -> GradedPolynomial {
        GradedPolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a GradedPolynomial> for &'a GradedPolynomial {
    type Output = GradedPolynomial;
    fn mul(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = GradedPolynomial::zero().with_variables(self.vars.iter().chain(rhs.vars.iter()).copied());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for GradedPolynomial {
            type Output = GradedPolynomial;
            fn $method(self, rhs: GradedPolynomial) -> GradedPolynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for GradedPolynomial {
    type Output = GradedPolynomial;
    fn neg(self) -> GradedPolynomial {
        -&self
    }
}
