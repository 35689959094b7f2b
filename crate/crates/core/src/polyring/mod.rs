//! Exact sparse multivariate polynomial arithmetic over the rationals,
//! with the content / primitive-part / resultant / discriminant toolbox
//! the projection and lifting phases consume.
//!
//! Polynomials are stored as a map from exponent vectors to nonzero
//! rational coefficients. The map's key order is pure lexicographic with
//! the greatest variable most significant, so the last entry is the
//! leading term under the lex order used by the Groebner machinery.
//! Canonical form (integer-content-free, positive leading coefficient
//! under graded-lex) is what sets and golden comparisons use.

mod fastgcd;
mod gcd;
mod resultant;
mod squarefree;

pub use fastgcd::{gcd_bivariate_int, gcd_univariate_int};
pub use gcd::{content_primpart, gcd, gcd_raw};
pub use resultant::{discriminant, resultant, resultant_auto};
pub use squarefree::{primitive_squarefree_factors, squarefree_basis, squarefree_part};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Index into the global variable ordering. Level 1 is the least variable.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Variable(usize);

impl Variable {
    pub fn from_index(index: usize) -> Self {
        Variable(index)
    }

    pub fn from_level(level: usize) -> Self {
        assert!(level >= 1, "variable levels are 1-based");
        Variable(level - 1)
    }

    /// 1-based position in the ordering (1 = least).
    pub fn level(self) -> usize {
        self.0 + 1
    }

    pub fn index(self) -> usize {
        self.0
    }
}

/// Declared variable names in ascending order (least variable first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarOrder {
    names: Vec<String>,
}

impl VarOrder {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Arc<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        Arc::new(VarOrder { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: Variable) -> &str {
        &self.names[v.index()]
    }

    pub fn lookup(&self, name: &str) -> Option<Variable> {
        self.names.iter().position(|n| n == name).map(Variable)
    }

    pub fn vars(&self) -> impl Iterator<Item = Variable> {
        (0..self.names.len()).map(Variable)
    }
}

/// Exponent vector. `Ord` is pure lex with the greatest variable most
/// significant, so a `BTreeMap`'s last key is the lex leading monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn var(nvars: usize, v: Variable) -> Self {
        let mut e = vec![0; nvars];
        e[v.index()] = 1;
        Monomial(e.into_boxed_slice())
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn deg(&self, v: Variable) -> u32 {
        self.0.get(v.index()).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let mut e = vec![0u32; n];
        for (i, item) in e.iter_mut().enumerate() {
            *item = self.0.get(i).copied().unwrap_or(0) + other.0.get(i).copied().unwrap_or(0);
        }
        Monomial(e.into_boxed_slice())
    }

    /// Exact monomial quotient, `None` when not divisible.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let n = self.0.len().max(other.0.len());
        let mut e = vec![0u32; n];
        for (i, item) in e.iter_mut().enumerate() {
            let a = self.0.get(i).copied().unwrap_or(0);
            let b = other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return None;
            }
            *item = a - b;
        }
        Some(Monomial(e.into_boxed_slice()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let mut e = vec![0u32; n];
        for (i, item) in e.iter_mut().enumerate() {
            *item = self
                .0
                .get(i)
                .copied()
                .unwrap_or(0)
                .max(other.0.get(i).copied().unwrap_or(0));
        }
        Monomial(e.into_boxed_slice())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        let n = self.0.len().max(other.0.len());
        (0..n).all(|i| {
            self.0.get(i).copied().unwrap_or(0) == 0 || other.0.get(i).copied().unwrap_or(0) == 0
        })
    }

    fn with_deg(&self, v: Variable, d: u32) -> Monomial {
        let mut e = self.0.to_vec();
        if e.len() <= v.index() {
            e.resize(v.index() + 1, 0);
        }
        e[v.index()] = d;
        Monomial(e.into_boxed_slice())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.0.len().max(other.0.len());
        for i in (0..n).rev() {
            let a = self.0.get(i).copied().unwrap_or(0);
            let b = other.0.get(i).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded-lexicographic comparison: total degree first, then lex.
pub fn cmp_grlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| a.cmp(b))
}

/// Sparse multivariate polynomial over the rationals.
///
/// Invariant: no stored zero coefficients; the zero polynomial is the
/// empty map. All monomials carry exactly `nvars` exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Polynomial::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, Rat::one())
    }

    pub fn int_const(nvars: usize, c: i64) -> Self {
        Polynomial::constant(nvars, rat_int(c))
    }

    pub fn variable(nvars: usize, v: Variable) -> Self {
        assert!(v.index() < nvars);
        let mut p = Polynomial::zero(nvars);
        p.terms.insert(Monomial::var(nvars, v), Rat::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.exps().len(), self.nvars);
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Degree in `v`; 0 for the zero polynomial.
    pub fn degree(&self, v: Variable) -> u32 {
        self.terms.keys().map(|m| m.deg(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// Greatest variable occurring with positive degree.
    pub fn mvar(&self) -> Option<Variable> {
        let mut best: Option<usize> = None;
        for m in self.terms.keys() {
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 && best.map_or(true, |b| i > b) {
                    best = Some(i);
                }
            }
        }
        best.map(Variable)
    }

    pub fn vars_present(&self) -> Vec<Variable> {
        let mut seen = vec![false; self.nvars];
        for m in self.terms.keys() {
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    seen[i] = true;
                }
            }
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| Variable(i))
            .collect()
    }

    /// Leading term under graded-lex.
    pub fn grlex_leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| cmp_grlex(a, b))
    }

    /// Leading term under pure lex (greatest variable most significant).
    pub fn lex_leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.nvars.max(other.nvars);
        let mut out = self.clone().pad_to(n);
        for (m, c) in other.terms.iter() {
            out.add_term(m.clone().padded(n), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let n = self.nvars.max(other.nvars);
        let mut out = Polynomial::zero(n);
        for (ma, ca) in self.terms.iter() {
            for (mb, cb) in other.terms.iter() {
                out.add_term(ma.mul(mb).padded(n), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Exact power by a non-negative integer exponent.
    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self, v: Variable) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in self.terms.iter() {
            let d = m.deg(v);
            if d > 0 {
                out.add_term(m.with_deg(v, d - 1), c * rat_int(d as i64));
            }
        }
        out
    }

    /// Coefficient of `v^k`, a polynomial free of `v`.
    pub fn coeff_of_power(&self, v: Variable, k: u32) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in self.terms.iter() {
            if m.deg(v) == k {
                out.add_term(m.with_deg(v, 0), c.clone());
            }
        }
        out
    }

    /// Dense coefficient list in `v`: index `i` holds the coefficient of `v^i`.
    pub fn coeffs_dense(&self, v: Variable) -> Vec<Polynomial> {
        let d = self.degree(v) as usize;
        let mut out = vec![Polynomial::zero(self.nvars); d + 1];
        for (m, c) in self.terms.iter() {
            out[m.deg(v) as usize].add_term(m.with_deg(v, 0), c.clone());
        }
        out
    }

    /// Nonzero coefficients of `v^d, v^{d-1}, ..., v^0`, leading first.
    pub fn coefficients(&self, v: Variable) -> Vec<Polynomial> {
        let mut dense = self.coeffs_dense(v);
        dense.reverse();
        dense.into_iter().filter(|c| !c.is_zero()).collect()
    }

    /// Leading coefficient with respect to `v`.
    pub fn ldcf(&self, v: Variable) -> Polynomial {
        self.coeff_of_power(v, self.degree(v))
    }

    /// Rebuild from a dense coefficient list in `v`.
    pub fn from_coeffs_dense(nvars: usize, v: Variable, coeffs: &[Polynomial]) -> Polynomial {
        let mut out = Polynomial::zero(nvars);
        for (i, c) in coeffs.iter().enumerate() {
            for (m, k) in c.terms.iter() {
                debug_assert_eq!(m.deg(v), 0);
                out.add_term(m.clone().padded(nvars).with_deg(v, i as u32), k.clone());
            }
        }
        out
    }

    /// Substitute the rational `r` for `v`.
    pub fn subst_rational(&self, v: Variable, r: &Rat) -> Polynomial {
        let dense = self.coeffs_dense(v);
        let mut out = Polynomial::zero(self.nvars);
        let mut power = Rat::one();
        for c in dense {
            out = out.add(&c.scale(&power));
            power *= r;
        }
        out
    }

    /// Substitute a polynomial for `v` (used by parsing macros).
    pub fn subst_poly(&self, v: Variable, q: &Polynomial) -> Polynomial {
        let dense = self.coeffs_dense(v);
        let mut out = Polynomial::zero(self.nvars.max(q.nvars));
        let mut power = Polynomial::one(q.nvars);
        for c in dense {
            out = out.add(&c.mul(&power));
            power = power.mul(q);
        }
        out
    }

    /// Full evaluation; `point[i]` is the value of variable index `i`.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert!(point.len() >= self.nvars);
        let mut acc = Rat::zero();
        for (m, c) in self.terms.iter() {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    pub fn pad_to(mut self, nvars: usize) -> Polynomial {
        if nvars <= self.nvars {
            return self;
        }
        let terms = std::mem::take(&mut self.terms);
        Polynomial {
            nvars,
            terms: terms
                .into_iter()
                .map(|(m, c)| (m.padded(nvars), c))
                .collect(),
        }
    }

    /// Splits `p = scale * q` with `q` integer-coefficient and unit content.
    /// `scale` is positive; the sign stays on `q`'s terms.
    pub fn rational_scale_split(&self) -> (Rat, Polynomial) {
        if self.is_zero() {
            return (Rat::one(), self.clone());
        }
        let mut den = Int::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut num = Int::zero();
        for c in self.terms.values() {
            num = num.gcd(&(c.numer() * &den / c.denom()));
        }
        debug_assert!(!num.is_zero());
        let scale = Rat::new(num.clone(), den.clone());
        let inv = Rat::new(den, num);
        (scale, self.scale(&inv))
    }

    /// Canonical form: integer-content-free, with positive leading
    /// coefficient under graded-lex. Constant scaling collapses; the zero
    /// polynomial is its own canonical form.
    pub fn canonical(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let (_, mut q) = self.rational_scale_split();
        if q.grlex_leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            q = q.neg();
        }
        q
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    /// True when all coefficients are integers.
    pub fn is_integer(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    pub fn display<'a>(&'a self, order: &'a VarOrder) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, order }
    }

    pub fn to_text(&self, order: &VarOrder) -> String {
        format!("{}", self.display(order))
    }
}

impl Monomial {
    fn padded(self, nvars: usize) -> Monomial {
        if self.0.len() >= nvars {
            return self;
        }
        let mut e = self.0.to_vec();
        e.resize(nvars, 0);
        Monomial(e.into_boxed_slice())
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    order: &'a VarOrder,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Monomial, &Rat)> = self.poly.terms().collect();
        terms.sort_by(|(a, _), (b, _)| cmp_grlex(b, a));
        for (i, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -(*c).clone() } else { (*c).clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_one() {
                if mag.denom().is_one() {
                    parts.push(mag.numer().to_string());
                } else {
                    parts.push(format!("{}/{}", mag.numer(), mag.denom()));
                }
            }
            for (idx, &e) in m.exps().iter().enumerate() {
                if e == 1 {
                    parts.push(self.order.name(Variable(idx)).to_string());
                } else if e > 1 {
                    parts.push(format!("{}^{}", self.order.name(Variable(idx)), e));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// Duplicate-free collection of canonical-form, nonconstant polynomials.
/// Membership is modulo canonical form; constants are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolySet {
    elems: BTreeSet<Polynomial>,
}

impl PolySet {
    pub fn new() -> Self {
        PolySet::default()
    }

    /// Inserts the canonical form of `p`; constants are dropped.
    pub fn insert(&mut self, p: &Polynomial) {
        if p.is_constant() {
            return;
        }
        self.elems.insert(p.canonical());
    }

    /// Inserts each primitive squarefree factor layer of `p`.
    pub fn insert_factors(&mut self, p: &Polynomial) {
        for q in primitive_squarefree_factors(p) {
            self.insert(&q);
        }
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.elems.contains(&p.canonical())
    }

    pub fn iter(&self) -> impl Iterator<Item = &Polynomial> {
        self.elems.iter()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn union(&self, other: &PolySet) -> PolySet {
        PolySet {
            elems: self.elems.union(&other.elems).cloned().collect(),
        }
    }

    pub fn remove(&mut self, p: &Polynomial) -> bool {
        self.elems.remove(&p.canonical())
    }

    pub fn to_vec(&self) -> Vec<Polynomial> {
        self.elems.iter().cloned().collect()
    }
}

impl FromIterator<Polynomial> for PolySet {
    fn from_iter<T: IntoIterator<Item = Polynomial>>(iter: T) -> Self {
        let mut s = PolySet::new();
        for p in iter {
            s.insert(&p);
        }
        s
    }
}

impl<'a> FromIterator<&'a Polynomial> for PolySet {
    fn from_iter<T: IntoIterator<Item = &'a Polynomial>>(iter: T) -> Self {
        let mut s = PolySet::new();
        for p in iter {
            s.insert(p);
        }
        s
    }
}

/// Usage errors raised by the arithmetic toolbox.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    ZeroOperand(&'static str),
    DegreeZero(&'static str),
    FreeOfVariable(&'static str),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZeroOperand(op) => write!(f, "{op}: zero operand"),
            PolyError::DegreeZero(op) => write!(f, "{op}: operand has degree 0 in the variable"),
            PolyError::FreeOfVariable(op) => write!(f, "{op}: element free of the variable"),
        }
    }
}

impl std::error::Error for PolyError {}

/// Exact multivariate division: returns `p / d` when `d` divides `p`.
pub fn exact_div(p: &Polynomial, d: &Polynomial) -> Option<Polynomial> {
    if d.is_zero() {
        return None;
    }
    if p.is_zero() {
        return Some(Polynomial::zero(p.nvars()));
    }
    let n = p.nvars().max(d.nvars());
    let mut r = p.clone().pad_to(n);
    let d = d.clone().pad_to(n);
    let (dm, dc) = d.lex_leading().map(|(m, c)| (m.clone(), c.clone()))?;
    let mut q = Polynomial::zero(n);
    while !r.is_zero() {
        let (rm, rc) = r.lex_leading().map(|(m, c)| (m.clone(), c.clone()))?;
        let qm = rm.div(&dm)?;
        let qc = rc / &dc;
        let mut t = Polynomial::zero(n);
        t.add_term(qm.padded(n), qc);
        r = r.sub(&t.mul(&d));
        q = q.add(&t);
    }
    Some(q)
}

/// Pseudo-remainder of `p` by `d` in `v`: `lc(d)^(deg p - deg d + 1) * p = q*d + r`.
pub fn pseudo_rem(p: &Polynomial, d: &Polynomial, v: Variable) -> Polynomial {
    let dp = p.degree(v);
    let dd = d.degree(v);
    assert!(!d.is_zero());
    if p.is_zero() || dp < dd {
        // Scale by the full power so callers can rely on the exact factor.
        let lc = d.ldcf(v);
        let e = if dp >= dd { dp - dd + 1 } else { 0 };
        return if e == 0 { p.clone() } else { p.mul(&lc.pow(e)) };
    }
    let lc = d.ldcf(v);
    let mut r = p.clone();
    let mut e = (dp - dd + 1) as i64;
    while !r.is_zero() && r.degree(v) >= dd {
        let dr = r.degree(v);
        let lead = r.ldcf(v);
        let shift = Polynomial::from_coeffs_dense(
            r.nvars().max(d.nvars()),
            v,
            &{
                let mut cs = vec![Polynomial::zero(lead.nvars()); (dr - dd) as usize + 1];
                let last = cs.len() - 1;
                cs[last] = lead;
                cs
            },
        );
        r = r.mul(&lc).sub(&shift.mul(d));
        e -= 1;
        debug_assert!(r.is_zero() || r.degree(v) < dr);
    }
    for _ in 0..e {
        r = r.mul(&lc);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_poly;

    fn ord3() -> Arc<VarOrder> {
        VarOrder::new(vec!["x", "y", "z"])
    }

    fn p(ord: &VarOrder, s: &str) -> Polynomial {
        parse_poly(s, ord).unwrap()
    }

    #[test]
    fn ring_ops_cancellation() {
        let ord = ord3();
        let a = p(&ord, "x + y");
        let b = p(&ord, "x - y");
        assert_eq!(a.add(&b), p(&ord, "2*x"));
        assert_eq!(a.mul(&Polynomial::zero(3)), Polynomial::zero(3));
        let f1 = p(&ord, "x + y^2 + z");
        let f2 = p(&ord, "x - y^2 + z");
        assert_eq!(f1.sub(&f2), p(&ord, "2*y^2"));
    }

    #[test]
    fn pow_and_scale() {
        let ord = ord3();
        let a = p(&ord, "x + 1");
        assert_eq!(a.pow(2), p(&ord, "x^2 + 2*x + 1"));
        assert_eq!(a.pow(0), Polynomial::one(3));
    }

    #[test]
    fn mvar_and_degrees() {
        let ord = ord3();
        let q = p(&ord, "y*z + x");
        assert_eq!(q.mvar(), Some(Variable::from_level(3)));
        assert_eq!(q.degree(Variable::from_level(3)), 1);
        assert_eq!(q.degree(Variable::from_level(1)), 1);
        assert_eq!(p(&ord, "x^2 - 1").mvar(), Some(Variable::from_level(1)));
    }

    #[test]
    fn coefficients_descending_nonzero() {
        let ord = ord3();
        let q = p(&ord, "y*z + x");
        let v = Variable::from_level(3);
        assert_eq!(q.coefficients(v), vec![p(&ord, "y"), p(&ord, "x")]);
        let c = p(&ord, "x^2 - 1");
        assert_eq!(c.coefficients(Variable::from_level(2)), vec![c.clone()]);
    }

    #[test]
    fn canonical_form_examples() {
        let ord = ord3();
        // Integer content and sign are stripped; grlex leading becomes positive.
        let q = p(&ord, "-4*x + 4*y");
        assert_eq!(q.canonical(), p(&ord, "y - x"));
        let r = p(&ord, "-2*y^2");
        assert_eq!(r.canonical(), p(&ord, "y^2"));
        let s = p(&ord, "x - y^2 + z");
        assert_eq!(s.canonical(), p(&ord, "y^2 - x - z"));
        // Idempotence.
        assert_eq!(s.canonical().canonical(), s.canonical());
    }

    #[test]
    fn exact_division() {
        let ord = ord3();
        let a = p(&ord, "x^2 - y^2");
        let b = p(&ord, "x - y");
        assert_eq!(exact_div(&a, &b), Some(p(&ord, "x + y")));
        assert_eq!(exact_div(&b, &a), None);
    }

    #[test]
    fn eval_points() {
        let ord = ord3();
        let g = p(&ord, "x^2 + y^2 + z^2 - 1");
        let v = g.eval(&[rat_int(-1), rat_int(0), rat_int(1)]);
        assert_eq!(v, rat_int(1));
    }

    #[test]
    fn polyset_membership_modulo_canonical() {
        let ord = ord3();
        let mut s = PolySet::new();
        s.insert(&p(&ord, "-2*y^2"));
        assert!(s.contains(&p(&ord, "y^2")));
        s.insert(&p(&ord, "3"));
        assert_eq!(s.len(), 1);
    }
}
