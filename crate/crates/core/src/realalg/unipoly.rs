//! Dense univariate integer polynomials: the representation behind
//! defining polynomials of real algebraic numbers and the bisection root
//! isolation built on Descartes' rule of signs.

use crate::polyring::{Int, Polynomial, Rat, Variable};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Integer-coefficient univariate polynomial, index = degree, no trailing
/// zero coefficients (the zero polynomial is the empty vector).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct UnivPoly {
    coeffs: Vec<Int>,
}

impl UnivPoly {
    pub fn zero() -> Self {
        UnivPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UnivPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UnivPoly::from_coeffs(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    /// Converts a multivariate polynomial that only involves `v`, clearing
    /// rational denominators.
    pub fn from_polynomial(p: &Polynomial, v: Variable) -> Option<UnivPoly> {
        let mut den = Int::one();
        for (m, c) in p.terms() {
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 && i != v.index() {
                    return None;
                }
            }
            den = den.lcm(c.denom());
        }
        let mut coeffs = vec![Int::zero(); p.degree(v) as usize + 1];
        for (m, c) in p.terms() {
            let k = m.deg(v) as usize;
            coeffs[k] = c.numer() * &den / c.denom();
        }
        Some(UnivPoly::from_coeffs(coeffs))
    }

    pub fn to_polynomial(&self, nvars: usize, v: Variable) -> Polynomial {
        let dense: Vec<Polynomial> = self
            .coeffs
            .iter()
            .map(|c| Polynomial::constant(nvars, Rat::from_integer(c.clone())))
            .collect();
        Polynomial::from_coeffs_dense(nvars, v, &dense)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn lc(&self) -> &Int {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn constant_coeff(&self) -> Int {
        self.coeffs.first().cloned().unwrap_or_else(Int::zero)
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &Rat) -> i8 {
        let v = self.eval_rat(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn derivative(&self) -> UnivPoly {
        if self.coeffs.len() <= 1 {
            return UnivPoly::zero();
        }
        UnivPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Int::from(i))
                .collect(),
        )
    }

    pub fn neg(&self) -> UnivPoly {
        UnivPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &UnivPoly) -> UnivPoly {
        if self.is_zero() || other.is_zero() {
            return UnivPoly::zero();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivPoly::from_coeffs(out)
    }

    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Integer-primitive with positive leading coefficient.
    pub fn normalized(&self) -> UnivPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        UnivPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Pseudo-remainder: `lc(d)^(dp-dd+1) * self = q*d + r`.
    pub fn pseudo_rem(&self, d: &UnivPoly) -> UnivPoly {
        assert!(!d.is_zero());
        let dd = d.degree();
        if self.is_zero() || self.degree() < dd {
            return self.clone();
        }
        let lc = d.lc().clone();
        let mut r = self.coeffs.clone();
        let mut e = self.degree() - dd + 1;
        while r.len() > dd && !r.is_empty() {
            let dr = r.len() - 1;
            let lead = r.last().unwrap().clone();
            if lead.is_zero() {
                r.pop();
                continue;
            }
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for i in 0..=dd {
                let delta = &lead * &d.coeffs[i];
                r[dr - dd + i] -= delta;
            }
            while r.last().map(|c| c.is_zero()).unwrap_or(false) {
                r.pop();
            }
            e -= 1;
        }
        let mut out = UnivPoly::from_coeffs(r);
        for _ in 0..e {
            out = out.mul_int(&lc);
        }
        out
    }

    fn mul_int(&self, k: &Int) -> UnivPoly {
        UnivPoly::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Gcd: modular algorithm with remainder-sequence fallback.
    pub fn gcd(&self, other: &UnivPoly) -> UnivPoly {
        crate::polyring::gcd_univariate_int(self, other)
    }

    /// Gcd by primitive remainder sequence, normalized.
    pub fn gcd_prs(&self, other: &UnivPoly) -> UnivPoly {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let mut a = self.normalized();
        let mut b = other.normalized();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.is_zero() {
                return a.normalized();
            }
            if b.degree() == 0 {
                return UnivPoly::from_coeffs(vec![Int::one()]);
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.normalized() };
        }
    }

    /// Squarefree part (distinct real and complex roots), normalized.
    pub fn squarefree_part(&self) -> UnivPoly {
        if self.degree() == 0 || self.is_zero() {
            return self.normalized();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.normalized();
        }
        self.exact_div(&g).expect("gcd divides").normalized()
    }

    /// Exact division over the rationals; `None` when it does not divide.
    pub fn exact_div(&self, d: &UnivPoly) -> Option<UnivPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(UnivPoly::zero());
        }
        if self.degree() < d.degree() {
            return None;
        }
        // Work over rationals, then clear: primitive inputs give integer
        // quotients, but intermediate coefficients may be rational.
        let mut r: Vec<Rat> = self.coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect();
        let dd = d.degree();
        let lc = Rat::from_integer(d.lc().clone());
        let mut q: Vec<Rat> = vec![Rat::zero(); self.degree() - dd + 1];
        for top in (dd..r.len()).rev() {
            let cq = &r[top] / &lc;
            q[top - dd] = cq.clone();
            if cq.is_zero() {
                continue;
            }
            for i in 0..=dd {
                let delta = &cq * Rat::from_integer(d.coeffs[i].clone());
                r[top - dd + i] -= delta;
            }
        }
        if r[..dd].iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut den = Int::one();
        for c in &q {
            den = den.lcm(c.denom());
        }
        if !den.is_one() {
            return None;
        }
        Some(UnivPoly::from_coeffs(
            q.into_iter().map(|c| c.numer().clone()).collect(),
        ))
    }

    /// Resultant of two integer univariate polynomials by the
    /// subresultant remainder sequence.
    pub fn resultant_int(&self, other: &UnivPoly) -> Int {
        if self.is_zero() || other.is_zero() {
            return Int::zero();
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        let mut negate = false;
        if a.degree() < b.degree() {
            if a.degree() % 2 == 1 && b.degree() % 2 == 1 {
                negate = !negate;
            }
            std::mem::swap(&mut a, &mut b);
        }
        if b.degree() == 0 {
            let mut r = Int::one();
            for _ in 0..a.degree() {
                r *= b.lc();
            }
            return if negate { -r } else { r };
        }
        let mut g = Int::one();
        let mut h = Int::one();
        let res = loop {
            let da = a.degree();
            let db = b.degree();
            let delta = (da - db) as u32;
            if da % 2 == 1 && db % 2 == 1 {
                negate = !negate;
            }
            let r = a.pseudo_rem(&b);
            a = b;
            let denom = &g * pow_int(&h, delta);
            b = UnivPoly::from_coeffs(r.coeffs.iter().map(|c| c / &denom).collect());
            g = a.lc().clone();
            h = if delta == 0 {
                h
            } else {
                pow_int(&g, delta) / pow_int(&h, delta - 1)
            };
            if b.is_zero() {
                break Int::zero();
            }
            if b.degree() == 0 {
                let da = a.degree() as u32;
                break if da == 0 {
                    Int::one()
                } else {
                    pow_int(b.lc(), da) / pow_int(&h, da - 1)
                };
            }
        };
        if negate {
            -res
        } else {
            res
        }
    }

    /// Strips x^k, returning k.
    fn strip_zero_roots(&mut self) -> usize {
        let k = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len());
        self.coeffs.drain(..k);
        k
    }

    /// Sign variation count of the coefficient sequence.
    fn variations(&self) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            let pos = c.is_positive();
            if let Some(prev) = last {
                if prev != pos {
                    count += 1;
                }
            }
            last = Some(pos);
        }
        count
    }

    fn reversed(&self) -> UnivPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        UnivPoly::from_coeffs(c)
    }

    /// Taylor shift by one: p(x + 1).
    fn shift_one(&self) -> UnivPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let add = c[j + 1].clone();
                c[j] += add;
            }
        }
        UnivPoly::from_coeffs(c)
    }

    /// 2^deg * p(x/2).
    fn scale_half(&self) -> UnivPoly {
        let n = self.coeffs.len();
        UnivPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c << ((n - 1 - i) as u32))
                .collect(),
        )
    }

    /// p(c * x) for integer c.
    fn scale_int(&self, c: &Int) -> UnivPoly {
        let mut pow = Int::one();
        UnivPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|a| {
                    let out = a * &pow;
                    pow = &pow * c;
                    out
                })
                .collect(),
        )
    }

    /// p(-x).
    fn mirror(&self) -> UnivPoly {
        UnivPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Root count upper bound for the open interval (0, 1).
    fn descartes_01(&self) -> usize {
        self.reversed().shift_one().variations()
    }

    /// A power-of-two strict bound on the absolute value of all real
    /// roots, Fujiwara style: the k-th root in `|a_(d-k)/a_d|^(1/k)`
    /// keeps huge low-order coefficients from inflating the bound.
    pub fn root_bound_pow2(&self) -> Int {
        let d = self.degree();
        let lc_bits = self.lc().abs().bits();
        let mut max_exp: u64 = 1;
        for (i, c) in self.coeffs[..d].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = (d - i) as u64;
            let diff = c.abs().bits().saturating_sub(lc_bits) + 2;
            let per_root = diff.div_ceil(k) + 1;
            max_exp = max_exp.max(per_root);
        }
        Int::one() << (max_exp + 1)
    }

    /// Attempts to find and split off small rational roots. Returns the
    /// found roots and the remaining cofactor.
    fn extract_rational_roots(&self) -> (Vec<Rat>, UnivPoly) {
        let mut roots = Vec::new();
        let mut cur = self.normalized();
        loop {
            if cur.degree() == 0 {
                break;
            }
            if cur.degree() == 1 {
                roots.push(Rat::new(-cur.coeffs[0].clone(), cur.coeffs[1].clone()));
                cur = UnivPoly::from_coeffs(vec![Int::one()]);
                break;
            }
            let a0 = cur.constant_coeff().abs();
            let an = cur.lc().abs();
            debug_assert!(!a0.is_zero());
            let (n_divs, d_divs) = match (small_divisors(&a0), small_divisors(&an)) {
                (Some(n), Some(d)) => (n, d),
                _ => break,
            };
            if n_divs.len().saturating_mul(d_divs.len()) > 4096 {
                break;
            }
            let mut found = None;
            'search: for num in &n_divs {
                for den in &d_divs {
                    if num.gcd(den) != Int::one() {
                        continue;
                    }
                    for sgn in [1i64, -1] {
                        let cand = Rat::new(num * Int::from(sgn), den.clone());
                        if cur.eval_rat(&cand).is_zero() {
                            found = Some(cand);
                            break 'search;
                        }
                    }
                }
            }
            match found {
                Some(root) => {
                    let lin = UnivPoly::from_coeffs(vec![
                        -root.numer().clone(),
                        root.denom().clone(),
                    ]);
                    cur = cur.exact_div(&lin).expect("root factor divides").normalized();
                    roots.push(root);
                }
                None => break,
            }
        }
        (roots, cur)
    }

    pub fn display_var(&self, name: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let lead = parts.is_empty();
            let sign = if c.is_negative() {
                if lead {
                    "-".to_string()
                } else {
                    " - ".to_string()
                }
            } else if lead {
                String::new()
            } else {
                " + ".to_string()
            };
            let body = if i == 0 {
                format!("{mag}")
            } else if i == 1 {
                if mag.is_one() {
                    name.to_string()
                } else {
                    format!("{mag}*{name}")
                }
            } else if mag.is_one() {
                format!("{name}^{i}")
            } else {
                format!("{mag}*{name}^{i}")
            };
            parts.push(format!("{sign}{body}"));
        }
        parts.concat()
    }
}

impl fmt::Display for UnivPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_var("_"))
    }
}

fn pow_int(base: &Int, e: u32) -> Int {
    let mut acc = Int::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

/// All positive divisors when the integer fits comfortably; `None` for
/// values too large to enumerate.
fn small_divisors(n: &Int) -> Option<Vec<Int>> {
    let n64: u64 = n.abs().try_into().ok()?;
    if n64 == 0 || n64 > (1u64 << 48) {
        return None;
    }
    let mut divs = Vec::new();
    let mut i = 1u64;
    while i.saturating_mul(i) <= n64 {
        if n64 % i == 0 {
            divs.push(Int::from(i));
            if i != n64 / i {
                divs.push(Int::from(n64 / i));
            }
        }
        if divs.len() > 256 {
            return None;
        }
        i += 1;
    }
    divs.sort();
    Some(divs)
}

/// An isolated real root: an exact rational or an open interval with
/// non-root rational endpoints containing exactly one root.
#[derive(Clone, Debug)]
pub enum IsolatedRoot {
    Exact(Rat),
    Interval(Rat, Rat),
}

impl IsolatedRoot {
    pub fn lo(&self) -> Rat {
        match self {
            IsolatedRoot::Exact(r) => r.clone(),
            IsolatedRoot::Interval(lo, _) => lo.clone(),
        }
    }

    pub fn hi(&self) -> Rat {
        match self {
            IsolatedRoot::Exact(r) => r.clone(),
            IsolatedRoot::Interval(_, hi) => hi.clone(),
        }
    }
}

/// A real root together with the squarefree polynomial that isolates it.
#[derive(Clone, Debug)]
pub struct IsolatedRootRep {
    pub defpoly: UnivPoly,
    pub root: IsolatedRoot,
}

fn linear_defpoly(r: &Rat) -> UnivPoly {
    UnivPoly::from_coeffs(vec![-r.numer().clone(), r.denom().clone()]).normalized()
}

/// Isolates all distinct real roots of `p` (nonzero), ascending, with
/// pairwise disjoint intervals. Rational roots found by the small-divisor
/// scan or by exact bisection hits carry exact values; the rest keep the
/// rational-root-free cofactor of the squarefree part as their defining
/// polynomial.
pub fn isolate_real_roots(p: &UnivPoly) -> Vec<IsolatedRootRep> {
    assert!(!p.is_zero(), "cannot isolate roots of the zero polynomial");
    thread_local! {
        static MEMO: std::cell::RefCell<std::collections::HashMap<UnivPoly, Vec<IsolatedRootRep>>> =
            std::cell::RefCell::new(std::collections::HashMap::new());
    }
    let key = p.normalized();
    if let Some(hit) = MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return hit;
    }
    let t0 = std::time::Instant::now();
    let out = isolate_real_roots_uncached(&key);
    if std::env::var("ECCAD_TRACE").is_ok() && t0.elapsed().as_millis() > 200 {
        eprintln!(
            "[trace] isolate deg {} ({} roots) took {:?}",
            key.degree(),
            out.len(),
            t0.elapsed()
        );
    }
    MEMO.with(|m| {
        let mut m = m.borrow_mut();
        if m.len() > 4096 {
            m.clear();
        }
        m.insert(key, out.clone());
    });
    out
}

fn isolate_real_roots_uncached(p: &UnivPoly) -> Vec<IsolatedRootRep> {
    let mut sf = p.squarefree_part();
    let zero_mult = sf.strip_zero_roots();
    sf = sf.normalized();
    let mut exacts: Vec<Rat> = Vec::new();
    let mut intervals: Vec<(Rat, Rat)> = Vec::new();
    let mut rest = UnivPoly::from_coeffs(vec![Int::one()]);
    if zero_mult > 0 {
        exacts.push(Rat::zero());
    }
    if sf.degree() >= 1 {
        let (rationals, cofactor) = sf.extract_rational_roots();
        exacts.extend(rationals);
        rest = cofactor;
        if rest.degree() >= 1 {
            for r in isolate_irrational(&rest) {
                match r {
                    IsolatedRoot::Exact(x) => exacts.push(x),
                    IsolatedRoot::Interval(lo, hi) => intervals.push((lo, hi)),
                }
            }
        }
    }
    // Shrink intervals until they avoid every exact root; the exact values
    // are not roots of `rest`, so bisection separates in finitely many steps.
    let mut reps: Vec<IsolatedRootRep> = Vec::new();
    for (mut lo, mut hi) in intervals {
        let mut exact_hit: Option<Rat> = None;
        while exacts.iter().any(|r| *r > lo && *r < hi) {
            let mid = (&lo + &hi) / Rat::from_integer(Int::from(2));
            if rest.eval_rat(&mid).is_zero() {
                exact_hit = Some(mid);
                break;
            }
            if rest.sign_at(&lo) * rest.sign_at(&mid) < 0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        match exact_hit {
            Some(r) => exacts.push(r),
            None => reps.push(IsolatedRootRep {
                defpoly: rest.clone(),
                root: IsolatedRoot::Interval(lo, hi),
            }),
        }
    }
    for r in exacts {
        reps.push(IsolatedRootRep {
            defpoly: linear_defpoly(&r),
            root: IsolatedRoot::Exact(r),
        });
    }
    let two = Rat::from_integer(Int::from(2));
    // Tighten interval roots to width <= 1/4 so downstream comparisons and
    // sample picks start from a useful enclosure.
    let quarter = Rat::new(Int::one(), Int::from(4));
    for rep in reps.iter_mut() {
        if let IsolatedRoot::Interval(lo, hi) = &rep.root {
            let (mut lo, mut hi) = (lo.clone(), hi.clone());
            let mut exact = None;
            while &hi - &lo > quarter {
                let mid = (&lo + &hi) / &two;
                let sm = rep.defpoly.sign_at(&mid);
                if sm == 0 {
                    exact = Some(mid);
                    break;
                }
                if rep.defpoly.sign_at(&lo) * sm < 0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            rep.root = match exact {
                Some(r) => IsolatedRoot::Exact(r),
                None => IsolatedRoot::Interval(lo, hi),
            };
        }
    }
    reps.sort_by(|a, b| {
        let ma = (a.root.lo() + a.root.hi()) / &two;
        let mb = (b.root.lo() + b.root.hi()) / &two;
        ma.cmp(&mb)
    });
    reps
}

/// Bisection isolation for a squarefree polynomial with no rational roots
/// among the small candidates (there may still be undetected rational
/// roots; they are simply reported as intervals unless hit exactly).
fn isolate_irrational(p: &UnivPoly) -> Vec<IsolatedRoot> {
    let mut out = Vec::new();
    let bound = p.root_bound_pow2();
    if p.eval_int(&bound).is_zero() || p.eval_int(&(-bound.clone())).is_zero() {
        // The power-of-two bound is strict by construction; being a root
        // would contradict it, but guard anyway.
        unreachable!("root bound is strict");
    }
    // Positive roots: q(x) = p(B x) on (0, 1).
    let q_pos = p.scale_int(&bound);
    isolate_01(&q_pos, &Rat::zero(), &Rat::from_integer(bound.clone()), &mut out);
    // Negative roots, mirrored.
    let q_neg = p.mirror().scale_int(&bound);
    let mut neg = Vec::new();
    isolate_01(&q_neg, &Rat::zero(), &Rat::from_integer(bound), &mut neg);
    for r in neg {
        out.push(match r {
            IsolatedRoot::Exact(x) => IsolatedRoot::Exact(-x),
            IsolatedRoot::Interval(lo, hi) => IsolatedRoot::Interval(-hi, -lo),
        });
    }
    out
}

/// Isolates roots of `q` in (0, 1), reporting them mapped onto the real
/// interval (lo, hi). Preconditions: q(0) != 0, q(1) != 0, q squarefree.
fn isolate_01(q: &UnivPoly, lo: &Rat, hi: &Rat, out: &mut Vec<IsolatedRoot>) {
    match q.descartes_01() {
        0 => {}
        1 => out.push(IsolatedRoot::Interval(lo.clone(), hi.clone())),
        _ => {
            let mid = (lo + hi) / Rat::from_integer(Int::from(2));
            let mut left = q.scale_half();
            let mut right = left.shift_one();
            // left covers (0, 1/2) of q, right covers (1/2, 1).
            if left.eval_int(&Int::one()).is_zero() {
                out.push(IsolatedRoot::Exact(mid.clone()));
                let lin = UnivPoly::from_i64(&[-1, 1]);
                left = left.exact_div(&lin).expect("midpoint root divides");
                right = UnivPoly::from_coeffs(right.coeffs[right.strip_zero_mut()..].to_vec());
            }
            isolate_01(&left, lo, &mid, out);
            isolate_01(&right, &mid, hi, out);
        }
    }
}

impl UnivPoly {
    fn strip_zero_mut(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rat_int;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(Int::from(n), Int::from(d))
    }

    #[test]
    fn isolates_sqrt_half() {
        // 2x^2 - 1 has roots +-sqrt(2)/2.
        let p = UnivPoly::from_i64(&[-1, 0, 2]);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 2);
        assert!(roots[0].root.lo() > rat_int(-1));
        assert!(roots[0].root.hi() <= Rat::zero());
        assert!(roots[1].root.lo() >= Rat::zero());
        assert!(roots[1].root.hi() < rat_int(1));
    }

    #[test]
    fn no_real_roots() {
        let p = UnivPoly::from_i64(&[1, 0, 1]);
        assert!(isolate_real_roots(&p).is_empty());
    }

    #[test]
    fn squarefree_part_of_square() {
        let p = UnivPoly::from_i64(&[0, 0, 1]); // x^2
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 1);
        match &roots[0].root {
            IsolatedRoot::Exact(r) => assert!(r.is_zero()),
            other => panic!("expected exact zero, got {other:?}"),
        }
    }

    #[test]
    fn rational_roots_detected() {
        // (2x - 3)(x + 2) = 2x^2 + x - 6
        let p = UnivPoly::from_i64(&[-6, 1, 2]);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 2);
        match (&roots[0].root, &roots[1].root) {
            (IsolatedRoot::Exact(a), IsolatedRoot::Exact(b)) => {
                assert_eq!(a, &rat_int(-2));
                assert_eq!(b, &rat(3, 2));
            }
            other => panic!("expected exact roots, got {other:?}"),
        }
    }

    #[test]
    fn mixed_roots_ordered_and_disjoint() {
        // x(x^2 - 2)(x - 3) has roots -sqrt2, 0, sqrt2, 3.
        let x = UnivPoly::from_i64(&[0, 1]);
        let q = UnivPoly::from_i64(&[-2, 0, 1]);
        let l = UnivPoly::from_i64(&[-3, 1]);
        let p = x.mul(&q).mul(&l);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 4);
        for w in roots.windows(2) {
            assert!(w[0].root.hi() <= w[1].root.lo());
        }
    }

    #[test]
    fn gcd_and_exact_div() {
        let a = UnivPoly::from_i64(&[-1, 0, 1]); // x^2-1
        let b = UnivPoly::from_i64(&[1, 1]); // x+1
        assert_eq!(a.gcd(&b), b);
        assert_eq!(a.exact_div(&b).unwrap(), UnivPoly::from_i64(&[-1, 1]));
    }

    #[test]
    fn eval_and_shift() {
        let p = UnivPoly::from_i64(&[1, 2, 1]); // (x+1)^2
        assert_eq!(p.eval_rat(&rat_int(-1)), Rat::zero());
        let s = p.shift_one(); // (x+2)^2 = x^2+4x+4
        assert_eq!(s, UnivPoly::from_i64(&[4, 4, 1]));
    }
}
