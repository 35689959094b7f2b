//! Certified sign evaluation at sample points, partial substitution of
//! samples into lifting polynomials, and root isolation for the resulting
//! univariate images.
//!
//! Signs are decided in stages: exact rational substitution, then a
//! pseudo-remainder cascade through the coordinates' defining relations
//! (with sign corrections from the certified-nonzero leading
//! coefficients), then adaptive interval refinement. A zero that survives
//! all of that is certified through a resultant norm built from the same
//! relations, eliminated top coordinate first so every resultant stays
//! small; eliminations against univariate defining polynomials run
//! through an evaluation-interpolation fast path.

use super::unipoly::{isolate_real_roots, UnivPoly};
use super::{AlgebraicNumber, SamplePoint};
use crate::polyring::{
    exact_div, gcd_raw, pseudo_rem, resultant_auto, Int, Polynomial, Rat, Variable,
};
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone)]
pub enum RealAlgError {
    /// The algebraic coordinates interact in a way the resultant-norm
    /// construction cannot untangle.
    DegenerateTower(String),
}

impl fmt::Display for RealAlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealAlgError::DegenerateTower(m) => write!(f, "degenerate algebraic tower: {m}"),
        }
    }
}

impl std::error::Error for RealAlgError {}

/// Environment-gated tracing for performance investigation.
pub(crate) fn trace_enabled() -> bool {
    static ON: std::sync::OnceLock<bool> = std::sync::OnceLock::new();
    *ON.get_or_init(|| std::env::var("ECCAD_TRACE").is_ok())
}

/// Closed rational interval.
#[derive(Clone, Debug)]
struct IntervalQ {
    lo: Rat,
    hi: Rat,
}

impl IntervalQ {
    fn point(r: &Rat) -> Self {
        IntervalQ {
            lo: r.clone(),
            hi: r.clone(),
        }
    }

    fn of(a: &AlgebraicNumber) -> Self {
        IntervalQ {
            lo: a.lo().clone(),
            hi: a.hi().clone(),
        }
    }

    fn add(&self, other: &IntervalQ) -> IntervalQ {
        IntervalQ {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    fn mul(&self, other: &IntervalQ) -> IntervalQ {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if *c < lo {
                lo = c.clone();
            }
            if *c > hi {
                hi = c.clone();
            }
        }
        IntervalQ { lo, hi }
    }

    fn pow(&self, e: u32) -> IntervalQ {
        if e == 0 {
            return IntervalQ::point(&Rat::one());
        }
        if e % 2 == 0 && self.lo.is_negative() && self.hi.is_positive() {
            let a = power_rat(&self.lo, e);
            let b = power_rat(&self.hi, e);
            return IntervalQ {
                lo: Rat::zero(),
                hi: a.max(b),
            };
        }
        let a = power_rat(&self.lo, e);
        let b = power_rat(&self.hi, e);
        IntervalQ {
            lo: a.clone().min(b.clone()),
            hi: a.max(b),
        }
    }

    fn scale(&self, c: &Rat) -> IntervalQ {
        if c.is_negative() {
            IntervalQ {
                lo: &self.hi * c,
                hi: &self.lo * c,
            }
        } else {
            IntervalQ {
                lo: &self.lo * c,
                hi: &self.hi * c,
            }
        }
    }

    fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }
}

fn power_rat(r: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= r;
    }
    acc
}

fn rational_sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Substitutes every rational coordinate of `s` into `p` and returns the
/// result together with the algebraic coordinate variables still present.
fn substitute_rationals(p: &Polynomial, s: &SamplePoint) -> (Polynomial, Vec<Variable>) {
    let mut q = p.clone();
    for (i, coord) in s.coords().iter().enumerate() {
        let v = Variable::from_index(i);
        if q.degree(v) == 0 {
            continue;
        }
        if let Some(r) = coord.as_rational() {
            q = q.subst_rational(v, r);
        }
    }
    let mut algs = Vec::new();
    for (i, coord) in s.coords().iter().enumerate() {
        let v = Variable::from_index(i);
        if q.degree(v) > 0 {
            debug_assert!(coord.as_rational().is_none());
            algs.push(v);
        }
    }
    (q, algs)
}

fn interval_eval(p: &Polynomial, boxes: &[(Variable, IntervalQ)]) -> IntervalQ {
    let mut acc = IntervalQ::point(&Rat::zero());
    for (m, c) in p.terms() {
        let mut t = IntervalQ::point(&Rat::one());
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let b = boxes
                .iter()
                .find(|(v, _)| v.index() == i)
                .map(|(_, b)| b)
                .expect("every variable of the polynomial has an interval");
            t = t.mul(&b.pow(e));
        }
        acc = acc.add(&t.scale(c));
    }
    acc
}

/// Pseudo-remainder cascade: reduces `p` through the defining relations of
/// the algebraic coordinates, top variable first. Returns the reduced
/// polynomial and the sign corrections `(leading coefficient, exponent)`
/// accumulated from pseudo-division; constant leading coefficients are
/// folded in directly.
fn reduce_by_relations(
    p: &Polynomial,
    s: &SamplePoint,
    algs: &[Variable],
) -> (Polynomial, Vec<(Polynomial, u32)>) {
    let nvars = p.nvars();
    let mut corrections: Vec<(Polynomial, u32)> = Vec::new();
    let mut cur = p.clone();
    let mut vars: Vec<Variable> = algs.to_vec();
    vars.sort_by_key(|v| std::cmp::Reverse(v.index()));
    for v in vars {
        let dcur = cur.degree(v);
        if dcur == 0 {
            continue;
        }
        let rel = s.relation(v, nvars);
        let drel = rel.degree(v);
        if drel == 0 || dcur < drel {
            continue;
        }
        let lc = rel.ldcf(v);
        let e = dcur - drel + 1;
        cur = pseudo_rem(&cur, &rel, v);
        if let Some(c) = lc.constant_value() {
            if c.is_negative() && e % 2 == 1 {
                cur = cur.neg();
            }
        } else {
            corrections.push((lc, e));
        }
        // Positive rescaling keeps coefficients small and signs intact.
        if !cur.is_zero() {
            let (_, cleared) = cur.rational_scale_split();
            cur = cleared;
        }
    }
    (cur, corrections)
}

/// Exact sign of `p` at the sample point `s` (which must cover every
/// variable of `p`).
pub fn sign_at(p: &Polynomial, s: &SamplePoint) -> i8 {
    try_sign_at(p, s).expect("sign evaluation failed on a degenerate tower")
}

/// Interval refinement rounds before switching to the norm decision; each
/// round shrinks every coordinate interval by a factor of 16. The
/// schedule switches to the exact decision long before the 64-round
/// backstop.
const REFINE_ROUNDS_BEFORE_NORM: usize = 3;

pub fn try_sign_at(p: &Polynomial, s: &SamplePoint) -> Result<i8, RealAlgError> {
    if let Some(v) = p.mvar() {
        assert!(
            v.level() <= s.len(),
            "sample must cover every variable of the polynomial"
        );
    }
    let (q, algs) = substitute_rationals(p, s);
    if let Some(c) = q.constant_value() {
        return Ok(rational_sign(&c));
    }
    let (rem, corrections) = reduce_by_relations(&q, s, &algs);
    let mut flip = false;
    for (lc, e) in &corrections {
        if e % 2 == 0 {
            continue;
        }
        let sign = try_sign_at(lc, s)?;
        debug_assert!(sign != 0, "relation leading coefficients are certified nonzero");
        if sign < 0 {
            flip = !flip;
        }
    }
    let apply = |sig: i8| if flip { -sig } else { sig };
    if let Some(c) = rem.constant_value() {
        return Ok(apply(rational_sign(&c)));
    }
    let live: Vec<Variable> = rem
        .vars_present()
        .into_iter()
        .filter(|v| v.index() < s.len())
        .collect();
    let sixteenth = Rat::new(Int::one(), Int::from(16));
    let mut coords: Vec<(Variable, AlgebraicNumber)> =
        live.iter().map(|v| (*v, s.coord(*v).clone())).collect();
    for round in 0..=REFINE_ROUNDS_BEFORE_NORM {
        let boxes: Vec<(Variable, IntervalQ)> = coords
            .iter()
            .map(|(v, a)| (*v, IntervalQ::of(a)))
            .collect();
        if let Some(sign) = interval_eval(&rem, &boxes).sign() {
            return Ok(apply(sign));
        }
        if round < REFINE_ROUNDS_BEFORE_NORM {
            coords = coords
                .iter()
                .map(|(v, a)| {
                    let w = a.width() * &sixteenth;
                    let w = if w.is_zero() { sixteenth.clone() } else { w };
                    (*v, a.refined_to(&w))
                })
                .collect();
        }
    }
    let sign = decide_sign_by_norm(&rem, s, &coords)?;
    Ok(apply(sign))
}

/// Eliminates every algebraic coordinate other than `keep` from `h`, top
/// coordinate first, by resultants against the coordinates' defining
/// relations. The result is a nonzero univariate polynomial in `keep`
/// whose roots include every value the chain tracks.
fn eliminate_via_relations(
    h: &Polynomial,
    keep: Variable,
    s: &SamplePoint,
) -> Result<UnivPoly, RealAlgError> {
    let nvars = h.nvars();
    let mut cur = h.clone();
    loop {
        let mut top: Option<Variable> = None;
        for v in cur.vars_present() {
            if v != keep {
                assert!(v.index() < s.len(), "stray variable in elimination");
                if top.map(|t| v.index() > t.index()).unwrap_or(true) {
                    top = Some(v);
                }
            }
        }
        let Some(v) = top else { break };
        let mut rel = s.relation(v, nvars);
        loop {
            if rel.degree(v) == 0 {
                return Err(RealAlgError::DegenerateTower(
                    "defining relation exhausted during elimination".into(),
                ));
            }
            if cur.degree(v) == 0 {
                break;
            }
            // A common factor with the relation makes the resultant
            // vanish; strip the side that is certified nonzero at the
            // sample.
            let g = gcd_raw(&rel, &cur);
            if !g.is_constant() {
                if g.degree(keep) > 0 {
                    return Err(RealAlgError::DegenerateTower(
                        "shared factor involves the kept variable".into(),
                    ));
                }
                let g_sign = try_sign_at(&g, s)?;
                if g_sign != 0 {
                    cur = exact_div(&cur, &g).expect("gcd divides");
                    continue;
                }
                if g.degree(v) >= 1 && g != rel {
                    // The factor vanishes at the sample: it is a tighter
                    // relation for this coordinate.
                    rel = g;
                    continue;
                }
                return Err(RealAlgError::DegenerateTower(
                    "coordinate value lies in a factor shared with the image".into(),
                ));
            }
            let t0 = std::time::Instant::now();
            let r = resultant_auto(&rel, &cur, v).expect("degrees checked");
            if trace_enabled() && t0.elapsed().as_millis() > 200 {
                eprintln!(
                    "[trace] elimination resultant {}x{} in var {} took {:?}",
                    rel.degree(v),
                    cur.degree(v),
                    v.index(),
                    t0.elapsed()
                );
            }
            if r.is_zero() {
                return Err(RealAlgError::DegenerateTower(
                    "vanishing resultant after gcd stripping".into(),
                ));
            }
            let (_, cleared) = r.rational_scale_split();
            cur = cleared;
            break;
        }
    }
    let uni = UnivPoly::from_polynomial(&cur, keep).expect("univariate by construction");
    if uni.is_zero() {
        return Err(RealAlgError::DegenerateTower("norm collapsed to zero".into()));
    }
    if uni.degree() == 0 {
        return Ok(uni.normalized());
    }
    let t0 = std::time::Instant::now();
    let sf = uni.squarefree_part();
    if trace_enabled() && t0.elapsed().as_millis() > 200 {
        eprintln!(
            "[trace] norm squarefree deg {} -> {} took {:?}",
            uni.degree(),
            sf.degree(),
            t0.elapsed()
        );
    }
    Ok(sf)
}

/// Norm-based exact decision for the sign of `rem` at the sample.
fn decide_sign_by_norm(
    rem: &Polynomial,
    s: &SamplePoint,
    coords: &[(Variable, AlgebraicNumber)],
) -> Result<i8, RealAlgError> {
    let nvars = rem.nvars().max(s.len());
    let t = Variable::from_index(nvars);
    let h = Polynomial::variable(nvars + 1, t).sub(&rem.clone().pad_to(nvars + 1));
    let norm = eliminate_via_relations(&h, t, s)?;
    if norm.degree() == 0 {
        return Err(RealAlgError::DegenerateTower(
            "sign norm lost the value variable".into(),
        ));
    }
    let roots: Vec<AlgebraicNumber> = isolate_real_roots(&norm)
        .iter()
        .map(AlgebraicNumber::from_isolated)
        .collect();
    let mut live = roots;
    let mut coords: Vec<(Variable, AlgebraicNumber)> = coords.to_vec();
    let sixteenth = Rat::new(Int::one(), Int::from(16));
    loop {
        let boxes: Vec<(Variable, IntervalQ)> = coords
            .iter()
            .map(|(v, a)| (*v, IntervalQ::of(a)))
            .collect();
        let enclosure = interval_eval(rem, &boxes);
        if let Some(sign) = enclosure.sign() {
            return Ok(sign);
        }
        live.retain(|r| !(r.hi() < &enclosure.lo || r.lo() > &enclosure.hi));
        if live.is_empty() {
            return Err(RealAlgError::DegenerateTower(
                "value enclosure excludes every norm root".into(),
            ));
        }
        if live.len() == 1 {
            return Ok(live[0].sign());
        }
        coords = coords
            .iter()
            .map(|(v, a)| {
                let w = a.width() * &sixteenth;
                let w = if w.is_zero() { sixteenth.clone() } else { w };
                (*v, a.refined_to(&w))
            })
            .collect();
        live = live.iter().map(|r| r.refined_once()).collect();
    }
}

/// Outcome of substituting a sample prefix into a polynomial with main
/// variable one level higher.
#[derive(Clone, Debug)]
pub enum PartialImage {
    /// Every coefficient vanishes at the sample.
    Nullified,
    /// Only the constant coefficient survives; its sign.
    Constant(i8),
    /// A genuine univariate image: surviving (power, coefficient sign)
    /// pairs, highest power first, and the polynomial trimmed to its
    /// certified effective degree (a valid defining relation for each of
    /// the image's roots over this sample).
    Univariate {
        var: Variable,
        coeff_signs: Vec<(u32, i8)>,
        trimmed: Polynomial,
    },
}

/// Evaluates the coefficients of `p` (main variable `v`) at `s`, dropping
/// certified zeros.
pub fn substitute_partial(p: &Polynomial, s: &SamplePoint, v: Variable) -> PartialImage {
    debug_assert_eq!(p.mvar(), Some(v));
    debug_assert_eq!(v.index(), s.len());
    let dense = p.coeffs_dense(v);
    let mut coeff_signs = Vec::new();
    for (k, c) in dense.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let sign = sign_at(c, s);
        if sign != 0 {
            coeff_signs.push((k as u32, sign));
        }
    }
    if coeff_signs.is_empty() {
        return PartialImage::Nullified;
    }
    if coeff_signs[0].0 == 0 {
        return PartialImage::Constant(coeff_signs[0].1);
    }
    let d_eff = coeff_signs[0].0;
    let trimmed_coeffs: Vec<Polynomial> = dense.into_iter().take(d_eff as usize + 1).collect();
    let trimmed = Polynomial::from_coeffs_dense(p.nvars(), v, &trimmed_coeffs);
    PartialImage::Univariate {
        var: v,
        coeff_signs,
        trimmed,
    }
}

/// Isolates the real roots (in `v`) of `p` evaluated at the sample `s`.
/// The image must not be nullified. Roots come back as algebraic numbers
/// over the rationals, ascending and pairwise distinct.
pub fn isolate_image_roots(
    p: &Polynomial,
    s: &SamplePoint,
    v: Variable,
) -> Result<Vec<AlgebraicNumber>, RealAlgError> {
    let image = match substitute_partial(p, s, v) {
        PartialImage::Nullified => {
            return Err(RealAlgError::DegenerateTower(
                "image is identically zero".into(),
            ));
        }
        PartialImage::Constant(_) => return Ok(Vec::new()),
        PartialImage::Univariate { trimmed, .. } => trimmed,
    };
    isolate_trimmed_image_roots(&image, s, v)
}

/// Root isolation for an image already trimmed to its certified effective
/// degree.
pub fn isolate_trimmed_image_roots(
    image: &Polynomial,
    s: &SamplePoint,
    v: Variable,
) -> Result<Vec<AlgebraicNumber>, RealAlgError> {
    let (q, algs) = substitute_rationals(image, s);
    if q.degree(v) == 0 {
        return Ok(Vec::new());
    }
    if algs.is_empty() {
        let uni = UnivPoly::from_polynomial(&q, v).expect("univariate after substitution");
        if uni.is_zero() {
            return Err(RealAlgError::DegenerateTower(
                "image is identically zero".into(),
            ));
        }
        if uni.degree() == 0 {
            return Ok(Vec::new());
        }
        return Ok(isolate_real_roots(&uni)
            .iter()
            .map(AlgebraicNumber::from_isolated)
            .collect());
    }
    let norm = eliminate_via_relations(&q, v, s)?;
    if norm.degree() == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for rep in isolate_real_roots(&norm) {
        let cand = AlgebraicNumber::from_isolated(&rep);
        if confirm_image_root(&q, s, v, &cand)? {
            out.push(cand);
        }
    }
    Ok(out)
}

/// Decides whether a candidate (an isolated root of the image's norm) is a
/// genuine root of the image. Rational candidates go through the exact
/// cascade; irrational ones first by an endpoint sign change, then by
/// interval exclusion, and only as a last resort through the candidate's
/// own defining polynomial.
fn confirm_image_root(
    image: &Polynomial,
    s: &SamplePoint,
    v: Variable,
    cand: &AlgebraicNumber,
) -> Result<bool, RealAlgError> {
    if cand.as_rational().is_some() {
        let extended = s.extended(cand.clone());
        return Ok(try_sign_at(image, &extended)? == 0);
    }
    let prefix = s.clone();
    let lo_sign = try_sign_at(&image.subst_rational(v, cand.lo()), &prefix)?;
    let hi_sign = try_sign_at(&image.subst_rational(v, cand.hi()), &prefix)?;
    if lo_sign != 0 && hi_sign != 0 && lo_sign != hi_sign {
        // A sign change certifies an image root strictly inside, and the
        // interval isolates the candidate among all norm roots (image
        // roots are norm roots), so it is the candidate.
        return Ok(true);
    }
    if lo_sign == 0 || hi_sign == 0 {
        // An endpoint roots the image; shrink away from it and retry
        // (endpoints are never the candidate itself).
        let refined = cand
            .refined_to(&(cand.width() * Rat::new(Int::one(), Int::from(16))))
            .refined_once();
        return confirm_image_root(image, s, v, &refined);
    }
    // No sign change: either not a root, or an even-multiplicity root.
    // Interval exclusion settles the common case cheaply.
    let mut coords: Vec<(Variable, AlgebraicNumber)> = image
        .vars_present()
        .into_iter()
        .filter(|w| *w != v && w.index() < s.len())
        .map(|w| (w, s.coord(w).clone()))
        .collect();
    let mut cv = cand.clone();
    let sixteenth = Rat::new(Int::one(), Int::from(16));
    for _ in 0..=REFINE_ROUNDS_BEFORE_NORM {
        let mut boxes: Vec<(Variable, IntervalQ)> = coords
            .iter()
            .map(|(w, a)| (*w, IntervalQ::of(a)))
            .collect();
        boxes.push((v, IntervalQ::of(&cv)));
        if interval_eval(image, &boxes)
            .sign()
            .map(|sg| sg != 0)
            .unwrap_or(false)
        {
            return Ok(false);
        }
        coords = coords
            .iter()
            .map(|(w, a)| {
                let wd = a.width() * &sixteenth;
                let wd = if wd.is_zero() { sixteenth.clone() } else { wd };
                (*w, a.refined_to(&wd))
            })
            .collect();
        cv = cv.refined_once();
    }
    // Possible even-multiplicity root: decide exactly through the
    // candidate's defining polynomial (rare).
    let extended = s.extended(cand.clone());
    Ok(try_sign_at(image, &extended)? == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_poly;
    use crate::polyring::{rat_int, VarOrder};
    use crate::realalg::isolate_unipoly_roots;

    fn sqrt_half_pair() -> (AlgebraicNumber, AlgebraicNumber) {
        let p = UnivPoly::from_i64(&[-1, 0, 2]);
        let roots = isolate_unipoly_roots(&p);
        (
            AlgebraicNumber::from_isolated(&roots[0]),
            AlgebraicNumber::from_isolated(&roots[1]),
        )
    }

    #[test]
    fn sign_at_rational_points() {
        let ord = VarOrder::new(vec!["x", "y", "z"]);
        let p = parse_poly("x - y + z^2", &ord).unwrap();
        let s = SamplePoint::from_rationals(&[rat_int(-1), rat_int(0), rat_int(1)]);
        assert_eq!(sign_at(&p, &s), 0);
        let s2 = SamplePoint::from_rationals(&[rat_int(0), rat_int(0), rat_int(0)]);
        assert_eq!(sign_at(&parse_poly("x", &ord).unwrap(), &s2.prefix(1)), 0);
    }

    #[test]
    fn sign_at_certifies_algebraic_zero() {
        // g = x^2 + y^2 + z^2 - 1 at (sqrt(1/2), 0, -sqrt(1/2)) is exactly 0.
        let ord = VarOrder::new(vec!["x", "y", "z"]);
        let g = parse_poly("x^2 + y^2 + z^2 - 1", &ord).unwrap();
        let (neg, pos) = sqrt_half_pair();
        let s = SamplePoint::from_coords(vec![pos, AlgebraicNumber::from_int(0), neg]);
        assert_eq!(sign_at(&g, &s), 0);
    }

    #[test]
    fn sign_at_zero_with_relation() {
        // Same zero, with the top coordinate carrying its defining relation
        // z = -(x + y^2), as lifting attaches it.
        let ord = VarOrder::new(vec!["x", "y", "z"]);
        let g = parse_poly("x^2 + y^2 + z^2 - 1", &ord).unwrap();
        let f1 = parse_poly("x + y^2 + z", &ord).unwrap();
        let (neg, pos) = sqrt_half_pair();
        let s = SamplePoint::from_coords(vec![pos, AlgebraicNumber::from_int(0)])
            .extended_with_relation(neg, f1);
        assert_eq!(sign_at(&g, &s), 0);
    }

    #[test]
    fn sign_at_nonzero_algebraic() {
        let ord = VarOrder::new(vec!["x"]);
        let p = parse_poly("x^3 - x", &ord).unwrap();
        let (_, pos) = sqrt_half_pair();
        let s = SamplePoint::from_coords(vec![pos]);
        assert_eq!(sign_at(&p, &s), -1);
    }

    #[test]
    fn substitute_partial_nullified() {
        let ord = VarOrder::new(vec!["x", "y", "z"]);
        let p = parse_poly("y*z + x", &ord).unwrap();
        let s = SamplePoint::from_rationals(&[rat_int(0), rat_int(0)]);
        let z = ord.lookup("z").unwrap();
        assert!(matches!(substitute_partial(&p, &s, z), PartialImage::Nullified));
    }

    #[test]
    fn substitute_partial_constant() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let q = parse_poly("x*y + x^2 - 1", &ord).unwrap();
        let s = SamplePoint::from_rationals(&[rat_int(0)]);
        let y = ord.lookup("y").unwrap();
        match substitute_partial(&q, &s, y) {
            PartialImage::Constant(sign) => assert_eq!(sign, -1),
            other => panic!("expected constant image, got {other:?}"),
        }
    }

    #[test]
    fn substitute_partial_linear_image() {
        let ord = VarOrder::new(vec!["x", "y", "z"]);
        let f1 = parse_poly("x + y^2 + z", &ord).unwrap();
        let (_, pos) = sqrt_half_pair();
        let s = SamplePoint::from_coords(vec![pos, AlgebraicNumber::from_int(0)]);
        let z = ord.lookup("z").unwrap();
        match substitute_partial(&f1, &s, z) {
            PartialImage::Univariate { coeff_signs, .. } => {
                assert_eq!(coeff_signs, vec![(1, 1), (0, 1)]);
            }
            other => panic!("expected univariate image, got {other:?}"),
        }
        let roots = isolate_image_roots(&f1, &s, z).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].sign(), -1);
        let (neg, _) = sqrt_half_pair();
        assert!(roots[0].equals(&neg));
    }

    #[test]
    fn image_roots_with_rational_sample() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let p = parse_poly("y^2 - x", &ord).unwrap();
        let y = ord.lookup("y").unwrap();
        let s = SamplePoint::from_rationals(&[rat_int(4)]);
        let roots = isolate_image_roots(&p, &s, y).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].as_rational(), Some(&rat_int(-2)));
        assert_eq!(roots[1].as_rational(), Some(&rat_int(2)));
    }

    #[test]
    fn image_roots_over_algebraic_sample() {
        // y^2 - x over x = sqrt(1/2): roots are the real roots of 2y^4 - 1.
        let ord = VarOrder::new(vec!["x", "y"]);
        let p = parse_poly("y^2 - x", &ord).unwrap();
        let y = ord.lookup("y").unwrap();
        let (_, pos) = sqrt_half_pair();
        let s = SamplePoint::from_coords(vec![pos]);
        let roots = isolate_image_roots(&p, &s, y).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].sign(), -1);
        assert_eq!(roots[1].sign(), 1);
        let quartic = UnivPoly::from_i64(&[-1, 0, 0, 0, 2]);
        assert!(roots[0].is_root_of(&quartic));
        assert!(roots[1].is_root_of(&quartic));
    }

    #[test]
    fn interp_resultant_matches_prs() {
        use crate::polyring::resultant;
        let ord = VarOrder::new(vec!["w", "x"]);
        let x = ord.lookup("x").unwrap();
        let a = parse_poly("x^3 + w*x + 2*w^2 - 1", &ord).unwrap();
        let b = parse_poly("w*x^2 - 3*x + w + 2", &ord).unwrap();
        let via_auto = resultant_auto(&a, &b, x).unwrap();
        let via_prs = resultant(&a, &b, x).unwrap();
        assert_eq!(via_auto, via_prs);
    }
}
