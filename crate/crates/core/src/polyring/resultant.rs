//! Resultants by subresultant polynomial remainder sequence, with the
//! defect-correction factors so the result equals the Sylvester-matrix
//! determinant exactly, and the discriminant built on top of it.

use super::{exact_div, pseudo_rem, Int, Polynomial, PolyError, Rat, Variable};
use num_traits::{One, Zero};

/// Resultant of `p` and `q` with respect to `v`, equal to the determinant
/// of the Sylvester matrix with `p`'s coefficient rows first. Both inputs
/// must have positive degree in `v`; the result is free of `v`.
pub fn resultant(p: &Polynomial, q: &Polynomial, v: Variable) -> Result<Polynomial, PolyError> {
    if p.is_zero() || q.is_zero() {
        return Err(PolyError::ZeroOperand("resultant"));
    }
    if p.degree(v) == 0 || q.degree(v) == 0 {
        return Err(PolyError::DegreeZero("resultant"));
    }
    let nvars = p.nvars().max(q.nvars());
    let mut a = p.clone().pad_to(nvars);
    let mut b = q.clone().pad_to(nvars);
    let mut negate = false;
    if a.degree(v) < b.degree(v) {
        if a.degree(v) % 2 == 1 && b.degree(v) % 2 == 1 {
            negate = !negate;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let one = Polynomial::one(nvars);
    let mut g = one.clone();
    let mut h = one.clone();
    let res = loop {
        let da = a.degree(v);
        let db = b.degree(v);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = pseudo_rem(&a, &b, v);
        a = b;
        let denom = g.mul(&h.pow(delta));
        b = exact_div(&r, &denom).expect("subresultant defect division is exact");
        g = a.ldcf(v);
        h = if delta == 0 {
            h
        } else {
            exact_div(&g.pow(delta), &h.pow(delta - 1))
                .expect("subresultant h-update division is exact")
        };
        if b.is_zero() {
            // Positive-degree common factor: the resultant vanishes.
            break Polynomial::zero(nvars);
        }
        if b.degree(v) == 0 {
            let da = a.degree(v);
            let num = b.pow(da);
            break if da == 0 {
                num
            } else {
                exact_div(&num, &h.pow(da - 1)).expect("final subresultant division is exact")
            };
        }
    };
    Ok(if negate { res.neg() } else { res })
}

/// Discriminant with respect to `v`.
///
/// For degree >= 2 this is `(-1)^(d(d-1)/2) * res(p, dp/dv) / ldcf(p)`.
/// A degree-1 polynomial gets the constant 1: its discriminant is a
/// nonzero constant under any convention and projection discards it.
pub fn discriminant(p: &Polynomial, v: Variable) -> Result<Polynomial, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroOperand("discriminant"));
    }
    let d = p.degree(v);
    if d == 0 {
        return Err(PolyError::DegreeZero("discriminant"));
    }
    if d == 1 {
        return Ok(Polynomial::one(p.nvars()));
    }
    let dp = p.derivative(v);
    let r = resultant_auto(p, &dp, v)?;
    let lc = p.ldcf(v);
    let quo = exact_div(&r, &lc).expect("leading coefficient divides res(p, p')");
    Ok(if (d as u64) * ((d as u64) - 1) / 2 % 2 == 1 {
        quo.neg()
    } else {
        quo
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_poly;
    use crate::polyring::VarOrder;

    #[test]
    fn resultant_examples() {
        let ord = VarOrder::new(vec!["x", "y", "z"]);
        let x = ord.lookup("x").unwrap();
        let z = ord.lookup("z").unwrap();

        let f1 = parse_poly("x + y^2 + z", &ord).unwrap();
        let f2 = parse_poly("x - y^2 + z", &ord).unwrap();
        assert_eq!(
            resultant(&f1, &f2, z).unwrap(),
            parse_poly("-2*y^2", &ord).unwrap()
        );

        let a = parse_poly("x^2 - 1", &ord).unwrap();
        let b = parse_poly("x - 2", &ord).unwrap();
        assert_eq!(resultant(&a, &b, x).unwrap(), parse_poly("3", &ord).unwrap());

        let g = parse_poly("x^2 + y^2 + z^2 - 1", &ord).unwrap();
        assert_eq!(
            resultant(&f1, &g, z).unwrap(),
            parse_poly("y^4 + 2*x*y^2 + 2*x^2 + y^2 - 1", &ord).unwrap()
        );
    }

    #[test]
    fn resultant_swap_sign() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let x = ord.lookup("x").unwrap();
        let p = parse_poly("x^3 + y", &ord).unwrap();
        let q = parse_poly("y*x^2 + x + 1", &ord).unwrap();
        let rpq = resultant(&p, &q, x).unwrap();
        let rqp = resultant(&q, &p, x).unwrap();
        // deg p * deg q = 6, even: symmetric here.
        assert_eq!(rpq, rqp);

        let p1 = parse_poly("x^2 + y", &ord).unwrap();
        let q1 = parse_poly("y*x + 1", &ord).unwrap();
        let r1 = resultant(&p1, &q1, x).unwrap();
        let r2 = resultant(&q1, &p1, x).unwrap();
        assert_eq!(r1, r2); // even * odd
    }

    #[test]
    fn resultant_rejects_degree_zero() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let y = ord.lookup("y").unwrap();
        let a = parse_poly("x^2 - 1", &ord).unwrap();
        let b = parse_poly("y + x", &ord).unwrap();
        assert!(resultant(&a, &b, y).is_err());
    }

    #[test]
    fn resultant_common_factor_is_zero() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let x = ord.lookup("x").unwrap();
        let f = parse_poly("x - y", &ord).unwrap();
        let p = f.mul(&parse_poly("x + 1", &ord).unwrap());
        let q = f.mul(&parse_poly("x + 2", &ord).unwrap());
        assert!(resultant(&p, &q, x).unwrap().is_zero());
    }

    #[test]
    fn discriminant_examples() {
        let ord = VarOrder::new(vec!["x", "y", "z"]);
        let x = ord.lookup("x").unwrap();
        let y = ord.lookup("y").unwrap();
        let z = ord.lookup("z").unwrap();

        let a = parse_poly("x^2 - 1", &ord).unwrap();
        assert_eq!(discriminant(&a, x).unwrap(), parse_poly("4", &ord).unwrap());

        let f1 = parse_poly("x + y^2 + z", &ord).unwrap();
        assert_eq!(discriminant(&f1, z).unwrap(), Polynomial::one(3));

        // disc(z^2 + c) = -4c.
        let s = parse_poly("z^2 + x - y", &ord).unwrap();
        assert_eq!(
            discriminant(&s, z).unwrap(),
            parse_poly("-4*x + 4*y", &ord).unwrap()
        );

        // Biquadratic: disc_y(y^4 + p y^2 + r) = 16 r (p^2 - 4r)^2.
        let q = parse_poly("y^4 + 2*x*y^2 + 2*x^2 + y^2 - 1", &ord).unwrap();
        let pq = parse_poly("2*x + 1", &ord).unwrap();
        let rq = parse_poly("2*x^2 - 1", &ord).unwrap();
        let expect = parse_poly("16", &ord)
            .unwrap()
            .mul(&rq)
            .mul(&pq.mul(&pq).sub(&rq.scale(&crate::polyring::rat_int(4))).pow(2));
        assert_eq!(discriminant(&q, y).unwrap(), expect);
    }
}

/// Dense rational coefficient vector of a univariate view.
fn dense_univariate(p: &Polynomial, v: Variable) -> Vec<Rat> {
    let d = p.degree(v) as usize;
    let mut out = vec![Rat::zero(); d + 1];
    for (m, c) in p.terms() {
        out[m.deg(v) as usize] += c;
    }
    out
}

/// Resultant of univariate rational coefficient vectors via the integer
/// subresultant sequence, with scale correction.
fn resultant_univariate_q(a: &[Rat], b: &[Rat]) -> Rat {
    use crate::realalg::UnivPoly;
    fn clear(v: &[Rat]) -> (Rat, UnivPoly) {
        let mut den = Int::one();
        for c in v {
            den = num_integer::Integer::lcm(&den, c.denom());
        }
        let ints: Vec<Int> = v.iter().map(|c| c.numer() * &den / c.denom()).collect();
        (Rat::new(Int::one(), den), UnivPoly::from_coeffs(ints))
    }
    fn rat_pow(r: &Rat, e: usize) -> Rat {
        let mut acc = Rat::one();
        for _ in 0..e {
            acc *= r;
        }
        acc
    }
    let (sa, pa) = clear(a);
    let (sb, pb) = clear(b);
    if pa.is_zero() || pb.is_zero() {
        return Rat::zero();
    }
    let r = pa.resultant_int(&pb);
    Rat::from_integer(r) * rat_pow(&sa, pb.degree()) * rat_pow(&sb, pa.degree())
}

/// Integer evaluation points 0, 1, -1, 2, -2, ...
fn eval_points() -> impl Iterator<Item = Rat> {
    (0i64..).flat_map(|k| {
        if k == 0 {
            vec![Rat::zero()]
        } else {
            vec![
                Rat::from_integer(Int::from(k)),
                Rat::from_integer(Int::from(-k)),
            ]
        }
    })
}

/// Newton-form interpolation over exact rationals; dense coefficients.
fn interpolate(points: &[(Rat, Rat)]) -> Vec<Rat> {
    let n = points.len();
    if n == 0 {
        return Vec::new();
    }
    let mut divided: Vec<Rat> = points.iter().map(|(_, y)| y.clone()).collect();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &divided[i] - &divided[i - 1];
            let den = &points[i].0 - &points[i - j].0;
            divided[i] = num / den;
        }
    }
    let mut coeffs: Vec<Rat> = vec![Rat::zero(); n];
    let mut basis: Vec<Rat> = vec![Rat::one()];
    for (i, d) in divided.iter().enumerate() {
        for (k, b) in basis.iter().enumerate() {
            coeffs[k] += d * b;
        }
        if i + 1 < n {
            let xi = &points[i].0;
            let mut next = vec![Rat::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * xi;
            }
            basis = next;
        }
    }
    while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
    coeffs
}

fn univariate_from_coeffs(nvars: usize, v: Variable, coeffs: &[Rat]) -> Polynomial {
    let dense: Vec<Polynomial> = coeffs
        .iter()
        .map(|c| Polynomial::constant(nvars, c.clone()))
        .collect();
    Polynomial::from_coeffs_dense(nvars, v, &dense)
}

fn interp_resultant_1var(
    a: &Polynomial,
    b: &Polynomial,
    v: Variable,
    u: Variable,
    degree_bound: usize,
) -> Polynomial {
    let nvars = a.nvars();
    let lc_a = a.ldcf(v);
    let lc_b = b.ldcf(v);
    let mut points: Vec<(Rat, Rat)> = Vec::new();
    for t in eval_points() {
        if points.len() > degree_bound {
            break;
        }
        if lc_a.subst_rational(u, &t).is_zero() || lc_b.subst_rational(u, &t).is_zero() {
            continue;
        }
        let pa = a.subst_rational(u, &t);
        let pb = b.subst_rational(u, &t);
        points.push((
            t,
            resultant_univariate_q(&dense_univariate(&pa, v), &dense_univariate(&pb, v)),
        ));
    }
    univariate_from_coeffs(nvars, u, &interpolate(&points))
}

fn interp_resultant_2var(
    a: &Polynomial,
    b: &Polynomial,
    v: Variable,
    u1: Variable,
    u2: Variable,
) -> Polynomial {
    let nvars = a.nvars();
    let d2 = (a.degree(u2) as usize) * (b.degree(v) as usize)
        + (b.degree(u2) as usize) * (a.degree(v) as usize);
    let d1 = (a.degree(u1) as usize) * (b.degree(v) as usize)
        + (b.degree(u1) as usize) * (a.degree(v) as usize);
    let lc_a = a.ldcf(v);
    let lc_b = b.ldcf(v);
    let mut lines: Vec<(Rat, Vec<Rat>)> = Vec::new();
    for t2 in eval_points() {
        if lines.len() > d2 {
            break;
        }
        let la = lc_a.subst_rational(u2, &t2);
        let lb = lc_b.subst_rational(u2, &t2);
        if la.is_zero() || lb.is_zero() {
            continue;
        }
        let a2 = a.subst_rational(u2, &t2);
        let b2 = b.subst_rational(u2, &t2);
        let mut pts: Vec<(Rat, Rat)> = Vec::new();
        for t1 in eval_points() {
            if pts.len() > d1 {
                break;
            }
            if la.subst_rational(u1, &t1).is_zero() || lb.subst_rational(u1, &t1).is_zero() {
                continue;
            }
            let pa = a2.subst_rational(u1, &t1);
            let pb = b2.subst_rational(u1, &t1);
            pts.push((
                t1,
                resultant_univariate_q(&dense_univariate(&pa, v), &dense_univariate(&pb, v)),
            ));
        }
        lines.push((t2, interpolate(&pts)));
    }
    let max_len = lines.iter().map(|(_, c)| c.len()).max().unwrap_or(0);
    let mut out = Polynomial::zero(nvars);
    for k in 0..max_len {
        let pts: Vec<(Rat, Rat)> = lines
            .iter()
            .map(|(t2, cs)| (t2.clone(), cs.get(k).cloned().unwrap_or_else(Rat::zero)))
            .collect();
        let ck = interpolate(&pts);
        let poly_u2 = univariate_from_coeffs(nvars, u2, &ck);
        let shift = Polynomial::variable(nvars, u1).pow(k as u32);
        out = out.add(&poly_u2.mul(&shift));
    }
    out
}

/// Same value as [`resultant`], choosing evaluation-interpolation when one
/// or two other variables remain and the expected point count is modest;
/// the subresultant sequence otherwise.
pub fn resultant_auto(a: &Polynomial, b: &Polynomial, v: Variable) -> Result<Polynomial, PolyError> {
    if a.is_zero() || b.is_zero() {
        return Err(PolyError::ZeroOperand("resultant"));
    }
    if a.degree(v) == 0 || b.degree(v) == 0 {
        return Err(PolyError::DegreeZero("resultant"));
    }
    let nvars = a.nvars().max(b.nvars());
    let a = a.clone().pad_to(nvars);
    let b = b.clone().pad_to(nvars);
    let mut others: Vec<Variable> = Vec::new();
    for p in [&a, &b] {
        for u in p.vars_present() {
            if u != v && !others.contains(&u) {
                others.push(u);
            }
        }
    }
    match others.len() {
        0 => {
            let ca = dense_univariate(&a, v);
            let cb = dense_univariate(&b, v);
            Ok(Polynomial::constant(nvars, resultant_univariate_q(&ca, &cb)))
        }
        1 => {
            let u = others[0];
            let bound = (a.degree(u) as usize) * (b.degree(v) as usize)
                + (b.degree(u) as usize) * (a.degree(v) as usize);
            Ok(interp_resultant_1var(&a, &b, v, u, bound))
        }
        2 => {
            let bound: usize = others
                .iter()
                .map(|&u| {
                    (a.degree(u) as usize) * (b.degree(v) as usize)
                        + (b.degree(u) as usize) * (a.degree(v) as usize)
                        + 1
                })
                .product();
            if bound <= 40_000 {
                Ok(interp_resultant_2var(&a, &b, v, others[0], others[1]))
            } else {
                resultant(&a, &b, v)
            }
        }
        _ => resultant(&a, &b, v),
    }
}
