//! Multivariate gcd via primitive polynomial remainder sequences, and the
//! content / primitive-part split used throughout projection.

use super::{exact_div, pseudo_rem, Int, Polynomial, PolyError, Rat, Variable};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer content of an integer-coefficient polynomial (positive).
fn int_content(p: &Polynomial) -> Int {
    let mut g = Int::zero();
    for (_, c) in p.terms() {
        debug_assert!(c.denom().is_one());
        g = g.gcd(c.numer());
    }
    g
}

fn normalize_sign(p: Polynomial) -> Polynomial {
    if p.grlex_leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
        p.neg()
    } else {
        p
    }
}

/// Content of an integer polynomial with respect to `v`: the gcd of its
/// coefficients viewed in `v`, integer content included, sign positive.
fn content_z(p: &Polynomial, v: Variable) -> Polynomial {
    let mut acc: Option<Polynomial> = None;
    for c in p.coeffs_dense(v) {
        if c.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => normalize_sign(c),
            Some(g) => gcd_z(&g, &c),
        });
        if acc.as_ref().map(|g| g.is_constant()).unwrap_or(false) {
            // A constant gcd can still shrink through the integer part,
            // so keep folding only while the content stays nonunit.
            if acc
                .as_ref()
                .and_then(|g| g.constant_value())
                .map(|k| k.numer().is_one() && k.denom().is_one())
                .unwrap_or(false)
            {
                break;
            }
        }
    }
    acc.unwrap_or_else(|| Polynomial::one(p.nvars()))
}

/// Gcd of two integer-coefficient polynomials in Z[x1..xn], sign-normalized
/// positive, integer content preserved.
fn gcd_z(p: &Polynomial, q: &Polynomial) -> Polynomial {
    if p.is_zero() {
        return normalize_sign(q.clone());
    }
    if q.is_zero() {
        return normalize_sign(p.clone());
    }
    let pc = int_content(p);
    let qc = int_content(q);
    let ig = pc.gcd(&qc);
    let pp = p.scale(&Rat::new(Int::from(1), pc));
    let qq = q.scale(&Rat::new(Int::from(1), qc));
    if pp.is_constant() || qq.is_constant() {
        return Polynomial::constant(p.nvars().max(q.nvars()), Rat::from_integer(ig));
    }
    // Fast paths for one and two involved variables.
    {
        let mut vars = pp.vars_present();
        for v in qq.vars_present() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        vars.sort();
        if vars.len() == 1 {
            let v = vars[0];
            let a = crate::realalg::UnivPoly::from_polynomial(&pp, v).expect("univariate");
            let b = crate::realalg::UnivPoly::from_polynomial(&qq, v).expect("univariate");
            let g = super::fastgcd::gcd_univariate_int(&a, &b);
            let nvars = p.nvars().max(q.nvars());
            return normalize_sign(
                g.to_polynomial(nvars, v).scale(&Rat::from_integer(ig)),
            );
        }
        if vars.len() == 2 {
            let (u, v) = (vars[0], vars[1]);
            if pp.degree(v) >= 1 && qq.degree(v) >= 1 {
                if let Some(g) = super::fastgcd::gcd_bivariate_int(&pp, &qq, u, v) {
                    return normalize_sign(g.scale(&Rat::from_integer(ig)));
                }
            } else if pp.degree(u) >= 1 && qq.degree(u) >= 1 && pp.degree(v) == 0 && qq.degree(v) == 0
            {
                // both actually univariate in u
                let a = crate::realalg::UnivPoly::from_polynomial(&pp, u).expect("univariate");
                let b = crate::realalg::UnivPoly::from_polynomial(&qq, u).expect("univariate");
                let g = super::fastgcd::gcd_univariate_int(&a, &b);
                let nvars = p.nvars().max(q.nvars());
                return normalize_sign(
                    g.to_polynomial(nvars, u).scale(&Rat::from_integer(ig)),
                );
            }
        }
    }
    let v = match (pp.mvar(), qq.mvar()) {
        (Some(a), Some(b)) => a.max(b),
        _ => unreachable!("nonconstant polynomials have a main variable"),
    };
    if pp.degree(v) == 0 {
        let inner = gcd_z(&pp, &content_z(&qq, v));
        return normalize_sign(inner.scale(&Rat::from_integer(ig)));
    }
    if qq.degree(v) == 0 {
        let inner = gcd_z(&qq, &content_z(&pp, v));
        return normalize_sign(inner.scale(&Rat::from_integer(ig)));
    }
    let cp = content_z(&pp, v);
    let cq = content_z(&qq, v);
    let cont_gcd = gcd_z(&cp, &cq);
    let mut a = exact_div(&pp, &cp).expect("content divides");
    let mut b = exact_div(&qq, &cq).expect("content divides");
    if a.degree(v) < b.degree(v) {
        std::mem::swap(&mut a, &mut b);
    }
    // Primitive PRS on the primitive parts.
    let prim_gcd = loop {
        if b.is_zero() {
            break primitive_part_z(&a, v);
        }
        if b.degree(v) == 0 {
            break Polynomial::one(a.nvars());
        }
        let r = pseudo_rem(&a, &b, v);
        a = b;
        b = if r.is_zero() {
            r
        } else {
            primitive_part_z(&r, v)
        };
    };
    normalize_sign(cont_gcd.mul(&prim_gcd).scale(&Rat::from_integer(ig)))
}

fn primitive_part_z(p: &Polynomial, v: Variable) -> Polynomial {
    let (_, pi) = p.rational_scale_split();
    let c = content_z(&pi, v);
    normalize_sign(exact_div(&pi, &c).expect("content divides"))
}

/// Clears rational denominators only, keeping the integer content.
fn clear_denominators(p: &Polynomial) -> Polynomial {
    let mut den = Int::one();
    for (_, c) in p.terms() {
        den = den.lcm(c.denom());
    }
    p.scale(&Rat::from_integer(den))
}

/// Gcd preserving integer content, sign-normalized positive. Rational
/// denominators are cleared first (the gcd is defined up to units).
pub fn gcd_raw(p: &Polynomial, q: &Polynomial) -> Polynomial {
    gcd_z(&clear_denominators(p), &clear_denominators(q))
}

/// Greatest common divisor in canonical form; `gcd(p, 0) = canonical(p)`.
pub fn gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, PolyError> {
    if p.is_zero() && q.is_zero() {
        return Err(PolyError::ZeroOperand("gcd"));
    }
    if p.is_zero() {
        return Ok(q.canonical());
    }
    if q.is_zero() {
        return Ok(p.canonical());
    }
    Ok(gcd_raw(p, q).canonical())
}

/// Splits `p` into `(content, primitive)` with respect to `v`:
/// `p = content * primitive`, the content free of `v`, the primitive part
/// carrying a positive leading coefficient under graded-lex.
/// For `p` free of `v` the primitive part is 1 and the content is `p`.
pub fn content_primpart(p: &Polynomial, v: Variable) -> Result<(Polynomial, Polynomial), PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroOperand("content_primpart"));
    }
    if p.degree(v) == 0 {
        return Ok((p.clone(), Polynomial::one(p.nvars())));
    }
    let (scale, pi) = p.rational_scale_split();
    let core = content_z(&pi, v);
    let mut prim = exact_div(&pi, &core).expect("content divides");
    let mut content = core.scale(&scale);
    if prim
        .grlex_leading()
        .map(|(_, c)| c.is_negative())
        .unwrap_or(false)
    {
        prim = prim.neg();
        content = content.neg();
    }
    debug_assert_eq!(&content.mul(&prim), p);
    Ok((content, prim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_poly;
    use crate::polyring::VarOrder;

    #[test]
    fn content_primpart_examples() {
        let ord = VarOrder::new(vec!["x", "y", "z"]);
        let y = ord.lookup("y").unwrap();
        let z = ord.lookup("z").unwrap();

        let p = parse_poly("2*x*y^2 + 4*x", &ord).unwrap();
        let (c, pr) = content_primpart(&p, y).unwrap();
        assert_eq!(c, parse_poly("2*x", &ord).unwrap());
        assert_eq!(pr, parse_poly("y^2 + 2", &ord).unwrap());

        let q = parse_poly("y*z + x", &ord).unwrap();
        let (c, pr) = content_primpart(&q, z).unwrap();
        assert_eq!(c, parse_poly("1", &ord).unwrap());
        assert_eq!(pr, q);

        let r = parse_poly("-2*y^2", &ord).unwrap();
        let (c, pr) = content_primpart(&r, y).unwrap();
        assert_eq!(c, parse_poly("-2", &ord).unwrap());
        assert_eq!(pr, parse_poly("y^2", &ord).unwrap());

        // Reconstruction holds on a rational-coefficient input too.
        let s = parse_poly("1/2*x*y^2 + x", &ord).unwrap();
        let (c, pr) = content_primpart(&s, y).unwrap();
        assert_eq!(c.mul(&pr), s);
    }

    #[test]
    fn content_free_of_variable() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let y = ord.lookup("y").unwrap();
        let p = parse_poly("x^2 - 1", &ord).unwrap();
        let (c, pr) = content_primpart(&p, y).unwrap();
        assert_eq!(c, p);
        assert!(pr.constant_value().is_some());
    }

    #[test]
    fn gcd_examples() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let y1 = parse_poly("y - 1", &ord).unwrap();
        let y2 = parse_poly("y + 2", &ord).unwrap();
        let y3 = parse_poly("y + 3", &ord).unwrap();
        let p = y1.pow(2).mul(&y2);
        let q = y1.mul(&y3);
        assert_eq!(gcd(&p, &q).unwrap(), y1);

        let s = parse_poly("x^2 - 1", &ord).unwrap();
        let t = parse_poly("x - 2", &ord).unwrap();
        assert_eq!(gcd(&s, &t).unwrap(), Polynomial::one(2));

        assert_eq!(gcd(&p, &p).unwrap(), p.canonical());
        assert_eq!(gcd(&p, &Polynomial::zero(2)).unwrap(), p.canonical());
        assert!(gcd(&Polynomial::zero(2), &Polynomial::zero(2)).is_err());
    }

    #[test]
    fn gcd_raw_keeps_integer_content() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let a = parse_poly("2*x", &ord).unwrap();
        let b = parse_poly("4*x", &ord).unwrap();
        assert_eq!(gcd_raw(&a, &b), a);
        // The canonical gcd strips it.
        assert_eq!(gcd(&a, &b).unwrap(), parse_poly("x", &ord).unwrap());
    }
}
