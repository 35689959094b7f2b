//! Squarefree parts, layered primitive squarefree factor extraction, and
//! finest squarefree bases by gcd splitting. No irreducible factorization
//! is performed anywhere.

use super::gcd::{content_primpart, gcd};
use super::{exact_div, Polynomial, PolyError, PolySet, Variable};

/// Squarefree part of `p` with respect to `v`: `p / gcd(p, dp/dv)`.
/// The result is canonicalized.
pub fn squarefree_part(p: &Polynomial, v: Variable) -> Result<Polynomial, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroOperand("squarefree_part"));
    }
    if p.degree(v) == 0 {
        return Err(PolyError::FreeOfVariable("squarefree_part"));
    }
    let dp = p.derivative(v);
    let g = gcd(p, &dp)?;
    let q = exact_div(&p.canonical(), &g).expect("gcd divides");
    Ok(q.canonical())
}

/// Layered canonical factor extraction for projection outputs: repeatedly
/// strips the content with respect to the main variable, keeping the
/// squarefree part of each primitive layer. Constants yield nothing.
pub fn primitive_squarefree_factors(p: &Polynomial) -> Vec<Polynomial> {
    let mut out = Vec::new();
    let mut cur = p.clone();
    while let Some(v) = cur.mvar() {
        let (content, prim) = content_primpart(&cur, v).expect("nonconstant input");
        if prim.degree(v) > 0 {
            let sf = squarefree_part(&prim, v).expect("positive degree");
            if !sf.is_constant() {
                out.push(sf);
            }
        }
        cur = content;
    }
    out
}

/// Finest squarefree basis for `s` with respect to `v`: pairwise-coprime
/// squarefree canonical polynomials whose power products generate every
/// element of `s` up to constants. Splitting is by gcd only.
pub fn squarefree_basis(s: &PolySet, v: Variable) -> Result<PolySet, PolyError> {
    let mut work: Vec<Polynomial> = Vec::new();
    for p in s.iter() {
        if p.degree(v) == 0 {
            return Err(PolyError::FreeOfVariable("squarefree_basis"));
        }
        let (_, prim) = content_primpart(p, v)?;
        let sf = squarefree_part(&prim, v)?;
        if !sf.is_constant() && !work.contains(&sf) {
            work.push(sf);
        }
    }
    'refine: loop {
        for i in 0..work.len() {
            for j in (i + 1)..work.len() {
                let g = gcd(&work[i], &work[j])?;
                if g.is_constant() {
                    continue;
                }
                let a = exact_div(&work[i], &g).expect("gcd divides").canonical();
                let b = exact_div(&work[j], &g).expect("gcd divides").canonical();
                // Replace the pair by its coprime refinement.
                let mut next: Vec<Polynomial> = Vec::new();
                for (k, q) in work.iter().enumerate() {
                    if k != i && k != j {
                        next.push(q.clone());
                    }
                }
                for q in [a, b, g] {
                    if !q.is_constant() && !next.contains(&q) {
                        next.push(q);
                    }
                }
                work = next;
                continue 'refine;
            }
        }
        break;
    }
    Ok(work.iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_poly;
    use crate::polyring::VarOrder;

    #[test]
    fn squarefree_part_collapses_powers() {
        let ord = VarOrder::new(vec!["v", "u", "x", "y"]);
        let y = ord.lookup("y").unwrap();
        let r1 = parse_poly("v^2 - u^2 + y - x - 1", &ord).unwrap();
        let sq = r1.mul(&r1);
        assert_eq!(squarefree_part(&sq, y).unwrap(), r1.canonical());
    }

    #[test]
    fn factor_layers_split_content() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let p = parse_poly("y^2", &ord)
            .unwrap()
            .mul(&parse_poly("x^2 - 1", &ord).unwrap());
        let fs = primitive_squarefree_factors(&p);
        let set: PolySet = fs.iter().collect();
        assert!(set.contains(&parse_poly("x^2 - 1", &ord).unwrap()));
        assert!(set.contains(&parse_poly("y", &ord).unwrap()));
        assert_eq!(set.len(), 2);
    }

    #[test]
    fn finest_basis_by_gcd_splitting() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let y1 = parse_poly("y - 1", &ord).unwrap();
        let y2 = parse_poly("y + 2", &ord).unwrap();
        let y3 = parse_poly("y + 3", &ord).unwrap();
        let mut s = PolySet::new();
        s.insert(&y1.pow(2).mul(&y2));
        s.insert(&y1.mul(&y3));
        let v = ord.lookup("y").unwrap();
        let basis = squarefree_basis(&s, v).unwrap();
        let expect: PolySet = [y1, y2, y3].iter().collect();
        assert_eq!(basis, expect);
    }

    #[test]
    fn basis_keeps_irreducible_like_inputs() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let q = parse_poly("y^4 + 2*x*y^2 + 2*x^2 + y^2 - 1", &ord).unwrap();
        let mut s = PolySet::new();
        s.insert(&q);
        let basis = squarefree_basis(&s, ord.lookup("y").unwrap()).unwrap();
        assert_eq!(basis.len(), 1);
        assert!(basis.contains(&q));
    }

    #[test]
    fn basis_rejects_free_elements() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let mut s = PolySet::new();
        s.insert(&parse_poly("x - 1", &ord).unwrap());
        assert!(squarefree_basis(&s, ord.lookup("y").unwrap()).is_err());
    }

    #[test]
    fn basis_splits_shared_quadratic_factor() {
        // u^4 - 2u^2v^2 + v^4 + 2u^2 - 2v^2 = (u^2 - v^2)(u^2 - v^2 + 2).
        let ord = VarOrder::new(vec!["v", "u"]);
        let u = ord.lookup("u").unwrap();
        let mut s = PolySet::new();
        s.insert(&parse_poly("u^2 - v^2", &ord).unwrap());
        s.insert(&parse_poly("u^2 - v^2 + 1", &ord).unwrap());
        s.insert(&parse_poly("u^4 - 2*u^2*v^2 + v^4 + 2*u^2 - 2*v^2", &ord).unwrap());
        let basis = squarefree_basis(&s, u).unwrap();
        let expect: PolySet = [
            parse_poly("u^2 - v^2", &ord).unwrap(),
            parse_poly("u^2 - v^2 + 1", &ord).unwrap(),
            parse_poly("u^2 - v^2 + 2", &ord).unwrap(),
        ]
        .iter()
        .collect();
        assert_eq!(basis, expect);
    }
}
