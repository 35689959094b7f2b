//! Reduced Groebner bases under pure lexicographic order (greatest
//! variable most significant), by Buchberger's algorithm with the
//! coprime-leading-term and chain criteria, followed by full
//! inter-reduction.

use crate::polyring::{Monomial, PolySet, Polynomial, Rat};
use num_traits::One;
use std::collections::BTreeSet;

fn lex_lm(p: &Polynomial) -> (Monomial, Rat) {
    let (m, c) = p.lex_leading().expect("nonzero polynomial");
    (m.clone(), c.clone())
}

/// Fully reduces `p` modulo `basis` (leading and tail terms).
fn normal_form(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let nvars = p.nvars();
    let mut rem = Polynomial::zero(nvars);
    let mut cur = p.clone();
    'outer: while !cur.is_zero() {
        let (lm, lc) = lex_lm(&cur);
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (gm, gc) = lex_lm(g);
            if let Some(q) = lm.div(&gm) {
                let factor = Polynomial::from_terms(nvars, [(q, &lc / &gc)]);
                cur = cur.sub(&factor.mul(g));
                continue 'outer;
            }
        }
        // Leading term irreducible: move it to the remainder.
        let t = Polynomial::from_terms(nvars, [(lm.clone(), lc.clone())]);
        rem = rem.add(&t);
        cur = cur.sub(&t);
    }
    rem
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let nvars = f.nvars();
    let (fm, fc) = lex_lm(f);
    let (gm, gc) = lex_lm(g);
    let l = fm.lcm(&gm);
    let uf = Polynomial::from_terms(nvars, [(l.div(&fm).unwrap(), Rat::one() / fc)]);
    let ug = Polynomial::from_terms(nvars, [(l.div(&gm).unwrap(), Rat::one() / gc)]);
    uf.mul(f).sub(&ug.mul(g))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroebnerOutcome {
    /// The ideal is the whole ring: the equations are unsatisfiable.
    Unit,
    /// Reduced basis, canonicalized (integer-primitive, sign-normalized),
    /// sorted for determinism.
    Basis(Vec<Polynomial>),
}

/// Reduced Groebner basis of the ideal generated by `gens` under pure lex
/// with the greatest variable most significant.
pub fn groebner_basis(gens: &[Polynomial], nvars: usize) -> GroebnerOutcome {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            let c = g.clone().pad_to(nvars).canonical();
            if c.is_constant() {
                return GroebnerOutcome::Unit;
            }
            if !basis.contains(&c) {
                basis.push(c);
            }
        }
    }
    if basis.is_empty() {
        return GroebnerOutcome::Basis(Vec::new());
    }

    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.insert((i, j));
        }
    }
    while let Some(&(i, j)) = pairs.iter().next() {
        pairs.remove(&(i, j));
        let (fi, fj) = (&basis[i], &basis[j]);
        let (mi, _) = lex_lm(fi);
        let (mj, _) = lex_lm(fj);
        // Buchberger's first criterion: coprime leading monomials.
        if mi.coprime(&mj) {
            continue;
        }
        // Chain criterion: a third element whose leading monomial divides
        // the lcm, with both mixed pairs already handled.
        let l = mi.lcm(&mj);
        let mut skip = false;
        for (k, fk) in basis.iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            let (mk, _) = lex_lm(fk);
            if l.div(&mk).is_some() {
                let p1 = (i.min(k), i.max(k));
                let p2 = (j.min(k), j.max(k));
                if !pairs.contains(&p1) && !pairs.contains(&p2) {
                    skip = true;
                    break;
                }
            }
        }
        if skip {
            continue;
        }
        let s = s_polynomial(fi, fj);
        let r = normal_form(&s, &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return GroebnerOutcome::Unit;
        }
        let r = r.canonical();
        let new_idx = basis.len();
        for k in 0..new_idx {
            pairs.insert((k, new_idx));
        }
        basis.push(r);
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another's.
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let (mi, _) = lex_lm(&basis[i]);
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (mj, _) = lex_lm(&basis[j]);
            if mi.div(&mj).is_some() && (mi != mj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(g, _)| g)
        .collect();

    // Full inter-reduction of tails.
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let r = normal_form(&minimal[i], &others).canonical();
            if r != minimal[i] {
                minimal[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    minimal.retain(|g| !g.is_zero());
    minimal.sort();
    GroebnerOutcome::Basis(minimal)
}

/// Normal form of `p` modulo the basis (exposed for ideal-membership
/// checks in validation).
pub fn reduce_modulo(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    normal_form(p, basis)
}

/// The basis as a canonical set.
pub fn basis_as_set(outcome: &GroebnerOutcome) -> PolySet {
    match outcome {
        GroebnerOutcome::Unit => PolySet::new(),
        GroebnerOutcome::Basis(gs) => gs.iter().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_poly;
    use crate::polyring::VarOrder;

    #[test]
    fn simple_pair_reduces() {
        let ord = VarOrder::new(vec!["x", "y", "z"]);
        let f1 = parse_poly("x + y^2 + z", &ord).unwrap();
        let f2 = parse_poly("x - y^2 + z", &ord).unwrap();
        match groebner_basis(&[f1, f2], 3) {
            GroebnerOutcome::Basis(gs) => {
                let set: PolySet = gs.iter().collect();
                let expect: PolySet = [
                    parse_poly("y^2", &ord).unwrap(),
                    parse_poly("z + x", &ord).unwrap(),
                ]
                .iter()
                .collect();
                assert_eq!(set, expect);
            }
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn unit_ideal_detected() {
        let ord = VarOrder::new(vec!["x"]);
        let a = parse_poly("x^2 - 1", &ord).unwrap();
        let b = parse_poly("x - 2", &ord).unwrap();
        assert_eq!(groebner_basis(&[a, b], 1), GroebnerOutcome::Unit);
    }

    #[test]
    fn inputs_reduce_to_zero_modulo_basis() {
        let ord = VarOrder::new(vec!["w", "x", "y", "z"]);
        let f1 = parse_poly("x*y - z^2 - w^2 + 2*z", &ord).unwrap();
        let f2 = parse_poly("x^2 + y^2 + z^2 + w + z", &ord).unwrap();
        let f3 = parse_poly("-w^2 - y^2 - z^2 + x + z", &ord).unwrap();
        match groebner_basis(&[f1.clone(), f2.clone(), f3.clone()], 4) {
            GroebnerOutcome::Basis(gs) => {
                for f in [&f1, &f2, &f3] {
                    assert!(reduce_modulo(f, &gs).is_zero());
                }
                // Every S-polynomial of basis pairs reduces to zero.
                for i in 0..gs.len() {
                    for j in (i + 1)..gs.len() {
                        let s = s_polynomial(&gs[i], &gs[j]);
                        assert!(reduce_modulo(&s, &gs).is_zero());
                    }
                }
            }
            other => panic!("unexpected: {other:?}"),
        }
    }
}
