//! The three projection operators and the projection-phase driver,
//! producing the leveled polynomial families consumed by lifting.
//!
//! Every operator output is canonicalized into primitive squarefree
//! factor layers with constants dropped, so displayed sets from different
//! normalizations compare equal as canonical sets.

use crate::ecprep::Designation;
use crate::polyring::{
    content_primpart, discriminant, exact_div, resultant_auto, squarefree_basis, PolyError,
    PolySet, Polynomial, VarOrder, Variable,
};

/// Which operator a level used.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OperatorUsed {
    /// Full sign-invariant operator: resultants, discriminants,
    /// coefficients of the whole basis.
    P,
    /// Reduced operator: the constraint part plus cross resultants only.
    Pf,
    /// Reduced operator plus discriminants and coefficients of the
    /// non-constraint part.
    PfStar,
    None,
}

impl OperatorUsed {
    pub fn text(self) -> &'static str {
        match self {
            OperatorUsed::P => "P",
            OperatorUsed::Pf => "PF",
            OperatorUsed::PfStar => "PFstar",
            OperatorUsed::None => "none",
        }
    }
}

/// Coefficient pruning: emit coefficients from the leading one downward,
/// stopping at the first nonzero-constant coefficient; identically zero
/// coefficients are skipped. If no coefficient is constant, all are kept.
fn pruned_coefficients(p: &Polynomial, v: Variable) -> Vec<Polynomial> {
    let mut out = Vec::new();
    let mut dense = p.coeffs_dense(v);
    dense.reverse();
    for c in dense {
        if c.is_zero() {
            continue;
        }
        if c.is_constant() {
            break;
        }
        out.push(c);
    }
    out
}

fn trace(label: &str, t0: std::time::Instant) {
    if std::env::var("ECCAD_TRACE").is_ok() && t0.elapsed().as_millis() > 100 {
        eprintln!("[trace] projection {label} took {:?}", t0.elapsed());
    }
}

fn insert_disc(out: &mut PolySet, p: &Polynomial, v: Variable) -> Result<(), PolyError> {
    if p.degree(v) >= 1 {
        let t0 = std::time::Instant::now();
        let d = discriminant(p, v)?;
        trace("discriminant", t0);
        if !d.is_zero() {
            let t1 = std::time::Instant::now();
            out.insert_factors(&d);
            trace("disc factors", t1);
        }
    }
    Ok(())
}

fn insert_res(out: &mut PolySet, p: &Polynomial, q: &Polynomial, v: Variable) -> Result<(), PolyError> {
    let t0 = std::time::Instant::now();
    let r = resultant_auto(p, q, v)?;
    trace("resultant", t0);
    if !r.is_zero() {
        let t1 = std::time::Instant::now();
        out.insert_factors(&r);
        trace("res factors", t1);
    }
    Ok(())
}

/// The sign-invariant operator: all pairwise resultants, all
/// discriminants, and pruned coefficients of the basis.
pub fn proj_p(basis: &PolySet, v: Variable) -> Result<PolySet, PolyError> {
    let elems = basis.to_vec();
    let mut out = PolySet::new();
    for (i, p) in elems.iter().enumerate() {
        for q in elems.iter().skip(i + 1) {
            insert_res(&mut out, p, q, v)?;
        }
        insert_disc(&mut out, p, v)?;
        for c in pruned_coefficients(p, v) {
            out.insert_factors(&c);
        }
    }
    Ok(out)
}

/// The constraint-reduced operator: the full operator on the constraint
/// part plus resultants of constraint elements against the rest. No
/// discriminants or coefficients of the rest, and no resultants within it.
pub fn proj_pf(basis: &PolySet, constraint: &PolySet, v: Variable) -> Result<PolySet, PolyError> {
    debug_assert!(constraint.iter().all(|f| basis.contains(f)));
    let mut out = proj_p(constraint, v)?;
    for f in constraint.iter() {
        for g in basis.iter() {
            if constraint.contains(g) {
                continue;
            }
            insert_res(&mut out, f, g, v)?;
        }
    }
    Ok(out)
}

/// The order-invariant strengthening: the reduced operator plus
/// discriminants and pruned coefficients of the non-constraint part.
/// Resultants of pairs outside the constraint stay excluded.
pub fn proj_pf_star(
    basis: &PolySet,
    constraint: &PolySet,
    v: Variable,
) -> Result<PolySet, PolyError> {
    let mut out = proj_pf(basis, constraint, v)?;
    for g in basis.iter() {
        if constraint.contains(g) {
            continue;
        }
        insert_disc(&mut out, g, v)?;
        for c in pruned_coefficients(g, v) {
            out.insert_factors(&c);
        }
    }
    Ok(out)
}

/// One level of the projection bookkeeping.
#[derive(Clone, Debug)]
pub struct Layer {
    /// Working polynomials at this level (mixed main variables).
    pub a: PolySet,
    /// Finest squarefree basis of the primitive parts with this level's
    /// main variable.
    pub b: PolySet,
    /// Basis factors of the designated constraint, a subset of `b`.
    pub f: PolySet,
    /// Contents extracted at this level (pass down to the next).
    pub c: PolySet,
    pub operator: OperatorUsed,
}

/// The full projection output, levels indexed 1..=n.
#[derive(Clone, Debug)]
pub struct ProjectionLayers {
    layers: Vec<Layer>,
}

impl ProjectionLayers {
    pub fn level(&self, k: usize) -> &Layer {
        &self.layers[k - 1]
    }

    pub fn nvars(&self) -> usize {
        self.layers.len()
    }
}

/// Splits the level-k working set into contents and a squarefree basis,
/// and locates the designated constraint's factors inside the basis.
fn split_level(
    a: &PolySet,
    designated: Option<&Polynomial>,
    v: Variable,
) -> Result<(PolySet, PolySet, PolySet), PolyError> {
    let mut contents = PolySet::new();
    let mut prims = PolySet::new();
    for p in a.iter() {
        if p.degree(v) == 0 {
            contents.insert_factors(p);
            continue;
        }
        let (cont, prim) = content_primpart(p, v)?;
        if !cont.is_constant() {
            contents.insert_factors(&cont);
        }
        prims.insert(&prim);
    }
    let b = squarefree_basis(&prims, v)?;
    let mut f = PolySet::new();
    if let Some(e) = designated {
        for factor in b.iter() {
            if exact_div(e, factor).is_some() {
                f.insert(factor);
            }
        }
        debug_assert!(!f.is_empty(), "designated constraint must factor into the basis");
    }
    Ok((contents, b, f))
}

/// Runs the projection phase: for k = n down to 2, split off contents,
/// form the basis, apply the operator selected by the designation, and
/// seed the next level. The designated polynomial at each level picks
/// the reduced operator; the first and last projections use the plain
/// reduced operator, interior ones the strengthened version.
pub fn projection_phase(
    a_n: &PolySet,
    designation: &Designation,
    nvars: usize,
) -> Result<ProjectionLayers, PolyError> {
    let mut layers: Vec<Layer> = (0..nvars)
        .map(|_| Layer {
            a: PolySet::new(),
            b: PolySet::new(),
            f: PolySet::new(),
            c: PolySet::new(),
            operator: OperatorUsed::None,
        })
        .collect();
    let mut current = a_n.clone();
    for k in (1..=nvars).rev() {
        let v = Variable::from_level(k);
        let designated = designation.at_level(k).map(|e| &e.poly);
        let (contents, b, f) = split_level(&current, designated, v)?;
        let operator = if k == 1 {
            OperatorUsed::None
        } else if f.is_empty() {
            OperatorUsed::P
        } else if k == nvars || k == 2 {
            OperatorUsed::Pf
        } else {
            OperatorUsed::PfStar
        };
        let next = if k == 1 {
            PolySet::new()
        } else {
            let projected = match operator {
                OperatorUsed::P => proj_p(&b, v)?,
                OperatorUsed::Pf => proj_pf(&b, &f, v)?,
                OperatorUsed::PfStar => proj_pf_star(&b, &f, v)?,
                OperatorUsed::None => unreachable!(),
            };
            contents.union(&projected)
        };
        layers[k - 1] = Layer {
            a: current.clone(),
            b,
            f,
            c: contents,
            operator,
        };
        current = next;
    }
    Ok(ProjectionLayers { layers })
}

/// JSON document for `--dump-projection`: per level, the canonical text of
/// the working set, basis, constraint factors, contents, and operator.
pub fn projection_to_json(layers: &ProjectionLayers, order: &VarOrder) -> serde_json::Value {
    let mut levels = Vec::new();
    for k in (1..=layers.nvars()).rev() {
        let layer = layers.level(k);
        let texts = |s: &PolySet| -> Vec<String> { s.iter().map(|p| p.to_text(order)).collect() };
        levels.push(serde_json::json!({
            "level": k,
            "variable": order.name(Variable::from_level(k)),
            "A": texts(&layer.a),
            "B": texts(&layer.b),
            "F": texts(&layer.f),
            "C": texts(&layer.c),
            "operator": layer.operator.text(),
        }));
    }
    serde_json::json!({ "levels": levels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ecprep::{designate, EcSource, Strategy};
    use crate::formula::{parse_poly, parse_problem};

    fn set(ord: &VarOrder, texts: &[&str]) -> PolySet {
        texts
            .iter()
            .map(|t| parse_poly(t, ord).unwrap())
            .collect()
    }

    #[test]
    fn plain_operator_on_circle() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let b = set(&ord, &["x^2 + y^2 - 1"]);
        let y = ord.lookup("y").unwrap();
        let out = proj_p(&b, y).unwrap();
        assert_eq!(out, set(&ord, &["x^2 - 1"]));
    }

    #[test]
    fn reduced_operator_keeps_cross_resultants_only() {
        let ord = VarOrder::new(vec!["x", "y", "z"]);
        let z = ord.lookup("z").unwrap();
        let b = set(&ord, &["x + y^2 + z", "x - y^2 + z", "x^2 + y^2 + z^2 - 1"]);
        let f = set(&ord, &["x + y^2 + z"]);
        let out = proj_pf(&b, &f, z).unwrap();
        assert_eq!(out, set(&ord, &["y", "y^4 + 2*x*y^2 + 2*x^2 + y^2 - 1"]));
    }

    #[test]
    fn reduced_operator_second_level() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let y = ord.lookup("y").unwrap();
        let b = set(&ord, &["y", "y^4 + 2*x*y^2 + 2*x^2 + y^2 - 1"]);
        let f = set(&ord, &["y"]);
        let out = proj_pf(&b, &f, y).unwrap();
        assert_eq!(out, set(&ord, &["2*x^2 - 1"]));
    }

    #[test]
    fn star_operator_equals_pf_when_constraint_is_whole_basis() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let y = ord.lookup("y").unwrap();
        let b = set(&ord, &["y^2 - x", "y + x"]);
        let out_pf = proj_pf(&b, &b, y).unwrap();
        let out_p = proj_p(&b, y).unwrap();
        assert_eq!(out_pf, out_p);
    }

    #[test]
    fn operator_chain_inclusion() {
        let ord = VarOrder::new(vec!["x", "y"]);
        let y = ord.lookup("y").unwrap();
        let b = set(&ord, &["y^2 - x", "y^2 + x^2 - 2", "y + x^2"]);
        let f = set(&ord, &["y^2 - x"]);
        let pf = proj_pf(&b, &f, y).unwrap();
        let star = proj_pf_star(&b, &f, y).unwrap();
        let full = proj_p(&b, y).unwrap();
        for p in pf.iter() {
            assert!(star.contains(p));
        }
        for p in star.iter() {
            assert!(full.contains(p));
        }
    }

    #[test]
    fn projection_phase_on_sphere_pair() {
        let prob = parse_problem(
            "vars: x < y < z\n\
             let f1 = x + y^2 + z\n\
             let f2 = x - y^2 + z\n\
             let g  = x^2 + y^2 + z^2 - 1\n\
             formula: f1 = 0 /\\ f2 = 0 /\\ g >= 0\n",
        )
        .unwrap();
        let f1 = parse_poly("x + y^2 + z", &prob.order).unwrap();
        let yy = parse_poly("y", &prob.order).unwrap();
        let out = designate(
            &prob.formula,
            3,
            EcSource::Propagate,
            &Strategy::Forced(vec![f1, yy]),
        )
        .unwrap();
        let layers = projection_phase(&out.working_set, &out.designation, 3).unwrap();
        assert_eq!(
            layers.level(2).a,
            set(&prob.order, &["y", "y^4 + 2*x*y^2 + 2*x^2 + y^2 - 1"])
        );
        assert_eq!(layers.level(1).a, set(&prob.order, &["2*x^2 - 1"]));
        assert_eq!(layers.level(3).operator, OperatorUsed::Pf);
        assert_eq!(layers.level(2).operator, OperatorUsed::Pf);
        assert_eq!(layers.level(1).operator, OperatorUsed::None);
    }
}
