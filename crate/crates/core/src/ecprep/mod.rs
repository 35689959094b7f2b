//! Identification, derivation, and designation of the per-level
//! equational constraints that drive reduced projection and lifting.
//!
//! Candidates come from three sources: explicit equations in the formula,
//! closure of those under iterated resultants, or a reduced lexicographic
//! Groebner basis of the equation ideal.

mod groebner;

pub use groebner::{basis_as_set, groebner_basis, reduce_modulo, GroebnerOutcome};

use crate::formula::{Atom, Formula, Rel};
use crate::polyring::{
    content_primpart, primitive_squarefree_factors, resultant, PolySet, Polynomial, Variable,
};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Provenance {
    Explicit,
    Propagated,
    Groebner,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Explicit => write!(f, "explicit"),
            Provenance::Propagated => write!(f, "propagated"),
            Provenance::Groebner => write!(f, "groebner"),
        }
    }
}

/// How a candidate was derived; resultant candidates record their parents
/// so the derivation can be replayed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Derivation {
    Explicit,
    Groebner,
    Resultant {
        left: usize,
        right: usize,
        var: Variable,
    },
}

#[derive(Clone, Debug)]
pub struct Candidate {
    pub poly: Polynomial,
    pub level: usize,
    pub provenance: Provenance,
    pub derivation: Derivation,
}

/// Per-level candidate equational constraints, deduplicated modulo
/// canonical form.
#[derive(Clone, Debug, Default)]
pub struct CandidatePool {
    pub candidates: Vec<Candidate>,
}

impl CandidatePool {
    pub fn at_level(&self, level: usize) -> Vec<&Candidate> {
        self.candidates
            .iter()
            .filter(|c| c.level == level)
            .collect()
    }

    pub fn contains_poly(&self, p: &Polynomial) -> bool {
        let c = p.canonical();
        self.candidates.iter().any(|cand| cand.poly == c)
    }

    fn push_unique(&mut self, cand: Candidate) -> bool {
        if self.contains_poly(&cand.poly) {
            return false;
        }
        self.candidates.push(cand);
        true
    }
}

/// The polynomials of `= 0` atoms that are top-level conjuncts of the
/// formula.
pub fn explicit_ecs(formula: &Formula) -> PolySet {
    let mut out = PolySet::new();
    for atom in formula.conjunct_atoms() {
        if atom.rel == Rel::Eq {
            out.insert(&atom.poly);
        }
    }
    out
}

/// Zero-set-faithful squarefree reduction: the product of the primitive
/// squarefree factor layers (constants stripped, powers collapsed).
fn squarefree_reduction(p: &Polynomial) -> Option<Polynomial> {
    let layers = primitive_squarefree_factors(p);
    if layers.is_empty() {
        return None;
    }
    let mut acc = Polynomial::one(p.nvars());
    for l in &layers {
        acc = acc.mul(l);
    }
    Some(acc.canonical())
}

/// Closes a set of equational constraints under pairwise resultants, level
/// by level downward. Derived candidates are reduced to their squarefree
/// canonical form; constants are discarded silently.
pub fn propagate(ecs: &PolySet) -> CandidatePool {
    let mut pool = CandidatePool::default();
    let mut max_level = 0;
    for p in ecs.iter() {
        if let Some(v) = p.mvar() {
            max_level = max_level.max(v.level());
            pool.push_unique(Candidate {
                poly: p.canonical(),
                level: v.level(),
                provenance: Provenance::Explicit,
                derivation: Derivation::Explicit,
            });
        }
    }
    let mut level = max_level;
    while level >= 1 {
        let idxs: Vec<usize> = pool
            .candidates
            .iter()
            .enumerate()
            .filter(|(_, c)| c.level == level)
            .map(|(i, _)| i)
            .collect();
        let v = Variable::from_level(level);
        for ai in 0..idxs.len() {
            for bi in (ai + 1)..idxs.len() {
                let (i, j) = (idxs[ai], idxs[bi]);
                let a = pool.candidates[i].poly.clone();
                let b = pool.candidates[j].poly.clone();
                let r = resultant(&a, &b, v).expect("pool members have the level mvar");
                if r.is_constant() {
                    continue;
                }
                if let Some(reduced) = squarefree_reduction(&r) {
                    if let Some(mv) = reduced.mvar() {
                        pool.push_unique(Candidate {
                            poly: reduced,
                            level: mv.level(),
                            provenance: Provenance::Propagated,
                            derivation: Derivation::Resultant { left: i, right: j, var: v },
                        });
                    }
                }
            }
        }
        level -= 1;
    }
    pool
}

/// Replays a candidate's recorded derivation.
pub fn replay_derivation(pool: &CandidatePool, idx: usize) -> Option<Polynomial> {
    match &pool.candidates[idx].derivation {
        Derivation::Explicit | Derivation::Groebner => Some(pool.candidates[idx].poly.clone()),
        Derivation::Resultant { left, right, var } => {
            let a = &pool.candidates[*left].poly;
            let b = &pool.candidates[*right].poly;
            let r = resultant(a, b, *var).ok()?;
            squarefree_reduction(&r)
        }
    }
}

/// One designated equational constraint.
#[derive(Clone, Debug)]
pub struct DesignatedEc {
    pub poly: Polynomial,
    pub provenance: Provenance,
}

/// The per-level designation: at most one primitive polynomial with the
/// level's main variable for each level.
#[derive(Clone, Debug, Default)]
pub struct Designation {
    levels: Vec<Option<DesignatedEc>>,
}

impl Designation {
    pub fn empty(nvars: usize) -> Self {
        Designation {
            levels: vec![None; nvars],
        }
    }

    pub fn nvars(&self) -> usize {
        self.levels.len()
    }

    pub fn at_level(&self, level: usize) -> Option<&DesignatedEc> {
        self.levels.get(level - 1).and_then(|o| o.as_ref())
    }

    pub fn set_level(&mut self, level: usize, ec: DesignatedEc) {
        self.levels[level - 1] = Some(ec);
    }

    pub fn designated_levels(&self) -> Vec<usize> {
        (1..=self.levels.len())
            .filter(|&k| self.levels[k - 1].is_some())
            .collect()
    }

    pub fn count(&self) -> usize {
        self.levels.iter().filter(|o| o.is_some()).count()
    }

    pub fn polys(&self) -> Vec<&Polynomial> {
        self.levels
            .iter()
            .filter_map(|o| o.as_ref().map(|e| &e.poly))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub enum EcError {
    /// A user-forced designation is not primitive in its main variable.
    NonPrimitiveEc { poly_text: String },
    /// A forced polynomial has no main variable or duplicates a level.
    BadForcedDesignation { reason: String },
}

impl fmt::Display for EcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EcError::NonPrimitiveEc { poly_text } => {
                write!(f, "designated equational constraint is not primitive: {poly_text}")
            }
            EcError::BadForcedDesignation { reason } => {
                write!(f, "bad forced designation: {reason}")
            }
        }
    }
}

impl std::error::Error for EcError {}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EcSource {
    Explicit,
    Propagate,
    Groebner,
}

#[derive(Clone, Debug)]
pub enum Strategy {
    Auto,
    /// Designate exactly these polynomials (matched modulo canonical form),
    /// one per distinct main-variable level.
    Forced(Vec<Polynomial>),
}

/// Whether the polynomial is primitive in its main variable (content free
/// of the main variable is constant).
pub fn is_primitive_in_mvar(p: &Polynomial) -> bool {
    match p.mvar() {
        None => false,
        Some(v) => {
            let (content, _) = content_primpart(p, v).expect("nonconstant");
            content.is_constant()
        }
    }
}

/// Deterministic candidate ranking: least degree in the level variable,
/// then fewest terms, then canonical text order.
fn rank_key(p: &Polynomial, level: usize) -> (u32, usize, String) {
    let v = Variable::from_level(level);
    let names: Vec<String> = (0..p.nvars()).map(|i| format!("v{i}")).collect();
    let order = crate::polyring::VarOrder::new(names);
    (p.degree(v), p.num_terms(), p.to_text(&order))
}

/// Result of designation: the per-level choice, the working polynomial
/// set for projection, warnings, and the candidate pool used.
#[derive(Clone, Debug)]
pub struct DesignationOutcome {
    pub designation: Designation,
    pub working_set: PolySet,
    pub pool: CandidatePool,
    pub warnings: Vec<String>,
    pub unsat_by_gb: bool,
}

/// Builds the candidate pool for the requested source and selects one
/// primitive candidate per level. Returns the designation together with
/// the input polynomial set augmented with every designated polynomial
/// (and, for the Groebner route, the basis replacing the explicit
/// equations).
pub fn designate(
    formula: &Formula,
    nvars: usize,
    source: EcSource,
    strategy: &Strategy,
) -> Result<DesignationOutcome, EcError> {
    let explicit = explicit_ecs(formula);
    let mut warnings = Vec::new();
    let mut unsat_by_gb = false;
    let mut working = formula.extract_polynomials();

    let pool = match source {
        EcSource::Explicit => {
            let mut pool = CandidatePool::default();
            for p in explicit.iter() {
                if let Some(v) = p.mvar() {
                    pool.push_unique(Candidate {
                        poly: p.canonical(),
                        level: v.level(),
                        provenance: Provenance::Explicit,
                        derivation: Derivation::Explicit,
                    });
                }
            }
            pool
        }
        EcSource::Propagate => propagate(&explicit),
        EcSource::Groebner => {
            if explicit.is_empty() {
                CandidatePool::default()
            } else {
                match groebner_basis(&explicit.to_vec(), nvars) {
                    GroebnerOutcome::Unit => {
                        unsat_by_gb = true;
                        warnings.push(
                            "equational constraints generate the unit ideal (unsatisfiable)"
                                .to_string(),
                        );
                        CandidatePool::default()
                    }
                    GroebnerOutcome::Basis(gb) => {
                        // Replace the explicit equations by the basis in the
                        // working set: drop the old ones, insert the basis.
                        for p in explicit.iter() {
                            if !appears_outside_ec_atoms(formula, p) {
                                working.remove(p);
                            }
                        }
                        let mut pool = CandidatePool::default();
                        for g in &gb {
                            working.insert(g);
                            if let Some(v) = g.mvar() {
                                pool.push_unique(Candidate {
                                    poly: g.canonical(),
                                    level: v.level(),
                                    provenance: Provenance::Groebner,
                                    derivation: Derivation::Groebner,
                                });
                            }
                        }
                        pool
                    }
                }
            }
        }
    };

    let designation = select_from_pool(&pool, nvars, strategy, &mut warnings)?;
    for ec in designation.polys() {
        working.insert(ec);
    }
    Ok(DesignationOutcome {
        designation,
        working_set: working,
        pool,
        warnings,
        unsat_by_gb,
    })
}

/// True when the polynomial occurs in an atom other than a top-level
/// equational conjunct (so it must stay in the working set even when the
/// equations are replaced by a basis).
fn appears_outside_ec_atoms(formula: &Formula, p: &Polynomial) -> bool {
    let canon = p.canonical();
    let conjuncts: Vec<&Atom> = formula.conjunct_atoms();
    let mut found = false;
    formula.walk_atoms(&mut |a| {
        if a.poly == canon {
            let is_ec_conjunct = a.rel == Rel::Eq
                && conjuncts
                    .iter()
                    .any(|c| c.rel == Rel::Eq && c.poly == canon && std::ptr::eq(*c, a));
            if !is_ec_conjunct {
                found = true;
            }
        }
    });
    found
}

/// Selects one primitive candidate per level according to the strategy.
pub fn select_from_pool(
    pool: &CandidatePool,
    nvars: usize,
    strategy: &Strategy,
    warnings: &mut Vec<String>,
) -> Result<Designation, EcError> {
    let mut designation = Designation::empty(nvars);
    match strategy {
        Strategy::Auto => {
            for level in 1..=nvars {
                let mut cands = pool.at_level(level);
                cands.sort_by_key(|c| rank_key(&c.poly, level));
                for c in cands {
                    if is_primitive_in_mvar(&c.poly) {
                        designation.set_level(
                            level,
                            DesignatedEc {
                                poly: c.poly.clone(),
                                provenance: c.provenance,
                            },
                        );
                        break;
                    } else {
                        warnings.push(format!(
                            "skipping non-primitive candidate at level {level}"
                        ));
                    }
                }
            }
        }
        Strategy::Forced(polys) => {
            for p in polys {
                let canon = p.canonical();
                let v = canon.mvar().ok_or_else(|| EcError::BadForcedDesignation {
                    reason: "constant polynomial".to_string(),
                })?;
                if !is_primitive_in_mvar(&canon) {
                    return Err(EcError::NonPrimitiveEc {
                        poly_text: format!("{canon:?}"),
                    });
                }
                let level = v.level();
                if designation.at_level(level).is_some() {
                    return Err(EcError::BadForcedDesignation {
                        reason: format!("two designations at level {level}"),
                    });
                }
                let provenance = pool
                    .candidates
                    .iter()
                    .find(|c| c.poly == canon)
                    .map(|c| c.provenance)
                    .unwrap_or(Provenance::Explicit);
                designation.set_level(level, DesignatedEc { poly: canon, provenance });
            }
        }
    }
    Ok(designation)
}

/// Enumerates all designation combinations from the pool (one primitive
/// candidate per nonempty level), up to `cap` entries.
pub fn enumerate_designations(pool: &CandidatePool, nvars: usize, cap: usize) -> Vec<Designation> {
    let mut per_level: Vec<(usize, Vec<&Candidate>)> = Vec::new();
    for level in 1..=nvars {
        let mut cands: Vec<&Candidate> = pool
            .at_level(level)
            .into_iter()
            .filter(|c| is_primitive_in_mvar(&c.poly))
            .collect();
        cands.sort_by_key(|c| rank_key(&c.poly, level));
        if !cands.is_empty() {
            per_level.push((level, cands));
        }
    }
    let mut out = vec![Designation::empty(nvars)];
    for (level, cands) in &per_level {
        let mut next = Vec::new();
        'outer: for base in &out {
            for c in cands {
                let mut d = base.clone();
                d.set_level(
                    *level,
                    DesignatedEc {
                        poly: c.poly.clone(),
                        provenance: c.provenance,
                    },
                );
                next.push(d);
                if next.len() >= cap {
                    break 'outer;
                }
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_poly, parse_problem};

    fn sphere_problem() -> crate::formula::Problem {
        parse_problem(
            "vars: x < y < z\n\
             let f1 = x + y^2 + z\n\
             let f2 = x - y^2 + z\n\
             let g  = x^2 + y^2 + z^2 - 1\n\
             formula: f1 = 0 /\\ f2 = 0 /\\ g >= 0\n",
        )
        .unwrap()
    }

    #[test]
    fn explicit_ecs_from_conjunction() {
        let prob = sphere_problem();
        let ecs = explicit_ecs(&prob.formula);
        assert_eq!(ecs.len(), 2);
        assert!(ecs.contains(&parse_poly("x + y^2 + z", &prob.order).unwrap()));
        assert!(ecs.contains(&parse_poly("x - y^2 + z", &prob.order).unwrap()));
    }

    #[test]
    fn disjunction_has_no_explicit_ec() {
        let prob = parse_problem("vars: x < y\nformula: x = 0 \\/ y = 0\n").unwrap();
        assert!(explicit_ecs(&prob.formula).is_empty());
    }

    #[test]
    fn single_equation_conjunct() {
        let prob = parse_problem("vars: x < y\nformula: x = 0 /\\ y > 0\n").unwrap();
        let ecs = explicit_ecs(&prob.formula);
        assert_eq!(ecs.len(), 1);
        assert!(ecs.contains(&parse_poly("x", &prob.order).unwrap()));
    }

    #[test]
    fn propagation_simplifies_squares() {
        let prob = sphere_problem();
        let pool = propagate(&explicit_ecs(&prob.formula));
        // res_z(f1, f2) = -2y^2 reduces to the candidate y at level 2.
        let y = parse_poly("y", &prob.order).unwrap();
        assert!(pool
            .candidates
            .iter()
            .any(|c| c.poly == y && c.level == 2 && c.provenance == Provenance::Propagated));
    }

    #[test]
    fn propagation_ancestry_replays() {
        let prob = sphere_problem();
        let pool = propagate(&explicit_ecs(&prob.formula));
        for (i, c) in pool.candidates.iter().enumerate() {
            if let Some(re) = replay_derivation(&pool, i) {
                assert_eq!(re, c.poly, "replayed candidate differs");
            }
        }
    }

    #[test]
    fn singleton_pool_from_single_ec() {
        let prob = parse_problem("vars: x < y\nformula: y^2 - x = 0 /\\ x > 0\n").unwrap();
        let pool = propagate(&explicit_ecs(&prob.formula));
        assert_eq!(pool.candidates.len(), 1);
        assert_eq!(pool.candidates[0].level, 2);
    }

    #[test]
    fn nonprimitive_candidates_skipped_in_auto() {
        let prob = parse_problem("vars: x < y < z\nformula: z*y = 0 /\\ x > 0\n").unwrap();
        let out = designate(&prob.formula, 3, EcSource::Explicit, &Strategy::Auto).unwrap();
        assert_eq!(out.designation.count(), 0);
        assert!(!out.warnings.is_empty());
    }

    #[test]
    fn nonprimitive_forced_is_fatal() {
        let prob = parse_problem("vars: x < y < z\nformula: z*y = 0 /\\ x > 0\n").unwrap();
        let zy = parse_poly("z*y", &prob.order).unwrap();
        let err = designate(
            &prob.formula,
            3,
            EcSource::Explicit,
            &Strategy::Forced(vec![zy]),
        )
        .unwrap_err();
        assert!(matches!(err, EcError::NonPrimitiveEc { .. }));
    }

    #[test]
    fn no_equations_gives_empty_designation() {
        let prob = parse_problem("vars: x\nformula: x > 0\n").unwrap();
        let out = designate(&prob.formula, 1, EcSource::Propagate, &Strategy::Auto).unwrap();
        assert_eq!(out.designation.count(), 0);
    }

    #[test]
    fn working_set_contains_designated() {
        let prob = sphere_problem();
        let f1 = parse_poly("x + y^2 + z", &prob.order).unwrap();
        let y = parse_poly("y", &prob.order).unwrap();
        let out = designate(
            &prob.formula,
            3,
            EcSource::Propagate,
            &Strategy::Forced(vec![f1.clone(), y.clone()]),
        )
        .unwrap();
        assert!(out.working_set.contains(&f1));
        assert!(out.working_set.contains(&y));
        assert_eq!(out.designation.at_level(3).unwrap().poly, f1.canonical());
        assert_eq!(out.designation.at_level(2).unwrap().poly, y);
        assert!(out.designation.at_level(1).is_none());
    }
}
