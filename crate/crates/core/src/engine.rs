//! End-to-end orchestration: designation, projection, base phase, lifting,
//! truth assignment, solution extraction, and point location.

use crate::ecprep::{
    designate, select_from_pool, Designation, DesignationOutcome, EcError, EcSource, Strategy,
};
use crate::formula::Formula;
use crate::lifting::{base_phase, lift_level, Cell, LiftError, Truth, WellOrientedFailure};
use crate::polyring::{Rat, VarOrder};
use crate::projection::{projection_phase, OperatorUsed, ProjectionLayers};
use crate::realalg::RealAlgError;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    SignInvariant,
    SingleEc,
    MultiEc,
}

impl Mode {
    pub fn text(self) -> &'static str {
        match self {
            Mode::SignInvariant => "sign_invariant",
            Mode::SingleEc => "single_ec",
            Mode::MultiEc => "multi_ec",
        }
    }
}

/// Which lifts apply the admissible-cell restriction (given a designation
/// at the level below).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RestrictionVariant {
    /// Restrict at every lift whose level below carries a designation.
    Literal,
    /// Restrict only when the previous lift was itself unrestricted.
    Alternating,
    /// Restrict at the final lift, and where the level two below carries
    /// no designation.
    GapOrFinal,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub mode: Mode,
    pub ec_source: EcSource,
    pub strategy: Strategy,
    /// Restrict stack generation to admissible cells (the algorithm's
    /// default); disabled by `--no-cell-restriction`.
    pub cell_restriction: bool,
    pub restriction_variant: RestrictionVariant,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            mode: Mode::MultiEc,
            ec_source: EcSource::Propagate,
            strategy: Strategy::Auto,
            cell_restriction: true,
            restriction_variant: RestrictionVariant::Literal,
        }
    }
}

#[derive(Debug)]
pub enum EngineError {
    NotWellOriented(WellOrientedFailure),
    Designation(EcError),
    Algebra(RealAlgError),
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::NotWellOriented(w) => write!(f, "{w}"),
            EngineError::Designation(e) => write!(f, "{e}"),
            EngineError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for EngineError {}

impl From<LiftError> for EngineError {
    fn from(e: LiftError) -> Self {
        match e {
            LiftError::NotWellOriented(w) => EngineError::NotWellOriented(w),
            LiftError::Algebra(a) => EngineError::Algebra(a),
        }
    }
}

impl From<EcError> for EngineError {
    fn from(e: EcError) -> Self {
        EngineError::Designation(e)
    }
}

/// Wall-clock accounting per phase.
#[derive(Clone, Debug, Default)]
pub struct PhaseTimes {
    pub designation: Duration,
    pub projection: Duration,
    pub lifting: Duration,
    pub truth: Duration,
}

/// A completed truth-invariant decomposition.
#[derive(Debug)]
pub struct Cad {
    pub order: Arc<VarOrder>,
    /// Cells per level, index 0 = level 1; the last entry decomposes the
    /// full space.
    pub levels: Vec<Vec<Cell>>,
    pub designation: Designation,
    pub layers: ProjectionLayers,
    pub warnings: Vec<String>,
    pub unsat_by_gb: bool,
    pub times: PhaseTimes,
    /// Per level (index 0 = level 2 lift): whether the admissibility
    /// restriction was applied.
    pub restricted_levels: Vec<bool>,
    children: Vec<BTreeMap<Vec<usize>, (usize, usize)>>,
}

impl Cad {
    pub fn nvars(&self) -> usize {
        self.levels.len()
    }

    pub fn top_cells(&self) -> &[Cell] {
        self.levels.last().expect("at least one level")
    }

    pub fn level_counts(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.len()).collect()
    }

    pub fn operator_at(&self, k: usize) -> OperatorUsed {
        self.layers.level(k).operator
    }

    /// The level-n cells with truth TRUE, in index order.
    pub fn solution_cells(&self) -> Vec<&Cell> {
        self.top_cells()
            .iter()
            .filter(|c| c.truth == Truth::True)
            .collect()
    }

    /// Walks levels, binary-searching each stack by exact sign comparisons
    /// against section roots; trivial cylinders absorb their whole fiber.
    pub fn locate(&self, point: &[Rat]) -> &Cell {
        assert_eq!(point.len(), self.nvars(), "point must have n coordinates");
        let mut prefix: Vec<usize> = Vec::new();
        let mut found: Option<&Cell> = None;
        for (level_idx, coordinate) in point.iter().enumerate() {
            let (start, end) = self.children[level_idx]
                .get(&prefix)
                .copied()
                .expect("cylindricity: every prefix has a fiber");
            let stack = &self.levels[level_idx][start..end];
            let cell = if stack.len() == 1 && stack[0].cylinder {
                &stack[0]
            } else {
                locate_in_stack(stack, coordinate, level_idx)
            };
            prefix = cell.index.clone();
            found = Some(cell);
        }
        found.expect("nonempty point")
    }
}

fn locate_in_stack<'a>(stack: &'a [Cell], coordinate: &Rat, level_idx: usize) -> &'a Cell {
    let target = crate::realalg::AlgebraicNumber::from_rational(coordinate.clone());
    // Sections sit at odd positions of the slice (index entries 2,4,..).
    for (i, cell) in stack.iter().enumerate() {
        if cell.index[level_idx] % 2 == 0 {
            match target.cmp_exact(&cell.sample.coords()[level_idx]) {
                std::cmp::Ordering::Equal => return cell,
                std::cmp::Ordering::Less => return &stack[i - 1],
                std::cmp::Ordering::Greater => continue,
            }
        }
    }
    stack.last().expect("stacks are nonempty")
}

fn single_ec_designation(
    formula: &Formula,
    nvars: usize,
    strategy: &Strategy,
) -> Result<DesignationOutcome, EcError> {
    let mut out = designate(formula, nvars, EcSource::Explicit, &Strategy::Auto)?;
    match strategy {
        Strategy::Forced(polys) if !polys.is_empty() => {
            let forced = select_from_pool(&out.pool, nvars, strategy, &mut out.warnings)?;
            let top = forced.designated_levels().into_iter().max();
            let mut single = Designation::empty(nvars);
            if let Some(k) = top {
                single.set_level(k, forced.at_level(k).unwrap().clone());
            }
            out.designation = single;
        }
        _ => {
            // Keep only the highest designated level.
            let top = out.designation.designated_levels().into_iter().max();
            let mut single = Designation::empty(nvars);
            if let Some(k) = top {
                single.set_level(k, out.designation.at_level(k).unwrap().clone());
            }
            out.designation = single;
        }
    }
    out.working_set = formula.extract_polynomials();
    for p in out.designation.polys() {
        out.working_set.insert(p);
    }
    Ok(out)
}

/// Builds a truth-invariant CAD for the formula under the configuration.
pub fn build_cad(
    formula: &Formula,
    order: &Arc<VarOrder>,
    cfg: &RunConfig,
) -> Result<Cad, EngineError> {
    let nvars = order.len();
    let t0 = Instant::now();
    let outcome = match cfg.mode {
        Mode::SignInvariant => DesignationOutcome {
            designation: Designation::empty(nvars),
            working_set: formula.extract_polynomials(),
            pool: Default::default(),
            warnings: Vec::new(),
            unsat_by_gb: false,
        },
        Mode::SingleEc => single_ec_designation(formula, nvars, &cfg.strategy)?,
        Mode::MultiEc => designate(formula, nvars, cfg.ec_source, &cfg.strategy)?,
    };
    let times_designation = t0.elapsed();
    build_cad_from_designation(formula, order, cfg, outcome, times_designation)
}

/// Builds the CAD for an already-selected designation (used by the
/// exhaustive designation sweep).
pub fn build_cad_from_designation(
    formula: &Formula,
    order: &Arc<VarOrder>,
    cfg: &RunConfig,
    outcome: DesignationOutcome,
    designation_time: Duration,
) -> Result<Cad, EngineError> {
    let nvars = order.len();
    let restrict_default = cfg.cell_restriction && cfg.mode == Mode::MultiEc;

    let t1 = Instant::now();
    if std::env::var("ECCAD_TRACE").is_ok() {
        eprintln!("[trace] projection starting: {} polynomials", outcome.working_set.len());
    }
    let layers = projection_phase(&outcome.working_set, &outcome.designation, nvars)
        .expect("projection inputs are validated");
    let projection_time = t1.elapsed();
    if std::env::var("ECCAD_TRACE").is_ok() {
        for k in (1..=nvars).rev() {
            let l = layers.level(k);
            eprintln!(
                "[trace] level {k}: |A|={} |B|={} |F|={} |C|={} op={}",
                l.a.len(), l.b.len(), l.f.len(), l.c.len(), l.operator.text()
            );
        }
        eprintln!("[trace] projection took {projection_time:?}");
    }

    let t2 = Instant::now();
    let e1 = outcome.designation.at_level(1).map(|e| e.poly.clone());
    let mut levels: Vec<Vec<Cell>> = Vec::with_capacity(nvars);
    let mut restricted_levels = Vec::new();
    levels.push(base_phase(&layers.level(1).a, e1.as_ref(), nvars)?);
    if std::env::var("ECCAD_TRACE").is_ok() {
        eprintln!("[trace] base phase: {} cells in {:?}", levels[0].len(), t2.elapsed());
    }
    let mut prev_restricted = false;
    for k in 2..=nvars {
        let designated_below = outcome.designation.at_level(k - 1).is_some();
        let variant_allows = match cfg.restriction_variant {
            RestrictionVariant::Literal => true,
            RestrictionVariant::Alternating => !prev_restricted,
            RestrictionVariant::GapOrFinal => {
                k == nvars || k == 2 || outcome.designation.at_level(k - 2).is_none()
            }
        };
        let restrict = restrict_default && designated_below && variant_allows;
        restricted_levels.push(restrict);
        prev_restricted = restrict;
        let next = lift_level(
            &levels[k - 2],
            &layers,
            k,
            &outcome.designation,
            restrict,
            order,
        )?;
        if std::env::var("ECCAD_TRACE").is_ok() {
            eprintln!("[trace] lift to level {k}: {} cells, total {:?}", next.len(), t2.elapsed());
        }
        levels.push(next);
    }
    let lifting_time = t2.elapsed();

    let t3 = Instant::now();
    if let Some(top) = levels.last_mut() {
        for cell in top.iter_mut() {
            if cell.cylinder {
                cell.truth = Truth::False;
            } else {
                cell.truth = if formula.evaluate_truth(&cell.sample) {
                    Truth::True
                } else {
                    Truth::False
                };
            }
        }
    }
    let truth_time = t3.elapsed();

    let children = build_children_maps(&levels);
    Ok(Cad {
        order: order.clone(),
        levels,
        designation: outcome.designation,
        layers,
        warnings: outcome.warnings,
        unsat_by_gb: outcome.unsat_by_gb,
        times: PhaseTimes {
            designation: designation_time,
            projection: projection_time,
            lifting: lifting_time,
            truth: truth_time,
        },
        restricted_levels,
        children,
    })
}

fn build_children_maps(levels: &[Vec<Cell>]) -> Vec<BTreeMap<Vec<usize>, (usize, usize)>> {
    let mut out = Vec::with_capacity(levels.len());
    for (k, cells) in levels.iter().enumerate() {
        let mut map: BTreeMap<Vec<usize>, (usize, usize)> = BTreeMap::new();
        let mut start = 0usize;
        while start < cells.len() {
            let prefix = cells[start].index[..k].to_vec();
            let mut end = start + 1;
            while end < cells.len() && cells[end].index[..k] == prefix[..] {
                end += 1;
            }
            map.insert(prefix, (start, end));
            start = end;
        }
        out.push(map);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_problem;
    use crate::polyring::rat_int;

    #[test]
    fn one_variable_strict_inequality() {
        let prob = parse_problem("vars: x\nformula: x > 0\n").unwrap();
        let cad = build_cad(&prob.formula, &prob.order, &RunConfig::default()).unwrap();
        assert_eq!(cad.level_counts(), vec![3]);
        let truths: Vec<Truth> = cad.top_cells().iter().map(|c| c.truth).collect();
        assert_eq!(truths, vec![Truth::False, Truth::False, Truth::True]);
    }

    #[test]
    fn unsatisfiable_equation_has_no_solutions() {
        let prob = parse_problem("vars: x\nformula: x^2 + 1 = 0\n").unwrap();
        let cad = build_cad(&prob.formula, &prob.order, &RunConfig::default()).unwrap();
        assert_eq!(cad.level_counts(), vec![1]);
        assert!(cad.solution_cells().is_empty());
    }

    #[test]
    fn locate_simple_line() {
        let prob = parse_problem("vars: x\nformula: x > 0\n").unwrap();
        let cad = build_cad(&prob.formula, &prob.order, &RunConfig::default()).unwrap();
        let c = cad.locate(&[rat_int(5)]);
        assert_eq!(c.truth, Truth::True);
        let c = cad.locate(&[rat_int(0)]);
        assert_eq!(c.index, vec![2]);
        assert_eq!(c.truth, Truth::False);
    }
}
