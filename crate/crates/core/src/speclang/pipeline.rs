//! Runs every check on a built model in dependency order.

use super::doc::Model;
use crate::lagrangian::brackets::{derive_commutators, BracketRelation};
use crate::lagrangian::checks::{check_gauge, check_hermiticity, check_kinematic_invariance, cpt_verdict, Context};
use crate::lagrangian::generator::{classify_fundamental, derive_generator, GeneratorExpr};
use crate::lagrangian::structured::{DynTerm, Lagrangian};
use crate::reps::{verify_t_reality, Discrete};
use crate::umatrix::{
    check_u_transform, fallback_statistics, infer_statistics, spin_statistics_verdict, validate_u, verify_decomposition, StatisticsAssignment,
    UError,
};
use crate::verdict::{Status, Verdict, Witness};

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug)]
pub struct Artifacts {
    pub generator: Option<GeneratorExpr>,
    pub schematic: Option<String>,
    pub component_form: Vec<String>,
    pub partition: Option<(Vec<String>, Vec<String>)>,
    pub brackets: Vec<BracketRelation>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub model: Model,
    pub statistics: StatisticsAssignment,
    pub checks: Vec<CheckResult>,
    pub artifacts: Artifacts,
    pub notes: Vec<String>,
}

impl Report {
    pub fn check(&self, id: &str) -> Option<&Verdict> {
        self.checks.iter().find(|c| c.id == id).map(|c| &c.verdict)
    }

    /// Every executed check passed; skipped checks do not count.
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| matches!(c.verdict.status, Status::Pass | Status::Skipped))
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }
}

pub const TRANSFORM_KINDS: [Discrete; 4] = [Discrete::P, Discrete::C, Discrete::T, Discrete::PT];

pub fn run_pipeline(model: Model) -> Report {
    let (statistics, checks, artifacts, notes) = evaluate(&model);
    Report { model, statistics, checks, artifacts, notes }
}

fn evaluate(model: &Model) -> (StatisticsAssignment, Vec<CheckResult>, Artifacts, Vec<String>) {
    let sys = &model.sys;
    let u = &model.u;
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    let mut push = |id: &str, verdict: Verdict| checks.push(CheckResult { id: id.to_string(), verdict });

    push("antihermiticity", validate_u(u, sys.dimension()).unwrap_or_else(|e| Verdict::fail(Witness::new("U", "matching dimensions", e.to_string()))));
    push("decomposition", verify_decomposition(u));

    let mut reality = Vec::new();
    for f in sys.fields() {
        match f.discrete_matrix(Discrete::T, &model.phases) {
            Ok(d) => reality.extend(
                verify_t_reality(&d, f.spin).witnesses.into_iter().map(|w| Witness { location: format!("{}: {}", f.name, w.location), ..w }),
            ),
            Err(e) => reality.push(Witness::new(f.name.clone(), "exact D(I_t)", e.to_string())),
        }
    }
    push("reality", Verdict::from_witnesses(reality));

    let (stats, stats_verdict) = match infer_statistics(sys, u) {
        Ok(st) => (st, Verdict::pass()),
        Err(UError::Conflict(w)) => (fallback_statistics(sys, u), Verdict::from_witnesses(w)),
        Err(e) => (StatisticsAssignment::declared(sys), Verdict::fail(Witness::new("U", "a nonzero coupling", e.to_string()))),
    };
    push("statistics", stats_verdict);

    for kind in TRANSFORM_KINDS {
        let v = match sys.transform(kind, &model.phases) {
            Ok(d) => check_u_transform(kind, &d, u, &stats, sys)
                .unwrap_or_else(|e| Verdict::fail(Witness::new(format!("D({})", kind), "invertible", e.to_string()))),
            Err(e) => Verdict::fail(Witness::new(format!("D({})", kind), "exact representation", e.to_string())),
        };
        push(&format!("u-transform-{}", kind), v);
    }
    push("spin-statistics", spin_statistics_verdict(sys, &stats));

    let mut kinematic = Vec::new();
    let mut dynamic = Vec::new();
    let mut rejected = Vec::new();
    for t in &model.terms {
        if t.kinematic {
            kinematic.push(t.term.clone());
            continue;
        }
        if t.term.mixes_indices() {
            notes.push(format!("{} multiplies U^μ with different indices in one chain", t.name));
        }
        match DynTerm::new(t.term.clone()) {
            Ok(d) => dynamic.push(d),
            Err(e) => {
                rejected.push(Witness::new(t.name.clone(), "even U-power sum and real coefficient", e.to_string()));
                dynamic.push(DynTerm::new_unchecked(t.term.clone()));
            }
        }
    }
    let construction_ok = rejected.is_empty();
    push("term-construction", Verdict::from_witnesses(rejected));

    let lagrangian = Lagrangian { kinematic: kinematic.clone(), dynamic };
    let ctx = Context::new(sys, u, &stats);
    let odd = ctx.odd();
    for (name, t) in lagrangian.labelled_terms() {
        if !t.segments.is_empty() && ctx.expand_term(t).erase_conj(&odd).is_zero() {
            notes.push(format!("{} vanishes identically", name));
        }
    }
    push("hermiticity", check_hermiticity(&lagrangian, &ctx));
    push("gauge", check_gauge(&lagrangian, &ctx));
    push("kinematic-invariance", check_kinematic_invariance(&kinematic, &ctx));
    push(
        "CPT",
        if construction_ok { cpt_verdict(&lagrangian, &ctx) } else { Verdict::skipped("term construction rejected a term") },
    );

    let n = model.normal.vector();
    let mut artifacts = Artifacts { generator: None, schematic: None, component_form: Vec::new(), partition: None, brackets: Vec::new() };
    let gen_verdict = match derive_generator(sys, u, &stats, &n) {
        Ok(g) => {
            let v = if g.momentum_exchange_holds(&odd) {
                Verdict::pass()
            } else {
                Verdict::fail(Witness::new("F(δχ)", "equal to F(δπ)", "different integrands"))
            };
            artifacts.schematic = Some(g.schematic(sys, &model.named));
            artifacts.component_form = g.component_form(sys);
            artifacts.generator = Some(g);
            v
        }
        Err(e) => Verdict::fail(Witness::new("surface normal", "unit timelike", e.to_string())),
    };
    push("generator", gen_verdict);
    let part_verdict = match classify_fundamental(sys, u, &n) {
        Ok(p) => {
            artifacts.partition = Some((p.fundamental_labels(sys), p.non_fundamental_labels(sys)));
            Verdict::pass()
        }
        Err(e) => Verdict::fail(Witness::new("surface normal", "unit timelike", e.to_string())),
    };
    push("fundamental-partition", part_verdict);
    let br_verdict = match derive_commutators(sys, u, &stats) {
        Ok(b) => {
            artifacts.brackets = b;
            Verdict::pass()
        }
        Err(e) => Verdict::fail(Witness::new("statistics", "resolved", e.to_string())),
    };
    push("brackets", br_verdict);

    (stats.clone(), checks, artifacts, notes)
}
