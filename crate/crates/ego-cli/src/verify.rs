//! `ego verify`: the theorem checks and the worked examples.

use std::fmt;
use std::str::FromStr;

use ego_categorize::category;
use ego_codec::{attractor_encode, ordered_pair, EBinary, FrequencyDistribution};
use ego_core::enumerate::{formulas_up_to_depth, formulas_up_to_nodes};
use ego_core::gen::random_formula;
use ego_core::{parse_formula, set_equal, Assembly, EFormula, SentenceClass};
use ego_engine::RunStatus;
use ego_environment::Scenario;
use ego_evaluator::Evaluator;
use ego_lineage::{fast_equal, lineage_set, Lineage, LineageSet, NodeCode};
use log::debug;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;
use crate::run::run_parsed;

/// The scripted three-modality scenario, shipped with the repository.
pub const THREE_MODALITIES: &str = include_str!("../../../scenarios/three-modalities.toml");

/// Which checks to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Equality evaluators classify exactly by set equality.
    SelfRef,
    /// Lineage comparison agrees with set equality.
    Lineage,
    /// Every worked example.
    Examples,
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "selfref" => Ok(Suite::SelfRef),
            "lineage" => Ok(Suite::Lineage),
            "examples" => Ok(Suite::Examples),
            other => Err(CliError::Usage(format!("unknown suite {other:?}"))),
        }
    }
}

/// Size bounds of the exhaustive and random checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Deepest formula enumerated or drawn.
    pub max_depth: u32,
    /// Widest set enumerated or drawn.
    pub max_width: usize,
    /// Seeded random pairs checked on top of the exhaustive corpus.
    pub random_pairs: usize,
    /// Seed of the random pairs.
    pub seed: u64,
    /// Largest number of exhaustive pairs allowed.
    pub max_pairs: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_depth: 3,
            max_width: 3,
            random_pairs: 1000,
            seed: 2024,
            max_pairs: 4_000_000,
        }
    }
}

/// One check and its outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    /// What was checked.
    pub name: String,
    /// Whether it held.
    pub passed: bool,
    /// Counts or the first counterexample.
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{mark} {}: {}", self.name, self.detail)
    }
}

/// All checks of a suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summary {
    /// The checks, in order.
    pub checks: Vec<Check>,
}

impl Summary {
    /// Whether every check held.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs one suite.
pub fn verify(suite: Suite, bounds: &Bounds) -> Result<Summary, CliError> {
    let checks = match suite {
        Suite::SelfRef => self_reference(bounds)?,
        Suite::Lineage => lineage(bounds)?,
        Suite::Examples => examples()?,
    };
    Ok(Summary { checks })
}

/// Every formula within the depth and width bounds.
pub fn corpus(bounds: &Bounds) -> Result<Vec<EFormula>, CliError> {
    if bounds.max_depth > 4 {
        return Err(CliError::Resource(format!(
            "exhaustive enumeration stops at depth 4, asked for {}",
            bounds.max_depth
        )));
    }
    let terms: Vec<EFormula> = formulas_up_to_depth(bounds.max_depth)
        .into_iter()
        .filter(|x| x.nodes().all(|n| n.len() <= bounds.max_width))
        .collect();
    let pairs = terms.len().saturating_mul(terms.len());
    if pairs > bounds.max_pairs {
        return Err(CliError::Resource(format!(
            "{} formulas give {pairs} pairs, more than the limit of {}",
            terms.len(),
            bounds.max_pairs
        )));
    }
    Ok(terms)
}

fn expected(equal: bool) -> SentenceClass {
    if equal {
        SentenceClass::Tautology
    } else {
        SentenceClass::Contradiction
    }
}

/// Checks `{x = y}` against set equality on every pair of a list.
pub fn self_reference_on(terms: &[EFormula], ev: &mut Evaluator) -> Result<Check, CliError> {
    let trees: Vec<Assembly> = terms.iter().map(Assembly::from).collect();
    for (x, tx) in terms.iter().zip(&trees) {
        for (y, ty) in terms.iter().zip(&trees) {
            let class = ev.equality(x, y)?.classify();
            if class != expected(set_equal(tx, ty)) {
                return Ok(Check::new(
                    "exhaustive",
                    false,
                    format!("{x} vs {y} classifies {class:?}"),
                ));
            }
        }
    }
    Ok(Check::new(
        "exhaustive",
        true,
        format!("{} pairs", terms.len() * terms.len()),
    ))
}

/// Checks `{x = y}` on seeded random pairs; a quarter are equal.
pub fn self_reference_random(bounds: &Bounds, ev: &mut Evaluator) -> Result<Check, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    for _ in 0..bounds.random_pairs {
        let x = random_formula(&mut rng, bounds.max_depth, bounds.max_width);
        let y = if rng.gen_ratio(1, 4) {
            x.clone()
        } else {
            random_formula(&mut rng, bounds.max_depth, bounds.max_width)
        };
        let class = ev.equality(&x, &y)?.classify();
        if class != expected(set_equal(&Assembly::from(&x), &Assembly::from(&y))) {
            return Ok(Check::new("random", false, format!("{x} vs {y} classifies {class:?}")));
        }
    }
    Ok(Check::new(
        "random",
        true,
        format!("{} seeded pairs", bounds.random_pairs),
    ))
}

fn self_reference(bounds: &Bounds) -> Result<Vec<Check>, CliError> {
    let terms = corpus(bounds)?;
    debug!("self-reference over {} formulas", terms.len());
    let mut ev = Evaluator::new();
    let mut nine = self_reference_on(&formulas_up_to_nodes(9), &mut ev)?;
    nine.name = "all formulas up to nine nodes".into();
    let mut bounded = self_reference_on(&terms, &mut ev)?;
    bounded.name = format!("depth ≤ {}, width ≤ {}", bounds.max_depth, bounds.max_width);
    Ok(vec![nine, bounded, self_reference_random(bounds, &mut ev)?])
}

/// Checks lineage comparison against set equality on every pair.
pub fn lineage_on(terms: &[EFormula]) -> Check {
    let trees: Vec<Assembly> = terms.iter().map(Assembly::from).collect();
    for (x, tx) in terms.iter().zip(&trees) {
        for (y, ty) in terms.iter().zip(&trees) {
            if fast_equal(x, y) != set_equal(tx, ty) {
                return Check::new("exhaustive", false, format!("{x} vs {y}"));
            }
        }
    }
    Check::new("exhaustive", true, format!("{} pairs", terms.len() * terms.len()))
}

fn lineage(bounds: &Bounds) -> Result<Vec<Check>, CliError> {
    let terms = corpus(bounds)?;
    let mut nine = lineage_on(&formulas_up_to_nodes(9));
    nine.name = "all formulas up to nine nodes".into();
    let mut bounded = lineage_on(&terms);
    bounded.name = format!("depth ≤ {}, width ≤ {}", bounds.max_depth, bounds.max_width);
    Ok(vec![nine, bounded, four_lineages()])
}

fn f(text: &str) -> EFormula {
    parse_formula(text).expect("built-in formula")
}

/// The lineages of `{∅,{{∅}},{∅,{∅}}}`.
pub fn four_lineages() -> Check {
    let got = lineage_set(&f("{0,{{0}},{0,{0}}}"));
    let want = LineageSet::from_lineages(
        [vec![9, 1], vec![9, 3, 2, 1], vec![9, 4, 1], vec![9, 4, 2, 1]]
            .into_iter()
            .map(Lineage::from),
    );
    Check::new("four lineages", got == want, got.to_string())
}

/// The spelled-out equality evaluator of `{∅}` and `{∅,{∅}}`.
pub const WORKED_EVALUATOR: &str = "{{{∅} ≡ {∅, {∅}}} ∧ {{∅ ≡ ∅} ∧ {∅ ≡ {∅}}}}";

/// The frequency distribution of the first attractor example.
pub const WORKED_DISTRIBUTION: [f64; 6] = [1.0, 3.0, 5.0, 2.0, 4.0, 1.0];

/// The assembly of the first attractor example, assembled from the
/// components its derivation prints.
pub fn worked_attractor() -> EFormula {
    let e = EFormula::empty();
    let x2 = f("{{{0}},{{0},0}}");
    let x4 = f("{0}");
    let x5 = f("{{0},{0,{0}}}");
    let x3 = ordered_pair(&ordered_pair(&x2, &e), &ordered_pair(&e, &x4));
    ordered_pair(&x3, &x5)
}

fn examples() -> Result<Vec<Check>, CliError> {
    let mut ev = Evaluator::new();
    let mut out = Vec::new();

    let e = ev.equality(&f("{0}"), &f("{0,{0}}"))?;
    let text = e.to_string();
    out.push(Check::new(
        "equality evaluator spelled out",
        text == WORKED_EVALUATOR,
        text,
    ));
    out.push(Check::new(
        "equality evaluator classified",
        e.classify() == SentenceClass::Contradiction,
        format!("{:?}", e.classify()),
    ));
    let m = ev.membership(&f("{0}"), &f("{0,{0}}"))?.classify();
    out.push(Check::new(
        "membership {∅} ∈ {∅,{∅}}",
        m == SentenceClass::Tautology,
        format!("{m:?}"),
    ));
    let s = ev.equality(&f("0"), &f("0"))?.classify();
    out.push(Check::new("∅ = ∅", s == SentenceClass::Tautology, format!("{s:?}")));

    out.push(four_lineages());

    let c = category(&[f("{0,{{0}},{0,{{0}}}}"), f("{{0},{{0}}}")]);
    let props = c.properties().clone();
    out.push(Check::new(
        "category of the worked pair",
        props == f("{{{0}},0}") && !props.contains(&f("{0}")),
        props.pretty(),
    ));

    let five = EBinary::from_bits("101").map_err(|e| CliError::Usage(e.to_string()))?;
    let v = five.value().map_err(|e| CliError::Usage(e.to_string()))?;
    out.push(Check::new("E-binary 101", v == 5, v.to_string()));

    let d = FrequencyDistribution::new(WORKED_DISTRIBUTION.to_vec()).map_err(|e| CliError::Usage(e.to_string()))?;
    let x = attractor_encode(&d).map_err(|e| CliError::Usage(e.to_string()))?;
    out.push(Check::new(
        "first attractor example",
        x == worked_attractor(),
        x.pretty(),
    ));

    let code: NodeCode = "012004".parse().map_err(|_| CliError::Usage("node code".into()))?;
    let kids = [code.child(0), code.child(1)];
    out.push(Check::new(
        "node codes of the worked children",
        kids[0].as_str() == "0120004" && kids[1].as_str() == "01200401",
        format!("{}, {}", kids[0], kids[1]),
    ));

    let scenario = Scenario::from_toml(THREE_MODALITIES)?;
    let (report, _) = run_parsed(scenario, None, None)?;
    let residual = |label: &str| report.residuals.iter().find(|r| r.label == label).map(|r| r.index);
    let cells = [residual("{C,G,K}"), residual("{A,E,F,P}"), residual("{B,D,V}")];
    out.push(Check::new(
        "three-modality run",
        report.status == RunStatus::Equilibrium && cells == [Some(1), Some(0), Some(3)],
        format!("{:?}, residuals {cells:?}", report.status),
    ));
    Ok(out)
}
