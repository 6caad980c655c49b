//! The three graph characteristics and the chromatic / complete-minor
//! bounds they induce.
//!
//! For a connected graph with n vertices, m edges, c induced cycles, and
//! s solids, the characteristics are alternating sums one level deep
//! each:
//!
//! * first:  m - n
//! * second: c - m + n
//! * third:  s - c + m - n
//!
//! Each is nonincreasing under edge contraction and under neighborhood
//! compression, and complete graphs are the fixed points of compression.
//! A graph with chromatic number r therefore compresses to the complete
//! graph on r vertices without any characteristic rising, so the largest
//! r whose complete-graph value fits under the graph's own value bounds
//! both the chromatic number and the order of the largest complete
//! minor.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::cycles::enumerate_induced_cycles_capped;
use crate::graph::{Graph, MAX_VERTICES};
use crate::oracles::{
    chromatic_number, hadwiger_number, is_planar_small, Coloring, HadwigerWitness,
};
use crate::solids::enumerate_solids_from_cycles;
use crate::{codec, Budget, Error, Result, DEFAULT_CYCLE_CAP};

/// First characteristic: edges minus vertices. Negative on trees.
pub fn beth1(g: &Graph) -> i64 {
    g.edge_count() as i64 - g.vertex_count() as i64
}

/// Second characteristic: induced cycles minus edges plus vertices.
/// Fails when the induced cycle count exceeds the default cap.
pub fn beth2(g: &Graph) -> Result<i64> {
    let c = enumerate_induced_cycles_capped(g, DEFAULT_CYCLE_CAP)?.len() as i64;
    Ok(c - beth1(g))
}

/// Third characteristic: solids minus induced cycles plus edges minus
/// vertices.
pub fn beth3(g: &Graph) -> Result<i64> {
    let cycles = enumerate_induced_cycles_capped(g, DEFAULT_CYCLE_CAP)?;
    let s = enumerate_solids_from_cycles(g, &cycles).len() as i64;
    Ok(s - cycles.len() as i64 + beth1(g))
}

fn choose(r: u64, k: u64) -> i64 {
    if k > r {
        return 0;
    }
    let mut value: u64 = 1;
    for j in 0..k {
        value = value * (r - j) / (j + 1);
    }
    value as i64
}

/// Closed form of characteristic `i` on the complete graph of order `r`.
///
/// On complete graphs every 3-subset induces a cycle and every 4-subset
/// is a solid, so the sums telescope into binomials:
/// C(r,2) - r, then C(r,3) - C(r,2) + r, then
/// C(r,4) - C(r,3) + C(r,2) - r. All three are nondecreasing in `r`.
pub fn beth_complete(i: u8, r: u64) -> Result<i64> {
    if !(1..=3).contains(&i) {
        return Err(Error::BadIndex { i });
    }
    if r == 0 || r > MAX_VERTICES as u64 {
        return Err(Error::BadOrder { r });
    }
    let signed = r as i64;
    Ok(match i {
        1 => choose(r, 2) - signed,
        2 => choose(r, 3) - choose(r, 2) + signed,
        _ => choose(r, 4) - choose(r, 3) + choose(r, 2) - signed,
    })
}

/// Largest order r (up to 62) whose complete graph keeps characteristic
/// `i` at or below `value`; 0 when not even the single vertex fits.
pub fn max_complete_order_within(i: u8, value: i64) -> Result<usize> {
    if !(1..=3).contains(&i) {
        return Err(Error::BadIndex { i });
    }
    let mut best = 0;
    for r in 1..=MAX_VERTICES as u64 {
        if beth_complete(i, r).expect("order is in range") <= value {
            best = r as usize;
        }
    }
    Ok(best)
}

/// Chromatic upper bound from the first characteristic alone: the
/// largest r with C(r,2) - r at or below m - n.
pub fn first_upper_bound(g: &Graph) -> usize {
    let b1 = beth1(g);
    let bound = max_complete_order_within(1, b1).expect("index 1 is valid");
    #[cfg(debug_assertions)]
    if b1 >= -1 {
        let root = (9.0 + 8.0 * b1 as f64).sqrt();
        let closed = ((3.0 + root) / 2.0).floor() as usize;
        debug_assert_eq!(bound, closed.min(MAX_VERTICES), "scan and closed form agree");
    }
    bound
}

/// Outcome of one named theorem check inside a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// A needed quantity was cut off by a budget, cap, or size limit.
    SkippedBudget,
    /// The hypothesis does not apply, or oracles were disabled.
    SkippedPrecondition,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::SkippedBudget => "skipped-budget",
            CheckStatus::SkippedPrecondition => "skipped-precondition",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(detail: String) -> Self {
        CheckOutcome {
            status: CheckStatus::Pass,
            detail,
        }
    }

    fn fail(detail: String) -> Self {
        CheckOutcome {
            status: CheckStatus::Fail,
            detail,
        }
    }

    fn budget(detail: &str) -> Self {
        CheckOutcome {
            status: CheckStatus::SkippedBudget,
            detail: detail.to_string(),
        }
    }

    fn precondition(detail: &str) -> Self {
        CheckOutcome {
            status: CheckStatus::SkippedPrecondition,
            detail: detail.to_string(),
        }
    }
}

/// Knobs for [`report`]. `budget` is spent per oracle call, not shared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReportOptions {
    pub budget: Budget,
    pub cycle_cap: usize,
    /// When false, the chromatic, complete-minor, and planarity oracles
    /// are skipped deliberately: their fields stay empty without
    /// counting as an omission, and oracle-dependent checks are marked
    /// skipped-precondition.
    pub with_oracles: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            budget: Budget::default(),
            cycle_cap: DEFAULT_CYCLE_CAP,
            with_oracles: true,
        }
    }
}

/// Everything the engine can say about one connected graph. Fields are
/// `None` when a cap or budget cut the computation short; `omitted`
/// names each missing field with the reason, and stays empty on a
/// complete report. The `checks` map always carries all nine named
/// theorem checks, each pass, fail, or skipped with a reason.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacteristicReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub c: Option<usize>,
    pub s: Option<usize>,
    pub beth1: i64,
    pub beth2: Option<i64>,
    pub beth3: Option<i64>,
    pub bound1: usize,
    pub bound2: Option<usize>,
    pub bound3: Option<usize>,
    pub chi: Option<usize>,
    pub hadwiger: Option<usize>,
    pub planar: Option<bool>,
    pub chi_witness: Option<Coloring>,
    pub hadwiger_witness: Option<HadwigerWitness>,
    pub checks: BTreeMap<String, CheckOutcome>,
    pub omitted: Vec<String>,
}

/// Computes the characteristics, the derived bounds, and (budget and
/// size permitting) the exact chromatic number, largest complete minor,
/// planarity, and the named theorem checks for one connected graph. Cap
/// and budget shortfalls degrade the report instead of failing it;
/// structural problems (empty or disconnected input) are hard errors.
pub fn report(g: &Graph, opts: ReportOptions) -> Result<CharacteristicReport> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut omitted = Vec::new();
    let n = g.vertex_count();
    let m = g.edge_count();
    let b1 = beth1(g);
    let bound1 = first_upper_bound(g);

    let cycles = match enumerate_induced_cycles_capped(g, opts.cycle_cap) {
        Ok(cycles) => Some(cycles),
        Err(Error::CycleCapExceeded { cap }) => {
            omitted.push(format!("c: induced cycle count exceeds the cap of {cap}"));
            None
        }
        Err(e) => return Err(e),
    };
    let c = cycles.as_ref().map(Vec::len);
    let odd = cycles
        .as_ref()
        .map(|cs| cs.iter().filter(|cy| cy.len() % 2 == 1).count());
    let s = match &cycles {
        Some(cycles) => Some(enumerate_solids_from_cycles(g, cycles).len()),
        None => {
            omitted.push("s: solids build on the induced cycle list".to_string());
            None
        }
    };
    let beth2 = c.map(|c| c as i64 - b1);
    let beth3 = match (s, c) {
        (Some(s), Some(c)) => Some(s as i64 - c as i64 + b1),
        _ => None,
    };
    let bound2 = beth2.map(|v| max_complete_order_within(2, v).expect("index 2 is valid"));
    let bound3 = beth3.map(|v| max_complete_order_within(3, v).expect("index 3 is valid"));

    let mut chi = None;
    let mut chi_witness = None;
    let mut hadwiger = None;
    let mut hadwiger_witness = None;
    let mut planar = None;
    if opts.with_oracles {
        match chromatic_number(g, opts.budget) {
            Ok((k, witness)) => {
                chi = Some(k);
                chi_witness = Some(witness);
            }
            Err(Error::BudgetExhausted { cap }) => {
                omitted.push(format!("chi: node budget of {cap} exhausted"));
            }
            Err(Error::TooLarge { max, .. }) => {
                omitted.push(format!("chi: exact coloring supports at most {max} vertices"));
            }
            Err(e) => return Err(e),
        }
        match hadwiger_number(g, opts.budget) {
            Ok((h, witness)) => {
                hadwiger = Some(h);
                hadwiger_witness = Some(witness);
            }
            Err(Error::BudgetExhausted { cap }) => {
                omitted.push(format!("hadwiger: node budget of {cap} exhausted"));
            }
            Err(Error::TooLarge { max, .. }) => {
                omitted.push(format!(
                    "hadwiger: exact minor search supports at most {max} vertices"
                ));
            }
            Err(e) => return Err(e),
        }
        match is_planar_small(g, opts.budget) {
            Ok(p) => planar = Some(p),
            Err(Error::BudgetExhausted { cap }) => {
                omitted.push(format!("planar: node budget of {cap} exhausted"));
            }
            Err(Error::TooLarge { max, .. }) => {
                omitted.push(format!(
                    "planar: exact minor search supports at most {max} vertices"
                ));
            }
            Err(e) => return Err(e),
        }
    }

    let bounds = [Some(bound1), bound2, bound3];
    let mut checks = BTreeMap::new();
    checks.insert(
        "chi_within_bounds".to_string(),
        within_bounds_check("chi", chi, &bounds, opts.with_oracles),
    );
    checks.insert(
        "hadwiger_within_bounds".to_string(),
        within_bounds_check("hadwiger", hadwiger, &bounds, opts.with_oracles),
    );
    checks.insert(
        "hadwiger_equality".to_string(),
        hadwiger_equality_check(chi, hadwiger, b1, beth2, beth3, opts.with_oracles),
    );
    checks.insert(
        "odd_cycle_bound".to_string(),
        odd_cycle_check(odd, chi, opts.with_oracles),
    );
    checks.insert(
        "threshold_C".to_string(),
        threshold_check("C", 3, c, chi, hadwiger, opts.with_oracles),
    );
    checks.insert(
        "threshold_S".to_string(),
        threshold_check("S", 4, s, chi, hadwiger, opts.with_oracles),
    );
    let f = m as i64 - n as i64 + 2;
    checks.insert(
        "planar_euler_lower_bound".to_string(),
        planar_euler_check(planar, c, s, f, opts.with_oracles),
    );
    checks.insert(
        "planar_four_color_cycles".to_string(),
        planar_cycles_check(planar, c, chi, f, opts.with_oracles),
    );
    checks.insert(
        "planar_four_color_solids".to_string(),
        planar_solids_check(planar, c, s, chi, f, opts.with_oracles),
    );

    Ok(CharacteristicReport {
        graph6: codec::to_graph6(g),
        n,
        m,
        c,
        s,
        beth1: b1,
        beth2,
        beth3,
        bound1,
        bound2,
        bound3,
        chi,
        hadwiger,
        planar,
        chi_witness,
        hadwiger_witness,
        checks,
        omitted,
    })
}

const ORACLES_DISABLED: &str = "oracles disabled";

/// chi (or hadwiger) never exceeds any available bound.
fn within_bounds_check(
    name: &str,
    value: Option<usize>,
    bounds: &[Option<usize>; 3],
    with_oracles: bool,
) -> CheckOutcome {
    if !with_oracles {
        return CheckOutcome::precondition(ORACLES_DISABLED);
    }
    let Some(v) = value else {
        return CheckOutcome::budget("exact value unavailable");
    };
    for (i, b) in bounds.iter().enumerate() {
        if let Some(b) = b {
            if v > *b {
                return CheckOutcome::fail(format!("{name}={v} exceeds bound{}={b}", i + 1));
            }
        }
    }
    let listed: Vec<String> = bounds
        .iter()
        .enumerate()
        .filter_map(|(i, b)| b.map(|b| format!("bound{}={b}", i + 1)))
        .collect();
    CheckOutcome::pass(format!("{name}={v} within {}", listed.join(", ")))
}

/// When some characteristic of the graph equals that of the complete
/// graph on hadwiger-number many vertices, chi stays at or below the
/// hadwiger number.
fn hadwiger_equality_check(
    chi: Option<usize>,
    hadwiger: Option<usize>,
    b1: i64,
    b2: Option<i64>,
    b3: Option<i64>,
    with_oracles: bool,
) -> CheckOutcome {
    if !with_oracles {
        return CheckOutcome::precondition(ORACLES_DISABLED);
    }
    let Some(h) = hadwiger else {
        return CheckOutcome::budget("hadwiger number unavailable");
    };
    let mut matched = Vec::new();
    let values = [Some(b1), b2, b3];
    for (i, v) in values.iter().enumerate() {
        if let Some(v) = v {
            let idx = i as u8 + 1;
            if beth_complete(idx, h as u64).expect("h is a valid order") == *v {
                matched.push(idx);
            }
        }
    }
    if matched.is_empty() {
        return CheckOutcome::pass(format!(
            "no characteristic matches its complete-graph value at order {h}; nothing to assert"
        ));
    }
    let Some(chi) = chi else {
        return CheckOutcome::budget("chromatic number unavailable");
    };
    if chi <= h {
        CheckOutcome::pass(format!(
            "characteristic {matched:?} matches the complete graph of order {h} and chi={chi} <= {h}"
        ))
    } else {
        CheckOutcome::fail(format!(
            "characteristic {matched:?} matches the complete graph of order {h} but chi={chi} > {h}"
        ))
    }
}

/// chi is at most the least n >= 2 whose 3-subset count covers the
/// number of odd induced cycles.
fn odd_cycle_check(odd: Option<usize>, chi: Option<usize>, with_oracles: bool) -> CheckOutcome {
    if !with_oracles {
        return CheckOutcome::precondition(ORACLES_DISABLED);
    }
    let Some(odd) = odd else {
        return CheckOutcome::budget("odd induced cycle count unavailable");
    };
    let Some(chi) = chi else {
        return CheckOutcome::budget("chromatic number unavailable");
    };
    let mut n = 2u64;
    while choose(n, 3) < odd as i64 {
        n += 1;
    }
    if (chi as u64) <= n {
        CheckOutcome::pass(format!("{odd} odd induced cycles <= C({n},3) and chi={chi} <= {n}"))
    } else {
        CheckOutcome::fail(format!("{odd} odd induced cycles <= C({n},3) but chi={chi} > {n}"))
    }
}

/// Fewer than C(n,k) cells of the given kind force both chi and the
/// hadwiger number strictly below n, at the least such n.
fn threshold_check(
    kind: &str,
    k: u64,
    count: Option<usize>,
    chi: Option<usize>,
    hadwiger: Option<usize>,
    with_oracles: bool,
) -> CheckOutcome {
    if !with_oracles {
        return CheckOutcome::precondition(ORACLES_DISABLED);
    }
    let Some(count) = count else {
        return CheckOutcome::budget("cell count unavailable");
    };
    let (Some(chi), Some(h)) = (chi, hadwiger) else {
        return CheckOutcome::budget("exact chi or hadwiger unavailable");
    };
    let mut n = 1u64;
    while choose(n, k) <= count as i64 {
        n += 1;
    }
    let worst = chi.max(h) as u64;
    if worst < n {
        CheckOutcome::pass(format!(
            "|{kind}|={count} < C({n},{k}) and max(chi,hadwiger)={worst} < {n}"
        ))
    } else {
        CheckOutcome::fail(format!(
            "|{kind}|={count} < C({n},{k}) but max(chi,hadwiger)={worst} >= {n}"
        ))
    }
}

fn planar_gate(planar: Option<bool>, with_oracles: bool) -> Option<CheckOutcome> {
    if !with_oracles {
        return Some(CheckOutcome::precondition(ORACLES_DISABLED));
    }
    match planar {
        Some(true) => None,
        Some(false) => Some(CheckOutcome::precondition("not planar")),
        None => Some(CheckOutcome::budget("planarity unresolved")),
    }
}

/// Connected planar graphs satisfy s - c + F >= 1 with F = m - n + 2.
fn planar_euler_check(
    planar: Option<bool>,
    c: Option<usize>,
    s: Option<usize>,
    f: i64,
    with_oracles: bool,
) -> CheckOutcome {
    if let Some(gate) = planar_gate(planar, with_oracles) {
        return gate;
    }
    let (Some(c), Some(s)) = (c, s) else {
        return CheckOutcome::budget("cell counts unavailable");
    };
    let value = s as i64 - c as i64 + f;
    if value >= 1 {
        CheckOutcome::pass(format!("s-c+F = {s}-{c}+{f} = {value} >= 1"))
    } else {
        CheckOutcome::fail(format!("s-c+F = {s}-{c}+{f} = {value} < 1"))
    }
}

/// A planar graph with at most F + 2 induced cycles is 4-colorable.
fn planar_cycles_check(
    planar: Option<bool>,
    c: Option<usize>,
    chi: Option<usize>,
    f: i64,
    with_oracles: bool,
) -> CheckOutcome {
    if let Some(gate) = planar_gate(planar, with_oracles) {
        return gate;
    }
    let Some(c) = c else {
        return CheckOutcome::budget("induced cycle count unavailable");
    };
    if c as i64 > f + 2 {
        return CheckOutcome::pass(format!("hypothesis fails: c={c} > F+2={}", f + 2));
    }
    let Some(chi) = chi else {
        return CheckOutcome::budget("chromatic number unavailable");
    };
    if chi <= 4 {
        CheckOutcome::pass(format!("c={c} <= F+2={} and chi={chi} <= 4", f + 2))
    } else {
        CheckOutcome::fail(format!("c={c} <= F+2={} but chi={chi} > 4", f + 2))
    }
}

/// A planar graph with s - c + F = 1 is 4-colorable.
fn planar_solids_check(
    planar: Option<bool>,
    c: Option<usize>,
    s: Option<usize>,
    chi: Option<usize>,
    f: i64,
    with_oracles: bool,
) -> CheckOutcome {
    if let Some(gate) = planar_gate(planar, with_oracles) {
        return gate;
    }
    let (Some(c), Some(s)) = (c, s) else {
        return CheckOutcome::budget("cell counts unavailable");
    };
    let value = s as i64 - c as i64 + f;
    if value != 1 {
        return CheckOutcome::pass(format!("hypothesis fails: s-c+F = {value} != 1"));
    }
    let Some(chi) = chi else {
        return CheckOutcome::budget("chromatic number unavailable");
    };
    if chi <= 4 {
        CheckOutcome::pass(format!("s-c+F = 1 and chi={chi} <= 4"))
    } else {
        CheckOutcome::fail(format!("s-c+F = 1 but chi={chi} > 4"))
    }
}
