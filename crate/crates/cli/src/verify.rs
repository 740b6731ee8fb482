//! Checks every shipped fixture against its expected parameters.

use lcdembed_core::embed::extract_blocks;
use lcdembed_core::{DistanceValue, LinearCode, MethodChoice};

use crate::fixtures::{DistanceCheck, Fixture, FIXTURES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: &'static str,
    pub expected: String,
    pub found: String,
}

impl Check {
    fn new(label: &'static str, expected: impl ToString, found: impl ToString) -> Check {
        Check { label, expected: expected.to_string(), found: found.to_string() }
    }

    pub fn passed(&self) -> bool {
        self.expected == self.found
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureReport {
    pub name: &'static str,
    pub checks: Vec<Check>,
    /// Summary fragments as found, e.g. `[24,6]`, `lcd=true`, `d=12`.
    pub summary: Vec<String>,
}

impl FixtureReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }

    pub fn row(&self) -> String {
        let mut s = format!("{} {}", self.name, self.summary.join(" "));
        if self.passed() {
            s.push_str(" PASS");
        } else {
            let why: Vec<String> = self
                .failures()
                .iter()
                .map(|c| format!("{}: expected {}, found {}", c.label, c.expected, c.found))
                .collect();
            s.push_str(&format!(" FAIL ({})", why.join("; ")));
        }
        s
    }
}

fn distance_text(v: Result<DistanceValue, lcdembed_core::Error>) -> String {
    match v {
        Ok(DistanceValue::Exact(d)) => d.to_string(),
        Ok(DistanceValue::ExceedsBound(w)) => format!(">{w}"),
        Err(e) => format!("error: {e}"),
    }
}

fn distance(code: &LinearCode, method: MethodChoice, w_max: Option<usize>) -> String {
    distance_text(code.min_distance(method, w_max).map(|r| r.value))
}

pub fn check_fixture(fx: &Fixture) -> FixtureReport {
    let mut checks = Vec::new();
    let mut summary = Vec::new();
    let code = match fx.code() {
        Ok(c) => c,
        Err(e) => {
            checks.push(Check::new("parse", "ok", e));
            return FixtureReport { name: fx.name, checks, summary };
        }
    };
    checks.push(Check::new("n", fx.n, code.n()));
    checks.push(Check::new("k", fx.k, code.k()));
    summary.push(format!("[{},{}]", code.n(), code.k()));

    let ell = code.hull_dimension();
    checks.push(Check::new("ell", fx.ell, ell));
    if fx.ell == 0 {
        summary.push(format!("lcd={}", ell == 0));
    } else {
        summary.push(format!("ell={ell}"));
    }

    let d = match fx.distance {
        DistanceCheck::Auto => distance(&code, MethodChoice::Auto, None),
        DistanceCheck::LowWeight(w) => distance(&code, MethodChoice::LowWeight, Some(w)),
        DistanceCheck::BothEngines => {
            let lw = distance(&code, MethodChoice::LowWeight, None);
            checks.push(Check::new("d_lowweight", fx.d, &lw));
            distance(&code, MethodChoice::Enumerate, None)
        }
    };
    checks.push(Check::new("d", fx.d, &d));
    summary.push(format!("d={d}"));

    if let Some(base) = fx.base {
        let coords: Vec<usize> = (code.n().saturating_sub(base.ell)..code.n()).collect();
        match code.puncture(&coords) {
            Ok(punctured) => {
                let bell = punctured.hull_dimension();
                checks.push(Check::new("base_n", base.n, punctured.n()));
                checks.push(Check::new("base_k", base.k, punctured.k()));
                checks.push(Check::new("base_ell", base.ell, bell));
                let bd = distance(&punctured, MethodChoice::Auto, None);
                checks.push(Check::new("base_d", base.d, &bd));
                summary.push(format!("base_ell={bell}"));
                summary.push(format!("base=[{},{},{}]", punctured.n(), punctured.k(), bd));
                if bell == base.ell && fx.ell == 0 {
                    let blocks = extract_blocks(&code, &punctured).map(|_| "invertible D");
                    checks.push(Check::new(
                        "blocks",
                        "invertible D",
                        blocks.map_or_else(|e| e.to_string(), str::to_string),
                    ));
                }
            }
            Err(e) => checks.push(Check::new("puncture", "ok", e)),
        }
    }
    FixtureReport { name: fx.name, checks, summary }
}

pub fn check_all() -> Vec<FixtureReport> {
    FIXTURES.iter().map(check_fixture).collect()
}
