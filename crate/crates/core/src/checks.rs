//! Cross-checks of the identities the library relies on, evaluated on one
//! matroid.

use num_bigint::BigInt;
use serde::Serialize;

use crate::classify::sphere_test;
use crate::error::Error;
use crate::matroid::Matroid;
use crate::topology::{convolution, wedge_matches_formula};
use crate::tutte::{self, has_coloop_free_shape, tutte_oracle_with_limit, tutte_zero_t_squared};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: String) -> Self {
        let status = if passed { Status::Pass } else { Status::Fail };
        Self { name, status, detail }
    }

    fn skipped(name: &'static str, detail: impl Into<String>) -> Self {
        Self {
            name,
            status: Status::Skipped,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    /// No check failed. Skipped checks do not count against the report.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs every check; the subset-expansion oracle only when `n <= oracle_limit`.
pub fn verify<M: Matroid + ?Sized>(m: &M, oracle_limit: usize) -> VerifyReport {
    let t = tutte::tutte(m);
    let (n, r) = (m.size(), m.full_rank());
    let mut checks = Vec::new();

    let conv = convolution(m);
    checks.push(Check::new(
        "convolution",
        conv.holds(),
        format!("T(M;1,t^2) = {}; sum over flats = {}", conv.lhs, conv.rhs),
    ));

    checks.push(match tutte_oracle_with_limit(m, oracle_limit) {
        Ok(oracle) => Check::new(
            "oracle_equality",
            oracle == t,
            format!("deletion-contraction {t}; subset expansion {oracle}"),
        ),
        Err(Error::GroundSetTooLarge { size, limit }) => {
            Check::skipped("oracle_equality", format!("{size} elements exceed the limit of {limit}"))
        }
        Err(e) => Check::new("oracle_equality", false, e.to_string()),
    });

    checks.push(Check::new(
        "tutte_nonnegative",
        t.has_nonnegative_coefficients(),
        format!("T(M;x,y) = {t}"),
    ));

    if r == 0 {
        checks.push(Check::skipped("order_complex_euler", "rank zero: the proper part is undefined"));
    } else {
        let lattice = m.flat_lattice();
        let euler = lattice.proper_part_reduced_euler();
        let mu = lattice.mobius();
        let mut passed = euler == mu;
        let mut detail = format!("reduced Euler characteristic {euler}, Möbius value {mu}");
        if m.loops().is_empty() {
            let count = t.evaluate(&BigInt::from(1), &BigInt::from(0));
            let signed = if r % 2 == 0 { count.clone() } else { -count.clone() };
            passed &= BigInt::from(euler) == signed;
            detail.push_str(&format!(", (-1)^{r} T(M;1,0) = {signed}"));
        }
        checks.push(Check::new("order_complex_euler", passed, detail));
    }

    if m.coloops().is_empty() {
        let p = tutte_zero_t_squared(&t);
        checks.push(Check::new(
            "coefficient_structure",
            has_coloop_free_shape(&p, n, r),
            format!("T(M;0,t^2) = {p}"),
        ));
    } else {
        checks.push(Check::skipped("coefficient_structure", "the matroid has a coloop"));
    }

    let sphere = sphere_test(m);
    checks.push(Check::new(
        "sphere_tests_agree",
        sphere.structural == sphere.tutte,
        format!(
            "direct sum of circuits: {}; T(M;0,t) = t^(n-r): {}",
            sphere.structural, sphere.tutte
        ),
    ));

    if r == 0 {
        checks.push(Check::skipped("singular_wedge", "trivial torus: no singular set"));
    } else {
        checks.push(Check::new(
            "singular_wedge",
            wedge_matches_formula(m),
            "wedge summands against t^(r-2) [T(1,t^2) - T(0,t^2)]".into(),
        ));
    }

    VerifyReport { checks }
}
