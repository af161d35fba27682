//! Verification suites behind `nchilb verify`.

use std::fmt;

use nchilb_core::motives::{self, Caps, Route};
use nchilb_core::qtools::{self, QBinomialSamples};
use nchilb_core::steinberg::{self, AuditMode, Permutation};
use nchilb_core::trees::{self, PavingKind};
use nchilb_core::LaurentPolynomial as L;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    Routes,
    Paving,
    Reciprocity,
    Qbinomial,
    Euler,
    Steinberg,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Routes,
        Suite::Paving,
        Suite::Reciprocity,
        Suite::Qbinomial,
        Suite::Euler,
        Suite::Steinberg,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Routes => "routes",
            Suite::Paving => "paving",
            Suite::Reciprocity => "reciprocity",
            Suite::Qbinomial => "qbinomial",
            Suite::Euler => "euler",
            Suite::Steinberg => "steinberg",
            Suite::All => "all",
        }
    }
}

/// One verified cell. On failure the message names both conflicting values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub suite: Suite,
    pub m: u32,
    pub d: usize,
    pub label: String,
    pub failure: Option<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} m={} d={} {}",
            self.suite.as_str(),
            self.m,
            self.d,
            self.label
        )?;
        if let Some(why) = &self.failure {
            write!(f, ": {why}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub outcomes: Vec<Outcome>,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &Outcome> {
        self.outcomes.iter().filter(|o| !o.passed())
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    fn check(&mut self, suite: Suite, m: u32, d: usize, label: impl Into<String>, failure: Option<String>) {
        self.outcomes.push(Outcome {
            suite,
            m,
            d,
            label: label.into(),
            failure,
        });
    }

    fn compare(&mut self, suite: Suite, m: u32, d: usize, label: &str, got: (&str, &L), want: (&str, &L)) {
        let failure = (got.1 != want.1)
            .then(|| format!("{} gives {} but {} gives {}", got.0, got.1, want.0, want.1));
        self.check(suite, m, d, label, failure);
    }
}

pub struct Params {
    pub m: u32,
    pub dmax: usize,
    pub caps: Caps,
    pub seed: u64,
}

pub fn run_suites(suites: &[Suite], p: &Params) -> Result<Report, CliError> {
    let mut selected: Vec<Suite> = if suites.contains(&Suite::All) {
        Suite::EACH.to_vec()
    } else {
        suites.to_vec()
    };
    selected.sort();
    selected.dedup();
    let mut report = Report::default();
    let mut rng = StdRng::seed_from_u64(p.seed);
    for suite in selected {
        match suite {
            Suite::Routes => routes(&mut report, p)?,
            Suite::Paving => paving(&mut report, p)?,
            Suite::Reciprocity => reciprocity(&mut report, p, &mut rng)?,
            Suite::Qbinomial => qbinomial(&mut report, p)?,
            Suite::Euler => euler(&mut report, p)?,
            Suite::Steinberg => steinberg_suite(&mut report, p, &mut rng)?,
            Suite::All => unreachable!("expanded above"),
        }
    }
    Ok(report)
}

fn routes(report: &mut Report, p: &Params) -> Result<(), CliError> {
    let (m, dmax) = (p.m, p.dmax);
    let reference = motives::punctual_motives(m, dmax, Route::Functional, &p.caps)?;
    for route in [Route::Reciprocity, Route::Ratio, Route::Trees] {
        let col = motives::punctual_motives(m, dmax, route, &p.caps)?;
        for d in 0..=dmax {
            let label = format!("punctual route={route}");
            report.compare(Suite::Routes, m, d, &label, (route.as_str(), &col[d]), ("functional", &reference[d]));
        }
    }
    let full = motives::hilb_motives(m, dmax);
    let cells = trees::paving_series(m, dmax, PavingKind::Full, p.caps.max_trees)?;
    for d in 0..=dmax {
        report.compare(Suite::Routes, m, d, "full route=trees", ("trees", cells.coeff(d)), ("functional", &full[d]));
    }
    let product = motives::resolution_motives(m, dmax, Route::Product)?;
    let bseries = motives::resolution_motives(m, dmax, Route::Bseries)?;
    for d in 0..=dmax {
        report.compare(Suite::Routes, m, d, "resolution route=bseries", ("bseries", &bseries[d]), ("product", &product[d]));
    }
    Ok(())
}

fn paving(report: &mut Report, p: &Params) -> Result<(), CliError> {
    let (m, dmax) = (p.m, p.dmax);
    let punctual = motives::punctual_motives(m, dmax, Route::Functional, &p.caps)?;
    let full = motives::hilb_motives(m, dmax);
    for d in 0..=dmax {
        let rows = trees::census(m, d, p.caps.max_trees)?;
        let mut cells = L::zero();
        let mut cells_full = L::zero();
        let mut extensions = BigUint::from(0u32);
        let mut recursion_failures = Vec::new();
        for r in &rows {
            cells.add_term(r.dim_punctual as i64, 1.into());
            cells_full.add_term(r.dim_full as i64, 1.into());
            extensions += &r.linear_extensions;
            if !trees::d_recursion_check(&r.tree)? {
                recursion_failures.push(r.tree.to_string());
            }
        }
        report.compare(Suite::Paving, m, d, "Σ q^|D(T)|", ("census", &cells), ("functional", &punctual[d]));
        report.compare(Suite::Paving, m, d, "Σ q^dim S_T", ("census", &cells_full), ("functional", &full[d]));
        report.check(
            Suite::Paving,
            m,
            d,
            "grafting recursion",
            (!recursion_failures.is_empty()).then(|| format!("fails for {}", recursion_failures.join(" "))),
        );
        let product = motives::resolution_euler_formula(m, d);
        report.check(
            Suite::Paving,
            m,
            d,
            "Σ linear extensions",
            (extensions != product).then(|| format!("census gives {extensions} but the product gives {product}")),
        );
    }
    Ok(())
}

fn reciprocity(report: &mut Report, p: &Params, rng: &mut StdRng) -> Result<(), CliError> {
    let (m, dmax) = (p.m, p.dmax);
    let punctual = motives::punctual_motives(m, dmax, Route::Functional, &p.caps)?;
    let full = motives::hilb_motives(m, dmax);
    for d in 0..=dmax {
        let dim_full = motives::dimension(m, d, PavingKind::Full);
        let mirrored = full[d].reciprocal(dim_full);
        report.compare(Suite::Reciprocity, m, d, "q^dim h_d(1/q)", ("punctual", &punctual[d]), ("mirrored full", &mirrored));

        // the same identity at a random rational point
        let x = BigRational::new(BigInt::from(rng.gen_range(1..50)), BigInt::from(rng.gen_range(1..50)));
        let lhs = punctual[d].eval(&x, false)?;
        let rhs = full[d].eval(&x.recip(), false)? * num_traits::pow(x.clone(), dim_full as usize);
        report.check(
            Suite::Reciprocity,
            m,
            d,
            format!("evaluated at q={x}"),
            (lhs != rhs).then(|| format!("punctual gives {lhs} but mirrored full gives {rhs}")),
        );

        let dim = motives::dimension(m, d, PavingKind::Punctual);
        let monic = punctual[d].degree() == Some(dim) && punctual[d].leading_coefficient() == Some(&BigInt::from(1));
        report.check(
            Suite::Reciprocity,
            m,
            d,
            "degree law",
            (!monic).then(|| format!("{} is not monic of degree {dim}", punctual[d])),
        );
    }
    Ok(())
}

fn qbinomial(report: &mut Report, p: &Params) -> Result<(), CliError> {
    let r = qtools::qbinomial_theorem_check(p.dmax, &QBinomialSamples::default())?;
    for c in &r.checks {
        let a = c.a.map(|(s, j)| format!(" a={}q^{j}", if s < 0 { "-" } else { "" })).unwrap_or_default();
        report.check(
            Suite::Qbinomial,
            p.m,
            p.dmax,
            format!("{:?}/{:?} w={}{a}", c.identity, c.method, c.base_exponent),
            c.first_failure.map(|d| format!("sides differ at t^{d}")),
        );
    }
    Ok(())
}

fn euler(report: &mut Report, p: &Params) -> Result<(), CliError> {
    let (m, dmax) = (p.m, p.dmax);
    let punctual = motives::punctual_motives(m, dmax, Route::Functional, &p.caps)?;
    let full = motives::hilb_motives(m, dmax);
    let resolution = motives::resolution_motives(m, dmax, Route::Product)?;
    for d in 0..=dmax {
        let fc = BigInt::from(trees::fuss_catalan(m, d));
        for (label, value) in [("χ(punctual)", punctual[d].eval_at_one()), ("χ(full)", full[d].eval_at_one())] {
            report.check(
                Suite::Euler,
                m,
                d,
                label,
                (value != fc).then(|| format!("motive gives {value} but Fuss–Catalan gives {fc}")),
            );
        }
        let product = BigInt::from(motives::resolution_euler_formula(m, d));
        let chi = resolution[d].eval_at_one();
        report.check(
            Suite::Euler,
            m,
            d,
            "χ(resolution)",
            (chi != product).then(|| format!("motive gives {chi} but the product gives {product}")),
        );
    }
    Ok(())
}

fn steinberg_suite(report: &mut Report, p: &Params, rng: &mut StdRng) -> Result<(), CliError> {
    let m = p.m;
    for d in 0..=p.dmax {
        let grouped = steinberg::smallness_audit(m, d, AuditMode::Grouped, p.caps.max_permutations)?;
        let enumerable = factorial(d) <= BigUint::from(p.caps.max_permutations);
        if enumerable {
            let exhaustive = steinberg::smallness_audit(m, d, AuditMode::Exhaustive, p.caps.max_permutations)?;
            report.check(
                Suite::Steinberg,
                m,
                d,
                "grouped = exhaustive",
                (grouped != exhaustive).then(|| format!("grouped {grouped:?} but exhaustive {exhaustive:?}")),
            );
            let ok = steinberg::inversion_gf_check(d, p.caps.max_permutations)?;
            report.check(Suite::Steinberg, m, d, "Σ q^l(σ) = [d]_q!", (!ok).then(|| "inversion polynomial differs".into()));
        }
        let expected = motives::dimension(m, d, PavingKind::Punctual);
        let want_unique = m >= 2 || d <= 1;
        let failure = if grouped.top_dim != expected {
            Some(format!("top stratum has dimension {} but the punctual scheme has {expected}", grouped.top_dim))
        } else if grouped.unique_top != want_unique || !grouped.small {
            Some(format!("unique_top={} small={}", grouped.unique_top, grouped.small))
        } else {
            None
        };
        report.check(Suite::Steinberg, m, d, "smallness", failure);

        // sampled permutations land in the stratum row of their length
        let mut images: Vec<usize> = (1..=d).collect();
        images.shuffle(rng);
        let sigma = Permutation::new(images)?;
        let dim = steinberg::stratum_dimension(m, &sigma);
        let row = grouped.strata.iter().find(|s| s.length == steinberg::inversions(&sigma));
        report.check(
            Suite::Steinberg,
            m,
            d,
            format!("sampled σ={sigma}"),
            match row {
                Some(r) if r.quotient_dim == dim.quotient => None,
                Some(r) => Some(format!("stratum gives {} but the audit row gives {}", dim.quotient, r.quotient_dim)),
                None => Some("no audit row for its length".into()),
            },
        );
    }
    Ok(())
}

fn factorial(d: usize) -> BigUint {
    (1..=d as u64).map(BigUint::from).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_name_cell_and_both_values() {
        let mut r = Report::default();
        r.compare(Suite::Routes, 2, 3, "punctual route=ratio", ("ratio", &L::q()), ("functional", &L::one()));
        r.compare(Suite::Routes, 2, 2, "punctual route=trees", ("trees", &L::one()), ("functional", &L::one()));
        assert!(!r.all_passed());
        let f: Vec<String> = r.failures().map(ToString::to_string).collect();
        assert_eq!(f, ["FAIL routes m=2 d=3 punctual route=ratio: ratio gives q but functional gives 1"]);
        assert_eq!(r.outcomes[1].to_string(), "PASS routes m=2 d=2 punctual route=trees");
    }
}
