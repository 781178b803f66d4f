//! Suite selection and orchestration behind `ugmin verify`.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::context::Context;
use crate::lie::{jacobiator, load_raw, LieError, RawAlgebra};
use crate::pairing::EqMode;
use crate::report::{Bounds, CheckRecord, Meta, Outcome, Recorder, Report};
use crate::scalar::{int, Scalar};
use crate::smash::SmashElement;
use crate::uea::{add_term, render_terms, PbwMonomial, Side, UeaElement};
use crate::{algebroid, theorem61, yd};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Validate,
    Theorem61,
    Yd,
    Algebroid,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Validate, Suite::Theorem61, Suite::Yd, Suite::Algebroid];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Validate => "validate",
            Suite::Theorem61 => "theorem61",
            Suite::Yd => "yd",
            Suite::Algebroid => "algebroid",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses `all` or a comma-separated list of suite names.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>, VerifyError> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim) {
        match part {
            "all" => out.extend(Suite::ALL),
            _ => match Suite::ALL.iter().find(|x| x.name() == part) {
                Some(x) => out.push(*x),
                None => return Err(VerifyError::Config(format!("unknown suite `{part}`"))),
            },
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

impl FromStr for EqMode {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "exact" {
            return Ok(EqMode::exact());
        }
        match s.strip_prefix("heuristic:").map(str::parse::<u32>) {
            Some(Ok(d)) => Ok(EqMode::Heuristic(d)),
            _ => Err(VerifyError::Config(format!("mode must be `heuristic:D` or `exact`, got `{s}`"))),
        }
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Algebra(#[from] LieError),
    #[error("invalid configuration: {0}")]
    Config(String),
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Catalog name or JSON path.
    pub algebra: String,
    pub dmax: u32,
    pub rmax: u32,
    pub mode: EqMode,
    pub suites: Vec<Suite>,
    pub seed: u64,
    /// Record wall time per check; off gives byte-identical reports.
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            algebra: "sl2".into(),
            dmax: 3,
            rmax: 2,
            mode: EqMode::Heuristic(6),
            suites: Suite::ALL.to_vec(),
            seed: 0,
            timing: true,
        }
    }
}

impl SuiteConfig {
    pub fn check(&self) -> Result<(), VerifyError> {
        if self.dmax < 1 || self.rmax < 1 {
            return Err(VerifyError::Config("dmax and rmax must be at least 1".into()));
        }
        if let EqMode::Heuristic(d) = self.mode {
            if d < self.dmax {
                return Err(VerifyError::Config(format!("heuristic degree {d} is below dmax {}", self.dmax)));
            }
        }
        if self.suites.is_empty() {
            return Err(VerifyError::Config("no suite selected".into()));
        }
        Ok(())
    }

    pub fn bounds(&self) -> Bounds {
        Bounds { dmax: self.dmax, rmax: self.rmax, mode: self.mode, timing: self.timing }
    }
}

/// Runs the selected suites. An algebra that fails validation yields a report holding
/// the failing `validate` records and nothing else.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Report, VerifyError> {
    cfg.check()?;
    let raw = load_raw(&cfg.algebra)?;
    let b = cfg.bounds();
    let mut suites = cfg.suites.clone();
    let validation = validate_suite(&raw, b.timing);
    let valid = theorem61::all_pass(&validation);
    let mut checks = Vec::new();
    if suites.contains(&Suite::Validate) || !valid {
        checks.extend(validation);
        if !suites.contains(&Suite::Validate) {
            suites.insert(0, Suite::Validate);
        }
    }
    if valid {
        let ctx = Context::new(raw.validate()?);
        for s in &suites {
            match s {
                Suite::Validate => {}
                Suite::Theorem61 => checks.extend(theorem61::theorem61(&ctx, &b)),
                Suite::Yd => {
                    checks.extend(yd::yd_suite(&ctx, &b));
                    checks.extend(random_yd(&ctx, &b, cfg.seed));
                }
                Suite::Algebroid => checks.extend(algebroid::algebroid_suite(&ctx, &b)),
            }
        }
    }
    let meta = Meta {
        tool: env!("CARGO_PKG_NAME").into(),
        version: env!("CARGO_PKG_VERSION").into(),
        algebra: raw.name.clone(),
        dim: raw.n,
        suites: suites.iter().map(|s| s.name().to_string()).collect(),
        dmax: cfg.dmax,
        rmax: cfg.rmax,
        mode: cfg.mode.to_string(),
        seed: cfg.seed,
    };
    Ok(Report::new(meta, checks))
}

fn render_combination(coeffs: &[Scalar]) -> String {
    let mut terms = std::collections::BTreeMap::new();
    for (l, c) in coeffs.iter().enumerate() {
        add_term(&mut terms, l, c.clone());
    }
    render_terms(terms.iter(), |l| format!("X{}", l + 1), |_| false, |l| *l)
}

/// Antisymmetry per pair `i < j` and the Jacobi identity per triple `i < j < k`.
pub fn validate_suite(raw: &RawAlgebra, timing: bool) -> Vec<CheckRecord> {
    let mut rec = Recorder::new(Suite::Validate.name(), timing);
    let n = raw.n;
    let c = &raw.constants;
    for i in 0..n {
        for j in i..n {
            rec.check("antisymmetry", format!("i={}, j={}", i + 1, j + 1), || {
                let ij: Vec<Scalar> = (0..n).map(|k| c[k][i][j].clone()).collect();
                let ji: Vec<Scalar> = (0..n).map(|k| -&c[k][j][i]).collect();
                if ij == ji {
                    Outcome::Pass
                } else {
                    Outcome::fail(
                        format!("[X{}, X{}] = {}", i + 1, j + 1, render_combination(&ij)),
                        format!("-[X{}, X{}] = {}", j + 1, i + 1, render_combination(&ji)),
                    )
                }
            });
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                rec.check("jacobi", format!("i={}, j={}, k={}", i + 1, j + 1, k + 1), || {
                    let v = jacobiator(c, i, j, k);
                    if v.iter().all(Zero::is_zero) {
                        Outcome::Pass
                    } else {
                        Outcome::fail(
                            format!(
                                "[[X{a},X{b}],X{c}] + [[X{b},X{c}],X{a}] + [[X{c},X{a}],X{b}] = {}",
                                render_combination(&v),
                                a = i + 1,
                                b = j + 1,
                                c = k + 1
                            ),
                            "0",
                        )
                    }
                });
            }
        }
    }
    rec.finish()
}

/// Random linear combinations: `P <| lambda(D) = DP` and `lambda(DP) = lambda(P) lambda(D)`.
fn random_yd(ctx: &Context, b: &Bounds, seed: u64) -> Vec<CheckRecord> {
    const SAMPLES: usize = 4;
    let n = ctx.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let half = (b.dmax / 2).max(1);
    let basis = PbwMonomial::all_up_to(n, half);
    let pick = |rng: &mut ChaCha8Rng| {
        let mut u = UeaElement::zero(Side::L, n);
        for _ in 0..3 {
            let m = basis[rng.gen_range(0..basis.len())].clone();
            u.add_scaled(
                &UeaElement::monomial(Side::L, m, Scalar::from_integer(1.into())),
                &int(rng.gen_range(-3..=3)),
            );
        }
        u
    };
    let mut rec = Recorder::new(Suite::Yd.name(), b.timing);
    for s in 0..SAMPLES {
        let d = pick(&mut rng);
        let p = pick(&mut rng);
        let inst = format!("random #{} (seed {seed}): D={}, P={}", s + 1, d, p);
        rec.check("e", inst.clone(), || {
            let lhs = ctx.act_right_smash(&p, &ctx.lambda_coact(&d)).expect("left copy");
            let rhs = ctx.uea.left.mul(&d, &p).expect("left copy");
            Outcome::compare(&lhs, &rhs)
        });
        rec.check("c", inst, || {
            let lhs = ctx.lambda_coact(&ctx.uea.left.mul(&d, &p).expect("left copy"));
            let rhs: SmashElement = ctx.smash_mul(&ctx.lambda_coact(&p), &ctx.lambda_coact(&d)).expect("left copy");
            let v = ctx.smash_equals(&lhs, &rhs, b.mode);
            Outcome::from_verdict(v, Side::L, || lhs.to_string(), || rhs.to_string())
        });
    }
    rec.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn config_invariants() {
        let mut cfg = SuiteConfig { dmax: 0, ..SuiteConfig::default() };
        assert!(cfg.check().is_err());
        cfg.dmax = 4;
        cfg.mode = EqMode::Heuristic(3);
        assert!(cfg.check().is_err());
        assert!(matches!("heuristic:x".parse::<EqMode>(), Err(VerifyError::Config(_))));
        assert_eq!("heuristic:8".parse::<EqMode>().unwrap(), EqMode::Heuristic(8));
        assert_eq!(parse_suites("yd,validate").unwrap(), vec![Suite::Validate, Suite::Yd]);
        assert_eq!(parse_suites("all").unwrap().len(), 4);
        assert!(parse_suites("ydd").is_err());
    }

    #[test]
    fn broken_jacobi_is_reported() {
        // [X1, X2] = X2, [X2, X3] = X1: the Jacobiator of (1, 2, 3) is X1
        let constants = crate::lie::dense_from_brackets(3, &[(1, 2, 2, int(1)), (2, 3, 1, int(1))]).unwrap();
        let raw = RawAlgebra { name: "broken".into(), labels: vec![], n: 3, constants };
        assert!(matches!(raw.validate(), Err(LieError::JacobiViolation { .. })));
        let recs = validate_suite(&raw, false);
        let bad: Vec<_> = recs.iter().filter(|r| r.status == Status::Fail).collect();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].code, "jacobi");
        assert_eq!(bad[0].witness.as_ref().unwrap().lhs, "[[X1,X2],X3] + [[X2,X3],X1] + [[X3,X1],X2] = X1");
    }

    #[test]
    fn deterministic_without_timing() {
        let cfg = SuiteConfig {
            algebra: "solvable2".into(),
            dmax: 2,
            rmax: 1,
            suites: vec![Suite::Validate, Suite::Yd],
            timing: false,
            ..SuiteConfig::default()
        };
        let a = run_suite(&cfg).unwrap().to_json();
        let b = run_suite(&cfg).unwrap().to_json();
        assert_eq!(a, b);
        assert!(a.contains("random #1 (seed 0)"));
    }
}
