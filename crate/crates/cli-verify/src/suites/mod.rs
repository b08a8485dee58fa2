//! Named verification suites behind `verify <suite>`.

mod appendix;
mod calculus;
mod clifford;
mod d3;
mod duality;
mod further_twist;
mod omega;

pub use duality::anchors as duality_anchors;

use duality_engine::SignConventionFile;

use crate::report::{Check, Report};
use crate::sampling::{self, Rng8};

/// Inputs shared by every suite run.
#[derive(Clone, Debug)]
pub struct SuiteContext {
    pub seed: u64,
    pub signs: SignConventionFile,
}

impl SuiteContext {
    pub fn new(seed: u64, signs: SignConventionFile) -> Self {
        SuiteContext { seed, signs }
    }

    /// Generator for one named sample, independent of the order checks run in.
    pub fn rng(&self, sample: &str) -> Rng8 {
        let stream = sample.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3));
        sampling::rng(self.seed, stream)
    }
}

impl Default for SuiteContext {
    fn default() -> Self {
        SuiteContext::new(0, SignConventionFile::frozen())
    }
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn run(&self, ctx: &SuiteContext) -> Vec<Check>;
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite {0}; expected one of {1}")]
pub struct UnknownSuite(pub String, pub String);

pub struct SuiteRegistry {
    suites: Vec<Box<dyn Suite>>,
}

impl SuiteRegistry {
    pub fn standard() -> Self {
        SuiteRegistry {
            suites: vec![
                Box::new(calculus::Calculus),
                Box::new(further_twist::FurtherTwist),
                Box::new(duality::Duality),
                Box::new(d3::D3),
                Box::new(appendix::Appendix),
                Box::new(omega::Omega),
                Box::new(clifford::Clifford),
            ],
        }
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.suites.iter().map(|s| s.name()).collect()
    }

    fn get(&self, name: &str) -> Result<&dyn Suite, UnknownSuite> {
        self.suites
            .iter()
            .find(|s| s.name() == name)
            .map(|s| s.as_ref())
            .ok_or_else(|| UnknownSuite(name.to_string(), [self.names(), vec!["all"]].concat().join(", ")))
    }

    /// `all` runs every suite on its own thread; checks keep registry order.
    pub fn run(&self, name: &str, ctx: &SuiteContext) -> Result<Report, UnknownSuite> {
        let selected: Vec<&dyn Suite> = if name == "all" { self.suites.iter().map(|s| s.as_ref()).collect() } else { vec![self.get(name)?] };
        let results: Vec<Vec<Check>> = std::thread::scope(|scope| {
            let handles: Vec<_> = selected
                .iter()
                .map(|suite| {
                    scope.spawn(move || {
                        let mut checks = suite.run(ctx);
                        for c in &mut checks {
                            c.suite = suite.name().to_string();
                        }
                        checks
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
        });
        Ok(Report {
            suite: name.to_string(),
            seed: ctx.seed,
            signs: ctx.signs.entries().iter().map(|(k, v)| (k.clone(), *v)).collect(),
            checks: results.into_iter().flatten().collect(),
        })
    }
}

/// Run `check` on `n` generated instances; the first failure is the witness.
pub(crate) fn property<T>(
    name: &str,
    anchor: &str,
    n: usize,
    rng: &mut Rng8,
    mut generate: impl FnMut(&mut Rng8) -> T,
    show: impl Fn(&T) -> String,
    check: impl Fn(&T) -> Result<bool, String>,
) -> Check {
    for k in 0..n {
        let input = generate(rng);
        let verdict = check(&input);
        if verdict != Ok(true) {
            let why = match verdict {
                Err(e) => format!("instance {}: {}: {}", k, show(&input), e),
                _ => format!("instance {}: {}", k, show(&input)),
            };
            return Check::from_result(name, anchor, Err(why)).with_detail(format!("{} instances", n));
        }
    }
    Check::new(name, anchor, true).with_detail(format!("{} instances", n))
}

/// A single exact comparison.
pub(crate) fn equal<T: PartialEq + std::fmt::Display>(name: &str, anchor: &str, got: Result<T, String>, expected: T) -> Check {
    match got {
        Ok(g) if g == expected => Check::new(name, anchor, true),
        Ok(g) => Check::from_result(name, anchor, Err(format!("got {} expected {}", g, expected))),
        Err(e) => Check::from_result(name, anchor, Err(e)),
    }
}

pub(crate) fn holds(name: &str, anchor: &str, r: Result<bool, String>) -> Check {
    match r {
        Ok(true) => Check::new(name, anchor, true),
        Ok(false) => Check::from_result(name, anchor, Err("identity does not hold".into())),
        Err(e) => Check::from_result(name, anchor, Err(e)),
    }
}

pub(crate) fn text(e: impl std::fmt::Display) -> String {
    e.to_string()
}
