use std::io::{self, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use gfft_core::algorithms::{Algorithm, ApplyOptions, BinaryMethod, FactoredTransform, GoertzelPlan, Plan};
use gfft_core::reference::{fourier_matrix, naive_dft, poly_eval};
use gfft_core::{Element, FieldContext};

use crate::opts::{UsageError, VerifyArgs};

pub const MIN_M: u32 = 2;
pub const MAX_M: u32 = 12;
/// Above this degree only a sample of unit vectors is run and the full
/// matrix identity is left to those columns.
pub const EXHAUSTIVE_M: u32 = 8;
const SAMPLED_UNITS: usize = 32;
const REMAINDER_TRIALS: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Pass,
    Skipped,
    Fail(String),
}

impl Check {
    fn from(r: Result<(), String>) -> Check {
        r.map_or_else(Check::Fail, |()| Check::Pass)
    }

    fn label(&self) -> &'static str {
        match self {
            Check::Pass => "ok",
            Check::Skipped => "-",
            Check::Fail(_) => "FAIL",
        }
    }

    fn failed(&self) -> bool {
        matches!(self, Check::Fail(_))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyRow {
    pub m: u32,
    pub n: usize,
    pub algorithm: Algorithm,
    pub oracle_passed: usize,
    pub oracle_total: usize,
    pub identity: Check,
    pub structure: Check,
}

impl VerifyRow {
    pub fn passed(&self) -> bool {
        self.oracle_passed == self.oracle_total && !self.identity.failed() && !self.structure.failed()
    }
}

pub fn run(args: &VerifyArgs, out: &mut dyn Write) -> Result<bool, UsageError> {
    let contexts = args.common.contexts(MIN_M, MAX_M, "verify")?;
    let algos = &args.common.algo.0;
    let rows: Vec<VerifyRow> =
        contexts.par_iter().map(|ctx| verify_degree(ctx, algos, args.trials, args.seed)).flatten().collect();
    report(&rows, args, out).map_err(|e| UsageError(format!("writing report: {e}")))?;
    Ok(rows.iter().all(VerifyRow::passed))
}

fn report(rows: &[VerifyRow], args: &VerifyArgs, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "gfft verify: seed {}, {} random trials per (m, algorithm)", args.seed, args.trials)?;
    writeln!(out, "{:>3} {:>5}  {:<11} {:>11}  {:<9} {:<9} result", "m", "n", "algorithm", "oracle", "identity", "structure")?;
    for r in rows {
        writeln!(
            out,
            "{:>3} {:>5}  {:<11} {:>11}  {:<9} {:<9} {}",
            r.m,
            r.n,
            r.algorithm.tag(),
            format!("{}/{}", r.oracle_passed, r.oracle_total),
            r.identity.label(),
            r.structure.label(),
            if r.passed() { "PASS" } else { "FAIL" }
        )?;
    }
    for r in rows {
        for c in [&r.identity, &r.structure] {
            if let Check::Fail(why) = c {
                writeln!(out, "m = {} {}: {why}", r.m, r.algorithm)?;
            }
        }
    }
    let failed = rows.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        writeln!(out, "all {} rows PASS", rows.len())
    } else {
        writeln!(out, "{failed} of {} rows FAIL", rows.len())
    }
}

fn random_vec(rng: &mut ChaCha8Rng, ctx: &FieldContext) -> Vec<Element> {
    (0..ctx.n()).map(|_| Element::new(rng.random_range(0..ctx.order() as u32) as u16)).collect()
}

/// All rows for one degree, sharing the oracle evaluations across algorithms.
pub fn verify_degree(ctx: &FieldContext, algos: &[Algorithm], trials: usize, seed: u64) -> Vec<VerifyRow> {
    let n = ctx.n();
    let m = ctx.m();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(m as u64);

    let mut inputs: Vec<Vec<Element>> = (0..trials).map(|_| random_vec(&mut rng, ctx)).collect();
    let units: Vec<usize> = if m <= EXHAUSTIVE_M {
        (0..n).collect()
    } else {
        let mut u: Vec<usize> = (0..SAMPLED_UNITS).map(|_| rng.random_range(0..n)).collect();
        u.sort_unstable();
        u.dedup();
        u
    };
    inputs.extend(units.iter().map(|&j| {
        let mut v = vec![Element::ZERO; n];
        v[j] = Element::ONE;
        v
    }));
    let expected: Vec<Vec<Element>> = inputs.iter().map(|f| naive_dft(f, ctx, None).expect("length n")).collect();
    let w = (m <= EXHAUSTIVE_M).then(|| fourier_matrix(ctx));

    algos
        .iter()
        .map(|&algorithm| {
            let plan = match Plan::build(algorithm, ctx) {
                Ok(p) => p,
                Err(e) => {
                    let fail = Check::Fail(format!("plan construction: {e}"));
                    return VerifyRow {
                        m,
                        n,
                        algorithm,
                        oracle_passed: 0,
                        oracle_total: inputs.len(),
                        identity: fail.clone(),
                        structure: fail,
                    };
                }
            };
            let methods = [BinaryMethod::Naive, BinaryMethod::FourRussians(None)];
            let oracle_passed = inputs
                .iter()
                .zip(&expected)
                .enumerate()
                .filter(|(i, (f, want))| {
                    let opts = ApplyOptions { binary: methods[i % 2], ..Default::default() };
                    plan.apply(f, &opts).is_ok_and(|got| got.values == **want)
                })
                .count();
            let identity = match &w {
                Some(w) => Check::from(if plan.materialize() == *w {
                    Ok(())
                } else {
                    Err("materialized plan differs from W".into())
                }),
                None => Check::Skipped,
            };
            let structure = Check::from(match &plan {
                Plan::Goertzel(p) => remainder_property(p, &inputs[..trials.min(REMAINDER_TRIALS)]),
                Plan::Blahut(p) => coordinate_property(p.factored()),
                Plan::Factored(p) => coordinate_property(p).and_then(|()| circulant_property(p)),
            });
            VerifyRow { m, n, algorithm, oracle_passed, oracle_total: inputs.len(), identity, structure }
        })
        .collect()
}

/// Each remainder has fewer coefficients than its coset has points and agrees
/// with `f` on them.
fn remainder_property(plan: &GoertzelPlan, inputs: &[Vec<Element>]) -> Result<(), String> {
    let ctx = plan.ctx();
    for f in inputs {
        let rs = plan.remainders(f).map_err(|e| e.to_string())?;
        for (k, coset) in plan.cosets().iter().enumerate() {
            if rs[k].len() > coset.len() {
                return Err(format!("remainder {k} too long"));
            }
            for &i in coset.elements() {
                let x = ctx.element_of_log(i as i64);
                if poly_eval(&rs[k], x, ctx, None) != poly_eval(f, x, ctx, None) {
                    return Err(format!("remainder {k} disagrees at a^{i}"));
                }
            }
        }
    }
    Ok(())
}

/// Every row block of `A_e` expands `α^{i s}` in the evaluation points of `D_e`.
fn coordinate_property(plan: &FactoredTransform) -> Result<(), String> {
    let ctx = plan.ctx();
    let n = ctx.n();
    let a = plan.binary();
    for (k, coset) in plan.cosets().iter().enumerate() {
        let off = plan.block_offsets()[k];
        let block = &plan.blocks()[k];
        let points: Vec<Element> = (0..coset.len()).map(|t| block.get(t, 0)).collect();
        for (r, &i) in plan.out_perm().iter().enumerate() {
            let mut acc = Element::ZERO;
            for (t, &y) in points.iter().enumerate() {
                if a.get(r, off + t) {
                    acc = ctx.add(acc, y);
                }
            }
            if acc != ctx.element_of_log(((i * coset.representative()) % n) as i64) {
                return Err(format!("row {r}, coset {k}: coordinates do not reproduce a^(i s)"));
            }
        }
    }
    Ok(())
}

fn circulant_property(plan: &FactoredTransform) -> Result<(), String> {
    match plan.algorithm() {
        Algorithm::Tf2003 if !plan.blocks_are_basis_circulants() => Err("D_e block is not a basis circulant".into()),
        Algorithm::Fed2006A | Algorithm::Fed2006B => match plan.circulant_violations() {
            Some(v) if v.is_empty() => Ok(()),
            Some(v) => Err(format!("{} coset-pair blocks of A_e are not circulant", v.len())),
            None => Err("output not grouped by cosets".into()),
        },
        _ => Ok(()),
    }
}
