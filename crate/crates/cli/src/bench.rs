use std::io::{self, Read, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use gfft_core::algorithms::{naive_binary_adds, Algorithm, ApplyOptions, BinaryMethod, Plan};
use gfft_core::binmat::FourRussiansPlan;
use gfft_core::complexity::{add_bound, mult_bound};
use gfft_core::structure::cyclotomic_cosets;
use gfft_core::{CountPolicy, Element, FieldContext};

use crate::opts::{BenchArgs, BenchFormat, UsageError};

pub const MIN_M: u32 = 2;
pub const MAX_M: u32 = 16;
/// Largest degree at which plans are built and executed; above it the counts
/// come from the coset sizes, streamed row weights and the Four Russians cost
/// formula, all of which equal the executed counts where both are available.
pub const EXECUTED_M: u32 = 12;

/// One CSV row. Field order is the column order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub algo: String,
    pub m: u32,
    pub n: u64,
    pub stage1_mults: u64,
    pub stage1_adds: u64,
    pub stage2_adds_naive: u64,
    pub stage2_adds_4r: u64,
    /// `n log₂(n + 1)`.
    pub bound_nlogn: u64,
    /// `2n²/log₂ n` rounded up; it is never an integer, so `adds < bound`
    /// holds for the rounded value exactly when it holds for the real one.
    pub bound_2n2logn: u64,
    pub ok_mults: bool,
    pub ok_adds: bool,
}

impl BenchRecord {
    pub fn new(
        algorithm: Algorithm,
        m: u32,
        stage1_mults: u64,
        stage1_adds: u64,
        stage2_adds_naive: u64,
        stage2_adds_4r: u64,
    ) -> BenchRecord {
        let n = (1usize << m) - 1;
        let bound_nlogn = mult_bound(n);
        let bound_2n2logn = add_bound(n).ceil() as u64;
        BenchRecord {
            algo: algorithm.tag().to_string(),
            m,
            n: n as u64,
            stage1_mults,
            stage1_adds,
            stage2_adds_naive,
            stage2_adds_4r,
            bound_nlogn,
            bound_2n2logn,
            ok_mults: stage1_mults <= bound_nlogn,
            ok_adds: stage2_adds_4r < bound_2n2logn,
        }
    }
}

pub const CSV_HEADER: &str = "algo,m,n,stage1_mults,stage1_adds,stage2_adds_naive,stage2_adds_4r,bound_nlogn,bound_2n2logn,ok_mults,ok_adds";

pub fn write_csv(records: &[BenchRecord], out: impl Write) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    // An empty table still gets its header.
    if records.is_empty() {
        w.write_record(CSV_HEADER.split(','))?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv(input: impl Read) -> csv::Result<Vec<BenchRecord>> {
    csv::Reader::from_reader(input).deserialize().collect()
}

pub fn write_text(records: &[BenchRecord], out: &mut dyn Write) -> io::Result<()> {
    writeln!(
        out,
        "{:<11} {:>2} {:>6} {:>12} {:>12} {:>14} {:>14} {:>10} {:>14}  mults adds",
        "algo", "m", "n", "stage1_mult", "stage1_add", "stage2_naive", "stage2_4r", "n log n", "2n^2/log n"
    )?;
    for r in records {
        writeln!(
            out,
            "{:<11} {:>2} {:>6} {:>12} {:>12} {:>14} {:>14} {:>10} {:>14}  {:<5} {}",
            r.algo,
            r.m,
            r.n,
            r.stage1_mults,
            r.stage1_adds,
            r.stage2_adds_naive,
            r.stage2_adds_4r,
            r.bound_nlogn,
            r.bound_2n2logn,
            if r.ok_mults { "ok" } else { "over" },
            if r.ok_adds { "ok" } else { "over" }
        )?;
    }
    Ok(())
}

/// Counts for one (degree, algorithm) pair.
pub fn measure(ctx: &FieldContext, algorithm: Algorithm, block: Option<usize>, seed: u64) -> Result<BenchRecord, String> {
    let n = ctx.n();
    let m = ctx.m();
    let fr = match block {
        Some(t) => FourRussiansPlan::new(n, t).map_err(|e| e.to_string())?,
        None => FourRussiansPlan::for_cols(n),
    };
    if m > EXECUTED_M {
        let cosets = cyclotomic_cosets(n).map_err(|e| e.to_string())?;
        let stage1 = algorithm.stage1_counts(&cosets);
        let naive = naive_binary_adds(algorithm, ctx).map_err(|e| e.to_string())?;
        return Ok(BenchRecord::new(algorithm, m, stage1.mults, stage1.adds, naive, fr.predicted_adds(n)));
    }
    let plan = Plan::build(algorithm, ctx).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(m as u64 * 8 + algorithm as u64);
    let f: Vec<Element> = (0..n).map(|_| Element::new(rng.random_range(0..ctx.order() as u32) as u16)).collect();
    let run = |binary| {
        plan.apply(&f, &ApplyOptions { binary, policy: CountPolicy::All }).map_err(|e| e.to_string())
    };
    let naive = run(BinaryMethod::Naive)?;
    let four = run(BinaryMethod::FourRussians(Some(fr.block())))?;
    Ok(BenchRecord::new(algorithm, m, plan.structural_mults(), naive.multiply.adds, naive.binary.adds, four.binary.adds))
}

pub fn run(args: &BenchArgs, out: &mut dyn Write) -> Result<Vec<BenchRecord>, UsageError> {
    let contexts = args.common.contexts(MIN_M, MAX_M, "bench")?;
    if let Some(t) = args.block_size {
        if !(1..=16).contains(&t) {
            return Err(UsageError(format!("--block-size {t} outside 1..=16")));
        }
    }
    let jobs: Vec<(&FieldContext, Algorithm)> =
        contexts.iter().flat_map(|c| args.common.algo.0.iter().map(move |&a| (c, a))).collect();
    let records = jobs
        .par_iter()
        .map(|&(ctx, a)| measure(ctx, a, args.block_size, args.seed))
        .collect::<Result<Vec<_>, _>>()
        .map_err(UsageError)?;
    let written = match args.format {
        BenchFormat::Csv => write_csv(&records, &mut *out).map_err(|e| e.to_string()),
        BenchFormat::Text => writeln!(out, "gfft bench: seed {}", args.seed)
            .and_then(|()| write_text(&records, out))
            .map_err(|e| e.to_string()),
    };
    written.map_err(|e| UsageError(format!("writing report: {e}")))?;
    Ok(records)
}
