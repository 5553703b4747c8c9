use gfft::bench::{measure, read_csv, write_csv, BenchRecord, CSV_HEADER};
use gfft_core::algorithms::Algorithm;
use gfft_core::FieldContext;
use proptest::prelude::*;

fn record() -> impl Strategy<Value = BenchRecord> {
    (0usize..6, 2u32..=16, any::<u32>(), any::<u32>(), any::<u64>(), any::<u32>()).prop_map(
        |(a, m, s1m, s1a, naive, fr)| {
            BenchRecord::new(Algorithm::ALL[a], m, s1m as u64, s1a as u64, naive, fr as u64)
        },
    )
}

proptest! {
    #[test]
    fn parse_of_emit_is_identity(records in proptest::collection::vec(record(), 0..20)) {
        let mut buf = Vec::new();
        write_csv(&records, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        prop_assert_eq!(text.lines().next(), Some(CSV_HEADER));
        prop_assert_eq!(read_csv(buf.as_slice()).unwrap(), records);
    }

    #[test]
    fn flags_follow_numbers(r in record()) {
        prop_assert_eq!(r.ok_mults, r.stage1_mults <= r.bound_nlogn);
        prop_assert_eq!(r.ok_adds, r.stage2_adds_4r < r.bound_2n2logn);
        prop_assert_eq!(r.n, (1u64 << r.m) - 1);
    }
}

#[test]
fn measured_records_round_trip() {
    let ctx = FieldContext::with_degree(5).unwrap();
    let records: Vec<BenchRecord> = Algorithm::ALL.iter().map(|&a| measure(&ctx, a, None, 3).unwrap()).collect();
    let mut buf = Vec::new();
    write_csv(&records, &mut buf).unwrap();
    assert_eq!(read_csv(buf.as_slice()).unwrap(), records);
}

/// Above the executed range the counts come from formulas and streamed row
/// weights; at the boundary both routes must agree.
#[test]
fn streamed_counts_agree_with_execution() {
    for m in [9u32, 10] {
        let ctx = FieldContext::with_degree(m).unwrap();
        for a in Algorithm::ALL {
            let executed = measure(&ctx, a, None, 1).unwrap();
            let cosets = gfft_core::structure::cyclotomic_cosets(ctx.n()).unwrap();
            let s1 = a.stage1_counts(&cosets);
            let naive = gfft_core::algorithms::naive_binary_adds(a, &ctx).unwrap();
            let fr = gfft_core::binmat::FourRussiansPlan::for_cols(ctx.n()).predicted_adds(ctx.n());
            assert_eq!(executed, BenchRecord::new(a, m, s1.mults, s1.adds, naive, fr), "{a} m={m}");
        }
    }
}
