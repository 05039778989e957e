#![no_main]

use libfuzzer_sys::fuzz_target;
use skewmf::{classify, min_nonfree_vars, SkewPartition};

// Parts above this make the tableau search too slow for fuzzing.
const MAX_PART: usize = 12;
const MAX_ROWS: usize = 12;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let Ok(s) = text.parse::<SkewPartition>() else {
        return;
    };
    if s.num_rows() > MAX_ROWS || s.num_cols() > MAX_PART {
        return;
    }
    let n = usize::from(n % 16);
    let red = s.full_reduction(n);
    let out = &red.shape;
    assert!(
        out.is_empty()
            || (out.is_basic() && out.is_nsharp(red.vars) && out.is_tight() && out.is_ordinary())
    );
    if let Ok(verdict) = classify(&s, n) {
        assert_eq!(verdict.reduced_shape, *out);
    }
    if s.is_basic() {
        let min = s.column_sizes().into_iter().min().unwrap_or(0);
        for k in 0..=min {
            s.top_strip(k).expect("strip within the shortest column");
        }
    }
    let _ = s.column_reversal();
    let _ = min_nonfree_vars(out);
});
