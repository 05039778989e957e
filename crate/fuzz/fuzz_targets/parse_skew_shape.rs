#![no_main]

use libfuzzer_sys::fuzz_target;
use skewmf::SkewPartition;

// Column statistics allocate one slot per column.
const MAX_PART: usize = 1 << 16;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(s) = text.parse::<SkewPartition>() {
        let back: SkewPartition = s.to_string().parse().expect("display output parses");
        assert_eq!(back, s);
        if s.num_cols() <= MAX_PART {
            assert_eq!(s.column_sizes().iter().sum::<usize>(), s.size());
        }
    }
});
