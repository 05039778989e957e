#![no_main]

use libfuzzer_sys::fuzz_target;
use skewmf::Partition;

// Conjugation allocates one slot per column.
const MAX_PART: usize = 1 << 16;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = text.parse::<Partition>() {
        let back: Partition = p.to_string().parse().expect("display output parses");
        assert_eq!(back, p);
        if p.first() <= MAX_PART {
            assert_eq!(p.conjugate().conjugate(), p);
        }
    }
});
