#![no_main]

use libfuzzer_sys::fuzz_target;

use d4span::limits::SemiInfiniteMonomial;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = serde_json::from_slice::<SemiInfiniteMonomial>(data) else {
        return;
    };

    // Serialization round-trip through the documented wire form.
    let json = serde_json::to_string(&s).expect("serialize");
    let back: SemiInfiniteMonomial = serde_json::from_str(&json).expect("roundtrip");
    assert_eq!(back, s);

    // Exercise the tail machinery where the degree arithmetic stays in range.
    let small = s.tail_index.unsigned_abs() < 1 << 40
        && s.head
            .runs()
            .iter()
            .all(|(v, _)| v.degree.unsigned_abs() < 1 << 40)
        && s.weight.multiplicities().iter().all(|&k| k < 1 << 10);
    if small {
        assert_eq!(s.truncate(0), s.head);
        let d0 = s.stable_depth();
        let _ = s.truncate(d0.min(8));
        if d0 <= 8 {
            let _ = s.satisfies_dc();
        }
    }
});
