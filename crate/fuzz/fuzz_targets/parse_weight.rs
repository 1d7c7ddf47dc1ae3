#![no_main]

use libfuzzer_sys::fuzz_target;

use d4span::conditions::HighestWeight;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(weight) = text.parse::<HighestWeight>() else {
        return;
    };

    let roundtrip: HighestWeight = weight.to_string().parse().expect("display must parse");
    assert_eq!(roundtrip, weight);

    let level = weight.level();
    assert!(level as u64 >= weight.multiplicities().iter().copied().max().unwrap() as u64);
});
