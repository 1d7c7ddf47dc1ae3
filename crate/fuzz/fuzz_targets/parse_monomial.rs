#![no_main]

use libfuzzer_sys::fuzz_target;

use d4span::monomial::Monomial;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(m) = text.parse::<Monomial>() else {
        return;
    };

    // Canonical form: strictly ascending runs with positive multiplicities.
    for window in m.runs().windows(2) {
        assert!(window[0].0 < window[1].0);
    }
    assert!(m.runs().iter().all(|&(_, mult)| mult > 0));

    // The formatter emits the canonical grammar; reparsing is the identity.
    let formatted = m.to_string();
    let reparsed: Monomial = formatted.parse().expect("canonical form must parse");
    assert_eq!(reparsed, m);
    assert_eq!(reparsed.to_string(), formatted);

    assert_eq!(m.cmp(&m), std::cmp::Ordering::Equal);
    assert_eq!(m.multiply(&Monomial::one()), m);
});
