#![no_main]

use libfuzzer_sys::fuzz_target;
use syzkit::parse::{parse_parametric, parse_poly};
use syzkit::poly::RingContext;
use syzkit::scalar::FieldSpec;

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else { return };
    // parsing must never panic: every input is either a polynomial or a
    // structured error
    let ctx = RingContext::new(4, FieldSpec::Rationals);
    if let Ok(p) = parse_poly(input, ctx) {
        // printed form must re-parse to the same polynomial
        let again = parse_poly(&p.to_string(), ctx).expect("printed poly re-parses");
        assert_eq!(again, p);
    }
    let _ = parse_parametric(input, ctx);
    let ctx_p = RingContext::new(6, FieldSpec::prime_field(1_000_003).unwrap());
    let _ = parse_poly(input, ctx_p);
});
