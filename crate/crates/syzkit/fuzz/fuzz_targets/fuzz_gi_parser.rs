#![no_main]

use libfuzzer_sys::fuzz_target;
use syzkit::gi::{parse_gi, write_gi};

fuzz_target!(|data: &[u8]| {
    let Ok(input) = std::str::from_utf8(data) else { return };
    // the .gi reader must be total: accept or reject, never panic
    if let Ok(file) = parse_gi(input) {
        if let Ok(ideal) = file.into_ideal() {
            // round trip through the writer
            let text = write_gi(&ideal, None);
            let again = parse_gi(&text).expect("written file re-parses");
            let again = again.into_ideal().expect("written file is parameter-free");
            assert_eq!(ideal.generators(), again.generators());
        }
    }
});
