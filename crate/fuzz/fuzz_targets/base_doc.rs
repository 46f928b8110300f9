#![no_main]

use gyrokit::models::fixtures;
use gyrokit::subgyro::io::parse_base_doc;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(doc) = parse_base_doc(data) {
        let _ = doc.family(&fixtures::G8.load());
    }
});
