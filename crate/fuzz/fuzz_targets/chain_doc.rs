#![no_main]

use gyrokit::models::fixtures;
use gyrokit::subgyro::io::parse_chain_doc;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    let Ok(doc) = parse_chain_doc(data) else { return };
    if doc.is_radial() {
        let _ = doc.radial_chain();
    } else {
        let _ = doc.finite_chain(&fixtures::Z8.load());
    }
});
