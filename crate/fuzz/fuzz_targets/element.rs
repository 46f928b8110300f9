#![no_main]

use gyrokit::models::fixtures;
use gyrokit::models::io::{parse_complex, parse_finite_element, parse_vec3};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    let _ = parse_complex(data);
    let _ = parse_vec3(data);
    let _ = parse_finite_element(data, &fixtures::S3.load());
});
