#![no_main]

use gyrokit::sets::parse_index_set;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&order, rest)) = data.split_first() else { return };
    let order = usize::from(order % 130);
    let text = String::from_utf8_lossy(rest);
    if let Ok(s) = parse_index_set(&text, order) {
        assert_eq!(parse_index_set(&s.to_string(), order).unwrap(), s);
    }
});
