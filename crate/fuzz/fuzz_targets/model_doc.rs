#![no_main]

use gyrokit::models::io::raw_table_load;
use gyrokit::models::{load_model, table_emit, table_load, Model};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    let _ = raw_table_load(data);
    if let Ok(Model::Cayley(g)) = load_model(data) {
        let back = table_load(&table_emit(&g)).expect("emitted table must load");
        assert_eq!(back.table(), g.table());
    }
});
