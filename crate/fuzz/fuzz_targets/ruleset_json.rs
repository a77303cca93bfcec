#![no_main]

use gecol::discharging::{apply_rules, ChargeSystem};
use gecol::embedding::cube_embedding;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(sys) = serde_json::from_slice::<ChargeSystem>(data) else {
        return;
    };
    if sys.rules.len() > 64 {
        return;
    }
    // parsed rule sets must round-trip and, where applicable, conserve charge
    let text = serde_json::to_string(&sys).expect("rule set serializes");
    let back: ChargeSystem = serde_json::from_str(&text).expect("round trip parses");
    assert_eq!(back, sys);

    if sys.m > 0 && sys.m < 1 << 16 && sys.n > 2 * sys.m && sys.n < 1 << 16 {
        let amounts_ok = sys.rules.iter().all(|r| match &r.amount {
            gecol::discharging::Amount::Exact { den, num } => {
                *den != 0 && num.unsigned_abs() < 1 << 20 && den.unsigned_abs() < 1 << 20
            }
            gecol::discharging::Amount::Expr { .. } => true,
        });
        if amounts_ok {
            let pg = cube_embedding();
            if let Ok(cm) = apply_rules(&pg, &sys, Some(3)) {
                assert_eq!(cm.total_before(), cm.total_after());
            }
        }
    }
});
