#![no_main]

use gecol::instance::InstanceJson;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(ij) = serde_json::from_slice::<InstanceJson>(data) else {
        return;
    };
    if ij.n > 64 || ij.orientation.len() > 256 {
        return;
    }
    if let Ok((graph, fa, la)) = ij.build() {
        // accepted instances must survive a serialization round trip
        let again = InstanceJson::from_parts(&graph, &fa, la.as_ref());
        let (g2, fa2, la2) = again.build().expect("rebuilt instance stays valid");
        assert_eq!(graph, g2);
        assert_eq!(fa.values(), fa2.values());
        assert_eq!(la.is_some(), la2.is_some());
    }
});
