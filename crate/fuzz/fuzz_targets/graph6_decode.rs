#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.len() > 1 << 16 {
        return;
    }
    if let Ok(g) = gecol::graph6::decode(text) {
        // decoded graphs must re-encode to something that decodes back equal
        let encoded = gecol::graph6::encode(&g).expect("decoded graph re-encodes");
        let back = gecol::graph6::decode(&encoded).expect("round trip decodes");
        assert_eq!(g, back);
    }
});
