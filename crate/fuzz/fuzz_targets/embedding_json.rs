#![no_main]

use gecol::embedding::EmbeddingJson;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(ej) = serde_json::from_slice::<EmbeddingJson>(data) else {
        return;
    };
    if ej.n > 256 || ej.edges.len() > 1024 {
        return;
    }
    if let Ok(pg) = ej.build() {
        // accepted embeddings must satisfy the handshake identities
        let g = pg.graph();
        let face_degree_sum: usize = pg.faces().iter().map(|f| f.degree()).sum();
        assert_eq!(face_degree_sum, 2 * g.edge_count());
        for v in 0..g.vertex_count() {
            let mult_sum: usize = (0..pg.face_count()).map(|f| pg.multiplicity(v, f)).sum();
            assert_eq!(mult_sum, g.degree(v));
        }
    }
});
