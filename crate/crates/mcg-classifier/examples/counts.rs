use mcg_classifier::{enumerate_minimal_triples, enumerate_templates, PairType};

fn main() {
    for t in [PairType::I, PairType::II, PairType::III, PairType::IV] {
        let nt = if t == PairType::I {
            0
        } else {
            enumerate_templates(t).len()
        };
        let mins = enumerate_minimal_triples(t);
        println!("{t}: templates {nt} minimal configurations {}", mins.len());
    }
}
