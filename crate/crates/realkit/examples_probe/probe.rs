use realkit::atlas::mod_without_prf_witnesses;
use realkit::frameworks::FormalismKind;
use realkit::interp::Vocabulary;

fn main() {
    for n in 1..=4usize {
        let v = Vocabulary::lettered(n).unwrap();
        let t0 = std::time::Instant::now();
        let witnesses = mod_without_prf_witnesses(FormalismKind::Af, &v, n).unwrap();
        println!(
            "AF |A|={n}: {} witnesses in {:?}: {}",
            witnesses.len(),
            t0.elapsed(),
            witnesses.iter().take(4).map(|w| w.to_string()).collect::<Vec<_>>().join(" ")
        );
    }
}
