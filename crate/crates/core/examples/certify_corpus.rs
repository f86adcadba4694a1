// Generate a seeded corpus and certify every system. The worker pool honours
// RATIOCERT_THREADS.
//
// cargo run --release --example certify_corpus -- 200

use ratiocert::cli::certify_all;
use ratiocert::{generate_corpus, CertifyOptions, CorpusParams};

pub fn run_example_with(count: usize) -> ratiocert::Result<()> {
    let specs = generate_corpus(&CorpusParams { count, ..Default::default() });
    let opts = CertifyOptions { cap: 6, pbox: 4, ..Default::default() };
    let (mut landau, mut delaygue, mut disagreements) = (0, 0, 0);
    for rep in certify_all(&specs, &opts) {
        let rep = rep?;
        landau += rep.landau.holds as usize;
        delaygue += rep.delaygue.holds as usize;
        if !rep.all_agree {
            disagreements += 1;
            println!("{:?} disagrees: {:?}", rep.label, rep.cross_checks);
        }
    }
    println!("{count} systems: {landau} Landau, {delaygue} Delaygue, {disagreements} disagreements");
    Ok(())
}

pub fn run_example() -> ratiocert::Result<()> {
    run_example_with(24)
}

fn main() -> ratiocert::Result<()> {
    let count = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(24);
    run_example_with(count)
}
