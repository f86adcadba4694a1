// Exact factorial ratios, integrality scans and non-integrality witnesses.

use ratiocert::forms::{factorial_ratio, find_witness_adaptive, integrality_scan};
use ratiocert::report::rat_text;
use ratiocert::validate_system;

pub fn run_example() -> ratiocert::Result<()> {
    let binomial = validate_system(&[vec![2]], &[vec![1], vec![1]])?;
    for m in 0..6 {
        println!("(2m)!/(m!)^2 at m={m}: {}", rat_text(&factorial_ratio(&binomial, &[m])));
    }
    let scan = integrality_scan(&binomial, 8, false);
    println!("checked {} points, all integral: {}", scan.points_checked, scan.all_integral());

    // the inverse is not integral; E(1) = 1/2 is the first witness
    let inverse = validate_system(&[vec![1], vec![1]], &[vec![2]])?;
    let scan = integrality_scan(&inverse, 4, true);
    for w in &scan.witnesses {
        println!("m={:?}: {}", w.m, rat_text(&w.value));
    }

    // (5x)! x! / ((2x)! (4x)!) is 5/2 at x = 1
    let chebyshev_like = validate_system(&[vec![5], vec![1]], &[vec![2], vec![4]])?;
    let (bound, witness) = find_witness_adaptive(&chebyshev_like, 2, 64);
    let w = witness.expect("non-integral");
    println!("searched up to {bound}: E({:?}) = {}", w.m, rat_text(&w.value));
    Ok(())
}

fn main() -> ratiocert::Result<()> {
    run_example()
}
