// Truncated power series F, G and the mirror maps exp(G/F), with
// integrality reports.

use ratiocert::series::{all_form_indices, integrality_report, mirror_map, series_f, series_g_c};
use ratiocert::validate_system;

pub fn run_example() -> ratiocert::Result<()> {
    let sys = validate_system(&[vec![2]], &[vec![1], vec![1]])?;
    print!("F =\n{}", series_f(&sys, 4));
    print!("G_C1 =\n{}", series_g_c(&sys, 1, 4)?);
    for which in all_form_indices(&sys) {
        let (q, report) = mirror_map(&sys, which, 8)?;
        let coeffs: Vec<String> = q.terms().map(|(_, c)| c.to_string()).collect();
        println!("exp(G_{which}/F): {} integral={}", coeffs.join(" "), report.all_integral);
    }

    // two variables, Delaygue's criterion holds, so every map is integral
    let two = validate_system(&[vec![1, 1]], &[vec![1, 0], vec![0, 1]])?;
    for which in all_form_indices(&two) {
        let (q, report) = mirror_map(&two, which, 6)?;
        println!("{which}: {} terms, integral={}", q.len(), report.all_integral);
    }

    // Landau holds but Φ drops to 0 on D: look for a denominator
    let sys = validate_system(&[vec![30], vec![1]], &[vec![15], vec![10], vec![6]])?;
    let (_, report) = mirror_map(&sys, "C1".parse().unwrap(), 2)?;
    match report.first_witness() {
        Some(w) => println!("first non-integral coefficient at {:?}: {}", w.m, w.coefficient),
        None => println!("no denominator up to degree {}", report.cap),
    }
    let f = integrality_report(&series_f(&sys, 2), Some(2))?;
    println!("F is 2-integral through degree 2: {}", f.all_integral);
    Ok(())
}

fn main() -> ratiocert::Result<()> {
    run_example()
}
